//! The mapping spaces `Q(i,j)` of `𝔠[J_{i,j}]`, the bicosimplicial object
//! they form, the cosimplicial object `W_n = |Cut^n|_Q`, the maps σ, τ, ρ,
//! and the coherent nerve (in [`nerve`]).
//!
//! A subset of `[i] ∗ [j]` is a bitmask on the positions `0..=i+1+j`; the
//! left block is `0..=i` and the right block `i+1..=i+1+j`.

mod nerve;

use std::collections::HashMap;

pub use nerve::*;

use crate::bisset::{cut, cut_map, dec, BiCap, BiSimplicialSet};
use crate::error::{Error, Result};
use crate::monotone::Monotone;
use crate::realize::{
    realize_graded, realize_shape_map, BiCosimplicialSSet, CosimplicialSSet,
    CosimplicialTransformation, Face, Realization,
};
use crate::sset::constructions::{
    coproduct, join_map, join_with_layout, point, product, pushout, simplex_index,
    simplex_monotone, standard_simplex, JoinSimplex,
};
use crate::sset::{PointedDirected, SimplicialMap, SimplicialSet};

/// A chain `S_0 ⊆ … ⊆ S_k` of subsets.
pub type Chain = Vec<u32>;

fn left_mask(i: usize) -> u32 {
    (1u32 << (i + 1)) - 1
}

fn full_mask(i: usize, j: usize) -> u32 {
    ((1u64 << (i + j + 2)) - 1) as u32
}

fn right_mask(i: usize, j: usize) -> u32 {
    full_mask(i, j) & !left_mask(i)
}

/// Positions `a..=b`.
pub fn interval(a: usize, b: usize) -> u32 {
    (((1u64 << (b + 1)) - 1) & !((1u64 << a) - 1)) as u32
}

fn top_bit(s: u32) -> usize {
    31 - s.leading_zeros() as usize
}

fn low_bit(s: u32) -> usize {
    s.trailing_zeros() as usize
}

/// Meets both blocks of `[i] ∗ [j]`.
pub fn is_admissible(i: usize, j: usize, s: u32) -> bool {
    s & left_mask(i) != 0 && s & right_mask(i, j) != 0
}

/// The anchors `(i₀, j₀)` of a chain: the last left and first right element
/// of `S_0`.
pub fn anchors(i: usize, j: usize, chain: &[u32]) -> (usize, usize) {
    let s0 = chain[0];
    (top_bit(s0 & left_mask(i)), low_bit(s0 & right_mask(i, j)))
}

/// Canonical representative of the class of an admissible chain: every
/// member cut down to `[i₀, j₀]`.
pub fn canonical(i: usize, j: usize, chain: &[u32]) -> Chain {
    let (a, b) = anchors(i, j, chain);
    let iv = interval(a, b);
    chain.iter().map(|s| s & iv).collect()
}

pub fn subset_label(i: usize, s: u32) -> String {
    let mut out = String::new();
    let bits: Vec<usize> = (0..32).filter(|p| s >> p & 1 == 1).collect();
    for &p in bits.iter().filter(|&&p| p <= i) {
        out.push_str(&p.to_string());
    }
    out.push('|');
    for &p in bits.iter().filter(|&&p| p > i) {
        out.push_str(&(p - i - 1).to_string());
    }
    out
}

pub fn chain_label(i: usize, chain: &[u32]) -> String {
    chain
        .iter()
        .map(|&s| subset_label(i, s))
        .collect::<Vec<_>>()
        .join(",")
}

/// All chains of admissible subsets of length `k + 1`, un-quotiented: each
/// position enters at some step or never.
pub fn admissible_chains(i: usize, j: usize, k: usize) -> Vec<Chain> {
    let m = i + 1 + j;
    let choices = k + 2;
    let total = choices.pow((m + 1) as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut chain = vec![0u32; k + 1];
        for p in 0..=m {
            let t = c % choices;
            c /= choices;
            for s in chain.iter_mut().skip(t) {
                *s |= 1 << p;
            }
        }
        if is_admissible(i, j, chain[0]) {
            out.push(chain);
        }
    }
    out
}

/// `Q(i,j)` with its canonical chains.
#[derive(Clone, Debug)]
pub struct QModel {
    pub i: usize,
    pub j: usize,
    pub set: SimplicialSet,
    pub keys: Vec<Vec<Chain>>,
    pub index: Vec<HashMap<Chain, usize>>,
}

impl QModel {
    /// Id of the class of an arbitrary admissible chain.
    pub fn id(&self, chain: &[u32]) -> usize {
        self.index[chain.len() - 1][&canonical(self.i, self.j, chain)]
    }
}

fn canonical_chains(i: usize, j: usize, k: usize) -> Vec<Chain> {
    let m = i + 1 + j;
    let mut out = Vec::new();
    for a in 0..=i {
        for b in i + 1..=m {
            let interior: Vec<usize> = (a + 1..b).collect();
            let total = (k + 1).pow(interior.len() as u32);
            for code in 0..total {
                let mut c = code;
                let mut chain = vec![(1u32 << a) | (1u32 << b); k + 1];
                for &p in &interior {
                    // entry at step 1..=k, or k+1 for never
                    let t = c % (k + 1) + 1;
                    c /= k + 1;
                    for s in chain.iter_mut().skip(t) {
                        *s |= 1 << p;
                    }
                }
                out.push(chain);
            }
        }
    }
    out
}

/// `Q(i,j)`: chains of admissible subsets modulo agreement on a common
/// anchor interval, stored in canonical form.
pub fn q_model(i: usize, j: usize, cap: usize) -> QModel {
    let keys: Vec<Vec<Chain>> = (0..=cap).map(|k| canonical_chains(i, j, k)).collect();
    let labels = keys
        .iter()
        .map(|l| l.iter().map(|c| chain_label(i, c)).collect())
        .collect();
    let (set, index) = SimplicialSet::from_model(
        cap,
        keys.clone(),
        |_, c, t| {
            let mut d = c.clone();
            d.remove(t);
            canonical(i, j, &d)
        },
        |_, c, t| {
            let mut d = c.clone();
            d.insert(t, d[t]);
            d
        },
    )
    .expect("Q is closed under its operators");
    QModel {
        i,
        j,
        set: set.with_labels(labels),
        keys,
        index,
    }
}

pub fn q(i: usize, j: usize, cap: usize) -> SimplicialSet {
    q_model(i, j, cap).set
}

/// Direct image of a subset of `[i] ∗ [j]` under `φ ∗ ψ`.
pub fn image(phi: &Monotone, psi: &Monotone, s: u32) -> u32 {
    let i = phi.source();
    let ii = phi.target;
    let mut out = 0;
    for p in 0..32 {
        if s >> p & 1 == 1 {
            let q = if p <= i {
                phi.values[p]
            } else {
                ii + 1 + psi.values[p - i - 1]
            };
            out |= 1 << q;
        }
    }
    out
}

/// The bicosimplicial object `(i,j) ↦ Q(i,j)` for `i + j ≤ total`.
#[derive(Clone, Debug)]
pub struct QObject {
    pub coeff: BiCosimplicialSSet,
    models: HashMap<(usize, usize), QModel>,
}

impl QObject {
    pub fn model(&self, i: usize, j: usize) -> &QModel {
        &self.models[&(i, j)]
    }

    pub fn total(&self) -> usize {
        self.coeff.total()
    }

    pub fn cap(&self) -> usize {
        self.coeff.cap()
    }

    /// `Q(φ, ψ)` computed directly from the direct image.
    pub fn map(&self, phi: &Monotone, psi: &Monotone) -> SimplicialMap {
        q_structure_map(&self.models, phi, psi)
    }
}

fn q_structure_map(
    models: &HashMap<(usize, usize), QModel>,
    phi: &Monotone,
    psi: &Monotone,
) -> SimplicialMap {
    let src = &models[&(phi.source(), psi.source())];
    let tgt = &models[&(phi.target, psi.target)];
    SimplicialMap::new(
        src.keys
            .iter()
            .map(|lvl| {
                lvl.iter()
                    .map(|c| tgt.id(&c.iter().map(|&s| image(phi, psi, s)).collect::<Vec<_>>()))
                    .collect()
            })
            .collect(),
    )
}

pub fn q_coefficients(total: usize, cap: usize) -> QObject {
    let models: HashMap<(usize, usize), QModel> = (0..=total)
        .flat_map(|i| (0..=total - i).map(move |j| (i, j)))
        .map(|(i, j)| ((i, j), q_model(i, j, cap)))
        .collect();
    let coeff = BiCosimplicialSSet::from_functor(
        total,
        |i, j| models[&(i, j)].set.clone(),
        |phi, psi| q_structure_map(&models, phi, psi),
    )
    .expect("Q is bicosimplicial");
    QObject { coeff, models }
}

/// σ: `Q(i,j) → Δ^i ∗ Δ^j`, a vertex `S` going to `max(S ∩ [i])`.
pub fn sigma_q(model: &QModel) -> SimplicialMap {
    let (i, j) = (model.i, model.j);
    SimplicialMap::new(
        model
            .keys
            .iter()
            .map(|lvl| {
                lvl.iter()
                    .map(|c| {
                        let v = c.iter().map(|&s| top_bit(s & left_mask(i))).collect();
                        simplex_index(&Monotone::new(i + 1 + j, v))
                    })
                    .collect()
            })
            .collect(),
    )
}

/// Mirror image of a subset of `[i+1+j]`: position `p ↦ i+1+j − p`.
pub fn mirror(m: usize, s: u32) -> u32 {
    (s.reverse_bits() >> (31 - m)) & (((1u64 << (m + 1)) - 1) as u32)
}

/// τ: `Q(i,j) → Q(j,i)`, sending `k_l ↦ (i−k)_r` and `k_r ↦ (j−k)_l`.
pub fn tau(from: &QModel, to: &QModel) -> SimplicialMap {
    let m = from.i + 1 + from.j;
    SimplicialMap::new(
        from.keys
            .iter()
            .map(|lvl| {
                lvl.iter()
                    .map(|c| to.id(&c.iter().map(|&s| mirror(m, s)).collect::<Vec<_>>()))
                    .collect()
            })
            .collect(),
    )
}

/// `W_n = |Cut^n|_Q` for `n ≤ cocap`, with the realizations kept.
#[derive(Clone, Debug)]
pub struct WObject {
    pub q: QObject,
    pub coeff: CosimplicialSSet,
    pub cuts: Vec<BiSimplicialSet>,
    pub parts: Vec<Realization>,
}

impl WObject {
    pub fn cocap(&self) -> usize {
        self.coeff.cocap()
    }

    pub fn term(&self, n: usize) -> &SimplicialSet {
        self.coeff.term(n)
    }

    /// The cut `c: [i] ∗ [j] → [n]` of a shape simplex of `Cut^n`.
    fn cut_of(&self, n: usize, level: usize, s: usize) -> (usize, usize, Monotone) {
        let (i, j) = self.cuts[n].bidegree(level);
        (i, j, simplex_monotone(n, i + 1 + j, s))
    }

    /// Class of `(c, x)` with `c` a simplex of `Cut^n` and `x` a
    /// `k`-simplex of `Q` at its bidegree.
    pub fn class_of(
        &self,
        n: usize,
        c: &Monotone,
        i: usize,
        j: usize,
        k: usize,
        x: usize,
    ) -> usize {
        let level = self.cuts[n].level(i, j);
        self.parts[n].class_of(&self.q.coeff, level, simplex_index(c), k, x)
    }
}

fn bicap(cocap: usize) -> BiCap {
    (cocap.max(1), cocap.max(1))
}

pub fn w(cocap: usize, cap: usize) -> Result<WObject> {
    let q = q_coefficients(cocap, cap);
    let bc = bicap(cocap);
    let cuts: Vec<BiSimplicialSet> = (0..=cocap).map(|n| cut(n, bc)).collect();
    let parts = cuts
        .iter()
        .map(|c| realize_graded(c, &q.coeff))
        .collect::<Result<Vec<_>>>()?;
    let terms = parts.iter().map(|r| r.set.clone()).collect();
    let coeff = CosimplicialSSet::from_functor(terms, |theta| {
        let f = cut_map(theta, bc);
        realize_shape_map(
            &parts[theta.source()],
            &parts[theta.target],
            &f.components,
            &q.coeff,
        )
        .expect("Cut is natural")
    })?;
    Ok(WObject {
        q,
        coeff,
        cuts,
        parts,
    })
}

/// σ: `W → Δ`, `[(c, q)] ↦ c ∘ σ(q)`.
pub fn sigma_w(w: &WObject) -> Result<CosimplicialTransformation> {
    let cap = w.q.cap();
    let mut components = Vec::new();
    for n in 0..=w.cocap() {
        let target = standard_simplex(n, cap);
        let sig: HashMap<(usize, usize), SimplicialMap> = w.parts[n]
            .generators()
            .iter()
            .map(|&(_, _, d)| (d, sigma_q(w.q.model(d.0, d.1))))
            .collect();
        let m = w.parts[n].descend(&target, |l, s, d, k, x| {
            let (i, j, c) = w.cut_of(n, l, s);
            let v = simplex_monotone(i + 1 + j, k, sig[&d].apply(k, x));
            simplex_index(&c.compose(&v))
        })?;
        components.push(m);
    }
    let t = CosimplicialTransformation { components };
    t.validate(&w.coeff, &crate::realize::delta(w.cocap(), cap))?;
    Ok(t)
}

/// The comparisons `W_n → Q(n,0)` and `W_n → Q(0,n)` induced by restricting
/// a cut to its left or right block.
pub fn w_restrictions(
    w: &WObject,
) -> Result<(CosimplicialTransformation, CosimplicialTransformation)> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for n in 0..=w.cocap() {
        let mut cache: HashMap<(Monotone, Monotone), SimplicialMap> = HashMap::new();
        let mut restrict = |to_left: bool| -> Result<SimplicialMap> {
            let target = if to_left {
                w.q.coeff.term(n, 0)
            } else {
                w.q.coeff.term(0, n)
            };
            let pairs: Vec<(usize, usize, (Monotone, Monotone))> = w.parts[n]
                .generators()
                .iter()
                .map(|&(l, s, _)| {
                    let (i, j, c) = w.cut_of(n, l, s);
                    let key = if to_left {
                        (
                            Monotone::new(n, c.values[..=i].to_vec()),
                            Monotone::new(0, vec![0; j + 1]),
                        )
                    } else {
                        (
                            Monotone::new(0, vec![0; i + 1]),
                            Monotone::new(n, c.values[i + 1..].to_vec()),
                        )
                    };
                    (l, s, key)
                })
                .collect();
            for (_, _, key) in &pairs {
                if !cache.contains_key(key) {
                    cache.insert(key.clone(), w.q.coeff.apply(&key.0, &key.1));
                }
            }
            let lookup: HashMap<(usize, usize), &(Monotone, Monotone)> =
                pairs.iter().map(|(l, s, key)| ((*l, *s), key)).collect();
            w.parts[n].descend(target, |l, s, _, k, x| cache[lookup[&(l, s)]].apply(k, x))
        };
        left.push(restrict(true)?);
        right.push(restrict(false)?);
    }
    let (l, r) = (
        CosimplicialTransformation { components: left },
        CosimplicialTransformation { components: right },
    );
    l.validate(&w.coeff, &w.q.coeff.left_edge())?;
    r.validate(&w.coeff, &w.q.coeff.right_edge())?;
    Ok((l, r))
}

/// ρ: `W^rev → W`, `[(c, q)] ↦ [(n − c ∘ rev, τ q)]`.
pub fn rho(w: &WObject) -> Result<CosimplicialTransformation> {
    let mut taus: HashMap<(usize, usize), SimplicialMap> = HashMap::new();
    let mut components = Vec::new();
    for n in 0..=w.cocap() {
        for &(_, _, d) in w.parts[n].generators() {
            taus.entry(d)
                .or_insert_with(|| tau(w.q.model(d.0, d.1), w.q.model(d.1, d.0)));
        }
        let m = w.parts[n].descend(w.term(n), |l, s, d, k, x| {
            let (i, j, c) = w.cut_of(n, l, s);
            let flipped = Monotone::new(n, c.values.iter().rev().map(|&v| n - v).collect());
            w.class_of(n, &flipped, j, i, k, taus[&d].apply(k, x))
        })?;
        components.push(m);
    }
    let t = CosimplicialTransformation { components };
    t.validate(&w.coeff.rev(), &w.coeff)?;
    Ok(t)
}

/// `𝔠(K)(0,1) = |dec K|_Q` for a directed two-object `K`.
pub fn frak_c_directed(k: &PointedDirected, q: &QObject) -> Result<SimplicialSet> {
    if !k.is_directed() {
        return Err(Error::NotDirected(
            "𝔠 of a two-object simplicial set".into(),
        ));
    }
    let dim = k.carrier().dimension().unwrap_or(0);
    let d = dim.saturating_sub(1).max(1);
    if d > q.total() {
        return Err(Error::CapShortfall {
            what: "Q total degree".into(),
            needed: d,
            have: q.total(),
        });
    }
    let b = dec(k, (d, d))?;
    Ok(realize_graded(&b, &q.coeff)?.set)
}

/// Checks that contracting the cube `𝔠[Δ^{i+1+j}](0, i+1+j)` to its terminal
/// vertex descends to a map `Q(i,j) ∗ Δ^0 → Q(i,j)` that is the identity on
/// `Q(i,j)`.
pub fn nullhomotopy_check(i: usize, j: usize, cap: usize) -> Result<bool> {
    let m = i + 1 + j;
    let cube = cube_model(m, 0, m, cap)?;
    let qm = q_model(i, j, cap);
    let full = full_mask(i, j);
    let pi = SimplicialMap::new(
        cube.keys
            .iter()
            .map(|lvl| lvl.iter().map(|c| qm.id(c)).collect())
            .collect(),
    );
    pi.validate(&cube.set, &qm.set)?;
    let pt = point(cap);
    let (cone, lay) = join_with_layout(&cube.set, &pt)?;
    let h = SimplicialMap::new(
        (0..=cap)
            .map(|n| {
                (0..lay.count(n))
                    .map(|id| {
                        let chain: Chain = match lay.decode(n, id) {
                            JoinSimplex::Left(x) => cube.keys[n][x].clone(),
                            JoinSimplex::Right(_) => vec![full; n + 1],
                            JoinSimplex::Mixed(p, x, _) => {
                                let mut c = cube.keys[p][x].clone();
                                c.extend(std::iter::repeat_n(full, n - p));
                                c
                            }
                        };
                        cube.index[n][&chain]
                    })
                    .collect()
            })
            .collect(),
    );
    h.validate(&cone, &cube.set)?;
    let (qcone, qlay) = join_with_layout(&qm.set, &pt)?;
    let proj = join_map(
        &cube.set,
        &pt,
        &pi,
        &qm.set,
        &pt,
        &SimplicialMap::identity(&pt),
    )?;
    let Ok(hq) = crate::sset::constructions::descend(&proj, &qcone, &h.then(&pi)) else {
        return Ok(false);
    };
    if hq.validate(&qcone, &qm.set).is_err() {
        return Ok(false);
    }
    for n in 0..=cap {
        for x in 0..qm.set.count(n) {
            if hq.apply(n, qlay.id(n, JoinSimplex::Left(x))) != x {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The pushout square presenting `Q(i,j)`: the composites
/// `𝔠(l,m) × 𝔠(k,l) × 𝔠(0,k) → 𝔠(0,m)` for `k ≤ i < l` glued to their
/// middle factor. Returns whether the pushout is isomorphic to `Q(i,j)`.
pub fn pushout_presentation_check(i: usize, j: usize, cap: usize) -> Result<bool> {
    let m = i + 1 + j;
    let whole = cube_model(m, 0, m, cap)?;
    let mut triples = SimplicialSet::empty(cap);
    let mut middles = SimplicialSet::empty(cap);
    let mut f_comp: Vec<Vec<usize>> = vec![Vec::new(); cap + 1];
    let mut g_comp: Vec<Vec<usize>> = vec![Vec::new(); cap + 1];
    for k in 0..=i {
        for l in i + 1..=m {
            let (c0, c1, c2) = (
                cube_model(m, 0, k, cap)?,
                cube_model(m, k, l, cap)?,
                cube_model(m, l, m, cap)?,
            );
            let t = product(&product(&c2.set, &c1.set)?, &c0.set)?;
            let base = (0..=cap).map(|n| middles.count(n)).collect::<Vec<_>>();
            for n in 0..=cap {
                let (n0, n1) = (c0.set.count(n), c1.set.count(n));
                for id in 0..t.count(n) {
                    let (w0, rest) = (id % n0, id / n0);
                    let (w1, w2) = (rest % n1, rest / n1);
                    let chain: Chain = (0..=n)
                        .map(|r| c0.keys[n][w0][r] | c1.keys[n][w1][r] | c2.keys[n][w2][r])
                        .collect();
                    f_comp[n].push(whole.index[n][&chain]);
                    g_comp[n].push(base[n] + w1);
                }
            }
            triples = coproduct(&triples, &t)?.0;
            middles = coproduct(&middles, &c1.set)?.0;
        }
    }
    let f = SimplicialMap::new(f_comp);
    let g = SimplicialMap::new(g_comp);
    f.validate(&triples, &whole.set)?;
    g.validate(&triples, &middles)?;
    let (p, _, _) = pushout(&whole.set, &middles, &f, &g)?;
    Ok(p.is_isomorphic(&q(i, j, cap)).is_some())
}

/// The condition, read off a chain's first and last members, for its class
/// to lie in the image of both cofaces `a` and `b` of `Q(i,j)`.
pub fn face_intersection_condition(i: usize, a: Face, b: Face, s0: u32, sn: u32) -> bool {
    let meets = |lo: usize, hi: usize| lo <= hi && s0 & interval(lo, hi) != 0;
    let missing = |p: usize| sn >> p & 1 == 0;
    let pos = |f: Face| if f.dir == 0 { f.index } else { i + 1 + f.index };
    // whether S_0 already cuts the face's position away
    let cut = |f: Face| {
        if f.dir == 0 {
            meets(f.index + 1, i)
        } else {
            f.index > 0 && meets(i + 1, i + f.index)
        }
    };
    if a == b {
        return cut(a) || missing(pos(a));
    }
    match (a.dir, b.dir) {
        (0, 0) => {
            let (l, k) = (a.index.min(b.index), a.index.max(b.index));
            meets(k + 1, i) || (meets(l + 1, i) && missing(k)) || (missing(k) && missing(l))
        }
        (1, 1) => {
            let (l, k) = (a.index.min(b.index), a.index.max(b.index));
            (l > 0 && meets(i + 1, i + l))
                || (k > 0 && meets(i + 1, i + k) && missing(i + 1 + l))
                || (missing(i + 1 + k) && missing(i + 1 + l))
        }
        _ => {
            let (h, v) = if a.dir == 0 { (a, b) } else { (b, a) };
            let (k, l) = (h.index, v.index);
            let hk = meets(k + 1, i);
            let vl = l > 0 && meets(i + 1, i + l);
            (hk && vl)
                || (hk && missing(i + 1 + l))
                || (missing(k) && vl)
                || (missing(k) && missing(i + 1 + l))
        }
    }
}

/// Compares, chain by chain, the preimage in the admissible poset nerve of
/// the intersection of two face images of `Q(i,j)` with the condition list.
pub fn face_intersection_check(
    q: &QObject,
    i: usize,
    j: usize,
    a: Face,
    b: Face,
    max_level: usize,
) -> Result<bool> {
    let model = q.model(i, j);
    for f in [a, b] {
        let dim = if f.dir == 0 { i } else { j };
        if dim == 0 || f.index > dim {
            return Err(Error::input(format!("{f:?} is not a face at ({i},{j})")));
        }
    }
    let face_image = |f: Face, k: usize| -> Vec<bool> {
        let src = if f.dir == 0 { (i - 1, j) } else { (i, j - 1) };
        let phi = if f.dir == 0 {
            Monotone::coface(i, f.index)
        } else {
            Monotone::identity(i)
        };
        let psi = if f.dir == 1 {
            Monotone::coface(j, f.index)
        } else {
            Monotone::identity(j)
        };
        let mut hit = vec![false; model.set.count(k)];
        let map = q.map(&phi, &psi);
        for x in 0..q.model(src.0, src.1).set.count(k) {
            hit[map.apply(k, x)] = true;
        }
        hit
    };
    for k in 0..=max_level.min(q.cap()) {
        let (ha, hb) = (face_image(a, k), face_image(b, k));
        for c in admissible_chains(i, j, k) {
            let x = model.id(&c);
            if (ha[x] && hb[x]) != face_intersection_condition(i, a, b, c[0], c[k]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
