//! Left, right and middle mapping spaces of a simplicial set, the inclusions
//! of the one-sided ones into the middle one, and their identification with
//! `Sing` of the mapping complexes when the ambient is a coherent nerve.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::coherent::{
    coherent_nerve, cube_model, rho, tau, w, w_restrictions, Chain, CoherentNerve, CubeModel,
    EnrichedCategory, NerveSimplex, WObject,
};
use crate::error::{Error, Result};
use crate::monotone::Monotone;
use crate::realize::{sing, sing_transformation, Sing};
use crate::sset::constructions::{
    horn_with_inclusion, opposite, product, simplex_index, simplex_monotone, standard_simplex,
    truncate,
};
use crate::sset::enumerate::{for_each_map, Budget, Constraint};
use crate::sset::{SimplicialMap, SimplicialSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Left,
    Right,
    Middle,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Variant::Left),
            "right" => Ok(Variant::Right),
            "middle" => Ok(Variant::Middle),
            _ => Err(Error::input(format!(
                "unknown variant {s:?}, expected left, right or middle"
            ))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Left => "left",
            Variant::Right => "right",
            Variant::Middle => "middle",
        })
    }
}

/// A simplex of a mapping space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    /// One-sided variants: the `(n+1)`-simplex of the ambient.
    Top(usize),
    /// Middle variant: the map `Δ^n × Δ^1 → X`, truncated one level above `out_cap`.
    Probe(SimplicialMap),
}

#[derive(Clone, Debug)]
pub struct HomSpace {
    pub variant: Variant,
    pub set: SimplicialSet,
    pub witnesses: Vec<Vec<Witness>>,
    index: Vec<HashMap<Witness, usize>>,
}

impl HomSpace {
    pub fn locate(&self, n: usize, w: &Witness) -> Option<usize> {
        self.index[n].get(w).copied()
    }
}

/// `Δ^n × Δ^1` at `cap`; the simplex `(α, β)` at level `l` has id `a * (l + 2) + b`.
pub fn prism(n: usize, cap: usize) -> SimplicialSet {
    product(&standard_simplex(n, cap), &standard_simplex(1, cap)).expect("equal caps")
}

fn prism_simplex(n: usize, l: usize, id: usize) -> (Monotone, Monotone) {
    (
        simplex_monotone(n, l, id / (l + 2)),
        simplex_monotone(1, l, id % (l + 2)),
    )
}

/// `θ × id: Δ^m × Δ^1 → Δ^n × Δ^1`.
pub fn prism_map(theta: &Monotone, cap: usize) -> SimplicialMap {
    let m = theta.source();
    SimplicialMap::new(
        (0..=cap)
            .map(|l| {
                (0..binom_count(m, l) * (l + 2))
                    .map(|id| {
                        let (a, b) = prism_simplex(m, l, id);
                        simplex_index(&theta.compose(&a)) * (l + 2) + simplex_index(&b)
                    })
                    .collect()
            })
            .collect(),
    )
}

fn binom_count(n: usize, l: usize) -> usize {
    crate::monotone::binomial(n + l + 1, l + 1)
}

/// The degenerate `l`-simplex on the vertex `v`.
fn constant(x: &SimplicialSet, v: usize, l: usize) -> usize {
    x.apply_monotone(v, &Monotone::new(0, vec![0; l + 1]))
}

fn check_request(x: &SimplicialSet, a: usize, b: usize, out_cap: usize) -> Result<()> {
    if a >= x.count(0) || b >= x.count(0) {
        return Err(Error::input(format!(
            "vertices {a}, {b} not both in the ambient"
        )));
    }
    if x.cap() < out_cap + 1 {
        return Err(Error::CapShortfall {
            what: "mapping space".into(),
            needed: out_cap + 1,
            have: x.cap(),
        });
    }
    Ok(())
}

fn assemble(
    variant: Variant,
    out_cap: usize,
    witnesses: Vec<Vec<Witness>>,
    x: &SimplicialSet,
    t: usize,
) -> Result<HomSpace> {
    let shift = |i: usize| if variant == Variant::Left { i + 1 } else { i };
    let op = |w: &Witness, theta: Monotone, f: &dyn Fn(usize) -> usize| match w {
        Witness::Top(s) => Witness::Top(f(*s)),
        Witness::Probe(p) => Witness::Probe(prism_map(&theta, t).then(p)),
    };
    let (set, index) = SimplicialSet::from_model(
        out_cap,
        witnesses.clone(),
        |n, w, i| op(w, Monotone::coface(n, i), &|s| x.face(n + 1, shift(i), s)),
        |n, w, i| {
            op(w, Monotone::codegeneracy(n, i), &|s| {
                x.degen(n + 1, shift(i), s)
            })
        },
    )?;
    Ok(HomSpace {
        variant,
        set,
        witnesses,
        index,
    })
}

/// `Hom(x, y)`: level `n` is the maps `Δ^n × Δ^1 → X` that are constant at
/// `x` on `Δ^n × {0}` and at `y` on `Δ^n × {1}`.
pub fn hom_middle(
    x: &SimplicialSet,
    a: usize,
    b: usize,
    out_cap: usize,
    budget: &Budget,
) -> Result<HomSpace> {
    check_request(x, a, b, out_cap)?;
    let t = out_cap + 1;
    let xt = truncate(x, t)?;
    let mut levels = Vec::with_capacity(out_cap + 1);
    for n in 0..=out_cap {
        let p = prism(n, t);
        let mut lvl = Vec::new();
        let ends = |l: usize, s: usize| {
            let (_, beta) = prism_simplex(n, l, s);
            if beta.values.iter().all(|&v| v == 0) {
                Constraint::Fixed(constant(&xt, a, l))
            } else if beta.values.iter().all(|&v| v == 1) {
                Constraint::Fixed(constant(&xt, b, l))
            } else {
                Constraint::Free
            }
        };
        for_each_map(&p, &xt, ends, budget, |f| {
            lvl.push(Witness::Probe(SimplicialMap::new(f.to_vec())));
            true
        })?;
        levels.push(lvl);
    }
    assemble(Variant::Middle, out_cap, levels, x, t)
}

/// `Hom^L(x, y)`: level `n` is the `(n+1)`-simplices with initial vertex `x`
/// whose face `d_0` is constant at `y`.
pub fn hom_left(x: &SimplicialSet, a: usize, b: usize, out_cap: usize) -> Result<HomSpace> {
    one_sided(Variant::Left, x, a, b, out_cap)
}

/// `Hom^R(x, y)`: level `n` is the `(n+1)`-simplices with terminal vertex
/// `y` whose face `d_{n+1}` is constant at `x`.
pub fn hom_right(x: &SimplicialSet, a: usize, b: usize, out_cap: usize) -> Result<HomSpace> {
    one_sided(Variant::Right, x, a, b, out_cap)
}

fn one_sided(
    variant: Variant,
    x: &SimplicialSet,
    a: usize,
    b: usize,
    out_cap: usize,
) -> Result<HomSpace> {
    check_request(x, a, b, out_cap)?;
    let levels = (0..=out_cap)
        .map(|n| {
            (0..x.count(n + 1))
                .filter(|&s| match variant {
                    Variant::Left => {
                        x.apply_monotone(s, &Monotone::new(n + 1, vec![0])) == a
                            && x.face(n + 1, 0, s) == constant(x, b, n)
                    }
                    _ => {
                        x.apply_monotone(s, &Monotone::new(n + 1, vec![n + 1])) == b
                            && x.face(n + 1, n + 1, s) == constant(x, a, n)
                    }
                })
                .map(Witness::Top)
                .collect()
        })
        .collect();
    assemble(variant, out_cap, levels, x, out_cap + 1)
}

pub fn hom_space(
    x: &SimplicialSet,
    a: usize,
    b: usize,
    variant: Variant,
    out_cap: usize,
    budget: &Budget,
) -> Result<HomSpace> {
    match variant {
        Variant::Left => hom_left(x, a, b, out_cap),
        Variant::Right => hom_right(x, a, b, out_cap),
        Variant::Middle => hom_middle(x, a, b, out_cap, budget),
    }
}

/// The three mapping spaces with the inclusions `Hom^L → Hom ← Hom^R`.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub left: HomSpace,
    pub middle: HomSpace,
    pub right: HomSpace,
    pub from_left: SimplicialMap,
    pub from_right: SimplicialMap,
}

/// The probe `Δ^n × Δ^1 → Δ^{n+1} → X` of a one-sided simplex `s`, with the
/// first map given on vertices by `v`.
fn probe_of(
    x: &SimplicialSet,
    s: usize,
    n: usize,
    t: usize,
    v: impl Fn(usize, usize) -> usize,
) -> SimplicialMap {
    SimplicialMap::new(
        (0..=t)
            .map(|l| {
                (0..binom_count(n, l) * (l + 2))
                    .map(|id| {
                        let (al, be) = prism_simplex(n, l, id);
                        let vals = al
                            .values
                            .iter()
                            .zip(&be.values)
                            .map(|(&p, &e)| v(p, e))
                            .collect();
                        x.apply_monotone(s, &Monotone::new(n + 1, vals))
                    })
                    .collect()
            })
            .collect(),
    )
}

fn inclusion(from: &HomSpace, to: &HomSpace, x: &SimplicialSet, t: usize) -> Result<SimplicialMap> {
    let components = from
        .witnesses
        .iter()
        .enumerate()
        .map(|(n, lvl)| {
            lvl.iter()
                .map(|w| {
                    let Witness::Top(s) = w else {
                        unreachable!("one-sided spaces hold tops")
                    };
                    let probe = if from.variant == Variant::Left {
                        probe_of(x, *s, n, t, |p, e| if e == 0 { 0 } else { p + 1 })
                    } else {
                        probe_of(x, *s, n, t, |p, e| if e == 0 { p } else { n + 1 })
                    };
                    to.locate(n, &Witness::Probe(probe)).ok_or_else(|| {
                        Error::InvalidMap("one-sided simplex is not a middle simplex".into())
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let m = SimplicialMap::new(components);
    m.validate(&from.set, &to.set)?;
    Ok(m)
}

pub fn comparison_maps(
    x: &SimplicialSet,
    a: usize,
    b: usize,
    out_cap: usize,
    budget: &Budget,
) -> Result<Comparison> {
    let t = out_cap + 1;
    let xt = truncate(x, t)?;
    let left = hom_left(x, a, b, out_cap)?;
    let right = hom_right(x, a, b, out_cap)?;
    let middle = hom_middle(x, a, b, out_cap, budget)?;
    let from_left = inclusion(&left, &middle, &xt, t)?;
    let from_right = inclusion(&right, &middle, &xt, t)?;
    Ok(Comparison {
        left,
        middle,
        right,
        from_left,
        from_right,
    })
}

/// The mapping spaces of `𝔑(C)` together with the isomorphisms
/// `Sing_{Q(0,·)} C(x,y) → Hom^L`, `Sing_W C(x,y) → Hom` and
/// `Sing_{Q(·,0)} C(x,y) → Hom^R` built from the functors they classify.
#[derive(Clone, Debug)]
pub struct Tautological {
    pub nerve: CoherentNerve,
    pub w: WObject,
    pub hom: Comparison,
    pub sing_left: Sing,
    pub sing_middle: Sing,
    pub sing_right: Sing,
    pub phi_left: SimplicialMap,
    pub phi_middle: SimplicialMap,
    pub phi_right: SimplicialMap,
}

struct CubeCache {
    cap: usize,
    models: HashMap<(usize, usize, usize), CubeModel>,
}

impl CubeCache {
    fn get(&mut self, m: usize, a: usize, b: usize) -> Result<&CubeModel> {
        if !self.models.contains_key(&(m, a, b)) {
            self.models
                .insert((m, a, b), cube_model(m, a, b, self.cap)?);
        }
        Ok(&self.models[&(m, a, b)])
    }
}

/// The functor `𝔠[Δ^m] → C` with the given objects, identities between equal
/// objects and `value(a, b, k, chain)` on the crossing pairs.
fn functor(
    c: &EnrichedCategory,
    cubes: &mut CubeCache,
    objects: Vec<usize>,
    value: impl Fn(usize, usize, usize, &Chain) -> usize,
) -> Result<NerveSimplex> {
    let m = objects.len() - 1;
    let mut components = vec![Vec::new(); (m + 1) * (m + 1)];
    for a in 0..=m {
        for b in a + 1..=m {
            let cube = cubes.get(m, a, b)?;
            components[a * (m + 1) + b] = (0..cube.keys.len())
                .map(|k| {
                    cube.keys[k]
                        .iter()
                        .map(|ch| {
                            if objects[a] == objects[b] {
                                c.identity_at(objects[a], k)
                            } else {
                                value(a, b, k, ch)
                            }
                        })
                        .collect()
                })
                .collect();
        }
    }
    Ok(NerveSimplex {
        objects,
        components,
    })
}

fn locate_nerve(nerve: &CoherentNerve, s: &NerveSimplex) -> Result<usize> {
    nerve.index[s.dim()].get(s).copied().ok_or_else(|| {
        Error::InvalidMap("constructed functor is not a simplex of the nerve".into())
    })
}

fn hom_lookup(h: &HomSpace, n: usize, w: &Witness) -> Result<usize> {
    h.locate(n, w).ok_or_else(|| {
        Error::InvalidMap(format!("constructed simplex is not in {} Hom", h.variant))
    })
}

pub fn tautological(
    c: &EnrichedCategory,
    x: usize,
    y: usize,
    out_cap: usize,
    budget: &Budget,
) -> Result<Tautological> {
    if x == y || x >= c.object_count() || y >= c.object_count() {
        return Err(Error::input("need two distinct objects"));
    }
    let h = c.cap();
    let t = out_cap + 1;
    let nerve = coherent_nerve(c, t, budget)?;
    let k = c.hom(x, y);
    let wo = w(out_cap, h)?;
    let sing_middle = sing(&wo.coeff, k, out_cap, budget)?;
    let sing_left = sing(&wo.q.coeff.right_edge(), k, out_cap, budget)?;
    let sing_right = sing(&wo.q.coeff.left_edge(), k, out_cap, budget)?;
    let hom = comparison_maps(&nerve.set, x, y, out_cap, budget)?;
    let mut cubes = CubeCache {
        cap: h,
        models: HashMap::new(),
    };

    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut middle = Vec::new();
    for n in 0..=out_cap {
        let ql = wo.q.model(0, n);
        let mut lvl = Vec::new();
        for g in &sing_left.maps[n] {
            let objects = (0..=n + 1).map(|p| if p == 0 { x } else { y }).collect();
            let s = functor(c, &mut cubes, objects, |_, _, k, ch| g.apply(k, ql.id(ch)))?;
            lvl.push(hom_lookup(
                &hom.left,
                n,
                &Witness::Top(locate_nerve(&nerve, &s)?),
            )?);
        }
        left.push(lvl);

        let qr = wo.q.model(n, 0);
        let mut lvl = Vec::new();
        for g in &sing_right.maps[n] {
            let objects = (0..=n + 1)
                .map(|p| if p == n + 1 { y } else { x })
                .collect();
            let s = functor(c, &mut cubes, objects, |_, _, k, ch| g.apply(k, qr.id(ch)))?;
            lvl.push(hom_lookup(
                &hom.right,
                n,
                &Witness::Top(locate_nerve(&nerve, &s)?),
            )?);
        }
        right.push(lvl);

        let mut lvl = Vec::new();
        for g in &sing_middle.maps[n] {
            let mut probe = Vec::with_capacity(t + 1);
            for l in 0..=t {
                let mut row = Vec::new();
                for id in 0..binom_count(n, l) * (l + 2) {
                    let (al, be) = prism_simplex(n, l, id);
                    let objects = be
                        .values
                        .iter()
                        .map(|&e| if e == 0 { x } else { y })
                        .collect();
                    let s = functor(c, &mut cubes, objects, |a, b, k, ch| {
                        let i = (a..=b).filter(|&p| be.values[p] == 0).count() - 1;
                        let j = b - a - 1 - i;
                        let cut = Monotone::new(n, al.values[a..=b].to_vec());
                        let shifted: Chain = ch.iter().map(|&s| s >> a).collect();
                        let q = wo.q.model(i, j).id(&shifted);
                        g.apply(k, wo.class_of(n, &cut, i, j, k, q))
                    })?;
                    row.push(locate_nerve(&nerve, &s)?);
                }
                probe.push(row);
            }
            lvl.push(hom_lookup(
                &hom.middle,
                n,
                &Witness::Probe(SimplicialMap::new(probe)),
            )?);
        }
        middle.push(lvl);
    }
    Ok(Tautological {
        nerve,
        w: wo,
        hom,
        sing_left,
        sing_middle,
        sing_right,
        phi_left: SimplicialMap::new(left),
        phi_middle: SimplicialMap::new(middle),
        phi_right: SimplicialMap::new(right),
    })
}

/// Outcome of the tautological comparison, one row per variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautologicalReport {
    /// `(variant, bijective, commutes with faces and degeneracies)`.
    pub rows: Vec<(Variant, bool, bool)>,
    /// The inclusions `Hom^L → Hom ← Hom^R` agree with restriction along
    /// `W → Q(0,·)` and `W → Q(·,0)`.
    pub squares: bool,
}

impl TautologicalReport {
    pub fn passed(&self) -> bool {
        self.squares && self.rows.iter().all(|&(_, b, n)| b && n)
    }
}

pub fn tautological_iso_check(
    c: &EnrichedCategory,
    x: usize,
    y: usize,
    out_cap: usize,
    budget: &Budget,
) -> Result<TautologicalReport> {
    let tt = tautological(c, x, y, out_cap, budget)?;
    let row = |v, phi: &SimplicialMap, from: &Sing, to: &HomSpace| {
        (
            v,
            phi.is_bijective(&to.set),
            phi.validate(&from.set, &to.set).is_ok(),
        )
    };
    let rows = vec![
        row(Variant::Left, &tt.phi_left, &tt.sing_left, &tt.hom.left),
        row(
            Variant::Middle,
            &tt.phi_middle,
            &tt.sing_middle,
            &tt.hom.middle,
        ),
        row(Variant::Right, &tt.phi_right, &tt.sing_right, &tt.hom.right),
    ];
    let (to_left, to_right) = w_restrictions(&tt.w)?;
    let r_right = sing_transformation(&to_right, &tt.sing_left, &tt.sing_middle)?;
    let r_left = sing_transformation(&to_left, &tt.sing_right, &tt.sing_middle)?;
    let squares = tt.phi_left.then(&tt.hom.from_left) == r_right.then(&tt.phi_middle)
        && tt.phi_right.then(&tt.hom.from_right) == r_left.then(&tt.phi_middle);
    Ok(TautologicalReport { rows, squares })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpSymmetryReport {
    /// `Hom^R ≅ (Hom^L)^op` induced by τ.
    pub one_sided: bool,
    /// `Hom ≅ Hom^op` induced by ρ.
    pub middle: bool,
    /// The two isomorphisms commute with the inclusions into the middle.
    pub square: bool,
    /// Whether the middle isomorphism happens to be the identity.
    pub middle_is_identity: bool,
}

impl OpSymmetryReport {
    pub fn passed(&self) -> bool {
        self.one_sided && self.middle && self.square
    }
}

fn sing_index(s: &Sing, n: usize, g: &SimplicialMap) -> Result<usize> {
    s.index_of(n, g)
        .ok_or_else(|| Error::InvalidMap("transported map missing from Sing".into()))
}

pub fn op_symmetry_check(
    c: &EnrichedCategory,
    x: usize,
    y: usize,
    out_cap: usize,
    budget: &Budget,
) -> Result<OpSymmetryReport> {
    let tt = tautological(c, x, y, out_cap, budget)?;
    let (inv_r, inv_m) = (tt.phi_right.inverse(), tt.phi_middle.inverse());
    let r = rho(&tt.w)?;
    let mut psi_r = Vec::new();
    let mut psi_m = Vec::new();
    for n in 0..=out_cap {
        let t = tau(tt.w.q.model(0, n), tt.w.q.model(n, 0));
        psi_r.push(
            (0..tt.hom.right.set.count(n))
                .map(|s| {
                    let g = t.then(&tt.sing_right.maps[n][inv_r.apply(n, s)]);
                    Ok(tt.phi_left.apply(n, sing_index(&tt.sing_left, n, &g)?))
                })
                .collect::<Result<Vec<_>>>()?,
        );
        psi_m.push(
            (0..tt.hom.middle.set.count(n))
                .map(|s| {
                    let g = r.components[n].then(&tt.sing_middle.maps[n][inv_m.apply(n, s)]);
                    Ok(tt.phi_middle.apply(n, sing_index(&tt.sing_middle, n, &g)?))
                })
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let (psi_r, psi_m) = (SimplicialMap::new(psi_r), SimplicialMap::new(psi_m));
    let left_op = opposite(&tt.hom.left.set);
    let middle_op = opposite(&tt.hom.middle.set);
    Ok(OpSymmetryReport {
        one_sided: psi_r.validate(&tt.hom.right.set, &left_op).is_ok()
            && psi_r.is_bijective(&left_op),
        middle: psi_m.validate(&tt.hom.middle.set, &middle_op).is_ok()
            && psi_m.is_bijective(&middle_op),
        square: tt.hom.from_right.then(&psi_m) == psi_r.then(&tt.hom.from_left),
        middle_is_identity: psi_m == SimplicialMap::identity(&tt.hom.middle.set),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornReport {
    pub n: usize,
    pub k: usize,
    pub horns: usize,
    pub filled: usize,
    /// Faces `d_i`, `i ≠ k`, of the first horn without a filler.
    pub unfilled: Option<Vec<usize>>,
}

impl HornReport {
    pub fn passed(&self) -> bool {
        self.filled == self.horns
    }
}

/// For every map `Λ^n_k → X`, whether it extends over `Δ^n`.
pub fn horn_filler_check(
    x: &SimplicialSet,
    n: usize,
    k: usize,
    budget: &Budget,
) -> Result<HornReport> {
    if x.cap() < n {
        return Err(Error::CapShortfall {
            what: "horn filler".into(),
            needed: n,
            have: x.cap(),
        });
    }
    let (horn, incl) = horn_with_inclusion(n, k, x.cap())?;
    let slots: Vec<usize> = (0..=n)
        .filter(|&i| i != k)
        .map(|i| {
            let target = simplex_index(&Monotone::coface(n, i));
            (0..horn.count(n - 1))
                .find(|&s| incl.apply(n - 1, s) == target)
                .expect("horn contains the face")
        })
        .collect();
    let mut report = HornReport {
        n,
        k,
        horns: 0,
        filled: 0,
        unfilled: None,
    };
    for_each_map(
        &horn,
        x,
        |_, _| Constraint::Free,
        budget,
        |f| {
            let faces: Vec<usize> = slots.iter().map(|&s| f[n - 1][s]).collect();
            let fits = |s: usize| {
                (0..=n)
                    .filter(|&i| i != k)
                    .zip(&faces)
                    .all(|(i, &d)| x.face(n, i, s) == d)
            };
            report.horns += 1;
            if (0..x.count(n)).any(fits) {
                report.filled += 1;
            } else if report.unfilled.is_none() {
                report.unfilled = Some(faces);
            }
            true
        },
    )?;
    Ok(report)
}
