//! Truncated bisimplicial sets, exterior products, `Cut^n`, `dec`, `J` and the
//! flip and reversal symmetries.

use std::collections::HashMap;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{self, Degeneracies, Graded, Op, OpKind, OpTable};
use crate::monotone::{increasing_sequences, Generator, Monotone};
use crate::sset::constructions::{
    coproduct, join_with_layout, pushout, seq_label, simplex_monotone, standard_simplex,
    JoinSimplex,
};
use crate::sset::enumerate::{enumerate_maps, Budget, Constraint};
use crate::sset::{PointedDirected, SimplicialMap, SimplicialSet};

/// Bidegree cap `(horizontal, vertical)`.
pub type BiCap = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSimplicialSet {
    cap: BiCap,
    counts: Vec<usize>,
    hface: Vec<Vec<Vec<usize>>>,
    hdegen: Vec<Vec<Vec<usize>>>,
    vface: Vec<Vec<Vec<usize>>>,
    vdegen: Vec<Vec<Vec<usize>>>,
    labels: Option<Vec<Vec<String>>>,
}

impl BiSimplicialSet {
    pub fn level(&self, i: usize, j: usize) -> usize {
        i * (self.cap.1 + 1) + j
    }

    pub fn bidegree(&self, level: usize) -> (usize, usize) {
        (level / (self.cap.1 + 1), level % (self.cap.1 + 1))
    }

    pub fn cap(&self) -> BiCap {
        self.cap
    }

    pub fn count(&self, i: usize, j: usize) -> usize {
        self.counts[self.level(i, j)]
    }

    pub fn hface(&self, i: usize, j: usize, k: usize, x: usize) -> usize {
        self.hface[self.level(i, j)][k][x]
    }

    pub fn vface(&self, i: usize, j: usize, k: usize, x: usize) -> usize {
        self.vface[self.level(i, j)][k][x]
    }

    pub fn hdegen(&self, i: usize, j: usize, k: usize, x: usize) -> usize {
        self.hdegen[self.level(i, j)][k][x]
    }

    pub fn vdegen(&self, i: usize, j: usize, k: usize, x: usize) -> usize {
        self.vdegen[self.level(i, j)][k][x]
    }

    pub fn label(&self, i: usize, j: usize, x: usize) -> String {
        match &self.labels {
            Some(l) => l[self.level(i, j)][x].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&Vec<Vec<String>>> {
        self.labels.as_ref()
    }

    pub fn bidegrees(&self) -> impl Iterator<Item = (usize, usize)> {
        let (ch, cv) = self.cap;
        (0..=ch).flat_map(move |i| (0..=cv).map(move |j| (i, j)))
    }

    pub fn from_tables(
        cap: BiCap,
        counts: Vec<usize>,
        hface: Vec<Vec<Vec<usize>>>,
        hdegen: Vec<Vec<Vec<usize>>>,
        vface: Vec<Vec<Vec<usize>>>,
        vdegen: Vec<Vec<Vec<usize>>>,
        labels: Option<Vec<Vec<String>>>,
    ) -> Result<Self> {
        let (ch, cv) = cap;
        let levels = (ch + 1) * (cv + 1);
        if [
            counts.len(),
            hface.len(),
            hdegen.len(),
            vface.len(),
            vdegen.len(),
        ]
        .iter()
        .any(|&l| l != levels)
        {
            return Err(Error::input(
                "bisimplicial tables have the wrong number of levels",
            ));
        }
        let b = BiSimplicialSet {
            cap,
            counts,
            hface,
            hdegen,
            vface,
            vdegen,
            labels,
        };
        for (i, j) in b.bidegrees() {
            let l = b.level(i, j);
            let shapes = [
                (
                    &b.hface[l],
                    if i > 0 { i + 1 } else { 0 },
                    (i.wrapping_sub(1), j),
                ),
                (&b.hdegen[l], if i < ch { i + 1 } else { 0 }, (i + 1, j)),
                (
                    &b.vface[l],
                    if j > 0 { j + 1 } else { 0 },
                    (i, j.wrapping_sub(1)),
                ),
                (&b.vdegen[l], if j < cv { j + 1 } else { 0 }, (i, j + 1)),
            ];
            for (tables, want, (ti, tj)) in shapes {
                if tables.len() != want {
                    return Err(Error::input(format!(
                        "bidegree ({i},{j}): wrong operator count"
                    )));
                }
                for t in tables {
                    let bound = b.counts[b.level(ti, tj)];
                    if t.len() != b.counts[l] || t.iter().any(|&y| y >= bound) {
                        return Err(Error::input(format!("bidegree ({i},{j}): malformed table")));
                    }
                }
            }
            if let Some(lab) = &b.labels {
                if lab.len() != levels || lab[l].len() != b.counts[l] {
                    return Err(Error::input("label table does not match level sizes"));
                }
            }
        }
        Ok(b)
    }

    /// Builds a bisimplicial set from keyed levels and operators on keys.
    #[allow(clippy::too_many_arguments)]
    pub fn from_model<K, HF, HD, VF, VD>(
        cap: BiCap,
        levels: Vec<Vec<K>>,
        hf: HF,
        hd: HD,
        vf: VF,
        vd: VD,
    ) -> Result<(Self, Vec<HashMap<K, usize>>)>
    where
        K: Eq + Hash + Clone,
        HF: Fn((usize, usize), &K, usize) -> K,
        HD: Fn((usize, usize), &K, usize) -> K,
        VF: Fn((usize, usize), &K, usize) -> K,
        VD: Fn((usize, usize), &K, usize) -> K,
    {
        let (ch, cv) = cap;
        let lv = |i: usize, j: usize| i * (cv + 1) + j;
        let index: Vec<HashMap<K, usize>> = levels
            .iter()
            .map(|l| l.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect())
            .collect();
        let look = |l: usize, k: &K| -> Result<usize> {
            index[l]
                .get(k)
                .copied()
                .ok_or_else(|| Error::input("model operator leaves the levels"))
        };
        let n = (ch + 1) * (cv + 1);
        let (mut hface, mut hdegen, mut vface, mut vdegen) = (
            vec![Vec::new(); n],
            vec![Vec::new(); n],
            vec![Vec::new(); n],
            vec![Vec::new(); n],
        );
        for i in 0..=ch {
            for j in 0..=cv {
                let l = lv(i, j);
                let table = |dst: usize, op: &dyn Fn(&K) -> K| -> Result<Vec<usize>> {
                    levels[l].iter().map(|x| look(dst, &op(x))).collect()
                };
                if i > 0 {
                    for k in 0..=i {
                        hface[l].push(table(lv(i - 1, j), &|x| hf((i, j), x, k))?);
                    }
                }
                if i < ch {
                    for k in 0..=i {
                        hdegen[l].push(table(lv(i + 1, j), &|x| hd((i, j), x, k))?);
                    }
                }
                if j > 0 {
                    for k in 0..=j {
                        vface[l].push(table(lv(i, j - 1), &|x| vf((i, j), x, k))?);
                    }
                }
                if j < cv {
                    for k in 0..=j {
                        vdegen[l].push(table(lv(i, j + 1), &|x| vd((i, j), x, k))?);
                    }
                }
            }
        }
        let counts = levels.iter().map(|l| l.len()).collect();
        let b = BiSimplicialSet::from_tables(cap, counts, hface, hdegen, vface, vdegen, None)?;
        Ok((b, index))
    }

    pub fn with_labels(mut self, labels: Vec<Vec<String>>) -> Self {
        assert_eq!(labels.len(), self.counts.len());
        self.labels = Some(labels);
        self
    }

    pub fn degeneracies(&self) -> Degeneracies {
        Degeneracies::of(self)
    }

    /// Applies `θ` in the horizontal direction to `x ∈ B_{θ.target, j}`.
    pub fn apply_h(&self, j: usize, x: usize, theta: &Monotone) -> usize {
        let mut cur = x;
        let mut i = theta.target;
        for g in theta.contravariant_steps() {
            match g {
                Generator::Coface(k) => {
                    cur = self.hface(i, j, k, cur);
                    i -= 1;
                }
                Generator::Codegeneracy(k) => {
                    cur = self.hdegen(i, j, k, cur);
                    i += 1;
                }
            }
        }
        cur
    }

    /// Applies `ψ` in the vertical direction to `x ∈ B_{i, ψ.target}`.
    pub fn apply_v(&self, i: usize, x: usize, psi: &Monotone) -> usize {
        let mut cur = x;
        let mut j = psi.target;
        for g in psi.contravariant_steps() {
            match g {
                Generator::Coface(k) => {
                    cur = self.vface(i, j, k, cur);
                    j -= 1;
                }
                Generator::Codegeneracy(k) => {
                    cur = self.vdegen(i, j, k, cur);
                    j += 1;
                }
            }
        }
        cur
    }

    /// Checks the simplicial identities in each direction and that the two
    /// directions commute.
    pub fn check_identities(&self) -> Result<()> {
        let (ch, cv) = self.cap;
        for j in 0..=cv {
            self.row(j)
                .check_identities()
                .map_err(|e| Error::Identity(format!("row {j}: {e}")))?;
        }
        for i in 0..=ch {
            self.column(i)
                .check_identities()
                .map_err(|e| Error::Identity(format!("column {i}: {e}")))?;
        }
        let fail = |i, j| {
            Err(Error::Identity(format!(
                "directions do not commute at ({i},{j})"
            )))
        };
        for (i, j) in self.bidegrees() {
            for x in 0..self.count(i, j) {
                for a in 0..=i {
                    for b in 0..=j {
                        if i > 0 && j > 0 {
                            let p = self.vface(i - 1, j, b, self.hface(i, j, a, x));
                            let q = self.hface(i, j - 1, a, self.vface(i, j, b, x));
                            if p != q {
                                return fail(i, j);
                            }
                        }
                        if i < ch && j > 0 {
                            let p = self.vface(i + 1, j, b, self.hdegen(i, j, a, x));
                            let q = self.hdegen(i, j - 1, a, self.vface(i, j, b, x));
                            if p != q {
                                return fail(i, j);
                            }
                        }
                        if i > 0 && j < cv {
                            let p = self.vdegen(i - 1, j, b, self.hface(i, j, a, x));
                            let q = self.hface(i, j + 1, a, self.vdegen(i, j, b, x));
                            if p != q {
                                return fail(i, j);
                            }
                        }
                        if i < ch && j < cv {
                            let p = self.vdegen(i + 1, j, b, self.hdegen(i, j, a, x));
                            let q = self.hdegen(i, j + 1, a, self.vdegen(i, j, b, x));
                            if p != q {
                                return fail(i, j);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The simplicial set `i ↦ B_{i,j}`.
    pub fn row(&self, j: usize) -> SimplicialSet {
        let ch = self.cap.0;
        let faces = (0..=ch)
            .map(|i| self.hface[self.level(i, j)].clone())
            .collect();
        let degens = (0..=ch)
            .map(|i| self.hdegen[self.level(i, j)].clone())
            .collect();
        let counts = (0..=ch).map(|i| self.count(i, j)).collect();
        SimplicialSet::from_tables(ch, counts, faces, degens, None).expect("row tables")
    }

    /// The simplicial set `j ↦ B_{i,j}`.
    pub fn column(&self, i: usize) -> SimplicialSet {
        let cv = self.cap.1;
        let faces = (0..=cv)
            .map(|j| self.vface[self.level(i, j)].clone())
            .collect();
        let degens = (0..=cv)
            .map(|j| self.vdegen[self.level(i, j)].clone())
            .collect();
        let counts = (0..=cv).map(|j| self.count(i, j)).collect();
        SimplicialSet::from_tables(cv, counts, faces, degens, None).expect("column tables")
    }

    pub fn is_isomorphic(&self, other: &BiSimplicialSet) -> Option<BiSimplicialMap> {
        if self.cap != other.cap {
            return None;
        }
        graded::find_isomorphism(self, other).map(|components| BiSimplicialMap { components })
    }

    pub fn is_empty(&self) -> bool {
        self.counts[0] == 0
    }

    /// Nondegenerate bisimplices per bidegree, as `[i][j]`.
    pub fn nondegenerate_counts(&self) -> Vec<Vec<usize>> {
        let d = self.degeneracies();
        (0..=self.cap.0)
            .map(|i| {
                (0..=self.cap.1)
                    .map(|j| d.nondegenerate(self.level(i, j)).len())
                    .collect()
            })
            .collect()
    }
}

impl Graded for BiSimplicialSet {
    fn num_levels(&self) -> usize {
        self.counts.len()
    }

    fn level_size(&self, level: usize) -> usize {
        self.counts[level]
    }

    fn degree(&self, level: usize) -> (usize, usize) {
        self.bidegree(level)
    }

    fn op_tables(&self) -> Vec<OpTable<'_>> {
        let mut out = Vec::new();
        for (i, j) in self.bidegrees() {
            let l = self.level(i, j);
            let groups = [
                (
                    OpKind::Face,
                    0,
                    &self.hface[l],
                    if i > 0 { self.level(i - 1, j) } else { 0 },
                ),
                (
                    OpKind::Degen,
                    0,
                    &self.hdegen[l],
                    if i < self.cap.0 {
                        self.level(i + 1, j)
                    } else {
                        0
                    },
                ),
                (
                    OpKind::Face,
                    1,
                    &self.vface[l],
                    if j > 0 { self.level(i, j - 1) } else { 0 },
                ),
                (
                    OpKind::Degen,
                    1,
                    &self.vdegen[l],
                    if j < self.cap.1 {
                        self.level(i, j + 1)
                    } else {
                        0
                    },
                ),
            ];
            for (kind, dir, tables, dst) in groups {
                for (k, t) in tables.iter().enumerate() {
                    out.push(OpTable {
                        op: Op {
                            kind,
                            dir,
                            index: k,
                            src: l,
                            dst,
                            src_degree: (i, j),
                        },
                        table: t,
                    });
                }
            }
        }
        out
    }
}

/// Componentwise map of bisimplicial sets, indexed by flat level.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiSimplicialMap {
    pub components: Vec<Vec<usize>>,
}

impl BiSimplicialMap {
    pub fn validate(&self, source: &BiSimplicialSet, target: &BiSimplicialSet) -> Result<()> {
        if source.cap != target.cap {
            return Err(Error::input("bidegree caps differ"));
        }
        if graded::is_map(source, target, &self.components) {
            Ok(())
        } else {
            Err(Error::InvalidMap(
                "components do not commute with the operators".into(),
            ))
        }
    }

    pub fn then(&self, other: &BiSimplicialMap) -> BiSimplicialMap {
        BiSimplicialMap {
            components: self
                .components
                .iter()
                .enumerate()
                .map(|(l, c)| c.iter().map(|&y| other.components[l][y]).collect())
                .collect(),
        }
    }

    pub fn apply(&self, b: &BiSimplicialSet, i: usize, j: usize, x: usize) -> usize {
        self.components[b.level(i, j)][x]
    }

    pub fn identity(b: &BiSimplicialSet) -> Self {
        BiSimplicialMap {
            components: b.counts.iter().map(|&c| (0..c).collect()).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|c| {
            let mut v = c.clone();
            v.sort_unstable();
            v.windows(2).all(|w| w[0] != w[1])
        })
    }
}

/// Exterior product `X ⊠ Y`, with `(a, b)` at `(i, j)` stored as `a·|Y_j| + b`.
pub fn boxtimes(x: &SimplicialSet, y: &SimplicialSet) -> BiSimplicialSet {
    let cap = (x.cap(), y.cap());
    let (ch, cv) = cap;
    let lv = |i: usize, j: usize| i * (cv + 1) + j;
    let n = (ch + 1) * (cv + 1);
    let mut counts = vec![0; n];
    let (mut hface, mut hdegen, mut vface, mut vdegen) = (
        vec![Vec::new(); n],
        vec![Vec::new(); n],
        vec![Vec::new(); n],
        vec![Vec::new(); n],
    );
    let mut labels = vec![Vec::new(); n];
    for i in 0..=ch {
        for j in 0..=cv {
            let l = lv(i, j);
            counts[l] = x.count(i) * y.count(j);
            let each = |f: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
                let mut t = Vec::with_capacity(x.count(i) * y.count(j));
                for a in 0..x.count(i) {
                    for b in 0..y.count(j) {
                        t.push(f(a, b));
                    }
                }
                t
            };
            if i > 0 {
                for k in 0..=i {
                    hface[l].push(each(&|a, b| x.face(i, k, a) * y.count(j) + b));
                }
            }
            if i < ch {
                for k in 0..=i {
                    hdegen[l].push(each(&|a, b| x.degen(i, k, a) * y.count(j) + b));
                }
            }
            if j > 0 {
                for k in 0..=j {
                    vface[l].push(each(&|a, b| a * y.count(j - 1) + y.face(j, k, b)));
                }
            }
            if j < cv {
                for k in 0..=j {
                    vdegen[l].push(each(&|a, b| a * y.count(j + 1) + y.degen(j, k, b)));
                }
            }
            for a in 0..x.count(i) {
                for b in 0..y.count(j) {
                    labels[l].push(format!("{}|{}", x.label(i, a), y.label(j, b)));
                }
            }
        }
    }
    BiSimplicialSet::from_tables(cap, counts, hface, hdegen, vface, vdegen, Some(labels))
        .expect("box tables")
}

/// `f ⊠ g`.
pub fn boxtimes_map(
    x: &SimplicialSet,
    y: &SimplicialSet,
    f: &SimplicialMap,
    x2: &SimplicialSet,
    y2: &SimplicialSet,
    g: &SimplicialMap,
) -> BiSimplicialMap {
    let _ = x2;
    let (ch, cv) = (x.cap(), y.cap());
    let mut components = Vec::with_capacity((ch + 1) * (cv + 1));
    for i in 0..=ch {
        for j in 0..=cv {
            let mut c = Vec::with_capacity(x.count(i) * y.count(j));
            for a in 0..x.count(i) {
                for b in 0..y.count(j) {
                    c.push(f.apply(i, a) * y2.count(j) + g.apply(j, b));
                }
            }
            components.push(c);
        }
    }
    BiSimplicialMap { components }
}

/// `Cut^n`: at `(i, j)` the monotone maps `[i+1+j] → [n]`, the horizontal
/// operators acting on the first `i+1` positions and the vertical ones on the
/// rest.
pub fn cut(n: usize, cap: BiCap) -> BiSimplicialSet {
    let (ch, cv) = cap;
    let mut levels = Vec::with_capacity((ch + 1) * (cv + 1));
    for i in 0..=ch {
        for j in 0..=cv {
            levels.push(increasing_sequences(i + 2 + j, n));
        }
    }
    let labels = levels
        .iter()
        .enumerate()
        .map(|(l, lvl)| {
            let i = l / (cv + 1);
            lvl.iter()
                .map(|s| format!("{}|{}", seq_label(&s[..=i]), seq_label(&s[i + 1..])))
                .collect()
        })
        .collect();
    let remove = |s: &Vec<usize>, p: usize| {
        let mut t = s.clone();
        t.remove(p);
        t
    };
    let dup = |s: &Vec<usize>, p: usize| {
        let mut t = s.clone();
        t.insert(p, s[p]);
        t
    };
    let (b, _) = BiSimplicialSet::from_model(
        cap,
        levels,
        |_, s, k| remove(s, k),
        |_, s, k| dup(s, k),
        |(i, _), s, k| remove(s, i + 1 + k),
        |(i, _), s, k| dup(s, i + 1 + k),
    )
    .expect("cut model is closed");
    b.with_labels(labels)
}

/// `Cut^n → Cut^{n'}` induced by post-composition with `θ: [n] → [n']`.
pub fn cut_map(theta: &Monotone, cap: BiCap) -> BiSimplicialMap {
    let (ch, cv) = cap;
    let mut components = Vec::new();
    for i in 0..=ch {
        for j in 0..=cv {
            components.push(
                increasing_sequences(i + 2 + j, theta.source())
                    .into_iter()
                    .map(|s| {
                        let t: Vec<usize> = s.iter().map(|&v| theta.values[v]).collect();
                        crate::sset::constructions::simplex_index(&Monotone::new(theta.target, t))
                    })
                    .collect(),
            );
        }
    }
    BiSimplicialMap { components }
}

/// The restrictions `Δ^n ⊠ Δ^0 ← Cut^n → Δ^0 ⊠ Δ^n` to the two blocks.
pub fn cut_restrictions(n: usize, cap: BiCap) -> (BiSimplicialMap, BiSimplicialMap) {
    let (ch, cv) = cap;
    let mut left = Vec::new();
    let mut right = Vec::new();
    for i in 0..=ch {
        for j in 0..=cv {
            let mut l = Vec::new();
            let mut r = Vec::new();
            for s in increasing_sequences(i + 2 + j, n) {
                let a =
                    crate::sset::constructions::simplex_index(&Monotone::new(n, s[..=i].to_vec()));
                let b = crate::sset::constructions::simplex_index(&Monotone::new(
                    n,
                    s[i + 1..].to_vec(),
                ));
                // Δ^0 has a single simplex in each degree
                l.push(a);
                r.push(b);
            }
            left.push(l);
            right.push(r);
        }
    }
    (
        BiSimplicialMap { components: left },
        BiSimplicialMap { components: right },
    )
}

/// `dec(K)`: at `(i, j)` the maps `Δ^i ∗ Δ^j → K` over Δ^1, i.e. the
/// `(i+1+j)`-simplices of `K` whose first `i+1` vertices lie over 0.
pub fn dec(k: &PointedDirected, cap: BiCap) -> Result<BiSimplicialSet> {
    let split = k.split_points()?;
    let (ch, cv) = cap;
    if k.cap() < ch + cv + 1 {
        return Err(Error::CapShortfall {
            what: "dec".into(),
            needed: ch + cv + 1,
            have: k.cap(),
        });
    }
    let x = k.carrier();
    let mut levels = Vec::new();
    for i in 0..=ch {
        for j in 0..=cv {
            let n = i + 1 + j;
            levels.push(
                (0..x.count(n))
                    .filter(|&s| split[n][s] == i + 1)
                    .collect::<Vec<usize>>(),
            );
        }
    }
    let labels = levels
        .iter()
        .enumerate()
        .map(|(l, lvl)| {
            let (i, j) = (l / (cv + 1), l % (cv + 1));
            lvl.iter().map(|&s| x.label(i + 1 + j, s)).collect()
        })
        .collect();
    let (b, _) = BiSimplicialSet::from_model(
        cap,
        levels,
        |(i, j), &s, kk| x.face(i + 1 + j, kk, s),
        |(i, j), &s, kk| x.degen(i + 1 + j, kk, s),
        |(i, j), &s, kk| x.face(i + 1 + j, i + 1 + kk, s),
        |(i, j), &s, kk| x.degen(i + 1 + j, i + 1 + kk, s),
    )?;
    Ok(b.with_labels(labels))
}

/// `J_{i,j} = (Δ^i ∗ Δ^j) ⊔_{Δ^i ⊔ Δ^j} (Δ^0 ⊔ Δ^0)`, pointed by the two
/// collapsed blocks.
pub fn j_object(i: usize, j: usize, cap: usize) -> Result<PointedDirected> {
    let di = standard_simplex(i, cap);
    let dj = standard_simplex(j, cap);
    let (joined, lay) = join_with_layout(&di, &dj)?;
    let (ends, _, _) = coproduct(&di, &dj)?;
    let incl = SimplicialMap::new(
        (0..=cap)
            .map(|n| {
                let mut v: Vec<usize> = (0..di.count(n))
                    .map(|a| lay.id(n, JoinSimplex::Left(a)))
                    .collect();
                v.extend((0..dj.count(n)).map(|b| lay.id(n, JoinSimplex::Right(b))));
                v
            })
            .collect(),
    );
    let pt = standard_simplex(0, cap);
    let (two, _, _) = coproduct(&pt, &pt)?;
    let collapse = SimplicialMap::new(
        (0..=cap)
            .map(|n| {
                let mut v = vec![0; di.count(n)];
                v.extend(std::iter::repeat_n(1, dj.count(n)));
                v
            })
            .collect(),
    );
    let _ = ends;
    let (p, _, from_two) = pushout(&joined, &two, &incl, &collapse)?;
    PointedDirected::new(p, from_two.apply(0, 0), from_two.apply(0, 1))
}

/// The diagonal simplicial set `k ↦ B_{k,k}`.
pub fn diag(b: &BiSimplicialSet) -> SimplicialSet {
    let cap = b.cap.0.min(b.cap.1);
    let faces = (0..=cap)
        .map(|k| {
            if k == 0 {
                return Vec::new();
            }
            (0..=k)
                .map(|i| {
                    (0..b.count(k, k))
                        .map(|x| b.vface(k - 1, k, i, b.hface(k, k, i, x)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let degens = (0..=cap)
        .map(|k| {
            if k == cap {
                return Vec::new();
            }
            (0..=k)
                .map(|i| {
                    (0..b.count(k, k))
                        .map(|x| b.vdegen(k + 1, k, i, b.hdegen(k, k, i, x)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let counts = (0..=cap).map(|k| b.count(k, k)).collect();
    let labels = b
        .labels
        .as_ref()
        .map(|l| (0..=cap).map(|k| l[b.level(k, k)].clone()).collect());
    SimplicialSet::from_tables(cap, counts, faces, degens, labels).expect("diagonal tables")
}

/// Swaps the two directions.
pub fn flip(b: &BiSimplicialSet) -> BiSimplicialSet {
    let (ch, cv) = b.cap;
    let mut counts = Vec::new();
    let (mut hface, mut hdegen, mut vface, mut vdegen) =
        (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    let mut labels = Vec::new();
    for j in 0..=cv {
        for i in 0..=ch {
            let l = b.level(i, j);
            counts.push(b.counts[l]);
            hface.push(b.vface[l].clone());
            hdegen.push(b.vdegen[l].clone());
            vface.push(b.hface[l].clone());
            vdegen.push(b.hdegen[l].clone());
            if let Some(lab) = &b.labels {
                labels.push(lab[l].clone());
            }
        }
    }
    let labels = b.labels.as_ref().map(|_| labels);
    BiSimplicialSet::from_tables((cv, ch), counts, hface, hdegen, vface, vdegen, labels)
        .expect("flip tables")
}

fn reverse_ops(tables: &[Vec<Vec<usize>>]) -> Vec<Vec<Vec<usize>>> {
    tables
        .iter()
        .map(|ops| {
            let n = ops.len();
            (0..n).map(|k| ops[n - 1 - k].clone()).collect()
        })
        .collect()
}

/// Reverses the horizontal direction (`d_k ↦ d_{i-k}`, `s_k ↦ s_{i-k}`).
pub fn lrev(b: &BiSimplicialSet) -> BiSimplicialSet {
    let mut out = b.clone();
    out.hface = reverse_ops(&b.hface);
    out.hdegen = reverse_ops(&b.hdegen);
    out
}

/// Reverses the vertical direction.
pub fn rrev(b: &BiSimplicialSet) -> BiSimplicialSet {
    let mut out = b.clone();
    out.vface = reverse_ops(&b.vface);
    out.vdegen = reverse_ops(&b.vdegen);
    out
}

pub fn rev(b: &BiSimplicialSet) -> BiSimplicialSet {
    lrev(&rrev(b))
}

/// Restriction to a family of bisimplices closed under all operators.
pub fn restrict(b: &BiSimplicialSet, keep: &[Vec<bool>]) -> (BiSimplicialSet, BiSimplicialMap) {
    let incl: Vec<Vec<usize>> = keep
        .iter()
        .map(|k| (0..k.len()).filter(|&x| k[x]).collect())
        .collect();
    let mut pos: Vec<Vec<usize>> = keep.iter().map(|k| vec![usize::MAX; k.len()]).collect();
    for (l, v) in incl.iter().enumerate() {
        for (p, &x) in v.iter().enumerate() {
            pos[l][x] = p;
        }
    }
    let sub_tables =
        |tables: &Vec<Vec<Vec<usize>>>, dst: &dyn Fn(usize) -> usize| -> Vec<Vec<Vec<usize>>> {
            tables
                .iter()
                .enumerate()
                .map(|(l, ops)| {
                    ops.iter()
                        .map(|t| incl[l].iter().map(|&x| pos[dst(l)][t[x]]).collect())
                        .collect()
                })
                .collect()
        };
    let cv = b.cap.1;
    let hface = sub_tables(&b.hface, &|l| l.wrapping_sub(cv + 1));
    let hdegen = sub_tables(&b.hdegen, &|l| l + cv + 1);
    let vface = sub_tables(&b.vface, &|l| l.wrapping_sub(1));
    let vdegen = sub_tables(&b.vdegen, &|l| l + 1);
    let labels = b.labels.as_ref().map(|lab| {
        incl.iter()
            .enumerate()
            .map(|(l, v)| v.iter().map(|&x| lab[l][x].clone()).collect())
            .collect()
    });
    let counts = incl.iter().map(|v| v.len()).collect();
    let sub = BiSimplicialSet::from_tables(b.cap, counts, hface, hdegen, vface, vdegen, labels)
        .expect("restriction of a closed family");
    (sub, BiSimplicialMap { components: incl })
}

/// `(∂Δ^i ⊠ Δ^j) ∪ (Δ^i ⊠ ∂Δ^j) ⊆ Δ^i ⊠ Δ^j`, with its inclusion.
pub fn boundary_bisimplex(i: usize, j: usize, cap: BiCap) -> (BiSimplicialSet, BiSimplicialMap) {
    let whole = boxtimes(&standard_simplex(i, cap.0), &standard_simplex(j, cap.1));
    let keep: Vec<Vec<bool>> = (0..whole.counts.len())
        .map(|l| {
            let (p, q) = whole.bidegree(l);
            let nq = crate::monotone::binomial(j + q + 1, q + 1);
            (0..whole.counts[l])
                .map(|x| {
                    let a = simplex_monotone(i, p, x / nq);
                    let b = simplex_monotone(j, q, x % nq);
                    !a.is_surjective() || !b.is_surjective()
                })
                .collect()
        })
        .collect();
    restrict(&whole, &keep)
}

#[derive(Serialize, Deserialize)]
struct Doc {
    cap: (usize, usize),
    levels: Vec<Vec<usize>>,
    hface: Vec<Vec<Vec<Vec<usize>>>>,
    hdegen: Vec<Vec<Vec<Vec<usize>>>>,
    vface: Vec<Vec<Vec<Vec<usize>>>>,
    vdegen: Vec<Vec<Vec<Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<Vec<Vec<String>>>>,
}

impl BiSimplicialSet {
    pub fn to_json(&self) -> String {
        let (ch, cv) = self.cap;
        let nest = |flat: &Vec<Vec<Vec<usize>>>| -> Vec<Vec<Vec<Vec<usize>>>> {
            (0..=ch)
                .map(|i| (0..=cv).map(|j| flat[self.level(i, j)].clone()).collect())
                .collect()
        };
        let doc = Doc {
            cap: self.cap,
            levels: (0..=ch)
                .map(|i| (0..=cv).map(|j| self.count(i, j)).collect())
                .collect(),
            hface: nest(&self.hface),
            hdegen: nest(&self.hdegen),
            vface: nest(&self.vface),
            vdegen: nest(&self.vdegen),
            labels: self.labels.as_ref().map(|l| {
                (0..=ch)
                    .map(|i| (0..=cv).map(|j| l[self.level(i, j)].clone()).collect())
                    .collect()
            }),
        };
        serde_json::to_string(&doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Doc = serde_json::from_str(text)?;
        let flat = |nested: Vec<Vec<Vec<Vec<usize>>>>| -> Vec<Vec<Vec<usize>>> {
            nested.into_iter().flatten().collect()
        };
        let b = BiSimplicialSet::from_tables(
            doc.cap,
            doc.levels.into_iter().flatten().collect(),
            flat(doc.hface),
            flat(doc.hdegen),
            flat(doc.vface),
            flat(doc.vdegen),
            doc.labels.map(|l| l.into_iter().flatten().collect()),
        )?;
        b.check_identities()?;
        Ok(b)
    }
}

/// One level of the count `|K_n| = 2 + Σ_{i+j=n−1} |Hom_dir(J_{i,j}, K)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionRow {
    pub level: usize,
    pub simplices: usize,
    pub predicted: usize,
}

/// Counts both sides of the partition of a directed `K` by split point, the
/// right-hand side by enumerating pointed maps `J_{i,j} → K`.
pub fn partition_check(
    k: &PointedDirected,
    max_level: usize,
    budget: &Budget,
) -> Result<Vec<PartitionRow>> {
    if !k.is_directed() {
        return Err(Error::NotDirected(
            "partition formula needs a directed K".into(),
        ));
    }
    let cap = k.cap();
    if max_level > cap {
        return Err(Error::CapShortfall {
            what: "partition formula".into(),
            needed: max_level,
            have: cap,
        });
    }
    let mut rows = Vec::new();
    for n in 0..=max_level {
        let mut predicted = 2;
        for i in 0..n {
            let j = n - 1 - i;
            let jj = j_object(i, j, cap)?;
            let ends = |l: usize, s: usize| {
                if l == 0 && s == jj.zero() {
                    Constraint::Fixed(k.zero())
                } else if l == 0 && s == jj.one() {
                    Constraint::Fixed(k.one())
                } else {
                    Constraint::Free
                }
            };
            predicted += enumerate_maps(jj.carrier(), k.carrier(), ends, budget)?.len();
        }
        rows.push(PartitionRow {
            level: n,
            simplices: k.carrier().count(n),
            predicted,
        });
    }
    Ok(rows)
}
