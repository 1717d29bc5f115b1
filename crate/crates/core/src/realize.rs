//! Cosimplicial and bicosimplicial simplicial sets, the coend realization
//! `|S|_X`, the right adjoint `Sing_X`, and the Reedy checks.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use crate::bisset::{BiCap, BiSimplicialSet};
use crate::error::{Error, Result};
use crate::graded::{Degeneracies, Graded, OpKind};
use crate::monotone::{increasing_sequences, Generator, Monotone};
use crate::sset::constructions::{product, simplex_index, simplex_monotone, standard_simplex};
use crate::sset::enumerate::{for_each_map, Budget, Constraint};
use crate::sset::{SimplicialMap, SimplicialSet};

/// Read access to the terms and generating structure maps of a (bi)cosimplicial
/// simplicial set, indexed by bidegree (`(n, 0)` in the cosimplicial case).
pub trait Coefficients {
    /// The common simplicial cap of all terms.
    fn simplicial_cap(&self) -> usize;
    fn term_at(&self, deg: (usize, usize)) -> Option<&SimplicialSet>;
    /// The coface `X(deg - e_dir) → X(deg)`.
    fn coface_at(&self, dir: usize, k: usize, deg: (usize, usize)) -> &SimplicialMap;
    /// The codegeneracy `X(deg + e_dir) → X(deg)`.
    fn codegen_at(&self, dir: usize, k: usize, deg: (usize, usize)) -> &SimplicialMap;
}

fn generator_monotones(n: usize) -> Vec<(Generator, Monotone)> {
    // generators with target [n]
    let mut out = Vec::new();
    if n > 0 {
        for k in 0..=n {
            out.push((Generator::Coface(k), Monotone::coface(n, k)));
        }
    }
    for k in 0..=n {
        out.push((Generator::Codegeneracy(k), Monotone::codegeneracy(n, k)));
    }
    out
}

/// A cosimplicial simplicial set truncated at `cocap`.
#[derive(Clone, Debug)]
pub struct CosimplicialSSet {
    cocap: usize,
    terms: Vec<SimplicialSet>,
    /// `cofaces[n][k]: term[n-1] → term[n]`
    cofaces: Vec<Vec<SimplicialMap>>,
    /// `codegens[n][k]: term[n+1] → term[n]`
    codegens: Vec<Vec<SimplicialMap>>,
}

impl CosimplicialSSet {
    pub fn new(
        terms: Vec<SimplicialSet>,
        cofaces: Vec<Vec<SimplicialMap>>,
        codegens: Vec<Vec<SimplicialMap>>,
    ) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::input("cosimplicial object without terms"));
        }
        let cocap = terms.len() - 1;
        let cap = terms[0].cap();
        if let Some(t) = terms.iter().find(|t| t.cap() != cap) {
            return Err(Error::CapMismatch {
                left: cap,
                right: t.cap(),
            });
        }
        if cofaces.len() != cocap + 1 || codegens.len() != cocap + 1 {
            return Err(Error::input("structure map tables have the wrong length"));
        }
        for n in 0..=cocap {
            let want_f = if n > 0 { n + 1 } else { 0 };
            let want_d = if n < cocap { n + 1 } else { 0 };
            if cofaces[n].len() != want_f || codegens[n].len() != want_d {
                return Err(Error::input(format!(
                    "term {n}: wrong number of structure maps"
                )));
            }
            for f in &cofaces[n] {
                f.validate(&terms[n - 1], &terms[n])?;
            }
            for s in &codegens[n] {
                s.validate(&terms[n + 1], &terms[n])?;
            }
        }
        Ok(CosimplicialSSet {
            cocap,
            terms,
            cofaces,
            codegens,
        })
    }

    /// Builds the object from its terms and a rule giving the map induced by
    /// each generating monotone map.
    pub fn from_functor<F>(terms: Vec<SimplicialSet>, map: F) -> Result<Self>
    where
        F: Fn(&Monotone) -> SimplicialMap,
    {
        let cocap = terms.len() - 1;
        let mut cofaces = vec![Vec::new(); cocap + 1];
        let mut codegens = vec![Vec::new(); cocap + 1];
        for n in 0..=cocap {
            if n > 0 {
                cofaces[n] = (0..=n).map(|k| map(&Monotone::coface(n, k))).collect();
            }
            if n < cocap {
                codegens[n] = (0..=n)
                    .map(|k| map(&Monotone::codegeneracy(n, k)))
                    .collect();
            }
        }
        CosimplicialSSet::new(terms, cofaces, codegens)
    }

    pub fn cocap(&self) -> usize {
        self.cocap
    }

    pub fn cap(&self) -> usize {
        self.terms[0].cap()
    }

    pub fn term(&self, n: usize) -> &SimplicialSet {
        &self.terms[n]
    }

    pub fn coface(&self, n: usize, k: usize) -> &SimplicialMap {
        &self.cofaces[n][k]
    }

    pub fn codegen(&self, n: usize, k: usize) -> &SimplicialMap {
        &self.codegens[n][k]
    }

    /// The map `term[m] → term[n]` induced by `θ: [m] → [n]`.
    pub fn apply(&self, theta: &Monotone) -> SimplicialMap {
        let mut d = theta.source();
        let mut out = SimplicialMap::identity(&self.terms[d]);
        for g in theta.covariant_steps() {
            match g {
                Generator::Codegeneracy(k) => {
                    out = out.then(&self.codegens[d - 1][k]);
                    d -= 1;
                }
                Generator::Coface(k) => {
                    out = out.then(&self.cofaces[d + 1][k]);
                    d += 1;
                }
            }
        }
        out
    }

    /// Checks functoriality on all composable pairs of generators, which
    /// amounts to the cosimplicial identities.
    pub fn check_identities(&self) -> Result<()> {
        for n in 0..=self.cocap {
            for (_, g1) in generator_monotones(n) {
                if g1.source() > self.cocap {
                    continue;
                }
                let m = g1.source();
                for (_, g0) in generator_monotones(m) {
                    if g0.source() > self.cocap {
                        continue;
                    }
                    let direct = self.apply(&g1.compose(&g0));
                    let stepwise = self.apply(&g0).then(&self.apply(&g1));
                    if direct != stepwise {
                        return Err(Error::Identity(format!(
                            "cosimplicial identity fails for {:?} ∘ {:?}",
                            g1.values, g0.values
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Precomposition with the order-reversing automorphism of Δ.
    pub fn rev(&self) -> CosimplicialSSet {
        let rv = |tables: &Vec<Vec<SimplicialMap>>| -> Vec<Vec<SimplicialMap>> {
            tables
                .iter()
                .map(|t| t.iter().rev().cloned().collect())
                .collect()
        };
        CosimplicialSSet {
            cocap: self.cocap,
            terms: self.terms.clone(),
            cofaces: rv(&self.cofaces),
            codegens: rv(&self.codegens),
        }
    }
}

impl Coefficients for CosimplicialSSet {
    fn simplicial_cap(&self) -> usize {
        self.cap()
    }

    fn term_at(&self, deg: (usize, usize)) -> Option<&SimplicialSet> {
        if deg.1 == 0 {
            self.terms.get(deg.0)
        } else {
            None
        }
    }

    fn coface_at(&self, _dir: usize, k: usize, deg: (usize, usize)) -> &SimplicialMap {
        &self.cofaces[deg.0][k]
    }

    fn codegen_at(&self, _dir: usize, k: usize, deg: (usize, usize)) -> &SimplicialMap {
        &self.codegens[deg.0][k]
    }
}

/// Natural transformation between cosimplicial simplicial sets.
#[derive(Clone, Debug)]
pub struct CosimplicialTransformation {
    pub components: Vec<SimplicialMap>,
}

impl CosimplicialTransformation {
    pub fn validate(&self, x: &CosimplicialSSet, y: &CosimplicialSSet) -> Result<()> {
        if self.components.len() != x.cocap + 1 || y.cocap != x.cocap {
            return Err(Error::input(
                "transformation has the wrong number of components",
            ));
        }
        for n in 0..=x.cocap {
            self.components[n].validate(&x.terms[n], &y.terms[n])?;
        }
        for n in 0..=x.cocap {
            for k in 0..x.cofaces[n].len() {
                if x.cofaces[n][k].then(&self.components[n])
                    != self.components[n - 1].then(&y.cofaces[n][k])
                {
                    return Err(Error::InvalidMap(format!(
                        "not natural for the coface δ^{k} into {n}"
                    )));
                }
            }
            for k in 0..x.codegens[n].len() {
                if x.codegens[n][k].then(&self.components[n])
                    != self.components[n + 1].then(&y.codegens[n][k])
                {
                    return Err(Error::InvalidMap(format!(
                        "not natural for the codegeneracy σ^{k} onto {n}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn identity(x: &CosimplicialSSet) -> Self {
        CosimplicialTransformation {
            components: x.terms.iter().map(SimplicialMap::identity).collect(),
        }
    }
}

/// A bicosimplicial simplicial set with terms in bidegrees `i + j ≤ total`.
#[derive(Clone, Debug)]
pub struct BiCosimplicialSSet {
    total: usize,
    terms: Vec<Vec<SimplicialSet>>,
    /// `cofaces[dir][i][j][k]: X(deg - e_dir) → X(i,j)`
    cofaces: [Vec<Vec<Vec<SimplicialMap>>>; 2],
    /// `codegens[dir][i][j][k]: X(deg + e_dir) → X(i,j)`
    codegens: [Vec<Vec<Vec<SimplicialMap>>>; 2],
}

impl BiCosimplicialSSet {
    /// Builds the object from its terms and the maps induced by generators;
    /// `map(φ, ψ)` is the map `X(φ.source, ψ.source) → X(φ.target, ψ.target)`.
    pub fn from_functor<T, F>(total: usize, term: T, map: F) -> Result<Self>
    where
        T: Fn(usize, usize) -> SimplicialSet,
        F: Fn(&Monotone, &Monotone) -> SimplicialMap,
    {
        let terms: Vec<Vec<SimplicialSet>> = (0..=total)
            .map(|i| (0..=total - i).map(|j| term(i, j)).collect())
            .collect();
        let cap = terms[0][0].cap();
        for row in &terms {
            for t in row {
                if t.cap() != cap {
                    return Err(Error::CapMismatch {
                        left: cap,
                        right: t.cap(),
                    });
                }
            }
        }
        let shape = || -> Vec<Vec<Vec<SimplicialMap>>> {
            (0..=total)
                .map(|i| vec![Vec::new(); total - i + 1])
                .collect()
        };
        let mut cofaces = [shape(), shape()];
        let mut codegens = [shape(), shape()];
        for i in 0..=total {
            for j in 0..=total - i {
                let (idi, idj) = (Monotone::identity(i), Monotone::identity(j));
                if i > 0 {
                    cofaces[0][i][j] = (0..=i)
                        .map(|k| map(&Monotone::coface(i, k), &idj))
                        .collect();
                }
                if j > 0 {
                    cofaces[1][i][j] = (0..=j)
                        .map(|k| map(&idi, &Monotone::coface(j, k)))
                        .collect();
                }
                if i + j < total {
                    codegens[0][i][j] = (0..=i)
                        .map(|k| map(&Monotone::codegeneracy(i, k), &idj))
                        .collect();
                    codegens[1][i][j] = (0..=j)
                        .map(|k| map(&idi, &Monotone::codegeneracy(j, k)))
                        .collect();
                }
            }
        }
        let x = BiCosimplicialSSet {
            total,
            terms,
            cofaces,
            codegens,
        };
        for i in 0..=total {
            for j in 0..=total - i {
                let t = &x.terms[i][j];
                for (dir, (si, sj)) in [(0, (i.wrapping_sub(1), j)), (1, (i, j.wrapping_sub(1)))] {
                    for f in &x.cofaces[dir][i][j] {
                        f.validate(&x.terms[si][sj], t)?;
                    }
                }
                for (dir, (si, sj)) in [(0, (i + 1, j)), (1, (i, j + 1))] {
                    for s in &x.codegens[dir][i][j] {
                        s.validate(&x.terms[si][sj], t)?;
                    }
                }
            }
        }
        Ok(x)
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn cap(&self) -> usize {
        self.terms[0][0].cap()
    }

    pub fn term(&self, i: usize, j: usize) -> &SimplicialSet {
        &self.terms[i][j]
    }

    /// The map `X(φ.source, ψ.source) → X(φ.target, ψ.target)`. Codegeneracies
    /// are applied before cofaces so that every intermediate bidegree stays
    /// inside the truncation.
    pub fn apply(&self, phi: &Monotone, psi: &Monotone) -> SimplicialMap {
        let (mut i, mut j) = (phi.source(), psi.source());
        let mut out = SimplicialMap::identity(&self.terms[i][j]);
        let split = |m: &Monotone| -> (Vec<Generator>, Vec<Generator>) {
            m.covariant_steps()
                .into_iter()
                .partition(|g| matches!(g, Generator::Codegeneracy(_)))
        };
        let (dh, fh) = split(phi);
        let (dv, fv) = split(psi);
        for g in dh {
            if let Generator::Codegeneracy(k) = g {
                out = out.then(&self.codegens[0][i - 1][j][k]);
                i -= 1;
            }
        }
        for g in dv {
            if let Generator::Codegeneracy(k) = g {
                out = out.then(&self.codegens[1][i][j - 1][k]);
                j -= 1;
            }
        }
        for g in fh {
            if let Generator::Coface(k) = g {
                out = out.then(&self.cofaces[0][i + 1][j][k]);
                i += 1;
            }
        }
        for g in fv {
            if let Generator::Coface(k) = g {
                out = out.then(&self.cofaces[1][i][j + 1][k]);
                j += 1;
            }
        }
        out
    }

    /// Checks functoriality on all composable pairs of generators in either
    /// direction, which covers the identities in each direction and the
    /// commutation of the two.
    pub fn check_identities(&self) -> Result<()> {
        let t = self.total;
        for i in 0..=t {
            for j in 0..=t - i {
                // pairs (g0 then g1) ending at (i, j)
                let mut last: Vec<(Monotone, Monotone)> = Vec::new();
                for (_, g) in generator_monotones(i) {
                    last.push((g, Monotone::identity(j)));
                }
                for (_, g) in generator_monotones(j) {
                    last.push((Monotone::identity(i), g));
                }
                for (p1, q1) in &last {
                    let (a, b) = (p1.source(), q1.source());
                    if a + b > t {
                        continue;
                    }
                    let mut first: Vec<(Monotone, Monotone)> = Vec::new();
                    for (_, g) in generator_monotones(a) {
                        first.push((g, Monotone::identity(b)));
                    }
                    for (_, g) in generator_monotones(b) {
                        first.push((Monotone::identity(a), g));
                    }
                    for (p0, q0) in &first {
                        if p0.source() + q0.source() > t {
                            continue;
                        }
                        let direct = self.apply(&p1.compose(p0), &q1.compose(q0));
                        let stepwise = self.apply(p0, q0).then(&self.apply(p1, q1));
                        if direct != stepwise {
                            return Err(Error::Identity(format!(
                                "bicosimplicial identity fails at ({i},{j})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The cosimplicial object `n ↦ X(n, 0)`.
    pub fn left_edge(&self) -> CosimplicialSSet {
        let t = self.total;
        CosimplicialSSet {
            cocap: t,
            terms: (0..=t).map(|n| self.terms[n][0].clone()).collect(),
            cofaces: (0..=t).map(|n| self.cofaces[0][n][0].clone()).collect(),
            codegens: (0..=t).map(|n| self.codegens[0][n][0].clone()).collect(),
        }
    }

    /// The cosimplicial object `n ↦ X(0, n)`.
    pub fn right_edge(&self) -> CosimplicialSSet {
        let t = self.total;
        CosimplicialSSet {
            cocap: t,
            terms: (0..=t).map(|n| self.terms[0][n].clone()).collect(),
            cofaces: (0..=t).map(|n| self.cofaces[1][0][n].clone()).collect(),
            codegens: (0..=t).map(|n| self.codegens[1][0][n].clone()).collect(),
        }
    }
}

impl Coefficients for BiCosimplicialSSet {
    fn simplicial_cap(&self) -> usize {
        self.cap()
    }

    fn term_at(&self, deg: (usize, usize)) -> Option<&SimplicialSet> {
        self.terms.get(deg.0).and_then(|r| r.get(deg.1))
    }

    fn coface_at(&self, dir: usize, k: usize, deg: (usize, usize)) -> &SimplicialMap {
        &self.cofaces[dir][deg.0][deg.1][k]
    }

    fn codegen_at(&self, dir: usize, k: usize, deg: (usize, usize)) -> &SimplicialMap {
        &self.codegens[dir][deg.0][deg.1][k]
    }
}

/// How a simplex of the shape is written as a degeneracy of a generator:
/// the generator's position and the codegeneracies `(dir, k, degree)` that
/// carry coefficient simplices from the simplex's degree down to it.
#[derive(Clone, Debug)]
struct Normal {
    generator: usize,
    codegens: Vec<(usize, usize, (usize, usize))>,
}

/// The coend `|S|_X`, with enough bookkeeping to send pairs `(s, x)` to
/// their classes.
#[derive(Clone, Debug)]
pub struct Realization {
    pub set: SimplicialSet,
    /// Nondegenerate simplices `(level, id, degree)` of the shape, in order.
    generators: Vec<(usize, usize, (usize, usize))>,
    normal: Vec<Vec<Normal>>,
    /// `offsets[k][g]`: first flat index of generator `g` in level `k`.
    offsets: Vec<Vec<usize>>,
    /// `class[k][flat]`
    class: Vec<Vec<usize>>,
    /// `reps[k][c]`: least `(generator, x)` of each class.
    reps: Vec<Vec<(usize, usize)>>,
}

impl Realization {
    pub fn generators(&self) -> &[(usize, usize, (usize, usize))] {
        &self.generators
    }

    /// Class of the pair `(s, x)` with `s` at shape level `level` and
    /// `x` a `k`-simplex of the coefficient at the degree of `s`.
    pub fn class_of<C: Coefficients + ?Sized>(
        &self,
        coeff: &C,
        level: usize,
        s: usize,
        k: usize,
        x: usize,
    ) -> usize {
        let nf = &self.normal[level][s];
        let mut y = x;
        for &(dir, idx, deg) in &nf.codegens {
            y = coeff.codegen_at(dir, idx, deg).apply(k, y);
        }
        self.class[k][self.offsets[k][nf.generator] + y]
    }

    /// Representative `(level, s, degree, x)` of a `k`-simplex class.
    pub fn representative(&self, k: usize, c: usize) -> (usize, usize, (usize, usize), usize) {
        let (g, x) = self.reps[k][c];
        let (l, s, d) = self.generators[g];
        (l, s, d, x)
    }

    /// Every pair `(level, s, degree, x)` in level `k`, with its class.
    pub fn elements(
        &self,
        k: usize,
    ) -> impl Iterator<Item = ((usize, usize, (usize, usize), usize), usize)> + '_ {
        let offs = &self.offsets[k];
        (0..self.generators.len()).flat_map(move |g| {
            let end = if g + 1 < offs.len() {
                offs[g + 1]
            } else {
                self.class[k].len()
            };
            let (l, s, d) = self.generators[g];
            (offs[g]..end).map(move |f| ((l, s, d, f - offs[g]), self.class[k][f]))
        })
    }

    /// The map out of `|S|_X` given on pairs, checked to be constant on
    /// every class.
    pub fn descend<F>(&self, target: &SimplicialSet, f: F) -> Result<SimplicialMap>
    where
        F: Fn(usize, usize, (usize, usize), usize, usize) -> usize,
    {
        let cap = self.set.cap();
        if target.cap() != cap {
            return Err(Error::CapMismatch {
                left: cap,
                right: target.cap(),
            });
        }
        let mut components = Vec::with_capacity(cap + 1);
        for k in 0..=cap {
            let mut comp = vec![usize::MAX; self.set.count(k)];
            for ((l, s, d, x), c) in self.elements(k) {
                let y = f(l, s, d, k, x);
                if comp[c] == usize::MAX {
                    comp[c] = y;
                } else if comp[c] != y {
                    return Err(Error::InvalidMap(format!(
                        "not constant on the class {c} at level {k}"
                    )));
                }
            }
            components.push(comp);
        }
        let m = SimplicialMap::new(components);
        m.validate(&self.set, target)?;
        Ok(m)
    }
}

/// `|S|_X` for a simplicial or bisimplicial shape `S`.
pub fn realize_graded<G, C>(shape: &G, coeff: &C) -> Result<Realization>
where
    G: Graded + ?Sized,
    C: Coefficients + ?Sized,
{
    let cap = coeff.simplicial_cap();
    let deg = Degeneracies::of(shape);
    let mut generators = Vec::new();
    let mut slot: HashMap<(usize, usize), usize> = HashMap::new();
    for l in 0..shape.num_levels() {
        let d = shape.degree(l);
        for s in deg.nondegenerate(l) {
            if coeff.term_at(d).is_none() {
                return Err(Error::DegreeOutOfRange {
                    what: "realization coefficients".into(),
                    degree: d,
                });
            }
            slot.insert((l, s), generators.len());
            generators.push((l, s, d));
        }
    }
    let normal: Vec<Vec<Normal>> = (0..shape.num_levels())
        .map(|l| {
            (0..shape.level_size(l))
                .map(|s| {
                    let (ops, base_l, base) = deg.decompose(l, s);
                    Normal {
                        generator: slot[&(base_l, base)],
                        codegens: ops
                            .iter()
                            .map(|op| (op.dir, op.index, op.src_degree))
                            .collect(),
                    }
                })
                .collect()
        })
        .collect();
    let tables = shape.op_tables();
    let mut offsets = Vec::with_capacity(cap + 1);
    let mut class = Vec::with_capacity(cap + 1);
    let mut reps = Vec::with_capacity(cap + 1);
    for k in 0..=cap {
        let mut off = Vec::with_capacity(generators.len());
        let mut total = 0;
        for &(_, _, d) in &generators {
            off.push(total);
            total += coeff.term_at(d).unwrap().count(k);
        }
        let mut uf = UnionFind::<usize>::new(total);
        for t in &tables {
            if t.op.kind != OpKind::Face {
                continue;
            }
            let dsrc = t.op.src_degree;
            let dst_deg = shape.degree(t.op.dst);
            for (s, &y) in t.table.iter().enumerate() {
                let Some(&g) = slot.get(&(t.op.src, s)) else {
                    continue;
                };
                let nf = &normal[t.op.dst][y];
                let delta = coeff.coface_at(t.op.dir, t.op.index, dsrc);
                for x in 0..coeff.term_at(dst_deg).unwrap().count(k) {
                    let lhs = off[g] + delta.apply(k, x);
                    let mut z = x;
                    for &(dir, idx, dd) in &nf.codegens {
                        z = coeff.codegen_at(dir, idx, dd).apply(k, z);
                    }
                    uf.union(lhs, off[nf.generator] + z);
                }
            }
        }
        let mut ids = vec![usize::MAX; total];
        let mut cls = vec![0; total];
        let mut rep = Vec::new();
        let mut g = 0;
        for f in 0..total {
            while g + 1 < off.len() && off[g + 1] <= f {
                g += 1;
            }
            let r = uf.find_mut(f);
            if ids[r] == usize::MAX {
                ids[r] = rep.len();
                rep.push((g, f - off[g]));
            }
            cls[f] = ids[r];
        }
        offsets.push(off);
        class.push(cls);
        reps.push(rep);
    }
    let counts: Vec<usize> = reps.iter().map(|r| r.len()).collect();
    let mut faces = vec![Vec::new(); cap + 1];
    let mut degens = vec![Vec::new(); cap + 1];
    for k in 0..=cap {
        let on_reps = |op: &dyn Fn(&SimplicialSet, usize) -> usize, dst: usize| -> Vec<usize> {
            reps[k]
                .iter()
                .map(|&(g, x)| {
                    let t = coeff.term_at(generators[g].2).unwrap();
                    class[dst][offsets[dst][g] + op(t, x)]
                })
                .collect()
        };
        if k > 0 {
            faces[k] = (0..=k)
                .map(|i| on_reps(&|t, x| t.face(k, i, x), k - 1))
                .collect();
        }
        if k < cap {
            degens[k] = (0..=k)
                .map(|i| on_reps(&|t, x| t.degen(k, i, x), k + 1))
                .collect();
        }
    }
    let set = SimplicialSet::from_tables(cap, counts, faces, degens, None)?;
    Ok(Realization {
        set,
        generators,
        normal,
        offsets,
        class,
        reps,
    })
}

pub fn realize(shape: &SimplicialSet, coeff: &CosimplicialSSet) -> Result<SimplicialSet> {
    Ok(realize_graded(shape, coeff)?.set)
}

pub fn realize_bi(shape: &BiSimplicialSet, coeff: &BiCosimplicialSSet) -> Result<SimplicialSet> {
    Ok(realize_graded(shape, coeff)?.set)
}

/// `|f|_X : |S|_X → |S'|_X` for a map of shapes given by its components.
pub fn realize_shape_map<C: Coefficients + ?Sized>(
    src: &Realization,
    tgt: &Realization,
    f: &[Vec<usize>],
    coeff: &C,
) -> Result<SimplicialMap> {
    src.descend(&tgt.set, |l, s, _, k, x| {
        tgt.class_of(coeff, l, f[l][s], k, x)
    })
}

/// `η_* : |S|_X → |S|_Y` for a transformation given degreewise.
pub fn realize_transformation<C, D, E>(
    src: &Realization,
    tgt: &Realization,
    target_coeff: &D,
    eta: E,
) -> Result<SimplicialMap>
where
    C: Coefficients + ?Sized,
    D: Coefficients + ?Sized,
    E: Fn((usize, usize)) -> SimplicialMap,
{
    let mut cache: HashMap<(usize, usize), SimplicialMap> = HashMap::new();
    for &(_, _, d) in src.generators() {
        cache.entry(d).or_insert_with(|| eta(d));
    }
    src.descend(&tgt.set, |l, s, d, k, x| {
        tgt.class_of(target_coeff, l, s, k, cache[&d].apply(k, x))
    })
}

/// `Sing_X(T)` together with the maps realising each simplex.
#[derive(Clone, Debug)]
pub struct Sing {
    pub set: SimplicialSet,
    /// `maps[n][s]`: the map `X_n → T` that is the simplex `s`.
    pub maps: Vec<Vec<SimplicialMap>>,
}

impl Sing {
    pub fn index_of(&self, n: usize, m: &SimplicialMap) -> Option<usize> {
        self.maps[n].iter().position(|x| x == m)
    }
}

/// `Sing_X(T)` truncated at `out_cap`, with `constraint(n, level, s)`
/// restricting the maps `X_n → T` (e.g. to pointed ones).
pub fn sing_constrained<P>(
    coeff: &CosimplicialSSet,
    target: &SimplicialSet,
    out_cap: usize,
    budget: &Budget,
    constraint: P,
) -> Result<Sing>
where
    P: Fn(usize, usize, usize) -> Constraint,
{
    if out_cap > coeff.cocap() {
        return Err(Error::CapShortfall {
            what: "Sing".into(),
            needed: out_cap,
            have: coeff.cocap(),
        });
    }
    let mut maps: Vec<Vec<SimplicialMap>> = Vec::with_capacity(out_cap + 1);
    for n in 0..=out_cap {
        let mut lvl = Vec::new();
        for_each_map(
            coeff.term(n),
            target,
            |l, s| constraint(n, l, s),
            budget,
            |a| {
                lvl.push(SimplicialMap::new(a.to_vec()));
                true
            },
        )?;
        maps.push(lvl);
    }
    let index: Vec<HashMap<&SimplicialMap, usize>> = maps
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, m)| (m, i)).collect())
        .collect();
    let look = |n: usize, m: &SimplicialMap| -> Result<usize> {
        index[n]
            .get(m)
            .copied()
            .ok_or_else(|| Error::InvalidMap("structure map leaves the constrained maps".into()))
    };
    let mut faces = vec![Vec::new(); out_cap + 1];
    let mut degens = vec![Vec::new(); out_cap + 1];
    for n in 0..=out_cap {
        if n > 0 {
            for i in 0..=n {
                faces[n].push(
                    maps[n]
                        .iter()
                        .map(|f| look(n - 1, &coeff.coface(n, i).then(f)))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
        }
        if n < out_cap {
            for i in 0..=n {
                degens[n].push(
                    maps[n]
                        .iter()
                        .map(|f| look(n + 1, &coeff.codegen(n, i).then(f)))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
        }
    }
    let counts = maps.iter().map(|l| l.len()).collect();
    let set = SimplicialSet::from_tables(out_cap, counts, faces, degens, None)?;
    Ok(Sing { set, maps })
}

pub fn sing(
    coeff: &CosimplicialSSet,
    target: &SimplicialSet,
    out_cap: usize,
    budget: &Budget,
) -> Result<Sing> {
    sing_constrained(coeff, target, out_cap, budget, |_, _, _| Constraint::Free)
}

/// `η^* : Sing_Y(T) → Sing_X(T)` for `η: X → Y`.
pub fn sing_transformation(
    eta: &CosimplicialTransformation,
    from: &Sing,
    to: &Sing,
) -> Result<SimplicialMap> {
    let components = from
        .maps
        .iter()
        .enumerate()
        .map(|(n, lvl)| {
            lvl.iter()
                .map(|f| {
                    to.index_of(n, &eta.components[n].then(f))
                        .ok_or_else(|| Error::InvalidMap("η^* leaves the target".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let m = SimplicialMap::new(components);
    m.validate(&from.set, &to.set)?;
    Ok(m)
}

/// `g_* : Sing_X(T) → Sing_X(T')` for `g: T → T'`.
pub fn sing_postcompose(g: &SimplicialMap, from: &Sing, to: &Sing) -> Result<SimplicialMap> {
    let components = from
        .maps
        .iter()
        .enumerate()
        .map(|(n, lvl)| {
            lvl.iter()
                .map(|f| {
                    to.index_of(n, &f.then(g))
                        .ok_or_else(|| Error::InvalidMap("g_* leaves the target".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let m = SimplicialMap::new(components);
    m.validate(&from.set, &to.set)?;
    Ok(m)
}

/// Bisimplicial `Sing_X(T)` in bidegrees up to `cap`, with `constraint(i, j, level, s)`.
pub fn sing_bi<P>(
    coeff: &BiCosimplicialSSet,
    target: &SimplicialSet,
    cap: BiCap,
    budget: &Budget,
    constraint: P,
) -> Result<BiSimplicialSet>
where
    P: Fn(usize, usize, usize, usize) -> Constraint,
{
    let (ch, cv) = cap;
    if ch + cv > coeff.total() {
        return Err(Error::CapShortfall {
            what: "bisimplicial Sing".into(),
            needed: ch + cv,
            have: coeff.total(),
        });
    }
    let mut levels: Vec<Vec<SimplicialMap>> = Vec::new();
    for i in 0..=ch {
        for j in 0..=cv {
            let mut lvl = Vec::new();
            for_each_map(
                coeff.term(i, j),
                target,
                |l, s| constraint(i, j, l, s),
                budget,
                |a| {
                    lvl.push(SimplicialMap::new(a.to_vec()));
                    true
                },
            )?;
            levels.push(lvl);
        }
    }
    let (b, _) = BiSimplicialSet::from_model(
        cap,
        levels,
        |(i, j), f, k| {
            coeff
                .apply(&Monotone::coface(i, k), &Monotone::identity(j))
                .then(f)
        },
        |(i, j), f, k| {
            coeff
                .apply(&Monotone::codegeneracy(i, k), &Monotone::identity(j))
                .then(f)
        },
        |(i, j), f, k| {
            coeff
                .apply(&Monotone::identity(i), &Monotone::coface(j, k))
                .then(f)
        },
        |(i, j), f, k| {
            coeff
                .apply(&Monotone::identity(i), &Monotone::codegeneracy(j, k))
                .then(f)
        },
    )?;
    Ok(b)
}

/// `|∂Δ^n|_X → X_n` is injective in every simplicial degree.
pub fn reedy_boundary_check(coeff: &CosimplicialSSet, n: usize) -> Result<bool> {
    let cap = n.max(1);
    let whole = standard_simplex(n, cap);
    let keep: Vec<Vec<bool>> = (0..=cap)
        .map(|p| {
            (0..whole.count(p))
                .map(|s| !simplex_monotone(n, p, s).is_surjective())
                .collect()
        })
        .collect();
    let (bd, incl) = crate::sset::constructions::subcomplex(&whole, &keep);
    let r = realize_graded(&bd, coeff)?;
    let mut cache: HashMap<Monotone, SimplicialMap> = HashMap::new();
    for &(l, s, _) in r.generators() {
        let theta = simplex_monotone(n, l, incl.apply(l, s));
        cache
            .entry(theta.clone())
            .or_insert_with(|| coeff.apply(&theta));
    }
    let m = r.descend(coeff.term(n), |l, s, _, k, x| {
        cache[&simplex_monotone(n, l, incl.apply(l, s))].apply(k, x)
    })?;
    Ok(m.is_injective())
}

/// `|∂(Δ^i ⊠ Δ^j)|_X → X_{i,j}` is injective in every simplicial degree.
pub fn reedy_boundary_check_bi(coeff: &BiCosimplicialSSet, i: usize, j: usize) -> Result<bool> {
    let bicap = (i.max(1), j.max(1));
    let (bd, incl) = crate::bisset::boundary_bisimplex(i, j, bicap);
    let r = realize_graded(&bd, coeff)?;
    let pair = |l: usize, s: usize| -> (Monotone, Monotone) {
        let (p, q) = bd.bidegree(l);
        let y = incl.components[l][s];
        let nq = crate::monotone::binomial(j + q + 1, q + 1);
        (
            simplex_monotone(i, p, y / nq),
            simplex_monotone(j, q, y % nq),
        )
    };
    let mut cache: HashMap<(Monotone, Monotone), SimplicialMap> = HashMap::new();
    for &(l, s, _) in r.generators() {
        let key = pair(l, s);
        cache
            .entry(key)
            .or_insert_with_key(|k| coeff.apply(&k.0, &k.1));
    }
    let m = r.descend(coeff.term(i, j), |l, s, _, k, x| {
        cache[&pair(l, s)].apply(k, x)
    })?;
    Ok(m.is_injective())
}

/// A codimension-one face of a (bi)simplex: direction and coface index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub dir: usize,
    pub index: usize,
}

/// Outcome of one pullback square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullbackReport {
    pub degree: (usize, usize),
    pub faces: (Face, Face),
    pub bijective: bool,
}

/// Checks that `X(K ∩ K') → X(K) ×_{X(L)} X(K')` is a bijection in every
/// simplicial degree, for faces `K, K'` of the (bi)simplex of degree `deg`.
pub fn pullback_criterion_check<C: Coefficients + ?Sized>(
    coeff: &C,
    deg: (usize, usize),
    a: Face,
    b: Face,
) -> Result<bool> {
    let dim = |f: Face| if f.dir == 0 { deg.0 } else { deg.1 };
    for f in [a, b] {
        if f.dir > 1 || dim(f) == 0 || f.index > dim(f) {
            return Err(Error::input(format!(
                "{f:?} is not a codimension-one face at {deg:?}"
            )));
        }
    }
    let lower = |f: Face, d: (usize, usize)| {
        if f.dir == 0 {
            (d.0 - 1, d.1)
        } else {
            (d.0, d.1 - 1)
        }
    };
    coeff.term_at(deg).ok_or_else(|| Error::DegreeOutOfRange {
        what: "pullback check".into(),
        degree: deg,
    })?;
    let ka = coeff.coface_at(a.dir, a.index, deg);
    let kb = coeff.coface_at(b.dir, b.index, deg);
    let (da, db) = (lower(a, deg), lower(b, deg));
    let ta = coeff.term_at(da).unwrap();
    let tb = coeff.term_at(db).unwrap();

    // corner maps from the intersection into K = a and K' = b
    let corner: Option<((usize, usize), &SimplicialMap, &SimplicialMap)> = if a == b {
        None
    } else if a.dir == b.dir {
        if dim(a) == 1 {
            // faces of Δ^1 meet in the empty simplex
            Some(((usize::MAX, usize::MAX), ka, kb))
        } else if b.index < a.index {
            let d = lower(a, da);
            Some((
                d,
                coeff.coface_at(a.dir, b.index, da),
                coeff.coface_at(a.dir, a.index - 1, db),
            ))
        } else {
            let d = lower(a, da);
            Some((
                d,
                coeff.coface_at(a.dir, b.index - 1, da),
                coeff.coface_at(a.dir, a.index, db),
            ))
        }
    } else {
        let d = lower(b, da);
        Some((
            d,
            coeff.coface_at(b.dir, b.index, da),
            coeff.coface_at(a.dir, a.index, db),
        ))
    };

    for k in 0..=coeff.simplicial_cap() {
        let mut over: HashMap<usize, Vec<usize>> = HashMap::new();
        for y in 0..tb.count(k) {
            over.entry(kb.apply(k, y)).or_default().push(y);
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for x in 0..ta.count(k) {
            if let Some(ys) = over.get(&ka.apply(k, x)) {
                pairs.extend(ys.iter().map(|&y| (x, y)));
            }
        }
        match corner {
            None => {
                // K = K': the diagonal is a bijection iff the face is injective
                if pairs.len() != ta.count(k) {
                    return Ok(false);
                }
            }
            Some(((usize::MAX, _), _, _)) => {
                if !pairs.is_empty() {
                    return Ok(false);
                }
            }
            Some((d, ia, ib)) => {
                let ti = coeff.term_at(d).unwrap();
                let mut image: Vec<(usize, usize)> = (0..ti.count(k))
                    .map(|z| (ia.apply(k, z), ib.apply(k, z)))
                    .collect();
                image.sort_unstable();
                let n = image.len();
                image.dedup();
                pairs.sort_unstable();
                if image.len() != n || image != pairs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// All pullback squares of a bicosimplicial object over bidegrees `i + j ≤ max`.
pub fn pullback_table(coeff: &BiCosimplicialSSet, max: usize) -> Result<Vec<PullbackReport>> {
    let mut out = Vec::new();
    for t in 0..=max.min(coeff.total()) {
        for i in 0..=t {
            let j = t - i;
            let mut faces = Vec::new();
            faces.extend(
                (0..=i)
                    .filter(|_| i > 0)
                    .map(|index| Face { dir: 0, index }),
            );
            faces.extend(
                (0..=j)
                    .filter(|_| j > 0)
                    .map(|index| Face { dir: 1, index }),
            );
            for (p, &a) in faces.iter().enumerate() {
                for &b in &faces[p..] {
                    let ok = pullback_criterion_check(coeff, (i, j), a, b)?;
                    out.push(PullbackReport {
                        degree: (i, j),
                        faces: (a, b),
                        bijective: ok,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// The map `Δ^m → Δ^n` given by post-composition with `θ`.
pub fn simplex_map(theta: &Monotone, cap: usize) -> SimplicialMap {
    SimplicialMap::new(
        (0..=cap)
            .map(|k| {
                increasing_sequences(k + 1, theta.source())
                    .into_iter()
                    .map(|s| {
                        simplex_index(&Monotone::new(
                            theta.target,
                            s.iter().map(|&v| theta.values[v]).collect(),
                        ))
                    })
                    .collect()
            })
            .collect(),
    )
}

/// The cosimplicial object `n ↦ Δ^n`.
pub fn delta(cocap: usize, cap: usize) -> CosimplicialSSet {
    let terms = (0..=cocap).map(|n| standard_simplex(n, cap)).collect();
    CosimplicialSSet::from_functor(terms, |theta| simplex_map(theta, cap))
        .expect("Δ is cosimplicial")
}

/// `φ ∗ ψ : [i] ∗ [j] → [i'] ∗ [j']` on positions of `[i+1+j]`.
pub fn join_monotone(phi: &Monotone, psi: &Monotone) -> Monotone {
    let ii = phi.target;
    let mut values: Vec<usize> = phi.values.clone();
    values.extend(psi.values.iter().map(|&v| ii + 1 + v));
    Monotone::new(ii + 1 + psi.target, values)
}

/// The bicosimplicial object `(i, j) ↦ Δ^i ∗ Δ^j = Δ^{i+1+j}`.
pub fn join_coefficients(total: usize, cap: usize) -> BiCosimplicialSSet {
    BiCosimplicialSSet::from_functor(
        total,
        |i, j| standard_simplex(i + 1 + j, cap),
        |phi, psi| simplex_map(&join_monotone(phi, psi), cap),
    )
    .expect("joins are bicosimplicial")
}

/// Simplices of `J_{i,j}` per level, keyed by their vertex sequence in
/// `Δ^{i+1+j}`; the two collapsed blocks are keys `[LEFT]` and `[RIGHT]`.
pub struct JModel {
    pub set: SimplicialSet,
    pub keys: Vec<Vec<Vec<usize>>>,
    pub index: Vec<HashMap<Vec<usize>, usize>>,
}

const LEFT: usize = usize::MAX;
const RIGHT: usize = usize::MAX - 1;

/// `J_{i,j}`: simplices of `Δ^{i+1+j}` with each block collapsed to a point.
/// Vertex 0 is the left point and vertex 1 the right one.
pub fn j_term(i: usize, j: usize, cap: usize) -> JModel {
    let n = i + 1 + j;
    let keys: Vec<Vec<Vec<usize>>> = (0..=cap)
        .map(|k| {
            let mut lvl = vec![vec![LEFT], vec![RIGHT]];
            lvl.extend(
                increasing_sequences(k + 1, n)
                    .into_iter()
                    .filter(|s| s[0] <= i && s[k] > i),
            );
            lvl
        })
        .collect();
    let expand = |k: usize, s: &Vec<usize>| -> Vec<usize> {
        match s[0] {
            LEFT => vec![0; k + 1],
            RIGHT => vec![n; k + 1],
            _ => s.clone(),
        }
    };
    let labels = keys
        .iter()
        .map(|l| {
            l.iter()
                .map(|s| match s[0] {
                    LEFT => "L".to_string(),
                    RIGHT => "R".to_string(),
                    _ => crate::sset::constructions::seq_label(s),
                })
                .collect()
        })
        .collect();
    let (set, index) = SimplicialSet::from_model(
        cap,
        keys.clone(),
        |k, s, t| {
            let mut e = expand(k, s);
            e.remove(t);
            j_key(i, &e)
        },
        |k, s, t| {
            let mut e = expand(k, s);
            e.insert(t, e[t]);
            j_key(i, &e)
        },
    )
    .expect("J model is closed");
    JModel {
        set: set.with_labels(labels),
        keys,
        index,
    }
}

fn j_key(i: usize, s: &[usize]) -> Vec<usize> {
    if s.iter().all(|&v| v <= i) {
        vec![LEFT]
    } else if s.iter().all(|&v| v > i) {
        vec![RIGHT]
    } else {
        s.to_vec()
    }
}

/// The bicosimplicial object `(i, j) ↦ J_{i,j}`.
pub fn j_coefficients(total: usize, cap: usize) -> BiCosimplicialSSet {
    let models: HashMap<(usize, usize), JModel> = (0..=total)
        .flat_map(|i| (0..=total - i).map(move |j| (i, j)))
        .map(|(i, j)| ((i, j), j_term(i, j, cap)))
        .collect();
    BiCosimplicialSSet::from_functor(
        total,
        |i, j| models[&(i, j)].set.clone(),
        |phi, psi| {
            let src = &models[&(phi.source(), psi.source())];
            let tgt = &models[&(phi.target, psi.target)];
            let jm = join_monotone(phi, psi);
            SimplicialMap::new(
                src.keys
                    .iter()
                    .enumerate()
                    .map(|(k, lvl)| {
                        lvl.iter()
                            .map(|key| {
                                let img = match key[0] {
                                    LEFT | RIGHT => key.clone(),
                                    _ => j_key(
                                        phi.target,
                                        &key.iter().map(|&v| jm.values[v]).collect::<Vec<_>>(),
                                    ),
                                };
                                tgt.index[k][&img]
                            })
                            .collect()
                    })
                    .collect(),
            )
        },
    )
    .expect("J is bicosimplicial")
}

/// The bicosimplicial object `(i, j) ↦ Δ^i × Δ^j`, whose realization is the
/// diagonal.
pub fn delta_box(total: usize, cap: usize) -> BiCosimplicialSSet {
    BiCosimplicialSSet::from_functor(
        total,
        |i, j| product(&standard_simplex(i, cap), &standard_simplex(j, cap)).expect("equal caps"),
        |phi, psi| {
            let f = simplex_map(phi, cap);
            let g = simplex_map(psi, cap);
            let (i, j) = (phi.source(), psi.source());
            let dj = standard_simplex(j, cap);
            let djj = standard_simplex(psi.target, cap);
            let di = standard_simplex(i, cap);
            SimplicialMap::new(
                (0..=cap)
                    .map(|k| {
                        let mut c = Vec::new();
                        for a in 0..di.count(k) {
                            for b in 0..dj.count(k) {
                                c.push(f.apply(k, a) * djj.count(k) + g.apply(k, b));
                            }
                        }
                        c
                    })
                    .collect(),
            )
        },
    )
    .expect("Δ × Δ is bicosimplicial")
}
