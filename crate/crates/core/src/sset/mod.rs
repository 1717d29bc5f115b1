//! Truncated finite simplicial sets stored with all simplices (degenerate ones
//! included) up to a dimension cap.

pub mod constructions;
pub mod directed;
pub mod enumerate;
mod json;

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::graded::{self, Degeneracies, Graded, Op, OpKind, OpTable};
use crate::monotone::{Generator, Monotone};

pub use directed::PointedDirected;
pub use enumerate::{enumerate_maps, Budget, Constraint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    cap: usize,
    counts: Vec<usize>,
    /// `faces[n][i][x] = d_i x` for `1 <= n <= cap`; `faces[0]` is empty.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degens[n][i][x] = s_i x` for `n < cap`; `degens[cap]` is empty.
    degens: Vec<Vec<Vec<usize>>>,
    labels: Option<Vec<Vec<String>>>,
}

impl SimplicialSet {
    /// Builds a simplicial set from raw operator tables, checking shapes and
    /// ranges (not the simplicial identities, see [`check_identities`]).
    ///
    /// [`check_identities`]: SimplicialSet::check_identities
    pub fn from_tables(
        cap: usize,
        counts: Vec<usize>,
        faces: Vec<Vec<Vec<usize>>>,
        degens: Vec<Vec<Vec<usize>>>,
        labels: Option<Vec<Vec<String>>>,
    ) -> Result<Self> {
        if counts.len() != cap + 1 || faces.len() != cap + 1 || degens.len() != cap + 1 {
            return Err(Error::input("level arrays must have length cap + 1"));
        }
        for n in 0..=cap {
            let want_faces = if n == 0 { 0 } else { n + 1 };
            if faces[n].len() != want_faces {
                return Err(Error::input(format!(
                    "level {n}: expected {want_faces} face maps"
                )));
            }
            for t in &faces[n] {
                if t.len() != counts[n] || t.iter().any(|&y| y >= counts[n - 1]) {
                    return Err(Error::input(format!("level {n}: malformed face table")));
                }
            }
            let want_degens = if n < cap { n + 1 } else { 0 };
            if degens[n].len() != want_degens {
                return Err(Error::input(format!(
                    "level {n}: expected {want_degens} degeneracy maps"
                )));
            }
            for t in &degens[n] {
                if t.len() != counts[n] || t.iter().any(|&y| y >= counts[n + 1]) {
                    return Err(Error::input(format!(
                        "level {n}: malformed degeneracy table"
                    )));
                }
            }
        }
        if let Some(l) = &labels {
            if l.len() != cap + 1 || (0..=cap).any(|n| l[n].len() != counts[n]) {
                return Err(Error::input("label table does not match level sizes"));
            }
        }
        Ok(SimplicialSet {
            cap,
            counts,
            faces,
            degens,
            labels,
        })
    }

    /// Builds a simplicial set from an explicit model: `levels[n]` lists the
    /// n-simplices as keys and `face`/`degen` compute operators on keys.
    /// Returns the set and a key index per level.
    pub fn from_model<K, F, D>(
        cap: usize,
        levels: Vec<Vec<K>>,
        face: F,
        degen: D,
    ) -> Result<(Self, Vec<HashMap<K, usize>>)>
    where
        K: Eq + Hash + Clone,
        F: Fn(usize, &K, usize) -> K,
        D: Fn(usize, &K, usize) -> K,
    {
        if levels.len() != cap + 1 {
            return Err(Error::input("model must list cap + 1 levels"));
        }
        let index: Vec<HashMap<K, usize>> = levels
            .iter()
            .map(|l| l.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect())
            .collect();
        for n in 0..=cap {
            if index[n].len() != levels[n].len() {
                return Err(Error::input(format!(
                    "level {n}: duplicate simplices in model"
                )));
            }
        }
        let lookup = |n: usize, k: &K| -> Result<usize> {
            index[n]
                .get(k)
                .copied()
                .ok_or_else(|| Error::input(format!("model operator leaves level {n}")))
        };
        let mut faces = vec![Vec::new(); cap + 1];
        let mut degens = vec![Vec::new(); cap + 1];
        for n in 0..=cap {
            if n > 0 {
                for i in 0..=n {
                    faces[n].push(
                        levels[n]
                            .iter()
                            .map(|x| lookup(n - 1, &face(n, x, i)))
                            .collect::<Result<Vec<_>>>()?,
                    );
                }
            }
            if n < cap {
                for i in 0..=n {
                    degens[n].push(
                        levels[n]
                            .iter()
                            .map(|x| lookup(n + 1, &degen(n, x, i)))
                            .collect::<Result<Vec<_>>>()?,
                    );
                }
            }
        }
        let counts = levels.iter().map(|l| l.len()).collect();
        let set = SimplicialSet::from_tables(cap, counts, faces, degens, None)?;
        Ok((set, index))
    }

    /// The simplicial set with no simplices.
    pub fn empty(cap: usize) -> Self {
        SimplicialSet {
            cap,
            counts: vec![0; cap + 1],
            faces: (0..=cap)
                .map(|n| {
                    if n == 0 {
                        Vec::new()
                    } else {
                        vec![Vec::new(); n + 1]
                    }
                })
                .collect(),
            degens: (0..=cap)
                .map(|n| {
                    if n < cap {
                        vec![Vec::new(); n + 1]
                    } else {
                        Vec::new()
                    }
                })
                .collect(),
            labels: None,
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn count(&self, n: usize) -> usize {
        self.counts[n]
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    pub fn degen(&self, n: usize, i: usize, x: usize) -> usize {
        self.degens[n][i][x]
    }

    pub fn face_table(&self, n: usize, i: usize) -> &[usize] {
        &self.faces[n][i]
    }

    pub fn degen_table(&self, n: usize, i: usize) -> &[usize] {
        &self.degens[n][i]
    }

    pub fn labels(&self) -> Option<&Vec<Vec<String>>> {
        self.labels.as_ref()
    }

    pub fn label(&self, n: usize, x: usize) -> String {
        match &self.labels {
            Some(l) => l[n][x].clone(),
            None => x.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<Vec<String>>) -> Self {
        assert!(labels.len() == self.cap + 1);
        assert!((0..=self.cap).all(|n| labels[n].len() == self.counts[n]));
        self.labels = Some(labels);
        self
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn is_empty(&self) -> bool {
        self.counts[0] == 0
    }

    pub fn degeneracies(&self) -> Degeneracies {
        Degeneracies::of(self)
    }

    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        self.degeneracies().nondegenerate(n)
    }

    /// Number of nondegenerate simplices in each dimension.
    pub fn nondegenerate_counts(&self) -> Vec<usize> {
        let d = self.degeneracies();
        (0..=self.cap).map(|n| d.nondegenerate(n).len()).collect()
    }

    /// Highest dimension carrying a nondegenerate simplex, if any.
    pub fn dimension(&self) -> Option<usize> {
        let c = self.nondegenerate_counts();
        (0..=self.cap).rev().find(|&n| c[n] > 0)
    }

    /// `θ^*(x)` for a simplex `x` of dimension `θ.target`.
    pub fn apply_monotone(&self, x: usize, theta: &Monotone) -> usize {
        let mut cur = x;
        let mut n = theta.target;
        for g in theta.contravariant_steps() {
            match g {
                Generator::Coface(i) => {
                    cur = self.faces[n][i][cur];
                    n -= 1;
                }
                Generator::Codegeneracy(i) => {
                    cur = self.degens[n][i][cur];
                    n += 1;
                }
            }
        }
        cur
    }

    /// `vertices[n][x]` lists the vertices of `x` in order.
    pub fn vertex_table(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<Vec<usize>>> = vec![(0..self.counts[0]).map(|v| vec![v]).collect()];
        for n in 1..=self.cap {
            let prev = &out[n - 1];
            let lvl = (0..self.counts[n])
                .map(|x| {
                    let mut v = prev[self.faces[n][n][x]].clone();
                    v.push(*prev[self.faces[n][0][x]].last().unwrap());
                    v
                })
                .collect();
            out.push(lvl);
        }
        out
    }

    /// Exhaustive check of the simplicial identities within the cap.
    pub fn check_identities(&self) -> Result<()> {
        let fail = |s: String| Err(Error::Identity(s));
        for n in 0..=self.cap {
            for x in 0..self.counts[n] {
                if n >= 2 {
                    for j in 0..=n {
                        for i in 0..j {
                            let a = self.faces[n - 1][i][self.faces[n][j][x]];
                            let b = self.faces[n - 1][j - 1][self.faces[n][i][x]];
                            if a != b {
                                return fail(format!(
                                    "d_{i} d_{j} != d_{} d_{i} at ({n},{x})",
                                    j - 1
                                ));
                            }
                        }
                    }
                }
                if n + 2 <= self.cap {
                    for j in 0..=n {
                        for i in 0..=j {
                            let a = self.degens[n + 1][i][self.degens[n][j][x]];
                            let b = self.degens[n + 1][j + 1][self.degens[n][i][x]];
                            if a != b {
                                return fail(format!(
                                    "s_{i} s_{j} != s_{} s_{i} at ({n},{x})",
                                    j + 1
                                ));
                            }
                        }
                    }
                }
                if n < self.cap {
                    for j in 0..=n {
                        let s = self.degens[n][j][x];
                        for i in 0..=n + 1 {
                            let lhs = self.faces[n + 1][i][s];
                            let rhs = if i == j || i == j + 1 {
                                x
                            } else if i < j {
                                self.degens[n - 1][j - 1][self.faces[n][i][x]]
                            } else {
                                self.degens[n - 1][j][self.faces[n][i - 1][x]]
                            };
                            if lhs != rhs {
                                return fail(format!("d_{i} s_{j} wrong at ({n},{x})"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_isomorphic(&self, other: &SimplicialSet) -> Option<SimplicialMap> {
        if self.cap != other.cap {
            return None;
        }
        graded::find_isomorphism(self, other).map(|components| SimplicialMap { components })
    }
}

impl Graded for SimplicialSet {
    fn num_levels(&self) -> usize {
        self.cap + 1
    }

    fn level_size(&self, level: usize) -> usize {
        self.counts[level]
    }

    fn degree(&self, level: usize) -> (usize, usize) {
        (level, 0)
    }

    fn op_tables(&self) -> Vec<OpTable<'_>> {
        let mut out = Vec::new();
        for n in 0..=self.cap {
            for (i, t) in self.faces[n].iter().enumerate() {
                out.push(OpTable {
                    op: Op {
                        kind: OpKind::Face,
                        dir: 0,
                        index: i,
                        src: n,
                        dst: n - 1,
                        src_degree: (n, 0),
                    },
                    table: t,
                });
            }
            for (i, t) in self.degens[n].iter().enumerate() {
                out.push(OpTable {
                    op: Op {
                        kind: OpKind::Degen,
                        dir: 0,
                        index: i,
                        src: n,
                        dst: n + 1,
                        src_degree: (n, 0),
                    },
                    table: t,
                });
            }
        }
        out
    }
}

/// Level-wise function between simplicial sets. Source and target are not
/// stored; [`SimplicialMap::validate`] checks a map against a pair of sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialMap {
    pub components: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn new(components: Vec<Vec<usize>>) -> Self {
        SimplicialMap { components }
    }

    pub fn identity(x: &SimplicialSet) -> Self {
        SimplicialMap {
            components: (0..=x.cap).map(|n| (0..x.counts[n]).collect()).collect(),
        }
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.components[n][x]
    }

    pub fn validate(&self, source: &SimplicialSet, target: &SimplicialSet) -> Result<()> {
        if source.cap != target.cap {
            return Err(Error::CapMismatch {
                left: source.cap,
                right: target.cap,
            });
        }
        if graded::is_map(source, target, &self.components) {
            Ok(())
        } else {
            Err(Error::InvalidMap(
                "components do not commute with the operators".into(),
            ))
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> SimplicialMap {
        SimplicialMap {
            components: self
                .components
                .iter()
                .enumerate()
                .map(|(n, c)| c.iter().map(|&y| other.components[n][y]).collect())
                .collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|c| {
            let mut v = c.clone();
            v.sort_unstable();
            v.windows(2).all(|w| w[0] != w[1])
        })
    }

    pub fn is_surjective(&self, target: &SimplicialSet) -> bool {
        self.components.iter().enumerate().all(|(n, c)| {
            let mut hit = vec![false; target.count(n)];
            c.iter().for_each(|&y| hit[y] = true);
            hit.into_iter().all(|h| h)
        })
    }

    pub fn is_bijective(&self, target: &SimplicialSet) -> bool {
        self.is_injective() && self.is_surjective(target)
    }

    /// The inverse of a bijective map.
    pub fn inverse(&self) -> SimplicialMap {
        SimplicialMap {
            components: self
                .components
                .iter()
                .map(|c| {
                    let mut inv = vec![0; c.len()];
                    for (x, &y) in c.iter().enumerate() {
                        inv[y] = x;
                    }
                    inv
                })
                .collect(),
        }
    }
}
