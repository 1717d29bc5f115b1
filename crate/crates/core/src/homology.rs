//! Integer homology of truncated simplicial sets via normalized chains and
//! Smith normal form, plus the evidence reports built on it.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::sset::{SimplicialMap, SimplicialSet};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] += v;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a != 0 {
                    for c in 0..other.cols {
                        out.add(r, c, a * other.get(k, c));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }
}

/// Normalized chain complex: basis in degree `k` is the nondegenerate
/// `k`-simplices, `boundary[k]` is `dims[k-1] × dims[k]` (empty for `k = 0`).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub dims: Vec<usize>,
    pub basis: Vec<Vec<usize>>,
    pub boundary: Vec<Matrix>,
}

fn positions(x: &SimplicialSet, basis: &[Vec<usize>]) -> Vec<Vec<Option<usize>>> {
    basis
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let mut pos = vec![None; x.count(k)];
            for (i, &s) in b.iter().enumerate() {
                pos[s] = Some(i);
            }
            pos
        })
        .collect()
}

pub fn normalized_chains(x: &SimplicialSet) -> ChainComplex {
    let basis: Vec<Vec<usize>> = (0..=x.cap()).map(|k| x.nondegenerate(k)).collect();
    let pos = positions(x, &basis);
    let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
    let mut boundary = vec![Matrix::zero(0, dims[0])];
    for k in 1..=x.cap() {
        let mut m = Matrix::zero(dims[k - 1], dims[k]);
        for (c, &s) in basis[k].iter().enumerate() {
            for i in 0..=k {
                if let Some(r) = pos[k - 1][x.face(k, i, s)] {
                    m.add(r, c, if i % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        boundary.push(m);
    }
    ChainComplex {
        dims,
        basis,
        boundary,
    }
}

/// The chain map of `f: X → Y` on normalized chains, one matrix per degree.
pub fn chain_map(f: &SimplicialMap, x: &SimplicialSet, y: &SimplicialSet) -> Vec<Matrix> {
    let (cx, cy) = (normalized_chains(x), normalized_chains(y));
    let pos = positions(y, &cy.basis);
    (0..=x.cap().min(y.cap()))
        .map(|k| {
            let mut m = Matrix::zero(cy.dims[k], cx.dims[k]);
            for (c, &s) in cx.basis[k].iter().enumerate() {
                if let Some(r) = pos[k][f.apply(k, s)] {
                    m.add(r, c, 1);
                }
            }
            m
        })
        .collect()
}

/// Nonzero invariant factors (positive, each dividing the next) and the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

/// Smith normal form over the integers with arbitrary-precision entries.
/// Pivots are the smallest nonzero absolute value, ties broken by position.
pub fn smith_normal_form(m: &Matrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| (0..cols).map(|c| BigInt::from(m.get(r, c))).collect())
        .collect();
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest(&a, t..rows, t..cols) else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let p = a[t][t].clone();
            let mut clean = true;
            for r in t + 1..rows {
                if !a[r][t].is_zero() {
                    let q = &a[r][t] / &p;
                    for c in t..cols {
                        let v = &q * &a[t][c];
                        a[r][c] -= v;
                    }
                    clean &= a[r][t].is_zero();
                }
            }
            for c in t + 1..cols {
                if !a[t][c].is_zero() {
                    let q = &a[t][c] / &p;
                    for row in a.iter_mut().skip(t) {
                        let v = &q * &row[t];
                        row[c] -= v;
                    }
                    clean &= a[t][c].is_zero();
                }
            }
            if !clean {
                // a remainder smaller than the pivot is left in row or column t
                let in_col = smallest(&a, t..rows, t..t + 1).unwrap();
                let in_row = smallest(&a, t..t + 1, t..cols).unwrap();
                let (r, c) = if a[in_col.0][t].abs() <= a[t][in_row.1].abs() {
                    in_col
                } else {
                    in_row
                };
                a.swap(t, r);
                for row in a.iter_mut() {
                    row.swap(t, c);
                }
                continue;
            }
            let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !(&a[r][c] % &p).is_zero()));
            match bad {
                Some(r) => {
                    for c in t..cols {
                        let v = a[r][c].clone();
                        a[t][c] += v;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
        t += 1;
    }
    let rank = factors.len();
    SmithForm { factors, rank }
}

fn smallest(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in rows {
        for c in cols.clone() {
            if a[r][c].is_zero() {
                continue;
            }
            match best {
                Some((br, bc)) if a[br][bc].abs() <= a[r][c].abs() => {}
                _ => best = Some((r, c)),
            }
        }
    }
    best
}

/// `H_k ≅ ℤ^betti ⊕ ⨁ ℤ/t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".into()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

fn group_from(dim: usize, incoming: &SmithForm, outgoing_rank: usize) -> HomologyGroup {
    HomologyGroup {
        betti: dim - outgoing_rank - incoming.rank,
        torsion: incoming
            .factors
            .iter()
            .filter(|f| !f.is_one())
            .cloned()
            .collect(),
    }
}

/// `H_k` of a complex given by its ranks and boundaries; needs `boundary[k+1]`.
pub fn complex_homology(dims: &[usize], boundary: &[Matrix], k: usize) -> HomologyGroup {
    let outgoing = if k == 0 {
        0
    } else {
        smith_normal_form(&boundary[k]).rank
    };
    group_from(dims[k], &smith_normal_form(&boundary[k + 1]), outgoing)
}

/// `H_k(X)`; degrees at or above the cap are refused.
pub fn homology(x: &SimplicialSet, k: usize) -> Result<HomologyGroup> {
    if k >= x.cap() {
        return Err(Error::CapShortfall {
            what: format!("H_{k}"),
            needed: k + 1,
            have: x.cap(),
        });
    }
    let c = normalized_chains(x);
    Ok(complex_homology(&c.dims, &c.boundary, k))
}

/// Path components on vertices: the count and a label per vertex, numbered
/// by first appearance.
pub fn pi0(x: &SimplicialSet) -> (usize, Vec<usize>) {
    let n = x.count(0);
    let mut uf = UnionFind::<usize>::new(n);
    if x.cap() >= 1 {
        for e in 0..x.count(1) {
            uf.union(x.face(1, 0, e), x.face(1, 1, e));
        }
    }
    let mut names = std::collections::HashMap::new();
    let labels: Vec<usize> = (0..n)
        .map(|v| {
            let next = names.len();
            *names.entry(uf.find(v)).or_insert(next)
        })
        .collect();
    (names.len(), labels)
}

/// Whether `f` induces a bijection on path components.
pub fn pi0_bijective(f: &SimplicialMap, x: &SimplicialSet, y: &SimplicialSet) -> bool {
    let ((nx, lx), (ny, ly)) = (pi0(x), pi0(y));
    let mut image = vec![None; nx];
    for v in 0..x.count(0) {
        let w = ly[f.apply(0, v)];
        match image[lx[v]] {
            None => image[lx[v]] = Some(w),
            Some(u) if u != w => return false,
            _ => {}
        }
    }
    let mut hit: Vec<usize> = image.into_iter().flatten().collect();
    hit.sort_unstable();
    hit.dedup();
    nx == ny && hit.len() == ny
}

/// Evidence, not proof: connected and reduced `H_k = 0` for `1 ≤ k ≤ up_to`.
/// Vanishing homology does not certify simple connectivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractibilityEvidence {
    pub components: usize,
    pub groups: Vec<(usize, HomologyGroup)>,
}

impl ContractibilityEvidence {
    pub fn passed(&self) -> bool {
        self.components == 1 && self.groups.iter().all(|(_, g)| g.is_zero())
    }

    /// The first nonvanishing group, if any.
    pub fn witness(&self) -> Option<&(usize, HomologyGroup)> {
        self.groups.iter().find(|(_, g)| !g.is_zero())
    }
}

pub fn contractibility_evidence(
    x: &SimplicialSet,
    up_to: usize,
) -> Result<ContractibilityEvidence> {
    if up_to >= x.cap() {
        return Err(Error::CapShortfall {
            what: "contractibility evidence".into(),
            needed: up_to + 1,
            have: x.cap(),
        });
    }
    let c = normalized_chains(x);
    let snf: Vec<SmithForm> = c
        .boundary
        .iter()
        .take(up_to + 2)
        .map(smith_normal_form)
        .collect();
    let groups = (1..=up_to)
        .map(|k| (k, group_from(c.dims[k], &snf[k + 1], snf[k].rank)))
        .collect();
    Ok(ContractibilityEvidence {
        components: pi0(x).0,
        groups,
    })
}

/// Homology of the algebraic mapping cone of `f` through `up_to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeReport {
    pub groups: Vec<(usize, HomologyGroup)>,
}

impl ConeReport {
    pub fn acyclic(&self) -> bool {
        self.groups.iter().all(|(_, g)| g.is_zero())
    }
}

/// `Cone(f)_k = C_{k-1}(X) ⊕ C_k(Y)` with `∂(a, b) = (−∂a, f(a) + ∂b)`.
pub fn mapping_cone(
    f: &SimplicialMap,
    x: &SimplicialSet,
    y: &SimplicialSet,
) -> (Vec<usize>, Vec<Matrix>) {
    let (cx, cy) = (normalized_chains(x), normalized_chains(y));
    let fm = chain_map(f, x, y);
    let top = x.cap().min(y.cap());
    let xd = |k: usize| if k == 0 { 0 } else { cx.dims[k - 1] };
    let dims: Vec<usize> = (0..=top).map(|k| xd(k) + cy.dims[k]).collect();
    let mut boundary = vec![Matrix::zero(0, dims[0])];
    for k in 1..=top {
        let mut m = Matrix::zero(dims[k - 1], dims[k]);
        let (rx, cxk) = (xd(k - 1), xd(k));
        if k >= 2 {
            let dx = &cx.boundary[k - 1];
            for r in 0..dx.rows {
                for c in 0..dx.cols {
                    m.add(r, c, -dx.get(r, c));
                }
            }
        }
        let f = &fm[k - 1];
        for r in 0..f.rows {
            for c in 0..f.cols {
                m.add(rx + r, c, f.get(r, c));
            }
        }
        let dy = &cy.boundary[k];
        for r in 0..dy.rows {
            for c in 0..dy.cols {
                m.add(rx + r, cxk + c, dy.get(r, c));
            }
        }
        boundary.push(m);
    }
    (dims, boundary)
}

pub fn cone_acyclicity(
    f: &SimplicialMap,
    x: &SimplicialSet,
    y: &SimplicialSet,
    up_to: usize,
) -> Result<ConeReport> {
    let cap = x.cap().min(y.cap());
    if up_to + 1 >= cap {
        return Err(Error::CapShortfall {
            what: "mapping cone".into(),
            needed: up_to + 2,
            have: cap,
        });
    }
    let (dims, boundary) = mapping_cone(f, x, y);
    let groups = (0..=up_to)
        .map(|k| (k, complex_homology(&dims, &boundary, k)))
        .collect();
    Ok(ConeReport { groups })
}
