//! Operator-table view shared by simplicial and bisimplicial sets, with the
//! algorithms that only need that view: degeneracy decomposition and
//! isomorphism search.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpKind {
    Face,
    Degen,
}

/// One face or degeneracy operator between two flattened levels.
///
/// `dir` is 0 for simplicial sets and 0/1 (horizontal/vertical) for
/// bisimplicial sets. `src_degree` is the (bi)degree the operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Op {
    pub kind: OpKind,
    pub dir: usize,
    pub index: usize,
    pub src: usize,
    pub dst: usize,
    pub src_degree: (usize, usize),
}

pub struct OpTable<'a> {
    pub op: Op,
    pub table: &'a [usize],
}

/// A presheaf presented by finite levels and operator tables.
pub trait Graded {
    fn num_levels(&self) -> usize;
    fn level_size(&self, level: usize) -> usize;
    fn degree(&self, level: usize) -> (usize, usize);
    fn op_tables(&self) -> Vec<OpTable<'_>>;
}

/// For every simplex, one way of writing it as a degeneracy of a simplex one
/// level down (`None` for nondegenerate simplices). The first operator table
/// containing a simplex in its image wins, so the choice is iso-invariant.
pub struct Degeneracies {
    pub parent: Vec<Vec<Option<(Op, usize)>>>,
}

impl Degeneracies {
    pub fn of<G: Graded + ?Sized>(g: &G) -> Self {
        let mut parent: Vec<Vec<Option<(Op, usize)>>> = (0..g.num_levels())
            .map(|l| vec![None; g.level_size(l)])
            .collect();
        for t in g.op_tables() {
            if t.op.kind != OpKind::Degen {
                continue;
            }
            for (w, &x) in t.table.iter().enumerate() {
                if parent[t.op.dst][x].is_none() {
                    parent[t.op.dst][x] = Some((t.op, w));
                }
            }
        }
        Degeneracies { parent }
    }

    pub fn is_nondegenerate(&self, level: usize, x: usize) -> bool {
        self.parent[level][x].is_none()
    }

    /// Writes `x = s_{ops[0]} s_{ops[1]} ... (base)`.
    pub fn decompose(&self, level: usize, x: usize) -> (Vec<Op>, usize, usize) {
        let mut ops = Vec::new();
        let (mut l, mut y) = (level, x);
        while let Some((op, w)) = self.parent[l][y] {
            ops.push(op);
            l = op.src;
            y = w;
        }
        (ops, l, y)
    }

    pub fn nondegenerate(&self, level: usize) -> Vec<usize> {
        (0..self.parent[level].len())
            .filter(|&x| self.parent[level][x].is_none())
            .collect()
    }
}

fn op_signature<G: Graded + ?Sized>(g: &G) -> Vec<Op> {
    g.op_tables().iter().map(|t| t.op).collect()
}

/// Iso-invariant fingerprint of every simplex: nondegeneracy, how many
/// nondegenerate simplices have it as their face under each operator, and one
/// round of refinement through its own faces.
fn fingerprints<G: Graded + ?Sized>(g: &G, deg: &Degeneracies) -> Vec<Vec<u64>> {
    let tables = g.op_tables();
    let n = g.num_levels();
    let mut counts: Vec<Vec<Vec<u32>>> = (0..n)
        .map(|l| vec![vec![0u32; tables.len()]; g.level_size(l)])
        .collect();
    for (k, t) in tables.iter().enumerate() {
        if t.op.kind != OpKind::Face {
            continue;
        }
        for (z, &x) in t.table.iter().enumerate() {
            if deg.is_nondegenerate(t.op.src, z) {
                counts[t.op.dst][x][k] += 1;
            }
        }
    }
    let base: Vec<Vec<u64>> = (0..n)
        .map(|l| {
            (0..g.level_size(l))
                .map(|x| {
                    let mut h = DefaultHasher::new();
                    deg.is_nondegenerate(l, x).hash(&mut h);
                    deg.parent[l][x]
                        .map(|(op, _)| (op.dir, op.index))
                        .hash(&mut h);
                    counts[l][x].hash(&mut h);
                    h.finish()
                })
                .collect()
        })
        .collect();
    (0..n)
        .map(|l| {
            (0..g.level_size(l))
                .map(|x| {
                    let mut h = DefaultHasher::new();
                    base[l][x].hash(&mut h);
                    for t in &tables {
                        if t.op.kind == OpKind::Face && t.op.src == l {
                            base[t.op.dst][t.table[x]].hash(&mut h);
                        }
                    }
                    h.finish()
                })
                .collect()
        })
        .collect()
}

struct IsoSearch<'a> {
    a_tables: Vec<OpTable<'a>>,
    b_tables: Vec<OpTable<'a>>,
    a_deg: Degeneracies,
    b_deg: Degeneracies,
    a_fp: Vec<Vec<u64>>,
    b_fp: Vec<Vec<u64>>,
    assigned: Vec<Vec<usize>>,
    used: Vec<Vec<bool>>,
    trail: Vec<(usize, usize)>,
    /// face operator indices grouped by source level
    faces_from: Vec<Vec<usize>>,
}

const UNSET: usize = usize::MAX;

impl<'a> IsoSearch<'a> {
    fn assign(&mut self, level: usize, x: usize, y: usize) -> bool {
        let cur = self.assigned[level][x];
        if cur != UNSET {
            return cur == y;
        }
        if self.used[level][y] || self.a_fp[level][x] != self.b_fp[level][y] {
            return false;
        }
        match (self.a_deg.parent[level][x], self.b_deg.parent[level][y]) {
            (None, None) => {}
            (Some((oa, _)), Some((ob, _))) if oa == ob => {}
            _ => return false,
        }
        self.assigned[level][x] = y;
        self.used[level][y] = true;
        self.trail.push((level, x));
        if let (Some((_, wa)), Some((op, wb))) =
            (self.a_deg.parent[level][x], self.b_deg.parent[level][y])
        {
            if !self.assign(op.src, wa, wb) {
                return false;
            }
        }
        for k in 0..self.faces_from[level].len() {
            let t = self.faces_from[level][k];
            let dst = self.a_tables[t].op.dst;
            let fx = self.a_tables[t].table[x];
            let fy = self.b_tables[t].table[y];
            if !self.assign(dst, fx, fy) {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (l, x) = self.trail.pop().unwrap();
            let y = self.assigned[l][x];
            self.used[l][y] = false;
            self.assigned[l][x] = UNSET;
        }
    }

    fn extend_degenerates(&mut self) -> bool {
        for l in 0..self.assigned.len() {
            for x in 0..self.assigned[l].len() {
                if self.assigned[l][x] != UNSET {
                    continue;
                }
                let Some((op, w)) = self.a_deg.parent[l][x] else {
                    return false;
                };
                let fw = self.assigned[op.src][w];
                if fw == UNSET {
                    return false;
                }
                let t = self
                    .b_tables
                    .iter()
                    .find(|t| t.op == op)
                    .expect("matching signatures");
                if !self.assign(l, x, t.table[fw]) {
                    return false;
                }
            }
        }
        true
    }

    fn search(&mut self, order: &[(usize, usize)], pos: usize) -> bool {
        if pos == order.len() {
            let mark = self.trail.len();
            if self.extend_degenerates() {
                return true;
            }
            self.undo_to(mark);
            return false;
        }
        let (l, x) = order[pos];
        if self.assigned[l][x] != UNSET {
            return self.search(order, pos + 1);
        }
        let fp = self.a_fp[l][x];
        for y in 0..self.used[l].len() {
            if self.used[l][y] || self.b_fp[l][y] != fp || !self.b_deg.is_nondegenerate(l, y) {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(l, x, y) && self.search(order, pos + 1) {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// Every (0,0)-level simplex reachable from `x` through face operators.
fn vertex_sets<G: Graded + ?Sized>(g: &G) -> Vec<Vec<Vec<usize>>> {
    let tables = g.op_tables();
    let mut levels: Vec<usize> = (0..g.num_levels()).collect();
    levels.sort_by_key(|&l| {
        let (a, b) = g.degree(l);
        a + b
    });
    let mut out: Vec<Vec<Vec<usize>>> = (0..g.num_levels())
        .map(|l| vec![Vec::new(); g.level_size(l)])
        .collect();
    for &l in &levels {
        let (a, b) = g.degree(l);
        for x in 0..g.level_size(l) {
            if a + b == 0 {
                out[l][x] = vec![x];
                continue;
            }
            let mut vs = Vec::new();
            for t in tables
                .iter()
                .filter(|t| t.op.kind == OpKind::Face && t.op.src == l)
            {
                vs.extend_from_slice(&out[t.op.dst][t.table[x]]);
            }
            vs.sort_unstable();
            vs.dedup();
            out[l][x] = vs;
        }
    }
    out
}

/// Searches for an isomorphism `a → b`, returned as per-level components.
pub fn find_isomorphism<G: Graded + ?Sized>(a: &G, b: &G) -> Option<Vec<Vec<usize>>> {
    if a.num_levels() != b.num_levels() || op_signature(a) != op_signature(b) {
        return None;
    }
    for l in 0..a.num_levels() {
        if a.level_size(l) != b.level_size(l) || a.degree(l) != b.degree(l) {
            return None;
        }
    }
    let a_deg = Degeneracies::of(a);
    let b_deg = Degeneracies::of(b);
    let a_fp = fingerprints(a, &a_deg);
    let b_fp = fingerprints(b, &b_deg);
    for l in 0..a.num_levels() {
        let mut fa = a_fp[l].clone();
        let mut fb = b_fp[l].clone();
        fa.sort_unstable();
        fb.sort_unstable();
        if fa != fb {
            return None;
        }
    }

    let a_tables = a.op_tables();
    let b_tables = b.op_tables();
    let mut faces_from = vec![Vec::new(); a.num_levels()];
    for (k, t) in a_tables.iter().enumerate() {
        if t.op.kind == OpKind::Face {
            faces_from[t.op.src].push(k);
        }
    }

    // Nondegenerate simplices, highest total degree first, grown outwards from
    // already placed vertices so that propagation prunes early.
    let verts = vertex_sets(a);
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for l in 0..a.num_levels() {
        for x in a_deg.nondegenerate(l) {
            pending.push((l, x));
        }
    }
    pending.sort_by_key(|&(l, x)| {
        let (p, q) = a.degree(l);
        (std::cmp::Reverse(p + q), l, x)
    });
    let mut order = Vec::with_capacity(pending.len());
    let mut touched: HashSet<usize> = HashSet::new();
    let mut taken = vec![false; pending.len()];
    for _ in 0..pending.len() {
        let pick = (0..pending.len())
            .filter(|&k| !taken[k])
            .find(|&k| {
                let (l, x) = pending[k];
                verts[l][x].iter().any(|v| touched.contains(v))
            })
            .or_else(|| (0..pending.len()).find(|&k| !taken[k]))
            .unwrap();
        taken[pick] = true;
        let (l, x) = pending[pick];
        touched.extend(verts[l][x].iter().copied());
        order.push((l, x));
    }

    let mut s = IsoSearch {
        assigned: (0..a.num_levels())
            .map(|l| vec![UNSET; a.level_size(l)])
            .collect(),
        used: (0..a.num_levels())
            .map(|l| vec![false; a.level_size(l)])
            .collect(),
        a_tables,
        b_tables,
        a_deg,
        b_deg,
        a_fp,
        b_fp,
        trail: Vec::new(),
        faces_from,
    };
    if s.search(&order, 0) {
        Some(s.assigned)
    } else {
        None
    }
}

/// Checks that `components` defines a map `a → b` commuting with every operator.
pub fn is_map<G: Graded + ?Sized>(a: &G, b: &G, components: &[Vec<usize>]) -> bool {
    if components.len() != a.num_levels() {
        return false;
    }
    for l in 0..a.num_levels() {
        if components[l].len() != a.level_size(l)
            || components[l].iter().any(|&y| y >= b.level_size(l))
        {
            return false;
        }
    }
    let bt = b.op_tables();
    for t in a.op_tables() {
        let Some(u) = bt.iter().find(|u| u.op == t.op) else {
            return false;
        };
        for x in 0..t.table.len() {
            if components[t.op.dst][t.table[x]] != u.table[components[t.op.src][x]] {
                return false;
            }
        }
    }
    true
}
