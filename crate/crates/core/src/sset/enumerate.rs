//! Exhaustive enumeration of simplicial maps by backtracking over the
//! nondegenerate simplices of the source.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use super::{SimplicialMap, SimplicialSet};
use crate::error::{Error, Result};

const DEFAULT_BUDGET: u64 = 50_000_000;

/// Node-count limit shared by the backtracking searches of one computation.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    /// Reads `WURST_BUDGET`, falling back to a default of 5·10^7 nodes.
    pub fn from_env() -> Self {
        let limit = std::env::var("WURST_BUDGET")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Budget::new(limit)
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn tick(&self, what: &str) -> Result<()> {
        let used = self.used.fetch_add(1, Ordering::Relaxed) + 1;
        if used > self.limit {
            return Err(Error::BudgetExceeded {
                what: what.to_string(),
                budget: self.limit,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_env()
    }
}

/// Restriction on the image of one source simplex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    Free,
    Fixed(usize),
    Forbidden,
}

/// Target simplices bucketed by their tuple of faces.
pub struct FaceIndex {
    levels: Vec<HashMap<Vec<usize>, Vec<usize>>>,
    vertices: usize,
}

impl FaceIndex {
    pub fn new(t: &SimplicialSet) -> Self {
        let mut levels = vec![HashMap::new()];
        for n in 1..=t.cap() {
            let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            for y in 0..t.count(n) {
                let key: Vec<usize> = (0..=n).map(|i| t.face(n, i, y)).collect();
                m.entry(key).or_default().push(y);
            }
            levels.push(m);
        }
        FaceIndex {
            levels,
            vertices: t.count(0),
        }
    }

    pub fn with_faces(&self, n: usize, faces: &[usize]) -> Vec<usize> {
        if n == 0 {
            return (0..self.vertices).collect();
        }
        self.levels[n].get(faces).cloned().unwrap_or_default()
    }
}

const UNSET: usize = usize::MAX;

/// Calls `visit` on every simplicial map `src → tgt` satisfying `constraint`,
/// in a deterministic order; `visit` returns `false` to stop early.
pub fn for_each_map<C, V>(
    src: &SimplicialSet,
    tgt: &SimplicialSet,
    constraint: C,
    budget: &Budget,
    mut visit: V,
) -> Result<()>
where
    C: Fn(usize, usize) -> Constraint,
    V: FnMut(&[Vec<usize>]) -> bool,
{
    if src.cap() != tgt.cap() {
        return Err(Error::CapMismatch {
            left: src.cap(),
            right: tgt.cap(),
        });
    }
    let cap = src.cap();
    let deg = src.degeneracies();
    let mut steps: Vec<(usize, usize)> = Vec::new();
    let mut degenerate: Vec<Vec<usize>> = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let mut d = Vec::new();
        for x in 0..src.count(n) {
            if deg.is_nondegenerate(n, x) {
                steps.push((n, x));
            } else {
                d.push(x);
            }
        }
        degenerate.push(d);
    }
    let index = FaceIndex::new(tgt);
    let mut assign: Vec<Vec<usize>> = (0..=cap).map(|n| vec![UNSET; src.count(n)]).collect();

    let fill = |assign: &mut Vec<Vec<usize>>, m: usize| -> bool {
        for &x in &degenerate[m] {
            let (op, w) = deg.parent[m][x].unwrap();
            let y = tgt.degen(m - 1, op.index, assign[m - 1][w]);
            match constraint(m, x) {
                Constraint::Free => {}
                Constraint::Fixed(v) if v == y => {}
                _ => return false,
            }
            assign[m][x] = y;
        }
        true
    };
    let fill_range = |depth: usize| -> (usize, usize) {
        let lo = if depth == 0 {
            0
        } else {
            steps[depth - 1].0 + 1
        };
        let hi = if depth < steps.len() {
            steps[depth].0
        } else {
            cap
        };
        (lo, hi)
    };

    let mut cands: Vec<Vec<usize>> = vec![Vec::new(); steps.len()];
    let mut next: Vec<usize> = vec![0; steps.len()];
    let mut depth = 0usize;
    let mut fresh = true;
    loop {
        if fresh {
            let (lo, hi) = fill_range(depth);
            let ok = (lo..=hi).all(|m| fill(&mut assign, m));
            if !ok {
                fresh = false;
                if depth == 0 {
                    break;
                }
                depth -= 1;
                continue;
            }
            if depth == steps.len() {
                if !visit(&assign) {
                    return Ok(());
                }
                fresh = false;
                if depth == 0 {
                    break;
                }
                depth -= 1;
                continue;
            }
            let (n, x) = steps[depth];
            let faces: Vec<usize> = if n == 0 {
                Vec::new()
            } else {
                (0..=n).map(|i| assign[n - 1][src.face(n, i, x)]).collect()
            };
            let mut c = index.with_faces(n, &faces);
            match constraint(n, x) {
                Constraint::Free => {}
                Constraint::Fixed(v) => c.retain(|&y| y == v),
                Constraint::Forbidden => c.clear(),
            }
            cands[depth] = c;
            next[depth] = 0;
        }
        let (n, x) = steps[depth];
        if next[depth] < cands[depth].len() {
            budget.tick("map enumeration")?;
            assign[n][x] = cands[depth][next[depth]];
            next[depth] += 1;
            depth += 1;
            fresh = true;
        } else {
            fresh = false;
            if depth == 0 {
                break;
            }
            depth -= 1;
        }
    }
    Ok(())
}

/// All simplicial maps `src → tgt` satisfying `constraint`.
pub fn enumerate_maps<C>(
    src: &SimplicialSet,
    tgt: &SimplicialSet,
    constraint: C,
    budget: &Budget,
) -> Result<Vec<SimplicialMap>>
where
    C: Fn(usize, usize) -> Constraint,
{
    let mut out = Vec::new();
    for_each_map(src, tgt, constraint, budget, |a| {
        out.push(SimplicialMap::new(a.to_vec()));
        true
    })?;
    Ok(out)
}

/// Some map satisfying `constraint`, if one exists.
pub fn find_map<C>(
    src: &SimplicialSet,
    tgt: &SimplicialSet,
    constraint: C,
    budget: &Budget,
) -> Result<Option<SimplicialMap>>
where
    C: Fn(usize, usize) -> Constraint,
{
    let mut out = None;
    for_each_map(src, tgt, constraint, budget, |a| {
        out = Some(SimplicialMap::new(a.to_vec()));
        false
    })?;
    Ok(out)
}

pub fn free(_: usize, _: usize) -> Constraint {
    Constraint::Free
}
