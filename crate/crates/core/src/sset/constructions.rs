//! Standard simplices, products, joins, colimits and suspensions.

use petgraph::unionfind::UnionFind;

use super::{PointedDirected, SimplicialMap, SimplicialSet};
use crate::error::{Error, Result};
use crate::monotone::{increasing_sequences, Monotone};

pub(crate) fn seq_label(values: &[usize]) -> String {
    if values.iter().all(|&v| v < 10) {
        values.iter().map(|v| v.to_string()).collect()
    } else {
        values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Δ^n: k-simplices are the monotone maps `[k] → [n]`, listed
/// lexicographically.
pub fn standard_simplex(n: usize, cap: usize) -> SimplicialSet {
    let levels: Vec<Vec<Vec<usize>>> = (0..=cap).map(|k| increasing_sequences(k + 1, n)).collect();
    let labels = levels
        .iter()
        .map(|l| l.iter().map(|s| seq_label(s)).collect())
        .collect();
    let (set, _) = SimplicialSet::from_model(
        cap,
        levels,
        |_, s, i| {
            let mut t = s.clone();
            t.remove(i);
            t
        },
        |_, s, i| {
            let mut t = s.clone();
            t.insert(i, s[i]);
            t
        },
    )
    .expect("standard simplex model is closed");
    set.with_labels(labels)
}

pub fn point(cap: usize) -> SimplicialSet {
    standard_simplex(0, cap)
}

/// The monotone map `[k] → [n]` with index `idx` in `standard_simplex(n, _)`.
pub fn simplex_monotone(n: usize, k: usize, idx: usize) -> Monotone {
    let mut values = Vec::with_capacity(k + 1);
    let mut rem = idx;
    let mut w = 0;
    for p in 0..=k {
        let rest = k - p;
        loop {
            let c = crate::monotone::binomial(n - w + rest, rest);
            if rem < c {
                break;
            }
            rem -= c;
            w += 1;
        }
        values.push(w);
    }
    Monotone::new(n, values)
}

/// Index of the monotone map `theta: [k] → [n]` inside `standard_simplex(n, _)`.
pub fn simplex_index(theta: &Monotone) -> usize {
    // Rank of a weakly increasing sequence in lexicographic order.
    let n = theta.target;
    let len = theta.values.len();
    let mut rank = 0;
    let mut lo = 0;
    for (p, &v) in theta.values.iter().enumerate() {
        let rest = len - p - 1;
        for w in lo..v {
            rank += crate::monotone::binomial(n - w + rest, rest);
        }
        lo = v;
    }
    rank
}

/// Sub-simplicial set generated by the marked simplices (closed under faces
/// and degeneracies), together with its inclusion.
pub fn subcomplex(x: &SimplicialSet, marked: &[Vec<bool>]) -> (SimplicialSet, SimplicialMap) {
    let cap = x.cap();
    let mut keep: Vec<Vec<bool>> = marked.to_vec();
    for n in (1..=cap).rev() {
        for s in 0..x.count(n) {
            if keep[n][s] {
                for i in 0..=n {
                    let f = x.face(n, i, s);
                    keep[n - 1][f] = true;
                }
            }
        }
    }
    for n in 0..cap {
        for s in 0..x.count(n) {
            if keep[n][s] {
                for i in 0..=n {
                    let d = x.degen(n, i, s);
                    keep[n + 1][d] = true;
                }
            }
        }
    }
    restrict(x, &keep)
}

/// Restriction to a set of simplices already closed under all operators.
pub(crate) fn restrict(x: &SimplicialSet, keep: &[Vec<bool>]) -> (SimplicialSet, SimplicialMap) {
    let cap = x.cap();
    let incl: Vec<Vec<usize>> = (0..=cap)
        .map(|n| (0..x.count(n)).filter(|&s| keep[n][s]).collect())
        .collect();
    let mut pos: Vec<Vec<usize>> = (0..=cap).map(|n| vec![usize::MAX; x.count(n)]).collect();
    for n in 0..=cap {
        for (k, &s) in incl[n].iter().enumerate() {
            pos[n][s] = k;
        }
    }
    let faces = (0..=cap)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    incl[n]
                        .iter()
                        .map(|&s| pos[n - 1][x.face(n, i, s)])
                        .collect()
                })
                .collect()
        })
        .collect();
    let degens = (0..=cap)
        .map(|n| {
            if n == cap {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    incl[n]
                        .iter()
                        .map(|&s| pos[n + 1][x.degen(n, i, s)])
                        .collect()
                })
                .collect()
        })
        .collect();
    let labels = x.labels().map(|l| {
        (0..=cap)
            .map(|n| incl[n].iter().map(|&s| l[n][s].clone()).collect())
            .collect()
    });
    let counts = incl.iter().map(|v| v.len()).collect();
    let sub = SimplicialSet::from_tables(cap, counts, faces, degens, labels)
        .expect("restriction of a closed family");
    (sub, SimplicialMap::new(incl))
}

/// ∂Δ^n: simplices of Δ^n that are not surjective.
pub fn boundary(n: usize, cap: usize) -> SimplicialSet {
    let delta = standard_simplex(n, cap);
    let keep: Vec<Vec<bool>> = (0..=cap)
        .map(|k| {
            (0..delta.count(k))
                .map(|s| !simplex_monotone(n, k, s).is_surjective())
                .collect()
        })
        .collect();
    restrict(&delta, &keep).0
}

/// Λ^n_k: simplices of Δ^n whose image misses some vertex other than `k`.
pub fn horn(n: usize, k: usize, cap: usize) -> Result<SimplicialSet> {
    Ok(horn_with_inclusion(n, k, cap)?.0)
}

pub fn horn_with_inclusion(
    n: usize,
    k: usize,
    cap: usize,
) -> Result<(SimplicialSet, SimplicialMap)> {
    if n == 0 || k > n {
        return Err(Error::input(format!("no horn Λ^{n}_{k}")));
    }
    let delta = standard_simplex(n, cap);
    let keep: Vec<Vec<bool>> = (0..=cap)
        .map(|m| {
            (0..delta.count(m))
                .map(|s| {
                    let theta = simplex_monotone(n, m, s);
                    let mut hit = vec![false; n + 1];
                    theta.values.iter().for_each(|&v| hit[v] = true);
                    hit[k] = true;
                    hit.iter().any(|h| !h)
                })
                .collect()
        })
        .collect();
    Ok(restrict(&delta, &keep))
}

fn check_caps(x: &SimplicialSet, y: &SimplicialSet) -> Result<()> {
    if x.cap() != y.cap() {
        return Err(Error::CapMismatch {
            left: x.cap(),
            right: y.cap(),
        });
    }
    Ok(())
}

/// Levelwise product; the simplex `(a, b)` at level n has id `a * |Y_n| + b`.
pub fn product(x: &SimplicialSet, y: &SimplicialSet) -> Result<SimplicialSet> {
    check_caps(x, y)?;
    let cap = x.cap();
    let counts: Vec<usize> = (0..=cap).map(|n| x.count(n) * y.count(n)).collect();
    let pair = |n: usize, a: usize, b: usize| a * y.count(n) + b;
    let faces = (0..=cap)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    let mut t = Vec::with_capacity(counts[n]);
                    for a in 0..x.count(n) {
                        for b in 0..y.count(n) {
                            t.push(pair(n - 1, x.face(n, i, a), y.face(n, i, b)));
                        }
                    }
                    t
                })
                .collect()
        })
        .collect();
    let degens = (0..=cap)
        .map(|n| {
            if n == cap {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    let mut t = Vec::with_capacity(counts[n]);
                    for a in 0..x.count(n) {
                        for b in 0..y.count(n) {
                            t.push(pair(n + 1, x.degen(n, i, a), y.degen(n, i, b)));
                        }
                    }
                    t
                })
                .collect()
        })
        .collect();
    let labels = (0..=cap)
        .map(|n| {
            let mut l = Vec::with_capacity(counts[n]);
            for a in 0..x.count(n) {
                for b in 0..y.count(n) {
                    l.push(format!("({},{})", x.label(n, a), y.label(n, b)));
                }
            }
            l
        })
        .collect();
    SimplicialSet::from_tables(cap, counts, faces, degens, Some(labels))
}

/// A simplex of a join `X ∗ Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JoinSimplex {
    Left(usize),
    Right(usize),
    /// `(i, x, y)` with `x ∈ X_i`, `y ∈ Y_j`, `i + j + 1 = n`.
    Mixed(usize, usize, usize),
}

/// Layout of the simplices of `X ∗ Y` at each level.
pub struct JoinLayout {
    /// `offsets[n][i]`: first id of the mixed block `X_i × Y_{n-1-i}`.
    offsets: Vec<Vec<usize>>,
    xc: Vec<usize>,
    yc: Vec<usize>,
}

impl JoinLayout {
    fn new(x: &SimplicialSet, y: &SimplicialSet) -> Self {
        let cap = x.cap();
        let xc: Vec<usize> = (0..=cap).map(|n| x.count(n)).collect();
        let yc: Vec<usize> = (0..=cap).map(|n| y.count(n)).collect();
        let offsets = (0..=cap)
            .map(|n| {
                let mut o = Vec::with_capacity(n + 1);
                let mut at = xc[n] + yc[n];
                for i in 0..n {
                    o.push(at);
                    at += xc[i] * yc[n - 1 - i];
                }
                o.push(at);
                o
            })
            .collect();
        JoinLayout { offsets, xc, yc }
    }

    pub fn count(&self, n: usize) -> usize {
        self.offsets[n][n]
    }

    pub fn id(&self, n: usize, s: JoinSimplex) -> usize {
        match s {
            JoinSimplex::Left(a) => a,
            JoinSimplex::Right(b) => self.xc[n] + b,
            JoinSimplex::Mixed(i, a, b) => self.offsets[n][i] + a * self.yc[n - 1 - i] + b,
        }
    }

    pub fn decode(&self, n: usize, id: usize) -> JoinSimplex {
        if id < self.xc[n] {
            return JoinSimplex::Left(id);
        }
        if id < self.xc[n] + self.yc[n] {
            return JoinSimplex::Right(id - self.xc[n]);
        }
        let i = (0..n).rev().find(|&i| self.offsets[n][i] <= id).unwrap();
        let r = id - self.offsets[n][i];
        let w = self.yc[n - 1 - i];
        JoinSimplex::Mixed(i, r / w, r % w)
    }
}

/// The join `X ∗ Y`, with ids laid out as left block, right block, then the
/// mixed blocks `X_i × Y_j` by increasing `i`.
pub fn join(x: &SimplicialSet, y: &SimplicialSet) -> Result<SimplicialSet> {
    Ok(join_with_layout(x, y)?.0)
}

pub fn join_with_layout(
    x: &SimplicialSet,
    y: &SimplicialSet,
) -> Result<(SimplicialSet, JoinLayout)> {
    check_caps(x, y)?;
    let cap = x.cap();
    let lay = JoinLayout::new(x, y);
    let face = |n: usize, s: JoinSimplex, k: usize| -> JoinSimplex {
        match s {
            JoinSimplex::Left(a) => JoinSimplex::Left(x.face(n, k, a)),
            JoinSimplex::Right(b) => JoinSimplex::Right(y.face(n, k, b)),
            JoinSimplex::Mixed(i, a, b) => {
                let j = n - 1 - i;
                if k <= i {
                    if i == 0 {
                        JoinSimplex::Right(b)
                    } else {
                        JoinSimplex::Mixed(i - 1, x.face(i, k, a), b)
                    }
                } else if j == 0 {
                    JoinSimplex::Left(a)
                } else {
                    JoinSimplex::Mixed(i, a, y.face(j, k - i - 1, b))
                }
            }
        }
    };
    let degen = |n: usize, s: JoinSimplex, k: usize| -> JoinSimplex {
        match s {
            JoinSimplex::Left(a) => JoinSimplex::Left(x.degen(n, k, a)),
            JoinSimplex::Right(b) => JoinSimplex::Right(y.degen(n, k, b)),
            JoinSimplex::Mixed(i, a, b) => {
                let j = n - 1 - i;
                if k <= i {
                    JoinSimplex::Mixed(i + 1, x.degen(i, k, a), b)
                } else {
                    JoinSimplex::Mixed(i, a, y.degen(j, k - i - 1, b))
                }
            }
        }
    };
    let faces = (0..=cap)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|k| {
                    (0..lay.count(n))
                        .map(|id| lay.id(n - 1, face(n, lay.decode(n, id), k)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let degens = (0..=cap)
        .map(|n| {
            if n == cap {
                return Vec::new();
            }
            (0..=n)
                .map(|k| {
                    (0..lay.count(n))
                        .map(|id| lay.id(n + 1, degen(n, lay.decode(n, id), k)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let labels = (0..=cap)
        .map(|n| {
            (0..lay.count(n))
                .map(|id| match lay.decode(n, id) {
                    JoinSimplex::Left(a) => format!("L{}", x.label(n, a)),
                    JoinSimplex::Right(b) => format!("R{}", y.label(n, b)),
                    JoinSimplex::Mixed(i, a, b) => {
                        format!("{}*{}", x.label(i, a), y.label(n - 1 - i, b))
                    }
                })
                .collect()
        })
        .collect();
    let counts = (0..=cap).map(|n| lay.count(n)).collect();
    let set = SimplicialSet::from_tables(cap, counts, faces, degens, Some(labels))?;
    Ok((set, lay))
}

/// `f ∗ g : X ∗ Y → X' ∗ Y'`.
pub fn join_map(
    x: &SimplicialSet,
    y: &SimplicialSet,
    f: &SimplicialMap,
    x2: &SimplicialSet,
    y2: &SimplicialSet,
    g: &SimplicialMap,
) -> Result<SimplicialMap> {
    let src = JoinLayout::new(x, y);
    let dst = JoinLayout::new(x2, y2);
    let components = (0..=x.cap())
        .map(|n| {
            (0..src.count(n))
                .map(|id| {
                    let s = match src.decode(n, id) {
                        JoinSimplex::Left(a) => JoinSimplex::Left(f.apply(n, a)),
                        JoinSimplex::Right(b) => JoinSimplex::Right(g.apply(n, b)),
                        JoinSimplex::Mixed(i, a, b) => {
                            JoinSimplex::Mixed(i, f.apply(i, a), g.apply(n - 1 - i, b))
                        }
                    };
                    dst.id(n, s)
                })
                .collect()
        })
        .collect();
    Ok(SimplicialMap::new(components))
}

/// Disjoint union, with both inclusions.
pub fn coproduct(
    x: &SimplicialSet,
    y: &SimplicialSet,
) -> Result<(SimplicialSet, SimplicialMap, SimplicialMap)> {
    check_caps(x, y)?;
    let cap = x.cap();
    let off: Vec<usize> = (0..=cap).map(|n| x.count(n)).collect();
    let faces = (0..=cap)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    let mut t: Vec<usize> = x.face_table(n, i).to_vec();
                    t.extend(y.face_table(n, i).iter().map(|&b| b + off[n - 1]));
                    t
                })
                .collect()
        })
        .collect();
    let degens = (0..=cap)
        .map(|n| {
            if n == cap {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    let mut t: Vec<usize> = x.degen_table(n, i).to_vec();
                    t.extend(y.degen_table(n, i).iter().map(|&b| b + off[n + 1]));
                    t
                })
                .collect()
        })
        .collect();
    let labels = (0..=cap)
        .map(|n| {
            let mut l: Vec<String> = (0..x.count(n))
                .map(|a| format!("0:{}", x.label(n, a)))
                .collect();
            l.extend((0..y.count(n)).map(|b| format!("1:{}", y.label(n, b))));
            l
        })
        .collect();
    let counts = (0..=cap).map(|n| x.count(n) + y.count(n)).collect();
    let set = SimplicialSet::from_tables(cap, counts, faces, degens, Some(labels))?;
    let ix = SimplicialMap::new((0..=cap).map(|n| (0..x.count(n)).collect()).collect());
    let iy = SimplicialMap::new(
        (0..=cap)
            .map(|n| (0..y.count(n)).map(|b| b + off[n]).collect())
            .collect(),
    );
    Ok((set, ix, iy))
}

/// Quotient by the smallest simplicial equivalence relation containing the
/// given pairs `(level, a, b)`. Classes are numbered by their least member.
pub fn quotient(
    x: &SimplicialSet,
    relations: &[(usize, usize, usize)],
) -> (SimplicialSet, SimplicialMap) {
    let cap = x.cap();
    let mut uf: Vec<UnionFind<usize>> = (0..=cap).map(|n| UnionFind::new(x.count(n))).collect();
    let mut queue: Vec<(usize, usize, usize)> = relations.to_vec();
    while let Some((n, a, b)) = queue.pop() {
        if !uf[n].union(a, b) {
            continue;
        }
        if n > 0 {
            for i in 0..=n {
                queue.push((n - 1, x.face(n, i, a), x.face(n, i, b)));
            }
        }
        if n < cap {
            for i in 0..=n {
                queue.push((n + 1, x.degen(n, i, a), x.degen(n, i, b)));
            }
        }
    }
    let mut class: Vec<Vec<usize>> = Vec::with_capacity(cap + 1);
    let mut reps: Vec<Vec<usize>> = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let mut root_id = vec![usize::MAX; x.count(n)];
        let mut c = vec![0; x.count(n)];
        let mut r = Vec::new();
        for s in 0..x.count(n) {
            let root = uf[n].find_mut(s);
            if root_id[root] == usize::MAX {
                root_id[root] = r.len();
                r.push(s);
            }
            c[s] = root_id[root];
        }
        class.push(c);
        reps.push(r);
    }
    let faces = (0..=cap)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    reps[n]
                        .iter()
                        .map(|&s| class[n - 1][x.face(n, i, s)])
                        .collect()
                })
                .collect()
        })
        .collect();
    let degens = (0..=cap)
        .map(|n| {
            if n == cap {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    reps[n]
                        .iter()
                        .map(|&s| class[n + 1][x.degen(n, i, s)])
                        .collect()
                })
                .collect()
        })
        .collect();
    let labels = x.labels().map(|l| {
        (0..=cap)
            .map(|n| reps[n].iter().map(|&s| l[n][s].clone()).collect())
            .collect()
    });
    let counts = reps.iter().map(|r| r.len()).collect();
    let q =
        SimplicialSet::from_tables(cap, counts, faces, degens, labels).expect("quotient tables");
    (q, SimplicialMap::new(class))
}

/// Pushout of `B ← A → C`: returns the pushout and the maps from `B` and `C`.
pub fn pushout(
    b: &SimplicialSet,
    c: &SimplicialSet,
    f: &SimplicialMap,
    g: &SimplicialMap,
) -> Result<(SimplicialSet, SimplicialMap, SimplicialMap)> {
    let (sum, ib, ic) = coproduct(b, c)?;
    let mut rel = Vec::new();
    for n in 0..f.components.len() {
        for a in 0..f.components[n].len() {
            rel.push((n, ib.apply(n, f.apply(n, a)), ic.apply(n, g.apply(n, a))));
        }
    }
    let (p, q) = quotient(&sum, &rel);
    Ok((p, ib.then(&q), ic.then(&q)))
}

/// Given a surjection `q: X → P` and a map `h: X → Z`, the induced map
/// `P → Z`, if `h` is constant on the fibres of `q`.
pub fn descend(q: &SimplicialMap, p: &SimplicialSet, h: &SimplicialMap) -> Result<SimplicialMap> {
    let components = (0..=p.cap())
        .map(|n| {
            let mut out = vec![usize::MAX; p.count(n)];
            for (s, &t) in q.components[n].iter().enumerate() {
                let v = h.apply(n, s);
                if out[t] == usize::MAX {
                    out[t] = v;
                } else if out[t] != v {
                    return Err(Error::InvalidMap(format!(
                        "map does not descend at level {n}"
                    )));
                }
            }
            if out.contains(&usize::MAX) {
                return Err(Error::InvalidMap("quotient map is not surjective".into()));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplicialMap::new(components))
}

/// `X / A` for a sub-simplicial set given by its inclusion: the pushout of
/// `X ← A → Δ^0`.
pub fn collapse(
    x: &SimplicialSet,
    a: &SimplicialSet,
    incl: &SimplicialMap,
) -> Result<(SimplicialSet, SimplicialMap)> {
    let pt = point(x.cap());
    let to_pt = SimplicialMap::new((0..=x.cap()).map(|n| vec![0; a.count(n)]).collect());
    let (p, from_x, _) = pushout(x, &pt, incl, &to_pt)?;
    Ok((p, from_x))
}

/// `X^op`: the same simplices with `d_i ↔ d_{n-i}` and `s_i ↔ s_{n-i}`.
pub fn opposite(x: &SimplicialSet) -> SimplicialSet {
    let cap = x.cap();
    let faces = (0..=cap)
        .map(|n| {
            if n == 0 {
                Vec::new()
            } else {
                (0..=n).map(|i| x.face_table(n, n - i).to_vec()).collect()
            }
        })
        .collect();
    let degens = (0..=cap)
        .map(|n| {
            if n == cap {
                Vec::new()
            } else {
                (0..=n).map(|i| x.degen_table(n, n - i).to_vec()).collect()
            }
        })
        .collect();
    SimplicialSet::from_tables(cap, x.counts().to_vec(), faces, degens, x.labels().cloned())
        .expect("opposite tables")
}

/// The map `Δ^n → X` classifying an n-simplex `x`.
pub fn yoneda(x: &SimplicialSet, n: usize, s: usize) -> SimplicialMap {
    let delta = standard_simplex(n, x.cap());
    let components = (0..=x.cap())
        .map(|k| {
            (0..delta.count(k))
                .map(|t| x.apply_monotone(s, &simplex_monotone(n, k, t)))
                .collect()
        })
        .collect();
    SimplicialMap::new(components)
}

/// The unique map to the point.
pub fn to_point(x: &SimplicialSet) -> SimplicialMap {
    SimplicialMap::new((0..=x.cap()).map(|n| vec![0; x.count(n)]).collect())
}

/// Unreduced suspension `SK = K × Δ^1 ⊔_{K × ∂Δ^1} ∂Δ^1`, pointed by the two
/// collapsed ends. Also returns the quotient map from `K × Δ^1`.
pub fn suspension_with_quotient(k: &SimplicialSet) -> Result<(PointedDirected, SimplicialMap)> {
    let cap = k.cap();
    let d1 = standard_simplex(1, cap);
    let kd1 = product(k, &d1)?;
    let (bd, bd_incl) = {
        let keep: Vec<Vec<bool>> = (0..=cap)
            .map(|m| {
                (0..d1.count(m))
                    .map(|s| !simplex_monotone(1, m, s).is_surjective())
                    .collect()
            })
            .collect();
        restrict(&d1, &keep)
    };
    let kbd = product(k, &bd)?;
    let incl = SimplicialMap::new(
        (0..=cap)
            .map(|n| {
                let mut v = Vec::with_capacity(kbd.count(n));
                for a in 0..k.count(n) {
                    for b in 0..bd.count(n) {
                        v.push(a * d1.count(n) + bd_incl.apply(n, b));
                    }
                }
                v
            })
            .collect(),
    );
    let proj = SimplicialMap::new(
        (0..=cap)
            .map(|n| {
                let mut v = Vec::with_capacity(kbd.count(n));
                for _ in 0..k.count(n) {
                    v.extend(0..bd.count(n));
                }
                v
            })
            .collect(),
    );
    let (s, from_prod, from_bd) = pushout(&kd1, &bd, &incl, &proj)?;
    let base = (from_bd.apply(0, 0), from_bd.apply(0, 1));
    Ok((PointedDirected::new(s, base.0, base.1)?, from_prod))
}

pub fn suspension(k: &SimplicialSet) -> Result<PointedDirected> {
    Ok(suspension_with_quotient(k)?.0)
}

/// `S^L(K) = (Δ^0 ∗ K) ⊔_K Δ^0`, pointed by the cone point (0) and the
/// collapsed copy of `K` (1).
pub fn suspension_left(k: &SimplicialSet) -> Result<PointedDirected> {
    Ok(suspension_left_with_quotient(k)?.0)
}

pub fn suspension_left_with_quotient(
    k: &SimplicialSet,
) -> Result<(PointedDirected, SimplicialMap)> {
    let cap = k.cap();
    let pt = point(cap);
    let (cone, lay) = join_with_layout(&pt, k)?;
    let incl = SimplicialMap::new(
        (0..=cap)
            .map(|n| {
                (0..k.count(n))
                    .map(|b| lay.id(n, JoinSimplex::Right(b)))
                    .collect()
            })
            .collect(),
    );
    let (s, from_cone, from_pt) = pushout(&cone, &pt, &incl, &to_point(k))?;
    let zero = from_cone.apply(0, lay.id(0, JoinSimplex::Left(0)));
    let one = from_pt.apply(0, 0);
    Ok((PointedDirected::new(s, zero, one)?, from_cone))
}

/// `S^R(K) = (K ∗ Δ^0) ⊔_K Δ^0`, pointed by the collapsed copy of `K` (0)
/// and the cone point (1).
pub fn suspension_right(k: &SimplicialSet) -> Result<PointedDirected> {
    Ok(suspension_right_with_quotient(k)?.0)
}

pub fn suspension_right_with_quotient(
    k: &SimplicialSet,
) -> Result<(PointedDirected, SimplicialMap)> {
    let cap = k.cap();
    let pt = point(cap);
    let (cone, lay) = join_with_layout(k, &pt)?;
    let incl = SimplicialMap::new(
        (0..=cap)
            .map(|n| {
                (0..k.count(n))
                    .map(|a| lay.id(n, JoinSimplex::Left(a)))
                    .collect()
            })
            .collect(),
    );
    let (s, from_cone, from_pt) = pushout(&cone, &pt, &incl, &to_point(k))?;
    let zero = from_pt.apply(0, 0);
    let one = from_cone.apply(0, lay.id(0, JoinSimplex::Right(0)));
    Ok((PointedDirected::new(s, zero, one)?, from_cone))
}

/// The restriction of an n-simplex to the vertices `p..=q`.
pub(crate) fn restrict_simplex(x: &SimplicialSet, n: usize, s: usize, p: usize, q: usize) -> usize {
    x.apply_monotone(s, &Monotone::new(n, (p..=q).collect()))
}

/// The comparison maps `S^L(K) ← S(K) → S^R(K)`.
pub fn suspension_comparisons(k: &SimplicialSet) -> Result<(SimplicialMap, SimplicialMap)> {
    let cap = k.cap();
    let d1 = standard_simplex(1, cap);
    let (s, q) = suspension_with_quotient(k)?;
    let pt = point(cap);
    let (_, lay_l) = join_with_layout(&pt, k)?;
    let (_, lay_r) = join_with_layout(k, &pt)?;
    let (_sl, ql) = suspension_left_with_quotient(k)?;
    let (_sr, qr) = suspension_right_with_quotient(k)?;
    // (x, 0^a 1^b) on K × Δ^1, sent into the two cones.
    let mut to_l = Vec::with_capacity(cap + 1);
    let mut to_r = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let mut l = Vec::new();
        let mut r = Vec::new();
        for x in 0..k.count(n) {
            for t in 0..d1.count(n) {
                let a = simplex_monotone(1, n, t)
                    .values
                    .iter()
                    .filter(|&&v| v == 0)
                    .count();
                let b = n + 1 - a;
                let (jl, jr) = if b == 0 {
                    (JoinSimplex::Left(0), JoinSimplex::Left(x))
                } else if a == 0 {
                    (JoinSimplex::Right(x), JoinSimplex::Right(0))
                } else {
                    (
                        JoinSimplex::Mixed(a - 1, 0, restrict_simplex(k, n, x, a, n)),
                        JoinSimplex::Mixed(a - 1, restrict_simplex(k, n, x, 0, a - 1), 0),
                    )
                };
                l.push(ql.apply(n, lay_l.id(n, jl)));
                r.push(qr.apply(n, lay_r.id(n, jr)));
            }
        }
        to_l.push(l);
        to_r.push(r);
    }
    let fl = descend(&q, s.carrier(), &SimplicialMap::new(to_l))?;
    let fr = descend(&q, s.carrier(), &SimplicialMap::new(to_r))?;
    Ok((fl, fr))
}

/// `X` with everything above level `cap` dropped.
pub fn truncate(x: &SimplicialSet, cap: usize) -> Result<SimplicialSet> {
    if cap > x.cap() {
        return Err(Error::CapShortfall {
            what: "truncation".into(),
            needed: cap,
            have: x.cap(),
        });
    }
    let faces = (0..=cap)
        .map(|n| {
            if n == 0 {
                Vec::new()
            } else {
                (0..=n).map(|i| x.face_table(n, i).to_vec()).collect()
            }
        })
        .collect();
    let degens = (0..=cap)
        .map(|n| {
            if n == cap {
                Vec::new()
            } else {
                (0..=n).map(|i| x.degen_table(n, i).to_vec()).collect()
            }
        })
        .collect();
    let labels = x.labels().map(|l| l[..=cap].to_vec());
    SimplicialSet::from_tables(cap, x.counts()[..=cap].to_vec(), faces, degens, labels)
}
