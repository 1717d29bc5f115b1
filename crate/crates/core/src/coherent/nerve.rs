//! Simplicially enriched categories, the cubes `𝔠[Δ^n](a,b)` and the
//! coherent nerve.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{interval, Chain};
use crate::error::{Error, Result};
use crate::monotone::Monotone;
use crate::sset::constructions::point;
use crate::sset::enumerate::{for_each_map, Budget, Constraint};
use crate::sset::{PointedDirected, SimplicialMap, SimplicialSet};

/// `𝔠[Δ^n](a,b)`: the nerve of `{T ⊆ [a,b] : a, b ∈ T}`, with chains as keys.
#[derive(Clone, Debug)]
pub struct CubeModel {
    pub set: SimplicialSet,
    pub keys: Vec<Vec<Chain>>,
    pub index: Vec<HashMap<Chain, usize>>,
}

pub fn cube_model(n: usize, a: usize, b: usize, cap: usize) -> Result<CubeModel> {
    if a > b || b > n {
        return Err(Error::input(format!(
            "no mapping complex from {a} to {b} in 𝔠[Δ^{n}]"
        )));
    }
    let ends = (1u32 << a) | (1u32 << b);
    let interior: Vec<usize> = (a + 1..b).collect();
    let keys: Vec<Vec<Chain>> = (0..=cap)
        .map(|k| {
            let choices = k + 2;
            (0..choices.pow(interior.len() as u32))
                .map(|code| {
                    let mut c = code;
                    let mut chain = vec![ends; k + 1];
                    for &p in &interior {
                        let t = c % choices;
                        c /= choices;
                        for s in chain.iter_mut().skip(t) {
                            *s |= 1 << p;
                        }
                    }
                    chain
                })
                .collect()
        })
        .collect();
    let labels = keys
        .iter()
        .map(|l| {
            l.iter()
                .map(|c| {
                    c.iter()
                        .map(|&s| {
                            (0..=n)
                                .filter(|p| s >> p & 1 == 1)
                                .map(|p| p.to_string())
                                .collect::<String>()
                        })
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect()
        })
        .collect();
    let (set, index) = SimplicialSet::from_model(
        cap,
        keys.clone(),
        |_, c, t| {
            let mut d = c.clone();
            d.remove(t);
            d
        },
        |_, c, t| {
            let mut d = c.clone();
            d.insert(t, d[t]);
            d
        },
    )?;
    Ok(CubeModel {
        set: set.with_labels(labels),
        keys,
        index,
    })
}

pub fn coherent_cube(n: usize, a: usize, b: usize, cap: usize) -> Result<SimplicialSet> {
    Ok(cube_model(n, a, b, cap)?.set)
}

/// Composition `𝔠(b,c) × 𝔠(a,b) → 𝔠(a,c)` by union, on the product with
/// ids `g * |𝔠(a,b)_k| + f`.
pub fn cube_composition(
    n: usize,
    a: usize,
    b: usize,
    c: usize,
    cap: usize,
) -> Result<(SimplicialSet, SimplicialMap)> {
    let (ab, bc, ac) = (
        cube_model(n, a, b, cap)?,
        cube_model(n, b, c, cap)?,
        cube_model(n, a, c, cap)?,
    );
    let prod = crate::sset::constructions::product(&bc.set, &ab.set)?;
    let comp = SimplicialMap::new(
        (0..=cap)
            .map(|k| {
                let mut out = Vec::new();
                for g in &bc.keys[k] {
                    for f in &ab.keys[k] {
                        let u: Chain = g.iter().zip(f).map(|(x, y)| x | y).collect();
                        out.push(ac.index[k][&u]);
                    }
                }
                out
            })
            .collect(),
    );
    comp.validate(&prod, &ac.set)?;
    Ok((prod, comp))
}

/// A category enriched in truncated simplicial sets with finitely many
/// objects. Composition is stored levelwise:
/// `compose[x][y][z][k][g * |C(x,y)_k| + f] = g ∘ f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnrichedCategory {
    objects: Vec<String>,
    homs: Vec<Vec<SimplicialSet>>,
    compose: Vec<Vec<Vec<Vec<Vec<usize>>>>>,
    identities: Vec<usize>,
}

impl EnrichedCategory {
    /// Builds the category and checks that composition is simplicial,
    /// associative and unital at every level.
    pub fn new(
        objects: Vec<String>,
        homs: Vec<Vec<SimplicialSet>>,
        compose: Vec<Vec<Vec<Vec<Vec<usize>>>>>,
        identities: Vec<usize>,
    ) -> Result<Self> {
        let o = objects.len();
        if o == 0 || homs.len() != o || homs.iter().any(|r| r.len() != o) || identities.len() != o {
            return Err(Error::input(
                "enriched category: tables do not match the objects",
            ));
        }
        let cap = homs[0][0].cap();
        for row in &homs {
            for h in row {
                if h.cap() != cap {
                    return Err(Error::CapMismatch {
                        left: cap,
                        right: h.cap(),
                    });
                }
            }
        }
        let c = EnrichedCategory {
            objects,
            homs,
            compose,
            identities,
        };
        c.check_laws()?;
        Ok(c)
    }

    fn check_laws(&self) -> Result<()> {
        let o = self.objects.len();
        let cap = self.cap();
        let bad = |what: String| Err(Error::Identity(format!("enriched category: {what}")));
        if self.compose.len() != o {
            return bad("composition table has the wrong shape".into());
        }
        for x in 0..o {
            if self.identities[x] >= self.homs[x][x].count(0) {
                return bad(format!("identity of object {x} is not a vertex"));
            }
            for y in 0..o {
                for z in 0..o {
                    let t = self.compose[x].get(y).and_then(|r| r.get(z));
                    let Some(t) = t else {
                        return bad("composition table has the wrong shape".into());
                    };
                    if t.len() != cap + 1 {
                        return bad(format!(
                            "composition {x}→{y}→{z} has the wrong number of levels"
                        ));
                    }
                    let (f, g, h) = (&self.homs[x][y], &self.homs[y][z], &self.homs[x][z]);
                    for k in 0..=cap {
                        if t[k].len() != f.count(k) * g.count(k)
                            || t[k].iter().any(|&v| v >= h.count(k))
                        {
                            return bad(format!(
                                "composition {x}→{y}→{z} is malformed at level {k}"
                            ));
                        }
                        for a in 0..g.count(k) {
                            for b in 0..f.count(k) {
                                let v = self.comp(x, y, z, k, a, b);
                                if k > 0 {
                                    for i in 0..=k {
                                        if h.face(k, i, v)
                                            != self.comp(
                                                x,
                                                y,
                                                z,
                                                k - 1,
                                                g.face(k, i, a),
                                                f.face(k, i, b),
                                            )
                                        {
                                            return bad(format!("composition {x}→{y}→{z} does not commute with d_{i}"));
                                        }
                                    }
                                }
                                if k < cap {
                                    for i in 0..=k {
                                        if h.degen(k, i, v)
                                            != self.comp(
                                                x,
                                                y,
                                                z,
                                                k + 1,
                                                g.degen(k, i, a),
                                                f.degen(k, i, b),
                                            )
                                        {
                                            return bad(format!("composition {x}→{y}→{z} does not commute with s_{i}"));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        for x in 0..o {
            for y in 0..o {
                for k in 0..=cap {
                    for f in 0..self.homs[x][y].count(k) {
                        if self.comp(x, y, y, k, self.identity_at(y, k), f) != f
                            || self.comp(x, x, y, k, f, self.identity_at(x, k)) != f
                        {
                            return bad(format!("unit law fails on {x}→{y} at level {k}"));
                        }
                    }
                }
            }
        }
        for w in 0..o {
            for x in 0..o {
                for y in 0..o {
                    for z in 0..o {
                        for k in 0..=cap {
                            for h in 0..self.homs[y][z].count(k) {
                                for g in 0..self.homs[x][y].count(k) {
                                    let hg = self.comp(x, y, z, k, h, g);
                                    for f in 0..self.homs[w][x].count(k) {
                                        let left = self.comp(w, x, z, k, hg, f);
                                        let right =
                                            self.comp(w, y, z, k, h, self.comp(w, x, y, k, g, f));
                                        if left != right {
                                            return bad(format!(
                                                "associativity fails on {w}→{x}→{y}→{z}"
                                            ));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn cap(&self) -> usize {
        self.homs[0][0].cap()
    }

    pub fn hom(&self, x: usize, y: usize) -> &SimplicialSet {
        &self.homs[x][y]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    /// The identity of `x` as a (degenerate) `k`-simplex.
    pub fn identity_at(&self, x: usize, k: usize) -> usize {
        let h = &self.homs[x][x];
        (0..k).fold(self.identities[x], |v, n| h.degen(n, 0, v))
    }

    /// `g ∘ f` for `f ∈ C(x,y)_k`, `g ∈ C(y,z)_k`.
    pub fn comp(&self, x: usize, y: usize, z: usize, k: usize, g: usize, f: usize) -> usize {
        self.compose[x][y][z][k][g * self.homs[x][y].count(k) + f]
    }

    /// The category with objects `0..=n`, a point from `a` to `b` when
    /// `a ≤ b`, and nothing otherwise.
    pub fn poset(n: usize, cap: usize) -> Self {
        let o = n + 1;
        let pt = point(cap);
        let empty = SimplicialSet::empty(cap);
        let homs = (0..o)
            .map(|a| {
                (0..o)
                    .map(|b| if a <= b { pt.clone() } else { empty.clone() })
                    .collect()
            })
            .collect();
        let compose = (0..o)
            .map(|x| {
                (0..o)
                    .map(|y| {
                        (0..o)
                            .map(|z| {
                                let n = usize::from(x <= y && y <= z);
                                vec![vec![0; n]; cap + 1]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        EnrichedCategory::new(
            (0..o).map(|i| i.to_string()).collect(),
            homs,
            compose,
            vec![0; o],
        )
        .expect("posets are categories")
    }

    /// The two-object enriched category with `C(0,1) = K`, points on the
    /// diagonal and `C(1,0) = ∅`.
    pub fn directed(k: &SimplicialSet) -> Self {
        let cap = k.cap();
        let pt = point(cap);
        let homs = vec![
            vec![pt.clone(), k.clone()],
            vec![SimplicialSet::empty(cap), pt],
        ];
        let mut compose = vec![vec![vec![vec![Vec::new(); cap + 1]; 2]; 2]; 2];
        for lvl in 0..=cap {
            compose[0][0][0][lvl] = vec![0];
            compose[1][1][1][lvl] = vec![0];
            // C(0,0) has one simplex per level, so both tables are the identity on K
            compose[0][0][1][lvl] = (0..k.count(lvl)).collect();
            compose[0][1][1][lvl] = (0..k.count(lvl)).collect();
        }
        EnrichedCategory::new(vec!["0".into(), "1".into()], homs, compose, vec![0, 0])
            .expect("directed categories are categories")
    }

    pub fn to_json(&self) -> String {
        let doc = CategoryDoc {
            objects: self.objects.clone(),
            maps: self
                .homs
                .iter()
                .map(|r| r.iter().map(|h| h.to_json_value()).collect())
                .collect(),
            compose: self.compose.clone(),
            identities: self.identities.clone(),
        };
        serde_json::to_string(&doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CategoryDoc = serde_json::from_str(text)?;
        let homs = doc
            .maps
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(SimplicialSet::from_json_value)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        EnrichedCategory::new(doc.objects, homs, doc.compose, doc.identities)
    }
}

#[derive(Serialize, Deserialize)]
struct CategoryDoc {
    objects: Vec<String>,
    maps: Vec<Vec<serde_json::Value>>,
    compose: Vec<Vec<Vec<Vec<Vec<usize>>>>>,
    identities: Vec<usize>,
}

/// `F(K)`: the free directed two-object category with `C(0,1) = K`.
pub fn f_category(k: &SimplicialSet) -> EnrichedCategory {
    EnrichedCategory::directed(k)
}

/// An enriched functor `𝔠[Δ^m] → C`: objects `x_0, …, x_m` and, for each
/// `a < b`, the component `𝔠(a,b) → C(x_a, x_b)` at slot `a * (m+1) + b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NerveSimplex {
    pub objects: Vec<usize>,
    pub components: Vec<Vec<Vec<usize>>>,
}

impl NerveSimplex {
    pub fn dim(&self) -> usize {
        self.objects.len() - 1
    }

    pub fn component(&self, a: usize, b: usize) -> &Vec<Vec<usize>> {
        &self.components[a * (self.dim() + 1) + b]
    }
}

/// The coherent nerve truncated at `out_cap`, with each simplex's functor.
#[derive(Clone, Debug)]
pub struct CoherentNerve {
    pub set: SimplicialSet,
    pub simplices: Vec<Vec<NerveSimplex>>,
    pub index: Vec<HashMap<NerveSimplex, usize>>,
}

impl CoherentNerve {
    /// The nerve pointed at two objects.
    pub fn pointed(&self, x: usize, y: usize) -> Result<PointedDirected> {
        PointedDirected::new(self.set.clone(), x, y)
    }
}

struct Cubes {
    cap: usize,
    models: HashMap<(usize, usize, usize), CubeModel>,
}

impl Cubes {
    fn new(max_n: usize, cap: usize) -> Result<Self> {
        let mut models = HashMap::new();
        for n in 0..=max_n {
            for a in 0..=n {
                for b in a..=n {
                    models.insert((n, a, b), cube_model(n, a, b, cap)?);
                }
            }
        }
        Ok(Cubes { cap, models })
    }

    fn get(&self, n: usize, a: usize, b: usize) -> &CubeModel {
        &self.models[&(n, a, b)]
    }

    /// Reindexing `𝔠[Δ^m](a',b') → 𝔠[Δ^n](θa', θb')` by direct image.
    fn reindex(&self, theta: &Monotone, a: usize, b: usize) -> Vec<Vec<usize>> {
        let (m, n) = (theta.source(), theta.target);
        let src = self.get(m, a, b);
        let tgt = self.get(n, theta.values[a], theta.values[b]);
        (0..=self.cap)
            .map(|k| {
                src.keys[k]
                    .iter()
                    .map(|c| {
                        let img: Chain = c
                            .iter()
                            .map(|&s| {
                                (0..=m)
                                    .filter(|p| s >> p & 1 == 1)
                                    .fold(0u32, |acc, p| acc | 1 << theta.values[p])
                            })
                            .collect();
                        tgt.index[k][&img]
                    })
                    .collect()
            })
            .collect()
    }
}

fn pull_back(
    c: &EnrichedCategory,
    cubes: &Cubes,
    x: &NerveSimplex,
    theta: &Monotone,
) -> NerveSimplex {
    let m = theta.source();
    let objects: Vec<usize> = theta.values.iter().map(|&v| x.objects[v]).collect();
    let mut components = vec![Vec::new(); (m + 1) * (m + 1)];
    for a in 0..=m {
        for b in a + 1..=m {
            let (ta, tb) = (theta.values[a], theta.values[b]);
            components[a * (m + 1) + b] = if ta == tb {
                (0..=cubes.cap)
                    .map(|k| vec![c.identity_at(objects[a], k); cubes.get(m, a, b).set.count(k)])
                    .collect()
            } else {
                let comp = x.component(ta, tb);
                cubes
                    .reindex(theta, a, b)
                    .iter()
                    .enumerate()
                    .map(|(k, r)| r.iter().map(|&s| comp[k][s]).collect())
                    .collect()
            };
        }
    }
    NerveSimplex {
        objects,
        components,
    }
}

/// `𝔑(C)` up to `out_cap`: level `m` lists the enriched functors
/// `𝔠[Δ^m] → C`, found by choosing objects and then components in order of
/// `b − a`, each constrained by the composites of shorter ones.
pub fn coherent_nerve(
    c: &EnrichedCategory,
    out_cap: usize,
    budget: &Budget,
) -> Result<CoherentNerve> {
    let cap = c.cap();
    let cubes = Cubes::new(out_cap, cap)?;
    let o = c.object_count();
    let mut levels: Vec<Vec<NerveSimplex>> = Vec::new();
    for m in 0..=out_cap {
        let mut pairs: Vec<(usize, usize)> = (0..=m)
            .flat_map(|a| (a + 1..=m).map(move |b| (a, b)))
            .collect();
        pairs.sort_by_key(|&(a, b)| (b - a, a));
        let mut out = Vec::new();
        for code in 0..o.pow((m + 1) as u32) {
            budget.tick("coherent nerve")?;
            let objects: Vec<usize> = (0..=m).map(|p| code / o.pow((m - p) as u32) % o).collect();
            let mut comps = vec![Vec::new(); (m + 1) * (m + 1)];
            search(
                c, &cubes, m, &objects, &pairs, 0, &mut comps, budget, &mut out,
            )?;
        }
        levels.push(out);
    }
    let (set, index) = SimplicialSet::from_model(
        out_cap,
        levels.clone(),
        |n, x, t| pull_back(c, &cubes, x, &Monotone::coface(n, t)),
        |n, x, t| pull_back(c, &cubes, x, &Monotone::codegeneracy(n, t)),
    )?;
    let labels = levels
        .iter()
        .map(|l| {
            l.iter()
                .map(|x| {
                    x.objects
                        .iter()
                        .map(|&v| c.objects()[v].clone())
                        .collect::<Vec<_>>()
                        .join("")
                })
                .collect()
        })
        .collect();
    Ok(CoherentNerve {
        set: set.with_labels(labels),
        simplices: levels,
        index,
    })
}

#[allow(clippy::too_many_arguments)]
fn search(
    c: &EnrichedCategory,
    cubes: &Cubes,
    m: usize,
    objects: &[usize],
    pairs: &[(usize, usize)],
    at: usize,
    comps: &mut Vec<Vec<Vec<usize>>>,
    budget: &Budget,
    out: &mut Vec<NerveSimplex>,
) -> Result<()> {
    if at == pairs.len() {
        out.push(NerveSimplex {
            objects: objects.to_vec(),
            components: comps.clone(),
        });
        return Ok(());
    }
    let (a, b) = pairs[at];
    let cube = cubes.get(m, a, b);
    let (xa, xb) = (objects[a], objects[b]);
    // chains whose first member contains some a < e < b are composites
    let mut pinned: Vec<Vec<Option<usize>>> = Vec::with_capacity(cubes.cap + 1);
    for k in 0..=cubes.cap {
        let mut lvl = Vec::with_capacity(cube.keys[k].len());
        for chain in &cube.keys[k] {
            let mut val = None;
            for e in a + 1..b {
                if chain[0] >> e & 1 == 0 {
                    continue;
                }
                let lo: Chain = chain.iter().map(|&s| s & interval(a, e)).collect();
                let hi: Chain = chain.iter().map(|&s| s & interval(e, b)).collect();
                let f = comps[a * (m + 1) + e][k][cubes.get(m, a, e).index[k][&lo]];
                let g = comps[e * (m + 1) + b][k][cubes.get(m, e, b).index[k][&hi]];
                let v = c.comp(xa, objects[e], xb, k, g, f);
                match val {
                    None => val = Some(v),
                    Some(w) if w != v => return Ok(()),
                    _ => {}
                }
            }
            lvl.push(val);
        }
        pinned.push(lvl);
    }
    let mut found: Vec<Vec<Vec<usize>>> = Vec::new();
    for_each_map(
        &cube.set,
        c.hom(xa, xb),
        |k, s| match pinned[k][s] {
            Some(v) => Constraint::Fixed(v),
            None => Constraint::Free,
        },
        budget,
        |f| {
            found.push(f.to_vec());
            true
        },
    )?;
    for f in found {
        comps[a * (m + 1) + b] = f;
        search(c, cubes, m, objects, pairs, at + 1, comps, budget, out)?;
    }
    Ok(())
}
