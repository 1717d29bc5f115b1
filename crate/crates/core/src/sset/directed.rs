//! Simplicial sets pointed by two vertices, and the directed two-object
//! condition: a (necessarily unique) map to Δ^1 whose fibres over the
//! endpoints are points.

use super::SimplicialSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedDirected {
    carrier: SimplicialSet,
    zero: usize,
    one: usize,
}

impl PointedDirected {
    pub fn new(carrier: SimplicialSet, zero: usize, one: usize) -> Result<Self> {
        if zero >= carrier.count(0) || one >= carrier.count(0) || zero == one {
            return Err(Error::input("basepoints must be two distinct vertices"));
        }
        Ok(PointedDirected { carrier, zero, one })
    }

    pub fn carrier(&self) -> &SimplicialSet {
        &self.carrier
    }

    pub fn into_carrier(self) -> SimplicialSet {
        self.carrier
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn cap(&self) -> usize {
        self.carrier.cap()
    }

    /// For each simplex, the number of its vertices lying over 0, provided the
    /// object is directed.
    pub fn split_points(&self) -> Result<Vec<Vec<usize>>> {
        let x = &self.carrier;
        if x.count(0) != 2 {
            return Err(Error::NotDirected(format!("{} vertices", x.count(0))));
        }
        let verts = x.vertex_table();
        let mut out = Vec::with_capacity(x.cap() + 1);
        for n in 0..=x.cap() {
            let mut lvl = Vec::with_capacity(x.count(n));
            let (mut all0, mut all1) = (0, 0);
            for s in 0..x.count(n) {
                let v = &verts[n][s];
                let a = v.iter().take_while(|&&w| w == self.zero).count();
                if v[a..].iter().any(|&w| w != self.one) {
                    return Err(Error::NotDirected(format!(
                        "simplex {} at level {n} is not of the form 0..01..1",
                        x.label(n, s)
                    )));
                }
                if a == n + 1 {
                    all0 += 1;
                }
                if a == 0 {
                    all1 += 1;
                }
                lvl.push(a);
            }
            if all0 != 1 || all1 != 1 {
                return Err(Error::NotDirected(format!("nontrivial fibre at level {n}")));
            }
            out.push(lvl);
        }
        Ok(out)
    }

    pub fn is_directed(&self) -> bool {
        self.split_points().is_ok()
    }

    pub fn opposite(&self) -> PointedDirected {
        PointedDirected {
            carrier: super::constructions::opposite(&self.carrier),
            zero: self.one,
            one: self.zero,
        }
    }
}
