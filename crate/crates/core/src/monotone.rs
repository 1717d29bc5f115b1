//! Monotone maps between finite ordinals `[m] = {0 < 1 < ... < m}` and their
//! factorisation into the generating cofaces and codegeneracies.

/// Generating morphism of the simplex category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// δ^i : [n-1] → [n], skipping `i`.
    Coface(usize),
    /// σ^i : [n+1] → [n], hitting `i` twice.
    Codegeneracy(usize),
}

/// A weakly monotone map `[m] → [target]` stored as its value sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monotone {
    pub target: usize,
    pub values: Vec<usize>,
}

impl Monotone {
    pub fn new(target: usize, values: Vec<usize>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(values.iter().all(|&v| v <= target));
        Monotone { target, values }
    }

    pub fn identity(n: usize) -> Self {
        Monotone::new(n, (0..=n).collect())
    }

    pub fn coface(n: usize, i: usize) -> Self {
        Monotone::new(n, (0..n).map(|t| if t < i { t } else { t + 1 }).collect())
    }

    pub fn codegeneracy(n: usize, i: usize) -> Self {
        Monotone::new(
            n,
            (0..=n + 1)
                .map(|t| if t <= i { t } else { t - 1 })
                .collect(),
        )
    }

    /// Dimension of the source ordinal.
    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Monotone) -> Monotone {
        assert_eq!(other.target, self.source());
        Monotone::new(
            self.target,
            other.values.iter().map(|&t| self.values[t]).collect(),
        )
    }

    /// Conjugation `r ∘ self ∘ r` by the order reversals of source and target.
    pub fn reversed(&self) -> Monotone {
        let m = self.source();
        Monotone::new(
            self.target,
            (0..=m).map(|t| self.target - self.values[m - t]).collect(),
        )
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.target
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Generators whose composite is `self`, listed in the order a covariant
    /// functor must apply them: codegeneracies first, then cofaces.
    pub fn covariant_steps(&self) -> Vec<Generator> {
        let mut steps = Vec::new();
        let mut merges: Vec<usize> = (0..self.source())
            .filter(|&t| self.values[t] == self.values[t + 1])
            .collect();
        merges.reverse();
        steps.extend(merges.into_iter().map(Generator::Codegeneracy));
        steps.extend(self.missing_values().into_iter().map(Generator::Coface));
        steps
    }

    /// Generators in the order a contravariant functor (a simplicial set) must
    /// apply them to compute `self^*`: faces first (largest index first), then
    /// degeneracies (smallest position first).
    pub fn contravariant_steps(&self) -> Vec<Generator> {
        let mut steps: Vec<Generator> = self
            .missing_values()
            .into_iter()
            .rev()
            .map(Generator::Coface)
            .collect();
        steps.extend(
            (0..self.source())
                .filter(|&t| self.values[t] == self.values[t + 1])
                .map(Generator::Codegeneracy),
        );
        steps
    }

    fn missing_values(&self) -> Vec<usize> {
        let mut hit = vec![false; self.target + 1];
        for &v in &self.values {
            hit[v] = true;
        }
        (0..=self.target).filter(|&v| !hit[v]).collect()
    }
}

/// All weakly increasing sequences of length `len` with entries in `0..=max`,
/// in lexicographic order.
pub fn increasing_sequences(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, max: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=max {
            cur.push(v);
            rec(len, max, v, cur, out);
            cur.pop();
        }
    }
    rec(len, max, 0, &mut cur, &mut out);
    out
}

/// Binomial coefficient.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apply_covariant(theta: &Monotone) -> Monotone {
        let mut cur = Monotone::identity(theta.source());
        for g in theta.covariant_steps() {
            let n = cur.target;
            let gen = match g {
                Generator::Coface(i) => Monotone::coface(n + 1, i),
                Generator::Codegeneracy(i) => Monotone::codegeneracy(n - 1, i),
            };
            cur = gen.compose(&cur);
        }
        cur
    }

    fn apply_contravariant(theta: &Monotone) -> Monotone {
        // Δ^n as a simplicial set: θ^*(z) = z ∘ θ, starting from the top simplex.
        let mut cur = Monotone::identity(theta.target);
        for g in theta.contravariant_steps() {
            let n = cur.source();
            let gen = match g {
                Generator::Coface(i) => Monotone::coface(n, i),
                Generator::Codegeneracy(i) => Monotone::codegeneracy(n, i),
            };
            cur = cur.compose(&gen);
        }
        cur
    }

    #[test]
    fn factorisations_recompose() {
        for m in 0..4 {
            for n in 0..4 {
                for values in increasing_sequences(m + 1, n) {
                    let theta = Monotone::new(n, values);
                    assert_eq!(apply_covariant(&theta), theta);
                    assert_eq!(apply_contravariant(&theta), theta);
                }
            }
        }
    }

    #[test]
    fn sequence_counts_are_binomial() {
        for len in 1..5 {
            for max in 0..4 {
                assert_eq!(
                    increasing_sequences(len, max).len(),
                    binomial(max + len, len)
                );
            }
        }
    }

    #[test]
    fn reversal_conjugates_generators() {
        assert_eq!(Monotone::coface(3, 1).reversed(), Monotone::coface(3, 2));
        assert_eq!(
            Monotone::codegeneracy(2, 0).reversed(),
            Monotone::codegeneracy(2, 2)
        );
    }
}
