//! Memoryless Pauli channels: per-qubit error distributions, log-likelihoods,
//! edge weights, and reproducible error sampling.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString, PAULIS};

const DIST_TOL: f64 = 1e-12;

/// n independent per-qubit distributions over {I, X, Y, Z}.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliChannel {
    /// dists[i][Pauli::index()] = Pr_{i+1}(label)
    dists: Vec<[f64; 4]>,
}

impl PauliChannel {
    pub fn new(dists: Vec<[f64; 4]>) -> Result<Self> {
        for d in &dists {
            for &p in d {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::ProbabilityOutOfRange(p));
                }
            }
            let sum: f64 = d.iter().sum();
            if (sum - 1.0).abs() > DIST_TOL {
                return Err(Error::NotADistribution(sum));
            }
        }
        Ok(PauliChannel { dists })
    }

    /// Depolarizing channel: Pr(I) = 1-p and Pr(X) = Pr(Y) = Pr(Z) = p/3.
    pub fn depolarizing(n: usize, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::ProbabilityOutOfRange(p));
        }
        Ok(PauliChannel {
            dists: vec![[1.0 - p, p / 3.0, p / 3.0, p / 3.0]; n],
        })
    }

    /// The same distribution 1/4 everywhere.
    pub fn uniform(n: usize) -> Self {
        PauliChannel { dists: vec![[0.25; 4]; n] }
    }

    pub fn len(&self) -> usize {
        self.dists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dists.is_empty()
    }

    /// Pr_i(label), with i 1-based.
    pub fn prob(&self, i: usize, label: Pauli) -> f64 {
        self.dists[i - 1][label.index()]
    }

    pub fn dist(&self, i: usize) -> &[f64; 4] {
        &self.dists[i - 1]
    }

    /// Log-likelihood of a string: the sum of per-coordinate log
    /// probabilities, taken in coordinate order. -inf when any factor is 0.
    pub fn likelihood(&self, e: &PauliString) -> Result<f64> {
        if e.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: e.len() });
        }
        let mut acc = 0.0;
        for (i, &p) in e.coords().iter().enumerate() {
            acc += self.dists[i][p.index()].ln();
        }
        Ok(acc)
    }

    /// Trellis edge weight -log Pr_i(label); +inf for zero probability.
    pub fn edge_weight(&self, i: usize, label: Pauli) -> Result<f64> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, max: self.len() });
        }
        Ok(-self.dists[i - 1][label.index()].ln())
    }

    /// Draws one error string, each coordinate independently from its
    /// distribution. The PRNG is ChaCha8 seeded with `seed`, consuming one
    /// f64 per qubit in coordinate order, so results are reproducible.
    pub fn sample_error(&self, seed: u64) -> PauliString {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coords = self
            .dists
            .iter()
            .map(|d| {
                let r: f64 = rng.random();
                let mut acc = 0.0;
                for label in PAULIS {
                    acc += d[label.index()];
                    if r < acc {
                        return label;
                    }
                }
                Pauli::Z
            })
            .collect();
        PauliString::new(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn depolarizing_distributions() {
        let ch = PauliChannel::depolarizing(4, 0.0).unwrap();
        for i in 1..=4 {
            assert_eq!(ch.prob(i, Pauli::I), 1.0);
        }
        let ch = PauliChannel::depolarizing(1, 0.3).unwrap();
        assert_relative_eq!(ch.prob(1, Pauli::I), 0.7);
        assert_relative_eq!(ch.prob(1, Pauli::X), 0.1);
        let ch = PauliChannel::depolarizing(3, 0.75).unwrap();
        for label in PAULIS {
            assert_relative_eq!(ch.prob(2, label), 0.25);
        }
        assert!(PauliChannel::depolarizing(2, 1.5).is_err());
    }

    #[test]
    fn likelihood_examples() {
        let ch = PauliChannel::depolarizing(4, 0.0).unwrap();
        assert_eq!(ch.likelihood(&ps("IIII")).unwrap(), 0.0);
        assert_eq!(ch.likelihood(&ps("XIII")).unwrap(), f64::NEG_INFINITY);
        let ch = PauliChannel::depolarizing(2, 0.3).unwrap();
        assert_relative_eq!(
            ch.likelihood(&ps("XI")).unwrap(),
            0.1f64.ln() + 0.7f64.ln()
        );
        assert!(ch.likelihood(&ps("X")).is_err());
    }

    #[test]
    fn edge_weight_examples() {
        let ch = PauliChannel::uniform(3);
        for label in PAULIS {
            assert_relative_eq!(ch.edge_weight(2, label).unwrap(), 4f64.ln());
        }
        let ch = PauliChannel::depolarizing(3, 0.0).unwrap();
        assert_eq!(ch.edge_weight(1, Pauli::I).unwrap(), 0.0);
        assert_eq!(ch.edge_weight(1, Pauli::X).unwrap(), f64::INFINITY);
        assert!(ch.edge_weight(0, Pauli::I).is_err());
        assert!(ch.edge_weight(4, Pauli::I).is_err());
    }

    #[test]
    fn weight_sum_is_negative_likelihood() {
        let ch = PauliChannel::depolarizing(5, 0.23).unwrap();
        let e = ps("XIZYI");
        let sum: f64 = (1..=5)
            .map(|i| ch.edge_weight(i, e.coord(i)).unwrap())
            .sum();
        assert_eq!(sum, -ch.likelihood(&e).unwrap());
    }

    #[test]
    fn uniform_likelihood_is_constant() {
        let ch = PauliChannel::uniform(4);
        for s in ["IIII", "XYZX", "ZZZZ"] {
            assert_relative_eq!(ch.likelihood(&ps(s)).unwrap(), -4.0 * 4f64.ln());
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let ch = PauliChannel::depolarizing(16, 0.4).unwrap();
        assert_eq!(ch.sample_error(7), ch.sample_error(7));
        let ch0 = PauliChannel::depolarizing(8, 0.0).unwrap();
        assert!(ch0.sample_error(123).is_identity());
    }

    #[test]
    fn sampling_frequencies_match_distribution() {
        let ch = PauliChannel::new(vec![[0.7, 0.1, 0.1, 0.1]]).unwrap();
        let trials = 100_000;
        let mut counts = [0u32; 4];
        for seed in 0..trials {
            counts[ch.sample_error(seed).coord(1).index()] += 1;
        }
        for label in PAULIS {
            let p = ch.prob(1, label);
            let mean = p * trials as f64;
            let sigma = (trials as f64 * p * (1.0 - p)).sqrt();
            let observed = counts[label.index()] as f64;
            assert!(
                (observed - mean).abs() < 3.0 * sigma,
                "label {label}: observed {observed}, expected {mean} +/- {sigma}"
            );
        }
    }

    #[test]
    fn rejects_bad_distributions() {
        assert!(PauliChannel::new(vec![[0.5, 0.5, 0.5, -0.5]]).is_err());
        assert!(PauliChannel::new(vec![[0.5, 0.2, 0.2, 0.2]]).is_err());
    }
}
