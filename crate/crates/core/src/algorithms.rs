//! The three dynamic programs over a syndrome trellis: Min-Sum decoding,
//! Sum-Product marginals, and the weight enumerator polynomial.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::channel::PauliChannel;
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString, PAULIS};
use crate::trellis::Trellis;

/// A decoded error estimate and its path weight (the negated
/// log-likelihood of the estimate).
#[derive(Debug, Clone, PartialEq)]
pub struct DecodeResult {
    pub error: PauliString,
    pub weight: f64,
}

/// Per-qubit conditional error marginals, row i summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct MarginalTable {
    rows: Vec<[f64; 4]>,
}

impl MarginalTable {
    pub(crate) fn new(rows: Vec<[f64; 4]>) -> Self {
        MarginalTable { rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Pr(error at qubit i = label | syndrome), i 1-based.
    pub fn prob(&self, i: usize, label: Pauli) -> f64 {
        self.rows[i - 1][label.index()]
    }

    pub fn row(&self, i: usize) -> &[f64; 4] {
        &self.rows[i - 1]
    }
}

impl fmt::Display for MarginalTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{:.12} {:.12} {:.12} {:.12}", row[0], row[1], row[2], row[3])?;
        }
        Ok(())
    }
}

/// Sparse trivariate weight enumerator polynomial A(x, y, z).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    coeffs: BTreeMap<(usize, usize, usize), u128>,
}

impl WeightEnumerator {
    pub(crate) fn from_coeffs(coeffs: BTreeMap<(usize, usize, usize), u128>) -> Self {
        WeightEnumerator { coeffs }
    }

    /// a_{u,v,w}: the number of counted strings with u X's, v Y's, w Z's.
    pub fn coefficient(&self, u: usize, v: usize, w: usize) -> u128 {
        self.coeffs.get(&(u, v, w)).copied().unwrap_or(0)
    }

    /// Exponent triples and coefficients in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize, usize), &u128)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn evaluate(&self, x: f64, y: f64, z: f64) -> f64 {
        self.coeffs
            .iter()
            .map(|(&(u, v, w), &a)| {
                a as f64 * x.powi(u as i32) * y.powi(v as i32) * z.powi(w as i32)
            })
            .sum()
    }

    /// One `u v w coeff` line per term, lexicographically sorted.
    pub fn table(&self) -> String {
        use fmt::Write;
        let mut out = String::new();
        for (&(u, v, w), &a) in &self.coeffs {
            writeln!(out, "{u} {v} {w} {a}").unwrap();
        }
        out
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut sorted: Vec<_> = self.coeffs.iter().collect();
        sorted.sort_by_key(|(&(u, v, w), _)| (u + v + w, u, v, w));
        for (idx, (&(u, v, w), &a)) in sorted.into_iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let monomial = [("x", u), ("y", v), ("z", w)]
                .iter()
                .filter(|&&(_, e)| e > 0)
                .map(|&(s, e)| if e == 1 { s.to_string() } else { format!("{s}^{e}") })
                .collect::<Vec<_>>()
                .join("");
            match (a, monomial.is_empty()) {
                (_, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{monomial}")?,
                (_, false) => write!(f, "{a}{monomial}")?,
            }
        }
        Ok(())
    }
}

/// How Min-Sum resolves equal-weight paths.
enum TieBreak {
    /// Prefer the lexicographically smallest label string (I < X < Y < Z).
    /// This is the default; it makes outputs reproducible.
    Lexicographic,
    /// Coin-flip per tie, as an explicitly seeded opt-in.
    Random(ChaCha8Rng),
}

/// Minimum-weight (maximum-likelihood) path search.
///
/// Returns the minimum-weight label string of the trellis together with
/// its weight; among equal-weight paths the lexicographically smallest
/// string wins. Edges of probability zero carry infinite weight and are
/// never taken.
pub fn min_sum(t: &Trellis, ch: &PauliChannel) -> Result<DecodeResult> {
    min_sum_inner(t, ch, TieBreak::Lexicographic).map(|(r, _)| r)
}

/// Min-Sum with randomized tie-breaking driven by an explicit seed.
pub fn min_sum_random_ties(t: &Trellis, ch: &PauliChannel, seed: u64) -> Result<DecodeResult> {
    min_sum_inner(t, ch, TieBreak::Random(ChaCha8Rng::seed_from_u64(seed))).map(|(r, _)| r)
}

/// Min-Sum plus the number of edge relaxations performed, for complexity
/// measurements.
pub fn min_sum_counted(t: &Trellis, ch: &PauliChannel) -> Result<(DecodeResult, usize)> {
    min_sum_inner(t, ch, TieBreak::Lexicographic)
}

fn min_sum_inner(
    t: &Trellis,
    ch: &PauliChannel,
    mut ties: TieBreak,
) -> Result<(DecodeResult, usize)> {
    let n = t.n();
    if ch.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: ch.len() });
    }
    let mut ops = 0usize;
    // per-vertex best: ascending-order weight sum and the label prefix
    // realizing it
    let mut best: Vec<Option<(f64, Vec<Pauli>)>> = vec![Some((0.0, Vec::new()))];
    for i in 1..=n {
        let mut next: Vec<Option<(f64, Vec<Pauli>)>> = vec![None; t.level(i).len()];
        for e in t.section(i) {
            ops += 1;
            let Some((w_from, prefix)) = &best[e.from] else {
                continue;
            };
            let we = ch.edge_weight(i, e.label)?;
            if we.is_infinite() {
                continue;
            }
            let cand = w_from + we;
            let better = match &next[e.to] {
                None => true,
                Some((cur, cur_prefix)) => {
                    cand < *cur
                        || (cand == *cur
                            && match &mut ties {
                                TieBreak::Lexicographic => {
                                    lex_less(prefix, e.label, cur_prefix)
                                }
                                TieBreak::Random(rng) => rng.random_bool(0.5),
                            })
                }
            };
            if better {
                let mut p = prefix.clone();
                p.push(e.label);
                next[e.to] = Some((cand, p));
            }
        }
        best = next;
    }
    debug_assert_eq!(best.len(), 1);
    match best.pop().unwrap() {
        Some((weight, labels)) => Ok((
            DecodeResult { error: PauliString::new(labels), weight },
            ops,
        )),
        None => Err(Error::NoFinitePath),
    }
}

/// Compares prefix+label against an existing full candidate.
fn lex_less(prefix: &[Pauli], label: Pauli, current: &[Pauli]) -> bool {
    debug_assert_eq!(prefix.len() + 1, current.len());
    for (a, b) in prefix.iter().zip(current) {
        if a != b {
            return a < b;
        }
    }
    label < current[current.len() - 1]
}

/// Forward-backward computation of the exact per-qubit conditional error
/// marginals, with per-section normalization of the forward and backward
/// tables to keep values in range for long trellises. Each output row is
/// renormalized to sum to 1.
pub fn sum_product(t: &Trellis, ch: &PauliChannel) -> Result<MarginalTable> {
    sum_product_counted(t, ch).map(|(m, _)| m)
}

pub fn sum_product_counted(t: &Trellis, ch: &PauliChannel) -> Result<(MarginalTable, usize)> {
    let n = t.n();
    if ch.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: ch.len() });
    }
    let mut ops = 0usize;

    // forward pass
    let mut fwd: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    fwd.push(vec![1.0]);
    for i in 1..=n {
        let mut f = vec![0.0; t.level(i).len()];
        for e in t.section(i) {
            ops += 1;
            f[e.to] += fwd[i - 1][e.from] * ch.prob(i, e.label);
        }
        let norm: f64 = f.iter().sum();
        if norm <= 0.0 {
            return Err(Error::ZeroMassCoset);
        }
        for v in &mut f {
            *v /= norm;
        }
        fwd.push(f);
    }

    // backward pass
    let mut bwd: Vec<Vec<f64>> = vec![Vec::new(); n + 1];
    bwd[n] = vec![1.0];
    for i in (0..n).rev() {
        let mut b = vec![0.0; t.level(i).len()];
        for e in t.section(i + 1) {
            ops += 1;
            b[e.from] += bwd[i + 1][e.to] * ch.prob(i + 1, e.label);
        }
        let norm: f64 = b.iter().sum();
        if norm <= 0.0 {
            return Err(Error::ZeroMassCoset);
        }
        for v in &mut b {
            *v /= norm;
        }
        bwd[i] = b;
    }

    // final pass
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = [0.0; 4];
        for e in t.section(i) {
            ops += 1;
            row[e.label.index()] += fwd[i - 1][e.from] * bwd[i][e.to] * ch.prob(i, e.label);
        }
        let norm: f64 = row.iter().sum();
        if norm <= 0.0 {
            return Err(Error::ZeroMassCoset);
        }
        for v in &mut row {
            *v /= norm;
        }
        rows.push(row);
    }
    Ok((MarginalTable::new(rows), ops))
}

/// Weight enumerator of the group represented by the all-zero-syndrome
/// trellis: per-vertex polynomials accumulated forward, every edge
/// multiplying by the monomial of its label (1, x, y or z).
pub fn weight_enumerator(t: &Trellis) -> Result<WeightEnumerator> {
    weight_enumerator_counted(t).map(|(a, _)| a)
}

pub fn weight_enumerator_counted(t: &Trellis) -> Result<(WeightEnumerator, usize)> {
    if !t.syndrome().is_zero() {
        return Err(Error::NonzeroSyndromeTrellis);
    }
    let n = t.n();
    let mut ops = 0usize;
    type Poly = BTreeMap<(usize, usize, usize), u128>;
    let mut acc: Vec<Poly> = vec![Poly::from([((0, 0, 0), 1)])];
    for i in 1..=n {
        let mut next: Vec<Poly> = vec![Poly::new(); t.level(i).len()];
        for e in t.section(i) {
            ops += 1;
            let bump = match e.label {
                Pauli::I => (0, 0, 0),
                Pauli::X => (1, 0, 0),
                Pauli::Y => (0, 1, 0),
                Pauli::Z => (0, 0, 1),
            };
            for (&(u, v, w), &a) in &acc[e.from] {
                *next[e.to]
                    .entry((u + bump.0, v + bump.1, w + bump.2))
                    .or_insert(0) += a;
            }
        }
        acc = next;
    }
    debug_assert_eq!(acc.len(), 1);
    Ok((WeightEnumerator::from_coeffs(acc.pop().unwrap()), ops))
}

/// Returns true when the identity label is forced to dominate every
/// coordinate, i.e. Pr_i(I) is strictly the largest probability. Used in
/// tests and kept private otherwise.
#[allow(dead_code)]
fn identity_dominates(ch: &PauliChannel) -> bool {
    (1..=ch.len()).all(|i| {
        PAULIS[1..]
            .iter()
            .all(|&l| ch.prob(i, Pauli::I) > ch.prob(i, l))
    })
}
