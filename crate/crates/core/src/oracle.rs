//! Brute-force reference implementations over explicit coset enumeration.
//!
//! Everything here is ground truth for the fast trellis paths: exact MLE,
//! exact marginals, exact enumerator coefficients, and the state-profile
//! lower bound, all by full enumeration behind loud size guards. The
//! random fixture generators used by the test suites and the hidden CLI
//! fixture subcommand also live here.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use std::collections::BTreeMap;

use crate::algorithms::{DecodeResult, MarginalTable, WeightEnumerator};
use crate::channel::PauliChannel;
use crate::code::{StabilizerCode, Syndrome};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::pauli::{Pauli, PauliString};
use crate::trellis::{future_subgroup, past_subgroup};

/// Enumeration guard: cosets have 2^{n+k} elements.
const COSET_GUARD_BITS: usize = 24;

/// The full coset of Pauli strings sharing one syndrome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetEnumeration {
    elements: Vec<PauliString>,
}

impl CosetEnumeration {
    pub fn elements(&self) -> &[PauliString] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Enumerates the coset P_s + S-perp, exactly 2^{n+k} strings.
pub fn enumerate_coset(code: &StabilizerCode, s: &Syndrome) -> Result<CosetEnumeration> {
    let bits = code.n() + code.k();
    if bits > COSET_GUARD_BITS {
        return Err(Error::SizeGuardExceeded { actual: bits, limit: COSET_GUARD_BITS });
    }
    let rep = code.coset_representative(s)?;
    let basis = code.dual_basis();
    debug_assert_eq!(basis.len(), bits);
    let mut elements = Vec::with_capacity(1 << bits);
    for mask in 0..1usize << bits {
        let mut e = rep.clone();
        for (b, g) in basis.iter().enumerate() {
            if mask >> b & 1 == 1 {
                e = e.add(g)?;
            }
        }
        elements.push(e);
    }
    Ok(CosetEnumeration { elements })
}

/// Exact maximum-likelihood estimate by scanning the whole coset, with the
/// same lexicographic tie-break and the same coordinate-order weight
/// summation as [`crate::algorithms::min_sum`].
pub fn brute_mle(
    code: &StabilizerCode,
    s: &Syndrome,
    ch: &PauliChannel,
) -> Result<DecodeResult> {
    let coset = enumerate_coset(code, s)?;
    let mut best: Option<(f64, PauliString)> = None;
    for e in coset.elements() {
        let mut weight = 0.0;
        for i in 1..=code.n() {
            weight += ch.edge_weight(i, e.coord(i))?;
        }
        if weight.is_infinite() {
            continue;
        }
        let replace = match &best {
            None => true,
            Some((w, p)) => weight < *w || (weight == *w && e < p),
        };
        if replace {
            best = Some((weight, e.clone()));
        }
    }
    match best {
        Some((weight, error)) => Ok(DecodeResult { error, weight }),
        None => Err(Error::NoFinitePath),
    }
}

/// Exact conditional marginals Pr(error at qubit i = P | syndrome) by
/// full enumeration.
pub fn brute_marginals(
    code: &StabilizerCode,
    s: &Syndrome,
    ch: &PauliChannel,
) -> Result<MarginalTable> {
    let n = code.n();
    let coset = enumerate_coset(code, s)?;
    let mut mass = vec![[0.0f64; 4]; n];
    let mut total = 0.0;
    for e in coset.elements() {
        let p: f64 = (1..=n).map(|i| ch.prob(i, e.coord(i))).product();
        total += p;
        for i in 1..=n {
            mass[i - 1][e.coord(i).index()] += p;
        }
    }
    if total <= 0.0 {
        return Err(Error::ZeroMassCoset);
    }
    let rows = mass
        .into_iter()
        .map(|row| {
            let sum: f64 = row.iter().sum();
            [row[0] / sum, row[1] / sum, row[2] / sum, row[3] / sum]
        })
        .collect();
    Ok(MarginalTable::new(rows))
}

/// Exact weight enumerator of S-perp by counting X/Y/Z coordinates of all
/// its elements.
pub fn brute_enumerator(code: &StabilizerCode) -> Result<WeightEnumerator> {
    let coset = enumerate_coset(code, &Syndrome::zero(code.num_generators()))?;
    let mut coeffs: BTreeMap<(usize, usize, usize), u128> = BTreeMap::new();
    for e in coset.elements() {
        let mut counts = (0usize, 0usize, 0usize);
        for &p in e.coords() {
            match p {
                Pauli::I => {}
                Pauli::X => counts.0 += 1,
                Pauli::Y => counts.1 += 1,
                Pauli::Z => counts.2 += 1,
            }
        }
        *coeffs.entry(counts).or_insert(0) += 1;
    }
    Ok(WeightEnumerator::from_coeffs(coeffs))
}

/// The state-profile lower bound n+k - log2|Pst_i| - log2|Ftr_i|.
pub fn brute_profile_bound(code: &StabilizerCode, i: usize) -> Result<i64> {
    let pst = past_subgroup(code, i)?.len();
    let ftr = future_subgroup(code, i)?.len();
    Ok((code.n() + code.k()) as i64 - pst.ilog2() as i64 - ftr.ilog2() as i64)
}

/// Draws a random validated (n, k) stabilizer code, or `None` when the
/// greedy search stalls for this seed. For test-suite and fixture use.
pub fn random_code(n: usize, k: usize, seed: u64) -> Option<StabilizerCode> {
    assert!(k < n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = n - k;
    let mut gens: Vec<PauliString> = Vec::new();
    let mut attempts = 0;
    while gens.len() < target {
        attempts += 1;
        if attempts > 4000 {
            return None;
        }
        let cand = PauliString::new(
            (0..n)
                .map(|_| Pauli::from_bits(rng.random_bool(0.5), rng.random_bool(0.5)))
                .collect(),
        );
        if cand.is_identity() {
            continue;
        }
        if gens.iter().any(|g| g.star(&cand).unwrap() == 1) {
            continue;
        }
        let mut rows: Vec<Vec<bool>> = gens.iter().map(|g| g.to_symplectic()).collect();
        rows.push(cand.to_symplectic());
        if BitMatrix::from_rows(&rows).rank() < gens.len() + 1 {
            continue;
        }
        gens.push(cand);
    }
    let code = StabilizerCode::new(n, gens).ok()?;
    code.validate().ok()?;
    Some(code)
}

/// Draws a random strictly positive Pauli channel (per-qubit distributions
/// bounded away from zero). For test-suite and fixture use.
pub fn random_channel(n: usize, seed: u64) -> PauliChannel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let dists = (0..n)
        .map(|_| {
            let raw: [f64; 4] = std::array::from_fn(|_| 0.05 + rng.random::<f64>());
            let sum: f64 = raw.iter().sum();
            [raw[0] / sum, raw[1] / sum, raw[2] / sum, raw[3] / sum]
        })
        .collect();
    PauliChannel::new(dists).expect("normalized by construction")
}
