//! Stabilizer codes over the effective Pauli group: validation, syndromes,
//! and coset representatives via GF(2) solves.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::pauli::PauliString;

/// The n-k bit outcome of measuring every stabilizer generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syndrome {
    bits: Vec<bool>,
}

impl Syndrome {
    pub fn new(bits: Vec<bool>) -> Self {
        Syndrome { bits }
    }

    pub fn zero(len: usize) -> Self {
        Syndrome { bits: vec![false; len] }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Packs bit j (1-based generator index) into position j-1 of a word.
    pub fn to_word(&self) -> u64 {
        assert!(self.bits.len() <= 64);
        self.bits
            .iter()
            .enumerate()
            .fold(0, |acc, (j, &b)| acc | (u64::from(b) << j))
    }

    pub fn from_word(word: u64, len: usize) -> Self {
        Syndrome {
            bits: (0..len).map(|j| word >> j & 1 == 1).collect(),
        }
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", u8::from(b))?;
        }
        Ok(())
    }
}

impl FromStr for Syndrome {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(format!("invalid syndrome bit '{c}'")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Syndrome::new)
    }
}

/// An (n, k) stabilizer code given by an ordered stabilizer set of n-k
/// generators. The generating set is ordered because the trellis
/// constructions depend on row order and row operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<PauliString>,
}

impl StabilizerCode {
    /// Builds the code from its stabilizer set. Only shape is checked here;
    /// call [`StabilizerCode::validate`] for the group-theoretic invariants.
    pub fn new(n: usize, generators: Vec<PauliString>) -> Result<Self> {
        if generators.len() > n {
            return Err(Error::DependentGenerators);
        }
        for g in &generators {
            if g.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: g.len() });
            }
        }
        Ok(StabilizerCode { n, generators })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.generators.len()
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    /// Generator j, 1-based.
    pub fn generator(&self, j: usize) -> &PauliString {
        &self.generators[j - 1]
    }

    /// Checks commutation, independence, and absence of identity rows.
    pub fn validate(&self) -> Result<()> {
        for (j, g) in self.generators.iter().enumerate() {
            if g.is_identity() {
                return Err(Error::AllIdentityGenerator(j + 1));
            }
        }
        for j in 0..self.generators.len() {
            for j2 in j + 1..self.generators.len() {
                if self.generators[j].star(&self.generators[j2])? == 1 {
                    return Err(Error::NonCommuting(j + 1, j2 + 1));
                }
            }
        }
        let rows: Vec<Vec<bool>> =
            self.generators.iter().map(|g| g.to_symplectic()).collect();
        if BitMatrix::from_rows(&rows).rank() < self.generators.len() {
            return Err(Error::DependentGenerators);
        }
        Ok(())
    }

    /// Measures the syndrome of an error: bit j is `star(S_j, e)`.
    pub fn syndrome(&self, e: &PauliString) -> Result<Syndrome> {
        if e.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: e.len() });
        }
        Ok(Syndrome::new(
            self.generators
                .iter()
                .map(|g| g.star(e).map(|b| b == 1))
                .collect::<Result<_>>()?,
        ))
    }

    /// The star-product of each generator against a variable string is a
    /// linear form in the string's symplectic bits; this is its matrix.
    /// Row j is the symplectic encoding of S_j with x and z halves swapped.
    pub(crate) fn parity_matrix(&self) -> BitMatrix {
        let rows: Vec<Vec<bool>> = self
            .generators
            .iter()
            .map(|g| {
                let v = g.to_symplectic();
                let (x, z) = v.split_at(self.n);
                let mut row = z.to_vec();
                row.extend_from_slice(x);
                row
            })
            .collect();
        BitMatrix::from_rows(&rows)
    }

    /// Some fixed Pauli string with the requested syndrome, obtained from a
    /// GF(2) solve with lowest-index pivoting (free variables set to zero),
    /// so the result is deterministic for fixed inputs.
    pub fn coset_representative(&self, s: &Syndrome) -> Result<PauliString> {
        if s.len() != self.num_generators() {
            return Err(Error::LengthMismatch {
                expected: self.num_generators(),
                got: s.len(),
            });
        }
        let x = self
            .parity_matrix()
            .solve(s.bits())
            .expect("independent generators always admit a solution");
        PauliString::from_symplectic(&x)
    }

    /// A basis of S-perp, the group of strings orthogonal to every
    /// generator; it has dimension n+k.
    pub fn dual_basis(&self) -> Vec<PauliString> {
        self.parity_matrix()
            .null_space()
            .iter()
            .map(|v| PauliString::from_symplectic(v).expect("even length"))
            .collect()
    }

    /// Membership of a string in the stabilizer group S itself, tested as
    /// orthogonality to a basis of S-perp (S is the symplectic dual of
    /// S-perp).
    pub fn contains_stabilizer(&self, p: &PauliString) -> Result<bool> {
        for b in self.dual_basis() {
            if b.star(p)? == 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
