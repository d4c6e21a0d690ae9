//! Shift-invariant stabilizer sets: unrolling a convolutional block
//! specification to a finite code, the straddle indicator, and memory.

use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString};

/// A convolutional stabilizer specification: a block of eta-kappa
/// finite-support generator patterns repeated with qubit shift eta, plus
/// optional explicit boundary generators used to terminate the code at
/// finite length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvolutionalSpec {
    pub eta: usize,
    pub kappa: usize,
    /// One pattern per block row; its length is the window width.
    pub block: Vec<PauliString>,
    /// Full-width generators prepended before the bulk rows.
    pub boundary_head: Vec<PauliString>,
    /// Full-width generators appended after the bulk rows.
    pub boundary_tail: Vec<PauliString>,
}

impl ConvolutionalSpec {
    pub fn new(eta: usize, kappa: usize, block: Vec<PauliString>) -> Result<Self> {
        if eta == 0 || block.is_empty() {
            return Err(Error::WindowOverflow { n: 0, width: eta });
        }
        Ok(ConvolutionalSpec {
            eta,
            kappa,
            block,
            boundary_head: Vec::new(),
            boundary_tail: Vec::new(),
        })
    }

    pub fn with_boundaries(
        mut self,
        head: Vec<PauliString>,
        tail: Vec<PauliString>,
    ) -> Self {
        self.boundary_head = head;
        self.boundary_tail = tail;
        self
    }

    /// Cuts the infinite shift-invariant matrix to n qubits: block rows are
    /// placed at shifts 0, eta, 2*eta, ..., rows whose support would be
    /// truncated are dropped, and explicit boundary rows are kept verbatim.
    /// The result must validate as a stabilizer code.
    pub fn unroll(&self, n: usize) -> Result<StabilizerCode> {
        let widest = self.block.iter().map(PauliString::len).max().unwrap_or(0);
        if widest > n {
            return Err(Error::WindowOverflow { n, width: widest });
        }
        let mut generators = Vec::new();
        for head in &self.boundary_head {
            generators.push(place(head, 0, n)?);
        }
        let mut shift = 0;
        while shift < n {
            for pattern in &self.block {
                if let Some(row) = try_place(pattern, shift, n) {
                    generators.push(row);
                }
            }
            shift += self.eta;
        }
        for tail in &self.boundary_tail {
            generators.push(place(tail, 0, n)?);
        }
        let code = StabilizerCode::new(n, generators)?;
        code.validate()?;
        Ok(code)
    }
}

/// Places a pattern at a qubit offset, failing if its support is cut.
fn place(pattern: &PauliString, offset: usize, n: usize) -> Result<PauliString> {
    try_place(pattern, offset, n).ok_or(Error::WindowOverflow { n, width: offset + pattern.len() })
}

fn try_place(pattern: &PauliString, offset: usize, n: usize) -> Option<PauliString> {
    let mut coords = vec![Pauli::I; n];
    for (idx, &p) in pattern.coords().iter().enumerate() {
        if p == Pauli::I {
            continue;
        }
        if offset + idx >= n {
            return None; // support would be truncated
        }
        coords[offset + idx] = p;
    }
    Some(PauliString::new(coords))
}

/// Straddle indicator: 0 when the generator is all identity strictly after
/// coordinate i or all identity up to i, otherwise 1.
pub fn sharp(g: &PauliString, i: usize) -> u8 {
    let n = g.len();
    let all_i_after = (i + 1..=n).all(|c| g.coord(c) == Pauli::I);
    let all_i_upto = (1..=i).all(|c| g.coord(c) == Pauli::I);
    u8::from(!(all_i_after || all_i_upto))
}

/// Sum of straddle indicators over all generators at cut position i.
pub fn activity(code: &StabilizerCode, i: usize) -> usize {
    code.generators().iter().map(|g| usize::from(sharp(g, i))).sum()
}

/// Memory of a stabilizer set: the largest number of generators straddling
/// any cut. A property of the generating set, not of the code.
pub fn memory(code: &StabilizerCode) -> usize {
    (1..=code.n()).map(|i| activity(code, i)).max().unwrap_or(0)
}
