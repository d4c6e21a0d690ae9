//! Trellis representations of quantum stabilizer codes.
//!
//! Builds the syndrome (Wolf) trellis of a stabilizer code, rewrites
//! stabilizer sets into trellis-oriented form for minimal state profiles,
//! and runs the trellis dynamic programs: Min-Sum maximum-likelihood
//! decoding, Sum-Product conditional marginals, and weight-enumerator
//! computation. Brute-force coset oracles back every fast path.

pub mod algorithms;
pub mod channel;
pub mod code;
pub mod convolutional;
pub mod error;
mod gf2;
pub mod io;
pub mod oracle;
pub mod pauli;
pub mod trellis;

pub use algorithms::{
    min_sum, min_sum_counted, min_sum_random_ties, sum_product, sum_product_counted,
    weight_enumerator, weight_enumerator_counted, DecodeResult, MarginalTable, WeightEnumerator,
};
pub use channel::PauliChannel;
pub use code::{StabilizerCode, Syndrome};
pub use convolutional::{activity, memory, sharp, ConvolutionalSpec};
pub use error::{Error, Result};
pub use pauli::{Pauli, PauliString, PAULIS};
pub use trellis::{
    build_wolf_trellis, future_subgroup, is_trellis_oriented, past_subgroup, span,
    trellis_oriented_form, Edge, Span, StateProfile, Trellis,
};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::code::StabilizerCode;
    use crate::pauli::PauliString;

    pub use crate::oracle::{random_channel, random_code};

    pub fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    /// Fig. 1 code: {XXXX, ZZZZ}, n = 4, k = 2.
    pub fn four_qubit() -> StabilizerCode {
        StabilizerCode::new(4, vec![ps("XXXX"), ps("ZZZZ")]).unwrap()
    }

    /// Fig. 2 code: {ZXIII, XZXII, IXZXI, IIXZX}, n = 5, k = 1.
    pub fn five_qubit() -> StabilizerCode {
        StabilizerCode::new(
            5,
            vec![ps("ZXIII"), ps("XZXII"), ps("IXZXI"), ps("IIXZX")],
        )
        .unwrap()
    }

    /// n = 1, k = 0 code {X}; its zero-syndrome coset is {I, X}.
    pub fn single_x() -> StabilizerCode {
        StabilizerCode::new(1, vec![ps("X")]).unwrap()
    }
}
