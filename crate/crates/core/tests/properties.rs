//! Randomized invariants checked with proptest.

use proptest::prelude::*;

use stabtrellis::oracle::{enumerate_coset, random_code};
use stabtrellis::{build_wolf_trellis, Pauli, PauliString, Syndrome, PAULIS};

fn arb_pauli() -> impl Strategy<Value = Pauli> {
    (0usize..4).prop_map(|i| PAULIS[i])
}

fn arb_string(n: usize) -> impl Strategy<Value = PauliString> {
    proptest::collection::vec(arb_pauli(), n).prop_map(PauliString::new)
}

proptest! {
    /// The star product is symmetric and vanishes on the diagonal.
    #[test]
    fn star_symmetric_alternating((a, b) in (1usize..10).prop_flat_map(|n| (arb_string(n), arb_string(n)))) {
        prop_assert_eq!(a.star(&b).unwrap(), b.star(&a).unwrap());
        prop_assert_eq!(a.star(&a).unwrap(), 0);
    }

    /// Bilinearity: (a + b) * c = a*c xor b*c.
    #[test]
    fn star_bilinear((a, b, c) in (1usize..10).prop_flat_map(|n| (arb_string(n), arb_string(n), arb_string(n)))) {
        let lhs = a.add(&b).unwrap().star(&c).unwrap();
        let rhs = a.star(&c).unwrap() ^ b.star(&c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// Symplectic word round-trip.
    #[test]
    fn symplectic_round_trip(s in (1usize..12).prop_flat_map(arb_string)) {
        let back = PauliString::from_symplectic(&s.to_symplectic()).unwrap();
        prop_assert_eq!(back, s);
    }

    /// Syndromes are additive: s(E + F) = s(E) xor s(F).
    #[test]
    fn syndrome_linear(seed in any::<u64>(), (e, f) in (2usize..8).prop_flat_map(|n| (arb_string(n), arb_string(n)))) {
        let n = e.len();
        prop_assume!(n >= 2);
        let code = match random_code(n, n / 2, seed) {
            Some(c) => c,
            None => return Ok(()),
        };
        let se = code.syndrome(&e).unwrap().to_word();
        let sf = code.syndrome(&f).unwrap().to_word();
        let sum = code.syndrome(&e.add(&f).unwrap()).unwrap().to_word();
        prop_assert_eq!(sum, se ^ sf);
    }

    /// Trellis paths biject with the syndrome coset for random codes.
    #[test]
    fn path_bijection(seed in any::<u64>(), n in 2usize..6, word in any::<u64>()) {
        let code = match random_code(n, n / 2, seed) {
            Some(c) => c,
            None => return Ok(()),
        };
        let m = code.num_generators();
        let s = Syndrome::from_word(word & ((1 << m) - 1), m);
        let t = build_wolf_trellis(&code, &s).unwrap();
        let mut paths = t.enumerate_paths();
        paths.sort();
        paths.dedup();
        let mut coset = enumerate_coset(&code, &s).unwrap().elements().to_vec();
        coset.sort();
        prop_assert_eq!(paths, coset);
    }

    /// State spaces never exceed 2^{n-k}.
    #[test]
    fn state_space_cap(seed in any::<u64>(), n in 2usize..7) {
        let code = match random_code(n, n / 2, seed) {
            Some(c) => c,
            None => return Ok(()),
        };
        let m = code.num_generators();
        let t = build_wolf_trellis(&code, &Syndrome::zero(m)).unwrap();
        for i in 0..=n {
            prop_assert!(t.level(i).len() <= 1 << m);
        }
    }
}
