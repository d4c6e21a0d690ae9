//! Single-qubit Pauli labels and length-n Pauli strings in the bit-pair
//! (x, z) encoding, together with the symplectic inner product.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One of the four phase-free Pauli labels.
///
/// Encoded as a bit pair (x, z): I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
/// The derived `Ord` gives the tie-break order I < X < Y < Z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Pauli {
    #[default]
    I,
    X,
    Y,
    Z,
}

pub const PAULIS: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

impl Pauli {
    pub fn x_bit(self) -> bool {
        matches!(self, Pauli::X | Pauli::Y)
    }

    pub fn z_bit(self) -> bool {
        matches!(self, Pauli::Z | Pauli::Y)
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (false, true) => Pauli::Z,
            (true, true) => Pauli::Y,
        }
    }

    /// Group addition: coordinatewise XOR of the bit pairs.
    pub fn add(self, other: Pauli) -> Pauli {
        Pauli::from_bits(self.x_bit() ^ other.x_bit(), self.z_bit() ^ other.z_bit())
    }

    /// Single-coordinate symplectic product: 1 iff the two labels are
    /// distinct and neither is the identity.
    pub fn star(self, other: Pauli) -> u8 {
        u8::from(
            (self.x_bit() & other.z_bit()) ^ (self.z_bit() & other.x_bit()),
        )
    }

    /// Dense index I=0, X=1, Y=2, Z=3, used for channel tables.
    pub fn index(self) -> usize {
        match self {
            Pauli::I => 0,
            Pauli::X => 1,
            Pauli::Y => 2,
            Pauli::Z => 3,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A length-n word over {I, X, Y, Z}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    coords: Vec<Pauli>,
}

impl PauliString {
    pub fn new(coords: Vec<Pauli>) -> Self {
        PauliString { coords }
    }

    pub fn identity(n: usize) -> Self {
        PauliString { coords: vec![Pauli::I; n] }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&p| p == Pauli::I)
    }

    /// Coordinate i, 1-based.
    pub fn coord(&self, i: usize) -> Pauli {
        self.coords[i - 1]
    }

    pub fn coords(&self) -> &[Pauli] {
        &self.coords
    }

    /// Coordinatewise group addition.
    pub fn add(&self, other: &PauliString) -> Result<PauliString> {
        self.check_len(other.len())?;
        Ok(PauliString {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a.add(b))
                .collect(),
        })
    }

    /// Symplectic inner product: sum of coordinatewise stars mod 2.
    pub fn star(&self, other: &PauliString) -> Result<u8> {
        self.check_len(other.len())?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a.star(b))
            .fold(0, |acc, s| acc ^ s))
    }

    /// Keeps the first i coordinates, sets the rest to identity.
    pub fn truncate_after(&self, i: usize) -> Result<PauliString> {
        if i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, max: self.len() });
        }
        let mut coords = self.coords.clone();
        for p in coords.iter_mut().skip(i) {
            *p = Pauli::I;
        }
        Ok(PauliString { coords })
    }

    /// Binary symplectic encoding: x bits of all coordinates, then z bits.
    pub fn to_symplectic(&self) -> Vec<bool> {
        let mut v = Vec::with_capacity(2 * self.len());
        v.extend(self.coords.iter().map(|p| p.x_bit()));
        v.extend(self.coords.iter().map(|p| p.z_bit()));
        v
    }

    pub fn from_symplectic(v: &[bool]) -> Result<PauliString> {
        if v.len() % 2 != 0 {
            return Err(Error::OddSymplecticLength(v.len()));
        }
        let n = v.len() / 2;
        Ok(PauliString {
            coords: (0..n).map(|i| Pauli::from_bits(v[i], v[n + i])).collect(),
        })
    }

    fn check_len(&self, got: usize) -> Result<()> {
        if self.len() == got {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.len(), got })
        }
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.coords {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        s.chars()
            .map(|c| Pauli::from_symbol(c).ok_or_else(|| format!("invalid Pauli symbol '{c}'")))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(PauliString::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn addition_table() {
        use Pauli::*;
        assert_eq!(X.add(Z), Y);
        assert_eq!(Y.add(Y), I);
        assert_eq!(I.add(Z), Z);
        for p in PAULIS {
            assert_eq!(p.add(p), I);
            for q in PAULIS {
                assert_eq!(p.add(q), q.add(p));
                for r in PAULIS {
                    assert_eq!(p.add(q).add(r), p.add(q.add(r)));
                }
            }
        }
    }

    #[test]
    fn single_star() {
        use Pauli::*;
        for p in PAULIS {
            for q in PAULIS {
                let expect = u8::from(p != q && p != I && q != I);
                assert_eq!(p.star(q), expect);
                assert_eq!(q.star(p), expect);
            }
        }
    }

    #[test]
    fn string_star_examples() {
        assert_eq!(ps("XXXX").star(&ps("ZZZZ")).unwrap(), 0);
        assert_eq!(ps("XIII").star(&ps("ZIII")).unwrap(), 1);
        for s in ["IXYZ", "YYYY", "IIII"] {
            assert_eq!(ps(s).star(&ps(s)).unwrap(), 0);
        }
    }

    #[test]
    fn star_length_mismatch() {
        assert!(matches!(
            ps("XX").star(&ps("X")),
            Err(Error::LengthMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn truncation() {
        assert_eq!(ps("XYZI").truncate_after(0).unwrap(), ps("IIII"));
        assert_eq!(ps("XYZI").truncate_after(2).unwrap(), ps("XYII"));
        assert_eq!(ps("XYZI").truncate_after(4).unwrap(), ps("XYZI"));
        assert!(ps("XYZI").truncate_after(5).is_err());
    }

    #[test]
    fn symplectic_round_trip() {
        let s = ps("IXYZ");
        assert_eq!(PauliString::from_symplectic(&s.to_symplectic()).unwrap(), s);
        assert_eq!(
            PauliString::identity(3).to_symplectic(),
            vec![false; 6]
        );
        assert!(PauliString::from_symplectic(&[true, false, true]).is_err());
    }

    #[test]
    fn star_via_encoding_matches_table_exhaustively() {
        // all 16 x 16 pairs of 2-qubit strings
        for a in 0..16u8 {
            for bv in 0..16u8 {
                let dec = |m: u8| {
                    PauliString::new(vec![
                        Pauli::from_bits(m & 1 != 0, m & 2 != 0),
                        Pauli::from_bits(m & 4 != 0, m & 8 != 0),
                    ])
                };
                let (p, q) = (dec(a), dec(bv));
                let (vp, vq) = (p.to_symplectic(), q.to_symplectic());
                let n = 2;
                let form: u8 = (0..n)
                    .map(|i| u8::from(vp[i] & vq[n + i]) ^ u8::from(vp[n + i] & vq[i]))
                    .fold(0, |acc, b| acc ^ b);
                assert_eq!(form, p.star(&q).unwrap());
            }
        }
    }
}
