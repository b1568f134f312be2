//! Arithmetic in the prime fields GF(q), q ∈ {2, 3, 5, 7}.
//!
//! Hot loops work on raw residues through a [`Field`] context; the
//! [`PrimeFieldElement`] value type carries its modulus and checks it.

use core::fmt;

use crate::error::{Error, Result};

pub const SUPPORTED_PRIMES: [u8; 4] = [2, 3, 5, 7];

/// A prime field GF(q), used as an arithmetic context for `u8` residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    q: u8,
}

impl Field {
    pub const GF2: Field = Field { q: 2 };
    pub const GF3: Field = Field { q: 3 };

    pub fn new(q: u32) -> Result<Self> {
        if SUPPORTED_PRIMES.iter().any(|&p| u32::from(p) == q) {
            Ok(Field { q: q as u8 })
        } else {
            Err(Error::UnsupportedModulus(q))
        }
    }

    #[inline]
    pub fn q(self) -> u8 {
        self.q
    }

    #[inline]
    pub fn order(self) -> usize {
        usize::from(self.q)
    }

    pub fn elements(self) -> core::ops::Range<u8> {
        0..self.q
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u8 {
        v.rem_euclid(i64::from(self.q)) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((u16::from(a) + u16::from(b)) % u16::from(self.q)) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((u16::from(a) + u16::from(self.q) - u16::from(b)) % u16::from(self.q)) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        self.sub(0, a)
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((u16::from(a) * u16::from(b)) % u16::from(self.q)) as u8
    }

    pub fn pow(self, mut base: u8, mut exp: u32) -> u8 {
        let mut acc = 1 % self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Fermat inverse, a^(q−2).
    pub fn inv(self, a: u8) -> Result<u8> {
        if a.is_multiple_of(self.q) {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a % self.q, u32::from(self.q) - 2))
    }

    /// `true` iff `a = x²` for some `x`; zero counts as a square.
    pub fn is_square(self, a: u8) -> bool {
        let a = a % self.q;
        self.elements().any(|x| self.mul(x, x) == a)
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(self) -> u8 {
        let order = u32::from(self.q) - 1;
        (1..self.q)
            .find(|&g| (1..order).all(|e| self.pow(g, e) != 1))
            .unwrap_or(1)
    }

    pub fn element(self, value: u32) -> PrimeFieldElement {
        PrimeFieldElement {
            value: (value % u32::from(self.q)) as u8,
            modulus: self.q,
        }
    }
}

/// A residue modulo a supported prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u8,
    modulus: u8,
}

// Arithmetic is checked (mixing moduli is an error), so these are inherent
// methods returning `Result` rather than operator impls.
#[allow(clippy::should_implement_trait)]
impl PrimeFieldElement {
    pub fn new(value: u32, modulus: u32) -> Result<Self> {
        Ok(Field::new(modulus)?.element(value))
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn modulus(self) -> u8 {
        self.modulus
    }

    pub fn field(self) -> Field {
        Field { q: self.modulus }
    }

    fn shared(self, other: Self) -> Result<Field> {
        if self.modulus == other.modulus {
            Ok(self.field())
        } else {
            Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            })
        }
    }

    pub fn add(self, other: Self) -> Result<Self> {
        let f = self.shared(other)?;
        Ok(PrimeFieldElement {
            value: f.add(self.value, other.value),
            modulus: self.modulus,
        })
    }

    pub fn sub(self, other: Self) -> Result<Self> {
        let f = self.shared(other)?;
        Ok(PrimeFieldElement {
            value: f.sub(self.value, other.value),
            modulus: self.modulus,
        })
    }

    pub fn mul(self, other: Self) -> Result<Self> {
        let f = self.shared(other)?;
        Ok(PrimeFieldElement {
            value: f.mul(self.value, other.value),
            modulus: self.modulus,
        })
    }

    pub fn neg(self) -> Self {
        PrimeFieldElement {
            value: self.field().neg(self.value),
            modulus: self.modulus,
        }
    }

    pub fn inv(self) -> Result<Self> {
        Ok(PrimeFieldElement {
            value: self.field().inv(self.value)?,
            modulus: self.modulus,
        })
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn is_square(self) -> bool {
        self.field().is_square(self.value)
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(v: u32, q: u32) -> PrimeFieldElement {
        PrimeFieldElement::new(v, q).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(el(1, 2).add(el(1, 2)).unwrap(), el(0, 2));
        assert_eq!(el(2, 3).add(el(2, 3)).unwrap(), el(1, 3));
        for q in SUPPORTED_PRIMES {
            let q = u32::from(q);
            for x in 0..q {
                assert_eq!(el(0, q).add(el(x, q)).unwrap(), el(x, q));
            }
            assert_eq!(el(1, q).inv().unwrap(), el(1, q));
        }
        assert_eq!(el(2, 5).mul(el(2, 5)).unwrap(), el(4, 5));
        assert_eq!(el(2, 5).inv().unwrap(), el(3, 5));
    }

    #[test]
    fn error_paths() {
        assert_eq!(
            el(1, 2).add(el(1, 3)),
            Err(Error::ModulusMismatch { left: 2, right: 3 })
        );
        assert_eq!(el(0, 5).inv(), Err(Error::ZeroInverse));
        assert_eq!(Field::new(4), Err(Error::UnsupportedModulus(4)));
        assert_eq!(Field::new(11), Err(Error::UnsupportedModulus(11)));
    }

    #[test]
    fn squares() {
        let f3 = Field::GF3;
        assert!(f3.is_square(1));
        assert!(!f3.is_square(2));
        assert!(f3.is_square(0));
        assert!(Field::GF2.elements().all(|a| Field::GF2.is_square(a)));
        // (q+1)/2 squares including zero in odd characteristic
        for q in [3u32, 5, 7] {
            let f = Field::new(q).unwrap();
            let n = f.elements().filter(|&a| f.is_square(a)).count();
            assert_eq!(n as u32, q.div_ceil(2));
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in SUPPORTED_PRIMES {
            let f = Field::new(u32::from(q)).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn characteristic_two() {
        let f = Field::GF2;
        for a in f.elements() {
            assert_eq!(f.neg(a), a);
            assert_eq!(f.mul(a, a), a);
        }
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(Field::new(2).unwrap().primitive_root(), 1);
        assert_eq!(Field::new(3).unwrap().primitive_root(), 2);
        assert_eq!(Field::new(5).unwrap().primitive_root(), 2);
        assert_eq!(Field::new(7).unwrap().primitive_root(), 3);
    }
}
