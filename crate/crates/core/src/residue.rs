//! The quotient ring `Z[q]/(Phi_n(q))`.
//!
//! A [`Residue`] is the canonical Euclidean remainder modulo `Phi_n`, so it
//! stands for the value of a polynomial at a primitive `n`-th root of unity.
//! Two residues are equal iff their canonical forms are identical.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::poly::IntPoly;
use crate::qcore::CyclotomicTable;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    index: usize,
    value: IntPoly,
}

impl Residue {
    /// The `n` of the ring `Z[q]/(Phi_n)` this class lives in.
    pub fn index(&self) -> usize {
        self.index
    }

    /// Canonical representative, of degree below `phi(n)`.
    pub fn value(&self) -> &IntPoly {
        &self.value
    }

    pub fn into_value(self) -> IntPoly {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    index: usize,
    modulus: IntPoly,
}

impl QuotientRing {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("cyclotomic index must be positive"));
        }
        let mut table = CyclotomicTable::new();
        Ok(table.ring(n))
    }

    /// Wraps an already computed `Phi_n`.
    pub(crate) fn from_cyclotomic(index: usize, modulus: IntPoly) -> Self {
        QuotientRing { index, modulus }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn reduce(&self, a: &IntPoly) -> Residue {
        let value = a
            .rem(&self.modulus)
            .expect("cyclotomic polynomials are monic");
        Residue {
            index: self.index,
            value,
        }
    }

    pub fn zero(&self) -> Residue {
        Residue {
            index: self.index,
            value: IntPoly::zero(),
        }
    }

    pub fn one(&self) -> Residue {
        self.from_int(BigInt::from(1))
    }

    pub fn from_int<T: Into<BigInt>>(&self, c: T) -> Residue {
        self.reduce(&IntPoly::constant(c))
    }

    /// Class of `c * q^e`; uses `q^n = 1` before dividing, so huge exponents
    /// are cheap.
    pub fn monomial<T: Into<BigInt>>(&self, c: T, e: u64) -> Residue {
        let e = (e % self.index as u64) as usize;
        self.reduce(&IntPoly::monomial(c, e))
    }

    fn same_ring(&self, a: &Residue) -> Result<()> {
        if a.index != self.index {
            return Err(Error::ModulusMismatch {
                left: self.index,
                right: a.index,
            });
        }
        Ok(())
    }

    pub fn mul(&self, a: &Residue, b: &Residue) -> Result<Residue> {
        if a.index != b.index {
            return Err(Error::ModulusMismatch {
                left: a.index,
                right: b.index,
            });
        }
        self.same_ring(a)?;
        Ok(self.reduce(&(&a.value * &b.value)))
    }

    pub fn add(&self, a: &Residue, b: &Residue) -> Result<Residue> {
        if a.index != b.index {
            return Err(Error::ModulusMismatch {
                left: a.index,
                right: b.index,
            });
        }
        self.same_ring(a)?;
        Ok(Residue {
            index: self.index,
            value: &a.value + &b.value,
        })
    }

    pub fn sub(&self, a: &Residue, b: &Residue) -> Result<Residue> {
        if a.index != b.index {
            return Err(Error::ModulusMismatch {
                left: a.index,
                right: b.index,
            });
        }
        self.same_ring(a)?;
        Ok(Residue {
            index: self.index,
            value: &a.value - &b.value,
        })
    }

    pub fn scale(&self, a: &Residue, c: &BigInt) -> Result<Residue> {
        self.same_ring(a)?;
        if c.is_zero() {
            return Ok(self.zero());
        }
        Ok(Residue {
            index: self.index,
            value: a.value.scale(c),
        })
    }
}

/// Residue of `a` modulo `Phi_n`.
pub fn residue(a: &IntPoly, n: usize) -> Result<Residue> {
    Ok(QuotientRing::new(n)?.reduce(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::q_int;

    #[test]
    fn q_int_vanishes_mod_own_cyclotomic() {
        for n in 2..40 {
            assert!(
                residue(&q_int(n, 1).unwrap(), n).unwrap().is_zero(),
                "n={n}"
            );
        }
    }

    #[test]
    fn fifth_power_is_one() {
        assert_eq!(
            residue(&IntPoly::monomial(1, 5), 5).unwrap().value(),
            &IntPoly::one()
        );
    }

    #[test]
    fn cassini_monomial_mod_seven() {
        // (-1)^7 q^21 at a primitive 7th root of unity
        let r = residue(&IntPoly::monomial(-1, 21), 7).unwrap();
        assert_eq!(r.value(), &IntPoly::constant(-1));
        let ring = QuotientRing::new(7).unwrap();
        assert_eq!(ring.monomial(-1, 21), r);
    }

    #[test]
    fn identity_and_scale() {
        let ring = QuotientRing::new(4).unwrap();
        let x = ring.reduce(&IntPoly::from_i64s(&[3, -2, 5, 7, 1]));
        assert_eq!(ring.mul(&x, &ring.one()).unwrap(), x);
        let q = ring.reduce(&IntPoly::q());
        assert_eq!(
            ring.scale(&q, &BigInt::from(3)).unwrap().value(),
            &IntPoly::monomial(3, 1)
        );
        assert!(ring.scale(&q, &BigInt::zero()).unwrap().is_zero());
    }

    #[test]
    fn modulus_mismatch() {
        let r4 = QuotientRing::new(4).unwrap();
        let r6 = QuotientRing::new(6).unwrap();
        let a = r4.one();
        let b = r6.one();
        assert_eq!(
            r4.mul(&a, &b),
            Err(Error::ModulusMismatch { left: 4, right: 6 })
        );
        assert_eq!(
            r6.mul(&a, &a),
            Err(Error::ModulusMismatch { left: 6, right: 4 })
        );
        assert!(r6.scale(&a, &BigInt::from(2)).is_err());
    }

    #[test]
    fn zero_index_rejected() {
        assert!(QuotientRing::new(0).is_err());
    }
}
