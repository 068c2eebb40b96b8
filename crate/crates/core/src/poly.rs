//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored in ascending degree order: `coeffs[i]` is the
//! coefficient of `q^i`. Values are always normalized (no trailing zeros), so
//! the zero polynomial is the empty vector and structural equality is
//! polynomial equality.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError};
use crate::Result;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// How a divisor coefficient participates in the long-division inner loop.
#[derive(Clone, Copy)]
enum Unit {
    Plus,
    Minus,
    Other,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        IntPoly::monomial(1, 1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        IntPoly::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial<T: Into<BigInt>>(c: T, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` stands for the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// `self * q^e`.
    pub fn shift(&self, e: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + e);
        coeffs.resize(e, BigInt::zero());
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn grow_to(&mut self, len: usize) {
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
    }

    /// `self += other * q^shift`, in place.
    pub fn add_shifted(&mut self, other: &IntPoly, shift: usize) {
        if other.is_zero() {
            return;
        }
        self.grow_to(other.coeffs.len() + shift);
        for (dst, src) in self.coeffs[shift..].iter_mut().zip(&other.coeffs) {
            *dst += src;
        }
        self.normalize();
    }

    /// `self -= other * q^shift`, in place.
    pub fn sub_shifted(&mut self, other: &IntPoly, shift: usize) {
        if other.is_zero() {
            return;
        }
        self.grow_to(other.coeffs.len() + shift);
        for (dst, src) in self.coeffs[shift..].iter_mut().zip(&other.coeffs) {
            *dst -= src;
        }
        self.normalize();
    }

    /// `self * (1 - q^a)` for `a >= 1`.
    pub fn mul_one_minus_shift(&self, a: usize) -> IntPoly {
        debug_assert!(a >= 1);
        let mut out = self.clone();
        out.sub_shifted(self, a);
        out
    }

    /// Exact quotient `self / (1 - q^a)` for `a >= 1`.
    ///
    /// Runs the recurrence `c_i = p_i + c_{i-a}` and fails with
    /// [`Error::NotDivisible`] when the top `a` coefficients do not cancel.
    pub fn div_one_minus_shift(&self, a: usize) -> Result<IntPoly> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let Some(deg) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if deg < a {
            return Err(Error::NotDivisible);
        }
        let qlen = deg + 1 - a;
        let mut c: Vec<BigInt> = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let mut v = self.coeffs[i].clone();
            if i >= a {
                v += &c[i - a];
            }
            c.push(v);
        }
        // remainder terms: p_i + c_{i-a} must vanish for i >= qlen
        for i in qlen..=deg {
            let carry = if i >= a && i - a < qlen {
                Some(&c[i - a])
            } else {
                None
            };
            let ok = match carry {
                Some(cv) => (&self.coeffs[i] + cv).is_zero(),
                None => self.coeffs[i].is_zero(),
            };
            if !ok {
                return Err(Error::NotDivisible);
            }
        }
        Ok(IntPoly::from_coeffs(c))
    }

    /// Exact quotient `self * (1 - q^a) / (1 - q^b)` for `a, b >= 1`,
    /// computed in place. Same result as [`Self::mul_one_minus_shift`]
    /// followed by [`Self::div_one_minus_shift`].
    pub fn mul_div_one_minus_shift(mut self, a: usize, b: usize) -> Result<IntPoly> {
        debug_assert!(a >= 1);
        if b == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self);
        }
        let len = self.coeffs.len();
        let total = len + a;
        self.coeffs.resize(total, BigInt::zero());
        // times (1 - q^a), top down so p_{i-a} is still original
        for i in (a..total).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - a];
        }
        if total <= b {
            return Err(Error::NotDivisible);
        }
        // c_i = n_i + c_{i-b}, bottom up; slots past the quotient hold the remainder
        for i in b..total {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - b];
        }
        let qlen = total - b;
        if self.coeffs[qlen..].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        self.coeffs.truncate(qlen);
        self.normalize();
        Ok(self)
    }

    fn long_division(&self, d: &IntPoly, keep_quotient: bool) -> Result<(Vec<BigInt>, IntPoly)> {
        let lead = d.leading().ok_or(Error::DivisionByZero)?;
        let negate = if lead.is_one() {
            false
        } else if (-lead).is_one() {
            true
        } else {
            return Err(Error::NonUnitLeadingCoefficient);
        };
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Vec::new(), self.clone()));
        }
        let terms: Vec<(usize, Unit, &BigInt)> = d.coeffs[..dd]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let unit = if c.is_one() {
                    Unit::Plus
                } else if (-c).is_one() {
                    Unit::Minus
                } else {
                    Unit::Other
                };
                (j, unit, c)
            })
            .collect();
        let mut r = self.coeffs.clone();
        let top = r.len() - 1 - dd;
        let mut quot = if keep_quotient {
            vec![BigInt::zero(); top + 1]
        } else {
            Vec::new()
        };
        for i in (0..=top).rev() {
            let mut c = core::mem::take(&mut r[i + dd]);
            if c.is_zero() {
                continue;
            }
            if negate {
                c = -c;
            }
            for &(j, unit, dj) in &terms {
                match unit {
                    Unit::Plus => r[i + j] -= &c,
                    Unit::Minus => r[i + j] += &c,
                    Unit::Other => r[i + j] -= &c * dj,
                }
            }
            if keep_quotient {
                quot[i] = c;
            }
        }
        r.truncate(dd);
        Ok((quot, IntPoly::from_coeffs(r)))
    }

    /// Euclidean division by a divisor with leading coefficient `+1` or `-1`.
    ///
    /// Returns `(quotient, remainder)` with `self = d * quotient + remainder`
    /// and `deg(remainder) < deg(d)`.
    pub fn divrem(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let (q, r) = self.long_division(d, true)?;
        Ok((IntPoly::from_coeffs(q), r))
    }

    /// Remainder only; skips building the quotient.
    pub fn rem(&self, d: &IntPoly) -> Result<IntPoly> {
        Ok(self.long_division(d, false)?.1)
    }

    pub fn is_divisible_by(&self, d: &IntPoly) -> Result<bool> {
        Ok(self.rem(d)?.is_zero())
    }

    /// Quotient of an exact division; [`Error::NotDivisible`] otherwise.
    pub fn div_exact(&self, d: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.divrem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Horner evaluation at an integer point.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Least nonnegative residue of every coefficient modulo `m` (`m >= 2`).
    pub fn reduce_coeffs_mod(&self, m: &BigUint) -> Result<IntPoly> {
        if *m < BigUint::from(2u32) {
            return Err(Error::Domain("coefficient modulus must be at least 2"));
        }
        let m = BigInt::from_biguint(Sign::Plus, m.clone());
        Ok(IntPoly::from_coeffs(
            self.coeffs.iter().map(|c| c.mod_floor(&m)).collect(),
        ))
    }

    /// True when every coefficient is divisible by `m`.
    pub fn coeffs_divisible_by(&self, m: &BigInt) -> bool {
        self.coeffs.iter().all(|c| c.is_multiple_of(m))
    }

    /// Compact array form, e.g. `[1,0,1]` for `1 + q^2`.
    pub fn serialize(&self) -> String {
        let mut out = String::from("[");
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{c}");
        }
        out.push(']');
        out
    }

    /// Parses the array form. Elements may be bare integers or quoted
    /// decimal strings; trailing zeros are dropped.
    pub fn parse(text: &str) -> core::result::Result<IntPoly, ParseError> {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
        .poly()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, reason: &'static str) -> ParseError {
        ParseError {
            position: self.pos,
            reason,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.src.get(self.pos) == Some(&b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> core::result::Result<BigInt, ParseError> {
        let start = self.pos;
        self.eat(b'-');
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(self.err("expected decimal digits"));
        }
        let text = core::str::from_utf8(&self.src[start..self.pos])
            .map_err(|_| self.err("invalid utf-8"))?;
        BigInt::from_str(text).map_err(|_| ParseError {
            position: start,
            reason: "invalid integer",
        })
    }

    fn element(&mut self) -> core::result::Result<BigInt, ParseError> {
        if self.eat(b'"') {
            let v = self.integer()?;
            if !self.eat(b'"') {
                return Err(self.err("expected closing quote"));
            }
            Ok(v)
        } else {
            self.integer()
        }
    }

    fn poly(mut self) -> core::result::Result<IntPoly, ParseError> {
        self.skip_ws();
        if !self.eat(b'[') {
            return Err(self.err("expected '['"));
        }
        let mut coeffs = Vec::new();
        self.skip_ws();
        if !self.eat(b']') {
            loop {
                self.skip_ws();
                coeffs.push(self.element()?);
                self.skip_ws();
                if self.eat(b',') {
                    continue;
                }
                if self.eat(b']') {
                    break;
                }
                return Err(self.err("expected ',' or ']'"));
            }
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("trailing input"));
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

impl FromStr for IntPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        IntPoly::parse(s)
    }
}

/// Human-readable form with ascending terms, e.g. `1 - q + 2q^4`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.serialize())
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        self.add_shifted(rhs, 0);
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        self.sub_shifted(rhs, 0);
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPoly {
    type Output = IntPoly;

    fn add(mut self, rhs: IntPoly) -> IntPoly {
        self += &rhs;
        self
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;

    fn sub(mut self, rhs: IntPoly) -> IntPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(mut self) -> IntPoly {
        for c in &mut self.coeffs {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;

    /// Schoolbook convolution; zero coefficients are skipped.
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let (outer, inner) = if self.coeffs.len() <= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = vec![BigInt::zero(); outer.coeffs.len() + inner.coeffs.len() - 1];
        for (i, a) in outer.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if a.is_one() {
                for (dst, b) in out[i..].iter_mut().zip(&inner.coeffs) {
                    *dst += b;
                }
                continue;
            }
            for (dst, b) in out[i..].iter_mut().zip(&inner.coeffs) {
                if !b.is_zero() {
                    *dst += a * b;
                }
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[0, 1, 1]), p(&[1, 2, 1]));
        assert_eq!(&p(&[3, 0, 5]) + &IntPoly::zero(), p(&[3, 0, 5]));
        assert_eq!(&p(&[1, -1]) + &IntPoly::q(), IntPoly::one());
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), IntPoly::zero());
        assert_eq!(-p(&[1, -2]), p(&[-1, 2]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 0, 1]), p(&[1, 1, 1, 1]));
        assert_eq!(&p(&[4, 5]) * &IntPoly::zero(), IntPoly::zero());
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1, 1, 1, 1]), p(&[1, 0, 0, 0, 0, -1]));
        assert_eq!(p(&[2, 1]).shift(3), p(&[0, 0, 0, 2, 1]));
        assert_eq!(IntPoly::zero().shift(4), IntPoly::zero());
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = p(&[-1, 0, 0, 0, 0, 1]).divrem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1, 1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).divrem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, IntPoly::constant(2));
    }

    #[test]
    fn divrem_by_negative_lead() {
        // 1 - q^3 = (1 - q)(1 + q + q^2)
        let (q, r) = p(&[1, 0, 0, -1]).divrem(&p(&[1, -1])).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_errors() {
        assert_eq!(
            p(&[1, 2]).divrem(&IntPoly::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            p(&[1, 2, 3]).divrem(&p(&[1, 2])),
            Err(Error::NonUnitLeadingCoefficient)
        );
    }

    #[test]
    fn divrem_small_dividend() {
        let (q, r) = p(&[3]).divrem(&p(&[1, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[3]));
    }

    #[test]
    fn one_minus_shift_division() {
        let a = p(&[1, 2, 3, 4]);
        let prod = a.mul_one_minus_shift(3);
        assert_eq!(prod.div_one_minus_shift(3).unwrap(), a);
        assert_eq!(
            p(&[1, 0, 1]).div_one_minus_shift(1),
            Err(Error::NotDivisible)
        );
        assert_eq!(p(&[1]).div_one_minus_shift(2), Err(Error::NotDivisible));
    }

    #[test]
    fn evaluate_examples() {
        let five = p(&[1, 1, 1, 1, 1]);
        assert_eq!(five.evaluate(&BigInt::from(1)), BigInt::from(5));
        assert_eq!(IntPoly::zero().evaluate(&BigInt::from(17)), BigInt::zero());
        assert_eq!(
            p(&[1, 1, 1, 1, 2, 1, 1]).evaluate(&BigInt::from(1)),
            BigInt::from(8)
        );
        assert_eq!(p(&[1, -3, 2]).evaluate(&BigInt::from(-2)), BigInt::from(15));
    }

    #[test]
    fn reduce_mod_examples() {
        let two = BigUint::from(2u32);
        assert!(p(&[2, 2, 2, 2]).reduce_coeffs_mod(&two).unwrap().is_zero());
        assert_eq!(p(&[2, 1]).reduce_coeffs_mod(&two).unwrap(), IntPoly::q());
        assert_eq!(p(&[3, 5]).reduce_coeffs_mod(&two).unwrap(), p(&[1, 1]));
        assert_eq!(
            p(&[-1, 4]).reduce_coeffs_mod(&BigUint::from(3u32)).unwrap(),
            p(&[2, 1])
        );
        assert!(p(&[1]).reduce_coeffs_mod(&BigUint::from(1u32)).is_err());
    }

    #[test]
    fn serialize_examples() {
        assert_eq!(p(&[1, 0, 1]).serialize(), "[1,0,1]");
        assert_eq!(IntPoly::zero().serialize(), "[]");
        assert_eq!(IntPoly::parse("[0,1,1]").unwrap(), p(&[0, 1, 1]));
        assert_eq!(IntPoly::parse(" [ \"-12\" , 3 ,0] ").unwrap(), p(&[-12, 3]));
        let big = "[123456789012345678901234567890,-1]";
        assert_eq!(IntPoly::parse(big).unwrap().serialize(), big);
    }

    #[test]
    fn parse_errors_carry_position() {
        assert_eq!(IntPoly::parse("1,2]").unwrap_err().position, 0);
        assert_eq!(IntPoly::parse("[1,,2]").unwrap_err().position, 3);
        assert_eq!(IntPoly::parse("[1 2]").unwrap_err().position, 3);
        assert_eq!(IntPoly::parse("[\"7]").unwrap_err().position, 3);
        assert_eq!(IntPoly::parse("[1] x").unwrap_err().position, 4);
        assert!(IntPoly::parse("[-]").is_err());
    }

    #[test]
    fn pretty_print() {
        use alloc::string::ToString;
        assert_eq!(p(&[1, 0, 1]).to_string(), "1 + q^2");
        assert_eq!(p(&[0, 0, 0, -1]).to_string(), "-q^3");
        assert_eq!(p(&[1, -1, 0, 0, 2]).to_string(), "1 - q + 2q^4");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[-3]).to_string(), "-3");
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(IntPoly::one().degree(), Some(0));
        assert_eq!(IntPoly::from_i64s(&[0, 1, 0, 0]).degree(), Some(1));
    }
}
