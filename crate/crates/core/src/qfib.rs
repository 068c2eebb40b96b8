//! The three q-Fibonacci families, their matrix and Cassini identities,
//! integer Fibonacci numbers and p-adic valuations.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::poly::IntPoly;
use crate::Result;

/// Which q-Fibonacci family.
///
/// * `SchurF`: `F_n = F_{n-1} + q^{n-2} F_{n-2}`, sum weight `q^{k^2}`.
/// * `SchurG`: `G_n = G_{n-1} + q^{n-1} G_{n-2}`, sum weight `q^{k^2+k}`.
/// * `CiglerF(r)`: `f_r(n)`, sum weight `q^{k(k-1)/2 + 2rk}`, four-term
///   recurrence from `n = 5` on. Only `r >= 0` is supported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    SchurF,
    SchurG,
    CiglerF(u32),
}

impl FamilyId {
    /// `f_r` for a signed `r`; negative `r` would need Laurent polynomials.
    pub fn cigler(r: i64) -> Result<FamilyId> {
        if r < 0 {
            return Err(Error::Unsupported(format!(
                "f_r with r = {r}: negative r makes the exponent k(k-1)/2 + 2rk negative; only r >= 0 is supported"
            )));
        }
        u32::try_from(r)
            .map(FamilyId::CiglerF)
            .map_err(|_| Error::Unsupported(format!("r = {r} is too large")))
    }

    /// Exponent of the `k`-th summand in the defining sum.
    pub fn sum_exponent(self, k: usize) -> usize {
        match self {
            FamilyId::SchurF => k * k,
            FamilyId::SchurG => k * k + k,
            FamilyId::CiglerF(r) => k * k.saturating_sub(1) / 2 + 2 * r as usize * k,
        }
    }

    fn initial_terms(self) -> Vec<IntPoly> {
        match self {
            FamilyId::SchurF | FamilyId::SchurG => alloc::vec![IntPoly::zero(), IntPoly::one()],
            FamilyId::CiglerF(r) => {
                let r2 = 2 * r as usize;
                let f3 = &IntPoly::one() + &IntPoly::monomial(1, r2);
                let f4 = &f3 + &IntPoly::monomial(1, r2 + 1);
                alloc::vec![IntPoly::zero(), IntPoly::one(), IntPoly::one(), f3, f4]
            }
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::SchurF => f.write_str("F"),
            FamilyId::SchurG => f.write_str("G"),
            FamilyId::CiglerF(r) => write!(f, "f_{r}"),
        }
    }
}

const WINDOW: usize = 4;

/// Bottom-up evaluation of one family's recurrence.
///
/// By default only the last four terms are kept, which is all the
/// recurrences need; asking for an evicted index restarts from the initial
/// values. [`FibCache::retaining`] keeps the whole prefix instead.
#[derive(Clone, Debug)]
pub struct FibCache {
    family: FamilyId,
    start: usize,
    terms: VecDeque<IntPoly>,
    retain_all: bool,
}

impl FibCache {
    pub fn new(family: FamilyId) -> Self {
        let mut cache = FibCache {
            family,
            start: 0,
            terms: VecDeque::new(),
            retain_all: false,
        };
        cache.reset();
        cache
    }

    pub fn retaining(family: FamilyId) -> Self {
        let mut cache = FibCache::new(family);
        cache.retain_all = true;
        cache
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    /// Switches between keeping every term and keeping a sliding window.
    pub fn set_retain_all(&mut self, retain_all: bool) {
        self.retain_all = retain_all;
        self.evict();
    }

    fn reset(&mut self) {
        self.start = 0;
        self.terms = self.family.initial_terms().into();
    }

    fn top(&self) -> usize {
        self.start + self.terms.len() - 1
    }

    fn evict(&mut self) {
        if self.retain_all {
            return;
        }
        while self.terms.len() > WINDOW {
            self.terms.pop_front();
            self.start += 1;
        }
    }

    fn at(&self, n: usize) -> &IntPoly {
        &self.terms[n - self.start]
    }

    fn next_term(&self) -> IntPoly {
        let m = self.top() + 1;
        match self.family {
            FamilyId::SchurF => {
                let mut t = self.at(m - 1).clone();
                t.add_shifted(self.at(m - 2), m - 2);
                t
            }
            FamilyId::SchurG => {
                let mut t = self.at(m - 1).clone();
                t.add_shifted(self.at(m - 2), m - 1);
                t
            }
            FamilyId::CiglerF(r) => {
                let r = r as usize;
                let mut t = self.at(m - 1).clone();
                t.add_shifted(self.at(m - 3), m - 3 + 2 * r);
                t.add_shifted(self.at(m - 4), m - 4 + 4 * r);
                t
            }
        }
    }

    /// Makes sure term `n` is held.
    pub fn ensure(&mut self, n: usize) {
        if n < self.start {
            self.reset();
        }
        while self.top() < n {
            let t = self.next_term();
            self.terms.push_back(t);
            self.evict();
        }
    }

    /// Term `n` if it is currently held.
    pub fn term(&self, n: usize) -> Option<&IntPoly> {
        n.checked_sub(self.start).and_then(|i| self.terms.get(i))
    }

    pub fn get(&mut self, n: usize) -> &IntPoly {
        self.ensure(n);
        self.at(n)
    }

    /// Consumes the cache and hands back term `n` without copying.
    pub fn take(mut self, n: usize) -> IntPoly {
        self.ensure(n);
        self.terms
            .swap_remove_back(n - self.start)
            .expect("term was just ensured")
    }
}

/// `n`-th member of `family`, by its recurrence.
pub fn fib(family: FamilyId, n: usize) -> IntPoly {
    FibCache::new(family).take(n)
}

/// `n`-th member of `family` straight from its defining sum
/// `sum_{k <= (n-1)/2} q^{e(k)} [n-1-k; k]`.
pub fn fib_sum(family: FamilyId, n: usize) -> IntPoly {
    fib_sums(&[family], n).pop().expect("one family requested")
}

/// [`fib_sum`] for several families at once; the q-binomials
/// `[n-1-k; k]` are produced once and shared.
///
/// The binomials come from the walk
/// `[m-1; k+1] = [m; k] (1-q^{m-k})(1-q^{m-k-1}) / ((1-q^m)(1-q^{k+1}))`.
pub fn fib_sums(families: &[FamilyId], n: usize) -> Vec<IntPoly> {
    let mut acc: Vec<IntPoly> = families.iter().map(|_| IntPoly::zero()).collect();
    if n == 0 {
        return acc;
    }
    let kmax = (n - 1) / 2;
    let mut binom = IntPoly::one();
    for k in 0..=kmax {
        for (sum, fam) in acc.iter_mut().zip(families) {
            sum.add_shifted(&binom, fam.sum_exponent(k));
        }
        if k == kmax {
            break;
        }
        let m = n - 1 - k;
        binom = binom
            .mul_div_one_minus_shift(m - k, m)
            .and_then(|b| b.mul_div_one_minus_shift(m - k - 1, k + 1))
            .expect("diagonal q-binomial walk stays polynomial");
    }
    acc
}

/// The `2 x 2` matrix `[[a11, a12], [a21, a22]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibMatrix {
    pub a11: IntPoly,
    pub a12: IntPoly,
    pub a21: IntPoly,
    pub a22: IntPoly,
}

/// `A(q^{n-1}) A(q^{n-2}) ... A(q) A(1)` with `A(x) = [[1, x], [1, 0]]`,
/// multiplied left to right. Equals `[[F_{n+1}, G_n], [F_n, G_{n-1}]]`.
pub fn matrix_product(n: usize) -> Result<FibMatrix> {
    if n == 0 {
        return Err(Error::Domain("matrix product needs n >= 1"));
    }
    let mut m = FibMatrix {
        a11: IntPoly::one(),
        a12: IntPoly::zero(),
        a21: IntPoly::zero(),
        a22: IntPoly::one(),
    };
    // [[a, b], [c, d]] * [[1, x], [1, 0]] = [[a + b, a x], [c + d, c x]]
    for e in (0..n).rev() {
        let a12 = m.a11.shift(e);
        let a22 = m.a21.shift(e);
        m.a11 += &m.a12;
        m.a21 += &m.a22;
        m.a12 = a12;
        m.a22 = a22;
    }
    Ok(m)
}

/// `F_{n+1} G_{n-1} - F_n G_n`.
pub fn cassini(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::Domain("Cassini determinant needs n >= 1"));
    }
    let mut f = FibCache::new(FamilyId::SchurF);
    let mut g = FibCache::new(FamilyId::SchurG);
    f.ensure(n + 1);
    g.ensure(n);
    Ok(cassini_from(
        f.term(n + 1).unwrap(),
        f.term(n).unwrap(),
        g.term(n).unwrap(),
        g.term(n - 1).unwrap(),
    ))
}

pub(crate) fn cassini_from(
    f_next: &IntPoly,
    f_n: &IntPoly,
    g_n: &IntPoly,
    g_prev: &IntPoly,
) -> IntPoly {
    &(f_next * g_prev) - &(f_n * g_n)
}

/// Integer Fibonacci number `F_n`.
pub fn int_fib(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = core::mem::replace(&mut b, next);
    }
    a
}

/// Exponent of the largest power of `p` dividing `x`.
pub fn vp(x: &BigUint, p: u64) -> Result<u32> {
    if x.is_zero() {
        return Err(Error::Domain("valuation of zero is infinite"));
    }
    if p < 2 {
        return Err(Error::Domain("valuation base must be at least 2"));
    }
    let p = BigUint::from(p);
    let mut x = x.clone();
    let mut e = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return Ok(e);
        }
        x = q;
        e += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::binomial_row;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn first_terms_schur_f() {
        let want = [
            p(&[]),
            p(&[1]),
            p(&[1]),
            p(&[1, 1]),
            p(&[1, 1, 1]),
            p(&[1, 1, 1, 1, 1]),
            p(&[1, 1, 1, 1, 2, 1, 1]),
        ];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(&fib(FamilyId::SchurF, n), w, "F_{n}");
        }
    }

    #[test]
    fn first_terms_schur_g() {
        let want = [
            p(&[]),
            p(&[1]),
            p(&[1]),
            p(&[1, 0, 1]),
            p(&[1, 0, 1, 1]),
            p(&[1, 0, 1, 1, 1, 0, 1]),
            p(&[1, 0, 1, 1, 1, 1, 1, 1, 1]),
        ];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(&fib(FamilyId::SchurG, n), w, "G_{n}");
        }
    }

    #[test]
    fn first_terms_cigler() {
        let want = [
            p(&[]),
            p(&[1]),
            p(&[1]),
            p(&[2]),
            p(&[2, 1]),
            p(&[2, 2, 1]),
            p(&[2, 2, 2, 2]),
            p(&[2, 2, 2, 4, 2, 1]),
        ];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(&fib(FamilyId::CiglerF(0), n), w, "f_{n}");
        }
        // 2(1+q)(1+q^2)
        assert_eq!(fib(FamilyId::CiglerF(0), 6), &p(&[2, 2]) * &p(&[1, 0, 1]));
    }

    #[test]
    fn sums_match_examples() {
        assert_eq!(fib_sum(FamilyId::SchurF, 6), p(&[1, 1, 1, 1, 2, 1, 1]));
        assert!(fib_sum(FamilyId::SchurG, 0).is_zero());
        assert_eq!(fib_sum(FamilyId::CiglerF(0), 5), p(&[2, 2, 1]));
    }

    #[test]
    fn cigler_initial_values_general_r() {
        for r in 0..4u32 {
            let fam = FamilyId::CiglerF(r);
            let r2 = 2 * r as usize;
            assert_eq!(fib_sum(fam, 3), &IntPoly::one() + &IntPoly::monomial(1, r2));
            let f4 = &(&IntPoly::one() + &IntPoly::monomial(1, r2)) + &IntPoly::monomial(1, r2 + 1);
            assert_eq!(fib_sum(fam, 4), f4);
            assert_eq!(fib(fam, 4), f4);
        }
    }

    #[test]
    fn negative_r_rejected() {
        assert!(matches!(FamilyId::cigler(-1), Err(Error::Unsupported(_))));
        assert_eq!(FamilyId::cigler(2).unwrap(), FamilyId::CiglerF(2));
    }

    #[test]
    fn cache_restarts_after_eviction() {
        let mut cache = FibCache::new(FamilyId::SchurF);
        let f20 = cache.get(20).clone();
        assert!(cache.term(3).is_none());
        assert_eq!(cache.get(3), &p(&[1, 1]));
        assert_eq!(cache.get(20), &f20);

        let mut keep = FibCache::retaining(FamilyId::SchurF);
        keep.ensure(20);
        assert_eq!(keep.term(3), Some(&p(&[1, 1])));
        keep.set_retain_all(false);
        assert!(keep.term(3).is_none());
        assert_eq!(keep.term(20), Some(&f20));
    }

    #[test]
    fn matrix_small_cases() {
        let m1 = matrix_product(1).unwrap();
        assert_eq!(
            (m1.a11, m1.a12, m1.a21, m1.a22),
            (p(&[1]), p(&[1]), p(&[1]), p(&[]))
        );
        let m2 = matrix_product(2).unwrap();
        assert_eq!(
            (m2.a11, m2.a12, m2.a21, m2.a22),
            (p(&[1, 1]), p(&[1]), p(&[1]), p(&[1]))
        );
        let m5 = matrix_product(5).unwrap();
        assert_eq!(m5.a11, fib(FamilyId::SchurF, 6));
        assert_eq!(m5.a12, fib(FamilyId::SchurG, 5));
        assert_eq!(m5.a21, fib(FamilyId::SchurF, 5));
        assert_eq!(m5.a22, fib(FamilyId::SchurG, 4));
        assert!(matrix_product(0).is_err());
    }

    #[test]
    fn cassini_small_cases() {
        assert_eq!(cassini(1).unwrap(), IntPoly::constant(-1));
        // (1+q+q^2)*1 - (1+q)(1+q^2)
        assert_eq!(cassini(3).unwrap(), IntPoly::monomial(-1, 3));
        assert_eq!(cassini(4).unwrap(), IntPoly::monomial(1, 6));
        assert!(cassini(0).is_err());
    }

    #[test]
    fn int_fib_values() {
        assert_eq!(int_fib(0), BigUint::zero());
        assert_eq!(int_fib(6), BigUint::from(8u32));
        // iterate by hand: 0 1 1 2 3 5 8 13 21 34 55 89 144 233 377 610 987
        // 1597 2584 4181 6765 10946 17711 28657 46368 75025
        assert_eq!(int_fib(25), BigUint::from(75025u32));
    }

    #[test]
    fn valuations() {
        assert_eq!(vp(&BigUint::from(75025u32), 5).unwrap(), 2);
        assert_eq!(vp(&BigUint::from(8u32), 2).unwrap(), 3);
        assert_eq!(vp(&BigUint::from(7u32), 5).unwrap(), 0);
        assert!(vp(&BigUint::zero(), 5).is_err());
        assert!(vp(&BigUint::from(4u32), 1).is_err());
    }

    #[test]
    fn specialization_at_one() {
        let one = BigInt::from(1);
        for n in 0..40u64 {
            let want = BigInt::from(int_fib(n));
            for fam in [FamilyId::SchurF, FamilyId::SchurG, FamilyId::CiglerF(0)] {
                assert_eq!(fib(fam, n as usize).evaluate(&one), want, "{fam} n={n}");
            }
        }
    }

    #[test]
    fn binomial_rows_feed_sums() {
        // direct sum with row-indexed binomials, as a second route for small n
        for n in 1..20usize {
            let mut acc = IntPoly::zero();
            for k in 0..=(n - 1) / 2 {
                acc.add_shifted(&binomial_row(n - 1 - k)[k], k * k);
            }
            assert_eq!(acc, fib_sum(FamilyId::SchurF, n));
        }
    }
}
