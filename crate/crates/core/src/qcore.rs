//! q-integers, Gaussian binomials and cyclotomic polynomials.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::poly::IntPoly;
use crate::residue::QuotientRing;
use crate::Result;

/// `[n]_{q^m} = 1 + q^m + q^{2m} + ... + q^{(n-1)m}`.
pub fn q_int(n: usize, m: usize) -> Result<IntPoly> {
    if n == 0 || m == 0 {
        return Err(Error::Domain("q-integer needs n >= 1 and m >= 1"));
    }
    let mut coeffs = vec![0i64; (n - 1) * m + 1];
    for i in 0..n {
        coeffs[i * m] = 1;
    }
    Ok(IntPoly::from_i64s(&coeffs))
}

/// Gaussian binomial `[n; k]`, zero outside `0 <= k <= n`.
///
/// Built as the running product `prod_{i=1}^{k} (1 - q^{n-k+i}) / (1 - q^i)`;
/// after `i` factors the partial product is `[n-k+i; i]`, so every division
/// is exact.
pub fn q_binom(n: usize, k: i64) -> IntPoly {
    if k < 0 || k as u64 > n as u64 {
        return IntPoly::zero();
    }
    let k = k as usize;
    let mut acc = IntPoly::one();
    for i in 1..=k {
        acc = acc
            .mul_div_one_minus_shift(n - k + i, i)
            .expect("partial q-binomial products are polynomials");
    }
    acc
}

/// Row `n` of Gaussian binomials, `[n;0], ..., [n;n]`, walking
/// `[n; j+1] = [n; j] (1 - q^{n-j}) / (1 - q^{j+1})`.
pub fn binomial_row(n: usize) -> Vec<IntPoly> {
    let mut row = Vec::with_capacity(n + 1);
    let mut cur = IntPoly::one();
    for j in 0..n {
        let next = cur
            .clone()
            .mul_div_one_minus_shift(n - j, j + 1)
            .expect("q-binomial rows are polynomials");
        row.push(cur);
        cur = next;
    }
    row.push(cur);
    row
}

/// Rows of the q-Pascal triangle, `[n;k] = [n-1;k-1] + q^k [n-1;k]`.
///
/// Only the current row is held; each call to `next` yields row 0, 1, 2, ...
#[derive(Clone, Debug, Default)]
pub struct PascalRows {
    row: Vec<IntPoly>,
}

impl PascalRows {
    pub fn new() -> Self {
        PascalRows { row: Vec::new() }
    }
}

impl Iterator for PascalRows {
    type Item = Vec<IntPoly>;

    fn next(&mut self) -> Option<Vec<IntPoly>> {
        if self.row.is_empty() {
            self.row = vec![IntPoly::one()];
            return Some(self.row.clone());
        }
        let n = self.row.len();
        let mut next = Vec::with_capacity(n + 1);
        next.push(IntPoly::one());
        for k in 1..n {
            let mut entry = self.row[k - 1].clone();
            entry.add_shifted(&self.row[k], k);
            next.push(entry);
        }
        next.push(IntPoly::one());
        self.row = next;
        Some(self.row.clone())
    }
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Memo table of cyclotomic polynomials.
///
/// `Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d`, every division exact.
/// Not shared between threads: give each worker its own table.
#[derive(Clone, Debug, Default)]
pub struct CyclotomicTable {
    memo: BTreeMap<usize, IntPoly>,
}

impl CyclotomicTable {
    pub fn new() -> Self {
        CyclotomicTable {
            memo: BTreeMap::new(),
        }
    }

    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn get(&mut self, n: usize) -> &IntPoly {
        assert!(n > 0, "cyclotomic index must be positive");
        if !self.memo.contains_key(&n) {
            let phi = self.compute(n);
            self.memo.insert(n, phi);
        }
        &self.memo[&n]
    }

    fn compute(&mut self, n: usize) -> IntPoly {
        if n == 1 {
            return IntPoly::from_i64s(&[-1, 1]);
        }
        let mut acc = IntPoly::monomial(1, n);
        acc -= &IntPoly::one();
        for d in divisors(n) {
            if d == n {
                break;
            }
            let phi_d = self.get(d).clone();
            acc = acc
                .div_exact(&phi_d)
                .expect("q^n - 1 is divisible by Phi_d for d | n");
        }
        acc
    }

    /// The ring `Z[q]/(Phi_n)`.
    pub fn ring(&mut self, n: usize) -> QuotientRing {
        QuotientRing::from_cyclotomic(n, self.get(n).clone())
    }
}

/// `Phi_n(q)`.
pub fn cyclotomic(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::Domain("cyclotomic index must be positive"));
    }
    Ok(CyclotomicTable::new().get(n).clone())
}

/// All `d <= max_d` with `Phi_d` dividing `a` exactly.
pub fn cyclo_spectrum(
    a: &IntPoly,
    max_d: usize,
    table: &mut CyclotomicTable,
) -> Result<BTreeSet<usize>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = BTreeSet::new();
    for d in 1..=max_d {
        if a.is_divisible_by(table.get(d))? {
            out.insert(d);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// `[n]...[n-k+1] / ([1]...[k])`: full numerator first, then exact
    /// division by each denominator factor.
    fn product_formula(n: usize, k: usize) -> IntPoly {
        let mut num = IntPoly::one();
        for i in 0..k {
            num = &num * &q_int(n - i, 1).unwrap();
        }
        for i in 1..=k {
            num = num.div_exact(&q_int(i, 1).unwrap()).unwrap();
        }
        num
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(5, 1).unwrap(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(q_int(1, 7).unwrap(), IntPoly::one());
        assert_eq!(q_int(5, 2).unwrap(), p(&[1, 0, 1, 0, 1, 0, 1, 0, 1]));
        assert!(q_int(0, 1).is_err());
        assert!(q_int(3, 0).is_err());
    }

    #[test]
    fn q_binom_examples() {
        assert_eq!(product_formula(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binom(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binom(9, 0), IntPoly::one());
        assert_eq!(q_binom(0, 0), IntPoly::one());
        assert!(q_binom(3, 5).is_zero());
        assert!(q_binom(3, -1).is_zero());
    }

    #[test]
    fn q_binom_matches_product_formula() {
        for n in 0..=14 {
            for k in 0..=n {
                assert_eq!(q_binom(n, k as i64), product_formula(n, k), "[{n};{k}]");
            }
        }
    }

    #[test]
    fn pascal_rows_match_product_walk() {
        for (n, row) in PascalRows::new().take(41).enumerate() {
            assert_eq!(row, binomial_row(n), "row {n}");
        }
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), p(&[1, 1]));
        for prime in [3usize, 5, 7, 11, 13, 97] {
            assert_eq!(cyclotomic(prime).unwrap(), q_int(prime, 1).unwrap());
        }
        assert_eq!(cyclotomic(12).unwrap(), p(&[1, 0, -1, 0, 1]));
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn cyclotomic_105_has_a_minus_two() {
        // smallest index with a coefficient outside {-1, 0, 1}
        let phi = cyclotomic(105).unwrap();
        assert_eq!(phi.degree(), Some(48));
        assert_eq!(phi.coeff(7), num_bigint::BigInt::from(-2));
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(divisors(1), [1]);
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), [1, 7, 49]);
    }

    #[test]
    fn spectrum_of_q_int() {
        let mut table = CyclotomicTable::new();
        let found = cyclo_spectrum(&q_int(12, 1).unwrap(), 12, &mut table).unwrap();
        assert_eq!(found.into_iter().collect::<Vec<_>>(), [2, 3, 4, 6, 12]);
        assert_eq!(
            cyclo_spectrum(&IntPoly::zero(), 5, &mut table),
            Err(Error::ZeroPolynomial)
        );
    }
}
