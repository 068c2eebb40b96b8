//! Polynomial Rogers-Ramanujan sums and the residues they predict modulo
//! `Phi_n`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::poly::IntPoly;
use crate::qcore::{binomial_row, q_binom};
use crate::residue::{QuotientRing, Residue};

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Terms `(k, exponent, binomial index)` of a sum
/// `sum_k (-1)^k q^{exponent(k)} [n; index(k)]`, keeping only the `k` whose
/// index lands in `[0, n]`.
fn rr_terms(
    n: usize,
    exponent: impl Fn(i64) -> i64,
    index: impl Fn(i64) -> i64,
) -> Vec<(i64, u64, usize)> {
    let n_i = n as i64;
    let reach = n_i / 5 + 2;
    (-reach..=reach)
        .filter_map(|k| {
            let j = index(k);
            (0..=n_i).contains(&j).then(|| {
                let e = exponent(k);
                debug_assert!(e >= 0);
                (k, e as u64, j as usize)
            })
        })
        .collect()
}

fn f_terms(n: usize) -> Vec<(i64, u64, usize)> {
    let n_i = n as i64;
    rr_terms(n, |k| k * (5 * k - 1) / 2, |k| (n_i + 5 * k).div_euclid(2))
}

fn g_terms(n: usize) -> Vec<(i64, u64, usize)> {
    let n_i = n as i64;
    rr_terms(
        n,
        |k| k * (5 * k - 3) / 2,
        |k| (n_i - 1 + 5 * k).div_euclid(2),
    )
}

fn assemble(n: usize, terms: &[(i64, u64, usize)]) -> IntPoly {
    let row = binomial_row(n);
    let mut acc = IntPoly::zero();
    for &(k, e, j) in terms {
        if sign(k) > 0 {
            acc.add_shifted(&row[j], e as usize);
        } else {
            acc.sub_shifted(&row[j], e as usize);
        }
    }
    acc
}

/// `sum_k (-1)^k q^{k(5k-1)/2} [n; floor((n+5k)/2)]`, which equals `F_{n+1}`.
pub fn rr_sum_f(n: usize) -> IntPoly {
    assemble(n, &f_terms(n))
}

/// `sum_k (-1)^k q^{k(5k-3)/2} [n; floor((n-1+5k)/2)]`, which equals `G_n`.
pub fn rr_sum_g(n: usize) -> IntPoly {
    assemble(n, &g_terms(n))
}

/// Binomial indices `j` of the nonzero terms of [`rr_sum_g`].
pub fn rr_g_indices(n: usize) -> Vec<usize> {
    g_terms(n).into_iter().map(|(_, _, j)| j).collect()
}

/// The two-term expression for `F_{n+1}` modulo `Phi_n`, with
/// `r = floor((n+2)/5)`:
///
/// `(-1)^r q^{r(5r+1)/2} [n; floor((n-5r)/2)] + (-1)^r q^{r(5r-1)/2} [n; floor((n+5r)/2)]`.
///
/// For `n >= 2` this agrees with the residue of `F_{n+1}`; at `n = 1` the two
/// terms are the same `k = 0` summand counted twice.
pub fn residue_f_two_term(ring: &QuotientRing) -> Residue {
    let n = ring.index();
    let n_i = n as i64;
    let r = (n_i + 2) / 5;
    let s = sign(r);
    let e_minus = (r * (5 * r + 1) / 2) as u64;
    let e_plus = (r * (5 * r - 1) / 2) as u64;
    let b_minus = ring.reduce(&q_binom(n, (n_i - 5 * r).div_euclid(2)));
    let b_plus = ring.reduce(&q_binom(n, (n_i + 5 * r).div_euclid(2)));
    let t_minus = ring
        .mul(&ring.monomial(s, e_minus), &b_minus)
        .expect("same ring");
    let t_plus = ring
        .mul(&ring.monomial(s, e_plus), &b_plus)
        .expect("same ring");
    ring.add(&t_minus, &t_plus).expect("same ring")
}

/// One row of the table of `G_n` modulo `Phi_n`, `n = 5m + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PanResidueCase {
    pub n: usize,
    pub m: usize,
    /// The unique summation index whose term survives modulo `Phi_n`
    /// (0 when `5 | n`).
    pub r_of_n: i64,
    /// `(-1)^r q^{r(5r-3)/2}` reduced, i.e. the surviving summand itself.
    pub surviving_term: Residue,
    /// The simplified right column of the table, reduced.
    pub expected: Residue,
}

/// Builds the table row for `n = ring.index()` (`n >= 2`):
/// `5m -> 0`, `5m+1 -> q^m`, `5m+2 -> -q^{3m+1}`, `5m+3 -> -q^{2m+1}`,
/// `5m+4 -> q^{4m+3}`.
pub fn pan_expected_residue(ring: &QuotientRing) -> PanResidueCase {
    let n = ring.index();
    let (m, c) = (n / 5, n % 5);
    let mi = m as i64;
    let r_of_n = match c {
        0 => 0,
        1 | 2 => -mi,
        _ => mi + 1,
    };
    let m64 = m as u64;
    let expected = match c {
        0 => ring.zero(),
        1 => ring.monomial(1, m64),
        2 => ring.monomial(-1, 3 * m64 + 1),
        3 => ring.monomial(-1, 2 * m64 + 1),
        _ => ring.monomial(1, 4 * m64 + 3),
    };
    let surviving_term = if c == 0 {
        ring.zero()
    } else {
        ring.monomial(
            BigInt::from(sign(r_of_n)),
            (r_of_n * (5 * r_of_n - 3) / 2) as u64,
        )
    };
    PanResidueCase {
        n,
        m,
        r_of_n,
        surviving_term,
        expected,
    }
}

/// `l(m, k) = k(5k-3)/2 - C(floor((5(m+k)+1)/2), 2)`.
pub fn ell(m: i64, k: i64) -> i64 {
    let x = (5 * (m + k) + 1).div_euclid(2);
    k * (5 * k - 3) / 2 - x * (x - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{q_int, CyclotomicTable};
    use crate::qfib::{fib, FamilyId};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn rr_f_examples() {
        assert_eq!(rr_sum_f(0), IntPoly::one());
        assert_eq!(rr_sum_f(4), p(&[1, 1, 1, 1, 1]));
        let tail = &p(&[1, 1]) + &q_int(9, 1).unwrap().shift(4);
        let f10 = &q_int(5, 2).unwrap() * &tail;
        assert_eq!(rr_sum_f(9), f10);
    }

    #[test]
    fn rr_g_examples() {
        assert_eq!(rr_sum_g(1), IntPoly::one());
        assert!(rr_sum_g(0).is_zero());
        assert_eq!(rr_sum_g(5), p(&[1, 0, 1, 1, 1, 0, 1]));
        let g10 = &(&q_int(11, 1).unwrap() * &q_int(5, 2).unwrap()) * &p(&[1, -1, 0, 1, -1, 0, 1]);
        assert_eq!(rr_sum_g(10), g10);
    }

    #[test]
    fn two_term_examples() {
        let mut table = CyclotomicTable::new();
        assert!(residue_f_two_term(&table.ring(12)).is_zero());
        assert!(residue_f_two_term(&table.ring(7)).is_zero());
        let ring6 = table.ring(6);
        let oracle = fib(FamilyId::SchurF, 7).divrem(ring6.modulus()).unwrap().1;
        assert_eq!(residue_f_two_term(&ring6).value(), &oracle);
        // n = 1: the k = 0 summand is counted twice
        assert_eq!(
            residue_f_two_term(&table.ring(1)).value(),
            &IntPoly::constant(2)
        );
    }

    #[test]
    fn pan_examples() {
        let mut table = CyclotomicTable::new();
        let c6 = pan_expected_residue(&table.ring(6));
        assert_eq!((c6.m, c6.r_of_n), (1, -1));
        assert_eq!(c6.expected, table.ring(6).reduce(&IntPoly::q()));
        let c7 = pan_expected_residue(&table.ring(7));
        assert_eq!(c7.expected.value(), &IntPoly::monomial(-1, 4));
        assert!(pan_expected_residue(&table.ring(10)).expected.is_zero());
    }

    #[test]
    fn ell_examples() {
        // l(2,1) = 1 - C(8,2) = -27, l(2,2) = 7 - C(10,2) = -38
        assert_eq!(ell(2, 1), -27);
        assert_eq!(ell(2, 2), -38);
        assert_eq!(ell(2, 1) - ell(2, 2), 11);
        // l(1,3) = 18 - C(10,2) = -27, l(1,2) = 7 - C(8,2) = -21
        assert_eq!(ell(1, 3) - ell(1, 2), -6);
        assert_eq!(ell(0, 0), 0);
    }

    #[test]
    fn surviving_g_indices_for_multiples_of_five() {
        for m in 1..=20usize {
            let n = 5 * m;
            assert!(rr_g_indices(n).iter().all(|&j| j > 0 && j < n), "n={n}");
        }
    }
}
