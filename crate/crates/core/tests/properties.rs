use proptest::prelude::*;
use qfib_core::qcore::PascalRows;
use qfib_core::{
    binomial_row, cyclotomic, fib, fib_sum, int_fib, q_binom, q_int, BigInt, FamilyId, IntPoly,
    QuotientRing,
};

fn poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-1_000_000_000_000i64..1_000_000_000_000, 0..max_len)
        .prop_map(|c| IntPoly::from_i64s(&c))
}

/// Random divisor with leading coefficient +1 or -1.
fn unit_divisor() -> impl Strategy<Value = IntPoly> {
    (prop::collection::vec(-50i64..50, 0..8), any::<bool>()).prop_map(|(mut c, neg)| {
        c.push(if neg { -1 } else { 1 });
        IntPoly::from_i64s(&c)
    })
}

proptest! {
    #[test]
    fn divrem_recovers_dividend(a in poly(30), d in unit_divisor()) {
        let (quot, rem) = a.divrem(&d).unwrap();
        prop_assert_eq!(&(&quot * &d) + &rem, a);
        match (rem.degree(), d.degree()) {
            (Some(r), Some(dd)) => prop_assert!(r < dd),
            (None, _) => {}
            (Some(_), None) => prop_assert!(false, "zero divisor"),
        }
    }

    #[test]
    fn product_is_exactly_divisible(a in poly(20), d in unit_divisor()) {
        let prod = &a * &d;
        prop_assert_eq!(prod.div_exact(&d).unwrap(), a);
    }

    #[test]
    fn ring_axioms(a in poly(12), b in poly(12), c in poly(12)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(15), b in poly(15), x in -20i64..20) {
        let x = BigInt::from(x);
        prop_assert_eq!((&a * &b).evaluate(&x), a.evaluate(&x) * b.evaluate(&x));
        prop_assert_eq!((&a + &b).evaluate(&x), a.evaluate(&x) + b.evaluate(&x));
    }

    #[test]
    fn serialize_roundtrip(a in poly(40)) {
        prop_assert_eq!(IntPoly::parse(&a.serialize()).unwrap(), a);
    }

    #[test]
    fn one_minus_shift_roundtrip(a in poly(25), s in 1usize..12) {
        let m = a.mul_one_minus_shift(s);
        prop_assert_eq!(&m, &(&a * &(&IntPoly::one() - &IntPoly::monomial(1, s))));
        prop_assert_eq!(m.div_one_minus_shift(s).unwrap(), a);
    }

    #[test]
    fn fused_shift_step_matches_two_steps(a in poly(25), s in 1usize..12, t in 1usize..12) {
        let d = a.mul_one_minus_shift(t);
        let two_step = d.mul_one_minus_shift(s).div_one_minus_shift(t);
        prop_assert_eq!(d.clone().mul_div_one_minus_shift(s, t), two_step);
        // not divisible unless the factor is present
        prop_assert_eq!(a.clone().mul_div_one_minus_shift(s, t).is_ok(), a.mul_one_minus_shift(s).div_one_minus_shift(t).is_ok());
    }

    #[test]
    fn residue_is_a_homomorphism(a in poly(30), b in poly(30), n in 1usize..40) {
        let ring = QuotientRing::new(n).unwrap();
        let (ra, rb) = (ring.reduce(&a), ring.reduce(&b));
        prop_assert_eq!(ring.mul(&ra, &rb).unwrap(), ring.reduce(&(&a * &b)));
        prop_assert_eq!(ring.add(&ra, &rb).unwrap(), ring.reduce(&(&a + &b)));
        let phi_deg = ring.modulus().degree().unwrap();
        prop_assert!(ra.value().degree().is_none_or(|d| d < phi_deg));
    }

    #[test]
    fn monomial_reduction_uses_period(c in -5i64..5, e in 0u64..10_000, n in 1usize..30) {
        let ring = QuotientRing::new(n).unwrap();
        prop_assert_eq!(ring.monomial(c, e), ring.monomial(c, e + n as u64 * 7));
        prop_assert_eq!(ring.monomial(c, e), ring.reduce(&IntPoly::monomial(c, (e % n as u64) as usize)));
    }

    #[test]
    fn q_binom_symmetry_and_q_equals_one(n in 0usize..60, k in 0usize..60) {
        let k = k.min(n);
        let b = q_binom(n, k as i64);
        prop_assert_eq!(&b, &q_binom(n, (n - k) as i64));
        // palindromic of degree k(n-k)
        let coeffs = b.coeffs();
        prop_assert_eq!(coeffs.len(), k * (n - k) + 1);
        prop_assert!(coeffs.iter().eq(coeffs.iter().rev()));
        let mut choose = BigInt::from(1);
        for i in 0..k {
            choose = choose * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        prop_assert_eq!(b.evaluate(&BigInt::from(1)), choose);
    }

    #[test]
    fn families_specialize_to_fibonacci(n in 1usize..60, r in 0u32..4) {
        let one = BigInt::from(1);
        prop_assert_eq!(fib(FamilyId::SchurF, n).evaluate(&one), BigInt::from(int_fib(n as u64)));
        prop_assert_eq!(fib(FamilyId::SchurG, n).evaluate(&one), BigInt::from(int_fib(n as u64)));
        let f = fib(FamilyId::CiglerF(r), n);
        prop_assert_eq!(&f, &fib_sum(FamilyId::CiglerF(r), n));
    }
}

#[test]
fn q_int_is_product_of_cyclotomics() {
    for n in 1..=60usize {
        let mut acc = IntPoly::one();
        for d in 2..=n {
            if n % d == 0 {
                acc = &acc * &cyclotomic(d).unwrap();
            }
        }
        assert_eq!(acc, q_int(n, 1).unwrap(), "n={n}");
    }
}

#[test]
fn pascal_rows_match_rows() {
    for (n, row) in PascalRows::new().take(31).enumerate() {
        assert_eq!(row, binomial_row(n));
    }
}
