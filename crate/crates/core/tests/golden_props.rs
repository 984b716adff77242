//! Property tests for the exact Z[phi] layer. Each check validates a derived
//! primitive (sign, floor, rounding) against pure ring arithmetic, so a bug
//! in the integer-sqrt reasoning cannot hide behind itself.

use fibpart::golden::{floor_mul_psi, GoldenNum};
use num_bigint::BigInt;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = i128> {
    prop_oneof![
        -1_000_000_000_000i128..1_000_000_000_000i128,
        -1000i128..1000i128,
    ]
}

fn golden() -> impl Strategy<Value = GoldenNum> {
    (coeff(), coeff()).prop_map(|(p, q)| GoldenNum::new(p, q))
}

proptest! {
    #[test]
    fn conjugation_is_a_ring_homomorphism(a in golden(), b in golden()) {
        prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn sign_is_multiplicative(a in golden(), b in golden()) {
        prop_assert_eq!((&a * &b).signum(), a.signum() * b.signum());
    }

    #[test]
    fn ordering_respects_translation(a in golden(), b in golden(), c in golden()) {
        prop_assert_eq!(a.cmp(&b), (&a + &c).cmp(&(&b + &c)));
    }

    #[test]
    fn floor_div_brackets_the_value(a in golden(), den in 1i64..10_000) {
        let den = BigInt::from(den);
        let f = a.floor_div(&den);
        // den*f <= a < den*(f+1), checked with exact ring comparisons only.
        let lo = GoldenNum::new(&f * &den, 0);
        let hi = GoldenNum::new((&f + 1) * &den, 0);
        prop_assert!((&a - &lo).signum() >= 0);
        prop_assert!((&hi - &a).signum() > 0);
    }

    #[test]
    fn decimal_rendering_is_within_half_ulp(a in golden(), digits in 1usize..25) {
        let s = a.to_decimal(digits);
        let (int_part, frac_part) = s.split_once('.').unwrap();
        prop_assert_eq!(frac_part.len(), digits);
        let scaled: BigInt = format!("{int_part}{frac_part}").parse().unwrap();
        // |10^digits * a - scaled| <= 1/2, i.e. |2*10^digits*a - 2*scaled| <= 1.
        let pow10 = BigInt::from(10u32).pow(digits as u32);
        let two_scaled = GoldenNum::new(2 * &scaled, 0);
        let doubled = &GoldenNum::new(2 * &pow10 * &a.p, 2 * &pow10 * &a.q) - &two_scaled;
        let above = &doubled + &GoldenNum::one();
        let below = &doubled - &GoldenNum::one();
        prop_assert!(above.signum() >= 0, "rounded more than half an ulp low");
        prop_assert!(below.signum() <= 0, "rounded more than half an ulp high");
    }

    #[test]
    fn floor_mul_psi_matches_generic_floor(n in 0i128..1_000_000_000_000) {
        let n = BigInt::from(n);
        // n*psi = n - n*phi as a GoldenNum; its floor must agree.
        let direct = GoldenNum::new(n.clone(), -&n).floor();
        prop_assert_eq!(floor_mul_psi(&n), direct);
    }
}
