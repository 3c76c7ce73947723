use pisot_core::conjecture::{verify_conjecture, Verdict};
use pisot_core::intpoly::IntPoly;
use pisot_core::pisot::classify_pisot;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// x^2 - a x - b with 1 <= b <= a is Pisot with floor(q) = a and its
    /// conjugate -b/q stays at or above c_a, with equality only for the golden ratio.
    #[test]
    fn quadratic_pisot_numbers_satisfy_the_bound(a in 1i64..40, frac in 0.0f64..1.0) {
        let b = 1 + ((a - 1) as f64 * frac) as i64;
        let p = IntPoly::from_i64(&[-b, -a, 1]);
        let rec = classify_pisot(&p, 128).unwrap().record().unwrap();
        prop_assert_eq!(rec.m, a as u64);
        let rep = verify_conjecture(&rec, 128).unwrap();
        prop_assert_eq!(rep.verdict, Verdict::Satisfies);
        prop_assert!(rep.margins.unwrap().vs_c_m >= -1e-12);
        prop_assert_eq!(rep.tight, a == 1);
    }

    /// Content scaling does not change the classification.
    #[test]
    fn classification_ignores_content(k in 2i64..20, a in 1i64..10) {
        let p = IntPoly::from_i64(&[-1, -a, 1]);
        let scaled = IntPoly::from_i64(&[-k, -a * k, k]);
        let q1 = classify_pisot(&p, 128).unwrap().record().unwrap().q_f64();
        let q2 = classify_pisot(&scaled, 128).unwrap().record().unwrap().q_f64();
        prop_assert_eq!(q1, q2);
    }
}
