mod common;

use num_rational::BigRational;
use pisot_core::pisot::enumerate_pisot;

fn coeffs(p: &pisot_core::intpoly::IntPoly) -> Vec<i64> {
    p.to_i64_vec().unwrap()
}

#[test]
fn pruned_enumeration_matches_unpruned_oracle() {
    let one = BigRational::from_integer(1.into());
    let two = BigRational::from_integer(2.into());
    let oracle = common::oracle_pisot_1_2(5);
    let engine: std::collections::BTreeSet<Vec<i64>> = enumerate_pisot(&one, &two, 5)
        .unwrap()
        .iter()
        .map(|r| coeffs(&r.poly))
        .collect();
    assert_eq!(engine, oracle);
    assert!(oracle.contains(&vec![-1, -1, 1]));
}

#[test]
fn oracle_root_finder() {
    let z = common::durand_kerner(&[-1.0, -1.0, -1.0, 1.0]);
    let mut re: Vec<f64> = z
        .iter()
        .filter(|z| z.im.abs() < 1e-9)
        .map(|z| z.re)
        .collect();
    re.sort_by(f64::total_cmp);
    assert_eq!(re.len(), 1);
    assert!((re[0] - 1.839286755214161).abs() < 1e-12);
}
