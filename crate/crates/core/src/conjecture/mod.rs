//! The conjectured lower bound `c_m` on conjugate moduli of Pisot numbers in
//! `(m, m + 1)`, checked against certified records.

mod anti;
mod scan;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::pisot::bounds::{
    check_complex_floor, check_non_unit, check_simple_parry, dubickas_bound, Check,
};
use crate::pisot::{compare_conjugate_moduli, parry_threshold, PisotRecord};
use crate::real_algebraic::RealAlgebraic;
use crate::rootlab::{min_modulus, ModulusBound};

pub use anti::{
    anti_pisot_report, exceptional_table_check, golden_family_check, golden_family_poly, AntiPisot,
    AntiPisotReport, ExceptionalRow, GoldenFamilyCheck, EXCEPTIONAL_POLYS, RATIO_LIMIT,
};
pub use scan::{scan_interval, scan_interval_with, table3_csv, ScanRow, TABLE3_REFERENCE};

/// Steps allowed for the greedy expansion when a report needs it.
pub const PARRY_STEPS: usize = 2000;

#[derive(Clone, Debug, Serialize)]
pub struct CThreshold {
    pub m: u64,
    pub defining_poly: IntPoly,
    pub value: ModulusBound,
    /// `c_m` exactly, as a positive real algebraic number.
    #[serde(skip)]
    pub exact: RealAlgebraic,
}

/// `c_m`: the smallest root modulus of `x^2 - x - 1` for `m = 1`, of
/// `x^4 - 3x^3 + x^2 - 2x - 1` for `m = 2`, and of `x^2 - (m+1) x + 1` above.
pub fn c_threshold(m: u64) -> Result<CThreshold> {
    let (defining_poly, real_poly) = match m {
        0 => return Err(Error::InvalidArgument("m must be at least 1".into())),
        1 => (
            IntPoly::from_i64(&[-1, -1, 1]),
            IntPoly::from_i64(&[-1, 1, 1]),
        ),
        // the minimal-modulus root is negative, so c_2 is a root of p(-x)
        2 => {
            let p = IntPoly::from_i64(&[-1, -2, 1, -3, 1]);
            let neg = p.negate_x().normalized();
            (p, neg)
        }
        _ => {
            let p = IntPoly::new(vec![BigInt::one(), -BigInt::from(m + 1), BigInt::one()]);
            (p.clone(), p)
        }
    };
    let exact = RealAlgebraic::unique_in(&real_poly, &BigRational::zero(), &BigRational::one())
        .expect("one threshold root in (0, 1)");
    let value = min_modulus(&defining_poly, 64)?;
    Ok(CThreshold {
        m,
        defining_poly,
        value,
        exact,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Satisfies,
    Violates,
    Undecided,
}

/// A result that already implies the bound for this record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SettledBy {
    /// Degree one: there are no conjugates.
    NoConjugates,
    /// `q <= 1/c_m`, and every conjugate has modulus at least `|N(q)|/q >= 1/q`.
    BelowReciprocalThreshold,
    /// Non-unit bound `2/(m+1) >= c_m`.
    NonUnit,
    /// Simple Parry bound on real conjugates plus the complex floor.
    SimpleParry,
}

/// Differences between the smallest conjugate modulus and reference bounds.
#[derive(Clone, Debug, Serialize)]
pub struct Margins {
    pub vs_c_m: f64,
    /// `1/(m+1)`.
    pub vs_norm: f64,
    pub vs_dubickas: f64,
    /// `2/(m+1)`, non-units only.
    pub vs_non_unit: Option<f64>,
    /// Smallest real conjugate modulus minus the Parry threshold, simple
    /// Parry records with a real conjugate only.
    pub vs_parry: Option<f64>,
}

/// Exact witness of a conjugate strictly inside `|z| = c_m`.
#[derive(Clone, Debug, Serialize)]
pub struct ViolationCertificate {
    pub poly: IntPoly,
    pub conjugate_re: f64,
    pub conjugate_im: f64,
    pub conjugate_radius: f64,
    pub threshold_poly: IntPoly,
    pub threshold: f64,
    pub precision: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub record: PisotRecord,
    pub min_conj_modulus: Option<ModulusBound>,
    pub threshold: CThreshold,
    pub verdict: Verdict,
    /// Some conjugate has modulus exactly `c_m`.
    pub tight: bool,
    pub settled_by: Option<SettledBy>,
    pub complex_floor: Check,
    pub non_unit: Check,
    pub simple_parry: Check,
    pub margins: Option<Margins>,
    pub certificate: Option<ViolationCertificate>,
}

/// Compares every conjugate of `rec` with `c_m` exactly and collects the
/// reference bounds. The greedy expansion is computed if missing.
pub fn verify_conjecture(rec: &PisotRecord, prec: u32) -> Result<BoundReport> {
    let rec = if rec.parry.is_none() {
        rec.clone().with_parry(PARRY_STEPS)
    } else {
        rec.clone()
    };
    let threshold = c_threshold(rec.m)?;
    let cmp = compare_conjugate_moduli(&rec, &threshold.exact);
    let mut verdict = Verdict::Satisfies;
    let mut tight = false;
    let mut certificate = None;
    for (i, c) in &cmp {
        match c {
            None => {
                if verdict == Verdict::Satisfies {
                    verdict = Verdict::Undecided;
                }
            }
            Some(Ordering::Equal) => tight = true,
            Some(Ordering::Less) => {
                verdict = Verdict::Violates;
                let d = &rec.roots.roots[*i];
                certificate.get_or_insert(ViolationCertificate {
                    poly: rec.poly.clone(),
                    conjugate_re: d.re(),
                    conjugate_im: d.im(),
                    conjugate_radius: d.radius_f64(),
                    threshold_poly: threshold.exact.poly().clone(),
                    threshold: threshold.value.value,
                    precision: rec.roots.precision.max(prec),
                });
            }
            Some(Ordering::Greater) => {}
        }
    }
    let complex_floor = check_complex_floor(&rec);
    let non_unit = check_non_unit(&rec);
    let simple_parry = check_simple_parry(&rec);
    let settled_by = if rec.degree() == 1 {
        Some(SettledBy::NoConjugates)
    } else if threshold
        .exact
        .recip()
        .is_some_and(|r| rec.q.cmp_exact(&r).is_le())
    {
        Some(SettledBy::BelowReciprocalThreshold)
    } else if non_unit == Check::Holds {
        Some(SettledBy::NonUnit)
    } else if simple_parry == Check::Holds && complex_floor == Check::Holds {
        Some(SettledBy::SimpleParry)
    } else {
        None
    };
    let min_conj_modulus = rec.min_conjugate_modulus();
    let margins = min_conj_modulus.as_ref().map(|mb| {
        let v = mb.value;
        let m1 = (rec.m + 1) as f64;
        let min_real = rec
            .conjugates()
            .filter(|d| d.real)
            .map(|d| d.re().abs())
            .fold(f64::INFINITY, f64::min);
        Margins {
            vs_c_m: v - threshold.value.value,
            vs_norm: v - 1.0 / m1,
            vs_dubickas: v - dubickas_bound(&rec.q_bound(), rec.degree()).value,
            vs_non_unit: (!rec.is_unit).then(|| v - 2.0 / m1),
            vs_parry: (rec.parry.as_ref().is_some_and(|e| e.is_simple()) && min_real.is_finite())
                .then(|| min_real - parry_threshold(rec.m).to_f64()),
        }
    });
    Ok(BoundReport {
        record: rec,
        min_conj_modulus,
        threshold,
        verdict,
        tight,
        settled_by,
        complex_floor,
        non_unit,
        simple_parry,
        margins,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pisot::classify_pisot;

    fn rec(c: &[i64]) -> PisotRecord {
        classify_pisot(&IntPoly::from_i64(c), 64)
            .unwrap()
            .record()
            .unwrap()
    }

    #[test]
    fn thresholds() {
        let c1 = c_threshold(1).unwrap();
        assert!((c1.value.value - 0.6180339887).abs() < 1e-10);
        let c3 = c_threshold(3).unwrap();
        assert!((c3.value.value - (2.0 - 3f64.sqrt())).abs() < 1e-12);
        let c2 = c_threshold(2).unwrap();
        assert!((c2.exact.to_f64() - c2.value.value).abs() < 1e-12);
        assert!(c2.value.value > 1.0 / 3.0 && c2.value.value < 0.4);
        assert!(c_threshold(0).is_err());
    }

    #[test]
    fn threshold_inequalities() {
        for m in 1..=100u64 {
            let c = c_threshold(m).unwrap();
            let two_over = BigRational::new(2.into(), (2 * m + 1).into());
            let norm = BigRational::new(1.into(), (m + 1).into());
            assert_eq!(c.exact.cmp_rational(&two_over), Ordering::Less, "m = {m}");
            assert_eq!(c.exact.cmp_rational(&norm), Ordering::Greater, "m = {m}");
            assert!(c.value.contains(c.exact.to_f64()));
            // the simple Parry threshold dominates c_m
            assert!(parry_threshold(m).cmp_exact(&c.exact).is_ge(), "m = {m}");
            if m >= 3 {
                // c_m = (m + 1 - sqrt(m^2 + 2m - 3)) / 2
                let mf = m as f64;
                let closed = (mf + 1.0 - (mf * mf + 2.0 * mf - 3.0).sqrt()) / 2.0;
                assert!((c.value.value - closed).abs() < 1e-12 * (1.0 + 1.0 / closed));
                assert!(c.exact.is_root_of(&c.defining_poly));
            }
        }
    }

    #[test]
    fn reports() {
        let g = verify_conjecture(&rec(&[-1, -1, 1]), 64).unwrap();
        assert_eq!(g.verdict, Verdict::Satisfies);
        assert!(g.tight);
        assert!(g.margins.as_ref().unwrap().vs_c_m.abs() < 1e-12);
        assert_eq!(g.settled_by, Some(SettledBy::BelowReciprocalThreshold));

        let t = verify_conjecture(&rec(&[-1, -1, -1, 1]), 64).unwrap();
        assert_eq!(t.verdict, Verdict::Satisfies);
        assert!(!t.tight);
        assert!((t.min_conj_modulus.unwrap().value - 0.7374).abs() < 1e-4);

        let q = verify_conjecture(&rec(&[1, -4, 1]), 64).unwrap();
        assert_eq!(
            (q.verdict, q.tight, q.threshold.m),
            (Verdict::Satisfies, true, 3)
        );

        let nu = verify_conjecture(&rec(&[-3, -3, 1]), 64).unwrap();
        assert_eq!(nu.settled_by, Some(SettledBy::NonUnit));
        assert!(nu.certificate.is_none());

        let three = verify_conjecture(&rec(&[-3, 1]), 64).unwrap();
        assert_eq!(
            (three.verdict, three.settled_by),
            (Verdict::Satisfies, Some(SettledBy::NoConjugates))
        );
    }
}
