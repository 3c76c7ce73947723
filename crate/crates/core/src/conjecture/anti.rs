//! Anti-Pisot ratio test: a real `beta_1` with `|beta_1| > 1` whose real
//! conjugate `beta_2` has `1/|beta_2|` Pisot. The ratio
//! `log|beta_1| / |log|beta_2||` below 0.82 gives dimension one.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{verify_conjecture, BoundReport};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::pisot::{classify_pisot, pisot_candidate, Classification, PisotRecord};
use crate::real_algebraic::RealAlgebraic;
use crate::rootlab::{count_roots_in_disk, precision_cap};

/// Ratio below which the dimension-one criterion applies.
pub const RATIO_LIMIT: f64 = 0.82;

/// Relative padding of the `f64` ratio enclosure.
const RATIO_SLACK: f64 = 1e-12;

#[derive(Clone, Debug, Serialize)]
pub struct AntiPisotReport {
    /// Non-cyclotomic part of the input, assumed irreducible.
    pub poly: IntPoly,
    pub beta1: f64,
    pub beta2: f64,
    /// Minimal polynomial of the Pisot number `1/|beta_2|`.
    pub reciprocal_pisot_poly: IntPoly,
    pub ratio: f64,
    pub ratio_lo: f64,
    pub ratio_hi: f64,
    /// `ratio_hi < 0.82`.
    pub dim_one_certified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub enum AntiPisot {
    Report(AntiPisotReport),
    NotAntiPisot,
}

impl AntiPisot {
    pub fn report(&self) -> Option<&AntiPisotReport> {
        match self {
            AntiPisot::Report(r) => Some(r),
            AntiPisot::NotAntiPisot => None,
        }
    }

    /// The ratio criterion holds, or there is nothing to check.
    pub fn passes(&self) -> bool {
        self.report().is_none_or(|r| r.dim_one_certified)
    }
}

/// Finds the real root `beta_2` inside the unit disk with `1/|beta_2|` Pisot,
/// pairs it with every real root of modulus above 1, and reports the pair
/// with the smallest ratio. The non-cyclotomic part of `p` is assumed
/// irreducible, so all its roots are conjugates.
pub fn anti_pisot_report(p: &IntPoly, prec: u32) -> Result<AntiPisot> {
    let core = pisot_candidate(p);
    if core.deg() < 2 {
        return Ok(AntiPisot::NotAntiPisot);
    }
    let one = BigRational::one();
    let real = RealAlgebraic::real_roots(&core);
    let recip = core.reciprocal()?;
    let mut beta2 = None;
    for r in &real {
        let a = r.abs();
        if a.cmp_rational(&one).is_ge() {
            continue;
        }
        let cand = if r.is_positive() {
            recip.clone()
        } else {
            recip.negate_x().normalized()
        };
        if let Classification::Pisot(rec) = classify_pisot(&cand, prec)? {
            let target = a.recip().expect("nonzero root");
            if rec.q.cmp_exact(&target).is_eq() {
                beta2 = Some((r.clone(), rec.poly.clone()));
                break;
            }
        }
    }
    let Some((b2, rpoly)) = beta2 else {
        return Ok(AntiPisot::NotAntiPisot);
    };
    let denom = b2.to_f64().abs().ln().abs();
    let best = real
        .iter()
        .filter(|r| r.abs().cmp_rational(&one).is_gt())
        .map(|r| (r.to_f64(), r.to_f64().abs().ln() / denom))
        .min_by(|a, b| a.1.total_cmp(&b.1));
    Ok(match best {
        None => AntiPisot::NotAntiPisot,
        Some((b1, ratio)) => {
            let ratio_hi = ratio * (1.0 + RATIO_SLACK);
            AntiPisot::Report(AntiPisotReport {
                poly: core,
                beta1: b1,
                beta2: b2.to_f64(),
                reciprocal_pisot_poly: rpoly,
                ratio,
                ratio_lo: ratio * (1.0 - RATIO_SLACK),
                ratio_hi,
                dim_one_certified: ratio_hi < RATIO_LIMIT,
            })
        }
    })
}

/// The five regular Pisot numbers below 1.8 outside the limit-point
/// families, with their dominant roots.
pub const EXCEPTIONAL_POLYS: [(&[i64], f64); 5] = [
    (&[-1, -1, 0, 0, -1, -1, 1], 1.743700166),
    (&[-1, 0, 0, -1, 0, -1, -1, 1], 1.774520059),
    (&[-1, 1, 0, -2, 2, 0, -2, 1], 1.683468801),
    (&[-1, 0, 0, 1, -1, -1, -1, 1], 1.747457424),
    (&[-1, 1, -1, 2, -2, 1, -2, 1], 1.790222867),
];

#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalRow {
    pub report: BoundReport,
    pub expected_root: f64,
    /// Real conjugates of modulus below 1.
    pub real_conjugates: Vec<f64>,
    /// Anti-Pisot test on the reciprocal polynomial.
    pub anti_pisot: AntiPisot,
    /// `max |log|q'|| / log q` over all conjugates.
    pub worst_log_ratio: f64,
}

pub fn exceptional_table_check(prec: u32) -> Result<Vec<ExceptionalRow>> {
    EXCEPTIONAL_POLYS
        .iter()
        .map(|(c, root)| {
            let p = IntPoly::from_i64(c);
            let rec = pisot_record(&p, prec)?;
            let real_conjugates = rec
                .conjugates()
                .filter(|d| d.real)
                .map(|d| d.re())
                .collect();
            let worst_log_ratio = worst_log_ratio(&rec);
            let anti_pisot = anti_pisot_report(&p.reciprocal()?, prec)?;
            Ok(ExceptionalRow {
                report: verify_conjecture(&rec, prec)?,
                expected_root: *root,
                real_conjugates,
                anti_pisot,
                worst_log_ratio,
            })
        })
        .collect()
}

fn pisot_record(p: &IntPoly, prec: u32) -> Result<PisotRecord> {
    match classify_pisot(p, prec)? {
        Classification::Pisot(r) => Ok(*r),
        Classification::Undecided => Err(Error::PrecisionExhausted(precision_cap())),
        Classification::NotPisot(r) => {
            Err(Error::InvalidArgument(format!("{p} is not Pisot: {r:?}")))
        }
    }
}

fn worst_log_ratio(rec: &PisotRecord) -> f64 {
    let lq = rec.q_f64().ln();
    rec.conjugates()
        .map(|d| d.center_c64().norm().ln().abs() / lq)
        .fold(0.0, f64::max)
}

/// The member `(x^2 - x - 1) x^n + 1` of the `B`, `r = 1` family.
pub fn golden_family_poly(n: u32) -> IntPoly {
    IntPoly::from_i64(&[-1, -1, 1]).shift(n as usize) + IntPoly::one()
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenFamilyCheck {
    pub n: u32,
    pub poly: IntPoly,
    pub q: f64,
    /// `1.6 <= q <= 1.64`, decided exactly.
    pub q_in_range: bool,
    /// Roots with `|z| < 0.7`.
    pub roots_inside: usize,
    pub worst_log_ratio: f64,
}

/// Pisot root, small-root count and worst log ratio of
/// `(x^2 - x - 1) x^n + 1`.
pub fn golden_family_check(n: u32, prec: u32) -> Result<GoldenFamilyCheck> {
    let poly = golden_family_poly(n);
    let rec = pisot_record(&poly, prec)?;
    let lo = BigRational::new(8.into(), 5.into());
    let hi = BigRational::new(41.into(), 25.into());
    let q_in_range = rec.q.cmp_rational(&lo).is_ge() && rec.q.cmp_rational(&hi).is_le();
    let zero = BigRational::zero();
    let roots_inside = count_roots_in_disk(
        &poly,
        &zero,
        &zero,
        &BigRational::new(7.into(), 10.into()),
        prec,
    )?;
    Ok(GoldenFamilyCheck {
        n,
        q: rec.q_f64(),
        q_in_range,
        roots_inside,
        worst_log_ratio: worst_log_ratio(&rec),
        poly,
    })
}
