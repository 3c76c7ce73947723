//! Interval scans for the smallest conjugate modulus in `(m, m + 1)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::{c_threshold, verify_conjecture, BoundReport};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::pisot::{enumerate_pisot_with, EnumerateOptions};
use crate::rootlab::ModulusBound;

/// Published scan sizes: `(m, N, size, smallest polynomial)`. Reproducing
/// the sizes needs a limit-point-aware enumerator and is not attempted.
pub const TABLE3_REFERENCE: [(u64, u32, u64, &str); 10] = [
    (1, 150, 59876, "x^2 - x - 1"),
    (2, 12, 50557, "x^4 - 3x^3 + x^2 - 2x - 1"),
    (3, 9, 67213, "x^2 - 4x + 1"),
    (4, 7, 18995, "x^2 - 5x + 1"),
    (5, 7, 50317, "x^2 - 6x + 1"),
    (6, 6, 15268, "x^2 - 7x + 1"),
    (7, 6, 26959, "x^2 - 8x + 1"),
    (8, 5, 4696, "x^2 - 9x + 1"),
    (9, 5, 6578, "x^2 - 10x + 1"),
    (10, 5, 8743, "x^2 - 11x + 1"),
];

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub m: u64,
    pub max_degree: usize,
    pub units_only: bool,
    /// Lower end of the scanned range: `1/c_m` (included) for unit scans,
    /// `m` (excluded) otherwise. The upper end `m + 1` is excluded.
    pub lower: f64,
    /// Number of distinct minimal polynomials found.
    pub count: usize,
    pub argmin_poly: Option<IntPoly>,
    pub argmin_modulus: Option<ModulusBound>,
    pub reports: Vec<BoundReport>,
}

pub fn scan_interval(m: u64, max_degree: usize, units_only: bool) -> Result<ScanRow> {
    scan_interval_with(m, max_degree, units_only, &EnumerateOptions::default())
}

/// Enumerates Pisot numbers in `[1/c_m, m + 1)` (units only) or `(m, m + 1)`
/// up to `max_degree`, and reports the smallest conjugate modulus.
pub fn scan_interval_with(
    m: u64,
    max_degree: usize,
    units_only: bool,
    opts: &EnumerateOptions,
) -> Result<ScanRow> {
    let c = c_threshold(m)?;
    let recip = c.exact.recip().expect("c_m is positive");
    let mb = BigRational::from_integer(BigInt::from(m));
    let b = &mb + BigRational::one();
    let a = if units_only {
        // a rational just below 1/c_m; the exact filter below restores the
        // closed end
        let (lo, _) = recip.enclosure(40);
        let a = lo - BigRational::new(BigInt::one(), BigInt::from(1u64 << 40));
        a.max(mb.clone())
    } else {
        mb.clone()
    };
    if a < BigRational::one() {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let e = enumerate_pisot_with(&a, &b, max_degree, opts)?;
    if !e.complete {
        return Err(Error::BudgetExceeded(e.nodes));
    }
    let keep: Vec<_> = e
        .records
        .into_iter()
        .filter(|r| !units_only || (r.is_unit && r.q.cmp_exact(&recip).is_ge()))
        .collect();
    let reports = keep
        .iter()
        .map(|r| verify_conjecture(r, opts.precision))
        .collect::<Result<Vec<_>>>()?;
    let argmin = reports
        .iter()
        .filter(|r| r.min_conj_modulus.is_some())
        .min_by(|x, y| {
            let (a, b) = (
                x.min_conj_modulus.as_ref().unwrap(),
                y.min_conj_modulus.as_ref().unwrap(),
            );
            a.value
                .partial_cmp(&b.value)
                .unwrap_or(Ordering::Equal)
                .then(x.record.degree().cmp(&y.record.degree()))
        });
    Ok(ScanRow {
        m,
        max_degree,
        units_only,
        lower: if units_only { recip.to_f64() } else { m as f64 },
        count: keep.len(),
        argmin_poly: argmin.map(|r| r.record.poly.clone()),
        argmin_modulus: argmin.and_then(|r| r.min_conj_modulus.clone()),
        reports,
    })
}

/// CSV rows `m,N,size,smallest_polynomial,min_conjugate_modulus` followed
/// by the published `N`, size and polynomial; published sizes are marked
/// `not-attempted`.
pub fn table3_csv(rows: &[ScanRow]) -> String {
    let mut s = String::from(
        "m,N,size,smallest_polynomial,min_conjugate_modulus,reference_N,reference_size,reference_smallest,reference_counts\n",
    );
    for r in rows {
        let reference = TABLE3_REFERENCE.iter().find(|t| t.0 == r.m);
        let (rn, rs, rp) = match reference {
            Some((_, n, size, p)) => (n.to_string(), size.to_string(), p.to_string()),
            None => (String::new(), String::new(), String::new()),
        };
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},not-attempted\n",
            r.m,
            r.max_degree,
            r.count,
            r.argmin_poly
                .as_ref()
                .map(|p| p.to_string())
                .unwrap_or_default(),
            r.argmin_modulus
                .as_ref()
                .map(|b| format!("{:.12}", b.value))
                .unwrap_or_default(),
            rn,
            rs,
            rp
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjecture::Verdict;

    #[test]
    fn quadratic_scans_find_the_reciprocal_polynomial() {
        for m in 3..=10u64 {
            let row = scan_interval(m, 2, true).unwrap();
            let want = IntPoly::new(vec![BigInt::one(), -BigInt::from(m + 1), BigInt::one()]);
            assert_eq!(row.argmin_poly.as_ref(), Some(&want), "m = {m}");
            assert!(row.reports.iter().all(|r| r.verdict == Verdict::Satisfies));
        }
    }

    #[test]
    fn golden_scan() {
        let row = scan_interval(1, 2, true).unwrap();
        assert_eq!(row.count, 1);
        assert_eq!(row.argmin_poly, Some(IntPoly::from_i64(&[-1, -1, 1])));
        let all = scan_interval(1, 4, false).unwrap();
        assert!(all.count > row.count);
        let csv = table3_csv(&[row]);
        assert!(csv
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("1,2,1,x^2 - x - 1,0.618033988750,150,59876,"));
    }
}
