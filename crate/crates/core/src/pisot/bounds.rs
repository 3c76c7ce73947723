//! Reference lower bounds on conjugate moduli and per-record theorem checks.

use std::cmp::Ordering;

use serde::Serialize;

use super::{compare_conjugate_moduli, parry_threshold, rational_threshold, PisotRecord};
use crate::dyadic::{Dyadic, Round};
use crate::rootlab::ModulusBound;

/// Relative slack applied to `f64` evaluations of transcendental bounds.
const REL_SLACK: f64 = 1e-12;

/// The published lower bound on conjugate moduli of a degree-`d` Pisot
/// number enclosed by `q`:
/// `q^-1 + 2^-5 q^(-3 - 4/(d-2)) log(q)^(-2/(d-2))` for `d >= 4`,
/// `q^-1 + 1.999 q^-2` for `d = 3`, and the norm bound `1/(m+1)` below.
/// Every branch is decreasing in `q`, so the enclosure endpoints swap.
pub fn dubickas_bound(q: &ModulusBound, d: usize) -> ModulusBound {
    let (q_lo, q_hi) = (q.lo.to_f64(), q.hi.to_f64());
    if d < 3 {
        let m1 = Dyadic::from_bigint(&(q.lo.floor() + 1));
        let lo = Dyadic::one().div(&m1, 64, Round::Down);
        let hi = Dyadic::one().div(&m1, 64, Round::Up);
        return ModulusBound::from_bounds(lo, hi, true);
    }
    let f = |q: f64| -> f64 {
        if d == 3 {
            1.0 / q + 1.999 / (q * q)
        } else {
            let e = 4.0 / (d as f64 - 2.0);
            1.0 / q + q.powf(-3.0 - e) * q.ln().powf(-e / 2.0) / 32.0
        }
    };
    let lo = f(q_hi) * (1.0 - REL_SLACK);
    let hi = f(q_lo) * (1.0 + REL_SLACK);
    ModulusBound::from_bounds(Dyadic::from_f64(lo), Dyadic::from_f64(hi), true)
}

/// Outcome of checking one theorem on one record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Check {
    Holds,
    Fails,
    /// The theorem's hypothesis does not apply to this record.
    NotApplicable,
    Undecided,
}

impl Check {
    pub fn ok(self) -> bool {
        matches!(self, Check::Holds | Check::NotApplicable)
    }
}

/// No non-real conjugate lies strictly inside `|z| = 2/(2m+1)`, and at most
/// one real conjugate does.
pub fn check_complex_floor(rec: &PisotRecord) -> Check {
    let t = rational_threshold(2, 2 * rec.m as i64 + 1);
    let cmp = compare_conjugate_moduli(rec, &t);
    let mut real_below = 0;
    for (i, c) in cmp {
        match c {
            None => return Check::Undecided,
            Some(Ordering::Less) => {
                if rec.roots.roots[i].real {
                    real_below += 1;
                } else {
                    return Check::Fails;
                }
            }
            _ => {}
        }
    }
    if real_below <= 1 {
        Check::Holds
    } else {
        Check::Fails
    }
}

/// Every conjugate of a non-unit has modulus at least `2/(m+1)`.
pub fn check_non_unit(rec: &PisotRecord) -> Check {
    if rec.is_unit {
        return Check::NotApplicable;
    }
    all_at_least(rec, &rational_threshold(2, rec.m as i64 + 1), |_| true)
}

/// Every real conjugate of a simple Parry number has modulus at least the
/// positive root of `x^2 + m x - 1`. Needs the record's expansion.
pub fn check_simple_parry(rec: &PisotRecord) -> Check {
    match &rec.parry {
        Some(e) if e.is_simple() => {
            all_at_least(rec, &parry_threshold(rec.m), |i| rec.roots.roots[i].real)
        }
        Some(_) => Check::NotApplicable,
        None => Check::Undecided,
    }
}

fn all_at_least(
    rec: &PisotRecord,
    t: &crate::real_algebraic::RealAlgebraic,
    pick: impl Fn(usize) -> bool,
) -> Check {
    let mut out = Check::Holds;
    for (i, c) in compare_conjugate_moduli(rec, t) {
        if !pick(i) {
            continue;
        }
        match c {
            None => out = Check::Undecided,
            Some(Ordering::Less) => return Check::Fails,
            _ => {}
        }
    }
    out
}
