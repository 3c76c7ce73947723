//! Sign-condition thresholds for `P_n = f x^n + g` at a point `c` in `(0, 1)`.
//!
//! If `g(c) g(-c) > 0` and the tail `|f(±c)| c^n` drops below `|g(±c)|`, then
//! `P_n(c) P_n(-c) > 0`, so `P_n` has an even number of roots in `(-c, c)`.
//! A Pisot polynomial with conjugates inside `(-c, c)` on the real line has
//! the sign of a single root there, which the condition excludes.

use std::cell::RefCell;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::dyadic::{Dyadic, Interval, Round};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::pisot::{classify_pisot, compare_conjugate_moduli, Classification};
use crate::real_algebraic::RealAlgebraic;

use super::{chi_poly, family_parts, psi_poly, FamilyId, FamilyKind};

/// Bound on `|f(±c)|`: either the polynomial itself or a height `h`, which
/// gives `|f(±c)| <= h / (1 - c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TailBound {
    Poly(IntPoly),
    Height(u64),
}

#[derive(Clone, Debug, Serialize)]
pub struct N0Certificate {
    pub tail: TailBound,
    pub g: IntPoly,
    /// Minimal polynomial of the threshold.
    pub c_poly: IntPoly,
    pub c: f64,
    /// Least `n` from which the tail inequality holds at both `c` and `-c`;
    /// it then holds for every larger `n`.
    pub n0: u64,
    /// Least `n` such that the sign condition holds for every exponent from
    /// `n` on, found by exact evaluation below `n0`. Only for a concrete `f`.
    pub n0_empirical: Option<u64>,
    /// Exponents `n0 ..= n0 + checked_range` re-checked exactly.
    pub checked_range: u64,
    /// Outcome of that re-check; `None` when only a height is known.
    pub verified: Option<bool>,
}

pub const CHECKED_RANGE: u64 = 200;
const MAX_N0: u64 = 1 << 20;

/// Exact sign evaluation at an algebraic point, reducing modulo its minimal
/// polynomial when that is monic.
struct At {
    c: RealAlgebraic,
    monic: Option<IntPoly>,
    /// Enclosure of `c` and its precision, refined on demand.
    cache: RefCell<(u32, Interval)>,
}

impl At {
    fn new(c: &RealAlgebraic) -> At {
        let monic = (!c.is_rational() && c.poly().is_monic()).then(|| c.poly().clone());
        let cache = RefCell::new((0, Interval::point(Dyadic::zero())));
        At {
            c: c.clone(),
            monic,
            cache,
        }
    }

    fn enclosure(&self, bits: u32) -> Interval {
        let mut cache = self.cache.borrow_mut();
        if cache.0 < bits {
            let bits = bits.max(2 * cache.0).max(128);
            let (lo, hi) = self.c.enclosure(bits);
            let prec = bits as u64 + 16;
            let iv = Interval::new(
                Dyadic::from_rational(&lo, prec, Round::Down),
                Dyadic::from_rational(&hi, prec, Round::Up),
            );
            *cache = (bits, iv);
        }
        cache.1.clone()
    }

    fn reduce(&self, h: &IntPoly) -> IntPoly {
        match &self.monic {
            Some(m) => h.rem_monic(m),
            None => h.clone(),
        }
    }

    /// Interval evaluation with growing precision, falling back to the
    /// exact Sturm test when `h(c)` may vanish.
    fn sign(&self, h: &IntPoly) -> i32 {
        let h = self.reduce(h);
        if h.deg() == 0 || self.c.is_rational() {
            return self.c.sign_of(&h);
        }
        let size = h.coeffs().iter().map(|c| c.bits()).max().unwrap_or(0) as u32;
        let mut bits = size + 64;
        while bits <= size + 2048 {
            let iv = self.enclosure(bits);
            let v = Interval::eval_poly(h.coeffs(), &iv, bits as u64 + 16);
            if v.is_positive() {
                return 1;
            }
            if v.is_negative() {
                return -1;
            }
            bits *= 2;
        }
        self.c.sign_of(&h)
    }
}

/// Iterates `P_n(c)` and `P_n(-c)` signs for consecutive `n`.
struct SignWalk<'a> {
    at: &'a At,
    f_pos: IntPoly,
    f_neg: IntPoly,
    g_pos: IntPoly,
    g_neg: IntPoly,
    x_n: IntPoly,
    n: u64,
}

impl<'a> SignWalk<'a> {
    fn new(at: &'a At, f: &IntPoly, g: &IntPoly, n: u64) -> Self {
        let x_n = at.reduce(&IntPoly::monomial(BigInt::one(), n as usize));
        SignWalk {
            at,
            f_pos: at.reduce(f),
            f_neg: at.reduce(&f.negate_x()),
            g_pos: at.reduce(g),
            g_neg: at.reduce(&g.negate_x()),
            x_n,
            n,
        }
    }

    /// Whether `P_n(c) P_n(-c) > 0` at the current `n`, then advances.
    fn step(&mut self) -> bool {
        let fx = self.at.reduce(&(&self.f_pos * &self.x_n));
        let fx_neg = self.at.reduce(&(&self.f_neg * &self.x_n));
        let neg = if self.n % 2 == 1 { -fx_neg } else { fx_neg };
        let ok = self.at.sign(&(&fx + &self.g_pos)) * self.at.sign(&(&neg + &self.g_neg)) > 0;
        self.x_n = self.at.reduce(&self.x_n.shift(1));
        self.n += 1;
        ok
    }
}

/// Whether `P_n(c) P_n(-c) > 0` for every `n` in `from ..= from + count`.
pub fn sign_condition_holds(
    f: &IntPoly,
    g: &IntPoly,
    c: &RealAlgebraic,
    from: u64,
    count: u64,
) -> bool {
    walk_holds(&At::new(c), f, g, from, count)
}

fn walk_holds(at: &At, f: &IntPoly, g: &IntPoly, from: u64, count: u64) -> bool {
    let mut walk = SignWalk::new(at, f, g, from);
    (0..=count).all(|_| walk.step())
}

fn tail_holds(at: &At, tail: &TailBound, g: &IntPoly, n: u64) -> bool {
    let xn = IntPoly::monomial(BigInt::one(), n as usize);
    [false, true].iter().all(|&neg| {
        let gt = if neg { g.negate_x() } else { g.clone() };
        let sg = at.sign(&gt);
        let lhs = match tail {
            TailBound::Poly(f) => {
                let ft = if neg { f.negate_x() } else { f.clone() };
                match at.sign(&ft) {
                    0 => return true,
                    sf => &gt.scale(&BigInt::from(sg)) - &(&ft * &xn).scale(&BigInt::from(sf)),
                }
            }
            // |g(t)| (1 - c) - h c^n
            TailBound::Height(h) => {
                &(&gt * &IntPoly::from_i64(&[1, -1])).scale(&BigInt::from(sg))
                    - &xn.scale(&BigInt::from(*h))
            }
        };
        at.sign(&lhs) > 0
    })
}

/// Least `n0` for which the tail bound certifies `P_n(c) P_n(-c) > 0` for
/// all `n >= n0`, plus the exact minimal threshold when `f` is concrete.
pub fn compute_n0(tail: &TailBound, g: &IntPoly, c: &RealAlgebraic) -> Result<N0Certificate> {
    check_threshold(c)?;
    compute_n0_at(&At::new(c), tail, g)
}

fn check_threshold(c: &RealAlgebraic) -> Result<()> {
    if !c.is_positive() || c.cmp_rational(&BigRational::one()).is_ge() {
        return Err(Error::InvalidArgument(
            "threshold must lie in (0, 1)".into(),
        ));
    }
    Ok(())
}

fn compute_n0_at(at: &At, tail: &TailBound, g: &IntPoly) -> Result<N0Certificate> {
    let (at, c) = (at, &at.c);
    if at.sign(g) * at.sign(&g.negate_x()) <= 0 {
        return Err(Error::HypothesisFailed(format!(
            "g(c) g(-c) <= 0 for g = {g}"
        )));
    }
    if let TailBound::Poly(f) = tail {
        if f.is_zero() {
            return Err(Error::InvalidArgument("f must be nonzero".into()));
        }
    }
    // the inequality is monotone in n: gallop, then bisect
    let mut hi = 1u64;
    let mut lo = 0u64;
    if tail_holds(at, tail, g, 0) {
        hi = 0;
    } else {
        while !tail_holds(at, tail, g, hi) {
            lo = hi;
            hi *= 2;
            if hi > MAX_N0 {
                return Err(Error::InvalidArgument("tail bound never certifies".into()));
            }
        }
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if tail_holds(at, tail, g, mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
    let n0 = hi;
    let (n0_empirical, verified) = match tail {
        TailBound::Poly(f) => {
            let mut m = n0;
            while m > 0 && walk_holds(at, f, g, m - 1, 0) {
                m -= 1;
            }
            (Some(m), Some(walk_holds(at, f, g, n0, CHECKED_RANGE)))
        }
        TailBound::Height(_) => (None, None),
    };
    Ok(N0Certificate {
        tail: tail.clone(),
        g: g.clone(),
        c_poly: c.poly().clone(),
        c: c.to_f64(),
        n0,
        n0_empirical,
        checked_range: CHECKED_RANGE,
        verified,
    })
}

/// One parameter value of a table row.
#[derive(Clone, Debug, Serialize)]
pub struct Table2Check {
    /// The fixed parameter, or `None` for rows with no parameter.
    pub fixed: Option<u32>,
    pub sign: i8,
    /// First exponent the row needs covered.
    pub start: u64,
    pub n0: u64,
    /// Least exponent from which the sign condition is verified, using the
    /// concrete `f`: exact checks below `n0` and the concrete tail above.
    pub n0_direct: u64,
    /// Sign condition re-checked on `n0_direct ..= n0 + 200` with the concrete `f`.
    pub verified: bool,
    /// Exponents in `start .. n0_direct` settled by classifying the member
    /// directly: it has no Pisot root, or every conjugate has modulus at
    /// least `c`.
    pub closed_directly: Vec<u64>,
    pub covered_by_tail: bool,
    pub covered: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table2Row {
    pub family: &'static str,
    pub restriction: &'static str,
    pub method: String,
    /// Which parameter is held fixed, for rows that admit two readings.
    pub reading: &'static str,
    pub checks: Vec<Table2Check>,
    /// Every check in the window is covered.
    pub implied: bool,
}

fn xm1() -> IntPoly {
    IntPoly::from_i64(&[-1, 1])
}

fn xm2() -> IntPoly {
    IntPoly::from_i64(&[-2, 1])
}

fn x_pow(k: usize) -> IntPoly {
    IntPoly::monomial(BigInt::one(), k)
}

fn check(
    at: &At,
    fixed: Option<u32>,
    sign: i8,
    f: &IntPoly,
    g: &IntPoly,
    height: Option<u64>,
    start: u64,
) -> Result<Table2Check> {
    let g = if sign < 0 { -g.clone() } else { g.clone() };
    let concrete = compute_n0_at(at, &TailBound::Poly(f.clone()), &g)?;
    let n0 = match height {
        Some(h) => compute_n0_at(at, &TailBound::Height(h), &g)?.n0,
        None => concrete.n0,
    };
    let n0_direct = concrete.n0_empirical.expect("concrete f");
    let verified = walk_holds(
        at,
        f,
        &g,
        n0_direct,
        concrete.n0 - n0_direct + CHECKED_RANGE,
    );
    let mut closed_directly = Vec::new();
    for e in start..n0_direct.min(n0) {
        if !settles_directly(&IntPoly::compose_shift(f, e as usize, &g, 1), &at.c)? {
            break;
        }
        closed_directly.push(e);
    }
    let reach = start + closed_directly.len() as u64;
    Ok(Table2Check {
        fixed,
        sign,
        start,
        n0,
        n0_direct,
        verified,
        covered_by_tail: n0 <= start,
        covered: verified && n0_direct.min(n0) <= reach,
        closed_directly,
    })
}

/// Whether `p` has no Pisot root or has every conjugate of modulus `>= c`.
fn settles_directly(p: &IntPoly, c: &RealAlgebraic) -> Result<bool> {
    Ok(match classify_pisot(p, 64)? {
        Classification::Pisot(rec) => compare_conjugate_moduli(&rec, c)
            .iter()
            .all(|(_, o)| o.is_some_and(|o| o.is_ge())),
        Classification::NotPisot(_) => true,
        Classification::Undecided => false,
    })
}

fn row(
    family: &'static str,
    restriction: &'static str,
    method: String,
    reading: &'static str,
    checks: Vec<Table2Check>,
) -> Table2Row {
    let implied = checks.iter().all(|c| c.covered);
    Table2Row {
        family,
        restriction,
        method,
        reading,
        checks,
        implied,
    }
}

/// Re-derives each row of the regular-family proof table at threshold `c`.
/// Rows whose `g` depends on a parameter are checked for every parameter
/// value up to `window`.
pub fn table2_rows(c: &RealAlgebraic, window: u32) -> Result<Vec<Table2Row>> {
    check_threshold(c)?;
    let at = At::new(c);
    let c = &at;
    let mut rows = Vec::new();
    let signs = [1i8, -1];
    let fam = |kind, r, n, s| FamilyId {
        kind,
        r,
        n,
        sign: s,
    };

    // Phi_r = x^r (x - 2) + (x - 1), exponent r
    rows.push(row(
        "Phi_r",
        "r >= 3",
        "f = x - 2, g = x - 1".into(),
        "",
        vec![check(c, None, 1, &xm2(), &xm1(), None, 3)?],
    ));
    // (x - 1) Psi_r = x^(r+1) (x - 2) + 1, exponent r + 1; the extra root at
    // 1 lies outside (-c, c) and leaves the sign condition unchanged
    rows.push(row(
        "Psi_r",
        "r >= 1",
        "times (x - 1): f = x - 2, g = 1".into(),
        "",
        vec![check(c, None, 1, &xm2(), &IntPoly::one(), None, 2)?],
    ));

    let by_height =
        |kind: FamilyKind, from: u32, h: u64, offset: u64| -> Result<Vec<Table2Check>> {
            let mut out = Vec::new();
            for r in from..=window {
                for s in signs {
                    let (f, g) = family_parts(&fam(kind, r, 0, 1));
                    out.push(check(c, Some(r), s, &f, &g, Some(h), r as u64 + offset)?);
                }
            }
            Ok(out)
        };
    rows.push(row(
        "PhiA",
        "n >= r+1, r >= 4",
        "height 2".into(),
        "r fixed",
        by_height(FamilyKind::PhiA, 4, 2, 1)?,
    ));
    rows.push(row(
        "PhiB",
        "n >= r+1, r >= 4",
        "height 2".into(),
        "r fixed",
        by_height(FamilyKind::PhiB, 4, 2, 1)?,
    ));

    // PhiB+ with n <= r: either n is fixed and r grows, so that
    // P = x^r (x^n (x - 2) + 1) + (x - 1)(x^n - 1), or r is fixed and n runs
    // from 4 up to r
    let mut swap = Vec::new();
    for n in 4..=window {
        let f = &(&x_pow(n as usize) * &xm2()) + &IntPoly::one();
        let g = &xm1() * &(&x_pow(n as usize) - &IntPoly::one());
        swap.push(check(c, Some(n), 1, &f, &g, Some(2), n as u64)?);
    }
    rows.push(row(
        "PhiB+",
        "n <= r, n >= 4",
        "height 2".into(),
        "n fixed, exponent r",
        swap,
    ));
    let mut small = Vec::new();
    for r in 4..=window {
        let (f, g) = family_parts(&fam(FamilyKind::PhiB, r, 0, 1));
        small.push(check(c, Some(r), 1, &f, &g, Some(2), 4)?);
    }
    rows.push(row(
        "PhiB+",
        "n <= r, n >= 4",
        "height 2".into(),
        "r fixed, exponent n",
        small,
    ));

    rows.push(row(
        "PhiC",
        "n >= r+1, r >= 6",
        "height 2".into(),
        "r fixed",
        by_height(FamilyKind::PhiC, 6, 2, 1)?,
    ));
    rows.push(row(
        "PsiA",
        "n >= r+2, r >= 2",
        "height 1".into(),
        "r fixed",
        by_height(FamilyKind::PsiA, 2, 1, 2)?,
    ));

    // PsiA+ with n <= r+1: times (x - 1),
    // P = x^(r+1) (x^n (x - 2) + x - 1) + (x^n - x + 1), or r fixed
    let mut swap = Vec::new();
    for n in 2..=window {
        let f = &(&x_pow(n as usize) * &xm2()) + &xm1();
        let g = &(&x_pow(n as usize) - &IntPoly::x()) + &IntPoly::one();
        swap.push(check(
            c,
            Some(n),
            1,
            &f,
            &g,
            Some(f.height().try_into().unwrap_or(u64::MAX)),
            n as u64,
        )?);
    }
    rows.push(row(
        "PsiA+",
        "n <= r+1, n >= 2",
        "height of f".into(),
        "n fixed, exponent r+1",
        swap,
    ));
    let mut small = Vec::new();
    for r in 1..=window {
        let (f, g) = family_parts(&fam(FamilyKind::PsiA, r, 0, 1));
        small.push(check(c, Some(r), 1, &f, &g, Some(1), 2)?);
    }
    rows.push(row(
        "PsiA+",
        "n <= r+1, n >= 2",
        "height 1".into(),
        "r fixed, exponent n",
        small,
    ));

    // PsiB: times (x - 1), f = (x - 1) Psi_r, g = ±(x^r - 1)
    let mut psib = Vec::new();
    for r in 4..=window {
        let f = &psi_poly(r) * &xm1();
        let g = &x_pow(r as usize) - &IntPoly::one();
        for s in signs {
            psib.push(check(c, Some(r), s, &f, &g, None, r as u64)?);
        }
    }
    rows.push(row(
        "PsiB",
        "n >= r, r >= 4",
        "times (x - 1), concrete f".into(),
        "r fixed",
        psib,
    ));

    let mut chi = |name, restriction, g: IntPoly, start| -> Result<()> {
        let checks = signs
            .iter()
            .map(|&s| check(c, None, s, &chi_poly(), &g, None, start))
            .collect::<Result<_>>()?;
        rows.push(row(name, restriction, "concrete f".into(), "", checks));
        Ok(())
    };
    chi("ChiA", "n >= 2", IntPoly::from_i64(&[-1, -1, 1, 1]), 2)?;
    chi("ChiB", "n >= 1", IntPoly::from_i64(&[1, 0, -1, 0, 1]), 1)?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pisot::parry_threshold;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn threshold_for_phi_limit_family() {
        let c1 = parry_threshold(1);
        // the true decomposition x^r (x - 2) + (x - 1)
        let cert = compute_n0(&TailBound::Poly(p(&[-2, 1])), &p(&[-1, 1]), &c1).unwrap();
        assert_eq!(cert.n0, 3);
        assert_eq!(cert.verified, Some(true));
        // f = g = x - 1 factors as (x - 1)(x^n + 1) and never changes sign
        let cert = compute_n0(&TailBound::Poly(p(&[-1, 1])), &p(&[-1, 1]), &c1).unwrap();
        assert_eq!((cert.n0, cert.n0_empirical), (1, Some(0)));
    }

    #[test]
    fn height_bound_matches_closed_form() {
        let c1 = parry_threshold(1);
        let cert = compute_n0(&TailBound::Height(2), &p(&[-1, 1]), &c1).unwrap();
        // 2 c^n / (1 - c) < |g(±c)| = min(1 - c, 1 + c) = c^2
        let c = c1.to_f64();
        let want = (0..)
            .find(|&n| 2.0 * c.powi(n) / (1.0 - c) < (1.0 - c))
            .unwrap() as u64;
        assert_eq!(cert.n0, want);
        assert_eq!(cert.verified, None);
    }

    #[test]
    fn hypothesis_is_enforced() {
        let c1 = parry_threshold(1);
        // g = x changes sign between -c and c
        let e = compute_n0(&TailBound::Height(1), &p(&[0, 1]), &c1).unwrap_err();
        assert!(matches!(e, Error::HypothesisFailed(_)));
        let e = compute_n0(
            &TailBound::Height(1),
            &p(&[1]),
            &RealAlgebraic::from_integer(2),
        )
        .unwrap_err();
        assert!(matches!(e, Error::InvalidArgument(_)));
    }

    #[test]
    fn rational_threshold_works() {
        let half = RealAlgebraic::from_rational(BigRational::new(1.into(), 2.into()));
        let cert = compute_n0(&TailBound::Poly(p(&[-2, 1])), &p(&[-1, 1]), &half).unwrap();
        // |c - 2| c^n < |c - 1| at c = 1/2 needs 3/2^(n+1) < 1/2
        assert_eq!(cert.n0, 2);
        assert_eq!(cert.verified, Some(true));
        assert!(cert.n0_empirical.unwrap() <= 2);
    }

    #[test]
    fn proof_table_rows() {
        let rows = table2_rows(&parry_threshold(1), 10).unwrap();
        assert_eq!(rows.len(), 13);
        for r in &rows {
            assert!(
                r.checks.iter().all(|c| c.verified),
                "{} {}",
                r.family,
                r.reading
            );
        }
        let by = |name: &str| rows.iter().find(|r| r.family == name).unwrap();
        for r in &rows {
            assert!(r.implied, "{} {}", r.family, r.reading);
        }
        // the golden polynomial itself sits exactly on the threshold
        let psi = &by("Psi_r").checks[0];
        assert_eq!((psi.n0_direct, psi.closed_directly.clone()), (3, vec![2]));
        let chi = &by("ChiA").checks[0];
        assert_eq!((chi.n0_direct, chi.closed_directly.clone()), (3, vec![2]));
    }
}
