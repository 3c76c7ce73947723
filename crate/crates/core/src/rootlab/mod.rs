//! Certified complex roots and the statistics built on them: minimal root
//! modulus, Mahler measure, root counts in disks and real-root isolation.

mod aberth;
mod certify;
pub mod cx;
pub mod unit_circle;

use std::cmp::Ordering;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub use cx::Cx;
pub use unit_circle::{recentre, unit_circle_root_count};

use crate::dyadic::{Dyadic, Round};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::real_algebraic::RealAlgebraic;
use crate::sturm::Sturm;

/// Default ceiling for precision escalation, in bits.
pub const DEFAULT_PRECISION_CAP: u32 = 4096;
/// Environment variable that overrides [`DEFAULT_PRECISION_CAP`].
pub const PRECISION_CAP_ENV: &str = "PISOT_PRECISION_CAP";
/// Starting precision for decisions that escalate on demand.
pub const DECISION_START_BITS: u32 = 53;

/// The precision cap in effect: the environment override when it parses to
/// a value of at least 64, otherwise the default.
pub fn precision_cap() -> u32 {
    std::env::var(PRECISION_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u32>().ok())
        .filter(|&v| v >= 64)
        .unwrap_or(DEFAULT_PRECISION_CAP)
}

/// One certified root: the disk `|z - center| <= radius` contains exactly
/// one root of the source polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDisk {
    pub center: Cx,
    pub radius: Dyadic,
    /// The root is known to be real; the center then lies on the axis.
    pub real: bool,
}

impl RootDisk {
    pub fn center_c64(&self) -> Complex64 {
        self.center.to_c64()
    }

    pub fn re(&self) -> f64 {
        self.center.re.to_f64()
    }

    pub fn im(&self) -> f64 {
        self.center.im.to_f64()
    }

    /// Radius as an `f64` that is never smaller than the true radius.
    pub fn radius_f64(&self) -> f64 {
        f64_up(&self.radius)
    }

    /// Enclosure `[lo, hi]` of the root's modulus.
    pub fn modulus(&self, bits: u64) -> (Dyadic, Dyadic) {
        let bits = bits.max(64);
        let lo = (&self.center.abs_lower(bits) - &self.radius).round(bits, Round::Down);
        let lo = if lo.is_negative() { Dyadic::zero() } else { lo };
        let hi = (&self.center.abs_upper(bits) + &self.radius).round(bits, Round::Up);
        (lo, hi)
    }

    /// Where the root lies relative to the circle `|z| = t` when `t` is
    /// known to lie in `[t_lo, t_hi]`: `Less` inside, `Greater` outside,
    /// `None` if undecided.
    pub fn cmp_modulus(&self, t_lo: &Dyadic, t_hi: &Dyadic, bits: u64) -> Option<Ordering> {
        let (lo, hi) = self.modulus(bits);
        if &hi < t_lo {
            Some(Ordering::Less)
        } else if &lo > t_hi {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// Position relative to the circle `|z - c| = rad` for a rational centre
    /// and radius; `None` if undecided at `bits`.
    pub fn cmp_circle(
        &self,
        c_re: &BigRational,
        c_im: &BigRational,
        rad: &BigRational,
        bits: u64,
    ) -> Option<Ordering> {
        let bits = bits.max(64);
        let iv = |x: &BigRational| {
            (
                Dyadic::from_rational(x, bits, Round::Down),
                Dyadic::from_rational(x, bits, Round::Up),
            )
        };
        let (rel, reh) = iv(c_re);
        let (iml, imh) = iv(c_im);
        let (rl, rh) = iv(rad);
        // |dx| bounds for dx = center - c with c in [cl, ch].
        let abs_bounds = |z: &Dyadic, cl: &Dyadic, ch: &Dyadic| {
            let a = z - ch;
            let b = z - cl;
            if a.signum() <= 0 && b.signum() >= 0 {
                (Dyadic::zero(), Dyadic::max(&a.abs(), &b.abs()))
            } else {
                let (x, y) = (a.abs(), b.abs());
                (Dyadic::min(&x, &y), Dyadic::max(&x, &y))
            }
        };
        let (xl, xh) = abs_bounds(&self.center.re, &rel, &reh);
        let (yl, yh) = abs_bounds(&self.center.im, &iml, &imh);
        let dlo = (&(&xl * &xl) + &(&yl * &yl))
            .round(bits, Round::Down)
            .sqrt(bits, Round::Down);
        let dhi = (&(&xh * &xh) + &(&yh * &yh))
            .round(bits, Round::Up)
            .sqrt(bits, Round::Up);
        if &dhi + &self.radius < rl {
            Some(Ordering::Less)
        } else if &dlo - &self.radius > rh {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}

fn f64_up(x: &Dyadic) -> f64 {
    let mut f = x.to_f64();
    if f.is_finite() && Dyadic::from_f64(f) < *x {
        f = f.next_up();
    }
    if f == 0.0 && x.signum() > 0 {
        f = f64::from_bits(1);
    }
    f
}

fn f64_down(x: &Dyadic) -> f64 {
    let mut f = x.to_f64();
    if f.is_finite() && Dyadic::from_f64(f) > *x {
        f = f.next_down();
    }
    f
}

/// Certified inclusion disks for every root of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct RootSet {
    /// The squarefree polynomial whose roots these are.
    pub source: IntPoly,
    /// Working precision of the centers, in bits.
    pub precision: u32,
    /// One disk per root, sorted by real then imaginary part of the center.
    pub roots: Vec<RootDisk>,
}

impl RootSet {
    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// Recomputes the disks at a higher precision, starting from the current
    /// centers.
    pub fn refined(&self, prec: u32) -> Result<RootSet> {
        let start: Vec<Cx> = self.roots.iter().map(|r| r.center.clone()).collect();
        certify_from(&self.source, start, prec, precision_cap().max(prec))
    }

    /// Real roots paired with their index in `roots`, as exact algebraic
    /// numbers, in increasing order.
    pub fn real_algebraic(&self) -> Vec<(usize, RealAlgebraic)> {
        let mut idx: Vec<usize> = (0..self.roots.len())
            .filter(|&i| self.roots[i].real)
            .collect();
        idx.sort_by(|&a, &b| self.roots[a].center.re.cmp(&self.roots[b].center.re));
        let exact = RealAlgebraic::real_roots(&self.source);
        debug_assert_eq!(exact.len(), idx.len());
        idx.into_iter().zip(exact).collect()
    }
}

impl Serialize for RootSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            re: f64,
            im: f64,
            radius: f64,
        }
        let entries: Vec<Entry> = self
            .roots
            .iter()
            .map(|r| Entry {
                re: r.re(),
                im: r.im(),
                radius: r.radius_f64(),
            })
            .collect();
        let mut st = s.serialize_struct("RootSet", 3)?;
        st.serialize_field("source", &self.source)?;
        st.serialize_field("precision", &self.precision)?;
        st.serialize_field("roots", &entries)?;
        st.end()
    }
}

/// A certified enclosure `[value - error, value + error]`.
#[derive(Clone, Debug)]
pub struct ModulusBound {
    pub value: f64,
    pub error: f64,
    /// The enclosure is rigorous and, where a threshold is involved, decides
    /// the comparison.
    pub certified: bool,
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl ModulusBound {
    pub fn from_bounds(lo: Dyadic, hi: Dyadic, certified: bool) -> Self {
        let l = f64_down(&lo);
        let h = f64_up(&hi);
        let value = 0.5 * (l + h);
        let error = (h - value).max(value - l).max(0.0);
        // widen by one ulp so the f64 view still contains [lo, hi]
        let error = if error > 0.0 { error.next_up() } else { error };
        ModulusBound {
            value,
            error,
            certified,
            lo,
            hi,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        (x - self.value).abs() <= self.error
    }
}

impl Serialize for ModulusBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ModulusBound", 3)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("error", &self.error)?;
        st.serialize_field("certified", &self.certified)?;
        st.end()
    }
}

fn check_squarefree(p: &IntPoly) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.deg() > 0 && p.gcd(&p.derivative()).deg() > 0 {
        return Err(Error::InvalidArgument(format!("{p} is not squarefree")));
    }
    Ok(())
}

fn certified_set(p: &IntPoly, z: &[Cx], real_count: usize, bits: u32) -> Option<RootSet> {
    let centers: Vec<Cx> = z.iter().map(|c| c.round(bits as u64)).collect();
    let mut roots = certify::certify(p.coeffs(), &centers, real_count)?;
    roots.sort_by(|a, b| {
        a.center
            .re
            .cmp(&b.center.re)
            .then_with(|| a.center.im.cmp(&b.center.im))
    });
    Some(RootSet {
        source: p.clone(),
        precision: bits,
        roots,
    })
}

fn certify_from(p: &IntPoly, mut z: Vec<Cx>, prec: u32, cap: u32) -> Result<RootSet> {
    let coeffs = p.coeffs();
    let dcoeffs: Vec<Dyadic> = coeffs.iter().map(Dyadic::from_bigint).collect();
    let real_count = Sturm::new(p).count_all();
    let mut bits = prec.max(53);
    if bits == 53 {
        // Double-precision centers are often good enough to certify as is.
        if let Some(set) = certified_set(p, &z, real_count, bits) {
            return Ok(set);
        }
    }
    loop {
        aberth::refine_mp(&dcoeffs, &mut z, bits as u64);
        if let Some(set) = certified_set(p, &z, real_count, bits) {
            return Ok(set);
        }
        if bits >= cap {
            return Err(Error::PrecisionExhausted(cap));
        }
        bits = (bits * 2).min(cap);
    }
}

/// Certified inclusion disks for all roots of a squarefree `p`, with centers
/// carried to `prec` bits; precision doubles on certification failure up to
/// the configured cap.
pub fn all_roots(p: &IntPoly, prec: u32) -> Result<RootSet> {
    check_squarefree(p)?;
    if p.deg() == 0 {
        return Ok(RootSet {
            source: p.clone(),
            precision: prec,
            roots: Vec::new(),
        });
    }
    let start: Vec<Cx> = aberth::aberth_f64(&p.to_f64_vec())
        .into_iter()
        .map(|z| {
            let z = if z.re.is_finite() && z.im.is_finite() {
                z
            } else {
                Complex64::new(0.5, 0.5)
            };
            Cx::from_c64(z)
        })
        .collect();
    certify_from(p, start, prec, precision_cap().max(prec))
}

/// Runs `decide` on root sets of increasing precision, from
/// [`DECISION_START_BITS`] up to `max(prec, cap)`, until it returns `Some`.
pub fn escalate<T>(
    p: &IntPoly,
    prec: u32,
    mut decide: impl FnMut(&RootSet) -> Option<T>,
) -> Result<T> {
    let cap = precision_cap().max(prec);
    let mut set = all_roots(p, DECISION_START_BITS.min(cap))?;
    loop {
        if let Some(t) = decide(&set) {
            return Ok(t);
        }
        if set.precision >= cap {
            return Err(Error::PrecisionExhausted(cap));
        }
        let next = (set.precision * 2).min(cap);
        set = set.refined(next)?;
    }
}

fn sqfree_nonzero(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.squarefree_part())
}

/// Certified enclosure of the smallest root modulus.
pub fn min_modulus(p: &IntPoly, prec: u32) -> Result<ModulusBound> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let sq = sqfree_nonzero(p)?;
    if sq.deg() == 0 {
        return Err(Error::InvalidArgument(
            "constant polynomial has no roots".into(),
        ));
    }
    let set = all_roots(&sq, prec)?;
    let bits = set.precision as u64;
    let mut lo: Option<Dyadic> = None;
    let mut hi: Option<Dyadic> = None;
    for r in &set.roots {
        let (l, h) = r.modulus(bits);
        lo = Some(lo.map_or(l.clone(), |x| Dyadic::min(&x, &l)));
        hi = Some(hi.map_or(h.clone(), |x| Dyadic::min(&x, &h)));
    }
    Ok(ModulusBound::from_bounds(lo.unwrap(), hi.unwrap(), true))
}

/// Certified enclosure of the largest root modulus.
pub fn max_modulus(p: &IntPoly, prec: u32) -> Result<ModulusBound> {
    let sq = sqfree_nonzero(p)?;
    if sq.deg() == 0 {
        return Err(Error::InvalidArgument(
            "constant polynomial has no roots".into(),
        ));
    }
    let set = all_roots(&sq, prec)?;
    let bits = set.precision as u64;
    let mut lo = Dyadic::zero();
    let mut hi = Dyadic::zero();
    for r in &set.roots {
        let (l, h) = r.modulus(bits);
        lo = Dyadic::max(&lo, &l);
        hi = Dyadic::max(&hi, &h);
    }
    Ok(ModulusBound::from_bounds(lo, hi, true))
}

/// Certified enclosure of `|lead| * prod max(1, |root|)` over all roots with
/// multiplicity. `certified` is false when some root could not be separated
/// from the unit circle at the precision cap.
pub fn mahler_measure(p: &IntPoly, prec: u32) -> Result<ModulusBound> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lead = Dyadic::from_bigint(&p.lead().abs());
    let mut lo = lead.clone();
    let mut hi = lead;
    let mut certified = true;
    for (factor, mult) in p.squarefree_decomposition() {
        let on_circle = unit_circle_root_count(&factor);
        let one = Dyadic::one();
        // Escalate until every root off the circle is separated from it.
        let decided = escalate(&factor, prec, |set| {
            let bits = set.precision as u64;
            let straddling = set
                .roots
                .iter()
                .filter(|r| r.cmp_modulus(&one, &one, bits).is_none())
                .count();
            (straddling == on_circle).then(|| set.clone())
        });
        let set = match decided {
            Ok(s) => s,
            Err(Error::PrecisionExhausted(_)) => {
                certified = false;
                all_roots(&factor, precision_cap())?
            }
            Err(e) => return Err(e),
        };
        let bits = set.precision.max(prec) as u64;
        for r in &set.roots {
            let (l, h) = r.modulus(bits);
            let l = Dyadic::max(&l, &one);
            let h = Dyadic::max(&h, &one);
            for _ in 0..mult {
                lo = lo.mul_r(&l, Round::Down);
                hi = hi.mul_r(&h, Round::Up);
            }
        }
    }
    Ok(ModulusBound::from_bounds(lo, hi, certified))
}

/// Number of roots (with multiplicity) strictly inside the disk
/// `|z - center| < radius`.
pub fn count_roots_in_disk(
    p: &IntPoly,
    center_re: &BigRational,
    center_im: &BigRational,
    radius: &BigRational,
    prec: u32,
) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !radius.is_positive() {
        return Err(Error::InvalidArgument("radius must be positive".into()));
    }
    if center_im.is_zero() && unit_circle_root_count(&recentre(p, center_re, radius)) > 0 {
        return Err(Error::BoundaryRoot);
    }
    let mut total = 0;
    for (factor, mult) in p.squarefree_decomposition() {
        let inside = escalate(&factor, prec, |set| {
            let bits = set.precision as u64;
            let mut n = 0;
            for r in &set.roots {
                if r.cmp_circle(center_re, center_im, radius, bits)? == Ordering::Less { n += 1 }
            }
            Some(n)
        })?;
        total += inside * mult;
    }
    Ok(total)
}

/// All real roots of `p` in the open interval `(a, b)`, sorted.
pub fn real_roots_in_interval(
    p: &IntPoly,
    a: &BigRational,
    b: &BigRational,
) -> Result<Vec<RealAlgebraic>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Err(Error::InvalidArgument("empty interval".into()));
    }
    Ok(RealAlgebraic::roots_in(p, a, b))
}

/// Product of all root disks as a complex ball `(center, radius)` in `f64`.
#[doc(hidden)]
pub fn root_product_f64(set: &RootSet) -> (Complex64, f64) {
    let mut c = Complex64::new(1.0, 0.0);
    let mut r = 0.0f64;
    for d in &set.roots {
        let z = d.center_c64();
        let rad = d.radius_f64();
        // (c, r) * (z, rad) as a ball product
        let nr = c.norm() * rad + z.norm() * r + r * rad;
        c *= z;
        r = nr;
    }
    (c, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn bigint_f64(x: &num_bigint::BigInt) -> f64 {
        num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn dominant(q: &IntPoly) -> f64 {
        let set = all_roots(q, 128).unwrap();
        set.roots
            .iter()
            .map(|r| r.center_c64())
            .max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap())
            .unwrap()
            .re
    }

    #[test]
    fn all_roots_examples() {
        let set = all_roots(&p(&[-1, -1, 1]), 128).unwrap();
        assert_eq!(set.degree(), 2);
        assert!(set.roots.iter().all(|r| r.real));
        assert!((set.roots[0].re() + 0.6180339887).abs() < 1e-10);
        assert!((set.roots[1].re() - 1.6180339887).abs() < 1e-10);
        assert!(set.roots[1].radius_f64() < 1e-30);
        assert!((dominant(&p(&[1, 0, -2, -1, 1])) - 1.905166168).abs() < 1e-9);
        assert!((dominant(&p(&[-1, 1, 0, 0, -2, 1])) - 1.933184982).abs() < 1e-9);
    }

    #[test]
    fn radii_shrink_with_precision() {
        let q = p(&[-1, -1, 0, 1, 1, -1, 1]);
        let lo = all_roots(&q, 64).unwrap();
        let hi = all_roots(&q, 512).unwrap();
        for (a, b) in lo.roots.iter().zip(&hi.roots) {
            // the rational root 1 is hit exactly at both precisions
            assert!(b.radius < a.radius || a.radius.is_zero());
        }
        assert!(matches!(
            all_roots(&p(&[1, -2, 1]), 64),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn min_modulus_examples() {
        let m = min_modulus(&p(&[-1, -1, 1]), 128).unwrap();
        assert!(m.contains(0.6180339887498949));
        assert!((&m.hi - &m.lo).to_f64() < 1e-30);
        let m = min_modulus(&p(&[1, 0, -1, 1]), 128).unwrap();
        assert!((m.value - 0.754877).abs() < 1e-6);
        let m = min_modulus(&p(&[1, -1, 0, 0, 0, 1]), 128).unwrap();
        assert!((m.value - 0.84219023).abs() < 1e-8);
        assert!(matches!(
            min_modulus(&p(&[0, 1]), 64),
            Err(Error::ZeroConstantTerm)
        ));
    }

    #[test]
    fn mahler_examples() {
        let m = mahler_measure(&p(&[-1, -1, 1]), 128).unwrap();
        assert!(m.certified && m.contains(1.618033988749895));
        let m = mahler_measure(&p(&[-3, 2]), 128).unwrap();
        assert!(m.contains(3.0) && m.error < 1e-15);
        let m = mahler_measure(&p(&[1, 0, -2, -1, 1]), 128).unwrap();
        assert!((m.value - 1.905166168).abs() < 1e-9);
        // cyclotomic factors contribute exactly 1
        let m = mahler_measure(&(&p(&[1, 1, 1]) * &p(&[-1, -1, 1])), 128).unwrap();
        assert!(m.certified && m.contains(1.618033988749895));
        // Lehmer's polynomial
        let m = mahler_measure(&p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]), 128).unwrap();
        assert!(m.certified && (m.value - 1.176_280_818_259_917_6).abs() < 1e-12);
    }

    #[test]
    fn disk_counts() {
        let z = rat(0, 1);
        assert_eq!(
            count_roots_in_disk(&p(&[-1, -1, 1]), &z, &z, &rat(1, 1), 64).unwrap(),
            1
        );
        // (x^2 - x - 1) x^3 + 1 has no roots in |z| < 0.7
        let q = p(&[1, 0, 0, -1, -1, 1]);
        assert_eq!(count_roots_in_disk(&q, &z, &z, &rat(7, 10), 64).unwrap(), 0);
        assert_eq!(
            count_roots_in_disk(&p(&[1, -3, 1]), &z, &z, &rat(1, 1), 64).unwrap(),
            1
        );
        assert_eq!(
            count_roots_in_disk(&p(&[1, 1, 1]), &z, &z, &rat(1, 1), 64),
            Err(Error::BoundaryRoot)
        );
        // multiplicity counts
        assert_eq!(
            count_roots_in_disk(&p(&[1, -2, 1]), &z, &z, &rat(2, 1), 64).unwrap(),
            2
        );
        // complex center
        assert_eq!(
            count_roots_in_disk(&p(&[1, 0, 1]), &z, &rat(1, 1), &rat(1, 2), 64).unwrap(),
            1
        );
    }

    #[test]
    fn real_root_isolation() {
        let r = real_roots_in_interval(&p(&[-1, -1, 1]), &rat(1, 1), &rat(2, 1)).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0].to_f64() - 1.618033988749895).abs() < 1e-12);
        let r = real_roots_in_interval(&p(&[1, -4, 1]), &rat(0, 1), &rat(1, 1)).unwrap();
        assert!((r[0].to_f64() - 0.2679491924311228).abs() < 1e-12);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn sqfree_poly() -> impl Strategy<Value = IntPoly> {
            (prop::collection::vec(-9i64..=9, 2..8), 1i64..=9).prop_filter_map(
                "squarefree with p(0) != 0",
                |(mut c, lead)| {
                    c.push(lead);
                    if c[0] == 0 {
                        c[0] = 1;
                    }
                    let q = IntPoly::from_i64(&c);
                    (q.gcd(&q.derivative()).deg() == 0).then_some(q)
                },
            )
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn one_disk_per_root_and_vieta_product(q in sqfree_poly()) {
                let set = all_roots(&q, 96).unwrap();
                prop_assert_eq!(set.degree(), q.deg());
                let (prod, rad) = root_product_f64(&set);
                let sign = if q.deg() % 2 == 0 { 1.0 } else { -1.0 };
                let want = sign * bigint_f64(&q.constant_term()) / bigint_f64(&q.lead());
                prop_assert!((prod - Complex64::new(want, 0.0)).norm() <= rad + 1e-9 * want.abs().max(1.0));
            }

            #[test]
            fn big_disk_holds_everything(q in sqfree_poly()) {
                let z = rat(0, 1);
                let big = crate::sturm::cauchy_bound(&q) + rat(1, 1);
                prop_assert_eq!(count_roots_in_disk(&q, &z, &z, &big, 64).unwrap(), q.deg());
            }

            #[test]
            fn reciprocal_cauchy_lower_bound(q in sqfree_poly()) {
                let m = min_modulus(&q, 64).unwrap();
                let a0 = bigint_f64(&q.constant_term()).abs();
                let max = q.coeffs().iter().skip(1).map(|c| bigint_f64(c).abs()).fold(0.0, f64::max);
                prop_assert!(m.value + m.error >= 1.0 / (1.0 + max / a0) - 1e-12);
                let r = q.reciprocal().unwrap();
                let big = max_modulus(&r, 64).unwrap();
                prop_assert!((m.value * big.value - 1.0).abs() <= 1e-9);
            }

            #[test]
            fn mahler_is_multiplicative(a in sqfree_poly(), b in sqfree_poly()) {
                let ma = mahler_measure(&a, 64).unwrap();
                let mb = mahler_measure(&b, 64).unwrap();
                let mab = mahler_measure(&(&a * &b), 64).unwrap();
                let lo = (ma.value - ma.error) * (mb.value - mb.error);
                let hi = (ma.value + ma.error) * (mb.value + mb.error);
                prop_assert!(mab.value + mab.error >= lo * (1.0 - 1e-12));
                prop_assert!(mab.value - mab.error <= hi * (1.0 + 1e-12));
            }
        }
    }
}
