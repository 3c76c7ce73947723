//! Real algebraic numbers represented by an isolating interval.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::intpoly::IntPoly;
use crate::sturm::{cauchy_bound, Sturm};

/// A real root of a squarefree integer polynomial, isolated in `[lo, hi]`.
///
/// Either `lo == hi` and the root is that rational, or `lo < hi`, the
/// polynomial is nonzero at both endpoints and has exactly one root between
/// them.
#[derive(Clone, Debug)]
pub struct RealAlgebraic {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

impl RealAlgebraic {
    pub fn from_rational(x: BigRational) -> Self {
        let poly = IntPoly::new(vec![-x.numer().clone(), x.denom().clone()]).normalized();
        RealAlgebraic {
            poly,
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// Builds from an isolating interval without checking it. The polynomial
    /// must be squarefree with exactly one root in `[lo, hi]`.
    pub fn from_isolating(poly: IntPoly, lo: BigRational, hi: BigRational) -> Self {
        let mut r = RealAlgebraic { poly, lo, hi };
        r.fix_endpoints();
        r
    }

    /// The unique root of `poly` in the open interval `(lo, hi)`, if exactly
    /// one exists (counted on the squarefree part).
    pub fn unique_in(poly: &IntPoly, lo: &BigRational, hi: &BigRational) -> Option<Self> {
        let sq = poly.squarefree_part();
        let s = Sturm::new(&sq);
        if s.count_open(lo, hi) != 1 {
            return None;
        }
        let mut r = RealAlgebraic {
            poly: sq,
            lo: lo.clone(),
            hi: hi.clone(),
        };
        r.fix_endpoints();
        Some(r)
    }

    /// All real roots of `poly` in the open interval `(a, b)`, sorted.
    pub fn roots_in(poly: &IntPoly, a: &BigRational, b: &BigRational) -> Vec<Self> {
        let sq = poly.squarefree_part();
        if sq.deg() == 0 || a >= b {
            return Vec::new();
        }
        let s = Sturm::new(&sq);
        let mut out = Vec::new();
        isolate(&sq, &s, a.clone(), b.clone(), &mut out);
        out
    }

    /// All real roots of `poly`, sorted.
    pub fn real_roots(poly: &IntPoly) -> Vec<Self> {
        if poly.deg() == 0 {
            return Vec::new();
        }
        let b = cauchy_bound(poly);
        Self::roots_in(poly, &-b.clone(), &b)
    }

    /// Called after construction so the invariant holds with nonzero endpoint
    /// values: an endpoint root collapses the interval to that point, and a
    /// proper interval is shrunk until both ends are off the root.
    fn fix_endpoints(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let slo = self.poly.sign_at(&self.lo);
        let shi = self.poly.sign_at(&self.hi);
        if slo == 0 && shi == 0 {
            // both endpoints cannot be the single root; caller violated
            // the invariant unless the interval is degenerate.
            panic!("isolating interval has roots at both endpoints");
        }
        if slo == 0 {
            // Is the root strictly inside, or at lo? Count in the open interval.
            let s = Sturm::new(&self.poly);
            if s.count_open(&self.lo, &self.hi) == 0 {
                self.hi = self.lo.clone();
            } else {
                self.nudge_lo(&s);
            }
        } else if shi == 0 {
            let s = Sturm::new(&self.poly);
            if s.count_open(&self.lo, &self.hi) == 0 {
                self.lo = self.hi.clone();
            } else {
                self.nudge_hi(&s);
            }
        }
    }

    fn nudge_lo(&mut self, s: &Sturm) {
        let mut step = (&self.hi - &self.lo) * half();
        loop {
            let cand = &self.lo + &step;
            if self.poly.sign_at(&cand) != 0 && s.count_open(&cand, &self.hi) == 1 {
                self.lo = cand;
                return;
            }
            step *= half();
        }
    }

    fn nudge_hi(&mut self, s: &Sturm) {
        let mut step = (&self.hi - &self.lo) * half();
        loop {
            let cand = &self.hi - &step;
            if self.poly.sign_at(&cand) != 0 && s.count_open(&self.lo, &cand) == 1 {
                self.hi = cand;
                return;
            }
            step *= half();
        }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// One bisection step.
    pub fn bisect(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) * half();
        let sm = self.poly.sign_at(&mid);
        if sm == 0 {
            self.lo = mid.clone();
            self.hi = mid;
            return;
        }
        let slo = self.poly.sign_at(&self.lo);
        if sm == slo {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Refines until the interval is narrower than `2^-bits`.
    pub fn refine_bits(&mut self, bits: u32) {
        let eps = BigRational::new(BigInt::one(), BigInt::one() << bits as usize);
        self.refine_to(&eps);
    }

    pub fn refine_to(&mut self, eps: &BigRational) {
        while self.width() > *eps {
            self.bisect();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut c = self.clone();
        c.refine_bits(60);
        ((&c.lo + &c.hi) * half()).to_f64().unwrap_or(f64::NAN)
    }

    pub fn neg(&self) -> RealAlgebraic {
        RealAlgebraic {
            poly: self.poly.negate_x().normalized(),
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    /// Sign of `h(self)`, exactly.
    pub fn sign_of(&self, h: &IntPoly) -> i32 {
        if h.is_zero() {
            return 0;
        }
        if self.is_rational() {
            return h.sign_at(&self.lo);
        }
        if self.is_root_of(h) {
            return 0;
        }
        // h(self) != 0: shrink the interval until h has no root in it.
        let hs = h.squarefree_part();
        let sh = Sturm::new(&hs);
        let mut me = self.clone();
        loop {
            if sh.count_closed(&me.lo, &me.hi) == 0 {
                return h.sign_at(&me.lo);
            }
            me.bisect();
            if me.is_rational() {
                return h.sign_at(&me.lo);
            }
        }
    }

    /// Whether `h(self) = 0`.
    pub fn is_root_of(&self, h: &IntPoly) -> bool {
        if h.is_zero() {
            return true;
        }
        if self.is_rational() {
            return h.sign_at(&self.lo) == 0;
        }
        let g = self.poly.gcd(h);
        if g.deg() == 0 {
            return false;
        }
        // g divides poly, so [lo, hi] contains at most one root of g, and
        // g is nonzero at the endpoints.
        Sturm::new(&g).count_open(&self.lo, &self.hi) == 1
    }

    /// `floor(self)`.
    pub fn floor(&self) -> BigInt {
        let mut me = self.clone();
        loop {
            let fl = me.lo.floor().to_integer();
            let fh = me.hi.floor().to_integer();
            if fl == fh {
                return fl;
            }
            // An integer lies in the interval; test it exactly.
            let k = BigRational::from_integer(fh.clone());
            if k > me.lo && me.poly.sign_at(&k) == 0 {
                return fh;
            }
            me.bisect();
        }
    }

    /// Compares with a rational, exactly.
    pub fn cmp_rational(&self, x: &BigRational) -> Ordering {
        if self.is_rational() {
            return self.lo.cmp(x);
        }
        if x <= &self.lo {
            return Ordering::Greater;
        }
        if x >= &self.hi {
            return Ordering::Less;
        }
        // x strictly inside: the sign of poly at x decides on which side the
        // root sits.
        let sx = self.poly.sign_at(x);
        if sx == 0 {
            return Ordering::Equal;
        }
        let slo = self.poly.sign_at(&self.lo);
        // same sign as at lo: no root in (lo, x], so the root is above x
        if sx == slo {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact comparison of two real algebraic numbers.
    pub fn cmp_exact(&self, other: &RealAlgebraic) -> Ordering {
        if self.is_rational() {
            return other.cmp_rational(&self.lo).reverse();
        }
        if other.is_rational() {
            return self.cmp_rational(&other.lo);
        }
        let g = self.poly.gcd(&other.poly);
        let mut a = self.clone();
        let mut b = other.clone();
        let common = g.deg() > 0 && a.is_root_of(&g) && b.is_root_of(&g);
        let sg = common.then(|| Sturm::new(&g));
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if let Some(sg) = &sg {
                // Both are roots of g; equal iff g has a single root in the
                // union of the two intervals.
                let lo = std::cmp::min(&a.lo, &b.lo).clone();
                let hi = std::cmp::max(&a.hi, &b.hi).clone();
                if sg.count_closed(&lo, &hi) == 1 {
                    return Ordering::Equal;
                }
            }
            if a.width() >= b.width() {
                a.bisect();
            } else {
                b.bisect();
            }
            if a.is_rational() || b.is_rational() {
                return a.cmp_exact(&b);
            }
        }
    }

    /// Absolute value.
    pub fn abs(&self) -> RealAlgebraic {
        if self.cmp_rational(&BigRational::zero()) == Ordering::Less {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Rational enclosure refined to `bits` bits of absolute accuracy.
    pub fn enclosure(&self, bits: u32) -> (BigRational, BigRational) {
        let mut me = self.clone();
        me.refine_bits(bits);
        (me.lo, me.hi)
    }

    /// `1 / self`, or `None` for zero.
    pub fn recip(&self) -> Option<RealAlgebraic> {
        let zero = BigRational::zero();
        if self.cmp_rational(&zero) == Ordering::Equal {
            return None;
        }
        if self.is_rational() {
            return Some(Self::from_rational(self.lo.recip()));
        }
        let mut me = self.clone();
        while me.lo.is_zero() || me.hi.is_zero() || (me.lo < zero) != (me.hi < zero) {
            me.bisect();
        }
        if me.is_rational() {
            return Some(Self::from_rational(me.lo.recip()));
        }
        let (sq, _) = me.poly.strip_zero_roots();
        let poly = sq.reciprocal().expect("zero roots stripped");
        Some(RealAlgebraic::from_isolating(
            poly,
            me.hi.recip(),
            me.lo.recip(),
        ))
    }

    pub fn is_positive(&self) -> bool {
        self.cmp_rational(&BigRational::zero()) == Ordering::Greater
    }
}

fn isolate(p: &IntPoly, s: &Sturm, a: BigRational, b: BigRational, out: &mut Vec<RealAlgebraic>) {
    let n = s.count_open(&a, &b);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(RealAlgebraic::from_isolating(p.clone(), a, b));
        return;
    }
    let mid = (&a + &b) * half();
    isolate(p, s, a, mid.clone(), out);
    if p.sign_at(&mid) == 0 {
        out.push(RealAlgebraic::from_rational(mid.clone()).with_poly(p));
    }
    isolate(p, s, mid, b, out);
}

impl RealAlgebraic {
    fn with_poly(mut self, p: &IntPoly) -> Self {
        self.poly = p.clone();
        self
    }
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.12}", self.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn golden() -> RealAlgebraic {
        RealAlgebraic::unique_in(&IntPoly::from_i64(&[-1, -1, 1]), &r(1, 1), &r(2, 1)).unwrap()
    }

    #[test]
    fn isolates_all_real_roots() {
        let roots = RealAlgebraic::real_roots(&IntPoly::from_i64(&[-1, -1, 1]));
        assert_eq!(roots.len(), 2);
        assert!((roots[0].to_f64() + 0.6180339887498949).abs() < 1e-14);
        assert!((roots[1].to_f64() - 1.618033988749895).abs() < 1e-14);
        let roots = RealAlgebraic::roots_in(&IntPoly::from_i64(&[1, -4, 1]), &r(0, 1), &r(1, 1));
        assert_eq!(roots.len(), 1);
        assert!((roots[0].to_f64() - (2.0 - 3f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn rational_roots_are_exact() {
        // (x - 1/2)(x - 1)(x + 3) scaled to integers
        let p = &(&IntPoly::from_i64(&[-1, 2]) * &IntPoly::from_i64(&[-1, 1]))
            * &IntPoly::from_i64(&[3, 1]);
        let roots = RealAlgebraic::real_roots(&p);
        assert_eq!(roots.len(), 3);
        assert!(roots[1].is_rational() || roots[1].cmp_rational(&r(1, 2)) == Ordering::Equal);
        assert_eq!(roots[2].cmp_rational(&r(1, 1)), Ordering::Equal);
    }

    #[test]
    fn sign_and_floor() {
        let q = golden();
        assert_eq!(q.floor(), BigInt::from(1));
        // q^2 - q - 1 = 0
        assert_eq!(q.sign_of(&IntPoly::from_i64(&[-1, -1, 1])), 0);
        // q - 1.6 > 0 -> 5q - 8 > 0
        assert_eq!(q.sign_of(&IntPoly::from_i64(&[-8, 5])), 1);
        // 2q is floor 3
        let two_q =
            RealAlgebraic::unique_in(&IntPoly::from_i64(&[-4, -2, 1]), &r(3, 1), &r(4, 1)).unwrap();
        assert_eq!(two_q.floor(), BigInt::from(3));
    }

    #[test]
    fn exact_comparisons() {
        let q = golden();
        // 1/q = q - 1, root of x^2 + x - 1
        let c1 =
            RealAlgebraic::unique_in(&IntPoly::from_i64(&[-1, 1, 1]), &r(0, 1), &r(1, 1)).unwrap();
        let conj = RealAlgebraic::unique_in(&IntPoly::from_i64(&[-1, -1, 1]), &r(-1, 1), &r(0, 1))
            .unwrap();
        assert_eq!(conj.abs().cmp_exact(&c1), Ordering::Equal);
        assert_eq!(conj.neg().cmp_exact(&c1), Ordering::Equal);
        assert_eq!(q.cmp_exact(&c1), Ordering::Greater);
        // the same root seen through two different polynomials
        let sqrt2 =
            RealAlgebraic::unique_in(&IntPoly::from_i64(&[-2, 0, 1]), &r(1, 1), &r(2, 1)).unwrap();
        let prod = IntPoly::from_i64(&[-2, 0, 1]) * IntPoly::from_i64(&[-3, 0, 1]);
        let sqrt2_b = RealAlgebraic::unique_in(&prod, &r(1, 1), &r(3, 2)).unwrap();
        assert_eq!(sqrt2.cmp_exact(&sqrt2_b), Ordering::Equal);
        let sqrt3 = RealAlgebraic::unique_in(&prod, &r(3, 2), &r(2, 1)).unwrap();
        assert_eq!(sqrt2_b.cmp_exact(&sqrt3), Ordering::Less);
    }

    #[test]
    fn rational_comparison_inside_the_interval() {
        let q = golden();
        for (n, d, want) in [
            (8, 5, Ordering::Greater),
            (13, 8, Ordering::Less),
            (161, 100, Ordering::Greater),
            (1619, 1000, Ordering::Less),
        ] {
            assert_eq!(q.cmp_rational(&r(n, d)), want, "{n}/{d}");
        }
    }

    #[test]
    fn reciprocal_of_algebraic() {
        let q = golden();
        let inv = q.recip().unwrap();
        assert!((inv.to_f64() - 0.6180339887498949).abs() < 1e-14);
        let c1 =
            RealAlgebraic::unique_in(&IntPoly::from_i64(&[-1, 1, 1]), &r(0, 1), &r(1, 1)).unwrap();
        assert_eq!(inv.cmp_exact(&c1), Ordering::Equal);
        assert!((c1.neg().recip().unwrap().to_f64() + 1.618033988749895).abs() < 1e-14);
        assert_eq!(
            RealAlgebraic::from_integer(4)
                .recip()
                .unwrap()
                .cmp_rational(&r(1, 4)),
            Ordering::Equal
        );
        assert!(RealAlgebraic::from_integer(0).recip().is_none());
    }
}
