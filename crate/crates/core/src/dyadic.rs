//! Binary floating-point numbers with arbitrary-precision mantissas.
//!
//! A [`Dyadic`] is `mant * 2^exp`. Addition, subtraction and multiplication
//! are exact; [`Dyadic::round`] and the division / square-root helpers take an
//! explicit precision and rounding direction so that callers can build
//! rigorous upper and lower bounds.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
    Nearest,
}

impl Round {
    pub fn flip(self) -> Round {
        match self {
            Round::Down => Round::Up,
            Round::Up => Round::Down,
            Round::Nearest => Round::Nearest,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

/// Bits kept by the cheap bound arithmetic used for radii and moduli.
pub const BOUND_BITS: u64 = 64;

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { mant, exp };
        d.canonicalize();
        d
    }

    fn canonicalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i64;
        }
    }

    pub fn zero() -> Self {
        Dyadic::default()
    }

    pub fn one() -> Self {
        Dyadic::from_i64(1)
    }

    pub fn from_i64(v: i64) -> Self {
        Dyadic::new(BigInt::from(v), 0)
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        Dyadic::new(v.clone(), 0)
    }

    /// `2^e`.
    pub fn pow2(e: i64) -> Self {
        Dyadic::new(BigInt::one(), e)
    }

    /// Exact conversion; panics on non-finite input.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite value {x}");
        if x == 0.0 {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Dyadic::new(BigInt::from(m) * sign, e)
    }

    pub fn mant(&self) -> &BigInt {
        &self.mant
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    /// Number of mantissa bits.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// Position of the leading bit: `2^(mag-1) <= |x| < 2^mag`.
    /// Returns `i64::MIN` for zero.
    pub fn magnitude(&self) -> i64 {
        if self.is_zero() {
            return i64::MIN;
        }
        self.exp + self.mant.bits() as i64
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    /// Rounds to at most `prec` mantissa bits in the given direction.
    pub fn round(&self, prec: u64, mode: Round) -> Self {
        let bits = self.mant.bits();
        if bits <= prec {
            return self.clone();
        }
        let shift = bits - prec;
        Dyadic::new(
            shift_round(&self.mant, shift, mode),
            self.exp + shift as i64,
        )
    }

    /// Rounds to a multiple of `2^e`.
    pub fn round_to_exp(&self, e: i64, mode: Round) -> Self {
        if self.exp >= e || self.is_zero() {
            return self.clone();
        }
        let shift = (e - self.exp) as u64;
        Dyadic::new(shift_round(&self.mant, shift, mode), e)
    }

    /// `self / other` rounded to `prec` bits.
    pub fn div(&self, other: &Dyadic, prec: u64, mode: Round) -> Self {
        assert!(!other.is_zero(), "division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        // Scale the numerator so the integer quotient has at least prec + 2 bits.
        let want = prec as i64 + 2 + other.mant.bits() as i64 - self.mant.bits() as i64;
        let s = want.max(0);
        let num = &self.mant << s as usize;
        let (q, r) = num.div_mod_floor(&other.mant);
        // q is the floor of the exact quotient; a nonzero remainder means the
        // true value lies strictly between q and q + 1 (in units of 2^-s).
        let mut m = q;
        let inexact = !r.is_zero();
        let mut e = self.exp - other.exp - s;
        if inexact {
            // Append a sticky bit so rounding below sees an inexact tail.
            m = (m << 1usize) + 1;
            e -= 1;
        }
        Dyadic::new(m, e).round(prec, mode)
    }

    /// Square root rounded to `prec` bits; panics on negative input.
    pub fn sqrt(&self, prec: u64, mode: Round) -> Self {
        assert!(!self.is_negative(), "square root of a negative number");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let target = 2 * (prec as i64 + 2);
        let mut s = (target - self.mant.bits() as i64).max(0);
        if (self.exp - s) % 2 != 0 {
            s += 1;
        }
        let scaled = &self.mant << s as usize;
        let root = scaled.sqrt();
        let exact = &root * &root == scaled;
        let e = (self.exp - s) / 2;
        let (m, e) = if exact {
            (root, e)
        } else {
            ((root << 1usize) + 1, e - 1)
        };
        Dyadic::new(m, e).round(prec, mode)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round(53, Round::Nearest);
        let m = r.mant.to_f64().unwrap_or(f64::NAN);
        let e = r.exp;
        if e > 2000 {
            return m.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0 * m.signum();
        }
        // Split the scaling to avoid intermediate overflow/underflow.
        let half = e / 2;
        m * 2f64.powi(half as i32) * 2f64.powi((e - half) as i32)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as usize)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    /// Rounds a rational to `prec` bits.
    pub fn from_rational(x: &BigRational, prec: u64, mode: Round) -> Self {
        Dyadic::from_bigint(x.numer()).div(&Dyadic::from_bigint(x.denom()), prec, mode)
    }

    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as usize
        } else {
            shift_round(&self.mant, (-self.exp) as u64, Round::Down)
        }
    }

    pub fn ceil(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as usize
        } else {
            shift_round(&self.mant, (-self.exp) as u64, Round::Up)
        }
    }

    pub fn min(a: &Dyadic, b: &Dyadic) -> Dyadic {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn max(a: &Dyadic, b: &Dyadic) -> Dyadic {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// Bound arithmetic helpers: operate exactly then round to
    /// [`BOUND_BITS`] in the requested direction.
    pub fn add_r(&self, o: &Dyadic, mode: Round) -> Dyadic {
        (self + o).round(BOUND_BITS, mode)
    }

    pub fn mul_r(&self, o: &Dyadic, mode: Round) -> Dyadic {
        (self * o).round(BOUND_BITS, mode)
    }

    pub fn div_r(&self, o: &Dyadic, mode: Round) -> Dyadic {
        self.div(o, BOUND_BITS, mode)
    }
}

/// `floor/ceil/nearest(m / 2^shift)`.
fn shift_round(m: &BigInt, shift: u64, mode: Round) -> BigInt {
    if shift == 0 {
        return m.clone();
    }
    let floor = m >> shift as usize; // arithmetic shift rounds toward -inf
    let rem_nonzero = {
        let back = &floor << shift as usize;
        &back != m
    };
    match mode {
        Round::Down => floor,
        Round::Up => {
            if rem_nonzero {
                floor + 1
            } else {
                floor
            }
        }
        Round::Nearest => {
            if !rem_nonzero {
                return floor;
            }
            // Compare the remainder with half a unit.
            let rem = m - (&floor << shift as usize);
            let half = BigInt::one() << (shift - 1) as usize;
            match rem.cmp(&half) {
                Ordering::Less => floor,
                Ordering::Greater => floor + 1,
                Ordering::Equal => {
                    if floor.is_even() {
                        floor
                    } else {
                        floor + 1
                    }
                }
            }
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        // Same sign: compare magnitudes first, then exactly.
        let (ma, mb) = (self.magnitude(), other.magnitude());
        if ma != mb {
            let c = ma.cmp(&mb);
            return if sa > 0 { c } else { c.reverse() };
        }
        (self - other).signum().cmp(&0)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, o: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &o.mant << (o.exp - e) as usize;
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, o: &Dyadic) -> Dyadic {
        self + &(-o)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, o: &Dyadic) -> Dyadic {
        if self.is_zero() || o.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            mant: &self.mant * &o.mant,
            exp: self.exp + o.exp,
        }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

/// A closed interval with dyadic endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Dyadic) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    /// `[c - r, c + r]` with outward rounding to [`BOUND_BITS`].
    pub fn ball(c: &Dyadic, r: &Dyadic) -> Self {
        Interval {
            lo: (c - r).round(BOUND_BITS, Round::Down),
            hi: (c + r).round(BOUND_BITS, Round::Up),
        }
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.hi.signum() < 0
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Dyadic {
        (&self.lo + &self.hi).mul_pow2(-1)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.lo.to_f64(), self.hi.to_f64())
    }

    /// Outward rounding of both endpoints to `prec` bits.
    pub fn round_out(&self, prec: u64) -> Self {
        Interval {
            lo: self.lo.round(prec, Round::Down),
            hi: self.hi.round(prec, Round::Up),
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    pub fn scale_int(&self, k: &BigInt) -> Interval {
        let kd = Dyadic::from_bigint(k);
        if k.is_negative() {
            Interval {
                lo: &self.hi * &kd,
                hi: &self.lo * &kd,
            }
        } else {
            Interval {
                lo: &self.lo * &kd,
                hi: &self.hi * &kd,
            }
        }
    }

    /// Horner evaluation of an integer polynomial; rounds outward to `prec`
    /// bits after every step so mantissas stay bounded.
    pub fn eval_poly(coeffs: &[BigInt], x: &Interval, prec: u64) -> Interval {
        let mut acc = Interval::point(Dyadic::zero());
        for c in coeffs.iter().rev() {
            acc = acc
                .mul(x)
                .add(&Interval::point(Dyadic::from_bigint(c)))
                .round_out(prec);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(x: f64) -> Dyadic {
        Dyadic::from_f64(x)
    }

    #[test]
    fn f64_round_trip() {
        for x in [
            0.0,
            1.0,
            -2.5,
            1e-300,
            3.7e200,
            f64::MIN_POSITIVE / 8.0,
            0.1,
        ] {
            assert_eq!(d(x).to_f64(), x);
        }
    }

    #[test]
    fn directed_division_brackets_the_quotient() {
        let one = Dyadic::one();
        let three = Dyadic::from_i64(3);
        let lo = one.div(&three, 80, Round::Down);
        let hi = one.div(&three, 80, Round::Up);
        assert!(lo < hi);
        let third = BigRational::new(1.into(), 3.into());
        assert!(lo.to_rational() < third && third < hi.to_rational());
        assert_eq!(
            Dyadic::from_i64(6).div(&three, 10, Round::Up),
            Dyadic::from_i64(2)
        );
    }

    #[test]
    fn sqrt_brackets() {
        let two = Dyadic::from_i64(2);
        let lo = two.sqrt(100, Round::Down);
        let hi = two.sqrt(100, Round::Up);
        assert!(&lo * &lo < two && two < &hi * &hi);
        assert!((lo.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(
            Dyadic::from_i64(9).sqrt(5, Round::Down),
            Dyadic::from_i64(3)
        );
        assert_eq!(d(0.25).sqrt(5, Round::Up), d(0.5));
    }

    #[test]
    fn rounding_modes_on_negative_values() {
        let x = d(-2.75); // -11 * 2^-2
        assert_eq!(x.round(2, Round::Down), d(-3.0));
        assert_eq!(x.round(2, Round::Up), d(-2.0));
        assert_eq!(x.round(3, Round::Nearest), d(-3.0));
        assert_eq!(x.floor(), BigInt::from(-3));
        assert_eq!(x.ceil(), BigInt::from(-2));
    }

    #[test]
    fn interval_poly_eval_contains_value() {
        let c: Vec<BigInt> = [-1, -1, 1].iter().map(|&v| BigInt::from(v)).collect();
        let x = Interval::new(d(1.6), d(1.7));
        let v = Interval::eval_poly(&c, &x, 64);
        assert!(v.lo.to_f64() <= -0.0399 && v.hi.to_f64() >= 0.1899);
    }

    proptest! {
        #[test]
        fn ordering_matches_f64(a in -1e6f64..1e6, b in -1e6f64..1e6) {
            prop_assert_eq!(d(a).cmp(&d(b)), a.partial_cmp(&b).unwrap());
        }

        #[test]
        fn arithmetic_is_exact(a in -1e6f64..1e6, b in -1e6f64..1e6) {
            let s = (&d(a) + &d(b)).to_rational();
            prop_assert_eq!(s, d(a).to_rational() + d(b).to_rational());
            let p = (&d(a) * &d(b)).to_rational();
            prop_assert_eq!(p, d(a).to_rational() * d(b).to_rational());
        }

        #[test]
        fn directed_rounding_brackets(a in -1e6f64..1e6, b in 1e-3f64..1e6, prec in 2u64..80) {
            let q = d(a).to_rational() / d(b).to_rational();
            let lo = d(a).div(&d(b), prec, Round::Down).to_rational();
            let hi = d(a).div(&d(b), prec, Round::Up).to_rational();
            prop_assert!(lo <= q && q <= hi);
        }
    }
}
