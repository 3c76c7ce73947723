//! Complex numbers with dyadic parts.

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::dyadic::{Dyadic, Round};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Cx {
    pub re: Dyadic,
    pub im: Dyadic,
}

impl Cx {
    pub fn new(re: Dyadic, im: Dyadic) -> Self {
        Cx { re, im }
    }

    pub fn real(re: Dyadic) -> Self {
        Cx {
            re,
            im: Dyadic::zero(),
        }
    }

    pub fn from_c64(z: Complex64) -> Self {
        Cx::new(Dyadic::from_f64(z.re), Dyadic::from_f64(z.im))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        Cx::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Cx) -> Cx {
        Cx::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }

    pub fn conj(&self) -> Cx {
        Cx::new(self.re.clone(), -&self.im)
    }

    pub fn round(&self, prec: u64) -> Cx {
        Cx::new(
            self.re.round(prec, Round::Nearest),
            self.im.round(prec, Round::Nearest),
        )
    }

    /// `self / o` rounded to `prec` bits (nearest).
    pub fn div(&self, o: &Cx, prec: u64) -> Cx {
        let den = &(&o.re * &o.re) + &(&o.im * &o.im);
        let nr = &(&self.re * &o.re) + &(&self.im * &o.im);
        let ni = &(&self.im * &o.re) - &(&self.re * &o.im);
        Cx::new(
            nr.div(&den, prec, Round::Nearest),
            ni.div(&den, prec, Round::Nearest),
        )
    }

    /// Leading-bit position of the larger part.
    pub fn magnitude(&self) -> i64 {
        self.re.magnitude().max(self.im.magnitude())
    }

    /// Exact Horner evaluation.
    pub fn eval_exact(coeffs: &[BigInt], z: &Cx) -> Cx {
        let mut acc = Cx::default();
        for c in coeffs.iter().rev() {
            acc = acc.mul(z);
            acc.re = &acc.re + &Dyadic::from_bigint(c);
        }
        acc
    }

    /// Horner evaluation with every step rounded to `prec` bits.
    pub fn eval_rounded(coeffs: &[Dyadic], z: &Cx, prec: u64) -> Cx {
        let mut acc = Cx::default();
        for c in coeffs.iter().rev() {
            acc = acc.mul(z).round(prec);
            acc.re = (&acc.re + c).round(prec, Round::Nearest);
        }
        acc
    }

    /// Upper bound on the modulus, carried to `bits` bits.
    pub fn abs_upper(&self, bits: u64) -> Dyadic {
        let re = self.re.abs().round(bits, Round::Up);
        let im = self.im.abs().round(bits, Round::Up);
        let sq = (&(&re * &re) + &(&im * &im)).round(bits, Round::Up);
        sq.sqrt(bits, Round::Up)
    }

    /// Lower bound on the modulus, carried to `bits` bits.
    pub fn abs_lower(&self, bits: u64) -> Dyadic {
        let re = self.re.abs().round(bits, Round::Down);
        let im = self.im.abs().round(bits, Round::Down);
        let sq = (&(&re * &re) + &(&im * &im)).round(bits, Round::Down);
        sq.sqrt(bits, Round::Down)
    }
}
