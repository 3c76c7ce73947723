//! Sturm sequences over `Z[x]` and exact real-root counting.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::intpoly::IntPoly;

/// Sturm sequence built with signed pseudo-remainders; each term is kept
/// primitive, which preserves signs and therefore sign-variation counts.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<IntPoly>,
}

impl Sturm {
    pub fn new(p: &IntPoly) -> Sturm {
        let mut seq = Vec::new();
        if p.is_zero() {
            return Sturm { seq };
        }
        seq.push(p.primitive_part());
        let dp = p.derivative();
        if dp.is_zero() {
            return Sturm { seq };
        }
        seq.push(dp.primitive_part());
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.deg() == 0 {
                break;
            }
            // prem = lc(b)^k * rem with k = deg a - deg b + 1; undo the sign.
            let k = a.deg() - b.deg() + 1;
            let mut r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            let lc_neg = b.lead().is_negative();
            let flip = !(lc_neg && k % 2 == 1);
            if flip {
                r = -&r;
            }
            seq.push(r.primitive_part());
        }
        Sturm { seq }
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.seq
    }

    fn variations<I: Iterator<Item = i32>>(signs: I) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.seq.iter().map(|q| q.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(
            self.seq
                .iter()
                .map(|q| sign(q.lead().is_positive(), q.is_zero())),
        )
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|q| {
            let s = sign(q.lead().is_positive(), q.is_zero());
            if q.deg() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        let c = self.count_half_open(a, b);
        if c > 0 && self.seq[0].sign_at(b) == 0 {
            c - 1
        } else {
            c
        }
    }

    /// Number of distinct real roots in the closed interval `[a, b]`.
    pub fn count_closed(&self, a: &BigRational, b: &BigRational) -> usize {
        let extra = usize::from(self.seq[0].sign_at(a) == 0);
        if a == b {
            return extra;
        }
        self.count_half_open(a, b) + extra
    }

    pub fn count_all(&self) -> usize {
        if self.seq.is_empty() {
            return 0;
        }
        self.variations_at_neg_inf()
            .saturating_sub(self.variations_at_pos_inf())
    }

    /// Number of distinct real roots greater than `a`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations_at(a)
            .saturating_sub(self.variations_at_pos_inf())
    }
}

fn sign(pos: bool, zero: bool) -> i32 {
    if zero {
        0
    } else if pos {
        1
    } else {
        -1
    }
}

/// Cauchy bound: every root has modulus below `1 + max|a_i| / |a_d|`,
/// returned as a rational.
pub fn cauchy_bound(p: &IntPoly) -> BigRational {
    let lead = p.lead().abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.deg())
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Zero::zero);
    BigRational::new(max, lead) + BigRational::from_integer(1.into())
}
