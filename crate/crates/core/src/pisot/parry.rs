//! Greedy expansion of 1 in a Pisot base, with exact orbit arithmetic.
//!
//! The orbit `x_0 = 1`, `x_i = q x_{i-1} - a_i` lives in `Z[q]`, so each
//! `x_i` is kept as an integer polynomial of degree below `deg P` reduced
//! modulo the minimal polynomial `P`. Digits come from certified interval
//! evaluation; an interval that straddles an integer `k` is resolved
//! exactly, since `y(q) = k` with `deg y < deg P` and `P` irreducible forces
//! `y = k` as polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::PisotRecord;
use crate::dyadic::{Dyadic, Interval, Round};
use crate::intpoly::IntPoly;
use crate::rootlab::precision_cap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ParryClass {
    /// The expansion is finite: some `x_n = 0`.
    Simple,
    EventuallyPeriodic,
    UndecidedAtBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParryExpansion {
    /// `a_1 .. a_n`. For periodic expansions the last `period` digits repeat.
    pub digits: Vec<u64>,
    pub preperiod: usize,
    /// 0 for simple and undecided expansions.
    pub period: usize,
    pub class: ParryClass,
}

impl ParryExpansion {
    pub fn is_simple(&self) -> bool {
        self.class == ParryClass::Simple
    }

    /// Digits as a compact string, with the periodic part in parentheses.
    pub fn digit_string(&self) -> String {
        let d: Vec<String> = self.digits.iter().map(|a| a.to_string()).collect();
        let sep = if self.digits.iter().any(|&a| a > 9) {
            ","
        } else {
            ""
        };
        match self.class {
            ParryClass::EventuallyPeriodic => format!(
                "{}({})",
                d[..self.preperiod].join(sep),
                d[self.preperiod..].join(sep)
            ),
            _ => d.join(sep),
        }
    }
}

/// Certified `floor(y(q))` where `q` is the record's Pisot number, or the
/// exact integer if `y` is constant.
fn certified_floor(y: &IntPoly, rec: &PisotRecord, q_iv: &mut (Interval, u32)) -> Option<BigInt> {
    if y.deg() == 0 {
        return Some(y.coeff(0));
    }
    let cap = precision_cap();
    loop {
        let (iv, bits) = (&q_iv.0, q_iv.1);
        let v = Interval::eval_poly(y.coeffs(), iv, bits as u64 + 16);
        let (fl, fh) = (v.lo.floor(), v.hi.floor());
        if fl == fh {
            return Some(fl);
        }
        if bits >= cap {
            return None;
        }
        let nb = (bits * 2).min(cap);
        *q_iv = q_interval(rec, nb);
    }
}

fn q_interval(rec: &PisotRecord, bits: u32) -> (Interval, u32) {
    let (lo, hi) = rec.q.enclosure(bits);
    (
        Interval::new(
            Dyadic::from_rational(&lo, bits as u64 + 8, Round::Down),
            Dyadic::from_rational(&hi, bits as u64 + 8, Round::Up),
        ),
        bits,
    )
}

/// Multiplies `y` by `x` and reduces modulo the monic `p`.
fn times_x_mod(y: &IntPoly, p: &IntPoly) -> IntPoly {
    y.shift(1).rem_monic(p)
}

/// Greedy digits of 1 in base `rec.q` for at most `max_steps` digits.
pub fn greedy_expansion(rec: &PisotRecord, max_steps: usize) -> ParryExpansion {
    let p = &rec.poly;
    let mut q_iv = q_interval(rec, 64);
    let mut x = IntPoly::one();
    let mut seen: HashMap<IntPoly, usize> = HashMap::new();
    seen.insert(x.clone(), 0);
    let mut digits = Vec::new();
    let undecided = |digits: Vec<u64>| ParryExpansion {
        preperiod: digits.len(),
        digits,
        period: 0,
        class: ParryClass::UndecidedAtBound,
    };
    for i in 1..=max_steps {
        let y = times_x_mod(&x, p);
        let a = match certified_floor(&y, rec, &mut q_iv) {
            Some(a) if !a.is_negative() => a,
            _ => return undecided(digits),
        };
        digits.push(a.to_u64().expect("digit bounded by q"));
        x = &y - &IntPoly::constant(a);
        if x.is_zero() {
            return ParryExpansion {
                preperiod: digits.len(),
                digits,
                period: 0,
                class: ParryClass::Simple,
            };
        }
        if let Some(&j) = seen.get(&x) {
            return ParryExpansion {
                preperiod: j,
                period: i - j,
                digits,
                class: ParryClass::EventuallyPeriodic,
            };
        }
        seen.insert(x.clone(), i);
    }
    undecided(digits)
}
