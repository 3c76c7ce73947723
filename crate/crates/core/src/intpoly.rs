//! Exact integer polynomials.
//!
//! Coefficients are stored in ascending order (`coeffs[0]` is the constant
//! term) and the vector is always trimmed, so the zero polynomial is the
//! empty vector and `coeffs.last()` is the nonzero leading coefficient.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Builds a polynomial from ascending machine-integer coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0. Handy for loops.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Largest absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `x^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// `f * x^n + sign * g`, exactly as built (no content removal), so that
    /// the `+` and `-` variants always sum to `2 f x^n`.
    pub fn compose_shift(f: &IntPoly, n: usize, g: &IntPoly, sign: i32) -> IntPoly {
        let fx = f.shift(n);
        if sign >= 0 {
            &fx + g
        } else {
            &fx - g
        }
    }

    /// `p(-x)`.
    pub fn negate_x(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(c x)` for an integer `c`.
    pub fn scale_x(&self, c: &BigInt) -> Self {
        let mut pow = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= c;
        }
        Self::new(out)
    }

    /// `p(x + c)` for an integer `c` (Taylor shift).
    pub fn taylor_shift(&self, c: &BigInt) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &a[j + 1] * c;
                a[j] += t;
            }
        }
        Self::new(a)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn second_derivative(&self) -> Self {
        self.derivative().derivative()
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_exact(&self, x: &BigRational) -> BigRational {
        // Homogenised Horner on numerator/denominator avoids repeated gcds.
        let (num, den) = (x.numer(), x.denom());
        let d = self.deg();
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        if self.is_zero() {
            return BigRational::zero();
        }
        BigRational::new(acc, num_traits::pow(den.clone(), d))
    }

    /// Sign of `p(x)` at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        sign_of(&acc)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Coefficient reversal `x^d p(1/x)`, normalized.
    pub fn reciprocal(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(self.reversed().normalized())
    }

    /// Raw coefficient reversal, no normalization and no zero check.
    pub fn reversed(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::new(c)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Content removed, sign of the leading coefficient kept.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Primitive with positive leading coefficient: the canonical form.
    pub fn normalized(&self) -> IntPoly {
        let p = self.primitive_part();
        if p.lead().is_negative() {
            -&p
        } else {
            p
        }
    }

    /// Removes factors of `x`, returning the quotient and the power removed.
    pub fn strip_zero_roots(&self) -> (IntPoly, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if k == 0 || self.is_zero() {
            return (self.clone(), 0);
        }
        (IntPoly::new(self.coeffs[k..].to_vec()), k)
    }

    /// Exact division in `Z[x]`; `None` when the quotient is not integral or
    /// the remainder is nonzero.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem_integral(d)?;
        r.is_zero().then_some(q)
    }

    /// Long division requiring every quotient coefficient to be integral.
    fn div_rem_integral(&self, d: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some((IntPoly::zero(), IntPoly::zero()));
        }
        let mut rem = self.coeffs.clone();
        let ld = d.lead();
        if rem.len() <= dd {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&ld);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        Some((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Pseudo-remainder `lc(d)^(deg p - deg d + 1) p mod d`, with exactly
    /// that power so callers can rely on its sign.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.deg();
        let ld = d.lead();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return self.clone();
        }
        for i in (dd..r.len()).rev() {
            let top = std::mem::take(&mut r[i]);
            r.truncate(i);
            for c in r.iter_mut() {
                *c *= &ld;
            }
            for (j, c) in d.coeffs.iter().take(dd).enumerate() {
                r[i - dd + j] -= &top * c;
            }
        }
        IntPoly::new(r)
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, m: &IntPoly) -> IntPoly {
        debug_assert!(m.is_monic());
        let dm = m.deg();
        let mut r = self.coeffs.clone();
        while r.len() > dm {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = r.len() - dm;
            for (j, c) in m.coeffs.iter().take(dm).enumerate() {
                r[k + j] -= &top * c;
            }
        }
        IntPoly::new(r)
    }

    /// Greatest common divisor, normalized (primitive, positive leading
    /// coefficient). `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let (mut a, mut b) = if self.deg() >= other.deg() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.normalized();
            }
            if r.deg() == 0 {
                return IntPoly::one();
            }
            a = b;
            b = r.primitive_part();
        }
    }

    /// Product of the distinct irreducible factors, normalized.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let p = self.normalized();
        if p.deg() == 0 {
            return IntPoly::one();
        }
        let g = p.gcd(&p.derivative());
        p.div_exact(&g)
            .expect("gcd divides its argument")
            .normalized()
    }

    /// Yun's squarefree decomposition: pairs `(factor, multiplicity)` with
    /// pairwise coprime squarefree normalized factors whose product (with
    /// multiplicity) equals `self` up to a constant.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let a = self.normalized();
        if a.deg() == 0 {
            return Vec::new();
        }
        let b = a.derivative();
        let c = a.gcd(&b);
        let mut w = a.div_exact(&c).expect("gcd divides");
        let mut y = b.div_exact(&c).expect("gcd divides derivative");
        let mut out = Vec::new();
        let mut i = 1;
        while w.deg() > 0 {
            let z = &y - &w.derivative();
            let g = w.gcd(&z);
            if g.deg() > 0 {
                out.push((g.normalized(), i));
            }
            w = w.div_exact(&g).expect("gcd divides");
            y = z.div_exact(&g).expect("gcd divides");
            i += 1;
        }
        out
    }

    /// Divides out every cyclotomic factor `Phi_k` with `k <= max_order`,
    /// repeatedly. Returns the quotient and the stripped orders (sorted, with
    /// multiplicity).
    pub fn strip_cyclotomic(&self, max_order: u64) -> (IntPoly, Vec<u64>) {
        let mut p = self.clone();
        let mut orders = Vec::new();
        if p.is_zero() {
            return (p, orders);
        }
        let linear = [
            (1u64, IntPoly::from_i64(&[-1, 1])),
            (2, IntPoly::from_i64(&[1, 1])),
        ];
        for (k, f) in &linear {
            if *k > max_order {
                continue;
            }
            while let Some(q) = p.div_exact(f) {
                p = q;
                orders.push(*k);
            }
        }
        // Roots of unity of order >= 3 come in pairs z, 1/z, so any such
        // factor also divides the reversed polynomial.
        let common = p.gcd(&p.reversed());
        let budget = common.deg();
        if budget >= 2 {
            for k in 3..=max_order {
                if euler_phi(k) as usize > budget {
                    continue;
                }
                let phi_k = cyclotomic(k);
                while let Some(q) = p.div_exact(&phi_k) {
                    p = q;
                    orders.push(k);
                }
            }
        }
        orders.sort_unstable();
        (p, orders)
    }

    /// Default order bound for [`IntPoly::strip_cyclotomic`]. Every order
    /// `k` with `phi(k) <= deg` satisfies `k <= 2 deg^2`, so nothing is missed.
    pub fn strip_cyclotomic_default(&self) -> (IntPoly, Vec<u64>) {
        let d = self.deg() as u64;
        let bound = (2 * d * d).max(2);
        self.strip_cyclotomic(bound)
    }

    /// Parses either the text form (`x^4-3x^3+x^2-2x-1`) or a JSON array of
    /// ascending coefficients (`[-1,-2,1,-3,1]`).
    pub fn parse(s: &str) -> Result<IntPoly> {
        let trimmed = s.trim_start();
        if trimmed.starts_with('[') {
            return parse_json_coeffs(s);
        }
        parse_text(s)
    }
}

fn sign_of(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub(crate) fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The `k`-th cyclotomic polynomial (cached).
pub fn cyclotomic(k: u64) -> IntPoly {
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&k) {
        return p.clone();
    }
    assert!(k >= 1, "cyclotomic order must be positive");
    // x^k - 1 divided by Phi_d for every proper divisor d.
    let mut p = IntPoly::monomial(BigInt::one(), k as usize) - IntPoly::one();
    for d in 1..k {
        if k.is_multiple_of(d) {
            p = p
                .div_exact(&cyclotomic(d))
                .expect("cyclotomic divisibility");
        }
    }
    cache.lock().unwrap().insert(k, p.clone());
    p
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl FromStr for IntPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IntPoly::parse(s)
    }
}

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn parse_json_coeffs(s: &str) -> Result<IntPoly> {
    let v: Vec<Coef> = serde_json::from_str(s)
        .map_err(|e| parse_err(e.column().saturating_sub(1), e.to_string()))?;
    let coeffs = v
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            c.into_bigint()
                .ok_or_else(|| parse_err(i, "coefficient is not an integer"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

fn parse_text(s: &str) -> Result<IntPoly> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut terms: Vec<(usize, BigInt)> = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(parse_err(pos, "empty polynomial"));
    }
    let mut first = true;
    while pos < bytes.len() {
        // sign
        let mut negative = false;
        let mut saw_sign = false;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            negative = bytes[pos] == b'-';
            saw_sign = true;
            pos += 1;
            skip_ws(&mut pos);
        }
        if !first && !saw_sign {
            return Err(parse_err(pos, "expected '+' or '-' between terms"));
        }
        first = false;
        // coefficient
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coef = if pos > start {
            Some(
                s[start..pos]
                    .parse::<BigInt>()
                    .map_err(|_| parse_err(start, "bad integer"))?,
            )
        } else {
            None
        };
        skip_ws(&mut pos);
        if pos < bytes.len() && bytes[pos] == b'*' && coef.is_some() {
            pos += 1;
            skip_ws(&mut pos);
            if pos >= bytes.len() || bytes[pos] != b'x' {
                return Err(parse_err(pos, "expected 'x' after '*'"));
            }
        }
        let mut exp = 0usize;
        if pos < bytes.len() && bytes[pos] == b'x' {
            pos += 1;
            exp = 1;
            skip_ws(&mut pos);
            let pow_op = if s[pos..].starts_with("**") {
                Some(2)
            } else if pos < bytes.len() && bytes[pos] == b'^' {
                Some(1)
            } else {
                None
            };
            if let Some(w) = pow_op {
                pos += w;
                skip_ws(&mut pos);
                let es = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == es {
                    return Err(parse_err(pos, "expected exponent"));
                }
                exp = s[es..pos]
                    .parse()
                    .map_err(|_| parse_err(es, "exponent too large"))?;
            }
        } else if coef.is_none() {
            return Err(parse_err(pos, "expected coefficient or 'x'"));
        }
        let mut c = coef.unwrap_or_else(BigInt::one);
        if negative {
            c = -c;
        }
        terms.push((exp, c));
        skip_ws(&mut pos);
    }
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (e, c) in terms {
        coeffs[e] += c;
    }
    Ok(IntPoly::new(coeffs))
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coef {
    Int(i64),
    Str(String),
}

impl Coef {
    fn from_bigint(c: &BigInt) -> Coef {
        match c.to_i64() {
            Some(v) => Coef::Int(v),
            None => Coef::Str(c.to_string()),
        }
    }

    fn into_bigint(self) -> Option<BigInt> {
        match self {
            Coef::Int(v) => Some(BigInt::from(v)),
            Coef::Str(s) => s.parse().ok(),
        }
    }
}

/// Serialized as the JSON array `[a_0, ..., a_d]`; coefficients outside the
/// 64-bit range are written as decimal strings.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Coef> = self.coeffs.iter().map(Coef::from_bigint).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<Coef>::deserialize(d)?;
        let coeffs = v
            .into_iter()
            .map(|c| {
                c.into_bigint()
                    .ok_or_else(|| serde::de::Error::custom("bad coefficient"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn eval_exact_examples() {
        assert_eq!(p(&[-1, -1, 1]).eval_exact(&rat(1, 1)), rat(-1, 1));
        // x^6 - 2x^5 + x - 1 at 1
        assert_eq!(
            p(&[-1, 1, 0, 0, 0, -2, 1]).eval_exact(&rat(1, 1)),
            rat(-1, 1)
        );
        assert_eq!(p(&[-1, -1, 1]).eval_exact(&rat(1, 2)), rat(-5, 4));
    }

    #[test]
    fn compose_shift_examples() {
        let f = p(&[-1, -1, 1]);
        assert_eq!(
            IntPoly::compose_shift(&f, 2, &IntPoly::x(), 1),
            p(&[0, 1, -1, -1, 1])
        );
        assert_eq!(IntPoly::compose_shift(&f, 0, &IntPoly::zero(), 1), f);
        let chi = p(&[1, 0, -2, -1, 1]);
        let g = p(&[-1, -1, 1, 1]);
        // X(x) x + (x^3 + x^2 - x - 1) = x^5 - x^4 - 2x^3 + x + x^3 + x^2 - x - 1
        assert_eq!(
            IntPoly::compose_shift(&chi, 1, &g, 1),
            p(&[-1, 0, 1, -1, -1, 1])
        );
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p(&[-1, -1, 1]).reciprocal().unwrap(), p(&[-1, 1, 1]));
        // (x^2 - x - 1) x^n + 1 with n = 4 -> x^6 - x^2 - x + 1
        let psi = IntPoly::compose_shift(&p(&[-1, -1, 1]), 4, &IntPoly::one(), 1);
        assert_eq!(psi.reciprocal().unwrap(), p(&[1, -1, -1, 0, 0, 0, 1]));
        assert_eq!(p(&[1, -3, 1]).reciprocal().unwrap(), p(&[1, -3, 1]));
        assert_eq!(p(&[0, 1]).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn derivative_examples() {
        let pp = p(&[1, -1, -1, 0, 0, 1]); // x^5 - x^2 - x + 1
        assert_eq!(pp.second_derivative(), p(&[-2, 0, 0, 20]));
        assert_eq!(p(&[5]).derivative(), IntPoly::zero());
        assert_eq!(p(&[-1, -1, 1]).derivative(), p(&[-1, 2]));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(p(&[1, -2, 1]).squarefree_part(), p(&[-1, 1]));
        assert_eq!(p(&[-1, -1, 1]).squarefree_part(), p(&[-1, -1, 1]));
        let gold = p(&[-1, -1, 1]);
        let q = &(&gold * &gold) * &p(&[2, 1]);
        assert_eq!(q.squarefree_part(), &gold * &p(&[2, 1]));
        let dec = q.squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[2, 1]), 1), (gold, 2)]);
    }

    #[test]
    fn strip_cyclotomic_examples() {
        let gold = p(&[-1, -1, 1]);
        assert_eq!(
            (&gold * &p(&[-1, 1])).strip_cyclotomic_default(),
            (gold.clone(), vec![1])
        );
        assert_eq!(
            (&gold * &p(&[1, 1, 1])).strip_cyclotomic_default(),
            (gold.clone(), vec![3])
        );
        assert_eq!(gold.strip_cyclotomic_default(), (gold.clone(), vec![]));
        let sq = &p(&[1, 0, 1]) * &p(&[1, 0, 1]);
        assert_eq!((&gold * &sq).strip_cyclotomic_default(), (gold, vec![4, 4]));
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(15).deg(), 8);
    }

    #[test]
    fn gcd_and_division() {
        let a = &p(&[-1, -1, 1]) * &p(&[1, 1]);
        let b = &p(&[-1, -1, 1]) * &p(&[3, 2]);
        assert_eq!(a.gcd(&b), p(&[-1, -1, 1]));
        assert_eq!(b.div_exact(&p(&[3, 2])), Some(p(&[-1, -1, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[0, 2])), None);
    }

    #[test]
    fn text_round_trip() {
        let q: IntPoly = "x^4-3x^3+x^2-2x-1".parse().unwrap();
        assert_eq!(q, p(&[-1, -2, 1, -3, 1]));
        assert_eq!(q.to_string(), "x^4 - 3x^3 + x^2 - 2x - 1");
        assert_eq!(q.to_string().parse::<IntPoly>().unwrap(), q);
        assert_eq!("[-1,-2,1,-3,1]".parse::<IntPoly>().unwrap(), q);
        assert_eq!(
            "- x + 3*x**2 + 7".parse::<IntPoly>().unwrap(),
            p(&[7, -1, 3])
        );
        assert_eq!("0".parse::<IntPoly>().unwrap(), IntPoly::zero());
    }

    #[test]
    fn parse_errors_report_position() {
        match "x^2 -+ 1".parse::<IntPoly>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            "x^".parse::<IntPoly>(),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            "x y".parse::<IntPoly>(),
            Err(Error::Parse { pos: 2, .. })
        ));
    }

    #[test]
    fn json_form() {
        let q = p(&[-1, -1, 1]);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[-1,-1,1]");
        let big = IntPoly::new(vec![BigInt::from(1) << 80, BigInt::one()]);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), big);
    }

    #[test]
    fn taylor_and_scale() {
        let q = p(&[-1, -1, 1]);
        // q(x+1) = x^2 + x - 1
        assert_eq!(q.taylor_shift(&BigInt::one()), p(&[-1, 1, 1]));
        assert_eq!(q.scale_x(&BigInt::from(2)), p(&[-1, -2, 4]));
        assert_eq!(q.negate_x(), p(&[-1, 1, 1]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
            prop::collection::vec(-20i64..=20, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64(&c))
        }

        proptest! {
            #[test]
            fn reciprocal_is_an_involution(mut c in prop::collection::vec(-20i64..=20, 2..8)) {
                if c[0] == 0 { c[0] = 3; }
                let last = c.len() - 1;
                if c[last] == 0 { c[last] = -2; }
                let q = IntPoly::from_i64(&c);
                prop_assert_eq!(q.reciprocal().unwrap().reciprocal().unwrap(), q.normalized());
            }

            #[test]
            fn plus_minus_shifts_sum(f in poly(5), g in poly(5), n in 0usize..6) {
                let plus = IntPoly::compose_shift(&f, n, &g, 1);
                let minus = IntPoly::compose_shift(&f, n, &g, -1);
                prop_assert_eq!(&plus + &minus, f.shift(n).scale(&BigInt::from(2)));
            }

            #[test]
            fn squarefree_part_divides(a in poly(3), b in poly(3)) {
                let q = &(&a * &a) * &b;
                prop_assume!(q.deg() >= 1);
                let s = q.squarefree_part();
                prop_assert!(q.div_exact(&s).is_some() || q.scale(&s.lead()).pseudo_rem(&s).is_zero());
                prop_assert_eq!(s.gcd(&s.derivative()).deg(), 0);
            }

            #[test]
            fn stripped_has_no_small_cyclotomic_factor(a in poly(4), k in 1u64..13) {
                prop_assume!(a.deg() >= 1);
                let q = &a * &cyclotomic(k);
                let bound = 2 * (q.deg() * q.deg()) as u64;
                let (s, orders) = q.strip_cyclotomic(bound);
                prop_assert!(orders.contains(&k));
                for j in 1..=bound {
                    prop_assert!(s.div_exact(&cyclotomic(j)).is_none());
                }
            }

            #[test]
            fn text_form_round_trips(a in poly(8)) {
                prop_assert_eq!(a.to_string().parse::<IntPoly>().unwrap(), a);
            }
        }
    }
}
