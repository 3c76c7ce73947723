//! Exact detection of roots on a circle.
//!
//! A root `z` with `|z| = 1` of a real polynomial `P` is also a root of the
//! reversed polynomial `P*`, so all such roots divide `G = gcd(P, P*)`. After
//! removing `x - 1` and `x + 1`, `G` is palindromic of even degree `2k` and
//! `G(x) = x^k H(x + 1/x)`; unimodular roots of `G` correspond two-to-one to
//! real roots of `H` in `(-2, 2)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::intpoly::IntPoly;
use crate::sturm::Sturm;

/// Number of distinct roots of `p` on the unit circle.
pub fn unit_circle_root_count(p: &IntPoly) -> usize {
    if p.deg() == 0 {
        return 0;
    }
    let (sq, _) = p.squarefree_part().strip_zero_roots();
    let mut count = 0;
    let mut q = sq;
    for lin in [IntPoly::from_i64(&[-1, 1]), IntPoly::from_i64(&[1, 1])] {
        if let Some(r) = q.div_exact(&lin) {
            count += 1;
            q = r;
        }
    }
    if q.deg() == 0 {
        return count;
    }
    let g = q.gcd(&q.reversed());
    if g.deg() == 0 {
        return count;
    }
    let h =
        trace_polynomial(&g).expect("self-reciprocal factor without roots at +-1 is palindromic");
    let two = BigRational::from_integer(BigInt::from(2));
    count + 2 * Sturm::new(&h).count_open(&-two.clone(), &two)
}

/// For a palindromic `g` of degree `2k`, the degree-`k` polynomial `H` with
/// `g(x) = x^k H(x + 1/x)`. Returns `None` if `g` is not palindromic.
pub fn trace_polynomial(g: &IntPoly) -> Option<IntPoly> {
    let n = g.deg();
    if n % 2 == 1 {
        return None;
    }
    let c = g.coeffs();
    if (0..=n).any(|j| c[j] != c[n - j]) {
        return None;
    }
    let k = n / 2;
    // x^j + x^-j as a polynomial in t = x + 1/x.
    let t = IntPoly::x();
    let mut prev = IntPoly::constant(BigInt::from(2));
    let mut cur = t.clone();
    let mut h = IntPoly::constant(c[k].clone());
    for j in 1..=k {
        if j > 1 {
            let next = &(&t * &cur) - &prev;
            prev = cur;
            cur = next;
        }
        h = &h + &cur.scale(&c[k + j]);
    }
    Some(h)
}

/// `den^deg * p(center + radius * x)` as an integer polynomial, for rational
/// real `center` and `radius`: roots of `p` on the circle `|z - center| =
/// radius` become roots of the result on the unit circle.
pub fn recentre(p: &IntPoly, center: &BigRational, radius: &BigRational) -> IntPoly {
    // center + radius x = (a + b x) / den
    let den = center.denom() * radius.denom();
    let a = center.numer() * radius.denom();
    let b = radius.numer() * center.denom();
    let lin = IntPoly::new(vec![a, b]);
    let d = p.deg();
    let mut out = IntPoly::zero();
    let mut lin_pow = IntPoly::one();
    let mut den_pows = vec![BigInt::one(); d + 1];
    for k in 1..=d {
        den_pows[k] = &den_pows[k - 1] * &den;
    }
    for (k, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = &out + &lin_pow.scale(&(c * &den_pows[d - k]));
        }
        lin_pow = &lin_pow * &lin;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_unimodular_roots() {
        assert_eq!(unit_circle_root_count(&IntPoly::from_i64(&[-1, -1, 1])), 0);
        assert_eq!(unit_circle_root_count(&IntPoly::from_i64(&[1, 1, 1])), 2);
        assert_eq!(unit_circle_root_count(&IntPoly::from_i64(&[-1, 0, 1])), 2);
        // Lehmer's polynomial: a Salem number, 8 roots on the circle
        let lehmer = IntPoly::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert_eq!(unit_circle_root_count(&lehmer), 8);
        // x^2 - x + 1 times golden: 2
        let p = &IntPoly::from_i64(&[1, -1, 1]) * &IntPoly::from_i64(&[-1, -1, 1]);
        assert_eq!(unit_circle_root_count(&p), 2);
    }

    #[test]
    fn trace_polynomial_of_cyclotomics() {
        // x^2 + x + 1 = x (t + 1)
        assert_eq!(
            trace_polynomial(&IntPoly::from_i64(&[1, 1, 1])),
            Some(IntPoly::from_i64(&[1, 1]))
        );
        // x^4 + 1 = x^2 (t^2 - 2)
        assert_eq!(
            trace_polynomial(&IntPoly::from_i64(&[1, 0, 0, 0, 1])),
            Some(IntPoly::from_i64(&[-2, 0, 1]))
        );
        assert_eq!(trace_polynomial(&IntPoly::from_i64(&[-1, -1, 1])), None);
    }

    #[test]
    fn recentred_circle() {
        // x^2 - 4 has the root 2 on the circle |z - 1| = 1
        let p = IntPoly::from_i64(&[-4, 0, 1]);
        let q = recentre(
            &p,
            &BigRational::from_integer(1.into()),
            &BigRational::from_integer(1.into()),
        );
        // p(1 + x) = x^2 + 2x - 3, root x = 1 on the unit circle
        assert_eq!(q, IntPoly::from_i64(&[-3, 2, 1]));
        assert_eq!(unit_circle_root_count(&q), 1);
    }
}
