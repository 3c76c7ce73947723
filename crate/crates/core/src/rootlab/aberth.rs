//! Simultaneous root approximation (Aberth–Ehrlich), first in `f64` and then
//! at arbitrary precision.

use num_complex::Complex64;

use super::cx::Cx;
use crate::dyadic::Dyadic;

/// Aberth iteration in double precision. Returns approximations that are
/// usually accurate to near machine precision; the multi-precision stage
/// takes over from there.
pub fn aberth_f64(coeffs: &[f64]) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    let lead = coeffs[d];
    // Fujiwara-style radius estimate for the initial circle.
    let mut rad: f64 = 0.0;
    for (k, c) in coeffs.iter().enumerate().take(d) {
        let v = (c / lead).abs().powf(1.0 / (d - k) as f64);
        rad = rad.max(v);
    }
    let rad = if rad > 0.0 && rad.is_finite() {
        rad
    } else {
        1.0
    };
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.7;
            Complex64::from_polar(rad, t)
        })
        .collect();
    let dcoeffs: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();
    let horner = |c: &[f64], x: Complex64| {
        c.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * x + a)
    };
    for _ in 0..2000 {
        let mut worst: f64 = 0.0;
        for i in 0..d {
            let zi = z[i];
            let pv = horner(coeffs, zi);
            if pv == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = pv / horner(&dcoeffs, zi);
            let mut s = Complex64::new(0.0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    s += 1.0 / (zi - zj);
                }
            }
            let w = ratio / (1.0 - ratio * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                continue;
            }
            z[i] = zi - w;
            worst = worst.max(w.norm() / zi.norm().max(1e-300));
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

/// Polishes `z` by Aberth iteration at `prec` bits until every correction is
/// below `2^-prec` relative to its root (absolute for roots near zero).
/// Returns whether that tolerance was reached.
pub fn refine_mp(coeffs: &[Dyadic], z: &mut [Cx], prec: u64) -> bool {
    let d = z.len();
    let wp = prec + 32;
    let dcoeffs: Vec<Dyadic> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * &Dyadic::from_i64(k as i64))
        .collect();
    let one = Cx::real(Dyadic::one());
    let target = prec as i64 + 2;
    let mut calm_rounds = 0;
    for _ in 0..200 {
        let mut all_small = true;
        let mut next = Vec::with_capacity(d);
        for i in 0..d {
            let zi = &z[i];
            let pv = Cx::eval_rounded(coeffs, zi, wp);
            if pv.is_zero() {
                next.push(zi.clone());
                continue;
            }
            let dv = Cx::eval_rounded(&dcoeffs, zi, wp);
            let mut s = Cx::default();
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    let diff = zi.sub(zj);
                    if !diff.is_zero() {
                        s = s.add(&one.div(&diff, wp)).round(wp);
                    }
                }
            }
            let w = if dv.is_zero() {
                pv.clone()
            } else {
                let ratio = pv.div(&dv, wp);
                let den = one.sub(&ratio.mul(&s)).round(wp);
                if den.is_zero() {
                    ratio
                } else {
                    ratio.div(&den, wp)
                }
            };
            let zm = zi.magnitude();
            let limit = if zm == i64::MIN {
                -target
            } else {
                zm.max(-target) - target
            };
            if !w.is_zero() && w.magnitude() > limit {
                all_small = false;
            }
            next.push(zi.sub(&w).round(wp));
        }
        z.clone_from_slice(&next);
        if all_small {
            calm_rounds += 1;
            if calm_rounds >= 2 {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_stage_finds_golden_ratio() {
        let mut z = aberth_f64(&[-1.0, -1.0, 1.0]);
        z.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert!((z[0].re + 0.6180339887498949).abs() < 1e-13);
        assert!((z[1].re - 1.618033988749895).abs() < 1e-13);
    }

    #[test]
    fn mp_stage_reaches_high_precision() {
        let coeffs: Vec<Dyadic> = [-2, 0, 1].iter().map(|&c| Dyadic::from_i64(c)).collect();
        let mut z: Vec<Cx> = aberth_f64(&[-2.0, 0.0, 1.0])
            .into_iter()
            .map(Cx::from_c64)
            .collect();
        assert!(refine_mp(&coeffs, &mut z, 200));
        let pos = z.iter().find(|c| c.re.signum() > 0).unwrap();
        let sq = pos.re.round(200, crate::dyadic::Round::Nearest);
        let err = (&(&sq * &sq) - &Dyadic::from_i64(2)).abs();
        assert!(err.magnitude() < -190);
    }
}
