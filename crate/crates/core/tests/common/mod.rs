//! Independent oracle: every monic integer polynomial within the coefficient
//! bounds of a Pisot polynomial, rooted in `f64` by Durand-Kerner.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_complex::Complex64;

/// Roots of a polynomial given by ascending `f64` coefficients, leading
/// coefficient 1.
pub fn durand_kerner(c: &[f64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    let eval = |z: Complex64| {
        c.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &k| acc * z + k)
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Tolerance separating root moduli from 1.
const GAP: f64 = 1e-7;

/// Whether the roots describe a Pisot number in `(1, 2)` whose conjugates
/// all lie strictly inside the unit disk.
fn pisot_in_1_2(roots: &[Complex64]) -> bool {
    let mut outside = 0;
    for z in roots {
        let m = z.norm();
        if (m - 1.0).abs() <= GAP {
            return false;
        }
        if m > 1.0 {
            outside += 1;
            if z.im.abs() > GAP || z.re <= 1.0 + GAP || z.re >= 2.0 - GAP {
                return false;
            }
        }
    }
    outside == 1
}

/// Ascending coefficient vectors of the minimal polynomials of all Pisot
/// numbers in `(1, 2)` of degree `2..=max_degree`. A monic polynomial with
/// nonzero constant term, one root in `(1, 2)` and all others strictly
/// inside the unit disk is irreducible, so no factoring is needed.
pub fn oracle_pisot_1_2(max_degree: usize) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    for d in 2..=max_degree as i64 {
        // |e_k| <= C(d-1, k) + 2 C(d-1, k-1) for one root below 2 and d-1
        // roots in the unit disk
        let bounds: Vec<i64> = (1..=d)
            .map(|k| binom(d - 1, k) + 2 * binom(d - 1, k - 1))
            .collect();
        let mut e: Vec<i64> = bounds.iter().map(|b| -b).collect();
        loop {
            if e[d as usize - 1] != 0 {
                // coefficient of x^(d-k) is (-1)^k e_k
                let mut c = vec![0i64; d as usize + 1];
                c[d as usize] = 1;
                for k in 1..=d as usize {
                    c[d as usize - k] = if k % 2 == 0 { e[k - 1] } else { -e[k - 1] };
                }
                let cf: Vec<f64> = c.iter().map(|&x| x as f64).collect();
                if pisot_in_1_2(&durand_kerner(&cf)) {
                    out.insert(c);
                }
            }
            let mut k = 0;
            loop {
                if k == e.len() {
                    break;
                }
                if e[k] < bounds[k] {
                    e[k] += 1;
                    break;
                }
                e[k] = -bounds[k];
                k += 1;
            }
            if k == e.len() {
                break;
            }
        }
    }
    out
}
