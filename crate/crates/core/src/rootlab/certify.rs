//! A posteriori inclusion disks.
//!
//! For approximations `z_1..z_d` of the roots of a degree-`d` polynomial with
//! leading coefficient `a`, put `w_i = p(z_i) / (a * prod_{j != i} (z_i - z_j))`.
//! The union of the disks `D(z_i, d |w_i|)` contains every root, and each
//! connected component made of `k` disks holds exactly `k` roots. When the
//! disks are pairwise disjoint each holds exactly one root.

use num_bigint::BigInt;

use super::cx::Cx;
use super::RootDisk;
use crate::dyadic::{Dyadic, Round, BOUND_BITS};

/// Builds inclusion disks around `centers`, or `None` if two disks overlap.
/// `real_count` is the exact number of distinct real roots; disks meeting
/// the real axis are accepted as real roots only when their number matches.
pub fn certify(coeffs: &[BigInt], centers: &[Cx], real_count: usize) -> Option<Vec<RootDisk>> {
    let d = centers.len();
    if d == 0 {
        return Some(Vec::new());
    }
    let lead = Dyadic::from_bigint(coeffs.last().unwrap()).abs();
    let deg = Dyadic::from_i64(d as i64);

    // Lower bounds on pairwise distances, reused for the overlap test.
    let mut dist = vec![Dyadic::zero(); d * d];
    for i in 0..d {
        for j in (i + 1)..d {
            let lo = centers[i].sub(&centers[j]).abs_lower(BOUND_BITS);
            dist[i * d + j] = lo.clone();
            dist[j * d + i] = lo;
        }
    }

    let mut radii = Vec::with_capacity(d);
    for i in 0..d {
        let pv = Cx::eval_exact(coeffs, &centers[i]);
        if pv.is_zero() {
            radii.push(Dyadic::zero());
            continue;
        }
        let num = pv.abs_upper(BOUND_BITS);
        let mut den = lead.clone();
        for j in 0..d {
            if j != i {
                let dj = &dist[i * d + j];
                if dj.is_zero() {
                    return None;
                }
                den = den.mul_r(dj, Round::Down);
            }
        }
        radii.push(num.mul_r(&deg, Round::Up).div_r(&den, Round::Up));
    }

    let disjoint = |cs: &[Cx], dist: &[Dyadic]| {
        for i in 0..d {
            for j in (i + 1)..d {
                let need = radii[i].add_r(&radii[j], Round::Up);
                let have = if dist.is_empty() {
                    cs[i].sub(&cs[j]).abs_lower(BOUND_BITS)
                } else {
                    dist[i * d + j].clone()
                };
                if have <= need {
                    return false;
                }
            }
        }
        true
    };
    if !disjoint(centers, &dist) {
        return None;
    }

    // Identify the real roots. With disjoint disks every real root sits in a
    // distinct disk that meets the axis, so a matching count pins them down.
    let touches: Vec<bool> = (0..d).map(|i| centers[i].im.abs() <= radii[i]).collect();
    if touches.iter().filter(|&&t| t).count() != real_count {
        return None;
    }
    let projected: Vec<Cx> = centers
        .iter()
        .zip(&touches)
        .map(|(c, &t)| if t { Cx::real(c.re.clone()) } else { c.clone() })
        .collect();
    if real_count > 0 && !disjoint(&projected, &[]) {
        return None;
    }
    Some(
        projected
            .into_iter()
            .zip(radii)
            .zip(touches)
            .map(|((center, radius), real)| RootDisk {
                center,
                radius,
                real,
            })
            .collect(),
    )
}
