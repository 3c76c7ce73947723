//! Limits of family roots as `n` grows: Rouché tracking, minimal moduli,
//! roots of unity and the hull of small roots.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::rootlab::{all_roots, min_modulus, ModulusBound, RootDisk};

use super::{family_poly, FamilyId, FamilyKind};

/// Relative slack for `f64` bound arithmetic.
const SLACK: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KappaSeries {
    A,
    B,
}

/// Smallest root modulus of `x^r - x^(r-1) + 1` (series A) or
/// `x^r - x + 1` (series B); `r >= 2`.
pub fn kappa(series: KappaSeries, r: u32, prec: u32) -> Result<ModulusBound> {
    if r < 2 {
        return Err(Error::InvalidArgument("kappa needs r >= 2".into()));
    }
    let r = r as usize;
    let mut c = vec![BigInt::from(0); r + 1];
    c[0] = BigInt::one();
    c[r] = BigInt::one();
    match series {
        KappaSeries::A => c[r - 1] -= 1,
        KappaSeries::B => c[1] -= 1,
    }
    min_modulus(&IntPoly::new(c), prec)
}

#[derive(Clone, Debug, Serialize)]
pub struct TrackPoint {
    pub n: u32,
    pub re: f64,
    pub im: f64,
    pub radius: f64,
    /// Distance from the root's center to the target.
    pub distance: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Trajectory {
    pub target_re: f64,
    pub target_im: f64,
    /// The target is a root of `f` outside the unit disk (`true`) or of `g`
    /// inside it (`false`).
    pub outer: bool,
    /// Multiplicity of the target, which is the number of roots in the disk.
    pub multiplicity: usize,
    /// Radius of the disk around the target on which Rouché is applied.
    pub disk_radius: f64,
    /// Least `n` from which the Rouché inequality holds on that circle.
    pub certified_from: Option<u32>,
    pub points: Vec<TrackPoint>,
}

impl Trajectory {
    /// CSV with columns `n,re,im,radius`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,re,im,radius\n");
        for p in &self.points {
            s.push_str(&format!(
                "{},{:.17e},{:.17e},{:.3e}\n",
                p.n, p.re, p.im, p.radius
            ));
        }
        s
    }
}

/// Roots of `p` with multiplicities, from its squarefree decomposition.
fn roots_with_mult(p: &IntPoly, prec: u32) -> Result<Vec<(RootDisk, usize)>> {
    let mut out = Vec::new();
    for (fac, k) in p.squarefree_decomposition() {
        if fac.deg() == 0 {
            continue;
        }
        for d in all_roots(&fac, prec)?.roots {
            out.push((d, k));
        }
    }
    Ok(out)
}

fn abs_lead(p: &IntPoly) -> f64 {
    p.lead().abs().to_f64().unwrap_or(f64::INFINITY)
}

/// Upper bound of `|p(z)|` for `|z| <= rho`.
fn upper_on(p: &IntPoly, rho: f64) -> f64 {
    let mut s = 0.0;
    for c in p.coeffs().iter().rev() {
        s = s * rho + c.abs().to_f64().unwrap_or(f64::INFINITY);
    }
    s * (1.0 + SLACK)
}

/// Lower bound of `|p(z)|` on the circle `|z - a| = eps`, where `roots`
/// are the roots of `p` and `self_idx` is the one inside the circle.
fn lower_on_circle(
    p: &IntPoly,
    roots: &[(RootDisk, usize)],
    self_idx: usize,
    a: Complex64,
    eps: f64,
) -> f64 {
    let mut v = abs_lead(p);
    for (i, (d, k)) in roots.iter().enumerate() {
        let dist = if i == self_idx {
            eps - d.radius_f64()
        } else {
            (d.center_c64() - a).norm() - eps - d.radius_f64()
        };
        v *= dist.max(0.0).powi(*k as i32);
    }
    v * (1.0 - SLACK)
}

fn nearest(roots: &[(RootDisk, usize)], t: Complex64) -> Option<(usize, f64)> {
    roots
        .iter()
        .enumerate()
        .map(|(i, (d, _))| (i, (d.center_c64() - t).norm()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
}

/// Half the gap to the other roots and to the unit circle.
fn rouche_radius(roots: &[(RootDisk, usize)], i: usize) -> f64 {
    let (d, _) = &roots[i];
    let a = d.center_c64();
    let mut eps = 0.5 * ((a.norm() - 1.0).abs() - d.radius_f64());
    for (j, (e, _)) in roots.iter().enumerate() {
        if j != i {
            eps = eps.min(0.5 * ((e.center_c64() - a).norm() - e.radius_f64() - d.radius_f64()));
        }
    }
    eps
}

/// Follows the root of `f x^n + g` that tends to `target` as `n` grows.
/// `target` must be within `tol` of a root of `f` outside the unit disk or
/// of a root of `g` inside it.
pub fn rouche_limit_track(
    f: &IntPoly,
    g: &IntPoly,
    target: Complex64,
    tol: f64,
    ns: &[u32],
    prec: u32,
) -> Result<Trajectory> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("f must be nonzero".into()));
    }
    let f_roots = roots_with_mult(f, prec)?;
    let g_roots = if g.deg() > 0 {
        roots_with_mult(g, prec)?
    } else {
        Vec::new()
    };
    let pick = |roots: &[(RootDisk, usize)], outside: bool| {
        nearest(roots, target).filter(|&(i, d)| {
            let (lo, hi) = roots[i].0.modulus(64);
            let side = if outside {
                lo.to_f64() > 1.0
            } else {
                hi.to_f64() < 1.0
            };
            d <= tol + roots[i].0.radius_f64() && side
        })
    };
    let (outer, roots, owner, i) = if let Some((i, _)) = pick(&f_roots, true) {
        (true, &f_roots, f, i)
    } else if let Some((i, _)) = pick(&g_roots, false) {
        (false, &g_roots, g, i)
    } else {
        return Err(Error::NotARoot(format!(
            "{target} is neither a root of f outside the unit disk nor a root of g inside it"
        )));
    };
    let (disk, mult) = (&roots[i].0, roots[i].1);
    let a = disk.center_c64();
    let eps = rouche_radius(roots, i);
    let certified_from = if eps > 0.0 {
        let own = lower_on_circle(owner, roots, i, a, eps);
        let (other, rho) = if outer {
            (g, a.norm() + eps)
        } else {
            (f, a.norm() + eps)
        };
        let other_up = upper_on(other, rho);
        // outer: |f| (|a| - eps)^n > |g|; inner: |g| > |f| (|a| + eps)^n
        let base = if outer {
            (a.norm() - eps) * (1.0 - SLACK)
        } else {
            (a.norm() + eps) * (1.0 + SLACK)
        };
        let holds = |n: u32| {
            let zn = base.powi(n as i32);
            if outer {
                own * zn > other_up
            } else {
                own > other_up * zn
            }
        };
        if own <= 0.0 {
            None
        } else if other_up == 0.0 || holds(0) {
            Some(0)
        } else {
            let guess = ((other_up / own).ln().abs() / base.ln().abs()).floor();
            if guess.is_finite() && guess < 1e7 {
                let mut n = (guess as u32).saturating_sub(2);
                while !holds(n) {
                    n += 1;
                }
                Some(n)
            } else {
                None
            }
        }
    } else {
        None
    };
    let mut points = Vec::with_capacity(ns.len());
    for &n in ns {
        let p = IntPoly::compose_shift(f, n as usize, g, 1);
        let prs = roots_with_mult(&p, prec)?;
        let (j, distance) = nearest(&prs, a)
            .ok_or_else(|| Error::InvalidArgument("f x^n + g is constant".into()))?;
        let d = &prs[j].0;
        points.push(TrackPoint {
            n,
            re: d.re(),
            im: d.im(),
            radius: d.radius_f64(),
            distance,
        });
    }
    Ok(Trajectory {
        target_re: a.re,
        target_im: a.im,
        outer,
        multiplicity: mult,
        disk_radius: eps,
        certified_from,
        points,
    })
}

/// Largest distance from an `(r+1)`-th root of unity to the nearest root of
/// `Psi^±_{A,r,n}` inside the unit disk, with certification radii added.
pub fn roots_of_unity_residual(r: u32, n: u32, sign: i8, prec: u32) -> Result<f64> {
    let id = FamilyId::family(FamilyKind::PsiA, r, n, sign)?;
    let p = family_poly(&id);
    let inside: Vec<(Complex64, f64)> = roots_with_mult(&p, prec)?
        .into_iter()
        .filter(|(d, _)| d.modulus(64).1.to_f64() < 1.0)
        .map(|(d, _)| (d.center_c64(), d.radius_f64()))
        .collect();
    if inside.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "{id} has no roots inside the unit disk"
        )));
    }
    let k = r + 1;
    let mut worst: f64 = 0.0;
    for j in 0..k {
        let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / k as f64);
        let best = inside
            .iter()
            .map(|(z, rad)| (z - zeta).norm() + rad)
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(best);
    }
    Ok(worst * (1.0 + SLACK))
}

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

/// Convex hull in counter-clockwise order.
fn convex_hull(mut pts: Vec<Complex64>) -> Vec<Complex64> {
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Complex64> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Complex64>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2
                && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Radius of the largest disk about 0 inside the hull of the roots of
/// `(x^2 - x - 1) x^n + 1` inside the unit disk, after shrinking the hull
/// by the largest certification radius. Zero if 0 is not inside.
pub fn hull_inradius(n: u32, prec: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let p = family_poly(&FamilyId::family(FamilyKind::PsiB, 1, n, 1)?);
    let set = all_roots(&p.squarefree_part(), prec)?;
    let inside: Vec<&RootDisk> = set
        .roots
        .iter()
        .filter(|d| d.modulus(64).1.to_f64() < 1.0)
        .collect();
    let shrink = inside.iter().map(|d| d.radius_f64()).fold(0.0, f64::max);
    let hull = convex_hull(inside.iter().map(|d| d.center_c64()).collect());
    if hull.len() < 3 {
        return Ok(0.0);
    }
    let mut rad = f64::INFINITY;
    for k in 0..hull.len() {
        let (a, b) = (hull[k], hull[(k + 1) % hull.len()]);
        // signed distance from 0 to the edge line, positive on the inner side
        let d = cross(a, b, Complex64::new(0.0, 0.0)) / (b - a).norm();
        rad = rad.min(d);
    }
    Ok((rad - shrink - 1e-12).max(0.0))
}

/// Whether the closed disk `|z| <= radius` lies inside the hull of the roots
/// of `(x^2 - x - 1) x^n + 1` inside the unit disk. Conservative: `false`
/// unless containment survives shrinking by the certification radii.
pub fn hull_contains_disk(n: u32, radius: &BigRational, prec: u32) -> Result<bool> {
    if !radius.is_positive() || radius >= &BigRational::one() {
        return Err(Error::InvalidArgument("radius must lie in (0, 1)".into()));
    }
    let r = radius.to_f64().unwrap_or(1.0);
    Ok(hull_inradius(n, prec)? > r * (1.0 + SLACK))
}
