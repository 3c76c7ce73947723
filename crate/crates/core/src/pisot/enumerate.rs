//! Exhaustive search for Pisot numbers in an interval.
//!
//! A monic degree-`d` minimal polynomial of a Pisot number `q` factors over
//! the reals as `(x - q) R(x)` where `R` is monic with all roots in the open
//! unit disk, so `|r_k| <= C(d-1, k)`. Writing `P = sum p_k x^k`, the
//! cofactor satisfies `r_{k-1} = p_k + q r_k`. The search fixes
//! `p_{d-1}, p_{d-2}, ...` in turn, tracking an interval for `r_{k-1}` over
//! a narrow range of `q`, and only keeps integers `p_k` whose `r_{k-1}` can
//! still meet its bound. This is much tighter than the plain Vieta box and
//! exhaustive by construction; every leaf is then decided exactly.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtOrd};

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{classify_pisot, Classification, PisotRecord};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    /// Maximum number of search nodes over all degrees.
    pub node_budget: u64,
    /// Precision of the root disks in the returned records.
    pub precision: u32,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub workers: Option<usize>,
    /// Number of slices of the `q` range searched separately.
    pub slices: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            node_budget: 5_000_000_000,
            precision: 128,
            workers: None,
            slices: 32,
        }
    }
}

/// Result of a search. When `complete` is false the node budget ran out and
/// `records` is a subset of the answer that may depend on scheduling.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub records: Vec<PisotRecord>,
    /// Integer Pisot numbers sitting exactly on an endpoint.
    pub endpoint_hits: Vec<IntPoly>,
    /// Candidates whose classification was undecided at the precision cap.
    pub undecided: Vec<IntPoly>,
    pub nodes: u64,
    pub complete: bool,
}

/// Minimal polynomials of all Pisot numbers in the open interval `(a, b)` of
/// degree at most `max_degree`, sorted by value then degree.
pub fn enumerate_pisot(
    a: &BigRational,
    b: &BigRational,
    max_degree: usize,
) -> Result<Vec<PisotRecord>> {
    let e = enumerate_pisot_with(a, b, max_degree, &EnumerateOptions::default())?;
    if !e.complete {
        return Err(Error::BudgetExceeded(e.nodes));
    }
    Ok(e.records)
}

/// [`enumerate_pisot`] with explicit options and the full outcome.
pub fn enumerate_pisot_with(
    a: &BigRational,
    b: &BigRational,
    max_degree: usize,
    opts: &EnumerateOptions,
) -> Result<Enumeration> {
    if a < &BigRational::one() || a >= b {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= a < b, got ({a}, {b})"
        )));
    }
    if max_degree == 0 {
        return Err(Error::InvalidArgument(
            "max_degree must be at least 1".into(),
        ));
    }
    if b.to_f64().is_none_or(|v| v > 1e6) || max_degree > 40 {
        return Err(Error::InvalidArgument("search range too large".into()));
    }
    match opts.workers {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            Ok(pool.install(|| run(a, b, max_degree, opts)))
        }
        None => Ok(run(a, b, max_degree, opts)),
    }
}

fn run(
    a: &BigRational,
    b: &BigRational,
    max_degree: usize,
    opts: &EnumerateOptions,
) -> Enumeration {
    let mut out = Enumeration {
        records: Vec::new(),
        endpoint_hits: Vec::new(),
        undecided: Vec::new(),
        nodes: 0,
        complete: true,
    };

    // Degree 1: the integers k >= 2 in the interval.
    let lo_int = a.floor().to_integer();
    let hi_int = b.ceil().to_integer();
    let mut k = lo_int.clone().max(BigInt::from(2));
    while k <= hi_int {
        let kr = BigRational::from_integer(k.clone());
        let lin = IntPoly::new(vec![-k.clone(), BigInt::one()]);
        if &kr == a || &kr == b {
            out.endpoint_hits.push(lin);
        } else if &kr > a && &kr < b {
            if let Classification::Pisot(r) = classify_pisot(&lin, opts.precision).expect("nonzero")
            {
                out.records.push(*r);
            }
        }
        k += 1;
    }

    let search = Search::new(a, b, opts.node_budget);
    let mut candidates: BTreeSet<Vec<i64>> = BTreeSet::new();
    for d in 2..=max_degree {
        let tasks: Vec<(usize, i64)> = (0..opts.slices.max(1))
            .flat_map(|s| {
                search
                    .top_choices(d, s, opts.slices.max(1))
                    .into_iter()
                    .map(move |p| (s, p))
            })
            .collect();
        let found: Vec<Vec<Vec<i64>>> = tasks
            .par_iter()
            .map(|&(s, p_top)| search.run_branch(d, s, opts.slices.max(1), p_top))
            .collect();
        candidates.extend(found.into_iter().flatten());
    }
    out.nodes = search.nodes.load(AtOrd::Relaxed);
    out.complete = !search.exhausted.load(AtOrd::Relaxed);

    let cands: Vec<Vec<i64>> = candidates.into_iter().collect();
    let classified: Vec<(IntPoly, Option<Classification>)> = cands
        .par_iter()
        .map(|c| {
            let p = IntPoly::from_i64(c);
            let cl = classify_pisot(&p, opts.precision).ok();
            (p, cl)
        })
        .collect();
    for (p, cl) in classified {
        match cl {
            Some(Classification::Pisot(r)) if r.poly == p => out.records.push(*r),
            Some(Classification::Undecided) | None => out.undecided.push(p),
            _ => {}
        }
    }
    out.records.sort_by(|x, y| x.cmp_value(y));
    out
}

struct Search {
    b: BigRational,
    a_f: f64,
    b_f: f64,
    a_fit: SignAt,
    b_fit: SignAt,
    budget: u64,
    nodes: AtomicU64,
    exhausted: AtomicBool,
}

/// Slack added to every floating interval so that rounding can only widen
/// the search.
const EPS: f64 = 1e-7;

/// Enclosure of `q * r` for `q` in `[ql, qh]` (positive) and `r` in `[rl, rh]`.
fn mul_iv(ql: f64, qh: f64, rl: f64, rh: f64) -> (f64, f64) {
    let c = [ql * rl, ql * rh, qh * rl, qh * rh];
    let lo = c.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = c.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (lo - EPS, hi + EPS)
}

struct Branch<'a> {
    d: usize,
    ql: f64,
    qh: f64,
    bounds: Vec<f64>,
    coeffs: Vec<i64>,
    nodes: u64,
    out: Vec<Vec<i64>>,
    search: &'a Search,
    stopped: bool,
}

impl Search {
    fn new(a: &BigRational, b: &BigRational, budget: u64) -> Self {
        Search {
            b: b.clone(),
            a_f: a.to_f64().unwrap(),
            a_fit: SignAt::new(a),
            b_fit: SignAt::new(b),
            b_f: b.to_f64().unwrap(),
            budget,
            nodes: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }

    fn slice(&self, s: usize, slices: usize) -> (f64, f64) {
        let w = (self.b_f - self.a_f) / slices as f64;
        let lo = self.a_f + w * s as f64;
        let hi = if s + 1 == slices { self.b_f } else { lo + w };
        (lo - EPS, hi + EPS)
    }

    fn bounds(d: usize) -> Vec<f64> {
        (0..d)
            .map(|k| binomial(d as u64 - 1, k as u64) as f64 + EPS)
            .collect()
    }

    /// Admissible integers `p` with `p + q*r` meeting `[-c, c]`.
    fn range(qr: (f64, f64), c: f64) -> (i64, i64) {
        ((-c - qr.1).ceil() as i64, (c - qr.0).floor() as i64)
    }

    fn top_choices(&self, d: usize, s: usize, slices: usize) -> Vec<i64> {
        let (ql, qh) = self.slice(s, slices);
        let c = Self::bounds(d);
        let (lo, hi) = Self::range((ql - EPS, qh + EPS), c[d - 2]);
        (lo..=hi).collect()
    }

    fn run_branch(&self, d: usize, s: usize, slices: usize, p_top: i64) -> Vec<Vec<i64>> {
        if self.exhausted.load(AtOrd::Relaxed) {
            return Vec::new();
        }
        let (ql, qh) = self.slice(s, slices);
        let mut coeffs = vec![0i64; d + 1];
        coeffs[d] = 1;
        coeffs[d - 1] = p_top;
        let bounds = Self::bounds(d);
        let r = (
            (p_top as f64 + ql - EPS).max(-bounds[d - 2]),
            (p_top as f64 + qh + EPS).min(bounds[d - 2]),
        );
        let mut br = Branch {
            d,
            ql,
            qh,
            bounds,
            coeffs,
            nodes: 0,
            out: Vec::new(),
            search: self,
            stopped: false,
        };
        if r.0 <= r.1 {
            br.descend(d - 1, r);
        }
        self.charge(br.nodes);
        br.out
    }

    fn charge(&self, n: u64) -> bool {
        let total = self.nodes.fetch_add(n, AtOrd::Relaxed) + n;
        if total > self.budget {
            self.exhausted.store(true, AtOrd::Relaxed);
            false
        } else {
            true
        }
    }
}

impl Branch<'_> {
    /// `r` encloses `r_{k-1}`; chooses `p_{k-1}`.
    fn descend(&mut self, k: usize, r: (f64, f64)) {
        if self.stopped {
            return;
        }
        self.nodes += 1;
        if self.nodes >= 1 << 14 {
            let n = std::mem::take(&mut self.nodes);
            if !self.search.charge(n) || self.search.exhausted.load(AtOrd::Relaxed) {
                self.stopped = true;
                return;
            }
        }
        let qr = mul_iv(self.ql, self.qh, r.0, r.1);
        let j = k - 1;
        if j == 0 {
            // p_0 = -q r_0, a nonzero integer of modulus below b.
            let lo = (-qr.1).ceil() as i64;
            let hi = (-qr.0).floor() as i64;
            for p0 in lo..=hi {
                if p0 != 0 && ((p0.unsigned_abs() as f64) < self.search.b_f + EPS) {
                    self.coeffs[0] = p0;
                    self.leaf();
                }
            }
            return;
        }
        let c = self.bounds[j - 1];
        let (lo, hi) = Search::range(qr, c);
        for p in lo..=hi {
            let nr = (
                (p as f64 + qr.0 - EPS).max(-c),
                (p as f64 + qr.1 + EPS).min(c),
            );
            if nr.0 > nr.1 {
                continue;
            }
            self.coeffs[j] = p;
            self.descend(j, nr);
        }
    }

    fn leaf(&mut self) {
        let c = &self.coeffs;
        let d = self.d;
        // P(1) < 0: the only real root above 1 is q.
        let at1: i64 = c.iter().sum();
        if at1 >= 0 {
            return;
        }
        // (-1)^d P(-1) > 0: no real root at or below -1.
        let atm1: i64 = c
            .iter()
            .enumerate()
            .map(|(i, &v)| if i % 2 == 0 { v } else { -v })
            .sum();
        if (if d.is_multiple_of(2) { atm1 } else { -atm1 }) <= 0 {
            return;
        }
        if BigRational::from_integer(BigInt::from(c[0].unsigned_abs())) >= self.search.b {
            return;
        }
        if self.search.a_fit.sign(c) >= 0 || self.search.b_fit.sign(c) <= 0 {
            return;
        }
        // A Pisot polynomial has all but one root inside |z| < 65/64.
        let inside = schur_cohn_inside_f64(c, 65.0 / 64.0)
            .or_else(|| schur_cohn_inside(&IntPoly::from_i64(c), 65, 64));
        if inside.is_some_and(|n| n != d - 1) {
            return;
        }
        self.out.push(c.clone());
    }
}

/// Exact sign of an integer polynomial at a fixed rational, using `i128`
/// when it cannot overflow.
struct SignAt {
    x: BigRational,
    small: Option<(i128, i128)>,
}

impl SignAt {
    fn new(x: &BigRational) -> Self {
        let small = match (x.numer().to_i64(), x.denom().to_i64()) {
            (Some(n), Some(d)) if n.unsigned_abs() < 1 << 20 && d < 1 << 20 => {
                Some((n as i128, d as i128))
            }
            _ => None,
        };
        SignAt {
            x: x.clone(),
            small,
        }
    }

    /// Sign of `den^deg p(num/den)`, which is the sign of `p(x)`.
    fn sign(&self, c: &[i64]) -> i32 {
        if let Some((n, d)) = self.small {
            let mut acc: Option<i128> = Some(0);
            let mut dpow: i128 = 1;
            // Horner in num with den powers folded in from the top.
            for &ck in c.iter().rev() {
                acc = acc.and_then(|a| a.checked_mul(n)).and_then(|a| {
                    (ck as i128)
                        .checked_mul(dpow)
                        .and_then(|t| a.checked_add(t))
                });
                dpow = match dpow.checked_mul(d) {
                    Some(v) => v,
                    None => {
                        acc = None;
                        break;
                    }
                };
            }
            if let Some(v) = acc {
                return v.signum() as i32;
            }
        }
        IntPoly::from_i64(c).sign_at(&self.x)
    }
}

/// [`schur_cohn_inside`] for the disk `|z| < rho` in outward-rounded `f64`
/// interval arithmetic. `None` whenever a sign cannot be decided, so the
/// answer, when given, is exact.
pub(crate) fn schur_cohn_inside_f64(c: &[i64], rho: f64) -> Option<usize> {
    #[derive(Clone, Copy)]
    struct Iv(f64, f64);
    fn mul(a: Iv, b: Iv) -> Iv {
        let p = [a.0 * b.0, a.0 * b.1, a.1 * b.0, a.1 * b.1];
        Iv(
            p.iter().cloned().fold(f64::INFINITY, f64::min).next_down(),
            p.iter()
                .cloned()
                .fold(f64::NEG_INFINITY, f64::max)
                .next_up(),
        )
    }
    fn sub(a: Iv, b: Iv) -> Iv {
        Iv((a.0 - b.1).next_down(), (a.1 - b.0).next_up())
    }
    let n = c.len() - 1;
    let r = Iv(rho.next_down(), rho.next_up());
    let mut f: Vec<Iv> = Vec::with_capacity(n + 1);
    let mut pow = Iv(1.0, 1.0);
    for &ck in c {
        f.push(mul(Iv(ck as f64, ck as f64), pow));
        pow = mul(pow, r);
    }
    let mut inside = 0;
    let mut sign = 1;
    for _ in 0..n {
        let m = f.len() - 1;
        let (a0, am) = (f[0], f[m]);
        let mut t: Vec<Iv> = (0..m)
            .map(|k| sub(mul(a0, f[k]), mul(am, f[m - k])))
            .collect();
        let g = t[0];
        if g.0 <= 0.0 && g.1 >= 0.0 || !g.0.is_finite() || !g.1.is_finite() {
            return None;
        }
        if g.1 < 0.0 {
            sign = -sign;
        }
        if sign < 0 {
            inside += 1;
        }
        // rescale by an exact power of two
        let big = t
            .iter()
            .map(|v| v.0.abs().max(v.1.abs()))
            .fold(0.0, f64::max);
        let e = big.log2().floor() as i32;
        let s = 2f64.powi(-e);
        for v in t.iter_mut() {
            *v = Iv(v.0 * s, v.1 * s);
        }
        f = t;
    }
    Some(inside)
}

/// Number of roots of `p` in the open disk `|z| < num/den` by the
/// Schur-Cohn recursion, or `None` when the recursion degenerates (which
/// includes roots on the circle).
///
/// With `T f = f(0) f - lead(f) f*` and `g_k = (T^k f)(0)`, if every `g_k`
/// is nonzero then the count is the number of negative partial products
/// `g_1 g_2 ... g_k`.
pub(crate) fn schur_cohn_inside(p: &IntPoly, num: i64, den: i64) -> Option<usize> {
    let n = p.deg();
    // f(x) = den^n p(num x / den) has its roots scaled by den/num.
    let (num, den) = (BigInt::from(num), BigInt::from(den));
    let mut f: Vec<BigInt> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * num.pow(k as u32) * den.pow((n - k) as u32))
        .collect();
    let mut inside = 0;
    let mut sign = 1;
    for _ in 0..n {
        let m = f.len() - 1;
        let (a0, am) = (f[0].clone(), f[m].clone());
        let mut t: Vec<BigInt> = (0..m).map(|k| &a0 * &f[k] - &am * &f[m - k]).collect();
        let g = &t[0];
        if g.is_zero() {
            return None;
        }
        if g.is_negative() {
            sign = -sign;
        }
        if sign < 0 {
            inside += 1;
        }
        let content = t.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !content.is_one() {
            for c in t.iter_mut() {
                *c /= &content;
            }
        }
        f = t;
    }
    Some(inside)
}
