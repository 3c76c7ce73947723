//! Amara's limit points and regular families `f(x) x^n ± g(x)`.

mod limits;
mod n0;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::pisot::{classify_pisot, pisot_candidate, Classification, NotPisotReason, PisotRecord};
use crate::sturm::Sturm;

pub use limits::{
    hull_contains_disk, hull_inradius, kappa, roots_of_unity_residual, rouche_limit_track,
    KappaSeries, TrackPoint, Trajectory,
};
pub use n0::{
    compute_n0, sign_condition_holds, table2_rows, N0Certificate, Table2Check, Table2Row, TailBound,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyKind {
    PhiLimit,
    PsiLimit,
    ChiLimit,
    PhiA,
    PhiB,
    PhiC,
    PsiA,
    PsiB,
    ChiA,
    ChiB,
}

impl FamilyKind {
    pub const FAMILIES: [FamilyKind; 7] = [
        FamilyKind::PhiA,
        FamilyKind::PhiB,
        FamilyKind::PhiC,
        FamilyKind::PsiA,
        FamilyKind::PsiB,
        FamilyKind::ChiA,
        FamilyKind::ChiB,
    ];

    pub fn is_limit(self) -> bool {
        matches!(
            self,
            FamilyKind::PhiLimit | FamilyKind::PsiLimit | FamilyKind::ChiLimit
        )
    }

    /// Whether the kind carries the parameter `r`.
    pub fn has_r(self) -> bool {
        !matches!(
            self,
            FamilyKind::ChiLimit | FamilyKind::ChiA | FamilyKind::ChiB
        )
    }

    fn name(self) -> &'static str {
        match self {
            FamilyKind::PhiLimit => "PhiLimit",
            FamilyKind::PsiLimit => "PsiLimit",
            FamilyKind::ChiLimit => "Chi",
            FamilyKind::PhiA => "PhiA",
            FamilyKind::PhiB => "PhiB",
            FamilyKind::PhiC => "PhiC",
            FamilyKind::PsiA => "PsiA",
            FamilyKind::PsiB => "PsiB",
            FamilyKind::ChiA => "ChiA",
            FamilyKind::ChiB => "ChiB",
        }
    }

    fn from_name(s: &str) -> Option<FamilyKind> {
        Some(match s {
            "PhiLimit" => FamilyKind::PhiLimit,
            "PsiLimit" => FamilyKind::PsiLimit,
            "Chi" | "ChiLimit" => FamilyKind::ChiLimit,
            "PhiA" => FamilyKind::PhiA,
            "PhiB" => FamilyKind::PhiB,
            "PhiC" => FamilyKind::PhiC,
            "PsiA" => FamilyKind::PsiA,
            "PsiB" => FamilyKind::PsiB,
            "ChiA" => FamilyKind::ChiA,
            "ChiB" => FamilyKind::ChiB,
            _ => return None,
        })
    }
}

/// A limit point or one member of a regular family. Unused parameters are
/// zero: `r` for the chi kinds, `n` and `sign` for limit points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub r: u32,
    pub n: u32,
    pub sign: i8,
}

impl FamilyId {
    pub fn limit(kind: FamilyKind, r: u32) -> Result<FamilyId> {
        let id = FamilyId {
            kind,
            r,
            n: 0,
            sign: 0,
        };
        id.validate()?;
        Ok(id)
    }

    pub fn family(kind: FamilyKind, r: u32, n: u32, sign: i8) -> Result<FamilyId> {
        let id = FamilyId { kind, r, n, sign };
        id.validate()?;
        Ok(id)
    }

    pub fn chi() -> FamilyId {
        FamilyId {
            kind: FamilyKind::ChiLimit,
            r: 0,
            n: 0,
            sign: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidArgument(format!("{}: {m}", self.kind.name())));
        if self.kind.has_r() && self.r == 0 {
            return bad("r must be at least 1");
        }
        if !self.kind.has_r() && self.r != 0 {
            return bad("takes no r");
        }
        if self.kind.is_limit() {
            if self.n != 0 || self.sign != 0 {
                return bad("limit points take no n or sign");
            }
        } else if self.sign != 1 && self.sign != -1 {
            return bad("sign must be + or -");
        }
        Ok(())
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.kind.name();
        let s = if self.sign < 0 { '-' } else { '+' };
        match self.kind {
            FamilyKind::ChiLimit => write!(f, "{name}"),
            FamilyKind::PhiLimit | FamilyKind::PsiLimit => write!(f, "{name}({})", self.r),
            FamilyKind::ChiA | FamilyKind::ChiB => write!(f, "{name}(n={},{s})", self.n),
            _ => write!(f, "{name}(r={},n={},{s})", self.r, self.n),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    /// Parses `PhiA(r=3,n=5,+)`, `ChiA(n=2,-)`, `PsiLimit(2)` or `Chi`.
    fn from_str(s: &str) -> Result<FamilyId> {
        let err = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg} in family id {s:?}"),
        };
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(i) => {
                let inner = s[i + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| err("missing ')'"))?;
                (&s[..i], Some(inner))
            }
            None => (s, None),
        };
        let kind = FamilyKind::from_name(name.trim()).ok_or_else(|| err("unknown family"))?;
        let mut id = FamilyId {
            kind,
            r: 0,
            n: 0,
            sign: 0,
        };
        let parse_u32 = |v: &str| v.trim().parse::<u32>().map_err(|_| err("bad integer"));
        for (k, part) in args.into_iter().flat_map(|a| a.split(',')).enumerate() {
            let part = part.trim();
            match part.split_once('=') {
                Some((key, v)) => match key.trim() {
                    "r" => id.r = parse_u32(v)?,
                    "n" => id.n = parse_u32(v)?,
                    _ => return Err(err("unknown parameter")),
                },
                None if part == "+" => id.sign = 1,
                None if part == "-" => id.sign = -1,
                None if k == 0 && kind.is_limit() => id.r = parse_u32(part)?,
                None => return Err(err("unexpected argument")),
            }
        }
        id.validate()?;
        Ok(id)
    }
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

fn x_pow(k: usize) -> IntPoly {
    IntPoly::monomial(BigInt::one(), k)
}

/// `1 + x + ... + x^(k-1)`.
fn geometric(k: usize) -> IntPoly {
    IntPoly::new(vec![BigInt::one(); k])
}

/// `x^(r+1) - 2 x^r + x - 1`.
pub fn phi_poly(r: u32) -> IntPoly {
    let r = r as usize;
    &(&x_pow(r + 1) - &x_pow(r).scale(&BigInt::from(2))) + &poly(&[-1, 1])
}

/// `x^(r+1) - x^r - ... - x - 1`.
pub fn psi_poly(r: u32) -> IntPoly {
    let r = r as usize;
    &x_pow(r + 1) - &geometric(r + 1)
}

/// `x^4 - x^3 - 2 x^2 + 1`.
pub fn chi_poly() -> IntPoly {
    poly(&[1, 0, -2, -1, 1])
}

/// The limit-point polynomial of a limit kind.
pub fn limit_point_poly(kind: FamilyKind, r: u32) -> Result<IntPoly> {
    match kind {
        FamilyKind::PhiLimit | FamilyKind::PsiLimit if r == 0 => {
            Err(Error::InvalidArgument("r must be at least 1".into()))
        }
        FamilyKind::PhiLimit => Ok(phi_poly(r)),
        FamilyKind::PsiLimit => Ok(psi_poly(r)),
        FamilyKind::ChiLimit => Ok(chi_poly()),
        _ => Err(Error::InvalidArgument("not a limit kind".into())),
    }
}

/// The pair `(f, g)` with the family member equal to `f x^n + sign g`.
/// For a limit point, `f` is its polynomial and `g` is zero.
pub fn family_parts(id: &FamilyId) -> (IntPoly, IntPoly) {
    let r = id.r as usize;
    match id.kind {
        FamilyKind::PhiLimit | FamilyKind::PsiLimit | FamilyKind::ChiLimit => (
            limit_point_poly(id.kind, id.r).expect("validated id"),
            IntPoly::zero(),
        ),
        FamilyKind::PhiA => (
            phi_poly(id.r),
            &(&x_pow(r) - &x_pow(r - 1)) + &IntPoly::one(),
        ),
        FamilyKind::PhiB => (
            phi_poly(id.r),
            &(&x_pow(r) - &IntPoly::x()) + &IntPoly::one(),
        ),
        FamilyKind::PhiC => (
            phi_poly(id.r),
            &(&x_pow(r) + &IntPoly::one()) * &poly(&[-1, 1]),
        ),
        FamilyKind::PsiA => (psi_poly(id.r), &x_pow(r + 1) - &IntPoly::one()),
        FamilyKind::PsiB => (psi_poly(id.r), geometric(r)),
        FamilyKind::ChiA => (chi_poly(), poly(&[-1, -1, 1, 1])),
        FamilyKind::ChiB => (chi_poly(), poly(&[1, 0, -1, 0, 1])),
    }
}

/// The exact polynomial of a limit point or family member.
pub fn family_poly(id: &FamilyId) -> IntPoly {
    let (f, g) = family_parts(id);
    if id.kind.is_limit() {
        return f;
    }
    IntPoly::compose_shift(&f, id.n as usize, &g, id.sign as i32)
}

/// Exact equality of the two family polynomials.
pub fn family_identity_check(lhs: &FamilyId, rhs: &FamilyId) -> bool {
    family_poly(lhs) == family_poly(rhs)
}

/// Why a family member has no Pisot root in `(1, 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NoPisotReason {
    /// The polynomial has no real root in `(1, 2)`.
    NoRootInInterval,
    /// The dominant root lies outside `(1, 2)`.
    DominantRootOutside,
    /// The cyclotomic-free part fails the Pisot test. This is conclusive
    /// when that part is irreducible, which holds for every member met in
    /// practice but is not checked here.
    CoreNotPisot(NotPisotReason),
}

#[derive(Clone, Debug, Serialize)]
pub enum FamilyRoot {
    Pisot(Box<PisotRecord>),
    NoPisotRoot(NoPisotReason),
    Undecided,
}

impl FamilyRoot {
    pub fn record(&self) -> Option<&PisotRecord> {
        match self {
            FamilyRoot::Pisot(r) => Some(r),
            _ => None,
        }
    }
}

/// Classifies the Pisot root in `(1, 2)` of a family polynomial after
/// removing repeated, zero and cyclotomic factors.
pub fn family_pisot_root(id: &FamilyId, prec: u32) -> Result<FamilyRoot> {
    let p = family_poly(id);
    let core = pisot_candidate(&p);
    let one = BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    if core.deg() == 0 || Sturm::new(&core).count_open(&one, &two) == 0 {
        return Ok(FamilyRoot::NoPisotRoot(NoPisotReason::NoRootInInterval));
    }
    Ok(match classify_pisot(&p, prec)? {
        Classification::Pisot(rec) => {
            if rec.q.cmp_rational(&two).is_lt() {
                FamilyRoot::Pisot(rec)
            } else {
                FamilyRoot::NoPisotRoot(NoPisotReason::DominantRootOutside)
            }
        }
        Classification::NotPisot(r) => FamilyRoot::NoPisotRoot(NoPisotReason::CoreNotPisot(r)),
        Classification::Undecided => FamilyRoot::Undecided,
    })
}

/// Whether `P(1)` and `P(2)` are nonzero with equal signs, so `P` has an
/// even number of roots in `(1, 2)` and no simple Pisot root there.
pub fn sign_predicts_no_pisot_root(id: &FamilyId) -> bool {
    let p = family_poly(id);
    let s1 = p.eval_bigint(&BigInt::one()).signum();
    let s2 = p.eval_bigint(&BigInt::from(2)).signum();
    !s1.is_zero() && s1 == s2
}
