//! Command-line front end for `pisot-core`. Every subcommand produces one
//! versioned JSON document or one CSV table with a `#` provenance header.

pub mod config;

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Num, Zero};
use pisot_core::conjecture::{
    anti_pisot_report, c_threshold, scan_interval_with, table3_csv, verify_conjecture, AntiPisot,
    BoundReport, Verdict,
};
use pisot_core::error::Error;
use pisot_core::families::{
    compute_n0, family_parts, family_pisot_root, family_poly, hull_contains_disk, hull_inradius,
    kappa, rouche_limit_track, sign_predicts_no_pisot_root, FamilyId, FamilyRoot, KappaSeries,
    TailBound,
};
use pisot_core::intpoly::IntPoly;
use pisot_core::pisot::{
    classify_pisot, enumerate_pisot_with, Classification, EnumerateOptions, ParryClass,
};
use serde::Serialize;
use serde_json::{json, Value};

pub use config::{Format, RunConfig};

/// Version of the JSON envelope and CSV layouts.
pub const SCHEMA_VERSION: u32 = 1;

pub mod exit {
    pub const OK: i32 = 0;
    /// A result is undecided at the precision cap, violates the bound, or a
    /// certificate check failed.
    pub const UNDECIDED_OR_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    /// The node budget ran out; output is marked partial.
    pub const BUDGET: i32 = 3;
    /// The input is outside the domain of the operation (not Pisot, failed
    /// hypothesis, target not a root).
    pub const DOMAIN: i32 = 4;
}

#[derive(Parser, Debug)]
#[command(
    name = "pisot",
    version,
    about = "Pisot numbers, their conjugates and the c_m conjugate bounds"
)]
pub struct Cli {
    /// `key = value` configuration file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Working precision of root disks in bits.
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    /// Node budget for enumeration.
    #[arg(long, global = true)]
    pub node_budget: Option<u64>,
    /// Output format: json or csv.
    #[arg(long, global = true)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for enumeration; does not affect output.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Pisot numbers in the open interval (a, b) up to a degree.
    Enumerate {
        a: String,
        b: String,
        max_degree: usize,
        /// Attach a conjugate-bound report to every record.
        #[arg(long)]
        verify: bool,
    },
    /// Conjugates of every Pisot number in (a, b) up to a degree.
    Conjugates {
        a: String,
        b: String,
        max_degree: usize,
        /// Keep points with re >= 0 and im >= 0 only.
        #[arg(long)]
        first_quadrant: bool,
    },
    /// Checks the conjugate bound for each polynomial.
    Verify {
        polys: Vec<String>,
        /// File with one polynomial per line.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Analyses a family member such as `PhiA(r=3,n=5,+)`.
    Family { id: String },
    /// Greedy expansion of 1 in the Pisot base defined by a polynomial.
    Expand {
        poly: String,
        #[arg(long, default_value_t = 2000)]
        max_steps: usize,
    },
    /// Smallest conjugate modulus over Pisot numbers in (m, m + 1).
    Scan {
        m: u64,
        max_degree: usize,
        /// Include non-units and the part of (m, 1/c_m) below the reciprocal
        /// threshold.
        #[arg(long)]
        all: bool,
    },
    /// Anti-Pisot ratio test.
    Antipisot { poly: String },
    /// Exponent from which the sign condition at +-c_m holds.
    N0 {
        /// Tail polynomial, or its height with `--height`.
        f: String,
        g: String,
        m: u64,
        #[arg(long)]
        height: bool,
    },
    /// Inradius of the convex hull of the roots of (x^2 - x - 1) x^n + 1.
    Hull {
        n: u32,
        /// Also decide whether the hull contains the disk of this radius.
        #[arg(long)]
        radius: Option<String>,
    },
    /// Smallest root modulus of x^r - x^(r-1) + 1 (A) or x^r - x + 1 (B).
    Kappa {
        #[arg(ignore_case = true)]
        series: Series,
        r: u32,
        /// Last r of a range starting at `r`.
        #[arg(long)]
        to: Option<u32>,
    },
    /// Follows the root of f x^n + sign g tending to a target.
    Track {
        f: String,
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        re: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        im: f64,
        #[arg(long, value_delimiter = ',', default_value = "10,20,40,80")]
        ns: Vec<u32>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        sign: i8,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Series {
    A,
    B,
}

/// Rendered output and exit code.
#[derive(Debug)]
pub struct Outcome {
    pub body: String,
    pub code: i32,
    /// Output file; standard output when `None`.
    pub dest: Option<PathBuf>,
}

/// A failure with no output document.
#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) => exit::BUDGET,
            Error::PrecisionExhausted(_) => exit::UNDECIDED_OR_FAILED,
            Error::Parse { .. }
            | Error::InvalidArgument(_)
            | Error::ZeroPolynomial
            | Error::ZeroConstantTerm => exit::USAGE,
            Error::BoundaryRoot | Error::NotARoot(_) | Error::HypothesisFailed(_) => exit::DOMAIN,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        message: msg.into(),
        code: exit::USAGE,
    }
}

/// Resolves the configuration: defaults, then the file, then flags.
pub fn resolve_config(cli: &Cli) -> Result<RunConfig, Failure> {
    let mut cfg = RunConfig::default();
    if let Some(p) = &cli.config {
        cfg.load_file(p).map_err(usage)?;
    }
    if let Some(v) = cli.precision {
        cfg.precision_bits = v;
    }
    if let Some(v) = cli.node_budget {
        cfg.node_budget = v;
    }
    if let Some(v) = cli.format {
        cfg.format = v;
    }
    if cli.output.is_some() {
        cfg.output.clone_from(&cli.output);
    }
    if cli.workers.is_some() {
        cfg.workers = cli.workers;
    }
    cfg.validate().map_err(usage)?;
    Ok(cfg)
}

/// Polynomial from `x^2 - x - 1` syntax or a JSON coefficient array, constant
/// term first.
pub fn parse_poly(s: &str) -> Result<IntPoly, Failure> {
    let t = s.trim();
    if t.starts_with('[') {
        return serde_json::from_str(t)
            .map_err(|e| usage(format!("bad coefficient array `{t}`: {e}")));
    }
    IntPoly::parse(t).map_err(Failure::from)
}

/// Rational from `3`, `7/4` or `1.75`.
pub fn parse_rational(s: &str) -> Result<BigRational, Failure> {
    let t = s.trim();
    let bad = || usage(format!("bad rational `{t}`"));
    if let Some((int, frac)) = t.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num = BigInt::from_str_radix(&digits, 10).map_err(|_| bad())?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        let v = BigRational::new(num, den);
        return Ok(if neg { -v } else { v });
    }
    BigRational::from_str(t).map_err(|_| bad())
}

struct Doc {
    command: &'static str,
    args: Value,
    partial: bool,
    result: Value,
    csv: String,
    code: i32,
}

fn render(doc: Doc, cfg: &RunConfig) -> Outcome {
    let body = match cfg.format {
        Format::Json => {
            let v = json!({
                "tool": "pisot",
                "version": env!("CARGO_PKG_VERSION"),
                "schema": SCHEMA_VERSION,
                "command": doc.command,
                "args": doc.args,
                "config": cfg,
                "partial": doc.partial,
                "result": doc.result,
            });
            let mut s = serde_json::to_string_pretty(&v).expect("serializable output");
            s.push('\n');
            s
        }
        Format::Csv => format!(
            "# tool=pisot version={} schema={} command={} args={} precision_bits={} node_budget={} precision_cap={} partial={}\n{}",
            env!("CARGO_PKG_VERSION"),
            SCHEMA_VERSION,
            doc.command,
            doc.args,
            cfg.precision_bits,
            cfg.node_budget,
            cfg.precision_cap,
            doc.partial,
            doc.csv
        ),
    };
    Outcome {
        body,
        code: doc.code,
        dest: cfg.output.clone(),
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable output")
}

fn opt_f64(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.15}")).unwrap_or_default()
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let cfg = resolve_config(cli)?;
    let prec = cfg.precision_bits;
    let doc = match &cli.command {
        Command::Enumerate {
            a,
            b,
            max_degree,
            verify,
        } => cmd_enumerate(&cfg, a, b, *max_degree, *verify)?,
        Command::Conjugates {
            a,
            b,
            max_degree,
            first_quadrant,
        } => cmd_conjugates(&cfg, a, b, *max_degree, *first_quadrant)?,
        Command::Verify { polys, file } => {
            let mut all = polys.clone();
            if let Some(f) = file {
                let text = std::fs::read_to_string(f)
                    .map_err(|e| usage(format!("{}: {e}", f.display())))?;
                all.extend(
                    text.lines()
                        .map(|l| l.split('#').next().unwrap_or("").trim())
                        .filter(|l| !l.is_empty())
                        .map(String::from),
                );
            }
            if all.is_empty() {
                return Err(usage("verify needs at least one polynomial"));
            }
            cmd_verify(prec, &all)?
        }
        Command::Family { id } => cmd_family(prec, id)?,
        Command::Expand { poly, max_steps } => cmd_expand(prec, poly, *max_steps)?,
        Command::Scan { m, max_degree, all } => cmd_scan(&cfg, *m, *max_degree, !*all)?,
        Command::Antipisot { poly } => cmd_antipisot(prec, poly)?,
        Command::N0 { f, g, m, height } => cmd_n0(f, g, *m, *height)?,
        Command::Hull { n, radius } => cmd_hull(prec, *n, radius.as_deref())?,
        Command::Kappa { series, r, to } => cmd_kappa(prec, *series, *r, to.unwrap_or(*r))?,
        Command::Track {
            f,
            g,
            re,
            im,
            ns,
            tol,
            sign,
        } => cmd_track(prec, f, g, Complex64::new(*re, *im), ns, *tol, *sign)?,
    };
    Ok(render(doc, &cfg))
}

fn enumeration_options(cfg: &RunConfig) -> EnumerateOptions {
    EnumerateOptions {
        node_budget: cfg.node_budget,
        precision: cfg.precision_bits,
        workers: cfg.workers,
        ..EnumerateOptions::default()
    }
}

fn cmd_enumerate(
    cfg: &RunConfig,
    a: &str,
    b: &str,
    max_degree: usize,
    verify: bool,
) -> Result<Doc, Failure> {
    let (ar, br) = (parse_rational(a)?, parse_rational(b)?);
    let e = enumerate_pisot_with(&ar, &br, max_degree, &enumeration_options(cfg))?;
    let mut code = if !e.complete {
        exit::BUDGET
    } else if e.undecided.is_empty() {
        exit::OK
    } else {
        exit::UNDECIDED_OR_FAILED
    };
    let reports = if verify {
        let r = e
            .records
            .iter()
            .map(|r| verify_conjecture(r, cfg.precision_bits))
            .collect::<Result<Vec<_>, _>>()?;
        if code == exit::OK && r.iter().any(|x| x.verdict != Verdict::Satisfies) {
            code = exit::UNDECIDED_OR_FAILED;
        }
        Some(r)
    } else {
        None
    };
    let mut csv = String::from("q,degree,m,is_unit,min_conjugate_modulus,verdict,poly\n");
    for (i, r) in e.records.iter().enumerate() {
        let verdict = reports
            .as_ref()
            .map(|v| format!("{:?}", v[i].verdict))
            .unwrap_or_default();
        csv.push_str(&format!(
            "{:.15},{},{},{},{},{},{}\n",
            r.q_f64(),
            r.degree(),
            r.m,
            r.is_unit,
            opt_f64(r.min_conjugate_modulus().map(|b| b.value)),
            verdict,
            r.poly
        ));
    }
    let result = match &reports {
        Some(reps) => {
            json!({ "reports": reps, "endpoint_hits": e.endpoint_hits, "undecided": e.undecided, "count": e.records.len() })
        }
        None => {
            json!({ "records": e.records, "endpoint_hits": e.endpoint_hits, "undecided": e.undecided, "count": e.records.len() })
        }
    };
    Ok(Doc {
        command: "enumerate",
        args: json!({ "a": ar.to_string(), "b": br.to_string(), "max_degree": max_degree, "verify": verify }),
        partial: !e.complete,
        result,
        csv,
        code,
    })
}

#[derive(Serialize)]
struct ConjugatePoint {
    re: f64,
    im: f64,
    radius: f64,
    source_poly: String,
}

fn cmd_conjugates(
    cfg: &RunConfig,
    a: &str,
    b: &str,
    max_degree: usize,
    first_quadrant: bool,
) -> Result<Doc, Failure> {
    let (ar, br) = (parse_rational(a)?, parse_rational(b)?);
    let e = enumerate_pisot_with(&ar, &br, max_degree, &enumeration_options(cfg))?;
    let mut points = Vec::new();
    for r in &e.records {
        for d in r.conjugates() {
            if first_quadrant && (d.re() < 0.0 || d.im() < 0.0) {
                continue;
            }
            points.push(ConjugatePoint {
                re: d.re(),
                im: d.im(),
                radius: d.radius_f64(),
                source_poly: r.poly.to_string(),
            });
        }
    }
    let mut csv = String::from("re,im,radius,source_poly\n");
    for p in &points {
        csv.push_str(&format!(
            "{:.17e},{:.17e},{:.3e},{}\n",
            p.re, p.im, p.radius, p.source_poly
        ));
    }
    Ok(Doc {
        command: "conjugates",
        args: json!({ "a": ar.to_string(), "b": br.to_string(), "max_degree": max_degree, "first_quadrant": first_quadrant }),
        partial: !e.complete,
        result: json!({ "points": points }),
        csv,
        code: if e.complete { exit::OK } else { exit::BUDGET },
    })
}

fn bound_csv_row(r: &BoundReport) -> String {
    format!(
        "{},{:.15},{},{},{:.15},{},{:?},{},{}\n",
        r.record.poly,
        r.record.q_f64(),
        r.record.m,
        opt_f64(r.min_conj_modulus.as_ref().map(|b| b.value)),
        r.threshold.value.value,
        opt_f64(r.margins.as_ref().map(|m| m.vs_c_m)),
        r.verdict,
        r.tight,
        r.settled_by.map(|s| format!("{s:?}")).unwrap_or_default()
    )
}

const BOUND_CSV_HEADER: &str =
    "poly,q,m,min_conjugate_modulus,c_m,margin,verdict,tight,settled_by\n";

fn cmd_verify(prec: u32, inputs: &[String]) -> Result<Doc, Failure> {
    let mut results = Vec::new();
    let mut csv = String::from(BOUND_CSV_HEADER);
    let mut code = exit::OK;
    for s in inputs {
        let p = parse_poly(s)?;
        match classify_pisot(&p, prec)? {
            Classification::Pisot(rec) => {
                let rep = verify_conjecture(&rec, prec)?;
                if rep.verdict != Verdict::Satisfies {
                    code = code.max(exit::UNDECIDED_OR_FAILED);
                }
                csv.push_str(&bound_csv_row(&rep));
                results.push(json!({ "input": p, "classification": "Pisot", "report": rep }));
            }
            Classification::NotPisot(reason) => {
                code = exit::DOMAIN;
                csv.push_str(&format!("{p},,,,,,NotPisot({reason:?}),,\n"));
                results.push(json!({ "input": p, "classification": "NotPisot", "reason": reason }));
            }
            Classification::Undecided => {
                code = code.max(exit::UNDECIDED_OR_FAILED);
                csv.push_str(&format!("{p},,,,,,Undecided,,\n"));
                results.push(json!({ "input": p, "classification": "Undecided" }));
            }
        }
    }
    Ok(Doc {
        command: "verify",
        args: json!({ "polys": inputs }),
        partial: false,
        result: Value::Array(results),
        csv,
        code,
    })
}

fn cmd_family(prec: u32, id: &str) -> Result<Doc, Failure> {
    let id: FamilyId = id.parse()?;
    id.validate()?;
    let poly = family_poly(&id);
    let (f, g) = family_parts(&id);
    let predicted = !id.kind.is_limit() && sign_predicts_no_pisot_root(&id);
    let root = family_pisot_root(&id, prec)?;
    let report = root
        .record()
        .map(|r| verify_conjecture(r, prec))
        .transpose()?;
    let code = match (&root, &report) {
        (FamilyRoot::Undecided, _) => exit::UNDECIDED_OR_FAILED,
        (_, Some(r)) if r.verdict != Verdict::Satisfies => exit::UNDECIDED_OR_FAILED,
        _ => exit::OK,
    };
    let mut csv = String::from("id,poly,sign_predicts_no_pisot_root,root,");
    csv.push_str(BOUND_CSV_HEADER);
    let root_name = match &root {
        FamilyRoot::Pisot(_) => "Pisot".to_string(),
        FamilyRoot::NoPisotRoot(r) => format!("NoPisotRoot({r:?})"),
        FamilyRoot::Undecided => "Undecided".to_string(),
    };
    csv.push_str(&format!(
        "{id},{poly},{predicted},{root_name},{}",
        report
            .as_ref()
            .map(bound_csv_row)
            .unwrap_or_else(|| ",,,,,,,,\n".into())
    ));
    Ok(Doc {
        command: "family",
        args: json!({ "id": id.to_string() }),
        partial: false,
        result: json!({
            "id": id.to_string(),
            "f": f,
            "g": g,
            "poly": poly,
            "sign_predicts_no_pisot_root": predicted,
            "root": root,
            "report": report,
        }),
        csv,
        code,
    })
}

fn pisot_or_domain(p: &IntPoly, prec: u32) -> Result<pisot_core::pisot::PisotRecord, Failure> {
    match classify_pisot(p, prec)? {
        Classification::Pisot(r) => Ok(*r),
        Classification::NotPisot(reason) => Err(Failure {
            message: format!("{p} is not a Pisot polynomial: {reason:?}"),
            code: exit::DOMAIN,
        }),
        Classification::Undecided => Err(Failure {
            message: format!("classification of {p} is undecided"),
            code: exit::UNDECIDED_OR_FAILED,
        }),
    }
}

fn cmd_expand(prec: u32, poly: &str, max_steps: usize) -> Result<Doc, Failure> {
    let p = parse_poly(poly)?;
    let rec = pisot_or_domain(&p, prec)?.with_parry(max_steps);
    let e = rec.parry.clone().expect("expansion computed");
    let code = if e.class == ParryClass::UndecidedAtBound {
        exit::UNDECIDED_OR_FAILED
    } else {
        exit::OK
    };
    let csv = format!(
        "poly,q,class,preperiod,period,digits\n{},{:.15},{:?},{},{},{}\n",
        rec.poly,
        rec.q_f64(),
        e.class,
        e.preperiod,
        e.period,
        e.digit_string()
    );
    Ok(Doc {
        command: "expand",
        args: json!({ "poly": p, "max_steps": max_steps }),
        partial: false,
        result: json!({ "poly": rec.poly, "q": rec.q_f64(), "expansion": e, "digit_string": e.digit_string() }),
        csv,
        code,
    })
}

fn cmd_scan(cfg: &RunConfig, m: u64, max_degree: usize, units_only: bool) -> Result<Doc, Failure> {
    let row = scan_interval_with(m, max_degree, units_only, &enumeration_options(cfg))?;
    let code = if row.reports.iter().all(|r| r.verdict == Verdict::Satisfies) {
        exit::OK
    } else {
        exit::UNDECIDED_OR_FAILED
    };
    Ok(Doc {
        command: "scan",
        args: json!({ "m": m, "max_degree": max_degree, "units_only": units_only }),
        partial: false,
        csv: table3_csv(std::slice::from_ref(&row)),
        result: to_value(&row),
        code,
    })
}

fn cmd_antipisot(prec: u32, poly: &str) -> Result<Doc, Failure> {
    let p = parse_poly(poly)?;
    let a = anti_pisot_report(&p, prec)?;
    let mut csv = String::from("poly,beta1,beta2,ratio,ratio_lo,ratio_hi,dim_one_certified\n");
    match &a {
        AntiPisot::Report(r) => csv.push_str(&format!(
            "{},{:.15},{:.15},{:.15},{:.15},{:.15},{}\n",
            r.poly, r.beta1, r.beta2, r.ratio, r.ratio_lo, r.ratio_hi, r.dim_one_certified
        )),
        AntiPisot::NotAntiPisot => csv.push_str(&format!("{p},,,,,,\n")),
    }
    Ok(Doc {
        command: "antipisot",
        args: json!({ "poly": p }),
        partial: false,
        result: to_value(&a),
        csv,
        code: exit::OK,
    })
}

fn cmd_n0(f: &str, g: &str, m: u64, height: bool) -> Result<Doc, Failure> {
    let tail = if height {
        TailBound::Height(
            f.trim()
                .parse()
                .map_err(|_| usage(format!("bad height `{f}`")))?,
        )
    } else {
        TailBound::Poly(parse_poly(f)?)
    };
    let g = parse_poly(g)?;
    let c = c_threshold(m)?;
    let cert = compute_n0(&tail, &g, &c.exact)?;
    let code = if cert.verified == Some(false) {
        exit::UNDECIDED_OR_FAILED
    } else {
        exit::OK
    };
    let csv = format!(
        "c,n0,n0_empirical,checked_range,verified\n{:.15},{},{},{},{}\n",
        cert.c,
        cert.n0,
        cert.n0_empirical.map(|v| v.to_string()).unwrap_or_default(),
        cert.checked_range,
        cert.verified.map(|v| v.to_string()).unwrap_or_default()
    );
    Ok(Doc {
        command: "n0",
        args: json!({ "tail": tail, "g": g, "m": m }),
        partial: false,
        result: to_value(&cert),
        csv,
        code,
    })
}

fn cmd_hull(prec: u32, n: u32, radius: Option<&str>) -> Result<Doc, Failure> {
    let inradius = hull_inradius(n, prec)?;
    let contains = match radius {
        Some(r) => {
            let r = parse_rational(r)?;
            if r <= BigRational::zero() {
                return Err(usage("radius must be positive"));
            }
            Some((r.to_string(), hull_contains_disk(n, &r, prec)?))
        }
        None => None,
    };
    let csv = format!(
        "n,inradius,radius,contains\n{n},{inradius:.15},{},{}\n",
        contains.as_ref().map(|c| c.0.clone()).unwrap_or_default(),
        contains
            .as_ref()
            .map(|c| c.1.to_string())
            .unwrap_or_default()
    );
    Ok(Doc {
        command: "hull",
        args: json!({ "n": n, "radius": radius }),
        partial: false,
        result: json!({ "n": n, "inradius": inradius, "contains": contains.map(|c| c.1) }),
        csv,
        code: exit::OK,
    })
}

fn cmd_kappa(prec: u32, series: Series, from: u32, to: u32) -> Result<Doc, Failure> {
    if to < from {
        return Err(usage("--to must not be below r"));
    }
    let (ks, name) = match series {
        Series::A => (KappaSeries::A, "A"),
        Series::B => (KappaSeries::B, "B"),
    };
    let mut rows = Vec::new();
    let mut csv = String::from("series,r,value,error\n");
    for r in from..=to {
        let k = kappa(ks, r, prec)?;
        csv.push_str(&format!("{name},{r},{:.15},{:.3e}\n", k.value, k.error));
        rows.push(json!({ "series": name, "r": r, "value": k.value, "error": k.error }));
    }
    Ok(Doc {
        command: "kappa",
        args: json!({ "series": name, "from": from, "to": to }),
        partial: false,
        result: Value::Array(rows),
        csv,
        code: exit::OK,
    })
}

fn cmd_track(
    prec: u32,
    f: &str,
    g: &str,
    target: Complex64,
    ns: &[u32],
    tol: f64,
    sign: i8,
) -> Result<Doc, Failure> {
    if sign != 1 && sign != -1 {
        return Err(usage("sign must be 1 or -1"));
    }
    let f = parse_poly(f)?;
    let g0 = parse_poly(g)?;
    let g = if sign < 0 { -g0.clone() } else { g0.clone() };
    let t = rouche_limit_track(&f, &g, target, tol, ns, prec)?;
    Ok(Doc {
        command: "track",
        args: json!({ "f": f, "g": g0, "sign": sign, "re": target.re, "im": target.im, "ns": ns, "tol": tol }),
        partial: false,
        csv: t.to_csv(),
        result: to_value(&t),
        code: exit::OK,
    })
}

/// Writes the outcome to its destination.
pub fn emit(out: &Outcome) -> Result<(), Failure> {
    match &out.dest {
        Some(p) => std::fs::write(p, &out.body).map_err(|e| Failure {
            message: format!("{}: {e}", p.display()),
            code: exit::USAGE,
        }),
        None => {
            print!("{}", out.body);
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("7/4").unwrap(),
            BigRational::new(7.into(), 4.into())
        );
        assert_eq!(
            parse_rational("1.75").unwrap(),
            BigRational::new(7.into(), 4.into())
        );
        assert_eq!(
            parse_rational("-0.5").unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert_eq!(
            parse_rational("2").unwrap(),
            BigRational::from_integer(2.into())
        );
        assert!(parse_rational("1.x").is_err());
        assert!(parse_rational("").is_err());
        assert!(BigRational::one() > BigRational::zero());
    }

    #[test]
    fn polynomial_inputs() {
        let a = parse_poly("x^2-x-1").unwrap();
        let b = parse_poly("[-1, -1, 1]").unwrap();
        assert_eq!(a, b);
        let e = parse_poly("x^2 - - x").unwrap_err();
        assert_eq!(e.code, exit::USAGE);
        assert!(e.message.contains("position"));
    }
}
