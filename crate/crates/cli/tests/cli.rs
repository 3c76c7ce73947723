use std::process::{Command, Output};

use serde_json::Value;

fn pisot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pisot"))
        .args(args)
        .env_remove("PISOT_PRECISION_CAP")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Data rows of a CSV body, after the provenance line and the header.
fn csv_rows(out: &Output, header: &str) -> Vec<Vec<String>> {
    let text = stdout(out);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# tool=pisot version="));
    assert_eq!(lines.next().unwrap(), header);
    lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}

#[test]
fn verify_golden_ratio() {
    let out = pisot(&["verify", "x^2-x-1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["config"]["precision_bits"], 256);
    let rep = &v["result"][0]["report"];
    assert_eq!(rep["verdict"], "Satisfies");
    assert!(rep["margins"]["vs_c_m"].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn verify_accepts_coefficient_arrays_and_files() {
    let dir = std::env::temp_dir().join(format!("pisot-cli-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("polys.txt");
    std::fs::write(&file, "# two inputs\nx^3-x^2-x-1\n[-1, -1, 1]\n").unwrap();
    let out = pisot(&[
        "verify",
        "--file",
        file.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(
        &out,
        "poly,q,m,min_conjugate_modulus,c_m,margin,verdict,tight,settled_by",
    );
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r[6] == "Satisfies"));
}

#[test]
fn verify_rejects_non_pisot_and_bad_syntax() {
    assert_eq!(pisot(&["verify", "x^2-2"]).status.code(), Some(4));
    let bad = pisot(&["verify", "x^2 - - x"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("position"));
}

#[test]
fn expand_tribonacci() {
    let out = pisot(&["expand", "x^3-x^2-x-1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&out, "poly,q,class,preperiod,period,digits");
    assert_eq!(
        (rows[0][2].as_str(), rows[0][5].as_str()),
        ("Simple", "111")
    );
}

#[test]
fn scan_reports_the_quadratic_minimum() {
    let out = pisot(&["scan", "3", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(2).unwrap();
    assert!(row.starts_with("3,2,1,x^2 - 4x + 1,"), "{row}");
    assert!(row.ends_with(",not-attempted"));
}

#[test]
fn enumerate_small_degrees() {
    let out = pisot(&["enumerate", "1", "2", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["count"], 1);

    assert_eq!(pisot(&["enumerate", "1", "2", "0"]).status.code(), Some(2));

    let out = pisot(&["enumerate", "1", "2", "4", "--format", "csv"]);
    let rows = csv_rows(
        &out,
        "q,degree,m,is_unit,min_conjugate_modulus,verdict,poly",
    );
    let polys: Vec<&str> = rows.iter().map(|r| r[6].as_str()).collect();
    for limit in [
        "x^2 - x - 1",
        "x^3 - 2x^2 + x - 1",
        "x^3 - x^2 - x - 1",
        "x^4 - 2x^3 + x - 1",
        "x^4 - x^3 - 2x^2 + 1",
        "x^4 - x^3 - x^2 - x - 1",
    ] {
        assert!(polys.contains(&limit), "{limit} missing from {polys:?}");
    }
}

#[test]
fn budget_exhaustion_is_partial() {
    let out = pisot(&["enumerate", "1", "2", "6", "--node-budget", "50"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["partial"], true);
}

/// The scatter renderer reads exactly these columns.
#[test]
fn conjugate_csv_schema() {
    let out = pisot(&["conjugates", "1", "2", "2", "--format", "csv"]);
    let rows = csv_rows(&out, "re,im,radius,source_poly");
    assert_eq!(rows.len(), 1);
    let re: f64 = rows[0][0].parse().unwrap();
    assert!((re + 0.618034).abs() < 1e-6);
    assert_eq!(rows[0][1].parse::<f64>().unwrap(), 0.0);

    let out = pisot(&["conjugates", "1", "2", "6", "--format", "csv"]);
    let rows = csv_rows(&out, "re,im,radius,source_poly");
    let c1 = (5f64.sqrt() - 1.0) / 2.0;
    for r in &rows {
        let (x, y, rad): (f64, f64, f64) = (
            r[0].parse().unwrap(),
            r[1].parse().unwrap(),
            r[2].parse().unwrap(),
        );
        let m = x.hypot(y);
        assert!(m > c1 - rad - 1e-12 && m < 1.0, "{r:?}");
        assert!(!r[3].is_empty());
    }
    let quad = pisot(&[
        "conjugates",
        "1",
        "2",
        "6",
        "--format",
        "csv",
        "--first-quadrant",
    ]);
    let q = csv_rows(&quad, "re,im,radius,source_poly");
    assert!(!q.is_empty() && q.len() < rows.len());
    assert!(q
        .iter()
        .all(|r| r[0].parse::<f64>().unwrap() >= 0.0 && r[1].parse::<f64>().unwrap() >= 0.0));
}

#[test]
fn output_is_identical_across_worker_counts() {
    let one = pisot(&["enumerate", "1", "2", "6", "--verify", "--workers", "1"]);
    let eight = pisot(&["enumerate", "1", "2", "6", "--verify", "--workers", "8"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, eight.stdout);
    let again = pisot(&["enumerate", "1", "2", "6", "--verify", "--workers", "1"]);
    assert_eq!(one.stdout, again.stdout);
}

#[test]
fn config_file_and_environment() {
    let dir = std::env::temp_dir().join(format!("pisot-cli-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.conf");
    let dest = dir.join("out.csv");
    std::fs::write(
        &cfg,
        format!(
            "precision_bits = 128\nformat = csv\noutput = {}\n",
            dest.display()
        ),
    )
    .unwrap();
    let out = pisot(&["--config", cfg.to_str().unwrap(), "kappa", "b", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&dest).unwrap();
    assert!(text.contains("precision_bits=128"));
    let value: f64 = text
        .lines()
        .nth(2)
        .unwrap()
        .split(',')
        .nth(2)
        .unwrap()
        .parse()
        .unwrap();
    assert!((value - 0.84219023).abs() < 1e-7);

    let capped = Command::new(env!("CARGO_BIN_EXE_pisot"))
        .args(["verify", "x^2-x-1", "--precision", "256"])
        .env("PISOT_PRECISION_CAP", "128")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert_eq!(
        pisot(&["--config", "/nonexistent/pisot.conf", "kappa", "a", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn remaining_subcommands() {
    let a = json(&pisot(&["antipisot", "x^2-2"]));
    assert_eq!(a["result"], "NotAntiPisot");

    let n0 = pisot(&["n0", "x-2", "x-1", "1"]);
    assert_eq!(n0.status.code(), Some(0));
    assert_eq!(json(&n0)["result"]["n0"], 3);
    let h = pisot(&["n0", "--height", "2", "x-1", "1"]);
    assert_eq!(h.status.code(), Some(0));

    let hull = json(&pisot(&["hull", "50", "--radius", "0.9"]));
    assert_eq!(hull["result"]["contains"], true);

    let fam = pisot(&["family", "PhiA(r=3,n=5,+)"]);
    assert_eq!(fam.status.code(), Some(0));
    assert_eq!(json(&fam)["result"]["report"]["verdict"], "Satisfies");

    let t = pisot(&[
        "track",
        "x^2-x-1",
        "x-1",
        "--re",
        "1.618033988749895",
        "--ns",
        "10,20",
    ]);
    assert_eq!(t.status.code(), Some(0));
    assert_eq!(json(&t)["result"]["points"].as_array().unwrap().len(), 2);
    assert_eq!(
        pisot(&["track", "x^2-x-1", "x-1", "--re", "1.5"])
            .status
            .code(),
        Some(4)
    );
}
