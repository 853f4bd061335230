use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output};

fn hypeig(args: &[&str]) -> Output {
    hypeig_env(args, &[])
}

fn hypeig_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hypeig"));
    cmd.args(args).env_remove("HYPEIG_TOL");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn num(v: &Value, key: &str) -> f64 {
    v[key].as_f64().unwrap_or_else(|| panic!("{key} missing in {v}"))
}

#[test]
fn eigen_n3_at_pi() {
    let out = hypeig(&["--command", "eigen", "--n", "3", "--kappa", "1", "--r", "3.14159265358979"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["hypeig_schema"], 1);
    assert_eq!(v["command"], "eigen");
    assert!((num(&v, "lambda") - 2.0).abs() < 1e-9);
    for m in ["hypergeom_root", "s_recursion", "ode_shooting"] {
        let v = json(&hypeig(&["--command", "eigen", "--n", "3", "--r", "3.14159265358979", "--method", m]));
        assert_eq!(v["method"], m);
        assert!((num(&v, "lambda") - 2.0).abs() < 1e-9);
    }
}

#[test]
fn table_csv_inside_bounds() {
    let out = hypeig(&["--command", "table", "--n", "5", "--kappa", "1", "--r-grid", "1:64:7,log", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let headers: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(headers, ["r", "lambda_exact", "large_r", "small_r", "bf_lo", "bf_hi", "savo_lo", "savo_hi"]);
    let rows: Vec<Vec<f64>> = rdr.records().map(|r| r.unwrap().iter().map(|c| c.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 7);
    let radii: Vec<f64> = rows.iter().map(|r| r[0]).collect();
    assert_eq!(radii, [1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0]);
    for r in &rows {
        let lam = r[1];
        assert!(r[4] <= lam && lam <= r[5], "Borisov–Freitas: {r:?}");
        assert!(r[6] <= lam && lam <= r[7], "Savo: {r:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["--command", "table", "--n", "4", "--r-grid", "0.5:20:9,lin"];
    let a = hypeig(&args);
    let b = hypeig(&args);
    assert_eq!(a.stdout, b.stdout);
    let mut csv_args = args.to_vec();
    csv_args.extend(["--format", "csv"]);
    assert_eq!(hypeig(&csv_args).stdout, hypeig(&csv_args).stdout);
    // JSON numbers carry at most 15 significant digits.
    let v = json(&a);
    for row in v["rows"].as_array().unwrap() {
        for (_, x) in row.as_object().unwrap() {
            if let Some(x) = x.as_f64() {
                let digits: String = format!("{x:e}").split('e').next().unwrap().chars().filter(|c| c.is_ascii_digit()).collect();
                assert!(digits.len() <= 15, "{x}");
            }
        }
    }
}

#[test]
fn csv_round_trips() {
    let out = hypeig(&["--command", "bounds", "--n", "6", "--r", "2.5", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let line = text.lines().nth(1).unwrap();
    let savo_hi: f64 = line.split(',').next_back().unwrap().parse().unwrap();
    let b = hypeig_core::asymptotics::bounds(&hypeig_core::hyperball_eigen::BallSpec::new(6, 1.0, 2.5).unwrap());
    assert_eq!(savo_hi, b.savo_upper);
}

#[test]
fn funk_vanishes_klein_does_not() {
    let out = hypeig(&["--command", "funk", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(num(&v, "funk_bound") <= 1e-4);
    assert!((num(&v, "klein") - 0.25).abs() <= 1e-3);
}

#[test]
fn compare_registry_and_table() {
    let out = hypeig(&["--command", "compare", "--n", "3", "--r", "1.5", "--measure", "funk"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["inequality_ok"], true);
    assert!(num(&v, "rigidity_gap") > 0.0);

    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "rho,area").unwrap();
    let exact = hypeig_core::mm_comparison::RadialMeasure::hyperbolic(3, 1.0);
    for i in 0..=3000 {
        let rho = 1e-3 + 2.0 * i as f64 / 3000.0;
        writeln!(file, "{rho},{}", exact.area(rho)).unwrap();
    }
    file.flush().unwrap();
    let out = hypeig(&["--command", "compare", "--n", "3", "--r", "1.5", "--measure", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert!(num(&v, "rigidity_gap") < 1e-6, "{v}");
}

#[test]
fn failed_hypothesis_is_numerical_failure() {
    // A = 2π sinh(2ρ): wrong small-sphere limit and increasing A/sinh ρ.
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "rho,area").unwrap();
    for i in 1..=400 {
        let rho = i as f64 / 400.0;
        writeln!(file, "{rho},{}", 2.0 * std::f64::consts::PI * (2.0 * rho).sinh()).unwrap();
    }
    file.flush().unwrap();
    let out = hypeig(&["--command", "compare", "--n", "2", "--r", "0.8", "--measure", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["--bogus"],
        vec!["--command", "eigen", "--n", "3"],
        vec!["--command", "eigen", "--n", "1", "--r", "1"],
        vec!["--command", "table", "--n", "3", "--r-grid", "3:1:4,lin"],
        vec!["--command", "compare", "--n", "3", "--r", "1"],
        vec!["--command", "compare", "--n", "3", "--r", "1", "--measure", "/no/such/file.csv"],
        vec!["--command", "eigen", "--n", "3", "--r", "1", "--method", "magic"],
    ] {
        let out = hypeig(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let out = hypeig_env(&["--command", "eigen", "--n", "3", "--r", "1"], &[("HYPEIG_TOL", "tight")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tolerance_override_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eig.json");
    let out = hypeig_env(
        &["--command", "eigen", "--n", "4", "--r", "2", "--out", path.to_str().unwrap()],
        &[("HYPEIG_TOL", "1e-6")],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let coarse: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let fine = json(&hypeig(&["--command", "eigen", "--n", "4", "--r", "2"]));
    let (a, b) = (num(&coarse, "lambda"), num(&fine, "lambda"));
    assert!((a - b).abs() <= 1e-5 * b, "{a} vs {b}");
}

#[test]
fn selftest_passes() {
    let out = hypeig(&["--command", "selftest", "--format", "plain"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("suites_failed: 0"), "{text}");
}
