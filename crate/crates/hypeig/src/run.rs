use crate::config::{Command, RunConfig};
use crate::measure;
use crate::output::{Artifact, BoundsRecord, CompareRecord, EigenRecord, FunkRecord, SuiteRow, TableRow};
use crate::CliError;
use hypeig_core::asymptotics::{bounds, large_r_expansion, small_r_expansion};
use hypeig_core::funk_finsler::{funk_fundamental_frequency, Route};
use hypeig_core::hyperball_eigen::{eigen_with, BallSpec, EigenOptions};
use hypeig_core::mm_comparison::{compare, DensityCheck};
use hypeig_core::selftest::{SuiteOutcome, SUITES};
use rayon::prelude::*;

/// What a run produced, and whether every check it performs passed.
pub struct Outcome {
    pub artifact: Artifact,
    pub ok: bool,
    /// Explanation for a failed check, for standard error.
    pub diagnostic: Option<String>,
}

impl Outcome {
    fn passed(artifact: Artifact) -> Self {
        Outcome { artifact, ok: true, diagnostic: None }
    }
}

/// Funk bound that counts as "vanishing".
pub const FUNK_THRESHOLD: f64 = 1e-4;
/// Allowed distance of the Klein value from `(n−1)²/4`.
pub const KLEIN_TOLERANCE: f64 = 1e-3;
/// Relative slack when checking `λ` against bounds that can be sharp.
const BOUND_SLACK: f64 = 1e-12;

fn eigen_options(cfg: &RunConfig) -> EigenOptions {
    cfg.root_tol.map(EigenOptions::with_rel_tol).unwrap_or_default()
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cfg.command {
        Command::Eigen => eigen_cmd(cfg),
        Command::Table => table_cmd(cfg),
        Command::Bounds => bounds_cmd(cfg),
        Command::Compare => compare_cmd(cfg),
        Command::Funk => funk_cmd(cfg),
        Command::Selftest => selftest_cmd(cfg),
    }
}

fn eigen_cmd(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let r = cfg.radii[0];
    let res = eigen_with(&BallSpec::new(cfg.n, cfg.kappa, r)?, cfg.method, &eigen_options(cfg))?;
    let rec = EigenRecord {
        n: cfg.n,
        kappa: cfg.kappa,
        r,
        method: res.method.as_str(),
        lambda: res.lambda,
        alpha: res.alpha,
        residual: res.residual,
        residual_scale: res.residual_scale,
        alpha_lo: res.bracket.0,
        alpha_hi: res.bracket.1,
    };
    Ok(Outcome::passed(Artifact::single("eigen", &rec)?))
}

/// One table row, with the bound check folded in.
pub fn table_row(n: usize, kappa: f64, r: f64, cfg: &RunConfig) -> Result<(TableRow, Option<String>), CliError> {
    let spec = BallSpec::new(n, kappa, r)?;
    let lam = eigen_with(&spec, cfg.method, &eigen_options(cfg))?.lambda;
    let b = bounds(&spec);
    let row = TableRow {
        r,
        lambda_exact: lam,
        large_r: large_r_expansion(n, kappa, r).ok(),
        small_r: small_r_expansion(n, kappa, r).ok(),
        bf_lo: b.bf_lower,
        bf_hi: b.bf_upper,
        savo_lo: b.savo_lower,
        savo_hi: b.savo_upper,
    };
    let slack = BOUND_SLACK * lam;
    let inside = |lo: Option<f64>, hi: Option<f64>| lo.map_or(true, |l| l - slack <= lam) && hi.map_or(true, |h| lam <= h + slack);
    let problem = (!(inside(row.bf_lo, row.bf_hi) && inside(Some(row.savo_lo), Some(row.savo_hi)) && lam > b.mckean_lower))
        .then(|| format!("λ = {lam} at r = {r} lies outside a bound interval: {b:?}"));
    Ok((row, problem))
}

fn table_cmd(cfg: &RunConfig) -> Result<Outcome, CliError> {
    // Evaluated in parallel; `collect` keeps the abscissa order.
    let rows: Vec<(TableRow, Option<String>)> =
        cfg.radii.par_iter().map(|&r| table_row(cfg.n, cfg.kappa, r, cfg)).collect::<Result<_, _>>()?;
    let problems: Vec<String> = rows.iter().filter_map(|r| r.1.clone()).collect();
    let rows: Vec<TableRow> = rows.into_iter().map(|r| r.0).collect();
    let artifact = Artifact::rows("table", &rows)?.with("n", cfg.n).with("kappa", cfg.kappa);
    Ok(Outcome { artifact, ok: problems.is_empty(), diagnostic: (!problems.is_empty()).then(|| problems.join("\n")) })
}

fn bounds_cmd(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let r = cfg.radii[0];
    let b = bounds(&BallSpec::new(cfg.n, cfg.kappa, r)?);
    let rec = BoundsRecord {
        n: cfg.n,
        kappa: cfg.kappa,
        r,
        mckean_lower: b.mckean_lower,
        cheng_upper: b.cheng_upper,
        bf_lower: b.bf_lower,
        bf_upper: b.bf_upper,
        savo_lower: b.savo_lower,
        savo_upper: b.savo_upper,
    };
    Ok(Outcome::passed(Artifact::single("bounds", &rec)?))
}

fn compare_cmd(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let r = cfg.radii[0];
    let name = cfg.measure.as_deref().unwrap_or("hyperbolic");
    let m = measure::resolve(name, cfg.n, cfg.kappa)?;
    let rep = compare(&m, &BallSpec::new(cfg.n, cfg.kappa, r)?)?;
    let h = rep.hypotheses;
    let rec = CompareRecord {
        n: cfg.n,
        kappa: cfg.kappa,
        r,
        measure: m.label.clone(),
        lambda_model: rep.lambda_model,
        rayleigh_upper: rep.rayleigh_upper,
        inequality_ok: rep.inequality_ok,
        rigidity_gap: rep.rigidity_gap,
        rho0: rep.rho0,
        sign_integral: rep.sign_integral,
        density_limit: match h.density {
            DensityCheck::Measured(v) => Some(v),
            DensityCheck::Indeterminate => None,
        },
        density_ok: h.density_ok,
        bg_violation: h.bg_violation,
        bg_ok: h.bg_ok,
    };
    let diagnostic = (!rep.inequality_ok)
        .then(|| format!("Rayleigh bound {} exceeds the model eigenvalue {}", rep.rayleigh_upper, rep.lambda_model));
    Ok(Outcome { artifact: Artifact::single("compare", &rec)?, ok: rep.inequality_ok, diagnostic })
}

fn funk_cmd(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let rep = funk_fundamental_frequency(cfg.n)?;
    let route = |r: Route| rep.routes.iter().find(|x| x.route == r).map_or((f64::NAN, f64::NAN), |x| (x.bound, x.limit));
    let (cb, cl) = route(Route::Comparison);
    let (rb, rl) = route(Route::Rayleigh);
    let (lb, ll) = route(Route::Laplace);
    let target = ((cfg.n - 1) * (cfg.n - 1)) as f64 / 4.0;
    let rec = FunkRecord {
        n: cfg.n,
        funk_bound: rep.bound,
        tightest_route: rep.tightest.as_str(),
        comparison_bound: cb,
        comparison_limit: cl,
        rayleigh_bound: rb,
        rayleigh_limit: rl,
        laplace_bound: lb,
        laplace_limit: ll,
        klein: rep.klein,
        klein_target: target,
    };
    let funk_ok = rep.bound <= FUNK_THRESHOLD;
    let klein_ok = (rep.klein - target).abs() <= KLEIN_TOLERANCE;
    let diagnostic = match (funk_ok, klein_ok) {
        (true, true) => None,
        (false, _) => Some(format!("Funk bound {} above {FUNK_THRESHOLD}", rep.bound)),
        (_, false) => Some(format!("Klein value {} differs from {target} by more than {KLEIN_TOLERANCE}", rep.klein)),
    };
    Ok(Outcome { artifact: Artifact::single("funk", &rec)?, ok: funk_ok && klein_ok, diagnostic })
}

/// Run every suite (in parallel, reported in the fixed suite order).
pub fn run_suites(seed: u64) -> Vec<SuiteOutcome> {
    SUITES.par_iter().map(|(_, f)| f(seed)).collect()
}

fn selftest_cmd(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let outcomes = run_suites(cfg.seed);
    let rows: Vec<SuiteRow> = outcomes
        .iter()
        .map(|o| SuiteRow {
            suite: o.name,
            passed: o.passed(),
            cases: o.cases,
            failures: o.failures,
            worst: o.worst,
            tolerance: o.tolerance,
            note: o.note.clone(),
        })
        .collect();
    let failed = rows.iter().filter(|r| !r.passed).count();
    let artifact = Artifact::rows("selftest", &rows)?
        .with("seed", cfg.seed)
        .with("suites_passed", rows.len() - failed)
        .with("suites_failed", failed);
    let diagnostic = (failed > 0).then(|| {
        let names: Vec<&str> = rows.iter().filter(|r| !r.passed).map(|r| r.suite).collect();
        format!("{failed} suite(s) failed: {}", names.join(", "))
    });
    Ok(Outcome { artifact, ok: failed == 0, diagnostic })
}
