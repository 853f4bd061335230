//! Command-line flags and their validated form.

use crate::output::round_sig15;
use crate::CliError;
use clap::{Parser, ValueEnum};
use hypeig_core::hyperball_eigen::Method;
use std::path::PathBuf;
use std::str::FromStr;

/// Environment variable that overrides the default root tolerance.
pub const TOL_ENV: &str = "HYPEIG_TOL";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// One eigenvalue λ₁(B_r^κ).
    Eigen,
    /// Eigenvalue, expansions and bounds over an r-grid.
    Table,
    /// The classical bounds at one radius.
    Bounds,
    /// Cheng-type comparison against a radial measure.
    Compare,
    /// Fundamental frequency of the Funk ball, and the Klein contrast.
    Funk,
    /// Run the invariant suites.
    Selftest,
}

impl Command {
    pub fn as_str(&self) -> &'static str {
        match self {
            Command::Eigen => "eigen",
            Command::Table => "table",
            Command::Bounds => "bounds",
            Command::Compare => "compare",
            Command::Funk => "funk",
            Command::Selftest => "selftest",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Plain,
}

/// First Dirichlet eigenvalues of hyperbolic balls, their bounds, and
/// comparison experiments.
#[derive(Parser, Debug, Clone)]
#[command(name = "hypeig", version, about)]
pub struct Cli {
    #[arg(long, value_enum)]
    pub command: Command,
    /// Dimension (≥ 2).
    #[arg(long)]
    pub n: Option<usize>,
    /// Curvature parameter: the space has curvature −κ².
    #[arg(long, default_value_t = 1.0)]
    pub kappa: f64,
    /// Ball radius.
    #[arg(long, conflicts_with = "r_grid")]
    pub r: Option<f64>,
    /// Radius grid "start:stop:count,log|lin".
    #[arg(long)]
    pub r_grid: Option<String>,
    /// hypergeom_root, s_recursion or ode_shooting (default: chosen by parity).
    #[arg(long)]
    pub method: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the result here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// hyperbolic, euclidean, funk, or a CSV file with columns (rho, A).
    #[arg(long)]
    pub measure: Option<String>,
    /// Seed for the randomized self-test suites.
    #[arg(long, default_value_t = hypeig_core::selftest::DEFAULT_SEED)]
    pub seed: u64,
}

/// A radius grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RGrid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub log: bool,
}

impl FromStr for RGrid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("grid spec '{s}' is not of the form start:stop:count,log|lin");
        let (range, kind) = s.split_once(',').ok_or_else(bad)?;
        let log = match kind.trim() {
            "log" => true,
            "lin" => false,
            _ => return Err(bad()),
        };
        let parts: Vec<&str> = range.split(':').collect();
        let [a, b, c] = parts.as_slice() else { return Err(bad()) };
        let start: f64 = a.trim().parse().map_err(|_| bad())?;
        let stop: f64 = b.trim().parse().map_err(|_| bad())?;
        let count: usize = c.trim().parse().map_err(|_| bad())?;
        if !(start > 0.0 && start.is_finite() && stop.is_finite()) {
            return Err(format!("grid '{s}': radii must be positive and finite"));
        }
        if count == 0 || (count == 1 && stop != start) || (count > 1 && !(stop > start)) {
            return Err(format!("grid '{s}': need stop > start and count ≥ 2 (or a single point)"));
        }
        let g = RGrid { start, stop, count, log };
        let pts = g.points();
        if pts.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(format!("grid '{s}' does not resolve to strictly increasing radii"));
        }
        Ok(g)
    }
}

impl RGrid {
    pub fn points(&self) -> Vec<f64> {
        // Rounded to 15 significant digits so that e.g. the third point of
        // "1:64:7,log" is 4 and not 3.9999999999999996.
        let mut p: Vec<f64> = hypeig_core::roots::grid(self.start, self.stop, self.count, self.log).into_iter().map(round_sig15).collect();
        if let Some(last) = p.last_mut() {
            *last = self.stop;
        }
        p
    }
}

/// Validated configuration for one run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub n: usize,
    pub kappa: f64,
    pub radii: Vec<f64>,
    pub method: Option<Method>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub measure: Option<String>,
    /// Relative root tolerance (from `HYPEIG_TOL`), if overridden.
    pub root_tol: Option<f64>,
    pub seed: u64,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parse the tolerance override; `None` when unset.
pub fn parse_tolerance(raw: Option<&str>) -> Result<Option<f64>, CliError> {
    let Some(raw) = raw else { return Ok(None) };
    let v: f64 = raw.trim().parse().map_err(|_| usage(format!("{TOL_ENV}='{raw}' is not a number")))?;
    if !(v > 0.0 && v < 1e-2) {
        return Err(usage(format!("{TOL_ENV}={v} must lie in (0, 0.01)")));
    }
    Ok(Some(v))
}

impl RunConfig {
    /// Check flags against what `cli.command` needs. `tol_env` is the raw
    /// value of [`TOL_ENV`], if set.
    pub fn from_cli(cli: Cli, tol_env: Option<&str>) -> Result<Self, CliError> {
        let root_tol = parse_tolerance(tol_env)?;
        let needs_n = cli.command != Command::Selftest;
        let n = match cli.n {
            Some(n) if n >= 2 => n,
            Some(n) => return Err(usage(format!("--n {n}: the dimension must be at least 2"))),
            None if needs_n => return Err(usage(format!("--command {} needs --n", cli.command.as_str()))),
            None => 0,
        };
        if !(cli.kappa > 0.0 && cli.kappa.is_finite()) {
            return Err(usage(format!("--kappa {} must be positive", cli.kappa)));
        }
        let radii = match (cli.r, &cli.r_grid) {
            (Some(r), _) if !(r > 0.0 && r.is_finite()) => return Err(usage(format!("--r {r} must be positive"))),
            (Some(r), _) => vec![r],
            (None, Some(g)) => g.parse::<RGrid>().map_err(usage)?.points(),
            (None, None) => Vec::new(),
        };
        match cli.command {
            Command::Eigen | Command::Bounds | Command::Compare if radii.len() != 1 => {
                return Err(usage(format!("--command {} needs a single --r", cli.command.as_str())));
            }
            Command::Table if radii.is_empty() => return Err(usage("--command table needs --r-grid (or --r)")),
            Command::Compare if cli.measure.is_none() => return Err(usage("--command compare needs --measure")),
            _ => {}
        }
        let method = cli.method.as_deref().map(Method::from_str).transpose().map_err(|e| usage(e.to_string()))?;
        Ok(RunConfig {
            command: cli.command,
            n,
            kappa: cli.kappa,
            radii,
            method,
            format: cli.format,
            out: cli.out,
            measure: cli.measure,
            root_tol,
            seed: cli.seed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_specs() {
        let g: RGrid = "1:64:7,log".parse().unwrap();
        let p = g.points();
        assert_eq!(p.len(), 7);
        assert_eq!(p, vec![1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0]);
        let l: RGrid = "0.5:2:4,lin".parse().unwrap();
        assert_eq!(l.points(), vec![0.5, 1.0, 1.5, 2.0]);
        for bad in ["1:64:7", "0:1:3,lin", "2:1:3,lin", "1:2:x,log", "1:2:3,cubic", "1:2:1,lin"] {
            assert!(bad.parse::<RGrid>().is_err(), "{bad}");
        }
        assert_eq!("3:3:1,lin".parse::<RGrid>().unwrap().points(), vec![3.0]);
    }

    #[test]
    fn tolerance_env() {
        assert_eq!(parse_tolerance(None).unwrap(), None);
        assert_eq!(parse_tolerance(Some("1e-10")).unwrap(), Some(1e-10));
        assert!(parse_tolerance(Some("abc")).is_err());
        assert!(parse_tolerance(Some("-1")).is_err());
    }

    #[test]
    fn command_requirements() {
        let parse = |args: &[&str]| {
            let cli = Cli::try_parse_from(std::iter::once("hypeig").chain(args.iter().copied())).unwrap();
            RunConfig::from_cli(cli, None)
        };
        assert!(parse(&["--command", "eigen", "--n", "3"]).is_err());
        assert!(parse(&["--command", "eigen", "--n", "1", "--r", "1"]).is_err());
        assert!(parse(&["--command", "compare", "--n", "3", "--r", "1"]).is_err());
        assert!(parse(&["--command", "eigen", "--n", "3", "--r", "1", "--method", "nope"]).is_err());
        let c = parse(&["--command", "selftest"]).unwrap();
        assert_eq!(c.command, Command::Selftest);
        let t = parse(&["--command", "table", "--n", "5", "--r-grid", "1:64:7,log", "--format", "csv"]).unwrap();
        assert_eq!((t.radii.len(), t.format), (7, Format::Csv));
    }
}
