//! Result records and their JSON / CSV / plain renderings.
//!
//! JSON objects are flat, keep the field order of the record types, carry
//! `"hypeig_schema": 1`, and print every number with 15 significant digits.
//! CSV uses the shortest representation that reads back to the same `f64`.

use crate::config::Format;
use crate::CliError;
use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenRecord {
    pub n: usize,
    pub kappa: f64,
    pub r: f64,
    pub method: &'static str,
    pub lambda: f64,
    pub alpha: f64,
    pub residual: f64,
    pub residual_scale: f64,
    pub alpha_lo: f64,
    pub alpha_hi: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub r: f64,
    pub lambda_exact: f64,
    pub large_r: Option<f64>,
    pub small_r: Option<f64>,
    pub bf_lo: Option<f64>,
    pub bf_hi: Option<f64>,
    pub savo_lo: f64,
    pub savo_hi: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsRecord {
    pub n: usize,
    pub kappa: f64,
    pub r: f64,
    pub mckean_lower: f64,
    pub cheng_upper: f64,
    pub bf_lower: Option<f64>,
    pub bf_upper: Option<f64>,
    pub savo_lower: f64,
    pub savo_upper: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompareRecord {
    pub n: usize,
    pub kappa: f64,
    pub r: f64,
    pub measure: String,
    pub lambda_model: f64,
    pub rayleigh_upper: f64,
    pub inequality_ok: bool,
    pub rigidity_gap: f64,
    pub rho0: f64,
    pub sign_integral: f64,
    /// `None` when the table does not reach small radii.
    pub density_limit: Option<f64>,
    pub density_ok: bool,
    pub bg_violation: f64,
    pub bg_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FunkRecord {
    pub n: usize,
    pub funk_bound: f64,
    pub tightest_route: &'static str,
    pub comparison_bound: f64,
    pub comparison_limit: f64,
    pub rayleigh_bound: f64,
    pub rayleigh_limit: f64,
    pub laplace_bound: f64,
    pub laplace_limit: f64,
    pub klein: f64,
    pub klein_target: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteRow {
    pub suite: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    pub worst: f64,
    pub tolerance: f64,
    pub note: String,
}

/// Round to 15 significant digits. Any 15-digit decimal survives a round
/// trip through `f64`, so the shortest representation of the result has at
/// most 15 digits.
pub fn round_sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

/// Shortest round-trip numeral, in exponent form only for very large or
/// small magnitudes.
pub fn shortest(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-4..1e16).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(num) => {
            if num.is_f64() {
                if let Some(x) = num.as_f64() {
                    if let Some(r) = serde_json::Number::from_f64(round_sig15(x)) {
                        *num = r;
                    }
                }
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_value),
        Value::Object(m) => m.values_mut().for_each(round_value),
        _ => {}
    }
}

fn to_object<T: Serialize>(row: &T) -> Result<Map<String, Value>, CliError> {
    match serde_json::to_value(row).map_err(|e| CliError::Output(e.to_string()))? {
        Value::Object(m) => Ok(m),
        other => Err(CliError::Output(format!("record did not serialize to an object: {other}"))),
    }
}

fn plain_scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Number(n) => n.as_f64().map(shortest).unwrap_or_else(|| n.to_string()),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// A command's output: top-level fields plus either one record (merged into
/// the top level) or a list of rows.
pub struct Artifact {
    pub command: &'static str,
    pub extras: Vec<(&'static str, Value)>,
    pub rows: Vec<Map<String, Value>>,
    pub single: bool,
}

impl Artifact {
    pub fn single<T: Serialize>(command: &'static str, record: &T) -> Result<Self, CliError> {
        Ok(Artifact { command, extras: Vec::new(), rows: vec![to_object(record)?], single: true })
    }

    pub fn rows<T: Serialize>(command: &'static str, rows: &[T]) -> Result<Self, CliError> {
        let rows = rows.iter().map(to_object).collect::<Result<_, _>>()?;
        Ok(Artifact { command, extras: Vec::new(), rows, single: false })
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.extras.push((key, value.into()));
        self
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Plain => Ok(self.plain()),
        }
    }

    fn json(&self) -> Result<String, CliError> {
        let mut top = Map::new();
        top.insert("hypeig_schema".into(), SCHEMA_VERSION.into());
        top.insert("command".into(), self.command.into());
        for (k, v) in &self.extras {
            top.insert((*k).into(), v.clone());
        }
        if self.single {
            for (k, v) in &self.rows[0] {
                top.insert(k.clone(), v.clone());
            }
        } else {
            top.insert("rows".into(), Value::Array(self.rows.iter().cloned().map(Value::Object).collect()));
        }
        let mut v = Value::Object(top);
        round_value(&mut v);
        let mut s = serde_json::to_string_pretty(&v).map_err(|e| CliError::Output(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    fn csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| CliError::Output(e.to_string());
        if let Some(first) = self.rows.first() {
            w.write_record(first.keys()).map_err(err)?;
        }
        for row in &self.rows {
            w.write_record(row.values().map(|v| match v {
                Value::Null => String::new(),
                Value::Number(n) => n.as_f64().map(shortest).unwrap_or_else(|| n.to_string()),
                Value::String(s) => s.clone(),
                other => other.to_string(),
            }))
            .map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        if self.single {
            let row = &self.rows[0];
            let width = row.keys().map(|k| k.len()).chain(self.extras.iter().map(|e| e.0.len())).max().unwrap_or(0);
            for (k, v) in &self.extras {
                out.push_str(&format!("{k:<width$}  {}\n", plain_scalar(v)));
            }
            for (k, v) in row {
                out.push_str(&format!("{k:<width$}  {}\n", plain_scalar(v)));
            }
            return out;
        }
        let Some(first) = self.rows.first() else { return out };
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.values().map(plain_scalar).collect()).collect();
        let widths: Vec<usize> =
            first.keys().enumerate().map(|(i, k)| cells.iter().map(|c| c[i].chars().count()).max().unwrap_or(0).max(k.len())).collect();
        let line = |items: Vec<String>| {
            let mut s = items.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ");
            s.truncate(s.trim_end().len());
            s.push('\n');
            s
        };
        out.push_str(&line(first.keys().cloned().collect()));
        for c in cells {
            out.push_str(&line(c));
        }
        for (k, v) in &self.extras {
            out.push_str(&format!("{k}: {}\n", plain_scalar(v)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_digits() {
        assert_eq!(round_sig15(0.1), 0.1);
        assert_eq!(round_sig15(2.0000000000000004), 2.0);
        assert_eq!(round_sig15(std::f64::consts::PI).to_string(), "3.14159265358979");
        assert!(round_sig15(f64::NAN).is_nan());
    }

    #[test]
    fn shortest_round_trips() {
        for x in [0.1, 1.0 / 3.0, 1e-300, 6.02e23, -2.5e-7, 123456.789] {
            assert_eq!(shortest(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(shortest(2.0), "2");
        assert_eq!(shortest(1e-7), "1e-7");
    }

    #[test]
    fn json_is_flat_and_ordered() {
        let rec = BoundsRecord {
            n: 3,
            kappa: 1.0,
            r: 1.0,
            mckean_lower: 1.0,
            cheng_upper: 1.0,
            bf_lower: None,
            bf_upper: Some(2.0 / 3.0),
            savo_lower: 0.5,
            savo_upper: 12.0,
        };
        let s = Artifact::single("bounds", &rec).unwrap().render(Format::Json).unwrap();
        let keys: Vec<&str> = s.lines().filter_map(|l| l.trim().split('"').nth(1)).collect();
        assert_eq!(keys[..4], ["hypeig_schema", "command", "n", "kappa"]);
        assert!(s.contains("\"bf_lower\": null"));
        assert!(s.contains("0.666666666666667"));
        let csv = Artifact::single("bounds", &rec).unwrap().render(Format::Csv).unwrap();
        assert_eq!(csv.lines().next().unwrap(), "n,kappa,r,mckean_lower,cheng_upper,bf_lower,bf_upper,savo_lower,savo_upper");
        assert!(csv.lines().nth(1).unwrap().contains(",,0.6666666666666666,"));
    }
}
