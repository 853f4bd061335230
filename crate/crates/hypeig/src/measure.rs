//! Resolving `--measure`: a registry name or a two-column CSV table.

use crate::CliError;
use hypeig_core::mm_comparison::RadialMeasure;
use serde::Deserialize;
use std::path::Path;

#[derive(Debug, Deserialize)]
struct Sample {
    rho: f64,
    area: f64,
}

/// Read `(ρ, A(ρ))` pairs from CSV. The first line is a header (its names
/// are not interpreted); radii must be strictly increasing.
pub fn read_table<R: std::io::Read>(reader: R) -> Result<(Vec<f64>, Vec<f64>), CliError> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(reader);
    let mut rho = Vec::new();
    let mut area = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| CliError::Usage(format!("measure table: {e}")))?;
        if rec.len() != 2 {
            return Err(CliError::Usage(format!("measure table row {}: expected 2 columns, found {}", i + 1, rec.len())));
        }
        let s: Sample = rec
            .deserialize(Some(&csv::StringRecord::from(vec!["rho", "area"])))
            .map_err(|e| CliError::Usage(format!("measure table row {}: {e}", i + 1)))?;
        if let Some(&last) = rho.last() {
            if !(s.rho > last) {
                return Err(CliError::Usage(format!("measure table row {}: radii must increase strictly ({} after {last})", i + 1, s.rho)));
            }
        }
        rho.push(s.rho);
        area.push(s.area);
    }
    if rho.len() < 2 {
        return Err(CliError::Usage("measure table needs at least two rows".into()));
    }
    Ok((rho, area))
}

/// `hyperbolic` (curvature −κ²), `euclidean`, `funk`, or a path to a table.
pub fn resolve(spec: &str, n: usize, kappa: f64) -> Result<RadialMeasure, CliError> {
    match spec {
        "hyperbolic" => Ok(RadialMeasure::hyperbolic(n, kappa)),
        "euclidean" => Ok(RadialMeasure::euclidean(n)),
        "funk" => Ok(RadialMeasure::funk(n)),
        path => {
            let file = std::fs::File::open(path)
                .map_err(|e| CliError::Usage(format!("--measure '{path}' is neither hyperbolic/euclidean/funk nor a readable file: {e}")))?;
            let (rho, area) = read_table(file)?;
            let label = Path::new(path).file_stem().and_then(|s| s.to_str()).unwrap_or("table");
            RadialMeasure::tabulated(n, rho, area, label).map_err(|e| CliError::Usage(format!("measure table '{path}': {e}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_table() {
        let (r, a) = read_table("rho,A\n0.1, 1.0\n0.2,2.5\n".as_bytes()).unwrap();
        assert_eq!(r, vec![0.1, 0.2]);
        assert_eq!(a, vec![1.0, 2.5]);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(read_table("rho,A\n0.2,1\n0.1,2\n".as_bytes()).is_err());
        assert!(read_table("rho,A\n0.2,1\n".as_bytes()).is_err());
        assert!(read_table("rho,A\n0.1,x\n0.2,1\n".as_bytes()).is_err());
        assert!(read_table("rho,A,B\n0.1,1,1\n0.2,1,1\n".as_bytes()).is_err());
    }

    #[test]
    fn registry_names() {
        assert_eq!(resolve("funk", 3, 1.0).unwrap().n, 3);
        assert!(resolve("/nonexistent/table.csv", 3, 1.0).is_err());
    }
}
