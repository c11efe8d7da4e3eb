//! Writers for the CSV and JSON artifacts. Floats use Rust's shortest
//! round-trip formatting so a reader recovers the exact value.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;
use spdc_core::ModeGrid;

use crate::error::CliError;

pub const MAPS_HEADER: &str = "theta_deg,lambda_nm,P,phi_rad";
pub const ISOFLUX_HEADER: &str =
    "fwhm_nm,iris_width_deg,iris_center_deg,flux,phase_range_rad,is_optimum";

/// One row of `isoflux.csv`, already in external units.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsoFluxRow {
    pub fwhm_nm: f64,
    pub iris_width_deg: f64,
    pub iris_center_deg: f64,
    pub flux: f64,
    pub phase_range_rad: f64,
    pub is_optimum: bool,
}

pub fn maps_csv(grid: &ModeGrid) -> String {
    let spec = &grid.spec;
    let mut out = String::with_capacity(48 * spec.n_theta * spec.n_lambda);
    out.push_str(MAPS_HEADER);
    out.push('\n');
    for j in 0..spec.n_lambda {
        let lambda_nm = spec.lambda_at(j) * 1000.0;
        for i in 0..spec.n_theta {
            let k = grid.index(i, j);
            let theta_deg = spec.theta_at(i).to_degrees();
            let _ = write!(out, "{theta_deg},{lambda_nm},{},", grid.probability[k]);
            if let Some(phi) = grid.phase[k] {
                let _ = write!(out, "{phi}");
            }
            out.push('\n');
        }
    }
    out
}

pub fn isoflux_csv(rows: &[IsoFluxRow]) -> String {
    let mut out = String::from(ISOFLUX_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.fwhm_nm, r.iris_width_deg, r.iris_center_deg, r.flux, r.phase_range_rad, r.is_optimum
        );
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("artifact serializes");
    s.push('\n');
    s
}

pub fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use spdc_core::GridSpec;

    #[test]
    fn maps_rows_follow_lambda_then_theta() {
        let spec = GridSpec {
            theta_min: 0.0,
            theta_max: 1f64.to_radians(),
            lambda_min: 0.7,
            lambda_max: 0.71,
            n_theta: 2,
            n_lambda: 2,
        };
        let grid = ModeGrid {
            spec,
            probability: vec![0.25, 0.5, 0.75, 1.0],
            phase: vec![Some(0.1), None, Some(-0.2), Some(0.0)],
        };
        let csv = maps_csv(&grid);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], MAPS_HEADER);
        assert_eq!(lines.len(), 5);
        let field = |line: usize, col: usize| lines[line].split(',').nth(col).unwrap().to_string();
        assert_eq!(field(1, 0), format!("{}", spec.theta_at(0).to_degrees()));
        assert_eq!(field(2, 0), format!("{}", spec.theta_at(1).to_degrees()));
        assert_eq!(field(1, 1), field(2, 1));
        assert_eq!(field(3, 1), format!("{}", spec.lambda_at(1) * 1000.0));
        assert!(lines[1].ends_with(",0.25,0.1"));
        assert!(lines[2].ends_with(",0.5,"));
    }

    #[test]
    fn floats_round_trip() {
        let x = 0.1 + 0.2;
        let row = IsoFluxRow {
            fwhm_nm: 30.0,
            iris_width_deg: x,
            iris_center_deg: 2.95,
            flux: 1e-9,
            phase_range_rad: 0.25,
            is_optimum: true,
        };
        let csv = isoflux_csv(&[row]);
        let field: f64 = csv
            .lines()
            .nth(1)
            .unwrap()
            .split(',')
            .nth(1)
            .unwrap()
            .parse()
            .unwrap();
        assert_eq!(field.to_bits(), x.to_bits());
    }
}
