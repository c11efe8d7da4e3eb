//! Run configuration: one JSON document with one object per section.
//!
//! External units are nm, mm and degrees; conversion to the µm/radian
//! convention of `spdc_core` happens once, in the `to_*` accessors.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use spdc_core::{
    CoreError, CrystalOrder, FilterConfig, FluxQuadrature, GridSpec, SellmeierModel, SourceConfig,
    WindowArrangement,
};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SourceSection {
    pub lambda_pump_nm: f64,
    pub crystal_length_mm: f64,
    pub cut_angle_deg: f64,
    pub crystal_order: CrystalOrder,
    pub phi_0_rad: f64,
}

impl Default for SourceSection {
    fn default() -> Self {
        Self {
            lambda_pump_nm: 351.1,
            crystal_length_mm: 0.59,
            cut_angle_deg: 33.9,
            crystal_order: CrystalOrder::VvFirst,
            phi_0_rad: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CompensationSection {
    pub comp_thickness_mm: f64,
    pub comp_cut_angle_deg: f64,
    pub comp_tilt_deg: f64,
    /// Tune tilt and φ₀ before computing maps or optimizing.
    pub calibrate: bool,
}

impl Default for CompensationSection {
    fn default() -> Self {
        Self {
            comp_thickness_mm: 0.59,
            comp_cut_angle_deg: 33.9,
            comp_tilt_deg: 0.0,
            calibrate: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DispersionSection {
    pub a_o: f64,
    pub b_o: f64,
    pub c_o: f64,
    pub d_o: f64,
    pub a_e: f64,
    pub b_e: f64,
    pub c_e: f64,
    pub d_e: f64,
    pub lambda_min_um: f64,
    pub lambda_max_um: f64,
}

impl Default for DispersionSection {
    fn default() -> Self {
        let m = SellmeierModel::kato_bbo();
        Self {
            a_o: m.a_o,
            b_o: m.b_o,
            c_o: m.c_o,
            d_o: m.d_o,
            a_e: m.a_e,
            b_e: m.b_e,
            c_e: m.c_e,
            d_e: m.d_e,
            lambda_min_um: m.lambda_min,
            lambda_max_um: m.lambda_max,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FilterSection {
    /// Defaults to twice the pump wavelength.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_center_nm: Option<f64>,
    pub fwhm_nm: f64,
}

impl Default for FilterSection {
    fn default() -> Self {
        Self {
            lambda_center_nm: None,
            fwhm_nm: 70.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridSection {
    pub theta_min_deg: f64,
    pub theta_max_deg: f64,
    pub lambda_min_nm: f64,
    pub lambda_max_nm: f64,
    pub n_theta: usize,
    pub n_lambda: usize,
}

impl Default for GridSection {
    fn default() -> Self {
        Self {
            theta_min_deg: 0.0,
            theta_max_deg: 6.0,
            lambda_min_nm: 602.0,
            lambda_max_nm: 802.0,
            n_theta: 512,
            n_lambda: 512,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OptimizeSection {
    pub reference_fwhm_nm: f64,
    pub reference_iris_width_deg: f64,
    /// Defaults to the degenerate opening angle.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iris_center_deg: Option<f64>,
    pub fwhm_nm: Vec<f64>,
    pub flux_rtol: f64,
    pub max_iterations: usize,
    pub flux_lambda_samples: usize,
    pub flux_theta_step_deg: f64,
    pub phase_samples: usize,
}

impl Default for OptimizeSection {
    fn default() -> Self {
        Self {
            reference_fwhm_nm: 30.0,
            reference_iris_width_deg: 0.5,
            iris_center_deg: None,
            fwhm_nm: (1..=20).map(|k| 5.0 * k as f64).collect(),
            flux_rtol: 1e-6,
            max_iterations: 200,
            flux_lambda_samples: 800,
            flux_theta_step_deg: 0.005,
            phase_samples: 101,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputSection {
    pub directory: String,
}

impl Default for OutputSection {
    fn default() -> Self {
        Self {
            directory: "out".into(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub source: SourceSection,
    pub compensation: CompensationSection,
    pub dispersion: DispersionSection,
    pub filter: FilterSection,
    pub grid: GridSection,
    pub optimize: OptimizeSection,
    pub output: OutputSection,
}

fn nm(x: f64) -> f64 {
    x / 1000.0
}

fn mm(x: f64) -> f64 {
    x * 1000.0
}

fn ensure(cond: bool, key: &str, reason: &str) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(CliError::validation(key, reason))
    }
}

fn ensure_finite(v: f64, key: &str) -> Result<(), CliError> {
    ensure(v.is_finite(), key, "must be finite")
}

impl RunConfig {
    pub fn from_json_str(text: &str) -> Result<Self, CliError> {
        Self::from_json_with_overrides(text, &[])
    }

    /// Parses `text` (empty means all defaults), applies `key.path=value`
    /// overrides, and validates.
    pub fn from_json_with_overrides(text: &str, overrides: &[String]) -> Result<Self, CliError> {
        let mut doc: Value = if text.trim().is_empty() {
            Value::Object(Default::default())
        } else {
            serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?
        };
        for o in overrides {
            apply_override(&mut doc, o)?;
        }
        let cfg: RunConfig =
            serde_json::from_value(doc).map_err(|e| CliError::Parse(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn sellmeier(&self) -> SellmeierModel {
        let d = &self.dispersion;
        SellmeierModel {
            a_o: d.a_o,
            b_o: d.b_o,
            c_o: d.c_o,
            d_o: d.d_o,
            a_e: d.a_e,
            b_e: d.b_e,
            c_e: d.c_e,
            d_e: d.d_e,
            lambda_min: d.lambda_min_um,
            lambda_max: d.lambda_max_um,
        }
    }

    pub fn to_source(&self) -> SourceConfig {
        SourceConfig {
            lambda_pump: nm(self.source.lambda_pump_nm),
            crystal_length: mm(self.source.crystal_length_mm),
            cut_angle: self.source.cut_angle_deg.to_radians(),
            crystal_order: self.source.crystal_order,
            comp_thickness: mm(self.compensation.comp_thickness_mm),
            comp_cut_angle: self.compensation.comp_cut_angle_deg.to_radians(),
            comp_tilt: self.compensation.comp_tilt_deg.to_radians(),
            phi_0: self.source.phi_0_rad,
            sellmeier: self.sellmeier(),
        }
    }

    pub fn filter_center_um(&self) -> f64 {
        self.filter
            .lambda_center_nm
            .map(nm)
            .unwrap_or(2.0 * nm(self.source.lambda_pump_nm))
    }

    pub fn to_filter(&self) -> FilterConfig {
        FilterConfig {
            lambda_center: self.filter_center_um(),
            fwhm: nm(self.filter.fwhm_nm),
        }
    }

    pub fn to_grid(&self) -> GridSpec {
        let g = &self.grid;
        GridSpec {
            theta_min: g.theta_min_deg.to_radians(),
            theta_max: g.theta_max_deg.to_radians(),
            lambda_min: nm(g.lambda_min_nm),
            lambda_max: nm(g.lambda_max_nm),
            n_theta: g.n_theta,
            n_lambda: g.n_lambda,
        }
    }

    pub fn to_quadrature(&self) -> FluxQuadrature {
        FluxQuadrature {
            n_lambda: self.optimize.flux_lambda_samples,
            max_theta_step: self.optimize.flux_theta_step_deg.to_radians(),
            ..FluxQuadrature::for_grid(&self.to_grid())
        }
    }

    /// The reference window, centered on `iris_center` (rad).
    pub fn reference_arrangement(&self, iris_center: f64) -> WindowArrangement {
        WindowArrangement::new(
            iris_center,
            self.optimize.reference_iris_width_deg.to_radians(),
            FilterConfig {
                lambda_center: self.filter_center_um(),
                fwhm: nm(self.optimize.reference_fwhm_nm),
            },
        )
    }

    /// Checks every section; the first violation is reported by key path.
    pub fn validate(&self) -> Result<(), CliError> {
        let s = &self.source;
        ensure(
            s.lambda_pump_nm > 0.0 && s.lambda_pump_nm.is_finite(),
            "source.lambda_pump_nm",
            "must be > 0",
        )?;
        ensure(
            s.crystal_length_mm > 0.0 && s.crystal_length_mm.is_finite(),
            "source.crystal_length_mm",
            "must be > 0",
        )?;
        ensure(
            s.cut_angle_deg > 0.0 && s.cut_angle_deg < 90.0,
            "source.cut_angle_deg",
            "must lie in (0, 90)",
        )?;
        ensure_finite(s.phi_0_rad, "source.phi_0_rad")?;

        let c = &self.compensation;
        ensure(
            c.comp_thickness_mm >= 0.0 && c.comp_thickness_mm.is_finite(),
            "compensation.comp_thickness_mm",
            "must be >= 0",
        )?;
        ensure_finite(c.comp_cut_angle_deg, "compensation.comp_cut_angle_deg")?;
        ensure_finite(c.comp_tilt_deg, "compensation.comp_tilt_deg")?;

        self.sellmeier()
            .validate()
            .map_err(|e| prefix_core(e, dispersion_key))?;
        self.to_source().validate().map_err(|e| match e {
            CoreError::WavelengthOutOfRange { lambda_um, min_um, max_um } => CliError::validation(
                "source.lambda_pump_nm",
                format!(
                    "pump or degenerate wavelength {} µm outside dispersion validity range [{min_um}, {max_um}] µm",
                    lambda_um
                ),
            ),
            other => prefix_core(other, source_key),
        })?;

        let f = &self.filter;
        ensure(
            f.fwhm_nm > 0.0 && f.fwhm_nm.is_finite(),
            "filter.fwhm_nm",
            "must be > 0",
        )?;
        if let Some(lc) = f.lambda_center_nm {
            ensure(
                lc > 0.0 && lc.is_finite(),
                "filter.lambda_center_nm",
                "must be > 0",
            )?;
        }

        let g = &self.grid;
        ensure(g.n_theta >= 2, "grid.n_theta", "must be >= 2")?;
        ensure(g.n_lambda >= 2, "grid.n_lambda", "must be >= 2")?;
        ensure(g.theta_min_deg >= 0.0, "grid.theta_min_deg", "must be >= 0")?;
        ensure(
            g.theta_max_deg > g.theta_min_deg && g.theta_max_deg < 90.0,
            "grid.theta_max_deg",
            "must exceed theta_min_deg and be < 90",
        )?;
        ensure(g.lambda_min_nm > 0.0, "grid.lambda_min_nm", "must be > 0")?;
        ensure(
            g.lambda_max_nm > g.lambda_min_nm && g.lambda_max_nm.is_finite(),
            "grid.lambda_max_nm",
            "must exceed lambda_min_nm",
        )?;

        let o = &self.optimize;
        ensure(
            o.reference_fwhm_nm > 0.0 && o.reference_fwhm_nm.is_finite(),
            "optimize.reference_fwhm_nm",
            "must be > 0",
        )?;
        ensure(
            o.reference_iris_width_deg >= 0.0 && o.reference_iris_width_deg.is_finite(),
            "optimize.reference_iris_width_deg",
            "must be >= 0",
        )?;
        if let Some(center) = o.iris_center_deg {
            ensure(
                center > 0.0 && center < g.theta_max_deg,
                "optimize.iris_center_deg",
                "must lie inside the grid",
            )?;
        }
        ensure(
            !o.fwhm_nm.is_empty(),
            "optimize.fwhm_nm",
            "must not be empty",
        )?;
        ensure(
            o.fwhm_nm.iter().all(|f| *f > 0.0 && f.is_finite()),
            "optimize.fwhm_nm",
            "entries must be > 0",
        )?;
        ensure(
            o.fwhm_nm.windows(2).all(|w| w[1] > w[0]),
            "optimize.fwhm_nm",
            "must be strictly increasing",
        )?;
        ensure(
            o.flux_rtol > 0.0 && o.flux_rtol < 1.0,
            "optimize.flux_rtol",
            "must lie in (0, 1)",
        )?;
        ensure(
            o.max_iterations >= 1,
            "optimize.max_iterations",
            "must be >= 1",
        )?;
        ensure(
            o.flux_lambda_samples >= 1,
            "optimize.flux_lambda_samples",
            "must be >= 1",
        )?;
        ensure(
            o.flux_theta_step_deg > 0.0,
            "optimize.flux_theta_step_deg",
            "must be > 0",
        )?;
        ensure(
            o.phase_samples >= 101,
            "optimize.phase_samples",
            "must be >= 101",
        )?;

        ensure(
            !self.output.directory.is_empty(),
            "output.directory",
            "must not be empty",
        )?;
        Ok(())
    }
}

fn dispersion_key(core_key: &str) -> String {
    format!("dispersion.{core_key}")
}

fn source_key(core_key: &str) -> String {
    match core_key {
        "lambda_pump" => "source.lambda_pump_nm".into(),
        "crystal_length" => "source.crystal_length_mm".into(),
        "cut_angle" => "source.cut_angle_deg".into(),
        "phi_0" => "source.phi_0_rad".into(),
        "comp_thickness" => "compensation.comp_thickness_mm".into(),
        "comp_cut_angle" => "compensation.comp_cut_angle_deg".into(),
        "comp_tilt" => "compensation.comp_tilt_deg".into(),
        other => dispersion_key(other),
    }
}

fn prefix_core(e: CoreError, rename: fn(&str) -> String) -> CliError {
    match e {
        CoreError::Invalid { key, reason } => CliError::validation(rename(&key), reason),
        other => CliError::validation("configuration", other.to_string()),
    }
}

/// Reads and validates a configuration file.
pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    load_config_with_overrides(path, &[])
}

pub fn load_config_with_overrides(
    path: &Path,
    overrides: &[String],
) -> Result<RunConfig, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    RunConfig::from_json_with_overrides(&text, overrides)
}

/// Sets `a.b.c = value` in a JSON document. The value is parsed as JSON when
/// possible, otherwise taken as a string.
pub fn apply_override(doc: &mut Value, spec: &str) -> Result<(), CliError> {
    let (path, raw) = spec.split_once('=').ok_or_else(|| {
        CliError::Parse(format!("override `{spec}` is not of the form key=value"))
    })?;
    let value =
        serde_json::from_str(raw.trim()).unwrap_or_else(|_| Value::String(raw.trim().to_string()));
    let keys: Vec<&str> = path.trim().split('.').collect();
    if keys.iter().any(|k| k.is_empty()) {
        return Err(CliError::Parse(format!(
            "override key `{path}` is malformed"
        )));
    }
    let mut node = doc;
    for k in &keys[..keys.len() - 1] {
        let obj = node.as_object_mut().ok_or_else(|| {
            CliError::Parse(format!("override `{path}`: `{k}` is not inside an object"))
        })?;
        node = obj
            .entry(k.to_string())
            .or_insert_with(|| Value::Object(Default::default()));
    }
    node.as_object_mut()
        .ok_or_else(|| {
            CliError::Parse(format!(
                "override `{path}` does not address an object member"
            ))
        })?
        .insert(keys[keys.len() - 1].to_string(), value);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_gives_defaults() {
        assert_eq!(RunConfig::from_json_str("").unwrap(), RunConfig::default());
        assert_eq!(
            RunConfig::from_json_str("  {} \n").unwrap(),
            RunConfig::default()
        );
    }

    #[test]
    fn defaults_match_reference_setup() {
        let src = RunConfig::default().to_source();
        let reference = SourceConfig::default();
        assert_eq!(src.lambda_pump, reference.lambda_pump);
        assert_eq!(src.crystal_length, reference.crystal_length);
        assert_eq!(src.cut_angle, reference.cut_angle);
        assert_eq!(src.comp_thickness, reference.comp_thickness);
        assert_eq!(src.sellmeier, reference.sellmeier);
        assert_eq!(RunConfig::default().to_filter().fwhm, 0.07);
    }

    #[test]
    fn negative_pump_names_key() {
        let err = RunConfig::from_json_str(r#"{"source": {"lambda_pump_nm": -1}}"#).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("source.lambda_pump_nm"));
    }

    #[test]
    fn out_of_range_pump_is_validation_error() {
        let err = RunConfig::from_json_str(r#"{"source": {"lambda_pump_nm": 600}}"#).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("dispersion validity range"));
    }

    #[test]
    fn grid_resolution_is_checked() {
        let err = RunConfig::from_json_str(r#"{"grid": {"n_theta": 1}}"#).unwrap_err();
        assert!(err.to_string().contains("grid.n_theta"));
    }

    #[test]
    fn bad_dispersion_names_key() {
        let err = RunConfig::from_json_str(r#"{"dispersion": {"c_o": 0.5}}"#).unwrap_err();
        assert!(err.to_string().contains("dispersion.c_o"), "{err}");
    }

    #[test]
    fn syntax_and_unknown_keys_are_parse_errors() {
        assert_eq!(RunConfig::from_json_str("{").unwrap_err().exit_code(), 2);
        assert_eq!(
            RunConfig::from_json_str(r#"{"source": {"pump": 1}}"#)
                .unwrap_err()
                .exit_code(),
            2
        );
        assert_eq!(
            RunConfig::from_json_str(r#"{"grid": {"n_theta": "x"}}"#)
                .unwrap_err()
                .exit_code(),
            2
        );
    }

    #[test]
    fn round_trip_is_identity() {
        let cfg = RunConfig::from_json_str(
            r#"{"source": {"cut_angle_deg": 33.9}, "filter": {"lambda_center_nm": 700.5}}"#,
        )
        .unwrap();
        let again = RunConfig::from_json_str(&cfg.to_json()).unwrap();
        assert_eq!(cfg, again);
    }

    #[test]
    fn overrides_apply_dotted_paths() {
        let cfg = RunConfig::from_json_with_overrides(
            "",
            &[
                "grid.n_theta=64".into(),
                "output.directory=/tmp/x".into(),
                "optimize.fwhm_nm=[30]".into(),
                "source.crystal_order=hh_first".into(),
            ],
        )
        .unwrap();
        assert_eq!(cfg.grid.n_theta, 64);
        assert_eq!(cfg.output.directory, "/tmp/x");
        assert_eq!(cfg.optimize.fwhm_nm, vec![30.0]);
        assert_eq!(cfg.source.crystal_order, CrystalOrder::HhFirst);
        let err = RunConfig::from_json_with_overrides("", &["grid.n_theta".into()]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
