//! Browser bindings for the SPDC source model: phase matching, emission
//! maps and the iso-flux curve. The `*_native` functions hold the logic and
//! are what the tests exercise; the exported wrappers only convert errors.

use spdc_core::emission_maps::{compute_maps, integrated_flux};
use spdc_core::spdc_model::{calibrate_compensation, degenerate_opening_angle, delta_kappa};
use spdc_core::window_optimizer::find_optimal_window;
use spdc_core::{
    EmissionMode, FilterConfig, FluxQuadrature, GridSpec, IsoFluxSettings, SourceConfig,
    WindowArrangement,
};
use wasm_bindgen::prelude::*;

fn source(pump_nm: f64, length_mm: f64, cut_deg: f64) -> Result<SourceConfig, String> {
    let cfg = SourceConfig {
        lambda_pump: pump_nm / 1000.0,
        crystal_length: length_mm * 1000.0,
        cut_angle: cut_deg.to_radians(),
        comp_thickness: length_mm * 1000.0,
        comp_cut_angle: cut_deg.to_radians(),
        ..SourceConfig::default()
    };
    cfg.validate().map_err(|e| e.to_string())?;
    calibrate_compensation(&cfg).map_err(|e| e.to_string())
}

#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseMatch {
    pub opening_angle_deg: f64,
    pub collinear_delta_kappa: f64,
    pub comp_tilt_deg: f64,
}

pub fn phase_match_native(
    pump_nm: f64,
    length_mm: f64,
    cut_deg: f64,
) -> Result<PhaseMatch, String> {
    let cfg = source(pump_nm, length_mm, cut_deg)?;
    let theta = degenerate_opening_angle(&cfg).map_err(|e| e.to_string())?;
    let dk = delta_kappa(&EmissionMode::new(0.0, cfg.degenerate_wavelength()), &cfg)
        .map_err(|e| e.to_string())?;
    Ok(PhaseMatch {
        opening_angle_deg: theta.to_degrees(),
        collinear_delta_kappa: dk,
        comp_tilt_deg: cfg.comp_tilt.to_degrees(),
    })
}

#[wasm_bindgen]
pub fn phase_match(pump_nm: f64, length_mm: f64, cut_deg: f64) -> Result<PhaseMatch, JsError> {
    phase_match_native(pump_nm, length_mm, cut_deg).map_err(|e| JsError::new(&e))
}

/// Row-major maps, one row per wavelength; invalid phases are NaN.
#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone, PartialEq)]
pub struct Maps {
    pub n_theta: usize,
    pub n_lambda: usize,
    pub theta_max_deg: f64,
    pub lambda_min_nm: f64,
    pub lambda_max_nm: f64,
    pub probability: Vec<f64>,
    pub phase: Vec<f64>,
}

pub fn emission_maps_native(
    pump_nm: f64,
    length_mm: f64,
    cut_deg: f64,
    fwhm_nm: f64,
    n: usize,
) -> Result<Maps, String> {
    let cfg = source(pump_nm, length_mm, cut_deg)?;
    let center = 2.0 * pump_nm;
    let spec = GridSpec {
        theta_min: 0.0,
        theta_max: 6f64.to_radians(),
        lambda_min: (center - 100.0) / 1000.0,
        lambda_max: (center + 100.0) / 1000.0,
        n_theta: n,
        n_lambda: n,
    };
    let grid = compute_maps(
        &spec,
        &cfg,
        &FilterConfig::degenerate(&cfg, fwhm_nm / 1000.0),
    )
    .map_err(|e| e.to_string())?;
    Ok(Maps {
        n_theta: n,
        n_lambda: n,
        theta_max_deg: 6.0,
        lambda_min_nm: center - 100.0,
        lambda_max_nm: center + 100.0,
        probability: grid.probability,
        phase: grid
            .phase
            .into_iter()
            .map(|p| p.unwrap_or(f64::NAN))
            .collect(),
    })
}

#[wasm_bindgen]
pub fn emission_maps(
    pump_nm: f64,
    length_mm: f64,
    cut_deg: f64,
    fwhm_nm: f64,
    n: usize,
) -> Result<Maps, JsError> {
    emission_maps_native(pump_nm, length_mm, cut_deg, fwhm_nm, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub fwhm_nm: Vec<f64>,
    pub iris_width_deg: Vec<f64>,
    pub phase_range_rad: Vec<f64>,
    pub optimum_index: usize,
    pub target_flux: f64,
}

/// Iso-flux curve through the reference window, on a coarser quadrature than
/// the CLI so it stays interactive.
pub fn iso_flux_curve_native(
    pump_nm: f64,
    length_mm: f64,
    cut_deg: f64,
    reference_fwhm_nm: f64,
    reference_width_deg: f64,
) -> Result<Curve, String> {
    let cfg = source(pump_nm, length_mm, cut_deg)?;
    let center = 2.0 * pump_nm;
    let quad = FluxQuadrature {
        lambda_min: (center - 100.0) / 1000.0,
        lambda_max: (center + 100.0) / 1000.0,
        n_lambda: 200,
        max_theta_step: 0.02f64.to_radians(),
        theta_max: 6f64.to_radians(),
    };
    let mut settings = IsoFluxSettings::for_source(&cfg, quad).map_err(|e| e.to_string())?;
    settings.flux_rtol = 1e-4;
    let reference = WindowArrangement::new(
        settings.iris_center,
        reference_width_deg.to_radians(),
        FilterConfig::degenerate(&cfg, reference_fwhm_nm / 1000.0),
    );
    let grid: Vec<f64> = (1..=20).map(|k| 0.005 * k as f64).collect();
    let (curve, _) =
        find_optimal_window(&reference, &grid, &cfg, &settings).map_err(|e| e.to_string())?;
    Ok(Curve {
        fwhm_nm: curve
            .points
            .iter()
            .map(|p| (p.filter.fwhm * 1000.0).round())
            .collect(),
        iris_width_deg: curve
            .points
            .iter()
            .map(|p| p.iris_width.to_degrees())
            .collect(),
        phase_range_rad: curve.points.iter().map(|p| p.phase_range).collect(),
        optimum_index: curve.optimum_index,
        target_flux: integrated_flux(&reference, &cfg, &quad).map_err(|e| e.to_string())?,
    })
}

#[wasm_bindgen]
pub fn iso_flux_curve(
    pump_nm: f64,
    length_mm: f64,
    cut_deg: f64,
    reference_fwhm_nm: f64,
    reference_width_deg: f64,
) -> Result<Curve, JsError> {
    iso_flux_curve_native(
        pump_nm,
        length_mm,
        cut_deg,
        reference_fwhm_nm,
        reference_width_deg,
    )
    .map_err(|e| JsError::new(&e))
}
