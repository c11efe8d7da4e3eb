//! The three subcommands. Each returns its artifacts as strings so tests can
//! inspect them without touching the filesystem; `run_*` also writes them.

use std::path::Path;

use serde::Serialize;
use spdc_core::crystal_optics::refract_external_to_internal;
use spdc_core::emission_maps::{compute_maps, integrated_flux};
use spdc_core::spdc_model::{calibrate_compensation, degenerate_opening_angle, delta_kappa};
use spdc_core::window_optimizer::find_optimal_window;
use spdc_core::{EmissionMode, IsoFluxSettings, SourceConfig};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::{isoflux_csv, maps_csv, to_json, write_file, IsoFluxRow};

/// Source parameters after optional compensator calibration.
pub fn prepared_source(cfg: &RunConfig) -> Result<SourceConfig, CliError> {
    let src = cfg.to_source();
    if cfg.compensation.calibrate {
        Ok(calibrate_compensation(&src)?)
    } else {
        Ok(src)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseMatchReport {
    pub lambda_pump_nm: f64,
    pub lambda_degenerate_nm: f64,
    pub n_o_pump: f64,
    pub n_e_pump_at_cut: f64,
    pub n_o_degenerate: f64,
    pub delta_kappa_collinear_per_um: f64,
    pub opening_angle_internal_deg: f64,
    pub opening_angle_external_deg: f64,
}

pub fn phasematch(cfg: &RunConfig) -> Result<PhaseMatchReport, CliError> {
    let src = cfg.to_source();
    let m = &src.sellmeier;
    let lambda_d = src.degenerate_wavelength();
    let n_o_d = m.index_ordinary(lambda_d)?;
    let theta = degenerate_opening_angle(&src)?;
    Ok(PhaseMatchReport {
        lambda_pump_nm: cfg.source.lambda_pump_nm,
        lambda_degenerate_nm: 2.0 * cfg.source.lambda_pump_nm,
        n_o_pump: m.index_ordinary(src.lambda_pump)?,
        n_e_pump_at_cut: m.index_extraordinary(src.lambda_pump, src.cut_angle)?,
        n_o_degenerate: n_o_d,
        delta_kappa_collinear_per_um: delta_kappa(&EmissionMode::new(0.0, lambda_d), &src)?,
        opening_angle_internal_deg: refract_external_to_internal(theta, n_o_d).to_degrees(),
        opening_angle_external_deg: theta.to_degrees(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CalibrationReport {
    pub comp_tilt_deg: f64,
    pub phi_0_rad: f64,
}

impl CalibrationReport {
    fn of(src: &SourceConfig) -> Self {
        Self {
            comp_tilt_deg: src.comp_tilt.to_degrees(),
            phi_0_rad: src.phi_0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MapsMeta {
    pub n_theta: usize,
    pub n_lambda: usize,
    pub theta_min_deg: f64,
    pub theta_max_deg: f64,
    pub lambda_min_nm: f64,
    pub lambda_max_nm: f64,
    pub filter_center_nm: f64,
    pub filter_fwhm_nm: f64,
    pub normalization: &'static str,
    pub phase_reference: &'static str,
    pub calibration: CalibrationReport,
    pub peak_theta_deg: f64,
    pub peak_lambda_nm: f64,
    pub centroid_theta_deg: f64,
    pub centroid_lambda_nm: f64,
}

pub struct MapsArtifacts {
    pub csv: String,
    pub meta: MapsMeta,
}

pub fn maps(cfg: &RunConfig) -> Result<MapsArtifacts, CliError> {
    let src = prepared_source(cfg)?;
    let grid = compute_maps(&cfg.to_grid(), &src, &cfg.to_filter())?;
    let (pt, pl) = grid.peak();
    let (ct, cl) = grid.centroid();
    let meta = MapsMeta {
        n_theta: cfg.grid.n_theta,
        n_lambda: cfg.grid.n_lambda,
        theta_min_deg: cfg.grid.theta_min_deg,
        theta_max_deg: cfg.grid.theta_max_deg,
        lambda_min_nm: cfg.grid.lambda_min_nm,
        lambda_max_nm: cfg.grid.lambda_max_nm,
        filter_center_nm: cfg.filter_center_um() * 1000.0,
        filter_fwhm_nm: cfg.filter.fwhm_nm,
        normalization: "peak",
        phase_reference: "residual phase is zero at the degenerate phase-matched mode",
        calibration: CalibrationReport::of(&src),
        peak_theta_deg: pt.to_degrees(),
        peak_lambda_nm: pl * 1000.0,
        centroid_theta_deg: ct.to_degrees(),
        centroid_lambda_nm: cl * 1000.0,
    };
    Ok(MapsArtifacts {
        csv: maps_csv(&grid),
        meta,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimumReport {
    pub target_flux: f64,
    pub reference: IsoFluxRow,
    pub optimum: IsoFluxRow,
    pub infeasible_fwhm_nm: Vec<f64>,
    pub calibration: CalibrationReport,
}

pub struct OptimizeArtifacts {
    pub rows: Vec<IsoFluxRow>,
    pub report: OptimumReport,
}

pub fn optimize(cfg: &RunConfig) -> Result<OptimizeArtifacts, CliError> {
    let src = prepared_source(cfg)?;
    let quad = cfg.to_quadrature();
    let mut settings = IsoFluxSettings::for_source(&src, quad)?;
    settings.flux_rtol = cfg.optimize.flux_rtol;
    settings.max_iterations = cfg.optimize.max_iterations;
    settings.phase_samples = cfg.optimize.phase_samples;
    let center = match cfg.optimize.iris_center_deg {
        Some(c) => c.to_radians(),
        None => settings.iris_center,
    };
    let mut reference = cfg.reference_arrangement(center);
    let fwhm_um: Vec<f64> = cfg.optimize.fwhm_nm.iter().map(|f| f / 1000.0).collect();
    let (curve, _) = find_optimal_window(&reference, &fwhm_um, &src, &settings)?;
    reference.flux = integrated_flux(&reference, &src, &quad)?;
    reference.phase_range =
        spdc_core::emission_maps::phase_range_metric(&reference, &src, settings.phase_samples)?;

    let feasible_nm = cfg
        .optimize
        .fwhm_nm
        .iter()
        .zip(&fwhm_um)
        .filter(|(_, um)| !curve.infeasible.contains(um))
        .map(|(nm, _)| *nm);
    let rows: Vec<IsoFluxRow> = curve
        .points
        .iter()
        .zip(feasible_nm)
        .enumerate()
        .map(|(k, (p, nm))| IsoFluxRow {
            fwhm_nm: nm,
            iris_width_deg: p.iris_width.to_degrees(),
            iris_center_deg: p.iris_center.to_degrees(),
            flux: p.flux,
            phase_range_rad: p.phase_range,
            is_optimum: k == curve.optimum_index,
        })
        .collect();
    let infeasible_fwhm_nm = cfg
        .optimize
        .fwhm_nm
        .iter()
        .zip(&fwhm_um)
        .filter(|(_, um)| curve.infeasible.contains(um))
        .map(|(nm, _)| *nm)
        .collect();
    let report = OptimumReport {
        target_flux: curve.target_flux,
        reference: IsoFluxRow {
            fwhm_nm: cfg.optimize.reference_fwhm_nm,
            iris_width_deg: cfg.optimize.reference_iris_width_deg,
            iris_center_deg: center.to_degrees(),
            flux: reference.flux,
            phase_range_rad: reference.phase_range,
            is_optimum: false,
        },
        optimum: rows[curve.optimum_index].clone(),
        infeasible_fwhm_nm,
        calibration: CalibrationReport::of(&src),
    };
    Ok(OptimizeArtifacts { rows, report })
}

pub fn run_phasematch(cfg: &RunConfig) -> Result<PhaseMatchReport, CliError> {
    let report = phasematch(cfg)?;
    write_file(
        Path::new(&cfg.output.directory),
        "phasematch.json",
        &to_json(&report),
    )?;
    Ok(report)
}

pub fn run_maps(cfg: &RunConfig) -> Result<MapsMeta, CliError> {
    let art = maps(cfg)?;
    let dir = Path::new(&cfg.output.directory);
    write_file(dir, "maps.csv", &art.csv)?;
    write_file(dir, "maps_meta.json", &to_json(&art.meta))?;
    Ok(art.meta)
}

pub fn run_optimize(cfg: &RunConfig) -> Result<OptimumReport, CliError> {
    let art = optimize(cfg)?;
    let dir = Path::new(&cfg.output.directory);
    write_file(dir, "isoflux.csv", &isoflux_csv(&art.rows))?;
    write_file(dir, "optimum.json", &to_json(&art.report))?;
    Ok(art.report)
}
