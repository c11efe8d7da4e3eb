//! Two-crystal type-I (ooe) source: phase matching, the relative phase
//! between the HH and VV pair amplitudes, and its compensation.
//!
//! All modes are taken in the vertical principal plane of the second
//! crystal (the azimuthal dependence is neglected). Signal transverse
//! wavevectors are positive toward the side the second crystal's optic axis
//! leans to; the idler carries the opposite transverse wavevector.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::crystal_optics::{extraordinary_longitudinal, longitudinal_component, SellmeierModel};
use crate::error::{CoreError, Result};
use crate::numerics::{bisect, golden_section_min, linspace};

/// Which crystal produces the pair that carries the relative phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrystalOrder {
    /// The first crystal emits VV; its pair crosses the second crystal as
    /// extraordinary rays.
    #[default]
    VvFirst,
    /// The first crystal emits HH. The relative phase changes sign and the
    /// compensators are rotated by 90° to act on the same photons.
    HhFirst,
}

impl CrystalOrder {
    fn sign(self) -> f64 {
        match self {
            CrystalOrder::VvFirst => 1.0,
            CrystalOrder::HhFirst => -1.0,
        }
    }
}

/// Source geometry. Lengths in µm, angles in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SourceConfig {
    /// Pump vacuum wavelength, µm.
    pub lambda_pump: f64,
    /// Thickness of each down-conversion crystal, µm.
    pub crystal_length: f64,
    /// Optic axis inclination to the crystal normal.
    pub cut_angle: f64,
    pub crystal_order: CrystalOrder,
    /// Thickness of each arm's compensation element, µm.
    pub comp_thickness: f64,
    pub comp_cut_angle: f64,
    /// Extra inclination of the compensator optic axis, added to `comp_cut_angle`.
    pub comp_tilt: f64,
    /// Pump phase difference between the two polarization components.
    pub phi_0: f64,
    pub sellmeier: SellmeierModel,
}

impl Default for SourceConfig {
    /// 351.1 nm pump on two 0.59 mm BBO crystals cut at 33.9°, with
    /// compensators of the same thickness and cut.
    fn default() -> Self {
        Self {
            lambda_pump: 0.3511,
            crystal_length: 590.0,
            cut_angle: 33.9f64.to_radians(),
            crystal_order: CrystalOrder::VvFirst,
            comp_thickness: 590.0,
            comp_cut_angle: 33.9f64.to_radians(),
            comp_tilt: 0.0,
            phi_0: 0.0,
            sellmeier: SellmeierModel::kato_bbo(),
        }
    }
}

impl SourceConfig {
    /// Degenerate signal/idler wavelength `2 λ_p`, µm.
    pub fn degenerate_wavelength(&self) -> f64 {
        2.0 * self.lambda_pump
    }

    pub fn validate(&self) -> Result<()> {
        self.sellmeier.validate()?;
        if !(self.lambda_pump > 0.0) {
            return Err(CoreError::invalid("lambda_pump", "must be > 0"));
        }
        if !self.sellmeier.contains(self.lambda_pump) {
            return Err(CoreError::WavelengthOutOfRange {
                lambda_um: self.lambda_pump,
                min_um: self.sellmeier.lambda_min,
                max_um: self.sellmeier.lambda_max,
            });
        }
        if !self.sellmeier.contains(self.degenerate_wavelength()) {
            return Err(CoreError::WavelengthOutOfRange {
                lambda_um: self.degenerate_wavelength(),
                min_um: self.sellmeier.lambda_min,
                max_um: self.sellmeier.lambda_max,
            });
        }
        if !(self.crystal_length > 0.0) || !self.crystal_length.is_finite() {
            return Err(CoreError::invalid("crystal_length", "must be > 0"));
        }
        if !(self.cut_angle > 0.0 && self.cut_angle < PI / 2.0) {
            return Err(CoreError::invalid("cut_angle", "must lie in (0, 90°)"));
        }
        if !(self.comp_thickness >= 0.0) || !self.comp_thickness.is_finite() {
            return Err(CoreError::invalid("comp_thickness", "must be >= 0"));
        }
        for (key, v) in [
            ("comp_cut_angle", self.comp_cut_angle),
            ("comp_tilt", self.comp_tilt),
            ("phi_0", self.phi_0),
        ] {
            if !v.is_finite() {
                return Err(CoreError::invalid(key, "must be finite"));
            }
        }
        Ok(())
    }
}

/// A signal detection mode: external polar angle, azimuth and vacuum
/// wavelength (µm).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmissionMode {
    pub theta_ext: f64,
    pub phi: f64,
    pub lambda_s: f64,
}

impl EmissionMode {
    pub fn new(theta_ext: f64, lambda_s: f64) -> Self {
        Self {
            theta_ext,
            phi: 0.0,
            lambda_s,
        }
    }
}

/// Energy and transverse-momentum conjugate of a signal mode under a
/// monochromatic plane-wave pump.
pub fn conjugate_idler(mode: &EmissionMode, cfg: &SourceConfig) -> Result<EmissionMode> {
    if !(mode.theta_ext >= 0.0 && mode.theta_ext < PI / 2.0) {
        return Err(CoreError::invalid("theta_ext", "must lie in [0, π/2)"));
    }
    if !(mode.lambda_s > cfg.lambda_pump) {
        return Err(CoreError::invalid(
            "lambda_s",
            "must exceed the pump wavelength",
        ));
    }
    let lambda_i = conjugate_wavelength(mode.lambda_s, cfg.lambda_pump);
    if !cfg.sellmeier.contains(lambda_i) {
        return Err(CoreError::WavelengthOutOfRange {
            lambda_um: lambda_i,
            min_um: cfg.sellmeier.lambda_min,
            max_um: cfg.sellmeier.lambda_max,
        });
    }
    let sin_i = mode.theta_ext.sin() * lambda_i / mode.lambda_s;
    if sin_i >= 1.0 {
        return Err(CoreError::Evanescent {
            k: TAU / lambda_i,
            q: TAU / mode.lambda_s * mode.theta_ext.sin(),
        });
    }
    Ok(EmissionMode {
        theta_ext: sin_i.asin(),
        phi: (mode.phi + PI).rem_euclid(TAU),
        lambda_s: lambda_i,
    })
}

/// `1 / (1/λ_p − 1/λ_s)`.
pub fn conjugate_wavelength(lambda_s: f64, lambda_pump: f64) -> f64 {
    1.0 / (1.0 / lambda_pump - 1.0 / lambda_s)
}

/// `sin(x)/x` with the removable singularity filled in.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// Per-wavelength quantities shared by every polar angle at that signal
/// wavelength. Map and quadrature loops build one per spectral row.
#[derive(Debug, Clone)]
pub struct SpectralSlice<'a> {
    cfg: &'a SourceConfig,
    pub lambda_s: f64,
    pub lambda_i: f64,
    k_s: f64,
    k_i: f64,
    k_pump_e: f64,
    k_pump_o: f64,
}

impl<'a> SpectralSlice<'a> {
    pub fn new(cfg: &'a SourceConfig, lambda_s: f64) -> Result<Self> {
        let m = &cfg.sellmeier;
        if !(lambda_s > cfg.lambda_pump) {
            return Err(CoreError::invalid(
                "lambda_s",
                "must exceed the pump wavelength",
            ));
        }
        let lambda_i = conjugate_wavelength(lambda_s, cfg.lambda_pump);
        let k_s = TAU * m.index_ordinary(lambda_s)? / lambda_s;
        let k_i = TAU * m.index_ordinary(lambda_i)? / lambda_i;
        let k_pump_e =
            TAU * m.index_extraordinary(cfg.lambda_pump, cfg.cut_angle)? / cfg.lambda_pump;
        let k_pump_o = TAU * m.index_ordinary(cfg.lambda_pump)? / cfg.lambda_pump;
        Ok(Self {
            cfg,
            lambda_s,
            lambda_i,
            k_s,
            k_i,
            k_pump_e,
            k_pump_o,
        })
    }

    /// Signal transverse wavevector at external angle `theta_ext`.
    pub fn transverse(&self, theta_ext: f64) -> f64 {
        TAU / self.lambda_s * theta_ext.sin()
    }

    pub fn delta_kappa(&self, theta_ext: f64) -> Result<f64> {
        let q = self.transverse(theta_ext);
        let kz_s = longitudinal_component(self.k_s, q)?;
        let kz_i = longitudinal_component(self.k_i, q)?;
        Ok(self.k_pump_e - kz_s - kz_i)
    }

    /// `sinc(Δκ d / 2)`.
    pub fn amplitude(&self, theta_ext: f64) -> Result<f64> {
        Ok(sinc(
            0.5 * self.delta_kappa(theta_ext)? * self.cfg.crystal_length,
        ))
    }

    pub fn decoherence_phase(&self, theta_ext: f64) -> Result<f64> {
        let cfg = self.cfg;
        let q = self.transverse(theta_ext);
        let kz_s = extraordinary_longitudinal(self.lambda_s, q, cfg.cut_angle, &cfg.sellmeier)?;
        let kz_i = extraordinary_longitudinal(self.lambda_i, -q, cfg.cut_angle, &cfg.sellmeier)?;
        Ok(cfg.crystal_order.sign() * cfg.crystal_length * (kz_s + kz_i - self.k_pump_o))
    }

    /// Both arm compensators see their photon tilted away from the element's
    /// optic axis, so the two arms contribute with the same angular sense.
    pub fn compensation_phase(&self, theta_ext: f64) -> Result<f64> {
        let cfg = self.cfg;
        if cfg.comp_thickness == 0.0 {
            return Ok(0.0);
        }
        let q = self.transverse(theta_ext);
        let axis = cfg.comp_cut_angle + cfg.comp_tilt;
        let m = &cfg.sellmeier;
        let arm_s = extraordinary_longitudinal(self.lambda_s, -q, axis, m)?
            - longitudinal_component(self.k_s, q)?;
        let arm_i = extraordinary_longitudinal(self.lambda_i, -q, axis, m)?
            - longitudinal_component(self.k_i, q)?;
        Ok(cfg.crystal_order.sign() * cfg.comp_thickness * (arm_s + arm_i))
    }

    pub fn residual_phase(&self, theta_ext: f64) -> Result<f64> {
        Ok(self.cfg.phi_0
            + (self.decoherence_phase(theta_ext)? - self.compensation_phase(theta_ext)?))
    }
}

fn slice_for<'a>(mode: &EmissionMode, cfg: &'a SourceConfig) -> Result<SpectralSlice<'a>> {
    conjugate_idler(mode, cfg)?;
    SpectralSlice::new(cfg, mode.lambda_s)
}

/// Longitudinal wavevector mismatch `k_p,z − k_s,z − k_i,z` (rad/µm).
pub fn delta_kappa(mode: &EmissionMode, cfg: &SourceConfig) -> Result<f64> {
    slice_for(mode, cfg)?.delta_kappa(mode.theta_ext)
}

/// Normalized phase-matching amplitude `sinc(Δκ d/2)`.
pub fn phase_matching_amplitude(mode: &EmissionMode, cfg: &SourceConfig) -> Result<f64> {
    slice_for(mode, cfg)?.amplitude(mode.theta_ext)
}

/// Relative phase accumulated in the two crystals (rad, unwrapped).
pub fn decoherence_phase(mode: &EmissionMode, cfg: &SourceConfig) -> Result<f64> {
    slice_for(mode, cfg)?.decoherence_phase(mode.theta_ext)
}

/// Phase added by the two arm compensators (rad, unwrapped).
pub fn compensation_phase(mode: &EmissionMode, cfg: &SourceConfig) -> Result<f64> {
    slice_for(mode, cfg)?.compensation_phase(mode.theta_ext)
}

/// `φ₀ + Φ_DC − Φ_comp` (rad, unwrapped).
pub fn residual_phase(mode: &EmissionMode, cfg: &SourceConfig) -> Result<f64> {
    slice_for(mode, cfg)?.residual_phase(mode.theta_ext)
}

/// Search bracket for the degenerate emission angle.
pub const OPENING_ANGLE_BRACKET_DEG: f64 = 10.0;
/// Root tolerance on Δκ, rad/µm.
pub const OPENING_ANGLE_TOL: f64 = 1e-10;

/// External polar angle of degenerate emission (Δκ = 0 at `λ = 2 λ_p`).
pub fn degenerate_opening_angle(cfg: &SourceConfig) -> Result<f64> {
    let slice = SpectralSlice::new(cfg, cfg.degenerate_wavelength())?;
    let f = |theta: f64| slice.delta_kappa(theta).unwrap_or(f64::NAN);
    if f(0.0).abs() <= OPENING_ANGLE_TOL {
        return Ok(0.0);
    }
    let hi = OPENING_ANGLE_BRACKET_DEG.to_radians();
    bisect(f, 0.0, hi, OPENING_ANGLE_TOL, 200)
        .filter(|b| b.value.abs() <= OPENING_ANGLE_TOL)
        .map(|b| b.root)
        .ok_or_else(|| CoreError::Configuration("not phase-matchable at degeneracy".into()))
}

/// Half-widths and resolution of the region the compensator is tuned over.
pub const CALIBRATION_HALF_WIDTH_DEG: f64 = 0.25;
pub const CALIBRATION_HALF_BAND_UM: f64 = 0.010;
pub const CALIBRATION_POINTS: usize = 41;
/// Tilt search range and coarse scan step (degrees); refinement tolerance (rad).
pub const TILT_SEARCH_DEG: f64 = 45.0;
pub const TILT_SCAN_STEP_DEG: f64 = 1.0;
pub const TILT_TOL: f64 = 1e-4;

/// Precomputed calibration region: uncompensated phase and weight per
/// point, plus the slices needed to re-evaluate the compensator.
struct CalibrationRegion<'a> {
    points: Vec<(usize, f64, f64, f64)>,
    slices: Vec<SpectralSlice<'a>>,
}

impl<'a> CalibrationRegion<'a> {
    fn new(cfg: &'a SourceConfig, center_theta: f64) -> Result<Self> {
        let half_t = CALIBRATION_HALF_WIDTH_DEG.to_radians();
        let lambda_d = cfg.degenerate_wavelength();
        let slices = linspace(
            lambda_d - CALIBRATION_HALF_BAND_UM,
            lambda_d + CALIBRATION_HALF_BAND_UM,
            CALIBRATION_POINTS,
        )
        .map(|l| SpectralSlice::new(cfg, l))
        .collect::<Result<Vec<_>>>()?;
        let mut points = Vec::with_capacity(CALIBRATION_POINTS * CALIBRATION_POINTS);
        for (j, s) in slices.iter().enumerate() {
            for theta in linspace(
                (center_theta - half_t).max(0.0),
                center_theta + half_t,
                CALIBRATION_POINTS,
            ) {
                let (Ok(amp), Ok(dc)) = (s.amplitude(theta), s.decoherence_phase(theta)) else {
                    continue;
                };
                points.push((j, theta, amp * amp, dc));
            }
        }
        Ok(Self { points, slices })
    }

    fn weighted_variance(&self, cfg: &SourceConfig, tilt: f64) -> f64 {
        let trial = SourceConfig {
            comp_tilt: tilt,
            ..*cfg
        };
        let mut residuals = Vec::with_capacity(self.points.len());
        for &(j, theta, w, dc) in &self.points {
            let slice = SpectralSlice {
                cfg: &trial,
                ..self.slices[j].clone()
            };
            let Ok(comp) = slice.compensation_phase(theta) else {
                return f64::INFINITY;
            };
            residuals.push((w, dc - comp));
        }
        let w_sum: f64 = residuals.iter().map(|r| r.0).sum();
        let mean = residuals.iter().map(|(w, r)| w * r).sum::<f64>() / w_sum;
        residuals
            .iter()
            .map(|(w, r)| w * (r - mean).powi(2))
            .sum::<f64>()
            / w_sum
    }
}

/// Weighted variance of the residual phase over the calibration region for
/// a given compensator tilt. The weight is the phase-matching probability
/// `sinc²(Δκ d/2)`.
pub fn calibration_objective(cfg: &SourceConfig, tilt: f64) -> Result<f64> {
    let center = degenerate_opening_angle(cfg)?;
    Ok(CalibrationRegion::new(cfg, center)?.weighted_variance(cfg, tilt))
}

/// Tunes the compensator tilt to flatten the residual phase around the
/// central mode, then sets `phi_0` so the central mode's residual is zero.
pub fn calibrate_compensation(cfg: &SourceConfig) -> Result<SourceConfig> {
    let center = degenerate_opening_angle(cfg)?;
    let mut out = *cfg;
    if cfg.comp_thickness > 0.0 {
        let region = CalibrationRegion::new(cfg, center)?;
        let objective = |t: f64| region.weighted_variance(cfg, t);
        let steps = (2.0 * TILT_SEARCH_DEG / TILT_SCAN_STEP_DEG).round() as usize;
        let scan: Vec<f64> = linspace(-TILT_SEARCH_DEG, TILT_SEARCH_DEG, steps + 1)
            .map(f64::to_radians)
            .collect();
        let best = scan
            .iter()
            .map(|&t| objective(t))
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let lo = scan[best.saturating_sub(1)];
        let hi = scan[(best + 1).min(scan.len() - 1)];
        out.comp_tilt = golden_section_min(objective, lo, hi, TILT_TOL);
    }
    let central = SpectralSlice::new(&out, out.degenerate_wavelength())?;
    let raw = central.decoherence_phase(center)? - central.compensation_phase(center)?;
    out.phi_0 = -raw;
    Ok(out)
}

/// The mode at the degenerate wavelength on the phase-matched cone.
pub fn central_mode(cfg: &SourceConfig) -> Result<EmissionMode> {
    Ok(EmissionMode::new(
        degenerate_opening_angle(cfg)?,
        cfg.degenerate_wavelength(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn defaults() -> SourceConfig {
        SourceConfig::default()
    }

    #[test]
    fn degenerate_idler_mirrors_signal() {
        let cfg = defaults();
        let m = EmissionMode {
            theta_ext: 0.05,
            phi: 0.3,
            lambda_s: 0.7022,
        };
        let i = conjugate_idler(&m, &cfg).unwrap();
        assert_relative_eq!(i.lambda_s, 0.7022, max_relative = 1e-14);
        assert_relative_eq!(i.theta_ext, 0.05, max_relative = 1e-12);
        assert_relative_eq!(i.phi, 0.3 + PI, max_relative = 1e-15);
    }

    #[test]
    fn conjugate_wavelength_example() {
        // 1 / (1/351.1 − 1/670) nm
        let l = conjugate_wavelength(0.670, 0.3511);
        assert_relative_eq!(l * 1e3, 737.651_301, epsilon = 1e-5);
    }

    #[test]
    fn conjugate_outside_validity_is_error() {
        let cfg = defaults();
        // idler would be ~0.53 µm → fine; push signal so idler leaves 1.06 µm
        let m = EmissionMode::new(0.0, 0.5);
        assert!(matches!(
            conjugate_idler(&m, &cfg),
            Err(CoreError::WavelengthOutOfRange { .. })
        ));
    }

    #[test]
    fn collinear_degenerate_mismatch() {
        // chained scalar oracle: 2π·1.6631641/0.3511 − 2·2π·1.6639627/0.7022
        let dk = delta_kappa(&EmissionMode::new(0.0, 0.7022), &defaults()).unwrap();
        assert_relative_eq!(dk, -0.014_289_874, epsilon = 1e-8);
    }

    #[test]
    fn sinc_examples() {
        assert_eq!(sinc(0.0), 1.0);
        assert!(sinc(PI).abs() < 1e-15);
        assert_relative_eq!(sinc(PI / 2.0), 2.0 / PI, max_relative = 1e-15);
    }

    #[test]
    fn amplitude_at_first_zero() {
        // choose a length so that the collinear mismatch sits on sinc's first zero
        let mut cfg = defaults();
        let dk = delta_kappa(&EmissionMode::new(0.0, 0.7022), &cfg).unwrap();
        cfg.crystal_length = TAU / dk.abs();
        let a = phase_matching_amplitude(&EmissionMode::new(0.0, 0.7022), &cfg).unwrap();
        assert!(a.abs() < 1e-12);
        cfg.crystal_length = PI / dk.abs();
        let a = phase_matching_amplitude(&EmissionMode::new(0.0, 0.7022), &cfg).unwrap();
        assert_relative_eq!(a, 2.0 / PI, max_relative = 1e-12);
    }

    #[test]
    fn opening_angle_defaults() {
        let theta = degenerate_opening_angle(&defaults()).unwrap().to_degrees();
        // bisection over the scalar Δκ oracle
        assert_relative_eq!(theta, 2.954_537, epsilon = 1e-5);
        let dk = delta_kappa(&EmissionMode::new(theta.to_radians(), 0.7022), &defaults()).unwrap();
        assert!(dk.abs() <= OPENING_ANGLE_TOL);
    }

    #[test]
    fn opening_angle_grows_with_cut() {
        let base = degenerate_opening_angle(&defaults()).unwrap();
        let cfg = SourceConfig {
            cut_angle: 34.4f64.to_radians(),
            ..defaults()
        };
        let wider = degenerate_opening_angle(&cfg).unwrap();
        assert!(wider > base);
        assert_relative_eq!(wider.to_degrees(), 4.547_940, epsilon = 1e-4);
    }

    fn collinear_cut() -> f64 {
        let cfg = defaults();
        let f = |cut: f64| {
            let c = SourceConfig {
                cut_angle: cut,
                ..cfg
            };
            delta_kappa(&EmissionMode::new(0.0, 0.7022), &c).unwrap()
        };
        bisect(f, 30f64.to_radians(), 33.9f64.to_radians(), 1e-14, 200)
            .unwrap()
            .root
    }

    #[test]
    fn collinear_cut_gives_zero_angle() {
        let cfg = SourceConfig {
            cut_angle: collinear_cut(),
            ..defaults()
        };
        assert_eq!(degenerate_opening_angle(&cfg).unwrap(), 0.0);
    }

    #[test]
    fn unmatchable_cut_is_configuration_error() {
        let cfg = SourceConfig {
            cut_angle: 25f64.to_radians(),
            ..defaults()
        };
        let err = degenerate_opening_angle(&cfg).unwrap_err();
        assert!(err.to_string().contains("not phase-matchable"));
    }

    #[test]
    fn decoherence_phase_central_magnitude() {
        let cfg = defaults();
        let m = central_mode(&cfg).unwrap();
        let p = decoherence_phase(&m, &cfg).unwrap();
        // hand-chained index/k_z oracle
        assert_relative_eq!(p, -874.232_21, epsilon = 1e-3);
    }

    #[test]
    fn decoherence_phase_vanishes_with_length() {
        let mut cfg = defaults();
        let m = EmissionMode::new(0.05, 0.70);
        cfg.crystal_length = 1e-9;
        assert!(decoherence_phase(&m, &cfg).unwrap().abs() < 1e-8);
    }

    #[test]
    fn azimuth_does_not_enter() {
        let cfg = defaults();
        let a = EmissionMode {
            theta_ext: 0.05,
            phi: 0.0,
            lambda_s: 0.69,
        };
        let b = EmissionMode { phi: 2.1, ..a };
        let c = EmissionMode { phi: PI, ..a };
        assert_eq!(
            decoherence_phase(&a, &cfg).unwrap(),
            decoherence_phase(&b, &cfg).unwrap()
        );
        assert_eq!(
            delta_kappa(&a, &cfg).unwrap(),
            delta_kappa(&c, &cfg).unwrap()
        );
    }

    #[test]
    fn compensation_phase_examples() {
        let cfg = defaults();
        let m = central_mode(&cfg).unwrap();
        let zero = SourceConfig {
            comp_thickness: 0.0,
            ..cfg
        };
        assert_eq!(compensation_phase(&m, &zero).unwrap(), 0.0);

        let total = compensation_phase(&m, &cfg).unwrap();
        assert!(total.abs() > 2.0 * 100.0 && total.abs() < 2.0 * 1000.0);

        // at degeneracy both arms see identical geometry
        let slice = SpectralSlice::new(&cfg, 0.7022).unwrap();
        let q = slice.transverse(m.theta_ext);
        let axis = cfg.comp_cut_angle + cfg.comp_tilt;
        let one_arm = cfg.comp_thickness
            * (extraordinary_longitudinal(0.7022, -q, axis, &cfg.sellmeier).unwrap()
                - longitudinal_component(slice.k_s, q).unwrap());
        assert_relative_eq!(total, 2.0 * one_arm, max_relative = 1e-12);
    }

    #[test]
    fn residual_without_compensator_is_decoherence() {
        let cfg = SourceConfig {
            comp_thickness: 0.0,
            phi_0: 0.0,
            ..defaults()
        };
        let m = EmissionMode::new(0.04, 0.71);
        assert_eq!(
            residual_phase(&m, &cfg).unwrap(),
            decoherence_phase(&m, &cfg).unwrap()
        );
    }

    #[test]
    fn calibration_zeroes_center_and_improves_objective() {
        let cfg = defaults();
        let cal = calibrate_compensation(&cfg).unwrap();
        let m = central_mode(&cal).unwrap();
        assert_eq!(residual_phase(&m, &cal).unwrap(), 0.0);
        let at_zero = calibration_objective(&cfg, 0.0).unwrap();
        let tuned = calibration_objective(&cfg, cal.comp_tilt).unwrap();
        assert!(tuned <= at_zero);
    }

    #[test]
    fn calibration_is_idempotent() {
        let once = calibrate_compensation(&defaults()).unwrap();
        let twice = calibrate_compensation(&once).unwrap();
        assert!((once.comp_tilt - twice.comp_tilt).abs() < 1e-3);
    }

    #[test]
    fn hh_first_flips_sign() {
        let vv = defaults();
        let hh = SourceConfig {
            crystal_order: CrystalOrder::HhFirst,
            ..vv
        };
        let m = EmissionMode::new(0.05, 0.70);
        assert_eq!(
            decoherence_phase(&m, &vv).unwrap(),
            -decoherence_phase(&m, &hh).unwrap()
        );
        assert_eq!(
            compensation_phase(&m, &vv).unwrap(),
            -compensation_phase(&m, &hh).unwrap()
        );
    }

    #[test]
    fn residual_is_smooth() {
        let cal = calibrate_compensation(&defaults()).unwrap();
        let f = |t: f64, l: f64| residual_phase(&EmissionMode::new(t, l), &cal).unwrap();
        for (t, l) in [(0.04, 0.69), (0.055, 0.71), (0.07, 0.73)] {
            let fine = (f(t + 1e-6, l) - f(t - 1e-6, l)) / 2e-6;
            let coarse = (f(t + 1e-5, l) - f(t - 1e-5, l)) / 2e-5;
            assert!((fine - coarse).abs() <= 0.01 * coarse.abs().max(1e-3));
            let fine = (f(t, l + 1e-6) - f(t, l - 1e-6)) / 2e-6;
            let coarse = (f(t, l + 1e-5) - f(t, l - 1e-5)) / 2e-5;
            assert!((fine - coarse).abs() <= 0.01 * coarse.abs().max(1e-3));
        }
    }
}
