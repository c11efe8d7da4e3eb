//! Filtered two-photon detection probability, (θ, λ) maps, window flux and
//! the phase-range metric.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::numerics::{cell_centers, golden_section_min, linspace, map_indexed, CompensatedSum};
use crate::spdc_model::{conjugate_idler, EmissionMode, SourceConfig, SpectralSlice};

/// Gaussian band-pass filter in wavelength. Both fields in µm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FilterConfig {
    pub lambda_center: f64,
    pub fwhm: f64,
}

impl FilterConfig {
    /// Filter centered on the degenerate wavelength of `cfg`.
    pub fn degenerate(cfg: &SourceConfig, fwhm: f64) -> Self {
        Self {
            lambda_center: cfg.degenerate_wavelength(),
            fwhm,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.fwhm > 0.0) || !self.fwhm.is_finite() {
            return Err(CoreError::invalid("fwhm", "must be > 0"));
        }
        if !(self.lambda_center > 0.0) || !self.lambda_center.is_finite() {
            return Err(CoreError::invalid("lambda_center", "must be > 0"));
        }
        Ok(())
    }
}

/// `exp(−4 ln2 (λ − λ_c)² / FWHM²)`, equal to 1 at the center.
pub fn filter_transmission(lambda: f64, filter: &FilterConfig) -> f64 {
    let x = (lambda - filter.lambda_center) / filter.fwhm;
    (-4.0 * std::f64::consts::LN_2 * x * x).exp()
}

fn slice_probability(slice: &SpectralSlice<'_>, theta: f64, filter: &FilterConfig) -> f64 {
    let g =
        filter_transmission(slice.lambda_s, filter) * filter_transmission(slice.lambda_i, filter);
    match slice.amplitude(theta) {
        Ok(a) => (g * a) * (g * a),
        Err(_) => 0.0,
    }
}

/// `[G(λ_s) G(λ_i) sinc(Δκ d/2)]²`. Modes whose conjugate cannot be formed
/// inside the dispersion model, or that are evanescent, have probability 0.
pub fn detection_probability(
    mode: &EmissionMode,
    cfg: &SourceConfig,
    filter: &FilterConfig,
) -> f64 {
    if conjugate_idler(mode, cfg).is_err() {
        return 0.0;
    }
    match SpectralSlice::new(cfg, mode.lambda_s) {
        Ok(slice) => slice_probability(&slice, mode.theta_ext, filter),
        Err(_) => 0.0,
    }
}

/// Rectangular map domain; cells are sampled at their centers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub theta_min: f64,
    pub theta_max: f64,
    /// µm
    pub lambda_min: f64,
    /// µm
    pub lambda_max: f64,
    pub n_theta: usize,
    pub n_lambda: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            theta_min: 0.0,
            theta_max: 6f64.to_radians(),
            lambda_min: 0.602,
            lambda_max: 0.802,
            n_theta: 512,
            n_lambda: 512,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_theta < 2 {
            return Err(CoreError::invalid("n_theta", "must be >= 2"));
        }
        if self.n_lambda < 2 {
            return Err(CoreError::invalid("n_lambda", "must be >= 2"));
        }
        if !(self.theta_min >= 0.0) {
            return Err(CoreError::invalid("theta_min", "must be >= 0"));
        }
        if !(self.theta_max > self.theta_min && self.theta_max < PI / 2.0) {
            return Err(CoreError::invalid(
                "theta_max",
                "must exceed theta_min and stay below 90°",
            ));
        }
        if !(self.lambda_min > 0.0) {
            return Err(CoreError::invalid("lambda_min", "must be > 0"));
        }
        if !(self.lambda_max > self.lambda_min) || !self.lambda_max.is_finite() {
            return Err(CoreError::invalid("lambda_max", "must exceed lambda_min"));
        }
        Ok(())
    }

    pub fn theta_step(&self) -> f64 {
        (self.theta_max - self.theta_min) / self.n_theta as f64
    }

    pub fn lambda_step(&self) -> f64 {
        (self.lambda_max - self.lambda_min) / self.n_lambda as f64
    }

    pub fn theta_at(&self, i: usize) -> f64 {
        self.theta_min + (i as f64 + 0.5) * self.theta_step()
    }

    pub fn lambda_at(&self, j: usize) -> f64 {
        self.lambda_min + (j as f64 + 0.5) * self.lambda_step()
    }
}

/// Peak-normalized probability and residual phase per cell.
///
/// Storage is row-major with one row per wavelength: index `j * n_theta + i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeGrid {
    pub spec: GridSpec,
    pub probability: Vec<f64>,
    /// `None` marks cells where the mode is not physical.
    pub phase: Vec<Option<f64>>,
}

impl ModeGrid {
    pub fn index(&self, i_theta: usize, j_lambda: usize) -> usize {
        j_lambda * self.spec.n_theta + i_theta
    }

    /// `(θ, λ)` of the most probable cell; first in storage order on ties.
    pub fn peak(&self) -> (f64, f64) {
        let k = self
            .probability
            .iter()
            .enumerate()
            .fold(
                0,
                |best, (k, &p)| if p > self.probability[best] { k } else { best },
            );
        (
            self.spec.theta_at(k % self.spec.n_theta),
            self.spec.lambda_at(k / self.spec.n_theta),
        )
    }

    /// Probability-weighted mean `(θ, λ)`.
    pub fn centroid(&self) -> (f64, f64) {
        let mut w = CompensatedSum::new();
        let mut t = CompensatedSum::new();
        let mut l = CompensatedSum::new();
        for (k, &p) in self.probability.iter().enumerate() {
            w.add(p);
            t.add(p * self.spec.theta_at(k % self.spec.n_theta));
            l.add(p * self.spec.lambda_at(k / self.spec.n_theta));
        }
        (t.total() / w.total(), l.total() / w.total())
    }
}

/// Fills the probability and residual-phase maps over `spec`.
pub fn compute_maps(
    spec: &GridSpec,
    cfg: &SourceConfig,
    filter: &FilterConfig,
) -> Result<ModeGrid> {
    spec.validate()?;
    filter.validate()?;
    let rows = map_indexed(spec.n_lambda, |j| {
        let lambda = spec.lambda_at(j);
        let mut p = vec![0.0; spec.n_theta];
        let mut phase = vec![None; spec.n_theta];
        if let Ok(slice) = SpectralSlice::new(cfg, lambda) {
            for i in 0..spec.n_theta {
                let mode = EmissionMode::new(spec.theta_at(i), lambda);
                if conjugate_idler(&mode, cfg).is_err() {
                    continue;
                }
                if let Ok(r) = slice.residual_phase(mode.theta_ext) {
                    p[i] = slice_probability(&slice, mode.theta_ext, filter);
                    phase[i] = Some(r);
                }
            }
        }
        (p, phase)
    });
    let mut probability = Vec::with_capacity(spec.n_theta * spec.n_lambda);
    let mut phase = Vec::with_capacity(spec.n_theta * spec.n_lambda);
    for (p, ph) in rows {
        probability.extend(p);
        phase.extend(ph);
    }
    let peak = probability.iter().copied().fold(0.0, f64::max);
    if !(peak > 0.0) {
        return Err(CoreError::Configuration(
            "grid entirely invalid: no cell carries probability".into(),
        ));
    }
    for p in &mut probability {
        *p /= peak;
    }
    Ok(ModeGrid {
        spec: *spec,
        probability,
        phase,
    })
}

/// An iris annulus plus spectral filter, with its evaluated figures of merit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowArrangement {
    pub iris_center: f64,
    /// Full angular width.
    pub iris_width: f64,
    pub filter: FilterConfig,
    pub flux: f64,
    pub phase_range: f64,
}

impl WindowArrangement {
    pub fn new(iris_center: f64, iris_width: f64, filter: FilterConfig) -> Self {
        Self {
            iris_center,
            iris_width,
            filter,
            flux: 0.0,
            phase_range: 0.0,
        }
    }

    pub fn theta_bounds(&self) -> (f64, f64) {
        let h = 0.5 * self.iris_width;
        (self.iris_center - h, self.iris_center + h)
    }

    fn validate_extent(&self) -> Result<()> {
        if !(self.iris_width >= 0.0) || !self.iris_width.is_finite() {
            return Err(CoreError::invalid("iris_width", "must be >= 0"));
        }
        // half-ulp slack so a window touching θ = 0 stays valid
        if self.theta_bounds().0 < -1e-15 {
            return Err(CoreError::invalid(
                "iris_center",
                "iris window extends below θ = 0",
            ));
        }
        Ok(())
    }
}

/// Midpoint quadrature settings for [`integrated_flux`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxQuadrature {
    /// Modeled spectral band, µm.
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub n_lambda: usize,
    /// Largest polar cell, rad.
    pub max_theta_step: f64,
    /// Upper polar bound of the modeled domain.
    pub theta_max: f64,
}

impl Default for FluxQuadrature {
    fn default() -> Self {
        Self::for_grid(&GridSpec::default())
    }
}

impl FluxQuadrature {
    /// 800 spectral cells over the grid's band, 0.005° polar cells.
    pub fn for_grid(grid: &GridSpec) -> Self {
        Self {
            lambda_min: grid.lambda_min,
            lambda_max: grid.lambda_max,
            n_lambda: 800,
            max_theta_step: 0.005f64.to_radians(),
            theta_max: grid.theta_max,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_lambda == 0 {
            return Err(CoreError::invalid("n_lambda", "must be >= 1"));
        }
        if !(self.lambda_max > self.lambda_min && self.lambda_min > 0.0) {
            return Err(CoreError::invalid(
                "lambda_max",
                "band must be ordered and positive",
            ));
        }
        if !(self.max_theta_step > 0.0) {
            return Err(CoreError::invalid("max_theta_step", "must be > 0"));
        }
        Ok(())
    }

    pub fn theta_cells(&self, width: f64) -> usize {
        ((width / self.max_theta_step).ceil() as usize).max(1)
    }
}

/// `∫∫ P(θ, λ) 2π sin θ dθ dλ` over the iris annulus and the modeled band.
///
/// Spectral rows are summed with compensated accumulation and merged in
/// row order, so the total does not depend on how rows are scheduled.
pub fn integrated_flux(
    arr: &WindowArrangement,
    cfg: &SourceConfig,
    quad: &FluxQuadrature,
) -> Result<f64> {
    quad.validate()?;
    arr.validate_extent()?;
    arr.filter.validate()?;
    let (lo, hi) = arr.theta_bounds();
    if hi > quad.theta_max {
        return Err(CoreError::invalid(
            "iris_width",
            format!(
                "iris window upper edge {:.6}° exceeds modeled domain {:.6}°",
                hi.to_degrees(),
                quad.theta_max.to_degrees()
            ),
        ));
    }
    if arr.iris_width == 0.0 {
        return Ok(0.0);
    }
    let lo = lo.max(0.0);
    let n_theta = quad.theta_cells(hi - lo);
    let d_theta = (hi - lo) / n_theta as f64;
    let d_lambda = (quad.lambda_max - quad.lambda_min) / quad.n_lambda as f64;
    let rows = map_indexed(quad.n_lambda, |j| {
        let lambda = quad.lambda_min + (j as f64 + 0.5) * d_lambda;
        let mut acc = CompensatedSum::new();
        let Ok(slice) = SpectralSlice::new(cfg, lambda) else {
            return acc;
        };
        let g = filter_transmission(slice.lambda_s, &arr.filter)
            * filter_transmission(slice.lambda_i, &arr.filter);
        if g == 0.0 {
            return acc;
        }
        for theta in cell_centers(lo, hi, n_theta) {
            if let Ok(a) = slice.amplitude(theta) {
                acc.add((g * a) * (g * a) * TAU * theta.sin());
            }
        }
        acc
    });
    let mut total = CompensatedSum::new();
    for r in &rows {
        total.merge(r);
    }
    Ok(total.total() * d_theta * d_lambda)
}

/// Minimum per-axis sample count for the phase-range region.
pub const PHASE_RANGE_SAMPLES: usize = 101;

/// Peak-to-peak residual phase over the iris window × filter half-maximum band.
///
/// The region is sampled on a `samples × samples` lattice (at least 101 per
/// axis); the extreme samples are then polished by alternating 1-D
/// golden-section searches within their neighboring cells.
pub fn phase_range_metric(
    arr: &WindowArrangement,
    cfg: &SourceConfig,
    samples: usize,
) -> Result<f64> {
    arr.validate_extent()?;
    if !(arr.filter.fwhm >= 0.0) {
        return Err(CoreError::invalid("fwhm", "must be >= 0"));
    }
    let n = samples.max(PHASE_RANGE_SAMPLES);
    let (t_lo, t_hi) = arr.theta_bounds();
    let t_lo = t_lo.max(0.0);
    let half_band = 0.5 * arr.filter.fwhm;
    let (l_lo, l_hi) = (
        arr.filter.lambda_center - half_band,
        arr.filter.lambda_center + half_band,
    );
    let thetas: Vec<f64> = linspace(t_lo, t_hi, n).collect();
    let lambdas: Vec<f64> = linspace(l_lo, l_hi, n).collect();

    let rows = map_indexed(n, |j| {
        let slice = SpectralSlice::new(cfg, lambdas[j]).ok();
        thetas
            .iter()
            .map(|&t| slice.as_ref().and_then(|s| s.residual_phase(t).ok()))
            .collect::<Vec<_>>()
    });

    let mut max: Option<(f64, usize, usize)> = None;
    let mut min: Option<(f64, usize, usize)> = None;
    for (j, row) in rows.iter().enumerate() {
        for (i, v) in row.iter().enumerate() {
            let Some(v) = *v else { continue };
            if max.is_none_or(|m| v > m.0) {
                max = Some((v, i, j));
            }
            if min.is_none_or(|m| v < m.0) {
                min = Some((v, i, j));
            }
        }
    }
    let (Some(max), Some(min)) = (max, min) else {
        return Err(CoreError::Configuration(
            "phase-range region contains no valid mode".into(),
        ));
    };

    let eval =
        |t: f64, l: f64| -> Option<f64> { SpectralSlice::new(cfg, l).ok()?.residual_phase(t).ok() };
    let neighborhood =
        |axis: &[f64], k: usize| (axis[k.saturating_sub(1)], axis[(k + 1).min(axis.len() - 1)]);
    let polish = |start: (f64, usize, usize), sign: f64| -> f64 {
        let (mut best, i, j) = start;
        let (ta, tb) = neighborhood(&thetas, i);
        let (la, lb) = neighborhood(&lambdas, j);
        let (mut t, mut l) = (thetas[i], lambdas[j]);
        let score = |v: Option<f64>| v.map_or(f64::INFINITY, |v| -sign * v);
        for _ in 0..3 {
            if tb > ta {
                let tt = golden_section_min(|x| score(eval(x, l)), ta, tb, 1e-12 * tb.max(1e-9));
                if let Some(v) = eval(tt, l) {
                    if sign * v > sign * best {
                        best = v;
                        t = tt;
                    }
                }
            }
            if lb > la {
                let ll = golden_section_min(|x| score(eval(t, x)), la, lb, 1e-12 * lb);
                if let Some(v) = eval(t, ll) {
                    if sign * v > sign * best {
                        best = v;
                        l = ll;
                    }
                }
            }
        }
        best
    };
    let hi = polish(max, 1.0);
    let lo = polish(min, -1.0);
    Ok((hi - lo).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn filter(fwhm_nm: f64) -> FilterConfig {
        FilterConfig {
            lambda_center: 0.7022,
            fwhm: fwhm_nm * 1e-3,
        }
    }

    #[test]
    fn filter_shape() {
        let f = filter(70.0);
        assert_eq!(filter_transmission(0.7022, &f), 1.0);
        assert_relative_eq!(
            filter_transmission(0.7022 + 0.035, &f),
            0.5,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            filter_transmission(0.7022 - 0.035, &f),
            0.5,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            filter_transmission(0.7022 + 0.070, &f),
            0.0625,
            max_relative = 1e-12
        );
    }

    #[test]
    fn filter_product_is_conjugation_symmetric() {
        let cfg = SourceConfig::default();
        let f = filter(40.0);
        for ls in [0.65, 0.69, 0.72, 0.76] {
            let m = EmissionMode::new(0.04, ls);
            let i = conjugate_idler(&m, &cfg).unwrap();
            let a = filter_transmission(m.lambda_s, &f) * filter_transmission(i.lambda_s, &f);
            let b = filter_transmission(i.lambda_s, &f) * filter_transmission(m.lambda_s, &f);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn probability_is_one_at_the_central_mode() {
        let cfg = SourceConfig::default();
        let m = crate::spdc_model::central_mode(&cfg).unwrap();
        let p = detection_probability(&m, &cfg, &filter(70.0));
        assert_relative_eq!(p, 1.0, max_relative = 1e-18);
    }

    #[test]
    fn probability_zero_on_sinc_node() {
        let mut cfg = SourceConfig::default();
        let m = EmissionMode::new(0.0, 0.7022);
        let dk = crate::spdc_model::delta_kappa(&m, &cfg).unwrap();
        cfg.crystal_length = TAU / dk.abs();
        assert!(detection_probability(&m, &cfg, &filter(70.0)) < 1e-24);
    }

    #[test]
    fn invalid_conjugate_has_zero_probability() {
        let cfg = SourceConfig::default();
        assert_eq!(
            detection_probability(&EmissionMode::new(0.0, 0.5), &cfg, &filter(70.0)),
            0.0
        );
    }

    #[test]
    fn grid_validation() {
        let g = GridSpec {
            n_theta: 1,
            ..GridSpec::default()
        };
        assert!(matches!(g.validate(), Err(CoreError::Invalid { key, .. }) if key == "n_theta"));
    }

    #[test]
    fn small_map_is_peak_normalized() {
        let cfg = SourceConfig::default();
        let spec = GridSpec {
            n_theta: 37,
            n_lambda: 23,
            ..GridSpec::default()
        };
        let grid = compute_maps(&spec, &cfg, &filter(70.0)).unwrap();
        assert_eq!(grid.probability.len(), 37 * 23);
        assert_eq!(grid.probability.iter().copied().fold(0.0, f64::max), 1.0);
        assert!(grid.probability.iter().all(|&p| (0.0..=1.0).contains(&p)));
    }

    #[test]
    fn zero_width_window_has_zero_flux_and_range() {
        let cfg = SourceConfig::default();
        let arr = WindowArrangement::new(0.05, 0.0, filter(30.0));
        assert_eq!(
            integrated_flux(&arr, &cfg, &FluxQuadrature::default()).unwrap(),
            0.0
        );
        let point = WindowArrangement::new(0.05, 0.0, filter(0.0));
        assert_eq!(phase_range_metric(&point, &cfg, 101).unwrap(), 0.0);
    }

    #[test]
    fn window_beyond_domain_is_rejected() {
        let cfg = SourceConfig::default();
        let arr = WindowArrangement::new(0.1, 0.02, filter(30.0));
        assert!(integrated_flux(&arr, &cfg, &FluxQuadrature::default()).is_err());
        let below = WindowArrangement::new(0.001, 0.01, filter(30.0));
        assert!(integrated_flux(&below, &cfg, &FluxQuadrature::default()).is_err());
    }

    #[test]
    fn flux_vanishes_with_window() {
        let cfg = SourceConfig::default();
        let quad = FluxQuadrature::default();
        let c = crate::spdc_model::degenerate_opening_angle(&cfg).unwrap();
        let mut prev = f64::INFINITY;
        for w_deg in [0.5f64, 0.1, 0.01, 0.001] {
            let f = integrated_flux(
                &WindowArrangement::new(c, w_deg.to_radians(), filter(30.0)),
                &cfg,
                &quad,
            )
            .unwrap();
            assert!(f < prev && f > 0.0);
            prev = f;
        }
        let mut prev = f64::INFINITY;
        for fwhm in [30.0, 3.0, 0.3, 0.03] {
            let f = integrated_flux(
                &WindowArrangement::new(c, 0.5f64.to_radians(), filter(fwhm)),
                &cfg,
                &quad,
            )
            .unwrap();
            assert!(f < prev);
            prev = f;
        }
        assert!(
            prev < 1e-3
                * integrated_flux(
                    &WindowArrangement::new(c, 0.5f64.to_radians(), filter(30.0)),
                    &cfg,
                    &quad
                )
                .unwrap()
        );
    }
}
