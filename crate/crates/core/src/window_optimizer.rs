//! Iso-flux enumeration of (filter FWHM, iris width) arrangements and
//! selection of the one with the smallest residual-phase range.

use crate::emission_maps::{
    integrated_flux, phase_range_metric, FilterConfig, FluxQuadrature, WindowArrangement,
    PHASE_RANGE_SAMPLES,
};
use crate::error::{CoreError, Result};
use crate::numerics::{bisect, map_indexed};
use crate::spdc_model::{degenerate_opening_angle, SourceConfig};

/// Knobs shared by the iso-flux routines. Angles in radians, wavelengths in µm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsoFluxSettings {
    pub iris_center: f64,
    pub filter_center: f64,
    /// Lower edge of the iris-width bracket.
    pub min_width: f64,
    /// Absolute cap on the iris-width bracket.
    pub max_width: f64,
    pub flux_rtol: f64,
    pub max_iterations: usize,
    pub phase_samples: usize,
    pub quadrature: FluxQuadrature,
}

impl IsoFluxSettings {
    /// Iris centered on the degenerate emission cone, filters on the
    /// degenerate wavelength.
    pub fn for_source(cfg: &SourceConfig, quadrature: FluxQuadrature) -> Result<Self> {
        Ok(Self {
            iris_center: degenerate_opening_angle(cfg)?,
            filter_center: cfg.degenerate_wavelength(),
            min_width: 1e-5,
            max_width: 6f64.to_radians(),
            flux_rtol: 1e-6,
            max_iterations: 200,
            phase_samples: PHASE_RANGE_SAMPLES,
            quadrature,
        })
    }

    /// `[min_width, min(2·center, max_width)]`, further clipped so the
    /// window stays inside the quadrature domain.
    pub fn width_bracket(&self) -> (f64, f64) {
        let hi = (2.0 * self.iris_center)
            .min(self.max_width)
            .min(2.0 * (self.quadrature.theta_max - self.iris_center));
        (self.min_width, hi)
    }

    fn arrangement(&self, width: f64, fwhm: f64) -> WindowArrangement {
        WindowArrangement::new(
            self.iris_center,
            width,
            FilterConfig {
                lambda_center: self.filter_center,
                fwhm,
            },
        )
    }
}

/// Arrangements sharing one flux level, ordered by filter FWHM.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoFluxCurve {
    pub target_flux: f64,
    pub points: Vec<WindowArrangement>,
    pub optimum_index: usize,
    /// FWHM values (µm) for which no iris width reaches the target.
    pub infeasible: Vec<f64>,
}

impl IsoFluxCurve {
    pub fn optimum(&self) -> &WindowArrangement {
        &self.points[self.optimum_index]
    }
}

/// Iris width at which a filter of `fwhm` passes `target_flux`.
///
/// Bisects the monotone width → flux map until the flux matches to well
/// inside `flux_rtol`. A zero target returns the lower bracket edge.
pub fn solve_iris_for_flux(
    fwhm: f64,
    target_flux: f64,
    cfg: &SourceConfig,
    settings: &IsoFluxSettings,
) -> Result<f64> {
    if !(target_flux >= 0.0) || !target_flux.is_finite() {
        return Err(CoreError::invalid("target_flux", "must be finite and >= 0"));
    }
    let (lo, hi) = settings.width_bracket();
    if target_flux == 0.0 {
        return Ok(lo);
    }
    if !(hi > lo) {
        return Err(CoreError::Infeasible(format!(
            "infeasible fwhm {:.3} nm: empty iris-width bracket",
            fwhm * 1e3
        )));
    }
    let flux = |w: f64| integrated_flux(&settings.arrangement(w, fwhm), cfg, &settings.quadrature);
    let f_hi = flux(hi)?;
    if f_hi < target_flux * (1.0 - settings.flux_rtol) {
        return Err(CoreError::Infeasible(format!(
            "infeasible fwhm {:.3} nm: widest iris ({:.4}°) passes {:.6e} < target {:.6e}",
            fwhm * 1e3,
            hi.to_degrees(),
            f_hi,
            target_flux
        )));
    }
    let mut failure = None;
    let residual = |w: f64| match flux(w) {
        Ok(f) => f - target_flux,
        Err(e) => {
            failure.get_or_insert(e);
            f64::NAN
        }
    };
    let tol = 1e-3 * settings.flux_rtol * target_flux;
    let found = bisect(residual, lo, hi, tol, settings.max_iterations);
    if let Some(e) = failure {
        return Err(e);
    }
    match found {
        Some(b) if b.value.abs() <= settings.flux_rtol * target_flux => Ok(b.root),
        _ => Err(CoreError::Infeasible(format!(
            "infeasible fwhm {:.3} nm: target flux {:.6e} not reachable within the iris bracket",
            fwhm * 1e3,
            target_flux
        ))),
    }
}

/// Solves the iris width for each FWHM (µm, strictly increasing) and scores
/// each arrangement by its residual-phase range.
///
/// Infeasible FWHM values are skipped; ties for the optimum go to the
/// smaller FWHM.
pub fn build_iso_flux_curve(
    fwhm_values: &[f64],
    target_flux: f64,
    cfg: &SourceConfig,
    settings: &IsoFluxSettings,
) -> Result<IsoFluxCurve> {
    if fwhm_values.is_empty() {
        return Err(CoreError::invalid("fwhm_values", "must not be empty"));
    }
    if fwhm_values.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(CoreError::invalid(
            "fwhm_values",
            "must be strictly increasing",
        ));
    }
    if let Some(bad) = fwhm_values.iter().find(|f| !(**f > 0.0)) {
        return Err(CoreError::invalid(
            "fwhm_values",
            format!("{bad} is not > 0"),
        ));
    }
    let solved = map_indexed(
        fwhm_values.len(),
        |k| -> Result<Option<WindowArrangement>> {
            let fwhm = fwhm_values[k];
            let width = match solve_iris_for_flux(fwhm, target_flux, cfg, settings) {
                Ok(w) => w,
                Err(CoreError::Infeasible(_)) => return Ok(None),
                Err(e) => return Err(e),
            };
            let mut arr = settings.arrangement(width, fwhm);
            arr.flux = integrated_flux(&arr, cfg, &settings.quadrature)?;
            arr.phase_range = phase_range_metric(&arr, cfg, settings.phase_samples)?;
            Ok(Some(arr))
        },
    );
    let mut points = Vec::new();
    let mut infeasible = Vec::new();
    for (fwhm, r) in fwhm_values.iter().zip(solved) {
        match r? {
            Some(arr) => points.push(arr),
            None => infeasible.push(*fwhm),
        }
    }
    if points.is_empty() {
        return Err(CoreError::Infeasible(
            "empty iso-flux curve: no fwhm reaches the target flux".into(),
        ));
    }
    let optimum_index = points.iter().enumerate().fold(0, |best, (k, p)| {
        if p.phase_range < points[best].phase_range {
            k
        } else {
            best
        }
    });
    Ok(IsoFluxCurve {
        target_flux,
        points,
        optimum_index,
        infeasible,
    })
}

/// Uses `reference` to fix the flux level, then returns the iso-flux curve
/// through it and its best arrangement.
pub fn find_optimal_window(
    reference: &WindowArrangement,
    fwhm_values: &[f64],
    cfg: &SourceConfig,
    settings: &IsoFluxSettings,
) -> Result<(IsoFluxCurve, WindowArrangement)> {
    let settings = IsoFluxSettings {
        iris_center: reference.iris_center,
        filter_center: reference.filter.lambda_center,
        ..*settings
    };
    let target = integrated_flux(reference, cfg, &settings.quadrature)?;
    if !(target > 0.0) {
        return Err(CoreError::Infeasible(
            "reference arrangement passes zero flux; no iso-flux curve exists".into(),
        ));
    }
    let curve = build_iso_flux_curve(fwhm_values, target, cfg, &settings)?;
    let best = *curve.optimum();
    Ok((curve, best))
}
