//! Uniaxial-crystal dispersion and plane-wave geometry.
//!
//! Wavelengths are vacuum wavelengths in µm, angles are radians and
//! wavevectors are rad/µm throughout.

use std::f64::consts::{FRAC_PI_2, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// Two-term Sellmeier dispersion for the ordinary and extraordinary
/// principal indices of a uniaxial crystal:
///
/// `n² = a + b / (λ² − c) − d λ²` with `λ` in µm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SellmeierModel {
    pub a_o: f64,
    pub b_o: f64,
    pub c_o: f64,
    pub d_o: f64,
    pub a_e: f64,
    pub b_e: f64,
    pub c_e: f64,
    pub d_e: f64,
    /// Lower validity bound, µm.
    pub lambda_min: f64,
    /// Upper validity bound, µm.
    pub lambda_max: f64,
}

impl SellmeierModel {
    /// β-BaB₂O₄ coefficients of Kato (1986), valid from 0.22 to 1.06 µm.
    pub const fn kato_bbo() -> Self {
        Self {
            a_o: 2.7359,
            b_o: 0.01878,
            c_o: 0.01822,
            d_o: 0.01354,
            a_e: 2.3753,
            b_e: 0.01224,
            c_e: 0.01667,
            d_e: 0.01516,
            lambda_min: 0.22,
            lambda_max: 1.06,
        }
    }

    /// Checks range ordering, pole placement and positivity of both squared
    /// indices across the validity range.
    pub fn validate(&self) -> Result<()> {
        let coeffs = [
            ("a_o", self.a_o),
            ("b_o", self.b_o),
            ("c_o", self.c_o),
            ("d_o", self.d_o),
            ("a_e", self.a_e),
            ("b_e", self.b_e),
            ("c_e", self.c_e),
            ("d_e", self.d_e),
            ("lambda_min_um", self.lambda_min),
            ("lambda_max_um", self.lambda_max),
        ];
        for (key, v) in coeffs {
            if !v.is_finite() {
                return Err(CoreError::invalid(key, "must be finite"));
            }
        }
        if self.lambda_min <= 0.0 {
            return Err(CoreError::invalid("lambda_min_um", "must be > 0"));
        }
        if self.lambda_min >= self.lambda_max {
            return Err(CoreError::invalid(
                "lambda_max_um",
                "must exceed lambda_min_um",
            ));
        }
        let l2 = self.lambda_min * self.lambda_min;
        if self.c_o >= l2 {
            return Err(CoreError::invalid(
                "c_o",
                "pole inside validity range (c_o >= lambda_min²)",
            ));
        }
        if self.c_e >= l2 {
            return Err(CoreError::invalid(
                "c_e",
                "pole inside validity range (c_e >= lambda_min²)",
            ));
        }
        // n² has at most one interior extremum per branch; a dense sample
        // plus both endpoints is enough to catch sign changes in practice.
        for lambda in crate::numerics::linspace(self.lambda_min, self.lambda_max, 257) {
            let (no2, ne2) = (self.n2_o(lambda), self.n2_e(lambda));
            if !(no2 > 0.0) {
                return Err(CoreError::invalid(
                    "a_o",
                    format!("ordinary n² <= 0 at {lambda} µm"),
                ));
            }
            if !(ne2 > 0.0) {
                return Err(CoreError::invalid(
                    "a_e",
                    format!("extraordinary n² <= 0 at {lambda} µm"),
                ));
            }
        }
        Ok(())
    }

    fn check_range(&self, lambda: f64) -> Result<()> {
        if lambda >= self.lambda_min && lambda <= self.lambda_max {
            Ok(())
        } else {
            Err(CoreError::WavelengthOutOfRange {
                lambda_um: lambda,
                min_um: self.lambda_min,
                max_um: self.lambda_max,
            })
        }
    }

    pub fn contains(&self, lambda: f64) -> bool {
        self.check_range(lambda).is_ok()
    }

    fn n2_o(&self, lambda: f64) -> f64 {
        let l2 = lambda * lambda;
        self.a_o + self.b_o / (l2 - self.c_o) - self.d_o * l2
    }

    fn n2_e(&self, lambda: f64) -> f64 {
        let l2 = lambda * lambda;
        self.a_e + self.b_e / (l2 - self.c_e) - self.d_e * l2
    }

    /// Ordinary index `n_o(λ)`.
    pub fn index_ordinary(&self, lambda: f64) -> Result<f64> {
        self.check_range(lambda)?;
        Ok(self.n2_o(lambda).sqrt())
    }

    /// Extraordinary principal index `n_e(λ)`, i.e. for propagation normal to
    /// the optic axis.
    pub fn index_extraordinary_principal(&self, lambda: f64) -> Result<f64> {
        self.check_range(lambda)?;
        Ok(self.n2_e(lambda).sqrt())
    }

    /// Index seen by an extraordinary wave whose wavevector makes
    /// `theta_axis` with the optic axis.
    pub fn index_extraordinary(&self, lambda: f64, theta_axis: f64) -> Result<f64> {
        let no = self.index_ordinary(lambda)?;
        let ne = self.index_extraordinary_principal(lambda)?;
        let (s, c) = theta_axis.sin_cos();
        Ok((c * c / (no * no) + s * s / (ne * ne)).sqrt().recip())
    }
}

impl Default for SellmeierModel {
    fn default() -> Self {
        Self::kato_bbo()
    }
}

/// Position of a plane wave relative to the crystal normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveGeometry {
    /// External polar angle from the crystal normal.
    pub theta_ext: f64,
    pub phi: f64,
    /// Vacuum wavelength, µm.
    pub lambda_vac: f64,
}

impl WaveGeometry {
    pub fn validate(&self, model: &SellmeierModel) -> Result<()> {
        if !(self.theta_ext >= 0.0 && self.theta_ext < FRAC_PI_2) {
            return Err(CoreError::invalid("theta_ext", "must lie in [0, π/2)"));
        }
        model.check_range(self.lambda_vac)
    }

    /// Transverse wavevector magnitude, conserved across the crystal face.
    pub fn transverse_wavevector(&self) -> f64 {
        TAU / self.lambda_vac * self.theta_ext.sin()
    }
}

/// `k = 2πn/λ`.
pub fn wavevector_magnitude(lambda: f64, n: f64) -> f64 {
    TAU * n / lambda
}

/// Snell refraction from air into a medium of index `n`.
pub fn refract_external_to_internal(theta_ext: f64, n: f64) -> f64 {
    (theta_ext.sin() / n).asin()
}

/// `k_z = sqrt(k² − q²)`; errors for evanescent modes.
pub fn longitudinal_component(k: f64, q: f64) -> Result<f64> {
    let q = q.abs();
    if q > k {
        return Err(CoreError::Evanescent { k, q });
    }
    Ok(((k - q) * (k + q)).sqrt())
}

/// Longitudinal wavevector of an extraordinary wave with transverse
/// wavevector `q` lying in the principal plane.
///
/// The optic axis sits at `axis_angle` from the surface normal. `q` is
/// signed: positive values lean the wavevector toward the optic axis.
/// Solves `k_∥²/n_o² + k_⊥²/n_e² = (2π/λ)²` for `k_z`, which is the same
/// as evaluating the angle-dependent index at the self-consistent internal
/// direction.
pub fn extraordinary_longitudinal(
    lambda: f64,
    q: f64,
    axis_angle: f64,
    model: &SellmeierModel,
) -> Result<f64> {
    let no = model.index_ordinary(lambda)?;
    let ne = model.index_extraordinary_principal(lambda)?;
    let k0 = TAU / lambda;
    let (s, c) = axis_angle.sin_cos();
    let (io, ie) = ((no * no).recip(), (ne * ne).recip());
    // k_∥ = q s + k_z c, k_⊥ = q c − k_z s
    let a = c * c * io + s * s * ie;
    let b = 2.0 * q * s * c * (io - ie);
    let cc = q * q * (s * s * io + c * c * ie) - k0 * k0;
    let disc = b * b - 4.0 * a * cc;
    if disc < 0.0 {
        return Err(CoreError::Evanescent {
            k: k0 * ne.max(no),
            q: q.abs(),
        });
    }
    Ok((-b + disc.sqrt()) / (2.0 * a))
}
