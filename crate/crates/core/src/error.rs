use thiserror::Error;

/// Errors raised by the optics, emission and optimization routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    /// A wavelength (µm) fell outside the dispersion model's validity range.
    #[error("wavelength {lambda_um} µm outside dispersion validity range [{min_um}, {max_um}] µm")]
    WavelengthOutOfRange {
        lambda_um: f64,
        min_um: f64,
        max_um: f64,
    },

    /// Transverse wavevector exceeds the total wavevector; the mode does not propagate.
    #[error("evanescent mode: transverse wavevector {q} exceeds wavevector {k} (rad/µm)")]
    Evanescent { k: f64, q: f64 },

    /// A parameter violates a type invariant. `key` names the offending field.
    #[error("invalid {key}: {reason}")]
    Invalid { key: String, reason: String },

    /// The configuration cannot produce the requested quantity.
    #[error("{0}")]
    Configuration(String),

    /// The iso-flux search could not realize the requested flux.
    #[error("{0}")]
    Infeasible(String),
}

impl CoreError {
    pub(crate) fn invalid(key: impl Into<String>, reason: impl Into<String>) -> Self {
        CoreError::Invalid {
            key: key.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, CoreError>;
