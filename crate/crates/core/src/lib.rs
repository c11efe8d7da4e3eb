//! Spatial-spectral model of a two-crystal type-I SPDC polarization source
//! and an optimizer for its iris/filter collection windows.
//!
//! * [`crystal_optics`]: uniaxial dispersion and plane-wave geometry.
//! * [`spdc_model`]: phase matching, the HH/VV relative phase and its
//!   compensation.
//! * [`emission_maps`]: filtered detection probability, (θ, λ) maps,
//!   window flux and phase-range metric.
//! * [`window_optimizer`]: fixed-flux enumeration of windows and selection
//!   of the flattest one.
//!
//! Internally wavelengths and lengths are in µm and angles in radians.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod crystal_optics;
pub mod emission_maps;
pub mod error;
pub mod numerics;
pub mod spdc_model;
pub mod window_optimizer;

pub use crystal_optics::SellmeierModel;
pub use emission_maps::{FilterConfig, FluxQuadrature, GridSpec, ModeGrid, WindowArrangement};
pub use error::{CoreError, Result};
pub use spdc_model::{CrystalOrder, EmissionMode, SourceConfig};
pub use window_optimizer::{IsoFluxCurve, IsoFluxSettings};
