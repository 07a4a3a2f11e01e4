//! Commuting integrals of motion. The term tables are applied by an x-space
//! engine, and the results are projected to z-space operators. The
//! characteristic operator Δ(t) is assembled from these integrals.

pub mod characteristic;
pub mod engine;
pub mod operator;
pub mod table;

pub use characteristic::{
    calibrate, calibrated_integral, char_apply, char_apply_at, commutator_residual, integral_eigenvalue,
    proportionality, Calibration, CommutatorReport, OrderCalibration,
};
pub use engine::{apply_gauge_potential, apply_integral, apply_momentum, gauge_potential, monomial_action};
pub use operator::{derive_operator, engine_operator, rational_content, transcribed_operator, ZOperator};
pub use table::{Factor, IntegralOperator, TableTerm};
