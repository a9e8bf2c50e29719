//! Normal-form ambitoric structures, their momenta, metrics, curvature and
//! coefficient conditions.

pub mod conditions;
pub mod curvature;
pub mod family;
pub mod frame;
pub mod general;
pub mod momentum;
pub mod types;
pub mod validate;

pub use conditions::{condition_report, ConditionReport, Residual};
pub use curvature::{extremal_affine_coeffs, scalar_curvature_at, scalar_curvature_f64, scalar_curvature_general, scalar_curvature_values};
pub use family::{build_extremal_family, calabi_check, family_bach_flat, CalabiReport};
pub use frame::{
    conformal_factor, det_h_factor, frame_from_values, h_from_values, h_matrix_at, h_matrix_f64, h_matrix_side, metric_frame_at,
    metric_frame_f64, Mat2, Mat4, MetricFrame,
};
pub use general::{general_q_frame, GeneralFrame};
pub use momentum::{invert_momentum, invert_momentum_f64, momentum, momentum_of, Preimage};
pub use types::{AmbitoricData, AmbitoricType, Geometry, Side, SmoothData};
pub use validate::{boundary_data, positivity_violations, structural_violations, validate_data, BoundaryData, Violation};
