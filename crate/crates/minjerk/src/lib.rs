//! Minimum-jerk trajectory generation for 2D point-to-point movements.
//!
//! Two movement families are covered:
//!
//! - **straight**: the rest-to-rest quintic profile between two points
//!   ([`straight`]);
//! - **curved**: movements forced through one interior via point at an
//!   a-priori-unknown passage time, solved exactly from the optimality
//!   condition of the jerk cost functional ([`solver`], [`curved`]).
//!
//! The [`oracle`] module verifies both numerically (quadrature of the jerk
//! cost, brute-force passage-time scan, finite-difference checks) without
//! reusing any of the closed forms it certifies.
//!
//! ```
//! use minjerk::{solve_via, validate_via_spec, MotionSpec, Point2, ViaMotionSpec};
//!
//! let spec = validate_via_spec(ViaMotionSpec::new(
//!     MotionSpec::new(Point2::new(0.0, 0.0), Point2::new(0.0, 0.3), 1.0),
//!     Point2::new(0.1, 0.2),
//! ))
//! .unwrap();
//! let solution = solve_via(&spec).unwrap();
//! assert!((solution.tau1 - 0.553).abs() < 1e-3);
//! ```

pub mod curved;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod solver;
pub mod straight;
pub mod trajectory;
pub mod types;

pub use curved::{
    curved_derivatives, curved_position, curved_velocity, sample_curved, CurvedTrajectory,
};
pub use error::{SolveError, ValidationError};
pub use oracle::{cost_vs_tau1_scan, finite_difference_check, jerk_cost, CostScanResult};
pub use poly::{find_real_roots, RealPolynomial};
pub use solver::{
    build_auxiliary_polys, build_tau1_polynomial, compute_constants, hamiltonian_residual,
    solve_via, AuxiliaryPolys, ViaConstants, ViaSolution,
};
pub use straight::{
    sample_straight, straight_derivatives, straight_position, straight_velocity, StraightTrajectory,
};
pub use trajectory::Trajectory;
pub use types::{
    validate_motion_spec, validate_via_spec, MotionSpec, NormalizedTime, Point2, TrajectorySample,
    ViaMotionSpec,
};
