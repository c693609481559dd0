//! Closed-form evaluation and sampling of the unconstrained straight-line
//! minimum-jerk trajectory.
//!
//! Each axis interpolates from start to end through the quintic blend
//! `b(tau) = 6 tau^5 - 15 tau^4 + 10 tau^3`, which has zero velocity and
//! acceleration at both ends. The k-th time derivative carries a `1/t_f^k`
//! chain-rule factor so that results are dimensionally correct for any
//! duration.

use crate::error::ValidationError;
use crate::trajectory::{sample_uniform, Trajectory};
use crate::types::{MotionSpec, NormalizedTime, Point2, TrajectorySample};

/// Quintic blend `6 tau^5 - 15 tau^4 + 10 tau^3`, strictly increasing from 0 to 1.
fn blend(tau: f64) -> f64 {
    ((6.0 * tau - 15.0) * tau + 10.0) * tau * tau * tau
}

/// First tau-derivative of the blend: `30 tau^4 - 60 tau^3 + 30 tau^2`.
fn blend_d1(tau: f64) -> f64 {
    ((30.0 * tau - 60.0) * tau + 30.0) * tau * tau
}

/// Second tau-derivative: `120 tau^3 - 180 tau^2 + 60 tau`.
fn blend_d2(tau: f64) -> f64 {
    ((120.0 * tau - 180.0) * tau + 60.0) * tau
}

/// Third tau-derivative: `360 tau^2 - 360 tau + 60`.
fn blend_d3(tau: f64) -> f64 {
    (360.0 * tau - 360.0) * tau + 60.0
}

/// Position along the straight minimum-jerk trajectory.
pub fn straight_position(spec: &MotionSpec, tau: NormalizedTime) -> Point2 {
    let (dx, dy) = spec.displacement();
    let b = blend(tau.get());
    Point2::new(spec.start.x + dx * b, spec.start.y + dy * b)
}

/// Velocity in m/s (time derivative, including the `1/t_f` factor).
pub fn straight_velocity(spec: &MotionSpec, tau: NormalizedTime) -> (f64, f64) {
    let (dx, dy) = spec.displacement();
    let d = blend_d1(tau.get()) / spec.duration;
    (dx * d, dy * d)
}

/// Acceleration (m/s²) and jerk (m/s³) per axis.
pub fn straight_derivatives(spec: &MotionSpec, tau: NormalizedTime) -> ((f64, f64), (f64, f64)) {
    let (dx, dy) = spec.displacement();
    let tf = spec.duration;
    let a = blend_d2(tau.get()) / (tf * tf);
    let j = blend_d3(tau.get()) / (tf * tf * tf);
    ((dx * a, dy * a), (dx * j, dy * j))
}

/// Samples the trajectory at `n_samples` uniform normalized times over
/// `[0, 1]` inclusive of both endpoints.
pub fn sample_straight(
    spec: &MotionSpec,
    n_samples: usize,
) -> Result<Vec<TrajectorySample>, ValidationError> {
    sample_uniform(&StraightTrajectory::new(*spec), n_samples, None)
}

/// A straight minimum-jerk trajectory as an evaluable object.
#[derive(Debug, Clone, Copy)]
pub struct StraightTrajectory {
    spec: MotionSpec,
}

impl StraightTrajectory {
    /// Wraps a spec without validating it; callers that need the invariants
    /// enforced should pass the spec through `validate_motion_spec` first.
    pub fn new(spec: MotionSpec) -> Self {
        Self { spec }
    }

    pub fn spec(&self) -> &MotionSpec {
        &self.spec
    }
}

impl Trajectory for StraightTrajectory {
    fn duration(&self) -> f64 {
        self.spec.duration
    }

    fn position(&self, tau: f64) -> Point2 {
        straight_position(&self.spec, NormalizedTime::clamped(tau))
    }

    fn velocity(&self, tau: f64) -> (f64, f64) {
        straight_velocity(&self.spec, NormalizedTime::clamped(tau))
    }

    fn acceleration(&self, tau: f64) -> (f64, f64) {
        straight_derivatives(&self.spec, NormalizedTime::clamped(tau)).0
    }

    fn jerk(&self, tau: f64) -> (f64, f64) {
        straight_derivatives(&self.spec, NormalizedTime::clamped(tau)).1
    }
}
