//! Domain types shared by every module: points, motion specifications,
//! normalized time, and trajectory samples, together with their validation.
//!
//! All types are immutable values in SI units (meters, seconds); they are
//! `Copy` and safe to share across threads.

use crate::error::ValidationError;

/// A point in the 2D workspace, in meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Euclidean distance to another point.
    pub fn distance(&self, other: &Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// A straight rest-to-rest movement: start and end points plus duration `t_f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MotionSpec {
    pub start: Point2,
    pub end: Point2,
    /// Duration of motion `t_f`, in seconds.
    pub duration: f64,
}

impl MotionSpec {
    pub const fn new(start: Point2, end: Point2, duration: f64) -> Self {
        Self {
            start,
            end,
            duration,
        }
    }

    /// Displacement `end - start` per axis.
    pub fn displacement(&self) -> (f64, f64) {
        (self.end.x - self.start.x, self.end.y - self.start.y)
    }
}

/// A curved movement: a straight spec plus one interior via point the
/// trajectory must pass through at an a-priori-unknown time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViaMotionSpec {
    pub base: MotionSpec,
    pub via: Point2,
}

impl ViaMotionSpec {
    pub const fn new(base: MotionSpec, via: Point2) -> Self {
        Self { base, via }
    }

    /// Characteristic length of the movement, used to scale tolerances.
    pub fn path_scale(&self) -> f64 {
        self.base.start.distance(&self.base.end) + self.base.start.distance(&self.via)
    }
}

/// Normalized time `tau = t / t_f`, restricted to `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct NormalizedTime(f64);

impl NormalizedTime {
    /// Returns `None` unless `0 <= tau <= 1`.
    pub fn new(tau: f64) -> Option<Self> {
        (0.0..=1.0).contains(&tau).then_some(Self(tau))
    }

    /// Clamps an arbitrary value into `[0, 1]` (NaN maps to 0).
    pub fn clamped(tau: f64) -> Self {
        if tau.is_nan() {
            Self(0.0)
        } else {
            Self(tau.clamp(0.0, 1.0))
        }
    }

    pub const ZERO: Self = Self(0.0);
    pub const ONE: Self = Self(1.0);

    pub fn get(self) -> f64 {
        self.0
    }
}

/// One time-stamped state of a trajectory: position and its first three
/// time derivatives on both axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySample {
    /// Physical time, seconds.
    pub t: f64,
    /// Normalized time `t / t_f`.
    pub tau: f64,
    pub position: Point2,
    /// (m/s, m/s)
    pub velocity: (f64, f64),
    /// (m/s², m/s²)
    pub acceleration: (f64, f64),
    /// (m/s³, m/s³)
    pub jerk: (f64, f64),
}

/// Checks the `MotionSpec` invariants and returns the spec unchanged.
///
/// Validation is idempotent; evaluation functions assume their spec has
/// passed through here.
pub fn validate_motion_spec(spec: MotionSpec) -> Result<MotionSpec, ValidationError> {
    if !spec.start.is_finite() || !spec.end.is_finite() {
        return Err(ValidationError::NonFiniteInput);
    }
    if !spec.duration.is_finite() || spec.duration <= 0.0 {
        return Err(ValidationError::NonPositiveDuration {
            duration: spec.duration,
        });
    }
    if spec.start == spec.end {
        return Err(ValidationError::DegenerateSegment);
    }
    Ok(spec)
}

/// Checks the `ViaMotionSpec` invariants (including the nested spec) and
/// returns the spec unchanged.
///
/// Only exact coincidence of the via point with an endpoint is rejected; a
/// via point merely close to an endpoint is accepted but yields an
/// ill-conditioned passage-time problem (the constants carry factors of
/// `1/tau1^5 (1-tau1)^5`), which the solver reports separately.
pub fn validate_via_spec(spec: ViaMotionSpec) -> Result<ViaMotionSpec, ValidationError> {
    validate_motion_spec(spec.base)?;
    if !spec.via.is_finite() {
        return Err(ValidationError::NonFiniteInput);
    }
    if spec.via == spec.base.start || spec.via == spec.base.end {
        return Err(ValidationError::ViaCoincidesWithEndpoint);
    }
    Ok(spec)
}
