//! Evaluation and sampling of the piecewise via-point minimum-jerk
//! trajectory.
//!
//! Before the passage time each axis is the quintic
//!
//! ```text
//! x(tau) = x0 + (t_f^5 / 720) (pi * P(tau; tau1) + c * Q(tau))
//! ```
//!
//! and after it the correction `pi * t_f^5 (tau - tau1)^5 / 120` is added,
//! so position through the 4th time derivative stay continuous at `tau1`
//! while the 5th jumps. Time derivatives carry `1/t_f^k` chain-rule
//! factors, as in the straight case.

use crate::error::ValidationError;
use crate::solver::{ViaConstants, ViaSolution};
use crate::trajectory::{sample_uniform, Trajectory};
use crate::types::{NormalizedTime, Point2, TrajectorySample};

/// One axis of the piecewise trajectory: quintic coefficients (ascending)
/// plus the post-passage correction coefficient `pi * t_f^5 / 120`.
#[derive(Debug, Clone, Copy)]
struct AxisQuintic {
    coeffs: [f64; 6],
    correction: f64,
}

impl AxisQuintic {
    fn from_constants(offset: f64, pi: f64, c: f64, tau1: f64, tf: f64) -> Self {
        let t1_2 = tau1 * tau1;
        let t1_3 = t1_2 * tau1;
        let t1_4 = t1_3 * tau1;
        let k = tf.powi(5) / 720.0;
        Self {
            coeffs: [
                offset,
                0.0,
                0.0,
                k * (pi * (-30.0 * t1_4 + 80.0 * t1_3 - 60.0 * t1_2) - 10.0 * c),
                k * (pi * (15.0 * t1_4 - 30.0 * t1_3 + 30.0 * tau1) + 15.0 * c),
                k * (-6.0 * (pi + c)),
            ],
            correction: pi * tf.powi(5) / 120.0,
        }
    }

    /// `order`-th tau-derivative at `tau`; the pre-passage branch is used at
    /// exactly `tau = tau1` (both branches agree there).
    fn tau_derivative(&self, tau: f64, tau1: f64, order: usize) -> f64 {
        if order > 5 {
            return 0.0;
        }
        let mut acc = 0.0;
        for k in (order..6).rev() {
            let mut falling = 1.0;
            for j in 0..order {
                falling *= (k - j) as f64;
            }
            acc = acc * tau + self.coeffs[k] * falling;
        }
        if tau > tau1 {
            let mut falling = 1.0;
            for j in 0..order {
                falling *= (5 - j) as f64;
            }
            acc += self.correction * falling * (tau - tau1).powi(5 - order as i32);
        }
        acc
    }
}

/// A solved curved minimum-jerk trajectory as an evaluable object.
#[derive(Debug, Clone)]
pub struct CurvedTrajectory {
    duration: f64,
    breaks: [f64; 1],
    x: AxisQuintic,
    y: AxisQuintic,
}

impl CurvedTrajectory {
    pub fn new(sol: &ViaSolution) -> Self {
        Self::from_constants(
            sol.spec.base.start,
            sol.spec.base.duration,
            sol.tau1,
            &sol.constants(),
        )
    }

    /// Builds the constrained trajectory for an arbitrary passage time and
    /// constants. Used by the brute-force cost scan, which probes passage
    /// times away from the optimum.
    pub fn from_constants(start: Point2, duration: f64, tau1: f64, k: &ViaConstants) -> Self {
        Self {
            duration,
            breaks: [tau1],
            x: AxisQuintic::from_constants(start.x, k.pi1, k.c1, tau1, duration),
            y: AxisQuintic::from_constants(start.y, k.pi2, k.c2, tau1, duration),
        }
    }

    pub fn tau1(&self) -> f64 {
        self.breaks[0]
    }

    /// `order`-th time derivative per axis (0 = position, 1 = velocity, ...).
    /// Supports orders up to 5; the 5th is the one with the jump at `tau1`.
    pub fn time_derivative(&self, tau: f64, order: usize) -> (f64, f64) {
        let tau1 = self.tau1();
        let scale = self.duration.powi(order as i32).recip();
        (
            self.x.tau_derivative(tau, tau1, order) * scale,
            self.y.tau_derivative(tau, tau1, order) * scale,
        )
    }
}

impl Trajectory for CurvedTrajectory {
    fn duration(&self) -> f64 {
        self.duration
    }

    fn position(&self, tau: f64) -> Point2 {
        let (x, y) = self.time_derivative(tau, 0);
        Point2::new(x, y)
    }

    fn velocity(&self, tau: f64) -> (f64, f64) {
        self.time_derivative(tau, 1)
    }

    fn acceleration(&self, tau: f64) -> (f64, f64) {
        self.time_derivative(tau, 2)
    }

    fn jerk(&self, tau: f64) -> (f64, f64) {
        self.time_derivative(tau, 3)
    }

    fn breakpoints(&self) -> &[f64] {
        &self.breaks
    }
}

/// Position of the curved trajectory at normalized time `tau`.
pub fn curved_position(sol: &ViaSolution, tau: NormalizedTime) -> Point2 {
    CurvedTrajectory::new(sol).position(tau.get())
}

/// Velocity in m/s per axis.
pub fn curved_velocity(sol: &ViaSolution, tau: NormalizedTime) -> (f64, f64) {
    CurvedTrajectory::new(sol).velocity(tau.get())
}

/// Acceleration (m/s²) and jerk (m/s³) per axis.
pub fn curved_derivatives(sol: &ViaSolution, tau: NormalizedTime) -> ((f64, f64), (f64, f64)) {
    let traj = CurvedTrajectory::new(sol);
    (traj.acceleration(tau.get()), traj.jerk(tau.get()))
}

/// Samples at `n_samples` uniform normalized times, inserting the passage
/// time `tau1` as an extra sample unless a grid point already covers it, so
/// the via point is always an exported row.
pub fn sample_curved(
    sol: &ViaSolution,
    n_samples: usize,
) -> Result<Vec<TrajectorySample>, ValidationError> {
    sample_uniform(&CurvedTrajectory::new(sol), n_samples, Some(sol.tau1))
}
