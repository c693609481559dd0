//! A common evaluation surface for the straight and curved trajectories,
//! shared by the sampler and the numerical verification oracle.

use crate::error::ValidationError;
use crate::types::{Point2, TrajectorySample};

/// Analytic 2D trajectory parameterized by normalized time `tau` in `[0, 1]`.
///
/// Velocity, acceleration and jerk are derivatives with respect to physical
/// time, i.e. they carry the `1/t_f^k` chain-rule factors.
pub trait Trajectory {
    /// Duration of motion `t_f`, seconds.
    fn duration(&self) -> f64;

    fn position(&self, tau: f64) -> Point2;
    fn velocity(&self, tau: f64) -> (f64, f64);
    fn acceleration(&self, tau: f64) -> (f64, f64);
    fn jerk(&self, tau: f64) -> (f64, f64);

    /// Interior normalized times where the piecewise definition changes.
    fn breakpoints(&self) -> &[f64] {
        &[]
    }

    fn sample_at(&self, tau: f64) -> TrajectorySample {
        TrajectorySample {
            t: tau * self.duration(),
            tau,
            position: self.position(tau),
            velocity: self.velocity(tau),
            acceleration: self.acceleration(tau),
            jerk: self.jerk(tau),
        }
    }
}

/// Grid points closer than this to an inserted breakpoint count as covering it.
const GRID_SNAP: f64 = 1e-12;

/// Samples a trajectory at `n` uniform normalized times over `[0, 1]`
/// inclusive, inserting `extra` (in sorted position) unless a grid point
/// already covers it.
pub(crate) fn sample_uniform<T: Trajectory + ?Sized>(
    traj: &T,
    n: usize,
    extra: Option<f64>,
) -> Result<Vec<TrajectorySample>, ValidationError> {
    if n < 2 {
        return Err(ValidationError::InvalidSampleCount { n });
    }
    let mut taus: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
    if let Some(b) = extra {
        let covered = taus.iter().any(|&t| (t - b).abs() <= GRID_SNAP);
        if !covered {
            let at = taus.partition_point(|&t| t < b);
            taus.insert(at, b);
        }
    }
    Ok(taus.into_iter().map(|tau| traj.sample_at(tau)).collect())
}
