//! Independent numerical verification of the analytic trajectories: jerk
//! cost by composite Simpson quadrature, a brute-force scan of the cost as
//! a function of the candidate passage time, and finite-difference checks
//! of the derivative chains.
//!
//! Nothing here reuses the analytic antiderivatives or the passage-time
//! polynomial; the oracle is deliberately dumb so it can certify them.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::curved::CurvedTrajectory;
use crate::solver::compute_constants;
use crate::trajectory::Trajectory;
use crate::types::ViaMotionSpec;

/// Simpson nodes per smooth piece. The squared-jerk integrand is a
/// polynomial of modest degree, so this is effectively exact.
const SIMPSON_NODES: usize = 10_001;
/// The scan keeps away from the ends of (0, 1), where the constants of the
/// constrained trajectory are singular.
const SCAN_LO: f64 = 0.01;
const SCAN_HI: f64 = 0.99;

/// Jerk cost of candidate passage times on a uniform grid.
#[derive(Debug, Clone)]
pub struct CostScanResult {
    pub grid: Vec<f64>,
    pub costs: Vec<f64>,
    /// Grid point with the smallest cost.
    pub minimizer: f64,
}

/// Integral of the squared jerk magnitude over the movement,
/// `M = integral of (jx^2 + jy^2) dt` from 0 to `t_f`, by composite Simpson
/// with 10,001 nodes per smooth piece (pieces split at the breakpoints).
pub fn jerk_cost<T: Trajectory + ?Sized>(traj: &T) -> f64 {
    jerk_cost_with_nodes(traj, SIMPSON_NODES)
}

/// As `jerk_cost` with an explicit node count (odd, at least 3); exposed so
/// convergence of the quadrature itself can be checked.
pub fn jerk_cost_with_nodes<T: Trajectory + ?Sized>(traj: &T, nodes: usize) -> f64 {
    assert!(
        nodes >= 3 && nodes % 2 == 1,
        "Simpson needs an odd node count"
    );
    let tf = traj.duration();
    let mut cuts: Vec<f64> = vec![0.0];
    for &b in traj.breakpoints() {
        if b > 0.0 && b < 1.0 {
            cuts.push(b);
        }
    }
    cuts.push(1.0);
    cuts.sort_by(|a, b| a.partial_cmp(b).expect("breakpoints are finite"));
    cuts.dedup();

    let squared_jerk = |tau: f64| {
        let (jx, jy) = traj.jerk(tau);
        jx * jx + jy * jy
    };

    let mut total = 0.0;
    for pair in cuts.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let h = (b - a) / (nodes - 1) as f64;
        let mut sum = squared_jerk(a) + squared_jerk(b);
        for i in 1..nodes - 1 {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            sum += w * squared_jerk(a + i as f64 * h);
        }
        total += sum * h / 3.0;
    }
    total * tf // d tau -> dt
}

/// Evaluates the jerk cost of the constrained trajectory for `grid_size`
/// candidate passage times uniform over `[0.01, 0.99]` and returns the grid
/// minimizer. Ill-conditioned grid points record an infinite cost.
///
/// This is the brute-force route to the optimal passage time: its minimizer
/// must agree with the polynomial root to within one grid step.
pub fn cost_vs_tau1_scan(spec: &ViaMotionSpec, grid_size: usize) -> CostScanResult {
    assert!(grid_size >= 3, "scan needs at least 3 grid points");
    let step = (SCAN_HI - SCAN_LO) / (grid_size - 1) as f64;
    let grid: Vec<f64> = (0..grid_size).map(|i| SCAN_LO + i as f64 * step).collect();
    let costs: Vec<f64> = grid
        .iter()
        .map(|&tau1| match compute_constants(spec, tau1) {
            Ok(k) => jerk_cost(&CurvedTrajectory::from_constants(
                spec.base.start,
                spec.base.duration,
                tau1,
                &k,
            )),
            Err(_) => f64::INFINITY,
        })
        .collect();
    let best = costs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.partial_cmp(b).expect("costs are not NaN"))
        .map(|(i, _)| i)
        .expect("grid is non-empty");
    CostScanResult {
        minimizer: grid[best],
        grid,
        costs,
    }
}

/// Central-difference step in normalized time.
const FD_STEP: f64 = 1e-5;
/// Probes keep this margin from the interval ends and any breakpoint.
const FD_MARGIN: f64 = 1e-3;

/// Compares the analytic derivative of the given order (1 = velocity,
/// 2 = acceleration, 3 = jerk) against central differences of the
/// next-lower derivative at `n_probes` pseudo-random interior times,
/// excluding neighborhoods of the breakpoints. Returns the largest
/// deviation relative to the magnitude of that derivative over the
/// trajectory (0 for an identically-zero derivative).
pub fn finite_difference_check<T: Trajectory + ?Sized>(
    traj: &T,
    order: usize,
    n_probes: usize,
) -> f64 {
    assert!((1..=3).contains(&order), "order must be 1, 2, or 3");
    let tf = traj.duration();
    let eval = |tau: f64, ord: usize| -> (f64, f64) {
        match ord {
            0 => {
                let p = traj.position(tau);
                (p.x, p.y)
            }
            1 => traj.velocity(tau),
            2 => traj.acceleration(tau),
            _ => traj.jerk(tau),
        }
    };

    let mut scale = 0.0f64;
    for i in 0..=100 {
        let (x, y) = eval(i as f64 / 100.0, order);
        scale = scale.max(x.abs()).max(y.abs());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0xfd_5eed ^ order as u64);
    let mut worst = 0.0f64;
    let mut accepted = 0;
    while accepted < n_probes {
        let tau: f64 = rng.gen_range(FD_MARGIN..1.0 - FD_MARGIN);
        if traj
            .breakpoints()
            .iter()
            .any(|&b| (tau - b).abs() < FD_MARGIN)
        {
            continue;
        }
        accepted += 1;
        let (ax, ay) = eval(tau, order);
        let (px, py) = eval(tau + FD_STEP, order - 1);
        let (mx, my) = eval(tau - FD_STEP, order - 1);
        let denom = 2.0 * FD_STEP * tf;
        worst = worst
            .max((ax - (px - mx) / denom).abs())
            .max((ay - (py - my) / denom).abs());
    }
    if scale == 0.0 {
        worst
    } else {
        worst / scale
    }
}
