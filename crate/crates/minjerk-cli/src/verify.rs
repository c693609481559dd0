//! The `verify` subcommand: runs the numerical oracle suite over the four
//! reference movements plus the chord-midpoint fixture and reports one
//! pass/fail line per property.

use std::io::{self, Write};

use minjerk::{
    cost_vs_tau1_scan, finite_difference_check, hamiltonian_residual, jerk_cost, solve_via,
    validate_via_spec, CurvedTrajectory, MotionSpec, NormalizedTime, Point2, StraightTrajectory,
    Trajectory, ViaMotionSpec,
};

struct Fixture {
    label: &'static str,
    spec: ViaMotionSpec,
    expected_tau1: f64,
}

fn fixtures() -> Vec<Fixture> {
    let mk = |label, (xf, yf), (x1, y1), tf, expected_tau1| Fixture {
        label,
        spec: validate_via_spec(ViaMotionSpec::new(
            MotionSpec::new(Point2::new(0.0, 0.0), Point2::new(xf, yf), tf),
            Point2::new(x1, y1),
        ))
        .expect("fixture specs are valid"),
        expected_tau1,
    };
    vec![
        mk("case 1", (0.0, 0.3), (0.1, 0.2), 1.0, 0.553),
        mk("case 2", (0.0, 0.4), (0.1, 0.1), 1.0, 0.4055),
        mk("case 3", (0.3, 0.0), (0.2, 0.2), 1.0, 0.5245),
        mk("case 4", (0.6, 0.0), (0.1, 0.3), 2.0, 0.4355),
        mk("chord midpoint", (0.3, 0.0), (0.15, 0.0), 1.0, 0.5),
    ]
}

/// Runs every check, reporting one line per property. Returns whether all
/// of them passed.
pub fn run(out: &mut dyn Write) -> io::Result<bool> {
    let mut all_ok = true;
    let mut check = |out: &mut dyn Write, label: &str, ok: bool, detail: String| {
        all_ok &= ok;
        writeln!(
            out,
            "  {label}: {} ({detail})",
            if ok { "pass" } else { "FAIL" }
        )
    };

    for f in fixtures() {
        let base = f.spec.base;
        writeln!(
            out,
            "verify {} [({}, {}) -> ({}, {}) via ({}, {}), tf = {} s]",
            f.label,
            base.start.x,
            base.start.y,
            base.end.x,
            base.end.y,
            f.spec.via.x,
            f.spec.via.y,
            base.duration
        )?;

        let sol = match solve_via(&f.spec) {
            Ok(sol) => sol,
            Err(err) => {
                check(out, "passage-time solve", false, format!("{err}"))?;
                continue;
            }
        };
        check(
            out,
            "passage time",
            (sol.tau1 - f.expected_tau1).abs() <= 1e-3,
            format!("tau1 = {:.4}, expected {}", sol.tau1, f.expected_tau1),
        )?;

        let scale = f.spec.path_scale();
        let traj = CurvedTrajectory::new(&sol);
        let via_pos = traj.position(sol.tau1);
        let end_pos = traj.position(1.0);
        let (vx, vy) = traj.velocity(1.0);
        let constrained = (via_pos.x - f.spec.via.x).abs() <= 1e-9 * scale
            && (via_pos.y - f.spec.via.y).abs() <= 1e-9 * scale
            && (end_pos.x - base.end.x).abs() <= 1e-9 * scale
            && (end_pos.y - base.end.y).abs() <= 1e-9 * scale
            && vx.hypot(vy) <= 1e-9 * scale / base.duration;
        check(
            out,
            "constraint satisfaction",
            constrained,
            format!("via error {:.1e} m", via_pos.distance(&f.spec.via)),
        )?;

        let residual = hamiltonian_residual(&f.spec, sol.tau1).unwrap_or(f64::INFINITY);
        let rscale = sol.pi1.abs().max(sol.pi2.abs()) * sol.velocity_scale();
        check(
            out,
            "optimality residual",
            rscale == 0.0 || residual.abs() <= 1e-8 * rscale,
            format!("|residual| = {:.1e}", residual.abs()),
        )?;

        let scan = cost_vs_tau1_scan(&f.spec, 99);
        check(
            out,
            "brute-force cost scan",
            (scan.minimizer - sol.tau1).abs() <= 0.01 + 1e-12,
            format!("minimizer {:.2} vs tau1 {:.4}", scan.minimizer, sol.tau1),
        )?;

        let coarse = jerk_cost(&traj);
        let fine = minjerk::oracle::jerk_cost_with_nodes(&traj, 20_001);
        check(
            out,
            "quadrature convergence",
            (coarse - fine).abs() <= 1e-9 * coarse.abs(),
            format!("cost = {coarse:.6}"),
        )?;

        let mut fd_worst = 0.0f64;
        for order in 1..=3 {
            fd_worst = fd_worst.max(finite_difference_check(&traj, order, 50));
        }
        check(
            out,
            "finite-difference consistency",
            fd_worst <= 1e-6,
            format!("max rel err {fd_worst:.1e}"),
        )?;
    }

    writeln!(out, "verify straight movement [0.3 m along x]")?;
    for tf in [0.5, 1.0, 2.0] {
        let traj = StraightTrajectory::new(MotionSpec::new(
            Point2::new(0.0, 0.0),
            Point2::new(0.3, 0.0),
            tf,
        ));
        let cost = jerk_cost(&traj);
        let expected = 720.0 * 0.09 / tf.powi(5);
        check(
            out,
            "cost law 720 |d|^2 / tf^5",
            (cost - expected).abs() <= 1e-6 * expected,
            format!("tf = {tf}: cost {cost:.6}"),
        )?;
    }
    let spec = MotionSpec::new(Point2::new(0.0, 0.0), Point2::new(0.3, 0.0), 1.0);
    let (vx, vy) = minjerk::straight_velocity(&spec, NormalizedTime::new(0.5).unwrap());
    let peak = vx.hypot(vy);
    check(
        out,
        "velocity peak 1.875 |d| / tf",
        (peak - 1.875 * 0.3).abs() <= 1e-9 * peak,
        format!("peak {peak:.6} m/s"),
    )?;

    writeln!(
        out,
        "verify result: {}",
        if all_ok {
            "all checks passed"
        } else {
            "FAILURES"
        }
    )?;
    Ok(all_ok)
}
