//! Solves the via-passage-time problem: builds the auxiliary polynomials,
//! assembles the degree-17 passage-time polynomial, isolates its acceptable
//! root in (0, 1), and computes the trajectory constants `c1, c2, pi1, pi2`.
//!
//! The acceptable normalized passage time `tau1` is a root of
//!
//! ```text
//! A3 (A2^2 + A2'^2) + tau1^3 A4 (A1 A2 + A1' A2') = 0
//! ```
//!
//! which encodes the first-order optimality (Hamiltonian) condition
//! `pi1 * vx(tau1) + pi2 * vy(tau1) = 0`. Root isolation runs on the dense
//! expansion; each candidate is then re-refined against the factored form,
//! whose evaluation does not suffer the catastrophic cancellation of the
//! expanded coefficients near the interval ends.

use crate::curved::CurvedTrajectory;
use crate::error::SolveError;
use crate::oracle;
use crate::poly::{find_real_roots, RealPolynomial};
use crate::types::ViaMotionSpec;

/// Roots are searched in `(ROOT_WINDOW, 1 - ROOT_WINDOW)`; the polynomial
/// has structural roots at both 0 and 1 that carry no solution.
const ROOT_WINDOW: f64 = 1e-6;
/// Passage times closer than this to 0 or 1 make the constants blow up
/// (they carry `1/(tau1^5 (1-tau1)^5)` factors) and are rejected.
const TAU1_GUARD: f64 = 1e-4;
/// Half-width of the local bracket used to re-refine a scanned root against
/// the factored form (two scan grid steps).
const REFINE_HALF_WIDTH: f64 = 2.0 * (1.0 - 2.0 * ROOT_WINDOW) / 4096.0;
/// Near-duplicate refined roots are merged within this distance.
const MERGE_TOL: f64 = 1e-9;

/// The polynomials of the passage-time problem, in the variable `tau1`.
///
/// `a1`/`a2` belong to the x axis, `a1p`/`a2p` to the y axis; `a3` and `a4`
/// are fixed and independent of the spec.
#[derive(Debug, Clone)]
pub struct AuxiliaryPolys {
    pub a1: RealPolynomial,
    pub a2: RealPolynomial,
    pub a1p: RealPolynomial,
    pub a2p: RealPolynomial,
    pub a3: RealPolynomial,
    pub a4: RealPolynomial,
}

/// The four per-axis constants fixing the piecewise quintic (units m/s^5).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViaConstants {
    pub c1: f64,
    pub c2: f64,
    pub pi1: f64,
    pub pi2: f64,
}

/// A solved curved movement: the passage time, the four constants, and the
/// spec they belong to.
///
/// `candidates` lists every acceptable root found in the search window,
/// sorted ascending; when more than one root qualified, `tau1` is the one
/// with the smallest jerk cost.
#[derive(Debug, Clone)]
pub struct ViaSolution {
    pub spec: ViaMotionSpec,
    /// Normalized via-passage time, in (0, 1).
    pub tau1: f64,
    pub c1: f64,
    pub c2: f64,
    pub pi1: f64,
    pub pi2: f64,
    pub candidates: Vec<f64>,
}

impl ViaSolution {
    pub fn constants(&self) -> ViaConstants {
        ViaConstants {
            c1: self.c1,
            c2: self.c2,
            pi1: self.pi1,
            pi2: self.pi2,
        }
    }

    /// Characteristic velocity magnitude of the movement, used to scale the
    /// Hamiltonian residual tolerance.
    pub fn velocity_scale(&self) -> f64 {
        self.spec.path_scale() / self.spec.base.duration
    }
}

fn axis_aux(delta_end: f64, delta_via: f64) -> (RealPolynomial, RealPolynomial) {
    // A1 = (xf - x0)(300 t^5 - 1200 t^4 + 1600 t^3) + t^2 (-720 xf + 120 x1 + 600 x0)
    //      + (x0 - x1)(300 t - 200)
    // collected over displacements so that nonzero start points work unchanged.
    let a1 = RealPolynomial::new(vec![
        200.0 * delta_via,
        -300.0 * delta_via,
        120.0 * delta_via - 720.0 * delta_end,
        1600.0 * delta_end,
        -1200.0 * delta_end,
        300.0 * delta_end,
    ]);
    // A2 = (xf - x0)(120 t^5 - 300 t^4 + 200 t^3) - 20 (x1 - x0)
    let a2 = RealPolynomial::new(vec![
        -20.0 * delta_via,
        0.0,
        0.0,
        200.0 * delta_end,
        -300.0 * delta_end,
        120.0 * delta_end,
    ]);
    (a1, a2)
}

/// A3 = 60 t^7 - 210 t^6 + 240 t^5 - 90 t^4, the tau-derivative of the
/// pi-bracket of the position form evaluated at tau = tau1.
fn poly_a3() -> RealPolynomial {
    RealPolynomial::new(vec![0.0, 0.0, 0.0, 0.0, -90.0, 240.0, -210.0, 60.0])
}

/// A4 = 60 t^3 - 30 t^2 - 30 t^4, likewise for the c-bracket.
fn poly_a4() -> RealPolynomial {
    RealPolynomial::new(vec![0.0, 0.0, -30.0, 60.0, -30.0])
}

/// Builds the auxiliary polynomials for a validated spec.
pub fn build_auxiliary_polys(spec: &ViaMotionSpec) -> AuxiliaryPolys {
    let (dxf, dyf) = spec.base.displacement();
    let dx1 = spec.via.x - spec.base.start.x;
    let dy1 = spec.via.y - spec.base.start.y;
    let (a1, a2) = axis_aux(dxf, dx1);
    let (a1p, a2p) = axis_aux(dyf, dy1);
    AuxiliaryPolys {
        a1,
        a2,
        a1p,
        a2p,
        a3: poly_a3(),
        a4: poly_a4(),
    }
}

/// Assembles the dense expansion of the passage-time polynomial
/// `A3 (A2^2 + A2'^2) + tau1^3 A4 (A1 A2 + A1' A2')`, degree at most 17.
pub fn build_tau1_polynomial(aux: &AuxiliaryPolys) -> Result<RealPolynomial, SolveError> {
    let squares = aux.a2.mul(&aux.a2).add(&aux.a2p.mul(&aux.a2p));
    let cross = aux.a1.mul(&aux.a2).add(&aux.a1p.mul(&aux.a2p));
    let p = aux.a3.mul(&squares).add(&aux.a4.mul(&cross).shift_up(3));
    if p.is_zero() {
        Err(SolveError::DegeneratePolynomial)
    } else {
        Ok(p)
    }
}

/// Evaluates the passage-time polynomial from its factors, together with a
/// rounding-error bound for that evaluation. The factors stay small where
/// the dense expansion cancels catastrophically, so this form resolves the
/// root location down to machine precision. The bound runs over the full
/// term-magnitude envelope, covering cancellation both between the two
/// terms and inside each factor evaluation.
fn factored_eval(aux: &AuxiliaryPolys, t: f64) -> (f64, f64) {
    let a1 = aux.a1.eval(t);
    let a2 = aux.a2.eval(t);
    let a1p = aux.a1p.eval(t);
    let a2p = aux.a2p.eval(t);
    let a3 = aux.a3.eval(t);
    let a4 = aux.a4.eval(t);
    let t3 = t * t * t;
    let value = a3 * (a2 * a2 + a2p * a2p) + t3 * a4 * (a1 * a2 + a1p * a2p);

    let m1 = aux.a1.eval_magnitude(t);
    let m2 = aux.a2.eval_magnitude(t);
    let m1p = aux.a1p.eval_magnitude(t);
    let m2p = aux.a2p.eval_magnitude(t);
    let m3 = aux.a3.eval_magnitude(t);
    let m4 = aux.a4.eval_magnitude(t);
    let envelope = m3 * (m2 * m2 + m2p * m2p) + t3 * m4 * (m1 * m2 + m1p * m2p);
    (value, 64.0 * f64::EPSILON * envelope)
}

/// Bisects a sign-change bracket of the factored evaluation down to
/// machine width.
fn bisect_factored(aux: &AuxiliaryPolys, mut a: f64, mut fa: f64, mut b: f64) -> f64 {
    for _ in 0..128 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let (fm, _) = factored_eval(aux, m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Scans the factored evaluation for reliable sign changes over `[lo, hi]`
/// and bisects each bracket. This route resolves roots that the dense
/// expansion buries below its coefficient-rounding noise, which happens
/// toward `tau1 = 1` where the expanded terms are large and cancelling
/// while the factors all vanish coherently.
fn factored_scan_roots(aux: &AuxiliaryPolys, lo: f64, hi: f64) -> Vec<f64> {
    let n = 4096;
    let step = (hi - lo) / n as f64;
    let mut roots = Vec::new();
    let mut last_reliable: Option<(f64, f64)> = None;
    for i in 0..=n {
        let x = if i == n { hi } else { lo + i as f64 * step };
        let (v, bound) = factored_eval(aux, x);
        if v == 0.0 {
            roots.push(x);
            continue;
        }
        if v.abs() <= bound {
            continue;
        }
        if let Some((px, pv)) = last_reliable {
            if pv.signum() != v.signum() {
                roots.push(bisect_factored(aux, px, pv, x));
            }
        }
        last_reliable = Some((x, v));
    }
    roots
}

/// Re-refines a scanned root against the factored evaluation. Returns
/// `None` when the factored form disconfirms the candidate (no sign change
/// and the residual stays above its noise level).
fn refine_on_factors(aux: &AuxiliaryPolys, root: f64, lo: f64, hi: f64) -> Option<f64> {
    let a = (root - REFINE_HALF_WIDTH).max(lo);
    let b = (root + REFINE_HALF_WIDTH).min(hi);
    let (fa, _) = factored_eval(aux, a);
    let (fb, _) = factored_eval(aux, b);

    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() != fb.signum() {
        return Some(bisect_factored(aux, a, fa, b));
    }

    // No crossing: keep only if |F| dips to its own noise floor (an
    // even-multiplicity root); otherwise the scanned root was an artifact
    // of the dense expansion.
    let (mut a, mut b) = (a, b);
    while b - a > 1e-13 {
        let third = (b - a) / 3.0;
        let (m1, m2) = (a + third, b - third);
        if m1 >= m2 {
            break;
        }
        if factored_eval(aux, m1).0.abs() < factored_eval(aux, m2).0.abs() {
            b = m2;
        } else {
            a = m1;
        }
    }
    let m = 0.5 * (a + b);
    let (fm, bound) = factored_eval(aux, m);
    (fm.abs() <= 8.0 * bound).then_some(m)
}

/// Computes the constants `c1, c2, pi1, pi2` for a given passage time.
///
/// `c = A1(tau1) / (t_f^5 tau1^2 (1-tau1)^5)` and
/// `pi = A2(tau1) / (t_f^5 tau1^5 (1-tau1)^5)` per axis.
pub fn compute_constants(spec: &ViaMotionSpec, tau1: f64) -> Result<ViaConstants, SolveError> {
    constants_from_aux(&build_auxiliary_polys(spec), spec.base.duration, tau1)
}

fn constants_from_aux(
    aux: &AuxiliaryPolys,
    duration: f64,
    tau1: f64,
) -> Result<ViaConstants, SolveError> {
    if !(TAU1_GUARD..=1.0 - TAU1_GUARD).contains(&tau1) {
        return Err(SolveError::IllConditioned { tau1 });
    }
    let tf5 = duration.powi(5);
    let omt5 = (1.0 - tau1).powi(5);
    let denom_c = tf5 * tau1 * tau1 * omt5;
    let denom_pi = tf5 * tau1.powi(5) * omt5;
    Ok(ViaConstants {
        c1: aux.a1.eval(tau1) / denom_c,
        c2: aux.a1p.eval(tau1) / denom_c,
        pi1: aux.a2.eval(tau1) / denom_pi,
        pi2: aux.a2p.eval(tau1) / denom_pi,
    })
}

/// The Hamiltonian optimality residual `pi1 * vx(tau1) + pi2 * vy(tau1)`,
/// where the via velocities are `(t_f^4 / 720) (pi A3(tau1) + c A4(tau1))`
/// per axis. Zero (to rounding) exactly at acceptable passage times.
pub fn hamiltonian_residual(spec: &ViaMotionSpec, tau1: f64) -> Result<f64, SolveError> {
    let aux = build_auxiliary_polys(spec);
    let k = constants_from_aux(&aux, spec.base.duration, tau1)?;
    let a3 = aux.a3.eval(tau1);
    let a4 = aux.a4.eval(tau1);
    let scale = spec.base.duration.powi(4) / 720.0;
    let vx = scale * (k.pi1 * a3 + k.c1 * a4);
    let vy = scale * (k.pi2 * a3 + k.c2 * a4);
    Ok(k.pi1 * vx + k.pi2 * vy)
}

/// Jerk cost of the constrained trajectory with passage time `tau1`;
/// infinite when the constants are ill-conditioned there.
fn candidate_cost(spec: &ViaMotionSpec, aux: &AuxiliaryPolys, tau1: f64) -> f64 {
    match constants_from_aux(aux, spec.base.duration, tau1) {
        Ok(k) => {
            let traj =
                CurvedTrajectory::from_constants(spec.base.start, spec.base.duration, tau1, &k);
            oracle::jerk_cost(&traj)
        }
        Err(_) => f64::INFINITY,
    }
}

/// Solves a validated via spec: isolates the acceptable passage time,
/// selects among multiple roots by jerk cost, and computes the constants.
///
/// Roots come from two routes that must agree where both see anything: the
/// scan over the dense polynomial expansion and the scan over its factored
/// form. Either route alone has blind spots (the expansion cancels to
/// rounding noise near the ends; the factors cannot certify the expansion
/// was assembled correctly), so candidates are pooled from both.
pub fn solve_via(spec: &ViaMotionSpec) -> Result<ViaSolution, SolveError> {
    let aux = build_auxiliary_polys(spec);
    let poly = build_tau1_polynomial(&aux)?;
    let (lo, hi) = (ROOT_WINDOW, 1.0 - ROOT_WINDOW);
    let scanned = find_real_roots(&poly, lo, hi)?;

    let mut candidates: Vec<f64> = scanned
        .into_iter()
        .filter_map(|r| refine_on_factors(&aux, r, lo, hi))
        .collect();
    candidates.extend(factored_scan_roots(&aux, lo, hi));
    candidates.sort_by(|a, b| a.partial_cmp(b).expect("passage times are finite"));
    candidates.dedup_by(|b, a| (*b - *a).abs() <= MERGE_TOL);
    if candidates.is_empty() {
        return Err(SolveError::NoAcceptableRoot);
    }

    let tau1 = if candidates.len() == 1 {
        candidates[0]
    } else {
        let mut best = candidates[0];
        let mut best_cost = candidate_cost(spec, &aux, best);
        for &t in &candidates[1..] {
            let cost = candidate_cost(spec, &aux, t);
            if cost < best_cost {
                best = t;
                best_cost = cost;
            }
        }
        best
    };

    if !(TAU1_GUARD..=1.0 - TAU1_GUARD).contains(&tau1) {
        return Err(SolveError::IllConditioned { tau1 });
    }
    let k = constants_from_aux(&aux, spec.base.duration, tau1)?;
    Ok(ViaSolution {
        spec: *spec,
        tau1,
        c1: k.c1,
        c2: k.c2,
        pi1: k.pi1,
        pi2: k.pi2,
        candidates,
    })
}
