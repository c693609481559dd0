//! Dense univariate polynomials over `f64` with the root isolation used by
//! the via-passage-time solver.
//!
//! Coefficients are stored in ascending degree with trailing zeros trimmed,
//! so the highest stored coefficient is nonzero unless the polynomial is
//! identically zero (empty coefficient vector).

use crate::error::SolveError;

/// Number of scan intervals used by `find_real_roots`.
const SCAN_INTERVALS: usize = 4096;
/// Brackets are bisected down to this width before polishing.
const BISECT_WIDTH: f64 = 1e-13;
/// Maximum damped Newton polish steps after bisection.
const NEWTON_STEPS: usize = 5;
/// Roots closer than this are merged.
const MERGE_TOL: f64 = 1e-9;
/// Tangency (even-multiplicity) acceptance: refined |p| relative to the
/// largest coefficient. Tighter than the 1e-10 residual contract so that
/// shallow dips are not mistaken for double roots.
const TANGENT_REL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros. The zero polynomial has an empty coefficient vector.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rfold(0.0, |acc, c| acc * x + c)
    }

    /// Horner on absolute values: an upper envelope of the terms summed at
    /// `|x|`, used to bound evaluation rounding error. `eval` is exact up to
    /// a small multiple of `EPSILON` times this.
    pub fn eval_magnitude(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.coeffs.iter().rfold(0.0, |acc, c| acc * ax + c.abs())
    }

    /// Evaluates the polynomial together with a bound on the rounding error
    /// of that evaluation. Where `|value|` is below the bound, the sign of
    /// the computed value carries no information.
    pub fn eval_with_error_bound(&self, x: f64) -> (f64, f64) {
        let value = self.eval(x);
        let bound = 2.0 * self.coeffs.len() as f64 * f64::EPSILON * self.eval_magnitude(x);
        (value, bound)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| (i + 1) as f64 * c)
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0.0; n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.coeffs.get(i).copied().unwrap_or(0.0)
                + other.coeffs.get(i).copied().unwrap_or(0.0);
        }
        Self::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0.0; k];
        out.extend_from_slice(&self.coeffs);
        Self::new(out)
    }
}

/// Isolates the real roots of `p` in the open interval `(lo, hi)`.
///
/// A uniform grid of `4096` intervals is scanned for sign changes; each
/// bracket is bisected to width `1e-13` and polished with damped Newton
/// steps. Sign changes are only trusted where the evaluated magnitude
/// exceeds the Horner rounding-error bound, which suppresses spurious
/// crossings in regions where the expanded polynomial cancels to noise.
/// Even-multiplicity roots are picked up separately as interior local
/// minima of `|p|` that refine below `1e-12` of the largest coefficient.
///
/// Returned roots are sorted ascending with near-duplicates (within `1e-9`)
/// merged.
pub fn find_real_roots(p: &RealPolynomial, lo: f64, hi: f64) -> Result<Vec<f64>, SolveError> {
    if p.is_zero() {
        return Err(SolveError::ZeroPolynomial);
    }
    assert!(
        lo < hi && lo.is_finite() && hi.is_finite(),
        "find_real_roots requires a finite interval with lo < hi"
    );
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }

    let n = SCAN_INTERVALS;
    let step = (hi - lo) / n as f64;
    let xs: Vec<f64> = (0..=n)
        .map(|i| if i == n { hi } else { lo + i as f64 * step })
        .collect();
    let evals: Vec<(f64, f64)> = xs.iter().map(|&x| p.eval_with_error_bound(x)).collect();

    let mut roots: Vec<f64> = Vec::new();

    // Exact zeros on the grid.
    for (i, &(v, _)) in evals.iter().enumerate() {
        if v == 0.0 {
            roots.push(xs[i]);
        }
    }

    // Sign-change brackets between consecutive reliable grid points.
    let mut last_reliable: Option<usize> = None;
    for (i, &(v, bound)) in evals.iter().enumerate() {
        if v == 0.0 || v.abs() <= bound {
            continue;
        }
        if let Some(j) = last_reliable {
            if evals[j].0.signum() != v.signum() {
                roots.push(refine_bracket(p, xs[j], evals[j].0, xs[i]));
            }
        }
        last_reliable = Some(i);
    }

    // Tangency probe: interior local minima of |p| flanked by reliable
    // same-sign values.
    let max_coeff = p.max_abs_coeff();
    let deriv = p.derivative();
    for i in 1..n {
        let (vm, bm) = evals[i - 1];
        let (vc, _) = evals[i];
        let (vp, bp) = evals[i + 1];
        let is_local_min = vc.abs() < vm.abs() && vc.abs() <= vp.abs();
        let reliable_flanks = vm.abs() > bm && vp.abs() > bp;
        if !is_local_min || !reliable_flanks || vm.signum() != vp.signum() || vc == 0.0 {
            continue;
        }
        let m = minimize_abs(p, xs[i - 1], xs[i + 1]);
        let pm = p.eval(m).abs();
        let (dv, dbound) = deriv.eval_with_error_bound(m);
        if pm <= TANGENT_REL * max_coeff && dv.abs() <= (1e-6 * max_coeff).max(4.0 * dbound) {
            roots.push(m);
        }
    }

    roots.sort_by(|a, b| a.partial_cmp(b).expect("roots are finite"));
    let mut merged: Vec<f64> = Vec::new();
    for r in roots {
        match merged.last_mut() {
            Some(last) if (r - *last).abs() <= MERGE_TOL => {
                if p.eval(r).abs() < p.eval(*last).abs() {
                    *last = r;
                }
            }
            _ => merged.push(r),
        }
    }
    merged.retain(|&r| r > lo && r < hi);
    Ok(merged)
}

/// Bisects a sign-change bracket to `BISECT_WIDTH`, then applies a few
/// damped Newton steps confined to the bracket.
fn refine_bracket(p: &RealPolynomial, mut a: f64, mut fa: f64, mut b: f64) -> f64 {
    while b - a > BISECT_WIDTH {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break; // interval no longer representable
        }
        let fm = p.eval(m);
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

    let deriv = p.derivative();
    let (lo, hi) = (a, b);
    let mut x = 0.5 * (a + b);
    let mut fx = p.eval(x);
    for _ in 0..NEWTON_STEPS {
        let d = deriv.eval(x);
        if d == 0.0 || fx == 0.0 {
            break;
        }
        let mut step = -fx / d;
        let mut candidate = (x + step).clamp(lo, hi);
        let mut fc = p.eval(candidate);
        // Damp the step until it does not make things worse.
        let mut halvings = 0;
        while fc.abs() > fx.abs() && halvings < 4 {
            step *= 0.5;
            candidate = (x + step).clamp(lo, hi);
            fc = p.eval(candidate);
            halvings += 1;
        }
        if fc.abs() >= fx.abs() {
            break;
        }
        x = candidate;
        fx = fc;
    }
    x
}

/// Golden-section style minimization of `|p|` on `[a, b]`.
fn minimize_abs(p: &RealPolynomial, mut a: f64, mut b: f64) -> f64 {
    while b - a > BISECT_WIDTH {
        let third = (b - a) / 3.0;
        let m1 = a + third;
        let m2 = b - third;
        if m1 >= m2 {
            break;
        }
        if p.eval(m1).abs() < p.eval(m2).abs() {
            b = m2;
        } else {
            a = m1;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = RealPolynomial::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.coeffs(), &[1.0, 2.0]);
        assert_eq!(p.degree(), Some(1));
        assert!(RealPolynomial::new(vec![0.0, 0.0]).is_zero());
        assert_eq!(RealPolynomial::zero().degree(), None);
    }

    #[test]
    fn evaluates_with_horner() {
        // 2 - 3x + x^3
        let p = RealPolynomial::new(vec![2.0, -3.0, 0.0, 1.0]);
        assert_eq!(p.eval(0.0), 2.0);
        assert_eq!(p.eval(2.0), 4.0);
        assert_eq!(RealPolynomial::zero().eval(5.0), 0.0);
    }

    #[test]
    fn derivative_drops_degree() {
        let p = RealPolynomial::new(vec![1.0, 2.0, 3.0, 4.0]); // 1 + 2x + 3x^2 + 4x^3
        assert_eq!(p.derivative().coeffs(), &[2.0, 6.0, 12.0]);
        assert!(RealPolynomial::new(vec![7.0]).derivative().is_zero());
    }

    #[test]
    fn shift_up_multiplies_by_powers() {
        let p = RealPolynomial::new(vec![1.0, 1.0]);
        assert_eq!(p.shift_up(3).coeffs(), &[0.0, 0.0, 0.0, 1.0, 1.0]);
        assert!(RealPolynomial::zero().shift_up(2).is_zero());
    }

    fn poly_from_roots(roots: &[f64]) -> RealPolynomial {
        let mut p = RealPolynomial::new(vec![1.0]);
        for &r in roots {
            p = p.mul(&RealPolynomial::new(vec![-r, 1.0]));
        }
        p
    }

    #[test]
    fn finds_constructed_simple_roots() {
        let p = poly_from_roots(&[0.3, 0.7]);
        let roots = find_real_roots(&p, 0.0, 1.0).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0] - 0.3).abs() < 1e-12);
        assert!((roots[1] - 0.7).abs() < 1e-12);
    }

    #[test]
    fn no_real_roots_means_empty() {
        let p = RealPolynomial::new(vec![1.0, 0.0, 1.0]); // x^2 + 1
        assert_eq!(find_real_roots(&p, 0.0, 1.0).unwrap(), Vec::<f64>::new());
    }

    #[test]
    fn recovers_five_packed_roots() {
        let wanted: Vec<f64> = (1..=5).map(|k| k as f64 / 10.0).collect();
        let p = poly_from_roots(&wanted);
        let roots = find_real_roots(&p, 0.0, 1.0).unwrap();
        assert_eq!(roots.len(), 5);
        for (r, w) in roots.iter().zip(&wanted) {
            assert!((r - w).abs() <= 1e-10, "got {r}, wanted {w}");
        }
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert_eq!(
            find_real_roots(&RealPolynomial::zero(), 0.0, 1.0),
            Err(SolveError::ZeroPolynomial)
        );
    }

    #[test]
    fn constant_polynomial_has_no_roots() {
        let p = RealPolynomial::new(vec![3.0]);
        assert_eq!(find_real_roots(&p, 0.0, 1.0).unwrap(), Vec::<f64>::new());
    }

    #[test]
    fn open_interval_excludes_boundary_roots() {
        let p = poly_from_roots(&[0.0, 0.5, 1.0]);
        let roots = find_real_roots(&p, 0.0, 1.0).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn detects_double_root_tangency() {
        // (x - 0.5)^2 (x - 0.2): tangency at 0.5, crossing at 0.2
        let p = poly_from_roots(&[0.5, 0.5, 0.2]);
        let roots = find_real_roots(&p, 0.0, 1.0).unwrap();
        assert_eq!(roots.len(), 2, "roots: {roots:?}");
        assert!((roots[0] - 0.2).abs() < 1e-12);
        assert!((roots[1] - 0.5).abs() < 1e-7);
    }

    #[test]
    fn merges_near_duplicate_roots() {
        let p = poly_from_roots(&[0.4, 0.4 + 1e-10]);
        let roots = find_real_roots(&p, 0.0, 1.0).unwrap();
        assert_eq!(roots.len(), 1);
        // an almost-double root is only determined to sqrt(eps) once the
        // polynomial lives in rounded coefficients
        assert!((roots[0] - 0.4).abs() < 1e-7, "root {}", roots[0]);
    }

    #[test]
    fn roots_are_certified_by_sign_change_or_tangency() {
        let p = poly_from_roots(&[0.1, 0.2, 0.3, 0.4, 0.5]);
        let w = 5e-13;
        for r in find_real_roots(&p, 0.0, 1.0).unwrap() {
            let left = p.eval(r - w);
            let right = p.eval(r + w);
            let crossing = left.signum() != right.signum();
            let tangency = p.eval(r).abs() <= 1e-12 * p.max_abs_coeff()
                && p.derivative().eval(r).abs() <= 1e-6 * p.derivative().max_abs_coeff();
            assert!(crossing || tangency, "uncertified root {r}");
        }
    }

    proptest! {
        // Product evaluation agrees with evaluating then multiplying; the
        // comparison is scaled by the term-magnitude envelope, the honest
        // conditioning measure for coefficient-space products.
        #[test]
        fn product_matches_pointwise_multiplication(
            a in proptest::collection::vec(-1.0..1.0f64, 1..=6),
            b in proptest::collection::vec(-1.0..1.0f64, 1..=6),
            seed in 0u64..1000,
        ) {
            let p = RealPolynomial::new(a);
            let q = RealPolynomial::new(b);
            let prod = p.mul(&q);
            for k in 0..20u64 {
                // cheap deterministic points in [-1, 1]
                let x = ((seed.wrapping_mul(6364136223846793005).wrapping_add(k.wrapping_mul(1442695040888963407)) >> 11) as f64
                    / (1u64 << 53) as f64) * 2.0 - 1.0;
                let direct = p.eval(x) * q.eval(x);
                let expanded = prod.eval(x);
                let scale = p.eval_magnitude(x) * q.eval_magnitude(x);
                prop_assert!((direct - expanded).abs() <= 1e-12 * scale.max(1e-300),
                    "x={x} direct={direct} expanded={expanded}");
            }
        }

        #[test]
        fn addition_matches_pointwise(
            a in proptest::collection::vec(-1.0..1.0f64, 1..=6),
            b in proptest::collection::vec(-1.0..1.0f64, 1..=6),
            x in -1.0..1.0f64,
        ) {
            let p = RealPolynomial::new(a);
            let q = RealPolynomial::new(b);
            let sum = p.add(&q);
            let direct = p.eval(x) + q.eval(x);
            prop_assert!((sum.eval(x) - direct).abs() <= 1e-13 * (p.eval_magnitude(x) + q.eval_magnitude(x)).max(1e-300));
        }
    }
}
