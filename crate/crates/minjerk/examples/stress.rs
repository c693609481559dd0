use minjerk::{
    build_auxiliary_polys, build_tau1_polynomial, find_real_roots, validate_via_spec, MotionSpec,
    Point2, ViaMotionSpec,
};

fn main() {
    let spec = validate_via_spec(ViaMotionSpec::new(
        MotionSpec::new(Point2::new(0.0, 0.0), Point2::new(0.3, 0.0), 1.0),
        Point2::new(0.3 * (1.0 - 1e-4), 0.0),
    ))
    .unwrap();
    let aux = build_auxiliary_polys(&spec);
    let p = build_tau1_polynomial(&aux).unwrap();
    println!("degree {:?} max|c| {:.3e}", p.degree(), p.max_abs_coeff());
    let roots = find_real_roots(&p, 1e-6, 1.0 - 1e-6).unwrap();
    println!("scan roots: {roots:?}");
    // expanded evaluation near the expected root
    for t in [0.95, 0.97, 0.978, 0.98, 0.99, 0.995, 0.999] {
        let (v, b) = p.eval_with_error_bound(t);
        println!("p({t}) = {v:+.6e}  bound {b:.2e}  reliable {}", v.abs() > b);
    }
}
