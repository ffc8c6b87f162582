use std::f64::consts::PI;

use expwidth::convexgeom::ConvexBody;
use num_complex::Complex64;
use proptest::prelude::*;

fn cloud() -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-10.0..10.0f64, -10.0..10.0f64), 1..=12)
        .prop_map(|v| v.into_iter().map(|(x, y)| Complex64::new(x, y)).collect())
}

fn body() -> impl Strategy<Value = ConvexBody> {
    prop_oneof![
        cloud().prop_map(|pts| ConvexBody::from_points(&pts).unwrap()),
        ((-5.0..5.0f64), (-5.0..5.0f64), (0.01..5.0f64))
            .prop_map(|(x, y, r)| ConvexBody::disk(Complex64::new(x, y), r).unwrap()),
    ]
}

fn brute_diameter(pts: &[Complex64]) -> f64 {
    let mut best: f64 = 0.0;
    for p in pts {
        for q in pts {
            best = best.max((p - q).norm());
        }
    }
    best
}

/// Width across the normal of every pair of points; the minimum over pairs
/// includes every hull edge normal, where the breadth is attained.
fn brute_breadth(pts: &[Complex64]) -> f64 {
    let body = ConvexBody::from_points(pts).unwrap();
    if let ConvexBody::Polygon(vs) = &body {
        if vs.len() <= 2 {
            return 0.0;
        }
    }
    let mut best = f64::INFINITY;
    for p in pts {
        for q in pts {
            if p != q {
                let normal = (q - p).arg() + PI / 2.0;
                best = best.min(body.width(normal));
            }
        }
    }
    best
}

proptest! {
    #[test]
    fn width_is_pi_periodic_and_sums_supports(b in body(), theta in -10.0..10.0f64) {
        let w = b.width(theta);
        prop_assert!((w - b.width(theta + PI)).abs() <= 1e-9 * w.max(1.0));
        let s = b.support(theta) + b.support(theta + PI);
        prop_assert!((w - s).abs() <= 1e-9 * w.max(1.0));
    }

    #[test]
    fn breadth_width_diameter_are_ordered(b in body(), theta in -10.0..10.0f64) {
        let w = b.width(theta);
        prop_assert!(b.breadth() <= w + 1e-9);
        prop_assert!(w <= b.diameter() + 1e-9);
    }

    #[test]
    fn rotation_and_translation(b in body(), theta in -4.0..4.0f64, phi in -4.0..4.0f64,
                                tx in -5.0..5.0f64, ty in -5.0..5.0f64) {
        let r = b.rotate(phi);
        prop_assert!((r.width(theta + phi) - b.width(theta)).abs() < 1e-9);
        prop_assert!((r.breadth() - b.breadth()).abs() < 1e-9);
        prop_assert!((r.diameter() - b.diameter()).abs() < 1e-9);
        let t = b.translate(Complex64::new(tx, ty));
        prop_assert!((t.width(theta) - b.width(theta)).abs() < 1e-9);
        prop_assert!((t.breadth() - b.breadth()).abs() < 1e-9);
    }

    #[test]
    fn homogeneous_support_matches_vertex_maximum(pts in cloud(), x in -3.0..3.0f64, y in -3.0..3.0f64) {
        let b = ConvexBody::from_points(&pts).unwrap();
        let z = Complex64::new(x, y);
        let direct = pts.iter().map(|s| (s * z.conj()).re).fold(f64::NEG_INFINITY, f64::max);
        prop_assert!((b.support_at(z) - direct).abs() <= 1e-9 * direct.abs().max(1.0));
    }

    #[test]
    fn diameter_is_exact_pairwise_maximum(pts in cloud()) {
        prop_assert_eq!(ConvexBody::from_points(&pts).unwrap().diameter(), brute_diameter(&pts));
    }

    #[test]
    fn breadth_matches_oracles(pts in cloud()) {
        let b = ConvexBody::from_points(&pts).unwrap();
        let exact = b.breadth();
        prop_assert!((exact - brute_breadth(&pts)).abs() <= 1e-9);
        let steps = 20_000;
        let grid_min = (0..steps)
            .map(|k| b.width(k as f64 * PI / steps as f64))
            .fold(f64::INFINITY, f64::min);
        prop_assert!(grid_min >= exact - 1e-9);
        // Width is Lipschitz in θ with constant at most the diameter.
        prop_assert!(grid_min <= exact + b.diameter() * PI / steps as f64 + 1e-9);
    }

    #[test]
    fn strips_are_infinite_off_the_normal(phi in -4.0..4.0f64, w in 0.0..5.0f64, off in -3.0..3.0f64,
                                           theta in -4.0..4.0f64) {
        let s = ConvexBody::strip(phi, w, off).unwrap();
        prop_assert_eq!(s.width(phi + PI / 2.0), w);
        prop_assert_eq!(s.width(phi - PI / 2.0), w);
        let d = (theta - phi - PI / 2.0).rem_euclid(PI);
        prop_assume!(d > 1e-9 && d < PI - 1e-9);
        prop_assert_eq!(s.width(theta), f64::INFINITY);
        prop_assert_eq!(s.breadth(), w);
    }
}

#[test]
fn body_files_round_trip_through_the_parser() {
    use expwidth::convexgeom::{format_body, parse_body};
    let b = ConvexBody::from_points(&[
        Complex64::new(0.0, 0.0),
        Complex64::new(2.0, 0.0),
        Complex64::new(2.0, 1.0),
        Complex64::new(0.0, 1.0),
    ])
    .unwrap();
    assert_eq!(parse_body(&format_body(&b)).unwrap(), b);
}
