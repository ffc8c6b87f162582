use std::f64::consts::PI;

use expwidth::divisor::PointDistribution;
use expwidth::logmeasure::{
    check_submeasure_axioms, interval_table, left_log_measure, log_submeasure, right_log_measure, GridSpec,
    MeasureKind, SUBADDITIVITY_EPS,
};
use expwidth::Execution;
use num_complex::Complex64;
use proptest::prelude::*;

fn distribution() -> impl Strategy<Value = PointDistribution> {
    prop::collection::vec(((0.0f64..9.0), (-PI..PI), 1u64..4), 0..120).prop_map(|v| {
        PointDistribution::new(v.into_iter().map(|(lr, arg, m)| (Complex64::from_polar(lr.exp(), arg), m))).unwrap()
    })
}

fn interval() -> impl Strategy<Value = (f64, f64)> {
    ((0.0f64..8.0), (0.01f64..4.0)).prop_map(|(a, d)| (a.exp(), (a + d).exp()))
}

/// Direct definition, independent of the library's summation.
fn oracle(z: &PointDistribution, r: f64, big_r: f64, sign: f64) -> f64 {
    z.entries()
        .iter()
        .filter(|(p, _)| p.norm() > r && p.norm() <= big_r)
        .map(|&(p, m)| m as f64 * (sign / p).re.max(0.0))
        .sum()
}

proptest! {
    #[test]
    fn measures_match_their_definitions(z in distribution(), (r, big_r) in interval()) {
        let right = right_log_measure(&z, r, big_r).unwrap();
        let left = left_log_measure(&z, r, big_r).unwrap();
        prop_assert!((right - oracle(&z, r, big_r, 1.0)).abs() <= 1e-12 * right.max(1.0));
        prop_assert!((left - oracle(&z, r, big_r, -1.0)).abs() <= 1e-12 * left.max(1.0));
        prop_assert_eq!(log_submeasure(&z, r, big_r).unwrap(), right.max(left));
    }

    #[test]
    fn left_measure_is_right_measure_of_the_reflection(z in distribution(), (r, big_r) in interval()) {
        let reflected = z.scale(Complex64::new(-1.0, 0.0)).unwrap();
        let left = left_log_measure(&z, r, big_r).unwrap();
        let right = right_log_measure(&reflected, r, big_r).unwrap();
        prop_assert!((left - right).abs() <= 1e-12 * left.max(1.0));
    }

    #[test]
    fn measures_grow_with_the_interval(z in distribution(), (r, big_r) in interval(), k in 1.0f64..3.0) {
        prop_assert!(right_log_measure(&z, r, big_r * k).unwrap() >= right_log_measure(&z, r, big_r).unwrap());
        prop_assert!(log_submeasure(&z, r / k, big_r).unwrap() >= log_submeasure(&z, r, big_r).unwrap());
    }

    #[test]
    fn right_measure_is_additive(z in distribution(), (r, mid) in interval(), d in 0.01f64..3.0) {
        let big_r = mid * d.exp();
        let whole = right_log_measure(&z, r, big_r).unwrap();
        let parts = right_log_measure(&z, r, mid).unwrap() + right_log_measure(&z, mid, big_r).unwrap();
        prop_assert!((whole - parts).abs() <= 1e-9 * whole.max(1.0));
    }

    #[test]
    fn tables_satisfy_the_axioms(z in distribution(), rotation in -PI..PI) {
        let grid = GridSpec { horizon: 1e4, ..GridSpec::default() };
        let sub = interval_table(&z, &grid, MeasureKind::Submeasure, rotation, Execution::Sequential).unwrap();
        let rep = check_submeasure_axioms(&sub, SUBADDITIVITY_EPS);
        prop_assert!(rep.is_submeasure());
        let right = interval_table(&z, &grid, MeasureKind::Right, rotation, Execution::Sequential).unwrap();
        prop_assert!(check_submeasure_axioms(&right, SUBADDITIVITY_EPS).is_additive(1e-9));
    }

    #[test]
    fn execution_strategy_does_not_change_tables(z in distribution(), rotation in -PI..PI) {
        let grid = GridSpec { horizon: 1e4, ..GridSpec::default() };
        let seq = interval_table(&z, &grid, MeasureKind::Submeasure, rotation, Execution::Sequential).unwrap();
        let par = interval_table(&z, &grid, MeasureKind::Submeasure, rotation, Execution::default()).unwrap();
        prop_assert_eq!(seq, par);
    }

    #[test]
    fn rotated_tables_agree_with_rotated_distributions(z in distribution(), rotation in -PI..PI) {
        let grid = GridSpec { horizon: 1e4, ..GridSpec::default() };
        let via_profile = interval_table(&z, &grid, MeasureKind::Right, rotation, Execution::Sequential).unwrap();
        let via_points = interval_table(&z.rotate(rotation), &grid, MeasureKind::Right, 0.0, Execution::Sequential).unwrap();
        for i in 0..via_profile.len() {
            for j in i + 1..via_profile.len() {
                let (a, b) = (via_profile.get(i, j), via_points.get(i, j));
                prop_assert!((a - b).abs() <= 1e-9 * a.max(1.0));
            }
        }
    }
}
