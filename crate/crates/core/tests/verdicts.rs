use std::f64::consts::{FRAC_PI_2, PI, TAU};

use expwidth::criteria::{
    critical_width, theorem1_verdict, theorem2_verdict, CriteriaParams, RedhefferMode, Verdict,
};
use expwidth::divisor::{GeneratorSpec, PointDistribution};
use expwidth::logmeasure::GridSpec;
use proptest::prelude::*;

fn generated(spec: &str) -> PointDistribution {
    PointDistribution::from_generator(&GeneratorSpec::parse(spec).unwrap()).unwrap()
}

fn params() -> CriteriaParams {
    CriteriaParams {
        grid: GridSpec {
            horizon: 1e5,
            ..GridSpec::default()
        },
        theta_steps: 60,
        ..CriteriaParams::default()
    }
}

fn regular() -> impl Strategy<Value = PointDistribution> {
    prop_oneof![
        ((0.5f64..2.0), (-PI..PI), any::<bool>()).prop_map(|(step, dir, sym)| {
            generated(&format!("arith n={} step={step} dir={dir} sym={sym}", (1e5 / step) as usize))
        }),
        ((-PI..PI), (0.2f64..FRAC_PI_2), (0.5f64..2.0), any::<u64>()).prop_map(|(theta, a, density, seed)| {
            generated(&format!("sector theta={theta} a={a} density={density} horizon=1e5 seed={seed}"))
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn theorem1_is_rotation_equivariant(z in regular(), b in 0.5f64..20.0, theta in -PI..PI, phi in -PI..PI) {
        let p = params();
        let v = theorem1_verdict(&z, b, theta, &p).unwrap().verdict;
        let w = theorem1_verdict(&z.rotate(phi), b, theta + phi, &p).unwrap().verdict;
        prop_assert_eq!(v, w);
    }

    #[test]
    fn theorem1_is_monotone_in_b(z in regular(), b in 0.5f64..20.0, theta in -PI..PI, k in 1.01f64..4.0) {
        let p = params();
        let v = theorem1_verdict(&z, b, theta, &p).unwrap().verdict;
        let wider = theorem1_verdict(&z, b * k, theta, &p).unwrap().verdict;
        let narrower = theorem1_verdict(&z, b / k, theta, &p).unwrap().verdict;
        if v == Verdict::Incomplete {
            prop_assert_eq!(wider, Verdict::Incomplete);
        }
        if v == Verdict::Complete {
            prop_assert_eq!(narrower, Verdict::Complete);
        }
        // Never complete at a wider strip while incomplete at a narrower one.
        prop_assert!(!(wider == Verdict::Complete && v == Verdict::Incomplete));
        prop_assert!(!(v == Verdict::Complete && narrower == Verdict::Incomplete));
    }

    #[test]
    fn margins_carry_the_verdict_sign(z in regular(), b in 0.5f64..20.0, theta in -PI..PI) {
        let v = theorem1_verdict(&z, b, theta, &params()).unwrap();
        match v.verdict {
            Verdict::Complete => prop_assert!(v.margin > 0.0),
            Verdict::Incomplete => prop_assert!(v.margin < 0.0),
            _ => {}
        }
    }

    #[test]
    fn theorem2_is_not_incomplete_below_the_critical_width(z in regular(), theta in -PI..PI, k in 0.2f64..0.9) {
        let p = params();
        let cw = critical_width(&z, theta, &p).unwrap();
        prop_assume!(cw.converged() && cw.value.is_finite() && cw.value > 0.5);
        let v = theorem2_verdict(&z, k * cw.value, theta, RedhefferMode::UserAsserted, &p).unwrap();
        prop_assert_ne!(v.verdict, Verdict::Incomplete);
    }
}

#[test]
fn theorems_agree_where_both_are_conclusive() {
    let p = params();
    let z = generated("arith n=100000 step=1");
    for b in [1.0, 2.0, PI, 8.0, 4.0 * PI, 20.0] {
        let t1 = theorem1_verdict(&z, b, FRAC_PI_2, &p).unwrap().verdict;
        let t2 = theorem2_verdict(&z, b, FRAC_PI_2, RedhefferMode::CheckHeuristically, &p)
            .unwrap()
            .verdict;
        if t1.is_conclusive() && t2.is_conclusive() {
            assert_eq!(t1, t2, "b = {b}");
        }
    }
}

#[test]
fn continuous_and_ladder_detectors_agree() {
    let p = params();
    for (spec, theta) in [
        ("arith n=100000 step=1", FRAC_PI_2),
        ("arith n=200000 step=0.5", FRAC_PI_2),
        ("arith n=100000 step=1 sym=true", FRAC_PI_2),
        ("geom n=18 first=1 ratio=2", FRAC_PI_2),
        ("arith n=100000 step=1 dir=pi/2 sym=true", FRAC_PI_2),
    ] {
        let z = generated(spec);
        for b in [PI / 2.0, PI, TAU, 3.0 * PI] {
            let v = theorem2_verdict(&z, b, theta, RedhefferMode::UserAsserted, &p).unwrap();
            let (cont, ladder) = v.growth.unwrap();
            assert_eq!(cont.state, ladder.state, "{spec}, b = {b}: {:?} vs {:?}", cont, ladder);
        }
    }
}
