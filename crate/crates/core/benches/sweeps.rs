use std::f64::consts::FRAC_PI_2;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use expwidth::criteria::{CriteriaParams, Prepared};
use expwidth::divisor::{GeneratorSpec, PointDistribution};
use expwidth::logmeasure::{GridSpec, MeasureKind, RadialProfile, table_from_profile};
use expwidth::Execution;

fn cloud(horizon: f64) -> PointDistribution {
    let spec = GeneratorSpec::parse(&format!("sector theta=0.3 a=pi/3 density=1 horizon={horizon} seed=11")).unwrap();
    PointDistribution::from_generator(&spec).unwrap()
}

fn strategies() -> Vec<(&'static str, Execution)> {
    let mut v = vec![("sequential", Execution::Sequential)];
    #[cfg(feature = "parallel")]
    v.push(("parallel", Execution::Parallel));
    v
}

fn prefix_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("submeasure_table");
    for horizon in [1e4, 1e5, 1e6] {
        let z = cloud(horizon);
        let profile = RadialProfile::new(&z);
        let grid = GridSpec { horizon, ..GridSpec::default() }.build(horizon).unwrap();
        for (name, exec) in strategies() {
            group.bench_with_input(BenchmarkId::new(name, horizon as u64), &horizon, |b, _| {
                b.iter(|| table_from_profile(&profile, grid.radii(), MeasureKind::Submeasure, black_box(FRAC_PI_2), exec))
            });
        }
    }
    group.finish();
}

fn theta_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("theta_sweep");
    group.sample_size(10);
    let horizon = 1e5;
    let z = cloud(horizon);
    for (name, exec) in strategies() {
        let params = CriteriaParams {
            grid: GridSpec { horizon, ..GridSpec::default() },
            theta_steps: 180,
            exec,
            ..CriteriaParams::default()
        };
        let prep = Prepared::new(&z, &params).unwrap();
        group.bench_function(BenchmarkId::new(name, params.theta_steps), |b| {
            b.iter(|| prep.sweep(black_box(&params)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, prefix_tables, theta_sweeps);
criterion_main!(benches);
