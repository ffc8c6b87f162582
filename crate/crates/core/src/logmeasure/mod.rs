//! Logarithmic measures `ℓ_Z(r, R) = Σ_{r<|z|≤R} Re⁺(1/z)`, their
//! submeasure `L_Z = max(ℓ_Z, ℓ_{−Z})`, tables on geometric grids and the
//! block densities derived from them.

mod axioms;
mod density;
mod grid;
mod growth;
mod profile;
mod redheffer;
mod table;

pub use axioms::{check_submeasure_axioms, AxiomReport, SUBADDITIVITY_EPS};
pub use density::{
    block_curve, block_density, density_report, BlockPoint, DensityParams, DensityReport, DensityVariant,
    DENSITY_FLOOR, MIN_DECADES,
};
pub use grid::{GeometricGrid, GridSpec};
pub use growth::{ladder_sup_growth, sup_growth, GrowthDiagnostics, GrowthParams, GrowthState};
pub use profile::{BinnedProfile, PrefixSums, RadialProfile};
pub use redheffer::{redheffer_sufficient, RedhefferFinding};
pub use table::{IntervalMeasureTable, Provenance};

use crate::angle::unit_direction;
use crate::divisor::PointDistribution;
use crate::{Error, Execution, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    Right,
    Left,
    Submeasure,
}

fn check_interval(z: &PointDistribution, r: f64, big_r: f64) -> Result<()> {
    if !(r > 0.0 && big_r > r && big_r.is_finite()) {
        return Err(Error::InvalidInterval { r, big_r });
    }
    if big_r > z.truncation_radius() {
        return Err(Error::HorizonExceeded {
            requested: big_r,
            horizon: z.truncation_radius(),
        });
    }
    Ok(())
}

/// Both sums `(Σ Re⁺(w), Σ Re⁺(−w))` with `w = m/z` over `r < |z| ≤ R`.
fn sides(z: &PointDistribution, r: f64, big_r: f64) -> (f64, f64) {
    let mut right = 0.0;
    let mut left = 0.0;
    for &(p, m) in z.entries() {
        let modulus = p.norm();
        if modulus > r && modulus <= big_r {
            let re = (p.inv() * m as f64).re;
            if re > 0.0 {
                right += re;
            } else {
                left -= re;
            }
        }
    }
    (right, left)
}

/// `ℓ_Z(r, R)`.
///
/// ```
/// use expwidth::divisor::{GeneratorSpec, PointDistribution};
/// use expwidth::logmeasure::right_log_measure;
///
/// let spec = GeneratorSpec::parse("arith n=100 step=1").unwrap();
/// let z = PointDistribution::from_generator(&spec).unwrap();
/// let h: f64 = (11..=100).map(|k| 1.0 / k as f64).sum();
/// assert!((right_log_measure(&z, 10.0, 100.0).unwrap() - h).abs() < 1e-12);
/// ```
pub fn right_log_measure(z: &PointDistribution, r: f64, big_r: f64) -> Result<f64> {
    check_interval(z, r, big_r)?;
    Ok(sides(z, r, big_r).0)
}

/// `ℓ_{−Z}(r, R)`.
pub fn left_log_measure(z: &PointDistribution, r: f64, big_r: f64) -> Result<f64> {
    check_interval(z, r, big_r)?;
    Ok(sides(z, r, big_r).1)
}

/// `L_Z(r, R) = max(ℓ_Z(r, R), ℓ_{−Z}(r, R))`.
pub fn log_submeasure(z: &PointDistribution, r: f64, big_r: f64) -> Result<f64> {
    check_interval(z, r, big_r)?;
    let (right, left) = sides(z, r, big_r);
    Ok(right.max(left))
}

/// Table of the chosen measure of `e^{iφ}Z` on a grid. The grid horizon is
/// capped at the truncation radius of `z`.
pub fn interval_table(
    z: &PointDistribution,
    grid: &GridSpec,
    kind: MeasureKind,
    rotation: f64,
    exec: Execution,
) -> Result<IntervalMeasureTable> {
    let grid = grid.build(z.truncation_radius())?;
    let profile = RadialProfile::new(z);
    Ok(table_from_profile(&profile, grid.radii(), kind, rotation, exec))
}

/// Same as [`interval_table`] for a precomputed profile and radii.
pub fn table_from_profile(
    profile: &RadialProfile,
    radii: &[f64],
    kind: MeasureKind,
    rotation: f64,
    exec: Execution,
) -> IntervalMeasureTable {
    let sums = profile.binned(radii).prefix_sums(rotation, exec);
    match kind {
        MeasureKind::Right => IntervalMeasureTable::from_prefix(radii, &sums.right, Provenance::Right),
        MeasureKind::Left => IntervalMeasureTable::from_prefix(radii, &sums.left, Provenance::Left),
        MeasureKind::Submeasure => IntervalMeasureTable::submeasure_from_prefix(radii, &sums),
    }
}

/// Rotation used by the direct measures: `ℓ_{e^{iφ}Z}` via the same
/// projection as the tables, for checking them pointwise.
pub fn rotated_sides(z: &PointDistribution, rotation: f64, r: f64, big_r: f64) -> Result<(f64, f64)> {
    check_interval(z, r, big_r)?;
    let u = unit_direction(rotation);
    let mut right = 0.0;
    let mut left = 0.0;
    for &(p, m) in z.entries() {
        let modulus = p.norm();
        if modulus > r && modulus <= big_r {
            let w = p.inv() * m as f64;
            let re = u.re * w.re + u.im * w.im;
            if re > 0.0 {
                right += re;
            } else {
                left -= re;
            }
        }
    }
    Ok((right, left))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::GeneratorSpec;
    use num_complex::Complex64;

    fn generated(spec: &str) -> PointDistribution {
        PointDistribution::from_generator(&GeneratorSpec::parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn harmonic_block_matches_partial_sums() {
        let z = generated("arith n=10000 step=1");
        let oracle: f64 = (11..=10_000).map(|k| 1.0 / k as f64).sum();
        let v = right_log_measure(&z, 10.0, 1e4).unwrap();
        assert!((v - oracle).abs() < 1e-9);
        // Euler–Maclaurin: H_N − H_n ≈ ln(N/n) + 1/2N − 1/2n − 1/12N² + 1/12n².
        let (n, big_n) = (10.0f64, 1e4f64);
        let em = (big_n / n).ln() + 0.5 / big_n - 0.5 / n - 1.0 / (12.0 * big_n * big_n) + 1.0 / (12.0 * n * n);
        assert!((v - em).abs() < 1e-5);
        assert_eq!(left_log_measure(&z, 10.0, 1e4).unwrap(), 0.0);
    }

    #[test]
    fn symmetric_integers_have_equal_sides() {
        let z = generated("arith n=1000000 step=1 sym=true");
        let right = right_log_measure(&z, 1e4, 1e6).unwrap();
        let left = left_log_measure(&z, 1e4, 1e6).unwrap();
        assert!((right - left).abs() < 1e-12);
        assert!((right - 100f64.ln()).abs() < 1e-3);
        assert_eq!(log_submeasure(&z, 1e4, 1e6).unwrap(), right.max(left));
    }

    #[test]
    fn imaginary_axis_has_zero_measure() {
        let z = generated("arith n=1000 step=1 dir=pi/2 sym=true");
        assert_eq!(log_submeasure(&z, 1.0, 1000.0).unwrap(), 0.0);
        let t = interval_table(
            &z,
            &GridSpec {
                horizon: 1000.0,
                ..GridSpec::default()
            },
            MeasureKind::Submeasure,
            0.0,
            Execution::default(),
        )
        .unwrap();
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                assert_eq!(t.get(i, j), 0.0);
            }
        }
    }

    #[test]
    fn left_measure_is_right_measure_of_reflection() {
        let z = PointDistribution::from_points([
            Complex64::new(-3.0, 1.0),
            Complex64::new(5.0, -2.0),
            Complex64::new(-20.0, 0.0),
        ])
        .unwrap();
        let reflected = z.scale(Complex64::new(-1.0, 0.0)).unwrap();
        assert_eq!(
            left_log_measure(&z, 1.0, 30.0).unwrap(),
            right_log_measure(&reflected, 1.0, 30.0).unwrap()
        );
    }

    #[test]
    fn truncated_generators_reject_larger_radii() {
        let z = generated("arith n=100 step=1");
        assert!(matches!(right_log_measure(&z, 1.0, 200.0), Err(Error::HorizonExceeded { .. })));
        assert!(matches!(right_log_measure(&z, 5.0, 5.0), Err(Error::InvalidInterval { .. })));
    }

    #[test]
    fn table_agrees_with_direct_sums() {
        let z = generated("sector theta=0.3 a=pi/3 density=2 horizon=1e4 seed=7");
        let grid = GridSpec {
            horizon: 1e4,
            ..GridSpec::default()
        };
        for (rotation, kind) in [(0.0, MeasureKind::Right), (1.1, MeasureKind::Left), (2.0, MeasureKind::Submeasure)] {
            let t = interval_table(&z, &grid, kind, rotation, Execution::Sequential).unwrap();
            let radii = t.radii();
            for (i, j) in [(0, 5), (3, 40), (10, t.len() - 1)] {
                let (right, left) = rotated_sides(&z, rotation, radii[i], radii[j]).unwrap();
                let want = match kind {
                    MeasureKind::Right => right,
                    MeasureKind::Left => left,
                    MeasureKind::Submeasure => right.max(left),
                };
                assert!((t.get(i, j) - want).abs() <= 1e-9 * want.max(1.0));
            }
        }
    }

    #[test]
    fn sequential_and_parallel_tables_are_identical() {
        let z = generated("sector theta=1 a=pi/4 density=1 horizon=1e5 seed=3");
        let grid = GridSpec {
            horizon: 1e5,
            ..GridSpec::default()
        };
        let a = interval_table(&z, &grid, MeasureKind::Submeasure, 0.4, Execution::Sequential).unwrap();
        let b = interval_table(&z, &grid, MeasureKind::Submeasure, 0.4, Execution::default()).unwrap();
        assert_eq!(a, b);
    }
}
