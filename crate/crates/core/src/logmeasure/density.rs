//! The four logarithmic block densities of an interval function, estimated
//! from a table on a geometric grid.
//!
//! Limits `r → ∞` are read off the tail of the grid: with `t` the first
//! index of the last `tail_fraction` of the grid and `m` the last index,
//! the block factors are `a_k = r_{t+k}/r_t` and
//!
//! ```text
//! est(a_k) = max_{t ≤ i ≤ m−k} ℓ(r_i, r_{i+k}),    f(a_k) = est(a_k) / ln a_k.
//! ```
//!
//! * upper (limsup over `a`): max of `f` over the upper half of the factors;
//! * lower (liminf over `a`): min of `f` over the same factors;
//! * infimum: min of `f` over all factors;
//! * bounded-growth: the smallest `b ≥ 0` for which the supremum of
//!   `ℓ(r,R) − b·ln(R/r)` over tail pairs is no longer attained on long
//!   intervals (see [`bounded_growth_density`]).

use super::table::IntervalMeasureTable;
use crate::{Error, Result};

/// Densities below this are compared absolutely when computing the
/// relative spread and the relative trend.
pub const DENSITY_FLOOR: f64 = 0.1;

/// Minimal span of a table, in decades.
pub const MIN_DECADES: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityParams {
    /// Fraction of the grid (by index) treated as the tail.
    pub tail_fraction: f64,
    /// Relative tolerance on the spread of the four estimates.
    pub tolerance: f64,
    /// Tolerance on the relative slope of `f(a)` against `ln a`.
    pub trend_tolerance: f64,
}

impl Default for DensityParams {
    fn default() -> Self {
        DensityParams {
            tail_fraction: 0.3,
            tolerance: 0.05,
            trend_tolerance: 0.02,
        }
    }
}

impl DensityParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.tail_fraction > 0.0 && self.tail_fraction < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "tail fraction {} must lie in (0, 1)",
                self.tail_fraction
            )));
        }
        if !(self.tolerance > 0.0 && self.tolerance < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "tolerance {} must lie in (0, 1)",
                self.tolerance
            )));
        }
        if !(self.trend_tolerance > 0.0) {
            return Err(Error::InvalidParameter("trend tolerance must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityVariant {
    /// limsup over block factors.
    Upper,
    /// liminf over block factors.
    Lower,
    /// infimum over block factors.
    Infimum,
    /// infimum of slopes `b` with bounded `ℓ − b·ln(R/r)`.
    BoundedGrowth,
}

/// One point of the curve `a ↦ est(a)/ln a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockPoint {
    pub factor: f64,
    pub estimate: f64,
    pub normalized: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityReport {
    pub upper: f64,
    pub lower: f64,
    pub infimum: f64,
    pub bounded_growth: f64,
    /// max − min of the four estimates.
    pub spread: f64,
    /// spread / max(largest estimate, [`DENSITY_FLOOR`]).
    pub relative_spread: f64,
    /// Least-squares slope of `f(a)` against `ln a` over the upper half of
    /// the block factors, divided by max(mean of `f`, [`DENSITY_FLOOR`]).
    pub tail_slope: f64,
    pub tail_start: f64,
    pub horizon: f64,
    pub converged: bool,
    /// The common value, reported when the diagnostics have converged.
    pub declared: Option<f64>,
    pub curve: Vec<BlockPoint>,
}

impl DensityReport {
    pub fn estimates(&self) -> [f64; 4] {
        [self.upper, self.lower, self.infimum, self.bounded_growth]
    }

    pub fn min(&self) -> f64 {
        self.estimates().into_iter().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.estimates().into_iter().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn mean(&self) -> f64 {
        self.estimates().iter().sum::<f64>() / 4.0
    }

    pub fn get(&self, variant: DensityVariant) -> f64 {
        match variant {
            DensityVariant::Upper => self.upper,
            DensityVariant::Lower => self.lower,
            DensityVariant::Infimum => self.infimum,
            DensityVariant::BoundedGrowth => self.bounded_growth,
        }
    }
}

struct Tail {
    start: usize,
    end: usize,
}

fn tail_of(table: &IntervalMeasureTable, params: &DensityParams) -> Result<Tail> {
    params.validate()?;
    table.geometric_ratio()?;
    let radii = table.radii();
    let decades = (radii[radii.len() - 1] / radii[0]).log10();
    if decades < MIN_DECADES - 1e-9 {
        return Err(Error::InsufficientSpan {
            decades,
            required: MIN_DECADES,
        });
    }
    let end = radii.len() - 1;
    let start = ((1.0 - params.tail_fraction) * end as f64).floor() as usize;
    let start = start.min(end.saturating_sub(2));
    Ok(Tail { start, end })
}

/// The curve `a ↦ est(a)/ln a` over the tail.
pub fn block_curve(table: &IntervalMeasureTable, params: &DensityParams) -> Result<Vec<BlockPoint>> {
    let tail = tail_of(table, params)?;
    Ok(curve(table, &tail))
}

fn curve(table: &IntervalMeasureTable, tail: &Tail) -> Vec<BlockPoint> {
    let radii = table.radii();
    (1..=tail.end - tail.start)
        .map(|k| {
            let est = (tail.start..=tail.end - k)
                .map(|i| table.get(i, i + k))
                .fold(0.0, f64::max);
            let factor = radii[tail.start + k] / radii[tail.start];
            BlockPoint {
                factor,
                estimate: est,
                normalized: est / factor.ln(),
            }
        })
        .collect()
}

/// One block-density variant.
pub fn block_density(
    table: &IntervalMeasureTable,
    variant: DensityVariant,
    params: &DensityParams,
) -> Result<f64> {
    let tail = tail_of(table, params)?;
    let pts = curve(table, &tail);
    let upper_half = &pts[(pts.len() / 2).min(pts.len() - 1)..];
    Ok(match variant {
        DensityVariant::Upper => upper_half.iter().map(|p| p.normalized).fold(0.0, f64::max),
        DensityVariant::Lower => upper_half
            .iter()
            .map(|p| p.normalized)
            .fold(f64::INFINITY, f64::min),
        DensityVariant::Infimum => pts.iter().map(|p| p.normalized).fold(f64::INFINITY, f64::min),
        DensityVariant::BoundedGrowth => bounded_growth_density(table, &tail),
    })
}

/// All four variants with spread and trend diagnostics.
pub fn density_report(table: &IntervalMeasureTable, params: &DensityParams) -> Result<DensityReport> {
    let tail = tail_of(table, params)?;
    let pts = curve(table, &tail);
    let upper_half = &pts[(pts.len() / 2).min(pts.len() - 1)..];
    let upper = upper_half.iter().map(|p| p.normalized).fold(0.0, f64::max);
    let lower = upper_half
        .iter()
        .map(|p| p.normalized)
        .fold(f64::INFINITY, f64::min);
    let infimum = pts.iter().map(|p| p.normalized).fold(f64::INFINITY, f64::min);
    let bounded_growth = bounded_growth_density(table, &tail);

    let all = [upper, lower, infimum, bounded_growth];
    let max = all.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = all.iter().copied().fold(f64::INFINITY, f64::min);
    let spread = max - min;
    let relative_spread = spread / max.max(DENSITY_FLOOR);

    let mean_f = upper_half.iter().map(|p| p.normalized).sum::<f64>() / upper_half.len() as f64;
    let slope = ls_slope(upper_half.iter().map(|p| (p.factor.ln(), p.normalized)));
    let tail_slope = slope / mean_f.max(DENSITY_FLOOR);

    let converged = relative_spread <= params.tolerance && tail_slope.abs() <= params.trend_tolerance;
    let radii = table.radii();
    Ok(DensityReport {
        upper,
        lower,
        infimum,
        bounded_growth,
        spread,
        relative_spread,
        tail_slope,
        tail_start: radii[tail.start],
        horizon: radii[tail.end],
        converged,
        declared: converged.then(|| all.iter().sum::<f64>() / 4.0),
        curve: pts,
    })
}

fn ls_slope<I: Iterator<Item = (f64, f64)>>(points: I) -> f64 {
    let pts: Vec<(f64, f64)> = points.collect();
    if pts.len() < 2 {
        return 0.0;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}

/// Bounded-growth density on the tail.
///
/// For a slope `b` let `G(b) = max_long(ℓ − bλ) − max_short(ℓ − bλ)` where
/// `λ = ln(R/r)` and pairs are split into long (`λ ≥ Λ/2`) and short
/// (`λ < Λ/2`), `Λ` being the log-span of the tail. `G(b) > 0` means the
/// supremum is still carried by long intervals, i.e. still growing with the
/// interval length. `G` is nonincreasing in `b` (the long maximum falls with
/// slope at least `Λ/2`, the short one with slope below `Λ/2`), so the
/// smallest `b` with `G(b) ≤ 0` is found by bisection.
fn bounded_growth_density(table: &IntervalMeasureTable, tail: &Tail) -> f64 {
    let radii = table.radii();
    let span = (radii[tail.end] / radii[tail.start]).ln();
    let mut long = Vec::new();
    let mut short = Vec::new();
    for i in tail.start..tail.end {
        for j in i + 1..=tail.end {
            let lambda = (radii[j] / radii[i]).ln();
            let pair = (table.get(i, j), lambda);
            if lambda >= 0.5 * span * (1.0 - 1e-12) {
                long.push(pair);
            } else {
                short.push(pair);
            }
        }
    }
    if short.is_empty() {
        return long.iter().map(|&(v, l)| v / l).fold(0.0, f64::max);
    }
    let sup = |set: &[(f64, f64)], b: f64| {
        set.iter()
            .map(|&(v, l)| v - b * l)
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let g = |b: f64| sup(&long, b) - sup(&short, b);
    if g(0.0) <= 0.0 {
        return 0.0;
    }
    let mut lo = 0.0;
    let mut hi = 1.0;
    while g(hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > 1e300 {
            return f64::INFINITY;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}
