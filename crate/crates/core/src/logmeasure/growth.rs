//! Detection of `sup (ℓ(r,R) − c·ln(R/r)) = +∞` at a finite horizon.
//!
//! The running supremum over pairs with `R ≤ H` is tracked as `H` grows
//! through the last three decades. A bounded supremum is eventually flat; a
//! divergent one keeps rising. Growth is measured per decade of `H`.

use std::f64::consts::LN_10;

use super::profile::RadialProfile;
use super::table::IntervalMeasureTable;
use crate::{Error, Execution, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthParams {
    /// Growth per decade above which the supremum is declared divergent.
    pub divergence_margin: f64,
    /// Growth per decade below which it is declared bounded.
    pub bounded_margin: f64,
}

impl Default for GrowthParams {
    fn default() -> Self {
        GrowthParams {
            divergence_margin: 1.0,
            bounded_margin: 0.1,
        }
    }
}

impl GrowthParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.bounded_margin > 0.0 && self.divergence_margin > self.bounded_margin) {
            return Err(Error::InvalidParameter(format!(
                "need 0 < bounded margin ({}) < divergence margin ({})",
                self.bounded_margin, self.divergence_margin
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthState {
    Divergent,
    Bounded,
    Unclear,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthDiagnostics {
    /// Growth of the running supremum per decade, oldest decade first.
    pub per_decade: Vec<f64>,
    /// Running supremum at the horizon.
    pub final_sup: f64,
    pub state: GrowthState,
}

impl GrowthDiagnostics {
    fn classify(per_decade: Vec<f64>, final_sup: f64, params: &GrowthParams) -> Self {
        let state = if per_decade.iter().all(|&g| g > params.divergence_margin) {
            GrowthState::Divergent
        } else if per_decade.iter().all(|&g| g < params.bounded_margin) {
            GrowthState::Bounded
        } else {
            GrowthState::Unclear
        };
        GrowthDiagnostics {
            per_decade,
            final_sup,
            state,
        }
    }

    pub fn min_growth(&self) -> f64 {
        self.per_decade.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_growth(&self) -> f64 {
        self.per_decade.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn mean_growth(&self) -> f64 {
        self.per_decade.iter().sum::<f64>() / self.per_decade.len() as f64
    }
}

/// Detector over all grid pairs `1 ≤ r < R` of a table.
pub fn sup_growth(table: &IntervalMeasureTable, slope: f64, params: &GrowthParams) -> Result<GrowthDiagnostics> {
    params.validate()?;
    let radii = table.radii();
    let first = radii.partition_point(|&r| r < 1.0);
    let n = radii.len();
    if n < first + 2 {
        return Err(Error::InsufficientSpan {
            decades: 0.0,
            required: 3.0,
        });
    }
    let ln_h = radii[n - 1].ln();
    let decades = (ln_h - radii[first].ln()) / LN_10;
    if decades < 3.0 - 1e-9 {
        return Err(Error::InsufficientSpan {
            decades,
            required: 3.0,
        });
    }
    // running[j]: sup over first ≤ i < j' ≤ j.
    let mut running = vec![f64::NEG_INFINITY; n];
    let mut best = f64::NEG_INFINITY;
    for j in first + 1..n {
        for i in first..j {
            best = best.max(table.get(i, j) - slope * (radii[j] / radii[i]).ln());
        }
        running[j] = best;
    }
    let anchor = |k: usize| -> usize {
        let target = ln_h - k as f64 * LN_10;
        (first + 1..n)
            .min_by(|&a, &b| {
                (radii[a].ln() - target)
                    .abs()
                    .total_cmp(&(radii[b].ln() - target).abs())
            })
            .expect("grid has pairs")
    };
    let anchors: Vec<usize> = (0..=3).rev().map(anchor).collect();
    let per_decade = anchors
        .windows(2)
        .map(|w| {
            let dlog = (radii[w[1]] / radii[w[0]]).log10();
            (running[w[1]] - running[w[0]]) / dlog
        })
        .collect();
    Ok(GrowthDiagnostics::classify(per_decade, best, params))
}

/// Detector on the ladder `r = e^n`, `R = e^N`, `0 ≤ n < N`, for the
/// submeasure of `e^{iφ}Z`: tracks the running maximum over `N` of
/// `max_n (L(e^n, e^N) − c·(N − n))`.
pub fn ladder_sup_growth(
    profile: &RadialProfile,
    rotation: f64,
    slope: f64,
    horizon: f64,
    params: &GrowthParams,
) -> Result<GrowthDiagnostics> {
    params.validate()?;
    let h = horizon.min(profile.truncation_radius());
    if !h.is_finite() {
        return Err(Error::InvalidParameter("ladder detector needs a finite horizon".into()));
    }
    let n_max = h.ln().floor();
    if n_max < 3.0 * LN_10 + 1.0 {
        return Err(Error::InsufficientSpan {
            decades: h.log10(),
            required: 3.0,
        });
    }
    let n_max = n_max as usize;
    let radii: Vec<f64> = (0..=n_max).map(|n| (n as f64).exp()).collect();
    let sums = profile.binned(&radii).prefix_sums(rotation, Execution::Sequential);
    let mut running = vec![f64::NEG_INFINITY; n_max + 1];
    let mut best = f64::NEG_INFINITY;
    for big_n in 1..=n_max {
        for n in 0..big_n {
            let right = sums.right[big_n] - sums.right[n];
            let left = sums.left[big_n] - sums.left[n];
            best = best.max(right.max(left) - slope * (big_n - n) as f64);
        }
        running[big_n] = best;
    }
    let anchors: Vec<usize> = (0..=3)
        .rev()
        .map(|k| (n_max as f64 - k as f64 * LN_10).round().max(1.0) as usize)
        .collect();
    let per_decade = anchors
        .windows(2)
        .map(|w| (running[w[1]] - running[w[0]]) / ((w[1] - w[0]) as f64 / LN_10))
        .collect();
    Ok(GrowthDiagnostics::classify(per_decade, best, params))
}
