//! Completeness verdicts for exponential systems `Exp^Z` from the
//! logarithmic block density of `Z` in a direction.
//!
//! Everything depends on `Z` only through the submeasure of
//! `e^{i(π/2−θ)}Z`, computed from one modulus-sorted profile per call.
//! Verdicts are three-valued: limits are only estimated up to a horizon,
//! so a conclusive answer needs the estimates to clear the threshold
//! `b/2π` by the relative tolerance.

mod verdict;

pub use verdict::{verdicts_csv, CompletenessVerdict, Criterion, RedhefferStatus, Verdict, CSV_HEADER};

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI, TAU};

use crate::divisor::{PointDistribution, UpperDensity};
use crate::logmeasure::{
    density_report, ladder_sup_growth, redheffer_sufficient, sup_growth, table_from_profile, DensityParams,
    DensityReport, GrowthParams, GrowthState, GridSpec, MeasureKind, RadialProfile,
};
use crate::{Error, Execution, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct CriteriaParams {
    pub grid: GridSpec,
    pub density: DensityParams,
    /// Relative last-decade growth of `max N(r)/r` read as `dens = +∞`.
    pub upper_density_growth_tolerance: f64,
    pub growth: GrowthParams,
    /// Directions `kπ/steps`, `0 ≤ k < steps`, for the breadth and diameter sweeps.
    pub theta_steps: usize,
    /// Sector half-angles tried by the Redheffer heuristics.
    pub redheffer_half_angles: Vec<f64>,
    pub exec: Execution,
}

impl Default for CriteriaParams {
    fn default() -> Self {
        CriteriaParams {
            grid: GridSpec::default(),
            density: DensityParams::default(),
            upper_density_growth_tolerance: 0.05,
            growth: GrowthParams::default(),
            theta_steps: 720,
            redheffer_half_angles: vec![FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI / 16.0],
            exec: Execution::default(),
        }
    }
}

impl CriteriaParams {
    pub fn validate(&self) -> Result<()> {
        self.grid.validate()?;
        self.density.validate()?;
        self.growth.validate()?;
        if !(self.upper_density_growth_tolerance > 0.0) {
            return Err(Error::InvalidParameter("upper density growth tolerance must be positive".into()));
        }
        if self.theta_steps == 0 {
            return Err(Error::InvalidParameter("theta steps must be at least 1".into()));
        }
        for &a in &self.redheffer_half_angles {
            if !(a > 0.0 && a <= FRAC_PI_2) {
                return Err(Error::InvalidHalfAngle(a));
            }
        }
        Ok(())
    }
}

/// How the Redheffer side condition of the second criterion is handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RedhefferMode {
    UserAsserted,
    #[default]
    CheckHeuristically,
}

/// Profile, grid and upper density of one distribution.
pub struct Prepared {
    profile: RadialProfile,
    radii: Vec<f64>,
    upper_density: UpperDensity,
}

impl Prepared {
    pub fn new(z: &PointDistribution, params: &CriteriaParams) -> Result<Self> {
        params.validate()?;
        let grid = params.grid.build(z.truncation_radius())?;
        let radii = grid.radii().to_vec();
        let upper_density = z.upper_density(1.0, &radii, params.upper_density_growth_tolerance)?;
        Ok(Prepared {
            profile: RadialProfile::new(z),
            radii,
            upper_density,
        })
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn horizon(&self) -> f64 {
        self.radii[self.radii.len() - 1]
    }

    pub fn upper_density(&self) -> &UpperDensity {
        &self.upper_density
    }

    /// Block densities of the submeasure of `e^{iφ}Z`.
    pub fn density(&self, rotation: f64, params: &CriteriaParams, exec: Execution) -> Result<DensityReport> {
        let table = table_from_profile(&self.profile, &self.radii, MeasureKind::Submeasure, rotation, exec);
        density_report(&table, &params.density)
    }

    /// Densities of `e^{iθ}Z` over the sweep directions.
    pub fn sweep(&self, params: &CriteriaParams) -> Result<Vec<(f64, DensityReport)>> {
        let steps = params.theta_steps;
        params
            .exec
            .map_range(steps, |k| {
                let theta = k as f64 * PI / steps as f64;
                self.density(theta, params, Execution::Sequential).map(|d| (theta, d))
            })
            .into_iter()
            .collect()
    }
}

/// `2π·ln-dens(e^{i(π/2−θ)}Z)`, the width below which `Exp^Z` is complete.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalWidth {
    /// `+∞` when the upper density is flagged infinite; otherwise `2π`
    /// times the declared density, or the mean of the four estimates when
    /// they have not converged.
    pub value: f64,
    pub density: DensityReport,
    pub upper_density: UpperDensity,
}

impl CriticalWidth {
    pub fn converged(&self) -> bool {
        self.upper_density.divergent || self.density.converged
    }
}

pub fn critical_width(z: &PointDistribution, theta: f64, params: &CriteriaParams) -> Result<CriticalWidth> {
    let prep = Prepared::new(z, params)?;
    let density = prep.density(FRAC_PI_2 - theta, params, params.exec)?;
    let value = if prep.upper_density.divergent {
        f64::INFINITY
    } else {
        TAU * density.declared.unwrap_or_else(|| density.mean())
    };
    Ok(CriticalWidth {
        value,
        density,
        upper_density: prep.upper_density,
    })
}

fn check_b(b: f64, allow_zero: bool) -> Result<()> {
    let ok = b.is_finite() && (b > 0.0 || (allow_zero && b == 0.0));
    if !ok {
        return Err(Error::InvalidParameter(format!(
            "width b = {b} must be finite and {}",
            if allow_zero { "≥ 0" } else { "> 0" }
        )));
    }
    Ok(())
}

/// Band test of the four estimates against `thr`.
fn band(d: &DensityReport, thr: f64, params: &DensityParams) -> Verdict {
    if d.min() >= thr * (1.0 + params.tolerance) && d.tail_slope >= -params.trend_tolerance {
        Verdict::Complete
    } else if d.max() <= thr * (1.0 - params.tolerance) && d.tail_slope <= params.trend_tolerance {
        Verdict::Incomplete
    } else {
        Verdict::Inconclusive
    }
}

fn density_flags(d: &DensityReport, u: &UpperDensity) -> Vec<String> {
    let mut flags = Vec::new();
    if u.divergent {
        flags.push("dens=infinite".to_string());
    }
    if !d.converged {
        flags.push("unconverged".to_string());
    }
    flags
}

fn band_reason(d: &DensityReport) -> String {
    if d.converged {
        "estimate within tolerance of b/2pi".to_string()
    } else {
        format!(
            "estimates straddle b/2pi or drift (relative spread {:.3}, trend {:.3})",
            d.relative_spread, d.tail_slope
        )
    }
}

pub fn theorem1_verdict(z: &PointDistribution, b: f64, theta: f64, params: &CriteriaParams) -> Result<CompletenessVerdict> {
    check_b(b, false)?;
    let prep = Prepared::new(z, params)?;
    let d = prep.density(FRAC_PI_2 - theta, params, params.exec)?;
    let thr = b / TAU;
    let infinite = prep.upper_density.divergent;
    let verdict = if infinite { Verdict::Complete } else { band(&d, thr, &params.density) };
    let clause = match verdict {
        Verdict::Complete => "I+II: Exp^Z complete in Hol(D) for every convex domain D of width <= b in direction theta, \
                              and in C(K)∩Hol(int K) for every convex compact K of width < b in direction theta",
        Verdict::Incomplete => "not I: Exp^Z is not complete in Hol(D) for some convex domain D of width <= b in direction theta",
        _ => "no claim",
    };
    let reason = (verdict == Verdict::Inconclusive).then(|| band_reason(&d));
    Ok(CompletenessVerdict {
        verdict,
        criterion: Criterion::Theorem1,
        clause: clause.to_string(),
        b,
        theta,
        threshold: thr,
        margin: if infinite { f64::INFINITY } else { d.mean() - thr },
        flags: density_flags(&d, &prep.upper_density),
        density: Some(d),
        upper_density: Some(prep.upper_density),
        growth: None,
        redheffer: None,
        reason,
    })
}

fn redheffer_status(z: &PointDistribution, theta: f64, mode: RedhefferMode, horizon: f64, params: &CriteriaParams) -> Result<RedhefferStatus> {
    if mode == RedhefferMode::UserAsserted {
        return Ok(RedhefferStatus::AssertedByUser);
    }
    for dir in [theta, theta - PI] {
        let mut confirmed = false;
        for &a in &params.redheffer_half_angles {
            if redheffer_sufficient(z, dir, a, horizon)?.confirmed() {
                confirmed = true;
                break;
            }
        }
        if !confirmed {
            return Ok(RedhefferStatus::Unknown);
        }
    }
    Ok(RedhefferStatus::HeuristicallyConfirmed)
}

pub fn theorem2_verdict(
    z: &PointDistribution,
    b: f64,
    theta: f64,
    mode: RedhefferMode,
    params: &CriteriaParams,
) -> Result<CompletenessVerdict> {
    check_b(b, true)?;
    let prep = Prepared::new(z, params)?;
    let rotation = FRAC_PI_2 - theta;
    let table = table_from_profile(&prep.profile, &prep.radii, MeasureKind::Submeasure, rotation, params.exec);
    let d = density_report(&table, &params.density)?;
    let slope = b / TAU;
    let cont = sup_growth(&table, slope, &params.growth)?;
    let ladder = ladder_sup_growth(&prep.profile, rotation, slope, prep.horizon(), &params.growth)?;
    let declared = d.declared.unwrap_or_else(|| d.max());

    let (mut verdict, margin) = match (cont.state, ladder.state) {
        (GrowthState::Divergent, GrowthState::Divergent) => (
            Verdict::Complete,
            cont.min_growth().min(ladder.min_growth()) - params.growth.divergence_margin,
        ),
        (GrowthState::Bounded, GrowthState::Bounded) if slope >= declared * (1.0 - params.density.tolerance) => (
            Verdict::Incomplete,
            cont.max_growth().max(ladder.max_growth()) - params.growth.bounded_margin,
        ),
        _ => (
            Verdict::Inconclusive,
            (cont.mean_growth() + ladder.mean_growth()) / 2.0 - params.growth.bounded_margin,
        ),
    };
    let mut reason = match verdict {
        Verdict::Inconclusive => Some(format!(
            "detectors disagree or are unclear (sup: {:?}, ladder: {:?})",
            cont.state, ladder.state
        )),
        _ => None,
    };
    let status = redheffer_status(z, theta, mode, prep.horizon(), params)?;
    if status == RedhefferStatus::Unknown && verdict.is_conclusive() {
        verdict = Verdict::Inconclusive;
        reason = Some(
            "Redheffer finiteness near theta and theta-pi not confirmed by the heuristics; assert it to obtain a verdict"
                .to_string(),
        );
    }
    let clause = match verdict {
        Verdict::Complete => "I+IV: Exp^Z complete in Hol(D) for every convex domain D of width <= b in direction theta",
        Verdict::Incomplete => "not I: sup (L(r,R) - (b/2pi) ln(R/r)) is finite, Exp^Z is not complete for the strip of width b",
        _ => "no claim",
    };
    let mut flags = density_flags(&d, &prep.upper_density);
    flags.push(format!("redheffer={}", status.as_str()));
    Ok(CompletenessVerdict {
        verdict,
        criterion: Criterion::Theorem2,
        clause: clause.to_string(),
        b,
        theta,
        threshold: slope,
        margin,
        density: Some(d),
        upper_density: Some(prep.upper_density),
        growth: Some((cont, ladder)),
        redheffer: Some(status),
        flags,
        reason,
    })
}

pub fn breadth_criterion(z: &PointDistribution, b: f64, params: &CriteriaParams) -> Result<CompletenessVerdict> {
    check_b(b, false)?;
    let prep = Prepared::new(z, params)?;
    if prep.upper_density.divergent {
        return Err(Error::HypothesisViolation(
            "the breadth criterion needs finite upper density, but it is flagged infinite".into(),
        ));
    }
    let sweep = prep.sweep(params)?;
    let thr = b / TAU;
    let bands: Vec<Verdict> = sweep.iter().map(|(_, d)| band(d, thr, &params.density)).collect();
    let (argmin, (theta_min, d_min)) = sweep
        .iter()
        .enumerate()
        .min_by(|a, b| a.1 .1.mean().total_cmp(&b.1 .1.mean()))
        .expect("at least one direction");
    let (verdict, idx) = if bands.iter().all(|&v| v == Verdict::Complete) {
        (Verdict::Complete, argmin)
    } else if let Some(i) = bands.iter().position(|&v| v == Verdict::Incomplete) {
        (Verdict::Incomplete, i)
    } else {
        (Verdict::Inconclusive, argmin)
    };
    let (theta, d) = sweep[idx].clone();
    let clause = match verdict {
        Verdict::Complete => "III: Exp^Z complete in Hol(D) for every convex domain D of breadth <= b \
                              and in C(K)∩Hol(int K) for every convex compact K of breadth < b",
        Verdict::Incomplete => "not III: some direction has ln-dens below b/2pi",
        _ => "no claim",
    };
    let reason = (verdict == Verdict::Inconclusive).then(|| {
        format!(
            "smallest estimate (theta={:.6}) is within tolerance of b/2pi or unconverged",
            theta_min
        )
    });
    let mut flags = density_flags(&d, &prep.upper_density);
    flags.push(format!("theta-steps={}", params.theta_steps));
    Ok(CompletenessVerdict {
        verdict,
        criterion: Criterion::Breadth,
        clause: clause.to_string(),
        b,
        theta,
        threshold: thr,
        margin: d_min.mean() - thr,
        density: Some(d),
        upper_density: Some(prep.upper_density),
        growth: None,
        redheffer: None,
        flags,
        reason,
    })
}

pub fn diameter_sufficient(z: &PointDistribution, b: f64, params: &CriteriaParams) -> Result<CompletenessVerdict> {
    check_b(b, false)?;
    let prep = Prepared::new(z, params)?;
    let thr = b / TAU;
    let clause_ok = "Exp^Z complete in Hol(D) for every convex domain D of diameter <= b \
                     and in C(K)∩Hol(int K) for every convex compact K of diameter < b";
    if prep.upper_density.divergent {
        return Ok(CompletenessVerdict {
            verdict: Verdict::Complete,
            criterion: Criterion::Diameter,
            clause: clause_ok.to_string(),
            b,
            theta: 0.0,
            threshold: thr,
            margin: f64::INFINITY,
            density: None,
            upper_density: Some(prep.upper_density),
            growth: None,
            redheffer: None,
            flags: vec!["dens=infinite".to_string()],
            reason: None,
        });
    }
    let sweep = prep.sweep(params)?;
    let (idx, _) = sweep
        .iter()
        .enumerate()
        .max_by(|a, b| a.1 .1.mean().total_cmp(&b.1 .1.mean()))
        .expect("at least one direction");
    let max_mean = sweep[idx].1.mean();
    let fired = sweep
        .iter()
        .enumerate()
        .filter(|(_, (_, d))| band(d, thr, &params.density) == Verdict::Complete)
        .max_by(|a, b| a.1 .1.min().total_cmp(&b.1 .1.min()))
        .map(|(i, _)| i);
    let (verdict, idx) = match fired {
        Some(i) => (Verdict::Complete, i),
        None => (Verdict::NoConclusion, idx),
    };
    let (theta, d) = sweep[idx].clone();
    let mut flags = density_flags(&d, &prep.upper_density);
    flags.push(format!("theta-steps={}", params.theta_steps));
    Ok(CompletenessVerdict {
        verdict,
        criterion: Criterion::Diameter,
        clause: if verdict == Verdict::Complete {
            clause_ok.to_string()
        } else {
            "no claim: the criterion is sufficient only".to_string()
        },
        b,
        theta,
        threshold: thr,
        margin: max_mean - thr,
        density: Some(d),
        upper_density: Some(prep.upper_density),
        growth: None,
        redheffer: None,
        flags,
        reason: (verdict == Verdict::NoConclusion)
            .then(|| "no direction has ln-dens clearly above b/2pi".to_string()),
    })
}
