//! Finite-horizon heuristics for the side condition of the second criterion:
//! that the part of `Z` in a sector around `θ` is thin enough for
//! `Σ 1/|w|` to converge.

use num_complex::Complex64;

use crate::angle::unit_direction;
use crate::divisor::PointDistribution;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RedhefferFinding {
    /// The last decade contributes at most half of the previous one.
    FiniteBySum,
    /// Points stay separated and inside a strip around the axis.
    FiniteBySeparation,
    Unknown,
}

impl RedhefferFinding {
    pub fn confirmed(self) -> bool {
        self != RedhefferFinding::Unknown
    }
}

/// Heuristic check on the sector part of `z` with half-angle `a` around
/// `theta`, restricted to `|w| ≤ horizon`.
pub fn redheffer_sufficient(z: &PointDistribution, theta: f64, a: f64, horizon: f64) -> Result<RedhefferFinding> {
    let h = horizon.min(z.truncation_radius());
    let part = z.sector_part(theta, a)?;
    let u = unit_direction(theta);
    // Rotated so the sector axis is the positive real axis.
    let pts: Vec<(Complex64, u64)> = part
        .entries()
        .iter()
        .filter(|(p, _)| p.norm() <= h)
        .map(|&(p, m)| (Complex64::new(u.re * p.re + u.im * p.im, u.re * p.im - u.im * p.re), m))
        .collect();
    if pts.is_empty() {
        return Ok(RedhefferFinding::FiniteBySum);
    }
    let (mut d1, mut d2) = (0.0, 0.0);
    for &(p, m) in &pts {
        let r = p.norm();
        if r > h / 10.0 {
            d1 += m as f64 / r;
        } else if r > h / 100.0 {
            d2 += m as f64 / r;
        }
    }
    if d1 == 0.0 || d1 <= 0.5 * d2 {
        return Ok(RedhefferFinding::FiniteBySum);
    }
    if pts.iter().any(|&(_, m)| m > 1) {
        return Ok(RedhefferFinding::Unknown);
    }
    let (head, tail): (Vec<Complex64>, Vec<Complex64>) = pts.iter().map(|p| p.0).partition(|p| p.norm() <= h / 10.0);
    if head.len() < 2 {
        return Ok(RedhefferFinding::Unknown);
    }
    let head_gap = min_pair_distance(&head);
    let tail_gap = min_pair_distance(&tail);
    let head_strip = head.iter().map(|p| p.im.abs()).fold(0.0, f64::max);
    let tail_strip = tail.iter().map(|p| p.im.abs()).fold(0.0, f64::max);
    if tail_gap >= 0.5 * head_gap && tail_strip <= 2.0 * head_strip + 1e-3 * h {
        Ok(RedhefferFinding::FiniteBySeparation)
    } else {
        Ok(RedhefferFinding::Unknown)
    }
}

/// Smallest distance between two points; `+∞` for fewer than two points.
pub(crate) fn min_pair_distance(points: &[Complex64]) -> f64 {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let mut best = f64::INFINITY;
    for i in 0..pts.len() {
        for q in &pts[i + 1..] {
            if q.re - pts[i].re >= best {
                break;
            }
            best = best.min((q - pts[i]).norm());
        }
    }
    best
}
