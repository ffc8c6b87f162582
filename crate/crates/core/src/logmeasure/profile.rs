//! Points sorted by modulus with precomputed reciprocals, binned on a
//! radius grid. Rotating a distribution does not change moduli, so a single
//! profile serves every direction of a sweep: only the projection of `1/z`
//! changes.

use num_complex::Complex64;

use crate::angle::unit_direction;
use crate::divisor::PointDistribution;
use crate::Execution;

#[derive(Debug, Clone)]
pub struct RadialProfile {
    moduli: Vec<f64>,
    /// `multiplicity / z`, aligned with `moduli`.
    weights: Vec<Complex64>,
    truncation_radius: f64,
}

impl RadialProfile {
    pub fn new(z: &PointDistribution) -> Self {
        let mut pts: Vec<(f64, Complex64)> = z
            .entries()
            .iter()
            .filter(|(p, _)| p.re != 0.0 || p.im != 0.0)
            .map(|&(p, m)| (p.norm(), p.inv() * m as f64))
            .collect();
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        RadialProfile {
            moduli: pts.iter().map(|p| p.0).collect(),
            weights: pts.iter().map(|p| p.1).collect(),
            truncation_radius: z.truncation_radius(),
        }
    }

    pub fn truncation_radius(&self) -> f64 {
        self.truncation_radius
    }

    pub fn len(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moduli.is_empty()
    }

    /// Bins the points on `radii` (ascending). Points with modulus at most
    /// `radii[0]` or above the last radius are ignored.
    pub fn binned<'a>(&'a self, radii: &'a [f64]) -> BinnedProfile<'a> {
        let bounds = radii
            .iter()
            .map(|&r| self.moduli.partition_point(|&m| m <= r))
            .collect();
        BinnedProfile {
            profile: self,
            radii,
            bounds,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BinnedProfile<'a> {
    profile: &'a RadialProfile,
    radii: &'a [f64],
    bounds: Vec<usize>,
}

/// Cumulative right and left sums `Σ Re⁺(1/z)`, `Σ Re⁺(−1/z)` over
/// `radii[0] < |z| ≤ radii[k]` for the rotated distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct PrefixSums {
    pub right: Vec<f64>,
    pub left: Vec<f64>,
}

impl BinnedProfile<'_> {
    pub fn radii(&self) -> &[f64] {
        self.radii
    }

    /// Per-bin sums for `e^{iφ}Z`. Bins are reduced independently, in point
    /// order, so the result does not depend on `exec`.
    pub fn prefix_sums(&self, rotation: f64, exec: Execution) -> PrefixSums {
        let u = unit_direction(rotation);
        let bins = exec.map_range(self.radii.len().saturating_sub(1), |k| {
            let (lo, hi) = (self.bounds[k], self.bounds[k + 1]);
            let mut right = 0.0;
            let mut left = 0.0;
            for w in &self.profile.weights[lo..hi] {
                // Re(e^{-iφ} w)
                let re = u.re * w.re + u.im * w.im;
                if re > 0.0 {
                    right += re;
                } else {
                    left -= re;
                }
            }
            (right, left)
        });
        let mut out = PrefixSums {
            right: Vec::with_capacity(self.radii.len()),
            left: Vec::with_capacity(self.radii.len()),
        };
        let (mut r, mut l) = (0.0, 0.0);
        out.right.push(0.0);
        out.left.push(0.0);
        for (br, bl) in bins {
            r += br;
            l += bl;
            out.right.push(r);
            out.left.push(l);
        }
        out
    }
}
