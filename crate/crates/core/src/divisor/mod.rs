//! Point distributions on ℂ with multiplicity (divisors) and their counting
//! measure.
//!
//! A [`PointDistribution`] is an immutable multiset of complex points.
//! Entries are merged by exact coordinate equality and kept sorted, so two
//! distributions are equal as multisets iff their entry lists are equal.

mod generator;
pub mod io;
mod region;

use std::cmp::Ordering;

use num_complex::Complex64;

pub use generator::{GeneratorSpec, MAX_POINTS};
pub use region::Region;

use crate::angle::unit_direction;
use crate::{Error, Result};
use region::{check_half_angle, in_sector};

/// Where a distribution came from.
#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    Explicit,
    Generator(GeneratorSpec),
}

/// Multiset of complex points with positive finite multiplicities.
///
/// Invariants: multiplicities are `≥ 1`, no two entries share a point, and
/// every entry satisfies `|z| ≤ truncation_radius`. The truncation radius is
/// the horizon up to which the distribution is known to be complete; for
/// explicit finite sets it is `+∞`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointDistribution {
    entries: Vec<(Complex64, u64)>,
    source: Source,
    truncation_radius: f64,
}

/// Result of a counting query. `lower_bound_only` is set when the region
/// reaches past the truncation radius, where points may be missing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Count {
    pub value: u64,
    pub lower_bound_only: bool,
}

/// Upper `p`-density estimate over a radius grid.
#[derive(Debug, Clone, PartialEq)]
pub struct UpperDensity {
    pub p: f64,
    /// `max_r Z(D̄(r)) / r^p` over the grid.
    pub estimate: f64,
    /// Relative growth of the running maximum over the last decade of the
    /// grid (`NaN` if the grid spans less than one decade).
    pub last_decade_growth: f64,
    /// Set when that growth exceeds the tolerance: heuristic for `dens = +∞`.
    pub divergent: bool,
}

fn cmp_points(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

impl PointDistribution {
    pub fn empty() -> Self {
        PointDistribution {
            entries: Vec::new(),
            source: Source::Explicit,
            truncation_radius: f64::INFINITY,
        }
    }

    /// Explicit distribution from `(point, multiplicity)` pairs. Repeated
    /// points are merged by adding multiplicities.
    pub fn new<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Complex64, u64)>,
    {
        let mut v = Vec::new();
        for (z, m) in entries {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::NonFinitePoint(z));
            }
            if m == 0 {
                return Err(Error::ZeroMultiplicity);
            }
            // -0.0 and 0.0 are the same coordinate.
            v.push((Complex64::new(z.re + 0.0, z.im + 0.0), m));
        }
        Ok(Self::from_unmerged(v, Source::Explicit, f64::INFINITY))
    }

    /// Explicit distribution with every point of multiplicity one (repeats add up).
    pub fn from_points<I>(points: I) -> Result<Self>
    where
        I: IntoIterator<Item = Complex64>,
    {
        Self::new(points.into_iter().map(|z| (z, 1)))
    }

    pub fn from_generator(spec: &GeneratorSpec) -> Result<Self> {
        spec.validate()?;
        let pts = spec.points().into_iter().map(|z| (z, 1)).collect();
        Ok(Self::from_unmerged(
            pts,
            Source::Generator(spec.clone()),
            spec.truncation_radius(),
        ))
    }

    fn from_unmerged(mut v: Vec<(Complex64, u64)>, source: Source, truncation_radius: f64) -> Self {
        v.sort_by(|a, b| cmp_points(&a.0, &b.0));
        let mut entries: Vec<(Complex64, u64)> = Vec::with_capacity(v.len());
        for (z, m) in v {
            match entries.last_mut() {
                Some((last, lm)) if *last == z => *lm += m,
                _ => entries.push((z, m)),
            }
        }
        PointDistribution {
            entries,
            source,
            truncation_radius,
        }
    }

    /// Declares the horizon within which the distribution is complete.
    pub fn with_truncation_radius(mut self, radius: f64) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(Error::InvalidParameter(format!("truncation radius {radius} must be positive")));
        }
        if let Some(far) = self.entries.iter().map(|(z, _)| z.norm()).find(|&m| m > radius) {
            return Err(Error::HorizonExceeded {
                requested: far,
                horizon: radius,
            });
        }
        self.truncation_radius = radius;
        Ok(self)
    }

    pub fn entries(&self) -> &[(Complex64, u64)] {
        &self.entries
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn truncation_radius(&self) -> f64 {
        self.truncation_radius
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct points.
    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    /// Number of points counted with multiplicity.
    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// `Z(z)`.
    pub fn multiplicity(&self, z: Complex64) -> u64 {
        let z = Complex64::new(z.re + 0.0, z.im + 0.0);
        self.entries
            .binary_search_by(|(p, _)| cmp_points(p, &z))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    /// `Z ⊂ W`: `Z(z) ≤ W(z)` everywhere.
    pub fn is_subset_of(&self, other: &PointDistribution) -> bool {
        self.entries.iter().all(|&(z, m)| other.multiplicity(z) >= m)
    }

    /// `Z(S)`, multiplicities included.
    pub fn count(&self, region: &Region) -> Count {
        let value = self
            .entries
            .iter()
            .filter(|(z, _)| region.contains(*z))
            .map(|&(_, m)| m)
            .sum();
        Count {
            value,
            lower_bound_only: region.outer_radius() > self.truncation_radius,
        }
    }

    /// `e^{iθ}Z`: the multiplicity at `z` is `Z(e^{-iθ}z)`.
    pub fn rotate(&self, theta: f64) -> PointDistribution {
        let u = unit_direction(theta);
        let v = self.entries.iter().map(|&(z, m)| (u * z, m)).collect();
        let mut out = Self::from_unmerged(v, Source::Explicit, self.truncation_radius);
        normalize_zeros(&mut out.entries);
        out
    }

    /// `wZ`: the multiplicity at `z` is `Z(z/w)`; the horizon scales by `|w|`.
    pub fn scale(&self, w: Complex64) -> Result<PointDistribution> {
        if w == Complex64::new(0.0, 0.0) {
            return Err(Error::ZeroScalar);
        }
        if !(w.re.is_finite() && w.im.is_finite()) {
            return Err(Error::NonFinitePoint(w));
        }
        let v = self.entries.iter().map(|&(z, m)| (w * z, m)).collect();
        let mut out = Self::from_unmerged(v, Source::Explicit, self.truncation_radius * w.norm());
        normalize_zeros(&mut out.entries);
        Ok(out)
    }

    /// `Z ∪ W`: multiplicities add. The result is complete only up to the
    /// smaller of the two horizons.
    pub fn union(&self, other: &PointDistribution) -> PointDistribution {
        let v = self.entries.iter().chain(other.entries.iter()).copied().collect();
        Self::from_unmerged(
            v,
            Source::Explicit,
            self.truncation_radius.min(other.truncation_radius),
        )
    }

    /// `Z \ W`, defined only when `W ⊂ Z`.
    pub fn difference(&self, other: &PointDistribution) -> Result<PointDistribution> {
        let mut entries = self.entries.clone();
        for &(z, m) in &other.entries {
            match entries.binary_search_by(|(p, _)| cmp_points(p, &z)) {
                Ok(i) if entries[i].1 >= m => entries[i].1 -= m,
                Ok(i) => {
                    return Err(Error::ContainmentViolation {
                        point: z,
                        available: entries[i].1,
                        requested: m,
                    })
                }
                Err(_) => {
                    return Err(Error::ContainmentViolation {
                        point: z,
                        available: 0,
                        requested: m,
                    })
                }
            }
        }
        entries.retain(|&(_, m)| m > 0);
        Ok(PointDistribution {
            entries,
            source: Source::Explicit,
            truncation_radius: self.truncation_radius.min(other.truncation_radius),
        })
    }

    /// `Z_a^θ`: the points with `|arg z − θ| < a`; the origin is excluded.
    pub fn sector_part(&self, theta: f64, half_angle: f64) -> Result<PointDistribution> {
        check_half_angle(half_angle)?;
        let entries = self
            .entries
            .iter()
            .filter(|(z, _)| in_sector(*z, theta, half_angle))
            .copied()
            .collect();
        Ok(PointDistribution {
            entries,
            source: Source::Explicit,
            truncation_radius: self.truncation_radius,
        })
    }

    /// Points with `|z| ≤ radius` (the truncation radius is capped accordingly).
    pub fn truncate(&self, radius: f64) -> PointDistribution {
        PointDistribution {
            entries: self
                .entries
                .iter()
                .filter(|(z, _)| z.norm() <= radius)
                .copied()
                .collect(),
            source: Source::Explicit,
            truncation_radius: self.truncation_radius.min(radius),
        }
    }

    /// Moduli with multiplicities, sorted by modulus.
    pub fn sorted_moduli(&self) -> Vec<(f64, u64)> {
        let mut v: Vec<(f64, u64)> = self.entries.iter().map(|&(z, m)| (z.norm(), m)).collect();
        v.sort_by(|a, b| a.0.total_cmp(&b.0));
        v
    }

    /// Upper `p`-density `limsup Z(D̄(r))/r^p`, estimated as the maximum
    /// over `grid`, with a divergence flag raised when the running maximum
    /// still grows by more than `growth_tolerance` (relative) across the
    /// last decade of the grid.
    pub fn upper_density(&self, p: f64, grid: &[f64], growth_tolerance: f64) -> Result<UpperDensity> {
        if grid.is_empty() {
            return Err(Error::EmptyGrid);
        }
        if !(p > 0.0 && p.is_finite()) {
            return Err(Error::InvalidParameter(format!("density order p = {p} must be positive")));
        }
        let mut radii = grid.to_vec();
        radii.sort_by(f64::total_cmp);
        if let Some(&bad) = radii.iter().find(|r| !(**r > 0.0 && r.is_finite())) {
            return Err(Error::InvalidGrid(format!("radius {bad} is not positive")));
        }
        let top = *radii.last().expect("nonempty");
        if top > self.truncation_radius {
            return Err(Error::HorizonExceeded {
                requested: top,
                horizon: self.truncation_radius,
            });
        }
        let moduli = self.sorted_moduli();
        let mut running = Vec::with_capacity(radii.len());
        let (mut idx, mut count, mut best) = (0usize, 0u64, 0.0f64);
        for &r in &radii {
            while idx < moduli.len() && moduli[idx].0 <= r {
                count += moduli[idx].1;
                idx += 1;
            }
            best = best.max(count as f64 / r.powf(p));
            running.push(best);
        }
        let growth = if top / radii[0] >= 10.0 {
            let cut = radii.partition_point(|&r| r <= top / 10.0);
            let earlier = running[cut.saturating_sub(1)];
            if earlier > 0.0 {
                best / earlier - 1.0
            } else if best > 0.0 {
                f64::INFINITY
            } else {
                0.0
            }
        } else {
            f64::NAN
        };
        Ok(UpperDensity {
            p,
            estimate: best,
            last_decade_growth: growth,
            divergent: growth > growth_tolerance,
        })
    }
}

fn normalize_zeros(entries: &mut [(Complex64, u64)]) {
    for (z, _) in entries.iter_mut() {
        z.re += 0.0;
        z.im += 0.0;
    }
}
