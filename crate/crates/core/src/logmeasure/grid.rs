use crate::{Error, Result};

/// Parameters of the geometric radius grid `base·ratio^i ≤ horizon`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub base: f64,
    pub ratio: f64,
    pub horizon: f64,
}

impl Default for GridSpec {
    /// Base 1, ratio `e^{1/8}` (so every `e^n` is a grid point), horizon `10^6`.
    fn default() -> Self {
        GridSpec {
            base: 1.0,
            ratio: (0.125f64).exp(),
            horizon: 1e6,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.base > 0.0 && self.base.is_finite()) {
            return Err(Error::InvalidGrid(format!("base {} must be positive", self.base)));
        }
        if !(self.ratio > 1.0 && self.ratio.is_finite()) {
            return Err(Error::InvalidGrid(format!("ratio {} must exceed 1", self.ratio)));
        }
        if !(self.horizon >= self.base * self.ratio.powi(3)) {
            return Err(Error::InvalidGrid(format!(
                "horizon {} must be at least base*ratio^3 = {}",
                self.horizon,
                self.base * self.ratio.powi(3)
            )));
        }
        Ok(())
    }

    /// Builds the grid, stopping at `min(horizon, cap)`; `cap` is normally
    /// the truncation radius of the distribution being measured.
    pub fn build(&self, cap: f64) -> Result<GeometricGrid> {
        self.validate()?;
        GeometricGrid::new(self.base, self.ratio, self.horizon.min(cap))
    }
}

/// Radii `r_i = base·ratio^i`, `0 ≤ i ≤ m`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricGrid {
    base: f64,
    ln_ratio: f64,
    radii: Vec<f64>,
}

impl GeometricGrid {
    pub fn new(base: f64, ratio: f64, horizon: f64) -> Result<Self> {
        if !(base > 0.0 && ratio > 1.0 && horizon.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "need base > 0, ratio > 1 and a finite horizon (got {base}, {ratio}, {horizon})"
            )));
        }
        if horizon < base * ratio {
            return Err(Error::InvalidGrid(format!(
                "horizon {horizon} leaves fewer than two grid radii"
            )));
        }
        let ln_ratio = ratio.ln();
        let m = ((horizon / base).ln() / ln_ratio + 1e-9).floor() as usize;
        let mut radii: Vec<f64> = (0..=m)
            .map(|i| base * (i as f64 * ln_ratio).exp())
            .collect();
        while radii.len() > 2 && *radii.last().expect("nonempty") > horizon {
            radii.pop();
        }
        Ok(GeometricGrid {
            base,
            ln_ratio,
            radii,
        })
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn ln_ratio(&self) -> f64 {
        self.ln_ratio
    }

    pub fn horizon(&self) -> f64 {
        *self.radii.last().expect("grid has at least two radii")
    }

    /// Span of the grid in decades.
    pub fn decades(&self) -> f64 {
        (self.horizon() / self.base).log10()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_nests_integer_powers_of_e() {
        let g = GridSpec::default().build(f64::INFINITY).unwrap();
        assert_eq!(g.radii().len(), 111);
        for n in 0..=13 {
            let r = g.radii()[8 * n];
            assert!((r / (n as f64).exp() - 1.0).abs() < 1e-13);
        }
        assert!(g.horizon() <= 1e6);
    }

    #[test]
    fn grid_is_capped_by_truncation() {
        let g = GridSpec::default().build(5e4).unwrap();
        assert!(g.horizon() <= 5e4 && g.horizon() * (0.125f64).exp() > 5e4);
    }

    #[test]
    fn rejects_bad_specs() {
        let bad = GridSpec { ratio: 1.0, ..GridSpec::default() };
        assert!(bad.validate().is_err());
        let short = GridSpec { horizon: 1.1, ..GridSpec::default() };
        assert!(short.validate().is_err());
    }
}
