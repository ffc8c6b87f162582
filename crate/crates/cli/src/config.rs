//! Run configuration: a TOML file, overridden field by field by flags.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use expwidth::criteria::CriteriaParams;
use expwidth::logmeasure::{DensityParams, GridSpec};
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Distribution files; all inputs and generators are merged.
    pub inputs: Vec<PathBuf>,
    pub generators: Vec<String>,
    pub grid: GridConfig,
    pub estimation: EstimationConfig,
    pub theta_steps: usize,
    pub out: Option<PathBuf>,
    /// Also write SVG plots next to the CSV files.
    pub svg: bool,
}

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct GridConfig {
    pub base: f64,
    pub ratio: f64,
    pub horizon: f64,
}

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct EstimationConfig {
    pub tail_fraction: f64,
    pub tolerance: f64,
    pub trend_tolerance: f64,
    pub divergence_margin: f64,
    pub bounded_margin: f64,
    pub upper_density_growth_tolerance: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            inputs: Vec::new(),
            generators: Vec::new(),
            grid: GridConfig::default(),
            estimation: EstimationConfig::default(),
            theta_steps: 720,
            out: None,
            svg: true,
        }
    }
}

impl Default for GridConfig {
    fn default() -> Self {
        let g = GridSpec::default();
        GridConfig {
            base: g.base,
            ratio: g.ratio,
            horizon: g.horizon,
        }
    }
}

impl Default for EstimationConfig {
    fn default() -> Self {
        let c = CriteriaParams::default();
        EstimationConfig {
            tail_fraction: c.density.tail_fraction,
            tolerance: c.density.tolerance,
            trend_tolerance: c.density.trend_tolerance,
            divergence_margin: c.growth.divergence_margin,
            bounded_margin: c.growth.bounded_margin,
            upper_density_growth_tolerance: c.upper_density_growth_tolerance,
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.grid;
        if !(g.ratio > 1.0) {
            bail!("grid ratio must be > 1, got {}", g.ratio);
        }
        if !(g.base > 0.0) {
            bail!("grid base must be > 0, got {}", g.base);
        }
        if !(g.horizon >= g.base * g.ratio.powi(3)) {
            bail!("horizon {} must be at least base·ratio³ = {}", g.horizon, g.base * g.ratio.powi(3));
        }
        if !(self.estimation.tolerance > 0.0) {
            bail!("tolerance must be > 0");
        }
        if self.theta_steps == 0 {
            bail!("theta steps must be at least 1");
        }
        Ok(())
    }

    pub fn grid_spec(&self) -> GridSpec {
        GridSpec {
            base: self.grid.base,
            ratio: self.grid.ratio,
            horizon: self.grid.horizon,
        }
    }

    pub fn density_params(&self) -> DensityParams {
        DensityParams {
            tail_fraction: self.estimation.tail_fraction,
            tolerance: self.estimation.tolerance,
            trend_tolerance: self.estimation.trend_tolerance,
        }
    }

    pub fn criteria_params(&self) -> CriteriaParams {
        let mut p = CriteriaParams {
            grid: self.grid_spec(),
            density: self.density_params(),
            theta_steps: self.theta_steps,
            upper_density_growth_tolerance: self.estimation.upper_density_growth_tolerance,
            ..CriteriaParams::default()
        };
        p.growth.divergence_margin = self.estimation.divergence_margin;
        p.growth.bounded_margin = self.estimation.bounded_margin;
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_files_keep_defaults() {
        let c: RunConfig = toml::from_str("generators = [\"arith n=10 step=1\"]\n[grid]\nhorizon = 1e4\n").unwrap();
        assert_eq!(c.grid.horizon, 1e4);
        assert_eq!(c.grid.ratio, GridSpec::default().ratio);
        assert_eq!(c.theta_steps, 720);
        c.validate().unwrap();
    }

    #[test]
    fn rejects_unknown_keys_and_bad_grids() {
        assert!(toml::from_str::<RunConfig>("horizon = 5").is_err());
        let c: RunConfig = toml::from_str("[grid]\nratio = 1.0\n").unwrap();
        assert!(c.validate().is_err());
        let c: RunConfig = toml::from_str("[grid]\nbase = 1\nratio = 2\nhorizon = 7\n").unwrap();
        assert!(c.validate().is_err());
    }
}
