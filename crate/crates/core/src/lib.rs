//! # expwidth
//!
//! Computational companion to width-based completeness criteria for
//! exponential systems `w^p e^{zw}` with exponents drawn from a point
//! distribution `Z` on the complex plane.
//!
//! The crate is organized in four layers:
//!
//! - [`divisor`]: point distributions with multiplicity (divisors), their
//!   counting measure, rotations, scalings, unions, differences and sector
//!   parts, plus deterministic generators.
//! - [`logmeasure`]: right/left logarithmic measures, the logarithmic
//!   submeasure, interval-measure tables on geometric grids, the four
//!   logarithmic block densities, submeasure-axiom checks and sufficient
//!   conditions for finite Redheffer density.
//! - [`convexgeom`]: exact support-function geometry of convex bodies
//!   (polygons, disks, strips): width in a direction, breadth, diameter.
//! - [`criteria`]: three-valued completeness verdicts for the width,
//!   sharp-width, breadth and diameter criteria, with numeric margins and
//!   convergence diagnostics.
//!
//! Every quantity in this domain is a limit `r → ∞`. Distributions are
//! materialized up to a truncation radius and all estimators carry
//! diagnostics describing how settled the tail looks at that horizon.
//!
//! ```
//! use expwidth::divisor::{GeneratorSpec, PointDistribution};
//! use expwidth::logmeasure::right_log_measure;
//!
//! let z = PointDistribution::from_generator(&GeneratorSpec::parse("arith n=1000 step=1").unwrap())
//!     .unwrap();
//! let ell = right_log_measure(&z, 10.0, 100.0).unwrap();
//! assert!((ell - 10f64.ln()).abs() < 0.06);
//! ```

pub mod angle;
pub mod convexgeom;
pub mod criteria;
pub mod divisor;
mod error;
pub mod exec;
pub mod format;
pub mod logmeasure;

pub use error::{Error, Result};
pub use exec::Execution;
