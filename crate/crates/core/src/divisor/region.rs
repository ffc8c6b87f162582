use crate::angle::wrap_pi;
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

/// Regions queried by the counting measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    /// `|z| ≤ radius`.
    ClosedDisk { radius: f64 },
    /// Half-open annulus `inner < |z| ≤ outer`.
    Annulus { inner: f64, outer: f64 },
    /// Open sector `|arg z − direction| < half_angle`, optionally cut to
    /// `inner < |z| ≤ outer`. The origin never belongs to a sector.
    Sector {
        direction: f64,
        half_angle: f64,
        inner: Option<f64>,
        outer: Option<f64>,
    },
}

impl Region {
    pub fn disk(radius: f64) -> Self {
        Region::ClosedDisk { radius }
    }

    pub fn annulus(inner: f64, outer: f64) -> Result<Self> {
        if !(inner >= 0.0 && inner < outer) {
            return Err(Error::InvalidInterval { r: inner, big_r: outer });
        }
        Ok(Region::Annulus { inner, outer })
    }

    /// Unbounded sector with the half-angle restricted to `(0, π/2]`.
    pub fn sector(direction: f64, half_angle: f64) -> Result<Self> {
        check_half_angle(half_angle)?;
        Ok(Region::Sector {
            direction,
            half_angle,
            inner: None,
            outer: None,
        })
    }

    pub fn contains(&self, z: Complex64) -> bool {
        let m = z.norm();
        match *self {
            Region::ClosedDisk { radius } => m <= radius,
            Region::Annulus { inner, outer } => inner < m && m <= outer,
            Region::Sector {
                direction,
                half_angle,
                inner,
                outer,
            } => {
                if m == 0.0 {
                    return false;
                }
                if inner.is_some_and(|r| m <= r) || outer.is_some_and(|r| m > r) {
                    return false;
                }
                in_sector(z, direction, half_angle)
            }
        }
    }

    /// Largest modulus the region reaches (`+∞` for unbounded sectors).
    pub fn outer_radius(&self) -> f64 {
        match *self {
            Region::ClosedDisk { radius } => radius,
            Region::Annulus { outer, .. } => outer,
            Region::Sector { outer, .. } => outer.unwrap_or(f64::INFINITY),
        }
    }

    /// The image of the region under `z ↦ e^{iθ} z`.
    pub fn rotate(&self, theta: f64) -> Self {
        match *self {
            Region::Sector {
                direction,
                half_angle,
                inner,
                outer,
            } => Region::Sector {
                direction: direction + theta,
                half_angle,
                inner,
                outer,
            },
            other => other,
        }
    }
}

pub(crate) fn check_half_angle(a: f64) -> Result<()> {
    if a > 0.0 && a <= FRAC_PI_2 {
        Ok(())
    } else {
        Err(Error::InvalidHalfAngle(a))
    }
}

/// `|arg z − θ| < a` with the difference reduced into `(−π, π]`.
pub(crate) fn in_sector(z: Complex64, theta: f64, a: f64) -> bool {
    if z.re == 0.0 && z.im == 0.0 {
        return false;
    }
    wrap_pi(z.arg() - theta).abs() < a
}
