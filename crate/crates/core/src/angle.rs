//! Directions and angle parsing.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;

use crate::{Error, Result};

/// Unit vector `e^{iθ}`.
///
/// Multiples of `π/2` (up to a few ulps) map to exactly `±1`, `±i`, so
/// quarter turns keep axis-aligned points on the axes.
pub fn unit_direction(theta: f64) -> Complex64 {
    let quarters = theta / FRAC_PI_2;
    let k = quarters.round();
    if (quarters - k).abs() <= 8.0 * f64::EPSILON * k.abs().max(1.0) {
        return match (k as i64).rem_euclid(4) {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::new(theta.cos(), theta.sin())
}

/// Reduces `x` into `(-π, π]`.
pub fn wrap_pi(x: f64) -> f64 {
    let mut y = x.rem_euclid(TAU);
    if y > PI {
        y -= TAU;
    }
    y
}

/// Parses angles and real numbers such as `0.3`, `pi`, `π/2`, `-3pi/4`,
/// `2*pi`, `1e6`.
pub fn parse_angle(s: &str) -> Result<f64> {
    let bad = || Error::InvalidParameter(format!("cannot parse number `{s}`"));
    let t: String = s.trim().replace('π', "pi").replace(' ', "");
    if t.is_empty() {
        return Err(bad());
    }
    if let Ok(v) = t.parse::<f64>() {
        return Ok(v);
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t.as_str(), None),
    };
    let num = if let Some(coef) = num.strip_suffix("pi") {
        let coef = coef.strip_suffix('*').unwrap_or(coef);
        let c = match coef {
            "" | "+" => 1.0,
            "-" => -1.0,
            c => c.parse::<f64>().map_err(|_| bad())?,
        };
        c * PI
    } else {
        num.parse::<f64>().map_err(|_| bad())?
    };
    match den {
        None => Ok(num),
        Some(d) => {
            let d: f64 = d.parse().map_err(|_| bad())?;
            if d == 0.0 {
                return Err(bad());
            }
            Ok(num / d)
        }
    }
}
