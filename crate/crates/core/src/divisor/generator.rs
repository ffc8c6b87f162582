//! Deterministic generators for the distributions used throughout the
//! examples: progressions on a ray, geometric progressions, lattices and
//! random sector clouds.

use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp};

use super::region::check_half_angle;
use crate::angle::{parse_angle, unit_direction};
use crate::{Error, Result};

/// Cap on materialized points so a typo in a spec cannot exhaust memory.
pub const MAX_POINTS: usize = 50_000_000;

/// Generator descriptor. Its textual form is `kind key=value ...`.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    /// `{k·step·e^{i·dir} : 1 ≤ k ≤ n}`, plus the negatives when `sym`.
    Arith {
        n: usize,
        step: f64,
        dir: f64,
        sym: bool,
    },
    /// `{first·ratio^k·e^{i·dir} : 0 ≤ k < n}`.
    Geom {
        n: usize,
        first: f64,
        ratio: f64,
        dir: f64,
    },
    /// Nonzero points of `spacing·e^{i·rot}·(ℤ + iℤ)` with modulus at most `radius`.
    Lattice { spacing: f64, rot: f64, radius: f64 },
    /// Radii from a Poisson process of rate `density` on `(0, horizon]`,
    /// arguments uniform in `(θ − a, θ + a)`.
    Sector {
        theta: f64,
        a: f64,
        density: f64,
        horizon: f64,
        seed: u64,
    },
}

impl GeneratorSpec {
    /// Parses `arith n=1000 step=1 dir=pi/2`, `geom n=20 first=1 ratio=2`,
    /// `lattice spacing=1 rot=0 radius=100`,
    /// `sector theta=0 a=pi/4 density=1 horizon=1e4 seed=7`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace();
        let kind = words
            .next()
            .ok_or_else(|| Error::BadSpec("empty spec".into()))?;
        let mut kv = Vec::new();
        for w in words {
            let (k, v) = w
                .split_once('=')
                .ok_or_else(|| Error::BadSpec(format!("expected key=value, got `{w}`")))?;
            kv.push((k.trim().replace('θ', "theta"), v.trim().to_string()));
        }
        let args = Args { kind, kv };
        let spec = match kind {
            "arith" => GeneratorSpec::Arith {
                n: args.count("n", None)?,
                step: args.num("step", Some(1.0))?,
                dir: args.num("dir", Some(0.0))?,
                sym: args.flag("sym")?,
            },
            "geom" => GeneratorSpec::Geom {
                n: args.count("n", None)?,
                first: args.num("first", Some(1.0))?,
                ratio: args.num("ratio", Some(2.0))?,
                dir: args.num("dir", Some(0.0))?,
            },
            "lattice" => GeneratorSpec::Lattice {
                spacing: args.num("spacing", Some(1.0))?,
                rot: args.num("rot", Some(0.0))?,
                radius: args.num("radius", None)?,
            },
            "sector" => GeneratorSpec::Sector {
                theta: args.num("theta", Some(0.0))?,
                a: args.num("a", None)?,
                density: args.num("density", Some(1.0))?,
                horizon: args.num("horizon", None)?,
                seed: args.count("seed", Some(0))? as u64,
            },
            other => return Err(Error::BadSpec(format!("unknown generator `{other}`"))),
        };
        args.reject_unknown(spec.keys())?;
        spec.validate()?;
        Ok(spec)
    }

    fn keys(&self) -> &'static [&'static str] {
        match self {
            GeneratorSpec::Arith { .. } => &["n", "step", "dir", "sym"],
            GeneratorSpec::Geom { .. } => &["n", "first", "ratio", "dir"],
            GeneratorSpec::Lattice { .. } => &["spacing", "rot", "radius"],
            GeneratorSpec::Sector { .. } => &["theta", "a", "density", "horizon", "seed"],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::BadSpec(m.to_string()));
        match *self {
            GeneratorSpec::Arith { n, step, dir, .. } => {
                if !(step.is_finite() && step != 0.0 && dir.is_finite()) {
                    return bad("arith needs a finite nonzero step and finite dir");
                }
                if n > MAX_POINTS {
                    return bad("too many points");
                }
            }
            GeneratorSpec::Geom {
                n,
                first,
                ratio,
                dir,
            } => {
                if !(first.is_finite() && first > 0.0 && ratio > 1.0 && dir.is_finite()) {
                    return bad("geom needs first > 0 and ratio > 1");
                }
                if n > MAX_POINTS || (first.ln() + (n.max(1) - 1) as f64 * ratio.ln()) > 700.0 {
                    return bad("geom progression overflows");
                }
            }
            GeneratorSpec::Lattice {
                spacing,
                rot,
                radius,
            } => {
                if !(spacing > 0.0 && radius.is_finite() && radius > 0.0 && rot.is_finite()) {
                    return bad("lattice needs spacing > 0 and a finite radius > 0");
                }
                let approx = std::f64::consts::PI * (radius / spacing + 1.5).powi(2);
                if approx > MAX_POINTS as f64 {
                    return bad("too many lattice points");
                }
            }
            GeneratorSpec::Sector {
                theta,
                a,
                density,
                horizon,
                ..
            } => {
                check_half_angle(a).map_err(|_| Error::BadSpec(format!("sector half-angle {a} not in (0, pi/2]")))?;
                if !(theta.is_finite() && density > 0.0 && horizon > 0.0 && horizon.is_finite()) {
                    return bad("sector needs density > 0 and a finite horizon > 0");
                }
                if density * horizon > MAX_POINTS as f64 {
                    return bad("too many points");
                }
            }
        }
        Ok(())
    }

    /// Radius within which the generated set coincides with the infinite
    /// object the generator describes.
    pub fn truncation_radius(&self) -> f64 {
        match *self {
            GeneratorSpec::Arith { n, step, .. } => n as f64 * step.abs(),
            GeneratorSpec::Geom { n, first, ratio, .. } => {
                if n == 0 {
                    first
                } else {
                    first * ratio.powi(n as i32 - 1)
                }
            }
            GeneratorSpec::Lattice { radius, .. } => radius,
            GeneratorSpec::Sector { horizon, .. } => horizon,
        }
    }

    /// Materializes the points (with repetition where the generator repeats).
    pub fn points(&self) -> Vec<Complex64> {
        match *self {
            GeneratorSpec::Arith { n, step, dir, sym } => {
                let u = unit_direction(dir);
                let mut out = Vec::with_capacity(if sym { 2 * n } else { n });
                for k in 1..=n {
                    let z = u * (k as f64 * step);
                    out.push(z);
                    if sym {
                        out.push(-z);
                    }
                }
                out
            }
            GeneratorSpec::Geom {
                n,
                first,
                ratio,
                dir,
            } => {
                let u = unit_direction(dir);
                (0..n).map(|k| u * (first * ratio.powi(k as i32))).collect()
            }
            GeneratorSpec::Lattice {
                spacing,
                rot,
                radius,
            } => {
                let u = unit_direction(rot);
                let kmax = (radius / spacing).floor() as i64;
                let mut out = Vec::new();
                for j in -kmax..=kmax {
                    for k in -kmax..=kmax {
                        if j == 0 && k == 0 {
                            continue;
                        }
                        let w = Complex64::new(j as f64 * spacing, k as f64 * spacing);
                        if w.norm() <= radius {
                            out.push(u * w);
                        }
                    }
                }
                out
            }
            GeneratorSpec::Sector {
                theta,
                a,
                density,
                horizon,
                seed,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let gaps = Exp::new(density).expect("density validated positive");
                let mut out = Vec::new();
                let mut r = 0.0;
                loop {
                    r += gaps.sample(&mut rng);
                    if r > horizon {
                        break;
                    }
                    let phi = theta + rng.random_range(-a..a);
                    out.push(Complex64::from_polar(r, phi));
                }
                out
            }
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorSpec::Arith { n, step, dir, sym } => {
                write!(f, "arith n={n} step={step} dir={dir}")?;
                if sym {
                    write!(f, " sym=true")?;
                }
                Ok(())
            }
            GeneratorSpec::Geom {
                n,
                first,
                ratio,
                dir,
            } => write!(f, "geom n={n} first={first} ratio={ratio} dir={dir}"),
            GeneratorSpec::Lattice {
                spacing,
                rot,
                radius,
            } => write!(f, "lattice spacing={spacing} rot={rot} radius={radius}"),
            GeneratorSpec::Sector {
                theta,
                a,
                density,
                horizon,
                seed,
            } => write!(
                f,
                "sector theta={theta} a={a} density={density} horizon={horizon} seed={seed}"
            ),
        }
    }
}

struct Args<'a> {
    kind: &'a str,
    kv: Vec<(String, String)>,
}

impl Args<'_> {
    fn get(&self, key: &str) -> Option<&str> {
        self.kv.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn num(&self, key: &str, default: Option<f64>) -> Result<f64> {
        match (self.get(key), default) {
            (Some(v), _) => parse_angle(&v.replace("10^", "1e"))
                .map_err(|_| Error::BadSpec(format!("{}: bad value for {key}: `{v}`", self.kind))),
            (None, Some(d)) => Ok(d),
            (None, None) => Err(Error::BadSpec(format!("{}: missing `{key}`", self.kind))),
        }
    }

    fn count(&self, key: &str, default: Option<usize>) -> Result<usize> {
        let v = self.num(key, default.map(|d| d as f64))?;
        if v < 0.0 || v.fract() != 0.0 || v > u64::MAX as f64 {
            return Err(Error::BadSpec(format!("{}: `{key}` must be a nonnegative integer", self.kind)));
        }
        Ok(v as usize)
    }

    fn flag(&self, key: &str) -> Result<bool> {
        match self.get(key) {
            None => Ok(false),
            Some("true" | "1" | "yes") => Ok(true),
            Some("false" | "0" | "no") => Ok(false),
            Some(v) => Err(Error::BadSpec(format!("{}: bad flag {key}={v}", self.kind))),
        }
    }

    fn reject_unknown(&self, known: &[&str]) -> Result<()> {
        for (k, _) in &self.kv {
            if !known.contains(&k.as_str()) {
                return Err(Error::BadSpec(format!("{}: unknown key `{k}`", self.kind)));
            }
        }
        Ok(())
    }
}
