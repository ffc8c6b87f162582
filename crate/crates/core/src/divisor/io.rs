//! Text format for distributions.
//!
//! One entry per line: `re im [mult]` (multiplicity defaults to 1). `#`
//! starts a comment. Two comment directives are understood:
//!
//! ```text
//! # generator: arith n=1000 step=1 dir=0
//! # truncation_radius: 1000
//! ```
//!
//! A `generator` directive is informational (the listed points are
//! authoritative); `truncation_radius` declares the completeness horizon.
//! Writers use shortest round-trip float formatting, so writing and reading
//! back reproduces the distribution exactly.

use std::fmt::Write as _;
use std::io::{BufRead, Write};

use num_complex::Complex64;

use super::{GeneratorSpec, PointDistribution, Source};
use crate::{Error, Result};

pub fn parse_distribution(text: &str) -> Result<PointDistribution> {
    read_distribution(text.as_bytes())
}

pub fn read_distribution<R: BufRead>(reader: R) -> Result<PointDistribution> {
    let mut entries = Vec::new();
    let mut truncation = None;
    let mut generator = None;
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let (data, comment) = match line.split_once('#') {
            Some((d, c)) => (d, Some(c.trim())),
            None => (line.as_str(), None),
        };
        if let Some(c) = comment {
            if let Some(v) = c.strip_prefix("truncation_radius:") {
                let r: f64 = v.trim().parse().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("bad truncation radius `{}`", v.trim()),
                })?;
                truncation = Some(r);
            } else if let Some(v) = c.strip_prefix("generator:") {
                generator = GeneratorSpec::parse(v.trim()).ok();
            }
        }
        let fields: Vec<&str> = data.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if fields.len() < 2 || fields.len() > 3 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected `re im [mult]`, got {} fields", fields.len()),
            });
        }
        let num = |s: &str| -> Result<f64> {
            s.parse::<f64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("bad number `{s}`"),
            })
        };
        let z = Complex64::new(num(fields[0])?, num(fields[1])?);
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Parse {
                line: lineno,
                message: "point coordinates must be finite".into(),
            });
        }
        let mult = match fields.get(2) {
            None => 1,
            Some(m) => {
                let lower = m.to_ascii_lowercase();
                if matches!(lower.as_str(), "inf" | "+inf" | "infinity" | "∞") {
                    return Err(Error::InfiniteMultiplicity { line: lineno });
                }
                match m.parse::<u64>() {
                    Ok(0) | Err(_) => {
                        return Err(Error::Parse {
                            line: lineno,
                            message: format!("multiplicity `{m}` is not a positive integer"),
                        })
                    }
                    Ok(v) => v,
                }
            }
        };
        entries.push((z, mult));
    }
    let mut dist = PointDistribution::new(entries)?;
    if let Some(r) = truncation {
        dist = dist.with_truncation_radius(r)?;
    }
    if let Some(g) = generator {
        dist.source = Source::Generator(g);
    }
    Ok(dist)
}

pub fn format_distribution(z: &PointDistribution) -> String {
    let mut s = String::new();
    if let Source::Generator(g) = z.source() {
        let _ = writeln!(s, "# generator: {g}");
    }
    if z.truncation_radius().is_finite() {
        let _ = writeln!(s, "# truncation_radius: {}", z.truncation_radius());
    }
    let _ = writeln!(s, "# re im mult");
    for &(p, m) in z.entries() {
        let _ = writeln!(s, "{} {} {}", p.re, p.im, m);
    }
    s
}

pub fn write_distribution<W: Write>(z: &PointDistribution, mut w: W) -> Result<()> {
    w.write_all(format_distribution(z).as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_entries_and_directives() {
        let text = "# a comment\n1 0\n1 0 2  # trailing\n\n-0.5 2.25 4\n# truncation_radius: 10\n";
        let z = parse_distribution(text).unwrap();
        assert_eq!(z.multiplicity(Complex64::new(1.0, 0.0)), 3);
        assert_eq!(z.multiplicity(Complex64::new(-0.5, 2.25)), 4);
        assert_eq!(z.truncation_radius(), 10.0);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(parse_distribution("1 2 inf"), Err(Error::InfiniteMultiplicity { line: 1 })));
        assert!(matches!(parse_distribution("1 2 0"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_distribution("\n1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_distribution("1 x"), Err(Error::Parse { .. })));
        assert!(parse_distribution("100 0\n# truncation_radius: 10").is_err());
    }

    #[test]
    fn generator_output_round_trips() {
        let spec = GeneratorSpec::parse("sector theta=0.3 a=pi/4 density=2 horizon=50 seed=3").unwrap();
        let z = PointDistribution::from_generator(&spec).unwrap();
        let back = parse_distribution(&format_distribution(&z)).unwrap();
        assert_eq!(back, z);
    }
}
