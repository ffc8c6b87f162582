use std::fmt;

use crate::divisor::UpperDensity;
use crate::format::sig12;
use crate::logmeasure::{DensityReport, GrowthDiagnostics};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Complete,
    Incomplete,
    Inconclusive,
    /// The criterion is one-directional and did not fire.
    NoConclusion,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Complete => "complete",
            Verdict::Incomplete => "incomplete",
            Verdict::Inconclusive => "inconclusive",
            Verdict::NoConclusion => "no-conclusion",
        }
    }

    pub fn is_conclusive(self) -> bool {
        matches!(self, Verdict::Complete | Verdict::Incomplete)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    Theorem1,
    Theorem2,
    Breadth,
    Diameter,
}

impl Criterion {
    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::Theorem1 => "theorem1",
            Criterion::Theorem2 => "theorem2",
            Criterion::Breadth => "breadth",
            Criterion::Diameter => "diameter",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How the side condition of the second criterion was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RedhefferStatus {
    AssertedByUser,
    HeuristicallyConfirmed,
    Unknown,
}

impl RedhefferStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RedhefferStatus::AssertedByUser => "asserted-by-user",
            RedhefferStatus::HeuristicallyConfirmed => "heuristically-confirmed",
            RedhefferStatus::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompletenessVerdict {
    pub verdict: Verdict,
    pub criterion: Criterion,
    /// The statement certified (or the reason none is).
    pub clause: String,
    pub b: f64,
    /// Direction of the verdict; for the sweeps, the direction that decided it.
    pub theta: f64,
    /// `b/2π`.
    pub threshold: f64,
    pub margin: f64,
    pub density: Option<DensityReport>,
    pub upper_density: Option<UpperDensity>,
    /// Continuous and ladder detectors of the second criterion.
    pub growth: Option<(GrowthDiagnostics, GrowthDiagnostics)>,
    pub redheffer: Option<RedhefferStatus>,
    pub flags: Vec<String>,
    pub reason: Option<String>,
}

pub const CSV_HEADER: &str = "theorem,clause,b,theta,verdict,margin,flags";

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl CompletenessVerdict {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.criterion,
            csv_field(&self.clause),
            sig12(self.b),
            sig12(self.theta),
            self.verdict,
            sig12(self.margin),
            csv_field(&self.flags.join(";"))
        )
    }

    /// Human-readable multi-line report.
    pub fn report(&self) -> String {
        let mut out = format!(
            "{} b={} theta={}: {}\n  clause: {}\n  threshold b/2pi = {}, margin = {}\n",
            self.criterion,
            sig12(self.b),
            sig12(self.theta),
            self.verdict,
            self.clause,
            sig12(self.threshold),
            sig12(self.margin)
        );
        if let Some(d) = &self.density {
            out += &format!(
                "  ln-dens: upper={} lower={} inf={} b-variant={} spread={} trend={} converged={}\n",
                sig12(d.upper),
                sig12(d.lower),
                sig12(d.infimum),
                sig12(d.bounded_growth),
                sig12(d.relative_spread),
                sig12(d.tail_slope),
                d.converged
            );
        }
        if let Some(u) = &self.upper_density {
            out += &format!(
                "  upper density: {} (last-decade growth {}, divergent={})\n",
                sig12(u.estimate),
                sig12(u.last_decade_growth),
                u.divergent
            );
        }
        if let Some((cont, ladder)) = &self.growth {
            for (name, g) in [("sup", cont), ("ladder", ladder)] {
                let per: Vec<String> = g.per_decade.iter().map(|&x| sig12(x)).collect();
                out += &format!("  {name} growth per decade: [{}] -> {:?}\n", per.join(", "), g.state);
            }
        }
        if let Some(r) = self.redheffer {
            out += &format!("  redheffer: {}\n", r.as_str());
        }
        if !self.flags.is_empty() {
            out += &format!("  flags: {}\n", self.flags.join(";"));
        }
        if let Some(r) = &self.reason {
            out += &format!("  reason: {r}\n");
        }
        out
    }
}

/// CSV document with header for a list of verdicts.
pub fn verdicts_csv(verdicts: &[CompletenessVerdict]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for v in verdicts {
        out += &v.csv_row();
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_fields_are_quoted_when_needed() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a, b"), "\"a, b\"");
        assert_eq!(csv_field("say \"x\", y"), "\"say \"\"x\"\", y\"");
    }
}
