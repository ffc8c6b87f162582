use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use expwidth::convexgeom::{parse_body, ConvexBody};
use expwidth::criteria::{
    breadth_criterion, diameter_sufficient, theorem1_verdict, theorem2_verdict, verdicts_csv, Criterion, Prepared,
    RedhefferMode,
};
use expwidth::divisor::io::{format_distribution, parse_distribution};
use expwidth::divisor::{GeneratorSpec, PointDistribution};
use expwidth::format::sig12;
use expwidth::logmeasure::{
    density_report, interval_table, left_log_measure, log_submeasure, right_log_measure, DensityReport,
    IntervalMeasureTable, MeasureKind,
};
use expwidth::Execution;
use num_complex::Complex64;

use crate::config::RunConfig;
use crate::output::Sink;
use crate::svg::{line_plot, series_csv, Series};

fn load(cfg: &RunConfig) -> Result<PointDistribution> {
    let mut parts = Vec::new();
    for path in &cfg.inputs {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        parts.push(parse_distribution(&text).with_context(|| format!("parsing {}", path.display()))?);
    }
    for spec in &cfg.generators {
        let spec = GeneratorSpec::parse(spec)?;
        parts.push(PointDistribution::from_generator(&spec)?);
    }
    let mut iter = parts.into_iter();
    let Some(first) = iter.next() else {
        bail!("no distribution given: use --input FILE or --gen SPEC");
    };
    Ok(iter.fold(first, |acc, z| acc.union(&z)))
}

fn sink(cfg: &RunConfig) -> Result<Sink> {
    Sink::new(cfg.out.clone())
}

pub fn generate(cfg: &RunConfig, spec: &str) -> Result<()> {
    let spec = GeneratorSpec::parse(spec)?;
    let z = PointDistribution::from_generator(&spec)?;
    sink(cfg)?.primary("distribution.txt", &format_distribution(&z))
}

pub fn measure(
    cfg: &RunConfig,
    from: Option<f64>,
    to: Option<f64>,
    rotation: f64,
    table: bool,
    kind: MeasureKind,
) -> Result<()> {
    let z = load(cfg)?.rotate(rotation);
    let out = sink(cfg)?;
    if table {
        let t = interval_table(&z, &cfg.grid_spec(), kind, 0.0, Execution::default())?;
        return out.primary("table.csv", &t.to_csv());
    }
    let (Some(r), Some(big_r)) = (from, to) else {
        bail!("measure needs --from R1 --to R2, or --table");
    };
    let csv = format!(
        "r,R,right,left,submeasure\n{},{},{},{},{}\n",
        sig12(r),
        sig12(big_r),
        sig12(right_log_measure(&z, r, big_r)?),
        sig12(left_log_measure(&z, r, big_r)?),
        sig12(log_submeasure(&z, r, big_r)?)
    );
    out.primary("measure.csv", &csv)
}

fn density_csv(d: &DensityReport) -> String {
    let mut out = String::from("quantity,value\n");
    let rows: [(&str, String); 11] = [
        ("upper", sig12(d.upper)),
        ("lower", sig12(d.lower)),
        ("infimum", sig12(d.infimum)),
        ("bounded_growth", sig12(d.bounded_growth)),
        ("spread", sig12(d.spread)),
        ("relative_spread", sig12(d.relative_spread)),
        ("tail_slope", sig12(d.tail_slope)),
        ("tail_start", sig12(d.tail_start)),
        ("horizon", sig12(d.horizon)),
        ("converged", d.converged.to_string()),
        ("declared", d.declared.map(sig12).unwrap_or_else(|| "none".to_string())),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "{k},{v}");
    }
    out
}

/// `L(r, a·r)` against `ln r` for block factors `a = e, e², e⁴`.
fn measure_curves(table: &IntervalMeasureTable) -> Vec<Series> {
    let radii = table.radii();
    let ln_q = (radii[1] / radii[0]).ln();
    [1.0f64, 2.0, 4.0]
        .iter()
        .filter_map(|&m| {
            let k = (m / ln_q).round() as usize;
            (k >= 1 && k < radii.len()).then(|| Series {
                label: format!("a=e^{m}"),
                points: (0..radii.len() - k).map(|i| (radii[i].ln(), table.get(i, i + k))).collect(),
            })
        })
        .collect()
}

pub fn density(cfg: &RunConfig, theta: f64) -> Result<()> {
    let z = load(cfg)?;
    let table = interval_table(&z, &cfg.grid_spec(), MeasureKind::Submeasure, FRAC_PI_2 - theta, Execution::default())?;
    let d = density_report(&table, &cfg.density_params())?;
    let out = sink(cfg)?;
    out.primary("density.csv", &density_csv(&d))?;
    let curve = vec![Series {
        label: "est(a)/ln a".into(),
        points: d.curve.iter().map(|p| (p.factor.ln(), p.normalized)).collect(),
    }];
    let mut block = String::from("a,estimate,normalized\n");
    for p in &d.curve {
        let _ = writeln!(block, "{},{},{}", sig12(p.factor), sig12(p.estimate), sig12(p.normalized));
    }
    out.extra("block_curve.csv", &block)?;
    let curves = measure_curves(&table);
    out.extra("measure_curves.csv", &series_csv(&curves, "ln_r", "L"))?;
    if cfg.svg {
        out.extra("density_curve.svg", &line_plot("block density curve", "ln a", "est(a) / ln a", &curve))?;
        out.extra("measure_curves.svg", &line_plot("L(r, a r)", "ln r", "L(r, a r)", &curves))?;
    }
    if out.has_dir() {
        println!(
            "upper={} lower={} inf={} b-variant={} converged={}",
            sig12(d.upper),
            sig12(d.lower),
            sig12(d.infimum),
            sig12(d.bounded_growth),
            d.converged
        );
    }
    Ok(())
}

fn inline_body(words: &[String]) -> Result<ConvexBody> {
    let (kind, rest) = words.split_first().context("no body given")?;
    let nums = rest
        .iter()
        .map(|w| expwidth::angle::parse_angle(w))
        .collect::<expwidth::Result<Vec<f64>>>()?;
    Ok(match (kind.as_str(), nums.len()) {
        ("disk", 3) => ConvexBody::disk(Complex64::new(nums[0], nums[1]), nums[2])?,
        ("strip", 3) => ConvexBody::strip(nums[0], nums[1], nums[2])?,
        ("polygon" | "points", n) if n >= 2 && n % 2 == 0 => {
            let pts: Vec<Complex64> = nums.chunks(2).map(|c| Complex64::new(c[0], c[1])).collect();
            ConvexBody::from_points(&pts)?
        }
        _ => bail!("expected `disk X Y R`, `strip PHI B OFFSET` or `polygon X1 Y1 ...`"),
    })
}

pub fn geom(cfg: &RunConfig, words: &[String], file: Option<&Path>, thetas: &[f64]) -> Result<()> {
    let body = match (file, words.is_empty()) {
        (Some(p), true) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            parse_body(&text)?
        }
        (None, false) => inline_body(words)?,
        _ => bail!("give the body either inline or with --body-file"),
    };
    let mut csv = String::from("quantity,theta,value\n");
    for &t in thetas {
        let _ = writeln!(csv, "width,{},{}", sig12(t), sig12(body.width(t)));
    }
    let _ = writeln!(csv, "breadth,,{}", sig12(body.breadth()));
    let _ = writeln!(csv, "diameter,,{}", sig12(body.diameter()));
    sink(cfg)?.primary("geom.csv", &csv)
}

pub fn verdict(cfg: &RunConfig, bs: &[f64], thetas: &[f64], which: &[Criterion], assert_redheffer: bool) -> Result<()> {
    let z = load(cfg)?;
    let params = cfg.criteria_params();
    let mode = if assert_redheffer {
        RedhefferMode::UserAsserted
    } else {
        RedhefferMode::CheckHeuristically
    };
    let mut verdicts = Vec::new();
    for &c in which {
        for &b in bs {
            match c {
                Criterion::Theorem1 | Criterion::Theorem2 => {
                    for &theta in thetas {
                        verdicts.push(if c == Criterion::Theorem1 {
                            theorem1_verdict(&z, b, theta, &params)?
                        } else {
                            theorem2_verdict(&z, b, theta, mode, &params)?
                        });
                    }
                }
                Criterion::Breadth => verdicts.push(breadth_criterion(&z, b, &params)?),
                Criterion::Diameter => verdicts.push(diameter_sufficient(&z, b, &params)?),
            }
        }
    }
    for v in &verdicts {
        eprint!("{}", v.report());
    }
    sink(cfg)?.primary("verdicts.csv", &verdicts_csv(&verdicts))
}

pub fn sweep(cfg: &RunConfig) -> Result<()> {
    let z = load(cfg)?;
    let params = cfg.criteria_params();
    let prep = Prepared::new(&z, &params)?;
    let rows = prep.sweep(&params)?;
    let mut csv = String::from("theta,upper,lower,infimum,bounded_growth,relative_spread,converged\n");
    for (theta, d) in &rows {
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{},{}",
            sig12(*theta),
            sig12(d.upper),
            sig12(d.lower),
            sig12(d.infimum),
            sig12(d.bounded_growth),
            sig12(d.relative_spread),
            d.converged
        );
    }
    let out = sink(cfg)?;
    out.primary("sweep.csv", &csv)?;
    if cfg.svg {
        let series: Vec<Series> = [("upper", 0usize), ("lower", 1), ("infimum", 2), ("b-variant", 3)]
            .iter()
            .map(|&(label, k)| Series {
                label: label.into(),
                points: rows.iter().map(|(t, d)| (*t, d.estimates()[k])).collect(),
            })
            .collect();
        out.extra("sweep.svg", &line_plot("ln-dens of e^{i theta} Z", "theta", "ln-dens", &series))?;
    }
    let means = rows.iter().map(|(_, d)| d.mean());
    let (lo, hi) = means.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), m| (a.min(m), b.max(m)));
    eprintln!(
        "min ln-dens {} (breadth threshold 2pi*min = {}), max ln-dens {} (diameter threshold 2pi*max = {}), upper density {}{}",
        sig12(lo),
        sig12(TAU * lo),
        sig12(hi),
        sig12(TAU * hi),
        sig12(prep.upper_density().estimate),
        if prep.upper_density().divergent { " (flagged infinite)" } else { "" }
    );
    Ok(())
}
