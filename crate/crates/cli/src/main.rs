//! `expwidth`: logarithmic block densities, convex geometry and
//! completeness verdicts from the command line.

mod commands;
mod config;
mod output;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use config::RunConfig;

fn number(s: &str) -> Result<f64, String> {
    expwidth::angle::parse_angle(s).map_err(|e| e.to_string())
}

#[derive(Parser)]
#[command(name = "expwidth", version, about = "Logarithmic densities of point distributions and width-based completeness criteria")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// TOML run configuration; flags override its fields.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Distribution file (`re im [mult]` per line). Repeatable; inputs are merged.
    #[arg(long = "input", short = 'i', global = true)]
    inputs: Vec<PathBuf>,
    /// Generator spec such as "arith n=1000 step=1". Repeatable.
    #[arg(long = "gen", short = 'g', global = true)]
    generators: Vec<String>,
    /// Smallest grid radius.
    #[arg(long, global = true, value_parser = number)]
    grid_base: Option<f64>,
    /// Ratio between consecutive grid radii.
    #[arg(long, global = true, value_parser = number)]
    grid_ratio: Option<f64>,
    /// Largest radius considered.
    #[arg(long, global = true, value_parser = number)]
    horizon: Option<f64>,
    /// Fraction of the grid (in log scale) used for the tail estimates.
    #[arg(long, global = true, value_parser = number)]
    tail_fraction: Option<f64>,
    /// Relative tolerance for density agreement and verdict bands.
    #[arg(long, global = true, value_parser = number)]
    tolerance: Option<f64>,
    /// Growth per decade above which a running supremum counts as divergent.
    #[arg(long, global = true, value_parser = number)]
    divergence_margin: Option<f64>,
    /// Number of directions in [0, pi) for sweeps.
    #[arg(long, global = true)]
    theta_steps: Option<usize>,
    /// Output directory; without it the main CSV goes to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Skip SVG plots.
    #[arg(long, global = true)]
    no_svg: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Materialize a generator spec as a distribution file.
    Generate {
        /// e.g. `arith n=1000 step=1 dir=pi/2`
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
    },
    /// Logarithmic measures of one interval, or a full table on the grid.
    Measure {
        #[arg(long, value_parser = number)]
        from: Option<f64>,
        #[arg(long, value_parser = number)]
        to: Option<f64>,
        /// Multiply the distribution by e^{i·rotation} first.
        #[arg(long, value_parser = number, default_value = "0")]
        rotation: f64,
        /// Emit the table of all grid intervals instead.
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value_t = Kind::Submeasure)]
        kind: Kind,
    },
    /// The four block densities in direction theta, with the block curve.
    Density {
        #[arg(long, value_parser = number, default_value = "pi/2")]
        theta: f64,
    },
    /// Support-function geometry of a body: `disk X Y R`, `strip PHI B OFFSET`,
    /// `polygon X1 Y1 X2 Y2 ...`, or `--body-file FILE`.
    Geom {
        #[arg(allow_negative_numbers = true)]
        body: Vec<String>,
        #[arg(long)]
        body_file: Option<PathBuf>,
        /// Directions for the width; repeatable or comma-separated.
        #[arg(long, value_delimiter = ',', value_parser = number, default_value = "0")]
        theta: Vec<f64>,
    },
    /// Completeness verdicts over a (b, theta) grid.
    Verdict {
        #[arg(long, value_delimiter = ',', value_parser = number, required = true)]
        b: Vec<f64>,
        #[arg(long, value_delimiter = ',', value_parser = number, default_value = "pi/2")]
        theta: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Which::All)]
        criterion: Which,
        /// Treat the Redheffer finiteness hypothesis as given.
        #[arg(long)]
        assert_redheffer: bool,
    },
    /// ln-dens of e^{iθ}Z over the θ grid.
    Sweep,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Right,
    Left,
    Submeasure,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Theorem1,
    Theorem2,
    Breadth,
    Diameter,
    All,
}

impl Common {
    fn resolve(&self) -> anyhow::Result<RunConfig> {
        let mut c = match &self.config {
            Some(p) => RunConfig::load(p)?,
            None => RunConfig::default(),
        };
        c.inputs.extend(self.inputs.iter().cloned());
        c.generators.extend(self.generators.iter().cloned());
        if let Some(v) = self.grid_base {
            c.grid.base = v;
        }
        if let Some(v) = self.grid_ratio {
            c.grid.ratio = v;
        }
        if let Some(v) = self.horizon {
            c.grid.horizon = v;
        }
        if let Some(v) = self.tail_fraction {
            c.estimation.tail_fraction = v;
        }
        if let Some(v) = self.tolerance {
            c.estimation.tolerance = v;
        }
        if let Some(v) = self.divergence_margin {
            c.estimation.divergence_margin = v;
        }
        if let Some(v) = self.theta_steps {
            c.theta_steps = v;
        }
        if self.out.is_some() {
            c.out = self.out.clone();
        }
        if self.no_svg {
            c.svg = false;
        }
        c.validate()?;
        Ok(c)
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let cfg = cli.common.resolve()?;
    match cli.command {
        Command::Generate { spec } => commands::generate(&cfg, &spec.join(" ")),
        Command::Measure {
            from,
            to,
            rotation,
            table,
            kind,
        } => {
            let kind = match kind {
                Kind::Right => expwidth::logmeasure::MeasureKind::Right,
                Kind::Left => expwidth::logmeasure::MeasureKind::Left,
                Kind::Submeasure => expwidth::logmeasure::MeasureKind::Submeasure,
            };
            commands::measure(&cfg, from, to, rotation, table, kind)
        }
        Command::Density { theta } => commands::density(&cfg, theta),
        Command::Geom { body, body_file, theta } => commands::geom(&cfg, &body, body_file.as_deref(), &theta),
        Command::Verdict {
            b,
            theta,
            criterion,
            assert_redheffer,
        } => {
            let which: Vec<expwidth::criteria::Criterion> = {
                use expwidth::criteria::Criterion as C;
                match criterion {
                    Which::Theorem1 => vec![C::Theorem1],
                    Which::Theorem2 => vec![C::Theorem2],
                    Which::Breadth => vec![C::Breadth],
                    Which::Diameter => vec![C::Diameter],
                    Which::All => vec![C::Theorem1, C::Theorem2, C::Breadth, C::Diameter],
                }
            };
            commands::verdict(&cfg, &b, &theta, &which, assert_redheffer)
        }
        Command::Sweep => commands::sweep(&cfg),
    }
}

fn is_hypothesis_violation(e: &anyhow::Error) -> bool {
    e.chain()
        .any(|c| matches!(c.downcast_ref::<expwidth::Error>(), Some(expwidth::Error::HypothesisViolation(_))))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_hypothesis_violation(&e) { 2 } else { 1 })
        }
    }
}
