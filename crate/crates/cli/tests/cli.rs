use std::path::Path;
use std::process::{Command, Output};

use expwidth::divisor::io::parse_distribution;
use expwidth::divisor::{GeneratorSpec, PointDistribution, Region};
use expwidth::logmeasure::GridSpec;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expwidth")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap()
}

fn value<'a>(csv: &'a str, key: &str) -> &'a str {
    csv.lines()
        .find_map(|l| l.strip_prefix(&format!("{key},")))
        .unwrap_or_else(|| panic!("{key} missing in\n{csv}"))
}

#[test]
fn generated_files_parse_back_to_the_same_distribution() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let spec = "sector theta=0 a=pi/4 density=1 horizon=1e4 seed=7";
    stdout(&["generate", spec, "--out", out]);
    let parsed = parse_distribution(&read(dir.path(), "distribution.txt")).unwrap();
    let direct = PointDistribution::from_generator(&GeneratorSpec::parse(spec).unwrap()).unwrap();
    assert_eq!(parsed, direct);
    // Poisson count with mean 10⁴: within 3σ = 300.
    let n = parsed.count(&Region::sector(0.0, std::f64::consts::FRAC_PI_4).unwrap()).value;
    assert!(n.abs_diff(10_000) <= 300, "{n}");
}

#[test]
fn generate_accepts_symbolic_angles() {
    let text = stdout(&["generate", "arith", "n=3", "step=1", "dir=π/2"]);
    let z = parse_distribution(&text).unwrap();
    let ims: Vec<f64> = z.entries().iter().map(|(p, _)| p.im).collect();
    assert_eq!(ims, vec![1.0, 2.0, 3.0]);
    assert!(z.entries().iter().all(|(p, _)| p.re == 0.0));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [a.path(), b.path()] {
        let d = dir.to_str().unwrap();
        let gen = "sector theta=0.4 a=pi/3 density=2 horizon=1e4 seed=3";
        stdout(&["density", "--gen", gen, "--horizon", "1e4", "--out", d]);
        stdout(&["sweep", "--gen", gen, "--horizon", "1e4", "--theta-steps", "12", "--out", d]);
        stdout(&["verdict", "--gen", gen, "--horizon", "1e4", "--theta-steps", "12", "--b", "1,pi,10", "--out", d]);
    }
    for name in [
        "density.csv",
        "block_curve.csv",
        "measure_curves.csv",
        "density_curve.svg",
        "measure_curves.svg",
        "sweep.csv",
        "sweep.svg",
        "verdicts.csv",
    ] {
        assert_eq!(read(a.path(), name), read(b.path(), name), "{name}");
    }
}

#[test]
fn harmonic_verdicts_across_b() {
    let csv = stdout(&[
        "verdict",
        "--gen",
        "arith n=1000000 step=1",
        "--criterion",
        "theorem1",
        "--b",
        "pi,2pi,3pi",
    ]);
    let verdicts: Vec<&str> = csv.lines().skip(1).map(|l| l.rsplit(',').nth(2).unwrap()).collect();
    assert_eq!(verdicts[0], "complete");
    assert!(matches!(verdicts[1], "inconclusive" | "incomplete"));
    assert_eq!(verdicts[2], "incomplete");
}

#[test]
fn geometry_queries() {
    let disk = stdout(&["geom", "disk", "0", "0", "1", "--theta", "0,0.7,-2"]);
    assert_eq!(disk.matches(",2\n").count(), 5, "{disk}");
    let square = stdout(&["geom", "polygon", "0", "0", "1", "0", "1", "1", "0", "1"]);
    assert_eq!(value(&square, "breadth"), ",1");
    assert_eq!(value(&square, "diameter"), ",1.41421356237");
    let strip = stdout(&["geom", "strip", "0", "3", "-1", "--theta", "pi/2,0.3"]);
    assert!(strip.contains("width,1.57079632679,3\n"), "{strip}");
    assert!(strip.contains("width,0.3,inf\n"), "{strip}");

    let dir = tempfile::tempdir().unwrap();
    let body = dir.path().join("body.txt");
    std::fs::write(&body, "# unit square\npolygon: 0 0\npolygon: 1 0\npolygon: 1 1\npolygon: 0 1\n").unwrap();
    let from_file = stdout(&["geom", "--body-file", body.to_str().unwrap()]);
    assert_eq!(value(&from_file, "breadth"), ",1");
}

#[test]
fn degenerate_inputs_give_zero_densities() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "# nothing\n").unwrap();
    let csv = stdout(&["density", "--input", empty.to_str().unwrap()]);
    for key in ["upper", "lower", "infimum", "bounded_growth"] {
        assert_eq!(value(&csv, key), "0");
    }
    let csv = stdout(&["density", "--gen", "arith n=10000 step=1 dir=pi/2 sym=true", "--horizon", "1e4"]);
    for key in ["upper", "lower", "infimum", "bounded_growth"] {
        assert_eq!(value(&csv, key), "0");
    }
}

#[test]
fn exit_codes() {
    let violation = run(&[
        "verdict",
        "--gen",
        "lattice spacing=1 radius=300",
        "--horizon",
        "300",
        "--criterion",
        "breadth",
        "--b",
        "1",
    ]);
    assert_eq!(violation.status.code(), Some(2));
    assert_eq!(run(&["generate", "arith", "n=10", "step=0"]).status.code(), Some(1));
    assert_eq!(run(&["density"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_files_are_merged_with_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        "generators = [\"arith n=100000 step=0.5\"]\ntheta_steps = 4\n[grid]\nhorizon = 1e4\n[estimation]\ntolerance = 0.05\n",
    )
    .unwrap();
    let csv = stdout(&["density", "--config", cfg.to_str().unwrap()]);
    let horizon: f64 = value(&csv, "horizon").parse().unwrap();
    assert!(horizon <= 1e4 && horizon > 1e4 / GridSpec::default().ratio);
    let upper: f64 = value(&csv, "upper").parse().unwrap();
    assert!((upper - 2.0).abs() < 0.02);
    let csv = stdout(&["density", "--config", cfg.to_str().unwrap(), "--horizon", "2e4"]);
    let horizon: f64 = value(&csv, "horizon").parse().unwrap();
    assert!(horizon <= 2e4 && horizon > 2e4 / GridSpec::default().ratio);

    std::fs::write(&cfg, "[grid]\nratio = 0.5\n").unwrap();
    assert_eq!(run(&["density", "--config", cfg.to_str().unwrap(), "--gen", "arith n=10 step=1"]).status.code(), Some(1));
}

#[test]
fn measure_interval_and_table() {
    let csv = stdout(&["measure", "--gen", "arith n=10000 step=1", "--from", "10", "--to", "1e4"]);
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    let brute: f64 = (11..=10_000).map(|k| 1.0 / k as f64).sum();
    assert!((row[2].parse::<f64>().unwrap() - brute).abs() < 1e-9);
    assert_eq!(row[3], "0");
    let table = stdout(&["measure", "--gen", "arith n=10000 step=1", "--table", "--kind", "right", "--horizon", "1e4"]);
    assert!(table.starts_with("r,R,value\n"));
    assert_eq!(table.lines().count(), 1 + 74 * 73 / 2);
}
