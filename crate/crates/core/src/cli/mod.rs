//! The `bulge` command-line tool.
//!
//! ```text
//! bulge build   (--vertices X1 Y1 X2 Y2 X3 Y3 | --sides A B C | --right A B) [--json FILE]
//! bulge measure <input> [--area] [--json FILE]
//! bulge verify  [<input>] [--random N] [--seed S] [--kind acute|right|all] [--threads T]
//! bulge sweep   --leg-a A --b-from B0 --b-to B1 --steps N [--csv FILE]
//! bulge render  <input> [--out FILE] [--overlay base,centers,bisectors,circumcircle,labels]
//! ```
//!
//! `-` names standard output. Angles are printed in degrees. Exit codes: `0`
//! success, `1` a verified claim failed, `2` invalid input.

mod report;
mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::construct::{build, BulgingTriangle};
use crate::error::Error;
use crate::format::sig17;
use crate::geom::{Point2, Triangle};
use crate::metrics;
use crate::svg::{self, Overlay, RenderOptions};
use crate::theorems;

pub use report::{ReportDocument, SCHEMA};
pub use verify::{VerifyKind, VerifySummary};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "bulge", version, about = "Bulging triangles: construct, measure, verify, render")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct the bulging triangle and write the full report.
    Build {
        #[command(flatten)]
        input: InputArgs,
        /// Report destination.
        #[arg(long, value_name = "FILE", default_value = "-")]
        json: PathBuf,
    },
    /// Edge lengths, perimeter and area.
    Measure {
        #[command(flatten)]
        input: InputArgs,
        /// Require the area (fails on concave inputs).
        #[arg(long)]
        area: bool,
        /// Write JSON instead of the text summary.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Check every claim on one input or on seeded random instances.
    Verify {
        #[command(flatten)]
        input: OptionalInputArgs,
        /// Number of random instances (used when no triangle is given).
        #[arg(long, value_name = "N", default_value_t = 1000)]
        random: usize,
        #[arg(long, env = "BULGE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = VerifyKind::All)]
        kind: VerifyKind,
        /// Worker threads (0 = all cores). Output does not depend on it.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Monte Carlo samples per instance for the area check (0 = skip).
        #[arg(long, value_name = "N", default_value_t = 0)]
        mc_samples: u64,
        /// Also write the summary as JSON.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Pythagorean gap over a grid of longer legs.
    Sweep {
        #[arg(long, value_name = "A")]
        leg_a: f64,
        #[arg(long, value_name = "B0")]
        b_from: f64,
        #[arg(long, value_name = "B1")]
        b_to: f64,
        #[arg(long, value_name = "N")]
        steps: usize,
        #[arg(long, value_name = "FILE", default_value = "-")]
        csv: PathBuf,
    },
    /// Draw the bulging triangle as SVG.
    Render {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "FILE", default_value = "-")]
        out: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',')]
        overlay: Vec<OverlayArg>,
        #[arg(long, default_value_t = 480)]
        width: u32,
        #[arg(long, default_value_t = 480)]
        height: u32,
        #[arg(long, default_value_t = 0.05)]
        margin: f64,
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Three vertices: X1 Y1 X2 Y2 X3 Y3.
    #[arg(long, num_args = 6, value_names = ["X1", "Y1", "X2", "Y2", "X3", "Y3"], allow_negative_numbers = true)]
    vertices: Option<Vec<f64>>,
    /// Side lengths a = |BC|, b = |CA|, c = |AB|.
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"])]
    sides: Option<Vec<f64>>,
    /// Right-angled at C with legs a = |BC|, b = |CA|: B(0,0), C(a,0), A(a,b).
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    right: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Args)]
#[group(required = false, multiple = false)]
struct OptionalInputArgs {
    #[arg(long, num_args = 6, value_names = ["X1", "Y1", "X2", "Y2", "X3", "Y3"], allow_negative_numbers = true)]
    vertices: Option<Vec<f64>>,
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"])]
    sides: Option<Vec<f64>>,
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    right: Option<Vec<f64>>,
}

impl OptionalInputArgs {
    fn into_input(self) -> Option<InputArgs> {
        if self.vertices.is_none() && self.sides.is_none() && self.right.is_none() {
            return None;
        }
        Some(InputArgs {
            vertices: self.vertices,
            sides: self.sides,
            right: self.right,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OverlayArg {
    Base,
    Centers,
    Bisectors,
    Circumcircle,
    Labels,
}

impl From<OverlayArg> for Overlay {
    fn from(o: OverlayArg) -> Self {
        match o {
            OverlayArg::Base => Overlay::BaseTriangle,
            OverlayArg::Centers => Overlay::Centers,
            OverlayArg::Bisectors => Overlay::PerpBisectors,
            OverlayArg::Circumcircle => Overlay::Circumcircle,
            OverlayArg::Labels => Overlay::Labels,
        }
    }
}

/// How the triangle was specified on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum TriangleInput {
    Vertices([Point2; 3]),
    /// `a = |BC|`, `b = |CA|`, `c = |AB|`.
    Sides { a: f64, b: f64, c: f64 },
    /// Right angle at `C`: `B(0, 0)`, `C(a, 0)`, `A(a, b)`.
    RightLegs { a: f64, b: f64 },
}

impl TriangleInput {
    pub fn kind(&self) -> &'static str {
        match self {
            TriangleInput::Vertices(_) => "vertices",
            TriangleInput::Sides { .. } => "sides",
            TriangleInput::RightLegs { .. } => "right_legs",
        }
    }

    pub fn values(&self) -> Vec<f64> {
        match self {
            TriangleInput::Vertices(p) => p.iter().flat_map(|q| [q.x, q.y]).collect(),
            TriangleInput::Sides { a, b, c } => vec![*a, *b, *c],
            TriangleInput::RightLegs { a, b } => vec![*a, *b],
        }
    }

    pub fn to_triangle(&self) -> Result<Triangle, CliError> {
        let positive = |v: &[f64]| v.iter().all(|x| x.is_finite() && *x > 0.0);
        match *self {
            TriangleInput::Vertices([p, q, r]) => Ok(Triangle::new(p, q, r)?),
            TriangleInput::Sides { a, b, c } => {
                if !positive(&[a, b, c]) {
                    return Err(CliError::Invalid("side lengths must be positive".into()));
                }
                if !(a < b + c && b < c + a && c < a + b) {
                    return Err(CliError::Invalid(
                        "side lengths violate the strict triangle inequality".into(),
                    ));
                }
                // B at the origin, C on the positive x-axis, A above.
                let x = (a * a + c * c - b * b) / (2.0 * a);
                let y = (c * c - x * x).max(0.0).sqrt();
                Ok(Triangle::new(
                    Point2::new(x, y),
                    Point2::new(0.0, 0.0),
                    Point2::new(a, 0.0),
                )?)
            }
            TriangleInput::RightLegs { a, b } => {
                if !positive(&[a, b]) {
                    return Err(CliError::Invalid("legs must be positive".into()));
                }
                Ok(Triangle::new(
                    Point2::new(a, b),
                    Point2::new(0.0, 0.0),
                    Point2::new(a, 0.0),
                )?)
            }
        }
    }
}

impl InputArgs {
    fn parse(&self) -> TriangleInput {
        if let Some(v) = &self.vertices {
            TriangleInput::Vertices([
                Point2::new(v[0], v[1]),
                Point2::new(v[2], v[3]),
                Point2::new(v[4], v[5]),
            ])
        } else if let Some(s) = &self.sides {
            TriangleInput::Sides {
                a: s[0],
                b: s[1],
                c: s[2],
            }
        } else {
            let r = self.right.as_ref().expect("clap enforces one input variant");
            TriangleInput::RightLegs { a: r[0], b: r[1] }
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Geometry(#[from] Error),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    /// A claim failed during `verify`; the summary was already printed.
    #[error("{0}")]
    Violation(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

fn open_output<'a>(path: &PathBuf, stdout: &'a mut dyn Write) -> io::Result<Box<dyn Write + 'a>> {
    if path.as_os_str() == "-" {
        Ok(Box::new(stdout))
    } else {
        Ok(Box::new(BufWriter::new(File::create(path)?)))
    }
}

/// Run the tool on `argv` (including the program name) and return the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("error: invalid arguments");
            let _ = writeln!(stderr, "{line}");
            return 2;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(()) => 0,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Build { input, json } => {
            let input = input.parse();
            let bt = build(&input.to_triangle()?);
            let doc = ReportDocument::new(&input, &bt, None);
            let mut out = open_output(&json, stdout)?;
            doc.write(&mut out)?;
            out.flush()?;
        }
        Command::Measure { input, area, json } => {
            let input = input.parse();
            let bt = build(&input.to_triangle()?);
            if area && !bt.is_convex() {
                return Err(Error::ConcaveUnsupported.into());
            }
            let m = metrics::measure(&bt);
            match json {
                Some(path) => {
                    let mut out = open_output(&path, stdout)?;
                    report::write_metrics(&mut out, &m)?;
                    out.flush()?;
                }
                None => write_measure_text(stdout, &bt, &m)?,
            }
        }
        Command::Verify {
            input,
            random,
            seed,
            kind,
            threads,
            mc_samples,
            json,
        } => {
            let summary = match input.into_input() {
                Some(args) => {
                    let input = args.parse();
                    let bt = build(&input.to_triangle()?);
                    if !bt.is_convex() {
                        return Err(Error::ConcaveUnsupported.into());
                    }
                    verify::verify_single(&bt, mc_samples, seed)
                }
                None => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(threads)
                        .build()
                        .map_err(|e| CliError::Invalid(e.to_string()))?;
                    pool.install(|| verify::verify_random(random, seed, kind, mc_samples))
                }
            };
            summary.write_text(stdout)?;
            if let Some(path) = json {
                let mut out = open_output(&path, stdout)?;
                summary.write_json(&mut out)?;
                out.flush()?;
            }
            if let Some(v) = summary.first_violation() {
                return Err(CliError::Violation(v));
            }
        }
        Command::Sweep {
            leg_a,
            b_from,
            b_to,
            steps,
            csv,
        } => {
            if steps < 2 {
                return Err(CliError::Invalid("--steps must be at least 2".into()));
            }
            let mut out = open_output(&csv, stdout)?;
            write_sweep(&mut out, leg_a, b_from, b_to, steps)?;
            out.flush()?;
        }
        Command::Render {
            input,
            out,
            overlay,
            width,
            height,
            margin,
        } => {
            if !(0.0..0.4).contains(&margin) {
                return Err(CliError::Invalid("--margin must be in [0, 0.4)".into()));
            }
            if width == 0 || height == 0 {
                return Err(CliError::Invalid("--width and --height must be positive".into()));
            }
            let input = input.parse();
            let bt = build(&input.to_triangle()?);
            let opts = RenderOptions {
                width_px: width,
                height_px: height,
                margin_frac: margin,
                overlays: overlay.into_iter().map(Overlay::from).collect(),
                ..RenderOptions::default()
            };
            let mut w = open_output(&out, stdout)?;
            w.write_all(svg::to_svg(&bt, &opts).as_bytes())?;
            w.flush()?;
        }
    }
    Ok(())
}

fn write_measure_text(
    out: &mut dyn Write,
    bt: &BulgingTriangle,
    m: &metrics::MetricsReport,
) -> io::Result<()> {
    writeln!(out, "class      {}", bt.class())?;
    writeln!(out, "convexity  {}", m.convexity.name())?;
    writeln!(out, "len_ab     {}", sig17(m.len_ab))?;
    writeln!(out, "len_bc     {}", sig17(m.len_bc))?;
    writeln!(out, "len_ca     {}", sig17(m.len_ca))?;
    writeln!(out, "perimeter  {}", sig17(m.perimeter))?;
    match m.area {
        Some(a) => writeln!(out, "area       {}", sig17(a))?,
        None => writeln!(out, "area       n/a (concave)")?,
    }
    if let Some(d) = m.circumdisk {
        writeln!(
            out,
            "circumdisk center ({}, {}) radius {} max_boundary_distance {}",
            sig17(d.center.x),
            sig17(d.center.y),
            sig17(d.radius),
            sig17(d.max_boundary_distance)
        )?;
    }
    Ok(())
}

/// Rows `b,t,theta0,gap` for `b` evenly spaced over `[b_from, b_to]`, angles in degrees.
fn write_sweep(
    out: &mut dyn Write,
    leg_a: f64,
    b_from: f64,
    b_to: f64,
    steps: usize,
) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["b", "t", "theta0", "gap"])?;
    for i in 0..steps {
        let b = if i + 1 == steps {
            b_to
        } else {
            b_from + (b_to - b_from) * i as f64 / (steps - 1) as f64
        };
        let r = theorems::pyth_gap(leg_a, b)?;
        w.write_record([
            sig17(b),
            sig17(r.t.to_degrees()),
            sig17(r.theta0.to_degrees()),
            sig17(r.gap),
        ])?;
    }
    w.flush()?;
    Ok(())
}
