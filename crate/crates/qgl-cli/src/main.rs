//! `qgl` — command-line driver for quaternionic root geometry.
//!
//! One subcommand per capability: `demo` replays built-in worked examples,
//! `verify` checks that every derivative root lies in the slice-hull
//! intersection region, `bounds` prints root-modulus bounds, `hull`
//! exports the hulls of one slice, and `roots` lists quaternionic roots.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails
//! (with a one-line JSON failure summary on stdout), 2 when the request
//! itself is unusable (bad arguments, unreadable input, rejected
//! computation; detail as one-line JSON on stderr). Runs are fully
//! determined by their arguments: same invocation, same bytes out.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod demo;
mod io;
mod run;
mod svg;

#[derive(Parser)]
#[command(name = "qgl", version, about = "quaternionic polynomial root geometry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay a built-in worked example against frozen expected values.
    Demo {
        /// One of: example-2-4, section-3-projection, strict-inclusion,
        /// bounds-5-4.
        case: String,
        /// Write the case's slice scene as an SVG file.
        #[arg(long, value_name = "OUT")]
        svg: Option<PathBuf>,
    },
    /// Check containment of derivative roots for one or many polynomials.
    Verify {
        /// Polynomial JSON file; omit to verify seeded random instances.
        #[arg(long, value_name = "FILE")]
        poly: Option<PathBuf>,
        /// Number of random instances when --poly is omitted.
        #[arg(long, value_name = "COUNT", default_value_t = 10)]
        random: usize,
        /// Fixed degree for random instances (default cycles 2..=6).
        #[arg(long, value_name = "D")]
        degree: Option<usize>,
        /// Coefficient scale for random instances.
        #[arg(long, value_name = "R", default_value_t = 10.0)]
        scale: f64,
        /// Sphere sample count for real-point membership scans.
        #[arg(long, value_name = "N", default_value_t = qgl_core::tol::DEFAULT_SPHERE_SAMPLES)]
        samples: usize,
        /// Membership tolerance; default scales with the root norms.
        #[arg(long, value_name = "E")]
        tol: Option<f64>,
        /// Seed for random instances; echoed into reports.
        #[arg(long, value_name = "S", default_value_t = 0)]
        seed: u64,
        /// Write the full verification reports as JSON.
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
        /// Write one CSV row per membership check.
        #[arg(long, value_name = "OUT")]
        csv: Option<PathBuf>,
    },
    /// Print coefficient and slice-hull root-modulus bounds.
    Bounds {
        #[arg(long, value_name = "FILE")]
        poly: PathBuf,
        /// Sphere sample count for the slice suprema.
        #[arg(long, value_name = "N", default_value_t = qgl_core::tol::DEFAULT_SPHERE_SAMPLES)]
        samples: usize,
    },
    /// Compute the plane hull, complement hull, and their intersection in
    /// one slice.
    Hull {
        #[arg(long, value_name = "FILE")]
        poly: PathBuf,
        /// Slice direction as "x,y,z" (normalized).
        #[arg(long, value_name = "X,Y,Z")]
        slice: String,
        /// Write the hulls and root markers as an SVG file.
        #[arg(long, value_name = "OUT")]
        svg: Option<PathBuf>,
        /// Write one CSV row per hull vertex.
        #[arg(long, value_name = "OUT")]
        csv: Option<PathBuf>,
    },
    /// List the isolated roots and root spheres of a polynomial.
    Roots {
        #[arg(long, value_name = "FILE")]
        poly: PathBuf,
        /// Use the formal derivative instead of the polynomial itself.
        #[arg(long)]
        derivative: bool,
        /// Write one CSV row per root.
        #[arg(long, value_name = "OUT")]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Demo { case, svg } => demo::run(case, svg.as_deref()),
        Command::Verify {
            poly,
            random,
            degree,
            scale,
            samples,
            tol,
            seed,
            json,
            csv,
        } => run::verify(&run::VerifyOpts {
            poly: poly.clone(),
            random: *random,
            degree: *degree,
            scale: *scale,
            samples: *samples,
            tol: *tol,
            seed: *seed,
            json: json.clone(),
            csv: csv.clone(),
        }),
        Command::Bounds { poly, samples } => run::bounds(poly, *samples),
        Command::Hull { poly, slice, svg, csv } => {
            run::hull(poly, slice, svg.as_deref(), csv.as_deref())
        }
        Command::Roots { poly, derivative, csv } => {
            run::roots(poly, *derivative, csv.as_deref())
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(2)
        }
    }
}
