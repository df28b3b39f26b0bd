//! Command-line front end.
//!
//! Every subcommand prints one JSON document on stdout (or writes an SVG).
//! Failures print a single line `{"error":"<code>","detail":"…"}` on stderr
//! and exit with 1 for invalid input, 2 for usage errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::classify;
use crate::cone::toric_equivalent;
use crate::fourmanifold::invariants;
use crate::plumbing::{cone_of_plumbing, plumbing_of_cone};
use crate::render::{render_cone_svg, render_plumbing_svg, RenderOptions};
use crate::wire::{self, WireError};

#[derive(Debug, Parser)]
#[command(name = "toric3", version, about = "Contact toric 3-manifolds, moment cones and linear plumbings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lens space, contact class and H₁ of a moment cone.
    Classify {
        #[arg(long)]
        cone: String,
    },
    /// A linear plumbing whose concave boundary has the given cone.
    ToPlumbing {
        #[arg(long)]
        cone: String,
    },
    /// Boundary cone of a plumbing, and its classification.
    FromPlumbing {
        #[arg(long, allow_hyphen_values = true)]
        chain: String,
    },
    /// χ, σ, c₁² and θ of a plumbing.
    Invariants {
        #[arg(long, allow_hyphen_values = true)]
        chain: String,
    },
    /// Apply a half or full Lutz twist.
    Lutz {
        #[arg(long)]
        cone: String,
        #[arg(long, value_enum)]
        kind: LutzKind,
    },
    /// Compare two cones up to SL(2,ℤ) and up to contactomorphism.
    Equiv {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Draw a cone or a plumbing fan as SVG.
    Render {
        #[arg(long, conflicts_with = "chain", required_unless_present = "chain")]
        cone: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        chain: Option<String>,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 400)]
        size: u32,
        /// Ray length in pixels; 40% of the canvas by default.
        #[arg(long)]
        ray_length: Option<f64>,
        #[arg(long)]
        no_labels: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LutzKind {
    Half,
    Full,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, error: &str, detail: &str) -> Self {
        let line = json!({ "error": error, "detail": detail }).to_string();
        Outcome { code, stdout: String::new(), stderr: format!("{line}\n") }
    }
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => {
                    let detail = e.to_string();
                    let first = detail.lines().next().unwrap_or("").trim_start_matches("error: ");
                    Outcome::fail(2, "usage", first)
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => Outcome::ok(out),
        Err(CliError::Wire(e)) => Outcome::fail(1, e.code(), &e.to_string()),
        Err(CliError::Io(e)) => Outcome::fail(1, "io", &e),
    }
}

enum CliError {
    Wire(WireError),
    Io(String),
}

impl<E: Into<WireError>> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Wire(e.into())
    }
}

fn line(v: Value) -> String {
    format!("{v}\n")
}

fn execute(command: Command) -> Result<String, CliError> {
    match command {
        Command::Classify { cone } => {
            let c = wire::parse_cone(&cone)?;
            Ok(line(wire::classification_to_json(&classify(&c))))
        }
        Command::ToPlumbing { cone } => {
            let c = wire::parse_cone(&cone)?;
            Ok(line(wire::plumbing_to_json(&plumbing_of_cone(&c))))
        }
        Command::FromPlumbing { chain } => {
            let p = wire::parse_chain(&chain)?;
            let c = cone_of_plumbing(&p);
            Ok(line(json!({
                "cone": wire::cone_to_json(&c),
                "classification": wire::classification_to_json(&classify(&c)),
            })))
        }
        Command::Invariants { chain } => {
            let p = wire::parse_chain(&chain)?;
            Ok(line(wire::invariants_to_json(&invariants(&p)?)))
        }
        Command::Lutz { cone, kind } => {
            let c = wire::parse_cone(&cone)?;
            let out = match kind {
                LutzKind::Half => c.half_lutz(),
                LutzKind::Full => c.full_lutz(),
            };
            Ok(line(wire::cone_to_json(&out)))
        }
        Command::Equiv { a, b } => {
            let (a, b) = (wire::parse_cone(&a)?, wire::parse_cone(&b)?);
            Ok(line(json!({
                "toric_equivalent": toric_equivalent(&a, &b),
                "contactomorphic": classify(&a) == classify(&b),
            })))
        }
        Command::Render { cone, chain, out, size, ray_length, no_labels } => {
            let ray_length = ray_length.unwrap_or(f64::from(size) * 0.4);
            let options = RenderOptions::new(size, ray_length, !no_labels)?;
            let svg = match (cone, chain) {
                (Some(cone), _) => render_cone_svg(&wire::parse_cone(&cone)?, &options),
                (None, Some(chain)) => render_plumbing_svg(&wire::parse_chain(&chain)?, &options),
                (None, None) => unreachable!("clap requires one of --cone, --chain"),
            };
            match out {
                Some(path) => {
                    std::fs::write(&path, &svg)
                        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                    Ok(line(json!({ "written": path.display().to_string(), "bytes": svg.len() })))
                }
                None => Ok(svg),
            }
        }
    }
}
