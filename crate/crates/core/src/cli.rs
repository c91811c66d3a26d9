//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 for invalid input (bad flags, degrees below 2,
//! negative expected dimension), 3 for internal consistency failures.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use crate::invariants::{compute_report, FanoProblem, InvariantsReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "fano",
    about = "Degree and genus of the Fano scheme of k-planes on a general complete intersection"
)]
pub struct CliConfig {
    /// Dimension of the ambient projective space P^n
    #[arg(long)]
    pub n: u32,

    /// Comma-separated degrees d_1,...,d_r of the hypersurfaces, e.g. 2,2,2
    #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
    pub degrees: Vec<u32>,

    /// Dimension of the linear subspaces
    #[arg(long)]
    pub k: u32,

    /// Emit a single JSON object instead of text
    #[arg(long)]
    pub json: bool,

    /// Cross-check the degree against the Vandermonde formula
    #[arg(long)]
    pub check_oracle: bool,

    /// Include wall-clock time in the output
    #[arg(long)]
    pub time: bool,
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_INVALID
                }
            };
        }
    };

    let problem = match FanoProblem::new(config.n, config.degrees.clone(), config.k) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INVALID;
        }
    };

    let mut report = match compute_report(&problem, config.check_oracle) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return if e.is_consistency_failure() {
                EXIT_INTERNAL
            } else {
                EXIT_INVALID
            };
        }
    };
    if !config.time {
        report.elapsed_ms = None;
    }

    let written = if config.json {
        serde_json::to_string(&report)
            .map_err(std::io::Error::from)
            .and_then(|s| writeln!(out, "{s}"))
    } else {
        write!(out, "{}", render_text(&report))
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: cannot write output: {e}");
            EXIT_INTERNAL
        }
    }
}

/// Human-readable report, one `key: value` per line.
pub fn render_text(r: &InvariantsReport) -> String {
    let degrees: Vec<String> = r.degrees.iter().map(u32::to_string).collect();
    let mut s = String::new();
    s += &format!("n: {}\n", r.n);
    s += &format!("degrees: {}\n", degrees.join(","));
    s += &format!("k: {}\n", r.k);
    s += &format!("r: {}\n", r.r);
    s += &format!("delta: {}\n", r.delta);
    s += &format!("hypothesis_ok: {}\n", r.hypothesis_ok);
    s += &format!("hypothesis_reason: {}\n", r.hypothesis_reason);
    if !r.hypothesis_ok {
        s += "note: hypotheses fail, values are formal\n";
    }
    s += &format!("degree: {}\n", r.degree);
    match &r.genus {
        Some(g) => s += &format!("genus: {g}\n"),
        None => s += "genus: n/a\n",
    }
    s += &format!("canonical_coefficient: {}\n", r.canonical_coefficient);
    s += &format!("oracle_checked: {}\n", r.oracle_checked);
    if let Some(ms) = r.elapsed_ms {
        s += &format!("elapsed_ms: {ms:.3}\n");
    }
    s
}
