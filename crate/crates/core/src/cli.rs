//! Command line front end: `verify`, `list` and `derive`.
//!
//! Exit codes: 0 success, 1 mismatch found, 2 usage error, 3 I/O error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::identities::seeds::{jet_derive_theorem, Seed};
use crate::identities::{list_identities, registry, IdentityParams, Registry};
use crate::jets::Component;
use crate::verify::{
    run_verification_with, Check, IdentityFilter, OutputFormat, RunConfig, VerifyError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hnid",
    version,
    about = "Exact verification of Chu-Vandermonde harmonic number identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sweep identities over a parameter grid and compare both sides exactly.
    Verify(VerifyArgs),
    /// Print the identity catalogue.
    List,
    /// Differentiate a seed convolution in jet arithmetic and print both sides.
    Derive(DeriveArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Identity ids (comma separated or repeated), or `all`.
    #[arg(long = "identity", value_delimiter = ',', default_value = "all")]
    identity: Vec<String>,
    #[arg(long, default_value_t = 25)]
    n_max: u32,
    #[arg(long, default_value_t = 8)]
    p_max: u32,
    #[arg(long, default_value_t = 8)]
    q_max: u32,
    /// Comma separated subset of equality, derivation, shift.
    #[arg(long, value_delimiter = ',', default_value = "equality")]
    checks: Vec<Check>,
    #[arg(long, default_value = "json-lines")]
    format: OutputFormat,
    /// Stop at the first mismatch.
    #[arg(long)]
    fail_fast: bool,
}

#[derive(Debug, Args)]
struct DeriveArgs {
    #[arg(long)]
    seed: Seed,
    #[arg(long = "op")]
    op: Component,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    p: u32,
    #[arg(long, default_value_t = 0)]
    q: u32,
}

impl VerifyArgs {
    fn config(self) -> RunConfig {
        let identities = if self.identity.iter().any(|id| id == "all") {
            IdentityFilter::All
        } else {
            IdentityFilter::Only(self.identity)
        };
        RunConfig {
            identities,
            n_max: self.n_max,
            p_max: self.p_max,
            q_max: self.q_max,
            checks: self.checks,
            format: self.format,
            fail_fast: self.fail_fast,
        }
    }
}

/// Run with the built-in registry.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(registry(), args, out, err)
}

/// Run against an explicit registry, so tests can substitute closed forms.
pub fn run_with<I, T>(registry: &Registry, args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            return match target.write_all(rendered.as_bytes()) {
                Ok(()) => code,
                Err(_) => EXIT_IO,
            };
        }
    };
    let result = match cli.command {
        Command::Verify(args) => verify(registry, args, out, err),
        Command::List => list(out),
        Command::Derive(args) => derive(args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let code = match &e {
                VerifyError::Identity(_) => EXIT_USAGE,
                VerifyError::Io(_) | VerifyError::Csv(_) => EXIT_IO,
            };
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

fn verify(
    registry: &Registry,
    args: VerifyArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, VerifyError> {
    let config = args.config();
    let report = run_verification_with(registry, &config)?;
    report.write(config.format, &mut *out)?;
    writeln!(err, "{}", report.summary)?;
    for r in report.mismatches() {
        writeln!(
            err,
            "MISMATCH {} at n={} p={} q={}: lhs={} rhs={}",
            r.id,
            r.n,
            r.p,
            r.q,
            r.lhs.as_ref().map(ToString::to_string).unwrap_or_default(),
            r.rhs.as_ref().map(ToString::to_string).unwrap_or_default()
        )?;
    }
    Ok(if report.summary.success() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

fn list(out: &mut dyn Write) -> Result<i32, VerifyError> {
    for entry in list_identities() {
        writeln!(out, "{:<16} {:<8} {}", entry.id, entry.domain, entry.anchor)?;
    }
    Ok(EXIT_OK)
}

fn derive(args: DeriveArgs, out: &mut dyn Write) -> Result<i32, VerifyError> {
    let params = IdentityParams::new(args.n, args.p, args.q);
    let sides = args.seed.jet_sides(&params);
    let (lhs, rhs) = jet_derive_theorem(args.seed, args.op, &params);
    writeln!(out, "seed {} op {} at {}", args.seed, args.op, params)?;
    writeln!(out, "lhs jet: {}", sides.lhs)?;
    writeln!(out, "rhs jet: {}", sides.rhs)?;
    writeln!(out, "lhs {}: {}", args.op, lhs)?;
    writeln!(out, "rhs {}: {}", args.op, rhs)?;
    if lhs == rhs {
        writeln!(out, "EQUAL")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "DIFFERENT")?;
        Ok(EXIT_MISMATCH)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("hnid").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn list_prints_catalogue() {
        let (code, out, _) = run_capture(&["list"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 28);
        assert!(out
            .lines()
            .any(|l| l.starts_with("thm-e") && l.contains("Theorem 5")));
    }

    #[test]
    fn derive_eq2_dxy() {
        let (code, out, _) = run_capture(&[
            "derive", "--seed", "eq2", "--op", "dxy", "--n", "2", "--p", "0", "--q", "0",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.trim_end().ends_with("EQUAL"));
    }

    #[test]
    fn derive_eq7_dx_prints_fraction() {
        let (code, out, _) = run_capture(&[
            "derive", "--seed", "eq7", "--op", "dx", "--n", "1", "--p", "3", "--q", "0",
        ]);
        assert_eq!(code, EXIT_OK);
        // -(d/dx) binom(3 + x, 1) = -1
        assert!(out.contains("rhs dx: -1\n"), "{out}");
    }

    #[test]
    fn unknown_identity_is_usage_error() {
        let (code, out, err) = run_capture(&["verify", "--identity", "thm-z"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("thm-z"));
    }

    #[test]
    fn bad_flag_is_usage_error() {
        let (code, _, _) = run_capture(&["verify", "--format", "xml"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _, _) = run_capture(&["derive", "--seed", "eq3", "--op", "dx", "--n", "1"]);
        assert_eq!(code, EXIT_USAGE);
    }
}
