//! Grid verification: sweep identities over `(n, p, q)`, compare both sides
//! exactly, and render the outcome as json-lines, csv or a table.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Rational;
use crate::identities::closure::{self, Reconstruction};
use crate::identities::{
    registry, CaseTag, IdentityDescriptor, IdentityError, IdentityParams, Registry,
};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Identity(#[from] IdentityError),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

/// Which comparisons to run per grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// Brute-force left side against closed-form right side.
    Equality,
    /// Both sides rebuilt from the seed convolution's jets.
    Derivation,
    /// Both sides rebuilt from the parent identity at shifted parameters.
    Shift,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Equality => "equality",
            Check::Derivation => "derivation",
            Check::Shift => "shift",
        }
    }

    /// Record id for this check: the identity id itself for equality,
    /// otherwise suffixed with `:derivation` / `:shift`.
    fn record_id(self, id: &str) -> String {
        match self {
            Check::Equality => id.to_string(),
            other => format!("{id}:{}", other.name()),
        }
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "equality" => Ok(Check::Equality),
            "derivation" => Ok(Check::Derivation),
            "shift" => Ok(Check::Shift),
            other => Err(format!(
                "unknown check {other:?} (expected equality, derivation or shift)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    JsonLines,
    Csv,
    Table,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json-lines" | "jsonl" => Ok(OutputFormat::JsonLines),
            "csv" => Ok(OutputFormat::Csv),
            "table" => Ok(OutputFormat::Table),
            other => Err(format!(
                "unknown format {other:?} (expected json-lines, csv or table)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityFilter {
    All,
    Only(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub identities: IdentityFilter,
    pub n_max: u32,
    pub p_max: u32,
    pub q_max: u32,
    pub checks: Vec<Check>,
    pub format: OutputFormat,
    pub fail_fast: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            identities: IdentityFilter::All,
            n_max: 25,
            p_max: 8,
            q_max: 8,
            checks: vec![Check::Equality],
            format: OutputFormat::JsonLines,
            fail_fast: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    /// Point outside the identity's stated domain.
    Skip,
    Mismatch,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Skip => "SKIP",
            Status::Mismatch => "MISMATCH",
        })
    }
}

/// Outcome at one grid point. Skipped points carry no side values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub id: String,
    pub n: u32,
    pub p: u32,
    pub q: u32,
    pub case: Option<CaseTag>,
    pub status: Status,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
}

impl VerificationRecord {
    pub fn params(&self) -> IdentityParams {
        IdentityParams::new(self.n, self.p, self.q)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization is infallible")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub skipped: usize,
    pub mismatched: usize,
}

impl Summary {
    fn tally(records: &[VerificationRecord]) -> Summary {
        let mut s = Summary {
            total: records.len(),
            ..Summary::default()
        };
        for r in records {
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Skip => s.skipped += 1,
                Status::Mismatch => s.mismatched += 1,
            }
        }
        s
    }

    pub fn success(&self) -> bool {
        self.mismatched == 0
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "total={} passed={} skipped={} mismatched={}",
            self.total, self.passed, self.skipped, self.mismatched
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub summary: Summary,
    pub records: Vec<VerificationRecord>,
}

impl Report {
    pub fn mismatches(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.records.iter().filter(|r| r.status == Status::Mismatch)
    }

    pub fn write<W: Write>(&self, format: OutputFormat, out: W) -> Result<(), VerifyError> {
        match format {
            OutputFormat::JsonLines => write_json_lines(&self.records, out),
            OutputFormat::Csv => write_csv(&self.records, out),
            OutputFormat::Table => write_table(self, out),
        }
    }
}

fn select<'r>(
    registry: &'r Registry,
    filter: &IdentityFilter,
) -> Result<Vec<&'r IdentityDescriptor>, IdentityError> {
    match filter {
        IdentityFilter::All => Ok(registry.iter().collect()),
        IdentityFilter::Only(ids) => {
            let mut selected = ids
                .iter()
                .map(|id| registry.get(id))
                .collect::<Result<Vec<_>, _>>()?;
            selected.sort_by_key(|d| d.id);
            selected.dedup_by_key(|d| d.id);
            Ok(selected)
        }
    }
}

fn skip(id: String, at: &IdentityParams) -> VerificationRecord {
    VerificationRecord {
        id,
        n: at.n,
        p: at.p,
        q: at.q,
        case: None,
        status: Status::Skip,
        lhs: None,
        rhs: None,
    }
}

fn compare(
    id: String,
    at: &IdentityParams,
    case: Option<CaseTag>,
    ok: bool,
    lhs: Rational,
    rhs: Rational,
) -> VerificationRecord {
    VerificationRecord {
        id,
        n: at.n,
        p: at.p,
        q: at.q,
        case,
        status: if ok { Status::Pass } else { Status::Mismatch },
        lhs: Some(lhs),
        rhs: Some(rhs),
    }
}

/// Records for one identity at one point, for each requested check that
/// applies to it.
fn check_point(
    d: &IdentityDescriptor,
    at: &IdentityParams,
    checks: &[Check],
) -> Vec<VerificationRecord> {
    let mut out = Vec::with_capacity(checks.len());
    let in_domain = d.domain.contains(at);
    for &check in checks {
        let route: Option<fn(&str, &IdentityParams) -> Option<Reconstruction>> = match check {
            Check::Equality => None,
            Check::Derivation if closure::seed_of(d.id).is_some() => Some(closure::derivation),
            Check::Shift if closure::SHIFTED_IDS.contains(&d.id) => Some(closure::shift),
            _ => continue,
        };
        let id = check.record_id(d.id);
        if !in_domain {
            out.push(skip(id, at));
            continue;
        }
        let lhs = (d.lhs)(at);
        let rhs = (d.rhs)(at);
        match route {
            None => {
                let ok = lhs == rhs.value;
                out.push(compare(id, at, rhs.case, ok, lhs, rhs.value));
            }
            Some(route) => match route(d.id, at) {
                Some(rec) => {
                    let ok = rec.lhs == lhs && rec.rhs == rhs.value;
                    out.push(compare(id, at, rhs.case, ok, rec.lhs, rec.rhs));
                }
                None => out.push(skip(id, at)),
            },
        }
    }
    out
}

/// Sweep the built-in registry.
pub fn run_verification(config: &RunConfig) -> Result<Report, VerifyError> {
    run_verification_with(registry(), config)
}

/// Sweep `registry` over the configured grid. Records are ordered by id,
/// then `n`, `p`, `q`, independent of evaluation order.
pub fn run_verification_with(
    registry: &Registry,
    config: &RunConfig,
) -> Result<Report, VerifyError> {
    let selected = select(registry, &config.identities)?;
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();

    let jobs: Vec<(&IdentityDescriptor, IdentityParams)> = selected
        .iter()
        .flat_map(|d| {
            d.grid(config.n_max, config.p_max, config.q_max)
                .into_iter()
                .map(move |at| (*d, at))
        })
        .collect();

    let mut records: Vec<VerificationRecord> = jobs
        .par_iter()
        .flat_map_iter(|(d, at)| check_point(d, at, &checks))
        .collect();
    records.sort_by(|a, b| (&a.id, a.n, a.p, a.q).cmp(&(&b.id, b.n, b.p, b.q)));

    if config.fail_fast {
        if let Some(first) = records.iter().position(|r| r.status == Status::Mismatch) {
            records.truncate(first + 1);
        }
    }

    Ok(Report {
        summary: Summary::tally(&records),
        records,
    })
}

pub fn write_json_lines<W: Write>(
    records: &[VerificationRecord],
    mut out: W,
) -> Result<(), VerifyError> {
    for r in records {
        writeln!(out, "{}", r.to_json())?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct CsvRow<'a> {
    id: &'a str,
    n: u32,
    p: u32,
    q: u32,
    case: &'a str,
    status: String,
    lhs: String,
    rhs: String,
}

pub fn write_csv<W: Write>(records: &[VerificationRecord], out: W) -> Result<(), VerifyError> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(CsvRow {
            id: &r.id,
            n: r.n,
            p: r.p,
            q: r.q,
            case: r.case.map(CaseTag::label).unwrap_or(""),
            status: r.status.to_string(),
            lhs: r.lhs.as_ref().map(ToString::to_string).unwrap_or_default(),
            rhs: r.rhs.as_ref().map(ToString::to_string).unwrap_or_default(),
        })?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_table<W: Write>(report: &Report, mut out: W) -> Result<(), VerifyError> {
    let width = report
        .records
        .iter()
        .map(|r| r.id.len())
        .max()
        .unwrap_or(2)
        .max(2);
    writeln!(
        out,
        "{:<width$}  {:>3} {:>3} {:>3}  {:<4} {:<8}  lhs / rhs",
        "id", "n", "p", "q", "case", "status"
    )?;
    for r in &report.records {
        let sides = match (&r.lhs, &r.rhs) {
            (Some(l), Some(rr)) if l == rr => l.to_string(),
            (Some(l), Some(rr)) => format!("{l} != {rr}"),
            _ => "-".to_string(),
        };
        writeln!(
            out,
            "{:<width$}  {:>3} {:>3} {:>3}  {:<4} {:<8}  {}",
            r.id,
            r.n,
            r.p,
            r.q,
            r.case.map(CaseTag::label).unwrap_or("-"),
            r.status,
            sides
        )?;
    }
    writeln!(out, "{}", report.summary)?;
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn only(id: &str) -> IdentityFilter {
        IdentityFilter::Only(vec![id.to_string()])
    }

    #[test]
    fn harmonic_a_small_grid() {
        let config = RunConfig {
            identities: only("harmonic-a"),
            n_max: 3,
            p_max: 1,
            q_max: 1,
            ..RunConfig::default()
        };
        let report = run_verification(&config).unwrap();
        assert_eq!(report.summary.total, 16);
        assert_eq!(report.summary.passed, 16);
        assert!(report.summary.success());
    }

    #[test]
    fn guard_skips_everything_below_bound() {
        let config = RunConfig {
            identities: only("alt-k3Hk2"),
            n_max: 3,
            ..RunConfig::default()
        };
        let report = run_verification(&config).unwrap();
        assert_eq!(report.summary.total, 4);
        assert_eq!(report.summary.skipped, 4);
        assert!(report.records.iter().all(|r| r.lhs.is_none()));
    }

    #[test]
    fn n_zero_sweep() {
        let config = RunConfig {
            n_max: 0,
            p_max: 0,
            q_max: 0,
            ..RunConfig::default()
        };
        let report = run_verification(&config).unwrap();
        assert_eq!(report.summary.total, 28);
        assert_eq!(report.summary.mismatched, 0);
        for r in &report.records {
            let shifted = registry().get(&r.id).unwrap().domain.min_n > 0;
            assert_eq!(r.status == Status::Skip, shifted, "{}", r.id);
        }
    }

    #[test]
    fn unknown_identity_rejected_before_work() {
        let config = RunConfig {
            identities: IdentityFilter::Only(vec!["harmonic-a".into(), "nope".into()]),
            ..RunConfig::default()
        };
        assert!(matches!(
            run_verification(&config),
            Err(VerifyError::Identity(IdentityError::UnknownIdentity(_)))
        ));
    }

    #[test]
    fn ordering_is_lexicographic() {
        let config = RunConfig {
            identities: IdentityFilter::Only(vec!["thm-a".into(), "harmonic-d".into()]),
            n_max: 2,
            p_max: 2,
            q_max: 1,
            checks: vec![Check::Derivation, Check::Equality],
            ..RunConfig::default()
        };
        let report = run_verification(&config).unwrap();
        let keys: Vec<_> = report
            .records
            .iter()
            .map(|r| (r.id.clone(), r.n, r.p, r.q))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(keys.iter().any(|k| k.0 == "thm-a:derivation"));
        assert!(report.summary.success());
    }

    #[test]
    fn json_shape() {
        let r = VerificationRecord {
            id: "thm-e".into(),
            n: 2,
            p: 0,
            q: 0,
            case: Some(CaseTag::V),
            status: Status::Pass,
            lhs: Some(Rational::new(1, 4)),
            rhs: Some(Rational::new(1, 4)),
        };
        assert_eq!(
            r.to_json(),
            r#"{"id":"thm-e","n":2,"p":0,"q":0,"case":"V","status":"PASS","lhs":"1/4","rhs":"1/4"}"#
        );
        let star = VerificationRecord {
            case: Some(CaseTag::Wstar),
            status: Status::Skip,
            lhs: None,
            rhs: None,
            ..r
        };
        assert!(star
            .to_json()
            .contains(r#""case":"W*","status":"SKIP","lhs":null"#));
    }

    #[test]
    fn fail_fast_stops_at_first_mismatch() {
        let corrupted = registry()
            .clone()
            .with_rhs("thm-c", |p| {
                crate::identities::ClosedForm::plain(
                    crate::identities::squared::thm_c_rhs(p) + Rational::one(),
                )
            })
            .unwrap();
        let config = RunConfig {
            identities: IdentityFilter::Only(vec!["thm-c".into(), "thm-d".into()]),
            n_max: 3,
            p_max: 1,
            q_max: 1,
            fail_fast: true,
            ..RunConfig::default()
        };
        let report = run_verification_with(&corrupted, &config).unwrap();
        assert_eq!(report.summary.mismatched, 1);
        assert_eq!(report.records.len(), 1);
        assert_eq!(report.records[0].status, Status::Mismatch);
    }

    #[test]
    fn table_and_csv_render() {
        let config = RunConfig {
            identities: only("harmonic-d"),
            n_max: 1,
            p_max: 1,
            q_max: 0,
            ..RunConfig::default()
        };
        let report = run_verification(&config).unwrap();
        let mut csv_out = Vec::new();
        report.write(OutputFormat::Csv, &mut csv_out).unwrap();
        let csv_text = String::from_utf8(csv_out).unwrap();
        assert!(csv_text.starts_with("id,n,p,q,case,status,lhs,rhs\n"));
        assert_eq!(csv_text.lines().count(), 5);
        let mut table = Vec::new();
        report.write(OutputFormat::Table, &mut table).unwrap();
        let table = String::from_utf8(table).unwrap();
        assert!(table.contains("harmonic-d"));
        assert!(table.trim_end().ends_with("mismatched=0"));
    }
}
