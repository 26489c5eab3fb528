//! Batch verification of registry identities over parameter grids.
//!
//! A [`SuiteConfig`] selects identities, precision and an optional explicit
//! grid; [`run_suite`] fans the `(identity, point)` jobs out over a bounded
//! rayon pool and assembles a [`SuiteReport`] sorted by registry order and
//! point. Reports render as JSON, CSV or plain text.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::fs::File;
use std::io::Write as _;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler_sums::{find, registry, verify_identity, IdentityEntry, ParamPoint};
use crate::precision::PrecisionContext;
use crate::scalar::Real;
use crate::Mp;

/// Report serialisation format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            _ => Err(Error::Config(format!("unknown format `{s}`, expected json, csv or text"))),
        }
    }
}

/// Which identities to run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSelection", into = "RawSelection")]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawSelection {
    Word(String),
    List(Vec<String>),
}

impl TryFrom<RawSelection> for Selection {
    type Error = String;

    fn try_from(raw: RawSelection) -> std::result::Result<Self, String> {
        match raw {
            RawSelection::Word(w) if w == "all" => Ok(Selection::All),
            RawSelection::Word(w) => Err(format!("identities must be a list or \"all\", got \"{w}\"")),
            RawSelection::List(ids) => Ok(Selection::Ids(ids)),
        }
    }
}

impl From<Selection> for RawSelection {
    fn from(s: Selection) -> Self {
        match s {
            Selection::All => RawSelection::Word("all".into()),
            Selection::Ids(ids) => RawSelection::List(ids),
        }
    }
}

fn one() -> usize {
    1
}

/// Suite settings, usually read from a JSON file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub identities: Selection,
    pub digits: u32,
    /// Explicit points per identity id, replacing its default grid.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_override: Option<BTreeMap<String, Vec<ParamPoint>>>,
    #[serde(default = "one")]
    pub workers: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
    #[serde(default)]
    pub format: ReportFormat,
}

impl SuiteConfig {
    pub fn new(identities: Selection, digits: u32) -> Self {
        Self {
            identities,
            digits,
            grid_override: None,
            workers: 1,
            output_path: None,
            format: ReportFormat::Json,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Checks every invariant without evaluating anything.
    pub fn validate(&self) -> Result<()> {
        if self.digits < 10 {
            return Err(Error::Config(format!("digits must be at least 10, got {}", self.digits)));
        }
        if self.workers < 1 {
            return Err(Error::Config("workers must be at least 1".into()));
        }
        let ids = self.selected_ids()?;
        if let Some(grid) = &self.grid_override {
            for key in grid.keys() {
                if !ids.iter().any(|id| id == key) {
                    return Err(Error::Config(format!("grid_override names `{key}`, which is not selected")));
                }
            }
        }
        Ok(())
    }

    /// Selected ids in registry order.
    pub fn selected_ids(&self) -> Result<Vec<String>> {
        let all: Vec<&'static str> = registry::<f64>().iter().map(|e| e.id).collect();
        match &self.identities {
            Selection::All => Ok(all.iter().map(|s| s.to_string()).collect()),
            Selection::Ids(ids) => {
                if ids.is_empty() {
                    return Err(Error::Config("no identities selected".into()));
                }
                for id in ids {
                    if !all.contains(&id.as_str()) {
                        return Err(Error::Config(format!("unknown identity `{id}`")));
                    }
                }
                Ok(all.iter().filter(|a| ids.iter().any(|i| i == *a)).map(|s| s.to_string()).collect())
            }
        }
    }
}

/// Outcome of an amended right-hand side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AmendedRecord {
    pub note: String,
    pub residual: String,
    pub pass: bool,
}

/// One `(identity, point)` verification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteRecord {
    pub id: String,
    pub equation: String,
    pub params: ParamPoint,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
    pub budget: String,
    pub pass: bool,
    pub ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amended: Option<AmendedRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub worst_residual: String,
    pub total_ms: u64,
    /// One line per failing record: equation, point and residual.
    pub suspected_typos: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub results: Vec<SuiteRecord>,
    pub summary: SuiteSummary,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn render(&self, format: ReportFormat) -> Result<String> {
        match format {
            ReportFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Text => Ok(self.to_string()),
        }
    }

    fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(["id", "equation", "params", "residual", "budget", "pass", "ms"]).map_err(io)?;
        for r in &self.results {
            w.write_record([
                r.id.as_str(),
                r.equation.as_str(),
                &r.params.to_string(),
                &r.residual,
                &r.budget,
                if r.pass { "true" } else { "false" },
                &r.ms.to_string(),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }
}

fn short(s: &str) -> String {
    s.parse::<f64>().map(|v| format!("{v:.3e}")).unwrap_or_else(|_| s.to_string())
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            let status = if r.pass { "PASS" } else { "FAIL" };
            write!(f, "{status} {:<6} {:<28} ", r.id, r.params.to_string())?;
            match &r.error {
                Some(e) => write!(f, "error: {e}")?,
                None => write!(f, "residual {} budget {}", short(&r.residual), short(&r.budget))?,
            }
            if let Some(a) = &r.amended {
                let verdict = if a.pass { "passes" } else { "fails" };
                write!(f, " [amended form {verdict}, residual {}]", short(&a.residual))?;
            }
            writeln!(f, " {} ms", r.ms)?;
        }
        let s = &self.summary;
        writeln!(
            f,
            "{} of {} passed, {} failed; worst residual {}; {} ms",
            s.passed,
            s.total,
            s.failed,
            short(&s.worst_residual),
            s.total_ms
        )?;
        for line in &s.suspected_typos {
            writeln!(f, "suspected typo: {line}")?;
        }
        Ok(())
    }
}

fn sci(v: &Mp, ctx: &PrecisionContext) -> String {
    v.to_sci_string(ctx.working_digits() as usize)
}

/// Verifies one point and packages the outcome. Evaluation errors become a
/// failed record.
pub fn verify_record(entry: &IdentityEntry<Mp>, pt: &ParamPoint, ctx: &PrecisionContext) -> SuiteRecord {
    let start = Instant::now();
    let outcome = verify_identity(entry, pt, ctx);
    let ms = start.elapsed().as_millis() as u64;
    let mut rec = SuiteRecord {
        id: entry.id.to_string(),
        equation: entry.equation.to_string(),
        params: pt.clone(),
        lhs: String::new(),
        rhs: String::new(),
        residual: "nan".into(),
        budget: "nan".into(),
        pass: false,
        ms,
        error: None,
        amended: None,
    };
    match outcome {
        Ok(r) => {
            rec.lhs = sci(&r.lhs.value, ctx);
            rec.rhs = sci(&r.rhs.value, ctx);
            rec.residual = sci(&r.residual, ctx);
            rec.budget = sci(&r.budget, ctx);
            rec.pass = r.pass;
            rec.amended = r.corrected.map(|c| AmendedRecord {
                note: c.note.to_string(),
                residual: sci(&c.residual, ctx),
                pass: c.pass,
            });
        }
        Err(e) => rec.error = Some(e.to_string()),
    }
    rec
}

/// Runs every selected `(identity, point)` pair, writes the report when an
/// output path is set, and returns it.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let ctx = PrecisionContext::new(config.digits)?;
    let mut sink = match &config.output_path {
        Some(path) => Some(
            File::create(path).map_err(|e| Error::Io(format!("cannot write `{}`: {e}", path.display())))?,
        ),
        None => None,
    };
    let ids = config.selected_ids()?;
    let mut jobs: Vec<(usize, IdentityEntry<Mp>, ParamPoint)> = Vec::new();
    for (rank, id) in ids.iter().enumerate() {
        let entry = find::<Mp>(id)?;
        let points = match config.grid_override.as_ref().and_then(|g| g.get(id)) {
            Some(points) => points.clone(),
            None => entry.default_grid(),
        };
        for pt in points {
            jobs.push((rank, entry.clone(), pt));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let start = Instant::now();
    let mut results: Vec<(usize, SuiteRecord)> = pool.install(|| {
        jobs.par_iter()
            .map(|(rank, entry, pt)| (*rank, verify_record(entry, pt, &ctx)))
            .collect()
    });
    let total_ms = start.elapsed().as_millis() as u64;
    results.sort_by(|a, b| (a.0, &a.1.params).cmp(&(b.0, &b.1.params)));
    let results: Vec<SuiteRecord> = results.into_iter().map(|(_, r)| r).collect();
    let summary = summarize(&results, total_ms, &ctx);
    let report = SuiteReport {
        config: config.clone(),
        results,
        summary,
    };
    if let Some(file) = sink.as_mut() {
        file.write_all(report.render(config.format)?.as_bytes())?;
    }
    Ok(report)
}

fn summarize(results: &[SuiteRecord], total_ms: u64, ctx: &PrecisionContext) -> SuiteSummary {
    let passed = results.iter().filter(|r| r.pass).count();
    let mut worst = Mp::zero(ctx.bits());
    let mut worst_text = sci(&worst, ctx);
    for r in results {
        if let Some(v) = Mp::parse_decimal(&r.residual, ctx.bits()) {
            if v.is_finite() && v > worst {
                worst_text = r.residual.clone();
                worst = v;
            }
        }
    }
    let suspected_typos = results
        .iter()
        .filter(|r| !r.pass)
        .map(|r| {
            let mut line = format!("{} at {}: ", r.equation, r.params);
            match &r.error {
                Some(e) => line.push_str(&format!("evaluation error: {e}")),
                None => {
                    let _ = write!(line, "residual {} exceeds budget {}", short(&r.residual), short(&r.budget));
                }
            }
            if let Some(a) = &r.amended {
                if a.pass {
                    let _ = write!(line, "; passes with {}", a.note);
                }
            }
            line
        })
        .collect();
    SuiteSummary {
        total: results.len(),
        passed,
        failed: results.len() - passed,
        worst_residual: worst_text,
        total_ms,
        suspected_typos,
    }
}

/// One line per registry entry with its equation label, description and domain.
pub fn list_identities() -> String {
    let mut out = String::new();
    for e in registry::<Mp>() {
        let _ = writeln!(out, "{} — {}  {}  [{}]", e.id, e.equation, e.quote, e.domain());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection_round_trips() {
        let cfg = SuiteConfig::from_json(r#"{"identities": "all", "digits": 20}"#).unwrap();
        assert_eq!(cfg.identities, Selection::All);
        assert_eq!(cfg.workers, 1);
        let text = serde_json::to_string(&cfg).unwrap();
        assert_eq!(SuiteConfig::from_json(&text).unwrap(), cfg);
        assert!(SuiteConfig::from_json(r#"{"identities": "some", "digits": 20}"#).is_err());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = SuiteConfig::from_json(r#"{"identities": ["E2.16"], "digits": 20, "threads": 2}"#).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn invalid_configs() {
        let mut cfg = SuiteConfig::new(Selection::Ids(vec!["bogus".into()]), 20);
        assert!(cfg.validate().is_err());
        cfg.identities = Selection::Ids(vec!["E2.16".into()]);
        cfg.validate().unwrap();
        cfg.digits = 9;
        assert!(cfg.validate().is_err());
        cfg.digits = 20;
        cfg.workers = 0;
        assert!(cfg.validate().is_err());
        cfg.workers = 2;
        cfg.grid_override = Some(BTreeMap::from([("E2.13".to_string(), vec![])]));
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn override_and_ordering() {
        let mut cfg = SuiteConfig::new(Selection::Ids(vec!["E2.22".into(), "E2.13".into()]), 20);
        let points = vec!["a=1/3,m=1".parse().unwrap(), "a=1/4,m=1".parse().unwrap()];
        cfg.grid_override = Some(BTreeMap::from([("E2.13".to_string(), points)]));
        cfg.workers = 2;
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.results[0].id, "E2.13");
        assert_eq!(report.results[0].params.to_string(), "a=1/4,m=1");
        assert_eq!(report.results[1].params.to_string(), "a=1/3,m=1");
        assert!(report.results[2..].iter().all(|r| r.id == "E2.22"));
        assert_eq!(report.summary.total, 2 + crate::euler_sums::default_grid("E2.22").unwrap().len());
        assert!(report.all_pass(), "{report}");
    }

    #[test]
    fn bad_point_is_a_failed_record() {
        let mut cfg = SuiteConfig::new(Selection::Ids(vec!["E2.13".into()]), 20);
        cfg.grid_override = Some(BTreeMap::from([("E2.13".to_string(), vec!["a=1,m=1".parse().unwrap()])]));
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.summary.failed, 1);
        assert!(report.results[0].error.is_some());
        assert_eq!(report.summary.suspected_typos.len(), 1);
    }

    #[test]
    fn csv_quotes_parameter_lists() {
        let mut cfg = SuiteConfig::new(Selection::Ids(vec!["E2.13".into()]), 20);
        cfg.grid_override = Some(BTreeMap::from([("E2.13".to_string(), vec!["a=1/2,m=2".parse().unwrap()])]));
        let csv = run_suite(&cfg).unwrap().render(ReportFormat::Csv).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("id,equation,params,residual,budget,pass,ms"));
        assert!(lines.next().unwrap().starts_with("E2.13,Eq. (2.13),\"a=1/2,m=2\","));
    }

    #[test]
    fn listing_has_every_entry() {
        let text = list_identities();
        assert_eq!(text.lines().count(), registry::<f64>().len());
        assert!(text.contains("E4.13 — Eq. (4.13)"));
    }
}
