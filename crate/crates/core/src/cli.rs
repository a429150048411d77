//! Command-line front end: argument types, the partials file reader, and the
//! three subcommands. The binary in `src/bin/genus.rs` is a thin wrapper.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embed_oracle::{self, OracleError, DEFAULT_BUDGET};
use crate::families::{
    build_table, closed_form, relation_report, FamilyError, FamilyId, FamilyTable,
};
use crate::graphfam::{
    compose_ladder, genus_poly_in, p52_sequences, GraphFamily, NamedFamily, PartialPolySet,
};
use crate::peaks::{check_peak_inequalities, verify_peaks_in, Subject};
use crate::seqcore::{is_log_concave, is_unimodal, mode_interval, GenusDistribution};

/// Graphs up to this many rotation systems are also enumerated under
/// `--method auto`.
const AUTO_ORACLE_LIMIT: u64 = 1 << 16;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Budget(String),
    #[error("write failed: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Budget(_) => 4,
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            OracleError::NonIntegerGenus { .. } => CliError::Verification(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::CrossCheckMismatch { .. }
            | FamilyError::NonIntegerEntry { .. }
            | FamilyError::BranchCoverage { .. } => CliError::Verification(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "genus",
    version,
    about = "Genus distributions of ladder surfaces and ladder graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print genus distributions.
    Dist(DistArgs),
    /// Run a verification sweep.
    Check(CheckArgs),
    /// Compose user-supplied partial polynomials with the surface families.
    Compose(ComposeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Family(FamilyId),
    Graph(GraphFamily),
    P52a,
    P52b,
    Custom,
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "p52a" => return Ok(Target::P52a),
            "p52b" => return Ok(Target::P52b),
            "custom" => return Ok(Target::Custom),
            _ => {}
        }
        if let Some(j) = s.strip_prefix('s') {
            return j
                .parse::<FamilyId>()
                .map(Target::Family)
                .map_err(|e| e.to_string());
        }
        s.parse::<GraphFamily>().map(Target::Graph).map_err(|_| {
            format!("unknown family '{s}' (expected s1..s11, L, CL, ML, RL, R, p52a, p52b, custom)")
        })
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Family(j) => write!(f, "{j}"),
            Target::Graph(g) => write!(f, "{g}"),
            Target::P52a => f.write_str("p52a"),
            Target::P52b => f.write_str("p52b"),
            Target::Custom => f.write_str("custom"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Recurrence,
    Auto,
    Oracle,
}

impl fmt::Display for MethodArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MethodArg::Closed => "closed",
            MethodArg::Recurrence => "recurrence",
            MethodArg::Auto => "auto",
            MethodArg::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Inclusive `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub start: u32,
    pub end: u32,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected a..b, got '{s}'"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad bound '{t}': {e}"))
        };
        let (start, end) = (parse(a)?, parse(b)?);
        if start > end {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(NRange { start, end })
    }
}

#[derive(Debug, Args)]
pub struct DistArgs {
    /// s1..s11, L, CL, ML, RL, R, p52a, p52b or custom
    #[arg(long)]
    pub family: Target,
    #[arg(long, conflicts_with = "n_range", required_unless_present_any = ["n_range", "graph"])]
    pub n: Option<u32>,
    /// Inclusive range, e.g. 1..20
    #[arg(long)]
    pub n_range: Option<NRange>,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Edge list for `--family custom`
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Maximum number of rotation systems the oracle may visit
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Peaks,
    Identities,
    Totals,
    Logconcave,
    P52,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub max_n: u32,
}

#[derive(Debug, Args)]
pub struct ComposeArgs {
    #[arg(long)]
    pub partials: PathBuf,
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// One emitted distribution. Field order is the serialized key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub subject: String,
    pub n: Option<u32>,
    pub method: String,
    pub min_genus: usize,
    pub counts: Vec<String>,
    pub unimodal: bool,
    pub log_concave: bool,
    pub modes: [usize; 2],
}

impl OutputRecord {
    pub fn new(
        subject: impl Into<String>,
        n: Option<u32>,
        method: impl Into<String>,
        d: &GenusDistribution,
    ) -> Self {
        let m = mode_interval(d).interval;
        OutputRecord {
            subject: subject.into(),
            n,
            method: method.into(),
            min_genus: d.offset(),
            counts: d.decimal_counts(),
            unimodal: is_unimodal(d),
            log_concave: is_log_concave(d),
            modes: [m.lo, m.hi],
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }
}

pub fn write_records(
    out: &mut dyn Write,
    records: &[OutputRecord],
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        Format::Csv if records.len() == 1 => {
            writeln!(out, "genus,count")?;
            for (k, c) in records[0].counts.iter().enumerate() {
                writeln!(out, "{},{}", records[0].min_genus + k, c)?;
            }
        }
        Format::Csv => {
            writeln!(out, "subject,n,genus,count")?;
            for r in records {
                let n = r.n.map(|n| n.to_string()).unwrap_or_default();
                for (k, c) in r.counts.iter().enumerate() {
                    writeln!(out, "{},{},{},{}", r.subject, n, r.min_genus + k, c)?;
                }
            }
        }
        Format::Table => {
            for (i, r) in records.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                let n = r.n.map(|n| format!(" n={n}")).unwrap_or_default();
                writeln!(out, "{}{} ({})", r.subject, n, r.method)?;
                let width = r.counts.iter().map(String::len).max().unwrap_or(1).max(5);
                writeln!(out, "{:>5}  {:>width$}", "genus", "count")?;
                for (k, c) in r.counts.iter().enumerate() {
                    writeln!(out, "{:>5}  {:>width$}", r.min_genus + k, c)?;
                }
                writeln!(
                    out,
                    "unimodal={} log_concave={} modes=[{},{}]",
                    r.unimodal, r.log_concave, r.modes[0], r.modes[1]
                )?;
            }
        }
    }
    Ok(())
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Dist(a) => {
            let records = cmd_dist(&a)?;
            write_records(out, &records, a.format)?;
        }
        Command::Check(a) => cmd_check(&a, out)?,
        Command::Compose(a) => {
            let record = cmd_compose(&a)?;
            write_records(out, &[record], a.format)?;
        }
    }
    Ok(())
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn cmd_dist(a: &DistArgs) -> Result<Vec<OutputRecord>, CliError> {
    if a.family == Target::Custom {
        if a.method != MethodArg::Oracle {
            return Err(usage("--family custom requires --method oracle"));
        }
        let path = a
            .graph
            .as_ref()
            .ok_or_else(|| usage("--family custom requires --graph <file>"))?;
        let text =
            fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let g = embed_oracle::parse_edge_list(&text)?;
        let d = embed_oracle::enumerate_distribution(&g, a.budget)?;
        return Ok(vec![OutputRecord::new("custom", None, "oracle", &d)]);
    }
    if a.graph.is_some() {
        return Err(usage("--graph is only valid with --family custom"));
    }
    let ns = match (a.n, a.n_range) {
        (Some(n), _) => NRange { start: n, end: n },
        (None, Some(r)) => r,
        (None, None) => return Err(usage("one of --n or --n-range is required")),
    };
    let n_values: Vec<u32> = (ns.start..=ns.end).collect();

    match (a.family, a.method) {
        (Target::Family(j), MethodArg::Closed) if !j.has_closed_form() => {
            return Err(usage(format!(
                "{j} has no closed form; use --method recurrence"
            )));
        }
        (Target::Graph(_) | Target::P52a | Target::P52b, MethodArg::Closed) => {
            return Err(usage(format!("{} has no closed form", a.family)));
        }
        (Target::Family(_) | Target::P52a | Target::P52b, MethodArg::Oracle) => {
            return Err(usage(
                "--method oracle applies to L, CL, ML, RL and custom graphs",
            ));
        }
        (Target::Graph(GraphFamily::R), MethodArg::Oracle) => {
            return Err(usage(
                "no edge-list construction for R; use --method recurrence",
            ));
        }
        _ => {}
    }

    if let Target::P52a | Target::P52b = a.family {
        let rows = p52_sequences(ns.end);
        return n_values
            .iter()
            .map(|&n| {
                let row = &rows[n as usize];
                let d = if a.family == Target::P52a {
                    Some(&row.p1)
                } else {
                    row.p2.as_ref()
                };
                let d = d.ok_or_else(|| {
                    usage(format!("{} is the zero polynomial at n={n}", a.family))
                })?;
                Ok(OutputRecord::new(
                    a.family.to_string(),
                    Some(n),
                    "recurrence",
                    d,
                ))
            })
            .collect();
    }

    if a.method == MethodArg::Oracle {
        let Target::Graph(family) = a.family else {
            unreachable!()
        };
        return n_values
            .iter()
            .map(|&n| {
                let d = oracle_poly(family, n, a.budget)?;
                Ok(OutputRecord::new(
                    a.family.to_string(),
                    Some(n),
                    "oracle",
                    &d,
                ))
            })
            .collect();
    }

    // closed, recurrence or auto for surface and graph families
    let table = build_table(ns.end + 1);
    n_values
        .par_iter()
        .map(|&n| {
            let d = formula_dist(&table, a.family, n, a.method)?;
            Ok(OutputRecord::new(
                a.family.to_string(),
                Some(n),
                a.method.to_string(),
                &d,
            ))
        })
        .collect()
}

fn oracle_poly(family: GraphFamily, n: u32, budget: u64) -> Result<GenusDistribution, CliError> {
    let fam = NamedFamily::new(family, n).map_err(|e| usage(e.to_string()))?;
    let g = embed_oracle::build_named_graph(fam)?;
    Ok(embed_oracle::enumerate_distribution(&g, budget)?)
}

fn formula_dist(
    table: &FamilyTable,
    target: Target,
    n: u32,
    method: MethodArg,
) -> Result<GenusDistribution, CliError> {
    match target {
        Target::Family(j) => {
            let rec = table.get(j, n).expect("table covers n");
            match method {
                MethodArg::Closed => Ok(closed_form(j, n)?),
                MethodArg::Recurrence => Ok(rec.clone()),
                _ => {
                    if j.has_closed_form() && n >= 1 {
                        let closed = closed_form(j, n)?;
                        if &closed != rec {
                            return Err(CliError::Verification(format!(
                                "{j} n={n}: closed form {closed} disagrees with recurrence {rec}"
                            )));
                        }
                    }
                    Ok(rec.clone())
                }
            }
        }
        Target::Graph(family) => {
            let fam = NamedFamily::new(family, n).map_err(|e| usage(e.to_string()))?;
            let d = genus_poly_in(table, fam).map_err(|e| usage(e.to_string()))?;
            if method == MethodArg::Auto && family != GraphFamily::R {
                if let Ok(g) = embed_oracle::build_named_graph(fam) {
                    if g.rotation_count() <= AUTO_ORACLE_LIMIT as u128 {
                        let o = embed_oracle::enumerate_distribution(&g, AUTO_ORACLE_LIMIT)?;
                        if o != d {
                            return Err(CliError::Verification(format!(
                                "{fam}: formula {d} disagrees with enumeration {o}"
                            )));
                        }
                    }
                }
            }
            Ok(d)
        }
        _ => unreachable!("handled by caller"),
    }
}

/// Parses a partials file: blocks of `part j`, `min_degree d`,
/// `coeffs c0 c1 ...`. `#` starts a comment; absent parts are zero.
pub fn parse_partials(text: &str) -> Result<PartialPolySet, CliError> {
    let mut parts: [Option<GenusDistribution>; 11] = Default::default();
    let mut seen = [false; 11];
    let mut current: Option<(usize, Option<usize>)> = None;

    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| usage(format!("partials line {}: {msg}", i + 1));
        let mut fields = line.split_whitespace();
        let key = fields.next().unwrap_or("");
        let rest: Vec<&str> = fields.collect();
        match key {
            "part" => {
                if let Some((j, _)) = current {
                    return Err(err(format!("part {} has no coeffs line", j + 1)));
                }
                let [j] = rest[..] else {
                    return Err(err("expected `part <j>`".into()));
                };
                let j = j.parse::<FamilyId>().map_err(|e| err(e.to_string()))?;
                let slot = j.get() as usize - 1;
                if seen[slot] {
                    return Err(err(format!("duplicate part {}", j.get())));
                }
                seen[slot] = true;
                current = Some((slot, None));
            }
            "min_degree" => {
                let Some((slot, None)) = current else {
                    return Err(err("min_degree must follow a part line".into()));
                };
                let [d] = rest[..] else {
                    return Err(err("expected `min_degree <d>`".into()));
                };
                let d = d
                    .parse::<usize>()
                    .map_err(|e| err(format!("bad min_degree: {e}")))?;
                current = Some((slot, Some(d)));
            }
            "coeffs" => {
                let Some((slot, Some(d))) = current else {
                    return Err(err("coeffs must follow part and min_degree".into()));
                };
                if rest.is_empty() {
                    return Err(err("coeffs needs at least one value".into()));
                }
                let coeffs = rest
                    .iter()
                    .map(|c| {
                        if c.starts_with('-') {
                            return Err(err(format!("negative coefficient {c}")));
                        }
                        c.parse::<BigUint>()
                            .map_err(|e| err(format!("bad coefficient {c}: {e}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if coeffs.iter().any(|c| !c.is_zero()) {
                    parts[slot] = Some(GenusDistribution::new(d, coeffs).expect("nonzero"));
                }
                current = None;
            }
            other => return Err(err(format!("unknown key '{other}'"))),
        }
    }
    if let Some((slot, _)) = current {
        return Err(usage(format!("partials: part {} is incomplete", slot + 1)));
    }
    PartialPolySet::new(parts).map_err(|e| usage(e.to_string()))
}

pub fn cmd_compose(a: &ComposeArgs) -> Result<OutputRecord, CliError> {
    let text = fs::read_to_string(&a.partials)
        .map_err(|e| usage(format!("{}: {e}", a.partials.display())))?;
    let partials = parse_partials(&text)?;
    let d = compose_ladder(&partials, a.n);
    Ok(OutputRecord::new("compose", Some(a.n), "recurrence", &d))
}

/// Tally of a check run. Findings are printed but never fail the run.
#[derive(Debug, Default)]
struct Report {
    asserted: usize,
    failed: usize,
}

impl Report {
    fn assert(&mut self, out: &mut dyn Write, ok: bool, line: impl fmt::Display) -> io::Result<()> {
        self.asserted += 1;
        if !ok {
            self.failed += 1;
        }
        writeln!(out, "{} {line}", if ok { "PASS" } else { "FAIL" })
    }

    fn finding(&self, out: &mut dyn Write, line: impl fmt::Display) -> io::Result<()> {
        writeln!(out, "FINDING {line}")
    }

    fn finish(self, out: &mut dyn Write, suite: &str) -> Result<(), CliError> {
        writeln!(
            out,
            "{suite}: {} checks, {} failed",
            self.asserted, self.failed
        )?;
        if self.failed > 0 {
            return Err(CliError::Verification(format!(
                "{suite}: {} of {} checks failed",
                self.failed, self.asserted
            )));
        }
        Ok(())
    }
}

pub fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let mut report = Report::default();
    let max_n = a.max_n;
    match a.suite {
        Suite::Peaks => {
            let table = build_table(max_n + 1);
            let subjects: Vec<Subject> = Subject::all().filter(|s| s.min_n() <= max_n).collect();
            let sweeps: Vec<_> = subjects
                .par_iter()
                .map(|&s| {
                    verify_peaks_in(&table, s, s.stated_range(max_n))
                        .expect("range starts at min_n")
                })
                .collect();
            for (subject, sweep) in subjects.iter().zip(&sweeps) {
                let stated: Vec<_> = sweep.results.iter().filter(|r| r.formula_stated).collect();
                let bad: Vec<_> = stated.iter().filter(|r| !r.agree).collect();
                let detail = bad
                    .iter()
                    .map(|r| {
                        let ceil = r
                            .ceiling_modes
                            .map(|c| format!(", ceiling {c}"))
                            .unwrap_or_default();
                        format!(
                            " n={}: formula {}{ceil}, computed {}",
                            r.n, r.formula_modes, r.empirical_modes
                        )
                    })
                    .collect::<String>();
                report.assert(
                    out,
                    bad.is_empty(),
                    format_args!(
                        "{subject} peak formula over {} values of n{detail}",
                        stated.len()
                    ),
                )?;
            }
            for c in check_peak_inequalities(&table, 1..=max_n) {
                report.assert(
                    out,
                    c.holds,
                    format_args!("{} at n={} (index {})", c.lemma, c.n, c.index),
                )?;
            }
        }
        Suite::Identities => {
            for c in relation_report(max_n) {
                let detail = c
                    .detail
                    .as_deref()
                    .map(|d| format!(": {d}"))
                    .unwrap_or_default();
                let line = format!("{} n={}{detail}", c.identity, c.n);
                if c.stated {
                    report.assert(out, c.passed, line)?;
                } else {
                    report.finding(
                        out,
                        format_args!("{} {line}", if c.passed { "holds" } else { "fails" }),
                    )?;
                }
            }
        }
        Suite::Totals => {
            let table = build_table(max_n);
            let mut power = BigUint::one();
            for n in 1..=max_n {
                power *= 4u32;
                for j in FamilyId::all() {
                    let total = table.get(j, n).expect("table covers n").total();
                    report.assert(out, total == power, format_args!("{j} n={n} total {total}"))?;
                }
            }
        }
        Suite::Logconcave => {
            let table = build_table(max_n);
            for j in FamilyId::all() {
                let rows: Vec<_> = (1..=max_n)
                    .map(|n| table.get(j, n).expect("table covers n"))
                    .collect();
                let non_uni: Vec<u32> = (1..=max_n)
                    .filter(|&n| !is_unimodal(rows[n as usize - 1]))
                    .collect();
                let non_lc: Vec<u32> = (1..=max_n)
                    .filter(|&n| !is_log_concave(rows[n as usize - 1]))
                    .collect();
                report.assert(
                    out,
                    non_uni.is_empty(),
                    format_args!("{j} unimodal for 1<=n<={max_n} {non_uni:?}"),
                )?;
                let line = format!("{j} log-concave for 1<=n<={max_n} {non_lc:?}");
                if matches!(j.get(), 1 | 4 | 6) {
                    report.assert(out, non_lc.is_empty(), line)?;
                } else {
                    report.finding(
                        out,
                        format_args!(
                            "{} {line}",
                            if non_lc.is_empty() { "holds" } else { "fails" }
                        ),
                    )?;
                }
            }
        }
        Suite::P52 => {
            for row in p52_sequences(max_n) {
                let p2 = match (&row.p2, row.p2_flags) {
                    (Some(p2), Some(f)) => format!(
                        "P2={p2} unimodal={} log_concave={}",
                        f.unimodal, f.log_concave
                    ),
                    _ => "P2=0".to_string(),
                };
                report.finding(
                    out,
                    format_args!(
                        "n={} P1 unimodal={} log_concave={} {p2}",
                        row.n, row.p1_flags.unimodal, row.p1_flags.log_concave
                    ),
                )?;
            }
        }
    }
    let name = format!("{:?}", a.suite).to_lowercase();
    report.finish(out, &name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_parsing() {
        assert_eq!(
            "s7".parse::<Target>().unwrap(),
            Target::Family(FamilyId::new(7).unwrap())
        );
        assert_eq!(
            "CL".parse::<Target>().unwrap(),
            Target::Graph(GraphFamily::CL)
        );
        assert_eq!("p52b".parse::<Target>().unwrap(), Target::P52b);
        assert!("s12".parse::<Target>().is_err());
        assert!("XL".parse::<Target>().is_err());
    }

    #[test]
    fn range_parsing() {
        assert_eq!(
            "3..7".parse::<NRange>().unwrap(),
            NRange { start: 3, end: 7 }
        );
        assert!("7..3".parse::<NRange>().is_err());
        assert!("7".parse::<NRange>().is_err());
    }

    #[test]
    fn partials_parsing() {
        let set = parse_partials("part 1\nmin_degree 1\ncoeffs 1\n").unwrap();
        let j1 = FamilyId::new(1).unwrap();
        assert_eq!(set.part(j1).unwrap().to_string(), "(1)@1");

        let dup =
            parse_partials("part 3\nmin_degree 0\ncoeffs 1\npart 3\nmin_degree 0\ncoeffs 2\n");
        assert!(matches!(dup, Err(CliError::Usage(m)) if m.contains("duplicate")));
        let neg = parse_partials("part 2\nmin_degree 0\ncoeffs 1 -4\n");
        assert!(matches!(neg, Err(CliError::Usage(m)) if m.contains("negative")));
        assert!(parse_partials("part 2\ncoeffs 1\n").is_err());
        assert!(parse_partials("# nothing\n").is_err());
    }

    #[test]
    fn csv_for_single_record() {
        let d = GenusDistribution::from_u64s(0, &[1]).unwrap();
        let mut buf = Vec::new();
        write_records(
            &mut buf,
            &[OutputRecord::new("s1", Some(0), "auto", &d)],
            Format::Csv,
        )
        .unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "genus,count\n0,1\n");
    }
}
