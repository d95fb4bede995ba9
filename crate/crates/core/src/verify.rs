//! Sweeps family members, compares the published closed forms with the
//! colouring engine and the brute-force oracle, and renders the verdicts.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::chroma::{chi_minus, class_sizes, ChromaError, ChromaticCurlingResult, ColourAssignment};
use crate::families::{generate, Family, FamilyError, FamilySpec};
use crate::formulas::{claimed_values, stated_class_sizes, ClaimRecord};
use crate::oracle::{oracle_chromatic, OracleResult, DEFAULT_VERTEX_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Chroma(#[from] ChromaError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// Engine matches the claim, and the oracle too when it ran.
    Confirmed,
    /// Engine (and oracle, when it ran) disagree with the claim.
    PaperMismatch,
    /// Engine and oracle disagree. Always a failure.
    EngineOracleMismatch,
    /// No claim exists for this order.
    Skipped,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Confirmed => "CONFIRMED",
            Verdict::PaperMismatch => "PAPER_MISMATCH",
            Verdict::EngineOracleMismatch => "ENGINE_ORACLE_MISMATCH",
            Verdict::Skipped => "SKIPPED",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerdictRecord {
    pub claim: ClaimRecord,
    pub vertices: usize,
    pub engine: ChromaticCurlingResult,
    /// `None` when the graph is over the oracle budget.
    pub oracle: Option<OracleResult>,
    pub verdict: Verdict,
}

impl VerdictRecord {
    pub fn family(&self) -> Family {
        self.claim.family
    }

    pub fn n(&self) -> usize {
        self.claim.n
    }

    pub fn oracle_backed(&self) -> bool {
        self.oracle.is_some()
    }

    pub fn row(&self) -> ReportRow {
        ReportRow {
            family: self.claim.family.name(),
            n: self.claim.n,
            graph: self.claim.family.symbol(self.claim.n),
            vertices: self.vertices,
            chi: self.engine.chi,
            theta: join(self.engine.theta.as_slice()),
            cn_chi: self.engine.cn_chi,
            cnc_chi: self.engine.cnc_chi,
            claimed_cn: self.claim.claimed_cn,
            claimed_cnc: self.claim.claimed_cnc,
            oracle_chi: self.oracle.as_ref().map(|o| o.chi),
            oracle_theta: self.oracle.as_ref().map(|o| join(o.lex_max_theta.as_slice())),
            oracle_cn: self.oracle.as_ref().map(OracleResult::cn_chi),
            oracle_cnc: self.oracle.as_ref().map(OracleResult::cnc_chi),
            source: self.claim.source.clone(),
            verdict: self.verdict,
        }
    }
}

/// Flat form of a record, shared by the JSON-lines and CSV reports.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportRow {
    pub family: &'static str,
    pub n: usize,
    pub graph: String,
    pub vertices: usize,
    pub chi: usize,
    pub theta: String,
    pub cn_chi: usize,
    pub cnc_chi: u128,
    pub claimed_cn: Option<u64>,
    pub claimed_cnc: Option<u128>,
    pub oracle_chi: Option<usize>,
    pub oracle_theta: Option<String>,
    pub oracle_cn: Option<usize>,
    pub oracle_cnc: Option<u128>,
    pub source: String,
    pub verdict: Verdict,
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Checks one family member.
pub fn verify_one(family: Family, n: usize, vertex_budget: usize) -> Result<VerdictRecord, VerifyError> {
    let spec = FamilySpec::new(family, n)?;
    let graph = generate(spec)?;
    let engine = chi_minus(&graph)?;
    let oracle = oracle_chromatic(&graph, vertex_budget).ok();
    let claim = claimed_values(family, n).unwrap_or_else(|e| ClaimRecord {
        family,
        n,
        claimed_cn: None,
        claimed_cnc: None,
        source: e.to_string(),
    });

    let oracle_disagrees = oracle
        .as_ref()
        .is_some_and(|o| o.chi != engine.chi || o.lex_max_theta != engine.theta);
    let verdict = if oracle_disagrees {
        Verdict::EngineOracleMismatch
    } else {
        match (claim.claimed_cn, claim.claimed_cnc) {
            (Some(cn), Some(cnc)) if cn == engine.cn_chi as u64 && cnc == engine.cnc_chi => Verdict::Confirmed,
            (Some(_), Some(_)) => Verdict::PaperMismatch,
            _ => Verdict::Skipped,
        }
    };
    Ok(VerdictRecord {
        claim,
        vertices: graph.vertex_count(),
        engine,
        oracle,
        verdict,
    })
}

/// Checks every member of `family` with order in `orders`, in order.
pub fn verify_family(
    family: Family,
    orders: RangeInclusive<usize>,
    vertex_budget: usize,
) -> Result<Vec<VerdictRecord>, VerifyError> {
    orders
        .into_par_iter()
        .map(|n| verify_one(family, n, vertex_budget))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    /// Overrides the per-family default start when set.
    pub n_min: Option<usize>,
    /// Overrides the per-family default end when set.
    pub n_max: Option<usize>,
    pub vertex_budget: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            families: Family::ALL.to_vec(),
            n_min: None,
            n_max: None,
            vertex_budget: DEFAULT_VERTEX_BUDGET,
        }
    }
}

impl SweepConfig {
    /// Orders swept for `family`: paths 2..=12 and the rest 3..=10 unless
    /// overridden, never below the family's minimum.
    pub fn orders(&self, family: Family) -> RangeInclusive<usize> {
        let (lo, hi) = match family {
            Family::Path => (2, 12),
            _ => (3, 10),
        };
        let lo = self.n_min.unwrap_or(lo).max(family.min_order());
        let hi = self.n_max.unwrap_or(hi);
        lo..=hi
    }
}

/// Runs the whole sweep; records come back in (family, n) order regardless
/// of scheduling.
pub fn sweep(config: &SweepConfig) -> Result<Vec<VerdictRecord>, VerifyError> {
    let jobs: Vec<(Family, usize)> = config
        .families
        .iter()
        .flat_map(|&f| config.orders(f).map(move |n| (f, n)))
        .collect();
    jobs.into_par_iter()
        .map(|(f, n)| verify_one(f, n, config.vertex_budget))
        .collect()
}

pub fn has_engine_oracle_mismatch(records: &[VerdictRecord]) -> bool {
    records.iter().any(|r| r.verdict == Verdict::EngineOracleMismatch)
}

/// Whether `assignment` properly colours the family member and its class
/// sizes are the ones the published argument states (compared as
/// multisets, since drawings do not always number the classes in order).
pub fn witness_check(family: Family, n: usize, assignment: &ColourAssignment) -> Result<bool, VerifyError> {
    let graph = generate(FamilySpec::new(family, n)?)?;
    let mut sizes = class_sizes(&graph, assignment)?.0;
    let Some(mut stated) = stated_class_sizes(family, n) else {
        return Ok(false);
    };
    sizes.sort_unstable();
    stated.sort_unstable();
    Ok(sizes == stated)
}

pub fn render_table(records: &[VerdictRecord]) -> String {
    let header = [
        "family", "n", "graph", "|V|", "chi", "theta", "cn", "cnc", "claim cn", "claim cnc", "oracle",
        "verdict",
    ];
    let rows: Vec<[String; 12]> = records
        .iter()
        .map(|r| {
            let row = r.row();
            let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            [
                row.family.to_string(),
                row.n.to_string(),
                row.graph,
                row.vertices.to_string(),
                row.chi.to_string(),
                format!("({})", row.theta.replace(' ', ",")),
                row.cn_chi.to_string(),
                row.cnc_chi.to_string(),
                opt(row.claimed_cn.map(|v| v.to_string())),
                opt(row.claimed_cnc.map(|v| v.to_string())),
                match (row.oracle_cn, row.oracle_cnc) {
                    (Some(cn), Some(cnc)) => format!("{cn}/{cnc}"),
                    _ => "skipped".into(),
                },
                row.verdict.label().to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let text: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", text.join("  ").trim_end());
    };
    line(&header.map(String::from));
    for row in &rows {
        line(row);
    }
    let tally = |v: Verdict| records.iter().filter(|r| r.verdict == v).count();
    let _ = writeln!(
        out,
        "{} records: {} CONFIRMED, {} PAPER_MISMATCH, {} ENGINE_ORACLE_MISMATCH, {} SKIPPED",
        records.len(),
        tally(Verdict::Confirmed),
        tally(Verdict::PaperMismatch),
        tally(Verdict::EngineOracleMismatch),
        tally(Verdict::Skipped),
    );
    out
}

pub fn render_json_lines(records: &[VerdictRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(&r.row()).expect("rows serialize"));
        out.push('\n');
    }
    out
}

pub fn render_csv(records: &[VerdictRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r.row()).expect("rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}

/// The claims table for the swept orders as CSV.
pub fn render_claims_csv(config: &SweepConfig) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["family", "n", "claimedCn", "claimedCnc", "source"])
        .expect("in-memory writer");
    for &family in &config.families {
        for n in config.orders(family) {
            if let Ok(c) = claimed_values(family, n) {
                let cn = c.claimed_cn.map_or_else(String::new, |v| v.to_string());
                let cnc = c.claimed_cnc.map_or_else(String::new, |v| v.to_string());
                w.write_record([family.name(), &n.to_string(), &cn, &cnc, &c.source])
                    .expect("in-memory writer");
            }
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}
