//! Reports for the command line tool in text, JSON and CSV form.
//!
//! Every floating point value passes through [`Precision::round`] before it
//! is printed, in all three formats, so the renderings of one computation
//! carry identical numbers. JSON documents start with `schema_version`.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::analysis::{self, BlockBound, FreeInterval, ParityRow, ParityVerdicts};
use crate::eigen::{self, InertiaTriple};
use crate::enumeration::ScanReport;
use crate::graph::{Embedding, ThresholdGraph};
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_PRECISION: usize = 6;
pub const MAX_PRECISION: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (expected text, json or csv)")),
        }
    }
}

/// Number of decimals printed, at most [`MAX_PRECISION`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Precision(usize);

impl Default for Precision {
    fn default() -> Self {
        Precision(DEFAULT_PRECISION)
    }
}

impl Precision {
    pub fn new(digits: usize) -> Option<Self> {
        (digits <= MAX_PRECISION).then_some(Precision(digits))
    }

    pub fn digits(self) -> usize {
        self.0
    }

    /// Rounds half away from zero; `-0` becomes `0`.
    pub fn round(self, x: f64) -> f64 {
        if !x.is_finite() {
            return x;
        }
        let scale = 10f64.powi(self.0 as i32);
        let r = (x * scale).round() / scale;
        if r == 0.0 {
            0.0
        } else {
            r
        }
    }

    pub fn fmt(self, x: f64) -> String {
        format!("{:.*}", self.0, self.round(x))
    }

    fn opt(self, x: Option<f64>) -> String {
        x.map_or_else(|| "-".to_string(), |v| self.fmt(v))
    }

    fn csv_opt(self, x: Option<f64>) -> String {
        x.map_or_else(String::new, |v| self.fmt(v))
    }

    fn round_value(self, v: &mut Value) {
        match v {
            Value::Number(n) if n.is_f64() => {
                let r = self.round(n.as_f64().expect("f64 number"));
                *v = serde_json::Number::from_f64(r).map_or(Value::Null, Value::Number);
            }
            Value::Array(items) => items.iter_mut().for_each(|x| self.round_value(x)),
            Value::Object(map) => map.values_mut().for_each(|x| self.round_value(x)),
            _ => {}
        }
    }
}

/// A report that renders in all three formats.
pub trait Render: Serialize {
    fn command(&self) -> &'static str;
    fn text(&self, p: Precision) -> String;
    fn csv(&self, p: Precision) -> Result<String>;

    fn json(&self, p: Precision) -> String {
        let body = serde_json::to_value(self).expect("reports serialize");
        let mut doc = serde_json::Map::new();
        doc.insert("schema_version".into(), SCHEMA_VERSION.into());
        doc.insert("command".into(), self.command().into());
        if let Value::Object(fields) = body {
            doc.extend(fields);
        }
        let mut doc = Value::Object(doc);
        p.round_value(&mut doc);
        let mut out = serde_json::to_string_pretty(&doc).expect("json values serialize");
        out.push('\n');
        out
    }

    fn render(&self, format: Format, p: Precision) -> Result<String> {
        match format {
            Format::Text => Ok(self.text(p)),
            Format::Json => Ok(self.json(p)),
            Format::Csv => self.csv(p),
        }
    }
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Output(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphInfo {
    pub input: String,
    pub graph: String,
    pub compact: String,
    pub order: usize,
    pub blocks: usize,
}

impl GraphInfo {
    pub fn new(input: &str, g: &ThresholdGraph) -> Self {
        Self {
            input: input.to_string(),
            graph: g.to_string(),
            compact: g.to_compact(),
            order: g.order(),
            blocks: g.block_count(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Multiplicities {
    pub minus_one: usize,
    pub zero: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    #[serde(flatten)]
    pub info: GraphInfo,
    pub eigenvalues: Vec<f64>,
    pub inertia_numeric: InertiaTriple,
    pub inertia_formula: InertiaTriple,
    pub mu_minus: Option<f64>,
    pub mu_plus: f64,
    pub multiplicities_numeric: Multiplicities,
    pub multiplicities_formula: Multiplicities,
    pub free_interval: FreeInterval,
    pub lambda_min: f64,
    pub lambda_max: f64,
}

impl SpectrumReport {
    pub fn build(input: &str, g: &ThresholdGraph) -> Result<Self> {
        let s = eigen::eigenvalues(&g.adjacency())?;
        let f = analysis::trivial_multiplicities(g);
        Ok(Self {
            info: GraphInfo::new(input, g),
            eigenvalues: s.values().to_vec(),
            inertia_numeric: s.inertia(),
            inertia_formula: analysis::inertia_formula(g),
            mu_minus: s.mu_minus(),
            mu_plus: s.mu_plus()?,
            multiplicities_numeric: Multiplicities { minus_one: s.multiplicity(-1.0), zero: s.multiplicity(0.0) },
            multiplicities_formula: Multiplicities { minus_one: f.minus_one, zero: f.zero },
            free_interval: analysis::free_interval(g)?,
            lambda_min: s.min(),
            lambda_max: s.max(),
        })
    }

    fn classify(&self, x: f64) -> &'static str {
        let tol = eigen::DEFAULT_TOL;
        if Some(x) == self.mu_minus {
            "mu_minus"
        } else if x == self.mu_plus {
            "mu_plus"
        } else if (x + 1.0).abs() <= tol {
            "trivial_minus_one"
        } else if x.abs() <= tol {
            "trivial_zero"
        } else {
            "nontrivial"
        }
    }
}

impl Render for SpectrumReport {
    fn command(&self) -> &'static str {
        "spectrum"
    }

    fn text(&self, p: Precision) -> String {
        let mut out = String::new();
        let i = &self.info;
        let _ = writeln!(out, "graph      {} ({})", i.graph, i.compact);
        let _ = writeln!(out, "order      {}  blocks {}", i.order, i.blocks);
        let _ = writeln!(out, "inertia    {} numeric, {} formula", self.inertia_numeric, self.inertia_formula);
        let (mn, mf) = (self.multiplicities_numeric, self.multiplicities_formula);
        let _ = writeln!(out, "mult(-1)   {} numeric, {} formula", mn.minus_one, mf.minus_one);
        let _ = writeln!(out, "mult(0)    {} numeric, {} formula", mn.zero, mf.zero);
        let _ = writeln!(out, "mu-        {}", p.opt(self.mu_minus));
        let _ = writeln!(out, "mu+        {}", p.fmt(self.mu_plus));
        let fi = self.free_interval;
        let _ = writeln!(out, "free       [{}, {}] from A_{}", p.fmt(fi.lo), p.fmt(fi.hi), fi.source_order);
        let _ = writeln!(out, "lambda     min {}  max {}", p.fmt(self.lambda_min), p.fmt(self.lambda_max));
        let _ = writeln!(out, "eigenvalues");
        for (idx, &x) in self.eigenvalues.iter().enumerate() {
            let _ = writeln!(out, "{:>6}  {:>width$}  {}", idx + 1, p.fmt(x), self.classify(x), width = p.digits() + 6);
        }
        out
    }

    fn csv(&self, p: Precision) -> Result<String> {
        let rows = self
            .eigenvalues
            .iter()
            .enumerate()
            .map(|(idx, &x)| vec![(idx + 1).to_string(), p.fmt(x), self.classify(x).to_string()]);
        csv_table(&["index", "eigenvalue", "class"], rows)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsTable {
    #[serde(flatten)]
    pub info: GraphInfo,
    pub per_block: Vec<BlockBound>,
    pub lower_bound_lambda_max: f64,
    pub upper_bound_lambda_min: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub holds: bool,
}

impl BoundsTable {
    pub fn build(input: &str, g: &ThresholdGraph) -> Result<Self> {
        let s = eigen::eigenvalues(&g.adjacency())?;
        let b = analysis::spectral_bounds(g);
        Ok(Self {
            info: GraphInfo::new(input, g),
            holds: b.margin(&s) >= -eigen::DEFAULT_TOL,
            lower_bound_lambda_max: b.lower_bound_lambda_max,
            upper_bound_lambda_min: b.upper_bound_lambda_min,
            per_block: b.per_block,
            lambda_min: s.min(),
            lambda_max: s.max(),
        })
    }
}

impl Render for BoundsTable {
    fn command(&self) -> &'static str {
        "bounds"
    }

    fn text(&self, p: Precision) -> String {
        let w = p.digits() + 6;
        let mut out = String::new();
        let _ = writeln!(out, "graph  {} ({})", self.info.graph, self.info.compact);
        let _ = writeln!(out, "{:>5}  {:>6}  {:>6}  {:>w$}  {:>w$}", "i", "sigma", "tau", "lo", "hi");
        for (i, b) in self.per_block.iter().enumerate() {
            let _ = writeln!(out, "{:>5}  {:>6}  {:>6}  {:>w$}  {:>w$}", i + 1, b.sigma, b.tau, p.fmt(b.lo), p.fmt(b.hi));
        }
        let _ = writeln!(out, "lambda_min {}  <=  {}", p.fmt(self.lambda_min), p.fmt(self.upper_bound_lambda_min));
        let _ = writeln!(out, "lambda_max {}  >=  {}", p.fmt(self.lambda_max), p.fmt(self.lower_bound_lambda_max));
        let _ = writeln!(out, "bounds {}", if self.holds { "hold" } else { "VIOLATED" });
        out
    }

    fn csv(&self, p: Precision) -> Result<String> {
        let rows = self
            .per_block
            .iter()
            .enumerate()
            .map(|(i, b)| vec![(i + 1).to_string(), b.sigma.to_string(), b.tau.to_string(), p.fmt(b.lo), p.fmt(b.hi)]);
        csv_table(&["block", "sigma", "tau", "lo", "hi"], rows)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmbeddingInfo {
    pub antiregular: String,
    pub order: usize,
    pub indices: Vec<usize>,
    pub valid: bool,
    pub interlacing_margin: f64,
    pub interlacing_passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmbedReport {
    #[serde(flatten)]
    pub info: GraphInfo,
    pub m: usize,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub subgraph: EmbeddingInfo,
    pub supergraph: EmbeddingInfo,
}

impl EmbedReport {
    pub fn build(input: &str, g: &ThresholdGraph) -> Result<Self> {
        let describe = |e: &Embedding, antiregular: &ThresholdGraph| -> Result<EmbeddingInfo> {
            let r = analysis::verify_interlacing(e.host(), e.guest(), e)?;
            Ok(EmbeddingInfo {
                antiregular: antiregular.to_string(),
                order: antiregular.order(),
                indices: e.indices().to_vec(),
                valid: e.validate().is_ok(),
                interlacing_margin: r.worst_margin,
                interlacing_passed: r.passed,
            })
        };
        let sub = g.largest_antiregular_subgraph();
        let sup = g.smallest_antiregular_supergraph();
        Ok(Self {
            info: GraphInfo::new(input, g),
            m: sub.guest().order(),
            big_n: sup.host().order(),
            subgraph: describe(&sub, sub.guest())?,
            supergraph: describe(&sup, sup.host())?,
        })
    }

    pub fn passed(&self) -> bool {
        self.subgraph.valid && self.supergraph.valid && self.subgraph.interlacing_passed && self.supergraph.interlacing_passed
    }
}

fn join(indices: &[usize]) -> String {
    indices.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

impl Render for EmbedReport {
    fn command(&self) -> &'static str {
        "embed"
    }

    fn text(&self, p: Precision) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph  {} ({})", self.info.graph, self.info.compact);
        let _ = writeln!(out, "m = {}  N = {}", self.m, self.big_n);
        for (label, e) in [("A_m in G", &self.subgraph), ("G in A_N", &self.supergraph)] {
            let _ = writeln!(out, "{label}: {}", e.antiregular);
            let _ = writeln!(out, "  indices     {}", join(&e.indices));
            let _ = writeln!(out, "  valid       {}", e.valid);
            let _ = writeln!(
                out,
                "  interlacing {} (worst margin {})",
                if e.interlacing_passed { "pass" } else { "FAIL" },
                p.fmt(e.interlacing_margin)
            );
        }
        out
    }

    fn csv(&self, p: Precision) -> Result<String> {
        let rows = [("subgraph", &self.subgraph), ("supergraph", &self.supergraph)].map(|(role, e)| {
            vec![
                role.to_string(),
                e.order.to_string(),
                e.antiregular.clone(),
                join(&e.indices),
                e.valid.to_string(),
                p.fmt(e.interlacing_margin),
            ]
        });
        csv_table(&["role", "order", "antiregular", "indices", "valid", "interlacing_margin"], rows)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParityReport {
    pub k_max: usize,
    pub omega: (f64, f64),
    pub rows: Vec<ParityRow>,
    pub verdicts: ParityVerdicts,
}

impl ParityReport {
    pub fn build(k_max: usize) -> Result<Self> {
        let table = analysis::parity_sequences(k_max)?;
        let verdicts = table.verdicts(eigen::DEFAULT_TOL);
        Ok(Self { k_max, omega: analysis::omega(), rows: table.rows, verdicts })
    }
}

impl Render for ParityReport {
    fn command(&self) -> &'static str {
        "parity"
    }

    fn text(&self, p: Precision) -> String {
        let w = p.digits() + 6;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>4}  {:>w$}  {:>w$}  {:>w$}  {:>w$}",
            "k", "mu-(A_2k)", "mu+(A_2k)", "mu-(A_2k+1)", "mu+(A_2k+1)"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:>4}  {:>w$}  {:>w$}  {:>w$}  {:>w$}",
                r.k,
                p.fmt(r.even_minus),
                p.fmt(r.even_plus),
                p.fmt(r.odd_minus),
                p.fmt(r.odd_plus)
            );
        }
        let _ = writeln!(out, "limits  {}  {}", p.fmt(self.omega.0), p.fmt(self.omega.1));
        let v = &self.verdicts;
        for (name, ok) in [
            ("even_minus_increasing", v.even_minus_increasing),
            ("odd_minus_increasing", v.odd_minus_increasing),
            ("even_plus_decreasing", v.even_plus_decreasing),
            ("odd_plus_decreasing", v.odd_plus_decreasing),
            ("minus_below_limit", v.minus_below_limit),
            ("plus_above_limit", v.plus_above_limit),
            ("odd_even_alternation", v.odd_even_alternation),
        ] {
            let _ = writeln!(out, "{name:<22} {}", if ok { "pass" } else { "FAIL" });
        }
        out
    }

    fn csv(&self, p: Precision) -> Result<String> {
        let rows = self.rows.iter().map(|r| {
            vec![r.k.to_string(), p.fmt(r.even_minus), p.fmt(r.even_plus), p.fmt(r.odd_minus), p.fmt(r.odd_plus)]
        });
        csv_table(&["k", "even_minus", "even_plus", "odd_minus", "odd_plus"], rows)
    }
}

impl Render for ScanReport {
    fn command(&self) -> &'static str {
        "scan"
    }

    fn text(&self, p: Precision) -> String {
        let mut out = String::new();
        let checks: Vec<&str> = self.checks_run.iter().map(|c| c.name()).collect();
        let _ = writeln!(out, "n = {}  graphs = {}  checks = {}", self.n, self.graphs_scanned, checks.join(","));
        let _ = writeln!(out, "violations: {}", self.violations.len());
        for v in &self.violations {
            let _ = writeln!(out, "  {:<18} {}  margin {}  {}", v.check.name(), v.graph, p.fmt(v.margin), v.detail);
        }
        let _ = writeln!(out, "extremal");
        for (key, e) in &self.extremal {
            let _ = writeln!(out, "  {key:<16} {}  {}", p.fmt(e.value), e.graph);
        }
        if let Some(c) = &self.conjecture {
            let _ = writeln!(out, "conjecture vs {}", c.antiregular);
            let _ = writeln!(out, "  mu-(A_n) {}  mu+(A_n) {}", p.opt(c.antiregular_mu_minus), p.fmt(c.antiregular_mu_plus));
            if let Some(e) = &c.min_pos_margin {
                let _ = writeln!(out, "  min mu+ margin {}  {}", p.fmt(e.value), e.graph);
            }
            if let Some(e) = &c.min_neg_margin {
                let _ = writeln!(out, "  min mu- margin {}  {}", p.fmt(e.value), e.graph);
            }
            let _ = writeln!(out, "  counterexamples: {}", c.counterexamples.len());
            for x in &c.counterexamples {
                let _ = writeln!(out, "    COUNTEREXAMPLE {} {} margin {}", x.statistic, x.graph, p.fmt(x.margin));
            }
        }
        if let Some(list) = &self.critical {
            let _ = writeln!(out, "critical graphs: {}", list.len());
            for e in list {
                let flag = if e.counterexample { "  COUNTEREXAMPLE" } else { "" };
                let _ = writeln!(out, "  {:<28} mu- margin {}  mu+ margin {}{flag}", e.compact, p.opt(e.neg_margin), p.fmt(e.pos_margin));
            }
        }
        out
    }

    fn csv(&self, p: Precision) -> Result<String> {
        let mut rows = Vec::new();
        for v in &self.violations {
            rows.push(vec!["violation".into(), v.check.name().into(), v.graph.clone(), p.fmt(v.margin), String::new(), v.detail.clone()]);
        }
        for (key, e) in &self.extremal {
            rows.push(vec!["extremal".into(), key.clone(), e.graph.clone(), p.fmt(e.value), String::new(), String::new()]);
        }
        if let Some(c) = &self.conjecture {
            for x in &c.counterexamples {
                rows.push(vec!["counterexample".into(), x.statistic.into(), x.graph.clone(), p.fmt(x.margin), String::new(), String::new()]);
            }
        }
        if let Some(list) = &self.critical {
            for e in list {
                rows.push(vec![
                    "critical".into(),
                    e.compact.clone(),
                    e.graph.clone(),
                    p.fmt(e.pos_margin),
                    p.csv_opt(e.neg_margin),
                    if e.counterexample { "counterexample".into() } else { String::new() },
                ]);
            }
        }
        csv_table(&["kind", "key", "graph", "value", "value2", "note"], rows)
    }
}
