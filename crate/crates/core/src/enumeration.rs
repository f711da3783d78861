//! Exhaustive enumeration of connected threshold graphs and batch checks.
//!
//! A connected threshold graph on `n` vertices is a creation string with
//! `b_1 = 0` and `b_n = 1`; the `n - 2` middle characters are free, giving
//! `2^(n-2)` graphs. Graph number `i` has the binary digits of `i` as its
//! middle characters (most significant first), so enumeration order is the
//! lexicographic order of expanded strings.
//!
//! Scans evaluate graphs independently and merge results in enumeration
//! order, so the report does not depend on the number of worker threads.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{self, AntiregularMu, ConjectureMargins, FreeInterval};
use crate::eigen::{self, Spectrum};
use crate::graph::{Embedding, ThresholdGraph};
use crate::{Error, Result};

/// Default upper bound on `n` for exhaustive scans (4096 graphs).
pub const DEFAULT_SCAN_CAP: usize = 14;

/// Hard limit on `n` regardless of overrides; `2^(n-2)` must fit the index.
pub const HARD_SCAN_CAP: usize = 40;

/// Values closer than this are ties for extremal statistics; the
/// lexicographically smaller string wins.
pub const TIE_TOL: f64 = 1e-9;

/// A conjecture margin below `-CONJECTURE_TOL` is reported as a counterexample.
pub const CONJECTURE_TOL: f64 = 1e-9;

/// Iterator over all connected threshold graphs of one order.
#[derive(Debug, Clone)]
pub struct Connected {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for Connected {
    type Item = ThresholdGraph;

    fn next(&mut self) -> Option<ThresholdGraph> {
        if self.next == self.end {
            return None;
        }
        let g = graph_at(self.n, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Connected {}

/// All `2^(n-2)` connected threshold graphs on `n` vertices in lexicographic
/// order, with `n` limited by [`DEFAULT_SCAN_CAP`].
pub fn enumerate_connected(n: usize) -> Result<Connected> {
    enumerate_connected_capped(n, DEFAULT_SCAN_CAP)
}

pub fn enumerate_connected_capped(n: usize, cap: usize) -> Result<Connected> {
    check_order(n, 2, cap)?;
    Ok(Connected { n, next: 0, end: graph_count(n) })
}

pub fn graph_count(n: usize) -> u64 {
    1u64 << (n - 2)
}

fn check_order(n: usize, min: usize, cap: usize) -> Result<()> {
    if n < min {
        return Err(Error::OrderTooSmall { order: n, min });
    }
    let max = cap.min(HARD_SCAN_CAP);
    if n > max {
        return Err(Error::TooLarge { order: n, max });
    }
    Ok(())
}

/// The `index`th connected graph on `n` vertices.
pub fn graph_at(n: usize, index: u64) -> ThresholdGraph {
    let mut bits = vec![0u8; n];
    bits[n - 1] = 1;
    for pos in 1..n - 1 {
        let shift = n - 2 - pos;
        bits[pos] = ((index >> shift) & 1) as u8;
    }
    ThresholdGraph::from_bits(&bits).expect("b_1 = 0 and b_n = 1 by construction")
}

/// Graphs on which the interlacing argument for anti-regular optimality
/// does not apply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalList {
    pub n: usize,
    /// Run-length notation, e.g. `0^2 1^2 0 1 0 1`.
    pub strings: Vec<String>,
}

/// The `n - 2` critical graphs on `n` vertices.
///
/// For even `n = 2k + 2` these have `s_1 >= 2` and `k` blocks: either
/// `s_1 = 2` and exactly one other run has length two, or `s_1 = 3`. For odd
/// `n = 2k + 1` they have `s_1 = 1`, `k` blocks and exactly one run among
/// `t_1, s_2, t_2, ..., s_k, t_k` of length two. Order: the doubled run moves
/// left to right, and for even `n` the `s_1 = 3` graph comes last.
pub fn critical_graph_list(n: usize) -> Result<Vec<ThresholdGraph>> {
    if n < 4 {
        return Err(Error::OrderTooSmall { order: n, min: 4 });
    }
    let (k, lead) = if n.is_multiple_of(2) { ((n - 2) / 2, 2) } else { ((n - 1) / 2, 1) };
    let mut runs = vec![1usize; 2 * k];
    runs[0] = lead;
    let to_graph = |runs: &[usize]| {
        ThresholdGraph::from_blocks(runs.chunks(2).map(|c| (c[0], c[1]))).expect("positive runs")
    };
    let mut out = Vec::with_capacity(n - 2);
    for pos in 1..2 * k {
        runs[pos] = 2;
        out.push(to_graph(&runs));
        runs[pos] = 1;
    }
    if n.is_multiple_of(2) {
        runs[0] = 3;
        out.push(to_graph(&runs));
    }
    Ok(out)
}

pub fn critical_graphs(n: usize) -> Result<CriticalList> {
    let strings = critical_graph_list(n)?.iter().map(ThresholdGraph::to_compact).collect();
    Ok(CriticalList { n, strings })
}

/// Graph with the smallest minimum eigenvalue on `n` vertices; near-ties
/// (within [`TIE_TOL`]) go to the lexicographically smallest string.
pub fn extremal_min_eigenvalue(n: usize) -> Result<(ThresholdGraph, f64)> {
    extremal_min_eigenvalue_capped(n, DEFAULT_SCAN_CAP)
}

pub fn extremal_min_eigenvalue_capped(n: usize, cap: usize) -> Result<(ThresholdGraph, f64)> {
    check_order(n, 3, cap)?;
    let mut best: Option<(ThresholdGraph, f64)> = None;
    for g in enumerate_connected_capped(n, cap)? {
        let lmin = eigen::eigenvalues(&g.adjacency())?.min();
        if best.as_ref().is_none_or(|(_, v)| lmin < v - TIE_TOL) {
            best = Some((g, lmin));
        }
    }
    Ok(best.expect("at least one graph for n >= 2"))
}

/// Named batch checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Numeric inertia, non-trivial counts and `μ±` positions match the block formulas.
    Inertia,
    /// No non-trivial eigenvalue inside `Ω`.
    OmegaFree,
    /// No non-trivial eigenvalue inside `[μ⁻(A_m), μ⁺(A_m)]`.
    RefinedInterval,
    /// Multiplicities of `-1` and `0` match the block formulas.
    Multiplicities,
    /// Every non-trivial eigenvalue is simple.
    SimpleNontrivial,
    /// Margins against `A_n` for the optimality conjecture (never a violation).
    Conjecture,
    /// Closed-form extremal bounds bracket `λ_min` and `λ_max`.
    Bounds,
    /// Interlacing with the uniform-block graphs `G'` and `G''`.
    Sandwich,
    /// Anti-regular embeddings: validity, order formulas, maximality/minimality, interlacing.
    Embeddings,
    /// Power sums of the spectrum against edge and triangle counts.
    Moments,
    /// List the critical graphs and report their conjecture margins.
    Critical,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Inertia,
        Check::OmegaFree,
        Check::RefinedInterval,
        Check::Multiplicities,
        Check::SimpleNontrivial,
        Check::Conjecture,
        Check::Bounds,
        Check::Sandwich,
        Check::Embeddings,
        Check::Moments,
        Check::Critical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Inertia => "inertia",
            Check::OmegaFree => "omega_free",
            Check::RefinedInterval => "refined_interval",
            Check::Multiplicities => "multiplicities",
            Check::SimpleNontrivial => "simple_nontrivial",
            Check::Conjecture => "conjecture",
            Check::Bounds => "bounds",
            Check::Sandwich => "sandwich",
            Check::Embeddings => "embeddings",
            Check::Moments => "moments",
            Check::Critical => "critical",
        }
    }

    /// Parses a comma-separated list; `all` selects every check. The result
    /// is sorted and deduplicated.
    pub fn parse_list(text: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(item.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    /// Expanded creation string.
    pub graph: String,
    pub check: Check,
    /// Signed slack of the failed inequality, or minus the size of a count
    /// mismatch.
    pub margin: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Extremum {
    pub graph: String,
    pub value: f64,
}

/// A graph beating `A_n` on `μ⁺` or `μ⁻`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub graph: String,
    /// `mu_plus` or `mu_minus`.
    pub statistic: &'static str,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureSummary {
    pub antiregular: String,
    pub antiregular_mu_minus: Option<f64>,
    pub antiregular_mu_plus: f64,
    /// Smallest `μ⁺(G) - μ⁺(A_n)` over `G != A_n`.
    pub min_pos_margin: Option<Extremum>,
    /// Smallest `μ⁻(A_n) - μ⁻(G)` over `G != A_n` having `μ⁻`.
    pub min_neg_margin: Option<Extremum>,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriticalEntry {
    pub compact: String,
    pub graph: String,
    pub neg_margin: Option<f64>,
    pub pos_margin: f64,
    pub counterexample: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub n: usize,
    pub graphs_scanned: u64,
    pub checks_run: Vec<Check>,
    pub violations: Vec<Violation>,
    /// `min_mu_plus`, `max_mu_minus`, `min_lambda_min`, `max_lambda_max`.
    pub extremal: BTreeMap<String, Extremum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub critical: Option<Vec<CriticalEntry>>,
    /// Excluded from serialized output so reports are reproducible.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn counterexample_count(&self) -> usize {
        let conj = self.conjecture.as_ref().map_or(0, |c| c.counterexamples.len());
        let crit = self.critical.as_ref().map_or(0, |c| c.iter().filter(|e| e.counterexample).count());
        conj + crit
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOptions {
    pub checks: Vec<Check>,
    /// Worker threads; `1` runs on the calling thread.
    pub jobs: usize,
    pub cap: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self { checks: Check::ALL.to_vec(), jobs: 1, cap: DEFAULT_SCAN_CAP }
    }
}

impl ScanOptions {
    pub fn with_checks(checks: &[Check]) -> Self {
        let mut checks = checks.to_vec();
        checks.sort();
        checks.dedup();
        Self { checks, ..Self::default() }
    }
}

/// Spectra of the anti-regular graphs a scan compares against.
struct Context {
    tol: f64,
    /// Indexed by order; filled for `2..=2n-2` (at least `2..=n`).
    antiregular: Vec<Option<(Spectrum, AntiregularMu)>>,
    reference: AntiregularMu,
}

impl Context {
    fn new(n: usize) -> Result<Self> {
        let top = (2 * n - 2).max(n);
        let mut antiregular = vec![None; top + 1];
        for (m, slot) in antiregular.iter_mut().enumerate().skip(2) {
            let a = ThresholdGraph::antiregular(m)?;
            let s = eigen::eigenvalues(&a.adjacency())?;
            let mu = AntiregularMu { order: m, minus: s.mu_minus(), plus: s.mu_plus()? };
            *slot = Some((s, mu));
        }
        let reference = antiregular[n].as_ref().expect("filled").1;
        Ok(Self { tol: eigen::DEFAULT_TOL, antiregular, reference })
    }

    fn antiregular(&self, m: usize) -> &(Spectrum, AntiregularMu) {
        self.antiregular[m].as_ref().expect("anti-regular spectra cached up to 2n - 2")
    }

    fn free_interval(&self, m: usize) -> FreeInterval {
        analysis::free_interval_from(&self.antiregular(m).1)
    }
}

struct Outcome {
    graph: String,
    violations: Vec<Violation>,
    mu_plus: f64,
    mu_minus: Option<f64>,
    lambda_min: f64,
    lambda_max: f64,
    conjecture: Option<ConjectureMargins>,
}

/// Runs `options.checks` on every connected threshold graph of order `n`.
pub fn scan(n: usize, options: &ScanOptions) -> Result<ScanReport> {
    let started = Instant::now();
    check_order(n, 2, options.cap)?;
    let ctx = Context::new(n)?;
    let count = graph_count(n);
    let per_graph: Vec<Check> = options.checks.iter().copied().filter(|c| *c != Check::Critical).collect();
    let run = |i: u64| evaluate(&graph_at(n, i), &per_graph, &ctx);

    let outcomes: Vec<Outcome> = if options.jobs <= 1 {
        (0..count).map(run).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .expect("thread pool construction");
        pool.install(|| (0..count).into_par_iter().map(run).collect::<Result<_>>())?
    };

    let mut violations = Vec::new();
    let mut extremal: BTreeMap<String, Extremum> = BTreeMap::new();
    let reference_string = ThresholdGraph::antiregular(n)?.to_string();
    let mut conjecture = options.checks.contains(&Check::Conjecture).then(|| ConjectureSummary {
        antiregular: reference_string.clone(),
        antiregular_mu_minus: ctx.reference.minus,
        antiregular_mu_plus: ctx.reference.plus,
        min_pos_margin: None,
        min_neg_margin: None,
        counterexamples: Vec::new(),
    });

    for o in outcomes {
        violations.extend(o.violations);
        improve(&mut extremal, "min_mu_plus", &o.graph, o.mu_plus, true);
        if let Some(m) = o.mu_minus {
            improve(&mut extremal, "max_mu_minus", &o.graph, m, false);
        }
        improve(&mut extremal, "min_lambda_min", &o.graph, o.lambda_min, true);
        improve(&mut extremal, "max_lambda_max", &o.graph, o.lambda_max, false);

        if let (Some(summary), Some(margins)) = (conjecture.as_mut(), o.conjecture) {
            if o.graph == reference_string {
                continue;
            }
            fold_min(&mut summary.min_pos_margin, &o.graph, margins.pos);
            if margins.pos < -CONJECTURE_TOL {
                summary.counterexamples.push(Counterexample {
                    graph: o.graph.clone(),
                    statistic: "mu_plus",
                    margin: margins.pos,
                });
            }
            if let Some(neg) = margins.neg {
                fold_min(&mut summary.min_neg_margin, &o.graph, neg);
                if neg < -CONJECTURE_TOL {
                    summary.counterexamples.push(Counterexample {
                        graph: o.graph.clone(),
                        statistic: "mu_minus",
                        margin: neg,
                    });
                }
            }
        }
    }

    let critical = if options.checks.contains(&Check::Critical) && n >= 4 {
        let mut entries = Vec::with_capacity(n - 2);
        for g in critical_graph_list(n)? {
            let s = eigen::eigenvalues(&g.adjacency())?;
            let m = analysis::conjecture_margins_with(&s, &ctx.reference)?;
            entries.push(CriticalEntry {
                compact: g.to_compact(),
                graph: g.to_string(),
                neg_margin: m.neg,
                pos_margin: m.pos,
                counterexample: m.pos < -CONJECTURE_TOL || m.neg.is_some_and(|x| x < -CONJECTURE_TOL),
            });
        }
        Some(entries)
    } else if options.checks.contains(&Check::Critical) {
        Some(Vec::new())
    } else {
        None
    };

    Ok(ScanReport {
        n,
        graphs_scanned: count,
        checks_run: options.checks.clone(),
        violations,
        extremal,
        conjecture,
        critical,
        wall_time: started.elapsed(),
    })
}

fn improve(map: &mut BTreeMap<String, Extremum>, key: &str, graph: &str, value: f64, minimize: bool) {
    let better = match map.get(key) {
        None => true,
        Some(e) if minimize => value < e.value - TIE_TOL,
        Some(e) => value > e.value + TIE_TOL,
    };
    if better {
        map.insert(key.to_string(), Extremum { graph: graph.to_string(), value });
    }
}

fn fold_min(slot: &mut Option<Extremum>, graph: &str, value: f64) {
    if slot.as_ref().is_none_or(|e| value < e.value - TIE_TOL) {
        *slot = Some(Extremum { graph: graph.to_string(), value });
    }
}

fn evaluate(g: &ThresholdGraph, checks: &[Check], ctx: &Context) -> Result<Outcome> {
    let adjacency = g.adjacency();
    let s = eigen::eigenvalues(&adjacency)?;
    let name = g.to_string();
    let tol = ctx.tol;
    let mut violations = Vec::new();
    let mut fail = |check: Check, margin: f64, detail: String| {
        violations.push(Violation { graph: name.clone(), check, margin, detail });
    };
    let mut conjecture = None;

    for &check in checks {
        match check {
            Check::Inertia => {
                let numeric = s.inertia();
                let formula = analysis::inertia_formula(g);
                if numeric != formula {
                    let diff = numeric.negatives.abs_diff(formula.negatives)
                        + numeric.zeros.abs_diff(formula.zeros)
                        + numeric.positives.abs_diff(formula.positives);
                    fail(check, -(diff as f64), format!("numeric {numeric} vs formula {formula}"));
                }
                let idx = analysis::mu_indices(g);
                if s.mu_minus_index() != idx.minus || s.mu_plus_index() != Some(idx.plus) {
                    fail(check, -1.0, format!("mu positions {:?}/{:?} vs formula {idx:?}", s.mu_minus_index(), s.mu_plus_index()));
                }
                let counts = analysis::nontrivial_counts(g);
                let neg = s.values().iter().filter(|&&x| x < -1.0 - tol).count();
                let pos = s.values().iter().filter(|&&x| x > tol).count();
                if (neg, pos) != (counts.negatives, counts.positives) {
                    fail(check, -1.0, format!("non-trivial counts ({neg}, {pos}) vs formula {counts:?}"));
                }
            }
            Check::Multiplicities => {
                let f = analysis::trivial_multiplicities(g);
                let (m1, m0) = (s.multiplicity(-1.0), s.multiplicity(0.0));
                if (m1, m0) != (f.minus_one, f.zero) {
                    let diff = m1.abs_diff(f.minus_one) + m0.abs_diff(f.zero);
                    fail(check, -(diff as f64), format!("numeric (m_-1, m_0) = ({m1}, {m0}) vs formula {f:?}"));
                }
                if g.coduplicate_bound() > m1 || g.duplicate_bound() > m0 {
                    fail(check, -1.0, "duplicate-vertex lower bound exceeds multiplicity".into());
                }
            }
            Check::OmegaFree => {
                let (lo, hi) = analysis::omega();
                if let Some(m) = interior_margin(&s, lo, hi) {
                    fail(check, m, "non-trivial eigenvalue inside Omega".into());
                }
            }
            Check::RefinedInterval => {
                let fi = ctx.free_interval(g.antiregular_subgraph_order());
                if let Some(m) = interior_margin(&s, fi.lo, fi.hi) {
                    fail(check, m, format!("non-trivial eigenvalue inside [mu-(A_{0}), mu+(A_{0})]", fi.source_order));
                }
            }
            Check::SimpleNontrivial => {
                for (value, size) in s.clusters() {
                    if size > 1 && (value + 1.0).abs() > tol && value.abs() > tol {
                        fail(check, -((size - 1) as f64), format!("eigenvalue {value} has multiplicity {size}"));
                    }
                }
            }
            Check::Conjecture => {
                conjecture = Some(analysis::conjecture_margins_with(&s, &ctx.reference)?);
            }
            Check::Bounds => {
                let margin = analysis::spectral_bounds(g).margin(&s);
                if margin < -tol {
                    fail(check, margin, "closed-form bound not bracketing the extreme eigenvalues".into());
                }
            }
            Check::Sandwich => {
                let r = analysis::sandwich_check_with(g, &s)?;
                if !r.passed {
                    fail(check, r.worst_margin, "sandwich interlacing failed".into());
                }
            }
            Check::Embeddings => {
                for (detail, margin) in embedding_failures(g, &s, ctx) {
                    fail(check, margin, detail);
                }
            }
            Check::Moments => {
                let n = g.order() as f64;
                let scale = n * tol * adjacency.norm().max(1.0);
                let edges = g.edge_count() as f64;
                let triangles = triangle_count(g) as f64;
                for (p, expected) in [(1, 0.0), (2, 2.0 * edges), (3, 6.0 * triangles)] {
                    let err = (s.moment(p) - expected).abs();
                    if err > scale {
                        fail(check, -err, format!("power sum {p} is {} vs {expected}", s.moment(p)));
                    }
                }
            }
            Check::Critical => {}
        }
    }

    Ok(Outcome {
        graph: name.clone(),
        violations,
        mu_plus: s.mu_plus()?,
        mu_minus: s.mu_minus(),
        lambda_min: s.min(),
        lambda_max: s.max(),
        conjecture,
    })
}

/// Negative depth of the deepest non-trivial eigenvalue inside `[lo, hi]`.
fn interior_margin(s: &Spectrum, lo: f64, hi: f64) -> Option<f64> {
    analysis::nontrivial_inside(s, lo, hi)
        .into_iter()
        .map(|x| -(x - lo).min(hi - x))
        .reduce(f64::min)
}

fn embedding_failures(g: &ThresholdGraph, s: &Spectrum, ctx: &Context) -> Vec<(String, f64)> {
    let mut out = Vec::new();
    let sub = g.largest_antiregular_subgraph();
    let sup = g.smallest_antiregular_supergraph();
    let m = g.antiregular_subgraph_order();
    let big_n = g.antiregular_supergraph_order();

    if sub.guest().order() != m || !sub.guest().is_antiregular() {
        out.push((format!("largest anti-regular subgraph is not A_{m}"), -1.0));
    }
    if let Err(e) = sub.validate() {
        out.push((format!("subgraph embedding: {e}"), -1.0));
    }
    if sup.host().order() != big_n || !sup.host().is_antiregular() {
        out.push((format!("smallest anti-regular supergraph is not A_{big_n}"), -1.0));
    }
    if let Err(e) = sup.validate() {
        out.push((format!("supergraph embedding: {e}"), -1.0));
    }
    if big_n > 2 * g.order() - 2 {
        out.push((format!("N = {big_n} exceeds 2n - 2"), -1.0));
    }
    let larger = ThresholdGraph::antiregular(m + 1).expect("m + 1 >= 3");
    if Embedding::find(g, &larger).is_some() {
        out.push((format!("A_{} also embeds", m + 1), -1.0));
    }
    if big_n > 2 {
        let smaller = ThresholdGraph::antiregular(big_n - 1).expect("N - 1 >= 2");
        if Embedding::find(&smaller, g).is_some() {
            out.push((format!("embeds already in A_{}", big_n - 1), -1.0));
        }
    }
    let margin_sub = analysis::interlacing_margin(s, &ctx.antiregular(m).0);
    if margin_sub < -ctx.tol {
        out.push(("interlacing with A_m failed".into(), margin_sub));
    }
    let margin_sup = analysis::interlacing_margin(&ctx.antiregular(big_n).0, s);
    if margin_sup < -ctx.tol {
        out.push(("interlacing with A_N failed".into(), margin_sup));
    }
    out
}

/// Triangles in a threshold graph: a dominating vertex `j` closes a triangle
/// with every edge among the `j - 1` earlier vertices.
pub fn triangle_count(g: &ThresholdGraph) -> u64 {
    let mut edges = 0u64;
    let mut triangles = 0u64;
    for (j, b) in g.bits().into_iter().enumerate() {
        if b == 1 {
            triangles += edges;
            edges += j as u64;
        }
    }
    triangles
}
