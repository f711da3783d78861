//! Spectral statements about threshold graphs as computable formulas and
//! numeric predicates.
//!
//! Formulas (`inertia_formula`, `trivial_multiplicities`, `mu_indices`,
//! `closed_form_extremes`, ...) use only the block form of a graph. The
//! predicates compare them with numeric spectra from [`crate::eigen`].

use serde::Serialize;

use crate::eigen::{self, InertiaTriple, Spectrum};
use crate::graph::{Embedding, ThresholdGraph};
use crate::{Error, Result};

/// Endpoints of `Ω = [(-1-√2)/2, (-1+√2)/2]`.
pub fn omega() -> (f64, f64) {
    let lo = (-1.0 - std::f64::consts::SQRT_2) / 2.0;
    (lo, -1.0 - lo)
}

/// Inertia `(t, s - k, k)` from the block form.
pub fn inertia_formula(g: &ThresholdGraph) -> InertiaTriple {
    let k = g.block_count();
    InertiaTriple::new(g.ones(), g.zeros() - k, k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TrivialMultiplicities {
    /// Multiplicity of `-1`.
    pub minus_one: usize,
    /// Multiplicity of `0`.
    pub zero: usize,
}

/// `m_{-1} = t - k` and `m_0 = s - k`, with `m_{-1} = t - k + 1` when `s_1 = 1`.
pub fn trivial_multiplicities(g: &ThresholdGraph) -> TrivialMultiplicities {
    let k = g.block_count();
    let minus_one = if g.leading_zeros() == 1 { g.ones() - k + 1 } else { g.ones() - k };
    TrivialMultiplicities { minus_one, zero: g.zeros() - k }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NontrivialCounts {
    pub negatives: usize,
    pub positives: usize,
}

/// Number of non-trivial negative and positive eigenvalues: `(k, k)` when
/// `s_1 >= 2` and `(k - 1, k)` when `s_1 = 1`.
pub fn nontrivial_counts(g: &ThresholdGraph) -> NontrivialCounts {
    let k = g.block_count();
    let negatives = if g.leading_zeros() == 1 { k - 1 } else { k };
    NontrivialCounts { negatives, positives: k }
}

/// 1-based positions of `μ⁻` and `μ⁺` in the ascending spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MuIndices {
    pub minus: Option<usize>,
    pub plus: usize,
}

pub fn mu_indices(g: &ThresholdGraph) -> MuIndices {
    let k = g.block_count();
    let minus = if g.leading_zeros() == 1 { k.checked_sub(1).filter(|&i| i > 0) } else { Some(k) };
    MuIndices { minus, plus: g.order() - k + 1 }
}

/// `μ⁻(A_n)` and `μ⁺(A_n)` for one anti-regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AntiregularMu {
    pub order: usize,
    pub minus: Option<f64>,
    pub plus: f64,
}

pub fn antiregular_mu(n: usize) -> Result<AntiregularMu> {
    let a = ThresholdGraph::antiregular(n)?;
    let s = eigen::eigenvalues(&a.adjacency())?;
    Ok(AntiregularMu { order: n, minus: s.mu_minus(), plus: s.mu_plus()? })
}

/// An interval free of non-trivial eigenvalues, generated by `A_m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FreeInterval {
    pub lo: f64,
    pub hi: f64,
    /// Order `m` of the anti-regular graph whose `μ⁻`, `μ⁺` are the endpoints.
    pub source_order: usize,
}

/// `[μ⁻(A_m), μ⁺(A_m)]` for the largest anti-regular subgraph `A_m` of `g`.
///
/// `A_2 = K_2` has no eigenvalue below `-1`; for `m = 2` the left endpoint
/// falls back to `Ω`'s.
pub fn free_interval(g: &ThresholdGraph) -> Result<FreeInterval> {
    free_interval_for_order(g.antiregular_subgraph_order())
}

pub fn free_interval_for_order(m: usize) -> Result<FreeInterval> {
    let mu = antiregular_mu(m)?;
    Ok(free_interval_from(&mu))
}

pub fn free_interval_from(mu: &AntiregularMu) -> FreeInterval {
    FreeInterval { lo: mu.minus.unwrap_or(omega().0), hi: mu.plus, source_order: mu.order }
}

/// Non-trivial eigenvalues lying in `[lo + tol, hi - tol]`, where an
/// eigenvalue within `tol` of `-1` or `0` counts as trivial.
pub fn nontrivial_inside(spectrum: &Spectrum, lo: f64, hi: f64) -> Vec<f64> {
    let tol = spectrum.tol();
    spectrum
        .values()
        .iter()
        .copied()
        .filter(|&x| x >= lo + tol && x <= hi - tol)
        .filter(|&x| (x + 1.0).abs() > tol && x.abs() > tol)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InequalityReport {
    pub passed: bool,
    /// Smallest `rhs - lhs` over every checked `lhs <= rhs`.
    pub worst_margin: f64,
}

impl InequalityReport {
    fn from_margin(worst_margin: f64, tol: f64) -> Self {
        Self { passed: worst_margin >= -tol, worst_margin }
    }
}

/// Smallest slack in `λ_i(G) <= λ_i(H) <= λ_{n-m+i}(G)` for `i = 1..m`.
pub fn interlacing_margin(host: &Spectrum, guest: &Spectrum) -> f64 {
    let (n, m) = (host.len(), guest.len());
    (1..=m)
        .map(|i| (guest.get(i) - host.get(i)).min(host.get(n - m + i) - guest.get(i)))
        .fold(f64::INFINITY, f64::min)
}

/// Numerically checks Cauchy interlacing along an embedding.
pub fn verify_interlacing(host: &ThresholdGraph, guest: &ThresholdGraph, e: &Embedding) -> Result<InequalityReport> {
    if e.host() != host || e.guest() != guest {
        return Err(Error::InvalidEmbedding("embedding does not relate these graphs".into()));
    }
    e.validate()?;
    let hs = eigen::eigenvalues(&host.adjacency())?;
    let gs = eigen::eigenvalues(&guest.adjacency())?;
    Ok(InequalityReport::from_margin(interlacing_margin(&hs, &gs), hs.tol()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParityRow {
    pub k: usize,
    pub even_minus: f64,
    pub even_plus: f64,
    pub odd_minus: f64,
    pub odd_plus: f64,
}

/// `μ±(A_{2k})` and `μ±(A_{2k+1})` for `k = 2..=k_max`, plus the same data
/// by order for `n = 3..=2 k_max + 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParityTable {
    pub rows: Vec<ParityRow>,
    pub by_order: Vec<AntiregularMu>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityVerdicts {
    pub even_minus_increasing: bool,
    pub odd_minus_increasing: bool,
    pub even_plus_decreasing: bool,
    pub odd_plus_decreasing: bool,
    pub minus_below_limit: bool,
    pub plus_above_limit: bool,
    /// Odd `n`: `μ±(A_{n+1}) <= μ±(A_n)`; even `n`: `μ±(A_n) <= μ±(A_{n+1})`.
    pub odd_even_alternation: bool,
}

impl ParityVerdicts {
    pub fn all(&self) -> bool {
        self.even_minus_increasing
            && self.odd_minus_increasing
            && self.even_plus_decreasing
            && self.odd_plus_decreasing
            && self.minus_below_limit
            && self.plus_above_limit
            && self.odd_even_alternation
    }
}

pub fn parity_sequences(k_max: usize) -> Result<ParityTable> {
    if k_max < 2 {
        return Err(Error::OrderTooSmall { order: k_max, min: 2 });
    }
    let by_order = (3..=2 * k_max + 1).map(antiregular_mu).collect::<Result<Vec<_>>>()?;
    let at = |n: usize| &by_order[n - 3];
    let rows = (2..=k_max)
        .map(|k| {
            let (even, odd) = (at(2 * k), at(2 * k + 1));
            ParityRow {
                k,
                even_minus: even.minus.expect("A_n has an eigenvalue below -1 for n >= 3"),
                even_plus: even.plus,
                odd_minus: odd.minus.expect("A_n has an eigenvalue below -1 for n >= 3"),
                odd_plus: odd.plus,
            }
        })
        .collect();
    Ok(ParityTable { rows, by_order })
}

impl ParityTable {
    /// Strict claims (monotone steps, the limit brackets) need a margin above
    /// `tol`; the alternation inequalities may bind and get slack `tol`.
    pub fn verdicts(&self, tol: f64) -> ParityVerdicts {
        let (lo, hi) = omega();
        let increasing = |f: fn(&ParityRow) -> f64| self.rows.windows(2).all(|w| f(&w[1]) - f(&w[0]) > tol);
        let decreasing = |f: fn(&ParityRow) -> f64| self.rows.windows(2).all(|w| f(&w[0]) - f(&w[1]) > tol);
        let alternation = self.by_order.windows(2).all(|w| {
            let (a, b) = (&w[0], &w[1]);
            let (am, bm) = (a.minus.unwrap_or(f64::NEG_INFINITY), b.minus.unwrap_or(f64::NEG_INFINITY));
            if a.order % 2 == 1 {
                bm <= am + tol && b.plus <= a.plus + tol
            } else {
                am <= bm + tol && a.plus <= b.plus + tol
            }
        });
        ParityVerdicts {
            even_minus_increasing: increasing(|r| r.even_minus),
            odd_minus_increasing: increasing(|r| r.odd_minus),
            even_plus_decreasing: decreasing(|r| r.even_plus),
            odd_plus_decreasing: decreasing(|r| r.odd_plus),
            minus_below_limit: self.by_order.iter().all(|m| m.minus.is_some_and(|x| lo - x > tol)),
            plus_above_limit: self.by_order.iter().all(|m| m.plus - hi > tol),
            odd_even_alternation: alternation,
        }
    }
}

/// Uniform-block graphs `G' = (0^s 1^t)^k` and `G'' = (0^σ 1^τ)^k` built from
/// the minimum and maximum run lengths, so that `G' ⊆ G ⊆ G''`.
///
/// Fails only when `G''` would exceed [`crate::MAX_ORDER`].
pub fn sandwich(g: &ThresholdGraph) -> Result<(ThresholdGraph, ThresholdGraph)> {
    let blocks = g.blocks();
    let k = blocks.len();
    let s = blocks.iter().map(|b| b.zeros).min().unwrap_or(1);
    let t = blocks.iter().map(|b| b.ones).min().unwrap_or(1);
    let sigma = blocks.iter().map(|b| b.zeros).max().unwrap_or(1);
    let tau = blocks.iter().map(|b| b.ones).max().unwrap_or(1);
    Ok((ThresholdGraph::uniform(s, t, k)?, ThresholdGraph::uniform(sigma, tau, k)?))
}

/// Checks `λ_i(G'') <= λ_i(G) <= λ_i(G')` for `i = 1..k` and
/// `λ_{n'-j}(G') <= λ_{n-j}(G) <= λ_{n''-j}(G'')` for `j = 0..k-1`.
pub fn sandwich_check(g: &ThresholdGraph) -> Result<InequalityReport> {
    let spectrum = eigen::eigenvalues(&g.adjacency())?;
    sandwich_check_with(g, &spectrum)
}

pub fn sandwich_check_with(g: &ThresholdGraph, spectrum: &Spectrum) -> Result<InequalityReport> {
    let (inner, outer) = sandwich(g)?;
    let si = eigen::eigenvalues(&inner.adjacency())?;
    let so = eigen::eigenvalues(&outer.adjacency())?;
    let (n, n1, n2) = (spectrum.len(), si.len(), so.len());
    let k = g.block_count();
    let mut worst = f64::INFINITY;
    for i in 1..=k {
        worst = worst.min(spectrum.get(i) - so.get(i));
        worst = worst.min(si.get(i) - spectrum.get(i));
    }
    for j in 0..k {
        worst = worst.min(spectrum.get(n - j) - si.get(n1 - j));
        worst = worst.min(so.get(n2 - j) - spectrum.get(n - j));
    }
    Ok(InequalityReport::from_margin(worst, spectrum.tol()))
}

/// Non-trivial eigenvalues `((τ-1) ± √((τ-1)² + 4τσ)) / 2` of `0^σ 1^τ`.
pub fn closed_form_extremes(sigma: usize, tau: usize) -> (f64, f64) {
    let (s, t) = (sigma as f64, tau as f64);
    let root = ((t - 1.0).powi(2) + 4.0 * t * s).sqrt();
    (((t - 1.0) - root) / 2.0, ((t - 1.0) + root) / 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlockBound {
    /// `σ_i = s_1 + ... + s_i`
    pub sigma: usize,
    /// `τ_i = t_i + ... + t_k`
    pub tau: usize,
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub per_block: Vec<BlockBound>,
    pub lower_bound_lambda_max: f64,
    pub upper_bound_lambda_min: f64,
}

/// Extremal eigenvalue bounds from the induced subgraphs `0^{σ_i} 1^{τ_i}`.
pub fn spectral_bounds(g: &ThresholdGraph) -> BoundsReport {
    let blocks = g.blocks();
    let mut per_block = Vec::with_capacity(blocks.len());
    let mut sigma = 0;
    let mut tau: usize = g.ones();
    for b in blocks {
        sigma += b.zeros;
        let (lo, hi) = closed_form_extremes(sigma, tau);
        per_block.push(BlockBound { sigma, tau, lo, hi });
        tau -= b.ones;
    }
    let lower_bound_lambda_max = per_block.iter().map(|b| b.hi).fold(f64::NEG_INFINITY, f64::max);
    let upper_bound_lambda_min = per_block.iter().map(|b| b.lo).fold(f64::INFINITY, f64::min);
    BoundsReport { per_block, lower_bound_lambda_max, upper_bound_lambda_min }
}

impl BoundsReport {
    /// Smallest slack of `bound <= λ_max` and `λ_min <= bound`.
    pub fn margin(&self, spectrum: &Spectrum) -> f64 {
        (spectrum.max() - self.lower_bound_lambda_max).min(self.upper_bound_lambda_min - spectrum.min())
    }
}

/// Signed distances from the anti-regular optimum. Both are nonnegative
/// when `A_n` has the smallest `μ⁺` and the largest `μ⁻`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConjectureMargins {
    /// `μ⁻(A_n) - μ⁻(G)`, absent when either side has no eigenvalue below `-1`.
    pub neg: Option<f64>,
    /// `μ⁺(G) - μ⁺(A_n)`.
    pub pos: f64,
}

pub fn conjecture_margins(g: &ThresholdGraph) -> Result<ConjectureMargins> {
    let spectrum = eigen::eigenvalues(&g.adjacency())?;
    conjecture_margins_with(&spectrum, &antiregular_mu(g.order())?)
}

pub fn conjecture_margins_with(spectrum: &Spectrum, reference: &AntiregularMu) -> Result<ConjectureMargins> {
    let neg = match (reference.minus, spectrum.mu_minus()) {
        (Some(a), Some(g)) => Some(a - g),
        _ => None,
    };
    Ok(ConjectureMargins { neg, pos: spectrum.mu_plus()? - reference.plus })
}
