//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//! Runtime limits are checked against the build profile this runs under.

mod common;

use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use threshold_spectra::analysis::{self, ParityRow};
use threshold_spectra::eigen::{self, Spectrum};
use threshold_spectra::enumeration::{self, Check, ScanOptions};
use threshold_spectra::ThresholdGraph;

const THREE_BLOCKS: &str = "0^3 1^2 0^4 1^6 0^5 1^3";
const FIVE_BLOCKS: &str = "0^2 1^6 0^2 1^9 0^3 1 0^6 1^2 0^3 1^4";

const GOLDEN_TOL: f64 = 5e-6;
const EXTREME_TOL: f64 = 1e-4;
const CLASS_TOL: f64 = 1e-6;
const INTERLACING_SLACK: f64 = 1e-8;
const CONJECTURE_MARGIN: f64 = 1e-8;
const ORACLE_TOL: f64 = 1e-8;
const MOMENT_TOL: f64 = 1e-6;
const TIE_TOL: f64 = 1e-9;
const SWEEP_MAX: usize = 12;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

struct Entry {
    graph: ThresholdGraph,
    spectrum: Spectrum,
}

static SWEEP: OnceLock<Vec<Entry>> = OnceLock::new();

/// Every connected threshold graph with `2 <= n <= 12` and its spectrum.
fn sweep() -> &'static [Entry] {
    SWEEP.get_or_init(|| {
        (2..=SWEEP_MAX)
            .flat_map(|n| enumeration::enumerate_connected(n).unwrap())
            .map(|graph| {
                let spectrum = eigen::eigenvalues(&graph.adjacency()).unwrap();
                Entry { graph, spectrum }
            })
            .collect()
    })
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_time(t: Duration, limit: f64) -> Result<(), String> {
    ensure(t.as_secs_f64() < limit, || format!("took {:.2} s, limit {limit} s", t.as_secs_f64()))
}

fn five_block_golden() -> Outcome {
    let start = Instant::now();
    let g: ThresholdGraph = FIVE_BLOCKS.parse().map_err(|e| format!("{e}"))?;
    let bounds = analysis::spectral_bounds(&g);
    let golden = [
        (-1.91974, 22.91974),
        (-3.46586, 18.46586),
        (-4.61577, 10.61577),
        (-6.67878, 11.67878),
        (-6.63941, 9.63941),
    ];
    ensure(bounds.per_block.len() == 5, || format!("{} blocks", bounds.per_block.len()))?;
    let mut worst = 0.0f64;
    for (b, (lo, hi)) in bounds.per_block.iter().zip(golden) {
        worst = worst.max((b.lo - lo).abs()).max((b.hi - hi).abs());
    }
    ensure(worst <= GOLDEN_TOL, || format!("table deviates by {worst:e}"))?;
    let s = eigen::eigenvalues(&g.adjacency()).map_err(|e| e.to_string())?;
    let (dmin, dmax) = ((s.min() + 7.95182).abs(), (s.max() - 24.59001).abs());
    ensure(dmin <= EXTREME_TOL && dmax <= EXTREME_TOL, || {
        format!("lambda_min {} lambda_max {}", s.min(), s.max())
    })?;
    let t = start.elapsed();
    within_time(t, 1.0)?;
    Ok(format!(
        "bound table within {worst:.1e}; lambda_min {:.6}, lambda_max {:.6} ({:.3} s)",
        s.min(),
        s.max(),
        t.as_secs_f64()
    ))
}

fn inertia_theorem() -> Outcome {
    let start = Instant::now();
    let entries = sweep();
    for n in 2..=SWEEP_MAX {
        let count = entries.iter().filter(|e| e.graph.order() == n).count();
        ensure(count == 1 << (n - 2), || format!("{count} graphs on {n} vertices"))?;
    }
    // 2046 graphs with n >= 3, plus K_2.
    ensure(entries.len() == 2047, || format!("{} graphs enumerated", entries.len()))?;
    for e in entries {
        let f = analysis::inertia_formula(&e.graph);
        ensure(e.spectrum.inertia() == f, || format!("{}: inertia {} vs {f}", e.graph, e.spectrum.inertia()))?;
        let m = analysis::trivial_multiplicities(&e.graph);
        let numeric = (e.spectrum.multiplicity(-1.0), e.spectrum.multiplicity(0.0));
        ensure(numeric == (m.minus_one, m.zero), || format!("{}: multiplicities {numeric:?} vs {m:?}", e.graph))?;
    }
    let t = start.elapsed();
    within_time(t, 60.0)?;
    Ok(format!("{} graphs (2046 with n >= 3, plus K_2), exact match ({:.2} s)", entries.len(), t.as_secs_f64()))
}

fn is_trivial(x: f64) -> bool {
    (x + 1.0).abs() <= CLASS_TOL || x.abs() <= CLASS_TOL
}

fn free_of_nontrivial(values: &[f64], lo: f64, hi: f64) -> Option<f64> {
    values.iter().copied().find(|&x| x >= lo + CLASS_TOL && x <= hi - CLASS_TOL && !is_trivial(x))
}

fn omega_free() -> Outcome {
    let (lo, hi) = ((-1.0 - 2f64.sqrt()) / 2.0, (-1.0 + 2f64.sqrt()) / 2.0);
    let mut narrowest = f64::INFINITY;
    for e in sweep() {
        if let Some(x) = free_of_nontrivial(e.spectrum.values(), lo, hi) {
            return Err(format!("{}: eigenvalue {x} inside Omega", e.graph));
        }
        let fi = analysis::free_interval(&e.graph).map_err(|err| err.to_string())?;
        ensure(fi.lo <= lo + 1e-12 && fi.hi >= hi - 1e-12, || format!("{}: refined interval inside Omega", e.graph))?;
        if let Some(x) = free_of_nontrivial(e.spectrum.values(), fi.lo, fi.hi) {
            return Err(format!("{}: eigenvalue {x} inside [{}, {}]", e.graph, fi.lo, fi.hi));
        }
        narrowest = narrowest.min(fi.hi - fi.lo);
    }
    Ok(format!("Omega and refined intervals free over {} graphs (narrowest refined width {narrowest:.6})", sweep().len()))
}

fn simplicity() -> Outcome {
    let mut checked = 0usize;
    for e in sweep() {
        let nontrivial: Vec<f64> = e.spectrum.values().iter().copied().filter(|&x| !is_trivial(x)).collect();
        checked += nontrivial.len();
        if let Some(w) = nontrivial.windows(2).find(|w| w[1] - w[0] <= CLASS_TOL) {
            return Err(format!("{}: repeated eigenvalue near {}", e.graph, w[0]));
        }
    }
    Ok(format!("{checked} non-trivial eigenvalues, all simple"))
}

fn parity_principle() -> Outcome {
    let start = Instant::now();
    let table = analysis::parity_sequences(60).map_err(|e| e.to_string())?;
    let (lo, hi) = analysis::omega();
    let rows = &table.rows;
    ensure(rows.len() == 59 && rows[0].k == 2 && rows[58].k == 60, || "wrong k range".into())?;
    let min_step = |f: fn(&ParityRow) -> f64, sign: f64| {
        rows.windows(2).map(|w| sign * (f(&w[1]) - f(&w[0]))).fold(f64::INFINITY, f64::min)
    };
    let steps = [
        ("mu-(A_2k) increasing", min_step(|r| r.even_minus, 1.0)),
        ("mu-(A_2k+1) increasing", min_step(|r| r.odd_minus, 1.0)),
        ("mu+(A_2k) decreasing", min_step(|r| r.even_plus, -1.0)),
        ("mu+(A_2k+1) decreasing", min_step(|r| r.odd_plus, -1.0)),
    ];
    for (name, step) in steps {
        ensure(step > 0.0, || format!("{name}: smallest step {step:e}"))?;
    }
    for m in &table.by_order {
        let minus = m.minus.ok_or_else(|| format!("A_{} has no mu-", m.order))?;
        ensure(minus < lo, || format!("mu-(A_{}) = {minus} not below the limit", m.order))?;
        ensure(m.plus > hi, || format!("mu+(A_{}) = {} not above the limit", m.order, m.plus))?;
    }
    let mut worst_alt = f64::INFINITY;
    for w in table.by_order.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let (am, bm) = (a.minus.unwrap(), b.minus.unwrap());
        let slack = if a.order % 2 == 1 { (am - bm).min(a.plus - b.plus) } else { (bm - am).min(b.plus - a.plus) };
        worst_alt = worst_alt.min(slack);
    }
    ensure(worst_alt >= -TIE_TOL, || format!("odd/even inequality fails by {worst_alt:e}"))?;
    let plus_of = |n: usize| table.by_order.iter().find(|m| m.order == n).unwrap().plus;
    let (gap120, gap10) = ((plus_of(120) - hi).abs(), (plus_of(10) - hi).abs());
    ensure(gap120 < gap10, || format!("gap at 120 {gap120} not below gap at 10 {gap10}"))?;
    let t = start.elapsed();
    within_time(t, 30.0)?;
    let smallest = steps.iter().map(|s| s.1).fold(f64::INFINITY, f64::min);
    Ok(format!(
        "k = 2..60 monotone (smallest step {smallest:.2e}), odd/even slack {worst_alt:.1e}, gap {gap120:.2e} < {gap10:.2e} ({:.2} s)",
        t.as_secs_f64()
    ))
}

fn embedding_theorems() -> Outcome {
    let mut worst = f64::INFINITY;
    for e in sweep() {
        let g = &e.graph;
        let (n, k, s1) = (g.order(), g.block_count(), g.leading_zeros());
        let (m, big_n) = if s1 == 1 { (2 * k, 2 * (n - k)) } else { (2 * k + 1, 2 * (n - k) - 1) };
        let sub = g.largest_antiregular_subgraph();
        let sup = g.smallest_antiregular_supergraph();
        ensure(sub.guest().order() == m && sup.host().order() == big_n, || format!("{g}: orders"))?;
        ensure(sub.guest().is_antiregular() && sup.host().is_antiregular(), || format!("{g}: not anti-regular"))?;
        sub.validate().map_err(|err| format!("{g}: {err}"))?;
        sup.validate().map_err(|err| format!("{g}: {err}"))?;
        for emb in [&sub, &sup] {
            let r = analysis::verify_interlacing(emb.host(), emb.guest(), emb).map_err(|err| err.to_string())?;
            ensure(r.worst_margin >= -INTERLACING_SLACK, || format!("{g}: interlacing slack {}", r.worst_margin))?;
            worst = worst.min(r.worst_margin);
        }
    }
    for n in 2..=60 {
        let a = ThresholdGraph::antiregular(n).map_err(|e| e.to_string())?;
        ensure(a.largest_antiregular_subgraph().is_identity(), || format!("A_{n} subgraph not identity"))?;
        ensure(a.smallest_antiregular_supergraph().is_identity(), || format!("A_{n} supergraph not identity"))?;
    }
    Ok(format!("{} graphs, worst interlacing slack {worst:.1e}; A_n fixed for n <= 60", sweep().len()))
}

fn sandwich_and_bounds() -> Outcome {
    let mut worst_sandwich = f64::INFINITY;
    let mut worst_bounds = f64::INFINITY;
    let examples = [THREE_BLOCKS, FIVE_BLOCKS].map(|s| {
        let g: ThresholdGraph = s.parse().unwrap();
        let spectrum = eigen::eigenvalues(&g.adjacency()).unwrap();
        Entry { graph: g, spectrum }
    });
    for e in sweep().iter().chain(examples.iter()) {
        let r = analysis::sandwich_check_with(&e.graph, &e.spectrum).map_err(|err| err.to_string())?;
        ensure(r.passed, || format!("{}: sandwich margin {}", e.graph, r.worst_margin))?;
        let b = analysis::spectral_bounds(&e.graph).margin(&e.spectrum);
        ensure(b >= -INTERLACING_SLACK, || format!("{}: bounds margin {b}", e.graph))?;
        worst_sandwich = worst_sandwich.min(r.worst_margin);
        worst_bounds = worst_bounds.min(b);
    }
    Ok(format!(
        "{} graphs; worst sandwich slack {worst_sandwich:.1e}, worst bound slack {worst_bounds:.1e}",
        sweep().len() + 2
    ))
}

fn conjecture_evidence() -> Outcome {
    let expected_8 = ["0^2 1^2 0 1 0 1", "0^2 1 0^2 1 0 1", "0^2 1 0 1^2 0 1", "0^2 1 0 1 0^2 1", "0^2 1 0 1 0 1^2", "0^3 1 0 1 0 1"];
    let mut smallest = f64::INFINITY;
    let mut critical_total = 0;
    for n in 4..=11 {
        let r = enumeration::scan(n, &ScanOptions::with_checks(&[Check::Conjecture, Check::Critical])).map_err(|e| e.to_string())?;
        let a = ThresholdGraph::antiregular(n).unwrap().to_string();
        ensure(r.extremal["min_mu_plus"].graph == a, || format!("n={n}: min mu+ at {}", r.extremal["min_mu_plus"].graph))?;
        ensure(r.extremal["max_mu_minus"].graph == a, || format!("n={n}: max mu- at {}", r.extremal["max_mu_minus"].graph))?;
        let c = r.conjecture.as_ref().unwrap();
        let pos = c.min_pos_margin.as_ref().unwrap();
        let neg = c.min_neg_margin.as_ref().unwrap();
        ensure(pos.value > CONJECTURE_MARGIN, || format!("n={n}: mu+ margin {} at {}", pos.value, pos.graph))?;
        ensure(neg.value > CONJECTURE_MARGIN, || format!("n={n}: mu- margin {} at {}", neg.value, neg.graph))?;
        ensure(c.counterexamples.is_empty(), || format!("n={n}: counterexample records {:?}", c.counterexamples))?;
        smallest = smallest.min(pos.value).min(neg.value);

        let critical = r.critical.as_ref().unwrap();
        ensure(critical.len() == n - 2, || format!("n={n}: {} critical graphs", critical.len()))?;
        for e in critical {
            ensure(!e.counterexample && e.pos_margin >= 0.0 && e.neg_margin.is_none_or(|x| x >= 0.0), || {
                format!("critical graph {} has negative margin", e.compact)
            })?;
        }
        critical_total += critical.len();
        if n == 8 {
            let listed: Vec<&str> = critical.iter().map(|e| e.compact.as_str()).collect();
            ensure(listed == expected_8, || format!("n=8 list {listed:?}"))?;
        }
    }
    Ok(format!("A_n optimal for n = 4..11 (smallest margin {smallest:.2e}); {critical_total} critical graphs, none negative"))
}

fn oracle_agreement() -> Outcome {
    let mut worst = 0.0f64;
    let mut compared = 0;
    for n in 2..=10 {
        for s in common::connected_strings(n) {
            let g: ThresholdGraph = s.parse().map_err(|e| format!("{e}"))?;
            let ours = eigen::eigenvalues(&g.adjacency()).map_err(|e| e.to_string())?;
            let reference = common::bisection_eigenvalues(&common::adjacency_from_string(&s));
            let d = ours.values().iter().zip(&reference).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            ensure(d <= ORACLE_TOL, || format!("{s}: differs from oracle by {d:e}"))?;
            worst = worst.max(d);
            compared += 1;
        }
    }
    let mut worst_moment = 0.0f64;
    for e in sweep() {
        let a = common::adjacency_from_string(&e.graph.to_string());
        let n = a.len();
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| a[i][j] != 0.0).count();
        let mut triangles = 0;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if a[i][j] != 0.0 && a[j][k] != 0.0 && a[i][k] != 0.0 {
                        triangles += 1;
                    }
                }
            }
        }
        for (p, target) in [(1, 0.0), (2, 2.0 * edges as f64), (3, 6.0 * triangles as f64)] {
            let d = (e.spectrum.moment(p) - target).abs();
            ensure(d <= MOMENT_TOL, || format!("{}: power sum {p} off by {d:e}", e.graph))?;
            worst_moment = worst_moment.max(d);
        }
    }
    Ok(format!(
        "{compared} graphs within {worst:.1e} of the bisection oracle; moments within {worst_moment:.1e} on {} graphs",
        sweep().len()
    ))
}

fn extremal_minimum() -> Outcome {
    let mut parts = Vec::new();
    for n in 3..=11 {
        let t = n / 3;
        let candidate = ThresholdGraph::from_blocks([(n - t, t)]).map_err(|e| e.to_string())?;
        let value = eigen::eigenvalues(&candidate.adjacency()).map_err(|e| e.to_string())?.min();
        let best = sweep()
            .iter()
            .filter(|e| e.graph.order() == n)
            .map(|e| e.spectrum.min())
            .fold(f64::INFINITY, f64::min);
        ensure(value <= best + TIE_TOL, || format!("n={n}: {} has {value}, minimum is {best}", candidate.to_compact()))?;
        let (_, found) = enumeration::extremal_min_eigenvalue(n).map_err(|e| e.to_string())?;
        ensure((found - value).abs() <= TIE_TOL, || format!("n={n}: search reports {found}"))?;
        parts.push(format!("{n}:{:.4}", value));
    }
    Ok(format!("0^(n-t) 1^t attains min lambda_min for n = 3..11 [{}]", parts.join(" ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("five-block bound table and extremes", five_block_golden),
        ("inertia and trivial multiplicities, n <= 12", inertia_theorem),
        ("Omega and refined free intervals", omega_free),
        ("simple non-trivial eigenvalues", simplicity),
        ("parity monotonicity and odd/even order", parity_principle),
        ("anti-regular embeddings and interlacing", embedding_theorems),
        ("sandwich interlacing and extremal bounds", sandwich_and_bounds),
        ("anti-regular optimality evidence and critical lists", conjecture_evidence),
        ("eigensolver oracle and moment identities", oracle_agreement),
        ("extremal minimum eigenvalue", extremal_minimum),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("acceptance {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("acceptance {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
