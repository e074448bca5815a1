//! Acceptance run: one line per criterion, then a single assertion over all
//! of them so a failure still prints the full table. Built without the test
//! harness so the table is printed even when everything passes.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use longcycle::cycle::{extendable_edges, is_isolating, CycleContext};
use longcycle::discharge::DischargeReport;
use longcycle::embed::EmbeddedGraph;
use longcycle::extend::{hamiltonian_small, improve_cycle, local_search_extension, long_cycle_observed, long_cycle_prevalidated, CertificateKind, Event};
use longcycle::gen;
use longcycle::oracle::{circumference_bruteforce, enumerate_isolating_cycles, is_valid_cycle};
use longcycle::theorem_bound;

const SUITE_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_MAX_N: usize = 16;
const ORACLE_BUDGET: u64 = 200_000_000;
const SMALL_MAX_N: usize = 10;
const SMALL_MIN_GRAPHS: usize = 500;
const SEARCH_RADIUS: usize = 11;
const PERF_RATIO: f64 = 5.0;
const PERF_REPS: usize = 9;
const PERF_SAMPLE: Duration = Duration::from_millis(20);
const RESTARTS_PER_GRAPH: usize = 40;

#[derive(Default)]
struct Tally {
    audits: usize,
    conservation_bad: Vec<String>,
    certificates: usize,
    certificate_bad: Vec<String>,
    steps: usize,
    cases: BTreeMap<String, usize>,
    search_missed: Vec<String>,
    fallbacks: usize,
}

fn weight_sum(r: &DischargeReport) -> i64 {
    r.final_weights.iter().map(|w| w.0).sum()
}

/// Recomputes every weight from the face list and the transfers, without
/// trusting the report's own bookkeeping.
fn audit(ctx: &CycleContext, r: &DischargeReport) -> Option<String> {
    let mut w: Vec<i64> = ctx.faces.iter().map(|f| 3 * f.j as i64).collect();
    for t in &r.transfers {
        w[t.from] -= t.amount.0;
        w[t.to] += t.amount.0;
    }
    let c = ctx.c() as i64;
    if w.iter().sum::<i64>() != 6 * c || weight_sum(r) != 6 * c {
        return Some(format!("sum {} != {}", weight_sum(r), 6 * c));
    }
    if w.iter().zip(&r.final_weights).any(|(a, b)| *a != b.0) {
        return Some("final weights disagree with transfers".into());
    }
    None
}

/// Conditions for a discharging certificate, checked from the context.
fn certificate_ok(g: &EmbeddedGraph, ctx: &CycleContext, r: &DischargeReport) -> Option<String> {
    let n = g.n() as i64;
    let c = ctx.c() as i64;
    let mut w: Vec<i64> = ctx.faces.iter().map(|f| 3 * f.j as i64).collect();
    for t in &r.transfers {
        w[t.from] -= t.amount.0;
        w[t.to] += t.amount.0;
    }
    let minors: Vec<_> = ctx.faces.iter().filter(|f| f.is_minor()).collect();
    if let Some(f) = minors.iter().find(|f| w[f.id] < 10) {
        return Some(format!("minor face {} has {}/3", f.id, w[f.id]));
    }
    if !extendable_edges(g, &ctx.cycle).is_empty() {
        return Some("extendable edge left".into());
    }
    let m = minors.len() as i64;
    let off = n - c;
    if 6 * c < 10 * m {
        return Some(format!("6c = {} < 10|M| = {}", 6 * c, 10 * m));
    }
    if m < off + 2 {
        return Some(format!("|M| = {m} < n - c + 2 = {}", off + 2));
    }
    if 8 * c < 5 * (n + 2) {
        return Some("8c < 5(n+2)".into());
    }
    None
}

fn observe<'t>(g: &'t EmbeddedGraph, name: String, t: &'t mut Tally) -> impl FnMut(Event) + 't {
    move |e| match e {
        Event::Audited { ctx, report } => {
            t.audits += 1;
            if let Some(msg) = audit(ctx, report) {
                t.conservation_bad.push(format!("{name}: {msg}"));
            }
            if report.violations.is_empty() {
                t.certificates += 1;
                if let Some(msg) = certificate_ok(g, ctx, report) {
                    t.certificate_bad.push(format!("{name}: {msg}"));
                }
            }
        }
        Event::Step { ctx, face, step, fallback } => {
            t.steps += 1;
            *t.cases.entry(step.case_id.clone()).or_default() += 1;
            t.fallbacks += fallback as usize;
            if local_search_extension(ctx, face, SEARCH_RADIUS).is_none() {
                t.search_missed.push(format!("{name}: case {} on face {face}", step.case_id));
            }
        }
    }
}

fn line(no: usize, title: &str, ok: bool, detail: String) -> bool {
    println!("criterion {no} [PRIMARY] {title}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    ok
}

fn sample(v: &[String]) -> String {
    v.iter().take(3).cloned().collect::<Vec<_>>().join("; ")
}

fn median_time(g: &EmbeddedGraph) -> f64 {
    let mut ts: Vec<f64> = (0..PERF_REPS)
        .map(|_| {
            // Repeat sub-millisecond runs so each sample spans a few timer ticks.
            let t = Instant::now();
            let mut runs = 0;
            while runs == 0 || t.elapsed() < PERF_SAMPLE {
                let (c, _) = long_cycle_prevalidated(g, &mut |_| {}).unwrap();
                assert!(c.len() >= theorem_bound(g.n()));
                runs += 1;
            }
            t.elapsed().as_secs_f64() / runs as f64
        })
        .collect();
    ts.sort_by(f64::total_cmp);
    ts[PERF_REPS / 2]
}

fn main() {
    let corpus = common::corpus();
    let mut tally = Tally::default();
    let mut results = Vec::new();
    let mut below = Vec::new();
    let mut below_strong = Vec::new();
    let mut errors = Vec::new();
    let mut kinds: BTreeMap<String, usize> = BTreeMap::new();
    let mut lengths = Vec::new();

    // Criteria 1 and 2: the driver on every corpus instance.
    let start = Instant::now();
    for inst in &corpus {
        let g = &inst.graph;
        let run = long_cycle_observed(g, &mut observe(g, inst.name.clone(), &mut tally));
        match run {
            Ok((c, cert)) => {
                *kinds.entry(format!("{:?}", cert.kind)).or_default() += 1;
                if !is_valid_cycle(g, c.vertices()) || c.len() < theorem_bound(g.n()) {
                    below.push(format!("{} (n={}, len={})", inst.name, g.n(), c.len()));
                }
                if g.n() >= 16 && 8 * c.len() < 5 * (g.n() + 4) {
                    below_strong.push(format!("{} (n={}, len={})", inst.name, g.n(), c.len()));
                }
                if cert.kind == CertificateKind::Discharging && cert.report.is_none() {
                    tally.certificate_bad.push(format!("{}: certificate without report", inst.name));
                }
                lengths.push((g.n(), c.len()));
            }
            Err(e) => errors.push(format!("{}: {e}", inst.name)),
        }
    }
    let suite_time = start.elapsed();
    let ingested = corpus.iter().filter(|i| (11..=32).contains(&i.graph.n()) && i.name.contains('#')).count();
    let strong_count = corpus.iter().filter(|i| i.graph.n() >= 16).count();
    results.push(line(
        1,
        "length >= ceil(5(n+2)/8) on the corpus",
        below.is_empty() && errors.is_empty() && ingested >= 200 && suite_time < SUITE_LIMIT,
        format!(
            "{} instances, {ingested} ingested with 11 <= n <= 32, {} below, {} errors, {:.2}s of {}s; tolerance 0; certificates {kinds:?} {}",
            corpus.len(),
            below.len(),
            errors.len(),
            suite_time.as_secs_f64(),
            SUITE_LIMIT.as_secs(),
            sample(&[below.clone(), errors.clone()].concat())
        ),
    ));
    results.push(line(
        2,
        "length >= 5(n+4)/8 for n >= 16",
        below_strong.is_empty() && strong_count > 0,
        format!("{strong_count} instances, {} below; tolerance 0 {}", below_strong.len(), sample(&below_strong)),
    ));

    // The corpus alone rarely reaches the catalog, so criteria 3, 4 and 7
    // also cover runs restarted from other isolating cycles of length >= 8.
    let mut restarts = 0;
    let mut restart_errors = Vec::new();
    for inst in corpus.iter().filter(|i| i.graph.n() >= 11) {
        let g = &inst.graph;
        let starts = enumerate_isolating_cycles(g, 4 * RESTARTS_PER_GRAPH);
        for c in starts.into_iter().filter(|c| c.len() >= 8).step_by(4).take(RESTARTS_PER_GRAPH) {
            restarts += 1;
            let name = format!("{} from {:?}", inst.name, c.vertices());
            match improve_cycle(g, c, &mut observe(g, name.clone(), &mut tally)) {
                Ok((d, _)) if is_isolating(g, &d) && d.len() >= theorem_bound(g.n()) => {}
                Ok((d, _)) => restart_errors.push(format!("{name}: bad result of length {}", d.len())),
                Err(e) => restart_errors.push(format!("{name}: {e}")),
            }
        }
    }

    results.push(line(
        3,
        "weight conservation on every audited context",
        tally.conservation_bad.is_empty() && tally.audits > 0,
        format!("{} contexts, {} off; tolerance 0 thirds {}", tally.audits, tally.conservation_bad.len(), sample(&tally.conservation_bad)),
    ));
    results.push(line(
        4,
        "discharging certificates are valid",
        tally.certificate_bad.is_empty() && tally.certificates > 0,
        format!(
            "{} certificates, {} invalid; tolerance 0 {}",
            tally.certificates,
            tally.certificate_bad.len(),
            sample(&tally.certificate_bad)
        ),
    ));

    // Criterion 5: exact circumference on the small instances.
    let mut oracle_checked = 0;
    let mut oracle_bad = Vec::new();
    for inst in corpus.iter().filter(|i| i.graph.n() <= ORACLE_MAX_N) {
        let g = &inst.graph;
        let Ok((c, _)) = longcycle::long_cycle(g) else { continue };
        match circumference_bruteforce(g, ORACLE_BUDGET) {
            Ok(r) => {
                oracle_checked += 1;
                if r.circumference < c.len() || r.circumference < theorem_bound(g.n()) || !is_valid_cycle(g, &r.witness) {
                    oracle_bad.push(format!("{}: oracle {} vs {}", inst.name, r.circumference, c.len()));
                }
            }
            Err(e) => oracle_bad.push(format!("{}: {e}", inst.name)),
        }
    }
    results.push(line(
        5,
        "brute-force circumference agrees for n <= 16",
        oracle_bad.is_empty() && oracle_checked > 0,
        format!("{oracle_checked} instances, {} disagreements; budget {ORACLE_BUDGET} nodes {}", oracle_bad.len(), sample(&oracle_bad)),
    ));

    // Measured, not asserted: how close the kleetopes come to 2(n+4)/3.
    for inst in corpus.iter().filter(|i| i.name.starts_with("kleetope") && i.graph.n() <= 20) {
        let g = &inst.graph;
        let found = longcycle::long_cycle(g).map(|(c, _)| c.len()).unwrap_or(0);
        if let Ok(r) = circumference_bruteforce(g, ORACLE_BUDGET) {
            println!(
                "report: {} n={} circumference={} 2(n+4)/3={:.2} found={found}",
                inst.name,
                g.n(),
                r.circumference,
                (2 * (g.n() + 4)) as f64 / 3.0
            );
        }
    }

    // Criterion 6: every 3-connected plane graph on at most 10 vertices.
    let small: Vec<_> = common::planar_code("polytopes_4_10.pc").into_iter().filter(|g| g.n() <= SMALL_MAX_N).collect();
    let small_bad: Vec<String> = small
        .iter()
        .enumerate()
        .filter(|(_, g)| !matches!(hamiltonian_small(g), Ok(c) if c.len() == g.n() && is_valid_cycle(g, c.vertices())))
        .map(|(i, _)| format!("#{i}"))
        .collect();
    results.push(line(
        6,
        "Hamiltonian cycles for n <= 10",
        small_bad.is_empty() && small.len() >= SMALL_MIN_GRAPHS,
        format!("{} graphs (minimum {SMALL_MIN_GRAPHS}), {} failures {}", small.len(), small_bad.len(), sample(&small_bad)),
    ));

    results.push(line(
        7,
        "local search confirms every catalog step",
        tally.search_missed.is_empty() && tally.fallbacks == 0 && restart_errors.is_empty() && tally.steps > 0,
        format!(
            "{} steps over {} corpus runs and {restarts} restarts, {} unconfirmed, {} fallbacks, {} restart errors; radius {SEARCH_RADIUS}; cases {:?} {}",
            tally.steps,
            corpus.len(),
            tally.search_missed.len(),
            tally.fallbacks,
            restart_errors.len(),
            tally.cases,
            sample(&[tally.search_missed.clone(), restart_errors.clone()].concat())
        ),
    ));

    // Criterion 8: doubling n at most quintuples the median time.
    let mut perf_ok = true;
    let mut perf_detail = Vec::new();
    for (small, large) in [("stack-11x2", "stack-11x5"), ("stack-12x6", "stack-12x13")] {
        let a = gen::kleetope(&gen::catalog(small).unwrap()).unwrap();
        let b = gen::kleetope(&gen::catalog(large).unwrap()).unwrap();
        let (ta, tb) = (median_time(&a), median_time(&b));
        let ratio = tb / ta;
        perf_ok &= ratio <= PERF_RATIO;
        perf_detail.push(format!("n={} {:.2}ms, n={} {:.2}ms, ratio {ratio:.2}", a.n(), ta * 1e3, b.n(), tb * 1e3));
    }
    results.push(line(
        8,
        "time(2n)/time(n) <= 5 on kleetopes",
        perf_ok,
        format!("{}; median of {PERF_REPS}; tolerance ratio {PERF_RATIO}", perf_detail.join("; ")),
    ));

    let worst = lengths.iter().map(|&(n, c)| c as f64 / n as f64).fold(f64::INFINITY, f64::min);
    println!("smallest c/n over the corpus: {worst:.3}");
    assert!(results.iter().all(|&ok| ok), "some acceptance criteria failed");
}
