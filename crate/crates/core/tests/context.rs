mod common;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use longcycle::cycle::{is_isolating, Cycle, CycleContext, FaceClass, Side};
use longcycle::discharge::run_discharging;
use longcycle::embed::EmbeddedGraph;
use longcycle::extend::{improve_cycle, Event};
use longcycle::gen::{self, Filter};
use longcycle::oracle::enumerate_isolating_cycles;
use proptest::prelude::*;
use proptest::sample::Index;

struct Pooled {
    graph: EmbeddedGraph,
    cycles: Vec<Cycle>,
}

/// Small essentially 4-connected graphs with a few dozen isolating cycles
/// each.
fn pool() -> &'static [Pooled] {
    static POOL: OnceLock<Vec<Pooled>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut graphs = vec![gen::kleetope(&gen::catalog("octahedron").unwrap()).unwrap()];
        let (tri11, _) = gen::ingest_filtered(&common::data("tri11.pc"), Filter::Essentially4Connected).unwrap();
        graphs.extend(tri11.into_iter().step_by(5));
        for base in common::planar_code("c4tri_6_12.pc").into_iter().take(4) {
            graphs.push(gen::kleetope(&base).unwrap());
        }
        graphs
            .into_iter()
            .map(|graph| {
                let cycles = enumerate_isolating_cycles(&graph, 60);
                Pooled { graph, cycles }
            })
            .filter(|p| !p.cycles.is_empty())
            .collect()
    })
}

fn pick(gi: Index, ci: Index) -> (&'static EmbeddedGraph, &'static Cycle) {
    let p = gi.get(pool());
    (&p.graph, ci.get(&p.cycles))
}

/// Final weights from a per-edge reading of the rules, independent of the
/// per-face loops in the library.
fn oracle_weights(ctx: &CycleContext) -> Vec<i64> {
    let faces = &ctx.faces;
    let c = ctx.c() as isize;
    let mut w: Vec<i64> = faces.iter().map(|f| 3 * f.j as i64).collect();
    let mut pair: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in 0..c {
        let ends = [ctx.face_at(e, Side::Inside), ctx.face_at(e, Side::Outside)];
        for (a, b) in [(ends[0], ends[1]), (ends[1], ends[0])] {
            *pair.entry((a, b)).or_default() += 1;
            let (fa, fb) = (&faces[a], &faces[b]);
            if fa.class == FaceClass::Major && fb.class == FaceClass::Minor {
                w[a] -= 3;
                w[b] += 3;
            }
            if fa.is_minor() && fb.is_minor() && fb.j == 2 {
                w[a] -= 2;
                w[b] += 2;
            }
            if fa.is_minor() && fb.is_minor() && fb.j == 3 && fb.c_edges[1] == e as usize {
                w[a] -= 3;
                w[b] += 3;
            }
        }
    }
    let m = |a: usize, b: usize| pair.get(&(a, b)).copied().unwrap_or(0);
    for f1 in faces.iter().filter(|f| f.is_minor() && (f.j == 4 || f.j == 5)) {
        let opp: Vec<usize> = (0..faces.len()).filter(|&o| m(f1.id, o) > 0 && faces[o].is_minor()).collect();
        let premise = if f1.j == 4 {
            opp.iter().any(|&o| (faces[o].j == 2 || faces[o].j == 3) && m(f1.id, o) == 2)
        } else {
            opp.iter().filter(|&&o| faces[o].j == 2).count() >= 2
        };
        if premise {
            let amount = if f1.j == 4 { 2 } else { 1 };
            for &o in opp.iter().filter(|&&o| faces[o].j >= 4 && m(f1.id, o) == 2) {
                w[o] -= amount;
                w[f1.id] += amount;
            }
        }
    }
    w
}

fn shape(ctx: &CycleContext, flip: bool) -> Vec<(Side, FaceClass, usize)> {
    let mut v: Vec<_> = ctx
        .faces
        .iter()
        .map(|f| (if flip { f.side.flip() } else { f.side }, f.class, f.j))
        .collect();
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn every_cycle_edge_has_one_face_per_side(gi: Index, ci: Index) {
        let (g, c) = pick(gi, ci);
        let ctx = CycleContext::build(g, c).unwrap();
        let total: usize = ctx.faces.iter().map(|f| f.j).sum();
        prop_assert_eq!(total, 2 * ctx.c());
        for e in 0..ctx.c() as isize {
            let (a, b) = (ctx.face_at(e, Side::Inside), ctx.face_at(e, Side::Outside));
            prop_assert_ne!(a, b);
            prop_assert_eq!(ctx.faces[a].side, Side::Inside);
            prop_assert_eq!(ctx.faces[b].side, Side::Outside);
            prop_assert_eq!(ctx.opposite(a, e as usize), Some(b));
            prop_assert_eq!(ctx.opposite(b, e as usize), Some(a));
        }
        for f in &ctx.faces {
            prop_assert_eq!(f.c_edges.len(), f.j);
            let opp = ctx.opposites(f.id);
            prop_assert_eq!(opp.iter().map(|&(_, m)| m).sum::<usize>(), f.j);
            for (o, m) in opp {
                prop_assert_eq!(ctx.m(o, f.id), m);
            }
        }
    }

    #[test]
    fn h_is_g_without_chords(gi: Index, ci: Index) {
        let (g, c) = pick(gi, ci);
        let ctx = CycleContext::build(g, c).unwrap();
        let chords = g.edges().filter(|&(x, y)| c.is_chord(x, y)).count();
        prop_assert_eq!(ctx.h.edge_count() + chords, g.edge_count());
        for (x, y) in ctx.h.edges() {
            prop_assert!(g.has_edge(x, y) && !c.is_chord(x, y));
        }
        let mut all: Vec<usize> = c.vertices().to_vec();
        all.extend(&ctx.v_minus);
        all.extend(&ctx.v_plus);
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn mirror_swaps_the_sides(gi: Index, ci: Index) {
        let (g, c) = pick(gi, ci);
        let m = g.mirrored();
        let a = CycleContext::build(g, c).unwrap();
        let b = CycleContext::build(&m, c).unwrap();
        prop_assert_eq!(shape(&a, false), shape(&b, true));
        prop_assert_eq!(a.minor_count(), b.minor_count());
    }

    #[test]
    fn isolating_cycles_stay_isolating_and_grow(gi: Index, ci: Index) {
        let (g, c) = pick(gi, ci);
        prop_assume!(c.len() >= 8);
        let (d, cert) = improve_cycle(g, c.clone(), &mut |_| {}).unwrap();
        prop_assert!(is_isolating(g, &d));
        prop_assert!(d.len() >= c.len());
        prop_assert!(c.vertices().iter().all(|&v| d.contains(v)));
        prop_assert!(!cert.fallback_used);
    }
}

#[test]
fn discharging_matches_the_per_edge_oracle() {
    let mut checked = 0;
    for p in pool() {
        for c in p.cycles.iter().filter(|c| c.len() >= 8).take(20) {
            improve_cycle(&p.graph, c.clone(), &mut |e| {
                if let Event::Audited { ctx, report } = e {
                    let mine: Vec<i64> = report.final_weights.iter().map(|w| w.0).collect();
                    assert_eq!(mine, oracle_weights(ctx), "cycle {:?}", ctx.cycle.vertices());
                    checked += 1;
                }
            })
            .unwrap();
        }
    }
    assert!(checked > 50, "only {checked} contexts");
}

#[test]
fn discharging_is_mirror_invariant() {
    for p in pool().iter().take(8) {
        let m = p.graph.mirrored();
        for c in p.cycles.iter().take(10) {
            let (a, b) = (CycleContext::build(&p.graph, c).unwrap(), CycleContext::build(&m, c).unwrap());
            let (ra, rb) = (run_discharging(&a), run_discharging(&b));
            match (ra, rb) {
                (Ok(ra), Ok(rb)) => {
                    let mut wa: Vec<_> = ra.final_weights.iter().map(|w| w.0).collect();
                    let mut wb: Vec<_> = rb.final_weights.iter().map(|w| w.0).collect();
                    wa.sort_unstable();
                    wb.sort_unstable();
                    assert_eq!(wa, wb);
                    assert_eq!(ra.violations.len(), rb.violations.len());
                }
                (Err(ea), Err(eb)) => assert_eq!(std::mem::discriminant(&ea), std::mem::discriminant(&eb)),
                (x, y) => panic!("mirror disagrees: {:?} vs {:?}", x.is_ok(), y.is_ok()),
            }
        }
    }
}
