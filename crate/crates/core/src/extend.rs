//! Growing an isolating cycle until the discharging certificate holds.
//!
//! The driver alternates between cheap extensions (a cycle edge `xy` whose
//! ends share a neighbor `v` off the cycle becomes `x v y`) and, once none
//! is left, a discharging audit. Every minor face that ends below `10/3`
//! is fed to the case catalog, which names a longer isolating cycle.

use serde::Serialize;

use crate::catalog::{check_step, match_case, Match};
use crate::cycle::{common_off_neighbor, is_isolating, Cycle, CycleContext};
use crate::discharge::{check_weight_bound, run_discharging, DischargeReport};
use crate::embed::{EmbeddedGraph, Essential4, FaceId, Vertex};
use crate::error::{Error, Result};

pub use crate::catalog::ExtensionStep;

/// Replaces the cycle edge `xy` by the path `x v y`.
pub fn extend_basic(g: &EmbeddedGraph, c: &Cycle, e: (Vertex, Vertex), v: Vertex) -> Result<Cycle> {
    basic_step(g, c, e, v)?.apply(g, c)
}

fn basic_step(g: &EmbeddedGraph, c: &Cycle, (x, y): (Vertex, Vertex), v: Vertex) -> Result<ExtensionStep> {
    let not = || Error::NotExtendable { x, y, v };
    if v >= g.n() || c.contains(v) || c.edge_index(x, y).is_none() || !g.has_edge(x, v) || !g.has_edge(v, y) {
        return Err(not());
    }
    ExtensionStep::new("basic", c, g, vec![x, y], vec![x, v, y]).map_err(|_| not())
}

/// Applies basic extensions until no cycle edge is extendable. Each pass
/// walks the cycle once, so the total work is linear per absorbed vertex.
fn saturate_basic(g: &EmbeddedGraph, mut c: Cycle, steps: &mut Vec<ExtensionStep>) -> Result<Cycle> {
    loop {
        let mut grew = false;
        let mut i = 0;
        while i < c.len() {
            let (x, y) = c.edge(i);
            if let Some(v) = common_off_neighbor(g, &c, x, y) {
                let step = basic_step(g, &c, (x, y), v)?;
                c = step.apply(g, &c)?;
                steps.push(step);
                grew = true;
                // The new edges x-v and v-y are checked on the next pass.
                i = c.position(v).unwrap() + 1;
            } else {
                i += 1;
            }
        }
        if !grew {
            return Ok(c);
        }
    }
}

/// Depth-first search for a path from `s` to `t` through every vertex of
/// `must` and at least one vertex of `extra`, using only those vertices.
struct Detour<'a> {
    g: &'a EmbeddedGraph,
    local: Vec<Vertex>,
    is_extra: Vec<bool>,
    must_count: usize,
    budget: usize,
    accept: &'a dyn Fn(&[Vertex]) -> bool,
}

impl Detour<'_> {
    fn run(&mut self, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
        let mut used = vec![false; self.local.len()];
        let mut path = vec![s];
        self.dfs(s, t, &mut used, &mut path, 0, 0)
    }

    fn dfs(
        &mut self,
        v: Vertex,
        t: Vertex,
        used: &mut [bool],
        path: &mut Vec<Vertex>,
        must_seen: usize,
        extra_seen: usize,
    ) -> Option<Vec<Vertex>> {
        if self.budget == 0 {
            return None;
        }
        self.budget -= 1;
        if must_seen == self.must_count && extra_seen > 0 && self.g.has_edge(v, t) {
            path.push(t);
            if (self.accept)(path) {
                return Some(path.clone());
            }
            path.pop();
        }
        for i in 0..self.local.len() {
            let w = self.local[i];
            if used[i] || !self.g.has_edge(v, w) {
                continue;
            }
            used[i] = true;
            path.push(w);
            let (m, e) = if self.is_extra[i] { (must_seen, extra_seen + 1) } else { (must_seen + 1, extra_seen) };
            if let Some(p) = self.dfs(w, t, used, path, m, e) {
                return Some(p);
            }
            path.pop();
            used[i] = false;
        }
        None
    }
}

/// Rewrites the subpath of `C` with `len` vertices starting at cycle index
/// `p` into a longer path through `extras`; `None` if there is none.
fn detour_at(
    g: &EmbeddedGraph,
    c: &Cycle,
    p: usize,
    len: usize,
    extras: &[Vertex],
    budget: usize,
    accept: &dyn Fn(&[Vertex]) -> bool,
) -> Option<Vec<Vertex>> {
    let sub: Vec<Vertex> = (0..len).map(|k| c.at((p + k) as isize)).collect();
    let (s, t) = (sub[0], sub[len - 1]);
    let mut local: Vec<Vertex> = sub[1..len - 1].to_vec();
    let must_count = local.len();
    local.extend_from_slice(extras);
    let mut is_extra = vec![false; must_count];
    is_extra.resize(local.len(), true);
    let mut d = Detour { g, local, is_extra, must_count, budget, accept };
    d.run(s, t)
}

/// Off-cycle vertices with at least two neighbors on the given subpath.
fn attached(g: &EmbeddedGraph, c: &Cycle, sub: &[Vertex]) -> Vec<Vertex> {
    let mut xs: Vec<Vertex> = sub
        .iter()
        .flat_map(|&u| g.neighbors(u).iter().copied())
        .filter(|&v| !c.contains(v))
        .collect();
    xs.sort_unstable();
    let mut out = Vec::new();
    for w in xs.chunk_by(|a, b| a == b) {
        if w.len() >= 2 {
            out.push(w[0]);
        }
    }
    out
}

/// Exhaustive search for a longer isolating cycle that differs from `C`
/// only inside a window of `radius` consecutive cycle vertices touching
/// the face `f`.
pub fn local_search_extension(ctx: &CycleContext, f: FaceId, radius: usize) -> Option<ExtensionStep> {
    let g = ctx.base;
    let c = &ctx.cycle;
    let n = c.len();
    let radius = radius.min(11).min(n);
    let info = &ctx.faces[f];
    if info.c_edges.is_empty() || radius < 3 {
        return None;
    }
    let s = info.c_edges[0] as isize;
    let span = info.j as isize;
    let mut tried = std::collections::HashSet::new();
    for w in (s - radius as isize + 1)..=(s + span) {
        for len in 3..=radius {
            for off in 0..=(radius - len) {
                let p = (w + off as isize).rem_euclid(n as isize) as usize;
                if !tried.insert((p, len)) {
                    continue;
                }
                let sub: Vec<Vertex> = (0..len).map(|k| c.at((p + k) as isize)).collect();
                let extras = attached(g, c, &sub);
                if extras.is_empty() {
                    continue;
                }
                if let Some(path) = detour_at(g, c, p, len, &extras, 200_000, &|_| true) {
                    return ExtensionStep::new("search", c, g, sub, path).ok();
                }
            }
        }
    }
    None
}

/// Backtracking search for a Hamiltonian cycle.
pub fn hamiltonian_small(g: &EmbeddedGraph) -> Result<Cycle> {
    let n = g.n();
    let mut used = vec![false; n];
    let mut path = vec![0];
    used[0] = true;
    fn go(g: &EmbeddedGraph, used: &mut [bool], path: &mut Vec<Vertex>) -> bool {
        let v = *path.last().unwrap();
        if path.len() == used.len() {
            return g.has_edge(v, path[0]);
        }
        for &w in g.neighbors(v) {
            if !used[w] {
                used[w] = true;
                path.push(w);
                if go(g, used, path) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    if n >= 3 && go(g, &mut used, &mut path) {
        Cycle::new(g, path)
    } else {
        Err(Error::Internal(format!("no Hamiltonian cycle found on {n} vertices")))
    }
}

const BOOTSTRAP_MIN: usize = 8;
const BOOTSTRAP_RESTARTS: usize = 64;
const EXHAUSTIVE_LIMIT: usize = 24;

/// A vertex off `C` that already meets the isolating condition.
fn settled(g: &EmbeddedGraph, c: &Cycle, v: Vertex) -> bool {
    g.degree(v) == 3 && g.neighbors(v).iter().all(|&u| c.contains(u))
}

/// Grows a face boundary by absorbing unsettled vertices until the cycle
/// is isolating and has length at least 8.
fn grow_from(g: &EmbeddedGraph, mut c: Cycle) -> Option<Cycle> {
    loop {
        let isolating = is_isolating(g, &c);
        if isolating && c.len() >= BOOTSTRAP_MIN {
            return Some(c);
        }
        // Prefer absorbing vertices of degree other than 3: degree-3
        // vertices settle by themselves once their neighbors are on C.
        let mut best: Option<(usize, Vertex, usize)> = None;
        for i in 0..c.len() {
            let (x, y) = c.edge(i);
            for &v in g.neighbors(x) {
                if c.contains(v) || !g.has_edge(v, y) {
                    continue;
                }
                let rank = if !settled(g, &c, v) {
                    if g.degree(v) != 3 { 0 } else { 1 }
                } else if isolating {
                    2
                } else {
                    continue;
                };
                if best.is_none_or(|(r, _, _)| rank < r) {
                    best = Some((rank, v, i));
                }
            }
            if matches!(best, Some((0, _, _))) {
                break;
            }
        }
        if let Some((_, v, i)) = best {
            c = extend_basic(g, &c, c.edge(i), v).ok()?;
            continue;
        }
        // No common neighbor helps: try short detours through unsettled
        // vertices and their off-cycle neighbors.
        c = grow_by_detour(g, &c)?;
    }
}

fn grow_by_detour(g: &EmbeddedGraph, c: &Cycle) -> Option<Cycle> {
    let n = c.len();
    for len in 2..=5.min(n) {
        for p in 0..n {
            let sub: Vec<Vertex> = (0..len).map(|k| c.at((p + k) as isize)).collect();
            let mut extras: Vec<Vertex> = Vec::new();
            for &u in &sub {
                for &v in g.neighbors(u) {
                    if !c.contains(v) && !extras.contains(&v) {
                        extras.push(v);
                    }
                }
            }
            let first_ring = extras.len();
            for k in 0..first_ring {
                for &v in g.neighbors(extras[k]) {
                    if !c.contains(v) && !extras.contains(&v) {
                        extras.push(v);
                    }
                }
            }
            extras.retain(|&v| !settled(g, c, v));
            if extras.is_empty() {
                continue;
            }
            let accept = |_: &[Vertex]| true;
            if let Some(path) = detour_at(g, c, p, len, &extras, 20_000, &accept) {
                if let Ok(d) = c.replace(g, p, len, &path) {
                    return Some(d);
                }
            }
        }
    }
    None
}

/// Exhaustive search over simple cycles for an isolating one of length at
/// least 8.
fn exhaustive_isolating(g: &EmbeddedGraph) -> Option<Cycle> {
    let n = g.n();
    let mut budget: u64 = 50_000_000;
    for s in 0..n {
        let mut used = vec![false; n];
        used[s] = true;
        let mut path = vec![s];
        fn go(g: &EmbeddedGraph, s: Vertex, used: &mut [bool], path: &mut Vec<Vertex>, budget: &mut u64) -> Option<Cycle> {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            let v = *path.last().unwrap();
            if path.len() >= BOOTSTRAP_MIN && g.has_edge(v, s) {
                let c = Cycle::new(g, path.clone()).ok()?;
                if is_isolating(g, &c) {
                    return Some(c);
                }
            }
            for &w in g.neighbors(v) {
                if w > s && !used[w] {
                    used[w] = true;
                    path.push(w);
                    if let Some(c) = go(g, s, used, path, budget) {
                        return Some(c);
                    }
                    path.pop();
                    used[w] = false;
                }
            }
            None
        }
        if let Some(c) = go(g, s, &mut used, &mut path, &mut budget) {
            return Some(c);
        }
    }
    None
}

/// An isolating cycle of length at least 8 in an essentially 4-connected
/// graph with at least 11 vertices.
pub fn initial_isolating_cycle(g: &EmbeddedGraph) -> Result<Cycle> {
    if g.n() < 11 {
        return Err(Error::TooSmall { n: g.n(), min: 11 });
    }
    for face in g.faces().iter().take(BOOTSTRAP_RESTARTS) {
        let Ok(c) = Cycle::new(g, face.vertices().collect()) else {
            continue;
        };
        if let Some(c) = grow_from(g, c) {
            return Ok(c);
        }
    }
    if g.n() <= EXHAUSTIVE_LIMIT {
        if let Some(c) = exhaustive_isolating(g) {
            return Ok(c);
        }
    }
    Err(Error::SearchExhausted(format!(
        "no isolating cycle of length >= {BOOTSTRAP_MIN} found on {} vertices",
        g.n()
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Discharging,
    SideEmpty,
    Hamiltonian,
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub cycle: Vec<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<DischargeReport>,
    pub steps: Vec<ExtensionStep>,
    pub fallback_used: bool,
    /// The run that won was on the mirror image; faces, sides and steps
    /// in this certificate refer to that embedding.
    pub mirrored: bool,
}

/// What the driver reports while it runs.
pub enum Event<'a, 'g> {
    /// A context was audited by the discharging rules.
    Audited { ctx: &'a CycleContext<'g>, report: &'a DischargeReport },
    /// A violating face led to a rewrite.
    Step { ctx: &'a CycleContext<'g>, face: FaceId, step: &'a ExtensionStep, fallback: bool },
}

/// A cycle of length at least `ceil(5(n+2)/8)` with its certificate.
pub fn long_cycle(g: &EmbeddedGraph) -> Result<(Cycle, Certificate)> {
    long_cycle_observed(g, &mut |_| {})
}

pub fn long_cycle_observed(g: &EmbeddedGraph, observer: &mut dyn FnMut(Event)) -> Result<(Cycle, Certificate)> {
    if !g.is_3_connected()? {
        return Err(Error::NotThreeConnected);
    }
    if let Essential4::Witness(s) = g.essential_4_connectivity()? {
        return Err(Error::NotEssentially4Connected(s));
    }
    long_cycle_prevalidated(g, observer)
}

/// The driver without the (cubic) connectivity precheck; the caller
/// vouches that `g` is essentially 4-connected.
pub fn long_cycle_prevalidated(
    g: &EmbeddedGraph,
    observer: &mut dyn FnMut(Event),
) -> Result<(Cycle, Certificate)> {
    if g.n() <= 10 {
        let c = hamiltonian_small(g)?;
        let cert = Certificate {
            kind: CertificateKind::Hamiltonian,
            cycle: c.vertices().to_vec(),
            report: None,
            steps: Vec::new(),
            fallback_used: false,
            mirrored: false,
        };
        return Ok((c, cert));
    }
    // Both reflections are valid embeddings of the same graph. Running on
    // each and keeping the longer cycle makes the length independent of
    // which one the input happened to use.
    let (c, cert) = improve_cycle(g, initial_isolating_cycle(g)?, observer)?;
    let m = g.mirrored();
    let (d, mut dcert) = improve_cycle(&m, initial_isolating_cycle(&m)?, observer)?;
    if d.len() > c.len() {
        dcert.mirrored = true;
        let d = Cycle::new(g, d.vertices().to_vec())?;
        return Ok((d, dcert));
    }
    Ok((c, cert))
}

/// Runs the extension loop from a given isolating cycle.
pub fn improve_cycle(
    g: &EmbeddedGraph,
    start: Cycle,
    observer: &mut dyn FnMut(Event),
) -> Result<(Cycle, Certificate)> {
    let n = g.n();
    let bound = crate::theorem_bound(n);
    let certificate = |kind, c: &Cycle, report, steps, fallback_used| Certificate {
        kind,
        cycle: c.vertices().to_vec(),
        report,
        steps,
        fallback_used,
        mirrored: false,
    };
    if !is_isolating(g, &start) {
        return Err(Error::NotACycle("start cycle is not isolating".into()));
    }
    let mut c = start;
    let mut steps = Vec::new();
    let mut fallback_used = false;
    for _ in 0..=n {
        c = saturate_basic(g, c, &mut steps)?;
        let ctx = CycleContext::build(g, &c)?;
        if ctx.side_empty() {
            if c.len() < bound {
                return Err(Error::Internal(format!("cycle with an empty side has length {} < {bound}", c.len())));
            }
            let cert = certificate(CertificateKind::SideEmpty, &c, None, steps, fallback_used);
            return Ok((c, cert));
        }
        let report = run_discharging(&ctx)?;
        observer(Event::Audited { ctx: &ctx, report: &report });
        if !report.conservation_ok {
            return Err(Error::Internal("discharging did not conserve weight".into()));
        }
        let Some(&face) = report.violations.first() else {
            if !check_weight_bound(&report)? || c.len() < bound {
                return Err(Error::Internal(format!(
                    "certificate inequality fails: c = {}, |M| = {}, n = {n}",
                    c.len(),
                    report.minor_count
                )));
            }
            let cert = certificate(CertificateKind::Discharging, &c, Some(report), steps, fallback_used);
            return Ok((c, cert));
        };
        let (step, fallback) = match match_case(&ctx, face)? {
            Match::Step(s) => (s, false),
            Match::Contradiction(case_id) => return Err(Error::Contradiction { case_id, face }),
            Match::Unmatched => match local_search_extension(&ctx, face, 11) {
                Some(s) => (s, true),
                None => return Err(Error::Unmatched { face }),
            },
        };
        observer(Event::Step { ctx: &ctx, face, step: &step, fallback });
        fallback_used |= fallback;
        let next = step.apply(g, &c)?;
        check_step(g, &c, &next, &step)?;
        steps.push(step);
        c = next;
    }
    Err(Error::Internal("cycle grew more than n times".into()))
}
