//! Brute-force ground truth for small graphs. Nothing here shares code
//! with the main algorithm beyond the graph type itself.

use serde::Serialize;

use crate::cycle::Cycle;
use crate::embed::{EmbeddedGraph, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub circumference: usize,
    pub witness: Vec<Vertex>,
    pub explored: u64,
}

struct Search<'a> {
    g: &'a EmbeddedGraph,
    start: Vertex,
    used: Vec<bool>,
    path: Vec<Vertex>,
    best: Vec<Vertex>,
    explored: u64,
    budget: u64,
}

impl Search<'_> {
    /// Vertices above `start` reachable from `v` without touching the path.
    fn reachable(&self, v: Vertex) -> usize {
        let mut seen = self.used.clone();
        let mut stack = vec![v];
        let mut count = 0;
        while let Some(u) = stack.pop() {
            for &w in self.g.neighbors(u) {
                if w > self.start && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    }

    fn dfs(&mut self) -> Result<()> {
        self.explored += 1;
        if self.explored > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let v = *self.path.last().unwrap();
        if self.path.len() >= 3 && self.path.len() > self.best.len() && self.g.has_edge(v, self.start) {
            self.best = self.path.clone();
        }
        if self.best.len() == self.g.n() || self.path.len() + self.reachable(v) <= self.best.len() {
            return Ok(());
        }
        for i in 0..self.g.degree(v) {
            let w = self.g.neighbors(v)[i];
            if w > self.start && !self.used[w] {
                self.used[w] = true;
                self.path.push(w);
                self.dfs()?;
                self.path.pop();
                self.used[w] = false;
                if self.best.len() == self.g.n() {
                    return Ok(());
                }
            }
        }
        Ok(())
    }
}

/// Exact circumference: each cycle is searched from its least vertex, and
/// a branch is cut when even absorbing everything still reachable cannot
/// beat the best cycle found so far.
pub fn circumference_bruteforce(g: &EmbeddedGraph, node_budget: u64) -> Result<OracleResult> {
    let n = g.n();
    let mut best: Vec<Vertex> = Vec::new();
    let mut explored = 0;
    for s in 0..n {
        if n - s <= best.len() {
            break;
        }
        let mut used = vec![false; n];
        used[s] = true;
        let mut search = Search {
            g,
            start: s,
            used,
            path: vec![s],
            best: best.clone(),
            explored,
            budget: node_budget,
        };
        search.dfs()?;
        explored = search.explored;
        best = search.best;
        if best.len() == n {
            break;
        }
    }
    Ok(OracleResult { circumference: best.len(), witness: best, explored })
}

/// All isolating cycles, each once (least vertex first, smaller direction),
/// stopping after `max_count`.
pub fn enumerate_isolating_cycles(g: &EmbeddedGraph, max_count: usize) -> Vec<Cycle> {
    let n = g.n();
    let mut out = Vec::new();
    for s in 0..n {
        let mut used = vec![false; n];
        used[s] = true;
        let mut path = vec![s];
        enumerate_from(g, s, &mut used, &mut path, max_count, &mut out);
        if out.len() >= max_count {
            break;
        }
    }
    out
}

fn enumerate_from(
    g: &EmbeddedGraph,
    s: Vertex,
    used: &mut [bool],
    path: &mut Vec<Vertex>,
    max_count: usize,
    out: &mut Vec<Cycle>,
) {
    if out.len() >= max_count {
        return;
    }
    let v = *path.last().unwrap();
    if path.len() >= 3 && path[1] < v && g.has_edge(v, s) && isolating_bruteforce(g, path) {
        out.push(Cycle::new(g, path.clone()).expect("search only walks edges"));
    }
    for &w in g.neighbors(v) {
        if w > s && !used[w] {
            used[w] = true;
            path.push(w);
            enumerate_from(g, s, used, path, max_count, out);
            path.pop();
            used[w] = false;
        }
    }
}

/// Components of `G - V(C)` by flood fill, each required to be a single
/// vertex of degree three.
pub fn isolating_bruteforce(g: &EmbeddedGraph, cycle: &[Vertex]) -> bool {
    let mut on = vec![false; g.n()];
    for &v in cycle {
        on[v] = true;
    }
    let mut seen = on.clone();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        if comp.len() != 1 || g.degree(s) != 3 {
            return false;
        }
    }
    true
}

/// Whether `vs` is a simple cycle of `g`, checked from scratch.
pub fn is_valid_cycle(g: &EmbeddedGraph, vs: &[Vertex]) -> bool {
    let k = vs.len();
    if k < 3 || vs.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == k && (0..k).all(|i| g.neighbors(vs[i]).contains(&vs[(i + 1) % k]))
}

/// Every 3-subset whose removal disconnects the graph, with the sizes of
/// the resulting components, by direct enumeration.
pub fn three_separators_bruteforce(g: &EmbeddedGraph) -> Vec<([Vertex; 3], Vec<usize>)> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut seen = vec![false; n];
                seen[a] = true;
                seen[b] = true;
                seen[c] = true;
                let mut sizes = Vec::new();
                for s in 0..n {
                    if seen[s] {
                        continue;
                    }
                    seen[s] = true;
                    let mut stack = vec![s];
                    let mut size = 0;
                    while let Some(u) = stack.pop() {
                        size += 1;
                        for &w in g.neighbors(u) {
                            if !seen[w] {
                                seen[w] = true;
                                stack.push(w);
                            }
                        }
                    }
                    sizes.push(size);
                }
                if sizes.len() >= 2 {
                    out.push(([a, b, c], sizes));
                }
            }
        }
    }
    out
}

/// Essential 4-connectivity straight from the definition.
pub fn essentially_4_connected_bruteforce(g: &EmbeddedGraph) -> bool {
    three_separators_bruteforce(g).iter().all(|(_, sizes)| sizes.contains(&1))
}
