//! The case catalog: rewrite recipes for minor faces that end below
//! `10/3`, kept as a declarative table and interpreted against a context.
//!
//! Positions in a recipe are relative to the violating face `f`: its cycle
//! edges run from position `0` to position `j`, and positions outside that
//! range continue along `C`. Each recipe is tried with `C` read in both
//! directions, which also covers the mirror image of every configuration.
//!
//! Table syntax, one directive per line:
//!
//! ```text
//! case <id> j<k>[+]            a recipe for violating minor j-faces
//! need <label> <side> <a>..<b>  a minor face on <side> with exactly the
//!                               cycle edges between positions a and b
//! need <label> <side> @<e> j<k>[+]
//!                               the minor face on <side> of edge e (the
//!                               edge from position e to e+1) has that j
//! bind ...                      as `need`, but optional
//! try <positions> => <path>     replace the subpath of C at <positions>
//!                               by <path>; labels name lone vertices
//! sweep                         detours through any minor 2-face nearby
//! contradiction                 the shape cannot occur in valid input
//! ```
//!
//! `<side>` is `opp` (across `C` from `f`) or `same`. The label `a` always
//! names the lone vertex of `f`, and `-` binds nothing.

use std::sync::OnceLock;

use serde::Serialize;

use crate::cycle::{is_isolating, Cycle, CycleContext, Side};
use crate::embed::{EmbeddedGraph, FaceId, Vertex};
use crate::error::{Error, Result};

const TABLE: &str = r"
case 2a j2
  need b opp 0..2
  contradiction
case 2b j2
  need b opp 1..3
  try 0 1 2 3 => 0 a 2 1 b 3
case 2c j2
  need d opp 0..3
  try 0 1 2 3 => 0 a 2 1 3

case 3a j3
  need b opp -1..1
  need d opp 2..4
  try -1 0 1 2 3 4 => -1 b 1 0 a 3 2 d 4
case 3b j3
  need d opp 1..4
  try 0 1 2 3 4 => 0 a 3 2 1 d 4
case 3c j3
  need b opp 0..2
  try 0 1 2 3 => 0 b 2 1 3
case 3d j3
  need b opp 1..3
  try 0 1 2 3 => 0 2 1 b 3

case 4a j4
  need d opp 1..3
  try 0 1 2 3 => 0 2 1 d 3
  try 1 2 3 4 => 1 d 3 2 4
case 4b j4
  need d opp 3..5
  bind b opp -1..2
  bind e opp 0..3
  try -1 0 1 2 3 4 5 => -1 b 2 1 0 a 4 3 d 5
  try 0 1 2 3 4 => 0 e 3 2 1 4
  try 2 3 4 5 => 2 4 3 d 5
case 4c j4
  need d opp 2..4
  need b opp -1..1
  try 1 2 3 4 => 1 3 2 d 4
  try -1 0 1 2 3 4 => -1 b 1 0 3 2 d 4
case 4d j4
  need d opp 2..4
  need b opp -1..2
  try 1 2 3 4 => 1 3 2 d 4
  try -1 0 1 2 3 4 => -1 b 2 1 0 3 4
case 4e j4
  need d opp 2..4
  need - opp @1 j4+
  bind g same -2..0
  try 1 2 3 4 => 1 3 2 d 4
  try -2 -1 0 1 => -2 g 0 -1 1
  try -3 -2 -1 0 => -3 -1 -2 g 0
case 4f j4
  need d opp 1..4
  try 0 1 2 3 4 => 0 3 2 1 d 4
  try 0 1 2 3 4 => 0 2 3 1 d 4
case 4g j4
  need d opp 2..5
  try 0 1 2 3 4 5 => 0 a 4 3 1 2 d 5
  try 1 2 3 4 5 => 1 4 3 2 d 5
  try -1 0 1 2 3 4 5 => -1 1 0 a 4 3 2 d 5
case 4h j4
  need d opp 2..5
  need - opp @1 j4
  bind g same -2..0
  try 0 1 2 3 4 5 => 0 a 4 3 1 2 d 5
  try 1 2 3 4 5 => 1 4 3 2 d 5
  try -2 -1 0 1 => -2 g 0 -1 1
case 4i j4
  need - opp 2..6
  bind h same 4..6
  need b opp -2..2
  bind g same -3..0
  try 3 4 5 6 => 3 5 4 h 6
  try 1 2 3 4 5 6 => 1 3 2 5 4 h 6
  try -3 -2 -1 0 1 2 3 => -3 g 0 -1 -2 b 2 1 3
  try -3 -2 -1 0 1 2 => -3 g 0 1 -1 -2 b 2
  try -3 -2 -1 0 1 => -3 g 0 -1 -2 1

case 5a j5
  need - opp 3..8
  need b opp 1..3
  bind g same 5..7
  try 4 5 6 7 => 4 6 5 g 7
  try 5 6 7 8 => 5 g 7 6 8
  try 0 1 2 3 => 0 2 1 b 3
  try 1 2 3 4 => 1 b 3 2 4
case 5b j5
  need - opp 3..7
  need b opp 1..3
  bind g same 5..7
  try 0 1 2 3 => 0 2 1 b 3
  try 1 2 3 4 => 1 b 3 2 4
  try 4 5 6 7 => 4 6 5 g 7
case 5c j5
  need d opp 1..4
  need b opp -1..1
  need g opp 4..6
  try -1 0 1 2 => -1 b 1 0 2
  try 3 4 5 6 => 3 5 4 g 6
  try 1 2 3 4 5 => 1 d 4 3 2 5
case 5d j5
  need d opp 2..5
  bind b opp -1..2
  bind e opp 1..3
  try 1 2 3 4 5 => 1 4 3 2 d 5
  try 0 1 2 3 => 0 2 1 e 3
  try 1 2 3 4 => 1 e 3 2 4
  try -1 0 1 2 3 => -1 b 2 1 0 3
  try -1 0 1 2 3 4 5 => -1 b 2 4 3 1 0 a 5
  try -1 0 1 2 3 4 5 => -1 b 2 1 0 4 3 5
  try 0 1 2 3 4 5 => 0 4 3 1 2 d 5
case 5e j5
  need b opp 1..3
  need d opp 3..6
  try 0 1 2 3 => 0 2 1 b 3
  try 1 2 3 4 => 1 b 3 2 4
  try 2 3 4 5 6 => 2 5 4 3 d 6
case 5f j5
  need d opp 3..5
  need b opp 1..3
  try 2 3 4 5 => 2 4 3 d 5
  try 0 1 2 3 => 0 2 1 b 3
  try 1 2 3 4 => 1 b 3 2 4
case 5g j5
  need - opp 2..4
  need - opp 4..6
  need - opp @0 j4+
  contradiction

case 6a j6
  need - opp 4..9
  need b opp 2..4
  bind g same 6..8
  try 1 2 3 4 => 1 3 2 b 4
  try 2 3 4 5 => 2 b 4 3 5
  try 5 6 7 8 => 5 7 6 g 8
  try 6 7 8 9 => 6 g 8 7 9
case 6b j6
  need - opp 4..8
  need b opp 2..4
  bind h opp -1..2
  bind g same 6..8
  try 1 2 3 4 => 1 3 2 b 4
  try 2 3 4 5 => 2 b 4 3 5
  try -1 0 1 2 3 => -1 h 2 1 0 3
  try 5 6 7 8 => 5 7 6 g 8
case 6c j6
  need d opp 2..5
  need b opp 0..2
  bind g opp 5..7
  try 0 1 2 3 => 0 b 2 1 3
  try 1 2 3 4 5 => 1 4 3 2 d 5
  try 0 1 2 3 4 5 6 7 => 0 a 6 1 2 3 4 5 g 7
case 6d j6
  need d opp 3..6
  need b opp 1..3
  try 0 1 2 3 => 0 2 1 b 3
  try 1 2 3 4 => 1 b 3 2 4
  try 2 3 4 5 6 => 2 5 4 3 d 6
case 6e j6
  need b opp 2..4
  need d opp 4..7
  try 1 2 3 4 => 1 3 2 b 4
  try 2 3 4 5 => 2 b 4 3 5
  try 3 4 5 6 7 => 3 6 5 4 d 7
case 6f j6
  need b opp 2..4
  try 1 2 3 4 => 1 3 2 b 4
  try 2 3 4 5 => 2 b 4 3 5
  sweep
case 6g j6
  need b opp 1..3
  bind g opp 5..7
  try 0 1 2 3 => 0 2 1 b 3
  try 1 2 3 4 => 1 b 3 2 4
  try 4 5 6 7 => 4 6 5 g 7
  sweep

case 7a j7
  need - opp 5..9
  bind g same 7..9
  need b opp 3..5
  bind i opp -1..1
  try 6 7 8 9 => 6 8 7 g 9
  try 2 3 4 5 => 2 4 3 b 5
  try 3 4 5 6 => 3 b 5 4 6
  try -1 0 1 2 3 4 5 6 7 => -1 i 1 2 3 4 5 6 0 a 7
case 7b j7
  need b opp 3..5
  need d opp 5..8
  bind h opp 1..3
  try 2 3 4 5 => 2 4 3 b 5
  try 3 4 5 6 => 3 b 5 4 6
  try 4 5 6 7 8 => 4 7 6 5 d 8
  try 0 1 2 3 => 0 2 1 h 3
case 7c j7
  need d opp 3..5
  bind b opp 1..3
  try 2 3 4 5 => 2 4 3 d 5
  try 3 4 5 6 => 3 d 5 4 6
  try 0 1 2 3 => 0 2 1 b 3
  sweep

case 8a j8
  need d opp 6..9
  bind h opp 2..4
  bind b opp 4..6
  try 1 2 3 4 => 1 3 2 h 4
  try 2 3 4 5 => 2 h 4 3 5
  try 3 4 5 6 => 3 5 4 b 6
  try 4 5 6 7 => 4 b 6 5 7
  try 5 6 7 8 9 => 5 8 7 6 d 9
  sweep
case 8b j8
  bind g opp 6..8
  try 5 6 7 8 => 5 7 6 g 8
  sweep

case 9 j9+
  sweep

case sw j2+
  sweep
";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rel {
    Same,
    Opp,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Shape {
    /// Exactly the cycle edges from position `a` to position `b`.
    Span(isize, isize),
    /// The face at edge `e` with `j` cycle edges (or at least `j`).
    At { edge: isize, j: usize, at_least: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Binding {
    label: Option<String>,
    required: bool,
    rel: Rel,
    shape: Shape,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Pos(isize),
    Label(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Template {
    first: isize,
    last: isize,
    path: Vec<Token>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recipe {
    pub id: String,
    j: usize,
    j_at_least: bool,
    bindings: Vec<Binding>,
    templates: Vec<Template>,
    sweep: bool,
    contradiction: bool,
}

impl Recipe {
    fn applies_to(&self, j: usize) -> bool {
        if self.j_at_least {
            j >= self.j
        } else {
            j == self.j
        }
    }
}

/// The parsed recipe table.
pub fn recipes() -> &'static [Recipe] {
    static RECIPES: OnceLock<Vec<Recipe>> = OnceLock::new();
    RECIPES.get_or_init(|| parse_table(TABLE).expect("built-in recipe table parses"))
}

fn parse_j(tok: &str) -> Option<(usize, bool)> {
    let t = tok.strip_prefix('j')?;
    match t.strip_suffix('+') {
        Some(k) => Some((k.parse().ok()?, true)),
        None => Some((t.parse().ok()?, false)),
    }
}

fn parse_table(text: &str) -> std::result::Result<Vec<Recipe>, String> {
    let mut out: Vec<Recipe> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |m: &str| format!("recipe table line {}: {m}: {line:?}", lineno + 1);
        let words: Vec<&str> = line.split_whitespace().collect();
        if words[0] == "case" {
            let (j, j_at_least) = words.get(2).and_then(|w| parse_j(w)).ok_or_else(|| err("bad j"))?;
            out.push(Recipe {
                id: words[1].to_string(),
                j,
                j_at_least,
                bindings: Vec::new(),
                templates: Vec::new(),
                sweep: false,
                contradiction: false,
            });
            continue;
        }
        let r = out.last_mut().ok_or_else(|| err("directive before first case"))?;
        match words[0] {
            "need" | "bind" => {
                if words.len() < 4 {
                    return Err(err("too few fields"));
                }
                let label = (words[1] != "-").then(|| words[1].to_string());
                let rel = match words[2] {
                    "opp" => Rel::Opp,
                    "same" => Rel::Same,
                    _ => return Err(err("side must be opp or same")),
                };
                let shape = if let Some(e) = words[3].strip_prefix('@') {
                    let edge = e.parse().map_err(|_| err("bad edge"))?;
                    let (j, at_least) =
                        words.get(4).and_then(|w| parse_j(w)).ok_or_else(|| err("bad j"))?;
                    Shape::At { edge, j, at_least }
                } else {
                    let (a, b) = words[3].split_once("..").ok_or_else(|| err("bad span"))?;
                    let a: isize = a.parse().map_err(|_| err("bad span"))?;
                    let b: isize = b.parse().map_err(|_| err("bad span"))?;
                    if b <= a {
                        return Err(err("empty span"));
                    }
                    Shape::Span(a, b)
                };
                r.bindings.push(Binding { label, required: words[0] == "need", rel, shape });
            }
            "try" => {
                let arrow = words.iter().position(|&w| w == "=>").ok_or_else(|| err("missing =>"))?;
                let removed = words[1..arrow]
                    .iter()
                    .map(|w| w.parse::<isize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| err("removed path must be positions"))?;
                if removed.len() < 2 || removed.windows(2).any(|w| w[1] != w[0] + 1) {
                    return Err(err("removed path must be consecutive positions"));
                }
                let path: Vec<Token> = words[arrow + 1..]
                    .iter()
                    .map(|w| w.parse().map(Token::Pos).unwrap_or_else(|_| Token::Label(w.to_string())))
                    .collect();
                let (first, last) = (removed[0], *removed.last().unwrap());
                if path.first() != Some(&Token::Pos(first)) || path.last() != Some(&Token::Pos(last)) {
                    return Err(err("replacement must keep the endpoints"));
                }
                for k in &removed {
                    if !path.contains(&Token::Pos(*k)) {
                        return Err(err("replacement drops a cycle vertex"));
                    }
                }
                if path.len() <= removed.len() {
                    return Err(err("replacement is not longer"));
                }
                r.templates.push(Template { first, last, path });
            }
            "sweep" => r.sweep = true,
            "contradiction" => r.contradiction = true,
            _ => return Err(err("unknown directive")),
        }
    }
    Ok(out)
}

/// A cycle rewrite: the subpath `removed` of `C` (in cycle order) is
/// replaced by `replacement`, which has the same ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionStep {
    pub case_id: String,
    /// Cycle index of `removed[0]`.
    pub start: usize,
    pub removed: Vec<Vertex>,
    pub replacement: Vec<Vertex>,
    pub absorbed: Vec<Vertex>,
}

impl ExtensionStep {
    /// Builds and checks a step from a subpath of `C` given in either
    /// direction.
    pub fn new(
        case_id: &str,
        cycle: &Cycle,
        g: &EmbeddedGraph,
        removed: Vec<Vertex>,
        replacement: Vec<Vertex>,
    ) -> Result<ExtensionStep> {
        let invalid = |msg: String| Error::InvalidStep { case_id: case_id.to_string(), msg };
        let c = cycle.len();
        if removed.len() < 2 || removed.len() > c {
            return Err(invalid(format!("removed path has {} vertices", removed.len())));
        }
        let p0 = cycle.position(removed[0]).ok_or_else(|| invalid("removed path leaves C".into()))?;
        let forward = (0..removed.len()).all(|i| cycle.vertices()[(p0 + i) % c] == removed[i]);
        let backward = (0..removed.len()).all(|i| cycle.vertices()[(p0 + c - i) % c] == removed[i]);
        let (removed, replacement) = if forward {
            (removed, replacement)
        } else if backward {
            (removed.into_iter().rev().collect(), replacement.into_iter().rev().collect::<Vec<_>>())
        } else {
            return Err(invalid("removed vertices are not a subpath of C".into()));
        };
        if replacement.first() != removed.first() || replacement.last() != removed.last() {
            return Err(invalid("endpoints differ".into()));
        }
        if replacement.len() <= removed.len() {
            return Err(invalid("replacement is not longer".into()));
        }
        let mut seen = replacement.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("replacement repeats a vertex".into()));
        }
        if let Some(v) = removed.iter().find(|v| seen.binary_search(v).is_err()) {
            return Err(invalid(format!("replacement drops cycle vertex {v}")));
        }
        let absorbed: Vec<Vertex> = replacement.iter().copied().filter(|v| !removed.contains(v)).collect();
        if let Some(v) = absorbed.iter().find(|&&v| cycle.contains(v)) {
            return Err(invalid(format!("vertex {v} is already elsewhere on C")));
        }
        if let Some(w) = replacement.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(invalid(format!("{}-{} is not an edge", w[0], w[1])));
        }
        let start = cycle.position(removed[0]).unwrap();
        Ok(ExtensionStep { case_id: case_id.to_string(), start, removed, replacement, absorbed })
    }

    /// The cycle after the rewrite.
    pub fn apply(&self, g: &EmbeddedGraph, cycle: &Cycle) -> Result<Cycle> {
        cycle.replace(g, self.start, self.removed.len(), &self.replacement)
    }
}

/// Reading of positions relative to a face, in one direction along `C`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Frame {
    start: usize,
    j: usize,
    c: usize,
    forward: bool,
}

impl Frame {
    pub(crate) fn new(ctx: &CycleContext, f: FaceId, forward: bool) -> Frame {
        let info = &ctx.faces[f];
        Frame { start: info.c_edges[0], j: info.j, c: ctx.c(), forward }
    }

    /// Cycle index of position `k`.
    pub(crate) fn pos(&self, k: isize) -> usize {
        let (s, j, c) = (self.start as isize, self.j as isize, self.c as isize);
        if self.forward { s + k } else { s + j - k }.rem_euclid(c) as usize
    }

    /// Cycle edge index of the edge between positions `k` and `k + 1`.
    fn edge(&self, k: isize) -> isize {
        let (s, j, c) = (self.start as isize, self.j as isize, self.c as isize);
        if self.forward { s + k } else { s + j - k - 1 }.rem_euclid(c)
    }
}

/// Outcome of matching the catalog against one face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Match {
    Step(ExtensionStep),
    /// A shape the recipes mark impossible was found, and nothing applied.
    Contradiction(String),
    Unmatched,
}

struct Bound {
    labels: Vec<(String, Vertex)>,
}

impl Bound {
    fn get(&self, l: &str) -> Option<Vertex> {
        self.labels.iter().find(|(k, _)| k == l).map(|&(_, v)| v)
    }
}

fn bind_face(ctx: &CycleContext, fr: &Frame, side: Side, shape: &Shape) -> Option<Vertex> {
    let face_at = |k: isize| ctx.face_at(fr.edge(k), side);
    let (face, ok) = match *shape {
        Shape::Span(a, b) => {
            let f = face_at(a);
            let info = &ctx.faces[f];
            let ok = info.j == (b - a) as usize && (a..b).all(|k| face_at(k) == f);
            (f, ok)
        }
        Shape::At { edge, j, at_least } => {
            let f = face_at(edge);
            let fj = ctx.faces[f].j;
            (f, if at_least { fj >= j } else { fj == j })
        }
    };
    let info = &ctx.faces[face];
    if ok && info.is_minor() {
        info.lone_vertex
    } else {
        None
    }
}

fn instantiate(
    ctx: &CycleContext,
    fr: &Frame,
    bound: &Bound,
    case_id: &str,
    first: isize,
    last: isize,
    path: &[Token],
) -> Option<ExtensionStep> {
    if (last - first + 1) as usize > ctx.c() {
        return None;
    }
    let removed: Vec<Vertex> = (first..=last).map(|k| ctx.cycle.vertices()[fr.pos(k)]).collect();
    let replacement = path
        .iter()
        .map(|t| match t {
            Token::Pos(k) => Some(ctx.cycle.vertices()[fr.pos(*k)]),
            Token::Label(l) => bound.get(l),
        })
        .collect::<Option<Vec<_>>>()?;
    ExtensionStep::new(case_id, &ctx.cycle, ctx.base, removed, replacement).ok()
}

/// Detours through minor 2- and 3-faces on either side whose cycle edges
/// lie near `f`. A 2-face is entered from either end; a 3-face is walked
/// backwards, which needs a chord to one of its ends.
fn sweep(ctx: &CycleContext, fr: &Frame, case_id: &str) -> Option<ExtensionStep> {
    let l = || Token::Label("L".into());
    let at = Token::Pos;
    for p in -4..=(fr.j as isize + 2) {
        for side in [Side::Inside, Side::Outside] {
            for k in [2, 3] {
                let Some(v) = bind_face(ctx, fr, side, &Shape::Span(p, p + k)) else {
                    continue;
                };
                let bound = Bound { labels: vec![("L".into(), v)] };
                let detours = if k == 2 {
                    vec![
                        (p - 1, p + 2, vec![at(p - 1), at(p + 1), at(p), l(), at(p + 2)]),
                        (p, p + 3, vec![at(p), l(), at(p + 2), at(p + 1), at(p + 3)]),
                    ]
                } else {
                    vec![
                        (p - 1, p + 3, vec![at(p - 1), at(p + 2), at(p + 1), at(p), l(), at(p + 3)]),
                        (p, p + 4, vec![at(p), l(), at(p + 3), at(p + 2), at(p + 1), at(p + 4)]),
                    ]
                };
                for (first, last, path) in detours {
                    if let Some(s) = instantiate(ctx, fr, &bound, case_id, first, last, &path) {
                        return Some(s);
                    }
                }
            }
        }
    }
    None
}

/// Tries every recipe for `f`'s `j`, in table order, reading `C` forward
/// then backward; returns the first valid rewrite.
pub fn match_case(ctx: &CycleContext, f: FaceId) -> Result<Match> {
    let info = &ctx.faces[f];
    if !info.is_minor() {
        return Ok(Match::Unmatched);
    }
    let a = info.lone_vertex.expect("minor faces have a lone vertex");
    let mut contradiction = None;
    for r in recipes().iter().filter(|r| r.applies_to(info.j)) {
        for forward in [true, false] {
            let fr = Frame::new(ctx, f, forward);
            let mut bound = Bound { labels: vec![("a".into(), a)] };
            let mut shape_ok = true;
            for b in &r.bindings {
                let side = match b.rel {
                    Rel::Same => info.side,
                    Rel::Opp => info.side.flip(),
                };
                match (bind_face(ctx, &fr, side, &b.shape), &b.label) {
                    (Some(v), Some(l)) => bound.labels.push((l.clone(), v)),
                    (Some(_), None) => {}
                    (None, _) if b.required => {
                        shape_ok = false;
                        break;
                    }
                    (None, _) => {}
                }
            }
            if !shape_ok {
                continue;
            }
            for t in &r.templates {
                if let Some(step) = instantiate(ctx, &fr, &bound, &r.id, t.first, t.last, &t.path) {
                    return Ok(Match::Step(step));
                }
            }
            if r.sweep {
                if let Some(step) = sweep(ctx, &fr, &r.id) {
                    return Ok(Match::Step(step));
                }
            }
            if r.contradiction && contradiction.is_none() {
                contradiction = Some(r.id.clone());
            }
        }
    }
    Ok(contradiction.map_or(Match::Unmatched, Match::Contradiction))
}

/// Checks the invariants of an applied step: strictly longer, every old
/// cycle vertex kept, still isolating.
pub fn check_step(g: &EmbeddedGraph, old: &Cycle, new: &Cycle, step: &ExtensionStep) -> Result<()> {
    let invalid = |msg: &str| Error::InvalidStep { case_id: step.case_id.clone(), msg: msg.to_string() };
    if new.len() <= old.len() {
        return Err(invalid("cycle did not grow"));
    }
    if old.vertices().iter().any(|&v| !new.contains(v)) {
        return Err(invalid("a cycle vertex was dropped"));
    }
    if is_isolating(g, old) && !is_isolating(g, new) {
        return Err(invalid("cycle is no longer isolating"));
    }
    Ok(())
}
