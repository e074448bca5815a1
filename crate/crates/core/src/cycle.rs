//! Cycles on an embedded graph and the structure they induce.
//!
//! For a cycle `C` of `G`, `H` is `G` with every chord of `C` deleted. The
//! faces of `H` on one side of `C` touch only vertices of that side, and
//! are classified by how many vertices off `C` they see: none
//! (cycle-bounded), exactly one (minor) or more (major).

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::embed::{EmbeddedGraph, FaceId, Vertex};
use crate::error::{Error, Result};

const OFF: usize = usize::MAX;

/// An ordered cycle `v0 v1 ... v(c-1)` of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cycle {
    vertices: Vec<Vertex>,
    #[serde(skip)]
    pos: Vec<usize>,
}

impl Cycle {
    pub fn new(g: &EmbeddedGraph, vertices: Vec<Vertex>) -> Result<Self> {
        let c = vertices.len();
        if c < 3 {
            return Err(Error::NotACycle(format!("{c} vertices")));
        }
        let mut pos = vec![OFF; g.n()];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= g.n() {
                return Err(Error::NotACycle(format!("vertex {v} out of range")));
            }
            if pos[v] != OFF {
                return Err(Error::NotACycle(format!("vertex {v} repeated")));
            }
            pos[v] = i;
        }
        for i in 0..c {
            let (x, y) = (vertices[i], vertices[(i + 1) % c]);
            if !g.has_edge(x, y) {
                return Err(Error::NotACycle(format!("{x}-{y} is not an edge")));
            }
        }
        Ok(Cycle { vertices, pos })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex at cyclic index `i` (any integer).
    pub fn at(&self, i: isize) -> Vertex {
        self.vertices[i.rem_euclid(self.len() as isize) as usize]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.pos[v] != OFF
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        (self.pos[v] != OFF).then_some(self.pos[v])
    }

    /// Cycle edge `i` joins `v_i` and `v_(i+1)`.
    pub fn edge(&self, i: usize) -> (Vertex, Vertex) {
        (self.vertices[i], self.vertices[(i + 1) % self.len()])
    }

    /// Index of the cycle edge `xy`, if `xy` is one.
    pub fn edge_index(&self, x: Vertex, y: Vertex) -> Option<usize> {
        let (px, py) = (self.position(x)?, self.position(y)?);
        let c = self.len();
        if (px + 1) % c == py {
            Some(px)
        } else if (py + 1) % c == px {
            Some(py)
        } else {
            None
        }
    }

    pub fn is_chord(&self, x: Vertex, y: Vertex) -> bool {
        self.contains(x) && self.contains(y) && self.edge_index(x, y).is_none()
    }

    /// Replaces the `len` vertices starting at index `start` (a path of
    /// `len - 1` edges) with `replacement`, which must have the same ends.
    pub fn replace(&self, g: &EmbeddedGraph, start: usize, len: usize, replacement: &[Vertex]) -> Result<Cycle> {
        let c = self.len();
        let first = self.vertices[start % c];
        let last = self.vertices[(start + len - 1) % c];
        if replacement.first() != Some(&first) || replacement.last() != Some(&last) {
            return Err(Error::NotACycle("replacement endpoints differ".into()));
        }
        let mut vs = replacement.to_vec();
        for k in len..c {
            vs.push(self.vertices[(start + k) % c]);
        }
        Cycle::new(g, vs)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("cycle:");
        for v in &self.vertices {
            write!(s, " {v}").unwrap();
        }
        s
    }

    pub fn parse_text(g: &EmbeddedGraph, text: &str) -> Result<Cycle> {
        let body = text
            .trim()
            .strip_prefix("cycle:")
            .ok_or_else(|| Error::MalformedInput { line: 1, msg: "expected `cycle: ...`".into() })?;
        let vs = body
            .split_whitespace()
            .map(|t| {
                t.parse().map_err(|_| Error::MalformedInput { line: 1, msg: format!("bad vertex {t:?}") })
            })
            .collect::<Result<Vec<_>>>()?;
        Cycle::new(g, vs)
    }

    /// Rotation with the least vertex first, in the lexicographically
    /// smaller of the two directions.
    pub fn canonical(&self) -> Vec<Vertex> {
        let c = self.len();
        let k = (0..c).min_by_key(|&i| self.vertices[i]).unwrap();
        let fwd: Vec<_> = (0..c).map(|i| self.vertices[(k + i) % c]).collect();
        let bwd: Vec<_> = (0..c).map(|i| self.vertices[(k + c - i) % c]).collect();
        fwd.min(bwd)
    }
}

/// Every component of `G - V(C)` is a single vertex of degree three.
pub fn is_isolating(g: &EmbeddedGraph, c: &Cycle) -> bool {
    (0..g.n())
        .filter(|&v| !c.contains(v))
        .all(|v| g.degree(v) == 3 && g.neighbors(v).iter().all(|&u| c.contains(u)))
}

/// Cycle edges `xy` whose ends share a neighbor off the cycle, each with
/// the least such neighbor.
pub fn extendable_edges(g: &EmbeddedGraph, c: &Cycle) -> Vec<((Vertex, Vertex), Vertex)> {
    (0..c.len())
        .filter_map(|i| {
            let (x, y) = c.edge(i);
            common_off_neighbor(g, c, x, y).map(|v| ((x, y), v))
        })
        .collect()
}

pub(crate) fn common_off_neighbor(g: &EmbeddedGraph, c: &Cycle, x: Vertex, y: Vertex) -> Option<Vertex> {
    g.neighbors(x)
        .iter()
        .copied()
        .filter(|&v| !c.contains(v) && g.has_edge(v, y))
        .min()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Inside,
    Outside,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Inside => Side::Outside,
            Side::Outside => Side::Inside,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FaceClass {
    Minor,
    Major,
    CycleBounded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceInfo {
    pub id: FaceId,
    pub side: Side,
    pub class: FaceClass,
    pub j: usize,
    /// Cycle-edge indices of the face. For minor faces these form a run
    /// along `C` and are listed in cycle order from the start of the run.
    pub c_edges: Vec<usize>,
    pub lone_vertex: Option<Vertex>,
}

impl FaceInfo {
    pub fn is_minor(&self) -> bool {
        self.class == FaceClass::Minor
    }

    pub fn is_major(&self) -> bool {
        self.class == FaceClass::Major
    }
}

/// Everything derived from a cycle `C` of `G`.
#[derive(Debug, Clone)]
pub struct CycleContext<'g> {
    pub base: &'g EmbeddedGraph,
    pub cycle: Cycle,
    pub h: EmbeddedGraph,
    pub v_minus: Vec<Vertex>,
    pub v_plus: Vec<Vertex>,
    pub faces: Vec<FaceInfo>,
    /// `edge_faces[i][side]`: the face of `H` on that side of cycle edge `i`.
    edge_faces: Vec<[FaceId; 2]>,
    /// Sparse `m(f, f')`, stored for both orders.
    m: BTreeMap<(FaceId, FaceId), usize>,
}

impl<'g> CycleContext<'g> {
    pub fn build(g: &'g EmbeddedGraph, cycle: &Cycle) -> Result<Self> {
        let cycle = Cycle::new(g, cycle.vertices().to_vec())?;
        let c = cycle.len();
        let rotations = (0..g.n())
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| !cycle.is_chord(u, v))
                    .collect()
            })
            .collect();
        let h = EmbeddedGraph::from_rotations(rotations)
            .map_err(|e| Error::Internal(format!("deleting chords broke the embedding: {e}")))?;

        let nf = h.faces().len();
        let mut side: Vec<Option<Side>> = vec![None; nf];
        let mut queue = VecDeque::new();
        let mut edge_faces = Vec::with_capacity(c);
        for i in 0..c {
            let (x, y) = cycle.edge(i);
            let fin = h.face_of_dart(x, y).expect("cycle edge in H");
            let fout = h.face_of_dart(y, x).expect("cycle edge in H");
            edge_faces.push([fin, fout]);
            for (f, s) in [(fin, Side::Inside), (fout, Side::Outside)] {
                match side[f] {
                    None => {
                        side[f] = Some(s);
                        queue.push_back(f);
                    }
                    Some(t) if t != s => {
                        return Err(Error::Internal(format!("face {f} lies on both sides of the cycle")))
                    }
                    _ => {}
                }
            }
        }
        while let Some(f) = queue.pop_front() {
            let s = side[f];
            for &(u, v) in &h.faces()[f].darts {
                if cycle.edge_index(u, v).is_some() {
                    continue;
                }
                let f2 = h.face_of_dart(v, u).unwrap();
                match side[f2] {
                    None => {
                        side[f2] = s;
                        queue.push_back(f2);
                    }
                    t if t != s => {
                        return Err(Error::Internal(format!("faces {f} and {f2} straddle the cycle")))
                    }
                    _ => {}
                }
            }
        }

        let mut vertex_side: Vec<Option<Side>> = vec![None; g.n()];
        let mut faces = Vec::with_capacity(nf);
        for (f, face) in h.faces().iter().enumerate() {
            let s = side[f].ok_or_else(|| Error::Internal(format!("face {f} unreachable")))?;
            let mut lone: Vec<Vertex> = face.vertices().filter(|&v| !cycle.contains(v)).collect();
            lone.sort_unstable();
            lone.dedup();
            for &v in &lone {
                match vertex_side[v] {
                    None => vertex_side[v] = Some(s),
                    Some(t) if t != s => {
                        return Err(Error::Internal(format!("vertex {v} is on both sides of the cycle")))
                    }
                    _ => {}
                }
            }
            let mut c_edges: Vec<usize> =
                face.darts.iter().filter_map(|&(u, v)| cycle.edge_index(u, v)).collect();
            c_edges.sort_unstable();
            let class = match lone.len() {
                0 => FaceClass::CycleBounded,
                1 => FaceClass::Minor,
                _ => FaceClass::Major,
            };
            if let Some(k) = (1..c_edges.len()).find(|&k| c_edges[k] != c_edges[k - 1] + 1) {
                c_edges.rotate_left(k);
            }
            if class == FaceClass::Minor {
                let run = c_edges.windows(2).all(|w| (w[0] + 1) % c == w[1]);
                if !run {
                    return Err(Error::Internal(format!("minor face {f} has scattered cycle edges")));
                }
            }
            faces.push(FaceInfo {
                id: f,
                side: s,
                class,
                j: c_edges.len(),
                c_edges,
                lone_vertex: (class == FaceClass::Minor).then(|| lone[0]),
            });
        }

        let mut m = BTreeMap::new();
        for &[a, b] in &edge_faces {
            *m.entry((a, b)).or_insert(0) += 1;
            *m.entry((b, a)).or_insert(0) += 1;
        }
        let mut v_minus = Vec::new();
        let mut v_plus = Vec::new();
        for (v, s) in vertex_side.iter().enumerate() {
            match s {
                Some(Side::Inside) => v_minus.push(v),
                Some(Side::Outside) => v_plus.push(v),
                None if !cycle.contains(v) => {
                    return Err(Error::Internal(format!("vertex {v} is on no face of H")))
                }
                None => {}
            }
        }
        Ok(CycleContext { base: g, cycle, h, v_minus, v_plus, faces, edge_faces, m })
    }

    pub fn c(&self) -> usize {
        self.cycle.len()
    }

    /// The face on `side` of cycle edge `i` (any integer, taken mod c).
    pub fn face_at(&self, i: isize, side: Side) -> FaceId {
        self.edge_faces[i.rem_euclid(self.c() as isize) as usize][side.index()]
    }

    /// The other face of `H` containing cycle edge `edge`, if `f` has it.
    pub fn opposite(&self, f: FaceId, edge: usize) -> Option<FaceId> {
        let [a, b] = self.edge_faces[edge];
        if a == f {
            Some(b)
        } else if b == f {
            Some(a)
        } else {
            None
        }
    }

    /// Number of cycle edges shared by `f` and `g`.
    pub fn m(&self, f: FaceId, g: FaceId) -> usize {
        self.m.get(&(f, g)).copied().unwrap_or(0)
    }

    /// Faces opposite to `f` with their `m` values, in order of first
    /// appearance along `f`'s cycle edges.
    pub fn opposites(&self, f: FaceId) -> Vec<(FaceId, usize)> {
        let mut out: Vec<(FaceId, usize)> = Vec::new();
        for &e in &self.faces[f].c_edges {
            let o = self.opposite(f, e).unwrap();
            if !out.iter().any(|&(g, _)| g == o) {
                out.push((o, self.m(f, o)));
            }
        }
        out
    }

    pub fn side_empty(&self) -> bool {
        self.v_minus.is_empty() || self.v_plus.is_empty()
    }

    pub fn minor_faces(&self) -> impl Iterator<Item = &FaceInfo> {
        self.faces.iter().filter(|f| f.is_minor())
    }

    /// `|M- ∪ M+|`.
    pub fn minor_count(&self) -> usize {
        self.minor_faces().count()
    }

    /// `|V- ∪ V+|`.
    pub fn off_cycle_count(&self) -> usize {
        self.v_minus.len() + self.v_plus.len()
    }

    /// The counting lemma `|M| >= |V- ∪ V+| + 2`.
    pub fn counting_bound_holds(&self) -> bool {
        self.minor_count() >= self.off_cycle_count() + 2
    }

    pub fn dump(&self) -> ContextDump {
        ContextDump {
            cycle: self.cycle.vertices().to_vec(),
            faces: self.faces.clone(),
            v_minus: self.v_minus.clone(),
            v_plus: self.v_plus.clone(),
            m: self
                .m
                .iter()
                .filter(|((a, b), _)| a < b)
                .map(|(&(a, b), &count)| MEntry { f: a, g: b, count })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MEntry {
    pub f: FaceId,
    pub g: FaceId,
    pub count: usize,
}

/// JSON shape of a context for auditing.
#[derive(Debug, Clone, Serialize)]
pub struct ContextDump {
    pub cycle: Vec<Vertex>,
    pub faces: Vec<FaceInfo>,
    pub v_minus: Vec<Vertex>,
    pub v_plus: Vec<Vertex>,
    pub m: Vec<MEntry>,
}
