//! Plane graphs stored as rotation systems.
//!
//! Every vertex carries the clockwise cyclic order of its neighbors. Faces
//! are derived by the usual next-edge walk: after arriving at `v` along
//! `u -> v`, leave along `v -> w` where `w` follows `u` in the rotation of
//! `v`. A connected rotation system describes a sphere embedding exactly
//! when `n - e + f = 2`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type FaceId = usize;

/// A directed edge `(tail, head)`.
pub type Dart = (Vertex, Vertex);

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

/// A closed walk of darts bounding one face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: FaceId,
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Boundary vertices in walk order (a vertex may repeat on a
    /// non-2-connected boundary).
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.darts.iter().map(|&(u, _)| u)
    }
}

/// A simple, connected graph with a fixed sphere embedding.
///
/// Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rotations: Vec<Vec<Vertex>>,
    /// Per vertex: `(neighbor, index in rotation)`, sorted by neighbor.
    lookup: Vec<Vec<(Vertex, usize)>>,
    edge_count: usize,
    faces: Vec<Face>,
    /// `dart_face[v][i]` is the face containing `v -> rotations[v][i]`.
    dart_face: Vec<Vec<FaceId>>,
}

impl EmbeddedGraph {
    /// Validates a rotation system and derives its faces.
    pub fn from_rotations(rotations: Vec<Vec<Vertex>>) -> Result<Self> {
        let n = rotations.len();
        if n < 2 {
            return Err(Error::TooSmall { n, min: 2 });
        }
        let mut lookup = Vec::with_capacity(n);
        for (v, rot) in rotations.iter().enumerate() {
            let mut sorted: Vec<(Vertex, usize)> =
                rot.iter().enumerate().map(|(i, &u)| (u, i)).collect();
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(Error::NotSimple(format!(
                        "parallel edge {v}-{} in rotation of {v}",
                        w[0].0
                    )));
                }
            }
            for &(u, _) in &sorted {
                if u >= n {
                    return Err(Error::MalformedInput {
                        line: 0,
                        msg: format!("vertex {v} lists neighbor {u} but n = {n}"),
                    });
                }
                if u == v {
                    return Err(Error::NotSimple(format!("loop at vertex {v}")));
                }
            }
            lookup.push(sorted);
        }
        let mut degree_sum = 0;
        for (v, adj) in lookup.iter().enumerate() {
            degree_sum += adj.len();
            for &(u, _) in adj {
                if lookup[u].binary_search_by_key(&v, |&(w, _)| w).is_err() {
                    return Err(Error::AsymmetricAdjacency { u: v, v: u });
                }
            }
        }
        let mut g = EmbeddedGraph {
            rotations,
            lookup,
            edge_count: degree_sum / 2,
            faces: Vec::new(),
            dart_face: Vec::new(),
        };
        if !g.is_connected_without(&vec![false; n]) {
            return Err(Error::Disconnected);
        }
        g.trace_faces();
        let (e, f) = (g.edge_count, g.faces.len());
        if n + f != e + 2 {
            return Err(Error::EulerViolation { n, e, f });
        }
        Ok(g)
    }

    fn trace_faces(&mut self) {
        let mut dart_face: Vec<Vec<FaceId>> =
            self.rotations.iter().map(|r| vec![usize::MAX; r.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..self.n() {
            for &(v, i) in &self.lookup[u] {
                if dart_face[u][i] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut darts = Vec::new();
                let (mut a, mut b, mut idx) = (u, v, i);
                loop {
                    dart_face[a][idx] = id;
                    darts.push((a, b));
                    let next = self.succ(b, a);
                    idx = self.rotation_index(b, next).expect("symmetric adjacency");
                    a = b;
                    b = next;
                    if dart_face[a][idx] != usize::MAX {
                        break;
                    }
                }
                faces.push(Face { id, darts });
            }
        }
        self.faces = faces;
        self.dart_face = dart_face;
    }

    pub fn n(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotations[v].len()
    }

    /// Neighbors of `v` in clockwise order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rotations
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rotation_index(u, v).is_some()
    }

    /// Position of `u` in the rotation of `v`.
    pub fn rotation_index(&self, v: Vertex, u: Vertex) -> Option<usize> {
        self.lookup[v]
            .binary_search_by_key(&u, |&(w, _)| w)
            .ok()
            .map(|k| self.lookup[v][k].1)
    }

    /// Clockwise successor of `u` around `v`.
    pub fn succ(&self, v: Vertex, u: Vertex) -> Vertex {
        let rot = &self.rotations[v];
        let i = self.rotation_index(v, u).expect("u must be a neighbor of v");
        rot[(i + 1) % rot.len()]
    }

    /// Clockwise predecessor of `u` around `v`.
    pub fn pred(&self, v: Vertex, u: Vertex) -> Vertex {
        let rot = &self.rotations[v];
        let i = self.rotation_index(v, u).expect("u must be a neighbor of v");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// The face containing the dart `u -> v`.
    pub fn face_of_dart(&self, u: Vertex, v: Vertex) -> Option<FaceId> {
        self.rotation_index(u, v).map(|i| self.dart_face[u][i])
    }

    /// Undirected edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.lookup.iter().enumerate().flat_map(|(u, adj)| {
            adj.iter().filter(move |&&(v, _)| u < v).map(move |&(v, _)| (u, v))
        })
    }

    /// The same graph with every rotation reversed.
    pub fn mirrored(&self) -> EmbeddedGraph {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        EmbeddedGraph::from_rotations(rotations).expect("mirror of a valid embedding is valid")
    }

    pub fn is_triangulation(&self) -> bool {
        self.faces.iter().all(|f| f.len() == 3)
    }

    pub fn is_connected_without(&self, removed: &[bool]) -> bool {
        self.components_without(removed).len() <= 1
    }

    /// Connected components of the graph minus the vertices flagged in
    /// `removed`, each sorted, ordered by least vertex.
    pub fn components_without(&self, removed: &[bool]) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = removed.to_vec();
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.rotations[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Cut vertices of the graph minus `removed`.
    pub fn articulation_points(&self, removed: &[bool]) -> Vec<Vertex> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut time = 0;
        // (vertex, parent, next rotation index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = Vec::new();
        for root in 0..n {
            if removed[root] || disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            stack.push((root, usize::MAX, 0));
            while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
                if *next < self.rotations[v].len() {
                    let w = self.rotations[v][*next];
                    *next += 1;
                    if removed[w] || w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// True iff no separator of size at most two exists.
    pub fn is_3_connected(&self) -> Result<bool> {
        let n = self.n();
        if n < 4 {
            return Err(Error::TooSmall { n, min: 4 });
        }
        let mut removed = vec![false; n];
        if !self.articulation_points(&removed).is_empty() {
            return Ok(false);
        }
        for a in 0..n {
            removed[a] = true;
            let ok = self.articulation_points(&removed).is_empty();
            removed[a] = false;
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All 3-separators in lexicographic order of their vertex triples.
    ///
    /// Every triple is covered: for each pair `a < b`, the cut vertices
    /// `c > b` of `G - {a, b}` are exactly the triples `{a, b, c}` whose
    /// removal disconnects the graph.
    pub fn three_separators(&self) -> Result<Vec<Separator>> {
        if !self.is_3_connected()? {
            return Err(Error::NotThreeConnected);
        }
        let n = self.n();
        let mut out = Vec::new();
        let mut removed = vec![false; n];
        for a in 0..n {
            removed[a] = true;
            for b in a + 1..n {
                removed[b] = true;
                let mut cuts = self.articulation_points(&removed);
                cuts.retain(|&c| c > b);
                for c in cuts {
                    removed[c] = true;
                    let components = self.components_without(&removed);
                    removed[c] = false;
                    if components.len() != 2 {
                        return Err(Error::Internal(format!(
                            "3-separator {{{a}, {b}, {c}}} leaves {} components",
                            components.len()
                        )));
                    }
                    out.push(Separator { vertices: vec![a, b, c], components });
                }
                removed[b] = false;
            }
            removed[a] = false;
        }
        Ok(out)
    }

    /// `Ok` iff every 3-separator cuts off a single vertex.
    pub fn essential_4_connectivity(&self) -> Result<Essential4> {
        Ok(self
            .three_separators()?
            .into_iter()
            .find(|s| !s.is_trivial())
            .map_or(Essential4::Ok, Essential4::Witness))
    }

    pub fn is_essentially_4_connected(&self) -> bool {
        matches!(self.essential_4_connectivity(), Ok(Essential4::Ok))
    }

    /// 4-connected triangulation: a triangulation without separating
    /// triangles (every 3-set leaves the graph connected).
    pub fn is_4_connected_triangulation(&self) -> bool {
        self.n() >= 6
            && self.is_triangulation()
            && matches!(self.three_separators(), Ok(s) if s.is_empty())
    }

    /// Serializes in the rotation-system text format.
    pub fn to_rotation_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "n {}", self.n()).unwrap();
        for (v, rot) in self.rotations.iter().enumerate() {
            write!(s, "{v}:").unwrap();
            for u in rot {
                write!(s, " {u}").unwrap();
            }
            s.push('\n');
        }
        s
    }
}

/// A vertex set whose removal disconnects the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Separator {
    pub vertices: Vec<Vertex>,
    pub components: Vec<Vec<Vertex>>,
}

impl Separator {
    /// At least one component is a single vertex.
    pub fn is_trivial(&self) -> bool {
        self.components.iter().any(|c| c.len() == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Essential4 {
    Ok,
    Witness(Separator),
}

/// Parses the rotation-system text format:
///
/// ```text
/// # comment
/// n 4
/// 0: 1 2 3
/// ...
/// ```
pub fn parse_rotation_text(input: &str) -> Result<EmbeddedGraph> {
    let mut n: Option<usize> = None;
    let mut rotations: Vec<Option<Vec<Vertex>>> = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = lineno + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let bad = |msg: String| Error::MalformedInput { line, msg };
        let Some(count) = n else {
            let mut it = text.split_whitespace();
            let (Some("n"), Some(c), None) = (it.next(), it.next(), it.next()) else {
                return Err(bad(format!("expected `n <count>`, found {text:?}")));
            };
            let c: usize = c.parse().map_err(|_| bad(format!("bad vertex count {c:?}")))?;
            n = Some(c);
            rotations = vec![None; c];
            continue;
        };
        let (head, tail) = text
            .split_once(':')
            .ok_or_else(|| bad(format!("expected `<v>: <neighbors>`, found {text:?}")))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad vertex id {:?}", head.trim())))?;
        if v >= count {
            return Err(bad(format!("vertex {v} out of range (n = {count})")));
        }
        if rotations[v].is_some() {
            return Err(bad(format!("vertex {v} listed twice")));
        }
        let nbrs = tail
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| bad(format!("bad neighbor id {t:?}")))
                    .and_then(|u| {
                        if u < count {
                            Ok(u)
                        } else {
                            Err(bad(format!("neighbor {u} out of range (n = {count})")))
                        }
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        rotations[v] = Some(nbrs);
    }
    if n.is_none() {
        return Err(Error::MalformedInput { line: 0, msg: "missing `n <count>` line".into() });
    }
    EmbeddedGraph::from_rotations(rotations.into_iter().map(Option::unwrap_or_default).collect())
}

/// Parses planar_code (the 8-bit variant written by plantri): the header,
/// then per graph one byte `n` followed by each vertex's 1-based neighbors
/// in clockwise order, each list terminated by 0.
pub fn parse_planar_code(input: &[u8]) -> Result<Vec<EmbeddedGraph>> {
    let body = input.strip_prefix(PLANAR_CODE_HEADER).ok_or(Error::BadHeader)?;
    let mut graphs = Vec::new();
    let mut pos = 0;
    while pos < body.len() {
        let index = graphs.len();
        let n = body[pos] as usize;
        pos += 1;
        if n == 0 {
            return Err(Error::MalformedInput {
                line: 0,
                msg: format!("record {index}: 16-bit planar_code records are not supported"),
            });
        }
        let mut rotations = Vec::with_capacity(n);
        for _ in 0..n {
            let mut rot = Vec::new();
            loop {
                let &b = body.get(pos).ok_or(Error::TruncatedRecord { index })?;
                pos += 1;
                if b == 0 {
                    break;
                }
                let u = b as usize;
                if u > n {
                    return Err(Error::MalformedInput {
                        line: 0,
                        msg: format!("record {index}: neighbor {u} exceeds n = {n}"),
                    });
                }
                rot.push(u - 1);
            }
            rotations.push(rot);
        }
        graphs.push(EmbeddedGraph::from_rotations(rotations)?);
    }
    Ok(graphs)
}

/// Inverse of [`parse_planar_code`].
pub fn write_planar_code<'a>(graphs: impl IntoIterator<Item = &'a EmbeddedGraph>) -> Result<Vec<u8>> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for g in graphs {
        if g.n() > 255 {
            return Err(Error::MalformedInput {
                line: 0,
                msg: format!("planar_code 8-bit format holds at most 255 vertices, got {}", g.n()),
            });
        }
        out.push(g.n() as u8);
        for rot in g.rotations() {
            out.extend(rot.iter().map(|&u| (u + 1) as u8));
            out.push(0);
        }
    }
    Ok(out)
}

/// Parses either format, sniffing the planar_code header.
pub fn parse_any(input: &[u8]) -> Result<Vec<EmbeddedGraph>> {
    if input.starts_with(b">>planar_code") {
        return parse_planar_code(input);
    }
    let text = std::str::from_utf8(input).map_err(|e| Error::MalformedInput {
        line: 0,
        msg: format!("input is neither planar_code nor UTF-8 text: {e}"),
    })?;
    parse_rotation_text(text).map(|g| vec![g])
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "n 3\n0: 1 2\n1: 2 0\n2: 0 1\n";
    const OCTAHEDRON: &str = "# poles 0 and 5, equator 1 2 3 4\n\
        n 6\n0: 1 2 3 4\n1: 0 4 5 2\n2: 0 1 5 3\n3: 0 2 5 4\n4: 0 3 5 1\n5: 1 4 3 2\n";
    const CUBE: &str = "n 8\n0: 1 3 4\n1: 0 5 2\n2: 1 6 3\n3: 2 7 0\n\
        4: 0 7 5\n5: 1 4 6\n6: 2 5 7\n7: 3 6 4\n";

    #[test]
    fn triangle_has_two_faces() {
        let g = parse_rotation_text(TRIANGLE).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.faces().len()), (3, 3, 2));
        assert!(g.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn octahedron_counts() {
        let g = parse_rotation_text(OCTAHEDRON).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.faces().len()), (6, 12, 8));
        assert!(g.is_triangulation());
        assert_eq!(g.is_3_connected().unwrap(), true);
        assert_eq!(g.essential_4_connectivity().unwrap(), Essential4::Ok);
    }

    #[test]
    fn cube_has_six_quadrilaterals() {
        let g = parse_rotation_text(CUBE).unwrap();
        assert_eq!(g.faces().len(), 6);
        assert!(g.faces().iter().all(|f| f.len() == 4));
        assert!(g.is_3_connected().unwrap());
    }

    #[test]
    fn faces_start_from_least_dart() {
        let g = parse_rotation_text(OCTAHEDRON).unwrap();
        assert_eq!(g.faces()[0].darts[0], (0, 1));
        let mut seen = std::collections::HashSet::new();
        for f in g.faces() {
            for &d in &f.darts {
                assert!(seen.insert(d), "dart {d:?} in two faces");
                assert_eq!(g.face_of_dart(d.0, d.1), Some(f.id));
            }
        }
        assert_eq!(seen.len(), 2 * g.edge_count());
    }

    #[test]
    fn one_way_edge_is_asymmetric() {
        let err = parse_rotation_text("n 3\n0: 1 2\n1: 2 0\n2: 1\n").unwrap_err();
        assert!(matches!(err, Error::AsymmetricAdjacency { u: 0, v: 2 }), "{err}");
    }

    fn k4_text(flip_zero: bool) -> String {
        let g = crate::gen::catalog("K4").unwrap();
        let mut rot = g.rotations().to_vec();
        if flip_zero {
            rot[0].reverse();
        }
        EmbeddedGraph { rotations: rot, ..g }.to_rotation_text()
    }

    #[test]
    fn transposed_rotation_breaks_euler() {
        assert!(parse_rotation_text(&k4_text(false)).is_ok());
        // Reversing one rotation of K4 leaves 2 faces instead of 4.
        let err = parse_rotation_text(&k4_text(true)).unwrap_err();
        assert!(matches!(err, Error::EulerViolation { n: 4, e: 6, f: 2 }), "{err}");
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(
            parse_rotation_text("4\n").unwrap_err(),
            Error::MalformedInput { line: 1, .. }
        ));
        assert!(matches!(
            parse_rotation_text("n 3\n0: 1 2\n0: 1 2\n").unwrap_err(),
            Error::MalformedInput { line: 3, .. }
        ));
        assert!(matches!(
            parse_rotation_text("n 3\n0: 1 x\n").unwrap_err(),
            Error::MalformedInput { line: 2, .. }
        ));
        assert!(matches!(
            parse_rotation_text("n 3\n0: 1 1\n1: 0 0\n2:\n").unwrap_err(),
            Error::NotSimple(_)
        ));
    }

    #[test]
    fn disconnected_is_rejected() {
        let err = parse_rotation_text("n 4\n0: 1\n1: 0\n2: 3\n3: 2\n").unwrap_err();
        assert!(matches!(err, Error::Disconnected));
    }

    #[test]
    fn path_and_diamond_are_not_3_connected() {
        let path = crate::gen::catalog("path4").unwrap();
        assert_eq!(path.faces().len(), 1);
        assert!(!path.is_3_connected().unwrap());
        let diamond = crate::gen::catalog("diamond").unwrap();
        assert!(!diamond.is_3_connected().unwrap());
        let tri = parse_rotation_text(TRIANGLE).unwrap();
        assert!(matches!(tri.is_3_connected(), Err(Error::TooSmall { n: 3, min: 4 })));
    }

    #[test]
    fn planar_code_records() {
        let mut bytes = PLANAR_CODE_HEADER.to_vec();
        bytes.extend([3, 2, 3, 0, 3, 1, 0, 1, 2, 0]);
        let gs = parse_planar_code(&bytes).unwrap();
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0].neighbors(0), &[1, 2]);

        let oct = parse_rotation_text(OCTAHEDRON).unwrap();
        let both = write_planar_code([&gs[0], &oct]).unwrap();
        let back = parse_planar_code(&both).unwrap();
        assert_eq!(back, vec![gs[0].clone(), oct]);

        assert!(matches!(parse_planar_code(b">>planar_cod<<"), Err(Error::BadHeader)));
        let mut cut = PLANAR_CODE_HEADER.to_vec();
        cut.extend([3, 2, 3, 0, 3]);
        assert!(matches!(parse_planar_code(&cut), Err(Error::TruncatedRecord { index: 0 })));
        assert!(parse_planar_code(PLANAR_CODE_HEADER).unwrap().is_empty());
    }

    #[test]
    fn planar_code_euler_violation() {
        let k4 = crate::gen::catalog("K4").unwrap();
        let mut bytes = write_planar_code([&k4]).unwrap();
        assert_eq!(parse_planar_code(&bytes).unwrap(), vec![k4]);
        // Vertex 0's list sits right after the header and the count byte.
        let at = PLANAR_CODE_HEADER.len() + 1;
        bytes[at..at + 3].reverse();
        let err = parse_planar_code(&bytes).unwrap_err();
        assert!(matches!(err, Error::EulerViolation { n: 4, e: 6, f: 2 }), "{err}");
    }

    #[test]
    fn mirror_keeps_face_lengths() {
        let g = parse_rotation_text(CUBE).unwrap();
        let m = g.mirrored();
        let mut a: Vec<_> = g.faces().iter().map(Face::len).collect();
        let mut b: Vec<_> = m.faces().iter().map(Face::len).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn sniffing() {
        assert_eq!(parse_any(TRIANGLE.as_bytes()).unwrap().len(), 1);
        assert!(matches!(parse_any(b">>planar_code<<\x03"), Err(Error::TruncatedRecord { .. })));
    }
}
