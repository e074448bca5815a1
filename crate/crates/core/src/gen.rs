//! Instances: a small catalog of named plane graphs, the kleetope
//! construction, and filtered ingestion of planar_code files.

use std::f64::consts::TAU;
use std::path::{Path, PathBuf};

use rand::rngs::StdRng;
use rand::seq::index::sample;
use rand::SeedableRng;
use serde::Serialize;

use crate::embed::{parse_planar_code, EmbeddedGraph, Essential4, Vertex};
use crate::error::{Error, Result};

/// Names accepted by [`catalog`], besides the `stack-<k>x<l>` family.
pub const CATALOG_NAMES: &[&str] =
    &["triangle", "path4", "diamond", "K4", "W5", "W6", "cube", "octahedron", "icosahedron"];

/// Looks up a named graph.
///
/// `stack-<k>x<l>` is the triangulation made of `l + 1` rings of `k`
/// vertices, consecutive rings joined by antiprism bands, with a pole
/// over each end ring. It is 4-connected for `k >= 4`; `stack-4x0` is the
/// octahedron and `stack-5x1` the icosahedron.
pub fn catalog(name: &str) -> Result<EmbeddedGraph> {
    let pts = |v: &[(f64, f64)]| v.to_vec();
    match name.to_ascii_lowercase().as_str() {
        "triangle" => drawing(&pts(&[(0.0, 0.0), (1.0, 0.0), (0.5, 1.0)]), &[(0, 1), (1, 2), (2, 0)]),
        "path4" => drawing(
            &pts(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)]),
            &[(0, 1), (1, 2), (2, 3)],
        ),
        "diamond" => drawing(
            &pts(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0), (1.0, -1.0)]),
            &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)],
        ),
        "k4" => drawing(
            &pts(&[(0.0, 0.0), (0.0, 2.0), (2.0, -1.0), (-2.0, -1.0)]),
            &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)],
        ),
        "w5" => wheel(5),
        "w6" => wheel(6),
        "cube" => {
            let mut p = ring_points(4, 1.0, 0.5);
            p.extend(ring_points(4, 2.0, 0.5));
            let mut e = Vec::new();
            for t in 0..4 {
                e.extend([(t, (t + 1) % 4), (4 + t, 4 + (t + 1) % 4), (t, 4 + t)]);
            }
            drawing(&p, &e)
        }
        "octahedron" => stacked_antiprism(4, 0),
        "icosahedron" => stacked_antiprism(5, 1),
        other => parse_stack(other)
            .map(|(k, l)| stacked_antiprism(k, l))
            .unwrap_or_else(|| Err(Error::UnknownName(name.to_string()))),
    }
}

fn parse_stack(name: &str) -> Option<(usize, usize)> {
    let (k, l) = name.strip_prefix("stack-")?.split_once('x')?;
    let (k, l) = (k.parse().ok()?, l.parse().ok()?);
    (k >= 3).then_some((k, l))
}

fn ring_points(k: usize, radius: f64, phase: f64) -> Vec<(f64, f64)> {
    (0..k)
        .map(|t| {
            let a = TAU * (t as f64 + phase) / k as f64;
            (radius * a.cos(), radius * a.sin())
        })
        .collect()
}

fn wheel(k: usize) -> Result<EmbeddedGraph> {
    let mut p = vec![(0.0, 0.0)];
    p.extend(ring_points(k, 1.0, 0.0));
    let mut e = Vec::new();
    for t in 0..k {
        e.extend([(0, 1 + t), (1 + t, 1 + (t + 1) % k)]);
    }
    drawing(&p, &e)
}

/// Rotations of a straight-line drawing: neighbors by decreasing angle,
/// i.e. clockwise with the y axis pointing up.
fn drawing(points: &[(f64, f64)], edges: &[(Vertex, Vertex)]) -> Result<EmbeddedGraph> {
    let angle = |v: Vertex, u: Vertex| {
        let (a, b) = (points[v], points[u]);
        (b.1 - a.1).atan2(b.0 - a.0)
    };
    let mut adj = vec![Vec::new(); points.len()];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    by_angle(adj, angle)
}

fn by_angle(mut adj: Vec<Vec<Vertex>>, angle: impl Fn(Vertex, Vertex) -> f64) -> Result<EmbeddedGraph> {
    for (v, nbrs) in adj.iter_mut().enumerate() {
        nbrs.sort_by(|&a, &b| angle(v, b).total_cmp(&angle(v, a)));
    }
    EmbeddedGraph::from_rotations(adj)
}

fn stacked_antiprism(k: usize, l: usize) -> Result<EmbeddedGraph> {
    if k < 3 {
        return Err(Error::UnknownName(format!("stack-{k}x{l}")));
    }
    // Vertex 0 is the pole at the center, rings follow outward and the
    // last vertex is the pole at infinity.
    let rings = l + 1;
    let n = k * rings + 2;
    let south = n - 1;
    let id = |i: usize, t: usize| 1 + i * k + t % k;
    let mut points = vec![(0.0, 0.0)];
    for i in 0..rings {
        // Radii grow by 3 so that even triangular rings nest without
        // crossings.
        points.extend(ring_points(k, 3f64.powi(i as i32), i as f64 / 2.0));
    }
    let mut adj = vec![Vec::new(); n];
    let mut add = |u: Vertex, v: Vertex| {
        adj[u].push(v);
        adj[v].push(u);
    };
    for t in 0..k {
        add(0, id(0, t));
        add(id(rings - 1, t), south);
        for i in 0..rings {
            add(id(i, t), id(i, t + 1));
            if i + 1 < rings {
                add(id(i, t), id(i + 1, t));
                add(id(i, t), id(i + 1, t + k - 1));
            }
        }
    }
    by_angle(adj, |v, u| {
        if u == south {
            // Straight out towards infinity.
            points[v].1.atan2(points[v].0)
        } else if v == south {
            // Seen from infinity the outer ring runs the other way round.
            -points[u].1.atan2(points[u].0)
        } else {
            let (a, b) = (points[v], points[u]);
            (b.1 - a.1).atan2(b.0 - a.0)
        }
    })
}

/// Inserts a degree-3 vertex into every face of a triangulation. The new
/// vertex of face `i` gets id `n + i`.
pub fn kleetope(base: &EmbeddedGraph) -> Result<EmbeddedGraph> {
    if !base.is_triangulation() {
        return Err(Error::NotTriangulation);
    }
    let n = base.n();
    let mut rotations: Vec<Vec<Vertex>> = (0..n)
        .map(|v| {
            base.neighbors(v)
                .iter()
                .flat_map(|&u| [u, n + base.face_of_dart(u, v).unwrap()])
                .collect()
        })
        .collect();
    for f in base.faces() {
        let mut r: Vec<Vertex> = f.vertices().collect();
        r.reverse();
        rotations.push(r);
    }
    let g = EmbeddedGraph::from_rotations(rotations)?;
    match g.essential_4_connectivity()? {
        Essential4::Ok => Ok(g),
        Essential4::Witness(s) => Err(Error::PostCheckFailed(s)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Filter {
    Essentially4Connected,
    ThreeConnected,
    FourConnectedTriangulation,
}

impl Filter {
    pub fn parse(s: &str) -> Option<Filter> {
        match s {
            "e4c" | "essentially-4-connected" => Some(Filter::Essentially4Connected),
            "3c" | "3-connected" => Some(Filter::ThreeConnected),
            "4ct" | "4-connected-triangulation" => Some(Filter::FourConnectedTriangulation),
            _ => None,
        }
    }

    pub fn accepts(self, g: &EmbeddedGraph) -> bool {
        match self {
            Filter::Essentially4Connected => g.n() >= 4 && g.is_essentially_4_connected(),
            Filter::ThreeConnected => g.n() >= 4 && g.is_3_connected().unwrap_or(false),
            Filter::FourConnectedTriangulation => g.is_4_connected_triangulation(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IngestSummary {
    pub read: usize,
    pub kept: usize,
}

pub fn filter_graphs(graphs: Vec<EmbeddedGraph>, require: Filter) -> (Vec<EmbeddedGraph>, IngestSummary) {
    let read = graphs.len();
    let kept: Vec<_> = graphs.into_iter().filter(|g| require.accepts(g)).collect();
    let summary = IngestSummary { read, kept: kept.len() };
    (kept, summary)
}

/// Reads a planar_code file and keeps the graphs passing `require`, in
/// file order.
pub fn ingest_filtered(path: &Path, require: Filter) -> Result<(Vec<EmbeddedGraph>, IngestSummary)> {
    let bytes = std::fs::read(path)?;
    Ok(filter_graphs(parse_planar_code(&bytes)?, require))
}

/// Seeded choice of `k` members, kept in their original order.
pub fn sample_members<T: Clone>(items: &[T], k: usize, seed: u64) -> Vec<T> {
    if k >= items.len() {
        return items.to_vec();
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut idx = sample(&mut rng, items.len(), k).into_vec();
    idx.sort_unstable();
    idx.into_iter().map(|i| items[i].clone()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Construction {
    Catalog(String),
    Kleetope(String),
    Ingest { file: PathBuf, filter: Filter, index: usize },
}

/// A reproducible recipe for one corpus instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceSpec {
    pub name: String,
    pub construction: Construction,
    pub seed: u64,
    pub expected_n: Option<usize>,
}

impl InstanceSpec {
    /// Builds the instance and admits it only if it is essentially
    /// 4-connected and has the expected size.
    pub fn build(&self) -> Result<EmbeddedGraph> {
        let g = match &self.construction {
            Construction::Catalog(name) => catalog(name)?,
            Construction::Kleetope(name) => kleetope(&catalog(name)?)?,
            Construction::Ingest { file, filter, index } => {
                let (gs, _) = ingest_filtered(file, *filter)?;
                gs.get(*index)
                    .cloned()
                    .ok_or_else(|| Error::UnknownName(format!("{}#{index}", file.display())))?
            }
        };
        if let Some(n) = self.expected_n {
            if g.n() != n {
                return Err(Error::Internal(format!("{}: expected n = {n}, got {}", self.name, g.n())));
            }
        }
        if let Essential4::Witness(s) = g.essential_4_connectivity()? {
            return Err(Error::NotEssentially4Connected(s));
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        let cases = [
            ("triangle", 3, 3, 2),
            ("path4", 4, 3, 1),
            ("diamond", 4, 5, 3),
            ("K4", 4, 6, 4),
            ("W5", 6, 10, 6),
            ("W6", 7, 12, 7),
            ("cube", 8, 12, 6),
            ("octahedron", 6, 12, 8),
            ("icosahedron", 12, 30, 20),
            ("stack-11x2", 35, 99, 66),
        ];
        for (name, n, e, f) in cases {
            let g = catalog(name).unwrap();
            assert_eq!((g.n(), g.edge_count(), g.faces().len()), (n, e, f), "{name}");
        }
        assert!(matches!(catalog("dodecahedron"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn stacked_antiprisms_are_4_connected_triangulations() {
        for (k, l) in [(4, 0), (4, 2), (5, 1), (6, 3)] {
            let g = catalog(&format!("stack-{k}x{l}")).unwrap();
            assert!(g.is_4_connected_triangulation(), "stack-{k}x{l}");
        }
        assert!(!catalog("stack-3x1").unwrap().is_4_connected_triangulation());
    }

    #[test]
    fn wheels() {
        assert_eq!(catalog("W5").unwrap().essential_4_connectivity().unwrap(), Essential4::Ok);
        let Essential4::Witness(s) = catalog("W6").unwrap().essential_4_connectivity().unwrap() else {
            panic!("W6 has a non-trivial 3-separator");
        };
        // hub 0, rim 1..=6: the least separator is {0, 1, 4}.
        assert_eq!(s.vertices, vec![0, 1, 4]);
        assert_eq!(s.components, vec![vec![2, 3], vec![5, 6]]);
    }

    #[test]
    fn kleetopes() {
        let k = kleetope(&catalog("octahedron").unwrap()).unwrap();
        assert_eq!(k.n(), 14);
        assert!((6..14).all(|v| k.degree(v) == 3));
        assert!(k.is_triangulation());
        let k = kleetope(&catalog("icosahedron").unwrap()).unwrap();
        assert_eq!((k.n(), k.faces().len()), (32, 60));
        assert!(matches!(kleetope(&catalog("cube").unwrap()), Err(Error::NotTriangulation)));
        // Not 4-connected: the post-check catches the separating triangle.
        let stacked = kleetope(&catalog("K4").unwrap()).unwrap();
        assert_eq!(stacked.n(), 8);
        assert!(matches!(
            kleetope(&kleetope(&catalog("K4").unwrap()).unwrap()),
            Err(Error::PostCheckFailed(_))
        ));
    }

    #[test]
    fn deterministic_kleetope() {
        let base = catalog("icosahedron").unwrap();
        assert_eq!(kleetope(&base).unwrap(), kleetope(&base).unwrap());
    }

    #[test]
    fn sampling_is_seeded() {
        let xs: Vec<usize> = (0..100).collect();
        let a = sample_members(&xs, 10, 7);
        assert_eq!(a, sample_members(&xs, 10, 7));
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(sample_members(&xs, 200, 7).len(), 100);
    }

    #[test]
    fn spec_build() {
        let spec = InstanceSpec {
            name: "kleetope-oct".into(),
            construction: Construction::Kleetope("octahedron".into()),
            seed: 0,
            expected_n: Some(14),
        };
        assert_eq!(spec.build().unwrap().n(), 14);
        let bad = InstanceSpec { construction: Construction::Catalog("W6".into()), expected_n: None, ..spec };
        assert!(matches!(bad.build(), Err(Error::NotEssentially4Connected(_))));
    }
}
