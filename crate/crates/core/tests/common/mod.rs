//! Shared corpus for the integration tests.

#![allow(dead_code)]

use std::path::PathBuf;

use longcycle::embed::{parse_planar_code, EmbeddedGraph};
use longcycle::gen::{self, Filter};

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn planar_code(name: &str) -> Vec<EmbeddedGraph> {
    parse_planar_code(&std::fs::read(data(name)).unwrap()).unwrap()
}

pub struct Instance {
    pub name: String,
    pub graph: EmbeddedGraph,
}

fn inst(name: String, graph: EmbeddedGraph) -> Instance {
    Instance { name, graph }
}

/// Essentially 4-connected instances: catalog positives, kleetopes of
/// every 4-connected triangulation up to 12 vertices, and the essentially
/// 4-connected members of the ingested triangulation files.
pub fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for name in ["W5", "octahedron", "icosahedron", "stack-4x1", "stack-4x2", "stack-5x2", "stack-6x2"] {
        out.push(inst(name.to_string(), gen::catalog(name).unwrap()));
    }
    for name in ["octahedron", "icosahedron"] {
        out.push(inst(format!("kleetope({name})"), gen::kleetope(&gen::catalog(name).unwrap()).unwrap()));
    }
    for (i, base) in planar_code("c4tri_6_12.pc").into_iter().enumerate() {
        out.push(inst(format!("kleetope(c4tri#{i})"), gen::kleetope(&base).unwrap()));
    }
    for file in ["tri11.pc", "tri12_part.pc", "tri13_part.pc"] {
        let (kept, _) = gen::ingest_filtered(&data(file), Filter::Essentially4Connected).unwrap();
        for (i, g) in kept.into_iter().enumerate() {
            out.push(inst(format!("{file}#{i}"), g));
        }
    }
    out
}
