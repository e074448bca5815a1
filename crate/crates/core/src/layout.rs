//! Straight-line drawings for inspection: Tutte's barycentric layout with
//! the first face pinned to a regular polygon.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use crate::cycle::Cycle;
use crate::embed::EmbeddedGraph;

/// Every free vertex sits at the average of its neighbors. Solved by
/// Gauss-Seidel sweeps, which converge for 3-connected graphs.
pub fn tutte_layout(g: &EmbeddedGraph) -> Vec<(f64, f64)> {
    let n = g.n();
    let outer: Vec<usize> = g.faces()[0].vertices().collect();
    let mut pinned = vec![false; n];
    let mut pos = vec![(0.0, 0.0); n];
    for (i, &v) in outer.iter().enumerate() {
        // Reverse order so the outer face reads clockwise on screen.
        let a = -TAU * i as f64 / outer.len() as f64;
        pos[v] = (a.cos(), a.sin());
        pinned[v] = true;
    }
    for _ in 0..20_000 {
        let mut moved: f64 = 0.0;
        for v in 0..n {
            if pinned[v] || g.degree(v) == 0 {
                continue;
            }
            let d = g.degree(v) as f64;
            let (sx, sy) = g.neighbors(v).iter().fold((0.0, 0.0), |(x, y), &u| (x + pos[u].0, y + pos[u].1));
            let p = (sx / d, sy / d);
            moved = moved.max((p.0 - pos[v].0).abs() + (p.1 - pos[v].1).abs());
            pos[v] = p;
        }
        if moved < 1e-10 {
            break;
        }
    }
    pos
}

/// SVG drawing with the edges of `highlight` in red.
pub fn render_svg(g: &EmbeddedGraph, highlight: Option<&Cycle>) -> String {
    let size = 800.0;
    let pos = tutte_layout(g);
    let map = |(x, y): (f64, f64)| (size / 2.0 * (1.0 + 0.95 * x), size / 2.0 * (1.0 - 0.95 * y));
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    for (u, v) in g.edges() {
        let on = highlight.is_some_and(|c| c.edge_index(u, v).is_some());
        let (a, b) = (map(pos[u]), map(pos[v]));
        let (class, style) =
            if on { ("cycle", r##"stroke="#d62728" stroke-width="3""##) } else { ("edge", r##"stroke="#999" stroke-width="1""##) };
        writeln!(
            s,
            r#"<line class="{class}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {style}/>"#,
            a.0, a.1, b.0, b.1
        )
        .unwrap();
    }
    for (v, &p) in pos.iter().enumerate() {
        let (x, y) = map(p);
        writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="black"><title>{v}</title></circle>"#).unwrap();
    }
    s.push_str("</svg>\n");
    s
}
