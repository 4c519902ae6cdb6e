//! ```text
//! graph
//! vertices: a b c
//! edge e1 a b
//! ```

use super::{eof, label_line, lines, Line};
use crate::error::Result;
use crate::graph::MultiGraph;

/// Read a `vertices:` line followed by `edge` lines into `g`. Returns the
/// number of lines consumed.
pub(crate) fn parse_core(ls: &[Line], src: &str) -> Result<(MultiGraph, usize)> {
    let v = ls.first().ok_or_else(|| eof(src, "expected `vertices: <labels>`"))?;
    if v.head() != "vertices:" {
        return Err(v.toks[0].err("expected `vertices: <labels>`"));
    }
    let mut g = MultiGraph::new();
    for t in &v.toks[1..] {
        g.add_vertex(t.text).map_err(|e| t.err(e.to_string()))?;
    }
    let mut used = 1;
    for l in &ls[1..] {
        if l.head() != "edge" {
            break;
        }
        l.expect_len(4, "edge <label> <u> <v>")?;
        let end = |k: usize| g.vertex(l.toks[k].text).map_err(|_| l.toks[k].err("unknown vertex"));
        let (u, w) = (end(2)?, end(3)?);
        g.add_edge(l.toks[1].text, u, w).map_err(|e| l.toks[1].err(e.to_string()))?;
        used += 1;
    }
    Ok((g, used))
}

pub(crate) fn print_core(g: &MultiGraph) -> String {
    let mut s = label_line("vertices", g.vertices());
    for e in g.edges() {
        s += &format!("edge {} {} {}\n", e.label, g.vertices()[e.u], g.vertices()[e.v]);
    }
    s
}

pub fn parse_graph(src: &str) -> Result<MultiGraph> {
    let ls = lines(src);
    let h = ls.first().ok_or_else(|| eof(src, "expected `graph`"))?;
    if h.head() != "graph" {
        return Err(h.toks[0].err("expected `graph`"));
    }
    h.expect_len(1, "graph")?;
    let (g, used) = parse_core(&ls[1..], src)?;
    if let Some(l) = ls.get(1 + used) {
        return Err(l.toks[0].err("expected `edge <label> <u> <v>`"));
    }
    Ok(g)
}

pub fn print_graph(g: &MultiGraph) -> String {
    format!("graph\n{}", print_core(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog_graphs::k4;
    use crate::Error;

    #[test]
    fn roundtrip() {
        let g = k4();
        assert_eq!(parse_graph(&print_graph(&g)).unwrap(), g);
    }

    #[test]
    fn loops_and_parallels() {
        let g = parse_graph("graph\nvertices: u v\nedge l u u\nedge p v u\nedge q u v\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.edges()[0].is_loop());
    }

    #[test]
    fn unknown_vertex() {
        let e = parse_graph("graph\nvertices: u\nedge e u w\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, col: 10, .. }), "{e}");
    }
}
