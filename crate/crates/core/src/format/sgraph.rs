//! ```text
//! sgraph
//! vertices: w
//! tail a
//! tail b
//! cross a b 0 0 1 0
//! coretail w a 0 2 0,1
//! patch + pa w a:0
//! patch - @rail:b:3
//! ```
//!
//! The core block is the graph format without its header. A `cross` line reads
//! `cross <t> <t'> <delta> <start> <period> <residues>`, a `coretail` line
//! `coretail <u> <t> <start> <period> <residues>`, with residues
//! comma-separated (`-` for none). Rules are numbered in order of appearance.

use super::graph::{parse_core, print_core};
use super::{eof, lines, parse_list, show_list};
use crate::error::Result;
use crate::infinite::{CoreTailRule, CrossRule, StructuredGraph};

pub fn parse_sgraph(src: &str) -> Result<StructuredGraph> {
    let ls = lines(src);
    let h = ls.first().ok_or_else(|| eof(src, "expected `sgraph`"))?;
    if h.head() != "sgraph" {
        return Err(h.toks[0].err("expected `sgraph`"));
    }
    h.expect_len(1, "sgraph")?;
    let (core, used) = parse_core(&ls[1..], src)?;
    let mut g = StructuredGraph::new(core).map_err(|e| ls[1].err(e.to_string()))?;
    for l in &ls[1 + used..] {
        let t = &l.toks;
        let wrap = |e: crate::Error| t[0].err(e.to_string());
        match l.head() {
            "tail" => {
                l.expect_len(2, "tail <name>")?;
                g.add_tail(t[1].text).map_err(|e| t[1].err(e.to_string()))?;
            }
            "cross" => {
                let shape = "cross <t> <t'> <delta> <start> <period> <residues>";
                l.expect_len(7, shape)?;
                let tail = |k: usize| g.tail(t[k].text).map_err(|_| t[k].err("unknown tail"));
                let rule = CrossRule {
                    t: tail(1)?,
                    t2: tail(2)?,
                    delta: t[3].parse("an offset")?,
                    start: t[4].parse("a start level")?,
                    period: t[5].parse("a period")?,
                    residues: parse_list(&t[6], "residues")?,
                };
                g.add_cross(rule).map_err(wrap)?;
            }
            "coretail" => {
                l.expect_len(6, "coretail <u> <t> <start> <period> <residues>")?;
                let rule = CoreTailRule {
                    u: g.core().vertex(t[1].text).map_err(|_| t[1].err("unknown core vertex"))?,
                    t: g.tail(t[2].text).map_err(|_| t[2].err("unknown tail"))?,
                    start: t[3].parse("a start level")?,
                    period: t[4].parse("a period")?,
                    residues: parse_list(&t[5], "residues")?,
                };
                g.add_coretail(rule).map_err(wrap)?;
            }
            "patch" if t.get(1).is_some_and(|x| x.text == "+") => {
                l.expect_len(5, "patch + <label> <u> <v>")?;
                let vert = |k: usize| g.parse_vertex(t[k].text).map_err(|e| t[k].err(e.to_string()));
                let (u, v) = (vert(3)?, vert(4)?);
                g.patch_add(t[2].text, u, v).map_err(|e| t[2].err(e.to_string()))?;
            }
            "patch" if t.get(1).is_some_and(|x| x.text == "-") => {
                l.expect_len(3, "patch - <edge>")?;
                let e = g.parse_edge(t[2].text).map_err(|e| t[2].err(e.to_string()))?;
                g.patch_remove(e).map_err(|e| t[2].err(e.to_string()))?;
            }
            "patch" => return Err(t.get(1).map_or_else(|| l.err_end("expected + or -"), |x| x.err("expected + or -"))),
            _ => return Err(t[0].err("expected tail, cross, coretail or patch")),
        }
    }
    Ok(g)
}

pub fn print_sgraph(g: &StructuredGraph) -> String {
    let mut s = format!("sgraph\n{}", print_core(g.core()));
    for t in g.tails() {
        s += &format!("tail {t}\n");
    }
    for r in g.cross_rules() {
        s += &format!(
            "cross {} {} {} {} {} {}\n",
            g.tails()[r.t],
            g.tails()[r.t2],
            r.delta,
            r.start,
            r.period,
            show_list(&r.residues)
        );
    }
    for r in g.coretail_rules() {
        s += &format!(
            "coretail {} {} {} {} {}\n",
            g.core().vertices()[r.u],
            g.tails()[r.t],
            r.start,
            r.period,
            show_list(&r.residues)
        );
    }
    for p in g.patch_added() {
        s += &format!("patch + {} {} {}\n", p.label, g.vertex_name(p.u), g.vertex_name(p.v));
    }
    for e in g.patch_removed() {
        s += &format!("patch - {}\n", g.edge_name(e));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::Error;

    #[test]
    fn catalog_roundtrips() {
        for e in catalog::catalog_list() {
            let g = (e.graph)();
            let text = print_sgraph(&g);
            assert_eq!(parse_sgraph(&text).unwrap(), g, "{}\n{text}", e.name);
        }
    }

    #[test]
    fn rule_errors_have_positions() {
        let e = parse_sgraph("sgraph\nvertices:\ntail a\ncross a b 0 0 1 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, col: 9, .. }), "{e}");
        let e = parse_sgraph("sgraph\nvertices:\ntail a\ncross a a 1 0 2 0,x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, col: 17, .. }), "{e}");
    }
}
