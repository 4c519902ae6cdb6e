use super::MultiGraph;

/// Connected multigraphs with exactly `m` edges, loops and parallels allowed.
///
/// Edge lists are generated as non-decreasing sequences of pairs `(u, v)` with
/// `u <= v`, where each edge may introduce at most the next unused vertex. Every
/// connected multigraph appears at least once (label it in breadth-first order);
/// isomorphic copies are not removed.
pub fn connected_multigraphs(m: usize) -> Vec<MultiGraph> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    grow(m, &mut cur, 1, &mut out);
    if m == 0 {
        out.clear();
        out.push(build(&[], 1));
    }
    out
}

/// Connected multigraphs with at most `max_edges` edges.
pub fn connected_multigraphs_upto(max_edges: usize) -> Vec<MultiGraph> {
    (0..=max_edges).flat_map(connected_multigraphs).collect()
}

fn grow(m: usize, cur: &mut Vec<(usize, usize)>, used: usize, out: &mut Vec<MultiGraph>) {
    if cur.len() == m {
        if m > 0 {
            let g = build(cur, used);
            if g.is_connected() {
                out.push(g);
            }
        }
        return;
    }
    let last = cur.last().copied().unwrap_or((0, 0));
    for u in 0..used {
        for v in u..=used {
            if (u, v) < last {
                continue;
            }
            cur.push((u, v));
            grow(m, cur, used.max(v + 1), out);
            cur.pop();
        }
    }
}

fn build(edges: &[(usize, usize)], n: usize) -> MultiGraph {
    let mut g = MultiGraph::new();
    for v in 0..n {
        g.add_vertex(&format!("v{v}")).expect("fresh label");
    }
    for (i, &(u, v)) in edges.iter().enumerate() {
        g.add_edge(&format!("e{i}"), u, v).expect("fresh label");
    }
    g
}
