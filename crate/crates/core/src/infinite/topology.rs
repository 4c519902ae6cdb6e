use std::collections::BTreeMap;

use super::expr::EdgeSetExpr;
use super::graph::{FamilyId, StructuredGraph, Vertex};
use super::window::{decide, end_labels, Mode, WEdge, Window};
use crate::error::{Error, Result};

/// An edge-end: the tails whose rays it contains, and the core vertices
/// dominating it (joined to it by infinitely many edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeEnd {
    pub tails: Vec<usize>,
    pub dominators: Vec<usize>,
}

pub fn ends(g: &StructuredGraph) -> Vec<EdgeEnd> {
    let (labels, n) = end_labels(g);
    let mut out = vec![EdgeEnd { tails: Vec::new(), dominators: Vec::new() }; n];
    for (t, &l) in labels.iter().enumerate() {
        out[l].tails.push(t);
    }
    for (u, t) in super::window::dominations(g) {
        let d = &mut out[labels[t]].dominators;
        if !d.contains(&u) {
            d.push(u);
        }
    }
    for e in &mut out {
        e.dominators.sort_unstable();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    Finite(usize),
    Infinite,
}

/// Local and global shape of the closure of an edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceProfile {
    /// Non-zero degrees of core vertices and of tail vertices below the
    /// periodic prefix; deeper vertices repeat these.
    pub degrees: BTreeMap<Vertex, Degree>,
    /// Edge-disjoint rays into each end, capped at 3.
    pub end_degrees: Vec<usize>,
    /// Ends lying in the closure.
    pub ends_in_closure: Vec<usize>,
    /// The edge set with its vertices forms one graph component.
    pub graph_connected: bool,
    /// The closure is topologically connected (and non-empty).
    pub closure_connected: bool,
    /// Pairs (core vertex, end) with the same neighbourhoods.
    pub indistinguishable: Vec<(usize, usize)>,
}

pub(crate) fn check_subset(g: &StructuredGraph, d: &EdgeSetExpr) -> Result<()> {
    if !d.is_subset(&g.universe()) {
        return Err(Error::domain("edge set contains edges outside the graph"));
    }
    Ok(())
}

pub(crate) fn profile_in(win: &Window, d: &EdgeSetExpr, edges: &[WEdge]) -> SubspaceProfile {
    let g = win.g;
    let mut deg = vec![0usize; win.vertex_count()];
    for e in edges {
        deg[e.a] += 1;
        deg[e.b] += 1;
    }
    let mut degrees = BTreeMap::new();
    for v in 0..win.vertex_count() {
        if win.level(v).is_some_and(|l| l >= win.prefix()) {
            continue;
        }
        let vert = win.vertex(v);
        let infinite = matches!(vert, Vertex::Core(u) if g.coretail_rules().iter().enumerate()
            .any(|(k, r)| r.u == u && !d.word(FamilyId::CoreTail(k)).is_finite()));
        if infinite {
            degrees.insert(vert, Degree::Infinite);
        } else if deg[v] > 0 {
            degrees.insert(vert, Degree::Finite(deg[v]));
        }
    }
    let units = win.units(edges, Mode::Own);
    let indistinguishable =
        win.dominators.iter().enumerate().flat_map(|(e, us)| us.iter().map(move |&u| (u, e))).collect();
    SubspaceProfile {
        degrees,
        end_degrees: win.end_degrees(edges),
        ends_in_closure: units.ends_in_closure.clone(),
        graph_connected: units.components == 1,
        closure_connected: !edges.is_empty() && units.count == 1,
        indistinguishable,
    }
}

pub fn profile(g: &StructuredGraph, d: &EdgeSetExpr) -> Result<SubspaceProfile> {
    check_subset(g, d)?;
    decide(g, &[d], |w| profile_in(w, d, &w.edges(d)))
}

/// Is the closure of `d` (with its own vertices) topologically connected?
pub fn closure_connected(g: &StructuredGraph, d: &EdgeSetExpr) -> Result<bool> {
    check_subset(g, d)?;
    decide(g, &[d], |w| w.units(&w.edges(d), Mode::Own).count <= 1)
}

/// Is the closure of the spanning subgraph `(V, d)` topologically connected?
pub fn spanning_connected(g: &StructuredGraph, d: &EdgeSetExpr) -> Result<bool> {
    check_subset(g, d)?;
    decide(g, &[d], |w| spanning_connected_in(w, &w.edges(d)))
}

pub(crate) fn spanning_connected_in(w: &Window, edges: &[WEdge]) -> bool {
    w.units(edges, Mode::Spanning).count == 1
}

pub(crate) fn circle_in(p: &SubspaceProfile) -> bool {
    if !p.closure_connected {
        return false;
    }
    let ok = |d: Degree| matches!(d, Degree::Finite(0 | 2));
    let dominated: Vec<usize> = p.indistinguishable.iter().map(|&(u, _)| u).collect();
    let plain_vertices = p
        .degrees
        .iter()
        .filter(|(v, _)| !matches!(v, Vertex::Core(u) if dominated.contains(u)))
        .all(|(_, &d)| ok(d));
    let classes = (0..p.end_degrees.len()).all(|end| {
        let mut total = Degree::Finite(p.end_degrees[end]);
        for &(u, _) in p.indistinguishable.iter().filter(|&&(_, e)| e == end) {
            total = match (total, p.degrees.get(&Vertex::Core(u)).copied().unwrap_or(Degree::Finite(0))) {
                (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
                _ => Degree::Infinite,
            };
        }
        ok(total)
    });
    plain_vertices && classes
}

/// Is the closure of `d` a circle?
///
/// Every vertex has degree 0 or 2 in `d`, every end receives 0 or 2
/// edge-disjoint rays, and the closure is connected. An end and the vertices
/// dominating it count as one point, whose degrees are summed.
pub fn is_circle(g: &StructuredGraph, d: &EdgeSetExpr) -> Result<bool> {
    if d.is_empty() {
        return Ok(false);
    }
    Ok(circle_in(&profile(g, d)?))
}
