use super::expr::EdgeSetExpr;
use super::graph::{EdgeId, StructuredGraph};
use super::topology::{check_subset, profile_in, spanning_connected_in, Degree};
use super::window::{decide, params, Mode, Window};
use crate::error::{Error, Result};

/// The five graph matroids on a structured graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatroidKind {
    /// Circuits are the finite cycles.
    FiniteCycle,
    /// Circuits are the bonds, finite or infinite.
    Bond,
    /// Circuits are the finite bonds.
    FiniteBond,
    /// Circuits are the edge sets of circles.
    Cycle,
    /// Circuits are the finite cycles and double rays.
    AlgebraicCycle,
}

impl MatroidKind {
    pub const ALL: [MatroidKind; 5] = [
        MatroidKind::FiniteCycle,
        MatroidKind::Bond,
        MatroidKind::FiniteBond,
        MatroidKind::Cycle,
        MatroidKind::AlgebraicCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MatroidKind::FiniteCycle => "fc",
            MatroidKind::Bond => "b",
            MatroidKind::FiniteBond => "fb",
            MatroidKind::Cycle => "c",
            MatroidKind::AlgebraicCycle => "ac",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }
}

/// Does the graph contain a subdivided Bean graph? Within the structured class
/// this happens exactly when some core vertex dominates an end, i.e. has
/// infinitely many edges into a tail.
pub fn bean_check(g: &StructuredGraph) -> bool {
    !super::window::dominations(g).is_empty()
}

fn require_mac(g: &StructuredGraph) -> Result<()> {
    if bean_check(g) {
        return Err(Error::refused(
            "the algebraic cycles of a graph containing a subdivided Bean graph do not form a matroid",
        ));
    }
    Ok(())
}

pub(crate) fn mc_independent_in(w: &Window, edges: &[super::window::WEdge]) -> Option<EdgeId> {
    let mut rest = edges.to_vec();
    for (k, e) in edges.iter().enumerate() {
        if !w.in_prefix(e) {
            continue;
        }
        if e.a == e.b {
            return Some(e.id.clone());
        }
        let removed = rest.remove(k);
        let u = w.units(&rest, Mode::Spanning);
        rest.insert(k, removed);
        if u.same(e.a, e.b) {
            return Some(e.id.clone());
        }
    }
    None
}

/// An edge of `d` lying on a circle inside `d`, if any.
pub fn circle_witness(g: &StructuredGraph, d: &EdgeSetExpr) -> Result<Option<EdgeId>> {
    check_subset(g, d)?;
    decide(g, &[d], |w| mc_independent_in(w, &w.edges(d)))
}

fn mac_independent_in(w: &Window, edges: &[super::window::WEdge]) -> bool {
    if w.has_cycle(edges) {
        return false;
    }
    (0..edges.len()).filter(|&k| w.in_prefix(&edges[k])).all(|k| {
        let rays = w.ray_flags(edges, Some(k));
        !(rays[edges[k].a] && rays[edges[k].b])
    })
}

pub fn is_independent(g: &StructuredGraph, kind: MatroidKind, d: &EdgeSetExpr) -> Result<bool> {
    check_subset(g, d)?;
    let rest = g.complement(d);
    match kind {
        MatroidKind::FiniteCycle => decide(g, &[d], |w| !w.has_cycle(&w.edges(d))),
        MatroidKind::Bond => {
            let all = g.universe();
            decide(g, &[d], |w| w.component_count(&w.edges(&rest)) == w.component_count(&w.edges(&all)))
        }
        MatroidKind::FiniteBond => {
            let all = g.universe();
            decide(g, &[d], |w| {
                !spanning_connected_in(w, &w.edges(&all)) || spanning_connected_in(w, &w.edges(&rest))
            })
        }
        MatroidKind::Cycle => Ok(circle_witness(g, d)?.is_none()),
        MatroidKind::AlgebraicCycle => {
            require_mac(g)?;
            decide(g, &[d], |w| mac_independent_in(w, &w.edges(d)))
        }
    }
}

/// Is `d` the edge set of a finite cycle (a loop, a parallel pair, or longer)?
pub fn is_finite_cycle(g: &StructuredGraph, d: &EdgeSetExpr) -> Result<bool> {
    check_subset(g, d)?;
    let Some(edges) = d.finite_edges() else { return Ok(false) };
    if edges.is_empty() {
        return Ok(false);
    }
    let mut deg = std::collections::BTreeMap::new();
    let mut uf = petgraph::unionfind::UnionFind::new(2 * edges.len());
    let mut ids = Vec::new();
    let mut id = |v| match ids.iter().position(|x| *x == v) {
        Some(i) => i,
        None => {
            ids.push(v);
            ids.len() - 1
        }
    };
    for e in &edges {
        let (a, b) = g.endpoints(e)?;
        *deg.entry(a).or_insert(0) += 1;
        *deg.entry(b).or_insert(0) += 1;
        uf.union(id(a), id(b));
    }
    let n = ids.len();
    let one_piece = (0..n).all(|v| uf.equiv(v, 0));
    Ok(one_piece && deg.values().all(|&k| k == 2))
}

/// Is `d` a finite cycle or a double ray? (Defined on every graph.)
pub fn is_mac_circuit(g: &StructuredGraph, d: &EdgeSetExpr) -> Result<bool> {
    check_subset(g, d)?;
    if d.is_empty() {
        return Ok(false);
    }
    decide(g, &[d], |w| {
        let edges = w.edges(d);
        let p = profile_in(w, d, &edges);
        p.graph_connected && p.degrees.values().all(|&k| k == Degree::Finite(2))
    })
}

/// `f` is a bond: deleting it leaves exactly one more component, and every
/// edge of `f` joins two different components of what is left.
pub fn is_bond(g: &StructuredGraph, f: &EdgeSetExpr) -> Result<bool> {
    check_subset(g, f)?;
    if f.is_empty() {
        return Ok(false);
    }
    let rest = g.complement(f);
    let all = g.universe();
    decide(g, &[f], |w| {
        let re = w.edges(&rest);
        if w.component_count(&re) != w.component_count(&w.edges(&all)) + 1 {
            return false;
        }
        let uf = w.union_find(&re, None);
        w.edges(f).iter().filter(|e| w.in_prefix(e)).all(|e| !uf.equiv(e.a, e.b))
    })
}

pub fn is_circuit(g: &StructuredGraph, kind: MatroidKind, d: &EdgeSetExpr) -> Result<bool> {
    match kind {
        MatroidKind::FiniteCycle => is_finite_cycle(g, d),
        MatroidKind::Bond => is_bond(g, d),
        MatroidKind::FiniteBond => Ok(d.is_finite() && is_bond(g, d)?),
        MatroidKind::Cycle => super::topology::is_circle(g, d),
        MatroidKind::AlgebraicCycle => {
            require_mac(g)?;
            is_mac_circuit(g, d)
        }
    }
}

/// Independent and not extendable by any edge (checked on the periodic prefix).
pub fn is_base(g: &StructuredGraph, kind: MatroidKind, d: &EdgeSetExpr) -> Result<bool> {
    if !is_independent(g, kind, d)? {
        return Ok(false);
    }
    let prefix = {
        let p = params(g, &[d]);
        p.n + 2 * p.block
    };
    for e in g.complement(d).edges_below(prefix) {
        if is_independent(g, kind, &d.with(&e))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Independence and circuit oracles for one matroid on one graph.
#[derive(Debug, Clone, Copy)]
pub struct MatroidOracle<'g> {
    pub graph: &'g StructuredGraph,
    pub kind: MatroidKind,
}

impl MatroidOracle<'_> {
    pub fn is_independent(&self, d: &EdgeSetExpr) -> Result<bool> {
        is_independent(self.graph, self.kind, d)
    }

    pub fn is_circuit(&self, d: &EdgeSetExpr) -> Result<bool> {
        is_circuit(self.graph, self.kind, d)
    }
}

/// The oracles that exist on `g`: the algebraic cycle matroid is refused when
/// the graph contains a subdivided Bean graph.
pub fn matroid_oracles(g: &StructuredGraph) -> Vec<MatroidOracle<'_>> {
    let kinds = MatroidKind::ALL.into_iter().filter(|&k| k != MatroidKind::AlgebraicCycle || !bean_check(g));
    kinds.map(|kind| MatroidOracle { graph: g, kind }).collect()
}
