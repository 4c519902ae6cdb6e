use std::collections::BTreeSet;

use super::expr::EdgeSetExpr;
use super::graph::{EdgeId, StructuredGraph, Vertex};
use super::oracles::{bean_check, is_mac_circuit};
use super::topology::check_subset;
use super::window::{decide, Window};
use crate::error::{Error, Result};

/// Largest edge set for which minimality is checked by subset enumeration.
const MAX_CUT: usize = 12;

fn require_mac(g: &StructuredGraph) -> Result<()> {
    if bean_check(g) {
        return Err(Error::refused("skew cuts describe the dual of the algebraic cycle matroid, which is undefined here"));
    }
    Ok(())
}

/// A vertex set together with the edges leaving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCut {
    pub side: BTreeSet<Vertex>,
    pub crossing: EdgeSetExpr,
}

/// The cut `E(A, V∖A)` around a finite vertex set `A`.
pub fn skew_cuts_at(g: &StructuredGraph, a: &[Vertex]) -> Result<VertexCut> {
    require_mac(g)?;
    let side: BTreeSet<Vertex> = a.iter().copied().collect();
    let mut around = EdgeSetExpr::empty();
    for &v in &side {
        around = around.union(&g.incident(v));
    }
    let edges = around.finite_edges().ok_or_else(|| Error::domain("vertex set has infinite degree"))?;
    let mut crossing = EdgeSetExpr::empty();
    for e in edges {
        let (x, y) = g.endpoints(&e)?;
        if side.contains(&x) != side.contains(&y) {
            crossing.insert(&e);
        }
    }
    Ok(VertexCut { side, crossing })
}

/// Is `f = δ(A)` for some union `A` of finite components of `G - f`?
fn rayless_cut_in(w: &Window, g: &StructuredGraph, f: &EdgeSetExpr) -> bool {
    let rest = w.edges(&g.complement(f));
    let uf = w.union_find(&rest, None);
    let n = w.vertex_count();
    let mut last = vec![false; n];
    for v in (0..n).filter(|&v| w.is_last(v)) {
        last[uf.find(v)] = true;
    }
    let mut finite_roots: Vec<usize> =
        (0..n).filter(|&v| w.is_interior(v) && !last[uf.find(v)]).map(|v| uf.find(v)).collect();
    finite_roots.sort_unstable();
    finite_roots.dedup();
    if finite_roots.len() > MAX_CUT + 1 {
        return false;
    }
    let target: BTreeSet<EdgeId> = f.finite_edges().unwrap_or_default().into_iter().collect();
    let all = w.edges(&g.universe());
    (1..(1u64 << finite_roots.len())).any(|pick| {
        let chosen: Vec<usize> =
            crate::set::elements(pick).map(|i| finite_roots[i]).collect();
        let inside = |v: usize| chosen.contains(&uf.find(v));
        let delta: BTreeSet<EdgeId> =
            all.iter().filter(|e| inside(e.a) != inside(e.b)).map(|e| e.id.clone()).collect();
        delta == target
    })
}

fn has_rayless_cut(g: &StructuredGraph, f: &EdgeSetExpr) -> Result<bool> {
    decide(g, &[f], |w| rayless_cut_in(w, g, f))
}

/// Is `f` a minimal non-empty cut with a rayless side?
pub fn skew_cut_check(g: &StructuredGraph, f: &EdgeSetExpr) -> Result<bool> {
    require_mac(g)?;
    check_subset(g, f)?;
    let Some(edges) = f.finite_edges() else { return Ok(false) };
    if edges.is_empty() || edges.len() > MAX_CUT || !has_rayless_cut(g, f)? {
        return Ok(false);
    }
    let full = (1u64 << edges.len()) - 1;
    for pick in 1..full {
        let sub = EdgeSetExpr::from_edges(crate::set::elements(pick).map(|i| &edges[i]));
        if has_rayless_cut(g, &sub)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Is `x` spanning in the algebraic cycle matroid, given that its complement
/// is finite? An edge `uv` outside `x` lies in the closure iff it is a loop,
/// or `u` and `v` are joined in `x`, or both their components contain rays.
fn mac_spanning(g: &StructuredGraph, x: &EdgeSetExpr) -> Result<bool> {
    let outside = g.complement(x);
    let missing = outside.finite_edges().ok_or_else(|| Error::domain("complement must be finite"))?;
    decide(g, &[x, &outside], |w| {
        let edges = w.edges(x);
        let uf = w.union_find(&edges, None);
        let rays = w.ray_flags(&edges, None);
        missing.iter().all(|e| {
            let (a, b) = g.endpoints(e).expect("edge of g");
            let (a, b) = (w.id(a).expect("in window"), w.id(b).expect("in window"));
            a == b || uf.equiv(a, b) || (rays[a] && rays[b])
        })
    })
}

/// Is the finite set `d` a cocircuit of the algebraic cycle matroid, i.e. a
/// minimal set meeting every base?
pub fn is_mac_cocircuit(g: &StructuredGraph, d: &EdgeSetExpr) -> Result<bool> {
    require_mac(g)?;
    check_subset(g, d)?;
    let Some(edges) = d.finite_edges() else { return Ok(false) };
    if edges.is_empty() {
        return Ok(false);
    }
    let x = g.complement(d);
    if mac_spanning(g, &x)? {
        return Ok(false);
    }
    for e in &edges {
        if !mac_spanning(g, &x.with(e))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MacDualityReport {
    pub checked: usize,
    /// Samples on which the skew-cut test and the cocircuit test disagree.
    pub disagreements: Vec<EdgeSetExpr>,
    pub circuit_cut_pairs: usize,
    /// (circuit, skew cut) pairs meeting in exactly one edge.
    pub singleton_meetings: Vec<(EdgeSetExpr, EdgeSetExpr)>,
}

impl MacDualityReport {
    pub fn holds(&self) -> bool {
        self.disagreements.is_empty() && self.singleton_meetings.is_empty()
    }
}

/// Compare skew cuts with cocircuits on `samples`, and check that sampled
/// circuits never meet sampled skew cuts in exactly one edge.
pub fn verify_mac_duality(g: &StructuredGraph, samples: &[EdgeSetExpr]) -> Result<MacDualityReport> {
    require_mac(g)?;
    let mut report = MacDualityReport::default();
    let mut cuts = Vec::new();
    let mut circuits = Vec::new();
    for d in samples {
        if d.is_finite() {
            report.checked += 1;
            let skew = skew_cut_check(g, d)?;
            if skew != is_mac_cocircuit(g, d)? {
                report.disagreements.push(d.clone());
            }
            if skew {
                cuts.push(d.clone());
            }
        }
        if is_mac_circuit(g, d)? {
            circuits.push(d.clone());
        }
    }
    for c in &circuits {
        for k in &cuts {
            report.circuit_cut_pairs += 1;
            if c.intersect(k).count() == Some(1) {
                report.singleton_meetings.push((c.clone(), k.clone()));
            }
        }
    }
    Ok(report)
}
