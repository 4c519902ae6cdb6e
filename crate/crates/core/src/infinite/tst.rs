use super::expr::EdgeSetExpr;
use super::graph::StructuredGraph;
use super::oracles::{circle_witness, MatroidKind};
use super::topology::{check_subset, spanning_connected, spanning_connected_in};
use super::window::{decide, params, Mode};
use super::word::UpWord;
use crate::error::{Error, Result};

/// The two characterisations of a topological spanning tree, computed
/// separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeCriteria {
    /// Contains no circle, and adding any further edge creates one.
    pub maximal_acirclic: bool,
    /// Meets every finite bond, and no proper subset does.
    pub minimal_bond_transversal: bool,
}

pub fn tree_criteria(g: &StructuredGraph, t: &EdgeSetExpr) -> Result<TreeCriteria> {
    check_subset(g, t)?;
    let acirclic = circle_witness(g, t)?.is_none();
    let outside = g.complement(t);
    let maximal = acirclic
        && decide(g, &[t], |w| {
            let units = w.units(&w.edges(t), Mode::Spanning);
            w.edges(&outside).iter().filter(|e| w.in_prefix(e)).all(|e| e.a == e.b || units.same(e.a, e.b))
        })?;
    let transversal = decide(g, &[t], |w| {
        let edges = w.edges(t);
        if !spanning_connected_in(w, &edges) {
            return false;
        }
        (0..edges.len()).filter(|&k| w.in_prefix(&edges[k])).all(|k| {
            let mut rest = edges.clone();
            rest.remove(k);
            !spanning_connected_in(w, &rest)
        })
    })?;
    Ok(TreeCriteria { maximal_acirclic: maximal, minimal_bond_transversal: transversal })
}

/// A topological spanning tree: its closure is connected, spanning and
/// contains no circle. Decided by the bond-transversal characterisation.
pub fn is_topological_spanning_tree(g: &StructuredGraph, t: &EdgeSetExpr) -> Result<bool> {
    Ok(tree_criteria(g, t)?.minimal_bond_transversal)
}

const RETRIES: usize = 4;

/// Extend an acirclic `f` to a topological spanning tree.
///
/// Greedy deletion from the whole edge set: edges below a cutoff level are
/// tried one by one in canonical order, then each deeper family is tried one
/// residue class (mod the block length) at a time. An edge or class is deleted
/// when the spanning closure stays connected. The result is validated; on
/// failure the cutoff moves one block deeper.
pub fn topological_spanning_tree(g: &StructuredGraph, f: &EdgeSetExpr) -> Result<EdgeSetExpr> {
    check_subset(g, f)?;
    if let Some(e) = circle_witness(g, f)? {
        return Err(Error::Precondition(format!("edge {} lies on a circle inside the given set", g.edge_name(&e))));
    }
    if !spanning_connected(g, &g.universe())? {
        return Err(Error::Precondition("the graph is not connected".into()));
    }
    let p = params(g, &[f]);
    let mut cutoff = p.n;
    for _ in 0..RETRIES {
        let t = greedy(g, f, cutoff, p.block)?;
        if f.is_subset(&t) && is_topological_spanning_tree(g, &t)? {
            return Ok(t);
        }
        cutoff += p.block;
    }
    Err(Error::refused("greedy extension did not produce a valid spanning tree"))
}

fn greedy(g: &StructuredGraph, f: &EdgeSetExpr, cutoff: usize, block: usize) -> Result<EdgeSetExpr> {
    let mut t = g.universe();
    for e in g.universe().edges_below(cutoff) {
        if f.contains(&e) {
            continue;
        }
        let cand = t.without(&e);
        if spanning_connected(g, &cand)? {
            t = cand;
        }
    }
    for fam in g.families() {
        for r in 0..block {
            let class = UpWord::residues(cutoff, block, &[r]);
            let piece = EdgeSetExpr::family(fam, class).intersect(&t).difference(f);
            if piece.is_empty() {
                continue;
            }
            let cand = t.difference(&piece);
            if spanning_connected(g, &cand)? {
                t = cand;
            }
        }
    }
    Ok(t)
}

/// Is the complement of `t` a maximal set containing no finite bond?
pub fn complement_is_finite_bond_base(g: &StructuredGraph, t: &EdgeSetExpr) -> Result<bool> {
    super::oracles::is_base(g, MatroidKind::FiniteBond, &g.complement(t))
}
