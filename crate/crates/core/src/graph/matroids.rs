use super::MultiGraph;
use crate::error::{Error, Result};
use crate::matroid::FiniteMatroid;
use crate::set::{card, elements, is_subset, submasks, Mask, SetFamily, MAX_GROUND};

/// Circuits are the finite cycles: an edge set is independent iff it is a forest.
pub fn finite_cycle_matroid(g: &MultiGraph) -> Result<FiniteMatroid> {
    FiniteMatroid::from_oracle(g.ground()?, |s| g.is_acyclic(s))
}

/// All minimal non-empty cuts, found by scanning every vertex bipartition.
pub fn bonds(g: &MultiGraph) -> Result<SetFamily> {
    let ground = g.ground()?;
    let n = g.vertex_count();
    if n > MAX_GROUND {
        return Err(Error::domain(format!("{n} vertices exceed the scan bound {MAX_GROUND}")));
    }
    let mut cuts: Vec<Mask> = Vec::new();
    // fixing vertex 0 on the false side visits each bipartition once
    for a in 0..(1u64 << n.saturating_sub(1)) {
        let side: Vec<bool> = (0..n).map(|v| v > 0 && a & (1 << (v - 1)) != 0).collect();
        let c = g.crossing(&side);
        if c != 0 {
            cuts.push(c);
        }
    }
    cuts.sort_unstable();
    cuts.dedup();
    let minimal = cuts.iter().copied().filter(|&c| !cuts.iter().any(|&d| d != c && is_subset(d, c)));
    SetFamily::new(ground, minimal)
}

/// `f` is a bond iff it is non-empty, deleting it splits exactly one component
/// into two, and every edge of `f` runs between the two new pieces.
pub fn is_bond(g: &MultiGraph, f: Mask) -> bool {
    if f == 0 || !is_subset(f, g.all_edges()) {
        return false;
    }
    let rest = g.all_edges() & !f;
    if g.component_count_of(rest) != g.component_count_of(g.all_edges()) + 1 {
        return false;
    }
    let lab = g.components_of(rest);
    elements(f).all(|i| lab[g.edges()[i].u] != lab[g.edges()[i].v])
}

/// The matroid whose circuits are the bonds. On a finite graph every bond is
/// finite, so this is also the bond matroid.
pub fn finite_bond_matroid(g: &MultiGraph) -> Result<FiniteMatroid> {
    FiniteMatroid::from_circuits(&bonds(g)?)
}

/// Minimal non-empty edge sets meeting every spanning forest, by direct search.
/// Spanning forests are found independently of the matroid layer: acyclic sets
/// of size `|V| - components`.
pub fn spanning_tree_transversals(g: &MultiGraph) -> Vec<Mask> {
    let all = g.all_edges();
    let r = g.vertex_count() - g.component_count_of(all);
    let trees: Vec<Mask> = submasks(all).filter(|&s| card(s) == r && g.is_acyclic(s)).collect();
    let mut hitting: Vec<Mask> = submasks(all).filter(|&x| x != 0 && trees.iter().all(|&t| t & x != 0)).collect();
    hitting.sort_unstable();
    let minimal: Vec<Mask> =
        hitting.iter().copied().filter(|&x| !hitting.iter().any(|&y| y != x && is_subset(y, x))).collect();
    minimal
}

/// Outcome of the finite duality check on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Check {
    /// `circuits(dual(M_FC))` equals the bond family.
    pub dual_circuits_are_bonds: bool,
    /// The minimal spanning-tree transversals equal the bond family.
    pub transversals_are_bonds: bool,
}

impl Theorem1Check {
    pub fn holds(&self) -> bool {
        self.dual_circuits_are_bonds && self.transversals_are_bonds
    }
}

/// Check both routes to the cocircuits of the cycle matroid, one component
/// at a time.
pub fn check_theorem1(g: &MultiGraph) -> Result<Theorem1Check> {
    let mut out = Theorem1Check { dual_circuits_are_bonds: true, transversals_are_bonds: true };
    for (comp, _) in g.components() {
        let b = bonds(&comp)?;
        let cocircuits = finite_cycle_matroid(&comp)?.dual().circuits();
        out.dual_circuits_are_bonds &= cocircuits == b;
        let t = SetFamily::new(b.ground().clone(), spanning_tree_transversals(&comp))?;
        out.transversals_are_bonds &= t == b;
    }
    Ok(out)
}

pub fn verify_theorem1(g: &MultiGraph) -> Result<bool> {
    Ok(check_theorem1(g)?.holds())
}
