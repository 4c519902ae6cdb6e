use super::expr::EdgeSetExpr;
use super::graph::{EdgeId, FamilyId, StructuredGraph};
use super::oracles::{is_bond, is_finite_cycle, is_independent, MatroidKind};
use super::topology::is_circle;
use super::tst::topological_spanning_tree;
use super::word::UpWord;
use crate::error::{Error, Result};

/// Family edge `(from, i)` for `i >= start` goes to `(to, i + shift)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMap {
    pub from: FamilyId,
    pub to: FamilyId,
    pub start: usize,
    pub shift: i64,
}

/// An edge correspondence between two structured graphs: shifted family maps
/// plus finitely many single-edge entries.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Bijection {
    pub singles: Vec<(EdgeId, EdgeId)>,
    pub families: Vec<FamilyMap>,
}

impl Bijection {
    fn pieces(&self) -> Vec<(EdgeSetExpr, EdgeSetExpr)> {
        let mut out: Vec<(EdgeSetExpr, EdgeSetExpr)> = self
            .singles
            .iter()
            .map(|(a, b)| (EdgeSetExpr::from_edges([a]), EdgeSetExpr::from_edges([b])))
            .collect();
        for m in &self.families {
            let dom = UpWord::from_start(m.start);
            out.push((EdgeSetExpr::family(m.from, dom.clone()), EdgeSetExpr::family(m.to, dom.shift(m.shift))));
        }
        out
    }

    /// Image of an edge set. Edges not covered by the map are dropped.
    pub fn apply(&self, d: &EdgeSetExpr) -> EdgeSetExpr {
        let mut out = EdgeSetExpr::empty();
        for (a, b) in &self.singles {
            if d.contains(a) {
                out.insert(b);
            }
        }
        for m in &self.families {
            let w = d.word(m.from).intersect(&UpWord::from_start(m.start)).shift(m.shift);
            out = out.union(&EdgeSetExpr::family(m.to, w));
        }
        out
    }

    pub fn inverse(&self) -> Bijection {
        Bijection {
            singles: self.singles.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
            families: self
                .families
                .iter()
                .map(|m| FamilyMap {
                    from: m.to,
                    to: m.from,
                    start: (m.start as i64 + m.shift) as usize,
                    shift: -m.shift,
                })
                .collect(),
        }
    }

    /// Check that the pieces partition both edge universes.
    pub fn validate(&self, g: &StructuredGraph, h: &StructuredGraph) -> Result<()> {
        if self.families.iter().any(|m| (m.start as i64 + m.shift) < 0) {
            return Err(Error::domain("family map shifts below index 0"));
        }
        let pieces = self.pieces();
        for (side, graph, pick) in [("source", g, 0usize), ("target", h, 1)] {
            let mut seen = EdgeSetExpr::empty();
            for p in &pieces {
                let part = if pick == 0 { &p.0 } else { &p.1 };
                if !part.intersect(&seen).is_empty() {
                    return Err(Error::domain(format!("edge map is not injective on the {side} side")));
                }
                seen = seen.union(part);
            }
            if seen != graph.universe() {
                return Err(Error::domain(format!("edge map does not cover the {side} edge set exactly")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DualityChainReport {
    pub samples: usize,
    /// Samples whose circle status in `g` differs from the bond status of their image.
    pub circle_bond_mismatches: Vec<EdgeSetExpr>,
    /// The complement of a spanning tree of `g` is a base of the finite-bond matroid.
    pub base_complement_ok: bool,
    pub dual_cycles: usize,
    /// Finite cycles of the dual whose preimage is not a finite bond.
    pub cycle_bond_mismatches: Vec<EdgeSetExpr>,
}

impl DualityChainReport {
    pub fn holds(&self) -> bool {
        self.circle_bond_mismatches.is_empty() && self.base_complement_ok && self.cycle_bond_mismatches.is_empty()
    }
}

/// Check the duality chain between `g` and its dual `h` on sampled edge sets:
/// circles of `g` map to bonds of `h`; a spanning tree's complement is a base
/// of the finite-bond matroid; finite cycles of `h` pull back to finite bonds.
pub fn verify_duality_chain(
    g: &StructuredGraph,
    h: &StructuredGraph,
    bij: &Bijection,
    samples: &[EdgeSetExpr],
    dual_samples: &[EdgeSetExpr],
) -> Result<DualityChainReport> {
    bij.validate(g, h)?;
    let inv = bij.inverse();
    let mut r = DualityChainReport { samples: samples.len(), ..Default::default() };
    for d in samples {
        if d.is_empty() {
            continue;
        }
        if is_circle(g, d)? != is_bond(h, &bij.apply(d))? {
            r.circle_bond_mismatches.push(d.clone());
        }
    }
    let t = topological_spanning_tree(g, &EdgeSetExpr::empty())?;
    r.base_complement_ok = super::oracles::is_base(g, MatroidKind::FiniteBond, &g.complement(&t))?
        && is_independent(g, MatroidKind::Cycle, &t)?;
    for c in dual_samples {
        if is_finite_cycle(h, c)? {
            r.dual_cycles += 1;
            let back = inv.apply(c);
            if !(back.is_finite() && is_bond(g, &back)?) {
                r.cycle_bond_mismatches.push(c.clone());
            }
        }
    }
    Ok(r)
}
