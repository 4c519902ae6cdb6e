//! Incidence vectors of graphs over `F_2`.
//!
//! An edge `uv` maps to the function that is 1 at `u` and at `v`; a loop maps
//! to zero. A set of edges is thinly dependent exactly when a non-empty subset
//! has even degree at every vertex.

use super::field::Field;
use super::independence::thinly_independent;
use super::vec::{Domain, FnVec, ThinFamily};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::infinite::window::{decide, Window};
use crate::infinite::{bean_check, is_independent, EdgeId, EdgeSetExpr, MatroidKind, StructuredGraph, Vertex};
use crate::par::Exec;
use crate::set::{elements, Mask};

/// One member per edge, named by the edge label, over the vertex indices.
pub fn incidence_family(g: &MultiGraph) -> ThinFamily {
    let members = g.edges().iter().map(|e| {
        let v = if e.is_loop() { FnVec::zero() } else { FnVec::indicator([e.u, e.v]) };
        (e.label.clone(), v)
    });
    ThinFamily::new(Field::F2, Domain::Finite(g.vertex_count()), members).expect("labels are distinct")
}

/// Is the edge set `edges` thinly independent in the incidence family?
pub fn incidence_independent(g: &MultiGraph, edges: Mask) -> bool {
    let fam = incidence_family(g);
    thinly_independent(&fam, &elements(edges).collect::<Vec<_>>()).expect("indices in range")
}

/// Compare thin independence of incidence vectors with the absence of cycles,
/// over every edge subset.
pub fn mac_thin_equivalence(g: &MultiGraph) -> bool {
    let fam = incidence_family(g);
    let all = g.all_edges();
    crate::set::submasks(all).all(|m| {
        let s: Vec<usize> = elements(m).collect();
        thinly_independent(&fam, &s).expect("indices in range") == g.is_acyclic(m)
    })
}

/// Exhaustive check over a list of graphs.
pub fn mac_thin_equivalence_all(graphs: &[MultiGraph], exec: Exec) -> Vec<bool> {
    exec.map(graphs, mac_thin_equivalence)
}

/// The incidence family of a structured graph. Its members are indexed by
/// [`EdgeId`]s and cannot be listed, so it is kept symbolic.
#[derive(Debug, Clone, Copy)]
pub struct StructuredIncidence<'g> {
    graph: &'g StructuredGraph,
}

pub fn structured_incidence(g: &StructuredGraph) -> StructuredIncidence<'_> {
    StructuredIncidence { graph: g }
}

impl StructuredIncidence<'_> {
    /// Rails and cross rules touch each tail vertex a bounded number of times,
    /// so the family is thin unless a core vertex has infinitely many edges
    /// into a tail.
    pub fn is_thin(&self) -> bool {
        !bean_check(self.graph)
    }

    /// The non-zero coordinates of an edge's incidence vector.
    pub fn vector(&self, e: &EdgeId) -> Result<Vec<Vertex>> {
        let (u, v) = self.graph.endpoints(e)?;
        Ok(if u == v { vec![] } else { vec![u, v] })
    }

    /// Thin independence of the incidence vectors of `d`.
    ///
    /// On a window, the vertices outside the last block must have even degree
    /// in a candidate relation while the last block is left free, since a
    /// relation may run off to infinity there. `d` is dependent when some
    /// relation uses an edge of the prefix: by periodicity every relation has a
    /// shifted copy that does. The answer is taken at two depths and refused if
    /// they disagree.
    pub fn thinly_independent(&self, d: &EdgeSetExpr) -> Result<bool> {
        let g = self.graph;
        if !d.is_subset(&g.universe()) {
            return Err(Error::domain("edge set is not contained in the graph"));
        }
        if !self.is_thin() {
            return Err(Error::refused("incidence family is not thin (a core vertex has infinite degree)"));
        }
        decide(g, &[d], |w| !has_prefix_relation(w, d))
    }
}

fn has_prefix_relation(w: &Window, d: &EdgeSetExpr) -> bool {
    let edges = w.edges(d);
    let n = w.vertex_count();
    let constrained: Vec<usize> = (0..n).filter(|&v| !w.is_last(v)).collect();
    let mut col = vec![usize::MAX; n];
    for (k, &v) in constrained.iter().enumerate() {
        col[v] = k;
    }
    let rows: Vec<Vec<u32>> = edges
        .iter()
        .map(|e| {
            let mut r = vec![0; constrained.len()];
            if e.a != e.b {
                for x in [e.a, e.b] {
                    if col[x] != usize::MAX {
                        r[col[x]] = 1;
                    }
                }
            }
            r
        })
        .collect();
    Field::F2
        .left_nullspace(&rows)
        .iter()
        .any(|rel| rel.iter().zip(&edges).any(|(&c, e)| c != 0 && w.in_prefix(e)))
}

#[derive(Debug, Clone, Default)]
pub struct MacThinReport {
    pub checked: usize,
    /// Sets on which thin independence and the algebraic-cycle oracle differ.
    pub disagreements: Vec<EdgeSetExpr>,
}

impl MacThinReport {
    pub fn holds(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compare the incidence family with the algebraic-cycle oracle on `samples`.
pub fn mac_thin_equivalence_structured(g: &StructuredGraph, samples: &[EdgeSetExpr]) -> Result<MacThinReport> {
    if bean_check(g) {
        return Err(Error::refused("incidence family is not thin"));
    }
    let inc = structured_incidence(g);
    let mut report = MacThinReport::default();
    for d in samples {
        let thin = inc.thinly_independent(d)?;
        let mac = is_independent(g, MatroidKind::AlgebraicCycle, d)?;
        report.checked += 1;
        if thin != mac {
            report.disagreements.push(d.clone());
        }
    }
    Ok(report)
}

/// Does every vertex have even degree in `edges`? Loops count twice.
pub fn is_even(g: &MultiGraph, edges: Mask) -> bool {
    let mut deg = vec![0usize; g.vertex_count()];
    for i in elements(edges) {
        let e = &g.edges()[i];
        if !e.is_loop() {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
    }
    deg.iter().all(|d| d % 2 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::catalog_graphs::{k4, triangle};

    #[test]
    fn single_edge_has_two_ones() {
        let g = MultiGraph::from_parts(["u", "v"], [("e", "u", "v")]).unwrap();
        let f = incidence_family(&g);
        assert_eq!(f.member(0), &FnVec::indicator([0, 1]));
    }

    #[test]
    fn loop_is_zero_and_dependent() {
        let g = MultiGraph::from_parts(["u"], [("l", "u", "u")]).unwrap();
        let f = incidence_family(&g);
        assert!(f.member(0).is_zero());
        assert!(!incidence_independent(&g, 1));
    }

    #[test]
    fn triangle_and_k4() {
        assert!(mac_thin_equivalence(&triangle()));
        assert!(mac_thin_equivalence(&k4()));
        assert!(!incidence_independent(&triangle(), 0b111));
    }

    #[test]
    fn path_is_free() {
        let g = MultiGraph::from_parts(["a", "b", "c", "d"], [("x", "a", "b"), ("y", "b", "c"), ("z", "c", "d")])
            .unwrap();
        assert!(crate::set::submasks(g.all_edges()).all(|m| incidence_independent(&g, m)));
    }

    #[test]
    fn even_sets_are_the_relations() {
        let g = k4();
        for m in crate::set::submasks(g.all_edges()) {
            let sum_zero = {
                let f = incidence_family(&g);
                elements(m).fold(FnVec::zero(), |acc, i| acc.add(Field::F2, f.member(i))).is_zero()
            };
            assert_eq!(sum_zero, is_even(&g, m));
        }
    }

    #[test]
    fn double_ray_whole_edge_set_dependent() {
        let g = catalog::double_ray();
        let inc = structured_incidence(&g);
        assert!(inc.is_thin());
        assert!(!inc.thinly_independent(&g.universe()).unwrap());
    }

    #[test]
    fn ladder_is_thin_and_fan_is_not() {
        assert!(structured_incidence(&catalog::ladder()).is_thin());
        let fan = catalog::fan();
        let inc = structured_incidence(&fan);
        assert!(!inc.is_thin());
        assert!(matches!(inc.thinly_independent(&fan.universe()), Err(Error::Refused(_))));
    }
}
