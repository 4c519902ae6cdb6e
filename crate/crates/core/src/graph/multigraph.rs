use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::set::{elements, GroundSet, Mask, MAX_GROUND};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// A finite multigraph. Loops and parallel edges are allowed; vertex and edge
/// labels are unique.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(char::is_whitespace)
}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from vertex labels and `(label, u, v)` triples naming vertices.
    pub fn from_parts<'a>(
        vertices: impl IntoIterator<Item = &'a str>,
        edges: impl IntoIterator<Item = (&'a str, &'a str, &'a str)>,
    ) -> Result<Self> {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v)?;
        }
        for (l, u, v) in edges {
            let (u, v) = (g.vertex(u)?, g.vertex(v)?);
            g.add_edge(l, u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<usize> {
        if !valid_label(label) || self.vertices.iter().any(|v| v == label) {
            return Err(Error::domain(format!("bad or duplicate vertex label {label:?}")));
        }
        self.vertices.push(label.to_string());
        Ok(self.vertices.len() - 1)
    }

    pub fn add_edge(&mut self, label: &str, u: usize, v: usize) -> Result<usize> {
        if !valid_label(label) || self.edges.iter().any(|e| e.label == label) {
            return Err(Error::domain(format!("bad or duplicate edge label {label:?}")));
        }
        if u >= self.vertices.len() || v >= self.vertices.len() {
            return Err(Error::domain(format!("edge {label} has an endpoint outside the vertex set")));
        }
        self.edges.push(Edge { label: label.to_string(), u, v });
        Ok(self.edges.len() - 1)
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::domain(format!("unknown vertex {label:?}")))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The edge labels as a ground set. Fails beyond [`MAX_GROUND`] edges.
    pub fn ground(&self) -> Result<GroundSet> {
        if self.edges.len() > MAX_GROUND {
            return Err(Error::domain(format!("{} edges exceed the ground-set bound {MAX_GROUND}", self.edges.len())));
        }
        GroundSet::new(self.edges.iter().map(|e| e.label.clone()))
    }

    /// Component labelling of the spanning subgraph with edge set `edges`.
    pub fn components_of(&self, edges: Mask) -> Vec<usize> {
        let mut uf = UnionFind::new(self.vertices.len());
        for i in elements(edges) {
            uf.union(self.edges[i].u, self.edges[i].v);
        }
        uf.into_labeling()
    }

    pub fn component_count_of(&self, edges: Mask) -> usize {
        let mut l = self.components_of(edges);
        l.sort_unstable();
        l.dedup();
        l.len()
    }

    pub fn all_edges(&self) -> Mask {
        crate::set::full_mask(self.edges.len())
    }

    pub fn is_connected(&self) -> bool {
        self.component_count_of(self.all_edges()) <= 1
    }

    /// Edge sets containing no cycle (loops and parallel pairs are cycles).
    pub fn is_acyclic(&self, edges: Mask) -> bool {
        let mut uf = UnionFind::new(self.vertices.len());
        elements(edges).all(|i| uf.union(self.edges[i].u, self.edges[i].v))
    }

    /// Edges with exactly one end in the vertex set `side`.
    pub fn crossing(&self, side: &[bool]) -> Mask {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| side[e.u] != side[e.v])
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn cut(&self, side: &[bool]) -> Cut {
        Cut { side: side.to_vec(), crossing: self.crossing(side) }
    }

    /// Delete edge `e`; vertices are kept.
    pub fn delete_edge(&self, e: usize) -> MultiGraph {
        let mut g = self.clone();
        g.edges.remove(e);
        g
    }

    /// Contract edge `e`, merging its endpoints. Contracting a loop deletes it.
    pub fn contract_edge(&self, e: usize) -> MultiGraph {
        let Edge { u, v, .. } = self.edges[e];
        let (keep, gone) = (u.min(v), u.max(v));
        let mut g = self.delete_edge(e);
        if keep == gone {
            return g;
        }
        let relabel = |x: usize| {
            let x = if x == gone { keep } else { x };
            if x > gone { x - 1 } else { x }
        };
        g.vertices.remove(gone);
        for ed in &mut g.edges {
            ed.u = relabel(ed.u);
            ed.v = relabel(ed.v);
        }
        g
    }

    /// Split into connected components. Each component keeps its edge labels;
    /// the returned masks give each component's edges in `self`.
    pub fn components(&self) -> Vec<(MultiGraph, Mask)> {
        let lab = self.components_of(self.all_edges());
        let mut roots: Vec<usize> = lab.clone();
        roots.sort_unstable();
        roots.dedup();
        roots
            .into_iter()
            .map(|r| {
                let vs: Vec<usize> = (0..self.vertices.len()).filter(|&v| lab[v] == r).collect();
                let mut g = MultiGraph::new();
                for &v in &vs {
                    g.vertices.push(self.vertices[v].clone());
                }
                let mut mask = 0;
                for (i, e) in self.edges.iter().enumerate().filter(|(_, e)| lab[e.u] == r) {
                    let pos = |x| vs.iter().position(|&y| y == x).expect("same component");
                    g.edges.push(Edge { label: e.label.clone(), u: pos(e.u), v: pos(e.v) });
                    mask |= 1 << i;
                }
                (g, mask)
            })
            .collect()
    }
}

/// A vertex bipartition with its crossing edges. Loops never cross.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub side: Vec<bool>,
    pub crossing: Mask,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contraction_merges_endpoints() {
        let g = MultiGraph::from_parts(["a", "b", "c"], [("x", "a", "b"), ("y", "b", "c"), ("z", "a", "c")]).unwrap();
        let h = g.contract_edge(0);
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 2);
        assert!(!h.is_acyclic(h.all_edges()));
        let l = MultiGraph::from_parts(["a"], [("l", "a", "a")]).unwrap();
        assert_eq!(l.contract_edge(0).edge_count(), 0);
    }

    #[test]
    fn loops_never_cross() {
        let g = MultiGraph::from_parts(["a", "b"], [("l", "a", "a"), ("e", "a", "b")]).unwrap();
        assert_eq!(g.crossing(&[true, false]), 0b10);
    }

    #[test]
    fn components_split() {
        let g = MultiGraph::from_parts(["a", "b", "c", "d"], [("x", "a", "b"), ("y", "c", "d")]).unwrap();
        let parts = g.components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[1].1, 0b10);
        assert_eq!(parts[1].0.edges()[0].label, "y");
    }
}
