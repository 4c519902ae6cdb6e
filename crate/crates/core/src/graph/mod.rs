//! Finite multigraphs and their cycle and bond matroids.

mod generate;
mod matroids;
mod multigraph;

pub use generate::{connected_multigraphs, connected_multigraphs_upto};
pub use matroids::{
    bonds, check_theorem1, finite_bond_matroid, finite_cycle_matroid, is_bond, spanning_tree_transversals,
    verify_theorem1, Theorem1Check,
};
pub use multigraph::{Cut, Edge, MultiGraph};

/// Small named graphs used in tests and by the catalog.
pub mod catalog_graphs {
    use super::MultiGraph;

    pub fn triangle() -> MultiGraph {
        MultiGraph::from_parts(["a", "b", "c"], [("e1", "a", "b"), ("e2", "b", "c"), ("e3", "a", "c")])
            .expect("valid")
    }

    pub fn k4() -> MultiGraph {
        MultiGraph::from_parts(
            ["a", "b", "c", "d"],
            [("ab", "a", "b"), ("ac", "a", "c"), ("ad", "a", "d"), ("bc", "b", "c"), ("bd", "b", "d"), ("cd", "c", "d")],
        )
        .expect("valid")
    }
}
