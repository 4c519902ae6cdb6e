//! Structured infinite graphs and their matroids.
//!
//! A [`StructuredGraph`] is a finite core, finitely many one-way infinite
//! tails, periodic rules adding edges between tails and from core vertices to
//! tails, and a finite patch. Edge sets are [`EdgeSetExpr`] values: finitely
//! many named edges plus an ultimately periodic membership word per family.
//! Topological questions (ends, circles, connectivity of closures) are
//! decided on finite windows whose depth is derived from the periods, and
//! refused when two depths disagree.

mod bean;
mod duality;
mod expr;
mod graph;
mod oracles;
mod sample;
mod skew;
mod topology;
mod tst;
pub(crate) mod window;
mod word;

pub use bean::{bean_gap_certificate, contains_algebraic_cycle, BeanGapCertificate, STAGES};
pub use duality::{verify_duality_chain, Bijection, DualityChainReport, FamilyMap};
pub use expr::EdgeSetExpr;
pub use graph::{CoreTailRule, CrossRule, EdgeId, FamilyId, PatchEdge, StructuredGraph, Vertex};
pub use oracles::{
    bean_check, circle_witness, is_base, is_bond, is_circuit, is_finite_cycle, is_independent, is_mac_circuit,
    matroid_oracles, MatroidKind, MatroidOracle,
};
pub use sample::{acirclic_sample, finite_sample, standard_sample, DEFAULT_SEED};
pub use skew::{is_mac_cocircuit, skew_cut_check, skew_cuts_at, verify_mac_duality, MacDualityReport, VertexCut};
pub use topology::{closure_connected, ends, is_circle, profile, spanning_connected, Degree, EdgeEnd, SubspaceProfile};
pub use tst::{complement_is_finite_bond_base, is_topological_spanning_tree, topological_spanning_tree, tree_criteria, TreeCriteria};
pub use word::UpWord;
