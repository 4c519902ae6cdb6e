//! A workbench for matroids on finite ground sets and on a decidable class of
//! finitely presented infinite graphs.
//!
//! * [`matroid`] holds finite matroids as explicit independence families, with
//!   closure, relative rank, duality, minors and circuit machinery.
//! * [`axioms`] checks the independence, basis, circuit, closure and rank axiom
//!   systems against explicit set systems, converts between them and enumerates
//!   small matroids.
//! * [`graph`] builds finite-cycle, bond and finite-bond matroids of finite
//!   multigraphs.
//! * [`infinite`] implements structured infinite graphs (finite core, periodic
//!   ray tails, finite patch) with symbolic edge sets, ends, circles,
//!   topological spanning trees, skew cuts and the matroid oracles on them.
//! * [`thin`] covers thin families of functions into a prime field and the
//!   thin-sums matroids they induce.
//! * [`catalog`] collects the named example graphs with replayable facts.
//!
//! Exhaustive sweeps run on rayon when the `parallel` feature is enabled (the
//! default); every sweep also accepts an explicit [`Exec`] mode.

pub mod axioms;
pub mod catalog;
pub mod error;
pub mod format;
pub mod graph;
pub mod infinite;
pub mod matroid;
pub mod par;
pub mod set;
pub mod thin;

pub use error::{Error, Result};
pub use matroid::FiniteMatroid;
pub use par::Exec;
pub use set::{GroundSet, Mask, SetFamily};
