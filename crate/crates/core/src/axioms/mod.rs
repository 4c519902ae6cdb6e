//! The five axiom systems as executable checks over explicit set systems.
//!
//! Every verifier returns an [`AxiomReport`] listing each axiom with its
//! verdict; a failing axiom carries a [`Witness`] that [`replay`] re-checks
//! against the same input. The maximality axiom (M) is searched literally in
//! every system even though it always holds on finite ground sets.

mod bases;
mod circuits;
mod closure;
mod convert;
mod enumerate;
mod independence;
mod rank;

use std::fmt;

pub use bases::verify_bases;
pub use circuits::{verify_circuits, verify_circuits_classic};
pub use closure::{verify_closure, ClosureTable};
pub use convert::{convert, Presentation};
pub use enumerate::{count_by_down_closed_filter, enumerate_matroids, enumerate_matroids_with, MAX_ENUMERATION};
pub use independence::verify_independence;
pub use rank::{verify_rank, RankInput};

use crate::set::{elements, is_subset, submasks, GroundSet, Mask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SystemKind {
    Independence,
    Basis,
    Circuit,
    Closure,
    Rank,
}

impl SystemKind {
    pub const ALL: [SystemKind; 5] = [
        SystemKind::Independence,
        SystemKind::Basis,
        SystemKind::Circuit,
        SystemKind::Closure,
        SystemKind::Rank,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SystemKind::Independence => "independence",
            SystemKind::Basis => "bases",
            SystemKind::Circuit => "circuits",
            SystemKind::Closure => "closure",
            SystemKind::Rank => "rank",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| {
            k.name() == s
                || matches!(
                    (k, s),
                    (SystemKind::Independence, "independents")
                        | (SystemKind::Basis, "basis")
                        | (SystemKind::Circuit, "circuit")
                )
        })
    }
}

/// The sets and elements that make an axiom instance fail.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    pub sets: Vec<Mask>,
    pub elements: Vec<usize>,
}

impl Witness {
    pub fn sets(sets: impl Into<Vec<Mask>>) -> Self {
        Witness { sets: sets.into(), elements: Vec::new() }
    }

    pub fn with_elements(mut self, elements: impl Into<Vec<usize>>) -> Self {
        self.elements = elements.into();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub name: &'static str,
    pub witness: Option<Witness>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub system: SystemKind,
    pub ground: GroundSet,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub(crate) fn new(system: SystemKind, ground: GroundSet) -> Self {
        AxiomReport { system, ground, results: Vec::new() }
    }

    pub(crate) fn record(&mut self, name: &'static str, outcome: Result<(), Witness>) {
        self.results.push(AxiomResult { name, witness: outcome.err() });
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.name == name)
    }

    /// Names of the failing axioms.
    pub fn failures(&self) -> Vec<&'static str> {
        self.results.iter().filter(|r| !r.passed()).map(|r| r.name).collect()
    }

    fn show_witness(&self, w: &Witness) -> String {
        let mut parts: Vec<String> = w.sets.iter().map(|&s| self.ground.show(s)).collect();
        parts.extend(w.elements.iter().map(|&e| self.ground.label(e).to_string()));
        parts.join(" ")
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.witness {
                None => writeln!(f, "{} pass", r.name)?,
                Some(w) => writeln!(f, "{} fail witness: {}", r.name, self.show_witness(w))?,
            }
        }
        Ok(())
    }
}

/// Literal check of (M) for the family decided by `indep` on the ground set
/// of size `n`: for every `I ⊆ X` with `I` independent, the independent sets
/// between `I` and `X` must have a maximal element. The witness is `[I, X]`.
pub(crate) fn check_m(n: usize, indep: impl Fn(Mask) -> bool) -> Result<(), Witness> {
    let full = crate::set::full_mask(n);
    for x in submasks(full) {
        for i in submasks(x).filter(|&i| indep(i)) {
            if maximal_between(i, x, &indep).is_none() {
                return Err(Witness::sets([i, x]));
            }
        }
    }
    Ok(())
}

/// Search `{I' independent : I ⊆ I' ⊆ X}` for a maximal element.
pub(crate) fn maximal_between(i: Mask, x: Mask, indep: impl Fn(Mask) -> bool) -> Option<Mask> {
    let free = x & !i;
    let candidates: Vec<Mask> = submasks(free).map(|s| s | i).filter(|&s| indep(s)).collect();
    candidates
        .iter()
        .copied()
        .find(|&c| is_subset(i, c) && !elements(x & !c).any(|e| indep(c | (1 << e))))
}

/// Re-run the single axiom instance named by `name` with the given witness.
/// Returns `true` when the failure reproduces.
pub fn replay(input: &Presentation, name: &str, witness: &Witness) -> bool {
    match input {
        Presentation::Independents(f) => independence::replay(f, name, witness),
        Presentation::Bases(f) => bases::replay(f, name, witness),
        Presentation::Circuits(f) => circuits::replay(f, name, witness),
        Presentation::Closure(t) => closure::replay(t, name, witness),
        Presentation::Rank(r) => rank::replay(r, name, witness),
    }
}
