use std::collections::BTreeMap;

use super::{
    verify_bases, verify_circuits, verify_closure, verify_independence, verify_rank, AxiomReport,
    ClosureTable, RankInput, SystemKind,
};
use crate::error::{Error, Result};
use crate::matroid::{FiniteMatroid, RankValue, RelRankTable};
use crate::set::{is_subset, submasks, GroundSet, SetFamily};

/// One matroid in any of the five axiomatisations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Presentation {
    Independents(SetFamily),
    Bases(SetFamily),
    Circuits(SetFamily),
    Closure(ClosureTable),
    Rank(RankInput),
}

impl Presentation {
    pub fn kind(&self) -> SystemKind {
        match self {
            Presentation::Independents(_) => SystemKind::Independence,
            Presentation::Bases(_) => SystemKind::Basis,
            Presentation::Circuits(_) => SystemKind::Circuit,
            Presentation::Closure(_) => SystemKind::Closure,
            Presentation::Rank(_) => SystemKind::Rank,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        match self {
            Presentation::Independents(f) | Presentation::Bases(f) | Presentation::Circuits(f) => f.ground(),
            Presentation::Closure(t) => &t.ground,
            Presentation::Rank(r) => &r.table.ground,
        }
    }

    /// Run the verifier of this presentation's own axiom system.
    pub fn verify(&self) -> Result<AxiomReport> {
        Ok(match self {
            Presentation::Independents(f) => verify_independence(f),
            Presentation::Bases(f) => verify_bases(f),
            Presentation::Circuits(f) => verify_circuits(f),
            Presentation::Closure(t) => verify_closure(t)?,
            Presentation::Rank(r) => verify_rank(r)?,
        })
    }

    /// The induced independence family, without checking axioms.
    pub fn independents(&self) -> SetFamily {
        let ground = self.ground().clone();
        let all = submasks(ground.full());
        let members: Vec<_> = match self {
            Presentation::Independents(f) => return f.clone(),
            Presentation::Bases(f) => return f.down_closure(),
            Presentation::Circuits(f) => {
                all.filter(|&s| !f.members().iter().any(|&c| is_subset(c, s))).collect()
            }
            Presentation::Closure(t) => all.filter(|&s| t.is_independent(s)).collect(),
            Presentation::Rank(r) => all.filter(|&s| r.is_independent(s)).collect(),
        };
        SetFamily::new(ground, members).expect("subsets of the ground set")
    }

    /// Present a validated matroid in the requested system.
    pub fn of_matroid(m: &FiniteMatroid, kind: SystemKind) -> Presentation {
        match kind {
            SystemKind::Independence => Presentation::Independents(m.independents()),
            SystemKind::Basis => Presentation::Bases(m.bases()),
            SystemKind::Circuit => Presentation::Circuits(m.circuits()),
            SystemKind::Closure => Presentation::Closure(ClosureTable::from_fn(m.ground().clone(), |x| {
                m.closure(x).expect("x ranges over the ground set")
            })),
            SystemKind::Rank => {
                let mut entries = BTreeMap::new();
                for a in submasks(m.ground().full()) {
                    for b in submasks(a) {
                        let v = m.relative_rank(a, b).expect("nested pair");
                        entries.insert((a, b), RankValue::Finite(v));
                    }
                }
                Presentation::Rank(RankInput::new(RelRankTable { ground: m.ground().clone(), entries }))
            }
        }
    }
}

/// Convert `source` into the `target` axiomatisation. The source must pass
/// its own axiom report; otherwise the report is returned as the error.
pub fn convert(source: &Presentation, target: SystemKind) -> Result<Presentation> {
    let report = source.verify()?;
    if !report.passed() {
        return Err(Error::AxiomsFailed(Box::new(report)));
    }
    let m = FiniteMatroid::from_independents(&source.independents())?;
    Ok(Presentation::of_matroid(&m, target))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let u12 = Presentation::Independents(SetFamily::new(g, [0, 1, 2]).unwrap());
        let Presentation::Bases(b) = convert(&u12, SystemKind::Basis).unwrap() else { panic!() };
        assert_eq!(b.members(), &[1, 2]);

        let t = GroundSet::new(["e1", "e2", "e3"]).unwrap();
        let tri = Presentation::Circuits(SetFamily::new(t, [0b111]).unwrap());
        let Presentation::Rank(r) = convert(&tri, SystemKind::Rank).unwrap() else { panic!() };
        assert_eq!(r.table.get(0b111, 0), Some(RankValue::Finite(2)));

        let free = Presentation::Closure(ClosureTable::from_fn(GroundSet::indexed("x", 3), |x| x));
        let Presentation::Circuits(c) = convert(&free, SystemKind::Circuit).unwrap() else { panic!() };
        assert!(c.is_empty());
    }

    #[test]
    fn refuses_non_matroid() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let bad = Presentation::Bases(SetFamily::from_labels(g, &[&["a"], &["b", "c"]]).unwrap());
        assert!(matches!(convert(&bad, SystemKind::Circuit), Err(Error::AxiomsFailed(_))));
    }
}
