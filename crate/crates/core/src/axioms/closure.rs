use std::collections::BTreeMap;

use super::{check_m, AxiomReport, SystemKind, Witness};
use crate::error::{Error, Result};
use crate::set::{elements, is_subset, submasks, GroundSet, Mask};

/// A map `X ↦ cl(X)` on subsets of a ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureTable {
    pub ground: GroundSet,
    pub map: BTreeMap<Mask, Mask>,
}

impl ClosureTable {
    pub fn from_fn(ground: GroundSet, cl: impl Fn(Mask) -> Mask) -> Self {
        let map = submasks(ground.full()).map(|x| (x, cl(x))).collect();
        ClosureTable { ground, map }
    }

    pub fn is_total(&self) -> bool {
        self.map.len() == 1 << self.ground.len()
            && submasks(self.ground.full()).all(|x| self.map.contains_key(&x))
    }

    fn cl(&self, x: Mask) -> Mask {
        self.map[&x]
    }

    /// Sets `I` with `x ∉ cl(I - x)` for every `x ∈ I`.
    pub fn is_independent(&self, i: Mask) -> bool {
        elements(i).all(|x| self.cl(i & !(1 << x)) & (1 << x) == 0)
    }
}

fn cl1(t: &ClosureTable) -> std::result::Result<(), Witness> {
    match t.map.iter().find(|(&x, &c)| !is_subset(x, c)) {
        Some((&x, _)) => Err(Witness::sets([x])),
        None => Ok(()),
    }
}

fn cl2(t: &ClosureTable) -> std::result::Result<(), Witness> {
    for y in submasks(t.ground.full()) {
        for x in submasks(y) {
            if !is_subset(t.cl(x), t.cl(y)) {
                return Err(Witness::sets([x, y]));
            }
        }
    }
    Ok(())
}

fn cl3(t: &ClosureTable) -> std::result::Result<(), Witness> {
    match t.map.iter().find(|(_, &c)| t.map.get(&c) != Some(&c)) {
        Some((&x, _)) => Err(Witness::sets([x])),
        None => Ok(()),
    }
}

fn cl4_instance(t: &ClosureTable, z: Mask, x: usize, y: usize) -> bool {
    let in_zx = t.cl(z | (1 << x)) & (1 << y) != 0;
    let in_z = t.cl(z) & (1 << y) != 0;
    !(in_zx && !in_z) || t.cl(z | (1 << y)) & (1 << x) != 0
}

fn cl4(t: &ClosureTable) -> std::result::Result<(), Witness> {
    let n = t.ground.len();
    for z in submasks(t.ground.full()) {
        for x in 0..n {
            for y in 0..n {
                if !cl4_instance(t, z, x, y) {
                    return Err(Witness::sets([z]).with_elements([x, y]));
                }
            }
        }
    }
    Ok(())
}

/// Check (CL1)–(CL4) and (CLM). A partial table is a domain error.
pub fn verify_closure(table: &ClosureTable) -> Result<AxiomReport> {
    if !table.is_total() {
        return Err(Error::domain("closure table is not total on 2^E"));
    }
    if table.map.values().any(|&c| table.ground.check(c).is_err()) {
        return Err(Error::domain("closure values leave the ground set"));
    }
    let mut report = AxiomReport::new(SystemKind::Closure, table.ground.clone());
    report.record("CL1", cl1(table));
    report.record("CL2", cl2(table));
    report.record("CL3", cl3(table));
    report.record("CL4", cl4(table));
    report.record("CLM", check_m(table.ground.len(), |i| table.is_independent(i)));
    Ok(report)
}

pub(super) fn replay(t: &ClosureTable, name: &str, w: &Witness) -> bool {
    if !t.is_total() {
        return false;
    }
    match (name, w.sets.as_slice(), w.elements.as_slice()) {
        ("CL1", &[x], _) => !is_subset(x, t.cl(x)),
        ("CL2", &[x, y], _) => is_subset(x, y) && !is_subset(t.cl(x), t.cl(y)),
        ("CL3", &[x], _) => t.cl(t.cl(x)) != t.cl(x),
        ("CL4", &[z], &[x, y]) => !cl4_instance(t, z, x, y),
        ("CLM", &[i, x], _) => {
            t.is_independent(i) && super::maximal_between(i, x, |m| t.is_independent(m)).is_none()
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> GroundSet {
        GroundSet::new(["a", "b"]).unwrap()
    }

    #[test]
    fn identity_and_constant_pass() {
        assert!(verify_closure(&ClosureTable::from_fn(ab(), |x| x)).unwrap().passed());
        assert!(verify_closure(&ClosureTable::from_fn(ab(), |_| 0b11)).unwrap().passed());
    }

    #[test]
    fn monotonicity_conflict() {
        // cl(∅)={a} but cl({b})={b}
        let t = ClosureTable::from_fn(ab(), |x| if x == 0 { 0b01 } else { x });
        let r = verify_closure(&t).unwrap();
        assert!(r.failures().contains(&"CL2"));
        assert!(replay(&t, "CL2", r.get("CL2").unwrap().witness.as_ref().unwrap()));
    }

    #[test]
    fn partial_table_is_domain_error() {
        let mut t = ClosureTable::from_fn(ab(), |x| x);
        t.map.remove(&0b10);
        assert!(matches!(verify_closure(&t), Err(Error::Domain(_))));
    }
}
