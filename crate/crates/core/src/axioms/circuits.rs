use std::collections::BTreeMap;

use super::{check_m, AxiomReport, SystemKind, Witness};
use crate::set::{elements, is_subset, submasks, Mask, SetFamily};

fn c2(fam: &SetFamily) -> Result<(), Witness> {
    for &c in fam.members() {
        if let Some(&d) = fam.members().iter().find(|&&d| d != c && is_subset(c, d)) {
            return Err(Witness::sets([c, d]));
        }
    }
    Ok(())
}

/// Does some circuit `C'` satisfy `z ∈ C' ⊆ allowed`?
fn has_circuit_through(fam: &SetFamily, z: usize, allowed: Mask) -> bool {
    fam.members().iter().any(|&c| c & (1 << z) != 0 && is_subset(c, allowed))
}

/// One representative family `(C_x | x ∈ X)` per reachable union, where each
/// `C_x` meets `X` exactly in `x`.
fn families_by_union(fam: &SetFamily, x: Mask) -> BTreeMap<Mask, Vec<Mask>> {
    let mut acc: BTreeMap<Mask, Vec<Mask>> = BTreeMap::from([(0, Vec::new())]);
    for e in elements(x) {
        let options: Vec<Mask> = fam.members().iter().copied().filter(|&c| c & x == 1 << e).collect();
        let mut next = BTreeMap::new();
        for (u, chosen) in &acc {
            for &c in &options {
                next.entry(u | c).or_insert_with(|| {
                    let mut v = chosen.clone();
                    v.push(c);
                    v
                });
            }
        }
        acc = next;
    }
    acc
}

/// (C3) over every `X ⊆ C` (including `∅` and `C`), every admissible family
/// and every `z`. Witness: sets `[C, X, C_x...]`, element `[z]`.
fn c3(fam: &SetFamily) -> Result<(), Witness> {
    for &c in fam.members() {
        for x in submasks(c) {
            for (u, chosen) in families_by_union(fam, x) {
                for z in elements(c & !u) {
                    if !has_circuit_through(fam, z, (c | u) & !x) {
                        let mut sets = vec![c, x];
                        sets.extend(chosen);
                        return Err(Witness::sets(sets).with_elements([z]));
                    }
                }
            }
        }
    }
    Ok(())
}

fn c_independent(fam: &SetFamily) -> impl Fn(Mask) -> bool + '_ {
    move |s| !fam.members().iter().any(|&c| is_subset(c, s))
}

/// Check (C1), (C2), (C3) and (CM).
pub fn verify_circuits(family: &SetFamily) -> AxiomReport {
    let mut report = AxiomReport::new(SystemKind::Circuit, family.ground().clone());
    report.record("C1", if family.contains(0) { Err(Witness::sets([0])) } else { Ok(()) });
    report.record("C2", c2(family));
    report.record("C3", c3(family));
    report.record("CM", check_m(family.ground().len(), c_independent(family)));
    report
}

/// Classic finite elimination: for distinct circuits `C1, C2` and
/// `e ∈ C1 ∩ C2` some circuit lies in `(C1 ∪ C2) - e`.
fn classic_elimination(fam: &SetFamily) -> Result<(), Witness> {
    for &c1 in fam.members() {
        for &c2 in fam.members().iter().filter(|&&c| c != c1) {
            for e in elements(c1 & c2) {
                let allowed = (c1 | c2) & !(1 << e);
                if !fam.members().iter().any(|&c| is_subset(c, allowed)) {
                    return Err(Witness::sets([c1, c2]).with_elements([e]));
                }
            }
        }
    }
    Ok(())
}

/// The weakened verifier: (C1), (C2) and classic elimination only.
pub fn verify_circuits_classic(family: &SetFamily) -> AxiomReport {
    let mut report = AxiomReport::new(SystemKind::Circuit, family.ground().clone());
    report.record("C1", if family.contains(0) { Err(Witness::sets([0])) } else { Ok(()) });
    report.record("C2", c2(family));
    report.record("CE", classic_elimination(family));
    report
}

pub(super) fn replay(fam: &SetFamily, name: &str, w: &Witness) -> bool {
    match (name, w.sets.as_slice(), w.elements.as_slice()) {
        ("C1", _, _) => fam.contains(0),
        ("C2", &[c, d], _) => fam.contains(c) && fam.contains(d) && c != d && is_subset(c, d),
        ("C3", [c, x, chosen @ ..], &[z]) => {
            let xs: Vec<usize> = elements(*x).collect();
            let family_ok = fam.contains(*c)
                && is_subset(*x, *c)
                && chosen.len() == xs.len()
                && chosen.iter().zip(&xs).all(|(&cx, &e)| fam.contains(cx) && cx & x == 1 << e);
            let u = chosen.iter().fold(0, |a, b| a | b);
            family_ok && c & !u & (1 << z) != 0 && !has_circuit_through(fam, z, (c | u) & !x)
        }
        ("CE", &[c1, c2], &[e]) => {
            let allowed = (c1 | c2) & !(1 << e);
            fam.contains(c1) && fam.contains(c2) && !fam.members().iter().any(|&c| is_subset(c, allowed))
        }
        ("CM", &[i, x], _) => {
            let ind = c_independent(fam);
            ind(i) && super::maximal_between(i, x, ind).is_none()
        }
        _ => false,
    }
}
