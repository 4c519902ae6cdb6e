use std::collections::BTreeMap;

use super::{check_m, AxiomReport, SystemKind, Witness};
use crate::error::{Error, Result};
use crate::matroid::{RankValue, RelRankTable};
use crate::set::{card, elements, is_subset, submasks, Mask};

/// A relative rank function on all nested pairs of a ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankInput {
    pub table: RelRankTable,
}

impl RankInput {
    pub fn new(table: RelRankTable) -> Self {
        RankInput { table }
    }

    fn r(&self, a: Mask, b: Mask) -> RankValue {
        self.table.entries[&(a, b)]
    }

    /// Sets `I` with `r(I | I - x) > 0` for every `x ∈ I`.
    pub fn is_independent(&self, i: Mask) -> bool {
        elements(i).all(|x| self.r(i, i & !(1 << x)) > RankValue::Finite(0))
    }
}

fn r1(inp: &RankInput) -> std::result::Result<(), Witness> {
    for (&(a, b), &v) in &inp.table.entries {
        if v > RankValue::Finite(card(a & !b)) {
            return Err(Witness::sets([a, b]));
        }
    }
    Ok(())
}

fn r2(inp: &RankInput) -> std::result::Result<(), Witness> {
    let full = inp.table.ground.full();
    for a in submasks(full) {
        for b in submasks(full) {
            if inp.r(a, a & b) < inp.r(a | b, b) {
                return Err(Witness::sets([a, b]));
            }
        }
    }
    Ok(())
}

fn add(x: RankValue, y: RankValue) -> RankValue {
    match (x, y) {
        (RankValue::Finite(p), RankValue::Finite(q)) => RankValue::Finite(p + q),
        _ => RankValue::Infinite,
    }
}

fn r3(inp: &RankInput) -> std::result::Result<(), Witness> {
    for a in submasks(inp.table.ground.full()) {
        for b in submasks(a) {
            for c in submasks(b) {
                if inp.r(a, c) != add(inp.r(a, b), inp.r(b, c)) {
                    return Err(Witness::sets([a, b, c]));
                }
            }
        }
    }
    Ok(())
}

/// Unions of all non-empty sub-families of `sets`, each with one family
/// realising it. Distinct unions are at most `2^n`, so this is exhaustive
/// over sub-families without enumerating them one by one.
fn unions_of_subfamilies(sets: &[Mask]) -> BTreeMap<Mask, Vec<Mask>> {
    let mut acc: BTreeMap<Mask, Vec<Mask>> = BTreeMap::new();
    for &s in sets {
        let mut add: Vec<(Mask, Vec<Mask>)> = vec![(s, vec![s])];
        for (u, fam) in &acc {
            let mut f = fam.clone();
            f.push(s);
            add.push((u | s, f));
        }
        for (u, f) in add {
            acc.entry(u).or_insert(f);
        }
    }
    acc
}

fn r4(inp: &RankInput) -> std::result::Result<(), Witness> {
    let full = inp.table.ground.full();
    for b in submasks(full) {
        let zero: Vec<Mask> = submasks(full)
            .filter(|&a| is_subset(b, a) && inp.r(a, b) == RankValue::Finite(0))
            .collect();
        for (u, fam) in unions_of_subfamilies(&zero) {
            if inp.r(u, b) != RankValue::Finite(0) {
                let mut sets = vec![b, u];
                sets.extend(fam);
                return Err(Witness::sets(sets));
            }
        }
    }
    Ok(())
}

/// Check (R1)–(R4) and (RM). A partial table is a domain error.
pub fn verify_rank(input: &RankInput) -> Result<AxiomReport> {
    if !input.table.is_total() {
        return Err(Error::domain("rank table is not total on nested pairs"));
    }
    let mut report = AxiomReport::new(SystemKind::Rank, input.table.ground.clone());
    report.record("R1", r1(input));
    report.record("R2", r2(input));
    report.record("R3", r3(input));
    report.record("R4", r4(input));
    report.record("RM", check_m(input.table.ground.len(), |i| input.is_independent(i)));
    Ok(report)
}

pub(super) fn replay(inp: &RankInput, name: &str, w: &Witness) -> bool {
    if !inp.table.is_total() {
        return false;
    }
    match (name, w.sets.as_slice()) {
        ("R1", &[a, b]) => inp.r(a, b) > RankValue::Finite(card(a & !b)),
        ("R2", &[a, b]) => inp.r(a, a & b) < inp.r(a | b, b),
        ("R3", &[a, b, c]) => inp.r(a, c) != add(inp.r(a, b), inp.r(b, c)),
        ("R4", [b, u, fam @ ..]) => {
            fam.iter().all(|&a| is_subset(*b, a) && inp.r(a, *b) == RankValue::Finite(0))
                && fam.iter().fold(0, |x, y| x | y) == *u
                && inp.r(*u, *b) != RankValue::Finite(0)
        }
        ("RM", &[i, x]) => {
            inp.is_independent(i) && super::maximal_between(i, x, |m| inp.is_independent(m)).is_none()
        }
        _ => false,
    }
}
