//! Finite matroids stored as explicit independence tables.
//!
//! The independence family is the canonical representation; bases, circuits,
//! closure and rank are derived views. Output families are ordered
//! lexicographically along the ground set order.

use std::collections::BTreeMap;

use crate::axioms;
use crate::error::{Error, Result};
use crate::set::{card, elements, is_subset, submasks, GroundSet, Mask, SetFamily, MAX_GROUND};

#[derive(Debug, Clone)]
pub struct FiniteMatroid {
    ground: GroundSet,
    indep: Vec<bool>,
    rank: Vec<u8>,
    validated: bool,
}

impl PartialEq for FiniteMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.indep == other.indep
    }
}

impl Eq for FiniteMatroid {}

/// A value of the relative rank function. The infinite marker exists in the
/// data model but is never produced on finite ground sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RankValue {
    Finite(usize),
    Infinite,
}

impl RankValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            RankValue::Finite(n) => Some(n),
            RankValue::Infinite => None,
        }
    }
}

/// Relative rank `r(A|B)` on nested pairs `B ⊆ A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelRankTable {
    pub ground: GroundSet,
    pub entries: BTreeMap<(Mask, Mask), RankValue>,
}

impl RelRankTable {
    pub fn get(&self, a: Mask, b: Mask) -> Option<RankValue> {
        self.entries.get(&(a, b)).copied()
    }

    /// Build `r(A|B) = R(A) - R(B)` from an absolute rank function.
    pub fn from_absolute(ground: GroundSet, rank: impl Fn(Mask) -> usize) -> Self {
        let full = ground.full();
        let mut entries = BTreeMap::new();
        for a in submasks(full) {
            for b in submasks(a) {
                entries.insert((a, b), RankValue::Finite(rank(a) - rank(b)));
            }
        }
        RelRankTable { ground, entries }
    }

    /// Every nested pair is present.
    pub fn is_total(&self) -> bool {
        let n = self.ground.len();
        // number of nested pairs is 3^n
        self.entries.len() == 3usize.pow(n as u32)
            && submasks(self.ground.full()).all(|a| submasks(a).all(|b| self.entries.contains_key(&(a, b))))
    }
}

fn rank_table(n: usize, indep: &[bool]) -> Vec<u8> {
    let mut rank = vec![0u8; 1 << n];
    for s in 1..(1usize << n) {
        rank[s] = if indep[s] {
            card(s as Mask) as u8
        } else {
            elements(s as Mask).map(|x| rank[s & !(1 << x)]).max().unwrap_or(0)
        };
    }
    rank
}

impl FiniteMatroid {
    fn build(ground: GroundSet, indep: Vec<bool>, validated: bool) -> Self {
        let rank = rank_table(ground.len(), &indep);
        FiniteMatroid { ground, indep, rank, validated }
    }

    /// Construct from an independence family, verifying (I1)–(I3) and (IM).
    pub fn from_independents(family: &SetFamily) -> Result<Self> {
        let report = axioms::verify_independence(family);
        if !report.passed() {
            return Err(Error::AxiomsFailed(Box::new(report)));
        }
        Ok(Self::build(family.ground().clone(), family.table(), true))
    }

    /// Construct without checking the axioms. The result is flagged unvalidated.
    pub fn from_independents_unchecked(family: &SetFamily) -> Result<Self> {
        if family.ground().len() > MAX_GROUND {
            return Err(Error::domain("ground set too large for explicit tables"));
        }
        Ok(Self::build(family.ground().clone(), family.table(), false))
    }

    /// Construct from an independence oracle, then validate.
    pub fn from_oracle(ground: GroundSet, oracle: impl Fn(Mask) -> bool) -> Result<Self> {
        if ground.len() > MAX_GROUND {
            return Err(Error::domain("ground set too large for explicit tables"));
        }
        let members = (0..(1u64 << ground.len())).filter(|&s| oracle(s));
        let family = SetFamily::new(ground, members)?;
        Self::from_independents(&family)
    }

    /// Construct from a circuit family: independent sets contain no circuit.
    pub fn from_circuits(circuits: &SetFamily) -> Result<Self> {
        let cs = circuits.members().to_vec();
        Self::from_oracle(circuits.ground().clone(), |s| !cs.iter().any(|&c| is_subset(c, s)))
    }

    pub fn free(ground: GroundSet) -> Self {
        let n = ground.len();
        Self::build(ground, vec![true; 1 << n], true)
    }

    /// `U_{k,n}`: every set of at most `k` elements is independent.
    pub fn uniform(k: usize, ground: GroundSet) -> Self {
        let indep = (0..(1u64 << ground.len())).map(|s| card(s) <= k).collect();
        Self::build(ground, indep, true)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn independents(&self) -> SetFamily {
        let members = (0..self.indep.len() as Mask).filter(|&s| self.indep[s as usize]);
        SetFamily::new(self.ground.clone(), members).expect("table indices lie in ground")
    }

    pub fn is_independent(&self, s: Mask) -> Result<bool> {
        self.ground.check(s)?;
        Ok(self.indep[s as usize])
    }

    pub fn is_independent_labels(&self, labels: &[&str]) -> Result<bool> {
        let s = self.ground.mask_of(labels.iter().copied())?;
        self.is_independent(s)
    }

    /// Size of a largest independent subset of `a`.
    pub fn rank_of(&self, a: Mask) -> usize {
        self.rank[a as usize] as usize
    }

    pub fn rank(&self) -> usize {
        self.rank_of(self.ground.full())
    }

    /// `cl(X) = X ∪ {x | ∃ I ⊆ X independent with I+x dependent}`.
    pub fn closure(&self, x: Mask) -> Result<Mask> {
        self.ground.check(x)?;
        let mut cl = x;
        for e in elements(self.ground.full() & !x) {
            let bit = 1 << e;
            if submasks(x).any(|i| self.indep[i as usize] && !self.indep[(i | bit) as usize]) {
                cl |= bit;
            }
        }
        Ok(cl)
    }

    /// Maximal independent subsets of `b`, in canonical order.
    pub fn maximal_independent_in(&self, b: Mask) -> Vec<Mask> {
        let mut out: Vec<Mask> = submasks(b)
            .filter(|&j| {
                self.indep[j as usize]
                    && elements(b & !j).all(|x| !self.indep[(j | (1 << x)) as usize])
            })
            .collect();
        out.sort_by(|p, q| crate::set::lex_cmp(*p, *q));
        out
    }

    fn rel_rank_for(&self, a: Mask, j: Mask) -> usize {
        submasks(a)
            .filter(|&i| is_subset(j, i) && self.indep[i as usize])
            .map(|i| card(i & !j))
            .max()
            .unwrap_or(0)
    }

    /// Relative rank per choice of maximal `J ⊆ B`, in canonical order of `J`.
    pub fn relative_rank_choices(&self, a: Mask, b: Mask) -> Result<Vec<usize>> {
        self.ground.check(a)?;
        if !is_subset(b, a) {
            return Err(Error::domain("relative rank needs B ⊆ A"));
        }
        Ok(self
            .maximal_independent_in(b)
            .into_iter()
            .map(|j| self.rel_rank_for(a, j))
            .collect())
    }

    /// `r(A|B) = max{|I∖J| : I ⊇ J, I ∈ ℐ∩2^A, J maximal in ℐ∩2^B}`, evaluated
    /// with the first maximal `J` in canonical order.
    pub fn relative_rank(&self, a: Mask, b: Mask) -> Result<usize> {
        Ok(self.relative_rank_choices(a, b)?[0])
    }

    pub fn relative_rank_table(&self) -> RelRankTable {
        RelRankTable::from_absolute(self.ground.clone(), |a| self.rank_of(a))
    }

    pub fn bases(&self) -> SetFamily {
        let r = self.rank();
        let members = (0..self.indep.len() as Mask)
            .filter(|&s| self.indep[s as usize] && card(s) == r);
        SetFamily::new(self.ground.clone(), members).expect("in ground")
    }

    pub fn circuits(&self) -> SetFamily {
        let members = (1..self.indep.len() as Mask).filter(|&s| {
            !self.indep[s as usize] && elements(s).all(|x| self.indep[(s & !(1 << x)) as usize])
        });
        SetFamily::new(self.ground.clone(), members).expect("in ground")
    }

    pub fn cocircuits(&self) -> SetFamily {
        self.dual().circuits()
    }

    /// The matroid whose bases are the complements of the bases of `self`.
    pub fn dual(&self) -> FiniteMatroid {
        let full = self.ground.full();
        let r = self.rank();
        let indep = (0..self.indep.len() as Mask)
            .map(|s| self.rank_of(full & !s) == r)
            .collect();
        Self::build(self.ground.clone(), indep, self.validated)
    }

    /// Delete `delete`, contract `contract`. `S` is independent in the minor
    /// iff `S ∪ J` is independent for a maximal independent `J ⊆ contract`.
    pub fn minor(&self, delete: Mask, contract: Mask) -> Result<FiniteMatroid> {
        self.ground.check(delete | contract)?;
        if delete & contract != 0 {
            return Err(Error::domain("delete and contract sets overlap"));
        }
        let keep: Vec<usize> = elements(self.ground.full() & !(delete | contract)).collect();
        let ground = GroundSet::new(keep.iter().map(|&i| self.ground.label(i).to_string()))?;
        let j = self.maximal_independent_in(contract)[0];
        let indep = (0..(1u64 << keep.len()))
            .map(|s| {
                let lifted = elements(s).fold(0, |m, k| m | (1 << keep[k]));
                self.indep[(lifted | j) as usize]
            })
            .collect();
        Ok(Self::build(ground, indep, self.validated))
    }

    /// The unique circuit inside `B+e` containing `e`.
    pub fn fundamental_circuit(&self, base: Mask, e: usize) -> Result<Mask> {
        self.ground.check(base | (1 << e))?;
        if !self.bases().contains(base) {
            return Err(Error::domain(format!("{} is not a base", self.ground.show(base))));
        }
        if base & (1 << e) != 0 {
            return Err(Error::domain("element already lies in the base"));
        }
        let bit = 1 << e;
        let found: Vec<Mask> = submasks(base)
            .map(|s| s | bit)
            .filter(|&c| {
                !self.indep[c as usize] && elements(c).all(|x| self.indep[(c & !(1 << x)) as usize])
            })
            .collect();
        match found.as_slice() {
            [c] => Ok(*c),
            _ => Err(Error::domain("no unique fundamental circuit; matroid not validated?")),
        }
    }

    /// Relabel onto another ground set of the same size (positionally).
    pub fn with_ground(&self, ground: GroundSet) -> Result<FiniteMatroid> {
        if ground.len() != self.ground.len() {
            return Err(Error::domain("ground sizes differ"));
        }
        Ok(Self::build(ground, self.indep.clone(), self.validated))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> GroundSet {
        GroundSet::new(["a", "b", "c"]).unwrap()
    }

    /// Cycle matroid of the triangle: every proper subset is independent.
    fn triangle() -> FiniteMatroid {
        let g = GroundSet::new(["e1", "e2", "e3"]).unwrap();
        FiniteMatroid::uniform(2, g)
    }

    #[test]
    fn independence_basics() {
        let u12 = FiniteMatroid::uniform(1, GroundSet::new(["a", "b"]).unwrap());
        assert!(u12.is_independent(0).unwrap());
        assert!(!u12.is_independent_labels(&["a", "b"]).unwrap());
        assert!(!triangle().is_independent(0b111).unwrap());
        assert!(u12.is_independent_labels(&["z"]).is_err());
    }

    #[test]
    fn closure_examples() {
        let free = FiniteMatroid::free(abc());
        assert_eq!(free.closure(0).unwrap(), 0);
        let u13 = FiniteMatroid::uniform(1, abc());
        assert_eq!(u13.closure(0b001).unwrap(), 0b111);
        assert_eq!(triangle().closure(0b011).unwrap(), 0b111);
    }

    #[test]
    fn relative_rank_examples() {
        let u23 = FiniteMatroid::uniform(2, abc());
        assert_eq!(u23.relative_rank(0b111, 0).unwrap(), 2);
        assert_eq!(u23.relative_rank(0b101, 0b101).unwrap(), 0);
        assert_eq!(triangle().relative_rank(0b111, 0b001).unwrap(), 1);
        assert!(u23.relative_rank(0b001, 0b010).is_err());
    }

    #[test]
    fn dual_examples() {
        let free = FiniteMatroid::free(abc());
        assert_eq!(free.dual().independents().members(), &[0]);
        let u12 = FiniteMatroid::uniform(1, GroundSet::new(["a", "b"]).unwrap());
        assert_eq!(u12.dual(), u12);
        // cocircuits of U_{k,n} are the (n-k+1)-subsets
        for k in 0..=4 {
            let u = FiniteMatroid::uniform(k, GroundSet::indexed("x", 4));
            let co = u.cocircuits();
            assert!(co.members().iter().all(|&c| card(c) == 4 - k + 1), "k={k}");
            let expected = (0..16u64).filter(|&s| card(s) == 4 - k + 1).count();
            assert_eq!(co.len(), expected);
        }
    }

    #[test]
    fn minor_examples() {
        let t = triangle();
        assert_eq!(t.minor(0, 0).unwrap(), t);
        let del = t.minor(0b100, 0).unwrap();
        assert_eq!(del, FiniteMatroid::free(GroundSet::new(["e1", "e2"]).unwrap()));
        let con = t.minor(0, 0b100).unwrap();
        assert_eq!(con, FiniteMatroid::uniform(1, GroundSet::new(["e1", "e2"]).unwrap()));
        assert!(t.minor(0b1, 0b1).is_err());
    }

    #[test]
    fn derived_families() {
        assert!(FiniteMatroid::free(abc()).circuits().is_empty());
        let u12 = FiniteMatroid::uniform(1, GroundSet::new(["a", "b"]).unwrap());
        assert_eq!(u12.bases().members(), &[0b01, 0b10]);
        assert_eq!(triangle().cocircuits().members(), &[0b011, 0b101, 0b110]);
    }

    #[test]
    fn fundamental_circuits() {
        assert_eq!(triangle().fundamental_circuit(0b011, 2).unwrap(), 0b111);
        let u23 = FiniteMatroid::uniform(2, abc());
        assert_eq!(u23.fundamental_circuit(0b011, 2).unwrap(), 0b111);
        // l is a loop: independents are the subsets of {a}
        let g = GroundSet::new(["a", "l"]).unwrap();
        let m = FiniteMatroid::from_independents(&SetFamily::new(g, [0, 1]).unwrap()).unwrap();
        assert_eq!(m.fundamental_circuit(0b01, 1).unwrap(), 0b10);
        assert!(m.fundamental_circuit(0b01, 0).is_err());
        assert!(m.fundamental_circuit(0b00, 1).is_err());
    }

    #[test]
    fn empty_ground_is_a_matroid() {
        let g = GroundSet::new(Vec::<String>::new()).unwrap();
        let m = FiniteMatroid::from_independents(&SetFamily::new(g, [0]).unwrap()).unwrap();
        assert_eq!(m.bases().members(), &[0]);
        assert!(m.circuits().is_empty());
    }
}
