use std::collections::{BTreeMap, BTreeSet};

use super::graph::{EdgeId, FamilyId};
use super::word::UpWord;

/// A possibly infinite edge set: explicit finite edges plus one ultimately
/// periodic membership word per edge family.
///
/// Empty words are dropped, so two expressions denote the same set iff they
/// are equal.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct EdgeSetExpr {
    finite: BTreeSet<String>,
    words: BTreeMap<FamilyId, UpWord>,
}

impl EdgeSetExpr {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_parts(
        finite: impl IntoIterator<Item = String>,
        words: impl IntoIterator<Item = (FamilyId, UpWord)>,
    ) -> Self {
        let mut e = EdgeSetExpr { finite: finite.into_iter().collect(), words: BTreeMap::new() };
        for (f, w) in words {
            e.set_word(f, e.word(f).union(&w));
        }
        e
    }

    pub fn from_edges<'a>(edges: impl IntoIterator<Item = &'a EdgeId>) -> Self {
        let mut e = Self::empty();
        for id in edges {
            e.insert(id);
        }
        e
    }

    pub fn family(f: FamilyId, w: UpWord) -> Self {
        Self::from_parts([], [(f, w)])
    }

    pub fn finite_part(&self) -> &BTreeSet<String> {
        &self.finite
    }

    pub fn words(&self) -> &BTreeMap<FamilyId, UpWord> {
        &self.words
    }

    pub fn word(&self, f: FamilyId) -> UpWord {
        self.words.get(&f).cloned().unwrap_or_else(UpWord::empty)
    }

    pub fn set_word(&mut self, f: FamilyId, w: UpWord) {
        if w.is_empty() {
            self.words.remove(&f);
        } else {
            self.words.insert(f, w);
        }
    }

    pub fn insert(&mut self, e: &EdgeId) {
        match e {
            EdgeId::Finite(l) => {
                self.finite.insert(l.clone());
            }
            EdgeId::Family(f, i) => {
                let w = self.word(*f).union(&UpWord::finite([*i]));
                self.set_word(*f, w);
            }
        }
    }

    pub fn remove(&mut self, e: &EdgeId) {
        match e {
            EdgeId::Finite(l) => {
                self.finite.remove(l);
            }
            EdgeId::Family(f, i) => {
                let w = self.word(*f).difference(&UpWord::finite([*i]));
                self.set_word(*f, w);
            }
        }
    }

    pub fn with(&self, e: &EdgeId) -> Self {
        let mut c = self.clone();
        c.insert(e);
        c
    }

    pub fn without(&self, e: &EdgeId) -> Self {
        let mut c = self.clone();
        c.remove(e);
        c
    }

    pub fn contains(&self, e: &EdgeId) -> bool {
        match e {
            EdgeId::Finite(l) => self.finite.contains(l),
            EdgeId::Family(f, i) => self.words.get(f).is_some_and(|w| w.get(*i)),
        }
    }

    fn combine(&self, o: &Self, fin: impl Fn(bool, bool) -> bool + Copy) -> Self {
        let labels: BTreeSet<&String> = self.finite.iter().chain(&o.finite).collect();
        let finite = labels
            .into_iter()
            .filter(|l| fin(self.finite.contains(*l), o.finite.contains(*l)))
            .cloned()
            .collect();
        let fams: BTreeSet<FamilyId> = self.words.keys().chain(o.words.keys()).copied().collect();
        let mut out = EdgeSetExpr { finite, words: BTreeMap::new() };
        for f in fams {
            out.set_word(f, self.word(f).zip(&o.word(f), fin));
        }
        out
    }

    pub fn union(&self, o: &Self) -> Self {
        self.combine(o, |a, b| a | b)
    }

    pub fn intersect(&self, o: &Self) -> Self {
        self.combine(o, |a, b| a & b)
    }

    pub fn difference(&self, o: &Self) -> Self {
        self.combine(o, |a, b| a & !b)
    }

    pub fn is_subset(&self, o: &Self) -> bool {
        self.difference(o).is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.finite.is_empty() && self.words.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.words.values().all(UpWord::is_finite)
    }

    /// Number of edges, or `None` when infinite.
    pub fn count(&self) -> Option<usize> {
        let mut n = self.finite.len();
        for w in self.words.values() {
            n += w.count()?;
        }
        Some(n)
    }

    /// Finite edges plus family edges with index below `bound`, in canonical
    /// order (finite labels first, then families in order).
    pub fn edges_below(&self, bound: usize) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self.finite.iter().cloned().map(EdgeId::Finite).collect();
        for (f, w) in &self.words {
            out.extend(w.ones_below(bound).map(|i| EdgeId::Family(*f, i)));
        }
        out
    }

    /// All edges, when the set is finite.
    pub fn finite_edges(&self) -> Option<Vec<EdgeId>> {
        self.is_finite().then(|| {
            let bound = self.words.values().map(|w| w.pre().len()).max().unwrap_or(0);
            self.edges_below(bound)
        })
    }

    pub fn max_preperiod(&self) -> usize {
        self.words.values().map(|w| w.pre().len()).max().unwrap_or(0)
    }

    pub fn periods(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.values().map(|w| w.period().len())
    }
}
