use std::fmt;

use num_integer::Integer;

/// An ultimately periodic bit sequence `pre · period^ω` indexed from 0.
///
/// Values are kept canonical: the period is primitive and the preperiod is as
/// short as possible, so equal sequences compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpWord {
    pre: Vec<bool>,
    period: Vec<bool>,
}

impl UpWord {
    /// `period` must be non-empty.
    pub fn new(pre: Vec<bool>, period: Vec<bool>) -> Self {
        assert!(!period.is_empty(), "period must be non-empty");
        let mut w = UpWord { pre, period };
        w.canonicalize();
        w
    }

    /// `start` zeros, then `pre`, then `period` repeated.
    pub fn with_start(start: usize, pre: &[bool], period: &[bool]) -> Self {
        let mut p = vec![false; start];
        p.extend_from_slice(pre);
        Self::new(p, period.to_vec())
    }

    pub fn empty() -> Self {
        Self::new(vec![], vec![false])
    }

    pub fn full() -> Self {
        Self::new(vec![], vec![true])
    }

    /// All indices `i >= start`.
    pub fn from_start(start: usize) -> Self {
        Self::with_start(start, &[], &[true])
    }

    /// Exactly the listed indices.
    pub fn finite(indices: impl IntoIterator<Item = usize>) -> Self {
        let idx: Vec<usize> = indices.into_iter().collect();
        let len = idx.iter().max().map_or(0, |m| m + 1);
        let mut pre = vec![false; len];
        for i in idx {
            pre[i] = true;
        }
        Self::new(pre, vec![false])
    }

    /// Indices `i >= start` with `i mod period` in `residues`.
    pub fn residues(start: usize, period: usize, residues: &[usize]) -> Self {
        assert!(period > 0);
        let len = start.next_multiple_of(period);
        let bit = |i: usize| i >= start && residues.contains(&(i % period));
        Self::new((0..len).map(bit).collect(), (len..len + period).map(bit).collect())
    }

    pub fn pre(&self) -> &[bool] {
        &self.pre
    }

    pub fn period(&self) -> &[bool] {
        &self.period
    }

    pub fn get(&self, i: usize) -> bool {
        match self.pre.get(i) {
            Some(&b) => b,
            None => self.period[(i - self.pre.len()) % self.period.len()],
        }
    }

    fn canonicalize(&mut self) {
        let p = self.period.len();
        if let Some(d) = (1..=p).find(|&d| p.is_multiple_of(d) && (d..p).all(|i| self.period[i] == self.period[i - d])) {
            self.period.truncate(d);
        }
        while let (Some(&a), Some(&b)) = (self.pre.last(), self.period.last()) {
            if a != b {
                break;
            }
            self.pre.pop();
            self.period.rotate_right(1);
        }
    }

    /// Pointwise combination, aligned to the longer preperiod and the lcm of
    /// the periods.
    pub fn zip(&self, other: &UpWord, f: impl Fn(bool, bool) -> bool) -> UpWord {
        let l = self.pre.len().max(other.pre.len());
        let p = self.period.len().lcm(&other.period.len());
        let bit = |i| f(self.get(i), other.get(i));
        UpWord::new((0..l).map(bit).collect(), (l..l + p).map(bit).collect())
    }

    pub fn map(&self, f: impl Fn(bool) -> bool) -> UpWord {
        UpWord::new(self.pre.iter().map(|&b| f(b)).collect(), self.period.iter().map(|&b| f(b)).collect())
    }

    pub fn union(&self, o: &UpWord) -> UpWord {
        self.zip(o, |a, b| a | b)
    }

    pub fn intersect(&self, o: &UpWord) -> UpWord {
        self.zip(o, |a, b| a & b)
    }

    pub fn difference(&self, o: &UpWord) -> UpWord {
        self.zip(o, |a, b| a & !b)
    }

    pub fn complement(&self) -> UpWord {
        self.map(|b| !b)
    }

    pub fn is_empty(&self) -> bool {
        self.pre.is_empty() && self.period == [false]
    }

    pub fn is_finite(&self) -> bool {
        self.period == [false]
    }

    /// Number of members, or `None` when infinite.
    pub fn count(&self) -> Option<usize> {
        self.is_finite().then(|| self.pre.iter().filter(|&&b| b).count())
    }

    /// Members below `bound`.
    pub fn ones_below(&self, bound: usize) -> impl Iterator<Item = usize> + '_ {
        (0..bound).filter(|&i| self.get(i))
    }

    /// Shift indices by `k` (negative shifts drop the first `-k` bits).
    pub fn shift(&self, k: i64) -> UpWord {
        if k >= 0 {
            let mut pre = vec![false; k as usize];
            pre.extend_from_slice(&self.pre);
            UpWord::new(pre, self.period.clone())
        } else {
            let d = (-k) as usize;
            let pre: Vec<bool> = (d..self.pre.len().max(d)).map(|i| self.get(i)).collect();
            let start = self.pre.len().max(d);
            UpWord::new(pre, (start..start + self.period.len()).map(|i| self.get(i)).collect())
        }
    }
}

impl fmt::Display for UpWord {
    /// `<pre|-> <period>` with bits as `0`/`1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits = |v: &[bool]| v.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
        let pre = if self.pre.is_empty() { "-".to_string() } else { bits(&self.pre) };
        write!(f, "{pre} {}", bits(&self.period))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn canonical_forms() {
        let w = UpWord::new(bits("0101"), bits("0101"));
        assert_eq!(w.pre(), &[] as &[bool]);
        assert_eq!(w.period(), &bits("01")[..]);
        let w = UpWord::new(bits("11"), bits("1"));
        assert_eq!(w, UpWord::full());
        let w = UpWord::new(bits("1"), bits("01"));
        assert_eq!(w.pre(), &[] as &[bool]);
        assert_eq!(w.period(), &bits("10")[..]);
    }

    #[test]
    fn residue_words() {
        let w = UpWord::residues(3, 2, &[0]);
        let got: Vec<usize> = w.ones_below(10).collect();
        assert_eq!(got, vec![4, 6, 8]);
        assert!(!w.is_finite());
        assert_eq!(UpWord::finite([1, 4]).count(), Some(2));
    }

    #[test]
    fn shifts() {
        let w = UpWord::from_start(2);
        assert_eq!(w.shift(-1), UpWord::from_start(1));
        assert_eq!(w.shift(-5), UpWord::full());
        assert_eq!(w.shift(3), UpWord::from_start(5));
        assert_eq!(UpWord::finite([0, 2]).shift(-1), UpWord::finite([1]));
    }

    #[test]
    fn boolean_ops_align_periods() {
        let a = UpWord::residues(0, 2, &[0]);
        let b = UpWord::residues(0, 3, &[0]);
        let i = a.intersect(&b);
        assert_eq!(i, UpWord::residues(0, 6, &[0]));
        assert_eq!(a.union(&a.complement()), UpWord::full());
        assert!(a.difference(&a).is_empty());
    }
}
