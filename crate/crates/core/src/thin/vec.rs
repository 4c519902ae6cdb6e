use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use super::field::Field;
use crate::error::{Error, Result};

/// A function `A -> F_p`, finitely described.
///
/// `Finite` lists the non-zero values of a finitely supported function.
/// `Periodic` is a function on ℕ given as `pre · period^ω`. Both forms are kept
/// canonical, so structural equality is equality of functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FnVec {
    Finite(BTreeMap<usize, u32>),
    Periodic { pre: Vec<u32>, period: Vec<u32> },
}

impl FnVec {
    pub fn zero() -> Self {
        FnVec::Finite(BTreeMap::new())
    }

    pub fn finite(values: impl IntoIterator<Item = (usize, u32)>) -> Self {
        FnVec::Finite(values.into_iter().filter(|&(_, v)| v != 0).collect())
    }

    /// The indicator function of a set of coordinates.
    pub fn indicator(coords: impl IntoIterator<Item = usize>) -> Self {
        Self::finite(coords.into_iter().map(|a| (a, 1)))
    }

    /// Dense values on `0..values.len()`.
    pub fn dense(values: &[u32]) -> Self {
        Self::finite(values.iter().copied().enumerate())
    }

    /// `start` zeros, then `pre`, then `period` repeated forever.
    pub fn periodic(start: usize, pre: &[u32], period: &[u32]) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::domain("period must be non-empty"));
        }
        let mut p = vec![0; start];
        p.extend_from_slice(pre);
        Ok(Self::canonical(p, period.to_vec()))
    }

    fn canonical(mut pre: Vec<u32>, mut period: Vec<u32>) -> Self {
        if period.iter().all(|&v| v == 0) {
            return Self::finite(pre.into_iter().enumerate());
        }
        let n = period.len();
        if let Some(d) = (1..n).find(|d| n.is_multiple_of(*d) && (0..n).all(|i| period[i] == period[i % d])) {
            period.truncate(d);
        }
        while let Some(&last) = pre.last() {
            if last != *period.last().expect("non-empty") {
                break;
            }
            pre.pop();
            period.rotate_right(1);
        }
        FnVec::Periodic { pre, period }
    }

    pub fn get(&self, a: usize) -> u32 {
        match self {
            FnVec::Finite(m) => m.get(&a).copied().unwrap_or(0),
            FnVec::Periodic { pre, period } => match pre.get(a) {
                Some(&v) => v,
                None => period[(a - pre.len()) % period.len()],
            },
        }
    }

    pub fn has_finite_support(&self) -> bool {
        matches!(self, FnVec::Finite(_))
    }

    /// Coordinates where the function is non-zero, if finitely many.
    pub fn support(&self) -> Option<Vec<usize>> {
        match self {
            FnVec::Finite(m) => Some(m.keys().copied().collect()),
            FnVec::Periodic { .. } => None,
        }
    }

    /// Beyond this coordinate the values repeat with [`FnVec::period_len`].
    pub fn horizon(&self) -> usize {
        match self {
            FnVec::Finite(m) => m.keys().next_back().map_or(0, |a| a + 1),
            FnVec::Periodic { pre, .. } => pre.len(),
        }
    }

    pub fn period_len(&self) -> usize {
        match self {
            FnVec::Finite(_) => 1,
            FnVec::Periodic { period, .. } => period.len(),
        }
    }

    pub fn max_value(&self) -> u32 {
        match self {
            FnVec::Finite(m) => m.values().copied().max().unwrap_or(0),
            FnVec::Periodic { pre, period } => pre.iter().chain(period).copied().max().unwrap_or(0),
        }
    }

    /// Values on `0..len`.
    pub fn truncate(&self, len: usize) -> Vec<u32> {
        (0..len).map(|a| self.get(a)).collect()
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, FnVec::Finite(m) if m.is_empty())
    }

    pub fn scale(&self, field: Field, c: u32) -> FnVec {
        self.zip(self, |x, _| field.mul(c, x))
    }

    pub fn add(&self, field: Field, other: &FnVec) -> FnVec {
        self.zip(other, |x, y| field.add(x, y))
    }

    fn zip(&self, other: &FnVec, f: impl Fn(u32, u32) -> u32) -> FnVec {
        let h = self.horizon().max(other.horizon());
        let p = self.period_len().lcm(&other.period_len());
        let pre = (0..h).map(|a| f(self.get(a), other.get(a))).collect();
        let period = (h..h + p).map(|a| f(self.get(a), other.get(a))).collect();
        Self::canonical(pre, period)
    }
}

impl fmt::Display for FnVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FnVec::Finite(m) => {
                let parts: Vec<String> = m.iter().map(|(a, v)| format!("{a}:{v}")).collect();
                write!(f, "[{}]", parts.join(" "))
            }
            FnVec::Periodic { pre, period } => {
                let show = |s: &[u32]| s.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                write!(f, "[{} ({})^w]", show(pre), show(period))
            }
        }
    }
}

/// The coordinate space `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    /// `A = {0, ..., n-1}`.
    Finite(usize),
    /// `A = ℕ`, with eventually periodic values.
    Naturals,
}

/// A finite, named list of functions over a common field and domain.
///
/// A finite list is always thin. Countable families with a closed-form
/// description are handled by [`IndexedFamily`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinFamily {
    field: Field,
    domain: Domain,
    names: Vec<String>,
    members: Vec<FnVec>,
}

impl ThinFamily {
    pub fn new(field: Field, domain: Domain, members: impl IntoIterator<Item = (String, FnVec)>) -> Result<Self> {
        let (names, members): (Vec<String>, Vec<FnVec>) = members.into_iter().unzip();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains(char::is_whitespace) {
                return Err(Error::domain(format!("bad member name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::domain(format!("duplicate member name {n}")));
            }
        }
        for (n, x) in names.iter().zip(&members) {
            if x.max_value() >= field.p() {
                return Err(Error::domain(format!("{n}: value out of range for F_{}", field.p())));
            }
            if let Domain::Finite(len) = domain {
                if !x.has_finite_support() || x.horizon() > len {
                    return Err(Error::domain(format!("{n}: not a function on {{0..{len}}}")));
                }
            }
        }
        Ok(ThinFamily { field, domain, names, members })
    }

    /// Members named `x0, x1, ...` from dense rows over `A = {0..width}`.
    pub fn from_rows(field: Field, width: usize, rows: &[Vec<u32>]) -> Result<Self> {
        Self::new(
            field,
            Domain::Finite(width),
            rows.iter().enumerate().map(|(i, r)| (format!("x{i}"), FnVec::dense(r))),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn members(&self) -> &[FnVec] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &FnVec {
        &self.members[i]
    }

    pub fn position(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::domain(format!("unknown member {name}")))
    }

    /// Every coordinate is hit by finitely many members of a finite list.
    pub fn is_thin(&self) -> bool {
        true
    }

    /// Coordinates that determine every linear relation among the given
    /// functions: on `A = ℕ`, a combination of eventually periodic functions
    /// vanishes once it vanishes on its preperiod and one full period, so the
    /// largest horizon plus twice the lcm of the periods is enough.
    pub fn truncation_bound<'a>(&'a self, extra: impl IntoIterator<Item = &'a FnVec>) -> usize {
        match self.domain {
            Domain::Finite(n) => n,
            Domain::Naturals => {
                let all: Vec<&FnVec> = self.members.iter().chain(extra).collect();
                let h = all.iter().map(|x| x.horizon()).max().unwrap_or(0);
                let p = all.iter().map(|x| x.period_len()).fold(1, |a, b| a.lcm(&b));
                h + 2 * p
            }
        }
    }

    pub(crate) fn rows(&self, subset: &[usize], width: usize) -> Vec<Vec<u32>> {
        subset.iter().map(|&i| self.members[i].truncate(width)).collect()
    }
}

/// Countable families on `ℕ = {1, 2, ...}` with closed-form spans, used for
/// the counterexample to augmentation when the ground family is not thin.
/// Coordinate 0 is unused.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexedFamily {
    /// `{1..n}` for `n >= 1`.
    Intervals,
    /// `{n}` for `n >= 1`.
    Singletons,
    /// `{1, n}` for `n >= 2`, each a two-element set.
    Pairs,
}

impl IndexedFamily {
    pub fn first_index(self) -> usize {
        match self {
            IndexedFamily::Pairs => 2,
            _ => 1,
        }
    }

    pub fn member(self, n: usize) -> FnVec {
        assert!(n >= self.first_index());
        match self {
            IndexedFamily::Intervals => FnVec::indicator(1..=n),
            IndexedFamily::Singletons => FnVec::indicator([n]),
            IndexedFamily::Pairs => FnVec::indicator([1, n]),
        }
    }

    pub fn member_name(self, n: usize) -> String {
        match self {
            IndexedFamily::Intervals if n == 1 => "{1}".into(),
            IndexedFamily::Intervals => format!("{{1..{n}}}"),
            IndexedFamily::Singletons => format!("{{{n}}}"),
            IndexedFamily::Pairs => format!("{{1,{n}}}"),
        }
    }

    /// Intervals and pairs all contain coordinate 1.
    pub fn is_thin(self) -> bool {
        self == IndexedFamily::Singletons
    }

    /// The members with index at most `n`, over `A = {0..=n}`.
    pub fn truncate(self, field: Field, n: usize) -> ThinFamily {
        ThinFamily::new(
            field,
            Domain::Finite(n + 1),
            (self.first_index()..=n).map(|k| (self.member_name(k), self.member(k))),
        )
        .expect("members fit the domain")
    }

    /// All three families are thinly independent: a thin subfamily of
    /// intervals or pairs is finite, and finitely many of them are linearly
    /// independent. With `require_thin` the family itself must also be thin.
    pub fn thinly_independent(self, require_thin: bool) -> bool {
        !require_thin || self.is_thin()
    }

    /// Membership in the thin span. A thin subfamily of intervals or pairs is
    /// finite, so their spans consist of finitely supported functions;
    /// `sum a_n {1..n}` realises every such function, while `sum a_n {1,n}`
    /// realises exactly those with `y(1) = sum_{n>=2} y(n)`.
    pub fn span_contains(self, field: Field, y: &FnVec) -> bool {
        if y.get(0) != 0 {
            return false;
        }
        match self {
            IndexedFamily::Singletons => true,
            IndexedFamily::Intervals => y.has_finite_support(),
            IndexedFamily::Pairs => match y {
                FnVec::Finite(m) => {
                    let rest = m.iter().filter(|(&a, _)| a >= 2).fold(0, |s, (_, &v)| field.add(s, v));
                    y.get(1) == rest
                }
                FnVec::Periodic { .. } => false,
            },
        }
    }
}

impl fmt::Display for IndexedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexedFamily::Intervals => "intervals",
            IndexedFamily::Singletons => "singletons",
            IndexedFamily::Pairs => "pairs",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periodic_is_canonical() {
        let a = FnVec::periodic(0, &[1, 0, 1], &[0, 1]).unwrap();
        let b = FnVec::periodic(0, &[1], &[0, 1, 0, 1]).unwrap();
        assert_eq!(a, b);
        let z = FnVec::periodic(3, &[2], &[0, 0]).unwrap();
        assert_eq!(z, FnVec::finite([(3, 2)]));
    }

    #[test]
    fn addition_over_f2() {
        let f = Field::F2;
        let x = FnVec::indicator(1..=3);
        let y = FnVec::indicator(1..=2);
        assert_eq!(x.add(f, &y), FnVec::indicator([3]));
        let ones = FnVec::periodic(1, &[], &[1]).unwrap();
        assert_eq!(ones.add(f, &ones), FnVec::zero());
    }

    #[test]
    fn finite_domain_rejects_long_support() {
        let r = ThinFamily::new(Field::F2, Domain::Finite(2), [("x".to_string(), FnVec::indicator([2]))]);
        assert!(r.is_err());
    }

    #[test]
    fn indexed_thinness() {
        assert!(IndexedFamily::Singletons.is_thin());
        assert!(!IndexedFamily::Intervals.is_thin());
        assert!(!IndexedFamily::Pairs.is_thin());
    }

    #[test]
    fn pair_span_matches_truncation() {
        let f = Field::F2;
        let fam = IndexedFamily::Pairs.truncate(f, 5);
        let all: Vec<usize> = (0..fam.len()).collect();
        let rows = fam.rows(&all, 6);
        for bits in 0u32..64 {
            let y: Vec<u32> = (0..6).map(|a| (bits >> a) & 1).collect();
            let closed = IndexedFamily::Pairs.span_contains(f, &FnVec::dense(&y));
            assert_eq!(closed, f.solve(&rows, &y).is_some(), "{y:?}");
        }
    }
}
