//! Ground sets, bitmask subsets and canonically ordered set families.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A subset of a ground set, bit `i` standing for the `i`-th element.
pub type Mask = u64;

/// Largest ground set handled by the explicit (table based) finite kernel.
pub const MAX_GROUND: usize = 20;

pub fn full_mask(n: usize) -> Mask {
    if n >= 64 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

pub fn card(a: Mask) -> usize {
    a.count_ones() as usize
}

/// Element indices of `a` in increasing order.
pub fn elements(a: Mask) -> impl Iterator<Item = usize> {
    let mut rest = a;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// All submasks of `a`, including `0` and `a` itself.
pub fn submasks(a: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(a);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & a) };
        Some(cur)
    })
}

/// Lexicographic order on the sorted index sequences of two subsets.
/// The empty set comes first.
pub fn lex_cmp(a: Mask, b: Mask) -> Ordering {
    let mut ea = elements(a);
    let mut eb = elements(b);
    loop {
        match (ea.next(), eb.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) if x != y => return x.cmp(&y),
            _ => {}
        }
    }
}

/// An ordered finite list of distinct labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > 63 {
            return Err(Error::domain(format!("ground set of size {} too large", labels.len())));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::domain(format!("invalid label {l:?}")));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::domain(format!("duplicate label {l}")));
            }
        }
        Ok(GroundSet { labels, index })
    }

    /// Ground set `{e0, …, e(n-1)}`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Self::new((0..n).map(|i| format!("{prefix}{i}"))).expect("generated labels are valid")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn full(&self) -> Mask {
        full_mask(self.len())
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::domain(format!("label {label} not in ground set")))
    }

    pub fn mask_of<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<Mask> {
        labels
            .into_iter()
            .try_fold(0, |m, l| Ok(m | (1 << self.position(l)?)))
    }

    /// Check that `m` only uses positions of this ground set.
    pub fn check(&self, m: Mask) -> Result<()> {
        if is_subset(m, self.full()) {
            Ok(())
        } else {
            Err(Error::domain("subset uses elements outside the ground set"))
        }
    }

    pub fn labels_of(&self, m: Mask) -> Vec<&str> {
        elements(m).map(|i| self.label(i)).collect()
    }

    /// `{a,b}` style rendering, `∅` for the empty set.
    pub fn show(&self, m: Mask) -> String {
        if m == 0 {
            "∅".to_string()
        } else {
            format!("{{{}}}", self.labels_of(m).join(","))
        }
    }
}

/// A finite family of subsets of a ground set, kept duplicate free in
/// canonical (lexicographic) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: GroundSet,
    members: Vec<Mask>,
}

impl SetFamily {
    pub fn new(ground: GroundSet, members: impl IntoIterator<Item = Mask>) -> Result<Self> {
        let mut members: Vec<Mask> = members.into_iter().collect();
        for &m in &members {
            ground.check(m)?;
        }
        members.sort_by(|a, b| lex_cmp(*a, *b));
        members.dedup();
        Ok(SetFamily { ground, members })
    }

    pub fn from_labels(ground: GroundSet, sets: &[&[&str]]) -> Result<Self> {
        let members = sets
            .iter()
            .map(|s| ground.mask_of(s.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, members)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn members(&self) -> &[Mask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: Mask) -> bool {
        self.members.binary_search_by(|x| lex_cmp(*x, m)).is_ok()
    }

    /// Membership table over all `2^n` subsets.
    pub fn table(&self) -> Vec<bool> {
        let mut t = vec![false; 1 << self.ground.len()];
        for &m in &self.members {
            t[m as usize] = true;
        }
        t
    }

    /// Maximal members with respect to inclusion.
    pub fn maximal(&self) -> Vec<Mask> {
        self.members
            .iter()
            .copied()
            .filter(|&a| !self.members.iter().any(|&b| b != a && is_subset(a, b)))
            .collect()
    }

    /// Minimal members with respect to inclusion.
    pub fn minimal(&self) -> Vec<Mask> {
        self.members
            .iter()
            .copied()
            .filter(|&a| !self.members.iter().any(|&b| b != a && is_subset(b, a)))
            .collect()
    }

    /// The family of all subsets of members.
    pub fn down_closure(&self) -> SetFamily {
        let mut t = vec![false; 1 << self.ground.len()];
        for &m in &self.members {
            for s in submasks(m) {
                t[s as usize] = true;
            }
        }
        let members = (0..t.len() as Mask).filter(|&s| t[s as usize]);
        SetFamily::new(self.ground.clone(), members).expect("subsets of members stay in ground")
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|&m| self.ground.show(m)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_puts_empty_first() {
        let mut v = vec![0b110, 0b001, 0, 0b011, 0b100];
        v.sort_by(|a, b| lex_cmp(*a, *b));
        assert_eq!(v, vec![0, 0b001, 0b011, 0b110, 0b100]);
    }

    #[test]
    fn submasks_cover_power_set() {
        let mut s: Vec<Mask> = submasks(0b1011).collect();
        s.sort();
        assert_eq!(s, vec![0, 1, 2, 3, 8, 9, 10, 11]);
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(GroundSet::new(["a", "a"]).is_err());
        assert!(GroundSet::new(["a", "b c"]).is_err());
    }

    #[test]
    fn family_canonicalises() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let f = SetFamily::new(g, [3, 1, 0, 1]).unwrap();
        assert_eq!(f.members(), &[0, 1, 3]);
        assert_eq!(f.to_string(), "{∅, {a}, {a,b}}");
    }
}
