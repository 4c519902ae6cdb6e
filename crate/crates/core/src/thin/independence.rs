//! Thin independence, spans and basis extension for finite lists.
//!
//! Every sub-list of a [`ThinFamily`] is finite, hence thin, so a thin
//! combination is an ordinary finite one and all questions reduce to linear
//! algebra on a truncation that is certified to carry every relation.

use super::field::Field;
use super::vec::{FnVec, ThinFamily};
use crate::error::{Error, Result};

fn check_indices(fam: &ThinFamily, subset: &[usize]) -> Result<Vec<usize>> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&bad) = s.iter().find(|&&i| i >= fam.len()) {
        return Err(Error::domain(format!("member index {bad} out of range")));
    }
    Ok(s)
}

/// A non-trivial combination `(member, coefficient)` of the sub-list summing to
/// zero, or `None` when the sub-list is thinly independent.
pub fn dependence_certificate(fam: &ThinFamily, subset: &[usize]) -> Result<Option<Vec<(usize, u32)>>> {
    let s = check_indices(fam, subset)?;
    let rows = fam.rows(&s, fam.truncation_bound([]));
    Ok(fam
        .field()
        .dependence(&rows)
        .map(|c| s.iter().zip(c).filter(|&(_, c)| c != 0).map(|(&i, c)| (i, c)).collect()))
}

pub fn thinly_independent(fam: &ThinFamily, subset: &[usize]) -> Result<bool> {
    Ok(dependence_certificate(fam, subset)?.is_none())
}

/// Coefficients expressing `y` over the sub-list, if `y` lies in its span.
pub fn span_coefficients(y: &FnVec, fam: &ThinFamily, subset: &[usize]) -> Result<Option<Vec<(usize, u32)>>> {
    let s = check_indices(fam, subset)?;
    if y.max_value() >= fam.field().p() {
        return Err(Error::domain("value out of range for the field"));
    }
    let w = fam.truncation_bound([y]);
    let rows = fam.rows(&s, w);
    Ok(fam.field().solve(&rows, &y.truncate(w)).map(|c| s.iter().copied().zip(c).collect()))
}

pub fn span_membership(y: &FnVec, fam: &ThinFamily, subset: &[usize]) -> Result<bool> {
    Ok(span_coefficients(y, fam, subset)?.is_some())
}

/// Reference oracle: try every coefficient vector. Exponential, finite lists
/// over a finite domain only.
pub fn brute_force_independent(fam: &ThinFamily, subset: &[usize]) -> Result<bool> {
    let s = check_indices(fam, subset)?;
    let w = fam.truncation_bound([]);
    let f: Field = fam.field();
    let p = f.p() as usize;
    let total = p.checked_pow(s.len() as u32).filter(|&t| t <= 1 << 20).ok_or_else(|| {
        Error::refused(format!("{p}^{} coefficient vectors is too many", s.len()))
    })?;
    for code in 1..total {
        let mut acc = vec![0; w];
        let mut c = code;
        for &i in &s {
            f.axpy(&mut acc, (c % p) as u32, &fam.member(i).truncate(w));
            c /= p;
        }
        if acc.iter().all(|&v| v == 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Extend the independent sub-list `i` to an independent `b` with
/// `i ⊆ b ⊆ x` whose span contains `x`.
///
/// `order` enumerates `x \ i` (the natural order when `None`). An element is
/// skipped exactly when it is a combination of the elements after it together
/// with `i`; otherwise it joins `b`. All three postconditions are checked.
pub fn thin_basis_extend(fam: &ThinFamily, i: &[usize], x: &[usize], order: Option<&[usize]>) -> Result<Vec<usize>> {
    let i = check_indices(fam, i)?;
    let x = check_indices(fam, x)?;
    if let Some(&e) = i.iter().find(|e| !x.contains(e)) {
        return Err(Error::Precondition(format!("{} lies in I but not in X", fam.names()[e])));
    }
    if let Some(cert) = dependence_certificate(fam, &i)? {
        let terms: Vec<String> = cert.iter().map(|(k, c)| format!("{c}*{}", fam.names()[*k])).collect();
        return Err(Error::Precondition(format!("I is dependent: {} = 0", terms.join(" + "))));
    }
    let rest: Vec<usize> = x.iter().copied().filter(|e| !i.contains(e)).collect();
    let order: Vec<usize> = match order {
        None => rest.clone(),
        Some(o) => {
            let mut sorted = o.to_vec();
            sorted.sort_unstable();
            if sorted != rest {
                return Err(Error::Precondition("order must enumerate X \\ I exactly once".into()));
            }
            o.to_vec()
        }
    };

    let mut b = i.clone();
    for (k, &e) in order.iter().enumerate() {
        let mut later: Vec<usize> = order[k + 1..].to_vec();
        later.extend(&i);
        if !span_membership(fam.member(e), fam, &later)? {
            b.push(e);
        }
    }
    b.sort_unstable();

    let post = |msg: &str| Error::refused(format!("basis extension postcondition failed: {msg}"));
    if !thinly_independent(fam, &b)? {
        return Err(post("B is dependent"));
    }
    if !i.iter().all(|e| b.contains(e)) || !b.iter().all(|e| x.contains(e)) {
        return Err(post("B is not between I and X"));
    }
    for &e in &x {
        if !span_membership(fam.member(e), fam, &b)? {
            return Err(post("X is not spanned"));
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thin::vec::Domain;

    fn fam(rows: &[&[u32]]) -> ThinFamily {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        ThinFamily::from_rows(Field::F2, rows[0].len(), &rows).unwrap()
    }

    #[test]
    fn unit_vectors_independent() {
        let f = fam(&[&[1, 0], &[0, 1]]);
        assert!(thinly_independent(&f, &[0, 1]).unwrap());
    }

    #[test]
    fn three_vectors_in_plane_dependent() {
        let f = fam(&[&[1, 1], &[1, 0], &[0, 1]]);
        assert!(!thinly_independent(&f, &[0, 1, 2]).unwrap());
        let cert = dependence_certificate(&f, &[0, 1, 2]).unwrap().unwrap();
        assert_eq!(cert, vec![(0, 1), (1, 1), (2, 1)]);
    }

    #[test]
    fn span_examples() {
        let f = fam(&[&[1, 0], &[0, 1]]);
        assert!(span_membership(&FnVec::zero(), &f, &[]).unwrap());
        assert!(span_membership(&FnVec::dense(&[1, 1]), &f, &[0, 1]).unwrap());
        assert!(!span_membership(&FnVec::dense(&[1, 1]), &f, &[0]).unwrap());
    }

    #[test]
    fn extend_from_empty_takes_whole_basis() {
        let f = fam(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(thin_basis_extend(&f, &[], &[0, 1, 2], None).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn extend_keeps_seed() {
        let f = fam(&[&[1, 1, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        for order in [[1, 2, 3], [3, 2, 1], [2, 3, 1]] {
            let b = thin_basis_extend(&f, &[0], &[0, 1, 2, 3], Some(&order)).unwrap();
            assert_eq!(b.len(), 3);
            assert!(b.contains(&0));
        }
    }

    #[test]
    fn extend_rejects_dependent_seed() {
        let f = fam(&[&[1, 1], &[1, 0], &[0, 1]]);
        let err = thin_basis_extend(&f, &[0, 1, 2], &[0, 1, 2], None).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn periodic_members_use_truncation_bound() {
        // x0 = (1,1,1,...), x1 = (0,1,0,1,...), x2 = (1,0,1,0,...): x0 = x1 + x2.
        let members = [
            FnVec::periodic(0, &[], &[1]).unwrap(),
            FnVec::periodic(0, &[0], &[1, 0]).unwrap(),
            FnVec::periodic(0, &[], &[1, 0]).unwrap(),
        ];
        let f = ThinFamily::new(
            Field::F2,
            Domain::Naturals,
            members.into_iter().enumerate().map(|(i, m)| (format!("x{i}"), m)),
        )
        .unwrap();
        assert!(!thinly_independent(&f, &[0, 1, 2]).unwrap());
        assert!(thinly_independent(&f, &[1, 2]).unwrap());
        let y = FnVec::periodic(5, &[], &[1]).unwrap();
        assert!(!span_membership(&y, &f, &[0, 1, 2]).unwrap());
    }

    #[test]
    fn brute_force_agrees() {
        let f = fam(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1], &[1, 1, 1]]);
        for mask in 0u32..16 {
            let s: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
            assert_eq!(thinly_independent(&f, &s).unwrap(), brute_force_independent(&f, &s).unwrap());
        }
    }
}
