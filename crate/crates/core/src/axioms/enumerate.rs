use super::verify_independence;
use crate::error::{Error, Result};
use crate::matroid::FiniteMatroid;
use crate::par::Exec;
use crate::set::{card, elements, lex_cmp, submasks, GroundSet, Mask, SetFamily};

/// Largest ground set accepted by [`enumerate_matroids`].
pub const MAX_ENUMERATION: usize = 4;

fn ground(n: usize) -> GroundSet {
    GroundSet::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string())).expect("n <= 26")
}

fn exchange_ok(bases: &[Mask]) -> bool {
    bases.iter().all(|&b1| {
        bases.iter().all(|&b2| {
            elements(b1 & !b2).all(|x| elements(b2 & !b1).any(|y| bases.contains(&((b1 & !(1 << x)) | (1 << y)))))
        })
    })
}

/// All labelled matroids on `{a, b, …}` with `n` elements, generated as the
/// non-empty equicardinal set systems satisfying basis exchange.
pub fn enumerate_matroids(n: usize) -> Result<Vec<FiniteMatroid>> {
    enumerate_matroids_with(n, Exec::default())
}

pub fn enumerate_matroids_with(n: usize, exec: Exec) -> Result<Vec<FiniteMatroid>> {
    if n > MAX_ENUMERATION {
        return Err(Error::refused(format!("enumeration bound is {MAX_ENUMERATION}, got {n}")));
    }
    let g = ground(n);
    // candidate systems: (rank k, bitmask over the k-subsets)
    let mut jobs: Vec<(Vec<Mask>, u64)> = Vec::new();
    for k in 0..=n {
        let ksets: Vec<Mask> = submasks(g.full()).filter(|&s| card(s) == k).collect();
        for pick in 1..(1u64 << ksets.len()) {
            jobs.push((ksets.clone(), pick));
        }
    }
    let found = exec.map(&jobs, |(ksets, pick)| {
        let bases: Vec<Mask> = elements(*pick).map(|i| ksets[i]).collect();
        exchange_ok(&bases).then_some(bases)
    });
    let mut systems: Vec<Vec<Mask>> = found.into_iter().flatten().collect();
    for b in &mut systems {
        b.sort_by(|x, y| lex_cmp(*x, *y));
    }
    systems.sort_by(|x, y| {
        x.iter().zip(y.iter()).map(|(p, q)| lex_cmp(*p, *q)).find(|o| o.is_ne()).unwrap_or(x.len().cmp(&y.len()))
    });
    systems
        .into_iter()
        .map(|b| FiniteMatroid::from_independents(&SetFamily::new(g.clone(), b)?.down_closure()))
        .collect()
}

/// Independent count: filter every down-closed family on `n` elements through
/// `verify_independence`.
pub fn count_by_down_closed_filter(n: usize, exec: Exec) -> Result<usize> {
    if n > MAX_ENUMERATION {
        return Err(Error::refused(format!("enumeration bound is {MAX_ENUMERATION}, got {n}")));
    }
    let g = ground(n);
    let subsets = 1usize << n;
    let hits = exec.map_range(1usize << subsets, |fam| {
        let has = |s: usize| fam & (1 << s) != 0;
        let down_closed = (0..subsets).filter(|&s| has(s)).all(|s| submasks(s as Mask).all(|t| has(t as usize)));
        if !down_closed {
            return false;
        }
        let family = SetFamily::new(g.clone(), (0..subsets).filter(|&s| has(s)).map(|s| s as Mask))
            .expect("subsets of ground");
        verify_independence(&family).passed()
    });
    Ok(hits.into_iter().filter(|&h| h).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_matroids(0).unwrap().len(), 1);
        assert_eq!(enumerate_matroids(1).unwrap().len(), 2);
        assert_eq!(enumerate_matroids(2).unwrap().len(), 5);
        for n in 0..=2 {
            assert_eq!(count_by_down_closed_filter(n, Exec::Sequential).unwrap(), [1, 2, 5][n]);
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(enumerate_matroids(5), Err(Error::Refused(_))));
    }

    #[test]
    fn modes_agree() {
        let a = enumerate_matroids_with(3, Exec::Sequential).unwrap();
        let b = enumerate_matroids_with(3, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
