use matroid_lab::axioms::{
    convert, count_by_down_closed_filter, enumerate_matroids, enumerate_matroids_with, verify_independence,
    Presentation, SystemKind,
};
use matroid_lab::set::{card, elements, is_subset, GroundSet, SetFamily};
use matroid_lab::{Exec, FiniteMatroid, Mask};

/// Independence families on `n` elements, by direct search over all families
/// of subsets with the three axioms spelled out.
fn brute_force_independence_families(n: usize) -> Vec<Vec<Mask>> {
    let subsets = 1usize << n;
    let mut out = Vec::new();
    for fam in 0u64..(1u64 << subsets) {
        let has = |s: Mask| fam >> s & 1 == 1;
        if !has(0) {
            continue;
        }
        let members: Vec<Mask> = (0..subsets as Mask).filter(|&s| has(s)).collect();
        let hereditary = members.iter().all(|&s| (0..n).all(|e| !has(s) || has(s & !(1 << e))));
        let augment = members.iter().all(|&i| {
            members.iter().all(|&j| {
                card(j) <= card(i) || elements(j & !i).any(|e| has(i | 1 << e))
            })
        });
        if hereditary && augment {
            out.push(members);
        }
    }
    out
}

#[test]
fn counts_match_direct_search() {
    // 1, 2, 5, 16, 68 labelled matroids on 0..4 elements
    for (n, expect) in [(0, 1), (1, 2), (2, 5), (3, 16), (4, 68)] {
        let direct = brute_force_independence_families(n);
        assert_eq!(direct.len(), expect, "direct search n={n}");
        assert_eq!(enumerate_matroids(n).unwrap().len(), expect, "basis enumeration n={n}");
        assert_eq!(count_by_down_closed_filter(n, Exec::Parallel).unwrap(), expect, "filter n={n}");
    }
}

#[test]
fn enumeration_is_mode_independent() {
    for n in 0..=4 {
        let a = enumerate_matroids_with(n, Exec::Sequential).unwrap();
        let b = enumerate_matroids_with(n, Exec::Parallel).unwrap();
        assert_eq!(a, b);
        assert_eq!(count_by_down_closed_filter(n, Exec::Sequential).unwrap(), a.len());
    }
}

#[test]
fn enumerated_families_are_exactly_the_direct_ones() {
    for n in 0..=3 {
        let mut direct = brute_force_independence_families(n);
        direct.sort();
        let mut ours: Vec<Vec<Mask>> = enumerate_matroids(n)
            .unwrap()
            .iter()
            .map(|m| {
                let mut v = m.independents().members().to_vec();
                v.sort();
                v
            })
            .collect();
        ours.sort();
        assert_eq!(ours, direct);
    }
}

#[test]
fn every_presentation_verifies_and_roundtrips() {
    for n in 0..=4 {
        for m in enumerate_matroids(n).unwrap() {
            let src = Presentation::Independents(m.independents());
            for k in SystemKind::ALL {
                let p = convert(&src, k).unwrap();
                assert_eq!(p.kind(), k);
                let report = p.verify().unwrap();
                assert!(report.passed(), "{k:?} on {:?}: {report}", m.independents().members());
                let back = convert(&p, SystemKind::Independence).unwrap();
                assert_eq!(back, src, "{k:?}");
            }
        }
    }
}

#[test]
fn non_matroids_fail_some_axiom() {
    let g = GroundSet::indexed("e", 3);
    let mut failures = 0;
    for fam in 0u64..(1 << 8) {
        let members: Vec<Mask> = (0..8).filter(|s| fam >> s & 1 == 1).collect();
        let f = SetFamily::new(g.clone(), members).unwrap();
        if !verify_independence(&f).passed() {
            failures += 1;
            assert!(FiniteMatroid::from_independents(&f).is_err());
        }
    }
    assert_eq!(failures, 256 - 16);
}

#[test]
fn duality_laws() {
    for n in 0..=4 {
        for m in enumerate_matroids(n).unwrap() {
            let d = m.dual();
            assert_eq!(d.dual().independents(), m.independents());
            assert_eq!(d.rank() + m.rank(), n);
            for &c in m.circuits().members() {
                for &k in m.cocircuits().members() {
                    assert_ne!(card(c & k), 1, "circuit {c:b} meets cocircuit {k:b} once");
                }
            }
            // bases of the dual are the complements of bases
            let full = m.ground().full();
            let mut comp: Vec<Mask> = m.bases().members().iter().map(|b| full & !b).collect();
            comp.sort();
            let mut db = d.bases().members().to_vec();
            db.sort();
            assert_eq!(comp, db);
        }
    }
}

#[test]
fn minors_commute_and_dualise() {
    for m in enumerate_matroids(4).unwrap() {
        for del in 0..16u64 {
            for con in (0..16u64).filter(|c| c & del == 0) {
                let a = m.minor(del, con).unwrap();
                // (M / C \ D)* = M* / D \ C
                let b = m.dual().minor(con, del).unwrap().dual();
                assert_eq!(a.independents(), b.independents());
            }
        }
    }
}

#[test]
fn closure_and_rank_agree_with_independents() {
    for m in enumerate_matroids(4).unwrap() {
        for x in 0..16u64 {
            let cl = m.closure(x).unwrap();
            let r = m.rank_of(x);
            assert!(is_subset(x, cl));
            assert_eq!(m.rank_of(cl), r);
            for e in elements(!cl & 15) {
                assert_eq!(m.rank_of(x | 1 << e), r + 1);
            }
            let best = m.independents().members().iter().filter(|&&i| is_subset(i, x)).map(|&i| card(i)).max();
            assert_eq!(Some(r), best);
        }
    }
}
