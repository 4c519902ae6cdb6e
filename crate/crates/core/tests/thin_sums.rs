use matroid_lab::catalog;
use matroid_lab::graph::connected_multigraphs_upto;
use matroid_lab::infinite::{finite_sample, standard_sample, DEFAULT_SEED};
use matroid_lab::set::{elements, full_mask, submasks};
use matroid_lab::thin::*;
use matroid_lab::Exec;
use proptest::prelude::*;

#[test]
fn multigraphs_up_to_five_edges() {
    let graphs = connected_multigraphs_upto(5);
    assert!(mac_thin_equivalence_all(&graphs, Exec::default()).into_iter().all(|ok| ok));
}

#[test]
fn structured_samples_agree_with_algebraic_cycles() {
    for g in [catalog::double_ray(), catalog::ladder()] {
        let mut samples = standard_sample(&g, DEFAULT_SEED, 40);
        samples.extend(finite_sample(&g, 3, 3));
        let r = mac_thin_equivalence_structured(&g, &samples).unwrap();
        assert!(r.holds(), "{:?}", r.disagreements);
        assert!(r.checked >= 40);
    }
}

#[test]
fn ladder_structured_relations() {
    let g = catalog::ladder();
    let inc = structured_incidence(&g);
    assert!(inc.thinly_independent(&catalog::ladder_comb()).unwrap());
    assert!(!inc.thinly_independent(&catalog::ladder_square(2)).unwrap());
    assert!(!inc.thinly_independent(&catalog::ladder_end_circle()).unwrap());
    assert!(inc.thinly_independent(&catalog::ladder_rails()).unwrap());
}

#[test]
fn non_thin_interval_family() {
    assert!(!IndexedFamily::Intervals.is_thin());
    assert!(IndexedFamily::Intervals.thinly_independent(false));
    assert!(!IndexedFamily::Intervals.thinly_independent(true));
}

#[test]
fn all_ones_needs_growing_intervals() {
    // On every truncation the all-ones vector is a combination of intervals,
    // but always one using the longest interval available, so no fixed finite
    // subfamily works on all of ℕ.
    let f = Field::F2;
    let ones = FnVec::periodic(1, &[], &[1]).unwrap();
    assert!(!IndexedFamily::Intervals.span_contains(f, &ones));
    for n in 3..12 {
        let fam = IndexedFamily::Intervals.truncate(f, n);
        let all: Vec<usize> = (0..fam.len()).collect();
        let y = FnVec::indicator(1..=n);
        let c = span_coefficients(&y, &fam, &all).unwrap().unwrap();
        assert_ne!(c.last().unwrap().1, 0);
    }
}

#[test]
fn demo_at_ten() {
    let d = i3_counterexample_demo(10).unwrap();
    assert!(d.key_dependences_hold());
    assert_eq!(d.key_dependences.len(), 9);
    assert!(d.interval.matches_claim);
    assert!(d.interval.i_independent && d.interval.i_prime_independent && d.interval.i_prime_spanning);
    assert!(d.interval.i_extends_by_all_ones);
    assert_eq!(d.pair.augmenting, (1..=10).collect::<Vec<_>>());
    assert!(!d.statuses_agree());
}

#[test]
fn triangle_basis_takes_two_edges() {
    let fam = incidence_family(&matroid_lab::graph::catalog_graphs::triangle());
    for order in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
        let b = thin_basis_extend(&fam, &[], &[0, 1, 2], Some(&order)).unwrap();
        assert_eq!(b.len(), 2);
    }
}

#[test]
fn seeded_sweep() {
    let r = theorem8_sweep(DEFAULT_SEED, 200, Exec::default());
    assert_eq!(r.families, 200);
    assert!(r.holds(), "{r:?}");
}

#[test]
fn sweep_modes_agree() {
    let a = theorem8_sweep(1, 30, Exec::Sequential);
    let b = theorem8_sweep(1, 30, Exec::Parallel);
    assert_eq!(a.axiom_failures, b.axiom_failures);
    assert_eq!(a.rank_disagreements, b.rank_disagreements);
}

fn family_strategy() -> impl Strategy<Value = ThinFamily> {
    (prop_oneof![Just(2u32), Just(3u32), Just(5u32)], 1usize..=5, 1usize..=6).prop_flat_map(|(p, w, n)| {
        prop::collection::vec(prop::collection::vec(0..p, w), n)
            .prop_map(move |rows| ThinFamily::from_rows(Field::new(p).unwrap(), w, &rows).unwrap())
    })
}

proptest! {
    #[test]
    fn span_is_closed(fam in family_strategy(), mask in 0u64..64) {
        // Spanning everything the span contains adds nothing new.
        let n = fam.len();
        let x: Vec<usize> = elements(mask & full_mask(n)).collect();
        let spanned: Vec<usize> = (0..n).filter(|&i| span_membership(fam.member(i), &fam, &x).unwrap()).collect();
        for i in 0..n {
            prop_assert_eq!(
                span_membership(fam.member(i), &fam, &spanned).unwrap(),
                span_membership(fam.member(i), &fam, &x).unwrap()
            );
        }
    }

    #[test]
    fn spanning_independent_set_is_maximal(fam in family_strategy(), xmask in 0u64..64, jmask in 0u64..64) {
        let n = fam.len();
        let x = xmask & full_mask(n);
        let j = jmask & x;
        let js: Vec<usize> = elements(j).collect();
        let xs: Vec<usize> = elements(x).collect();
        let spans = xs.iter().all(|&i| span_membership(fam.member(i), &fam, &js).unwrap());
        if thinly_independent(&fam, &js).unwrap() && spans {
            for extra in elements(x & !j) {
                let mut bigger = js.clone();
                bigger.push(extra);
                prop_assert!(!thinly_independent(&fam, &bigger).unwrap());
            }
        }
    }

    #[test]
    fn basis_extension_postconditions(fam in family_strategy(), seed in 0u64..1000) {
        let n = fam.len();
        let all: Vec<usize> = (0..n).collect();
        let mut order = all.clone();
        let mut s = seed;
        for i in (1..n).rev() {
            order.swap(i, (s % (i as u64 + 1)) as usize);
            s /= 3;
        }
        let b = thin_basis_extend(&fam, &[], &all, Some(&order)).unwrap();
        prop_assert!(thinly_independent(&fam, &b).unwrap());
        let rank = submasks(full_mask(n))
            .filter(|&m| thinly_independent(&fam, &elements(m).collect::<Vec<_>>()).unwrap())
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap();
        prop_assert_eq!(b.len(), rank);
    }

    #[test]
    fn elimination_matches_brute_force(fam in family_strategy(), mask in 0u64..64) {
        let s: Vec<usize> = elements(mask & full_mask(fam.len())).collect();
        prop_assert_eq!(thinly_independent(&fam, &s).unwrap(), brute_force_independent(&fam, &s).unwrap());
    }
}
