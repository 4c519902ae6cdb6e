use matroid_lab::axioms::{enumerate_matroids, Presentation, SystemKind};
use matroid_lab::catalog;
use matroid_lab::format::*;
use matroid_lab::graph::MultiGraph;
use matroid_lab::infinite::standard_sample;
use matroid_lab::set::{GroundSet, SetFamily};
use matroid_lab::thin::{Domain, Field, FnVec, ThinFamily};
use matroid_lab::{axioms, Error};
use proptest::prelude::*;

#[test]
fn every_small_matroid_roundtrips_in_every_system() {
    for n in 0..=3 {
        for m in enumerate_matroids(n).unwrap() {
            for k in SystemKind::ALL {
                let p = Presentation::of_matroid(&m, k);
                let text = print_presentation(&p);
                assert_eq!(parse_presentation(&text).unwrap(), p, "{text}");
            }
            assert_eq!(parse_matroid(&print_matroid(&m)).unwrap().independents(), m.independents());
        }
    }
}

fn position(e: Error) -> (usize, usize) {
    match e {
        Error::Parse { line, col, .. } => (line, col),
        other => panic!("not a parse error: {other}"),
    }
}

#[test]
fn parse_errors_report_positions() {
    assert_eq!(position(parse_presentation("matroid x\n").unwrap_err()), (1, 9));
    assert_eq!(position(parse_graph("graph\nvertices: a\nedge e a\n").unwrap_err()), (3, 9));
    assert_eq!(position(parse_thinfam("thinfam p=2\npvec y 0 -\n").unwrap_err()), (2, 11));
    assert_eq!(position(parse_sgraph("sgraph\nvertices: u\ntail t\ncoretail v t 0 1 0\n").unwrap_err()), (4, 10));
}

fn graph_strategy() -> impl Strategy<Value = MultiGraph> {
    (1usize..=5).prop_flat_map(|nv| {
        prop::collection::vec((0..nv, 0..nv), 0..=6).prop_map(move |edges| {
            let names: Vec<String> = (0..nv).map(|i| format!("v{i}")).collect();
            let mut g = MultiGraph::new();
            for n in &names {
                g.add_vertex(n).unwrap();
            }
            for (k, (u, v)) in edges.into_iter().enumerate() {
                g.add_edge(&format!("e{k}"), u, v).unwrap();
            }
            g
        })
    })
}

fn fnvec_strategy(p: u32, naturals: bool) -> BoxedStrategy<FnVec> {
    let finite = prop::collection::vec(0..p, 0..6).prop_map(|v| FnVec::dense(&v));
    if naturals {
        prop_oneof![
            finite,
            (0usize..4, prop::collection::vec(0..p, 0..4), prop::collection::vec(0..p, 1..4))
                .prop_map(|(s, pre, per)| FnVec::periodic(s, &pre, &per).unwrap()),
        ]
        .boxed()
    } else {
        finite.boxed()
    }
}

fn thinfam_strategy() -> impl Strategy<Value = ThinFamily> {
    (prop_oneof![Just(2u32), Just(3u32), Just(7u32)], any::<bool>()).prop_flat_map(|(p, nat)| {
        prop::collection::vec(fnvec_strategy(p, nat), 0..5).prop_map(move |vs| {
            let domain = if nat { Domain::Naturals } else { Domain::Finite(6) };
            ThinFamily::new(Field::new(p).unwrap(), domain, vs.into_iter().enumerate().map(|(i, v)| (format!("x{i}"), v)))
                .unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graphs_roundtrip(g in graph_strategy()) {
        prop_assert_eq!(parse_graph(&print_graph(&g)).unwrap(), g);
    }

    #[test]
    fn thin_families_roundtrip(f in thinfam_strategy()) {
        prop_assert_eq!(parse_thinfam(&print_thinfam(&f)).unwrap(), f);
    }

    #[test]
    fn edge_sets_roundtrip(seed in any::<u64>(), which in 0usize..7) {
        let entry = &catalog::catalog_list()[which];
        let g = (entry.graph)();
        for d in standard_sample(&g, seed, 6) {
            prop_assert_eq!(parse_edgeset(&g, &print_edgeset(&g, &d)).unwrap(), d);
        }
    }

    #[test]
    fn arbitrary_set_systems_roundtrip(members in prop::collection::vec(0u64..16, 0..10)) {
        // Not necessarily matroids: printing and parsing must not care.
        let g = GroundSet::new(["a", "b", "c", "d"]).unwrap();
        let p = Presentation::Circuits(SetFamily::new(g, members).unwrap());
        prop_assert_eq!(parse_presentation(&print_presentation(&p)).unwrap(), p);
    }

    #[test]
    fn reports_roundtrip(members in prop::collection::vec(0u64..8, 0..8)) {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let f = SetFamily::new(g, members).unwrap();
        for r in [axioms::verify_independence(&f), axioms::verify_bases(&f), axioms::verify_circuits(&f)] {
            prop_assert_eq!(parse_report(&print_report(&r)).unwrap(), r);
        }
    }
}
