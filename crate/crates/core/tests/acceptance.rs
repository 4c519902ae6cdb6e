//! Acceptance run: one line per criterion, non-zero exit if any fails.
//!
//! Runs without the libtest harness so the lines show up in plain
//! `cargo test` output.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use matroid_lab::axioms::{convert, count_by_down_closed_filter, enumerate_matroids, Presentation, SystemKind};
use matroid_lab::catalog::{self, catalog_list};
use matroid_lab::graph::{bonds, check_theorem1, connected_multigraphs_upto, MultiGraph};
use matroid_lab::infinite::{
    acirclic_sample, bean_gap_certificate, complement_is_finite_bond_base, finite_sample,
    is_topological_spanning_tree, standard_sample, topological_spanning_tree, tree_criteria, DEFAULT_SEED,
};
use matroid_lab::set::{card, elements};
use matroid_lab::thin::{
    i3_counterexample_demo, mac_thin_equivalence_all, mac_thin_equivalence_structured, theorem8_sweep,
};
use matroid_lab::{Error, Exec, Mask};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: Error) -> String {
    err.to_string()
}

fn axiom_equivalence() -> Check {
    let mut checked = 0;
    for n in 0..=4 {
        for m in enumerate_matroids(n).map_err(e)? {
            let src = Presentation::Independents(m.independents());
            for k in SystemKind::ALL {
                let p = convert(&src, k).map_err(e)?;
                let report = p.verify().map_err(e)?;
                ensure(report.passed(), || format!("{k:?} presentation fails: {report}"))?;
                let back = convert(&p, SystemKind::Independence).map_err(e)?;
                ensure(back == src, || format!("{k:?} does not round-trip on {:?}", m.independents().members()))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} presentations verified and round-tripped"))
}

/// Families of subsets of an `n`-set satisfying the independence axioms,
/// found by checking every family directly.
fn direct_count(n: usize) -> usize {
    let subsets = 1u64 << n;
    (0u64..1 << subsets)
        .filter(|fam| {
            let has = |s: Mask| fam >> s & 1 == 1;
            let members: Vec<Mask> = (0..subsets).filter(|&s| has(s)).collect();
            has(0)
                && members.iter().all(|&s| (0..n).all(|e| has(s & !(1 << e))))
                && members.iter().all(|&i| {
                    members.iter().all(|&j| card(j) <= card(i) || elements(j & !i).any(|e| has(i | 1 << e)))
                })
        })
        .count()
}

fn enumeration_counts() -> Check {
    let mut counts = Vec::new();
    for n in 0..=4 {
        let a = enumerate_matroids(n).map_err(e)?.len();
        let b = count_by_down_closed_filter(n, Exec::default()).map_err(e)?;
        ensure(a == b, || format!("n={n}: enumeration {a} vs filter {b}"))?;
        if n <= 2 {
            let d = direct_count(n);
            ensure(a == d, || format!("n={n}: enumeration {a} vs direct search {d}"))?;
        }
        counts.push(a);
    }
    ensure(counts[..3] == [1, 2, 5], || format!("small counts {counts:?}"))?;
    Ok(format!("counts {counts:?}, both code paths agree"))
}

fn duality_laws() -> Check {
    let mut pairs = 0;
    for n in 0..=4 {
        for m in enumerate_matroids(n).map_err(e)? {
            ensure(m.dual().dual().independents() == m.independents(), || "dual of dual differs".into())?;
            for &c in m.circuits().members() {
                for &k in m.cocircuits().members() {
                    ensure(card(c & k) != 1, || format!("circuit {c:b} meets cocircuit {k:b} in one element"))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("involution holds; {pairs} circuit/cocircuit pairs never meet in one element"))
}

fn bipartition_bonds(g: &MultiGraph) -> BTreeSet<Mask> {
    let cuts: Vec<Mask> = (0..1u64 << g.vertex_count())
        .map(|side| {
            g.edges()
                .iter()
                .enumerate()
                .filter(|(_, ed)| (side >> ed.u & 1) != (side >> ed.v & 1))
                .fold(0, |m, (i, _)| m | 1 << i)
        })
        .filter(|&c| c != 0)
        .collect();
    cuts.iter().copied().filter(|&x| !cuts.iter().any(|&y| y != x && y & x == y)).collect()
}

fn finite_collapse() -> Check {
    let graphs = connected_multigraphs_upto(5);
    for g in &graphs {
        let c = check_theorem1(g).map_err(e)?;
        ensure(c.holds(), || format!("{c:?} on {g:?}"))?;
        let ours: BTreeSet<Mask> = bonds(g).map_err(e)?.members().iter().copied().collect();
        ensure(ours == bipartition_bonds(g), || format!("bond oracle disagrees on {g:?}"))?;
    }
    Ok(format!("{} connected multigraphs with at most 5 edges", graphs.len()))
}

fn catalog_regression() -> Check {
    let mut facts = 0;
    let mut slowest = Duration::ZERO;
    for entry in catalog_list() {
        let t = Instant::now();
        let outcomes = catalog::run(&entry);
        let took = t.elapsed();
        slowest = slowest.max(took);
        for o in &outcomes {
            ensure(o.passed(), || format!("{} / {}: {:?}", o.entry, o.fact, o.outcome))?;
        }
        ensure(took < Duration::from_secs(10), || format!("{} took {took:?}", entry.name))?;
        facts += outcomes.len();
    }
    Ok(format!("{facts} facts, slowest entry {slowest:.2?}"))
}

fn tree_criteria_agree() -> Check {
    let (mut decided, mut refused) = (0, 0);
    for entry in catalog_list() {
        let g = (entry.graph)();
        for d in standard_sample(&g, DEFAULT_SEED, 40) {
            match tree_criteria(&g, &d) {
                Ok(c) => {
                    ensure(c.maximal_acirclic == c.minimal_bond_transversal, || {
                        format!("{}: criteria differ on {d:?}", entry.name)
                    })?;
                    decided += 1;
                }
                Err(Error::Refused(_)) => refused += 1,
                Err(err) => return Err(format!("{}: {err}", entry.name)),
            }
        }
    }
    Ok(format!("{decided} sample sets agree, {refused} refused by the window check"))
}

fn extension_contract() -> Check {
    let mut n = 0;
    for entry in catalog_list() {
        let g = (entry.graph)();
        for f in acirclic_sample(&g, DEFAULT_SEED, 20).map_err(e)? {
            let t = topological_spanning_tree(&g, &f).map_err(e)?;
            let name = entry.name;
            ensure(f.is_subset(&t), || format!("{name}: result does not contain {f:?}"))?;
            ensure(is_topological_spanning_tree(&g, &t).map_err(e)?, || format!("{name}: {t:?} is not a tree"))?;
            ensure(complement_is_finite_bond_base(&g, &t).map_err(e)?, || {
                format!("{name}: complement of {t:?} is not a finite-bond base")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} acirclic sets extended"))
}

fn thin_sweep() -> Check {
    let s = theorem8_sweep(DEFAULT_SEED, 200, Exec::default());
    ensure(s.holds(), || format!("axiom failures {:?}, rank disagreements {:?}", s.axiom_failures, s.rank_disagreements))?;
    Ok(format!("{} random families over F2 and F3", s.families))
}

fn incidence_equivalence() -> Check {
    let graphs = connected_multigraphs_upto(5);
    let ok = mac_thin_equivalence_all(&graphs, Exec::default());
    ensure(ok.iter().all(|&b| b), || format!("{} graphs disagree", ok.iter().filter(|&&b| !b).count()))?;
    let mut sampled = 0;
    for g in [catalog::double_ray(), catalog::ladder()] {
        let mut samples = standard_sample(&g, DEFAULT_SEED, 40);
        samples.extend(finite_sample(&g, 3, 3));
        let r = mac_thin_equivalence_structured(&g, &samples).map_err(e)?;
        ensure(r.holds(), || format!("disagreements {:?}", r.disagreements))?;
        sampled += r.checked;
    }
    Ok(format!("{} graphs exhaustively, {sampled} structured samples", graphs.len()))
}

fn counterexample_demo() -> Check {
    let d = i3_counterexample_demo(10).map_err(e)?;
    ensure(d.key_dependences_hold(), || d.render())?;
    ensure(d.interval.matches_claim, || d.render())?;
    for line in d.render().lines() {
        println!("    | {line}");
    }
    let cert = bean_gap_certificate(&catalog::bean_graph()).map_err(e)?;
    ensure(cert.demonstrates_gap(), || format!("{cert:?}"))?;
    Ok(format!("dependences hold for 2..=10; bean gap shown over {} stages", cert.stages.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("axiom-system equivalence", axiom_equivalence),
        ("enumeration cross-check", enumeration_counts),
        ("duality laws", duality_laws),
        ("finite duality collapse", finite_collapse),
        ("catalog regression", catalog_regression),
        ("spanning tree criteria", tree_criteria_agree),
        ("spanning tree extension", extension_contract),
        ("thin sums property suite", thin_sweep),
        ("incidence thin independence", incidence_equivalence),
        ("augmentation demo", counterexample_demo),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = check();
        let took = t.elapsed();
        match outcome {
            Ok(detail) => println!("[{:2}] PASS {name:30} {took:>9.2?}  {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[{:2}] FAIL {name:30} {took:>9.2?}  {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
