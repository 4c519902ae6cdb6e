//! Named example graphs, each with a list of facts that can be re-checked.
//!
//! The Bean graph here is a double ray `y ∪ z ∪ x` together with a vertex `u`
//! joined to every vertex of the half `x`: a ray dominated by a vertex, with a
//! second ray attached at its start.

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::infinite::{
    acirclic_sample, bean_check, bean_gap_certificate, closure_connected, ends, finite_sample, is_bond, is_circle,
    is_circuit, is_independent, is_mac_cocircuit, is_topological_spanning_tree, skew_cut_check, skew_cuts_at,
    standard_sample, topological_spanning_tree, tree_criteria, verify_duality_chain, verify_mac_duality, Bijection,
    CoreTailRule, CrossRule, EdgeId, EdgeSetExpr, FamilyId, FamilyMap, MatroidKind, StructuredGraph, UpWord, Vertex,
    DEFAULT_SEED,
};

fn base(vertices: &[&str]) -> StructuredGraph {
    let core = MultiGraph::from_parts(vertices.iter().copied(), []).expect("valid core");
    StructuredGraph::new(core).expect("valid core")
}

fn every(start: usize) -> (usize, usize, Vec<usize>) {
    (start, 1, vec![0])
}

fn coretail(g: &mut StructuredGraph, u: &str, t: &str) {
    let (start, period, residues) = every(0);
    let u = g.core().vertex(u).expect("core vertex");
    let t = g.tail(t).expect("tail");
    g.add_coretail(CoreTailRule { u, t, start, period, residues }).expect("valid rule");
}

/// Core `w` with two tails `a`, `b` attached by `pa`, `pb`.
pub fn double_ray() -> StructuredGraph {
    let mut g = base(&["w"]);
    let a = g.add_tail("a").expect("fresh");
    let b = g.add_tail("b").expect("fresh");
    g.patch_add("pa", Vertex::Core(0), Vertex::Tail(a, 0)).expect("fresh");
    g.patch_add("pb", Vertex::Core(0), Vertex::Tail(b, 0)).expect("fresh");
    g
}

/// Two tails `a`, `b` with a rung at every level.
pub fn ladder() -> StructuredGraph {
    let mut g = base(&[]);
    let a = g.add_tail("a").expect("fresh");
    let b = g.add_tail("b").expect("fresh");
    g.add_cross(CrossRule { t: a, t2: b, delta: 0, start: 0, period: 1, residues: vec![0] }).expect("valid");
    g
}

/// Planar dual of the ladder: the square faces form the tail `f`, the outer
/// face is the core vertex `o`, joined twice to every face vertex and once
/// more (edge `r0d`) to the first.
pub fn ladder_dual() -> StructuredGraph {
    let mut g = base(&["o"]);
    g.add_tail("f").expect("fresh");
    coretail(&mut g, "o", "f");
    coretail(&mut g, "o", "f");
    g.patch_add("r0d", Vertex::Core(0), Vertex::Tail(0, 0)).expect("fresh");
    g
}

/// Ladder to dual: rung `i >= 1` to face rail `i-1`, rung 0 to `r0d`, rail `a`
/// and rail `b` to the two spoke families.
pub fn ladder_bijection() -> Bijection {
    Bijection {
        singles: vec![(EdgeId::Family(FamilyId::Cross(0), 0), EdgeId::Finite("r0d".into()))],
        families: vec![
            FamilyMap { from: FamilyId::Cross(0), to: FamilyId::Rail(0), start: 1, shift: -1 },
            FamilyMap { from: FamilyId::Rail(0), to: FamilyId::CoreTail(0), start: 0, shift: 0 },
            FamilyMap { from: FamilyId::Rail(1), to: FamilyId::CoreTail(1), start: 0, shift: 0 },
        ],
    }
}

/// Core `u` joined to every vertex of the tail `t`.
pub fn fan() -> StructuredGraph {
    let mut g = base(&["u"]);
    g.add_tail("t").expect("fresh");
    coretail(&mut g, "u", "t");
    g
}

pub fn bean_graph() -> StructuredGraph {
    let mut g = base(&["u"]);
    let x = g.add_tail("x").expect("fresh");
    let y = g.add_tail("y").expect("fresh");
    coretail(&mut g, "u", "x");
    g.patch_add("z", Vertex::Tail(x, 0), Vertex::Tail(y, 0)).expect("fresh");
    g
}

/// Core `c` with `k` tails each attached by one edge.
pub fn star_of_rays(k: usize) -> StructuredGraph {
    let mut g = base(&["c"]);
    for i in 0..k {
        let t = g.add_tail(&format!("t{i}")).expect("fresh");
        g.patch_add(&format!("s{i}"), Vertex::Core(0), Vertex::Tail(t, 0)).expect("fresh");
    }
    g
}

pub fn finite(core: MultiGraph) -> StructuredGraph {
    StructuredGraph::new(core).expect("valid labels")
}

pub fn triangle() -> StructuredGraph {
    finite(crate::graph::catalog_graphs::triangle())
}

pub fn k4() -> StructuredGraph {
    finite(crate::graph::catalog_graphs::k4())
}

/// Three parallel edges, the planar dual of the triangle.
pub fn theta() -> StructuredGraph {
    finite(
        MultiGraph::from_parts(["p", "q"], [("f1", "p", "q"), ("f2", "p", "q"), ("f3", "p", "q")]).expect("valid"),
    )
}

pub fn triangle_bijection() -> Bijection {
    Bijection {
        singles: (1..=3).map(|i| (EdgeId::Finite(format!("e{i}")), EdgeId::Finite(format!("f{i}")))).collect(),
        families: vec![],
    }
}

/// One checkable statement about a catalog graph.
pub struct Fact {
    pub name: &'static str,
    check: Box<dyn Fn() -> Result<bool> + Send + Sync>,
}

impl Fact {
    fn new(name: &'static str, check: impl Fn() -> Result<bool> + Send + Sync + 'static) -> Self {
        Fact { name, check: Box::new(check) }
    }

    pub fn check(&self) -> Result<bool> {
        (self.check)()
    }
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub graph: fn() -> StructuredGraph,
    pub facts: Vec<Fact>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactOutcome {
    pub entry: &'static str,
    pub fact: &'static str,
    /// `Ok(true)` when the fact holds; errors are rendered as text.
    pub outcome: std::result::Result<bool, String>,
}

impl FactOutcome {
    pub fn passed(&self) -> bool {
        self.outcome == Ok(true)
    }
}

fn edges(g: &StructuredGraph, names: &[&str]) -> EdgeSetExpr {
    let ids: Vec<EdgeId> = names.iter().map(|n| g.parse_edge(n).expect("catalog edge")).collect();
    EdgeSetExpr::from_edges(&ids)
}

fn fam(f: FamilyId, w: UpWord) -> EdgeSetExpr {
    EdgeSetExpr::family(f, w)
}

fn refused<T>(r: Result<T>) -> Result<bool> {
    match r {
        Err(Error::Refused(_)) => Ok(true),
        Err(e) => Err(e),
        Ok(_) => Ok(false),
    }
}

/// The comb: rail `a` plus every rung.
pub fn ladder_comb() -> EdgeSetExpr {
    fam(FamilyId::Rail(0), UpWord::full()).union(&fam(FamilyId::Cross(0), UpWord::full()))
}

/// Rung 0 plus both rails.
pub fn ladder_end_circle() -> EdgeSetExpr {
    ladder_rails().union(&edges(&ladder(), &["@cross:0:0"]))
}

pub fn ladder_rails() -> EdgeSetExpr {
    fam(FamilyId::Rail(0), UpWord::full()).union(&fam(FamilyId::Rail(1), UpWord::full()))
}

/// The square between rungs `i` and `i+1`.
pub fn ladder_square(i: usize) -> EdgeSetExpr {
    EdgeSetExpr::from_edges(&[
        EdgeId::Family(FamilyId::Cross(0), i),
        EdgeId::Family(FamilyId::Cross(0), i + 1),
        EdgeId::Family(FamilyId::Rail(0), i),
        EdgeId::Family(FamilyId::Rail(1), i),
    ])
}

/// Spoke `i` of the fan with the tail from level `i` on.
pub fn fan_loop(i: usize) -> EdgeSetExpr {
    EdgeSetExpr::from_edges([&EdgeId::Family(FamilyId::CoreTail(0), i)])
        .union(&fam(FamilyId::Rail(0), UpWord::from_start(i)))
}

/// Sample used for the ladder duality chain.
pub fn ladder_chain_samples() -> (Vec<EdgeSetExpr>, Vec<EdgeSetExpr>) {
    let g = ladder();
    let mut s = standard_sample(&g, DEFAULT_SEED, 24);
    s.extend((0..3).map(ladder_square));
    s.push(ladder_end_circle());
    s.push(ladder_rails());
    let h = ladder_dual();
    let mut d = finite_sample(&h, 2, 3);
    d.extend(standard_sample(&h, DEFAULT_SEED, 12));
    (s, d)
}

fn double_ray_facts() -> Vec<Fact> {
    vec![
        Fact::new("two ends", || Ok(ends(&double_ray()).len() == 2)),
        Fact::new("bean check false", || Ok(!bean_check(&double_ray()))),
        Fact::new("whole edge set is an algebraic-cycle circuit", || {
            let g = double_ray();
            is_circuit(&g, MatroidKind::AlgebraicCycle, &g.universe())
        }),
        Fact::new("proper subsets are algebraically independent", || {
            let g = double_ray();
            let u = g.universe();
            for s in standard_sample(&g, DEFAULT_SEED, 24).iter().filter(|s| **s != u) {
                if !is_independent(&g, MatroidKind::AlgebraicCycle, s)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        Fact::new("skew cuts and cocircuits are exactly the 2-sets", || {
            let g = double_ray();
            for s in finite_sample(&g, 2, 3) {
                let two = s.count() == Some(2);
                if skew_cut_check(&g, &s)? != two || is_mac_cocircuit(&g, &s)? != two {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        Fact::new("bonds are the single edges", || {
            let g = double_ray();
            for s in finite_sample(&g, 2, 2) {
                if is_bond(&g, &s)? != (s.count() == Some(1)) {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        Fact::new("whole edge set is the topological spanning tree", || {
            let g = double_ray();
            let t = topological_spanning_tree(&g, &EdgeSetExpr::empty())?;
            Ok(t == g.universe() && is_topological_spanning_tree(&g, &t)?)
        }),
        Fact::new("whole edge set is not a circle", || Ok(!is_circle(&double_ray(), &double_ray().universe())?)),
        Fact::new("deleting one edge disconnects the closure", || {
            let g = double_ray();
            Ok(!closure_connected(&g, &g.universe().without(&EdgeId::Finite("pa".into())))?)
        }),
    ]
}

fn ladder_facts() -> Vec<Fact> {
    vec![
        Fact::new("one end", || Ok(ends(&ladder()).len() == 1)),
        Fact::new("bean check false", || Ok(!bean_check(&ladder()))),
        Fact::new("comb is a topological spanning tree", || is_topological_spanning_tree(&ladder(), &ladder_comb())),
        Fact::new("comb closure is connected", || closure_connected(&ladder(), &ladder_comb())),
        Fact::new("rungs alone have disconnected closure", || {
            Ok(!closure_connected(&ladder(), &fam(FamilyId::Cross(0), UpWord::full()))?)
        }),
        Fact::new("rung 0 plus both rails is a circle", || is_circle(&ladder(), &ladder_end_circle())),
        Fact::new("both rails without a rung are not a circle", || Ok(!is_circle(&ladder(), &ladder_rails())?)),
        Fact::new("both rails are independent in the cycle matroid", || {
            is_independent(&ladder(), MatroidKind::Cycle, &ladder_rails())
        }),
        Fact::new("rung 0 plus both rails is not a spanning tree", || {
            Ok(!is_topological_spanning_tree(&ladder(), &ladder_end_circle())?)
        }),
        Fact::new("vertex stars are skew cuts", || {
            let g = ladder();
            for i in 0..4 {
                let cut = skew_cuts_at(&g, &[Vertex::Tail(0, i)])?;
                if !skew_cut_check(&g, &cut.crossing)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        Fact::new("squares meet vertex stars in 0 or 2 edges", || {
            let g = ladder();
            let mut samples: Vec<EdgeSetExpr> = (0..3).map(ladder_square).collect();
            for i in 0..4 {
                for t in 0..2 {
                    samples.push(skew_cuts_at(&g, &[Vertex::Tail(t, i)])?.crossing);
                }
            }
            Ok(verify_mac_duality(&g, &samples)?.holds())
        }),
        Fact::new("greedy spanning tree is valid", || {
            let g = ladder();
            is_topological_spanning_tree(&g, &topological_spanning_tree(&g, &EdgeSetExpr::empty())?)
        }),
    ]
}

fn fan_facts() -> Vec<Fact> {
    vec![
        Fact::new("bean check true", || Ok(bean_check(&fan()))),
        Fact::new("algebraic cycle matroid refused", || {
            let g = fan();
            refused(is_independent(&g, MatroidKind::AlgebraicCycle, &g.universe()))
        }),
        Fact::new("spoke plus tail from its level is a circle", || {
            for i in 0..3 {
                if !is_circle(&fan(), &fan_loop(i))? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        Fact::new("all spokes extend to a spanning tree", || {
            let g = fan();
            let spokes = fam(FamilyId::CoreTail(0), UpWord::full());
            let t = topological_spanning_tree(&g, &spokes)?;
            Ok(spokes.is_subset(&t) && is_topological_spanning_tree(&g, &t)?)
        }),
        Fact::new("spanning tree criteria agree on seeded sets", || {
            let g = fan();
            for s in acirclic_sample(&g, DEFAULT_SEED, 8)? {
                let c = tree_criteria(&g, &s)?;
                if c.maximal_acirclic != c.minimal_bond_transversal {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
    ]
}

fn ladder_pair_facts() -> Vec<Fact> {
    vec![
        Fact::new("duality chain holds on the standard sample", || {
            let (s, d) = ladder_chain_samples();
            Ok(verify_duality_chain(&ladder(), &ladder_dual(), &ladder_bijection(), &s, &d)?.holds())
        }),
        Fact::new("square maps to the star of a face vertex", || {
            let h = ladder_dual();
            let img = ladder_bijection().apply(&ladder_square(2));
            Ok(img == h.incident(Vertex::Tail(0, 2)) && is_bond(&h, &img)?)
        }),
        Fact::new("end circle maps to the bond around the outer face", || {
            let h = ladder_dual();
            let img = ladder_bijection().apply(&ladder_end_circle());
            Ok(img == h.incident(Vertex::Core(0)) && is_bond(&h, &img)?)
        }),
    ]
}

fn bean_facts() -> Vec<Fact> {
    vec![
        Fact::new("bean check true", || Ok(bean_check(&bean_graph()))),
        Fact::new("weak circuit axioms pass but elimination fails", || {
            Ok(bean_gap_certificate(&bean_graph())?.demonstrates_gap())
        }),
    ]
}

fn star_facts() -> Vec<Fact> {
    vec![
        Fact::new("three ends", || Ok(ends(&star_of_rays(3)).len() == 3)),
        Fact::new("bean check false", || Ok(!bean_check(&star_of_rays(3)))),
    ]
}

fn triangle_facts() -> Vec<Fact> {
    vec![Fact::new("classical duality with three parallel edges", || {
        let g = triangle();
        let h = theta();
        let s = finite_sample(&g, 0, 3);
        let d = finite_sample(&h, 0, 3);
        Ok(verify_duality_chain(&g, &h, &triangle_bijection(), &s, &d)?.holds())
    })]
}

fn star3() -> StructuredGraph {
    star_of_rays(3)
}

pub fn catalog_list() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "double-ray",
            description: "core vertex w with two tails attached by one edge each",
            graph: double_ray,
            facts: double_ray_facts(),
        },
        CatalogEntry {
            name: "ladder",
            description: "two tails with a rung at every level",
            graph: ladder,
            facts: ladder_facts(),
        },
        CatalogEntry {
            name: "fan",
            description: "core vertex u joined to every vertex of one tail",
            graph: fan,
            facts: fan_facts(),
        },
        CatalogEntry {
            name: "ladder-dual",
            description: "planar dual of the ladder, with the edge bijection",
            graph: ladder_dual,
            facts: ladder_pair_facts(),
        },
        CatalogEntry {
            name: "bean",
            description: "double ray y-z-x with core vertex u joined to every vertex of x",
            graph: bean_graph,
            facts: bean_facts(),
        },
        CatalogEntry {
            name: "star-of-rays",
            description: "core vertex c with three tails attached by one edge each",
            graph: star3,
            facts: star_facts(),
        },
        CatalogEntry {
            name: "triangle",
            description: "finite triangle; its dual is three parallel edges",
            graph: triangle,
            facts: triangle_facts(),
        },
    ]
}

pub fn find(name: &str) -> Result<CatalogEntry> {
    catalog_list()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::domain(format!("unknown catalog entry {name:?}")))
}

/// Check every fact of one entry.
pub fn run(entry: &CatalogEntry) -> Vec<FactOutcome> {
    entry
        .facts
        .iter()
        .map(|f| FactOutcome { entry: entry.name, fact: f.name, outcome: f.check().map_err(|e| e.to_string()) })
        .collect()
}
