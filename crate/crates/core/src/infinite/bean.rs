//! The circuit axioms (C1), (C2) and classic elimination, checked on the
//! algebraic cycles of the Bean graph, versus the full elimination axiom.
//!
//! In the catalog Bean graph, a core vertex `u` is joined to every vertex of
//! the tail `x`, and the tails `x` and `y` are joined at level 0 by the patch
//! edge `z`, so `y ∪ z ∪ x` is a double ray. Eliminating every `x`-rail with
//! the triangles `{s_i, s_{i+1}, x_i}` (spokes `s_i`) leaves `y ∪ z ∪ spokes`,
//! which holds no algebraic cycle through `z`: past `z` the only way on is
//! into the star at `u`, which contains no ray. Every finite stage of the
//! elimination still has a witness `y ∪ z ∪ s_0 ∪ s_k ∪ x[k..]`, but these
//! witnesses converge to `y ∪ z ∪ s_0`, which is not a circuit.

use super::expr::EdgeSetExpr;
use super::graph::{EdgeId, FamilyId, StructuredGraph};
use super::oracles::is_mac_circuit;
use super::window::decide;
use super::word::UpWord;
use crate::error::{Error, Result};

/// Number of finite elimination stages exhibited.
pub const STAGES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeanGapCertificate {
    pub sampled_circuits: Vec<EdgeSetExpr>,
    pub c1_holds: bool,
    pub c2_holds: bool,
    pub classic_elimination_holds: bool,
    /// The double ray `y ∪ z ∪ x`.
    pub circuit: EdgeSetExpr,
    /// The eliminated elements: all `x`-rails.
    pub eliminated: EdgeSetExpr,
    /// The first few eliminating triangles; the pattern continues for every rail.
    pub triangles: Vec<EdgeSetExpr>,
    pub element: EdgeId,
    /// `(C ∪ ⋃ C_x) ∖ X`.
    pub allowed: EdgeSetExpr,
    pub no_cycle_through_element: bool,
    /// Stage `k` eliminates the first `k` rails; each comes with a witness circuit.
    pub stages: Vec<(usize, EdgeSetExpr)>,
    pub stages_valid: bool,
    /// Pointwise limit of the stage witnesses.
    pub limit: EdgeSetExpr,
    pub limit_is_circuit: bool,
}

impl BeanGapCertificate {
    /// The weak axioms pass on the sample while full elimination fails.
    pub fn demonstrates_gap(&self) -> bool {
        self.c1_holds
            && self.c2_holds
            && self.classic_elimination_holds
            && self.no_cycle_through_element
            && self.stages_valid
            && !self.limit_is_circuit
    }
}

/// Does `d` contain a finite cycle or a double ray?
pub fn contains_algebraic_cycle(g: &StructuredGraph, d: &EdgeSetExpr) -> Result<bool> {
    decide(g, &[d], |w| {
        let edges = w.edges(d);
        w.has_cycle(&edges)
            || (0..edges.len()).filter(|&k| w.in_prefix(&edges[k])).any(|k| {
                let rays = w.ray_flags(&edges, Some(k));
                rays[edges[k].a] && rays[edges[k].b]
            })
    })
}

/// Is there a finite cycle or double ray through `e` inside `d`?
fn cycle_through(g: &StructuredGraph, d: &EdgeSetExpr, e: &EdgeId) -> Result<bool> {
    let rest = d.without(e);
    let (a, b) = g.endpoints(e)?;
    decide(g, &[d], |w| {
        let edges = w.edges(&rest);
        let (a, b) = (w.id(a).expect("shallow"), w.id(b).expect("shallow"));
        let rays = w.ray_flags(&edges, None);
        a == b || w.union_find(&edges, None).equiv(a, b) || (rays[a] && rays[b])
    })
}

pub fn bean_gap_certificate(g: &StructuredGraph) -> Result<BeanGapCertificate> {
    let x = g.tail("x")?;
    let y = g.tail("y")?;
    let spoke_rule = g
        .coretail_rules()
        .iter()
        .position(|r| r.t == x)
        .ok_or_else(|| Error::domain("expected a core-to-tail rule into tail x"))?;
    let z = EdgeId::Finite("z".into());
    if !g.has_edge(&z) {
        return Err(Error::domain("expected the patch edge z"));
    }
    let fam = |f: FamilyId, w: UpWord| EdgeSetExpr::family(f, w);
    let (xr, yr, sp) = (FamilyId::Rail(x), FamilyId::Rail(y), FamilyId::CoreTail(spoke_rule));
    let y_ray = fam(yr, UpWord::full());
    let zset = EdgeSetExpr::from_edges([&z]);
    let x_rails = fam(xr, UpWord::full());
    let spoke = |i: usize| EdgeId::Family(sp, i);
    let xrail = |i: usize| EdgeId::Family(xr, i);
    let triangle = |i: usize| EdgeSetExpr::from_edges(&[spoke(i), spoke(i + 1), xrail(i)]);

    let circuit = y_ray.union(&zset).union(&x_rails);
    let spokes = fam(sp, UpWord::full());
    let allowed = circuit.union(&spokes).difference(&x_rails);
    let no_cycle_through_element = !cycle_through(g, &allowed, &z)?;

    let witness = |k: usize| {
        y_ray.union(&zset).union(&EdgeSetExpr::from_edges(&[spoke(0), spoke(k)])).union(&fam(xr, UpWord::from_start(k)))
    };
    let mut stages = Vec::new();
    let mut stages_valid = true;
    for k in 1..=STAGES {
        let w = witness(k);
        let eliminated = fam(xr, UpWord::finite(0..k));
        let mut pool = circuit.clone();
        for i in 0..k {
            pool = pool.union(&triangle(i));
        }
        let allowed_k = pool.difference(&eliminated);
        stages_valid &= is_mac_circuit(g, &w)? && w.contains(&z) && w.is_subset(&allowed_k);
        stages.push((k, w));
    }
    let limit = y_ray.union(&zset).union(&EdgeSetExpr::from_edges([&spoke(0)]));
    let limit_is_circuit = is_mac_circuit(g, &limit)?;

    let mut sampled = vec![circuit.clone()];
    sampled.extend((0..4).map(triangle));
    sampled.extend((1..=3).map(witness));
    for (i, j) in [(0, 2), (1, 3), (0, 3)] {
        let path = fam(xr, UpWord::finite(i..j));
        sampled.push(path.union(&EdgeSetExpr::from_edges(&[spoke(i), spoke(j)])));
    }
    let mut all_circuits = true;
    for c in &sampled {
        all_circuits &= is_mac_circuit(g, c)?;
    }
    let c1_holds = all_circuits && sampled.iter().all(|c| !c.is_empty());
    let c2_holds = sampled.iter().all(|a| sampled.iter().all(|b| a == b || !a.is_subset(b)));
    let mut classic = true;
    for (i, a) in sampled.iter().enumerate() {
        for b in &sampled[i + 1..] {
            for e in a.intersect(b).edges_below(4) {
                classic &= contains_algebraic_cycle(g, &a.union(b).without(&e))?;
            }
        }
    }
    Ok(BeanGapCertificate {
        sampled_circuits: sampled,
        c1_holds,
        c2_holds,
        classic_elimination_holds: classic,
        circuit,
        eliminated: x_rails,
        triangles: (0..3).map(triangle).collect(),
        element: z,
        allowed,
        no_cycle_through_element,
        stages,
        stages_valid,
        limit,
        limit_is_circuit,
    })
}
