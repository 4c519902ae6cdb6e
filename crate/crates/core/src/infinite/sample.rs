use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::expr::EdgeSetExpr;
use super::graph::StructuredGraph;
use super::oracles::circle_witness;
use super::word::UpWord;
use crate::error::Result;

/// Default seed for sampled sweeps.
pub const DEFAULT_SEED: u64 = 0x5eed;

fn random_word(rng: &mut ChaCha8Rng) -> UpWord {
    match rng.gen_range(0..6) {
        0 => UpWord::empty(),
        1 => UpWord::full(),
        _ => {
            let pre: Vec<bool> = (0..rng.gen_range(0..=4)).map(|_| rng.gen()).collect();
            let period: Vec<bool> = (0..rng.gen_range(1..=4)).map(|_| rng.gen()).collect();
            UpWord::new(pre, period)
        }
    }
}

/// Seeded edge sets: per family a word with preperiod and period at most 4,
/// plus a random subset of the finite edges. The whole edge set, the empty
/// set and each single family are always included.
pub fn standard_sample(g: &StructuredGraph, seed: u64, count: usize) -> Vec<EdgeSetExpr> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let universe = g.universe();
    let mut out = vec![EdgeSetExpr::empty(), universe.clone()];
    for f in g.families() {
        out.push(EdgeSetExpr::family(f, g.family_word(f)));
    }
    let labels = g.finite_labels();
    while out.len() < count {
        let finite: Vec<String> = labels.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        let words: Vec<_> = g.families().into_iter().map(|f| (f, random_word(&mut rng))).collect();
        out.push(EdgeSetExpr::from_parts(finite, words).intersect(&universe));
    }
    out.sort();
    out.dedup();
    out
}

/// Every non-empty set of at most `max_size` edges among the finite edges and
/// the family edges with index below `levels`.
pub fn finite_sample(g: &StructuredGraph, levels: usize, max_size: usize) -> Vec<EdgeSetExpr> {
    let pool = g.universe().edges_below(levels);
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(
        pool: &[super::graph::EdgeId],
        from: usize,
        max: usize,
        pick: &mut Vec<usize>,
        out: &mut Vec<EdgeSetExpr>,
    ) {
        if !pick.is_empty() {
            out.push(EdgeSetExpr::from_edges(pick.iter().map(|&i| &pool[i])));
        }
        if pick.len() == max {
            return;
        }
        for i in from..pool.len() {
            pick.push(i);
            rec(pool, i + 1, max, pick, out);
            pick.pop();
        }
    }
    rec(&pool, 0, max_size, &mut pick, &mut out);
    out
}

/// `count` seeded edge sets containing no circle: random finite sets of
/// shallow edges, and occasionally a sparse periodic family.
pub fn acirclic_sample(g: &StructuredGraph, seed: u64, count: usize) -> Result<Vec<EdgeSetExpr>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let universe = g.universe();
    let pool = universe.edges_below(4);
    let mut out = vec![EdgeSetExpr::empty()];
    let mut attempts = 0;
    while out.len() < count && attempts < 50 * count {
        attempts += 1;
        let mut d = EdgeSetExpr::from_edges(pool.iter().filter(|_| rng.gen_bool(0.3)));
        let fams = g.families();
        if !fams.is_empty() && rng.gen_bool(0.25) {
            let f = fams[rng.gen_range(0..fams.len())];
            let w = UpWord::residues(rng.gen_range(0..3), rng.gen_range(2..=3), &[0]);
            d = d.union(&EdgeSetExpr::family(f, w)).intersect(&universe);
        }
        if !out.contains(&d) && circle_witness(g, &d)?.is_none() {
            out.push(d);
        }
    }
    Ok(out)
}
