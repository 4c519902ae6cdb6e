//! The thin-sums matroid of a finite list, a seeded property sweep, and the
//! augmentation counterexample for non-thin ground families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::independence::{brute_force_independent, thinly_independent};
use super::vec::{FnVec, IndexedFamily, ThinFamily};
use crate::axioms::{verify_independence, AxiomReport};
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::set::{elements, full_mask, submasks, GroundSet, Mask, SetFamily, MAX_GROUND};
use crate::FiniteMatroid;

fn mask_indices(m: Mask) -> Vec<usize> {
    elements(m).collect()
}

/// The family of thinly independent sub-lists, over the member names.
pub fn thin_independents(fam: &ThinFamily) -> Result<SetFamily> {
    if fam.len() > MAX_GROUND {
        return Err(Error::domain(format!("{} members exceed the ground-set limit {MAX_GROUND}", fam.len())));
    }
    let ground = GroundSet::new(fam.names().iter().cloned())?;
    let mut members = Vec::new();
    for m in submasks(full_mask(fam.len())) {
        if thinly_independent(fam, &mask_indices(m))? {
            members.push(m);
        }
    }
    SetFamily::new(ground, members)
}

/// Run the independence axioms on the thinly independent sub-lists.
pub fn verify_theorem8(fam: &ThinFamily) -> Result<AxiomReport> {
    Ok(verify_independence(&thin_independents(fam)?))
}

pub fn thin_sums_matroid(fam: &ThinFamily) -> Result<FiniteMatroid> {
    FiniteMatroid::from_independents(&thin_independents(fam)?)
}

/// A random list over `F_2` or `F_3` with at most 7 coordinates and members.
pub fn random_thin_family(seed: u64) -> ThinFamily {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = if rng.gen_bool(0.5) { Field::F2 } else { Field::F3 };
    let width = rng.gen_range(1..=7);
    let len = rng.gen_range(1..=7);
    let rows: Vec<Vec<u32>> =
        (0..len).map(|_| (0..width).map(|_| rng.gen_range(0..field.p())).collect()).collect();
    ThinFamily::from_rows(field, width, &rows).expect("values in range")
}

#[derive(Debug, Clone, Default)]
pub struct Theorem8Sweep {
    pub families: usize,
    /// Seeds whose thinly independent sets fail an independence axiom.
    pub axiom_failures: Vec<u64>,
    /// Seeds where elimination and the brute-force oracle disagree.
    pub rank_disagreements: Vec<u64>,
}

impl Theorem8Sweep {
    pub fn holds(&self) -> bool {
        self.axiom_failures.is_empty() && self.rank_disagreements.is_empty()
    }
}

/// Check `count` random lists with seeds `seed, seed + 1, ...`.
pub fn theorem8_sweep(seed: u64, count: usize, exec: Exec) -> Theorem8Sweep {
    let seeds: Vec<u64> = (0..count as u64).map(|k| seed.wrapping_add(k)).collect();
    let results = exec.map(&seeds, |&s| {
        let fam = random_thin_family(s);
        let axioms_ok = verify_theorem8(&fam).map(|r| r.passed()).unwrap_or(false);
        let agree = submasks(full_mask(fam.len())).all(|m| {
            let s = mask_indices(m);
            matches!(
                (thinly_independent(&fam, &s), brute_force_independent(&fam, &s)),
                (Ok(a), Ok(b)) if a == b
            )
        });
        (s, axioms_ok, agree)
    });
    let mut out = Theorem8Sweep { families: count, ..Default::default() };
    for (s, axioms_ok, agree) in results {
        if !axioms_ok {
            out.axiom_failures.push(s);
        }
        if !agree {
            out.rank_disagreements.push(s);
        }
    }
    out
}

/// Two readings of the indexed family written `{1, n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    /// `{1, ..., n}` for `n >= 1`.
    Interval,
    /// The two-element set `{1, n}` for `n >= 2`.
    Pair,
}

impl Reading {
    pub fn family(self) -> IndexedFamily {
        match self {
            Reading::Interval => IndexedFamily::Intervals,
            Reading::Pair => IndexedFamily::Pairs,
        }
    }
}

/// What the truncation to `A = {1..N}` says under one reading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadingReport {
    pub reading: Reading,
    /// `I` restricted to members with index at most `N`.
    pub i_independent: bool,
    pub i_prime_independent: bool,
    /// `I'` spans the truncated space, so no function can be added to it.
    pub i_prime_spanning: bool,
    /// `I` plus the all-ones function is thinly independent, so `I` is not
    /// maximal. Decided from the closed-form span of `I`.
    pub i_extends_by_all_ones: bool,
    /// Indices `n` for which `I + {n}` stays independent on the truncation.
    pub augmenting: Vec<usize>,
    /// `augmenting` equals `[1]` and `{1}` already lies in `I`.
    pub matches_claim: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct I3Demo {
    pub n: usize,
    /// For `2 <= n <= N`: does `{n} = {1..n} + {1..n-1}` hold over `F_2`?
    pub key_dependences: Vec<(usize, bool)>,
    pub interval: ReadingReport,
    pub pair: ReadingReport,
}

impl I3Demo {
    pub fn key_dependences_hold(&self) -> bool {
        self.key_dependences.iter().all(|&(_, ok)| ok)
    }

    pub fn statuses_agree(&self) -> bool {
        self.interval.augmenting == self.pair.augmenting
    }

    pub fn render(&self) -> String {
        let mut s = format!("augmentation demo on A = {{1..{}}} over F2\n", self.n);
        s += &format!(
            "key dependence {{n}} = {{1..n}} + {{1..n-1}} for 2 <= n <= {}: {}\n",
            self.n,
            if self.key_dependences_hold() { "holds" } else { "fails" }
        );
        for r in [&self.interval, &self.pair] {
            let name = match r.reading {
                Reading::Interval => "interval",
                Reading::Pair => "pair",
            };
            let aug: Vec<String> = r.augmenting.iter().map(|n| format!("{{{n}}}")).collect();
            s += &format!(
                "{name:8} I indep={} I' indep={} I' spanning={} I+ones indep={} augmenting=[{}] matches-claim={}\n",
                r.i_independent,
                r.i_prime_independent,
                r.i_prime_spanning,
                r.i_extends_by_all_ones,
                aug.join(" "),
                r.matches_claim
            );
        }
        s += &format!("readings agree on augmentation: {}\n", self.statuses_agree());
        s
    }
}

fn independent_rows(f: Field, rows: &[Vec<u32>]) -> bool {
    f.rank(rows) == rows.len()
}

fn reading_report(reading: Reading, n: usize) -> ReadingReport {
    let f = Field::F2;
    let fam = reading.family();
    let width = n + 1;
    let i_rows: Vec<Vec<u32>> = (fam.first_index()..=n).map(|k| fam.member(k).truncate(width)).collect();
    let single = |k: usize| IndexedFamily::Singletons.member(k).truncate(width);
    let i_prime: Vec<Vec<u32>> = (1..=n).map(single).collect();

    let augmenting: Vec<usize> = (1..=n)
        .filter(|&k| {
            let x = single(k);
            let mut rows = i_rows.clone();
            if !rows.contains(&x) {
                rows.push(x);
            }
            independent_rows(f, &rows)
        })
        .collect();
    let one_in_i = i_rows.contains(&single(1));
    let ones = FnVec::periodic(1, &[], &[1]).expect("non-empty period");
    ReadingReport {
        reading,
        i_independent: independent_rows(f, &i_rows),
        i_prime_independent: independent_rows(f, &i_prime),
        i_prime_spanning: f.rank(&i_prime) == n,
        i_extends_by_all_ones: fam.thinly_independent(false) && !fam.span_contains(f, &ones),
        matches_claim: augmenting == [1] && one_in_i,
        augmenting,
    }
}

/// Replay the augmentation counterexample on the truncation `A = {1..n}`
/// under both readings of the family `I`.
pub fn i3_counterexample_demo(n: usize) -> Result<I3Demo> {
    if n < 3 {
        return Err(Error::domain("the demo needs N >= 3"));
    }
    let f = Field::F2;
    let iv = IndexedFamily::Intervals;
    let key_dependences = (2..=n)
        .map(|k| (k, IndexedFamily::Singletons.member(k) == iv.member(k).add(f, &iv.member(k - 1))))
        .collect();
    Ok(I3Demo {
        n,
        key_dependences,
        interval: reading_report(Reading::Interval, n),
        pair: reading_report(Reading::Pair, n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog_graphs::k4;
    use crate::graph::finite_cycle_matroid;
    use crate::thin::incidence_family;

    #[test]
    fn standard_basis_is_free() {
        let fam = ThinFamily::from_rows(Field::F2, 3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(verify_theorem8(&fam).unwrap().passed());
        assert_eq!(thin_sums_matroid(&fam).unwrap().rank(), 3);
    }

    #[test]
    fn k4_incidence_is_its_cycle_matroid() {
        let g = k4();
        let m = thin_sums_matroid(&incidence_family(&g)).unwrap();
        let fc = finite_cycle_matroid(&g).unwrap();
        assert_eq!(m.independents().members(), fc.independents().members());
    }

    #[test]
    fn small_sweep() {
        let r = theorem8_sweep(7, 20, Exec::Sequential);
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn demo_n3() {
        let d = i3_counterexample_demo(3).unwrap();
        assert_eq!(d.key_dependences, vec![(2, true), (3, true)]);
        assert!(d.interval.matches_claim);
        assert_eq!(d.pair.augmenting, vec![1, 2, 3]);
        assert!(!d.statuses_agree());
    }

    #[test]
    fn demo_rejects_small_n() {
        assert!(i3_counterexample_demo(2).is_err());
    }
}
