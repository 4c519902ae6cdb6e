use super::expr::EdgeSetExpr;
use super::word::UpWord;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// One infinite edge family of a structured graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// Rail edges `v(t,i) v(t,i+1)` of tail `t`.
    Rail(usize),
    /// Edges generated by cross rule `k`; index `i` is the level on the first tail.
    Cross(usize),
    /// Edges generated by core-to-tail rule `k`; index `i` is the tail level.
    CoreTail(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Core(usize),
    Tail(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeId {
    /// A core edge or a patch addition, by label.
    Finite(String),
    Family(FamilyId, usize),
}

/// Edges `v(t,i) v(t2,i+delta)` for `i >= start` with `i mod period` in `residues`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossRule {
    pub t: usize,
    pub t2: usize,
    pub delta: i64,
    pub start: usize,
    pub period: usize,
    pub residues: Vec<usize>,
}

/// Edges `u v(t,i)` for `i >= start` with `i mod period` in `residues`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreTailRule {
    pub u: usize,
    pub t: usize,
    pub start: usize,
    pub period: usize,
    pub residues: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatchEdge {
    pub label: String,
    pub u: Vertex,
    pub v: Vertex,
}

/// A finitely presented infinite graph: a finite core multigraph, one-way
/// infinite tails, periodic rules joining tails to each other and to core
/// vertices, and a finite patch of added or removed edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StructuredGraph {
    core: MultiGraph,
    tails: Vec<String>,
    cross: Vec<CrossRule>,
    coretail: Vec<CoreTailRule>,
    added: Vec<PatchEdge>,
    removed: Vec<EdgeId>,
}

fn check_name(s: &str) -> Result<()> {
    if s.is_empty() || s.contains([':', '@']) || s.chars().any(char::is_whitespace) {
        return Err(Error::domain(format!("label {s:?} must be non-empty without ':', '@' or spaces")));
    }
    Ok(())
}

fn check_rule(start: usize, period: usize, residues: &[usize]) -> Result<()> {
    let _ = start;
    if period == 0 || residues.iter().any(|&r| r >= period) {
        return Err(Error::domain(format!("residues {residues:?} invalid for period {period}")));
    }
    Ok(())
}

impl StructuredGraph {
    /// A graph with the given finite core and nothing else.
    pub fn new(core: MultiGraph) -> Result<Self> {
        for v in core.vertices() {
            check_name(v)?;
        }
        for e in core.edges() {
            check_name(&e.label)?;
        }
        Ok(StructuredGraph { core, ..Default::default() })
    }

    pub fn add_tail(&mut self, name: &str) -> Result<usize> {
        check_name(name)?;
        if self.tails.iter().any(|t| t == name) {
            return Err(Error::domain(format!("duplicate tail {name}")));
        }
        self.tails.push(name.to_string());
        Ok(self.tails.len() - 1)
    }

    pub fn add_cross(&mut self, rule: CrossRule) -> Result<usize> {
        check_rule(rule.start, rule.period, &rule.residues)?;
        if rule.t >= self.tails.len() || rule.t2 >= self.tails.len() {
            return Err(Error::domain("cross rule names an unknown tail"));
        }
        if rule.t == rule.t2 && rule.delta == 0 {
            return Err(Error::domain("cross rule with zero offset on one tail would generate loops"));
        }
        self.cross.push(rule);
        Ok(self.cross.len() - 1)
    }

    pub fn add_coretail(&mut self, rule: CoreTailRule) -> Result<usize> {
        check_rule(rule.start, rule.period, &rule.residues)?;
        if rule.u >= self.core.vertex_count() || rule.t >= self.tails.len() {
            return Err(Error::domain("core-tail rule names an unknown vertex or tail"));
        }
        self.coretail.push(rule);
        Ok(self.coretail.len() - 1)
    }

    pub fn patch_add(&mut self, label: &str, u: Vertex, v: Vertex) -> Result<()> {
        check_name(label)?;
        if self.finite_labels_all().any(|l| l == label) {
            return Err(Error::domain(format!("duplicate edge label {label}")));
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.added.push(PatchEdge { label: label.to_string(), u, v });
        Ok(())
    }

    /// Remove one existing edge. Patch additions cannot be removed.
    pub fn patch_remove(&mut self, e: EdgeId) -> Result<()> {
        let exists = match &e {
            EdgeId::Finite(l) => self.core.edges().iter().any(|c| &c.label == l),
            EdgeId::Family(f, i) => self.raw_word(*f)?.get(*i),
        };
        if !exists {
            return Err(Error::domain(format!("cannot remove {}: no such core or family edge", self.edge_name(&e))));
        }
        if !self.removed.contains(&e) {
            self.removed.push(e);
        }
        Ok(())
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        match v {
            Vertex::Core(u) if u < self.core.vertex_count() => Ok(()),
            Vertex::Tail(t, _) if t < self.tails.len() => Ok(()),
            _ => Err(Error::domain("unknown vertex")),
        }
    }

    fn finite_labels_all(&self) -> impl Iterator<Item = &str> {
        self.core.edges().iter().map(|e| e.label.as_str()).chain(self.added.iter().map(|p| p.label.as_str()))
    }

    pub fn core(&self) -> &MultiGraph {
        &self.core
    }

    pub fn tails(&self) -> &[String] {
        &self.tails
    }

    pub fn cross_rules(&self) -> &[CrossRule] {
        &self.cross
    }

    pub fn coretail_rules(&self) -> &[CoreTailRule] {
        &self.coretail
    }

    pub fn patch_added(&self) -> &[PatchEdge] {
        &self.added
    }

    pub fn patch_removed(&self) -> &[EdgeId] {
        &self.removed
    }

    pub fn tail(&self, name: &str) -> Result<usize> {
        self.tails.iter().position(|t| t == name).ok_or_else(|| Error::domain(format!("unknown tail {name:?}")))
    }

    pub fn families(&self) -> Vec<FamilyId> {
        let mut f: Vec<FamilyId> = (0..self.tails.len()).map(FamilyId::Rail).collect();
        f.extend((0..self.cross.len()).map(FamilyId::Cross));
        f.extend((0..self.coretail.len()).map(FamilyId::CoreTail));
        f
    }

    fn raw_word(&self, f: FamilyId) -> Result<UpWord> {
        Ok(match f {
            FamilyId::Rail(t) if t < self.tails.len() => UpWord::full(),
            FamilyId::Cross(k) if k < self.cross.len() => {
                let r = &self.cross[k];
                let start = r.start.max((-r.delta).max(0) as usize);
                UpWord::residues(start, r.period, &r.residues)
            }
            FamilyId::CoreTail(k) if k < self.coretail.len() => {
                let r = &self.coretail[k];
                UpWord::residues(r.start, r.period, &r.residues)
            }
            _ => return Err(Error::domain(format!("unknown edge family {f:?}"))),
        })
    }

    /// Existing edges of family `f` after patch removals.
    pub fn family_word(&self, f: FamilyId) -> UpWord {
        let gone = self.removed.iter().filter_map(|e| match e {
            EdgeId::Family(g, i) if *g == f => Some(*i),
            _ => None,
        });
        self.raw_word(f).expect("family of this graph").difference(&UpWord::finite(gone))
    }

    pub fn finite_labels(&self) -> Vec<String> {
        self.finite_labels_all()
            .filter(|l| !self.removed.contains(&EdgeId::Finite(l.to_string())))
            .map(str::to_string)
            .collect()
    }

    pub fn universe(&self) -> EdgeSetExpr {
        EdgeSetExpr::from_parts(self.finite_labels(), self.families().into_iter().map(|f| (f, self.family_word(f))))
    }

    pub fn complement(&self, d: &EdgeSetExpr) -> EdgeSetExpr {
        self.universe().difference(d)
    }

    pub fn has_edge(&self, e: &EdgeId) -> bool {
        match e {
            EdgeId::Finite(l) => self.finite_labels().iter().any(|x| x == l),
            EdgeId::Family(f, i) => self.raw_word(*f).is_ok() && self.family_word(*f).get(*i),
        }
    }

    pub fn family_endpoints(&self, f: FamilyId, i: usize) -> (Vertex, Vertex) {
        match f {
            FamilyId::Rail(t) => (Vertex::Tail(t, i), Vertex::Tail(t, i + 1)),
            FamilyId::Cross(k) => {
                let r = &self.cross[k];
                (Vertex::Tail(r.t, i), Vertex::Tail(r.t2, (i as i64 + r.delta) as usize))
            }
            FamilyId::CoreTail(k) => {
                let r = &self.coretail[k];
                (Vertex::Core(r.u), Vertex::Tail(r.t, i))
            }
        }
    }

    pub fn endpoints(&self, e: &EdgeId) -> Result<(Vertex, Vertex)> {
        if !self.has_edge(e) {
            return Err(Error::domain(format!("{} is not an edge", self.edge_name(e))));
        }
        Ok(match e {
            EdgeId::Finite(l) => {
                if let Some(c) = self.core.edges().iter().find(|c| &c.label == l) {
                    (Vertex::Core(c.u), Vertex::Core(c.v))
                } else {
                    let p = self.added.iter().find(|p| &p.label == l).expect("has_edge checked");
                    (p.u, p.v)
                }
            }
            EdgeId::Family(f, i) => self.family_endpoints(*f, *i),
        })
    }

    /// All edges at `v`.
    pub fn incident(&self, v: Vertex) -> EdgeSetExpr {
        let mut out = EdgeSetExpr::empty();
        for l in self.finite_labels() {
            let id = EdgeId::Finite(l);
            let (a, b) = self.endpoints(&id).expect("listed edge");
            if a == v || b == v {
                out.insert(&id);
            }
        }
        let mut words = Vec::new();
        match v {
            Vertex::Core(u) => {
                for (k, r) in self.coretail.iter().enumerate() {
                    if r.u == u {
                        words.push((FamilyId::CoreTail(k), UpWord::full()));
                    }
                }
            }
            Vertex::Tail(t, i) => {
                words.push((FamilyId::Rail(t), UpWord::finite([i])));
                if i > 0 {
                    words.push((FamilyId::Rail(t), UpWord::finite([i - 1])));
                }
                for (k, r) in self.cross.iter().enumerate() {
                    if r.t == t {
                        words.push((FamilyId::Cross(k), UpWord::finite([i])));
                    }
                    let j = i as i64 - r.delta;
                    if r.t2 == t && j >= 0 {
                        words.push((FamilyId::Cross(k), UpWord::finite([j as usize])));
                    }
                }
                for (k, r) in self.coretail.iter().enumerate() {
                    if r.t == t {
                        words.push((FamilyId::CoreTail(k), UpWord::finite([i])));
                    }
                }
            }
        }
        out.union(&EdgeSetExpr::from_parts([], words)).intersect(&self.universe())
    }

    /// Deepest tail level named by the patch, plus one.
    pub fn patch_depth(&self) -> usize {
        let lvl = |v: &Vertex| match v {
            Vertex::Tail(_, i) => i + 1,
            Vertex::Core(_) => 0,
        };
        let adds = self.added.iter().map(|p| lvl(&p.u).max(lvl(&p.v)));
        let rems = self.removed.iter().map(|e| match e {
            EdgeId::Family(f, i) => {
                let (a, b) = self.family_endpoints(*f, *i);
                lvl(&a).max(lvl(&b))
            }
            EdgeId::Finite(_) => 0,
        });
        adds.chain(rems).max().unwrap_or(0)
    }

    pub fn max_offset(&self) -> usize {
        self.cross.iter().map(|r| r.delta.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn rule_starts(&self) -> impl Iterator<Item = usize> + '_ {
        self.cross.iter().map(|r| r.start).chain(self.coretail.iter().map(|r| r.start))
    }

    pub fn rule_periods(&self) -> impl Iterator<Item = usize> + '_ {
        self.cross.iter().map(|r| r.period).chain(self.coretail.iter().map(|r| r.period))
    }

    pub fn vertex_name(&self, v: Vertex) -> String {
        match v {
            Vertex::Core(u) => self.core.vertices()[u].clone(),
            Vertex::Tail(t, i) => format!("{}:{i}", self.tails[t]),
        }
    }

    pub fn family_name(&self, f: FamilyId) -> String {
        match f {
            FamilyId::Rail(t) => format!("rail:{}", self.tails.get(t).map_or("?", |s| s.as_str())),
            FamilyId::Cross(k) => format!("cross:{k}"),
            FamilyId::CoreTail(k) => format!("coretail:{k}"),
        }
    }

    pub fn edge_name(&self, e: &EdgeId) -> String {
        match e {
            EdgeId::Finite(l) => l.clone(),
            EdgeId::Family(f, i) => format!("@{}:{i}", self.family_name(*f)),
        }
    }

    pub fn parse_vertex(&self, s: &str) -> Result<Vertex> {
        match s.split_once(':') {
            Some((t, i)) => {
                let i = i.parse().map_err(|_| Error::domain(format!("bad tail level in {s:?}")))?;
                Ok(Vertex::Tail(self.tail(t)?, i))
            }
            None => Ok(Vertex::Core(self.core.vertex(s)?)),
        }
    }

    pub fn parse_family(&self, s: &str) -> Result<FamilyId> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| Error::domain(format!("bad family {s:?}")))?;
        let idx = |r: &str, n: usize| -> Result<usize> {
            r.parse::<usize>()
                .ok()
                .filter(|&k| k < n)
                .ok_or_else(|| Error::domain(format!("unknown rule index in {s:?}")))
        };
        match kind {
            "rail" => Ok(FamilyId::Rail(self.tail(rest)?)),
            "cross" => Ok(FamilyId::Cross(idx(rest, self.cross.len())?)),
            "coretail" => Ok(FamilyId::CoreTail(idx(rest, self.coretail.len())?)),
            _ => Err(Error::domain(format!("unknown family kind {kind:?}"))),
        }
    }

    /// Parse `label` or `@<family>:<index>`.
    pub fn parse_edge(&self, s: &str) -> Result<EdgeId> {
        match s.strip_prefix('@') {
            Some(r) => {
                let (f, i) = r.rsplit_once(':').ok_or_else(|| Error::domain(format!("bad edge {s:?}")))?;
                let i = i.parse().map_err(|_| Error::domain(format!("bad index in {s:?}")))?;
                Ok(EdgeId::Family(self.parse_family(f)?, i))
            }
            None => Ok(EdgeId::Finite(s.to_string())),
        }
    }
}
