//! Finite truncations of a structured graph.
//!
//! Past a threshold level `N` the graph and every expression under study are
//! periodic with block length `B`. Predicates are evaluated on the window of
//! levels `< W` for two depths `W = N + 6B` and `W = N + 12B`; if the answers
//! differ the question is refused rather than guessed.
//!
//! Within a window, a level is *interior* below `W - 2B`, and the *last
//! block* is `[W - B, W)`. A component reaching from the interior into the
//! last block is treated as infinite; components that never meet the interior
//! are ignored, since periodicity places a copy of them in the interior.

use num_integer::Integer;
use petgraph::unionfind::UnionFind;

use super::expr::EdgeSetExpr;
use super::graph::{EdgeId, FamilyId, StructuredGraph, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Params {
    pub n: usize,
    pub block: usize,
}

pub(crate) fn params(g: &StructuredGraph, exprs: &[&EdgeSetExpr]) -> Params {
    let n = 1 + g
        .rule_starts()
        .chain([g.max_offset(), g.patch_depth()])
        .chain(exprs.iter().map(|e| e.max_preperiod()))
        .max()
        .unwrap_or(0);
    let p = g.rule_periods().chain(exprs.iter().flat_map(|e| e.periods())).fold(1, |a, b| a.lcm(&b));
    let block = p * (g.max_offset() + 1).div_ceil(p);
    Params { n, block }
}

/// Evaluate `f` at two window depths and insist on agreement.
pub(crate) fn decide<R: PartialEq + std::fmt::Debug>(
    g: &StructuredGraph,
    exprs: &[&EdgeSetExpr],
    f: impl Fn(&Window) -> R,
) -> Result<R> {
    let p = params(g, exprs);
    let shallow = f(&Window::new(g, p, p.n + 6 * p.block));
    let deep = f(&Window::new(g, p, p.n + 12 * p.block));
    if shallow != deep {
        return Err(Error::refused(format!(
            "truncation is unstable (depth {} gives {shallow:?}, depth {} gives {deep:?})",
            p.n + 6 * p.block,
            p.n + 12 * p.block
        )));
    }
    Ok(shallow)
}

/// Tail-to-end labels: tails joined by a cross rule with infinitely many edges,
/// or dominated by a common core vertex, share an end.
pub(crate) fn end_labels(g: &StructuredGraph) -> (Vec<usize>, usize) {
    let mut uf = UnionFind::new(g.tails().len());
    for (k, r) in g.cross_rules().iter().enumerate() {
        if !g.family_word(FamilyId::Cross(k)).is_finite() {
            uf.union(r.t, r.t2);
        }
    }
    let dom = dominations(g);
    for &(u, t) in &dom {
        for &(u2, t2) in &dom {
            if u == u2 {
                uf.union(t, t2);
            }
        }
    }
    let raw = uf.into_labeling();
    let mut ids: Vec<usize> = raw.clone();
    ids.sort_unstable();
    ids.dedup();
    let labels = raw.iter().map(|r| ids.binary_search(r).expect("present")).collect();
    (labels, ids.len())
}

/// Pairs (core vertex, tail) joined by infinitely many edges.
pub(crate) fn dominations(g: &StructuredGraph) -> Vec<(usize, usize)> {
    g.coretail_rules()
        .iter()
        .enumerate()
        .filter(|(k, _)| !g.family_word(FamilyId::CoreTail(*k)).is_finite())
        .map(|(_, r)| (r.u, r.t))
        .collect()
}

#[derive(Debug, Clone)]
pub(crate) struct WEdge {
    pub id: EdgeId,
    pub a: usize,
    pub b: usize,
    /// Rail or cross edge: both ends on tails.
    pub internal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Vertices of the edge set only.
    Own,
    /// Every vertex of the graph.
    Spanning,
}

#[derive(Debug, Clone)]
pub(crate) struct Units {
    pub count: usize,
    /// Unit of each window vertex, when its component is kept.
    pub of_vertex: Vec<Option<usize>>,
    pub components: usize,
    pub ends_in_closure: Vec<usize>,
}

impl Units {
    pub fn same(&self, a: usize, b: usize) -> bool {
        matches!((self.of_vertex[a], self.of_vertex[b]), (Some(x), Some(y)) if x == y)
    }
}

pub(crate) struct Window<'g> {
    pub g: &'g StructuredGraph,
    pub p: Params,
    pub depth: usize,
    nc: usize,
    pub end_of_tail: Vec<usize>,
    pub n_ends: usize,
    /// Core vertices dominating each end.
    pub dominators: Vec<Vec<usize>>,
}

impl<'g> Window<'g> {
    pub fn new(g: &'g StructuredGraph, p: Params, depth: usize) -> Self {
        let (end_of_tail, n_ends) = end_labels(g);
        let mut dominators = vec![Vec::new(); n_ends];
        for (u, t) in dominations(g) {
            let d = &mut dominators[end_of_tail[t]];
            if !d.contains(&u) {
                d.push(u);
            }
        }
        Window { g, p, depth, nc: g.core().vertex_count(), end_of_tail, n_ends, dominators }
    }

    pub fn vertex_count(&self) -> usize {
        self.nc + self.g.tails().len() * self.depth
    }

    pub fn id(&self, v: Vertex) -> Option<usize> {
        match v {
            Vertex::Core(u) => Some(u),
            Vertex::Tail(t, i) => (i < self.depth).then(|| self.nc + t * self.depth + i),
        }
    }

    pub fn vertex(&self, id: usize) -> Vertex {
        if id < self.nc {
            Vertex::Core(id)
        } else {
            let k = id - self.nc;
            Vertex::Tail(k / self.depth, k % self.depth)
        }
    }

    pub fn level(&self, id: usize) -> Option<usize> {
        (id >= self.nc).then(|| (id - self.nc) % self.depth)
    }

    pub fn tail_of(&self, id: usize) -> Option<usize> {
        (id >= self.nc).then(|| (id - self.nc) / self.depth)
    }

    pub fn is_interior(&self, id: usize) -> bool {
        self.level(id).is_none_or(|l| l < self.depth - 2 * self.p.block)
    }

    pub fn is_last(&self, id: usize) -> bool {
        self.level(id).is_some_and(|l| l >= self.depth - self.p.block)
    }

    /// Levels below which per-edge and per-vertex checks are made.
    pub fn prefix(&self) -> usize {
        self.p.n + 2 * self.p.block
    }

    pub fn in_prefix(&self, e: &WEdge) -> bool {
        match &e.id {
            EdgeId::Finite(_) => true,
            EdgeId::Family(_, i) => *i < self.prefix(),
        }
    }

    pub fn edges(&self, d: &EdgeSetExpr) -> Vec<WEdge> {
        let mut out = Vec::new();
        for e in d.edges_below(self.depth) {
            let Ok((u, v)) = self.g.endpoints(&e) else { continue };
            if let (Some(a), Some(b)) = (self.id(u), self.id(v)) {
                let internal = matches!(e, EdgeId::Family(FamilyId::Rail(_) | FamilyId::Cross(_), _));
                out.push(WEdge { id: e, a, b, internal });
            }
        }
        out
    }

    pub fn union_find(&self, edges: &[WEdge], skip: Option<usize>) -> UnionFind<usize> {
        let mut uf = UnionFind::new(self.vertex_count());
        for (k, e) in edges.iter().enumerate() {
            if Some(k) != skip {
                uf.union(e.a, e.b);
            }
        }
        uf
    }

    pub fn has_cycle(&self, edges: &[WEdge]) -> bool {
        let mut uf = UnionFind::new(self.vertex_count());
        !edges.iter().all(|e| uf.union(e.a, e.b))
    }

    /// Number of graph components meeting the interior, over all vertices.
    pub fn component_count(&self, edges: &[WEdge]) -> usize {
        let uf = self.union_find(edges, None);
        let mut roots: Vec<usize> =
            (0..self.vertex_count()).filter(|&v| self.is_interior(v)).map(|v| uf.find(v)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    /// For each vertex: does its component (over `edges` minus `skip`) contain a
    /// ray? A ray must eventually run along tail edges, so it shows as a piece
    /// of rail and cross edges reaching from the interior into the last block.
    pub fn ray_flags(&self, edges: &[WEdge], skip: Option<usize>) -> Vec<bool> {
        let n = self.vertex_count();
        let mut inner = UnionFind::new(n);
        for (k, e) in edges.iter().enumerate() {
            if e.internal && Some(k) != skip {
                inner.union(e.a, e.b);
            }
        }
        let (mut lo, mut hi) = (vec![false; n], vec![false; n]);
        let touched: Vec<usize> = edges
            .iter()
            .enumerate()
            .filter(|(k, e)| e.internal && Some(*k) != skip)
            .flat_map(|(_, e)| [e.a, e.b])
            .collect();
        for &v in &touched {
            let r = inner.find(v);
            lo[r] |= self.is_interior(v);
            hi[r] |= self.is_last(v);
        }
        let whole = self.union_find(edges, skip);
        let mut has = vec![false; n];
        for &v in &touched {
            let r = inner.find(v);
            if lo[r] && hi[r] {
                has[whole.find(v)] = true;
            }
        }
        (0..n).map(|v| has[whole.find(v)]).collect()
    }

    /// Topological pieces of the closure of `edges` (with their vertices, or
    /// with all vertices), where ends and the vertices dominating them are
    /// identified.
    pub fn units(&self, edges: &[WEdge], mode: Mode) -> Units {
        let n = self.vertex_count();
        let uf = self.union_find(edges, None);
        let mut relevant = vec![mode == Mode::Spanning; n];
        for e in edges {
            relevant[e.a] = true;
            relevant[e.b] = true;
        }
        let mut interior = vec![false; n];
        for v in (0..n).filter(|&v| relevant[v] && self.is_interior(v)) {
            interior[uf.find(v)] = true;
        }
        let mut in_closure = vec![mode == Mode::Spanning; self.n_ends];
        for e in edges {
            for v in [e.a, e.b] {
                if self.is_last(v) {
                    in_closure[self.end_of_tail[self.tail_of(v).expect("tail vertex")]] = true;
                }
            }
        }
        // nodes 0..n are vertex roots, n..n+ends are ends
        let mut bip = UnionFind::new(n + self.n_ends);
        for v in (0..n).filter(|&v| relevant[v] && interior[uf.find(v)]) {
            let r = uf.find(v);
            if self.is_last(v) {
                let end = self.end_of_tail[self.tail_of(v).expect("tail vertex")];
                if in_closure[end] {
                    bip.union(r, n + end);
                }
            }
        }
        for (end, doms) in self.dominators.iter().enumerate() {
            for &u in doms {
                if in_closure[end] && relevant[u] {
                    bip.union(uf.find(u), n + end);
                }
            }
        }
        let mut of_vertex = vec![None; n];
        let mut nodes = Vec::new();
        let mut comps = Vec::new();
        for v in 0..n {
            let r = uf.find(v);
            if relevant[v] && interior[r] {
                of_vertex[v] = Some(bip.find(r));
                nodes.push(bip.find(r));
                comps.push(r);
            }
        }
        let ends_in_closure: Vec<usize> = (0..self.n_ends).filter(|&e| in_closure[e]).collect();
        nodes.extend(ends_in_closure.iter().map(|&e| bip.find(n + e)));
        nodes.sort_unstable();
        nodes.dedup();
        comps.sort_unstable();
        comps.dedup();
        Units { count: nodes.len(), of_vertex, components: comps.len(), ends_in_closure }
    }

    /// Number of edge-disjoint rays of `edges` into each end, capped at 3.
    pub fn end_degrees(&self, edges: &[WEdge]) -> Vec<usize> {
        (0..self.n_ends).map(|end| self.end_degree(edges, end)).collect()
    }

    fn end_degree(&self, edges: &[WEdge], end: usize) -> usize {
        let n = self.vertex_count();
        let on_end = |v: usize| self.tail_of(v).is_some_and(|t| self.end_of_tail[t] == end);
        let (s, t) = (n, n + 1);
        let mut net = FlowNet::new(n + 2);
        for e in edges.iter().filter(|e| e.internal && on_end(e.a) && on_end(e.b) && e.a != e.b) {
            net.add_undirected(e.a, e.b, 1);
        }
        let front = self.p.n + self.p.block;
        for v in (0..n).filter(|&v| on_end(v)) {
            if self.level(v).is_some_and(|l| l < front) {
                net.add(s, v, usize::MAX / 4);
            }
            if self.is_last(v) {
                net.add(v, t, usize::MAX / 4);
            }
        }
        net.max_flow(s, t, 3)
    }
}

/// Unit-capacity max flow by shortest augmenting paths.
struct FlowNet {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<usize>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet { adj: vec![Vec::new(); n], to: Vec::new(), cap: Vec::new() }
    }

    fn push(&mut self, a: usize, b: usize, c: usize) {
        self.adj[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
    }

    fn add(&mut self, a: usize, b: usize, c: usize) {
        self.push(a, b, c);
        self.push(b, a, 0);
    }

    fn add_undirected(&mut self, a: usize, b: usize, c: usize) {
        self.push(a, b, c);
        self.push(b, a, c);
    }

    fn max_flow(&mut self, s: usize, t: usize, cap: usize) -> usize {
        let mut flow = 0;
        while flow < cap {
            let mut prev = vec![usize::MAX; self.adj.len()];
            let mut queue = std::collections::VecDeque::from([s]);
            prev[s] = usize::MAX - 1;
            while let Some(x) = queue.pop_front() {
                for &e in &self.adj[x] {
                    let y = self.to[e];
                    if self.cap[e] > 0 && prev[y] == usize::MAX {
                        prev[y] = e;
                        queue.push_back(y);
                    }
                }
            }
            if prev[t] == usize::MAX {
                break;
            }
            let mut y = t;
            while y != s {
                let e = prev[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}
