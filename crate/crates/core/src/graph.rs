//! Labeled simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` neighbor mask per vertex, so every subset
//! operation used by the engine is a handful of word instructions. Graphs are
//! immutable once built; every construction returns a fresh value.

use std::fmt;
use std::ops::ControlFlow;

use crate::error::{Error, Result, MAX_VERTICES};

/// Largest graph accepted by the maximal-stable-set enumeration.
pub const WELL_COVERED_CAP: usize = 32;

/// A subset of `{0, …, n-1}` encoded as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An induced subgraph together with the original index of each of its
/// vertices. `origin` is strictly increasing (order-preserving compaction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub graph: Graph,
    pub origin: Vec<usize>,
}

/// Simple undirected graph on at most 64 vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

fn check_capacity(what: &str, n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::capacity(what, n as u64))
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        check_capacity("edgeless graph", n)?;
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_capacity("complete graph", n)?;
        let full = VertexSet::full(n).0;
        Ok(Graph {
            adj: (0..n).map(|v| full & !(1u64 << v)).collect(),
        })
    }

    /// Builds a simple graph from an edge list. Duplicate pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_capacity("edge list", n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Graph { adj })
    }

    /// Parses the plain edge-list text format: first line `n`, then one
    /// `u v` pair per line. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_err = |line: usize, message: String| Error::Parse {
            line,
            column: 1,
            message,
        };
        let (line, first) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing vertex count".into()))?;
        let n: usize = first
            .parse()
            .map_err(|_| parse_err(line, format!("bad vertex count `{first}`")))?;
        let mut edges = Vec::new();
        for (line, l) in lines {
            let mut it = l.split_whitespace();
            let mut next = || -> Result<usize> {
                let tok = it
                    .next()
                    .ok_or_else(|| parse_err(line, "expected `u v`".into()))?;
                tok.parse()
                    .map_err(|_| parse_err(line, format!("bad vertex index `{tok}`")))
            };
            let u = next()?;
            let v = next()?;
            if it.next().is_some() {
                return Err(parse_err(line, "trailing tokens after `u v`".into()));
            }
            edges.push((u, v));
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | (1u64 << v))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in VertexSet(self.adj[u] >> u >> 1 << 1 << u).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Sorted (descending) degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// `g1 ⊔ g2`: vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.n();
        check_capacity("disjoint union", n1 + other.n())?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&m| m << n1));
        Ok(Graph { adj })
    }

    /// Zykov sum `g1 ⊎ g2`: disjoint union plus every cross edge.
    pub fn zykov_sum(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.n();
        check_capacity("Zykov sum", n1 + other.n())?;
        let left = VertexSet::full(n1).0;
        let right = VertexSet::full(n1 + other.n()).0 & !left;
        let mut adj: Vec<u64> = self.adj.iter().map(|&m| m | right).collect();
        adj.extend(other.adj.iter().map(|&m| (m << n1) | left));
        Ok(Graph { adj })
    }

    /// `G*`: pendant vertex `i + n` hangs off each original vertex `i`.
    pub fn star(&self) -> Result<Graph> {
        let n = self.n();
        check_capacity("star", 2 * n)?;
        let mut adj: Vec<u64> = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &m)| m | (1u64 << (i + n)))
            .collect();
        adj.extend((0..n).map(|i| 1u64 << i));
        Ok(Graph { adj })
    }

    /// `g1 ⊘ g2` through the single bridge `(u, v + n1)`.
    pub fn edge_join(&self, u: usize, other: &Graph, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        let n1 = self.n();
        let mut g = self.disjoint_union(other)?;
        g.adj[u] |= 1u64 << (v + n1);
        g.adj[v + n1] |= 1u64 << u;
        Ok(g)
    }

    /// Subgraph induced by `keep`, compacted in increasing index order.
    pub fn induced(&self, keep: VertexSet) -> Result<Relabeled> {
        if !keep.is_subset(self.vertices()) {
            let bad = keep.difference(self.vertices()).first().unwrap_or(0);
            return Err(Error::InvalidVertex {
                vertex: bad,
                n: self.n(),
            });
        }
        let origin: Vec<usize> = keep.iter().collect();
        let adj = origin
            .iter()
            .map(|&old| compact(self.adj[old] & keep.0, keep.0))
            .collect();
        Ok(Relabeled {
            graph: Graph { adj },
            origin,
        })
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Relabeled> {
        self.check_vertex(v)?;
        self.induced(self.vertices().without(v))
    }

    /// `G - N[v]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Relabeled> {
        self.check_vertex(v)?;
        self.induced(self.vertices().difference(self.closed_neighbors(v)))
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// their smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within.0;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0u64;
                for v in VertexSet(frontier).iter() {
                    next |= self.adj[v];
                }
                next &= within.0 & !comp;
                comp |= next;
                frontier = next;
            }
            rest &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.is_connected() && self.edge_count() == self.n() - 1
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// True iff no two members of `s` are adjacent.
    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    /// True iff no vertex has three pairwise non-adjacent neighbors.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n()).all(|v| {
            let nbrs: Vec<usize> = self.neighbors(v).iter().collect();
            for (i, &a) in nbrs.iter().enumerate() {
                for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    let common_free = !(self.adj[a] | self.adj[b]);
                    if nbrs[j + 1..].iter().any(|&c| common_free >> c & 1 == 1) {
                        return false;
                    }
                }
            }
            true
        })
    }

    /// Stability number by branch and bound, independent of the polynomial
    /// engine.
    pub fn alpha_search(&self) -> usize {
        fn go(g: &Graph, cand: u64, size: usize, best: &mut usize) {
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            // A vertex of degree <= 1 inside `cand` can always be taken.
            let mut pivot = usize::MAX;
            let mut pivot_deg = 0;
            for v in VertexSet(cand).iter() {
                let d = (g.adj[v] & cand).count_ones();
                if d <= 1 {
                    go(g, cand & !(g.adj[v] | 1u64 << v), size + 1, best);
                    return;
                }
                if d > pivot_deg {
                    pivot_deg = d;
                    pivot = v;
                }
            }
            go(g, cand & !(g.adj[pivot] | 1u64 << pivot), size + 1, best);
            go(g, cand & !(1u64 << pivot), size, best);
        }
        let mut best = 0;
        go(self, self.vertices().0, 0, &mut best);
        best
    }

    /// Visits every maximal stable set (Bron–Kerbosch with pivoting on the
    /// complement). The visitor may stop the walk early.
    pub fn for_each_maximal_stable_set<F>(&self, mut visit: F) -> Result<()>
    where
        F: FnMut(VertexSet) -> ControlFlow<()>,
    {
        if self.n() > WELL_COVERED_CAP {
            return Err(Error::Capacity {
                what: "maximal stable set enumeration".into(),
                needed: self.n() as u64,
                limit: WELL_COVERED_CAP as u64,
            });
        }
        // In the complement, the "neighbors" of v are its non-neighbors.
        fn go<F: FnMut(VertexSet) -> ControlFlow<()>>(
            g: &Graph,
            r: u64,
            mut p: u64,
            mut x: u64,
            visit: &mut F,
        ) -> ControlFlow<()> {
            if p == 0 && x == 0 {
                return visit(VertexSet(r));
            }
            let pivot = VertexSet(p | x)
                .iter()
                .max_by_key(|&u| (p & !(g.adj[u] | 1u64 << u)).count_ones())
                .expect("p | x nonempty");
            let branch = p & (g.adj[pivot] | 1u64 << pivot);
            for v in VertexSet(branch).iter() {
                let keep = !(g.adj[v] | 1u64 << v);
                go(g, r | 1u64 << v, p & keep, x & keep, visit)?;
                p &= !(1u64 << v);
                x |= 1u64 << v;
            }
            ControlFlow::Continue(())
        }
        let _ = go(self, 0, self.vertices().0, 0, &mut visit);
        Ok(())
    }

    /// All maximal stable sets share one cardinality. Requires `n <= 32`.
    pub fn is_well_covered(&self) -> Result<bool> {
        let mut size = None;
        let mut uniform = true;
        self.for_each_maximal_stable_set(|s| match size {
            None => {
                size = Some(s.len());
                ControlFlow::Continue(())
            }
            Some(k) if k == s.len() => ControlFlow::Continue(()),
            Some(_) => {
                uniform = false;
                ControlFlow::Break(())
            }
        })?;
        Ok(uniform)
    }

    /// Well-covered without isolated vertices, with `n = 2·α(G)`.
    pub fn is_very_well_covered(&self) -> Result<bool> {
        if !self.is_well_covered()? {
            return Ok(false);
        }
        Ok(!self.has_isolated_vertex() && self.n() == 2 * self.alpha_search())
    }

    /// Stability number, read off as the degree of the independence
    /// polynomial.
    pub fn alpha(&self) -> Result<usize> {
        Ok(crate::engine::independence_poly(self)?.degree().unwrap_or(0))
    }
}

/// Packs the bits of `bits` selected by `keep` into the low positions.
fn compact(bits: u64, keep: u64) -> u64 {
    VertexSet(keep)
        .iter()
        .enumerate()
        .fold(0u64, |out, (pos, v)| out | (bits >> v & 1) << pos)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}
