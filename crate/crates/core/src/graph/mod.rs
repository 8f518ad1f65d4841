//! Immutable simple graphs on vertices `0..order`.
//!
//! Adjacency is a dense bit matrix: every row is `words` 64-bit words. Equality
//! is labeled equality; nothing here quotients by isomorphism.

pub(crate) mod bits;
mod codec;
mod weighting;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub use codec::{decode, encode, Format, GRAPH6_MAX_ORDER};
pub use weighting::Weighting;

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "codec::JsonGraph", into = "codec::JsonGraph")]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
}

/// Named graph families understood by [`Graph::construct`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Cycle(usize),
    Complete(usize),
    /// Odd wheel: a `k`-cycle on `0..k` plus hub `k`.
    Wheel(usize),
    CycleComplement(usize),
    Petersen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub regular: bool,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        let words = bits::words_for(order);
        Graph {
            order,
            words,
            rows: vec![0; order * words],
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{order}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn construct(kind: GraphKind) -> Result<Self> {
        match kind {
            GraphKind::Cycle(n) => Graph::cycle(n),
            GraphKind::Complete(r) => Graph::complete(r),
            GraphKind::Wheel(k) => Graph::wheel(k),
            GraphKind::CycleComplement(n) => Graph::cycle_complement(n),
            GraphKind::Petersen => Ok(Graph::petersen()),
        }
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(r: usize) -> Result<Self> {
        if r < 1 {
            return Err(Error::invalid("complete graph needs at least 1 vertex"));
        }
        Ok(Graph::empty(r).complement())
    }

    /// `k`-cycle on `0..k` with hub vertex `k` joined to all of it.
    pub fn wheel(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::invalid(format!("wheel rim needs at least 3 vertices, got {k}")));
        }
        Ok(Graph::cycle(k)?.join(&Graph::empty(1)))
    }

    pub fn cycle_complement(n: usize) -> Result<Self> {
        if n < 5 {
            return Err(Error::invalid(format!(
                "cycle complement needs at least 5 vertices, got {n}"
            )));
        }
        Ok(Graph::cycle(n)?.complement())
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i + 5`.
    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("static edge list")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && bits::test(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order).map(|v| self.degree(v)).min()
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        if self.order == 0 {
            return Err(Error::invalid("degree profile of the empty graph"));
        }
        let degrees = self.degrees();
        let min = *degrees.iter().min().unwrap();
        let max = *degrees.iter().max().unwrap();
        Ok(DegreeProfile {
            min,
            max,
            regular: min == max,
        })
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::insert(&mut self.rows[u * w..(u + 1) * w], v);
        bits::insert(&mut self.rows[v * w..(v + 1) * w], u);
    }

    fn remove_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::remove(&mut self.rows[u * w..(u + 1) * w], v);
        bits::remove(&mut self.rows[v * w..(v + 1) * w], u);
    }

    /// Copy of `self` with the given edges added.
    pub fn with_edges<I>(&self, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(self.order, self.edges().chain(edges))
    }

    /// Copy of `self` with the given edges removed; absent edges are ignored.
    pub fn without_edges<I>(&self, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = self.clone();
        for (u, v) in edges {
            if u < g.order && v < g.order {
                g.remove_edge(u, v);
            }
        }
        g
    }

    /// Copy of `self` with `extra` new vertices appended (no new edges).
    pub fn with_vertices(&self, extra: usize) -> Self {
        Graph::from_edges(self.order + extra, self.edges()).expect("edges stay in range")
    }

    /// Whether every edge of `self` is an edge of `other` (same labels).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.order <= other.order && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    pub fn complement(&self) -> Self {
        let mut g = Graph::empty(self.order);
        let full = bits::full(self.order);
        for v in 0..self.order {
            let w = self.words;
            let row = &mut g.rows[v * w..(v + 1) * w];
            for (k, word) in row.iter_mut().enumerate() {
                *word = !self.rows[v * w + k] & full[k];
            }
            bits::remove(row, v);
        }
        g
    }

    /// Disjoint copies of `self` (vertices `0..|self|`) and `other` (shifted
    /// by `|self|`) with every cross pair adjacent.
    pub fn join(&self, other: &Graph) -> Self {
        let n = self.order;
        let m = other.order;
        let own = self.edges();
        let theirs = other.edges().map(|(u, v)| (u + n, v + n));
        let cross = (0..n).flat_map(|u| (0..m).map(move |v| (u, v + n)));
        Graph::from_edges(n + m, own.chain(theirs).chain(cross)).expect("join edges stay in range")
    }

    /// Subgraph induced by `vertices`, relabeled `0..len` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Self {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        g
    }

    /// Balanced blow-up on `n` vertices: part sizes differ by at most one and
    /// the larger parts go to the lowest-indexed vertices.
    pub fn balanced_blow_up(&self, n: usize) -> Result<Self> {
        if self.order == 0 || n < self.order {
            return Err(Error::invalid(format!(
                "balanced blow-up needs n >= |base| >= 1 (n = {n}, |base| = {})",
                self.order
            )));
        }
        let base = n / self.order;
        let extra = n % self.order;
        let weights = (0..self.order).map(|v| (base + usize::from(v < extra)) as u64).collect();
        Ok(Weighting::new(self.clone(), weights)?.blow_up())
    }

    /// Proper 2-colouring of the subgraph induced by `within`, or `None` if
    /// that subgraph has an odd cycle.
    pub(crate) fn two_colouring_within(&self, within: &[u64]) -> Option<Vec<Option<bool>>> {
        let mut side = vec![None; self.order];
        let mut queue = VecDeque::new();
        for start in bits::iter(within) {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for v in self.neighbors(u).filter(|&v| bits::test(within, v)) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring_within(&bits::full(self.order)).is_some()
    }

    /// Length of a shortest odd cycle, or `None` for bipartite graphs.
    ///
    /// A BFS from `s` that finds an edge inside layer `d` closes an odd walk of
    /// length `2d + 1`; from a vertex on a shortest odd cycle this walk is the
    /// cycle itself, so the minimum over all roots is exact.
    pub fn odd_girth(&self) -> Option<usize> {
        let n = self.order;
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            queue.clear();
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break 'bfs;
                    }
                }
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    } else if dist[v] == dist[u] {
                        let len = 2 * dist[u] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                        break 'bfs;
                    }
                }
            }
        }
        best
    }

    /// Vertices that survive repeatedly deleting the lowest-indexed vertex of
    /// degree below `threshold × |self|`. The bound uses the original order,
    /// so the survivors are the unique largest induced subgraph meeting it.
    pub fn peel_survivors(&self, threshold: Rational) -> Vec<usize> {
        let n = self.order as u64;
        let mut alive = bits::full(self.order);
        let mut degree = self.degrees();
        loop {
            let victim = bits::iter(&alive)
                .find(|&v| threshold.cmp_scaled(degree[v] as u64, n) == std::cmp::Ordering::Less);
            let Some(v) = victim else { break };
            bits::remove(&mut alive, v);
            for u in self.neighbors(v) {
                if bits::test(&alive, u) {
                    degree[u] -= 1;
                }
            }
        }
        bits::iter(&alive).collect()
    }

    /// Induced subgraph on [`Graph::peel_survivors`]; may be empty.
    pub fn peel_min_degree(&self, threshold: Rational) -> Self {
        self.induced_subgraph(&self.peel_survivors(threshold))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
