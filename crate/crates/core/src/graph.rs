// SPDX-License-Identifier: Apache-2.0

//! Simple undirected graphs on vertices `0..n` and the metric primitives
//! (BFS distances, components, bipartiteness, transmission) used everywhere
//! else in the crate.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

const UNREACHED: u32 = u32::MAX;

/// Immutable simple undirected graph.
///
/// Adjacency is kept twice: sorted neighbor lists for traversal and a
/// row-major bit matrix for constant-time edge queries.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: usize,
    neighbors: Vec<Vec<usize>>,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Builds a graph from unordered vertex pairs. Duplicates (in either
    /// orientation) collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut builder = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Ok(GraphBuilder::new(n)?.build())
    }

    /// Cycle `C_n` with edges `i ~ i+1 (mod n)`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooShort(n));
        }
        let mut b = GraphBuilder::new(n)?;
        for i in 0..n {
            b.add_edge(i, (i + 1) % n)?;
        }
        Ok(b.build())
    }

    /// Path `P_n` on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let mut b = GraphBuilder::new(n)?;
        for i in 1..n {
            b.add_edge(i - 1, i)?;
        }
        Ok(b.build())
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut b = GraphBuilder::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v)?;
            }
        }
        Ok(b.build())
    }

    /// Complete bipartite graph `K_{a,b}`; the first `a` vertices form one side.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut builder = GraphBuilder::new(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                builder.add_edge(u, v)?;
            }
        }
        Ok(builder.build())
    }

    /// Star `K_{1,leaves}` centered at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        Self::complete_bipartite(1, leaves)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut b = GraphBuilder::new(self.n + other.n).expect("orders are positive");
        for (u, v) in self.edges() {
            b.add_edge(u, v).expect("valid edge");
        }
        for (u, v) in other.edges() {
            b.add_edge(u + shift, v + shift).expect("valid edge");
        }
        b.build()
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n || !is_permutation(perm) {
            return Err(Error::NotPermutation { n: self.n });
        }
        let mut b = GraphBuilder::new(self.n)?;
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v])?;
        }
        Ok(b.build())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        let word = self.bits[u * self.words_per_row + v / 64];
        word >> (v % 64) & 1 == 1
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Nondecreasing degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.neighbors.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    pub fn min_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn is_complete(&self) -> bool {
        self.edges == self.n * (self.n - 1) / 2
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<u32>> {
        self.bfs_raw(source)
            .into_iter()
            .map(|d| (d != UNREACHED).then_some(d))
            .collect()
    }

    fn bfs_raw(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.n];
        let mut queue = VecDeque::with_capacity(self.n);
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &v in &self.neighbors[u] {
                if dist[v] == UNREACHED {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Maximal connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &v in &self.neighbors[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_raw(0).iter().all(|&d| d != UNREACHED)
    }

    fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::NotConnected {
                components: self.component_count(),
            })
        }
    }

    /// Proper 2-coloring (0/1 per vertex), or an odd closed walk proving none
    /// exists.
    pub fn two_coloring(&self) -> std::result::Result<Vec<u8>, OddClosedWalk> {
        let mut color = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.neighbors[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return Err(OddClosedWalk::from_tree(&parent, u, v));
                    }
                }
            }
        }
        Ok(color)
    }

    /// True iff the graph contains no odd cycle.
    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_ok()
    }

    /// All-pairs hop distances. Fails on disconnected graphs.
    pub fn all_pairs_distances(&self) -> Result<DistanceMatrix> {
        self.require_connected()?;
        let mut d = Vec::with_capacity(self.n * self.n);
        for s in 0..self.n {
            d.extend(self.bfs_raw(s));
        }
        Ok(DistanceMatrix { n: self.n, d })
    }

    pub fn diameter(&self) -> Result<usize> {
        Ok(self.all_pairs_distances()?.diameter())
    }

    pub fn transmission_profile(&self) -> Result<TransmissionProfile> {
        Ok(TransmissionProfile::from_distances(&self.all_pairs_distances()?))
    }

    /// `Some(n)` iff the graph is a single cycle `C_n` (connected,
    /// 2-regular, at least 3 vertices).
    pub fn detect_cycle_graph(&self) -> Option<usize> {
        let two_regular = self.neighbors.iter().all(|ns| ns.len() == 2);
        (self.n >= 3 && two_regular && self.is_connected()).then_some(self.n)
    }

    /// Row-major 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.n * self.n];
        for (u, v) in self.edges() {
            a[u * self.n + v] = 1.0;
            a[v * self.n + u] = 1.0;
        }
        a
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental builder used by the constructors and by the product module.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
    edges: usize,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let words_per_row = n.div_ceil(64);
        Ok(Self {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
            edges: 0,
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let (wu, bu) = (u * self.words_per_row + v / 64, v % 64);
        if self.bits[wu] >> bu & 1 == 0 {
            self.bits[wu] |= 1 << bu;
            self.bits[v * self.words_per_row + u / 64] |= 1 << (u % 64);
            self.edges += 1;
        }
        Ok(())
    }

    pub fn build(self) -> Graph {
        let mut neighbors = vec![Vec::new(); self.n];
        for (u, ns) in neighbors.iter_mut().enumerate() {
            let row = &self.bits[u * self.words_per_row..(u + 1) * self.words_per_row];
            for (w, &word) in row.iter().enumerate() {
                let mut word = word;
                while word != 0 {
                    let bit = word.trailing_zeros() as usize;
                    ns.push(w * 64 + bit);
                    word &= word - 1;
                }
            }
        }
        Graph {
            n: self.n,
            edges: self.edges,
            neighbors,
            words_per_row: self.words_per_row,
            bits: self.bits,
        }
    }
}

/// A closed walk of odd length; certifies that a graph is not bipartite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddClosedWalk {
    /// Vertices in walk order; the walk closes from the last back to the first.
    pub vertices: Vec<usize>,
}

impl OddClosedWalk {
    fn from_tree(parent: &[usize], u: usize, v: usize) -> Self {
        let up = |mut x: usize| {
            let mut chain = vec![x];
            while parent[x] != usize::MAX {
                x = parent[x];
                chain.push(x);
            }
            chain
        };
        // root .. u, then v .. root (excluding the repeated root)
        let mut walk: Vec<usize> = up(u).into_iter().rev().collect();
        let back = up(v);
        walk.extend(&back[..back.len() - 1]);
        Self { vertices: walk }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks that consecutive vertices (cyclically) are adjacent in `g` and
    /// the length is odd.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        k % 2 == 1
            && (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

/// Hop-count distance matrix of a connected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, u: usize) -> u32 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> usize {
        self.d.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.d.iter().map(|&x| f64::from(x)).collect()
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u32]> = (0..self.n).map(|u| self.row(u)).collect();
        f.debug_struct("DistanceMatrix").field("rows", &rows).finish()
    }
}

/// Per-vertex transmission `Tr(v) = sum_u d(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransmissionProfile {
    pub transmissions: Vec<u64>,
    /// Common transmission when every vertex has the same one.
    pub regular_value: Option<u64>,
}

impl TransmissionProfile {
    pub fn from_distances(d: &DistanceMatrix) -> Self {
        let transmissions: Vec<u64> = (0..d.order())
            .map(|u| d.row(u).iter().map(|&x| u64::from(x)).sum())
            .collect();
        let first = transmissions[0];
        let regular_value = transmissions.iter().all(|&t| t == first).then_some(first);
        Self {
            transmissions,
            regular_value,
        }
    }

    pub fn is_regular(&self) -> bool {
        self.regular_value.is_some()
    }
}

pub(crate) fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
            return false;
        }
    }
    true
}
