// SPDX-License-Identifier: Apache-2.0

//! Small graph collections used by the sweeps in [`crate::reproduce`] and
//! by the tests.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::io::to_graph6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        Self {
            name: name.into(),
            graph,
        }
    }
}

/// Every connected graph on `1..=max_n` vertices, one per isomorphism class,
/// named by the graph6 string of its canonical labeling. Exhaustive over
/// labeled graphs, so only sensible for `max_n <= 6`.
pub fn connected_graphs(max_n: usize) -> Vec<NamedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let perms = permutations(n);
        let mut classes: BTreeMap<(usize, Vec<bool>), Graph> = BTreeMap::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edge_list(n, &edges).expect("valid labeled graph");
            if !g.is_connected() {
                continue;
            }
            let key = canonical_bits(&g, &pairs, &perms);
            classes.entry((edges.len(), key)).or_insert(g);
        }
        for ((_, key), _) in classes {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&key)
                .filter(|(_, &b)| b)
                .map(|(&e, _)| e)
                .collect();
            let canon = Graph::from_edge_list(n, &edges).expect("valid canonical graph");
            out.push(NamedGraph::new(to_graph6(&canon), canon));
        }
    }
    out
}

/// Lexicographically largest adjacency bit string over all relabelings.
fn canonical_bits(g: &Graph, pairs: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<bool> {
    perms
        .iter()
        .map(|p| {
            let mut inv = vec![0; p.len()];
            for (v, &w) in p.iter().enumerate() {
                inv[w] = v;
            }
            pairs.iter().map(|&(u, v)| g.has_edge(inv[u], inv[v])).collect::<Vec<bool>>()
        })
        .max()
        .unwrap_or_default()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn cycle(n: usize) -> NamedGraph {
    NamedGraph::new(format!("C{n}"), Graph::cycle(n).expect("n >= 3"))
}

pub fn path(n: usize) -> NamedGraph {
    NamedGraph::new(format!("P{n}"), Graph::path(n).expect("n >= 1"))
}

pub fn complete(n: usize) -> NamedGraph {
    NamedGraph::new(format!("K{n}"), Graph::complete(n).expect("n >= 1"))
}

/// All connected graphs on at most 5 vertices plus the cycles `C_6 .. C_9`.
pub fn small_connected_with_cycles() -> Vec<NamedGraph> {
    let mut out = connected_graphs(5);
    out.extend((6..=9).map(cycle));
    out
}

/// Factor graphs on at most 8 vertices: all connected graphs on at most 4
/// vertices, standard families up to order 8, and some disconnected graphs.
pub fn factor_corpus() -> Vec<NamedGraph> {
    let mut out = connected_graphs(4);
    out.extend((5..=8).map(path));
    out.extend((5..=8).map(cycle));
    out.extend([complete(5), complete(6)]);
    let bip = |a, b| NamedGraph::new(format!("K{a},{b}"), Graph::complete_bipartite(a, b).expect("valid"));
    out.extend([bip(1, 4), bip(1, 5), bip(2, 3), bip(3, 3), bip(2, 4)]);
    out.push(NamedGraph::new("Q3", cube()));
    out.push(NamedGraph::new("Petersen-minus-2", petersen_minus_two()));

    let k1 = Graph::complete(1).expect("valid");
    let k2 = Graph::complete(2).expect("valid");
    let k3 = Graph::complete(3).expect("valid");
    let p3 = Graph::path(3).expect("valid");
    out.extend([
        NamedGraph::new("2K1", k1.disjoint_union(&k1)),
        NamedGraph::new("K2+K1", k2.disjoint_union(&k1)),
        NamedGraph::new("2K2", k2.disjoint_union(&k2)),
        NamedGraph::new("K3+K1", k3.disjoint_union(&k1)),
        NamedGraph::new("P3+K2", p3.disjoint_union(&k2)),
        NamedGraph::new("2K3", k3.disjoint_union(&k3)),
        NamedGraph::new("C4+C4", Graph::cycle(4).expect("valid").disjoint_union(&Graph::cycle(4).expect("valid"))),
    ]);
    out
}

fn cube() -> Graph {
    let edges: Vec<(usize, usize)> = (0..8usize)
        .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    Graph::from_edge_list(8, &edges).expect("valid cube")
}

/// Petersen graph with two adjacent vertices removed: an irregular,
/// non-bipartite graph on 8 vertices.
fn petersen_minus_two() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    // drop vertices 0 and 5, relabel 1..=4 -> 0..=3 and 6..=9 -> 4..=7
    let relabel = |v: usize| if v < 5 { v - 1 } else { v - 2 };
    let kept: Vec<(usize, usize)> = edges
        .into_iter()
        .filter(|&(u, v)| u != 0 && v != 0 && u != 5 && v != 5)
        .map(|(u, v)| (relabel(u), relabel(v)))
        .collect();
    Graph::from_edge_list(8, &kept).expect("valid")
}
