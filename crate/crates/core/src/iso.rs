// SPDX-License-Identifier: Apache-2.0

//! Vertex bijections, the explicit map `C_n □ C_n -> C_n ⊗ C_n` for odd
//! `n`, a general isomorphism search for small graphs, and the
//! distance-regularity checker.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_permutation, DistanceMatrix, Graph};

/// Node budget after which a search reports [`SearchOutcome::BudgetExceeded`].
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

const UNREACHED: u32 = u32::MAX;

/// A permutation of `0..n` read as `v -> forward[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VertexBijection {
    forward: Vec<usize>,
}

impl VertexBijection {
    pub fn new(forward: Vec<usize>) -> Result<Self> {
        if is_permutation(&forward) {
            Ok(Self { forward })
        } else {
            Err(Error::NotPermutation { n: forward.len() })
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            forward: (0..n).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.forward.len()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.forward[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.forward.len()];
        for (v, &w) in self.forward.iter().enumerate() {
            inv[w] = v;
        }
        Self { forward: inv }
    }
}

/// `(l, m) -> ((l + m) mod n, (m - l) mod n)` on 0-based residues, flat
/// indices `l * n + m` on both sides. An isomorphism from `C_n □ C_n` onto
/// `C_n ⊗ C_n` whenever `n` is odd.
pub fn f_n_map(n: usize) -> Result<VertexBijection> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::RequiresOddCycle {
            what: "the map C_n □ C_n -> C_n ⊗ C_n",
            n,
        });
    }
    let forward = (0..n * n)
        .map(|v| {
            let (l, m) = (v / n, v % n);
            ((l + m) % n) * n + (m + n - l) % n
        })
        .collect();
    Ok(VertexBijection { forward })
}

/// Result of checking a bijection against two graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum IsoCheck {
    Valid,
    /// `{u, v}` is an edge on exactly one side; `edge_in_first` says which.
    Broken { u: usize, v: usize, edge_in_first: bool },
}

impl IsoCheck {
    pub fn is_valid(self) -> bool {
        matches!(self, IsoCheck::Valid)
    }
}

/// Checks `{v, w} ∈ E1 ⇔ {φ(v), φ(w)} ∈ E2` over all vertex pairs.
pub fn verify_isomorphism(g1: &Graph, g2: &Graph, phi: &VertexBijection) -> Result<IsoCheck> {
    if g1.order() != g2.order() {
        return Err(Error::OrderMismatch {
            left: g1.order(),
            right: g2.order(),
        });
    }
    if phi.order() != g1.order() {
        return Err(Error::OrderMismatch {
            left: g1.order(),
            right: phi.order(),
        });
    }
    for u in 0..g1.order() {
        for v in u + 1..g1.order() {
            let e1 = g1.has_edge(u, v);
            if e1 != g2.has_edge(phi.apply(u), phi.apply(v)) {
                return Ok(IsoCheck::Broken { u, v, edge_in_first: e1 });
            }
        }
    }
    Ok(IsoCheck::Valid)
}

/// Why two graphs were certified non-isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NonIsoReason {
    Order,
    EdgeCount,
    DegreeSequence,
    ComponentSizes,
    /// Color refinement seeded by degree and distance histograms separated
    /// the graphs.
    Refinement,
    /// Backtracking exhausted every candidate.
    ExhaustiveSearch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Isomorphic { map: VertexBijection, nodes: u64 },
    NonIsomorphic { reason: NonIsoReason, nodes: u64 },
    BudgetExceeded { nodes: u64 },
}

impl SearchOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, SearchOutcome::Isomorphic { .. })
    }

    /// `Some(answer)` when the search finished, `None` on budget exhaustion.
    pub fn answer(&self) -> Option<bool> {
        match self {
            SearchOutcome::Isomorphic { .. } => Some(true),
            SearchOutcome::NonIsomorphic { .. } => Some(false),
            SearchOutcome::BudgetExceeded { .. } => None,
        }
    }

    pub fn map(&self) -> Option<&VertexBijection> {
        match self {
            SearchOutcome::Isomorphic { map, .. } => Some(map),
            _ => None,
        }
    }

    pub fn nodes(&self) -> u64 {
        match *self {
            SearchOutcome::Isomorphic { nodes, .. }
            | SearchOutcome::NonIsomorphic { nodes, .. }
            | SearchOutcome::BudgetExceeded { nodes } => nodes,
        }
    }
}

/// Backtracking isomorphism search with a node budget.
#[derive(Debug, Clone, Copy)]
pub struct IsoSearch {
    budget: u64,
}

impl Default for IsoSearch {
    fn default() -> Self {
        Self {
            budget: DEFAULT_NODE_BUDGET,
        }
    }
}

impl IsoSearch {
    pub fn with_budget(budget: u64) -> Self {
        Self { budget }
    }

    pub fn run(&self, g1: &Graph, g2: &Graph) -> SearchOutcome {
        let reject = |reason| SearchOutcome::NonIsomorphic { reason, nodes: 0 };
        if g1.order() != g2.order() {
            return reject(NonIsoReason::Order);
        }
        if g1.edge_count() != g2.edge_count() {
            return reject(NonIsoReason::EdgeCount);
        }
        if g1.degree_sequence() != g2.degree_sequence() {
            return reject(NonIsoReason::DegreeSequence);
        }
        let sizes = |g: &Graph| {
            let mut s: Vec<usize> = g.connected_components().iter().map(Vec::len).collect();
            s.sort_unstable();
            s
        };
        if sizes(g1) != sizes(g2) {
            return reject(NonIsoReason::ComponentSizes);
        }

        let d1 = hop_matrix(g1);
        let d2 = hop_matrix(g2);
        let Some((c1, c2)) = refine(g1, g2, &d1, &d2) else {
            return reject(NonIsoReason::Refinement);
        };

        let n = g1.order();
        let (order, anchor) = search_order(g1, &c1);
        let mut state = Backtrack {
            g2,
            n,
            d1: &d1,
            d2: &d2,
            c1: &c1,
            c2: &c2,
            order: &order,
            anchor: &anchor,
            map: vec![usize::MAX; n],
            used: vec![false; n],
            nodes: 0,
            budget: self.budget,
        };
        match state.extend(0) {
            Err(BudgetHit) => SearchOutcome::BudgetExceeded { nodes: state.nodes },
            Ok(false) => SearchOutcome::NonIsomorphic {
                reason: NonIsoReason::ExhaustiveSearch,
                nodes: state.nodes,
            },
            Ok(true) => {
                let map = VertexBijection { forward: state.map };
                let check = verify_isomorphism(g1, g2, &map).expect("orders already equal");
                assert!(check.is_valid(), "search produced an invalid bijection: {check:?}");
                SearchOutcome::Isomorphic {
                    map,
                    nodes: state.nodes,
                }
            }
        }
    }
}

/// Finds an isomorphism `g1 -> g2` with the default node budget.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> SearchOutcome {
    IsoSearch::default().run(g1, g2)
}

/// Hop distances with `UNREACHED` across components.
fn hop_matrix(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        d.extend(g.bfs_distances(s).into_iter().map(|x| x.unwrap_or(UNREACHED)));
    }
    d
}

/// Joint color refinement of both graphs. Returns per-vertex colors, or
/// `None` when the color histograms diverge.
fn refine(g1: &Graph, g2: &Graph, d1: &[u32], d2: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = g1.order();
    let profile = |g: &Graph, d: &[u32], v: usize| {
        let mut row = d[v * n..(v + 1) * n].to_vec();
        row.sort_unstable();
        (g.degree(v), row)
    };
    let mut seed: HashMap<(usize, Vec<u32>), u32> = HashMap::new();
    let mut intern_seed = |key| {
        let next = seed.len() as u32;
        *seed.entry(key).or_insert(next)
    };
    let mut c1: Vec<u32> = (0..n).map(|v| intern_seed(profile(g1, d1, v))).collect();
    let mut c2: Vec<u32> = (0..n).map(|v| intern_seed(profile(g2, d2, v))).collect();
    let mut classes = seed.len();

    loop {
        if histogram(&c1) != histogram(&c2) {
            return None;
        }
        let mut table: HashMap<(u32, Vec<u32>), u32> = HashMap::new();
        let mut step = |g: &Graph, c: &[u32]| -> Vec<u32> {
            (0..n)
                .map(|v| {
                    let mut around: Vec<u32> = g.neighbors(v).iter().map(|&w| c[w]).collect();
                    around.sort_unstable();
                    let next = table.len() as u32;
                    *table.entry((c[v], around)).or_insert(next)
                })
                .collect()
        };
        let n1 = step(g1, &c1);
        let n2 = step(g2, &c2);
        let new_classes = table.len();
        c1 = n1;
        c2 = n2;
        if new_classes == classes {
            return (histogram(&c1) == histogram(&c2)).then_some((c1, c2));
        }
        classes = new_classes;
    }
}

fn histogram(colors: &[u32]) -> Vec<(u32, usize)> {
    let mut h: HashMap<u32, usize> = HashMap::new();
    for &c in colors {
        *h.entry(c).or_default() += 1;
    }
    let mut v: Vec<_> = h.into_iter().collect();
    v.sort_unstable();
    v
}

/// BFS order over `g`, each component started at a vertex of its rarest
/// color; `anchor[k]` is an earlier-ordered neighbor of `order[k]`.
fn search_order(g: &Graph, colors: &[u32]) -> (Vec<usize>, Vec<Option<usize>>) {
    let n = g.order();
    let mut freq: HashMap<u32, usize> = HashMap::new();
    for &c in colors {
        *freq.entry(c).or_default() += 1;
    }
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut anchor = Vec::with_capacity(n);
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (freq[&colors[v]], v))
            .expect("unplaced vertex remains");
        placed[start] = true;
        order.push(start);
        anchor.push(None);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                    anchor.push(Some(u));
                }
            }
        }
    }
    (order, anchor)
}

struct BudgetHit;

struct Backtrack<'a> {
    g2: &'a Graph,
    n: usize,
    d1: &'a [u32],
    d2: &'a [u32],
    c1: &'a [u32],
    c2: &'a [u32],
    order: &'a [usize],
    anchor: &'a [Option<usize>],
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Backtrack<'_> {
    fn extend(&mut self, pos: usize) -> std::result::Result<bool, BudgetHit> {
        if pos == self.n {
            return Ok(true);
        }
        let u = self.order[pos];
        let candidates: Vec<usize> = match self.anchor[pos] {
            Some(p) => self.g2.neighbors(self.map[p]).to_vec(),
            None => (0..self.n).collect(),
        };
        for c in candidates {
            if self.used[c] || self.c1[u] != self.c2[c] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(BudgetHit);
            }
            let consistent = self.order[..pos].iter().all(|&w| {
                self.d1[u * self.n + w] == self.d2[c * self.n + self.map[w]]
            });
            if !consistent {
                continue;
            }
            self.map[u] = c;
            self.used[c] = true;
            if self.extend(pos + 1)? {
                return Ok(true);
            }
            self.used[c] = false;
            self.map[u] = usize::MAX;
        }
        Ok(false)
    }
}

/// Which intersection number disagrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountFamily {
    /// Neighbors one step closer to the base vertex.
    C,
    /// Neighbors one step farther from the base vertex.
    B,
}

/// Two vertex pairs at the same distance with different `c_i` or `b_i`.
///
/// `first = (x, y)` and `second = (x', z)`; when `x == x'` this is the
/// classic single-base witness. Distance 0 pairs `(x, x)` compare `b_0`,
/// i.e. degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionWitness {
    pub distance: usize,
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub family: CountFamily,
    pub first_count: usize,
    pub second_count: usize,
}

impl IntersectionWitness {
    /// Recomputes distances and counts from scratch.
    pub fn recheck(&self, g: &Graph) -> Result<bool> {
        let d = g.all_pairs_distances()?;
        let (x, y) = self.first;
        let (x2, z) = self.second;
        if d.get(x, y) as usize != self.distance || d.get(x2, z) as usize != self.distance {
            return Ok(false);
        }
        let pick = |(c, b): (usize, usize)| match self.family {
            CountFamily::C => c,
            CountFamily::B => b,
        };
        let a = pick(intersection_counts(g, &d, x, y));
        let b = pick(intersection_counts(g, &d, x2, z));
        Ok(a == self.first_count && b == self.second_count && a != b)
    }
}

/// `(b_0, ..., b_{d-1}; c_1, ..., c_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl IntersectionArray {
    pub fn diameter(&self) -> usize {
        self.c.len()
    }
}

impl std::fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{}; {}}}", join(&self.b), join(&self.c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceRegularity {
    Regular { intersection_array: IntersectionArray },
    NotRegular { witness: IntersectionWitness },
}

impl DistanceRegularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, DistanceRegularity::Regular { .. })
    }
}

/// `(c, b)` for the pair `(x, y)`: neighbors of `y` at distance `i - 1`
/// and `i + 1` from `x`, where `i = d(x, y)`.
pub fn intersection_counts(g: &Graph, d: &DistanceMatrix, x: usize, y: usize) -> (usize, usize) {
    let i = d.get(x, y);
    g.neighbors(y).iter().fold((0, 0), |(c, b), &w| {
        let dw = d.get(x, w);
        (c + usize::from(i > 0 && dw == i - 1), b + usize::from(dw == i + 1))
    })
}

/// Scans every ordered pair `(x, y)` (x-major) and reports the first pair
/// whose `(c_i, b_i)` disagrees with the first pair seen at that distance.
pub fn distance_regularity_check(g: &Graph) -> Result<DistanceRegularity> {
    let d = g.all_pairs_distances()?;
    let n = g.order();
    let diameter = d.diameter();
    // per distance: first pair seen and its (c, b)
    type Seen = ((usize, usize), usize, usize);
    let mut reference: Vec<Option<Seen>> = vec![None; diameter + 1];
    for x in 0..n {
        for y in 0..n {
            let i = d.get(x, y) as usize;
            let (c, b) = intersection_counts(g, &d, x, y);
            match reference[i] {
                None => reference[i] = Some(((x, y), c, b)),
                Some((pair, rc, rb)) if rc != c || rb != b => {
                    let (family, first_count, second_count) =
                        if rc != c { (CountFamily::C, rc, c) } else { (CountFamily::B, rb, b) };
                    return Ok(DistanceRegularity::NotRegular {
                        witness: IntersectionWitness {
                            distance: i,
                            first: pair,
                            second: (x, y),
                            family,
                            first_count,
                            second_count,
                        },
                    });
                }
                Some(_) => {}
            }
        }
    }
    let at = |i: usize| reference[i].expect("every distance up to the diameter occurs");
    Ok(DistanceRegularity::Regular {
        intersection_array: IntersectionArray {
            b: (0..diameter).map(|i| at(i).2).collect(),
            c: (1..=diameter).map(|i| at(i).1).collect(),
        },
    })
}

/// Witness for a caller-chosen triple: `d(x, y) = d(x, z)` and the counts
/// differ. `Ok(None)` when the triple is not a witness.
pub fn witness_for(g: &Graph, x: usize, y: usize, z: usize) -> Result<Option<IntersectionWitness>> {
    let d = g.all_pairs_distances()?;
    let i = d.get(x, y);
    if d.get(x, z) != i {
        return Ok(None);
    }
    let (cy, by) = intersection_counts(g, &d, x, y);
    let (cz, bz) = intersection_counts(g, &d, x, z);
    let make = |family, a, b| IntersectionWitness {
        distance: i as usize,
        first: (x, y),
        second: (x, z),
        family,
        first_count: a,
        second_count: b,
    };
    Ok(if cy != cz {
        Some(make(CountFamily::C, cy, cz))
    } else if by != bz {
        Some(make(CountFamily::B, by, bz))
    } else {
        None
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::{cartesian_product, kronecker_product};

    #[test]
    fn f_n_examples() {
        let f3 = f_n_map(3).unwrap();
        assert_eq!(f3.apply(0), 0);
        // (1, 2) -> (0, 1)
        assert_eq!(f3.apply(5), 1);
        assert!(f_n_map(4).is_err());
        assert!(f_n_map(1).is_err());
    }

    #[test]
    fn even_n_formula_is_not_injective() {
        let n = 4;
        let mut images: Vec<usize> = (0..n * n)
            .map(|v| {
                let (l, m) = (v / n, v % n);
                ((l + m) % n) * n + (m + n - l) % n
            })
            .collect();
        images.sort_unstable();
        images.dedup();
        assert!(images.len() < n * n);
    }

    #[test]
    fn f5_is_an_isomorphism() {
        let c5 = Graph::cycle(5).unwrap();
        let cart = cartesian_product(&c5, &c5).graph;
        let kron = kronecker_product(&c5, &c5).graph;
        assert_eq!(cart.edge_count(), 50);
        let f5 = f_n_map(5).unwrap();
        assert_eq!(verify_isomorphism(&cart, &kron, &f5).unwrap(), IsoCheck::Valid);
        assert!(verify_isomorphism(&kron, &cart, &f5.inverse()).unwrap().is_valid());
        let id = VertexBijection::identity(25);
        assert!(matches!(verify_isomorphism(&cart, &kron, &id).unwrap(), IsoCheck::Broken { .. }));
        assert!(verify_isomorphism(&c5, &c5, &VertexBijection::identity(5)).unwrap().is_valid());
        assert!(verify_isomorphism(&c5, &cart, &VertexBijection::identity(5)).is_err());
    }

    #[test]
    fn bijection_validation() {
        assert!(VertexBijection::new(vec![1, 0, 2]).is_ok());
        assert!(VertexBijection::new(vec![1, 1, 2]).is_err());
        assert!(VertexBijection::new(vec![0, 3]).is_err());
    }

    #[test]
    fn search_examples() {
        let c6 = Graph::cycle(6).unwrap();
        let two_c3 = Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(3).unwrap());
        assert_eq!(
            find_isomorphism(&c6, &two_c3),
            SearchOutcome::NonIsomorphic { reason: NonIsoReason::ComponentSizes, nodes: 0 }
        );
        let c4 = Graph::cycle(4).unwrap();
        let out = find_isomorphism(&cartesian_product(&c4, &c4).graph, &kronecker_product(&c4, &c4).graph);
        assert_eq!(out.answer(), Some(false));
    }

    #[test]
    fn search_handles_disconnected_isomorphic_graphs() {
        let a = Graph::cycle(3).unwrap().disjoint_union(&Graph::path(4).unwrap());
        let b = Graph::path(4).unwrap().disjoint_union(&Graph::cycle(3).unwrap());
        let out = find_isomorphism(&a, &b);
        assert!(out.is_isomorphic());
        assert!(verify_isomorphism(&a, &b, out.map().unwrap()).unwrap().is_valid());
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let c9 = Graph::cycle(9).unwrap();
        let cart = cartesian_product(&c9, &c9).graph;
        let kron = kronecker_product(&c9, &c9).graph;
        assert_eq!(IsoSearch::with_budget(3).run(&cart, &kron), SearchOutcome::BudgetExceeded { nodes: 4 });
        assert!(find_isomorphism(&cart, &kron).is_isomorphic());
    }

    #[test]
    fn drg_examples() {
        let c5 = distance_regularity_check(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(
            c5,
            DistanceRegularity::Regular {
                intersection_array: IntersectionArray { b: vec![2, 1], c: vec![1, 1] }
            }
        );
        let k4 = distance_regularity_check(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(
            k4,
            DistanceRegularity::Regular {
                intersection_array: IntersectionArray { b: vec![3], c: vec![1] }
            }
        );
        let p3 = distance_regularity_check(&Graph::path(3).unwrap()).unwrap();
        let DistanceRegularity::NotRegular { witness } = p3 else { panic!("P_3 is not regular") };
        assert_eq!((witness.first, witness.second), ((0, 1), (1, 0)));
        assert_eq!(witness.family, CountFamily::B);
        assert!(witness.recheck(&Graph::path(3).unwrap()).unwrap());
        assert!(distance_regularity_check(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn c5_square_is_not_distance_regular() {
        let c5 = Graph::cycle(5).unwrap();
        let p = cartesian_product(&c5, &c5);
        let (x, y, z) = (p.index(0, 0), p.index(0, 2), p.index(4, 4));
        let w = witness_for(&p.graph, x, y, z).unwrap().expect("the triple is a witness");
        assert_eq!((w.distance, w.family, w.first_count, w.second_count), (2, CountFamily::C, 1, 2));
        assert!(w.recheck(&p.graph).unwrap());

        let DistanceRegularity::NotRegular { witness } = distance_regularity_check(&p.graph).unwrap() else {
            panic!("C_5 □ C_5 is not distance-regular")
        };
        assert_eq!(witness.family, CountFamily::C);
        assert_eq!(witness.distance, 2);
        assert_eq!((witness.first_count, witness.second_count), (1, 2));
        assert_eq!(witness.first.0, witness.second.0);
        assert!(witness.recheck(&p.graph).unwrap());
    }
}
