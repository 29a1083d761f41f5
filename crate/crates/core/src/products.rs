// SPDX-License-Identifier: Apache-2.0

//! The four standard graph products and the closed-form degree and diameter
//! formulas used to cross-check them.
//!
//! Every product of `G` (order `n`) and `H` (order `m`) lives on the vertex
//! set `V(G) x V(H)` with the row-major labeling `(i, j) -> i * m + j`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Kronecker,
    Strong,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Kronecker,
        ProductKind::Strong,
        ProductKind::Lexicographic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Kronecker => "kronecker",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lexicographic",
        }
    }

    pub fn symbol(self) -> char {
        match self {
            ProductKind::Cartesian => '□',
            ProductKind::Kronecker => '⊗',
            ProductKind::Strong => '⊠',
            ProductKind::Lexicographic => '∘',
        }
    }

    /// The defining adjacency rule on factor vertex pairs `(i, j)` and `(r, s)`.
    pub fn adjacent(self, g: &Graph, h: &Graph, (i, j): (usize, usize), (r, s): (usize, usize)) -> bool {
        let cart = (i == r && h.has_edge(j, s)) || (g.has_edge(i, r) && j == s);
        let kron = g.has_edge(i, r) && h.has_edge(j, s);
        match self {
            ProductKind::Cartesian => cart,
            ProductKind::Kronecker => kron,
            ProductKind::Strong => cart || kron,
            ProductKind::Lexicographic => g.has_edge(i, r) || (i == r && h.has_edge(j, s)),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cartesian" | "cart" => Ok(ProductKind::Cartesian),
            "kronecker" | "kron" | "tensor" | "direct" => Ok(ProductKind::Kronecker),
            "strong" => Ok(ProductKind::Strong),
            "lexicographic" | "lex" => Ok(ProductKind::Lexicographic),
            other => Err(Error::Hypothesis(format!("unknown product kind {other:?}"))),
        }
    }
}

/// A product graph together with the labeling that built it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    pub graph: Graph,
    pub kind: ProductKind,
    pub left_order: usize,
    pub right_order: usize,
}

impl ProductGraph {
    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.right_order + j
    }

    #[inline]
    pub fn pair(&self, v: usize) -> (usize, usize) {
        (v / self.right_order, v % self.right_order)
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

/// Builds `G kind H`.
pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> ProductGraph {
    let (n, m) = (g.order(), h.order());
    let idx = |i: usize, j: usize| i * m + j;
    let mut b = GraphBuilder::new(n * m).expect("factor orders are positive");
    let mut add = |u: usize, v: usize| b.add_edge(u, v).expect("product indices in range");

    let cartesian = |add: &mut dyn FnMut(usize, usize)| {
        for i in 0..n {
            for (j, s) in h.edges() {
                add(idx(i, j), idx(i, s));
            }
        }
        for (i, r) in g.edges() {
            for j in 0..m {
                add(idx(i, j), idx(r, j));
            }
        }
    };
    let kronecker = |add: &mut dyn FnMut(usize, usize)| {
        for (i, r) in g.edges() {
            for (j, s) in h.edges() {
                add(idx(i, j), idx(r, s));
                add(idx(i, s), idx(r, j));
            }
        }
    };

    match kind {
        ProductKind::Cartesian => cartesian(&mut add),
        ProductKind::Kronecker => kronecker(&mut add),
        ProductKind::Strong => {
            cartesian(&mut add);
            kronecker(&mut add);
        }
        ProductKind::Lexicographic => {
            for i in 0..n {
                for (j, s) in h.edges() {
                    add(idx(i, j), idx(i, s));
                }
            }
            for (i, r) in g.edges() {
                for j in 0..m {
                    for s in 0..m {
                        add(idx(i, j), idx(r, s));
                    }
                }
            }
        }
    }
    ProductGraph {
        graph: b.build(),
        kind,
        left_order: n,
        right_order: m,
    }
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> ProductGraph {
    product(ProductKind::Cartesian, g, h)
}

pub fn kronecker_product(g: &Graph, h: &Graph) -> ProductGraph {
    product(ProductKind::Kronecker, g, h)
}

pub fn strong_product(g: &Graph, h: &Graph) -> ProductGraph {
    product(ProductKind::Strong, g, h)
}

pub fn lexicographic_product(g: &Graph, h: &Graph) -> ProductGraph {
    product(ProductKind::Lexicographic, g, h)
}

/// Degree of `(x, y)` in `G kind H` from `deg_G(x)`, `deg_H(y)` and `|V(H)|`.
pub fn expected_degree(kind: ProductKind, dg: usize, dh: usize, h_order: usize) -> usize {
    match kind {
        ProductKind::Cartesian => dg + dh,
        ProductKind::Kronecker => dg * dh,
        ProductKind::Strong => (dg + 1) * (dh + 1) - 1,
        ProductKind::Lexicographic => h_order * dg + dh,
    }
}

/// `diam(G □ H) = diam(G) + diam(H)` for connected factors.
pub fn expected_diameter_cartesian(g: &Graph, h: &Graph) -> Result<usize> {
    Ok(g.diameter()? + h.diameter()?)
}

/// Diameter of `C_m ⊗ H` for odd `m`, where `H` is connected and either
/// bipartite or an odd cycle. Other `H` have no closed form here.
pub fn expected_diameter_kronecker_cycle(m: usize, h: &Graph) -> Result<usize> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::RequiresOddCycle {
            what: "the odd-cycle Kronecker diameter formula",
            n: m,
        });
    }
    let r = h.diameter()?;
    if r == 0 {
        return Err(Error::Hypothesis("H must have diameter at least 1".into()));
    }
    if h.is_bipartite() {
        return Ok(m.max(r));
    }
    match h.detect_cycle_graph() {
        Some(n) if n % 2 == 1 => Ok(match m.cmp(&n) {
            std::cmp::Ordering::Equal => m - 1,
            std::cmp::Ordering::Greater => n.max((m - 1) / 2),
            std::cmp::Ordering::Less => m.max((n - 1) / 2),
        }),
        _ => Err(Error::Hypothesis(
            "H must be bipartite or an odd cycle".into(),
        )),
    }
}
