// SPDX-License-Identifier: Apache-2.0

//! Decides whether two different products of the same connected factors are
//! isomorphic, and backs every answer with a re-checkable certificate.
//!
//! Hypotheses per pair of kinds:
//!
//! | pair   | factors must be                      |
//! |--------|--------------------------------------|
//! | □ / ⊗  | connected                            |
//! | others | connected, each with ≥ 2 vertices    |

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{f_n_map, find_isomorphism, verify_isomorphism, IsoSearch, VertexBijection};
use crate::products::{expected_degree, product, ProductKind};
use crate::spectra::{adjacency_spectrum, cycle_adjacency_spectrum, product_adjacency_spectrum};

/// Minimum separation for an eigenvalue obstruction to count.
pub const EIGENVALUE_GAP: f64 = 1e-6;

/// Unordered pair of distinct product kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KindPair {
    CartKron,
    CartStrong,
    CartLex,
    KronStrong,
    KronLex,
    StrongLex,
}

impl KindPair {
    pub const ALL: [KindPair; 6] = [
        KindPair::CartKron,
        KindPair::CartStrong,
        KindPair::CartLex,
        KindPair::KronStrong,
        KindPair::KronLex,
        KindPair::StrongLex,
    ];

    pub fn of(a: ProductKind, b: ProductKind) -> Result<Self> {
        use ProductKind::*;
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        match (lo, hi) {
            (Cartesian, Kronecker) => Ok(KindPair::CartKron),
            (Cartesian, Strong) => Ok(KindPair::CartStrong),
            (Cartesian, Lexicographic) => Ok(KindPair::CartLex),
            (Kronecker, Strong) => Ok(KindPair::KronStrong),
            (Kronecker, Lexicographic) => Ok(KindPair::KronLex),
            (Strong, Lexicographic) => Ok(KindPair::StrongLex),
            _ => Err(Error::SameKind),
        }
    }

    pub fn kinds(self) -> (ProductKind, ProductKind) {
        use ProductKind::*;
        match self {
            KindPair::CartKron => (Cartesian, Kronecker),
            KindPair::CartStrong => (Cartesian, Strong),
            KindPair::CartLex => (Cartesian, Lexicographic),
            KindPair::KronStrong => (Kronecker, Strong),
            KindPair::KronLex => (Kronecker, Lexicographic),
            KindPair::StrongLex => (Strong, Lexicographic),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            KindPair::CartKron => "cart-kron",
            KindPair::CartStrong => "cart-strong",
            KindPair::CartLex => "cart-lex",
            KindPair::KronStrong => "kron-strong",
            KindPair::KronLex => "kron-lex",
            KindPair::StrongLex => "strong-lex",
        }
    }
}

impl fmt::Display for KindPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KindPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KindPair::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Hypothesis(format!("unknown product pair {s:?}")))
    }
}

/// Which argument decided the outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Both factors are the same odd cycle; the explicit map applies.
    EqualOddCycles,
    /// Both factors are `K_1`; both products are `K_1`.
    SingleVertexFactors,
    /// Some factor is not a cycle; extreme degrees differ.
    CartKronNotCycles,
    /// Both even cycles; only the Kronecker product is disconnected.
    CartKronEvenCycles,
    /// One even and one odd cycle; smallest adjacency eigenvalues differ.
    CartKronEvenOddCycles,
    /// Odd cycles of different lengths; smallest adjacency eigenvalues differ.
    CartKronUnequalOddCycles,
    CartStrongMaxDegree,
    CartLexMaxDegree,
    KronStrongMaxDegree,
    KronLexMaxDegree,
    /// Right factor complete; the products coincide on the same labeling.
    StrongLexCompleteFactor,
    StrongLexMinDegree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeKind {
    Min,
    Max,
}

/// Evidence for a decision. `first` refers to `G kind_a H`, `second` to
/// `G kind_b H`, in the order the caller passed the kinds.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum IsoCertificate {
    /// Vertex map from the first product onto the second.
    ExplicitMap { map: VertexBijection },
    DegreeObstruction { which: DegreeKind, first: usize, second: usize },
    ConnectivityObstruction { first: usize, second: usize },
    /// Smallest adjacency eigenvalues of the two products, and the values the
    /// Kronecker side can take.
    EigenvalueObstruction {
        first: f64,
        second: f64,
        kronecker_candidates: Vec<f64>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Decision {
    pub isomorphic: bool,
    pub rule: Rule,
    pub certificate: IsoCertificate,
}

fn extreme_degree(kind: ProductKind, g: &Graph, h: &Graph, which: DegreeKind) -> usize {
    // every degree formula is monotone in both factor degrees
    let (dg, dh) = match which {
        DegreeKind::Min => (g.min_degree(), h.min_degree()),
        DegreeKind::Max => (g.max_degree(), h.max_degree()),
    };
    expected_degree(kind, dg, dh, h.order())
}

fn check_hypotheses(pair: KindPair, g: &Graph, h: &Graph) -> Result<()> {
    for (name, f) in [("G", g), ("H", h)] {
        if !f.is_connected() {
            return Err(Error::Hypothesis(format!("{name} must be connected")));
        }
        if pair != KindPair::CartKron && f.order() < 2 {
            return Err(Error::Hypothesis(format!(
                "{name} must have at least two vertices for the {pair} pair"
            )));
        }
    }
    Ok(())
}

/// Decides whether `G kind_a H` and `G kind_b H` are isomorphic.
pub fn decide(kind_a: ProductKind, kind_b: ProductKind, g: &Graph, h: &Graph) -> Result<Decision> {
    let pair = KindPair::of(kind_a, kind_b)?;
    check_hypotheses(pair, g, h)?;
    // `swap` is true when the caller's order is the reverse of `pair.kinds()`
    let swap = kind_a != pair.kinds().0;

    let degree = |which, rule| {
        let (lo, hi) = pair.kinds();
        let (first, second) = orient(swap, extreme_degree(lo, g, h, which), extreme_degree(hi, g, h, which));
        Decision {
            isomorphic: false,
            rule,
            certificate: IsoCertificate::DegreeObstruction { which, first, second },
        }
    };

    let decision = match pair {
        KindPair::CartKron => decide_cart_kron(g, h, swap, &degree)?,
        KindPair::CartStrong => degree(DegreeKind::Max, Rule::CartStrongMaxDegree),
        KindPair::CartLex => degree(DegreeKind::Max, Rule::CartLexMaxDegree),
        KindPair::KronStrong => degree(DegreeKind::Max, Rule::KronStrongMaxDegree),
        KindPair::KronLex => degree(DegreeKind::Max, Rule::KronLexMaxDegree),
        KindPair::StrongLex if h.is_complete() => {
            let n = g.order() * h.order();
            let map = VertexBijection::identity(n);
            let strong = product(ProductKind::Strong, g, h).graph;
            let lex = product(ProductKind::Lexicographic, g, h).graph;
            assert!(verify_isomorphism(&strong, &lex, &map)?.is_valid());
            Decision {
                isomorphic: true,
                rule: Rule::StrongLexCompleteFactor,
                certificate: IsoCertificate::ExplicitMap { map },
            }
        }
        KindPair::StrongLex => degree(DegreeKind::Min, Rule::StrongLexMinDegree),
    };
    Ok(decision)
}

/// Puts a pair of values back into the caller's kind order.
fn orient<T>(swap: bool, x: T, y: T) -> (T, T) {
    if swap {
        (y, x)
    } else {
        (x, y)
    }
}

fn decide_cart_kron(
    g: &Graph,
    h: &Graph,
    swap: bool,
    degree: &dyn Fn(DegreeKind, Rule) -> Decision,
) -> Result<Decision> {
    if g.order() == 1 && h.order() == 1 {
        return Ok(Decision {
            isomorphic: true,
            rule: Rule::SingleVertexFactors,
            certificate: IsoCertificate::ExplicitMap {
                map: VertexBijection::identity(1),
            },
        });
    }
    let (Some(n), Some(m)) = (g.detect_cycle_graph(), h.detect_cycle_graph()) else {
        let cart_min = g.min_degree() + h.min_degree();
        let kron_min = g.min_degree() * h.min_degree();
        let which = if cart_min != kron_min { DegreeKind::Min } else { DegreeKind::Max };
        return Ok(degree(which, Rule::CartKronNotCycles));
    };
    if n == m && n % 2 == 1 {
        let map = f_n_map(n)?;
        let cart = product(ProductKind::Cartesian, g, h).graph;
        let kron = product(ProductKind::Kronecker, g, h).graph;
        // the detected cycles may be labeled arbitrarily; fall back to a
        // relabeled composition when the factors are not in cyclic order
        let map = if verify_isomorphism(&cart, &kron, &map)?.is_valid() {
            map
        } else {
            cycle_relabeled_map(g, h, n)?
        };
        let map = if swap { map.inverse() } else { map };
        return Ok(Decision {
            isomorphic: true,
            rule: Rule::EqualOddCycles,
            certificate: IsoCertificate::ExplicitMap { map },
        });
    }
    if n % 2 == 0 && m % 2 == 0 {
        let cart = product(ProductKind::Cartesian, g, h).graph.component_count();
        let kron = product(ProductKind::Kronecker, g, h).graph.component_count();
        let (first, second) = orient(swap, cart, kron);
        return Ok(Decision {
            isomorphic: false,
            rule: Rule::CartKronEvenCycles,
            certificate: IsoCertificate::ConnectivityObstruction { first, second },
        });
    }
    let sg = cycle_adjacency_spectrum(n)?;
    let sh = cycle_adjacency_spectrum(m)?;
    let cart = product_adjacency_spectrum(ProductKind::Cartesian, &sg, &sh)?.smallest();
    let kron = product_adjacency_spectrum(ProductKind::Kronecker, &sg, &sh)?.smallest();
    let (rule, kronecker_candidates) = if n % 2 == 1 && m % 2 == 1 {
        (Rule::CartKronUnequalOddCycles, vec![2.0 * sg.smallest(), 2.0 * sh.smallest()])
    } else {
        let odd_min = if n % 2 == 1 { sg.smallest() } else { sh.smallest() };
        (Rule::CartKronEvenOddCycles, vec![-4.0, 2.0 * odd_min])
    };
    debug_assert!((cart - kron).abs() > EIGENVALUE_GAP);
    let (first, second) = orient(swap, cart, kron);
    Ok(Decision {
        isomorphic: false,
        rule,
        certificate: IsoCertificate::EigenvalueObstruction {
            first,
            second,
            kronecker_candidates,
        },
    })
}

/// Conjugates the explicit map by cyclic orderings of `g` and `h`, so it
/// applies to cycles whose vertex labels are not `0, 1, ..., n-1` in order.
fn cycle_relabeled_map(g: &Graph, h: &Graph, n: usize) -> Result<VertexBijection> {
    let cyclic_order = |c: &Graph| {
        let mut order = vec![0usize];
        let mut prev = usize::MAX;
        while order.len() < n {
            let cur = *order.last().expect("nonempty");
            let next = *c
                .neighbors(cur)
                .iter()
                .find(|&&w| w != prev)
                .expect("cycle vertices have two neighbors");
            prev = cur;
            order.push(next);
        }
        order
    };
    // position k in the cycle -> vertex label
    let og = cyclic_order(g);
    let oh = cyclic_order(h);
    let mut pos_g = vec![0; n];
    let mut pos_h = vec![0; n];
    for k in 0..n {
        pos_g[og[k]] = k;
        pos_h[oh[k]] = k;
    }
    let f = f_n_map(n)?;
    let forward = (0..n * n)
        .map(|v| {
            let (i, j) = (v / n, v % n);
            let image = f.apply(pos_g[i] * n + pos_h[j]);
            og[image / n] * n + oh[image % n]
        })
        .collect();
    VertexBijection::new(forward)
}

/// Re-derives a decision's certificate from the constructed products.
pub fn verify_decision(
    kind_a: ProductKind,
    kind_b: ProductKind,
    g: &Graph,
    h: &Graph,
    decision: &Decision,
) -> Result<bool> {
    let a = product(kind_a, g, h).graph;
    let b = product(kind_b, g, h).graph;
    Ok(match &decision.certificate {
        IsoCertificate::ExplicitMap { map } => {
            decision.isomorphic && verify_isomorphism(&a, &b, map)?.is_valid()
        }
        IsoCertificate::DegreeObstruction { which, first, second } => {
            let measure = |x: &Graph| match which {
                DegreeKind::Min => x.min_degree(),
                DegreeKind::Max => x.max_degree(),
            };
            !decision.isomorphic && measure(&a) == *first && measure(&b) == *second && first != second
        }
        IsoCertificate::ConnectivityObstruction { first, second } => {
            !decision.isomorphic
                && a.component_count() == *first
                && b.component_count() == *second
                && first != second
        }
        IsoCertificate::EigenvalueObstruction { first, second, .. } => {
            let sa = adjacency_spectrum(&a).smallest();
            let sb = adjacency_spectrum(&b).smallest();
            !decision.isomorphic
                && (sa - first).abs() < 1e-7
                && (sb - second).abs() < 1e-7
                && (sa - sb).abs() > EIGENVALUE_GAP
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    Agree,
    Disagree,
    /// The search budget ran out; nothing is claimed either way.
    Unvalidated,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossValidation {
    pub decision: Decision,
    pub search_isomorphic: Option<bool>,
    pub search_nodes: u64,
    pub agreement: Agreement,
    pub elapsed_secs: f64,
}

/// Runs [`decide`] and an independent isomorphism search on the two
/// constructed products, and compares.
pub fn cross_validate(kind_a: ProductKind, kind_b: ProductKind, g: &Graph, h: &Graph) -> Result<CrossValidation> {
    cross_validate_with(IsoSearch::default(), kind_a, kind_b, g, h)
}

pub fn cross_validate_with(
    search: IsoSearch,
    kind_a: ProductKind,
    kind_b: ProductKind,
    g: &Graph,
    h: &Graph,
) -> Result<CrossValidation> {
    let start = Instant::now();
    let decision = decide(kind_a, kind_b, g, h)?;
    let a = product(kind_a, g, h).graph;
    let b = product(kind_b, g, h).graph;
    let outcome = search.run(&a, &b);
    let agreement = match outcome.answer() {
        None => Agreement::Unvalidated,
        Some(ans) if ans == decision.isomorphic => Agreement::Agree,
        Some(_) => Agreement::Disagree,
    };
    Ok(CrossValidation {
        decision,
        search_isomorphic: outcome.answer(),
        search_nodes: outcome.nodes(),
        agreement,
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

/// Brute-force answer only, for callers that want the search without a
/// decision.
pub fn search_products(kind_a: ProductKind, kind_b: ProductKind, g: &Graph, h: &Graph) -> Option<bool> {
    find_isomorphism(&product(kind_a, g, h).graph, &product(kind_b, g, h).graph).answer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ProductKind::*;

    fn c(n: usize) -> Graph {
        Graph::cycle(n).unwrap()
    }

    #[test]
    fn odd_cycles_give_explicit_map() {
        let d = decide(Cartesian, Kronecker, &c(7), &c(7)).unwrap();
        assert!(d.isomorphic);
        assert_eq!(d.rule, Rule::EqualOddCycles);
        assert_eq!(d.certificate, IsoCertificate::ExplicitMap { map: f_n_map(7).unwrap() });
        assert!(verify_decision(Cartesian, Kronecker, &c(7), &c(7), &d).unwrap());

        let rev = decide(Kronecker, Cartesian, &c(7), &c(7)).unwrap();
        assert!(verify_decision(Kronecker, Cartesian, &c(7), &c(7), &rev).unwrap());
    }

    #[test]
    fn relabeled_odd_cycle_still_certified() {
        let g = c(5).relabel(&[3, 0, 4, 1, 2]).unwrap();
        let d = decide(Cartesian, Kronecker, &g, &c(5)).unwrap();
        assert!(d.isomorphic);
        assert!(verify_decision(Cartesian, Kronecker, &g, &c(5), &d).unwrap());
    }

    #[test]
    fn even_cycles_connectivity() {
        let d = decide(Cartesian, Kronecker, &c(6), &c(6)).unwrap();
        assert_eq!(d.rule, Rule::CartKronEvenCycles);
        assert_eq!(d.certificate, IsoCertificate::ConnectivityObstruction { first: 1, second: 2 });
    }

    #[test]
    fn unequal_odd_cycles_eigenvalues() {
        let d = decide(Cartesian, Kronecker, &c(5), &c(7)).unwrap();
        assert_eq!(d.rule, Rule::CartKronUnequalOddCycles);
        let IsoCertificate::EigenvalueObstruction { first, second, ref kronecker_candidates } = d.certificate else {
            panic!("expected eigenvalue obstruction")
        };
        assert!((first - second).abs() > EIGENVALUE_GAP);
        assert!(kronecker_candidates.iter().any(|x| (x - second).abs() < 1e-12));
        assert!(verify_decision(Cartesian, Kronecker, &c(5), &c(7), &d).unwrap());
    }

    #[test]
    fn even_odd_cycles_eigenvalues() {
        let d = decide(Cartesian, Kronecker, &c(6), &c(5)).unwrap();
        assert_eq!(d.rule, Rule::CartKronEvenOddCycles);
        let IsoCertificate::EigenvalueObstruction { first, second, .. } = d.certificate else {
            panic!("expected eigenvalue obstruction")
        };
        let lambda = 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos();
        assert!((first - (-2.0 + lambda)).abs() < 1e-12);
        assert!((second + 4.0).abs() < 1e-12);
    }

    #[test]
    fn strong_lex() {
        let d = decide(Strong, Lexicographic, &Graph::path(3).unwrap(), &Graph::complete(3).unwrap()).unwrap();
        assert!(d.isomorphic);
        assert_eq!(d.certificate, IsoCertificate::ExplicitMap { map: VertexBijection::identity(9) });

        let (k2, p3) = (Graph::complete(2).unwrap(), Graph::path(3).unwrap());
        let d = decide(Strong, Lexicographic, &k2, &p3).unwrap();
        assert_eq!(
            d.certificate,
            IsoCertificate::DegreeObstruction { which: DegreeKind::Min, first: 3, second: 4 }
        );
        assert!(verify_decision(Strong, Lexicographic, &k2, &p3, &d).unwrap());
        assert_eq!(search_products(Strong, Lexicographic, &k2, &p3), Some(false));
    }

    #[test]
    fn hypotheses() {
        let k1 = Graph::complete(1).unwrap();
        let p3 = Graph::path(3).unwrap();
        assert!(matches!(decide(Cartesian, Strong, &k1, &p3), Err(Error::Hypothesis(_))));
        let disc = Graph::empty(2).unwrap();
        assert!(matches!(decide(Cartesian, Kronecker, &disc, &p3), Err(Error::Hypothesis(_))));
        assert_eq!(decide(Strong, Strong, &p3, &p3), Err(Error::SameKind));

        let d = decide(Cartesian, Kronecker, &k1, &p3).unwrap();
        assert!(!d.isomorphic);
        assert!(verify_decision(Cartesian, Kronecker, &k1, &p3, &d).unwrap());
        let d = decide(Cartesian, Kronecker, &k1, &k1).unwrap();
        assert!(d.isomorphic && d.rule == Rule::SingleVertexFactors);
    }

    #[test]
    fn cross_validation_examples() {
        let cv = cross_validate(Cartesian, Kronecker, &c(5), &c(5)).unwrap();
        assert_eq!(cv.agreement, Agreement::Agree);
        assert!(cv.decision.isomorphic);
        let p2 = Graph::path(2).unwrap();
        let cv = cross_validate(Cartesian, Strong, &p2, &p2).unwrap();
        assert_eq!(cv.agreement, Agreement::Agree);
        assert!(!cv.decision.isomorphic);
        let k2 = Graph::complete(2).unwrap();
        let cv = cross_validate(Kronecker, Lexicographic, &k2, &k2).unwrap();
        assert_eq!(cv.agreement, Agreement::Agree);
        let cv = cross_validate_with(IsoSearch::with_budget(1), Cartesian, Kronecker, &c(9), &c(9)).unwrap();
        assert_eq!(cv.agreement, Agreement::Unvalidated);
    }

    #[test]
    fn pair_names() {
        for p in KindPair::ALL {
            assert_eq!(p.name().parse::<KindPair>().unwrap(), p);
            let (a, b) = p.kinds();
            assert_eq!(KindPair::of(b, a).unwrap(), p);
        }
    }
}
