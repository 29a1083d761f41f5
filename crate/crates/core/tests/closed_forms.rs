// SPDX-License-Identifier: Apache-2.0

//! Library results against formulas computed here from scratch.

use std::f64::consts::PI;

use prodgraph::characterize::{decide, verify_decision, Rule};
use prodgraph::iso::{f_n_map, verify_isomorphism, IsoCheck};
use prodgraph::products::expected_diameter_kronecker_cycle;
use prodgraph::spectra::{cartesian_distance_spectrum, distance_spectrum};
use prodgraph::{product, Graph, ProductKind};

#[test]
fn f_n_is_an_isomorphism_for_odd_n() {
    for n in (3..=13).step_by(2) {
        let c = Graph::cycle(n).unwrap();
        let cart = product(ProductKind::Cartesian, &c, &c).graph;
        let kron = product(ProductKind::Kronecker, &c, &c).graph;
        assert_eq!(verify_isomorphism(&cart, &kron, &f_n_map(n).unwrap()).unwrap(), IsoCheck::Valid, "n={n}");
    }
    assert!(f_n_map(4).is_err());
}

#[test]
fn even_cycle_products_differ_in_components() {
    for n in [4usize, 6, 8] {
        let c = Graph::cycle(n).unwrap();
        let cart = product(ProductKind::Cartesian, &c, &c).graph;
        let kron = product(ProductKind::Kronecker, &c, &c).graph;
        assert_ne!(cart.component_count(), kron.component_count());
    }
}

#[test]
fn kronecker_cycle_diameter_against_bfs() {
    for m in [3usize, 5, 7, 9] {
        for n in 3..=10usize {
            let h = Graph::cycle(n).unwrap();
            let by_bfs = product(ProductKind::Kronecker, &Graph::cycle(m).unwrap(), &h).graph.diameter().unwrap();
            match expected_diameter_kronecker_cycle(m, &h) {
                Ok(d) => assert_eq!(d, by_bfs, "m={m} n={n}"),
                Err(e) => panic!("m={m} n={n}: {e}"),
            }
        }
    }
}

#[test]
fn cartesian_distance_spectrum_with_non_cycle_factors() {
    // K_n and K_{a,a} are transmission regular too
    let factors = [Graph::complete(4).unwrap(), Graph::complete_bipartite(3, 3).unwrap(), Graph::cycle(6).unwrap()];
    for g in &factors {
        for h in &factors {
            let formula = cartesian_distance_spectrum(g, h).unwrap();
            let direct = distance_spectrum(&product(ProductKind::Cartesian, g, h).graph).unwrap();
            assert!(formula.max_deviation(&direct).unwrap() < 1e-7);
        }
    }
    assert!(cartesian_distance_spectrum(&Graph::path(3).unwrap(), &Graph::cycle(5).unwrap()).is_err());
}

#[test]
fn eigenvalue_obstruction_values() {
    // smallest eigenvalue of C_n is 2 cos(2 pi floor(n/2) / n)
    let low = |n: usize| 2.0 * (2.0 * PI * (n / 2) as f64 / n as f64).cos();
    for (n, m) in [(3usize, 5usize), (5, 7), (4, 5), (6, 9)] {
        let d = decide(ProductKind::Cartesian, ProductKind::Kronecker, &Graph::cycle(n).unwrap(), &Graph::cycle(m).unwrap())
            .unwrap();
        assert!(!d.isomorphic);
        let cart = low(n) + low(m);
        // extreme products of factor eigenvalues pair one end with 2
        let kron = (2.0 * low(n)).min(2.0 * low(m));
        match d.certificate {
            prodgraph::characterize::IsoCertificate::EigenvalueObstruction { first, second, .. } => {
                assert!((first - cart).abs() < 1e-9, "n={n} m={m}");
                assert!((second - kron).abs() < 1e-9, "n={n} m={m}");
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        assert!(verify_decision(ProductKind::Cartesian, ProductKind::Kronecker, &Graph::cycle(n).unwrap(), &Graph::cycle(m).unwrap(), &d).unwrap());
    }
}

#[test]
fn strong_lex_identity_on_complete_factor() {
    let g = Graph::path(4).unwrap();
    let h = Graph::complete(3).unwrap();
    let d = decide(ProductKind::Lexicographic, ProductKind::Strong, &g, &h).unwrap();
    assert!(d.isomorphic);
    assert_eq!(d.rule, Rule::StrongLexCompleteFactor);
    let a = product(ProductKind::Strong, &g, &h).graph;
    let b = product(ProductKind::Lexicographic, &g, &h).graph;
    assert_eq!(a, b);
}
