// SPDX-License-Identifier: Apache-2.0

//! Dense symmetric eigenvalues, eigenvalue clustering, and the closed-form
//! spectra of cycles and of Cartesian / Kronecker products.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::products::ProductKind;

/// Absolute clustering tolerance used when none is given.
pub const DEFAULT_TOL: f64 = 1e-6;

const SYMMETRY_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Validates shape, finiteness and symmetry (within 1e-12 elementwise).
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 || data.len() != n * n {
            return Err(Error::BadMatrixShape {
                len: data.len(),
                expected: n * n,
            });
        }
        for row in 0..n {
            for col in 0..n {
                let x = data[row * n + col];
                if !x.is_finite() {
                    return Err(Error::NonFinite { row, col });
                }
                if col > row && (x - data[col * n + row]).abs() > SYMMETRY_TOL {
                    return Err(Error::NotSymmetric { row, col });
                }
            }
        }
        Ok(Self { n, data })
    }

    pub fn adjacency(g: &Graph) -> Self {
        Self {
            n: g.order(),
            data: g.adjacency_matrix(),
        }
    }

    pub fn distance(g: &Graph) -> Result<Self> {
        let d = g.all_pairs_distances()?;
        Ok(Self {
            n: g.order(),
            data: d.to_f64(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

/// All eigenvalues of `m` with multiplicity, nonincreasing.
///
/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass falls
/// below machine precision relative to the whole matrix.
pub fn symmetric_eigenvalues(m: &SymMatrix) -> Vec<f64> {
    let n = m.n;
    let mut a = m.data.clone();
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = f64::EPSILON * frob;

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q] * a[p * n + q])
            .sum::<f64>()
            .sqrt();
        if off <= threshold || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    sort_nonincreasing(&mut values);
    values
}

fn sort_nonincreasing(values: &mut [f64]) {
    values.sort_by(|x, y| y.total_cmp(x));
}

/// Eigenvalue multiset: raw values plus single-linkage clusters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    clusters: Vec<(f64, usize)>,
    tol: f64,
}

/// Groups sorted values whose consecutive gaps are at most `tol`; each
/// cluster is represented by its mean.
pub fn cluster(mut values: Vec<f64>, tol: f64) -> Result<Spectrum> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::BadTolerance(tol));
    }
    sort_nonincreasing(&mut values);
    let mut clusters = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i - 1] - values[i] > tol {
            let group = &values[start..i];
            let mean = group.iter().sum::<f64>() / group.len() as f64;
            clusters.push((mean, group.len()));
            start = i;
        }
    }
    Ok(Spectrum {
        values,
        clusters,
        tol,
    })
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `(representative, multiplicity)`, representatives decreasing.
    pub fn clusters(&self) -> &[(f64, usize)] {
        &self.clusters
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn distinct_count(&self) -> usize {
        self.clusters.len()
    }

    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Multiplicity of the cluster containing `x`, or 0.
    pub fn multiplicity_of(&self, x: f64) -> usize {
        self.clusters
            .iter()
            .find(|(v, _)| (v - x).abs() <= self.tol)
            .map_or(0, |&(_, m)| m)
    }

    /// Same values after reclustering at `tol`.
    pub fn with_tol(&self, tol: f64) -> Result<Spectrum> {
        cluster(self.values.clone(), tol)
    }

    /// Largest elementwise difference against `other` (both sorted), or
    /// `None` if the orders differ.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        (self.order() == other.order()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .fold(0.0, |m: f64, (a, b)| m.max((a - b).abs()))
        })
    }

    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.max_deviation(other).is_some_and(|d| d <= tol)
    }
}

pub fn adjacency_spectrum(g: &Graph) -> Spectrum {
    adjacency_spectrum_with_tol(g, DEFAULT_TOL).expect("default tolerance is valid")
}

pub fn adjacency_spectrum_with_tol(g: &Graph, tol: f64) -> Result<Spectrum> {
    cluster(symmetric_eigenvalues(&SymMatrix::adjacency(g)), tol)
}

pub fn distance_spectrum(g: &Graph) -> Result<Spectrum> {
    distance_spectrum_with_tol(g, DEFAULT_TOL)
}

pub fn distance_spectrum_with_tol(g: &Graph, tol: f64) -> Result<Spectrum> {
    cluster(symmetric_eigenvalues(&SymMatrix::distance(g)?), tol)
}

/// `{2 cos(2 pi k / n) : k = 1..n}`.
pub fn cycle_adjacency_spectrum(n: usize) -> Result<Spectrum> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    let values = (1..=n)
        .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
        .collect();
    cluster(values, DEFAULT_TOL)
}

/// Adjacency spectrum of `G □ H` (pairwise sums) or `G ⊗ H` (pairwise
/// products) from the factor spectra.
pub fn product_adjacency_spectrum(kind: ProductKind, sg: &Spectrum, sh: &Spectrum) -> Result<Spectrum> {
    let combine: fn(f64, f64) -> f64 = match kind {
        ProductKind::Cartesian => |a, b| a + b,
        ProductKind::Kronecker => |a, b| a * b,
        other => return Err(Error::NoClosedForm(other.name())),
    };
    let values = sg
        .values
        .iter()
        .flat_map(|&a| sh.values.iter().map(move |&b| combine(a, b)))
        .collect();
    cluster(values, sg.tol.max(sh.tol))
}

/// Distance spectrum of `G □ H` for transmission-regular `G` (order `m`,
/// transmission `s`) and `H` (order `n`, transmission `t`):
/// `{n s + m t} ∪ {n mu_i} ∪ {m eta_j} ∪ {0 ^ (m-1)(n-1)}`.
///
/// `sg` and `sh` must be the distance spectra with the Perron values `s`
/// and `t` first.
pub fn cartesian_distance_spectrum_tr(
    sg: &Spectrum,
    sh: &Spectrum,
    m: usize,
    n: usize,
    s: f64,
    t: f64,
) -> Result<Spectrum> {
    if sg.order() != m {
        return Err(Error::OrderMismatch { left: sg.order(), right: m });
    }
    if sh.order() != n {
        return Err(Error::OrderMismatch { left: sh.order(), right: n });
    }
    let tol = sg.tol.max(sh.tol);
    if (sg.largest() - s).abs() > tol * (1.0 + s.abs()) {
        return Err(Error::NotTransmissionRegular { which: "left" });
    }
    if (sh.largest() - t).abs() > tol * (1.0 + t.abs()) {
        return Err(Error::NotTransmissionRegular { which: "right" });
    }
    let (mf, nf) = (m as f64, n as f64);
    let mut values = Vec::with_capacity(m * n);
    values.push(nf * s + mf * t);
    values.extend(sg.values[1..].iter().map(|&mu| nf * mu));
    values.extend(sh.values[1..].iter().map(|&eta| mf * eta));
    values.extend(std::iter::repeat_n(0.0, (m - 1) * (n - 1)));
    cluster(values, tol)
}

/// Convenience wrapper that verifies transmission regularity of both
/// factors before applying [`cartesian_distance_spectrum_tr`].
pub fn cartesian_distance_spectrum(g: &Graph, h: &Graph) -> Result<Spectrum> {
    let s = g
        .transmission_profile()?
        .regular_value
        .ok_or(Error::NotTransmissionRegular { which: "left" })?;
    let t = h
        .transmission_profile()?
        .regular_value
        .ok_or(Error::NotTransmissionRegular { which: "right" })?;
    cartesian_distance_spectrum_tr(
        &distance_spectrum(g)?,
        &distance_spectrum(h)?,
        g.order(),
        h.order(),
        s as f64,
        t as f64,
    )
}

/// Distance spectrum of `C_n ⊗ C_n` for odd `n` from that of `C_n`:
/// `{2n l_1} ∪ {n l_i twice : i = 2..n} ∪ {0 ^ (n-1)^2}`.
pub fn kronecker_cycle_distance_spectrum(n: usize) -> Result<Spectrum> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::RequiresOddCycle {
            what: "the C_n ⊗ C_n distance spectrum",
            n,
        });
    }
    let base = distance_spectrum(&Graph::cycle(n)?)?;
    let nf = n as f64;
    let mut values = Vec::with_capacity(n * n);
    values.push(2.0 * nf * base.largest());
    for &lambda in &base.values[1..] {
        values.extend([nf * lambda, nf * lambda]);
    }
    values.extend(std::iter::repeat_n(0.0, (n - 1) * (n - 1)));
    cluster(values, base.tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    /// Eigenvalues of the symmetric circulant with first row `c`, by DFT.
    fn circulant_dft(c: &[f64]) -> Vec<f64> {
        let n = c.len();
        let mut v: Vec<f64> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| c[j] * (2.0 * PI * (j * k) as f64 / n as f64).cos())
                    .sum()
            })
            .collect();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn eigen_small_examples() {
        let k2 = SymMatrix::adjacency(&Graph::complete(2).unwrap());
        assert_close(&symmetric_eigenvalues(&k2), &[1.0, -1.0], 1e-12);
        let zero = SymMatrix::new(3, vec![0.0; 9]).unwrap();
        assert_eq!(symmetric_eigenvalues(&zero), vec![0.0; 3]);
        let c5 = symmetric_eigenvalues(&SymMatrix::adjacency(&Graph::cycle(5).unwrap()));
        let phi = (5f64.sqrt() - 1.0) / 2.0;
        assert_close(&c5, &[2.0, phi, phi, -1.0 - phi, -1.0 - phi], 1e-12);
    }

    #[test]
    fn matrix_validation() {
        assert_eq!(
            SymMatrix::new(2, vec![0.0, 1.0, 2.0, 0.0]),
            Err(Error::NotSymmetric { row: 0, col: 1 })
        );
        assert_eq!(
            SymMatrix::new(2, vec![0.0, 1.0, 1.0, f64::NAN]),
            Err(Error::NonFinite { row: 1, col: 1 })
        );
        assert!(SymMatrix::new(2, vec![0.0; 3]).is_err());
        assert!(SymMatrix::new(2, vec![0.0, 1.0, 1.0 + 1e-13, 0.0]).is_ok());
    }

    #[test]
    fn clustering() {
        let s = cluster(vec![1.0, 1.0 + 1e-12, 3.0], 1e-9).unwrap();
        assert_eq!(s.clusters().len(), 2);
        assert_eq!(s.clusters()[0].1, 1);
        assert!((s.clusters()[0].0 - 3.0).abs() < 1e-15);
        assert_eq!(s.clusters()[1].1, 2);
        assert_eq!(cluster(vec![0.0; 3], 0.5).unwrap().clusters(), &[(0.0, 3)]);
        assert!(cluster(vec![1.0], 0.0).is_err());
    }

    #[test]
    fn c5_distance_spectrum_against_dft() {
        let oracle = circulant_dft(&[0.0, 1.0, 2.0, 2.0, 1.0]);
        let s = distance_spectrum(&Graph::cycle(5).unwrap()).unwrap();
        assert_close(s.values(), &oracle, 1e-10);
        assert_eq!(s.distinct_count(), 3);
        assert!((s.largest() - 6.0).abs() < 1e-10);
        assert_eq!(s.multiplicity_of(-2.618_033_988_749_895), 2);
        assert_eq!(s.multiplicity_of(-0.381_966_011_250_105), 2);
    }

    #[test]
    fn cycle_spectrum_closed_form() {
        assert_close(cycle_adjacency_spectrum(4).unwrap().values(), &[2.0, 0.0, 0.0, -2.0], 1e-12);
        assert!((cycle_adjacency_spectrum(6).unwrap().smallest() + 2.0).abs() < 1e-12);
        let c5 = cycle_adjacency_spectrum(5).unwrap();
        assert!((c5.smallest() - 2.0 * (4.0 * PI / 5.0).cos()).abs() < 1e-12);
        assert!((c5.smallest() + 2.0).abs() > 0.3);
        for n in 3..=20 {
            let s = cycle_adjacency_spectrum(n).unwrap();
            assert_eq!(s.distinct_count(), n / 2 + 1, "C_{n}");
            assert_eq!((s.smallest() + 2.0).abs() < 1e-12, n % 2 == 0);
            let direct = adjacency_spectrum(&Graph::cycle(n).unwrap());
            assert!(s.approx_eq(&direct, 1e-10));
        }
        assert!(cycle_adjacency_spectrum(2).is_err());
    }

    #[test]
    fn graph_spectra() {
        let k3 = adjacency_spectrum(&Graph::complete(3).unwrap());
        assert_close(k3.values(), &[2.0, -1.0, -1.0], 1e-12);
        let k2 = distance_spectrum(&Graph::complete(2).unwrap()).unwrap();
        assert_close(k2.values(), &[1.0, -1.0], 1e-12);
        let disc = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(distance_spectrum(&disc).is_err());
    }

    #[test]
    fn product_spectrum_examples() {
        let k2 = adjacency_spectrum(&Graph::complete(2).unwrap());
        let cart = product_adjacency_spectrum(ProductKind::Cartesian, &k2, &k2).unwrap();
        assert_close(cart.values(), &[2.0, 0.0, 0.0, -2.0], 1e-12);
        let kron = product_adjacency_spectrum(ProductKind::Kronecker, &k2, &k2).unwrap();
        assert_close(kron.values(), &[1.0, 1.0, -1.0, -1.0], 1e-12);
        assert!(product_adjacency_spectrum(ProductKind::Strong, &k2, &k2).is_err());

        let c6 = cycle_adjacency_spectrum(6).unwrap();
        let c5 = cycle_adjacency_spectrum(5).unwrap();
        let s = product_adjacency_spectrum(ProductKind::Cartesian, &c6, &c5).unwrap();
        assert!((s.smallest() - (-2.0 + 2.0 * (4.0 * PI / 5.0).cos())).abs() < 1e-12);
    }

    #[test]
    fn cartesian_distance_k2_k2_is_c4() {
        let k2 = Graph::complete(2).unwrap();
        let formula = cartesian_distance_spectrum(&k2, &k2).unwrap();
        // D(C_4) is the circulant [0, 1, 2, 1]
        assert_close(formula.values(), &circulant_dft(&[0.0, 1.0, 2.0, 1.0]), 1e-12);
        assert_close(formula.values(), &[4.0, 0.0, -2.0, -2.0], 1e-12);
    }

    #[test]
    fn cartesian_distance_c5_c5() {
        let c5 = Graph::cycle(5).unwrap();
        let formula = cartesian_distance_spectrum(&c5, &c5).unwrap();
        let direct = distance_spectrum(&crate::products::cartesian_product(&c5, &c5).graph).unwrap();
        assert!(formula.approx_eq(&direct, 1e-9));
        assert!((formula.largest() - 60.0).abs() < 1e-9);
        assert_eq!(formula.multiplicity_of(0.0), 16);
        assert_eq!(formula.multiplicity_of(-13.090_169_943_749_474), 4);
        assert_eq!(formula.multiplicity_of(-1.909_830_056_250_525), 4);
    }

    #[test]
    fn cartesian_distance_rejects_irregular() {
        let p3 = Graph::path(3).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            cartesian_distance_spectrum(&p3, &c5),
            Err(Error::NotTransmissionRegular { which: "left" })
        );
        let sp = distance_spectrum(&p3).unwrap();
        let sc = distance_spectrum(&c5).unwrap();
        assert!(cartesian_distance_spectrum_tr(&sp, &sc, 3, 5, 2.0, 6.0).is_err());
    }

    #[test]
    fn kronecker_cycle_examples() {
        let s5 = kronecker_cycle_distance_spectrum(5).unwrap();
        assert!((s5.largest() - 60.0).abs() < 1e-9);
        assert_eq!(s5.multiplicity_of(0.0), 16);
        assert_eq!(s5.distinct_count(), 4);

        let s3 = kronecker_cycle_distance_spectrum(3).unwrap();
        let mut expect = vec![12.0];
        expect.extend([0.0; 4]);
        expect.extend([-3.0; 4]);
        assert_close(s3.values(), &expect, 1e-10);

        assert_eq!(kronecker_cycle_distance_spectrum(7).unwrap().distinct_count(), 5);
        assert!(kronecker_cycle_distance_spectrum(6).is_err());
        assert!(kronecker_cycle_distance_spectrum(1).is_err());
    }

    #[test]
    fn cycle_spectrum_symmetry() {
        for n in 3..30usize {
            let lambda = |k: usize| 2.0 * (2.0 * PI * k as f64 / n as f64).cos();
            for k in 0..n {
                assert!((lambda(n - k) - lambda(k)).abs() < 1e-12);
            }
        }
    }
}
