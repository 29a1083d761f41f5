// SPDX-License-Identifier: Apache-2.0

//! Reference eigenvalue routines kept deliberately separate from the Jacobi
//! solver in [`crate::spectra`]: Householder reduction to tridiagonal form
//! followed by Sturm-sequence bisection on its characteristic polynomial,
//! and the DFT closed form for symmetric circulants.

use crate::spectra::SymMatrix;

/// Diagonal and off-diagonal of an orthogonally similar tridiagonal matrix.
pub fn householder_tridiagonal(m: &SymMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = m.order();
    let mut a = m.as_slice().to_vec();
    for k in 0..n.saturating_sub(2) {
        let len = n - k - 1;
        let x: Vec<f64> = (0..len).map(|i| a[(k + 1 + i) * n + k]).collect();
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if x[0] > 0.0 { -norm } else { norm };
        let mut v = x;
        v[0] -= alpha;
        let vn = v.iter().map(|t| t * t).sum::<f64>().sqrt();
        if vn == 0.0 {
            continue;
        }
        v.iter_mut().for_each(|t| *t /= vn);

        let at = |a: &[f64], i: usize, j: usize| a[(k + 1 + i) * n + (k + 1 + j)];
        let p: Vec<f64> = (0..len)
            .map(|i| (0..len).map(|j| at(&a, i, j) * v[j]).sum())
            .collect();
        let kk: f64 = v.iter().zip(&p).map(|(x, y)| x * y).sum();
        let q: Vec<f64> = p.iter().zip(&v).map(|(pi, vi)| pi - kk * vi).collect();
        for i in 0..len {
            for j in 0..len {
                a[(k + 1 + i) * n + (k + 1 + j)] -= 2.0 * (v[i] * q[j] + q[i] * v[j]);
            }
        }
        for i in 0..len {
            let val = if i == 0 { alpha } else { 0.0 };
            a[(k + 1 + i) * n + k] = val;
            a[k * n + k + 1 + i] = val;
        }
    }
    let diag = (0..n).map(|i| a[i * n + i]).collect();
    let off = (0..n.saturating_sub(1)).map(|i| a[(i + 1) * n + i]).collect();
    (diag, off)
}

/// Number of eigenvalues of the tridiagonal `(diag, off)` strictly below `x`,
/// from the sign pattern of its leading-minor recurrence.
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0f64;
    for i in 0..diag.len() {
        let e2 = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        q = diag[i] - x - if i == 0 { 0.0 } else { e2 / q };
        if q == 0.0 {
            q = -f64::EPSILON * (1.0 + x.abs());
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing every eigenvalue.
pub fn gershgorin_bounds(m: &SymMatrix) -> (f64, f64) {
    let n = m.order();
    (0..n).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), i| {
        let radius: f64 = (0..n).filter(|&j| j != i).map(|j| m.get(i, j).abs()).sum();
        (lo.min(m.get(i, i) - radius), hi.max(m.get(i, i) + radius))
    })
}

/// All eigenvalues, nonincreasing, by bisection on the Sturm count.
pub fn bisection_eigenvalues(m: &SymMatrix) -> Vec<f64> {
    let n = m.order();
    let (diag, off) = householder_tridiagonal(m);
    let (lo, hi) = gershgorin_bounds(m);
    let pad = 1e-9 * (1.0 + lo.abs().max(hi.abs()));
    let (lo, hi) = (lo - pad, hi + pad);
    let mut values: Vec<f64> = (0..n)
        .map(|k| {
            // k-th smallest: smallest x with count(x) > k
            let (mut a, mut b) = (lo, hi);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                if sturm_count(&diag, &off, mid) > k {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            0.5 * (a + b)
        })
        .collect();
    values.reverse();
    values
}

/// Eigenvalues of the symmetric circulant with first row `row`
/// (`row[j] == row[n - j]`), nonincreasing.
pub fn circulant_eigenvalues(row: &[f64]) -> Vec<f64> {
    let n = row.len();
    let mut values: Vec<f64> = (0..n)
        .map(|k| {
            row.iter()
                .enumerate()
                .map(|(j, c)| c * (2.0 * std::f64::consts::PI * ((j * k) % n) as f64 / n as f64).cos())
                .sum()
        })
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    values
}

/// Full circulant matrix with first row `row`.
pub fn circulant_matrix(row: &[f64]) -> Vec<f64> {
    let n = row.len();
    (0..n * n).map(|idx| row[(idx % n + n - idx / n) % n]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tridiagonal_preserves_trace_and_frobenius() {
        let data = vec![4.0, 1.0, -2.0, 2.0, 1.0, 2.0, 0.0, 1.0, -2.0, 0.0, 3.0, -2.0, 2.0, 1.0, -2.0, -1.0];
        let m = SymMatrix::new(4, data).unwrap();
        let (d, e) = householder_tridiagonal(&m);
        let trace: f64 = d.iter().sum();
        assert!((trace - 8.0).abs() < 1e-12);
        let frob2: f64 = m.as_slice().iter().map(|x| x * x).sum();
        let tri2: f64 = d.iter().map(|x| x * x).sum::<f64>() + 2.0 * e.iter().map(|x| x * x).sum::<f64>();
        assert!((frob2 - tri2).abs() < 1e-10);
    }

    #[test]
    fn bisection_on_known_matrices() {
        let m = SymMatrix::new(2, vec![2.0, 1.0, 1.0, 2.0]).unwrap();
        let v = bisection_eigenvalues(&m);
        assert!((v[0] - 3.0).abs() < 1e-12 && (v[1] - 1.0).abs() < 1e-12);
        let z = SymMatrix::new(3, vec![0.0; 9]).unwrap();
        assert!(bisection_eigenvalues(&z).iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn circulant_layout() {
        assert_eq!(circulant_matrix(&[0.0, 1.0, 2.0]), vec![0.0, 1.0, 2.0, 2.0, 0.0, 1.0, 1.0, 2.0, 0.0]);
        let v = circulant_eigenvalues(&[0.0, 1.0, 1.0]);
        assert!((v[0] - 2.0).abs() < 1e-12 && (v[2] + 1.0).abs() < 1e-12);
    }
}
