//! Dense real-symmetric eigenvalues by cyclic Jacobi rotations.

use alloc::vec;
use alloc::vec::Vec;

use crate::spectra::MatrixKind;
use crate::{Error, Result};

/// Off-diagonal Frobenius norm target, relative to `1 + ‖M‖_F`.
pub const CONVERGENCE_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// A dense symmetric matrix stored row-major.
///
/// Every write goes through [`SymmetricMatrix::set`], which mirrors the
/// entry, so the stored matrix is exactly symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        SymmetricMatrix { order, data: vec![0.0; order * order] }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Evaluates `f(i, j)` on the upper triangle (`i <= j`) and mirrors it.
    pub fn from_upper(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] = value;
        self.data[j * self.order + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|x| x * x).sum())
    }

    pub fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.order {
            for j in i + 1..self.order {
                let x = self.get(i, j);
                s += 2.0 * x * x;
            }
        }
        libm::sqrt(s)
    }

    /// `P·M·Pᵀ` for the permutation sending index `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.order);
        for i in 0..self.order {
            for j in i..self.order {
                out.set(perm[i], perm[j], self.get(i, j));
            }
        }
        out
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }
}

/// Eigenvalues sorted in non-increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    /// Which graph matrix produced the values, if any.
    pub source: Option<MatrixKind>,
}

impl Spectrum {
    /// Sorts `values` descending.
    pub fn new(mut values: Vec<f64>, source: Option<MatrixKind>) -> Self {
        values.sort_unstable_by(|a, b| b.total_cmp(a));
        Spectrum { values, source }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn smallest(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// Largest minus smallest eigenvalue, 0 for an empty spectrum.
    pub fn spread(&self) -> f64 {
        match (self.largest(), self.smallest()) {
            (Some(a), Some(b)) => a - b,
            _ => 0.0,
        }
    }

    /// Sum of the `k` largest values; `k` beyond the length sums everything.
    pub fn partial_sum(&self, k: usize) -> f64 {
        self.values.iter().take(k).sum()
    }

    /// `Σ|λᵢ − shift|`.
    pub fn deviation_sum(&self, shift: f64) -> f64 {
        self.values.iter().map(|x| libm::fabs(x - shift)).sum()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

/// All eigenvalues of `m`, sorted descending.
pub fn eigenvalues(m: &SymmetricMatrix) -> Result<Spectrum> {
    jacobi(m).map(|values| Spectrum::new(values, None))
}

/// `(largest, smallest)` eigenvalue.
pub fn spectral_extremes(m: &SymmetricMatrix) -> Result<(f64, f64)> {
    let s = eigenvalues(m)?;
    Ok((s.largest().unwrap_or(0.0), s.smallest().unwrap_or(0.0)))
}

fn jacobi(m: &SymmetricMatrix) -> Result<Vec<f64>> {
    if m.data.iter().any(|x| !x.is_finite()) {
        return Err(Error::NumericalInput);
    }
    let n = m.order;
    let mut a = m.data.clone();
    let target = CONVERGENCE_TOL * (1.0 + m.frobenius_norm());

    for _ in 0..MAX_SWEEPS {
        let off = off_norm(&a, n);
        if off <= target {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if libm::fabs(theta) > 1e150 {
                    0.5 / theta
                } else {
                    let t = 1.0 / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0));
                    if theta < 0.0 { -t } else { t }
                };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
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
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }
    if off_norm(&a, n) <= target {
        return Ok((0..n).map(|i| a[i * n + i]).collect());
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let x = a[i * n + j];
            s += x * x;
        }
    }
    libm::sqrt(2.0 * s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!(libm::fabs(x - y) <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn k2_a_alpha() {
        let alpha = 0.3;
        let m = SymmetricMatrix::from_upper(2, |i, j| if i == j { alpha } else { 1.0 - alpha });
        close(eigenvalues(&m).unwrap().values(), &[1.0, -0.4], 1e-12);
    }

    #[test]
    fn identity_and_zero() {
        close(eigenvalues(&SymmetricMatrix::identity(3)).unwrap().values(), &[1.0; 3], 0.0);
        assert_eq!(spectral_extremes(&SymmetricMatrix::zeros(4)).unwrap(), (0.0, 0.0));
        assert!(eigenvalues(&SymmetricMatrix::zeros(0)).unwrap().is_empty());
    }

    #[test]
    fn path_4_adjacency() {
        let m = SymmetricMatrix::from_upper(4, |i, j| if j == i + 1 { 1.0 } else { 0.0 });
        let expected: Vec<f64> = (1..=4).map(|k| 2.0 * libm::cos(k as f64 * PI / 5.0)).collect();
        close(eigenvalues(&m).unwrap().values(), &expected, 1e-9);
        close(&expected, &[1.61803, 0.61803, -0.61803, -1.61803], 1e-5);
    }

    #[test]
    fn non_finite_input() {
        let mut m = SymmetricMatrix::zeros(2);
        m.set(0, 1, f64::NAN);
        assert_eq!(eigenvalues(&m), Err(Error::NumericalInput));
        m.set(0, 1, f64::INFINITY);
        assert_eq!(eigenvalues(&m), Err(Error::NumericalInput));
    }

    #[test]
    fn construction_is_symmetric() {
        let mut m = SymmetricMatrix::zeros(3);
        m.set(2, 0, 5.0);
        assert_eq!(m.get(0, 2), 5.0);
        assert_eq!(m.off_diagonal_norm(), libm::sqrt(50.0));
    }

    #[test]
    fn spectrum_helpers() {
        let s = Spectrum::new(alloc::vec![1.0, 3.0, 1.0, 1.0], None);
        assert_eq!(s.values(), &[3.0, 1.0, 1.0, 1.0]);
        assert_eq!(s.partial_sum(1), 3.0);
        assert_eq!(s.partial_sum(99), 6.0);
        assert_eq!(s.spread(), 2.0);
        assert_eq!(s.deviation_sum(1.5), 3.0);
    }
}
