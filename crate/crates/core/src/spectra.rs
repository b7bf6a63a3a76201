//! Graph matrices, their spectra, and the energies built on them.

use crate::eig::{eigenvalues, Spectrum, SymmetricMatrix};
use crate::{Error, Graph, Result};

/// Comparison slack for the σ-index: eigenvalues within this distance of
/// the shift count as `>=`.
pub const SIGMA_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatrixKind {
    Adjacency,
    /// `D − A`
    Laplacian,
    /// `D + A`
    SignlessLaplacian,
    /// `αD + (1 − α)A`, α ∈ [0, 1]
    AAlpha(f64),
}

impl MatrixKind {
    fn check(&self) -> Result<()> {
        match *self {
            MatrixKind::AAlpha(a) => check_alpha(a),
            _ => Ok(()),
        }
    }

    /// Value subtracted from each eigenvalue in the energy sum.
    pub fn mean_shift(&self, n: usize, m: usize) -> f64 {
        if n == 0 {
            return 0.0;
        }
        let avg_degree = 2.0 * m as f64 / n as f64;
        match *self {
            MatrixKind::Adjacency => 0.0,
            MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => avg_degree,
            MatrixKind::AAlpha(a) => a * avg_degree,
        }
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::InvalidAlpha(alpha))
    }
}

/// α restricted to [0, 1), where the partial-sum identities hold.
fn check_alpha_open(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::InvalidAlpha(alpha))
    }
}

pub fn build_matrix(g: &Graph, kind: MatrixKind) -> Result<SymmetricMatrix> {
    kind.check()?;
    let (diag, off) = match kind {
        MatrixKind::Adjacency => (0.0, 1.0),
        MatrixKind::Laplacian => (1.0, -1.0),
        MatrixKind::SignlessLaplacian => (1.0, 1.0),
        MatrixKind::AAlpha(a) => (a, 1.0 - a),
    };
    let mut m = SymmetricMatrix::zeros(g.order());
    for (v, d) in g.degrees().into_iter().enumerate() {
        m.set(v, v, diag * d as f64);
    }
    for &(u, v) in g.edges() {
        m.set(u, v, off);
    }
    Ok(m)
}

pub fn graph_spectrum(g: &Graph, kind: MatrixKind) -> Result<Spectrum> {
    let m = build_matrix(g, kind)?;
    let mut s = eigenvalues(&m)?;
    s.source = Some(kind);
    Ok(s)
}

/// One energy evaluation, with the spectrum it was computed from.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport {
    pub kind: MatrixKind,
    pub energy: f64,
    pub mean_shift: f64,
    pub spectrum: Spectrum,
}

impl EnergyReport {
    pub fn from_spectrum(kind: MatrixKind, spectrum: Spectrum, n: usize, m: usize) -> Self {
        let mean_shift = kind.mean_shift(n, m);
        let energy = spectrum.deviation_sum(mean_shift);
        EnergyReport { kind, energy, mean_shift, spectrum }
    }

    /// Largest `k` with `λ_k >= mean_shift` (within [`SIGMA_TOL`]); 0 only for
    /// an empty spectrum.
    pub fn sigma_index(&self) -> usize {
        sigma_of(&self.spectrum, self.mean_shift)
    }
}

pub fn energy(g: &Graph, kind: MatrixKind) -> Result<EnergyReport> {
    let spectrum = graph_spectrum(g, kind)?;
    Ok(EnergyReport::from_spectrum(kind, spectrum, g.order(), g.size()))
}

/// `E_{A_α}(G)`.
pub fn a_alpha_energy(g: &Graph, alpha: f64) -> Result<f64> {
    energy(g, MatrixKind::AAlpha(alpha)).map(|r| r.energy)
}

/// A_α-spread `ρ₁ − ρ_n`.
pub fn spread(g: &Graph, alpha: f64) -> Result<f64> {
    graph_spectrum(g, MatrixKind::AAlpha(alpha)).map(|s| s.spread())
}

/// `S^{(k)}`: sum of the `k` largest A_α eigenvalues, with `k > n` read as `n`.
pub fn partial_sum(g: &Graph, alpha: f64, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    graph_spectrum(g, MatrixKind::AAlpha(alpha)).map(|s| s.partial_sum(k))
}

pub(crate) fn sigma_of(spectrum: &Spectrum, shift: f64) -> usize {
    spectrum.values().iter().take_while(|&&x| x >= shift - SIGMA_TOL).count()
}

/// Greatest `σ ∈ [1, n]` with `ρ_σ >= 2αm/n`.
pub fn sigma_index(g: &Graph, alpha: f64) -> Result<usize> {
    check_alpha_open(alpha)?;
    energy(g, MatrixKind::AAlpha(alpha)).map(|r| r.sigma_index())
}

/// The A_α-energy recomputed from partial sums, in both forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSumEnergy {
    pub sigma: usize,
    /// `2S^{(σ)} − 4αmσ/n`
    pub sigma_form: f64,
    /// `max_k {2S^{(k)} − 4αmk/n}`
    pub max_form: f64,
}

pub fn energy_via_partial_sums(g: &Graph, alpha: f64) -> Result<PartialSumEnergy> {
    check_alpha_open(alpha)?;
    let report = energy(g, MatrixKind::AAlpha(alpha))?;
    Ok(partial_sum_energy(&report.spectrum, report.mean_shift))
}

pub(crate) fn partial_sum_energy(spectrum: &Spectrum, shift: f64) -> PartialSumEnergy {
    let sigma = sigma_of(spectrum, shift);
    let term = |k: usize| 2.0 * spectrum.partial_sum(k) - 2.0 * shift * k as f64;
    let max_form = (1..=spectrum.len()).map(term).fold(f64::NEG_INFINITY, f64::max);
    PartialSumEnergy {
        sigma,
        sigma_form: term(sigma),
        max_form: if spectrum.is_empty() { 0.0 } else { max_form },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FamilySpec;
    use alloc::vec::Vec;
    use core::f64::consts::PI;

    fn fam(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) {
        assert!(libm::fabs(a - b) <= tol, "{a} vs {b}");
    }

    fn close_all(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            close(*x, *y, tol);
        }
    }

    #[test]
    fn build_matrix_examples() {
        let k2 = fam(FamilySpec::Path(2));
        let m = build_matrix(&k2, MatrixKind::AAlpha(0.3)).unwrap();
        close_all(m.as_slice(), &[0.3, 0.7, 0.7, 0.3], 1e-15);
        let m = build_matrix(&k2, MatrixKind::AAlpha(1.0)).unwrap();
        assert_eq!(m.as_slice(), &[1.0, 0.0, 0.0, 1.0]);
        let m = build_matrix(&fam(FamilySpec::Path(3)), MatrixKind::Laplacian).unwrap();
        assert_eq!(m.as_slice(), &[1.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 1.0]);
        assert_eq!(build_matrix(&k2, MatrixKind::AAlpha(1.5)), Err(Error::InvalidAlpha(1.5)));
        assert_eq!(build_matrix(&k2, MatrixKind::AAlpha(-0.1)), Err(Error::InvalidAlpha(-0.1)));
    }

    #[test]
    fn a_alpha_special_cases() {
        let g = fam(FamilySpec::Wheel(6));
        let adj = build_matrix(&g, MatrixKind::Adjacency).unwrap();
        assert_eq!(build_matrix(&g, MatrixKind::AAlpha(0.0)).unwrap(), adj);
        let half = build_matrix(&g, MatrixKind::AAlpha(0.5)).unwrap();
        let sl = build_matrix(&g, MatrixKind::SignlessLaplacian).unwrap();
        for (x, y) in half.as_slice().iter().zip(sl.as_slice()) {
            assert_eq!(*x, y / 2.0);
        }
        let d = build_matrix(&g, MatrixKind::AAlpha(1.0)).unwrap();
        assert_eq!(d.off_diagonal_norm(), 0.0);
    }

    #[test]
    fn spectrum_examples() {
        let s = graph_spectrum(&fam(FamilySpec::Complete(4)), MatrixKind::AAlpha(0.5)).unwrap();
        close_all(s.values(), &[3.0, 1.0, 1.0, 1.0], 1e-12);
        let s = graph_spectrum(&fam(FamilySpec::CompleteBipartite(2, 2)), MatrixKind::AAlpha(0.5))
            .unwrap();
        close_all(s.values(), &[2.0, 1.0, 1.0, 0.0], 1e-12);

        let a = 0.7;
        let s = graph_spectrum(&fam(FamilySpec::Cycle(9)), MatrixKind::AAlpha(a)).unwrap();
        let mut expect: Vec<f64> = (0..9)
            .map(|k| 2.0 * a + 2.0 * (1.0 - a) * libm::cos(2.0 * PI * k as f64 / 9.0))
            .collect();
        expect.sort_by(|x, y| y.total_cmp(x));
        close_all(s.values(), &expect, 1e-12);
        close(s.largest().unwrap(), 2.0, 1e-12);
        close(s.smallest().unwrap(), 1.4 + 0.6 * libm::cos(8.0 * PI / 9.0), 1e-12);
        close(s.smallest().unwrap(), 0.836184, 1e-6);
        assert_eq!(s.source, Some(MatrixKind::AAlpha(a)));
    }

    #[test]
    fn energy_examples() {
        let k2 = fam(FamilySpec::Path(2));
        for a in [0.0, 0.25, 0.5, 0.9] {
            close(a_alpha_energy(&k2, a).unwrap(), 2.0 * (1.0 - a), 1e-12);
        }
        close(a_alpha_energy(&fam(FamilySpec::CompleteBipartite(2, 2)), 0.5).unwrap(), 2.0, 1e-12);
        let r = energy(&fam(FamilySpec::Star(4)), MatrixKind::AAlpha(0.5)).unwrap();
        close(r.energy, 2.5, 1e-12);
        close(r.mean_shift, 0.75, 0.0);
        let r = energy(&k2, MatrixKind::Adjacency).unwrap();
        assert_eq!(r.mean_shift, 0.0);
    }

    #[test]
    fn single_vertex_and_alpha_one() {
        let g = Graph::empty(1);
        for a in [0.0, 0.5, 1.0] {
            assert_eq!(a_alpha_energy(&g, a).unwrap(), 0.0);
        }
        // α = 1: Σ|dᵢ − 2m/n|
        let s4 = fam(FamilySpec::Star(4));
        close(a_alpha_energy(&s4, 1.0).unwrap(), 1.5 + 3.0 * 0.5, 1e-12);
        assert_eq!(sigma_index(&s4, 1.0), Err(Error::InvalidAlpha(1.0)));
    }

    #[test]
    fn spread_examples() {
        close(spread(&fam(FamilySpec::Star(4)), 0.5).unwrap(), 2.0, 1e-12);
        for n in 2..9 {
            for a in [0.0, 0.3, 0.8] {
                let kn = fam(FamilySpec::Complete(n));
                close(spread(&kn, a).unwrap(), (1.0 - a) * n as f64, 1e-12);
            }
        }
        close(spread(&fam(FamilySpec::Cycle(9)), 0.7).unwrap(), 1.163816, 1e-6);
    }

    #[test]
    fn partial_sum_examples() {
        let k4 = fam(FamilySpec::Complete(4));
        close(partial_sum(&k4, 0.5, 1).unwrap(), 3.0, 1e-12);
        close(partial_sum(&k4, 0.5, 4).unwrap(), 6.0, 1e-12);
        close(partial_sum(&k4, 0.5, 99).unwrap(), 6.0, 1e-12);
        assert_eq!(partial_sum(&k4, 0.5, 0), Err(Error::InvalidK(0)));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_index(&fam(FamilySpec::Complete(4)), 0.5).unwrap(), 1);
        assert_eq!(sigma_index(&fam(FamilySpec::CompleteBipartite(2, 2)), 0.5).unwrap(), 3);
        assert_eq!(sigma_index(&fam(FamilySpec::Path(2)), 0.0).unwrap(), 1);
        // α = 0 counts the nonnegative adjacency eigenvalues
        assert_eq!(sigma_index(&fam(FamilySpec::Path(3)), 0.0).unwrap(), 2);
    }

    #[test]
    fn partial_sum_energy_examples() {
        let e = energy_via_partial_sums(&fam(FamilySpec::Complete(4)), 0.5).unwrap();
        close(e.sigma_form, 3.0, 1e-12);
        close(e.max_form, 3.0, 1e-12);
        let e = energy_via_partial_sums(&fam(FamilySpec::Star(4)), 0.5).unwrap();
        assert_eq!(e.sigma, 1);
        close(e.sigma_form, 2.5, 1e-12);
        let e = energy_via_partial_sums(&fam(FamilySpec::Path(2)), 0.0).unwrap();
        close(e.sigma_form, 2.0, 1e-12);
        close(e.max_form, 2.0, 1e-12);
    }
}
