//! Closed-form A_α spectra, used as oracles for the Jacobi solver.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::spectra::{check_alpha, MatrixKind};
use crate::{Error, FamilySpec, Result, Spectrum};

/// Exact A_α spectrum for the families that have one:
///
/// - `K_n`: `{n−1, (αn−1)^[n−1]}`
/// - `K_{1,n−1}`: `{½(αn ± √(α²n² + 4(1−2α)(n−1))), α^[n−2]}`
/// - `K_{a,a}` (n = 2a): `{n/2, (αn/2)^[n−2], αn − n/2}`
/// - `C_n`: `{2α + 2(1−α)cos(2πk/n)}`
/// - `P_2 = K_2`: `{1, 2α−1}`; other paths only at α = 0: `{2cos(πj/(k+1))}`
/// - `K_{a,b}` at α = 0: `{±√(ab), 0^[n−2]}`
pub fn closed_form_spectrum(family: &FamilySpec, alpha: f64) -> Result<Spectrum> {
    check_alpha(alpha)?;
    family.validate()?;
    let a = alpha;
    let mut v = Vec::new();
    match *family {
        FamilySpec::Complete(n) => {
            let nf = n as f64;
            v.push(nf - 1.0);
            v.extend(core::iter::repeat_n(a * nf - 1.0, n - 1));
        }
        FamilySpec::Path(2) => v.extend([1.0, 2.0 * a - 1.0]),
        FamilySpec::Path(1) | FamilySpec::Star(1) => v.push(0.0),
        FamilySpec::Star(n) => {
            let nf = n as f64;
            let root = libm::sqrt(a * a * nf * nf + 4.0 * (1.0 - 2.0 * a) * (nf - 1.0));
            v.push(0.5 * (a * nf + root));
            v.extend(core::iter::repeat_n(a, n - 2));
            v.push(0.5 * (a * nf - root));
        }
        FamilySpec::CompleteBipartite(p, q) if p == q => {
            let nf = (2 * p) as f64;
            v.push(nf / 2.0);
            v.extend(core::iter::repeat_n(a * nf / 2.0, 2 * p - 2));
            v.push(a * nf - nf / 2.0);
        }
        FamilySpec::CompleteBipartite(p, q) if a == 0.0 => {
            let r = libm::sqrt((p * q) as f64);
            v.extend([r, -r]);
            v.extend(core::iter::repeat_n(0.0, p + q - 2));
        }
        FamilySpec::Cycle(n) => {
            v.extend((0..n).map(|k| {
                2.0 * a + 2.0 * (1.0 - a) * libm::cos(2.0 * PI * k as f64 / n as f64)
            }));
        }
        FamilySpec::Path(k) if a == 0.0 => {
            v.extend((1..=k).map(|j| 2.0 * libm::cos(PI * j as f64 / (k + 1) as f64)));
        }
        _ => return Err(Error::NoClosedForm),
    }
    Ok(Spectrum::new(v, Some(MatrixKind::AAlpha(alpha))))
}
