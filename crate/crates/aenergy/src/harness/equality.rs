use aenergy_core::bounds::{self, AlphaFacts, GraphFacts};
use aenergy_core::{BoundId, Evaluation, FamilySpec};
use serde::Serialize;

use super::default_alphas;
use crate::Result;

/// Relative tolerance for a sharp bound: `gap ≤ EQUALITY_TOL·(1 + |energy|)`.
pub const EQUALITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EqualityCase {
    pub graph: String,
    pub alpha: f64,
    pub bound_id: &'static str,
    /// `None` when the bound was inapplicable.
    pub gap: Option<f64>,
    pub holds: bool,
}

/// Every graph/α/bound triple where a bound is claimed to be attained.
pub fn equality_cases() -> Vec<(FamilySpec, f64, BoundId)> {
    use BoundId::*;
    use FamilySpec::*;
    let grid = default_alphas();
    let mut out = Vec::new();
    for &a in &grid {
        out.push((Path(2), a, UbT31));
    }
    for n in 4..=10 {
        for a in [0.6, 0.75, 0.9] {
            out.push((Star(n), a, UbT35));
        }
        out.push((Star(n), 0.5, LbT45a));
    }
    for n in [4, 6, 8] {
        let half = CompleteBipartite(n / 2, n / 2);
        for g in [Complete(n), half] {
            for a in [0.0, 0.3, 0.5, 0.7] {
                out.push((g, a, LbT41));
            }
            for a in [0.0, 0.25, 0.3, 0.5] {
                out.push((g, a, LbT45a));
            }
            for a in [0.6, 0.7, 0.75, 0.9] {
                out.push((g, a, LbT45b));
            }
        }
        out.push((half, 0.0, LbC44));
        out.push((half, 0.5, RelT51));
    }
    for n in 3..=12 {
        out.push((Cycle(n), 0.5, RelT52));
        for &a in &grid {
            out.push((Cycle(n), a, RelT55));
        }
    }
    out
}

pub fn equality_suite() -> Result<Vec<EqualityCase>> {
    equality_cases()
        .into_iter()
        .map(|(spec, alpha, id)| {
            let g = spec.generate()?;
            let ev = bounds::evaluate(&GraphFacts::new(&g)?, &AlphaFacts::new(&g, alpha)?, id);
            let gap = ev.gap();
            let holds = !matches!(ev, Evaluation::Inapplicable { .. })
                && gap.is_some_and(|x| x <= EQUALITY_TOL * (1.0 + ev.magnitude()));
            Ok(EqualityCase { graph: spec.to_string(), alpha, bound_id: id.as_str(), gap, holds })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_case_holds() {
        let cases = equality_suite().unwrap();
        assert!(cases.len() > 100);
        let failing: Vec<_> = cases.iter().filter(|c| !c.holds).collect();
        assert!(failing.is_empty(), "{failing:#?}");
    }

    #[test]
    fn lb_c44_bipartite_halves_all_alpha() {
        for n in [4, 6, 8] {
            let g = FamilySpec::CompleteBipartite(n / 2, n / 2).generate().unwrap();
            for a in default_alphas() {
                let gap = bounds::equality_gap(&g, a, BoundId::LbC44).unwrap().applicable().unwrap();
                assert!(gap <= 1e-9 * (1.0 + n as f64), "n={n} α={a}: {gap}");
            }
        }
    }
}
