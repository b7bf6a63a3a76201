use aenergy_core::bounds::{self, AlphaFacts, SLACK_TOL};
use aenergy_core::corpus::pair_order;
use aenergy_core::spectra::{self, graph_spectrum};
use aenergy_core::{adjacency_rank, eigenvalues, Graph, MatrixKind, SymmetricMatrix};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = pair_order(n);
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let edges = pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(&p, _)| p);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn alpha() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(0.5), 0.0..1.0f64]
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn trace_and_second_moment(g in graph(10), a in alpha()) {
        let s = graph_spectrum(&g, MatrixKind::AAlpha(a)).unwrap();
        let m = g.size() as f64;
        let z1 = g.degree_summary().zagreb1 as f64;
        prop_assert!(rel_close(s.sum(), 2.0 * a * m, 1e-9));
        let second = a * a * z1 + 2.0 * (1.0 - a) * (1.0 - a) * m;
        prop_assert!(rel_close(s.sum_of_squares(), second, 1e-9));
    }

    #[test]
    fn spectrum_is_permutation_invariant(g in graph(9), a in alpha(), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm).unwrap();
        let s = graph_spectrum(&g, MatrixKind::AAlpha(a)).unwrap();
        let t = graph_spectrum(&h, MatrixKind::AAlpha(a)).unwrap();
        for (x, y) in s.values().iter().zip(t.values()) {
            prop_assert!((x - y).abs() <= 1e-9);
        }
    }

    #[test]
    fn psd_from_one_half(g in graph(10), a in 0.5..1.0f64) {
        let s = graph_spectrum(&g, MatrixKind::AAlpha(a)).unwrap();
        prop_assert!(s.smallest().unwrap() >= -1e-9);
    }

    #[test]
    fn rank_counts_nonzero_eigenvalues(g in graph(8)) {
        let s = graph_spectrum(&g, MatrixKind::Adjacency).unwrap();
        let nonzero = s.values().iter().filter(|x| x.abs() > 1e-8).count();
        prop_assert_eq!(adjacency_rank(&g), nonzero);
    }

    #[test]
    fn partial_sum_identity(g in graph(9), a in 0.0..0.999f64) {
        let e = spectra::a_alpha_energy(&g, a).unwrap();
        let p = spectra::energy_via_partial_sums(&g, a).unwrap();
        prop_assert!((e - p.sigma_form).abs() <= 1e-9 * (1.0 + e));
        prop_assert!((e - p.max_form).abs() <= 1e-9 * (1.0 + e));
    }

    #[test]
    fn special_alphas(g in graph(9)) {
        let e0 = spectra::a_alpha_energy(&g, 0.0).unwrap();
        let adj = spectra::energy(&g, MatrixKind::Adjacency).unwrap().energy;
        prop_assert!((e0 - adj).abs() <= 1e-9);
        let half = spectra::a_alpha_energy(&g, 0.5).unwrap();
        let sl = spectra::energy(&g, MatrixKind::SignlessLaplacian).unwrap().energy;
        prop_assert!((2.0 * half - sl).abs() <= 1e-9 * (1.0 + sl));
    }

    #[test]
    fn no_bound_is_violated(g in graph(9), a in 0.0..0.999f64) {
        let facts = bounds::GraphFacts::new(&g).unwrap();
        let at = AlphaFacts::new(&g, a).unwrap();
        for ev in bounds::evaluate_all(&facts, &at) {
            prop_assert!(!ev.is_violation(), "{:?}", ev);
            if let Some(margin) = ev.margin() {
                prop_assert!(margin >= -SLACK_TOL);
            }
        }
    }

    #[test]
    fn spread_within_invariant_bound(g in graph(9), a in 0.0..0.999f64) {
        let theta = spectra::spread(&g, a).unwrap();
        prop_assert!(theta <= bounds::ub_spread_invariant(&g, a).unwrap() + 1e-7);
    }
}

#[test]
fn jacobi_reproduces_diagonal_after_rotation() {
    // Q·diag(d)·Qᵀ for a Givens rotation Q has eigenvalues d
    let (c, s) = (0.6f64, 0.8f64);
    let d = [5.0, -2.0, 0.5];
    let m = SymmetricMatrix::from_upper(3, |i, j| match (i, j) {
        (0, 0) => c * c * d[0] + s * s * d[1],
        (0, 1) => c * s * (d[0] - d[1]),
        (1, 1) => s * s * d[0] + c * c * d[1],
        (2, 2) => d[2],
        _ => 0.0,
    });
    let v = eigenvalues(&m).unwrap();
    for (x, y) in v.values().iter().zip([5.0, 0.5, -2.0]) {
        assert!((x - y).abs() < 1e-12);
    }
}
