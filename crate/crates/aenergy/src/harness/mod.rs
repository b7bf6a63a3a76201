//! Corpus sweeps over every bound, equality checks, and table reproduction.

mod equality;
mod report;
mod reproduce;

use aenergy_core::bounds::{self, AlphaFacts, GraphFacts};
use aenergy_core::corpus::{enumerate_labeled_graphs, random_gnp};
use aenergy_core::{BoundId, FamilySpec, Graph};
use rayon::prelude::*;

use crate::io::write_graph6;
use crate::Result;

pub use equality::{equality_suite, EqualityCase, EQUALITY_TOL};
pub use report::{BoundStats, VerificationReport, Violation, NEAR_EQUALITY};
pub use reproduce::{reproduce_remark32, reproduce_table1, round2, Cell, Table};

/// `G(n, p)` graphs; graph `j` uses seed `seed + j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSpec {
    pub n: usize,
    pub p: f64,
    pub count: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CorpusSpec {
    /// Every labeled graph on `1..=exhaustive_max_n` vertices; 0 for none.
    pub exhaustive_max_n: usize,
    pub random: Vec<RandomSpec>,
    pub families: Vec<FamilySpec>,
}

impl CorpusSpec {
    pub fn exhaustive(max_n: usize) -> Self {
        CorpusSpec { exhaustive_max_n: max_n, ..Default::default() }
    }

    /// n ∈ {8, 12, 16, 20} × p ∈ {0.2, 0.5, 0.8}, `count` graphs each,
    /// seeded with `1000·n + 10·p`.
    pub fn random_grid(count: usize) -> Vec<RandomSpec> {
        let mut out = Vec::new();
        for n in [8, 12, 16, 20] {
            for (tenths, p) in [(2, 0.2), (5, 0.5), (8, 0.8)] {
                out.push(RandomSpec { n, p, count, seed: 1000 * n as u64 + tenths });
            }
        }
        out
    }

    /// Exhaustive n ≤ 5 plus [`CorpusSpec::random_grid`] with 50 graphs per cell.
    pub fn standard() -> Self {
        CorpusSpec { exhaustive_max_n: 5, random: Self::random_grid(50), families: Vec::new() }
    }

    fn validate(&self) -> Result<()> {
        if self.exhaustive_max_n > 0 {
            enumerate_labeled_graphs(self.exhaustive_max_n)?;
        }
        for r in &self.random {
            random_gnp(0, r.p, r.seed)?;
        }
        for f in &self.families {
            f.validate()?;
        }
        Ok(())
    }

    /// Number of graphs the corpus describes.
    pub fn len(&self) -> usize {
        let exhaustive: usize = (1..=self.exhaustive_max_n).map(|n| 1usize << (n * (n - 1) / 2)).sum();
        exhaustive + self.random.iter().map(|r| r.count).sum::<usize>() + self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Graphs in corpus order, produced lazily.
    pub fn graphs(&self) -> Result<impl Iterator<Item = Graph> + '_> {
        self.validate()?;
        let exhaustive = (1..=self.exhaustive_max_n)
            .flat_map(|n| enumerate_labeled_graphs(n).expect("validated"));
        let random = self.random.iter().flat_map(|r| {
            (0..r.count).map(move |j| random_gnp(r.n, r.p, r.seed.wrapping_add(j as u64)).expect("validated"))
        });
        let families = self.families.iter().map(|f| f.generate().expect("validated"));
        Ok(exhaustive.chain(random).chain(families))
    }
}

/// `{0, 0.05, …, 0.95}`.
pub fn default_alphas() -> Vec<f64> {
    (0..20).map(|k| k as f64 / 20.0).collect()
}

/// The grid used for `g`: the default grid plus `n/(2(n−1))` when that is below 1.
pub fn alphas_for(n: usize) -> Vec<f64> {
    let mut alphas = default_alphas();
    if n >= 3 {
        let t = n as f64 / (2.0 * (n as f64 - 1.0));
        if !alphas.contains(&t) {
            alphas.push(t);
        }
    }
    alphas
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    /// `None` selects [`alphas_for`] per graph.
    pub alphas: Option<Vec<f64>>,
    pub bounds: Vec<BoundId>,
    pub jobs: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { alphas: None, bounds: BoundId::ALL.to_vec(), jobs: 1 }
    }
}

const CHUNK: usize = 2048;

/// Evaluates every selected bound on every corpus graph at every α.
///
/// Chunks of the corpus are evaluated on a pool of `jobs` threads and merged
/// in corpus order, so the report does not depend on `jobs`.
pub fn sweep(corpus: &CorpusSpec, opts: &SweepOptions) -> Result<VerificationReport> {
    if let Some(alphas) = &opts.alphas {
        for &a in alphas {
            if !(0.0..1.0).contains(&a) {
                return Err(aenergy_core::Error::InvalidAlpha(a).into());
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .expect("thread pool");
    let mut report = VerificationReport::new(&opts.bounds);
    let mut graphs = corpus.graphs()?.peekable();
    while graphs.peek().is_some() {
        let chunk: Vec<Graph> = graphs.by_ref().take(CHUNK).collect();
        let parts: Vec<Result<VerificationReport>> =
            pool.install(|| chunk.par_iter().map(|g| sweep_graph(g, opts)).collect());
        for part in parts {
            report.merge(part?);
        }
    }
    Ok(report)
}

fn sweep_graph(g: &Graph, opts: &SweepOptions) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(&opts.bounds);
    let facts = GraphFacts::new(g)?;
    let graph6 = write_graph6(g);
    let alphas = match &opts.alphas {
        Some(a) => a.clone(),
        None => alphas_for(g.order()),
    };
    for alpha in alphas {
        let at = AlphaFacts::new(g, alpha)?;
        for &id in &opts.bounds {
            report.record(&graph6, alpha, &bounds::evaluate(&facts, &at, id));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        assert_eq!(CorpusSpec::exhaustive(3).len(), 1 + 2 + 8);
        assert_eq!(CorpusSpec::exhaustive(3).graphs().unwrap().count(), 11);
        assert_eq!(CorpusSpec::standard().len(), 1 + 2 + 8 + 64 + 1024 + 600);
        assert!(CorpusSpec::exhaustive(8).graphs().is_err());
    }

    #[test]
    fn alpha_grid() {
        let g = alphas_for(2);
        assert_eq!(g.len(), 20);
        assert!(g.contains(&0.5) && !g.contains(&1.0));
        assert_eq!(alphas_for(3).len(), 20);
        assert_eq!(alphas_for(5).last(), Some(&0.625));
    }

    #[test]
    fn k2_sweep_has_zero_min_slack() {
        let corpus = CorpusSpec { families: vec![FamilySpec::Path(2)], ..Default::default() };
        let r = sweep(&corpus, &SweepOptions::default()).unwrap();
        let s = r.stats(BoundId::UbT31).unwrap();
        assert_eq!((s.count, s.applicable), (20, 20));
        assert!(s.min_slack.unwrap().abs() <= 1e-12);
        assert_eq!(s.argmin_graph6.as_deref(), Some("A_"));
        assert!(r.passed());
    }

    #[test]
    fn jobs_do_not_change_the_report() {
        let corpus = CorpusSpec { exhaustive_max_n: 4, ..CorpusSpec::standard() };
        let corpus = CorpusSpec { random: corpus.random.into_iter().take(3).collect(), ..corpus };
        let one = sweep(&corpus, &SweepOptions::default()).unwrap();
        let four = sweep(&corpus, &SweepOptions { jobs: 4, ..Default::default() }).unwrap();
        assert_eq!(one.to_json(), four.to_json());
    }

    #[test]
    fn rejects_alpha_one() {
        let opts = SweepOptions { alphas: Some(vec![1.0]), ..Default::default() };
        assert!(sweep(&CorpusSpec::exhaustive(2), &opts).is_err());
    }
}
