//! Deterministic graph generators for verification corpora.

use alloc::vec::Vec;

use rand_xoshiro::rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::{Error, Graph, Result};

/// Largest order accepted by [`enumerate_labeled_graphs`] (2²¹ graphs).
pub const MAX_EXHAUSTIVE_N: usize = 7;

/// Vertex pairs in graph6 order: `(0,1), (0,2), (1,2), (0,3), …`.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// Every labeled graph on `n` vertices, ordered by edge-set bitmask, where
/// bit `i` selects the `i`-th pair of [`pair_order`].
pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if n == 0 || n > MAX_EXHAUSTIVE_N {
        return Err(Error::CorpusTooLarge { n });
    }
    let pairs = pair_order(n);
    let total = 1u64 << pairs.len();
    Ok(LabeledGraphs { n, pairs, next: 0, total })
}

#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.total {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Some(Graph::new(self.n, edges).expect("pairs are in range"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// Uniform draw in `[0, 1)` from the top 53 bits of a SplitMix64 output.
fn unit(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Erdős–Rényi `G(n, p)`.
///
/// Pairs are visited in [`pair_order`]; each consumes one SplitMix64 output
/// `x` and is kept when `(x >> 11)·2⁻⁵³ < p`. SplitMix64 (increment
/// `0x9E3779B97F4A7C15`, mixers `0xBF58476D1CE4E5B9`, `0x94D049BB133111EB`)
/// is seeded directly with `seed`, so the corpus is reproducible from the
/// description alone.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let edges: Vec<_> = pair_order(n).into_iter().filter(|_| unit(&mut rng) < p).collect();
    Graph::new(n, edges)
}

/// Random strictly binary tree with `internal_count` internal vertices.
///
/// Starts from a root with two leaf children and repeatedly expands a
/// uniformly chosen leaf into an internal vertex with two new children.
/// The root ends with degree 2, other internal vertices with degree 3, and
/// there are `internal_count + 1` leaves out of `2·internal_count + 1`
/// vertices.
pub fn strictly_binary_tree(internal_count: usize, seed: u64) -> Result<Graph> {
    if internal_count == 0 {
        return Err(Error::InvalidFamilyParam("a strictly binary tree needs an internal vertex"));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut edges = alloc::vec![(0, 1), (0, 2)];
    let mut leaves = alloc::vec![1, 2];
    let mut next = 3;
    for _ in 1..internal_count {
        let pick = (rng.next_u64() % leaves.len() as u64) as usize;
        let leaf = leaves.swap_remove(pick);
        edges.push((leaf, next));
        edges.push((leaf, next + 1));
        leaves.push(next);
        leaves.push(next + 1);
        next += 2;
    }
    Graph::new(next, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        let all: Vec<Graph> = enumerate_labeled_graphs(4).unwrap().collect();
        assert_eq!(all.len(), 64);
        assert_eq!(all.iter().filter(|g| g.size() == 0).count(), 1);
        assert_eq!(enumerate_labeled_graphs(5).unwrap().len(), 1024);
        assert_eq!(enumerate_labeled_graphs(8).unwrap_err(), Error::CorpusTooLarge { n: 8 });
        assert!(enumerate_labeled_graphs(0).is_err());
    }

    #[test]
    fn enumeration_is_distinct_and_ordered() {
        let all: Vec<Graph> = enumerate_labeled_graphs(4).unwrap().collect();
        assert_eq!(all[0].size(), 0);
        assert_eq!(all[1].edges(), &[(0, 1)]);
        assert_eq!(all[2].edges(), &[(0, 2)]);
        assert_eq!(all[63].size(), 6);
        for (i, g) in all.iter().enumerate() {
            for h in &all[i + 1..] {
                assert_ne!(g, h);
            }
        }
    }

    #[test]
    fn gnp_extremes_and_determinism() {
        assert_eq!(random_gnp(10, 0.0, 7).unwrap().size(), 0);
        assert_eq!(random_gnp(10, 1.0, 7).unwrap().size(), 45);
        let a = random_gnp(20, 0.3, 42).unwrap();
        assert_eq!(a, random_gnp(20, 0.3, 42).unwrap());
        assert_ne!(a, random_gnp(20, 0.3, 43).unwrap());
        assert!(random_gnp(5, 1.5, 0).is_err());
    }

    #[test]
    fn splitmix_reference_stream() {
        // first output for seed 0 of the reference SplitMix64
        let mut rng = SplitMix64::seed_from_u64(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
    }

    #[test]
    fn binary_tree_shape() {
        for internal in 1..15 {
            for seed in 0..5 {
                let t = strictly_binary_tree(internal, seed).unwrap();
                assert_eq!(t.order(), 2 * internal + 1);
                assert_eq!(t.size(), t.order() - 1);
                assert!(t.is_connected());
                let d = t.degrees();
                assert_eq!(d[0], 2);
                assert!(d[1..].iter().all(|&x| x == 1 || x == 3));
                assert_eq!(t.degree_summary().pendant, t.order().div_ceil(2));
            }
        }
        let p3 = strictly_binary_tree(1, 0).unwrap();
        assert_eq!(p3.degree_summary().pendant, 2);
        assert_eq!(strictly_binary_tree(6, 9).unwrap(), strictly_binary_tree(6, 9).unwrap());
        assert!(strictly_binary_tree(0, 0).is_err());
    }
}
