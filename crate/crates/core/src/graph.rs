//! Simple undirected graphs and the scalar invariants the bounds consume.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized (`u < v`), sorted and deduplicated. The
/// position of an edge in [`Graph::edges`] is the label of the matching
/// vertex in [`Graph::line_graph`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an arbitrary pair list. Reversed and repeated
    /// pairs collapse into a single edge.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = Vec::new();
        for (u, v) in pairs {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge { u, v, n });
            }
            edges.push(if u < v { (u, v) } else { (v, u) });
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Graph { n, edges })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Row-major 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let mut a = vec![vec![0u8; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        DegreeSummary::new(self.degrees())
    }

    /// Line graph: one vertex per edge of `self` (in [`Graph::edges`] order),
    /// adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let mut incident = vec![Vec::new(); self.n];
        for (idx, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push(idx);
            incident[v].push(idx);
        }
        // Two distinct edges of a simple graph share at most one endpoint, so
        // every pair below is produced exactly once.
        let mut edges = Vec::new();
        for around in &incident {
            for (i, &e) in around.iter().enumerate() {
                for &f in &around[i + 1..] {
                    edges.push(if e < f { (e, f) } else { (f, e) });
                }
            }
        }
        edges.sort_unstable();
        Graph { n: self.edges.len(), edges }
    }

    /// Breadth-first connectivity and diameter.
    pub fn connectivity(&self) -> Connectivity {
        if self.n == 0 {
            return Connectivity { connected: false, diameter: None };
        }
        let adj = self.neighbors();
        let mut diameter = 0;
        for source in 0..self.n {
            let dist = bfs(&adj, source);
            for d in dist {
                match d {
                    Some(d) => diameter = diameter.max(d),
                    None => return Connectivity { connected: false, diameter: None },
                }
            }
        }
        Connectivity { connected: true, diameter: Some(diameter) }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        bfs(&self.neighbors(), 0).iter().all(Option::is_some)
    }

    /// Spanning subgraph keeping only the edges for which `keep` is true.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(usize, (usize, usize)) -> bool) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, &e)| keep(i, e))
            .map(|(_, &e)| e)
            .collect();
        Graph { n: self.n, edges }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.neighbors();
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap_or(false);
                for &w in &adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

fn bfs(adj: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap_or(0);
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connectivity {
    pub connected: bool,
    /// `None` when disconnected (infinite diameter).
    pub diameter: Option<usize>,
}

/// Degree sequence together with the derived counts used by the bounds:
/// Δ, δ, the first Zagreb index Z₁ = Σdᵢ², isolated count s and pendant
/// count p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSummary {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub zagreb1: u64,
    pub isolated: usize,
    pub pendant: usize,
}

impl DegreeSummary {
    pub fn new(degrees: Vec<usize>) -> Self {
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let zagreb1 = degrees.iter().map(|&d| (d as u64) * (d as u64)).sum();
        let isolated = degrees.iter().filter(|&&d| d == 0).count();
        let pendant = degrees.iter().filter(|&&d| d == 1).count();
        DegreeSummary { degrees, max_degree, min_degree, zagreb1, isolated, pendant }
    }

    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FamilySpec;

    #[test]
    fn make_graph_examples() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));

        let g = Graph::new(4, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.edges(), &[(0, 1)]);

        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::InvalidEdge { u: 0, v: 3, n: 3 }));
        assert!(matches!(Graph::new(3, [(1, 1)]), Err(Error::InvalidEdge { .. })));
    }

    #[test]
    fn degree_summary_examples() {
        let s20 = FamilySpec::Star(20).generate().unwrap();
        let d = s20.degree_summary();
        assert_eq!(d.max_degree, 19);
        assert_eq!(d.zagreb1, 380);
        assert_eq!(d.pendant, 19);

        let k22 = FamilySpec::CompleteBipartite(2, 2).generate().unwrap();
        let d = k22.degree_summary();
        assert!(d.degrees.iter().all(|&x| x == 2));
        assert_eq!((d.zagreb1, d.isolated, d.pendant), (16, 0, 0));

        let d = Graph::empty(5).degree_summary();
        assert_eq!((d.isolated, d.zagreb1), (5, 0));
    }

    #[test]
    fn line_graph_examples() {
        let c9 = FamilySpec::Cycle(9).generate().unwrap();
        let l = c9.line_graph();
        assert_eq!((l.order(), l.size()), (9, 9));
        assert!(l.degrees().iter().all(|&d| d == 2));
        assert!(l.is_connected());

        let l = FamilySpec::Path(4).generate().unwrap().line_graph();
        assert_eq!((l.order(), l.size()), (3, 2));
        assert_eq!(l.degree_summary().max_degree, 2);

        let s4 = FamilySpec::Star(4).generate().unwrap();
        assert_eq!(s4.degree_summary().zagreb1, 12);
        let l = s4.line_graph();
        assert_eq!((l.order(), l.size()), (3, 3));

        let l = Graph::empty(3).line_graph();
        assert_eq!((l.order(), l.size()), (0, 0));
    }

    #[test]
    fn connectivity_examples() {
        let p10 = FamilySpec::Path(10).generate().unwrap();
        assert_eq!(p10.connectivity(), Connectivity { connected: true, diameter: Some(9) });

        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.connectivity(), Connectivity { connected: false, diameter: None });
        assert!(!two_k2.is_connected());

        let k5 = FamilySpec::Complete(5).generate().unwrap();
        assert_eq!(k5.connectivity().diameter, Some(1));

        assert_eq!(Graph::empty(1).connectivity().diameter, Some(0));
    }

    #[test]
    fn bipartite_detection() {
        assert!(FamilySpec::Cycle(6).generate().unwrap().is_bipartite());
        assert!(!FamilySpec::Cycle(7).generate().unwrap().is_bipartite());
        assert!(FamilySpec::Ladder(4).generate().unwrap().is_bipartite());
    }
}
