//! Simple undirected 2-graphs with bitset adjacency rows.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::search::{Budget, Tracker};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    adj: Vec<BitSet>,
    edge_count: u64,
}

impl Graph {
    pub fn new(n: u32) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| BitSet::new(n as usize)).collect(),
            edge_count: 0,
        }
    }

    pub fn from_edges(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: u32) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<()> {
        if u == v {
            return Err(Error::input(format!("loop edge at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::input(format!(
                "edge ({u},{v}) out of range for n={}",
                self.n
            )));
        }
        if !self.has_edge(u, v) {
            self.adj[u as usize].set(v as usize);
            self.adj[v as usize].set(u as usize);
            self.edge_count += 1;
        }
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u as usize].test(v as usize)
    }

    #[inline]
    pub fn neighbors(&self, u: u32) -> &BitSet {
        &self.adj[u as usize]
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn degree(&self, u: u32) -> usize {
        self.adj[u as usize].count()
    }

    /// Edges as sorted pairs, lexicographic.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count as usize);
        for u in 0..self.n {
            for v in self.adj[u as usize].iter_ones() {
                if (v as u32) > u {
                    out.push((u, v as u32));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// The set of triangles, as sorted triples in lexicographic order.
    pub fn triangles(&self) -> Vec<[u32; 3]> {
        let mut out = Vec::new();
        let mut common = BitSet::new(self.n as usize);
        for u in 0..self.n {
            for v in self.adj[u as usize].iter_ones() {
                let v = v as u32;
                if v <= u {
                    continue;
                }
                common.clone_from(&self.adj[u as usize]);
                common.intersect_with(&self.adj[v as usize]);
                common.keep_above(v as usize);
                for w in common.iter_ones() {
                    out.push([u, v, w as u32]);
                }
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            for v in self.adj[u as usize].iter_ones() {
                let v = v as u32;
                if v <= u {
                    continue;
                }
                if self.adj[u as usize].intersection_count(&self.adj[v as usize]) > 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Exact number of `k`-cliques. Backtracks in lexicographic vertex order
    /// with bitset candidate pruning; the last level is a popcount.
    pub fn count_cliques(&self, k: u32, budget: &Budget) -> Result<u64> {
        if k == 0 {
            return Ok(1);
        }
        if k == 1 {
            return Ok(self.n as u64);
        }
        if k == 2 {
            return Ok(self.edge_count);
        }
        let mut tracker = budget.tracker();
        let mut count: u64 = 0;
        let full = BitSet::full(self.n as usize);
        self.clique_rec(&full, k, 0, &mut count, &mut tracker)?;
        Ok(count)
    }

    fn clique_rec(
        &self,
        cand: &BitSet,
        remaining: u32,
        depth: u32,
        count: &mut u64,
        tracker: &mut Tracker,
    ) -> Result<()> {
        if remaining == 1 {
            tracker.tick()?;
            *count = count
                .checked_add(cand.count() as u64)
                .ok_or_else(|| Error::Overflow("clique count".into()))?;
            return Ok(());
        }
        let mut next = BitSet::new(self.n as usize);
        for v in cand.iter_ones() {
            tracker.tick()?;
            next.clone_from(cand);
            next.intersect_with(&self.adj[v]);
            next.keep_above(v);
            if next.count() as u32 >= remaining - 1 {
                self.clique_rec(&next, remaining - 1, depth + 1, count, tracker)?;
            }
        }
        Ok(())
    }

    /// Convert to a 2-uniform hypergraph with the same edges.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let mut h = Hypergraph::empty(2, self.n).unwrap();
        for (u, v) in self.edges() {
            h.add_edge(&[u, v]).unwrap();
        }
        h
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Result<Graph> {
        if h.r() != 2 {
            return Err(Error::input(format!(
                "expected a 2-graph, got uniformity {}",
                h.r()
            )));
        }
        let mut g = Graph::new(h.n());
        for e in h.sorted_edges() {
            g.add_edge(e[0], e[1])?;
        }
        Ok(g)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count)
    }
}

/// True iff every edge of the 3-graph spans a triangle of `g`.
pub fn underlies(g: &Graph, h3: &Hypergraph) -> Result<bool> {
    if h3.r() != 3 {
        return Err(Error::input("underlies expects a 3-graph"));
    }
    if g.n() != h3.n() {
        return Err(Error::input(format!(
            "vertex count mismatch: graph has {}, 3-graph has {}",
            g.n(),
            h3.n()
        )));
    }
    for e in h3.edges_iter() {
        let (a, b, c) = (e[0], e[1], e[2]);
        if !(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangles_of_k4() {
        let g = Graph::complete(4);
        assert_eq!(g.triangles().len(), 4);
    }

    #[test]
    fn bipartite_has_no_triangles() {
        let mut g = Graph::new(6);
        for u in 0..3u32 {
            for v in 3..6u32 {
                g.add_edge(u, v).unwrap();
            }
        }
        assert!(g.triangles().is_empty());
        assert!(g.is_triangle_free());
    }

    #[test]
    fn triangle_count_matches_triple_loop() {
        // seeded pseudo-random graph on 10 vertices
        let mut g = Graph::new(10);
        for u in 0..10u32 {
            for v in u + 1..10 {
                if crate::rng::hash_coin(99, &[u as u64, v as u64]) & 1 == 0 {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let mut brute = Vec::new();
        for a in 0..10u32 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                        brute.push([a, b, c]);
                    }
                }
            }
        }
        assert_eq!(g.triangles(), brute);
        assert_eq!(
            g.count_cliques(3, &Budget::default()).unwrap(),
            brute.len() as u64
        );
    }

    #[test]
    fn underlies_checks_every_edge() {
        let mut g = Graph::complete(4);
        let mut h = Hypergraph::empty(3, 4).unwrap();
        h.add_edge(&[0, 1, 2]).unwrap();
        assert!(underlies(&g, &h).unwrap());
        g = Graph::new(4);
        g.add_edge(2, 3).unwrap();
        assert!(!underlies(&g, &h).unwrap());
    }

    #[test]
    fn underlies_rejects_mismatched_vertex_sets() {
        let g = Graph::complete(4);
        let h = Hypergraph::empty(3, 5).unwrap();
        assert!(underlies(&g, &h).is_err());
    }
}
