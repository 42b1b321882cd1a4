//! Seeded generators for synthetic inputs: complete partite systems with
//! controlled triangle deletion, random graphs and hypergraphs, and greedy
//! triangle-free graphs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::partite::{PartiteBuilder, PartiteSystem};
use crate::rational::{rat_floor, rat_int, Rat};
use crate::rng;
use crate::search::for_each_subset;

fn block_classes(k: usize, m: u32) -> Vec<Vec<u32>> {
    (0..k)
        .map(|c| (c as u32 * m..(c as u32 + 1) * m).collect())
        .collect()
}

fn complete_partite_builder(k: usize, m: u32) -> Result<(PartiteBuilder, Vec<Vec<u32>>)> {
    let classes = block_classes(k, m);
    let mut b = PartiteBuilder::new(&classes)?;
    for a in 0..k {
        for c in a + 1..k {
            for &u in &classes[a] {
                for &v in &classes[c] {
                    b.add_g_edge(u, v)?;
                }
            }
        }
    }
    Ok((b, classes))
}

/// Complete k-partite 2-graph with all transversal triples as 3-edges.
pub fn complete_system(k: usize, m: u32) -> Result<PartiteSystem> {
    complete_system_minus_bernoulli(k, m, 0.0, 0)
}

/// Complete system with each transversal triple independently deleted with
/// probability `delete_frac`. Streams the triples; nothing is materialized.
pub fn complete_system_minus_bernoulli(
    k: usize,
    m: u32,
    delete_frac: f64,
    seed: u64,
) -> Result<PartiteSystem> {
    let (mut b, classes) = complete_partite_builder(k, m)?;
    let mut r = rng::stream(seed, "gen/partite-bernoulli");
    for a in 0..k {
        for c in a + 1..k {
            for d in c + 1..k {
                for &u in &classes[a] {
                    for &v in &classes[c] {
                        for &w in &classes[d] {
                            if delete_frac == 0.0 || r.gen::<f64>() >= delete_frac {
                                b.add_h3_edge(u, v, w)?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(b.finish(classes))
}

/// Complete system with exactly `floor(frac * total)` transversal triples
/// removed, sampled uniformly without replacement. Materializes the triple
/// list, so only suitable for small systems.
pub fn complete_system_minus_exact(
    k: usize,
    m: u32,
    frac: &Rat,
    seed: u64,
) -> Result<PartiteSystem> {
    let (mut b, classes) = complete_partite_builder(k, m)?;
    let mut triples: Vec<[u32; 3]> = Vec::new();
    for a in 0..k {
        for c in a + 1..k {
            for d in c + 1..k {
                for &u in &classes[a] {
                    for &v in &classes[c] {
                        for &w in &classes[d] {
                            triples.push([u, v, w]);
                        }
                    }
                }
            }
        }
    }
    let remove = rat_floor(&(frac * rat_int(triples.len() as i128))).max(0) as usize;
    let mut r = rng::stream(seed, "gen/partite-exact");
    triples.shuffle(&mut r);
    for t in triples.iter().skip(remove) {
        b.add_h3_edge(t[0], t[1], t[2])?;
    }
    Ok(b.finish(classes))
}

/// Each pair an edge independently with probability `p`.
pub fn random_graph(n: u32, p: f64, seed: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut r = rng::stream(seed, "gen/graph");
    for u in 0..n {
        for v in u + 1..n {
            if r.gen::<f64>() < p {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Each r-subset an edge independently with probability `p`.
pub fn random_hypergraph(r_uniform: u32, n: u32, p: f64, seed: u64) -> Result<Hypergraph> {
    let mut h = Hypergraph::empty(r_uniform, n)?;
    let mut rng = rng::stream(seed, "gen/hypergraph");
    let mut edges = Vec::new();
    for_each_subset(n, r_uniform, |e| {
        if rng.gen::<f64>() < p {
            edges.push(e.to_vec());
        }
        Ok(true)
    })?;
    for e in edges {
        h.add_edge(&e)?;
    }
    Ok(h)
}

/// Greedy maximal triangle-free graph: pairs are visited in a seeded random
/// order and an edge is added whenever it closes no triangle.
pub fn random_triangle_free(n: u32, seed: u64) -> Graph {
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity((n as usize * (n as usize - 1)) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let mut r = rng::stream(seed, "gen/triangle-free");
    pairs.shuffle(&mut r);
    let mut g = Graph::new(n);
    for (u, v) in pairs {
        if g.neighbors(u).intersection_count(g.neighbors(v)) == 0 {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn triangle_free_generator_is_triangle_free_and_seeded() {
        for seed in 0..5u64 {
            let g = random_triangle_free(20, seed);
            assert!(g.is_triangle_free());
            assert_eq!(g.edges(), random_triangle_free(20, seed).edges());
        }
        assert_ne!(
            random_triangle_free(20, 0).edges(),
            random_triangle_free(20, 1).edges()
        );
    }

    #[test]
    fn exact_deletion_removes_exact_count() {
        let sys = complete_system_minus_exact(3, 4, &rat(1, 4), 3).unwrap();
        // 4^3 = 64 triples, 16 removed
        assert_eq!(sys.h3_edge_count(), 48);
    }

    #[test]
    fn random_hypergraph_is_deterministic_per_seed() {
        let a = random_hypergraph(3, 10, 0.5, 9).unwrap();
        let b = random_hypergraph(3, 10, 0.5, 9).unwrap();
        assert_eq!(a, b);
    }
}
