//! Random hypergraph plus clique deletion: sample each r-set independently,
//! then repeatedly locate the lexicographically first complete (r+1)-set and
//! delete its largest vertex until none remain.

use rand::Rng;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rng;
use crate::search::{for_each_subset, Budget};

#[derive(Clone, Debug)]
pub struct DeletionParams {
    pub n: u32,
    pub r: u32,
    pub p: f64,
    pub seed: u64,
}

impl DeletionParams {
    /// Probability `n^exponent`, the usual way to parameterize these runs.
    pub fn with_exponent(n: u32, r: u32, exponent: f64, seed: u64) -> Self {
        DeletionParams {
            n,
            r,
            p: (n as f64).powf(exponent),
            seed,
        }
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct DeletionLog {
    pub sampled_edges: u64,
    /// Original indices of deleted vertices, in deletion order.
    pub deleted: Vec<u32>,
    /// Original indices of surviving vertices (the output is their induced
    /// graph, relabeled order-preservingly).
    pub survivors: Vec<u32>,
    pub p: f64,
    pub seed: u64,
    /// Expected clique count over (r+1)-subsets: binom(n, r+1) * p^(r+1).
    pub expected_cliques_subsets: f64,
    /// Same expectation computed with binom(n, r) in place of binom(n, r+1);
    /// recorded alongside because the two differ materially at these scales.
    pub expected_cliques_r_sets: f64,
}

pub fn deletion_construction(
    params: &DeletionParams,
    budget: &Budget,
) -> Result<(Hypergraph, DeletionLog)> {
    let DeletionParams { n, r, p, seed } = *params;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("edge probability {p} outside [0,1]")));
    }
    if n < r + 1 {
        return Err(Error::input(format!("need n >= r+1, got n={n}, r={r}")));
    }
    let mut rng = rng::stream(seed, "deletion/sample");
    let mut sampled = Hypergraph::empty(r, n)?;
    let mut edges = Vec::new();
    for_each_subset(n, r, |s| {
        if rng.gen::<f64>() < p {
            edges.push(s.to_vec());
        }
        Ok(true)
    })?;
    for e in &edges {
        sampled.add_edge(e)?;
    }
    let sampled_edges = sampled.edge_count();

    let mut alive = BitSet::full(n as usize);
    let mut deleted = Vec::new();
    loop {
        match sampled.first_clique(r + 1, Some(&alive), budget)? {
            Some(clique) => {
                let victim = *clique.last().unwrap();
                alive.unset(victim as usize);
                deleted.push(victim);
            }
            None => break,
        }
    }
    let survivors: Vec<u32> = alive.iter_ones().map(|v| v as u32).collect();
    let out = sampled.induce(&survivors)?;

    let binom_r1 = crate::rational::binomial(n as u64, (r + 1) as u64)? as f64;
    let binom_r = crate::rational::binomial(n as u64, r as u64)? as f64;
    let pw = p.powi((r + 1) as i32);
    Ok((
        out,
        DeletionLog {
            sampled_edges,
            deleted,
            survivors,
            p,
            seed,
            expected_cliques_subsets: binom_r1 * pw,
            expected_cliques_r_sets: binom_r * pw,
        },
    ))
}
