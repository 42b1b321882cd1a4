//! Parity construction: an r-set is an edge exactly when the random
//! (r-1)-graph spans an even number of edges inside it. Every (r+1)-set in
//! the output then has edge count congruent to r+1 mod 2, which is what the
//! downstream freeness certificates rely on.

use rand::Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rng;
use crate::search::{for_each_subset, for_each_subset_of};

#[derive(Clone, Debug)]
pub struct ParityOutcome {
    pub graph: Hypergraph,
    /// The sampled auxiliary (r-1)-graph.
    pub aux: Hypergraph,
}

/// Seeded parity construction on `n` vertices with uniformity `r >= 3`.
pub fn parity_construction(n: u32, r: u32, seed: u64) -> Result<ParityOutcome> {
    if r < 3 {
        return Err(Error::input(format!("parity construction needs r >= 3, got {r}")));
    }
    if n < r {
        return Err(Error::input(format!("parity construction needs n >= r, got n={n}")));
    }
    let mut aux = Hypergraph::empty(r - 1, n)?;
    let mut rng = rng::stream(seed, "parity/aux");
    let mut aux_edges = Vec::new();
    for_each_subset(n, r - 1, |e| {
        if rng.gen::<bool>() {
            aux_edges.push(e.to_vec());
        }
        Ok(true)
    })?;
    for e in aux_edges {
        aux.add_edge(&e)?;
    }
    let graph = parity_from_aux(&aux)?;
    Ok(ParityOutcome { graph, aux })
}

/// Deterministic half of the construction: derive the r-graph from an
/// explicit auxiliary (r-1)-graph.
pub fn parity_from_aux(aux: &Hypergraph) -> Result<Hypergraph> {
    let r = aux.r() + 1;
    let n = aux.n();
    if n < r {
        return Err(Error::input(format!(
            "auxiliary graph has too few vertices: n={n} < r={r}"
        )));
    }
    let mut out = Hypergraph::empty(r, n)?;
    let mut edges = Vec::new();
    for_each_subset(n, r, |s| {
        let mut inner = 0u32;
        for_each_subset_of(s, (r - 1) as usize, |t| {
            if aux.contains_sorted(t) {
                inner += 1;
            }
            Ok(true)
        })?;
        if inner % 2 == 0 {
            edges.push(s.to_vec());
        }
        Ok(true)
    })?;
    for e in edges {
        out.add_edge(&e)?;
    }
    Ok(out)
}
