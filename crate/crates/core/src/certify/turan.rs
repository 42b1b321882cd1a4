//! Clique extraction from very dense hypergraphs: seeded random k-subsets
//! with an exhaustive lexicographic fallback on small vertex sets.

use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::rational::{binomial, rat_int, Rat};
use crate::rng;
use crate::search::Budget;

pub const EXHAUSTIVE_FALLBACK_MAX_N: u32 = 15;

#[derive(Clone, Debug)]
pub struct TuranOutcome {
    pub witness: Option<Vec<u32>>,
    pub sampled_attempts: u64,
    pub used_fallback: bool,
    /// Set when the density recommendation `d > 1 - 1/binom(k, r)` fails.
    pub density_warning: Option<String>,
    /// True when the fallback exhausted the space, so absence is certified.
    pub complete: bool,
}

pub fn turan_clique(
    h: &Hypergraph,
    k: u32,
    seed: u64,
    max_attempts: u64,
    budget: &Budget,
) -> Result<TuranOutcome> {
    let r = h.r();
    let density_warning = if h.n() >= r {
        let d = h.density()?;
        let slots = binomial(k as u64, r as u64)?;
        let threshold = rat_int(1) - Rat::new(1, slots.max(1) as i128);
        if d <= threshold {
            Some(format!(
                "density {} not above 1 - 1/binom({k},{r}); success is not guaranteed",
                crate::rational::format_rat(&d)
            ))
        } else {
            None
        }
    } else {
        None
    };

    if k > h.n() {
        return Ok(TuranOutcome {
            witness: None,
            sampled_attempts: 0,
            used_fallback: false,
            density_warning,
            complete: true,
        });
    }

    let mut rng = rng::stream(seed, "turan/sample");
    let mut attempts = 0u64;
    for _ in 0..max_attempts {
        attempts += 1;
        let w = rng::sample_subset(&mut rng, h.n(), k);
        let e = h.edges_within_sorted(&w)?;
        if e as u128 == binomial(k as u64, r as u64)? {
            return Ok(TuranOutcome {
                witness: Some(w),
                sampled_attempts: attempts,
                used_fallback: false,
                density_warning,
                complete: false,
            });
        }
    }

    if h.n() <= EXHAUSTIVE_FALLBACK_MAX_N {
        let found = h.first_clique(k, None, budget)?;
        let complete = true;
        return Ok(TuranOutcome {
            witness: found,
            sampled_attempts: attempts,
            used_fallback: true,
            density_warning,
            complete,
        });
    }
    Ok(TuranOutcome {
        witness: None,
        sampled_attempts: attempts,
        used_fallback: false,
        density_warning,
        complete: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn any_edge_is_a_3_clique() {
        let mut h = Hypergraph::empty(3, 6).unwrap();
        h.add_edge(&[1, 3, 5]).unwrap();
        let out = turan_clique(&h, 3, 1, 0, &Budget::default()).unwrap();
        assert_eq!(out.witness, Some(vec![1, 3, 5]));
        assert!(out.used_fallback);
        // density 1/20 is far below the recommendation for k=3? binom(3,3)=1
        // makes the threshold 0, so one edge is enough; no warning expected
        assert!(out.density_warning.is_none());
    }

    #[test]
    fn complete_host_succeeds_by_sampling() {
        let h = Hypergraph::complete(3, 20).unwrap();
        let out = turan_clique(&h, 5, 3, 16, &Budget::default()).unwrap();
        assert!(out.witness.is_some());
        assert!(!out.used_fallback);
        assert_eq!(out.sampled_attempts, 1);
    }

    #[test]
    fn inconclusive_when_sampling_fails_on_large_host() {
        let h = Hypergraph::empty(3, 30).unwrap();
        let out = turan_clique(&h, 4, 1, 4, &Budget::default()).unwrap();
        assert!(out.witness.is_none());
        assert!(!out.complete);
        assert!(out.density_warning.is_some());
    }
}
