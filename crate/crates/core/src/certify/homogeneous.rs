//! Homogeneous and near-homogeneous vertex sets.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rational::{binomial, count_ge, count_le, format_rat, rat_int, Rat};
use crate::search::{Budget, Tracker};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HomogeneousKind {
    Clique,
    Independent,
}

impl HomogeneousKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            HomogeneousKind::Clique => "clique",
            HomogeneousKind::Independent => "independent",
        }
    }
}

#[derive(Clone, Debug)]
pub struct HomogeneousOutcome {
    pub witness: Option<(Vec<u32>, HomogeneousKind)>,
    pub nodes: u64,
    pub complete: bool,
}

/// Lexicographically least `m`-set spanning a complete or empty induced
/// sub-hypergraph, or certified absence.
pub fn find_homogeneous(h: &Hypergraph, m: u32, budget: &Budget) -> Result<HomogeneousOutcome> {
    if m < h.r() {
        return Err(Error::input(format!(
            "homogeneous set size {m} below uniformity {}",
            h.r()
        )));
    }
    let mut tracker = budget.tracker();
    let mut chosen: Vec<u32> = Vec::with_capacity(m as usize);
    let found = homog_rec(h, m as usize, &mut chosen, true, true, &mut tracker)?;
    let nodes = tracker.used();
    match found {
        Some(kind) => {
            let w = chosen;
            // re-verify by definition
            let e = h.edges_within_sorted(&w)?;
            let total = binomial(m as u64, h.r() as u64)? as u64;
            let claim_ok = match kind {
                HomogeneousKind::Clique => e == total,
                HomogeneousKind::Independent => e == 0,
            };
            if !claim_ok {
                return Err(Error::WitnessInvalid("homogeneous witness recount failed".into()));
            }
            Ok(HomogeneousOutcome {
                witness: Some((w, kind)),
                nodes,
                complete: true,
            })
        }
        None => Ok(HomogeneousOutcome {
            witness: None,
            nodes,
            complete: true,
        }),
    }
}

fn homog_rec(
    h: &Hypergraph,
    m: usize,
    chosen: &mut Vec<u32>,
    can_clique: bool,
    can_indep: bool,
    tracker: &mut Tracker,
) -> Result<Option<HomogeneousKind>> {
    if chosen.len() == m {
        // m >= r, so at least one r-subset decided the kind
        return Ok(if can_clique {
            Some(HomogeneousKind::Clique)
        } else {
            Some(HomogeneousKind::Independent)
        });
    }
    let start = chosen.last().map_or(0, |&v| v + 1);
    let slack = h.n() as usize;
    for v in start..h.n() {
        if slack - (v as usize) < m - chosen.len() {
            break;
        }
        tracker.tick()?;
        let (mut next_clique, mut next_indep) = (can_clique, can_indep);
        if chosen.len() + 1 >= h.r() as usize {
            let mut all_edges = true;
            let mut no_edges = true;
            crate::search::for_each_subset_of(chosen, h.r() as usize - 1, |t| {
                let mut tuple: Vec<u32> = t.to_vec();
                tuple.push(v);
                if h.contains(&tuple) {
                    no_edges = false;
                } else {
                    all_edges = false;
                }
                Ok(true)
            })?;
            next_clique = can_clique && all_edges;
            next_indep = can_indep && no_edges;
        }
        if !next_clique && !next_indep {
            continue;
        }
        chosen.push(v);
        let found = homog_rec(h, m, chosen, next_clique, next_indep, tracker)?;
        if found.is_some() {
            return Ok(found);
        }
        chosen.pop();
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub enum HomogeneousSearchMode {
    Exact,
    /// Greedy peeling; finds witnesses but never certifies absence.
    Heuristic,
}

#[derive(Clone, Debug)]
pub struct EtaHomogeneousOutcome {
    pub witness: Option<Vec<u32>>,
    /// Induced density of the witness.
    pub density: Option<Rat>,
    pub nodes: u64,
    pub complete: bool,
}

/// An `m`-set with induced density at most `eta` or at least `1 - eta`.
pub fn find_eta_homogeneous(
    h: &Hypergraph,
    m: u32,
    eta: &Rat,
    mode: &HomogeneousSearchMode,
    budget: &Budget,
) -> Result<EtaHomogeneousOutcome> {
    use num_traits::Signed;
    if m < h.r() {
        return Err(Error::input(format!(
            "set size {m} below uniformity {}",
            h.r()
        )));
    }
    if eta.is_negative() || *eta >= Rat::new(1, 2) {
        return Err(Error::input(format!(
            "eta must lie in [0, 1/2), got {}",
            format_rat(eta)
        )));
    }
    let total = binomial(m as u64, h.r() as u64)?;
    let qualifies = |edges: u64| -> Result<bool> {
        Ok(count_le(edges as u128, eta, total)?
            || count_ge(edges as u128, &(rat_int(1) - eta), total)?)
    };
    match mode {
        HomogeneousSearchMode::Exact => {
            let mut tracker = budget.tracker();
            let mut witness = None;
            crate::search::for_each_subset(h.n(), m, |w| {
                tracker.tick()?;
                let e = h.edges_within_sorted(w)?;
                if qualifies(e)? {
                    witness = Some((w.to_vec(), e));
                    return Ok(false);
                }
                Ok(true)
            })?;
            let nodes = tracker.used();
            match witness {
                Some((w, e)) => Ok(EtaHomogeneousOutcome {
                    witness: Some(w),
                    density: Some(density_of(e, total)),
                    nodes,
                    complete: true,
                }),
                None => Ok(EtaHomogeneousOutcome {
                    witness: None,
                    density: None,
                    nodes,
                    complete: true,
                }),
            }
        }
        HomogeneousSearchMode::Heuristic => {
            if m > h.n() {
                return Ok(EtaHomogeneousOutcome {
                    witness: None,
                    density: None,
                    nodes: 0,
                    complete: false,
                });
            }
            let mut w: Vec<u32> = (0..h.n()).collect();
            let mut nodes = 0u64;
            while w.len() as u32 > m {
                // deleting v changes the edge count by its degree within w;
                // same denominator, so pick by degree alone
                let mut degs = vec![0u64; w.len()];
                crate::search::for_each_subset_of(&w, h.r() as usize, |t| {
                    if h.contains_sorted(t) {
                        for &x in t {
                            let idx = w.binary_search(&x).unwrap();
                            degs[idx] += 1;
                        }
                    }
                    Ok(true)
                })?;
                nodes += w.len() as u64;
                let e_now: u64 = degs.iter().sum::<u64>() / h.r() as u64;
                let tot_now = binomial(w.len() as u64, h.r() as u64)?;
                // nearer pole: compare 2e against the slot count
                let toward_zero = (e_now as u128) * 2 <= tot_now;
                let pick = if toward_zero {
                    // push density down: drop the highest-degree vertex
                    (0..w.len()).max_by_key(|&i| (degs[i], std::cmp::Reverse(w[i]))).unwrap()
                } else {
                    (0..w.len()).min_by_key(|&i| (degs[i], w[i])).unwrap()
                };
                w.remove(pick);
            }
            let e = h.edges_within_sorted(&w)?;
            if qualifies(e)? {
                Ok(EtaHomogeneousOutcome {
                    witness: Some(w),
                    density: Some(density_of(e, total)),
                    nodes,
                    complete: false,
                })
            } else {
                Ok(EtaHomogeneousOutcome {
                    witness: None,
                    density: None,
                    nodes,
                    complete: false,
                })
            }
        }
    }
}

fn density_of(edges: u64, total: u128) -> Rat {
    if total.is_zero() {
        return rat_int(0);
    }
    Rat::new(edges as i128, total as i128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn complete_host_yields_clique() {
        let h = Hypergraph::complete(3, 6).unwrap();
        let out = find_homogeneous(&h, 4, &Budget::default()).unwrap();
        let (w, kind) = out.witness.unwrap();
        assert_eq!(w, vec![0, 1, 2, 3]);
        assert_eq!(kind, HomogeneousKind::Clique);
    }

    #[test]
    fn empty_host_yields_independent_set() {
        let h = Hypergraph::empty(3, 6).unwrap();
        let out = find_homogeneous(&h, 5, &Budget::default()).unwrap();
        let (w, kind) = out.witness.unwrap();
        assert_eq!(w, vec![0, 1, 2, 3, 4]);
        assert_eq!(kind, HomogeneousKind::Independent);
    }

    #[test]
    fn matches_brute_force_on_random_hosts() {
        for seed in 0..10u64 {
            let h = crate::gen::random_hypergraph(3, 12, 0.5, 800 + seed).unwrap();
            let got = find_homogeneous(&h, 5, &Budget::default()).unwrap();
            // oracle: scan all binom(12,5) subsets
            let mut brute = false;
            crate::search::for_each_subset(12, 5, |w| {
                let e = h.edges_within_sorted(w).unwrap();
                if e == 0 || e == 10 {
                    brute = true;
                    return Ok(false);
                }
                Ok(true)
            })
            .unwrap();
            assert_eq!(got.witness.is_some(), brute, "seed {seed}");
        }
    }

    #[test]
    fn eta_zero_agrees_with_homogeneous() {
        for seed in 0..10u64 {
            let h = crate::gen::random_hypergraph(3, 10, 0.5, 900 + seed).unwrap();
            let a = find_homogeneous(&h, 4, &Budget::default()).unwrap();
            let b = find_eta_homogeneous(
                &h,
                4,
                &rat_int(0),
                &HomogeneousSearchMode::Exact,
                &Budget::default(),
            )
            .unwrap();
            assert_eq!(a.witness.is_some(), b.witness.is_some(), "seed {seed}");
        }
    }

    #[test]
    fn exact_quarter_matches_brute_force() {
        for seed in 0..6u64 {
            let h = crate::gen::random_hypergraph(3, 12, 0.5, 950 + seed).unwrap();
            let out = find_eta_homogeneous(
                &h,
                6,
                &rat(1, 4),
                &HomogeneousSearchMode::Exact,
                &Budget::default(),
            )
            .unwrap();
            let mut brute = false;
            crate::search::for_each_subset(12, 6, |w| {
                let e = h.edges_within_sorted(w).unwrap();
                // binom(6,3) = 20: qualify when e <= 5 or e >= 15
                if e * 4 <= 20 || e * 4 >= 60 {
                    brute = true;
                    return Ok(false);
                }
                Ok(true)
            })
            .unwrap();
            assert_eq!(out.witness.is_some(), brute, "seed {seed}");
        }
    }

    #[test]
    fn complete_host_qualifies_everywhere() {
        let h = Hypergraph::complete(3, 8).unwrap();
        let out = find_eta_homogeneous(
            &h,
            5,
            &rat(1, 4),
            &HomogeneousSearchMode::Exact,
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(out.witness, Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(out.density, Some(rat_int(1)));
    }

    #[test]
    fn heuristic_mode_is_flagged_noncertifying() {
        let h = crate::gen::random_hypergraph(3, 14, 0.5, 77).unwrap();
        let out = find_eta_homogeneous(
            &h,
            6,
            &rat(1, 4),
            &HomogeneousSearchMode::Heuristic,
            &Budget::default(),
        )
        .unwrap();
        assert!(!out.complete);
        if let Some(w) = &out.witness {
            assert_eq!(w.len(), 6);
        }
    }
}
