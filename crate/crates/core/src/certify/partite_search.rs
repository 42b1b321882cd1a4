//! Search for a complete r-partite sub-hypergraph with parts of size `t`
//! (subgraph containment: every transversal r-set must be an edge).
//!
//! Parts are built in rounds, one vertex per part per round, so every
//! placement is constrained against the transversal tuples it completes.
//! Branching is lexicographic with parts canonicalized by ascending first
//! vertices; exhausting the walk certifies absence.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::search::{Budget, Tracker};

#[derive(Clone, Debug)]
pub struct PartiteOutcome {
    pub parts: Option<Vec<Vec<u32>>>,
    pub nodes: u64,
    pub complete: bool,
}

pub fn find_complete_partite(h: &Hypergraph, t: u32, budget: &Budget) -> Result<PartiteOutcome> {
    let r = h.r();
    if t == 0 {
        return Err(Error::input("part size t must be positive"));
    }
    if (r as u64) * (t as u64) > h.n() as u64 {
        return Err(Error::input(format!(
            "need r*t = {} vertices, hypergraph has {}",
            r as u64 * t as u64,
            h.n()
        )));
    }
    let mut st = State {
        h,
        r: r as usize,
        t: t as usize,
        parts: vec![Vec::with_capacity(t as usize); r as usize],
        used: BitSet::new(h.n() as usize),
        tracker: budget.tracker(),
    };
    let found = place(&mut st, 0)?;
    let nodes = st.tracker.used();
    if found {
        let parts = st.parts.clone();
        super::verify_witness_parts(h, &parts)?;
        Ok(PartiteOutcome {
            parts: Some(parts),
            nodes,
            complete: true,
        })
    } else {
        Ok(PartiteOutcome {
            parts: None,
            nodes,
            complete: true,
        })
    }
}

struct State<'a> {
    h: &'a Hypergraph,
    r: usize,
    t: usize,
    parts: Vec<Vec<u32>>,
    used: BitSet,
    tracker: Tracker,
}

fn place(st: &mut State, slot: usize) -> Result<bool> {
    if slot == st.r * st.t {
        return Ok(true);
    }
    let round = slot / st.r;
    let part = slot % st.r;

    let lower = if round == 0 {
        if part == 0 {
            0
        } else {
            st.parts[part - 1][0] + 1
        }
    } else {
        st.parts[part][round - 1] + 1
    };

    // 3-graphs: intersect pair links of the other two parts' members
    let cand3 = if st.h.r() == 3 {
        let others: Vec<usize> = (0..st.r).filter(|&i| i != part).collect();
        let (j, l) = (others[0], others[1]);
        if !st.parts[j].is_empty() && !st.parts[l].is_empty() {
            let links = st.h.pair_links();
            let mut cand = BitSet::full(st.h.n() as usize);
            for &x in &st.parts[j] {
                for &y in &st.parts[l] {
                    cand.intersect_with(links.link(x, y));
                }
            }
            Some(cand)
        } else {
            None
        }
    } else {
        None
    };

    let candidates: Vec<u32> = match &cand3 {
        Some(c) => c
            .iter_ones()
            .map(|v| v as u32)
            .filter(|&v| v >= lower)
            .collect(),
        None => (lower..st.h.n()).collect(),
    };

    for v in candidates {
        st.tracker.tick()?;
        if st.used.test(v as usize) {
            continue;
        }
        if cand3.is_none() && !placement_ok(st, part, v) {
            continue;
        }
        st.parts[part].push(v);
        st.used.set(v as usize);
        if place(st, slot + 1)? {
            return Ok(true);
        }
        st.used.unset(v as usize);
        st.parts[part].pop();
    }
    Ok(false)
}

/// Every transversal tuple completed by `v` must be an edge: one current
/// member from each other part. Parts still empty defer their constraints.
fn placement_ok(st: &State, part: usize, v: u32) -> bool {
    let others: Vec<usize> = (0..st.r)
        .filter(|&i| i != part)
        .collect();
    if others.iter().any(|&i| st.parts[i].is_empty()) {
        return true;
    }
    let mut tuple: Vec<u32> = Vec::with_capacity(st.r);
    tuple.push(v);
    combos_ok(st, &others, 0, &mut tuple)
}

fn combos_ok(st: &State, others: &[usize], depth: usize, tuple: &mut Vec<u32>) -> bool {
    if depth == others.len() {
        return st.h.contains(tuple);
    }
    for &x in &st.parts[others[depth]] {
        tuple.push(x);
        if !combos_ok(st, others, depth + 1, tuple) {
            tuple.pop();
            return false;
        }
        tuple.pop();
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_host_at_exact_size() {
        let h = Hypergraph::complete(3, 6).unwrap();
        let out = find_complete_partite(&h, 2, &Budget::default()).unwrap();
        let parts = out.parts.expect("complete host contains everything");
        assert_eq!(parts.iter().map(|p| p.len()).collect::<Vec<_>>(), vec![2, 2, 2]);
    }

    #[test]
    fn empty_host_is_certified_absent() {
        let h = Hypergraph::empty(3, 9).unwrap();
        let out = find_complete_partite(&h, 2, &Budget::default()).unwrap();
        assert!(out.parts.is_none());
        assert!(out.complete);
    }

    #[test]
    fn size_precondition() {
        let h = Hypergraph::empty(3, 5).unwrap();
        assert!(find_complete_partite(&h, 2, &Budget::default()).is_err());
    }

    #[test]
    fn agrees_with_definitional_brute_force() {
        for seed in 0..12u64 {
            let h = crate::gen::random_hypergraph(3, 9, 0.55, 100 + seed).unwrap();
            let got = find_complete_partite(&h, 2, &Budget::default())
                .unwrap()
                .parts
                .is_some();
            assert_eq!(got, brute_force_kttt(&h, 2), "seed {seed}");
        }
    }

    /// Oracle: scan all ways to pick three disjoint pairs.
    fn brute_force_kttt(h: &Hypergraph, t: usize) -> bool {
        let n = h.n() as usize;
        let pairs: Vec<Vec<u32>> = {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            subsets(n, t, 0, &mut cur, &mut out);
            out
        };
        for a in &pairs {
            for b in &pairs {
                if !disjoint(a, b) {
                    continue;
                }
                for c in &pairs {
                    if !disjoint(a, c) || !disjoint(b, c) {
                        continue;
                    }
                    let mut all = true;
                    'check: for &x in a {
                        for &y in b {
                            for &z in c {
                                if !h.contains(&[x, y, z]) {
                                    all = false;
                                    break 'check;
                                }
                            }
                        }
                    }
                    if all {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v as u32);
            subsets(n, k, v + 1, cur, out);
            cur.pop();
        }
    }

    fn disjoint(a: &[u32], b: &[u32]) -> bool {
        a.iter().all(|x| !b.contains(x))
    }

    #[test]
    fn monotone_in_part_size() {
        for seed in 0..8u64 {
            let h = crate::gen::random_hypergraph(3, 12, 0.75, 300 + seed).unwrap();
            let big = find_complete_partite(&h, 3, &Budget::default()).unwrap();
            if big.parts.is_some() {
                let small = find_complete_partite(&h, 2, &Budget::default()).unwrap();
                assert!(small.parts.is_some(), "seed {seed}");
            }
        }
    }

    #[test]
    fn complement_duality() {
        // searching the complement equals searching for an "empty" family
        // in the original: verify both paths agree on the verdict
        for seed in 0..8u64 {
            let h = crate::gen::random_hypergraph(3, 9, 0.4, 500 + seed).unwrap();
            let comp = h.complement().unwrap();
            let via_complement = find_complete_partite(&comp, 2, &Budget::default())
                .unwrap()
                .parts;
            // direct oracle on h: all transversal triples must be non-edges
            let mut found_direct = false;
            let n = h.n() as usize;
            let mut pairs = Vec::new();
            subsets(n, 2, 0, &mut Vec::new(), &mut pairs);
            'outer: for a in &pairs {
                for b in &pairs {
                    if !disjoint(a, b) {
                        continue;
                    }
                    for c in &pairs {
                        if !disjoint(a, c) || !disjoint(b, c) {
                            continue;
                        }
                        let mut all_empty = true;
                        for &x in a {
                            for &y in b {
                                for &z in c {
                                    if h.contains(&[x, y, z]) {
                                        all_empty = false;
                                    }
                                }
                            }
                        }
                        if all_empty {
                            found_direct = true;
                            break 'outer;
                        }
                    }
                }
            }
            assert_eq!(via_complement.is_some(), found_direct, "seed {seed}");
        }
    }
}
