//! Complete bipartite extraction from dense bipartite graphs.
//!
//! The pigeonhole argument is run literally: enumerate the s-subsets of the
//! left side, bucket right vertices by which subsets their neighborhoods
//! contain, and take the deterministic argmax. Success requires the best
//! bucket to reach ceil(sqrt(|B|)).

use num_traits::Signed;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::rational::{format_rat, rat_floor, rat_int, Rat};
use crate::search::{for_each_subset, Budget};

#[derive(Clone)]
pub struct Bipartite {
    left_ids: Vec<u32>,
    right_ids: Vec<u32>,
    adj: Vec<BitSet>,
    edges: u64,
}

impl Bipartite {
    pub fn new(left_ids: Vec<u32>, right_ids: Vec<u32>) -> Self {
        let nb = right_ids.len();
        let adj = (0..left_ids.len()).map(|_| BitSet::new(nb)).collect();
        Bipartite {
            left_ids,
            right_ids,
            adj,
            edges: 0,
        }
    }

    /// Connect by position: `ai` indexes the left side, `bi` the right.
    pub fn add_edge(&mut self, ai: usize, bi: usize) {
        if !self.adj[ai].test(bi) {
            self.adj[ai].set(bi);
            self.edges += 1;
        }
    }

    pub fn left_len(&self) -> usize {
        self.left_ids.len()
    }

    pub fn right_len(&self) -> usize {
        self.right_ids.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.edges
    }

    pub fn has(&self, ai: usize, bi: usize) -> bool {
        self.adj[ai].test(bi)
    }

    pub fn left_ids(&self) -> &[u32] {
        &self.left_ids
    }

    pub fn right_ids(&self) -> &[u32] {
        &self.right_ids
    }
}

impl std::fmt::Debug for Bipartite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Bipartite(|A|={}, |B|={}, e={})",
            self.left_ids.len(),
            self.right_ids.len(),
            self.edges
        )
    }
}

#[derive(Clone, Debug)]
pub struct KstResult {
    /// Chosen left vertices (original ids), ascending.
    pub left: Vec<u32>,
    /// Every right vertex adjacent to all of `left` (original ids).
    pub right: Vec<u32>,
    pub s_target: usize,
    pub t_target: usize,
    /// Star count of the best bucket.
    pub top_bucket: u64,
    /// The `|A| <= log(|B|)/2` size condition; recorded rather than
    /// enforced, since the pigeonhole validation below fails loudly
    /// whenever the extraction cannot meet its contract.
    pub size_precondition_ok: bool,
    pub warnings: Vec<String>,
}

fn ceil_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

pub fn kst_extract(bip: &Bipartite, eps: &Rat, budget: &Budget) -> Result<KstResult> {
    if !eps.is_positive() || *eps > rat_int(1) {
        return Err(Error::input(format!(
            "epsilon must be in (0,1], got {}",
            format_rat(eps)
        )));
    }
    let na = bip.left_len();
    let nb = bip.right_len();
    if na == 0 || nb == 0 {
        return Err(Error::input("bipartite sides must be nonempty"));
    }
    // density precondition e >= eps * |A| * |B|
    let slots = (na as u128) * (nb as u128);
    if !crate::rational::count_ge(bip.edge_count() as u128, eps, slots)? {
        return Err(Error::precondition(format!(
            "edge count {} below eps*|A|*|B| = {}*{}",
            bip.edge_count(),
            format_rat(eps),
            slots
        )));
    }
    let mut warnings = Vec::new();
    let size_precondition_ok = (na as f64) <= 0.5 * (nb as f64).ln();
    if !size_precondition_ok {
        warnings.push(format!(
            "|A| = {na} exceeds log(|B|)/2 = {:.3}; the worst-case guarantee does not apply",
            0.5 * (nb as f64).ln()
        ));
    }

    let s_target = rat_floor(&(eps * rat_int(na as i128))).max(0) as usize;
    if s_target == 0 {
        return Err(Error::precondition(format!(
            "floor(eps*|A|) = 0 for eps = {}, |A| = {na}",
            format_rat(eps)
        )));
    }
    let t_target = ceil_sqrt(nb as u64) as usize;

    let mut tracker = budget.tracker();
    let mut best_count: u64 = 0;
    let mut best_subset: Option<Vec<u32>> = None;
    let mut common = BitSet::new(nb);
    for_each_subset(na as u32, s_target as u32, |subset| {
        tracker.tick()?;
        common.clone_from(&bip.adj[subset[0] as usize]);
        for &ai in &subset[1..] {
            common.intersect_with(&bip.adj[ai as usize]);
        }
        let count = common.count() as u64;
        // strict improvement keeps the lexicographically first argmax
        if count > best_count {
            best_count = count;
            best_subset = Some(subset.to_vec());
        }
        Ok(true)
    })?;

    let best_subset = best_subset.ok_or_else(|| {
        Error::inequality("kst-pigeonhole", "no left subset has any common neighbor")
    })?;
    if (best_count as usize) < t_target {
        return Err(Error::inequality(
            "kst-pigeonhole",
            format!("best bucket holds {best_count} stars, target {t_target}"),
        ));
    }

    let mut common = bip.adj[best_subset[0] as usize].clone();
    for &ai in &best_subset[1..] {
        common.intersect_with(&bip.adj[ai as usize]);
    }
    let left: Vec<u32> = best_subset
        .iter()
        .map(|&ai| bip.left_ids[ai as usize])
        .collect();
    let right: Vec<u32> = common
        .iter_ones()
        .map(|bi| bip.right_ids[bi])
        .collect();

    // completeness re-check by definition
    for &ai in &best_subset {
        for bi in common.iter_ones() {
            if !bip.has(ai as usize, bi) {
                return Err(Error::WitnessInvalid(
                    "extracted pair is not complete bipartite".into(),
                ));
            }
        }
    }

    Ok(KstResult {
        left,
        right,
        s_target,
        t_target,
        top_bucket: best_count,
        size_precondition_ok,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn complete_bipartite(na: usize, nb: usize) -> Bipartite {
        let mut b = Bipartite::new(
            (0..na as u32).collect(),
            (0..nb as u32).collect(),
        );
        for ai in 0..na {
            for bi in 0..nb {
                b.add_edge(ai, bi);
            }
        }
        b
    }

    #[test]
    fn complete_input_returns_whole_left_side() {
        let b = complete_bipartite(5, 100);
        let out = kst_extract(&b, &rat_int(1), &Budget::default()).unwrap();
        assert_eq!(out.left, vec![0, 1, 2, 3, 4]);
        assert_eq!(out.right.len(), 100);
        assert_eq!(out.t_target, 10);
    }

    #[test]
    fn ceil_sqrt_values() {
        assert_eq!(ceil_sqrt(4000), 64);
        assert_eq!(ceil_sqrt(4096), 64);
        assert_eq!(ceil_sqrt(1), 1);
        assert_eq!(ceil_sqrt(2), 2);
    }

    #[test]
    fn boundary_regular_instance_succeeds() {
        // every right vertex adjacent to a 3-window of the 6 left vertices:
        // exactly half the slots are edges
        let na = 6usize;
        let nb = 600usize;
        let mut b = Bipartite::new((0..na as u32).collect(), (0..nb as u32).collect());
        for bi in 0..nb {
            for off in 0..3 {
                b.add_edge((bi + off) % na, bi);
            }
        }
        assert_eq!(b.edge_count(), (na * nb / 2) as u64);
        let out = kst_extract(&b, &crate::rational::rat(1, 2), &Budget::default()).unwrap();
        assert_eq!(out.left.len(), 3);
        assert!(out.right.len() >= out.t_target);
    }

    #[test]
    fn random_instances_meet_contract() {
        let mut rng = crate::rng::stream(5, "kst-test");
        for _ in 0..20 {
            let na = 6usize;
            let nb = 500usize;
            let mut b = Bipartite::new((0..na as u32).collect(), (0..nb as u32).collect());
            loop {
                for ai in 0..na {
                    for bi in 0..nb {
                        if rng.gen::<f64>() < 0.6 && !b.has(ai, bi) {
                            b.add_edge(ai, bi);
                        }
                    }
                }
                if b.edge_count() as usize * 2 >= na * nb {
                    break;
                }
            }
            let out = kst_extract(&b, &crate::rational::rat(1, 2), &Budget::default()).unwrap();
            assert_eq!(out.left.len(), 3);
            assert!(out.right.len() >= 23); // ceil(sqrt(500))
        }
    }

    #[test]
    fn density_precondition_is_hard() {
        let mut b = Bipartite::new(vec![0, 1], vec![0, 1, 2]);
        b.add_edge(0, 0);
        assert!(matches!(
            kst_extract(&b, &rat_int(1), &Budget::default()),
            Err(Error::Precondition(_))
        ));
    }
}
