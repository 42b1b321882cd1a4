//! k-partite systems: vertex classes, a k-partite 2-graph and a 3-graph on
//! the same vertices.
//!
//! The 3-graph is held as dense pair-link rows (one bitset per cross-class
//! vertex pair) rather than an edge set, since transversal-triangle systems
//! at pipeline scale have edge counts in the hundreds of millions. Class
//! refinement is cheap: a refined system shares the immutable base and only
//! replaces the selected class vectors.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::rational::{count_ge, format_rat, rat_int, Rat};
use crate::search::{Budget, Tracker};

const WORD_BITS: usize = 64;

/// Row-major block of fixed-width bit rows, one allocation per class pair.
struct LinkMatrix {
    words_per_row: usize,
    data: Vec<u64>,
}

impl LinkMatrix {
    fn new(rows: usize, nbits: usize) -> Self {
        let words_per_row = nbits.div_ceil(WORD_BITS);
        LinkMatrix {
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    #[inline]
    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    #[inline]
    fn set_bit(&mut self, r: usize, bit: usize) {
        self.data[r * self.words_per_row + bit / WORD_BITS] |= 1u64 << (bit % WORD_BITS);
    }
}

struct PartiteBase {
    n: u32,
    k: usize,
    class_of: Vec<u32>,
    local_idx: Vec<u32>,
    class_sizes: Vec<u32>,
    g_adj: Vec<BitSet>,
    g_edge_count: u64,
    links: Vec<LinkMatrix>,
    h3_edge_count: u64,
}

impl PartiteBase {
    #[inline]
    fn pair_slot(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < b);
        a * self.k - a * (a + 1) / 2 + (b - a - 1)
    }

    /// Link row of a cross-class pair, `None` for same-class pairs.
    #[inline]
    fn link_row(&self, u: u32, v: u32) -> Option<&[u64]> {
        let (ca, cb) = (self.class_of[u as usize] as usize, self.class_of[v as usize] as usize);
        if ca == cb {
            return None;
        }
        let (lo, lo_v, hi_v) = if ca < cb { (ca, u, v) } else { (cb, v, u) };
        let hi = if ca < cb { cb } else { ca };
        let row = self.local_idx[lo_v as usize] as usize * self.class_sizes[hi] as usize
            + self.local_idx[hi_v as usize] as usize;
        Some(self.links[self.pair_slot(lo, hi)].row(row))
    }
}

pub struct PartiteBuilder {
    base: PartiteBase,
}

impl PartiteBuilder {
    /// Classes must be disjoint, each nonempty, and together cover `0..n`.
    pub fn new(classes: &[Vec<u32>]) -> Result<Self> {
        let k = classes.len();
        if k < 3 {
            return Err(Error::input(format!("need at least 3 classes, got {k}")));
        }
        let n: usize = classes.iter().map(|c| c.len()).sum();
        let mut class_of = vec![u32::MAX; n];
        let mut local_idx = vec![0u32; n];
        for (ci, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::input(format!("class {ci} is empty")));
            }
            for (li, &v) in class.iter().enumerate() {
                if v as usize >= n {
                    return Err(Error::input(format!(
                        "vertex {v} out of range: classes must cover 0..{n}"
                    )));
                }
                if class_of[v as usize] != u32::MAX {
                    return Err(Error::input(format!("vertex {v} appears in two classes")));
                }
                class_of[v as usize] = ci as u32;
                local_idx[v as usize] = li as u32;
            }
        }
        let class_sizes: Vec<u32> = classes.iter().map(|c| c.len() as u32).collect();
        let mut links = Vec::with_capacity(k * (k - 1) / 2);
        for a in 0..k {
            for b in a + 1..k {
                links.push(LinkMatrix::new(
                    classes[a].len() * classes[b].len(),
                    n,
                ));
            }
        }
        Ok(PartiteBuilder {
            base: PartiteBase {
                n: n as u32,
                k,
                class_of,
                local_idx,
                class_sizes,
                g_adj: (0..n).map(|_| BitSet::new(n)).collect(),
                g_edge_count: 0,
                links,
                h3_edge_count: 0,
            },
        })
    }

    pub fn add_g_edge(&mut self, u: u32, v: u32) -> Result<()> {
        let b = &mut self.base;
        if u >= b.n || v >= b.n {
            return Err(Error::input(format!("graph edge ({u},{v}) out of range")));
        }
        if b.class_of[u as usize] == b.class_of[v as usize] {
            return Err(Error::input(format!(
                "graph edge ({u},{v}) lies within one class"
            )));
        }
        if !b.g_adj[u as usize].test(v as usize) {
            b.g_adj[u as usize].set(v as usize);
            b.g_adj[v as usize].set(u as usize);
            b.g_edge_count += 1;
        }
        Ok(())
    }

    pub fn add_h3_edge(&mut self, a: u32, b: u32, c: u32) -> Result<()> {
        let base = &mut self.base;
        if a >= base.n || b >= base.n || c >= base.n {
            return Err(Error::input(format!("3-edge ({a},{b},{c}) out of range")));
        }
        let (ca, cb, cc) = (
            base.class_of[a as usize],
            base.class_of[b as usize],
            base.class_of[c as usize],
        );
        if ca == cb || ca == cc || cb == cc {
            return Err(Error::input(format!(
                "3-edge ({a},{b},{c}) does not meet three distinct classes"
            )));
        }
        self.set_h3_bit(a, b, c);
        self.set_h3_bit(a, c, b);
        self.set_h3_bit(b, c, a);
        self.base.h3_edge_count += 1;
        Ok(())
    }

    #[inline]
    fn set_h3_bit(&mut self, u: u32, v: u32, w: u32) {
        let b = &mut self.base;
        let (ca, cb) = (b.class_of[u as usize] as usize, b.class_of[v as usize] as usize);
        let (lo, lo_v, hi, hi_v) = if ca < cb { (ca, u, cb, v) } else { (cb, v, ca, u) };
        let row = b.local_idx[lo_v as usize] as usize * b.class_sizes[hi] as usize
            + b.local_idx[hi_v as usize] as usize;
        let slot = lo * b.k - lo * (lo + 1) / 2 + (hi - lo - 1);
        b.links[slot].set_bit(row, w as usize);
    }

    pub fn finish(self, classes: Vec<Vec<u32>>) -> PartiteSystem {
        PartiteSystem {
            base: Arc::new(self.base),
            classes,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CliqueTarget {
    /// Transversal k-cliques of the 2-graph.
    Graph,
    /// Transversal hypercliques of the 3-graph (all triples are edges).
    Hyper,
    /// Hypercliques whose vertex pairs are additionally 2-graph edges.
    HyperWithGraph,
}

#[derive(Clone)]
pub struct PartiteSystem {
    base: Arc<PartiteBase>,
    classes: Vec<Vec<u32>>,
}

/// Outcome of the three-part density check, with enough detail to say which
/// condition failed and by what counts.
#[derive(Clone, Debug, serde::Serialize)]
pub struct DensityReport {
    pub dense: bool,
    pub underlies_ok: bool,
    pub underlies_witness: Option<[u32; 3]>,
    pub clique_count_graph: u64,
    pub clique_count_hyper: u64,
    pub class_product: u128,
    pub eps: String,
    pub eta: String,
    pub failed: Vec<String>,
}

impl PartiteSystem {
    /// Assemble a system from explicit edge lists. Classes must partition
    /// `0..n`; graph edges must join distinct classes and 3-edges must meet
    /// three distinct classes.
    pub fn from_edges(
        classes: Vec<Vec<u32>>,
        g_edges: impl IntoIterator<Item = (u32, u32)>,
        h3_edges: impl IntoIterator<Item = [u32; 3]>,
    ) -> Result<Self> {
        let mut sorted_classes = classes;
        for c in sorted_classes.iter_mut() {
            c.sort_unstable();
        }
        let mut b = PartiteBuilder::new(&sorted_classes)?;
        for (u, v) in g_edges {
            b.add_g_edge(u, v)?;
        }
        for [x, y, z] in h3_edges {
            b.add_h3_edge(x, y, z)?;
        }
        Ok(b.finish(sorted_classes))
    }

    pub fn k(&self) -> usize {
        self.base.k
    }

    pub fn n(&self) -> u32 {
        self.base.n
    }

    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    pub fn class_of(&self, v: u32) -> usize {
        self.base.class_of[v as usize] as usize
    }

    pub fn g_has(&self, u: u32, v: u32) -> bool {
        u != v && self.base.g_adj[u as usize].test(v as usize)
    }

    pub fn g_edge_count(&self) -> u64 {
        self.base.g_edge_count
    }

    pub fn h3_edge_count(&self) -> u64 {
        self.base.h3_edge_count
    }

    pub fn h3_has(&self, a: u32, b: u32, c: u32) -> bool {
        match self.base.link_row(a, b) {
            Some(row) => row[c as usize / WORD_BITS] >> (c as usize % WORD_BITS) & 1 == 1,
            None => false,
        }
    }

    /// Replace every class by a subset of itself.
    pub fn with_all_classes(&self, parts: &[Vec<u32>]) -> Result<Self> {
        if parts.len() != self.base.k {
            return Err(Error::input(format!(
                "expected {} classes, got {}",
                self.base.k,
                parts.len()
            )));
        }
        let mut classes = Vec::with_capacity(parts.len());
        for (idx, new) in parts.iter().enumerate() {
            if new.is_empty() {
                return Err(Error::input(format!("refined class {idx} is empty")));
            }
            if !new.iter().all(|v| self.classes[idx].contains(v)) {
                return Err(Error::input(format!(
                    "refined class {idx} is not a subset of the current class"
                )));
            }
            let mut c = new.clone();
            c.sort_unstable();
            classes.push(c);
        }
        Ok(PartiteSystem {
            base: Arc::clone(&self.base),
            classes,
        })
    }

    /// Replace classes `i` and `j` by subsets; everything else is shared.
    pub fn with_classes(&self, i: usize, new_i: Vec<u32>, j: usize, new_j: Vec<u32>) -> Result<Self> {
        for (idx, new) in [(i, &new_i), (j, &new_j)] {
            if new.is_empty() {
                return Err(Error::input(format!("refined class {idx} is empty")));
            }
            if !new.iter().all(|v| self.classes[idx].contains(v)) {
                return Err(Error::input(format!(
                    "refined class {idx} is not a subset of the current class"
                )));
            }
        }
        let mut classes = self.classes.clone();
        let mut a = new_i;
        a.sort_unstable();
        let mut b = new_j;
        b.sort_unstable();
        classes[i] = a;
        classes[j] = b;
        Ok(PartiteSystem {
            base: Arc::clone(&self.base),
            classes,
        })
    }

    pub fn class_bits(&self) -> Vec<BitSet> {
        self.classes
            .iter()
            .map(|c| BitSet::from_indices(self.base.n as usize, c.iter().copied()))
            .collect()
    }

    pub fn union_bits(&self) -> BitSet {
        BitSet::from_indices(
            self.base.n as usize,
            self.classes.iter().flatten().copied(),
        )
    }

    pub fn class_size_product(&self) -> Result<u128> {
        let mut p: u128 = 1;
        for c in &self.classes {
            p = p
                .checked_mul(c.len() as u128)
                .ok_or_else(|| Error::Overflow("class size product".into()))?;
        }
        Ok(p)
    }

    /// Exact count of transversal k-cliques of the selected target over the
    /// current classes, in class index order.
    pub fn count_transversal(&self, target: CliqueTarget, budget: &Budget) -> Result<u64> {
        let bits = self.class_bits();
        let mut tracker = budget.tracker();
        let mut count = 0u64;
        let full = BitSet::full(self.base.n as usize);
        let mut chosen: Vec<u32> = Vec::with_capacity(self.base.k);
        self.transversal_rec(
            &bits, target, 0, &mut chosen, &full, &full, &mut count, &mut tracker,
        )?;
        Ok(count)
    }

    /// Transversal cliques through a fixed 2-graph edge.
    pub fn count_through_edge(
        &self,
        u: u32,
        v: u32,
        target: CliqueTarget,
        budget: &Budget,
    ) -> Result<u64> {
        if !self.g_has(u, v) {
            return Err(Error::input(format!("({u},{v}) is not a graph edge")));
        }
        let (cu, cv) = (self.class_of(u), self.class_of(v));
        debug_assert_ne!(cu, cv);
        if !self.classes[cu].contains(&u) || !self.classes[cv].contains(&v) {
            return Err(Error::input("edge endpoint outside the current classes"));
        }
        let n = self.base.n as usize;
        let mut adj_run = BitSet::full(n);
        adj_run.intersect_with(&self.base.g_adj[u as usize]);
        adj_run.intersect_with(&self.base.g_adj[v as usize]);
        let mut link_run = BitSet::full(n);
        match self.base.link_row(u, v) {
            Some(row) => intersect_words(&mut link_run, row),
            None => link_run.clear(),
        }
        let bits: Vec<BitSet> = self
            .classes
            .iter()
            .enumerate()
            .filter(|(ci, _)| *ci != cu && *ci != cv)
            .map(|(_, c)| BitSet::from_indices(n, c.iter().copied()))
            .collect();
        let mut tracker = budget.tracker();
        let mut count = 0u64;
        if bits.is_empty() {
            // k = 2 classes never happens (k >= 3), but guard anyway
            return Ok(1);
        }
        let mut chosen = vec![u, v];
        self.transversal_rec(
            &bits,
            target,
            0,
            &mut chosen,
            &adj_run,
            &link_run,
            &mut count,
            &mut tracker,
        )?;
        Ok(count)
    }

    #[allow(clippy::too_many_arguments)]
    fn transversal_rec(
        &self,
        bits: &[BitSet],
        target: CliqueTarget,
        depth: usize,
        chosen: &mut Vec<u32>,
        adj_run: &BitSet,
        link_run: &BitSet,
        count: &mut u64,
        tracker: &mut Tracker,
    ) -> Result<()> {
        let mut cand = bits[depth].clone();
        match target {
            CliqueTarget::Graph => cand.intersect_with(adj_run),
            CliqueTarget::Hyper => {
                if chosen.len() >= 2 {
                    cand.intersect_with(link_run);
                }
            }
            CliqueTarget::HyperWithGraph => {
                cand.intersect_with(adj_run);
                if chosen.len() >= 2 {
                    cand.intersect_with(link_run);
                }
            }
        }
        if depth + 1 == bits.len() {
            tracker.tick()?;
            *count = count
                .checked_add(cand.count() as u64)
                .ok_or_else(|| Error::Overflow("transversal count".into()))?;
            return Ok(());
        }
        for w in cand.iter_ones() {
            tracker.tick()?;
            let w32 = w as u32;
            let mut adj_next = adj_run.clone();
            let mut link_next = link_run.clone();
            match target {
                CliqueTarget::Graph => adj_next.intersect_with(&self.base.g_adj[w]),
                CliqueTarget::Hyper => {
                    self.push_links(chosen, w32, &mut link_next);
                }
                CliqueTarget::HyperWithGraph => {
                    adj_next.intersect_with(&self.base.g_adj[w]);
                    self.push_links(chosen, w32, &mut link_next);
                }
            }
            chosen.push(w32);
            self.transversal_rec(
                bits, target, depth + 1, chosen, &adj_next, &link_next, count, tracker,
            )?;
            chosen.pop();
        }
        Ok(())
    }

    fn push_links(&self, chosen: &[u32], w: u32, link_run: &mut BitSet) {
        for &u in chosen {
            match self.base.link_row(u, w) {
                Some(row) => intersect_words(link_run, row),
                None => link_run.clear(),
            }
        }
    }

    /// Does the current 2-graph underlie the current 3-graph? Word-wise:
    /// each pair's link (restricted to selected vertices) must sit inside
    /// the common neighborhood, and a nonempty link needs the pair itself.
    pub fn check_underlies(&self) -> Option<[u32; 3]> {
        let union = self.union_bits();
        for a in 0..self.base.k {
            for b in a + 1..self.base.k {
                for &u in &self.classes[a] {
                    for &v in &self.classes[b] {
                        let row = match self.base.link_row(u, v) {
                            Some(r) => r,
                            None => continue,
                        };
                        let au = &self.base.g_adj[u as usize];
                        let av = &self.base.g_adj[v as usize];
                        let has_pair = self.g_has(u, v);
                        for (wi, &rw) in row.iter().enumerate() {
                            let masked = rw & union_word(&union, wi);
                            if masked == 0 {
                                continue;
                            }
                            let bad = masked & !(word(au, wi) & word(av, wi));
                            let offending = if !has_pair { masked } else { bad };
                            if offending != 0 {
                                let w = (wi * WORD_BITS + offending.trailing_zeros() as usize) as u32;
                                let mut t = [u, v, w];
                                t.sort_unstable();
                                return Some(t);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// The three-condition density check with exact arithmetic.
    pub fn is_dense(&self, eps: &Rat, eta: &Rat, budget: &Budget) -> Result<DensityReport> {
        use num_traits::Signed;
        if eps.is_negative() || eps.numer() == &0 || eps > &rat_int(1) {
            return Err(Error::input(format!(
                "epsilon must be in (0,1], got {}",
                format_rat(eps)
            )));
        }
        if eta.is_negative() {
            return Err(Error::input(format!(
                "eta must be nonnegative, got {}",
                format_rat(eta)
            )));
        }
        let mut failed = Vec::new();
        let underlies_witness = self.check_underlies();
        let underlies_ok = underlies_witness.is_none();
        if !underlies_ok {
            failed.push("underlies".to_string());
        }
        let nkg = self.count_transversal(CliqueTarget::Graph, budget)?;
        let nkh = self.count_transversal(CliqueTarget::Hyper, budget)?;
        let product = self.class_size_product()?;
        if !count_ge(nkg as u128, eps, product)? {
            failed.push("graph-clique-count".to_string());
        }
        let one_minus_eta = rat_int(1) - eta;
        if !count_ge(nkh as u128, &one_minus_eta, nkg as u128)? {
            failed.push("hyper-clique-fraction".to_string());
        }
        Ok(DensityReport {
            dense: failed.is_empty(),
            underlies_ok,
            underlies_witness,
            clique_count_graph: nkg,
            clique_count_hyper: nkh,
            class_product: product,
            eps: format_rat(eps),
            eta: format_rat(eta),
            failed,
        })
    }

    /// Materialize the current selection as plain graph + 3-graph on the
    /// full vertex range (edges only among selected vertices). Intended for
    /// small systems.
    pub fn to_graph_and_hypergraph(&self) -> Result<(Graph, Hypergraph)> {
        let mut g = Graph::new(self.base.n);
        let union = self.union_bits();
        for u in union.iter_ones() {
            for v in self.base.g_adj[u].iter_ones() {
                if v > u && union.test(v) {
                    g.add_edge(u as u32, v as u32)?;
                }
            }
        }
        let mut h = Hypergraph::empty(3, self.base.n)?;
        for a in 0..self.base.k {
            for b in a + 1..self.base.k {
                for &u in &self.classes[a] {
                    for &v in &self.classes[b] {
                        if let Some(row) = self.base.link_row(u, v) {
                            for (wi, &rw) in row.iter().enumerate() {
                                let mut bitsw = rw & union_word(&union, wi);
                                while bitsw != 0 {
                                    let w = (wi * WORD_BITS + bitsw.trailing_zeros() as usize) as u32;
                                    bitsw &= bitsw - 1;
                                    // count each triple once: third class above both
                                    if self.class_of(w) > b {
                                        h.add_edge(&[u, v, w])?;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok((g, h))
    }
}

impl std::fmt::Debug for PartiteSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PartiteSystem(k={}, sizes={:?}, m2={}, m3={})",
            self.base.k,
            self.classes.iter().map(|c| c.len()).collect::<Vec<_>>(),
            self.base.g_edge_count,
            self.base.h3_edge_count
        )
    }
}

#[inline]
fn word(b: &BitSet, wi: usize) -> u64 {
    b.words()[wi]
}

#[inline]
fn union_word(b: &BitSet, wi: usize) -> u64 {
    b.words()[wi]
}

#[inline]
fn intersect_words(b: &mut BitSet, row: &[u64]) {
    b.intersect_with_words(row);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::rational::rat;

    #[test]
    fn complete_system_is_dense_at_one_zero() {
        let sys = gen::complete_system(3, 4).unwrap();
        let rep = sys
            .is_dense(&rat_int(1), &rat_int(0), &Budget::default())
            .unwrap();
        assert!(rep.dense, "{rep:?}");
        assert_eq!(rep.clique_count_graph, 64);
        assert_eq!(rep.clique_count_hyper, 64);
    }

    #[test]
    fn empty_hyper_is_not_dense() {
        let k = 3;
        let m = 3;
        let classes: Vec<Vec<u32>> = (0..k)
            .map(|c| ((c * m) as u32..((c + 1) * m) as u32).collect())
            .collect();
        let mut g_edges = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                for &u in &classes[a] {
                    for &v in &classes[b] {
                        g_edges.push((u, v));
                    }
                }
            }
        }
        let sys = PartiteSystem::from_edges(classes, g_edges, Vec::new()).unwrap();
        let rep = sys
            .is_dense(&rat_int(1), &rat(1, 2), &Budget::default())
            .unwrap();
        assert!(!rep.dense);
        assert!(rep.failed.contains(&"hyper-clique-fraction".to_string()));
    }

    #[test]
    fn ten_percent_deletion_window() {
        // exact 10% of 512 transversal triangles removed: dense at (1, 0.15),
        // not dense at (1, 0.05)
        let sys = gen::complete_system_minus_exact(3, 8, &rat(1, 10), 11).unwrap();
        let dense_loose = sys
            .is_dense(&rat_int(1), &rat(15, 100), &Budget::default())
            .unwrap();
        let dense_tight = sys
            .is_dense(&rat_int(1), &rat(5, 100), &Budget::default())
            .unwrap();
        assert_eq!(sys.count_transversal(CliqueTarget::Hyper, &Budget::default()).unwrap(), 461);
        assert!(dense_loose.dense);
        assert!(!dense_tight.dense);
    }

    #[test]
    fn through_edge_counts() {
        let sys = gen::complete_system(4, 3).unwrap();
        // complete k-partite, parts of size m, target graph: m^(k-2)
        assert_eq!(
            sys.count_through_edge(0, 3, CliqueTarget::Graph, &Budget::default())
                .unwrap(),
            9
        );
        assert_eq!(
            sys.count_through_edge(0, 3, CliqueTarget::HyperWithGraph, &Budget::default())
                .unwrap(),
            9
        );
        assert!(sys
            .count_through_edge(0, 1, CliqueTarget::Graph, &Budget::default())
            .is_err());
    }

    #[test]
    fn through_edge_matches_enumeration() {
        let sys = gen::complete_system_minus_exact(3, 4, &rat(3, 10), 5).unwrap();
        let (g, h) = sys.to_graph_and_hypergraph().unwrap();
        for u in sys.classes()[0].clone() {
            for v in sys.classes()[1].clone() {
                if !sys.g_has(u, v) {
                    continue;
                }
                let got = sys
                    .count_through_edge(u, v, CliqueTarget::HyperWithGraph, &Budget::default())
                    .unwrap();
                let mut brute = 0;
                for &w in &sys.classes()[2] {
                    if h.contains(&[u, v, w]) && g.has_edge(u, w) && g.has_edge(v, w) && g.has_edge(u, v) {
                        brute += 1;
                    }
                }
                assert_eq!(got, brute);
            }
        }
    }

    #[test]
    fn refinement_shares_base() {
        let sys = gen::complete_system(3, 4).unwrap();
        let refined = sys
            .with_classes(0, vec![0, 1], 1, vec![4, 5])
            .unwrap();
        assert_eq!(refined.classes()[0], vec![0, 1]);
        assert_eq!(
            refined
                .count_transversal(CliqueTarget::Graph, &Budget::default())
                .unwrap(),
            16
        );
        assert!(sys.with_classes(0, vec![99], 1, vec![4]).is_err());
    }

    #[test]
    fn underlies_detects_missing_pair() {
        let classes: Vec<Vec<u32>> = vec![vec![0], vec![1], vec![2]];
        // triple present but pair (0,1) missing from G
        let sys = PartiteSystem::from_edges(
            classes,
            vec![(0, 2), (1, 2)],
            vec![[0, 1, 2]],
        )
        .unwrap();
        assert_eq!(sys.check_underlies(), Some([0, 1, 2]));
    }
}
