//! r-uniform hypergraphs with canonical sorted edges.
//!
//! Edges live in a hash set of sorted tuples; 3-graphs additionally build
//! pair-link bitset rows on demand (the link of a pair is the set of third
//! vertices completing an edge), which is what the clique counters, the
//! induced-copy search and the partite searches run on.

use std::collections::HashMap;
use std::sync::OnceLock;

use smallvec::SmallVec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::rational::{binomial, Rat};
use crate::search::{for_each_subset, Budget, Tracker};

pub type Edge = SmallVec<[u32; 6]>;

pub struct Hypergraph {
    r: u32,
    n: u32,
    edges: std::collections::HashSet<Edge>,
    links: OnceLock<PairLinks>,
}

/// For 3-graphs: `link(u, v)` = bitset of vertices `w` with `{u,v,w}` an edge.
pub struct PairLinks {
    map: HashMap<(u32, u32), BitSet>,
    empty: BitSet,
}

impl PairLinks {
    #[inline]
    pub fn link(&self, u: u32, v: u32) -> &BitSet {
        let key = if u < v { (u, v) } else { (v, u) };
        self.map.get(&key).unwrap_or(&self.empty)
    }
}

impl Hypergraph {
    pub fn empty(r: u32, n: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::input(format!("uniformity must be at least 2, got {r}")));
        }
        Ok(Hypergraph {
            r,
            n,
            edges: Default::default(),
            links: OnceLock::new(),
        })
    }

    pub fn complete(r: u32, n: u32) -> Result<Self> {
        let mut h = Hypergraph::empty(r, n)?;
        for_each_subset(n, r, |e| {
            h.edges.insert(Edge::from_slice(e));
            Ok(true)
        })?;
        Ok(h)
    }

    pub fn from_edges<I, E>(r: u32, n: u32, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        let mut h = Hypergraph::empty(r, n)?;
        for e in edges {
            h.add_edge(e.as_ref())?;
        }
        Ok(h)
    }

    fn canonical_edge(&self, verts: &[u32]) -> Result<Edge> {
        if verts.len() != self.r as usize {
            return Err(Error::input(format!(
                "edge has {} vertices, expected {}",
                verts.len(),
                self.r
            )));
        }
        let mut e = Edge::from_slice(verts);
        e.sort_unstable();
        if e.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input(format!("edge {verts:?} has repeated vertices")));
        }
        if *e.last().unwrap() >= self.n {
            return Err(Error::input(format!(
                "edge {verts:?} out of range for n={}",
                self.n
            )));
        }
        Ok(e)
    }

    pub fn add_edge(&mut self, verts: &[u32]) -> Result<()> {
        let e = self.canonical_edge(verts)?;
        self.edges.insert(e);
        self.links = OnceLock::new();
        Ok(())
    }

    pub fn remove_edge(&mut self, verts: &[u32]) -> Result<bool> {
        let e = self.canonical_edge(verts)?;
        let removed = self.edges.remove(&e);
        if removed {
            self.links = OnceLock::new();
        }
        Ok(removed)
    }

    #[inline]
    pub fn r(&self) -> u32 {
        self.r
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    /// Membership test; the slice may be in any order.
    pub fn contains(&self, verts: &[u32]) -> bool {
        if verts.len() != self.r as usize {
            return false;
        }
        let mut e = Edge::from_slice(verts);
        e.sort_unstable();
        self.edges.contains(&e)
    }

    /// Membership test for an already sorted tuple.
    #[inline]
    pub fn contains_sorted(&self, verts: &[u32]) -> bool {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        self.edges.contains(verts)
    }

    /// Iteration in hash order; callers producing output must sort.
    pub fn edges_iter(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    /// Edges in canonical lexicographic order.
    pub fn sorted_edges(&self) -> Vec<Edge> {
        let mut v: Vec<Edge> = self.edges.iter().cloned().collect();
        v.sort_unstable();
        v
    }

    pub fn pair_links(&self) -> &PairLinks {
        debug_assert_eq!(self.r, 3, "pair links are a 3-graph structure");
        self.links.get_or_init(|| {
            let mut map: HashMap<(u32, u32), BitSet> = HashMap::new();
            let n = self.n as usize;
            for e in &self.edges {
                let (a, b, c) = (e[0], e[1], e[2]);
                map.entry((a, b)).or_insert_with(|| BitSet::new(n)).set(c as usize);
                map.entry((a, c)).or_insert_with(|| BitSet::new(n)).set(b as usize);
                map.entry((b, c)).or_insert_with(|| BitSet::new(n)).set(a as usize);
            }
            PairLinks {
                map,
                empty: BitSet::new(n),
            }
        })
    }

    /// Per-vertex incident edge counts.
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n as usize];
        for e in &self.edges {
            for &v in e.iter() {
                deg[v as usize] += 1;
            }
        }
        deg
    }

    /// Set complement of the edge set within all r-subsets of the vertex set.
    pub fn complement(&self) -> Result<Hypergraph> {
        let mut h = Hypergraph::empty(self.r, self.n)?;
        for_each_subset(self.n, self.r, |e| {
            if !self.edges.contains(e) {
                h.edges.insert(Edge::from_slice(e));
            }
            Ok(true)
        })?;
        Ok(h)
    }

    /// Induced sub-hypergraph on `w`, vertices relabeled to `0..|w|`
    /// preserving relative order.
    pub fn induce(&self, w: &[u32]) -> Result<Hypergraph> {
        let mut sorted: Vec<u32> = w.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::input("induced vertex set has duplicates"));
        }
        if sorted.last().is_some_and(|&v| v >= self.n) {
            return Err(Error::input(format!(
                "induced vertex set out of range for n={}",
                self.n
            )));
        }
        let mut relabel: HashMap<u32, u32> = HashMap::with_capacity(sorted.len());
        for (new, &old) in sorted.iter().enumerate() {
            relabel.insert(old, new as u32);
        }
        let mut h = Hypergraph::empty(self.r, sorted.len() as u32)?;
        for e in &self.edges {
            if let Some(mapped) = e
                .iter()
                .map(|v| relabel.get(v).copied())
                .collect::<Option<Edge>>()
            {
                let mut m = mapped;
                m.sort_unstable();
                h.edges.insert(m);
            }
        }
        Ok(h)
    }

    /// Exact edge density `e / binom(n, r)`.
    pub fn density(&self) -> Result<Rat> {
        if self.n < self.r {
            return Err(Error::input(format!(
                "density undefined: n={} < r={}",
                self.n, self.r
            )));
        }
        let total = binomial(self.n as u64, self.r as u64)?;
        let total_i = i128::try_from(total).map_err(|_| Error::Overflow("density".into()))?;
        Ok(Rat::new(self.edges.len() as i128, total_i))
    }

    /// Number of edges spanned by a sorted vertex subset.
    pub fn edges_within_sorted(&self, w: &[u32]) -> Result<u64> {
        debug_assert!(w.windows(2).all(|p| p[0] < p[1]));
        if w.len() < self.r as usize {
            return Ok(0);
        }
        if self.r == 3 {
            let links = self.pair_links();
            let wbits = BitSet::from_indices(self.n as usize, w.iter().copied());
            let mut count = 0u64;
            for (i, &u) in w.iter().enumerate() {
                for &v in &w[i + 1..] {
                    let mut common = links.link(u, v).clone();
                    common.intersect_with(&wbits);
                    common.keep_above(v as usize);
                    count += common.count() as u64;
                }
            }
            return Ok(count);
        }
        let mut count = 0u64;
        crate::search::for_each_subset_of(w, self.r as usize, |t| {
            if self.contains_sorted(t) {
                count += 1;
            }
            Ok(true)
        })?;
        Ok(count)
    }

    /// Exact number of `k`-vertex subsets spanning complete sub-hypergraphs.
    pub fn count_cliques(&self, k: u32, budget: &Budget) -> Result<u64> {
        if k < self.r {
            return Err(Error::input(format!("clique order {k} below uniformity {}", self.r)));
        }
        if k == self.r {
            return Ok(self.edge_count());
        }
        if k > self.n {
            return Ok(0);
        }
        let mut tracker = budget.tracker();
        let mut count = 0u64;
        if self.r == 3 {
            let links = self.pair_links();
            let full = BitSet::full(self.n as usize);
            let mut chosen = Vec::with_capacity(k as usize);
            self.clique3_rec(links, &mut chosen, &full, k, &mut count, &mut tracker)?;
        } else {
            let mut chosen: Vec<u32> = Vec::with_capacity(k as usize);
            self.clique_gen_rec(&mut chosen, k, &mut count, &mut tracker)?;
        }
        Ok(count)
    }

    fn clique3_rec(
        &self,
        links: &PairLinks,
        chosen: &mut Vec<u32>,
        cand: &BitSet,
        remaining: u32,
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
        for w in cand.iter_ones() {
            tracker.tick()?;
            next.clone_from(cand);
            next.keep_above(w);
            for &u in chosen.iter() {
                next.intersect_with(links.link(u, w as u32));
            }
            if next.count() as u32 >= remaining - 1 {
                chosen.push(w as u32);
                self.clique3_rec(links, chosen, &next, remaining - 1, count, tracker)?;
                chosen.pop();
            }
        }
        Ok(())
    }

    fn clique_gen_rec(
        &self,
        chosen: &mut Vec<u32>,
        remaining: u32,
        count: &mut u64,
        tracker: &mut Tracker,
    ) -> Result<()> {
        if remaining == 0 {
            *count = count
                .checked_add(1)
                .ok_or_else(|| Error::Overflow("clique count".into()))?;
            return Ok(());
        }
        let start = chosen.last().map_or(0, |&v| v + 1);
        for w in start..self.n {
            tracker.tick()?;
            if self.extends_clique(chosen, w) {
                chosen.push(w);
                self.clique_gen_rec(chosen, remaining - 1, count, tracker)?;
                chosen.pop();
            }
        }
        Ok(())
    }

    fn extends_clique(&self, chosen: &[u32], w: u32) -> bool {
        let need = self.r as usize - 1;
        if chosen.len() < need {
            return true;
        }
        let mut ok = true;
        let mut scratch: Edge = Edge::new();
        let _ = crate::search::for_each_subset_of(chosen, need, |t| {
            scratch.clear();
            scratch.extend_from_slice(t);
            scratch.push(w);
            scratch.sort_unstable();
            if !self.contains_sorted(&scratch) {
                ok = false;
                return Ok(false);
            }
            Ok(true)
        });
        ok
    }

    /// Lexicographically first `k`-clique among vertices enabled in `alive`
    /// (all vertices when `None`).
    pub fn first_clique(
        &self,
        k: u32,
        alive: Option<&BitSet>,
        budget: &Budget,
    ) -> Result<Option<Vec<u32>>> {
        if k > self.n {
            return Ok(None);
        }
        let universe = match alive {
            Some(a) => a.clone(),
            None => BitSet::full(self.n as usize),
        };
        let mut tracker = budget.tracker();
        let mut chosen: Vec<u32> = Vec::with_capacity(k as usize);
        if self.r == 3 {
            let links = self.pair_links();
            if self.first3_rec(links, &mut chosen, &universe, k, &mut tracker)? {
                return Ok(Some(chosen));
            }
        } else if self.first_gen_rec(&universe, &mut chosen, k, &mut tracker)? {
            return Ok(Some(chosen));
        }
        Ok(None)
    }

    fn first3_rec(
        &self,
        links: &PairLinks,
        chosen: &mut Vec<u32>,
        cand: &BitSet,
        remaining: u32,
        tracker: &mut Tracker,
    ) -> Result<bool> {
        if remaining == 0 {
            return Ok(true);
        }
        let mut next = BitSet::new(self.n as usize);
        for w in cand.iter_ones() {
            tracker.tick()?;
            next.clone_from(cand);
            next.keep_above(w);
            for &u in chosen.iter() {
                next.intersect_with(links.link(u, w as u32));
            }
            if next.count() as u32 >= remaining - 1 {
                chosen.push(w as u32);
                if self.first3_rec(links, chosen, &next, remaining - 1, tracker)? {
                    return Ok(true);
                }
                chosen.pop();
            }
        }
        Ok(false)
    }

    fn first_gen_rec(
        &self,
        universe: &BitSet,
        chosen: &mut Vec<u32>,
        remaining: u32,
        tracker: &mut Tracker,
    ) -> Result<bool> {
        if remaining == 0 {
            return Ok(true);
        }
        let start = chosen.last().map_or(0, |&v| v + 1);
        for w in start..self.n {
            if !universe.test(w as usize) {
                continue;
            }
            tracker.tick()?;
            if self.extends_clique(chosen, w) {
                chosen.push(w);
                if self.first_gen_rec(universe, chosen, remaining - 1, tracker)? {
                    return Ok(true);
                }
                chosen.pop();
            }
        }
        Ok(false)
    }
}

impl Clone for Hypergraph {
    fn clone(&self) -> Self {
        Hypergraph {
            r: self.r,
            n: self.n,
            edges: self.edges.clone(),
            links: OnceLock::new(),
        }
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph(r={}, n={}, m={})", self.r, self.n, self.edges.len())
    }
}

/// A hypergraph whose numeric vertex order is semantically significant;
/// isomorphism checks against it must preserve order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderedHypergraph {
    pub base: Hypergraph,
}

impl OrderedHypergraph {
    pub fn new(base: Hypergraph) -> Self {
        OrderedHypergraph { base }
    }
}

/// Injective vertex map from a pattern into a host, the witness object
/// returned by every search.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub struct Embedding {
    /// `map[p]` is the host image of pattern vertex `p`.
    pub map: Vec<u32>,
    pub ordered: bool,
}

impl Embedding {
    /// Direct definition check: injective, in range, edges map to edges and
    /// pattern non-edges to host non-edges.
    pub fn verify_induced(&self, pattern: &Hypergraph, host: &Hypergraph) -> Result<()> {
        if pattern.r() != host.r() {
            return Err(Error::input("uniformity mismatch"));
        }
        if self.map.len() != pattern.n() as usize {
            return Err(Error::WitnessInvalid("map length != pattern order".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for &h in &self.map {
            if h >= host.n() || !seen.insert(h) {
                return Err(Error::WitnessInvalid("map not injective into host".into()));
            }
        }
        if self.ordered && self.map.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::WitnessInvalid("map is not order preserving".into()));
        }
        let mut ok = true;
        for_each_subset(pattern.n(), pattern.r(), |t| {
            let image: Vec<u32> = t.iter().map(|&p| self.map[p as usize]).collect();
            if pattern.contains_sorted(t) != host.contains(&image) {
                ok = false;
                return Ok(false);
            }
            Ok(true)
        })?;
        if !ok {
            return Err(Error::WitnessInvalid("edge/non-edge pattern mismatch".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn seeded_hypergraph(r: u32, n: u32, seed: u64) -> Hypergraph {
        let mut h = Hypergraph::empty(r, n).unwrap();
        let mut edges = Vec::new();
        for_each_subset(n, r, |e| {
            if crate::rng::hash_coin(seed, &[e[0] as u64, e[1] as u64, *e.last().unwrap() as u64, e.len() as u64]) & 1 == 0 {
                edges.push(e.to_vec());
            }
            Ok(true)
        })
        .unwrap();
        for e in edges {
            h.add_edge(&e).unwrap();
        }
        h
    }

    #[test]
    fn complement_of_single_edge() {
        let mut h = Hypergraph::empty(3, 4).unwrap();
        h.add_edge(&[0, 1, 2]).unwrap();
        let c = h.complement().unwrap();
        assert_eq!(
            c.sorted_edges()
                .iter()
                .map(|e| e.to_vec())
                .collect::<Vec<_>>(),
            vec![vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
    }

    #[test]
    fn complement_is_involution_and_counts_add_up() {
        for seed in 0..20u64 {
            let h = seeded_hypergraph(3, 8, seed);
            let c = h.complement().unwrap();
            assert_eq!(c.complement().unwrap(), h);
            assert_eq!(
                h.edge_count() + c.edge_count(),
                binomial(8, 3).unwrap() as u64
            );
        }
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let h = Hypergraph::complete(3, 5).unwrap();
        assert_eq!(h.complement().unwrap().edge_count(), 0);
    }

    #[test]
    fn induce_complete_stays_complete() {
        let h = Hypergraph::complete(3, 7).unwrap();
        let sub = h.induce(&[0, 2, 4, 6]).unwrap();
        assert_eq!(sub, Hypergraph::complete(3, 4).unwrap());
    }

    #[test]
    fn induce_below_uniformity_is_empty() {
        let h = Hypergraph::complete(3, 7).unwrap();
        let sub = h.induce(&[1, 5]).unwrap();
        assert_eq!(sub.edge_count(), 0);
        assert_eq!(sub.n(), 2);
    }

    #[test]
    fn induce_matches_enumeration() {
        let h = seeded_hypergraph(3, 8, 42);
        let w = [1u32, 3, 4, 6];
        let sub = h.induce(&w).unwrap();
        // oracle: direct enumeration of triples inside w
        let mut expected = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                for k in j + 1..4 {
                    if h.contains(&[w[i], w[j], w[k]]) {
                        expected.push(vec![i as u32, j as u32, k as u32]);
                    }
                }
            }
        }
        let got: Vec<Vec<u32>> = sub.sorted_edges().iter().map(|e| e.to_vec()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn induce_rejects_out_of_range() {
        let h = Hypergraph::complete(3, 5).unwrap();
        assert!(h.induce(&[0, 9]).is_err());
        assert!(h.induce(&[0, 0, 1]).is_err());
    }

    #[test]
    fn density_values() {
        assert_eq!(
            Hypergraph::complete(3, 5).unwrap().density().unwrap(),
            rat(1, 1)
        );
        assert_eq!(
            Hypergraph::empty(3, 5).unwrap().density().unwrap(),
            rat(0, 1)
        );
        let mut h = Hypergraph::empty(3, 5).unwrap();
        for e in [[0, 1, 2], [0, 1, 3], [0, 1, 4], [0, 2, 3], [0, 2, 4]] {
            h.add_edge(&e).unwrap();
        }
        assert_eq!(h.density().unwrap(), rat(1, 2));
        assert!(Hypergraph::empty(3, 2).unwrap().density().is_err());
    }

    #[test]
    fn clique_counts_on_extremes() {
        let h = Hypergraph::complete(3, 6).unwrap();
        assert_eq!(h.count_cliques(4, &Budget::default()).unwrap(), 15);
        let e = Hypergraph::empty(3, 6).unwrap();
        assert_eq!(e.count_cliques(4, &Budget::default()).unwrap(), 0);
        assert!(h.count_cliques(2, &Budget::default()).is_err());
    }

    #[test]
    fn clique_count_matches_subset_scan() {
        for seed in [7u64, 13, 99] {
            let h = seeded_hypergraph(3, 10, seed);
            let mut brute = 0u64;
            for_each_subset(10, 4, |s| {
                let mut all = true;
                for_each_subset_of_slice(s, 3, |t| {
                    if !h.contains_sorted(t) {
                        all = false;
                    }
                });
                if all {
                    brute += 1;
                }
                Ok(true)
            })
            .unwrap();
            assert_eq!(h.count_cliques(4, &Budget::default()).unwrap(), brute);
        }
    }

    // test-local helper kept separate from the library's subset walker
    fn for_each_subset_of_slice(pool: &[u32], k: usize, mut f: impl FnMut(&[u32])) {
        fn rec(pool: &[u32], k: usize, start: usize, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
            if cur.len() == k {
                f(cur);
                return;
            }
            for i in start..pool.len() {
                cur.push(pool[i]);
                rec(pool, k, i + 1, cur, f);
                cur.pop();
            }
        }
        rec(pool, k, 0, &mut Vec::new(), &mut f);
    }

    #[test]
    fn clique_count_general_uniformity() {
        let h = Hypergraph::complete(4, 7).unwrap();
        assert_eq!(
            h.count_cliques(5, &Budget::default()).unwrap(),
            binomial(7, 5).unwrap() as u64
        );
    }

    #[test]
    fn budget_is_enforced() {
        let h = Hypergraph::complete(3, 12).unwrap();
        assert!(matches!(
            h.count_cliques(6, &Budget::new(10)),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn first_clique_is_lexicographic() {
        let mut h = Hypergraph::complete(3, 5).unwrap();
        h.remove_edge(&[0, 1, 2]).unwrap();
        // {0,1,2,3} and {0,1,2,4} are ruled out; {0,1,3,4} is the least K4
        let c = h.first_clique(4, None, &Budget::default()).unwrap();
        assert_eq!(c, Some(vec![0, 1, 3, 4]));
    }

    #[test]
    fn edges_within_matches_induce() {
        let h = seeded_hypergraph(3, 12, 5);
        let w = [0u32, 2, 3, 5, 8, 11];
        let direct = h.edges_within_sorted(&w).unwrap();
        assert_eq!(direct, h.induce(&w).unwrap().edge_count());
    }
}
