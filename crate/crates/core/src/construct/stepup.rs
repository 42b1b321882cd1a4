//! Step-up machinery: the red/blue tuple coloring driven by a pair labeling
//! and a lower-uniformity graph, the ordered gadget pattern, extendability,
//! and the blue-tuple extraction dichotomy.

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, OrderedHypergraph};
use crate::labeling::{EdgeLabeling, LabelingParams};
use crate::rational::{rat_floor, rat_int};
use crate::search::{for_each_subset, Budget};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StepupColor {
    Red,
    Blue,
}

/// Color of one strictly increasing r-tuple: red when the labels from its
/// first element to the others are pairwise distinct and form an edge of
/// the lower graph, blue otherwise.
pub fn stepup_color(
    tuple: &[u32],
    phi: &EdgeLabeling,
    lower: &Hypergraph,
) -> Result<StepupColor> {
    if tuple.len() < 2 {
        return Err(Error::input("tuple needs at least two vertices"));
    }
    if tuple.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::input("tuple must be strictly increasing"));
    }
    if *tuple.last().unwrap() >= phi.domain() {
        return Err(Error::input("tuple exceeds labeling domain"));
    }
    if lower.r() != tuple.len() as u32 - 1 {
        return Err(Error::input(format!(
            "lower graph has uniformity {}, tuple needs {}",
            lower.r(),
            tuple.len() - 1
        )));
    }
    if lower.n() != phi.colors() {
        return Err(Error::input(format!(
            "lower graph has {} vertices but labeling has {} colors",
            lower.n(),
            phi.colors()
        )));
    }
    let first = tuple[0];
    let mut labels: SmallVec<[u32; 6]> =
        tuple[1..].iter().map(|&a| phi.get(first, a)).collect();
    labels.sort_unstable();
    if labels.windows(2).any(|w| w[0] == w[1]) {
        return Ok(StepupColor::Blue);
    }
    if lower.contains_sorted(&labels) {
        Ok(StepupColor::Red)
    } else {
        Ok(StepupColor::Blue)
    }
}

/// The r-graph of all red tuples on `[n_big]`, `r = uniformity(lower) + 1`.
pub fn stepup_construction(
    lower: &Hypergraph,
    phi: &EdgeLabeling,
    n_big: u32,
) -> Result<Hypergraph> {
    if phi.domain() != n_big {
        return Err(Error::input(format!(
            "labeling domain {} does not match requested vertex count {n_big}",
            phi.domain()
        )));
    }
    if phi.colors() != lower.n() {
        return Err(Error::input(format!(
            "labeling has {} colors but lower graph has {} vertices",
            phi.colors(),
            lower.n()
        )));
    }
    let r = lower.r() + 1;
    let mut out = Hypergraph::empty(r, n_big)?;
    let mut reds = Vec::new();
    for_each_subset(n_big, r, |tuple| {
        if stepup_color(tuple, phi, lower)? == StepupColor::Red {
            reds.push(tuple.to_vec());
        }
        Ok(true)
    })?;
    for e in reds {
        out.add_edge(&e)?;
    }
    Ok(out)
}

/// Ordered gadget for a pattern `F` on `f` vertices with uniformity `r-1`:
/// an ordered r-graph on `f+1` vertices whose edges are vertex 0 joined to
/// each `F`-edge (shifted up by one) plus every r-subset avoiding vertex 0.
pub fn build_f_star(pattern: &OrderedHypergraph) -> Result<OrderedHypergraph> {
    let f = &pattern.base;
    let r = f.r() + 1;
    if f.n() < f.r() {
        return Err(Error::input("pattern has fewer vertices than its uniformity"));
    }
    let mut out = Hypergraph::empty(r, f.n() + 1)?;
    for e in f.sorted_edges() {
        let mut verts: Vec<u32> = vec![0];
        verts.extend(e.iter().map(|&v| v + 1));
        out.add_edge(&verts)?;
    }
    let mut tail = Vec::new();
    for_each_subset(f.n(), r, |s| {
        tail.push(s.iter().map(|&v| v + 1).collect::<Vec<u32>>());
        Ok(true)
    })?;
    for e in tail {
        out.add_edge(&e)?;
    }
    Ok(OrderedHypergraph::new(out))
}

#[derive(Clone, Debug)]
pub struct ExtendabilityReport {
    pub extendable: bool,
    /// First vertex pair covered by no edge, when coverage fails.
    pub uncovered_pair: Option<(u32, u32)>,
    /// A complete sub-hypergraph on r+1 vertices, when one exists.
    pub clique: Option<Vec<u32>>,
}

/// Extendable means: every vertex pair lies in some edge, and the graph
/// contains a complete sub-hypergraph on r+1 vertices.
pub fn is_extendable(h: &Hypergraph, budget: &Budget) -> Result<ExtendabilityReport> {
    let n = h.n();
    let mut covered = vec![false; (n as usize) * (n as usize)];
    for e in h.edges_iter() {
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                covered[e[i] as usize * n as usize + e[j] as usize] = true;
            }
        }
    }
    let mut uncovered_pair = None;
    'outer: for u in 0..n {
        for v in u + 1..n {
            if !covered[u as usize * n as usize + v as usize] {
                uncovered_pair = Some((u, v));
                break 'outer;
            }
        }
    }
    let clique = h.first_clique(h.r() + 1, None, budget)?;
    Ok(ExtendabilityReport {
        extendable: uncovered_pair.is_none() && clique.is_some(),
        uncovered_pair,
        clique,
    })
}

/// Add r+1 new vertices of full degree: every r-set touching a new vertex
/// becomes an edge. The original graph survives induced on `0..n`.
pub fn extend_to_extendable(h: &Hypergraph) -> Result<Hypergraph> {
    let r = h.r();
    let n = h.n();
    let n_new = n + r + 1;
    let mut out = Hypergraph::empty(r, n_new)?;
    for e in h.sorted_edges() {
        out.add_edge(&e)?;
    }
    let mut extra = Vec::new();
    for_each_subset(n_new, r, |s| {
        if s.iter().any(|&v| v >= n) {
            extra.push(s.to_vec());
        }
        Ok(true)
    })?;
    for e in extra {
        out.add_edge(&e)?;
    }
    Ok(out)
}

/// Outcome of running the extraction procedure on a complete r-partite
/// witness found in the complement of a step-up graph: either a complete
/// (r-1)-partite family of distinct labels inside the complement of the
/// lower graph, or a bad tuple for the labeling.
#[derive(Clone, Debug)]
pub enum BlueExtraction {
    LowerComplementPartite {
        /// The pivot vertex in the step-up graph.
        pivot: u32,
        /// Representative vertices per class, all with distinct labels.
        representatives: Vec<Vec<u32>>,
        /// The label classes forming a complete partite family in the
        /// complement of the lower graph.
        label_parts: Vec<Vec<u32>>,
    },
    BadTuple { parts: Vec<Vec<u32>> },
}

/// Run the extraction dichotomy on `witness_parts`, a complete r-partite
/// family of parts of size `t` found in the complement of
/// `stepup_construction(lower, phi, _)`. Returns a verified outcome: every
/// claimed structure is re-checked by direct definition before returning.
pub fn blue_tuple_extraction(
    witness_parts: &[Vec<u32>],
    gplus: &Hypergraph,
    phi: &EdgeLabeling,
    lower: &Hypergraph,
    params: &LabelingParams,
) -> Result<BlueExtraction> {
    let r = params.r as usize;
    let t = params.t;
    if witness_parts.len() != r {
        return Err(Error::input(format!(
            "witness has {} parts, parameters say r = {r}",
            witness_parts.len()
        )));
    }
    if witness_parts.iter().any(|p| p.len() != t as usize) {
        return Err(Error::input(format!("witness parts must have size t = {t}")));
    }
    let s = params.part_size() as usize;
    if s == 0 {
        return Err(Error::input("part size t/r is zero"));
    }

    // first t vertices of the union, in the natural order
    let mut union: Vec<(u32, usize)> = Vec::with_capacity(r * t as usize);
    for (ci, part) in witness_parts.iter().enumerate() {
        for &v in part {
            union.push((v, ci));
        }
    }
    union.sort_unstable();
    let prefix = &union[..t as usize];

    // pigeonhole: some class holds at least t/r of the prefix
    let mut per_class: Vec<Vec<u32>> = vec![Vec::new(); r];
    for &(v, ci) in prefix {
        per_class[ci].push(v);
    }
    let pivot_class = (0..r)
        .max_by_key(|&ci| (per_class[ci].len(), std::cmp::Reverse(ci)))
        .unwrap();
    if per_class[pivot_class].len() < s {
        return Err(Error::inequality(
            "pigeonhole-class",
            format!(
                "largest prefix class holds {} < {s} vertices",
                per_class[pivot_class].len()
            ),
        ));
    }
    let a1: Vec<u32> = per_class[pivot_class][..s].to_vec();
    let a1_max = *a1.last().unwrap();

    // later parts: first t/r vertices of each other class beyond the prefix
    let prefix_max = prefix.last().unwrap().0;
    let mut parts: Vec<Vec<u32>> = vec![a1.clone()];
    for (ci, part) in witness_parts.iter().enumerate() {
        if ci == pivot_class {
            continue;
        }
        let later: Vec<u32> = part
            .iter()
            .copied()
            .filter(|&v| v > prefix_max)
            .take(s)
            .collect();
        if later.len() < s {
            return Err(Error::inequality(
                "tail-class",
                format!("class {ci} has {} usable vertices, need {s}", later.len()),
            ));
        }
        debug_assert!(later.iter().all(|&v| v > a1_max));
        parts.push(later);
    }

    // dichotomy: either some pivot sees many colors in every part, or the
    // tuple itself is bad
    let starved = |a: u32, set: &[u32]| {
        let mut colors: Vec<u32> = set.iter().map(|&x| phi.get(a, x)).collect();
        colors.sort_unstable();
        colors.dedup();
        rat_int(colors.len() as i128) < params.theta
    };
    let pivot = parts[0]
        .iter()
        .copied()
        .find(|&a| parts[1..].iter().all(|set| !starved(a, set)));
    let pivot = match pivot {
        Some(p) => p,
        None => {
            let mut canonical = parts.clone();
            canonical[1..].sort_by_key(|p| p[0]);
            debug_assert!(canonical[0].iter().all(|&a| canonical[1..]
                .iter()
                .any(|set| starved(a, set))));
            return Ok(BlueExtraction::BadTuple { parts: canonical });
        }
    };

    // representatives: one vertex per fresh color, c0*t per class
    let reps_per_class = rat_floor(&(params.c0 * rat_int(t as i128))).max(0) as usize;
    if reps_per_class == 0 {
        return Err(Error::precondition(
            "c0*t rounds to zero representatives per class",
        ));
    }
    let mut chosen_colors: Vec<u32> = Vec::new();
    let mut representatives: Vec<Vec<u32>> = Vec::new();
    let mut label_parts: Vec<Vec<u32>> = Vec::new();
    for set in &parts[1..] {
        let mut reps = Vec::with_capacity(reps_per_class);
        let mut labels = Vec::with_capacity(reps_per_class);
        for &u in set.iter() {
            if reps.len() == reps_per_class {
                break;
            }
            let c = phi.get(pivot, u);
            if !chosen_colors.contains(&c) {
                chosen_colors.push(c);
                reps.push(u);
                labels.push(c);
            }
        }
        if reps.len() < reps_per_class {
            return Err(Error::inequality(
                "representative-shortfall",
                format!("found {} fresh colors, need {reps_per_class}", reps.len()),
            ));
        }
        representatives.push(reps);
        label_parts.push(labels);
    }

    // re-verify: blue transversal tuples and a complete partite family in
    // the complement of the lower graph
    let mut stack: Vec<u32> = Vec::with_capacity(r);
    verify_blue_rec(
        pivot,
        &representatives,
        0,
        &mut stack,
        gplus,
        phi,
        lower,
    )?;
    Ok(BlueExtraction::LowerComplementPartite {
        pivot,
        representatives,
        label_parts,
    })
}

fn verify_blue_rec(
    pivot: u32,
    reps: &[Vec<u32>],
    depth: usize,
    stack: &mut Vec<u32>,
    gplus: &Hypergraph,
    phi: &EdgeLabeling,
    lower: &Hypergraph,
) -> Result<()> {
    if depth == reps.len() {
        let mut tuple: Vec<u32> = vec![pivot];
        tuple.extend_from_slice(stack);
        tuple.sort_unstable();
        if gplus.contains_sorted(&tuple) {
            return Err(Error::WitnessInvalid(format!(
                "transversal tuple {tuple:?} is red"
            )));
        }
        let mut labels: Vec<u32> = stack.iter().map(|&u| phi.get(pivot, u)).collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::WitnessInvalid("representative labels collide".into()));
        }
        if lower.contains_sorted(&labels) {
            return Err(Error::WitnessInvalid(format!(
                "label set {labels:?} is an edge of the lower graph"
            )));
        }
        return Ok(());
    }
    for &u in &reps[depth] {
        stack.push(u);
        verify_blue_rec(pivot, reps, depth + 1, stack, gplus, phi, lower)?;
        stack.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::labeling::random_labeling;
    use crate::rational::binomial;

    #[test]
    fn color_rules() {
        let mut lower = Hypergraph::empty(2, 4).unwrap();
        lower.add_edge(&[0, 1]).unwrap();
        let mut phi = EdgeLabeling::constant(5, 4, 0).unwrap();
        phi.set(1, 2, 0);
        phi.set(1, 3, 1);
        // distinct labels {0,1} form the lower edge
        assert_eq!(
            stepup_color(&[1, 2, 3], &phi, &lower).unwrap(),
            StepupColor::Red
        );
        // repeated labels are always blue
        phi.set(1, 3, 0);
        assert_eq!(
            stepup_color(&[1, 2, 3], &phi, &lower).unwrap(),
            StepupColor::Blue
        );
        // empty lower graph colors everything blue
        let empty = Hypergraph::empty(2, 4).unwrap();
        phi.set(1, 3, 1);
        assert_eq!(
            stepup_color(&[1, 2, 3], &phi, &empty).unwrap(),
            StepupColor::Blue
        );
    }

    #[test]
    fn empty_lower_graph_gives_empty_output() {
        let lower = Hypergraph::empty(2, 6).unwrap();
        let phi = random_labeling(12, 6, 3).unwrap();
        let out = stepup_construction(&lower, &phi, 12).unwrap();
        assert_eq!(out.edge_count(), 0);
    }

    #[test]
    fn injective_labels_on_complete_lower_graph_give_complete_output() {
        // enough colors that labels at the first vertex cannot collide
        let n_big = 6u32;
        let colors = binomial(n_big as u64, 2).unwrap() as u32;
        let lower = Hypergraph::complete(2, colors).unwrap();
        let mut phi = EdgeLabeling::constant(n_big, colors, 0).unwrap();
        let mut c = 0;
        for a in 0..n_big {
            for b in a + 1..n_big {
                phi.set(a, b, c);
                c += 1;
            }
        }
        let out = stepup_construction(&lower, &phi, n_big).unwrap();
        assert_eq!(out.edge_count(), binomial(n_big as u64, 3).unwrap() as u64);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let lower = Hypergraph::empty(2, 6).unwrap();
        let phi = random_labeling(12, 5, 3).unwrap();
        assert!(stepup_construction(&lower, &phi, 12).is_err());
        assert!(stepup_construction(&lower, &phi, 11).is_err());
    }

    #[test]
    fn gadget_of_triangle_is_complete_on_four() {
        let triangle = Graph::complete(3).to_hypergraph();
        let star = build_f_star(&OrderedHypergraph::new(triangle)).unwrap();
        assert_eq!(star.base, Hypergraph::complete(3, 4).unwrap());
    }

    #[test]
    fn gadget_of_path() {
        // path 1-2, 2-3 on three vertices (0-based: edges {0,1},{1,2})
        let mut path = Hypergraph::empty(2, 3).unwrap();
        path.add_edge(&[0, 1]).unwrap();
        path.add_edge(&[1, 2]).unwrap();
        let star = build_f_star(&OrderedHypergraph::new(path)).unwrap();
        let got: Vec<Vec<u32>> = star.base.sorted_edges().iter().map(|e| e.to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1, 2], vec![0, 2, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn gadget_of_empty_pattern() {
        let empty = Hypergraph::empty(2, 3).unwrap();
        let star = build_f_star(&OrderedHypergraph::new(empty)).unwrap();
        let got: Vec<Vec<u32>> = star.base.sorted_edges().iter().map(|e| e.to_vec()).collect();
        assert_eq!(got, vec![vec![1, 2, 3]]);
    }

    #[test]
    fn extendability_examples() {
        let budget = Budget::default();
        // 2-uniform: triangles are extendable, paths are not
        let k3 = Graph::complete(3).to_hypergraph();
        assert!(is_extendable(&k3, &budget).unwrap().extendable);
        let mut path = Hypergraph::empty(2, 3).unwrap();
        path.add_edge(&[0, 1]).unwrap();
        path.add_edge(&[1, 2]).unwrap();
        let rep = is_extendable(&path, &budget).unwrap();
        assert!(!rep.extendable);
        assert_eq!(rep.uncovered_pair, Some((0, 2)));
        // complete 3-graph on 4 vertices is its own witness
        let k4 = Hypergraph::complete(3, 4).unwrap();
        let rep = is_extendable(&k4, &budget).unwrap();
        assert!(rep.extendable);
        assert_eq!(rep.clique, Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn closure_makes_extendable_and_preserves_original() {
        let budget = Budget::default();
        let h = Hypergraph::empty(3, 3).unwrap();
        let closed = extend_to_extendable(&h).unwrap();
        assert!(is_extendable(&closed, &budget).unwrap().extendable);
        // original graph induced on the old vertices
        let sub = closed.induce(&[0, 1, 2]).unwrap();
        assert_eq!(sub, h);
    }

    #[test]
    fn closure_edge_count_matches_enumeration() {
        // K4 (3-uniform) minus one edge, then closure over 4 new vertices
        let mut h = Hypergraph::complete(3, 4).unwrap();
        h.remove_edge(&[0, 1, 2]).unwrap();
        let closed = extend_to_extendable(&h).unwrap();
        assert_eq!(closed.n(), 8);
        // oracle: r-sets meeting the 4 new vertices, counted directly
        let mut touching = 0u64;
        for_each_subset(8, 3, |s| {
            if s.iter().any(|&v| v >= 4) {
                touching += 1;
            }
            Ok(true)
        })
        .unwrap();
        assert_eq!(
            touching,
            (binomial(8, 3).unwrap() - binomial(4, 3).unwrap()) as u64
        );
        assert_eq!(closed.edge_count(), 3 + touching);
    }
}
