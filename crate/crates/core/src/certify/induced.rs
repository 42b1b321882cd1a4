//! Induced copy search: an injective map sending pattern edges to host
//! edges and pattern non-edges (within the image) to host non-edges.
//!
//! Backtracks over pattern vertices in descending-degree order (plain mode)
//! or in vertex order (order-preserving mode). Degree bounds filter
//! candidates, and for 3-graphs each extension intersects pair-link bitsets
//! of the already-mapped vertices so both edge and non-edge constraints
//! prune.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::hypergraph::{Embedding, Hypergraph, OrderedHypergraph};
use crate::rational::binomial;
use crate::search::{for_each_subset_of, Budget, Tracker};

#[derive(Clone, Debug)]
pub struct InducedOutcome {
    pub embedding: Option<Embedding>,
    pub nodes: u64,
    /// True when the search space was exhausted (absence is certified).
    pub complete: bool,
}

pub fn find_induced(host: &Hypergraph, pattern: &Hypergraph, budget: &Budget) -> Result<InducedOutcome> {
    search(host, pattern, false, budget)
}

pub fn find_induced_ordered(
    host: &OrderedHypergraph,
    pattern: &OrderedHypergraph,
    budget: &Budget,
) -> Result<InducedOutcome> {
    search(&host.base, &pattern.base, true, budget)
}

struct SearchCtx<'a> {
    host: &'a Hypergraph,
    pattern: &'a Hypergraph,
    ordered: bool,
    /// pattern vertices in processing order
    order: Vec<u32>,
    /// degree filters
    host_deg: Vec<u64>,
    host_codeg: Vec<u64>,
    pat_deg: Vec<u64>,
    pat_codeg: Vec<u64>,
    /// host vertices already used
    used: BitSet,
    /// images indexed by pattern vertex (u32::MAX when unmapped)
    image: Vec<u32>,
    tracker: Tracker,
}

fn search(
    host: &Hypergraph,
    pattern: &Hypergraph,
    ordered: bool,
    budget: &Budget,
) -> Result<InducedOutcome> {
    if host.r() != pattern.r() {
        return Err(Error::input(format!(
            "uniformity mismatch: host {} vs pattern {}",
            host.r(),
            pattern.r()
        )));
    }
    let f = pattern.n();
    if f == 0 {
        return Ok(InducedOutcome {
            embedding: Some(Embedding { map: vec![], ordered }),
            nodes: 0,
            complete: true,
        });
    }
    if f > host.n() {
        return Ok(InducedOutcome {
            embedding: None,
            nodes: 0,
            complete: true,
        });
    }

    let pat_deg = pattern.degrees();
    let host_deg = host.degrees();
    // complement degrees: non-edges must embed as non-edges
    let pat_slots = per_vertex_slots(pattern.n(), pattern.r())?;
    let host_slots = per_vertex_slots(host.n(), host.r())?;
    let pat_codeg: Vec<u64> = pat_deg.iter().map(|&d| pat_slots - d).collect();
    let host_codeg: Vec<u64> = host_deg.iter().map(|&d| host_slots - d).collect();

    let mut order: Vec<u32> = (0..f).collect();
    if !ordered {
        order.sort_by_key(|&v| (std::cmp::Reverse(pat_deg[v as usize]), v));
    }

    let mut ctx = SearchCtx {
        host,
        pattern,
        ordered,
        order,
        host_deg,
        host_codeg,
        pat_deg,
        pat_codeg,
        used: BitSet::new(host.n() as usize),
        image: vec![u32::MAX; f as usize],
        tracker: budget.tracker(),
    };
    let found = extend(&mut ctx, 0)?;
    let nodes = ctx.tracker.used();
    if found {
        let emb = Embedding {
            map: ctx.image.clone(),
            ordered,
        };
        emb.verify_induced(pattern, host)?;
        Ok(InducedOutcome {
            embedding: Some(emb),
            nodes,
            complete: true,
        })
    } else {
        Ok(InducedOutcome {
            embedding: None,
            nodes,
            complete: true,
        })
    }
}

/// Edge slots per vertex: binom(n-1, r-1), the degree of a vertex in the
/// complete r-graph.
fn per_vertex_slots(n: u32, r: u32) -> Result<u64> {
    if n == 0 {
        return Ok(0);
    }
    let b = binomial((n - 1) as u64, (r - 1) as u64)?;
    u64::try_from(b).map_err(|_| Error::Overflow("degree slots".into()))
}

fn extend(ctx: &mut SearchCtx, depth: usize) -> Result<bool> {
    if depth == ctx.order.len() {
        return Ok(true);
    }
    let p = ctx.order[depth];

    // candidate bitset for 3-graphs: intersect link or complement-link of
    // every mapped pair, depending on whether the pattern triple is an edge
    let cand3 = if ctx.host.r() == 3 && depth >= 2 {
        let links = ctx.host.pair_links();
        let mut cand = BitSet::full(ctx.host.n() as usize);
        for i in 0..depth {
            for j in i + 1..depth {
                let (pa, pb) = (ctx.order[i], ctx.order[j]);
                let (ha, hb) = (ctx.image[pa as usize], ctx.image[pb as usize]);
                let link = links.link(ha, hb);
                if ctx.pattern.contains(&[pa, pb, p]) {
                    cand.intersect_with(link);
                } else {
                    let mut anti = link.clone();
                    anti.invert();
                    cand.intersect_with(&anti);
                }
            }
        }
        Some(cand)
    } else {
        None
    };

    let lower = if ctx.ordered && p > 0 {
        ctx.image[p as usize - 1] + 1
    } else {
        0
    };
    // room for the remaining pattern vertices in ordered mode
    let upper = if ctx.ordered {
        ctx.host.n() - (ctx.pattern.n() - 1 - p)
    } else {
        ctx.host.n()
    };

    // walk only live candidates; ticking per scanned host vertex would
    // dwarf the real work on dense instances
    let candidates: Vec<u32> = match &cand3 {
        Some(c) => c
            .iter_ones()
            .map(|h| h as u32)
            .filter(|&h| h >= lower && h < upper)
            .collect(),
        None => (lower..upper).collect(),
    };
    let mapped: Vec<u32> = if cand3.is_none() {
        ctx.order[..depth].to_vec()
    } else {
        Vec::new()
    };

    for h in candidates {
        ctx.tracker.tick()?;
        if ctx.used.test(h as usize) {
            continue;
        }
        if ctx.host_deg[h as usize] < ctx.pat_deg[p as usize]
            || ctx.host_codeg[h as usize] < ctx.pat_codeg[p as usize]
        {
            continue;
        }
        if cand3.is_none() && !consistent(ctx, &mapped, p, h)? {
            continue;
        }
        ctx.image[p as usize] = h;
        ctx.used.set(h as usize);
        if extend(ctx, depth + 1)? {
            return Ok(true);
        }
        ctx.used.unset(h as usize);
        ctx.image[p as usize] = u32::MAX;
    }
    Ok(false)
}

/// Direct constraint check for uniformities other than 3: every r-subset of
/// the mapped prefix plus the new vertex must match edge-for-edge.
fn consistent(ctx: &SearchCtx, mapped: &[u32], p: u32, h: u32) -> Result<bool> {
    let need = ctx.pattern.r() as usize - 1;
    if mapped.len() < need {
        return Ok(true);
    }
    let mut ok = true;
    for_each_subset_of(mapped, need, |sub| {
        let mut pat: Vec<u32> = sub.to_vec();
        pat.push(p);
        let mut img: Vec<u32> = sub.iter().map(|&q| ctx.image[q as usize]).collect();
        img.push(h);
        if ctx.pattern.contains(&pat) != ctx.host.contains(&img) {
            ok = false;
            return Ok(false);
        }
        Ok(true)
    })?;
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;

    #[test]
    fn single_vertex_pattern_found_anywhere() {
        let host = Hypergraph::complete(3, 5).unwrap();
        let pattern = Hypergraph::empty(3, 1).unwrap();
        let out = find_induced(&host, &pattern, &Budget::default()).unwrap();
        assert!(out.embedding.is_some());
    }

    #[test]
    fn complete_pattern_in_complete_host() {
        let host = Hypergraph::complete(3, 5).unwrap();
        let pattern = Hypergraph::complete(3, 4).unwrap();
        let out = find_induced(&host, &pattern, &Budget::default()).unwrap();
        assert!(out.embedding.is_some());
    }

    #[test]
    fn planted_pattern_is_found_and_verifies() {
        // plant a 5-vertex pattern into a 12-vertex host as an induced copy
        let pattern = crate::gen::random_hypergraph(3, 5, 0.5, 21).unwrap();
        let slots: Vec<u32> = vec![2, 4, 7, 9, 11];
        let mut host = crate::gen::random_hypergraph(3, 12, 0.5, 22).unwrap();
        // overwrite the induced sub-hypergraph on the slots
        for a in 0..5u32 {
            for b in a + 1..5 {
                for c in b + 1..5 {
                    let img = [slots[a as usize], slots[b as usize], slots[c as usize]];
                    if pattern.contains(&[a, b, c]) {
                        host.add_edge(&img).unwrap();
                    } else {
                        host.remove_edge(&img).unwrap();
                    }
                }
            }
        }
        let out = find_induced(&host, &pattern, &Budget::default()).unwrap();
        let emb = out.embedding.expect("planted copy must be found");
        emb.verify_induced(&pattern, &host).unwrap();
    }

    #[test]
    fn order_preservation_is_enforced() {
        // pattern on 3 vertices with edge {0,1,2} and a marker edge layout
        // asymmetric under reversal: host holds only a reversed copy
        let mut pattern = Hypergraph::empty(3, 4).unwrap();
        pattern.add_edge(&[0, 1, 2]).unwrap();
        pattern.add_edge(&[0, 1, 3]).unwrap();

        // host: plant the pattern with images reversed (3->0, 2->1, ...)
        let mut host = Hypergraph::empty(3, 4).unwrap();
        host.add_edge(&[1, 2, 3]).unwrap();
        host.add_edge(&[0, 2, 3]).unwrap();

        let unordered = find_induced(&host, &pattern, &Budget::default()).unwrap();
        assert!(unordered.embedding.is_some());
        let ordered = find_induced_ordered(
            &OrderedHypergraph::new(host),
            &OrderedHypergraph::new(pattern),
            &Budget::default(),
        )
        .unwrap();
        assert!(ordered.embedding.is_none());
        assert!(ordered.complete);
    }

    #[test]
    fn identity_embedding_on_equal_ordered_graphs() {
        let h = crate::gen::random_hypergraph(3, 7, 0.4, 9).unwrap();
        let o = OrderedHypergraph::new(h);
        let out = find_induced_ordered(&o, &o, &Budget::default()).unwrap();
        assert_eq!(
            out.embedding.unwrap().map,
            (0..7).collect::<Vec<u32>>()
        );
    }

    #[test]
    fn uniformity_mismatch_is_an_error() {
        let host = Hypergraph::complete(3, 5).unwrap();
        let pattern = Hypergraph::complete(2, 3).unwrap();
        assert!(find_induced(&host, &pattern, &Budget::default()).is_err());
    }
}
