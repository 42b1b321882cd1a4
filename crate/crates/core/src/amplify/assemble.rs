//! Final assembly check: the union of equal-size parts spans a near-complete
//! 3-graph when the transversal densities are high and the class count is
//! large enough that few triples stay inside one or two parts.

use std::collections::HashMap;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rational::{binomial, format_rat, rat, rat_int, Rat};

#[derive(Clone, Debug)]
pub struct AssembleReport {
    pub passed: bool,
    /// Induced density of the union.
    pub density: Rat,
    pub threshold: Rat,
    /// Count of 3-subsets of the union not meeting three distinct parts,
    /// with the bound eta/2 * binom(|W|, 3) it is measured against.
    pub non_transversal_tuples: u128,
    pub non_transversal_bound_ok: bool,
    /// Transversal edge density per triple of parts, each measured against
    /// 1 - eta/2.
    pub part_triple_densities: Vec<((usize, usize, usize), Rat)>,
    pub part_triples_ok: bool,
    /// Set when the class count is below 10/eta.
    pub class_count_warning: Option<String>,
}

pub fn assemble_near_complete(
    h3: &Hypergraph,
    parts: &[Vec<u32>],
    eta: &Rat,
) -> Result<AssembleReport> {
    if h3.r() != 3 {
        return Err(Error::input("assembly check expects a 3-graph"));
    }
    let k = parts.len();
    if k < 3 {
        return Err(Error::input("need at least three parts"));
    }
    let part_size = parts[0].len();
    if parts.iter().any(|p| p.len() != part_size) || part_size == 0 {
        return Err(Error::input("parts must be nonempty and of equal size"));
    }
    if !eta.is_positive() {
        return Err(Error::input("eta must be positive"));
    }
    let mut seen = HashMap::new();
    for (ci, p) in parts.iter().enumerate() {
        for &v in p {
            if v >= h3.n() || seen.insert(v, ci).is_some() {
                return Err(Error::input("parts must be disjoint and in range"));
            }
        }
    }

    let class_count_warning = if rat_int(k as i128) * eta < rat_int(10) {
        Some(format!(
            "class count {k} is below 10/eta = {}",
            format_rat(&(rat_int(10) / eta))
        ))
    } else {
        None
    };

    let mut union: Vec<u32> = parts.iter().flatten().copied().collect();
    union.sort_unstable();
    let w = union.len() as u64;
    let edges = h3.edges_within_sorted(&union)?;
    let total = binomial(w, 3)?;
    let density = Rat::new(edges as i128, total as i128);
    let threshold = rat_int(1) - eta;
    let passed = density >= threshold;

    // observation 1: triples not meeting three distinct parts
    let s = part_size as u128;
    let within_two = (k as u128) * binomial(s as u64, 3)?
        + (k as u128) * (k as u128 - 1) * binomial(s as u64, 2)? * s;
    let half_eta = eta / rat_int(2);
    let non_transversal_bound_ok =
        crate::rational::count_le(within_two, &half_eta, total)?;

    // observation 2: per part-triple transversal densities
    let mut part_triple_densities = Vec::new();
    let mut part_triples_ok = true;
    let lower = rat_int(1) - half_eta.clone();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let mut count: u64 = 0;
                for &x in &parts[a] {
                    for &y in &parts[b] {
                        for &z in &parts[c] {
                            if h3.contains(&[x, y, z]) {
                                count += 1;
                            }
                        }
                    }
                }
                let slots = (s * s * s) as i128;
                let d = Rat::new(count as i128, slots);
                if d < lower {
                    part_triples_ok = false;
                }
                part_triple_densities.push(((a, b, c), d));
            }
        }
    }

    Ok(AssembleReport {
        passed,
        density,
        threshold,
        non_transversal_tuples: within_two,
        non_transversal_bound_ok,
        part_triple_densities,
        part_triples_ok,
        class_count_warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blocks(k: usize, s: u32) -> Vec<Vec<u32>> {
        (0..k)
            .map(|c| (c as u32 * s..(c as u32 + 1) * s).collect())
            .collect()
    }

    #[test]
    fn complete_graph_passes_any_eta() {
        let h = Hypergraph::complete(3, 12).unwrap();
        let rep = assemble_near_complete(&h, &blocks(4, 3), &rat(1, 10)).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.density, rat_int(1));
        assert!(rep.class_count_warning.is_some());
    }

    #[test]
    fn empty_graph_fails() {
        let h = Hypergraph::empty(3, 12).unwrap();
        let rep = assemble_near_complete(&h, &blocks(4, 3), &rat(9, 10)).unwrap();
        assert!(!rep.passed);
        assert_eq!(rep.density, rat_int(0));
    }

    #[test]
    fn singleton_parts_have_no_internal_tuples() {
        let h = Hypergraph::complete(3, 10).unwrap();
        let rep = assemble_near_complete(&h, &blocks(10, 1), &rat_int(1)).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.non_transversal_tuples, 0);
        assert!(rep.non_transversal_bound_ok);
        assert!(rep.part_triples_ok);
        assert!(rep.class_count_warning.is_none());
    }
}
