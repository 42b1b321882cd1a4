//! The witness predicate: a host is a valid lower-bound witness for pattern
//! `F` at part size `t` when it is induced-F-free and neither it nor its
//! complement contains a complete r-partite family with parts of size `t`.

use std::collections::BTreeMap;

use super::{
    find_complete_partite, find_induced, CertReport, Mode, Verdict, WitnessData,
};
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::io;
use crate::search::Budget;

#[derive(Clone, Debug)]
pub struct WitnessCheck {
    pub induced: CertReport,
    pub partite: CertReport,
    pub partite_complement: CertReport,
    /// Certified-absent only when all three sub-checks certify.
    pub verdict: Verdict,
}

pub fn hash_hypergraph(h: &Hypergraph) -> String {
    super::sha256_hex(io::serialize_hypergraph(h, &[]).as_bytes())
}

pub(crate) fn base_inputs(pairs: &[(&str, &Hypergraph)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(name, h)| (name.to_string(), hash_hypergraph(h)))
        .collect()
}

pub fn certify_witness(
    host: &Hypergraph,
    pattern: &Hypergraph,
    t: u32,
    budget: &Budget,
) -> Result<WitnessCheck> {
    let inputs = base_inputs(&[("host", host), ("pattern", pattern)]);

    let ind = find_induced(host, pattern, budget)?;
    let induced = CertReport {
        property: "induced-free".into(),
        mode: Mode::Exact,
        verdict: if ind.embedding.is_some() {
            Verdict::Witness
        } else if ind.complete {
            Verdict::CertifiedAbsent
        } else {
            Verdict::Inconclusive
        },
        witness: ind.embedding.as_ref().map(|e| WitnessData::Embedding {
            map: e.map.clone(),
            ordered: e.ordered,
        }),
        nodes_explored: ind.nodes,
        budget_limit: budget.limit,
        input_hashes: inputs.clone(),
        params: BTreeMap::new(),
        detail: BTreeMap::new(),
    };

    let part = find_complete_partite(host, t, budget)?;
    let partite = partite_report("partite-free", &inputs, t, &part, budget);

    let comp = host.complement()?;
    let part_c = find_complete_partite(&comp, t, budget)?;
    let partite_complement = partite_report("partite-free-complement", &inputs, t, &part_c, budget);

    let all_certified = induced.certified() && partite.certified() && partite_complement.certified();
    let any_witness = [&induced, &partite, &partite_complement]
        .iter()
        .any(|r| r.verdict == Verdict::Witness);
    let verdict = if all_certified {
        Verdict::CertifiedAbsent
    } else if any_witness {
        Verdict::Witness
    } else {
        Verdict::Inconclusive
    };
    Ok(WitnessCheck {
        induced,
        partite,
        partite_complement,
        verdict,
    })
}

fn partite_report(
    property: &str,
    inputs: &BTreeMap<String, String>,
    t: u32,
    outcome: &super::PartiteOutcome,
    budget: &Budget,
) -> CertReport {
    let mut params = BTreeMap::new();
    params.insert("t".to_string(), t.to_string());
    CertReport {
        property: property.into(),
        mode: Mode::Exact,
        verdict: if outcome.parts.is_some() {
            Verdict::Witness
        } else if outcome.complete {
            Verdict::CertifiedAbsent
        } else {
            Verdict::Inconclusive
        },
        witness: outcome
            .parts
            .as_ref()
            .map(|p| WitnessData::Parts { parts: p.clone() }),
        nodes_explored: outcome.nodes,
        budget_limit: budget.limit,
        input_hashes: inputs.clone(),
        params,
        detail: BTreeMap::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_host_fails_via_complement() {
        let host = Hypergraph::empty(3, 6).unwrap();
        let mut pattern = Hypergraph::empty(3, 3).unwrap();
        pattern.add_edge(&[0, 1, 2]).unwrap();
        let check = certify_witness(&host, &pattern, 2, &Budget::default()).unwrap();
        assert_eq!(check.verdict, Verdict::Witness);
        assert!(check.partite_complement.verdict == Verdict::Witness);
        assert!(check.induced.certified());
    }

    #[test]
    fn planted_pattern_defeats_the_predicate() {
        let mut host = Hypergraph::empty(3, 8).unwrap();
        host.add_edge(&[0, 1, 2]).unwrap();
        let mut pattern = Hypergraph::empty(3, 3).unwrap();
        pattern.add_edge(&[0, 1, 2]).unwrap();
        let check = certify_witness(&host, &pattern, 2, &Budget::default()).unwrap();
        assert_eq!(check.induced.verdict, Verdict::Witness);
    }

    #[test]
    fn reports_serialize_canonically() {
        let host = Hypergraph::empty(3, 6).unwrap();
        let pattern = Hypergraph::complete(3, 4).unwrap();
        let a = certify_witness(&host, &pattern, 2, &Budget::default()).unwrap();
        let b = certify_witness(&host, &pattern, 2, &Budget::default()).unwrap();
        assert_eq!(a.induced.canonical_json(), b.induced.canonical_json());
        assert_eq!(a.partite.content_hash(), b.partite.content_hash());
    }
}
