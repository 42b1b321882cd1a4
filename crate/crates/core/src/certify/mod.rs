//! Certification engines and machine-readable reports.
//!
//! Every search returns a rich outcome (witness or certified absence plus
//! node counts); report constructors re-verify any witness by direct
//! definition before sealing it into a `CertReport`, and reports serialize
//! as canonical JSON (sorted keys, compact) so their bytes and content
//! hashes are stable.

mod homogeneous;
mod induced;
mod partite_search;
mod turan;
mod window;
mod witness;

pub use homogeneous::{
    find_eta_homogeneous, find_homogeneous, EtaHomogeneousOutcome, HomogeneousKind,
    HomogeneousOutcome, HomogeneousSearchMode,
};
pub use induced::{find_induced, find_induced_ordered, InducedOutcome};
pub use partite_search::{find_complete_partite, PartiteOutcome};
pub use turan::{turan_clique, TuranOutcome};
pub use window::{density_window_check, DensityWindowSpec, WindowOutcome};
pub use witness::{certify_witness, WitnessCheck};

use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Mode {
    Exact,
    Sampled { samples: u64, seed: u64 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Exact mode only: the full search space was exhausted.
    CertifiedAbsent,
    Witness,
    /// No witness found but absence is not certified (sampled or heuristic).
    Inconclusive,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "type")]
pub enum WitnessData {
    Embedding { map: Vec<u32>, ordered: bool },
    Parts { parts: Vec<Vec<u32>> },
    VertexSet { vertices: Vec<u32>, kind: Option<String> },
    Subset { vertices: Vec<u32>, edges: u64, density: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct CertReport {
    pub property: String,
    pub mode: Mode,
    pub verdict: Verdict,
    pub witness: Option<WitnessData>,
    pub nodes_explored: u64,
    pub budget_limit: u64,
    /// SHA-256 of each input in its canonical serialization (or raw file
    /// bytes when the caller works from files).
    pub input_hashes: BTreeMap<String, String>,
    pub params: BTreeMap<String, String>,
    pub detail: BTreeMap<String, serde_json::Value>,
}

impl CertReport {
    pub fn canonical_json(&self) -> String {
        canonical_json(self)
    }

    pub fn content_hash(&self) -> String {
        sha256_hex(self.canonical_json().as_bytes())
    }

    pub fn certified(&self) -> bool {
        self.verdict == Verdict::CertifiedAbsent
    }
}

/// Serialize any value with recursively sorted object keys and no
/// insignificant whitespace.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    // serde_json's Map is BTreeMap-backed, so converting through Value
    // sorts every object's keys.
    let v = serde_json::to_value(value).expect("serializable");
    serde_json::to_string(&v).expect("serializable")
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    hex::encode(h.finalize())
}

pub(crate) fn verify_witness_parts(
    h: &crate::hypergraph::Hypergraph,
    parts: &[Vec<u32>],
) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for p in parts {
        for &v in p {
            if v >= h.n() || !seen.insert(v) {
                return Err(Error::WitnessInvalid(
                    "partite witness not disjoint or out of range".into(),
                ));
            }
        }
    }
    let mut stack: Vec<u32> = Vec::with_capacity(parts.len());
    verify_transversal_rec(h, parts, 0, &mut stack)
}

fn verify_transversal_rec(
    h: &crate::hypergraph::Hypergraph,
    parts: &[Vec<u32>],
    depth: usize,
    stack: &mut Vec<u32>,
) -> Result<()> {
    if depth == parts.len() {
        let mut t = stack.clone();
        t.sort_unstable();
        if !h.contains_sorted(&t) {
            return Err(Error::WitnessInvalid(format!(
                "transversal tuple {t:?} is not an edge"
            )));
        }
        return Ok(());
    }
    for &v in &parts[depth] {
        stack.push(v);
        verify_transversal_rec(h, parts, depth + 1, stack)?;
        stack.pop();
    }
    Ok(())
}
