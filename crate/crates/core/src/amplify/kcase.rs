//! Repeated refinement over every class pair, then equal-size selection and
//! the final product lower bound on transversal hypercliques.

use serde::Serialize;

use crate::amplify::eqsize::{eqsize_step_inner, InequalityRecord};
use crate::error::{Error, Result};
use crate::partite::{CliqueTarget, PartiteSystem};
use crate::rational::{count_ge, format_rat, rat_int, Rat};
use crate::search::Budget;

#[derive(Clone, Debug, Serialize)]
pub struct TraceHeader {
    pub k: usize,
    pub class_sizes: Vec<usize>,
    pub eps: String,
    pub eta: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepRecord {
    pub i: usize,
    pub j: usize,
    pub gamma: f64,
    pub chosen_a: Vec<u32>,
    pub s_i: Vec<u32>,
    pub s_j: Vec<u32>,
    pub eps_before: String,
    pub eta_before: String,
    pub eps_after: String,
    pub eta_after: String,
    pub checks: Vec<InequalityRecord>,
    pub graph_cliques_after: u64,
    pub hyper_cliques_after: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Eq3Record {
    pub clique_count: u64,
    pub coefficient: String,
    pub part_size_product: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineTrace {
    pub header: TraceHeader,
    pub steps: Vec<StepRecord>,
    pub final_sets: Vec<Vec<u32>>,
    pub eq3: Eq3Record,
}

impl PipelineTrace {
    /// One JSON object per line: header, each step, then the summary.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        out.push_str(&crate::certify::canonical_json(&serde_json::json!({
            "record": "header",
            "data": &self.header,
        })));
        out.push('\n');
        for s in &self.steps {
            out.push_str(&crate::certify::canonical_json(&serde_json::json!({
                "record": "step",
                "data": s,
            })));
            out.push('\n');
        }
        out.push_str(&crate::certify::canonical_json(&serde_json::json!({
            "record": "final",
            "final_sets": &self.final_sets,
            "eq3": &self.eq3,
        })));
        out.push('\n');
        out
    }
}

#[derive(Clone, Debug)]
pub struct KcaseOutcome {
    pub parts: Vec<Vec<u32>>,
    pub refined: PartiteSystem,
    pub trace: PipelineTrace,
}

/// Run the refinement over all class pairs in row order (i ascending, j
/// ascending past i), equalize the surviving classes to the minimum size by
/// keeping least vertices, and verify the final product bound by direct
/// count.
pub fn kcase_pipeline(
    sys: &PartiteSystem,
    eps: &Rat,
    eta: &Rat,
    budget: &Budget,
) -> Result<KcaseOutcome> {
    let k = sys.k();
    let sizes: Vec<usize> = sys.classes().iter().map(|c| c.len()).collect();
    if sizes.iter().any(|&s| s != sizes[0]) {
        return Err(Error::input(format!(
            "pipeline needs equal class sizes, got {sizes:?}"
        )));
    }
    let pre = sys.is_dense(eps, eta, budget)?;
    if !pre.dense {
        return Err(Error::precondition(format!(
            "input system is not ({}, {})-dense: failed {:?}",
            format_rat(eps),
            format_rat(eta),
            pre.failed
        )));
    }

    let header = TraceHeader {
        k,
        class_sizes: sizes,
        eps: format_rat(eps),
        eta: format_rat(eta),
    };
    let mut cur = sys.clone();
    let mut cur_eps = eps.clone();
    let mut cur_eta = eta.clone();
    let mut steps = Vec::with_capacity(k * (k - 1) / 2);
    for i in 0..k - 1 {
        for j in i + 1..k {
            let m = cur.classes()[j].len();
            if m < 2 {
                return Err(Error::precondition(format!(
                    "class {j} shrank to {m} vertices before step ({i},{j})"
                )));
            }
            let gamma = (cur.classes()[i].len() as f64 / (m as f64).ln()).min(0.5);
            let out = eqsize_step_inner(&cur, i, j, &cur_eps, &cur_eta, gamma, budget, false)
                .map_err(|e| annotate(e, i, j))?;
            steps.push(StepRecord {
                i,
                j,
                gamma,
                chosen_a: out.log.a_vertices.clone(),
                s_i: out.s_i.clone(),
                s_j: out.s_j.clone(),
                eps_before: format_rat(&cur_eps),
                eta_before: format_rat(&cur_eta),
                eps_after: format_rat(&out.eps_after),
                eta_after: format_rat(&out.eta_after),
                checks: out.log.checks.clone(),
                graph_cliques_after: out.log.recount.clique_count_graph,
                hyper_cliques_after: out.log.recount.clique_count_hyper,
            });
            cur = out.refined;
            cur_eps = out.eps_after;
            cur_eta = out.eta_after;
        }
    }

    // equalize by keeping the least vertices of every class
    let w_size = cur.classes().iter().map(|c| c.len()).min().unwrap();
    let parts: Vec<Vec<u32>> = cur
        .classes()
        .iter()
        .map(|c| c[..w_size].to_vec())
        .collect();
    let selected = cur.with_all_classes(&parts)?;

    // the selection must be complete k-partite in the 2-graph
    for a in 0..k {
        for b in a + 1..k {
            for &u in &parts[a] {
                for &v in &parts[b] {
                    if !selected.g_has(u, v) {
                        return Err(Error::inequality(
                            "final-completeness",
                            format!("pair ({u},{v}) missing from the refined graph"),
                        ));
                    }
                }
            }
        }
    }

    let clique_count = selected.count_transversal(CliqueTarget::Hyper, budget)?;
    let exponent = (k * (k - 1) / 2) as u32;
    let two_pow = rat_int(2)
        .pow(exponent as i32);
    let coefficient = rat_int(1) - two_pow * eta;
    let product = selected.class_size_product()?;
    let holds = count_ge(clique_count as u128, &coefficient, product)?;
    let eq3 = Eq3Record {
        clique_count,
        coefficient: format_rat(&coefficient),
        part_size_product: product.to_string(),
        holds,
    };
    if !holds {
        return Err(Error::inequality(
            "final-clique-bound",
            format!(
                "{} hypercliques, need ({}) * {}",
                clique_count,
                format_rat(&coefficient),
                product
            ),
        ));
    }

    Ok(KcaseOutcome {
        parts: parts.clone(),
        refined: selected,
        trace: PipelineTrace {
            header,
            steps,
            final_sets: parts,
            eq3,
        },
    })
}

fn annotate(e: Error, i: usize, j: usize) -> Error {
    match e {
        Error::Inequality { name, detail } => Error::Inequality {
            name,
            detail: format!("step ({i},{j}): {detail}"),
        },
        Error::Precondition(msg) => Error::Precondition(format!("step ({i},{j}): {msg}")),
        other => other,
    }
}
