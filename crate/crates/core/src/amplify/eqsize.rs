//! Good/bad edge classification and the single refinement step: pick a
//! high-degree left set, extract a complete bipartite pair from the heavy
//! good edges, and re-certify the refined system at (eps/4, 2*eta).
//!
//! Every inequality the derivation relies on is validated numerically on
//! the rounded integer quantities and fails loudly by name.

use crate::amplify::kst::{kst_extract, Bipartite};
use crate::error::{Error, Result};
use crate::partite::{CliqueTarget, DensityReport, PartiteSystem};
use crate::rational::{count_ge, format_rat, rat, rat_int, Rat};
use crate::search::Budget;

#[derive(Clone, Debug)]
pub struct EdgeStat {
    pub u: u32,
    pub v: u32,
    pub graph_cliques: u64,
    pub hyper_cliques: u64,
    pub good: bool,
}

#[derive(Clone, Debug)]
pub struct EdgeClassification {
    pub stats: Vec<EdgeStat>,
    pub good_count: usize,
    pub bad_count: usize,
    /// Sums of per-edge graph clique counts over good and bad edges.
    pub good_mass: u128,
    pub bad_mass: u128,
    pub clique_count_graph: u64,
}

impl EdgeClassification {
    /// Bad edges can carry at most half of the clique mass whenever the
    /// input system is dense; callers who have attested density should
    /// check this.
    pub fn check_bad_mass(&self) -> Result<()> {
        if self.bad_mass * 2 > self.clique_count_graph as u128 {
            return Err(Error::inequality(
                "bad-mass",
                format!(
                    "bad edges carry {} of {} cliques",
                    self.bad_mass, self.clique_count_graph
                ),
            ));
        }
        Ok(())
    }
}

/// Classify the edges between classes `i` and `j`: an edge is good when the
/// hypercliques through it reach a (1 - 2*eta) fraction of the 2-graph
/// cliques through it.
pub fn classify_edges(
    sys: &PartiteSystem,
    i: usize,
    j: usize,
    eta: &Rat,
    budget: &Budget,
) -> Result<EdgeClassification> {
    let k = sys.k();
    if i >= k || j >= k || i == j {
        return Err(Error::input(format!("bad class pair ({i},{j}) for k={k}")));
    }
    let coeff = rat_int(1) - rat_int(2) * eta;
    let mut stats = Vec::new();
    let mut good_mass: u128 = 0;
    let mut bad_mass: u128 = 0;
    for &u in &sys.classes()[i] {
        for &v in &sys.classes()[j] {
            if !sys.g_has(u, v) {
                continue;
            }
            let graph_cliques = sys.count_through_edge(u, v, CliqueTarget::Graph, budget)?;
            let hyper_cliques =
                sys.count_through_edge(u, v, CliqueTarget::HyperWithGraph, budget)?;
            let good = count_ge(hyper_cliques as u128, &coeff, graph_cliques as u128)?;
            if good {
                good_mass += graph_cliques as u128;
            } else {
                bad_mass += graph_cliques as u128;
            }
            stats.push(EdgeStat {
                u,
                v,
                graph_cliques,
                hyper_cliques,
                good,
            });
        }
    }
    let clique_count_graph = sys.count_transversal(CliqueTarget::Graph, budget)?;
    // each transversal clique uses exactly one (i,j) edge
    if good_mass + bad_mass != clique_count_graph as u128 {
        return Err(Error::inequality(
            "edge-mass-partition",
            format!(
                "per-edge masses {} + {} do not add to {}",
                good_mass, bad_mass, clique_count_graph
            ),
        ));
    }
    let good_count = stats.iter().filter(|s| s.good).count();
    Ok(EdgeClassification {
        bad_count: stats.len() - good_count,
        good_count,
        stats,
        good_mass,
        bad_mass,
        clique_count_graph,
    })
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct InequalityRecord {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug)]
pub struct EqsizeOutcome {
    pub s_i: Vec<u32>,
    pub s_j: Vec<u32>,
    pub refined: PartiteSystem,
    pub eps_after: Rat,
    pub eta_after: Rat,
    pub log: EqsizeLog,
}

#[derive(Clone, Debug)]
pub struct EqsizeLog {
    pub i: usize,
    pub j: usize,
    pub gamma: f64,
    pub m: usize,
    pub a_vertices: Vec<u32>,
    pub s_i_target: usize,
    pub good_edges: usize,
    pub bad_edges: usize,
    pub heavy_edges: usize,
    pub kst_top_bucket: u64,
    pub checks: Vec<InequalityRecord>,
    pub recount: DensityReport,
}

pub fn eqsize_step(
    sys: &PartiteSystem,
    i: usize,
    j: usize,
    eps: &Rat,
    eta: &Rat,
    gamma: f64,
    budget: &Budget,
) -> Result<EqsizeOutcome> {
    eqsize_step_inner(sys, i, j, eps, eta, gamma, budget, true)
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn eqsize_step_inner(
    sys: &PartiteSystem,
    i: usize,
    j: usize,
    eps: &Rat,
    eta: &Rat,
    gamma: f64,
    budget: &Budget,
    check_pre: bool,
) -> Result<EqsizeOutcome> {
    if !(gamma > 0.0 && gamma <= 0.5) {
        return Err(Error::input(format!("gamma must lie in (0, 1/2], got {gamma}")));
    }
    let k = sys.k();
    if i >= k || j >= k || i == j {
        return Err(Error::input(format!("bad class pair ({i},{j}) for k={k}")));
    }
    let m = sys.classes()[j].len();
    if m < 2 {
        return Err(Error::precondition(format!(
            "class {j} has {m} vertices; refinement needs at least 2"
        )));
    }
    let log_m = (m as f64).ln();
    let ni = sys.classes()[i].len();
    if (ni as f64) + 1e-9 < gamma * log_m {
        return Err(Error::precondition(format!(
            "class {i} has {ni} vertices, below gamma*log m = {:.3}",
            gamma * log_m
        )));
    }
    if check_pre {
        let pre = sys.is_dense(eps, eta, budget)?;
        if !pre.dense {
            return Err(Error::precondition(format!(
                "system is not ({}, {})-dense: failed {:?}",
                format_rat(eps),
                format_rat(eta),
                pre.failed
            )));
        }
    }

    let eps_f = crate::rational::rat_to_f64(eps);
    let s_i_target = (eps_f * gamma * log_m).floor() as i64;
    if s_i_target < 1 {
        return Err(Error::precondition(format!(
            "eps*gamma*log m = {:.4} rounds below 1",
            eps_f * gamma * log_m
        )));
    }
    let s_i_target = s_i_target as usize;
    let a_size = (gamma * log_m).floor() as usize;
    debug_assert!(a_size >= s_i_target);

    let mut checks: Vec<InequalityRecord> = Vec::new();
    let mut record = |name: &str, lhs: String, rhs: String| {
        checks.push(InequalityRecord {
            name: name.into(),
            lhs,
            rhs,
        });
    };

    // good/bad split and the mass bounds
    let classification = classify_edges(sys, i, j, eta, budget)?;
    classification.check_bad_mass()?;
    record(
        "bad-mass",
        classification.bad_mass.to_string(),
        format!("{}/2", classification.clique_count_graph),
    );
    let product = sys.class_size_product()?;
    let half_eps = eps / rat_int(2);
    if !count_ge(classification.good_mass, &half_eps, product)? {
        return Err(Error::inequality(
            "good-mass",
            format!(
                "good mass {} below (eps/2)*{}",
                classification.good_mass, product
            ),
        ));
    }
    record(
        "good-mass",
        classification.good_mass.to_string(),
        format!("({})*{}", format_rat(&half_eps), product),
    );

    // heavy good edges: enough cliques through them individually
    let quarter_eps = eps / rat_int(4);
    let rest_product: u128 = {
        let mut p: u128 = 1;
        for (ci, c) in sys.classes().iter().enumerate() {
            if ci != i && ci != j {
                p = p
                    .checked_mul(c.len() as u128)
                    .ok_or_else(|| Error::Overflow("rest product".into()))?;
            }
        }
        p
    };
    let heavy: Vec<&EdgeStat> = classification
        .stats
        .iter()
        .filter(|s| s.good && count_ge(s.graph_cliques as u128, &quarter_eps, rest_product).unwrap_or(false))
        .collect();
    let ij_slots = (sys.classes()[i].len() as u128) * (sys.classes()[j].len() as u128);
    if !count_ge(heavy.len() as u128, &quarter_eps, ij_slots)? {
        return Err(Error::inequality(
            "heavy-edge-count",
            format!(
                "{} heavy edges, need (eps/4)*{}",
                heavy.len(),
                ij_slots
            ),
        ));
    }
    record(
        "heavy-edge-count",
        heavy.len().to_string(),
        format!("({})*{}", format_rat(&quarter_eps), ij_slots),
    );

    // averaging: left vertices with the largest heavy-degree into class j;
    // classify_edges always stores the class-i endpoint in `u`
    let mut heavy_degree: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
    for s in &heavy {
        *heavy_degree.entry(s.u).or_insert(0) += 1;
    }
    let mut degree: Vec<(u32, usize)> = sys.classes()[i]
        .iter()
        .map(|&u| (u, heavy_degree.get(&u).copied().unwrap_or(0)))
        .collect();
    degree.sort_by_key(|&(u, d)| (std::cmp::Reverse(d), u));
    let mut a_vertices: Vec<u32> = degree[..a_size].iter().map(|&(u, _)| u).collect();
    a_vertices.sort_unstable();
    let a_edge_count: usize = heavy
        .iter()
        .filter(|s| a_vertices.binary_search(&s.u).is_ok())
        .count();
    let a_slots = (a_vertices.len() as u128) * (m as u128);
    if !count_ge(a_edge_count as u128, &quarter_eps, a_slots)? {
        return Err(Error::inequality(
            "averaging",
            format!(
                "{a_edge_count} heavy edges at the chosen left set, need (eps/4)*{a_slots}"
            ),
        ));
    }
    record(
        "averaging",
        a_edge_count.to_string(),
        format!("({})*{}", format_rat(&quarter_eps), a_slots),
    );

    // complete bipartite extraction from the heavy edges at A
    let right_ids: Vec<u32> = sys.classes()[j].clone();
    let mut bip = Bipartite::new(a_vertices.clone(), right_ids.clone());
    let right_index: std::collections::HashMap<u32, usize> = right_ids
        .iter()
        .enumerate()
        .map(|(idx, &v)| (v, idx))
        .collect();
    for s in &heavy {
        if let (Ok(ai), Some(&bi)) = (a_vertices.binary_search(&s.u), right_index.get(&s.v)) {
            bip.add_edge(ai, bi);
        }
    }
    let measured = Rat::new(
        bip.edge_count() as i128,
        (a_vertices.len() as i128) * (m as i128),
    );
    let kst = kst_extract(&bip, &measured, budget)?;
    if kst.left.len() < s_i_target {
        return Err(Error::inequality(
            "left-part-size",
            format!(
                "extracted left part has {} vertices, target floor(eps*gamma*log m) = {s_i_target}",
                kst.left.len()
            ),
        ));
    }
    record(
        "left-part-size",
        kst.left.len().to_string(),
        s_i_target.to_string(),
    );

    // completeness re-check on the full 2-graph
    for &u in &kst.left {
        for &v in &kst.right {
            if !sys.g_has(u, v) {
                return Err(Error::WitnessInvalid(format!(
                    "extracted pair ({u},{v}) is not a graph edge"
                )));
            }
        }
    }

    let refined = sys.with_classes(i, kst.left.clone(), j, kst.right.clone())?;
    let eps_after = eps / rat_int(4);
    let eta_after = eta * rat_int(2);
    let recount = refined.is_dense(&eps_after, &eta_after, budget)?;
    if !recount.dense {
        return Err(Error::inequality(
            "refined-density",
            format!("refined system failed {:?}", recount.failed),
        ));
    }
    record(
        "refined-density",
        format!(
            "graph={}, hyper={}",
            recount.clique_count_graph, recount.clique_count_hyper
        ),
        format!("({}, {})-dense", format_rat(&eps_after), format_rat(&eta_after)),
    );

    Ok(EqsizeOutcome {
        s_i: kst.left.clone(),
        s_j: kst.right.clone(),
        refined,
        eps_after,
        eta_after,
        log: EqsizeLog {
            i,
            j,
            gamma,
            m,
            a_vertices,
            s_i_target,
            good_edges: classification.good_count,
            bad_edges: classification.bad_count,
            heavy_edges: heavy.len(),
            kst_top_bucket: kst.top_bucket,
            checks,
            recount,
        },
    })
}
