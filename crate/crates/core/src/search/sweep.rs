use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::budget::{SearchBudget, SearchStatus};
use crate::conditions::union_feasibility;
use crate::error::{Error, Result};
use crate::graph::{
    cartesian_product, complete, cycle, cycle_power, disjoint_union, regularity, MultiGraph,
};
use crate::labeling::{verify_edge_graceful, EdgeLabeling};
use crate::lifting::{lift_striaeform, lift_theorem2};
use crate::striation::{residue_rep, Striation};

use super::{search_edge_graceful, search_striation};

/// A list of named graphs, written as comma-separated terms:
/// `C7` (cycle), `C7^2` (cycle power), `K5` (complete graph), and
/// cartesian products joined by `x`, e.g. `C3xC5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub members: Vec<(String, MultiGraph)>,
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut members = Vec::new();
        for item in s.split(',') {
            let id: String = item.chars().filter(|c| !c.is_whitespace()).collect();
            if id.is_empty() {
                return Err(Error::ConfigError(format!("empty family member in `{s}`")));
            }
            let mut graph: Option<MultiGraph> = None;
            for term in id.split('x') {
                let g = parse_term(term)?;
                graph = Some(match graph {
                    None => g,
                    Some(acc) => cartesian_product(&acc, &g)?,
                });
            }
            members.push((id, graph.expect("split yields at least one term")));
        }
        Ok(Self { members })
    }
}

fn parse_term(term: &str) -> Result<MultiGraph> {
    let bad = || Error::ConfigError(format!("unrecognised graph term `{term}`"));
    let number = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let (kind, rest) = term.split_at(term.chars().next().map_or(0, char::len_utf8));
    let degenerate = |e: Error| Error::ConfigError(format!("`{term}`: {e}"));
    match kind {
        "C" => match rest.split_once('^') {
            Some((n, k)) => cycle_power(number(n)?, number(k)?).map_err(degenerate),
            None => cycle(number(rest)?).map_err(degenerate),
        },
        "K" => {
            let n = number(rest)?;
            if n < 3 {
                return Err(bad());
            }
            complete(n).map_err(degenerate)
        }
        _ => Err(bad()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    /// Budget for each individual search.
    pub budget: SearchBudget,
    /// Direct search on `kG` is attempted only up to this many edges.
    pub direct_max_edges: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            budget: SearchBudget::limited(5_000_000).expect("nonzero"),
            direct_max_edges: 12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVerdict {
    Ok,
    Fail,
    Skip,
    Budget,
}

impl fmt::Display for SweepVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepVerdict::Ok => "ok",
            SweepVerdict::Fail => "fail",
            SweepVerdict::Skip => "skip",
            SweepVerdict::Budget => "budget",
        })
    }
}

impl SweepVerdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            SweepVerdict::Ok
        } else {
            SweepVerdict::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub graph_id: String,
    pub p: usize,
    pub r: usize,
    pub k: usize,
    pub feasible: SweepVerdict,
    pub theorem2: SweepVerdict,
    pub striaeform: SweepVerdict,
    pub direct_search: SweepVerdict,
    /// Whether every stria of the found striation, with its labels reduced to
    /// `1..=p`, is itself an edge-graceful cycle union. Informational only.
    pub striae_graceful: SweepVerdict,
}

impl SweepRow {
    /// At least one construction or search produced a verified labeling.
    pub fn any_success(&self) -> bool {
        [self.theorem2, self.striaeform, self.direct_search].contains(&SweepVerdict::Ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
}

pub const SWEEP_HEADER: &str =
    "graph_id\tp\tr\tk\tfeasible\ttheorem2\tstriaeform\tdirect_search\tstriae_graceful";

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {SWEEP_HEADER}")?;
        for row in &self.rows {
            writeln!(
                f,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                row.graph_id,
                row.p,
                row.r,
                row.k,
                row.feasible,
                row.theorem2,
                row.striaeform,
                row.direct_search,
                row.striae_graceful
            )?;
        }
        Ok(())
    }
}

fn verdict_of<W>(status: &SearchStatus<W>) -> SweepVerdict {
    match status {
        SearchStatus::Found(_) => SweepVerdict::Ok,
        SearchStatus::NoneExists => SweepVerdict::Fail,
        SearchStatus::BudgetExhausted => SweepVerdict::Budget,
    }
}

/// Runs every method on every `(G, k)` pair and tabulates the outcomes.
///
/// This only collects instance evidence; a row of `ok` verdicts says nothing
/// about graphs outside the family.
pub fn conjecture_sweep(
    family: &FamilySpec,
    k_values: &[usize],
    config: SweepConfig,
) -> Result<SweepReport> {
    if k_values.is_empty() || k_values.contains(&0) {
        return Err(Error::ConfigError(
            "copy counts must be a non-empty list of positive integers".into(),
        ));
    }
    let mut rows = Vec::new();
    for (id, g) in &family.members {
        let r = regularity(g)
            .two_r()
            .ok_or_else(|| Error::ConfigError(format!("family member `{id}` is not 2r-regular")))?;
        let p = g.vertex_count();
        let base = search_edge_graceful::<u64>(g, config.budget)?;
        let striation = search_striation::<u64>(g, config.budget)?;
        let striae_graceful = match striation.witness() {
            Some(s) => SweepVerdict::from_bool(striae_are_graceful(g, s)?),
            None => SweepVerdict::Skip,
        };
        for &k in k_values {
            let feasible = SweepVerdict::from_bool(union_feasibility(g, k as u64)?.feasible());
            let odd = k % 2 == 1;

            let theorem2 = if !odd || r.gcd(&(k * p)) != 1 {
                SweepVerdict::Skip
            } else {
                match &base.status {
                    SearchStatus::Found(l) => lift_verdict(lift_theorem2(g, l, k))?,
                    other => verdict_of(other),
                }
            };

            let striaeform = if !odd {
                SweepVerdict::Skip
            } else {
                match &striation.status {
                    SearchStatus::Found(s) => lift_verdict(lift_striaeform(g, s, k))?,
                    other => verdict_of(other),
                }
            };

            let direct_search = if k * g.edge_count() <= config.direct_max_edges {
                let union = disjoint_union(g, k)?;
                verdict_of(&search_edge_graceful::<u64>(&union, config.budget)?.status)
            } else {
                SweepVerdict::Skip
            };

            rows.push(SweepRow {
                graph_id: id.clone(),
                p,
                r,
                k,
                feasible,
                theorem2,
                striaeform,
                direct_search,
                striae_graceful,
            });
        }
    }
    Ok(SweepReport { rows })
}

fn lift_verdict<T>(lift: Result<T>) -> Result<SweepVerdict> {
    match lift {
        Ok(_) => Ok(SweepVerdict::Ok),
        Err(Error::TheoremViolationWitness(_)) => Ok(SweepVerdict::Fail),
        Err(other) => Err(other),
    }
}

/// Treats each stria as a `(p, p)` graph labeled by its reduced labels.
fn striae_are_graceful(g: &MultiGraph, s: &Striation<u64>) -> Result<bool> {
    let p = s.labeling.modulus();
    for factor in s.factorization.factors() {
        let edges = factor.iter().map(|&e| g.endpoints(e)).collect();
        let sub = MultiGraph::new(g.vertex_count(), edges)?;
        let labels = factor
            .iter()
            .map(|&e| residue_rep(s.labeling.label(e), p))
            .collect();
        let labeling = EdgeLabeling::for_graph(&sub, labels)?;
        if !verify_edge_graceful(&sub, &labeling)?.is_valid() {
            return Ok(false);
        }
    }
    Ok(true)
}
