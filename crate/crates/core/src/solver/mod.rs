//! Exact optima of γ_oidR and the auxiliary invariants.
//!
//! [`solve`] runs branch and bound and then re-derives the lexicographically
//! smallest optimal labeling by a descent at the optimal value, so the
//! witness never depends on search order or worker count. [`brute_force`]
//! is the independent oracle: plain enumeration of every labeling, checked
//! with the literal predicates of [`crate::labeling`].

mod brute;
mod search;

use std::sync::atomic::AtomicU32;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use brute::{brute_force, brute_force_alpha, enumerate_optimal};

use crate::graph::Graph;
use crate::labeling::{Labeling, Problem};
use crate::limits::{self, SOLVER_MAX_N};
use search::{branch_order, split_prefixes, Search};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("{what} is capped at n = {cap} (got n = {n}); set OIDRD_MAX_N to raise it")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("invariant relation violated on {graph}: {relation}")]
    Inconsistent { graph: String, relation: String },
}

pub(crate) fn check_cap(what: &'static str, n: usize, default: usize) -> Result<(), SolverError> {
    let cap = limits::cap(default).min(crate::graph::MAX_VERTICES);
    if n > cap {
        return Err(SolverError::TooLarge { what, n, cap });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub value: u32,
    /// Lexicographically smallest optimal labeling.
    pub witness: Labeling,
    /// Number of optimal labelings; only the enumeration oracles fill it.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub optimal_count: Option<u64>,
    pub node_count: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Worker threads for the optimization phase. Results do not depend on it.
    pub workers: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { workers: 1 }
    }
}

/// Exact optimum of `problem` on `g` with its canonical witness.
pub fn solve(g: &Graph, problem: Problem) -> Result<SolveResult, SolverError> {
    solve_with(g, problem, &SolveOptions::default())
}

pub fn solve_with(
    g: &Graph,
    problem: Problem,
    options: &SolveOptions,
) -> Result<SolveResult, SolverError> {
    check_cap("branch-and-bound solver", g.n(), SOLVER_MAX_N)?;
    let (value, some_optimum, mut nodes) = optimize(g, problem, options.workers.max(1));
    let (witness, descent_nodes) = canonical_descent(g, problem, value, some_optimum);
    nodes += descent_nodes;
    let witness = Labeling::from_raw(witness);
    assert!(
        problem.satisfied(g, witness.values()) && witness.weight() == value,
        "solver produced an invalid witness {witness} for {problem} on {g:?}"
    );
    Ok(SolveResult {
        value,
        witness,
        optimal_count: None,
        node_count: nodes,
    })
}

/// A labeling valid for every graph, used as the first incumbent.
fn trivial_labeling(g: &Graph, problem: Problem) -> Vec<u8> {
    let label = match problem {
        Problem::Oidrd | Problem::Drd => 2,
        _ => 1,
    };
    vec![label; g.n()]
}

fn weight(labels: &[u8]) -> u32 {
    labels.iter().map(|&x| u32::from(x)).sum()
}

/// Optimal value plus one optimal labeling.
fn optimize(g: &Graph, problem: Problem, workers: usize) -> (u32, Vec<u8>, u64) {
    let trivial = trivial_labeling(g, problem);
    let upper = weight(&trivial);

    if workers <= 1 || g.n() < 12 {
        let search = Search::new(g, problem, &[], upper, false, None).expect("empty prefix");
        let (best, nodes) = search.run();
        return match best {
            Some(b) => (weight(&b), b, nodes),
            None => (upper, trivial, nodes),
        };
    }

    let order = branch_order(g);
    let depth = (1..=order.len())
        .find(|&d| (problem.max_label() as usize + 1).pow(d as u32) >= 8 * workers)
        .unwrap_or(order.len());
    let prefixes = split_prefixes(g, problem, &order, depth);
    let incumbent = AtomicU32::new(upper);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let results: Vec<(Option<Vec<u8>>, u64)> = pool.install(|| {
        prefixes
            .par_iter()
            .map(
                |prefix| match Search::new(g, problem, prefix, upper, false, Some(&incumbent)) {
                    Some(s) => s.run(),
                    None => (None, 1),
                },
            )
            .collect()
    });
    let nodes = results.iter().map(|r| r.1).sum();
    let best = results
        .into_iter()
        .filter_map(|r| r.0)
        .min_by_key(|b| weight(b));
    match best {
        Some(b) => (weight(&b), b, nodes),
        None => (upper, trivial, nodes),
    }
}

/// Walks vertices `0..n` in index order, lowering each label to the smallest
/// value that still admits a completion of weight `value`.
fn canonical_descent(
    g: &Graph,
    problem: Problem,
    value: u32,
    mut current: Vec<u8>,
) -> (Vec<u8>, u64) {
    let mut nodes = 0;
    let mut prefix: Vec<(usize, u8)> = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        for label in 0..current[v] {
            prefix.push((v, label));
            if let Some(search) = Search::new(g, problem, &prefix, value + 1, true, None) {
                let (found, n) = search.run();
                nodes += n;
                if let Some(sol) = found {
                    debug_assert_eq!(weight(&sol), value);
                    current = sol;
                    prefix.pop();
                    break;
                }
            }
            prefix.pop();
        }
        prefix.push((v, current[v]));
    }
    (current, nodes)
}

pub fn solve_oidrd(g: &Graph) -> Result<SolveResult, SolverError> {
    solve(g, Problem::Oidrd)
}

pub fn solve_gamma(g: &Graph) -> Result<SolveResult, SolverError> {
    solve(g, Problem::Domination)
}

pub fn solve_beta(g: &Graph) -> Result<SolveResult, SolverError> {
    solve(g, Problem::VertexCover)
}

pub fn solve_gamma_r(g: &Graph) -> Result<SolveResult, SolverError> {
    solve(g, Problem::Roman)
}

pub fn solve_gamma_oir(g: &Graph) -> Result<SolveResult, SolverError> {
    solve(g, Problem::Oird)
}

pub fn solve_gamma_dr(g: &Graph) -> Result<SolveResult, SolverError> {
    solve(g, Problem::Drd)
}

/// Independence number as the complement of a minimum vertex cover. The
/// witness is the indicator of the complement of the canonical cover, i.e.
/// the lexicographically largest maximum independent set.
pub fn solve_alpha(g: &Graph) -> Result<SolveResult, SolverError> {
    let cover = solve_beta(g)?;
    let witness = Labeling::from_raw(cover.witness.values().iter().map(|&x| 1 - x).collect());
    Ok(SolveResult {
        value: g.n() as u32 - cover.value,
        witness,
        optimal_count: None,
        node_count: cover.node_count,
    })
}

/// Brute-force γ_oidR, the oracle twin of [`solve_oidrd`].
pub fn brute_force_oidrd(g: &Graph) -> Result<SolveResult, SolverError> {
    brute_force(g, Problem::Oidrd)
}

/// Every optimal OIDRD labeling, lexicographic order.
pub fn enumerate_optimal_oidrd(g: &Graph) -> Result<Vec<Labeling>, SolverError> {
    enumerate_optimal(g, Problem::Oidrd)
}

/// The seven parameters reported for a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Gamma,
    Alpha,
    Beta,
    GammaR,
    GammaOir,
    GammaDr,
    GammaOidr,
}

impl Invariant {
    pub const ALL: [Invariant; 7] = [
        Invariant::Gamma,
        Invariant::Alpha,
        Invariant::Beta,
        Invariant::GammaR,
        Invariant::GammaOir,
        Invariant::GammaDr,
        Invariant::GammaOidr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Gamma => "gamma",
            Invariant::Alpha => "alpha",
            Invariant::Beta => "beta",
            Invariant::GammaR => "gamma_r",
            Invariant::GammaOir => "gamma_oir",
            Invariant::GammaDr => "gamma_dr",
            Invariant::GammaOidr => "gamma_oidr",
        }
    }

    fn problem(self) -> Option<Problem> {
        Some(match self {
            Invariant::Gamma => Problem::Domination,
            Invariant::Alpha => return None,
            Invariant::Beta => Problem::VertexCover,
            Invariant::GammaR => Problem::Roman,
            Invariant::GammaOir => Problem::Oird,
            Invariant::GammaDr => Problem::Drd,
            Invariant::GammaOidr => Problem::Oidrd,
        })
    }

    pub fn solve(self, g: &Graph) -> Result<SolveResult, SolverError> {
        match self.problem() {
            Some(p) => solve(g, p),
            None => solve_alpha(g),
        }
    }

    pub fn solve_with(self, g: &Graph, options: &SolveOptions) -> Result<SolveResult, SolverError> {
        match self.problem() {
            Some(p) => solve_with(g, p, options),
            None => solve_alpha(g),
        }
    }

    pub fn brute_force(self, g: &Graph) -> Result<SolveResult, SolverError> {
        match self.problem() {
            Some(p) => brute_force(g, p),
            None => brute_force_alpha(g),
        }
    }
}

impl std::str::FromStr for Invariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .or(match s {
                "oidrd" => Some(Invariant::GammaOidr),
                "oird" => Some(Invariant::GammaOir),
                "drd" => Some(Invariant::GammaDr),
                "roman" | "rd" => Some(Invariant::GammaR),
                _ => None,
            })
            .ok_or_else(|| format!("unknown invariant {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBundle {
    pub n: usize,
    pub gamma: u32,
    pub alpha: u32,
    pub beta: u32,
    pub gamma_r: u32,
    pub gamma_oir: u32,
    pub gamma_dr: u32,
    pub gamma_oidr: u32,
}

impl InvariantBundle {
    pub fn get(&self, inv: Invariant) -> u32 {
        match inv {
            Invariant::Gamma => self.gamma,
            Invariant::Alpha => self.alpha,
            Invariant::Beta => self.beta,
            Invariant::GammaR => self.gamma_r,
            Invariant::GammaOir => self.gamma_oir,
            Invariant::GammaDr => self.gamma_dr,
            Invariant::GammaOidr => self.gamma_oidr,
        }
    }

    /// Relations every bundle must satisfy; returns the violated ones.
    pub fn violated_relations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.alpha as usize + self.beta as usize != self.n {
            out.push("alpha + beta = n");
        }
        if self.gamma_dr > self.gamma_oidr {
            out.push("gamma_dr <= gamma_oidr");
        }
        if self.n >= 1 && self.gamma_oir >= self.gamma_oidr {
            out.push("gamma_oir < gamma_oidr");
        }
        out
    }
}

/// All seven parameters of `g`, consistency checked.
pub fn bundle(g: &Graph) -> Result<InvariantBundle, SolverError> {
    let gamma = solve_gamma(g)?.value;
    let cover = solve_beta(g)?.value;
    let b = InvariantBundle {
        n: g.n(),
        gamma,
        alpha: g.n() as u32 - cover,
        beta: cover,
        gamma_r: solve_gamma_r(g)?.value,
        gamma_oir: solve_gamma_oir(g)?.value,
        gamma_dr: solve_gamma_dr(g)?.value,
        gamma_oidr: solve_oidrd(g)?.value,
    };
    if let Some(relation) = b.violated_relations().first() {
        return Err(SolverError::Inconsistent {
            graph: g.to_edge_list(),
            relation: relation.to_string(),
        });
    }
    Ok(b)
}

#[cfg(test)]
mod tests;
