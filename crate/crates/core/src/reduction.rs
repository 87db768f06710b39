//! The pendant-P3 gadget relating γ_oidR to the independence number.
//!
//! From G on n vertices build G′ by attaching to every vertex v_i the center
//! u_i of a fresh path on three vertices. Then γ_oidR(G′) = 4n − α(G).
//! Attaching trees keeps a planar G planar, and Δ(G′) = max(Δ(G)+1, 3).
//!
//! Numbering in G′: v_i keeps index i, u_i is `n + 3i`, its leaves are
//! `n + 3i + 1` and `n + 3i + 2`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bit, Graph, GraphError, MAX_VERTICES};
use crate::labeling::{self, Labeling};
use crate::limits::{self, REDUCTION_MAX_N};
use crate::solver::{self, SolveOptions, SolverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("identity check is capped at n = {cap} (got n = {n}); set OIDRD_MAX_N to raise it")]
    TooLarge { n: usize, cap: usize },
    #[error("vertex set {0:?} is not independent in the base graph")]
    NotIndependent(Vec<usize>),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetMap {
    pub base: Graph,
    pub gadget: Graph,
    /// `u_index[i]` is the center attached to base vertex i.
    pub u_index: Vec<usize>,
    /// `leaf_index[i]` are the two leaves hanging off `u_index[i]`.
    pub leaf_index: Vec<[usize; 2]>,
}

pub fn build_gadget(g: &Graph) -> Result<GadgetMap, GraphError> {
    let n = g.n();
    if 4 * n > MAX_VERTICES {
        return Err(GraphError::TooLarge(4 * n));
    }
    let u_index: Vec<usize> = (0..n).map(|i| n + 3 * i).collect();
    let leaf_index: Vec<[usize; 2]> = u_index.iter().map(|&u| [u + 1, u + 2]).collect();
    let mut edges = g.edges();
    for i in 0..n {
        let u = u_index[i];
        edges.push((i, u));
        edges.push((u, leaf_index[i][0]));
        edges.push((u, leaf_index[i][1]));
    }
    let gadget = Graph::from_edges(4 * n, &edges)?;
    assert!(u_index.iter().all(|&u| gadget.degree(u) == 3));
    assert!(n == 0 || gadget.max_degree() <= (g.max_degree() + 1).max(3));
    Ok(GadgetMap {
        base: g.clone(),
        gadget,
        u_index,
        leaf_index,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub n: usize,
    pub alpha: u32,
    /// γ_oidR(G′) as computed by the solver.
    pub lhs: u32,
    /// 4n − α(G).
    pub rhs: u32,
    pub equal: bool,
}

/// Solves both sides of the identity exactly.
pub fn verify_identity(g: &Graph) -> Result<IdentityReport, ReductionError> {
    verify_identity_with(g, &SolveOptions::default())
}

pub fn verify_identity_with(
    g: &Graph,
    options: &SolveOptions,
) -> Result<IdentityReport, ReductionError> {
    let cap = limits::cap(REDUCTION_MAX_N);
    if g.n() > cap {
        return Err(ReductionError::TooLarge { n: g.n(), cap });
    }
    let map = build_gadget(g)?;
    let alpha = solver::solve_alpha(g)?.value;
    let lhs = solver::solve_with(&map.gadget, labeling::Problem::Oidrd, options)?.value;
    let rhs = 4 * g.n() as u32 - alpha;
    Ok(IdentityReport {
        n: g.n(),
        alpha,
        lhs,
        rhs,
        equal: lhs == rhs,
    })
}

/// The labeling of G′ built from an independent set I of G: 3 on every
/// center, 0 on leaves and on I, 1 on the other base vertices. It is an
/// OIDRD function of weight 4n − |I|.
pub fn witness_from_independent_set(g: &Graph, set: &[usize]) -> Result<Labeling, ReductionError> {
    let mut mask = 0u64;
    for &v in set {
        if v >= g.n() {
            return Err(ReductionError::OutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        mask |= bit(v);
    }
    if !g.is_independent(mask) {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        return Err(ReductionError::NotIndependent(sorted));
    }
    let map = build_gadget(g)?;
    let mut values = vec![0u8; map.gadget.n()];
    for v in 0..g.n() {
        values[v] = if mask & bit(v) != 0 { 0 } else { 1 };
        values[map.u_index[v]] = 3;
    }
    let f = Labeling::new(values).expect("labels are in range");
    debug_assert!(labeling::is_oidrd(&map.gadget, &f).unwrap());
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn g(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn gadget_shapes() {
        let k1 = build_gadget(&g("empty:1")).unwrap().gadget;
        assert_eq!(k1.n(), 4);
        assert_eq!(k1.degree(1), 3);
        assert_eq!(k1.m(), 3);

        let p2 = build_gadget(&g("path:2")).unwrap().gadget;
        assert_eq!(p2.n(), 8);
        assert!(p2.is_connected() && p2.m() == 7);

        let c4 = build_gadget(&g("cycle:4")).unwrap();
        assert_eq!(c4.gadget.n(), 16);
        assert_eq!(c4.gadget.max_degree(), 3);
        assert_eq!(c4.u_index, vec![4, 7, 10, 13]);
        assert_eq!(c4.leaf_index[1], [8, 9]);
    }

    #[test]
    fn identity_small_cases() {
        for (spec, rhs) in [("complete:3", 11), ("path:2", 7), ("empty:2", 6)] {
            let r = verify_identity(&g(spec)).unwrap();
            assert_eq!(r.rhs, rhs, "{spec}");
            assert_eq!(r.lhs, rhs, "{spec}");
            assert!(r.equal);
        }
    }

    #[test]
    fn witnesses_from_sets() {
        let cases: [(&str, &[usize], u32); 3] = [
            ("complete:3", &[0], 11),
            ("empty:2", &[0, 1], 6),
            ("path:3", &[], 12),
        ];
        for (spec, set, w) in cases {
            let base = g(spec);
            let f = witness_from_independent_set(&base, set).unwrap();
            let gadget = build_gadget(&base).unwrap().gadget;
            assert!(labeling::is_oidrd(&gadget, &f).unwrap());
            assert_eq!(f.weight(), w);
        }
        assert!(matches!(
            witness_from_independent_set(&g("path:3"), &[0, 1]),
            Err(ReductionError::NotIndependent(_))
        ));
    }

    #[test]
    fn identity_cap() {
        if std::env::var(limits::ENV_MAX_N).is_err() {
            assert!(matches!(
                verify_identity(&g("path:6")),
                Err(ReductionError::TooLarge { .. })
            ));
        }
    }
}
