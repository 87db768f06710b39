//! Closed forms of γ_oidR for basic families and the corona minimum.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bit, Graph};
use crate::labeling::Labeling;
use crate::limits::{self, CORONA_MAX_N};
use crate::solver::{self, InvariantBundle, SolverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{formula}: {reason}")]
    Domain {
        formula: &'static str,
        reason: String,
    },
    #[error(
        "the corona formula requires the second graph to have maximum degree at most its order \
         minus two (got maximum degree {max_degree} on {n} vertices)"
    )]
    CoronaHypothesis { max_degree: usize, n: usize },
    #[error("corona formula is capped at n = {cap} for the first graph (got n = {n})")]
    TooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Solver(#[from] SolverError),
}

fn domain(formula: &'static str, reason: impl Into<String>) -> FormulaError {
    FormulaError::Domain {
        formula,
        reason: reason.into(),
    }
}

pub fn formula_path(n: usize) -> Result<u32, FormulaError> {
    match n {
        0 => Err(domain("path", "n must be >= 1")),
        3 => Ok(3),
        _ => Ok(n as u32 + 1),
    }
}

pub fn formula_cycle(n: usize) -> Result<u32, FormulaError> {
    if n < 3 {
        return Err(domain("cycle", "n must be >= 3"));
    }
    Ok(if n.is_multiple_of(2) {
        n as u32
    } else {
        n as u32 + 1
    })
}

pub fn formula_complete(n: usize) -> Result<u32, FormulaError> {
    if n < 1 {
        return Err(domain("complete", "n must be >= 1"));
    }
    Ok(n as u32 + 1)
}

/// K_{m,n}; the parts may be given in either order.
pub fn formula_complete_bipartite(m: usize, n: usize) -> Result<u32, FormulaError> {
    if m < 1 || n < 1 {
        return Err(domain("complete bipartite", "both parts must be nonempty"));
    }
    let small = m.min(n) as u32;
    Ok(match small {
        1 => 3,
        2 | 3 => 2 * small,
        _ => small + 4,
    })
}

/// Complete k-partite graphs with k >= 3: all parts but the largest, plus 2.
pub fn formula_complete_multipartite(parts: &[usize]) -> Result<u32, FormulaError> {
    if parts.len() < 3 {
        return Err(domain(
            "complete multipartite",
            format!(
                "needs at least 3 parts (got {}); use the bipartite formula",
                parts.len()
            ),
        ));
    }
    if parts.contains(&0) {
        return Err(domain("complete multipartite", "parts must be nonempty"));
    }
    let largest = *parts.iter().max().expect("nonempty");
    Ok((parts.iter().sum::<usize>() - largest) as u32 + 2)
}

/// Per-vertex costs of the four label classes of G in the corona G ⊙ H.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaCoefficients {
    /// n(H) + γ(H), paid by a vertex of G labeled 0.
    pub c0: u32,
    /// γ_oidR(H) + 1.
    pub c1: u32,
    /// γ_oiR(H) + 2.
    pub c2: u32,
    /// β(H) + 3.
    pub c3: u32,
}

impl CoronaCoefficients {
    pub fn from_bundle(h: &InvariantBundle) -> Self {
        CoronaCoefficients {
            c0: h.n as u32 + h.gamma,
            c1: h.gamma_oidr + 1,
            c2: h.gamma_oir + 2,
            c3: h.beta + 3,
        }
    }

    /// Checks the degree hypothesis on `h` and solves its parameters.
    pub fn from_graph(h: &Graph) -> Result<Self, FormulaError> {
        if h.max_degree() + 2 > h.n() {
            return Err(FormulaError::CoronaHypothesis {
                max_degree: h.max_degree(),
                n: h.n(),
            });
        }
        Ok(Self::from_bundle(&solver::bundle(h)?))
    }

    pub fn as_array(&self) -> [u32; 4] {
        [self.c0, self.c1, self.c2, self.c3]
    }

    /// The cheapest nonzero class and its cost (smallest label on ties).
    fn cheapest_nonzero(&self) -> (u8, u32) {
        [(1u8, self.c1), (2, self.c2), (3, self.c3)]
            .into_iter()
            .min_by_key(|&(label, c)| (c, label))
            .expect("three candidates")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaValue {
    pub value: u32,
    pub coefficients: CoronaCoefficients,
    /// A minimizing class assignment on V(G), lexicographically smallest.
    pub assignment: Labeling,
}

/// The corona minimum: over all assignments of classes 0..3 to V(G) with
/// the 0-class independent, minimize the sum of the class coefficients.
///
/// Since the coefficients do not depend on the vertex, every vertex outside
/// the 0-class takes the cheapest nonzero class, and only the choice of the
/// independent 0-class is searched.
pub fn corona_minimum(
    g: &Graph,
    coefficients: &CoronaCoefficients,
) -> Result<CoronaValue, FormulaError> {
    let cap = limits::cap(CORONA_MAX_N);
    if g.n() > cap {
        return Err(FormulaError::TooLarge { n: g.n(), cap });
    }
    let n = g.n();
    let (label, cost) = coefficients.cheapest_nonzero();
    let mut best: Option<(u32, Vec<u8>)> = None;
    independent_sets(g, 0, 0, &mut |set| {
        let value = set.count_ones() * coefficients.c0 + (n as u32 - set.count_ones()) * cost;
        let assignment: Vec<u8> = (0..n)
            .map(|v| if set & bit(v) != 0 { 0 } else { label })
            .collect();
        let better = match &best {
            None => true,
            Some((b, a)) => value < *b || (value == *b && assignment < *a),
        };
        if better {
            best = Some((value, assignment));
        }
    });
    let (value, assignment) = best.expect("the empty set is independent");
    Ok(CoronaValue {
        value,
        coefficients: *coefficients,
        assignment: Labeling::new(assignment).expect("labels are in range"),
    })
}

/// Visits every independent set of `g` exactly once.
fn independent_sets(g: &Graph, v: usize, set: u64, visit: &mut impl FnMut(u64)) {
    if v == g.n() {
        visit(set);
        return;
    }
    independent_sets(g, v + 1, set, visit);
    if g.adjacency(v) & set == 0 {
        independent_sets(g, v + 1, set | bit(v), visit);
    }
}

/// Largest G for the unreduced 4^n enumeration.
pub const CORONA_DIRECT_MAX_N: usize = 8;

/// The same minimum by enumerating all 4^n class assignments directly.
pub fn corona_minimum_direct(
    g: &Graph,
    coefficients: &CoronaCoefficients,
) -> Result<u32, FormulaError> {
    if g.n() > CORONA_DIRECT_MAX_N {
        return Err(FormulaError::TooLarge {
            n: g.n(),
            cap: CORONA_DIRECT_MAX_N,
        });
    }
    let n = g.n();
    let c = coefficients.as_array();
    let mut best = u32::MAX;
    for code in 0..1u64 << (2 * n) {
        let class = |v: usize| (code >> (2 * v) & 3) as usize;
        let zeros = (0..n)
            .filter(|&v| class(v) == 0)
            .fold(0u64, |s, v| s | bit(v));
        if !g.is_independent(zeros) {
            continue;
        }
        best = best.min((0..n).map(|v| c[class(v)]).sum());
    }
    Ok(best)
}

/// γ_oidR(G ⊙ H) from the parameters of H, under the degree hypothesis on H.
/// For small G the reduced search is checked against the direct enumeration.
pub fn corona_formula(g: &Graph, h: &Graph) -> Result<CoronaValue, FormulaError> {
    let coefficients = CoronaCoefficients::from_graph(h)?;
    let reduced = corona_minimum(g, &coefficients)?;
    if g.n() <= CORONA_DIRECT_MAX_N {
        let direct = corona_minimum_direct(g, &coefficients)?;
        assert_eq!(
            reduced.value, direct,
            "reduced and direct corona minima disagree"
        );
    }
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn g(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(formula_path(3).unwrap(), 3);
        assert_eq!(formula_path(1).unwrap(), 2);
        assert_eq!(formula_path(8).unwrap(), 9);
        assert_eq!(formula_cycle(4).unwrap(), 4);
        assert_eq!(formula_cycle(7).unwrap(), 8);
        assert_eq!(formula_cycle(3).unwrap(), 4);
        assert_eq!(formula_complete(1).unwrap(), 2);
        assert_eq!(formula_complete(2).unwrap(), 3);
        assert_eq!(formula_complete(6).unwrap(), 7);
        assert_eq!(formula_complete_bipartite(1, 9).unwrap(), 3);
        assert_eq!(formula_complete_bipartite(3, 3).unwrap(), 6);
        assert_eq!(formula_complete_bipartite(5, 5).unwrap(), 9);
        assert_eq!(formula_complete_bipartite(7, 4).unwrap(), 8);
        assert_eq!(formula_complete_multipartite(&[1, 1, 1]).unwrap(), 4);
        assert_eq!(formula_complete_multipartite(&[3, 1, 2]).unwrap(), 5);
        assert_eq!(formula_complete_multipartite(&[2, 2, 2]).unwrap(), 6);
    }

    #[test]
    fn domains() {
        assert!(formula_path(0).is_err());
        assert!(formula_cycle(2).is_err());
        assert!(formula_complete(0).is_err());
        assert!(formula_complete_bipartite(0, 3).is_err());
        assert!(formula_complete_multipartite(&[2, 3]).is_err());
        assert!(formula_complete_multipartite(&[2, 0, 3]).is_err());
    }

    #[test]
    fn corona_examples() {
        let r = corona_formula(&g("path:2"), &g("empty:2")).unwrap();
        assert_eq!(r.coefficients.as_array(), [4, 5, 4, 3]);
        assert_eq!(r.value, 6);
        let r = corona_formula(&g("path:2"), &g("path:4")).unwrap();
        assert_eq!(r.coefficients.as_array(), [6, 6, 5, 5]);
        assert_eq!(r.value, 10);
    }

    #[test]
    fn corona_hypothesis_rejected() {
        for h in ["complete:3", "star:3", "empty:1", "path:3"] {
            assert!(matches!(
                corona_formula(&g("path:2"), &g(h)),
                Err(FormulaError::CoronaHypothesis { .. })
            ));
        }
    }

    #[test]
    fn corona_with_empty_graphs_is_three_per_vertex() {
        for base in ["path:3", "cycle:5", "complete:4", "star:3"] {
            for r in 2..=4 {
                let h = g(&format!("empty:{r}"));
                let value = corona_formula(&g(base), &h).unwrap().value;
                assert_eq!(value, 3 * g(base).n() as u32);
            }
        }
    }

    #[test]
    fn reduced_matches_direct() {
        let coefficient_sets = [
            [4, 5, 4, 3],
            [6, 6, 5, 5],
            [2, 9, 9, 9],
            [3, 4, 5, 6],
            [5, 5, 5, 5],
        ];
        for graph in [
            "path:4",
            "cycle:5",
            "complete:4",
            "kbipartite:2,3",
            "empty:3",
        ] {
            for c in coefficient_sets {
                let k = CoronaCoefficients {
                    c0: c[0],
                    c1: c[1],
                    c2: c[2],
                    c3: c[3],
                };
                let reduced = corona_minimum(&g(graph), &k).unwrap();
                assert_eq!(reduced.value, corona_minimum_direct(&g(graph), &k).unwrap());
                let a = reduced.assignment.values();
                let sum: u32 = a.iter().map(|&x| c[x as usize]).sum();
                assert_eq!(sum, reduced.value);
            }
        }
    }
}
