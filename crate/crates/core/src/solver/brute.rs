//! Enumeration oracles. No pruning, no shared code with the search beyond
//! the literal predicates.

use super::{check_cap, SolveResult, SolverError};
use crate::graph::{bit, Graph};
use crate::labeling::{self, Labeling, Problem};
use crate::limits::BRUTE_FORCE_MAX_N;

fn literal_check(g: &Graph, problem: Problem, f: &Labeling) -> bool {
    let ok = match problem {
        Problem::Oidrd => labeling::is_oidrd(g, f),
        Problem::Drd => labeling::is_drd(g, f),
        Problem::Oird => labeling::is_oird(g, f),
        Problem::Roman => labeling::is_rd(g, f),
        Problem::Domination => Ok(g.is_dominating(f.class_mask(1))),
        Problem::VertexCover => Ok(g
            .edges()
            .iter()
            .all(|&(u, v)| f.get(u) == 1 || f.get(v) == 1)),
    };
    ok.expect("labeling sized to the graph")
}

/// Visits every labeling over `0..=max` in lexicographic order (vertex 0
/// most significant).
fn for_each_labeling(n: usize, max: u8, mut visit: impl FnMut(&[u8])) {
    let mut values = vec![0u8; n];
    loop {
        visit(&values);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if values[i] < max {
                values[i] += 1;
                break;
            }
            values[i] = 0;
        }
    }
}

/// Minimum over all labelings. The witness is the first optimum met in
/// lexicographic order; `optimal_count` counts every optimum.
pub fn brute_force(g: &Graph, problem: Problem) -> Result<SolveResult, SolverError> {
    check_cap("brute-force enumeration", g.n(), BRUTE_FORCE_MAX_N)?;
    let mut best: Option<(u32, Vec<u8>)> = None;
    let mut count = 0u64;
    let mut visited = 0u64;
    for_each_labeling(g.n(), problem.max_label(), |values| {
        visited += 1;
        let w: u32 = values.iter().map(|&x| u32::from(x)).sum();
        if best.as_ref().is_some_and(|(b, _)| w > *b) {
            return;
        }
        let f = Labeling::from_raw(values.to_vec());
        if !literal_check(g, problem, &f) {
            return;
        }
        match &best {
            Some((b, _)) if *b == w => count += 1,
            _ => {
                best = Some((w, values.to_vec()));
                count = 1;
            }
        }
    });
    let (value, witness) = best.expect("the all-max labeling is always valid");
    Ok(SolveResult {
        value,
        witness: Labeling::from_raw(witness),
        optimal_count: Some(count),
        node_count: visited,
    })
}

/// Every optimal labeling, lexicographic order.
pub fn enumerate_optimal(g: &Graph, problem: Problem) -> Result<Vec<Labeling>, SolverError> {
    check_cap("optimal-labeling enumeration", g.n(), BRUTE_FORCE_MAX_N)?;
    let mut best = u32::MAX;
    let mut all = Vec::new();
    for_each_labeling(g.n(), problem.max_label(), |values| {
        let w: u32 = values.iter().map(|&x| u32::from(x)).sum();
        if w > best {
            return;
        }
        let f = Labeling::from_raw(values.to_vec());
        if !literal_check(g, problem, &f) {
            return;
        }
        if w < best {
            best = w;
            all.clear();
        }
        all.push(f);
    });
    Ok(all)
}

/// Maximum independent set by subset enumeration. Among maximum sets the
/// lexicographically largest indicator is the witness.
pub fn brute_force_alpha(g: &Graph) -> Result<SolveResult, SolverError> {
    check_cap("brute-force enumeration", g.n(), BRUTE_FORCE_MAX_N)?;
    let n = g.n();
    let mut best_size = 0u32;
    let mut best_set = 0u64;
    let mut count = 0u64;
    for code in 0..1u64 << n {
        // Indicator read with vertex 0 as the most significant digit.
        let set = (0..n)
            .filter(|&v| code >> (n - 1 - v) & 1 == 1)
            .fold(0u64, |s, v| s | bit(v));
        if !g.is_independent(set) {
            continue;
        }
        let size = set.count_ones();
        if size > best_size {
            best_size = size;
            count = 0;
        }
        if size == best_size {
            best_set = set;
            count += 1;
        }
    }
    Ok(SolveResult {
        value: best_size,
        witness: Labeling::indicator(n, best_set),
        optimal_count: Some(count),
        node_count: 1u64 << n,
    })
}
