//! Labeled graph streams: all graphs or all connected graphs by edge
//! bitmask, all trees by Prüfer decoding, and seeded random samplers.

use rand::Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::limits::{self, GRAPH_ENUM_MAX_N, TREE_ENUM_MAX_N};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("{what} supports 1 <= n <= {cap}, got n = {n}")]
    OutOfRange {
        what: &'static str,
        n: usize,
        cap: usize,
    },
}

/// Hard ceiling for edge-mask enumeration: the mask must fit in a `u64`.
const EDGE_MASK_HARD_MAX: usize = 11;
/// Hard ceiling for Prüfer enumeration: `n^(n-2)` must fit in a `u64`.
const TREE_HARD_MAX: usize = 16;

fn check(what: &'static str, n: usize, default: usize, hard: usize) -> Result<(), EnumerateError> {
    let cap = limits::cap(default).min(hard);
    if n == 0 || n > cap {
        return Err(EnumerateError::OutOfRange { what, n, cap });
    }
    Ok(())
}

/// Number of vertex pairs, i.e. the width of the edge mask.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every labeled simple graph on `n` vertices, edge mask ascending.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    check("graph enumeration", n, GRAPH_ENUM_MAX_N, EDGE_MASK_HARD_MAX)?;
    let total = 1u64 << pair_count(n);
    Ok((0..total).map(move |mask| Graph::from_edge_mask(n, mask)))
}

/// Every connected labeled graph on `n` vertices, edge mask ascending.
pub fn connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, EnumerateError> {
    Ok(all_graphs(n)?.filter(Graph::is_connected))
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into its tree.
pub fn tree_from_prufer(n: usize, seq: &[usize]) -> Graph {
    assert!(
        n >= 2 && seq.len() == n - 2,
        "Prüfer sequence length must be n - 2"
    );
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("Prüfer decoding yields a simple graph")
}

/// All `n^(n-2)` labeled trees on `n` vertices, Prüfer sequence ascending.
/// For `n` in {1, 2} the single tree.
pub fn trees(n: usize) -> Result<Box<dyn Iterator<Item = Graph>>, EnumerateError> {
    check("tree enumeration", n, TREE_ENUM_MAX_N, TREE_HARD_MAX)?;
    if n <= 2 {
        let edges: &[(usize, usize)] = if n == 2 { &[(0, 1)] } else { &[] };
        return Ok(Box::new(std::iter::once(
            Graph::from_edges(n, edges).expect("valid"),
        )));
    }
    let total = (n as u64).pow((n - 2) as u32);
    Ok(Box::new((0..total).map(move |mut code| {
        let mut seq = vec![0usize; n - 2];
        for slot in seq.iter_mut().rev() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        tree_from_prufer(n, &seq)
    })))
}

/// Number of connected labeled graphs on `n` vertices by the standard
/// inclusion–exclusion recurrence over the component containing vertex 0.
pub fn connected_count(n: usize) -> u64 {
    let binom = |a: usize, b: usize| -> u64 {
        (0..b).fold(1u64, |acc, i| acc * (a - i) as u64 / (i + 1) as u64)
    };
    let total = |k: usize| 1u64 << pair_count(k);
    let mut c = vec![0u64; n + 1];
    for k in 1..=n {
        let disconnected: u64 = (1..k)
            .map(|j| binom(k - 1, j - 1) * c[j] * total(k - j))
            .sum();
        c[k] = total(k) - disconnected;
    }
    c[n]
}

/// Uniform random labeled graph (each pair an edge with probability 1/2).
pub fn random_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let bits = pair_count(n);
    let mask = if bits == 0 {
        0
    } else {
        rng.gen::<u64>() & (u64::MAX >> (64 - bits))
    };
    Graph::from_edge_mask(n, mask)
}

/// Uniform random connected labeled graph by rejection, further filtered by
/// `accept`.
pub fn random_connected_graph<R, F>(n: usize, rng: &mut R, accept: F) -> Graph
where
    R: Rng + ?Sized,
    F: Fn(&Graph) -> bool,
{
    assert!((1..=EDGE_MASK_HARD_MAX).contains(&n));
    loop {
        let g = random_graph(n, rng);
        if g.is_connected() && accept(&g) {
            return g;
        }
    }
}

/// Uniform random labeled tree via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        let edges: &[(usize, usize)] = if n == 2 { &[(0, 1)] } else { &[] };
        return Graph::from_edges(n, edges).expect("valid");
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_prufer(n, &seq)
}

/// True iff the graph is a tree.
pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.m() + 1 == g.n() && g.is_connected()
}
