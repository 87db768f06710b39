//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Neighborhoods are stored as 64-bit vertex masks, which caps a graph at
//! [`MAX_VERTICES`] vertices. Every computation in this crate is desk scale,
//! far below that.

use std::fmt;

use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph with {0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// A finite simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a vertex mask in ascending order.
pub fn mask_vertices(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) collapse to a single edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph too large");
        Graph {
            n,
            adj: vec![0; n],
            m: 0,
        }
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        let degree_sum: usize = adj.iter().map(|a| a.count_ones() as usize).sum();
        Graph {
            n: adj.len(),
            adj,
            m: degree_sum / 2,
        }
    }

    /// The graph whose edges are the set bits of `mask`, numbered over the
    /// pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> k & 1 == 1 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                k += 1;
            }
        }
        Self::from_adjacency(adj)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Mask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Open neighborhood of `v` as a vertex mask.
    #[inline]
    pub fn adjacency(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        mask_vertices(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in mask_vertices(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.m == 0
    }

    /// True for the empty graph and for every graph with a single component.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = self.vertex_mask();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in mask_vertices(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// True iff no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: u64) -> bool {
        mask_vertices(set).all(|v| self.adj[v] & set == 0)
    }

    /// True iff every vertex outside `set` has a neighbor in `set`.
    pub fn is_dominating(&self, set: u64) -> bool {
        mask_vertices(self.vertex_mask() & !set).all(|v| self.adj[v] & set != 0)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= bit(perm[v]);
            adj[perm[v]] |= bit(perm[u]);
        }
        Graph::from_adjacency(adj)
    }

    /// Serializes to the edge-list text format: a `n m` header followed by
    /// one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list text format. Blank lines and `#` comments are
    /// skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_line, header) = lines.next().ok_or(ParseError::Syntax {
            line: 1,
            message: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_pair(header_line, header)?;
        if n > MAX_VERTICES {
            return Err(ParseError::Graph {
                line: header_line,
                source: GraphError::TooLarge(n),
            });
        }

        let mut edges = Vec::with_capacity(m);
        for (line, content) in lines {
            let (u, v) = parse_pair(line, content)?;
            if u >= n || v >= n {
                return Err(ParseError::Graph {
                    line,
                    source: GraphError::OutOfRange(u, v, n),
                });
            }
            if u == v {
                return Err(ParseError::Graph {
                    line,
                    source: GraphError::SelfLoop(u),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(ParseError::EdgeCount {
                expected: m,
                found: edges.len(),
            });
        }
        Graph::from_edges(n, &edges).map_err(|source| ParseError::Graph { line: 0, source })
    }
}

fn parse_pair(line: usize, content: &str) -> Result<(usize, usize), ParseError> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(ParseError::Syntax {
            line,
            message: format!("expected two integers, got {:?}", content),
        });
    }
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| ParseError::Syntax {
            line,
            message: format!("{s:?} is not a nonnegative integer"),
        })
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The corona `g ⊙ h`: vertex `i` of `g` keeps index `i`, and the copy of
/// `h` attached to it occupies indices `g.n + i*h.n .. g.n + (i+1)*h.n` in
/// the order of `h`'s own numbering.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let total = g.n * (1 + h.n);
    if total > MAX_VERTICES {
        return Err(GraphError::TooLarge(total));
    }
    let mut edges = g.edges();
    for i in 0..g.n {
        let offset = g.n + i * h.n;
        edges.extend(h.edges().into_iter().map(|(a, b)| (offset + a, offset + b)));
        edges.extend((0..h.n).map(|a| (i, offset + a)));
    }
    Graph::from_edges(total, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn builds_p3() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.max_degree(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::OutOfRange(0, 3, 3))
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(Graph::from_edges(65, &[]), Err(GraphError::TooLarge(65)));
    }

    #[test]
    fn connectivity() {
        assert!(!Graph::empty(2).is_connected());
        let c7 =
            Graph::from_edges(7, &(0..7).map(|i| (i, (i + 1) % 7)).collect::<Vec<_>>()).unwrap();
        assert!(c7.is_connected());
        let star = Graph::from_edges(6, &(1..6).map(|i| (0, i)).collect::<Vec<_>>()).unwrap();
        assert_eq!(star.max_degree(), 5);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = path(5);
        let text = g.to_edge_list();
        assert_eq!(text, "5 4\n0 1\n1 2\n2 3\n3 4\n");
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::parse_edge_list("3 2\n0 1"),
            Err(ParseError::EdgeCount {
                expected: 2,
                found: 1
            })
        );
        match Graph::parse_edge_list("3 1\n0 7\n") {
            Err(ParseError::Graph { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match Graph::parse_edge_list("3 1\nzero one\n") {
            Err(ParseError::Syntax { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn corona_small_cases() {
        // K1 ⊙ K̄2 is the star K_{1,2}.
        let star = corona(&Graph::empty(1), &Graph::empty(2)).unwrap();
        assert_eq!(star.degrees(), vec![2, 1, 1]);
        // P2 ⊙ K1 is P4 with the path 2-0-1-3.
        let p4 = corona(&path(2), &Graph::empty(1)).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        let perm = [1, 2, 0, 3];
        assert_eq!(p4.permuted(&perm), path(4));
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(corona(&c3, &Graph::empty(2)).unwrap().n(), 9);
    }

    #[test]
    fn edge_mask_numbering() {
        // Pairs in order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
        let g = Graph::from_edge_mask(4, 0b100001);
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
    }
}
