//! Depth-first branch and bound over vertex labelings.
//!
//! Vertices are branched in descending degree order (ties by index) with
//! labels tried from 0 upward. A node is cut when
//!
//! * a 0 lands next to another 0 (independent variants),
//! * an assigned vertex with no unassigned neighbor left misses its demand,
//! * the partial weight plus an admissible completion bound reaches the
//!   incumbent.
//!
//! The completion bound is the larger of two independent estimates: the sum
//! of per-vertex forced minimum labels plus a matching term for edges that
//! still need a nonzero endpoint, and a fractional covering bound on the
//! total outstanding demand.

use std::sync::atomic::{AtomicU32, Ordering};

use crate::graph::{bit, mask_vertices, Graph};
use crate::labeling::Problem;

const UNSET: u8 = u8::MAX;

pub(crate) struct Search<'a> {
    g: &'a Graph,
    problem: Problem,
    need: u8,
    max_label: u8,
    order: Vec<usize>,
    labels: Vec<u8>,
    zeros: u64,
    assigned: u64,
    /// Demand covered so far: own label (if assigned) plus neighbor support.
    cover: Vec<u8>,
    weight: u32,
    /// Only completions with weight strictly below this are of interest.
    bound: u32,
    best: Option<Vec<u8>>,
    first_only: bool,
    shared: Option<&'a AtomicU32>,
    pub(crate) nodes: u64,
}

/// Branching order: descending degree, ties by ascending index.
pub(crate) fn branch_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

impl<'a> Search<'a> {
    /// A search with the vertices in `fixed` pre-assigned. Returns `None`
    /// if the fixed part already violates a constraint.
    pub(crate) fn new(
        g: &'a Graph,
        problem: Problem,
        fixed: &[(usize, u8)],
        bound: u32,
        first_only: bool,
        shared: Option<&'a AtomicU32>,
    ) -> Option<Self> {
        let mut s = Search {
            g,
            problem,
            need: problem.need(),
            max_label: problem.max_label(),
            order: Vec::new(),
            labels: vec![UNSET; g.n()],
            zeros: 0,
            assigned: 0,
            cover: vec![0; g.n()],
            weight: 0,
            bound,
            best: None,
            first_only,
            shared,
            nodes: 0,
        };
        for &(v, label) in fixed {
            debug_assert!(label <= s.max_label && s.labels[v] == UNSET);
            if label == 0 && problem.independent_zeros() && g.adjacency(v) & s.zeros != 0 {
                return None;
            }
            s.assign(v, label);
        }
        if mask_vertices(s.assigned).any(|v| s.dead(v)) {
            return None;
        }
        s.order = branch_order(g)
            .into_iter()
            .filter(|&v| s.labels[v] == UNSET)
            .collect();
        Some(s)
    }

    /// Runs the search. Returns the best labeling found below the bound.
    pub(crate) fn run(mut self) -> (Option<Vec<u8>>, u64) {
        if self.weight + self.lower_bound() < self.current_bound() {
            self.dfs(0);
        } else {
            self.nodes += 1;
        }
        (self.best, self.nodes)
    }

    #[inline]
    fn current_bound(&self) -> u32 {
        match self.shared {
            Some(s) => self.bound.min(s.load(Ordering::Relaxed)),
            None => self.bound,
        }
    }

    fn assign(&mut self, v: usize, label: u8) {
        self.labels[v] = label;
        self.assigned |= bit(v);
        if label == 0 {
            self.zeros |= bit(v);
        }
        self.weight += u32::from(label);
        self.cover[v] += self.problem.self_cover(label);
        let s = self.problem.support(label);
        if s > 0 {
            for u in self.g.neighbors(v) {
                self.cover[u] += s;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let label = self.labels[v];
        self.labels[v] = UNSET;
        self.assigned &= !bit(v);
        self.zeros &= !bit(v);
        self.weight -= u32::from(label);
        self.cover[v] -= self.problem.self_cover(label);
        let s = self.problem.support(label);
        if s > 0 {
            for u in self.g.neighbors(v) {
                self.cover[u] -= s;
            }
        }
    }

    /// An assigned vertex that can no longer meet its demand.
    #[inline]
    fn dead(&self, v: usize) -> bool {
        self.cover[v] < self.need && self.g.adjacency(v) & !self.assigned == 0
    }

    fn locally_ok(&self, v: usize) -> bool {
        !self.dead(v) && mask_vertices(self.g.adjacency(v) & self.assigned).all(|u| !self.dead(u))
    }

    /// Admissible lower bound on the weight still to be placed.
    fn lower_bound(&self) -> u32 {
        let free = self.g.vertex_mask() & !self.assigned;
        if free == 0 {
            return 0;
        }
        self.forced_bound(free).max(self.cover_bound(free))
    }

    /// Per-vertex forced minima, plus one per edge of a greedy matching on
    /// the free vertices that could still take 0.
    fn forced_bound(&self, free: u64) -> u32 {
        let indep = self.problem.independent_zeros();
        let mut total = 0u32;
        let mut zero_ok = 0u64;
        for u in mask_vertices(free) {
            let adj = self.g.adjacency(u);
            let open_neighbor = adj & free != 0;
            let blocked = indep && adj & self.zeros != 0;
            if !blocked && (self.cover[u] >= self.need || open_neighbor) {
                zero_ok |= bit(u);
            } else if self.problem.self_cover(1) + self.cover[u] >= self.need || open_neighbor {
                total += 1;
            } else {
                total += 2;
            }
        }
        if indep {
            let mut left = zero_ok;
            while left != 0 {
                let u = left.trailing_zeros() as usize;
                left &= !bit(u);
                let partner = self.g.adjacency(u) & left;
                if partner != 0 {
                    left &= !bit(partner.trailing_zeros() as usize);
                    total += 1;
                }
            }
        }
        total
    }

    /// Fractional covering bound: every unit of outstanding demand must be
    /// supplied by some free vertex, and a free vertex labeled `L` supplies
    /// at most `gain(L)` units. Filling the demand greedily from the most
    /// efficient vertices gives a relaxation optimum.
    fn cover_bound(&self, free: u64) -> u32 {
        if self.need == 0 {
            return 0;
        }
        let deficit = |v: usize| self.need.saturating_sub(self.cover[v]);
        let mut outstanding: u32 = (0..self.g.n()).map(|v| u32::from(deficit(v))).sum();
        if outstanding == 0 {
            return 0;
        }
        let mut offers: Vec<(f64, u32)> = Vec::with_capacity(free.count_ones() as usize);
        for u in mask_vertices(free) {
            let mut best_eff = 0f64;
            let mut best_gain = 0u32;
            for label in 1..=self.max_label {
                let support = self.problem.support(label);
                let mut gain = u32::from(self.problem.self_cover(label).min(deficit(u)));
                if support > 0 {
                    for w in self.g.neighbors(u) {
                        gain += u32::from(support.min(deficit(w)));
                    }
                }
                best_eff = best_eff.max(f64::from(gain) / f64::from(label));
                best_gain = best_gain.max(gain);
            }
            if best_gain > 0 {
                offers.push((best_eff, best_gain));
            }
        }
        offers.sort_by(|a, b| b.0.total_cmp(&a.0));
        let mut weight = 0f64;
        for (eff, gain) in offers {
            let take = gain.min(outstanding);
            weight += f64::from(take) / eff;
            outstanding -= take;
            if outstanding == 0 {
                break;
            }
        }
        if outstanding > 0 {
            // Even every free vertex at its best cannot meet the demand.
            return u32::MAX / 4;
        }
        (weight - 1e-9).ceil().max(0.0) as u32
    }

    /// Returns true when the search should stop.
    fn dfs(&mut self, depth: usize) -> bool {
        self.nodes += 1;
        if depth == self.order.len() {
            debug_assert!(self.problem.satisfied(self.g, &self.labels));
            self.bound = self.weight;
            if let Some(s) = self.shared {
                s.fetch_min(self.weight, Ordering::Relaxed);
            }
            self.best = Some(self.labels.clone());
            return self.first_only;
        }
        let v = self.order[depth];
        let indep = self.problem.independent_zeros();
        for label in 0..=self.max_label {
            if self.weight + u32::from(label) >= self.current_bound() {
                break;
            }
            if label == 0 && indep && self.g.adjacency(v) & self.zeros != 0 {
                continue;
            }
            self.assign(v, label);
            if self.locally_ok(v)
                && self.weight + self.lower_bound() < self.current_bound()
                && self.dfs(depth + 1)
            {
                self.unassign(v);
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

/// Enumerates consistent assignments of the first `depth` vertices of
/// `order`, used to split the tree across workers.
pub(crate) fn split_prefixes(
    g: &Graph,
    problem: Problem,
    order: &[usize],
    depth: usize,
) -> Vec<Vec<(usize, u8)>> {
    let mut out = vec![Vec::new()];
    for &v in order.iter().take(depth) {
        let mut next = Vec::new();
        for prefix in &out {
            for label in 0..=problem.max_label() {
                let mut p: Vec<(usize, u8)> = prefix.clone();
                p.push((v, label));
                if Search::new(g, problem, &p, u32::MAX, true, None).is_some() {
                    next.push(p);
                }
            }
        }
        out = next;
    }
    out
}
