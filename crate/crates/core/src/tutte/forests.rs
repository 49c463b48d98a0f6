//! `T(2, 1)` by the loop-free deletion-contraction recurrence
//! `F(G) = F(G - e) + F(G / e)`, `F(G) = F(G - e)` for a loop, `F = 1` on an
//! edgeless graph.
//!
//! The recursion works on a bundled form where `k` parallel edges between
//! two vertices are one weighted pair. Splitting on a whole bundle gives
//! `F(G) = F(G - bundle) + k F(G / bundle)`, since a forest uses at most one
//! edge of a bundle and contracting one edge turns the other `k - 1` into
//! loops. Between splits the state is pruned:
//!
//! * loops and isolated vertices are dropped (factor 1),
//! * a vertex whose only neighbor is reached by a bundle of weight `k`
//!   is removed with factor `1 + k`,
//! * disconnected states are split into components and multiplied.
//!
//! Surviving states are memoized on the exact labeled graph: vertex count
//! plus sorted weighted edge list, with vertices compacted to `0..n` in
//! their original order.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use rustc_hash::FxHashMap;

use crate::dsu::Dsu;
use crate::multigraph::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Bundled {
    n: usize,
    // (u, v, multiplicity) with u < v, sorted, no repeated pairs
    edges: Vec<(u32, u32, u64)>,
}

impl Bundled {
    fn from_graph(g: &Multigraph) -> Self {
        let mut map = BTreeMap::new();
        for e in g.edges().iter().filter(|e| !e.is_loop()) {
            *map.entry((e.u() as u32, e.v() as u32)).or_insert(0u64) += 1;
        }
        Self::from_map(g.num_vertices(), map)
    }

    fn from_map(n: usize, map: BTreeMap<(u32, u32), u64>) -> Self {
        Bundled {
            n,
            edges: map.into_iter().map(|((u, v), w)| (u, v, w)).collect(),
        }
    }

    fn without(&self, idx: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Bundled { n: self.n, edges }
    }

    /// Contracts bundle `idx`: the larger endpoint merges into the smaller,
    /// higher labels shift down, and bundles meeting at the merged vertex
    /// add their weights.
    fn contracted(&self, idx: usize) -> Self {
        let (keep, gone, _) = self.edges[idx];
        let relabel = |x: u32| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut map = BTreeMap::new();
        for (i, &(u, v, w)) in self.edges.iter().enumerate() {
            if i == idx {
                continue;
            }
            let (a, b) = (relabel(u), relabel(v));
            *map.entry((a.min(b), a.max(b))).or_insert(0) += w;
        }
        Self::from_map(self.n - 1, map)
    }

    fn neighbor_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.n];
        for &(u, v, _) in &self.edges {
            c[u as usize] += 1;
            c[v as usize] += 1;
        }
        c
    }

    /// Strips pendant vertices, returning the accumulated factor and the
    /// remaining graph with isolated vertices removed.
    fn pruned(mut self) -> (BigUint, Bundled) {
        let mut factor = BigUint::one();
        loop {
            let counts = self.neighbor_counts();
            let before = self.edges.len();
            self.edges.retain(|&(u, v, w)| {
                // a vertex with one neighbor keeps that status until its own
                // bundle goes, so stale counts within the pass are safe
                let pendant = counts[u as usize] == 1 || counts[v as usize] == 1;
                if pendant {
                    factor *= BigUint::from(w) + 1u32;
                }
                !pendant
            });
            if self.edges.len() == before {
                break;
            }
        }
        (factor, self.compacted())
    }

    fn compacted(self) -> Bundled {
        let counts = self.neighbor_counts();
        let mut label = vec![u32::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if counts[v] > 0 {
                label[v] = next;
                next += 1;
            }
        }
        Bundled {
            n: next as usize,
            edges: self
                .edges
                .into_iter()
                .map(|(u, v, w)| (label[u as usize], label[v as usize], w))
                .collect(),
        }
    }

    fn components(self) -> Vec<Bundled> {
        let mut dsu = Dsu::new(self.n);
        for &(u, v, _) in &self.edges {
            dsu.union(u as usize, v as usize);
        }
        if dsu.components() <= 1 {
            return vec![self];
        }
        let mut groups: BTreeMap<usize, Vec<(u32, u32, u64)>> = BTreeMap::new();
        for &(u, v, w) in &self.edges {
            groups
                .entry(dsu.find(u as usize))
                .or_default()
                .push((u, v, w));
        }
        groups
            .into_values()
            .map(|edges| Bundled { n: self.n, edges }.compacted())
            .collect()
    }

    /// Bundle whose endpoints have the largest total edge count (weights
    /// included); first in sorted order on ties.
    fn densest(&self) -> usize {
        let mut deg = vec![0u64; self.n];
        for &(u, v, w) in &self.edges {
            deg[u as usize] += w;
            deg[v as usize] += w;
        }
        let mut best = 0;
        let mut best_score = 0;
        for (i, &(u, v, _)) in self.edges.iter().enumerate() {
            let score = deg[u as usize] + deg[v as usize];
            if score > best_score {
                best = i;
                best_score = score;
            }
        }
        best
    }
}

/// Counters from one [`t21_with_stats`] run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct T21Stats {
    pub memo_entries: usize,
    pub memo_hits: usize,
    pub splits: usize,
}

struct Solver {
    memo: FxHashMap<Bundled, BigUint>,
    stats: T21Stats,
}

impl Solver {
    fn count(&mut self, g: Bundled) -> BigUint {
        let (factor, g) = g.pruned();
        if g.edges.is_empty() {
            return factor;
        }
        let mut total = factor;
        for part in g.components() {
            total *= self.count_connected(part);
        }
        total
    }

    fn count_connected(&mut self, g: Bundled) -> BigUint {
        if let Some(v) = self.memo.get(&g) {
            self.stats.memo_hits += 1;
            return v.clone();
        }
        self.stats.splits += 1;
        let idx = g.densest();
        let weight = g.edges[idx].2;
        let deleted = self.count(g.without(idx));
        let contracted = self.count(g.contracted(idx));
        let value = deleted + contracted * BigUint::from(weight);
        self.memo.insert(g, value.clone());
        value
    }
}

/// `T_G(2, 1)`, the number of spanning forests of `g`. No size cap; the
/// running time is exponential in the worst case.
pub fn t21(g: &Multigraph) -> BigUint {
    t21_with_stats(g).0
}

pub fn t21_with_stats(g: &Multigraph) -> (BigUint, T21Stats) {
    let mut solver = Solver {
        memo: FxHashMap::default(),
        stats: T21Stats::default(),
    };
    let value = solver.count(Bundled::from_graph(g));
    solver.stats.memo_entries = solver.memo.len();
    (value, solver.stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    #[test]
    fn small_values() {
        assert_eq!(t21(&cycle(4).unwrap()), BigUint::from(15u32));
        assert_eq!(t21(&cycle(3).unwrap()), BigUint::from(7u32));
        assert_eq!(t21(&cycle(1).unwrap()), BigUint::from(1u32));
        assert_eq!(t21(&cycle(2).unwrap()), BigUint::from(3u32));
        assert_eq!(t21(&complete(5).unwrap()), BigUint::from(291u32));
        assert_eq!(t21(&path(5).unwrap()), BigUint::from(16u32));
        assert_eq!(t21(&Multigraph::edgeless(4)), BigUint::from(1u32));
        assert_eq!(t21(&Multigraph::edgeless(0)), BigUint::from(1u32));
    }

    #[test]
    fn pendant_bundle_factor() {
        // triple edge plus a loop: forests are {}, and each single edge
        let g = Multigraph::new(2, [(0, 1), (0, 1), (1, 1), (0, 1)]).unwrap();
        assert_eq!(t21(&g), BigUint::from(4u32));
    }

    #[test]
    fn contraction_merges_bundles() {
        let g = Bundled::from_graph(&Multigraph::new(3, [(0, 1), (0, 2), (1, 2), (1, 2)]).unwrap());
        let c = g.contracted(0);
        assert_eq!(
            c,
            Bundled {
                n: 2,
                edges: vec![(0, 1, 3)]
            }
        );
    }

    #[test]
    fn components_multiply() {
        let two_triangles =
            Multigraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(t21(&two_triangles), BigUint::from(49u32));
    }
}
