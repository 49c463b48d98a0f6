//! Labeled undirected multigraphs with loops and parallel edges.
//!
//! Vertices are `0..n` in the Rust API; the text format, CLI and Python
//! bindings present them 1-based. Edges keep their insertion order, and the
//! position of an edge in that order is its [`EdgeId`].

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::vector::IntVector;

pub type EdgeId = usize;

/// Unordered vertex pair, stored with `u <= v`. A loop has `u == v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite `x`; `x` itself for a loop.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A set of edge positions of one particular graph, as a 64-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    bits: u64,
    len: usize,
}

impl EdgeSubset {
    pub fn empty(len: usize) -> Result<Self> {
        Self::from_bits(0, len)
    }

    pub fn full(len: usize) -> Result<Self> {
        let bits = if len == 64 {
            u64::MAX
        } else {
            (1u64 << len) - 1
        };
        Self::from_bits(bits, len)
    }

    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if len > 64 {
            return Err(Error::TooManyEdges(len));
        }
        if len < 64 && bits >> len != 0 {
            return Err(Error::InvalidParameter(format!(
                "subset mask {bits:#x} has bits beyond edge count {len}"
            )));
        }
        Ok(EdgeSubset { bits, len })
    }

    pub fn from_edges(ids: impl IntoIterator<Item = EdgeId>, len: usize) -> Result<Self> {
        let mut s = Self::empty(len)?;
        for e in ids {
            s.insert(e)?;
        }
        Ok(s)
    }

    pub fn insert(&mut self, e: EdgeId) -> Result<()> {
        if e >= self.len {
            return Err(Error::InvalidEdgeId {
                edge: e,
                edge_count: self.len,
            });
        }
        self.bits |= 1 << e;
        Ok(())
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        e < self.len && self.bits >> e & 1 == 1
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.len).filter(move |&e| self.contains(e))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// A 2-coloring of the vertices in which every edge joins the two sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    sides: Vec<Side>,
}

impl Bipartition {
    /// Builds a bipartition from an explicit left set; every other vertex is
    /// on the right. Does not check edges.
    pub fn from_left(n: usize, left: &[usize]) -> Result<Self> {
        let mut sides = vec![Side::Right; n];
        for &v in left {
            if v >= n {
                return Err(Error::BadBipartition(format!(
                    "vertex {v} out of range for {n} vertices"
                )));
            }
            if sides[v] == Side::Left {
                return Err(Error::BadBipartition(format!("vertex {v} listed twice")));
            }
            sides[v] = Side::Left;
        }
        Ok(Bipartition { sides })
    }

    pub fn from_sides(sides: Vec<Side>) -> Self {
        Bipartition { sides }
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn left(&self) -> Vec<usize> {
        self.members(Side::Left)
    }

    pub fn right(&self) -> Vec<usize> {
        self.members(Side::Right)
    }

    fn members(&self, side: Side) -> Vec<usize> {
        (0..self.sides.len())
            .filter(|&v| self.sides[v] == side)
            .collect()
    }

    /// True when every edge of `g` crosses the partition.
    pub fn is_valid_for(&self, g: &Multigraph) -> bool {
        self.sides.len() == g.num_vertices()
            && g.edges().iter().all(|e| self.sides[e.u] != self.sides[e.v])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    /// Builds a graph on vertices `0..n` from 0-based endpoint pairs.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Multigraph::edgeless(n);
        for (a, b) in edges {
            g.push_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
        }
    }

    /// Appends an edge, returning its id.
    pub fn push_edge(&mut self, a: usize, b: usize) -> Result<EdgeId> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        self.edges.push(Edge::new(a, b));
        Ok(self.edges.len() - 1)
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<Edge> {
        self.edges.get(e).copied().ok_or(Error::InvalidEdgeId {
            edge: e,
            edge_count: self.edges.len(),
        })
    }

    pub fn num_loops(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                vertex_count: self.n,
            })
        }
    }

    pub(crate) fn check_subset(&self, a: &EdgeSubset) -> Result<()> {
        if a.len() != self.edges.len() {
            return Err(Error::SizeMismatch {
                expected: self.edges.len(),
                found: a.len(),
            });
        }
        Ok(())
    }

    pub fn full_subset(&self) -> Result<EdgeSubset> {
        EdgeSubset::full(self.edges.len())
    }

    pub fn empty_subset(&self) -> Result<EdgeSubset> {
        EdgeSubset::empty(self.edges.len())
    }

    /// `G - e`: same vertices, edge `e` removed, later edges shift down one id.
    pub fn delete_edge(&self, e: EdgeId) -> Result<Multigraph> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Multigraph { n: self.n, edges })
    }

    /// Inserts an edge at position `at`, shifting later ids up. Inverse of
    /// [`Multigraph::delete_edge`].
    pub fn insert_edge(&self, at: EdgeId, a: usize, b: usize) -> Result<Multigraph> {
        if at > self.edges.len() {
            return Err(Error::InvalidEdgeId {
                edge: at,
                edge_count: self.edges.len(),
            });
        }
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let mut edges = self.edges.clone();
        edges.insert(at, Edge::new(a, b));
        Ok(Multigraph { n: self.n, edges })
    }

    /// `G / e`. The merged vertex keeps index `min(u, v)`, vertices above
    /// `max(u, v)` move down by one, and other `u`-`v` edges become loops.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Multigraph> {
        let edge = self.edge(e)?;
        if edge.is_loop() {
            return Err(Error::LoopContraction(e));
        }
        let (keep, gone) = (edge.u, edge.v);
        let relabel = |x: usize| match x.cmp(&gone) {
            std::cmp::Ordering::Less => x,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => x - 1,
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, f)| Edge::new(relabel(f.u), relabel(f.v)))
            .collect();
        Ok(Multigraph {
            n: self.n - 1,
            edges,
        })
    }

    pub fn is_loop(&self, e: EdgeId) -> Result<bool> {
        Ok(self.edge(e)?.is_loop())
    }

    /// True iff the endpoints of `e` lie in different components of `G - e`.
    pub fn is_bridge(&self, e: EdgeId) -> Result<bool> {
        let edge = self.edge(e)?;
        if edge.is_loop() {
            return Ok(false);
        }
        let mut dsu = Dsu::new(self.n);
        for (i, f) in self.edges.iter().enumerate() {
            if i != e {
                dsu.union(f.u, f.v);
            }
        }
        Ok(dsu.find(edge.u) != dsu.find(edge.v))
    }

    /// `k(A)`: connected components of `(V, A)`, isolated vertices included.
    pub fn components_count(&self, a: &EdgeSubset) -> Result<usize> {
        self.check_subset(a)?;
        let mut dsu = Dsu::new(self.n);
        for e in a.iter() {
            let f = self.edges[e];
            dsu.union(f.u, f.v);
        }
        Ok(dsu.components())
    }

    /// Component count of the whole graph; works for any edge count.
    pub fn num_components(&self) -> usize {
        let mut dsu = Dsu::new(self.n);
        for f in &self.edges {
            dsu.union(f.u, f.v);
        }
        dsu.components()
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    /// BFS 2-coloring; each component's lowest vertex goes left. `None` when
    /// some edge (a loop, or an odd cycle edge) cannot cross the partition.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let adj = self.adjacency();
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(Side::Left);
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                let here = side[x].unwrap();
                let there = match here {
                    Side::Left => Side::Right,
                    Side::Right => Side::Left,
                };
                for &(y, _) in &adj[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(there);
                            queue.push_back(y);
                        }
                        Some(s) if s == here => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition::from_sides(
            side.into_iter().map(|s| s.unwrap()).collect(),
        ))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Degrees of the spanning subgraph `(V, A)`; a loop adds 2.
    pub fn degree_sequence(&self, a: &EdgeSubset) -> Result<IntVector> {
        self.check_subset(a)?;
        let mut deg = IntVector::zeros(self.n);
        for e in a.iter() {
            let f = self.edges[e];
            deg[f.u] += 1;
            deg[f.v] += 1;
        }
        Ok(deg)
    }

    /// Degrees in the whole graph; works for any edge count.
    pub fn degrees(&self) -> IntVector {
        let mut deg = IntVector::zeros(self.n);
        for f in &self.edges {
            deg[f.u] += 1;
            deg[f.v] += 1;
        }
        deg
    }

    /// Neighbor lists of `(neighbor, edge id)`, sorted by neighbor then id.
    /// A loop appears once in its vertex's list.
    pub fn adjacency(&self) -> Vec<Vec<(usize, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, f) in self.edges.iter().enumerate() {
            adj[f.u].push((f.v, i));
            if !f.is_loop() {
                adj[f.v].push((f.u, i));
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Applies a vertex permutation: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Multigraph> {
        if perm.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter(
                    "relabeling is not a permutation".into(),
                ));
            }
        }
        Ok(Multigraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|f| Edge::new(perm[f.u], perm[f.v]))
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    fn c4() -> Multigraph {
        cycle(4).unwrap()
    }

    #[test]
    fn delete_edge_of_c4_gives_path() {
        let p = c4().delete_edge(0).unwrap();
        assert_eq!(p.num_vertices(), 4);
        assert_eq!(p.num_edges(), 3);
        assert!(p.is_connected());
        assert!((0..3).all(|e| p.is_bridge(e).unwrap()));
    }

    #[test]
    fn delete_only_loop() {
        let g = Multigraph::new(1, [(0, 0)]).unwrap();
        let h = g.delete_edge(0).unwrap();
        assert_eq!(h, Multigraph::edgeless(1));
    }

    #[test]
    fn delete_invalid_edge() {
        assert_eq!(
            c4().delete_edge(4),
            Err(Error::InvalidEdgeId {
                edge: 4,
                edge_count: 4
            })
        );
    }

    #[test]
    fn contract_c4_gives_c3() {
        let g = c4().contract_edge(0).unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.num_edges(), 3);
        let mut edges: Vec<_> = g.edges().to_vec();
        edges.sort();
        let mut expected = cycle(3).unwrap().edges().to_vec();
        expected.sort();
        assert_eq!(edges, expected);
    }

    #[test]
    fn contract_parallel_pair_makes_loop() {
        let g = Multigraph::new(2, [(0, 1), (0, 1)]).unwrap();
        let h = g.contract_edge(1).unwrap();
        assert_eq!(h, Multigraph::new(1, [(0, 0)]).unwrap());
    }

    #[test]
    fn contract_relabels_higher_vertices() {
        // edge {1,3} in a 5-vertex path-ish graph: 3 merges into 1, 4 -> 3
        let g = Multigraph::new(5, [(1, 3), (3, 4), (0, 2)]).unwrap();
        let h = g.contract_edge(0).unwrap();
        assert_eq!(h, Multigraph::new(4, [(1, 3), (0, 2)]).unwrap());
    }

    #[test]
    fn contract_loop_rejected() {
        let g = Multigraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(g.contract_edge(0), Err(Error::LoopContraction(0)));
    }

    #[test]
    fn components_of_c4_subsets() {
        let g = c4();
        assert_eq!(g.components_count(&g.empty_subset().unwrap()).unwrap(), 4);
        assert_eq!(g.components_count(&g.full_subset().unwrap()).unwrap(), 1);
        // edges 0 = {v1,v2}, 2 = {v3,v4}
        let opposite = EdgeSubset::from_edges([0, 2], 4).unwrap();
        assert_eq!(g.components_count(&opposite).unwrap(), 2);
        assert_eq!(
            g.components_count(&EdgeSubset::empty(3).unwrap()),
            Err(Error::SizeMismatch {
                expected: 4,
                found: 3
            })
        );
    }

    #[test]
    fn bipartition_cases() {
        let b = c4().bipartition().unwrap();
        assert_eq!(b.left(), vec![0, 2]);
        assert_eq!(b.right(), vec![1, 3]);
        assert!(b.is_valid_for(&c4()));
        assert!(cycle(3).unwrap().bipartition().is_none());
        assert!(Multigraph::new(1, [(0, 0)])
            .unwrap()
            .bipartition()
            .is_none());
        // isolated vertices go left
        let iso = Multigraph::edgeless(2).bipartition().unwrap();
        assert_eq!(iso.left(), vec![0, 1]);
    }

    #[test]
    fn loops_and_bridges() {
        let g = c4();
        assert!((0..4).all(|e| !g.is_bridge(e).unwrap()));
        let k2 = path(2).unwrap();
        assert!(k2.is_bridge(0).unwrap());
        let l = Multigraph::new(1, [(0, 0)]).unwrap();
        assert!(l.is_loop(0).unwrap());
        assert!(!l.is_bridge(0).unwrap());
        assert!(l.is_bridge(1).is_err());
    }

    #[test]
    fn degree_sequences() {
        let g = c4();
        let a = EdgeSubset::from_edges([0, 2], 4).unwrap();
        assert_eq!(
            g.degree_sequence(&a).unwrap(),
            IntVector::from([1, 1, 1, 1])
        );
        let b = EdgeSubset::from_edges([1, 3], 4).unwrap();
        assert_eq!(
            g.degree_sequence(&b).unwrap(),
            IntVector::from([1, 1, 1, 1])
        );
        assert_eq!(
            g.degree_sequence(&g.empty_subset().unwrap()).unwrap(),
            IntVector::zeros(4)
        );
        let l = Multigraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(
            l.degree_sequence(&l.full_subset().unwrap()).unwrap(),
            IntVector::from([2])
        );
    }

    #[test]
    fn delete_then_insert_roundtrip() {
        let g = complete(4).unwrap();
        for e in 0..g.num_edges() {
            let f = g.edge(e).unwrap();
            let back = g
                .delete_edge(e)
                .unwrap()
                .insert_edge(e, f.u(), f.v())
                .unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn edge_subset_bounds() {
        assert!(EdgeSubset::empty(65).is_err());
        assert!(EdgeSubset::from_bits(0b100, 2).is_err());
        assert_eq!(EdgeSubset::full(64).unwrap().count(), 64);
    }
}
