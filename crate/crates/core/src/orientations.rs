//! Orientations as an overlay on a [`Multigraph`], their degree and score
//! vectors, and the counting operations built on them.
//!
//! Bit `e` of an orientation is 0 when edge `e = {u, v}` (stored `u <= v`)
//! runs `u -> v` and 1 when it runs `v -> u`. A loop has a single
//! orientation, bit 0, and adds 1 to both the outdegree and the indegree of
//! its vertex, so its score contribution is 0.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::cap::EnumerationCap;
use crate::error::{Error, Result};
use crate::gray::gray_tally;
use crate::multigraph::{Bipartition, EdgeId, EdgeSubset, Multigraph, Side};
use crate::vector::IntVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Orientation<'g> {
    graph: &'g Multigraph,
    reversed: u64,
}

fn loop_mask(g: &Multigraph) -> u64 {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_loop())
        .fold(0, |m, (i, _)| m | 1 << i)
}

fn non_loop_edges(g: &Multigraph) -> Vec<EdgeId> {
    (0..g.num_edges())
        .filter(|&e| !g.edges()[e].is_loop())
        .collect()
}

impl<'g> Orientation<'g> {
    /// Every edge `u -> v` in stored order.
    pub fn forward(graph: &'g Multigraph) -> Result<Self> {
        Self::from_subset(graph, &EdgeSubset::empty(graph.num_edges())?)
    }

    /// Orientation whose reversed edges are exactly `reversed`.
    pub fn from_subset(graph: &'g Multigraph, reversed: &EdgeSubset) -> Result<Self> {
        graph.check_subset(reversed)?;
        if reversed.bits() & loop_mask(graph) != 0 {
            return Err(Error::InvalidOrientation(
                "a loop has only one orientation".into(),
            ));
        }
        Ok(Orientation {
            graph,
            reversed: reversed.bits(),
        })
    }

    /// Parses one `0`/`1` per edge in edge order.
    pub fn from_bit_string(graph: &'g Multigraph, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() != graph.num_edges() {
            return Err(Error::SizeMismatch {
                expected: graph.num_edges(),
                found: s.len(),
            });
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                other => {
                    return Err(Error::InvalidOrientation(format!(
                        "unexpected character {other:?}"
                    )))
                }
            }
        }
        Self::from_subset(graph, &EdgeSubset::from_bits(bits, graph.num_edges())?)
    }

    /// Every edge directed from its left endpoint to its right endpoint.
    pub fn left_to_right(graph: &'g Multigraph, parts: &Bipartition) -> Result<Self> {
        if !parts.is_valid_for(graph) {
            return Err(Error::BadBipartition(
                "some edge does not cross the partition".into(),
            ));
        }
        let reversed = graph
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| parts.side(e.u()) == Side::Right)
            .fold(0u64, |m, (i, _)| m | 1 << i);
        Self::from_subset(graph, &EdgeSubset::from_bits(reversed, graph.num_edges())?)
    }

    pub fn graph(&self) -> &'g Multigraph {
        self.graph
    }

    pub fn reversed(&self) -> EdgeSubset {
        EdgeSubset::from_bits(self.reversed, self.graph.num_edges()).expect("sized for graph")
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.graph.num_edges())
            .map(|i| {
                if self.reversed >> i & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    /// `(tail, head)` of edge `e`.
    pub fn arc(&self, e: EdgeId) -> (usize, usize) {
        let edge = self.graph.edges()[e];
        if self.reversed >> e & 1 == 1 {
            (edge.v(), edge.u())
        } else {
            (edge.u(), edge.v())
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.graph.num_edges()).map(|e| self.arc(e))
    }

    pub fn outdegree_vector(&self) -> IntVector {
        let mut out = IntVector::zeros(self.graph.num_vertices());
        for (t, _) in self.arcs() {
            out[t] += 1;
        }
        out
    }

    pub fn indegree_vector(&self) -> IntVector {
        let mut inn = IntVector::zeros(self.graph.num_vertices());
        for (_, h) in self.arcs() {
            inn[h] += 1;
        }
        inn
    }

    /// Outdegree minus indegree, per vertex.
    pub fn score_vector(&self) -> IntVector {
        self.subdigraph_score_unchecked(u64::MAX)
    }

    /// Score vector of the spanning subdigraph keeping only the arcs in `f`.
    pub fn subdigraph_score(&self, f: &EdgeSubset) -> Result<IntVector> {
        self.graph.check_subset(f)?;
        Ok(self.subdigraph_score_unchecked(f.bits()))
    }

    fn subdigraph_score_unchecked(&self, keep: u64) -> IntVector {
        let mut s = IntVector::zeros(self.graph.num_vertices());
        for e in 0..self.graph.num_edges() {
            if keep >> e & 1 == 1 {
                let (t, h) = self.arc(e);
                s[t] += 1;
                s[h] -= 1;
            }
        }
        s
    }

    /// Vertices reachable from `source` along directed paths, `source` included.
    pub fn reachable_set(&self, source: usize) -> Result<BTreeSet<usize>> {
        self.graph.check_vertex(source)?;
        let parents = self.bfs(source);
        Ok((0..self.graph.num_vertices())
            .filter(|&v| v == source || parents[v].is_some())
            .collect())
    }

    // BFS tree from `source` as (parent vertex, edge) per vertex, scanning
    // out-arcs by increasing head index, then edge id.
    fn bfs(&self, source: usize) -> Vec<Option<(usize, EdgeId)>> {
        let n = self.graph.num_vertices();
        let mut out: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
        for e in 0..self.graph.num_edges() {
            let (t, h) = self.arc(e);
            if t != h {
                out[t].push((h, e));
            }
        }
        for list in &mut out {
            list.sort_unstable();
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &out[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        parent
    }

    /// Reverses every arc of a shortest directed path `from => to` (BFS,
    /// lowest vertex index first). Outdegree of `from` drops by one, that of
    /// `to` grows by one, every other outdegree is unchanged.
    pub fn reverse_directed_path(&self, from: usize, to: usize) -> Result<Orientation<'g>> {
        self.graph.check_vertex(from)?;
        self.graph.check_vertex(to)?;
        if from == to {
            return Err(Error::SameVertex(from));
        }
        let parent = self.bfs(from);
        if parent[to].is_none() {
            return Err(Error::NoDirectedPath { from, to });
        }
        let mut flipped = self.reversed;
        let mut at = to;
        while at != from {
            let (prev, e) = parent[at].expect("on BFS tree");
            flipped ^= 1 << e;
            at = prev;
        }
        Ok(Orientation {
            graph: self.graph,
            reversed: flipped,
        })
    }

    /// `O^F`: the non-loop edges of `f` change direction; loops stay put.
    pub fn flip_set(&self, f: &EdgeSubset) -> Result<Orientation<'g>> {
        self.graph.check_subset(f)?;
        Ok(Orientation {
            graph: self.graph,
            reversed: self.reversed ^ (f.bits() & !loop_mask(self.graph)),
        })
    }
}

/// All `2^(non-loop edges)` orientations, ordered so that their bit strings
/// ascend lexicographically.
pub fn enumerate_orientations(
    g: &Multigraph,
    cap: EnumerationCap,
) -> Result<impl Iterator<Item = Orientation<'_>>> {
    let free = non_loop_edges(g);
    cap.check(free.len())?;
    let k = free.len();
    Ok((0..1u64 << k).map(move |counter| {
        let mut reversed = 0u64;
        for (j, &e) in free.iter().enumerate() {
            if counter >> (k - 1 - j) & 1 == 1 {
                reversed |= 1 << e;
            }
        }
        Orientation { graph: g, reversed }
    }))
}

#[derive(Clone, Copy)]
enum VectorKind {
    Out,
    In,
    Score,
}

// Distinct vectors of one kind over all orientations; walks reversal sets of
// the non-loop edges in Gray order, keeping outdegrees current.
fn distinct_vectors(
    g: &Multigraph,
    cap: EnumerationCap,
    kind: VectorKind,
) -> Result<rustc_hash::FxHashMap<Vec<i32>, u64>> {
    let free = non_loop_edges(g);
    cap.check(free.len())?;
    let deg: Vec<i32> = g.degrees().iter().map(|&d| d as i32).collect();
    let ends: Vec<(usize, usize)> = free
        .iter()
        .map(|&e| (g.edges()[e].u(), g.edges()[e].v()))
        .collect();
    let n = g.num_vertices();
    let base: Vec<i32> = {
        let mut out = vec![0; n];
        for e in g.edges() {
            out[e.u()] += 1;
        }
        out
    };
    Ok(gray_tally(
        free.len(),
        |mask| {
            let mut out = base.clone();
            let mut rev = 0u64;
            for (j, &(u, v)) in ends.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    out[u] -= 1;
                    out[v] += 1;
                    rev |= 1 << j;
                }
            }
            (out, rev)
        },
        |(out, rev), j| {
            let (u, v) = ends[j];
            if *rev >> j & 1 == 1 {
                out[u] += 1;
                out[v] -= 1;
            } else {
                out[u] -= 1;
                out[v] += 1;
            }
            *rev ^= 1 << j;
        },
        |(out, _)| match kind {
            VectorKind::Out => out.clone(),
            VectorKind::In => out.iter().zip(&deg).map(|(o, d)| d - o).collect(),
            VectorKind::Score => out.iter().zip(&deg).map(|(o, d)| 2 * o - d).collect(),
        },
    ))
}

fn to_int_vector(v: Vec<i32>) -> IntVector {
    v.into_iter().map(i64::from).collect()
}

/// Number of distinct outdegree vectors over all orientations.
pub fn count_distinct_outdeg(g: &Multigraph, cap: EnumerationCap) -> Result<BigUint> {
    Ok(BigUint::from(
        distinct_vectors(g, cap, VectorKind::Out)?.len(),
    ))
}

/// Number of distinct indegree vectors over all orientations.
pub fn count_distinct_indeg(g: &Multigraph, cap: EnumerationCap) -> Result<BigUint> {
    Ok(BigUint::from(
        distinct_vectors(g, cap, VectorKind::In)?.len(),
    ))
}

/// Number of distinct score vectors over all orientations.
pub fn count_distinct_score(g: &Multigraph, cap: EnumerationCap) -> Result<BigUint> {
    Ok(BigUint::from(
        distinct_vectors(g, cap, VectorKind::Score)?.len(),
    ))
}

/// The distinct outdegree vectors, sorted.
pub fn outdegree_vectors(g: &Multigraph, cap: EnumerationCap) -> Result<BTreeSet<IntVector>> {
    Ok(distinct_vectors(g, cap, VectorKind::Out)?
        .into_keys()
        .map(to_int_vector)
        .collect())
}

fn subdigraph_tally(
    o: &Orientation<'_>,
    cap: EnumerationCap,
) -> Result<rustc_hash::FxHashMap<Vec<i32>, u64>> {
    let g = o.graph();
    cap.check(g.num_edges())?;
    // loops never change a score, so only non-loop arcs are walked
    let arcs: Vec<(usize, usize)> = non_loop_edges(g).into_iter().map(|e| o.arc(e)).collect();
    let n = g.num_vertices();
    Ok(gray_tally(
        arcs.len(),
        |mask| {
            let mut s = vec![0i32; n];
            for (j, &(t, h)) in arcs.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    s[t] += 1;
                    s[h] -= 1;
                }
            }
            (s, mask)
        },
        |(s, mask), j| {
            let (t, h) = arcs[j];
            let sign = if *mask >> j & 1 == 1 { -1 } else { 1 };
            s[t] += sign;
            s[h] -= sign;
            *mask ^= 1 << j;
        },
        |(s, _)| s.clone(),
    ))
}

/// `{ score of G_O[F] : F a subset of E }`, sorted.
pub fn subdigraph_score_vectors(
    o: &Orientation<'_>,
    cap: EnumerationCap,
) -> Result<BTreeSet<IntVector>> {
    Ok(subdigraph_tally(o, cap)?
        .into_keys()
        .map(to_int_vector)
        .collect())
}

/// Size of [`subdigraph_score_vectors`] without materializing the set.
pub fn count_subdigraph_score_vectors(o: &Orientation<'_>, cap: EnumerationCap) -> Result<usize> {
    Ok(subdigraph_tally(o, cap)?.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FiberVerdict {
    /// Pairs `(a - j, b + j)` for `j` in `0..=k`, no gaps.
    Interval {
        k: usize,
    },
    Empty,
    /// Some antidiagonal step is missing.
    Gapped,
}

/// Outdegree vectors agreeing with a fixed tail, projected onto the two
/// distinguished vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    /// `(outdeg(v_a), outdeg(v_b))`, sorted by decreasing first coordinate.
    pub pairs: Vec<(i64, i64)>,
    #[serde(flatten)]
    pub verdict: FiberVerdict,
}

/// All outdegree vectors of a graph, kept for repeated fiber queries.
#[derive(Debug, Clone)]
pub struct OutdegreeFibers {
    n: usize,
    vectors: BTreeSet<IntVector>,
}

impl OutdegreeFibers {
    pub fn new(g: &Multigraph, cap: EnumerationCap) -> Result<Self> {
        Ok(OutdegreeFibers {
            n: g.num_vertices(),
            vectors: outdegree_vectors(g, cap)?,
        })
    }

    pub fn vectors(&self) -> &BTreeSet<IntVector> {
        &self.vectors
    }

    /// Vertices other than `a` and `b`, in index order: the tail slots.
    pub fn tail_vertices(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| v != a && v != b).collect()
    }

    pub fn check(&self, a: usize, b: usize, tail: &[i64]) -> Result<FiberReport> {
        for v in [a, b] {
            if v >= self.n {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    vertex_count: self.n,
                });
            }
        }
        if a == b {
            return Err(Error::SameVertex(a));
        }
        let rest = self.tail_vertices(a, b);
        if tail.len() != rest.len() {
            return Err(Error::BadTailLength {
                expected: rest.len(),
                found: tail.len(),
            });
        }
        let mut pairs: Vec<(i64, i64)> = self
            .vectors
            .iter()
            .filter(|o| rest.iter().zip(tail).all(|(&v, &t)| o[v] == t))
            .map(|o| (o[a], o[b]))
            .collect();
        pairs.sort_unstable_by(|x, y| y.cmp(x));
        pairs.dedup();
        Ok(FiberReport {
            verdict: fiber_verdict(&pairs),
            pairs,
        })
    }
}

fn fiber_verdict(pairs: &[(i64, i64)]) -> FiberVerdict {
    let Some(&(top, bottom)) = pairs.first() else {
        return FiberVerdict::Empty;
    };
    let contiguous = pairs
        .iter()
        .enumerate()
        .all(|(j, &p)| p == (top - j as i64, bottom + j as i64));
    if contiguous {
        FiberVerdict::Interval { k: pairs.len() - 1 }
    } else {
        FiberVerdict::Gapped
    }
}

/// Checks that the outdegree vectors of `g` whose entries off `a`, `b`
/// equal `tail` (in vertex order) meet the `(a, b)` plane in one unbroken
/// antidiagonal run.
pub fn fiber_interval_check(
    g: &Multigraph,
    a: usize,
    b: usize,
    tail: &[i64],
    cap: EnumerationCap,
) -> Result<FiberReport> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(Error::SameVertex(a));
    }
    let expected = g.num_vertices() - 2;
    if tail.len() != expected {
        return Err(Error::BadTailLength {
            expected,
            found: tail.len(),
        });
    }
    OutdegreeFibers::new(g, cap)?.check(a, b, tail)
}
