//! Graph families: fixed constructions and seeded random ones.
//!
//! Random generators draw from SplitMix64 (state initialised to the seed;
//! each step adds `0x9e3779b97f4a7c15` and applies the standard finaliser).
//! Draws are mapped as follows so that other implementations can reproduce
//! the exact same graphs:
//!
//! * `below(k)`: draw `x`, reject while `x >= k * floor(2^64 / k)`, return `x % k`;
//! * `unit()`: `(x >> 11) * 2^-53`, a double in `[0, 1)`.

use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

pub type Seed = u64;

pub(crate) struct Prng(SplitMix64);

impl Prng {
    pub fn new(seed: Seed) -> Self {
        Prng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn below(&mut self, k: u64) -> u64 {
        assert!(k > 0);
        let zone = (u64::MAX / k) * k;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % k;
            }
        }
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// `C_n`. `n = 1` is a single loop and `n = 2` a pair of parallel edges.
pub fn cycle(n: usize) -> Result<Multigraph> {
    if n == 0 {
        return Err(invalid("cycle length must be at least 1"));
    }
    Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Multigraph> {
    if n == 0 {
        return Err(invalid("path needs at least 1 vertex"));
    }
    Multigraph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Multigraph> {
    if n == 0 {
        return Err(invalid("complete graph needs at least 1 vertex"));
    }
    Multigraph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{m,n}` with left side `0..m` and right side `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Multigraph> {
    if m == 0 || n == 0 {
        return Err(invalid("complete bipartite sides must be nonempty"));
    }
    Multigraph::new(m + n, (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))))
}

/// `pages` cycles of length `page_len` sharing the edge `{0, 1}`.
///
/// This glued-cycle construction is one reading of "generalized book graph";
/// other authors glue along longer paths.
pub fn book(page_len: usize, pages: usize) -> Result<Multigraph> {
    if page_len < 3 || pages == 0 {
        return Err(invalid("book needs page length >= 3 and at least 1 page"));
    }
    let inner = page_len - 2;
    let mut g = Multigraph::edgeless(2 + pages * inner);
    g.push_edge(0, 1)?;
    for p in 0..pages {
        let first = 2 + p * inner;
        g.push_edge(0, first)?;
        for k in 1..inner {
            g.push_edge(first + k - 1, first + k)?;
        }
        g.push_edge(first + inner - 1, 1)?;
    }
    Ok(g)
}

/// Connected cactus on `n` vertices grown from vertex 0. Each step picks an
/// existing anchor uniformly, then with a fair coin either hangs a pendant
/// edge or closes a new cycle of length 3..=5 (capped by the vertices still
/// missing) through the anchor.
pub fn random_cactus(n: usize, seed: Seed) -> Result<Multigraph> {
    if n == 0 {
        return Err(invalid("cactus needs at least 1 vertex"));
    }
    let mut rng = Prng::new(seed);
    let mut g = Multigraph::edgeless(n);
    let mut count = 1;
    while count < n {
        let anchor = rng.below(count as u64) as usize;
        let remaining = n - count;
        if remaining >= 2 && rng.below(2) == 1 {
            let max_len = (remaining + 1).min(5);
            let len = 3 + rng.below((max_len - 2) as u64) as usize;
            let mut prev = anchor;
            for _ in 0..len - 1 {
                g.push_edge(prev, count)?;
                prev = count;
                count += 1;
            }
            g.push_edge(prev, anchor)?;
        } else {
            g.push_edge(anchor, count)?;
            count += 1;
        }
    }
    Ok(g)
}

/// Each of the `m * n` left-right pairs becomes an edge independently with
/// probability `edge_prob`, visited left-major.
pub fn random_bipartite(m: usize, n: usize, edge_prob: f64, seed: Seed) -> Result<Multigraph> {
    if m == 0 || n == 0 {
        return Err(invalid("bipartite sides must be nonempty"));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(invalid(format!(
            "edge probability {edge_prob} not in [0, 1]"
        )));
    }
    let mut rng = Prng::new(seed);
    let mut g = Multigraph::edgeless(m + n);
    for i in 0..m {
        for j in 0..n {
            if rng.unit() < edge_prob {
                g.push_edge(i, m + j)?;
            }
        }
    }
    Ok(g)
}

/// `edge_count` left-right pairs drawn uniformly with replacement, so
/// parallel edges can occur.
pub fn random_bipartite_multigraph(
    m: usize,
    n: usize,
    edge_count: usize,
    seed: Seed,
) -> Result<Multigraph> {
    if m == 0 || n == 0 {
        return Err(invalid("bipartite sides must be nonempty"));
    }
    let mut rng = Prng::new(seed);
    let mut g = Multigraph::edgeless(m + n);
    for _ in 0..edge_count {
        let i = rng.below(m as u64) as usize;
        let j = rng.below(n as u64) as usize;
        g.push_edge(i, m + j)?;
    }
    Ok(g)
}

/// `edge_count` endpoint pairs drawn uniformly with replacement. Without
/// loops, pairs with equal endpoints are redrawn.
pub fn random_multigraph(
    n: usize,
    edge_count: usize,
    allow_loops: bool,
    seed: Seed,
) -> Result<Multigraph> {
    if n == 0 {
        return Err(invalid("multigraph needs at least 1 vertex"));
    }
    if n == 1 && !allow_loops && edge_count > 0 {
        return Err(invalid("a loopless graph on 1 vertex has no edges"));
    }
    let mut rng = Prng::new(seed);
    let mut g = Multigraph::edgeless(n);
    while g.num_edges() < edge_count {
        let u = rng.below(n as u64) as usize;
        let v = rng.below(n as u64) as usize;
        if allow_loops || u != v {
            g.push_edge(u, v)?;
        }
    }
    Ok(g)
}

/// True when the graph is connected and no edge lies on two cycles, i.e.
/// every block is a single edge or a cycle (loops and 2-cycles included).
pub fn is_cactus(g: &Multigraph) -> bool {
    if !g.is_connected() {
        return false;
    }
    blocks(g)
        .iter()
        .all(|(verts, edges)| *edges == 1 || *edges == *verts)
}

// Blocks as (vertex count, edge count). Loops form their own block.
fn blocks(g: &Multigraph) -> Vec<(usize, usize)> {
    struct Walk<'a> {
        adj: &'a [Vec<(usize, usize)>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<usize>,
        out: Vec<(usize, usize)>,
        edges: &'a [crate::multigraph::Edge],
    }
    impl Walk<'_> {
        fn visit(&mut self, x: usize, via: Option<usize>) {
            self.time += 1;
            self.disc[x] = self.time;
            self.low[x] = self.time;
            for &(y, e) in self.adj[x].iter() {
                if Some(e) == via || y == x {
                    continue;
                }
                if self.disc[y] == 0 {
                    self.stack.push(e);
                    self.visit(y, Some(e));
                    self.low[x] = self.low[x].min(self.low[y]);
                    if self.low[y] >= self.disc[x] {
                        let mut verts = std::collections::BTreeSet::new();
                        let mut count = 0;
                        while let Some(f) = self.stack.pop() {
                            count += 1;
                            verts.insert(self.edges[f].u());
                            verts.insert(self.edges[f].v());
                            if f == e {
                                break;
                            }
                        }
                        self.out.push((verts.len(), count));
                    }
                } else if self.disc[y] < self.disc[x] {
                    self.stack.push(e);
                    self.low[x] = self.low[x].min(self.disc[y]);
                }
            }
        }
    }
    let adj = g.adjacency();
    let n = g.num_vertices();
    let mut w = Walk {
        adj: &adj,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
        edges: g.edges(),
    };
    for v in 0..n {
        if w.disc[v] == 0 {
            w.visit(v, None);
        }
    }
    w.out
        .extend(g.edges().iter().filter(|e| e.is_loop()).map(|_| (1, 1)));
    w.out
}

/// A named graph family with its parameters, written `name:p1,p2,...`.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Book(usize, usize),
    RandomCactus(usize),
    RandomBipartite(usize, usize, f64),
    RandomBipartiteMulti(usize, usize, usize),
    RandomMultigraph(usize, usize, bool),
}

impl Family {
    pub fn is_random(&self) -> bool {
        matches!(
            self,
            Family::RandomCactus(..)
                | Family::RandomBipartite(..)
                | Family::RandomBipartiteMulti(..)
                | Family::RandomMultigraph(..)
        )
    }

    /// Builds the graph; `seed` is ignored by the deterministic families.
    pub fn generate(&self, seed: Seed) -> Result<Multigraph> {
        match *self {
            Family::Cycle(n) => cycle(n),
            Family::Path(n) => path(n),
            Family::Complete(n) => complete(n),
            Family::CompleteBipartite(m, n) => complete_bipartite(m, n),
            Family::Book(r, m) => book(r, m),
            Family::RandomCactus(n) => random_cactus(n, seed),
            Family::RandomBipartite(m, n, p) => random_bipartite(m, n, p, seed),
            Family::RandomBipartiteMulti(m, n, k) => random_bipartite_multigraph(m, n, k, seed),
            Family::RandomMultigraph(n, k, loops) => random_multigraph(n, k, loops, seed),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let params: Vec<&str> = if params.is_empty() {
            Vec::new()
        } else {
            params.split(',').map(str::trim).collect()
        };
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(invalid(format!(
                    "family {name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let int = |i: usize| -> Result<usize> {
            params[i]
                .parse()
                .map_err(|_| invalid(format!("bad integer {:?} in {s:?}", params[i])))
        };
        let family = match name {
            "cycle" => {
                want(1)?;
                Family::Cycle(int(0)?)
            }
            "path" => {
                want(1)?;
                Family::Path(int(0)?)
            }
            "complete" => {
                want(1)?;
                Family::Complete(int(0)?)
            }
            "complete_bipartite" => {
                want(2)?;
                Family::CompleteBipartite(int(0)?, int(1)?)
            }
            "book" => {
                want(2)?;
                Family::Book(int(0)?, int(1)?)
            }
            "random_cactus" => {
                want(1)?;
                Family::RandomCactus(int(0)?)
            }
            "random_bipartite" => {
                want(3)?;
                let p = params[2]
                    .parse()
                    .map_err(|_| invalid(format!("bad probability {:?}", params[2])))?;
                Family::RandomBipartite(int(0)?, int(1)?, p)
            }
            "random_bipartite_multi" => {
                want(3)?;
                Family::RandomBipartiteMulti(int(0)?, int(1)?, int(2)?)
            }
            "random_multigraph" => {
                want(3)?;
                let loops = match params[2] {
                    "true" | "loops" | "1" => true,
                    "false" | "noloops" | "0" => false,
                    other => return Err(invalid(format!("bad loop flag {other:?}"))),
                };
                Family::RandomMultigraph(int(0)?, int(1)?, loops)
            }
            other => return Err(invalid(format!("unknown family {other:?}"))),
        };
        // surface parameter errors at parse time
        family.generate(0)?;
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(m, n) => write!(f, "complete_bipartite:{m},{n}"),
            Family::Book(r, m) => write!(f, "book:{r},{m}"),
            Family::RandomCactus(n) => write!(f, "random_cactus:{n}"),
            Family::RandomBipartite(m, n, p) => write!(f, "random_bipartite:{m},{n},{p}"),
            Family::RandomBipartiteMulti(m, n, k) => {
                write!(f, "random_bipartite_multi:{m},{n},{k}")
            }
            Family::RandomMultigraph(n, k, l) => write!(f, "random_multigraph:{n},{k},{l}"),
        }
    }
}

/// Seed for instance `index` of a run started from `seed`: the
/// `index`-th output of a SplitMix64 stream seeded with `seed`.
pub fn instance_seed(seed: Seed, index: usize) -> Seed {
    let mut rng = Prng::new(seed);
    let mut out = 0;
    for _ in 0..=index {
        out = rng.next_u64();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_output() {
        // reference stream for seed 1234567 from the SplitMix64 author's code
        let mut rng = Prng::new(1234567);
        let expected = [
            6457827717110365317u64,
            3203168211198807973,
            9817491932198370423,
            4593380528125082431,
            16408922859458223821,
        ];
        for e in expected {
            assert_eq!(rng.next_u64(), e);
        }
    }

    #[test]
    fn cycles() {
        let c4 = cycle(4).unwrap();
        assert_eq!(c4.num_edges(), 4);
        assert!(c4.is_bipartite());
        assert!(!cycle(3).unwrap().is_bipartite());
        let c1 = cycle(1).unwrap();
        assert_eq!(
            (c1.num_vertices(), c1.num_edges(), c1.num_loops()),
            (1, 1, 1)
        );
        let c2 = cycle(2).unwrap();
        assert_eq!(c2.edges()[0], c2.edges()[1]);
        assert!(cycle(0).is_err());
    }

    #[test]
    fn standard_families() {
        assert_eq!(complete(3).unwrap(), {
            let mut e = cycle(3).unwrap().edges().to_vec();
            e.sort();
            Multigraph::new(3, e.iter().map(|e| (e.u(), e.v()))).unwrap()
        });
        assert_eq!(complete_bipartite(1, 1).unwrap(), path(2).unwrap());
        assert_eq!(complete(5).unwrap().num_edges(), 10);
        assert!(complete(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
        assert!(path(0).is_err());
    }

    #[test]
    fn books() {
        let b31 = book(3, 1).unwrap();
        assert_eq!((b31.num_vertices(), b31.num_edges()), (3, 3));
        let b32 = book(3, 2).unwrap();
        assert_eq!((b32.num_vertices(), b32.num_edges()), (4, 5));
        let b53 = book(5, 3).unwrap();
        assert_eq!(b53.num_vertices(), 2 + 3 * 3);
        for r in 3..8 {
            for m in 1..4 {
                assert_eq!(book(r, m).unwrap().is_bipartite(), r % 2 == 0);
            }
        }
        assert!(book(2, 1).is_err());
        assert!(book(3, 0).is_err());
    }

    #[test]
    fn random_edge_cases() {
        assert_eq!(
            random_bipartite(2, 2, 1.0, 99).unwrap(),
            complete_bipartite(2, 2).unwrap()
        );
        assert_eq!(random_bipartite(2, 3, 0.0, 5).unwrap().num_edges(), 0);
        assert!(random_bipartite(2, 2, 1.5, 0).is_err());
        assert_eq!(random_cactus(1, 7).unwrap(), Multigraph::edgeless(1));
        let loops = random_multigraph(1, 3, true, 11).unwrap();
        assert_eq!((loops.num_edges(), loops.num_loops()), (3, 3));
        assert!(random_multigraph(1, 1, false, 0).is_err());
        assert!(random_multigraph(0, 0, true, 0).is_err());
    }

    #[test]
    fn random_generators_are_deterministic() {
        for seed in 0..20 {
            assert_eq!(
                random_cactus(9, seed).unwrap(),
                random_cactus(9, seed).unwrap()
            );
            assert_eq!(
                random_multigraph(5, 8, true, seed).unwrap(),
                random_multigraph(5, 8, true, seed).unwrap()
            );
        }
        assert_ne!(random_cactus(12, 1).unwrap(), random_cactus(12, 2).unwrap());
    }

    #[test]
    fn cactus_checker() {
        assert!(is_cactus(&cycle(5).unwrap()));
        assert!(is_cactus(&path(4).unwrap()));
        assert!(is_cactus(&cycle(1).unwrap()));
        assert!(is_cactus(&cycle(2).unwrap()));
        assert!(!is_cactus(&book(3, 2).unwrap()));
        assert!(!is_cactus(&complete(4).unwrap()));
        assert!(!is_cactus(&Multigraph::edgeless(2)));
        // two triangles sharing a vertex
        let bowtie = Multigraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert!(is_cactus(&bowtie));
        // triple edge: two cycles through each edge
        assert!(!is_cactus(
            &Multigraph::new(2, [(0, 1), (0, 1), (0, 1)]).unwrap()
        ));
    }

    #[test]
    fn random_outputs_satisfy_family_invariants() {
        for seed in 0..200 {
            let c = random_cactus(1 + (seed as usize % 12), seed).unwrap();
            assert!(is_cactus(&c), "seed {seed}");
            assert_eq!(c.num_vertices(), 1 + (seed as usize % 12));
            assert!(random_bipartite(3, 4, 0.5, seed).unwrap().is_bipartite());
            assert!(random_bipartite_multigraph(3, 4, 9, seed)
                .unwrap()
                .is_bipartite());
        }
    }

    #[test]
    fn family_parse_roundtrip() {
        for s in [
            "cycle:4",
            "path:3",
            "complete:5",
            "complete_bipartite:2,3",
            "book:3,2",
            "random_cactus:6",
            "random_bipartite:3,3,0.5",
            "random_bipartite_multi:3,4,10",
            "random_multigraph:4,6,true",
        ] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("cycle:0".parse::<Family>().is_err());
        assert!("cycle".parse::<Family>().is_err());
        assert!("hypercube:3".parse::<Family>().is_err());
        assert!("random_bipartite:2,2,2".parse::<Family>().is_err());
    }
}
