use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use rayon::prelude::*;

use super::polynomial::TuttePolynomial;
use crate::cap::EnumerationCap;
use crate::dsu::RollbackDsu;
use crate::error::Result;
use crate::multigraph::Multigraph;

// Edges fixed per parallel task; the rest are walked depth-first.
const SPLIT_EDGES: usize = 8;

/// Counts of edge subsets by `(k(A) - k(E), k(A) + |A| - |V|)`, stored
/// densely with the second index fastest.
struct RankHistogram {
    corank_max: usize,
    nullity_max: usize,
    counts: Vec<u64>,
}

impl RankHistogram {
    fn new(g: &Multigraph) -> Self {
        let corank_max = g.num_vertices();
        let nullity_max = g.num_edges();
        RankHistogram {
            corank_max,
            nullity_max,
            counts: vec![0; (corank_max + 1) * (nullity_max + 1)],
        }
    }

    fn bump(&mut self, corank: usize, nullity: usize) {
        self.counts[corank * (self.nullity_max + 1) + nullity] += 1;
    }

    fn merge(mut self, other: RankHistogram) -> RankHistogram {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }

    fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        let w = self.nullity_max + 1;
        (0..=self.corank_max)
            .flat_map(move |a| (0..w).map(move |b| (a, b)))
            .map(move |(a, b)| (a, b, self.counts[a * w + b]))
            .filter(|&(_, _, c)| c > 0)
    }
}

fn rank_histogram(g: &Multigraph) -> RankHistogram {
    let n = g.num_vertices();
    let m = g.num_edges();
    let k_full = g.num_components();
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u(), e.v())).collect();
    let split = m.min(SPLIT_EDGES);

    fn walk(
        i: usize,
        size: usize,
        edges: &[(usize, usize)],
        dsu: &mut RollbackDsu,
        n: usize,
        k_full: usize,
        hist: &mut RankHistogram,
    ) {
        if i == edges.len() {
            let k = dsu.components();
            hist.bump(k - k_full, k + size - n);
            return;
        }
        walk(i + 1, size, edges, dsu, n, k_full, hist);
        let (u, v) = edges[i];
        dsu.union(u, v);
        walk(i + 1, size + 1, edges, dsu, n, k_full, hist);
        dsu.undo();
    }

    (0..1u64 << split)
        .into_par_iter()
        .map(|prefix| {
            let mut hist = RankHistogram::new(g);
            let mut dsu = RollbackDsu::new(n);
            let mut size = 0;
            for (i, &(u, v)) in edges[..split].iter().enumerate() {
                if prefix >> i & 1 == 1 {
                    dsu.union(u, v);
                    size += 1;
                }
            }
            walk(split, size, &edges, &mut dsu, n, k_full, &mut hist);
            hist
        })
        .reduce(|| RankHistogram::new(g), RankHistogram::merge)
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for k in 1..=n {
        let next = &row[k - 1] * BigInt::from(n - k + 1) / BigInt::from(k);
        row.push(next);
    }
    row
}

/// `T(x, y) = sum over A of (x-1)^(k(A)-k(E)) (y-1)^(k(A)+|A|-|V|)`, each
/// power expanded binomially into the monomial basis.
pub fn tutte_subset_expansion(g: &Multigraph, cap: EnumerationCap) -> Result<TuttePolynomial> {
    cap.check(g.num_edges())?;
    let hist = rank_histogram(g);
    let mut acc = std::collections::BTreeMap::<(u32, u32), BigInt>::new();
    for (a, b, count) in hist.entries() {
        let row_a = binomial_row(a);
        let row_b = binomial_row(b);
        let count = BigInt::from(count);
        for (i, ca) in row_a.iter().enumerate() {
            for (j, cb) in row_b.iter().enumerate() {
                // sign of (-1)^(a-i) (-1)^(b-j)
                let mut term = &count * ca * cb;
                if (a - i + b - j) % 2 == 1 {
                    term = -term;
                }
                *acc.entry((i as u32, j as u32)).or_default() += term;
            }
        }
    }
    let mut t = TuttePolynomial::zero();
    for ((i, j), c) in acc {
        assert!(!c.is_negative(), "negative Tutte coefficient at ({i}, {j})");
        t.add_term(i, j, c.to_biguint().unwrap());
    }
    Ok(t)
}

/// Number of edge subsets `A` with `k(A) = |V| - |A|`, i.e. acyclic
/// spanning subgraphs, found by visiting all `2^|E|` subsets.
pub fn count_forests_brute(g: &Multigraph, cap: EnumerationCap) -> Result<BigUint> {
    cap.check(g.num_edges())?;
    let hist = rank_histogram(g);
    let forests: u64 = hist
        .entries()
        .filter(|&(_, nullity, _)| nullity == 0)
        .map(|(_, _, c)| c)
        .sum();
    Ok(BigUint::from(forests))
}
