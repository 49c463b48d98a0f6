//! Test-only oracles and corpora. Nothing here calls into the counting code
//! under test; only graph construction comes from the library.
#![allow(dead_code)]

use forestry::generators::{book, complete, complete_bipartite, cycle, path, random_multigraph};
use forestry::Multigraph;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Whether the edges picked by `mask` contain a cycle, by DFS over the
/// chosen multigraph. A loop or a repeated pair is a cycle.
pub fn has_cycle(g: &Multigraph, mask: u64) -> bool {
    let n = g.num_vertices();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        if mask >> i & 1 == 1 {
            if e.u() == e.v() {
                return true;
            }
            adj[e.u()].push((e.v(), i));
            adj[e.v()].push((e.u(), i));
        }
    }
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![(root, usize::MAX)];
        while let Some((x, via)) = stack.pop() {
            for &(y, e) in &adj[x] {
                if e == via {
                    continue;
                }
                if seen[y] {
                    return true;
                }
                seen[y] = true;
                stack.push((y, e));
            }
        }
    }
    false
}

/// Forests by checking each of the `2^m` subsets with [`has_cycle`].
pub fn forests_by_dfs(g: &Multigraph) -> u64 {
    (0..1u64 << g.num_edges())
        .filter(|&mask| !has_cycle(g, mask))
        .count() as u64
}

/// Determinant of an integer matrix by fraction-free elimination.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Spanning trees of the subgraph induced on `verts`, by the matrix-tree
/// theorem. Loops are ignored, parallel edges counted.
pub fn spanning_trees_on(g: &Multigraph, verts: &[usize]) -> BigUint {
    let k = verts.len();
    if k <= 1 {
        return BigUint::one();
    }
    let mut index = vec![usize::MAX; g.num_vertices()];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    let mut lap = vec![vec![BigInt::zero(); k]; k];
    for e in g.edges() {
        let (a, b) = (index[e.u()], index[e.v()]);
        if e.u() == e.v() || a == usize::MAX || b == usize::MAX {
            continue;
        }
        lap[a][a] += 1;
        lap[b][b] += 1;
        lap[a][b] -= 1;
        lap[b][a] -= 1;
    }
    let minor: Vec<Vec<BigInt>> = lap[1..].iter().map(|row| row[1..].to_vec()).collect();
    let det = bareiss_det(minor);
    assert!(!det.is_negative());
    det.to_biguint().unwrap()
}

pub fn spanning_trees(g: &Multigraph) -> BigUint {
    let all: Vec<usize> = (0..g.num_vertices()).collect();
    spanning_trees_on(g, &all)
}

/// Forests by splitting the vertex set into tree blocks: `F(S)` sums
/// `trees(G[T]) * F(S \ T)` over blocks `T` holding the lowest vertex of
/// `S`. Runs in `3^n`, independent of the edge count.
pub fn forests_by_vertex_partition(g: &Multigraph) -> BigUint {
    let n = g.num_vertices();
    assert!(n <= 16);
    let full = (1usize << n) - 1;
    let verts_of = |s: usize| -> Vec<usize> { (0..n).filter(|&v| s >> v & 1 == 1).collect() };
    let trees: Vec<BigUint> = (0..=full)
        .map(|s| spanning_trees_on(g, &verts_of(s)))
        .collect();
    let mut f = vec![BigUint::zero(); full + 1];
    f[0] = BigUint::one();
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut total = BigUint::zero();
        // T = low | sub for every sub of rest
        let mut sub = rest;
        loop {
            let t = low | sub;
            total += &trees[t] * &f[s ^ t];
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        f[s] = total;
    }
    f[full].clone()
}

/// Seeded random multigraphs with `n <= max_n` and `m <= max_m`, loops in
/// two thirds of them, followed by a few named graphs.
pub fn corpus(count: usize, max_n: usize, max_m: usize) -> Vec<Multigraph> {
    let mut out = vec![
        Multigraph::edgeless(1),
        Multigraph::edgeless(3),
        cycle(1).unwrap(),
        cycle(2).unwrap(),
        cycle(3).unwrap(),
        cycle(4).unwrap(),
        cycle(5).unwrap(),
        path(4).unwrap(),
        complete(4).unwrap(),
        complete_bipartite(2, 3).unwrap(),
        book(3, 2).unwrap(),
        Multigraph::new(3, [(0, 1), (0, 1), (1, 2), (2, 2), (0, 0)]).unwrap(),
    ];
    out.retain(|g| g.num_vertices() <= max_n && g.num_edges() <= max_m);
    let mut i = 0u64;
    while out.len() < count {
        let n = 1 + (i as usize % max_n);
        let m = (i as usize * 7 + 3) % (max_m + 1);
        let loops = !i.is_multiple_of(3);
        if let Ok(g) = random_multigraph(n, m, loops, 0x5eed_0000 + i) {
            out.push(g);
        }
        i += 1;
    }
    out
}

pub fn loop_free(g: &Multigraph) -> bool {
    g.num_loops() == 0
}
