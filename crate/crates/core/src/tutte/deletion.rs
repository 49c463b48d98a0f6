use rustc_hash::FxHashMap;

use super::polynomial::TuttePolynomial;
use crate::multigraph::{Edge, Multigraph};

type Memo = FxHashMap<(usize, Vec<Edge>), TuttePolynomial>;

/// Full Tutte polynomial by deletion-contraction:
/// loop gives `y T(G-e)`, bridge gives `x T(G-e)`, any other edge gives
/// `T(G-e) + T(G/e)`, and an edgeless graph gives 1.
///
/// Subproblems are memoized on the vertex count plus the sorted edge list.
pub fn tutte_deletion_contraction(g: &Multigraph) -> TuttePolynomial {
    let mut memo = Memo::default();
    solve(&normalized(g), &mut memo)
}

fn normalized(g: &Multigraph) -> Multigraph {
    let mut edges: Vec<Edge> = g.edges().to_vec();
    edges.sort_unstable();
    Multigraph::new(g.num_vertices(), edges.iter().map(|e| (e.u(), e.v())))
        .expect("edges of a valid graph")
}

fn solve(g: &Multigraph, memo: &mut Memo) -> TuttePolynomial {
    if g.num_edges() == 0 {
        return TuttePolynomial::one();
    }
    let key = (g.num_vertices(), g.edges().to_vec());
    if let Some(t) = memo.get(&key) {
        return t.clone();
    }

    let loops = g.num_loops();
    let result = if loops > 0 {
        let rest = Multigraph::new(
            g.num_vertices(),
            g.edges()
                .iter()
                .filter(|e| !e.is_loop())
                .map(|e| (e.u(), e.v())),
        )
        .expect("edges of a valid graph");
        solve(&rest, memo).shifted(0, loops as u32)
    } else {
        let e = densest_edge(g);
        let minus = g.delete_edge(e).expect("valid edge");
        if g.is_bridge(e).expect("valid edge") {
            solve(&minus, memo).shifted(1, 0)
        } else {
            let over = normalized(&g.contract_edge(e).expect("non-loop edge"));
            let mut t = solve(&minus, memo);
            t.add_assign(&solve(&over, memo));
            t
        }
    };
    memo.insert(key, result.clone());
    result
}

/// Non-loop edge with the largest endpoint degree sum, lowest id on ties.
pub(super) fn densest_edge(g: &Multigraph) -> usize {
    let deg = g.degrees();
    let mut best = None;
    for (i, e) in g.edges().iter().enumerate() {
        if e.is_loop() {
            continue;
        }
        let score = deg[e.u()] + deg[e.v()];
        if best.is_none_or(|(s, _)| score > s) {
            best = Some((score, i));
        }
    }
    best.expect("graph has a non-loop edge").1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};
    use num_bigint::BigUint;

    fn poly(terms: &[(u32, u32, u32)]) -> TuttePolynomial {
        let mut t = TuttePolynomial::zero();
        for &(i, j, c) in terms {
            t.add_term(i, j, BigUint::from(c));
        }
        t
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(
            tutte_deletion_contraction(&path(3).unwrap()),
            poly(&[(2, 0, 1)])
        );
        assert_eq!(
            tutte_deletion_contraction(&cycle(3).unwrap()),
            poly(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)])
        );
        assert_eq!(
            tutte_deletion_contraction(&cycle(2).unwrap()),
            poly(&[(1, 0, 1), (0, 1, 1)])
        );
        assert_eq!(
            tutte_deletion_contraction(&Multigraph::edgeless(5)),
            TuttePolynomial::one()
        );
    }

    #[test]
    fn loops_multiply_by_y() {
        let g = Multigraph::new(2, [(0, 0), (0, 1), (1, 1)]).unwrap();
        assert_eq!(tutte_deletion_contraction(&g), poly(&[(1, 2, 1)]));
    }
}
