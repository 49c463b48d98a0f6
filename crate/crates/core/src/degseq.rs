//! Degree sequences of spanning subgraphs and the signed map that sends
//! them to score vectors when the graph is bipartite.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::cap::EnumerationCap;
use crate::error::{Error, Result};
use crate::gray::gray_tally;
use crate::multigraph::{Bipartition, Multigraph, Side};
use crate::vector::IntVector;

/// The distinct ordered degree tuples `deg_H` over all spanning subgraphs
/// `H` of one graph. Serializes as a sorted list of integer arrays.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegSeqSet {
    seqs: BTreeSet<IntVector>,
}

impl DegSeqSet {
    pub fn len(&self) -> usize {
        self.seqs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seqs.is_empty()
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        self.seqs.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &IntVector> {
        self.seqs.iter()
    }

    pub fn as_set(&self) -> &BTreeSet<IntVector> {
        &self.seqs
    }
}

fn tally(g: &Multigraph, cap: EnumerationCap) -> Result<rustc_hash::FxHashMap<Vec<u32>, u64>> {
    cap.check(g.num_edges())?;
    let ends: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u(), e.v())).collect();
    let n = g.num_vertices();
    Ok(gray_tally(
        ends.len(),
        |mask| {
            let mut deg = vec![0u32; n];
            for (j, &(u, v)) in ends.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            (deg, mask)
        },
        |(deg, mask), j| {
            let (u, v) = ends[j];
            if *mask >> j & 1 == 1 {
                deg[u] -= 1;
                deg[v] -= 1;
            } else {
                deg[u] += 1;
                deg[v] += 1;
            }
            *mask ^= 1 << j;
        },
        |(deg, _)| deg.clone(),
    ))
}

fn to_vector(d: Vec<u32>) -> IntVector {
    d.into_iter().map(i64::from).collect()
}

/// `{ deg_H : H spanning subgraph of g }` as ordered tuples.
pub fn enumerate_degree_sequences(g: &Multigraph, cap: EnumerationCap) -> Result<DegSeqSet> {
    Ok(DegSeqSet {
        seqs: tally(g, cap)?.into_keys().map(to_vector).collect(),
    })
}

pub fn count_degree_sequences(g: &Multigraph, cap: EnumerationCap) -> Result<BigUint> {
    Ok(BigUint::from(tally(g, cap)?.len()))
}

/// How many edge subsets realize each degree sequence.
pub fn degree_sequence_multiplicities(
    g: &Multigraph,
    cap: EnumerationCap,
) -> Result<BTreeMap<IntVector, u64>> {
    Ok(tally(g, cap)?
        .into_iter()
        .map(|(d, c)| (to_vector(d), c))
        .collect())
}

/// Keeps left entries and negates right entries.
pub fn phi(degseq: &IntVector, parts: &Bipartition) -> Result<IntVector> {
    if degseq.len() != parts.len() {
        return Err(Error::BadBipartition(format!(
            "partition covers {} vertices, sequence has {}",
            parts.len(),
            degseq.len()
        )));
    }
    Ok(degseq
        .iter()
        .zip(parts.sides())
        .map(|(&d, side)| match side {
            Side::Left => d,
            Side::Right => -d,
        })
        .collect())
}

/// `phi` applied to every member of a set.
pub fn phi_image(set: &DegSeqSet, parts: &Bipartition) -> Result<BTreeSet<IntVector>> {
    set.iter().map(|d| phi(d, parts)).collect()
}
