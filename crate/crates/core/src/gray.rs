//! Reflected Gray-code walk over all subsets of `k` items, collecting a key
//! per subset with multiplicities. Large walks are split on the top items
//! and run in parallel.

use std::hash::Hash;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

const SERIAL_ITEMS: usize = 16;
const MAX_SPLIT: usize = 10;

/// `init(mask)` builds the state for the subset `mask` (bit `i` = item `i`),
/// `toggle` flips one item in or out, `key` reads the state.
pub(crate) fn gray_tally<S, K, I, T, F>(k: usize, init: I, toggle: T, key: F) -> FxHashMap<K, u64>
where
    K: Hash + Eq + Send,
    I: Fn(u64) -> S + Sync,
    T: Fn(&mut S, usize) + Sync,
    F: Fn(&S) -> K + Sync,
{
    let split = if k > SERIAL_ITEMS {
        (k - SERIAL_ITEMS).min(MAX_SPLIT)
    } else {
        0
    };
    let low = k - split;
    let run = |prefix: u64| {
        let mut tally = FxHashMap::default();
        let mut state = init(prefix << low);
        *tally.entry(key(&state)).or_insert(0) += 1;
        for step in 1..(1u64 << low) {
            toggle(&mut state, step.trailing_zeros() as usize);
            *tally.entry(key(&state)).or_insert(0) += 1;
        }
        tally
    };
    if split == 0 {
        return run(0);
    }
    (0..1u64 << split)
        .into_par_iter()
        .map(run)
        .reduce(FxHashMap::default, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            for (k, c) in b {
                *a.entry(k).or_insert(0) += c;
            }
            a
        })
}
