//! Tutte polynomial by two independent routes, plus forest counting.
//!
//! [`tutte_subset_expansion`] sums over all edge subsets, and
//! [`tutte_deletion_contraction`] runs the classical recurrence with a memo.
//! [`t21`] evaluates `T(2, 1)` (the number of forests) with a memoized
//! recursion that never builds the polynomial. [`count_forests_brute`]
//! counts acyclic edge subsets directly.

mod deletion;
mod forests;
mod polynomial;
mod subsets;

pub use deletion::tutte_deletion_contraction;
pub use forests::{t21, t21_with_stats, T21Stats};
pub use polynomial::{PolynomialTerm, TuttePolynomial};
pub use subsets::{count_forests_brute, tutte_subset_expansion};

use num_bigint::{BigInt, BigUint};

/// Exact nonnegative count.
pub type BigCount = BigUint;

/// Exact evaluation `T(x, y)` at integer arguments.
pub fn evaluate(t: &TuttePolynomial, x: i64, y: i64) -> BigInt {
    t.evaluate(&BigInt::from(x), &BigInt::from(y))
}
