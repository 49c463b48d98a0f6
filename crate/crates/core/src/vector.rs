use std::fmt;
use std::ops::{Deref, DerefMut};

use serde::{Deserialize, Serialize};

/// An ordered per-vertex integer tuple: degree sequences, in/outdegree and
/// score vectors all live here. Entry `i` belongs to vertex `i` (0-based).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(pub Vec<i64>);

impl IntVector {
    pub fn zeros(n: usize) -> Self {
        IntVector(vec![0; n])
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Deref for IntVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl DerefMut for IntVector {
    fn deref_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(v: [i64; N]) -> Self {
        IntVector(v.to_vec())
    }
}

impl FromIterator<i64> for IntVector {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        IntVector(iter.into_iter().collect())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
