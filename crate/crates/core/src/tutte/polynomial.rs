use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Sparse bivariate polynomial with positive integer coefficients, keyed by
/// `(x exponent, y exponent)`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TuttePolynomial {
    terms: BTreeMap<(u32, u32), BigUint>,
}

/// One monomial in the JSON form; the coefficient is a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialTerm {
    pub i: u32,
    pub j: u32,
    pub coeff: String,
}

impl TuttePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigUint::one())
    }

    pub fn monomial(i: u32, j: u32, coeff: BigUint) -> Self {
        let mut t = Self::zero();
        t.add_term(i, j, coeff);
        t
    }

    pub fn add_term(&mut self, i: u32, j: u32, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.terms.entry((i, j)).or_default() += coeff;
    }

    pub fn add_assign(&mut self, other: &TuttePolynomial) {
        for (&(i, j), c) in &other.terms {
            self.add_term(i, j, c.clone());
        }
    }

    /// Multiplies by `x^a y^b`.
    pub fn shifted(&self, a: u32, b: u32) -> TuttePolynomial {
        TuttePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + a, j + b), c.clone()))
                .collect(),
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigUint {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigUint)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (&(i, j), c) in &self.terms {
            total += BigInt::from(c.clone()) * x.pow(i) * y.pow(j);
        }
        total
    }

    pub fn to_terms(&self) -> Vec<PolynomialTerm> {
        self.terms
            .iter()
            .map(|(&(i, j), c)| PolynomialTerm {
                i,
                j,
                coeff: c.to_str_radix(10),
            })
            .collect()
    }

    pub fn from_terms(terms: &[PolynomialTerm]) -> Result<Self, String> {
        let mut t = Self::zero();
        for term in terms {
            let c = BigUint::parse_bytes(term.coeff.as_bytes(), 10)
                .ok_or_else(|| format!("bad coefficient {:?}", term.coeff))?;
            if c.is_zero() {
                return Err(format!("zero coefficient at ({}, {})", term.i, term.j));
            }
            if t.terms.contains_key(&(term.i, term.j)) {
                return Err(format!("duplicate term ({}, {})", term.i, term.j));
            }
            t.add_term(term.i, term.j, c);
        }
        Ok(t)
    }
}

impl Serialize for TuttePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TuttePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<PolynomialTerm>::deserialize(d)?;
        TuttePolynomial::from_terms(&terms).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for TuttePolynomial {
    /// Highest total degree first, e.g. `x^3 + x^2 + x + y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (n, (i, j)) in keys.into_iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let c = &self.terms[&(i, j)];
            let mut parts = Vec::new();
            if !c.is_one() || (i == 0 && j == 0) {
                parts.push(c.to_string());
            }
            match i {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{j}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
