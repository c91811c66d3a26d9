//! Independent cross-checks for the degree computation.
//!
//! [`vandermonde_degree`] evaluates the older formula: the coefficient of the
//! staircase monomial `x_0^n x_1^{n-1} ... x_k^{n-k}` in the same bundle
//! product times the Vandermonde `prod_{i<j} (x_i - x_j)`, with no factorial
//! division. [`naive_coefficient`] expands a product of linear forms without
//! truncation in a sparse map and shares no code with the dense kernel.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{FanoError, Result};
use crate::invariants::{bundle_factors, nonnegative_delta, FanoProblem, Integrand};
use crate::polyring::{ExponentVector, LinearForm};

/// `x_i - x_j` for `i < j`, lexicographic in `(i, j)`.
pub fn vandermonde_forms(num_vars: usize) -> Vec<LinearForm> {
    (0..num_vars)
        .flat_map(|i| (i + 1..num_vars).map(move |j| (i, j)))
        .map(|(i, j)| LinearForm::difference(num_vars, i, j))
        .collect()
}

/// The Vandermonde integrand with target `x_0^n x_1^{n-1} ... x_k^{n-k}`.
pub fn vandermonde_integrand(p: &FanoProblem) -> Result<Integrand> {
    let delta = nonnegative_delta(p)?;
    let mut factors = bundle_factors(p, delta);
    factors.extend(vandermonde_forms(p.num_vars()));
    let target = ExponentVector::staircase(p.num_vars(), p.n())
        .expect("n >= k + 1 > k, checked at construction");
    Ok(Integrand { factors, target })
}

/// Plücker degree via the Vandermonde/staircase formula.
pub fn vandermonde_degree(p: &FanoProblem) -> Result<BigInt> {
    vandermonde_integrand(p)?.coefficient()
}

/// Sparse polynomial with unbounded exponents. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparsePoly {
    pub fn constant(num_vars: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; num_vars], c);
        }
        SparsePoly { terms }
    }

    pub fn from_linear_form(f: &LinearForm) -> Self {
        let n = f.num_vars();
        let terms = f
            .coefficients()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(j, &a)| {
                let mut e = vec![0; n];
                e[j] = 1;
                (e, BigInt::from(a))
            })
            .collect();
        SparsePoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Full product, no truncation.
    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e, a) in &self.terms {
            for (f, b) in &other.terms {
                let sum: Vec<u32> = e.iter().zip(f).map(|(x, y)| x + y).collect();
                *terms.entry(sum).or_default() += a * b;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        SparsePoly { terms }
    }
}

/// Coefficient of `target` in `prod(factors) * base^exp`, by full expansion.
///
/// Meant for desk-scale products of at most a couple of dozen linear forms.
/// A product whose total degree differs from the target's cannot contain it,
/// which signals a caller bug and is reported as [`FanoError::DegreeMismatch`].
pub fn naive_coefficient(
    factors: &[LinearForm],
    extra_power: Option<(&LinearForm, u32)>,
    target: &ExponentVector,
) -> Result<BigInt> {
    let num_vars = target.len();
    for f in factors.iter().chain(extra_power.map(|(f, _)| f)) {
        if f.num_vars() != num_vars {
            return Err(FanoError::DimensionMismatch {
                ring: num_vars,
                form: f.num_vars(),
            });
        }
    }
    let product_degree = factors.len() as u64 + extra_power.map_or(0, |(_, e)| u64::from(e));
    if product_degree != target.total_degree() {
        return Err(FanoError::DegreeMismatch {
            product: product_degree,
            target: target.total_degree(),
        });
    }
    let mut acc = SparsePoly::constant(num_vars, BigInt::from(1));
    for f in factors {
        acc = acc.mul(&SparsePoly::from_linear_form(f));
    }
    if let Some((f, e)) = extra_power {
        let base = SparsePoly::from_linear_form(f);
        for _ in 0..e {
            acc = acc.mul(&base);
        }
    }
    Ok(acc.coefficient(target.as_slice()))
}
