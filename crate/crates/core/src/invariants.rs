//! Expected dimension, hypothesis flags, Plücker degree and genus of the
//! Fano scheme `F_k(X)` of k-planes on a general complete intersection
//! `X` of multidegree `(d_1, ..., d_r)` in `P^n`.
//!
//! The degree is read off a coefficient of a product of linear forms in the
//! Chern roots `x_0, ..., x_k` of the tautological subbundle:
//!
//! ```text
//! prod_i prod_{a_0+...+a_k = d_i} (a_0 x_0 + ... + a_k x_k)
//!     * (x_0 + ... + x_k)^delta * prod_{i != j} (x_i - x_j)
//! ```
//!
//! The coefficient of `x_0^n ... x_k^n` equals `(k+1)!` times the degree.
//! No exponent of the target exceeds `n`, so all products are truncated at
//! per-variable degree `n`.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{FanoError, Result};
use crate::oracle;
use crate::polyring::{ExponentVector, LinearForm, TruncPoly};

/// The input triple: ambient dimension `n`, multidegree, subspace dimension `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FanoProblem {
    n: u32,
    degrees: Vec<u32>,
    k: u32,
}

impl FanoProblem {
    pub fn new(n: u32, degrees: Vec<u32>, k: u32) -> Result<Self> {
        if k < 1 {
            return Err(FanoError::InvalidProblem("k must be at least 1".into()));
        }
        if n < k + 1 {
            return Err(FanoError::InvalidProblem(format!(
                "n = {n} must be at least k + 1 = {}",
                k + 1
            )));
        }
        if degrees.is_empty() {
            return Err(FanoError::InvalidProblem(
                "at least one degree is required".into(),
            ));
        }
        if let Some(&d) = degrees.iter().find(|&&d| d < 2) {
            return Err(FanoError::InvalidProblem(format!(
                "every degree must be at least 2, got {d}"
            )));
        }
        Ok(FanoProblem { n, degrees, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of hypersurfaces.
    pub fn r(&self) -> usize {
        self.degrees.len()
    }

    /// Number of Chern roots, `k + 1`.
    pub fn num_vars(&self) -> usize {
        self.k as usize + 1
    }
}

impl fmt::Display for FanoProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "(n={}, d=({}), k={})", self.n, ds.join(","), self.k)
    }
}

/// Exact `C(m, j)` by the multiplicative formula.
pub fn binomial(m: u64, j: u64) -> BigInt {
    if j > m {
        return BigInt::zero();
    }
    let j = j.min(m - j);
    let mut acc = BigInt::one();
    for i in 0..j {
        // acc = C(m, i) here, and C(m, i) * (m - i) is divisible by i + 1
        acc *= m - i;
        acc /= i + 1;
    }
    acc
}

/// `(k+1)(n-k) - sum_i C(d_i + k, k)`.
pub fn expected_dimension(p: &FanoProblem) -> BigInt {
    let k = u64::from(p.k);
    let grassmannian_dim = BigInt::from(k + 1) * BigInt::from(u64::from(p.n) - k);
    let fibre_rank: BigInt = p.degrees.iter().map(|&d| sym_power_rank(d, p.k)).sum();
    grassmannian_dim - fibre_rank
}

/// Outcome of the smoothness/dimension hypothesis test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisCheck {
    pub ok: bool,
    pub reason: String,
}

/// Checks `n >= 4`, the dimension count `(k+1)(n-k) >= sum C(d_i+k, k)`, and
/// `n >= 2k + r` when every `d_i = 2`. The reason names the first failure.
pub fn hypothesis_check(p: &FanoProblem) -> HypothesisCheck {
    let fail = |reason: String| HypothesisCheck { ok: false, reason };
    if p.n < 4 {
        return fail(format!("n = {} is below 4", p.n));
    }
    let delta = expected_dimension(p);
    if delta.is_negative() {
        return fail(format!(
            "expected dimension {delta} is negative: (k+1)(n-k) < sum of C(d_i+k, k)"
        ));
    }
    if p.degrees.iter().all(|&d| d == 2) {
        let needed = 2 * u64::from(p.k) + p.r() as u64;
        if u64::from(p.n) < needed {
            return fail(format!(
                "intersection of quadrics needs n >= 2k + r = {needed}, got n = {}",
                p.n
            ));
        }
    }
    HypothesisCheck {
        ok: true,
        reason: "all hypotheses hold".into(),
    }
}

/// All tuples of `parts` nonnegative integers summing to `d`, in
/// lexicographically descending order.
pub fn compositions(d: u32, parts: usize) -> Vec<Vec<u32>> {
    fn fill(rest: u32, slot: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slot + 1 == cur.len() {
            cur[slot] = rest;
            out.push(cur.clone());
            return;
        }
        for a in (0..=rest).rev() {
            cur[slot] = a;
            fill(rest - a, slot + 1, cur, out);
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        return out;
    }
    fill(d, 0, &mut vec![0; parts], &mut out);
    out
}

/// The Chern roots `a_0 x_0 + ... + a_k x_k` of `Sym^d` of a rank `k+1` bundle,
/// one per composition of `d`.
pub fn symmetric_power_forms(d: u32, k: u32) -> Vec<LinearForm> {
    compositions(d, k as usize + 1)
        .into_iter()
        .map(|a| LinearForm::new(a.into_iter().map(i64::from).collect()))
        .collect()
}

/// Rank of `Sym^m E` for `E` of rank `k+1`: `C(m+k, k)`.
pub fn sym_power_rank(m: u32, k: u32) -> BigInt {
    binomial(u64::from(m) + u64::from(k), u64::from(k))
}

/// `c_1(Sym^m E) / c_1(E)` for `E` of rank `k+1`: `C(m+k, k+1)`.
pub fn sym_power_c1_factor(m: u32, k: u32) -> BigInt {
    binomial(u64::from(m) + u64::from(k), u64::from(k) + 1)
}

/// `sum_i C(d_i+k, k+1) - n - 1`, the multiple of the hyperplane class that
/// gives `-c_1(T_F)` on a Fano curve.
pub fn canonical_factor(p: &FanoProblem) -> BigInt {
    let normal: BigInt = p.degrees.iter().map(|&d| sym_power_c1_factor(d, p.k)).sum();
    normal - BigInt::from(u64::from(p.n) + 1)
}

/// A product of linear forms together with the monomial to extract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Integrand {
    pub factors: Vec<LinearForm>,
    pub target: ExponentVector,
}

impl Integrand {
    /// Extracts the target coefficient with the dense truncated kernel, capping
    /// every variable at the largest target exponent.
    pub fn coefficient(&self) -> Result<BigInt> {
        let num_vars = self.target.len();
        let product_degree = self.factors.len() as u64;
        if product_degree != self.target.total_degree() {
            return Err(FanoError::DegreeMismatch {
                product: product_degree,
                target: self.target.total_degree(),
            });
        }
        let cap = self.target.as_slice().iter().copied().max().unwrap_or(0);
        let mut poly = TruncPoly::one(num_vars, cap)?;
        for f in &self.factors {
            poly.mul_linear_assign(f)?;
        }
        poly.coefficient(&self.target)
    }
}

pub(crate) fn nonnegative_delta(p: &FanoProblem) -> Result<u32> {
    let delta = expected_dimension(p);
    if delta.is_negative() {
        return Err(FanoError::NegativeExpectedDimension { delta });
    }
    // delta <= (k+1)(n-k), but a power that large would not fit the dense ring either
    delta.to_u32().ok_or_else(|| FanoError::RingTooLarge {
        num_vars: p.num_vars(),
        cap: p.n,
    })
}

/// Symmetric-power roots for each `d_i` in input order, then `delta` copies of
/// `x_0 + ... + x_k`.
pub(crate) fn bundle_factors(p: &FanoProblem, delta: u32) -> Vec<LinearForm> {
    let mut factors: Vec<LinearForm> = p
        .degrees
        .iter()
        .flat_map(|&d| symmetric_power_forms(d, p.k))
        .collect();
    let sum = LinearForm::sum_of_variables(p.num_vars());
    factors.extend(std::iter::repeat_n(sum, delta as usize));
    factors
}

/// `x_i - x_j` over all ordered pairs `i != j`, lexicographic in `(i, j)`.
pub fn discriminant_forms(num_vars: usize) -> Vec<LinearForm> {
    (0..num_vars)
        .flat_map(|i| (0..num_vars).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| LinearForm::difference(num_vars, i, j))
        .collect()
}

/// The discriminant integrand with target `x_0^n ... x_k^n`.
pub fn discriminant_integrand(p: &FanoProblem) -> Result<Integrand> {
    let delta = nonnegative_delta(p)?;
    let mut factors = bundle_factors(p, delta);
    factors.extend(discriminant_forms(p.num_vars()));
    let target = ExponentVector::uniform(p.num_vars(), p.n);
    // sum C(d_i+k,k) + delta + k(k+1) = (k+1)n
    if factors.len() as u64 != target.total_degree() {
        return Err(FanoError::DegreeMismatch {
            product: factors.len() as u64,
            target: target.total_degree(),
        });
    }
    Ok(Integrand { factors, target })
}

fn factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * i)
}

/// Plücker degree of `F_k(X)`: the coefficient of `x_0^n ... x_k^n` in the
/// discriminant integrand, divided exactly by `(k+1)!`.
pub fn plucker_degree(p: &FanoProblem) -> Result<BigInt> {
    let integrand = discriminant_integrand(p)?;
    let c = integrand.coefficient()?;
    let divisor = factorial(u64::from(p.k) + 1);
    let (degree, rem) = c.div_rem(&divisor);
    if !rem.is_zero() {
        return Err(FanoError::NotDivisible { value: c, divisor });
    }
    if !degree.is_positive() && hypothesis_check(p).ok {
        return Err(FanoError::NonPositiveDegree { degree });
    }
    Ok(degree)
}

/// Genus of the Fano curve: `1 + canonical_factor * degree / 2`. Requires
/// expected dimension exactly 1.
pub fn curve_genus(p: &FanoProblem, degree: &BigInt) -> Result<BigInt> {
    let delta = expected_dimension(p);
    if !delta.is_one() {
        return Err(FanoError::NotACurve { delta });
    }
    let numerator = canonical_factor(p) * degree;
    if numerator.is_odd() {
        return Err(FanoError::OddGenusNumerator { value: numerator });
    }
    Ok(BigInt::one() + numerator / 2)
}

/// Everything the CLI reports about one problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub n: u32,
    pub degrees: Vec<u32>,
    pub k: u32,
    pub r: usize,
    pub delta: i64,
    pub hypothesis_ok: bool,
    pub hypothesis_reason: String,
    #[serde(with = "bigint_string")]
    pub degree: BigInt,
    #[serde(with = "opt_bigint_string")]
    pub genus: Option<BigInt>,
    pub canonical_coefficient: i64,
    pub oracle_checked: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

/// Computes degree (and genus when the expected dimension is 1), optionally
/// cross-checking the degree against the Vandermonde formula.
pub fn compute_report(p: &FanoProblem, check_oracle: bool) -> Result<InvariantsReport> {
    let start = Instant::now();
    let delta = nonnegative_delta(p)?;
    let hypothesis = hypothesis_check(p);
    let canonical = canonical_factor(p);
    let canonical_coefficient = canonical.to_i64().ok_or_else(|| {
        FanoError::InvalidProblem(format!("canonical coefficient {canonical} is out of range"))
    })?;
    let degree = plucker_degree(p)?;
    if check_oracle {
        let oracle = oracle::vandermonde_degree(p)?;
        if oracle != degree {
            return Err(FanoError::OracleMismatch {
                primary: degree,
                oracle,
            });
        }
    }
    let genus = if delta == 1 {
        Some(curve_genus(p, &degree)?)
    } else {
        None
    };
    Ok(InvariantsReport {
        n: p.n,
        degrees: p.degrees.clone(),
        k: p.k,
        r: p.r(),
        delta: i64::from(delta),
        hypothesis_ok: hypothesis.ok,
        hypothesis_reason: hypothesis.reason,
        degree,
        genus,
        canonical_coefficient,
        oracle_checked: check_oracle,
        elapsed_ms: Some(start.elapsed().as_secs_f64() * 1e3),
    })
}

/// Big integers travel as decimal strings.
pub(crate) mod bigint_string {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

pub(crate) mod opt_bigint_string {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.collect_str(v),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(D::Error::custom))
            .transpose()
    }
}
