//! Dense truncated multivariate polynomials over arbitrary-precision integers.
//!
//! A [`TruncPoly`] lives in `Z[x_0, ..., x_{v-1}] / (x_0^{cap+1}, ..., x_{v-1}^{cap+1})`:
//! any monomial whose exponent exceeds `cap` in some variable is dropped.
//! Coefficients are stored in a flat `(cap+1)^v` array addressed by the
//! mixed-radix encoding of the exponent vector, with `x_0` as the most
//! significant digit. Two exponent vectors whose coordinate-wise sum stays
//! within the cap therefore add as plain indices.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{FanoError, Result};

/// Exponents `(e_0, ..., e_{v-1})` of the monomial `x_0^{e_0} ... x_{v-1}^{e_{v-1}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    /// `(e, e, ..., e)`.
    pub fn uniform(num_vars: usize, e: u32) -> Self {
        ExponentVector(vec![e; num_vars])
    }

    /// `(top, top - 1, ..., top - num_vars + 1)`, or `None` if an entry would be negative.
    pub fn staircase(num_vars: usize, top: u32) -> Option<Self> {
        (0..num_vars)
            .map(|i| u32::try_from(i).ok().and_then(|i| top.checked_sub(i)))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }
}

/// A linear form `a_0 x_0 + ... + a_{v-1} x_{v-1}` with integer coefficients.
///
/// Forms built from compositions have nonnegative coefficients; the
/// discriminant and Vandermonde factors `x_i - x_j` use entries in `{-1, 0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm(Vec<i64>);

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LinearForm(coeffs)
    }

    /// `x_0 + x_1 + ... + x_{v-1}`.
    pub fn sum_of_variables(num_vars: usize) -> Self {
        LinearForm(vec![1; num_vars])
    }

    /// `x_i - x_j`.
    pub fn difference(num_vars: usize, i: usize, j: usize) -> Self {
        assert!(i < num_vars && j < num_vars && i != j);
        let mut coeffs = vec![0; num_vars];
        coeffs[i] = 1;
        coeffs[j] = -1;
        LinearForm(coeffs)
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let sign = if a < 0 { "-" } else { "+" };
            if first {
                if a < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = a.unsigned_abs();
            if mag == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "{mag}x{i}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Dense polynomial with a per-variable exponent cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncPoly {
    num_vars: usize,
    cap: u32,
    /// `strides[j] = (cap+1)^(num_vars-1-j)`
    strides: Vec<usize>,
    coeffs: Vec<BigInt>,
}

impl TruncPoly {
    /// The zero polynomial in the ring with `num_vars` variables capped at `cap`.
    pub fn zero(num_vars: usize, cap: u32) -> Result<Self> {
        if num_vars == 0 {
            return Err(FanoError::InvalidProblem(
                "a polynomial ring needs at least one variable".into(),
            ));
        }
        let too_large = || FanoError::RingTooLarge { num_vars, cap };
        let radix = usize::try_from(cap)
            .ok()
            .and_then(|c| c.checked_add(1))
            .ok_or_else(too_large)?;
        let mut strides = vec![1usize; num_vars];
        for j in (0..num_vars - 1).rev() {
            strides[j] = strides[j + 1].checked_mul(radix).ok_or_else(too_large)?;
        }
        let len = strides[0].checked_mul(radix).ok_or_else(too_large)?;
        // Beyond this the dense array would not fit in memory anyway.
        if len > (1 << 28) {
            return Err(too_large());
        }
        Ok(TruncPoly {
            num_vars,
            cap,
            strides,
            coeffs: vec![BigInt::zero(); len],
        })
    }

    /// The constant polynomial 1.
    pub fn one(num_vars: usize, cap: u32) -> Result<Self> {
        let mut p = Self::zero(num_vars, cap)?;
        p.coeffs[0] = BigInt::one();
        Ok(p)
    }

    /// Builds a polynomial from explicit terms. Repeated exponents accumulate.
    pub fn from_terms<I>(num_vars: usize, cap: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, BigInt)>,
    {
        let mut p = Self::zero(num_vars, cap)?;
        for (e, c) in terms {
            let idx = p.index_of(&e)?;
            p.coeffs[idx] += c;
        }
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Exact coefficient of the monomial `e`; zero when absent.
    pub fn coefficient(&self, e: &ExponentVector) -> Result<BigInt> {
        Ok(self.coeffs[self.index_of(e)?].clone())
    }

    /// Nonzero terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (ExponentVector, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (self.exponents_of(idx), c))
    }

    /// Number of nonzero coefficients.
    pub fn support_len(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// `self * f`, truncated to the cap.
    pub fn mul_linear(&self, f: &LinearForm) -> Result<Self> {
        let mut out = self.clone();
        out.mul_linear_assign(f)?;
        Ok(out)
    }

    /// In-place `self *= f`, truncated to the cap.
    ///
    /// The new coefficient at `e` is `sum_j a_j * old[e - u_j]`, and every
    /// `e - u_j` has a smaller index than `e`, so sweeping indices downwards
    /// reads only coefficients that have not been overwritten yet.
    pub fn mul_linear_assign(&mut self, f: &LinearForm) -> Result<()> {
        if f.num_vars() != self.num_vars {
            return Err(FanoError::DimensionMismatch {
                ring: self.num_vars,
                form: f.num_vars(),
            });
        }
        let active: Vec<(usize, usize, i64)> = f
            .coefficients()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(j, &a)| (j, self.strides[j], a))
            .collect();
        let radix = self.cap as usize + 1;
        let mut digits = vec![self.cap; self.num_vars];
        for idx in (0..self.coeffs.len()).rev() {
            let mut acc = BigInt::zero();
            for &(j, stride, a) in &active {
                if digits[j] == 0 {
                    continue;
                }
                let src = &self.coeffs[idx - stride];
                if src.is_zero() {
                    continue;
                }
                match a {
                    1 => acc += src,
                    -1 => acc -= src,
                    _ => acc += src * a,
                }
            }
            self.coeffs[idx] = acc;
            // decrement the mixed-radix digits of idx
            for d in digits.iter_mut().rev() {
                if *d > 0 {
                    *d -= 1;
                    break;
                }
                *d = (radix - 1) as u32;
            }
        }
        Ok(())
    }

    /// Truncated product.
    pub fn mul(&self, other: &TruncPoly) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = Self::zero(self.num_vars, self.cap)?;
        let rhs: Vec<(usize, ExponentVector, &BigInt)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (idx, other.exponents_of(idx), c))
            .collect();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.exponents_of(i);
            for (j, f, d) in &rhs {
                let fits = e
                    .as_slice()
                    .iter()
                    .zip(f.as_slice())
                    .all(|(&a, &b)| a + b <= self.cap);
                if fits {
                    // no carries, so indices add
                    out.coeffs[i + j] += c * *d;
                }
            }
        }
        Ok(out)
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &TruncPoly) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    /// Truncated `e`-th power by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = Self::one(self.num_vars, self.cap).expect("ring already validated");
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    fn check_same_ring(&self, other: &TruncPoly) -> Result<()> {
        if self.num_vars != other.num_vars || self.cap != other.cap {
            return Err(FanoError::RingMismatch {
                lhs_vars: self.num_vars,
                lhs_cap: self.cap,
                rhs_vars: other.num_vars,
                rhs_cap: other.cap,
            });
        }
        Ok(())
    }

    fn index_of(&self, e: &ExponentVector) -> Result<usize> {
        if e.len() != self.num_vars || e.as_slice().iter().any(|&x| x > self.cap) {
            return Err(FanoError::ExponentOutOfRange {
                exps: e.as_slice().to_vec(),
                num_vars: self.num_vars,
                cap: self.cap,
            });
        }
        Ok(e.as_slice()
            .iter()
            .zip(&self.strides)
            .map(|(&x, &s)| x as usize * s)
            .sum())
    }

    fn exponents_of(&self, idx: usize) -> ExponentVector {
        let radix = self.cap as usize + 1;
        ExponentVector(
            self.strides
                .iter()
                .map(|&s| ((idx / s) % radix) as u32)
                .collect(),
        )
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &x) in e.as_slice().iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{x}")?,
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
