use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, FanoError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanoError {
    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("negative expected dimension {delta}: a general complete intersection of this type contains no such subspaces")]
    NegativeExpectedDimension { delta: BigInt },

    #[error(
        "expected dimension is {delta}, the genus formula needs a curve (expected dimension 1)"
    )]
    NotACurve { delta: BigInt },

    #[error("a dense ring with {num_vars} variables and exponent cap {cap} is too large")]
    RingTooLarge { num_vars: usize, cap: u32 },

    #[error("ring mismatch: ({lhs_vars} variables, cap {lhs_cap}) vs ({rhs_vars} variables, cap {rhs_cap})")]
    RingMismatch {
        lhs_vars: usize,
        lhs_cap: u32,
        rhs_vars: usize,
        rhs_cap: u32,
    },

    #[error("linear form has {form} coefficients but the ring has {ring} variables")]
    DimensionMismatch { ring: usize, form: usize },

    #[error("exponent vector {exps:?} does not address a monomial of a ring with {num_vars} variables and cap {cap}")]
    ExponentOutOfRange {
        exps: Vec<u32>,
        num_vars: usize,
        cap: u32,
    },

    #[error("product of linear factors has total degree {product}, target monomial has total degree {target}")]
    DegreeMismatch { product: u64, target: u64 },

    #[error("coefficient {value} is not divisible by {divisor}")]
    NotDivisible { value: BigInt, divisor: BigInt },

    #[error("genus numerator {value} is odd")]
    OddGenusNumerator { value: BigInt },

    #[error("degree {degree} is not positive although the hypotheses hold")]
    NonPositiveDegree { degree: BigInt },

    #[error(
        "oracle mismatch: discriminant formula gives {primary}, Vandermonde formula gives {oracle}"
    )]
    OracleMismatch { primary: BigInt, oracle: BigInt },
}

impl FanoError {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_consistency_failure(&self) -> bool {
        !matches!(
            self,
            FanoError::InvalidProblem(_)
                | FanoError::NegativeExpectedDimension { .. }
                | FanoError::NotACurve { .. }
                | FanoError::RingTooLarge { .. }
        )
    }
}
