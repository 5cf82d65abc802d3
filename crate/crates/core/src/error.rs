use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("characteristic must be an odd prime, got {0}")]
    EvenCharacteristic(u32),
    #[error("extension degree {0} unsupported (1..={max})", max = crate::finite_field::MAX_DEGREE)]
    UnsupportedDegree(usize),
    #[error("modulus must be monic of degree {expected}, got {got:?}")]
    BadModulus { expected: usize, got: Vec<u32> },
    #[error("modulus {0:?} is reducible over the prime field")]
    ReducibleModulus(Vec<u32>),
    #[error("coefficient list {0:?} is not a valid field element")]
    InvalidElement(Vec<u32>),
    #[error("division by zero")]
    DivisionByZero,
    #[error("enumeration of {needed} candidates exceeds the bound {bound}")]
    EnumerationBound { needed: u128, bound: u64 },
    #[error("parse error in {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("generator is not monic")]
    NotMonic,
    #[error("polynomial is not a right divisor of x^{n} - ({lambda})")]
    NotRightDivisor { n: usize, lambda: String },
    #[error("x^{n} - ({lambda}) is not central for twist {twist}")]
    NotCentral { n: usize, lambda: String, twist: u32 },
    #[error("constant {0} is not +1 or -1")]
    LambdaNotUnitSign(String),
    #[error("ring element {0} is not a unit")]
    NotAUnit(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("word length {len} is not divisible by {sections} sections")]
    SectionMismatch { len: usize, sections: usize },
    #[error("code has no nonzero codewords")]
    EmptyCode,
    #[error("minimum distance exceeds {d_max}; only d >= {} is known", d_max + 1)]
    DistanceAboveBound { d_max: usize },
    #[error("2k < n ({k} vs {n}): no CSS code")]
    DegenerateQuantum { n: usize, k: usize },
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("line {line}: {reason}")]
    Config { line: usize, reason: String },
}
