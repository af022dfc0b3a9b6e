use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("extension degree m = {0} is outside the supported range 2..=16")]
    FieldDegree(u32),

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("element value {value} does not fit in GF(2^{m})")]
    InvalidElement { value: u32, m: u32 },

    #[error("generator polynomial does not divide x^{n} - 1")]
    NotCyclic { n: usize },

    #[error("code length {0} is not supported (words are limited to 64 coordinates)")]
    LengthUnsupported(usize),

    #[error("word has length {got}, code length is {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("matrix rank {rank} does not match dimension {k}")]
    RankDeficient { rank: usize, k: usize },

    #[error("cyclotomic cosets need an odd length n >= 3, got {0}")]
    EvenLength(usize),

    #[error("the multiplicative order of 2 modulo {n} is {m}, larger than the supported field degree 16")]
    OrderTooLarge { n: usize, m: u32 },

    #[error("designed distance {delta} is outside 2..={n}")]
    DesignedDistance { n: usize, delta: usize },

    #[error("designed distance {delta} gives g(x) = x^{n} - 1, a code of dimension 0")]
    DegenerateCode { n: usize, delta: usize },

    #[error("redundancy n - k = {0} exceeds the 32-bit syndrome table limit")]
    RedundancyTooLarge(usize),

    #[error("covering radius exceeds weight cap {cap}: {unseen} syndromes not reached")]
    WeightCapExceeded {
        cap: usize,
        unseen: u64,
        coset_count_by_weight: Vec<u64>,
    },

    #[error("brute-force oracle refused: 2^(n+k) = 2^{0} candidate pairs is over the guard")]
    OracleTooLarge(usize),

    #[error("insufficient data: {0}")]
    InsufficientData(&'static str),

    #[error("binary Johnson bound undefined for 2d > n (n = {n}, d = {d})")]
    JohnsonUndefined { n: usize, d: usize },

    #[error("bound undefined for n = {n}, d = {d} (need 1 <= d <= n)")]
    BoundDomain { n: usize, d: usize },

    #[error("epsilon must lie in (0, 1], got {0}")]
    Epsilon(String),

    #[error("decoding radius {tau} exceeds code length {n}")]
    RadiusTooLarge { tau: usize, n: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
