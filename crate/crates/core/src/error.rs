use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("substitution image for `{var}` is not a single monomial")]
    NonMonomialSubstitution { var: char },

    #[error("substitution `{var}` -> {image} needs a negative power of a non-unit coefficient")]
    NonIntegralSubstitution { var: char, image: String },

    #[error("rev_q needs a polynomial in q alone with no negative exponents, got {0}")]
    RevQDomain(String),

    #[error("cannot set {var}=0 in {poly}: negative exponent present")]
    NegativeExponentAtZero { var: char, poly: String },

    #[error("not a partition: {0}")]
    InvalidPartition(String),

    #[error("hook arm must be at least 1, got {0}")]
    HookArm(i64),

    #[error("tableau size {size} exceeds the enumeration bound {bound}")]
    TableauTooLarge { size: u32, bound: u32 },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("descent set {set:?} is not a subset of 1..{n}")]
    DescentOutOfRange { set: Vec<u32>, n: u32 },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("paths live in different grids: T({0},{1}) vs T({2},{3})")]
    GridMismatch(u32, u32, u32, u32),

    #[error("unknown path predicate `{0}`")]
    UnknownPredicate(String),

    #[error("oracle scale exceeded: {0}")]
    OracleScale(String),

    #[error("psi inverse is undefined on {0}")]
    PsiInverse(String),

    #[error("hook formula produced an invalid hook for tableau {tableau} and path {path}: arm {arm}, legs {legs}")]
    HookUnderflow {
        tableau: String,
        path: String,
        arm: i64,
        legs: i64,
    },

    #[error("g family violates g(j,k) - g(j,k-1) = k + j + {c} at j={j}, k={k}")]
    GFamily { c: i64, j: i64, k: i64 },

    #[error("{map}: {reason}")]
    MapDomain { map: &'static str, reason: String },

    #[error("descent collision in e_minus construction: {0}")]
    DescentCollision(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("fixture checksum mismatch: expected {expected}, found {found}")]
    FixtureChecksum { expected: String, found: String },

    #[error("fixture parse error: {0}")]
    Fixture(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
