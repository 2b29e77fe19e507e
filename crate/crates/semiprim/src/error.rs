use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone)]
pub enum Error {
    #[error("malformed cycle notation: {0}")]
    MalformedCycle(String),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: u64, degree: usize },
    #[error("repeated point {0} in cycle notation")]
    RepeatedPoint(u32),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("capacity exceeded: {what} needs {needed}, cap is {cap}")]
    CapacityExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },
    #[error("inputs belong to different parent groups")]
    MismatchedParent,
    #[error("generator images do not define a homomorphism")]
    NotAHomomorphism,
    #[error("designated stabilizer is not core-free (core has order {core_order})")]
    NotCoreFree { core_order: u128 },
    #[error("subgroup is normal but transitive")]
    NormalButTransitive,
    #[error("action is not innately transitive")]
    NotInnatelyTransitive,
    #[error("action is not semiprimitive")]
    NotSemiprimitive,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid semiprimitive triple, condition ({condition}): {witness}")]
    InvalidTriple { condition: u8, witness: String },
    #[error("incompatible isomorphism: {0}")]
    IncompatibleIsomorphism(String),
    #[error("not a direct decomposition: {0}")]
    NotADirectDecomposition(String),
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("bad module: {0}")]
    BadModule(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
