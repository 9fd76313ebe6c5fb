use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DeformError {
    #[error("pair is not properly discontinuous: det(A - A') = {det_diff_matrix}, det A - det A' = {fiber}")]
    NotProper {
        det_diff_matrix: String,
        fiber: String,
    },
    #[error("S is singular (det S = {0})")]
    SingularS(String),
    #[error("t0 must be nonzero")]
    ZeroT0,
    #[error("A - A' is singular (det = {0})")]
    SingularDifference(String),
    #[error("degenerate stratum: det A = {det_a}, det A' = {det_a_prime}; canonical form needs both nonzero")]
    DegenerateStratum { det_a: String, det_a_prime: String },
    #[error("kernel search needs exact rational entries")]
    InexactKernelSearch,
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T, E = DeformError> = std::result::Result<T, E>;
