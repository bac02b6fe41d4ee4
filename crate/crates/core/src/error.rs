use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({u}, {v}) has a non-finite weight")]
    NonFiniteWeight { u: usize, v: usize },
    #[error("vertex {0} has non-positive degree")]
    ZeroDegree(usize),
    #[error("cartesian product is only defined for loop-free graphs")]
    LoopsInProduct,
    #[error("matrix has dimension 0")]
    EmptyMatrix,
    #[error("matrix is not symmetric at ({i}, {j})")]
    Asymmetric { i: usize, j: usize },
    #[error("matrix has a non-finite entry at ({i}, {j})")]
    NonFiniteEntry { i: usize, j: usize },
    #[error("dimension {n} exceeds the limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("eigenvalue iteration did not converge")]
    NoConvergence,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not regular (degrees range over {min}..={max})")]
    Irregular { min: f64, max: f64 },
    #[error("vertex index {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("generator set is not closed under inverses")]
    NotInverseClosed,
    #[error("generator {0} is not invertible")]
    DegenerateGenerator(usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,
    #[error("partition is not equitable: weight from orbit {from} into orbit {to} depends on the representative")]
    NotEquitable { from: usize, to: usize },
    #[error("detailed balance fails between orbits {i} and {j}")]
    DetailedBalance { i: usize, j: usize },
    #[error("unknown topology family `{0}`")]
    UnknownFamily(String),
    #[error("malformed topology spec: {0}")]
    SpecSyntax(String),
    #[error("no closed-form bounds for {0}")]
    NoBounds(String),
}
