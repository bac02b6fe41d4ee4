//! Number theory, finite fields, groups and Cayley graphs.

mod cayley;
pub mod field;
mod group;
pub mod numtheory;

pub use cayley::{
    abelian_cayley_spectrum, cayley_graph, is_inverse_closed, lps_generators, GeneratorSet,
};
pub use field::Field;
pub use group::{
    CyclicProduct, FiniteGroup, Mat2, ProjectiveGroup, ProjectiveKind, PROJECTIVE_MAX_P,
};
pub use numtheory::{is_prime, legendre, sum_of_squares_solutions};
