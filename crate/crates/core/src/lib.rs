pub mod appendix;
pub mod cache;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod matching;
pub mod poly;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{CanonicalLabel, Graph};
pub use matching::{
    characteristic_polynomial, matching_polynomial, matching_vector, matching_vector_bruteforce,
    max_matching_size, MatchingVector, PivotRule,
};
pub use poly::{IntPoly, RationalInterval};
