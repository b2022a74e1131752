pub mod builtin;
pub mod linalg;
pub mod relations;
pub mod weight;

pub use relations::{four_term_relations, one_term_diagrams, FourTermRelation};
pub use weight::{weight_space_basis, weight_space_dimension, Violation, WeightSystem};
