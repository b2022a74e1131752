pub mod braid;
pub mod reidemeister;

pub use braid::{braid_rewrite, random_equivalent_words, random_equivalents, random_rewrite, Rewrite};
pub use reidemeister::{faces, r1_insert, r1_delete, r2_delete, r2_insert};
