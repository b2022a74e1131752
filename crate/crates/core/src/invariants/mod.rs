pub mod arrow;
pub mod formulas;
pub mod skein;

pub use arrow::{ArrowPattern, End, PatternCombination};
pub use formulas::{
    admissible_builtin_w4, local_data, pairing, v2_lannes, v2_polyak_viro, v3_lannes, v3_polyak_viro, v4_new,
    v4_polyak_viro, CrossingLocalData, Formula, V4New,
};
pub use skein::{derivative_eval, random_realization, realize_chord_diagram, resolve, symbol_eval};
