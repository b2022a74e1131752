pub mod braid;
pub mod chord;
pub mod gauss;

pub use braid::{braid_closure_to_gauss, BraidWord};
pub use chord::{canonical_form, enumerate_chord_diagrams, ChordDiagram};
pub use gauss::{
    parse_gauss_code, Arrow, Endpoint, GaussDiagram, Passage, Role, Sign, SingularEndpoint, SingularGaussDiagram,
};
