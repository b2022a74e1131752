//! Vassiliev invariants of orders 2, 3 and 4 computed from Gauss diagrams.
//!
//! The crate has four parts:
//!
//! * [`diagrams`]: Gauss diagrams, singular Gauss diagrams, chord diagrams
//!   and braid closures.
//! * [`algebra`]: one-term and four-term relations, weight systems and exact
//!   linear algebra over the rationals.
//! * [`invariants`]: Gauss diagram formulas (arrow-pattern pairings, Lannes
//!   type sums, a weight-system driven order-4 formula), skein resolution,
//!   derivatives and symbols.
//! * [`moves`]: braid rewriting with Markov moves and Reidemeister I/II
//!   insertions on Gauss diagrams, used to produce equivalent diagrams.
//!
//! [`corpus`] holds a few standard knots and [`suites`] the verification
//! suites run by the command-line tool and the acceptance tests.

pub mod algebra;
pub mod corpus;
pub mod diagrams;
pub mod error;
pub mod invariants;
pub mod moves;
pub mod rational;
pub mod suites;

pub use algebra::{weight_space_basis, weight_space_dimension, WeightSystem};
pub use diagrams::{braid_closure_to_gauss, parse_gauss_code, BraidWord, ChordDiagram, GaussDiagram, SingularGaussDiagram};
pub use invariants::Formula;
pub use rational::Rational;
