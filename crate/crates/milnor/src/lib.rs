//! Milnor invariants of links from planar-diagram codes.
//!
//! The free nilpotent quotients of a link group are realized as unitriangular
//! matrices over a commutative polynomial ring; walking a diagram component
//! by component yields the first non-vanishing Milnor invariant and, beyond
//! the first obstruction, refined higher invariants modulo explicitly
//! computed indeterminacy lattices.

pub mod diagram;
pub mod engine;
pub mod higher;
pub mod lattice;
pub mod lyndon;
pub mod magnus;
pub mod matrix;
pub mod tensor;
pub mod word;

pub use diagram::{build, parse_pd, Diagram, PdCode, WalkStep};
pub use engine::{first_nonvanishing, InvariantResult, Outcome};
pub use higher::{higher_mu, DefectLedger, DeltaLattice};
pub use matrix::UniMatrix;
pub use tensor::{bracket, left_collecting_bracket, CentralTensor, IntervalTensor};
pub use word::{commutator, left_collecting_word, GroupWord, IndexWord, Letter};
