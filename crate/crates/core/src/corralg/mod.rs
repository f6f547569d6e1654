//! The algebra of lagrangian correspondences between symbolic objects.
//!
//! Composition is table-driven: a pair of generators composes only if the
//! relation table says how, and otherwise the product is an error rather
//! than a guess.

mod element;
mod generator;
mod object;
mod parse;
mod table;
mod unitary;

pub use element::CorrElement;
pub use generator::{all_generators, Generator};
pub use object::ObjectId;
pub use table::{
    standard_table, star, CompositionDoc, RelationTable, Rewrite, RewriteDoc, TableDoc, DEFAULT_N_MAX,
};
pub use unitary::{
    build_l, build_l_dagger, decompose_e, l_phase, stack_normalize, verify_unitarity, verify_unitarity_with,
    EDecomposition, UnitarityReport, UnknownCoefficient,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrError {
    #[error("object mismatch: expected {expected}, found {found}")]
    ObjectMismatch { expected: String, found: String },
    #[error("no relation for {0} then {1}")]
    UnknownComposition(Generator, Generator),
    #[error("{0} has no declared adjoint")]
    NoAdjoint(Generator),
    #[error("{0} is not divisible on its stack lift")]
    NotDivisible(Generator),
    #[error("cannot parse {0:?}")]
    Parse(String),
}
