//! Oracles shared by the integration tests.
#![allow(dead_code)]

pub mod census;
pub mod fock;
pub mod lattice;
pub mod sine;
