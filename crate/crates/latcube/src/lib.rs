//! Free bounded distributive lattices and De Morgan algebras with unique
//! antichain normal forms; the cube category whose morphisms are tuples of
//! such normal forms composed by substitution; finite Birkhoff duality;
//! bounded flatness checking of finite models with constructive witnesses
//! for chains; dimension-truncated cubical sets built from cellular
//! presentations; simplicial and exact numeric geometric realization; and
//! Moore path categories with connection-based contraction.
//!
//! The runnable programs under `examples/` tour each capability; the
//! `latcube` binary exposes the same operations as subcommands.

// index loops over small order matrices read better than iterator chains
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

pub mod cli;
pub mod corpus;
pub mod cset;
pub mod cube;
pub mod duality;
pub mod error;
pub mod flatness;
pub mod json;
pub mod lattice;
pub mod moore;
pub mod realization;
pub mod term;
pub mod util;

pub use cset::{Cell, CubicalSet, Presentation};
pub use cube::CubeMorphism;
pub use duality::{FinitePoset, InvolutivePoset};
pub use error::{Error, Result};
pub use lattice::{DeMorganElement, FiniteLattice, LatticeElement};
pub use moore::{MoorePath, PathSquare};
pub use realization::{Mesh, SimplicialComplex};
pub use term::Term;
