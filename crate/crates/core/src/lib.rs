//! Finite posets, lattices of order-convex sets, lattice identities and
//! membership in the varieties SUB and SUB(n).

pub mod bits;
pub mod closure;
pub mod colattice;
pub mod corpus;
pub mod error;
pub mod experiment;
pub mod lattice;
pub mod poset;
pub mod terms;
pub mod variety;

pub use bits::ElemSet;
pub use error::{Error, Result};
