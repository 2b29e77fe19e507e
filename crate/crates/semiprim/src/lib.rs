//! Analysis and construction of semiprimitive permutation groups.
//!
//! A transitive group is semiprimitive when every normal subgroup is
//! transitive or semiregular. This crate provides the permutation-group
//! substrate (stabilizer chains, coset actions, normal-subgroup lattices),
//! the semiprimitivity analysis (plinths, quotient actions, the innately
//! transitive types, structure classification), and the generative side
//! (triples, glued products, wreath products, and a corpus of worked
//! examples used by the acceptance suite).

pub mod config;
pub mod error;
pub mod perm;

pub mod group;
pub mod subgroup;

pub mod blocks;
pub mod coset;
pub mod hom;
pub mod centralizer;
pub mod table;
pub mod lattice;
pub mod action;
pub mod iso;
pub mod structure;
pub mod analysis;
pub mod glue;
pub mod wreath;
pub mod triple;
pub mod groups;
pub mod corpus;

pub use config::Caps;
pub use error::{Error, Result};
pub use group::{ActionPredicates, PermGroup};
pub use perm::Permutation;
