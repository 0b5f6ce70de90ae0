//! A verifiable toolkit for finite violator spaces, closure spaces and
//! convex spaces.
//!
//! Set operators are represented as explicit tables over ground sets of at
//! most 16 elements, so every axiom, implication and theorem about them is
//! decidable by exhaustive computation, and every failure comes with a
//! self-certifying witness. The crate provides:
//!
//! - [`table`]: total operator tables in τ-form or V-form, with a JSON file
//!   format;
//! - [`axioms`]: checks for C1, C2, C3, C22, convexity, anti-exchange,
//!   consistency and locality, plus a space classifier;
//! - [`duality`]: the pointwise complement between the two forms;
//! - [`generators`]: generators, bases, unique generation, extreme points
//!   and the spanning theorems;
//! - [`hypercube`]: equivalence classes as interval partitions of the subset
//!   lattice, and the partition ⇄ operator translation;
//! - [`enumeration`]: exhaustive sweeps over small universes with a
//!   declarative theorem registry, seeded random tables, and class censuses;
//! - [`miniball`]: an exact rational smallest-enclosing-ball oracle whose
//!   materialized violator tables feed all of the above;
//! - [`fixtures`]: the canned example spaces used by tests and the CLI.

pub mod axioms;
pub mod duality;
pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod generators;
pub mod ground;
pub mod hypercube;
pub mod mask;
pub mod miniball;
pub mod table;
pub mod witness;

pub use axioms::{classify, Axiom, AxiomReport, SpaceClasses};
pub use error::{Error, Result};
pub use ground::{GroundSet, MAX_GROUND};
pub use mask::SubsetMask;
pub use table::{OperatorKind, OperatorTable};
pub use witness::{TheoremViolation, Verdict, Witness};
