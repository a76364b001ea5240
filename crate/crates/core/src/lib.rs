//! Partition and orbit-dimension calculus for dimension equations of global
//! integrals on `GL_n`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of its inputs:
//!
//! * [`partition`] – integer partitions, transposes, dominance order, the
//!   nilpotent orbit dimension `n² − Σ (2i−1) k_i`, enumeration and the
//!   ε-vector rule for degenerate Whittaker characters.
//! * [`representation`] – descriptors for generic, Speh-type and Eisenstein
//!   representations together with their attached orbits and dimensions.
//! * [`equation`] – the dimension equations and an orbit-level solver.
//! * [`theorems`] – exhaustive verifiers for the inequalities behind the
//!   vanishing results, and the vanishing-verdict engine.
//!
//! Work that can be split (the exhaustive verifiers, the solver) is driven
//! through an [`Executor`]; [`Sequential`] runs everything on the calling
//! thread and the `gldim` crate supplies a threaded one.

#![no_std]

extern crate alloc;

mod error;
mod exec;

pub mod equation;
pub mod partition;
pub mod representation;
pub mod theorems;

pub use error::{Error, Result};
pub use exec::{Executor, Sequential};
pub use partition::{Dominance, EpsilonVector, Partition};
pub use representation::{IntegralSpec, RepDescriptor};
