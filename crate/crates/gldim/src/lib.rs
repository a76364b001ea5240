//! Command-line front end and file formats for [`gldim_core`].
//!
//! * [`pool::ThreadPool`] – a scoped-thread [`Executor`](gldim_core::Executor)
//!   whose results come back in job order, so reports do not depend on the
//!   worker count.
//! * [`json`] – the JSON form of integral specs and descriptors.
//! * [`export`] – CSV tables of solver output.
//! * [`cli`] – the `gldim` command.

pub mod cli;
pub mod error;
pub mod export;
pub mod json;
pub mod pool;

pub use error::{CliError, Result};
pub use pool::ThreadPool;
