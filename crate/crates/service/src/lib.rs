//! Command-line front end and HTTP what-if service for `lotopt-core`.
//!
//! The HTTP API keeps uploaded instances and running solve sessions in
//! memory. A session runs the anytime heuristic on a blocking worker
//! thread and records every improving plan, so clients can poll the
//! history while the sweep is still going and cancel it at any time.

pub mod api;
pub mod cli;
mod error;
pub mod session;

pub use error::{Result, ServiceError};
