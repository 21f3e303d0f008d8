//! Instance files, the random instance generator, parallel search and the
//! command-line front end for `gradedexp-core`.

pub mod cli;
pub mod generate;
pub mod instance;
pub mod parallel;
pub mod summary;
pub mod sweep;

pub use gradedexp_core as core;
