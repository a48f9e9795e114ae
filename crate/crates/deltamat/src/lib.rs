//! Text formats and the command-line front end for `deltamat-core`.

pub mod cli;
pub mod format;
