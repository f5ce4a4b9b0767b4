// SPDX-License-Identifier: Apache-2.0

//! Text formats, parallel drivers and the `hypercore` command line.

pub mod cli;
pub mod format;
pub mod parallel;

pub use cli::{run, CommandOutcome};
