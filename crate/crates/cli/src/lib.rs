//! Command-line frontend for root polytope combinatorics: report types,
//! command implementations and diagram rendering.

pub mod commands;
pub mod diagram;
pub mod report;
