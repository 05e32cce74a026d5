//! Input parsing, spec files, reports and the command-line driver.

pub mod commands;
pub mod corpus;
pub mod parse;
pub mod report;
pub mod spec_file;
