//! Document format, conversions and command-line surface for `trihom`.

pub mod commands;
pub mod convert;
pub mod document;
pub mod output;
