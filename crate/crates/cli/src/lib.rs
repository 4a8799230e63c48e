//! Manifest format, parameter expressions and the commands behind the
//! `ncpoisson` binary.

pub mod commands;
pub mod error;
pub mod expr;
pub mod manifest;
