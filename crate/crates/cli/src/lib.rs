//! Library side of the `binform` command-line tool.

pub mod app;
pub mod expr;
