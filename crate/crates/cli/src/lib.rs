//! Command implementations and the HTTP play service behind the `geodex` binary.

pub mod commands;
pub mod source;
pub mod server;
