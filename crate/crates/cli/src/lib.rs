//! Command-line front end: the built-in corpus, the verification suite and
//! the report renderers behind the `amalgam` binary.

pub mod commands;
pub mod corpus;
pub mod suite;
