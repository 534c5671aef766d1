//! Front end for `msdual`: the JSON document format and the subcommands.

pub mod commands;
pub mod doc;
