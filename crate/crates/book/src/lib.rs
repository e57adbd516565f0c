//! The chapters of the guide in `book/src`, included here so that
//! `cargo test` compiles and runs every Rust sample in them.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/canonical.md")]
pub mod canonical {}

#[doc = include_str!("../../../book/src/formula.md")]
pub mod formula {}

#[doc = include_str!("../../../book/src/packing.md")]
pub mod packing {}

#[doc = include_str!("../../../book/src/enumeration.md")]
pub mod enumeration {}

#[doc = include_str!("../../../book/src/lemmas.md")]
pub mod lemmas {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
