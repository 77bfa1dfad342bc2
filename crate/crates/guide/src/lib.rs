//! Doctest carrier for the book: each chapter of `book/src` is included as
//! module documentation so that `cargo test --doc` compiles and runs every
//! Rust snippet in the guide. The chapters stay in lockstep with the
//! library or the build breaks.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/laurent.md")]
pub mod laurent {}

#[doc = include_str!("../../../book/src/lie.md")]
pub mod lie {}

#[doc = include_str!("../../../book/src/sections.md")]
pub mod sections {}

#[doc = include_str!("../../../book/src/filtration.md")]
pub mod filtration {}

#[doc = include_str!("../../../book/src/polytopes.md")]
pub mod polytopes {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
