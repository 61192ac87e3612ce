//! The book under `book/` is built with mdbook, which cannot run the code
//! listings as tests by itself. Each chapter is therefore included here as
//! rustdoc, one module per chapter, so `cargo test --doc` compiles and runs
//! every snippet against the current crate. A failing doctest names the
//! chapter module it came from.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/expressions.md")]
pub mod expressions {}

#[doc = include_str!("../../../book/src/quadrature.md")]
pub mod quadrature {}

#[doc = include_str!("../../../book/src/hardy.md")]
pub mod hardy {}

#[doc = include_str!("../../../book/src/operators.md")]
pub mod operators {}

#[doc = include_str!("../../../book/src/gram.md")]
pub mod gram {}

#[doc = include_str!("../../../book/src/multipliers.md")]
pub mod multipliers {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
