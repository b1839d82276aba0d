//! mdbook cannot run book snippets against crate dependencies, so each
//! chapter is included here as a doc comment and `cargo test --doc` keeps
//! the book honest. One module per chapter so a failure names its origin.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/states.md")]
pub mod states {}

#[doc = include_str!("../../../book/src/channel.md")]
pub mod channel {}

#[doc = include_str!("../../../book/src/measures.md")]
pub mod measures {}

#[doc = include_str!("../../../book/src/w-scenario.md")]
pub mod w_scenario {}

#[doc = include_str!("../../../book/src/ghz-scenario.md")]
pub mod ghz_scenario {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
