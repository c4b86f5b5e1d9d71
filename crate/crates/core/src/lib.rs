//! Letter-linking invariants of free-group words, the graph calculus that
//! organizes them, and Fox free differential calculus, all in exact arithmetic.

pub mod diagram;
pub mod eil;
pub mod fox;
pub mod lie;
pub mod linalg;
pub mod linking;
pub mod parse;
pub mod sample;
pub mod selfcheck;
pub mod symbols;
pub mod words;
pub mod worked;

pub use parse::ParseError;
