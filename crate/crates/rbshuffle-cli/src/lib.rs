//! Command-line front end for the shuffle-algebra kernel: an expression
//! language with a parser and evaluator, plus named identity suites.

pub mod config;
pub mod dsl;
pub mod eval;
pub mod suites;
