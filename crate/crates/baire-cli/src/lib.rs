//! Library surface of the command-line front end, exposed for the test
//! suites: expression parsing/evaluation and exact output rendering.

pub mod expr;
pub mod render;
