//! The `.uhg` construction language: a directive, single-assignment
//! bindings and assertions, evaluated exactly over the kernel.

pub mod ast;
mod eval;
mod lexer;
mod parser;
pub mod print;

pub use ast::{Diagnostic, FieldSpec, Pos, Program};
pub use eval::{evaluate, field_ctx, EvalError, Evaluation, Status, StmtResult, Value};
pub use parser::parse;
