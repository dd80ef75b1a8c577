// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

//! The curve-component expression language.
//!
//! ```text
//! expr    = term { ("+" | "-") term } ;
//! term    = unary { ("*" | "/") unary } ;
//! unary   = "-" unary | power ;
//! power   = primary [ "^" unary ] ;
//! primary = number | identifier | function "(" expr ")" | "(" expr ")" ;
//! function = "sin" | "cos" | "sinh" | "cosh" | "exp" | "sqrt" | "ln" ;
//! number  = digits [ "." digits ] [ ("e" | "E") [ "+" | "-" ] digits ]
//!         | "." digits [ exponent ] ;
//! ```
//!
//! `^` binds tighter than unary minus and associates to the right, so
//! `-s^2` is `-(s^2)` and `2^3^2` is `2^(3^2)`. Function names are reserved.
//! Error positions are 0-based character indices into the source.

mod ast;
mod eval;
mod lexer;
mod parser;

pub use ast::{BinOp, Expr, Func};
pub use eval::{evaluate, Scalar};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, parse_tokens};
