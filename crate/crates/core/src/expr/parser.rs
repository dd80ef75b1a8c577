// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

use alloc::string::{String, ToString};

use super::ast::{BinOp, Expr, Func};
use super::lexer::{tokenize, Token, TokenKind};
use crate::error::{Error, Result};

/// Tokenizes and parses `source`.
pub fn parse(source: &str) -> Result<Expr> {
    let tokens = tokenize(source)?;
    let end = source.chars().count();
    parse_tokens(&tokens, end)
}

/// Parses a token sequence; `end` is the position reported for errors at
/// end of input.
pub fn parse_tokens(tokens: &[Token], end: usize) -> Result<Expr> {
    let mut p = Parser {
        tokens,
        pos: 0,
        end,
    };
    let expr = p.expr()?;
    match p.peek() {
        None => Ok(expr),
        Some(t) if t.lexeme == ")" => Err(p.error_at(t.position, "end of input (unbalanced ')')")),
        Some(t) => Err(p.error_at(t.position, "operator or end of input")),
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.position)
    }

    fn error_at(&self, position: usize, expected: &str) -> Error {
        Error::Parse {
            position,
            expected: expected.to_string(),
        }
    }

    fn eat_op(&mut self, ops: &[&str]) -> Option<String> {
        let t = self.peek()?;
        if t.kind == TokenKind::Operator && ops.contains(&t.lexeme.as_str()) {
            let s = t.lexeme.clone();
            self.pos += 1;
            Some(s)
        } else {
            None
        }
    }

    fn expect_paren(&mut self, paren: &str) -> Result<()> {
        match self.peek() {
            Some(t) if t.kind == TokenKind::Paren && t.lexeme == paren => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error_at(self.here(), &alloc::format!("'{paren}'"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(op) = self.eat_op(&["+", "-"]) {
            let rhs = self.term()?;
            let op = if op == "+" { BinOp::Add } else { BinOp::Sub };
            lhs = Expr::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(op) = self.eat_op(&["*", "/"]) {
            let rhs = self.unary()?;
            let op = if op == "*" { BinOp::Mul } else { BinOp::Div };
            lhs = Expr::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_op(&["-"]).is_some() {
            return Ok(Expr::neg(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.eat_op(&["^"]).is_some() {
            let exponent = self.unary()?;
            return Ok(Expr::binary(BinOp::Pow, base, exponent));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error_at(self.end, "operand"));
        };
        match tok.kind {
            TokenKind::Number => {
                self.pos += 1;
                let value: f64 = tok
                    .lexeme
                    .parse()
                    .map_err(|_| self.error_at(tok.position, "number"))?;
                Ok(Expr::Const(value))
            }
            TokenKind::Identifier => {
                self.pos += 1;
                if let Some(func) = Func::from_name(&tok.lexeme) {
                    self.expect_paren("(")?;
                    let arg = self.expr()?;
                    self.expect_paren(")")?;
                    Ok(Expr::call(func, arg))
                } else if self.peek().is_some_and(|t| t.lexeme == "(") {
                    Err(self.error_at(
                        tok.position,
                        "function name (sin, cos, sinh, cosh, exp, sqrt, ln)",
                    ))
                } else {
                    Ok(Expr::Var(tok.lexeme))
                }
            }
            TokenKind::Paren if tok.lexeme == "(" => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect_paren(")")?;
                Ok(inner)
            }
            _ => Err(self.error_at(tok.position, "operand")),
        }
    }
}
