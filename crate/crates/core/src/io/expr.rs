//! Integer template expressions: literals, named parameters, unary minus,
//! `+`, `-`, `*` and floor division `div`, with parentheses.
//!
//! Precedence from tightest: unary minus, then `*` and `div`, then `+` and
//! `-`; binary operators associate to the left.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Binding = BTreeMap<String, i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at offset {pos} in {text:?}: {msg}")]
    Syntax { text: String, pos: usize, msg: String },
    #[error("unbound parameter {0:?}")]
    Unbound(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("div needs nonnegative operands, got {0} div {1}")]
    NegativeOperand(String, String),
    #[error("value {0} does not fit in a 64-bit integer")]
    Overflow(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl fmt::Display for BinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => " div ",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TemplateExpr {
    Int(BigInt),
    Name(String),
    Neg(Box<TemplateExpr>),
    Binary(BinOp, Box<TemplateExpr>, Box<TemplateExpr>),
}

impl TemplateExpr {
    pub fn int(n: i64) -> Self {
        TemplateExpr::Int(n.into())
    }

    pub fn parse(text: &str) -> Result<Self, ExprError> {
        let mut p = Parser {
            text,
            tokens: tokenize(text)?,
            pos: 0,
        };
        let e = p.expr()?;
        match p.tokens.get(p.pos) {
            None => Ok(e),
            Some((at, _)) => Err(p.error(*at, "unexpected trailing input")),
        }
    }

    /// Names of all parameters the expression refers to.
    pub fn names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            TemplateExpr::Int(_) => {}
            TemplateExpr::Name(n) => out.push(n),
            TemplateExpr::Neg(e) => e.collect_names(out),
            TemplateExpr::Binary(_, l, r) => {
                l.collect_names(out);
                r.collect_names(out);
            }
        }
    }

    /// Exact value under `binding`.
    pub fn eval(&self, binding: &Binding) -> Result<i64, ExprError> {
        let v = self.eval_big(binding)?;
        v.to_i64().ok_or_else(|| ExprError::Overflow(v.to_string()))
    }

    fn eval_big(&self, binding: &Binding) -> Result<BigInt, ExprError> {
        Ok(match self {
            TemplateExpr::Int(n) => n.clone(),
            TemplateExpr::Name(n) => binding
                .get(n)
                .map(|&v| BigInt::from(v))
                .ok_or_else(|| ExprError::Unbound(n.clone()))?,
            TemplateExpr::Neg(e) => -e.eval_big(binding)?,
            TemplateExpr::Binary(op, l, r) => {
                let (l, r) = (l.eval_big(binding)?, r.eval_big(binding)?);
                match op {
                    BinOp::Add => l + r,
                    BinOp::Sub => l - r,
                    BinOp::Mul => l * r,
                    BinOp::Div => {
                        if r.is_zero() {
                            return Err(ExprError::DivisionByZero);
                        }
                        if l.is_negative() || r.is_negative() {
                            return Err(ExprError::NegativeOperand(l.to_string(), r.to_string()));
                        }
                        l.div_floor(&r)
                    }
                }
            }
        })
    }
}

impl fmt::Display for TemplateExpr {
    /// Fully parenthesised rendering that parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TemplateExpr::Int(n) if n.is_negative() => write!(f, "(-{})", -n),
            TemplateExpr::Int(n) => write!(f, "{n}"),
            TemplateExpr::Name(n) => f.write_str(n),
            TemplateExpr::Neg(e) => write!(f, "-({e})"),
            TemplateExpr::Binary(op, l, r) => write!(f, "({l}{op}{r})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Div,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'(' => Token::Open,
            b')' => Token::Close,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                out.push((
                    start,
                    if word == "div" {
                        Token::Div
                    } else {
                        Token::Name(word.to_string())
                    },
                ));
                continue;
            }
            _ => {
                return Err(ExprError::Syntax {
                    text: text.to_string(),
                    pos: start,
                    msg: format!("unexpected character {:?}", text[start..].chars().next().unwrap_or('?')),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, pos: usize, msg: &str) -> ExprError {
        ExprError::Syntax {
            text: self.text.to_string(),
            pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn expr(&mut self) -> Result<TemplateExpr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(Token::Plus) => BinOp::Add,
                Some(Token::Minus) => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.term()?;
            lhs = TemplateExpr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<TemplateExpr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Some(Token::Star) => BinOp::Mul,
                Some(Token::Div) => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = TemplateExpr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<TemplateExpr, ExprError> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(TemplateExpr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<TemplateExpr, ExprError> {
        let at = self
            .tokens
            .get(self.pos)
            .map_or(self.text.len(), |(p, _)| *p);
        let tok = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        match tok {
            Some(Token::Int(n)) => Ok(TemplateExpr::Int(n)),
            Some(Token::Name(n)) => Ok(TemplateExpr::Name(n)),
            Some(Token::Open) => {
                let e = self.expr()?;
                match self.tokens.get(self.pos) {
                    Some((_, Token::Close)) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    Some((p, _)) => Err(self.error(*p, "expected ')'")),
                    None => Err(self.error(self.text.len(), "unclosed '('")),
                }
            }
            None => Err(self.error(at, "unexpected end of expression")),
            Some(_) => Err(self.error(at, "expected a number, a name or '('")),
        }
    }
}

/// Parses and evaluates in one step.
pub fn eval_expr(text: &str, binding: &Binding) -> Result<i64, ExprError> {
    TemplateExpr::parse(text)?.eval(binding)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bind(pairs: &[(&str, i64)]) -> Binding {
        pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(eval_expr("c+2", &bind(&[("c", 2)])).unwrap(), 4);
        assert_eq!(
            eval_expr("5*c*(c+1)div 2+2*(c+1)", &bind(&[("c", 2)])).unwrap(),
            21
        );
        assert_eq!(eval_expr("-(c+1)", &bind(&[("c", 1)])).unwrap(), -2);
        assert_eq!(eval_expr("-4*(c+2)", &bind(&[("c", 1)])).unwrap(), -12);
        assert_eq!(eval_expr("7 div 2 div 2", &Binding::new()).unwrap(), 1);
        assert_eq!(eval_expr("10-3-2", &Binding::new()).unwrap(), 5);
        assert_eq!(eval_expr("--3", &Binding::new()).unwrap(), 3);
        assert_eq!(eval_expr("2+3*4", &Binding::new()).unwrap(), 14);
    }

    #[test]
    fn errors() {
        assert_eq!(
            eval_expr("a+1", &Binding::new()),
            Err(ExprError::Unbound("a".into()))
        );
        assert_eq!(eval_expr("1 div 0", &Binding::new()), Err(ExprError::DivisionByZero));
        assert!(matches!(
            eval_expr("-3 div 2", &Binding::new()),
            Err(ExprError::NegativeOperand(..))
        ));
        for bad in ["", "(", "1+", "1 2", "a b", "*3", "(1))", "1 % 2", "div 2"] {
            assert!(
                matches!(TemplateExpr::parse(bad), Err(ExprError::Syntax { .. })),
                "{bad}"
            );
        }
        assert!(matches!(
            eval_expr("99999999999*99999999999", &Binding::new()),
            Err(ExprError::Overflow(_))
        ));
    }

    #[test]
    fn names_listed() {
        let e = TemplateExpr::parse("a*(b+c)-a").unwrap();
        assert_eq!(e.names(), vec!["a", "b", "c", "a"]);
    }
}
