//! Recursive-descent parser.
//!
//! ```text
//! expr    := term { ("+" | "-") term }
//! term    := unary { ("*" | "/") unary }
//! unary   := "-" unary | power
//! power   := primary { "^" exponent }
//! exponent:= ["-"] integer | "(" ["-"] integer ")"
//! primary := number | "x" index | func "(" expr ")" | "(" expr ")"
//! func    := "exp" | "log" | "sin" | "cos" | "sqrt"
//! number  := digits ["." digits] [("e" | "E") ["+" | "-"] digits]
//! ```
//!
//! `^` binds tighter than unary minus, so `-x1^2` is `-(x1^2)`. Chained
//! powers associate to the left: `x1^2^3` is `(x1^2)^3`.

use thiserror::Error;

use super::{Primitive, SmoothExpr};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier '{name}' at position {pos}")]
    UnknownIdentifier { name: String, pos: usize },
    #[error("variable index out of range: {name} at position {pos} (chart dimension {dim})")]
    VariableOutOfRange { name: String, pos: usize, dim: usize },
}

impl SmoothExpr {
    /// Parses `text` as an expression in the chart coordinates `x1..x{dim}`.
    pub fn parse(text: &str, dim: usize) -> Result<SmoothExpr, ParseError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, dim };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.syntax(format!("unexpected '{}'", p.src[p.pos] as char)));
        }
        Ok(e)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    dim: usize,
}

impl Parser<'_> {
    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while matches!(self.src.get(self.pos), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<SmoothExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = lhs + self.term()?;
            } else if self.eat(b'-') {
                lhs = lhs - self.term()?;
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<SmoothExpr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = lhs * self.unary()?;
            } else if self.eat(b'/') {
                lhs = lhs / self.unary()?;
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<SmoothExpr, ParseError> {
        if self.eat(b'-') {
            Ok(-self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<SmoothExpr, ParseError> {
        let mut base = self.primary()?;
        while self.eat(b'^') {
            let n = if self.eat(b'(') {
                let n = self.signed_integer()?;
                self.expect(b')')?;
                n
            } else {
                self.signed_integer()?
            };
            base = base.powi(n);
        }
        Ok(base)
    }

    fn signed_integer(&mut self) -> Result<i32, ParseError> {
        let negative = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected integer exponent"));
        }
        if matches!(self.src.get(self.pos), Some(b'.' | b'e' | b'E')) {
            return Err(self.syntax("exponent must be an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let n: i32 = text.parse().map_err(|_| ParseError::Syntax { pos: start, msg: "exponent too large".into() })?;
        Ok(if negative { -n } else { n })
    }

    fn number(&mut self) -> Result<SmoothExpr, ParseError> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            let s = p.pos;
            while matches!(p.src.get(p.pos), Some(c) if c.is_ascii_digit()) {
                p.pos += 1;
            }
            p.pos - s
        };
        let int = digits(self);
        let mut frac = 0;
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            frac = digits(self);
        }
        if int + frac == 0 {
            return Err(ParseError::Syntax { pos: start, msg: "malformed number".into() });
        }
        if matches!(self.src.get(self.pos), Some(b'e' | b'E')) {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.src.get(self.pos), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if digits(self) == 0 {
                self.pos = save;
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse()
            .map(SmoothExpr::Const)
            .map_err(|_| ParseError::Syntax { pos: start, msg: format!("malformed number '{text}'") })
    }

    fn primary(&mut self) -> Result<SmoothExpr, ParseError> {
        match self.peek() {
            None => Err(self.syntax("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while matches!(self.src.get(self.pos), Some(c) if c.is_ascii_alphanumeric() || *c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(p) = Primitive::from_name(name) {
                    self.expect(b'(')?;
                    let arg = self.expr()?;
                    self.expect(b')')?;
                    return Ok(SmoothExpr::func(p, arg));
                }
                if let Some(index) = name.strip_prefix('x') {
                    if !index.is_empty() && index.bytes().all(|c| c.is_ascii_digit()) {
                        return match index.parse::<usize>() {
                            Ok(i) if i >= 1 && i <= self.dim => Ok(SmoothExpr::Var(i - 1)),
                            _ => Err(ParseError::VariableOutOfRange { name: name.into(), pos: start, dim: self.dim }),
                        };
                    }
                }
                Err(ParseError::UnknownIdentifier { name: name.into(), pos: start })
            }
            Some(c) => Err(self.syntax(format!("unexpected '{}'", c as char))),
        }
    }
}
