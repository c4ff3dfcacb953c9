//! Hand-typable element syntax: `3+5T`, `1 - 0.5T1T2 + 2T^2`.
//!
//! ```text
//! element := ws [sign] term { sign term } ws
//! term    := number [monomial] | monomial
//! monomial:= factor { factor }
//! factor  := "T" [index] ["^" integer]
//! number  := digits ["." digits] [("e"|"E") ["+"|"-"] digits]
//! ```
//!
//! In a one-variable algebra `T` names the variable; otherwise variables are
//! `T1`..`Ts`.

use super::{Algebra, AlgebraError, Monomial, Result, WeilElement};

impl WeilElement {
    pub fn parse(algebra: &Algebra, text: &str) -> Result<WeilElement> {
        let mut p = TextParser { src: text.as_bytes(), pos: 0, algebra };
        p.element()
    }
}

struct TextParser<'a> {
    src: &'a [u8],
    pos: usize,
    algebra: &'a Algebra,
}

impl TextParser<'_> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::InvalidElement(format!("{msg} at position {}", self.pos))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.pos - start
    }

    fn number(&mut self) -> Option<f64> {
        let start = self.pos;
        let int = self.digits();
        let mut frac = 0;
        if self.peek() == Some(b'.') {
            self.pos += 1;
            frac = self.digits();
        }
        if int + frac == 0 {
            self.pos = start;
            return None;
        }
        if matches!(self.peek(), Some(b'e' | b'E')) {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.peek(), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if self.digits() == 0 {
                self.pos = save;
            }
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn integer(&mut self) -> Result<u32> {
        let start = self.pos;
        if self.digits() == 0 {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn monomial(&mut self) -> Result<Option<Monomial>> {
        let s = self.algebra.num_vars();
        let mut exps = vec![0u32; s];
        let mut any = false;
        while self.peek() == Some(b'T') {
            self.pos += 1;
            let var = if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                let i = self.integer()? as usize;
                if i == 0 || i > s {
                    return Err(self.err(&format!("variable T{i} out of range (algebra has {s} variables)")));
                }
                i - 1
            } else if s == 1 {
                0
            } else {
                return Err(self.err("bare T is ambiguous; use T1..Ts"));
            };
            let e = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.integer()?
            } else {
                1
            };
            exps[var] += e;
            any = true;
        }
        Ok(any.then(|| Monomial::new(exps)))
    }

    fn term(&mut self) -> Result<(Monomial, f64)> {
        self.skip_ws();
        let c = self.number();
        let m = self.monomial()?;
        match (c, m) {
            (None, None) => Err(self.err("expected a coefficient or monomial")),
            (c, m) => Ok((m.unwrap_or_else(|| Monomial::unit(self.algebra.num_vars())), c.unwrap_or(1.0))),
        }
    }

    fn element(&mut self) -> Result<WeilElement> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut sign = 1.0;
        if self.peek() == Some(b'-') {
            sign = -1.0;
            self.pos += 1;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            if self.algebra.index_of(&m).is_none() {
                return Err(AlgebraError::NotInBasis(m.label()));
            }
            terms.push((m, sign * c));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1.0,
                Some(b'-') => sign = -1.0,
                Some(_) => return Err(self.err("expected + or -")),
            }
            self.pos += 1;
        }
        WeilElement::from_terms(self.algebra, &terms)
    }
}
