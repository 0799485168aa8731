//! Text syntax for elements.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := '[' scalar ']' | integer | '(' expr ')'
//!         | 'br' '(' expr ',' expr [';' scalar] ')'
//!         | symbol
//! ```
//!
//! `br(a,b;x)` is the graded bracket `⟦a,b⟧_x`. Symbols are resolved through a
//! [`SymbolTable`], which fixes their parity. The printer emits
//! `[c] w1 w2 + ...`, which this parser reads back exactly.

use std::collections::HashMap;

use super::{graded_bracket, Element, Generator};
use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarParser};

#[derive(Clone, Debug, Default)]
pub struct SymbolTable {
    names: HashMap<String, Generator>,
}

impl SymbolTable {
    pub fn new<I: IntoIterator<Item = Generator>>(gens: I) -> Self {
        let mut t = SymbolTable::default();
        for g in gens {
            t.insert(g);
        }
        t
    }

    pub fn insert(&mut self, g: Generator) {
        self.names.insert(g.name(), g);
    }

    pub fn get(&self, name: &str) -> Option<Generator> {
        self.names.get(name).copied()
    }
}

pub fn parse_element(src: &str, table: &SymbolTable) -> Result<Element> {
    let mut p = Parser {
        src,
        pos: 0,
        table,
    };
    let e = p.expr()?;
    p.ws();
    if p.pos != src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    table: &'a SymbolTable,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn scalar(&mut self) -> Result<Scalar> {
        let mut sp = ScalarParser::new(&self.src[self.pos..]);
        let v = sp.parse_sum()?;
        self.pos += sp.position();
        Ok(v)
    }

    fn expr(&mut self) -> Result<Element> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        match self.peek() {
            Some(c) => c == b'[' || c == b'(' || c.is_ascii_alphanumeric(),
            None => false,
        }
    }

    fn term(&mut self) -> Result<Element> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') || self.starts_factor() {
                acc = acc.mul(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn ident(&mut self) -> &str {
        self.ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_') {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn factor(&mut self) -> Result<Element> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let c = self.scalar()?;
                self.expect(b']')?;
                Ok(Element::scalar(c))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let c = self.scalar_integer()?;
                Ok(Element::scalar(c))
            }
            Some(_) => {
                let save = self.pos;
                let name = self.ident().to_string();
                if name.is_empty() {
                    return Err(self.err("expected factor"));
                }
                if name == "br" && self.peek() == Some(b'(') {
                    self.pos += 1;
                    let a = self.expr()?;
                    self.expect(b',')?;
                    let b = self.expr()?;
                    let x = if self.eat(b';') {
                        self.scalar()?
                    } else {
                        Scalar::one()
                    };
                    self.expect(b')')?;
                    return graded_bracket(&a, &b, &x);
                }
                match self.table.get(&name) {
                    Some(g) => Ok(Element::gen(g)),
                    None => {
                        self.pos = save;
                        Err(self.err(&format!("unknown symbol '{name}'")))
                    }
                }
            }
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn scalar_integer(&mut self) -> Result<Scalar> {
        let start = self.pos;
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.src[start..self.pos].parse::<Scalar>()
    }
}
