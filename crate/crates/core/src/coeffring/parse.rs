use std::sync::Arc;

use num_bigint::BigInt;

use super::ratfun::RatFun;
use super::symbols::SymbolTable;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|x| x.1).collect())));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

/// Symbol names in order of first appearance.
pub fn collect_symbols(src: &str) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    for (_, t) in lex(src)? {
        if let Tok::Ident(n) = t {
            if !names.contains(&n) {
                names.push(n);
            }
        }
    }
    Ok(names)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    table: &'a Arc<SymbolTable>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<RatFun> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc.checked_add(&rhs)? } else { acc.checked_sub(&rhs)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFun> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == '*' { acc.checked_mul(&rhs)? } else { acc.checked_div(&rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFun> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFun> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let neg = if let Some(Tok::Op('-')) = self.peek() {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    i64::try_from(n).or_else(|_| self.err("exponent too large"))?
                }
                _ => return self.err("expected integer exponent"),
            };
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFun> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(RatFun::from_int(self.table, n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                RatFun::symbol(self.table, &name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression built from integers, declared symbols, `+ - * / ^`
/// and parentheses.
pub fn parse_ratfun(src: &str, table: &Arc<SymbolTable>) -> Result<RatFun> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len(), table };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_renders() {
        let t = SymbolTable::standard::<&str>(&[]).unwrap();
        let f = parse_ratfun("(a - b)", &t).unwrap();
        assert_eq!(f.to_string(), "a - b");
        let g = parse_ratfun("(1 - q^2)/(1-q)", &t).unwrap();
        assert_eq!(g, parse_ratfun("1+q", &t).unwrap());
        let h = parse_ratfun("-q", &t).unwrap();
        assert_eq!(h.to_string(), "-q");
        let r = parse_ratfun("q^-2 * q^2", &t).unwrap();
        assert!(r.is_one());
    }

    #[test]
    fn round_trips_rendering() {
        let t = SymbolTable::standard::<&str>(&[]).unwrap();
        let f = parse_ratfun("(2*a*q^3 - b)/(1 - a*q)^2 + 1/3", &t).unwrap();
        let g = parse_ratfun(&f.to_string(), &t).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn rejects_malformed() {
        let t = SymbolTable::standard::<&str>(&[]).unwrap();
        assert!(matches!(parse_ratfun("((", &t), Err(Error::Parse { .. })));
        assert!(matches!(parse_ratfun("a $ b", &t), Err(Error::Parse { .. })));
        assert!(matches!(parse_ratfun("x", &t), Err(Error::UnknownSymbol(_))));
        assert!(parse_ratfun("1/(q-q)", &t).is_err());
    }

    #[test]
    fn collects_symbols_in_order() {
        assert_eq!(collect_symbols("t*q + A1 - t").unwrap(), vec!["t", "q", "A1"]);
    }
}
