//! Text descriptors for finite abelian groups.
//!
//! Either a sum of cyclic factors, `Z/2 + Z/4 + Z/4` (whitespace is ignored),
//! or a presentation as JSON, `{"rank": 2, "relations": [[2, 0], [1, 2]]}`,
//! where each inner list is one relation vector of length `rank`.

use serde::Deserialize;

use super::group::FinAbGroup;
use super::intmat::IntMatrix;
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationJson {
    rank: usize,
    relations: Vec<Vec<i64>>,
}

pub fn parse_group(text: &str) -> Result<FinAbGroup> {
    if text.trim_start().starts_with('{') {
        let p: PresentationJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        for (k, r) in p.relations.iter().enumerate() {
            if r.len() != p.rank {
                return Err(Error::Invalid(format!(
                    "relation {} has length {}, expected {}",
                    k + 1,
                    r.len(),
                    p.rank
                )));
            }
        }
        let m = IntMatrix::from_columns(p.rank, &p.relations);
        return FinAbGroup::quotient(p.rank, &m);
    }
    let factors = Parser::new(text).sum()?;
    FinAbGroup::new(&factors)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser { chars: src.chars().collect(), pos: 0 }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn error(&self, pos: usize, message: impl Into<String>) -> Error {
        let (line, column) = self.location(pos);
        Error::Parse { line, column, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(self.error(self.pos, format!("expected '{c}', found '{x}'"))),
            None => Err(self.error(self.pos, format!("expected '{c}', found end of input"))),
        }
    }

    fn number(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(start, "expected a positive integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        let n: i64 = s.parse().map_err(|_| self.error(start, "integer out of range"))?;
        if n < 1 {
            return Err(self.error(start, "cyclic order must be at least 1"));
        }
        Ok(n)
    }

    fn term(&mut self) -> Result<i64> {
        self.expect('Z')?;
        self.expect('/')?;
        self.number()
    }

    fn sum(&mut self) -> Result<Vec<i64>> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error(self.pos, "empty group descriptor"));
        }
        let mut out = vec![self.term()?];
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some('+') => {
                    self.pos += 1;
                    out.push(self.term()?);
                }
                Some(c) => return Err(self.error(self.pos, format!("unexpected '{c}'"))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums() {
        assert_eq!(parse_group("Z/2 + Z/4 + Z/4").unwrap().factors(), &[2, 4, 4]);
        assert_eq!(parse_group("Z/2+Z/4").unwrap().factors(), &[2, 4]);
        assert_eq!(parse_group(" Z / 6\n+ Z/3 ").unwrap().factors(), &[6, 3]);
        assert!(parse_group("Z/1").unwrap().is_trivial());
    }

    #[test]
    fn errors_carry_position() {
        match parse_group("Z/2 + Q/4") {
            Err(Error::Parse { line: 1, column: 7, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_group("Z/2 +\n  Z/x") {
            Err(Error::Parse { line: 2, column: 5, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_group("Z/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_group(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_group("{\"rank\": 1,"), Err(Error::Parse { .. })));
    }

    #[test]
    fn presentations() {
        let g = parse_group(r#"{"rank": 2, "relations": [[2, 0], [1, 2]]}"#).unwrap();
        assert_eq!(g.invariant_factors(), &[4]);
        assert!(matches!(
            parse_group(r#"{"rank": 2, "relations": [[2, 0]]}"#),
            Err(Error::InfiniteQuotient { .. })
        ));
    }
}
