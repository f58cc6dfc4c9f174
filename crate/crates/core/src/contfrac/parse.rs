//! Text form of a continued fraction.
//!
//! ```text
//! cf    := '[' item (sep item)* ']'
//! item  := INT | INT 'x' COUNT
//! sep   := ','            (the first separator may also be ';')
//! ```
//!
//! `INT` is a signed decimal integer, `COUNT` a non-negative decimal repetition
//! count (`4x3` is `4, 4, 4`; `4x0` contributes nothing). Whitespace between
//! tokens is ignored.

use super::{CfError, CfTerms};
use crate::scalar::Scalar;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn error(&self, message: impl Into<String>) -> CfError {
        CfError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<(), CfError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn integer<T: Scalar>(&mut self) -> Result<T, CfError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('-' | '+')) {
            self.pos += 1;
        }
        if self.digits().is_empty() {
            self.pos = start;
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected an integer, found '{c}'")),
                None => self.error("expected an integer, found end of input"),
            });
        }
        let text = self.src[start..self.pos].trim_start_matches('+');
        text.parse().map_err(|_| CfError::Parse {
            position: start,
            message: format!("integer '{text}' out of range"),
        })
    }

    fn count(&mut self) -> Result<usize, CfError> {
        self.skip_ws();
        let start = self.pos;
        let text = self.digits();
        if text.is_empty() {
            return Err(self.error("expected a repetition count"));
        }
        text.parse().map_err(|_| CfError::Parse {
            position: start,
            message: format!("repetition count '{text}' out of range"),
        })
    }
}

pub fn parse_cf<T: Scalar>(text: &str) -> Result<CfTerms<T>, CfError> {
    let mut cur = Cursor { src: text, pos: 0 };
    cur.expect('[')?;
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let value: T = cur.integer()?;
        cur.skip_ws();
        if cur.peek() == Some('x') {
            cur.pos += 1;
            let n = cur.count()?;
            terms.extend(std::iter::repeat_n(value, n));
        } else {
            terms.push(value);
        }
        cur.skip_ws();
        match cur.peek() {
            Some(',') => cur.pos += 1,
            Some(';') if first => cur.pos += 1,
            Some(']') => {
                cur.pos += 1;
                break;
            }
            Some(';') => return Err(cur.error("';' is only allowed as the first separator")),
            Some(c) => return Err(cur.error(format!("expected ',' or ']', found '{c}'"))),
            None => return Err(cur.error("unterminated continued fraction, expected ']'")),
        }
        first = false;
    }
    cur.skip_ws();
    if let Some(c) = cur.peek() {
        return Err(cur.error(format!("unexpected '{c}' after ']'")));
    }
    CfTerms::new(terms)
}
