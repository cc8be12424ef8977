//! Text grammars for bundles, weights and characters.
//!
//! ```text
//! bundle := term ('+' term)*
//! term   := 'O' ('(' int ('/' int)? ')')? ('^' uint)?
//! ```
//! Whitespace is ignored everywhere. Weights and characters are
//! comma-separated integers.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ffbundle::{BundleSpec, Slope};
use crate::lparam::Character;
use crate::weights::HighestWeight;

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Cursor { chars, idx: 0, src }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.idx).map_or(self.src.len(), |(p, _)| *p)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|(_, c)| *c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.idx += 1;
        c
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.idx += 1;
                Ok(())
            }
            Some(c) => self.err(format!("expected '{want}', found '{c}'")),
            None => self.err(format!("expected '{want}', found end of input")),
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos();
        let mut text = String::new();
        if matches!(self.peek(), Some('-') | Some('+') | Some('−')) {
            let c = self.bump().unwrap();
            text.push(if c == '−' { '-' } else { c });
        }
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            text.push(c);
            self.idx += 1;
        }
        text.parse::<i64>()
            .map_err(|_| Error::Parse { pos: start, msg: "expected an integer".into() })
    }

    fn at_end(&self) -> bool {
        self.idx >= self.chars.len()
    }
}

/// Parses a bundle such as `O(3/4)+O(1/3)+O^3`.
pub fn parse_bundle(text: &str) -> Result<BundleSpec> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return cur.err("empty bundle expression");
    }
    let mut raw = Vec::new();
    loop {
        cur.expect('O')?;
        let slope = if cur.peek() == Some('(') {
            cur.bump();
            let num = cur.int()?;
            let mut den_pos = cur.pos();
            let den = if cur.peek() == Some('/') {
                cur.bump();
                den_pos = cur.pos();
                cur.int()?
            } else {
                1
            };
            if den <= 0 {
                return Err(Error::Parse { pos: den_pos, msg: "denominator must be positive".into() });
            }
            cur.expect(')')?;
            Slope::new(num, den)?
        } else {
            Slope::ZERO
        };
        let mult = if cur.peek() == Some('^') {
            cur.bump();
            let pos = cur.pos();
            let m = cur.int()?;
            if m <= 0 {
                return Err(Error::Parse { pos, msg: "multiplicity must be positive".into() });
            }
            m as u64
        } else {
            1
        };
        raw.push((slope, mult));
        match cur.peek() {
            None => break,
            Some('+') | Some('⊕') => {
                cur.bump();
            }
            Some(c) => return cur.err(format!("unexpected '{c}'")),
        }
    }
    BundleSpec::normalize(raw)
}

/// Parses a comma-separated integer list. An empty string is the empty list.
pub fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    if cur.at_end() {
        return Ok(out);
    }
    loop {
        out.push(cur.int()?);
        match cur.peek() {
            None => return Ok(out),
            Some(',') => {
                cur.bump();
            }
            Some(c) => return cur.err(format!("unexpected '{c}'")),
        }
    }
}

/// Parses a dominant weight such as `1,0,0`.
pub fn parse_weight(text: &str) -> Result<HighestWeight> {
    let v = parse_int_list(text)?;
    if v.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty weight".into() });
    }
    HighestWeight::new(v)
}

/// Parses a character of `S_φ ≅ Z^r` such as `-1,-2`.
pub fn parse_chi(text: &str) -> Result<Character> {
    Ok(Character::new(parse_int_list(text)?))
}

impl FromStr for BundleSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_bundle(s)
    }
}
