//! Tokenizer shared by the word, group-algebra and polynomial grammars.

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Token {
    /// `x3`, `y3` or `a3`: a generator or variable index.
    Var(char, u32),
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Comma,
    LParen,
    RParen,
}

pub(crate) fn tokenize(input: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            ',' => {
                out.push(Token::Comma);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Num(s.parse().expect("digits")));
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                let digits_start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if digits_start < i && name.len() == 1 {
                    let s: String = chars[digits_start..i].iter().collect();
                    let idx: u32 = s
                        .parse()
                        .map_err(|_| Error::parse(format!("index too large in `{name}{s}`")))?;
                    if idx == 0 {
                        return Err(Error::parse(format!("indices start at 1: `{name}0`")));
                    }
                    out.push(Token::Var(name.chars().next().unwrap(), idx));
                } else if digits_start < i {
                    return Err(Error::parse(format!(
                        "unexpected identifier `{}`",
                        chars[start..i].iter().collect::<String>()
                    )));
                } else {
                    out.push(Token::Ident(name));
                }
            }
            other => return Err(Error::parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

/// Cursor over a token list.
pub(crate) struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(input: &str) -> Result<Cursor> {
        Ok(Cursor {
            tokens: tokenize(input)?,
            pos: 0,
        })
    }

    pub(crate) fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    pub(crate) fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, t: &Token) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(Error::parse(format!("expected {t:?}, found {:?}", self.peek())))
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos == self.tokens.len()
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(Error::parse(format!("unexpected trailing input at {:?}", self.peek())))
        }
    }

    /// An optionally signed integer exponent after `^`.
    pub(crate) fn exponent(&mut self) -> Result<i64> {
        if !self.eat(&Token::Caret) {
            return Ok(1);
        }
        let neg = if self.eat(&Token::Minus) {
            true
        } else {
            self.eat(&Token::Plus);
            false
        };
        match self.next() {
            Some(Token::Num(n)) => {
                let n: i64 = n.try_into().map_err(|_| Error::parse("exponent too large"))?;
                Ok(if neg { -n } else { n })
            }
            other => Err(Error::parse(format!("expected exponent, found {other:?}"))),
        }
    }
}
