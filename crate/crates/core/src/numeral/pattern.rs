//! Compressed digit-pattern notation: parsing, printing, expansion.
//!
//! A pattern writes a digit string most-significant first between brackets,
//! with a base suffix: `[1 0 0 3]_4`. Two compression forms keep long
//! strings readable:
//!
//! * runs — `2x5` is the digit 2 repeated 5 times;
//! * groups — `(1 2)^3` is the block `1 2` repeated 3 times.
//!
//! Grammar (whitespace between tokens is insignificant):
//!
//! ```text
//! pattern := "[" item+ "]" "_" base
//! item    := digit | "(" item+ ")" "^" count | digit "x" count
//! digit   := ["-"] integer        count := positive integer
//! base    := integer >= 2
//! ```
//!
//! Parse errors carry the byte offset of the offending token. Printing via
//! [`fmt::Display`] is canonical: single spaces between items, counts of 1
//! rendered inline, single-digit groups rendered as runs.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::numeral::{BaseParams, DigitVec};

// ---------------------------------------------------------------------------
// Pattern expressions
// ---------------------------------------------------------------------------

/// One element of a pattern: a digit, a repeated digit, or a repeated block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    /// A single digit.
    Lit(i64),
    /// `digit x count`: the digit repeated `count >= 1` times.
    Run(i64, u64),
    /// `(items)^count`: the block repeated `count >= 1` times.
    Group(Vec<Item>, u64),
}

/// A parsed digit pattern: a nonempty item list plus its base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternExpr {
    base: BaseParams,
    items: Vec<Item>,
}

impl PatternExpr {
    /// Builds a pattern, rejecting empty item lists and zero repeat counts.
    pub fn new(base: BaseParams, items: Vec<Item>) -> Result<PatternExpr> {
        check_items(&items)?;
        Ok(PatternExpr { base, items })
    }

    pub fn base(&self) -> BaseParams {
        self.base
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    /// Expands compression into a flat [`DigitVec`].
    pub fn expand(&self) -> DigitVec {
        let mut msf = Vec::new();
        expand_items(&self.items, &mut msf);
        DigitVec::from_msf(self.base, msf)
    }

    /// The represented value: `expand().eval()`.
    pub fn eval(&self) -> BigInt {
        self.expand().eval()
    }
}

fn check_items(items: &[Item]) -> Result<()> {
    if items.is_empty() {
        return Err(Error::OutOfRange {
            what: "a pattern needs at least one item",
        });
    }
    for item in items {
        match item {
            Item::Lit(_) => {}
            Item::Run(_, count) => {
                if *count == 0 {
                    return Err(Error::OutOfRange {
                        what: "pattern repeat counts must be at least 1",
                    });
                }
            }
            Item::Group(inner, count) => {
                if *count == 0 {
                    return Err(Error::OutOfRange {
                        what: "pattern repeat counts must be at least 1",
                    });
                }
                check_items(inner)?;
            }
        }
    }
    Ok(())
}

fn expand_items(items: &[Item], out: &mut Vec<i64>) {
    for item in items {
        match item {
            Item::Lit(digit) => out.push(*digit),
            Item::Run(digit, count) => {
                for _ in 0..*count {
                    out.push(*digit);
                }
            }
            Item::Group(inner, count) => {
                for _ in 0..*count {
                    expand_items(inner, out);
                }
            }
        }
    }
}

impl fmt::Display for PatternExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        write_items(f, &self.items)?;
        write!(f, "]_{}", self.base)
    }
}

fn write_items(f: &mut fmt::Formatter<'_>, items: &[Item]) -> fmt::Result {
    let mut first = true;
    for item in items {
        if !first {
            write!(f, " ")?;
        }
        first = false;
        write_item(f, item)?;
    }
    Ok(())
}

fn write_item(f: &mut fmt::Formatter<'_>, item: &Item) -> fmt::Result {
    match item {
        Item::Lit(digit) => write!(f, "{digit}"),
        Item::Run(digit, 1) => write!(f, "{digit}"),
        Item::Run(digit, count) => write!(f, "{digit}x{count}"),
        Item::Group(inner, 1) => write_items(f, inner),
        Item::Group(inner, count) => match inner.as_slice() {
            [Item::Lit(digit)] => write!(f, "{digit}x{count}"),
            _ => {
                write!(f, "(")?;
                write_items(f, inner)?;
                write!(f, ")^{count}")
            }
        },
    }
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    LBracket,
    RBracket,
    LParen,
    RParen,
    Caret,
    Underscore,
    RunSep,
    Num(i64),
    Eof,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next token plus the byte offset where it starts.
    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let at = self.pos;
        if self.pos >= self.src.len() {
            return Ok((Tok::Eof, at));
        }
        let byte = self.src[self.pos];
        self.pos += 1;
        let tok = match byte {
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'^' => Tok::Caret,
            b'_' => Tok::Underscore,
            b'x' => Tok::RunSep,
            b'-' | b'0'..=b'9' => {
                self.pos -= 1;
                return self.number();
            }
            other => {
                return Err(pattern_error(
                    at,
                    format!("unexpected character {:?}", char::from(other)),
                ));
            }
        };
        Ok((tok, at))
    }

    fn number(&mut self) -> Result<(Tok, usize)> {
        let at = self.pos;
        let negative = self.src[self.pos] == b'-';
        if negative {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(pattern_error(at, "expected digits after '-'".to_string()));
        }
        let mut value: i64 = 0;
        for &byte in &self.src[digits_start..self.pos] {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(i64::from(byte - b'0')))
                .ok_or_else(|| pattern_error(at, "number too large".to_string()))?;
        }
        if negative {
            value = -value;
        }
        Ok((Tok::Num(value), at))
    }
}

fn pattern_error(offset: usize, message: String) -> Error {
    Error::Pattern { offset, message }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: Option<(Tok, usize)>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Parser<'a> {
        Parser {
            lexer: Lexer::new(src),
            peeked: None,
        }
    }

    fn peek(&mut self) -> Result<&(Tok, usize)> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lexer.next()?);
        }
        Ok(self.peeked.as_ref().expect("just filled"))
    }

    fn advance(&mut self) -> Result<(Tok, usize)> {
        match self.peeked.take() {
            Some(tok) => Ok(tok),
            None => self.lexer.next(),
        }
    }

    fn expect(&mut self, want: Tok, describe: &str) -> Result<usize> {
        let (tok, at) = self.advance()?;
        if tok == want {
            Ok(at)
        } else {
            Err(pattern_error(at, format!("expected {describe}")))
        }
    }

    fn pattern(&mut self) -> Result<PatternExpr> {
        self.expect(Tok::LBracket, "'[' at the start of a pattern")?;
        let items = self.items()?;
        self.expect(Tok::RBracket, "']' to close the pattern")?;
        self.expect(Tok::Underscore, "'_' before the base")?;
        let (tok, at) = self.advance()?;
        let base = match tok {
            Tok::Num(d) if d >= 2 => {
                let d = u32::try_from(d)
                    .map_err(|_| pattern_error(at, "base too large".to_string()))?;
                BaseParams::new(d).expect("checked d >= 2")
            }
            Tok::Num(d) => {
                return Err(pattern_error(at, format!("base must be at least 2, got {d}")));
            }
            _ => return Err(pattern_error(at, "expected a base after '_'".to_string())),
        };
        let (tok, at) = self.advance()?;
        if tok != Tok::Eof {
            return Err(pattern_error(at, "trailing input after the base".to_string()));
        }
        PatternExpr::new(base, items)
    }

    fn items(&mut self) -> Result<Vec<Item>> {
        let mut items = Vec::new();
        loop {
            match self.peek()? {
                (Tok::Num(_), _) | (Tok::LParen, _) => items.push(self.item()?),
                (_, at) => {
                    if items.is_empty() {
                        let at = *at;
                        return Err(pattern_error(
                            at,
                            "expected at least one digit or group".to_string(),
                        ));
                    }
                    return Ok(items);
                }
            }
        }
    }

    fn item(&mut self) -> Result<Item> {
        let (tok, at) = self.advance()?;
        match tok {
            Tok::Num(digit) => {
                if matches!(self.peek()?, (Tok::RunSep, _)) {
                    self.advance()?;
                    let count = self.count()?;
                    Ok(Item::Run(digit, count))
                } else {
                    Ok(Item::Lit(digit))
                }
            }
            Tok::LParen => {
                let inner = self.items()?;
                self.expect(Tok::RParen, "')' to close the group")?;
                self.expect(Tok::Caret, "'^' after the group")?;
                let count = self.count()?;
                Ok(Item::Group(inner, count))
            }
            _ => Err(pattern_error(at, "expected a digit or '('".to_string())),
        }
    }

    fn count(&mut self) -> Result<u64> {
        let (tok, at) = self.advance()?;
        match tok {
            Tok::Num(count) if count >= 1 => Ok(count as u64),
            Tok::Num(count) => Err(pattern_error(
                at,
                format!("repeat count must be positive, got {count}"),
            )),
            _ => Err(pattern_error(at, "expected a repeat count".to_string())),
        }
    }
}

/// Parses pattern text like `[(1 2)^3]_4` or `[1 0 0 3]_4`.
pub fn parse_pattern(text: &str) -> Result<PatternExpr> {
    Parser::new(text).pattern()
}

// ---------------------------------------------------------------------------
