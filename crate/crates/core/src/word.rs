//! Bracketed words in the generator `X` and the unit `I`.
//!
//! Grammar, with arbitrary whitespace between tokens:
//!
//! ```text
//! word := "I" | "X" | "(" word word ")"
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tamari::BracketTree;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Word {
    X,
    I,
    Pair(Box<Word>, Box<Word>),
}

impl Word {
    pub fn pair(left: Word, right: Word) -> Word {
        Word::Pair(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            Word::X | Word::I => 1,
            Word::Pair(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn shape(&self) -> BracketTree {
        match self {
            Word::X | Word::I => BracketTree::Leaf,
            Word::Pair(l, r) => BracketTree::node(l.shape(), r.shape()),
        }
    }

    /// `true` for each `X` leaf, left to right.
    pub fn labels(&self) -> Vec<bool> {
        let mut out = Vec::with_capacity(self.leaves());
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut Vec<bool>) {
        match self {
            Word::X => out.push(true),
            Word::I => out.push(false),
            Word::Pair(l, r) => {
                l.collect_labels(out);
                r.collect_labels(out);
            }
        }
    }

    /// Labels the leaves of `shape` from `labels`, left to right.
    pub fn from_shape(shape: &BracketTree, labels: &[bool]) -> Word {
        fn go(t: &BracketTree, labels: &mut std::slice::Iter<'_, bool>) -> Word {
            match t {
                BracketTree::Leaf => {
                    if *labels.next().expect("one label per leaf") {
                        Word::X
                    } else {
                        Word::I
                    }
                }
                BracketTree::Node(l, r) => {
                    let left = go(l, labels);
                    Word::pair(left, go(r, labels))
                }
            }
        }
        assert_eq!(shape.leaves(), labels.len());
        go(shape, &mut labels.iter())
    }

    /// Replaces the `X` leaves, left to right, by `fillers`.
    pub fn graft(&self, fillers: &[Word]) -> Result<Word> {
        let slots = self.labels().iter().filter(|&&x| x).count();
        if slots != fillers.len() {
            return Err(Error::Arity {
                expected: slots,
                found: fillers.len(),
            });
        }
        fn go(w: &Word, fillers: &mut std::slice::Iter<'_, Word>) -> Word {
            match w {
                Word::X => fillers.next().unwrap().clone(),
                Word::I => Word::I,
                Word::Pair(l, r) => {
                    let left = go(l, fillers);
                    Word::pair(left, go(r, fillers))
                }
            }
        }
        Ok(go(self, &mut fillers.iter()))
    }
}

pub fn parse_word(text: &str) -> Result<Word> {
    let mut parser = Parser { text, pos: 0 };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.error("empty input"));
    }
    let word = parser.word()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(word)
}

pub fn format_word(word: &Word) -> String {
    word.to_string()
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn word(&mut self) -> Result<Word> {
        self.skip_ws();
        match self.peek() {
            Some('X') => {
                self.pos += 1;
                Ok(Word::X)
            }
            Some('I') => {
                self.pos += 1;
                Ok(Word::I)
            }
            Some('(') => {
                self.pos += 1;
                let left = self.word()?;
                let right = self.word()?;
                self.skip_ws();
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        Ok(Word::pair(left, right))
                    }
                    None => Err(self.error("unbalanced parentheses: missing ')'")),
                    Some(_) => Err(self.error("expected ')': pairs are strictly binary")),
                }
            }
            Some(')') => Err(self.error("unbalanced parentheses: unexpected ')'")),
            None => Err(self.error("unexpected end of input")),
            Some(c) => Err(self.error(format!("unexpected character {c:?}"))),
        }
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::X => write!(f, "X"),
            Word::I => write!(f, "I"),
            Word::Pair(l, r) => write!(f, "({l} {r})"),
        }
    }
}
