//! Text form of rooted trees.
//!
//! ```text
//! tree := "*" | "(" tree tree tree* ")"
//! ```
//!
//! Whitespace between symbols is ignored. Parsing re-sorts children, so
//! `serialize(parse(s))` is the canonical code of `s`.

use super::rooted::RootedTree;
use super::unrooted::UnrootedTree;
use crate::{ParseError, ParseErrorKind, Result};

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn tree(&mut self) -> Result<RootedTree, ParseError> {
        match self.peek() {
            None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
            Some('*') => {
                self.pos += 1;
                Ok(RootedTree::leaf())
            }
            Some('(') => {
                let open = self.pos;
                self.pos += 1;
                let mut children = Vec::new();
                loop {
                    match self.peek() {
                        Some(')') => {
                            self.pos += 1;
                            break;
                        }
                        None => return Err(self.err(ParseErrorKind::UnexpectedEnd)),
                        Some(_) => children.push(self.tree()?),
                    }
                }
                let found = children.len();
                RootedTree::node(children).map_err(|_| ParseError {
                    position: open,
                    kind: ParseErrorKind::TooFewChildren(found),
                })
            }
            Some(c) => Err(self.err(ParseErrorKind::UnexpectedChar(c))),
        }
    }
}

pub fn parse(text: &str) -> Result<RootedTree> {
    let mut p = Parser { text, pos: 0 };
    let tree = p.tree()?;
    if p.peek().is_some() {
        return Err(p.err(ParseErrorKind::TrailingInput).into());
    }
    Ok(tree)
}

/// Reads an unrooted tree from rooted text. A root with two children stands
/// for the edge joining them; a root with three or more is a vertex.
pub fn parse_unrooted(text: &str) -> Result<UnrootedTree> {
    Ok(UnrootedTree::from_rooted(&parse(text)?))
}

pub fn serialize(t: &RootedTree) -> String {
    t.canonical_code().to_string()
}

pub fn serialize_unrooted(t: &UnrootedTree) -> String {
    t.canonical_code().into_string()
}
