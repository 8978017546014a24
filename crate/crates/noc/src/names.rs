//! The tiny textual grammar for naming graphs on the command line and in
//! knowledge-base files.
//!
//! ```text
//! expr  := union
//! union := join ('+' join)*          disjoint union, lowest precedence
//! join  := atom (('v' | '∨') atom)*  join
//! atom  := '(' expr ')' | NAME
//! NAME  := [count] base              e.g. "2K2", "3K1", "2P3"
//! base  := "claw" | "paw" | "diamond" | "gem" | "hvn"
//!        | ("P"|"C"|"K") digits ["-e"]
//! ```
//!
//! Names are case-insensitive; `K4-e` is `K4` minus an edge. An embedded
//! `v` also works as the join operator (`P4vK1` is the gem), which is why
//! fixed names are matched before the single-letter families.

use crate::catalog::{self, NamedGraph};
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph expression error at byte {pos}: {message}")]
pub struct NameError {
    pub pos: usize,
    pub message: String,
}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, NameError> {
    Err(NameError {
        pos,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    LParen,
    RParen,
    Plus,
    Join,
    Graph(Graph),
}

const FIXED_NAMES: [&str; 5] = ["diamond", "claw", "paw", "gem", "hvn"];

fn lex(input: &str) -> Result<Vec<(usize, Token)>, NameError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = input[i..].chars().next().expect("in bounds");
        match c {
            ' ' | '\t' => i += 1,
            '(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '∨' => {
                out.push((i, Token::Join));
                i += '∨'.len_utf8();
            }
            _ if c.is_ascii_alphanumeric() => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'-')
                {
                    i += 1;
                }
                // after a graph or ')', a word may begin with the join letter
                let after_value = matches!(
                    out.last(),
                    Some((_, Token::Graph(_))) | Some((_, Token::RParen))
                );
                lex_word(&input[start..i], start, !after_value, &mut out)?;
            }
            _ => return err(i, format!("unexpected character {c:?}")),
        }
    }
    Ok(out)
}

/// Splits a word like `P4vK1` or `2K2` or `hvn` into name and join tokens.
/// Incomplete trailing joins are left for the parser to reject.
fn lex_word(
    word: &str,
    base_pos: usize,
    mut expect_name: bool,
    out: &mut Vec<(usize, Token)>,
) -> Result<(), NameError> {
    let mut rest = word;
    let mut pos = base_pos;
    while !rest.is_empty() {
        if expect_name {
            let (g, used) = lex_name(rest, pos)?;
            out.push((pos, Token::Graph(g)));
            pos += used;
            rest = &rest[used..];
            expect_name = false;
        } else if rest.starts_with('v') || rest.starts_with('V') {
            out.push((pos, Token::Join));
            pos += 1;
            rest = &rest[1..];
            expect_name = true;
        } else {
            return err(pos, format!("expected 'v' or end of name, found {rest:?}"));
        }
    }
    Ok(())
}

/// Parses one name at the front of `rest`; returns the graph and bytes used.
fn lex_name(rest: &str, pos: usize) -> Result<(Graph, usize), NameError> {
    let lower = rest.to_ascii_lowercase();
    for fixed in FIXED_NAMES {
        if lower.starts_with(fixed) {
            let named = match fixed {
                "diamond" => NamedGraph::Diamond,
                "claw" => NamedGraph::Claw,
                "paw" => NamedGraph::Paw,
                "gem" => NamedGraph::Gem,
                "hvn" => NamedGraph::Hvn,
                _ => unreachable!(),
            };
            let g = named
                .make()
                .map_err(|e| NameError { pos, message: e.to_string() })?;
            return Ok((g, fixed.len()));
        }
    }

    let bytes = lower.as_bytes();
    let mut i = 0;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    let count: usize = if i > 0 {
        lower[..i].parse().map_err(|_| NameError {
            pos,
            message: format!("bad multiplier in {rest:?}"),
        })?
    } else {
        1
    };
    if i >= bytes.len() || !matches!(bytes[i], b'p' | b'c' | b'k') {
        return err(pos, format!("unknown graph name at {rest:?}"));
    }
    let letter = bytes[i];
    i += 1;
    let digits_start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i == digits_start {
        return err(pos, format!("missing order after {:?}", &rest[..digits_start]));
    }
    let k: usize = lower[digits_start..i].parse().map_err(|_| NameError {
        pos,
        message: format!("bad order in {rest:?}"),
    })?;
    let minus_e = letter == b'k' && lower[i..].starts_with("-e");
    if minus_e {
        i += 2;
    }
    let named = match (letter, minus_e) {
        (b'p', _) => NamedGraph::Path(k),
        (b'c', _) => NamedGraph::Cycle(k),
        (b'k', false) => NamedGraph::Complete(k),
        (b'k', true) => NamedGraph::CompleteMinusEdge(k),
        _ => unreachable!(),
    };
    if count == 0 {
        return err(pos, "multiplier must be positive");
    }
    let one = named
        .make()
        .map_err(|e| NameError { pos, message: e.to_string() })?;
    let mut g = one.clone();
    for _ in 1..count {
        g = g.disjoint_union(&one).map_err(|e| NameError {
            pos,
            message: e.to_string(),
        })?;
    }
    Ok((g, i))
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn union(&mut self) -> Result<Graph, NameError> {
        let mut g = self.join()?;
        while self.peek() == Some(&Token::Plus) {
            let pos = self.pos();
            self.advance();
            let h = self.join()?;
            g = g.disjoint_union(&h).map_err(|e| NameError {
                pos,
                message: e.to_string(),
            })?;
        }
        Ok(g)
    }

    fn join(&mut self) -> Result<Graph, NameError> {
        let mut g = self.atom()?;
        while self.peek() == Some(&Token::Join) {
            let pos = self.pos();
            self.advance();
            let h = self.atom()?;
            g = g.join(&h).map_err(|e| NameError {
                pos,
                message: e.to_string(),
            })?;
        }
        Ok(g)
    }

    fn atom(&mut self) -> Result<Graph, NameError> {
        let pos = self.pos();
        match self.advance() {
            Some(Token::LParen) => {
                let g = self.union()?;
                if self.advance() != Some(Token::RParen) {
                    return err(pos, "unclosed parenthesis");
                }
                Ok(g)
            }
            Some(Token::Graph(g)) => Ok(g),
            other => err(pos, format!("expected a graph name, found {other:?}")),
        }
    }
}

/// Parses an expression like `"2K2"`, `"P4vK2"`, `"(K2+K1)vK2"`, `"K4-e"`.
pub fn parse(input: &str) -> Result<Graph, NameError> {
    let tokens = lex(input)?;
    if tokens.is_empty() {
        return err(0, "empty graph expression");
    }
    let mut p = Parser {
        tokens,
        at: 0,
        end: input.len(),
    };
    let g = p.union()?;
    if p.at != p.tokens.len() {
        return err(p.pos(), "trailing input after expression");
    }
    Ok(g)
}

/// Well-known name for a handful of small graphs, if any (used in reports).
pub fn display_name(g: &Graph) -> Option<&'static str> {
    let pairs: [(&str, Graph); 8] = [
        ("2K2", catalog::two_k2()),
        ("3K1", catalog::three_k1()),
        ("claw", catalog::claw()),
        ("paw", catalog::paw()),
        ("diamond", catalog::diamond()),
        ("gem", catalog::gem()),
        ("hvn", catalog::hvn()),
        ("C5", catalog::cycle(5).expect("static graph")),
    ];
    pairs
        .into_iter()
        .find(|(_, h)| crate::iso::are_isomorphic(g, h))
        .map(|(name, _)| name)
}
