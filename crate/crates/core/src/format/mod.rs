//! Plain-text formats for matroids, graphs, structured graphs, edge sets,
//! vector families and axiom reports.
//!
//! Every format is line based. Blank lines and text after `#` are ignored.
//! Parse errors carry the 1-based line and column of the offending token.
//! Printers emit the canonical form, so `parse(print(x)) == x`.

mod edgeset;
mod graph;
mod matroid;
mod report;
mod sgraph;
mod thinfam;

pub use edgeset::{parse_edgeset, print_edgeset};
pub use graph::{parse_graph, print_graph};
pub use matroid::{parse_matroid, parse_presentation, print_matroid, print_presentation};
pub use report::{parse_report, print_report};
pub use sgraph::{parse_sgraph, print_sgraph};
pub use thinfam::{parse_thinfam, print_thinfam};

use crate::error::Error;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Tok<'a> {
    pub line: usize,
    pub col: usize,
    pub text: &'a str,
}

impl<'a> Tok<'a> {
    pub fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.col, msg)
    }

    pub fn parse<T: std::str::FromStr>(&self, what: &str) -> crate::Result<T> {
        self.text.parse().map_err(|_| self.err(format!("expected {what}, found {:?}", self.text)))
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Line<'a> {
    pub no: usize,
    pub toks: Vec<Tok<'a>>,
}

impl<'a> Line<'a> {
    /// Error pointing just past the last token.
    pub fn err_end(&self, msg: impl Into<String>) -> Error {
        let col = self.toks.last().map_or(1, |t| t.col + t.text.chars().count());
        Error::parse(self.no, col, msg)
    }

    pub fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.no, 1, msg)
    }

    pub fn head(&self) -> &'a str {
        self.toks[0].text
    }

    /// Exactly `n` tokens, or an error naming the expected shape.
    pub fn expect_len(&self, n: usize, shape: &str) -> crate::Result<()> {
        match self.toks.len().cmp(&n) {
            std::cmp::Ordering::Equal => Ok(()),
            std::cmp::Ordering::Less => Err(self.err_end(format!("expected `{shape}`"))),
            std::cmp::Ordering::Greater => Err(self.toks[n].err(format!("unexpected token, expected `{shape}`"))),
        }
    }
}

/// Split into non-empty lines of whitespace-separated tokens.
pub(crate) fn lines(src: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let text = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start = None;
        for (b, c) in text.char_indices().chain([(text.len(), ' ')]) {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some(b),
                (true, Some(s)) => {
                    toks.push(Tok { line: i + 1, col: text[..s].chars().count() + 1, text: &text[s..b] });
                    start = None;
                }
                _ => {}
            }
        }
        if !toks.is_empty() {
            out.push(Line { no: i + 1, toks });
        }
    }
    out
}

pub(crate) fn eof(src: &str, msg: impl Into<String>) -> Error {
    Error::parse(src.lines().count().max(1), 1, msg)
}

/// `key: a b c`, with no trailing space when there are no labels.
pub(crate) fn label_line(key: &str, labels: &[String]) -> String {
    if labels.is_empty() {
        format!("{key}:\n")
    } else {
        format!("{key}: {}\n", labels.join(" "))
    }
}

/// `-` for empty, else comma-separated.
pub(crate) fn parse_list<T: std::str::FromStr>(t: &Tok, what: &str) -> crate::Result<Vec<T>> {
    if t.text == "-" {
        return Ok(Vec::new());
    }
    t.text
        .split(',')
        .map(|p| p.parse().map_err(|_| t.err(format!("expected comma-separated {what}, found {:?}", t.text))))
        .collect()
}

pub(crate) fn show_list<T: ToString>(v: &[T]) -> String {
    if v.is_empty() {
        "-".into()
    } else {
        v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Bits written as `0`/`1` characters, `-` for none.
pub(crate) fn parse_bits(t: &Tok) -> crate::Result<Vec<bool>> {
    if t.text == "-" {
        return Ok(Vec::new());
    }
    t.text
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(t.err(format!("expected a bit string, found {:?}", t.text))),
        })
        .collect()
}

pub(crate) fn show_bits(b: &[bool]) -> String {
    if b.is_empty() {
        "-".into()
    } else {
        b.iter().map(|&x| if x { '1' } else { '0' }).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_are_one_based_and_comments_dropped() {
        let ls = lines("\n  foo  bar # baz\n\n#only\nx");
        assert_eq!(ls.len(), 2);
        assert_eq!((ls[0].no, ls[0].toks[0].col, ls[0].toks[1].col), (2, 3, 8));
        assert_eq!(ls[1].no, 5);
    }
}
