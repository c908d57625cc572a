//! Text format for HN types.
//!
//! ```text
//! # comments run to end of line; blank lines are ignored
//! genus 2
//! block 2 10
//! block 3 9
//! ```
//!
//! `genus <g>` appears exactly once; `block <rank> <degree>` appears one or
//! more times, in HN order (strictly decreasing slopes).

use crate::error::{Error, Result};
use crate::hn::{HnBlock, HnType};
use crate::scalar::Scalar;

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (offset, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..offset],
                    column: line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(offset);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse<I: Scalar>(text: &str) -> Result<HnType<I>> {
    let mut genus: Option<u64> = None;
    let mut blocks: Vec<HnBlock<I>> = Vec::new();
    let mut last_line = 0;

    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(keyword) = toks.first() else {
            continue;
        };
        let end_column = content.trim_end().chars().count() + 1;
        match keyword.text {
            "genus" => {
                if genus.is_some() {
                    return Err(parse_error(line_no, keyword.column, "duplicate `genus` declaration"));
                }
                let [_, value] = toks.as_slice() else {
                    return Err(arity_error(line_no, &toks, 1, end_column));
                };
                let g = value.text.parse::<u64>().map_err(|_| {
                    parse_error(
                        line_no,
                        value.column,
                        format!("genus must be a non-negative integer, found `{}`", value.text),
                    )
                })?;
                genus = Some(g);
            }
            "block" => {
                let [_, rank, degree] = toks.as_slice() else {
                    return Err(arity_error(line_no, &toks, 2, end_column));
                };
                let r = rank.text.parse::<usize>().ok().filter(|r| *r > 0).ok_or_else(|| {
                    parse_error(
                        line_no,
                        rank.column,
                        format!("rank must be a positive integer, found `{}`", rank.text),
                    )
                })?;
                let d = degree.text.parse::<I>().map_err(|_| {
                    parse_error(
                        line_no,
                        degree.column,
                        format!("degree must be an integer, found `{}`", degree.text),
                    )
                })?;
                blocks.push(HnBlock::new(r, d));
            }
            other => {
                return Err(parse_error(
                    line_no,
                    keyword.column,
                    format!("unknown keyword `{other}`, expected `genus` or `block`"),
                ));
            }
        }
    }

    let genus = genus.ok_or_else(|| parse_error(last_line + 1, 1, "missing `genus` declaration"))?;
    if blocks.is_empty() {
        return Err(parse_error(last_line + 1, 1, "at least one `block` line is required"));
    }
    HnType::new(genus, blocks)
}

fn arity_error(line: usize, toks: &[Token<'_>], expected: usize, end_column: usize) -> Error {
    let found = toks.len() - 1;
    let column = toks.get(expected + 1).map_or(end_column, |t| t.column);
    parse_error(
        line,
        column,
        format!("`{}` takes {expected} argument(s), found {found}", toks[0].text),
    )
}

/// Canonical text for `v`; [`parse`] inverts it.
pub fn render<I: Scalar>(v: &HnType<I>) -> String {
    let mut out = format!("genus {}\n", v.genus());
    for b in v.blocks() {
        out.push_str(&format!("block {} {}\n", b.rank, b.degree));
    }
    out
}
