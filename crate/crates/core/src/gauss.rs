//! Text encoding of link diagrams.
//!
//! ```text
//! link      := component (";" component)*
//! component := pass*
//! pass      := ("O" | "U") int sign | "S" int ("l" | "r")
//! sign      := "+" | "-"
//! int       := [1-9][0-9]*
//! ```
//!
//! Passes are whitespace separated. `l` marks the `MinusOne` strand of a
//! double point and `r` the `PlusOne` strand.

use std::fmt::Write as _;

use crate::diagram::{Component, CrossingId, LinkDiagram, Pass, PassKind, Sign};
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<LinkDiagram> {
    LinkDiagram::new(parse_components(text)?)
}

/// Lexes and groups passes without checking the crossing rules.
pub fn parse_components(text: &str) -> Result<Vec<Component>> {
    let mut components = vec![Vec::new()];
    for (column, token) in tokens(text) {
        if token == ";" {
            components.push(Vec::new());
            continue;
        }
        let pass = parse_pass(token).ok_or_else(|| Error::Lexical { token: token.to_string(), column })?;
        components.last_mut().unwrap().push(pass);
    }
    Ok(components.into_iter().map(Component::new).collect())
}

/// Splits on whitespace and on `;`, yielding 1-based character columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in text.char_indices().enumerate() {
        if ch.is_whitespace() || ch == ';' {
            if let Some((b, c)) = start.take() {
                out.push((c + 1, &text[b..byte]));
            }
            if ch == ';' {
                out.push((col + 1, &text[byte..byte + 1]));
            }
        } else if start.is_none() {
            start = Some((byte, col));
        }
    }
    if let Some((b, c)) = start {
        out.push((c + 1, &text[b..]));
    }
    out
}

fn parse_id(digits: &str) -> Option<u32> {
    let first = digits.chars().next()?;
    if !('1'..='9').contains(&first) || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

fn parse_pass(token: &str) -> Option<Pass> {
    if !token.is_ascii() || token.len() < 3 {
        return None;
    }
    let (head, rest) = token.split_at(1);
    let (digits, tail) = rest.split_at(rest.len() - 1);
    let crossing = CrossingId(parse_id(digits)?);
    let kind = match (head, tail) {
        ("O", "+") => PassKind::Over(Sign::Pos),
        ("O", "-") => PassKind::Over(Sign::Neg),
        ("U", "+") => PassKind::Under(Sign::Pos),
        ("U", "-") => PassKind::Under(Sign::Neg),
        ("S", "l") => PassKind::SingularLeft,
        ("S", "r") => PassKind::SingularRight,
        _ => return None,
    };
    Some(Pass { crossing, kind })
}

pub fn format_pass(p: &Pass) -> String {
    let id = p.crossing;
    match p.kind {
        PassKind::Over(s) => format!("O{id}{}", s.symbol()),
        PassKind::Under(s) => format!("U{id}{}", s.symbol()),
        PassKind::SingularLeft => format!("S{id}l"),
        PassKind::SingularRight => format!("S{id}r"),
    }
}

/// Writes the diagram with its crossing ids as they are.
pub fn format_diagram(d: &LinkDiagram) -> String {
    let mut out = String::new();
    for (i, comp) in d.components().iter().enumerate() {
        if i > 0 {
            out.push_str(" ; ");
        }
        for (j, p) in comp.passes().iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}", format_pass(p));
        }
    }
    out.trim().to_string()
}

/// Canonical text: crossings renumbered by first occurrence, single
/// spaces, components joined by ` ; `.
pub fn serialize(d: &LinkDiagram) -> String {
    format_diagram(&d.canonical())
}

/// One parsed line of a batch file.
#[derive(Debug, Clone)]
pub struct BatchLine {
    /// 1-based line number in the input.
    pub line: usize,
    pub text: String,
    pub diagram: Result<LinkDiagram>,
}

/// Parses one diagram per line, skipping blank lines and `#` comments.
pub fn parse_batch(input: &str) -> Vec<BatchLine> {
    input
        .lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| BatchLine { line: i + 1, text: l.to_string(), diagram: parse(l) })
        .collect()
}
