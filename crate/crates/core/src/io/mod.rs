//! Input formats and report serialization.
//!
//! Permutations use 1-based cycle notation. Group specifications use a small
//! sectioned text format (see [`GroupSpec`]); cocycle systems, character
//! tables and reports are JSON.

mod cocycle;
mod grp;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::Result;
use crate::fusion::CharacterTable;
use crate::perm::Permutation;

pub use cocycle::{parse_cocycle_file, write_cocycle_file, CocycleFile, ElementRef, EtaEntry, GroupDescription, XiEntry};
pub use grp::{parse_group_spec, write_group_spec, BuiltGroup, ElementSpec, GroupBody, GroupSpec, PermutationGroupSpec};

/// A syntax or schema error with its position in the input.
///
/// `line` and `column` are 1-based; `offset` is the 0-based byte offset.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at line {line}, column {column}: {message}")]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub column: usize,
    pub offset: usize,
}

impl ParseError {
    /// Error at byte `offset` of `text`, with line and column derived from it.
    pub fn at(text: &str, offset: usize, message: impl Into<String>) -> Self {
        let offset = offset.min(text.len());
        let before = &text.as_bytes()[..offset];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let line_start = before.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1);
        let column = String::from_utf8_lossy(&before[line_start..]).chars().count() + 1;
        ParseError {
            message: message.into(),
            line,
            column,
            offset,
        }
    }

    /// Error at 1-based `line` and `column` of `text`.
    fn at_line_column(text: &str, line: usize, column: usize, message: impl Into<String>) -> Self {
        let mut offset = 0;
        for (i, l) in text.split_inclusive('\n').enumerate() {
            if i + 1 == line {
                offset += l.char_indices().nth(column.saturating_sub(1)).map_or(l.len(), |(b, _)| b);
                break;
            }
            offset += l.len();
        }
        ParseError {
            message: message.into(),
            line: line.max(1),
            column: column.max(1),
            offset: offset.min(text.len()),
        }
    }

    fn shifted(mut self, text: &str, base: usize) -> Self {
        let message = std::mem::take(&mut self.message);
        ParseError::at(text, base + self.offset, message)
    }
}

/// Parses cycle notation such as `"(1 2 3)(4 5)"` or `"()"`.
///
/// Points are 1-based and at most `degree`; cycles must be disjoint and have
/// at least two points. Unmentioned points are fixed. Offsets in errors are
/// relative to `text`.
pub fn parse_permutation(text: &str, degree: usize) -> Result<Permutation, ParseError> {
    let bytes = text.as_bytes();
    let err = |offset: usize, msg: String| ParseError::at(text, offset, msg);
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(err(pos, "expected a permutation".into()));
    }
    let mut cycles = 0;
    let mut identity = false;
    while pos < bytes.len() {
        if identity {
            return Err(err(pos, "\"()\" must stand alone".into()));
        }
        if bytes[pos] != b'(' {
            return Err(err(pos, format!("expected '(', found {:?}", char_at(text, pos))));
        }
        let open = pos;
        pos += 1;
        let mut points: Vec<(usize, usize)> = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                let last = text.trim_end().len().saturating_sub(1).max(open);
                return Err(err(last, "unbalanced parenthesis: cycle is not closed".into()));
            }
            match bytes[pos] {
                b')' => break,
                b'0'..=b'9' => {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let p: usize = text[start..pos]
                        .parse()
                        .map_err(|_| err(start, "point is too large".into()))?;
                    if p == 0 || p > degree {
                        return Err(err(start, format!("point {p} is outside 1..={degree}")));
                    }
                    if used[p - 1] {
                        return Err(err(start, format!("point {p} is repeated")));
                    }
                    used[p - 1] = true;
                    points.push((p, start));
                    if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() && bytes[pos] != b')' {
                        return Err(err(pos, format!("unexpected {:?} in cycle", char_at(text, pos))));
                    }
                }
                _ => return Err(err(pos, format!("unexpected {:?} in cycle", char_at(text, pos)))),
            }
        }
        match points.len() {
            0 if cycles == 0 => identity = true,
            0 => return Err(err(open, "empty cycle".into())),
            1 => return Err(err(open, "a cycle needs at least two points".into())),
            _ => {
                for k in 0..points.len() {
                    let next = points[(k + 1) % points.len()].0;
                    images[points[k].0 - 1] = (next - 1) as u32;
                }
            }
        }
        cycles += 1;
        pos += 1;
        skip_ws(&mut pos);
    }
    Ok(Permutation::from_images(images).expect("disjoint cycles give a bijection"))
}

fn char_at(text: &str, pos: usize) -> char {
    text[pos..].chars().next().unwrap_or(' ')
}

/// Deserializes JSON into `T`, reporting schema errors with the JSON path
/// of the offending value.
pub(crate) fn from_json<T: DeserializeOwned>(text: &str) -> Result<T, ParseError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let value: T = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.inner();
        let message = if path.is_empty() || path == "." {
            inner.to_string()
        } else {
            format!("at {path}: {inner}")
        };
        ParseError::at_line_column(text, inner.line(), inner.column(), message)
    })?;
    Ok(value)
}

/// Parses and validates a character table.
pub fn parse_character_table(text: &str) -> Result<CharacterTable> {
    let table: CharacterTable = from_json(text)?;
    table.validate()?;
    Ok(table)
}

/// Canonical JSON for a character table.
pub fn write_character_table(table: &CharacterTable) -> String {
    write_report(table)
}

/// Deterministic pretty JSON: object keys sorted, two-space indent,
/// trailing newline.
pub fn write_report<T: Serialize + ?Sized>(report: &T) -> String {
    let value = serde_json::to_value(report).expect("reports serialize to JSON");
    let mut out = serde_json::to_string_pretty(&value).expect("JSON values serialize");
    out.push('\n');
    out
}

pub fn parse_report<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(from_json(text)?)
}
