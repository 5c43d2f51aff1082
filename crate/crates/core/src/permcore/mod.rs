//! Permutations and finite permutation groups by full element enumeration.

pub mod classes;
pub mod group;
pub mod perm;
pub mod subgroups;

pub use classes::{conjugacy_classes, ClassData};
pub use group::{group_from_generators, PermGroup, DEFAULT_ORDER_BOUND};
pub use perm::{perm_from_cycles, Permutation};
pub use subgroups::{
    center, centralizer, derived_series, direct_product, frobenius_decomposition, is_normal,
    normal_closure, normal_subgroups, quotient, quotient_group, structure_flags, DerivedLength,
    DerivedSeries, FlagsSummary, FrobeniusDecomposition, Quotient, StructureFlags,
};

use crate::error::{Error, Result};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses a cycle-notation permutation with 1-based points, e.g. `(1 2 3)(4 5)`.
///
/// `line` and `col0` locate the text for error messages.
pub fn parse_cycles(text: &str, degree: usize, line: usize, col0: usize) -> Result<Permutation> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let col = col0 + i;
        match c {
            '(' => {
                if current.is_some() {
                    return Err(parse_err(line, col, "nested `(`"));
                }
                current = Some(Vec::new());
                i += 1;
            }
            ')' => match current.take() {
                Some(cycle) => {
                    cycles.push(cycle);
                    i += 1;
                }
                None => return Err(parse_err(line, col, "unmatched `)`")),
            },
            ' ' | '\t' | ',' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let point: usize = text[start..i]
                    .parse()
                    .map_err(|_| parse_err(line, col, "point number too large"))?;
                let Some(cycle) = current.as_mut() else {
                    return Err(parse_err(line, col, "point outside of a cycle"));
                };
                if point == 0 || point > degree {
                    return Err(parse_err(
                        line,
                        col,
                        format!("point {point} outside 1..={degree}"),
                    ));
                }
                cycle.push(point - 1);
            }
            _ => return Err(parse_err(line, col, format!("unexpected character `{c}`"))),
        }
    }
    if current.is_some() {
        return Err(parse_err(line, col0 + bytes.len(), "unclosed `(`"));
    }
    Permutation::from_cycles(&cycles, degree).map_err(|e| parse_err(line, col0, e.to_string()))
}

/// Reads the group-description format: `degree N` followed by one generator
/// per line in 1-based cycle notation. Blank lines and `#` comments are skipped.
pub fn parse_group_text(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        let col0 = content.len() - trimmed.len() + 1;
        let trimmed = trimmed.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        match degree {
            None => {
                let mut words = trimmed.split_whitespace();
                if words.next() != Some("degree") {
                    return Err(parse_err(line_no, col0, "expected `degree N`"));
                }
                let n = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| parse_err(line_no, col0 + 7, "expected a positive degree"))?;
                if words.next().is_some() {
                    return Err(parse_err(line_no, col0, "trailing text after degree"));
                }
                degree = Some(n);
            }
            Some(n) => gens.push(parse_cycles(trimmed, n, line_no, col0)?),
        }
    }
    let degree = degree.ok_or_else(|| parse_err(1, 1, "missing `degree N` line"))?;
    Ok((degree, gens))
}

pub fn group_from_text(text: &str, bound: usize) -> Result<PermGroup> {
    let (degree, gens) = parse_group_text(text)?;
    PermGroup::with_degree(degree, gens, bound)
}
