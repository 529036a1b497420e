//! Text formats for permutation and matrix groups.
//!
//! Permutation groups:
//! ```text
//! degree 4
//! order 24
//! gen (1 2)
//! gen (1 2 3 4)
//! ```
//! Matrix groups (row vectors, acting from the right):
//! ```text
//! field 3 2
//! dim 2
//! gen [[1,t],[0,1]]
//! ```
//! Blank lines and `#` comments are ignored; `order` is optional and, when
//! present, must match the computed order.

use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Field, Mat, MatGroup};
use crate::perm::{parse_perm_at, PermGroup};

#[derive(Clone, Debug)]
pub enum GroupFile {
    Perm(PermGroup),
    Mat(MatGroup),
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

struct Line<'a> {
    number: usize,
    keyword: &'a str,
    rest: &'a str,
    rest_col: usize,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            return None;
        }
        let indent = content.len() - trimmed.len();
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest_col = indent + keyword.len() + 2 + (rest.len() - rest.trim_start().len());
        Some(Line { number: i + 1, keyword, rest: rest.trim(), rest_col })
    })
}

fn parse_number<T: std::str::FromStr>(l: &Line<'_>, text: &str, what: &str) -> Result<T> {
    text.parse().map_err(|_| parse_err(l.number, l.rest_col, format!("expected {what}, found '{text}'")))
}

pub fn parse_group_text(text: &str) -> Result<GroupFile> {
    let first = lines(text).next().ok_or_else(|| parse_err(1, 1, "empty group file"))?;
    match first.keyword {
        "degree" => parse_perm_group_text(text).map(GroupFile::Perm),
        "field" => parse_mat_group_text(text).map(GroupFile::Mat),
        other => Err(parse_err(first.number, 1, format!("expected 'degree' or 'field', found '{other}'"))),
    }
}

pub fn parse_group_file(path: &Path) -> Result<GroupFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::MissingData(format!("{}: {e}", path.display())))?;
    parse_group_text(&text)
}

fn check_order(order: Option<(usize, u128)>, computed: impl FnOnce() -> u128) -> Result<()> {
    if let Some((_, expected)) = order {
        let computed = computed();
        if computed != expected {
            return Err(Error::OrderMismatch { expected, computed });
        }
    }
    Ok(())
}

pub fn parse_perm_group_text(text: &str) -> Result<PermGroup> {
    let mut degree: Option<usize> = None;
    let mut order: Option<(usize, u128)> = None;
    let mut gens = Vec::new();
    for l in lines(text) {
        match l.keyword {
            "degree" => {
                if degree.is_some() {
                    return Err(parse_err(l.number, 1, "repeated 'degree' line"));
                }
                let d: usize = parse_number(&l, l.rest, "a positive degree")?;
                if d == 0 {
                    return Err(parse_err(l.number, l.rest_col, "degree must be positive"));
                }
                degree = Some(d);
            }
            "order" => order = Some((l.number, parse_number(&l, l.rest, "a group order")?)),
            "gen" => {
                let d = degree.ok_or_else(|| parse_err(l.number, 1, "'gen' before 'degree'"))?;
                let g = parse_perm_at(l.rest, d, l.number, l.rest_col).map_err(|e| match e {
                    Error::Parse { .. } => e,
                    other => parse_err(l.number, l.rest_col, other.to_string()),
                })?;
                gens.push(g);
            }
            other => return Err(parse_err(l.number, 1, format!("unknown keyword '{other}'"))),
        }
    }
    let degree = degree.ok_or_else(|| parse_err(1, 1, "missing 'degree' line"))?;
    let group = PermGroup::new(degree, gens)?;
    check_order(order, || group.order())?;
    Ok(group)
}

fn parse_matrix(field: &Arc<Field>, dim: usize, l: &Line<'_>) -> Result<Mat> {
    let text = l.rest;
    let err = |offset: usize, msg: String| parse_err(l.number, l.rest_col + offset, msg);
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| err(0, "matrix must be written [[..],[..]]".into()))?;
    let mut rows = Vec::new();
    let mut pos = 1;
    let mut rest = inner;
    while !rest.trim().is_empty() {
        let skip = rest.len() - rest.trim_start_matches([',', ' ']).len();
        rest = &rest[skip..];
        pos += skip;
        let body = rest.strip_prefix('[').ok_or_else(|| err(pos, "expected '['".into()))?;
        let end = body.find(']').ok_or_else(|| err(pos, "unterminated row".into()))?;
        let mut row = Vec::new();
        let mut col = pos + 1;
        for entry in body[..end].split(',') {
            let x = field.parse(entry).map_err(|m| err(col, m))?;
            row.push(x);
            col += entry.len() + 1;
        }
        if row.len() != dim {
            return Err(err(pos, format!("row has {} entries, expected {dim}", row.len())));
        }
        rows.push(row);
        pos += end + 2;
        rest = &body[end + 1..];
    }
    if rows.len() != dim {
        return Err(err(0, format!("matrix has {} rows, expected {dim}", rows.len())));
    }
    let m = Mat::from_rows(field, &rows)?;
    if m.det() == 0 {
        return Err(err(0, "generator is not invertible".into()));
    }
    Ok(m)
}

pub fn parse_mat_group_text(text: &str) -> Result<MatGroup> {
    let mut field: Option<Arc<Field>> = None;
    let mut dim: Option<usize> = None;
    let mut order: Option<(usize, u128)> = None;
    let mut gens = Vec::new();
    for l in lines(text) {
        match l.keyword {
            "field" => {
                let parts: Vec<&str> = l.rest.split_whitespace().collect();
                let (p, k) = match parts.as_slice() {
                    [p] => (parse_number(&l, p, "a prime")?, 1),
                    [p, k] => (parse_number(&l, p, "a prime")?, parse_number(&l, k, "an extension degree")?),
                    _ => return Err(parse_err(l.number, l.rest_col, "expected 'field p [k]'")),
                };
                field = Some(Arc::new(Field::new(p, k).map_err(|e| parse_err(l.number, l.rest_col, e.to_string()))?));
            }
            "dim" => dim = Some(parse_number(&l, l.rest, "a dimension")?),
            "order" => order = Some((l.number, parse_number(&l, l.rest, "a group order")?)),
            "gen" => {
                let f = field.as_ref().ok_or_else(|| parse_err(l.number, 1, "'gen' before 'field'"))?;
                let d = dim.ok_or_else(|| parse_err(l.number, 1, "'gen' before 'dim'"))?;
                gens.push(parse_matrix(f, d, &l)?);
            }
            other => return Err(parse_err(l.number, 1, format!("unknown keyword '{other}'"))),
        }
    }
    let field = field.ok_or_else(|| parse_err(1, 1, "missing 'field' line"))?;
    let dim = dim.ok_or_else(|| parse_err(1, 1, "missing 'dim' line"))?;
    let group = MatGroup::new(&field, dim, gens)?;
    check_order(order, || group.order())?;
    Ok(group)
}

pub fn write_perm_group(group: &PermGroup, with_order: bool) -> String {
    let mut out = format!("degree {}\n", group.degree());
    if with_order {
        out.push_str(&format!("order {}\n", group.order()));
    }
    for g in group.generators() {
        out.push_str(&format!("gen {g}\n"));
    }
    out
}

pub fn write_mat_group(group: &MatGroup, with_order: bool) -> String {
    let f = group.field();
    let mut out = format!("field {} {}\ndim {}\n", f.characteristic(), f.degree(), group.dim());
    if with_order {
        out.push_str(&format!("order {}\n", group.order()));
    }
    for g in group.generators() {
        out.push_str(&format!("gen {g}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym3_file() {
        let g = parse_perm_group_text("# Sym(3)\ndegree 3\ngen (1 2)\ngen (1 2 3)\n").unwrap();
        assert_eq!(g.order(), 6);
        let again = parse_perm_group_text(&write_perm_group(&g, true)).unwrap();
        assert_eq!(again.generators(), g.generators());
    }

    #[test]
    fn order_header_checked() {
        let err = parse_perm_group_text("degree 3\norder 5\ngen (1 2 3)\n").unwrap_err();
        assert_eq!(err, Error::OrderMismatch { expected: 5, computed: 3 });
    }

    #[test]
    fn parse_errors_report_position() {
        match parse_perm_group_text("degree 3\ngen (1 4)\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_group_text("nonsense"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_perm_group_text("gen (1 2)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn matrix_files() {
        let text = "field 3 2\ndim 2\ngen [[1,t],[0,1]]\ngen [[0,1],[2,0]]\n";
        let g = parse_mat_group_text(text).unwrap();
        assert_eq!(g.dim(), 2);
        let again = parse_mat_group_text(&write_mat_group(&g, true)).unwrap();
        assert_eq!(again.generators(), g.generators());
        assert!(matches!(
            parse_mat_group_text("field 5\ndim 2\ngen [[1,1],[1,1]]\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_mat_group_text("field 5\ndim 2\ngen [[1,1],[1]]\n"), Err(Error::Parse { .. })));
    }
}
