//! File formats: Cayley tables (text and JSON), permutations, isotopism
//! triples, subset lists, and prefix-notation identities.
//!
//! Text table format: line 1 is the order `n`, lines 2..n+1 hold `n`
//! whitespace-separated integers each, row-major. JSON table format: an
//! object with `"n"`, `"table"` (array of rows), and an optional
//! `"s_subset"` array. Permutations are one-line image lists; isotopism
//! files carry three such lines labeled `U=`, `V=`, `W=`.

use serde_json::Value;
use sloop_core::perm::Perm;
use sloop_core::table::CayleyTable;
use sloop_core::variety::{self, IdentityTerm, VarietyDef};
use sloop_core::Isotopism;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug)]
pub enum FormatError {
    Empty,
    BadOrder(String),
    /// 1-based row index as it appears in the file.
    BadToken {
        row: usize,
        col: usize,
        token: String,
    },
    WrongRowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    MissingRows {
        expected: usize,
        found: usize,
    },
    EntryOutOfRange {
        row: usize,
        col: usize,
        entry: usize,
        order: usize,
    },
    Json(String),
    BadPerm(String),
    MissingComponent(&'static str),
    BadSubset(String),
    BadIdentity(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Empty => write!(f, "input is empty"),
            FormatError::BadOrder(s) => write!(f, "first line must be the order, found {s:?}"),
            FormatError::BadToken { row, col, token } => {
                write!(f, "row {row}, column {col}: {token:?} is not an integer")
            }
            FormatError::WrongRowLength {
                row,
                expected,
                found,
            } => write!(f, "row {row}: expected {expected} entries, found {found}"),
            FormatError::MissingRows { expected, found } => {
                write!(f, "expected {expected} rows, found {found}")
            }
            FormatError::EntryOutOfRange {
                row,
                col,
                entry,
                order,
            } => write!(
                f,
                "row {row}, column {col}: entry {entry} is outside 0..{order}"
            ),
            FormatError::Json(e) => write!(f, "bad JSON table: {e}"),
            FormatError::BadPerm(s) => write!(f, "bad permutation: {s}"),
            FormatError::MissingComponent(c) => write!(f, "isotopism file is missing {c}="),
            FormatError::BadSubset(s) => write!(f, "bad subset list: {s}"),
            FormatError::BadIdentity(s) => write!(f, "bad identity: {s}"),
        }
    }
}

impl std::error::Error for FormatError {}

/// A parsed table plus the optional designated subset from JSON input.
pub struct ParsedTable {
    pub table: CayleyTable,
    pub s_subset: Option<BTreeSet<usize>>,
}

/// Parses either format, sniffing JSON by a leading `{`.
pub fn parse_table(source: &str) -> Result<ParsedTable, FormatError> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') {
        parse_table_json(source)
    } else {
        parse_table_text(source).map(|table| ParsedTable {
            table,
            s_subset: None,
        })
    }
}

pub fn parse_table_text(source: &str) -> Result<CayleyTable, FormatError> {
    let mut lines = source.lines().filter(|l| !l.trim().is_empty());
    let first = lines.next().ok_or(FormatError::Empty)?;
    let order: usize = first
        .trim()
        .parse()
        .map_err(|_| FormatError::BadOrder(first.trim().to_string()))?;
    if order == 0 {
        return Err(FormatError::BadOrder(first.trim().to_string()));
    }
    let mut entries = Vec::with_capacity(order * order);
    let mut rows_seen = 0usize;
    for (r, line) in lines.enumerate() {
        if rows_seen == order {
            // Trailing non-empty content counts as an extra row.
            return Err(FormatError::MissingRows {
                expected: order,
                found: order + 1 + r - rows_seen,
            });
        }
        let mut row = Vec::with_capacity(order);
        for (c, token) in line.split_whitespace().enumerate() {
            let entry: usize = token.parse().map_err(|_| FormatError::BadToken {
                row: r + 1,
                col: c + 1,
                token: token.to_string(),
            })?;
            if entry >= order {
                return Err(FormatError::EntryOutOfRange {
                    row: r + 1,
                    col: c + 1,
                    entry,
                    order,
                });
            }
            row.push(entry);
        }
        if row.len() != order {
            return Err(FormatError::WrongRowLength {
                row: r + 1,
                expected: order,
                found: row.len(),
            });
        }
        entries.extend(row);
        rows_seen += 1;
    }
    if rows_seen != order {
        return Err(FormatError::MissingRows {
            expected: order,
            found: rows_seen,
        });
    }
    CayleyTable::new(order, entries).map_err(|e| FormatError::Json(e.to_string()))
}

pub fn parse_table_json(source: &str) -> Result<ParsedTable, FormatError> {
    let v: Value = serde_json::from_str(source).map_err(|e| FormatError::Json(e.to_string()))?;
    let order = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| FormatError::Json("missing integer field \"n\"".into()))? as usize;
    let rows = v
        .get("table")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError::Json("missing array field \"table\"".into()))?;
    if rows.len() != order {
        return Err(FormatError::MissingRows {
            expected: order,
            found: rows.len(),
        });
    }
    let mut entries = Vec::with_capacity(order * order);
    for (r, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| FormatError::Json(format!("row {} is not an array", r + 1)))?;
        if row.len() != order {
            return Err(FormatError::WrongRowLength {
                row: r + 1,
                expected: order,
                found: row.len(),
            });
        }
        for (c, cell) in row.iter().enumerate() {
            let entry = cell.as_u64().ok_or_else(|| FormatError::BadToken {
                row: r + 1,
                col: c + 1,
                token: cell.to_string(),
            })? as usize;
            if entry >= order {
                return Err(FormatError::EntryOutOfRange {
                    row: r + 1,
                    col: c + 1,
                    entry,
                    order,
                });
            }
            entries.push(entry);
        }
    }
    let table = CayleyTable::new(order, entries).map_err(|e| FormatError::Json(e.to_string()))?;
    let s_subset = match v.get("s_subset") {
        None | Some(Value::Null) => None,
        Some(Value::Array(a)) => {
            let mut s = BTreeSet::new();
            for x in a {
                let e = x
                    .as_u64()
                    .ok_or_else(|| FormatError::BadSubset(x.to_string()))?
                    as usize;
                s.insert(e);
            }
            Some(s)
        }
        Some(other) => return Err(FormatError::BadSubset(other.to_string())),
    };
    Ok(ParsedTable { table, s_subset })
}

pub fn render_table_text(t: &CayleyTable) -> String {
    let n = t.order();
    let mut out = format!("{n}\n");
    for x in 0..n {
        let row: Vec<String> = (0..n).map(|y| t.get(x, y).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn table_json(t: &CayleyTable, s_subset: Option<&BTreeSet<usize>>) -> Value {
    let n = t.order();
    let rows: Vec<Value> = (0..n)
        .map(|x| Value::from((0..n).map(|y| t.get(x, y)).collect::<Vec<usize>>()))
        .collect();
    let mut obj = serde_json::Map::new();
    obj.insert("n".into(), Value::from(n));
    obj.insert("table".into(), Value::from(rows));
    if let Some(s) = s_subset {
        obj.insert(
            "s_subset".into(),
            Value::from(s.iter().copied().collect::<Vec<usize>>()),
        );
    }
    Value::Object(obj)
}

/// Image list separated by whitespace or commas.
pub fn parse_perm(source: &str) -> Result<Perm, FormatError> {
    let mut images = Vec::new();
    for token in source.split(|c: char| c.is_whitespace() || c == ',') {
        if token.is_empty() {
            continue;
        }
        images.push(
            token
                .parse::<usize>()
                .map_err(|_| FormatError::BadPerm(format!("{token:?} is not an integer")))?,
        );
    }
    if images.is_empty() {
        return Err(FormatError::BadPerm("empty image list".into()));
    }
    Perm::from_images(images).map_err(|e| FormatError::BadPerm(e.to_string()))
}

/// Isotopism file: three lines `U= …`, `V= …`, `W= …`, or a JSON object
/// with keys `"U"`, `"V"`, `"W"`.
pub fn parse_isotopism(source: &str) -> Result<Isotopism, FormatError> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') {
        let v: Value =
            serde_json::from_str(source).map_err(|e| FormatError::Json(e.to_string()))?;
        let comp = |key: &'static str| -> Result<Perm, FormatError> {
            let arr = v
                .get(key)
                .and_then(Value::as_array)
                .ok_or(FormatError::MissingComponent(key))?;
            let images: Option<Vec<usize>> =
                arr.iter().map(|x| x.as_u64().map(|u| u as usize)).collect();
            let images = images.ok_or_else(|| FormatError::BadPerm(format!("{key} images")))?;
            Perm::from_images(images).map_err(|e| FormatError::BadPerm(e.to_string()))
        };
        return Isotopism::new(comp("U")?, comp("V")?, comp("W")?)
            .map_err(|e| FormatError::BadPerm(e.to_string()));
    }
    let mut u = None;
    let mut vv = None;
    let mut w = None;
    for line in source.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (label, rest) = match line.split_once('=') {
            Some(x) => x,
            None => return Err(FormatError::BadPerm(format!("unlabeled line {line:?}"))),
        };
        let perm = parse_perm(rest)?;
        match label.trim() {
            "U" => u = Some(perm),
            "V" => vv = Some(perm),
            "W" => w = Some(perm),
            other => return Err(FormatError::BadPerm(format!("unknown label {other:?}"))),
        }
    }
    Isotopism::new(
        u.ok_or(FormatError::MissingComponent("U"))?,
        vv.ok_or(FormatError::MissingComponent("V"))?,
        w.ok_or(FormatError::MissingComponent("W"))?,
    )
    .map_err(|e| FormatError::BadPerm(e.to_string()))
}

pub fn render_isotopism_text(iso: &Isotopism) -> String {
    format!("U= {}\nV= {}\nW= {}\n", iso.u(), iso.v(), iso.w())
}

pub fn perm_json(p: &Perm) -> Value {
    Value::from(p.images().to_vec())
}

pub fn isotopism_json(iso: &Isotopism) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("U".into(), perm_json(iso.u()));
    obj.insert("V".into(), perm_json(iso.v()));
    obj.insert("W".into(), perm_json(iso.w()));
    Value::Object(obj)
}

/// `--s`-style subset list: comma-separated element indices.
pub fn parse_subset(source: &str) -> Result<BTreeSet<usize>, FormatError> {
    let mut out = BTreeSet::new();
    for token in source.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        out.insert(
            token
                .parse::<usize>()
                .map_err(|_| FormatError::BadSubset(format!("{token:?} is not an integer")))?,
        );
    }
    if out.is_empty() {
        return Err(FormatError::BadSubset("empty list".into()));
    }
    Ok(out)
}

/// Prefix term: `(mul A B)`, `(linv A)`, `(rinv A)`, `e`, variables `x y z`
/// or `v<k>`. Variable indices follow first appearance.
fn parse_term(
    tokens: &[String],
    pos: &mut usize,
    vars: &mut Vec<String>,
) -> Result<IdentityTerm, FormatError> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| FormatError::BadIdentity("unexpected end of term".into()))?
        .clone();
    *pos += 1;
    match tok.as_str() {
        "(" => {
            let head = tokens
                .get(*pos)
                .ok_or_else(|| FormatError::BadIdentity("missing operator after (".into()))?
                .clone();
            *pos += 1;
            let term = match head.as_str() {
                "mul" => {
                    let a = parse_term(tokens, pos, vars)?;
                    let b = parse_term(tokens, pos, vars)?;
                    variety::mul(a, b)
                }
                "linv" => variety::linv(parse_term(tokens, pos, vars)?),
                "rinv" => variety::rinv(parse_term(tokens, pos, vars)?),
                other => {
                    return Err(FormatError::BadIdentity(format!(
                        "unknown operator {other:?}"
                    )))
                }
            };
            match tokens.get(*pos).map(String::as_str) {
                Some(")") => {
                    *pos += 1;
                    Ok(term)
                }
                _ => Err(FormatError::BadIdentity("missing )".into())),
            }
        }
        ")" => Err(FormatError::BadIdentity("unexpected )".into())),
        "e" => Ok(variety::ident()),
        name => {
            let index = match vars.iter().position(|v| v == name) {
                Some(i) => i,
                None => {
                    vars.push(name.to_string());
                    vars.len() - 1
                }
            };
            Ok(variety::var(index))
        }
    }
}

fn tokenize(source: &str) -> Vec<String> {
    source
        .replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_string)
        .collect()
}

/// Custom identity `"<lhs> = <rhs>"`, both sides in prefix notation.
pub fn parse_identity(name: &str, source: &str) -> Result<VarietyDef, FormatError> {
    let (lhs_src, rhs_src) = source
        .split_once('=')
        .ok_or_else(|| FormatError::BadIdentity("expected \"<lhs> = <rhs>\"".into()))?;
    let mut vars = Vec::new();
    let parse_side = |src: &str, vars: &mut Vec<String>| -> Result<IdentityTerm, FormatError> {
        let tokens = tokenize(src);
        let mut pos = 0;
        let term = parse_term(&tokens, &mut pos, vars)?;
        if pos != tokens.len() {
            return Err(FormatError::BadIdentity(format!(
                "trailing tokens after term in {src:?}"
            )));
        }
        Ok(term)
    };
    let lhs = parse_side(lhs_src, &mut vars)?;
    let rhs = parse_side(rhs_src, &mut vars)?;
    VarietyDef::new(name, lhs, rhs).map_err(|e| FormatError::BadIdentity(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use sloop_core::fixtures;

    #[test]
    fn text_round_trip_is_bit_exact() {
        let t = fixtures::example1_dot();
        let text = render_table_text(&t);
        let parsed = parse_table_text(&text).unwrap();
        assert_eq!(parsed, t);
        assert_eq!(render_table_text(&parsed), text);
    }

    #[test]
    fn smallest_table_parses() {
        let t = parse_table_text("1\n0").unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.entries(), &[0]);
    }

    #[test]
    fn text_errors_name_the_offending_position() {
        let err = parse_table_text("2\n0 1\n1 x").unwrap_err();
        assert!(matches!(err, FormatError::BadToken { row: 2, col: 2, .. }));
        let err = parse_table_text("2\n0 1 1\n1 0").unwrap_err();
        assert!(matches!(
            err,
            FormatError::WrongRowLength {
                row: 1,
                expected: 2,
                found: 3
            }
        ));
        let err = parse_table_text("2\n0 2\n1 0").unwrap_err();
        assert!(matches!(
            err,
            FormatError::EntryOutOfRange {
                row: 1,
                col: 2,
                entry: 2,
                order: 2
            }
        ));
    }

    #[test]
    fn json_round_trip_with_subset() {
        let t = fixtures::example2_times6();
        let subset: BTreeSet<usize> = [2, 4].into_iter().collect();
        let json = table_json(&t, Some(&subset)).to_string();
        let parsed = parse_table(&json).unwrap();
        assert_eq!(parsed.table, t);
        assert_eq!(parsed.s_subset, Some(subset));
    }

    #[test]
    fn isotopism_text_and_json_agree() {
        let iso = fixtures::example1_triple();
        let text = render_isotopism_text(&iso);
        assert_eq!(parse_isotopism(&text).unwrap(), iso);
        let json = isotopism_json(&iso).to_string();
        assert_eq!(parse_isotopism(&json).unwrap(), iso);
    }

    #[test]
    fn subset_lists_parse() {
        let s = parse_subset("2,4").unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![2, 4]);
        assert!(parse_subset("a").is_err());
    }

    #[test]
    fn identity_parser_matches_the_catalog_form() {
        let def = parse_identity("custom", "(mul (mul x y) (rinv x)) = y").unwrap();
        let cip = variety::catalog_entry("cip").unwrap();
        assert_eq!(def.lhs, cip.lhs);
        assert_eq!(def.rhs, cip.rhs);
        assert!(def.requires_loop);
    }

    #[test]
    fn identity_parser_rejects_junk() {
        assert!(parse_identity("c", "(mul x y").is_err());
        assert!(parse_identity("c", "(frob x y) = x").is_err());
        assert!(parse_identity("c", "x y = x").is_err());
    }
}
