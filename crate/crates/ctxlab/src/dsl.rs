//! Line-oriented text format for logics.
//!
//! ```text
//! # comment
//! dim 3
//! vertex z1 [1 0 0]
//! vertex u1
//! context y1+ z1 y1-
//! cycle 1 3 5 7 9
//! ```
//!
//! Ray entries are integers or rationals `p/q`. Vertices first used in a
//! `context` line without declaration are implicitly declared rayless;
//! strict mode disables that. Errors carry 1-based line and column.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::catalog::LogicBundle;
use crate::hypergraph::{valid_name, Hypergraph, HypergraphError};
use crate::realization::{Ray, Realization, RealizationError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DslError {
    #[error("line {line}, column {column}: {message}")]
    SyntaxError {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: vertex {name:?} already declared")]
    DuplicateDeclaration { line: usize, name: String },
    #[error("line {line}: ray has {got} entries but dim is {expected}")]
    DimensionMismatch {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("line {line}: unknown directive {word:?}")]
    UnknownDirective { line: usize, word: String },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Realization(#[from] RealizationError),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> DslError {
    DslError::SyntaxError {
        line,
        column,
        message: message.into(),
    }
}

/// A token plus its 1-based starting column.
fn tokenize(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &text[s..]));
    }
    out
}

fn parse_rational(line: usize, column: usize, token: &str) -> Result<BigRational, DslError> {
    let bad = || syntax(line, column, format!("expected integer or p/q, got {token:?}"));
    match token.split_once('/') {
        None => {
            let n: BigInt = token.parse().map_err(|_| bad())?;
            Ok(BigRational::from(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(syntax(line, column, "zero denominator"));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

struct VertexDecl {
    line: usize,
    ray: Option<Vec<BigRational>>,
}

/// Parses the text format into a [`LogicBundle`]. With `strict`, every
/// vertex used in a `context` or `cycle` line must have been declared first.
pub fn parse_logic(text: &str, strict: bool) -> Result<LogicBundle, DslError> {
    let mut dim: Option<(usize, usize)> = None; // (value, line)
    let mut declared: BTreeMap<String, VertexDecl> = BTreeMap::new();
    let mut decl_order: Vec<String> = Vec::new();
    let mut contexts: Vec<Vec<String>> = Vec::new();
    let mut cycle: Option<Vec<String>> = None;

    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let tokens = tokenize(content);
        if tokens.is_empty() {
            continue;
        }
        let (dcol, directive) = tokens[0];
        let args = &tokens[1..];
        match directive {
            "dim" => {
                if dim.is_some() {
                    return Err(syntax(line, dcol, "duplicate dim declaration"));
                }
                if args.len() != 1 {
                    return Err(syntax(line, dcol, "dim takes exactly one argument"));
                }
                let (col, tok) = args[0];
                let n: usize = tok
                    .parse()
                    .map_err(|_| syntax(line, col, format!("invalid dimension {tok:?}")))?;
                if n == 0 {
                    return Err(syntax(line, col, "dimension must be positive"));
                }
                dim = Some((n, line));
            }
            "vertex" => {
                if args.is_empty() {
                    return Err(syntax(line, dcol, "vertex needs a name"));
                }
                let (ncol, name) = args[0];
                if !valid_name(name) {
                    return Err(syntax(line, ncol, format!("invalid vertex name {name:?}")));
                }
                if declared.contains_key(name) {
                    return Err(DslError::DuplicateDeclaration {
                        line,
                        name: name.to_owned(),
                    });
                }
                let ray = if args.len() > 1 {
                    let (bcol, btok) = args[1];
                    if btok != "[" && !btok.starts_with('[') {
                        return Err(syntax(line, bcol, "expected '[' to open ray"));
                    }
                    // re-tokenize the bracketed tail to allow `[1 0 0]`,
                    // `[ 1 0 0 ]`, and glued brackets
                    let tail: String = args[1..]
                        .iter()
                        .map(|(_, t)| *t)
                        .collect::<Vec<_>>()
                        .join(" ");
                    let inner = tail
                        .strip_prefix('[')
                        .ok_or_else(|| syntax(line, bcol, "expected '[' to open ray"))?;
                    let inner = inner
                        .strip_suffix(']')
                        .ok_or_else(|| syntax(line, bcol, "missing ']' closing ray"))?;
                    let mut entries = Vec::new();
                    for (col, tok) in tokenize(inner) {
                        entries.push(parse_rational(line, bcol + col, tok)?);
                    }
                    if entries.is_empty() {
                        return Err(syntax(line, bcol, "empty ray"));
                    }
                    Some(entries)
                } else {
                    None
                };
                if let (Some((n, _)), Some(r)) = (&dim, &ray) {
                    if r.len() != *n {
                        return Err(DslError::DimensionMismatch {
                            line,
                            expected: *n,
                            got: r.len(),
                        });
                    }
                }
                declared.insert(name.to_owned(), VertexDecl { line, ray });
                decl_order.push(name.to_owned());
            }
            "context" => {
                if args.len() < 2 {
                    return Err(syntax(line, dcol, "context needs at least two members"));
                }
                let mut members = Vec::with_capacity(args.len());
                for (col, name) in args {
                    if !valid_name(name) {
                        return Err(syntax(line, *col, format!("invalid vertex name {name:?}")));
                    }
                    if strict && !declared.contains_key(*name) {
                        return Err(syntax(
                            line,
                            *col,
                            format!("undeclared vertex {name:?} (strict mode)"),
                        ));
                    }
                    members.push((*name).to_owned());
                }
                contexts.push(members);
            }
            "cycle" => {
                if cycle.is_some() {
                    return Err(syntax(line, dcol, "duplicate cycle declaration"));
                }
                let mut members = Vec::with_capacity(args.len());
                for (col, name) in args {
                    if strict && !declared.contains_key(*name) {
                        return Err(syntax(
                            line,
                            *col,
                            format!("undeclared vertex {name:?} (strict mode)"),
                        ));
                    }
                    members.push((*name).to_owned());
                }
                cycle = Some(members);
            }
            other => {
                return Err(DslError::UnknownDirective {
                    line,
                    word: other.to_owned(),
                })
            }
        }
    }

    let h = Hypergraph::from_contexts(&contexts)?;
    for name in &decl_order {
        if h.vertex(name).is_none() {
            let line = declared[name].line;
            return Err(syntax(
                line,
                1,
                format!("vertex {name:?} is not used in any context"),
            ));
        }
    }

    // realization: present iff at least one declared ray
    let rays: Vec<(&String, &Vec<BigRational>)> = decl_order
        .iter()
        .filter_map(|n| declared[n].ray.as_ref().map(|r| (n, r)))
        .collect();
    let realization = if rays.is_empty() {
        None
    } else {
        let n = match dim {
            Some((n, _)) => n,
            None => rays[0].1.len(),
        };
        let mut r = Realization::new(n);
        for (name, coords) in rays {
            if coords.len() != n {
                return Err(DslError::DimensionMismatch {
                    line: declared[name].line,
                    expected: n,
                    got: coords.len(),
                });
            }
            let v = h.vertex(name).expect("declared vertices are used");
            r.rays.insert(v, Ray::canonical(coords)?);
        }
        Some(r)
    };

    let cycle_ids = match cycle {
        None => None,
        Some(names) => {
            let mut ids = Vec::with_capacity(names.len());
            for name in &names {
                match h.vertex(name) {
                    Some(v) => ids.push(v),
                    None => {
                        return Err(HypergraphError::UnknownVertex { name: name.clone() }.into())
                    }
                }
            }
            Some(ids)
        }
    };

    Ok(LogicBundle {
        hypergraph: h,
        realization,
        name: String::new(),
        aliases: Vec::new(),
        cycle: cycle_ids,
        notes: String::new(),
    })
}

/// Serializes a bundle to the text format in canonical order: dim, vertices
/// in index order, contexts in input order, then the cycle line. The output
/// round-trips through [`parse_logic`] in strict mode.
pub fn serialize_logic(bundle: &LogicBundle) -> String {
    let h = &bundle.hypergraph;
    let mut out = String::new();
    if let Some(r) = &bundle.realization {
        let _ = writeln!(out, "dim {}", r.dimension);
    }
    for v in h.vertices() {
        let ray = bundle.realization.as_ref().and_then(|r| r.ray(v));
        match ray {
            Some(ray) => {
                let coords: Vec<String> = ray.coords().iter().map(|c| c.to_string()).collect();
                let _ = writeln!(out, "vertex {} [{}]", h.name(v), coords.join(" "));
            }
            None => {
                let _ = writeln!(out, "vertex {}", h.name(v));
            }
        }
    }
    for ctx in h.contexts() {
        let names: Vec<&str> = ctx.members.iter().map(|&v| h.name(v)).collect();
        let _ = writeln!(out, "context {}", names.join(" "));
    }
    if let Some(cycle) = &bundle.cycle {
        let names: Vec<&str> = cycle.iter().map(|&v| h.name(v)).collect();
        let _ = writeln!(out, "cycle {}", names.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, CATALOG_NAMES};

    #[test]
    fn minimal_context_line() {
        let b = parse_logic("context a b c\n", false).unwrap();
        assert_eq!(b.hypergraph.vertex_count(), 3);
        assert_eq!(b.hypergraph.context_count(), 1);
        assert!(b.realization.is_none());
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let text = "# header\n\ncontext a b c  # trailing\n";
        let b = parse_logic(text, false).unwrap();
        assert_eq!(b.hypergraph.vertex_count(), 3);
    }

    #[test]
    fn dimension_mismatch_positional() {
        let err = parse_logic("dim 3\nvertex a [1 0]\n", false).unwrap_err();
        assert_eq!(
            err,
            DslError::DimensionMismatch {
                line: 2,
                expected: 3,
                got: 2
            }
        );
    }

    #[test]
    fn rational_entries_roundtrip() {
        let text = "dim 3\nvertex a [1/2 0 1/2]\nvertex b [0 1 0]\ncontext a b c\n";
        let b = parse_logic(text, false).unwrap();
        let r = b.realization.as_ref().unwrap();
        let a = b.hypergraph.vertex("a").unwrap();
        // canonicalized to (1, 0, 1)
        assert_eq!(r.ray(a).unwrap(), &Ray::from_ints(&[1, 0, 1]).unwrap());
    }

    #[test]
    fn unknown_directive() {
        let err = parse_logic("frobnicate a b\n", false).unwrap_err();
        assert_eq!(
            err,
            DslError::UnknownDirective {
                line: 1,
                word: "frobnicate".into()
            }
        );
    }

    #[test]
    fn duplicate_declaration() {
        let err = parse_logic("vertex a\nvertex a\ncontext a b\n", false).unwrap_err();
        assert_eq!(
            err,
            DslError::DuplicateDeclaration {
                line: 2,
                name: "a".into()
            }
        );
    }

    #[test]
    fn strict_mode_rejects_implicit() {
        let text = "vertex a\ncontext a b\n";
        assert!(parse_logic(text, false).is_ok());
        match parse_logic(text, true).unwrap_err() {
            DslError::SyntaxError { line, column, .. } => {
                assert_eq!(line, 2);
                assert_eq!(column, 11);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unused_declared_vertex_rejected() {
        let err = parse_logic("vertex q\ncontext a b\n", false).unwrap_err();
        assert!(matches!(err, DslError::SyntaxError { line: 1, .. }));
    }

    #[test]
    fn catalog_bundles_roundtrip() {
        for name in CATALOG_NAMES {
            let bundle = catalog(name).unwrap();
            let text = serialize_logic(&bundle);
            let parsed = parse_logic(&text, true).unwrap_or_else(|e| {
                panic!("{name}: serialize output failed strict parse: {e}\n{text}")
            });
            assert_eq!(parsed.hypergraph, bundle.hypergraph, "{name}");
            assert_eq!(parsed.realization, bundle.realization, "{name}");
            assert_eq!(parsed.cycle, bundle.cycle, "{name}");
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_logic("dim x\n", false).unwrap_err();
        match err {
            DslError::SyntaxError { line, column, .. } => {
                assert_eq!(line, 1);
                assert_eq!(column, 5);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
