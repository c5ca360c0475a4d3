//! Line-oriented system files:
//!
//! ```text
//! # comment
//! vars: x1 x2
//! f: x1^2 - x2, x2^2
//! F: x1^4, x2^2
//! G: [[x1^2 + x2, 0], [1, x2^2]]
//! order: grevlex
//! bound: 8
//! seed: 3
//! ```

use crate::context::Context;
use crate::error::{Error, Result};
use crate::quotient::MonomialOrder;
use crate::ring::{parse_poly, split_top_level, Poly};
use crate::verify::System;

/// Hard cap on file size accepted by the parser.
pub const MAX_FILE_BYTES: usize = 1 << 20;

#[derive(Debug, Clone)]
pub struct SystemFile {
    pub system: System,
    pub order: MonomialOrder,
    pub bound: Option<u32>,
    pub seed: Option<u64>,
}

struct Line<'a> {
    key: &'a str,
    value: &'a str,
    /// byte offset of `value` in the file
    at: usize,
}

pub fn parse_system(src: &str) -> Result<SystemFile> {
    if src.len() > MAX_FILE_BYTES {
        return Err(Error::parse(MAX_FILE_BYTES, "system file too large"));
    }
    let mut lines: Vec<Line> = Vec::new();
    let mut offset = 0;
    for raw in src.split_inclusive('\n') {
        let start = offset;
        offset += raw.len();
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let colon = body
            .find(':')
            .ok_or_else(|| Error::parse(start, "expected `key: value`"))?;
        let key = body[..colon].trim();
        if lines.iter().any(|l| l.key == key) {
            return Err(Error::parse(start, format!("duplicate key `{key}`")));
        }
        lines.push(Line {
            key,
            value: body[colon + 1..].trim_end(),
            at: start + colon + 1,
        });
    }
    let get = |k: &str| lines.iter().find(|l| l.key == k);
    for l in &lines {
        if !matches!(l.key, "vars" | "f" | "F" | "G" | "order" | "bound" | "seed") {
            return Err(Error::parse(l.at, format!("unknown key `{}`", l.key)));
        }
    }

    let vars_line = get("vars").ok_or_else(|| Error::parse(0, "missing `vars:` line"))?;
    let names: Vec<String> = vars_line
        .value
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    if names.is_empty() {
        return Err(Error::parse(vars_line.at, "no variables declared"));
    }
    for nm in &names {
        let valid = nm.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && nm.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::parse(vars_line.at, format!("invalid variable name `{nm}`")));
        }
    }
    let ctx = Context::with_names(&names)?;
    let xvars: Vec<_> = ctx.x.clone();
    let lookup = |name: &str| ctx.registry.lookup(name).filter(|v| xvars.contains(v));

    let poly_list = |line: &Line| -> Result<Vec<Poly>> {
        split_top_level(line.value)
            .into_iter()
            .map(|(off, text)| parse_at(text, line.at + off, &lookup))
            .collect()
    };
    let f_line = get("f").ok_or_else(|| Error::parse(0, "missing `f:` line"))?;
    let f = poly_list(f_line)?;
    let big = get("F").map(poly_list).transpose()?;
    let g = match get("G") {
        Some(line) => Some(parse_matrix(line, &lookup)?),
        None => None,
    };
    if let Some(g) = &g {
        let t = big
            .as_ref()
            .ok_or_else(|| Error::usage("`G:` requires an `F:` line"))?
            .len();
        if g.len() != f.len() || g.iter().any(|row| row.len() != t) {
            return Err(Error::usage(format!("G must be {} × {} (rows follow f, columns follow F)", f.len(), t)));
        }
    }
    let order = match get("order") {
        Some(l) => MonomialOrder::parse(l.value.trim())
            .ok_or_else(|| Error::parse(l.at, "order must be grevlex, grlex or lex"))?,
        None => MonomialOrder::default(),
    };
    let bound = get("bound")
        .map(|l| l.value.trim().parse::<u32>().map_err(|_| Error::parse(l.at, "bound must be a non-negative integer")))
        .transpose()?;
    let seed = get("seed")
        .map(|l| l.value.trim().parse::<u64>().map_err(|_| Error::parse(l.at, "seed must be a non-negative integer")))
        .transpose()?;
    Ok(SystemFile {
        system: System { ctx, f, big, g },
        order,
        bound,
        seed,
    })
}

/// Parses a polynomial, shifting error offsets to file coordinates.
pub fn parse_at<F: Fn(&str) -> Option<crate::ring::Var>>(text: &str, at: usize, lookup: &F) -> Result<Poly> {
    parse_poly(text, lookup).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + at, msg },
        other => other,
    })
}

fn parse_matrix<F: Fn(&str) -> Option<crate::ring::Var>>(line: &Line, lookup: &F) -> Result<Vec<Vec<Poly>>> {
    let (inner, at) = brackets(line.value, line.at)?;
    split_top_level(inner)
        .into_iter()
        .map(|(off, row)| {
            let (cells, row_at) = brackets(row, at + off)?;
            split_top_level(cells)
                .into_iter()
                .map(|(o, text)| parse_at(text, row_at + o, lookup))
                .collect()
        })
        .collect()
}

/// Strips one pair of enclosing brackets, returning the interior and its offset.
fn brackets(text: &str, at: usize) -> Result<(&str, usize)> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    if !(t.starts_with('[') && t.ends_with(']')) || t.len() < 2 {
        return Err(Error::parse(at + lead, "expected `[ … ]`"));
    }
    Ok((&t[1..t.len() - 1], at + lead + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_file() {
        let src = "# demo\nvars: x1 x2\nf: x1^2 - x2, x2^2\nF: x1^4, x2^2  # trailing\nG: [[x1^2 + x2, 0], [1, 1]]\nbound: 6\n";
        let sf = parse_system(src).unwrap();
        assert_eq!(sf.system.f.len(), 2);
        assert_eq!(sf.system.g.as_ref().unwrap()[0].len(), 2);
        assert_eq!(sf.bound, Some(6));
        assert_eq!(sf.order, MonomialOrder::Grevlex);
    }

    #[test]
    fn errors_carry_file_offsets() {
        let src = "vars: x\nf: x^2 + z\n";
        match parse_system(src) {
            Err(Error::Parse { pos, .. }) => assert_eq!(&src[pos..pos + 1], "z"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_system("f: x\n").is_err());
        assert!(parse_system("vars: x\nf: x\nwhat: 1\n").is_err());
        assert!(matches!(
            parse_system("vars: x\nf: x\nF: x\nG: [[1, 2]]\n"),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn y_copies_avoid_user_names() {
        let sf = parse_system("vars: x1 y1\nf: x1, y1\n").unwrap();
        assert_eq!(sf.system.ctx.n(), 2);
    }
}
