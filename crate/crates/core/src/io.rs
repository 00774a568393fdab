//! Plain-text formats.
//!
//! An identity file is a header `# arity=<n> degree=<d>` followed by one
//! term per line, `<coefficient> <monomial>`. Several identities may share
//! a file, each introduced by its own header. Other lines starting with
//! `#` and blank lines are ignored.
//!
//! A matrix file has `<rows> <cols>` on its first line and then one row of
//! space-separated integers per line.
//!
//! A slot file uses the identity header and lists `<coefficient> (x,y,z)`
//! lines; it records the expansion of a single monomial.

use std::fmt::{Display, Write as _};
use std::io::Write;

use num_bigint::BigInt;

use crate::algebra::{check_degree, IdentityCombination, Monomial, SlotTuple, Variable};
use crate::expansion::SlotCombination;
use crate::linalg::IntegerMatrix;
use crate::{Error, Result};

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let rest = line.strip_prefix('#')?.trim();
    let mut arity = None;
    let mut degree = None;
    for field in rest.split_whitespace() {
        let (key, value) = field.split_once('=')?;
        let value = value.parse().ok()?;
        match key {
            "arity" => arity = Some(value),
            "degree" => degree = Some(value),
            _ => return None,
        }
    }
    Some((arity?, degree?))
}

fn header(arity: usize, degree: usize) -> String {
    format!("# arity={arity} degree={degree}")
}

// (arity, degree) from the header, then numbered body lines.
type Section<'a> = ((usize, usize), Vec<(usize, &'a str)>);

// Shared driver for identity and slot files.
fn sections(text: &str) -> Result<Vec<Section<'_>>> {
    let mut out: Vec<Section<'_>> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if let Some((n, d)) = parse_header(line) {
                check_degree(n, d).map_err(|e| Error::parse(k + 1, e.to_string()))?;
                out.push(((n, d), Vec::new()));
            }
            continue;
        }
        match out.last_mut() {
            Some((_, body)) => body.push((k + 1, line)),
            None => {
                return Err(Error::parse(
                    k + 1,
                    "term before any `# arity=.. degree=..` header",
                ))
            }
        }
    }
    Ok(out)
}

fn split_term(line_no: usize, line: &str) -> Result<(i64, &str)> {
    let (c, rest) = line
        .split_once(char::is_whitespace)
        .ok_or_else(|| Error::parse(line_no, "expected `<coefficient> <term>`"))?;
    let c = c
        .parse()
        .map_err(|_| Error::parse(line_no, format!("bad coefficient `{c}`")))?;
    Ok((c, rest.trim()))
}

/// Parses every identity in `text`.
pub fn parse_identities(text: &str) -> Result<Vec<IdentityCombination>> {
    sections(text)?
        .into_iter()
        .map(|((n, d), body)| {
            let mut id = IdentityCombination::new(n, d)?;
            for (line_no, line) in body {
                let (c, m) = split_term(line_no, line)?;
                let m = Monomial::parse(m, n).map_err(|e| Error::parse(line_no, e.to_string()))?;
                id.add_term(c, m)
                    .map_err(|e| Error::parse(line_no, e.to_string()))?;
            }
            Ok(id)
        })
        .collect()
}

/// Parses a file holding exactly one identity.
pub fn parse_identity(text: &str) -> Result<IdentityCombination> {
    let mut ids = parse_identities(text)?;
    if ids.len() != 1 {
        return Err(Error::parse(
            0,
            format!("expected one identity, found {}", ids.len()),
        ));
    }
    Ok(ids.pop().unwrap())
}

/// Writes one identity; terms come out straightened, in monomial order.
pub fn write_identity(id: &IdentityCombination) -> String {
    let mut s = header(id.arity(), id.degree());
    s.push('\n');
    for (m, c) in id.terms() {
        writeln!(s, "{c} {m}").unwrap();
    }
    s
}

pub fn write_identities(ids: &[IdentityCombination]) -> String {
    ids.iter()
        .map(write_identity)
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_slot_tuple(line_no: usize, s: &str) -> Result<SlotTuple> {
    let inner = s
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse(line_no, format!("bad slot tuple `{s}`")))?;
    let vars = inner
        .split(',')
        .map(|v| {
            let v = v.trim();
            let mut cs = v.chars();
            match (cs.next().and_then(Variable::from_letter), cs.next()) {
                (Some(x), None) => Ok(x),
                _ => Err(Error::parse(line_no, format!("bad variable `{v}`"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    SlotTuple::new(vars).map_err(|e| Error::parse(line_no, e.to_string()))
}

/// Parses a slot file: returns arity, degree and the combination.
pub fn parse_slot_combination(text: &str) -> Result<(usize, usize, SlotCombination)> {
    let mut secs = sections(text)?;
    if secs.len() != 1 {
        return Err(Error::parse(0, "expected exactly one header"));
    }
    let ((n, d), body) = secs.pop().unwrap();
    let mut out = SlotCombination::new();
    for (line_no, line) in body {
        let (c, t) = split_term(line_no, line)?;
        let t = parse_slot_tuple(line_no, t)?;
        if t.arity() != n {
            return Err(Error::parse(
                line_no,
                format!("tuple {t} does not have {n} slots"),
            ));
        }
        out.add(t, c);
    }
    Ok((n, d, out))
}

pub fn write_slot_combination(arity: usize, degree: usize, c: &SlotCombination) -> String {
    let mut s = header(arity, degree);
    s.push('\n');
    for (t, k) in c.terms() {
        writeln!(s, "{k} {t}").unwrap();
    }
    s
}

/// Streams a matrix in the text format.
pub fn write_matrix_rows<W, T, R>(out: &mut W, cols: usize, rows: &[R]) -> Result<()>
where
    W: Write,
    T: Display,
    R: AsRef<[T]>,
{
    writeln!(out, "{} {}", rows.len(), cols)?;
    for row in rows {
        let row = row.as_ref();
        if row.len() != cols {
            return Err(Error::SizeMismatch {
                expected: cols,
                found: row.len(),
            });
        }
        let mut first = true;
        for x in row {
            if !first {
                out.write_all(b" ")?;
            }
            write!(out, "{x}")?;
            first = false;
        }
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_matrix(m: &IntegerMatrix) -> String {
    let rows: Vec<&[BigInt]> = (0..m.rows()).map(|i| m.row(i)).collect();
    let mut buf = Vec::new();
    write_matrix_rows(&mut buf, m.cols(), &rows).expect("writing to memory");
    String::from_utf8(buf).expect("ascii")
}

pub fn parse_matrix(text: &str) -> Result<IntegerMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, first) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty matrix file"))?;
    let dims: Vec<usize> = first
        .split_whitespace()
        .map(|x| {
            x.parse()
                .map_err(|_| Error::parse(1, format!("bad dimension `{x}`")))
        })
        .collect::<Result<_>>()?;
    let [rows, cols] = dims[..] else {
        return Err(Error::parse(1, "expected `<rows> <cols>`"));
    };
    let mut data = Vec::with_capacity(rows);
    for (k, line) in lines {
        let row: Vec<BigInt> = line
            .split_whitespace()
            .map(|x| {
                x.parse()
                    .map_err(|_| Error::parse(k + 1, format!("bad integer `{x}`")))
            })
            .collect::<Result<_>>()?;
        if row.len() != cols {
            return Err(Error::parse(
                k + 1,
                format!("expected {cols} entries, found {}", row.len()),
            ));
        }
        data.push(row);
    }
    if data.len() != rows {
        return Err(Error::parse(
            0,
            format!("expected {rows} rows, found {}", data.len()),
        ));
    }
    IntegerMatrix::from_rows(cols, &data)
}
