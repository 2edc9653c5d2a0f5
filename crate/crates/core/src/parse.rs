//! Text formats for semigroups, vector lists and lattices.
//!
//! * semigroup spec: `"m; a | b | c"` with comma-separated vectors, e.g.
//!   `"1; 2|3"` or `"2; 1,1 | 1,-1 | 0,1"`; the `m;` prefix may be omitted.
//!   A JSON object `{"dim": m, "gens": [[...], ...]}` is accepted too.
//! * vector list: vectors separated by `;`, e.g. `"12;18"` or `"1,0;0,1"`.
//! * lattice file: one comma-separated generator row per line (`#` starts
//!   a comment), or a JSON matrix, or `{"ambient": n, "rows": [...]}`.

use num_bigint::BigInt;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::lattice::LatticeBasis;
use crate::semigroup::Semigroup;
use crate::vector::IntVec;

fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

/// Byte offset of `part` inside `whole`; `part` must be a subslice.
fn offset_in(whole: &str, part: &str) -> usize {
    part.as_ptr() as usize - whole.as_ptr() as usize
}

pub fn parse_integer(text: &str, offset: usize) -> Result<BigInt> {
    let t = text.trim();
    let lead = offset + (text.len() - text.trim_start().len());
    if t.is_empty() {
        return Err(parse_error(lead, "expected an integer"));
    }
    t.parse::<BigInt>().map_err(|_| parse_error(lead, format!("invalid integer {t:?}")))
}

/// A comma-separated vector; `offset` locates `text` in the outer input.
pub fn parse_vector(text: &str, offset: usize) -> Result<IntVec> {
    text.split(',')
        .map(|part| parse_integer(part, offset + offset_in(text, part)))
        .collect::<Result<Vec<_>>>()
        .map(IntVec::new)
}

fn parse_separated(text: &str, sep: char, offset: usize) -> Result<Vec<IntVec>> {
    text.split(sep)
        .map(|part| parse_vector(part, offset + offset_in(text, part)))
        .collect()
}

/// Vectors separated by `;`.
pub fn parse_vector_list(text: &str) -> Result<Vec<IntVec>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    parse_separated(text, ';', 0)
}

#[derive(Deserialize)]
struct JsonSpec {
    dim: usize,
    gens: Vec<IntVec>,
}

pub fn parse_semigroup(text: &str) -> Result<Semigroup> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let spec: JsonSpec = serde_json::from_str(text).map_err(|e| json_error(text, &e))?;
        return Semigroup::new(spec.dim, spec.gens);
    }
    let (dim, body, body_offset) = match text.split_once(';') {
        Some((head, body)) => {
            let d = parse_integer(head, 0)?;
            let dim = usize::try_from(&d).map_err(|_| parse_error(0, format!("invalid dimension {d}")))?;
            (Some(dim), body, head.len() + 1)
        }
        None => (None, text, 0),
    };
    let gens = parse_separated(body, '|', body_offset)?;
    let dim = dim.unwrap_or_else(|| gens[0].dim());
    let mut pos = body_offset;
    for (g, part) in gens.iter().zip(body.split('|')) {
        if g.dim() != dim {
            let lead = part.len() - part.trim_start().len();
            return Err(parse_error(
                pos + lead,
                format!("generator has {} coordinates, expected {dim}", g.dim()),
            ));
        }
        pos += part.len() + 1;
    }
    Semigroup::new(dim, gens)
}

fn json_error(text: &str, e: &serde_json::Error) -> Error {
    let offset: usize = text
        .lines()
        .take(e.line().saturating_sub(1))
        .map(|l| l.len() + 1)
        .sum::<usize>()
        + e.column().saturating_sub(1);
    parse_error(offset, e.to_string())
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonLattice {
    Rows(Vec<IntVec>),
    Explicit { ambient: usize, rows: Vec<IntVec> },
}

pub fn parse_lattice(text: &str) -> Result<LatticeBasis> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        let parsed: JsonLattice = serde_json::from_str(text).map_err(|e| json_error(text, &e))?;
        return match parsed {
            JsonLattice::Rows(rows) => {
                let n = rows.first().map(IntVec::dim).ok_or_else(|| {
                    parse_error(0, "empty row list; use {\"ambient\": n, \"rows\": []} for the zero lattice")
                })?;
                LatticeBasis::new(n, rows)
            }
            JsonLattice::Explicit { ambient, rows } => LatticeBasis::new(ambient, rows),
        };
    }
    let mut rows = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("").trim_end_matches(['\n', '\r']);
        if !content.trim().is_empty() {
            rows.push(parse_vector(content, offset)?);
        }
        offset += line.len();
    }
    let n = rows.first().map(IntVec::dim).ok_or_else(|| parse_error(0, "lattice file has no rows"))?;
    LatticeBasis::new(n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semigroup_specs() {
        assert_eq!(parse_semigroup("1; 2|3").unwrap(), Semigroup::numerical(&[2, 3]).unwrap());
        assert_eq!(parse_semigroup("4 | 6 | 9").unwrap(), Semigroup::numerical(&[4, 6, 9]).unwrap());
        assert_eq!(
            parse_semigroup("2; 1,1 | 1,-1 | 0,1").unwrap(),
            Semigroup::from_i64_rows(2, &[&[1, 1], &[1, -1], &[0, 1]]).unwrap()
        );
        assert_eq!(
            parse_semigroup(r#"{"dim": 2, "gens": [[1, 0], ["0", "1"]]}"#).unwrap(),
            Semigroup::free(2).unwrap()
        );
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(
            parse_semigroup("1; 2|x"),
            Err(Error::Parse { offset: 5, message: "invalid integer \"x\"".into() })
        );
        assert!(matches!(parse_semigroup("2; 1,0 | 1"), Err(Error::Parse { offset: 9, .. })));
        assert!(matches!(parse_semigroup("1; 2||3"), Err(Error::Parse { offset: 5, .. })));
        assert!(matches!(parse_semigroup("{\"dim\": 1}"), Err(Error::Parse { .. })));
    }

    #[test]
    fn vector_lists() {
        assert_eq!(parse_vector_list("12;18").unwrap(), vec![IntVec::scalar(12), IntVec::scalar(18)]);
        assert_eq!(parse_vector_list("1,0; 0,1").unwrap(), vec![IntVec::unit(2, 0), IntVec::unit(2, 1)]);
        assert!(parse_vector_list("").unwrap().is_empty());
    }

    #[test]
    fn lattice_files() {
        let l = parse_lattice("3,-2\n").unwrap();
        assert_eq!(l.ambient_rank(), 2);
        assert_eq!(l.rank(), 1);
        let l = parse_lattice("# relations\n1,0,-1\n\n0,1,-1 # second\n").unwrap();
        assert_eq!(l.rank(), 2);
        let l = parse_lattice("[[2, -2]]").unwrap();
        assert_eq!(l.elementary_divisors(), vec![BigInt::from(2)]);
        let l = parse_lattice(r#"{"ambient": 2, "rows": []}"#).unwrap();
        assert_eq!(l.rank(), 0);
        assert!(matches!(parse_lattice("1,0\n1,x\n"), Err(Error::Parse { offset: 6, .. })));
    }
}
