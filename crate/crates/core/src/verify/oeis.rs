//! Cross-checks against OEIS b-files read from disk.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{Counterexample, VerificationReport};
use crate::combinat::ballot_count;
use crate::error::{Error, Result};
use crate::perm::EulerianTable;
use crate::series::{egf_count, gf_B_des, TruncationBox};

/// Sequences this module knows how to check.
pub const SEQUENCES: [&str; 3] = ["A000246", "A008292", "A321280"];

/// A parsed b-file: `index value` pairs with contiguous indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisBFile {
    pub sequence_id: String,
    pub entries: BTreeMap<i64, BigInt>,
}

impl OeisBFile {
    pub fn parse(sequence_id: &str, text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        let mut last: Option<i64> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::BFileParse { line: i + 1, msg };
            let mut fields = line.split_whitespace();
            let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(err(format!("expected `index value`, got {line:?}")));
            };
            let idx: i64 = idx.parse().map_err(|_| err(format!("bad index {idx:?}")))?;
            let val: BigInt = val.parse().map_err(|_| err(format!("bad value {val:?}")))?;
            if let Some(prev) = last {
                if idx != prev + 1 {
                    return Err(err(format!("index {idx} does not follow {prev}")));
                }
            }
            last = Some(idx);
            entries.insert(idx, val);
        }
        if entries.is_empty() {
            return Err(Error::BFileParse { line: 0, msg: "no entries".into() });
        }
        Ok(OeisBFile { sequence_id: sequence_id.to_string(), entries })
    }

    /// Index of the first entry.
    pub fn offset(&self) -> i64 {
        *self.entries.keys().next().expect("nonempty")
    }

    pub fn values(&self) -> Vec<BigInt> {
        self.entries.values().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Cut a flat triangle into complete rows `first_row, first_row+1, ...`.
fn rows_from(flat: &[BigInt], first_row: usize, row_len: fn(usize) -> usize) -> Vec<(usize, Vec<BigInt>)> {
    let mut out = Vec::new();
    let (mut pos, mut n) = (0, first_row);
    while pos + row_len(n) <= flat.len() {
        out.push((n, flat[pos..pos + row_len(n)].to_vec()));
        pos += row_len(n);
        n += 1;
    }
    out
}

/// Pick the first row index (0 or 1) under which the file reproduces the
/// reference rows, which must all be present.
fn detect_rows(
    file: &OeisBFile,
    row_len: fn(usize) -> usize,
    reference: &[(usize, &[i64])],
) -> Result<Vec<(usize, Vec<BigInt>)>> {
    let flat = file.values();
    for first in [0, 1] {
        let rows = rows_from(&flat, first, row_len);
        let matches = reference.iter().all(|(n, want)| {
            rows.iter().any(|(m, got)| {
                m == n && got.iter().eq(want.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>().iter())
            })
        });
        if matches {
            return Ok(rows);
        }
    }
    Err(Error::OffsetMismatch(format!(
        "{}: no row offset in {{0, 1}} reproduces the reference rows {:?}",
        file.sequence_id,
        reference.iter().map(|(n, _)| n).collect::<Vec<_>>()
    )))
}

fn eulerian_row_len(n: usize) -> usize {
    n.max(1)
}

fn ballot_des_row_len(n: usize) -> usize {
    if n == 0 {
        1
    } else {
        (n - 1) / 2 + 1
    }
}

const A008292_REFERENCE: [(usize, &[i64]); 4] = [(1, &[1]), (2, &[1, 1]), (3, &[1, 4, 1]), (4, &[1, 11, 11, 1])];
const A321280_REFERENCE: [(usize, &[i64]); 5] =
    [(3, &[1, 2]), (4, &[1, 8]), (5, &[1, 22, 22]), (6, &[1, 52, 172]), (7, &[1, 114, 856, 604])];

fn compare_rows(
    rows: &[(usize, Vec<BigInt>)],
    expected: impl Fn(usize, usize) -> Result<BigInt>,
) -> Result<Option<Counterexample>> {
    for (n, row) in rows {
        for (d, got) in row.iter().enumerate() {
            let want = expected(*n, d)?;
            if *got != want {
                return Ok(Some(Counterexample::new([("n", *n as i64), ("d", d as i64)], got, want)));
            }
        }
    }
    Ok(None)
}

fn check_a000246(file: &OeisBFile) -> Result<Option<Counterexample>> {
    if file.offset() < 0 {
        return Err(Error::OffsetMismatch(format!("A000246 starts at index {}", file.offset())));
    }
    for (&n, got) in &file.entries {
        let want = BigInt::from(ballot_count(n as usize));
        if *got != want {
            return Ok(Some(Counterexample::new([("n", n)], got, want)));
        }
    }
    Ok(None)
}

fn check_a008292(file: &OeisBFile) -> Result<(Option<Counterexample>, usize)> {
    let rows = detect_rows(file, eulerian_row_len, &A008292_REFERENCE)?;
    let n_max = rows.last().map_or(0, |r| r.0);
    let euler = EulerianTable::new(n_max);
    let cx = compare_rows(&rows, |n, d| Ok(BigInt::from(euler.get(n as i64, d as i64))))?;
    Ok((cx, rows.len()))
}

fn check_a321280(file: &OeisBFile) -> Result<(Option<Counterexample>, usize)> {
    let rows = detect_rows(file, ballot_des_row_len, &A321280_REFERENCE)?;
    let n_max = rows.last().map_or(0, |r| r.0) as u32;
    let b = gf_B_des(TruncationBox::new(n_max, 0, n_max, 0))?;
    let cx = compare_rows(&rows, |n, d| egf_count(&b, [n as u32, 0, d as u32, 0]))?;
    Ok((cx, rows.len()))
}

/// Compare a b-file for one of [`SEQUENCES`] against values computed here.
pub fn cmd_oeis(sequence_id: &str, text: &str) -> Result<VerificationReport> {
    let id = sequence_id.to_ascii_uppercase();
    if !SEQUENCES.contains(&id.as_str()) {
        return Err(Error::Domain(format!("no cross-check defined for {sequence_id:?}; known: {SEQUENCES:?}")));
    }
    let file = OeisBFile::parse(&id, text)?;
    let mut rows = None;
    let report = VerificationReport::run(&format!("oeis-{id}"), None, || match id.as_str() {
        "A000246" => check_a000246(&file),
        "A008292" => check_a008292(&file).map(|(cx, r)| {
            rows = Some(r);
            cx
        }),
        _ => check_a321280(&file).map(|(cx, r)| {
            rows = Some(r);
            cx
        }),
    });
    let report = report.with_param("terms", file.len()).with_param("offset", file.offset());
    Ok(match rows {
        Some(r) => report.with_param("rows", r),
        None => report,
    })
}
