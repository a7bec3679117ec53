//! Plain-text dump of a series: a header recording the box, then one line per
//! nonzero monomial `e_x e_y e_t e_z num/den` in lexicographic order.

use std::fmt::Write as _;

use num_bigint::BigInt;

use super::{Exp, Series, TruncationBox, Q};
use crate::error::{Error, Result};

impl Series {
    pub fn to_dump(&self) -> String {
        let b = self.bx;
        let mut out = format!(
            "# box nx={} ny={} nt={} nz={} guard={}\n",
            b.bounds[0], b.bounds[1], b.bounds[2], b.bounds[3], b.guard
        );
        for (e, c) in self.terms() {
            let _ = writeln!(out, "{} {} {} {} {}/{}", e[0], e[1], e[2], e[3], c.numer(), c.denom());
        }
        out
    }
}

fn parse_header(line: &str, lineno: usize) -> Result<TruncationBox> {
    let err = |msg: String| Error::BFileParse { line: lineno, msg };
    let mut bx = TruncationBox::new(0, 0, 0, 0);
    let body = line.trim_start_matches('#').trim();
    let body = body.strip_prefix("box").ok_or_else(|| err("expected `# box ...` header".into()))?;
    for field in body.split_whitespace() {
        let (k, v) = field.split_once('=').ok_or_else(|| err(format!("malformed field {field:?}")))?;
        let v: u32 = v.parse().map_err(|_| err(format!("bad number in {field:?}")))?;
        match k {
            "nx" => bx.bounds[0] = v,
            "ny" => bx.bounds[1] = v,
            "nt" => bx.bounds[2] = v,
            "nz" => bx.bounds[3] = v,
            "guard" => bx.guard = v,
            _ => return Err(err(format!("unknown field {k:?}"))),
        }
    }
    Ok(bx)
}

/// Read back the output of [`Series::to_dump`].
pub fn parse_dump(text: &str) -> Result<Series> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(Error::BFileParse { line: 1, msg: "empty dump".into() })?;
    let bx = parse_header(header, 1)?;
    let mut s = Series::zero(bx);
    for (i, line) in lines {
        let lineno = i + 1;
        let err = |msg: &str| Error::BFileParse { line: lineno, msg: msg.to_string() };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(err("expected four exponents and a rational"));
        }
        let mut e: Exp = [0; 4];
        for (slot, f) in e.iter_mut().zip(&fields[..4]) {
            *slot = f.parse().map_err(|_| err("bad exponent"))?;
        }
        if !bx.contains(&e) {
            return Err(Error::OutsideBox(e));
        }
        let (n, d) = fields[4].split_once('/').unwrap_or((fields[4], "1"));
        let n: BigInt = n.parse().map_err(|_| err("bad numerator"))?;
        let d: BigInt = d.parse().map_err(|_| err("bad denominator"))?;
        if d == BigInt::from(0) {
            return Err(err("zero denominator"));
        }
        s.add_at(e, Q::new(n, d));
    }
    Ok(s)
}
