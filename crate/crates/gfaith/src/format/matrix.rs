//! CSV with a header row of labels followed by one row per label; entries
//! are `p/q`, integers or decimals and are read exactly.

use gfaith_core::gaussian::{parse_rational, RationalMatrix};
use gfaith_core::nodeset::Ground;
use num_rational::BigRational;
use num_traits::One;

use super::ParseError;

pub fn parse_matrix(text: &str) -> Result<RationalMatrix, ParseError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(text.as_bytes());
    let loc = |p: Option<&csv::Position>| p.map_or(1, |p| p.line() as usize);
    let header = rdr.headers().map_err(|e| ParseError::new(loc(e.position()), 1, e.to_string()))?.clone();
    let mut ground = Ground::default();
    for (k, l) in header.iter().enumerate() {
        ground
            .push(l.to_string())
            .map_err(|e| ParseError::new(loc(header.position()), k + 1, e.to_string()))?;
    }
    let n = ground.len();
    let mut rows = Vec::with_capacity(n);
    for rec in rdr.records() {
        let rec = rec.map_err(|e| ParseError::new(loc(e.position()), 1, e.to_string()))?;
        let line = loc(rec.position());
        if rec.len() == 1 && rec[0].is_empty() {
            continue;
        }
        if rows.len() == n {
            return Err(ParseError::new(line, 1, format!("more than {n} rows")));
        }
        if rec.len() != n {
            return Err(ParseError::new(line, 1, format!("expected {n} entries, found {}", rec.len())));
        }
        let row = rec
            .iter()
            .enumerate()
            .map(|(k, s)| parse_rational(s).ok_or_else(|| ParseError::new(line, k + 1, format!("`{s}` is not a number"))))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.len() != n {
        let last = text.lines().count().max(1);
        return Err(ParseError::new(last, 1, format!("expected {n} rows, found {}", rows.len())));
    }
    RationalMatrix::new(ground, rows).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

fn entry(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn write_matrix(m: &RationalMatrix) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(m.ground().labels()).expect("in-memory write");
    for row in m.rows() {
        w.write_record(row.iter().map(entry)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}
