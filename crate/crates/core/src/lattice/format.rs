//! Lattice text format.
//!
//! ```text
//! elements: 0 a b 1
//! leq: 0<=a 0<=b a<=1 b<=1
//! ```
//!
//! or, with full tables (one row per element, entries are labels):
//!
//! ```text
//! elements: 0 1
//! jointable:
//! 0 1
//! 1 1
//! meettable:
//! 0 0
//! 0 1
//! ```

use std::collections::HashMap;

use super::FinLattice;
use crate::error::{parse_err, Result};

enum Section {
    None,
    Join,
    Meet,
}

pub(super) fn parse(text: &str) -> Result<FinLattice> {
    let mut labels: Option<Vec<String>> = None;
    let mut pairs: Vec<(usize, String, String)> = Vec::new();
    let mut join_rows: Vec<(usize, Vec<String>)> = Vec::new();
    let mut meet_rows: Vec<(usize, Vec<String>)> = Vec::new();
    let mut section = Section::None;
    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, rest)) = line.split_once(':') {
            match key.trim() {
                "elements" => {
                    if labels.is_some() {
                        return Err(parse_err(line_no, "duplicate `elements:` line"));
                    }
                    labels = Some(rest.split_whitespace().map(String::from).collect());
                    section = Section::None;
                    continue;
                }
                "leq" => {
                    for tok in rest.split_whitespace() {
                        let (a, b) = tok
                            .split_once("<=")
                            .filter(|(a, b)| !a.is_empty() && !b.is_empty())
                            .ok_or_else(|| parse_err(line_no, format!("malformed pair `{tok}`")))?;
                        pairs.push((line_no, a.to_string(), b.to_string()));
                    }
                    section = Section::None;
                    continue;
                }
                "jointable" => {
                    section = Section::Join;
                    continue;
                }
                "meettable" => {
                    section = Section::Meet;
                    continue;
                }
                _ => {}
            }
        }
        let row: Vec<String> = line.split_whitespace().map(String::from).collect();
        match section {
            Section::Join => join_rows.push((line_no, row)),
            Section::Meet => meet_rows.push((line_no, row)),
            Section::None => return Err(parse_err(line_no, format!("unexpected line `{line}`"))),
        }
    }
    let labels = labels.ok_or_else(|| parse_err(0, "missing `elements:` line"))?;
    let index: HashMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    if index.len() != labels.len() {
        return Err(parse_err(1, "duplicate element"));
    }
    let look = |line_no: usize, s: &str| {
        index
            .get(s)
            .copied()
            .ok_or_else(|| parse_err(line_no, format!("unknown element `{s}`")))
    };
    if join_rows.is_empty() && meet_rows.is_empty() {
        let idx = pairs
            .iter()
            .map(|(l, a, b)| Ok((look(*l, a)?, look(*l, b)?)))
            .collect::<Result<Vec<_>>>()?;
        return FinLattice::from_index_leq(labels, &idx);
    }
    if !pairs.is_empty() {
        return Err(parse_err(
            pairs[0].0,
            "give either `leq:` pairs or tables, not both",
        ));
    }
    let n = labels.len();
    let table = |rows: &[(usize, Vec<String>)], name: &str| -> Result<Vec<u32>> {
        if rows.len() != n {
            let line = rows.last().map(|r| r.0).unwrap_or(0);
            return Err(parse_err(
                line,
                format!("{name} needs {n} rows, got {}", rows.len()),
            ));
        }
        let mut out = Vec::with_capacity(n * n);
        for (line_no, row) in rows {
            if row.len() != n {
                return Err(parse_err(*line_no, format!("row needs {n} entries")));
            }
            for tok in row {
                out.push(look(*line_no, tok)? as u32);
            }
        }
        Ok(out)
    };
    let join = table(&join_rows, "jointable")?;
    let meet = table(&meet_rows, "meettable")?;
    FinLattice::validate_tables(labels, join, meet)
}

pub(super) fn render(l: &FinLattice) -> String {
    let pairs: Vec<String> = l
        .covering_pairs()
        .into_iter()
        .map(|(x, y)| format!("{}<={}", l.label(x), l.label(y)))
        .collect();
    format!(
        "elements: {}\nleq: {}\n",
        l.labels().join(" "),
        pairs.join(" ")
    )
}

/// Renders the full join and meet tables.
pub fn render_tables(l: &FinLattice) -> String {
    let n = l.len();
    let mut out = format!("elements: {}\n", l.labels().join(" "));
    for (name, op) in [("jointable", l.join_table()), ("meettable", l.meet_table())] {
        out.push_str(name);
        out.push_str(":\n");
        for x in 0..n {
            let row: Vec<&str> = (0..n).map(|y| l.label(op[x * n + y] as usize)).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::lattice::tests::pentagon;

    #[test]
    fn round_trips() {
        let n5 = pentagon();
        assert_eq!(FinLattice::parse(&n5.to_text()).unwrap(), n5);
        assert_eq!(FinLattice::parse(&render_tables(&n5)).unwrap(), n5);
    }

    #[test]
    fn errors() {
        let err = FinLattice::parse("elements: a b\nleq: a<b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = FinLattice::parse("elements: a b\njointable:\na b\nb b\nmeettable:\na a\n")
            .unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = FinLattice::parse("elements: a b c d\nleq: a<=c a<=d b<=c b<=d\n").unwrap_err();
        assert!(matches!(err, Error::NotALattice(..)));
    }
}
