//! Poset text format:
//!
//! ```text
//! # comment
//! elements: o a b c
//! covers: o<a a<b b<c
//! ```
//!
//! `covers:` may repeat and may be empty; chained tokens such as `a<b<c` are accepted.

use std::fmt::Write as _;

use super::Poset;
use crate::error::{parse_err, Error, Result};

impl Poset {
    pub fn parse(text: &str) -> Result<Poset> {
        let mut labels: Option<Vec<String>> = None;
        let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
        let mut pending: Vec<(usize, String, String)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line_no = no + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| parse_err(line_no, format!("expected `key: ...`, got `{line}`")))?;
            match key.trim() {
                "elements" => {
                    if labels.is_some() {
                        return Err(parse_err(line_no, "duplicate `elements:` line"));
                    }
                    let mut seen = std::collections::HashSet::new();
                    let mut ls = Vec::new();
                    for tok in rest.split_whitespace() {
                        if tok.contains('<') {
                            return Err(parse_err(line_no, format!("bad element name `{tok}`")));
                        }
                        if !seen.insert(tok) {
                            return Err(parse_err(line_no, format!("duplicate element `{tok}`")));
                        }
                        ls.push(tok.to_string());
                    }
                    labels = Some(ls);
                }
                "covers" => {
                    for tok in rest.split_whitespace() {
                        let parts: Vec<&str> = tok.split('<').collect();
                        if parts.len() < 2 || parts.iter().any(|s| s.is_empty()) {
                            return Err(parse_err(line_no, format!("malformed cover `{tok}`")));
                        }
                        for w in parts.windows(2) {
                            pending.push((line_no, w[0].to_string(), w[1].to_string()));
                        }
                    }
                }
                other => return Err(parse_err(line_no, format!("unknown key `{other}`"))),
            }
        }
        let labels = labels.ok_or_else(|| parse_err(0, "missing `elements:` line"))?;
        let index: std::collections::HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        for (line_no, a, b) in &pending {
            let look = |s: &str| {
                index
                    .get(s)
                    .copied()
                    .ok_or_else(|| parse_err(*line_no, format!("unknown element `{s}`")))
            };
            pairs.push((*line_no, look(a)?, look(b)?));
        }
        let idx_pairs: Vec<(usize, usize)> = pairs.iter().map(|&(_, a, b)| (a, b)).collect();
        Poset::from_index_covers(labels.clone(), &idx_pairs).map_err(|e| match e {
            Error::CycleDetected(l) => parse_err(
                pairs.iter().map(|p| p.0).max().unwrap_or(0),
                format!("order has a cycle through `{l}`"),
            ),
            other => other,
        })
    }

    /// Renders the canonical text form: elements in index order, covers in index order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "elements: {}", self.labels().join(" "));
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.label(x), self.label(y)))
            .collect();
        if covers.is_empty() {
            out.push_str("covers:\n");
        } else {
            let _ = writeln!(out, "covers: {}", covers.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::pij;

    #[test]
    fn parse_and_render() {
        let p = Poset::parse("# chain\nelements: o a b c\ncovers: o<a a<b\ncovers: b<c\n").unwrap();
        assert_eq!(p.length().unwrap(), 3);
        assert_eq!(p.to_text(), "elements: o a b c\ncovers: o<a a<b b<c\n");
        let q = Poset::parse(&pij(2, 1).unwrap().to_text()).unwrap();
        assert_eq!(q, pij(2, 1).unwrap());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = Poset::parse("elements: a b\ncovers: a-b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = Poset::parse("elements: a a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = Poset::parse("elements: a b\n\ncovers: a<z\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = Poset::parse("elements: a b\ncovers: a<b b<a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }
}
