//! Growth of the sublattice generated by three convex sets in truncations of
//! an infinite poset of length 3.
//!
//! A reconstruction is a cover template over the letters `a b c d` indexed by
//! `{n}` or `{n+1}`:
//!
//! ```text
//! name: candidate
//! covers: a{n}<c{n} c{n}<d{n} c{n}<d{n+1} d{n+1}<b{n}
//! ```
//!
//! Truncation `k` keeps `a0..ak`, `b0..bk`, `c0..ck`, `d0..dk` and every
//! instantiated cover between kept elements.

use serde::Serialize;

use crate::bits::ElemSet;
use crate::colattice::CoLattice;
use crate::error::{parse_err, Error, Result};
use crate::poset::Poset;

pub const CANDIDATE: &str = "\
name: candidate
covers: a{n}<c{n} c{n}<d{n} c{n}<d{n+1} d{n+1}<b{n}
";

const LETTERS: [char; 4] = ['a', 'b', 'c', 'd'];

/// Generated sublattices larger than this abort the run.
const GROWTH_CAP: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Slot {
    letter: usize,
    shift: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    pub name: String,
    covers: Vec<(Slot, Slot)>,
}

fn parse_slot(tok: &str, line: usize) -> Result<Slot> {
    let bad = || parse_err(line, format!("bad template element `{tok}`"));
    let mut chars = tok.chars();
    let letter = chars
        .next()
        .and_then(|c| LETTERS.iter().position(|&l| l == c))
        .ok_or_else(bad)?;
    let shift = match chars.as_str() {
        "{n}" => 0,
        "{n+1}" => 1,
        _ => return Err(bad()),
    };
    Ok(Slot { letter, shift })
}

impl Reconstruction {
    pub fn candidate() -> Reconstruction {
        Reconstruction::parse(CANDIDATE).expect("shipped template parses")
    }

    pub fn parse(text: &str) -> Result<Reconstruction> {
        let mut name = String::from("unnamed");
        let mut covers = Vec::new();
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
                "name" => name = rest.trim().to_string(),
                "covers" => {
                    for tok in rest.split_whitespace() {
                        let (x, y) = tok.split_once('<').ok_or_else(|| {
                            parse_err(line_no, format!("malformed cover `{tok}`"))
                        })?;
                        covers.push((parse_slot(x, line_no)?, parse_slot(y, line_no)?));
                    }
                }
                other => return Err(parse_err(line_no, format!("unknown key `{other}`"))),
            }
        }
        Ok(Reconstruction { name, covers })
    }

    pub fn truncate(&self, k: usize) -> Result<TruncatedFigure> {
        let labels: Vec<String> = LETTERS
            .iter()
            .flat_map(|l| (0..=k).map(move |i| format!("{l}{i}")))
            .collect();
        let idx = |letter: usize, i: usize| letter * (k + 1) + i;
        let mut pairs = Vec::new();
        for n in 0..=k {
            for &(x, y) in &self.covers {
                let (i, j) = (n + x.shift, n + y.shift);
                if i <= k && j <= k {
                    pairs.push((idx(x.letter, i), idx(y.letter, j)));
                }
            }
        }
        let poset = Poset::from_index_covers(labels, &pairs)
            .map_err(|e| Error::InvalidReconstruction(format!("k={k}: {e}")))?;
        let row = |letter: usize| ElemSet::from_indices((0..=k).map(|i| idx(letter, i)));
        let a = row(0);
        let b = row(1).with(idx(3, 0));
        let c = row(2).union(row(3));
        Ok(TruncatedFigure { k, poset, a, b, c })
    }
}

/// Truncation `k` of a reconstruction with its three generating sets.
#[derive(Clone, Debug)]
pub struct TruncatedFigure {
    pub k: usize,
    pub poset: Poset,
    /// All `a(n)`.
    pub a: ElemSet,
    /// `d0` and all `b(n)`.
    pub b: ElemSet,
    /// All `c(n)` and `d(n)`.
    pub c: ElemSet,
}

impl TruncatedFigure {
    pub fn element(&self, letter: char, n: usize) -> Option<usize> {
        self.poset.index_of(&format!("{letter}{n}"))
    }

    /// The gate every truncation must pass: length at most 3 and convex generators.
    pub fn validate(&self) -> Result<()> {
        let length = self.poset.length()?;
        if length > 3 {
            return Err(Error::InvalidReconstruction(format!(
                "k={}: length {length} > 3",
                self.k
            )));
        }
        for (name, s) in [("A", self.a), ("B", self.b), ("C", self.c)] {
            if !self.poset.is_convex(s) {
                return Err(Error::InvalidReconstruction(format!(
                    "k={}: {name} = {} is not convex",
                    self.k,
                    self.poset.set_name(s)
                )));
            }
        }
        Ok(())
    }

    /// `A(0..=steps)` and `B(0..=steps)` from `A0 = A`, `B0 = B`,
    /// `A(n+1) = A v (B(n) ^ C)`, `B(n+1) = B v (A(n) ^ C)`.
    pub fn sequences(&self, steps: usize) -> (Vec<ElemSet>, Vec<ElemSet>) {
        let p = &self.poset;
        let mut a_seq = vec![self.a];
        let mut b_seq = vec![self.b];
        for n in 0..steps {
            let next_a = p.convex_closure(self.a.union(b_seq[n].intersection(self.c)));
            let next_b = p.convex_closure(self.b.union(a_seq[n].intersection(self.c)));
            a_seq.push(next_a);
            b_seq.push(next_b);
        }
        (a_seq, b_seq)
    }

    /// Size of the sublattice of `Co(P)` generated by `A`, `B`, `C`.
    pub fn generated_size(&self) -> Result<usize> {
        Ok(CoLattice::generated(&self.poset, &[self.a, self.b, self.c], GROWTH_CAP)?.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryCheck {
    pub n: usize,
    /// Both `c(n)` and `d(n)` lie in `A(2n+1)` but not in `A(2n)`.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthRow {
    pub k: usize,
    pub poset_size: usize,
    pub generated_size: usize,
    pub a_sizes: Vec<usize>,
    pub entries: Vec<EntryCheck>,
    pub base_reproduced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub reconstruction: String,
    pub rows: Vec<GrowthRow>,
    pub strictly_increasing: bool,
    pub entries_hold: bool,
    /// Failed checks, empty for a valid reconstruction.
    pub evidence: Vec<String>,
}

impl GrowthReport {
    pub fn valid(&self) -> bool {
        self.evidence.is_empty()
    }
}

/// Runs truncations `1..=k_max`. Gate failures are errors; failed growth or
/// entry checks are reported in `evidence`.
pub fn run_growth(rec: &Reconstruction, k_max: usize) -> Result<GrowthReport> {
    let mut rows = Vec::new();
    let mut evidence = Vec::new();
    for k in 1..=k_max {
        let t = rec.truncate(k)?;
        t.validate()?;
        let (a_seq, b_seq) = t.sequences(2 * k + 2);
        let entries: Vec<EntryCheck> = (0..=k)
            .map(|n| {
                let holds = ['c', 'd'].iter().all(|&l| {
                    let x = t.element(l, n).expect("kept element");
                    a_seq[2 * n + 1].contains(x) && !a_seq[2 * n].contains(x)
                });
                EntryCheck { n, holds }
            })
            .collect();
        for e in entries.iter().filter(|e| !e.holds) {
            evidence.push(format!(
                "k={k}: c{0}, d{0} not both in A{1} \\ A{2}",
                e.n,
                2 * e.n + 1,
                2 * e.n
            ));
        }
        let base_reproduced = a_seq[0] == t.a && b_seq[0] == t.b;
        if !base_reproduced {
            evidence.push(format!("k={k}: A0, B0 differ from A, B"));
        }
        rows.push(GrowthRow {
            k,
            poset_size: t.poset.len(),
            generated_size: t.generated_size()?,
            a_sizes: a_seq.iter().map(|s| s.len()).collect(),
            entries,
            base_reproduced,
        });
    }
    let strictly_increasing = rows
        .windows(2)
        .all(|w| w[0].generated_size < w[1].generated_size);
    if !strictly_increasing {
        let sizes: Vec<String> = rows.iter().map(|r| r.generated_size.to_string()).collect();
        evidence.push(format!(
            "generated sizes not strictly increasing: {}",
            sizes.join(" ")
        ));
    }
    let entries_hold = rows.iter().all(|r| r.entries.iter().all(|e| e.holds));
    Ok(GrowthReport {
        reconstruction: rec.name.clone(),
        rows,
        strictly_increasing,
        entries_hold,
        evidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidate_truncations() {
        let rec = Reconstruction::candidate();
        let t = rec.truncate(2).unwrap();
        assert_eq!(t.poset.len(), 12);
        t.validate().unwrap();
        assert_eq!(t.poset.length().unwrap(), 3);
        let (a_seq, b_seq) = t.sequences(3);
        assert_eq!((a_seq[0], b_seq[0]), (t.a, t.b));
        let c0 = t.element('c', 0).unwrap();
        let d0 = t.element('d', 0).unwrap();
        assert!(a_seq[1].contains(c0) && a_seq[1].contains(d0));
    }

    #[test]
    fn candidate_growth() {
        let report = run_growth(&Reconstruction::candidate(), 4).unwrap();
        assert!(report.valid(), "{:?}", report.evidence);
        assert!(report.strictly_increasing && report.entries_hold);
        let sizes: Vec<usize> = report.rows.iter().map(|r| r.generated_size).collect();
        assert_eq!(sizes, vec![12, 16, 20, 24]);
        assert_eq!(report.rows[1].a_sizes, vec![3, 5, 5, 7, 7, 9, 9]);
    }

    #[test]
    fn gate_rejects_non_convex_generators() {
        // a0 < c0 < a1 puts c0 between two points of A.
        let rec = Reconstruction::parse("covers: a{n}<c{n} c{n}<a{n+1}").unwrap();
        let err = rec.truncate(1).unwrap().validate().unwrap_err();
        assert!(matches!(err, Error::InvalidReconstruction(ref m) if m.contains("A =")));
        assert!(matches!(
            run_growth(&rec, 2),
            Err(Error::InvalidReconstruction(_))
        ));
    }

    #[test]
    fn gate_rejects_long_posets() {
        let rec =
            Reconstruction::parse("covers: a{n}<b{n} b{n}<c{n} c{n}<d{n} d{n}<a{n+1}").unwrap();
        let err = rec.truncate(1).unwrap().validate().unwrap_err();
        assert!(matches!(err, Error::InvalidReconstruction(ref m) if m.contains("length")));
    }

    #[test]
    fn template_errors() {
        assert!(Reconstruction::parse("covers: e{n}<a{n}").is_err());
        assert!(Reconstruction::parse("covers: a{n+2}<b{n}").is_err());
        assert!(Reconstruction::parse("covers: a{n}b{n}").is_err());
    }
}
