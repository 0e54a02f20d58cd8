//! Built-in examples with facts the engine must re-derive.

use std::fmt;

use serde::Serialize;

use crate::colattice::co_lattice;
use crate::error::Result;
use crate::lattice::{from_colattice, lattice_from_join_presentation, FinLattice, Presentation};
use crate::poset::Poset;
use crate::terms::{build_identity, check_identity_with, CheckOptions, IdentityKind};
use crate::variety::{decide_sub, decide_sub2, decide_subn, DecideOptions, Variety};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Poset,
    Lattice,
    Presentation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fact {
    /// Length of the poset itself.
    Length(usize),
    LatticeSize(usize),
    JiCount(usize),
    Member(Variety, bool),
    DPair(String, String),
    DChain(String, String, String),
    /// The elementary D-cycles, each listed from its least element.
    DCycles(Vec<Vec<String>>),
    SubdirectlyIrreducible(bool),
    Identity(IdentityKind, bool),
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::Length(n) => write!(f, "length = {n}"),
            Fact::LatticeSize(n) => write!(f, "|L| = {n}"),
            Fact::JiCount(n) => write!(f, "|J(L)| = {n}"),
            Fact::Member(v, m) => write!(f, "{} {v}", if *m { "in" } else { "not in" }),
            Fact::DPair(a, b) => write!(f, "{a} D {b}"),
            Fact::DChain(a, b, c) => write!(f, "{a} D {b} D {c}"),
            Fact::DCycles(cs) => {
                let parts: Vec<String> = cs.iter().map(|c| format!("({})", c.join(" "))).collect();
                write!(f, "D-cycles = [{}]", parts.join(" "))
            }
            Fact::SubdirectlyIrreducible(b) => write!(f, "subdirectly irreducible = {b}"),
            Fact::Identity(k, h) => write!(f, "{k} {}", if *h { "holds" } else { "fails" }),
        }
    }
}

impl Fact {
    /// The opposite claim, where one exists.
    pub fn flipped(&self) -> Fact {
        match self {
            Fact::Length(n) => Fact::Length(n + 1),
            Fact::LatticeSize(n) => Fact::LatticeSize(n + 1),
            Fact::JiCount(n) => Fact::JiCount(n + 1),
            Fact::Member(v, m) => Fact::Member(*v, !m),
            Fact::DPair(a, b) => Fact::DPair(b.clone(), a.clone()),
            Fact::DChain(a, b, c) => Fact::DChain(c.clone(), b.clone(), a.clone()),
            Fact::DCycles(cs) if cs.is_empty() => Fact::DCycles(vec![vec!["?".into()]]),
            Fact::DCycles(_) => Fact::DCycles(Vec::new()),
            Fact::SubdirectlyIrreducible(b) => Fact::SubdirectlyIrreducible(!b),
            Fact::Identity(k, h) => Fact::Identity(*k, !h),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub kind: Kind,
    pub payload: String,
    pub facts: Vec<Fact>,
}

impl CorpusEntry {
    pub fn lattice(&self) -> Result<FinLattice> {
        Ok(match self.kind {
            Kind::Poset => from_colattice(&co_lattice(&Poset::parse(&self.payload)?)?),
            Kind::Lattice => FinLattice::parse(&self.payload)?,
            Kind::Presentation => {
                lattice_from_join_presentation(&Presentation::parse(&self.payload)?)?
            }
        })
    }
}

pub const EXAMPLE_PRESENTATION: &str = "\
generators: a' a b c u v
rel: a' <= a
rel: a <= b|c
rel: b <= u|v
rel: b <= a'|u
rel: a <= u|c
";

const PENTAGON: &str = "elements: 0 a b c 1\nleq: 0<=a a<=b b<=1 0<=c c<=1\n";
const SQUARE: &str = "elements: 0 a b 1\nleq: 0<=a 0<=b a<=1 b<=1\n";

fn s(x: &str) -> String {
    x.to_string()
}

pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for m in 1..=5 {
        let mut facts = vec![Fact::Length(m - 1)];
        facts.extend((1..=4).map(|n| Fact::Member(Variety::SubN(n), m <= n + 1)));
        out.push(CorpusEntry {
            name: format!("chain{m}"),
            kind: Kind::Poset,
            payload: crate::poset::chain(m).expect("m >= 1").to_text(),
            facts,
        });
    }
    out.push(CorpusEntry {
        name: s("pij-2-2"),
        kind: Kind::Poset,
        payload: crate::poset::pij(2, 2).expect("nonempty").to_text(),
        facts: vec![
            Fact::Length(2),
            Fact::LatticeSize(23),
            Fact::Member(Variety::Sub2, true),
            Fact::Member(Variety::SubN(1), false),
            Fact::SubdirectlyIrreducible(true),
        ],
    });
    out.push(CorpusEntry {
        name: s("pij-3-3"),
        kind: Kind::Poset,
        payload: crate::poset::pij(3, 3).expect("nonempty").to_text(),
        facts: vec![Fact::Length(2), Fact::LatticeSize(79)],
    });
    out.push(CorpusEntry {
        name: s("sub3-example"),
        kind: Kind::Presentation,
        payload: s(EXAMPLE_PRESENTATION),
        facts: vec![
            Fact::LatticeSize(29),
            Fact::JiCount(6),
            Fact::DPair(s("a"), s("b")),
            Fact::DPair(s("b"), s("u")),
            Fact::DChain(s("a"), s("b"), s("u")),
            Fact::DCycles(vec![vec![s("a'"), s("b")]]),
            Fact::SubdirectlyIrreducible(true),
            Fact::Identity(IdentityKind::L2, false),
            Fact::Member(Variety::SubN(3), true),
            Fact::Member(Variety::Sub2, false),
        ],
    });
    out.push(CorpusEntry {
        name: s("square"),
        kind: Kind::Lattice,
        payload: s(SQUARE),
        facts: vec![Fact::JiCount(2), Fact::Member(Variety::SubN(1), true)],
    });
    out.push(CorpusEntry {
        name: s("pentagon"),
        kind: Kind::Lattice,
        payload: s(PENTAGON),
        facts: vec![
            Fact::Member(Variety::Sub, true),
            Fact::Member(Variety::Sub2, true),
            Fact::Member(Variety::SubN(1), false),
            Fact::SubdirectlyIrreducible(true),
        ],
    });
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactResult {
    pub entry: String,
    pub fact: String,
    pub pass: bool,
    /// What the engine computed, when it differs or errs.
    pub detail: Option<String>,
}

fn member(l: &FinLattice, v: Variety) -> Result<bool> {
    let opts = DecideOptions::default();
    Ok(match v {
        Variety::Sub => decide_sub(l, opts.budget)?.member,
        Variety::Sub2 => decide_sub2(l, &opts)?.member,
        Variety::SubN(n) => decide_subn(l, n, &opts)?.member,
    })
}

fn derive(entry: &CorpusEntry, l: &FinLattice, fact: &Fact) -> Result<(bool, String)> {
    let names =
        |xs: &[usize]| -> Vec<String> { xs.iter().map(|&x| l.label(x).to_string()).collect() };
    Ok(match fact {
        Fact::Length(n) => {
            let got = Poset::parse(&entry.payload)?.length()?;
            (got == *n, format!("length = {got}"))
        }
        Fact::LatticeSize(n) => (l.len() == *n, format!("|L| = {}", l.len())),
        Fact::JiCount(n) => {
            let got = l.join_irreducibles().len();
            (got == *n, format!("|J(L)| = {got}"))
        }
        Fact::Member(v, m) => {
            let got = member(l, *v)?;
            (got == *m, format!("member = {got}"))
        }
        Fact::DPair(a, b) => {
            let got = l.d_related(l.element(a)?, l.element(b)?);
            (got, format!("{a} D {b} = {got}"))
        }
        Fact::DChain(a, b, c) => {
            let (x, y, z) = (l.element(a)?, l.element(b)?, l.element(c)?);
            let got = l.d_related(x, y) && l.d_related(y, z);
            (got, format!("chain = {got}"))
        }
        Fact::DCycles(cs) => {
            let got: Vec<Vec<String>> = l.d_cycles().iter().map(|c| names(c)).collect();
            (&got == cs, format!("{}", Fact::DCycles(got.clone())))
        }
        Fact::SubdirectlyIrreducible(b) => {
            let got = l.is_subdirectly_irreducible()?.holds;
            (got == *b, format!("subdirectly irreducible = {got}"))
        }
        Fact::Identity(k, h) => {
            let got = check_identity_with(l, &build_identity(*k)?, &CheckOptions::default())?.holds;
            (got == *h, format!("holds = {got}"))
        }
    })
}

/// Re-derives every fact of `entry`; errors count as failures.
pub fn run_entry(entry: &CorpusEntry) -> Vec<FactResult> {
    let l = entry.lattice();
    entry
        .facts
        .iter()
        .map(|fact| {
            let outcome = l
                .as_ref()
                .map_err(|e| e.clone())
                .and_then(|l| derive(entry, l, fact));
            let (pass, detail) = match outcome {
                Ok((true, _)) => (true, None),
                Ok((false, got)) => (false, Some(got)),
                Err(e) => (false, Some(format!("error: {e}"))),
            };
            FactResult {
                entry: entry.name.clone(),
                fact: fact.to_string(),
                pass,
                detail,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusRun {
    pub results: Vec<FactResult>,
    pub warnings: Vec<String>,
}

impl CorpusRun {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

/// Runs the entries whose name contains `filter`.
pub fn run_corpus(entries: &[CorpusEntry], filter: Option<&str>) -> CorpusRun {
    let selected: Vec<&CorpusEntry> = entries
        .iter()
        .filter(|e| filter.is_none_or(|f| e.name.contains(f)))
        .collect();
    let mut warnings = Vec::new();
    if selected.is_empty() {
        warnings.push(format!(
            "no corpus entry matches `{}`",
            filter.unwrap_or("")
        ));
    }
    CorpusRun {
        results: selected.into_iter().flat_map(run_entry).collect(),
        warnings,
    }
}
