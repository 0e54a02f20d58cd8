//! Lattice terms, identities and their evaluation in finite lattices.

mod builders;
mod check;
mod ji;
mod tracks;
mod udav_bond;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{parse_err, Error, Result};
use crate::lattice::FinLattice;

pub use builders::{build_identity, polynomial_u, polynomial_v, polynomial_w, IdentityKind};
pub use check::{
    check_identity, check_identity_with, CheckOptions, Counterexample, Verdict, DEFAULT_BUDGET,
};
pub use ji::{check_ji_interpretation, JiKind, JiVerdict};
pub use tracks::{
    find_bi_stirlitz, find_stirlitz_tracks, has_bi_stirlitz, has_stirlitz_track, BiStirlitzTrack,
    StirlitzTrack,
};
pub use udav_bond::{udav_bond_partition, UdavBondPartition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Join(Vec<Term>),
    Meet(Vec<Term>),
}

pub fn var(name: &str) -> Term {
    Term::Var(name.to_string())
}

/// Join of the given terms; a single term is returned as is.
pub fn join<I: IntoIterator<Item = Term>>(terms: I) -> Term {
    let mut v: Vec<Term> = terms.into_iter().collect();
    assert!(!v.is_empty(), "empty join");
    if v.len() == 1 {
        v.pop().unwrap()
    } else {
        Term::Join(v)
    }
}

/// Meet of the given terms; a single term is returned as is.
pub fn meet<I: IntoIterator<Item = Term>>(terms: I) -> Term {
    let mut v: Vec<Term> = terms.into_iter().collect();
    assert!(!v.is_empty(), "empty meet");
    if v.len() == 1 {
        v.pop().unwrap()
    } else {
        Term::Meet(v)
    }
}

impl Term {
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Join(ts) | Term::Meet(ts) => ts.iter().for_each(|t| t.collect_vars(out)),
        }
    }

    /// Parses an s-expression such as `(meet a (join b c))`.
    pub fn parse(text: &str) -> Result<Term> {
        let tokens = tokenize(text);
        let mut pos = 0;
        let t = parse_term(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(parse_err(
                0,
                format!("trailing input after term: `{}`", tokens[pos..].join(" ")),
            ));
        }
        Ok(t)
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::Join(ts) | Term::Meet(ts) => 1 + ts.iter().map(Term::depth).max().unwrap_or(0),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Join(ts) | Term::Meet(ts) => {
                let op = if matches!(self, Term::Join(_)) {
                    "join"
                } else {
                    "meet"
                };
                write!(f, "({op}")?;
                for t in ts {
                    write!(f, " {t}")?;
                }
                write!(f, ")")
            }
        }
    }
}

fn tokenize(text: &str) -> Vec<String> {
    text.replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(String::from)
        .collect()
}

fn parse_term(tokens: &[String], pos: &mut usize) -> Result<Term> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| parse_err(0, "unexpected end of term"))?;
    *pos += 1;
    match tok.as_str() {
        "(" => {
            let op = tokens
                .get(*pos)
                .ok_or_else(|| parse_err(0, "unexpected end of term"))?
                .clone();
            *pos += 1;
            let mut args = Vec::new();
            while tokens.get(*pos).map(String::as_str) != Some(")") {
                if *pos >= tokens.len() {
                    return Err(parse_err(0, "missing `)`"));
                }
                args.push(parse_term(tokens, pos)?);
            }
            *pos += 1;
            if args.is_empty() {
                return Err(parse_err(0, format!("`{op}` needs at least one argument")));
            }
            match op.as_str() {
                "join" => Ok(join(args)),
                "meet" => Ok(meet(args)),
                other => Err(parse_err(0, format!("unknown operation `{other}`"))),
            }
        }
        ")" => Err(parse_err(0, "unexpected `)`")),
        name => Ok(Term::Var(name.to_string())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub vars: Vec<String>,
    pub lhs: Term,
    pub rhs: Term,
    /// A variable `v` such that the left side is `v ^ T` and `rhs <= lhs` in
    /// every lattice; counterexamples can then be searched with `v` join-irreducible.
    pub guard: Option<String>,
}

impl Identity {
    pub fn new(name: &str, vars: Vec<String>, lhs: Term, rhs: Term) -> Result<Identity> {
        let used: BTreeSet<String> = lhs.vars().union(&rhs.vars()).cloned().collect();
        let declared: BTreeSet<String> = vars.iter().cloned().collect();
        if declared.len() != vars.len() {
            return Err(Error::BadArity(format!("duplicate variable in `{name}`")));
        }
        if let Some(v) = used.difference(&declared).next() {
            return Err(Error::UnboundVariable(v.clone()));
        }
        if let Some(v) = declared.difference(&used).next() {
            return Err(Error::BadArity(format!(
                "variable `{v}` of `{name}` does not occur"
            )));
        }
        Ok(Identity {
            name: name.to_string(),
            vars,
            lhs,
            rhs,
            guard: None,
        })
    }

    /// Parses the identity file format:
    ///
    /// ```text
    /// name: distributive
    /// vars: a b c
    /// lhs: (meet a (join b c))
    /// rhs: (join (meet a b) (meet a c))
    /// ```
    pub fn parse(text: &str) -> Result<Identity> {
        let mut fields: HashMap<&str, (usize, String)> = HashMap::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| parse_err(no + 1, format!("expected `key: ...`, got `{line}`")))?;
            let key = match key.trim() {
                k @ ("name" | "vars" | "lhs" | "rhs") => k,
                other => return Err(parse_err(no + 1, format!("unknown key `{other}`"))),
            };
            if fields
                .insert(key, (no + 1, rest.trim().to_string()))
                .is_some()
            {
                return Err(parse_err(no + 1, format!("duplicate `{key}:` line")));
            }
        }
        let get = |k: &str| {
            fields
                .get(k)
                .cloned()
                .ok_or_else(|| parse_err(0, format!("missing `{k}:` line")))
        };
        let (_, name) = get("name")?;
        let (_, vars) = get("vars")?;
        let term = |k: &str| -> Result<Term> {
            let (line, text) = get(k)?;
            Term::parse(&text).map_err(|e| match e {
                Error::Parse { msg, .. } => parse_err(line, msg),
                other => other,
            })
        };
        let lhs = term("lhs")?;
        let rhs = term("rhs")?;
        Identity::new(
            &name,
            vars.split_whitespace().map(String::from).collect(),
            lhs,
            rhs,
        )
    }

    pub fn to_text(&self) -> String {
        format!(
            "name: {}\nvars: {}\nlhs: {}\nrhs: {}\n",
            self.name,
            self.vars.join(" "),
            self.lhs,
            self.rhs
        )
    }
}

/// Evaluates `t` in `l` under an assignment of element indices.
pub fn eval(t: &Term, l: &FinLattice, asg: &HashMap<String, usize>) -> Result<usize> {
    match t {
        Term::Var(v) => asg
            .get(v)
            .copied()
            .ok_or_else(|| Error::UnboundVariable(v.clone())),
        Term::Join(ts) => ts
            .iter()
            .try_fold(l.bottom(), |acc, t| Ok(l.join(acc, eval(t, l, asg)?))),
        Term::Meet(ts) => ts
            .iter()
            .try_fold(l.top(), |acc, t| Ok(l.meet(acc, eval(t, l, asg)?))),
    }
}
