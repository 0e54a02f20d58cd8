//! First-order consequences of (S), (U), (B) quantified over join-irreducibles.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::FinLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JiKind {
    Sj,
    Uj,
    Bj,
}

impl fmt::Display for JiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JiKind::Sj => "Sj",
            JiKind::Uj => "Uj",
            JiKind::Bj => "Bj",
        })
    }
}

impl FromStr for JiKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Sj" => Ok(JiKind::Sj),
            "Uj" => Ok(JiKind::Uj),
            "Bj" => Ok(JiKind::Bj),
            _ => Err(Error::BadArity(format!("unknown interpretation `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JiVerdict {
    pub holds: bool,
    /// A violating tuple of join-irreducibles, named as in the condition.
    pub witness: Option<Vec<(String, usize)>>,
}

fn named(names: &[&str], vals: &[usize]) -> Vec<(String, usize)> {
    names
        .iter()
        .map(|s| s.to_string())
        .zip(vals.iter().copied())
        .collect()
}

pub fn check_ji_interpretation(l: &FinLattice, kind: JiKind) -> JiVerdict {
    let ji = l.join_irreducibles();
    let le = |a: usize, b: usize| l.leq(a, b);
    let jn = |a: usize, b: usize| l.join(a, b);
    let witness = match kind {
        JiKind::Sj => {
            let mut found = None;
            'outer: for &a in &ji {
                for &b in &ji {
                    if a == b {
                        continue;
                    }
                    for &c in &ji {
                        // a <= b' v c for some b' < b, i.e. for the lower cover of b.
                        if !le(a, jn(b, c)) || le(a, jn(l.lower_star(b), c)) {
                            continue;
                        }
                        for &b0 in &ji {
                            for &b1 in &ji {
                                if !le(b, jn(b0, b1)) {
                                    continue;
                                }
                                let ok = [b0, b1]
                                    .iter()
                                    .any(|&bi| le(b, jn(a, bi)) && le(a, jn(bi, c)));
                                if !ok {
                                    found = Some(named(
                                        &["a", "b", "b0", "b1", "c"],
                                        &[a, b, b0, b1, c],
                                    ));
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
            found
        }
        JiKind::Uj => {
            let mut found = None;
            'outer: for &x in &ji {
                for &x0 in &ji {
                    for &x1 in &ji {
                        if !le(x, jn(x0, x1)) {
                            continue;
                        }
                        for &x2 in &ji {
                            let premise = le(x, jn(x0, x2)) && le(x, jn(x1, x2));
                            if premise && !le(x, x0) && !le(x, x1) && !le(x, x2) {
                                found = Some(named(&["x", "x0", "x1", "x2"], &[x, x0, x1, x2]));
                                break 'outer;
                            }
                        }
                    }
                }
            }
            found
        }
        JiKind::Bj => {
            let mut found = None;
            'outer: for &x in &ji {
                for &a0 in &ji {
                    for &a1 in &ji {
                        if !le(x, jn(a0, a1)) {
                            continue;
                        }
                        for &b0 in &ji {
                            for &b1 in &ji {
                                if !le(x, jn(b0, b1)) {
                                    continue;
                                }
                                let ok = [a0, a1, b0, b1].iter().any(|&e| le(x, e))
                                    || (le(x, jn(a0, b0)) && le(x, jn(a1, b1)))
                                    || (le(x, jn(a0, b1)) && le(x, jn(a1, b0)));
                                if !ok {
                                    found = Some(named(
                                        &["x", "a0", "a1", "b0", "b1"],
                                        &[x, a0, a1, b0, b1],
                                    ));
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
            found
        }
    };
    JiVerdict {
        holds: witness.is_none(),
        witness,
    }
}
