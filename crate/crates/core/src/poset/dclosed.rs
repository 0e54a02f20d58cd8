//! D-closed subsets: `x < p < y` (covers) with `x` or `y` in the set forces `p` in.
//!
//! Membership is a system of unary Horn clauses `x => p`, so D-closed sets
//! are exactly the unions of closures of single elements.

use std::collections::HashSet;

use super::Poset;
use crate::bits::ElemSet;
use crate::error::{Error, Result};

/// Largest poset for which all D-closed sets are enumerated.
pub const D_CLOSED_BOUND: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DClosedSet {
    pub members: ElemSet,
}

#[derive(Clone, Debug)]
pub struct DClosedFamily {
    /// Every D-closed set, sorted by size then mask.
    pub sets: Vec<DClosedSet>,
    /// Inclusion-minimal nonempty D-closed sets.
    pub minimal_nonempty: Vec<DClosedSet>,
    pub least_nonempty: Option<DClosedSet>,
}

/// `forced[x]`: the elements that every D-closed set containing `x` must contain
/// (one step of the Horn clauses).
fn forced(p: &Poset) -> Vec<ElemSet> {
    let mut forced = vec![ElemSet::EMPTY; p.len()];
    for mid in 0..p.len() {
        let below = p.lower_covers(mid);
        let above = p.upper_covers(mid);
        if below.is_empty() || above.is_empty() {
            continue;
        }
        for x in below.union(above).iter() {
            forced[x].insert(mid);
        }
    }
    forced
}

fn close(forced: &[ElemSet], set: ElemSet) -> ElemSet {
    let mut closed = set;
    let mut frontier = set;
    while let Some(x) = frontier.first() {
        frontier = frontier.without(x);
        let new = forced[x].difference(closed);
        closed = closed.union(new);
        frontier = frontier.union(new);
    }
    closed
}

/// Least D-closed superset.
pub fn d_closure(p: &Poset, set: ElemSet) -> ElemSet {
    close(&forced(p), set)
}

pub fn is_d_closed(p: &Poset, set: ElemSet) -> bool {
    d_closure(p, set) == set
}

impl DClosedSet {
    pub fn new(p: &Poset, members: ElemSet) -> Result<DClosedSet> {
        let closed = d_closure(p, members);
        match closed.difference(members).first() {
            None => Ok(DClosedSet { members }),
            Some(missing) => Err(Error::NotDClosed(p.label(missing).to_string())),
        }
    }
}

/// Enumerates every D-closed subset of `p`.
pub fn d_closed_sets(p: &Poset) -> Result<DClosedFamily> {
    if p.len() > D_CLOSED_BOUND {
        return Err(Error::TooLarge {
            what: "poset for D-closed enumeration",
            size: p.len(),
            bound: D_CLOSED_BOUND,
        });
    }
    let forced = forced(p);
    let point_closures: Vec<ElemSet> = (0..p.len())
        .map(|x| close(&forced, ElemSet::singleton(x)))
        .collect();

    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut stack = vec![ElemSet::EMPTY];
    seen.insert(ElemSet::EMPTY);
    while let Some(s) = stack.pop() {
        for x in p.all().difference(s).iter() {
            let t = s.union(point_closures[x]);
            if seen.insert(t) {
                stack.push(t);
            }
        }
    }
    let mut sets: Vec<ElemSet> = seen.into_iter().collect();
    sets.sort_by_key(|s| (s.len(), s.0));

    let mut minimal: Vec<ElemSet> = Vec::new();
    for &c in &point_closures {
        if !point_closures.iter().any(|&d| d != c && d.is_subset(c)) && !minimal.contains(&c) {
            minimal.push(c);
        }
    }
    minimal.sort_by_key(|s| (s.len(), s.0));
    let least = (minimal.len() == 1).then(|| DClosedSet {
        members: minimal[0],
    });
    Ok(DClosedFamily {
        sets: sets
            .into_iter()
            .map(|members| DClosedSet { members })
            .collect(),
        minimal_nonempty: minimal
            .into_iter()
            .map(|members| DClosedSet { members })
            .collect(),
        least_nonempty: least,
    })
}
