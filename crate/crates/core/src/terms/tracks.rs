//! Stirlitz tracks and bi-Stirlitz tracks.
//!
//! A track of length `n` is `a0..an`, `a'1..a'n` of join-irreducibles with
//! `a(i) <= a(i+1) v a'(i+1)` a minimal nontrivial join-cover for `i < n` and
//! `a(i) <= a'(i) v a(i+1)` for `1 <= i < n`. The search walks the table of
//! minimal nontrivial join-covers and prunes with a memoized "can still
//! reach length n" predicate on the state `(a(i), a'(i))`.

use std::cell::RefCell;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::lattice::FinLattice;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StirlitzTrack {
    /// `a0 .. an`.
    pub a: Vec<usize>,
    /// `a'1 .. a'n`.
    pub aprime: Vec<usize>,
}

impl StirlitzTrack {
    pub fn len(&self) -> usize {
        self.aprime.len()
    }

    pub fn is_empty(&self) -> bool {
        self.aprime.is_empty()
    }

    /// Checks every defining condition directly.
    pub fn validate(&self, l: &FinLattice) -> bool {
        let n = self.len();
        if self.a.len() != n + 1 {
            return false;
        }
        let all_ji = self
            .a
            .iter()
            .chain(&self.aprime)
            .all(|&x| x < l.len() && l.is_join_irreducible(x));
        all_ji
            && (0..n).all(|i| l.is_mnjc(self.a[i], self.a[i + 1], self.aprime[i]))
            && (1..n).all(|i| l.leq(self.a[i], l.join(self.aprime[i - 1], self.a[i + 1])))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiStirlitzTrack {
    pub sigma: StirlitzTrack,
    pub tau: StirlitzTrack,
}

impl BiStirlitzTrack {
    pub fn validate(&self, l: &FinLattice) -> bool {
        let base = self.sigma.a[0];
        self.sigma.validate(l)
            && self.tau.validate(l)
            && !self.sigma.is_empty()
            && !self.tau.is_empty()
            && base == self.tau.a[0]
            && l.leq(base, l.join(self.sigma.a[1], self.tau.a[1]))
            && !l.leq(base, self.sigma.a[1])
            && !l.leq(base, self.tau.a[1])
    }
}

const NONE: usize = usize::MAX;

struct TrackSearch<'a> {
    l: &'a FinLattice,
    /// Minimal nontrivial join-covers `p <= b v c` with `b, c` in the entry set, keyed by `p`.
    covers: HashMap<usize, Vec<(usize, usize)>>,
    memo: RefCell<HashMap<(usize, usize, usize), bool>>,
}

impl<'a> TrackSearch<'a> {
    fn new(l: &'a FinLattice, sigma: &[usize]) -> TrackSearch<'a> {
        let sigma: Vec<usize> = sigma
            .iter()
            .copied()
            .filter(|&s| l.is_join_irreducible(s))
            .collect();
        let covers = sigma
            .iter()
            .map(|&p| {
                let pairs = sigma
                    .iter()
                    .flat_map(|&b| sigma.iter().map(move |&c| (b, c)))
                    .filter(|&(b, c)| l.is_mnjc(p, b, c))
                    .collect();
                (p, pairs)
            })
            .collect();
        TrackSearch {
            l,
            covers,
            memo: RefCell::new(HashMap::new()),
        }
    }

    /// Next steps `(b, c)` from `a(i) = a`, `a'(i) = ap` (`NONE` at the base).
    fn steps(&self, a: usize, ap: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.covers
            .get(&a)
            .into_iter()
            .flatten()
            .copied()
            .filter(move |&(b, _)| ap == NONE || self.l.leq(a, self.l.join(ap, b)))
    }

    fn completable(&self, remaining: usize, a: usize, ap: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        if let Some(&v) = self.memo.borrow().get(&(remaining, a, ap)) {
            return v;
        }
        let v = self
            .steps(a, ap)
            .any(|(b, c)| self.completable(remaining - 1, b, c));
        self.memo.borrow_mut().insert((remaining, a, ap), v);
        v
    }

    fn first_from(&self, n: usize, a0: usize) -> Option<StirlitzTrack> {
        if !self.completable(n, a0, NONE) {
            return None;
        }
        let mut a = vec![a0];
        let mut aprime = Vec::new();
        self.complete_to(n, &mut a, &mut aprime);
        Some(StirlitzTrack { a, aprime })
    }

    fn complete_to(&self, n: usize, a: &mut Vec<usize>, aprime: &mut Vec<usize>) {
        while aprime.len() < n {
            let left = n - aprime.len();
            let (cur, prev) = (*a.last().unwrap(), aprime.last().copied().unwrap_or(NONE));
            let (b, c) = self
                .steps(cur, prev)
                .find(|&(b, c)| self.completable(left - 1, b, c))
                .expect("completable state has a viable step");
            a.push(b);
            aprime.push(c);
        }
    }

    fn all_from(
        &self,
        n: usize,
        a: &mut Vec<usize>,
        aprime: &mut Vec<usize>,
        out: &mut Vec<StirlitzTrack>,
    ) {
        if aprime.len() == n {
            out.push(StirlitzTrack {
                a: a.clone(),
                aprime: aprime.clone(),
            });
            return;
        }
        let left = n - aprime.len();
        let (cur, prev) = (*a.last().unwrap(), aprime.last().copied().unwrap_or(NONE));
        let steps: Vec<(usize, usize)> = self.steps(cur, prev).collect();
        for (b, c) in steps {
            if self.completable(left - 1, b, c) {
                a.push(b);
                aprime.push(c);
                self.all_from(n, a, aprime, out);
                a.pop();
                aprime.pop();
            }
        }
    }

    fn all_tracks_from(&self, n: usize, a0: usize) -> Vec<StirlitzTrack> {
        let mut out = Vec::new();
        if self.completable(n, a0, NONE) {
            self.all_from(n, &mut vec![a0], &mut Vec::new(), &mut out);
        }
        out
    }

    /// First steps `(a1, a'1)` from `a0` that extend to a track of length `n`.
    fn viable_first_steps(&self, n: usize, a0: usize) -> Vec<(usize, usize)> {
        self.steps(a0, NONE)
            .filter(|&(b, c)| self.completable(n - 1, b, c))
            .collect()
    }
}

/// Every Stirlitz track of length `n` with entries in `sigma`, in search order.
pub fn find_stirlitz_tracks(l: &FinLattice, n: usize, sigma: &[usize]) -> Vec<StirlitzTrack> {
    let s = TrackSearch::new(l, sigma);
    sigma
        .iter()
        .filter(|&&a0| l.is_join_irreducible(a0))
        .flat_map(|&a0| s.all_tracks_from(n, a0))
        .collect()
}

/// The first Stirlitz track of length `n` with entries in `sigma`, if any.
pub fn has_stirlitz_track(l: &FinLattice, n: usize, sigma: &[usize]) -> Option<StirlitzTrack> {
    let s = TrackSearch::new(l, sigma);
    sigma
        .iter()
        .filter(|&&a0| l.is_join_irreducible(a0))
        .find_map(|&a0| s.first_from(n, a0))
}

/// Every bi-Stirlitz track of index `(m, n)` over `J(L)`.
pub fn find_bi_stirlitz(l: &FinLattice, m: usize, n: usize) -> Vec<BiStirlitzTrack> {
    let ji = l.join_irreducibles();
    let s = TrackSearch::new(l, &ji);
    let mut out = Vec::new();
    if m == 0 || n == 0 {
        return out;
    }
    for &a0 in &ji {
        let sigmas = s.all_tracks_from(m, a0);
        if sigmas.is_empty() {
            continue;
        }
        let taus = s.all_tracks_from(n, a0);
        for sigma in &sigmas {
            for tau in &taus {
                if l.leq(a0, l.join(sigma.a[1], tau.a[1])) {
                    out.push(BiStirlitzTrack {
                        sigma: sigma.clone(),
                        tau: tau.clone(),
                    });
                }
            }
        }
    }
    out
}

/// The first bi-Stirlitz track of index `(m, n)` over `J(L)`, if any.
pub fn has_bi_stirlitz(l: &FinLattice, m: usize, n: usize) -> Option<BiStirlitzTrack> {
    if m == 0 || n == 0 {
        return None;
    }
    let ji = l.join_irreducibles();
    let s = TrackSearch::new(l, &ji);
    for &a0 in &ji {
        let firsts = s.viable_first_steps(m, a0);
        if firsts.is_empty() {
            continue;
        }
        let seconds = s.viable_first_steps(n, a0);
        for &(a1, a1p) in &firsts {
            for &(b1, b1p) in &seconds {
                if l.leq(a0, l.join(a1, b1)) {
                    let mut a = vec![a0, a1];
                    let mut ap = vec![a1p];
                    s.complete_to(m, &mut a, &mut ap);
                    let mut b = vec![a0, b1];
                    let mut bp = vec![b1p];
                    s.complete_to(n, &mut b, &mut bp);
                    return Some(BiStirlitzTrack {
                        sigma: StirlitzTrack { a, aprime: ap },
                        tau: StirlitzTrack { a: b, aprime: bp },
                    });
                }
            }
        }
    }
    None
}
