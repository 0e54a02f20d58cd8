//! Finite posets over at most [`MAX_ELEMENTS`] elements.
//!
//! Elements are indexed densely in declaration order and every subset is an
//! [`ElemSet`]. The order is stored as principal up-sets and down-sets, and
//! the cover relation is derived from it, never taken on trust from input.

mod dclosed;
pub mod enumerate;
mod format;

use std::collections::HashMap;

use crate::bits::{ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

pub use dclosed::{d_closed_sets, d_closure, is_d_closed, DClosedFamily, DClosedSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    upper_covers: Vec<ElemSet>,
    lower_covers: Vec<ElemSet>,
}

/// The named poset families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `c0 < c1 < ... < c(m-1)`.
    Chain(usize),
    /// `m` pairwise incomparable points `x0 ... x(m-1)`.
    Antichain(usize),
    /// `P(I,J)`: minimal points `i0..`, one middle point `p`, maximal points `j0..`,
    /// with `x < p < y` for every minimal `x` and maximal `y`.
    Pij(usize, usize),
}

pub fn build_family(kind: Family) -> Result<Poset> {
    match kind {
        Family::Chain(m) => {
            if m == 0 {
                return Err(Error::ZeroSize);
            }
            let labels: Vec<String> = (0..m).map(|k| format!("c{k}")).collect();
            let covers: Vec<(usize, usize)> = (1..m).map(|k| (k - 1, k)).collect();
            Poset::from_index_covers(labels, &covers)
        }
        Family::Antichain(m) => {
            if m == 0 {
                return Err(Error::ZeroSize);
            }
            Poset::from_index_covers((0..m).map(|k| format!("x{k}")).collect(), &[])
        }
        Family::Pij(i, j) => {
            if i == 0 || j == 0 {
                return Err(Error::ZeroSize);
            }
            let mut labels: Vec<String> = (0..i).map(|k| format!("i{k}")).collect();
            labels.push("p".into());
            labels.extend((0..j).map(|k| format!("j{k}")));
            let mut covers: Vec<(usize, usize)> = (0..i).map(|k| (k, i)).collect();
            covers.extend((0..j).map(|k| (i, i + 1 + k)));
            Poset::from_index_covers(labels, &covers)
        }
    }
}

pub fn chain(m: usize) -> Result<Poset> {
    build_family(Family::Chain(m))
}

pub fn antichain(m: usize) -> Result<Poset> {
    build_family(Family::Antichain(m))
}

pub fn pij(i: usize, j: usize) -> Result<Poset> {
    build_family(Family::Pij(i, j))
}

/// Builds the poset whose order is the reflexive-transitive closure of `cover_pairs`.
pub fn poset_from_covers<S: AsRef<str>>(labels: &[S], cover_pairs: &[(S, S)]) -> Result<Poset> {
    let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    let mut index = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    let lookup = |s: &S| {
        index
            .get(s.as_ref())
            .copied()
            .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_string()))
    };
    let pairs = cover_pairs
        .iter()
        .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
        .collect::<Result<Vec<_>>>()?;
    Poset::from_index_covers(labels, &pairs)
}

impl Poset {
    /// Builds a poset from index pairs `x <= y`; the order is their reflexive-transitive closure.
    pub fn from_index_covers(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                what: "poset",
                size: n,
                bound: MAX_ELEMENTS,
            });
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut up: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::UnknownLabel(format!("#{}", x.max(y))));
            }
            up[x].insert(y);
        }
        // Warshall over bit rows.
        for k in 0..n {
            let row = up[k];
            for set in up.iter_mut() {
                if set.contains(k) {
                    *set = set.union(row);
                }
            }
        }
        let mut down = vec![ElemSet::EMPTY; n];
        for (x, set) in up.iter().enumerate() {
            for y in set.iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::CycleDetected(labels[x].clone()));
                }
                down[y].insert(x);
            }
        }
        let mut upper_covers = vec![ElemSet::EMPTY; n];
        let mut lower_covers = vec![ElemSet::EMPTY; n];
        for x in 0..n {
            let strict_up = up[x].without(x);
            for y in strict_up.iter() {
                let between = strict_up.intersection(down[y].without(y));
                if between.is_empty() {
                    upper_covers[x].insert(y);
                    lower_covers[y].insert(x);
                }
            }
        }
        Ok(Poset {
            labels,
            index,
            up,
            down,
            upper_covers,
            lower_covers,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Resolves a list of labels into a set.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElemSet> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
            })
            .collect()
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.up[x].contains(y)
    }

    /// `{y : x <= y}`.
    pub fn up_set(&self, x: usize) -> ElemSet {
        self.up[x]
    }

    /// `{y : y <= x}`.
    pub fn down_set(&self, x: usize) -> ElemSet {
        self.down[x]
    }

    pub fn upper_covers(&self, x: usize) -> ElemSet {
        self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> ElemSet {
        self.lower_covers[x]
    }

    /// Cover pairs `(x, y)` with `x` covered by `y`, in index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.upper_covers[x].iter().map(move |y| (x, y)))
            .collect()
    }

    pub fn minimal_elements(&self) -> ElemSet {
        (0..self.len())
            .filter(|&x| self.lower_covers[x].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> ElemSet {
        (0..self.len())
            .filter(|&x| self.upper_covers[x].is_empty())
            .collect()
    }

    /// Elements sorted so that `x < y` implies `x` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.down[x].len(), x));
        order
    }

    /// Maximum number of elements in a chain, minus one.
    pub fn length(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyPoset);
        }
        let mut height = vec![0usize; self.len()];
        for x in self.linear_extension() {
            height[x] = self.lower_covers[x]
                .iter()
                .map(|y| height[y] + 1)
                .max()
                .unwrap_or(0);
        }
        Ok(height.into_iter().max().unwrap_or(0))
    }

    /// Height of each element: the length of the longest chain ending at it.
    pub fn heights(&self) -> Vec<usize> {
        let mut height = vec![0usize; self.len()];
        for x in self.linear_extension() {
            height[x] = self.lower_covers[x]
                .iter()
                .map(|y| height[y] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }

    /// `x <= z <= y` with `x, y` in the set forces `z` into the set.
    pub fn is_convex(&self, set: ElemSet) -> bool {
        self.convex_closure(set) == set
    }

    /// Least order-convex superset.
    ///
    /// A single pass suffices: the intersection of the up-set and the down-set
    /// generated by `set` is already convex.
    pub fn convex_closure(&self, set: ElemSet) -> ElemSet {
        let mut above = ElemSet::EMPTY;
        let mut below = ElemSet::EMPTY;
        for x in set.iter() {
            above = above.union(self.up[x]);
            below = below.union(self.down[x]);
        }
        above.intersection(below)
    }

    /// Whether the undirected cover graph is acyclic.
    pub fn is_tree_like(&self) -> bool {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (x, y) in self.covers() {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx == ry {
                return false;
            }
            parent[rx] = ry;
        }
        true
    }

    /// The subposet induced on `keep`, together with the old index of each new element.
    pub fn induced(&self, keep: ElemSet) -> (Poset, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_of = vec![usize::MAX; self.len()];
        for (i, &o) in old.iter().enumerate() {
            new_of[o] = i;
        }
        let labels = old.iter().map(|&o| self.labels[o].clone()).collect();
        let pairs: Vec<(usize, usize)> = old
            .iter()
            .flat_map(|&x| {
                let new_of = &new_of;
                self.up[x]
                    .intersection(keep)
                    .iter()
                    .map(move |y| (new_of[x], new_of[y]))
            })
            .collect();
        let poset = Poset::from_index_covers(labels, &pairs).expect("subposet of a poset");
        (poset, old)
    }

    /// Maps a set of this poset into the index space of an induced subposet.
    pub fn restrict_to(set: ElemSet, old_indices: &[usize]) -> ElemSet {
        old_indices
            .iter()
            .enumerate()
            .filter(|(_, &o)| set.contains(o))
            .map(|(i, _)| i)
            .collect()
    }

    /// Renders a set as `{a,b,c}` in index order.
    pub fn set_name(&self, set: ElemSet) -> String {
        let names: Vec<&str> = set.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Whether `other` is isomorphic to `self`, by brute force over bijections.
    ///
    /// Intended for small posets in tests and round-trip checks.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        let n = self.len();
        if n != other.len() {
            return false;
        }
        let sig = |p: &Poset, x: usize| (p.down[x].len(), p.up[x].len());
        let mut a: Vec<_> = (0..n).map(|x| sig(self, x)).collect();
        let mut b: Vec<_> = (0..n).map(|x| sig(other, x)).collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(x: usize, s: &Poset, o: &Poset, image: &mut [usize], used: &mut [bool]) -> bool {
            if x == s.len() {
                return true;
            }
            for y in 0..o.len() {
                if used[y] || s.down[x].len() != o.down[y].len() || s.up[x].len() != o.up[y].len() {
                    continue;
                }
                let consistent = (0..x).all(|z| {
                    s.leq(z, x) == o.leq(image[z], y) && s.leq(x, z) == o.leq(y, image[z])
                });
                if consistent {
                    image[x] = y;
                    used[y] = true;
                    if extend(x + 1, s, o, image, used) {
                        return true;
                    }
                    used[y] = false;
                }
            }
            false
        }
        extend(0, self, other, &mut image, &mut used)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named_chain4() -> Poset {
        poset_from_covers(&["o", "a", "b", "c"], &[("o", "a"), ("a", "b"), ("b", "c")]).unwrap()
    }

    /// Longest chain by enumerating every subset and testing whether it is a chain.
    fn brute_length(p: &Poset) -> usize {
        let n = p.len();
        (0u64..1 << n)
            .map(ElemSet)
            .filter(|s| {
                s.iter()
                    .all(|x| s.iter().all(|y| p.leq(x, y) || p.leq(y, x)))
            })
            .map(|s| s.len())
            .max()
            .unwrap()
            - 1
    }

    /// Least convex superset by filtering all supersets.
    fn brute_closure(p: &Poset, x: ElemSet) -> ElemSet {
        let convex = |s: ElemSet| {
            s.iter().all(|a| {
                s.iter()
                    .all(|b| (0..p.len()).all(|z| !(p.leq(a, z) && p.leq(z, b)) || s.contains(z)))
            })
        };
        (0u64..1 << p.len())
            .map(ElemSet)
            .filter(|&s| x.is_subset(s) && convex(s))
            .min_by_key(|s| s.len())
            .unwrap()
    }

    #[test]
    fn singleton_and_chain() {
        let one = poset_from_covers::<&str>(&["a"], &[]).unwrap();
        assert!(one.leq(0, 0));
        assert_eq!(one.covers(), vec![]);
        assert_eq!(one.length().unwrap(), 0);
        assert_eq!(named_chain4().length().unwrap(), 3);
    }

    #[test]
    fn cycle_is_rejected() {
        let err = poset_from_covers(&["x", "y"], &[("x", "y"), ("y", "x")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected(_)));
        let err = poset_from_covers(&["x"], &[("x", "z")]).unwrap_err();
        assert_eq!(err, Error::UnknownLabel("z".into()));
    }

    #[test]
    fn implied_pairs_are_not_covers() {
        let p = poset_from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn families() {
        let p = pij(1, 1).unwrap();
        assert_eq!(p.labels(), &["i0", "p", "j0"]);
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        let p = pij(3, 3).unwrap();
        assert_eq!(p.len(), 7);
        assert_eq!(p.length().unwrap(), 2);
        let a = antichain(3).unwrap();
        assert!(a.covers().is_empty());
        assert_eq!(a.length().unwrap(), 0);
        assert_eq!(chain(0).unwrap_err(), Error::ZeroSize);
        assert_eq!(pij(0, 2).unwrap_err(), Error::ZeroSize);
    }

    #[test]
    fn length_matches_chain_enumeration() {
        let p = pij(5, 2).unwrap();
        assert_eq!(brute_length(&p), 2);
        assert_eq!(p.length().unwrap(), 2);
        assert_eq!(chain(4).unwrap().length().unwrap(), 3);
        assert_eq!(antichain(6).unwrap().length().unwrap(), 0);
        let empty = Poset::from_index_covers(vec![], &[]).unwrap();
        assert_eq!(empty.length().unwrap_err(), Error::EmptyPoset);
    }

    #[test]
    fn convexity() {
        let c = chain(4).unwrap();
        assert!(!c.is_convex(c.set_of(&["c0", "c2"]).unwrap()));
        assert!(c.is_convex(c.set_of(&["c1", "c2"]).unwrap()));
        assert_eq!(c.convex_closure(ElemSet::EMPTY), ElemSet::EMPTY);
        assert_eq!(c.convex_closure(c.set_of(&["c0", "c3"]).unwrap()), c.all());
        let p = pij(2, 2).unwrap();
        assert!(!p.is_convex(p.set_of(&["i0", "j0"]).unwrap()));
        let x = p.set_of(&["i0", "j1"]).unwrap();
        let expected = brute_closure(&p, x);
        assert_eq!(expected, p.set_of(&["i0", "p", "j1"]).unwrap());
        assert_eq!(p.convex_closure(x), expected);
    }

    #[test]
    fn tree_likeness() {
        assert!(chain(5).unwrap().is_tree_like());
        assert!(pij(3, 3).unwrap().is_tree_like());
        let diamond = poset_from_covers(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("d", "b"), ("d", "c")],
        )
        .unwrap();
        assert!(!diamond.is_tree_like());
    }

    #[test]
    fn isomorphism_ignores_labels() {
        let a = pij(3, 2).unwrap();
        let b = poset_from_covers(
            &["m", "x", "y", "z", "u", "v"],
            &[("x", "m"), ("y", "m"), ("z", "m"), ("m", "u"), ("m", "v")],
        )
        .unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&pij(2, 3).unwrap()));
    }

    #[test]
    fn induced_subposet_keeps_order() {
        let c = named_chain4();
        let (sub, old) = c.induced(c.set_of(&["o", "c"]).unwrap());
        assert_eq!(old, vec![0, 3]);
        assert!(sub.leq(0, 1));
        assert_eq!(sub.covers(), vec![(0, 1)]);
    }
}
