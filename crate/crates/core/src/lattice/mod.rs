//! Abstract finite lattices given by join and meet tables.

mod congruence;
mod format;
mod presentation;

use std::collections::HashMap;

use crate::bits::ElemSet;
use crate::closure::close_under;
use crate::colattice::CoLattice;
use crate::error::{Error, Result};
use crate::poset::Poset;

pub use congruence::SiVerdict;
pub use format::render_tables;
pub use presentation::{closed_sets_lattice, lattice_from_join_presentation, Presentation};

/// Largest lattice for which join and meet tables are built.
pub const LATTICE_BOUND: usize = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinLattice {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: usize,
    top: usize,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JoinCover {
    pub p: usize,
    pub left: usize,
    pub right: usize,
    pub nontrivial: bool,
    pub minimal_in_left: bool,
    pub minimal_in_right: bool,
}

impl JoinCover {
    pub fn is_minimal_nontrivial(&self) -> bool {
        self.nontrivial && self.minimal_in_left && self.minimal_in_right
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyPoset);
    }
    if n > LATTICE_BOUND {
        return Err(Error::TooLarge {
            what: "lattice",
            size: n,
            bound: LATTICE_BOUND,
        });
    }
    Ok(())
}

pub fn lattice_from_leq<S: AsRef<str>>(labels: &[S], leq_pairs: &[(S, S)]) -> Result<FinLattice> {
    let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    let index = label_index(&labels)?;
    let look = |s: &S| {
        index
            .get(s.as_ref())
            .copied()
            .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_string()))
    };
    let pairs = leq_pairs
        .iter()
        .map(|(a, b)| Ok((look(a)?, look(b)?)))
        .collect::<Result<Vec<_>>>()?;
    FinLattice::from_index_leq(labels, &pairs)
}

fn label_index(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

pub fn from_colattice(co: &CoLattice) -> FinLattice {
    let labels = (0..co.len()).map(|i| co.set_name(i)).collect();
    FinLattice::from_ops(labels, |x, y| co.join_idx(x, y), |x, y| co.meet_idx(x, y))
        .expect("Co(P) is a lattice")
}

/// The lattice on a family of convex subsets of `host` closed under
/// intersection and convex hull of unions, ordered by size then bits.
pub fn lattice_of_sets(host: &Poset, sets: &[ElemSet]) -> Result<FinLattice> {
    let mut sets = sets.to_vec();
    sets.sort_by_key(|s| (s.len(), s.0));
    sets.dedup();
    let pos: HashMap<ElemSet, usize> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let find = |s: ElemSet| {
        pos.get(&s)
            .copied()
            .ok_or_else(|| Error::NotALattice(host.set_name(s), String::new(), "closure"))
    };
    let n = sets.len();
    check_size(n)?;
    let mut join = vec![0u32; n * n];
    let mut meet = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            join[x * n + y] = find(host.convex_closure(sets[x].union(sets[y])))? as u32;
            meet[x * n + y] = find(sets[x].intersection(sets[y]))? as u32;
        }
    }
    let labels = sets.iter().map(|&s| host.set_name(s)).collect();
    FinLattice::from_tables(labels, join, meet)
}

impl FinLattice {
    /// Builds a lattice from the reflexive-transitive closure of `pairs`.
    pub fn from_index_leq(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<FinLattice> {
        let n = labels.len();
        check_size(n)?;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(x, y) in pairs {
            leq[x * n + y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if leq[x * n + y] && leq[y * n + x] {
                    return Err(Error::CycleDetected(labels[x].clone()));
                }
            }
        }
        let bound = |x: usize, y: usize, upper: bool| -> Option<usize> {
            let rel = |a: usize, b: usize| {
                if upper {
                    leq[a * n + b]
                } else {
                    leq[b * n + a]
                }
            };
            let bounds: Vec<usize> = (0..n).filter(|&z| rel(x, z) && rel(y, z)).collect();
            bounds
                .iter()
                .copied()
                .find(|&z| bounds.iter().all(|&w| rel(z, w)))
        };
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for x in 0..n {
            for y in x..n {
                let j = bound(x, y, true).ok_or_else(|| {
                    Error::NotALattice(labels[x].clone(), labels[y].clone(), "join")
                })?;
                let m = bound(x, y, false).ok_or_else(|| {
                    Error::NotALattice(labels[x].clone(), labels[y].clone(), "meet")
                })?;
                join[x * n + y] = j as u32;
                join[y * n + x] = j as u32;
                meet[x * n + y] = m as u32;
                meet[y * n + x] = m as u32;
            }
        }
        FinLattice::from_tables(labels, join, meet)
    }

    /// Builds a lattice from operations known to be lattice operations.
    pub fn from_ops<J, M>(labels: Vec<String>, join: J, meet: M) -> Result<FinLattice>
    where
        J: Fn(usize, usize) -> usize,
        M: Fn(usize, usize) -> usize,
    {
        let n = labels.len();
        check_size(n)?;
        let mut jt = vec![0u32; n * n];
        let mut mt = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                jt[x * n + y] = join(x, y) as u32;
                mt[x * n + y] = meet(x, y) as u32;
            }
        }
        FinLattice::from_tables(labels, jt, mt)
    }

    /// Wraps tables that are assumed to be valid; see [`FinLattice::validate_tables`].
    fn from_tables(labels: Vec<String>, join: Vec<u32>, meet: Vec<u32>) -> Result<FinLattice> {
        let n = labels.len();
        let index = label_index(&labels)?;
        let leq = |x: usize, y: usize| join[x * n + y] as usize == y;
        let bottom = (0..n)
            .find(|&b| (0..n).all(|y| leq(b, y)))
            .expect("lattice has a bottom");
        let top = (0..n)
            .find(|&t| (0..n).all(|y| leq(y, t)))
            .expect("lattice has a top");
        let down_count: Vec<usize> = (0..n)
            .map(|x| (0..n).filter(|&y| leq(y, x)).count())
            .collect();
        let mut lower_covers = vec![Vec::new(); n];
        for (x, covers) in lower_covers.iter_mut().enumerate() {
            let mut below: Vec<usize> = (0..n).filter(|&y| y != x && leq(y, x)).collect();
            below.sort_by_key(|&y| std::cmp::Reverse(down_count[y]));
            // Anything above y inside the down-set is seen first, so y is
            // maximal iff it lies below none of the covers found so far.
            for y in below {
                if !covers.iter().any(|&m| leq(y, m)) {
                    covers.push(y);
                }
            }
            covers.sort_unstable();
        }
        let mut upper_covers = vec![Vec::new(); n];
        for (x, lows) in lower_covers.iter().enumerate() {
            for &y in lows {
                upper_covers[y].push(x);
            }
        }
        Ok(FinLattice {
            labels,
            index,
            join,
            meet,
            bottom,
            top,
            lower_covers,
            upper_covers,
        })
    }

    /// Validates raw tables: both operations are semilattice operations and absorb each other.
    pub fn validate_tables(
        labels: Vec<String>,
        join: Vec<u32>,
        meet: Vec<u32>,
    ) -> Result<FinLattice> {
        let n = labels.len();
        check_size(n)?;
        let bad = |x: usize, y: usize, what: &'static str| {
            Error::NotALattice(labels[x].clone(), labels[y].clone(), what)
        };
        if join.len() != n * n
            || meet.len() != n * n
            || join.iter().chain(&meet).any(|&v| v as usize >= n)
        {
            return Err(Error::BadArity(format!(
                "tables must be {n} x {n} over the elements"
            )));
        }
        let j = |x: usize, y: usize| join[x * n + y] as usize;
        let m = |x: usize, y: usize| meet[x * n + y] as usize;
        for x in 0..n {
            for y in 0..n {
                if j(x, y) != j(y, x) || j(x, x) != x {
                    return Err(bad(x, y, "commutative idempotent join"));
                }
                if m(x, y) != m(y, x) || m(x, x) != x {
                    return Err(bad(x, y, "commutative idempotent meet"));
                }
                if j(x, m(x, y)) != x || m(x, j(x, y)) != x {
                    return Err(bad(x, y, "absorption"));
                }
                for z in 0..n {
                    if j(j(x, y), z) != j(x, j(y, z)) {
                        return Err(bad(x, y, "associative join"));
                    }
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(bad(x, y, "associative meet"));
                    }
                }
            }
        }
        FinLattice::from_tables(labels, join, meet)
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

    pub fn element(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y] as usize
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y] as usize
    }

    pub fn join_table(&self) -> &[u32] {
        &self.join
    }

    pub fn meet_table(&self) -> &[u32] {
        &self.meet
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.bottom, |a, b| self.join(a, b))
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.join(x, y) == y
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    /// All covering pairs `(x, y)` with `x` covered by `y`.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|y| self.lower_covers[y].iter().map(move |&x| (x, y)))
            .collect()
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.upper_covers[self.bottom].clone()
    }

    pub fn is_atomistic(&self) -> bool {
        let atoms = self.atoms();
        (0..self.len())
            .all(|x| self.join_all(atoms.iter().copied().filter(|&a| self.leq(a, x))) == x)
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
                })
            })
        })
    }

    /// Elements other than the bottom with exactly one lower cover, in index order.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.lower_covers[x].len() == 1)
            .collect()
    }

    pub fn is_join_irreducible(&self, x: usize) -> bool {
        self.lower_covers[x].len() == 1
    }

    /// The unique lower cover of a join-irreducible element.
    pub fn lower_star(&self, p: usize) -> usize {
        debug_assert!(self.is_join_irreducible(p));
        self.lower_covers[p][0]
    }

    /// Whether `p <= left v right` admits no smaller `left`.
    pub fn minimal_in(&self, p: usize, left: usize, right: usize) -> bool {
        self.lower_covers[left]
            .iter()
            .all(|&x| !self.leq(p, self.join(x, right)))
    }

    pub fn join_cover(&self, p: usize, left: usize, right: usize) -> Option<JoinCover> {
        if !self.leq(p, self.join(left, right)) {
            return None;
        }
        Some(JoinCover {
            p,
            left,
            right,
            nontrivial: !self.leq(p, left) && !self.leq(p, right),
            minimal_in_left: self.minimal_in(p, left, right),
            minimal_in_right: self.minimal_in(p, right, left),
        })
    }

    /// Every `(left, right)` with `p <= left v right`, in index order.
    pub fn join_covers(&self, p: usize) -> Vec<JoinCover> {
        let n = self.len();
        (0..n)
            .flat_map(|l| (0..n).filter_map(move |r| self.join_cover(p, l, r)))
            .collect()
    }

    /// `p <= b v c` is a minimal nontrivial join-cover, for join-irreducible `b`, `c`.
    pub fn is_mnjc(&self, p: usize, b: usize, c: usize) -> bool {
        self.leq(p, self.join(b, c))
            && !self.leq(p, b)
            && !self.leq(p, c)
            && !self.leq(p, self.join(self.lower_star(b), c))
            && !self.leq(p, self.join(b, self.lower_star(c)))
    }

    /// Whether `p D q` for join-irreducible `p`, `q`.
    pub fn d_related(&self, p: usize, q: usize) -> bool {
        if p == q {
            return false;
        }
        let q_star = self.lower_star(q);
        (0..self.len()).any(|x| self.leq(p, self.join(q, x)) && !self.leq(p, self.join(q_star, x)))
    }

    /// An `x` witnessing `p D q`.
    pub fn d_witness(&self, p: usize, q: usize) -> Option<usize> {
        if p == q {
            return None;
        }
        let q_star = self.lower_star(q);
        (0..self.len())
            .find(|&x| self.leq(p, self.join(q, x)) && !self.leq(p, self.join(q_star, x)))
    }

    /// The join-dependency relation on `J(L)`, sorted.
    pub fn d_relation(&self) -> Vec<(usize, usize)> {
        let ji = self.join_irreducibles();
        let mut out = Vec::new();
        for &p in &ji {
            for &q in &ji {
                if self.d_related(p, q) {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// D-successors of each join-irreducible, keyed by element index.
    pub fn d_successors(&self) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.len()];
        for (p, q) in self.d_relation() {
            succ[p].push(q);
        }
        succ
    }

    /// Elementary cycles of the D-graph, each rotated to start at its least element.
    pub fn d_cycles(&self) -> Vec<Vec<usize>> {
        let succ = self.d_successors();
        let mut cycles = Vec::new();
        for start in self.join_irreducibles() {
            let mut path = vec![start];
            let mut on_path = vec![false; self.len()];
            on_path[start] = true;
            cycles_from(start, &succ, &mut path, &mut on_path, &mut cycles);
        }
        cycles
    }

    /// Join-irreducibles with no D-predecessor.
    pub fn d_minimal(&self) -> Vec<usize> {
        let mut has_pred = vec![false; self.len()];
        for (_, q) in self.d_relation() {
            has_pred[q] = true;
        }
        self.join_irreducibles()
            .into_iter()
            .filter(|&a| !has_pred[a])
            .collect()
    }

    /// Some `a D b D c` among join-irreducibles, if one exists.
    pub fn d_chain3(&self) -> Option<(usize, usize, usize)> {
        let succ = self.d_successors();
        for a in self.join_irreducibles() {
            for &b in &succ[a] {
                if let Some(&c) = succ[b].first() {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    /// Checks the three clauses of a join-seed.
    pub fn is_join_seed(&self, sigma: &[usize]) -> bool {
        if !sigma.iter().all(|&s| self.is_join_irreducible(s)) {
            return false;
        }
        let n = self.len();
        let generates =
            (0..n).all(|x| self.join_all(sigma.iter().copied().filter(|&s| self.leq(s, x))) == x);
        if !generates {
            return false;
        }
        sigma.iter().all(|&p| {
            let minimal: Vec<(usize, usize)> = sigma
                .iter()
                .flat_map(|&x| sigma.iter().map(move |&y| (x, y)))
                .filter(|&(x, y)| {
                    self.leq(p, self.join(x, y))
                        && !self.leq(p, x)
                        && !self.leq(p, y)
                        && self.minimal_in(p, x, y)
                        && self.minimal_in(p, y, x)
                })
                .collect();
            (0..n).all(|a| {
                (0..n).all(|b| {
                    !self.leq(p, self.join(a, b))
                        || self.leq(p, a)
                        || self.leq(p, b)
                        || minimal
                            .iter()
                            .any(|&(x, y)| self.leq(x, a) && self.leq(y, b))
                })
            })
        })
    }

    /// The sublattice on `elems`, which must be closed under join and meet.
    pub fn sublattice(&self, elems: &[usize]) -> FinLattice {
        let mut elems = elems.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let labels = elems.iter().map(|&e| self.labels[e].clone()).collect();
        FinLattice::from_ops(
            labels,
            |x, y| pos[&self.join(elems[x], elems[y])],
            |x, y| pos[&self.meet(elems[x], elems[y])],
        )
        .expect("closed subset of a lattice")
    }

    /// The sublattice generated by `seeds` and the original index of each of its elements.
    pub fn generated_sublattice(
        &self,
        seeds: &[usize],
        step_cap: usize,
    ) -> Result<(FinLattice, Vec<usize>)> {
        if seeds.is_empty() {
            return Err(Error::NoSeeds);
        }
        let mut elems = close_under(
            seeds,
            |a, b| self.join(a, b),
            |a, b| self.meet(a, b),
            step_cap,
        )?;
        elems.sort_unstable();
        Ok((self.sublattice(&elems), elems))
    }

    /// Renders the lattice in the `elements:` / `leq:` format, listing covering pairs.
    pub fn to_text(&self) -> String {
        format::render(self)
    }

    pub fn parse(text: &str) -> Result<FinLattice> {
        format::parse(text)
    }
}

fn cycles_from(
    start: usize,
    succ: &[Vec<usize>],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for &next in &succ[last] {
        if next == start {
            out.push(path.clone());
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            path.push(next);
            cycles_from(start, succ, path, on_path, out);
            path.pop();
            on_path[next] = false;
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::colattice::co_lattice;
    use crate::poset::{antichain, chain, poset_from_covers};

    pub(crate) fn boolean(k: usize) -> FinLattice {
        let labels: Vec<String> = (0..1usize << k).map(|m| format!("s{m}")).collect();
        FinLattice::from_ops(labels, |x, y| x | y, |x, y| x & y).unwrap()
    }

    pub(crate) fn pentagon() -> FinLattice {
        lattice_from_leq(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
        )
        .unwrap()
    }

    #[test]
    fn from_leq() {
        let c2 = lattice_from_leq(&["x", "y"], &[("x", "y")]).unwrap();
        assert_eq!(c2.join(0, 1), 1);
        assert_eq!(c2.meet(0, 1), 0);
        let b = lattice_from_leq(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap();
        assert_eq!((b.bottom(), b.top()), (0, 3));
        assert_eq!(b.join_irreducibles(), vec![1, 2]);
        let bowtie = lattice_from_leq(
            &["a", "b", "c", "d"],
            &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        );
        assert!(matches!(bowtie, Err(Error::NotALattice(..))));
        let cyc = lattice_from_leq(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert!(matches!(cyc, Err(Error::CycleDetected(_))));
    }

    #[test]
    fn colattice_adapter() {
        let l = from_colattice(&co_lattice(&antichain(2).unwrap()).unwrap());
        assert_eq!(l.len(), 4);
        assert_eq!(l.labels(), &["{}", "{x0}", "{x1}", "{x0,x1}"]);
        assert!(l.is_distributive());
        let l = from_colattice(&co_lattice(&chain(2).unwrap()).unwrap());
        assert_eq!(l.len(), 4);
        assert_eq!(l.atoms().len(), 2);
        assert_eq!(
            from_colattice(&co_lattice(&chain(3).unwrap()).unwrap()).len(),
            7
        );
    }

    #[test]
    fn join_irreducibles_of_small_lattices() {
        assert_eq!(boolean(3).join_irreducibles(), vec![1, 2, 4]);
        let c4 =
            lattice_from_leq(&["0", "1", "2", "3"], &[("0", "1"), ("1", "2"), ("2", "3")]).unwrap();
        assert_eq!(c4.join_irreducibles(), vec![1, 2, 3]);
    }

    /// `p D q` straight from the definition: some `x` with `p <= q v x` minimal in `q`.
    fn brute_d(l: &FinLattice) -> Vec<(usize, usize)> {
        let ji = l.join_irreducibles();
        let mut out = Vec::new();
        for &p in &ji {
            for &q in &ji {
                let related = p != q
                    && (0..l.len()).any(|x| {
                        l.leq(p, l.join(q, x))
                            && (0..l.len()).all(|y| !l.lt(y, q) || !l.leq(p, l.join(y, x)))
                    });
                if related {
                    out.push((p, q));
                }
            }
        }
        out
    }

    #[test]
    fn d_relation_on_four_chain() {
        let p = poset_from_covers(&["o", "a", "b", "c"], &[("o", "a"), ("a", "b"), ("b", "c")])
            .unwrap();
        let l = from_colattice(&co_lattice(&p).unwrap());
        let d = l.d_relation();
        assert_eq!(d, brute_d(&l));
        let el = |s: &str| l.element(s).unwrap();
        assert!(d.contains(&(el("{a}"), el("{b}"))));
        assert!(d.contains(&(el("{b}"), el("{c}"))));
        // An atomistic member of SUB outside SUB2 must carry a two-element D-cycle.
        assert_eq!(l.d_cycles(), vec![vec![el("{a}"), el("{b}")]]);
        assert!(l.d_minimal().is_empty());
        let succ = l.d_successors();
        assert!(succ[el("{o}")].is_empty() && succ[el("{c}")].is_empty());
        for &(p, q) in &d {
            assert!(!l.leq(p, q));
        }
    }

    #[test]
    fn boolean_has_no_dependencies() {
        let b = boolean(2);
        assert!(b.d_relation().is_empty());
        assert_eq!(b.d_minimal(), b.join_irreducibles());
        assert!(b.join_covers(1).iter().all(|c| !c.nontrivial));
        assert_eq!(brute_d(&pentagon()), pentagon().d_relation());
    }

    #[test]
    fn join_seeds() {
        let b = boolean(2);
        assert!(b.is_join_seed(&b.join_irreducibles()));
        assert!(!b.is_join_seed(&[1]));
        for p in [
            chain(4).unwrap(),
            antichain(3).unwrap(),
            crate::poset::pij(2, 1).unwrap(),
        ] {
            let co = co_lattice(&p).unwrap();
            let l = from_colattice(&co);
            let singletons: Vec<usize> = co.atoms();
            assert!(l.is_join_seed(&singletons));
        }
    }

    #[test]
    fn generated() {
        let b = boolean(2);
        let (s, idx) = b.generated_sublattice(&[1, 2], 100).unwrap();
        assert_eq!((s.len(), idx), (4, vec![0, 1, 2, 3]));
        let (s, _) = b.generated_sublattice(&[2], 100).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(
            b.generated_sublattice(&[1, 2], 3).unwrap_err(),
            Error::CapExceeded { cap: 3, partial: 4 }
        );
        assert_eq!(b.generated_sublattice(&[], 3).unwrap_err(), Error::NoSeeds);
    }

    #[test]
    fn table_validation() {
        let b = boolean(2);
        let ok = FinLattice::validate_tables(
            b.labels().to_vec(),
            b.join_table().to_vec(),
            b.meet_table().to_vec(),
        )
        .unwrap();
        assert_eq!(ok, b);
        let mut bad = b.join_table().to_vec();
        bad[1] = 2;
        assert!(
            FinLattice::validate_tables(b.labels().to_vec(), bad, b.meet_table().to_vec()).is_err()
        );
    }
}
