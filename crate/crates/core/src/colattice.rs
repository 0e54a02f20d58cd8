//! The lattice `Co(P)` of order-convex subsets of a finite poset, its
//! quotients by D-closed sets, and the subdirect decomposition into
//! completely subdirectly irreducible factors.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::ElemSet;
use crate::closure::close_under;
use crate::error::{Error, Result};
use crate::poset::{d_closed_sets, d_closure, DClosedSet, Poset};

/// Default bound on `|Co(P)|`.
pub const CO_LATTICE_BOUND: usize = 1 << 22;

/// Pair counts above this are verified by sampling instead of exhaustively.
const EXHAUSTIVE_PAIRS: usize = 1 << 20;
const SAMPLED_PAIRS: usize = 1 << 16;

#[derive(Clone, Debug)]
pub struct CoLattice {
    host: Poset,
    sets: Vec<ElemSet>,
    index: HashMap<ElemSet, usize>,
}

pub fn co_lattice(p: &Poset) -> Result<CoLattice> {
    CoLattice::with_bound(p, CO_LATTICE_BOUND)
}

impl CoLattice {
    /// Enumerates every convex subset of `p`.
    ///
    /// Depth-first from the empty set: each convex set is reached by adding one
    /// element to a convex set one smaller and taking the convex closure.
    pub fn with_bound(p: &Poset, bound: usize) -> Result<CoLattice> {
        let mut seen: HashSet<ElemSet> = HashSet::new();
        seen.insert(ElemSet::EMPTY);
        let mut stack = vec![ElemSet::EMPTY];
        while let Some(s) = stack.pop() {
            for x in p.all().difference(s).iter() {
                let t = p.convex_closure(s.with(x));
                if seen.insert(t) {
                    if seen.len() > bound {
                        return Err(Error::TooLarge {
                            what: "Co(P)",
                            size: seen.len(),
                            bound,
                        });
                    }
                    stack.push(t);
                }
            }
        }
        let mut sets: Vec<ElemSet> = seen.into_iter().collect();
        sets.sort_by_key(|s| (s.len(), s.0));
        let index = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        Ok(CoLattice {
            host: p.clone(),
            sets,
            index,
        })
    }

    pub fn host(&self) -> &Poset {
        &self.host
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[ElemSet] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> ElemSet {
        self.sets[i]
    }

    pub fn index_of(&self, set: ElemSet) -> Option<usize> {
        self.index.get(&set).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.sets.len() - 1
    }

    pub fn join(&self, x: ElemSet, y: ElemSet) -> ElemSet {
        self.host.convex_closure(x.union(y))
    }

    pub fn meet(&self, x: ElemSet, y: ElemSet) -> ElemSet {
        x.intersection(y)
    }

    pub fn join_idx(&self, i: usize, j: usize) -> usize {
        self.index[&self.join(self.sets[i], self.sets[j])]
    }

    pub fn meet_idx(&self, i: usize, j: usize) -> usize {
        self.index[&self.meet(self.sets[i], self.sets[j])]
    }

    /// The atoms, i.e. the singletons.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.sets[i].len() == 1)
            .collect()
    }

    pub fn set_name(&self, i: usize) -> String {
        self.host.set_name(self.sets[i])
    }

    /// The sublattice generated by `seeds` (convex sets), without enumerating `Co(P)`.
    pub fn generated(host: &Poset, seeds: &[ElemSet], cap: usize) -> Result<Vec<ElemSet>> {
        if let Some(bad) = seeds.iter().find(|s| !host.is_convex(**s)) {
            let _ = bad;
            return Err(Error::NotConvex);
        }
        close_under(
            seeds,
            |a, b| host.convex_closure(a.union(b)),
            |a, b| a.intersection(b),
            cap,
        )
    }
}

/// Result of checking a map between finite lattices pair by pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomCheck {
    pub homomorphism: bool,
    pub surjective: bool,
    pub kernel_matches: bool,
    pub exhaustive: bool,
}

/// `h_U : Co(P) -> Co(P \ U)`, `X -> X \ U`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub u: DClosedSet,
    pub target: CoLattice,
    /// Index in the host of each element of `P \ U`.
    pub kept: Vec<usize>,
    /// `image[i]` is the index in `target` of `h_U(source.set(i))`.
    pub image: Vec<usize>,
    pub check: HomCheck,
}

impl QuotientMap {
    pub fn apply(&self, x: ElemSet) -> ElemSet {
        Poset::restrict_to(x.difference(self.u.members), &self.kept)
    }
}

pub fn quotient(co: &CoLattice, u: ElemSet) -> Result<QuotientMap> {
    let host = co.host();
    let u = DClosedSet::new(host, u)?;
    let (rest, kept) = host.induced(host.all().difference(u.members));
    let target = co_lattice(&rest)?;
    let image = co
        .sets()
        .iter()
        .map(|&x| {
            let y = Poset::restrict_to(x.difference(u.members), &kept);
            target.index_of(y).ok_or(Error::NotConvex)
        })
        .collect::<Result<Vec<_>>>()?;

    let n = co.len();
    let exhaustive = n * n <= EXHAUSTIVE_PAIRS;
    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        (0..SAMPLED_PAIRS)
            .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
            .collect()
    };
    let mut homomorphism = true;
    let mut kernel_matches = true;
    for &(i, j) in &pairs {
        let (x, y) = (co.set(i), co.set(j));
        let hj = image[co.index_of(co.join(x, y)).expect("closed")];
        let hm = image[co.index_of(co.meet(x, y)).expect("closed")];
        if hj != target.join_idx(image[i], image[j]) || hm != target.meet_idx(image[i], image[j]) {
            homomorphism = false;
        }
        let same_class = x.union(u.members) == y.union(u.members);
        if same_class != (image[i] == image[j]) {
            kernel_matches = false;
        }
    }
    let mut hit = vec![false; target.len()];
    for &t in &image {
        hit[t] = true;
    }
    let check = HomCheck {
        homomorphism,
        surjective: hit.iter().all(|&h| h),
        kernel_matches,
        exhaustive,
    };
    if !check.homomorphism {
        return Err(Error::NotAHomomorphism(
            "h_U".into(),
            host.set_name(u.members),
        ));
    }
    Ok(QuotientMap {
        u,
        target,
        kept,
        image,
        check,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsiVerdict {
    pub holds: bool,
    /// The least nonempty D-closed set when `holds`, otherwise two distinct
    /// minimal nonempty D-closed sets (empty for the empty poset).
    pub witness: Vec<DClosedSet>,
}

/// Whether `Co(p)` has a least nonzero complete congruence.
pub fn is_completely_si(p: &Poset) -> Result<CsiVerdict> {
    let fam = d_closed_sets(p)?;
    Ok(match fam.least_nonempty {
        Some(least) => CsiVerdict {
            holds: true,
            witness: vec![least],
        },
        None => CsiVerdict {
            holds: false,
            witness: fam.minimal_nonempty.into_iter().take(2).collect(),
        },
    })
}

#[derive(Clone, Debug)]
pub struct Factor {
    pub u: DClosedSet,
    pub quotient: QuotientMap,
    /// The factor poset `P \ U`.
    pub poset: Poset,
    pub csi: bool,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub factors: Vec<Factor>,
    pub diagonal_injective: bool,
}

/// The completely meet-irreducible D-closed sets: exactly one upper cover among D-closed sets.
pub fn meet_irreducible_d_closed(p: &Poset) -> Result<Vec<DClosedSet>> {
    let fam = d_closed_sets(p)?;
    let point_closures: Vec<ElemSet> = (0..p.len())
        .map(|x| d_closure(p, ElemSet::singleton(x)))
        .collect();
    let mut out = Vec::new();
    for s in &fam.sets {
        let s = s.members;
        let mut uppers: Vec<ElemSet> = p
            .all()
            .difference(s)
            .iter()
            .map(|x| s.union(point_closures[x]))
            .collect();
        uppers.sort_by_key(|t| (t.len(), t.0));
        uppers.dedup();
        let covers = uppers
            .iter()
            .filter(|&&t| !uppers.iter().any(|&v| v != t && v.is_subset(t)))
            .count();
        if covers == 1 {
            out.push(DClosedSet { members: s });
        }
    }
    Ok(out)
}

pub fn subdirect_decomposition(p: &Poset) -> Result<Decomposition> {
    let co = co_lattice(p)?;
    let mut factors = Vec::new();
    for u in meet_irreducible_d_closed(p)? {
        let quotient = quotient(&co, u.members)?;
        let poset = quotient.target.host().clone();
        let csi = is_completely_si(&poset)?.holds;
        factors.push(Factor {
            u,
            quotient,
            poset,
            csi,
        });
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let diagonal_injective = (0..co.len()).all(|i| {
        let tuple: Vec<usize> = factors.iter().map(|f| f.quotient.image[i]).collect();
        seen.insert(tuple)
    });
    Ok(Decomposition {
        factors,
        diagonal_injective,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum P2Class {
    Singleton,
    Pij(usize, usize),
    NotInP2,
}

/// Recognises the completely subdirectly irreducible posets of length at most 2.
pub fn classify_p2(p: &Poset) -> P2Class {
    if p.len() == 1 {
        return P2Class::Singleton;
    }
    if p.length().ok() != Some(2) {
        return P2Class::NotInP2;
    }
    let minimal = p.minimal_elements();
    let maximal = p.maximal_elements();
    let middle = p.all().difference(minimal).difference(maximal);
    if middle.len() != 1 || !minimal.intersection(maximal).is_empty() {
        return P2Class::NotInP2;
    }
    let mid = middle.first().unwrap();
    let shaped = p.lower_covers(mid) == minimal
        && p.upper_covers(mid) == maximal
        && minimal
            .iter()
            .all(|x| p.upper_covers(x) == ElemSet::singleton(mid))
        && maximal
            .iter()
            .all(|y| p.lower_covers(y) == ElemSet::singleton(mid));
    if shaped {
        P2Class::Pij(minimal.len(), maximal.len())
    } else {
        P2Class::NotInP2
    }
}

/// For a poset of the form `P(I,J)`: the minimal points, the middle point and the maximal points.
pub fn pij_parts(p: &Poset) -> Option<(ElemSet, usize, ElemSet)> {
    match classify_p2(p) {
        P2Class::Pij(..) => {
            let minimal = p.minimal_elements();
            let maximal = p.maximal_elements();
            let mid = p.all().difference(minimal).difference(maximal).first()?;
            Some((minimal, mid, maximal))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{antichain, chain, enumerate, pij, poset_from_covers};

    /// Convex sets by filtering all subsets against the three-point definition.
    fn brute_convex_count(p: &Poset) -> usize {
        (0u64..1 << p.len())
            .map(ElemSet)
            .filter(|s| {
                s.iter().all(|x| {
                    s.iter().all(|y| {
                        (0..p.len()).all(|z| !(p.leq(x, z) && p.leq(z, y)) || s.contains(z))
                    })
                })
            })
            .count()
    }

    #[test]
    fn sizes() {
        let c3 = chain(3).unwrap();
        assert_eq!(brute_convex_count(&c3), 7);
        assert_eq!(co_lattice(&c3).unwrap().len(), 7);
        assert_eq!(co_lattice(&antichain(3).unwrap()).unwrap().len(), 8);
        assert_eq!(co_lattice(&pij(3, 3).unwrap()).unwrap().len(), 79);
    }

    #[test]
    fn enumeration_matches_subset_scan() {
        for p in enumerate::posets_up_to(5) {
            let co = co_lattice(&p).unwrap();
            assert_eq!(co.len(), brute_convex_count(&p));
            assert_eq!(co.set(co.bottom()), ElemSet::EMPTY);
            assert_eq!(co.set(co.top()), p.all());
            let atoms: Vec<ElemSet> = co.atoms().iter().map(|&i| co.set(i)).collect();
            assert_eq!(
                atoms,
                (0..p.len()).map(ElemSet::singleton).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn join_and_meet() {
        let c = chain(3).unwrap();
        let co = co_lattice(&c).unwrap();
        let a = c.set_of(&["c0", "c1"]).unwrap();
        let b = c.set_of(&["c1", "c2"]).unwrap();
        assert_eq!(co.meet(a, b), c.set_of(&["c1"]).unwrap());
        let p = pij(1, 1).unwrap();
        let co = co_lattice(&p).unwrap();
        assert_eq!(
            co.join(p.set_of(&["i0"]).unwrap(), p.set_of(&["j0"]).unwrap()),
            p.all()
        );
        for &x in co.sets() {
            assert_eq!(co.join(x, ElemSet::EMPTY), x);
        }
    }

    #[test]
    fn quotients() {
        let p = pij(1, 1).unwrap();
        let co = co_lattice(&p).unwrap();
        let q = quotient(&co, p.set_of(&["p"]).unwrap()).unwrap();
        assert_eq!(q.target.len(), 4);
        assert!(q.check.surjective && q.check.kernel_matches && q.check.exhaustive);

        let q = quotient(&co, ElemSet::EMPTY).unwrap();
        assert_eq!(q.image, (0..co.len()).collect::<Vec<_>>());

        let c = poset_from_covers(&["o", "a", "b", "c"], &[("o", "a"), ("a", "b"), ("b", "c")])
            .unwrap();
        let co = co_lattice(&c).unwrap();
        let q = quotient(&co, c.set_of(&["a", "b"]).unwrap()).unwrap();
        assert_eq!(q.target.len(), 4);
        assert_eq!(q.target.host().labels(), &["o", "c"]);

        let err = quotient(&co, c.set_of(&["o"]).unwrap()).unwrap_err();
        assert_eq!(err, Error::NotDClosed("a".into()));
    }

    #[test]
    fn complete_subdirect_irreducibility() {
        let p = pij(4, 1).unwrap();
        let v = is_completely_si(&p).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness[0].members, p.set_of(&["p"]).unwrap());
        let v = is_completely_si(&antichain(2).unwrap()).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.len(), 2);
        let one = antichain(1).unwrap();
        let v = is_completely_si(&one).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness[0].members, one.all());
    }

    #[test]
    fn decompositions() {
        let one = antichain(1).unwrap();
        let d = subdirect_decomposition(&one).unwrap();
        assert_eq!(d.factors.len(), 1);
        assert_eq!(d.factors[0].poset, one);

        let two = antichain(2).unwrap();
        let d = subdirect_decomposition(&two).unwrap();
        assert!(d.diagonal_injective);
        assert_eq!(d.factors.len(), 2);
        assert!(d.factors.iter().all(|f| f.poset.len() == 1 && f.csi));

        let d = subdirect_decomposition(&pij(2, 2).unwrap()).unwrap();
        assert!(d.diagonal_injective);
        assert!(d.factors.iter().all(|f| f.csi));
    }

    #[test]
    fn p2_classification() {
        assert_eq!(classify_p2(&antichain(1).unwrap()), P2Class::Singleton);
        let relabeled = poset_from_covers(
            &["u", "m", "a", "v", "b", "w"],
            &[("a", "m"), ("b", "m"), ("w", "m"), ("m", "u"), ("m", "v")],
        )
        .unwrap();
        assert_eq!(classify_p2(&relabeled), P2Class::Pij(3, 2));
        assert_eq!(classify_p2(&chain(4).unwrap()), P2Class::NotInP2);
        assert_eq!(classify_p2(&antichain(2).unwrap()), P2Class::NotInP2);
    }

    #[test]
    fn generated_by_sets() {
        let p = pij(1, 1).unwrap();
        let seeds = [
            p.set_of(&["i0", "p"]).unwrap(),
            p.set_of(&["p", "j0"]).unwrap(),
        ];
        let g = CoLattice::generated(&p, &seeds, 100).unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(
            CoLattice::generated(&p, &[p.set_of(&["i0", "j0"]).unwrap()], 10).unwrap_err(),
            Error::NotConvex
        );
    }
}
