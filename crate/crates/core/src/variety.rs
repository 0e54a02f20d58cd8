//! Membership in SUB, SUB2 and SUBn for finite lattices, the embedding of
//! SUB2 members into `Co` of a tree-like poset of length at most 2, and the
//! truncation of homomorphisms into `Co(P(I,J))`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::ElemSet;
use crate::closure::close_under;
use crate::colattice::{classify_p2, pij_parts, subdirect_decomposition, P2Class};
use crate::error::{Error, Result};
use crate::lattice::FinLattice;
use crate::poset::Poset;
use crate::terms::{
    build_identity, check_identity_with, eval, has_bi_stirlitz, has_stirlitz_track,
    udav_bond_partition, BiStirlitzTrack, CheckOptions, Counterexample, Identity, IdentityKind,
    StirlitzTrack, DEFAULT_BUDGET,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variety {
    Sub,
    Sub2,
    SubN(usize),
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variety::Sub => f.write_str("SUB"),
            Variety::Sub2 => f.write_str("SUB2"),
            Variety::SubN(n) => write!(f, "SUB{n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Naive,
    Structural,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Naive => "naive",
            Method::Structural => "structural",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Method::Naive),
            "structural" => Ok(Method::Structural),
            _ => Err(Error::BadArity(format!("unknown method `{s}`"))),
        }
    }
}

/// Whether the structural method re-checks (S), (U), (B) and D2D first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preconditions {
    Verify,
    /// For lattices known to lie in SUB and to be dually 2-distributive, such as `Co(P)`.
    Assume,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecideOptions {
    pub method: Method,
    pub preconditions: Preconditions,
    pub budget: u128,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            method: Method::Structural,
            preconditions: Preconditions::Verify,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedTrack {
    pub a: Vec<String>,
    pub aprime: Vec<String>,
}

impl NamedTrack {
    pub fn of(l: &FinLattice, t: &StirlitzTrack) -> NamedTrack {
        NamedTrack {
            a: t.a.iter().map(|&x| l.label(x).to_string()).collect(),
            aprime: t.aprime.iter().map(|&x| l.label(x).to_string()).collect(),
        }
    }

    fn resolve(&self, l: &FinLattice) -> Result<StirlitzTrack> {
        Ok(StirlitzTrack {
            a: elements(l, &self.a)?,
            aprime: elements(l, &self.aprime)?,
        })
    }
}

fn elements(l: &FinLattice, names: &[String]) -> Result<Vec<usize>> {
    names.iter().map(|s| l.element(s)).collect()
}

/// Evidence of non-membership, by element labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Assignment {
        identity: String,
        /// The identity in its text format, so the witness replays on its own.
        text: String,
        assignment: Vec<(String, String)>,
        lhs: String,
        rhs: String,
    },
    Track(NamedTrack),
    BiTrack {
        sigma: NamedTrack,
        tau: NamedTrack,
    },
    DChain {
        a: String,
        b: String,
        c: String,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Assignment {
                identity,
                assignment,
                lhs,
                rhs,
                ..
            } => {
                let asg: Vec<String> = assignment.iter().map(|(v, e)| format!("{v}={e}")).collect();
                write!(
                    f,
                    "{identity} fails at {}: lhs={lhs} rhs={rhs}",
                    asg.join(" ")
                )
            }
            Witness::Track(t) => {
                write!(f, "track a=({}) a'=({})", t.a.join(" "), t.aprime.join(" "))
            }
            Witness::BiTrack { sigma, tau } => write!(
                f,
                "bi-track a=({}) a'=({}) | b=({}) b'=({})",
                sigma.a.join(" "),
                sigma.aprime.join(" "),
                tau.a.join(" "),
                tau.aprime.join(" ")
            ),
            Witness::DChain { a, b, c } => write!(f, "D-chain {a} D {b} D {c}"),
        }
    }
}

impl Witness {
    pub fn from_counterexample(l: &FinLattice, id: &Identity, w: &Counterexample) -> Witness {
        Witness::Assignment {
            identity: id.name.clone(),
            text: id.to_text(),
            assignment: w
                .assignment
                .iter()
                .map(|(v, x)| (v.clone(), l.label(*x).to_string()))
                .collect(),
            lhs: l.label(w.lhs).to_string(),
            rhs: l.label(w.rhs).to_string(),
        }
    }

    /// Re-checks the defining condition of the witness in `l`.
    pub fn validate(&self, l: &FinLattice, variety: Variety) -> Result<bool> {
        Ok(match self {
            Witness::Assignment {
                text,
                assignment,
                lhs,
                rhs,
                ..
            } => {
                let id = Identity::parse(text)?;
                let asg: HashMap<String, usize> = assignment
                    .iter()
                    .map(|(v, e)| Ok((v.clone(), l.element(e)?)))
                    .collect::<Result<_>>()?;
                let (x, y) = (eval(&id.lhs, l, &asg)?, eval(&id.rhs, l, &asg)?);
                x != y && l.label(x) == lhs && l.label(y) == rhs
            }
            Witness::Track(t) => {
                let t = t.resolve(l)?;
                t.validate(l) && variety == Variety::SubN(t.len())
            }
            Witness::BiTrack { sigma, tau } => {
                let bi = BiStirlitzTrack {
                    sigma: sigma.resolve(l)?,
                    tau: tau.resolve(l)?,
                };
                let total = bi.sigma.len() + bi.tau.len();
                bi.validate(l) && variety == Variety::SubN(total - 1)
            }
            Witness::DChain { a, b, c } => {
                let (a, b, c) = (l.element(a)?, l.element(b)?, l.element(c)?);
                [a, b, c].iter().all(|&x| l.is_join_irreducible(x))
                    && l.d_related(a, b)
                    && l.d_related(b, c)
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    /// The lattice in its text format.
    pub lattice: String,
    pub variety: Variety,
    pub member: bool,
    pub method: Method,
    pub witness: Option<Witness>,
}

impl MembershipReport {
    fn new(
        l: &FinLattice,
        variety: Variety,
        method: Method,
        witness: Option<Witness>,
    ) -> MembershipReport {
        MembershipReport {
            lattice: l.to_text(),
            variety,
            member: witness.is_none(),
            method,
            witness,
        }
    }

    /// Members carry no witness; non-members carry one that still holds.
    pub fn revalidate_on(&self, l: &FinLattice) -> Result<bool> {
        match (&self.witness, self.member) {
            (None, member) => Ok(member),
            (Some(_), true) => Ok(false),
            (Some(w), false) => w.validate(l, self.variety),
        }
    }

    pub fn revalidate(&self) -> Result<bool> {
        self.revalidate_on(&FinLattice::parse(&self.lattice)?)
    }
}

fn first_failure(l: &FinLattice, kinds: &[IdentityKind], budget: u128) -> Result<Option<Witness>> {
    let opts = CheckOptions {
        budget,
        prune: true,
    };
    for &kind in kinds {
        let id = build_identity(kind)?;
        let v = check_identity_with(l, &id, &opts)?;
        if let Some(w) = v.witness {
            return Ok(Some(Witness::from_counterexample(l, &id, &w)));
        }
    }
    Ok(None)
}

const STRUCTURAL_PRECONDITIONS: [IdentityKind; 4] = [
    IdentityKind::D2D,
    IdentityKind::S,
    IdentityKind::U,
    IdentityKind::B,
];

/// The first failure among D2D, (S), (U), (B), which the structural method relies on.
pub fn check_structural_preconditions(l: &FinLattice, budget: u128) -> Result<Option<Witness>> {
    first_failure(l, &STRUCTURAL_PRECONDITIONS, budget)
}

fn preconditions(l: &FinLattice, opts: &DecideOptions) -> Result<Option<Witness>> {
    match opts.preconditions {
        Preconditions::Verify => check_structural_preconditions(l, opts.budget),
        Preconditions::Assume => Ok(None),
    }
}

/// Membership in SUB by (S), (U) and (B).
pub fn decide_sub(l: &FinLattice, budget: u128) -> Result<MembershipReport> {
    let w = first_failure(
        l,
        &[IdentityKind::S, IdentityKind::U, IdentityKind::B],
        budget,
    )?;
    Ok(MembershipReport::new(l, Variety::Sub, Method::Naive, w))
}

pub fn decide_sub2(l: &FinLattice, opts: &DecideOptions) -> Result<MembershipReport> {
    let w = match opts.method {
        Method::Naive => first_failure(
            l,
            &[IdentityKind::L2, IdentityKind::U, IdentityKind::B],
            opts.budget,
        )?,
        Method::Structural => match preconditions(l, opts)? {
            Some(w) => Some(w),
            None => l.d_chain3().map(|(a, b, c)| Witness::DChain {
                a: l.label(a).to_string(),
                b: l.label(b).to_string(),
                c: l.label(c).to_string(),
            }),
        },
    };
    Ok(MembershipReport::new(l, Variety::Sub2, opts.method, w))
}

pub fn decide_subn(l: &FinLattice, n: usize, opts: &DecideOptions) -> Result<MembershipReport> {
    if n == 0 {
        return Err(Error::BadArity("SUBn needs n >= 1".into()));
    }
    let variety = Variety::SubN(n);
    if n == 1 {
        let w = first_failure(l, &[IdentityKind::H(1)], opts.budget)?;
        return Ok(MembershipReport::new(l, variety, opts.method, w));
    }
    let w = match opts.method {
        Method::Naive => {
            let mut kinds = vec![
                IdentityKind::S,
                IdentityKind::U,
                IdentityKind::B,
                IdentityKind::H(n),
            ];
            kinds.extend((2..n).map(|k| IdentityKind::Hmn(k, n + 1 - k)));
            first_failure(l, &kinds, opts.budget)?
        }
        Method::Structural => structural_subn(l, n, opts)?,
    };
    Ok(MembershipReport::new(l, variety, opts.method, w))
}

fn structural_subn(l: &FinLattice, n: usize, opts: &DecideOptions) -> Result<Option<Witness>> {
    if let Some(w) = preconditions(l, opts)? {
        return Ok(Some(w));
    }
    let ji = l.join_irreducibles();
    if let Some(t) = has_stirlitz_track(l, n, &ji) {
        return Ok(Some(Witness::Track(NamedTrack::of(l, &t))));
    }
    for k in 2..n {
        if let Some(bi) = has_bi_stirlitz(l, k, n + 1 - k) {
            return Ok(Some(Witness::BiTrack {
                sigma: NamedTrack::of(l, &bi.sigma),
                tau: NamedTrack::of(l, &bi.tau),
            }));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaFlags {
    pub is_embedding: bool,
    pub bounds_preserved: bool,
    pub length_le_2: bool,
    pub tree_like: bool,
    /// Checked only when the source is subdirectly irreducible.
    pub atom_preserving: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct GammaEmbedding {
    pub source: FinLattice,
    /// Elements are `[p]` and `[p;a]`, labelled by the source labels.
    pub gamma: Poset,
    /// The join-irreducible sequence behind each element of `gamma`.
    pub sequences: Vec<Vec<usize>>,
    /// `phi[x]`: the elements of `gamma` whose last entry lies below `x`.
    pub phi: Vec<ElemSet>,
    pub flags: GammaFlags,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaReport {
    /// The poset in its text format.
    pub gamma: String,
    pub phi: Vec<(String, String)>,
    pub flags: GammaFlags,
}

impl GammaEmbedding {
    pub fn report(&self) -> GammaReport {
        GammaReport {
            gamma: self.gamma.to_text(),
            phi: self
                .phi
                .iter()
                .enumerate()
                .map(|(x, &s)| (self.source.label(x).to_string(), self.gamma.set_name(s)))
                .collect(),
            flags: self.flags,
        }
    }
}

pub fn gamma_embedding(l: &FinLattice) -> Result<GammaEmbedding> {
    gamma_embedding_with(l, Preconditions::Verify)
}

/// With [`Preconditions::Assume`] only the absence of D-chains is checked.
pub fn gamma_embedding_with(l: &FinLattice, pre: Preconditions) -> Result<GammaEmbedding> {
    let opts = DecideOptions {
        preconditions: pre,
        ..DecideOptions::default()
    };
    let report = decide_sub2(l, &opts)?;
    if let Some(w) = report.witness {
        return Err(Error::NotInSub2(w.to_string()));
    }

    let succ = l.d_successors();
    let mut sequences: Vec<Vec<usize>> = Vec::new();
    let mut pos: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut push = |seq: Vec<usize>, sequences: &mut Vec<Vec<usize>>| {
        let i = sequences.len();
        pos.insert(seq.clone(), i);
        sequences.push(seq);
        i
    };
    let mut covers = Vec::new();
    for p in l.d_minimal() {
        let part = udav_bond_partition(l, p)
            .map_err(|_| Error::PartitionMissing(l.label(p).to_string()))?;
        let root = push(vec![p], &mut sequences);
        for &a in &succ[p] {
            let node = push(vec![p, a], &mut sequences);
            if part.a_side.contains(&a) {
                covers.push((node, root));
            } else {
                covers.push((root, node));
            }
        }
    }
    let labels: Vec<String> = sequences
        .iter()
        .map(|s| {
            let names: Vec<&str> = s.iter().map(|&x| l.label(x)).collect();
            format!("[{}]", names.join(";"))
        })
        .collect();
    let gamma = Poset::from_index_covers(labels, &covers)?;
    let phi: Vec<ElemSet> = (0..l.len())
        .map(|x| {
            ElemSet::from_indices(
                sequences
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| l.leq(*s.last().unwrap(), x))
                    .map(|(i, _)| i),
            )
        })
        .collect();
    let flags = gamma_flags(l, &gamma, &phi)?;
    Ok(GammaEmbedding {
        source: l.clone(),
        gamma,
        sequences,
        phi,
        flags,
    })
}

fn gamma_flags(l: &FinLattice, gamma: &Poset, phi: &[ElemSet]) -> Result<GammaFlags> {
    let n = l.len();
    let injective = phi.iter().collect::<HashSet<_>>().len() == n;
    let convex = phi.iter().all(|&s| gamma.is_convex(s));
    let ops = (0..n).all(|x| {
        (0..n).all(|y| {
            phi[l.meet(x, y)] == phi[x].intersection(phi[y])
                && phi[l.join(x, y)] == gamma.convex_closure(phi[x].union(phi[y]))
        })
    });
    let atom_preserving = match l.is_subdirectly_irreducible() {
        Ok(si) if si.holds => Some(l.atoms().iter().all(|&a| phi[a].len() == 1)),
        _ => None,
    };
    Ok(GammaFlags {
        is_embedding: injective && convex && ops,
        bounds_preserved: phi[l.bottom()].is_empty() && phi[l.top()] == gamma.all(),
        length_le_2: gamma.is_empty() || gamma.length()? <= 2,
        tree_like: gamma.is_tree_like(),
        atom_preserving,
    })
}

/// A homomorphism into `Co(P(I,J))` cut down to `Co(P(I',J'))`.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub host: Poset,
    pub i_kept: ElemSet,
    pub j_kept: ElemSet,
    /// The induced poset on `I' + J' + {p}`.
    pub target: Poset,
    /// Host index of each element of `target`.
    pub kept: Vec<usize>,
    /// The truncated map, as convex subsets of `target`.
    pub map: Vec<ElemSet>,
    pub homomorphism: bool,
    pub kernel_preserved: bool,
    /// Every strict non-inclusion among the generated sets survives the cut.
    pub separating: bool,
}

impl Truncation {
    pub fn size(&self) -> usize {
        self.i_kept.len() + self.j_kept.len()
    }
}

fn check_hom(l: &FinLattice, host: &Poset, f: &[ElemSet]) -> Option<(usize, usize)> {
    (0..l.len())
        .flat_map(|x| (0..l.len()).map(move |y| (x, y)))
        .find(|&(x, y)| {
            f[l.meet(x, y)] != f[x].intersection(f[y])
                || f[l.join(x, y)] != host.convex_closure(f[x].union(f[y]))
        })
}

/// Cuts `f : l -> Co(host)` down to a bounded number of minimal and maximal points.
///
/// `host` must have the shape `P(I,J)` and the range of `f` must lie in the
/// sublattice determined by the generator images.
pub fn truncate_hom(
    l: &FinLattice,
    gens: &[usize],
    host: &Poset,
    f: &[ElemSet],
) -> Result<Truncation> {
    if gens.len() < 2 {
        return Err(Error::TooFewGenerators(gens.len()));
    }
    if f.len() != l.len() {
        return Err(Error::BadArity(format!(
            "map has {} images for {} elements",
            f.len(),
            l.len()
        )));
    }
    let (i_set, p, j_set) = pij_parts(host).ok_or(Error::NotPij)?;
    if let Some(x) = f.iter().position(|&s| !host.is_convex(s)) {
        return Err(Error::NotAHomomorphism(
            l.label(x).to_string(),
            l.label(x).to_string(),
        ));
    }
    if let Some((x, y)) = check_hom(l, host, f) {
        return Err(Error::NotAHomomorphism(
            l.label(x).to_string(),
            l.label(y).to_string(),
        ));
    }
    let seeds: Vec<ElemSet> = gens.iter().map(|&g| f[g].without(p)).collect();
    let dd = close_under(&seeds, |a, b| a.union(b), |a, b| a.intersection(b), 1 << 20)?;
    let in_dd: HashSet<ElemSet> = dd.iter().copied().collect();
    for (x, &s) in f.iter().enumerate() {
        let rest = s.without(p);
        let ok = in_dd.contains(&rest)
            && (s.contains(p) || rest.is_subset(i_set) || rest.is_subset(j_set));
        if !ok {
            return Err(Error::OutsideGeneratedRange(l.label(x).to_string()));
        }
    }

    let zero = dd.iter().fold(host.all(), |acc, &s| acc.intersection(s));
    let mut k = ElemSet::EMPTY;
    for &a in &dd {
        let below = dd
            .iter()
            .filter(|&&x| x != a && x.is_subset(a))
            .fold(ElemSet::EMPTY, |acc, &x| acc.union(x));
        if a == zero || below == a {
            continue;
        }
        let dagger = dd
            .iter()
            .filter(|&&x| !a.is_subset(x))
            .fold(ElemSet::EMPTY, |acc, &x| acc.union(x));
        k.insert(
            a.difference(dagger)
                .first()
                .expect("join-irreducibles are join-prime"),
        );
    }
    if let Some(z) = zero.first() {
        k.insert(z);
    }

    let keep = k.with(p);
    let (target, kept) = host.induced(keep);
    let map: Vec<ElemSet> = f
        .iter()
        .map(|&s| Poset::restrict_to(s.intersection(keep), &kept))
        .collect();
    let homomorphism =
        map.iter().all(|&s| target.is_convex(s)) && check_hom(l, &target, &map).is_none();
    let kernel_preserved =
        (0..l.len()).all(|x| (0..l.len()).all(|y| (f[x] == f[y]) == (map[x] == map[y])));
    let separating = dd.iter().all(|&x| {
        (x.is_empty() || !x.intersection(k).is_empty())
            && dd
                .iter()
                .all(|&y| x.is_subset(y) || !x.intersection(k).is_subset(y.intersection(k)))
    });
    Ok(Truncation {
        host: host.clone(),
        i_kept: k.intersection(i_set),
        j_kept: k.intersection(j_set),
        target,
        kept,
        map,
        homomorphism,
        kernel_preserved,
        separating,
    })
}

#[derive(Clone, Debug)]
pub struct CanonicalFactor {
    /// The D-closed subset of `gamma` the factor collapses.
    pub removed: ElemSet,
    pub class: P2Class,
    pub poset: Poset,
    pub map: Vec<ElemSet>,
    /// `|I'| + |J'|`, zero for the one-element poset.
    pub size: usize,
}

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub gamma: GammaEmbedding,
    pub factors: Vec<CanonicalFactor>,
    /// `2^m - 1` for `m` generators.
    pub bound: usize,
    pub within_bound: bool,
    pub diagonal_injective: bool,
}

/// Embeds `l` into a product of lattices `Co(P(I',J'))` with `|I'| + |J'| <= 2^m - 1`.
pub fn sub2_canonical_form(l: &FinLattice, gens: &[usize]) -> Result<CanonicalForm> {
    let m = gens.len();
    if m < 2 {
        return Err(Error::TooFewGenerators(m));
    }
    let gamma = gamma_embedding(l)?;
    let bound = (1usize << m.min(63)) - 1;
    let mut factors = Vec::new();
    if !gamma.gamma.is_empty() {
        let dec = subdirect_decomposition(&gamma.gamma)?;
        for fa in dec.factors {
            let image: Vec<ElemSet> = gamma.phi.iter().map(|&s| fa.quotient.apply(s)).collect();
            let class = classify_p2(&fa.poset);
            let factor = match class {
                P2Class::Singleton => CanonicalFactor {
                    removed: fa.u.members,
                    class,
                    poset: fa.poset,
                    map: image,
                    size: 0,
                },
                P2Class::Pij(..) => {
                    let t = truncate_hom(l, gens, &fa.poset, &image)?;
                    if !t.homomorphism || !t.kernel_preserved {
                        return Err(Error::NotAHomomorphism(
                            "truncation".into(),
                            fa.poset.set_name(t.i_kept),
                        ));
                    }
                    CanonicalFactor {
                        removed: fa.u.members,
                        class: classify_p2(&t.target),
                        size: t.size(),
                        poset: t.target,
                        map: t.map,
                    }
                }
                P2Class::NotInP2 => return Err(Error::NotPij),
            };
            factors.push(factor);
        }
    }
    let mut seen = HashSet::new();
    let diagonal_injective =
        (0..l.len()).all(|x| seen.insert(factors.iter().map(|f| f.map[x]).collect::<Vec<_>>()));
    Ok(CanonicalForm {
        within_bound: factors.iter().all(|f| f.size <= bound),
        gamma,
        factors,
        bound,
        diagonal_injective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colattice::co_lattice;
    use crate::lattice::tests::{boolean, pentagon};
    use crate::lattice::{
        from_colattice, lattice_from_join_presentation, lattice_of_sets, Presentation,
    };
    use crate::poset::{antichain, chain, pij};

    fn co(p: &Poset) -> FinLattice {
        from_colattice(&co_lattice(p).unwrap())
    }

    fn opts(method: Method) -> DecideOptions {
        DecideOptions {
            method,
            ..DecideOptions::default()
        }
    }

    pub(crate) fn example_lattice() -> FinLattice {
        let pres = Presentation::new(
            &["a'", "a", "b", "c", "u", "v"],
            &[
                ("a'", &["a"][..]),
                ("a", &["b", "c"][..]),
                ("b", &["u", "v"][..]),
                ("b", &["a'", "u"][..]),
                ("a", &["u", "c"][..]),
            ],
        )
        .unwrap();
        lattice_from_join_presentation(&pres).unwrap()
    }

    #[test]
    fn chains_in_subn() {
        for m in 1..=4 {
            let l = co(&chain(m).unwrap());
            for n in 1..=3 {
                let s = decide_subn(&l, n, &opts(Method::Structural)).unwrap();
                assert_eq!(s.member, m <= n + 1, "m={m} n={n}");
                assert!(s.revalidate().unwrap());
                // H(2,2) has nine variables; keep the naive run small.
                if m <= 3 || n <= 2 {
                    let v = decide_subn(&l, n, &opts(Method::Naive)).unwrap();
                    assert_eq!(v.member, s.member, "m={m} n={n}");
                    assert!(v.revalidate().unwrap());
                }
            }
        }
    }

    #[test]
    fn sub_on_small_lattices() {
        assert!(decide_sub(&boolean(3), DEFAULT_BUDGET).unwrap().member);
        for p in [chain(3).unwrap(), pij(1, 2).unwrap(), antichain(3).unwrap()] {
            assert!(decide_sub(&co(&p), DEFAULT_BUDGET).unwrap().member);
        }
        let r = decide_sub(&pentagon(), DEFAULT_BUDGET).unwrap();
        assert!(r.revalidate_on(&pentagon()).unwrap());
    }

    #[test]
    fn sub2_examples() {
        let r = decide_sub2(&co(&chain(3).unwrap()), &opts(Method::Structural)).unwrap();
        assert!(r.member);
        let l = co(&chain(4).unwrap());
        let r = decide_sub2(&l, &opts(Method::Structural)).unwrap();
        assert!(!r.member);
        assert!(matches!(r.witness, Some(Witness::DChain { .. })));
        assert!(r.revalidate().unwrap());
        assert!(!decide_sub2(&l, &opts(Method::Naive)).unwrap().member);
    }

    #[test]
    fn sub2_methods_agree() {
        let mut lattices = vec![pentagon(), boolean(2), boolean(3)];
        for p in crate::poset::enumerate::posets_up_to(3) {
            lattices.push(co(&p));
        }
        for l in &lattices {
            let s = decide_sub2(l, &opts(Method::Structural)).unwrap();
            let v = decide_sub2(l, &opts(Method::Naive)).unwrap();
            assert_eq!(s.member, v.member, "{}", l.to_text());
        }
    }

    #[test]
    fn example_lattice_levels() {
        let l = example_lattice();
        assert_eq!(l.join_irreducibles().len(), 6);
        let s3 = decide_subn(&l, 3, &opts(Method::Structural)).unwrap();
        let s2 = decide_sub2(&l, &opts(Method::Structural)).unwrap();
        assert!(s3.member);
        assert!(!s2.member);
        assert!(s2.revalidate().unwrap());
        assert!(
            !decide_subn(&l, 2, &opts(Method::Structural))
                .unwrap()
                .member
        );
    }

    #[test]
    fn distributive_is_sub1() {
        assert!(
            decide_subn(&boolean(2), 1, &opts(Method::Structural))
                .unwrap()
                .member
        );
        let r = decide_subn(&pentagon(), 1, &opts(Method::Naive)).unwrap();
        assert!(!r.member && r.revalidate().unwrap());
    }

    #[test]
    fn gamma_of_small_lattices() {
        let g = gamma_embedding(&co(&pij(1, 1).unwrap())).unwrap();
        assert!(g.gamma.is_isomorphic(&chain(3).unwrap()));
        assert!(g.flags.is_embedding && g.flags.bounds_preserved);

        let b = boolean(2);
        let g = gamma_embedding(&b).unwrap();
        assert!(g.gamma.is_isomorphic(&antichain(2).unwrap()));
        assert!(b.atoms().iter().all(|&a| g.phi[a].len() == 1));

        for (i, j) in [(2, 2), (1, 3), (3, 2)] {
            let p = pij(i, j).unwrap();
            let g = gamma_embedding(&co(&p)).unwrap();
            assert!(g.gamma.is_isomorphic(&p));
            let f = g.flags;
            assert!(f.is_embedding && f.bounds_preserved && f.length_le_2 && f.tree_like);
            assert_eq!(f.atom_preserving, Some(true));
        }
    }

    #[test]
    fn gamma_rejects_non_members() {
        let err = gamma_embedding(&co(&chain(4).unwrap())).unwrap_err();
        assert!(matches!(err, Error::NotInSub2(_)));
    }

    #[test]
    fn truncation_of_identity_map() {
        let p = pij(1, 1).unwrap();
        let c = co_lattice(&p).unwrap();
        let l = from_colattice(&c);
        let f: Vec<ElemSet> = c.sets().to_vec();
        let gens = [l.element("{i0,p}").unwrap(), l.element("{p,j0}").unwrap()];
        let t = truncate_hom(&l, &gens, &p, &f).unwrap();
        assert_eq!(t.i_kept, p.set_of(&["i0"]).unwrap());
        assert_eq!(t.j_kept, p.set_of(&["j0"]).unwrap());
        assert!(t.homomorphism && t.kernel_preserved && t.separating);
    }

    #[test]
    fn truncation_of_square_into_p55() {
        let host = pij(5, 5).unwrap();
        let (i_set, _, j_set) = pij_parts(&host).unwrap();
        let b = boolean(2);
        let atoms = b.atoms();
        let mut f = vec![ElemSet::EMPTY; 4];
        f[atoms[0]] = i_set;
        f[atoms[1]] = j_set;
        f[b.top()] = host.all();
        let t = truncate_hom(&b, &atoms, &host, &f).unwrap();
        assert!(t.size() <= 3);
        assert!(t.homomorphism && t.kernel_preserved && t.separating);
    }

    #[test]
    fn truncation_errors() {
        let host = pij(1, 1).unwrap();
        let b = boolean(2);
        assert_eq!(
            truncate_hom(&b, &[1], &host, &[]).unwrap_err(),
            Error::TooFewGenerators(1)
        );
        let bad = vec![ElemSet::EMPTY, host.all(), host.all(), ElemSet::EMPTY];
        assert!(matches!(
            truncate_hom(&b, &[1, 2], &host, &bad),
            Err(Error::NotAHomomorphism(..))
        ));
        let l = co(&chain(3).unwrap());
        assert_eq!(
            truncate_hom(&l, &[1, 2], &chain(3).unwrap(), &[]).unwrap_err(),
            Error::BadArity("map has 0 images for 7 elements".into())
        );
    }

    #[test]
    fn canonical_forms() {
        let b = boolean(2);
        let cf = sub2_canonical_form(&b, &b.atoms()).unwrap();
        assert_eq!(cf.bound, 3);
        assert!(cf.within_bound && cf.diagonal_injective);

        let p = chain(3).unwrap();
        let l = co(&p);
        let gens: Vec<usize> = ["{c0}", "{c1}", "{c2}"]
            .iter()
            .map(|s| l.element(s).unwrap())
            .collect();
        let cf = sub2_canonical_form(&l, &gens).unwrap();
        assert!(cf.within_bound && cf.diagonal_injective);

        let p = pij(2, 2).unwrap();
        let l = co(&p);
        let gens: Vec<usize> = ["{i0,p}", "{i1,p}", "{p,j0}", "{p,j1}"]
            .iter()
            .map(|s| l.element(s).unwrap())
            .collect();
        let cf = sub2_canonical_form(&l, &gens).unwrap();
        assert_eq!(cf.bound, 15);
        assert!(cf.within_bound && cf.diagonal_injective);
    }

    #[test]
    fn generated_sublattice_of_sets() {
        let host = pij(2, 2).unwrap();
        let seeds = [
            host.set_of(&["i0", "p"]).unwrap(),
            host.set_of(&["j1"]).unwrap(),
        ];
        let sets = crate::colattice::CoLattice::generated(&host, &seeds, 1000).unwrap();
        let l = lattice_of_sets(&host, &sets).unwrap();
        assert_eq!(l.len(), sets.len());
        assert_eq!(l.label(l.bottom()), "{}");
    }
}
