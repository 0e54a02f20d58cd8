use proptest::prelude::*;
use proptest::test_runner::RngSeed;

use convexica::colattice::{co_lattice, quotient, CoLattice};
use convexica::lattice::{from_colattice, lattice_of_sets, FinLattice};
use convexica::poset::{d_closure, pij, Poset};
use convexica::terms::{
    build_identity, check_identity_with, CheckOptions, IdentityKind, DEFAULT_BUDGET,
};
use convexica::variety::{
    decide_sub2, decide_subn, gamma_embedding_with, truncate_hom, DecideOptions, Method,
    Preconditions,
};
use convexica::ElemSet;

/// Fixed seed unless `PROPTEST_RNG_SEED` is set.
fn config() -> ProptestConfig {
    let mut config = ProptestConfig::with_cases(48);
    if config.rng_seed == RngSeed::Random {
        config.rng_seed = RngSeed::Fixed(0x5eed);
    }
    config
}

fn poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, bits)| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .zip(bits)
                .filter_map(|(pair, on)| on.then_some(pair))
                .collect();
            Poset::from_index_covers((0..n).map(|i| format!("x{i}")).collect(), &pairs).unwrap()
        })
}

fn co(p: &Poset) -> FinLattice {
    from_colattice(&co_lattice(p).unwrap())
}

fn opts(method: Method, preconditions: Preconditions) -> DecideOptions {
    DecideOptions {
        method,
        preconditions,
        budget: DEFAULT_BUDGET,
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn convex_closure_is_a_closure(p in poset(8), a in any::<u64>(), b in any::<u64>()) {
        let x = ElemSet(a).intersection(p.all());
        let y = x.union(ElemSet(b).intersection(p.all()));
        let cx = p.convex_closure(x);
        prop_assert!(x.is_subset(cx));
        prop_assert!(p.is_convex(cx));
        prop_assert_eq!(p.convex_closure(cx), cx);
        prop_assert!(cx.is_subset(p.convex_closure(y)));
    }

    #[test]
    fn poset_text_round_trips(p in poset(8)) {
        let q = Poset::parse(&p.to_text()).unwrap();
        prop_assert_eq!(q.labels(), p.labels());
        prop_assert!(q.is_isomorphic(&p));
        for x in 0..p.len() {
            prop_assert_eq!(q.up_set(x), p.up_set(x));
        }
    }

    #[test]
    fn co_lattice_obeys_lattice_laws(p in poset(5)) {
        let c = co_lattice(&p).unwrap();
        let n = c.len();
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (c.set(i), c.set(j));
                prop_assert_eq!(c.meet(x, y), x.intersection(y));
                prop_assert_eq!(c.join(x, y), p.convex_closure(x.union(y)));
                prop_assert_eq!(c.join_idx(i, j), c.join_idx(j, i));
                prop_assert_eq!(c.meet_idx(i, c.join_idx(i, j)), i);
                prop_assert_eq!(c.join_idx(i, c.meet_idx(i, j)), i);
            }
        }
        let l = from_colattice(&c);
        prop_assert_eq!(l.len(), n);
        prop_assert_eq!(l.join_irreducibles().len(), p.len());
    }

    #[test]
    fn quotients_by_d_closed_sets_are_homomorphisms(p in poset(6), seed in any::<u64>()) {
        let c = co_lattice(&p).unwrap();
        let u = d_closure(&p, ElemSet(seed).intersection(p.all()));
        let q = quotient(&c, u).unwrap();
        prop_assert!(q.check.homomorphism && q.check.surjective && q.check.kernel_matches);
    }

    #[test]
    fn membership_matches_length_and_grows_with_n(p in poset(6)) {
        let l = co(&p);
        let len = p.length().unwrap();
        let mut prev = false;
        for n in 1..=4 {
            let member = decide_subn(&l, n, &opts(Method::Structural, Preconditions::Assume)).unwrap().member;
            prop_assert_eq!(member, len <= n);
            prop_assert!(!prev || member);
            prev = member;
        }
    }

    #[test]
    fn sub2_methods_agree(p in poset(4)) {
        let l = co(&p);
        let naive = decide_sub2(&l, &opts(Method::Naive, Preconditions::Verify)).unwrap();
        let structural = decide_sub2(&l, &opts(Method::Structural, Preconditions::Verify)).unwrap();
        prop_assert_eq!(naive.member, structural.member);
        prop_assert!(naive.revalidate().unwrap());
        prop_assert!(structural.revalidate().unwrap());
    }

    #[test]
    fn pruned_checker_agrees_with_exhaustive(p in poset(4), which in 0usize..6) {
        let kind = [IdentityKind::S, IdentityKind::U, IdentityKind::B, IdentityKind::L2, IdentityKind::D2D, IdentityKind::H(1)][which];
        let id = build_identity(kind).unwrap();
        let l = co(&p);
        let pruned = check_identity_with(&l, &id, &CheckOptions { budget: DEFAULT_BUDGET, prune: true }).unwrap();
        let full = check_identity_with(&l, &id, &CheckOptions { budget: DEFAULT_BUDGET, prune: false }).unwrap();
        prop_assert_eq!(pruned.holds, full.holds);
        for w in pruned.witness.iter().chain(full.witness.iter()) {
            prop_assert!(w.replay(&l, &id).unwrap());
        }
    }

    #[test]
    fn embedding_preserves_meets_and_joins(p in poset(5)) {
        prop_assume!(p.length().unwrap() <= 2);
        let l = co(&p);
        let g = gamma_embedding_with(&l, Preconditions::Assume).unwrap();
        prop_assert_eq!(g.phi[l.bottom()], ElemSet::EMPTY);
        prop_assert_eq!(g.phi[l.top()], g.gamma.all());
        for x in 0..l.len() {
            for y in 0..l.len() {
                prop_assert_eq!(g.phi[l.meet(x, y)], g.phi[x].intersection(g.phi[y]));
                prop_assert_eq!(g.phi[l.join(x, y)], g.gamma.convex_closure(g.phi[x].union(g.phi[y])));
                prop_assert_eq!(x == y, g.phi[x] == g.phi[y]);
            }
        }
    }

    #[test]
    fn truncation_keeps_kernel_and_separates(i in 1usize..=4, j in 1usize..=4, a in any::<u64>(), b in any::<u64>()) {
        let host = pij(i, j).unwrap();
        let c = co_lattice(&host).unwrap();
        let g0 = c.set(a as usize % c.len());
        let g1 = c.set(b as usize % c.len());
        prop_assume!(g0 != g1);
        let sets = CoLattice::generated(&host, &[g0, g1], 4096).unwrap();
        let l = lattice_of_sets(&host, &sets).unwrap();
        let f: Vec<ElemSet> = l
            .labels()
            .iter()
            .map(|name| *sets.iter().find(|&&s| host.set_name(s) == *name).unwrap())
            .collect();
        let gens = [l.element(&host.set_name(g0)).unwrap(), l.element(&host.set_name(g1)).unwrap()];
        let t = truncate_hom(&l, &gens, &host, &f).unwrap();
        prop_assert!(t.size() <= 3);
        prop_assert!(t.homomorphism && t.kernel_preserved && t.separating);
    }
}
