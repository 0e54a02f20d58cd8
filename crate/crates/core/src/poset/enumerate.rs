//! Exhaustive enumeration of small posets.
//!
//! Naturally labelled posets (every `x < y` has `x` declared before `y`) are
//! generated by adding one element at a time on top of an order ideal of the
//! previous ones. Isomorphism classes are then separated by a brute-force
//! canonical code, so this is only meant for desk-scale sizes.

use std::collections::HashSet;

use super::Poset;
use crate::bits::ElemSet;

/// Strict down-sets of every naturally labelled poset on `n` elements.
fn natural_down_sets(n: usize) -> Vec<Vec<ElemSet>> {
    let mut out: Vec<Vec<ElemSet>> = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for downs in &out {
            // Order ideals of the poset on 0..k, as strict down-sets of the new element.
            for mask in 0u64..1 << k {
                let ideal = ElemSet(mask);
                let closed = ideal.iter().all(|x| downs[x].is_subset(ideal));
                if closed {
                    let mut d = downs.clone();
                    d.push(ideal);
                    next.push(d);
                }
            }
        }
        out = next;
    }
    out
}

fn from_down_sets(downs: &[ElemSet]) -> Poset {
    let labels = (0..downs.len()).map(|i| format!("e{i}")).collect();
    let pairs: Vec<(usize, usize)> = downs
        .iter()
        .enumerate()
        .flat_map(|(y, d)| d.iter().map(move |x| (x, y)))
        .collect();
    Poset::from_index_covers(labels, &pairs).expect("ideal extension is a partial order")
}

/// Every naturally labelled poset on `n` elements (isomorphic copies included).
pub fn naturally_labelled(n: usize) -> Vec<Poset> {
    natural_down_sets(n)
        .iter()
        .map(|d| from_down_sets(d))
        .collect()
}

/// A code equal for two posets iff they are isomorphic.
pub fn canonical_code(p: &Poset) -> Vec<u64> {
    let n = p.len();
    let sig = |x: usize| (p.down_set(x).len(), p.up_set(x).len());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| sig(x));
    // Group boundaries by signature; only permutations inside a group are tried.
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || sig(order[i]) != sig(order[start]) {
            groups.push((start, i));
            start = i;
        }
    }
    let mut best: Option<Vec<u64>> = None;
    permute_groups(&mut order, &groups, 0, &mut |ord| {
        let code = encode(p, ord);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    });
    let mut code = best.unwrap_or_default();
    code.insert(0, n as u64);
    code
}

fn encode(p: &Poset, ord: &[usize]) -> Vec<u64> {
    let n = ord.len();
    let mut words = vec![0u64; (n * n).div_ceil(64).max(1)];
    for i in 0..n {
        for j in 0..n {
            if i != j && p.leq(ord[i], ord[j]) {
                let bit = i * n + j;
                words[bit / 64] |= 1 << (bit % 64);
            }
        }
    }
    words
}

fn permute_groups(
    order: &mut Vec<usize>,
    groups: &[(usize, usize)],
    g: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if g == groups.len() {
        visit(order);
        return;
    }
    let (lo, hi) = groups[g];
    permute_range(order, hi, lo, groups, g, visit);
}

fn permute_range(
    order: &mut Vec<usize>,
    hi: usize,
    k: usize,
    groups: &[(usize, usize)],
    g: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if k + 1 >= hi {
        permute_groups(order, groups, g + 1, visit);
        return;
    }
    for i in k..hi {
        order.swap(k, i);
        permute_range(order, hi, k + 1, groups, g, visit);
        order.swap(k, i);
    }
}

/// One representative per isomorphism class of posets on exactly `n` elements.
pub fn posets_up_to_iso(n: usize) -> Vec<Poset> {
    let mut seen = HashSet::new();
    naturally_labelled(n)
        .into_iter()
        .filter(|p| seen.insert(canonical_code(p)))
        .collect()
}

/// Representatives of all posets with `1..=max_n` elements.
pub fn posets_up_to(max_n: usize) -> Vec<Poset> {
    (1..=max_n).flat_map(posets_up_to_iso).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        // Unlabelled posets: 1, 2, 5, 16, 63.
        let counts: Vec<usize> = (1..=5).map(|n| posets_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 63]);
        // Naturally labelled posets: 1, 2, 7, 40.
        let nat: Vec<usize> = (1..=4).map(|n| naturally_labelled(n).len()).collect();
        assert_eq!(nat, vec![1, 2, 7, 40]);
    }

    #[test]
    fn canonical_code_agrees_with_isomorphism() {
        let all = naturally_labelled(4);
        for a in &all {
            for b in &all {
                assert_eq!(canonical_code(a) == canonical_code(b), a.is_isomorphic(b));
            }
        }
    }
}
