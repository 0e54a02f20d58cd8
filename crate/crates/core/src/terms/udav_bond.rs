use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::FinLattice;

/// The split of the D-successors of `p` into two sides such that
/// `p <= x v y` exactly for `x`, `y` on opposite sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UdavBondPartition {
    pub p: usize,
    /// The side holding the least element index.
    pub a_side: Vec<usize>,
    pub b_side: Vec<usize>,
}

impl UdavBondPartition {
    pub fn validate(&self, l: &FinLattice) -> bool {
        let mut rd: Vec<usize> = self.a_side.iter().chain(&self.b_side).copied().collect();
        rd.sort_unstable();
        let expected: Vec<usize> = l
            .join_irreducibles()
            .into_iter()
            .filter(|&x| l.d_related(self.p, x))
            .collect();
        let disjoint = self.a_side.iter().all(|x| !self.b_side.contains(x));
        disjoint
            && rd == expected
            && rd.iter().all(|&x| {
                rd.iter().all(|&y| {
                    let across = self.a_side.contains(&x) != self.a_side.contains(&y);
                    l.leq(self.p, l.join(x, y)) == across
                })
            })
    }
}

pub fn udav_bond_partition(l: &FinLattice, p: usize) -> Result<UdavBondPartition> {
    if p >= l.len() || !l.is_join_irreducible(p) {
        return Err(Error::NoPartition(
            l.labels().get(p).cloned().unwrap_or_else(|| p.to_string()),
        ));
    }
    let rd: Vec<usize> = l
        .join_irreducibles()
        .into_iter()
        .filter(|&x| l.d_related(p, x))
        .collect();
    let edge = |x: usize, y: usize| l.leq(p, l.join(x, y));
    // In a complete bipartite graph the side opposite a vertex is its neighbourhood.
    let (a_side, b_side): (Vec<usize>, Vec<usize>) = match rd.first() {
        None => (Vec::new(), Vec::new()),
        Some(&u) => rd.iter().partition(|&&y| !edge(u, y)),
    };
    let part = UdavBondPartition { p, a_side, b_side };
    if part.validate(l) {
        Ok(part)
    } else {
        Err(Error::NoPartition(l.label(p).to_string()))
    }
}
