use super::FinLattice;
use crate::error::{Error, Result};

/// Largest lattice on which congruences are computed.
pub const CONGRUENCE_BOUND: usize = 1 << 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiVerdict {
    pub holds: bool,
    /// A covering pair collapsed by every nonzero congruence.
    pub monolith_pair: Option<(usize, usize)>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.0[rx] = ry;
        true
    }
}

impl FinLattice {
    /// Block representative of each element under the least congruence collapsing `a` and `b`.
    pub fn principal_congruence(&self, a: usize, b: usize) -> Vec<usize> {
        let n = self.len();
        let mut dsu = Dsu((0..n).collect());
        let mut pending = Vec::new();
        if dsu.union(a, b) {
            pending.push((a, b));
        }
        // The pairs that caused a merge generate the equivalence, so closing
        // them under the translations x -> x v c and x -> x ^ c suffices.
        while let Some((x, y)) = pending.pop() {
            for c in 0..n {
                for (u, v) in [
                    (self.join(x, c), self.join(y, c)),
                    (self.meet(x, c), self.meet(y, c)),
                ] {
                    if dsu.union(u, v) {
                        pending.push((u, v));
                    }
                }
            }
        }
        (0..n).map(|x| dsu.find(x)).collect()
    }

    /// Whether the lattice has a least nonzero congruence.
    pub fn is_subdirectly_irreducible(&self) -> Result<SiVerdict> {
        if self.len() > CONGRUENCE_BOUND {
            return Err(Error::TooLarge {
                what: "lattice for congruence computation",
                size: self.len(),
                bound: CONGRUENCE_BOUND,
            });
        }
        // Every nonzero congruence contains the congruence of some covering pair.
        let pairs = self.covering_pairs();
        let cons: Vec<Vec<usize>> = pairs
            .iter()
            .map(|&(x, y)| self.principal_congruence(x, y))
            .collect();
        let monolith_pair = pairs
            .iter()
            .copied()
            .find(|&(c, d)| cons.iter().all(|con| con[c] == con[d]));
        Ok(SiVerdict {
            holds: monolith_pair.is_some(),
            monolith_pair,
        })
    }
}
