use std::fmt;

use serde::{Deserialize, Serialize};

/// Maximum number of poset elements (and presentation generators) a set can address.
pub const MAX_ELEMENTS: usize = 64;

/// A set of element indices, stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn full(n: usize) -> ElemSet {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> ElemSet {
        ElemSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> ElemSet {
        it.into_iter().fold(ElemSet::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> ElemSet {
        ElemSet(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> ElemSet {
        ElemSet(self.0 & !(1u64 << i))
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[inline]
    pub fn union(self, o: ElemSet) -> ElemSet {
        ElemSet(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: ElemSet) -> ElemSet {
        ElemSet(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: ElemSet) -> ElemSet {
        ElemSet(self.0 & !o.0)
    }

    #[inline]
    pub fn is_subset(self, o: ElemSet) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElemSet::from_indices(iter)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
