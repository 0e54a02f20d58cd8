use std::collections::HashSet;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Closes `seeds` under two binary operations, in discovery order.
///
/// Fails with [`Error::CapExceeded`] once more than `cap` elements exist.
pub fn close_under<T, J, M>(seeds: &[T], join: J, meet: M, cap: usize) -> Result<Vec<T>>
where
    T: Copy + Eq + Hash,
    J: Fn(T, T) -> T,
    M: Fn(T, T) -> T,
{
    let mut elems: Vec<T> = Vec::new();
    let mut seen: HashSet<T> = HashSet::new();
    for &s in seeds {
        if seen.insert(s) {
            elems.push(s);
        }
    }
    let mut i = 0;
    while i < elems.len() {
        for j in 0..=i {
            let (a, b) = (elems[i], elems[j]);
            for c in [join(a, b), meet(a, b)] {
                if seen.insert(c) {
                    elems.push(c);
                    if elems.len() > cap {
                        return Err(Error::CapExceeded {
                            cap,
                            partial: elems.len(),
                        });
                    }
                }
            }
        }
        i += 1;
    }
    Ok(elems)
}
