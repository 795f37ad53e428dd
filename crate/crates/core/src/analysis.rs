//! Family-size bounds and the set of lengths reachable by the length-sum MOCSS.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::seeds::ccc_lengths;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundVerdict {
    pub m: usize,
    pub n: usize,
    pub l: usize,
    pub z: usize,
    /// `N·⌊L/Z⌋`
    pub feng_rhs: usize,
    /// `M <= N`
    pub suehiro_ok: bool,
    /// `M == N·⌊L/Z⌋`
    pub feng_optimal: bool,
}

impl BoundVerdict {
    pub fn feng_ok(&self) -> bool {
        self.m <= self.feng_rhs
    }
}

pub fn feng_bound(m: usize, n: usize, l: usize, z: usize) -> Result<BoundVerdict> {
    if z == 0 {
        return Err(Error::Precondition("zone width Z must be at least 1".into()));
    }
    let feng_rhs = n * (l / z);
    Ok(BoundVerdict { m, n, l, z, feng_rhs, suehiro_ok: m <= n, feng_optimal: m == feng_rhs })
}

/// `length = l1 + l2` with binary `(2, l1)`- and `(2, l2)`-CCCs in the seed catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LengthWitness {
    pub length: usize,
    pub l1: usize,
    pub l2: usize,
}

/// All `l1 + l2 <= max_len` over catalog CCC lengths, one witness per length
/// (the one with the smallest `l1`), ascending.
pub fn enumerate_theorem5_lengths(max_len: usize) -> Result<Vec<LengthWitness>> {
    if max_len < 2 {
        return Err(Error::Precondition(format!("max_len must be at least 2, got {max_len}")));
    }
    let parts = ccc_lengths(max_len - 1);
    let mut found: BTreeMap<usize, LengthWitness> = BTreeMap::new();
    for (i, &l1) in parts.iter().enumerate() {
        for &l2 in &parts[i..] {
            let length = l1 + l2;
            if length <= max_len {
                found.entry(length).or_insert(LengthWitness { length, l1, l2 });
            }
        }
    }
    Ok(found.into_values().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthComparison {
    /// In both lists, with a witness.
    pub reproduced: Vec<LengthWitness>,
    /// Listed in the reference but not reachable from the catalog.
    pub unverified_here: Vec<usize>,
    /// Reachable here but absent from the reference.
    pub additional: Vec<LengthWitness>,
}

impl LengthComparison {
    pub fn is_exact(&self) -> bool {
        self.unverified_here.is_empty() && self.additional.is_empty()
    }
}

pub fn compare_lengths(found: &[LengthWitness], reference: &[usize]) -> LengthComparison {
    let reference: BTreeSet<usize> = reference.iter().copied().collect();
    let reached: BTreeSet<usize> = found.iter().map(|w| w.length).collect();
    let (reproduced, additional) = found.iter().partition(|w| reference.contains(&w.length));
    LengthComparison {
        reproduced,
        unverified_here: reference.difference(&reached).copied().collect(),
        additional,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::BINARY_MOCSS_LENGTHS;

    #[test]
    fn feng_examples() {
        let v = feng_bound(9, 3, 27, 9).unwrap();
        assert_eq!((v.feng_rhs, v.feng_optimal, v.suehiro_ok), (9, true, false));
        for (q, m, vv) in [(2usize, 2u32, 1u32), (3, 3, 1), (5, 3, 2), (4, 2, 0)] {
            let b = feng_bound(q.pow(vv + 1), q, q.pow(m), q.pow(m - vv)).unwrap();
            assert!(b.feng_optimal);
        }
        let v = feng_bound(2, 4, 11, 11).unwrap();
        assert_eq!((v.feng_rhs, v.suehiro_ok, v.feng_optimal), (4, true, false));
        assert!(feng_bound(1, 1, 1, 0).is_err());
    }

    #[test]
    fn smallest_enumeration() {
        assert_eq!(enumerate_theorem5_lengths(2).unwrap(), vec![LengthWitness { length: 2, l1: 1, l2: 1 }]);
        assert!(enumerate_theorem5_lengths(1).is_err());
    }

    #[test]
    fn published_list_comparison() {
        let found = enumerate_theorem5_lengths(40).unwrap();
        let at = |n| found.iter().find(|w| w.length == n).copied();
        assert_eq!(at(11), Some(LengthWitness { length: 11, l1: 1, l2: 10 }));
        assert_eq!(at(27), Some(LengthWitness { length: 27, l1: 1, l2: 26 }));
        let cmp = compare_lengths(&found, &BINARY_MOCSS_LENGTHS);
        assert_eq!(cmp.unverified_here, vec![7]);
        assert_eq!(cmp.additional.iter().map(|w| w.length).collect::<Vec<_>>(), vec![2, 30]);
        assert_eq!(cmp.reproduced.len(), 25);
    }
}
