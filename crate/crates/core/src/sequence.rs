//! Residue sequences over `Z_q` and the matrix / family containers built from them.
//!
//! Every symbol is stored as its canonical representative in `0..q`. Values are
//! immutable once constructed; all operators return new values.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported alphabet size.
pub const MAX_Q: u32 = 1 << 16;

/// The additive group `Z_q`. The `q`-th root of unity is never materialized;
/// residues index the basis of [`CyclotomicSum`](crate::CyclotomicSum).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u32);

impl Alphabet {
    pub fn new(q: u64) -> Result<Self> {
        if !(2..=MAX_Q as u64).contains(&q) {
            return Err(Error::InvalidAlphabet(q));
        }
        Ok(Alphabet(q as u32))
    }

    #[inline]
    pub fn q(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        (self.0 - a % self.0) % self.0
    }

    /// Reduce an arbitrary integer to its canonical residue.
    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    pub fn contains(self, e: u64) -> bool {
        e < self.0 as u64
    }

    fn ensure_same(self, other: Alphabet) -> Result<()> {
        if self != other {
            return Err(Error::AlphabetMismatch { left: self.0, right: other.0 });
        }
        Ok(())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.0)
    }
}

/// A length-`L` sequence of residues modulo `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueSequence {
    alphabet: Alphabet,
    elems: Vec<u32>,
}

impl ResidueSequence {
    pub fn new(alphabet: Alphabet, elems: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = elems.iter().find(|&&e| !alphabet.contains(e as u64)) {
            return Err(Error::ResidueOutOfRange { value: bad as u64, q: alphabet.q() });
        }
        Ok(ResidueSequence { alphabet, elems })
    }

    /// Build from arbitrary integers, reducing each into `0..q`.
    pub fn from_integers(alphabet: Alphabet, values: impl IntoIterator<Item = i64>) -> Self {
        let elems = values.into_iter().map(|v| alphabet.reduce(v)).collect();
        ResidueSequence { alphabet, elems }
    }

    pub(crate) fn from_raw(alphabet: Alphabet, elems: Vec<u32>) -> Self {
        debug_assert!(elems.iter().all(|&e| e < alphabet.q()));
        ResidueSequence { alphabet, elems }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        ResidueSequence { alphabet, elems: Vec::new() }
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.alphabet.q()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[u32] {
        &self.elems
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.elems
    }

    /// `a ⊕ d`: add `d` to every symbol modulo `q`.
    pub fn offset(&self, d: u32) -> ResidueSequence {
        let a = self.alphabet;
        ResidueSequence::from_raw(a, self.elems.iter().map(|&e| a.add(e, d)).collect())
    }

    /// Additive inverse of every symbol modulo `q`.
    pub fn negated(&self) -> ResidueSequence {
        let a = self.alphabet;
        ResidueSequence::from_raw(a, self.elems.iter().map(|&e| a.neg(e)).collect())
    }

    pub fn reversed(&self) -> ResidueSequence {
        let mut elems = self.elems.clone();
        elems.reverse();
        ResidueSequence::from_raw(self.alphabet, elems)
    }

    pub(crate) fn ensure_alphabet(&self, other: &ResidueSequence) -> Result<()> {
        self.alphabet.ensure_same(other.alphabet)
    }
}

impl fmt::Display for ResidueSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// An `N x L` matrix of residues: `N` rows sharing length and alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceSet {
    alphabet: Alphabet,
    rows: Vec<ResidueSequence>,
}

impl SequenceSet {
    pub fn new(rows: Vec<ResidueSequence>) -> Result<Self> {
        let first = rows.first().ok_or(Error::Empty("sequence set"))?;
        let (alphabet, len) = (first.alphabet(), first.len());
        if len == 0 {
            return Err(Error::Empty("sequence"));
        }
        for (n, row) in rows.iter().enumerate() {
            first.ensure_alphabet(row)?;
            if row.len() != len {
                return Err(Error::DimensionMismatch(format!(
                    "row {n} has length {} but row 0 has length {len}",
                    row.len()
                )));
            }
        }
        Ok(SequenceSet { alphabet, rows })
    }

    /// Build from plain nested vectors; every value must already be in `0..q`.
    pub fn from_rows(alphabet: Alphabet, rows: Vec<Vec<u32>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .map(|r| ResidueSequence::new(alphabet, r))
            .collect::<Result<Vec<_>>>()?;
        SequenceSet::new(rows)
    }

    #[inline]
    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.alphabet.q()
    }

    /// Flock size `N`.
    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Sequence length `L`.
    #[inline]
    pub fn len(&self) -> usize {
        self.rows[0].len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn rows(&self) -> &[ResidueSequence] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &ResidueSequence {
        &self.rows[n]
    }

    pub fn to_vecs(&self) -> Vec<Vec<u32>> {
        self.rows.iter().map(|r| r.as_slice().to_vec()).collect()
    }

    pub fn map_rows(&self, f: impl Fn(&ResidueSequence) -> ResidueSequence) -> SequenceSet {
        SequenceSet::new(self.rows.iter().map(f).collect())
            .expect("row map preserves shape")
    }

    pub(crate) fn same_shape(&self, other: &SequenceSet) -> Result<()> {
        self.alphabet.ensure_same(other.alphabet)?;
        if self.n() != other.n() || self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} set vs {}x{} set",
                self.n(),
                self.len(),
                other.n(),
                other.len()
            )));
        }
        Ok(())
    }
}

/// An ordered family of `M` sequence sets sharing `N`, `L` and `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    sets: Vec<SequenceSet>,
}

impl SetFamily {
    pub fn new(sets: Vec<SequenceSet>) -> Result<Self> {
        let first = sets.first().ok_or(Error::Empty("set family"))?;
        for (m, set) in sets.iter().enumerate().skip(1) {
            first.same_shape(set).map_err(|e| match e {
                Error::DimensionMismatch(msg) => {
                    Error::DimensionMismatch(format!("set {m}: {msg}"))
                }
                other => other,
            })?;
        }
        Ok(SetFamily { sets })
    }

    pub fn from_nested(alphabet: Alphabet, sets: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let sets = sets
            .into_iter()
            .map(|rows| SequenceSet::from_rows(alphabet, rows))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(sets)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.sets[0].alphabet()
    }

    pub fn q(&self) -> u32 {
        self.alphabet().q()
    }

    /// Set size `M`.
    pub fn m(&self) -> usize {
        self.sets.len()
    }

    /// Flock size `N`.
    pub fn n(&self) -> usize {
        self.sets[0].n()
    }

    /// Sequence length `L`.
    pub fn len(&self) -> usize {
        self.sets[0].len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sets(&self) -> &[SequenceSet] {
        &self.sets
    }

    pub fn set(&self, m: usize) -> &SequenceSet {
        &self.sets[m]
    }

    pub fn into_sets(self) -> Vec<SequenceSet> {
        self.sets
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<u32>>> {
        self.sets.iter().map(SequenceSet::to_vecs).collect()
    }
}
