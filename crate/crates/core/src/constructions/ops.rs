use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::{ResidueSequence, SequenceSet};

/// `(a_0, b_0, a_1, b_1, …)`
pub fn interleave(a: &ResidueSequence, b: &ResidueSequence) -> Result<ResidueSequence> {
    a.ensure_alphabet(b)?;
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "interleaving lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    let elems = a.as_slice().iter().zip(b.as_slice()).flat_map(|(&x, &y)| [x, y]).collect();
    Ok(ResidueSequence::from_raw(a.alphabet(), elems))
}

/// `a | b`
pub fn concat(a: &ResidueSequence, b: &ResidueSequence) -> Result<ResidueSequence> {
    a.ensure_alphabet(b)?;
    let mut elems = Vec::with_capacity(a.len() + b.len());
    elems.extend_from_slice(a.as_slice());
    elems.extend_from_slice(b.as_slice());
    Ok(ResidueSequence::from_raw(a.alphabet(), elems))
}

/// `(a ⊕ d_0) | (b ⊕ d_1) | (a ⊕ d_2) | …`, one block per entry of `d`.
/// Blocks alternate strictly, so an odd-length `d` ends on an `a` block.
pub fn phi(d: &ResidueSequence, a: &ResidueSequence, b: &ResidueSequence) -> Result<ResidueSequence> {
    d.ensure_alphabet(a)?;
    a.ensure_alphabet(b)?;
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "phi blocks of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    let alphabet = a.alphabet();
    let mut elems = Vec::with_capacity(d.len() * a.len());
    for (i, &di) in d.as_slice().iter().enumerate() {
        let block = if i % 2 == 0 { a } else { b };
        elems.extend(block.as_slice().iter().map(|&e| alphabet.add(e, di)));
    }
    Ok(ResidueSequence::from_raw(alphabet, elems))
}

/// Every entry `e ↦ (q - e) mod q`.
pub fn negate_set(b: &SequenceSet) -> SequenceSet {
    b.map_rows(ResidueSequence::negated)
}

/// Every entry `e ↦ e + q/2`, i.e. every complex symbol multiplied by `-1`.
pub fn half_turn_set(b: &SequenceSet) -> Result<SequenceSet> {
    let q = b.q();
    if !q.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "half-turn negation needs an even alphabet, q = {q}"
        )));
    }
    Ok(b.map_rows(|r| r.offset(q / 2)))
}

/// How the lower block `-B` of a length-sum MOCSS is formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Negation {
    /// Additive inverse of each residue modulo `q` (identity when `q = 2`).
    AdditiveInverse,
    /// Negation of the complex symbol, `e ↦ e + q/2`; `b ⊕ 1` when `q = 2`.
    #[default]
    HalfTurn,
}

impl Negation {
    pub fn apply(self, b: &SequenceSet) -> Result<SequenceSet> {
        match self {
            Negation::AdditiveInverse => Ok(negate_set(b)),
            Negation::HalfTurn => half_turn_set(b),
        }
    }
}

impl FromStr for Negation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "additive-inverse" | "literal" => Ok(Negation::AdditiveInverse),
            "half-turn" | "phase" => Ok(Negation::HalfTurn),
            other => Err(Error::Unsupported(format!(
                "negation {other:?} (expected additive-inverse|half-turn)"
            ))),
        }
    }
}

impl fmt::Display for Negation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Negation::AdditiveInverse => "additive-inverse",
            Negation::HalfTurn => "half-turn",
        })
    }
}
