//! Generative constructions.
//!
//! * [`build_css_theorem1`]: `q`-ary CSS of length `q^m` from a quadratic-chain EBF.
//! * [`build_zccs_theorem2`]: optimal `(q^{v+1}, q, q^m, q^{m-v})`-ZCCS.
//! * [`interleave_escss_theorem3`]: interleaved even-shift sets from an `(M, L)`-CCC.
//! * [`mocss_lemma4`]: φ-concatenation MOCSS from two even-shift orthogonal sets and a CCC.
//! * [`ccc_theorem4`]: `(M1·M2/2, 2·L1·L2)`-CCC from two CCCs.
//! * [`mocss_theorem5`]: `(M, 2M, L1+L2)`-MOCSS by stacking `[A|B ; A|-B]`.
//!
//! Inputs that must be complete complementary codes are passed as
//! [`VerifiedCcc`] certificates. Outputs are re-checked according to a
//! [`VerifyPolicy`].

mod ccc;
mod mocss;
mod ops;
mod zccs;

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

pub use ccc::{ccc_theorem4, interleave_escss_theorem3, mocss_lemma4};
pub use mocss::mocss_theorem5;
pub use ops::{concat, half_turn_set, interleave, negate_set, phi, Negation};
pub use zccs::{build_css_theorem1, build_zccs_theorem2, Theorem2Params};

use crate::correlation::Classifier;
use crate::error::{Error, Result};
use crate::sequence::SetFamily;

/// When a constructor re-verifies its own output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VerifyPolicy {
    Always,
    /// Only in builds with debug assertions.
    #[default]
    Debug,
    Never,
}

impl VerifyPolicy {
    pub fn active(self) -> bool {
        match self {
            VerifyPolicy::Always => true,
            VerifyPolicy::Debug => cfg!(debug_assertions),
            VerifyPolicy::Never => false,
        }
    }
}

impl FromStr for VerifyPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "always" => Ok(VerifyPolicy::Always),
            "debug" => Ok(VerifyPolicy::Debug),
            "never" => Ok(VerifyPolicy::Never),
            other => Err(Error::Unsupported(format!(
                "verify policy {other:?} (expected always|debug|never)"
            ))),
        }
    }
}

impl fmt::Display for VerifyPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyPolicy::Always => "always",
            VerifyPolicy::Debug => "debug",
            VerifyPolicy::Never => "never",
        })
    }
}

/// A family known to be an `(M, L)`-CCC: `M = N` and every auto- and
/// cross-correlation vanishes at every admissible shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifiedCcc(SetFamily);

impl VerifiedCcc {
    /// Runs the exact classifier and refuses anything that is not a CCC.
    pub fn certify(family: SetFamily) -> Result<Self> {
        Self::certify_with(family, &Classifier::default())
    }

    pub fn certify_with(family: SetFamily, classifier: &Classifier) -> Result<Self> {
        if family.m() != family.n() {
            return Err(Error::VerificationRefused(format!(
                "not a CCC: M = {} but N = {}",
                family.m(),
                family.n()
            )));
        }
        let z = classifier.zcz_width(&family);
        if z != family.len() {
            return Err(Error::VerificationRefused(format!(
                "not a CCC: zero correlation zone is {z}, length is {}",
                family.len()
            )));
        }
        Ok(VerifiedCcc(family))
    }

    /// Skip verification; the caller vouches for the property.
    pub fn assume_verified(family: SetFamily) -> Self {
        VerifiedCcc(family)
    }

    pub fn family(&self) -> &SetFamily {
        &self.0
    }

    pub fn into_family(self) -> SetFamily {
        self.0
    }
}

impl Deref for VerifiedCcc {
    type Target = SetFamily;

    fn deref(&self) -> &SetFamily {
        &self.0
    }
}

pub(crate) fn require_even(what: &str, m: usize) -> Result<()> {
    if !m.is_multiple_of(2) {
        return Err(Error::Precondition(format!("{what} must be even, got {m}")));
    }
    Ok(())
}

pub(crate) fn require_same_q(a: &SetFamily, b: &SetFamily) -> Result<()> {
    if a.q() != b.q() {
        return Err(Error::AlphabetMismatch { left: a.q(), right: b.q() });
    }
    Ok(())
}

/// Output check shared by the MOCSS / CCC producing constructors.
pub(crate) fn check_mocss(what: &str, family: &SetFamily, require_ccc: bool) -> Result<()> {
    let classifier = Classifier::default();
    if let Some(v) = classifier.zccs_violation(family, family.len()) {
        return Err(Error::VerificationFailed(format!("{what} output is not a MOCSS: {v}")));
    }
    if require_ccc && family.m() != family.n() {
        return Err(Error::VerificationFailed(format!(
            "{what} output has M = {} != N = {}",
            family.m(),
            family.n()
        )));
    }
    Ok(())
}
