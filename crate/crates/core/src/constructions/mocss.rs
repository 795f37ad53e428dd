use crate::error::{Error, Result};
use crate::sequence::{SequenceSet, SetFamily};

use super::{check_mocss, concat, require_same_q, Negation, VerifiedCcc, VerifyPolicy};

/// `(M, 2M, L1+L2)`-MOCSS from an `(M, L1)`-CCC and an `(M, L2)`-CCC: set `m`
/// is `[A^m | B^m ; A^m | -B^m]`, with `-B` formed according to `negation`.
///
/// Only [`Negation::HalfTurn`] yields a MOCSS in general; the additive-inverse
/// reading is kept so the two can be compared.
pub fn mocss_theorem5(
    a: &VerifiedCcc,
    b: &VerifiedCcc,
    negation: Negation,
    policy: VerifyPolicy,
) -> Result<SetFamily> {
    require_same_q(a, b)?;
    if a.m() != b.m() {
        return Err(Error::DimensionMismatch(format!(
            "CCCs have different set sizes M = {} and M = {}",
            a.m(),
            b.m()
        )));
    }
    let sets = a
        .sets()
        .iter()
        .zip(b.sets())
        .map(|(am, bm)| {
            let neg = negation.apply(bm)?;
            let top = am.rows().iter().zip(bm.rows()).map(|(x, y)| concat(x, y));
            let bottom = am.rows().iter().zip(neg.rows()).map(|(x, y)| concat(x, y));
            SequenceSet::new(top.chain(bottom).collect::<Result<Vec<_>>>()?)
        })
        .collect::<Result<Vec<_>>>()?;
    let family = SetFamily::new(sets)?;
    if policy.active() {
        check_mocss("length-sum", &family, false)?;
    }
    Ok(family)
}
