use crate::correlation::Classifier;
use crate::error::{Error, Result};
use crate::sequence::{SequenceSet, SetFamily};

use super::{check_mocss, interleave, phi, require_even, require_same_q, VerifiedCcc, VerifyPolicy};

/// Set `m` of the output stacks `I(s_0^m, s_1^m), I(s_2^m, s_3^m), …`, giving
/// `M` sets of size `M/2 x 2L` whose mutual correlations vanish at every even
/// shift.
pub fn interleave_escss_theorem3(ccc: &VerifiedCcc, policy: VerifyPolicy) -> Result<SetFamily> {
    require_even("number of sets M of the seed CCC", ccc.m())?;
    let sets = ccc
        .sets()
        .iter()
        .map(|s| {
            let rows = s
                .rows()
                .chunks_exact(2)
                .map(|pair| interleave(&pair[0], &pair[1]))
                .collect::<Result<Vec<_>>>()?;
            SequenceSet::new(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    let family = SetFamily::new(sets)?;
    if policy.active() {
        let classifier = Classifier::default();
        for (m1, a) in family.sets().iter().enumerate() {
            if let Some(tau) = classifier.escss_violation(a) {
                return Err(Error::VerificationFailed(format!(
                    "interleaved set {m1} is not an ESCSS (tau = {tau})"
                )));
            }
            for m2 in m1 + 1..family.m() {
                if let Some(tau) = classifier.even_shift_violation(a, family.set(m2))? {
                    return Err(Error::VerificationFailed(format!(
                        "interleaved sets {m1} and {m2} correlate at even shift {tau}"
                    )));
                }
            }
        }
    }
    Ok(family)
}

/// φ-concatenation MOCSS.
///
/// `p` and `q` are `(N, L1)` even-shift complementary sets with
/// `R_{P,Q}(τ) = 0` at every even `τ`; `ccc` is an `(M, L2)`-CCC with `M` even.
/// Output set `k` is `MN x L1·L2`; its row `t·M + j` is
/// `φ(p_t, c_j^{2k}, c_j^{2k+1})` for `k < M/2` and
/// `φ(q_t, c_j^{2k-M}, c_j^{2k-M+1})` otherwise.
pub fn mocss_lemma4(
    p: &SequenceSet,
    q: &SequenceSet,
    ccc: &VerifiedCcc,
    policy: VerifyPolicy,
) -> Result<SetFamily> {
    p.same_shape(q)?;
    if p.q() != ccc.q() {
        return Err(Error::AlphabetMismatch { left: p.q(), right: ccc.q() });
    }
    let m = ccc.m();
    require_even("number of sets M of the CCC", m)?;

    let classifier = Classifier::default();
    for (name, s) in [("P", p), ("Q", q)] {
        if let Some(tau) = classifier.escss_violation(s) {
            return Err(Error::VerificationRefused(format!(
                "{name} is not an even-shift CSS (tau = {tau})"
            )));
        }
    }
    if let Some(tau) = classifier.even_shift_violation(p, q)? {
        return Err(Error::VerificationRefused(format!(
            "R_(P,Q) is nonzero at even shift {tau}"
        )));
    }

    let half = m / 2;
    let sets = (0..m)
        .map(|k| {
            let (d_set, c0, c1) = if k < half {
                (p, ccc.set(2 * k), ccc.set(2 * k + 1))
            } else {
                (q, ccc.set(2 * k - m), ccc.set(2 * k - m + 1))
            };
            let mut rows = Vec::with_capacity(m * d_set.n());
            for d in d_set.rows() {
                for j in 0..m {
                    rows.push(phi(d, c0.row(j), c1.row(j))?);
                }
            }
            SequenceSet::new(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    let family = SetFamily::new(sets)?;
    if policy.active() {
        check_mocss("phi-concatenation", &family, false)?;
    }
    Ok(family)
}

/// Product of an `(M1, L1)`-CCC and an `(M2, L2)`-CCC into an
/// `(M1·M2/2, 2·L1·L2)`-CCC: interleave `a`, pair up consecutive sets as
/// `(P, Q)`, run the φ-concatenation against `b`, and take the union.
pub fn ccc_theorem4(a: &VerifiedCcc, b: &VerifiedCcc, policy: VerifyPolicy) -> Result<SetFamily> {
    require_same_q(a, b)?;
    require_even("M1", a.m())?;
    require_even("M2", b.m())?;
    let interleaved = interleave_escss_theorem3(a, policy)?;
    let mut sets = Vec::with_capacity(a.m() / 2 * b.m());
    for k in 0..a.m() / 2 {
        let part = mocss_lemma4(interleaved.set(2 * k), interleaved.set(2 * k + 1), b, policy)?;
        sets.extend(part.into_sets());
    }
    let family = SetFamily::new(sets)?;
    if policy.active() {
        check_mocss("CCC product", &family, true)?;
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::{classify, set_accf};
    use crate::sequence::Alphabet;

    fn z2() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    fn ccc_2x1() -> VerifiedCcc {
        VerifiedCcc::certify(SetFamily::from_nested(z2(), vec![vec![vec![0], vec![0]], vec![vec![1], vec![0]]]).unwrap())
            .unwrap()
    }

    fn ccc_2x2() -> VerifiedCcc {
        VerifiedCcc::certify(
            SetFamily::from_nested(z2(), vec![vec![vec![0, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]])
                .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn theorem3_on_2x2() {
        let c = ccc_2x2();
        let f = interleave_escss_theorem3(&c, VerifyPolicy::Always).unwrap();
        assert_eq!((f.m(), f.n(), f.len()), (2, 1, 4));
        for t in -1..=1isize {
            assert_eq!(
                set_accf(f.set(0), f.set(1), 2 * t).unwrap(),
                set_accf(c.set(0), c.set(1), t).unwrap()
            );
        }
    }

    #[test]
    fn theorem3_rejects_odd_m() {
        let z3 = Alphabet::new(3).unwrap();
        let fam = SetFamily::from_nested(z3, vec![vec![vec![0]]]).unwrap();
        let c = VerifiedCcc::certify(fam).unwrap();
        assert!(matches!(
            interleave_escss_theorem3(&c, VerifyPolicy::Never),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lemma4_refuses_single_symbol_sets() {
        // N = L1 = 1 can never be orthogonal at τ = 0
        let p = SequenceSet::from_rows(z2(), vec![vec![0]]).unwrap();
        let q = SequenceSet::from_rows(z2(), vec![vec![1]]).unwrap();
        for c in [ccc_2x1(), ccc_2x2()] {
            let r = mocss_lemma4(&p, &q, &c, VerifyPolicy::Always);
            assert!(matches!(r, Err(Error::VerificationRefused(_))), "{r:?}");
        }
    }

    #[test]
    fn lemma4_from_interleaved_2x1() {
        let seed = ccc_2x1();
        let ab = interleave_escss_theorem3(&seed, VerifyPolicy::Always).unwrap();
        let out = mocss_lemma4(ab.set(0), ab.set(1), &ccc_2x2(), VerifyPolicy::Always).unwrap();
        assert_eq!((out.m(), out.n(), out.len()), (2, 2, 4));
        assert!(classify(&out).is_mocss);
    }

    #[test]
    fn lemma4_matches_theorem4_constituent() {
        let c = ccc_2x2();
        let ab = interleave_escss_theorem3(&c, VerifyPolicy::Never).unwrap();
        let part = mocss_lemma4(ab.set(0), ab.set(1), &c, VerifyPolicy::Never).unwrap();
        let whole = ccc_theorem4(&c, &c, VerifyPolicy::Never).unwrap();
        assert_eq!(&whole.sets()[..2], part.sets());
    }

    #[test]
    fn theorem4_small_products() {
        let c = ccc_2x2();
        let out = ccc_theorem4(&c, &c, VerifyPolicy::Always).unwrap();
        assert_eq!((out.m(), out.n(), out.len()), (2, 2, 8));
        assert!(classify(&out).is_ccc);
        let one = ccc_2x1();
        let out = ccc_theorem4(&one, &one, VerifyPolicy::Always).unwrap();
        assert_eq!((out.m(), out.n(), out.len()), (2, 2, 2));
        assert!(classify(&out).is_ccc);
    }

    #[test]
    fn theorem4_rejects_alphabet_mismatch() {
        let z4 = Alphabet::new(4).unwrap();
        let c4 = VerifiedCcc::certify(
            SetFamily::from_nested(z4, vec![vec![vec![0], vec![0]], vec![vec![2], vec![0]]]).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            ccc_theorem4(&ccc_2x2(), &c4, VerifyPolicy::Never),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn certify_rejects_non_ccc() {
        let fam = SetFamily::from_nested(z2(), vec![vec![vec![0, 0], vec![0, 1]], vec![vec![0, 0], vec![0, 1]]])
            .unwrap();
        assert!(matches!(VerifiedCcc::certify(fam), Err(Error::VerificationRefused(_))));
    }
}
