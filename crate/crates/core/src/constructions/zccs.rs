use crate::correlation::Classifier;
use crate::ebf::{check_permutation, check_unit, qary_digits, sequence_len, EbfSpec};
use crate::error::{Error, Result};
use crate::sequence::{Alphabet, ResidueSequence, SequenceSet, SetFamily};

use super::VerifyPolicy;

/// Digit vectors of every position `0..q^m`.
fn digit_table(q: u32, m: usize) -> Result<Vec<Vec<u32>>> {
    let len = sequence_len(q, m)?;
    (0..len as u64).map(|i| qary_digits(i, m, q)).collect()
}

/// `q` rows `f + n·x_{π(1)}`, `n = 0..q-1`, forming a `q`-ary CSS of length `q^m`.
///
/// The chain in `f` must cover all `m` variables.
pub fn build_css_theorem1(f: &EbfSpec, policy: VerifyPolicy) -> Result<SequenceSet> {
    if f.width() != f.m() {
        return Err(Error::Precondition(format!(
            "pi must be a permutation of 1..={} (got width {})",
            f.m(),
            f.width()
        )));
    }
    let alphabet = f.alphabet();
    let base = f.associated_sequence()?;
    let lead: Vec<u32> = digit_table(f.q(), f.m())?.iter().map(|x| f.chain_var(x, 1)).collect();
    let rows = (0..f.q())
        .map(|n| {
            let elems = base
                .as_slice()
                .iter()
                .zip(&lead)
                .map(|(&b, &x)| alphabet.reduce(b as i64 + n as i64 * x as i64))
                .collect();
            ResidueSequence::from_raw(alphabet, elems)
        })
        .collect();
    let set = SequenceSet::new(rows)?;
    if policy.active() {
        if let Some(tau) = Classifier::default().css_violation(&set) {
            return Err(Error::VerificationFailed(format!(
                "constructed set is not a CSS: nonzero autocorrelation sum at tau = {tau}"
            )));
        }
    }
    Ok(set)
}

/// Parameters of the EBF-based ZCCS: the chain permutes `1..=m-v`, the
/// remaining `v` variables carry the set index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Params {
    f: EbfSpec,
    v: usize,
    beta: u32,
}

impl Theorem2Params {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        alphabet: Alphabet,
        m: usize,
        v: usize,
        alpha: u32,
        beta: u32,
        pi: Vec<usize>,
        coeffs: Vec<Vec<u32>>,
        c0: u32,
    ) -> Result<Self> {
        if m < 2 {
            return Err(Error::Precondition(format!("m must be at least 2, got {m}")));
        }
        if v == m {
            return Err(Error::Unsupported(format!(
                "v = m = {m} leaves no chain variables (x_pi(1) undefined)"
            )));
        }
        if v > m {
            return Err(Error::Precondition(format!("v = {v} exceeds m = {m}")));
        }
        check_unit("beta", beta, alphabet.q())?;
        check_permutation(&pi, m - v)?;
        let f = EbfSpec::new(alphabet, m, alpha, pi, coeffs, c0)?;
        let sets = (alphabet.q() as u64).checked_pow(v as u32 + 1);
        let len = sequence_len(alphabet.q(), m)? as u64;
        match sets.and_then(|s| s.checked_mul(len * alphabet.q() as u64)) {
            Some(total) if total <= crate::ebf::MAX_SEQUENCE_LEN * 4 => {}
            _ => {
                return Err(Error::Unsupported(format!(
                    "family of q^(v+1) sets of q x q^m symbols is too large (q={}, m={m}, v={v})",
                    alphabet.q()
                )))
            }
        }
        Ok(Theorem2Params { f, v, beta })
    }

    pub fn ebf(&self) -> &EbfSpec {
        &self.f
    }

    pub fn q(&self) -> u32 {
        self.f.q()
    }

    pub fn m(&self) -> usize {
        self.f.m()
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn alpha(&self) -> u32 {
        self.f.alpha()
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    /// `(M, N, L, Z) = (q^{v+1}, q, q^m, q^{m-v})`
    pub fn claimed(&self) -> (usize, usize, usize, usize) {
        let q = self.q() as usize;
        (q.pow(self.v as u32 + 1), q, q.pow(self.m() as u32), q.pow((self.m() - self.v) as u32))
    }
}

/// `q^{v+1}` sets `S^p`, each with rows
/// `s_n^p = f + n·x_{π(1)} + β·(p_1·x_{π(m-v)} + Σ_{k=1}^{v} p_{k+1}·x_{m-v+k})`,
/// where `(p_1, …, p_{v+1})` are the base-`q` digits of `p`.
pub fn build_zccs_theorem2(params: &Theorem2Params, policy: VerifyPolicy) -> Result<SetFamily> {
    let f = &params.f;
    let (q, m, v) = (f.q(), f.m(), params.v);
    let alphabet = f.alphabet();
    let width = m - v;
    let base = f.associated_sequence()?;
    let digits = digit_table(q, m)?;
    let (num_sets, _, _, z) = params.claimed();

    let mut sets = Vec::with_capacity(num_sets);
    for p in 0..num_sets as u64 {
        let pd = qary_digits(p, v + 1, q)?;
        let rows = (0..q)
            .map(|n| {
                let elems = digits
                    .iter()
                    .zip(base.as_slice())
                    .map(|(x, &fx)| {
                        let mut tag = pd[0] as i64 * f.chain_var(x, width) as i64;
                        for k in 1..=v {
                            tag += pd[k] as i64 * x[width + k - 1] as i64;
                        }
                        let val = fx as i64
                            + n as i64 * f.chain_var(x, 1) as i64
                            + params.beta as i64 * tag;
                        alphabet.reduce(val)
                    })
                    .collect();
                ResidueSequence::from_raw(alphabet, elems)
            })
            .collect();
        sets.push(SequenceSet::new(rows)?);
    }
    let family = SetFamily::new(sets)?;
    if policy.active() {
        if let Some(viol) = Classifier::default().zccs_violation(&family, z) {
            return Err(Error::VerificationFailed(format!(
                "constructed family is not a ZCCS with Z = {z}: {viol}"
            )));
        }
    }
    Ok(family)
}
