//! Aperiodic correlation and the set / family classifiers built on it.
//!
//! `R_{a,b}(τ) = Σ_i ξ^{a_i - b_{i+τ}}` for `0 <= τ < L`, and the mirrored sum
//! `Σ_i ξ^{a_{i-τ} - b_i}` for negative shifts. Values are exact
//! [`CyclotomicSum`]s; zero tests go through a [`Classifier`], which can run the
//! exact decision procedure, the floating oracle, or both side by side.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::{CyclotomicField, CyclotomicSum};
use crate::error::{Error, Result};
use crate::sequence::{ResidueSequence, SequenceSet, SetFamily};

/// Adds `R_{a,b}(τ)` into `counts`. Shifts outside `(-L, L)` contribute nothing.
#[inline]
pub(crate) fn accumulate(a: &[u32], b: &[u32], q: u32, tau: isize, counts: &mut [i64]) {
    debug_assert_eq!(a.len(), b.len());
    let len = a.len() as isize;
    if tau >= len || tau <= -len {
        return;
    }
    let (a, b) = if tau >= 0 {
        let t = tau as usize;
        (&a[..a.len() - t], &b[t..])
    } else {
        let t = (-tau) as usize;
        (&a[t..], &b[..b.len() - t])
    };
    for (&x, &y) in a.iter().zip(b) {
        let d = if x >= y { x - y } else { x + q - y };
        counts[d as usize] += 1;
    }
}

/// Aperiodic cross-correlation of two equal-length sequences.
pub fn accf(a: &ResidueSequence, b: &ResidueSequence, tau: isize) -> Result<CyclotomicSum> {
    a.ensure_alphabet(b)?;
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "correlating lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    let q = a.q();
    let mut counts = vec![0; q as usize];
    accumulate(a.as_slice(), b.as_slice(), q, tau, &mut counts);
    Ok(CyclotomicSum::from_counts_unchecked(q, counts))
}

fn set_accf_unchecked(a: &SequenceSet, b: &SequenceSet, tau: isize) -> CyclotomicSum {
    let q = a.q();
    let mut counts = vec![0; q as usize];
    for (x, y) in a.rows().iter().zip(b.rows()) {
        accumulate(x.as_slice(), y.as_slice(), q, tau, &mut counts);
    }
    CyclotomicSum::from_counts_unchecked(q, counts)
}

/// Row-wise sum `Σ_n R_{a_n,b_n}(τ)`.
pub fn set_accf(a: &SequenceSet, b: &SequenceSet, tau: isize) -> Result<CyclotomicSum> {
    a.same_shape(b)?;
    Ok(set_accf_unchecked(a, b, tau))
}

/// `R_{a,b}(τ)` for every `τ ∈ [-(L-1), L-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationProfile {
    len: usize,
    values: Vec<CyclotomicSum>,
}

impl CorrelationProfile {
    pub fn of(a: &ResidueSequence, b: &ResidueSequence) -> Result<Self> {
        let len = a.len() as isize;
        let values = (1 - len..len).map(|t| accf(a, b, t)).collect::<Result<Vec<_>>>()?;
        Ok(CorrelationProfile { len: a.len(), values })
    }

    pub fn of_sets(a: &SequenceSet, b: &SequenceSet) -> Result<Self> {
        a.same_shape(b)?;
        let len = a.len() as isize;
        let values = (1 - len..len).map(|t| set_accf_unchecked(a, b, t)).collect();
        Ok(CorrelationProfile { len: a.len(), values })
    }

    pub fn get(&self, tau: isize) -> Option<&CyclotomicSum> {
        let idx = tau + self.len as isize - 1;
        usize::try_from(idx).ok().and_then(|i| self.values.get(i))
    }

    pub fn shifts(&self) -> impl Iterator<Item = (isize, &CyclotomicSum)> {
        let base = 1 - self.len as isize;
        self.values.iter().enumerate().map(move |(i, v)| (base + i as isize, v))
    }
}

/// How zero tests are decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Reduction modulo the cyclotomic polynomial.
    #[default]
    Exact,
    /// `|z| < 1e-9` in double precision.
    Float,
    /// Both; the exact verdict wins and every disagreement is counted.
    Both,
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(Engine::Exact),
            "float" => Ok(Engine::Float),
            "both" => Ok(Engine::Both),
            other => Err(Error::Unsupported(format!("engine {other:?} (expected exact|float|both)"))),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Exact => "exact",
            Engine::Float => "float",
            Engine::Both => "both",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct EngineStats {
    pub zero_tests: u64,
    pub disagreements: u64,
}

/// A failed zero-correlation condition: `R_{A_i,A_j}(τ) ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub tau: isize,
    pub counts: Vec<i64>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(i={}, j={}, tau={}) value counts {:?}", self.i, self.j, self.tau, self.counts)
    }
}

/// Aggregate verdict for a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub q: u32,
    pub m: usize,
    pub n: usize,
    pub l: usize,
    /// Every member set is a CSS.
    pub is_css: bool,
    /// Every member set is an even-shift CSS.
    pub is_escss: bool,
    /// Largest zero correlation zone; 0 means the family is not a ZCCS at all.
    pub zcz_width: usize,
    pub is_mocss: bool,
    pub is_ccc: bool,
    pub feng_optimal: bool,
}

/// Zero tests and the classifiers that depend on them. Shares counters across
/// worker threads; cheap to construct.
#[derive(Debug, Default)]
pub struct Classifier {
    engine: Engine,
    zero_tests: AtomicU64,
    disagreements: AtomicU64,
}

struct Tester<'a> {
    field: Arc<CyclotomicField>,
    owner: &'a Classifier,
}

impl Tester<'_> {
    fn is_zero(&self, s: &CyclotomicSum) -> bool {
        let c = self.owner;
        c.zero_tests.fetch_add(1, Ordering::Relaxed);
        match c.engine {
            Engine::Exact => self.field.is_zero_exact(s),
            Engine::Float => self.field.is_zero_float(s),
            Engine::Both => {
                let exact = self.field.is_zero_exact(s);
                if exact != self.field.is_zero_float(s) {
                    c.disagreements.fetch_add(1, Ordering::Relaxed);
                }
                exact
            }
        }
    }
}

impl Classifier {
    pub fn new(engine: Engine) -> Self {
        Classifier { engine, ..Default::default() }
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn stats(&self) -> EngineStats {
        EngineStats {
            zero_tests: self.zero_tests.load(Ordering::Relaxed),
            disagreements: self.disagreements.load(Ordering::Relaxed),
        }
    }

    fn tester(&self, q: u32) -> Tester<'_> {
        Tester { field: CyclotomicField::for_q(q), owner: self }
    }

    pub fn is_zero(&self, s: &CyclotomicSum) -> bool {
        self.tester(s.q()).is_zero(s)
    }

    /// First `τ ∈ 1..L` with nonzero aperiodic autocorrelation sum.
    pub fn css_violation(&self, a: &SequenceSet) -> Option<isize> {
        let t = self.tester(a.q());
        let found = (1..a.len()).into_par_iter().find_first(|&tau| {
            let s = set_accf_unchecked(a, a, tau as isize);
            !t.is_zero(&s)
        });
        found.map(|tau| tau as isize)
    }

    pub fn is_css(&self, a: &SequenceSet) -> bool {
        self.css_violation(a).is_none()
    }

    /// First even `τ ∈ [2, L-1]` with nonzero autocorrelation sum.
    pub fn escss_violation(&self, a: &SequenceSet) -> Option<isize> {
        let t = self.tester(a.q());
        let found = (1..a.len().div_ceil(2)).into_par_iter().find_first(|&half| {
            let s = set_accf_unchecked(a, a, 2 * half as isize);
            !t.is_zero(&s)
        });
        found.map(|half| 2 * half as isize)
    }

    pub fn is_escss(&self, a: &SequenceSet) -> bool {
        self.escss_violation(a).is_none()
    }

    /// First even shift (including 0 and negative shifts, ordered by `|τ|`
    /// then sign) where `R_{A,B}(τ) ≠ 0`.
    pub fn even_shift_violation(&self, a: &SequenceSet, b: &SequenceSet) -> Result<Option<isize>> {
        a.same_shape(b)?;
        let t = self.tester(a.q());
        let len = a.len() as isize;
        for tau in (0..len).step_by(2) {
            let shifts: &[isize] = if tau == 0 { &[0] } else { &[tau, -tau] };
            for &signed in shifts {
                if !t.is_zero(&set_accf_unchecked(a, b, signed)) {
                    return Ok(Some(signed));
                }
            }
        }
        Ok(None)
    }

    /// Largest `Z` such that every auto-correlation vanishes for
    /// `1 <= |τ| <= Z-1` and every cross-correlation for `|τ| <= Z-1`.
    /// Returns 0 when some pair is not orthogonal at `τ = 0`.
    pub fn zcz_width(&self, family: &SetFamily) -> usize {
        let m = family.m();
        let t = self.tester(family.q());
        let best = AtomicUsize::new(family.len());
        let pairs: Vec<(usize, usize)> =
            (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
        pairs.par_iter().for_each(|&(i, j)| {
            let (a, b) = (family.set(i), family.set(j));
            let mut tau = 0usize;
            while tau < best.load(Ordering::Relaxed) {
                let fails = if i == j {
                    tau > 0 && {
                        let s = set_accf_unchecked(a, a, tau as isize);
                        debug_assert_eq!(
                            set_accf_unchecked(a, a, -(tau as isize)),
                            s.conjugate(),
                            "autocorrelation symmetry"
                        );
                        !t.is_zero(&s)
                    }
                } else {
                    let pos = set_accf_unchecked(a, b, tau as isize);
                    debug_assert_eq!(
                        set_accf_unchecked(b, a, -(tau as isize)),
                        pos.conjugate(),
                        "cross-correlation symmetry"
                    );
                    !t.is_zero(&pos)
                        || (tau > 0 && !t.is_zero(&set_accf_unchecked(a, b, -(tau as isize))))
                };
                if fails {
                    best.fetch_min(tau, Ordering::Relaxed);
                    break;
                }
                tau += 1;
            }
        });
        best.into_inner()
    }

    /// The first failing condition of a claimed `Z`-zone, ordered by `|τ|`,
    /// then `(i, j)`, then positive before negative shift.
    pub fn zccs_violation(&self, family: &SetFamily, z: usize) -> Option<Violation> {
        let m = family.m();
        let t = self.tester(family.q());
        let pairs: Vec<(usize, usize)> =
            (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
        pairs
            .par_iter()
            .filter_map(|&(i, j)| {
                let (a, b) = (family.set(i), family.set(j));
                for tau in 0..z.min(family.len()) as isize {
                    for signed in [tau, -tau] {
                        if tau == 0 && (signed < 0 || i == j) {
                            continue;
                        }
                        let s = set_accf_unchecked(a, b, signed);
                        if !t.is_zero(&s) {
                            return Some(Violation { i, j, tau: signed, counts: s.counts().to_vec() });
                        }
                    }
                }
                None
            })
            .min_by_key(|v| (v.tau.unsigned_abs(), v.i, v.j, v.tau < 0))
    }

    pub fn is_zccs(&self, family: &SetFamily, z: usize) -> bool {
        z <= family.len() && self.zccs_violation(family, z).is_none()
    }

    pub fn classify(&self, family: &SetFamily) -> ClassificationReport {
        let is_css = family.sets().par_iter().all(|s| self.is_css(s));
        let is_escss = is_css || family.sets().par_iter().all(|s| self.is_escss(s));
        let z = self.zcz_width(family);
        let (m, n, l) = (family.m(), family.n(), family.len());
        let is_mocss = z == l;
        ClassificationReport {
            q: family.q(),
            m,
            n,
            l,
            is_css,
            is_escss,
            zcz_width: z,
            is_mocss,
            is_ccc: is_mocss && m == n,
            feng_optimal: z >= 1 && m == n * (l / z),
        }
    }
}

pub fn is_css(a: &SequenceSet) -> bool {
    Classifier::default().is_css(a)
}

pub fn is_escss(a: &SequenceSet) -> bool {
    Classifier::default().is_escss(a)
}

pub fn zcz_width(family: &SetFamily) -> usize {
    Classifier::default().zcz_width(family)
}

pub fn is_zccs(family: &SetFamily, z: usize) -> bool {
    Classifier::default().is_zccs(family, z)
}

pub fn classify(family: &SetFamily) -> ClassificationReport {
    Classifier::default().classify(family)
}
