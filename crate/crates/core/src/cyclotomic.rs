//! Exact arithmetic on sums of `q`-th roots of unity.
//!
//! A correlation value `Σ ξ^{a_i - b_{i+τ}}` is stored as the multiplicity of
//! each power of `ξ`. Deciding whether such a sum vanishes is done exactly by
//! reducing `Σ c_k x^k` modulo the cyclotomic polynomial `Φ_q`, which is the
//! minimal polynomial of `ξ` over the rationals.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Dense integer polynomial, coefficients in ascending degree order.
/// The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = -1;
        c[n] = 1;
        IntPoly::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly(Vec::new());
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Long division by a monic divisor. Exact over the integers because the
    /// leading coefficient is 1.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let d = divisor.degree().expect("division by zero polynomial");
        assert_eq!(divisor.0[d], 1, "divisor must be monic");
        let mut rem = self.0.clone();
        if rem.len() <= d {
            return (IntPoly(Vec::new()), IntPoly::new(rem));
        }
        let mut quot = vec![0i64; rem.len() - d];
        for top in (d..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            quot[top - d] = c;
            for (j, &b) in divisor.0.iter().enumerate() {
                rem[top - d + j] -= c * b;
            }
        }
        rem.truncate(d);
        (IntPoly::new(quot), IntPoly::new(rem))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{a}x^{k}")?,
            }
        }
        Ok(())
    }
}

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, obtained by dividing `x^n - 1` by every
/// `Φ_d` with `d | n`, `d < n`. Results are memoized.
pub fn cyclotomic_polynomial(n: u32) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic polynomial index must be >= 1");
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let mut acc = IntPoly::x_pow_minus_one(n as usize);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (quot, rem) = acc.div_rem_monic(&cyclotomic_polynomial(d));
        debug_assert!(rem.is_zero(), "Φ_{d} does not divide x^{n} - 1");
        acc = quot;
    }
    let phi = Arc::new(acc);
    phi_cache().lock().unwrap().entry(n).or_insert_with(|| Arc::clone(&phi));
    phi
}

/// `Σ_k counts[k]·ξ^k` with `ξ = e^{2πi/q}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicSum {
    q: u32,
    counts: Vec<i64>,
}

impl CyclotomicSum {
    pub fn zero(q: u32) -> Self {
        CyclotomicSum { q, counts: vec![0; q as usize] }
    }

    pub fn from_counts(q: u32, counts: Vec<i64>) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q as u64));
        }
        if counts.len() != q as usize {
            return Err(Error::DimensionMismatch(format!(
                "{} counts for q = {q}",
                counts.len()
            )));
        }
        Ok(CyclotomicSum { q, counts })
    }

    pub(crate) fn from_counts_unchecked(q: u32, counts: Vec<i64>) -> Self {
        debug_assert_eq!(counts.len(), q as usize);
        CyclotomicSum { q, counts }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn add(&self, other: &CyclotomicSum) -> Result<CyclotomicSum> {
        if self.q != other.q {
            return Err(Error::AlphabetMismatch { left: self.q, right: other.q });
        }
        let counts = self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect();
        Ok(CyclotomicSum { q: self.q, counts })
    }

    /// Complex conjugate: `ξ^k ↦ ξ^{q-k}`.
    pub fn conjugate(&self) -> CyclotomicSum {
        let q = self.q as usize;
        let counts = (0..q).map(|k| self.counts[(q - k) % q]).collect();
        CyclotomicSum { q: self.q, counts }
    }

    /// Floating-point value `(re, im)`. Only used as an independent oracle.
    pub fn to_complex(&self) -> (f64, f64) {
        let q = self.q as f64;
        self.counts.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &c)| {
            let theta = TAU * k as f64 / q;
            (re + c as f64 * theta.cos(), im + c as f64 * theta.sin())
        })
    }

    /// Exact test for `Σ counts[k]·ξ^k = 0`.
    pub fn is_zero(&self) -> bool {
        reduce_mod_phi(&self.counts, &cyclotomic_polynomial(self.q))
    }

    /// Value as an integer when every term sits on `ξ^0` (always the case at
    /// `τ = 0` for an autocorrelation).
    pub fn as_integer(&self) -> Option<i64> {
        self.counts[1..].iter().all(|&c| c == 0).then_some(self.counts[0])
    }
}

impl fmt::Display for CyclotomicSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] (q={})", self.q)
    }
}

/// True iff `Σ counts[k] x^k ≡ 0 (mod Φ)`.
fn reduce_mod_phi(counts: &[i64], phi: &IntPoly) -> bool {
    let p = phi.coeffs();
    let d = p.len() - 1;
    let mut rem: Vec<i128> = counts.iter().map(|&c| c as i128).collect();
    for top in (d..rem.len()).rev() {
        let c = rem[top];
        if c == 0 {
            continue;
        }
        for (j, &b) in p.iter().enumerate() {
            let idx = top - d + j;
            rem[idx] = rem[idx]
                .checked_sub(c.checked_mul(b as i128).expect("cyclotomic reduction overflow"))
                .expect("cyclotomic reduction overflow");
        }
    }
    rem[..d.min(rem.len())].iter().all(|&c| c == 0)
}

/// Per-`q` precomputed data: `Φ_q` for the exact test and a cosine/sine table
/// for the floating oracle.
#[derive(Debug)]
pub struct CyclotomicField {
    q: u32,
    phi: Arc<IntPoly>,
    cos: Vec<f64>,
    sin: Vec<f64>,
}

/// Magnitude below which the floating oracle calls a sum zero.
pub const FLOAT_ZERO_THRESHOLD: f64 = 1e-9;

impl CyclotomicField {
    pub fn new(q: u32) -> Self {
        let angles = (0..q).map(|k| TAU * k as f64 / q as f64);
        CyclotomicField {
            q,
            phi: cyclotomic_polynomial(q),
            cos: angles.clone().map(f64::cos).collect(),
            sin: angles.map(f64::sin).collect(),
        }
    }

    /// Shared instance for `q`.
    pub fn for_q(q: u32) -> Arc<CyclotomicField> {
        static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = cache.lock().unwrap().get(&q) {
            return Arc::clone(f);
        }
        let field = Arc::new(CyclotomicField::new(q));
        Arc::clone(cache.lock().unwrap().entry(q).or_insert(field))
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }

    pub fn is_zero_exact(&self, s: &CyclotomicSum) -> bool {
        debug_assert_eq!(s.q, self.q);
        reduce_mod_phi(&s.counts, &self.phi)
    }

    pub fn to_complex(&self, s: &CyclotomicSum) -> (f64, f64) {
        s.counts.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &c)| {
            (re + c as f64 * self.cos[k], im + c as f64 * self.sin[k])
        })
    }

    pub fn is_zero_float(&self, s: &CyclotomicSum) -> bool {
        let (re, im) = self.to_complex(s);
        re.hypot(im) < FLOAT_ZERO_THRESHOLD
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sum(q: u32, c: &[i64]) -> CyclotomicSum {
        CyclotomicSum::from_counts(q, c.to_vec()).unwrap()
    }

    #[test]
    fn add_elementwise() {
        assert_eq!(sum(3, &[1, 0, 0]).add(&sum(3, &[0, 1, 0])).unwrap(), sum(3, &[1, 1, 0]));
        assert_eq!(sum(2, &[2, 1]).add(&sum(2, &[0, 3])).unwrap(), sum(2, &[2, 4]));
        let x = sum(5, &[3, -1, 0, 2, 7]);
        assert_eq!(x.add(&CyclotomicSum::zero(5)).unwrap(), x);
        assert_eq!(
            sum(2, &[1, 0]).add(&sum(3, &[1, 0, 0])),
            Err(Error::AlphabetMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn conjugate_reflects_indices() {
        assert_eq!(sum(4, &[1, 2, 0, 0]).conjugate(), sum(4, &[1, 0, 0, 2]));
        assert_eq!(sum(2, &[5, -3]).conjugate(), sum(2, &[5, -3]));
        assert_eq!(sum(3, &[0, 1, 1]).conjugate(), sum(3, &[0, 1, 1]));
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), IntPoly::new(vec![-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), IntPoly::new(vec![1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), IntPoly::new(vec![1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), IntPoly::new(vec![1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12).to_string(), "x^4 - x^2 + 1");
        // Φ_105 is the first with a coefficient of absolute value 2.
        assert!(cyclotomic_polynomial(105).coeffs().contains(&-2));
    }

    #[test]
    fn phi_divides_x_n_minus_one() {
        for n in 1..=64u32 {
            let (_, rem) = IntPoly::x_pow_minus_one(n as usize).div_rem_monic(&cyclotomic_polynomial(n));
            assert!(rem.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn phi_degree_is_totient() {
        for n in 1..=64u32 {
            let totient = (1..=n).filter(|k| gcd(*k, n) == 1).count();
            assert_eq!(cyclotomic_polynomial(n).degree(), Some(totient), "n = {n}");
        }
    }

    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    #[test]
    fn exact_zero_examples() {
        assert!(sum(3, &[1, 1, 1]).is_zero());
        assert!(!sum(3, &[1, 0, 0]).is_zero());
        // ξ + ξ^3 = -1 - ξ^2 for q = 6 (checked against the float oracle below)
        let x = sum(6, &[1, 0, 1, 1, 0, 1]);
        let (re, im) = x.to_complex();
        assert!(re.hypot(im) < 1e-12);
        assert!(x.is_zero());
        assert!(!sum(6, &[1, 0, 1, 0, 0, 1]).is_zero());
    }

    #[test]
    fn to_complex_examples() {
        let (re, im) = sum(4, &[0, 1, 0, 0]).to_complex();
        assert!(re.abs() < 1e-15 && (im - 1.0).abs() < 1e-15);
        let (re, im) = sum(2, &[3, 1]).to_complex();
        assert!((re - 2.0).abs() < 1e-15 && im.abs() < 1e-15);
        let (re, im) = sum(3, &[1, 1, 1]).to_complex();
        assert!(re.hypot(im) < 1e-12);
    }

    #[test]
    fn field_matches_free_functions() {
        let f = CyclotomicField::for_q(6);
        let x = sum(6, &[1, 0, 1, 1, 0, 1]);
        assert!(f.is_zero_exact(&x) && f.is_zero_float(&x));
        assert_eq!(f.phi(), &*cyclotomic_polynomial(6));
    }

    proptest! {
        #[test]
        fn exact_and_float_agree(q in 2u32..=12, seed in proptest::collection::vec(-50i64..=50, 12)) {
            let x = sum(q, &seed[..q as usize]);
            let (re, im) = x.to_complex();
            prop_assert_eq!(x.is_zero(), re.hypot(im) < 1e-9);
        }

        #[test]
        fn exact_agrees_on_vanishing_constructions(q in 2u32..=12, d in 1u32..12, mult in 1i64..5, base in proptest::collection::vec(-5i64..=5, 12)) {
            // add a full coset sum Σ_j ξ^{j·q/g} (which vanishes) to an arbitrary vector
            let d = d % q;
            let g = if d == 0 { 1 } else { q / gcd(q, d) };
            let mut c = base[..q as usize].to_vec();
            let before = sum(q, &c).is_zero();
            if g > 1 {
                for j in 0..g {
                    c[(j * (q / g)) as usize] += mult;
                }
            }
            prop_assert_eq!(sum(q, &c).is_zero(), before);
        }

        #[test]
        fn conjugate_is_involution(q in 2u32..=16, seed in proptest::collection::vec(-50i64..=50, 16)) {
            let x = sum(q, &seed[..q as usize]);
            prop_assert_eq!(x.conjugate().conjugate(), x.clone());
            let (re, im) = x.to_complex();
            let (cre, cim) = x.conjugate().to_complex();
            prop_assert!((re - cre).abs() < 1e-9 && (im + cim).abs() < 1e-9);
        }
    }
}
