//! Extended Boolean functions `f: Z_q^m -> Z_q` of the quadratic-chain shape
//!
//! ```text
//! f(x) = α·Σ_{k=1}^{w-1} x_{π(k)}·x_{π(k+1)} + Σ_{l=1}^{q-1} Σ_{k=1}^{m} c_{l,k}·x_k^l + c_0
//! ```
//!
//! and their associated sequences `(f(0), f(1), …, f(q^m - 1))`, where the
//! integer `i` is read as base-`q` digits `(i_1, …, i_m)` with `i_1` least
//! significant. Variable indices (`π` values, `k`) are 1-based throughout,
//! matching the usual notation.

use crate::error::{Error, Result};
use crate::sequence::{Alphabet, ResidueSequence};

/// Upper bound on `q^m` for materialized sequences.
pub const MAX_SEQUENCE_LEN: u64 = 1 << 24;

/// Little-endian base-`q` digits of `x`.
pub fn qary_digits(x: u64, positions: usize, q: u32) -> Result<Vec<u32>> {
    let out_of_range = || Error::DigitOutOfRange { value: x, positions, q };
    let bound = (q as u64).checked_pow(positions as u32);
    if bound.is_some_and(|b| x >= b) {
        return Err(out_of_range());
    }
    let mut rest = x;
    let digits = (0..positions)
        .map(|_| {
            let d = (rest % q as u64) as u32;
            rest /= q as u64;
            d
        })
        .collect();
    Ok(digits)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub(crate) fn check_unit(name: &str, value: u32, q: u32) -> Result<()> {
    if value == 0 || value >= q || gcd(value as u64, q as u64) != 1 {
        return Err(Error::Precondition(format!(
            "{name} = {value} is not coprime with q = {q}"
        )));
    }
    Ok(())
}

pub(crate) fn check_permutation(pi: &[usize], width: usize) -> Result<()> {
    let mut seen = vec![false; width];
    if pi.len() != width {
        return Err(Error::Precondition(format!(
            "pi has {} entries; expected a permutation of 1..={width}",
            pi.len()
        )));
    }
    for &p in pi {
        if p == 0 || p > width || std::mem::replace(&mut seen[p - 1], true) {
            return Err(Error::Precondition(format!(
                "pi = {pi:?} is not a permutation of 1..={width}"
            )));
        }
    }
    Ok(())
}

pub(crate) fn sequence_len(q: u32, m: usize) -> Result<usize> {
    match (q as u64).checked_pow(m as u32) {
        Some(l) if l <= MAX_SEQUENCE_LEN => Ok(l as usize),
        _ => Err(Error::Unsupported(format!(
            "sequence length q^m = {q}^{m} exceeds {MAX_SEQUENCE_LEN}"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EbfSpec {
    alphabet: Alphabet,
    m: usize,
    alpha: u32,
    pi: Vec<usize>,
    /// `coeffs[l-1][k-1] = c_{l,k}`; missing degrees are zero.
    coeffs: Vec<Vec<u32>>,
    c0: u32,
}

impl EbfSpec {
    /// `pi` permutes `1..=w` for the chain width `w = pi.len() <= m`.
    /// `coeffs` holds up to `q-1` rows of `m` values each.
    pub fn new(
        alphabet: Alphabet,
        m: usize,
        alpha: u32,
        pi: Vec<usize>,
        coeffs: Vec<Vec<u32>>,
        c0: u32,
    ) -> Result<Self> {
        let q = alphabet.q();
        if m == 0 {
            return Err(Error::Precondition("m must be at least 1".into()));
        }
        if pi.len() > m {
            return Err(Error::Precondition(format!(
                "chain width {} exceeds m = {m}",
                pi.len()
            )));
        }
        check_unit("alpha", alpha, q)?;
        check_permutation(&pi, pi.len())?;
        if coeffs.len() > q as usize - 1 {
            return Err(Error::Precondition(format!(
                "{} coefficient rows given; degrees run 1..={}",
                coeffs.len(),
                q - 1
            )));
        }
        for (l, row) in coeffs.iter().enumerate() {
            if row.len() != m {
                return Err(Error::DimensionMismatch(format!(
                    "coefficient row c{} has {} entries, expected m = {m}",
                    l + 1,
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&c| c >= q) {
                return Err(Error::ResidueOutOfRange { value: bad as u64, q });
            }
        }
        if c0 >= q {
            return Err(Error::ResidueOutOfRange { value: c0 as u64, q });
        }
        Ok(EbfSpec { alphabet, m, alpha, pi, coeffs, c0 })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn q(&self) -> u32 {
        self.alphabet.q()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn width(&self) -> usize {
        self.pi.len()
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn coeffs(&self) -> &[Vec<u32>] {
        &self.coeffs
    }

    pub fn c0(&self) -> u32 {
        self.c0
    }

    /// Same function with `c_0` replaced.
    pub fn with_c0(&self, c0: u32) -> Result<Self> {
        EbfSpec::new(self.alphabet, self.m, self.alpha, self.pi.clone(), self.coeffs.clone(), c0)
    }

    /// `x_{π(k)}` for 1-based `k`.
    pub(crate) fn chain_var(&self, x: &[u32], k: usize) -> u32 {
        x[self.pi[k - 1] - 1]
    }

    /// `f(x)` for a digit vector `(x_1, …, x_m)`.
    pub fn evaluate(&self, x: &[u32]) -> u32 {
        debug_assert_eq!(x.len(), self.m);
        let q = self.q() as u64;
        let mut acc = 0u64;
        for k in 1..self.width() {
            let prod = self.chain_var(x, k) as u64 * self.chain_var(x, k + 1) as u64 % q;
            acc = (acc + self.alpha as u64 * prod) % q;
        }
        for (k, &xk) in x.iter().enumerate() {
            let mut power = 1u64;
            for row in &self.coeffs {
                power = power * xk as u64 % q;
                acc = (acc + row[k] as u64 * power) % q;
            }
        }
        ((acc + self.c0 as u64) % q) as u32
    }

    /// The length-`q^m` associated sequence.
    pub fn associated_sequence(&self) -> Result<ResidueSequence> {
        let len = sequence_len(self.q(), self.m)?;
        let elems = (0..len as u64)
            .map(|i| self.evaluate(&qary_digits(i, self.m, self.q()).expect("index below q^m")))
            .collect();
        Ok(ResidueSequence::from_raw(self.alphabet, elems))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(q: u64) -> Alphabet {
        Alphabet::new(q).unwrap()
    }

    /// The quinary CSS parameters: q = 5, m = 2, α = 1, π = (2, 1).
    fn example2() -> EbfSpec {
        EbfSpec::new(z(5), 2, 1, vec![2, 1], vec![vec![1, 3], vec![2, 4], vec![1, 1], vec![0, 3]], 0)
            .unwrap()
    }

    #[test]
    fn digits() {
        assert_eq!(qary_digits(5, 2, 3).unwrap(), vec![2, 1]);
        assert_eq!(qary_digits(0, 4, 7).unwrap(), vec![0; 4]);
        assert_eq!(qary_digits(8, 2, 3).unwrap(), vec![2, 2]);
        assert!(matches!(qary_digits(9, 2, 3), Err(Error::DigitOutOfRange { .. })));
    }

    #[test]
    fn evaluate_examples() {
        let f = example2();
        assert_eq!(f.evaluate(&[2, 0]), 3);
        assert_eq!(f.evaluate(&[0, 1]), 1);
        let constant = EbfSpec::new(z(7), 3, 1, vec![], vec![], 4).unwrap();
        assert_eq!(constant.evaluate(&[6, 2, 5]), 4);
    }

    #[test]
    fn associated_sequences_of_simple_functions() {
        // x_1 and x_2 are linear terms; x_1·x_2 is the width-2 chain.
        let x1 = EbfSpec::new(z(3), 2, 1, vec![], vec![vec![1, 0]], 0).unwrap();
        let x2 = EbfSpec::new(z(3), 2, 1, vec![], vec![vec![0, 1]], 0).unwrap();
        let x1x2p1 = EbfSpec::new(z(3), 2, 1, vec![1, 2], vec![], 1).unwrap();
        assert_eq!(x1.associated_sequence().unwrap().as_slice(), &[0, 1, 2, 0, 1, 2, 0, 1, 2]);
        assert_eq!(x2.associated_sequence().unwrap().as_slice(), &[0, 0, 0, 1, 1, 1, 2, 2, 2]);
        assert_eq!(x1x2p1.associated_sequence().unwrap().as_slice(), &[1, 1, 1, 1, 2, 0, 1, 0, 2]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(EbfSpec::new(z(4), 2, 2, vec![1, 2], vec![], 0), Err(Error::Precondition(_))));
        assert!(matches!(EbfSpec::new(z(4), 2, 0, vec![1, 2], vec![], 0), Err(Error::Precondition(_))));
        assert!(EbfSpec::new(z(3), 2, 1, vec![1, 1], vec![], 0).is_err());
        assert!(EbfSpec::new(z(3), 2, 1, vec![1, 3], vec![], 0).is_err());
        assert!(EbfSpec::new(z(3), 2, 1, vec![1, 2, 3], vec![], 0).is_err());
        assert!(EbfSpec::new(z(3), 2, 1, vec![], vec![vec![0, 1], vec![0, 1], vec![0, 1]], 0).is_err());
        assert!(EbfSpec::new(z(3), 2, 1, vec![], vec![vec![0, 3]], 0).is_err());
        assert!(EbfSpec::new(z(3), 2, 1, vec![], vec![vec![0]], 0).is_err());
        assert!(EbfSpec::new(z(3), 0, 1, vec![], vec![], 0).is_err());
        assert!(EbfSpec::new(z(3), 2, 1, vec![], vec![], 3).is_err());
    }

    #[test]
    fn length_guard() {
        let f = EbfSpec::new(z(2), 30, 1, vec![], vec![], 0).unwrap();
        assert!(matches!(f.associated_sequence(), Err(Error::Unsupported(_))));
    }

    proptest! {
        #[test]
        fn digits_round_trip(q in 2u32..=9, m in 1usize..=5, x in 0u64..59049) {
            let bound = (q as u64).pow(m as u32);
            let x = x % bound;
            let d = qary_digits(x, m, q).unwrap();
            prop_assert_eq!(d.len(), m);
            let back: u64 = d.iter().rev().fold(0, |acc, &di| acc * q as u64 + di as u64);
            prop_assert_eq!(back, x);
        }

        #[test]
        fn constant_offset_shifts_every_entry(q in 2u32..=7, m in 1usize..=3, d in 0u32..7, coeffs in proptest::collection::vec(0u32..7, 18)) {
            let d = d % q;
            let rows: Vec<Vec<u32>> = (0..q as usize - 1)
                .map(|l| (0..m).map(|k| coeffs[(l * m + k) % coeffs.len()] % q).collect())
                .collect();
            let f = EbfSpec::new(z(q as u64), m, 1, (1..=m).collect(), rows, 0).unwrap();
            let a = f.associated_sequence().unwrap();
            let b = f.with_c0(d).unwrap().associated_sequence().unwrap();
            prop_assert_eq!(a.len(), (q as usize).pow(m as u32));
            prop_assert_eq!(a.offset(d), b);
        }
    }
}
