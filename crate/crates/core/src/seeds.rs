//! Binary Golay complementary pairs and the `(2, L)` complete complementary
//! codes built from them.
//!
//! Kernels of length 1, 2, 10 and 26 live in `data/golay_kernels.json` and are
//! checked for complementarity the first time the catalog is touched; a bad
//! entry panics. Longer pairs come from repeated doubling, so the reachable
//! lengths are `2^a`, `2^a·10` and `2^a·26`.

use std::sync::OnceLock;

use crate::constructions::{concat, VerifiedCcc};
use crate::correlation::Classifier;
use crate::document::{FamilyDocument, Role};
use crate::error::{Error, Result};
use crate::sequence::{ResidueSequence, SequenceSet, SetFamily};

const KERNEL_DATA: &str = include_str!("../data/golay_kernels.json");

pub const KERNEL_LENGTHS: [usize; 4] = [1, 2, 10, 26];

/// Two binary sequences whose autocorrelations cancel at every nonzero shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GolayPair {
    a: ResidueSequence,
    b: ResidueSequence,
}

impl GolayPair {
    pub fn new(a: ResidueSequence, b: ResidueSequence) -> Result<Self> {
        if a.q() != 2 {
            return Err(Error::Precondition(format!("Golay pairs are binary, got q = {}", a.q())));
        }
        let set = SequenceSet::new(vec![a.clone(), b.clone()])?;
        if let Some(tau) = Classifier::default().css_violation(&set) {
            return Err(Error::VerificationRefused(format!(
                "not a Golay pair: autocorrelation sum nonzero at tau = {tau}"
            )));
        }
        Ok(GolayPair { a, b })
    }

    pub fn a(&self) -> &ResidueSequence {
        &self.a
    }

    pub fn b(&self) -> &ResidueSequence {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn to_set(&self) -> SequenceSet {
        SequenceSet::new(vec![self.a.clone(), self.b.clone()]).expect("pair rows share length")
    }
}

fn catalog() -> &'static [GolayPair] {
    static CATALOG: OnceLock<Vec<GolayPair>> = OnceLock::new();
    CATALOG.get_or_init(|| load_catalog(KERNEL_DATA).unwrap_or_else(|e| panic!("Golay kernel catalog: {e}")))
}

fn load_catalog(text: &str) -> Result<Vec<GolayPair>> {
    let docs: Vec<FamilyDocument> = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    docs.iter()
        .map(|doc| {
            if doc.role != Role::Gcp {
                return Err(Error::Document(format!("catalog entry has role {}", doc.role)));
            }
            let family = doc.to_family()?;
            if family.m() != 1 || family.n() != 2 {
                return Err(Error::Document("catalog entry is not a single pair".into()));
            }
            let rows = family.set(0).rows();
            GolayPair::new(rows[0].clone(), rows[1].clone())
        })
        .collect()
}

/// One of the stored kernels, `l ∈ {1, 2, 10, 26}`.
pub fn golay_kernel(l: usize) -> Result<GolayPair> {
    catalog().iter().find(|p| p.len() == l).cloned().ok_or(Error::UnknownKernel(l))
}

/// `(a|b, a|(b ⊕ 1))`
pub fn golay_double(p: &GolayPair) -> GolayPair {
    let a = concat(&p.a, &p.b).expect("pair shares an alphabet");
    let b = concat(&p.a, &p.b.offset(1)).expect("pair shares an alphabet");
    GolayPair { a, b }
}

/// Splits `l = 2^k · kernel`, preferring the largest kernel.
fn decompose(l: usize) -> Option<(usize, u32)> {
    if l == 0 {
        return None;
    }
    let k = l.trailing_zeros();
    let odd = l >> k;
    match odd {
        1 => Some((1, k)),
        5 if k >= 1 => Some((10, k - 1)),
        13 if k >= 1 => Some((26, k - 1)),
        _ => None,
    }
}

/// A Golay pair of length `l = 2^a`, `2^a·10` or `2^a·26`.
pub fn golay_pair(l: usize) -> Result<GolayPair> {
    let (kernel, doublings) = decompose(l).ok_or_else(|| {
        Error::Unsupported(format!("no Golay pair of length {l} from doubling the kernels 1, 2, 10, 26"))
    })?;
    let mut p = golay_kernel(kernel)?;
    for _ in 0..doublings {
        p = golay_double(&p);
    }
    Ok(p)
}

pub fn is_reachable_length(l: usize) -> bool {
    decompose(l).is_some()
}

/// Every reachable pair length up to `max`, ascending.
pub fn ccc_lengths(max: usize) -> Vec<usize> {
    (1..=max).filter(|&l| is_reachable_length(l)).collect()
}

/// `{[a; b], [rev(b ⊕ 1); rev(a)]}`, checked to be a `(2, L)`-CCC.
pub fn gcp_to_ccc(p: &GolayPair) -> Result<VerifiedCcc> {
    let mate = SequenceSet::new(vec![p.b.offset(1).reversed(), p.a.reversed()])?;
    let family = SetFamily::new(vec![p.to_set(), mate])?;
    VerifiedCcc::certify(family).map_err(|e| Error::VerificationFailed(format!("mate construction: {e}")))
}

pub fn ccc_seed(l: usize) -> Result<VerifiedCcc> {
    gcp_to_ccc(&golay_pair(l)?)
}

/// A seed family by name: `ccc-2xL` for a `(2, L)`-CCC, `gcp-L` for a pair.
/// An optional `seeds:` prefix is accepted.
pub fn by_name(name: &str) -> Result<(SetFamily, Role)> {
    let key = name.strip_prefix("seeds:").unwrap_or(name);
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Unsupported(format!("seed {name:?}: bad length {s:?}")))
    };
    if let Some(l) = key.strip_prefix("ccc-2x") {
        Ok((ccc_seed(parse(l)?)?.into_family(), Role::Ccc))
    } else if let Some(l) = key.strip_prefix("gcp-") {
        let set = golay_pair(parse(l)?)?.to_set();
        Ok((SetFamily::new(vec![set])?, Role::Gcp))
    } else {
        Err(Error::Unsupported(format!("unknown seed {name:?} (expected ccc-2xL or gcp-L)")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::classify;
    use crate::sequence::Alphabet;

    #[test]
    fn kernels_load_and_verify() {
        for l in KERNEL_LENGTHS {
            assert_eq!(golay_kernel(l).unwrap().len(), l);
        }
        assert_eq!(golay_kernel(1).unwrap().a().as_slice(), &[0]);
        assert_eq!(golay_kernel(2).unwrap().b().as_slice(), &[0, 1]);
        assert!(matches!(golay_kernel(4), Err(Error::UnknownKernel(4))));
    }

    #[test]
    fn doubling_reproduces_length_two_kernel() {
        assert_eq!(golay_double(&golay_kernel(1).unwrap()), golay_kernel(2).unwrap());
    }

    #[test]
    fn doubling_preserves_complementarity() {
        for l in KERNEL_LENGTHS {
            let mut p = golay_kernel(l).unwrap();
            for _ in 0..5 {
                p = golay_double(&p);
                let again = GolayPair::new(p.a().clone(), p.b().clone()).unwrap();
                assert_eq!(again, p);
            }
        }
    }

    #[test]
    fn reachable_lengths() {
        assert_eq!(ccc_lengths(40), vec![1, 2, 4, 8, 10, 16, 20, 26, 32, 40]);
        assert!(golay_pair(52).is_ok());
        assert!(golay_pair(3).is_err());
        assert!(golay_pair(0).is_err());
    }

    #[test]
    fn mates_are_cccs() {
        for l in [1, 2, 4, 10, 20, 26] {
            let c = ccc_seed(l).unwrap();
            let r = classify(&c);
            assert!(r.is_ccc && r.m == 2 && r.l == l);
        }
    }

    #[test]
    fn rejects_non_pairs_and_bad_catalogs() {
        let z2 = Alphabet::new(2).unwrap();
        let a = ResidueSequence::new(z2, vec![0, 0]).unwrap();
        assert!(matches!(GolayPair::new(a.clone(), a), Err(Error::VerificationRefused(_))));
        assert!(load_catalog("[]").unwrap().is_empty());
        let bad = KERNEL_DATA.replacen("\"gcp\"", "\"css\"", 1);
        assert!(load_catalog(&bad).is_err());
    }

    #[test]
    fn seeds_by_name() {
        let (f, role) = by_name("seeds:ccc-2x10").unwrap();
        assert_eq!((f.m(), f.n(), f.len(), role), (2, 2, 10, Role::Ccc));
        let (f, role) = by_name("gcp-26").unwrap();
        assert_eq!((f.m(), f.n(), f.len(), role), (1, 2, 26, Role::Gcp));
        assert!(by_name("ccc-3x9").is_err());
        assert!(by_name("ccc-2x7").is_err());
    }
}
