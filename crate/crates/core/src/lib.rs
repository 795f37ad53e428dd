//! Complementary sequence sets, Z-complementary code sets, mutually orthogonal
//! complementary sets and complete complementary codes over `Z_q`, with an
//! exact correlation engine to check them.
//!
//! ```
//! use seqcomp_core::{build_zccs_theorem2, classify, Alphabet, Theorem2Params, VerifyPolicy};
//!
//! let z3 = Alphabet::new(3).unwrap();
//! let params = Theorem2Params::new(z3, 3, 1, 2, 1, vec![1, 2], vec![vec![1, 2, 1], vec![0, 1, 2]], 0).unwrap();
//! let family = build_zccs_theorem2(&params, VerifyPolicy::Never).unwrap();
//! let report = classify(&family);
//! assert_eq!((report.m, report.n, report.l, report.zcz_width), (9, 3, 27, 9));
//! assert!(report.feng_optimal);
//! ```

pub mod analysis;
pub mod constructions;
pub mod correlation;
pub mod cyclotomic;
pub mod document;
pub mod ebf;
pub mod error;
pub mod reference;
pub mod seeds;
pub mod sequence;

pub use analysis::{compare_lengths, enumerate_theorem5_lengths, feng_bound, BoundVerdict, LengthComparison, LengthWitness};
pub use constructions::{
    build_css_theorem1, build_zccs_theorem2, ccc_theorem4, concat, half_turn_set, interleave,
    interleave_escss_theorem3, mocss_lemma4, mocss_theorem5, negate_set, phi, Negation, Theorem2Params,
    VerifiedCcc, VerifyPolicy,
};
pub use correlation::{
    accf, classify, is_css, is_escss, is_zccs, set_accf, zcz_width, ClassificationReport, Classifier,
    CorrelationProfile, Engine, EngineStats, Violation,
};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicField, CyclotomicSum, IntPoly, FLOAT_ZERO_THRESHOLD};
pub use document::{check_claim, ClaimOutcome, ClaimedParams, FamilyDocument, Role};
pub use ebf::{qary_digits, EbfSpec};
pub use error::{Error, Result};
pub use seeds::{ccc_seed, gcp_to_ccc, golay_double, golay_kernel, golay_pair, GolayPair};
pub use sequence::{Alphabet, ResidueSequence, SequenceSet, SetFamily, MAX_Q};
