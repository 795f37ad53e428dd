use proptest::prelude::*;
use seqcomp_core::seeds::{ccc_lengths, ccc_seed};
use seqcomp_core::{
    build_css_theorem1, build_zccs_theorem2, ccc_theorem4, feng_bound, mocss_theorem5, set_accf, Alphabet,
    Classifier, EbfSpec, Engine, FamilyDocument, Negation, Role, SetFamily, Theorem2Params, VerifyPolicy,
};

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn unit(q: u32, pick: u32) -> u32 {
    let units: Vec<u32> = (1..q).filter(|a| gcd(*a, q) == 1).collect();
    units[pick as usize % units.len()]
}

fn perm(w: usize, seed: u64) -> Vec<usize> {
    let mut pi: Vec<usize> = (1..=w).collect();
    let mut s = seed;
    for i in (1..w).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        pi.swap(i, (s >> 33) as usize % (i + 1));
    }
    pi
}

fn theorem2() -> impl Strategy<Value = Theorem2Params> {
    (2u32..=5, 2usize..=3, any::<u32>(), any::<u32>(), any::<u64>(), proptest::collection::vec(0u32..5, 12), 0u32..5)
        .prop_flat_map(|(q, m, a, b, s, c, c0)| (0..m).prop_map(move |v| (q, m, v, a, b, s, c.clone(), c0)))
        .prop_map(|(q, m, v, a, b, s, c, c0)| {
            let coeffs = (0..q as usize - 1).map(|l| (0..m).map(|k| c[l * 3 + k] % q).collect()).collect();
            Theorem2Params::new(Alphabet::new(q as u64).unwrap(), m, v, unit(q, a), unit(q, b), perm(m - v, s), coeffs, c0 % q)
                .unwrap()
        })
}

fn check_consistency(c: &Classifier, f: &SetFamily) -> Result<(), TestCaseError> {
    for set in f.sets() {
        let energy = set_accf(set, set, 0).unwrap();
        prop_assert_eq!(energy.as_integer(), Some((set.n() * set.len()) as i64));
    }
    let r = c.classify(f);
    if r.is_mocss {
        prop_assert_eq!(r.zcz_width, r.l);
    }
    if r.is_ccc {
        prop_assert!(r.is_mocss && r.m == r.n);
    }
    if r.zcz_width > 0 {
        let b = feng_bound(r.m, r.n, r.l, r.zcz_width).unwrap();
        prop_assert!(b.feng_ok() && r.m <= r.n * (r.l / r.zcz_width));
        prop_assert_eq!(b.feng_optimal, r.feng_optimal);
    }
    prop_assert_eq!(c.stats().disagreements, 0);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn theorem2_families_are_consistent_and_optimal(p in theorem2()) {
        let c = Classifier::new(Engine::Both);
        let f = build_zccs_theorem2(&p, VerifyPolicy::Never).unwrap();
        let (m, n, l, z) = p.claimed();
        prop_assert_eq!((f.m(), f.n(), f.len()), (m, n, l));
        prop_assert!(c.is_zccs(&f, z));
        prop_assert!(c.classify(&f).feng_optimal);
        check_consistency(&c, &f)?;
    }

    #[test]
    fn theorem1_sets_round_trip_through_documents(p in theorem2()) {
        let (q, m) = (p.q(), p.m());
        let z = Alphabet::new(q as u64).unwrap();
        let coeffs = vec![vec![1; m]; q as usize - 1];
        let f = EbfSpec::new(z, m, 1, perm(m, m as u64), coeffs, 0).unwrap();
        let set = build_css_theorem1(&f, VerifyPolicy::Never).unwrap();
        let family = SetFamily::new(vec![set]).unwrap();
        let doc = FamilyDocument::new(&family, Role::Css, None);
        let back = FamilyDocument::from_json(&doc.to_canonical_json()).unwrap().to_family().unwrap();
        prop_assert_eq!(&back, &family);
        let c = Classifier::new(Engine::Both);
        prop_assert!(c.is_css(back.set(0)));
        check_consistency(&c, &back)?;
    }

    #[test]
    fn seed_products_are_cccs(i in 0usize..6, j in 0usize..6) {
        let lengths = ccc_lengths(20);
        let (a, b) = (ccc_seed(lengths[i % lengths.len()]).unwrap(), ccc_seed(lengths[j % lengths.len()]).unwrap());
        let c = Classifier::new(Engine::Both);
        if a.m() % 2 == 0 {
            let f = ccc_theorem4(&a, &b, VerifyPolicy::Never).unwrap();
            prop_assert!(c.classify(&f).is_ccc);
            check_consistency(&c, &f)?;
        }
        let f = mocss_theorem5(&a, &b, Negation::HalfTurn, VerifyPolicy::Never).unwrap();
        prop_assert_eq!(f.len(), a.len() + b.len());
        prop_assert!(c.classify(&f).is_mocss);
        check_consistency(&c, &f)?;
    }
}
