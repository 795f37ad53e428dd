use anyhow::Result;
use seqcomp_core::reference::{BINARY_MOCSS_LENGTHS, EBF_EXAMPLE, QUINARY_CSS, TERNARY_ZCCS};
use seqcomp_core::{
    build_css_theorem1, build_zccs_theorem2, compare_lengths, enumerate_theorem5_lengths, feng_bound, mocss_theorem5,
    seeds, Alphabet, Classifier, EbfSpec, Engine, Negation, SetFamily, Theorem2Params, VerifyPolicy,
};

use crate::{DemoName, Status};

/// First differing `(row, position)` and the number of differing symbols.
fn diff<'a>(got: impl IntoIterator<Item = &'a [u32]>, want: impl IntoIterator<Item = &'a [u32]>) -> (usize, Option<(usize, usize)>) {
    let mut count = 0;
    let mut first = None;
    for (r, (g, w)) in got.into_iter().zip(want).enumerate() {
        for (i, (a, b)) in g.iter().zip(w).enumerate() {
            if a != b {
                count += 1;
                first.get_or_insert((r, i));
            }
        }
    }
    (count, first)
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Verified
    } else {
        Status::Refuted
    }
}

fn example1() -> Result<Status> {
    let z3 = Alphabet::new(3)?;
    let specs = [
        EbfSpec::new(z3, 2, 1, vec![], vec![vec![1, 0]], 0)?,
        EbfSpec::new(z3, 2, 1, vec![], vec![vec![0, 1]], 0)?,
        EbfSpec::new(z3, 2, 1, vec![1, 2], vec![], 1)?,
    ];
    let mut ok = true;
    for ((name, f), want) in ["x1", "x2", "x1*x2+1"].iter().zip(&specs).zip(&EBF_EXAMPLE) {
        let got = f.associated_sequence()?;
        let same = got.as_slice() == want.as_slice();
        ok &= same;
        println!("{name:<8} {got}  {}", if same { "match" } else { "MISMATCH" });
    }
    println!("{}", if ok { "three sequences match" } else { "mismatch" });
    Ok(status(ok))
}

fn example2(classifier: &Classifier) -> Result<Status> {
    let f = EbfSpec::new(
        Alphabet::new(5)?,
        2,
        1,
        vec![2, 1],
        vec![vec![1, 3], vec![2, 4], vec![1, 1], vec![0, 3]],
        0,
    )?;
    let set = build_css_theorem1(&f, VerifyPolicy::Never)?;
    for (n, row) in set.rows().iter().enumerate() {
        println!("f{} = {row}", n + 1);
    }
    let printed = SetFamily::from_nested(Alphabet::new(5)?, vec![QUINARY_CSS.iter().map(|r| r.to_vec()).collect()])?;
    let generated_css = classifier.is_css(&set);
    let printed_css = classifier.is_css(printed.set(0));
    println!("generated set is a CSS: {generated_css}");
    println!("printed set is a CSS: {printed_css}");
    let (count, first) = diff(set.rows().iter().map(|r| r.as_slice()), QUINARY_CSS.iter().map(|r| r.as_slice()));
    match first {
        None => println!("5 rows x 25 symbols, 0 mismatches"),
        Some((r, i)) => println!(
            "5 rows x 25 symbols, {count} mismatches; first at row {r} (printed f{}), position {i}: generated {}, printed {}",
            r + 1,
            set.row(r).as_slice()[i],
            QUINARY_CSS[r][i]
        ),
    }
    Ok(status(count == 0 && generated_css))
}

fn table1(classifier: &Classifier) -> Result<Status> {
    let params = Theorem2Params::new(Alphabet::new(3)?, 3, 1, 2, 1, vec![1, 2], vec![vec![1, 2, 1], vec![0, 1, 2]], 0)?;
    let family = build_zccs_theorem2(&params, VerifyPolicy::Never)?;
    let got = family.sets().iter().flat_map(|s| s.rows().iter().map(|r| r.as_slice()));
    let want = TERNARY_ZCCS.iter().flat_map(|s| s.iter().map(|r| r.as_slice()));
    let (count, first) = diff(got, want);
    let rows = family.m() * family.n();
    match first {
        None => println!("{rows} rows x {} symbols, 0 mismatches", family.len()),
        Some((r, i)) => println!(
            "{rows} rows x {} symbols, {count} mismatches; first at set {}, row {}, position {i}",
            family.len(),
            r / 3,
            r % 3
        ),
    }
    let report = classifier.classify(&family);
    let bound = feng_bound(report.m, report.n, report.l, report.zcz_width.max(1))?;
    println!(
        "(M, N, L, Z) = ({}, {}, {}, {}); feng bound N*floor(L/Z) = {}; optimal: {}",
        report.m, report.n, report.l, report.zcz_width, bound.feng_rhs, report.feng_optimal
    );
    Ok(status(count == 0 && report.zcz_width == 9 && report.feng_optimal))
}

fn remark_2_4_11(classifier: &Classifier) -> Result<Status> {
    let a = seeds::ccc_seed(1)?;
    let b = seeds::ccc_seed(10)?;
    let mut ok = false;
    for negation in [Negation::HalfTurn, Negation::AdditiveInverse] {
        let family = mocss_theorem5(&a, &b, negation, VerifyPolicy::Never)?;
        let r = classifier.classify(&family);
        let verified = r.is_mocss && (r.m, r.n, r.l) == (2, 4, 11);
        println!(
            "-B by {negation}: (M, N, L) = ({}, {}, {}), zcz width {}, MOCSS {}",
            r.m,
            r.n,
            r.l,
            r.zcz_width,
            if verified { "verified" } else { "NOT verified" }
        );
        if negation == Negation::HalfTurn {
            ok = verified;
        }
    }
    println!("{}", if ok { "MOCSS verified, params (2,4,11)" } else { "no (2,4,11)-MOCSS" });
    Ok(status(ok))
}

fn table3() -> Result<Status> {
    let found = enumerate_theorem5_lengths(40)?;
    let cmp = compare_lengths(&found, &BINARY_MOCSS_LENGTHS);
    for w in &cmp.reproduced {
        println!("{:>3} = {} + {}  reproduced", w.length, w.l1, w.l2);
    }
    for l in &cmp.unverified_here {
        println!("{l:>3}  unverified-here (not a sum of two catalog CCC lengths)");
    }
    for w in &cmp.additional {
        println!("{:>3} = {} + {}  additional (not in the printed list)", w.length, w.l1, w.l2);
    }
    let new_lengths = [11, 27].iter().all(|l| cmp.reproduced.iter().any(|w| w.length == *l));
    println!(
        "{} of {} printed lengths reproduced, {} unverified-here, {} additional; 11 and 27 reached: {new_lengths}",
        cmp.reproduced.len(),
        BINARY_MOCSS_LENGTHS.len(),
        cmp.unverified_here.len(),
        cmp.additional.len()
    );
    Ok(status(new_lengths))
}

pub fn run(name: DemoName, engine: Engine) -> Result<Status> {
    let classifier = Classifier::new(engine);
    match name {
        DemoName::Example1 => example1(),
        DemoName::Example2 => example2(&classifier),
        DemoName::Table1 => table1(&classifier),
        DemoName::Remark2411 => remark_2_4_11(&classifier),
        DemoName::Table3 => table3(),
    }
}
