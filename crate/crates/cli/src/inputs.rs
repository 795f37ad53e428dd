use std::fs;
use std::io::{self, Read, Write};

use anyhow::{bail, Context, Result};
use seqcomp_core::{seeds, Classifier, FamilyDocument, SequenceSet, SetFamily, VerifiedCcc};

pub fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

pub fn read_document(path: &str) -> Result<FamilyDocument> {
    let text = read_text(path)?;
    FamilyDocument::from_json(&text).with_context(|| format!("parsing {path}"))
}

/// A family from a `seeds:` name or a document path.
pub fn load_family(reference: &str) -> Result<SetFamily> {
    if reference.starts_with("seeds:") {
        return Ok(seeds::by_name(reference)?.0);
    }
    let doc = read_document(reference)?;
    doc.to_family().with_context(|| format!("in {reference}"))
}

/// A single set: `path#k` picks set `k`, otherwise the family must hold one set.
pub fn load_set(reference: &str) -> Result<SequenceSet> {
    let (path, index) = match reference.rsplit_once('#') {
        Some((p, k)) => (p, Some(k.parse::<usize>().with_context(|| format!("set index in {reference:?}"))?)),
        None => (reference, None),
    };
    let family = load_family(path)?;
    match index {
        Some(k) if k < family.m() => Ok(family.set(k).clone()),
        Some(k) => bail!("{path} has {} sets, no set {k}", family.m()),
        None if family.m() == 1 => Ok(family.set(0).clone()),
        None => bail!("{path} has {} sets; select one with {path}#k", family.m()),
    }
}

pub fn load_ccc(reference: &str, classifier: &Classifier) -> Result<VerifiedCcc> {
    let family = load_family(reference)?;
    VerifiedCcc::certify_with(family, classifier).with_context(|| format!("input {reference}"))
}

pub fn write_output(out: Option<&str>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {path}")),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

pub fn to_csv(family: &SetFamily) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["set_index".to_string(), "row_index".to_string()];
    header.extend((0..family.len()).map(|i| format!("s{i}")));
    w.write_record(&header)?;
    for (si, set) in family.sets().iter().enumerate() {
        for (ri, row) in set.rows().iter().enumerate() {
            let mut record = vec![si.to_string(), ri.to_string()];
            record.extend(row.as_slice().iter().map(u32::to_string));
            w.write_record(&record)?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
