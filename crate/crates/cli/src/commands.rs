use anyhow::Result;
use serde_json::{json, Value};
use seqcomp_core::{check_claim, feng_bound, ClaimedParams, ClassificationReport, Classifier, Engine, Role};

use crate::inputs::{load_family, read_document, to_csv, write_output};
use crate::{Status, VerifyArgs};

fn bounds(report: &ClassificationReport) -> Value {
    match feng_bound(report.m, report.n, report.l, report.zcz_width) {
        Ok(b) => json!(b),
        Err(_) => Value::Null,
    }
}

fn engine_json(classifier: &Classifier) -> Value {
    json!({ "engine": classifier.engine(), "stats": classifier.stats() })
}

fn print(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json value"));
}

pub fn verify(args: &VerifyArgs, engine: Engine) -> Result<Status> {
    let doc = read_document(&args.input)?;
    let family = doc.to_family()?;
    let (role, params) = match args.role {
        Some(role) => (role, ClaimedParams { m: args.m, n: args.n, l: args.l, z: args.z }),
        None => {
            let mut p = doc.claimed_params.unwrap_or_default();
            p.m = args.m.or(p.m);
            p.n = args.n.or(p.n);
            p.l = args.l.or(p.l);
            p.z = args.z.or(p.z);
            (doc.role, p)
        }
    };
    let classifier = Classifier::new(engine);
    let mut outcome = check_claim(&classifier, &family, role, &params);
    let report = classifier.classify(&family);
    let stats = classifier.stats();
    if stats.disagreements > 0 {
        outcome.verified = false;
        outcome.reasons.push(format!("exact and float engines disagreed on {} zero tests", stats.disagreements));
    }
    print(&json!({
        "claim": { "role": role, "params": params },
        "verified": outcome.verified,
        "reasons": outcome.reasons,
        "first_violation": outcome.violation,
        "classification": report,
        "bounds": bounds(&report),
        "engine": engine_json(&classifier),
    }));
    Ok(if outcome.verified { Status::Verified } else { Status::Refuted })
}

pub fn classify(input: &str, engine: Engine) -> Result<Status> {
    let family = load_family(input)?;
    let classifier = Classifier::new(engine);
    let report = classifier.classify(&family);
    print(&json!({
        "role": Role::infer(&report),
        "classification": report,
        "bounds": bounds(&report),
        "engine": engine_json(&classifier),
    }));
    Ok(Status::Verified)
}

pub fn export(input: &str, out: Option<&str>) -> Result<Status> {
    let family = load_family(input)?;
    write_output(out, &to_csv(&family)?)?;
    Ok(Status::Verified)
}
