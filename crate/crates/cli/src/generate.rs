use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use seqcomp_core::{
    build_css_theorem1, build_zccs_theorem2, ccc_theorem4, interleave_escss_theorem3, mocss_lemma4, mocss_theorem5,
    seeds, Alphabet, ClaimedParams, Classifier, EbfSpec, Engine, FamilyDocument, Role, SetFamily, Theorem2Params,
};

use crate::inputs::{load_ccc, load_set, to_csv, write_output};
use crate::{Construction, EbfArgs, Format, OutputArgs, Status};

/// `["1:1,2,1", "2:0,1,2"]` → rows `c_1`, `c_2`; missing degrees below the
/// highest given are zero rows.
fn coefficient_rows(specs: &[String], m: usize) -> Result<Vec<Vec<u32>>> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for spec in specs {
        let (degree, values) = spec
            .split_once(':')
            .with_context(|| format!("coefficient {spec:?} is not of the form l:c_1,...,c_m"))?;
        let l: usize = degree.parse().with_context(|| format!("degree in {spec:?}"))?;
        if l == 0 {
            bail!("coefficient degree must be at least 1 (use --c0 for the constant)");
        }
        let row = values
            .split(',')
            .map(|v| v.trim().parse::<u32>().with_context(|| format!("value {v:?} in {spec:?}")))
            .collect::<Result<Vec<_>>>()?;
        if rows.len() < l {
            rows.resize(l, vec![0; m]);
        }
        rows[l - 1] = row;
    }
    Ok(rows)
}

fn ebf_params(e: &EbfArgs, coeffs: &[Vec<u32>]) -> Value {
    json!({ "q": e.q, "m": e.m, "alpha": e.alpha, "pi": e.pi, "coeffs": coeffs, "c0": e.c0 })
}

struct Built {
    family: SetFamily,
    role: Role,
    claimed: ClaimedParams,
    construction: &'static str,
    parameters: Value,
}

fn full(family: &SetFamily, z: Option<usize>) -> ClaimedParams {
    ClaimedParams::new(family.m(), family.n(), family.len(), z)
}

fn build(construction: &Construction, engine: Engine) -> Result<(Built, &OutputArgs)> {
    let classifier = Classifier::new(engine);
    let built = match construction {
        Construction::Theorem1 { ebf, output } => {
            let coeffs = coefficient_rows(&ebf.coeffs, ebf.m)?;
            let parameters = ebf_params(ebf, &coeffs);
            let f = EbfSpec::new(Alphabet::new(ebf.q)?, ebf.m, ebf.alpha, ebf.pi.clone(), coeffs, ebf.c0)?;
            let set = build_css_theorem1(&f, output.verify)?;
            let family = SetFamily::new(vec![set])?;
            let claimed = full(&family, None);
            (Built { family, role: Role::Css, claimed, construction: "theorem1", parameters }, output)
        }
        Construction::Theorem2 { ebf, v, beta, output } => {
            let coeffs = coefficient_rows(&ebf.coeffs, ebf.m)?;
            let mut parameters = ebf_params(ebf, &coeffs);
            parameters["v"] = json!(v);
            parameters["beta"] = json!(beta);
            let params = Theorem2Params::new(
                Alphabet::new(ebf.q)?,
                ebf.m,
                *v,
                ebf.alpha,
                *beta,
                ebf.pi.clone(),
                coeffs,
                ebf.c0,
            )?;
            let family = build_zccs_theorem2(&params, output.verify)?;
            let (m, n, l, z) = params.claimed();
            let role = if *v == 0 { Role::Ccc } else { Role::Zccs };
            let claimed = ClaimedParams::new(m, n, l, Some(z));
            (Built { family, role, claimed, construction: "theorem2", parameters }, output)
        }
        Construction::Theorem3 { ccc, output } => {
            let c = load_ccc(ccc, &classifier)?;
            let family = interleave_escss_theorem3(&c, output.verify)?;
            let claimed = full(&family, None);
            let parameters = json!({ "ccc": ccc });
            (Built { family, role: Role::Escss, claimed, construction: "theorem3", parameters }, output)
        }
        Construction::Lemma4 { p_set, q_set, ccc, output } => {
            let (p, q) = (load_set(p_set)?, load_set(q_set)?);
            let c = load_ccc(ccc, &classifier)?;
            let family = mocss_lemma4(&p, &q, &c, output.verify)?;
            let claimed = full(&family, Some(family.len()));
            let parameters = json!({ "p_set": p_set, "q_set": q_set, "ccc": ccc });
            (Built { family, role: Role::Mocss, claimed, construction: "lemma4", parameters }, output)
        }
        Construction::Theorem4 { a, b, output } => {
            let (ca, cb) = (load_ccc(a, &classifier)?, load_ccc(b, &classifier)?);
            let family = ccc_theorem4(&ca, &cb, output.verify)?;
            let claimed = full(&family, Some(family.len()));
            let parameters = json!({ "a": a, "b": b });
            (Built { family, role: Role::Ccc, claimed, construction: "theorem4", parameters }, output)
        }
        Construction::Theorem5 { a, b, negation, output } => {
            let (ca, cb) = (load_ccc(a, &classifier)?, load_ccc(b, &classifier)?);
            let family = mocss_theorem5(&ca, &cb, *negation, output.verify)?;
            let claimed = full(&family, Some(family.len()));
            let parameters = json!({ "a": a, "b": b, "negation": negation });
            (Built { family, role: Role::Mocss, claimed, construction: "theorem5", parameters }, output)
        }
        Construction::Gcp { length, output } => {
            let set = seeds::golay_pair(*length)?.to_set();
            let family = SetFamily::new(vec![set])?;
            let claimed = full(&family, None);
            let parameters = json!({ "length": length });
            (Built { family, role: Role::Gcp, claimed, construction: "gcp", parameters }, output)
        }
        Construction::Ccc { length, output } => {
            let family = seeds::ccc_seed(*length)?.into_family();
            let claimed = full(&family, Some(family.len()));
            let parameters = json!({ "length": length });
            (Built { family, role: Role::Ccc, claimed, construction: "ccc", parameters }, output)
        }
    };
    Ok(built)
}

pub fn run(construction: Construction, engine: Engine) -> Result<Status> {
    let (built, output) = build(&construction, engine)?;
    let text = match output.format {
        Format::Csv => to_csv(&built.family)?,
        Format::Json => {
            let mut doc = FamilyDocument::new(&built.family, built.role, Some(built.claimed))
                .with_metadata("construction", built.construction)
                .with_metadata("parameters", built.parameters);
            if output.seed_metadata == "on" {
                doc = doc
                    .with_metadata("generator", format!("seqcomp {}", env!("CARGO_PKG_VERSION")))
                    .with_metadata("verify", output.verify.to_string());
            }
            doc.to_canonical_json()
        }
    };
    write_output(output.out.as_deref(), &text)?;
    Ok(Status::Verified)
}
