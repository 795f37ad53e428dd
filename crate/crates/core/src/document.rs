//! JSON interchange for families, and checking a declared role against the
//! correlation engine.
//!
//! ```text
//! {
//!   "schema_version": "1",
//!   "q": 3,
//!   "role": "zccs",
//!   "claimed_params": {"M": 9, "N": 3, "L": 27, "Z": 9},
//!   "metadata": {...},
//!   "sets": [[[0,1,2,...], ...], ...]
//! }
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::correlation::{ClassificationReport, Classifier, Violation};
use crate::error::{Error, Result};
use crate::sequence::{Alphabet, SetFamily};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Css,
    Escss,
    Zccs,
    Mocss,
    Ccc,
    Gcp,
    Raw,
}

impl Role {
    pub const ALL: [Role; 7] = [Role::Css, Role::Escss, Role::Zccs, Role::Mocss, Role::Ccc, Role::Gcp, Role::Raw];

    pub fn as_str(self) -> &'static str {
        match self {
            Role::Css => "css",
            Role::Escss => "escss",
            Role::Zccs => "zccs",
            Role::Mocss => "mocss",
            Role::Ccc => "ccc",
            Role::Gcp => "gcp",
            Role::Raw => "raw",
        }
    }

    /// Strongest role a report supports. Single-set families are described
    /// by their set property, multi-set families by their zone.
    pub fn infer(report: &ClassificationReport) -> Role {
        if report.m == 1 {
            if report.is_css && report.q == 2 && report.n == 2 {
                Role::Gcp
            } else if report.is_css {
                Role::Css
            } else if report.is_escss {
                Role::Escss
            } else {
                Role::Raw
            }
        } else if report.is_ccc {
            Role::Ccc
        } else if report.is_mocss {
            Role::Mocss
        } else if report.zcz_width >= 1 {
            Role::Zccs
        } else {
            Role::Raw
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Role::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::Document(format!("unknown role {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ClaimedParams {
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(rename = "Z", default, skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
}

impl ClaimedParams {
    pub fn new(m: usize, n: usize, l: usize, z: Option<usize>) -> Self {
        ClaimedParams { m: Some(m), n: Some(n), l: Some(l), z }
    }

    pub fn is_empty(&self) -> bool {
        *self == ClaimedParams::default()
    }

    fn dimension_errors(&self, family: &SetFamily) -> Vec<String> {
        [("M", self.m, family.m()), ("N", self.n, family.n()), ("L", self.l, family.len())]
            .into_iter()
            .filter_map(|(name, claimed, actual)| match claimed {
                Some(c) if c != actual => Some(format!("claimed {name} = {c} but family has {name} = {actual}")),
                _ => None,
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyDocument {
    pub schema_version: String,
    pub q: u32,
    pub role: Role,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_params: Option<ClaimedParams>,
    #[serde(default)]
    pub metadata: BTreeMap<String, Value>,
    pub sets: Vec<Vec<Vec<u32>>>,
}

impl FamilyDocument {
    pub fn new(family: &SetFamily, role: Role, claimed: Option<ClaimedParams>) -> Self {
        FamilyDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            q: family.q(),
            role,
            claimed_params: claimed,
            metadata: BTreeMap::new(),
            sets: family.to_nested(),
        }
    }

    pub fn with_metadata(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.metadata.insert(key.to_string(), value.into());
        self
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: FamilyDocument = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Document(format!(
                "schema_version {:?} is not supported (expected {SCHEMA_VERSION:?})",
                doc.schema_version
            )));
        }
        Ok(doc)
    }

    /// Validates residues and shape, and checks the dimensions in
    /// `claimed_params` against the data.
    pub fn to_family(&self) -> Result<SetFamily> {
        let family = SetFamily::from_nested(Alphabet::new(self.q as u64)?, self.sets.clone())?;
        if let Some(c) = &self.claimed_params {
            if let Some(msg) = c.dimension_errors(&family).into_iter().next() {
                return Err(Error::DimensionMismatch(msg));
            }
            if matches!(c.z, Some(z) if z == 0 || z > family.len()) {
                return Err(Error::Document(format!("claimed Z = {} outside 1..={}", c.z.unwrap(), family.len())));
            }
        }
        Ok(family)
    }

    /// Pretty JSON with every sequence on a single line. Byte-stable: keys in
    /// fixed order, metadata sorted.
    pub fn to_canonical_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"schema_version\": {},", json(&self.schema_version));
        let _ = writeln!(out, "  \"q\": {},", self.q);
        let _ = writeln!(out, "  \"role\": {},", json(&self.role));
        if let Some(c) = &self.claimed_params {
            let _ = writeln!(out, "  \"claimed_params\": {},", json(c));
        }
        if self.metadata.is_empty() {
            out.push_str("  \"metadata\": {},\n");
        } else {
            out.push_str("  \"metadata\": {\n");
            let n = self.metadata.len();
            for (i, (k, v)) in self.metadata.iter().enumerate() {
                let _ = writeln!(out, "    {}: {}{}", json(k), json(v), if i + 1 < n { "," } else { "" });
            }
            out.push_str("  },\n");
        }
        out.push_str("  \"sets\": [\n");
        for (si, set) in self.sets.iter().enumerate() {
            out.push_str("    [\n");
            for (ri, row) in set.iter().enumerate() {
                let sep = if ri + 1 < set.len() { "," } else { "" };
                let _ = writeln!(out, "      {}{sep}", json(row));
            }
            let sep = if si + 1 < self.sets.len() { "," } else { "" };
            let _ = writeln!(out, "    ]{sep}");
        }
        out.push_str("  ]\n}\n");
        out
    }
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

/// Result of checking a declared role against a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub role: Role,
    pub verified: bool,
    pub reasons: Vec<String>,
    /// First failing correlation condition, when the failure is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

/// Checks `role` (and the dimensions and zone in `params`) against `family`.
pub fn check_claim(
    classifier: &Classifier,
    family: &SetFamily,
    role: Role,
    params: &ClaimedParams,
) -> ClaimOutcome {
    let mut reasons = params.dimension_errors(family);
    let mut violation = None;
    let set_check = |viol: &dyn Fn(&crate::sequence::SequenceSet) -> Option<isize>| {
        family.sets().iter().enumerate().find_map(|(i, s)| viol(s).map(|tau| (i, tau)))
    };
    let l = family.len();
    match role {
        Role::Raw => {}
        Role::Css | Role::Gcp => {
            if role == Role::Gcp && (family.q() != 2 || family.m() != 1 || family.n() != 2) {
                reasons.push(format!(
                    "a Golay pair is one binary set of two rows (got q = {}, M = {}, N = {})",
                    family.q(),
                    family.m(),
                    family.n()
                ));
            }
            if let Some((i, tau)) = set_check(&|s| classifier.css_violation(s)) {
                reasons.push(format!("set {i} is not complementary: autocorrelation sum nonzero at tau = {tau}"));
                violation = Some(Violation { i, j: i, tau, counts: Vec::new() });
            }
        }
        Role::Escss => {
            if let Some((i, tau)) = set_check(&|s| classifier.escss_violation(s)) {
                reasons.push(format!("set {i} is not even-shift complementary: nonzero at tau = {tau}"));
                violation = Some(Violation { i, j: i, tau, counts: Vec::new() });
            }
        }
        Role::Zccs | Role::Mocss | Role::Ccc => {
            let z = match role {
                Role::Zccs => params.z.unwrap_or(1),
                _ => {
                    if let Some(z) = params.z.filter(|&z| z != l) {
                        reasons.push(format!("a {role} has Z = L = {l}, claimed Z = {z}"));
                    }
                    l
                }
            };
            if role == Role::Ccc && family.m() != family.n() {
                reasons.push(format!("a CCC has M = N (got M = {}, N = {})", family.m(), family.n()));
            }
            if z == 0 || z > l {
                reasons.push(format!("zone width Z = {z} outside 1..={l}"));
            } else if let Some(v) = classifier.zccs_violation(family, z) {
                reasons.push(format!("zero correlation zone Z = {z} violated at {v}"));
                violation = Some(v);
            }
        }
    }
    ClaimOutcome { role, verified: reasons.is_empty(), reasons, violation }
}
