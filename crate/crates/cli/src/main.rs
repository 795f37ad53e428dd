use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use seqcomp_core::{Engine, Error as CoreError, Negation, Role, VerifyPolicy};

mod commands;
mod demo;
mod generate;
mod inputs;

#[derive(Parser, Debug)]
#[command(name = "seqcomp", version, about = "Generate and verify complementary sequence families")]
struct Cli {
    /// Zero-test engine for correlation sums.
    #[arg(long, global = true, env = "SEQCOMP_ENGINE", default_value = "exact", value_parser = parse_engine)]
    engine: Engine,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family and write it as a JSON document.
    Generate {
        #[command(subcommand)]
        construction: Construction,
    },
    /// Check a document's declared (or a given) role and parameters. Exit 0 iff verified.
    Verify(VerifyArgs),
    /// Report every correlation property of a document.
    Classify {
        /// Document path, or `-` for standard input.
        input: String,
    },
    /// Write a document as flat CSV: set_index, row_index, symbols...
    Export {
        input: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Reproduce a published example and diff it against the embedded data.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    input: String,
    /// Role to check instead of the document's own.
    #[arg(long, value_parser = parse_role)]
    role: Option<Role>,
    #[arg(long = "M")]
    m: Option<usize>,
    #[arg(long = "N")]
    n: Option<usize>,
    #[arg(long = "L")]
    l: Option<usize>,
    #[arg(long = "Z")]
    z: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DemoName {
    Example1,
    Example2,
    Table1,
    #[value(name = "remark-2-4-11")]
    Remark2411,
    Table3,
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    /// Re-check the output: always, debug (debug builds only) or never.
    #[arg(long, default_value = "always", value_parser = parse_policy)]
    verify: VerifyPolicy,
    /// Include generator version and input descriptions in the metadata.
    #[arg(long, default_value = "on", value_parser = ["on", "off"])]
    seed_metadata: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output path; standard output when absent.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
struct EbfArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    alpha: u32,
    /// Chain permutation, 1-based, e.g. `2,1`.
    #[arg(long, value_delimiter = ',')]
    pi: Vec<usize>,
    /// Coefficients of degree l as `l:c_1,...,c_m`; `--cL c_1,...` is shorthand.
    #[arg(long = "coeff")]
    coeffs: Vec<String>,
    #[arg(long, default_value_t = 0)]
    c0: u32,
}

#[derive(Subcommand, Debug)]
enum Construction {
    /// q-ary CSS of length q^m from a quadratic-chain EBF.
    Theorem1 {
        #[command(flatten)]
        ebf: EbfArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// (q^(v+1), q, q^m, q^(m-v))-ZCCS.
    Theorem2 {
        #[command(flatten)]
        ebf: EbfArgs,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        beta: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Interleaved even-shift sets from an (M, L)-CCC.
    Theorem3 {
        /// CCC document path or seed name such as `seeds:ccc-2x2`.
        #[arg(long)]
        ccc: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// phi-concatenation MOCSS from two even-shift orthogonal sets and a CCC.
    Lemma4 {
        /// Set P: document path (`path#k` selects set k).
        #[arg(long = "p-set")]
        p_set: String,
        /// Set Q: document path (`path#k` selects set k).
        #[arg(long = "q-set")]
        q_set: String,
        #[arg(long)]
        ccc: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// (M1*M2/2, 2*L1*L2)-CCC from two CCCs.
    Theorem4 {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// (M, 2M, L1+L2)-MOCSS from two CCCs.
    Theorem5 {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// How -B is formed: half-turn (e + q/2) or additive-inverse (-e mod q).
        #[arg(long, default_value = "half-turn", value_parser = parse_negation)]
        negation: Negation,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Binary Golay pair of length 2^a, 2^a*10 or 2^a*26.
    Gcp {
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Binary (2, L)-CCC from a Golay pair and its mate.
    Ccc {
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn parse_engine(s: &str) -> Result<Engine, String> {
    s.parse().map_err(|e: CoreError| e.to_string())
}

fn parse_policy(s: &str) -> Result<VerifyPolicy, String> {
    s.parse().map_err(|e: CoreError| e.to_string())
}

fn parse_negation(s: &str) -> Result<Negation, String> {
    s.parse().map_err(|e: CoreError| e.to_string())
}

fn parse_role(s: &str) -> Result<Role, String> {
    s.parse().map_err(|e: CoreError| e.to_string())
}

/// `--c3 1,2` → `--coeff 3:1,2`, `--c3=1,2` likewise. `--c0` is left alone.
fn expand_coefficient_flags(args: impl IntoIterator<Item = String>) -> Vec<String> {
    let mut out = Vec::new();
    let mut iter = args.into_iter();
    while let Some(arg) = iter.next() {
        let Some(rest) = arg.strip_prefix("--c") else {
            out.push(arg);
            continue;
        };
        let (degree, inline) = match rest.split_once('=') {
            Some((d, v)) => (d, Some(v.to_string())),
            None => (rest, None),
        };
        match degree.parse::<u32>() {
            Ok(l) if l >= 1 && !degree.starts_with('0') => {
                let value = inline.or_else(|| iter.next()).unwrap_or_default();
                out.push("--coeff".into());
                out.push(format!("{l}:{value}"));
            }
            _ => out.push(arg),
        }
    }
    out
}

/// Exit status: 0 verified, 1 refuted, 2 usage or input error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    Refuted,
}

fn error_kind(e: &anyhow::Error) -> (&'static str, u8) {
    match e.downcast_ref::<CoreError>() {
        Some(CoreError::VerificationFailed(_)) => ("verification-failed", 1),
        Some(CoreError::VerificationRefused(_)) => ("verification-refused", 1),
        Some(CoreError::Precondition(_)) => ("precondition", 2),
        Some(CoreError::Unsupported(_) | CoreError::UnknownKernel(_)) => ("unsupported", 2),
        Some(CoreError::Document(_)) => ("document", 2),
        Some(CoreError::DimensionMismatch(_)) => ("dimension-mismatch", 2),
        Some(CoreError::AlphabetMismatch { .. }) => ("alphabet-mismatch", 2),
        Some(_) => ("invalid-input", 2),
        None => ("error", 2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(expand_coefficient_flags(std::env::args()));
    let result = match cli.command {
        Command::Generate { construction } => generate::run(construction, cli.engine),
        Command::Verify(args) => commands::verify(&args, cli.engine),
        Command::Classify { input } => commands::classify(&input, cli.engine),
        Command::Export { input, out } => commands::export(&input, out.as_deref()),
        Command::Demo { name } => demo::run(name, cli.engine),
    };
    match result {
        Ok(Status::Verified) => ExitCode::SUCCESS,
        Ok(Status::Refuted) => ExitCode::from(1),
        Err(e) => {
            let (kind, code) = error_kind(&e);
            let body = serde_json::json!({ "error": { "kind": kind, "message": format!("{e:#}") } });
            eprintln!("{body}");
            ExitCode::from(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(args: &[&str]) -> Vec<String> {
        expand_coefficient_flags(args.iter().map(|s| s.to_string()))
    }

    #[test]
    fn coefficient_shorthand() {
        assert_eq!(expand(&["--c1", "1,2", "--c0", "0"]), ["--coeff", "1:1,2", "--c0", "0"]);
        assert_eq!(expand(&["--c12=3"]), ["--coeff", "12:3"]);
        assert_eq!(expand(&["--ccc", "x", "--c01", "1"]), ["--ccc", "x", "--c01", "1"]);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
