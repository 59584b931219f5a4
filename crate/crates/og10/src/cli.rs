//! Command-line front end.
//!
//! Every subcommand prints either plain text or, with `--json`, a stable
//! envelope `{artifact_version, command, inputs, result}`. Integers that can
//! outgrow 53 bits are serialized as decimal strings. Exit codes: 0 on
//! success, 1 on domain errors, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::betti::{
    check_og10, search_feasible_og10, BettiVector, ConstraintReport, OddBettiBounds,
};
use crate::degrees::{enumerative_validity, five_tangent_count, identity_checks};
use crate::error::Error;
use crate::fibration::{build_og10_strata, Og10Stratum, StratumBase};
use crate::prym::{
    euler_prym, euler_prym_bruteforce_with_cap, NodalCoverModel, DEFAULT_MAX_BRUTE_NODES,
};
use crate::singularity::{
    enumerate_configurations, geometric_genus, PlaneCurveClass, SingularityConfiguration,
};

const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable raising (or lowering) the brute-force node cap.
pub const MAX_BRUTE_NODES_ENV: &str = "OG10_MAX_BRUTE_NODES";

#[derive(Parser)]
#[command(
    name = "og10",
    version,
    about = "Exact arithmetic around the Euler characteristic of OG10 hyper-Kähler manifolds",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of 5-tangent hyperplanes to a general degree-d hypersurface in P^5
    #[command(name = "count-tangent")]
    CountTangent {
        /// Hypersurface degree (enumeratively valid for d >= 3)
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        #[arg(long)]
        json: bool,
    },
    /// Singularity configurations on a quintic with total Milnor number <= mu-max
    Strata {
        #[arg(long = "mu-max")]
        mu_max: u64,
        #[arg(long)]
        json: bool,
    },
    /// Euler characteristic of the compactified Prym of an etale double cover
    #[command(name = "prym-euler")]
    PrymEuler {
        /// Number of nodes of the base quintic
        #[arg(long)]
        nodes: u32,
        /// Genus of the normalized base curve (>= 1)
        #[arg(long)]
        genus: u32,
        /// Enumerate all 2^nodes strata instead of using the closed form
        #[arg(long = "brute-force")]
        brute_force: bool,
        #[arg(long)]
        json: bool,
    },
    /// Assemble chi(OG10) from the stratified Lagrangian fibration
    #[command(name = "og10-euler")]
    Og10Euler {
        /// Print the per-stratum table
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Betti-number constraint checks and feasibility search
    Betti {
        #[command(subcommand)]
        command: BettiCommand,
    },
    /// Classical cross-check identities for the tangency counts
    Identities {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum BettiCommand {
    /// Check one Betti vector ({"n":5,"b":[...]}) against the OG10 constraints
    Check {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate feasible OG10 Betti vectors in lexicographic order
    Search {
        /// Upper bound for each of b3, b5, b7, b9
        #[arg(long = "max-odd", default_value_t = 12)]
        max_odd: u32,
        /// Stop after this many vectors (the full family is enormous)
        #[arg(long, default_value_t = 10)]
        limit: usize,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn domain(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::domain(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::domain(e.to_string())
    }
}

/// Parses `argv` (including the program name) and executes one subcommand,
/// writing to the given streams. Returns the process exit code.
pub fn run<I, T, O, E>(argv: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch<O: Write, E: Write>(command: Command, out: &mut O, err: &mut E) -> Result<(), Failure> {
    match command {
        Command::CountTangent { degree, json } => count_tangent(degree, json, out, err),
        Command::Strata { mu_max, json } => strata(mu_max, json, out),
        Command::PrymEuler { nodes, genus, brute_force, json } => {
            prym_euler(nodes, genus, brute_force, json, out)
        }
        Command::Og10Euler { trace, json } => og10_euler(trace, json, out),
        Command::Betti { command: BettiCommand::Check { file, json } } => {
            betti_check(&file, json, out)
        }
        Command::Betti { command: BettiCommand::Search { max_odd, limit, json } } => {
            betti_search(max_odd, limit, json, out)
        }
        Command::Identities { json } => identities(json, out),
    }
}

#[derive(Serialize)]
struct Envelope<I: Serialize, R: Serialize> {
    artifact_version: &'static str,
    command: &'static str,
    inputs: I,
    result: R,
}

fn emit_json<O: Write, I: Serialize, R: Serialize>(
    out: &mut O,
    command: &'static str,
    inputs: I,
    result: R,
) -> Result<(), Failure> {
    let envelope = Envelope { artifact_version: ARTIFACT_VERSION, command, inputs, result };
    writeln!(out, "{}", serde_json::to_string_pretty(&envelope)?)?;
    Ok(())
}

// ---------------------------------------------------------------- count-tangent

#[derive(Serialize)]
struct CountTangentInputs {
    degree: i64,
}

#[derive(Serialize)]
struct CountTangentResult {
    degree: i64,
    count: String,
    valid_range: bool,
}

fn count_tangent<O: Write, E: Write>(
    degree: i64,
    json: bool,
    out: &mut O,
    err: &mut E,
) -> Result<(), Failure> {
    let count = five_tangent_count(degree)?;
    let valid_range = enumerative_validity(degree);
    if json {
        emit_json(
            out,
            "count-tangent",
            CountTangentInputs { degree },
            CountTangentResult { degree, count: count.to_string(), valid_range },
        )
    } else {
        writeln!(out, "{count}")?;
        if !valid_range {
            writeln!(err, "note: the count is enumerative only for degree >= 3")?;
        }
        Ok(())
    }
}

// ----------------------------------------------------------------------- strata

#[derive(Serialize)]
struct StrataInputs {
    mu_max: u64,
}

#[derive(Serialize)]
struct StratumRow {
    label: String,
    counts: SingularityConfiguration,
    mu_total: u64,
    delta_sum: u64,
    geometric_genus: i64,
    genus_one: bool,
}

#[derive(Serialize)]
struct StrataResult {
    count: usize,
    configurations: Vec<StratumRow>,
}

fn strata<O: Write>(mu_max: u64, json: bool, out: &mut O) -> Result<(), Failure> {
    let quintic = PlaneCurveClass::quintic();
    let rows: Vec<StratumRow> = enumerate_configurations(mu_max)
        .into_iter()
        .map(|configuration| {
            let delta_sum = configuration.delta_sum()?;
            let genus = geometric_genus(quintic, &configuration)?;
            Ok(StratumRow {
                label: configuration.to_string(),
                mu_total: configuration.mu_total(),
                delta_sum,
                geometric_genus: genus,
                genus_one: genus == 1,
                counts: configuration,
            })
        })
        .collect::<Result<_, Error>>()?;

    if json {
        return emit_json(
            out,
            "strata",
            StrataInputs { mu_max },
            StrataResult { count: rows.len(), configurations: rows },
        );
    }
    writeln!(out, "{:<12} {:>3} {:>6} {:>6}  genus-1", "label", "mu", "delta", "genus")?;
    for row in &rows {
        writeln!(
            out,
            "{:<12} {:>3} {:>6} {:>6}  {}",
            row.label,
            row.mu_total,
            row.delta_sum,
            row.geometric_genus,
            if row.genus_one { "yes" } else { "no" }
        )?;
    }
    writeln!(out, "{} configurations with mu_total <= {mu_max}", rows.len())?;
    Ok(())
}

// ------------------------------------------------------------------- prym-euler

#[derive(Serialize)]
struct PrymInputs {
    nodes: u32,
    genus: u32,
    brute_force: bool,
}

#[derive(Serialize)]
struct PrymResult {
    euler: i64,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    strata_enumerated: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nonzero_strata: Option<u64>,
}

fn brute_force_cap() -> Result<u32, Failure> {
    match std::env::var(MAX_BRUTE_NODES_ENV) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| Failure::domain(format!("invalid {MAX_BRUTE_NODES_ENV} value {raw:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_BRUTE_NODES),
        Err(e) => Err(Failure::domain(format!("cannot read {MAX_BRUTE_NODES_ENV}: {e}"))),
    }
}

fn prym_euler<O: Write>(
    nodes: u32,
    genus: u32,
    brute_force: bool,
    json: bool,
    out: &mut O,
) -> Result<(), Failure> {
    let model = NodalCoverModel::new(nodes, genus)?;
    let result = if brute_force {
        let report = euler_prym_bruteforce_with_cap(model, brute_force_cap()?)?;
        if report.euler != euler_prym(model) {
            return Err(Error::InternalInvariant(
                "stratum enumeration disagrees with the closed form".into(),
            )
            .into());
        }
        PrymResult {
            euler: report.euler,
            method: "brute-force",
            strata_enumerated: Some(report.strata_enumerated),
            nonzero_strata: Some(report.nonzero_strata),
        }
    } else {
        PrymResult {
            euler: euler_prym(model),
            method: "closed-form",
            strata_enumerated: None,
            nonzero_strata: None,
        }
    };
    if json {
        emit_json(out, "prym-euler", PrymInputs { nodes, genus, brute_force }, result)
    } else {
        writeln!(out, "{}", result.euler)?;
        Ok(())
    }
}

// ------------------------------------------------------------------- og10-euler

#[derive(Serialize)]
struct Og10Inputs {
    trace: bool,
}

#[derive(Serialize)]
struct Og10StratumRow {
    label: String,
    mu_total: u64,
    geometric_genus: i64,
    fiber_euler: i64,
    base: String,
    contribution: String,
}

#[derive(Serialize)]
struct Og10Result {
    total: String,
    nonzero_strata: usize,
    strata: Vec<Og10StratumRow>,
}

fn og10_rows(rows: &[Og10Stratum]) -> Result<(Vec<Og10StratumRow>, BigInt), Failure> {
    let mut total = BigInt::from(0);
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let contribution = row.stratum.contribution()?;
        let base = match row.stratum.base() {
            StratumBase::Count(count) => count.to_string(),
            StratumBase::Unused => "unused".to_string(),
        };
        out.push(Og10StratumRow {
            label: row.stratum.label().to_string(),
            mu_total: row.mu_total,
            geometric_genus: row.geometric_genus,
            fiber_euler: row.stratum.fiber_euler(),
            base,
            contribution: contribution.to_string(),
        });
        total += contribution;
    }
    Ok((out, total))
}

fn og10_euler<O: Write>(trace: bool, json: bool, out: &mut O) -> Result<(), Failure> {
    let (rows, total) = og10_rows(&build_og10_strata())?;
    let nonzero = rows.iter().filter(|row| row.contribution != "0").count();
    if json {
        return emit_json(
            out,
            "og10-euler",
            Og10Inputs { trace },
            Og10Result { total: total.to_string(), nonzero_strata: nonzero, strata: rows },
        );
    }
    if trace {
        writeln!(
            out,
            "{:<12} {:>3} {:>6} {:>6} {:>8} {:>14}",
            "label", "mu", "genus", "fiber", "base", "contribution"
        )?;
        for row in &rows {
            writeln!(
                out,
                "{:<12} {:>3} {:>6} {:>6} {:>8} {:>14}",
                row.label,
                row.mu_total,
                row.geometric_genus,
                row.fiber_euler,
                row.base,
                row.contribution
            )?;
        }
        writeln!(out, "total: {total}")?;
    } else {
        writeln!(out, "{total}")?;
    }
    Ok(())
}

// ---------------------------------------------------------------------- betti

#[derive(Serialize)]
struct BettiCheckInputs {
    file: String,
}

#[derive(Serialize)]
struct SalamonJson {
    holds: bool,
    left: String,
    right: String,
}

#[derive(Serialize)]
struct ViolationJson {
    k: u32,
    required: String,
    actual: u64,
}

#[derive(Serialize)]
struct EulerJson {
    value: String,
    matches_og10: bool,
}

#[derive(Serialize)]
struct ReportJson {
    b2_is_24: bool,
    b1_is_zero: bool,
    duality_holds: bool,
    salamon: SalamonJson,
    verbitsky_violations: Vec<ViolationJson>,
    euler: EulerJson,
    all_pass: bool,
}

impl From<&ConstraintReport> for ReportJson {
    fn from(report: &ConstraintReport) -> Self {
        Self {
            b2_is_24: report.b2_is_24,
            b1_is_zero: report.b1_is_zero,
            duality_holds: report.duality_holds,
            salamon: SalamonJson {
                holds: report.salamon_holds,
                left: report.salamon_left.to_string(),
                right: report.salamon_right.to_string(),
            },
            verbitsky_violations: report
                .verbitsky_violations
                .iter()
                .map(|v| ViolationJson {
                    k: v.k,
                    required: v.required.to_string(),
                    actual: v.actual,
                })
                .collect(),
            euler: EulerJson {
                value: report.euler_value.to_string(),
                matches_og10: report.euler_matches,
            },
            all_pass: report.all_pass(),
        }
    }
}

fn betti_check<O: Write>(file: &PathBuf, json: bool, out: &mut O) -> Result<(), Failure> {
    let raw = std::fs::read_to_string(file)
        .map_err(|e| Failure::domain(format!("cannot read {}: {e}", file.display())))?;
    let vector: BettiVector = serde_json::from_str(&raw)?;
    let report = check_og10(&vector)?;
    if json {
        return emit_json(
            out,
            "betti-check",
            BettiCheckInputs { file: file.display().to_string() },
            ReportJson::from(&report),
        );
    }
    let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
    writeln!(out, "b2 = 24       {}", verdict(report.b2_is_24))?;
    writeln!(out, "b1 = 0        {}", verdict(report.b1_is_zero))?;
    writeln!(out, "duality       {}", verdict(report.duality_holds))?;
    writeln!(
        out,
        "salamon       {}  ({} vs {})",
        verdict(report.salamon_holds),
        report.salamon_left,
        report.salamon_right
    )?;
    if report.verbitsky_violations.is_empty() {
        writeln!(out, "verbitsky     PASS")?;
    } else {
        for v in &report.verbitsky_violations {
            writeln!(out, "verbitsky     FAIL  (b_{} = {} < {})", 2 * v.k, v.actual, v.required)?;
        }
    }
    writeln!(
        out,
        "euler         {}  (chi = {})",
        verdict(report.euler_matches),
        report.euler_value
    )?;
    writeln!(out, "{}", if report.all_pass() { "all checks passed" } else { "violations found" })?;
    Ok(())
}

#[derive(Serialize)]
struct BettiSearchInputs {
    max_odd: u32,
    limit: usize,
}

#[derive(Serialize)]
struct BettiSearchResult {
    count: usize,
    truncated: bool,
    vectors: Vec<BettiVector>,
}

fn betti_search<O: Write>(
    max_odd: u32,
    limit: usize,
    json: bool,
    out: &mut O,
) -> Result<(), Failure> {
    let found = search_feasible_og10(OddBettiBounds::uniform(max_odd), limit);
    if json {
        return emit_json(
            out,
            "betti-search",
            BettiSearchInputs { max_odd, limit },
            BettiSearchResult {
                count: found.vectors.len(),
                truncated: found.truncated,
                vectors: found.vectors,
            },
        );
    }
    for vector in &found.vectors {
        let entries: Vec<String> = vector.values().iter().map(u64::to_string).collect();
        writeln!(out, "[{}]", entries.join(", "))?;
    }
    writeln!(
        out,
        "{} feasible vector(s){}",
        found.vectors.len(),
        if found.truncated { " (capped at the requested limit)" } else { "" }
    )?;
    Ok(())
}

// ------------------------------------------------------------------ identities

#[derive(Serialize)]
struct NoInputs {}

#[derive(Serialize)]
struct IdentityJson {
    name: String,
    left: String,
    right: String,
    equal: bool,
}

#[derive(Serialize)]
struct IdentitiesResult {
    identities: Vec<IdentityJson>,
    all_equal: bool,
}

fn identities<O: Write>(json: bool, out: &mut O) -> Result<(), Failure> {
    let checks = identity_checks();
    if json {
        let identities: Vec<IdentityJson> = checks
            .iter()
            .map(|c| IdentityJson {
                name: c.name.to_string(),
                left: c.left.to_string(),
                right: c.right.to_string(),
                equal: c.equal,
            })
            .collect();
        let all_equal = checks.iter().all(|c| c.equal);
        return emit_json(
            out,
            "identities",
            NoInputs {},
            IdentitiesResult { identities, all_equal },
        );
    }
    for c in &checks {
        writeln!(
            out,
            "{:<32} {} == {}  {}",
            c.name,
            c.left,
            c.right,
            if c.equal { "PASS" } else { "FAIL" }
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(args.iter().map(|s| s.to_string()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_tangent_plain() {
        let (code, out, err) = capture(&["og10", "count-tangent", "--degree", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "176904\n");
        assert!(err.is_empty());
    }

    #[test]
    fn count_tangent_below_validity_warns() {
        let (code, out, err) = capture(&["og10", "count-tangent", "--degree", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0\n");
        assert!(err.contains("degree >= 3"));
    }

    #[test]
    fn count_tangent_json_schema() {
        let (code, out, _) = capture(&["og10", "count-tangent", "--degree", "3", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["command"], "count-tangent");
        assert_eq!(v["inputs"]["degree"], 3);
        assert_eq!(v["result"]["count"], "176904");
        assert_eq!(v["result"]["valid_range"], true);
    }

    #[test]
    fn og10_euler_plain_and_trace() {
        let (code, out, _) = capture(&["og10", "og10-euler"]);
        assert_eq!(code, 0);
        assert_eq!(out, "176904\n");

        let (code, out, _) = capture(&["og10", "og10-euler", "--trace"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        // header + 22 strata + total
        assert_eq!(lines.len(), 24);
        assert_eq!(lines.last().unwrap(), &"total: 176904");
        assert!(lines[1].starts_with("U "));
    }

    #[test]
    fn prym_euler_paths() {
        let (code, out, _) = capture(&["og10", "prym-euler", "--nodes", "5", "--genus", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1\n");

        let (code, out, _) = capture(&[
            "og10",
            "prym-euler",
            "--nodes",
            "5",
            "--genus",
            "1",
            "--brute-force",
            "--json",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["euler"], 1);
        assert_eq!(v["result"]["strata_enumerated"], 32);
        assert_eq!(v["result"]["nonzero_strata"], 1);
    }

    #[test]
    fn prym_euler_domain_error() {
        let (code, out, err) = capture(&["og10", "prym-euler", "--nodes", "5", "--genus", "0"]);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(err.contains("normalization genus"));
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, _, err) = capture(&["og10", "no-such-command"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());

        let (code, _, _) = capture(&["og10", "count-tangent"]);
        assert_eq!(code, 2);

        let (code, _, _) = capture(&["og10"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = capture(&["og10", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("count-tangent"));
    }

    #[test]
    fn strata_listing() {
        let (code, out, _) = capture(&["og10", "strata", "--mu-max", "5"]);
        assert_eq!(code, 0);
        assert!(out.contains("22 configurations"));
        assert!(out.contains("5A1"));

        let (code, out, _) = capture(&["og10", "strata", "--mu-max", "5", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["count"], 22);
        let configurations = v["result"]["configurations"].as_array().unwrap();
        let genus_one: Vec<_> = configurations.iter().filter(|c| c["genus_one"] == true).collect();
        assert_eq!(genus_one.len(), 1);
        assert_eq!(genus_one[0]["label"], "5A1");
        assert_eq!(genus_one[0]["counts"]["A1"], 5);
    }

    #[test]
    fn identities_output() {
        let (code, out, _) = capture(&["og10", "identities"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("PASS").count(), 3);

        let (code, out, _) = capture(&["og10", "identities", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["all_equal"], true);
        assert_eq!(v["result"]["identities"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn betti_search_output() {
        let (code, out, _) =
            capture(&["og10", "betti", "search", "--max-odd", "12", "--limit", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("3 feasible vector(s)"));

        let (code, out, _) = capture(&["og10", "betti", "search", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["inputs"]["max_odd"], 12);
        assert_eq!(v["inputs"]["limit"], 10);
        assert_eq!(v["result"]["count"], 10);
        assert_eq!(v["result"]["truncated"], true);
        let first = &v["result"]["vectors"][0];
        assert_eq!(first["n"], 5);
        assert_eq!(first["b"][4], 300);
    }

    #[test]
    fn json_output_is_byte_stable() {
        let (_, first, _) = capture(&["og10", "og10-euler", "--json"]);
        let (_, second, _) = capture(&["og10", "og10-euler", "--json"]);
        assert_eq!(first, second);
    }
}
