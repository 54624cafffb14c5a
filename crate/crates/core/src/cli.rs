//! The `strata` command line: every subcommand prints one JSON envelope
//! `{"status", "payload", "diagnostics"}` on standard output.
//!
//! Exit codes are 0 on success, 1 for a domain error (the payload then
//! carries `code` and `message`) and 2 for usage errors, reported on
//! standard error.

use std::ffi::OsString;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::adjacency::{reachable_poset, Poles};
use crate::braid::{factorize_kernel_word, minimal_d, BraidWord};
use crate::criteria::{gen2_verdict, hy2_verdict, main_theorem_verdict, null_prop_verdict};
use crate::graphs::{construct_graph, copeland_generators, CombinatorialMap, SearchOptions};
use crate::signature::{parse_orders, DoubleCoverSpec};
use crate::{Error, Result, StratumSignature};

#[derive(Parser, Debug)]
#[command(name = "strata", version, about = "Exact combinatorics of strata of quadratic differentials")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension, emptiness and connected components of a stratum.
    Info {
        #[arg(long)]
        genus: u32,
        /// Comma-separated orders, `k^m` repeats `k` m times.
        #[arg(long, allow_hyphen_values = true)]
        orders: String,
    },
    /// Strata reachable from a root by splitting zeros.
    Poset {
        #[arg(long)]
        genus: u32,
        #[arg(long, allow_hyphen_values = true)]
        root: String,
        /// Number of split steps; unlimited with --no-poles, 2 otherwise.
        #[arg(long)]
        depth: Option<usize>,
        /// Only split into positive orders.
        #[arg(long)]
        no_poles: bool,
    },
    /// Permutation and Abel–Jacobi image of a braid word.
    Aj {
        /// Word JSON file, `-` for standard input.
        #[arg(long)]
        word: PathBuf,
    },
    /// Factor a kernel word into certified generators.
    Factorize {
        #[arg(long)]
        word: PathBuf,
    },
    /// Build a simple map with the given genus, faces and vertices.
    Graph {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        faces: usize,
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Search budget in milliseconds.
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Edge transpositions of a map.
    Copeland {
        #[arg(long)]
        map: PathBuf,
    },
    /// Evaluate a hypothesis predicate on a stratum.
    Check {
        #[arg(long)]
        genus: u32,
        #[arg(long, allow_hyphen_values = true)]
        orders: String,
        #[arg(long, value_enum, default_value_t = Criterion::Main)]
        criterion: Criterion,
    },
    /// Hyperelliptic double cover of a genus-0 stratum.
    Cover {
        /// Genus of the base stratum.
        #[arg(long, default_value_t = 0)]
        genus: u32,
        #[arg(long, allow_hyphen_values = true)]
        orders: String,
        /// 0-based indices, into the sorted base orders, of the ramified points.
        #[arg(long)]
        ramified: String,
        #[arg(long)]
        target_genus: u32,
    },
    /// Least multiple of one weight cancelled by the others.
    Dmin {
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        #[arg(long)]
        index: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Criterion {
    Main,
    Hy2,
    Null,
    Gen2,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut diagnostics = Vec::new();
    let (code, status, payload) = match dispatch(cli.command, &mut diagnostics) {
        Ok(p) => (0, "ok", p),
        Err(e) => (1, "error", json!({"code": e.code(), "message": e.to_string()})),
    };
    let doc = json!({"status": status, "payload": payload, "diagnostics": diagnostics});
    let mut stdout = if cli.pretty {
        serde_json::to_string_pretty(&doc)
    } else {
        serde_json::to_string(&doc)
    }
    .expect("JSON values serialize");
    stdout.push('\n');
    Outcome { code, stdout, stderr: String::new() }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("domain types serialize")
}

fn signature(genus: u32, orders: &str) -> Result<StratumSignature> {
    StratumSignature::new(genus, parse_orders(orders)?)
}

/// Reads a JSON document that is either the object itself, an object with
/// it under `key`, or a CLI envelope whose payload is one of those.
fn read_input<T: DeserializeOwned>(path: &Path, key: &str) -> Result<T> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?
    };
    let mut value: Value = serde_json::from_str(&text).map_err(|e| Error::Input(e.to_string()))?;
    if value.get("status").is_some() {
        if let Some(p) = value.get_mut("payload") {
            value = p.take();
        }
    }
    if let Some(inner) = value.get_mut(key) {
        value = inner.take();
    }
    serde_json::from_value(value).map_err(|e| Error::Input(e.to_string()))
}

fn dispatch(command: Command, diagnostics: &mut Vec<String>) -> Result<Value> {
    match command {
        Command::Info { genus, orders } => {
            let s = signature(genus, &orders)?;
            let report = s.classify();
            Ok(json!({
                "signature": to_value(&s),
                "empty": report.is_empty,
                "dimension": s.dimension().ok(),
                "component_count": report.component_count,
                "reason": to_value(&report.reason),
            }))
        }
        Command::Poset { genus, root, depth, no_poles } => {
            let s = signature(genus, &root)?;
            let (poles, depth) = if no_poles { (Poles::Forbidden, depth) } else { (Poles::Allowed, depth.or(Some(2))) };
            let poset = reachable_poset(&s, depth, poles);
            if poset.truncated {
                diagnostics.push(format!("stopped after {} split steps", depth.unwrap_or(0)));
            }
            Ok(to_value(&poset))
        }
        Command::Aj { word } => {
            let w: BraidWord = read_input(&word, "word")?;
            let perm = w.permutation_image();
            let images: Vec<usize> = (1..=perm.len()).map(|i| perm.image(i)).collect();
            let aj = w.abel_jacobi();
            Ok(json!({
                "word": to_value(&w),
                "permutation": images,
                "aj": to_value(&aj),
                "in_kernel": aj.is_zero(),
            }))
        }
        Command::Factorize { word } => {
            let w: BraidWord = read_input(&word, "word")?;
            let f = factorize_kernel_word(&w)?;
            let stages: Vec<Value> = f
                .stages
                .iter()
                .map(|s| {
                    json!({
                        "point": s.point,
                        "swaps": s.swaps.len(),
                        "rho_powers": s.rho_powers,
                        "balancing": s.balancing,
                    })
                })
                .collect();
            if !f.matches(&w) {
                diagnostics.push("factor product differs from the input in the quotient".into());
            }
            Ok(json!({
                "word": to_value(&w),
                "factors": to_value(&f.factors),
                "stages": stages,
                "primary": f.primary,
                "peeled": f.peeled,
            }))
        }
        Command::Graph { genus, faces, vertices, seed, budget, threads } => {
            let opts = SearchOptions { budget_ms: budget, seed, threads };
            let m = construct_graph(genus, faces, vertices, opts)?;
            Ok(json!({"map": to_value(&m), "report": to_value(&m.report())}))
        }
        Command::Copeland { map } => {
            let m: CombinatorialMap = read_input(&map, "map")?;
            let gens = copeland_generators(&m)?;
            Ok(json!({"count": gens.len(), "generators": to_value(&gens)}))
        }
        Command::Check { genus, orders, criterion } => {
            let s = signature(genus, &orders)?;
            if s.is_empty() {
                diagnostics.push(format!("stratum {s} is empty"));
            }
            let (name, verdict) = match criterion {
                Criterion::Main => ("main", main_theorem_verdict(&s)),
                Criterion::Hy2 => ("hy2", hy2_verdict(&s)),
                Criterion::Null => ("null", null_prop_verdict(&s)),
                Criterion::Gen2 => ("gen2", gen2_verdict(&s)),
            };
            Ok(json!({
                "signature": to_value(&s),
                "criterion": name,
                "satisfied": verdict.satisfied,
                "clause": verdict.clause,
                "detail": verdict.detail,
            }))
        }
        Command::Cover { genus, orders, ramified, target_genus } => {
            let base = signature(genus, &orders)?;
            let indices = ramified
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| Error::Input(format!("bad index `{s}`"))))
                .collect::<Result<Vec<_>>>()?;
            let spec = DoubleCoverSpec::new(base, indices, target_genus);
            let cover = spec.cover()?;
            Ok(json!({"spec": to_value(&spec), "cover": to_value(&cover)}))
        }
        Command::Dmin { weights, index } => {
            let weights = parse_orders(&weights)?;
            Ok(to_value(&minimal_d(&weights, index)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn payload(args: &[&str]) -> Value {
        let out = run(std::iter::once("strata").chain(args.iter().copied()));
        assert_eq!(out.code, 0, "{}", out.stdout);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        v["payload"].clone()
    }

    #[test]
    fn info_and_dmin() {
        let p = payload(&["info", "--genus", "2", "--orders", "4"]);
        assert_eq!(p["empty"], json!(true));
        let p = payload(&["dmin", "--weights", "4,6", "--index", "0"]);
        assert_eq!(p, json!({"d": 3, "coeffs": [3, -2]}));
        let p = payload(&["info", "--genus", "2", "--orders", "6,-1,-1"]);
        assert_eq!(p["component_count"], json!(2));
    }

    #[test]
    fn exit_codes() {
        let out = run(["strata", "info", "--genus", "2", "--orders", "5"]);
        assert_eq!(out.code, 1);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["status"], json!("error"));
        assert_eq!(v["payload"]["code"], json!("InvalidSignature"));
        let out = run(["strata", "frobnicate"]);
        assert_eq!(out.code, 2);
        assert!(out.stdout.is_empty() && !out.stderr.is_empty());
        assert_eq!(run(["strata", "--help"]).code, 0);
    }
}
