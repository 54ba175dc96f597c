//! `sgelim`: command-line access to signed elimination orderings.
//!
//! Exit codes: 0 when the answer is yes (SE, SEO, no mismatches), 1 when it
//! is no, 2 on bad input or a failed precondition.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use signed_elim::certificate::{verify_certificate, Certificate};
use signed_elim::characterize::{characterize, SearchLimit, DEFAULT_SEARCH_CAP};
use signed_elim::oracle::{build_family, cross_check, CrossCheckConfig, Family};
use signed_elim::special::SpecialChecker;
use signed_elim::{
    deg_tilde, greedy_seo, invariant_profile, is_seo, parse_sg, serialize_sg, Sign, SignedGraph, VertexOrder,
};

#[derive(Parser)]
#[command(name = "sgelim", version, about = "Signed elimination orderings for signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the graph has a signed elimination ordering.
    Check(InputArgs),
    /// Test one ordering.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Vertex ids, first to last, separated by whitespace.
        #[arg(long)]
        order: String,
    },
    /// Print the degree profile shared by every SEO.
    Invariant(InputArgs),
    /// Evaluate the forbidden-structure conditions and print an ordering or
    /// a certificate.
    Characterize {
        #[command(flatten)]
        input: InputArgs,
        /// Largest graph the exponential searches accept.
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        search_cap: usize,
        /// Check a certificate line against the graph instead.
        #[arg(long, value_name = "LINE", hide = true)]
        verify_cert: Option<String>,
    },
    /// Run the restricted-class recognizers.
    Special {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "all", value_parser = ["fv", "chordal", "lowindep", "complete", "all"])]
        which: String,
    },
    /// Write a mountain, hill or capped variant as .sg text.
    Gen {
        #[arg(long, value_parser = parse_family)]
        kind: Family,
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        sign: Sign,
        /// Path length.
        #[arg(long)]
        n: usize,
    },
    /// Compare every decision procedure on all graphs with `n` vertices.
    Crosscheck {
        #[arg(long)]
        n: usize,
        /// Include the permutation oracle (on by default up to 5 vertices).
        #[arg(long)]
        with_oracle: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Allow n = 6 (about 14 million graphs).
        #[arg(long)]
        long_run: bool,
        /// Append wall-clock time.
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct InputArgs {
    /// .sg file, or `-` for standard input.
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    Sign::from_symbol(s).ok_or_else(|| format!("sign must be `+` or `-`, got `{s}`"))
}

fn read_graph(path: &Path) -> Result<SignedGraph> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("reading standard input")?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_sg(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(json: bool, value: serde_json::Value, text: &str) {
    if json {
        println!("{value}");
    } else {
        print!("{text}");
    }
}

/// Runs one command; `Ok(true)` maps to exit 0 and `Ok(false)` to exit 1.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Check(input) => {
            let g = read_graph(&input.file)?;
            match greedy_seo(&g) {
                Ok(order) => {
                    emit(input.json, json!({ "se": true, "order": order }), &format!("SE\n{order}\n"));
                    Ok(true)
                }
                Err(_) => {
                    emit(input.json, json!({ "se": false }), "NOT-SE\n");
                    Ok(false)
                }
            }
        }
        Command::Verify { input, order } => {
            let g = read_graph(&input.file)?;
            let order: VertexOrder = order.parse().context("parsing --order")?;
            order.check_fits(&g).context("checking --order")?;
            match is_seo(&g, &order)? {
                None => {
                    emit(input.json, json!({ "seo": true }), "SEO\n");
                    Ok(true)
                }
                Some(v) => {
                    emit(input.json, json!({ "seo": false, "violation": v }), &format!("{v}\n"));
                    Ok(false)
                }
            }
        }
        Command::Invariant(input) => {
            let g = read_graph(&input.file)?;
            if greedy_seo(&g).is_err() {
                emit(input.json, json!({ "se": false }), "NOT-SE\n");
                eprintln!("sgelim: the degree invariant is defined only for signed-eliminable graphs");
                return Ok(false);
            }
            let profile = invariant_profile(&g)?;
            let degt = deg_tilde(&g)?;
            emit(
                input.json,
                json!({ "profile": profile, "degt": degt }),
                &format!("{profile}\n{degt}\n"),
            );
            Ok(true)
        }
        Command::Characterize {
            input,
            search_cap,
            verify_cert,
        } => {
            let g = read_graph(&input.file)?;
            if let Some(line) = verify_cert {
                let cert: Certificate = line.trim().parse().map_err(anyhow::Error::msg)?;
                let result = verify_certificate(&g, &cert);
                let text = match &result {
                    Ok(()) => "cert ok\n".to_string(),
                    Err(r) => format!("cert rejected: {r}\n"),
                };
                let reason = result.as_ref().err().map(|r| r.to_string());
                emit(input.json, json!({ "valid": result.is_ok(), "reason": reason }), &text);
                return Ok(result.is_ok());
            }
            let verdict = characterize(&g, SearchLimit::at_most(search_cap))?;
            let second = match verdict.certificate() {
                Some(cert) => cert.to_string(),
                None => {
                    let order = greedy_seo(&g).expect("characterize confirmed an SEO exists");
                    order.to_string()
                }
            };
            emit(
                input.json,
                serde_json::to_value(&verdict)?,
                &format!("{}\n{second}\n", verdict.flags),
            );
            Ok(verdict.is_eliminable())
        }
        Command::Special { input, which } => {
            let g = read_graph(&input.file)?;
            let checkers: Vec<SpecialChecker> = match SpecialChecker::from_name(&which) {
                Some(c) => vec![c],
                None => SpecialChecker::ALL.to_vec(),
            };
            let verdicts = checkers.into_iter().map(|c| c.run(&g)).collect::<Result<Vec<_>, _>>()?;
            let text: String = verdicts.iter().map(|v| format!("{v}\n")).collect();
            emit(input.json, serde_json::to_value(&verdicts)?, &text);
            Ok(true)
        }
        Command::Gen { kind, sign, n } => {
            let g = build_family(kind, sign, n)?;
            print!("{}", serialize_sg(&g));
            Ok(true)
        }
        Command::Crosscheck {
            n,
            with_oracle,
            workers,
            long_run,
            timing,
            json,
        } => {
            if workers == 0 {
                bail!("--workers must be at least 1");
            }
            let mut config = CrossCheckConfig::new(n).workers(workers).long_run(long_run);
            if with_oracle {
                config = config.with_oracle();
            }
            let report = cross_check(&config)?;
            if json {
                let mut value = serde_json::to_value(&report)?;
                if timing {
                    value["elapsed_ms"] = json!(report.elapsed.as_millis() as u64);
                }
                println!("{value}");
            } else {
                print!("{}", report.to_text());
                if timing {
                    println!("elapsed={:.3}s", report.elapsed.as_secs_f64());
                }
            }
            Ok(report.mismatches.is_empty())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("sgelim: {e:#}");
            ExitCode::from(2)
        }
    }
}
