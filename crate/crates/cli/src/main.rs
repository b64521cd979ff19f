use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use chromasym::csf::{chromatic_counts, csf};
use chromasym::families::{self, FamilyTag, Method};
use chromasym::powerseries::{cycle_gf, inverse_d, path_gf, Series};
use chromasym::verify::{self, Selection, VerifyConfig};
use chromasym::{Graph, Named, Partition};

/// Exact chromatic symmetric functions in the elementary basis.
#[derive(Parser)]
#[command(name = "chromasym", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Brute-force X_G for a graph spec such as `path:5`, `twin(cycle:6,0)`
    /// or `g:n=4;edges=0-1,1-2,2-3`.
    Csf {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        json: bool,
        /// Also compare X_G(1^k) with a direct count of proper k-colorings.
        #[arg(long, value_name = "K")]
        check_colorings: Option<usize>,
    },
    /// Print a named series truncated at z^N.
    Series {
        /// E, D, G, K, F1, F2, F3, E_geq:k, K_geq:k, G_geq:k, G_leq:k,
        /// path-gf, cycle-gf, inv-d, leaf-gf-half, both-gf-quarter, twin-cycle-gf-half.
        #[arg(long)]
        name: String,
        #[arg(long = "N", short = 'N', default_value_t = 12)]
        trunc: usize,
        /// Print only the coefficient of z^d.
        #[arg(long, value_name = "D")]
        extract: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// A family value by one method, or by every method with a consistency check.
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        /// identity, gf, epos-gf, recurrence, coefficients, oracle or all.
        #[arg(long, default_value = "all")]
        method: String,
        #[arg(long)]
        json: bool,
    },
    /// A single coefficient from a closed coefficient formula.
    Coeff {
        /// path, cycle, twin-path-leaf, twin-path-both or twin-cycle (half of X).
        #[arg(long)]
        family: String,
        #[arg(long)]
        lambda: String,
    },
    /// Run the self-check suites; exits 1 on any mismatch.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 12)]
        max_deg: usize,
        #[arg(long)]
        json: bool,
        /// Write the JSON report here as well.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print every case, not just the failures.
        #[arg(long, short)]
        verbose: bool,
    },
}

/// Failures split by exit code: bad input is 2, a failed check is 1.
enum Failure {
    Usage(String),
    Mismatch(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Csf {
            graph,
            json,
            check_colorings,
        } => {
            let g: Graph = graph.parse().map_err(usage)?;
            let x = csf(&g).map_err(usage)?;
            if json {
                println!("{}", json!({"graph": g.to_string(), "csf": x.to_json()}));
            } else {
                println!("{x}");
            }
            if let Some(k) = check_colorings {
                let (spec, brute) = chromatic_counts(&g, k).map_err(usage)?;
                if spec != brute {
                    return Err(Failure::Mismatch(format!(
                        "X_G(1^{k}) = {spec} but there are {brute} proper {k}-colorings"
                    )));
                }
                eprintln!("{k}-colorings: {brute}");
            }
            Ok(())
        }
        Cmd::Series {
            name,
            trunc,
            extract,
            json,
        } => {
            let s = series_by_name(&name, trunc)?;
            match extract {
                Some(d) => {
                    let c = s.extract(d).map_err(usage)?;
                    if json {
                        println!("{}", c.to_json());
                    } else {
                        println!("{c}");
                    }
                }
                None if json => println!("{}", s.to_json()),
                None => println!("{s}"),
            }
            Ok(())
        }
        Cmd::Family {
            name,
            n,
            ell,
            method,
            json,
        } => family(&name, n, ell, &method, json),
        Cmd::Coeff { family, lambda } => {
            let lambda: Partition = lambda.parse().map_err(usage)?;
            let tag: FamilyTag = family.parse().map_err(usage)?;
            let c = match tag {
                FamilyTag::Path | FamilyTag::Cycle => families::path_cycle_coeff(tag, &lambda),
                FamilyTag::TwinPathLeaf => families::twin_path_leaf_coeff(&lambda),
                FamilyTag::TwinPathBoth => families::twin_path_both_coeff(&lambda),
                FamilyTag::TwinCycle => families::twin_cycle_coeff(&lambda),
                other => return Err(usage(format!("no coefficient formula for {other}"))),
            }
            .map_err(usage)?;
            println!("{c}");
            Ok(())
        }
        Cmd::Verify {
            suite,
            max_n,
            max_deg,
            json,
            out,
            verbose,
        } => {
            let selection: Selection = suite.parse().map_err(usage)?;
            let report = verify::run(selection, VerifyConfig { max_n, max_deg });
            let body = serde_json::to_string_pretty(&report.records).expect("report serializes");
            if let Some(path) = out {
                fs::write(&path, &body).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            if json {
                println!("{body}");
            } else if verbose {
                for r in &report.records {
                    println!("{r}");
                }
            }
            let (ok, bad) = report.count();
            if bad == 0 {
                eprintln!("{ok} checks passed");
                return Ok(());
            }
            let mut msg = format!("{bad} of {} checks failed", ok + bad);
            for r in report.failures().take(20) {
                msg.push('\n');
                msg.push_str(&r.to_string());
            }
            Err(Failure::Mismatch(msg))
        }
    }
}

fn series_by_name(name: &str, trunc: usize) -> Result<Series, Failure> {
    Ok(match name.to_ascii_lowercase().replace('_', "-").as_str() {
        "path-gf" => path_gf(trunc),
        "cycle-gf" => cycle_gf(trunc),
        "inv-d" => inverse_d(trunc),
        "leaf-gf-half" => families::leaf_gf_half(trunc),
        "both-gf-quarter" => families::both_leaves_gf_quarter(trunc),
        "twin-cycle-gf-half" => families::twin_cycle_gf_half(trunc),
        _ => {
            let named: Named = name.parse().map_err(usage)?;
            named.series(trunc).map_err(usage)?
        }
    })
}

fn family(name: &str, n: usize, ell: usize, method: &str, json: bool) -> Result<(), Failure> {
    let tag: FamilyTag = name.parse().map_err(usage)?;
    let methods: Vec<Method> = if method.eq_ignore_ascii_case("all") {
        tag.methods().iter().copied().chain([Method::Oracle]).collect()
    } else {
        vec![method.parse().map_err(usage)?]
    };
    let mut values = Vec::new();
    for m in methods {
        match families::compute(tag, n, ell, m) {
            Ok(x) => values.push((m, x)),
            // with `all`, skip what this (n, ℓ) does not support
            Err(families::FamilyError::MethodUnavailable { .. }) if method.eq_ignore_ascii_case("all") => {}
            Err(families::FamilyError::Csf(e)) if method.eq_ignore_ascii_case("all") => {
                eprintln!("oracle skipped: {e}");
            }
            Err(e) => return Err(usage(e)),
        }
    }
    let Some((_, first)) = values.first() else {
        return Err(usage(format!("no method applies to {tag} at n = {n}")));
    };
    if json {
        let rows: Vec<_> = values
            .iter()
            .map(|(m, x)| json!({"method": m.name(), "value": x.to_json()}))
            .collect();
        println!("{}", json!({"family": tag.name(), "n": n, "ell": ell, "values": rows}));
    } else if values.len() == 1 {
        println!("{first}");
    } else {
        for (m, x) in &values {
            println!("{:<13} {x}", format!("{m}:"));
        }
    }
    let disagree: Vec<_> = values.iter().filter(|(_, x)| x != first).map(|(m, _)| m.name()).collect();
    if !disagree.is_empty() {
        return Err(Failure::Mismatch(format!(
            "methods disagree with {}: {}",
            values[0].0,
            disagree.join(", ")
        )));
    }
    Ok(())
}
