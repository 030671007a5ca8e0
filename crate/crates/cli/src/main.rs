//! `jisolve`: solve, reduce, generate and verify colorful-independent-set
//! instances on interval graphs.
//!
//! Exit codes: 0 solved / yes / valid, 1 no / invalid, 2 usage or format
//! error, 3 algorithm precondition violated.

mod bench;
mod format;

use bench::{BenchArgs, SweepAxis};
use clap::{Parser, Subcommand, ValueEnum};
use format::{parse_instance, parse_solution, serialize_cisl, serialize_two_union, ParsedInstance};
use jisolve_core::{
    brute_max_cis, brute_two_union, check_colorful_independent, check_two_union_independent,
    color_pack_reduce, is_proper_rep, kernelize_proper, reduce_sat3, signature_reduce,
    solve_branch, solve_cc, solve_cc_exhaustive, solve_cluster_cluster, solve_dp_gamma,
    solve_dp_q_value, solve_dp_q_witness, stats, two_union_to_cisl, CcConfig, Cnf3, ColorSide,
    ColoredIntervalGraph, CoreError, GenParams, KernelOutcome, Side, Solution,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "jisolve",
    version,
    about = "Exact solvers for colorful independent sets in interval graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    /// Subset DP over live-color slots (production solver).
    Dpq,
    /// Reference subset DP over all colors.
    Dpgamma,
    /// Search tree for single-colored unit-weight instances.
    Branch,
    /// Randomized recoloring search; needs --k.
    Cc,
    /// Cluster-cluster matching; needs a two-graph instance.
    Matching,
    /// Exhaustive oracle (small instances only).
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Rules {
    /// Delete vertices whose signature is componentwise dominated.
    Signature,
    /// Remove colors whose own intervals already pack far enough.
    Colorpack,
    /// Color packing plus the greedy certificate check.
    ProperKernel,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum)]
        algo: Algo,
        /// Decision target; defaults to the instance header for 2union files.
        #[arg(long)]
        k: Option<u64>,
        /// Error probability for --algo cc.
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the chosen vertices (file order, ascending).
        #[arg(long)]
        witness: bool,
        /// Use the weights from the file instead of unit weights.
        #[arg(long)]
        weighted: bool,
        /// Replace random recolorings by the full enumeration (--algo cc).
        #[arg(long)]
        exhaustive_recolorings: bool,
    },
    /// Apply a data reduction and write the reduced instance.
    Kernelize {
        instance: PathBuf,
        #[arg(long, value_enum)]
        rules: Rules,
        /// Decision target (required for colorpack and proper-kernel).
        #[arg(long)]
        k: Option<u64>,
        /// Output path; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a random instance.
    #[command(subcommand)]
    Generate(GenerateCmd),
    /// Translate a DIMACS CNF formula into a two-graph instance.
    ReduceSat {
        cnf: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep one parameter and print per-run CSV measurements.
    Bench {
        #[arg(long, value_enum)]
        sweep: SweepAxis,
        /// Comma-separated values of the swept parameter.
        #[arg(long, value_delimiter = ',', required = true)]
        points: Vec<u64>,
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 1_000)]
        c: u32,
        #[arg(long, default_value_t = 15)]
        gamma: u32,
        #[arg(long, default_value_t = 1)]
        repeats: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Run one benchmark measurement (used internally by `bench`).
    #[command(hide = true)]
    BenchPoint {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        gamma: u32,
        #[arg(long)]
        seed: u64,
    },
    /// Check a solution report against an instance.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
        /// Evaluate the claimed value under the file weights.
        #[arg(long)]
        weighted: bool,
    },
}

#[derive(Subcommand)]
enum GenerateCmd {
    /// Colored interval instance.
    Cisl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        gamma: u32,
        #[arg(long, default_value_t = 0.5)]
        color_prob: f64,
        #[arg(long, default_value_t = 10)]
        weight_max: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-graph instance.
    #[command(name = "2union")]
    TwoUnion {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: u32,
        #[arg(long, default_value_t = 0)]
        k: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A command failure: exit code plus message.
struct Failure(u8, String);

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure(2, msg.into())
    }

    fn precondition(msg: impl Into<String>) -> Self {
        Failure(3, msg.into())
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::RequiresSingletonColors { .. }
            | CoreError::RequiresUnitWeights { .. }
            | CoreError::RequiresProperRep { .. }
            | CoreError::RequiresClusterGraphs { .. }
            | CoreError::GammaTooLarge { .. }
            | CoreError::QTooLarge { .. }
            | CoreError::OracleLimit { .. }
            | CoreError::WeightOverflow
            | CoreError::EmptyRepresentation => 3,
            _ => 2,
        };
        Failure(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Solve {
            instance,
            algo,
            k,
            epsilon,
            seed,
            witness,
            weighted,
            exhaustive_recolorings,
        } => cmd_solve(
            &instance,
            algo,
            k,
            epsilon,
            seed,
            witness,
            weighted,
            exhaustive_recolorings,
        ),
        Command::Kernelize {
            instance,
            rules,
            k,
            out,
        } => cmd_kernelize(&instance, rules, k, out.as_deref()),
        Command::Generate(gen) => cmd_generate(gen),
        Command::ReduceSat { cnf, out } => cmd_reduce_sat(&cnf, out.as_deref()),
        Command::Bench {
            sweep,
            points,
            n,
            c,
            gamma,
            repeats,
            seed,
        } => {
            if points.is_empty() || repeats == 0 {
                return Err(Failure::usage("need at least one sweep point and repeat"));
            }
            bench::run_sweep(&BenchArgs {
                sweep,
                points,
                n,
                c,
                gamma,
                repeats,
                seed,
            })
            .map_err(Failure::usage)?;
            Ok(0)
        }
        Command::BenchPoint { n, c, gamma, seed } => {
            bench::run_point(n, c, gamma, seed).map_err(Failure::usage)?;
            Ok(0)
        }
        Command::Verify {
            instance,
            solution,
            weighted,
        } => cmd_verify(&instance, &solution, weighted),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<ParsedInstance, Failure> {
    parse_instance(&read_file(path)?).map_err(|e| Failure::usage(e.to_string()))
}

/// What a solve run produced, picks already in file vertex order.
struct Report {
    value: u64,
    picks: Option<Vec<usize>>,
}

fn print_report(rep: &Report, k: Option<u64>, witness: bool) -> u8 {
    match k {
        None => {
            println!("value {}", rep.value);
            if witness {
                print_picks(rep.picks.as_deref().unwrap_or(&[]));
            }
            0
        }
        Some(k) => {
            if rep.value >= k {
                println!("yes");
                if witness {
                    print_picks(rep.picks.as_deref().unwrap_or(&[]));
                }
                0
            } else {
                println!("no");
                1
            }
        }
    }
}

fn print_picks(picks: &[usize]) {
    let mut line = String::from("pick");
    for p in picks {
        line.push(' ');
        line.push_str(&p.to_string());
    }
    println!("{line}");
}

/// Decision-style output for solvers that search for a size-k set.
fn print_decision(sol: Option<&Solution>, picks: Option<Vec<usize>>, witness: bool) -> u8 {
    match sol {
        Some(_) => {
            println!("yes");
            if witness {
                print_picks(&picks.unwrap_or_default());
            }
            0
        }
        None => {
            println!("no");
            1
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    path: &Path,
    algo: Algo,
    k: Option<u64>,
    epsilon: f64,
    seed: u64,
    witness: bool,
    weighted: bool,
    exhaustive: bool,
) -> Result<u8, Failure> {
    let parsed = load(path)?;
    // decision targets of two-graph instances default to their header
    let header_k = match &parsed {
        ParsedInstance::TwoUnion(t) if t.k() > 0 => Some(t.k()),
        _ => None,
    };
    let k = k.or(header_k);

    // instances solved through the colored view carry a map back to file
    // vertex order
    let colored: Option<(ColoredIntervalGraph, Vec<usize>)> = match &parsed {
        ParsedInstance::Cisl { graph, map } => {
            let g = if weighted {
                graph.clone()
            } else {
                graph.with_unit_weights()
            };
            Some((g, map.to_input.clone()))
        }
        ParsedInstance::TwoUnion(t) => match algo {
            Algo::Matching | Algo::Brute => None,
            _ => {
                let (g, map) = two_union_to_cisl(t, ColorSide::Auto);
                Some((g, map.to_input))
            }
        },
    };

    match algo {
        Algo::Dpq => {
            let (g, back) = colored.expect("colored view exists");
            let report = if witness {
                let sol = solve_dp_q_witness(&g)?;
                Report {
                    value: sol.value,
                    picks: Some(to_file_order(&sol.vertices, &back)),
                }
            } else {
                Report {
                    value: solve_dp_q_value(&g)?,
                    picks: None,
                }
            };
            Ok(print_report(&report, k, witness))
        }
        Algo::Dpgamma => {
            if witness {
                return Err(Failure::usage(
                    "the reference DP reports values only; drop --witness or use --algo dpq",
                ));
            }
            let (g, _) = colored.expect("colored view exists");
            let report = Report {
                value: solve_dp_gamma(&g)?,
                picks: None,
            };
            Ok(print_report(&report, k, false))
        }
        Algo::Branch => {
            let k = k.ok_or_else(|| Failure::usage("--algo branch needs --k"))?;
            let (g, back) = colored.expect("colored view exists");
            let sol = solve_branch(&g, k)?;
            let picks = sol.as_ref().map(|s| to_file_order(&s.vertices, &back));
            Ok(print_decision(sol.as_ref(), picks, witness))
        }
        Algo::Cc => {
            let k = k.ok_or_else(|| Failure::usage("--algo cc needs --k"))?;
            let (g, back) = colored.expect("colored view exists");
            let sol = if exhaustive {
                solve_cc_exhaustive(&g, k)?
            } else {
                solve_cc(&g, &CcConfig::new(k, epsilon, seed))?
            };
            let picks = sol.as_ref().map(|s| to_file_order(&s.vertices, &back));
            Ok(print_decision(sol.as_ref(), picks, witness))
        }
        Algo::Matching => {
            let ParsedInstance::TwoUnion(t) = &parsed else {
                return Err(Failure::precondition(
                    "cluster-cluster matching requires a two-graph instance",
                ));
            };
            let sol = solve_cluster_cluster(t)?;
            let report = Report {
                value: sol.value,
                picks: Some(sol.vertices),
            };
            Ok(print_report(&report, k, witness))
        }
        Algo::Brute => {
            let report = match &parsed {
                ParsedInstance::TwoUnion(t) => {
                    let sol = brute_two_union(t)?;
                    Report {
                        value: sol.value,
                        picks: Some(sol.vertices),
                    }
                }
                ParsedInstance::Cisl { .. } => {
                    let (g, back) = colored.expect("colored view exists");
                    let sol = brute_max_cis(&g)?;
                    Report {
                        value: sol.value,
                        picks: Some(to_file_order(&sol.vertices, &back)),
                    }
                }
            };
            Ok(print_report(&report, k, witness))
        }
    }
}

fn to_file_order(vertices: &[usize], back: &[usize]) -> Vec<usize> {
    let mut picks: Vec<usize> = vertices.iter().map(|&v| back[v]).collect();
    picks.sort_unstable();
    picks
}

fn cmd_kernelize(
    path: &Path,
    rules: Rules,
    k: Option<u64>,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let parsed = load(path)?;
    match rules {
        Rules::Signature => {
            let ParsedInstance::TwoUnion(t) = &parsed else {
                return Err(Failure::precondition(
                    "signature reduction requires a two-graph instance",
                ));
            };
            let t = t.compactified();
            let c_all = t.c_all() as u64;
            let (rep1, _) = t.rep(Side::First);
            let (rep2, _) = t.rep(Side::Second);
            let bound = if is_proper_rep(&rep1) || is_proper_rep(&rep2) {
                (c_all * c_all * c_all).min(2 * c_all * c_all)
            } else {
                c_all * c_all * c_all
            };
            let red = signature_reduce(&t);
            assert!(
                red.instance.n() as u64 <= bound.max(1),
                "reduced size {} exceeds the guaranteed bound {bound}",
                red.instance.n()
            );
            eprintln!(
                "stats rules=signature input_n={} output_n={} c_all={} bound={} k={} k_prime={}",
                t.n(),
                red.instance.n(),
                c_all,
                bound,
                t.k(),
                t.k()
            );
            write_output(out, &serialize_two_union(&red.instance))?;
            Ok(0)
        }
        Rules::Colorpack => {
            let k = k.ok_or_else(|| Failure::usage("--rules colorpack needs --k"))?;
            let g = require_cisl(&parsed, "color packing")?.with_unit_weights();
            let red = color_pack_reduce(&g, k)?;
            eprintln!(
                "stats rules=colorpack input_n={} output_n={} k={} k_prime={} fired={}",
                g.n(),
                red.graph.n(),
                k,
                red.k,
                red.fired.len()
            );
            write_output(out, &serialize_cisl(&red.graph))?;
            Ok(0)
        }
        Rules::ProperKernel => {
            let k = k.ok_or_else(|| Failure::usage("--rules proper-kernel needs --k"))?;
            let ParsedInstance::Cisl { graph, map } = &parsed else {
                return Err(Failure::precondition(
                    "the proper kernel works on colored instances",
                ));
            };
            let g = graph.with_unit_weights();
            match kernelize_proper(&g, k)? {
                KernelOutcome::SolvedYes { certificate } => {
                    println!("solved yes");
                    print_picks(&to_file_order(&certificate.vertices, &map.to_input));
                    eprintln!(
                        "stats rules=proper-kernel input_n={} output_n=0 k={} solved=yes",
                        g.n(),
                        k
                    );
                    Ok(0)
                }
                KernelOutcome::Reduced { graph, k: k2, .. } => {
                    let omega = stats(&graph).omega as u64;
                    let bound = 4 * k2 * k2 * omega;
                    assert!(
                        graph.is_empty() || graph.n() as u64 <= bound,
                        "kernel size {} exceeds the guaranteed bound {bound}",
                        graph.n()
                    );
                    eprintln!(
                        "stats rules=proper-kernel input_n={} output_n={} omega={} bound={} k={} k_prime={}",
                        g.n(),
                        graph.n(),
                        omega,
                        bound,
                        k,
                        k2
                    );
                    write_output(out, &serialize_cisl(&graph))?;
                    Ok(0)
                }
            }
        }
    }
}

fn require_cisl<'a>(
    parsed: &'a ParsedInstance,
    what: &str,
) -> Result<&'a ColoredIntervalGraph, Failure> {
    match parsed {
        ParsedInstance::Cisl { graph, .. } => Ok(graph),
        ParsedInstance::TwoUnion(_) => Err(Failure::precondition(format!(
            "{what} works on colored instances"
        ))),
    }
}

fn cmd_generate(gen: GenerateCmd) -> Result<u8, Failure> {
    match gen {
        GenerateCmd::Cisl {
            n,
            c,
            gamma,
            color_prob,
            weight_max,
            seed,
            out,
        } => {
            let mut p = GenParams::new(n, c, gamma, seed);
            p.color_prob = color_prob;
            p.weight_max = weight_max;
            let g = jisolve_core::gen_cisl(&p)?;
            write_output(out.as_deref(), &serialize_cisl(&g))?;
            Ok(0)
        }
        GenerateCmd::TwoUnion { n, c, k, seed, out } => {
            let p = GenParams::new(n, c, 1, seed);
            let t = jisolve_core::gen_two_union(&p, k)?;
            write_output(out.as_deref(), &serialize_two_union(&t))?;
            Ok(0)
        }
    }
}

fn cmd_reduce_sat(path: &Path, out: Option<&Path>) -> Result<u8, Failure> {
    let text = read_file(path)?;
    let cnf = parse_dimacs(&text).map_err(Failure::usage)?;
    let t = reduce_sat3(&cnf)?;
    write_output(out, &serialize_two_union(&t))?;
    Ok(0)
}

/// DIMACS CNF: `c` comments, a `p cnf <vars> <clauses>` header, then
/// whitespace-separated literals with a `0` terminating each clause.
/// Declared-but-unused variables are renumbered away.
fn parse_dimacs(text: &str) -> Result<Cnf3, String> {
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut seen_header = false;
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 4 || f[1] != "cnf" {
                return Err(format!("line {}: malformed problem line", no + 1));
            }
            seen_header = true;
            continue;
        }
        if !seen_header {
            return Err(format!("line {}: clause before the problem line", no + 1));
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| format!("line {}: invalid literal `{tok}`", no + 1))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    // renumber to the variables that actually occur
    let mut used: Vec<i32> = clauses.iter().flatten().map(|l| l.abs()).collect();
    used.sort_unstable();
    used.dedup();
    let renumbered: Vec<Vec<i32>> = clauses
        .iter()
        .map(|cl| {
            cl.iter()
                .map(|&l| {
                    let v = used.binary_search(&l.abs()).unwrap() as i32 + 1;
                    if l > 0 {
                        v
                    } else {
                        -v
                    }
                })
                .collect()
        })
        .collect();
    Cnf3::new(used.len(), renumbered).map_err(|e| e.to_string())
}

fn cmd_verify(instance: &Path, solution: &Path, weighted: bool) -> Result<u8, Failure> {
    let parsed = load(instance)?;
    let report =
        parse_solution(&read_file(solution)?).map_err(|e| Failure::usage(e.to_string()))?;
    let Some(claimed) = report.value else {
        return Err(Failure::usage("solution file carries no `value` line"));
    };
    if let Some(&bad) = report.picks.iter().find(|&&p| p >= parsed.n()) {
        println!("invalid: vertex {bad} out of range");
        return Ok(1);
    }
    let outcome = match &parsed {
        ParsedInstance::Cisl { graph, map } => {
            let g = if weighted {
                graph.clone()
            } else {
                graph.with_unit_weights()
            };
            let internal: Vec<usize> = report.picks.iter().map(|&p| map.to_sorted[p]).collect();
            check_colorful_independent(&g, &internal).map_err(|violation| {
                // name vertices in file order
                remap_violation(violation, &map.to_input)
            })
        }
        ParsedInstance::TwoUnion(t) => check_two_union_independent(t, &report.picks),
    };
    match outcome {
        Err(violation) => {
            println!("invalid: {violation}");
            Ok(1)
        }
        Ok(actual) if actual != claimed => {
            println!(
                "invalid: {}",
                jisolve_core::Violation::ValueMismatch { claimed, actual }
            );
            Ok(1)
        }
        Ok(_) => {
            println!("valid");
            Ok(0)
        }
    }
}

fn remap_violation(
    v: jisolve_core::Violation,
    to_input: &[usize],
) -> jisolve_core::Violation {
    use jisolve_core::Violation::*;
    let fix = |a: usize, b: usize| (to_input[a].min(to_input[b]), to_input[a].max(to_input[b]));
    match v {
        IntervalsIntersect(a, b) => {
            let (a, b) = fix(a, b);
            IntervalsIntersect(a, b)
        }
        IntervalsIntersectSecond(a, b) => {
            let (a, b) = fix(a, b);
            IntervalsIntersectSecond(a, b)
        }
        ColorsIntersect(a, b) => {
            let (a, b) = fix(a, b);
            ColorsIntersect(a, b)
        }
        DuplicateVertex(a) => DuplicateVertex(to_input[a]),
        other => other,
    }
}
