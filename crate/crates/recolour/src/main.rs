//! Thin command-line front end; every capability lives in the library.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use recolour::colouring::verify_recolouring;
use recolour::hardness;
use recolour::io;
use recolour::oracle::StateSpaceLimits;
use recolour::report::{
    dispatch_oracle, dispatch_solve, Decision, ForcedSolver, RunReport, Timings, REPORT_SCHEMA,
};

#[derive(Parser)]
#[command(
    name = "recolour",
    version,
    about = "Decide whether one proper graph colouring can reach another by single-vertex recolourings within a step budget"
)]
struct Cli {
    /// Emit the run report as JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Reserved for random-instance helpers in test harnesses; accepted and
    /// currently unused.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file with the engine its palette calls for.
    Solve {
        input: PathBuf,
        /// Write a witness file here when the answer is yes.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Override the engine choice (cross-validation runs).
        #[arg(long = "force-solver", value_enum)]
        force_solver: Option<ForceArg>,
    },
    /// Exact brute-force search over the space of proper colourings.
    Oracle {
        input: PathBuf,
        /// Cap on the number of colourings visited before giving up.
        #[arg(long = "max-states", default_value_t = 10_000_000)]
        max_states: usize,
    },
    /// Compile a Hitting Set file into a recolouring instance.
    GenHs {
        input: PathBuf,
        /// Palette size of the generated instance (at least 4).
        #[arg(short, default_value_t = 4)]
        k: u8,
        /// Output prefix; writes `<prefix>.instance` and `<prefix>.roles`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Replay a witness file against an instance file.
    Verify { input: PathBuf, witness: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum ForceArg {
    ExactSmallK,
    Solver3,
    Fpt,
}

impl From<ForceArg> for ForcedSolver {
    fn from(arg: ForceArg) -> ForcedSolver {
        match arg {
            ForceArg::ExactSmallK => ForcedSolver::ExactSmallK,
            ForceArg::Solver3 => ForcedSolver::Solver3,
            ForceArg::Fpt => ForcedSolver::Fpt,
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // 0, 1 and 2 are decision exit codes; usage problems must not
            // masquerade as them.
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(3);
        }
    }
}

fn run(cli: Cli) -> Result<i32, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Solve {
            input,
            witness,
            force_solver,
        } => {
            let parse_start = Instant::now();
            let inst = io::read_instance(&input)?;
            let parse_ms = elapsed_ms(parse_start);
            let solve_start = Instant::now();
            let outcome = dispatch_solve(&inst, force_solver.map(Into::into), witness.is_some())?;
            let solve_ms = elapsed_ms(solve_start);
            let mut report = RunReport::new(outcome.decision, Some(outcome.solver));
            report.distance = outcome.distance;
            report.timings = Timings { parse_ms, solve_ms };
            if let (Some(path), Some(seq)) = (&witness, &outcome.witness) {
                let check = verify_recolouring(&inst.graph, &inst.alpha, &inst.beta, seq);
                if let Some(failure) = check.failure {
                    return Err(format!("internal: produced witness fails verification: {failure}").into());
                }
                io::write_file(path, &io::write_witness(seq))?;
                report.witness_path = Some(path.display().to_string());
            }
            emit(&report, cli.json);
            Ok(report.decision.exit_code())
        }
        Command::Oracle { input, max_states } => {
            let parse_start = Instant::now();
            let inst = io::read_instance(&input)?;
            let parse_ms = elapsed_ms(parse_start);
            let solve_start = Instant::now();
            let outcome = dispatch_oracle(&inst, &StateSpaceLimits::with_max_states(max_states));
            let solve_ms = elapsed_ms(solve_start);
            let mut report = RunReport::new(outcome.decision, Some(outcome.solver));
            report.distance = outcome.distance;
            report.timings = Timings { parse_ms, solve_ms };
            emit(&report, cli.json);
            Ok(report.decision.exit_code())
        }
        Command::GenHs { input, k, out } => {
            let hs = io::read_hitting_set(&input)?;
            let prepared = hardness::preprocess(&hs)?;
            let gadget = hardness::generate(&prepared.instance, k)?;
            let instance_path = out.with_extension("instance");
            let roles_path = out.with_extension("roles");
            io::write_file(&instance_path, &io::write_instance(&gadget.instance))?;
            io::write_file(&roles_path, &io::write_roles(&gadget))?;
            let summary = GenHsReport {
                schema: REPORT_SCHEMA,
                ell: gadget.instance.ell,
                vertices: gadget.instance.graph.n(),
                edges: gadget.instance.graph.m(),
                instance_path: instance_path.display().to_string(),
                roles_path: roles_path.display().to_string(),
            };
            if cli.json {
                println!("{}", serde_json::to_string(&summary)?);
            } else {
                println!(
                    "ell {} vertices {} edges {}",
                    summary.ell, summary.vertices, summary.edges
                );
                println!("wrote {} and {}", summary.instance_path, summary.roles_path);
            }
            Ok(0)
        }
        Command::Verify { input, witness } => {
            let parse_start = Instant::now();
            let inst = io::read_instance(&input)?;
            let seq = io::read_witness(&witness)?;
            let parse_ms = elapsed_ms(parse_start);
            let solve_start = Instant::now();
            let check = verify_recolouring(&inst.graph, &inst.alpha, &inst.beta, &seq);
            let solve_ms = elapsed_ms(solve_start);
            let decision = if check.accepted() {
                Decision::Yes
            } else {
                Decision::No
            };
            let mut report = RunReport::new(decision, None);
            report.timings = Timings { parse_ms, solve_ms };
            if cli.json {
                println!("{}", serde_json::to_string(&report)?);
            } else if let Some(failure) = &check.failure {
                println!("reject: {failure}");
            } else {
                println!("accept: {} steps", seq.len());
            }
            Ok(report.decision.exit_code())
        }
    }
}

#[derive(Serialize)]
struct GenHsReport {
    schema: u32,
    ell: u64,
    vertices: usize,
    edges: usize,
    instance_path: String,
    roles_path: String,
}

fn emit(report: &RunReport, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string(report).expect("report serializes")
        );
    } else {
        println!("decision: {}", report.decision);
        if let Some(d) = report.distance {
            println!("distance: {d}");
        }
        if let Some(solver) = report.solver {
            println!("solver: {solver}");
        }
        if let Some(path) = &report.witness_path {
            println!("witness: {path}");
        }
        println!(
            "timings: parse {} ms, solve {} ms",
            report.timings.parse_ms, report.timings.solve_ms
        );
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}
