//! `pentctl`: verify, develop, classify and construct PENT(k, r, w) geometries.

mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use pentgeom::construct::{
    construction36, from_girth5_graph, gdd_fill, pent3_threshold, plan_pent3, plan_pent5, product,
    triple, Built,
};
use pentgeom::designs::{sts, uniform_gdd};
use pentgeom::graphs::{generalized_petersen, hoffman_singleton, petersen, report};
use pentgeom::hillclimb::{climb_3gdd, climb_sts, ClimbConfig};
use pentgeom::pent::verify;
use pentgeom::{Error, Geometry};

use input::{
    load_fill_plan, load_geometry, load_graph, load_orbit_graph, read_input, write_output,
};

#[derive(Parser)]
#[command(
    name = "pentctl",
    version,
    about = "Generalized pentagonal geometry toolkit"
)]
struct Cli {
    /// Worker threads for the parallel checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom and print the structural report.
    Verify {
        /// A `.pent` listing or geometry JSON; `-` reads stdin.
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Expand a `.pent` listing into geometry JSON.
    Develop {
        file: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Print the type letter A to F.
    Classify { file: String },
    /// Emit a named or orbit-generated graph as an edge list.
    Graph {
        #[command(subcommand)]
        which: GraphKind,
        /// Print degree, girth and connectivity as JSON instead.
        #[arg(long, global = true)]
        report: bool,
    },
    /// A Steiner triple system of order W.
    Sts {
        w: usize,
        /// Find it by hill climbing instead of a direct construction.
        #[arg(long)]
        climb: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// A K-GDD with groups of size G; by default a transversal design (K groups).
    Gdd {
        k: usize,
        g: usize,
        /// Number of groups; with `--climb` any admissible count works for K = 3.
        #[arg(long)]
        groups: Option<usize>,
        #[arg(long)]
        climb: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build a geometry and write it as JSON with its provenance.
    Construct(ConstructArgs),
    /// Arithmetic plans for large replication numbers.
    Plan {
        #[command(subcommand)]
        which: PlanKind,
        #[arg(long, global = true)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum GraphKind {
    Petersen,
    /// Generalized Petersen graph GP(N, 2).
    Gp {
        n: usize,
    },
    /// Hoffman-Singleton graph.
    Hs,
    /// Orbits of base edges; the file holds `step modulus` then `a b` per base edge.
    Orbit {
        file: String,
    },
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    how: ConstructKind,
    #[arg(short, long, global = true)]
    output: Option<String>,
    /// Seed for any hill climbing.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Steps per climbing attempt.
    #[arg(long, global = true)]
    max_iterations: Option<u64>,
    /// Climbing attempts, with seeds seed, seed + 1, ...
    #[arg(long, global = true)]
    restarts: Option<u32>,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// PENT(3, 3r+1, 3w) from a PENT(3, r, w).
    Tripling { file: String },
    /// PENT(k, hr + (h-1)/(k-1), hw) from a PENT(k, r, w).
    Product {
        file: String,
        #[arg(long)]
        h: usize,
    },
    /// Fill the groups of a GDD with geometries; SPEC is a JSON plan.
    GddFill { spec: String },
    /// PENT(3, (n-4)/2) from a cubic graph of girth at least 5.
    Girth5 { graph: String },
    /// Inflate a regular graph of girth at least 5 by H.
    C36 {
        graph: String,
        #[arg(long)]
        h: usize,
        /// Block size; defaults to H.
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Subcommand)]
enum PlanKind {
    /// Two-stage fill for PENT(3, R, W) from PENT(3, R0/R1/R2, W).
    Pent3 {
        r0: usize,
        r1: usize,
        r2: usize,
        w: usize,
        r: usize,
    },
    /// Decomposition for a type B PENT(5, R).
    Pent5 { r: usize },
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ClimbFailed { .. } => 3,
            Error::Syntax { .. }
            | Error::Format(_)
            | Error::ArityMismatch { .. }
            | Error::RepeatedPoint { .. }
            | Error::PointOutOfRange { .. }
            | Error::StepNotDividingV { .. }
            | Error::NonIntegralLineCount { .. }
            | Error::ParameterDomain(_) => 2,
            _ => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<(), Failure>;

/// Compact JSON for bulk data such as line lists.
fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable value");
    s.push('\n');
    s
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

fn run_verify(file: &str, json: bool) -> CmdResult {
    let g = load_geometry(&read_input(file)?)?;
    let rep = verify(&g);
    if json {
        print!("{}", to_json(&rep.to_json()));
    } else {
        let p = rep.params;
        println!(
            "PENT({},{},{}): v = {}, b = {}",
            p.k, p.r, p.w, p.v, rep.num_lines
        );
        for (axiom, check) in [
            ("partial_linear", &rep.axioms.partial_linear),
            ("uniform", &rep.axioms.uniform),
            ("regular", &rep.axioms.regular),
            ("opposite_designs", &rep.axioms.opposite_designs),
        ] {
            match &check.witness {
                None => println!("  {axiom}: ok"),
                Some(w) => println!("  {axiom}: FAIL ({w})"),
            }
        }
        let d = &rep.deficiency;
        let girth = d
            .girth
            .cycle_length()
            .map_or("inf".to_string(), |g| g.to_string());
        println!(
            "  deficiency: girth {girth}, {}, components {:?}",
            if d.connected {
                "connected"
            } else {
                "disconnected"
            },
            d.component_sizes
        );
        if let Some(s) = rep.line_split {
            println!(
                "  lines: {} opposite, {} non-opposite, e = {}",
                s.b_opp, s.b_non_opp, s.e
            );
        }
        if rep.is_valid() {
            println!("  type {}", rep.geometry_type);
        }
    }
    if rep.is_valid() {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: rep.errors.join("\n"),
        })
    }
}

fn run_classify(file: &str) -> CmdResult {
    let g = load_geometry(&read_input(file)?)?;
    let rep = verify(&g);
    if !rep.is_valid() {
        return Err(Failure {
            code: 1,
            message: rep.errors.join("\n"),
        });
    }
    println!("{}", rep.geometry_type);
    Ok(())
}

fn run_graph(which: GraphKind, want_report: bool) -> CmdResult {
    let g = match which {
        GraphKind::Petersen => petersen(),
        GraphKind::Gp { n } => generalized_petersen(n)?,
        GraphKind::Hs => hoffman_singleton(),
        GraphKind::Orbit { file } => load_orbit_graph(&read_input(&file)?)?,
    };
    if want_report {
        print!("{}", to_json(&report(&g)));
    } else {
        print!("{}", g.to_text());
    }
    Ok(())
}

fn climb_cfg(args: &ConstructArgs, pairs: usize) -> Option<ClimbConfig> {
    if args.seed.is_none() && args.max_iterations.is_none() && args.restarts.is_none() {
        return None;
    }
    let mut cfg = ClimbConfig::for_pairs(pairs, args.seed.unwrap_or(0));
    if let Some(m) = args.max_iterations {
        cfg.max_iterations = m;
    }
    if let Some(r) = args.restarts {
        cfg.restarts = r;
    }
    Some(cfg)
}

fn run_construct(args: ConstructArgs) -> CmdResult {
    let built: Built = match &args.how {
        ConstructKind::Tripling { file } => triple(&load_geometry(&read_input(file)?)?)?,
        ConstructKind::Product { file, h } => product(&load_geometry(&read_input(file)?)?, *h)?,
        ConstructKind::GddFill { spec } => gdd_fill(&load_fill_plan(spec)?)?,
        ConstructKind::Girth5 { graph } => {
            let c = load_graph(graph)?;
            from_girth5_graph(&c, climb_cfg(&args, c.n() * c.n() / 2))?
        }
        ConstructKind::C36 { graph, h, k } => {
            let c = load_graph(graph)?;
            let v = c.n() * h;
            construction36(&c, *h, k.unwrap_or(*h), climb_cfg(&args, v * v / 2))?
        }
    };
    let p = built.geometry.params();
    eprintln!(
        "PENT({},{},{}): v = {}, b = {}, type {}, {} climbed lines",
        p.k,
        p.r,
        p.w,
        p.v,
        built.geometry.num_lines(),
        built.report.geometry_type,
        built.climbed
    );
    write_output(args.output.as_deref(), &to_json_line(&built.to_json()))
}

fn run_sts(w: usize, climb: bool, seed: u64) -> CmdResult {
    let s = if climb {
        climb_sts(
            w,
            Some(ClimbConfig::for_pairs(w * w.saturating_sub(1) / 2, seed)),
        )?
    } else {
        sts(w)?
    };
    print!("{}", to_json_line(&s.to_json()));
    Ok(())
}

fn run_gdd(k: usize, g: usize, groups: Option<usize>, climb: bool, seed: u64) -> CmdResult {
    let u = groups.unwrap_or(k);
    let d = if climb {
        if k != 3 {
            return Err(Failure::usage("--climb builds 3-GDDs only"));
        }
        climb_3gdd(
            g,
            u,
            Some(ClimbConfig::for_pairs(
                g * g * u * u.saturating_sub(1) / 2,
                seed,
            )),
        )?
    } else if u == k {
        uniform_gdd(k, g)?
    } else {
        return Err(Failure::usage(
            "without --climb the group count must equal K",
        ));
    };
    print!("{}", to_json_line(&d.to_json()));
    Ok(())
}

fn run_plan(which: PlanKind, json: bool) -> CmdResult {
    match which {
        PlanKind::Pent3 { r0, r1, r2, w, r } => {
            let plan = plan_pent3(r0, r1, r2, w, r)?;
            if json {
                print!("{}", to_json(&plan));
            } else {
                println!(
                    "PENT(3,{r},{w}) = v2 u/2 + v1 t/2 + r3 with v1 = {}, v2 = {}, t = {}, u = {}, r3 = {}",
                    plan.v1, plan.v2, plan.t, plan.u, plan.r3
                );
                println!("threshold {}", pent3_threshold(r0, r1, r2, w)?);
            }
        }
        PlanKind::Pent5 { r } => {
            let plan = plan_pent5(r)?;
            if json {
                print!("{}", to_json(&plan));
            } else {
                println!(
                    "PENT(5,{r}): v = {}, q = {}, h = {}, m = {} = {}x10 + {}x18 + {}x30",
                    plan.v, plan.q, plan.h, plan.m, plan.tens, plan.eighteens, plan.thirties
                );
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::usage(format!("--threads: {e}")))?;
    }
    match cli.command {
        Command::Verify { file, json } => run_verify(&file, json),
        Command::Develop { file, output } => {
            let g: Geometry = load_geometry(&read_input(&file)?)?;
            write_output(output.as_deref(), &to_json_line(&g.to_json()))
        }
        Command::Classify { file } => run_classify(&file),
        Command::Graph { which, report } => run_graph(which, report),
        Command::Sts { w, climb, seed } => run_sts(w, climb, seed),
        Command::Gdd {
            k,
            g,
            groups,
            climb,
            seed,
        } => run_gdd(k, g, groups, climb, seed),
        Command::Construct(args) => run_construct(args),
        Command::Plan { which, json } => run_plan(which, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("pentctl: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
