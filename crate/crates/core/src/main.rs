use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use starfree::exact::{ExactSolver, DEFAULT_SOLVER_CAP};
use starfree::generators::GeneratorKind;
use starfree::harness::{greedy_worst_ratio_search, run_ratio_experiment, ExperimentConfig};
use starfree::heuristics::{approximation_ratio, greedy_mis, t_local_search, TieBreak};
use starfree::io::{read_graph_file, write_graph, GraphFormat};
use starfree::recognition::Recognizer;
use starfree::{Error, Graph, ProblemKind, VertexSet};

#[derive(Parser)]
#[command(name = "starfree", version, about = "Dominating and independent sets on K_{1,r}-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph
    Gen(GenArgs),
    /// Test membership in K_{1,r}-free (free) or almost K_{1,r}-free (acf) graphs
    Check {
        class: Class,
        #[arg(long)]
        r: usize,
        file: PathBuf,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Solve MDS, MIS or MIDS exactly or heuristically
    Solve(SolveArgs),
    /// Batch experiments
    #[command(subcommand)]
    Experiment(ExperimentCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Free,
    Acf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dimacs,
    Edges,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Dimacs => GraphFormat::Dimacs,
            Format::Edges => GraphFormat::EdgeList,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "dimacs", global = true)]
    format: Format,
}

#[derive(Subcommand)]
enum GenKind {
    /// p disjoint copies of K_{1,r-1}
    StarForest {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        r: usize,
    },
    /// Erdős–Rényi G(n, p)
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        prob: f64,
    },
    /// Line graph of G(n, p)
    LineGraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        prob: f64,
    },
    /// G(n, p) repaired until K_{1,r}-free
    StarFree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        prob: f64,
        #[arg(long)]
        r: usize,
    },
    /// A vertex joined to every vertex of a k-vertex path
    Fan {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum MethodArg {
    Exact,
    Greedy,
    Local,
}

#[derive(Clone, Copy, ValueEnum)]
enum InitArg {
    Greedy,
    Full,
    File,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    problem: ProblemKind,
    #[arg(long, value_enum)]
    method: MethodArg,
    /// Local search radius
    #[arg(long, default_value_t = 1)]
    t: usize,
    /// Initial solution for local search; defaults to greedy (MIS, MIDS) or all vertices (MDS)
    #[arg(long, value_enum)]
    init: Option<InitArg>,
    /// Whitespace-separated 0-based vertices, used with `--init file`
    #[arg(long)]
    init_file: Option<PathBuf>,
    #[arg(long)]
    max_iterations: Option<usize>,
    /// Warn when n^(2t) exceeds this many candidate swaps
    #[arg(long, default_value_t = 1e9)]
    work_budget: f64,
    #[arg(long, default_value_t = DEFAULT_SOLVER_CAP)]
    cap: usize,
    /// Also report the exact optimum and the approximation ratio
    #[arg(long)]
    ratio: bool,
    /// Print Greedy picks or local search improvements
    #[arg(long)]
    trace: bool,
    /// Emit a single JSON line
    #[arg(long)]
    json: bool,
    #[arg(long)]
    format: Option<Format>,
    file: PathBuf,
}

#[derive(Subcommand)]
enum ExperimentCommand {
    /// Ratio experiment described by a TOML config
    Ratio {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Search for large alpha/alpha' ratios of Greedy on K_{1,r}-free graphs
    GreedyWorst {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Error::BoundViolation(v)) => {
            eprintln!("error: {v}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> starfree::Result<ExitCode> {
    match cli.command {
        Command::Gen(args) => gen(args),
        Command::Check { class, r, file, format } => check(class, r, &file, format),
        Command::Solve(args) => solve(args),
        Command::Experiment(cmd) => experiment(cmd),
    }
}

fn gen(args: GenArgs) -> starfree::Result<ExitCode> {
    let kind = match args.kind {
        GenKind::StarForest { p, r } => GeneratorKind::StarForest { p, r },
        GenKind::Gnp { n, prob } => GeneratorKind::Gnp { n, prob },
        GenKind::LineGraph { n, prob } => {
            GeneratorKind::LineGraphOf { inner: Box::new(GeneratorKind::Gnp { n, prob }) }
        }
        GenKind::StarFree { n, prob, r } => GeneratorKind::RandomStarFree { n, prob, r },
        GenKind::Fan { k } => GeneratorKind::Fan { k },
    };
    let graph = kind.generate(args.seed)?;
    let bytes = write_graph(&graph, args.format.into());
    match args.output {
        Some(path) => fs::write(path, bytes)?,
        None => print!("{}", String::from_utf8_lossy(&bytes)),
    }
    Ok(ExitCode::SUCCESS)
}

fn check(class: Class, r: usize, file: &PathBuf, format: Option<Format>) -> starfree::Result<ExitCode> {
    let graph = read_graph_file(file, format.map(Into::into))?;
    let recognizer = Recognizer::default();
    let member = match class {
        Class::Free => match recognizer.find_induced_star(&graph, r)? {
            None => true,
            Some(w) => {
                println!("not K_1,{r}-free: {w}");
                false
            }
        },
        Class::Acf => match recognizer.find_acf_violation(&graph, r)? {
            None => true,
            Some(v) => {
                println!("not almost K_1,{r}-free: {v}");
                false
            }
        },
    };
    if member {
        println!("member");
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn read_vertex_list(path: &PathBuf, n: usize) -> starfree::Result<VertexSet> {
    let text = fs::read_to_string(path)?;
    let mut vertices = Vec::new();
    for token in text.split_whitespace() {
        let v = token
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad vertex `{token}` in {}", path.display())))?;
        vertices.push(v);
    }
    VertexSet::from_vertices(n, vertices)
}

fn initial_set(args: &SolveArgs, graph: &Graph) -> starfree::Result<Option<VertexSet>> {
    Ok(match args.init {
        None => None,
        Some(InitArg::Greedy) => Some(greedy_mis(graph, TieBreak::MinIndex).result),
        Some(InitArg::Full) => Some(VertexSet::full(graph.n())),
        Some(InitArg::File) => {
            let path = args
                .init_file
                .as_ref()
                .ok_or_else(|| Error::InvalidParameter("--init file needs --init-file PATH".into()))?;
            Some(read_vertex_list(path, graph.n())?)
        }
    })
}

fn solve(args: SolveArgs) -> starfree::Result<ExitCode> {
    let graph = read_graph_file(&args.file, args.format.map(Into::into))?;
    let solver = ExactSolver::new(args.cap)?;
    let mut trace_lines = Vec::new();
    let mut certified = None;

    let set = match args.method {
        MethodArg::Exact => solver.solve(&graph, args.problem)?.witness,
        MethodArg::Greedy => {
            let trace = greedy_mis(&graph, TieBreak::MinIndex);
            for p in &trace.picks {
                trace_lines.push(format!("pick {} degree {}", p.vertex, p.degree));
            }
            trace.result
        }
        MethodArg::Local => {
            let work = (graph.n() as f64).powi(2 * args.t as i32);
            if work > args.work_budget {
                eprintln!(
                    "warning: neighborhood scan may visit ~{work:.2e} candidate swaps (budget {:.2e})",
                    args.work_budget
                );
            }
            let init = initial_set(&args, &graph)?;
            let budget = args.max_iterations.unwrap_or(graph.n() + 1);
            let outcome = t_local_search(&graph, args.problem, init.as_ref(), args.t, budget)?;
            for imp in &outcome.improvements {
                trace_lines.push(format!("swap [{}] {} -> {}", imp.swap, imp.before, imp.after));
            }
            certified = Some(outcome.certified_local);
            outcome.solution.into_set()
        }
    };

    let feasible = graph.is_feasible(args.problem, &set)?;
    let optimum = if args.ratio && args.method != MethodArg::Exact {
        Some(solver.solve(&graph, args.problem)?.optimum)
    } else {
        None
    };
    let ratio = optimum.map(|opt| approximation_ratio(args.problem, opt, set.len())).transpose()?;

    if args.json {
        let line = json!({
            "problem": args.problem.as_str(),
            "method": match args.method { MethodArg::Exact => "exact", MethodArg::Greedy => "greedy", MethodArg::Local => "local" },
            "t": (args.method == MethodArg::Local).then_some(args.t),
            "n": graph.n(),
            "m": graph.m(),
            "value": set.len(),
            "witness": set.to_vec(),
            "feasible": feasible,
            "certified_local": certified,
            "opt": optimum,
            "ratio": ratio.map(|q| format!("{}/{}", q.numer(), q.denom())),
        });
        println!("{line}");
    } else {
        if args.trace {
            for line in &trace_lines {
                println!("{line}");
            }
        }
        println!("value {}", set.len());
        println!("witness {set}");
        if !feasible {
            println!("note: set is not feasible for {}", args.problem);
        }
        if certified == Some(false) {
            println!("note: iteration budget exhausted before reaching a {}-local solution", args.t);
        }
        if let (Some(opt), Some(q)) = (optimum, ratio) {
            println!("opt {opt}");
            println!("ratio {q}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn experiment(cmd: ExperimentCommand) -> starfree::Result<ExitCode> {
    match cmd {
        ExperimentCommand::Ratio { config, csv } => {
            let config = ExperimentConfig::from_file(config)?;
            let report = run_ratio_experiment(&config)?;
            for s in &report.skipped {
                eprintln!("skipped {}: {}", s.graph_id, s.reason);
            }
            match csv {
                Some(path) => report.write_csv(fs::File::create(path)?)?,
                None => report.write_csv(std::io::stdout().lock())?,
            }
            eprintln!("problem,r,method,instances,max_ratio,mean_ratio");
            for s in report.summary() {
                eprintln!("{},{},{},{},{},{:.6}", s.problem, s.r, s.method, s.instances, s.max_ratio, s.mean_ratio);
            }
            Ok(ExitCode::SUCCESS)
        }
        ExperimentCommand::GreedyWorst { r, n_max, trials, seed, csv } => {
            let search = greedy_worst_ratio_search(r, n_max, trials, seed, &ExactSolver::default())?;
            if let Some(path) = csv {
                search.write_csv(fs::File::create(path)?)?;
            }
            let Some(best) = search.best() else {
                println!("no trials run");
                return Ok(ExitCode::SUCCESS);
            };
            println!(
                "best ratio {} (alpha {} / alpha' {}) on {} with tie-break {}",
                best.ratio, best.alpha, best.alpha_prime, best.graph_id, best.tie_break
            );
            if let Some(g) = &search.best_graph {
                print!("{}", String::from_utf8_lossy(&write_graph(g, GraphFormat::Dimacs)));
            }
            if *best.ratio.numer() > (r as u64 - 1) * *best.ratio.denom() {
                eprintln!("error: ratio exceeds r - 1 = {}", r - 1);
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
