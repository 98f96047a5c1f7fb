//! Command-line front end; every subcommand is a thin wrapper over the
//! library. Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 enumeration budget exceeded.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lexfair::{
    ef_exists, efx_po_catalogue, generate, mms_enumerate, mms_threshold, po_dominance_search,
    potential_envy_graph, rows_to_csv, run_bench, solve_chores_ef1,
    solve_chores_efx_po_two_agents, solve_goods, source_scc, verify_report, Agent, AgentOrdering,
    Allocation, Criteria, Error, GenConfig, Instance, Polarity, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "lexfair",
    version,
    about = "Fair allocation of indivisible goods and chores under weakly lexicographic preferences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded random instance and print its JSON.
    Gen(GenArgs),
    /// Solve an instance and print the allocation plus a verification report.
    Solve(SolveArgs),
    /// Verify an allocation against an instance and print the report.
    Verify(VerifyArgs),
    /// Print per-agent maximin-share thresholds.
    Mms(InstanceArg),
    /// Exhaustive brute-force searches on small instances.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Print the potential envy graph of a (possibly partial) allocation.
    EnvyGraph(EnvyGraphArgs),
    /// Solve batches of generated instances and print CSV results.
    Bench(BenchArgs),
}

#[derive(Copy, Clone, ValueEnum)]
enum PolarityArg {
    Goods,
    Chores,
}

impl From<PolarityArg> for Polarity {
    fn from(value: PolarityArg) -> Self {
        match value {
            PolarityArg::Goods => Polarity::Goods,
            PolarityArg::Chores => Polarity::Chores,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum CriteriaArg {
    Null,
    Efx,
    Mms,
    #[value(name = "efx-mms")]
    EfxMms,
}

impl From<CriteriaArg> for Criteria {
    fn from(value: CriteriaArg) -> Self {
        match value {
            CriteriaArg::Null => Criteria::Null,
            CriteriaArg::Efx => Criteria::Efx,
            CriteriaArg::Mms => Criteria::Mms,
            CriteriaArg::EfxMms => Criteria::EfxAndMms,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    seed: u64,
    #[arg(long, short = 'n')]
    agents: usize,
    #[arg(long, short = 'm')]
    items: usize,
    #[arg(long, value_enum, default_value = "goods")]
    polarity: PolarityArg,
    /// Upper bound on the number of indifference classes per agent.
    #[arg(long)]
    max_classes: Option<usize>,
}

#[derive(Args)]
struct SolveArgs {
    /// Fairness criteria; on chores, `null` runs the EF1+PO loop and `efx`
    /// the two-agent EFX+PO route.
    #[arg(long, value_enum, default_value = "null")]
    criteria: CriteriaArg,
    /// Agent ordering for tie-breaking, e.g. `1,3,2`. Defaults to the
    /// instance order.
    #[arg(long)]
    sigma: Option<String>,
    /// Instance JSON file; reads stdin when omitted or `-`.
    instance: Option<String>,
}

#[derive(Args)]
struct InstanceArg {
    /// Instance JSON file; reads stdin when omitted or `-`.
    instance: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance JSON file.
    #[arg(long)]
    instance: String,
    /// Allocation JSON file.
    #[arg(long)]
    allocation: String,
    /// Require envy-freeness for exit code 0.
    #[arg(long)]
    ef: bool,
    /// Require EF1 for exit code 0.
    #[arg(long)]
    ef1: bool,
    /// Require EFX for exit code 0.
    #[arg(long)]
    efx: bool,
    /// Require every agent's maximin share for exit code 0.
    #[arg(long)]
    mms: bool,
    /// Require Pareto optimality for exit code 0.
    #[arg(long)]
    po: bool,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Search for an envy-free complete allocation.
    EfExists {
        /// Instance JSON file; reads stdin when omitted or `-`.
        instance: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Search for a Pareto-dominating reassignment of an allocation.
    Po {
        #[arg(long)]
        instance: String,
        #[arg(long)]
        allocation: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Maximin shares by enumeration over all partitions.
    Mms {
        /// Instance JSON file; reads stdin when omitted or `-`.
        instance: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// List every EFX and Pareto-optimal complete allocation.
    EfxCatalogue {
        /// Instance JSON file; reads stdin when omitted or `-`.
        instance: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
}

#[derive(Args)]
struct EnvyGraphArgs {
    #[arg(long)]
    instance: String,
    #[arg(long)]
    allocation: String,
    /// Restrict the node set to these agents (comma-separated names).
    #[arg(long)]
    agents: Option<String>,
    /// Agent ordering used to select the source component.
    #[arg(long)]
    sigma: Option<String>,
}

#[derive(Args)]
struct BenchArgs {
    /// Number of seeds, starting at --start-seed.
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    start_seed: u64,
    /// Agent counts, comma-separated.
    #[arg(long, short = 'n', default_value = "3")]
    agents: String,
    /// Item counts, comma-separated.
    #[arg(long, short = 'm', default_value = "5")]
    items: String,
    #[arg(long, value_enum, default_value = "goods")]
    polarity: PolarityArg,
    #[arg(long)]
    max_classes: Option<usize>,
    /// Criteria modes, comma-separated subset of null,efx,mms,efx-mms.
    /// An empty string benches nothing and prints the header only.
    #[arg(long, default_value = "null,efx,mms,efx-mms")]
    criteria: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::BudgetExceeded { .. } => ExitCode::from(3),
        Error::Internal(_) => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::InvalidInstance(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInstance(format!("cannot read {path}: {e}")))
    }
}

fn load_instance(path: &Option<String>) -> Result<Instance, Error> {
    Instance::from_json(&read_input(path.as_deref().unwrap_or("-"))?)
}

fn load_allocation(instance: &Instance, path: &str) -> Result<Allocation, Error> {
    Allocation::from_json(instance, &read_input(path)?)
}

fn parse_sigma(instance: &Instance, sigma: &Option<String>) -> Result<AgentOrdering, Error> {
    match sigma {
        None => Ok(AgentOrdering::natural(instance)),
        Some(names) => AgentOrdering::from_names(instance, names),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Gen(args) => {
            let mut config =
                GenConfig::new(args.seed, args.agents, args.items, args.polarity.into());
            if let Some(max_classes) = args.max_classes {
                config = config.with_max_classes(max_classes);
            }
            println!("{}", generate(&config)?.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve(args) => {
            let instance = load_instance(&args.instance)?;
            let sigma = parse_sigma(&instance, &args.sigma)?;
            let criteria: Criteria = args.criteria.into();
            let allocation = match instance.polarity() {
                Polarity::Goods => solve_goods(&instance, &sigma, criteria)?,
                Polarity::Chores => match criteria {
                    Criteria::Null => solve_chores_ef1(&instance, &sigma)?,
                    Criteria::Efx => solve_chores_efx_po_two_agents(&instance, &sigma)?,
                    other => {
                        return Err(Error::Unsupported(format!(
                            "criteria {other} is not supported on chores; \
                             use null (EF1+PO) or efx (two agents only)"
                        )))
                    }
                },
            };
            let report = verify_report(&instance, &allocation)?;
            let payload = serde_json::json!({
                "allocation": serde_json::from_str::<serde_json::Value>(
                    &allocation.to_json(&instance)
                )?,
                "report": serde_json::from_str::<serde_json::Value>(&report.to_json())?,
            });
            println!("{}", serde_json::to_string_pretty(&payload)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let instance = load_instance(&Some(args.instance.clone()))?;
            let allocation = load_allocation(&instance, &args.allocation)?;
            let report = verify_report(&instance, &allocation)?;
            println!("{}", report.to_json());
            let mut ok = true;
            if args.ef {
                ok &= report.ef;
            }
            if args.ef1 {
                ok &= report.ef1;
            }
            if args.efx {
                ok &= report.efx;
            }
            if args.mms {
                ok &= report.all_mms();
            }
            if args.po {
                ok &= report.po;
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Mms(args) => {
            let instance = load_instance(&args.instance)?;
            let mut out = serde_json::Map::new();
            for agent in instance.agents() {
                out.insert(
                    instance.agent_name(agent).to_string(),
                    serde_json::to_value(mms_threshold(&instance, agent)?.entries())?,
                );
            }
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle(oracle) => run_oracle(oracle),
        Command::EnvyGraph(args) => {
            let instance = load_instance(&Some(args.instance.clone()))?;
            let allocation = load_allocation(&instance, &args.allocation)?;
            let nodes: Vec<Agent> = match &args.agents {
                None => instance.agents().collect(),
                Some(names) => names
                    .split(',')
                    .map(|name| instance.agent_by_name(name.trim()))
                    .collect::<Result<_, _>>()?,
            };
            let sigma = parse_sigma(&instance, &args.sigma)?;
            let graph = potential_envy_graph(&instance, &allocation, &nodes)?;
            let to_names = |agents: &[Agent]| -> Vec<String> {
                agents.iter().map(|a| instance.agent_name(*a).to_string()).collect()
            };
            let edges: Vec<[String; 2]> = graph
                .edges()
                .into_iter()
                .map(|(i, j)| {
                    [
                        instance.agent_name(i).to_string(),
                        instance.agent_name(j).to_string(),
                    ]
                })
                .collect();
            let source = if graph.nodes().is_empty() {
                Vec::new()
            } else {
                to_names(&source_scc(&graph, &sigma)?)
            };
            let payload = serde_json::json!({
                "nodes": to_names(graph.nodes()),
                "edges": edges,
                "source_component": source,
            });
            println!("{}", serde_json::to_string_pretty(&payload)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench(args) => {
            let parse_list = |text: &str, what: &str| -> Result<Vec<usize>, Error> {
                text.split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| {
                        s.trim()
                            .parse::<usize>()
                            .map_err(|e| Error::InvalidInstance(format!("bad {what} {s:?}: {e}")))
                    })
                    .collect()
            };
            let agent_counts = parse_list(&args.agents, "agent count")?;
            let item_counts = parse_list(&args.items, "item count")?;
            let criteria: Vec<Criteria> = args
                .criteria
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse())
                .collect::<Result<_, _>>()?;
            let mut configs = Vec::new();
            for seed in args.start_seed..args.start_seed + args.seeds {
                for &n in &agent_counts {
                    for &m in &item_counts {
                        let mut config = GenConfig::new(seed, n, m, args.polarity.into());
                        if let Some(max_classes) = args.max_classes {
                            config = config.with_max_classes(max_classes);
                        }
                        configs.push(config);
                    }
                }
            }
            print!("{}", rows_to_csv(&run_bench(&configs, &criteria)));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_oracle(command: OracleCommand) -> Result<ExitCode, Error> {
    match command {
        OracleCommand::EfExists { instance, budget } => {
            let instance = load_instance(&instance)?;
            match ef_exists(&instance, budget)? {
                Some(allocation) => {
                    println!("{}", allocation.to_json(&instance));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("null");
                    Ok(ExitCode::from(1))
                }
            }
        }
        OracleCommand::Po {
            instance,
            allocation,
            budget,
        } => {
            let instance = load_instance(&Some(instance))?;
            let allocation = load_allocation(&instance, &allocation)?;
            match po_dominance_search(&instance, &allocation, budget)? {
                Some(dominator) => {
                    println!("{}", dominator.to_json(&instance));
                    Ok(ExitCode::from(1))
                }
                None => {
                    println!("null");
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        OracleCommand::Mms { instance, budget } => {
            let instance = load_instance(&instance)?;
            let mut out = serde_json::Map::new();
            for agent in instance.agents() {
                out.insert(
                    instance.agent_name(agent).to_string(),
                    serde_json::to_value(mms_enumerate(&instance, agent, budget)?.entries())?,
                );
            }
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        OracleCommand::EfxCatalogue { instance, budget } => {
            let instance = load_instance(&instance)?;
            let catalogue = efx_po_catalogue(&instance, budget)?;
            let rendered: Vec<serde_json::Value> = catalogue
                .iter()
                .map(|a| serde_json::from_str(&a.to_json(&instance)))
                .collect::<Result<_, _>>()?;
            println!("{}", serde_json::to_string_pretty(&rendered)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}
