use std::fs;
use std::io::{self, IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use biramsey::{
    arrows, decode_model, encode_cnf, find_br_m, parse_model, parse_witness, serialize_witness,
    star_witness, verify_good_coloring, witness_6x39, witness_8x29, ArrowingInstance, BrValue,
    PruneRule, PruneToggles, SearchConfig, SearchOutcome, TheoremTable, Verdict,
    WitnessCertificate,
};
use clap::{Args, Parser, Subcommand};

const ABOUT: &str = "Exact search for m-bipartite Ramsey numbers BR_m(K_{2,2}, K_{t,t}).";

const LONG_ABOUT: &str = "\
Exact search for m-bipartite Ramsey numbers BR_m(K_{2,2}, K_{t,t}).

Arrowing is used in the standard sense: K_{m,n} -> (K_{2,2}, K_{t,t}) means
that NO good coloring exists, i.e. every subgraph of K_{m,n} contains K_{2,2}
or has K_{t,t} in its bipartite complement. A good coloring (witness) is a
C4-free subgraph whose complement has no K_{t,t}.

Exit codes: 0 success / ARROWS / valid witness, 1 usage or parse error,
2 invalid witness, 3 NOT_ARROWS, 4 budget exhausted.";

#[derive(Parser)]
#[command(name = "biramsey", version, about = ABOUT, long_about = LONG_ABOUT)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a witness file and print its report
    Verify { file: PathBuf },
    /// Built-in good colorings
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
    /// Decide K_{m,n} -> (K_{2,2}, K_{t,t}) (standard arrowing: no good coloring exists)
    Arrows {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        t: usize,
        #[command(flatten)]
        search: SearchArgs,
        /// Write the witness here when the verdict is NOT_ARROWS
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Check this witness file before searching
        #[arg(long)]
        seed: Option<PathBuf>,
    },
    /// Compute BR_m(K_{2,2}, K_{t,t}) by scanning n upward
    Brfind {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        t: usize,
        /// Largest n to try
        #[arg(long, default_value_t = 100)]
        limit: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Write the instance as DIMACS CNF (satisfiable exactly when it does not arrow)
    ExportCnf {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        t: usize,
        /// Output file, `-` for stdout
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Turn a SAT solver model into a verified witness
    DecodeModel {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        t: usize,
        model: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the table of known values with the provenance of each bound
    Table {
        /// Try to replace literature values by exhaustive search (small t only)
        #[arg(long)]
        search: bool,
        /// Time budget per searched instance
        #[arg(long, default_value_t = 10.0)]
        budget_secs: f64,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    /// List fixture names
    List,
    /// Write a fixture in the witness format; `star` takes M N T
    Emit {
        name: String,
        path: PathBuf,
        /// Dimensions and t for `star`
        #[arg(num_args = 0..=3)]
        dims: Vec<usize>,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Stop after this many candidate rows
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Stop after this many seconds
    #[arg(long)]
    budget_secs: Option<f64>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Disable a pruning rule: degree-cap, pair-budget, coverage, canonical
    #[arg(long = "no-prune", value_name = "RULE")]
    no_prune: Vec<PruneRule>,
}

impl SearchArgs {
    fn config(&self) -> anyhow::Result<SearchConfig> {
        let prune = self
            .no_prune
            .iter()
            .fold(PruneToggles::default(), |p, r| p.without(*r));
        Ok(SearchConfig {
            node_budget: self.budget_nodes,
            time_budget: self.budget_secs.map(seconds).transpose()?,
            threads: self.threads,
            prune,
            seed: None,
        })
    }
}

fn seconds(s: f64) -> anyhow::Result<Duration> {
    Duration::try_from_secs_f64(s).with_context(|| format!("invalid number of seconds: {s}"))
}

struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Self {
            color: !no_color && io::stdout().is_terminal(),
        }
    }

    fn paint(&self, code: &str, text: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    fn good(&self, text: &str) -> String {
        self.paint("32", text)
    }

    fn bad(&self, text: &str) -> String {
        self.paint("31", text)
    }

    fn warn(&self, text: &str) -> String {
        self.paint("33", text)
    }
}

fn write_output(path: &Path, content: &str) -> anyhow::Result<()> {
    if path == Path::new("-") {
        io::stdout().write_all(content.as_bytes())?;
        return Ok(());
    }
    fs::write(path, content).with_context(|| format!("writing {}", path.display()))
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn print_certificate(style: &Style, cert: &WitnessCertificate) {
    println!(
        "witness: {}x{}, t = {}",
        cert.graph.m(),
        cert.graph.n(),
        cert.t
    );
    println!("{}", cert.report);
    let verdict = if cert.is_valid() {
        style.good("valid")
    } else {
        style.bad("invalid")
    };
    println!("verdict: {verdict}");
}

fn verify(style: &Style, file: &Path) -> anyhow::Result<u8> {
    let text = read_input(file)?;
    let cert = match parse_witness(&text) {
        Ok(cert) => cert,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return Ok(1);
        }
    };
    print_certificate(style, &cert);
    Ok(if cert.is_valid() { 0 } else { 2 })
}

const FIXTURES: [&str; 3] = ["witness_6x39", "witness_8x29", "star"];

fn fixture(name: &str, dims: &[usize]) -> anyhow::Result<WitnessCertificate> {
    let (g, t) = match (name, dims) {
        ("witness_6x39", []) => (witness_6x39(), 5),
        ("witness_8x29", []) => (witness_8x29(), 5),
        ("star", &[m, n, t]) => (star_witness(m, n)?, t),
        ("star", _) => bail!("fixture `star` needs M N T"),
        ("witness_6x39" | "witness_8x29", _) => bail!("fixture `{name}` takes no dimensions"),
        _ => bail!(
            "unknown fixture `{name}` (available: {})",
            FIXTURES.join(", ")
        ),
    };
    Ok(verify_good_coloring(&g, t)?)
}

fn print_outcome(style: &Style, inst: ArrowingInstance, out: &SearchOutcome) {
    let label = out.verdict.label();
    let painted = match out.verdict {
        Verdict::Arrows => style.good(label),
        Verdict::NotArrows(_) => style.bad(label),
        Verdict::BudgetExhausted => style.warn(label),
    };
    println!("{inst}: {painted}");
    let s = &out.stats;
    println!(
        "nodes: {}  elapsed: {:.3}s{}",
        s.nodes,
        s.elapsed.as_secs_f64(),
        if s.seeded { "  (seed accepted)" } else { "" }
    );
    let p = &s.prunes;
    println!(
        "prunes: degree-cap {}  pair-budget {}  coverage {}  canonical {}",
        p.degree_cap, p.pair_budget, p.coverage, p.canonical
    );
    if let Some(cert) = out.verdict.witness() {
        print!("{}", serialize_witness(cert));
    }
}

fn run_arrows(
    style: &Style,
    inst: ArrowingInstance,
    search: &SearchArgs,
    output: Option<&Path>,
    seed: Option<&Path>,
) -> anyhow::Result<u8> {
    let mut cfg = search.config()?;
    if let Some(path) = seed {
        cfg.seed = Some(parse_witness(&read_input(path)?)?.graph);
    }
    let out = arrows(inst, &cfg);
    print_outcome(style, inst, &out);
    Ok(match &out.verdict {
        Verdict::Arrows => 0,
        Verdict::NotArrows(cert) => {
            if let Some(path) = output {
                write_output(path, &serialize_witness(cert))?;
            }
            3
        }
        Verdict::BudgetExhausted => 4,
    })
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let style = Style::detect();
    match cli.command {
        Command::Verify { file } => verify(&style, &file),
        Command::Fixtures {
            action: FixtureAction::List,
        } => {
            for name in FIXTURES {
                println!("{name}");
            }
            Ok(0)
        }
        Command::Fixtures {
            action: FixtureAction::Emit { name, path, dims },
        } => {
            let cert = fixture(&name, &dims)?;
            write_output(&path, &serialize_witness(&cert))?;
            Ok(0)
        }
        Command::Arrows {
            m,
            n,
            t,
            search,
            output,
            seed,
        } => run_arrows(
            &style,
            ArrowingInstance::new(m, n, t)?,
            &search,
            output.as_deref(),
            seed.as_deref(),
        ),
        Command::Brfind {
            m,
            t,
            limit,
            search,
        } => {
            let record = find_br_m(m, t, limit, &search.config()?)?;
            println!("{record}");
            if let Some(w) = &record.witness {
                println!(
                    "witness: {}x{} good coloring, verified {}",
                    w.graph.m(),
                    w.graph.n(),
                    w.is_valid()
                );
            }
            Ok(match record.value {
                BrValue::AtLeast(_) => 4,
                _ => 0,
            })
        }
        Command::ExportCnf { m, n, t, output } => {
            let cnf = encode_cnf(ArrowingInstance::new(m, n, t)?)?;
            if output == Path::new("-") {
                cnf.write_dimacs(io::stdout().lock())?;
            } else {
                let file = fs::File::create(&output)
                    .with_context(|| format!("creating {}", output.display()))?;
                cnf.write_dimacs(file)?;
                eprintln!(
                    "wrote {} variables, {} clauses to {}",
                    cnf.num_vars(),
                    cnf.num_clauses(),
                    output.display()
                );
            }
            Ok(0)
        }
        Command::DecodeModel {
            m,
            n,
            t,
            model,
            output,
        } => {
            let cnf = encode_cnf(ArrowingInstance::new(m, n, t)?)?;
            let assignment = parse_model(&read_input(&model)?, cnf.num_vars())?;
            let cert = decode_model(&cnf, &assignment)?;
            print_certificate(&style, &cert);
            if let Some(path) = output {
                write_output(&path, &serialize_witness(&cert))?;
            }
            Ok(0)
        }
        Command::Table {
            search,
            budget_secs,
        } => {
            let mut table = TheoremTable::build()?;
            if search {
                let cfg = SearchConfig {
                    time_budget: Some(seconds(budget_secs)?),
                    ..SearchConfig::default()
                };
                table.upgrade_by_search(3, 20, &cfg)?;
            }
            println!("{table}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
