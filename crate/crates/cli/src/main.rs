use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gallai_core::chromatic::{chromatic_number, DEFAULT_NODE_BUDGET};
use gallai_core::constructions::{digit_construction, random_gallai, random_orientation, GeneratorParams, PairRule};
use gallai_core::extractor::{best_subset, verify_product};
use gallai_core::gallai::{find_rainbow_triangle, gallai_partition};
use gallai_core::io::{parse, serialize, serialize_with_comments, Instance};
use gallai_core::paths::{exact_longest_s_colored_witness, s_colored_path_with_budget, DEFAULT_PATH_LIMIT};
use gallai_core::search::{digit_upper_bound, grouping_lower_bound, search, OrientationMode, SearchConfig, SearchResult};
use gallai_core::suite::{run_verification_suite, SuiteConfig, SuiteKind, SuiteSpec};
use gallai_core::{ColorSet, Error};

const EXIT_INVARIANT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "gallai", version, about = "Gallai colorings, exact chromatic numbers and few-colored paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Look for a rainbow triangle; exits 1 if one exists.
    Check(InputArgs),
    /// Print a Gallai partition.
    Decompose(InputArgs),
    /// Exact chromatic number of the subgraph in the given colors.
    Chi {
        #[command(flatten)]
        io: InputArgs,
        /// Comma-separated colors; all colors when omitted.
        #[arg(long, value_delimiter = ',')]
        colors: Vec<u8>,
    },
    /// Chromatic numbers of every s-color subgraph and the product bound.
    Extract {
        #[command(flatten)]
        io: InputArgs,
        #[arg(short)]
        s: usize,
    },
    /// A directed path using at most s colors.
    Path {
        #[command(flatten)]
        io: InputArgs,
        #[arg(short)]
        s: usize,
        /// Longest such path by exhaustive search instead.
        #[arg(long)]
        exact: bool,
    },
    /// Run verification suites from a JSON config or a single named suite.
    Verify {
        #[arg(long, conflicts_with = "suite")]
        config: Option<PathBuf>,
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        seeds: u64,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        r_max: u8,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::JsonLines)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive f(n, r, s) over r-colorings of the transitive tournament.
    Search {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: u8,
        #[arg(short)]
        s: usize,
        /// Maximum number of colorings to examine.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        /// Enumerate every coloring instead of one per color relabeling.
        #[arg(long)]
        no_prune: bool,
        /// Also range over all orientations (not part of f).
        #[arg(long)]
        all_orientations: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the extremal coloring here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Recolor the long edge u->w of a rainbow triangle u->v->w.
    Recolor {
        #[command(flatten)]
        io: InputArgs,
        /// Comma-separated u,v,w.
        #[arg(long, value_delimiter = ',', required = true)]
        triangle: Vec<usize>,
        #[arg(long)]
        target: u8,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Base-m, r-digit transitive tournament colored by leftmost differing digit.
    Digit {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        r: u8,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random Gallai coloring by repeated substitution.
    Random {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: u8,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        max_depth: usize,
        #[arg(long, default_value_t = 2)]
        parts_min: usize,
        #[arg(long, default_value_t = 4)]
        parts_max: usize,
        /// Always use these two cross colors, e.g. `1,2`.
        #[arg(long, value_delimiter = ',')]
        pair: Option<Vec<u8>>,
        /// Orient pairs at random with this seed instead of writing a plain graph.
        #[arg(long)]
        orient_seed: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    JsonLines,
}

enum Failure {
    Invariant(String),
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            e if e.is_budget_exceeded() => Failure::Budget(e.to_string()),
            Error::Internal(_) => Failure::Invariant(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Invariant(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INVARIANT)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BUDGET)
        }
    }
}

fn read_instance(path: &PathBuf) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn json_line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

fn reject_csv(format: Format) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::Usage("csv output is only available for extract".into()));
    }
    Ok(())
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Gen { kind } => gen(kind),
        Command::Check(io) => {
            reject_csv(io.format)?;
            let inst = read_instance(&io.input)?;
            let found = find_rainbow_triangle(inst.graph());
            let text = match (io.format, &found) {
                (Format::JsonLines, Some(t)) => json_line(json!({"gallai": false, "rainbow": t})),
                (Format::JsonLines, None) => json_line(json!({"gallai": true})),
                (_, Some(t)) => format!("RAINBOW {t}\n"),
                (_, None) => "GALLAI\n".to_string(),
            };
            emit(io.output.as_ref(), &text)?;
            Ok(if found.is_some() { EXIT_INVARIANT } else { 0 })
        }
        Command::Decompose(io) => {
            reject_csv(io.format)?;
            let inst = read_instance(&io.input)?;
            let p = gallai_partition(inst.graph())?;
            let text = if io.format == Format::JsonLines {
                let cross: Vec<_> = (0..p.t())
                    .flat_map(|i| (i + 1..p.t()).map(move |j| (i, j)))
                    .map(|(i, j)| json!([i, j, p.cross_color(i, j)]))
                    .collect();
                json_line(json!({"t": p.t(), "q": p.q().iter().collect::<Vec<_>>(), "parts": p.parts(), "cross": cross}))
            } else {
                let mut out = format!("t={} q={}\n", p.t(), p.q());
                for (i, part) in p.parts().iter().enumerate() {
                    let vs: Vec<String> = part.iter().map(ToString::to_string).collect();
                    out += &format!("part {i}: {}\n", vs.join(" "));
                }
                for i in 0..p.t() {
                    for j in i + 1..p.t() {
                        out += &format!("cross {i} {j} {}\n", p.cross_color(i, j));
                    }
                }
                out
            };
            emit(io.output.as_ref(), &text)?;
            Ok(0)
        }
        Command::Chi { io, colors } => {
            reject_csv(io.format)?;
            let inst = read_instance(&io.input)?;
            let g = inst.graph();
            let set = if colors.is_empty() {
                ColorSet::all(g.r())
            } else {
                ColorSet::from_colors(colors)
            };
            let sol = chromatic_number(&g.color_subgraph(set)?, io.budget)?;
            let text = if io.format == Format::JsonLines {
                json_line(json!({
                    "colors": set.iter().collect::<Vec<_>>(),
                    "chi": sol.k,
                    "coloring": sol.coloring.assignment(),
                    "clique": sol.clique.vertices(),
                }))
            } else {
                format!(
                    "chi={} colors={}\ncoloring {}\nclique {}\n",
                    sol.k,
                    set,
                    join(sol.coloring.assignment()),
                    join(sol.clique.vertices())
                )
            };
            emit(io.output.as_ref(), &text)?;
            Ok(0)
        }
        Command::Extract { io, s } => {
            let inst = read_instance(&io.input)?;
            let rep = verify_product(inst.graph(), s, io.budget)?;
            let best = best_subset(inst.graph(), s, io.budget)?;
            let text = match io.format {
                Format::Csv => rep.to_csv(),
                Format::JsonLines => {
                    let mut out = String::new();
                    for e in &rep.per_subset {
                        out += &json_line(json!({"subset": e.colors.iter().collect::<Vec<_>>(), "chi": e.chi}));
                    }
                    out + &json_line(json!({
                        "n": rep.n, "r": rep.r, "s": rep.s,
                        "product": rep.product.to_string(), "bound": rep.bound.to_string(), "holds": rep.holds,
                        "best": best.colors.iter().collect::<Vec<_>>(), "best_chi": best.k,
                    }))
                }
                Format::Text => {
                    let mut out = String::new();
                    for e in &rep.per_subset {
                        out += &format!("chi{}={}\n", e.colors, e.chi);
                    }
                    out + &format!(
                        "product={} bound={} holds={}\nbest={} chi={}\n",
                        rep.product, rep.bound, rep.holds, best.colors, best.k
                    )
                }
            };
            emit(io.output.as_ref(), &text)?;
            Ok(if rep.holds { 0 } else { EXIT_INVARIANT })
        }
        Command::Path { io, s, exact } => {
            reject_csv(io.format)?;
            let t = read_instance(&io.input)?.to_tournament();
            let path = if exact {
                exact_longest_s_colored_witness(&t, s, DEFAULT_PATH_LIMIT)?
            } else {
                s_colored_path_with_budget(&t, s, io.budget)?
            };
            let text = if io.format == Format::JsonLines {
                json_line(json!({
                    "length": path.len(),
                    "colors": path.colors_used().iter().collect::<Vec<_>>(),
                    "vertices": path.vertices(),
                }))
            } else {
                format!("{path}\n")
            };
            emit(io.output.as_ref(), &text)?;
            Ok(0)
        }
        Command::Verify {
            config,
            suite,
            seed,
            seeds,
            n_max,
            r_max,
            budget,
            format,
            output,
        } => {
            reject_csv(format)?;
            let config = match (config, suite) {
                (Some(path), _) => {
                    let text = fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    SuiteConfig::from_json(&text)?
                }
                (None, Some(name)) => {
                    let mut spec = SuiteSpec::new(name.parse::<SuiteKind>()?);
                    spec.seed_start = seed;
                    spec.seeds = seeds;
                    spec.n_max = n_max;
                    spec.r_max = r_max;
                    spec.budget = budget;
                    SuiteConfig { suites: vec![spec] }
                }
                (None, None) => return Err(Failure::Usage("give --config or --suite".into())),
            };
            let report = run_verification_suite(&config)?;
            let text = if format == Format::JsonLines {
                report.to_json_lines()
            } else {
                let mut out = String::new();
                for r in &report.records {
                    let seed = r.seed.map(|s| format!(" seed={s}")).unwrap_or_default();
                    out += &format!(
                        "{} {}{seed} {} {}\n",
                        if r.pass { "PASS" } else { "FAIL" },
                        r.suite,
                        r.params,
                        r.details
                    );
                }
                out
            };
            emit(output.as_ref(), &text)?;
            Ok(report.exit_code() as u8)
        }
        Command::Search {
            n,
            r,
            s,
            budget,
            no_prune,
            all_orientations,
            format,
            witness,
        } => {
            reject_csv(format)?;
            let mut config = SearchConfig::new(n, r, s, budget);
            config.prune = !no_prune;
            if all_orientations {
                config.orientations = OrientationMode::All;
            }
            let (result, code) = match search(&config) {
                Ok(res) => (res, 0),
                Err(Error::SearchBudgetExceeded { partial }) => (*partial, EXIT_BUDGET),
                Err(e) => return Err(e.into()),
            };
            emit(None, &describe_search(&result, format))?;
            if let Some(path) = witness {
                let note = format!(
                    "witness n={n} r={r} s={s} longest_path={} exact={}",
                    result.f_value, result.exact
                );
                emit(Some(&path), &serialize_with_comments(&Instance::Tournament(result.witness), &[note]))?;
            }
            Ok(code)
        }
        Command::Recolor { io, triangle, target } => {
            let &[u, v, w] = triangle.as_slice() else {
                return Err(Failure::Usage("--triangle takes exactly three vertices u,v,w".into()));
            };
            let t = read_instance(&io.input)?.to_tournament();
            let after = gallai_core::constructions::recolor_rainbow(&t, (u, v, w), target)?;
            emit(io.output.as_ref(), &serialize(&Instance::Tournament(after)))?;
            Ok(0)
        }
    }
}

fn describe_search(res: &SearchResult, format: Format) -> String {
    let lower = grouping_lower_bound(res.n, res.r, res.s);
    let upper = digit_upper_bound(res.n, res.r, res.s);
    let orientations = match res.orientations {
        OrientationMode::Transitive => "transitive",
        OrientationMode::All => "all",
    };
    if format == Format::JsonLines {
        json_line(json!({
            "n": res.n, "r": res.r, "s": res.s,
            "value": res.f_value, "exact": res.exact,
            "colorings_examined": res.colorings_examined,
            "orientations": orientations,
            "lower_bound": lower, "digit_upper_bound": upper,
        }))
    } else {
        let upper = upper.map(|u| u.to_string()).unwrap_or_else(|| "-".into());
        format!(
            "n={} r={} s={} value={} exact={} examined={} orientations={orientations} lower_bound={lower} digit_upper_bound={upper}\n",
            res.n, res.r, res.s, res.f_value, res.exact, res.colorings_examined
        )
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn gen(kind: GenKind) -> Outcome {
    match kind {
        GenKind::Digit { m, r, output } => {
            let t = digit_construction(m, r)?;
            let note = format!("seed=none params=digit:m={m},r={r}");
            emit(output.as_ref(), &serialize_with_comments(&Instance::Tournament(t), &[note]))?;
        }
        GenKind::Random {
            n,
            r,
            seed,
            max_depth,
            parts_min,
            parts_max,
            pair,
            orient_seed,
            output,
        } => {
            let mut params = GeneratorParams::new(seed);
            params.max_depth = max_depth;
            params.part_count_range = parts_min..=parts_max;
            match pair.as_deref() {
                None => {}
                Some(&[a, b]) => params.pair_rule = PairRule::Fixed(a, b),
                Some(_) => return Err(Failure::Usage("--pair takes exactly two colors".into())),
            }
            let g = random_gallai(n, r, &params)?;
            let mut note = params.describe();
            let inst = match orient_seed {
                Some(os) => {
                    note += &format!(",orient_seed:{os}");
                    Instance::Tournament(random_orientation(g, os))
                }
                None => Instance::Graph(g),
            };
            emit(output.as_ref(), &serialize_with_comments(&inst, &[note]))?;
        }
    }
    Ok(0)
}
