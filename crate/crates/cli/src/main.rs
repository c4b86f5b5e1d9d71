use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use letterlink::diagram::diagram;
use letterlink::eil::{
    default_order, distinct_reduce, eval_graph, parse_eil_graph, parse_graph,
    parse_graph_sum, reduce_full, EilError, GraphSum,
};
use letterlink::fox::{fox_eval, iterated_fox};
use letterlink::lie::{self, extended_pairing, lyndon_basis, lyndon_trees_of_multidegree, parse_lie, LieError};
use letterlink::linalg::{format_rational, to_integers};
use letterlink::linking::{eval_symbol, Undefined};
use letterlink::selfcheck::{run_all, Scale};
use letterlink::symbols::{parse_symbol, SymbolError};
use letterlink::words::{parse_word_expr, Alphabet, Generator, Word};
use letterlink::{worked, ParseError};

#[derive(Parser)]
#[command(name = "letterlink", version, about = "Letter-linking invariants, graph reductions and Fox derivatives")]
struct Cli {
    /// Emit one JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Report wall-clock time on stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a symbol or a symbol graph on a word.
    Eval {
        #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
        symbol: Option<String>,
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        word: String,
    },
    /// Iterated Fox derivative, evaluated under the augmentation unless --full.
    Fox {
        #[arg(long)]
        word: String,
        #[arg(long, value_delimiter = ',')]
        seq: Vec<String>,
        #[arg(long)]
        full: bool,
    },
    /// Reduce a symbol graph to a sum of symbols.
    Reduce {
        #[arg(long)]
        graph: String,
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<String>>,
    },
    /// Rewrite an Eil graph as a sum of distinct-vertex graphs.
    Distinct {
        #[arg(long)]
        graph: String,
    },
    /// Pair a graph or graph sum with a Lie element.
    Pair {
        #[arg(long, conflicts_with = "graphsum", required_unless_present = "graphsum")]
        graph: Option<String>,
        #[arg(long)]
        graphsum: Option<String>,
        #[arg(long)]
        lie: String,
    },
    /// Lyndon basis of the free Lie algebra in one weight.
    Basis {
        #[arg(long)]
        weight: usize,
        #[arg(long, value_delimiter = ',')]
        gens: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        multidegree: Option<Vec<usize>>,
    },
    /// Pairing matrix of dual graphs against Lyndon trees.
    Matrix {
        #[arg(long)]
        weight: usize,
        #[arg(long, value_delimiter = ',')]
        gens: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        multidegree: Vec<usize>,
    },
    /// Coordinates of λ(w) in the Lyndon basis.
    Coords {
        #[arg(long)]
        word: String,
        #[arg(long)]
        weight: usize,
        /// Defaults to the generators occurring in the word.
        #[arg(long, value_delimiter = ',')]
        gens: Option<Vec<String>>,
    },
    /// Draw the recursive evaluation of a symbol on a word.
    Diagram {
        #[arg(long)]
        word: String,
        #[arg(long)]
        symbol: String,
    },
    /// Run the acceptance suite.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ScaleArg::Small)]
        scale: ScaleArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleArg {
    Small,
    Full,
}

enum Failure {
    Parse(String),
    Invalid(String),
    Undefined(Undefined),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<SymbolError> for Failure {
    fn from(e: SymbolError) -> Self {
        match e {
            SymbolError::Parse(p) => p.into(),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        match e {
            LieError::Parse(p) => p.into(),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<EilError> for Failure {
    fn from(e: EilError) -> Self {
        match e {
            EilError::Parse(p) => p.into(),
            EilError::Symbol(s) => s.into(),
            EilError::Lie(l) => l.into(),
            EilError::Undefined(u) => Failure::Undefined(u),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<Undefined> for Failure {
    fn from(u: Undefined) -> Self {
        Failure::Undefined(u)
    }
}

/// A result: the text printed in plain mode and the JSON value.
struct Output {
    text: String,
    value: Value,
    passed: bool,
    /// Set when the output is partial, as for a diagram stopped at an undefined level.
    undefined: Option<Undefined>,
}

impl Output {
    fn new(text: impl Into<String>, value: Value) -> Self {
        Output {
            text: text.into(),
            value,
            passed: true,
            undefined: None,
        }
    }
}

fn word(text: &str) -> Result<Word, Failure> {
    Ok(parse_word_expr(text)?.to_word())
}

fn generators(names: &[String]) -> Result<Vec<Generator>, Failure> {
    names
        .iter()
        .map(|n| Generator::try_new(n.trim()).ok_or_else(|| Failure::Parse(format!("bad generator name `{n}`"))))
        .collect()
}

fn multidegree(gens: &[Generator], counts: &[usize], weight: usize) -> Result<BTreeMap<Generator, usize>, Failure> {
    if gens.len() != counts.len() {
        return Err(Failure::Invalid(format!(
            "{} generators but {} multidegree entries",
            gens.len(),
            counts.len()
        )));
    }
    let total: usize = counts.iter().sum();
    if total != weight {
        return Err(Failure::Invalid(format!("multidegree sums to {total}, not {weight}")));
    }
    Ok(gens
        .iter()
        .zip(counts)
        .filter(|(_, &n)| n > 0)
        .map(|(g, &n)| (g.clone(), n))
        .collect())
}

fn execute(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Eval { symbol, graph, word: w } => {
            let w = word(w)?;
            if let Some(s) = symbol {
                let v = eval_symbol(&parse_symbol(s)?, &w)?;
                Ok(Output::new(v.to_string(), json!(v)))
            } else {
                let g = parse_graph(graph.as_deref().unwrap_or_default())?;
                let v = format_rational(&eval_graph(&g, &w)?);
                Ok(Output::new(v.clone(), json!(v)))
            }
        }
        Command::Fox { word: w, seq, full } => {
            let w = word(w)?;
            let c = generators(seq)?;
            if *full {
                let x = iterated_fox(&w, &c).to_string();
                Ok(Output::new(x.clone(), json!(x)))
            } else {
                let v = fox_eval(&w, &c);
                Ok(Output::new(v.to_string(), json!(v)))
            }
        }
        Command::Reduce { graph, order } => {
            let g = parse_graph(graph)?;
            let order = order.clone().unwrap_or_else(|| default_order(&g));
            let refs: Vec<&str> = order.iter().map(|s| s.trim()).collect();
            let s = reduce_full(&g, &refs)?.to_string();
            Ok(Output::new(s.clone(), json!(s)))
        }
        Command::Distinct { graph } => {
            let g = parse_eil_graph(graph)?;
            let s = distinct_reduce(&g)?.to_string();
            Ok(Output::new(s.clone(), json!(s)))
        }
        Command::Pair { graph, graphsum, lie } => {
            let sum = match (graph, graphsum) {
                (Some(g), _) => GraphSum::single(&parse_graph(g)?),
                (None, Some(s)) => parse_graph_sum(s)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            let v = format_rational(&extended_pairing(&sum, &parse_lie(lie)?)?);
            Ok(Output::new(v.clone(), json!(v)))
        }
        Command::Basis { weight, gens, multidegree: md } => {
            let g = generators(gens)?;
            let trees = match md {
                Some(counts) => lyndon_trees_of_multidegree(&multidegree(&g, counts, *weight)?),
                None => lyndon_basis(*weight, &Alphabet::new(g)),
            };
            let lines: Vec<String> = trees.iter().map(ToString::to_string).collect();
            Ok(Output::new(lines.join("\n"), json!(lines)))
        }
        Command::Matrix { weight, gens, multidegree: md } => {
            let g = generators(gens)?;
            let md = multidegree(&g, md, *weight)?;
            let (_, _, m) = worked::pairing_block(&md)?;
            let value = match to_integers(&m) {
                Some(rows) => json!(rows),
                None => json!(m.to_string()),
            };
            Ok(Output::new(m.to_string(), value))
        }
        Command::Coords { word: w, weight, gens } => {
            let w = word(w)?;
            let alphabet = match gens {
                Some(names) => Alphabet::new(generators(names)?),
                None => {
                    let mut g = w.generators();
                    g.sort();
                    Alphabet::new(g)
                }
            };
            let e = lie::lie_coordinates(&w, *weight, &alphabet)?.to_string();
            Ok(Output::new(e.clone(), json!(e)))
        }
        Command::Diagram { word: w, symbol } => {
            let d = diagram(&parse_symbol(symbol)?, &word(w)?);
            let text = d.to_string();
            let mut out = Output::new(text.clone(), json!(text));
            out.undefined = d.value.err();
            Ok(out)
        }
        Command::Selfcheck { seed, scale } => {
            let scale = match scale {
                ScaleArg::Small => Scale::Small,
                ScaleArg::Full => Scale::Full,
            };
            let results = run_all(*seed, scale);
            let text = results.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            let value = results
                .iter()
                .map(|r| json!({ "id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail }))
                .collect();
            let mut out = Output::new(text, Value::Array(value));
            out.passed = results.iter().all(|r| r.passed);
            Ok(out)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Eval { .. } => "eval",
        Command::Fox { .. } => "fox",
        Command::Reduce { .. } => "reduce",
        Command::Distinct { .. } => "distinct",
        Command::Pair { .. } => "pair",
        Command::Basis { .. } => "basis",
        Command::Matrix { .. } => "matrix",
        Command::Coords { .. } => "coords",
        Command::Diagram { .. } => "diagram",
        Command::Selfcheck { .. } => "selfcheck",
    }
}

/// The subcommand's flags as given on the command line.
fn input_flags(name: &str) -> Value {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let start = args.iter().position(|a| a == name).map_or(args.len(), |i| i + 1);
    let mut flags = Map::new();
    let mut i = start;
    while i < args.len() {
        let Some(flag) = args[i].strip_prefix("--") else {
            i += 1;
            continue;
        };
        if let Some((k, v)) = flag.split_once('=') {
            flags.insert(k.to_string(), json!(v));
        } else if matches!(args.get(i + 1), Some(v) if !v.starts_with("--")) {
            flags.insert(flag.to_string(), json!(args[i + 1]));
            i += 1;
        } else {
            flags.insert(flag.to_string(), json!(true));
        }
        i += 1;
    }
    flags.remove("json");
    flags.remove("timing");
    Value::Object(flags)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let start = Instant::now();
    let result = execute(&cli.command);
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    if cli.timing {
        eprintln!("{name}: {elapsed:.3} ms");
    }

    let (code, text, value, undefined, error) = match result {
        Ok(out) => {
            let code = u8::from(!out.passed || out.undefined.is_some());
            (code, Some(out.text), out.value, out.undefined, None)
        }
        Err(Failure::Undefined(u)) => (1, Some(u.to_string()), Value::Null, Some(u), None),
        Err(Failure::Invalid(m)) => (1, None, Value::Null, None, Some(m)),
        Err(Failure::Parse(m)) => (2, None, Value::Null, None, Some(m)),
    };

    if cli.json {
        let mut envelope = json!({
            "command": name,
            "input": input_flags(name),
            "value": value,
            "undefined_at": undefined.as_ref().map(|u| u.at.to_string()),
            "timing_ms": (elapsed * 1000.0).round() / 1000.0,
        });
        if let Some(e) = &error {
            envelope["error"] = json!(e);
        }
        println!("{envelope}");
    } else {
        if let Some(t) = text {
            if !t.is_empty() {
                println!("{t}");
            }
        }
        if let Some(e) = error {
            eprintln!("error: {e}");
        }
    }
    ExitCode::from(code)
}
