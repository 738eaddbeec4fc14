//! The `stickkit` command line.
//!
//! Exit codes: 0 feasible or valid, 1 infeasible or invalid (certificate on
//! stdout), 2 input or usage error, 3 a computed witness failed
//! verification.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{debug, info};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use stickkit_core::fixed_length::{build_system, solve_fixed_with_order, solve_stick_fix_ab, Constraint, FixedOutcome};
use stickkit_core::gadgets::{
    gen_3partition, gen_3partition_three_lengths, gen_monotone3sat, Clause, GadgetInstance, GadgetParams,
    MonotoneCnf, SatVariant, ThreePartition,
};
use stickkit_core::oracle::{oracle_fixed, oracle_stick, oracle_stick_a, oracle_stick_ab, variable_representation};
use stickkit_core::rational::{format as show, parse as parse_rational};
use stickkit_core::stick_a::{solve_stick_a, StickAOutcome};
use stickkit_core::sweep_ab::{ground_order, solve_stick_ab, AbOutcome, GroundOrder};
use stickkit_core::{verify_representation, Instance, Issue, Rational, Representation, Vertex};

use crate::json::{
    instance_value, order_value, parse_instance, parse_order, parse_representation, representation_value, to_text,
    FormatError,
};
use crate::svg::{render_svg, ColorBy, RenderOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BAD_WITNESS: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "stickkit", version, about = "Recognize and draw stick graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Both orders given: linear-time sweep.
    SolveAb { instance: PathBuf },
    /// Only sigma_A given: search the horizontal order.
    SolveA {
        instance: PathBuf,
        /// Also print the final forests, listing expressed orders of those with at most BOUND leaves.
        #[arg(long, value_name = "BOUND")]
        dump_forest: Option<usize>,
    },
    /// Fixed lengths and a total ground order read from a JSON name list.
    SolveFixed {
        instance: PathBuf,
        #[arg(long)]
        order: PathBuf,
    },
    /// Fixed lengths with both orders.
    SolveFixedAb { instance: PathBuf },
    /// Brute force over ground orders (small instances only).
    Oracle {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = OracleVariant::Stick)]
        variant: OracleVariant,
        #[arg(long, default_value_t = stickkit_core::oracle::DEFAULT_MAX_SIZE)]
        max_size: usize,
    },
    /// 3-partition frame with number gadgets.
    #[command(name = "gen-3part")]
    Gen3Part(PartitionArgs),
    /// 3-partition reduction using only three stick lengths.
    #[command(name = "gen-3part3len")]
    Gen3Part3Len(PartitionArgs),
    /// Monotone 3-SAT reduction.
    #[command(name = "gen-m3sat")]
    GenM3Sat(SatArgs),
    /// Check a representation against an instance.
    Verify { instance: PathBuf, representation: PathBuf },
    /// Draw a representation as SVG.
    Render {
        instance: PathBuf,
        representation: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        /// Pixels per unit, a rational.
        #[arg(long, default_value = "40")]
        scale: String,
        #[arg(long)]
        no_labels: bool,
        #[arg(long, value_enum, default_value_t = ColorChoice::Set)]
        color_by: ColorChoice,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleVariant {
    Stick,
    A,
    Ab,
    Fixed,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ColorChoice {
    Set,
    Component,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SatChoice {
    WithIsolatedAOrderOnly,
    WithBothOrders,
    NoIsolated,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Length of the short sticks (default 1/64).
    #[arg(long)]
    epsilon: Option<String>,
    /// Compression slack (default epsilon/8).
    #[arg(long)]
    delta: Option<String>,
    /// Seed for randomly generated inputs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Where to write the instance; stdout if absent.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    /// Where to write the witness, if one is produced.
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PartitionArgs {
    /// Comma-separated numbers; random yes-instance if absent.
    #[arg(long, conflicts_with = "m")]
    values: Option<String>,
    /// Triples of one-based indices, e.g. `1,2,3;4,5,6`.
    #[arg(long, requires = "values")]
    partition: Option<String>,
    /// Number of triples of a random yes-instance.
    #[arg(long)]
    m: Option<usize>,
    #[command(flatten)]
    gen: GenArgs,
}

#[derive(Args, Debug)]
struct SatArgs {
    /// Clauses of signed one-based variables, e.g. `1,2,3;-1,-2,-4`.
    #[arg(long, conflicts_with_all = ["vars", "clauses"])]
    formula: Option<String>,
    /// Assignment as a 0/1 string, e.g. `101`.
    #[arg(long, requires = "formula")]
    assignment: Option<String>,
    /// Variables of a random planted formula.
    #[arg(long, requires = "clauses")]
    vars: Option<usize>,
    #[arg(long, requires = "vars")]
    clauses: Option<usize>,
    #[arg(long, value_enum, default_value_t = SatChoice::WithIsolatedAOrderOnly)]
    variant: SatChoice,
    #[command(flatten)]
    gen: GenArgs,
}

/// Failure of a subcommand, mapped to an exit code.
#[derive(Debug)]
enum Failure {
    Input(String),
    BadWitness(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Input(e.0)
    }
}

impl From<stickkit_core::Error> for Failure {
    fn from(e: stickkit_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Instance, Failure> {
    debug!("reading instance {}", path.display());
    Ok(parse_instance(&read(path)?)?)
}

fn print(value: &Value) {
    print!("{}", to_text(value));
}

fn issue_text(inst: &Instance, issue: &Issue) -> String {
    let a = |i: usize| inst.name(Vertex::a(i));
    let b = |i: usize| inst.name(Vertex::b(i));
    match issue {
        Issue::MissingIntersection { a: x, b: y } => format!("{} and {} do not intersect", a(*x), b(*y)),
        Issue::SpuriousIntersection { a: x, b: y } => format!("{} and {} intersect", a(*x), b(*y)),
        Issue::DuplicateFoot(u, v) => format!("{} and {} share a foot", inst.name(*u), inst.name(*v)),
        Issue::NonPositiveLength(v) => format!("{} has a non-positive length", inst.name(*v)),
        Issue::OrderViolation { first, second } => {
            format!("{} must precede {}", inst.name(*first), inst.name(*second))
        }
        Issue::LengthMismatch { vertex, expected, actual } => {
            format!("{} has length {} instead of {}", inst.name(*vertex), show(actual), show(expected))
        }
    }
}

/// Checks a computed witness; a failure is an internal error.
fn checked(inst: &Instance, rep: &Representation) -> Result<Value, Failure> {
    let report = verify_representation(inst, rep)?;
    if !report.is_valid() {
        let issues: Vec<String> = report.issues.iter().map(|i| issue_text(inst, i)).collect();
        return Err(Failure::BadWitness(issues.join("; ")));
    }
    Ok(representation_value(inst, rep))
}

fn infeasible(certificate: Value) -> Outcome {
    print(&json!({ "feasible": false, "certificate": certificate }));
    Ok(EXIT_INFEASIBLE)
}

fn cycle_value(inst: &Instance, order: &[Vertex], cycle: &[Constraint]) -> Result<Value, Failure> {
    let sys = build_system(inst, order)?;
    let items: Vec<Value> = cycle
        .iter()
        .map(|c| {
            json!({
                "constraint": c.describe(&sys, inst),
                "kind": format!("{:?}", c.kind).to_lowercase(),
            })
        })
        .collect();
    Ok(json!({ "negative_cycle": items }))
}

fn solve_ab(path: &Path) -> Outcome {
    let inst = load(path)?;
    match solve_stick_ab(&inst)? {
        AbOutcome::Realized(rep) => {
            print(&json!({ "feasible": true, "representation": checked(&inst, &rep)? }));
            Ok(EXIT_OK)
        }
        AbOutcome::Infeasible { at } => infeasible(json!({ "rejected_at": inst.name(Vertex::a(at)) })),
    }
}

fn solve_a(path: &Path, dump: Option<usize>) -> Outcome {
    let inst = load(path)?;
    let sol = solve_stick_a(&inst)?;
    info!("stick_a work counter {}", sol.work);
    let name_b = |b: usize| String::from(inst.name(Vertex::b(b)));
    match sol.outcome {
        StickAOutcome::Realized { sigma_b, representation } => {
            let representation = checked(&inst, &representation)?;
            let sigma_b: Vec<String> = sigma_b.into_iter().map(name_b).collect();
            let mut out = json!({ "feasible": true, "sigma_B": sigma_b, "representation": representation });
            if let Some(bound) = dump {
                let mut forests = Vec::new();
                for f in &sol.forests {
                    let orders: Option<Vec<Vec<String>>> = f
                        .enumerate_forest(bound)
                        .ok()
                        .map(|all| all.into_iter().map(|o| o.into_iter().map(name_b).collect()).collect());
                    forests.push(json!({ "forest": f.format_forest(&name_b), "expressed": orders }));
                }
                out["forests"] = Value::Array(forests);
            }
            print(&out);
            Ok(EXIT_OK)
        }
        StickAOutcome::Rejected { at } => infeasible(json!({ "rejected_at": inst.name(Vertex::a(at)) })),
        StickAOutcome::Alternation { positions } => {
            let sigma_a = inst.sigma_a().expect("checked by the solver");
            let names: Vec<&str> = positions.iter().map(|&p| inst.name(Vertex::a(sigma_a[p]))).collect();
            infeasible(json!({ "alternating_components": names }))
        }
    }
}

fn fixed_result(inst: &Instance, order: &[Vertex], outcome: FixedOutcome) -> Outcome {
    match outcome {
        FixedOutcome::Realized(rep) => {
            print(&json!({ "feasible": true, "representation": checked(inst, &rep)? }));
            Ok(EXIT_OK)
        }
        FixedOutcome::Infeasible(cycle) => infeasible(cycle_value(inst, order, &cycle)?),
        FixedOutcome::NoGroundOrder { at } => infeasible(json!({ "rejected_at": inst.name(Vertex::a(at)) })),
    }
}

fn solve_fixed(path: &Path, order_path: &Path) -> Outcome {
    let inst = load(path)?;
    let order = parse_order(&inst, &read(order_path)?)?;
    let outcome = solve_fixed_with_order(&inst, &order)?;
    fixed_result(&inst, &order, outcome)
}

fn solve_fixed_ab(path: &Path) -> Outcome {
    let inst = load(path)?;
    let outcome = solve_stick_fix_ab(&inst)?;
    let order = match ground_order(&inst)? {
        GroundOrder::Unique(order) => order,
        GroundOrder::Infeasible { .. } => Vec::new(),
    };
    fixed_result(&inst, &order, outcome)
}

fn oracle(path: &Path, variant: OracleVariant, max_size: usize) -> Outcome {
    let inst = load(path)?;
    let found = match variant {
        OracleVariant::Fixed => oracle_fixed(&inst, max_size)?,
        v => {
            let order = match v {
                OracleVariant::Stick => oracle_stick(&inst, max_size)?,
                OracleVariant::A => oracle_stick_a(&inst, max_size)?,
                _ => oracle_stick_ab(&inst, max_size)?,
            };
            match order {
                Some(order) => {
                    let rep = variable_representation(&inst, &order)?.expect("oracle order is realizable");
                    Some((order, rep))
                }
                None => None,
            }
        }
    };
    match found {
        Some((order, rep)) => {
            print(&json!({
                "feasible": true,
                "order": order_value(&inst, &order),
                "representation": checked(&inst, &rep)?,
            }));
            Ok(EXIT_OK)
        }
        None => infeasible(json!({ "exhausted_orders": true })),
    }
}

fn verify(inst_path: &Path, rep_path: &Path) -> Outcome {
    let inst = load(inst_path)?;
    let rep = parse_representation(&inst, &read(rep_path)?)?;
    let report = verify_representation(&inst, &rep)?;
    let issues: Vec<String> = report.issues.iter().map(|i| issue_text(&inst, i)).collect();
    print(&json!({ "valid": report.is_valid(), "issues": issues }));
    Ok(if report.is_valid() { EXIT_OK } else { EXIT_INFEASIBLE })
}

fn render(
    inst_path: &Path,
    rep_path: &Path,
    output: Option<&Path>,
    scale: &str,
    no_labels: bool,
    color_by: ColorChoice,
) -> Outcome {
    let inst = load(inst_path)?;
    let rep = parse_representation(&inst, &read(rep_path)?)?;
    let scale = parse_rational(scale)
        .filter(|s| *s > Rational::from_integer(0))
        .ok_or_else(|| Failure::Input(format!("scale must be a positive rational, got `{scale}`")))?;
    if !verify_representation(&inst, &rep)?.is_valid() {
        log::warn!("rendering a representation that does not verify");
    }
    let color_by = match color_by {
        ColorChoice::Set => ColorBy::Set,
        ColorChoice::Component => ColorBy::Component,
    };
    let svg = render_svg(&inst, &rep, &RenderOptions { scale, show_labels: !no_labels, color_by });
    match output {
        Some(p) => write(p, &svg)?,
        None => print!("{svg}"),
    }
    Ok(EXIT_OK)
}

fn params(args: &GenArgs) -> Result<GadgetParams, Failure> {
    let mut p = GadgetParams::default();
    let rational = |text: &str, what: &str| {
        parse_rational(text).ok_or_else(|| Failure::Input(format!("{what} must be a rational, got `{text}`")))
    };
    if let Some(e) = &args.epsilon {
        p.epsilon = rational(e, "epsilon")?;
        p.delta = p.epsilon / Rational::from_integer(8);
    }
    if let Some(d) = &args.delta {
        p.delta = rational(d, "delta")?;
    }
    Ok(p)
}

fn emit(g: &GadgetInstance, args: &GenArgs) -> Outcome {
    let witness = g.witness.as_ref().map(|w| checked(&g.instance, w)).transpose()?;
    let text = to_text(&instance_value(&g.instance));
    info!("generated {} vertical and {} horizontal sticks", g.instance.num_a(), g.instance.num_b());
    match &args.output {
        Some(p) => write(p, &text)?,
        None => print!("{text}"),
    }
    match (&args.witness, witness) {
        (Some(p), Some(w)) => write(p, &to_text(&w))?,
        (Some(_), None) => return Err(Failure::Input(String::from("no certificate given, so there is no witness"))),
        _ => {}
    }
    Ok(EXIT_OK)
}

fn list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, Failure> {
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| Failure::Input(format!("bad {what} entry `{}`", t.trim()))))
        .collect()
}

/// A random yes-instance of 3-partition with its planted triples.
fn random_partition(m: usize, rng: &mut ChaCha8Rng) -> (Vec<i128>, Vec<[usize; 3]>) {
    let c: i128 = 3 * rng.gen_range(8..=20);
    let inside = |s: i128| 4 * s > c && 2 * s < c;
    let mut values = Vec::new();
    for _ in 0..m {
        loop {
            let s1 = rng.gen_range(c / 4 + 1..=(c - 1) / 2);
            let s2 = rng.gen_range(c / 4 + 1..=(c - 1) / 2);
            if inside(c - s1 - s2) {
                values.extend([s1, s2, c - s1 - s2]);
                break;
            }
        }
    }
    let mut perm: Vec<usize> = (0..values.len()).collect();
    perm.shuffle(rng);
    let shuffled: Vec<i128> = perm.iter().map(|&i| values[i]).collect();
    let mut at = vec![0; perm.len()];
    for (pos, &i) in perm.iter().enumerate() {
        at[i] = pos;
    }
    let triples = (0..m).map(|t| [at[3 * t], at[3 * t + 1], at[3 * t + 2]]).collect();
    (shuffled, triples)
}

fn gen_partition(args: &PartitionArgs, three_lengths: bool) -> Outcome {
    let params = params(&args.gen)?;
    let (values, triples) = match (&args.values, args.m) {
        (Some(v), _) => {
            let triples = match &args.partition {
                Some(p) => Some(
                    p.split(';')
                        .map(|t| {
                            let idx: Vec<usize> = list(t, "partition")?;
                            match idx[..] {
                                [x, y, z] if x > 0 && y > 0 && z > 0 => Ok([x - 1, y - 1, z - 1]),
                                _ => Err(Failure::Input(format!("`{t}` is not a triple of one-based indices"))),
                            }
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                None => None,
            };
            (list(v, "value")?, triples)
        }
        (None, Some(m)) if m > 0 => {
            let (v, t) = random_partition(m, &mut ChaCha8Rng::seed_from_u64(args.gen.seed));
            (v, Some(t))
        }
        _ => return Err(Failure::Input(String::from("give --values or a positive --m"))),
    };
    let tp = ThreePartition::new(values)?;
    let g = if three_lengths {
        gen_3partition_three_lengths(&tp, triples.as_deref(), &params)?
    } else {
        gen_3partition(&tp, triples.as_deref(), &params)?
    };
    emit(&g, &args.gen)
}

fn parse_formula(text: &str) -> Result<(usize, Vec<Clause>), Failure> {
    let mut clauses = Vec::new();
    let mut n = 0;
    for part in text.split(';') {
        let lits: Vec<i64> = list(part, "literal")?;
        let [x, y, z] = lits[..] else {
            return Err(Failure::Input(format!("clause `{part}` needs three literals")));
        };
        let positive = x > 0;
        if [x, y, z].iter().any(|&l| l == 0 || (l > 0) != positive) {
            return Err(Failure::Input(format!("clause `{part}` is not monotone")));
        }
        let vars = [x, y, z].map(|l| l.unsigned_abs() as usize - 1);
        n = n.max(vars.iter().max().unwrap() + 1);
        clauses.push(Clause { vars, positive });
    }
    Ok((n, clauses))
}

fn gen_sat(args: &SatArgs) -> Outcome {
    let params = params(&args.gen)?;
    let (phi, assignment) = match (&args.formula, args.vars, args.clauses) {
        (Some(f), _, _) => {
            let (n, clauses) = parse_formula(f)?;
            let assignment = match &args.assignment {
                Some(a) => {
                    let bits: Vec<bool> = a
                        .chars()
                        .map(|c| match c {
                            '0' => Ok(false),
                            '1' => Ok(true),
                            _ => Err(Failure::Input(format!("bad assignment `{a}`"))),
                        })
                        .collect::<Result<_, _>>()?;
                    Some(bits)
                }
                None => None,
            };
            (MonotoneCnf::new(n, clauses)?, assignment)
        }
        (None, Some(n), Some(k)) if n >= 3 => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.gen.seed);
            let planted: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
            let mut all: Vec<usize> = (0..n).collect();
            let clauses = (0..k)
                .map(|_| {
                    all.shuffle(&mut rng);
                    let vars = [all[0], all[1], all[2]];
                    let mut c = Clause { vars, positive: rng.gen() };
                    if !MonotoneCnf::clause_satisfied(&c, &planted) {
                        c.positive = !c.positive;
                    }
                    c
                })
                .collect();
            (MonotoneCnf::new(n, clauses)?, Some(planted))
        }
        _ => return Err(Failure::Input(String::from("give --formula, or --vars (at least 3) and --clauses"))),
    };
    let variant = match args.variant {
        SatChoice::WithIsolatedAOrderOnly => SatVariant::IsolatedAOrderOnly,
        SatChoice::WithBothOrders => SatVariant::BothOrders,
        SatChoice::NoIsolated => SatVariant::NoIsolated,
    };
    let g = gen_monotone3sat(&phi, assignment.as_deref(), &params, variant)?;
    emit(&g, &args.gen)
}

fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::SolveAb { instance } => solve_ab(&instance),
        Command::SolveA { instance, dump_forest } => solve_a(&instance, dump_forest),
        Command::SolveFixed { instance, order } => solve_fixed(&instance, &order),
        Command::SolveFixedAb { instance } => solve_fixed_ab(&instance),
        Command::Oracle { instance, variant, max_size } => oracle(&instance, variant, max_size),
        Command::Gen3Part(args) => gen_partition(&args, false),
        Command::Gen3Part3Len(args) => gen_partition(&args, true),
        Command::GenM3Sat(args) => gen_sat(&args),
        Command::Verify { instance, representation } => verify(&instance, &representation),
        Command::Render { instance, representation, output, scale, no_labels, color_by } => {
            render(&instance, &representation, output.as_deref(), &scale, no_labels, color_by)
        }
    }
}

/// Runs one command and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::BadWitness(msg)) => {
            eprintln!("internal error: witness failed verification: {msg}");
            EXIT_BAD_WITNESS
        }
    }
}
