use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use arcsmc::arc::{double_diagram, ColoredArc, ColoredDiagram, MAX_POINT};
use arcsmc::checks::{self, Suite};
use arcsmc::mutation::{hasse, mutate, mutate_dad, Direction};
use arcsmc::quotients::{family_count, Family, MonomialIdealSpec};
use arcsmc::render::{to_svg, to_tikz};
use arcsmc::rep::{arc_module, Representation};
use arcsmc::string_hom::{arrow_sequence, ArrowSequence};
use arcsmc::{Error, Exec, Permutation};

/// Arc diagrams, arc modules and 2-term collections of permutations.
#[derive(Parser)]
#[command(name = "arcsmc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Double diagram of a permutation with its arc modules and shifts.
    Map(PermArgs),
    /// Mutate the double diagram of a permutation at one position.
    Mutate(MutateArgs),
    /// Mutation graph of all permutations of rank n.
    Hasse(HasseArgs),
    /// Count the diagrams of a family for ranks 1..=n (only n for custom ideals).
    Count(CountArgs),
    /// Run cross-check suites up to a rank bound.
    Check(CheckArgs),
    /// Draw the double diagram of a permutation.
    Render(PermArgs),
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PermArgs {
    #[arg(long)]
    n: usize,
    /// One-line notation, e.g. 312 or 10,2,1,...
    #[arg(long)]
    perm: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct MutateArgs {
    #[command(flatten)]
    perm: PermArgs,
    #[arg(long)]
    i: usize,
    /// Defaults to the direction allowed by the arc at i.
    #[arg(long, value_enum)]
    dir: Option<Dir>,
}

#[derive(Args)]
struct HasseArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "nad")]
    family: FamilyArg,
    /// JSON list of paths, e.g. '["a1-","a2 a3"]' (custom family only).
    #[arg(long)]
    ideal: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Svg,
    Tikz,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Nad,
    Rnad,
    Anad,
    Custom,
}

enum Failure {
    Usage(String),
    Core(Error),
    Check(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Core(Error::WrongColor(_)) => 3,
            Failure::Core(Error::CapExceeded { .. }) => 4,
            Failure::Core(Error::Inconsistent(_)) | Failure::Check(_) | Failure::Io(_) => 1,
            Failure::Core(_) => 2,
        }
    }
}

type CmdResult = Result<(), Failure>;

fn emit(output: &Output, text: &str) -> CmdResult {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pick_format(output: &Output, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = output.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(Failure::Usage(format!(
            "format {} is not available for this command",
            f.to_possible_value().unwrap().get_name()
        )));
    }
    Ok(f)
}

fn parse_perm(n: usize, text: &str) -> Result<Permutation, Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    if n + 1 > MAX_POINT {
        return Err(Error::CapExceeded {
            n,
            cap: MAX_POINT - 1,
        }
        .into());
    }
    Ok(Permutation::parse_with_rank(text, n)?)
}

#[derive(Serialize)]
struct ModuleJson {
    position: usize,
    shift: u8,
    arrow_sequence: ArrowSequence,
    #[serde(flatten)]
    module: Representation,
}

#[derive(Serialize)]
struct DiagramJson<'a> {
    arcs: &'a [ColoredArc],
    n: usize,
    permutation: String,
    modules: Vec<ModuleJson>,
}

fn diagram_json<'a>(d: &'a ColoredDiagram, w: &Permutation) -> Result<DiagramJson<'a>, Failure> {
    let modules = d
        .entries()
        .iter()
        .enumerate()
        .map(|(k, e)| {
            Ok(ModuleJson {
                position: k + 1,
                shift: e.color.shift(),
                arrow_sequence: arrow_sequence(&e.arc),
                module: arc_module(&e.arc, d.n())?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(DiagramJson {
        arcs: d.entries(),
        n: d.n(),
        permutation: w.to_string(),
        modules,
    })
}

fn diagram_text(d: &ColoredDiagram, w: &Permutation) -> String {
    let mut out = format!("permutation {w}\n");
    for (k, e) in d.entries().iter().enumerate() {
        let color = match e.color.shift() {
            0 => "green",
            _ => "red",
        };
        out.push_str(&format!(
            "{}\t{color}\t{}\t{}\n",
            k + 1,
            e.arc,
            arrow_sequence(&e.arc)
        ));
    }
    out
}

fn show_diagram(d: &ColoredDiagram, w: &Permutation, output: &Output) -> CmdResult {
    let format = pick_format(
        output,
        Format::Json,
        &[Format::Json, Format::Text, Format::Svg, Format::Tikz],
    )?;
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&diagram_json(d, w)?).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => diagram_text(d, w),
        Format::Svg => to_svg(d.n(), d.entries()),
        Format::Tikz => to_tikz(d.n(), d.entries()),
        Format::Dot => unreachable!(),
    };
    emit(output, &text)
}

fn cmd_map(args: &PermArgs) -> CmdResult {
    let w = parse_perm(args.n, &args.perm)?;
    show_diagram(&double_diagram(&w), &w, &args.output)
}

fn cmd_render(args: &PermArgs) -> CmdResult {
    let w = parse_perm(args.n, &args.perm)?;
    let d = double_diagram(&w);
    let format = pick_format(&args.output, Format::Svg, &[Format::Svg, Format::Tikz])?;
    let text = match format {
        Format::Svg => to_svg(d.n(), d.entries()),
        _ => to_tikz(d.n(), d.entries()),
    };
    emit(&args.output, &text)
}

fn cmd_mutate(args: &MutateArgs) -> CmdResult {
    let n = args.perm.n;
    let w = parse_perm(n, &args.perm.perm)?;
    if args.i == 0 || args.i > n {
        return Err(Failure::Usage(format!("--i must lie in 1..={n}")));
    }
    let d = double_diagram(&w);
    let mutated = match args.dir {
        Some(Dir::Left) => mutate_dad(&d, args.i, Direction::Left)?,
        Some(Dir::Right) => mutate_dad(&d, args.i, Direction::Right)?,
        None => mutate(&d, args.i)?,
    };
    let moved = w.left_multiply_simple(args.i)?;
    if mutated != double_diagram(&moved) {
        return Err(Error::Inconsistent(format!(
            "mutation of {w} at {} does not match the diagram of {moved}",
            args.i
        ))
        .into());
    }
    show_diagram(&mutated, &moved, &args.perm.output)
}

fn cmd_hasse(args: &HasseArgs) -> CmdResult {
    if args.n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let format = pick_format(
        &args.output,
        Format::Dot,
        &[Format::Dot, Format::Json, Format::Text],
    )?;
    let h = hasse(args.n, Exec::default())?;
    let text = match format {
        Format::Dot => h.to_dot(),
        Format::Json => {
            let vertices: Vec<String> = h.vertices.iter().map(|w| w.to_string()).collect();
            let edges: Vec<serde_json::Value> = h
                .edges
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "source": vertices[e.source],
                        "target": vertices[e.target],
                        "label": format!("mu{}", e.position),
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&serde_json::json!({
                "n": h.n,
                "vertices": vertices,
                "edges": edges,
            }))
            .expect("serializable");
            s.push('\n');
            s
        }
        _ => format!("{} vertices, {} edges\n", h.vertices.len(), h.edges.len()),
    };
    emit(&args.output, &text)
}

fn cmd_count(args: &CountArgs) -> CmdResult {
    if args.n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let format = pick_format(&args.output, Format::Text, &[Format::Text, Format::Json])?;
    let family = match (args.family, &args.ideal) {
        (FamilyArg::Custom, Some(json)) => Family::Custom(MonomialIdealSpec::from_json(json)?),
        (FamilyArg::Custom, None) => {
            return Err(Failure::Usage("--family custom needs --ideal".into()))
        }
        (_, Some(_)) => return Err(Failure::Usage("--ideal needs --family custom".into())),
        (FamilyArg::Nad, None) => Family::Nad,
        (FamilyArg::Rnad, None) => Family::Rnad,
        (FamilyArg::Anad, None) => Family::Anad,
    };
    // an ideal is written for one rank, so custom families get a single row
    let first = match family {
        Family::Custom(_) => args.n,
        _ => 1,
    };
    let counts = (first..=args.n)
        .map(|k| Ok((k, family_count(k, &family, Exec::default())?)))
        .collect::<Result<Vec<(usize, u64)>, Error>>()?;
    let text = match format {
        Format::Json => {
            let rows: Vec<_> = counts
                .iter()
                .map(|(k, c)| serde_json::json!({"n": k, "count": c}))
                .collect();
            let mut s = serde_json::to_string_pretty(&serde_json::json!({
                "family": family.to_string(),
                "counts": rows,
            }))
            .expect("serializable");
            s.push('\n');
            s
        }
        _ => {
            let mut s = format!("n\t{family}\n");
            for (k, c) in &counts {
                s.push_str(&format!("{k}\t{c}\n"));
            }
            s
        }
    };
    emit(&args.output, &text)
}

fn cmd_check(args: &CheckArgs) -> CmdResult {
    let suite: Suite = args
        .suite
        .parse()
        .map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let format = pick_format(&args.output, Format::Text, &[Format::Text, Format::Json])?;
    let outcomes = checks::run(suite, args.max_n, Exec::default())?;
    let text = match format {
        Format::Json => {
            let rows: Vec<_> = outcomes
                .iter()
                .map(|o| {
                    serde_json::json!({
                        "suite": o.suite.to_string(),
                        "max_n": o.max_n,
                        "checked": o.checked,
                        "passed": o.passed(),
                        "counterexample": o.counterexample,
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&rows).expect("serializable");
            s.push('\n');
            s
        }
        _ => outcomes.iter().map(|o| format!("{o}\n")).collect(),
    };
    emit(&args.output, &text)?;
    match outcomes.iter().find(|o| !o.passed()) {
        Some(o) => Err(Failure::Check(o.to_string())),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Map(a) => cmd_map(a),
        Command::Mutate(a) => cmd_mutate(a),
        Command::Hasse(a) => cmd_hasse(a),
        Command::Count(a) => cmd_count(a),
        Command::Check(a) => cmd_check(a),
        Command::Render(a) => cmd_render(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Check(m) => m.clone(),
                Failure::Core(e) => e.to_string(),
                Failure::Io(e) => e.to_string(),
            };
            eprintln!("arcsmc: {msg}");
            ExitCode::from(f.code())
        }
    }
}
