//! `pclatt`: inspect finite pseudocomplemented lattices from the command
//! line.
//!
//! Exit codes: 0 success, 1 a law whose hypothesis class is satisfied
//! fails, 2 input error.

use std::error::Error;
use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pclatt::classify::Classification;
use pclatt::congruence::{enumerate_congruences, theta_of, theta_report};
use pclatt::deduction::{ds_closure, enumerate_deductive_systems, DsKind};
use pclatt::genlat::{generate_all, MAX_N};
use pclatt::implication::{arrow_table, darrow_table, ImplTable};
use pclatt::laws::{evaluate_law, law, registry, LawContext, LawVerdict};
use pclatt::pseudo::{dense_elements, pseudocomplement_table, UnaryTable};
use pclatt::suite::run_suite;
use pclatt::{
    export_dot, parse_lattice, serialize_lattice, ElementSet, FiniteLattice, Fixture, LatticeClass,
};

#[derive(Parser)]
#[command(
    name = "pclatt",
    version,
    about = "finite pseudocomplemented lattice toolkit"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableOp {
    /// Pseudocomplement and double pseudocomplement rows.
    Star,
    /// The implication x -> y = x* \/ y.
    Arrow,
    /// The implication x => y = x* \/ y**.
    Darrow,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a lattice: bounded, pseudocomplemented, distributive,
    /// stone-identity, stone, brouwerian.
    Check { file: String },
    /// Print an operation table.
    Table {
        #[arg(long, value_enum)]
        op: TableOp,
        file: String,
    },
    /// Evaluate registered laws with counterexample reporting.
    Laws {
        file: String,
        /// Check one law by id.
        #[arg(long)]
        law: Option<String>,
        /// Also evaluate laws whose hypothesis class the lattice does not
        /// satisfy (informational).
        #[arg(long)]
        all: bool,
    },
    /// Enumerate deductive systems, or close a set under detachment.
    Ds {
        file: String,
        #[arg(long, value_parser = parse_kind)]
        kind: DsKind,
        /// Comma-separated element labels to close instead of enumerating.
        #[arg(long)]
        closure: Option<String>,
    },
    /// Enumerate congruences, or build Theta(A) for a second-kind
    /// deductive system A.
    Cong {
        file: String,
        /// Comma-separated element labels forming A.
        #[arg(long)]
        theta: Option<String>,
    },
    /// Generate all bounded lattices of a given size.
    Gen {
        #[arg(long)]
        n: usize,
        /// One representative per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Keep only lattices in this class.
        #[arg(long, value_parser = parse_class)]
        filter: Option<LatticeClass>,
    },
    /// Run the law campaign over the bundled lattices and all generated
    /// lattices up to --max-n elements.
    Suite {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<std::path::PathBuf>,
        /// Restrict to these law ids (repeatable).
        #[arg(long = "law")]
        laws: Vec<String>,
    },
    /// Export the cover diagram as Graphviz DOT.
    Export { file: String },
}

fn parse_kind(s: &str) -> Result<DsKind, String> {
    DsKind::from_name(s).ok_or_else(|| format!("expected `first` or `second`, got {s:?}"))
}

fn parse_class(s: &str) -> Result<LatticeClass, String> {
    LatticeClass::from_name(s).ok_or_else(|| {
        format!("expected one of any, pseudocomplemented, stone-identity, distributive, stone; got {s:?}")
    })
}

fn main() -> ExitCode {
    // die quietly when the pipe closes (`pclatt gen | head`) instead of
    // panicking in println!
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Load a lattice from a path, `-` (stdin), or a bundled fixture name.
fn load(file: &str) -> Result<FiniteLattice, Box<dyn Error>> {
    if let Some(f) = Fixture::from_name(file) {
        return Ok(f.lattice());
    }
    let text = if file == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(file)?
    };
    Ok(parse_lattice(&text)?)
}

fn star_of(l: &FiniteLattice) -> Result<UnaryTable, Box<dyn Error>> {
    Ok(pseudocomplement_table(l)?)
}

fn parse_set(l: &FiniteLattice, csv: &str) -> Result<ElementSet, Box<dyn Error>> {
    let labels: Vec<&str> = csv
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    Ok(ElementSet::from_labels(l, &labels)?)
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn Error>> {
    match cli.command {
        Command::Check { file } => check(&load(&file)?, cli.format),
        Command::Table { op, file } => table(&load(&file)?, op, cli.format),
        Command::Laws { file, law, all } => laws_cmd(&load(&file)?, law, all, cli.format),
        Command::Ds {
            file,
            kind,
            closure,
        } => ds(&load(&file)?, kind, closure, cli.format),
        Command::Cong { file, theta } => cong(&load(&file)?, theta, cli.format),
        Command::Gen { n, dedup, filter } => gen(n, dedup, filter, cli.format),
        Command::Suite { max_n, json, laws } => suite(max_n, json, &laws, cli.format),
        Command::Export { file } => {
            print!("{}", export_dot(&load(&file)?));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn yes_no(l: &FiniteLattice, v: &pclatt::Verdict) -> String {
    if v.holds {
        "yes".to_string()
    } else {
        format!("no — {}", v.counterexample.as_ref().unwrap().render(l))
    }
}

fn check(l: &FiniteLattice, format: Format) -> Result<ExitCode, Box<dyn Error>> {
    let cls = Classification::of(l);
    let pseudo = match &cls.not_pseudocomplemented {
        None => "yes".to_string(),
        Some(cex) => format!("no — {}", cex.render(l)),
    };
    let stone_id = match &cls.stone_identity {
        Some(v) => yes_no(l, v),
        None => "n/a — not pseudocomplemented".to_string(),
    };
    let stone = if cls.stone() {
        "yes".to_string()
    } else if !cls.distributive.holds {
        "no — not distributive".to_string()
    } else if cls.stone_identity.as_ref().is_some_and(|v| !v.holds) {
        "no — the stone identity fails".to_string()
    } else {
        "no — not pseudocomplemented".to_string()
    };
    let brouwerian = if cls.brouwerian() {
        "yes"
    } else if !cls.pseudocomplemented() {
        "no — not pseudocomplemented"
    } else {
        "no — not distributive"
    };

    if format == Format::Json {
        let dense = cls
            .star
            .as_ref()
            .map(|star| dense_elements(l, star).render(l));
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "bounded": { "bottom": l.label(l.bottom()), "top": l.label(l.top()) },
                "pseudocomplemented": cls.pseudocomplemented(),
                "distributive": cls.distributive.holds,
                "stone_identity": cls.stone_identity.as_ref().map(|v| v.holds),
                "stone": cls.stone(),
                "brouwerian": cls.brouwerian(),
                "dense": dense,
            }))?
        );
    } else {
        println!(
            "bounded: yes — bottom {}, top {}",
            l.label(l.bottom()),
            l.label(l.top())
        );
        println!("pseudocomplemented: {pseudo}");
        println!("distributive: {}", yes_no(l, &cls.distributive));
        println!("stone-identity: {stone_id}");
        println!("stone: {stone}");
        println!("brouwerian: {brouwerian}");
        if let Some(star) = &cls.star {
            println!("dense: {}", dense_elements(l, star).render(l));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn pad(s: &str, w: usize) -> String {
    format!("{s:<w$}")
}

fn print_binary_table(l: &FiniteLattice, t: &ImplTable, symbol: &str) {
    let w = l
        .labels()
        .iter()
        .map(|s| s.len())
        .max()
        .unwrap_or(1)
        .max(symbol.len())
        + 2;
    let mut header = pad(symbol, w);
    for y in l.elements() {
        header.push_str(&pad(l.label(y), w));
    }
    println!("{}", header.trim_end());
    for x in l.elements() {
        let mut row = pad(l.label(x), w);
        for y in l.elements() {
            row.push_str(&pad(l.label(t.of(x, y)), w));
        }
        println!("{}", row.trim_end());
    }
}

fn table(l: &FiniteLattice, op: TableOp, format: Format) -> Result<ExitCode, Box<dyn Error>> {
    let star = star_of(l)?;
    match op {
        TableOp::Star => {
            if format == Format::Json {
                let rows: Vec<_> = l
                    .elements()
                    .map(|x| {
                        json!({
                            "x": l.label(x),
                            "star": l.label(star.of(x)),
                            "doublestar": l.label(star.twice(x)),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&json!(rows))?);
            } else {
                let w = l.labels().iter().map(|s| s.len()).max().unwrap_or(1) + 3;
                println!("{}{}x**", pad("x", w), pad("x*", w));
                for x in l.elements() {
                    println!(
                        "{}{}{}",
                        pad(l.label(x), w),
                        pad(l.label(star.of(x)), w),
                        l.label(star.twice(x))
                    );
                }
            }
        }
        TableOp::Arrow | TableOp::Darrow => {
            let t = match op {
                TableOp::Arrow => arrow_table(l, &star),
                _ => darrow_table(l, &star),
            };
            if format == Format::Json {
                let rows: Vec<Vec<&str>> = l
                    .elements()
                    .map(|x| l.elements().map(|y| l.label(t.of(x, y))).collect())
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "op": t.kind().symbol(),
                        "labels": l.labels(),
                        "rows": rows,
                    }))?
                );
            } else {
                print_binary_table(l, &t, t.kind().symbol());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn law_line(l: &FiniteLattice, lv: &LawVerdict) -> String {
    let mut s = String::new();
    let status = if lv.verdict.holds {
        "pass"
    } else if lv.hypothesis_met {
        "FAIL"
    } else {
        "fail (hypothesis not met, informational)"
    };
    let _ = write!(
        s,
        "{} [{}{}]: {}",
        lv.law.id,
        lv.law.hypothesis.name(),
        if lv.hypothesis_met {
            ""
        } else {
            ", not satisfied"
        },
        status
    );
    if let Some(cex) = &lv.verdict.counterexample {
        let _ = write!(s, " — {}", cex.render(l));
    }
    s
}

fn laws_cmd(
    l: &FiniteLattice,
    one: Option<String>,
    all: bool,
    format: Format,
) -> Result<ExitCode, Box<dyn Error>> {
    let star = star_of(l)?;
    let cls = Classification::of(l);
    let ctx = LawContext::new(l, &star);
    let selected: Vec<&'static pclatt::Law> = match &one {
        Some(id) => vec![law(id).ok_or_else(|| pclatt::UnknownLaw(id.clone()))?],
        None => registry()
            .iter()
            .filter(|law| all || cls.satisfies(law.hypothesis))
            .collect(),
    };
    let verdicts: Vec<LawVerdict> = selected
        .into_iter()
        .map(|law| evaluate_law(&cls, &ctx, law))
        .collect();
    if format == Format::Json {
        let rows: Vec<_> = verdicts
            .iter()
            .map(|lv| {
                json!({
                    "law": lv.law.id,
                    "hypothesis": lv.law.hypothesis.name(),
                    "hypothesis_met": lv.hypothesis_met,
                    "holds": lv.verdict.holds,
                    "counterexample": lv.verdict.counterexample.as_ref().map(|c| c.render(l)),
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&json!(rows))?);
    } else {
        for lv in &verdicts {
            println!("{}", law_line(l, lv));
        }
    }
    if verdicts.iter().any(|lv| lv.is_fatal()) {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

const DS_ENUM_LIMIT: usize = 20;

fn ds(
    l: &FiniteLattice,
    kind: DsKind,
    closure: Option<String>,
    format: Format,
) -> Result<ExitCode, Box<dyn Error>> {
    let star = star_of(l)?;
    if let Some(csv) = closure {
        let seed = parse_set(l, &csv)?;
        let closed = ds_closure(l, &star, &seed, kind);
        if format == Format::Json {
            let labels: Vec<&str> = closed.iter().map(|e| l.label(e)).collect();
            println!("{}", serde_json::to_string_pretty(&json!(labels))?);
        } else {
            println!("{}", closed.render(l));
        }
        return Ok(ExitCode::SUCCESS);
    }
    if l.size() > DS_ENUM_LIMIT {
        return Err(format!(
            "enumeration tests all 2^(n-1) subsets; refusing n = {} > {DS_ENUM_LIMIT}",
            l.size()
        )
        .into());
    }
    let systems = enumerate_deductive_systems(l, &star, kind);
    if format == Format::Json {
        let rows: Vec<Vec<&str>> = systems
            .iter()
            .map(|s| s.iter().map(|e| l.label(e)).collect())
            .collect();
        println!("{}", serde_json::to_string_pretty(&json!(rows))?);
    } else {
        for s in &systems {
            println!("{}", s.render(l));
        }
    }
    Ok(ExitCode::SUCCESS)
}

const CONG_ENUM_LIMIT: usize = 8;

fn cong(
    l: &FiniteLattice,
    theta: Option<String>,
    format: Format,
) -> Result<ExitCode, Box<dyn Error>> {
    let star = star_of(l)?;
    if let Some(csv) = theta {
        let a = parse_set(l, &csv)?;
        let rel = theta_of(l, &star, &a)?;
        let report = theta_report(l, &star, &a);
        let stone = Classification::of(l).stone();
        if format == Format::Json {
            let blocks = rel.classes().map(|p| {
                p.blocks()
                    .iter()
                    .map(|b| b.iter().map(|e| l.label(e).to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            });
            let pairs: Vec<[&str; 2]> = rel
                .pairs()
                .iter()
                .map(|&(x, y)| [l.label(x), l.label(y)])
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "transitive": report.transitive.holds,
                    "blocks": blocks,
                    "pairs": pairs,
                    "stone": stone,
                    "meet_closed": report.meet_closed,
                    "top_class": report.top_class.render(l),
                    "theorem_holds": report.theorem_holds(),
                }))?
            );
        } else {
            match rel.classes() {
                Some(p) => println!("theta(A): {}", p.render(l)),
                None => {
                    let pairs: Vec<String> = rel
                        .pairs()
                        .iter()
                        .map(|&(x, y)| format!("({},{})", l.label(x), l.label(y)))
                        .collect();
                    println!("theta(A) is not transitive; pairs: {}", pairs.join(" "));
                }
            }
            if !stone {
                println!("note: the lattice is not Stone; theorem report is informational");
            }
            for (name, v) in [
                ("reflexive", &report.reflexive),
                ("symmetric", &report.symmetric),
                ("compatible with \\/", &report.compat_join),
                ("compatible with /\\", &report.compat_meet),
                ("compatible with *", &report.compat_star),
                ("[1]Theta(A) = {x : x** in A}", &report.top_class_matches),
            ] {
                println!("{name}: {}", v.render(l));
            }
            println!("[1]Theta(A): {}", report.top_class.render(l));
            println!(
                "A meet-closed: {}; transitive: {}",
                if report.meet_closed { "yes" } else { "no" },
                report.transitive.render(l)
            );
        }
        return Ok(ExitCode::SUCCESS);
    }
    if l.size() > CONG_ENUM_LIMIT {
        return Err(format!(
            "congruence enumeration filters all partitions; refusing n = {} > {CONG_ENUM_LIMIT}",
            l.size()
        )
        .into());
    }
    let congruences = enumerate_congruences(l, &star);
    if format == Format::Json {
        let rows: Vec<Vec<Vec<String>>> = congruences
            .iter()
            .map(|p| {
                p.blocks()
                    .iter()
                    .map(|b| b.iter().map(|e| l.label(e).to_string()).collect())
                    .collect()
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&json!(rows))?);
    } else {
        for p in &congruences {
            println!("{}", p.render(l));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn gen(
    n: usize,
    dedup: bool,
    filter: Option<LatticeClass>,
    format: Format,
) -> Result<ExitCode, Box<dyn Error>> {
    let family = generate_all(n, dedup)?;
    let lattices: Vec<FiniteLattice> = match filter {
        Some(class) => pclatt::filter_family(family, class).collect(),
        None => family.collect(),
    };
    if format == Format::Json {
        let rows: Vec<String> = lattices.iter().map(serialize_lattice).collect();
        println!("{}", serde_json::to_string_pretty(&json!(rows))?);
    } else {
        for (i, l) in lattices.iter().enumerate() {
            if i > 0 {
                println!("---");
            }
            print!("{}", serialize_lattice(l));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn suite(
    max_n: usize,
    json_path: Option<std::path::PathBuf>,
    laws: &[String],
    format: Format,
) -> Result<ExitCode, Box<dyn Error>> {
    if max_n > MAX_N {
        return Err(format!("--max-n must be at most {MAX_N}").into());
    }
    let report = run_suite(max_n, laws)?;
    if let Some(path) = json_path {
        std::fs::write(&path, report.to_json())?;
    }
    if format == Format::Json {
        println!("{}", report.to_json());
    } else {
        println!("{}", report.summary());
        for e in report.fatal() {
            println!(
                "FATAL {} {}: {}",
                e.lattice,
                e.law,
                e.counterexample.as_deref().unwrap_or("")
            );
        }
        for e in report.informational_failures() {
            println!(
                "info {} {} (hypothesis not met): {}",
                e.lattice,
                e.law,
                e.counterexample.as_deref().unwrap_or("")
            );
        }
    }
    if report.fatal().next().is_some() {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}
