//! `lhall`: command-line access to every pipeline stage, with
//! machine-readable output.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 verification failure, 2 bad input or gate violation, 3 enumeration
//! budget exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lecture_hall::alcove::{AlcovePoint, Collection};
use lecture_hall::ehrhart;
use lecture_hall::groebner;
use lecture_hall::idp;
use lecture_hall::polytope;
use lecture_hall::suite::{self, CheckStatus};
use lecture_hall::triangulation;
use lecture_hall::{Error, LabeledPoset, LatticePoint, SSequence, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(
    name = "lhall",
    version,
    about = "Exact lecture hall polytope computations"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cap on box-scan volumes for enumerations
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice points of a dilate of the order polytope (default: chain poset)
    Points {
        #[arg(long)]
        s: String,
        #[arg(long)]
        poset: Option<String>,
        #[arg(long, default_value_t = 1)]
        k: i64,
    },
    /// h*-polynomial of the order polytope (default: chain poset)
    Hstar {
        #[arg(long)]
        s: String,
        #[arg(long)]
        poset: Option<String>,
    },
    /// Both sides of the lecture hall identity: cone points by coordinate
    /// sum versus the odd-part product series
    Bme {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max: i64,
    },
    /// Decompose a dilate point into its chain of polytope points
    Idp {
        #[arg(long)]
        s: String,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        poset: Option<String>,
    },
    /// The reduced quadratic binomial basis
    Groebner {
        #[arg(long)]
        s: String,
    },
    /// Normal form of a collection of multiset vectors (JSON file: list of
    /// integer arrays)
    Nf {
        #[arg(long)]
        s: String,
        #[arg(long)]
        collection: String,
    },
    /// Build and certify the unimodular flag triangulation
    Triangulate {
        #[arg(long)]
        s: String,
    },
    /// Run the full property suite
    Verify {
        #[arg(long)]
        s: String,
        #[arg(long, default_value_t = 3)]
        kmax: i64,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn parse_ints(text: &str) -> Result<Vec<i64>, Error> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("cannot parse integer {t:?}")))
        })
        .collect()
}

fn load_poset(path: &Option<String>, n: usize) -> Result<LabeledPoset, Error> {
    match path {
        None => Ok(LabeledPoset::chain(n)),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::InvalidInput(format!("cannot read {p}: {e}")))?;
            let poset = LabeledPoset::from_json(&text)?;
            if poset.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: poset.n(),
                });
            }
            Ok(poset)
        }
    }
}

fn coords_value(coords: &[i64]) -> Value {
    Value::from(coords.to_vec())
}

fn collection_value(c: &Collection) -> Value {
    Value::from(
        c.elems()
            .iter()
            .map(|e| coords_value(e.coords()))
            .collect::<Vec<_>>(),
    )
}

fn csv_row(coords: &[i64]) -> String {
    coords
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn space_row(coords: &[i64]) -> String {
    coords
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli) -> Result<i32, Error> {
    let format = cli.format;
    let budget = cli.budget;
    match cli.command {
        Command::Points { s, poset, k } => {
            let s = SSequence::parse(&s)?;
            let poset = load_poset(&poset, s.n())?;
            let points = polytope::enumerate_dilate_points(&poset, &s, k, budget)?;
            match format {
                Format::Json => {
                    let v: Vec<Value> = points.iter().map(|p| coords_value(p.coords())).collect();
                    println!("{}", Value::from(v));
                }
                Format::Csv => {
                    for p in &points {
                        println!("{}", csv_row(p.coords()));
                    }
                }
                Format::Text => {
                    for p in &points {
                        println!("{p}");
                    }
                }
            }
            Ok(0)
        }
        Command::Hstar { s, poset } => {
            let s = SSequence::parse(&s)?;
            let poset = load_poset(&poset, s.n())?;
            let counts = ehrhart::ehrhart_counts(&poset, &s, s.n() as i64, budget)?;
            let hstar = ehrhart::hstar_from_counts(&counts, s.n())?;
            match format {
                Format::Json => println!("{}", Value::from(hstar.coeffs().to_vec())),
                Format::Csv => println!("{}", csv_row(hstar.coeffs())),
                Format::Text => println!("h* = {hstar}"),
            }
            Ok(0)
        }
        Command::Bme { n, max } => {
            let lhs = ehrhart::lecture_hall_gf(n, max, budget)?;
            let rhs = ehrhart::odd_product_gf(n, max, budget)?;
            let equal = lhs == rhs;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "n": n,
                        "max": max,
                        "lecture_hall": lhs,
                        "odd_product": rhs,
                        "equal": equal,
                    })
                ),
                Format::Csv => {
                    println!("m,lecture_hall,odd_product");
                    for (m, (a, b)) in lhs.iter().zip(&rhs).enumerate() {
                        println!("{m},{a},{b}");
                    }
                }
                Format::Text => {
                    for (m, (a, b)) in lhs.iter().zip(&rhs).enumerate() {
                        println!("q^{m}: {a} {b}");
                    }
                    println!("equal: {equal}");
                }
            }
            Ok(if equal { 0 } else { 1 })
        }
        Command::Idp {
            s,
            lambda,
            k,
            poset,
        } => {
            let s = SSequence::parse(&s)?;
            let poset = load_poset(&poset, s.n())?;
            let lam = LatticePoint::new(parse_ints(&lambda)?);
            let chain = idp::decompose(&poset, &s, &lam, k)?;
            let valid = idp::verify_chain(&chain, &poset, &s, &lam);
            let unique = idp::chain_decompositions(&poset, &s, &lam, k, budget)?.len() == 1;
            let brute_ok = idp::idp_holds_brute(&poset, &s, k, budget)?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "lambda": lam.coords(),
                        "k": k,
                        "chain": chain.parts.iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>(),
                        "unique": unique,
                        "brute_ok": brute_ok,
                    })
                ),
                Format::Csv => {
                    println!("lambda,{}", space_row(lam.coords()));
                    for (i, p) in chain.parts.iter().enumerate() {
                        println!("part{},{}", i + 1, space_row(p.coords()));
                    }
                    println!("unique,{unique}");
                    println!("brute_ok,{brute_ok}");
                }
                Format::Text => {
                    println!("lambda = {lam}, k = {k}");
                    for (i, p) in chain.parts.iter().enumerate() {
                        println!("part {}: {p}", i + 1);
                    }
                    println!("unique: {unique}");
                    println!("brute_ok: {brute_ok}");
                }
            }
            if let Err(v) = valid {
                eprintln!("chain verification failed: {v}");
                return Ok(1);
            }
            Ok(if unique && brute_ok { 0 } else { 1 })
        }
        Command::Groebner { s } => {
            let s = SSequence::parse(&s)?;
            let basis = groebner::groebner_basis(&s, budget)?;
            match format {
                Format::Json => {
                    let v: Vec<Value> = basis
                        .iter()
                        .map(|b| {
                            json!({
                                "lead": collection_value(&b.lead),
                                "trail": collection_value(&b.trail),
                            })
                        })
                        .collect();
                    println!("{}", Value::from(v));
                }
                Format::Csv => {
                    for b in &basis {
                        let cells: Vec<String> = b
                            .lead
                            .elems()
                            .iter()
                            .chain(b.trail.elems())
                            .map(|e| space_row(e.coords()))
                            .collect();
                        println!("{}", cells.join(";"));
                    }
                }
                Format::Text => {
                    for b in &basis {
                        println!("{} -> {}", b.lead, b.trail);
                    }
                }
            }
            Ok(0)
        }
        Command::Nf { s, collection } => {
            let s = SSequence::parse(&s)?;
            let text = std::fs::read_to_string(&collection)
                .map_err(|e| Error::InvalidInput(format!("cannot read {collection}: {e}")))?;
            let vectors: Vec<Vec<i64>> = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidInput(format!("bad collection JSON: {e}")))?;
            let elems = vectors
                .into_iter()
                .map(|z| AlcovePoint::new(&s, z, 1))
                .collect::<Result<Vec<_>, _>>()?;
            let c = Collection::new(elems)?;
            let nf = groebner::normal_form(&c, &s, budget)?;
            match format {
                Format::Json => println!("{}", collection_value(&nf)),
                Format::Csv => {
                    for e in nf.elems() {
                        println!("{}", csv_row(e.coords()));
                    }
                }
                Format::Text => println!("{nf}"),
            }
            Ok(0)
        }
        Command::Triangulate { s } => {
            let s = SSequence::parse(&s)?;
            let t = triangulation::build_triangulation(&s, budget)?;
            let unimodular = triangulation::verify_unimodular(&t, &s)?;
            let cover_ok = triangulation::verify_cover(&t, &s, 3, budget)?;
            let h = triangulation::h_vector(&t)?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "vertices": t.vertices.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>(),
                        "maximal_faces": t.maximal_faces,
                        "f_vector": t.f_vector,
                        "h_vector": h.coeffs(),
                        "unimodular": unimodular,
                        "cover_ok": cover_ok,
                        "regular": "by construction",
                    })
                ),
                Format::Csv => {
                    println!("vertices,{}", t.vertices.len());
                    println!("maximal_faces,{}", t.maximal_faces.len());
                    println!("f_vector,{}", space_row(&t.f_vector));
                    println!("h_vector,{}", space_row(h.coeffs()));
                    println!("unimodular,{unimodular}");
                    println!("cover_ok,{cover_ok}");
                }
                Format::Text => {
                    println!("vertices: {}", t.vertices.len());
                    for (i, v) in t.vertices.iter().enumerate() {
                        println!("  {i}: {}", v.multiset_string());
                    }
                    println!("maximal faces ({}):", t.maximal_faces.len());
                    for f in &t.maximal_faces {
                        let labels: Vec<String> = f.iter().map(|i| i.to_string()).collect();
                        println!("  {{{}}}", labels.join(" "));
                    }
                    println!("f-vector: {}", space_row(&t.f_vector));
                    println!("h-vector: {h}");
                    println!("unimodular: {unimodular}");
                    println!("cover_ok: {cover_ok}");
                    println!("regular: by construction");
                }
            }
            Ok(if unimodular && cover_ok { 0 } else { 1 })
        }
        Command::Verify { s, kmax } => {
            let s = SSequence::parse(&s)?;
            let outcomes = suite::run_suite(&s, kmax, budget);
            let mut failed = false;
            match format {
                Format::Json => {
                    let v: Vec<Value> = outcomes
                        .iter()
                        .map(|o| {
                            let (status, detail) = match &o.status {
                                CheckStatus::Pass => ("pass", String::new()),
                                CheckStatus::Fail(m) => ("fail", m.clone()),
                                CheckStatus::Skipped(m) => ("skip", m.clone()),
                            };
                            json!({"name": o.name, "status": status, "detail": detail})
                        })
                        .collect();
                    println!("{}", Value::from(v));
                }
                Format::Csv | Format::Text => {
                    for o in &outcomes {
                        match &o.status {
                            CheckStatus::Pass => println!("PASS {}", o.name),
                            CheckStatus::Fail(m) => println!("FAIL {}: {m}", o.name),
                            CheckStatus::Skipped(m) => println!("SKIP {}: {m}", o.name),
                        }
                    }
                }
            }
            for o in &outcomes {
                if !o.passed() {
                    eprintln!("verification failed: {}", o.name);
                    failed = true;
                }
            }
            Ok(if failed { 1 } else { 0 })
        }
    }
}

/// Die quietly when the consumer of a pipe goes away, like other line
/// filters do, instead of panicking in println!.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}
