//! `coxorbit`: command-line front end.
//!
//! Exit codes: 0 success or relation holds, 1 property fails or elements are
//! incomparable, 2 usage or validation error, 3 enumeration cap exceeded.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxorbit::checks::{self, CheckResult};
use coxorbit::link_pattern::{leq_d, olp_from_perm, orbit_table, seq_s};
use coxorbit::nilpotent::{chain_cascade_to_depth, classify, OrthogonalSet};
use coxorbit::weyl::{parse_word, DEFAULT_CAP};
use coxorbit::{build_root_system, Error, Family, IJKDatum, ParabolicSubset, RootSystem, WeylElement};

/// Environment variable overriding the default enumeration cap.
const CAP_ENV: &str = "COXORBIT_CAP";

#[derive(Parser)]
#[command(name = "coxorbit", version, about = "Bruhat-type orders on parabolic quotients and orthogonal root sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hasse diagram of the order on W(I,J,K).
    Poset(PosetArgs),
    /// Compare two elements of W(I,J,K).
    Compare(CompareArgs),
    /// Classify a set of orthogonal roots.
    Classify(ClassifyArgs),
    /// Print the cascade tree of a root system.
    Cascade(CascadeArgs),
    /// Orbit table for square-zero matrices of rank r in gl_n.
    Orbits(OrbitsArgs),
    /// Run the exhaustive checks.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct SystemArgs {
    /// Cartan type letter, A to G.
    #[arg(long = "type", value_name = "LETTER")]
    family: Family,
    #[arg(long)]
    rank: usize,
}

impl SystemArgs {
    fn build(&self) -> coxorbit::Result<Arc<RootSystem>> {
        build_root_system(self.family, self.rank)
    }
}

#[derive(Args)]
struct DatumArgs {
    /// Cartan type letter; omit together with --rank when using --nr.
    #[arg(long = "type", value_name = "LETTER", requires = "rank")]
    family: Option<Family>,
    #[arg(long)]
    rank: Option<usize>,
    /// Simple indices of I.
    #[arg(long = "I", value_name = "LIST", value_parser = parse_indices, default_value = "")]
    i: Indices,
    /// Simple indices of J.
    #[arg(long = "J", value_name = "LIST", value_parser = parse_indices, default_value = "")]
    j: Indices,
    /// Simple indices of K.
    #[arg(long = "K", value_name = "LIST", value_parser = parse_indices, default_value = "")]
    k: Indices,
    /// Pairs s:s* such as 1:3; defaults to pairing I and J in increasing order.
    #[arg(long, value_delimiter = ',')]
    star: Vec<String>,
    /// Type-A datum for square-zero matrices of rank r in gl_n.
    #[arg(long, num_args = 2, value_names = ["N", "R"], conflicts_with_all = ["family", "i", "j", "k", "star"])]
    nr: Option<Vec<usize>>,
    /// Enumeration cap (also read from COXORBIT_CAP).
    #[arg(long)]
    cap: Option<usize>,
}

impl DatumArgs {
    fn build(&self) -> coxorbit::Result<IJKDatum> {
        if let Some(nr) = &self.nr {
            return IJKDatum::type_a(nr[0], nr[1]);
        }
        let (Some(family), Some(rank)) = (self.family, self.rank) else {
            return Err(Error::InvalidDatum("give --type and --rank, or --nr".into()));
        };
        let sys = build_root_system(family, rank)?;
        let set = |v: &Indices| ParabolicSubset::new(v.0.iter().copied());
        if self.star.is_empty() {
            return IJKDatum::with_ordered_star(&sys, set(&self.i), set(&self.j), set(&self.k));
        }
        let pairs = self.star.iter().map(|p| parse_pair(p)).collect::<coxorbit::Result<Vec<_>>>()?;
        IJKDatum::new(&sys, set(&self.i), set(&self.j), set(&self.k), &pairs)
    }

    fn type_a(&self) -> Option<(usize, usize)> {
        self.nr.as_ref().map(|v| (v[0], v[1]))
    }
}

/// A list of simple indices such as "1 3" or "1,3".
#[derive(Clone, Debug)]
struct Indices(Vec<usize>);

fn parse_indices(text: &str) -> Result<Indices, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| format!("'{s}' is not a simple index")))
        .collect::<Result<Vec<_>, _>>()
        .map(Indices)
}

fn parse_pair(text: &str) -> coxorbit::Result<(usize, usize)> {
    let bad = || Error::InvalidDatum(format!("star pair '{text}' is not of the form s:t"));
    let (a, b) = text.split_once(':').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn cap(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| std::env::var(CAP_ENV).ok().and_then(|v| v.parse().ok()))
        .unwrap_or(DEFAULT_CAP)
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

impl Output {
    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.output {
            Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn require(&self, allowed: &[Format]) -> Result<(), Failure> {
        if allowed.contains(&self.format) {
            Ok(())
        } else {
            Err(Failure::Usage("this subcommand does not support that output format".into()))
        }
    }
}

#[derive(Args)]
struct PosetArgs {
    #[command(flatten)]
    datum: DatumArgs,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    datum: DatumArgs,
    /// Read the two elements as permutations in line notation (type A).
    #[arg(long)]
    perm: bool,
    /// The candidate lower element, e.g. "1" or "3 2".
    lower: String,
    /// The candidate upper element.
    upper: String,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// A root in simple-root coordinates, e.g. "1 2 1 1"; repeat for each root.
    #[arg(long = "root", required = false)]
    roots: Vec<String>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct CascadeArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Stop after this many roots.
    #[arg(long)]
    depth: Option<usize>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct OrbitsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct SelftestArgs {
    /// Check the order equivalences for the type-A datum (n, r); repeatable.
    #[arg(long, num_args = 2, value_names = ["N", "R"], action = clap::ArgAction::Append)]
    nr: Vec<usize>,
    /// Check the cover characterizations on a quotient of this system, e.g. B3; repeatable.
    #[arg(long)]
    coxeter: Vec<String>,
}

enum Failure {
    Usage(String),
    Cap(String),
    Property,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Poset(a) => cmd_poset(a),
        Command::Compare(a) => cmd_compare(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Cascade(a) => cmd_cascade(a),
        Command::Orbits(a) => cmd_orbits(a),
        Command::Selftest(a) => cmd_selftest(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Property) => ExitCode::from(1),
    }
}

fn cmd_poset(a: PosetArgs) -> Result<u8, Failure> {
    let datum = a.datum.build()?;
    let poset = datum.build_poset(cap(a.datum.cap))?;
    let text = match a.out.format {
        Format::Dot => poset.to_dot(),
        Format::Json => json(&poset.to_json())?,
        Format::Text => render::poset_text(&poset),
    };
    a.out.emit(&text)?;
    Ok(0)
}

fn json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_element(datum: &IJKDatum, text: &str, perm: bool) -> coxorbit::Result<WeylElement> {
    if perm {
        let line = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::InvalidPermutation(text.to_string())))
            .collect::<coxorbit::Result<Vec<_>>>()?;
        WeylElement::from_line_notation(datum.system(), &line)
    } else {
        WeylElement::from_word(datum.system(), &parse_word(text)?)
    }
}

fn cmd_compare(a: CompareArgs) -> Result<u8, Failure> {
    let datum = a.datum.build()?;
    let lower = datum.canonical_rep(&parse_element(&datum, &a.lower, a.perm)?)?;
    let upper = datum.canonical_rep(&parse_element(&datum, &a.upper, a.perm)?)?;
    let mut out = String::new();
    for (name, q) in [("lower", &lower), ("upper", &upper)] {
        let mins = datum.min_set(q)?;
        out.push_str(&format!("{name}: {}  Min = {{{}}}\n", q, render::join_elements(&mins)));
    }
    let down = datum.leq_o_witness(&lower, &upper)?;
    let up = datum.leq_o_witness(&upper, &lower)?;
    let relation = match (&down, &up) {
        (Some(_), Some(_)) => format!("{lower} =_O {upper}"),
        (Some(u), None) => format!("{lower} <=_O {upper}  (witness {u} in Min({lower}), {u} <= {upper})"),
        (None, Some(u)) => format!("{upper} <=_O {lower}  (witness {u} in Min({upper}), {u} <= {lower})"),
        (None, None) => format!("{lower} and {upper} are incomparable"),
    };
    out.push_str(&relation);
    out.push('\n');
    if let Some((n, r)) = a.datum.type_a() {
        let lw = lower.rep.to_line_notation()?;
        let uw = upper.rep.to_line_notation()?;
        let (dl, du) = (olp_from_perm(&lw, n, r)?, olp_from_perm(&uw, n, r)?);
        out.push_str(&format!("d_lower = {dl}, d_upper = {du}\n"));
        out.push_str(&format!("d_lower <=_D d_upper: {}\n", leq_d(&dl, &du)?));
        out.push_str(&format!("d_upper <=_D d_lower: {}\n", leq_d(&du, &dl)?));
        for (name, w) in [("lower", &lw), ("upper", &uw)] {
            out.push_str(&render::sequence_rows(name, &seq_s(w, n, r)?));
        }
    }
    print!("{out}");
    Ok(if down.is_some() || up.is_some() { 0 } else { 1 })
}

fn parse_root(sys: &RootSystem, text: &str) -> coxorbit::Result<Vec<i64>> {
    let coords = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|_| Error::NotARoot(vec![])))
        .collect::<coxorbit::Result<Vec<_>>>()?;
    if coords.len() != sys.rank() {
        return Err(Error::Mismatch);
    }
    Ok(coords)
}

fn cmd_classify(a: ClassifyArgs) -> Result<u8, Failure> {
    a.out.require(&[Format::Text, Format::Json])?;
    let sys = a.system.build()?;
    let coords = a.roots.iter().map(|r| parse_root(&sys, r)).collect::<coxorbit::Result<Vec<_>>>()?;
    let set = OrthogonalSet::from_coords(&sys, &coords)?;
    let report = classify(&set)?;
    let text = match a.out.format {
        Format::Json => json(&report)?,
        _ => render::report_text(&sys, &report),
    };
    a.out.emit(&text)?;
    Ok(0)
}

fn cmd_cascade(a: CascadeArgs) -> Result<u8, Failure> {
    a.out.require(&[Format::Text, Format::Json])?;
    let sys = a.system.build()?;
    let tree = chain_cascade_to_depth(&sys, a.depth.unwrap_or(usize::MAX))?;
    let text = match a.out.format {
        Format::Json => json(&tree)?,
        _ => render::cascade_text(&tree),
    };
    a.out.emit(&text)?;
    Ok(0)
}

fn cmd_orbits(a: OrbitsArgs) -> Result<u8, Failure> {
    a.out.require(&[Format::Text, Format::Json])?;
    let rows = orbit_table(a.n, a.r)?;
    let text = match a.out.format {
        Format::Json => json(&rows)?,
        _ => render::orbit_text(&rows),
    };
    a.out.emit(&text)?;
    Ok(0)
}

/// The quotient used by `selftest --coxeter`: `I = {1}`, `J = {rank}` when
/// those nodes are distinct and not joined, otherwise the full group.
fn coxeter_datum(label: &str) -> coxorbit::Result<IJKDatum> {
    let family: Family = label.get(..1).unwrap_or("").parse()?;
    let rank: usize = label[1..].parse().map_err(|_| Error::UnknownFamily(label.to_string()))?;
    let sys = build_root_system(family, rank)?;
    let empty = ParabolicSubset::empty;
    if rank >= 3 && sys.cartan(0, rank - 1) == 0 {
        IJKDatum::with_ordered_star(&sys, ParabolicSubset::new([1]), ParabolicSubset::new([rank]), empty())
    } else {
        IJKDatum::new(&sys, empty(), empty(), empty(), &[])
    }
}

fn cmd_selftest(a: SelftestArgs) -> Result<u8, Failure> {
    let mut jobs: Vec<(String, Box<dyn Fn() -> CheckResult>)> = Vec::new();
    let custom = !a.nr.is_empty() || !a.coxeter.is_empty();
    for pair in a.nr.chunks(2) {
        let (n, r) = (pair[0], pair[1]);
        jobs.push((format!("orders agree for ({n},{r})"), Box::new(move || checks::prop_equiv(n, r))));
    }
    for label in &a.coxeter {
        let datum = coxeter_datum(label)?;
        let (family, rank) = (datum.system().family(), datum.system().rank());
        let d = Arc::new(datum);
        let d2 = Arc::clone(&d);
        jobs.push((format!("cover characterizations in {label}"), Box::new(move || checks::covers_theorem(&d))));
        jobs.push((format!("coset oracle in {label}"), Box::new(move || checks::coset_oracle(&d2))));
        jobs.push((format!("Bruhat oracles in {label}"), Box::new(move || checks::bruhat_oracles(family, rank))));
    }
    if !custom {
        jobs.push(("A3 quotient Hasse diagram".into(), Box::new(checks::a3_quotient_diagram)));
        jobs.push(("sequences for n=4, r=2".into(), Box::new(checks::a3_sequences)));
        for (n, r) in [(4, 2), (5, 2), (6, 2), (6, 3)] {
            jobs.push((format!("orders agree for ({n},{r})"), Box::new(move || checks::prop_equiv(n, r))));
        }
        for (label, datum) in checks::standard_data()? {
            let d = Arc::new(datum);
            let d2 = Arc::clone(&d);
            jobs.push((format!("cover characterizations, {label}"), Box::new(move || checks::covers_theorem(&d))));
            jobs.push((format!("coset oracle, {label}"), Box::new(move || checks::coset_oracle(&d2))));
        }
        for n in 2..=6 {
            for r in 1..=n / 2 {
                jobs.push((format!("orbit dimensions ({n},{r})"), Box::new(move || checks::dimension_oracle(n, r))));
            }
        }
        for n in 2..=5 {
            for r in 1..=n / 2 {
                jobs.push((format!("cover moves ({n},{r})"), Box::new(move || checks::cover_moves(n, r))));
            }
        }
        for n in 2..=7 {
            for r in 0..=n / 2 {
                jobs.push((format!("counting ({n},{r})"), Box::new(move || checks::counting(n, r))));
            }
        }
        for (f, n) in [(Family::A, 3), (Family::A, 4), (Family::B, 3), (Family::G, 2)] {
            jobs.push((format!("Bruhat oracles {f}{n}"), Box::new(move || checks::bruhat_oracles(f, n))));
        }
        jobs.push(("six configuration heights".into(), Box::new(checks::five_case_heights)));
        for n in [3, 4] {
            jobs.push((format!("type C{n} table"), Box::new(move || checks::type_c_table(n))));
            jobs.push((format!("type B{n} table"), Box::new(move || checks::type_b_table(n))));
        }
        jobs.push(("type F4 table".into(), Box::new(checks::type_f_table)));
        for (f, n) in [(Family::A, 4), (Family::B, 4), (Family::C, 4), (Family::D, 4), (Family::F, 4), (Family::G, 2)] {
            jobs.push((format!("combination scan {f}{n}"), Box::new(move || checks::combination_scan(f, n, 4))));
        }
        jobs.push(("E7 cascade".into(), Box::new(checks::e7_cascade)));
        jobs.push(("Levi involutions".into(), Box::new(checks::involution_examples)));
        for n in 2..=8 {
            jobs.push((format!("grading dimensions n={n}"), Box::new(move || checks::grading_formula(n))));
        }
    }
    let mut failed = 0;
    let start = Instant::now();
    for (name, job) in &jobs {
        let t = Instant::now();
        match job() {
            Ok(detail) => println!("PASS {name} ({:.2}s): {detail}", t.elapsed().as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("FAIL {name} ({:.2}s): {e}", t.elapsed().as_secs_f64());
            }
        }
    }
    println!("{} of {} checks passed in {:.2}s", jobs.len() - failed, jobs.len(), start.elapsed().as_secs_f64());
    if failed == 0 {
        Ok(0)
    } else {
        Err(Failure::Property)
    }
}
