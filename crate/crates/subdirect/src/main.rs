use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use subdirect::cache::{CensusCache, CACHE_ENV};
use subdirect::docs::{AlgebraDoc, CensusDoc, InputRef, Report};
use subdirect::io::{self, TableFormat};
use subdirect::{catalog, CliError, CliResult};
use subdirect_core::certify::{distinguish, DistinguishOptions};
use subdirect_core::classify::classify;
use subdirect_core::constructions::{
    between, build_chain, chain_algebra, hat, hat_size, t_m, tilde, tilde_discriminator, w_m, MSpec,
};
use subdirect_core::enumerate::{enumerate_subdirect, DEFAULT_CENSUS_CAP};
use subdirect_core::iso::{find_isomorphism, IsoOptions, DEFAULT_NODE_BUDGET};
use subdirect_core::semigroup::DEFAULT_SIZE_CAP;
use subdirect_core::structure::{analyze, archimedean, idempotent_semilattice};
use subdirect_core::{EpSeq, FiniteSemigroup, Semilattice, TupleAlgebra};

#[derive(Parser)]
#[command(name = "subdirect", version, about = "Subdirect powers of finite semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory of extra named tables (`NAME.json` or `NAME.txt`).
    #[arg(long, global = true, env = "SUBDIRECT_CATALOG_DIR")]
    catalog_dir: Option<PathBuf>,
    /// Census cache directory; no caching when unset.
    #[arg(long, global = true, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    /// Node budget of the isomorphism oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Largest constructed algebra, in elements.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    size_cap: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Report,
    Json,
    Text,
}

/// A Cayley table: a file, `-` for standard input, or `--catalog NAME`.
#[derive(Args)]
struct Input {
    input: Option<String>,
    /// Catalog name, family (`null:4`, `rectangular-band:2x3`, …) or product (`Z2*N2`).
    #[arg(long, conflicts_with = "input")]
    catalog: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a Cayley table and print its normalized form or a summary.
    Validate {
        #[command(flatten)]
        input: Input,
        /// Print the table itself instead of a report.
        #[arg(long, value_enum, default_value_t = Emit::Report)]
        emit: Emit,
    },
    /// Structure report: components, φ, kernel, class, decomposition.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// Countable or continuum many subdirect powers, with the route taken.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Build one member of a witness family.
    Construct {
        #[command(subcommand)]
        which: Construct,
    },
    /// Tell two tuple algebras apart, or find an isomorphism.
    Certify {
        left: PathBuf,
        right: PathBuf,
        /// Allow algebras over different base tables.
        #[arg(long)]
        allow_cross_base: bool,
    },
    /// Census of subdirect subsemigroups of a direct power.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        arity: usize,
        /// Largest |S|^n attempted.
        #[arg(long, default_value_t = DEFAULT_CENSUS_CAP)]
        cap: usize,
        /// Ignore and do not update the cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Isomorphism oracle between two tables (paths, `-` or catalog names).
    Iso { left: String, right: String },
}

#[derive(Subcommand)]
enum Construct {
    /// A recurring {0,1}-word strictly between two others.
    Between {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },
    /// A chain of recurring {0,1}-words from 0̄ to 1̄, as an algebra over L2.
    Chain {
        #[arg(long)]
        length: usize,
    },
    /// P ∪ Δ_S for a chain P inserted at an element of a semilattice.
    Tilde {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        length: usize,
        /// Element playing the role of 1 in the chain; defaults to the least non-zero element.
        #[arg(long)]
        element: Option<String>,
    },
    /// The φ-preimage of a closed set of tuples of idempotents.
    Hat {
        #[command(flatten)]
        input: Input,
        /// Algebra document over E(S) or over S.
        #[arg(long, conflicts_with = "census_rep")]
        u: Option<PathBuf>,
        /// Use this representative of the census of E(S)^n instead.
        #[arg(long, requires = "arity")]
        census_rep: Option<usize>,
        #[arg(long)]
        arity: Option<usize>,
    },
    /// Nilpotent family told apart by divisor counts.
    Tm {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_mspec)]
        m: MSpec,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        arity: usize,
    },
    /// Group-by-nilpotent family told apart by root counts.
    Wm {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_mspec)]
        m: MSpec,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        arity: usize,
    },
}

fn parse_mspec(text: &str) -> Result<MSpec, String> {
    text.parse().map_err(|e: subdirect_core::Error| e.to_string())
}

struct Ctx {
    argv: Vec<String>,
    catalog_dir: Option<PathBuf>,
    cache_dir: Option<PathBuf>,
    budget: u64,
    size_cap: usize,
}

/// What a command hands back: the JSON result, its inputs, and the table
/// rendering.
struct Output {
    inputs: Vec<InputRef>,
    result: Value,
    table: String,
}

impl Ctx {
    fn source(&self, text: &str) -> CliResult<(String, FiniteSemigroup)> {
        if text == "-" || Path::new(text).is_file() {
            Ok((text.to_string(), io::parse_table(&io::read_source(text)?)?))
        } else {
            Ok((format!("catalog:{text}"), catalog::resolve(text, self.catalog_dir.as_deref())?))
        }
    }

    fn input(&self, input: &Input) -> CliResult<(String, FiniteSemigroup)> {
        match (&input.input, &input.catalog) {
            (_, Some(name)) => Ok((format!("catalog:{name}"), catalog::resolve(name, self.catalog_dir.as_deref())?)),
            (Some(path), None) => self.source(path),
            (None, None) => Err(CliError::Usage("give an input file, '-' or --catalog NAME".into())),
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable result")
}

fn names(s: &FiniteSemigroup, elems: &[usize]) -> String {
    let list: Vec<&str> = elems.iter().map(|&e| s.name(e)).collect();
    format!("{{{}}}", list.join(", "))
}

fn algebra_table(doc: &AlgebraDoc) -> String {
    let mut out = String::new();
    if let Some(label) = &doc.label {
        let _ = writeln!(out, "{label}");
    }
    let _ = writeln!(out, "base order {}, arity {}, {} members", doc.base.order(), doc.arity, doc.members.len());
    if let Some(c) = &doc.certificate {
        let _ = writeln!(out, "expected certificate: {:?} {:?}", c.hook, c.m_values);
    }
    for t in &doc.members {
        let _ = writeln!(out, "  {}", subdirect_core::semigroup::tuple_literal(&doc.base, t));
    }
    out
}

fn validate(source: &str, s: &FiniteSemigroup) -> CliResult<Output> {
    let result = json!({
        "valid": true,
        "order": s.order(),
        "elements": s.names(),
        "commutative": s.is_commutative(),
        "idempotents": subdirect_core::structure::idempotents(s).len(),
    });
    let table = format!("valid semigroup of order {}, elements {:?}\n", s.order(), s.names());
    Ok(Output { inputs: vec![InputRef::table(source, s)], result, table })
}

fn run_analyze(ctx: &Ctx, input: &Input) -> CliResult<Output> {
    let (source, s) = ctx.input(input)?;
    let report = analyze(&s);
    let mut result = to_value(&report);
    result["elements"] = to_value(&s.names());
    let mut table = format!("order {}, commutative {}\n", report.order, report.commutative);
    let _ = writeln!(table, "idempotents {}", names(&s, &report.idempotents));
    if let Some(d) = &report.archimedean {
        for (c, &e) in d.components.iter().zip(&d.idempotent_of_component) {
            let _ = writeln!(table, "component of {}: {}", s.name(e), names(&s, c));
        }
    }
    let _ = writeln!(table, "kernel {} (group: {})", names(&s, &report.kernel.elements), report.kernel.is_group);
    let _ = writeln!(table, "nilpotency class {:?}", report.nilpotency_class);
    if let Some(d) = &report.decomposition {
        let _ = writeln!(
            table,
            "extension of |G| = {} by a class-{} nilpotent quotient",
            d.group.order(),
            d.quotient_class
        );
    }
    let _ = writeln!(table, "rectangular band {:?}", report.rectangular_band);
    Ok(Output { inputs: vec![InputRef::table(&source, &s)], result, table })
}

fn run_classify(ctx: &Ctx, input: &Input) -> CliResult<Output> {
    let (source, s) = ctx.input(input)?;
    let report = classify(&s);
    let mut result = to_value(&report);
    result["citation"] = json!(report.rule.citation());
    for (step, value) in report.route.iter().zip(result["route"].as_array_mut().unwrap()) {
        value["citation"] = json!(step.rule.map(|r| r.citation()));
    }
    let mut table = format!("verdict: {:?} ({})\n", report.verdict, report.rule.citation());
    for step in &report.route {
        let _ = writeln!(table, "  {} -> {}", step.condition, step.outcome);
    }
    if let Some(c) = report.suggested_construction {
        let _ = writeln!(table, "suggested construction: {c:?}");
    }
    Ok(Output { inputs: vec![InputRef::table(&source, &s)], result, table })
}

fn algebra_output(inputs: Vec<InputRef>, doc: AlgebraDoc) -> Output {
    let table = algebra_table(&doc);
    Output { inputs, result: to_value(&doc), table }
}

fn construct(ctx: &Ctx, which: &Construct) -> CliResult<Output> {
    let l2 = || catalog::resolve("L2", None);
    match which {
        Construct::Between { alpha, beta } => {
            let base = l2()?;
            let (a, b) = (EpSeq::parse(&base, alpha)?, EpSeq::parse(&base, beta)?);
            let g = between(&a, &b)?;
            let result = json!({
                "alpha": a.display(&base),
                "beta": b.display(&base),
                "between": g.display(&base),
            });
            let table = format!("{} < {} < {}\n", a.display(&base), g.display(&base), b.display(&base));
            Ok(Output { inputs: vec![], result, table })
        }
        Construct::Chain { length } => {
            let base = l2()?;
            let chain = build_chain(*length)?;
            let algebra = chain_algebra(&base, &chain, 0, 1)?;
            let mut doc = AlgebraDoc::from_algebra(&algebra, Some(format!("chain k={length}")));
            doc.generators = chain.iter().map(|c| c.display(&base)).collect();
            Ok(algebra_output(vec![], doc))
        }
        Construct::Tilde { input, length, element } => {
            let (source, s) = ctx.input(input)?;
            let lattice = Semilattice::new(s.clone())?;
            let e = match element {
                Some(name) => s.resolve(name)?,
                None => lattice.minimal_nonzero()?,
            };
            let chain = build_chain(*length)?;
            let p = chain_algebra(&s, &chain, lattice.zero(), e)?;
            let t = tilde(&lattice, &p)?;
            let marked = tilde_discriminator(&lattice, &t, &p)?;
            let mut doc = AlgebraDoc::from_algebra(&t, Some(format!("tilde k={length} e={}", s.name(e))));
            doc.generators =
                chain.iter().map(|c| c.map(|x| if x == 0 { lattice.zero() } else { e }).display(&s)).collect();
            doc.details = Some(json!({ "chain_length": length, "element": s.name(e), "discriminator": marked }));
            Ok(algebra_output(vec![InputRef::table(&source, &s)], doc))
        }
        Construct::Hat { input, u, census_rep, arity } => {
            let (source, s) = ctx.input(input)?;
            let mut inputs = vec![InputRef::table(&source, &s)];
            let u_alg: TupleAlgebra = match (u, census_rep) {
                (Some(path), _) => {
                    let doc = AlgebraDoc::parse(&io::read_source(&path.to_string_lossy())?)?;
                    inputs.push(InputRef { source: path.display().to_string(), sha256: doc.digest() });
                    doc.to_algebra()?
                }
                (None, Some(k)) => {
                    let e = idempotent_semilattice(&s)?;
                    let n = arity.expect("clap enforces --arity");
                    census(ctx, e.order.semigroup(), n, DEFAULT_CENSUS_CAP, false)?.0.representative(*k)?
                }
                (None, None) => return Err(CliError::Usage("give --u FILE or --census-rep K --arity N".into())),
            };
            let h = hat(&s, &u_alg, ctx.size_cap)?;
            let d = archimedean(&s)?;
            let ids: Vec<_> = h.members().filter(|t| h.mul(t, t) == **t).cloned().collect();
            let mut doc = AlgebraDoc::from_algebra(&h, Some(format!("hat |U|={}", u_alg.len())));
            doc.details = Some(json!({
                "u_size": u_alg.len(),
                "u_subdirect": u_alg.is_subdirect()?,
                "predicted_size": hat_size(&d, &ids),
                "subdirect": h.is_subdirect()?,
            }));
            Ok(algebra_output(inputs, doc))
        }
        Construct::Tm { input, m, index, arity } => {
            let (source, s) = ctx.input(input)?;
            let f = t_m(&s, m, *index, *arity)?;
            Ok(algebra_output(vec![InputRef::table(&source, &s)], AlgebraDoc::from_family(&f)))
        }
        Construct::Wm { input, m, p, arity } => {
            let (source, s) = ctx.input(input)?;
            let f = w_m(&s, m, *p, *arity, ctx.size_cap)?;
            Ok(algebra_output(vec![InputRef::table(&source, &s)], AlgebraDoc::from_family(&f)))
        }
    }
}

fn certify(ctx: &Ctx, left: &Path, right: &Path, allow_cross_base: bool) -> CliResult<Output> {
    let load = |p: &Path| -> CliResult<AlgebraDoc> { AlgebraDoc::parse(&io::read_source(&p.to_string_lossy())?) };
    let (a, b) = (load(left)?, load(right)?);
    let options = DistinguishOptions { allow_cross_base, node_budget: ctx.budget };
    let cert = distinguish(&a.to_algebra()?, &b.to_algebra()?, options)?;
    let replay = std::iter::once("subdirect".to_string()).chain(ctx.argv.iter().cloned()).collect::<Vec<_>>().join(" ");
    let result = json!({
        "certificate": cert,
        "left": a.label,
        "right": b.label,
        "replay": replay,
    });
    let table = format!("{:?} by {:?}\nreplay: {replay}\n", cert.verdict, cert.kind);
    let inputs = vec![
        InputRef { source: left.display().to_string(), sha256: a.digest() },
        InputRef { source: right.display().to_string(), sha256: b.digest() },
    ];
    Ok(Output { inputs, result, table })
}

/// Returns the census and whether it came from the cache.
fn census(ctx: &Ctx, s: &FiniteSemigroup, arity: usize, cap: usize, no_cache: bool) -> CliResult<(CensusDoc, bool)> {
    let cache = ctx.cache_dir.as_ref().filter(|_| !no_cache).map(CensusCache::new);
    if let Some(doc) = cache.as_ref().and_then(|c| c.get(s, arity)) {
        return Ok((doc, true));
    }
    let doc = CensusDoc::from(&enumerate_subdirect(s, arity, cap)?);
    if let Some(c) = &cache {
        c.put(&doc)?;
    }
    Ok((doc, false))
}

fn run_enumerate(ctx: &Ctx, input: &Input, arity: usize, cap: usize, no_cache: bool) -> CliResult<Output> {
    let (source, s) = ctx.input(input)?;
    let start = Instant::now();
    let (doc, cached) = census(ctx, &s, arity, cap, no_cache)?;
    let table = format!(
        "{}^{arity}: {} subdirect subsemigroups in {} isomorphism classes, class sizes {:?} ({}, {:.1?})\n",
        source,
        doc.total,
        doc.classes,
        doc.class_sizes,
        if cached { "cached" } else { "computed" },
        start.elapsed()
    );
    Ok(Output { inputs: vec![InputRef::table(&source, &s)], result: to_value(&doc), table })
}

fn run_iso(ctx: &Ctx, left: &str, right: &str) -> CliResult<Output> {
    let ((ls, a), (rs, b)) = (ctx.source(left)?, ctx.source(right)?);
    let found = find_isomorphism(&a, &b, IsoOptions { node_budget: ctx.budget })?;
    let map: Option<Vec<(&str, &str)>> =
        found.as_ref().map(|m| m.iter().enumerate().map(|(x, &y)| (a.name(x), b.name(y))).collect());
    let table = match &map {
        Some(pairs) => {
            let shown: Vec<String> = pairs.iter().map(|(x, y)| format!("{x} -> {y}")).collect();
            format!("isomorphic: {}\n", shown.join(", "))
        }
        None => "not isomorphic\n".to_string(),
    };
    let result = json!({ "isomorphic": found.is_some(), "map": found, "named_map": map });
    Ok(Output { inputs: vec![InputRef::table(&ls, &a), InputRef::table(&rs, &b)], result, table })
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli, argv: Vec<String>) -> CliResult<()> {
    let ctx = Ctx {
        argv,
        catalog_dir: cli.catalog_dir.clone(),
        cache_dir: cli.cache_dir.clone(),
        budget: cli.budget,
        size_cap: cli.size_cap,
    };
    let output = match &cli.command {
        Command::Validate { input, emit: what } => {
            let (source, s) = ctx.input(input)?;
            if *what != Emit::Report {
                let format = if *what == Emit::Text { TableFormat::Text } else { TableFormat::Json };
                return emit(cli, &io::write_table(&s, format));
            }
            validate(&source, &s)?
        }
        Command::Analyze { input } => run_analyze(&ctx, input)?,
        Command::Classify { input } => run_classify(&ctx, input)?,
        Command::Construct { which } => construct(&ctx, which)?,
        Command::Certify { left, right, allow_cross_base } => certify(&ctx, left, right, *allow_cross_base)?,
        Command::Enumerate { input, arity, cap, no_cache } => run_enumerate(&ctx, input, *arity, *cap, *no_cache)?,
        Command::Iso { left, right } => run_iso(&ctx, left, right)?,
    };
    let text = match cli.format {
        Format::Table => output.table,
        Format::Json => {
            let report = Report::new(ctx.argv.clone(), output.inputs, output.result);
            serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
        }
    };
    emit(cli, &text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(&cli, argv) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code())
        }
    }
}
