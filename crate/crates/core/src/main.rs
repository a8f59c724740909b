use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use homalg::algebra::{check_law_with, AlgebraLaw};
use homalg::bialgebra::{bialgebra_twist, check_bialgebra, check_convolution, dual_bialgebra, find_antipode, primitive_elements, PrimitiveKind};
use homalg::catalog;
use homalg::coalgebra::{check_coalgebra_law, coalgebra_twist, dualize, dualize_coalgebra, CoalgebraLaw};
use homalg::error::Error;
use homalg::homdef::{parse_definition, print_definition, Definition, MapDef};
use homalg::law::{CheckOptions, LawReport};
use homalg::random;
use homalg::report::{matrix_strings, vector_strings, Report};
use homalg::runner::{as_algebra, as_bialgebra, check_report, laurent_report, truncated_report, virasoro_report, RunOptions};
use homalg::scalar::ParamSet;

#[derive(Parser)]
#[command(name = "homalg", version, about = "Exact checks of Hom-type algebraic laws")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check one or more laws. FILE may be `catalog:<name>`.
    Check {
        file: String,
        /// Law id; repeatable.
        #[arg(long = "law", required = true)]
        laws: Vec<String>,
        /// Compare residuals exactly even when a deformation order is declared.
        #[arg(long)]
        exact: bool,
        /// Also require `Δα = (β⊗β)Δ`-type compatibilities for `bialgebra`.
        #[arg(long)]
        strict: bool,
        /// Map file for `morphism`.
        #[arg(long)]
        map: Option<String>,
        /// Codomain structure for `morphism`; defaults to the input.
        #[arg(long)]
        target: Option<String>,
    },
    /// Twist a structure along a verified endomorphism.
    Twist {
        file: String,
        #[arg(long)]
        endo: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transpose every structure map.
    Dual {
        file: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve for the antipode of a unital-counital bialgebra.
    Antipode { file: String },
    /// Primitive (or generalized primitive) elements of a bialgebra.
    Primitives {
        file: String,
        #[arg(long)]
        generalized: bool,
    },
    /// Convolution product on random endomorphism triples.
    Convolution {
        file: String,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Print a catalog entry or a parameterized construction.
    Catalog {
        name: Option<String>,
        params: Vec<i64>,
        /// Endomorphism (map file) for `free_nc` generators or `matrix_coords` substitution.
        #[arg(long)]
        endo: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        list: bool,
    },
    /// Brackets of σ-derivations.
    Sigma {
        #[command(subcommand)]
        ring: SigmaCmd,
    },
    /// q-deformed Virasoro algebra on a finite window.
    Virasoro {
        #[arg(long)]
        window: i64,
    },
}

#[derive(Subcommand)]
enum SigmaCmd {
    /// Laurent polynomials with `σ(t) = q t^s`.
    Laurent {
        #[arg(long)]
        q: String,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value = "1")]
        eta: String,
        #[arg(long)]
        window: i64,
        #[arg(long, value_parser = ["jacobi", "witt", "delta"])]
        check: String,
    },
    /// `K[t]/(t^N)` with `σ(t)`, `ψ(t)` given by comma-separated coefficients.
    /// The identifier `zeta` denotes a primitive N-th root of unity.
    Truncated {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        psi: String,
        /// Comma-separated nonzero generator scalings.
        #[arg(long)]
        scaling: Option<String>,
        #[arg(long, value_enum, default_value_t = TruncatedCheck::All)]
        check: TruncatedCheck,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TruncatedCheck {
    All,
    /// Only the e, h, f relations; skips the ring gates.
    Ehf,
}

enum Failure {
    /// Input problem: exit 2.
    Input(Error),
    /// A required condition failed with a report: exit 1.
    Law(Report),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = Result<Output, Failure>;

enum Output {
    Report(Report),
    /// A printed definition or a listing.
    Text(String),
}

struct Loaded {
    def: Definition,
    bytes: Vec<u8>,
}

fn load(source: &str) -> Result<Loaded, Error> {
    if let Some(name) = source.strip_prefix("catalog:") {
        let def = catalog::load(name)?;
        let bytes = print_definition(&def).into_bytes();
        return Ok(Loaded { def, bytes });
    }
    let bytes = std::fs::read(source)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Error::Parse { line: 1, col: 1, msg: "input is not UTF-8".into() })?;
    Ok(Loaded { def: parse_definition(&text)?, bytes })
}

fn load_map(source: &str) -> Result<MapDef, Error> {
    match load(source)?.def {
        Definition::Map(m) => Ok(m),
        d => Err(Error::Structure(format!("expected a map definition, found {}", d.kind()))),
    }
}

fn merge_params(into: &mut ParamSet, from: &ParamSet) {
    for p in &from.params {
        if into.lookup(&p.name).is_none() {
            into.params.push(p.clone());
        }
    }
    if into.ext.is_none() {
        into.ext = from.ext.clone();
    }
}

fn cmd_check(file: &str, laws: &[String], exact: bool, strict: bool, map: Option<&str>, target: Option<&str>) -> Outcome {
    let input = load(file)?;
    let morphism = match map {
        Some(m) => {
            let f = load_map(m)?.f;
            let b = match target {
                Some(t) => as_algebra(&load(t)?.def)?,
                None => as_algebra(&input.def)?,
            };
            Some((f, b))
        }
        None => None,
    };
    let ids: Vec<&str> = laws.iter().map(String::as_str).collect();
    Ok(Output::Report(check_report(&input.def, &input.bytes, &ids, &RunOptions { exact, strict, morphism })?))
}

fn cmd_laurent(q: &str, s: i64, k: i64, eta: &str, window: i64, check: &str) -> Outcome {
    Ok(Output::Report(laurent_report(q, s, k, eta, window, check.parse()?)?))
}

/// Sends `def` to `out` (reporting there) or prints it.
fn emit_definition(def: &Definition, out: Option<&PathBuf>, rep: Report) -> Outcome {
    let text = print_definition(def);
    match out {
        Some(p) => {
            std::fs::write(p, text).map_err(Error::from)?;
            Ok(Output::Report(rep))
        }
        None if rep.all_hold() => Ok(Output::Text(text)),
        None => Err(Failure::Law(rep)),
    }
}

fn precondition_report(e: Error, bytes: &[u8]) -> Failure {
    match e {
        Error::Precondition { what, report: Some(r) } => {
            let mut rep = Report::new(bytes);
            let mut r = *r;
            r.note(what);
            rep.push(&r);
            Failure::Law(rep)
        }
        e => Failure::Input(e),
    }
}

fn cmd_twist(file: &str, endo: &str, out: Option<&PathBuf>) -> Outcome {
    let input = load(file)?;
    let map = load_map(endo)?;
    let mut bytes = input.bytes.clone();
    bytes.extend(print_definition(&Definition::Map(map.clone())).bytes());
    let mut rep = Report::new(&bytes);
    let twisted = match &input.def {
        Definition::Algebra(a) => {
            let mut t = homalg::algebra::yau_twist(a, &map.f).map_err(|e| precondition_report(e, &bytes))?;
            merge_params(&mut t.params, &map.params);
            rep.push(&check_law_with(&t, &AlgebraLaw::HomAssociative, &CheckOptions::exact())?);
            Definition::Algebra(t)
        }
        Definition::Coalgebra(c) => {
            let mut t = coalgebra_twist(c, &map.f).map_err(|e| precondition_report(e, &bytes))?;
            merge_params(&mut t.params, &map.params);
            rep.push(&check_coalgebra_law(&t, &CoalgebraLaw::HomCoassociative)?);
            Definition::Coalgebra(t)
        }
        Definition::Bialgebra(b) => {
            let mut t = bialgebra_twist(b, &map.f).map_err(|e| precondition_report(e, &bytes))?;
            merge_params(&mut t.params, &map.params);
            for r in check_bialgebra(&t, false)? {
                rep.push(&r);
            }
            Definition::Bialgebra(t)
        }
        Definition::Map(_) => return Err(Failure::Input(Error::Structure("cannot twist a map".into()))),
    };
    emit_definition(&twisted, out, rep)
}

fn cmd_dual(file: &str, out: Option<&PathBuf>) -> Outcome {
    let input = load(file)?;
    let mut rep = Report::new(&input.bytes);
    let mut involution = LawReport::new("double-dual");
    involution.checked = 1;
    let dual = match &input.def {
        Definition::Algebra(a) => {
            let c = dualize(a);
            if dualize_coalgebra(&c) != *a {
                involution.fail("dualizing twice changed the algebra");
            }
            Definition::Coalgebra(c)
        }
        Definition::Coalgebra(c) => {
            let a = dualize_coalgebra(c);
            if dualize(&a) != *c {
                involution.fail("dualizing twice changed the coalgebra");
            }
            Definition::Algebra(a)
        }
        Definition::Bialgebra(b) => {
            let d = dual_bialgebra(b);
            if dual_bialgebra(&d) != *b {
                involution.fail("dualizing twice changed the bialgebra");
            }
            Definition::Bialgebra(d)
        }
        Definition::Map(m) => {
            let mut t = m.clone();
            t.f = m.f.transpose();
            std::mem::swap(&mut t.domain, &mut t.codomain);
            Definition::Map(t)
        }
    };
    rep.push(&involution);
    emit_definition(&dual, out, rep)
}

fn cmd_antipode(file: &str) -> Outcome {
    let input = load(file)?;
    let b = as_bialgebra(&input.def)?;
    let a = find_antipode(&b).map_err(|e| precondition_report(e, &input.bytes))?;
    let mut rep = Report::new(&input.bytes);
    let mut found = LawReport::new("antipode");
    found.checked = 1;
    rep.push_with(
        &found,
        json!({
            "s": matrix_strings(&a.s),
            "labels": b.space.labels(),
            "commutes_with_alpha": a.commutes_with_alpha,
        }),
    );
    for (law, ok) in [("antipode-unique", a.unique), ("antipode-fixes-unit", a.fixes_unit), ("antipode-preserves-counit", a.preserves_counit)] {
        let mut r = LawReport::new(law);
        r.checked = 1;
        if !ok {
            r.fail(format!("{law} does not hold"));
        }
        rep.push(&r);
    }
    Ok(Output::Report(rep))
}

fn cmd_primitives(file: &str, generalized: bool) -> Outcome {
    let input = load(file)?;
    let b = as_bialgebra(&input.def)?;
    let kind = if generalized { PrimitiveKind::GeneralizedPrimitive } else { PrimitiveKind::Primitive };
    let p = primitive_elements(&b, kind)?;
    let mut rep = Report::new(&input.bytes);
    let mut r = LawReport::new(if generalized { "generalized-primitives" } else { "primitives" });
    r.checked = 1;
    if !p.closed {
        r.note("span is not closed under the commutator");
    }
    rep.push_with(
        &r,
        json!({
            "dim": p.basis.len(),
            "basis": p.basis.iter().map(|v| vector_strings(v)).collect::<Vec<_>>(),
            "labels": b.space.labels(),
            "counit_vanishes": p.counit_vanishes,
            "lambda": p.lambda.as_ref().map(|l| l.to_string()),
            "beta_eigen": p.beta_eigen,
            "closed": p.closed,
            "alpha_stable": p.alpha_stable,
        }),
    );
    if let Some(h) = &p.hom_lie {
        rep.push(h);
    }
    Ok(Output::Report(rep))
}

fn cmd_convolution(file: &str, samples: usize, seed: u64) -> Outcome {
    let input = load(file)?;
    let b = as_bialgebra(&input.def)?;
    let mut rng = random::rng(seed);
    let n = b.dim();
    let triples: Vec<_> = (0..samples)
        .map(|_| (random::random_matrix(&mut rng, n, 3, 0.5), random::random_matrix(&mut rng, n, 3, 0.5), random::random_matrix(&mut rng, n, 3, 0.5)))
        .collect();
    let mut rep = Report::new(&input.bytes);
    for r in check_convolution(&b, &triples) {
        rep.push(&r);
    }
    Ok(Output::Report(rep))
}

fn cmd_catalog(name: Option<&str>, params: &[i64], endo: Option<&str>, out: Option<&PathBuf>, list: bool) -> Outcome {
    if list || name.is_none() {
        let mut text: String = catalog::names().map(|n| format!("{n}\n")).collect();
        text.push_str("group_algebra <order> [exponent]\nfree_nc <variables> <cap>\nmatrix_coords <size> <cap>\nq_witt <window>\nq_virasoro <window>\n");
        return Ok(Output::Text(text));
    }
    let endo = endo.map(load_map).transpose()?;
    let def = catalog::construct(name.unwrap_or_default(), params, endo.as_ref().map(|m| &m.f)).map_err(|e| precondition_report(e, b""))?;
    let rep = Report::new(print_definition(&def).as_bytes());
    emit_definition(&def, out, rep)
}

fn configure_threads() {
    if let Some(n) = std::env::var("HOMALG_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0) {
        // Fails only if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn print_report(rep: &Report, format: Format) {
    match format {
        Format::Json => println!("{}", rep.to_json()),
        Format::Text => print!("{}", rep.to_text()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let start = Instant::now();
    let outcome = match &cli.cmd {
        Cmd::Check { file, laws, exact, strict, map, target } => cmd_check(file, laws, *exact, *strict, map.as_deref(), target.as_deref()),
        Cmd::Twist { file, endo, out } => cmd_twist(file, endo, out.as_ref()),
        Cmd::Dual { file, out } => cmd_dual(file, out.as_ref()),
        Cmd::Antipode { file } => cmd_antipode(file),
        Cmd::Primitives { file, generalized } => cmd_primitives(file, *generalized),
        Cmd::Convolution { file, samples, seed } => cmd_convolution(file, *samples, *seed),
        Cmd::Catalog { name, params, endo, out, list } => cmd_catalog(name.as_deref(), params, endo.as_deref(), out.as_ref(), *list),
        Cmd::Sigma { ring: SigmaCmd::Laurent { q, s, k, eta, window, check } } => cmd_laurent(q, *s, *k, eta, *window, check),
        Cmd::Sigma { ring: SigmaCmd::Truncated { n, sigma, psi, scaling, check } } => {
            truncated_report(*n, sigma, psi, scaling.as_deref(), matches!(check, TruncatedCheck::Ehf)).map(Output::Report).map_err(Failure::from)
        }
        Cmd::Virasoro { window } => virasoro_report(*window).map(Output::Report).map_err(Failure::from),
    };
    let ms = start.elapsed().as_millis() as u64;
    match outcome {
        Ok(Output::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(mut rep)) => {
            rep.ms = ms;
            print_report(&rep, cli.format);
            if rep.verdict() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Law(mut rep)) => {
            rep.ms = ms;
            print_report(&rep, cli.format);
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
