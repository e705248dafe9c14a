//! The `lie-index` command line.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lie_index_core::arith::Rational;
use lie_index_core::catalog::{construct, expected_regular_families, expected_results, Params, SCHEMAS};
use lie_index_core::index::{self, deformation_index, raw_index, Deformation, Method, RandomizedParams};
use lie_index_core::lie::{center, characteristic_sequence, is_filiform, is_quasi_filiform, nilindex};
use lie_index_core::regular::{
    find_regular, kernel_at, regular_set_minors, verify_family, Functional, FunctionalFamily, Verdict,
};

use crate::format::{AlgebraFile, ParseError};
use crate::report::{
    params_map, CatalogEmit, CatalogList, CharacteristicSection, DeformSection, ExpectLine, ExpectSummary,
    FamilySection, IndexSection, RegularSection, Report, SchemaEntry, Validation, SCHEMA,
};

#[derive(Parser, Debug)]
#[command(name = "lie-index", version, about = "Index and regular functionals of finite-dimensional Lie algebras")]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Jacobi identity.
    Validate {
        /// Algebra file, or `-` for standard input.
        file: PathBuf,
    },
    /// Compute the index `n - rank` of the structure matrix.
    Index {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Regular functionals: search, check one, verify a family or list the
    /// minors cutting out the irregular set.
    Regular {
        file: PathBuf,
        #[command(flatten)]
        mode: RegularMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Functionals tried by `--find`.
        #[arg(long, default_value_t = 1000)]
        max_attempts: usize,
        /// Samples per check for `--family`.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Structural summary: validity, nilpotency, index and a regular functional.
    Report {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random elements sampled for the characteristic sequence.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Named families of algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Index along the deformation `[,]_0 + t^d [,]_1`.
    Deform {
        base: PathBuf,
        perturbation: PathBuf,
        /// Nonzero sample values of `t`, comma separated.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        t: Vec<String>,
        #[arg(long, default_value_t = 1)]
        degree: u32,
    },
    /// Check every tabulated index value and regular family.
    Expect {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// List the families and their parameters.
    List,
    /// Write one family member as an algebra file.
    Emit {
        name: String,
        /// Parameters as `key=value`, for example `n=8 r=3`.
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct RegularMode {
    /// Search for a regular functional.
    #[arg(long)]
    find: bool,
    /// Kernel of the functional with the given coordinates.
    #[arg(long, value_name = "P1,...,PN", allow_hyphen_values = true)]
    check: Option<String>,
    /// Verify a family such as `free:1,2;nonzero:3-8`.
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
    /// Distinct nonzero minors of order `n - index`.
    #[arg(long)]
    minors: bool,
}

#[derive(Args, Debug)]
struct Sampling {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[arg(long, default_value_t = 1 << 16)]
    bound: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Symbolic,
    Randomized,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Symbolic => Method::Symbolic,
            MethodArg::Randomized => Method::Randomized,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: io::Error },
    #[error(transparent)]
    Output(#[from] io::Error),
    #[error(transparent)]
    Core(#[from] lie_index_core::Error),
    #[error("{0}")]
    Input(String),
}

type Result<T> = std::result::Result<T, CliError>;

/// Runs the CLI on `args` (program name first) and returns the exit code:
/// 0 on success, 1 on domain errors and negative outcomes, 2 on usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return e.exit_code();
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn load(path: &Path) -> Result<AlgebraFile> {
    let shown = path.display().to_string();
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|source| CliError::Read { path: shown.clone(), source })?;
        s
    } else {
        fs::read_to_string(path).map_err(|source| CliError::Read { path: shown.clone(), source })?
    };
    AlgebraFile::parse(&text).map_err(|source| CliError::Parse { path: shown, source })
}

fn json<T: Serialize>(out: &mut dyn Write, doc: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(doc).map_err(|e| CliError::Input(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse().map_err(|e| CliError::Input(format!("{e}")))
}

fn components(k: usize) -> String {
    format!("{k} nonzero Jacobi component{}", if k == 1 { "" } else { "s" })
}

fn tuple(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(Rational::to_string).collect();
    format!("({})", parts.join(", "))
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Validate { file } => validate(cli.json, file, out),
        Command::Index { file, method, sampling } => {
            let params = RandomizedParams { trials: sampling.trials, bound: sampling.bound, seed: sampling.seed };
            cmd_index(cli.json, file, (*method).into(), params, out)
        }
        Command::Regular { file, mode, seed, max_attempts, samples } => {
            regular(cli.json, file, mode, *seed, *max_attempts, *samples, out)
        }
        Command::Report { file, seed, samples } => report(cli.json, file, *seed, *samples, out),
        Command::Catalog { action: CatalogAction::List } => catalog_list(cli.json, out),
        Command::Catalog { action: CatalogAction::Emit { name, params, output } } => {
            catalog_emit(cli.json, name, params, output.as_deref(), out, err)
        }
        Command::Deform { base, perturbation, t, degree } => deform(cli.json, base, perturbation, t, *degree, out),
        Command::Expect { seed, samples } => expect(cli.json, *seed, *samples, out),
    }
}

fn validate(as_json: bool, path: &Path, out: &mut dyn Write) -> Result<i32> {
    let file = load(path)?;
    let v = file.algebra.validate();
    if as_json {
        let mut doc = Report::new("validate", file.name.clone(), file.algebra.dim());
        doc.validation = Some(Validation::from(&v));
        json(out, &doc)?;
    } else if v.is_valid() {
        writeln!(out, "valid")?;
    } else {
        writeln!(out, "invalid: {}", components(v.violations.len()))?;
        for x in v.violations.iter().take(20) {
            writeln!(out, "  J(x{}, x{}, x{}) has x{} component {}", x.i, x.j, x.k, x.t, x.residual)?;
        }
        if v.violations.len() > 20 {
            writeln!(out, "  ...")?;
        }
    }
    Ok(if v.is_valid() { 0 } else { 1 })
}

fn cmd_index(as_json: bool, path: &Path, method: Method, params: RandomizedParams, out: &mut dyn Write) -> Result<i32> {
    let file = load(path)?;
    let r = index::index(&file.algebra, method, &params)?;
    if as_json {
        let mut doc = Report::new("index", file.name.clone(), r.dim);
        doc.seed = Some(params.seed);
        doc.index = Some(IndexSection::from(&r));
        json(out, &doc)?;
    } else {
        writeln!(out, "{}", index::summary(&r))?;
        match r.certification {
            Some(c) => writeln!(out, "method {}, seed {}, trials {}, bound {}", r.method, c.seed, c.trials, c.bound)?,
            None => writeln!(out, "method {}, seed {}", r.method, params.seed)?,
        }
    }
    Ok(0)
}

fn regular(
    as_json: bool,
    path: &Path,
    mode: &RegularMode,
    seed: u64,
    max_attempts: usize,
    samples: usize,
    out: &mut dyn Write,
) -> Result<i32> {
    let file = load(path)?;
    let alg = &file.algebra;
    let n = alg.dim();
    let mut doc = Report::new("regular", file.name.clone(), n);
    doc.seed = Some(seed);
    let mut code = 0;
    if let Some(coords) = &mode.check {
        let values = coords.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        if values.len() != n {
            return Err(CliError::Input(format!("--check needs {n} coordinates, got {}", values.len())));
        }
        let r = kernel_at(alg, &Functional(values))?;
        if !as_json {
            let verdict = if r.is_regular { "regular" } else { "not regular" };
            writeln!(out, "kernel dim {}, {verdict}", r.kernel_dim)?;
            writeln!(out, "index {}", r.algebra_index)?;
        }
        doc.regular = Some(RegularSection::new(&r, None));
    } else if mode.find {
        let s = find_regular(alg, seed, max_attempts)?;
        if !as_json {
            writeln!(out, "regular functional {}", tuple(s.report.functional.coords()))?;
            writeln!(out, "kernel dim {}, found after {} attempts, seed {}", s.report.kernel_dim, s.attempts, seed)?;
        }
        doc.regular = Some(RegularSection::new(&s.report, Some(s.attempts)));
    } else if let Some(spec) = &mode.family {
        let fam = FunctionalFamily::parse(n, spec)?;
        let r = verify_family(alg, &fam, samples, seed)?;
        if !as_json {
            writeln!(out, "family {} (index {}, seed {seed}, {samples} samples per check)", r.family, r.algebra_index)?;
            for b in &r.branches {
                let label = if b.label.is_empty() { String::new() } else { format!(" [{}]", b.label) };
                writeln!(out, "  {}{label}", b.verdict)?;
                if let Some(f) = &b.sufficiency_counterexample {
                    writeln!(out, "    irregular member {}", tuple(f.coords()))?;
                }
                if let Some((s, f)) = &b.necessity_witness {
                    let set = &fam.nonzero_sets[*s];
                    let set: Vec<String> = set.iter().map(u32::to_string).collect();
                    writeln!(out, "    regular with p{{{}}} = 0: {}", set.join(","), tuple(f.coords()))?;
                }
            }
        }
        if !r.all_supported() {
            code = 1;
        }
        doc.family = Some(FamilySection::from(&r));
    } else {
        let minors = regular_set_minors(alg)?;
        if !as_json {
            if minors.is_empty() {
                writeln!(out, "every functional is regular")?;
            }
            for m in &minors {
                writeln!(out, "{m}")?;
            }
        }
        doc.minors = Some(minors.iter().map(ToString::to_string).collect());
    }
    if as_json {
        json(out, &doc)?;
    }
    Ok(code)
}

fn report(as_json: bool, path: &Path, seed: u64, samples: usize, out: &mut dyn Write) -> Result<i32> {
    let file = load(path)?;
    let alg = &file.algebra;
    let v = alg.validate();
    let mut doc = Report::new("report", file.name.clone(), alg.dim());
    doc.seed = Some(seed);
    doc.validation = Some(Validation::from(&v));
    if v.is_valid() {
        let nil = nilindex(alg);
        doc.nilpotent = Some(nil.is_some());
        doc.nilindex = nil;
        if nil.is_some() {
            let c = characteristic_sequence(alg, samples, seed)?;
            doc.characteristic_sequence = Some(CharacteristicSection::new(&c, samples));
            doc.filiform = Some(is_filiform(alg)?);
            doc.quasi_filiform = Some(is_quasi_filiform(alg)?);
        } else {
            doc.filiform = Some(false);
            doc.quasi_filiform = Some(false);
        }
        doc.center_dim = Some(center(alg).dim());
        let params = RandomizedParams { seed, ..Default::default() };
        let r = index::index(alg, Method::Both, &params)?;
        doc.frobenius = Some(r.index == 0);
        doc.index = Some(IndexSection::from(&r));
        let s = find_regular(alg, seed, 1000)?;
        doc.regular = Some(RegularSection::new(&s.report, Some(s.attempts)));
    }
    if as_json {
        json(out, &doc)?;
    } else {
        if let Some(name) = &doc.name {
            writeln!(out, "name: {name}")?;
        }
        writeln!(out, "dim: {}", doc.dim)?;
        if !v.is_valid() {
            writeln!(out, "valid: no ({})", components(v.violations.len()))?;
            return Ok(1);
        }
        writeln!(out, "valid: yes")?;
        let yes = |b: Option<bool>| if b == Some(true) { "yes" } else { "no" };
        writeln!(out, "nilpotent: {}", yes(doc.nilpotent))?;
        if let Some(p) = doc.nilindex {
            writeln!(out, "nilindex: {p}")?;
        }
        if let Some(c) = &doc.characteristic_sequence {
            let parts: Vec<String> = c.parts.iter().map(usize::to_string).collect();
            writeln!(out, "characteristic sequence: ({}) ({samples} samples, seed {seed})", parts.join(", "))?;
        }
        writeln!(out, "filiform: {}", yes(doc.filiform))?;
        writeln!(out, "quasi-filiform: {}", yes(doc.quasi_filiform))?;
        writeln!(out, "center dim: {}", doc.center_dim.unwrap_or(0))?;
        if let Some(i) = &doc.index {
            writeln!(
                out,
                "index: {} (rank {}, method {}, seed {seed}, trials {}, bound {})",
                i.index,
                i.rank,
                i.method,
                i.trials.unwrap_or(0),
                i.bound.unwrap_or(0)
            )?;
        }
        writeln!(out, "frobenius: {}", yes(doc.frobenius))?;
        if let Some(r) = &doc.regular {
            writeln!(out, "regular functional: ({}) after {} attempts", r.functional.join(", "), r.attempts.unwrap_or(0))?;
        }
    }
    Ok(if v.is_valid() { 0 } else { 1 })
}

fn catalog_list(as_json: bool, out: &mut dyn Write) -> Result<i32> {
    if as_json {
        let doc =
            CatalogList { schema: SCHEMA, command: "catalog list", entries: SCHEMAS.iter().map(SchemaEntry::from).collect() };
        json(out, &doc)?;
        return Ok(0);
    }
    for s in SCHEMAS {
        let params: Vec<String> = s.params.iter().map(|(p, r)| format!("{p}: {r}")).collect();
        let params = if params.is_empty() { "-".to_string() } else { params.join("; ") };
        writeln!(out, "{:<20} {:<15} {:<50} {}", s.name, s.kind.as_str(), params, s.summary)?;
    }
    Ok(0)
}

fn catalog_emit(
    as_json: bool,
    name: &str,
    words: &[String],
    output: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let params = Params::parse(words.iter().map(String::as_str))?;
    let entry = construct(name, &params)?;
    let file = AlgebraFile {
        algebra: entry.algebra.clone(),
        name: Some(entry.label()),
        basis: entry.basis_note.map(str::to_string),
    };
    if !entry.is_verified() {
        writeln!(
            err,
            "warning: {} fails the Jacobi identity ({}); emitted as transcribed",
            entry.label(),
            components(entry.violations)
        )?;
    }
    let text = file.emit();
    if let Some(path) = output {
        fs::write(path, &text).map_err(|source| CliError::Write { path: path.display().to_string(), source })?;
    }
    if as_json {
        let doc = CatalogEmit {
            schema: SCHEMA,
            command: "catalog emit",
            name: entry.name.clone(),
            params: params_map(&entry.params),
            status: entry.status.to_string(),
            violations: entry.violations,
            basis: file.basis.clone(),
            file: text,
        };
        json(out, &doc)?;
    } else if output.is_none() {
        out.write_all(text.as_bytes())?;
    }
    Ok(0)
}

fn deform(as_json: bool, base: &Path, pert: &Path, ts: &[String], degree: u32, out: &mut dyn Write) -> Result<i32> {
    let base = load(base)?;
    let pert = load(pert)?;
    let samples = ts.iter().map(|t| parse_rational(t)).collect::<Result<Vec<_>>>()?;
    let def = Deformation::new(base.algebra.clone(), vec![(degree, pert.algebra)])?;
    let r = deformation_index(&def, &samples)?;
    if as_json {
        let mut doc = Report::new("deform", base.name.clone(), base.algebra.dim());
        doc.deformation = Some(DeformSection::new(&r, degree));
        json(out, &doc)?;
    } else {
        writeln!(out, "t = 0: index {}", r.index_at_zero)?;
        for (t, i) in &r.samples {
            writeln!(out, "t = {t}: index {i}")?;
        }
        let relation = if r.monotone { "<=" } else { ">" };
        writeln!(out, "generic index {} {relation} index at t = 0", r.generic_index)?;
    }
    Ok(0)
}

fn expect(as_json: bool, seed: u64, samples: usize, out: &mut dyn Write) -> Result<i32> {
    let mut lines = Vec::new();
    for e in expected_results() {
        let entry = construct(e.name, &e.params)?;
        let (outcome, got) = if entry.is_verified() {
            let chi = index::index_of(&entry.algebra)?;
            (if chi == e.index { "pass" } else { "fail" }, chi.to_string())
        } else {
            let raw = raw_index(&entry.algebra, Method::Symbolic, &RandomizedParams::default())?;
            ("flagged", format!("unverified transcription, n - rank = {}", raw.index))
        };
        lines.push(ExpectLine {
            kind: "index",
            source: e.source,
            name: e.name,
            params: params_map(&e.params),
            outcome,
            expected: e.index.to_string(),
            got,
        });
    }
    for e in expected_regular_families() {
        let entry = construct(e.name, &e.params)?;
        let (outcome, got) = if entry.is_verified() {
            let r = verify_family(&entry.algebra, &e.family, samples, seed)?;
            let verdicts: Vec<&str> = r.branches.iter().map(|b| b.verdict.as_str()).collect();
            let ok = r.branches.iter().all(|b| b.verdict == Verdict::Supported);
            (if ok { "pass" } else { "fail" }, verdicts.join(", "))
        } else {
            ("flagged", "unverified transcription".to_string())
        };
        lines.push(ExpectLine {
            kind: "family",
            source: e.source,
            name: e.name,
            params: params_map(&e.params),
            outcome,
            expected: e.family.to_string(),
            got,
        });
    }
    let count = |o: &str| lines.iter().filter(|l| l.outcome == o).count();
    let summary = ExpectSummary {
        schema: SCHEMA,
        command: "expect",
        seed,
        samples,
        passed: count("pass"),
        failed: count("fail"),
        flagged: count("flagged"),
        lines,
    };
    if as_json {
        json(out, &summary)?;
    } else {
        for l in &summary.lines {
            let params: Vec<String> = l.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let label = if params.is_empty() { l.name.to_string() } else { format!("{} {}", l.name, params.join(" ")) };
            let tag = l.outcome.to_uppercase();
            writeln!(out, "{tag:<7} {:<6} {:<15} {label}: expected {}, got {}", l.kind, l.source, l.expected, l.got)?;
        }
        writeln!(
            out,
            "passed {}, failed {}, flagged {} (seed {seed}, {samples} samples per family check)",
            summary.passed, summary.failed, summary.flagged
        )?;
    }
    Ok(if summary.failed == 0 { 0 } else { 1 })
}
