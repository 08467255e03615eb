//! Command-line front end. [`dispatch`] parses an argument vector, runs the
//! command and returns the exit code with the text to print.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! errors (bad arguments, malformed input, caps exceeded).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::coeffs::{Ring, Scalar};
use crate::duality::{equivariance_counterexample, pairing_image, EntryMatrix, Which};
use crate::error::{Error, Result};
use crate::places::{CellSet, check_row_pair};
use crate::powers::{rsym, Element, Space, SymLowerElement};
use crate::render::{self, Format};
use crate::report::{Check, InstanceReport, VerificationReport};
use crate::schur::{garnir, polytabloid, verify_schur_ses};
use crate::tableaux::{count_column_standard, count_row_semistandard, enumerate, Partition, Tableau, TableauClass};
use crate::weyl::{
    copolytabloid, dual_garnir, dual_garnir_dc, dual_snake, straighten, variant_relation, verify_dual_garnir_kernel,
    verify_weyl_kernel, weyl_basis, Variant,
};

/// Default caps; `WEYLKIT_MAX_SIZE` replaces both size caps.
pub const ELEMENT_MAX_SIZE: usize = 8;
pub const ELEMENT_MAX_ENTRIES: u32 = 9;
pub const SWEEP_MAX_SIZE: usize = 5;
pub const SWEEP_MAX_ENTRIES: u32 = 3;
pub const MAX_SIZE_ENV: &str = "WEYLKIT_MAX_SIZE";

#[derive(Parser, Debug)]
#[command(name = "weylkit", version, about = "Exact Schur and Weyl functor computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
struct Common {
    /// z, q or zmod:N
    #[arg(long, default_value = "z", global = true)]
    ring: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Json, global = true)]
    format: FormatArg,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Json,
    Text,
    Latex,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MapArg {
    E,
    Lambda,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VariantArg {
    Star,
    StarStar,
}

#[derive(clap::Args, Debug, Clone)]
struct TableauArgs {
    /// JSON rows such as '[[1,1],[2,2]]', or '{"shape":[..],"rows":[..]}'.
    #[arg(long)]
    tableau: String,
    /// Optional shape the tableau must have, e.g. 2,2.
    #[arg(long)]
    shape: Option<String>,
}

#[derive(clap::Args, Debug, Clone)]
struct InstanceArgs {
    /// Partition, e.g. 2,1.
    #[arg(long)]
    shape: String,
    /// Alphabet size m (entries 1..=m).
    #[arg(long)]
    entries: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Semistandard copolytabloids, or the tableaux of one class.
    Basis {
        #[command(flatten)]
        instance: InstanceArgs,
        /// all, rssyt, csyt or ssyt; lists tableaux instead of copolytabloids.
        #[arg(long)]
        class: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Row symmetrisation of a tableau, as a tensor.
    Rsym {
        #[command(flatten)]
        tableau: TableauArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Polytabloid e(t) in Sym^λ.
    Polytabloid {
        #[command(flatten)]
        tableau: TableauArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Copolytabloid Λ(rsym(t)) in Λ^{λ'}.
    Copolytabloid {
        #[command(flatten)]
        tableau: TableauArgs,
        #[arg(long)]
        entries: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Garnir relation for boxes A, B in two columns.
    Garnir {
        #[command(flatten)]
        tableau: TableauArgs,
        #[arg(long = "boxA")]
        box_a: String,
        #[arg(long = "boxB")]
        box_b: String,
        #[command(flatten)]
        common: Common,
    },
    /// Dual Garnir relation for boxes A, B in two rows.
    DualGarnir {
        #[command(flatten)]
        tableau: TableauArgs,
        /// Rows of A and B, e.g. 1:2.
        #[arg(long)]
        rows: Option<String>,
        #[arg(long = "boxA")]
        box_a: String,
        #[arg(long = "boxB")]
        box_b: String,
        /// Compute one of the unweighted sums instead.
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        /// Use the brute-force double coset form.
        #[arg(long)]
        double_cosets: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Dual snake relation (t, i, j, j').
    Snake {
        #[command(flatten)]
        tableau: TableauArgs,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long = "jp")]
        jp: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Straighten rsym(t), or a Sym_λ element given as JSON.
    Straighten {
        #[arg(long)]
        tableau: Option<String>,
        /// A sym_lower element in JSON form.
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        entries: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Check GR = ker e and rank(im e) = |SSYT|.
    SchurVerify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Check that the dual snakes span ker Λ and Λ kills every dual Garnir relation.
    WeylVerify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Check that pairing with row tabloid duals gives the copolytabloids.
    DualityCheck {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Check that Λ or e commutes with a matrix acting on entries.
    Equivariance {
        #[command(flatten)]
        instance: InstanceArgs,
        /// JSON matrix, e.g. '[[0,1],[1,0]]'; column b is the image of b.
        #[arg(long)]
        matrix: String,
        #[arg(long, value_enum)]
        map: MapArg,
        #[command(flatten)]
        common: Common,
    },
    /// Counts of semistandard, row semistandard and column standard tableaux.
    Dims {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Basis { common, .. }
            | Command::Rsym { common, .. }
            | Command::Polytabloid { common, .. }
            | Command::Copolytabloid { common, .. }
            | Command::Garnir { common, .. }
            | Command::DualGarnir { common, .. }
            | Command::Snake { common, .. }
            | Command::Straighten { common, .. }
            | Command::SchurVerify { common, .. }
            | Command::WeylVerify { common, .. }
            | Command::DualityCheck { common, .. }
            | Command::Equivariance { common, .. }
            | Command::Dims { common, .. } => common,
        }
    }
}

/// Parsed and validated run settings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub ring: Ring,
    pub format: Format,
    pub jobs: Option<usize>,
    pub output: Option<PathBuf>,
    pub element_max_size: usize,
    pub sweep_max_size: usize,
}

impl RunConfig {
    fn from_common(c: &Common, env_max: Option<String>) -> Result<RunConfig> {
        let ring: Ring = c.ring.parse()?;
        let format = match c.format {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
            FormatArg::Latex => Format::Latex,
        };
        let (mut element_max_size, mut sweep_max_size) = (ELEMENT_MAX_SIZE, SWEEP_MAX_SIZE);
        if let Some(v) = env_max {
            let n: usize = v.trim().parse().map_err(|_| Error::Parse(format!("{MAX_SIZE_ENV}={v:?} is not a size")))?;
            element_max_size = n;
            sweep_max_size = n;
        }
        if c.jobs == Some(0) {
            return Err(Error::Parse("--jobs must be positive".into()));
        }
        Ok(RunConfig { ring, format, jobs: c.jobs, output: c.output.clone(), element_max_size, sweep_max_size })
    }

    fn check_element(&self, shape: &Partition, m: u32) -> Result<()> {
        if shape.size() > self.element_max_size {
            return Err(Error::CapExceeded(format!("|λ| = {} > {} (set {MAX_SIZE_ENV} to raise)", shape.size(), self.element_max_size)));
        }
        if m > ELEMENT_MAX_ENTRIES {
            return Err(Error::CapExceeded(format!("m = {m} > {ELEMENT_MAX_ENTRIES}")));
        }
        Ok(())
    }

    fn check_sweep(&self, shape: &Partition, m: u32) -> Result<()> {
        if shape.size() > self.sweep_max_size {
            return Err(Error::CapExceeded(format!("|λ| = {} > {} for sweeps (set {MAX_SIZE_ENV} to raise)", shape.size(), self.sweep_max_size)));
        }
        if m == 0 {
            return Err(Error::Parse("--entries must be positive".into()));
        }
        if m > SWEEP_MAX_ENTRIES {
            return Err(Error::CapExceeded(format!("m = {m} > {SWEEP_MAX_ENTRIES} for sweeps")));
        }
        Ok(())
    }
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Outcome {
        Outcome { code: 2, stdout: String::new(), stderr: message }
    }
}

/// Runs `argv` (including the program name) with `WEYLKIT_MAX_SIZE` read
/// from the environment.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    dispatch_with(argv, std::env::var(MAX_SIZE_ENV).ok())
}

/// Like [`dispatch`] with an explicit value for `WEYLKIT_MAX_SIZE`.
pub fn dispatch_with<I, T>(argv: I, max_size: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let config = match RunConfig::from_common(cli.command.common(), max_size) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let result = match config.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(&cli.command, &config)),
            Err(e) => Err(Error::Parse(e.to_string())),
        },
        None => run(&cli.command, &config),
    };
    match result {
        Ok((ok, mut text)) => {
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let code = if ok { 0 } else { 1 };
            match &config.output {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
                    Err(e) => Outcome::usage(format!("error: cannot write {}: {e}\n", path.display())),
                },
                None => Outcome { code, stdout: text, stderr: String::new() },
            }
        }
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

fn parse_tableau(s: &str) -> Result<Tableau> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::InvalidTableau(format!("malformed tableau JSON: {e}")))?;
    match v {
        Value::Array(_) => {
            let rows: Vec<Vec<u32>> =
                serde_json::from_value(v).map_err(|e| Error::InvalidTableau(format!("malformed tableau JSON: {e}")))?;
            Tableau::from_rows(rows)
        }
        _ => serde_json::from_value(v).map_err(|e| Error::InvalidTableau(format!("malformed tableau JSON: {e}"))),
    }
}

fn tableau_arg(args: &TableauArgs, config: &RunConfig) -> Result<Tableau> {
    let t = parse_tableau(&args.tableau)?;
    check_shape(&t, args.shape.as_deref())?;
    config.check_element(t.shape(), t.max_entry())?;
    Ok(t)
}

fn check_shape(t: &Tableau, shape: Option<&str>) -> Result<()> {
    if let Some(s) = shape {
        let shape: Partition = s.parse()?;
        if &shape != t.shape() {
            return Err(Error::InvalidTableau(format!("tableau has shape {}, expected {shape}", t.shape())));
        }
    }
    Ok(())
}

fn instance(args: &InstanceArgs) -> Result<(Partition, u32)> {
    Ok((args.shape.parse()?, args.entries))
}

fn element_out<S: Space>(x: &Element<S>, config: &RunConfig) -> Result<Element<S>> {
    if x.ring() == config.ring {
        Ok(x.clone())
    } else {
        x.change_ring(config.ring)
    }
}

fn emit<S: Space>(x: &Element<S>, config: &RunConfig) -> Result<(bool, String)> {
    Ok((true, render::render(&element_out(x, config)?, config.format)))
}

fn emit_report(report: &VerificationReport, config: &RunConfig) -> Result<(bool, String)> {
    let text = match config.format {
        Format::Json => to_json(report),
        Format::Text => report_text(report),
        Format::Latex => return Err(Error::Parse("latex output is only available for elements".into())),
    };
    Ok((report.ok, text))
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable")
}

fn report_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    for inst in &report.instances {
        let _ = writeln!(out, "{} λ={} m={} ring={}", if inst.ok { "ok  " } else { "FAIL" }, inst.shape, inst.entries, inst.ring);
        for c in &inst.checks {
            let _ = write!(out, "  {} {}", if c.passed { "pass" } else { "FAIL" }, c.name);
            if let Some(d) = &c.detail {
                let _ = write!(out, ": {d}");
            }
            out.push('\n');
            if let Some(v) = &c.counterexample {
                let _ = writeln!(out, "    counterexample: {v}");
            }
        }
    }
    let _ = writeln!(out, "{}", if report.ok { "all checks passed" } else { "some checks failed" });
    out
}

fn run(command: &Command, config: &RunConfig) -> Result<(bool, String)> {
    let start = Instant::now();
    let elapsed = || start.elapsed().as_millis();
    match command {
        Command::Dims { instance: args, .. } => {
            let (shape, m) = instance(args)?;
            config.check_element(&shape, m)?;
            let dims = json!({
                "ssyt": enumerate(&shape, m, TableauClass::Semistandard).len(),
                "rssyt": count_row_semistandard(&shape, m) as u64,
                "csyt": count_column_standard(&shape, m) as u64,
            });
            let text = match config.format {
                Format::Json => dims.to_string(),
                _ => format!("ssyt {}\nrssyt {}\ncsyt {}", dims["ssyt"], dims["rssyt"], dims["csyt"]),
            };
            Ok((true, text))
        }
        Command::Basis { instance: args, class, .. } => {
            let (shape, m) = instance(args)?;
            config.check_element(&shape, m)?;
            match class {
                Some(c) => {
                    let class: TableauClass = c.parse()?;
                    let list = enumerate(&shape, m, class);
                    let text = match config.format {
                        Format::Json => serde_json::to_string(&list).expect("serializable"),
                        Format::Text => list.iter().map(Tableau::short).collect::<Vec<_>>().join("\n"),
                        Format::Latex => list.iter().map(render::ytableau).collect::<Vec<_>>().join("\n"),
                    };
                    Ok((true, text))
                }
                None => {
                    let mut entries = Vec::new();
                    let mut lines = Vec::new();
                    for (s, c) in weyl_basis(&shape, m) {
                        let c = element_out(&c, config)?;
                        lines.push(match config.format {
                            Format::Latex => format!("{} & {}", render::ytableau(&s), render::latex(&c)),
                            _ => format!("{}: {}", s.short(), render::text(&c)),
                        });
                        entries.push(json!({ "tableau": s, "copolytabloid": c }));
                    }
                    let text = match config.format {
                        Format::Json => serde_json::to_string(&entries).expect("serializable"),
                        _ => lines.join("\n"),
                    };
                    Ok((true, text))
                }
            }
        }
        Command::Rsym { tableau, .. } => emit(&rsym(&tableau_arg(tableau, config)?), config),
        Command::Polytabloid { tableau, .. } => emit(&polytabloid(&tableau_arg(tableau, config)?), config),
        Command::Copolytabloid { tableau, entries, .. } => {
            let t = tableau_arg(tableau, config)?;
            if let Some(m) = entries {
                if t.max_entry() > *m {
                    return Err(Error::InvalidTableau(format!("entry {} exceeds --entries {m}", t.max_entry())));
                }
            }
            emit(&copolytabloid(&t), config)
        }
        Command::Garnir { tableau, box_a, box_b, .. } => {
            let t = tableau_arg(tableau, config)?;
            let rel = garnir(&t, &box_a.parse()?, &box_b.parse()?)?;
            emit(&rel.element, config)
        }
        Command::DualGarnir { tableau, rows, box_a, box_b, variant, double_cosets, .. } => {
            let t = tableau_arg(tableau, config)?;
            let (a, b): (CellSet, CellSet) = (box_a.parse()?, box_b.parse()?);
            if let Some(r) = rows {
                check_rows(r, &t, &a, &b)?;
            }
            let rel = match (variant, double_cosets) {
                (Some(_), true) => return Err(Error::Parse("--variant and --double-cosets are exclusive".into())),
                (Some(VariantArg::Star), _) => variant_relation(&t, &a, &b, Variant::Star)?,
                (Some(VariantArg::StarStar), _) => variant_relation(&t, &a, &b, Variant::StarStar)?,
                (None, true) => dual_garnir_dc(&t, &a, &b)?,
                (None, false) => dual_garnir(&t, &a, &b)?,
            };
            emit(&rel.element, config)
        }
        Command::Snake { tableau, i, j, jp, .. } => {
            let t = tableau_arg(tableau, config)?;
            emit(&dual_snake(&t, *i, *j, *jp)?.element, config)
        }
        Command::Straighten { tableau, element, shape, entries, .. } => {
            let x = match (tableau, element) {
                (Some(t), None) => {
                    let t = parse_tableau(t)?;
                    check_shape(&t, shape.as_deref())?;
                    SymLowerElement::basis(config.ring, &t)
                }
                (None, Some(e)) => {
                    let x: SymLowerElement = render::parse_in(e, config.ring)?;
                    if x.ring() == config.ring { x } else { x.change_ring(config.ring)? }
                }
                _ => return Err(Error::Parse("give exactly one of --tableau and --element".into())),
            };
            if let Some(t) = x.labels().next() {
                config.check_element(t.shape(), entries.unwrap_or(0).max(x.labels().map(Tableau::max_entry).max().unwrap_or(0)))?;
                if let Some(m) = entries {
                    if x.labels().any(|t| t.max_entry() > *m) {
                        return Err(Error::InvalidTableau(format!("entries exceed --entries {m}")));
                    }
                }
            }
            let cert = straighten(&x)?;
            let text = match config.format {
                Format::Json => to_json(&cert),
                Format::Text => {
                    let mut s = format!("input: {}\ncoords: {}\n", render::text(&cert.input), render::text(&cert.coords));
                    for (label, c) in &cert.gamma {
                        let _ = writeln!(s, "gamma {label}: {c}");
                    }
                    s
                }
                Format::Latex => render::latex(&cert.coords),
            };
            Ok((true, text))
        }
        Command::SchurVerify { instance: args, .. } => {
            let (shape, m) = instance(args)?;
            config.check_sweep(&shape, m)?;
            let report = verify_schur_ses(&shape, m, config.ring)?;
            emit_report(&VerificationReport::new("schur-verify", vec![report], elapsed()), config)
        }
        Command::WeylVerify { instance: args, .. } => {
            let (shape, m) = instance(args)?;
            config.check_sweep(&shape, m)?;
            let mut report = verify_weyl_kernel(&shape, m, config.ring)?;
            for c in verify_dual_garnir_kernel(&shape, m, config.ring)?.checks {
                report.push(c);
            }
            emit_report(&VerificationReport::new("weyl-verify", vec![report], elapsed()), config)
        }
        Command::DualityCheck { instance: args, .. } => {
            let (shape, m) = instance(args)?;
            config.check_sweep(&shape, m)?;
            let mut report = InstanceReport::new(&shape, m, config.ring);
            let rssyt = enumerate(&shape, m, TableauClass::RowSemistandard);
            report.dims.insert("rssyt".into(), rssyt.len() as u64);
            let bad = rssyt.iter().find(|t| pairing_image(t, m) != copolytabloid(t));
            report.push(Check::from_search(
                "pairing_image_equals_copolytabloid",
                bad.map(|t| json!({ "tableau": t, "pairing_image": pairing_image(t, m), "copolytabloid": copolytabloid(t) })),
            ));
            emit_report(&VerificationReport::new("duality-check", vec![report], elapsed()), config)
        }
        Command::Equivariance { instance: args, matrix, map, .. } => {
            let (shape, m) = instance(args)?;
            config.check_sweep(&shape, m)?;
            let g = parse_matrix(matrix, config.ring)?;
            let which = match map {
                MapArg::E => Which::PolytabloidMap,
                MapArg::Lambda => Which::LambdaMap,
            };
            let mut report = InstanceReport::new(&shape, m, config.ring);
            let bad = equivariance_counterexample(&shape, m, &g, which)?;
            let name = match which {
                Which::LambdaMap => "lambda_commutes_with_matrix",
                Which::PolytabloidMap => "e_commutes_with_matrix",
            };
            report.push(Check::from_search(name, bad.map(|t| json!({ "label": t, "matrix": g }))));
            emit_report(&VerificationReport::new("equivariance", vec![report], elapsed()), config)
        }
    }
}

fn check_rows(arg: &str, t: &Tableau, a: &CellSet, b: &CellSet) -> Result<()> {
    let parts: Vec<&str> = arg.split(':').collect();
    let parsed: Vec<usize> = parts.iter().map(|p| p.trim().parse::<usize>()).collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse(format!("--rows expects i:i', got {arg:?}")))?;
    let [i, i2] = parsed[..] else {
        return Err(Error::Parse(format!("--rows expects i:i', got {arg:?}")));
    };
    match check_row_pair(t.shape(), a, b)? {
        Some(rows) if rows == (i, i2) => Ok(()),
        _ => Err(Error::InvalidBoxSet(format!("A and B do not lie in rows {i} and {i2}"))),
    }
}

fn parse_matrix(s: &str, ring: Ring) -> Result<EntryMatrix> {
    let v: Vec<Vec<Value>> = serde_json::from_str(s).map_err(|e| Error::InvalidMatrix(format!("malformed matrix JSON: {e}")))?;
    let rows = v
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| match x {
                    Value::Number(n) => ring.parse_scalar(&n.to_string()),
                    Value::String(s) => ring.parse_scalar(s),
                    other => Err(Error::InvalidMatrix(format!("bad entry {other}"))),
                })
                .collect::<Result<Vec<Scalar>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    EntryMatrix::new(ring, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_reports_exit_with_one() {
        let mut inst = InstanceReport::new(&Partition::new(vec![1]).unwrap(), 1, Ring::Integers);
        inst.push(Check::fail("demo", json!({ "label": "replay me" })));
        let report = VerificationReport::new("demo", vec![inst], 0);
        let config = RunConfig::from_common(
            &Common { ring: "z".into(), format: FormatArg::Json, jobs: None, output: None },
            None,
        )
        .unwrap();
        let (ok, text) = emit_report(&report, &config).unwrap();
        assert!(!ok);
        assert!(text.contains("replay me"));
    }
}
