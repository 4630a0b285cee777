//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a dimension mismatches or a suite fails,
//! 2 for usage and configuration errors.

mod args;
pub mod parse;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::Parser;
use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{
    check_representatives, cohomology_at, cohomology_table, WeightWindow, ALIGNMENT_SHIFTS,
};
use crate::complexes::{ComplexRegistry, VariantParams};
use crate::error::Error;
use crate::poly::BiPoly;
use crate::suites::{CorollarySuite, Suite, SuiteContext, SuiteOutcome, SuiteRegistry};

pub use args::{Cli, Command, CommonArgs, Format, NRange, Range, VariantSelection};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Resolved configuration, echoed in JSON reports. The job count is left
/// out so that reports do not depend on it.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub variant: VariantSelection,
    pub n: Vec<u32>,
    pub weights: Range,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<i64>,
    pub seed: u64,
    pub format: Format,
    pub phi: Vec<String>,
    #[serde(skip)]
    pub jobs: usize,
    #[serde(skip)]
    phi_polys: Vec<BiPoly>,
}

impl RunConfig {
    pub fn from_command(command: &Command) -> Self {
        let a: &CommonArgs = command.args();
        let default_n = match command {
            Command::Verify(_) => vec![2, 3, 4, 5],
            _ => vec![2],
        };
        RunConfig {
            command: command.name(),
            variant: a.variant.unwrap_or(VariantSelection::Log),
            n: a.n.clone().map_or(default_n, |r| r.0),
            weights: a.weights,
            k: a.k,
            w: a.w,
            seed: a.seed,
            format: a.format,
            phi: a.phi.iter().map(|p| p.source.clone()).collect(),
            jobs: a.jobs,
            phi_polys: a.phi.iter().map(|p| p.poly.clone()).collect(),
        }
    }

    fn window(&self) -> Result<WeightWindow, Failure> {
        Ok(WeightWindow::new(self.weights.min, self.weights.max)?)
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidN(_)
            | Error::Syntax { .. }
            | Error::UnknownVariable { .. }
            | Error::InvalidWindow { .. }
            | Error::UnknownVariant(_)
            | Error::MissingParameter(..)
            | Error::NotHomogeneous(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

struct Output {
    text: String,
    ok: bool,
}

/// Parses `args` (including the program name) and runs the command with
/// the given registries, writing the report to `out` and diagnostics to
/// `err`. Returns the exit code.
pub fn run_with<I, T>(
    args: I,
    complexes: &ComplexRegistry,
    suites: &SuiteRegistry,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let config = RunConfig::from_command(&cli.command);
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(
                err,
                "error: cannot start {} worker threads: {e}",
                config.jobs
            );
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| match &cli.command {
        Command::Dims(_) => cmd_dims(&config, complexes),
        Command::Verify(_) => cmd_verify(&config, complexes, suites),
        Command::Reps(_) => cmd_reps(&config, complexes),
        Command::Bench(_) => cmd_bench(&config, complexes),
    });
    match result {
        Ok(output) => {
            if out.write_all(output.text.as_bytes()).is_err() {
                return EXIT_FAILURE;
            }
            if output.ok {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Runs with the default registries on the process arguments and streams.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(
        std::env::args_os(),
        &ComplexRegistry::with_defaults(),
        &SuiteRegistry::with_defaults(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryCell {
    #[serde(rename = "logW")]
    pub log_w: i64,
    #[serde(rename = "logDimH")]
    pub log_dim_h: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimRow {
    pub variant: String,
    pub n: u32,
    pub k: usize,
    pub w: i64,
    #[serde(rename = "dimZ")]
    pub dim_z: usize,
    #[serde(rename = "dimB")]
    pub dim_b: usize,
    #[serde(rename = "dimH")]
    pub dim_h: usize,
    pub predicted: Option<usize>,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corollary: Option<CorollaryCell>,
}

impl DimRow {
    fn passed(&self) -> bool {
        self.matches && self.corollary.as_ref().is_none_or(|c| c.matches)
    }
}

#[derive(Serialize)]
struct Report<'a, R: Serialize> {
    config: &'a RunConfig,
    rows: Vec<R>,
    suites: Vec<SuiteOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    representatives: Option<Vec<RepRow>>,
}

fn to_json<R: Serialize>(report: &Report<R>) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn dim_rows(
    config: &RunConfig,
    complexes: &ComplexRegistry,
    window: WeightWindow,
) -> Result<Vec<DimRow>, Failure> {
    let degrees: Vec<usize> = config.k.map_or((0..=3).collect(), |k| vec![k]);
    let window = match config.w {
        Some(w) => WeightWindow::new(w, w)?,
        None => window,
    };
    let compare = config.variant == VariantSelection::Both;
    let mut rows = Vec::new();
    for &n in &config.n {
        let log = complexes.build("log", &VariantParams::with_n(n))?;
        for name in config.variant.names() {
            let complex = complexes.build(name, &VariantParams::with_n(n))?;
            let table = cohomology_table(complex.as_ref(), &degrees, window)?;
            let corollary: Vec<Option<CorollaryCell>> = table
                .par_iter()
                .map(|r| {
                    if !compare || *name != "classical" {
                        return Ok(None);
                    }
                    let log_w = r.w + ALIGNMENT_SHIFTS.get(r.k).copied().unwrap_or(0);
                    let log_dim_h = cohomology_at(log.as_ref(), r.k, log_w, false)?.dim_h;
                    Ok(Some(CorollaryCell {
                        log_w,
                        log_dim_h,
                        matches: log_dim_h == r.dim_h,
                    }))
                })
                .collect::<Result<_, Error>>()?;
            rows.extend(
                table
                    .into_iter()
                    .zip(corollary)
                    .map(|(r, corollary)| DimRow {
                        variant: name.to_string(),
                        n,
                        k: r.k,
                        w: r.w,
                        dim_z: r.dim_z,
                        dim_b: r.dim_b,
                        dim_h: r.dim_h,
                        predicted: r.predicted,
                        matches: r.matches,
                        corollary,
                    }),
            );
        }
    }
    Ok(rows)
}

fn dim_headers(compare: bool) -> Vec<&'static str> {
    let mut h = vec![
        "variant",
        "n",
        "k",
        "w",
        "dimZ",
        "dimB",
        "dimH",
        "predicted",
        "match",
    ];
    if compare {
        h.extend(["logW", "logDimH", "corollary"]);
    }
    h
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn dim_cells(rows: &[DimRow], compare: bool) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| {
            let mut cells = vec![
                r.variant.clone(),
                r.n.to_string(),
                r.k.to_string(),
                r.w.to_string(),
                r.dim_z.to_string(),
                r.dim_b.to_string(),
                r.dim_h.to_string(),
                r.predicted.map_or(String::new(), |p| p.to_string()),
                yes_no(r.matches),
            ];
            if compare {
                match &r.corollary {
                    Some(c) => cells.extend([
                        c.log_w.to_string(),
                        c.log_dim_h.to_string(),
                        yes_no(c.matches),
                    ]),
                    None => cells.extend([String::new(), String::new(), String::new()]),
                }
            }
            cells
        })
        .collect()
}

fn suite_lines(suites: &[SuiteOutcome]) -> String {
    let mut s = String::new();
    for o in suites {
        let status = if o.pass { "PASS" } else { "FAIL" };
        s.push_str(&format!("{status}  {}  ({} checks)\n", o.name, o.checked));
        if let Some(c) = &o.counterexample {
            let label = if o.pass { "note" } else { "counterexample" };
            s.push_str(&format!("      {label}: {c}\n"));
        }
    }
    s
}

fn suite_cells(suites: &[SuiteOutcome]) -> Vec<Vec<String>> {
    suites
        .iter()
        .map(|o| {
            vec![
                o.name.clone(),
                o.pass.to_string(),
                o.counterexample.clone().unwrap_or_default(),
            ]
        })
        .collect()
}

fn row_summary(rows: &[DimRow]) -> String {
    let bad = rows.iter().filter(|r| !r.passed()).count();
    if bad == 0 {
        format!("{} rows, all match\n", rows.len())
    } else {
        format!("{} rows, {bad} mismatched\n", rows.len())
    }
}

fn corollary_outcomes(
    config: &RunConfig,
    complexes: &ComplexRegistry,
    window: WeightWindow,
) -> Result<Vec<SuiteOutcome>, Failure> {
    let suite = CorollarySuite;
    config
        .n
        .iter()
        .map(|&n| {
            let ctx = SuiteContext {
                n,
                seed: config.seed,
                window,
                complexes,
                phis: &config.phi_polys,
            };
            let mut o = suite.run(&ctx)?;
            o.name = format!("{}[n={n}]", suite.name());
            Ok(o)
        })
        .collect()
}

fn cmd_dims(config: &RunConfig, complexes: &ComplexRegistry) -> Result<Output, Failure> {
    let window = config.window()?;
    let rows = dim_rows(config, complexes, window)?;
    let compare = config.variant == VariantSelection::Both;
    let suites = if compare {
        corollary_outcomes(config, complexes, window)?
    } else {
        Vec::new()
    };
    let ok = rows.iter().all(DimRow::passed) && suites.iter().all(|s| s.pass);
    let text = match config.format {
        Format::Json => to_json(&Report {
            config,
            rows,
            suites,
            representatives: None,
        }),
        Format::Csv => {
            render::csv(&dim_headers(compare), &dim_cells(&rows, compare)).map_err(|e| Failure {
                code: EXIT_FAILURE,
                message: e.to_string(),
            })?
        }
        Format::Table => {
            let mut s = render::table(&dim_headers(compare), &dim_cells(&rows, compare), 1);
            s.push_str(&suite_lines(&suites));
            s.push_str(&row_summary(&rows));
            s
        }
    };
    Ok(Output { text, ok })
}

fn cmd_verify(
    config: &RunConfig,
    complexes: &ComplexRegistry,
    suites: &SuiteRegistry,
) -> Result<Output, Failure> {
    let window = config.window()?;
    let mut outcomes = suites.run_all(&config.n, config.seed, window, complexes, &config.phi_polys);
    let rows = match dim_rows(config, complexes, window) {
        Ok(rows) => rows,
        Err(f) if f.code == EXIT_FAILURE => {
            outcomes.push(SuiteOutcome::failed_with("dimensions", f.message));
            Vec::new()
        }
        Err(f) => return Err(f),
    };
    let ok = rows.iter().all(DimRow::passed) && outcomes.iter().all(|o| o.pass);
    let text = match config.format {
        Format::Json => to_json(&Report {
            config,
            rows,
            suites: outcomes,
            representatives: None,
        }),
        Format::Csv => render::csv(&["name", "pass", "counterexample"], &suite_cells(&outcomes))
            .map_err(|e| Failure {
                code: EXIT_FAILURE,
                message: e.to_string(),
            })?,
        Format::Table => {
            let mut s = suite_lines(&outcomes);
            let passed = outcomes.iter().filter(|o| o.pass).count();
            s.push_str(&format!("{passed}/{} suites passed\n", outcomes.len()));
            s.push_str(&format!("dimensions: {}", row_summary(&rows)));
            for r in rows.iter().filter(|r| !r.passed()) {
                s.push_str(&format!(
                    "      mismatch: {} n={} H^{} at w = {}: dim {} vs predicted {:?}\n",
                    r.variant, r.n, r.k, r.w, r.dim_h, r.predicted
                ));
            }
            s
        }
    };
    Ok(Output { text, ok })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepRow {
    pub variant: String,
    pub n: u32,
    pub k: usize,
    pub w: i64,
    pub element: String,
    pub cocycle: bool,
    #[serde(rename = "nonCoboundary")]
    pub non_coboundary: bool,
}

fn cmd_reps(config: &RunConfig, complexes: &ComplexRegistry) -> Result<Output, Failure> {
    let k = config.k.unwrap_or(1);
    let w = config.w.unwrap_or(0);
    if k > 2 {
        return Err(Failure {
            code: EXIT_USAGE,
            message: format!("H^{k} = 0: the complexes have no cochains above degree 2"),
        });
    }
    let mut rows = Vec::new();
    let mut reps = Vec::new();
    let mut text = String::new();
    for &n in &config.n {
        for name in config.variant.names() {
            let complex = complexes.build(name, &VariantParams::with_n(n))?;
            let report = cohomology_at(complex.as_ref(), k, w, true)?;
            text.push_str(&format!(
                "H^{k} of {} at w = {w}: dim {} (Z {}, B {})\n",
                complex.label(),
                report.dim_h,
                report.dim_z,
                report.dim_b
            ));
            let checked = check_representatives(complex.as_ref(), &report)?;
            let cells: Vec<Vec<String>> = checked
                .iter()
                .map(|(e, c, nc)| {
                    let mark = |b: bool| if b { "✓" } else { "✗" };
                    vec![
                        format!("  {e}"),
                        format!("cocycle {}", mark(*c)),
                        format!("non-coboundary {}", mark(*nc)),
                    ]
                })
                .collect();
            if !cells.is_empty() {
                let t = render::table(&["", "", ""], &cells, 3);
                text.push_str(t.split_once('\n').map_or("", |(_, rest)| rest));
            }
            reps.extend(
                checked
                    .into_iter()
                    .map(|(e, cocycle, non_coboundary)| RepRow {
                        variant: name.to_string(),
                        n,
                        k,
                        w,
                        element: e.to_string(),
                        cocycle,
                        non_coboundary,
                    }),
            );
            rows.push(DimRow {
                variant: name.to_string(),
                n,
                k,
                w,
                dim_z: report.dim_z,
                dim_b: report.dim_b,
                dim_h: report.dim_h,
                predicted: report.predicted,
                matches: report.matches,
                corollary: None,
            });
        }
    }
    let ok = rows.iter().all(DimRow::passed) && reps.iter().all(|r| r.cocycle && r.non_coboundary);
    let text = match config.format {
        Format::Table => text,
        Format::Json => to_json(&Report {
            config,
            rows,
            suites: Vec::new(),
            representatives: Some(reps),
        }),
        Format::Csv => {
            let cells: Vec<Vec<String>> = reps
                .iter()
                .map(|r| {
                    vec![
                        r.variant.clone(),
                        r.n.to_string(),
                        r.k.to_string(),
                        r.w.to_string(),
                        r.element.clone(),
                        r.cocycle.to_string(),
                        r.non_coboundary.to_string(),
                    ]
                })
                .collect();
            render::csv(
                &[
                    "variant",
                    "n",
                    "k",
                    "w",
                    "element",
                    "cocycle",
                    "nonCoboundary",
                ],
                &cells,
            )
            .map_err(|e| Failure {
                code: EXIT_FAILURE,
                message: e.to_string(),
            })?
        }
    };
    Ok(Output { text, ok })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub variant: String,
    pub n: u32,
    pub w: i64,
    /// `dim H⁰, dim H¹, dim H²`.
    #[serde(rename = "dimH")]
    pub dim_h: [usize; 3],
    #[serde(rename = "match")]
    pub matches: bool,
    pub micros: u128,
}

fn cmd_bench(config: &RunConfig, complexes: &ComplexRegistry) -> Result<Output, Failure> {
    let mut built = Vec::new();
    for &n in &config.n {
        for name in config.variant.names() {
            built.push((*name, n, complexes.build(name, &VariantParams::with_n(n))?));
        }
    }
    let cells: Vec<(usize, i64)> = (0..built.len())
        .flat_map(|i| (config.weights.min..=config.weights.max).map(move |w| (i, w)))
        .collect();
    let rows = cells
        .par_iter()
        .map(|(i, w)| {
            let (name, n, complex) = &built[*i];
            let start = Instant::now();
            let mut dim_h = [0; 3];
            let mut matches = true;
            for (k, d) in dim_h.iter_mut().enumerate() {
                let r = cohomology_at(complex.as_ref(), k, *w, false)?;
                *d = r.dim_h;
                matches &= r.matches;
            }
            Ok(BenchRow {
                variant: name.to_string(),
                n: *n,
                w: *w,
                dim_h,
                matches,
                micros: start.elapsed().as_micros(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let ok = rows.iter().all(|r| r.matches);
    let headers = [
        "variant", "n", "w", "dimH0", "dimH1", "dimH2", "match", "micros",
    ];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.variant.clone(),
                r.n.to_string(),
                r.w.to_string(),
                r.dim_h[0].to_string(),
                r.dim_h[1].to_string(),
                r.dim_h[2].to_string(),
                yes_no(r.matches),
                r.micros.to_string(),
            ]
        })
        .collect();
    let text = match config.format {
        Format::Json => to_json(&Report {
            config,
            rows,
            suites: Vec::new(),
            representatives: None,
        }),
        Format::Csv => render::csv(&headers, &cells).map_err(|e| Failure {
            code: EXIT_FAILURE,
            message: e.to_string(),
        })?,
        Format::Table => render::table(&headers, &cells, 1),
    };
    Ok(Output { text, ok })
}
