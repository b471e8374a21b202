pub mod export;
pub mod suite;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use haff::cutproject::{deficiencies_2d, min_distance_compare_2d, sigma_2d};
use haff::fragment::{generate_with_cap, DEFAULT_CAP};
use haff::lineanalysis::{
    deficiencies_1d, levels, line_closed_form, line_level, min_distance_compare, mn_nn, sigma_1d,
    Window1D,
};
use haff::{Error, GroupId};
use serde_json::json;

use crate::suite::{Suite, SuiteConfig, CHECKS, DEFAULT_COEFF_BOUND};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "haff", version, about = "Affine H2/H3/H4 fragments and their cut-and-project comparisons")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    A2,
    H2,
    H3,
    H4,
}

impl From<Group> for GroupId {
    fn from(g: Group) -> Self {
        match g {
            Group::A2 => GroupId::A2,
            Group::H2 => GroupId::H2,
            Group::H3 => GroupId::H3,
            Group::H4 => GroupId::H4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a fragment and write its points
    Generate {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Scale Cartesian output so roots have unit length
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        normalize: bool,
        /// Abort when the fragment grows past this many points
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Run the verification suite and write a JSON report
    Verify {
        /// Run a single check by name
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = DEFAULT_COEFF_BOUND)]
        coeff_bound: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Line sets with level annotations, 1D deficiencies and (M_n, N_n)
    Line {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare an H2 fragment with the decagonal cut-and-project set
    Compare {
        #[arg(long, value_enum, default_value = "h2")]
        group: Group,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedGroup { .. } | Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Run(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Output goes to `--out` or `stdout`; messages to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Run(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn with_output<F>(out: Option<PathBuf>, stdout: &mut dyn Write, body: F) -> Result<(), Failure>
where
    F: FnOnce(&mut dyn Write) -> Result<(), Failure>,
{
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(&path)?);
            body(&mut w)?;
            w.flush()?;
        }
        None => {
            body(stdout)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn write_json(w: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *w, value)?;
    writeln!(w)?;
    Ok(())
}

fn dispatch(cmd: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Generate {
            group,
            n,
            format,
            out,
            normalize,
            cap,
        } => {
            let group = GroupId::from(group);
            if group == GroupId::A2 {
                return Err(Failure::Usage("generate supports h2, h3 and h4".into()));
            }
            if format == Format::Svg && group != GroupId::H2 {
                return Err(Failure::Usage("svg output is available for h2 only".into()));
            }
            let f = generate_with_cap(group, n, cap)?;
            with_output(out, stdout, |w| match format {
                Format::Csv => Ok(export::write_csv(&f, normalize, w)?),
                Format::Json => write_json(w, &export::fragment_doc(&f, normalize)),
                Format::Svg => Ok(w.write_all(export::fragment_svg(&f, normalize)?.as_bytes())?),
            })?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            only,
            coeff_bound,
            out,
        } => {
            let mut suite = Suite::new(SuiteConfig {
                coeff_bound,
                ..SuiteConfig::default()
            });
            let results = match only {
                Some(name) => match suite.run(&name) {
                    Some(r) => vec![r],
                    None => {
                        return Err(Failure::Usage(format!(
                            "unknown check {name:?}; known checks: {}",
                            CHECKS.join(", ")
                        )))
                    }
                },
                None => suite.run_all(),
            };
            let passed = results.iter().all(|r| r.passed);
            for r in &results {
                writeln!(stderr, "{}", r.line())?;
            }
            let report = json!({
                "passed": passed,
                "coeff_bound": coeff_bound,
                "checks": results,
            });
            with_output(out, stdout, |w| write_json(w, &report))?;
            Ok(if passed { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Line { n, format, out } => {
            if n == 0 {
                return Err(Failure::Usage("line needs n >= 1".into()));
            }
            if format == Format::Svg {
                return Err(Failure::Usage("line writes json or csv".into()));
            }
            with_output(out, stdout, |w| line_report(n, format, w))?;
            Ok(EXIT_OK)
        }
        Command::Compare {
            group,
            n,
            format,
            out,
        } => {
            if GroupId::from(group) != GroupId::H2 {
                return Err(Failure::Usage("compare is defined for h2 only".into()));
            }
            if n == 0 {
                return Err(Failure::Usage("compare needs n >= 1".into()));
            }
            if format == Format::Svg {
                return Err(Failure::Usage("compare writes json or csv".into()));
            }
            with_output(out, stdout, |w| compare_report(n, format, w))?;
            Ok(EXIT_OK)
        }
    }
}

fn line_report(n: u32, format: Format, w: &mut dyn Write) -> Result<(), Failure> {
    let line = line_closed_form(n);
    let win = Window1D::symmetric(n as i64);
    let sigma = sigma_1d(win, win);
    let deficiencies = deficiencies_1d(n);
    let (m_n, n_n) = mn_nn(n)?;
    if format == Format::Csv {
        // one row per point of L(n) ∪ Sigma, flagged
        let mut csv = csv::Writer::from_writer(w);
        csv.write_record(["a", "b", "value", "display", "level", "in_line", "in_sigma", "deficiency"])?;
        let mut all: Vec<_> = line.values.iter().chain(&sigma).copied().collect();
        all.sort();
        all.dedup();
        for x in all {
            csv.write_record([
                x.a.to_string(),
                x.b.to_string(),
                format!("{:.12}", x.to_f64()),
                x.to_string(),
                line_level(x).to_string(),
                line.contains(x).to_string(),
                sigma.binary_search(&x).is_ok().to_string(),
                deficiencies.contains(&x).to_string(),
            ])?;
        }
        csv.flush()?;
        return Ok(());
    }
    let d = min_distance_compare(n)?;
    let point = |x: &haff::GoldenInt| {
        json!({ "a": x.a, "b": x.b, "display": x.to_string(), "value": x.to_f64(), "level": line_level(*x) })
    };
    let report = json!({
        "n": n,
        "levels": levels(n).into_iter().map(|(m, pts)| json!({
            "level": m,
            "points": pts.iter().map(point).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "line": line.values.iter().map(point).collect::<Vec<_>>(),
        "sigma": sigma.iter().map(point).collect::<Vec<_>>(),
        "deficiencies": deficiencies.iter().map(point).collect::<Vec<_>>(),
        "m_n": m_n,
        "n_n": n_n,
        "min_distance": { "line": d.d_line, "sigma": d.d_sigma, "ok": d.ok },
    });
    write_json(w, &report)
}

fn compare_report(n: u32, format: Format, w: &mut dyn Write) -> Result<(), Failure> {
    let fragment = haff::fragment::generate(GroupId::H2, n)?;
    let sigma = sigma_2d(n)?;
    let deficiencies = deficiencies_2d(n)?;
    let point = |x: &haff::CycloInt| {
        let (re, im) = x.embed();
        json!({
            "p": [x.p.a, x.p.b],
            "q": [x.q.a, x.q.b],
            "display": x.to_string(),
            "x": re,
            "y": im,
        })
    };
    if format == Format::Csv {
        let mut csv = csv::Writer::from_writer(w);
        csv.write_record(["p1", "p2", "q1", "q2", "x", "y"])?;
        for x in &deficiencies {
            let (re, im) = x.embed();
            csv.write_record([
                x.p.a.to_string(),
                x.p.b.to_string(),
                x.q.a.to_string(),
                x.q.b.to_string(),
                format!("{re:.12}"),
                format!("{im:.12}"),
            ])?;
        }
        csv.flush()?;
        return Ok(());
    }
    let d = min_distance_compare_2d(n)?;
    let report = json!({
        "group": GroupId::H2.name(),
        "n": n,
        "fragment_points": fragment.len(),
        "sigma_points": sigma.len(),
        "deficiencies": deficiencies.iter().map(point).collect::<Vec<_>>(),
        "min_distance": { "fragment": d.d_fragment, "sigma": d.d_sigma, "ok": d.ok },
    });
    write_json(w, &report)
}
