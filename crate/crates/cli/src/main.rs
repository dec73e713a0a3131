use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gkz_core::exponents::{minimal_negative_support, multiplicity_lower_bound, smallest_in_class};
use gkz_core::problem::{supports_from_one_based, Prepared, Problem};
use gkz_core::rational::parse_q;
use gkz_core::series::{
    frobenius_method1, frobenius_method1_extra, frobenius_method2, method1_condition,
    method2_condition, phi_series,
};
use gkz_core::{arrangement, io, verifier, Error};
use serde_json::{json, Value};

mod render;

#[derive(Parser)]
#[command(
    name = "gkz",
    version,
    about = "Exact logarithmic series solutions of A-hypergeometric systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Problem file (JSON).
    problem: PathBuf,
    /// Gale box radius for enumeration and certification.
    #[arg(long)]
    radius: Option<i64>,
    /// Truncation weight, an exact rational such as 20 or 41/2.
    #[arg(long = "weight-cap")]
    weight_cap: Option<String>,
    /// Largest derivative order enumerated when none is requested.
    #[arg(long = "s-degree")]
    s_degree: Option<u32>,
    /// JSON list of 1-based index sets replacing NS.
    #[arg(long = "restrict-ns")]
    restrict_ns: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// 1-based index into the fake exponent list.
    #[arg(long)]
    exponent: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Kernel lattice basis and Gale covectors.
    Lattice(Common),
    /// Generators of the toric ideal.
    Toric(Common),
    /// Reduced Gröbner basis for w, initial ideal and the cone C(w).
    Groebner(Common),
    /// Standard pairs of the initial ideal.
    StandardPairs(Common),
    /// Fake exponents with minimal-negative-support flags.
    FakeExponents(Common),
    /// NS_w(v), its complement and the method parameters.
    NsClasses(Common),
    /// The logarithm-free series of an exponent with minimal support.
    Phi(Common),
    /// Single-direction perturbation series.
    Frobenius1 {
        #[command(flatten)]
        common: Common,
        /// Derivative order j; all admissible orders when omitted.
        #[arg(long)]
        order: Option<u32>,
    },
    /// The extra solution from a sum over several directions.
    Frobenius1Combo(Common),
    /// Multi-direction perturbation series.
    Frobenius2 {
        #[command(flatten)]
        common: Common,
        /// Multi-degree p as a comma list; all admissible when omitted.
        #[arg(long, value_delimiter = ',')]
        degree: Option<Vec<u32>>,
    },
    /// Applies the system to a series file and reports residuals.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Series or solution document to check.
        #[arg(long)]
        series: PathBuf,
    },
    /// The Gale-dual hyperplane arrangement of an exponent.
    Arrangement(Common),
}

enum Failure {
    /// Bad arguments or unreadable input.
    Usage(String, String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage("io".into(), format!("{}: {e}", path.display())))
}

fn load(c: &Common) -> Result<Prepared, Failure> {
    let mut problem = Problem::from_json(&read(&c.problem)?).map_err(|e| match e {
        Error::Parse(m) => Failure::Usage("parse".into(), format!("{}: {m}", c.problem.display())),
        other => Failure::Domain(other),
    })?;
    if let Some(r) = c.radius {
        if r < 0 {
            return Err(Failure::Usage(
                "usage".into(),
                "--radius must be nonnegative".into(),
            ));
        }
        problem.options.radius = r;
    }
    if let Some(w) = &c.weight_cap {
        problem.options.weight_cap =
            parse_q(w).map_err(|e| Failure::Usage("usage".into(), format!("--weight-cap: {e}")))?;
    }
    if let Some(d) = c.s_degree {
        problem.options.s_degree = Some(d);
    }
    if let Some(path) = &c.restrict_ns {
        let sets: Vec<Vec<usize>> = serde_json::from_str(&read(path)?)
            .map_err(|e| Failure::Usage("parse".into(), format!("{}: {e}", path.display())))?;
        problem.n_restriction = Some(supports_from_one_based(&sets, problem.a.ncols())?);
    }
    Ok(problem.prepare()?)
}

/// Exponent selection problems are usage errors.
fn pick(p: &Prepared, c: &Common) -> Result<Vec<gkz_core::rational::Q>, Failure> {
    p.exponent(c.exponent).map_err(|e| match e {
        Error::Parse(m) => Failure::Usage("usage".into(), m),
        other => Failure::Domain(other),
    })
}

fn finish(c: &Common, value: Value, text: impl FnOnce() -> String, pass: bool) -> Outcome {
    let body = match c.format {
        Format::Json => render::json_text(&value),
        Format::Text => text(),
        Format::Svg => {
            return Err(Failure::Usage(
                "usage".into(),
                "--format svg is only available for arrangement".into(),
            ))
        }
    };
    Ok((body, pass))
}

fn run(cmd: &Command) -> Outcome {
    match cmd {
        Command::Lattice(c) => {
            let p = load(c)?;
            finish(c, render::lattice(&p), || render::lattice_text(&p), true)
        }
        Command::Toric(c) => {
            let p = load(c)?;
            finish(c, render::toric(&p), || render::toric_text(&p), true)
        }
        Command::Groebner(c) => {
            let p = load(c)?;
            finish(c, render::groebner(&p), || render::groebner_text(&p), true)
        }
        Command::StandardPairs(c) => {
            let p = load(c)?;
            finish(
                c,
                render::standard_pairs(&p),
                || render::standard_pairs_text(&p),
                true,
            )
        }
        Command::FakeExponents(c) => {
            let p = load(c)?;
            let least = smallest_in_class(&p.exponents, &p.basis, &p.problem.w);
            let flags: Vec<_> = p
                .exponents
                .iter()
                .map(|e| minimal_negative_support(&e.v, &p.basis, p.problem.options.radius))
                .collect();
            finish(
                c,
                render::fake_exponents(&p, &flags, &least),
                || render::fake_exponents_text(&p, &flags, &least),
                true,
            )
        }
        Command::NsClasses(c) => {
            let p = load(c)?;
            let v = pick(&p, c)?;
            let cls = p.classes(&v)?;
            let bound =
                multiplicity_lower_bound(&cls.params, p.problem.a.ncols(), p.problem.a.nrows());
            finish(
                c,
                render::classes(&cls, bound.as_ref()),
                || render::classes_text(&cls, bound.as_ref()),
                true,
            )
        }
        Command::Phi(c) => {
            let p = load(c)?;
            let v = pick(&p, c)?;
            let s = phi_series(&v, &p.cone, &p.problem.options.window())?;
            let sols = vec![(json!({}), s)];
            finish(
                c,
                render::solutions(&v, json!({}), &sols),
                || render::solutions_text(&sols),
                true,
            )
        }
        Command::Frobenius1 { common: c, order } => {
            let p = load(c)?;
            let v = pick(&p, c)?;
            let cls = p.classes(&v)?;
            let b = p.direction(&cls.params.i0)?;
            let win = p.problem.options.window();
            let orders: Vec<u32> = match order {
                Some(j) => vec![*j],
                None => {
                    let top = match cls.params.big_m {
                        Some(big_m) => (big_m - cls.params.m) as u32,
                        None => p.problem.options.s_degree.map_or(1, |d| d + 1),
                    };
                    let cap = p.problem.options.s_degree.map_or(top, |d| top.min(d + 1));
                    (0..cap).collect()
                }
            };
            let mut sols = Vec::new();
            for j in orders {
                let s = frobenius_method1(&v, &b, &cls, &p.cone, j, &win)?;
                sols.push((json!({ "order": j }), s));
            }
            let meta = json!({ "direction": b, "parameters": render::params(&cls.params) });
            finish(
                c,
                render::solutions(&v, meta, &sols),
                || render::solutions_text(&sols),
                true,
            )
        }
        Command::Frobenius1Combo(c) => {
            let p = load(c)?;
            let v = pick(&p, c)?;
            let cls = p.classes(&v)?;
            let bs = p.problem.b_vectors.clone().ok_or_else(|| {
                Failure::Usage(
                    "usage".into(),
                    "frobenius1-combo needs b_vectors in the problem".into(),
                )
            })?;
            let cert = method1_condition(&bs, &cls)?;
            let s = frobenius_method1_extra(&v, &bs, &cls, &p.cone, &p.problem.options.window())?;
            let order = cls.params.big_m.unwrap_or(0) - cls.params.m;
            let sols = vec![(json!({ "order": order }), s)];
            let meta = json!({
                "directions": bs,
                "parameters": render::params(&cls.params),
                "certificate": render::certificate(&cert),
            });
            finish(
                c,
                render::solutions(&v, meta, &sols),
                || render::solutions_text(&sols),
                true,
            )
        }
        Command::Frobenius2 { common: c, degree } => {
            let p = load(c)?;
            let v = pick(&p, c)?;
            let cls = p.classes(&v)?;
            let bs = p.b_vectors();
            let win = p.problem.options.window();
            let top = cls.params.big_m.map(|m| m - cls.params.k.len());
            let degrees: Vec<Vec<u32>> = match degree {
                Some(d) => vec![d.clone()],
                None => {
                    let bound = match (top, p.problem.options.s_degree) {
                        (Some(t), Some(d)) => t.min(d as usize),
                        (Some(t), None) => t,
                        (None, d) => d.unwrap_or(0) as usize,
                    };
                    let mut out = Vec::new();
                    for p_vec in render::multi_degrees(bs.len(), bound as u32) {
                        let total: usize = p_vec.iter().map(|&x| x as usize).sum();
                        if Some(total) == top && !method2_condition(&bs, &cls, &p_vec)?.all_zero() {
                            continue;
                        }
                        out.push(p_vec);
                    }
                    out
                }
            };
            let mut sols = Vec::new();
            for d in degrees {
                let s = frobenius_method2(&v, &bs, &cls, &p.cone, &d, &win)?;
                let total: usize = d.iter().map(|&x| x as usize).sum();
                let cond = if Some(total) == top {
                    render::certificate(&method2_condition(&bs, &cls, &d)?)
                } else {
                    Value::Null
                };
                sols.push((json!({ "degree": d, "condition": cond }), s));
            }
            let meta = json!({ "directions": bs, "parameters": render::params(&cls.params) });
            finish(
                c,
                render::solutions(&v, meta, &sols),
                || render::solutions_text(&sols),
                true,
            )
        }
        Command::Verify { common: c, series } => {
            let p = load(c)?;
            let list = io::series_list_from_json(&read(series)?).map_err(|e| {
                Failure::Usage("parse".into(), format!("{}: {e}", series.display()))
            })?;
            let system = p.system();
            let reports: Vec<_> = list.iter().map(|s| verifier::verify(s, &system)).collect();
            let pass = reports.iter().all(|r| r.pass());
            finish(
                c,
                render::reports(&reports),
                || render::reports_text(&reports),
                pass,
            )
        }
        Command::Arrangement(c) => {
            let p = load(c)?;
            let v = pick(&p, c)?;
            let r = p.problem.options.radius;
            if c.format == Format::Svg {
                return Ok((arrangement::arrangement_svg(&v, &p.basis, r)?, true));
            }
            let faces = arrangement::faces(&v, &p.basis, r)?;
            let hs = arrangement::hyperplanes(&v, &p.basis);
            finish(
                c,
                render::arrangement(&v, &hs, &faces),
                || render::arrangement_text(&hs, &faces),
                true,
            )
        }
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Lattice(c)
        | Command::Toric(c)
        | Command::Groebner(c)
        | Command::StandardPairs(c)
        | Command::FakeExponents(c)
        | Command::NsClasses(c)
        | Command::Phi(c)
        | Command::Frobenius1Combo(c)
        | Command::Arrangement(c) => c,
        Command::Frobenius1 { common, .. }
        | Command::Frobenius2 { common, .. }
        | Command::Verify { common, .. } => common,
    }
}

fn report_error(kind: &str, message: &str) {
    let v = json!({ "error": { "kind": kind, "message": message } });
    eprintln!("{}", render::json_text(&v).trim_end());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            report_error("usage", e.to_string().trim_end());
            return ExitCode::from(2);
        }
    };
    match run(&cli.command) {
        Ok((body, pass)) => {
            let c = common(&cli.command);
            if let Some(path) = &c.output {
                if let Err(e) = std::fs::write(path, &body) {
                    report_error("io", &format!("{}: {e}", path.display()));
                    return ExitCode::from(2);
                }
            } else {
                print!("{body}");
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(kind, m)) => {
            report_error(&kind, &m);
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            report_error(e.kind(), &e.to_string());
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subcommand_names() {
        use clap::CommandFactory;
        let names: Vec<String> = Cli::command()
            .get_subcommands()
            .map(|s| s.get_name().to_string())
            .collect();
        assert_eq!(
            names,
            [
                "lattice",
                "toric",
                "groebner",
                "standard-pairs",
                "fake-exponents",
                "ns-classes",
                "phi",
                "frobenius1",
                "frobenius1-combo",
                "frobenius2",
                "verify",
                "arrangement"
            ]
        );
    }
}
