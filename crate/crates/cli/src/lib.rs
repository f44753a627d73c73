//! Command-line front end for `eqhom`.
//!
//! Every subcommand builds a [`ReportDocument`]; `--json` prints it as is,
//! otherwise a plain-text rendering is printed. Exit codes: 0 when every
//! case passes, 1 when some case fails, 2 for invalid usage or a case no
//! known result covers.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use eqhom::confighom::{CoeffSystem, ConfigSpaceSpec, DimensionProvider, Space, Variant};
use eqhom::mapspace::{Family, MapSpaceSpec};
use eqhom::resolution::{
    combi_count, horizontal_euler_closed, horizontal_euler_sum, permutation_oracle,
    phi_poincare_closed, phi_poincare_from_euler, place_choice_counts, HorizontalComplexSpec,
};
use eqhom::series::{expand, stable_range_bound, table_closed_form, DEFAULT_TRUNCATION};
use eqhom::specseq::{
    build_e1_with, default_p_min, degeneration_status, leray_dm_pairs, leray_verify,
    total_poincare, wedge_support_check, Degeneration,
};
use eqhom::verify::{run_all, CaseResult, Criterion, ReportDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `N` accepted by `euler`.
const MAX_EULER_N: usize = 10;
/// Largest `N` for which `euler` also runs the permutation count.
const MAX_EULER_ORACLE_N: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "eqhom", version, about = "Rational cohomology of spaces of equivariant maps between spheres")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Truncation degree for power series.
    #[arg(short = 'T', global = true, default_value_t = DEFAULT_TRUNCATION)]
    pub truncation: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form Poincare series of a mapping space.
    Table {
        #[command(flatten)]
        map: MapArgs,
        /// Also compute the series from the first page and compare.
        #[arg(long)]
        verify: bool,
    },
    /// First page of the spectral sequence of a mapping space.
    E1 {
        #[command(flatten)]
        map: MapArgs,
    },
    /// Euler characteristics of the horizontal complexes for N points.
    Euler { n: usize },
    /// Decorated permutation counts against their closed form.
    Oracle { n: usize },
    /// Graded dimensions of the (co)homology of a configuration space.
    Confighom(ConfigArgs),
    /// Poincare polynomial of the fiber for N points in dimension m.
    Phi { n: usize, m: usize },
    /// Leray spectral sequence check for the evaluation fibration.
    Leray {
        #[command(flatten)]
        map: MapArgs,
    },
    /// Stable range for k polynomials of degree d in n variables.
    StableRange { k: u64, n: u64, d: u64 },
    /// Run every check.
    VerifyAll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    General,
    Even,
    Odd,
    Lens,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    pub family: FamilyArg,
    /// Dimension of the source sphere.
    pub m: u32,
    /// Dimension of the target sphere.
    #[arg(value_name = "M")]
    pub target: u32,
    /// Based maps.
    #[arg(long, conflicts_with = "free")]
    pub based: bool,
    /// Free maps (the default).
    #[arg(long)]
    pub free: bool,
    /// Order of the cyclic group (lens family).
    #[arg(long)]
    pub r: Option<u32>,
    /// Weight of the target action (lens family).
    #[arg(long)]
    pub s: Option<u32>,
}

impl MapArgs {
    fn spec(&self) -> Result<MapSpaceSpec, UsageError> {
        let family = match self.family {
            FamilyArg::General => Family::General,
            FamilyArg::Even => Family::Even,
            FamilyArg::Odd => Family::Odd,
            FamilyArg::Lens => {
                let (Some(r), Some(s)) = (self.r, self.s) else {
                    return Err(UsageError("the lens family needs --r and --s".into()));
                };
                return Ok(MapSpaceSpec::lens(self.m, self.target, r, s, self.based)?);
            }
        };
        if self.r.is_some() || self.s.is_some() {
            return Err(UsageError("--r and --s only apply to the lens family".into()));
        }
        Ok(MapSpaceSpec::new(family, self.m, self.target, self.based)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Euclid,
    Sphere,
    Rp,
    RpPunctured,
    Lens,
    LensPunctured,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("coeff").multiple(false))]
#[command(group = clap::ArgGroup::new("variant").multiple(false))]
pub struct ConfigArgs {
    pub space: SpaceArg,
    /// Dimension of the space.
    pub m: u32,
    /// Number of points.
    pub n: u32,
    /// Order of the cyclic group (lens spaces).
    #[arg(long)]
    pub r: Option<u32>,
    /// Ordered configurations.
    #[arg(long)]
    pub ordered: bool,
    /// Sign coefficients.
    #[arg(long, group = "coeff")]
    pub sign: bool,
    /// Theta-tilde twisted by the sign.
    #[arg(long, group = "coeff")]
    pub theta_sign: bool,
    /// Theta (ordered configurations).
    #[arg(long, group = "coeff")]
    pub theta: bool,
    /// Theta-tilde (unordered configurations).
    #[arg(long, group = "coeff")]
    pub theta_tilde: bool,
    /// Orientation sheaf of the space.
    #[arg(long, group = "coeff")]
    pub or: bool,
    #[arg(long, group = "variant")]
    pub homology: bool,
    /// Cohomology (the default).
    #[arg(long, group = "variant")]
    pub cohomology: bool,
    #[arg(long, group = "variant")]
    pub borel_moore: bool,
}

impl ConfigArgs {
    fn spec(&self) -> Result<ConfigSpaceSpec, UsageError> {
        let lens_order = || {
            self.r
                .ok_or_else(|| UsageError("lens spaces need --r".into()))
        };
        let space = match self.space {
            SpaceArg::Euclid => Space::Euclid,
            SpaceArg::Sphere => Space::Sphere,
            SpaceArg::Rp => Space::ProjSpace,
            SpaceArg::RpPunctured => Space::ProjSpacePunctured,
            SpaceArg::Lens => Space::Lens(lens_order()?),
            SpaceArg::LensPunctured => Space::LensPunctured(lens_order()?),
        };
        if self.r.is_some() && !matches!(space, Space::Lens(_) | Space::LensPunctured(_)) {
            return Err(UsageError("--r only applies to lens spaces".into()));
        }
        let coeff = if self.sign {
            CoeffSystem::Sign
        } else if self.theta_sign {
            CoeffSystem::ThetaTildeSign
        } else if self.theta {
            CoeffSystem::Theta
        } else if self.theta_tilde {
            CoeffSystem::ThetaTilde
        } else if self.or {
            CoeffSystem::Or
        } else {
            CoeffSystem::Const
        };
        let variant = if self.homology {
            Variant::Homology
        } else if self.borel_moore {
            Variant::BorelMoore
        } else {
            Variant::Cohomology
        };
        Ok(ConfigSpaceSpec::new(space, self.m, self.n, self.ordered, coeff, variant)?)
    }
}

/// Anything that should end with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl From<eqhom::Error> for UsageError {
    fn from(e: eqhom::Error) -> Self {
        UsageError(e.to_string())
    }
}

/// A report plus its plain-text rendering.
pub struct Output {
    pub report: ReportDocument,
    pub text: String,
}

fn case(id: impl Into<String>, verdict: bool, routes: impl IntoIterator<Item = (&'static str, Value)>) -> CaseResult {
    CaseResult {
        case_id: id.into(),
        route_values: routes.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        verdict,
    }
}

fn params(pairs: impl IntoIterator<Item = (&'static str, Value)>) -> BTreeMap<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn map_params(spec: &MapSpaceSpec, truncation: usize) -> BTreeMap<String, Value> {
    let mut p = params([
        ("family", json!(spec.family)),
        ("m", json!(spec.source_dim)),
        ("M", json!(spec.target_dim)),
        ("based", json!(spec.based)),
        ("T", json!(truncation)),
    ]);
    if let Some(lens) = spec.lens {
        p.insert("r".into(), json!(lens.r));
        p.insert("s".into(), json!(lens.s));
    }
    p
}

fn verdict_word(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn cmd_table(
    provider: &dyn DimensionProvider,
    map: &MapArgs,
    verify: bool,
    truncation: usize,
) -> Result<Output, UsageError> {
    let spec = map.spec()?;
    let closed_form = table_closed_form(&spec)?;
    let closed = expand(&closed_form, truncation)?;
    let mut routes = vec![
        ("closed_form", json!(closed_form)),
        ("closed_series", json!(closed)),
    ];
    let mut text = String::new();
    writeln!(text, "{:<8} {:>3} {:>3}  {:<6} closed form", "family", "m", "M", "").unwrap();
    writeln!(
        text,
        "{:<8} {:>3} {:>3}  {:<6} {}",
        spec.family.name(),
        spec.source_dim,
        spec.target_dim,
        if spec.based { "based" } else { "free" },
        closed_form
    )
    .unwrap();
    writeln!(text, "expansion: {closed}").unwrap();
    let verdict = if verify {
        let page = build_e1_with(provider, &spec, default_p_min(&spec, truncation))?;
        let e1 = total_poincare(&page, truncation)?;
        let equal = e1 == closed;
        writeln!(text, "first page: {e1}").unwrap();
        writeln!(text, "equal: {equal}").unwrap();
        routes.push(("e1_series", json!(e1)));
        equal
    } else {
        closed.is_nonnegative()
    };
    let report = ReportDocument::new(
        "table",
        map_params(&spec, truncation),
        vec![case(spec.case_id(), verdict, routes)],
    );
    Ok(Output { report, text })
}

fn cmd_e1(provider: &dyn DimensionProvider, map: &MapArgs, truncation: usize) -> Result<Output, UsageError> {
    let spec = map.spec()?;
    let page = build_e1_with(provider, &spec, default_p_min(&spec, truncation))?;
    let series = total_poincare(&page, truncation)?;
    let wedge = wedge_support_check(&page);
    let status = degeneration_status(&page);
    let mut text = format!("{spec}, columns p >= {}\n", page.p_min);
    writeln!(text, "{:>5} {:>5} {:>6}", "p", "q", "dim").unwrap();
    for c in &page.cells {
        writeln!(text, "{:>5} {:>5} {:>6}", c.p, c.q, c.dim).unwrap();
    }
    writeln!(text, "wedge support: {}", verdict_word(wedge)).unwrap();
    writeln!(text, "degeneration: {status:?}").unwrap();
    writeln!(text, "total: {series}").unwrap();
    let routes = [
        ("cells", json!(page.cells)),
        ("origin", json!(page.origin)),
        ("wedge", json!(wedge)),
        ("degeneration", json!(status)),
        ("e1_series", json!(series)),
    ];
    let verdict = wedge && status != Degeneration::Unknown;
    let report = ReportDocument::new(
        "e1",
        map_params(&spec, truncation),
        vec![case(spec.case_id(), verdict, routes)],
    );
    Ok(Output { report, text })
}

fn cmd_euler(n: usize) -> Result<Output, UsageError> {
    if n > MAX_EULER_N {
        return Err(UsageError(format!("N must be at most {MAX_EULER_N}, got {n}")));
    }
    HorizontalComplexSpec::new(n, 0)?;
    let mut text = format!("{:>3} {:>12} {:>12} {:>12}\n", "s", "sum", "closed", "oracle");
    let mut results = Vec::new();
    for s in 0..n / 2 {
        let sum = horizontal_euler_sum(n, s)?;
        let closed = horizontal_euler_closed(n, s)?;
        let oracle = if n <= MAX_EULER_ORACLE_N {
            Some(permutation_oracle(n, s)?)
        } else {
            None
        };
        let verdict = sum == closed && oracle.map_or(true, |o| o == closed);
        let shown = oracle.map_or("-".to_string(), |o| o.to_string());
        writeln!(text, "{s:>3} {sum:>12} {closed:>12} {shown:>12}  {}", verdict_word(verdict)).unwrap();
        let mut routes = vec![("sum_route", json!(sum)), ("closed_route", json!(closed))];
        if let Some(o) = oracle {
            routes.push(("oracle_route", json!(o)));
        }
        results.push(case(format!("N={n:02}/s={s}"), verdict, routes));
    }
    let report = ReportDocument::new("euler", params([("N", json!(n))]), results);
    Ok(Output { report, text })
}

fn cmd_oracle(n: usize) -> Result<Output, UsageError> {
    let counts = place_choice_counts(n)?;
    let mut text = format!("{:<20} {:>12} {:>12}\n", "places", "enumerated", "closed");
    let mut results = Vec::new();
    for (places, count) in counts {
        let closed = combi_count(n, &places)?;
        let verdict = closed == count;
        let label = format!("{places:?}");
        writeln!(text, "{label:<20} {count:>12} {closed:>12}  {}", verdict_word(verdict)).unwrap();
        results.push(case(
            format!("N={n:02}/places={label}"),
            verdict,
            [("enumerated", json!(count)), ("closed", json!(closed))],
        ));
    }
    let report = ReportDocument::new("oracle", params([("N", json!(n))]), results);
    Ok(Output { report, text })
}

fn cmd_confighom(provider: &dyn DimensionProvider, args: &ConfigArgs) -> Result<Output, UsageError> {
    let spec = args.spec()?;
    let cited = provider.dims(&spec)?;
    let mut text = format!("{}\n", cited.dims);
    writeln!(text, "{spec}: {}", cited.statement).unwrap();
    if cited.extension {
        writeln!(text, "note: extends the statement beyond its stated range").unwrap();
    }
    let routes = [
        ("dims", json!(cited.dims)),
        ("statement", json!(cited.statement)),
        ("extension", json!(cited.extension)),
    ];
    let report = ReportDocument::new(
        "confighom",
        params([("spec", json!(spec))]),
        vec![case(spec.to_string(), true, routes)],
    );
    Ok(Output { report, text })
}

fn cmd_phi(n: usize, m: usize) -> Result<Output, UsageError> {
    let closed = phi_poincare_closed(n, m)?;
    let from_euler = phi_poincare_from_euler(n, m)?;
    let factorial: i64 = (1..n as i64).product();
    let verdict = closed == from_euler && closed.eval_one() == factorial;
    let text = format!(
        "closed:     {closed}\nfrom euler: {from_euler}\ncoefficient sum: {} (expected {factorial})  {}\n",
        closed.eval_one(),
        verdict_word(verdict)
    );
    let report = ReportDocument::new(
        "phi",
        params([("N", json!(n)), ("m", json!(m))]),
        vec![case(
            format!("N={n}/m={m}"),
            verdict,
            [
                ("closed", json!(closed.to_string())),
                ("from_euler", json!(from_euler.to_string())),
                ("coefficient_sum", json!(closed.eval_one())),
            ],
        )],
    );
    Ok(Output { report, text })
}

fn cmd_leray(map: &MapArgs, truncation: usize) -> Result<Output, UsageError> {
    let spec = map.spec()?;
    let pairs = leray_dm_pairs(&spec)?;
    let fiber = table_closed_form(&spec.as_based())?;
    let total = table_closed_form(&spec)?;
    let (verdict, outcome) = match leray_verify(&fiber, spec.target_dim, &pairs, &total, truncation) {
        Ok(equal) => (equal, json!(equal)),
        Err(e) => (false, json!(e.to_string())),
    };
    let text = format!(
        "fiber: {fiber}\ntotal: {total}\nd^M pairs at q = {:?}\nconsistent: {outcome}\n",
        pairs.q_values(truncation as u64)
    );
    let report = ReportDocument::new(
        "leray",
        map_params(&spec, truncation),
        vec![case(
            spec.case_id(),
            verdict,
            [
                ("fiber", json!(fiber)),
                ("total", json!(total)),
                ("pairs", json!(pairs)),
                ("verified", outcome),
            ],
        )],
    );
    Ok(Output { report, text })
}

fn cmd_stable_range(k: u64, n: u64, d: u64) -> Result<Output, UsageError> {
    let bound = stable_range_bound(k, n, d)?;
    let report = ReportDocument::new(
        "stable-range",
        params([("k", json!(k)), ("n", json!(n)), ("d", json!(d))]),
        vec![case(format!("k={k}/n={n}/d={d}"), true, [("bound", json!(bound))])],
    );
    Ok(Output { report, text: format!("{bound}\n") })
}

fn cmd_verify_all(provider: &dyn DimensionProvider, truncation: usize) -> Output {
    let report = run_all(provider, truncation);
    let mut text = String::new();
    for c in Criterion::ALL {
        let prefix = format!("c{}/", c.number());
        let (total, passed) = report
            .results
            .iter()
            .filter(|r| r.case_id.starts_with(&prefix))
            .fold((0, 0), |(t, p), r| (t + 1, p + r.verdict as usize));
        let word = if total == passed { "PASS" } else { "FAIL" };
        writeln!(text, "{word} {}: {} ({passed}/{total})", c.number(), c.title()).unwrap();
    }
    for f in report.failures() {
        writeln!(text, "failed case {}", f.case_id).unwrap();
    }
    let s = report.summary;
    writeln!(text, "checked {}, passed {}, failed {}", s.checked, s.passed, s.failed).unwrap();
    Output { report, text }
}

/// Runs a parsed command.
pub fn execute(cli: &Cli, provider: &dyn DimensionProvider) -> Result<Output, UsageError> {
    let t = cli.truncation;
    match &cli.command {
        Command::Table { map, verify } => cmd_table(provider, map, *verify, t),
        Command::E1 { map } => cmd_e1(provider, map, t),
        Command::Euler { n } => cmd_euler(*n),
        Command::Oracle { n } => cmd_oracle(*n),
        Command::Confighom(args) => cmd_confighom(provider, args),
        Command::Phi { n, m } => cmd_phi(*n, *m),
        Command::Leray { map } => cmd_leray(map, t),
        Command::StableRange { k, n, d } => cmd_stable_range(*k, *n, *d),
        Command::VerifyAll => Ok(cmd_verify_all(provider, t)),
    }
}

/// Parses `args` (program name first), runs the command against `provider`
/// and returns the exit code.
pub fn run_with<I, S>(args: I, provider: &dyn DimensionProvider, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(&cli, provider) {
        Ok(output) => {
            let written = if cli.json {
                serde_json::to_writer_pretty(&mut *out, &output.report)
                    .map_err(std::io::Error::from)
                    .and_then(|()| writeln!(out))
            } else {
                write!(out, "{}", output.text)
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            if output.report.all_passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use eqhom::confighom::Catalog;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("eqhom").chain(args.iter().copied());
        let code = run_with(argv, &Catalog, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn table_prints_closed_form_and_expansion() {
        let (code, out, _) = run(&["table", "even", "1", "3", "--free", "-T", "10"]);
        assert_eq!(code, 0);
        assert!(out.contains("(1 + t^3)/(1 - t^2)"), "{out}");
    }

    #[test]
    fn table_rejects_m_not_below_target() {
        let (code, _, err) = run(&["table", "even", "3", "2"]);
        assert_eq!(code, EXIT_USAGE, "{err}");
    }

    #[test]
    fn lens_needs_r_and_s() {
        assert_eq!(run(&["table", "lens", "1", "3"]).0, EXIT_USAGE);
        assert_eq!(run(&["table", "lens", "1", "3", "--r", "3", "--s", "1"]).0, EXIT_OK);
        assert_eq!(run(&["table", "odd", "1", "3", "--r", "3"]).0, EXIT_USAGE);
    }

    #[test]
    fn based_and_free_conflict() {
        assert_eq!(run(&["table", "odd", "1", "3", "--based", "--free"]).0, EXIT_USAGE);
    }

    #[test]
    fn coefficient_flags_are_exclusive() {
        assert_eq!(run(&["confighom", "rp", "3", "2", "--sign", "--theta-sign"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify-all"));
    }

    #[test]
    fn leray_rejects_based_maps() {
        assert_eq!(run(&["leray", "even", "1", "3", "--based"]).0, EXIT_USAGE);
        assert_eq!(run(&["leray", "even", "1", "3"]).0, EXIT_OK);
    }
}
