//! `coxsp`: batch front end for the coxsp crates.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxsp_core::{parse_system, Ball, BallError, CoxeterSystem, GroupElement, GroupOps, DEFAULT_MAX_ELEMENTS};
use coxsp_diagram::{
    decide_gradient_sp, hecke_interface_set, is_hyperbolic_right_angled, is_small_at_infinity, to_dot, Decision,
    Reason, Verdict,
};
use coxsp_gamma::{gamma_lp_norm, gamma_table, gamma_table_in, GammaError};
use coxsp_hecke::{
    hecke_multiply, hecke_s2_norm, psi_hecke, psi_hecke_defining, HeckeElement, HeckeError, HeckeParams,
};
use coxsp_length::{classify_parabolic, parse_weights, LengthSpec};
use coxsp_spectral::{psi_group_matrix, schatten_norm_matrix, spectral_gap_check, SpectralError};
use num_traits::ToPrimitive;

use report::{fmt_f64, fmt_q, Out};

const AFTER_HELP: &str = "\
Words are 1-based generator indices separated by spaces, dots or commas; `e` is the identity.
The ball cap defaults to 1000000 elements; COXSP_MAX_ELEMENTS or --max-elements override it.
Exit codes: 0 ok, 1 usage, 2 parse error, 3 resource cap.";

#[derive(Parser, Debug)]
#[command(name = "coxsp", version, about = "Coxeter group combinatorics, gamma tables and Hecke algebra checks", after_help = AFTER_HELP)]
struct Cli {
    /// Largest Cayley ball to enumerate.
    #[arg(long, global = true, env = "COXSP_MAX_ELEMENTS", default_value_t = DEFAULT_MAX_ELEMENTS)]
    max_elements: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verdicts and numeric summaries for a system.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        spec: SpecArgs,
        /// Radius of the numeric sections.
        #[arg(long, default_value_t = 4)]
        radius: usize,
        /// Hecke parameters, one per generator; adds S_2 sums.
        #[arg(long)]
        q: Option<String>,
    },
    /// Normal form and length of a word.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Gamma table and its l_p norms.
    Gamma {
        file: PathBuf,
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 6)]
        radius: usize,
        /// Norm exponent, repeatable; `inf` allowed.
        #[arg(long = "p")]
        p: Vec<String>,
    },
    /// Hecke products, Psi values or S_2 sums.
    Hecke {
        file: PathBuf,
        /// Hecke parameters, one per generator.
        #[arg(long)]
        q: String,
        /// Left factor of a product T_a T_b.
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        /// Generator u for Psi.
        #[arg(long)]
        u: Option<usize>,
        #[arg(long)]
        w: Option<usize>,
        /// Evaluate Psi at T_v instead of summing over the ball.
        #[arg(long)]
        v: Option<String>,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 6)]
        radius: usize,
    },
    /// Schatten norms of the truncated multiplier.
    Schatten {
        file: PathBuf,
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 6)]
        radius: usize,
        #[arg(long = "p")]
        p: Vec<String>,
    },
    /// Graphviz text of the labeled diagram.
    Dot { file: PathBuf },
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long)]
    u: String,
    #[arg(long)]
    w: String,
}

#[derive(Args, Debug)]
struct SpecArgs {
    /// Generator weights, e.g. `1,0,1/2`; word length if absent.
    #[arg(long)]
    weights: Option<String>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Parse(String),
    Cap(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Cap(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Cap(m) => m,
        }
    }
}

fn gamma_is_cap(e: &GammaError) -> bool {
    matches!(e, GammaError::Ball(_))
}

fn spectral_is_cap(e: &SpectralError) -> bool {
    match e {
        SpectralError::Ball(_) | SpectralError::TooLarge { .. } => true,
        SpectralError::Gamma(g) => gamma_is_cap(g),
        _ => false,
    }
}

fn hecke_is_cap(e: &HeckeError) -> bool {
    match e {
        HeckeError::Ball(_) => true,
        HeckeError::Gamma(g) => gamma_is_cap(g),
        HeckeError::Spectral(s) => spectral_is_cap(s),
        _ => false,
    }
}

fn fail(cap: bool, e: impl std::fmt::Display) -> CliError {
    if cap {
        CliError::Cap(e.to_string())
    } else {
        CliError::Usage(e.to_string())
    }
}

impl From<BallError> for CliError {
    fn from(e: BallError) -> Self {
        CliError::Cap(e.to_string())
    }
}

impl From<GammaError> for CliError {
    fn from(e: GammaError) -> Self {
        fail(gamma_is_cap(&e), e)
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        fail(spectral_is_cap(&e), e)
    }
}

impl From<HeckeError> for CliError {
    fn from(e: HeckeError) -> Self {
        fail(hecke_is_cap(&e), e)
    }
}

fn load(file: &PathBuf) -> Result<CoxeterSystem, CliError> {
    let text = std::fs::read_to_string(file).map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
    parse_system(&text)
        .map(|p| p.system)
        .map_err(|e| CliError::Parse(format!("{}: {e}", file.display())))
}

fn parse_word(system: &CoxeterSystem, s: &str) -> Result<GroupElement, CliError> {
    let mut letters = Vec::new();
    for tok in s.split(|c: char| c.is_whitespace() || c == '.' || c == ',').filter(|t| !t.is_empty()) {
        if tok == "e" {
            continue;
        }
        let i: usize = tok.parse().map_err(|_| CliError::Usage(format!("bad letter `{tok}`")))?;
        if i == 0 || i > system.rank() {
            return Err(CliError::Usage(format!("letter {i} out of range 1..={}", system.rank())));
        }
        letters.push(i - 1);
    }
    Ok(system.element(&letters))
}

fn parse_generator(system: &CoxeterSystem, i: usize) -> Result<usize, CliError> {
    if i == 0 || i > system.rank() {
        return Err(CliError::Usage(format!("generator {i} out of range 1..={}", system.rank())));
    }
    Ok(i - 1)
}

fn parse_spec(system: &CoxeterSystem, args: &SpecArgs) -> Result<LengthSpec, CliError> {
    let spec = match &args.weights {
        None => LengthSpec::standard(system.rank()),
        Some(w) => LengthSpec::weighted(parse_weights(w).map_err(|e| CliError::Usage(e.to_string()))?),
    };
    spec.validate(system).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(spec)
}

fn parse_params(system: &CoxeterSystem, q: &str) -> Result<HeckeParams, CliError> {
    let q = parse_weights(q).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(HeckeParams::new(system, q)?)
}

fn parse_ps(ps: &[String]) -> Result<Vec<(String, f64)>, CliError> {
    let ps = if ps.is_empty() { vec!["2".to_string()] } else { ps.to_vec() };
    ps.iter()
        .map(|p| {
            let v = if p == "inf" { f64::INFINITY } else { p.parse().map_err(|_| CliError::Usage(format!("bad exponent `{p}`")))? };
            if v < 1.0 {
                return Err(CliError::Usage(format!("exponent {p} below 1")));
            }
            Ok((p.clone(), v))
        })
        .collect()
}

fn gen_name(i: usize) -> String {
    format!("s{}", i + 1)
}

fn basis(d: &Decision) -> &'static str {
    match d.reason {
        Reason::NoCommutingTriple | Reason::CommutingTriple { .. } => "commuting-triple criterion",
        Reason::NoCyclicParityPath | Reason::CyclicAvoidingTwo(_) => "parity-path characterization",
        Reason::CyclicOnlyThroughTwo(_) => "blocked: cyclic parity paths all meet a label 2",
    }
}

fn witness(d: &Decision) -> String {
    match &d.reason {
        Reason::NoCommutingTriple => "no commuting triple".into(),
        Reason::CommutingTriple { r, s, t } => format!("{}; {}, {}", gen_name(*r), gen_name(*s), gen_name(*t)),
        Reason::NoCyclicParityPath => "forest certificate".into(),
        Reason::CyclicAvoidingTwo(p) | Reason::CyclicOnlyThroughTwo(p) => p.to_string(),
    }
}

fn decision(out: &mut Out, key: &str, d: &Decision) {
    out.field(key, d.verdict);
    out.field(&format!("{key}.basis"), basis(d));
    out.field(&format!("{key}.witness"), witness(d));
    out.field(&format!("{key}.rationale"), &d.rationale);
}

fn analyze(
    out: &mut Out,
    system: &CoxeterSystem,
    spec: &LengthSpec,
    radius: usize,
    q: Option<&str>,
    cap: usize,
) -> Result<(), CliError> {
    let n = system.rank();
    let all: Vec<usize> = (0..n).collect();
    out.field("rank", n);
    out.field("names", (0..n).map(|i| system.name(i)).collect::<Vec<_>>().join(" "));
    out.field("right-angled", if system.is_right_angled() { "yes" } else { "no" });
    out.field("parabolic-type", classify_parabolic(system, &all));
    out.field("weights", spec);
    decision(out, "gradient-sp", &decide_gradient_sp(system));
    decision(out, "small-at-infinity", &is_small_at_infinity(system));
    match is_hyperbolic_right_angled(system) {
        Err(_) => {
            out.field("hyperbolic", "N/A");
            out.field("hyperbolic.rationale", "not right-angled");
        }
        Ok(None) => {
            out.field("hyperbolic", Verdict::Yes);
            out.field("hyperbolic.rationale", "no induced square in the commuting graph");
        }
        Ok(Some(sq)) => {
            out.field("hyperbolic", Verdict::No);
            let names: Vec<String> = sq.iter().map(|&i| gen_name(i)).collect();
            out.field("hyperbolic.witness", names.join(" "));
            out.field("hyperbolic.rationale", "commuting square with both diagonals infinite");
        }
    }
    if system.is_right_angled() {
        let iface = hecke_interface_set(system);
        let names: Vec<String> = iface.members.iter().map(|&i| gen_name(i)).collect();
        out.field("interface-set", if iface.is_clique { Verdict::Yes } else { Verdict::No });
        out.field("interface-set.members", format!("{{{}}}", names.join(",")));
        out.field(
            "interface-set.rationale",
            if iface.is_clique { "generators commuting with an infinite pair form a clique" } else { "generators commuting with an infinite pair do not pairwise commute" },
        );
    } else {
        out.field("interface-set", "N/A");
        out.field("interface-set.rationale", "not right-angled");
    }

    let ball = Ball::with_cap(system, radius + 2, cap)?;
    for u in 0..n {
        for w in 0..n {
            let t = gamma_table_in(&ball, spec, &GroupElement::generator(u), &GroupElement::generator(w), radius)?;
            if t.is_empty() {
                continue;
            }
            let key = format!("gamma.{}.{}", u + 1, w + 1);
            out.field(&format!("{key}.l2"), fmt_f64(gamma_lp_norm(&t, 2.0)));
            out.field(&format!("{key}.support"), t.entries.len());
            out.field(&format!("{key}.support-complete"), t.support_complete);
        }
    }
    let gap = spectral_gap_check(system, spec, radius, cap)?;
    out.field("spectral-gap.values", gap.values.len());
    out.field("spectral-gap.max-gap", fmt_q(&gap.max_gap));
    out.field("spectral-gap.bound", fmt_q(&gap.bound));
    out.field("spectral-gap.holds", gap.holds());
    out.field("spectral-gap.finite-group", gap.closed);
    if let Some(q) = q {
        let params = parse_params(system, q)?;
        for u in 0..n {
            let r = hecke_s2_norm(system, &params, spec, u, u, radius, cap)?;
            let key = format!("hecke-s2.{}", u + 1);
            out.field(&format!("{key}.exact"), fmt_q(&r.exact));
            out.field(&format!("{key}.bound"), fmt_q(&r.bound));
            out.field(&format!("{key}.holds"), r.holds());
            out.field(&format!("{key}.positivity-assumed"), r.positivity_assumed);
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<String, CliError> {
    let mut out = Out::new(cli.format == Format::Tsv);
    let cap = cli.max_elements;
    match cli.command {
        Command::Analyze { file, spec, radius, q } => {
            let system = load(&file)?;
            let spec = parse_spec(&system, &spec)?;
            analyze(&mut out, &system, &spec, radius, q.as_deref(), cap)?;
        }
        Command::Reduce { file, word } => {
            let system = load(&file)?;
            let x = parse_word(&system, &word)?;
            let letters: Vec<String> = x.letters().map(|c| (c + 1).to_string()).collect();
            out.field("normal-form", if letters.is_empty() { "e".to_string() } else { letters.join(" ") });
            out.field("length", x.len());
        }
        Command::Gamma { file, pair, spec, radius, p } => {
            let system = load(&file)?;
            let spec = parse_spec(&system, &spec)?;
            let (u, w) = (parse_word(&system, &pair.u)?, parse_word(&system, &pair.w)?);
            let ps = parse_ps(&p)?;
            let t = gamma_table(&system, &spec, &u, &w, radius, cap)?;
            out.field("u", &u);
            out.field("w", &w);
            out.field("radius", radius);
            out.field("support", t.entries.len());
            out.field("support-complete", t.support_complete);
            for (v, g) in &t.entries {
                out.row(&["gamma".to_string(), v.to_string(), fmt_q(g)]);
            }
            for (name, pv) in ps {
                out.field(&format!("norm.l{name}"), fmt_f64(gamma_lp_norm(&t, pv)));
            }
        }
        Command::Hecke { file, q, a, b, u, w, v, spec, radius } => {
            let system = load(&file)?;
            let params = parse_params(&system, &q)?;
            let spec = parse_spec(&system, &spec)?;
            match (a, b, u, w) {
                (Some(a), Some(b), None, None) => {
                    let (a, b) = (parse_word(&system, &a)?, parse_word(&system, &b)?);
                    let prod = hecke_multiply(&system, &params, &HeckeElement::basis(a), &HeckeElement::basis(b));
                    hecke_terms(&mut out, "product", &prod);
                }
                (None, None, Some(u), Some(w)) => {
                    let (u, w) = (parse_generator(&system, u)?, parse_generator(&system, w)?);
                    match v {
                        Some(v) => {
                            let v = parse_word(&system, &v)?;
                            let ops = Ball::with_cap(&system, v.len() + 2, cap)?;
                            let simple = psi_hecke(&ops, &params, &spec, u, w, &v)?;
                            let defining = psi_hecke_defining(&ops, &params, &spec, u, w, &v)?;
                            hecke_terms(&mut out, "psi", &simple);
                            out.field("psi.matches-definition", simple == defining);
                        }
                        None => {
                            let r = hecke_s2_norm(&system, &params, &spec, u, w, radius, cap)?;
                            out.field("s2.exact", fmt_q(&r.exact));
                            out.field("s2.exact-f64", fmt_f64(r.exact.to_f64().unwrap_or(f64::NAN)));
                            out.field("s2.bound", fmt_q(&r.bound));
                            out.field("s2.bound-f64", fmt_f64(r.bound.to_f64().unwrap_or(f64::NAN)));
                            out.field("s2.holds", r.holds());
                            out.field("s2.support-complete", r.support_complete);
                            out.field("s2.positivity-assumed", r.positivity_assumed);
                        }
                    }
                }
                _ => return Err(CliError::Usage("hecke needs either --a and --b, or --u and --w".into())),
            }
        }
        Command::Schatten { file, pair, spec, radius, p } => {
            let system = load(&file)?;
            let spec = parse_spec(&system, &spec)?;
            let (u, w) = (parse_word(&system, &pair.u)?, parse_word(&system, &pair.w)?);
            let ps = parse_ps(&p)?;
            let op = psi_group_matrix(&system, &spec, &u, &w, radius, cap)?;
            let t = gamma_table(&system, &spec, &u, &w, op.interior_radius, cap)?;
            let m = op.interior_matrix();
            out.field("dimension", op.dim());
            out.field("interior-radius", op.interior_radius);
            out.field("exact", t.support_complete);
            for (name, pv) in ps {
                out.field(&format!("schatten.S{name}"), fmt_f64(schatten_norm_matrix(&m, pv)));
                out.field(&format!("gamma.l{name}"), fmt_f64(gamma_lp_norm(&t, pv)));
            }
        }
        Command::Dot { file } => {
            let system = load(&file)?;
            return Ok(to_dot(&system));
        }
    }
    Ok(out.finish())
}

fn hecke_terms(out: &mut Out, key: &str, a: &HeckeElement) {
    out.field(&format!("{key}.terms"), a.len());
    for (x, c) in a.terms() {
        out.row(&[key.to_string(), x.to_string(), c.to_string(), fmt_f64(c.to_f64())]);
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
