use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use fmethod_core::exec::with_jobs;
use fmethod_core::fmethod::{
    build_operator, classify, fsystem_solve, hom_at, ma_match, FamilyTag, FmethodError,
    InducedParams, MChar, VermaHom,
};
use fmethod_core::ring::{parse_rational, ParamPoly, Rational};
use fmethod_core::suites::{report_json, run_many, Bounds, Check, Suite};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "fmethod",
    version,
    about = "Differential intertwining operators and Verma module homomorphisms for SL(3,R)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Families of operators I(lambda)^eps -> I(nu)^delta
    Classify(ClassifyArgs),
    /// Polynomial solutions of the F-system on Pol(k,l)
    Solve(SolveArgs),
    /// The differential operator of a family
    Operator(OperatorArgs),
    /// The Verma module homomorphism of a family
    Hom(HomArgs),
    /// Run verification suites
    Verify(VerifyArgs),
    /// Run every suite at small bounds
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Id,
    A1,
    A2,
    Bplus,
    Bminus,
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Symbols,
    Fsystem,
    Singular,
    Factorizations,
    Special,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Symbols => vec![Suite::Symbols],
            SuiteArg::Fsystem => vec![Suite::Fsystem],
            SuiteArg::Singular => vec![Suite::Singular],
            SuiteArg::Factorizations => vec![Suite::Factorizations],
            SuiteArg::Special => vec![Suite::Special],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            SuiteArg::All => "all",
            other => other.suites()[0].name(),
        }
    }
}

#[derive(Args)]
struct ClassifyArgs {
    /// Character of the source, e.g. +,-
    #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
    eps: MChar,
    /// Character of the target
    #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
    delta: MChar,
    /// Source parameter as a rational pair, e.g. 0,-1/2
    #[arg(long, allow_hyphen_values = true, value_parser = parse_pair)]
    lambda: (Rational, Rational),
    /// Target parameter
    #[arg(long, allow_hyphen_values = true, value_parser = parse_pair)]
    nu: (Rational, Rational),
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    l: u32,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_pair)]
    lambda: (Rational, Rational),
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    /// Parameter of the C family: a rational or the symbol s
    #[arg(long, allow_hyphen_values = true, default_value = "s")]
    s: String,
}

#[derive(Args)]
struct OperatorArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct HomArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Character of the target Verma module
    #[arg(long, allow_hyphen_values = true, value_parser = parse_sign, default_value = "+,+")]
    eps: MChar,
    /// Target parameter; entries may be rationals or l1, l2
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    #[arg(long, default_value_t = 5)]
    max_k: u32,
    #[arg(long, default_value_t = 5)]
    max_l: u32,
    /// Worker threads (1 runs sequentially)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn parse_sign(text: &str) -> Result<MChar, String> {
    text.parse()
}

fn parse_pair(text: &str) -> Result<(Rational, Rational), String> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| format!("expected two comma-separated rationals, got `{text}`"))?;
    let q = |t: &str| parse_rational(t.trim()).map_err(|e| e.to_string());
    Ok((q(a)?, q(b)?))
}

enum Failure {
    Usage(String),
    Check(String),
    BrokenPipe,
}

impl From<FmethodError> for Failure {
    fn from(e: FmethodError) -> Self {
        match e {
            FmethodError::InvalidTag(_) | FmethodError::TagMismatch { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Check(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::BrokenPipe
        } else {
            Failure::Check(e.to_string())
        }
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = e.exit_code();
            if code == 2 && !e.to_string().contains("Usage:") {
                let sub = std::env::args().nth(1).unwrap_or_default();
                eprintln!("\n{}", usage_for(&sub));
            }
            return ExitCode::from(code as u8);
        }
    };
    let mut out = io::stdout().lock();
    let name = subcommand_name(&cli.command);
    let result = match cli.command {
        Command::Classify(args) => cmd_classify(&args, &mut out),
        Command::Solve(args) => cmd_solve(&args, &mut out),
        Command::Operator(args) => cmd_operator(&args, &mut out),
        Command::Hom(args) => cmd_hom(&args, &mut out),
        Command::Verify(args) => cmd_verify(&args, &mut out),
        Command::Selftest(args) => cmd_selftest(&args, &mut out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\n{}", usage_for(name));
            ExitCode::from(2)
        }
        Err(Failure::BrokenPipe) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn usage_for(subcommand: &str) -> clap::builder::StyledStr {
    let mut cmd = Cli::command();
    cmd.build();
    match cmd.find_subcommand_mut(subcommand) {
        Some(sub) => sub.render_usage(),
        None => cmd.render_usage(),
    }
}

fn subcommand_name(command: &Command) -> &'static str {
    match command {
        Command::Classify(_) => "classify",
        Command::Solve(_) => "solve",
        Command::Operator(_) => "operator",
        Command::Hom(_) => "hom",
        Command::Verify(_) => "verify",
        Command::Selftest(_) => "selftest",
    }
}

fn pair_poly(p: &(Rational, Rational)) -> (ParamPoly, ParamPoly) {
    (
        ParamPoly::constant(p.0.clone()),
        ParamPoly::constant(p.1.clone()),
    )
}

fn emit_json(out: &mut impl Write, value: &Value) -> io::Result<()> {
    writeln!(out, "{value}")
}

fn latex_hom_name(tag: &FamilyTag) -> String {
    match tag {
        FamilyTag::Identity => "\\mathrm{id}".into(),
        FamilyTag::A1 { k } => format!("\\varphi_1^{{({k})}}"),
        FamilyTag::A2 { k } => format!("\\varphi_2^{{({k})}}"),
        FamilyTag::Bplus { k, l } => format!("\\varphi_+^{{({k},{l})}}"),
        FamilyTag::Bminus { k, l } => format!("\\varphi_-^{{({k},{l})}}"),
        FamilyTag::C { k, s } => format!("\\varphi_c^{{({};{k})}}", s.to_latex()),
    }
}

fn cmd_classify(args: &ClassifyArgs, out: &mut impl Write) -> CmdResult {
    let (lam, nu) = (pair_poly(&args.lambda), pair_poly(&args.nu));
    let families = classify(args.eps, args.delta, &lam, &nu)?;
    let dim = match ma_match(args.eps, args.delta, &args.lambda, &args.nu).first() {
        Some(&(k, l)) => fsystem_solve(k, l, &args.lambda)?.dim,
        None => 0,
    };
    if families.is_empty() != (dim == 0) {
        return Err(Failure::Check(format!(
            "families {families:?} disagree with solution dimension {dim}"
        )));
    }
    match args.format {
        Format::Json => {
            let fams: Vec<Value> = families.iter().map(FamilyTag::to_json).collect();
            emit_json(out, &json!({"families": fams, "dim": dim}))?;
        }
        Format::Text => {
            let names: Vec<String> = families.iter().map(ToString::to_string).collect();
            let names = if names.is_empty() {
                "none".into()
            } else {
                names.join(", ")
            };
            writeln!(out, "families: {names}")?;
            writeln!(out, "dim: {dim}")?;
        }
        Format::Latex => {
            let names: Vec<String> = families.iter().map(latex_hom_name).collect();
            writeln!(out, "\\dim = {dim}")?;
            for name in names {
                writeln!(out, "{name}")?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(args: &SolveArgs, out: &mut impl Write) -> CmdResult {
    let sol = fsystem_solve(args.k, args.l, &args.lambda)?;
    match args.format {
        Format::Json => {
            let generator = sol.generator.as_ref().map(|g| {
                g.coeffs()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
            });
            let value = json!({
                "k": args.k,
                "l": args.l,
                "lambda": [args.lambda.0.to_string(), args.lambda.1.to_string()],
                "dim": sol.dim,
                "generator": generator,
            });
            emit_json(out, &value)?;
        }
        Format::Text => {
            writeln!(out, "dim: {}", sol.dim)?;
            if let Some(g) = &sol.generator {
                writeln!(out, "generator: {g}")?;
            }
        }
        Format::Latex => match &sol.generator {
            Some(g) => writeln!(out, "p(t) = {}", g.to_latex())?,
            None => writeln!(out, "\\dim = {}", sol.dim)?,
        },
    }
    Ok(ExitCode::SUCCESS)
}

impl FamilyArgs {
    fn tag(&self) -> Result<FamilyTag, Failure> {
        let need = |name: &str, v: Option<u32>| {
            v.ok_or_else(|| Failure::Usage(format!("--{name} is required for this family")))
        };
        let tag = match self.family {
            Family::Id => FamilyTag::Identity,
            Family::A1 => FamilyTag::a1(need("k", self.k)?)?,
            Family::A2 => FamilyTag::a2(need("k", self.k)?)?,
            Family::Bplus => FamilyTag::bplus(need("k", self.k)?, need("l", self.l)?)?,
            Family::Bminus => FamilyTag::bminus(need("k", self.k)?, need("l", self.l)?)?,
            Family::C => {
                let s = match self.s.trim() {
                    "s" => ParamPoly::s(),
                    text => ParamPoly::constant(
                        parse_rational(text).map_err(|e| Failure::Usage(e.to_string()))?,
                    ),
                };
                FamilyTag::c(need("k", self.k)?, s)?
            }
        };
        Ok(tag)
    }
}

fn cmd_operator(args: &OperatorArgs, out: &mut impl Write) -> CmdResult {
    let tag = args.family.tag()?;
    let op = build_operator(&tag)?;
    match args.format {
        Format::Json => emit_json(out, &op.to_json())?,
        Format::Text => writeln!(out, "{op}")?,
        Format::Latex => writeln!(out, "{}", op.to_latex())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn params_json(p: &InducedParams) -> Value {
    json!({
        "eps": p.eps.to_string(),
        "lambda": [p.lam.0.to_string(), p.lam.1.to_string()],
    })
}

fn hom_json(hom: &VermaHom) -> Value {
    json!({
        "name": hom.name,
        "source": params_json(&hom.source),
        "target": params_json(&hom.target),
        "vector": hom.vector.body.to_json(),
    })
}

fn cmd_hom(args: &HomArgs, out: &mut impl Write) -> CmdResult {
    let tag = args.family.tag()?;
    let lam = match &args.lambda {
        None => tag.target_lambda(),
        Some(text) => {
            let (a, b) = text
                .split_once(',')
                .ok_or_else(|| Failure::Usage(format!("expected two entries, got `{text}`")))?;
            let p = |t: &str| {
                t.trim()
                    .parse::<ParamPoly>()
                    .map_err(|e| Failure::Usage(e.to_string()))
            };
            (p(a)?, p(b)?)
        }
    };
    let hom = hom_at(&tag, args.eps, &lam)?;
    match args.format {
        Format::Json => emit_json(out, &hom_json(&hom))?,
        Format::Text => writeln!(out, "{hom}")?,
        Format::Latex => writeln!(out, "{} \\otimes \\mathbb{{1}}", hom.vector.body.to_latex())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn default_jobs(jobs: Option<usize>) -> usize {
    jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, usize::from))
}

fn run_checks(suites: &[Suite], bounds: Bounds, jobs: Option<usize>) -> Vec<Check> {
    with_jobs(default_jobs(jobs), |exec| run_many(suites, bounds, exec))
}

fn cmd_verify(args: &VerifyArgs, out: &mut impl Write) -> CmdResult {
    if args.max_k == 0 || args.max_l == 0 {
        return Err(Failure::Usage(
            "--max-k and --max-l must be at least 1".into(),
        ));
    }
    if args.format == Format::Latex {
        return Err(Failure::Usage("verify writes text or json".into()));
    }
    let bounds = Bounds {
        max_k: args.max_k,
        max_l: args.max_l,
    };
    let checks = run_checks(&args.suite.suites(), bounds, args.jobs);
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    match args.format {
        Format::Json => {
            let mut report = report_json(&checks);
            report["suite"] = json!(args.suite.name());
            report["max_k"] = json!(args.max_k);
            report["max_l"] = json!(args.max_l);
            emit_json(out, &report)?;
        }
        _ => {
            for check in &checks {
                writeln!(out, "{check}")?;
            }
            writeln!(
                out,
                "{} passed, {} failed",
                checks.len() - failed.len(),
                failed.len()
            )?;
        }
    }
    for check in &failed {
        eprintln!("{check}");
    }
    Ok(if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_selftest(args: &SelftestArgs, out: &mut impl Write) -> CmdResult {
    if args.format == Format::Latex {
        return Err(Failure::Usage("selftest writes text or json".into()));
    }
    let bounds = Bounds { max_k: 2, max_l: 2 };
    let checks = run_checks(&Suite::ALL, bounds, args.jobs);
    let summary: Vec<(Suite, usize, usize)> = Suite::ALL
        .iter()
        .map(|&suite| {
            let mine = checks.iter().filter(|c| c.suite == suite);
            let (pass, fail) = mine.fold(
                (0, 0),
                |(p, f), c| if c.passed { (p + 1, f) } else { (p, f + 1) },
            );
            (suite, pass, fail)
        })
        .collect();
    let ok = summary.iter().all(|&(_, _, fail)| fail == 0);
    match args.format {
        Format::Json => {
            let suites: Vec<Value> = summary
                .iter()
                .map(|(s, p, f)| json!({"suite": s.name(), "passed": p, "failed": f}))
                .collect();
            emit_json(out, &json!({"suites": suites, "ok": ok}))?;
        }
        _ => {
            for (suite, pass, fail) in &summary {
                let status = if *fail == 0 { "ok" } else { "FAILED" };
                writeln!(out, "{suite}: {pass} passed, {fail} failed ... {status}")?;
            }
            writeln!(out, "selftest {}", if ok { "ok" } else { "FAILED" })?;
        }
    }
    for check in checks.iter().filter(|c| !c.passed) {
        eprintln!("{check}");
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
