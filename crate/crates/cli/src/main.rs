mod report;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use instanton_quiver::charge_one::composite_matrix;
use instanton_quiver::format::parse_rational;
use instanton_quiver::monad::generate_instanton_with_bound;
use instanton_quiver::stability::{analyze_stability, Wall};
use instanton_quiver::{
    classify, effective_walls_charge1, is_stable_charge1, normal_form, parse_document,
    stability_region_charge1, wall_arrangement, write_monad, write_qrep, Charge1Family,
    Charge1Kind, Document, Error, InstantonKind, ProbeConfig, QuiverRep, Rational, RelationCheck,
    Sampler, SkewForm, StabilityParam, StabilityVerdict, SubrepSearch,
};
use num_traits::Zero;
use report::RunReport;
use serde_json::json;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_GENERATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "iquiver",
    version,
    about = "Quiver representations of instanton sheaves on P^3"
)]
struct Cli {
    /// Print a JSON run report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for every randomized step.
    #[arg(
        long,
        global = true,
        env = "INSTANTON_QUIVER_SEED",
        default_value_t = 0
    )]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a QREP or MONAD file: relations, pencil properties.
    Check { path: PathBuf },
    /// King stability of a representation at (α, γ).
    Stability {
        path: PathBuf,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        alpha: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        gamma: Rational,
        /// Allow the sampled necessary-condition analysis for charge >= 2.
        #[arg(long)]
        heuristic: bool,
    },
    /// Candidate walls and chambers of the (α, γ)-plane for charge n.
    Chambers {
        n: usize,
        /// Write the charge-1 region diagram as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Charge 1 only: decide which walls are crossed by built-in samples.
        #[arg(long)]
        certify: bool,
        /// Charge-1 representation files whose stability regions are drawn
        /// over the diagram.
        #[arg(long, requires = "svg")]
        overlay: Vec<PathBuf>,
    },
    /// Sample an instanton monad and write `<out>.monad` and `<out>.qrep`.
    Generate {
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Any)]
        kind: KindArg,
        #[arg(long, default_value = "instanton")]
        out: PathBuf,
        #[arg(long, default_value_t = instanton_quiver::monad::DEFAULT_RETRY_BOUND)]
        attempts: usize,
    },
    /// Charge-1 classification at (α, γ).
    Classify {
        path: PathBuf,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        alpha: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        gamma: Rational,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    LocallyFree,
    TorsionFree,
    Any,
}

impl From<KindArg> for InstantonKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::LocallyFree => InstantonKind::LocallyFree,
            KindArg::TorsionFree => InstantonKind::TorsionFree,
            KindArg::Any => InstantonKind::Any,
        }
    }
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not an integer or p/q fraction"))
}

/// A failure that ends the command with the given exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GenerationFailed { .. } => EXIT_GENERATION,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = RunReport::new(command_name(&cli.command), cli.seed);
    let result = run(&cli, &mut report);
    let code = match result {
        Ok(code) => code,
        Err(f) => {
            report.verdict("error", json!(f.message));
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    report.exit_code = i32::from(code);
    report.emit(cli.json);
    ExitCode::from(code)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Stability { .. } => "stability",
        Command::Chambers { .. } => "chambers",
        Command::Generate { .. } => "generate",
        Command::Classify { .. } => "classify",
    }
}

fn run(cli: &Cli, report: &mut RunReport) -> CmdResult {
    match &cli.command {
        Command::Check { path } => cmd_check(path, report),
        Command::Stability {
            path,
            alpha,
            gamma,
            heuristic,
        } => cmd_stability(path, alpha, gamma, *heuristic, report),
        Command::Chambers {
            n,
            svg,
            certify,
            overlay,
        } => cmd_chambers(*n, svg.as_deref(), *certify, overlay, report),
        Command::Generate {
            n,
            kind,
            out,
            attempts,
        } => cmd_generate(*n, (*kind).into(), out, *attempts, report),
        Command::Classify { path, alpha, gamma } => cmd_classify(path, alpha, gamma, report),
    }
}

fn load(path: &Path, report: &mut RunReport) -> Result<Document, Failure> {
    report.input("path", path.display());
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_document(&text)?)
}

/// Monads are converted to their representations.
fn load_rep(path: &Path, report: &mut RunReport) -> Result<QuiverRep, Failure> {
    Ok(match load(path, report)? {
        Document::Rep(r) => r,
        Document::Monad(m) => m.functor_f(),
    })
}

fn relations_line(report: &mut RunReport, r: &QuiverRep) -> bool {
    let (text, ok) = match r.check_relations() {
        RelationCheck::Holds => ("OK".to_string(), true),
        RelationCheck::Violation { i, j, .. } => (format!("Violation({i},{j})"), false),
    };
    report.line(format!("relations: {text}"));
    report.verdict("relations", json!(text));
    ok
}

fn cmd_check(path: &Path, report: &mut RunReport) -> CmdResult {
    let doc = load(path, report)?;
    let cfg = ProbeConfig::with_seed(report.seed);
    let r = match &doc {
        Document::Rep(r) => r.clone(),
        Document::Monad(m) => {
            report.line(format!("monad of charge {}", m.charge()));
            m.functor_f()
        }
    };
    report.line(format!("dimension vector: {}", r.dim()));
    report.verdict("dimension_vector", json!(r.dim().to_string()));
    let ok = relations_line(report, &r);
    if let Document::Monad(m) = &doc {
        if ok {
            let d = m.diagnose(report.seed)?;
            report.pencil(
                "beta_surjective_everywhere",
                "beta surjective everywhere",
                &d.beta_surjective_everywhere,
            );
            report.pencil(
                "alpha_injective_everywhere",
                "alpha injective everywhere",
                &d.alpha_injective_everywhere,
            );
            report.pencil(
                "alpha_fail_codim2",
                "alpha degeneration locus codim >= 2",
                &d.alpha_fail_codim2,
            );
            report.line(format!("sheaf type: {}", d.sheaf_type));
            report.verdict("sheaf_type", json!(d.sheaf_type.to_string()));
        }
    } else {
        report.pencil(
            "globally_injective",
            "globally injective",
            &r.globally_injective(&cfg),
        );
        report.pencil(
            "locally_injective",
            "locally injective",
            &r.locally_injective(&cfg),
        );
        report.pencil(
            "globally_surjective",
            "globally surjective",
            &r.globally_surjective(&cfg),
        );
        report.pencil(
            "locally_surjective",
            "locally surjective",
            &r.locally_surjective(&cfg),
        );
    }
    Ok(if ok { EXIT_OK } else { EXIT_NEGATIVE })
}

fn verdict_json(v: &StabilityVerdict) -> serde_json::Value {
    match v {
        StabilityVerdict::Stable => json!({"verdict": "Stable"}),
        StabilityVerdict::SemistableOnly => json!({"verdict": "SemistableOnly"}),
        StabilityVerdict::Unstable(d) => {
            json!({"verdict": "Unstable", "certificate": d.to_string()})
        }
    }
}

fn cmd_stability(
    path: &Path,
    alpha: &Rational,
    gamma: &Rational,
    heuristic: bool,
    report: &mut RunReport,
) -> CmdResult {
    report.input("alpha", alpha);
    report.input("gamma", gamma);
    let r = load_rep(path, report)?;
    let d = r.dim();
    let n = match d.charge() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::WrongShape(d).into()),
    };
    let theta = StabilityParam::new(alpha.clone(), gamma.clone(), n);
    report.line(format!(
        "theta = ({}, {}, {})",
        theta.alpha,
        theta.middle(),
        theta.gamma
    ));
    if n == 1 {
        let v = is_stable_charge1(&r, &theta)?;
        report.line(v.to_string());
        report.verdict("stability", verdict_json(&v));
        return Ok(if v.is_stable() {
            EXIT_OK
        } else {
            EXIT_NEGATIVE
        });
    }
    if !heuristic {
        return Err(input_error(format!(
            "exact stability is implemented for charge 1 only (got charge {n}); pass --heuristic for a necessary-condition analysis"
        )));
    }
    let search = SubrepSearch::Sampled {
        samples: 64,
        seed: report.seed,
    };
    let a = analyze_stability(&r, &theta, search)?;
    report.line(
        "necessary-condition analysis (sampled subrepresentations; not a stability decision)",
    );
    report.line(format!(
        "subrepresentation dimension vectors found: {}",
        a.subreps_found
    ));
    let mut verdict = json!({
        "kind": "necessary-condition analysis",
        "samples": 64,
        "seed": report.seed,
        "subreps_found": a.subreps_found,
    });
    let code = if let Some(v) = a.certified_verdict() {
        report.line(v.to_string());
        verdict["verdict"] = json!("Unstable");
        verdict["certificate"] = json!(v.to_string());
        EXIT_NEGATIVE
    } else if let Some(s) = a.balancing {
        report.line(format!(
            "not stable: found subrepresentation {s} with theta.s = 0"
        ));
        verdict["verdict"] = json!("NotStable");
        verdict["certificate"] = json!(s.to_string());
        EXIT_NEGATIVE
    } else {
        report.line("no destabilizing subrepresentation found");
        verdict["verdict"] = json!("NoCounterexample");
        EXIT_OK
    };
    if let Some((s, v)) = &a.candidate_max {
        report.line(format!(
            "largest theta.s over candidate dimension vectors: {v} at {s}"
        ));
        verdict["candidate_max"] = json!({"dim": s.to_string(), "value": v.to_string()});
    }
    let all_negative = a.candidates_all_negative();
    report.line(format!(
        "all candidates negative: {}",
        if all_negative { "yes" } else { "no" }
    ));
    verdict["candidates_all_negative"] = json!(all_negative);
    report.verdict("stability", verdict);
    Ok(code)
}

/// `γ = kα` or `α = 0` for the line with normal `(cα, cγ)`.
fn wall_equation(w: &Wall) -> String {
    let (ca, cg) = &w.normal;
    if cg.is_zero() {
        return "α = 0".into();
    }
    let k = -(ca / cg);
    if k.is_zero() {
        return "γ = 0".into();
    }
    let (num, den) = (k.numer().to_string(), k.denom().to_string());
    let coeff = match num.as_str() {
        "1" => String::new(),
        "-1" => "-".into(),
        _ => num,
    };
    if den == "1" {
        format!("γ = {coeff}α")
    } else {
        format!("γ = {coeff}α/{den}")
    }
}

fn builtin_charge1_sample(seed: u64) -> Vec<QuiverRep> {
    let mut out = Vec::new();
    for (k, fam) in Charge1Family::ALL.into_iter().enumerate() {
        out.push(fam.representative());
        let mut s = Sampler::derived(seed, k as u64);
        out.extend((0..8).map(|_| fam.sample(&mut s)));
    }
    out
}

fn cmd_chambers(
    n: usize,
    svg_path: Option<&Path>,
    certify: bool,
    overlay: &[PathBuf],
    report: &mut RunReport,
) -> CmdResult {
    report.input("n", n);
    let arrangement = wall_arrangement(n)?;
    let label = if n == 1 {
        "candidate"
    } else {
        "candidate (not certified)"
    };
    report.line(format!("{} walls, {label}:", arrangement.walls.len()));
    let mut walls = Vec::new();
    for w in &arrangement.walls {
        let gens: Vec<String> = w.generators.iter().map(ToString::to_string).collect();
        let eq = wall_equation(w);
        report.line(format!(
            "  {eq}  direction {}  from {}",
            w.direction,
            gens.join(" ")
        ));
        walls.push(json!({
            "equation": eq,
            "direction": w.direction.to_string(),
            "generators": gens,
            "status": label,
        }));
    }
    report.verdict("walls", json!(walls));
    report.line(format!(
        "{} chambers in the fourth quadrant:",
        arrangement.chambers.len()
    ));
    let chambers: Vec<String> = arrangement
        .chambers
        .iter()
        .map(|c| c.sector.to_string())
        .collect();
    for c in &chambers {
        report.line(format!("  {c}"));
    }
    report.verdict("chambers", json!(chambers));

    if certify {
        if n != 1 {
            return Err(input_error("--certify is available for charge 1 only"));
        }
        let sample = builtin_charge1_sample(report.seed);
        let effective = effective_walls_charge1(&sample)?;
        let shown: Vec<String> = effective
            .iter()
            .map(|ray| {
                arrangement
                    .walls
                    .iter()
                    .find(|w| w.fourth_quadrant_ray().as_ref() == Some(ray))
                    .map_or_else(|| ray.to_string(), wall_equation)
            })
            .collect();
        report.line(format!(
            "effective walls inside the fourth quadrant ({} sample representations): {}",
            sample.len(),
            shown.join(", ")
        ));
        report.verdict("effective_walls", json!(shown));
    }

    if let Some(out) = svg_path {
        if n != 1 {
            return Err(input_error("the region diagram is drawn for charge 1 only"));
        }
        let mut overlays = Vec::new();
        for p in overlay {
            let r = load_rep(p, report)?;
            overlays.push(svg::Overlay {
                label: p
                    .file_name()
                    .map_or_else(String::new, |f| f.to_string_lossy().into_owned()),
                region: stability_region_charge1(&r)?,
            });
        }
        let image = svg::figure(&arrangement.walls, &overlays);
        std::fs::write(out, image)
            .map_err(|e| input_error(format!("cannot write {}: {e}", out.display())))?;
        report.input("svg", out.display());
        report.line(format!("wrote {}", out.display()));
    }
    Ok(EXIT_OK)
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn cmd_generate(
    n: usize,
    kind: InstantonKind,
    out: &Path,
    attempts: usize,
    report: &mut RunReport,
) -> CmdResult {
    report.input("n", n);
    report.input("kind", format!("{kind:?}"));
    report.input("attempts", attempts);
    let m = generate_instanton_with_bound(n, kind, report.seed, attempts)?;
    let (monad_path, qrep_path) = (with_extension(out, "monad"), with_extension(out, "qrep"));
    let r = m.functor_f();
    for (p, text) in [(&monad_path, write_monad(&m)), (&qrep_path, write_qrep(&r))] {
        std::fs::write(p, text)
            .map_err(|e| input_error(format!("cannot write {}: {e}", p.display())))?;
    }
    report.input("out", out.display());
    report.line(format!(
        "wrote {} and {}",
        monad_path.display(),
        qrep_path.display()
    ));
    relations_line(report, &r);
    let d = m.diagnose(report.seed)?;
    report.pencil(
        "beta_surjective_everywhere",
        "beta surjective everywhere",
        &d.beta_surjective_everywhere,
    );
    report.pencil(
        "alpha_injective_everywhere",
        "alpha injective everywhere",
        &d.alpha_injective_everywhere,
    );
    report.pencil(
        "alpha_fail_codim2",
        "alpha degeneration locus codim >= 2",
        &d.alpha_fail_codim2,
    );
    report.line(format!("sheaf type: {}", d.sheaf_type));
    report.verdict("sheaf_type", json!(d.sheaf_type.to_string()));
    Ok(EXIT_OK)
}

fn cmd_classify(
    path: &Path,
    alpha: &Rational,
    gamma: &Rational,
    report: &mut RunReport,
) -> CmdResult {
    report.input("alpha", alpha);
    report.input("gamma", gamma);
    let r = load_rep(path, report)?;
    let theta = StabilityParam::new(alpha.clone(), gamma.clone(), 1);
    let class = classify(&r, &theta)?;
    let mut summary = vec![class.kind.to_string()];
    let mut verdict = json!({"kind": class.kind.to_string(), "region": class.region.to_string()});
    match normal_form(&r) {
        Ok(form) => {
            // Computed on the normalized coordinates (first nonzero = 1).
            let pf = SkewForm::new(form.normalized())?.pfaffian();
            summary.push(format!("pf={pf}"));
            summary.push(form.quadric_membership().to_string());
            report.line(format!("skew form: {form}"));
            verdict["skew_form"] = json!(form.to_string());
            verdict["pfaffian"] = json!(pf.to_string());
            verdict["quadric"] = json!(form.quadric_membership().to_string());
        }
        Err(Error::NotGloballySurjective { rank }) => {
            report.line(format!(
                "not globally surjective (rank of N is {rank}); no skew normal form"
            ));
            let nm_zero = composite_matrix(&r).map(|b| b.is_zero()).unwrap_or(false);
            verdict["globally_surjective_rank"] = json!(rank);
            verdict["composite_vanishes"] = json!(nm_zero);
        }
        Err(e) => return Err(e.into()),
    }
    report.line(format!("region: {}", class.region));
    report.line(summary.join(", "));
    report.verdict("class", verdict);
    let stable_kind = matches!(
        class.kind,
        Charge1Kind::LocallyFreeInstanton
            | Charge1Kind::NonLocallyFreeInstanton
            | Charge1Kind::PerverseDual
    );
    Ok(if stable_kind { EXIT_OK } else { EXIT_NEGATIVE })
}
