//! `artin` — compute in Artin monoids given by Coxeter matrices and
//! analyze the KMS inverse-temperature space of the length dynamics.
//!
//! Exit codes: 0 success, 1 negative or failed verdict, 2 inconclusive
//! computation (a cap was hit), 3 input error.

mod render;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use artin_core::cliques::{self, clique_polynomial, pinf};
use artin_core::kms::{self, EvalPoint, Family, KmsOptions};
use artin_core::lambda::{self, Entry, LambdaList, TreeVerdict};
use artin_core::poly::{format_rational, parse_rational};
use artin_core::reversing::{self, LcmOracle, LcmResult, Reversal};
use artin_core::sets::{self, RewriteOutcome, RewriteTarget};
use artin_core::word::{self, Ball, Word};
use artin_core::{Error as CoreError, MonoidPresentation};

use render::{csv_line, word_str, Format};

const STEP: usize = reversing::DEFAULT_STEP_CAP;
const CLASS: usize = word::DEFAULT_CLASS_CAP;
const BALL_CAP: usize = word::DEFAULT_BALL_CAP;

#[derive(Parser)]
#[command(name = "artin", version, about)]
struct Args {
    /// Monoid definition file (JSON); required by all subcommands except selftest
    #[arg(short, long, global = true)]
    monoid: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum FamilyArg {
    #[default]
    Atoms,
    Pinf,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Atoms => Family::Atoms,
            FamilyArg::Pinf => Family::Pinf,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Atoms,
    Pinf,
}

#[derive(Subcommand)]
enum Command {
    /// Right LCM of two words by subword reversing
    Lcm {
        w1: String,
        w2: String,
        #[arg(long, default_value_t = STEP)]
        step_cap: usize,
    },
    /// Whether two words represent the same element
    Equal { w1: String, w2: String },
    /// Whether the first word left-divides the second
    Divides { w1: String, w2: String },
    /// Canonical representatives of all elements up to a length
    Ball { radius: usize },
    /// All cliques of the atom set with their LCMs
    Cliques,
    /// The clique polynomial (reciprocal of the growth series)
    CliquePoly,
    /// The minimal set: closure of the atoms under complements
    Pinf {
        #[arg(long, default_value_t = 64)]
        max_iter: usize,
    },
    /// Expand the branching tree of a list (entries comma-separated, "inf" allowed)
    Tree {
        #[arg(long)]
        list: String,
        #[arg(long, default_value_t = lambda::DEFAULT_DEPTH_CAP)]
        max_depth: usize,
        #[arg(long, default_value_t = lambda::DEFAULT_NODE_CAP)]
        max_nodes: usize,
    },
    /// The inclusion–exclusion polynomial of a list
    Zpoly {
        #[arg(long)]
        list: String,
    },
    /// KMS temperature analysis
    Kms {
        #[command(subcommand)]
        cmd: KmsCmd,
    },
    /// Symbolic set algebra
    Sets {
        #[command(subcommand)]
        cmd: SetsCmd,
    },
    /// Cross-check the reversing engine against the enumeration oracle
    Verify {
        #[arg(long, default_value_t = 5)]
        ball: usize,
    },
    /// Run the built-in checks on embedded presentations
    Selftest,
}

#[derive(Subcommand)]
enum KmsCmd {
    /// The inverse-temperature space from the inequality family
    Temps {
        #[arg(long, value_enum, default_value = "atoms")]
        family: FamilyArg,
        /// Compute atom inequalities without a reduction guarantee
        #[arg(long)]
        force: bool,
        /// Allow inequality families over more than 20 base elements
        #[arg(long, default_value_t = 20)]
        max_family: usize,
        /// Emit a CSV grid of g_J(t) samples over (0, 1)
        #[arg(long)]
        sample_grid: Option<usize>,
    },
    /// Evaluate the inequalities at a point (exact at rational t)
    Eval {
        #[arg(long)]
        t: Option<String>,
        #[arg(long)]
        beta: Option<f64>,
        /// Explicit subsets (repeatable); default: all subsets of the family
        #[arg(long = "j", alias = "J")]
        j: Vec<String>,
        #[arg(long, value_enum, default_value = "atoms")]
        family: FamilyArg,
        #[arg(long)]
        force: bool,
    },
    /// The critical inverse temperature from the clique polynomial
    Critical,
    /// Gaps of the temperature space, with failing-subset witnesses
    Gaps {
        #[arg(long, value_enum, default_value = "atoms")]
        family: FamilyArg,
        #[arg(long)]
        force: bool,
        #[arg(long, default_value_t = 20)]
        max_family: usize,
    },
}

#[derive(Subcommand)]
enum SetsCmd {
    /// Rewrite Ω_K into cells with blockers in the target family
    Rewrite {
        /// Blockers, comma-separated words
        #[arg(long, alias = "K")]
        k: String,
        #[arg(long, value_enum)]
        target: TargetArg,
    },
    /// Sample (P∖sP) ∩ qΩ_K intersections and verify atom rewrites on a ball
    CheckAlgebra {
        #[arg(long, default_value_t = 24)]
        samples: usize,
        #[arg(long, default_value_t = 5)]
        ball: usize,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &CoreError) -> u8 {
    match e {
        CoreError::Inconclusive(_) | CoreError::CapExceeded { .. } | CoreError::UnsaturatedPinf => {
            2
        }
        _ => 3,
    }
}

struct Ctx {
    pres: MonoidPresentation,
    format: Format,
}

impl Ctx {
    fn emit(&self, json: Value, text: Vec<String>) {
        match self.format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&json).unwrap()),
            Format::Text | Format::Csv => {
                for line in text {
                    println!("{line}");
                }
            }
        }
    }

    fn word(&self, s: &str) -> Result<Word, CoreError> {
        // "e" denotes the identity unless a generator claims the name
        if s == "e" && self.pres.generator_named("e").is_none() {
            return Ok(Word::identity());
        }
        self.pres.parse_word(s)
    }

    fn word_list(&self, s: &str) -> Result<Vec<Word>, CoreError> {
        if s.trim().is_empty() {
            return Ok(vec![]);
        }
        s.split(',').map(|part| self.word(part.trim())).collect()
    }

    fn lambda_list(&self, s: &str) -> Result<LambdaList, CoreError> {
        let entries = s
            .split(',')
            .map(|part| {
                let part = part.trim();
                if part == "inf" {
                    Ok(Entry::Infinity)
                } else {
                    Ok(Entry::Element(self.word(part)?))
                }
            })
            .collect::<Result<Vec<Entry>, CoreError>>()?;
        LambdaList::new(&self.pres, entries, STEP)
    }
}

fn run(args: Args) -> Result<u8, CoreError> {
    let format = match args.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    if matches!(args.command, Command::Selftest) {
        return Ok(selftest::run());
    }
    let path = args.monoid.ok_or_else(|| {
        CoreError::MalformedInput("a monoid file is required (use --monoid <file>)".into())
    })?;
    let text = std::fs::read_to_string(&path)
        .map_err(|e| CoreError::MalformedInput(format!("{}: {e}", path.display())))?;
    let pres = MonoidPresentation::parse(&text)?;
    let ctx = Ctx { pres, format };

    match args.command {
        Command::Selftest => unreachable!("handled above"),
        Command::Lcm { w1, w2, step_cap } => cmd_lcm(&ctx, &w1, &w2, step_cap),
        Command::Equal { w1, w2 } => cmd_equal(&ctx, &w1, &w2),
        Command::Divides { w1, w2 } => cmd_divides(&ctx, &w1, &w2),
        Command::Ball { radius } => cmd_ball(&ctx, radius),
        Command::Cliques => cmd_cliques(&ctx),
        Command::CliquePoly => cmd_clique_poly(&ctx),
        Command::Pinf { max_iter } => cmd_pinf(&ctx, max_iter),
        Command::Tree {
            list,
            max_depth,
            max_nodes,
        } => cmd_tree(&ctx, &list, max_depth, max_nodes),
        Command::Zpoly { list } => cmd_zpoly(&ctx, &list),
        Command::Kms { cmd } => match cmd {
            KmsCmd::Temps {
                family,
                force,
                max_family,
                sample_grid,
            } => cmd_kms_temps(&ctx, family.into(), force, max_family, sample_grid),
            KmsCmd::Eval {
                t,
                beta,
                j,
                family,
                force,
            } => cmd_kms_eval(&ctx, t, beta, &j, family.into(), force),
            KmsCmd::Critical => cmd_kms_critical(&ctx),
            KmsCmd::Gaps {
                family,
                force,
                max_family,
            } => cmd_kms_gaps(&ctx, family.into(), force, max_family),
        },
        Command::Sets { cmd } => match cmd {
            SetsCmd::Rewrite { k, target } => cmd_sets_rewrite(&ctx, &k, target),
            SetsCmd::CheckAlgebra { samples, ball } => cmd_check_algebra(&ctx, samples, ball),
        },
        Command::Verify { ball } => cmd_verify(&ctx, ball),
    }
}

fn cmd_lcm(ctx: &Ctx, w1: &str, w2: &str, step_cap: usize) -> Result<u8, CoreError> {
    let p = ctx.word(w1)?;
    let q = ctx.word(w2)?;
    match reversing::lcm(&ctx.pres, &p, &q, step_cap) {
        LcmResult::Lcm {
            lcm,
            comp_left,
            comp_right,
        } => {
            ctx.emit(
                json!({
                    "comp_left": word_str(&ctx.pres, &comp_left),
                    "comp_right": word_str(&ctx.pres, &comp_right),
                    "lcm": word_str(&ctx.pres, &lcm),
                    "length": lcm.len(),
                    "result": "lcm",
                }),
                vec![
                    format!("lcm = {} (length {})", word_str(&ctx.pres, &lcm), lcm.len()),
                    format!("{w1} \\ {w2} = {}", word_str(&ctx.pres, &comp_left)),
                    format!("{w2} \\ {w1} = {}", word_str(&ctx.pres, &comp_right)),
                ],
            );
            Ok(0)
        }
        LcmResult::NoCommonMultiple => {
            ctx.emit(
                json!({ "result": "no-common-multiple" }),
                vec!["no common right multiple".to_string()],
            );
            Ok(0)
        }
        LcmResult::Inconclusive { steps_used } => {
            ctx.emit(
                json!({ "result": "inconclusive", "steps_used": steps_used }),
                vec![format!("inconclusive after {steps_used} reversing steps")],
            );
            Ok(2)
        }
    }
}

fn cmd_equal(ctx: &Ctx, w1: &str, w2: &str) -> Result<u8, CoreError> {
    let u = ctx.word(w1)?;
    let v = ctx.word(w2)?;
    let equal = word::equal(&ctx.pres, &u, &v, CLASS)?;
    ctx.emit(
        json!({ "equal": equal }),
        vec![format!("{}", if equal { "equal" } else { "not equal" })],
    );
    Ok(if equal { 0 } else { 1 })
}

fn cmd_divides(ctx: &Ctx, w1: &str, w2: &str) -> Result<u8, CoreError> {
    let p = ctx.word(w1)?;
    let q = ctx.word(w2)?;
    let divides = word::left_divides(&ctx.pres, &p, &q, CLASS)?;
    ctx.emit(
        json!({ "divides": divides }),
        vec![format!(
            "{}",
            if divides {
                "divides"
            } else {
                "does not divide"
            }
        )],
    );
    Ok(if divides { 0 } else { 1 })
}

fn cmd_ball(ctx: &Ctx, radius: usize) -> Result<u8, CoreError> {
    let ball = Ball::build(&ctx.pres, radius, CLASS, BALL_CAP)?;
    let counts = ball.growth_coefficients();
    let json = json!({
        "counts": counts,
        "elements": ball.words().iter().map(|w| word_str(&ctx.pres, w)).collect::<Vec<_>>(),
        "radius": radius,
        "total": ball.len(),
    });
    let text = match ctx.format {
        Format::Csv => {
            let mut lines = vec!["length,element".to_string()];
            lines.extend(
                ball.words()
                    .iter()
                    .map(|w| csv_line(&[w.len().to_string(), word_str(&ctx.pres, w)])),
            );
            lines
        }
        _ => {
            let mut lines = vec![format!("counts per length: {counts:?}")];
            lines.extend(ball.words().iter().map(|w| word_str(&ctx.pres, w)));
            lines
        }
    };
    ctx.emit(json, text);
    Ok(0)
}

fn cmd_cliques(ctx: &Ctx) -> Result<u8, CoreError> {
    let atoms: Vec<_> = ctx.pres.atoms().collect();
    let cliques = cliques::cliques_of(&ctx.pres, &atoms, STEP)?;
    let json = json!({
        "cliques": cliques.iter().map(|c| json!({
            "lcm": word_str(&ctx.pres, &c.lcm),
            "lcm_length": c.lcm_length,
            "members": render::words_value(&ctx.pres, &c.members),
        })).collect::<Vec<_>>(),
        "count": cliques.len(),
    });
    let mut text = vec![format!("{} cliques", cliques.len())];
    for c in &cliques {
        let members: Vec<String> = c.members.iter().map(|m| word_str(&ctx.pres, m)).collect();
        text.push(format!(
            "{{{}}} -> {} (length {})",
            members.join(", "),
            word_str(&ctx.pres, &c.lcm),
            c.lcm_length
        ));
    }
    ctx.emit(json, text);
    Ok(0)
}

fn cmd_clique_poly(ctx: &Ctx) -> Result<u8, CoreError> {
    let h = clique_polynomial(&ctx.pres, STEP)?;
    let text = match ctx.format {
        Format::Csv => {
            let mut lines = vec!["degree,coefficient".to_string()];
            lines.extend(
                h.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| csv_line(&[k.to_string(), c.to_string()])),
            );
            lines
        }
        _ => vec![format!("h(t) = {h}")],
    };
    ctx.emit(json!({ "clique_polynomial": render::poly_value(&h) }), text);
    Ok(0)
}

fn cmd_pinf(ctx: &Ctx, max_iter: usize) -> Result<u8, CoreError> {
    let p = pinf(&ctx.pres, max_iter, STEP)?;
    let json = json!({
        "elements": p.elements.iter().map(|w| word_str(&ctx.pres, w)).collect::<Vec<_>>(),
        "iterations_used": p.iterations_used,
        "saturated": p.saturated,
        "size": p.len(),
    });
    let mut text = vec![format!(
        "{} elements, saturated: {} ({} iterations)",
        p.len(),
        p.saturated,
        p.iterations_used
    )];
    text.extend(p.elements.iter().map(|w| word_str(&ctx.pres, w)));
    ctx.emit(json, text);
    Ok(if p.saturated { 0 } else { 2 })
}

fn cmd_tree(ctx: &Ctx, list: &str, max_depth: usize, max_nodes: usize) -> Result<u8, CoreError> {
    let lambda = ctx.lambda_list(list)?;
    let report = lambda::build_tree(&ctx.pres, &lambda, max_depth, max_nodes, STEP)?;
    let finite = report.verdict == TreeVerdict::Finite;
    let json = json!({
        "finite": if finite { json!(true) } else { json!("inconclusive") },
        "leaf_count": report.leaf_count,
        "max_depth": report.max_depth,
        "node_count": report.node_count,
        "witness_branch": report.witness_branch,
    });
    let mut text = vec![format!(
        "{}: {} nodes, {} leaves, depth {}",
        if finite { "finite" } else { "inconclusive" },
        report.node_count,
        report.leaf_count,
        report.max_depth
    )];
    if let Some(w) = &report.witness_branch {
        text.push(format!("witness branch prefix: {w}"));
    }
    ctx.emit(json, text);
    Ok(if finite { 0 } else { 2 })
}

fn cmd_zpoly(ctx: &Ctx, list: &str) -> Result<u8, CoreError> {
    let lambda = ctx.lambda_list(list)?;
    let z = lambda::z_poly(&ctx.pres, &lambda, STEP)?;
    ctx.emit(
        json!({ "z_polynomial": render::poly_value(&z) }),
        vec![format!("Z(λ)(t) = {z}")],
    );
    Ok(0)
}

fn kms_options(force: bool) -> KmsOptions {
    KmsOptions {
        force,
        ..KmsOptions::default()
    }
}

fn cmd_kms_temps(
    ctx: &Ctx,
    family: Family,
    force: bool,
    max_family: usize,
    sample_grid: Option<usize>,
) -> Result<u8, CoreError> {
    let opts = KmsOptions {
        family_limit: max_family,
        ..kms_options(force)
    };
    let space = kms::temperature_space(&ctx.pres, family, &opts)?;
    if let Some(grid) = sample_grid {
        return emit_sample_grid(ctx, &space, grid);
    }
    let json = render::space_value(&ctx.pres, &space);
    let text = match ctx.format {
        Format::Csv => {
            let mut lines = vec!["kind,beta_lo,beta_hi,t_lo_num_den,t_hi_num_den,poly".to_string()];
            for c in &space.components {
                match c {
                    kms::BetaComponent::Point(p) => lines.push(csv_line(&[
                        "point".into(),
                        format!("{}", p.beta_approx),
                        format!("{}", p.beta_approx),
                        format!("{}..{}", format_rational(&p.t_lo), format_rational(&p.t_hi)),
                        String::new(),
                        p.poly.to_string(),
                    ])),
                    kms::BetaComponent::Interval { lower, upper, .. } => lines.push(csv_line(&[
                        "interval".into(),
                        format!("{}", lower.beta_approx),
                        upper
                            .as_ref()
                            .map_or("inf".to_string(), |u| format!("{}", u.beta_approx)),
                        format!(
                            "{}..{}",
                            format_rational(&lower.t_lo),
                            format_rational(&lower.t_hi)
                        ),
                        upper.as_ref().map_or(String::new(), |u| {
                            format!("{}..{}", format_rational(&u.t_lo), format_rational(&u.t_hi))
                        }),
                        lower.poly.to_string(),
                    ])),
                }
            }
            lines
        }
        _ => {
            let comps: Vec<String> = space
                .components
                .iter()
                .map(render::component_text)
                .collect();
            let equality: Vec<String> = space
                .full_set_equality
                .iter()
                .map(|a| format!("{:.6}", a.beta_approx))
                .collect();
            vec![
                format!("inverse temperature space: {}", comps.join(" ∪ ")),
                format!(
                    "β = 0 included: {}; reaches +∞: {}",
                    space.beta_zero_included, space.includes_plus_infinity
                ),
                format!(
                    "full-set inequality is an equality at β ∈ {{{}}}",
                    equality.join(", ")
                ),
                format!(
                    "{} distinct inequality polynomials",
                    space.polynomials.len()
                ),
            ]
        }
    };
    ctx.emit(json, text);
    Ok(0)
}

fn emit_sample_grid(
    ctx: &Ctx,
    space: &kms::TemperatureSpace,
    grid: usize,
) -> Result<u8, CoreError> {
    let mut header = vec!["t".to_string(), "beta".to_string()];
    for f in &space.polynomials {
        let names: Vec<String> = f.witness_j.iter().map(|w| word_str(&ctx.pres, w)).collect();
        header.push(format!("g[{}]", names.join(" ")));
    }
    let mut lines = vec![csv_line(&header)];
    for k in 1..=grid {
        let t = num_rational::BigRational::new((k as i64).into(), (grid as i64 + 1).into());
        let tf = t.to_f64().unwrap();
        let mut row = vec![format!("{tf}"), format!("{}", -tf.ln())];
        for f in &space.polynomials {
            row.push(format!("{}", f.poly.eval(&t).to_f64().unwrap()));
        }
        lines.push(csv_line(&row));
    }
    for line in lines {
        println!("{line}");
    }
    Ok(0)
}

fn cmd_kms_eval(
    ctx: &Ctx,
    t: Option<String>,
    beta: Option<f64>,
    j: &[String],
    family: Family,
    force: bool,
) -> Result<u8, CoreError> {
    let point = match (t, beta) {
        (Some(t), None) => EvalPoint::RationalT(parse_rational(&t)?),
        (None, Some(b)) => EvalPoint::Beta(b),
        _ => {
            return Err(CoreError::MalformedInput(
                "exactly one of --t or --beta is required".into(),
            ))
        }
    };
    let js: Vec<Vec<Word>> = if j.is_empty() {
        let opts = kms_options(force);
        let base = kms::family_base(&ctx.pres, family, &opts)?;
        (1u64..(1 << base.len()))
            .map(|mask| {
                (0..base.len())
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| base[k].clone())
                    .collect()
            })
            .collect()
    } else {
        j.iter()
            .map(|s| ctx.word_list(s))
            .collect::<Result<_, _>>()?
    };
    let report = kms::evaluate_positivity(&ctx.pres, &point, &js, STEP)?;
    let json = json!({
        "all_nonnegative": report.all_nonnegative,
        "beta": report.beta_approx,
        "evaluations": report.evaluations.iter().map(|e| json!({
            "j": render::words_value(&ctx.pres, &e.j),
            "nonnegative": e.value.is_nonnegative(),
            "value": render::gvalue_value(&e.value),
        })).collect::<Vec<_>>(),
        "t": report.t_approx,
    });
    let text = match ctx.format {
        Format::Csv => {
            let mut lines = vec!["j,value,nonnegative".to_string()];
            for e in &report.evaluations {
                let names: Vec<String> = e.j.iter().map(|w| word_str(&ctx.pres, w)).collect();
                lines.push(csv_line(&[
                    names.join(" "),
                    format!("{}", e.value.approx()),
                    e.value.is_nonnegative().to_string(),
                ]));
            }
            lines
        }
        _ => {
            let mut lines = vec![format!(
                "t = {} (β = {}), all nonnegative: {}",
                report.t_approx, report.beta_approx, report.all_nonnegative
            )];
            for e in &report.evaluations {
                let names: Vec<String> = e.j.iter().map(|w| word_str(&ctx.pres, w)).collect();
                let value = match &e.value {
                    kms::GValue::Exact(v) => format!("{} (exact)", format_rational(v)),
                    kms::GValue::Approx(v) => format!("{v} (approx)"),
                };
                lines.push(format!("g[{}] = {value}", names.join(", ")));
            }
            lines
        }
    };
    ctx.emit(json, text);
    Ok(if report.all_nonnegative { 0 } else { 1 })
}

fn cmd_kms_critical(ctx: &Ctx) -> Result<u8, CoreError> {
    let c = kms::critical_beta(&ctx.pres, &KmsOptions::default())?;
    ctx.emit(
        json!({ "critical": render::algebraic_value(&c) }),
        vec![format!(
            "β_c = {:.12} (e^-β_c = {:.12} in ({}, {}])",
            c.beta_approx,
            c.t_approx,
            format_rational(&c.t_lo),
            format_rational(&c.t_hi)
        )],
    );
    Ok(0)
}

fn cmd_kms_gaps(
    ctx: &Ctx,
    family: Family,
    force: bool,
    max_family: usize,
) -> Result<u8, CoreError> {
    let opts = KmsOptions {
        family_limit: max_family,
        ..kms_options(force)
    };
    let report = kms::detect_gap(&ctx.pres, family, &opts)?;
    let json = json!({
        "gaps": report.gaps.iter().map(|g| json!({
            "beta_interval": [g.lower_beta, g.upper_beta],
            "witness": {
                "j": render::words_value(&ctx.pres, &g.witness_j),
                "t": render::rational_value(&g.witness_t),
                "value": render::rational_value(&g.witness_value),
            },
        })).collect::<Vec<_>>(),
        "has_gap": report.has_gap,
        "space": render::space_value(&ctx.pres, &report.space),
    });
    let mut text = vec![format!("has gap: {}", report.has_gap)];
    for g in &report.gaps {
        let names: Vec<String> = g.witness_j.iter().map(|w| word_str(&ctx.pres, w)).collect();
        text.push(format!(
            "gap ({:.6}, {:.6}); witness J = {{{}}} with g(t = {}) = {} < 0",
            g.lower_beta,
            g.upper_beta,
            names.join(", "),
            format_rational(&g.witness_t),
            format_rational(&g.witness_value),
        ));
    }
    ctx.emit(json, text);
    Ok(0)
}

fn cmd_sets_rewrite(ctx: &Ctx, k: &str, target: TargetArg) -> Result<u8, CoreError> {
    let blockers = ctx.word_list(k)?;
    let target = match target {
        TargetArg::Atoms => RewriteTarget::Atoms,
        TargetArg::Pinf => RewriteTarget::Pinf,
    };
    let outcome = sets::rewrite_blockers(
        &ctx.pres,
        target,
        &blockers,
        sets::DEFAULT_REWRITE_DEPTH_CAP,
        STEP,
        cliques::DEFAULT_PINF_ITERATION_CAP,
    )?;
    match outcome {
        RewriteOutcome::Set(set) => {
            let text: Vec<String> = std::iter::once(format!("{} cells", set.cells.len()))
                .chain(set.cells.iter().map(|c| render::cell_str(&ctx.pres, c)))
                .collect();
            ctx.emit(
                json!({ "cells": render::set_value(&ctx.pres, &set), "result": "set" }),
                text,
            );
            Ok(0)
        }
        RewriteOutcome::Inconclusive => {
            ctx.emit(
                json!({ "result": "inconclusive" }),
                vec!["inconclusive: recursion depth cap hit".to_string()],
            );
            Ok(2)
        }
    }
}

fn cmd_check_algebra(ctx: &Ctx, samples: usize, ball: usize) -> Result<u8, CoreError> {
    let report = sets::algebra_closure_check(
        &ctx.pres,
        samples,
        ball,
        sets::DEFAULT_REWRITE_DEPTH_CAP,
        STEP,
        CLASS,
        BALL_CAP,
    )?;
    let json = json!({
        "inconclusive": report.inconclusive,
        "mismatches": report.mismatches,
        "samples": report.samples.len(),
        "successes": report.successes,
    });
    let text = vec![format!(
        "{} samples: {} ok, {} inconclusive, {} mismatches",
        report.samples.len(),
        report.successes,
        report.inconclusive,
        report.mismatches
    )];
    ctx.emit(json, text);
    Ok(if report.mismatches > 0 {
        1
    } else if report.inconclusive > 0 {
        2
    } else {
        0
    })
}

fn cmd_verify(ctx: &Ctx, radius: usize) -> Result<u8, CoreError> {
    let oracle = LcmOracle::build(&ctx.pres, radius + 4, CLASS, BALL_CAP)?;
    let ball = oracle.ball();
    let ids: Vec<u32> = ball.ids_up_to(radius).collect();

    let mut conclusive = 0usize;
    let mut inconclusive = 0usize;
    let mut mismatches = 0usize;
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i..] {
            match reversing::complement(&ctx.pres, ball.word(a), ball.word(b), STEP) {
                Reversal::Complete { left, .. } => {
                    let lcm = ball.word(a).concat(&left);
                    match (
                        ball.canonical_id(&lcm),
                        oracle.minimal_common_multiple(a, b),
                    ) {
                        (Some(x), Some(y)) => {
                            conclusive += 1;
                            if x != y {
                                mismatches += 1;
                            }
                        }
                        _ => inconclusive += 1,
                    }
                }
                Reversal::NoCommonMultiple => {
                    conclusive += 1;
                    if oracle.minimal_common_multiple(a, b).is_some() {
                        mismatches += 1;
                    }
                }
                Reversal::Inconclusive { .. } => inconclusive += 1,
            }
        }
    }

    // canonical form agreement between the two engines
    let mut canonical_mismatches = 0usize;
    for w in ball.words() {
        let strict = reversing::canonicalize(&ctx.pres, w, STEP);
        if strict.as_ref() != Some(w) {
            canonical_mismatches += 1;
        }
    }

    // growth series against the reciprocal of the clique polynomial
    let growth = ball.growth_coefficients();
    let h = clique_polynomial(&ctx.pres, STEP)?;
    let series = h.series_inverse(radius + 1)?;
    let growth_ok = series
        .iter()
        .zip(growth.iter().take(radius + 1))
        .all(|(a, b)| a.to_usize() == Some(*b));

    let ok = mismatches == 0 && canonical_mismatches == 0 && growth_ok;
    let json = json!({
        "canonical_mismatches": canonical_mismatches,
        "growth_matches_clique_polynomial": growth_ok,
        "lcm_pairs": { "conclusive": conclusive, "inconclusive": inconclusive, "mismatches": mismatches },
        "ok": ok,
    });
    let text = vec![
        format!(
            "lcm cross-check: {conclusive} conclusive pairs, {inconclusive} inconclusive, {mismatches} mismatches"
        ),
        format!("canonical-form mismatches: {canonical_mismatches}"),
        format!("growth matches reciprocal clique polynomial: {growth_ok}"),
        format!("verdict: {}", if ok { "ok" } else { "FAILED" }),
    ];
    ctx.emit(json, text);
    Ok(if ok { 0 } else { 1 })
}
