use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use exotic_core::cache::CacheFile;
use exotic_core::charring::CharacterMultiset;
use exotic_core::exotic_k::{BsOrder, KModule};
use exotic_core::verify::{self, Suite};
use exotic_core::{AffineWeylGroup, Error, HeckeAlgebra, TiltMult};

const CACHE_ENV: &str = "EXOTIC_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "exotic", version, about = "Affine Hecke algebras, exotic K-classes and tilting multiplicities")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Kostant partition cache file or directory (default: $EXOTIC_CACHE_DIR).
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,
    /// Seed for randomized verification suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan data, positive roots and group orders.
    Rootinfo { spec: String },
    /// Length of an element such as `t[1,0]` or `omega s1 s0`.
    Length { spec: String, element: String },
    /// Reduced expression `ω s_i1 ... s_ik`.
    Reduced { spec: String, element: String },
    /// The minimal element `w_λ` of `W t_λ` and `δ(λ)`.
    Wlambda {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Bruhat comparison `x ≤ y`.
    Bruhat { spec: String, x: String, y: String },
    /// Product of two Hecke expressions.
    #[command(name = "hecke-mul")]
    HeckeMul { spec: String, left: String, right: String },
    /// Bernstein element `θ_λ` in the standard basis.
    Theta {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Classes in the K-group model.
    Kclass {
        #[command(subcommand)]
        kind: KclassCommand,
    },
    /// Lusztig q-analogue `M_λ^μ(v)`.
    Qanalogue { spec: String, lambda: String, mu: String },
    /// Graded multiplicity of `N(ν)` in `Γ(Ñ, O(λ))`.
    Gamma { spec: String, lambda: String, nu: String },
    /// Multiplicities of standard/costandard objects and tilting classes.
    Tilt {
        #[command(subcommand)]
        kind: TiltCommand,
    },
    /// Compare the tensor-product and costandard computations of `[V ⊗ O]`.
    Reconcile { spec: String, charfile: PathBuf },
    /// Run verification suites.
    Verify {
        spec: String,
        #[arg(long, default_value_t = 2)]
        radius: i64,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand, Debug)]
enum KclassCommand {
    /// `[O_Ñ(λ)]`
    Line {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// `[Δ^λ_Ñ]`
    Delta {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Bott–Samelson class for a length-zero element and a generator sequence.
    Bs {
        spec: String,
        omega: String,
        generators: Vec<String>,
        /// Let the first generator act first.
        #[arg(long)]
        reversed: bool,
    },
}

#[derive(Subcommand, Debug)]
enum TiltCommand {
    /// Graded standard multiplicity of `V ⊗ O` (Weyl-basis character file).
    Std {
        spec: String,
        charfile: PathBuf,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Graded costandard multiplicity of `V ⊗ O` (good-basis character file).
    Costd {
        spec: String,
        charfile: PathBuf,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Class of the tilting object `T^λ` for dominant `λ`.
    Dominant {
        spec: String,
        weight: String,
        /// Weyl-basis character of `T(λ)`; defaults to `M(λ)`.
        #[arg(long, value_name = "FILE")]
        tilt_char: Option<PathBuf>,
    },
}

/// What a command produced: text, its JSON form, and whether it passed.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Self { text: text.into(), json, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json { out.json.to_string() } else { out.text };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    cli.cache
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
        .map(|p| CacheFile::resolve(&p))
}

fn read_char(path: &Path) -> Result<CharacterMultiset, Error> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn group(spec: &str) -> Result<Arc<AffineWeylGroup>, Error> {
    Ok(Arc::new(AffineWeylGroup::from_spec(spec)?))
}

/// Runs `f` on a [`TiltMult`] whose partition memo is backed by the cache file, if any.
fn with_tilt<F>(cli: &Cli, spec: &str, f: F) -> Result<Output, Error>
where
    F: FnOnce(&TiltMult) -> Result<Output, Error>,
{
    let tm = TiltMult::new(group(spec)?);
    let path = cache_path(cli);
    let mut cache = path.as_deref().map(CacheFile::load).unwrap_or_default();
    cache.apply(tm.ring());
    let out = f(&tm)?;
    if let Some(path) = path {
        cache.version = exotic_core::cache::CACHE_VERSION;
        cache.collect(tm.ring());
        if let Err(e) = cache.save(&path) {
            eprintln!("warning: could not write cache {}: {e}", path.display());
        }
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Rootinfo { spec } => rootinfo(spec),
        Command::Length { spec, element } => {
            let g = group(spec)?;
            let x = g.parse_element(element)?;
            Ok(Output::new(x.length().to_string(), json!({ "element": g.to_json(&x), "length": x.length() })))
        }
        Command::Reduced { spec, element } => {
            let g = group(spec)?;
            let x = g.parse_element(element)?;
            let rw = g.reduced_word(&x);
            let word: Vec<String> = rw.word.iter().map(|&id| g.generator_name(id)).collect();
            let json = json!({ "omega": g.omega_name(rw.omega), "word": word, "length": x.length() });
            Ok(Output::new(g.format_element(&x), json))
        }
        Command::Wlambda { spec, weight } => {
            let g = group(spec)?;
            let lambda = g.root_system().parse_weight(weight)?;
            let (w, delta) = g.w_lambda(&lambda);
            let text = format!("element: {}\ndelta: {delta}", g.format_element(&w));
            let json = json!({ "element": g.to_json(&w), "word": g.format_element(&w), "delta": delta });
            Ok(Output::new(text, json))
        }
        Command::Bruhat { spec, x, y } => {
            let g = group(spec)?;
            let leq = g.bruhat_leq(&g.parse_element(x)?, &g.parse_element(y)?);
            Ok(Output::new(leq.to_string(), json!(leq)))
        }
        Command::HeckeMul { spec, left, right } => {
            let h = HeckeAlgebra::new(group(spec)?);
            let prod = h.mul(&h.parse_expr(left)?, &h.parse_expr(right)?);
            Ok(Output::new(h.format(&prod), to_value(&h.to_json(&prod))))
        }
        Command::Theta { spec, weight } => {
            let h = HeckeAlgebra::new(group(spec)?);
            let th = h.theta(&h.group().root_system().parse_weight(weight)?);
            Ok(Output::new(h.format(&th), to_value(&h.to_json(&th))))
        }
        Command::Kclass { kind } => kclass(kind),
        Command::Qanalogue { spec, lambda, mu } => with_tilt(cli, spec, |tm| {
            let rs = tm.ring().root_system();
            let q = tm.ring().lusztig_q(&rs.parse_weight(lambda)?, &rs.parse_weight(mu)?)?;
            Ok(Output::new(q.to_string(), to_value(&q)))
        }),
        Command::Gamma { spec, lambda, nu } => with_tilt(cli, spec, |tm| {
            let rs = tm.ring().root_system();
            let q = tm.gamma_graded_char(&rs.parse_weight(lambda)?, &rs.parse_weight(nu)?)?;
            Ok(Output::new(q.to_string(), to_value(&q)))
        }),
        Command::Tilt { kind } => tilt(cli, kind),
        Command::Reconcile { spec, charfile } => with_tilt(cli, spec, |tm| {
            let v = read_char(charfile)?;
            let rep = tm.reconcile(&v)?;
            let mut text = if rep.passed() { "match".to_string() } else { "mismatch".to_string() };
            for d in &rep.detail {
                text.push_str(&format!("\n  {}: tensor {} vs costandard {}", d.weight, d.tensor, d.costandard));
            }
            Ok(Output { text, json: to_value(&rep), ok: rep.passed() })
        }),
        Command::Verify { spec, radius, suite } => {
            let suite: Suite = suite.parse()?;
            if *radius < 0 {
                return Err(Error::Parse("radius must be nonnegative".into()));
            }
            with_tilt(cli, spec, |tm| {
                let reports = verify::run(tm, suite, *radius, cli.seed);
                let ok = reports.iter().all(|r| r.passed());
                let text = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
                Ok(Output { text, json: to_value(&reports), ok })
            })
        }
    }
}

fn rootinfo(spec: &str) -> Result<Output, Error> {
    let g = group(spec)?;
    let rs = g.root_system();
    let roots: Vec<String> = rs.positive_roots().iter().map(|r| r.weight.to_string()).collect();
    let comps: Vec<Value> = rs
        .components()
        .iter()
        .map(|c| {
            json!({
                "type": c.name(),
                "indices": c.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "highest_root": rs.positive_roots()[c.highest_root].weight,
            })
        })
        .collect();
    let json = json!({
        "spec": rs.spec(),
        "rank": rs.rank(),
        "cartan_matrix": rs.cartan_matrix(),
        "positive_roots": rs.positive_roots().iter().map(|r| &r.weight).collect::<Vec<_>>(),
        "rho": rs.rho(),
        "weyl_order": rs.weyl_order(),
        "omega_order": g.omega_order(),
        "components": comps,
    });
    let cartan: Vec<String> =
        rs.cartan_matrix().iter().map(|row| row.iter().map(|x| format!("{x:>3}")).collect::<String>()).collect();
    let text = format!(
        "type: {}\nrank: {}\ncartan matrix:\n{}\npositive roots ({}): {}\n|W| = {}\n|Omega| = {}",
        rs.spec(),
        rs.rank(),
        cartan.join("\n"),
        roots.len(),
        roots.join(" "),
        rs.weyl_order(),
        g.omega_order()
    );
    Ok(Output::new(text, json))
}

fn kclass(kind: &KclassCommand) -> Result<Output, Error> {
    let class = match kind {
        KclassCommand::Line { spec, weight } => {
            let km = KModule::new(group(spec)?);
            let lambda = km.group().root_system().parse_weight(weight)?;
            km.line_bundle_class(&lambda)
        }
        KclassCommand::Delta { spec, weight } => {
            let km = KModule::new(group(spec)?);
            let lambda = km.group().root_system().parse_weight(weight)?;
            km.delta_class(&lambda)
        }
        KclassCommand::Bs { spec, omega, generators, reversed } => {
            let km = KModule::new(group(spec)?);
            let k = km.group().parse_omega(omega)?;
            let seq = km.parse_sequence(generators)?;
            let order = if *reversed { BsOrder::Reversed } else { BsOrder::InnermostFirst };
            km.bott_samelson_class(k, &seq, order)
        }
    };
    Ok(Output::new(class.to_string(), to_value(&class.to_json())))
}

fn tilt(cli: &Cli, kind: &TiltCommand) -> Result<Output, Error> {
    match kind {
        TiltCommand::Std { spec, charfile, weight } => with_tilt(cli, spec, |tm| {
            let v = read_char(charfile)?;
            let p = tm.std_mult(&v, &tm.ring().root_system().parse_weight(weight)?)?;
            Ok(Output::new(p.to_string(), to_value(&p)))
        }),
        TiltCommand::Costd { spec, charfile, weight } => with_tilt(cli, spec, |tm| {
            let v = read_char(charfile)?;
            let p = tm.costd_mult(&v, &tm.ring().root_system().parse_weight(weight)?)?;
            Ok(Output::new(p.to_string(), to_value(&p)))
        }),
        TiltCommand::Dominant { spec, weight, tilt_char } => with_tilt(cli, spec, |tm| {
            let lambda = tm.ring().root_system().parse_weight(weight)?;
            let t = tilt_char.as_deref().map(read_char).transpose()?;
            let class = tm.dominant_tilting_class(&lambda, t.as_ref())?;
            Ok(Output::new(class.to_string(), to_value(&class.to_json())))
        }),
    }
}
