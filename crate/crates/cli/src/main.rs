//! `gfrob`: build, twist and verify G-Frobenius algebras from the command
//! line. Every invocation emits a run report (command, input hashes,
//! outcome, wall time); artifacts go to `--out`, the report to stdout.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use gfrob_core::catalog::fixture_groups;
use gfrob_core::cohomology::{schur_h2, CochainJson, Cochain2, H2Solver};
use gfrob_core::extensions::{central_extension, verify_lift, CentralExtension};
use gfrob_core::gfa::{
    canonicalize_onedim, check_axioms, check_module_structures, group_ring,
    partition, tensor, twist, twisted_group_ring, GFrobeniusAlgebra, TwistData,
};
use gfrob_core::groups::{homs_to, make_group, Group, GroupHom, GroupSpec};
use gfrob_core::verify::acceptance_criteria;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "gfrob", version, about = "exact G-Frobenius algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the primary artifact (group, cochain, algebra, report) to a file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output rendering for stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads for `verify-all`.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Cmd {
    /// Group constructors.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Second cohomology of a group.
    H2 {
        /// Group spec, e.g. "cyclic 4", "dihedral 4", "product(cyclic 2, cyclic 2)".
        #[arg(long)]
        group: String,
        /// Coefficient modulus for H^2(G, Z/m).
        #[arg(long = "mod")]
        modulus: Option<u64>,
        /// Compute H^2(G, k^*) (the Schur multiplier) instead.
        #[arg(long)]
        schur: bool,
    },
    /// Build and transform algebras.
    Gfa {
        #[command(subcommand)]
        cmd: GfaCmd,
    },
    /// Central extensions and the lifting theorem.
    Ext {
        #[command(subcommand)]
        cmd: ExtCmd,
    },
    /// List the fixture groups with their invariants.
    Catalog,
    /// Run the complete acceptance suite.
    VerifyAll,
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Tabulate a group from a spec string.
    Make {
        #[arg(long)]
        spec: String,
    },
}

#[derive(Subcommand)]
enum GfaCmd {
    /// Build a (twisted, super) group ring over a group.
    Build {
        #[arg(long)]
        group: String,
        /// Cocycle file; omitted means the plain group ring.
        #[arg(long)]
        alpha: Option<PathBuf>,
        /// Parity bits, one per element, comma-separated (e.g. "0,1,0,1").
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Check all axioms and module structures of an algebra file.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Twist an algebra by (mu, lambda), or by the universal twist of a cocycle.
    Twist {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, conflicts_with_all = ["mu", "lambda"])]
        alpha: Option<PathBuf>,
        #[arg(long, requires = "lambda")]
        mu: Option<PathBuf>,
        #[arg(long, requires = "mu")]
        lambda: Option<PathBuf>,
    },
    /// Graded tensor product of two algebras over the same group.
    Tensor {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        with: PathBuf,
    },
    /// Sector partition table and its total.
    Partition {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Canonical form of a one-dimensional algebra.
    Canon {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum ExtCmd {
    /// Build the central extension of a cocycle (or the trivial one).
    Build {
        #[arg(long)]
        group: Option<String>,
        /// Kernel order for the trivial extension when no cocycle is given.
        #[arg(long)]
        kernel: Option<u64>,
        #[arg(long)]
        cocycle: Option<PathBuf>,
    },
    /// Verify the lifting diagrams for an algebra along an extension.
    Lift {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        cocycle: PathBuf,
        /// Character exponent: the kernel character a -> zeta_m^(k a).
        #[arg(long, default_value_t = 1)]
        chi: i64,
    },
}

#[derive(Serialize)]
struct InputHash {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    inputs: Vec<InputHash>,
    outcome: Value,
    wall_ms: u128,
}

/// What a command hands back: a JSON outcome, a human rendering, whether
/// the checks (if any) passed, and optionally an artifact for `--out`.
struct Done {
    outcome: Value,
    human: String,
    checks_ok: bool,
    artifact: Option<Value>,
}

enum Failure {
    /// Bad input: unreadable files, malformed specs, inconsistent data.
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = std::result::Result<Done, Failure>;

fn read_input(hashes: &mut Vec<InputHash>, path: &Path) -> std::result::Result<String, Failure> {
    let data = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    hashes.push(InputHash {
        path: path.display().to_string(),
        sha256: format!("{:x}", Sha256::digest(data.as_bytes())),
    });
    Ok(data)
}

fn load_cochain(hashes: &mut Vec<InputHash>, path: &Path) -> std::result::Result<Cochain2, Failure> {
    let data = read_input(hashes, path)?;
    let j: CochainJson = serde_json::from_str(&data)?;
    Ok(j.into_cochain()?)
}

fn load_algebra(
    hashes: &mut Vec<InputHash>,
    path: &Path,
) -> std::result::Result<GFrobeniusAlgebra, Failure> {
    let data = read_input(hashes, path)?;
    let j: gfrob_core::gfa::GfaJson = serde_json::from_str(&data)?;
    Ok(j.into_algebra()?)
}

fn parse_group(spec: &str) -> std::result::Result<Group, Failure> {
    Ok(Arc::new(make_group(&GroupSpec::parse(spec)?)?))
}

fn z2() -> Group {
    Arc::new(make_group(&GroupSpec::Cyclic(2)).unwrap())
}

fn parse_sigma(group: &Group, spec: &str) -> std::result::Result<GroupHom, Failure> {
    let bits: Vec<usize> = spec
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Failure::Input(format!("bad parity list: {e}")))?;
    if bits.iter().any(|&b| b > 1) {
        return Err(Failure::Input("parity bits must be 0 or 1".into()));
    }
    Ok(GroupHom::new(group.clone(), z2(), bits)?)
}

fn report_json(r: &gfrob_core::report::Report) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn cohomology_outcome(g: &Group, modulus: Option<u64>, schur: bool) -> CmdResult {
    let solver = H2Solver::new(g.clone());
    let group = if schur {
        solver.schur()?
    } else {
        let m = modulus.ok_or_else(|| Failure::Input("pass --mod m or --schur".into()))?;
        solver.h2_mod_m(m)?
    };
    let reps: Vec<CochainJson> = group.representatives.iter().map(|c| c.to_json()).collect();
    let outcome = json!({
        "modulus": group.modulus,
        "invariant_factors": group.invariant_factors,
        "order": group.order(),
        "representatives": serde_json::to_value(&reps)?,
    });
    let human = format!(
        "order {} with invariant factors {:?} (coefficient modulus {})",
        group.order(),
        group.invariant_factors,
        group.modulus
    );
    Ok(Done {
        artifact: Some(outcome.clone()),
        outcome,
        human,
        checks_ok: true,
    })
}

fn algebra_done(a: &GFrobeniusAlgebra, human: String) -> CmdResult {
    let artifact = serde_json::to_value(a.to_json())?;
    Ok(Done {
        outcome: json!({
            "group_order": a.group.size,
            "total_dim": a.total_dim(),
            "super": a.is_super(),
        }),
        human,
        checks_ok: true,
        artifact: Some(artifact),
    })
}

fn run(cli: &Cli, hashes: &mut Vec<InputHash>) -> CmdResult {
    match &cli.cmd {
        Cmd::Group { cmd: GroupCmd::Make { spec } } => {
            let g = parse_group(spec)?;
            let artifact = serde_json::to_value(&*g)?;
            Ok(Done {
                outcome: json!({"order": g.size, "abelian": g.is_abelian()}),
                human: format!("group of order {} ({})", g.size, spec),
                checks_ok: true,
                artifact: Some(artifact),
            })
        }
        Cmd::H2 { group, modulus, schur } => {
            let g = parse_group(group)?;
            cohomology_outcome(&g, *modulus, *schur)
        }
        Cmd::Gfa { cmd } => run_gfa(cmd, hashes),
        Cmd::Ext { cmd } => run_ext(cmd, hashes),
        Cmd::Catalog => {
            let mut rows = Vec::new();
            let mut lines = vec![format!("{:<42}{:>7}{:>8}{:>12}", "name", "order", "|H2|", "|Hom(G,Z2)|")];
            let two = z2();
            for f in fixture_groups() {
                let h2 = schur_h2(&f.group)?.order();
                let homs = homs_to(&f.group, &two)?.len();
                lines.push(format!("{:<42}{:>7}{:>8}{:>12}", f.name, f.group.size, h2, homs));
                rows.push(json!({
                    "name": f.name,
                    "order": f.group.size,
                    "h2_order": h2,
                    "parity_characters": homs,
                }));
            }
            Ok(Done {
                outcome: Value::Array(rows),
                human: lines.join("\n"),
                checks_ok: true,
                artifact: None,
            })
        }
        Cmd::VerifyAll => {
            let criteria = acceptance_criteria();
            let total = criteria.len();
            let results: Mutex<Vec<Option<gfrob_core::verify::Outcome>>> =
                Mutex::new(vec![None; total]);
            let next = AtomicUsize::new(0);
            let workers = cli.jobs.clamp(1, total);
            let errors: Mutex<Vec<String>> = Mutex::new(Vec::new());
            std::thread::scope(|s| {
                for _ in 0..workers {
                    s.spawn(|| loop {
                        let i = next.fetch_add(1, Ordering::SeqCst);
                        if i >= total {
                            break;
                        }
                        match (criteria[i].1)() {
                            Ok(o) => results.lock().unwrap()[i] = Some(o),
                            Err(e) => errors.lock().unwrap().push(format!("{}: {e}", criteria[i].0)),
                        }
                    });
                }
            });
            let errors = errors.into_inner().unwrap();
            if let Some(e) = errors.first() {
                return Err(Failure::Input(e.clone()));
            }
            let outcomes: Vec<gfrob_core::verify::Outcome> =
                results.into_inner().unwrap().into_iter().flatten().collect();
            let ok = outcomes.iter().all(|o| o.passed);
            let human = outcomes
                .iter()
                .map(|o| {
                    format!("{}  {}  [{}]", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail)
                })
                .collect::<Vec<_>>()
                .join("\n");
            let outcome = Value::Array(
                outcomes
                    .iter()
                    .map(|o| json!({"name": o.name, "passed": o.passed, "detail": o.detail}))
                    .collect(),
            );
            Ok(Done {
                artifact: Some(outcome.clone()),
                outcome,
                human,
                checks_ok: ok,
            })
        }
    }
}

fn run_gfa(cmd: &GfaCmd, hashes: &mut Vec<InputHash>) -> CmdResult {
    match cmd {
        GfaCmd::Build { group, alpha, sigma } => {
            let g = parse_group(group)?;
            let sig = sigma.as_deref().map(|s| parse_sigma(&g, s)).transpose()?;
            let a = match alpha {
                None => group_ring(&g, sig.as_ref())?,
                Some(path) => {
                    let c = load_cochain(hashes, path)?;
                    if c.group != g {
                        return Err(Failure::Input(
                            "cocycle group does not match --group".into(),
                        ));
                    }
                    twisted_group_ring(&g, &c, sig.as_ref())?
                }
            };
            algebra_done(&a, format!("algebra of total dimension {}", a.total_dim()))
        }
        GfaCmd::Check { input } => {
            let a = load_algebra(hashes, input)?;
            let ax = check_axioms(&a)?;
            let md = check_module_structures(&a)?;
            let ok = ax.all_passed() && md.all_passed();
            Ok(Done {
                outcome: json!({"axioms": report_json(&ax), "modules": report_json(&md)}),
                human: format!("{ax}{md}"),
                checks_ok: ok,
                artifact: None,
            })
        }
        GfaCmd::Twist { input, alpha, mu, lambda } => {
            let a = load_algebra(hashes, input)?;
            let data = match (alpha, mu, lambda) {
                (Some(path), None, None) => {
                    TwistData::universal(&load_cochain(hashes, path)?)?
                }
                (None, Some(mp), Some(lp)) => TwistData::new(
                    load_cochain(hashes, mp)?,
                    load_cochain(hashes, lp)?,
                )?,
                _ => {
                    return Err(Failure::Input(
                        "pass either --alpha, or both --mu and --lambda".into(),
                    ))
                }
            };
            match twist(&a, &data) {
                Ok(t) => algebra_done(&t, "twist accepted".into()),
                Err(gfrob_core::Error::TwistRejected { eq, witness }) => Ok(Done {
                    outcome: json!({"rejected": {"equation": eq, "witness": witness}}),
                    human: format!("twist rejected by equation {eq} at {witness}"),
                    checks_ok: false,
                    artifact: None,
                }),
                Err(e) => Err(e.into()),
            }
        }
        GfaCmd::Tensor { input, with } => {
            let a = load_algebra(hashes, input)?;
            let b = load_algebra(hashes, with)?;
            let t = tensor(&a, &b)?;
            algebra_done(&t, format!("tensor product of total dimension {}", t.total_dim()))
        }
        GfaCmd::Partition { input } => {
            let a = load_algebra(hashes, input)?;
            let p = partition(&a);
            let entries: Vec<Value> = p
                .entries
                .iter()
                .map(|(g, h, z)| json!({"g": g, "h": h, "value": z.to_string()}))
                .collect();
            let mut human: Vec<String> = p
                .entries
                .iter()
                .filter(|(_, _, z)| !z.is_zero())
                .map(|(g, h, z)| format!("Z[{},{}] = {}", a.group.label(*g), a.group.label(*h), z))
                .collect();
            human.push(format!("total = {}", p.total));
            Ok(Done {
                outcome: json!({"entries": entries, "total": p.total.to_string()}),
                human: human.join("\n"),
                checks_ok: true,
                artifact: None,
            })
        }
        GfaCmd::Canon { input } => {
            let a = load_algebra(hashes, input)?;
            let c = canonicalize_onedim(&a)?;
            let artifact = json!({
                "class": serde_json::to_value(c.class_rep.to_json())?,
                "sigma": c.sigma.images,
            });
            Ok(Done {
                human: format!(
                    "class {} with parity {:?}",
                    if c.class_rep.is_trivial() { "trivial" } else { "nontrivial" },
                    c.sigma.images
                ),
                outcome: artifact.clone(),
                checks_ok: true,
                artifact: Some(artifact),
            })
        }
    }
}

fn build_extension(
    hashes: &mut Vec<InputHash>,
    group: &Option<String>,
    kernel: &Option<u64>,
    cocycle: &Option<PathBuf>,
) -> std::result::Result<CentralExtension, Failure> {
    let alpha = match cocycle {
        Some(path) => {
            let c = load_cochain(hashes, path)?;
            if let Some(spec) = group {
                if *parse_group(spec)? != *c.group {
                    return Err(Failure::Input("cocycle group does not match --group".into()));
                }
            }
            c
        }
        None => {
            let spec = group
                .as_deref()
                .ok_or_else(|| Failure::Input("pass --group (and --kernel) or --cocycle".into()))?;
            let m = kernel.ok_or_else(|| Failure::Input("pass --kernel for the trivial cocycle".into()))?;
            Cochain2::zero(parse_group(spec)?, m)
        }
    };
    Ok(central_extension(&alpha)?)
}

fn run_ext(cmd: &ExtCmd, hashes: &mut Vec<InputHash>) -> CmdResult {
    match cmd {
        ExtCmd::Build { group, kernel, cocycle } => {
            let ext = build_extension(hashes, group, kernel, cocycle)?;
            let artifact = json!({
                "total": serde_json::to_value(&*ext.total)?,
                "base_order": ext.base.size,
                "kernel_order": ext.kernel.size,
                "cocycle": serde_json::to_value(ext.cocycle.to_json())?,
            });
            Ok(Done {
                human: format!(
                    "extension of order {} = {} x {} (as a set)",
                    ext.total.size, ext.kernel.size, ext.base.size
                ),
                outcome: json!({"total_order": ext.total.size, "abelian": ext.total.is_abelian()}),
                checks_ok: true,
                artifact: Some(artifact),
            })
        }
        ExtCmd::Lift { algebra, cocycle, chi } => {
            let a = load_algebra(hashes, algebra)?;
            let c = load_cochain(hashes, cocycle)?;
            if c.group != a.group {
                return Err(Failure::Input("cocycle group does not match the algebra".into()));
            }
            let ext = central_extension(&c)?;
            let m = ext.kernel.size;
            let images: Vec<usize> = (0..m)
                .map(|x| ((*chi).rem_euclid(m as i64) as usize * x) % m)
                .collect();
            let character = GroupHom::new(ext.kernel.clone(), ext.kernel.clone(), images)?;
            let r = verify_lift(&a, &ext, &character)?;
            Ok(Done {
                checks_ok: r.all_passed(),
                human: r.to_string(),
                outcome: report_json(&r),
                artifact: None,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut hashes = Vec::new();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(&cli, &mut hashes) {
        Ok(done) => {
            if let (Some(path), Some(artifact)) = (&cli.out, &done.artifact) {
                if let Err(e) = fs::write(path, serde_json::to_string_pretty(artifact).unwrap()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            let report = RunReport {
                command,
                inputs: hashes,
                outcome: done.outcome,
                wall_ms: start.elapsed().as_millis(),
            };
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).unwrap())
                }
                Format::Table => {
                    println!("{}", done.human);
                    println!("({} ms)", report.wall_ms);
                }
            }
            if done.checks_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
