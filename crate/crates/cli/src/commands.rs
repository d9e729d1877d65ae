use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use pancake_core::cneeo::{clique_from_cneeo, geometric_cneeo_ordering, greedy_cneeo, is_valid_cneeo, CliqueMethod};
use pancake_core::generators::{gen_pi2, gen_pseudodisk_triple, GenConfig, ModeBias};
use pancake_core::geometry::Tolerance;
use pancake_core::graphs::max_clique_bruteforce;
use pancake_core::instance::{Instance, InstanceKind};
use pancake_core::pseudodisk::{build_bipartition, classify_middle_mode, verify_bipartition, MiddleMode};
use pancake_core::transversal::{middle_profile, TransversalReport, DEFAULT_RESOLUTION};

use crate::{CliError, EPS_ENV};

/// Predicate tolerance, from the environment when set.
pub fn tolerance() -> Result<Tolerance, CliError> {
    match std::env::var(EPS_ENV) {
        Ok(s) => s
            .parse::<f64>()
            .ok()
            .and_then(|eps| Tolerance::new(eps).ok())
            .ok_or_else(|| CliError::Usage(format!("{EPS_ENV} must be a positive number, got {s:?}"))),
        Err(_) => Ok(Tolerance::default()),
    }
}

pub fn read_instance(path: &Path) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(Instance::from_json(&text)?)
}

/// Writes `text` to `out`, or to stdout when no path is given.
pub fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Pi2,
    Pseudodisk,
}

#[derive(Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0)]
    pub n_disks: usize,
    #[arg(long, default_value_t = 0)]
    pub n_pancakes: usize,
    #[arg(long, default_value_t = 0)]
    pub n_family: usize,
    /// Placement box as `WIDTH,HEIGHT`.
    #[arg(long = "box", value_parser = parse_box)]
    pub box_size: Option<(f64, f64)>,
    #[arg(long, default_value_t = 1e-6)]
    pub margin: f64,
    /// Middle mode of the pseudo-disk triple: no_transversal, one_middle,
    /// two_middles or all_three.
    #[arg(long)]
    pub mode: Option<ModeBias>,
    /// Mean spine length of generated pancakes.
    #[arg(long, default_value_t = 1.5)]
    pub pancake_mean: f64,
    #[arg(long, default_value_t = 10_000)]
    pub max_rejections: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_box(s: &str) -> Result<(f64, f64), String> {
    let (w, h) = s.split_once(',').ok_or("expected WIDTH,HEIGHT")?;
    let w: f64 = w.trim().parse().map_err(|e| format!("width: {e}"))?;
    let h: f64 = h.trim().parse().map_err(|e| format!("height: {e}"))?;
    Ok((w, h))
}

pub fn gen(a: GenArgs) -> Result<(), CliError> {
    let default_box = match a.kind {
        KindArg::Pi2 => GenConfig::default().box_size,
        KindArg::Pseudodisk => (10.0, 10.0),
    };
    let cfg = GenConfig {
        seed: a.seed,
        box_size: a.box_size.unwrap_or(default_box),
        margin: a.margin,
        n_disks: a.n_disks,
        n_pancakes: a.n_pancakes,
        n_family: a.n_family,
        pancake_mean_len: a.pancake_mean,
        max_rejections: a.max_rejections,
        mode: a.mode,
        ..GenConfig::default()
    };
    cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let inst = match a.kind {
        KindArg::Pi2 => gen_pi2(&cfg),
        KindArg::Pseudodisk => gen_pseudodisk_triple(&cfg),
    }
    .map_err(|e| CliError::Internal(e.to_string()))?;
    emit(a.out.as_deref(), &inst.to_json()?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum MethodArg {
    Geometric,
    Robust,
    Oracle,
}

impl MethodArg {
    pub fn name(self) -> &'static str {
        match self {
            MethodArg::Geometric => "geometric",
            MethodArg::Robust => "robust",
            MethodArg::Oracle => "oracle",
        }
    }
}

#[derive(Args)]
pub struct SolveArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = MethodArg::Geometric)]
    pub method: MethodArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Re-check every position of the ordering used.
    #[arg(long)]
    pub validate: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub remaining_edges: Vec<(usize, usize)>,
    pub odd_cycle: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    pub method: String,
    pub clique: Option<Vec<usize>>,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    /// Whether `--validate` confirmed the ordering; absent otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validated: Option<bool>,
    pub elapsed_ms: f64,
}

/// Runs one method. Orderings are validated when `validate` is set, and
/// the clique or certificate is always re-checked against the graph;
/// failures of either come back as a finding alongside the result.
pub fn solve_instance(
    inst: &Instance,
    method: MethodArg,
    validate: bool,
    tol: Tolerance,
) -> Result<(ResultFile, Option<String>), CliError> {
    if inst.kind != InstanceKind::Pi2 {
        return Err(CliError::Usage("solve expects a pi2 instance".into()));
    }
    let g = inst.graph(tol)?;
    let start = Instant::now();
    let mut finding = None;
    let mut certificate = None;
    let mut validated = None;
    let clique = match method {
        MethodArg::Geometric => {
            if !inst.has_geometry() {
                return Err(CliError::Usage("the geometric method needs objects, not a bare graph".into()));
            }
            let ordering = geometric_cneeo_ordering(&inst.objects, tol).map_err(|e| CliError::Usage(e.to_string()))?;
            if validate {
                let ok = is_valid_cneeo(&g, &ordering);
                if let Err(e) = &ok {
                    finding = Some(format!("geometric ordering: {e}"));
                }
                validated = Some(ok.is_ok());
            }
            match clique_from_cneeo(&g, &ordering, CliqueMethod::Geometric) {
                Ok(r) => Some(r.vertices),
                Err(e) => {
                    finding = Some(format!("geometric ordering: {e}"));
                    None
                }
            }
        }
        MethodArg::Robust => match greedy_cneeo(&g) {
            Ok(ordering) => {
                if validate {
                    let ok = is_valid_cneeo(&g, &ordering);
                    if let Err(e) = &ok {
                        finding = Some(format!("greedy ordering: {e}"));
                    }
                    validated = Some(ok.is_ok());
                }
                let r = clique_from_cneeo(&g, &ordering, CliqueMethod::Robust)
                    .map_err(|e| CliError::Internal(format!("greedy ordering rejected: {e}")))?;
                Some(r.vertices)
            }
            Err(failure) => {
                if !failure.verify(&g) {
                    finding = Some("certificate does not verify".into());
                }
                certificate = Some(Certificate {
                    remaining_edges: failure.remaining.clone(),
                    odd_cycle: failure.certificate.cycle.clone(),
                });
                None
            }
        },
        MethodArg::Oracle => Some(max_clique_bruteforce(&g).map_err(|e| CliError::Internal(e.to_string()))?),
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    if let Some(c) = &clique {
        if !g.is_clique(c) {
            finding = Some(format!("reported clique {c:?} is not a clique"));
        }
    }
    let result = ResultFile {
        method: method.name().into(),
        size: clique.as_ref().map_or(0, Vec::len),
        clique,
        certificate,
        validated,
        elapsed_ms,
    };
    Ok((result, finding))
}

pub fn solve(a: SolveArgs) -> Result<(), CliError> {
    let tol = tolerance()?;
    let inst = read_instance(&a.input)?;
    let (result, finding) = solve_instance(&inst, a.method, a.validate, tol)?;
    emit(a.out.as_deref(), &to_json(&result)?)?;
    match finding {
        Some(f) => Err(CliError::Finding(f)),
        None => Ok(()),
    }
}

#[derive(Args)]
pub struct TransversalArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Number of sampled directions in [0, π).
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    pub samples: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct TransversalOutput {
    mode: MiddleMode,
    #[serde(flatten)]
    report: TransversalReport,
}

pub fn transversal(a: TransversalArgs) -> Result<(), CliError> {
    if a.samples < 8 {
        return Err(CliError::Usage("--samples must be at least 8".into()));
    }
    let inst = read_instance(&a.input)?;
    let (triple, _, _) = inst.triple_and_family()?;
    let report = middle_profile(&triple.convex_sets(), a.samples);
    let out = TransversalOutput {
        mode: classify_middle_mode(&triple, a.samples),
        report,
    };
    emit(a.out.as_deref(), &to_json(&out)?)
}

#[derive(Args)]
pub struct PartitionArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    pub samples: usize,
}

/// Object indices of the two cliques.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct PartitionFile {
    pub x1: Vec<usize>,
    pub x2: Vec<usize>,
    #[serde(rename = "verified")]
    pub verified: bool,
    #[serde(rename = "mode")]
    pub mode: MiddleMode,
}

pub fn partition(a: PartitionArgs) -> Result<(), CliError> {
    let tol = tolerance()?;
    let inst = read_instance(&a.input)?;
    let (triple, family, index) = inst.triple_and_family()?;
    let b = build_bipartition(&triple, &family, a.samples)?;
    let verified = verify_bipartition(&family, &b.x1, &b.x2, tol);
    let out = PartitionFile {
        x1: b.x1.iter().map(|&k| index[k]).collect(),
        x2: b.x2.iter().map(|&k| index[k]).collect(),
        verified,
        mode: b.mode,
    };
    emit(a.out.as_deref(), &to_json(&out)?)?;
    if verified {
        Ok(())
    } else {
        Err(CliError::Finding("the two parts are not both cliques".into()))
    }
}
