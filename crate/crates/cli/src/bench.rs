use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use pancake_core::generators::{gen_pi2, GenConfig};
use pancake_core::graphs::DEFAULT_ORACLE_CAP;

use crate::commands::{emit, solve_instance, tolerance, MethodArg};
use crate::CliError;

#[derive(Args)]
pub struct BenchArgs {
    /// Object counts, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub seeds: Vec<u64>,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [MethodArg::Geometric, MethodArg::Robust])]
    pub methods: Vec<MethodArg>,
    /// Output CSV; stdout when omitted.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Serialize)]
struct Row {
    kind: &'static str,
    n_objects: usize,
    seed: u64,
    method: &'static str,
    size: Option<usize>,
    elapsed_ms: Option<f64>,
    /// `true`/`false`, or a note when the method was skipped.
    validated: String,
}

/// Bench instances keep the density roughly constant: two thirds unit
/// disks, one third pancakes, in a box whose width grows with the count.
pub fn bench_config(n: usize, seed: u64) -> GenConfig {
    let n_disks = (2 * n).div_ceil(3);
    GenConfig {
        seed,
        n_disks,
        n_pancakes: n - n_disks,
        box_size: ((n as f64 / 2.0).max(4.0), 4.0),
        margin: 1e-6,
        max_rejections: 100_000,
        ..GenConfig::default()
    }
}

pub fn run(a: BenchArgs) -> Result<(), CliError> {
    let tol = tolerance()?;
    let mut methods = a.methods.clone();
    methods.sort();
    methods.dedup();
    let mut sizes = a.sizes.clone();
    sizes.sort_unstable();
    sizes.dedup();
    let mut seeds = a.seeds.clone();
    seeds.sort_unstable();
    seeds.dedup();
    let mut rows = Vec::new();
    for &n in &sizes {
        for &seed in &seeds {
            let inst = gen_pi2(&bench_config(n, seed)).map_err(|e| CliError::Internal(e.to_string()))?;
            // rows sort by method name
            let mut ms = methods.clone();
            ms.sort_by_key(|m| m.name());
            for m in ms {
                if m == MethodArg::Oracle && n > DEFAULT_ORACLE_CAP {
                    rows.push(Row {
                        kind: "pi2",
                        n_objects: n,
                        seed,
                        method: m.name(),
                        size: None,
                        elapsed_ms: None,
                        validated: format!("skipped: above oracle cap {DEFAULT_ORACLE_CAP}"),
                    });
                    continue;
                }
                let (r, finding) = solve_instance(&inst, m, true, tol)?;
                let ok = finding.is_none() && r.clique.is_some();
                rows.push(Row {
                    kind: "pi2",
                    n_objects: n,
                    seed,
                    method: m.name(),
                    size: r.clique.as_ref().map(Vec::len),
                    elapsed_ms: Some(r.elapsed_ms),
                    validated: ok.to_string(),
                });
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &rows {
        w.serialize(r).map_err(|e| CliError::Internal(e.to_string()))?;
    }
    if rows.is_empty() {
        w.write_record(["kind", "n_objects", "seed", "method", "size", "elapsed_ms", "validated"])
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Internal(e.to_string()))?;
    emit(a.csv.as_deref(), &String::from_utf8(bytes).expect("csv is utf-8"))
}
