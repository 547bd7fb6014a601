//! Wall-clock scaling of generation plus paper-faithful degree reduction.

use std::time::{Duration, Instant};

use ktree_core::{build_ktree, random_ktree, reduce_k_tree, Family, GenSpec, Mode};

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub mean: Duration,
}

/// Repetition `r` uses seed `seed + r`.
pub fn run_bench(
    k: usize,
    sizes: &[usize],
    seed: u64,
    repeats: usize,
) -> Result<Vec<BenchRow>, String> {
    if k < 2 {
        return Err(format!("bench needs k >= 2, got {k}"));
    }
    if repeats == 0 {
        return Err("repeats must be at least 1".into());
    }
    if let Some(&bad) = sizes.iter().find(|&&n| n < k + 2) {
        return Err(format!("n={bad} is below k+2={}", k + 2));
    }
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let mut total = Duration::ZERO;
        for r in 0..repeats {
            let spec = GenSpec {
                n,
                k,
                seed: seed.wrapping_add(r as u64),
                family: Family::Random,
            };
            let start = Instant::now();
            let trace = random_ktree(&spec).map_err(|e| e.to_string())?;
            let graph = build_ktree(&trace).map_err(|e| e.to_string())?;
            let (out, _) =
                reduce_k_tree(&graph, k, Mode::PaperFaithful).map_err(|e| e.to_string())?;
            total += start.elapsed();
            std::hint::black_box(out);
        }
        rows.push(BenchRow {
            n,
            mean: total / repeats as u32,
        });
    }
    Ok(rows)
}

pub fn format_table(rows: &[BenchRow]) -> String {
    let mut out = String::from("n\tmean_ms\n");
    for row in rows {
        out.push_str(&format!("{}\t{:.3}\n", row.n, row.mean.as_secs_f64() * 1e3));
    }
    out
}
