// SPDX-License-Identifier: Apache-2.0

//! Traces the time-space trade-off: one record per (algorithm, period).

use std::io::Write;
use std::time::Instant;

use lce_core::{naive_lce, CostCounters, Text};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::backend::{self, default_tau};
use crate::cli::{Algo, BenchArgs, IndexArgs};
use crate::commands::Context;
use crate::failure::Failure;
use crate::input;
use crate::output::{millis, Emitter};

/// Queries cross-checked against the naive scan.
const ORACLE_SAMPLE: usize = 10_000;

pub fn run<W: Write>(args: &BenchArgs, ctx: Context, out: &mut Emitter<W>) -> Result<(), Failure> {
    let text = input::load(&args.file, ctx.strip_newline)?;
    if text.is_empty() {
        return Err(lce_core::Error::EmptyText.into());
    }
    let n = text.len();
    let taus = if args.tau.is_empty() { vec![default_tau(n)] } else { args.tau.clone() };
    let pairs = query_pairs(n, args.queries, args.seed);
    let expected: Vec<usize> = pairs
        .iter()
        .take(ORACLE_SAMPLE)
        .map(|&(i, j)| naive_lce(&text, i, j, &mut CostCounters::default()))
        .collect::<Result<_, _>>()?;

    for &algo in &args.algos {
        if algo == Algo::Cross {
            return Err(Failure::Usage("bench covers single-string algorithms; drop cross from --algos".into()));
        }
        let periods: Vec<Option<usize>> =
            if algo.uses_tau() { taus.iter().copied().map(Some).collect() } else { vec![None] };
        for tau in periods {
            let index_args = IndexArgs { algo, tau, seed: args.seed, modulus: args.modulus, attempts: 16 };
            out.emit(measure(&text, &index_args, &pairs, &expected, ctx.no_timing)?)?;
        }
    }
    Ok(())
}

fn measure(
    text: &Text,
    args: &IndexArgs,
    pairs: &[(usize, usize)],
    expected: &[usize],
    no_timing: bool,
) -> Result<Value, Failure> {
    let started = Instant::now();
    let built = backend::single(text, args.algo, args.tau, args)?;
    let build_time = started.elapsed();

    let mut cost = CostCounters::default();
    let mut answers = Vec::with_capacity(expected.len());
    let started = Instant::now();
    for (q, &(i, j)) in pairs.iter().enumerate() {
        let lce = built.index.lce_with(i, j, &mut cost)?;
        if q < expected.len() {
            answers.push(lce);
        }
    }
    let query_time = started.elapsed();
    let errors = answers.iter().zip(expected).filter(|(a, b)| a != b).count();

    let queries = pairs.len();
    let mean = |total: u64| if queries == 0 { 0.0 } else { total as f64 / queries as f64 };
    let mean_query_ns = if no_timing || queries == 0 {
        Value::Null
    } else {
        Value::from((query_time.as_nanos() as f64 / queries as f64).round())
    };
    Ok(json!({
        "algo": args.algo.name(),
        "tau": built.tau,
        "n": text.len(),
        "build_ms": millis(no_timing, build_time),
        "space_words": built.index.space_words(),
        "queries": queries,
        "mean_query_ns": mean_query_ns,
        "mean_char_cmps": mean(cost.char_comparisons),
        "mean_fp_cmps": mean(cost.fp_comparisons),
        "errors_vs_oracle": errors,
    }))
}

fn query_pairs(n: usize, count: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n))).collect()
}
