// SPDX-License-Identifier: Apache-2.0

use std::io::Write;

use lce_core::apps::{landau_vishkin, maximal_palindromes, tandem_repeats, BinaryRmq};
use lce_core::verifier::fingerprint_draws;
use lce_core::{verify_tau_good, CostCounters, CrossIndex, CrossLce, DifferenceCover, Text, Verdict};
use serde_json::{json, Value};

use crate::backend::{self, default_tau};
use crate::cli::{CoverArgs, MatchArgs, PalindromeArgs, QueryArgs, RepeatArgs, RmqArgs, VerifyArgs, XqueryArgs};
use crate::failure::Failure;
use crate::input;
use crate::output::Emitter;

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Copy)]
pub struct Context {
    pub no_timing: bool,
    pub strip_newline: bool,
    pub stats: bool,
}

impl Context {
    fn summary(&self, record: Value) {
        if self.stats {
            eprintln!("{record}");
        }
    }
}

pub fn query<W: Write>(args: &QueryArgs, ctx: Context, out: &mut Emitter<W>) -> Result<(), Failure> {
    let text = input::load(&args.file, ctx.strip_newline)?;
    let built = backend::single(&text, args.index.algo, args.index.tau, &args.index)?;
    for &(i, j) in &args.pairs {
        let mut cost = CostCounters::default();
        let lce = built.index.lce_with(i, j, &mut cost)?;
        out.emit(json!({
            "algo": args.index.algo.name(),
            "tau": built.tau,
            "i": i,
            "j": j,
            "lce": lce,
            "char_cmps": cost.char_comparisons,
            "fp_cmps": cost.fp_comparisons,
        }))?;
    }
    Ok(())
}

pub fn cover<W: Write>(args: &CoverArgs, out: &mut Emitter<W>) -> Result<(), Failure> {
    let cover = DifferenceCover::build(args.tau)?;
    let elements: Vec<usize> = cover.elements().iter().map(|&d| d as usize).collect();
    // Rebuilding from the raw residues re-runs the exhaustive covering check.
    let verified = DifferenceCover::from_elements(args.tau, &elements).is_ok();
    out.emit(json!({
        "tau": args.tau,
        "size": elements.len(),
        "cover": elements,
        "verified": verified,
    }))
}

pub fn verify<W: Write>(args: &VerifyArgs, ctx: Context, out: &mut Emitter<W>) -> Result<(), Failure> {
    let text = input::load(&args.file, ctx.strip_newline)?;
    if args.attempts == 0 {
        return Err(Failure::Usage("--attempts must be at least 1".into()));
    }
    let mut last = None;
    for (attempt, func) in (1..=args.attempts).zip(fingerprint_draws(backend::modulus(args.modulus), args.seed)) {
        let verdict = verify_tau_good(&text, args.tau, &func)?;
        let accepted = verdict.is_accepted();
        let witness = verdict.witness().copied();
        last = Some(json!({
            "verdict": if accepted { "accepted" } else { "aborted" },
            "tau": args.tau,
            "n": text.len(),
            "modulus": args.modulus.name(),
            "seed": args.seed,
            "base": func.base(),
            "attempts": attempt,
            "witness_i": witness.map(|w| w.i),
            "witness_block": witness.map(|w| w.block_start()),
            "witness_width": witness.map(|w| w.width()),
            "witness_level": witness.map(|w| w.level),
        }));
        if matches!(verdict, Verdict::Accepted) {
            break;
        }
    }
    let record = last.expect("at least one attempt");
    let aborted = record["verdict"] == "aborted";
    out.emit(record)?;
    if aborted {
        return Err(Failure::Aborted(format!("no tau-good fingerprint function in {} attempt(s)", args.attempts)));
    }
    Ok(())
}

pub fn xquery<W: Write>(args: &XqueryArgs, ctx: Context, out: &mut Emitter<W>) -> Result<(), Failure> {
    let pattern = input::load(&args.pattern, ctx.strip_newline)?;
    let text = input::load(&args.file, ctx.strip_newline)?;
    if pattern.is_empty() {
        return Err(lce_core::Error::EmptyText.into());
    }
    let tau = args.tau.unwrap_or_else(|| default_tau(text.len()));
    let inner = backend::inner_kind(&pattern, tau, args.seed, &args.cross);
    let index = CrossIndex::build(&pattern, &text, tau, inner)?;
    for &(i, j) in &args.pairs {
        let mut cost = CostCounters::default();
        let lce = index.cross_lce_with(i, j, &mut cost)?;
        out.emit(json!({
            "tau": tau,
            "inner": args.cross.inner.name(),
            "i": i,
            "j": j,
            "lce": lce,
            "char_cmps": cost.char_comparisons,
            "fp_cmps": cost.fp_comparisons,
            "space_words": index.space_words(),
        }))?;
    }
    Ok(())
}

pub fn matches<W: Write>(args: &MatchArgs, ctx: Context, out: &mut Emitter<W>) -> Result<(), Failure> {
    let pattern = input::load(&args.pattern, ctx.strip_newline)?;
    let text = input::load(&args.file, ctx.strip_newline)?;
    let joined = pattern.concat(&text);
    let built = backend::pair(&pattern, &text, &joined, &args.index, &args.cross)?;
    let mut cost = CostCounters::default();
    let report = landau_vishkin(&built.index, args.k, &mut cost)?;
    for &end in &report.end_positions {
        out.emit(json!({ "end": end }))?;
    }
    ctx.summary(json!({
        "command": "match",
        "algo": args.index.algo.name(),
        "tau": built.tau,
        "m": pattern.len(),
        "n": text.len(),
        "k": args.k,
        "matches": report.end_positions.len(),
        "lce_queries": report.lce_queries,
        "char_cmps": cost.char_comparisons,
        "fp_cmps": cost.fp_comparisons,
    }));
    Ok(())
}

pub fn palindromes<W: Write>(args: &PalindromeArgs, ctx: Context, out: &mut Emitter<W>) -> Result<(), Failure> {
    let text = input::load(&args.file, ctx.strip_newline)?;
    let reversed = text.reversed();
    let joined = text.concat(&reversed);
    let built = backend::pair(&text, &reversed, &joined, &args.index, &args.cross)?;
    let mut cost = CostCounters::default();
    let report = maximal_palindromes(&built.index, &mut cost)?;
    for (c, &len) in report.lengths.iter().enumerate() {
        if len < args.min_len.max(1) {
            continue;
        }
        // Centers alternate: on position p, then between p and p + 1.
        let (left, right) = (c / 2 + 1, c.div_ceil(2) + 1);
        out.emit(json!({
            "center_left": left,
            "center_right": right,
            "start": (c + 3 - len) / 2,
            "length": len,
        }))?;
    }
    ctx.summary(json!({
        "command": "palindromes",
        "algo": args.index.algo.name(),
        "tau": built.tau,
        "n": text.len(),
        "lce_queries": report.lce_queries,
        "char_cmps": cost.char_comparisons,
        "fp_cmps": cost.fp_comparisons,
    }));
    Ok(())
}

pub fn repeats<W: Write>(args: &RepeatArgs, ctx: Context, out: &mut Emitter<W>) -> Result<(), Failure> {
    let text = input::load(&args.file, ctx.strip_newline)?;
    let reversed = text.reversed();
    let forward = backend::single(&text, args.index.algo, args.index.tau, &args.index)?;
    let backward = backend::single(&reversed, args.index.algo, args.index.tau, &args.index)?;
    let mut cost = CostCounters::default();
    let report = tandem_repeats(&forward.index, &backward.index, &mut cost)?;
    for &(start, length) in &report.squares {
        out.emit(json!({ "start": start, "length": length, "period": length / 2 }))?;
    }
    ctx.summary(json!({
        "command": "repeats",
        "algo": args.index.algo.name(),
        "tau": forward.tau,
        "n": text.len(),
        "squares": report.squares.len(),
        "lce_queries": report.lce_queries,
        "char_cmps": cost.char_comparisons,
        "fp_cmps": cost.fp_comparisons,
    }));
    Ok(())
}

pub fn rmq<W: Write>(args: &RmqArgs, ctx: Context, out: &mut Emitter<W>) -> Result<(), Failure> {
    let raw = input::load(&args.file, ctx.strip_newline)?;
    let bits: Text = input::binary(&raw)?;
    let built = backend::single(&bits, args.index.algo, args.index.tau, &args.index)?;
    let rmq = BinaryRmq::new(&bits, built.index)?;
    let mut cost = CostCounters::default();
    for &(l, r) in &args.ranges {
        let pos = rmq.query(l, r, &mut cost)?;
        out.emit(json!({ "l": l, "r": r, "pos": pos, "value": bits.at(pos) }))?;
    }
    ctx.summary(json!({
        "command": "rmq",
        "algo": args.index.algo.name(),
        "tau": built.tau,
        "n": bits.len(),
        "queries": args.ranges.len(),
        "space_words": rmq.space_words(),
        "char_cmps": cost.char_comparisons,
        "fp_cmps": cost.fp_comparisons,
    }));
    Ok(())
}
