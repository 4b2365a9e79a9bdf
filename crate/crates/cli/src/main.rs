// SPDX-License-Identifier: Apache-2.0

mod backend;
mod bench;
mod cli;
mod commands;
mod failure;
mod input;
mod output;

use std::io::{self, BufWriter};
use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command};
use commands::Context;
use failure::Failure;
use output::Emitter;

fn run(cli: Cli) -> Result<(), Failure> {
    let ctx = Context { no_timing: cli.no_timing, strip_newline: cli.strip_newline, stats: cli.stats };
    let mut out = Emitter::new(cli.format, BufWriter::new(io::stdout().lock()));
    let result = match &cli.command {
        Command::Query(a) => commands::query(a, ctx, &mut out),
        Command::Cover(a) => commands::cover(a, &mut out),
        Command::Verify(a) => commands::verify(a, ctx, &mut out),
        Command::Xquery(a) => commands::xquery(a, ctx, &mut out),
        Command::Match(a) => commands::matches(a, ctx, &mut out),
        Command::Palindromes(a) => commands::palindromes(a, ctx, &mut out),
        Command::Repeats(a) => commands::repeats(a, ctx, &mut out),
        Command::Rmq(a) => commands::rmq(a, ctx, &mut out),
        Command::Bench(a) => bench::run(a, ctx, &mut out),
    };
    // Records written before a failure (such as an abort witness) still go out.
    out.finish()?;
    result
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
