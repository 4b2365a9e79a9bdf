// SPDX-License-Identifier: Apache-2.0

//! Builds the index selected on the command line behind a trait object.

use lce_core::verifier::build_verified_index_with;
use lce_core::{
    ConcatCross, CrossIndex, CrossLce, DcLceIndex, FingerprintFn, FpLceIndex, FullLceOracle, InnerKind, LceIndex,
    Modulus, NaiveCross, NaiveLce, Text,
};

use crate::cli::{Algo, CrossArgs, IndexArgs, InnerAlgo, ModulusArg};
use crate::failure::Failure;

pub fn default_tau(n: usize) -> usize {
    ((n as f64).sqrt().ceil() as usize).clamp(1, n.max(1))
}

pub fn modulus(m: ModulusArg) -> Modulus {
    match m {
        ModulusArg::Mersenne61 => Modulus::MERSENNE_61,
        ModulusArg::Small => Modulus::SMALL,
    }
}

pub struct Single<'t> {
    pub index: Box<dyn LceIndex + 't>,
    /// Period in effect, or `None` for algorithms without one.
    pub tau: Option<usize>,
}

pub fn single<'t>(text: &'t Text, algo: Algo, tau: Option<usize>, args: &IndexArgs) -> Result<Single<'t>, Failure> {
    if text.is_empty() {
        return Err(lce_core::Error::EmptyText.into());
    }
    let tau = algo.uses_tau().then(|| tau.unwrap_or_else(|| default_tau(text.len())));
    let index: Box<dyn LceIndex + 't> = match algo {
        Algo::Naive => Box::new(NaiveLce::new(text)),
        Algo::Full => Box::new(FullLceOracle::build(text)?),
        Algo::Dc => Box::new(DcLceIndex::build(text, tau.unwrap_or(1))?),
        Algo::Fp => {
            let func = FingerprintFn::random(modulus(args.modulus), args.seed);
            Box::new(FpLceIndex::build(text, tau.unwrap_or(1), func)?)
        }
        Algo::FpVerified => {
            let built =
                build_verified_index_with(text, tau.unwrap_or(1), args.seed, modulus(args.modulus), args.attempts)?;
            Box::new(built.index)
        }
        Algo::Cross => {
            return Err(Failure::Usage("--algo cross only applies to match and palindromes".into()));
        }
    };
    Ok(Single { index, tau })
}

pub struct Pair<'a> {
    pub index: Box<dyn CrossLce + 'a>,
    pub tau: Option<usize>,
}

/// Cross LCE between `pattern` and `text`; `joined` must be their concatenation.
pub fn pair<'a>(
    pattern: &'a Text,
    text: &'a Text,
    joined: &'a Text,
    args: &IndexArgs,
    cross: &CrossArgs,
) -> Result<Pair<'a>, Failure> {
    if pattern.is_empty() || text.is_empty() {
        return Err(lce_core::Error::EmptyText.into());
    }
    match args.algo {
        Algo::Naive => Ok(Pair { index: Box::new(NaiveCross::new(pattern, text)), tau: None }),
        Algo::Cross => {
            let tau = args.tau.unwrap_or_else(|| default_tau(text.len()));
            let inner = inner_kind(pattern, tau, args.seed, cross);
            Ok(Pair { index: Box::new(CrossIndex::build(pattern, text, tau, inner)?), tau: Some(tau) })
        }
        algo => {
            let built = single(joined, algo, args.tau, args)?;
            Ok(Pair { index: Box::new(ConcatCross::new(built.index, pattern.len(), text.len())), tau: built.tau })
        }
    }
}

pub fn inner_kind(pattern: &Text, tau: usize, seed: u64, cross: &CrossArgs) -> InnerKind {
    let inner_tau = cross.inner_tau.unwrap_or(tau).clamp(1, pattern.len().max(1));
    match cross.inner {
        InnerAlgo::Naive => InnerKind::Naive,
        InnerAlgo::Dc => InnerKind::Dc { tau: inner_tau },
        InnerAlgo::FpVerified => InnerKind::FpVerified { tau: inner_tau, seed },
    }
}
