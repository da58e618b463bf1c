//! Weyl-orbit reduction for weights of level-two (and level-one) highest weight modules.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{
    lambda_rep, lambda_rep_max_i, mu_rep, mu_rep_max_i, null_root, pairing_unchecked, AffineRank,
    Residue, RootVec, WeightVec,
};
use crate::error::{Error, Result};
use crate::fock::FockContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Lambda,
    Mu,
}

/// A label `λ^s_i + kδ` or `μ^s_i + kδ` for the orbit of `Λ − β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalRep {
    pub family: Family,
    pub s: usize,
    pub i: usize,
    pub k: u64,
}

impl CanonicalRep {
    pub fn lambda(s: usize, i: usize, k: u64) -> Self {
        CanonicalRep {
            family: Family::Lambda,
            s,
            i,
            k,
        }
    }

    pub fn mu(s: usize, i: usize, k: u64) -> Self {
        CanonicalRep {
            family: Family::Mu,
            s,
            i,
            k,
        }
    }

    /// Checks the index ranges against a rank.
    pub fn validate(&self, rank: AffineRank) -> Result<()> {
        let ok = self.s <= rank.ell() as usize
            && match self.family {
                Family::Lambda => self.i <= lambda_rep_max_i(self.s, rank),
                Family::Mu => self.i >= 1 && self.i <= mu_rep_max_i(self.s),
            };
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                what: "canonical representative",
                detail: format!("{self} with ell = {}", rank.ell()),
            })
        }
    }

    /// The root vector `rep + kδ`.
    pub fn root(&self, rank: AffineRank) -> Result<RootVec> {
        let base = match self.family {
            Family::Lambda => lambda_rep(self.s, self.i, rank)?,
            Family::Mu => mu_rep(self.s, self.i, rank)?,
        };
        Ok(base.plus_delta(self.k as i64))
    }
}

impl fmt::Display for CanonicalRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::Lambda => "lambda",
            Family::Mu => "mu",
        };
        write!(f, "{name}^{}_{}", self.s, self.i)?;
        match self.k {
            0 => Ok(()),
            1 => write!(f, " + delta"),
            k => write!(f, " + {k} delta"),
        }
    }
}

fn check_rank(ctx: &FockContext, beta: &RootVec) -> Result<()> {
    if beta.rank() != ctx.rank() {
        return Err(Error::RankMismatch {
            expected: ctx.ell(),
            found: beta.rank().ell(),
        });
    }
    Ok(())
}

fn reduction_cap(beta: &RootVec) -> usize {
    10 * beta.coeffs().len() * (beta.l1_norm() as usize + 1)
}

/// Reflects `Λ − β` into the dominant chamber, always using the smallest index with
/// negative pairing. Returns the dominant `β⁺` and the number of reflections used.
pub fn dominant_reduce_with(lambda: &WeightVec, beta: &RootVec) -> Result<(RootVec, usize)> {
    if lambda.rank() != beta.rank() {
        return Err(Error::RankMismatch {
            expected: lambda.rank().ell(),
            found: beta.rank().ell(),
        });
    }
    let rank = beta.rank();
    let cap = reduction_cap(beta);
    let mut cur = beta.clone();
    let mut steps = 0;
    'outer: loop {
        for i in rank.residues() {
            let p = pairing_unchecked(rank, i, lambda, &cur);
            if p < 0 {
                if steps == cap {
                    return Err(Error::IterationCap { cap });
                }
                cur.add_simple(i, p);
                steps += 1;
                continue 'outer;
            }
        }
        return Ok((cur, steps));
    }
}

pub fn dominant_reduce(ctx: &FockContext, beta: &RootVec) -> Result<RootVec> {
    check_rank(ctx, beta)?;
    dominant_reduce_with(&ctx.highest_weight(), beta).map(|(b, _)| b)
}

/// Whether `Λ − β` is a weight of the irreducible module of highest weight `Λ`.
pub fn is_weight(ctx: &FockContext, beta: &RootVec) -> Result<bool> {
    Ok(dominant_reduce(ctx, beta)?.is_positive_cone())
}

/// The orbit label of `Λ − β`. Errors with `NotAWeight` when the weight space is zero.
pub fn canonical_rep(ctx: &FockContext, beta: &RootVec) -> Result<CanonicalRep> {
    let plus = dominant_reduce(ctx, beta)?;
    if !plus.is_positive_cone() {
        return Err(Error::NotAWeight(beta.clone()));
    }
    let rank = ctx.rank();
    let s = ctx.s();
    let kmax = plus.coeffs().iter().copied().min().unwrap_or(0);
    for k in (0..=kmax).rev() {
        let rest = plus.plus_delta(-k);
        for i in 0..=lambda_rep_max_i(s, rank) {
            if lambda_rep(s, i, rank)? == rest {
                return Ok(CanonicalRep::lambda(s, i, k as u64));
            }
        }
        for i in 1..=mu_rep_max_i(s) {
            if mu_rep(s, i, rank)? == rest {
                return Ok(CanonicalRep::mu(s, i, k as u64));
            }
        }
    }
    Err(Error::NoRepresentative(plus))
}

/// All `β′` with `Λ − β′ = w(Λ − β)` for words `w` of length at most `radius`,
/// restricted to the positive cone.
pub fn weyl_orbit_bfs(
    ctx: &FockContext,
    beta: &RootVec,
    radius: usize,
) -> Result<BTreeSet<RootVec>> {
    check_rank(ctx, beta)?;
    let rank = ctx.rank();
    let lambda = ctx.highest_weight();
    let mut seen = BTreeSet::from([beta.clone()]);
    let mut queue = VecDeque::from([(beta.clone(), 0usize)]);
    while let Some((cur, depth)) = queue.pop_front() {
        if depth == radius {
            continue;
        }
        for i in rank.residues() {
            let p = pairing_unchecked(rank, i, &lambda, &cur);
            if p == 0 {
                continue;
            }
            let mut next = cur.clone();
            next.add_simple(i, p);
            if seen.insert(next.clone()) {
                queue.push_back((next, depth + 1));
            }
        }
    }
    seen.retain(|b| b.is_positive_cone());
    Ok(seen)
}

/// One step of an addition sequence: the simple root added and the pairing seen before adding it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PropagationStep {
    pub residue: usize,
    pub pairing: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropagationTrace {
    pub steps: Vec<PropagationStep>,
    pub endpoint: RootVec,
    pub expected: RootVec,
}

impl PropagationTrace {
    pub fn holds(&self) -> bool {
        self.endpoint == self.expected && self.steps.iter().all(|st| st.pairing >= 1)
    }
}

fn run_sequence(
    ctx: &FockContext,
    start: RootVec,
    seq: &[i64],
    expected: RootVec,
) -> PropagationTrace {
    let rank = ctx.rank();
    let lambda = ctx.highest_weight();
    let mut cur = start;
    let mut steps = Vec::with_capacity(seq.len());
    for &j in seq {
        let r: Residue = rank.residue(j);
        steps.push(PropagationStep {
            residue: r.value(),
            pairing: pairing_unchecked(rank, r, &lambda, &cur),
        });
        cur.add_simple(r, 1);
    }
    PropagationTrace {
        steps,
        endpoint: cur,
        expected,
    }
}

/// Adds `α_{s+i}, …, α_{ℓ−i+1}` to `λ^s_i + kδ`, which should land on `λ^s_{i−1} + (k+1)δ`.
pub fn propagation_trace_1(ctx: &FockContext, i: usize, k: u64) -> Result<PropagationTrace> {
    let rank = ctx.rank();
    let s = ctx.s();
    if i < 1 || i > lambda_rep_max_i(s, rank) {
        return Err(Error::OutOfRange {
            what: "propagation i",
            detail: format!("i = {i} needs 1 <= i <= {}", lambda_rep_max_i(s, rank)),
        });
    }
    let (s_, i_, ell) = (s as i64, i as i64, ctx.ell() as i64);
    let start = lambda_rep(s, i, rank)?.plus_delta(k as i64);
    let seq: Vec<i64> = (s_ + i_..=ell - i_ + 1).collect();
    let expected = lambda_rep(s, i - 1, rank)?.plus_delta(k as i64 + 1);
    Ok(run_sequence(ctx, start, &seq, expected))
}

/// Adds `α_{s+i}, …, α_{s+1}`, then `α_{ℓ−i+1}, …, α_{ℓ+s}` (indices mod ℓ+1), then `α_s`
/// to `λ^s_i + kδ`, which should land on `λ^s_{i+1} + kδ`.
pub fn propagation_trace_2(ctx: &FockContext, i: usize, k: u64) -> Result<PropagationTrace> {
    let rank = ctx.rank();
    let s = ctx.s();
    if i + 1 > lambda_rep_max_i(s, rank) {
        return Err(Error::OutOfRange {
            what: "propagation i",
            detail: format!("i = {i} needs i + 1 <= {}", lambda_rep_max_i(s, rank)),
        });
    }
    let (s_, i_, ell) = (s as i64, i as i64, ctx.ell() as i64);
    let start = lambda_rep(s, i, rank)?.plus_delta(k as i64);
    let mut seq: Vec<i64> = (s_ + 1..=s_ + i_).rev().collect();
    seq.extend(ell - i_ + 1..=ell + s_);
    seq.push(s_);
    let expected = lambda_rep(s, i + 1, rank)?.plus_delta(k as i64);
    Ok(run_sequence(ctx, start, &seq, expected))
}

pub fn propagation_check_1(ctx: &FockContext, i: usize, k: u64) -> Result<bool> {
    Ok(propagation_trace_1(ctx, i, k)?.holds())
}

pub fn propagation_check_2(ctx: &FockContext, i: usize, k: u64) -> Result<bool> {
    Ok(propagation_trace_2(ctx, i, k)?.holds())
}

/// For a level-one context, the `k` with `Λ_0 − β` in the orbit of `Λ_0 − kδ`.
pub fn level_one_defect(ctx: &FockContext, beta: &RootVec) -> Result<u64> {
    let plus = dominant_reduce(ctx, beta)?;
    let k = plus.coeff(ctx.rank().residue(0));
    if k >= 0 && plus == null_root(ctx.rank()).plus_delta(k - 1) {
        Ok(k as u64)
    } else {
        Err(Error::NotAWeight(beta.clone()))
    }
}
