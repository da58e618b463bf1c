//! Cartan datum of affine type A^(1)_ℓ.
//!
//! Weights are stored over the basis {Λ_0, …, Λ_ℓ, δ} and root lattice
//! elements over the simple roots {α_0, …, α_ℓ}. Indices are residues modulo
//! ℓ+1 and wrap silently.

use std::fmt;
use std::ops::{Add, AddAssign, Sub};

use num_rational::Rational64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The ℓ of A^(1)_ℓ. The quantum characteristic is `e = ℓ + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "u32")]
pub struct AffineRank(u32);

impl AffineRank {
    pub fn new(ell: i64) -> Result<Self> {
        if ell < 1 || ell > u32::MAX as i64 - 1 {
            return Err(Error::InvalidRank(ell));
        }
        Ok(AffineRank(ell as u32))
    }

    pub fn ell(self) -> u32 {
        self.0
    }

    /// Number of residues, `ℓ + 1`.
    pub fn e(self) -> usize {
        self.0 as usize + 1
    }

    /// Reduces an arbitrary integer to a residue.
    pub fn residue(self, value: i64) -> Residue {
        Residue(value.rem_euclid(self.e() as i64) as usize)
    }

    pub fn residues(self) -> impl Iterator<Item = Residue> {
        (0..self.e()).map(Residue)
    }

    fn check(self, other: AffineRank) -> Result<()> {
        if self != other {
            return Err(Error::RankMismatch {
                expected: self.0,
                found: other.0,
            });
        }
        Ok(())
    }
}

impl TryFrom<i64> for AffineRank {
    type Error = Error;

    fn try_from(value: i64) -> Result<Self> {
        AffineRank::new(value)
    }
}

impl From<AffineRank> for u32 {
    fn from(rank: AffineRank) -> u32 {
        rank.0
    }
}

/// An element of `Z/(ℓ+1)Z`, always stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Residue(usize);

impl Residue {
    pub fn new(value: usize, rank: AffineRank) -> Result<Self> {
        if value >= rank.e() {
            return Err(Error::OutOfRange {
                what: "residue",
                detail: format!("{value} >= {}", rank.e()),
            });
        }
        Ok(Residue(value))
    }

    pub fn value(self) -> usize {
        self.0
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Entry `a_{ij}` of the affine Cartan matrix.
pub fn cartan_entry(rank: AffineRank, i: Residue, j: Residue) -> i64 {
    let e = rank.e();
    let (i, j) = (i.0 % e, j.0 % e);
    if i == j {
        2
    } else if rank.ell() == 1 {
        -2
    } else if (i + 1) % e == j || (j + 1) % e == i {
        -1
    } else {
        0
    }
}

/// Symmetric bilinear form on simple roots; equals the Cartan matrix in type A.
pub fn bilinear(rank: AffineRank, i: Residue, j: Residue) -> i64 {
    cartan_entry(rank, i, j)
}

/// An element `Σ b_i α_i` of the root lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVec {
    coeffs: Vec<i64>,
}

impl RootVec {
    pub fn new(rank: AffineRank, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != rank.e() {
            return Err(Error::LengthMismatch {
                expected: rank.e(),
                found: coeffs.len(),
            });
        }
        Ok(RootVec { coeffs })
    }

    /// Builds a root vector whose rank is inferred from the length.
    pub fn from_coeffs(coeffs: Vec<i64>) -> Result<Self> {
        let rank = AffineRank::new(coeffs.len() as i64 - 1)?;
        RootVec::new(rank, coeffs)
    }

    pub fn zero(rank: AffineRank) -> Self {
        RootVec {
            coeffs: vec![0; rank.e()],
        }
    }

    pub fn simple(rank: AffineRank, i: Residue) -> Self {
        let mut v = RootVec::zero(rank);
        v.coeffs[i.0] = 1;
        v
    }

    pub fn rank(&self) -> AffineRank {
        AffineRank(self.coeffs.len() as u32 - 1)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: Residue) -> i64 {
        self.coeffs[i.0]
    }

    pub fn is_positive_cone(&self) -> bool {
        self.coeffs.iter().all(|&b| b >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&b| b == 0)
    }

    /// Σ b_i; for a positive-cone element this is the number of nodes `n`.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Σ |b_i|.
    pub fn l1_norm(&self) -> i64 {
        self.coeffs.iter().map(|b| b.abs()).sum()
    }

    /// Adds `m · α_i` in place.
    pub fn add_simple(&mut self, i: Residue, m: i64) {
        self.coeffs[i.0] += m;
    }

    /// `self + k·δ`.
    pub fn plus_delta(&self, k: i64) -> RootVec {
        RootVec {
            coeffs: self.coeffs.iter().map(|b| b + k).collect(),
        }
    }

    /// Shifts every index by `t` modulo ℓ+1.
    pub fn rotate(&self, t: i64) -> RootVec {
        let rank = self.rank();
        let mut out = vec![0; rank.e()];
        for (j, &b) in self.coeffs.iter().enumerate() {
            out[rank.residue(j as i64 + t).0] = b;
        }
        RootVec { coeffs: out }
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, b) in self.coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

impl Add for &RootVec {
    type Output = RootVec;

    fn add(self, rhs: &RootVec) -> RootVec {
        assert_eq!(self.coeffs.len(), rhs.coeffs.len(), "rank mismatch");
        RootVec {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl AddAssign<&RootVec> for RootVec {
    fn add_assign(&mut self, rhs: &RootVec) {
        assert_eq!(self.coeffs.len(), rhs.coeffs.len(), "rank mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &RootVec {
    type Output = RootVec;

    fn sub(self, rhs: &RootVec) -> RootVec {
        assert_eq!(self.coeffs.len(), rhs.coeffs.len(), "rank mismatch");
        RootVec {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Serialize for RootVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RootVec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<i64>::deserialize(deserializer)?;
        RootVec::from_coeffs(coeffs).map_err(D::Error::custom)
    }
}

/// A weight `Σ c_j Λ_j + t·δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVec {
    fund: Vec<i64>,
    delta: Rational64,
}

impl WeightVec {
    pub fn new(rank: AffineRank, fund: Vec<i64>) -> Result<Self> {
        if fund.len() != rank.e() {
            return Err(Error::LengthMismatch {
                expected: rank.e(),
                found: fund.len(),
            });
        }
        Ok(WeightVec {
            fund,
            delta: Rational64::from_integer(0),
        })
    }

    pub fn with_delta(mut self, delta: Rational64) -> Self {
        self.delta = delta;
        self
    }

    pub fn zero(rank: AffineRank) -> Self {
        WeightVec {
            fund: vec![0; rank.e()],
            delta: Rational64::from_integer(0),
        }
    }

    /// The fundamental weight Λ_j.
    pub fn fundamental(rank: AffineRank, j: Residue) -> Self {
        let mut w = WeightVec::zero(rank);
        w.fund[j.0] = 1;
        w
    }

    /// Λ_0 + Λ_s (which is 2Λ_0 when s = 0).
    pub fn level_two(rank: AffineRank, s: Residue) -> Self {
        let mut w = WeightVec::fundamental(rank, Residue(0));
        w.fund[s.0] += 1;
        w
    }

    pub fn rank(&self) -> AffineRank {
        AffineRank(self.fund.len() as u32 - 1)
    }

    pub fn fund(&self) -> &[i64] {
        &self.fund
    }

    pub fn delta(&self) -> Rational64 {
        self.delta
    }

    /// Level `Σ c_j`.
    pub fn level(&self) -> i64 {
        self.fund.iter().sum()
    }

    /// ⟨d, Λ - β⟩. Exposed for debugging; no classification reads it.
    pub fn scaling_pairing(&self, beta: &RootVec) -> Result<Rational64> {
        self.rank().check(beta.rank())?;
        Ok(self.delta - Rational64::from_integer(beta.coeffs[0]))
    }

    pub fn rotate(&self, t: i64) -> WeightVec {
        let rank = self.rank();
        let mut out = vec![0; rank.e()];
        for (j, &c) in self.fund.iter().enumerate() {
            out[rank.residue(j as i64 + t).0] = c;
        }
        WeightVec {
            fund: out,
            delta: self.delta,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct WeightVecRepr {
    fund: Vec<i64>,
    delta: String,
}

impl Serialize for WeightVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WeightVecRepr {
            fund: self.fund.clone(),
            delta: format!("{}/{}", self.delta.numer(), self.delta.denom()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeightVec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = WeightVecRepr::deserialize(deserializer)?;
        let rank = AffineRank::new(repr.fund.len() as i64 - 1).map_err(D::Error::custom)?;
        let delta = match repr.delta.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(D::Error::custom)?;
                let q: i64 = q.trim().parse().map_err(D::Error::custom)?;
                if q == 0 {
                    return Err(D::Error::custom("zero denominator"));
                }
                Rational64::new(p, q)
            }
            None => Rational64::from_integer(repr.delta.trim().parse().map_err(D::Error::custom)?),
        };
        Ok(WeightVec::new(rank, repr.fund)
            .map_err(D::Error::custom)?
            .with_delta(delta))
    }
}

/// ⟨h_i, w⟩. The δ part pairs to zero with every coroot.
pub fn pair_coroot(i: Residue, w: &WeightVec) -> i64 {
    w.fund[i.0]
}

/// ⟨h_i, Λ - β⟩ = ⟨h_i, Λ⟩ - Σ_j a_{ij} b_j.
pub fn pair_coroot_drop(i: Residue, lambda: &WeightVec, beta: &RootVec) -> Result<i64> {
    let rank = lambda.rank();
    rank.check(beta.rank())?;
    Ok(pairing_unchecked(rank, i, lambda, beta))
}

pub(crate) fn pairing_unchecked(
    rank: AffineRank,
    i: Residue,
    lambda: &WeightVec,
    beta: &RootVec,
) -> i64 {
    let drop: i64 = beta
        .coeffs
        .iter()
        .enumerate()
        .map(|(j, &b)| cartan_entry(rank, i, Residue(j)) * b)
        .sum();
    lambda.fund[i.0] - drop
}

/// Returns β′ with `Λ - β′ = r_i(Λ - β)`.
pub fn simple_reflection(i: Residue, lambda: &WeightVec, beta: &RootVec) -> Result<RootVec> {
    let p = pair_coroot_drop(i, lambda, beta)?;
    let mut out = beta.clone();
    out.coeffs[i.0] += p;
    Ok(out)
}

pub fn null_root(rank: AffineRank) -> RootVec {
    RootVec {
        coeffs: vec![1; rank.e()],
    }
}

/// Applies the Dynkin rotation `σ^t: i ↦ i + t` to both the weight and the root vector.
pub fn dynkin_rotate(t: i64, lambda: &WeightVec, beta: &RootVec) -> (WeightVec, RootVec) {
    (lambda.rotate(t), beta.rotate(t))
}

/// Largest valid `i` for `lambda_rep(s, i)`.
pub fn lambda_rep_max_i(s: usize, rank: AffineRank) -> usize {
    (rank.ell() as usize + 1).saturating_sub(s) / 2
}

/// Largest valid `i` for `mu_rep(s, i)`; the range is empty when this is 0.
pub fn mu_rep_max_i(s: usize) -> usize {
    s / 2
}

fn check_s(s: usize, rank: AffineRank) -> Result<()> {
    if s > rank.ell() as usize {
        return Err(Error::OutOfRange {
            what: "s",
            detail: format!("s = {s} exceeds ell = {}", rank.ell()),
        });
    }
    Ok(())
}

/// The orbit representative λ^s_i.
pub fn lambda_rep(s: usize, i: usize, rank: AffineRank) -> Result<RootVec> {
    check_s(s, rank)?;
    if i > lambda_rep_max_i(s, rank) {
        return Err(Error::OutOfRange {
            what: "lambda_rep i",
            detail: format!(
                "i = {i} with s = {s}, ell = {} requires 2i <= ell - s + 1",
                rank.ell()
            ),
        });
    }
    let mut out = RootVec::zero(rank);
    if i == 0 {
        return Ok(out);
    }
    let (s_, i_, ell) = (s as i64, i as i64, rank.ell() as i64);
    for k in 0..=s_ {
        out.add_simple(rank.residue(k), i_);
    }
    for k in 1..i_ {
        out.add_simple(rank.residue(s_ + k), i_ - k);
        out.add_simple(rank.residue(ell - i_ + 1 + k), k);
    }
    Ok(out)
}

/// The orbit representative μ^s_i.
pub fn mu_rep(s: usize, i: usize, rank: AffineRank) -> Result<RootVec> {
    check_s(s, rank)?;
    if i < 1 || i > mu_rep_max_i(s) {
        return Err(Error::OutOfRange {
            what: "mu_rep i",
            detail: format!("i = {i} with s = {s} requires 1 <= i <= s/2"),
        });
    }
    let (s_, i_, ell) = (s as i64, i as i64, rank.ell() as i64);
    let mut out = RootVec::zero(rank);
    for k in 0..i_ {
        out.add_simple(rank.residue(k), i_ - k);
    }
    for k in 1..i_ {
        out.add_simple(rank.residue(s_ - i_ + k), k);
    }
    for k in 1..=(ell - s_ + 1) {
        out.add_simple(rank.residue(s_ - 1 + k), i_);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(ell: i64) -> AffineRank {
        AffineRank::new(ell).unwrap()
    }

    fn r(v: usize) -> Residue {
        Residue(v)
    }

    #[test]
    fn cartan_examples() {
        assert_eq!(cartan_entry(rank(3), r(0), r(3)), -1);
        assert_eq!(cartan_entry(rank(1), r(0), r(1)), -2);
        assert_eq!(cartan_entry(rank(4), r(0), r(2)), 0);
        assert_eq!(bilinear(rank(4), r(0), r(0)), 2);
        assert_eq!(bilinear(rank(2), r(0), r(1)), -1);
        assert_eq!(bilinear(rank(1), r(0), r(1)), -2);
    }

    #[test]
    fn rows_sum_to_zero() {
        for ell in 1..=8 {
            let rk = rank(ell);
            for i in rk.residues() {
                let row: i64 = rk.residues().map(|j| cartan_entry(rk, i, j)).sum();
                let col: i64 = rk.residues().map(|j| cartan_entry(rk, j, i)).sum();
                assert_eq!((row, col), (0, 0), "ell = {ell}, i = {i}");
            }
        }
    }

    #[test]
    fn rank_validation() {
        assert_eq!(AffineRank::new(0), Err(Error::InvalidRank(0)));
        assert!(Residue::new(4, rank(3)).is_err());
        assert_eq!(rank(3).residue(-1), r(3));
    }

    #[test]
    fn pairing_examples() {
        let rk = rank(4);
        let l0 = WeightVec::fundamental(rk, r(0));
        assert_eq!(pair_coroot(r(0), &l0), 1);
        let lam = WeightVec::level_two(rk, r(0));
        let delta = null_root(rk);
        for i in rk.residues() {
            assert_eq!(
                pair_coroot_drop(i, &WeightVec::zero(rk), &delta).unwrap(),
                0
            );
            assert_eq!(
                pair_coroot_drop(i, &lam, &delta).unwrap(),
                pair_coroot(i, &lam)
            );
        }
        let lam = WeightVec::level_two(rk, r(1));
        let beta = RootVec::new(rk, vec![1, 1, 0, 0, 0]).unwrap();
        assert_eq!(pair_coroot_drop(r(2), &lam, &beta).unwrap(), 1);
    }

    #[test]
    fn pairing_rank_mismatch() {
        let lam = WeightVec::level_two(rank(3), r(1));
        let beta = RootVec::zero(rank(4));
        assert_eq!(
            pair_coroot_drop(r(0), &lam, &beta),
            Err(Error::RankMismatch {
                expected: 3,
                found: 4
            })
        );
        assert!(simple_reflection(r(0), &lam, &beta).is_err());
    }

    #[test]
    fn reflection_examples() {
        let rk = rank(4);
        let lam = WeightVec::level_two(rk, r(1));
        let b = simple_reflection(r(0), &lam, &RootVec::zero(rk)).unwrap();
        assert_eq!(b, RootVec::simple(rk, r(0)));
        // ⟨h_3, Λ_0 + Λ_1⟩ = 0 is a fixed point.
        assert_eq!(
            simple_reflection(r(3), &lam, &RootVec::zero(rk)).unwrap(),
            RootVec::zero(rk)
        );

        let rk = rank(1);
        let lam = WeightVec::level_two(rk, r(1));
        let b = simple_reflection(r(1), &lam, &RootVec::simple(rk, r(0))).unwrap();
        assert_eq!(b.coeffs(), &[1, 3]);
    }

    #[test]
    fn null_root_examples() {
        assert_eq!(null_root(rank(1)).coeffs(), &[1, 1]);
        assert_eq!(null_root(rank(4)).coeffs(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn rotation_examples() {
        let rk = rank(4);
        let lam = WeightVec::new(rk, vec![1, 0, 1, 0, 0]).unwrap();
        let beta = RootVec::new(rk, vec![1, 1, 0, 0, 0]).unwrap();
        let (l2, b2) = dynkin_rotate(1, &lam, &beta);
        assert_eq!(l2.fund(), &[0, 1, 0, 1, 0]);
        assert_eq!(b2.coeffs(), &[0, 1, 1, 0, 0]);
        let (l5, b5) = dynkin_rotate(5, &lam, &beta);
        assert_eq!((l5, b5), (lam, beta));
    }

    #[test]
    fn representative_examples() {
        assert_eq!(
            lambda_rep(1, 1, rank(4)).unwrap().coeffs(),
            &[1, 1, 0, 0, 0]
        );
        for s in 0..=4 {
            assert!(lambda_rep(s, 0, rank(4)).unwrap().is_zero());
        }
        assert_eq!(
            lambda_rep(1, 2, rank(5)).unwrap().coeffs(),
            &[2, 2, 1, 0, 0, 1]
        );
        assert_eq!(mu_rep(2, 1, rank(3)).unwrap().coeffs(), &[1, 0, 1, 1]);
    }

    #[test]
    fn representative_ranges_are_strict() {
        assert!(lambda_rep(1, 3, rank(4)).is_err());
        assert!(lambda_rep(5, 0, rank(4)).is_err());
        assert!(mu_rep(1, 1, rank(4)).is_err());
        assert!(mu_rep(4, 0, rank(4)).is_err());
        assert!(mu_rep(4, 3, rank(4)).is_err());
        assert!(mu_rep(4, 2, rank(4)).is_ok());
    }

    #[test]
    fn propagation_identities() {
        for ell in 1..=8i64 {
            let rk = rank(ell);
            let delta = null_root(rk);
            for s in 1..=ell as usize {
                for i in 1..=lambda_rep_max_i(s, rk) {
                    let (s_, i_) = (s as i64, i as i64);
                    let mut lhs = lambda_rep(s, i, rk).unwrap();
                    for j in (s_ + i_)..=(ell - i_ + 1) {
                        lhs.add_simple(rk.residue(j), 1);
                    }
                    let rhs = &lambda_rep(s, i - 1, rk).unwrap() + &delta;
                    assert_eq!(lhs, rhs, "identity 1, ell={ell} s={s} i={i}");
                }
                for i in 0..lambda_rep_max_i(s, rk) {
                    let (s_, i_) = (s as i64, i as i64);
                    let mut lhs = lambda_rep(s, i, rk).unwrap();
                    for j in (s_ + 1)..=(s_ + i_) {
                        lhs.add_simple(rk.residue(j), 1);
                    }
                    for j in (ell - i_ + 1)..=(ell + s_) {
                        lhs.add_simple(rk.residue(j), 1);
                    }
                    lhs.add_simple(rk.residue(s_), 1);
                    assert_eq!(
                        lhs,
                        lambda_rep(s, i + 1, rk).unwrap(),
                        "identity 2, ell={ell} s={s} i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn serde_shapes() {
        let rk = rank(2);
        let beta = RootVec::new(rk, vec![1, 0, 2]).unwrap();
        assert_eq!(serde_json::to_string(&beta).unwrap(), "[1,0,2]");
        assert!(serde_json::from_str::<RootVec>("[1]").is_err());
        let w = WeightVec::level_two(rk, r(1)).with_delta(Rational64::new(1, 2));
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"fund":[1,1,0],"delta":"1/2"}"#);
        assert_eq!(serde_json::from_str::<WeightVec>(&json).unwrap(), w);
    }

    #[test]
    fn scaling_pairing_reads_alpha_zero() {
        let rk = rank(2);
        let w = WeightVec::level_two(rk, r(1)).with_delta(Rational64::new(3, 2));
        let beta = RootVec::new(rk, vec![1, 1, 1]).unwrap();
        assert_eq!(w.scaling_pairing(&beta).unwrap(), Rational64::new(1, 2));
    }
}
