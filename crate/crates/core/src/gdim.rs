//! Graded dimensions `dim_q e(ν′) R^Λ(n) e(ν) = Σ_λ K_q(λ, ν′) K_q(λ, ν)`.
//!
//! `K_q(λ, ν)` sums `q^{deg T}` over standard bitableaux of shape `λ` with
//! residue sequence `ν`. Rather than walking `ST(λ)` for every `λ`, the
//! engine grows all shapes at once along `ν`, adding only nodes of the
//! prescribed residue; equal shapes merge after every step.

use std::collections::BTreeMap;
use std::fmt;

use log::warn;
use serde::{Deserialize, Serialize};

use crate::cartan::{AffineRank, Residue, RootVec};
use crate::error::{Error, Result};
use crate::fock::{
    addable_nodes, added_node_degree, content, Bipartition, DegreeConvention, FockContext,
};
use crate::qpoly::QPoly;

/// A residue sequence `ν = (ν_1, …, ν_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ResidueSeq(Vec<Residue>);

impl ResidueSeq {
    /// Reduces every entry modulo ℓ+1.
    pub fn new(rank: AffineRank, values: &[i64]) -> Self {
        ResidueSeq(values.iter().map(|&v| rank.residue(v)).collect())
    }

    pub fn from_residues(residues: Vec<Residue>) -> Self {
        ResidueSeq(residues)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn residues(&self) -> &[Residue] {
        &self.0
    }

    pub fn content(&self, rank: AffineRank) -> RootVec {
        let mut out = RootVec::zero(rank);
        for &i in &self.0 {
            out.add_simple(i, 1);
        }
        out
    }

    /// Parses `"0,1,0,1"`, or `"0101"` when every residue is a single digit.
    pub fn parse(rank: AffineRank, text: &str) -> Result<Self> {
        let text = text.trim().trim_start_matches('(').trim_end_matches(')');
        if text.is_empty() {
            return Ok(ResidueSeq(Vec::new()));
        }
        let values: Vec<i64> = if text.contains(',') || text.contains(' ') {
            text.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(i64::from)
                        .ok_or_else(|| Error::Parse(format!("{c:?} in {text:?}")))
                })
                .collect::<Result<_>>()?
        };
        if let Some(v) = values.iter().find(|&&v| v < 0 || v >= rank.e() as i64) {
            return Err(Error::OutOfRange {
                what: "residue",
                detail: format!("{v} not in 0..={}", rank.ell()),
            });
        }
        Ok(ResidueSeq::new(rank, &values))
    }
}

impl fmt::Display for ResidueSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `λ ↦ K_q(λ, ν)` for every bipartition with a nonzero entry.
pub fn kostka_vector(ctx: &FockContext, nu: &ResidueSeq) -> BTreeMap<Bipartition, QPoly> {
    kostka_vector_with(ctx, nu, DegreeConvention::default())
}

pub fn kostka_vector_with(
    ctx: &FockContext,
    nu: &ResidueSeq,
    conv: DegreeConvention,
) -> BTreeMap<Bipartition, QPoly> {
    grow(ctx, nu, conv, |_| true)
}

fn grow(
    ctx: &FockContext,
    nu: &ResidueSeq,
    conv: DegreeConvention,
    inside: impl Fn(&crate::fock::Node) -> bool,
) -> BTreeMap<Bipartition, QPoly> {
    let mut layer = BTreeMap::new();
    layer.insert(Bipartition::empty(), QPoly::one());
    for &i in nu.residues() {
        let mut next: BTreeMap<Bipartition, QPoly> = BTreeMap::new();
        for (lam, poly) in &layer {
            for x in addable_nodes(ctx, lam, i) {
                if !inside(&x) {
                    continue;
                }
                let d = added_node_degree(ctx, lam, x, conv);
                let grown = lam.add(x).expect("addable node");
                *next.entry(grown).or_default() += &poly.shift(d as i32);
            }
        }
        layer = next;
        if layer.is_empty() {
            break;
        }
    }
    layer
}

/// `K_q(λ, ν)`.
pub fn kostka_q(ctx: &FockContext, lambda: &Bipartition, nu: &ResidueSeq) -> Result<QPoly> {
    if nu.len() != lambda.size() {
        return Err(Error::LengthMismatch {
            expected: lambda.size(),
            found: nu.len(),
        });
    }
    let layer = grow(ctx, nu, DegreeConvention::default(), |x| {
        lambda.contains(*x)
    });
    Ok(layer.get(lambda).cloned().unwrap_or_default())
}

fn pair_kostka(a: &BTreeMap<Bipartition, QPoly>, b: &BTreeMap<Bipartition, QPoly>) -> QPoly {
    let mut out = QPoly::zero();
    for (lam, p) in a {
        if let Some(r) = b.get(lam) {
            out += &(p * r);
        }
    }
    out
}

/// `dim_q e(ν′) R^Λ(n) e(ν)`. Zero when the lengths or contents differ.
pub fn graded_dim(ctx: &FockContext, nu_prime: &ResidueSeq, nu: &ResidueSeq) -> QPoly {
    if nu_prime.len() != nu.len() || nu_prime.content(ctx.rank()) != nu.content(ctx.rank()) {
        return QPoly::zero();
    }
    pair_kostka(&kostka_vector(ctx, nu_prime), &kostka_vector(ctx, nu))
}

/// Ungraded `dim e(ν′) R^Λ(n) e(ν)`.
pub fn ungraded_dim(ctx: &FockContext, nu_prime: &ResidueSeq, nu: &ResidueSeq) -> i64 {
    graded_dim(ctx, nu_prime, nu).eval_one()
}

/// Graded dimensions between a list of idempotents of one block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimMatrix {
    pub idempotents: Vec<ResidueSeq>,
    pub entries: Vec<Vec<QPoly>>,
}

impl DimMatrix {
    pub fn size(&self) -> usize {
        self.idempotents.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &QPoly {
        &self.entries[i][j]
    }

    /// Entrywise value at `q = 1`.
    pub fn ungraded(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(QPoly::eval_one).collect())
            .collect()
    }
}

impl fmt::Display for DimMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.idempotents.iter().map(|nu| format!("e{nu}")).collect();
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|p| p.to_string()).collect())
            .collect();
        let label_w = labels.iter().map(String::len).max().unwrap_or(0);
        let mut widths: Vec<usize> = labels.iter().map(String::len).collect();
        for row in &cells {
            for (j, c) in row.iter().enumerate() {
                widths[j] = widths[j].max(c.len());
            }
        }
        write!(f, "{:label_w$}", "")?;
        for (j, l) in labels.iter().enumerate() {
            write!(f, "  {:>w$}", l, w = widths[j])?;
        }
        writeln!(f)?;
        for (i, row) in cells.iter().enumerate() {
            write!(f, "{:label_w$}", labels[i])?;
            for (j, c) in row.iter().enumerate() {
                write!(f, "  {:>w$}", c, w = widths[j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The matrix of `graded_dim` over `idems`, all of which must have content `β`.
pub fn dim_matrix(ctx: &FockContext, beta: &RootVec, idems: &[ResidueSeq]) -> Result<DimMatrix> {
    dim_matrix_with(ctx, beta, idems, DegreeConvention::default())
}

pub fn dim_matrix_with(
    ctx: &FockContext,
    beta: &RootVec,
    idems: &[ResidueSeq],
    conv: DegreeConvention,
) -> Result<DimMatrix> {
    for (index, nu) in idems.iter().enumerate() {
        let c = nu.content(ctx.rank());
        if &c != beta {
            return Err(Error::ContentMismatch {
                index,
                expected: beta.coeffs().to_vec(),
                found: c.coeffs().to_vec(),
            });
        }
    }
    let vectors: Vec<_> = idems
        .iter()
        .map(|nu| kostka_vector_with(ctx, nu, conv))
        .collect();
    let n = idems.len();
    let mut entries = vec![vec![QPoly::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let p = pair_kostka(&vectors[i], &vectors[j]);
            entries[j][i] = p.clone();
            entries[i][j] = p;
        }
        if !entries[i][i].is_palindromic() {
            warn!(
                "diagonal entry for e{} is not palindromic: {}",
                idems[i], entries[i][i]
            );
        }
    }
    Ok(DimMatrix {
        idempotents: idems.to_vec(),
        entries,
    })
}

/// Every `ν ∈ I^β` that occurs as the residue sequence of a standard
/// bitableau, in lexicographic order.
pub fn nonzero_idempotents(ctx: &FockContext, beta: &RootVec) -> Vec<ResidueSeq> {
    let rank = ctx.rank();
    if !beta.is_positive_cone() {
        return Vec::new();
    }
    let mut remaining: Vec<i64> = beta.coeffs().to_vec();
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    let mut start = std::collections::BTreeSet::new();
    start.insert(Bipartition::empty());
    search(ctx, rank, &start, &mut remaining, &mut prefix, &mut out);
    out
}

fn search(
    ctx: &FockContext,
    rank: AffineRank,
    shapes: &std::collections::BTreeSet<Bipartition>,
    remaining: &mut [i64],
    prefix: &mut Vec<Residue>,
    out: &mut Vec<ResidueSeq>,
) {
    if remaining.iter().all(|&b| b == 0) {
        out.push(ResidueSeq(prefix.clone()));
        return;
    }
    for i in rank.residues() {
        if remaining[i.value()] == 0 {
            continue;
        }
        let next: std::collections::BTreeSet<Bipartition> = shapes
            .iter()
            .flat_map(|lam| {
                addable_nodes(ctx, lam, i)
                    .into_iter()
                    .map(move |x| lam.add(x).expect("addable"))
            })
            .collect();
        if next.is_empty() {
            continue;
        }
        remaining[i.value()] -= 1;
        prefix.push(i);
        search(ctx, rank, &next, remaining, prefix, out);
        prefix.pop();
        remaining[i.value()] += 1;
    }
}

/// Bipartitions of `|β|` with residue content `β`.
pub fn block_bipartitions(ctx: &FockContext, beta: &RootVec) -> Vec<Bipartition> {
    if !beta.is_positive_cone() {
        return Vec::new();
    }
    Bipartition::all_for(ctx, beta.height() as usize)
        .into_iter()
        .filter(|lam| &content(ctx, lam) == beta)
        .collect()
}

/// Number of standard tableaux of a partition, by the hook length formula.
pub fn standard_count_partition(parts: &[usize]) -> u128 {
    let n: usize = parts.iter().sum();
    let mut num: u128 = (1..=n as u128).product();
    let mut hooks: u128 = 1;
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = parts[r + 1..].iter().take_while(|&&p| p > c).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    num /= hooks;
    num
}

/// `|ST(λ)| = binom(n, |λ⁽¹⁾|) · f^{λ⁽¹⁾} · f^{λ⁽²⁾}`.
pub fn standard_count(lambda: &Bipartition) -> u128 {
    let (a, b) = (lambda.component(1), lambda.component(2));
    let na: usize = a.iter().sum();
    let n = lambda.size();
    let binom = (0..na).fold(1u128, |acc, j| acc * (n - j) as u128 / (j + 1) as u128);
    binom * standard_count_partition(a) * standard_count_partition(b)
}

/// `dim R^Λ(β) = Σ_λ |ST(λ)|²` over the block.
pub fn ungraded_block_dim(ctx: &FockContext, beta: &RootVec) -> u128 {
    block_bipartitions(ctx, beta)
        .iter()
        .map(|lam| standard_count(lam).pow(2))
        .sum()
}

/// Loops and arrow lower bounds read off degree-two coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverBound {
    pub loops: Vec<i64>,
    /// `arrows[i][j]` is a lower bound on arrows `i → j`; the diagonal is 0.
    pub arrows: Vec<Vec<i64>>,
    pub wild: bool,
}

/// Requires every entry to be `δ_ij + c_ij q² + q³·(nonnegative)`; vertex `i`
/// then carries `c_ii` loops and there are at least `c_ij` arrows `i → j`.
/// Flags wildness when two vertices are joined both ways and one of them has
/// at least two loops.
#[allow(clippy::needless_range_loop)]
pub fn quiver_bounds(m: &DimMatrix) -> Result<QuiverBound> {
    let n = m.size();
    let mut loops = vec![0; n];
    let mut arrows = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let p = m.get(i, j);
            if !p.is_nonnegative() || p.min_degree().is_some_and(|d| d < 0) {
                return Err(Error::QuiverShape(format!(
                    "entry ({i},{j}) = {p} is not a nonnegative polynomial"
                )));
            }
            let expected = i64::from(i == j);
            if p.coeff(0) != expected {
                return Err(Error::QuiverShape(format!(
                    "entry ({i},{j}) = {p} has constant term != {expected}"
                )));
            }
            if p.coeff(1) != 0 {
                return Err(Error::QuiverShape(format!(
                    "entry ({i},{j}) = {p} has a degree-one term"
                )));
            }
            if i == j {
                loops[i] = p.coeff(2);
            } else {
                arrows[i][j] = p.coeff(2);
            }
        }
    }
    let mut wild = false;
    for i in 0..n {
        for j in 0..n {
            if i != j && arrows[i][j] >= 1 && arrows[j][i] >= 1 && loops[i].max(loops[j]) >= 2 {
                wild = true;
            }
        }
    }
    Ok(QuiverBound {
        loops,
        arrows,
        wild,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::null_root;
    use crate::fock::{enumerate_standard, tableau_stats};

    fn ctx(ell: i64, s: usize) -> FockContext {
        FockContext::level_two(ell, s).unwrap()
    }

    fn seq(c: &FockContext, s: &str) -> ResidueSeq {
        ResidueSeq::parse(c.rank(), s).unwrap()
    }

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    /// Oracle: walk every standard tableau of `lambda`.
    fn kostka_oracle(c: &FockContext, lambda: &Bipartition, nu: &ResidueSeq) -> QPoly {
        let mut out = QPoly::zero();
        for t in enumerate_standard(c, lambda) {
            let (deg, res) = tableau_stats(c, &t).unwrap();
            if res == nu.residues() {
                out.add_term(1, deg as i32);
            }
        }
        out
    }

    #[test]
    fn residue_seq_parsing() {
        let c = ctx(3, 1);
        assert_eq!(seq(&c, "0101").len(), 4);
        assert_eq!(seq(&c, "0,1,3"), ResidueSeq::new(c.rank(), &[0, 1, 3]));
        assert!(ResidueSeq::parse(c.rank(), "0,4").is_err());
        assert!(seq(&c, "").is_empty());
        assert_eq!(seq(&c, "0,1").to_string(), "(0,1)");
    }

    #[test]
    fn kostka_examples() {
        let c = ctx(1, 1);
        assert_eq!(
            kostka_q(&c, &Bipartition::empty(), &seq(&c, "")).unwrap(),
            QPoly::one()
        );
        let lam: Bipartition = "1|1".parse().unwrap();
        // ((1),(1)) has residues 0 (first) and 1 (second); content mismatch with (0,0).
        assert!(kostka_q(&c, &lam, &seq(&c, "00")).unwrap().is_zero());
        // Single tableau with residue sequence (0,1): 1 then the second component.
        // Adding (2,1,1) after (1,1,1): nothing of residue 1 below it.
        assert_eq!(
            kostka_q(&c, &lam, &seq(&c, "01")).unwrap(),
            kostka_oracle(&c, &lam, &seq(&c, "01"))
        );
        assert_eq!(kostka_q(&c, &lam, &seq(&c, "01")).unwrap(), QPoly::one());
        assert!(kostka_q(&c, &lam, &seq(&c, "0")).is_err());
    }

    #[test]
    fn kostka_matches_tableau_oracle() {
        for (ell, s) in [(1, 1), (1, 0), (2, 1), (2, 0), (3, 2)] {
            let c = ctx(ell, s);
            for n in 0..=5 {
                let mut seqs: Vec<Vec<i64>> = vec![vec![]];
                for _ in 0..n {
                    seqs = seqs
                        .into_iter()
                        .flat_map(|v| {
                            (0..=ell).map(move |i| {
                                let mut w = v.clone();
                                w.push(i);
                                w
                            })
                        })
                        .collect();
                }
                for lam in Bipartition::all_of_size(n) {
                    for v in &seqs {
                        let nu = ResidueSeq::new(c.rank(), v);
                        assert_eq!(
                            kostka_q(&c, &lam, &nu).unwrap(),
                            kostka_oracle(&c, &lam, &nu),
                            "ell={ell} s={s} lam={lam} nu={nu}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn delta_block_ell_one() {
        let c = ctx(1, 1);
        let (a, b) = (seq(&c, "01"), seq(&c, "10"));
        assert_eq!(graded_dim(&c, &a, &a), p("1+q^2+q^4"));
        assert_eq!(graded_dim(&c, &b, &b), p("1+q^2+q^4"));
        assert_eq!(graded_dim(&c, &a, &b), p("q^2"));
        let d = null_root(c.rank());
        assert_eq!(nonzero_idempotents(&c, &d), vec![a, b]);
    }

    #[test]
    fn graded_dim_of_wrong_content_is_zero() {
        let c = ctx(2, 1);
        assert!(graded_dim(&c, &seq(&c, "01"), &seq(&c, "02")).is_zero());
        assert!(graded_dim(&c, &seq(&c, "01"), &seq(&c, "012")).is_zero());
    }

    #[test]
    fn dim_matrix_checks_content() {
        let c = ctx(2, 1);
        let beta = RootVec::new(c.rank(), vec![1, 1, 0]).unwrap();
        let err = dim_matrix(&c, &beta, &[seq(&c, "01"), seq(&c, "02")]).unwrap_err();
        assert!(matches!(err, Error::ContentMismatch { index: 1, .. }));
        let m = dim_matrix(&c, &beta, &[seq(&c, "01")]).unwrap();
        assert_eq!(m.size(), 1);
    }

    #[test]
    fn empty_block() {
        let c = ctx(3, 2);
        let zero = RootVec::zero(c.rank());
        assert_eq!(nonzero_idempotents(&c, &zero), vec![ResidueSeq(vec![])]);
        assert_eq!(block_bipartitions(&c, &zero), vec![Bipartition::empty()]);
        assert_eq!(ungraded_block_dim(&c, &zero), 1);
        let m = dim_matrix(&c, &zero, &nonzero_idempotents(&c, &zero)).unwrap();
        assert_eq!(m.entries, vec![vec![QPoly::one()]]);
    }

    #[test]
    fn block_bipartitions_by_scan() {
        // ℓ = 1, s = 1: every one of the five bipartitions of 2 has content δ.
        let c = ctx(1, 1);
        let d = null_root(c.rank());
        assert_eq!(block_bipartitions(&c, &d).len(), 5);
        let c = ctx(3, 1);
        let a0 = RootVec::simple(c.rank(), Residue::new(0, c.rank()).unwrap());
        assert_eq!(block_bipartitions(&c, &a0), vec!["1|".parse().unwrap()]);
    }

    #[test]
    fn hook_counts_match_enumeration() {
        let c = ctx(2, 1);
        for n in 0..=6 {
            for lam in Bipartition::all_of_size(n) {
                assert_eq!(
                    standard_count(&lam),
                    enumerate_standard(&c, &lam).count() as u128
                );
            }
        }
    }

    #[test]
    fn lambda_one_idempotents() {
        // β = α_0 + α_1 with s = 1: sequences (0,1) and (1,0).
        let c = ctx(3, 1);
        let beta = crate::cartan::lambda_rep(1, 1, c.rank()).unwrap();
        let idems = nonzero_idempotents(&c, &beta);
        assert_eq!(idems, vec![seq(&c, "01"), seq(&c, "10")]);
    }

    #[test]
    fn quiver_bound_examples() {
        let mk = |d: &str, o: &str| DimMatrix {
            idempotents: vec![ResidueSeq(vec![]), ResidueSeq(vec![])],
            entries: vec![vec![p(d), p(o)], vec![p(o), p(d)]],
        };
        let q = quiver_bounds(&mk("1+2q^2+q^4", "q^2")).unwrap();
        assert_eq!(q.loops, vec![2, 2]);
        assert_eq!(q.arrows, vec![vec![0, 1], vec![1, 0]]);
        assert!(q.wild);

        let q = quiver_bounds(&mk("1+q^2+q^4", "q^2")).unwrap();
        assert_eq!(q.loops, vec![1, 1]);
        assert!(!q.wild);

        let q = quiver_bounds(&mk("1", "0")).unwrap();
        assert_eq!((q.loops, q.wild), (vec![0, 0], false));
        assert_eq!(q.arrows, vec![vec![0, 0], vec![0, 0]]);

        assert!(matches!(
            quiver_bounds(&mk("1+q^2", "q")),
            Err(Error::QuiverShape(_))
        ));
        assert!(matches!(
            quiver_bounds(&mk("2+q^2", "q^2")),
            Err(Error::QuiverShape(_))
        ));
        assert!(matches!(
            quiver_bounds(&mk("1", "q^-2")),
            Err(Error::QuiverShape(_))
        ));
    }
}
