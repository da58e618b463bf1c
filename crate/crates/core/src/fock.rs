//! The q-deformed Fock space on I-colored bipartitions.
//!
//! A node of the first component at row `r`, column `c` has residue `c - r`;
//! a node of the second component has residue `c - r + s`. Every node of the
//! first component lies above every node of the second, and within a
//! component a larger row is lower. In level one the second component is
//! always empty.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cartan::{AffineRank, Residue, RootVec, WeightVec};
use crate::error::{Error, Result};
use crate::qpoly::QPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Level {
    One,
    Two,
}

/// Rank, charge `s` and level; fixes the highest weight Λ_0 + Λ_s (or Λ_0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FockContext {
    rank: AffineRank,
    s: Residue,
    level: Level,
}

impl FockContext {
    pub fn new(rank: AffineRank, s: usize, level: Level) -> Result<Self> {
        let s = Residue::new(s, rank).map_err(|_| Error::OutOfRange {
            what: "s",
            detail: format!("s = {s} must satisfy 0 <= s <= ell = {}", rank.ell()),
        })?;
        if level == Level::One && s.value() != 0 {
            return Err(Error::OutOfRange {
                what: "s",
                detail: "level one contexts have s = 0".into(),
            });
        }
        Ok(FockContext { rank, s, level })
    }

    pub fn level_two(ell: i64, s: usize) -> Result<Self> {
        FockContext::new(AffineRank::new(ell)?, s, Level::Two)
    }

    pub fn level_one(ell: i64) -> Result<Self> {
        FockContext::new(AffineRank::new(ell)?, 0, Level::One)
    }

    pub fn rank(&self) -> AffineRank {
        self.rank
    }

    pub fn ell(&self) -> u32 {
        self.rank.ell()
    }

    pub fn s(&self) -> usize {
        self.s.value()
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn highest_weight(&self) -> WeightVec {
        match self.level {
            Level::One => WeightVec::fundamental(self.rank, Residue::new(0, self.rank).unwrap()),
            Level::Two => WeightVec::level_two(self.rank, self.s),
        }
    }

    fn components(&self) -> std::ops::RangeInclusive<u8> {
        match self.level {
            Level::One => 1..=1,
            Level::Two => 1..=2,
        }
    }

    pub fn residue(&self, x: Node) -> Residue {
        let base = x.col as i64 - x.row as i64;
        match x.component {
            1 => self.rank.residue(base),
            _ => self.rank.residue(base + self.s.value() as i64),
        }
    }

    fn admits(&self, lambda: &Bipartition) -> bool {
        self.level == Level::Two || lambda.comps[1].is_empty()
    }
}

/// A box `(component, row, col)`, all 1-based. The derived order is the
/// top-to-bottom order on nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub component: u8,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(component: u8, row: usize, col: usize) -> Self {
        Node {
            component,
            row,
            col,
        }
    }
}

impl Serialize for Node {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.component, self.row, self.col).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Node {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (component, row, col) = <(u8, usize, usize)>::deserialize(deserializer)?;
        if !(1..=2).contains(&component) || row == 0 || col == 0 {
            return Err(D::Error::custom("node must be (1|2, row >= 1, col >= 1)"));
        }
        Ok(Node {
            component,
            row,
            col,
        })
    }
}

/// An ordered pair of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bipartition {
    comps: [Vec<usize>; 2],
}

fn check_partition(parts: &[usize]) -> Result<()> {
    if parts.contains(&0) {
        return Err(Error::InvalidBipartition(format!(
            "{parts:?} has a zero part"
        )));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidBipartition(format!(
            "{parts:?} is not weakly decreasing"
        )));
    }
    Ok(())
}

impl Bipartition {
    pub fn new(comp1: Vec<usize>, comp2: Vec<usize>) -> Result<Self> {
        check_partition(&comp1)?;
        check_partition(&comp2)?;
        Ok(Bipartition {
            comps: [comp1, comp2],
        })
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    pub fn component(&self, k: u8) -> &[usize] {
        &self.comps[k as usize - 1]
    }

    pub fn size(&self) -> usize {
        self.comps.iter().flatten().sum()
    }

    pub fn contains(&self, x: Node) -> bool {
        x.row > 0 && x.col > 0 && self.row_len(x.component, x.row) >= x.col
    }

    fn row_len(&self, component: u8, row: usize) -> usize {
        if row == 0 {
            return usize::MAX;
        }
        self.comps[component as usize - 1]
            .get(row - 1)
            .copied()
            .unwrap_or(0)
    }

    /// Nodes in top-to-bottom, left-to-right order.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        (1..=2u8).flat_map(move |k| {
            self.comps[k as usize - 1]
                .iter()
                .enumerate()
                .flat_map(move |(r, &len)| (1..=len).map(move |c| Node::new(k, r + 1, c)))
        })
    }

    /// Whether `x` can be added to give another bipartition.
    pub fn is_addable(&self, x: Node) -> bool {
        if x.row == 0 || x.col == 0 {
            return false;
        }
        self.row_len(x.component, x.row) + 1 == x.col
            && self.row_len(x.component, x.row - 1) >= x.col
    }

    /// Whether `x` can be removed to give another bipartition.
    pub fn is_removable(&self, x: Node) -> bool {
        if x.row == 0 || x.col == 0 {
            return false;
        }
        self.row_len(x.component, x.row) == x.col && self.row_len(x.component, x.row + 1) < x.col
    }

    fn with_added(&self, x: Node) -> Bipartition {
        let mut out = self.clone();
        let comp = &mut out.comps[x.component as usize - 1];
        if comp.len() < x.row {
            comp.push(0);
        }
        comp[x.row - 1] += 1;
        out
    }

    fn with_removed(&self, x: Node) -> Bipartition {
        let mut out = self.clone();
        let comp = &mut out.comps[x.component as usize - 1];
        comp[x.row - 1] -= 1;
        if comp[x.row - 1] == 0 {
            comp.pop();
        }
        out
    }

    /// Adds an addable node.
    pub fn add(&self, x: Node) -> Result<Bipartition> {
        if !self.is_addable(x) {
            return Err(Error::InvalidBipartition(format!(
                "{x:?} is not addable to {self}"
            )));
        }
        Ok(self.with_added(x))
    }

    /// Removes a removable node.
    pub fn remove(&self, x: Node) -> Result<Bipartition> {
        if !self.is_removable(x) {
            return Err(Error::InvalidBipartition(format!(
                "{x:?} is not removable from {self}"
            )));
        }
        Ok(self.with_removed(x))
    }

    fn corners(&self, components: std::ops::RangeInclusive<u8>) -> (Vec<Node>, Vec<Node>) {
        let mut addable = Vec::new();
        let mut removable = Vec::new();
        for k in components {
            let parts = &self.comps[k as usize - 1];
            for r in 1..=parts.len() + 1 {
                let x = Node::new(k, r, self.row_len(k, r) + 1);
                if self.is_addable(x) {
                    addable.push(x);
                }
                if r <= parts.len() {
                    let y = Node::new(k, r, parts[r - 1]);
                    if self.is_removable(y) {
                        removable.push(y);
                    }
                }
            }
        }
        (addable, removable)
    }

    /// All bipartitions of `n`, in a fixed order.
    pub fn all_of_size(n: usize) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in 0..=n {
            let firsts = partitions(k);
            let seconds = partitions(n - k);
            for a in &firsts {
                for b in &seconds {
                    out.push(Bipartition {
                        comps: [a.clone(), b.clone()],
                    });
                }
            }
        }
        out
    }

    /// Bipartitions of `n` admitted by the context (second component empty in level one).
    pub fn all_for(ctx: &FockContext, n: usize) -> Vec<Bipartition> {
        match ctx.level {
            Level::Two => Bipartition::all_of_size(n),
            Level::One => partitions(n)
                .into_iter()
                .map(|p| Bipartition {
                    comps: [p, Vec::new()],
                })
                .collect(),
        }
    }
}

/// Partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |p: &[usize]| {
            if p.is_empty() {
                "-".to_string()
            } else {
                p.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            }
        };
        write!(f, "({} | {})", part(&self.comps[0]), part(&self.comps[1]))
    }
}

/// Parses `"2,1|1"`; either side may be empty or `-`.
impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = s.split_once('|').unwrap_or((s, ""));
        let parse = |t: &str| -> Result<Vec<usize>> {
            let t = t.trim();
            if t.is_empty() || t == "-" {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("{x:?}: {e}")))
                })
                .collect()
        };
        Bipartition::new(parse(a)?, parse(b)?)
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.comps.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Bipartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[Vec<usize>; 2]>::deserialize(deserializer)?;
        Bipartition::new(a, b).map_err(D::Error::custom)
    }
}

pub fn residue(ctx: &FockContext, x: Node) -> Residue {
    ctx.residue(x)
}

/// Addable `i`-nodes, top to bottom.
pub fn addable_nodes(ctx: &FockContext, lambda: &Bipartition, i: Residue) -> Vec<Node> {
    let (add, _) = lambda.corners(ctx.components());
    add.into_iter().filter(|&x| ctx.residue(x) == i).collect()
}

/// Removable `i`-nodes, top to bottom.
pub fn removable_nodes(ctx: &FockContext, lambda: &Bipartition, i: Residue) -> Vec<Node> {
    let (_, rem) = lambda.corners(ctx.components());
    rem.into_iter().filter(|&x| ctx.residue(x) == i).collect()
}

/// (#addable i-nodes, #removable i-nodes) of `lambda` strictly below `x`.
fn counts_below(ctx: &FockContext, lambda: &Bipartition, x: Node, i: Residue) -> (i64, i64) {
    let (add, rem) = lambda.corners(ctx.components());
    let below = |v: &Vec<Node>| v.iter().filter(|&&y| y > x && ctx.residue(y) == i).count() as i64;
    (below(&add), below(&rem))
}

fn counts_above(ctx: &FockContext, lambda: &Bipartition, x: Node, i: Residue) -> (i64, i64) {
    let (add, rem) = lambda.corners(ctx.components());
    let above = |v: &Vec<Node>| v.iter().filter(|&&y| y < x && ctx.residue(y) == i).count() as i64;
    (above(&add), above(&rem))
}

/// The node of residue `i` by which `big` exceeds `small`.
fn single_node_difference(
    ctx: &FockContext,
    big: &Bipartition,
    small: &Bipartition,
    i: Residue,
) -> Result<Node> {
    let err = || Error::NotSingleNode { residue: i.value() };
    if big.size() != small.size() + 1 {
        return Err(err());
    }
    let x = removable_nodes(ctx, big, i)
        .into_iter()
        .find(|&x| &big.with_removed(x) == small)
        .ok_or_else(err)?;
    Ok(x)
}

/// `d_b(λ/μ)` for `μ = λ` minus one `i`-node: addable minus removable
/// `i`-nodes of `λ` strictly below the removed node.
pub fn d_below(
    ctx: &FockContext,
    lambda: &Bipartition,
    mu: &Bipartition,
    i: Residue,
) -> Result<i64> {
    let x = single_node_difference(ctx, lambda, mu, i)?;
    let (a, r) = counts_below(ctx, lambda, x, i);
    Ok(a - r)
}

/// `d^a(μ/λ)` for `μ = λ` plus one `i`-node: addable minus removable
/// `i`-nodes of `λ` strictly above the added node.
pub fn d_above(
    ctx: &FockContext,
    lambda: &Bipartition,
    mu: &Bipartition,
    i: Residue,
) -> Result<i64> {
    let x = single_node_difference(ctx, mu, lambda, i)?;
    let (a, r) = counts_above(ctx, lambda, x, i);
    Ok(a - r)
}

/// Which bipartition the below-count of an added tableau node is read in.
///
/// Both give identical degrees in affine type A: the only corners that change
/// when a node of residue `i` is added sit at residues `i ± 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegreeConvention {
    /// Count in the bipartition after the node is added.
    #[default]
    PostAddition,
    /// Count in the bipartition before the node is added.
    PreAddition,
}

/// Degree contribution of adding `x` to `before`.
pub fn added_node_degree(
    ctx: &FockContext,
    before: &Bipartition,
    x: Node,
    conv: DegreeConvention,
) -> i64 {
    let i = ctx.residue(x);
    let (a, r) = match conv {
        DegreeConvention::PostAddition => counts_below(ctx, &before.with_added(x), x, i),
        DegreeConvention::PreAddition => counts_below(ctx, before, x, i),
    };
    a - r
}

/// Residue content `Σ α_{res(x)}`.
pub fn content(ctx: &FockContext, lambda: &Bipartition) -> RootVec {
    let mut out = RootVec::zero(ctx.rank);
    for x in lambda.nodes() {
        out.add_simple(ctx.residue(x), 1);
    }
    out
}

/// A finitely supported vector in the Fock space.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<Bipartition, QPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis(lambda: Bipartition) -> Self {
        let mut v = FockVector::zero();
        v.add_term(lambda, &QPoly::one());
        v
    }

    pub fn add_term(&mut self, lambda: Bipartition, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Bipartition) -> QPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Bipartition, &QPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &QPoly) -> FockVector {
        let mut out = FockVector::zero();
        for (lam, v) in &self.terms {
            out.add_term(lam.clone(), &(v * c));
        }
        out
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (lam, v) in &other.terms {
            out.add_term(lam.clone(), &(-v));
        }
        out
    }
}

/// `e_i|λ⟩ = Σ q^{d_b(λ/μ)} |μ⟩`.
pub fn apply_e(ctx: &FockContext, v: &FockVector, i: Residue) -> FockVector {
    let mut out = FockVector::zero();
    for (lam, c) in v.iter() {
        for x in removable_nodes(ctx, lam, i) {
            let (a, r) = counts_below(ctx, lam, x, i);
            out.add_term(lam.with_removed(x), &c.shift((a - r) as i32));
        }
    }
    out
}

/// `f_i|λ⟩ = Σ q^{-d^a(μ/λ)} |μ⟩`.
pub fn apply_f(ctx: &FockContext, v: &FockVector, i: Residue) -> FockVector {
    let mut out = FockVector::zero();
    for (lam, c) in v.iter() {
        if !ctx.admits(lam) {
            continue;
        }
        for x in addable_nodes(ctx, lam, i) {
            let (a, r) = counts_above(ctx, lam, x, i);
            out.add_term(lam.with_added(x), &c.shift(-(a - r) as i32));
        }
    }
    out
}

/// A standard filling, stored as the order in which nodes are added.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bitableau {
    shape: Bipartition,
    growth: Vec<Node>,
}

impl Bitableau {
    /// Validates that `growth` lists every node of `shape` once and that every
    /// prefix is a bipartition.
    pub fn from_growth(shape: Bipartition, growth: Vec<Node>) -> Result<Self> {
        if growth.len() != shape.size() {
            return Err(Error::NotStandard(format!(
                "{} entries for a shape of size {}",
                growth.len(),
                shape.size()
            )));
        }
        let mut cur = Bipartition::empty();
        for &x in &growth {
            if !shape.contains(x) || !cur.is_addable(x) {
                return Err(Error::NotStandard(format!(
                    "{x:?} cannot be added to {cur}"
                )));
            }
            cur = cur.with_added(x);
        }
        Ok(Bitableau { shape, growth })
    }

    pub fn shape(&self) -> &Bipartition {
        &self.shape
    }

    pub fn growth(&self) -> &[Node] {
        &self.growth
    }

    /// The entry (1-based) written in node `x`.
    pub fn entry(&self, x: Node) -> Option<usize> {
        self.growth.iter().position(|&y| y == x).map(|p| p + 1)
    }
}

impl Serialize for Bitableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.growth.serialize(serializer)
    }
}

/// Lazy depth-first enumeration of standard bitableaux, lexicographic in the
/// growth sequence.
pub struct StandardTableaux {
    target: Bipartition,
    current: Bipartition,
    path: Vec<Node>,
    frames: Vec<Vec<Node>>,
    pending_empty: bool,
}

impl StandardTableaux {
    fn new(target: Bipartition) -> Self {
        let n = target.size();
        let mut it = StandardTableaux {
            target,
            current: Bipartition::empty(),
            path: Vec::with_capacity(n),
            frames: Vec::new(),
            pending_empty: n == 0,
        };
        if n > 0 {
            let first = it.candidates();
            it.frames.push(first);
        }
        it
    }

    /// Next nodes in reverse order, so that `pop` yields the smallest.
    fn candidates(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for k in (1..=2u8).rev() {
            let rows = self.target.component(k).len();
            for r in (1..=rows).rev() {
                let x = Node::new(k, r, self.current.row_len(k, r) + 1);
                if self.target.contains(x) && self.current.is_addable(x) {
                    out.push(x);
                }
            }
        }
        out
    }
}

impl Iterator for StandardTableaux {
    type Item = Bitableau;

    fn next(&mut self) -> Option<Bitableau> {
        if self.pending_empty {
            self.pending_empty = false;
            return Some(Bitableau {
                shape: self.target.clone(),
                growth: Vec::new(),
            });
        }
        let n = self.target.size();
        loop {
            let frame = self.frames.last_mut()?;
            match frame.pop() {
                None => {
                    self.frames.pop();
                    if let Some(x) = self.path.pop() {
                        self.current = self.current.with_removed(x);
                    }
                }
                Some(x) => {
                    self.current = self.current.with_added(x);
                    self.path.push(x);
                    if self.path.len() == n {
                        let t = Bitableau {
                            shape: self.target.clone(),
                            growth: self.path.clone(),
                        };
                        self.path.pop();
                        self.current = self.current.with_removed(x);
                        return Some(t);
                    }
                    let next = self.candidates();
                    self.frames.push(next);
                }
            }
        }
    }
}

/// Every standard bitableau of `lambda`, produced lazily.
pub fn enumerate_standard(_ctx: &FockContext, lambda: &Bipartition) -> StandardTableaux {
    StandardTableaux::new(lambda.clone())
}

/// `(deg T, res T)`, reading each node's below-count in the chosen convention.
pub fn tableau_stats_with(
    ctx: &FockContext,
    t: &Bitableau,
    conv: DegreeConvention,
) -> Result<(i64, Vec<Residue>)> {
    if !ctx.admits(&t.shape) {
        return Err(Error::NotStandard(format!(
            "{} has a second component in level one",
            t.shape
        )));
    }
    let mut cur = Bipartition::empty();
    let mut degree = 0;
    let mut residues = Vec::with_capacity(t.growth.len());
    for &x in &t.growth {
        if !cur.is_addable(x) {
            return Err(Error::NotStandard(format!(
                "{x:?} cannot be added to {cur}"
            )));
        }
        degree += added_node_degree(ctx, &cur, x, conv);
        residues.push(ctx.residue(x));
        cur = cur.with_added(x);
    }
    if cur != t.shape {
        return Err(Error::NotStandard("growth does not fill the shape".into()));
    }
    Ok((degree, residues))
}

pub fn tableau_stats(ctx: &FockContext, t: &Bitableau) -> Result<(i64, Vec<Residue>)> {
    tableau_stats_with(ctx, t, DegreeConvention::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(ell: i64, s: usize) -> FockContext {
        FockContext::level_two(ell, s).unwrap()
    }

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn res(c: &FockContext, v: usize) -> Residue {
        Residue::new(v, c.rank()).unwrap()
    }

    #[test]
    fn residue_examples() {
        let c = ctx(3, 2);
        assert_eq!(c.residue(Node::new(2, 1, 1)).value(), 2);
        assert_eq!(c.residue(Node::new(1, 1, 1)).value(), 0);
        let c = ctx(1, 1);
        assert_eq!(c.residue(Node::new(1, 2, 1)).value(), 1);
    }

    #[test]
    fn context_validation() {
        assert!(FockContext::level_two(3, 4).is_err());
        assert!(FockContext::level_two(0, 0).is_err());
        assert!(FockContext::new(AffineRank::new(2).unwrap(), 1, Level::One).is_err());
    }

    #[test]
    fn bipartition_validation() {
        assert!(Bipartition::new(vec![1, 2], vec![]).is_err());
        assert!(Bipartition::new(vec![2, 0], vec![]).is_err());
        assert_eq!(bp("2,1|1").size(), 4);
        assert_eq!(bp("|").size(), 0);
        assert_eq!(bp("-|2").component(2), &[2]);
        assert_eq!(serde_json::to_string(&bp("2,1|")).unwrap(), "[[2,1],[]]");
        assert!(serde_json::from_str::<Bipartition>("[[1,2],[]]").is_err());
    }

    #[test]
    fn corners_of_empty() {
        let c = ctx(1, 1);
        let e = Bipartition::empty();
        assert_eq!(addable_nodes(&c, &e, res(&c, 0)), vec![Node::new(1, 1, 1)]);
        assert_eq!(addable_nodes(&c, &e, res(&c, 1)), vec![Node::new(2, 1, 1)]);
        assert_eq!(
            removable_nodes(&c, &bp("1|"), res(&c, 0)),
            vec![Node::new(1, 1, 1)]
        );
    }

    #[test]
    fn corners_match_brute_force_scan() {
        // Scan every cell in a bounding box and test addability directly.
        let c = ctx(2, 1);
        let lam = bp("2,1|1");
        for i in c.rank().residues() {
            let mut add = Vec::new();
            let mut rem = Vec::new();
            for k in 1..=2u8 {
                for r in 1..=4 {
                    for col in 1..=4 {
                        let x = Node::new(k, r, col);
                        if c.residue(x) != i {
                            continue;
                        }
                        if !lam.contains(x) {
                            let grown = lam.with_added_checked(x);
                            if grown.is_some() {
                                add.push(x);
                            }
                        } else if lam.with_removed_checked(x).is_some() {
                            rem.push(x);
                        }
                    }
                }
            }
            assert_eq!(addable_nodes(&c, &lam, i), add);
            assert_eq!(removable_nodes(&c, &lam, i), rem);
        }
        // Addable 2-nodes of ((2,1),(1)) with s = 1: (1,1,3) has residue 2 and
        // (2,1,2) has residue 2 - 1 + 1 = 2.
        assert_eq!(
            addable_nodes(&c, &lam, res(&c, 2)),
            vec![Node::new(1, 1, 3), Node::new(2, 1, 2)]
        );
    }

    impl Bipartition {
        fn with_added_checked(&self, x: Node) -> Option<Bipartition> {
            let mut comps = self.comps.clone();
            let comp = &mut comps[x.component as usize - 1];
            while comp.len() < x.row {
                comp.push(0);
            }
            comp[x.row - 1] += 1;
            if comp[x.row - 1] != x.col {
                return None;
            }
            let parts: Vec<usize> = comp.iter().copied().filter(|&p| p > 0).collect();
            if parts.len() != comp.len() {
                return None;
            }
            *comp = parts;
            Bipartition::new(comps[0].clone(), comps[1].clone()).ok()
        }

        fn with_removed_checked(&self, x: Node) -> Option<Bipartition> {
            let mut comps = self.comps.clone();
            let comp = &mut comps[x.component as usize - 1];
            if comp.get(x.row - 1) != Some(&x.col) {
                return None;
            }
            comp[x.row - 1] -= 1;
            let parts: Vec<usize> = comp.iter().copied().filter(|&p| p > 0).collect();
            *comp = parts;
            Bipartition::new(comps[0].clone(), comps[1].clone()).ok()
        }
    }

    #[test]
    fn d_statistics() {
        let c = ctx(1, 1);
        let zero = res(&c, 0);
        // Removing (1,1,1) from ((1),(1)): the addable nodes (2,1,2) and
        // (2,2,1) of the second component both have residue 0.
        assert_eq!(d_below(&c, &bp("1|1"), &bp("|1"), zero).unwrap(), 2);
        assert_eq!(
            d_below(&c, &bp("1|"), &Bipartition::empty(), zero).unwrap(),
            0
        );
        let c3 = ctx(3, 1);
        assert_eq!(
            d_below(&c3, &bp("|1"), &Bipartition::empty(), res(&c3, 1)).unwrap(),
            0
        );
        assert_eq!(
            d_above(&c, &Bipartition::empty(), &bp("1|"), zero).unwrap(),
            0
        );
        // Adding (2,1,1) to ((1),∅): the addable 1-nodes (1,1,2) and (1,2,1) lie above.
        assert_eq!(d_above(&c, &bp("1|"), &bp("1|1"), res(&c, 1)).unwrap(), 2);
        assert!(d_below(&c, &bp("2|"), &Bipartition::empty(), zero).is_err());
        assert!(d_below(&c, &bp("1|"), &Bipartition::empty(), res(&c, 1)).is_err());
    }

    #[test]
    fn e_and_f_on_empty() {
        let c = ctx(1, 1);
        let vac = FockVector::basis(Bipartition::empty());
        for i in c.rank().residues() {
            assert!(apply_e(&c, &vac, i).is_zero());
        }
        let v = apply_f(&c, &vac, res(&c, 0));
        assert_eq!(v, FockVector::basis(bp("1|")));
    }

    #[test]
    fn content_examples() {
        assert!(content(&ctx(2, 1), &Bipartition::empty()).is_zero());
        assert_eq!(content(&ctx(4, 1), &bp("1|1")).coeffs(), &[1, 1, 0, 0, 0]);
        assert_eq!(content(&ctx(1, 1), &bp("2|1")).coeffs(), &[1, 2]);
    }

    #[test]
    fn enumeration_counts() {
        let c = ctx(2, 1);
        assert_eq!(enumerate_standard(&c, &bp("1|1")).count(), 2);
        assert_eq!(enumerate_standard(&c, &bp("2|")).count(), 1);
        assert_eq!(enumerate_standard(&c, &bp("2,1|")).count(), 2);
        assert_eq!(enumerate_standard(&c, &Bipartition::empty()).count(), 1);
        // Column shapes: binomial(a + b, a).
        let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, j| acc * (n - j) / (j + 1));
        for a in 0..=4 {
            for b in 0..=4 {
                let lam = Bipartition::new(vec![1; a], vec![1; b]).unwrap();
                assert_eq!(enumerate_standard(&c, &lam).count(), binom(a + b, a));
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_valid() {
        let c = ctx(2, 1);
        let lam = bp("2,1|1,1");
        let all: Vec<_> = enumerate_standard(&c, &lam).collect();
        for w in all.windows(2) {
            assert!(w[0].growth() < w[1].growth());
        }
        for t in &all {
            Bitableau::from_growth(lam.clone(), t.growth().to_vec()).unwrap();
        }
    }

    #[test]
    fn tableau_stats_basics() {
        let c = ctx(1, 1);
        let t = enumerate_standard(&c, &Bipartition::empty())
            .next()
            .unwrap();
        assert_eq!(tableau_stats(&c, &t).unwrap(), (0, vec![]));
        assert!(
            Bitableau::from_growth(bp("2|"), vec![Node::new(1, 1, 2), Node::new(1, 1, 1)]).is_err()
        );
        let lc = FockContext::level_one(2).unwrap();
        let t = enumerate_standard(&lc, &bp("|1")).next().unwrap();
        assert!(tableau_stats(&lc, &t).is_err());
    }

    #[test]
    fn degree_conventions_agree() {
        for ell in 1..=3 {
            for s in 0..=ell as usize {
                let c = ctx(ell, s);
                for n in 0..=5 {
                    for lam in Bipartition::all_of_size(n) {
                        for t in enumerate_standard(&c, &lam) {
                            let post =
                                tableau_stats_with(&c, &t, DegreeConvention::PostAddition).unwrap();
                            let pre =
                                tableau_stats_with(&c, &t, DegreeConvention::PreAddition).unwrap();
                            assert_eq!(post, pre);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        // Bipartitions of n: 1, 2, 5, 10, 20, 36
        let counts: Vec<usize> = (0..6).map(|n| Bipartition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 10, 20, 36]);
    }
}
