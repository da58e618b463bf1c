//! Representation type of blocks: level-two cyclotomic quiver Hecke algebras of affine
//! type A, level-one type A blocks, and Hecke algebras of types B and D.

use std::collections::BTreeSet;
use std::fmt;

use log::debug;
use serde::{Deserialize, Serialize};

use crate::cartan::{null_root, AffineRank, RootVec, WeightVec};
use crate::error::{Error, Result};
use crate::fock::{content, Bipartition, FockContext};
use crate::gdim::{dim_matrix, quiver_bounds, QuiverBound, ResidueSeq};
use crate::orbits::{canonical_rep, level_one_defect, CanonicalRep, Family};

/// Properties of the base field and of the parameter λ that the classification depends on.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassifierConfig {
    pub char2: bool,
    pub char_odd: bool,
    /// λ = (−1)^{ℓ+1}.
    pub lambda_is_sign: bool,
}

impl ClassifierConfig {
    pub fn new(char2: bool, char_odd: bool, lambda_is_sign: bool) -> Result<Self> {
        let cfg = ClassifierConfig {
            char2,
            char_odd,
            lambda_is_sign,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.char2 && self.char_odd {
            return Err(Error::InvalidConfig(
                "char2 and char_odd are mutually exclusive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepTag {
    Simple,
    Finite,
    Tame,
    Wild,
}

impl fmt::Display for RepTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepTag::Simple => "simple",
            RepTag::Finite => "finite",
            RepTag::Tame => "tame",
            RepTag::Wild => "wild",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BrauerKind {
    TreeLine,
    Graph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExceptionalVertex {
    pub vertex: usize,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BrauerData {
    pub kind: BrauerKind,
    pub edges: usize,
    pub exceptional: Vec<ExceptionalVertex>,
    pub description: String,
}

impl BrauerData {
    pub fn line(edges: usize) -> Self {
        BrauerData {
            kind: BrauerKind::TreeLine,
            edges,
            exceptional: Vec::new(),
            description: format!(
                "Brauer tree: straight line with {edges} edge{}, no exceptional vertex",
                if edges == 1 { "" } else { "s" }
            ),
        }
    }

    fn two_edge_graph() -> Self {
        BrauerData {
            kind: BrauerKind::Graph,
            edges: 2,
            exceptional: vec![
                ExceptionalVertex {
                    vertex: 1,
                    multiplicity: 2,
                },
                ExceptionalVertex {
                    vertex: 3,
                    multiplicity: 2,
                },
            ],
            description: "Brauer graph 1-2-3 with exceptional vertices 1 and 3 of multiplicity 2"
                .into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepType {
    #[serde(rename = "rep_type")]
    pub tag: RepTag,
    #[serde(rename = "brauer")]
    pub structure: Option<BrauerData>,
}

impl RepType {
    pub fn bare(tag: RepTag) -> Self {
        RepType {
            tag,
            structure: None,
        }
    }

    pub fn finite(data: BrauerData) -> Self {
        RepType {
            tag: RepTag::Finite,
            structure: Some(data),
        }
    }
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag)?;
        if let Some(b) = &self.structure {
            write!(f, " ({})", b.description)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HeckeType {
    B,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeckeParams {
    pub hecke_type: HeckeType,
    pub e: usize,
    /// `−Q = q^s`; absent in the separated case.
    pub s: Option<usize>,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlockInput {
    /// `Λ = Λ_a + Λ_b`, weight `Λ − β`.
    LevelTwo {
        lambda: [usize; 2],
        ell: u32,
        beta: RootVec,
    },
    LevelOne {
        ell: u32,
        beta: RootVec,
    },
    /// A tensor product of two level-one blocks.
    Separated {
        ell: u32,
        beta1: RootVec,
        beta2: RootVec,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverReport {
    pub idempotents: Vec<ResidueSeq>,
    pub bound: QuiverBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub input: BlockInput,
    #[serde(default)]
    pub hecke: Option<HeckeParams>,
    pub canonical: Option<CanonicalRep>,
    #[serde(flatten)]
    pub rep_type: RepType,
    pub quiver: Option<QuiverReport>,
    pub notes: Vec<String>,
}

/// Replaces `μ^s_i + kδ` by the isomorphic `λ^{ℓ−s+1}_i + kδ`; returns the matching context.
pub fn normalize(ctx: &FockContext, rep: CanonicalRep) -> Result<(FockContext, CanonicalRep)> {
    match rep.family {
        Family::Lambda => Ok((*ctx, rep)),
        Family::Mu => {
            let s = ctx.ell() as usize + 1 - rep.s;
            let ctx2 = FockContext::level_two(ctx.ell() as i64, s)?;
            Ok((ctx2, CanonicalRep::lambda(s, rep.i, rep.k)))
        }
    }
}

fn table(ell: u32, rep: CanonicalRep, cfg: &ClassifierConfig) -> RepType {
    let (s, i, k) = (rep.s, rep.i, rep.k);
    match (i, k) {
        (0, 0) => RepType::bare(RepTag::Simple),
        (1, 0) => RepType::finite(BrauerData::line(s + 1)),
        _ if s >= 1 => {
            if (i, k) == (0, 1) && ell == 1 {
                RepType {
                    tag: RepTag::Tame,
                    structure: Some(BrauerData::two_edge_graph()),
                }
            } else {
                RepType::bare(RepTag::Wild)
            }
        }
        _ => {
            let tame = (ell == 1 && i == 0 && k == 1)
                || (ell >= 2 && i == 0 && k == 1 && !cfg.lambda_is_sign)
                || (ell >= 3 && i == 2 && k == 0 && !cfg.char2);
            RepType::bare(if tame { RepTag::Tame } else { RepTag::Wild })
        }
    }
}

/// Looks up the representation type of the block labelled by `rep`.
pub fn classify_canonical(
    ctx: &FockContext,
    rep: CanonicalRep,
    cfg: &ClassifierConfig,
) -> Result<RepType> {
    cfg.validate()?;
    if rep.s != ctx.s() {
        return Err(Error::OutOfRange {
            what: "canonical representative",
            detail: format!("{rep} does not belong to s = {}", ctx.s()),
        });
    }
    rep.validate(ctx.rank())?;
    let (ctx, rep) = normalize(ctx, rep)?;
    Ok(table(ctx.ell(), rep, cfg))
}

/// Brauer tree of a finite type block.
pub fn brauer_of_finite(ctx: &FockContext, rep: CanonicalRep) -> Result<BrauerData> {
    let t = classify_canonical(ctx, rep, &ClassifierConfig::default())?;
    match t {
        RepType {
            tag: RepTag::Finite,
            structure: Some(b),
        } => Ok(b),
        _ => Err(Error::NotFinite(rep.to_string())),
    }
}

fn seq(rank: AffineRank, parts: &[&[i64]]) -> ResidueSeq {
    let v: Vec<i64> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    ResidueSeq::new(rank, &v)
}

/// Idempotents used to bound the quiver of the block `rep`, when the block is one of the
/// fixed small cases.
pub fn distinguished_idempotents(ctx: &FockContext, rep: CanonicalRep) -> Option<Vec<ResidueSeq>> {
    if rep.family != Family::Lambda || rep.s == 0 {
        return None;
    }
    let rank = ctx.rank();
    let (ell, s) = (ctx.ell() as i64, rep.s as i64);
    match (rep.i, rep.k) {
        (0, 1) => {
            let a: Vec<i64> = (0..=ell).collect();
            let b: Vec<i64> = (s..=ell).chain(0..s).collect();
            Some(vec![seq(rank, &[&a]), seq(rank, &[&b])])
        }
        (0, 2) if ell == 1 => Some(vec![
            seq(rank, &[&[0, 1, 0, 1]]),
            seq(rank, &[&[1, 0, 1, 0]]),
        ]),
        (2, 0) if ell >= s + 3 => {
            let head: Vec<i64> = (0..=s - 2).collect();
            let e1: Vec<i64> = (0..=s + 1).chain([ell]).chain(0..=s).collect();
            let e2 = seq(rank, &[&head, &[s, s - 1, s + 1, ell], &head, &[s, s - 1]]);
            Some(vec![seq(rank, &[&e1]), e2])
        }
        _ => None,
    }
}

/// Classifies the block `R^Λ(β)` for `Λ = Λ_0 + Λ_s`.
pub fn classify_block(
    ctx: &FockContext,
    beta: &RootVec,
    cfg: &ClassifierConfig,
) -> Result<BlockReport> {
    cfg.validate()?;
    let rep = canonical_rep(ctx, beta)?;
    let (nctx, nrep) = normalize(ctx, rep)?;
    let rep_type = table(nctx.ell(), nrep, cfg);
    let mut notes = Vec::new();
    if nrep != rep {
        notes.push(format!(
            "{rep} is isomorphic to {nrep} for Lambda_0 + Lambda_{}",
            nrep.s
        ));
    }
    if &rep.root(ctx.rank())? != beta {
        notes.push(format!("beta lies in the Weyl orbit of {rep}"));
    }
    let mut quiver = None;
    if &rep.root(ctx.rank())? == beta {
        if let Some(idems) = distinguished_idempotents(ctx, rep) {
            let m = dim_matrix(ctx, beta, &idems)?;
            match quiver_bounds(&m) {
                Ok(bound) => {
                    quiver = Some(QuiverReport {
                        idempotents: idems,
                        bound,
                    })
                }
                Err(e) => debug!("no quiver bound for {rep}: {e}"),
            }
        }
    }
    Ok(BlockReport {
        input: BlockInput::LevelTwo {
            lambda: [0, ctx.s()],
            ell: ctx.ell(),
            beta: beta.clone(),
        },
        hecke: None,
        canonical: Some(rep),
        rep_type,
        quiver,
        notes,
    })
}

/// Classifies `R^Λ(β)` for any level-two dominant `Λ = Λ_a + Λ_b`, by rotating the
/// Dynkin diagram so that `Λ` becomes `Λ_0 + Λ_{b−a}`.
pub fn classify_weight(
    lambda: &WeightVec,
    beta: &RootVec,
    cfg: &ClassifierConfig,
) -> Result<BlockReport> {
    let rank = lambda.rank();
    if beta.rank() != rank {
        return Err(Error::RankMismatch {
            expected: rank.ell(),
            found: beta.rank().ell(),
        });
    }
    let fund = lambda.fund();
    if fund.iter().any(|&c| c < 0) || lambda.level() != 2 {
        return Err(Error::InvalidParameters(format!(
            "{fund:?} is not a level-two dominant integral weight"
        )));
    }
    let mut idx = Vec::new();
    for (j, &c) in fund.iter().enumerate() {
        idx.extend(std::iter::repeat_n(j, c as usize));
    }
    let (a, b) = (idx[0], idx[1]);
    let s = b - a;
    let ctx = FockContext::level_two(rank.ell() as i64, s)?;
    let rotated = beta.rotate(-(a as i64));
    let mut report = classify_block(&ctx, &rotated, cfg)?;
    if a != 0 {
        report
            .notes
            .push(format!("rotated by sigma^-{a} to Lambda_0 + Lambda_{s}"));
    }
    report.input = BlockInput::LevelTwo {
        lambda: [a, b],
        ell: rank.ell(),
        beta: beta.clone(),
    };
    Ok(report)
}

/// Representation type of the level-one block `R^{Λ_0}(β)`, a block of a type A Hecke algebra.
#[allow(non_snake_case)]
pub fn classify_typeA_levelone(ctx: &FockContext, beta: &RootVec) -> Result<RepType> {
    if ctx.level() != crate::fock::Level::One {
        return Err(Error::InvalidParameters(
            "a level-one context is required".into(),
        ));
    }
    let k = level_one_defect(ctx, beta)?;
    let ell = ctx.ell() as usize;
    Ok(match k {
        0 => RepType::bare(RepTag::Simple),
        1 => RepType::finite(BrauerData::line(ell)),
        2 if ell == 1 => RepType::bare(RepTag::Tame),
        _ => RepType::bare(RepTag::Wild),
    })
}

/// Representation type of `B_1 ⊗ B_2` for level-one blocks `B_1`, `B_2`.
pub fn classify_tensor(t1: &RepType, t2: &RepType, ell: u32) -> RepType {
    use RepTag::*;
    match (t1.tag, t2.tag) {
        (Simple, _) => t2.clone(),
        (_, Simple) => t1.clone(),
        (Wild, _) | (_, Wild) => RepType::bare(Wild),
        (Finite, Finite) if ell == 1 => RepType::bare(Tame),
        _ => RepType::bare(Wild),
    }
}

fn block_contents(ctx: &FockContext, n: usize) -> Vec<RootVec> {
    let set: BTreeSet<RootVec> = Bipartition::all_for(ctx, n)
        .iter()
        .map(|b| content(ctx, b))
        .collect();
    set.into_iter().collect()
}

fn hecke_config(cfg: &ClassifierConfig) -> (ClassifierConfig, String) {
    let forced = ClassifierConfig {
        lambda_is_sign: true,
        ..*cfg
    };
    (
        forced,
        "Hecke algebra parameter: lambda = (-1)^(ell+1)".to_string(),
    )
}

fn separated_blocks(
    e: usize,
    n: usize,
    cfg: &ClassifierConfig,
    params: HeckeParams,
) -> Result<Vec<BlockReport>> {
    cfg.validate()?;
    let ell = (e - 1) as i64;
    let one = FockContext::level_one(ell)?;
    let mut out = Vec::new();
    for n1 in 0..=n {
        let left = block_contents(&one, n1);
        let right = block_contents(&one, n - n1);
        for b1 in &left {
            let t1 = classify_typeA_levelone(&one, b1)?;
            for b2 in &right {
                let t2 = classify_typeA_levelone(&one, b2)?;
                let rep_type = classify_tensor(&t1, &t2, ell as u32);
                let notes = vec![
                    format!("first factor: {t1}"),
                    format!("second factor: {t2}"),
                    format!(
                        "defects {} and {}",
                        level_one_defect(&one, b1)?,
                        level_one_defect(&one, b2)?
                    ),
                ];
                out.push(BlockReport {
                    input: BlockInput::Separated {
                        ell: ell as u32,
                        beta1: b1.clone(),
                        beta2: b2.clone(),
                    },
                    hecke: Some(params),
                    canonical: None,
                    rep_type,
                    quiver: None,
                    notes,
                });
            }
        }
    }
    Ok(out)
}

/// Blocks of the type B Hecke algebra `H_n(q, Q)` with `q` a primitive `e`-th root of unity.
/// With `s = Some(s)` the parameters satisfy `−Q = q^s`; `None` means `−Q ∉ q^Z`.
#[allow(non_snake_case)]
pub fn classify_heckeB(
    e: usize,
    s: Option<i64>,
    n: usize,
    cfg: &ClassifierConfig,
) -> Result<Vec<BlockReport>> {
    heckeB_as(HeckeType::B, e, s, n, cfg)
}

#[allow(non_snake_case)]
fn heckeB_as(
    t: HeckeType,
    e: usize,
    s: Option<i64>,
    n: usize,
    cfg: &ClassifierConfig,
) -> Result<Vec<BlockReport>> {
    if e < 2 {
        return Err(Error::InvalidParameters(format!(
            "e = {e} must be at least 2"
        )));
    }
    let s = s.map(|v| v.rem_euclid(e as i64) as usize);
    let params = HeckeParams {
        hecke_type: t,
        e,
        s,
        n,
    };
    let Some(s) = s else {
        return separated_blocks(e, n, cfg, params);
    };
    let ctx = FockContext::level_two(e as i64 - 1, s)?;
    let (cfg, note) = hecke_config(cfg);
    let mut out = Vec::new();
    for beta in block_contents(&ctx, n) {
        let mut report = classify_block(&ctx, &beta, &cfg)?;
        report.hecke = Some(params);
        report.notes.push(note.clone());
        out.push(report);
    }
    Ok(out)
}

/// Blocks of the type D Hecke algebra, through the type B algebra with `Q = 1`.
#[allow(non_snake_case)]
pub fn classify_heckeD(e: usize, n: usize, cfg: &ClassifierConfig) -> Result<Vec<BlockReport>> {
    cfg.validate()?;
    if !cfg.char_odd || cfg.char2 {
        return Err(Error::CharacteristicTwoTypeD);
    }
    let s = if e.is_multiple_of(2) {
        Some(e as i64 / 2)
    } else {
        None
    };
    let mut out = heckeB_as(HeckeType::D, e, s, n, cfg)?;
    for r in &mut out {
        r.notes.push("type of the covering type B block".into());
    }
    Ok(out)
}

/// `β + kδ` for the level-one block of defect `k`.
pub fn level_one_block(rank: AffineRank, k: i64) -> RootVec {
    null_root(rank).plus_delta(k - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{lambda_rep, lambda_rep_max_i, mu_rep_max_i};

    fn ctx(ell: i64, s: usize) -> FockContext {
        FockContext::level_two(ell, s).unwrap()
    }

    fn cfg() -> ClassifierConfig {
        ClassifierConfig::default()
    }

    #[test]
    fn canonical_examples() {
        let t = classify_canonical(&ctx(4, 1), CanonicalRep::lambda(1, 1, 0), &cfg()).unwrap();
        assert_eq!(t.tag, RepTag::Finite);
        let b = t.structure.unwrap();
        assert_eq!((b.kind, b.exceptional.len()), (BrauerKind::TreeLine, 0));

        let t = classify_canonical(&ctx(1, 1), CanonicalRep::lambda(1, 0, 1), &cfg()).unwrap();
        assert_eq!(t.tag, RepTag::Tame);
        let b = t.structure.unwrap();
        assert_eq!(b.kind, BrauerKind::Graph);
        assert_eq!(
            b.exceptional,
            vec![
                ExceptionalVertex {
                    vertex: 1,
                    multiplicity: 2
                },
                ExceptionalVertex {
                    vertex: 3,
                    multiplicity: 2
                }
            ]
        );

        let t = classify_canonical(&ctx(3, 0), CanonicalRep::lambda(0, 2, 0), &cfg()).unwrap();
        assert_eq!(t.tag, RepTag::Tame);
        let c2 = ClassifierConfig {
            char2: true,
            ..cfg()
        };
        assert_eq!(
            classify_canonical(&ctx(3, 0), CanonicalRep::lambda(0, 2, 0), &c2)
                .unwrap()
                .tag,
            RepTag::Wild
        );
    }

    #[test]
    fn normalize_mu() {
        let (c2, r) = normalize(&ctx(3, 2), CanonicalRep::mu(2, 1, 0)).unwrap();
        assert_eq!((c2.s(), r), (2, CanonicalRep::lambda(2, 1, 0)));
        let rep = CanonicalRep::lambda(1, 1, 2);
        assert_eq!(normalize(&ctx(3, 1), rep).unwrap().1, rep);
    }

    #[test]
    fn bad_config_and_ranges() {
        assert!(ClassifierConfig::new(true, true, false).is_err());
        assert!(classify_canonical(&ctx(2, 1), CanonicalRep::lambda(1, 2, 0), &cfg()).is_err());
        assert!(classify_canonical(&ctx(2, 1), CanonicalRep::lambda(2, 0, 0), &cfg()).is_err());
    }

    #[test]
    fn block_examples() {
        let c = ctx(1, 1);
        let two_delta = null_root(c.rank()).plus_delta(1);
        assert_eq!(
            classify_block(&c, &two_delta, &cfg()).unwrap().rep_type.tag,
            RepTag::Wild
        );
        let c = ctx(4, 1);
        let r = classify_block(&c, &lambda_rep(1, 2, c.rank()).unwrap(), &cfg()).unwrap();
        assert_eq!(r.rep_type.tag, RepTag::Wild);
        assert!(r.quiver.unwrap().bound.wild);
        let r = classify_block(&c, &RootVec::zero(c.rank()), &cfg()).unwrap();
        assert_eq!(r.rep_type.tag, RepTag::Simple);
    }

    #[test]
    fn brauer_edges() {
        for (s, edges) in [(0, 1), (1, 2), (2, 3)] {
            let c = ctx(5, s);
            assert_eq!(
                brauer_of_finite(&c, CanonicalRep::lambda(s, 1, 0))
                    .unwrap()
                    .edges,
                edges
            );
        }
        assert!(brauer_of_finite(&ctx(5, 1), CanonicalRep::lambda(1, 0, 1)).is_err());
    }

    #[test]
    fn level_one_types() {
        let c = FockContext::level_one(1).unwrap();
        let rk = c.rank();
        assert_eq!(
            classify_typeA_levelone(&c, &RootVec::zero(rk)).unwrap().tag,
            RepTag::Simple
        );
        assert_eq!(
            classify_typeA_levelone(&c, &level_one_block(rk, 2))
                .unwrap()
                .tag,
            RepTag::Tame
        );
        let c = FockContext::level_one(3).unwrap();
        let t = classify_typeA_levelone(&c, &null_root(c.rank())).unwrap();
        assert_eq!(t.structure.unwrap().edges, 3);
        assert!(classify_typeA_levelone(&ctx(3, 0), &null_root(c.rank())).is_err());
    }

    #[test]
    fn tensor_rules() {
        let s = RepType::bare(RepTag::Simple);
        let f = RepType::finite(BrauerData::line(1));
        let t = RepType::bare(RepTag::Tame);
        assert_eq!(classify_tensor(&s, &f, 2), f);
        assert_eq!(classify_tensor(&f, &f, 1).tag, RepTag::Tame);
        assert_eq!(classify_tensor(&f, &f, 2).tag, RepTag::Wild);
        assert_eq!(classify_tensor(&f, &t, 1).tag, RepTag::Wild);
        assert_eq!(classify_tensor(&t, &t, 1).tag, RepTag::Wild);
    }

    #[test]
    fn hecke_front_ends() {
        let blocks = classify_heckeB(2, Some(1), 2, &cfg()).unwrap();
        let delta = null_root(AffineRank::new(1).unwrap());
        let b = blocks
            .iter()
            .find(|r| matches!(&r.input, BlockInput::LevelTwo { beta, .. } if *beta == delta));
        assert_eq!(b.unwrap().rep_type.tag, RepTag::Tame);

        let blocks = classify_heckeB(3, Some(1), 2, &cfg()).unwrap();
        let rk = AffineRank::new(2).unwrap();
        let target = RootVec::new(rk, vec![1, 1, 0]).unwrap();
        let b = blocks
            .iter()
            .find(|r| matches!(&r.input, BlockInput::LevelTwo { beta, .. } if *beta == target));
        assert_eq!(b.unwrap().rep_type.tag, RepTag::Finite);

        let blocks = classify_heckeB(2, None, 2, &cfg()).unwrap();
        let b = blocks.iter().find(|r| {
            matches!(&r.input, BlockInput::Separated { beta1, beta2, .. } if *beta1 == delta && beta2.is_zero())
        });
        assert_eq!(b.unwrap().rep_type.tag, RepTag::Finite);

        assert_eq!(
            classify_heckeD(4, 3, &cfg()).unwrap_err(),
            Error::CharacteristicTwoTypeD
        );
        let odd = ClassifierConfig {
            char_odd: true,
            ..cfg()
        };
        let d = classify_heckeD(4, 3, &odd).unwrap();
        assert!(d.iter().all(|r| r.hecke.unwrap().s == Some(2)));
        let d = classify_heckeD(3, 2, &odd).unwrap();
        assert!(d
            .iter()
            .all(|r| matches!(r.input, BlockInput::Separated { .. })));
    }

    #[test]
    fn exhaustive_and_monotone() {
        for ell in 1..=6u32 {
            for s in 0..=ell as usize {
                let c = ctx(ell as i64, s);
                let imax = lambda_rep_max_i(s, c.rank());
                for lambda_is_sign in [false, true] {
                    for char2 in [false, true] {
                        let cf = ClassifierConfig {
                            char2,
                            char_odd: false,
                            lambda_is_sign,
                        };
                        let tag = |i: usize, k: u64| {
                            classify_canonical(&c, CanonicalRep::lambda(s, i, k), &cf)
                                .unwrap()
                                .tag
                        };
                        for k in 0..=3u64 {
                            for i in 0..=imax {
                                if tag(i, k) != RepTag::Wild {
                                    continue;
                                }
                                if i >= 1 {
                                    assert_eq!(tag(i - 1, k + 1), RepTag::Wild);
                                }
                                if i < imax {
                                    assert_eq!(tag(i + 1, k), RepTag::Wild);
                                }
                            }
                            for i in 1..=mu_rep_max_i(s) {
                                classify_canonical(&c, CanonicalRep::mu(s, i, k), &cf).unwrap();
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn report_round_trip() {
        let c = ctx(1, 1);
        let r = classify_block(&c, &null_root(c.rank()), &cfg()).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["rep_type"], "tame");
        assert_eq!(json["brauer"]["kind"], "graph");
        assert_eq!(json["canonical"]["family"], "lambda");
        let back: BlockReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
        let r = classify_block(&c, &null_root(c.rank()).plus_delta(1), &cfg()).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<BlockReport>(&json).unwrap(), r);
    }
}
