//! Symmetric-space families, their compact duals `G_U/K`, and the rank-gap
//! classifier.
//!
//! For `M = Γ\G/K` the dual is `G_U/K`. When `rk(G_U) = rk(K)` the dual has
//! toral rank zero and non-zero Euler characteristic `|W(G_U)| / |W(K)|`; when
//! the ranks differ the toral rank is positive and every Pontrjagin number of
//! the dual vanishes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::charclass::DualSpace;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "SU_pq")]
    SuPq,
    #[serde(rename = "SO0_pq")]
    So0Pq,
    #[serde(rename = "SOstar_2n")]
    SoStar2n,
    #[serde(rename = "Sp_nR")]
    SpNR,
    #[serde(rename = "Sp_pq")]
    SpPq,
    #[serde(rename = "SL_nR")]
    SlNR,
    #[serde(rename = "SUstar_2n")]
    SuStar2n,
    #[serde(rename = "TypeIV")]
    TypeIv,
    #[serde(rename = "RealHyperbolic_n")]
    RealHyperbolic,
    #[serde(rename = "ComplexHyperbolic_n")]
    ComplexHyperbolic,
    #[serde(rename = "QuaternionicHyperbolic_n")]
    QuaternionicHyperbolic,
    #[serde(rename = "CayleyHyperbolic")]
    CayleyHyperbolic,
    #[serde(rename = "ConstantPositive_n")]
    ConstantPositive,
    #[serde(rename = "Flat_n")]
    Flat,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::SuPq,
        Family::So0Pq,
        Family::SoStar2n,
        Family::SpNR,
        Family::SpPq,
        Family::SlNR,
        Family::SuStar2n,
        Family::TypeIv,
        Family::RealHyperbolic,
        Family::ComplexHyperbolic,
        Family::QuaternionicHyperbolic,
        Family::CayleyHyperbolic,
        Family::ConstantPositive,
        Family::Flat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::SuPq => "SU_pq",
            Family::So0Pq => "SO0_pq",
            Family::SoStar2n => "SOstar_2n",
            Family::SpNR => "Sp_nR",
            Family::SpPq => "Sp_pq",
            Family::SlNR => "SL_nR",
            Family::SuStar2n => "SUstar_2n",
            Family::TypeIv => "TypeIV",
            Family::RealHyperbolic => "RealHyperbolic_n",
            Family::ComplexHyperbolic => "ComplexHyperbolic_n",
            Family::QuaternionicHyperbolic => "QuaternionicHyperbolic_n",
            Family::CayleyHyperbolic => "CayleyHyperbolic",
            Family::ConstantPositive => "ConstantPositive_n",
            Family::Flat => "Flat_n",
        }
    }

    fn short_aliases(self) -> &'static [&'static str] {
        match self {
            Family::So0Pq => &["SOpq"],
            Family::RealHyperbolic => &["RHn", "RH"],
            Family::ComplexHyperbolic => &["CHn", "CH"],
            Family::QuaternionicHyperbolic => &["QHn", "HHn", "QH", "HH"],
            Family::CayleyHyperbolic => &["CayH", "OH"],
            Family::ConstantPositive => &["Spherical_n"],
            _ => &[],
        }
    }

    /// Looks up a family by canonical name, by that name with underscores
    /// removed, or by a short alias such as `CHn` or `CayH`.
    pub fn from_name(name: &str) -> Result<Family> {
        let squash = |s: &str| s.replace('_', "");
        let wanted = squash(name);
        for family in Family::ALL {
            if squash(family.name()) == wanted || family.short_aliases().iter().any(|a| squash(a) == wanted) {
                return Ok(family);
            }
        }
        let upper = name.to_ascii_uppercase();
        if ["E6", "E7", "E8", "G2", "F4"].iter().any(|e| upper.starts_with(e)) {
            return Err(Error::UnsupportedFamily(format!(
                "`{name}`: exceptional families other than F4/Spin(9) are not classified"
            )));
        }
        Err(Error::UnknownFamily(name.to_string()))
    }

    pub fn arity(self) -> usize {
        match self {
            Family::SuPq | Family::So0Pq | Family::SpPq => 2,
            Family::CayleyHyperbolic => 0,
            _ => 1,
        }
    }

    /// Rank-one negatively curved families, whose duals are the projective
    /// spaces and spheres handled by `charclass`.
    pub fn is_rank_one(self) -> bool {
        matches!(
            self,
            Family::RealHyperbolic
                | Family::ComplexHyperbolic
                | Family::QuaternionicHyperbolic
                | Family::CayleyHyperbolic
        )
    }

    /// Irreducible higher-rank families other than Type IV.
    pub fn is_classical_higher_rank(self) -> bool {
        matches!(
            self,
            Family::SuPq
                | Family::So0Pq
                | Family::SoStar2n
                | Family::SpNR
                | Family::SpPq
                | Family::SlNR
                | Family::SuStar2n
        )
    }

    fn min_params(self) -> &'static [u32] {
        match self {
            Family::SuPq | Family::So0Pq | Family::SpPq => &[1, 1],
            Family::SoStar2n | Family::SlNR | Family::SuStar2n | Family::RealHyperbolic => &[2],
            Family::TypeIv => &[3],
            Family::CayleyHyperbolic => &[],
            Family::SpNR | Family::ComplexHyperbolic | Family::QuaternionicHyperbolic => &[1],
            Family::ConstantPositive | Family::Flat => &[1],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family tag with its integer parameters: `(p, q)` for the two-parameter
/// families, `n` for the others, a dimension label for Type IV, nothing for
/// the Cayley hyperbolic plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct SpaceSpec {
    family: Family,
    params: Vec<u32>,
}

#[derive(Deserialize)]
struct RawSpec {
    family: Family,
    #[serde(default)]
    params: Vec<u32>,
}

impl TryFrom<RawSpec> for SpaceSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        SpaceSpec::new(raw.family, raw.params)
    }
}

impl SpaceSpec {
    pub fn new(family: Family, params: Vec<u32>) -> Result<Self> {
        if params.len() != family.arity() {
            return Err(Error::InvalidParameters(format!(
                "{family} takes {} parameter(s), got {}",
                family.arity(),
                params.len()
            )));
        }
        for (value, min) in params.iter().zip(family.min_params()) {
            if value < min {
                return Err(Error::InvalidParameters(format!(
                    "{family}{params:?}: parameter {value} below minimum {min}"
                )));
            }
        }
        Ok(Self { family, params })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &[u32] {
        &self.params
    }

    fn p(&self) -> u32 {
        self.params[0]
    }

    fn q(&self) -> u32 {
        self.params[1]
    }

    /// Real rank of `G/K`, i.e. the dimension of a maximal flat.
    pub fn real_rank(&self) -> u32 {
        match self.family {
            Family::SuPq | Family::So0Pq | Family::SpPq => self.p().min(self.q()),
            Family::SoStar2n => self.p() / 2,
            Family::SpNR => self.p(),
            Family::SlNR | Family::SuStar2n => self.p() - 1,
            // Not determined by the dimension label alone.
            Family::TypeIv => 0,
            Family::Flat => self.p(),
            Family::ConstantPositive => 0,
            _ => 1,
        }
    }

    /// Real dimension of the symmetric space.
    pub fn dimension(&self) -> u64 {
        let n = self.params.first().copied().unwrap_or(0) as u64;
        match self.family {
            Family::SuPq => 2 * self.p() as u64 * self.q() as u64,
            Family::So0Pq => self.p() as u64 * self.q() as u64,
            Family::SoStar2n => n * (n - 1),
            Family::SpNR => n * (n + 1),
            Family::SpPq => 4 * self.p() as u64 * self.q() as u64,
            Family::SlNR => (n - 1) * (n + 2) / 2,
            Family::SuStar2n => (n - 1) * (2 * n + 1),
            Family::TypeIv => n,
            Family::RealHyperbolic => n,
            Family::ComplexHyperbolic => 2 * n,
            Family::QuaternionicHyperbolic => 4 * n,
            Family::CayleyHyperbolic => 16,
            Family::ConstantPositive | Family::Flat => n,
        }
    }
}

pub fn dimension_of(spec: &SpaceSpec) -> u64 {
    spec.dimension()
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.params.is_empty() {
            return write!(f, "{}", self.family);
        }
        let params: Vec<String> = self.params.iter().map(u32::to_string).collect();
        write!(f, "{}({})", self.family, params.join(","))
    }
}

/// Grammar: `family(params)` or a bare family name for parameterless
/// families, e.g. `SU_pq(2,3)`, `SLnR(4)`, `CHn(2)`, `CayH`.
impl FromStr for SpaceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let malformed = || Error::MalformedSpec(s.to_string());
        let (name, params) = match s.find('(') {
            Some(open) => {
                let body = s[open + 1..].strip_suffix(')').ok_or_else(malformed)?;
                let params = if body.trim().is_empty() {
                    Vec::new()
                } else {
                    body.split(',')
                        .map(|p| p.trim().parse::<u32>().map_err(|_| malformed()))
                        .collect::<Result<Vec<_>>>()?
                };
                (s[..open].trim(), params)
            }
            None => (s, Vec::new()),
        };
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '*') {
            return Err(malformed());
        }
        SpaceSpec::new(Family::from_name(name)?, params)
    }
}

/// One factor of a compact Lie group product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupFactor {
    SU(u32),
    SO(u32),
    Sp(u32),
    U(u32),
    /// `S(U_p × U_q)`.
    SUpq(u32, u32),
    Spin9,
    F4,
    /// A flat torus `T^n`.
    Torus(u32),
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn pow2(n: u32) -> BigUint {
    BigUint::one() << n
}

impl GroupFactor {
    pub fn rank(&self) -> u32 {
        match *self {
            GroupFactor::SU(n) => n - 1,
            GroupFactor::SO(n) => n / 2,
            GroupFactor::Sp(n) | GroupFactor::U(n) | GroupFactor::Torus(n) => n,
            GroupFactor::SUpq(p, q) => p + q - 1,
            GroupFactor::Spin9 | GroupFactor::F4 => 4,
        }
    }

    pub fn weyl_order(&self) -> BigUint {
        match *self {
            GroupFactor::SU(n) | GroupFactor::U(n) => factorial(n),
            GroupFactor::Sp(n) => pow2(n) * factorial(n),
            GroupFactor::SO(n) if n % 2 == 1 => pow2(n / 2) * factorial(n / 2),
            // SO(2) is a circle: trivial Weyl group.
            GroupFactor::SO(n) => {
                let m = n / 2;
                pow2(m - 1) * factorial(m)
            }
            GroupFactor::SUpq(p, q) => factorial(p) * factorial(q),
            GroupFactor::Spin9 => pow2(4) * factorial(4),
            GroupFactor::F4 => BigUint::from(1152u32),
            GroupFactor::Torus(_) => BigUint::one(),
        }
    }

    /// Real dimension of the group manifold.
    pub fn dimension(&self) -> u64 {
        match *self {
            GroupFactor::SU(n) => n as u64 * n as u64 - 1,
            GroupFactor::SO(n) => n as u64 * (n as u64 - 1) / 2,
            GroupFactor::Sp(n) => n as u64 * (2 * n as u64 + 1),
            GroupFactor::U(n) => n as u64 * n as u64,
            GroupFactor::SUpq(p, q) => (p as u64).pow(2) + (q as u64).pow(2) - 1,
            GroupFactor::Spin9 => 36,
            GroupFactor::F4 => 52,
            GroupFactor::Torus(n) => n as u64,
        }
    }

    fn param_ok(&self) -> bool {
        match *self {
            GroupFactor::SU(n) | GroupFactor::SO(n) | GroupFactor::Sp(n) | GroupFactor::U(n) => n >= 1,
            GroupFactor::SUpq(p, q) => p >= 1 && q >= 1,
            GroupFactor::Torus(n) => n >= 1,
            GroupFactor::Spin9 | GroupFactor::F4 => true,
        }
    }
}

impl fmt::Display for GroupFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFactor::SU(n) => write!(f, "SU({n})"),
            GroupFactor::SO(n) => write!(f, "SO({n})"),
            GroupFactor::Sp(n) => write!(f, "Sp({n})"),
            GroupFactor::U(n) => write!(f, "U({n})"),
            GroupFactor::SUpq(p, q) => write!(f, "S(U({p})xU({q}))"),
            GroupFactor::Spin9 => write!(f, "Spin(9)"),
            GroupFactor::F4 => write!(f, "F4"),
            GroupFactor::Torus(n) => write!(f, "T^{n}"),
        }
    }
}

/// A product of compact group factors; the empty product is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompactGroupExpr(Vec<GroupFactor>);

impl CompactGroupExpr {
    pub fn new(factors: Vec<GroupFactor>) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|f| !f.param_ok()) {
            return Err(Error::InvalidParameters(format!("group factor {bad:?}")));
        }
        Ok(Self(factors))
    }

    pub fn trivial() -> Self {
        Self(Vec::new())
    }

    pub fn factors(&self) -> &[GroupFactor] {
        &self.0
    }

    pub fn rank(&self) -> u32 {
        self.0.iter().map(GroupFactor::rank).sum()
    }

    pub fn weyl_order(&self) -> BigUint {
        self.0.iter().map(GroupFactor::weyl_order).product()
    }

    pub fn dimension(&self) -> u64 {
        self.0.iter().map(GroupFactor::dimension).sum()
    }
}

pub fn rank_of(g: &CompactGroupExpr) -> u32 {
    g.rank()
}

impl fmt::Display for CompactGroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("x"))
    }
}

/// The compact dual `G_U/K` as a pair of groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualPair {
    pub compact: CompactGroupExpr,
    pub isotropy: CompactGroupExpr,
}

impl DualPair {
    fn of(compact: Vec<GroupFactor>, isotropy: Vec<GroupFactor>) -> Result<Self> {
        Ok(Self { compact: CompactGroupExpr::new(compact)?, isotropy: CompactGroupExpr::new(isotropy)? })
    }

    pub fn toral_rank(&self) -> u32 {
        self.compact.rank().saturating_sub(self.isotropy.rank())
    }

    /// Real dimension `dim G_U - dim K`.
    pub fn dimension(&self) -> u64 {
        self.compact.dimension() - self.isotropy.dimension()
    }

    /// `|W(G_U)| / |W(K)|` at equal rank, zero otherwise.
    pub fn euler_characteristic(&self) -> BigUint {
        if self.compact.rank() != self.isotropy.rank() {
            return BigUint::zero();
        }
        self.compact.weyl_order() / self.isotropy.weyl_order()
    }
}

impl fmt::Display for DualPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.compact, self.isotropy)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Dual {
    /// Higher-rank families: a compact homogeneous space.
    Homogeneous(DualPair),
    /// A rank-one (or spherical) dual together with its homogeneous model.
    Symbolic { space: DualSpace, pair: DualPair },
    /// Type IV: the dual is the compact group itself.
    LieGroup { dimension: u64 },
}

impl Dual {
    pub fn pair(&self) -> Option<&DualPair> {
        match self {
            Dual::Homogeneous(pair) | Dual::Symbolic { pair, .. } => Some(pair),
            Dual::LieGroup { .. } => None,
        }
    }

    pub fn space(&self) -> Option<DualSpace> {
        match self {
            Dual::Symbolic { space, .. } => Some(*space),
            _ => None,
        }
    }
}

impl fmt::Display for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dual::Homogeneous(pair) => write!(f, "{pair}"),
            Dual::Symbolic { space, .. } => write!(f, "{space}"),
            Dual::LieGroup { dimension } => write!(f, "compact Lie group of dimension {dimension}"),
        }
    }
}

/// Homogeneous model of a symbolic dual.
pub fn model_pair(space: DualSpace) -> DualPair {
    use GroupFactor::*;
    let pair = match space {
        DualSpace::Sphere(n) => DualPair::of(vec![SO(n + 1)], vec![SO(n)]),
        DualSpace::ComplexProjective(n) => DualPair::of(vec![SU(n + 1)], vec![SUpq(1, n)]),
        DualSpace::QuaternionicProjective(n) => DualPair::of(vec![Sp(n + 1)], vec![Sp(n), Sp(1)]),
        DualSpace::CayleyPlane => DualPair::of(vec![F4], vec![Spin9]),
    };
    pair.expect("model pairs have positive parameters")
}

pub fn dual_of(spec: &SpaceSpec) -> Result<Dual> {
    use GroupFactor::*;
    let params = spec.params();
    let n = params.first().copied().unwrap_or(0);
    let symbolic = |space: DualSpace| Dual::Symbolic { space, pair: model_pair(space) };
    let dual = match spec.family() {
        Family::SuPq => {
            let (p, q) = (params[0], params[1]);
            Dual::Homogeneous(DualPair::of(vec![SU(p + q)], vec![SUpq(p, q)])?)
        }
        Family::So0Pq => {
            let (p, q) = (params[0], params[1]);
            Dual::Homogeneous(DualPair::of(vec![SO(p + q)], vec![SO(p), SO(q)])?)
        }
        Family::SoStar2n => Dual::Homogeneous(DualPair::of(vec![SO(2 * n)], vec![U(n)])?),
        Family::SpNR => Dual::Homogeneous(DualPair::of(vec![Sp(n)], vec![U(n)])?),
        Family::SpPq => {
            let (p, q) = (params[0], params[1]);
            Dual::Homogeneous(DualPair::of(vec![Sp(p + q)], vec![Sp(p), Sp(q)])?)
        }
        Family::SlNR => Dual::Homogeneous(DualPair::of(vec![SU(n)], vec![SO(n)])?),
        Family::SuStar2n => Dual::Homogeneous(DualPair::of(vec![SU(2 * n)], vec![Sp(n)])?),
        Family::TypeIv => Dual::LieGroup { dimension: n as u64 },
        Family::RealHyperbolic | Family::ConstantPositive => symbolic(DualSpace::Sphere(n)),
        Family::ComplexHyperbolic => symbolic(DualSpace::ComplexProjective(n)),
        Family::QuaternionicHyperbolic => symbolic(DualSpace::QuaternionicProjective(n)),
        Family::CayleyHyperbolic => symbolic(DualSpace::CayleyPlane),
        // A flat manifold is finitely covered by a torus, which is its own model.
        Family::Flat => Dual::Homogeneous(DualPair::of(vec![Torus(n)], vec![])?),
    };
    Ok(dual)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    /// Equal ranks: Euler characteristic non-zero.
    #[serde(rename = "EqualRank_EulerNonzero")]
    EqualRankEulerNonzero,
    /// Positive toral rank of the dual: all Pontrjagin numbers vanish.
    #[serde(rename = "RankGap_PontrjaginVanish")]
    RankGapPontrjaginVanish,
    /// Type IV: the dual is a Lie group, hence parallelizable.
    #[serde(rename = "Parallelizable_Vanish")]
    ParallelizableVanish,
    /// Flat or constant positive curvature: finitely covered by a torus or a
    /// sphere, so all Pontrjagin numbers vanish.
    #[serde(rename = "ConstantCurvature_Vanish")]
    ConstantCurvatureVanish,
    /// Rank-one negatively curved: numbers come from `charclass`.
    #[serde(rename = "RankOne")]
    RankOne,
}

/// Verdict record emitted by [`classify`]. Field names are part of the CLI
/// contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub family: Family,
    pub params: Vec<u32>,
    pub dual: String,
    pub dim: u64,
    /// `None` for Type IV, whose verdict never consults ranks.
    pub rank_gu: Option<u32>,
    pub rank_k: Option<u32>,
    pub toral_rank: Option<u32>,
    pub verdict: Verdict,
    #[serde(with = "crate::bigjson::uint")]
    pub euler_char_dual: BigUint,
    /// Set for equal-rank higher-rank spaces only; `false` means "not
    /// concluded", not "MinVol = 0".
    pub minvol_positive: bool,
}

impl Classification {
    pub fn spec(&self) -> Result<SpaceSpec> {
        SpaceSpec::new(self.family, self.params.clone())
    }
}

pub fn euler_characteristic_dual(spec: &SpaceSpec) -> Result<BigUint> {
    Ok(match dual_of(spec)? {
        // Positive-dimensional compact Lie groups carry a free circle action.
        Dual::LieGroup { .. } => BigUint::zero(),
        dual => dual.pair().expect("homogeneous").euler_characteristic(),
    })
}

pub fn classify(spec: &SpaceSpec) -> Result<Classification> {
    let dual = dual_of(spec)?;
    let pair = dual.pair();
    let rank_gu = pair.map(|p| p.compact.rank());
    let rank_k = pair.map(|p| p.isotropy.rank());
    let toral_rank = pair.map(DualPair::toral_rank);
    let family = spec.family();
    let verdict = match family {
        Family::TypeIv => Verdict::ParallelizableVanish,
        Family::Flat | Family::ConstantPositive => Verdict::ConstantCurvatureVanish,
        f if f.is_rank_one() => Verdict::RankOne,
        _ if toral_rank == Some(0) => Verdict::EqualRankEulerNonzero,
        _ => Verdict::RankGapPontrjaginVanish,
    };
    Ok(Classification {
        family,
        params: spec.params().to_vec(),
        dual: dual.to_string(),
        dim: spec.dimension(),
        rank_gu,
        rank_k,
        toral_rank,
        verdict,
        euler_char_dual: euler_characteristic_dual(spec)?,
        minvol_positive: verdict == Verdict::EqualRankEulerNonzero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupFactor::*;

    fn spec(s: &str) -> SpaceSpec {
        s.parse().unwrap()
    }

    fn group(f: Vec<GroupFactor>) -> CompactGroupExpr {
        CompactGroupExpr::new(f).unwrap()
    }

    #[test]
    fn parse_spec_strings() {
        assert_eq!(spec("SU_pq(2,3)").params(), &[2, 3]);
        assert_eq!(spec("SLnR(4)").family(), Family::SlNR);
        assert_eq!(spec("CHn(2)").family(), Family::ComplexHyperbolic);
        assert_eq!(spec("CayH").family(), Family::CayleyHyperbolic);
        assert_eq!(spec("CayleyHyperbolic()").family(), Family::CayleyHyperbolic);
        assert_eq!(spec(" SO0_pq( 3 , 5 ) ").params(), &[3, 5]);
        assert_eq!(spec("SU_pq(2,3)").to_string(), "SU_pq(2,3)");
        assert_eq!(spec("CayH").to_string(), "CayleyHyperbolic");
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!("Foo(2)".parse::<SpaceSpec>(), Err(Error::UnknownFamily(_))));
        assert!(matches!("E6(2)".parse::<SpaceSpec>(), Err(Error::UnsupportedFamily(_))));
        assert!(matches!("G2".parse::<SpaceSpec>(), Err(Error::UnsupportedFamily(_))));
        assert!(matches!("SU_pq(2,".parse::<SpaceSpec>(), Err(Error::MalformedSpec(_))));
        assert!(matches!("SU_pq(2,x)".parse::<SpaceSpec>(), Err(Error::MalformedSpec(_))));
        assert!(matches!("".parse::<SpaceSpec>(), Err(Error::MalformedSpec(_))));
        assert!(matches!("SU_pq(2)".parse::<SpaceSpec>(), Err(Error::InvalidParameters(_))));
        assert!(matches!("SO0_pq(0,3)".parse::<SpaceSpec>(), Err(Error::InvalidParameters(_))));
        assert!(matches!("CayH(1)".parse::<SpaceSpec>(), Err(Error::InvalidParameters(_))));
        assert!(matches!("SLnR(1)".parse::<SpaceSpec>(), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn duals_match_lists() {
        assert_eq!(dual_of(&spec("SU_pq(2,3)")).unwrap().to_string(), "SU(5)/S(U(2)xU(3))");
        assert_eq!(dual_of(&spec("SLnR(4)")).unwrap().to_string(), "SU(4)/SO(4)");
        assert_eq!(dual_of(&spec("RHn(3)")).unwrap().to_string(), "S^3");
        assert_eq!(dual_of(&spec("Sp_pq(1,2)")).unwrap().to_string(), "Sp(3)/Sp(1)xSp(2)");
        assert_eq!(dual_of(&spec("SUstar_2n(3)")).unwrap().to_string(), "SU(6)/Sp(3)");
        assert_eq!(dual_of(&spec("SOstar_2n(4)")).unwrap().to_string(), "SO(8)/U(4)");
        assert_eq!(dual_of(&spec("Flat_n(3)")).unwrap().to_string(), "T^3/1");
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_of(&group(vec![SU(5)])), 4);
        assert_eq!(rank_of(&group(vec![SO(7)])), 3);
        assert_eq!(rank_of(&group(vec![SUpq(2, 3)])), 4);
        assert_eq!(rank_of(&group(vec![SO(2)])), 1);
        assert_eq!(rank_of(&group(vec![SO(1)])), 0);
        assert_eq!(rank_of(&group(vec![Spin9, F4])), 8);
        assert_eq!(rank_of(&group(vec![SO(3), SO(5)])), 3);
        assert!(CompactGroupExpr::new(vec![SU(0)]).is_err());
    }

    #[test]
    fn dimensions_agree_with_group_dimensions() {
        assert_eq!(dimension_of(&spec("CHn(2)")), 4);
        assert_eq!(dimension_of(&spec("SLnR(3)")), 5);
        assert_eq!(dimension_of(&spec("SU_pq(2,3)")), 12);
        for s in [
            "SU_pq(3,4)", "SO0_pq(3,5)", "SOstar_2n(5)", "Sp_nR(4)", "Sp_pq(2,3)", "SLnR(6)",
            "SUstar_2n(4)", "RHn(7)", "CHn(3)", "QHn(2)", "CayH", "Flat_n(4)",
        ] {
            let sp = spec(s);
            let pair = dual_of(&sp).unwrap().pair().cloned().unwrap();
            assert_eq!(pair.dimension(), sp.dimension(), "{s}");
        }
    }

    #[test]
    fn classification_examples() {
        let c = classify(&spec("Sp_nR(3)")).unwrap();
        assert_eq!(c.dual, "Sp(3)/U(3)");
        assert_eq!((c.rank_gu, c.rank_k, c.toral_rank), (Some(3), Some(3), Some(0)));
        assert_eq!(c.verdict, Verdict::EqualRankEulerNonzero);
        assert!(c.minvol_positive);
        // |W(Sp(3))| / |W(U(3))| = 48 / 6
        assert_eq!(c.euler_char_dual, BigUint::from(8u32));

        let c = classify(&spec("SUstar_2n(3)")).unwrap();
        assert_eq!((c.rank_gu, c.rank_k, c.toral_rank), (Some(5), Some(3), Some(2)));
        assert_eq!(c.verdict, Verdict::RankGapPontrjaginVanish);
        assert!(!c.minvol_positive);
        assert!(c.euler_char_dual.is_zero());

        let c = classify(&spec("SO0_pq(3,5)")).unwrap();
        assert_eq!(c.dual, "SO(8)/SO(3)xSO(5)");
        assert_eq!((c.rank_gu, c.rank_k, c.toral_rank), (Some(4), Some(3), Some(1)));
        assert_eq!(c.verdict, Verdict::RankGapPontrjaginVanish);
    }

    #[test]
    fn special_families() {
        let c = classify(&spec("TypeIV(8)")).unwrap();
        assert_eq!(c.verdict, Verdict::ParallelizableVanish);
        assert_eq!(c.rank_gu, None);
        assert_eq!(c.dim, 8);
        for s in ["Flat_n(3)", "ConstantPositive_n(4)"] {
            assert_eq!(classify(&spec(s)).unwrap().verdict, Verdict::ConstantCurvatureVanish);
        }
        for s in ["RHn(4)", "CHn(2)", "QHn(3)", "CayH"] {
            let c = classify(&spec(s)).unwrap();
            assert_eq!(c.verdict, Verdict::RankOne);
            assert_eq!(c.toral_rank, Some(0), "{s}");
        }
        assert_eq!(classify(&spec("RHn(3)")).unwrap().toral_rank, Some(1));
    }

    #[test]
    fn euler_characteristics_of_rank_one_duals() {
        // cell counts: CP^n and HP^n have n+1 cells, CayP^2 three, S^2k two.
        for n in 1..=6 {
            assert_eq!(euler_characteristic_dual(&spec(&format!("CHn({n})"))).unwrap(), BigUint::from(n as u32 + 1));
            assert_eq!(euler_characteristic_dual(&spec(&format!("QHn({n})"))).unwrap(), BigUint::from(n as u32 + 1));
        }
        assert_eq!(euler_characteristic_dual(&spec("CayH")).unwrap(), BigUint::from(3u32));
        assert_eq!(euler_characteristic_dual(&spec("RHn(2)")).unwrap(), BigUint::from(2u32));
        assert_eq!(euler_characteristic_dual(&spec("RHn(5)")).unwrap(), BigUint::zero());
        assert_eq!(euler_characteristic_dual(&spec("Flat_n(2)")).unwrap(), BigUint::zero());
        assert_eq!(euler_characteristic_dual(&spec("TypeIV(3)")).unwrap(), BigUint::zero());
    }

    #[test]
    fn grassmannian_euler_characteristic_is_binomial() {
        // SO(6)/SO(2)xSO(4) is the complex quadric Q_4, chi = 6.
        let c = classify(&spec("SO0_pq(2,4)")).unwrap();
        assert_eq!(c.euler_char_dual, BigUint::from(6u32));
        let c = classify(&spec("SU_pq(2,2)")).unwrap();
        assert_eq!(c.euler_char_dual, BigUint::from(6u32));
        let c = classify(&spec("Sp_pq(2,3)")).unwrap();
        assert_eq!(c.euler_char_dual, BigUint::from(10u32));
    }

    #[test]
    fn classification_json_round_trip() {
        let c = classify(&spec("SU_pq(2,3)")).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert!(text.contains("\"verdict\":\"EqualRank_EulerNonzero\""));
        assert!(text.contains("\"euler_char_dual\":10"));
        let back: Classification = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(classify(&back.spec().unwrap()).unwrap(), c);
    }
}
