//! Total Pontrjagin and Stiefel-Whitney classes of the rank-one duals, their
//! characteristic numbers, and the orientable bounding test.
//!
//! A characteristic number is the top-degree coefficient of a product of
//! homogeneous components of the total class; the fundamental class pairs to
//! 1 with the generator power spanning the top degree.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, sw_monomials_of, Partition, SWMonomial};
use crate::ring::{GradedElement, RingDescriptor};

/// Sign convention for the Cayley plane's first non-trivial class.
pub const CAYLEY_SIGN_CONVENTION: &str =
    "p(CayP^2) = 1 + 6u + 39u^2 with u in degree 8; the sign of p2 = +6u follows Borel-Hirzebruch";

/// Reason attached to Pontrjagin tables of dimensions not divisible by 4.
pub const REASON_DIM_NOT_DIV4: &str = "dimension_not_divisible_by_4";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DualSpace {
    Sphere(u32),
    ComplexProjective(u32),
    QuaternionicProjective(u32),
    CayleyPlane,
}

impl DualSpace {
    pub fn real_dimension(&self) -> u64 {
        match *self {
            DualSpace::Sphere(n) => n as u64,
            DualSpace::ComplexProjective(n) => 2 * n as u64,
            DualSpace::QuaternionicProjective(n) => 4 * n as u64,
            DualSpace::CayleyPlane => 16,
        }
    }
}

impl fmt::Display for DualSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualSpace::Sphere(n) => write!(f, "S^{n}"),
            DualSpace::ComplexProjective(n) => write!(f, "CP^{n}"),
            DualSpace::QuaternionicProjective(n) => write!(f, "HP^{n}"),
            DualSpace::CayleyPlane => write!(f, "CayP^2"),
        }
    }
}

/// Parses `S^n`, `CP^n`, `HP^n` (also `OP^n`) and `CayP^2`; the caret is optional.
impl FromStr for DualSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "CayP^2" || t == "CayP2" {
            return Ok(DualSpace::CayleyPlane);
        }
        let (head, n) = t
            .char_indices()
            .find(|(_, c)| c.is_ascii_digit() || *c == '^')
            .map(|(i, _)| (&t[..i], t[i..].trim_start_matches('^')))
            .ok_or_else(|| Error::MalformedSpec(s.to_string()))?;
        let n: u32 = n.parse().map_err(|_| Error::MalformedSpec(s.to_string()))?;
        if n == 0 {
            return Err(Error::InvalidParameters(format!("{s}: dimension parameter must be positive")));
        }
        match head {
            "S" => Ok(DualSpace::Sphere(n)),
            "CP" => Ok(DualSpace::ComplexProjective(n)),
            "HP" | "OP" => Ok(DualSpace::QuaternionicProjective(n)),
            _ => Err(Error::MalformedSpec(s.to_string())),
        }
    }
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Total Pontrjagin class. `CP^n` is written in the generator `a^2` (degree
/// 4), since only even powers of `a` carry Pontrjagin classes.
pub fn total_pontrjagin(space: DualSpace) -> GradedElement {
    let ring = |g, t| RingDescriptor::integer(g, t).expect("positive generator degree");
    match space {
        DualSpace::Sphere(n) => GradedElement::one(ring(n, 1)),
        DualSpace::ComplexProjective(n) => {
            let r = ring(4, (n / 2) as usize);
            let one_plus_v = GradedElement::one(r).add(&GradedElement::generator(r)).unwrap();
            one_plus_v.pow(n as u64 + 1)
        }
        DualSpace::QuaternionicProjective(n) => {
            let r = ring(4, n as usize);
            let one_plus_u = GradedElement::one(r).add(&GradedElement::generator(r)).unwrap();
            let one_plus_4u = GradedElement::monomial(r, 1, big(4)).add(&GradedElement::one(r)).unwrap();
            one_plus_u
                .pow(2 * n as u64 + 2)
                .mul(&one_plus_4u.invert_unit().expect("1 + 4u is a unit"))
                .unwrap()
        }
        DualSpace::CayleyPlane => GradedElement::from_i64s(ring(8, 2), &[1, 6, 39]).unwrap(),
    }
}

/// Total Stiefel-Whitney class, for spheres and complex projective spaces.
pub fn total_stiefel_whitney(space: DualSpace) -> Result<GradedElement> {
    match space {
        DualSpace::Sphere(n) => Ok(GradedElement::one(RingDescriptor::mod2(n, 1)?)),
        DualSpace::ComplexProjective(n) => {
            let r = RingDescriptor::mod2(2, n as usize)?;
            let one_plus_a = GradedElement::one(r).add(&GradedElement::generator(r))?;
            Ok(one_plus_a.pow(n as u64 + 1))
        }
        other => Err(Error::Unsupported(format!("SW classes out of scope for {other}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableKind {
    #[serde(rename = "pontrjagin")]
    Pontrjagin,
    #[serde(rename = "sw")]
    StiefelWhitney,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NumberIndex {
    Partition(Partition),
    Monomial(SWMonomial),
}

impl fmt::Display for NumberIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumberIndex::Partition(p) => write!(f, "{p}"),
            NumberIndex::Monomial(m) => write!(f, "{m}"),
        }
    }
}

/// Characteristic numbers of one manifold, indexed by partitions (Pontrjagin)
/// or SW monomials. Entries absent from the map are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharNumberTable {
    kind: TableKind,
    dimension: u64,
    entries: BTreeMap<NumberIndex, BigInt>,
    reason: Option<String>,
}

impl CharNumberTable {
    pub fn pontrjagin(dimension: u64, entries: BTreeMap<Partition, BigInt>) -> Result<Self> {
        if !dimension.is_multiple_of(4) {
            if entries.is_empty() {
                return Ok(Self::empty_pontrjagin(dimension));
            }
            return Err(Error::InvalidTable(format!(
                "Pontrjagin numbers need dimension divisible by 4, got {dimension}"
            )));
        }
        if let Some(bad) = entries.keys().find(|p| p.weight() * 4 != dimension) {
            return Err(Error::InvalidTable(format!("partition ({bad}) has the wrong weight for dimension {dimension}")));
        }
        Ok(Self {
            kind: TableKind::Pontrjagin,
            dimension,
            entries: entries.into_iter().map(|(k, v)| (NumberIndex::Partition(k), v)).collect(),
            reason: None,
        })
    }

    pub fn stiefel_whitney(dimension: u64, entries: BTreeMap<SWMonomial, BigInt>) -> Result<Self> {
        if let Some(bad) = entries.keys().find(|m| m.total_degree() != dimension) {
            return Err(Error::InvalidTable(format!("monomial {bad} has the wrong degree for dimension {dimension}")));
        }
        let two = big(2);
        Ok(Self {
            kind: TableKind::StiefelWhitney,
            dimension,
            entries: entries.into_iter().map(|(k, v)| (NumberIndex::Monomial(k), v.mod_floor(&two))).collect(),
            reason: None,
        })
    }

    pub fn empty_pontrjagin(dimension: u64) -> Self {
        Self {
            kind: TableKind::Pontrjagin,
            dimension,
            entries: BTreeMap::new(),
            reason: Some(REASON_DIM_NOT_DIV4.to_string()),
        }
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn dimension(&self) -> u64 {
        self.dimension
    }

    pub fn reason(&self) -> Option<&str> {
        self.reason.as_deref()
    }

    pub fn entries(&self) -> &BTreeMap<NumberIndex, BigInt> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: &NumberIndex) -> BigInt {
        self.entries.get(index).cloned().unwrap_or_default()
    }

    pub fn partition(&self, parts: &[u32]) -> BigInt {
        match Partition::new(parts.to_vec()) {
            Ok(p) => self.get(&NumberIndex::Partition(p)),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn is_all_zero(&self) -> bool {
        self.entries.values().all(Zero::is_zero)
    }

    /// Every index of this kind and dimension, not just the stored ones.
    pub fn full_index_set(&self) -> Vec<NumberIndex> {
        match self.kind {
            TableKind::Pontrjagin if self.dimension.is_multiple_of(4) => {
                partitions_of((self.dimension / 4) as u32).into_iter().map(NumberIndex::Partition).collect()
            }
            TableKind::Pontrjagin => Vec::new(),
            TableKind::StiefelWhitney => {
                sw_monomials_of(self.dimension as u32).into_iter().map(NumberIndex::Monomial).collect()
            }
        }
    }

    /// Applies `f` to every entry, reducing mod 2 for SW tables.
    pub fn map_entries(&self, mut f: impl FnMut(&BigInt) -> Result<BigInt>) -> Result<Self> {
        let two = big(2);
        let entries = self
            .entries
            .iter()
            .map(|(k, v)| {
                let mut x = f(v)?;
                if self.kind == TableKind::StiefelWhitney {
                    x = x.mod_floor(&two);
                }
                Ok((k.clone(), x))
            })
            .collect::<Result<_>>()?;
        Ok(Self { entries, ..self.clone() })
    }

    pub fn to_json(&self) -> Value {
        let entries: serde_json::Map<String, Value> = self
            .entries
            .iter()
            .map(|(k, v)| (k.to_string(), Value::Number(crate::bigjson::number_from_bigint(v))))
            .collect();
        let mut obj = serde_json::Map::new();
        obj.insert("dim".into(), Value::from(self.dimension));
        obj.insert("kind".into(), serde_json::to_value(self.kind).expect("kind"));
        obj.insert("entries".into(), Value::Object(entries));
        if let Some(reason) = &self.reason {
            obj.insert("reason".into(), Value::from(reason.clone()));
        }
        Value::Object(obj)
    }

    /// Accepts either a full table object `{"dim", "kind", "entries"}` or a
    /// bare `{"<index>": int}` map, whose kind and dimension are inferred
    /// from the keys.
    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value.as_object().ok_or_else(|| Error::InvalidTable("expected a JSON object".into()))?;
        if obj.contains_key("entries") {
            let raw: RawTable = serde_json::from_value(value.clone()).map_err(|e| Error::InvalidTable(e.to_string()))?;
            return Self::from_raw(raw.kind, Some(raw.dim), raw.entries);
        }
        let entries: BTreeMap<String, BigInt> = obj
            .iter()
            .map(|(k, v)| Ok((k.clone(), json_int(v)?)))
            .collect::<Result<_>>()?;
        let kind = match entries.keys().next() {
            Some(k) if k.trim_start().starts_with('w') => TableKind::StiefelWhitney,
            Some(_) => TableKind::Pontrjagin,
            None => return Err(Error::InvalidTable("bare table has no entries to infer its dimension".into())),
        };
        Self::from_raw(kind, None, entries)
    }

    fn from_raw(kind: TableKind, dim: Option<u64>, entries: BTreeMap<String, BigInt>) -> Result<Self> {
        match kind {
            TableKind::Pontrjagin => {
                let parsed = entries
                    .into_iter()
                    .map(|(k, v)| Ok((k.parse::<Partition>()?, v)))
                    .collect::<Result<BTreeMap<_, _>>>()?;
                let dim = match dim.or_else(|| parsed.keys().next().map(|p| 4 * p.weight())) {
                    Some(d) => d,
                    None => return Err(Error::InvalidTable("missing dimension".into())),
                };
                Self::pontrjagin(dim, parsed)
            }
            TableKind::StiefelWhitney => {
                let parsed = entries
                    .into_iter()
                    .map(|(k, v)| Ok((k.parse::<SWMonomial>()?, v)))
                    .collect::<Result<BTreeMap<_, _>>>()?;
                let dim = match dim.or_else(|| parsed.keys().next().map(SWMonomial::total_degree)) {
                    Some(d) => d,
                    None => return Err(Error::InvalidTable("missing dimension".into())),
                };
                Self::stiefel_whitney(dim, parsed)
            }
        }
    }
}

#[derive(Deserialize)]
struct RawTable {
    dim: u64,
    kind: TableKind,
    #[serde(with = "crate::bigjson::int_map")]
    entries: BTreeMap<String, BigInt>,
}

fn json_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().map_err(|_| Error::InvalidTable(format!("{n} is not an integer"))),
        other => Err(Error::InvalidTable(format!("{other} is not an integer"))),
    }
}

/// Top coefficient of `prod_j component(degree_j)`.
fn evaluate(total: &GradedElement, degrees: impl IntoIterator<Item = u64>) -> BigInt {
    let ring = total.ring();
    let product = degrees
        .into_iter()
        .fold(GradedElement::one(ring), |acc, d| acc.mul(&total.degree_component(d)).expect("same ring"));
    product.top_coefficient().clone()
}

/// All Pontrjagin numbers `p_I`, one per partition of `dim / 4`.
pub fn pontrjagin_numbers(space: DualSpace) -> CharNumberTable {
    let dim = space.real_dimension();
    if !dim.is_multiple_of(4) {
        return CharNumberTable::empty_pontrjagin(dim);
    }
    let total = total_pontrjagin(space);
    debug_assert_eq!(total.ring().top_degree(), dim);
    let entries = partitions_of((dim / 4) as u32)
        .into_iter()
        .map(|p| {
            let value = evaluate(&total, p.parts().iter().map(|&i| 4 * i as u64));
            (p, value)
        })
        .collect();
    CharNumberTable::pontrjagin(dim, entries).expect("weights match dimension")
}

/// All SW numbers, one per monomial of total degree `dim`.
pub fn stiefel_whitney_numbers(space: DualSpace) -> Result<CharNumberTable> {
    let total = total_stiefel_whitney(space)?;
    let dim = space.real_dimension();
    let entries = sw_monomials_of(dim as u32)
        .into_iter()
        .map(|m| {
            let value = evaluate(&total, m.factors().into_iter().map(u64::from));
            (m, value)
        })
        .collect();
    CharNumberTable::stiefel_whitney(dim, entries)
}

/// SW numbers of a closed orientable `dim`-manifold from orientability
/// (`w1 = 0`) and the Euler characteristic (`w_dim` evaluates to `χ mod 2`).
/// Fails when some monomial is not determined by these two facts, which
/// happens from dimension 4 on.
pub fn orientable_sw_numbers(dim: u32, euler_characteristic: &BigInt) -> Result<CharNumberTable> {
    let parity = euler_characteristic.mod_floor(&big(2));
    let entries = sw_monomials_of(dim)
        .into_iter()
        .map(|m| {
            let value = if m.exponent(1) > 0 {
                BigInt::zero()
            } else if m.factors() == [dim] {
                parity.clone()
            } else {
                return Err(Error::Unsupported(format!("{m} is not determined by w1 = 0 and the Euler characteristic")));
            };
            Ok((m, value))
        })
        .collect::<Result<_>>()?;
    CharNumberTable::stiefel_whitney(dim as u64, entries)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WallVerdict {
    Bounds,
    DoesNotBound,
    InsufficientData,
}

/// A closed orientable manifold bounds orientably iff all its Pontrjagin and
/// SW numbers vanish. `sw_table = None` means the SW side is unknown.
pub fn bounds_orientably(p_table: &CharNumberTable, sw_table: Option<&CharNumberTable>) -> Result<WallVerdict> {
    if p_table.kind() != TableKind::Pontrjagin {
        return Err(Error::InvalidTable("first table must hold Pontrjagin numbers".into()));
    }
    if let Some(sw) = sw_table {
        if sw.kind() != TableKind::StiefelWhitney {
            return Err(Error::InvalidTable("second table must hold SW numbers".into()));
        }
        if sw.dimension() != p_table.dimension() {
            return Err(Error::DimensionMismatch(p_table.dimension(), sw.dimension()));
        }
    }
    if !p_table.is_all_zero() {
        return Ok(WallVerdict::DoesNotBound);
    }
    Ok(match sw_table {
        None => WallVerdict::InsufficientData,
        Some(sw) if sw.is_all_zero() => WallVerdict::Bounds,
        Some(_) => WallVerdict::DoesNotBound,
    })
}

/// Wall verdict for a dual space from its own tables.
pub fn wall_verdict(space: DualSpace) -> Result<WallVerdict> {
    let p = pontrjagin_numbers(space);
    let sw = match stiefel_whitney_numbers(space) {
        Ok(t) => Some(t),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    bounds_orientably(&p, sw.as_ref())
}
