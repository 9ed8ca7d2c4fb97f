//! Tangential-map arithmetic.
//!
//! Given a finite cover `f: M̄ → M` and a tangential map `t: M̄ → M_U`, both
//! pull characteristic numbers back by their degrees, so
//! `deg(f) · p_I(M) = deg(t) · p_I(M_U)`. Degrees are signed; the orientation
//! sign is carried by the degree itself and never branched on.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::charclass::{CharNumberTable, NumberIndex, TableKind};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Degrees of the covering map `M̄ → M` and the tangential map `M̄ → M_U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferDegrees {
    deg_f: BigInt,
    deg_t: BigInt,
}

impl TransferDegrees {
    pub fn new(deg_f: impl Into<BigInt>, deg_t: impl Into<BigInt>) -> Result<Self> {
        let deg_f = deg_f.into();
        if deg_f.is_zero() {
            return Err(Error::InconsistentDegrees("a covering map never has degree zero".into()));
        }
        Ok(Self { deg_f, deg_t: deg_t.into() })
    }

    pub fn deg_f(&self) -> &BigInt {
        &self.deg_f
    }

    pub fn deg_t(&self) -> &BigInt {
        &self.deg_t
    }
}

/// Numbers of `M` from those of `N` along a tangential map `M → N` of degree
/// `deg`. SW tables are reduced mod 2, so an even degree annihilates them.
pub fn pullback_numbers(table: &CharNumberTable, deg: &BigInt) -> CharNumberTable {
    table.map_entries(|v| Ok(v * deg)).expect("multiplication is total")
}

/// Solves `p_I(M) = deg(t) · p_I(M_U) / deg(f)`, requiring every quotient
/// to be exact.
pub fn solve_manifold_numbers(table_mu: &CharNumberTable, degrees: &TransferDegrees) -> Result<CharNumberTable> {
    let TransferDegrees { deg_f, deg_t } = degrees;
    if table_mu.kind() == TableKind::StiefelWhitney {
        if deg_f.is_even() {
            return Err(Error::InconsistentDegrees(format!(
                "deg_f = {deg_f} is even, so mod 2 numbers of M are not determined"
            )));
        }
        // An odd deg_f is 1 mod 2.
        return Ok(pullback_numbers(table_mu, deg_t));
    }
    table_mu.map_entries(|v| {
        let numerator = deg_t * v;
        let (quotient, remainder) = numerator.div_rem(deg_f);
        if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(Error::InconsistentDegrees(format!("{deg_t}·{v}/{deg_f} is not an integer")))
        }
    })
}

/// The divisibility invariant
/// `μ = LCM_I { LCM(p_I(M), p_I(M_U)) / p_I(M) }` over partitions with
/// `p_I(M) ≠ 0`, with per-partition contributions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuReport {
    #[serde(with = "crate::bigjson::uint")]
    pub mu: BigUint,
    #[serde(serialize_with = "contributions_json")]
    pub contributions: BTreeMap<Partition, BigUint>,
    #[serde(serialize_with = "partitions_json")]
    pub skipped: Vec<Partition>,
}

fn contributions_json<S: serde::Serializer>(m: &BTreeMap<Partition, BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let map: BTreeMap<String, BigInt> = m.iter().map(|(k, v)| (k.to_string(), BigInt::from(v.clone()))).collect();
    crate::bigjson::int_map::serialize(&map, s)
}

fn partitions_json<S: serde::Serializer>(v: &[Partition], s: S) -> std::result::Result<S::Ok, S::Error> {
    let names: Vec<String> = v.iter().map(ToString::to_string).collect();
    names.serialize(s)
}

fn pontrjagin_pair(table_m: &CharNumberTable, table_mu: &CharNumberTable) -> Result<()> {
    if table_m.kind() != TableKind::Pontrjagin || table_mu.kind() != TableKind::Pontrjagin {
        return Err(Error::InvalidTable("μ needs two Pontrjagin tables".into()));
    }
    if table_m.dimension() != table_mu.dimension() {
        return Err(Error::DimensionMismatch(table_m.dimension(), table_mu.dimension()));
    }
    Ok(())
}

pub fn mu(table_m: &CharNumberTable, table_mu: &CharNumberTable) -> Result<MuReport> {
    pontrjagin_pair(table_m, table_mu)?;
    let mut contributions = BTreeMap::new();
    let mut skipped = Vec::new();
    let mut mu = BigUint::one();
    for index in table_m.full_index_set() {
        let NumberIndex::Partition(partition) = &index else { unreachable!("Pontrjagin index") };
        let on_m = table_m.get(&index).abs();
        let on_dual = table_mu.get(&index).abs();
        match (on_m.is_zero(), on_dual.is_zero()) {
            (true, true) => skipped.push(partition.clone()),
            (true, false) => {
                return Err(Error::InconsistentTables(format!(
                    "p_I(M_U) ≠ 0 but p_I(M) = 0, impossible since a degree-zero tangential map forces p_I(M_U) = 0 (I = {partition})"
                )))
            }
            (false, true) => {
                return Err(Error::InconsistentTables(format!(
                    "p_I(M) ≠ 0 but p_I(M_U) = 0: no cover degree satisfies d·p_I(M) = r·p_I(M_U) (I = {partition})"
                )))
            }
            (false, false) => {
                let contribution = on_m.lcm(&on_dual) / &on_m;
                let contribution = contribution.to_biguint().expect("non-negative");
                mu = mu.lcm(&contribution);
                contributions.insert(partition.clone(), contribution);
            }
        }
    }
    Ok(MuReport { mu, contributions, skipped })
}

/// Whether a cover of degree `d` is compatible with `μ`, i.e. `μ | d`.
pub fn check_cover_degree(mu_value: &BigUint, d: &BigUint) -> bool {
    !mu_value.is_zero() && (d % mu_value).is_zero()
}

/// Factors a prime power `q = p^e`, returning `(p, e)`.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q.to_string()));
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut rest, mut e) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    if rest == 1 {
        Ok((p, e))
    } else {
        Err(Error::NotPrimePower(q.to_string()))
    }
}

/// `|GL(n, F_q)| = prod_{i=0}^{n-1} (q^n - q^i)`.
pub fn gl_order(n: u32, q: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidParameters("matrix size must be positive".into()));
    }
    prime_power(q)?;
    let q = BigUint::from(q);
    let qn = q.pow(n);
    Ok((0..n).map(|i| &qn - q.pow(i)).product())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeligneSullivanCheck {
    pub divides: bool,
    #[serde(with = "crate::bigjson::uint")]
    pub group_order: BigUint,
}

/// Checks `μ | |GL(2k+1, F_q1) × GL(2k+1, F_q2)|` for residue fields of
/// distinct characteristic.
pub fn deligne_sullivan_check(mu_value: &BigUint, k: u32, q1: u64, q2: u64) -> Result<DeligneSullivanCheck> {
    if mu_value.is_zero() || k == 0 {
        return Err(Error::InvalidParameters("μ and k must be positive".into()));
    }
    let (p1, _) = prime_power(q1)?;
    let (p2, _) = prime_power(q2)?;
    if p1 == p2 {
        return Err(Error::SameCharacteristic(q1, q2));
    }
    let group_order = gl_order(2 * k + 1, q1)? * gl_order(2 * k + 1, q2)?;
    Ok(DeligneSullivanCheck { divides: check_cover_degree(mu_value, &group_order), group_order })
}
