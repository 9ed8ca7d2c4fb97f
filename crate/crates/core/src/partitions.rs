//! Integer partitions and Stiefel-Whitney monomials: the index sets of
//! characteristic-number tables.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Serializes as the
/// comma-joined parts, e.g. `2,1,1`; the empty partition serializes as `""`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::MalformedIndex(format!("{parts:?}: parts must be positive")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The SW monomial `prod w_{i_j}` with one factor per part.
    pub fn to_monomial(&self) -> SWMonomial {
        let mut exponents = BTreeMap::new();
        for &p in &self.0 {
            *exponents.entry(p).or_insert(0) += 1;
        }
        SWMonomial { exponents }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Accepts `2,1,1`, `(2,1,1)` and `()`; whitespace is ignored.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = match (compact.strip_prefix('('), compact.ends_with(')')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => compact.as_str(),
            _ => return Err(Error::MalformedIndex(s.to_string())),
        };
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.parse::<u32>().map_err(|_| Error::MalformedIndex(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedIndex(format!("{s}: parts must be weakly decreasing")));
        }
        Self::new(parts).map_err(|_| Error::MalformedIndex(s.to_string()))
    }
}

/// All partitions of `n`, each once, in lexicographically decreasing order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_partitions(n, n, &mut current, &mut out);
    out
}

fn extend_partitions(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        extend_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// A monomial `prod_i w_i^{r_i}` in Stiefel-Whitney classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SWMonomial {
    exponents: BTreeMap<u32, u32>,
}

impl SWMonomial {
    pub fn new(exponents: BTreeMap<u32, u32>) -> Result<Self> {
        if exponents.contains_key(&0) {
            return Err(Error::MalformedIndex("w0 is not a monomial generator".into()));
        }
        let exponents = exponents.into_iter().filter(|&(_, r)| r > 0).collect();
        Ok(Self { exponents })
    }

    pub fn exponents(&self) -> &BTreeMap<u32, u32> {
        &self.exponents
    }

    pub fn exponent(&self, class_index: u32) -> u32 {
        self.exponents.get(&class_index).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().map(|(&i, &r)| i as u64 * r as u64).sum()
    }

    /// Factors `w_i` listed with multiplicity, largest index first.
    pub fn factors(&self) -> Vec<u32> {
        self.to_partition().0
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts: Vec<u32> = self
            .exponents
            .iter()
            .flat_map(|(&i, &r)| std::iter::repeat_n(i, r as usize))
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

impl fmt::Display for SWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        let terms: Vec<String> = self
            .exponents
            .iter()
            .map(|(i, r)| if *r == 1 { format!("w{i}") } else { format!("w{i}^{r}") })
            .collect();
        f.write_str(&terms.join(" "))
    }
}

/// Parses `w1^2 w2` style strings; repeated factors accumulate.
impl FromStr for SWMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedIndex(s.to_string());
        let mut exponents = BTreeMap::new();
        if s.trim() == "1" {
            return Ok(Self { exponents });
        }
        for term in s.split_whitespace() {
            let body = term.strip_prefix('w').ok_or_else(bad)?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let idx = idx.parse::<u32>().map_err(|_| bad())?;
            if idx == 0 {
                return Err(bad());
            }
            *exponents.entry(idx).or_insert(0) += exp;
        }
        if exponents.is_empty() {
            return Err(bad());
        }
        Self::new(exponents)
    }
}

/// All SW monomials of total degree `dim`, ordered from the highest power of
/// `w1` down to the single class `w_dim`.
pub fn sw_monomials_of(dim: u32) -> Vec<SWMonomial> {
    partitions_of(dim).iter().rev().map(Partition::to_monomial).collect()
}
