//! ADE plane-curve singularity bookkeeping.
//!
//! Covers the local invariants used throughout the crate and the enumeration
//! of singularity configurations on a plane quintic:
//!
//! - **Milnor number** mu: equals the index, `mu(A_l) = l`, `mu(D_k) = k`.
//!   The total Milnor number of a configuration is the expected codimension
//!   of its stratum in the dual variety.
//! - **delta invariant** (genus drop): `delta(A_{2l-1}) = delta(A_{2l}) = l`,
//!   `delta(D_4) = delta(D_5) = 3`. The table stops at D5 on purpose; on a
//!   quintic section of a general cubic fourfold only A1..A5, D4, D5 occur,
//!   and we refuse to extrapolate past that.
//! - **geometric genus** of a singular curve: arithmetic genus minus the sum
//!   of delta invariants. A quintic has arithmetic genus 6, and among all
//!   configurations with total Milnor number <= 5 exactly one (5A1) reaches
//!   geometric genus 1; every other one stays at genus >= 2.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The two simple singularity families occurring on quintic sections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::D => write!(f, "D"),
        }
    }
}

/// One ADE singularity type, e.g. `A1` (a node) or `D5`.
///
/// The derived ordering is the canonical one used for display and
/// serialization: all A types by ascending index, then all D types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SingularityType {
    family: Family,
    index: u32,
}

impl SingularityType {
    pub const A1: Self = Self { family: Family::A, index: 1 };
    pub const A2: Self = Self { family: Family::A, index: 2 };
    pub const A3: Self = Self { family: Family::A, index: 3 };
    pub const A4: Self = Self { family: Family::A, index: 4 };
    pub const A5: Self = Self { family: Family::A, index: 5 };
    pub const D4: Self = Self { family: Family::D, index: 4 };
    pub const D5: Self = Self { family: Family::D, index: 5 };

    /// The seven types that can occur on a hyperplane section of a general
    /// cubic fourfold, in canonical order.
    pub const QUINTIC_ADMISSIBLE: [Self; 7] =
        [Self::A1, Self::A2, Self::A3, Self::A4, Self::A5, Self::D4, Self::D5];

    pub fn new(family: Family, index: u32) -> Result<Self> {
        let min = match family {
            Family::A => 1,
            Family::D => 4,
        };
        if index < min {
            return Err(Error::InvalidSingularityIndex { family, index, min });
        }
        Ok(Self { family, index })
    }

    pub fn a(index: u32) -> Result<Self> {
        Self::new(Family::A, index)
    }

    pub fn d(index: u32) -> Result<Self> {
        Self::new(Family::D, index)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// An ordinary node.
    pub fn is_node(&self) -> bool {
        *self == Self::A1
    }

    /// The Milnor number: the index itself, for both families.
    pub fn milnor_number(&self) -> u32 {
        self.index
    }

    /// The delta invariant (local genus drop).
    ///
    /// Defined here only on the seven admissible types: `ceil(m/2)` for `A_m`
    /// with m <= 5, and 3 for `D4`, `D5`. Anything outside the table is an
    /// error rather than a guess.
    pub fn delta_invariant(&self) -> Result<u32> {
        match (self.family, self.index) {
            (Family::A, m @ 1..=5) => Ok(m.div_ceil(2)),
            (Family::D, 4 | 5) => Ok(3),
            _ => Err(Error::UnsupportedSingularity(self.to_string())),
        }
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.index)
    }
}

impl FromStr for SingularityType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedSingularity(s.to_string());
        let family = match s.chars().next() {
            Some('A') => Family::A,
            Some('D') => Family::D,
            _ => return Err(bad()),
        };
        let index: u32 = s[1..].parse().map_err(|_| bad())?;
        Self::new(family, index)
    }
}

/// A multiset of singularity types on one curve, e.g. `5A1` or `A1+D4`.
///
/// The empty configuration denotes a smooth curve. Multiplicities are kept
/// strictly positive; a type that is absent has multiplicity zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SingularityConfiguration {
    counts: BTreeMap<SingularityType, u32>,
}

impl SingularityConfiguration {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a configuration from (type, multiplicity) pairs. Repeated types
    /// accumulate; zero multiplicities are dropped.
    pub fn from_counts<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (SingularityType, u32)>,
    {
        let mut counts = BTreeMap::new();
        for (t, m) in pairs {
            if m > 0 {
                *counts.entry(t).or_insert(0) += m;
            }
        }
        Self { counts }
    }

    /// `m` copies of a single type.
    pub fn uniform(t: SingularityType, m: u32) -> Self {
        Self::from_counts([(t, m)])
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Iterates (type, multiplicity) in canonical order.
    pub fn counts(&self) -> impl Iterator<Item = (SingularityType, u32)> + '_ {
        self.counts.iter().map(|(&t, &m)| (t, m))
    }

    pub fn multiplicity(&self, t: SingularityType) -> u32 {
        self.counts.get(&t).copied().unwrap_or(0)
    }

    /// Number of singular points.
    pub fn point_count(&self) -> u64 {
        self.counts.values().map(|&m| u64::from(m)).sum()
    }

    /// True when every singularity is an ordinary node.
    pub fn is_nodal(&self) -> bool {
        self.counts.keys().all(|t| t.is_node())
    }

    /// The total Milnor number, `sum index * multiplicity`. Equals the
    /// expected codimension of the corresponding stratum of the dual variety.
    pub fn mu_total(&self) -> u64 {
        self.counts().map(|(t, m)| u64::from(t.milnor_number()) * u64::from(m)).sum()
    }

    /// The total genus drop, `sum delta * multiplicity`. Errors on types
    /// outside the delta table.
    pub fn delta_sum(&self) -> Result<u64> {
        let mut sum = 0u64;
        for (t, m) in self.counts() {
            sum += u64::from(t.delta_invariant()?) * u64::from(m);
        }
        Ok(sum)
    }

    /// Multiset union: multiplicities add.
    pub fn union(&self, other: &Self) -> Self {
        Self::from_counts(self.counts().chain(other.counts()))
    }

    /// Sort key: total Milnor number first, then the index sequence in
    /// descending order with A before D at equal index. This reproduces the
    /// usual partition-style listing (A5, D5, A4+A1, D4+A1, ..., 5A1).
    fn canonical_key(&self) -> (u64, Vec<(Reverse<u32>, Family)>) {
        let mut parts = Vec::new();
        for (t, m) in self.counts() {
            for _ in 0..m {
                parts.push((Reverse(t.index()), t.family()));
            }
        }
        parts.sort();
        (self.mu_total(), parts)
    }
}

impl fmt::Display for SingularityConfiguration {
    /// Canonical label: `smooth` for the empty configuration, otherwise
    /// `+`-joined terms in canonical type order, e.g. `3A1+A2`, `A1+D4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "smooth");
        }
        let mut first = true;
        for (t, m) in self.counts() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if m > 1 {
                write!(f, "{m}{t}")?;
            } else {
                write!(f, "{t}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for SingularityConfiguration {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.counts.len()))?;
        for (t, m) in self.counts() {
            map.serialize_entry(&t.to_string(), &m)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for SingularityConfiguration {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ConfigVisitor;

        impl<'de> Visitor<'de> for ConfigVisitor {
            type Value = SingularityConfiguration;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from singularity labels to positive multiplicities")
            }

            fn visit_map<M: MapAccess<'de>>(
                self,
                mut access: M,
            ) -> std::result::Result<Self::Value, M::Error> {
                let mut pairs = Vec::new();
                while let Some((key, m)) = access.next_entry::<String, u32>()? {
                    let t = SingularityType::from_str(&key).map_err(de::Error::custom)?;
                    pairs.push((t, m));
                }
                Ok(SingularityConfiguration::from_counts(pairs))
            }
        }

        deserializer.deserialize_map(ConfigVisitor)
    }
}

/// A plane curve distinguished only by its degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaneCurveClass {
    degree: u32,
}

impl PlaneCurveClass {
    pub fn new(degree: u32) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidCurveDegree(degree));
        }
        Ok(Self { degree })
    }

    pub fn quintic() -> Self {
        Self { degree: 5 }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `(d-1)(d-2)/2`; 6 for a quintic.
    pub fn arithmetic_genus(&self) -> u64 {
        let d = u64::from(self.degree);
        (d - 1) * (d - 2) / 2
    }
}

/// Geometric genus of an irreducible plane curve of the given class with the
/// given singularities: arithmetic genus minus total genus drop.
///
/// May be negative for configurations no irreducible curve of this degree can
/// carry; admissibility is the caller's concern.
pub fn geometric_genus(curve: PlaneCurveClass, r: &SingularityConfiguration) -> Result<i64> {
    let drop = r.delta_sum()?;
    Ok(curve.arithmetic_genus() as i64 - drop as i64)
}

/// Enumerates every configuration over the seven admissible types with total
/// Milnor number at most `mu_max`, including the empty (smooth) one.
///
/// The list is duplicate-free and canonically ordered: ascending `mu_total`,
/// then partition order within each level. For `mu_max = 5` there are 22
/// configurations, 9 of them with `mu_total` exactly 5.
pub fn enumerate_configurations(mu_max: u64) -> Vec<SingularityConfiguration> {
    let mut out = Vec::new();
    let mut stack: Vec<(SingularityType, u32)> = Vec::new();
    enumerate_rec(&mut out, &mut stack, 0, mu_max);
    out.sort_by_cached_key(SingularityConfiguration::canonical_key);
    out
}

fn enumerate_rec(
    out: &mut Vec<SingularityConfiguration>,
    chosen: &mut Vec<(SingularityType, u32)>,
    type_pos: usize,
    budget: u64,
) {
    if type_pos == SingularityType::QUINTIC_ADMISSIBLE.len() {
        out.push(SingularityConfiguration::from_counts(chosen.iter().copied()));
        return;
    }
    let t = SingularityType::QUINTIC_ADMISSIBLE[type_pos];
    let weight = u64::from(t.milnor_number());
    let max_mult = budget / weight;
    for m in 0..=max_mult {
        if m > 0 {
            chosen.push((t, m as u32));
        }
        enumerate_rec(out, chosen, type_pos + 1, budget - m * weight);
        if m > 0 {
            chosen.pop();
        }
    }
}

/// The sublist of [`enumerate_configurations`] whose quintic geometric genus
/// is exactly 1. For `mu_max <= 5` this is empty below 5 and `[5A1]` at 5.
pub fn genus_one_configurations(mu_max: u64) -> Vec<SingularityConfiguration> {
    let quintic = PlaneCurveClass::quintic();
    enumerate_configurations(mu_max)
        .into_iter()
        .filter(|r| {
            geometric_genus(quintic, r).expect("admissible types lie in the delta table") == 1
        })
        .collect()
}
