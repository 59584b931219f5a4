//! Euler characteristics of stratified proper fibrations.
//!
//! For a proper fibration whose base is partitioned into strata with constant
//! fiber Euler characteristic, additivity and multiplicativity give
//! `chi(total space) = sum over strata of chi(base stratum) * chi(fiber)`.
//! Strata whose fiber has `chi = 0` drop out, so only their labels need to be
//! carried; their base Euler characteristics are recorded as unused.
//!
//! [`build_og10_model`] instantiates this for the Lagrangian fibration of an
//! OG10 manifold over the dual projective space of a general cubic fourfold:
//! smooth fibers are complex 5-tori (`chi = 0`), singular fibers are
//! compactified Pryms of quintic double covers, and the only strata with
//! nonvanishing fiber contribution are the 176,904 points whose quintic is
//! 5-nodal of geometric genus 1, each contributing 1.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::degrees::five_tangent_count;
use crate::error::{Error, Result};
use crate::prym::{euler_prym, NodalCoverModel};
use crate::singularity::{
    enumerate_configurations, geometric_genus, PlaneCurveClass, SingularityConfiguration,
    SingularityType,
};

/// Euler characteristic (or finite point count) of a base stratum. Strata
/// that cannot contribute keep an explicit `Unused` marker instead of a
/// number nobody computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StratumBase {
    Count(BigInt),
    Unused,
}

/// One stratum of a proper fibration: base chi (or point count) and the chi
/// of the fiber over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationStratum {
    label: String,
    base: StratumBase,
    fiber_euler: i64,
}

impl FibrationStratum {
    pub fn new(label: impl Into<String>, base: StratumBase, fiber_euler: i64) -> Self {
        Self { label: label.into(), base, fiber_euler }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn base(&self) -> &StratumBase {
        &self.base
    }

    pub fn fiber_euler(&self) -> i64 {
        self.fiber_euler
    }

    /// `chi(base) * chi(fiber)`; zero fibers contribute zero no matter the
    /// base, and a nonzero fiber over an unused base is a modeling error.
    pub fn contribution(&self) -> Result<BigInt> {
        if self.fiber_euler == 0 {
            return Ok(BigInt::zero());
        }
        match &self.base {
            StratumBase::Count(chi) => Ok(chi * self.fiber_euler),
            StratumBase::Unused => Err(Error::UnusedBaseWithNonzeroFiber(self.label.clone())),
        }
    }
}

/// A list of strata declared (by the caller) to partition the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationModel {
    strata: Vec<FibrationStratum>,
}

impl FibrationModel {
    /// Builds a model, rejecting duplicate stratum labels.
    pub fn new(strata: Vec<FibrationStratum>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for stratum in &strata {
            if !seen.insert(stratum.label()) {
                return Err(Error::DuplicateStratumLabel(stratum.label().to_string()));
            }
        }
        Ok(Self { strata })
    }

    pub fn strata(&self) -> &[FibrationStratum] {
        &self.strata
    }

    /// `chi` of the total space: the sum of per-stratum contributions.
    pub fn total_euler(&self) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for stratum in &self.strata {
            total += stratum.contribution()?;
        }
        Ok(total)
    }

    /// Model of the disjoint union of two bases; labels must stay distinct.
    pub fn disjoint_union(self, other: Self) -> Result<Self> {
        let mut strata = self.strata;
        strata.extend(other.strata);
        Self::new(strata)
    }
}

/// One row of the OG10 stratification, with the curve data behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Og10Stratum {
    pub stratum: FibrationStratum,
    pub configuration: Option<SingularityConfiguration>,
    pub mu_total: u64,
    pub geometric_genus: i64,
}

/// The stratified model of the OG10 Lagrangian fibration over `(P^5)^dual`:
///
/// - `U`, the locus of smooth hyperplane sections; fibers are smooth
///   intermediate Jacobians, complex tori with `chi = 0`;
/// - one stratum per nonempty singularity configuration with total Milnor
///   number at most 5. The fiber over such a stratum is the compactified
///   Prym of the associated quintic double cover, with `chi = 1` exactly
///   when the quintic has geometric genus 1 — which happens only for `5A1` —
///   and `chi = 0` otherwise.
///
/// The `5A1` stratum is finite of cardinality 176,904 (the 5-tangent
/// hyperplane count at d = 3); every other base count is unused.
pub fn build_og10_model() -> FibrationModel {
    FibrationModel::new(build_og10_strata().into_iter().map(|row| row.stratum).collect())
        .expect("configuration labels are distinct")
}

/// The OG10 strata together with their trace data (configuration, total
/// Milnor number, geometric genus).
pub fn build_og10_strata() -> Vec<Og10Stratum> {
    let quintic = PlaneCurveClass::quintic();
    let five_nodal = SingularityConfiguration::uniform(SingularityType::A1, 5);

    enumerate_configurations(5)
        .into_iter()
        .map(|configuration| {
            let genus = geometric_genus(quintic, &configuration)
                .expect("admissible types lie in the delta table");
            if configuration.is_empty() {
                // Smooth sections: Lagrangian torus fibers.
                return Og10Stratum {
                    stratum: FibrationStratum::new("U", StratumBase::Unused, 0),
                    configuration: None,
                    mu_total: 0,
                    geometric_genus: genus,
                };
            }
            let fiber_euler = if genus == 1 {
                if configuration.is_nodal() {
                    let model = NodalCoverModel::new(
                        configuration.multiplicity(SingularityType::A1),
                        genus as u32,
                    )
                    .expect("geometric genus 1 cover");
                    euler_prym(model)
                } else {
                    1
                }
            } else {
                0
            };
            let base = if configuration == five_nodal {
                StratumBase::Count(
                    five_tangent_count(3).expect("division by 120 is exact at d = 3"),
                )
            } else {
                StratumBase::Unused
            };
            let mu_total = configuration.mu_total();
            Og10Stratum {
                stratum: FibrationStratum::new(configuration.to_string(), base, fiber_euler),
                configuration: Some(configuration),
                mu_total,
                geometric_genus: genus,
            }
        })
        .collect()
}
