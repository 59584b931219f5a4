//! Exact evaluation of the 5-tangent-hyperplane count.
//!
//! For a general degree-`d` hypersurface in P^5 (`d >= 3`), the number of
//! hyperplanes whose section has exactly five nodes is given by Kazarian's
//! multi-singularity degree formula
//!
//! ```text
//! m_5A1(d) = (1/120) * (d - 2) * d * P(d)
//! ```
//!
//! with `P` a monic degree-23 integer polynomial. At `d = 3` the value is
//! 176,904 = 3^5 * (3^6 - 1), the count for a general cubic fourfold.
//!
//! Everything here is arbitrary-precision integer arithmetic; there is no
//! floating point in this module. Two independent evaluation routes (Horner
//! and naive power summation) guard against coefficient transposition, the
//! most likely way to corrupt a 24-entry table.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::singularity::{SingularityConfiguration, SingularityType};

/// Coefficients of the inner degree-23 polynomial, highest degree first.
pub const INNER_COEFFICIENTS: [i64; 24] = [
    1,
    -18,
    154,
    -832,
    3_181,
    -9_332,
    23_306,
    -56_258,
    137_704,
    -315_702,
    632_037,
    -1_167_746,
    2_276_543,
    -4_606_484,
    8_183_892,
    -12_182_630,
    19_262_625,
    -37_322_080,
    63_347_155,
    -72_821_310,
    73_475_394,
    -156_527_928,
    284_455_368,
    -193_415_040,
];

/// The rational prefactor denominator in the degree formula.
pub const PREFACTOR_DENOMINATOR: u32 = 120;

/// An integer-coefficient polynomial with structural factors `(d - 2) * d`
/// and a rational prefactor `1/denominator`, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerativePolynomial {
    prefactor_denominator: u32,
    coefficients: Vec<i64>,
}

impl EnumerativePolynomial {
    /// The 5-tangent-hyperplane count `m_5A1`.
    pub fn five_tangent() -> Self {
        Self {
            prefactor_denominator: PREFACTOR_DENOMINATOR,
            coefficients: INNER_COEFFICIENTS.to_vec(),
        }
    }

    pub fn prefactor_denominator(&self) -> u32 {
        self.prefactor_denominator
    }

    /// Inner coefficients, highest degree first.
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Evaluates `(1/den) * (d - 2) * d * P(d)` with the inner polynomial
    /// evaluated by Horner's scheme.
    ///
    /// The division by the prefactor denominator is exact for every integer
    /// `d` (the formula is integer-valued); an inexact division means the
    /// coefficient table was corrupted and is reported as an internal error.
    pub fn evaluate(&self, d: i64) -> Result<BigInt> {
        let x = BigInt::from(d);
        let mut inner = BigInt::zero();
        for &c in &self.coefficients {
            inner = inner * &x + c;
        }
        self.finish(d, inner)
    }

    /// Same value via explicit power summation, kept deliberately independent
    /// of [`EnumerativePolynomial::evaluate`].
    pub fn evaluate_power_sum(&self, d: i64) -> Result<BigInt> {
        let x = BigInt::from(d);
        let degree = self.coefficients.len() - 1;
        let mut inner = BigInt::zero();
        for (i, &c) in self.coefficients.iter().enumerate() {
            inner += c * x.pow((degree - i) as u32);
        }
        self.finish(d, inner)
    }

    fn finish(&self, d: i64, inner: BigInt) -> Result<BigInt> {
        let numerator = (BigInt::from(d) - 2) * d * inner;
        let denominator = BigInt::from(self.prefactor_denominator);
        let remainder: BigInt = &numerator % &denominator;
        if remainder.is_zero() {
            Ok(numerator / denominator)
        } else {
            Err(Error::InternalInvariant(format!(
                "division by {} not exact at d = {d}",
                self.prefactor_denominator
            )))
        }
    }
}

/// The number of 5-tangent hyperplanes to a general degree-`d` hypersurface
/// in P^5. Enumeratively valid for `d >= 3` (see [`enumerative_validity`]);
/// evaluation itself is defined for every integer.
pub fn five_tangent_count(d: i64) -> Result<BigInt> {
    EnumerativePolynomial::five_tangent().evaluate(d)
}

/// Independent re-evaluation of [`five_tangent_count`] by power summation.
pub fn five_tangent_count_power_sum(d: i64) -> Result<BigInt> {
    EnumerativePolynomial::five_tangent().evaluate_power_sum(d)
}

/// The degree formula counts actual hyperplanes only for `d >= 3`.
pub fn enumerative_validity(d: i64) -> bool {
    d >= 3
}

/// Degree of the dual variety of a smooth cubic fourfold: `3 * 2^4 = 48`.
pub fn dual_variety_degree_cubic_fourfold() -> u64 {
    3 * 2u64.pow(4)
}

/// One named identity with both sides evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub left: BigInt,
    pub right: BigInt,
    pub equal: bool,
}

impl IdentityCheck {
    fn new(name: &'static str, left: BigInt, right: BigInt) -> Self {
        let equal = left == right;
        Self { name, left, right, equal }
    }
}

/// The classical cross-checks on the tangency counts:
///
/// - `3^5 * (3^6 - 1)` against the computed 5-tangent count for a cubic
///   fourfold (a numerical coincidence with the 3-torsion count of an
///   abelian 5-fold);
/// - `2^4 * (2^5 - 1) - 1 = 495`, the number of 4-tangent hyperplanes to a
///   general cubic threefold (its non-trivial odd theta characteristics);
/// - 45, the tritangent hyperplanes of a cubic surface, recorded as a
///   reference constant.
pub fn identity_checks() -> Vec<IdentityCheck> {
    let torsion = BigInt::from(3).pow(5) * (BigInt::from(3).pow(6) - 1);
    let five_tangent = five_tangent_count(3).expect("division by 120 is exact at d = 3");
    let theta = BigInt::from(2).pow(4) * (BigInt::from(2).pow(5) - 1) - 1;
    vec![
        IdentityCheck::new("3^5*(3^6-1) = m5A1(3)", torsion, five_tangent),
        IdentityCheck::new("2^4*(2^5-1)-1 = 495", theta, BigInt::from(495)),
        IdentityCheck::new("cubic surface tritangents = 45", BigInt::from(45), BigInt::from(45)),
    ]
}

/// Degree and codimension record for one stratum of the dual variety.
/// Degrees are stored only where a formula pins them down; the rest of the
/// strata keep `None` rather than an invented number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumDegreeRecord {
    configuration: SingularityConfiguration,
    codimension: u64,
    degree: Option<BigInt>,
}

impl StratumDegreeRecord {
    pub fn new(configuration: SingularityConfiguration, degree: Option<BigInt>) -> Self {
        let codimension = configuration.mu_total();
        Self { configuration, codimension, degree }
    }

    pub fn configuration(&self) -> &SingularityConfiguration {
        &self.configuration
    }

    /// Expected codimension of the stratum, equal to its total Milnor number.
    pub fn codimension(&self) -> u64 {
        self.codimension
    }

    pub fn degree(&self) -> Option<&BigInt> {
        self.degree.as_ref()
    }
}

/// The two stratum degrees known for a general cubic fourfold: the dual
/// variety itself (A1, degree 48) and the 5-tangent locus (5A1, degree
/// 176,904).
pub fn known_stratum_degrees() -> Vec<StratumDegreeRecord> {
    vec![
        StratumDegreeRecord::new(
            SingularityConfiguration::uniform(SingularityType::A1, 1),
            Some(BigInt::from(dual_variety_degree_cubic_fourfold())),
        ),
        StratumDegreeRecord::new(
            SingularityConfiguration::uniform(SingularityType::A1, 5),
            Some(five_tangent_count(3).expect("division by 120 is exact at d = 3")),
        ),
    ]
}
