//! Betti-number constraints for compact hyper-Kähler manifolds, specialized
//! to OG10 (complex dimension 10, so `n = 5` and Betti numbers `b_0..b_20`).
//!
//! The constraints in play:
//!
//! - `b_0 = 1`, `b_1 = 0`, Poincaré duality `b_k = b_{4n-k}`;
//! - `b_2 = 24` for OG10 (Rapagnetta);
//! - Salamon's relation `2 * sum_{l=1}^{2n} (-1)^l (3l^2 - n) b_{2n-l} = n b_{2n}`;
//! - Verbitsky's bounds `b_{2k} >= C(b_2 + k - 1, k)` for `2 <= k <= n`,
//!   from the symmetric-power embedding of `H^2`;
//! - the Euler characteristic `sum (-1)^i b_i = 176,904`.
//!
//! These restrict but do not determine the Betti numbers: Salamon and Euler
//! are two linear equations on four even unknowns (`b_4, b_6, b_8, b_10`)
//! once the odd Betti numbers are fixed, leaving a two-parameter family.
//! [`search_feasible_og10`] enumerates that family in lexicographic order,
//! which is how the under-determination is witnessed.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The Euler characteristic of a hyper-Kähler manifold of OG10 type.
pub const OG10_EULER_CHARACTERISTIC: i128 = 176_904;

/// Second Betti number of OG10 (Rapagnetta).
pub const OG10_B2: u64 = 24;

/// A candidate Betti-number sequence `b_0..b_4n` of a compact manifold of
/// real dimension `4n`. Construction checks only the shape (length
/// `4n + 1`); the cohomological constraints are what the checks below report
/// on, so a vector violating them is still representable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BettiVectorRepr", into = "BettiVectorRepr")]
pub struct BettiVector {
    half_dimension: u32,
    values: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiVectorRepr {
    n: u32,
    b: Vec<u64>,
}

impl TryFrom<BettiVectorRepr> for BettiVector {
    type Error = Error;

    fn try_from(repr: BettiVectorRepr) -> Result<Self> {
        BettiVector::new(repr.n, repr.b)
    }
}

impl From<BettiVector> for BettiVectorRepr {
    fn from(v: BettiVector) -> Self {
        Self { n: v.half_dimension, b: v.values }
    }
}

impl BettiVector {
    pub fn new(half_dimension: u32, values: Vec<u64>) -> Result<Self> {
        if half_dimension == 0 {
            return Err(Error::MalformedBettiVector("half-dimension must be >= 1".into()));
        }
        let expected = 4 * half_dimension as usize + 1;
        if values.len() != expected {
            return Err(Error::MalformedBettiVector(format!(
                "expected {expected} entries b_0..b_{}, got {}",
                expected - 1,
                values.len()
            )));
        }
        Ok(Self { half_dimension, values })
    }

    pub fn half_dimension(&self) -> u32 {
        self.half_dimension
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `b_k`, panicking if `k > 4n`.
    pub fn b(&self, k: usize) -> u64 {
        self.values[k]
    }

    pub fn satisfies_duality(&self) -> bool {
        let top = self.values.len() - 1;
        (0..=top / 2).all(|k| self.values[k] == self.values[top - k])
    }
}

/// Left and right sides of Salamon's relation on a raw sequence of length
/// `4n + 1`. Only `b_0..b_{2n}` enter the relation, so this is well defined
/// whether or not the sequence satisfies duality or `b_0 = 1`; the function
/// is linear in the sequence.
pub fn salamon_sides(half_dimension: u32, values: &[u64]) -> Result<(BigInt, BigInt)> {
    let n = half_dimension as usize;
    if values.len() != 4 * n + 1 {
        return Err(Error::MalformedBettiVector(format!(
            "expected {} entries, got {}",
            4 * n + 1,
            values.len()
        )));
    }
    let mut left = BigInt::zero();
    for l in 1..=2 * n {
        let coefficient = 3 * BigInt::from(l) * l - half_dimension;
        let term = coefficient * values[2 * n - l];
        if l % 2 == 0 {
            left += term;
        } else {
            left -= term;
        }
    }
    left *= 2;
    let right = BigInt::from(half_dimension) * values[2 * n];
    Ok((left, right))
}

/// Result of Salamon's relation on a duality-respecting vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SalamonCheck {
    pub holds: bool,
    pub left: BigInt,
    pub right: BigInt,
}

/// Checks Salamon's relation. Requires Poincaré duality up front: the
/// relation is derived for compact hyper-Kähler manifolds, so a sequence
/// without duality is rejected rather than scored.
pub fn salamon_check(b: &BettiVector) -> Result<SalamonCheck> {
    if !b.satisfies_duality() {
        return Err(Error::MalformedBettiVector(
            "Salamon's relation requires Poincaré duality".into(),
        ));
    }
    let (left, right) = salamon_sides(b.half_dimension(), b.values())?;
    Ok(SalamonCheck { holds: left == right, left, right })
}

/// `C(top, k)` with the convention that it vanishes for `k > top`.
fn binomial(top: u128, k: u32) -> BigUint {
    if u128::from(k) > top {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 1..=u128::from(k) {
        // Each partial product is the binomial C(top - k + i, i), so the
        // division is exact.
        acc = acc * (top - u128::from(k) + i) / i;
    }
    acc
}

/// Verbitsky's lower bounds `b_{2k} >= C(b_2 + k - 1, k)` for `k = 2..=n`.
///
/// For `b_2 + k - 1 < k` (possible only when `b_2 < 3`, outside the regime of
/// any known hyper-Kähler manifold) the binomial degenerates to 0 and the
/// bound is vacuous.
pub fn verbitsky_bounds(half_dimension: u32, b2: u64) -> Vec<(u32, BigUint)> {
    (2..=half_dimension).map(|k| (k, binomial(u128::from(b2) + u128::from(k) - 1, k))).collect()
}

/// The alternating sum `sum (-1)^i b_i`. Exact: 21 terms of `u64` magnitude
/// cannot overflow an `i128`.
pub fn euler_from_betti(b: &BettiVector) -> i128 {
    b.values()
        .iter()
        .enumerate()
        .map(|(i, &v)| if i % 2 == 0 { i128::from(v) } else { -i128::from(v) })
        .sum()
}

/// One failed Verbitsky bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbitskyViolation {
    pub k: u32,
    pub required: BigUint,
    pub actual: u64,
}

/// Independent verdicts on each OG10 constraint for one candidate vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintReport {
    pub b2_is_24: bool,
    pub b1_is_zero: bool,
    pub duality_holds: bool,
    pub salamon_holds: bool,
    pub salamon_left: BigInt,
    pub salamon_right: BigInt,
    pub verbitsky_violations: Vec<VerbitskyViolation>,
    pub euler_value: i128,
    pub euler_matches: bool,
}

impl ConstraintReport {
    pub fn all_pass(&self) -> bool {
        self.b2_is_24
            && self.b1_is_zero
            && self.duality_holds
            && self.salamon_holds
            && self.verbitsky_violations.is_empty()
            && self.euler_matches
    }
}

/// Runs every OG10 constraint on a half-dimension-5 vector and reports each
/// verdict independently. Salamon's sides involve only `b_0..b_10`, so they
/// are scored even when duality fails (and flagged separately).
pub fn check_og10(b: &BettiVector) -> Result<ConstraintReport> {
    if b.half_dimension() != 5 {
        return Err(Error::WrongHalfDimension { expected: 5, actual: b.half_dimension() });
    }
    let (salamon_left, salamon_right) = salamon_sides(b.half_dimension(), b.values())?;
    let verbitsky_violations = verbitsky_bounds(b.half_dimension(), OG10_B2)
        .into_iter()
        .filter_map(|(k, required)| {
            let actual = b.b(2 * k as usize);
            (BigUint::from(actual) < required).then_some(VerbitskyViolation { k, required, actual })
        })
        .collect();
    let euler_value = euler_from_betti(b);
    Ok(ConstraintReport {
        b2_is_24: b.b(2) == OG10_B2,
        b1_is_zero: b.b(1) == 0,
        duality_holds: b.satisfies_duality(),
        salamon_holds: salamon_left == salamon_right,
        salamon_left,
        salamon_right,
        verbitsky_violations,
        euler_value,
        euler_matches: euler_value == OG10_EULER_CHARACTERISTIC,
    })
}

/// Upper bounds for the four free odd Betti numbers in the feasibility
/// search. Nothing constrains them beyond `b_1 = 0` and nonnegativity, so
/// they have to be boxed for the search to terminate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddBettiBounds {
    pub b3: u32,
    pub b5: u32,
    pub b7: u32,
    pub b9: u32,
}

impl OddBettiBounds {
    pub fn uniform(bound: u32) -> Self {
        Self { b3: bound, b5: bound, b7: bound, b9: bound }
    }
}

impl Default for OddBettiBounds {
    fn default() -> Self {
        Self::uniform(12)
    }
}

/// Result of the feasibility search. `truncated` is set when the result was
/// capped at the requested limit with candidates still unexplored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleSearch {
    pub vectors: Vec<BettiVector>,
    pub truncated: bool,
}

// Salamon and Euler on an OG10 candidate (b_0 = 1, b_1 = 0, b_2 = 24, duality)
// reduce to the integer system
//
//     4*b_8  = 145784 + 49*b_3 - 36*b_4 + 25*b_5 - 16*b_6 + 9*b_7 + b_9
//     b_10   = 176854 + 2*(b_3 + b_5 + b_7 + b_9) - 2*(b_4 + b_6 + b_8)
//
// so (b_3, b_4, b_5, b_6, b_7, b_9) are free up to bounds and divisibility,
// and b_8, b_10 follow. The Verbitsky floors below close the box.
const EVEN_FLOOR_B4: i64 = 300; // C(25, 2)
const EVEN_FLOOR_B6: i64 = 2_600; // C(26, 3)
const EVEN_FLOOR_B8: i64 = 17_550; // C(27, 4)
const EVEN_FLOOR_B10: i64 = 98_280; // C(28, 5)

/// Enumerates Betti vectors passing [`check_og10`], in lexicographic order,
/// stopping after `limit` of them.
///
/// The feasible family is enormous (two free even parameters on top of the
/// boxed odd ones), so a full listing is not meaningful output; the cap
/// makes the result deterministic and usable. Any two returned vectors
/// already witness that the constraints do not determine the Betti numbers.
pub fn search_feasible_og10(bounds: OddBettiBounds, limit: usize) -> FeasibleSearch {
    let mut vectors = Vec::new();
    if limit == 0 {
        return FeasibleSearch { vectors, truncated: true };
    }
    let (hi3, hi5, hi7, hi9) =
        (i64::from(bounds.b3), i64::from(bounds.b5), i64::from(bounds.b7), i64::from(bounds.b9));

    for b3 in 0..=hi3 {
        // Largest b_4 for which b_8 >= floor stays reachable at the extremes
        // of the remaining variables.
        let b4_hi =
            (145_784 + 49 * b3 + 25 * hi5 + 9 * hi7 + hi9 - 16 * EVEN_FLOOR_B6 - 4 * EVEN_FLOOR_B8)
                / 36;
        for b4 in EVEN_FLOOR_B4..=b4_hi {
            for b5 in 0..=hi5 {
                let b6_hi = (145_784 + 49 * b3 - 36 * b4 + 25 * b5 + 9 * hi7 + hi9
                    - 4 * EVEN_FLOOR_B8)
                    / 16;
                for b6 in EVEN_FLOOR_B6..=b6_hi {
                    for b7 in 0..=hi7 {
                        let base = 145_784 + 49 * b3 - 36 * b4 + 25 * b5 - 16 * b6 + 9 * b7;
                        // b_9 must make base + b_9 divisible by 4; b_8 then
                        // increases with b_9, keeping the output lexicographic.
                        let mut b9 = ((-base) % 4 + 4) % 4;
                        while b9 <= hi9 {
                            let b8 = (base + b9) / 4;
                            if b8 >= EVEN_FLOOR_B8 {
                                let b10 = 176_854 + 2 * (b3 + b5 + b7 + b9) - 2 * (b4 + b6 + b8);
                                if b10 >= EVEN_FLOOR_B10 {
                                    vectors.push(assemble(&[
                                        1, 0, 24, b3, b4, b5, b6, b7, b8, b9, b10,
                                    ]));
                                    if vectors.len() == limit {
                                        return FeasibleSearch { vectors, truncated: true };
                                    }
                                }
                            }
                            b9 += 4;
                        }
                    }
                }
            }
        }
    }
    FeasibleSearch { vectors, truncated: false }
}

fn assemble(half: &[i64; 11]) -> BettiVector {
    let mut values: Vec<u64> = half.iter().map(|&v| v as u64).collect();
    for k in (0..10).rev() {
        values.push(half[k] as u64);
    }
    BettiVector::new(5, values).expect("21 entries by construction")
}
