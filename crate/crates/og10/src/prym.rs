//! Euler characteristics of compactified Prym and Jacobian varieties of
//! irreducible nodal curves.
//!
//! The model is combinatorial. For an etale double cover `D -> C` of
//! irreducible nodal curves, the compactified Jacobian of `D` is stratified
//! by the subsets of nodes that get normalized, and a stratum meets the
//! compactified Prym exactly when that subset is invariant under the covering
//! involution. Invariant subsets of the `2r` cover nodes correspond to
//! subsets of the `r` base nodes, so `2^r` strata are in play. A stratum with
//! unnormalized nodes carries a `(C*)^k` torus factor (`chi = 0`); the fully
//! normalized stratum is an abelian variety of dimension `gt - 1`, where `gt`
//! is the genus of the normalization of `C`. Hence
//!
//! ```text
//! chi(compactified Prym) = 1 if gt = 1, and 0 if gt >= 2.
//! ```
//!
//! Both the closed form and a literal subset enumeration are provided; they
//! must agree wherever the enumeration is feasible.

use crate::error::{Error, Result};

/// Default ceiling on the brute-force subset enumeration (2^25 strata).
pub const DEFAULT_MAX_BRUTE_NODES: u32 = 25;

/// Combinatorial model of a connected etale double cover of an irreducible
/// nodal curve: `r` base nodes and the genus `gt >= 1` of the normalized
/// base. The cover has `2r` nodes, paired into `r` free involution orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodalCoverModel {
    base_nodes: u32,
    normalization_genus: u32,
}

impl NodalCoverModel {
    pub fn new(base_nodes: u32, normalization_genus: u32) -> Result<Self> {
        if normalization_genus == 0 {
            return Err(Error::NoEtaleDoubleCover);
        }
        Ok(Self { base_nodes, normalization_genus })
    }

    pub fn base_nodes(&self) -> u32 {
        self.base_nodes
    }

    pub fn normalization_genus(&self) -> u32 {
        self.normalization_genus
    }

    /// Nodes of the covering curve: two over each base node.
    pub fn cover_nodes(&self) -> u32 {
        2 * self.base_nodes
    }
}

/// One stratum of the compactified Prym, indexed by how many of the base
/// nodes are normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrymStratum {
    normalized_base_nodes: u32,
    torus_dimension: u32,
    abelian_dimension: u32,
}

impl PrymStratum {
    /// The stratum of `model` normalizing `normalized` of the base nodes.
    /// The remaining nodes contribute a torus factor of rank `r - normalized`;
    /// the compact part is an abelian variety of dimension `gt - 1`.
    pub fn new(model: NodalCoverModel, normalized: u32) -> Self {
        debug_assert!(normalized <= model.base_nodes);
        Self {
            normalized_base_nodes: normalized,
            torus_dimension: model.base_nodes - normalized,
            abelian_dimension: model.normalization_genus - 1,
        }
    }

    pub fn normalized_base_nodes(&self) -> u32 {
        self.normalized_base_nodes
    }

    pub fn torus_dimension(&self) -> u32 {
        self.torus_dimension
    }

    pub fn abelian_dimension(&self) -> u32 {
        self.abelian_dimension
    }

    pub fn euler(&self) -> i64 {
        stratum_euler(self.torus_dimension, self.abelian_dimension)
    }
}

/// chi of `(C*)^t x (abelian variety of dimension a)`: zero as soon as either
/// factor is positive-dimensional, one for a point.
fn stratum_euler(torus_dimension: u32, abelian_dimension: u32) -> i64 {
    if torus_dimension == 0 && abelian_dimension == 0 {
        1
    } else {
        0
    }
}

/// Closed-form Euler characteristic of the compactified Prym: 1 when the
/// normalized base curve has genus 1, 0 when it has genus >= 2. Independent
/// of the node count.
pub fn euler_prym(model: NodalCoverModel) -> i64 {
    if model.normalization_genus() == 1 {
        1
    } else {
        0
    }
}

/// Outcome of a subset enumeration, with the counters the tests pin down.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceReport {
    pub euler: i64,
    pub strata_enumerated: u64,
    pub nonzero_strata: u64,
}

/// Sums stratum Euler characteristics over all `2^r` involution-invariant
/// node subsets. Uses the default enumeration cap.
pub fn euler_prym_bruteforce(model: NodalCoverModel) -> Result<i64> {
    euler_prym_bruteforce_with_cap(model, DEFAULT_MAX_BRUTE_NODES).map(|r| r.euler)
}

pub fn euler_prym_bruteforce_with_cap(
    model: NodalCoverModel,
    cap: u32,
) -> Result<BruteForceReport> {
    let r = model.base_nodes();
    check_cap(r, cap)?;
    let mut euler = 0i64;
    let mut nonzero = 0u64;
    for subset in 0..(1u64 << r) {
        let stratum = PrymStratum::new(model, subset.count_ones());
        let chi = stratum.euler();
        if chi != 0 {
            nonzero += 1;
        }
        euler += chi;
    }
    Ok(BruteForceReport { euler, strata_enumerated: 1u64 << r, nonzero_strata: nonzero })
}

/// Jacobian-side mirror of the Prym enumeration: compactified Jacobian of an
/// irreducible nodal curve with the given node count and normalization genus.
/// Here the fully normalized stratum is the Jacobian of the normalization, an
/// abelian variety of dimension equal to the genus, so the total is 1 exactly
/// when the normalization is rational.
pub fn euler_compactified_jacobian_bruteforce(
    node_count: u32,
    normalization_genus: u32,
) -> Result<i64> {
    euler_compactified_jacobian_bruteforce_with_cap(
        node_count,
        normalization_genus,
        DEFAULT_MAX_BRUTE_NODES,
    )
    .map(|r| r.euler)
}

pub fn euler_compactified_jacobian_bruteforce_with_cap(
    node_count: u32,
    normalization_genus: u32,
    cap: u32,
) -> Result<BruteForceReport> {
    check_cap(node_count, cap)?;
    let mut euler = 0i64;
    let mut nonzero = 0u64;
    for subset in 0..(1u64 << node_count) {
        let torus_dimension = node_count - subset.count_ones();
        let chi = stratum_euler(torus_dimension, normalization_genus);
        if chi != 0 {
            nonzero += 1;
        }
        euler += chi;
    }
    Ok(BruteForceReport { euler, strata_enumerated: 1u64 << node_count, nonzero_strata: nonzero })
}

fn check_cap(nodes: u32, cap: u32) -> Result<()> {
    // Hard ceiling at 62 keeps the 1 << r shifts sound even with a raised cap.
    let cap = cap.min(62);
    if nodes > cap {
        return Err(Error::EnumerationCapExceeded { nodes, cap });
    }
    Ok(())
}
