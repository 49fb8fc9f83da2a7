//! Explicit finite groups as permutation groups.
//!
//! Every [`PermGroup`] is fully enumerated when it is built; all orders,
//! subgroups and predicates are computed from the element list. There is no
//! stabilizer-chain machinery, so the practical limit is the enumeration cap
//! (200 000 elements unless overridden by `PSIGROUP_ENUM_CAP`).

mod group;
mod isomorphism;
mod maximal;
mod permutation;
mod subgroups;

use std::collections::BTreeMap;

use thiserror::Error;

pub use group::{default_cap, PermGroup, CAP_ENV_VAR, DEFAULT_CAP, TABLE_CAP};
pub use isomorphism::ISOMORPHISM_ORDER_CAP;
pub use permutation::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("not a permutation: {0}")]
    NotBijective(String),
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error("element closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("element is not in the group")]
    ForeignElement,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{p} is not a prime divisor of the group order {order}")]
    NotPrimeDivisor { p: u64, order: u64 },
    #[error("group of order {order} is not a {p}-group")]
    NotPGroup { p: u64, order: u64 },
    #[error("isomorphism testing is limited to order {cap}, got {order}")]
    OrderCapExceeded { order: u64, cap: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// Multiset of element orders: order `d` to the number of elements of
/// order `d`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderProfile {
    counts: BTreeMap<u64, u64>,
}

impl OrderProfile {
    pub fn from_orders(orders: impl IntoIterator<Item = u64>) -> Self {
        let mut counts = BTreeMap::new();
        for d in orders {
            *counts.entry(d).or_insert(0) += 1;
        }
        OrderProfile { counts }
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn count(&self, order: u64) -> u64 {
        self.counts.get(&order).copied().unwrap_or(0)
    }

    /// Number of elements, i.e. the group order.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Sum of element orders.
    pub fn psi(&self) -> u64 {
        self.counts.iter().map(|(d, c)| d * c).sum()
    }

    pub fn max_order(&self) -> u64 {
        self.counts.keys().next_back().copied().unwrap_or(1)
    }
}
