//! Stratum signatures `Q_g(k_1, ..., k_n)` and their intrinsic data.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Genus together with the multiset of zero orders (`-1` marks a simple pole).
///
/// Orders are kept sorted in non-increasing order, so two signatures compare
/// equal exactly when they describe the same stratum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSignature", into = "RawSignature")]
pub struct StratumSignature {
    genus: u32,
    orders: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RawSignature {
    genus: u32,
    orders: Vec<i32>,
}

impl TryFrom<RawSignature> for StratumSignature {
    type Error = Error;

    fn try_from(raw: RawSignature) -> Result<Self> {
        StratumSignature::new(raw.genus, raw.orders)
    }
}

impl From<StratumSignature> for RawSignature {
    fn from(s: StratumSignature) -> Self {
        RawSignature { genus: s.genus, orders: s.orders }
    }
}

impl StratumSignature {
    pub fn new(genus: u32, mut orders: Vec<i32>) -> Result<Self> {
        if let Some(bad) = orders.iter().find(|&&k| k < -1 || k == 0) {
            return Err(Error::InvalidSignature(format!(
                "order {bad} is not -1 or a positive integer"
            )));
        }
        let sum: i64 = orders.iter().map(|&k| k as i64).sum();
        let expected = 4 * genus as i64 - 4;
        if sum != expected {
            return Err(Error::InvalidSignature(format!(
                "orders sum to {sum}, expected 4g - 4 = {expected}"
            )));
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(StratumSignature { genus, orders })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Orders in non-increasing order.
    pub fn orders(&self) -> &[i32] {
        &self.orders
    }

    /// Number of zeros and poles, `n`.
    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty_list(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn count_of(&self, order: i32) -> usize {
        self.orders.iter().filter(|&&k| k == order).count()
    }

    pub fn poles(&self) -> usize {
        self.count_of(-1)
    }

    /// True exactly for the four empty strata
    /// `Q_1(∅)`, `Q_1(-1, 1)`, `Q_2(3, 1)` and `Q_2(4)`.
    pub fn is_empty(&self) -> bool {
        matches!(
            (self.genus, self.orders.as_slice()),
            (1, []) | (1, [1, -1]) | (2, [3, 1]) | (2, [4])
        )
    }

    /// Complex dimension `2g - 2 + n`.
    pub fn dimension(&self) -> Result<u32> {
        if self.is_empty() {
            return Err(Error::EmptyStratum(self.to_string()));
        }
        Ok(2 * self.genus + self.orders.len() as u32 - 2)
    }

    /// Number of connected components, with the rule that decided it.
    pub fn connectivity(&self) -> Result<ConnectivityReport> {
        if self.is_empty() {
            return Err(Error::EmptyStratum(self.to_string()));
        }
        Ok(self.classify())
    }

    /// Total version of [`connectivity`](Self::connectivity): empty strata
    /// are reported with zero components instead of an error.
    pub fn classify(&self) -> ConnectivityReport {
        let report = |component_count, reason| ConnectivityReport {
            component_count,
            is_empty: false,
            reason,
        };
        if self.is_empty() {
            return ConnectivityReport {
                component_count: 0,
                is_empty: true,
                reason: ConnectivityReason::MsvException,
            };
        }
        let g = self.genus;
        if g <= 1 {
            return report(1, ConnectivityReason::GenusLeOne);
        }
        if g >= 3 {
            if let Some(family) = self.lanneau_family() {
                return report(2, family);
            }
        } else if self.orders == [3, 3, -1, -1] || self.orders == [6, -1, -1] {
            return report(2, ConnectivityReason::LanneauG2Special);
        }
        if self.count_of(1) >= g as usize {
            return report(1, ConnectivityReason::C1Theorem);
        }
        report(1, ConnectivityReason::OneComponentDefault)
    }

    /// Lowest-numbered two-component family (g >= 3) the orders match.
    fn lanneau_family(&self) -> Option<ConnectivityReason> {
        let g = self.genus as i32;
        let is = |candidate: Vec<i32>| {
            let mut c = candidate;
            c.sort_unstable_by(|a, b| b.cmp(a));
            c == self.orders
        };
        if (0..=g - 2).any(|k| is(vec![4 * (g - k) - 6, 4 * k + 2])) {
            return Some(ConnectivityReason::LanneauFamily1);
        }
        if (0..=g - 1).any(|k| {
            let a = 2 * (g - k) - 3;
            is(vec![a, a, 4 * k + 2])
        }) {
            return Some(ConnectivityReason::LanneauFamily2);
        }
        if (0..=g - 2).any(|k| {
            let a = 2 * (g - k) - 3;
            let b = 2 * k + 1;
            is(vec![a, a, b, b])
        }) {
            return Some(ConnectivityReason::LanneauFamily3);
        }
        None
    }
}

impl fmt::Display for StratumSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={}, (", self.genus)?;
        for (i, k) in self.orders.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

/// Parses `"6,-1,-1"` or the exponent shorthand `"1^12,2,2"`.
pub fn parse_orders(text: &str) -> Result<Vec<i32>> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (value, reps) = match item.split_once('^') {
            Some((v, r)) => (v.trim(), r.trim()),
            None => (item, "1"),
        };
        let value: i32 = value
            .parse()
            .map_err(|_| Error::Input(format!("bad order `{item}`")))?;
        let reps: usize = reps
            .parse()
            .map_err(|_| Error::Input(format!("bad repetition in `{item}`")))?;
        out.extend(std::iter::repeat_n(value, reps));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConnectivityReason {
    #[serde(rename = "MSV-exception")]
    MsvException,
    #[serde(rename = "Lanneau-family-1")]
    LanneauFamily1,
    #[serde(rename = "Lanneau-family-2")]
    LanneauFamily2,
    #[serde(rename = "Lanneau-family-3")]
    LanneauFamily3,
    #[serde(rename = "Lanneau-g2-special")]
    LanneauG2Special,
    #[serde(rename = "one-component-default")]
    OneComponentDefault,
    #[serde(rename = "genus-le-1")]
    GenusLeOne,
    #[serde(rename = "c1-theorem")]
    C1Theorem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    /// 0 for an empty stratum, otherwise 1 or 2.
    pub component_count: u8,
    pub is_empty: bool,
    pub reason: ConnectivityReason,
}

/// Genus-zero base stratum plus the `2g + 2` marked points a double cover
/// branches over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCoverSpec {
    pub base: StratumSignature,
    pub ramified_indices: BTreeSet<usize>,
    pub target_genus: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCover {
    pub signature: StratumSignature,
    /// Every order of the cover is even, so it may be the square of an
    /// abelian differential rather than a genuine quadratic differential.
    pub maybe_abelian: bool,
}

impl DoubleCoverSpec {
    pub fn new(base: StratumSignature, ramified: impl IntoIterator<Item = usize>, target_genus: u32) -> Self {
        DoubleCoverSpec {
            base,
            ramified_indices: ramified.into_iter().collect(),
            target_genus,
        }
    }

    fn validate(&self) -> Result<()> {
        let g = self.target_genus as usize;
        if self.base.genus() != 0 {
            return Err(Error::InvalidSpec(format!("base genus is {}, expected 0", self.base.genus())));
        }
        if self.ramified_indices.len() != 2 * g + 2 {
            return Err(Error::InvalidSpec(format!(
                "{} ramified points, expected 2g + 2 = {}",
                self.ramified_indices.len(),
                2 * g + 2
            )));
        }
        if let Some(&i) = self.ramified_indices.iter().find(|&&i| i >= self.base.len()) {
            return Err(Error::InvalidSpec(format!(
                "ramified index {i} out of range for {} base points",
                self.base.len()
            )));
        }
        Ok(())
    }

    /// Pulls the base signature back along the branched double cover.
    ///
    /// A ramified order `k` lifts to one order `2k + 2` (poles become
    /// regular points and disappear); an unramified order lifts to two copies.
    pub fn cover(&self) -> Result<DoubleCover> {
        self.validate()?;
        let mut orders = Vec::new();
        for (i, &k) in self.base.orders().iter().enumerate() {
            if self.ramified_indices.contains(&i) {
                if 2 * k + 2 != 0 {
                    orders.push(2 * k + 2);
                }
            } else {
                orders.extend([k, k]);
            }
        }
        let maybe_abelian = orders.iter().all(|k| k % 2 == 0);
        let signature = StratumSignature::new(self.target_genus, orders)
            .map_err(|e| Error::InvalidSpec(e.to_string()))?;
        Ok(DoubleCover { signature, maybe_abelian })
    }
}
