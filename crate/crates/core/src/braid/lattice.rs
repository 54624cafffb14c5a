use serde::{Deserialize, Serialize};

use crate::arith::{gcd, solve_linear};
use crate::{Error, Result};

/// Least multiplier of one weight that other weights can cancel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalRelation {
    pub d: i64,
    /// `coeffs[l] == d` and `sum(coeffs[i] * weights[i]) == 0`.
    pub coeffs: Vec<i64>,
}

/// Smallest `d > 0` such that `d * weights[l]` is an integer combination of
/// the remaining entries, with a witnessing relation.
///
/// With `G = gcd(weights[i], i != l)` this is `d = G / gcd(G, weights[l])`.
pub fn minimal_d(weights: &[i32], l: usize) -> Result<MinimalRelation> {
    if l >= weights.len() {
        return Err(Error::IndexOutOfRange { index: l, len: weights.len() });
    }
    if weights.len() < 2 {
        return Err(Error::NoOtherWeights);
    }
    let k = weights[l] as i64;
    let others: Vec<i64> = weights
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != l)
        .map(|(_, &w)| w as i64)
        .collect();
    let g = others.iter().fold(0, |acc, &w| gcd(acc, w));
    let d = g / gcd(g, k);
    let rest = solve_linear(&others, -d * k).expect("d * k is a multiple of the gcd of the others");
    let mut rest = rest.into_iter();
    let coeffs = (0..weights.len())
        .map(|i| if i == l { d } else { rest.next().unwrap() })
        .collect();
    Ok(MinimalRelation { d, coeffs })
}
