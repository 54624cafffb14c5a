//! Splitting zeros into lower-order zeros, and the poset it induces.
//!
//! A zero of order `k` may be split into two, three or four parts summing to
//! `k`. Two-part splits of an even order must produce two even parts; three-
//! and four-part splits carry no parity constraint. Parts are `-1` or
//! positive. Only zeros (orders `>= 1`) are split: a simple pole is never a
//! source. `lower <= higher` in the poset when `higher` is reachable from
//! `lower` by repeated splits.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::signature::StratumSignature;
use crate::{Error, Result};

/// Whether splits may introduce simple poles (parts equal to `-1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Poles {
    #[default]
    Allowed,
    Forbidden,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitMove {
    /// Index into the (sorted) orders of the source signature.
    pub source_index: usize,
    pub parts: Vec<i32>,
}

impl SplitMove {
    pub fn new(source_index: usize, parts: Vec<i32>) -> Self {
        SplitMove { source_index, parts }
    }
}

fn check_parts(order: i32, parts: &[i32]) -> Result<()> {
    if order < 1 {
        return Err(Error::InvalidSplit(format!("order {order} is not a zero")));
    }
    if !(2..=4).contains(&parts.len()) {
        return Err(Error::InvalidSplit(format!("{} parts, expected 2, 3 or 4", parts.len())));
    }
    if let Some(p) = parts.iter().find(|&&p| p < -1 || p == 0) {
        return Err(Error::InvalidSplit(format!("part {p} is not -1 or positive")));
    }
    if parts.iter().sum::<i32>() != order {
        return Err(Error::BadSum { order, parts: parts.to_vec() });
    }
    if parts.len() == 2 && order % 2 == 0 && parts.iter().any(|p| p % 2 != 0) {
        return Err(Error::ParityViolation { order, parts: parts.to_vec() });
    }
    Ok(())
}

/// Replaces `orders[source_index]` by the split parts.
pub fn apply_split(s: &StratumSignature, m: &SplitMove) -> Result<StratumSignature> {
    let orders = s.orders();
    let &order = orders
        .get(m.source_index)
        .ok_or(Error::IndexOutOfRange { index: m.source_index, len: orders.len() })?;
    check_parts(order, &m.parts)?;
    let mut next: Vec<i32> = orders.to_vec();
    next.remove(m.source_index);
    next.extend_from_slice(&m.parts);
    StratumSignature::new(s.genus(), next)
}

/// All legal part lists (non-increasing) for splitting a zero of order `k`.
pub fn splits_of(k: i32, poles: Poles) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    if k < 1 {
        return out;
    }
    let min_part = match poles {
        Poles::Allowed => -1,
        Poles::Forbidden => 1,
    };
    let allowed = |p: i32| p >= min_part && p != 0;
    let mut parts = Vec::new();
    for len in 2..=4 {
        collect_parts(k, len, k + 3, &allowed, &mut parts, &mut |p: &[i32]| {
            if check_parts(k, p).is_ok() {
                out.push(p.to_vec());
            }
        });
    }
    out
}

// Non-increasing sequences of `len` allowed parts summing to `sum`, each <= `cap`.
fn collect_parts(
    sum: i32,
    len: usize,
    cap: i32,
    allowed: &dyn Fn(i32) -> bool,
    buf: &mut Vec<i32>,
    emit: &mut dyn FnMut(&[i32]),
) {
    if len == 0 {
        if sum == 0 {
            emit(buf);
        }
        return;
    }
    // remaining len-1 parts are each >= -1
    let upper = cap.min(sum + (len as i32 - 1));
    let mut p = upper;
    while p >= -1 {
        if allowed(p) && p * (len as i32) >= sum {
            buf.push(p);
            collect_parts(sum - p, len - 1, p, allowed, buf, emit);
            buf.pop();
        }
        p -= 1;
    }
}

/// Every signature one split away from `s`, deduplicated.
pub fn poset_successors(s: &StratumSignature) -> BTreeSet<StratumSignature> {
    poset_successors_with(s, Poles::Allowed)
}

pub fn poset_successors_with(s: &StratumSignature, poles: Poles) -> BTreeSet<StratumSignature> {
    let mut out = BTreeSet::new();
    let orders = s.orders();
    let mut seen_orders = BTreeSet::new();
    for (i, &k) in orders.iter().enumerate() {
        if !seen_orders.insert(k) {
            continue;
        }
        for parts in splits_of(k, poles) {
            let m = SplitMove::new(i, parts);
            if let Ok(next) = apply_split(s, &m) {
                out.insert(next);
            }
        }
    }
    out
}

/// Whether `higher` is reachable from `lower` by a sequence of splits.
///
/// Splits strictly increase the number of points and never remove poles, so
/// the search only visits states no longer than `higher` with no more poles.
pub fn is_adjacent(higher: &StratumSignature, lower: &StratumSignature) -> Result<bool> {
    if higher.genus() != lower.genus() {
        return Err(Error::GenusMismatch(higher.genus(), lower.genus()));
    }
    if higher == lower {
        return Ok(true);
    }
    let poles = if higher.poles() > 0 { Poles::Allowed } else { Poles::Forbidden };
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([lower.clone()]);
    seen.insert(lower.clone());
    while let Some(cur) = queue.pop_front() {
        for next in poset_successors_with(&cur, poles) {
            if next.len() > higher.len() || next.poles() > higher.poles() {
                continue;
            }
            if &next == higher {
                return Ok(true);
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// Adjacency answer with the caveats the combinatorial check cannot settle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyVerdict {
    pub adjacent: bool,
    pub lower_empty: bool,
    pub higher_empty: bool,
    /// One of the two strata has two components; adjacency is only decided
    /// stratum-wise.
    pub component_caveat: bool,
}

pub fn adjacency_verdict(higher: &StratumSignature, lower: &StratumSignature) -> Result<AdjacencyVerdict> {
    let adjacent = is_adjacent(higher, lower)?;
    let two = |s: &StratumSignature| s.classify().component_count == 2;
    Ok(AdjacencyVerdict {
        adjacent,
        lower_empty: lower.is_empty(),
        higher_empty: higher.is_empty(),
        component_caveat: two(higher) || two(lower),
    })
}

/// Edge list of the sub-poset reachable from `root`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubPoset {
    pub root: StratumSignature,
    pub nodes: Vec<StratumSignature>,
    /// `(from, to)` index pairs into `nodes`, one per single split.
    pub edges: Vec<(usize, usize)>,
    pub truncated: bool,
}

/// Breadth-first expansion of the split poset from `root`, `depth` levels
/// deep (`None` for no limit; only finite when poles are forbidden).
pub fn reachable_poset(root: &StratumSignature, depth: Option<usize>, poles: Poles) -> SubPoset {
    let mut index: BTreeMap<StratumSignature, usize> = BTreeMap::new();
    let mut nodes = vec![root.clone()];
    index.insert(root.clone(), 0);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    let mut level = 0usize;
    let mut truncated = false;
    while !frontier.is_empty() {
        if depth.is_some_and(|d| level >= d) {
            truncated = frontier
                .iter()
                .any(|&i| !poset_successors_with(&nodes[i], poles).is_empty());
            break;
        }
        let mut next_frontier = Vec::new();
        for &from in &frontier {
            let succ = poset_successors_with(&nodes[from], poles);
            for s in succ {
                let to = match index.get(&s) {
                    Some(&to) => to,
                    None => {
                        let to = nodes.len();
                        index.insert(s.clone(), to);
                        nodes.push(s);
                        next_frontier.push(to);
                        to
                    }
                };
                edges.push((from, to));
            }
        }
        frontier = next_frontier;
        level += 1;
    }
    SubPoset { root: root.clone(), nodes, edges, truncated }
}

/// Two disjoint groups of points to be collided into one point each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupingSpec {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Whether colliding `left` and `right` into one point each is admissible:
/// equal order sums and a valid collided signature.
pub fn check_grouping(s: &StratumSignature, grp: &GroupingSpec) -> Result<bool> {
    let orders = s.orders();
    let len = orders.len();
    if let Some(&index) = grp.left.iter().chain(&grp.right).find(|&&i| i >= len) {
        return Err(Error::IndexOutOfRange { index, len });
    }
    let mut all = BTreeSet::new();
    for &i in grp.left.iter().chain(&grp.right) {
        if !all.insert(i) {
            return Err(Error::InvalidGrouping(format!("index {i} used twice")));
        }
    }
    if grp.left.is_empty() || grp.right.is_empty() {
        return Err(Error::InvalidGrouping("both groups must be non-empty".into()));
    }
    let sum = |idx: &[usize]| idx.iter().map(|&i| orders[i]).sum::<i32>();
    let (l, r) = (sum(&grp.left), sum(&grp.right));
    if l != r {
        return Ok(false);
    }
    let mut collided: Vec<i32> = (0..len).filter(|i| !all.contains(i)).map(|i| orders[i]).collect();
    collided.extend([l, r]);
    Ok(StratumSignature::new(s.genus(), collided).is_ok())
}
