//! Embeddings of complete graphs at a prescribed genus.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::map::CombinatorialMap;
use crate::{Error, Result};

/// Largest complete graph handed to the search.
pub const MAX_COMPLETE: usize = 12;

/// `(min genus, max genus)` over cellular embeddings of `K_n`, `n >= 3`.
///
/// The maximum is the largest genus leaving at least one face,
/// `floor((n - 1)(n - 2) / 4)`.
pub fn complete_graph_genus_range(n: usize) -> Result<(u32, u32)> {
    if n < 3 {
        return Err(Error::Precondition(format!("K_{n}: need n >= 3")));
    }
    let lo = ((n - 3) * n.saturating_sub(4)).div_ceil(12);
    let hi = (n - 1) * (n - 2) / 4;
    Ok((lo as u32, hi as u32))
}

/// Faces of `K_n` embedded at genus `g`, from Euler's formula.
pub fn complete_graph_faces(n: usize, g: u32) -> i64 {
    let e = (n * (n - 1) / 2) as i64;
    2 - 2 * g as i64 - n as i64 + e
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub budget_ms: u64,
    pub seed: u64,
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget_ms: 10_000, seed: 0, threads: 1 }
    }
}

/// Neighbour rotations of `K_n` with a fast face counter.
#[derive(Clone)]
struct Rotation {
    n: usize,
    order: Vec<Vec<usize>>,
    // succ[v * n + u]: neighbour after u around v
    succ: Vec<usize>,
}

impl Rotation {
    fn new(order: Vec<Vec<usize>>) -> Self {
        let n = order.len();
        let mut r = Rotation { n, order, succ: vec![0; n * n] };
        for v in 0..n {
            r.refresh(v);
        }
        r
    }

    fn refresh(&mut self, v: usize) {
        let row = &self.order[v];
        for (k, &u) in row.iter().enumerate() {
            self.succ[v * self.n + u] = row[(k + 1) % row.len()];
        }
    }

    /// Faces are orbits of `(u -> v) |-> (v -> succ_v(u))`.
    fn faces(&self, seen: &mut [bool]) -> usize {
        let n = self.n;
        seen.fill(false);
        let mut faces = 0;
        for u in 0..n {
            for v in 0..n {
                if u == v || seen[u * n + v] {
                    continue;
                }
                faces += 1;
                let (mut a, mut b) = (u, v);
                while !seen[a * n + b] {
                    seen[a * n + b] = true;
                    let c = self.succ[b * n + a];
                    (a, b) = (b, c);
                }
            }
        }
        faces
    }

    fn into_map(self) -> CombinatorialMap {
        CombinatorialMap::from_neighbor_rotations(&self.order).expect("complete graph rotation is valid")
    }
}

/// Lexicographic successor; false when `xs` was the last permutation.
fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Rotations invariant under `v -> v + 1 mod n`: every vertex sees the same
/// cyclic sequence of differences, with difference 1 fixed first.
fn cayley_search(n: usize, target: usize) -> Option<Rotation> {
    let mut diffs: Vec<usize> = (2..n).collect();
    let mut seen = vec![false; n * n];
    loop {
        let order = (0..n)
            .map(|v| std::iter::once(1).chain(diffs.iter().copied()).map(|d| (v + d) % n).collect())
            .collect();
        let r = Rotation::new(order);
        if r.faces(&mut seen) == target {
            return Some(r);
        }
        if !next_permutation(&mut diffs) {
            return None;
        }
    }
}

enum Attempt {
    Found(Rotation),
    Exhausted,
    OutOfTime,
}

/// Annealed local search from a random rotation: swap two neighbours at one
/// vertex, objective `|F - target|`.
fn anneal(n: usize, target: usize, seed: u64, restart: u64, deadline: Instant) -> Attempt {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart);
    let order = (0..n)
        .map(|v| {
            let mut row: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            for k in (1..row.len()).rev() {
                row.swap(k, rng.random_range(0..=k));
            }
            row
        })
        .collect();
    let mut rot = Rotation::new(order);
    let mut seen = vec![false; n * n];
    let mut cost = rot.faces(&mut seen).abs_diff(target);
    let steps = 4000 * n;
    for step in 0..steps {
        if cost == 0 {
            return Attempt::Found(rot);
        }
        if step % 512 == 0 && Instant::now() >= deadline {
            return Attempt::OutOfTime;
        }
        let v = rng.random_range(0..n);
        let i = rng.random_range(0..n - 1);
        let j = rng.random_range(0..n - 1);
        if i == j {
            continue;
        }
        rot.order[v].swap(i, j);
        rot.refresh(v);
        let new_cost = rot.faces(&mut seen).abs_diff(target);
        let temp = 1.5 * (1.0 - step as f64 / steps as f64) + 0.05;
        let accept = new_cost <= cost || rng.random::<f64>() < (-((new_cost - cost) as f64) / temp).exp();
        if accept {
            cost = new_cost;
        } else {
            rot.order[v].swap(i, j);
            rot.refresh(v);
        }
    }
    if cost == 0 {
        Attempt::Found(rot)
    } else {
        Attempt::Exhausted
    }
}

/// A rotation system for `K_n` of genus `g`.
///
/// Vertex-transitive rotations are tried first in a fixed order; failing
/// that, seeded restarts of a local search run in batches of
/// `opts.threads`, and the lowest restart index that succeeds wins, so the
/// output depends only on `(n, g, seed)`.
pub fn embed_complete(n: usize, g: u32, opts: SearchOptions) -> Result<CombinatorialMap> {
    let (lo, hi) = complete_graph_genus_range(n)?;
    if g < lo || g > hi {
        return Err(Error::OutOfRange { n, g, min: lo, max: hi });
    }
    if n > MAX_COMPLETE {
        return Err(Error::Precondition(format!("K_{n} is beyond the search limit K_{MAX_COMPLETE}")));
    }
    let target = complete_graph_faces(n, g) as usize;
    if let Some(r) = cayley_search(n, target) {
        return Ok(r.into_map());
    }
    let deadline = Instant::now() + Duration::from_millis(opts.budget_ms);
    let threads = opts.threads.max(1) as u64;
    let mut restart = 0u64;
    loop {
        if Instant::now() >= deadline {
            break;
        }
        let batch: Vec<Attempt> = if threads == 1 {
            vec![anneal(n, target, opts.seed, restart, deadline)]
        } else {
            std::thread::scope(|s| {
                let handles: Vec<_> = (0..threads)
                    .map(|t| s.spawn(move || anneal(n, target, opts.seed, restart + t, deadline)))
                    .collect();
                handles.into_iter().map(|h| h.join().expect("search thread panicked")).collect()
            })
        };
        for attempt in batch {
            match attempt {
                Attempt::Found(r) => return Ok(r.into_map()),
                Attempt::OutOfTime => {
                    return Err(Error::Budget(format!("K_{n} at genus {g}: {} ms elapsed", opts.budget_ms)))
                }
                Attempt::Exhausted => {}
            }
        }
        restart += threads;
    }
    Err(Error::Budget(format!("K_{n} at genus {g}: {} ms elapsed after {restart} restarts", opts.budget_ms)))
}

/// Genera of all rotation systems of `K_n`, by exhaustive enumeration.
/// Only sensible for `n <= 5` (`((n - 2)!)^n` systems).
pub fn enumerate_complete_genera(n: usize) -> BTreeSet<u32> {
    assert!((3..=6).contains(&n), "exhaustive enumeration is limited to small n");
    // cyclic orders at v: first neighbour fixed, the rest permuted
    let cyclic: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|v| {
            let nb: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            let mut rest: Vec<usize> = nb[1..].to_vec();
            let mut out = Vec::new();
            loop {
                out.push(std::iter::once(nb[0]).chain(rest.iter().copied()).collect());
                if !next_permutation(&mut rest) {
                    break;
                }
            }
            out
        })
        .collect();
    let e = n * (n - 1) / 2;
    let mut genera = BTreeSet::new();
    let mut idx = vec![0usize; n];
    let mut seen = vec![false; n * n];
    loop {
        let rot = Rotation::new((0..n).map(|v| cyclic[v][idx[v]].clone()).collect());
        let f = rot.faces(&mut seen);
        genera.insert(((2 + e - n - f) / 2) as u32);
        let mut k = 0;
        loop {
            if k == n {
                return genera;
            }
            idx[k] += 1;
            if idx[k] < cyclic[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}
