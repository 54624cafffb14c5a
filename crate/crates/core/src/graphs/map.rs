use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Darts are `0..2E`; edge `e` owns darts `2e` and `2e + 1`.
pub type Dart = usize;

/// The other dart of the same edge.
pub fn alpha(d: Dart) -> Dart {
    d ^ 1
}

/// A graph cellularly embedded in an oriented surface, given by the cyclic
/// order of darts around each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMap", into = "RawMap")]
pub struct CombinatorialMap {
    rotations: Vec<Vec<Dart>>,
    origin: Vec<usize>,
    next: Vec<Dart>,
}

#[derive(Serialize, Deserialize)]
struct RawMap {
    darts: usize,
    sigma: Vec<Vec<Dart>>,
    alpha_convention: String,
}

impl TryFrom<RawMap> for CombinatorialMap {
    type Error = Error;

    fn try_from(raw: RawMap) -> Result<Self> {
        if raw.alpha_convention != "pairs" {
            return Err(Error::InvalidMap(format!("unknown alpha convention {:?}", raw.alpha_convention)));
        }
        let m = CombinatorialMap::from_rotations(raw.sigma)?;
        if m.dart_count() != raw.darts {
            return Err(Error::InvalidMap(format!("declared {} darts, found {}", raw.darts, m.dart_count())));
        }
        Ok(m)
    }
}

impl From<CombinatorialMap> for RawMap {
    fn from(m: CombinatorialMap) -> Self {
        RawMap { darts: m.dart_count(), sigma: m.rotations, alpha_convention: "pairs".into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedGraphReport {
    #[serde(rename = "V")]
    pub vertices: usize,
    #[serde(rename = "E")]
    pub edges: usize,
    #[serde(rename = "F")]
    pub faces: usize,
    pub genus: u32,
    pub simple: bool,
}

impl CombinatorialMap {
    /// Builds a map from the dart rotation at each vertex. Every dart in
    /// `0..2E` must occur exactly once and the graph must be connected.
    pub fn from_rotations(rotations: Vec<Vec<Dart>>) -> Result<Self> {
        let total: usize = rotations.iter().map(Vec::len).sum();
        if total == 0 || !total.is_multiple_of(2) {
            return Err(Error::InvalidMap(format!("need a positive even number of darts, got {total}")));
        }
        let mut origin = vec![usize::MAX; total];
        let mut next = vec![0; total];
        for (v, rot) in rotations.iter().enumerate() {
            for (k, &d) in rot.iter().enumerate() {
                if d >= total {
                    return Err(Error::InvalidMap(format!("dart {d} out of range 0..{total}")));
                }
                if origin[d] != usize::MAX {
                    return Err(Error::InvalidMap(format!("dart {d} appears twice")));
                }
                origin[d] = v;
                next[d] = rot[(k + 1) % rot.len()];
            }
        }
        let m = CombinatorialMap { rotations, origin, next };
        if !m.is_connected() {
            return Err(Error::InvalidMap("graph is not connected".into()));
        }
        Ok(m)
    }

    /// Builds a map from the cyclic order of neighbours at each vertex.
    /// Edges are numbered in lexicographic order of `(min, max)` endpoint;
    /// multi-edges are not expressible here.
    pub fn from_neighbor_rotations(neighbors: &[Vec<usize>]) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (u, list) in neighbors.iter().enumerate() {
            for &v in list {
                if v >= neighbors.len() || v == u {
                    return Err(Error::InvalidMap(format!("bad neighbour {v} of vertex {u}")));
                }
                if !neighbors[v].contains(&u) {
                    return Err(Error::InvalidMap(format!("{u}-{v} listed at {u} only")));
                }
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        let dart = |u: usize, v: usize| {
            let e = edges.binary_search(&(u.min(v), u.max(v))).expect("edge recorded");
            if u < v {
                2 * e
            } else {
                2 * e + 1
            }
        };
        let rotations = neighbors
            .iter()
            .enumerate()
            .map(|(u, list)| list.iter().map(|&v| dart(u, v)).collect())
            .collect();
        CombinatorialMap::from_rotations(rotations)
    }

    /// A path on `vertices >= 2` vertices, embedded in the sphere.
    pub fn path(vertices: usize) -> Result<Self> {
        if vertices < 2 {
            return Err(Error::InvalidMap("a path needs two vertices".into()));
        }
        let neighbors: Vec<Vec<usize>> = (0..vertices)
            .map(|v| {
                let mut n = Vec::new();
                if v > 0 {
                    n.push(v - 1);
                }
                if v + 1 < vertices {
                    n.push(v + 1);
                }
                n
            })
            .collect();
        CombinatorialMap::from_neighbor_rotations(&neighbors)
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    pub fn into_rotations(self) -> Vec<Vec<Dart>> {
        self.rotations
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn origin(&self, d: Dart) -> usize {
        self.origin[d]
    }

    /// Next dart counter-clockwise around the origin of `d`.
    pub fn sigma(&self, d: Dart) -> Dart {
        self.next[d]
    }

    /// Endpoints of edge `e` as (origin of `2e`, origin of `2e + 1`).
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.origin[2 * e], self.origin[2 * e + 1])
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &d in &self.rotations[v] {
                let w = self.origin[alpha(d)];
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Face index of every dart, and the face count. A face is an orbit of
    /// `d -> sigma(alpha(d))`.
    pub fn face_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.dart_count()];
        let mut faces = 0;
        for start in 0..self.dart_count() {
            if label[start] != usize::MAX {
                continue;
            }
            let mut d = start;
            while label[d] == usize::MAX {
                label[d] = faces;
                d = self.next[alpha(d)];
            }
            faces += 1;
        }
        (label, faces)
    }

    pub fn face_count(&self) -> usize {
        self.face_labels().1
    }

    /// Boundary walks, each starting at its smallest dart.
    pub fn trace_faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.dart_count()];
        let mut out = Vec::new();
        for start in 0..self.dart_count() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                cycle.push(d);
                d = self.next[alpha(d)];
            }
            out.push(cycle);
        }
        out
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut pairs = BTreeSet::new();
        (0..self.edge_count()).all(|e| {
            let (u, v) = self.endpoints(e);
            u != v && pairs.insert((u.min(v), u.max(v)))
        })
    }

    pub fn genus(&self) -> u32 {
        self.report().genus
    }

    pub fn report(&self) -> EmbeddedGraphReport {
        let (v, e, f) = (self.vertex_count(), self.edge_count(), self.face_count());
        let chi = v as i64 - e as i64 + f as i64;
        debug_assert!(chi <= 2 && (2 - chi) % 2 == 0, "Euler characteristic {chi}");
        EmbeddedGraphReport { vertices: v, edges: e, faces: f, genus: ((2 - chi) / 2) as u32, simple: self.is_simple() }
    }
}
