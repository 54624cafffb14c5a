use super::complete::{embed_complete, SearchOptions};
use super::map::{CombinatorialMap, Dart};
use crate::arith::vertex_bound;
use crate::{Error, Result};

/// Removes the lowest-index edge whose two sides lie in different faces.
///
/// Such an edge is never a bridge, so the graph stays connected, the two
/// faces merge into one disk and the genus is unchanged. Higher edges are
/// renumbered down by one.
pub fn delete_edge_preserving(m: &CombinatorialMap) -> Result<CombinatorialMap> {
    let (label, faces) = m.face_labels();
    if faces < 2 {
        return Err(Error::Precondition(format!("edge deletion needs at least 2 faces, map has {faces}")));
    }
    let e = (0..m.edge_count()).find(|&e| label[2 * e] != label[2 * e + 1]).ok_or(Error::NoRemovableEdge)?;
    let (a, b) = (2 * e, 2 * e + 1);
    let rotations = m
        .rotations()
        .iter()
        .map(|rot| rot.iter().filter(|&&d| d != a && d != b).map(|&d| if d > b { d - 2 } else { d }).collect())
        .collect();
    CombinatorialMap::from_rotations(rotations)
}

/// Inserts a vertex in the middle of edge `e`. The new vertex gets the last
/// index and the new edge (towards the old second endpoint) the last edge
/// index.
pub fn subdivide_edge(m: &CombinatorialMap, e: usize) -> Result<CombinatorialMap> {
    if e >= m.edge_count() {
        return Err(Error::IndexOutOfRange { index: e, len: m.edge_count() });
    }
    let back: Dart = 2 * e + 1;
    let new_out: Dart = m.dart_count();
    let new_in: Dart = new_out + 1;
    let mut rotations = m.rotations().to_vec();
    let v = m.origin(back);
    for d in rotations[v].iter_mut() {
        if *d == back {
            *d = new_in;
        }
    }
    rotations.push(vec![back, new_out]);
    CombinatorialMap::from_rotations(rotations)
}

/// A simple connected cellular map with `n` vertices and `f` faces on the
/// genus-`g` surface: embed the smallest complete graph that fits, delete
/// edges down to `f` faces, then subdivide up to `n` vertices.
pub fn construct_graph(g: u32, f: usize, n: usize, opts: SearchOptions) -> Result<CombinatorialMap> {
    let max_f = 4 * g as i64 - 4;
    if f < 1 || f as i64 > max_f {
        return Err(Error::BoundViolation(format!("face count {f} outside 1..={max_f}")));
    }
    let n_min = vertex_bound(g, f as u64) as usize;
    if n < n_min {
        return Err(Error::BoundViolation(format!("{n} vertices, need at least {n_min}")));
    }
    let mut m = embed_complete(n_min, g, opts)?;
    while m.face_count() > f {
        m = delete_edge_preserving(&m)?;
    }
    while m.vertex_count() < n {
        m = subdivide_edge(&m, 0)?;
    }
    debug_assert!(m.is_simple() && m.genus() == g && m.face_count() == f);
    Ok(m)
}
