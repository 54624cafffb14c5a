use serde::Serialize;

use super::map::CombinatorialMap;
use crate::{Error, Result};

/// A face together with the edge (and so the vertex pair) it was given.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FacePair {
    pub face: usize,
    pub edge: usize,
    pub vertices: (usize, usize),
}

/// Gives every face of a simple planar map its own boundary edge.
///
/// Faces are numbered as in [`CombinatorialMap::trace_faces`]. The walk
/// takes an unassigned face, gives it its lowest unused boundary edge and
/// moves across that edge, starting over from the next unassigned face when
/// it hits an assigned face or one with no unused edge. Faces the walk
/// leaves behind are placed by augmenting paths.
pub fn assign_face_pairs(m: &CombinatorialMap) -> Result<Vec<FacePair>> {
    if m.genus() != 0 {
        return Err(Error::Precondition(format!("map has genus {}, expected a planar map", m.genus())));
    }
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    let (label, faces) = m.face_labels();
    let v = m.vertex_count();
    if faces > 1 && faces + 4 > 2 * v {
        return Err(Error::TooManyFaces { faces, vertices: v });
    }
    let mut boundary: Vec<Vec<usize>> = vec![Vec::new(); faces];
    for e in 0..m.edge_count() {
        boundary[label[2 * e]].push(e);
        if label[2 * e + 1] != label[2 * e] {
            boundary[label[2 * e + 1]].push(e);
        }
    }
    let across = |f: usize, e: usize| if label[2 * e] == f { label[2 * e + 1] } else { label[2 * e] };

    let mut edge_of: Vec<Option<usize>> = vec![None; faces];
    let mut face_of: Vec<Option<usize>> = vec![None; m.edge_count()];
    for start in 0..faces {
        let mut cur = start;
        while edge_of[cur].is_none() {
            let Some(&e) = boundary[cur].iter().find(|&&e| face_of[e].is_none()) else {
                break;
            };
            edge_of[cur] = Some(e);
            face_of[e] = Some(cur);
            cur = across(cur, e);
        }
    }

    for f in 0..faces {
        if edge_of[f].is_none() {
            let mut visited = vec![false; faces];
            if !augment(f, &boundary, &mut edge_of, &mut face_of, &mut visited) {
                return Err(Error::Precondition(format!("face {f} has no free boundary edge")));
            }
        }
    }

    Ok(edge_of
        .into_iter()
        .enumerate()
        .map(|(face, e)| {
            let edge = e.expect("every face assigned");
            FacePair { face, edge, vertices: m.endpoints(edge) }
        })
        .collect())
}

fn augment(
    f: usize,
    boundary: &[Vec<usize>],
    edge_of: &mut [Option<usize>],
    face_of: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    if visited[f] {
        return false;
    }
    visited[f] = true;
    for &e in &boundary[f] {
        let free = match face_of[e] {
            None => true,
            Some(g) => augment(g, boundary, edge_of, face_of, visited),
        };
        if free {
            edge_of[f] = Some(e);
            face_of[e] = Some(f);
            return true;
        }
    }
    false
}
