//! Edge transpositions of a one-faced genus-2 map, and the pairing of
//! faces with boundary edges on a planar map.

use strata::graphs::{assign_face_pairs, construct_graph, copeland_generators, CombinatorialMap, SearchOptions};

fn main() -> strata::Result<()> {
    let m = construct_graph(2, 1, 5, SearchOptions::default())?;
    let gens = copeland_generators(&m)?;
    println!("{} generators on {} vertices", gens.len(), m.vertex_count());
    for (e, w) in gens.iter().enumerate() {
        println!("  edge {e} {:?}: {w}", m.endpoints(e));
    }

    // square pyramid: apex 4 over the cycle 0-1-2-3
    let pyramid = CombinatorialMap::from_neighbor_rotations(&[
        vec![1, 4, 3],
        vec![2, 4, 0],
        vec![3, 4, 1],
        vec![0, 4, 2],
        vec![0, 1, 2, 3],
    ])?;
    println!("pyramid genus {} with {} faces", pyramid.genus(), pyramid.face_count());
    for p in assign_face_pairs(&pyramid)? {
        println!("  face {} <- edge {} {:?}", p.face, p.edge, p.vertices);
    }
    Ok(())
}
