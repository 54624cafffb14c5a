use crate::braid::{BraidWord, Letter, MarkedSurface};
use crate::{Error, Result};

use super::map::CombinatorialMap;

/// One transposition per edge, on the surface of the map with a puncture in
/// every face and a weight-one marked point at every vertex (vertex `v` is
/// point `v + 1`). For a simple cellular map these generate the kernel of
/// the Abel–Jacobi map on the symmetric product.
pub fn copeland_generators(m: &CombinatorialMap) -> Result<Vec<BraidWord>> {
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    let surface = MarkedSurface::new(m.genus(), vec![1; m.vertex_count()], m.face_count())?;
    (0..m.edge_count())
        .map(|e| {
            let (u, v) = m.endpoints(e);
            BraidWord::new(surface.clone(), vec![Letter::sigma(u + 1, v + 1, 1)])
        })
        .collect()
}
