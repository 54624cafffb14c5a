//! Graphs cellularly embedded in oriented surfaces, as rotation systems.

mod complete;
mod copeland;
mod faces;
mod map;
mod ops;

pub use complete::{
    complete_graph_faces, complete_graph_genus_range, embed_complete, enumerate_complete_genera, SearchOptions,
    MAX_COMPLETE,
};
pub use copeland::copeland_generators;
pub use faces::{assign_face_pairs, FacePair};
pub use map::{alpha, CombinatorialMap, Dart, EmbeddedGraphReport};
pub use ops::{construct_graph, delete_edge_preserving, subdivide_edge};
