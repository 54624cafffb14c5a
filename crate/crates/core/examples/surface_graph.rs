//! Builds simple maps with prescribed genus, face count and vertex count,
//! and embeds complete graphs across their genus range.

use strata::graphs::{complete_graph_genus_range, construct_graph, embed_complete, SearchOptions};

fn main() -> strata::Result<()> {
    let opts = SearchOptions { seed: 7, ..SearchOptions::default() };
    for (g, f, n) in [(2, 1, 5), (2, 4, 7), (3, 8, 8), (3, 1, 9)] {
        let m = construct_graph(g, f, n, opts)?;
        let r = m.report();
        println!("g={g} F={f} n={n}: V {} E {} F {} genus {} simple {}", r.vertices, r.edges, r.faces, r.genus, r.simple);
    }

    let (lo, hi) = complete_graph_genus_range(6)?;
    for g in lo..=hi {
        let m = embed_complete(6, g, opts)?;
        let sizes: Vec<usize> = m.trace_faces().iter().map(Vec::len).collect();
        println!("K_6 at genus {g}: face lengths {sizes:?}");
    }
    Ok(())
}
