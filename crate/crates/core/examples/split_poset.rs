//! The strata reached from Q(8) in genus 3 by splitting zeros into
//! positive orders, and an adjacency query with poles allowed.

use strata::adjacency::{adjacency_verdict, reachable_poset, splits_of, Poles};
use strata::signature::parse_orders;
use strata::StratumSignature;

fn main() -> strata::Result<()> {
    println!("splits of 4: {:?}", splits_of(4, Poles::Forbidden));

    let root = StratumSignature::new(3, vec![8])?;
    let poset = reachable_poset(&root, None, Poles::Forbidden);
    println!("{} strata below {root}, {} covering relations", poset.nodes.len(), poset.edges.len());
    for (i, s) in poset.nodes.iter().enumerate() {
        let below: Vec<usize> = poset.edges.iter().filter(|e| e.0 == i).map(|e| e.1).collect();
        println!("  [{i:>2}] {s:<24} -> {below:?}");
    }

    let higher = StratumSignature::new(2, parse_orders("4")?)?;
    let lower = StratumSignature::new(2, parse_orders("5,1,-1,-1")?)?;
    let verdict = adjacency_verdict(&higher, &lower)?;
    println!("{higher} above {lower}: {verdict:?}");
    Ok(())
}
