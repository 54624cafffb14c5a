//! Dimension, emptiness and component count for a handful of strata.

use strata::signature::parse_orders;
use strata::StratumSignature;

fn main() -> strata::Result<()> {
    let strata = [
        (1, ""),
        (2, "4"),
        (2, "3,1"),
        (2, "1,1,1,1"),
        (2, "6,-1,-1"),
        (3, "6,2"),
        (3, "3,3,3,-1"),
        (4, "12"),
        (5, "1^12,2,2"),
    ];
    for (g, orders) in strata {
        let s = StratumSignature::new(g, parse_orders(orders)?)?;
        let report = s.classify();
        let dim = s.dimension().map_or("-".to_string(), |d| d.to_string());
        println!("{s:<28} dim {dim:>3}  components {}  ({:?})", report.component_count, report.reason);
    }
    Ok(())
}
