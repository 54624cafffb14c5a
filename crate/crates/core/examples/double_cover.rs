//! Hyperelliptic double covers of genus-zero strata.

use strata::signature::{parse_orders, DoubleCoverSpec};
use strata::StratumSignature;

fn main() -> strata::Result<()> {
    let cases = [("2,-1^6", vec![0, 1, 2, 3, 4, 5], 2), ("1,1,-1^6", vec![2, 3, 4, 5, 6, 7], 2), ("4,-1^8", vec![0, 1, 2, 3, 4, 5, 6, 7], 3)];
    for (orders, ramified, g) in cases {
        let base = StratumSignature::new(0, parse_orders(orders)?)?;
        let spec = DoubleCoverSpec::new(base.clone(), ramified, g);
        match spec.cover() {
            Ok(c) => println!("{base} -> {} (maybe abelian: {})", c.signature, c.maybe_abelian),
            Err(e) => println!("{base}: {e}"),
        }
    }
    Ok(())
}
