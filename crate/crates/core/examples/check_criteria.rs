//! Evaluates the hypothesis predicates and the numeric bounds they use.

use strata::criteria::{a_min, gen2_verdict, hy2_verdict, main_theorem_verdict, null_prop_verdict};
use strata::signature::parse_orders;
use strata::StratumSignature;

fn main() -> strata::Result<()> {
    for g in 2..=6 {
        let bounds: Vec<u64> = (0..=3).map(|b| a_min(g, b)).collect();
        println!("a_min(g={g}, b=0..3) = {bounds:?}");
    }
    for (g, orders) in [(5, "1^12,2,2"), (3, "1^8"), (10, "1^16,20"), (4, "1^12,2,-1,-1"), (6, "1^14,3,3")] {
        let s = StratumSignature::new(g, parse_orders(orders)?)?;
        println!("{s}");
        for (name, v) in [
            ("main", main_theorem_verdict(&s)),
            ("null", null_prop_verdict(&s)),
            ("hy2", hy2_verdict(&s)),
            ("gen2", gen2_verdict(&s)),
        ] {
            println!("  {name:<4} {:<5} {:<17} {}", v.satisfied, v.clause, v.detail);
        }
    }
    Ok(())
}
