//! Least multiple of one weight that the remaining weights cancel.

use strata::braid::minimal_d;

fn main() -> strata::Result<()> {
    for (weights, l) in [(vec![4, 6], 0), (vec![6, 10, 15], 0), (vec![6, 10, 15], 2), (vec![1, 1, 2], 2), (vec![3, 5], 1)] {
        let rel = minimal_d(&weights, l)?;
        let check: i64 = weights.iter().zip(&rel.coeffs).map(|(&w, &c)| w as i64 * c).sum();
        println!("weights {weights:?}, index {l}: d = {}, coeffs {:?} (sum {check})", rel.d, rel.coeffs);
    }
    Ok(())
}
