//! Factors a kernel word on Q(2, 2, 1^12) into certified generators:
//! transpositions, null rho words, i-commutators and squared transpositions.

use strata::braid::{factorize_kernel_word, BraidWord, Letter, MarkedSurface};

fn main() -> strata::Result<()> {
    let mut weights = vec![1; 12];
    weights.extend([2, 2]);
    let surface = MarkedSurface::stratum(5, weights)?;
    let letters = vec![
        Letter::rho(14, 3, 1),
        Letter::sigma(1, 2, -1),
        Letter::kappa(3, 13, 1),
        Letter::rho(13, 1, 1),
        Letter::rho(1, 3, -1),
        Letter::rho(2, 3, -1),
        Letter::rho(5, 1, -1),
        Letter::rho(6, 1, -1),
    ];
    let w = BraidWord::new(surface, letters)?;
    println!("word  {w}");
    println!("AJ    {:?}", w.abel_jacobi().coords());

    let f = factorize_kernel_word(&w)?;
    println!("primary class of {} points, {} peeled", f.primary, f.peeled);
    for stage in &f.stages {
        println!("  peel point {:>2}: {} swaps, rho powers {:?}", stage.point, stage.swaps.len(), stage.rho_powers);
    }
    for c in &f.factors {
        println!("  {:<24} {}", format!("{:?}", c.tag()), c.factor());
    }
    let all_verified = f.factors.iter().all(|c| c.verify());
    println!("every factor verified: {all_verified}; product matches: {}", f.matches(&w));
    Ok(())
}
