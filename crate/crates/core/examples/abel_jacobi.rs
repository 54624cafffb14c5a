//! Permutation and Abel–Jacobi images of braid words, and the
//! homomorphism property on a concatenation.

use strata::braid::{BraidWord, Letter, MarkedSurface};

fn main() -> strata::Result<()> {
    let surface = MarkedSurface::stratum(3, vec![2, 1, 1, 1, 1, 1, 1])?;
    let u = BraidWord::new(
        surface.clone(),
        vec![Letter::rho(1, 2, 1), Letter::sigma(2, 3, 1), Letter::rho(2, 5, -1)],
    )?;
    let v = BraidWord::new(surface, vec![Letter::kappa(1, 4, 1), Letter::rho(4, 2, 1), Letter::rho(4, 2, 1)])?;
    for (name, w) in [("u", &u), ("v", &v)] {
        println!("{name} = {w}");
        println!("  permutation {}  AJ {:?}", w.permutation_image(), w.abel_jacobi().coords());
    }
    let uv = u.concat(&v)?;
    let sum: Vec<i64> = u.abel_jacobi().coords().iter().zip(v.abel_jacobi().coords()).map(|(a, b)| a + b).collect();
    println!("AJ(uv) = {:?}, AJ(u) + AJ(v) = {sum:?}", uv.abel_jacobi().coords());

    let kernel = u.concat(&u.inverse())?;
    println!("u u^-1 = {} in kernel: {}", kernel.free_reduce(), kernel.in_kernel());
    Ok(())
}
