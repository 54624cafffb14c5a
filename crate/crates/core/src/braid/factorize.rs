//! Factorization of Abel–Jacobi kernel words into certified generators.
//!
//! The input `z` is first split as `y · x` with `y` a product of
//! transpositions realising the permutation of `z` and `x` pure. The pure part
//! is then peeled one point at a time, from the last point down to the first
//! point after the primary weight class. At point `c` the letters that survive
//! forgetting every earlier point (`rho(c, ·)` and `kappa(c, l)`, `l > c`)
//! form the projection `P`. A stable sort `S` of `P` groups the rho letters by
//! direction ahead of the kappa letters; each adjacent swap contributes a
//! conjugated commutator to `h` with `h · P = S`. The stage emits
//!
//! * the `c`-commutator `h^{-1}`,
//! * for every direction with net power `n_r`, the null rho
//!   `rho(c, r)^{n_r}` followed by balancing letters on earlier points,
//! * the kappa letters of `S` as square transpositions,
//!
//! and continues on the remaining letters with the balancing letters undone.
//! Once only primary points move, the remainder splits into square
//! transpositions and one null rho per direction.
//!
//! Correctness is asserted in the quotient by (permutation image,
//! Abel–Jacobi image); the surface braid word problem is not solved.

use serde::Serialize;

use super::certify::{FactorCertificate, FactorTag};
use super::lattice::minimal_d;
use super::word::{free_reduce_letters, BraidWord, Generator, Letter, MarkedSurface, Permutation};
use crate::criteria::a_min;
use crate::{Error, Result};

/// Splits `z` as `y · x`: `y` is a product of transpositions with the same
/// permutation image as `z`, `x = y^{-1} z` (freely reduced) is pure.
pub fn factor_by_permutation(z: &BraidWord) -> (BraidWord, BraidWord) {
    let surface = z.surface();
    let letters = z
        .permutation_image()
        .transpositions()
        .into_iter()
        .map(|(i, j)| Letter::sigma(i, j, 1))
        .collect();
    let y = BraidWord::from_valid(surface, letters);
    let mut x = y.inverse().letters().to_vec();
    x.extend_from_slice(z.letters());
    let x = BraidWord::from_valid(surface, free_reduce_letters(&x));
    (y, x)
}

/// One adjacent swap `u a b v -> u b a v` of the stable sort, i.e. left
/// multiplication by `u [b, a] u^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutatorSwap {
    pub prefix: Vec<Letter>,
    pub left: Letter,
    pub right: Letter,
}

impl CommutatorSwap {
    /// `u b a b^{-1} a^{-1} u^{-1}`.
    pub fn word(&self) -> Vec<Letter> {
        let mut out = self.prefix.clone();
        out.extend([self.right, self.left, self.right.inverse(), self.left.inverse()]);
        out.extend(self.prefix.iter().rev().map(|l| l.inverse()));
        out
    }
}

/// Record of one peeling step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeelStage {
    pub point: usize,
    /// Letters of the peeled point that survive forgetting earlier points.
    pub projection: Vec<Letter>,
    /// Stable sort of the projection, freely reduced.
    pub sorted: Vec<Letter>,
    pub swaps: Vec<CommutatorSwap>,
    /// Net power of `rho(point, r)` per direction, for non-zero powers.
    pub rho_powers: Vec<(u32, i64)>,
    /// Balancing coefficients `(point, coefficient)` per entry of `rho_powers`.
    pub balancing: Vec<Vec<(usize, i64)>>,
}

impl PeelStage {
    /// The commutator `h` with `h · projection = sorted` in the free group.
    pub fn commutator(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for s in self.swaps.iter().rev() {
            out.extend(s.word());
        }
        free_reduce_letters(&out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub factors: Vec<FactorCertificate>,
    pub stages: Vec<PeelStage>,
    /// Size of the primary weight class and number of remaining points.
    pub primary: usize,
    pub peeled: usize,
}

impl Factorization {
    /// Concatenation of all factors, in order.
    pub fn concatenation(&self, surface: &MarkedSurface) -> BraidWord {
        let letters = self.factors.iter().flat_map(|f| f.factor().letters().iter().copied()).collect();
        BraidWord::from_valid(surface, letters)
    }

    /// Every factor certified and the concatenation agrees with `z` in the
    /// (permutation, Abel–Jacobi) quotient.
    pub fn matches(&self, z: &BraidWord) -> bool {
        let c = self.concatenation(z.surface());
        self.factors.iter().all(FactorCertificate::verify)
            && c.permutation_image() == z.permutation_image()
            && c.abel_jacobi() == z.abel_jacobi()
    }
}

/// Sizes of the contiguous weight classes, erroring if a weight reappears
/// after its class ended.
fn weight_classes(weights: &[i32]) -> Result<Vec<(i32, usize)>> {
    let mut classes: Vec<(i32, usize)> = Vec::new();
    for &w in weights {
        match classes.last_mut() {
            Some((v, count)) if *v == w => *count += 1,
            _ => {
                if classes.iter().any(|&(v, _)| v == w) {
                    return Err(Error::PreconditionUnmet(format!(
                        "weight {w} is not contiguous; number points class by class"
                    )));
                }
                classes.push((w, 1));
            }
        }
    }
    Ok(classes)
}

fn certified(tag: FactorTag, surface: &MarkedSurface, letters: Vec<Letter>) -> Result<FactorCertificate> {
    FactorCertificate::certify(tag, BraidWord::from_valid(surface, letters))
}

/// Coefficients on points `< c` cancelling `power * weight(c)`.
///
/// Uses the minimal relation of `weight(c)` against the other weight classes
/// still moving; when the power is not a multiple of its `d` (possible only
/// if earlier points of the same weight move) a same-weight point absorbs it.
fn balance(surface: &MarkedSurface, c: usize, power: i64) -> Result<Vec<(usize, i64)>> {
    let wc = surface.weight(c);
    let mut reps: Vec<(usize, i32)> = Vec::new();
    for p in 1..c {
        let w = surface.weight(p);
        if w != wc && !reps.iter().any(|&(_, v)| v == w) {
            reps.push((p, w));
        }
    }
    if !reps.is_empty() {
        let mut weights = vec![wc];
        weights.extend(reps.iter().map(|&(_, w)| w));
        let rel = minimal_d(&weights, 0)?;
        if power % rel.d == 0 {
            let scale = power / rel.d;
            return Ok(reps
                .iter()
                .zip(&rel.coeffs[1..])
                .filter(|&(_, &c)| c != 0)
                .map(|(&(p, _), &coef)| (p, coef * scale))
                .collect());
        }
    }
    match (1..c).rev().find(|&p| surface.weight(p) == wc) {
        Some(peer) => Ok(vec![(peer, -power)]),
        None => Err(Error::NotInKernel(vec![power * wc as i64])),
    }
}

fn repeat_rho(point: usize, dir: u32, count: i64) -> impl Iterator<Item = Letter> {
    let exp = if count < 0 { -1 } else { 1 };
    std::iter::repeat_n(Letter::rho(point, dir, exp), count.unsigned_abs() as usize)
}

/// Stable insertion sort by `key`, recording every adjacent swap.
fn sort_with_swaps(letters: &[Letter], key: impl Fn(&Letter) -> u32) -> (Vec<Letter>, Vec<CommutatorSwap>) {
    let mut cur = letters.to_vec();
    let mut swaps = Vec::new();
    for i in 1..cur.len() {
        let mut j = i;
        while j > 0 && key(&cur[j - 1]) > key(&cur[j]) {
            swaps.push(CommutatorSwap { prefix: cur[..j - 1].to_vec(), left: cur[j - 1], right: cur[j] });
            cur.swap(j - 1, j);
            j -= 1;
        }
    }
    (cur, swaps)
}

/// Writes a kernel word as certified transpositions, square transpositions,
/// null rhos and `i`-commutators for points outside the primary class.
///
/// The surface must be in stratum mode with weight classes numbered
/// contiguously, primary class first, and the primary class size `a` must
/// satisfy `a >= a_min(g, b)` where `b` counts the remaining points.
pub fn factorize_kernel_word(z: &BraidWord) -> Result<Factorization> {
    let surface = z.surface();
    if !surface.stratum_mode() {
        return Err(Error::PreconditionUnmet("surface is not in stratum mode".into()));
    }
    let g = surface.genus();
    if g < 2 {
        return Err(Error::PreconditionUnmet(format!("genus {g} < 2")));
    }
    let classes = weight_classes(surface.weights())?;
    let n = surface.points();
    let a = classes.first().map_or(0, |&(_, count)| count);
    let b = n - a;
    if n < 2 {
        return Err(Error::PreconditionUnmet("a single marked point cannot meet the bound".into()));
    }
    let bound = a_min(g, b as u64);
    if (a as u64) < bound {
        return Err(Error::PreconditionUnmet(format!(
            "primary class has {a} points, needs at least a_min({g}, {b}) = {bound}"
        )));
    }
    let aj = z.abel_jacobi();
    if !aj.is_zero() {
        return Err(Error::NotInKernel(aj.0));
    }

    let mut factors = Vec::new();
    let (y, x) = factor_by_permutation(z);
    for &l in y.letters() {
        factors.push(certified(FactorTag::Transposition, surface, vec![l])?);
    }
    let mut current = Vec::new();
    for &l in x.letters() {
        match l.generator {
            Generator::Sigma { .. } => factors.push(certified(FactorTag::Transposition, surface, vec![l])?),
            Generator::KappaPuncture { .. } => {
                factors.push(certified(FactorTag::SquareTransposition, surface, vec![l])?)
            }
            _ => current.push(l),
        }
    }

    let dirs = surface.directions() as u32;
    let mut stages = Vec::new();
    for c in (a + 1..=n).rev() {
        let touches = |l: &Letter| match l.generator {
            Generator::Rho { point, .. } => point == c,
            Generator::Kappa { i, .. } => i == c,
            _ => false,
        };
        let projection: Vec<Letter> = current.iter().copied().filter(|l| touches(l)).collect();
        let rest: Vec<Letter> = current.iter().copied().filter(|l| !touches(l)).collect();
        let (sorted_raw, swaps) = sort_with_swaps(&projection, |l| match l.generator {
            Generator::Rho { dir, .. } => dir,
            _ => dirs + 1,
        });
        let sorted = free_reduce_letters(&sorted_raw);

        // h^{-1} = P · S^{-1}
        let mut h_inv = projection.clone();
        h_inv.extend(sorted.iter().rev().map(|l| l.inverse()));
        let h_inv = free_reduce_letters(&h_inv);
        if !h_inv.is_empty() {
            factors.push(certified(FactorTag::ICommutator { i: c }, surface, h_inv)?);
        }

        let mut rho_powers = Vec::new();
        for r in 1..=dirs {
            let power: i64 = sorted
                .iter()
                .filter(|l| matches!(l.generator, Generator::Rho { dir, .. } if dir == r))
                .map(|l| l.exp as i64)
                .sum();
            if power != 0 {
                rho_powers.push((r, power));
            }
        }
        let mut balancing = Vec::new();
        let mut undo = Vec::new();
        for &(r, power) in &rho_powers {
            let coeffs = balance(surface, c, power)?;
            let mut block: Vec<Letter> = repeat_rho(c, r, power).collect();
            for &(p, coef) in &coeffs {
                let extra: Vec<Letter> = repeat_rho(p, r, coef).collect();
                block.extend_from_slice(&extra);
                undo.extend(extra);
            }
            factors.push(certified(FactorTag::NullRho { r }, surface, block)?);
            balancing.push(coeffs);
        }
        for &l in sorted.iter().filter(|l| matches!(l.generator, Generator::Kappa { .. })) {
            factors.push(certified(FactorTag::SquareTransposition, surface, vec![l])?);
        }

        let mut next: Vec<Letter> = undo.iter().rev().map(|l| l.inverse()).collect();
        next.extend(rest);
        current = next;
        stages.push(PeelStage { point: c, projection, sorted, swaps, rho_powers, balancing });
    }

    let mut by_dir: Vec<Vec<Letter>> = vec![Vec::new(); dirs as usize];
    for &l in &current {
        match l.generator {
            Generator::Rho { dir, .. } => by_dir[dir as usize - 1].push(l),
            _ => factors.push(certified(FactorTag::SquareTransposition, surface, vec![l])?),
        }
    }
    for (r, letters) in by_dir.into_iter().enumerate() {
        if !letters.is_empty() {
            factors.push(certified(FactorTag::NullRho { r: r as u32 + 1 }, surface, letters)?);
        }
    }

    Ok(Factorization { factors, stages, primary: a, peeled: b })
}

/// Permutation of `z` together with its transposition factor, for callers
/// that only need the first split.
pub fn permutation_part(z: &BraidWord) -> (Permutation, BraidWord) {
    let (y, _) = factor_by_permutation(z);
    (z.permutation_image(), y)
}
