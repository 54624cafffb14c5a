use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A genus-`g` surface with `n` weighted marked points and `m` extra
/// unweighted punctures. Points are numbered `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSurface", into = "RawSurface")]
pub struct MarkedSurface {
    genus: u32,
    weights: Vec<i32>,
    punctures: usize,
    stratum_mode: bool,
}

#[derive(Serialize, Deserialize)]
struct RawSurface {
    genus: u32,
    weights: Vec<i32>,
    #[serde(default)]
    punctures: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    stratum_mode: bool,
}

impl TryFrom<RawSurface> for MarkedSurface {
    type Error = Error;

    fn try_from(raw: RawSurface) -> Result<Self> {
        let s = MarkedSurface::new(raw.genus, raw.weights, raw.punctures)?;
        if raw.stratum_mode {
            s.into_stratum_mode()
        } else {
            Ok(s)
        }
    }
}

impl From<MarkedSurface> for RawSurface {
    fn from(s: MarkedSurface) -> Self {
        RawSurface {
            genus: s.genus,
            weights: s.weights,
            punctures: s.punctures,
            stratum_mode: s.stratum_mode,
        }
    }
}

impl MarkedSurface {
    pub fn new(genus: u32, weights: Vec<i32>, punctures: usize) -> Result<Self> {
        if let Some(w) = weights.iter().find(|&&w| w < -1 || w == 0) {
            return Err(Error::InvalidSurface(format!("weight {w} is not -1 or positive")));
        }
        Ok(MarkedSurface { genus, weights, punctures, stratum_mode: false })
    }

    /// Surface whose weights are the zero orders of a stratum.
    pub fn stratum(genus: u32, weights: Vec<i32>) -> Result<Self> {
        MarkedSurface::new(genus, weights, 0)?.into_stratum_mode()
    }

    /// Marks the surface as a stratum, enforcing `sum(weights) = 4g - 4`.
    pub fn into_stratum_mode(mut self) -> Result<Self> {
        let sum: i64 = self.weights.iter().map(|&w| w as i64).sum();
        if sum != 4 * self.genus as i64 - 4 {
            return Err(Error::InvalidSurface(format!(
                "weights sum to {sum}, stratum mode needs 4g - 4 = {}",
                4 * self.genus as i64 - 4
            )));
        }
        self.stratum_mode = true;
        Ok(self)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn weights(&self) -> &[i32] {
        &self.weights
    }

    /// Weight of the 1-based point `i`.
    pub fn weight(&self, i: usize) -> i32 {
        self.weights[i - 1]
    }

    pub fn points(&self) -> usize {
        self.weights.len()
    }

    pub fn punctures(&self) -> usize {
        self.punctures
    }

    pub fn stratum_mode(&self) -> bool {
        self.stratum_mode
    }

    /// Number of homology directions, `2g`.
    pub fn directions(&self) -> usize {
        2 * self.genus as usize
    }

    pub fn validate_letter(&self, letter: &Letter) -> Result<()> {
        let n = self.points();
        let point = |i: usize| {
            if (1..=n).contains(&i) {
                Ok(())
            } else {
                Err(Error::InvalidLetter(format!("point {i} not in 1..={n}")))
            }
        };
        if letter.exp != 1 && letter.exp != -1 {
            return Err(Error::InvalidLetter(format!("exponent {} is not ±1", letter.exp)));
        }
        match letter.generator {
            Generator::Rho { point: i, dir } => {
                point(i)?;
                if !(1..=self.directions() as u32).contains(&dir) {
                    return Err(Error::InvalidLetter(format!(
                        "direction {dir} not in 1..={}",
                        self.directions()
                    )));
                }
            }
            Generator::Sigma { i, j } => {
                point(i)?;
                point(j)?;
                if i >= j {
                    return Err(Error::InvalidLetter(format!("sigma({i},{j}) needs i < j")));
                }
                if self.weight(i) != self.weight(j) {
                    return Err(Error::InvalidLetter(format!(
                        "sigma({i},{j}) swaps points of unequal weight"
                    )));
                }
            }
            Generator::Kappa { i, j } => {
                point(i)?;
                point(j)?;
                if i >= j {
                    return Err(Error::InvalidLetter(format!("kappa({i},{j}) needs i < j")));
                }
            }
            Generator::KappaPuncture { point: i, puncture } => {
                point(i)?;
                if !(1..=self.punctures).contains(&puncture) {
                    return Err(Error::InvalidLetter(format!(
                        "puncture {puncture} not in 1..={}",
                        self.punctures
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Generators of the weighted surface braid group.
///
/// * `Rho`: point `point` travels around the homology direction `dir`.
/// * `Sigma`: transposition of two points of equal weight.
/// * `Kappa`: square transposition of two points (any weights).
/// * `KappaPuncture`: a point looping around one of the extra punctures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Rho { point: usize, dir: u32 },
    Sigma { i: usize, j: usize },
    Kappa { i: usize, j: usize },
    KappaPuncture { point: usize, puncture: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLetter", into = "RawLetter")]
pub struct Letter {
    pub generator: Generator,
    pub exp: i8,
}

impl Letter {
    pub fn rho(point: usize, dir: u32, exp: i8) -> Self {
        Letter { generator: Generator::Rho { point, dir }, exp }
    }

    pub fn sigma(i: usize, j: usize, exp: i8) -> Self {
        let (i, j) = (i.min(j), i.max(j));
        Letter { generator: Generator::Sigma { i, j }, exp }
    }

    pub fn kappa(i: usize, j: usize, exp: i8) -> Self {
        let (i, j) = (i.min(j), i.max(j));
        Letter { generator: Generator::Kappa { i, j }, exp }
    }

    pub fn kappa_puncture(point: usize, puncture: usize, exp: i8) -> Self {
        Letter { generator: Generator::KappaPuncture { point, puncture }, exp }
    }

    pub fn inverse(self) -> Self {
        Letter { exp: -self.exp, ..self }
    }

    pub fn is_pure(&self) -> bool {
        !matches!(self.generator, Generator::Sigma { .. })
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.generator {
            Generator::Rho { point, dir } => write!(f, "rho({point},{dir})")?,
            Generator::Sigma { i, j } => write!(f, "sigma({i},{j})")?,
            Generator::Kappa { i, j } => write!(f, "kappa({i},{j})")?,
            Generator::KappaPuncture { point, puncture } => write!(f, "kappa_p({point},{puncture})")?,
        }
        if self.exp < 0 {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawLetter {
    kind: String,
    i: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    l: Option<usize>,
    exp: i8,
}

impl TryFrom<RawLetter> for Letter {
    type Error = Error;

    fn try_from(raw: RawLetter) -> Result<Self> {
        let missing = |field: &str| Error::InvalidLetter(format!("{} letter needs `{field}`", raw.kind));
        let generator = match raw.kind.as_str() {
            "rho" => Generator::Rho { point: raw.i, dir: raw.r.ok_or_else(|| missing("r"))? },
            "sigma" => Generator::Sigma { i: raw.i, j: raw.j.ok_or_else(|| missing("j"))? },
            "kappa" => Generator::Kappa { i: raw.i, j: raw.j.ok_or_else(|| missing("j"))? },
            "kappa_puncture" => Generator::KappaPuncture {
                point: raw.i,
                puncture: raw.l.ok_or_else(|| missing("l"))?,
            },
            other => return Err(Error::InvalidLetter(format!("unknown kind `{other}`"))),
        };
        Ok(Letter { generator, exp: raw.exp })
    }
}

impl From<Letter> for RawLetter {
    fn from(l: Letter) -> Self {
        let base = |kind: &str, i| RawLetter { kind: kind.into(), i, j: None, r: None, l: None, exp: l.exp };
        match l.generator {
            Generator::Rho { point, dir } => RawLetter { r: Some(dir), ..base("rho", point) },
            Generator::Sigma { i, j } => RawLetter { j: Some(j), ..base("sigma", i) },
            Generator::Kappa { i, j } => RawLetter { j: Some(j), ..base("kappa", i) },
            Generator::KappaPuncture { point, puncture } => {
                RawLetter { l: Some(puncture), ..base("kappa_puncture", point) }
            }
        }
    }
}

/// A finite word in the generators over a fixed marked surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawWord", into = "RawWord")]
pub struct BraidWord {
    surface: MarkedSurface,
    letters: Vec<Letter>,
}

#[derive(Serialize, Deserialize)]
struct RawWord {
    surface: MarkedSurface,
    letters: Vec<Letter>,
}

impl TryFrom<RawWord> for BraidWord {
    type Error = Error;

    fn try_from(raw: RawWord) -> Result<Self> {
        BraidWord::new(raw.surface, raw.letters)
    }
}

impl From<BraidWord> for RawWord {
    fn from(w: BraidWord) -> Self {
        RawWord { surface: w.surface, letters: w.letters }
    }
}

impl BraidWord {
    pub fn new(surface: MarkedSurface, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            surface.validate_letter(l)?;
        }
        Ok(BraidWord { surface, letters })
    }

    pub fn empty(surface: MarkedSurface) -> Self {
        BraidWord { surface, letters: Vec::new() }
    }

    /// Builds a word from letters already known to be valid for `surface`.
    pub(crate) fn from_valid(surface: &MarkedSurface, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| surface.validate_letter(l).is_ok()));
        BraidWord { surface: surface.clone(), letters }
    }

    pub fn surface(&self) -> &MarkedSurface {
        &self.surface
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn into_stratum_mode(self) -> Result<Self> {
        Ok(BraidWord { surface: self.surface.into_stratum_mode()?, letters: self.letters })
    }

    /// Reverse the word and flip every exponent.
    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { surface: self.surface.clone(), letters }
    }

    /// Concatenation `self · other`; both words must live on the same surface.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.surface != other.surface {
            return Err(Error::InvalidSurface("words live on different surfaces".into()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { surface: self.surface.clone(), letters })
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        BraidWord { surface: self.surface.clone(), letters: free_reduce_letters(&self.letters) }
    }

    /// Image in `S_n`: the Sigma letters composed left to right.
    pub fn permutation_image(&self) -> Permutation {
        let mut p = Permutation::identity(self.surface.points());
        for l in &self.letters {
            if let Generator::Sigma { i, j } = l.generator {
                p = p.then(&Permutation::transposition(self.surface.points(), i, j));
            }
        }
        p
    }

    /// Abel–Jacobi image in `Z^{2g}`: each `rho(i, r)^{±1}` adds `±weight(i)`
    /// to coordinate `r`.
    pub fn abel_jacobi(&self) -> HomologyVector {
        let mut coords = vec![0i64; self.surface.directions()];
        for l in &self.letters {
            if let Generator::Rho { point, dir } = l.generator {
                coords[dir as usize - 1] += l.exp as i64 * self.surface.weight(point) as i64;
            }
        }
        HomologyVector(coords)
    }

    pub fn in_kernel(&self) -> bool {
        self.abel_jacobi().is_zero()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn free_reduce_letters(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        match out.last() {
            Some(&top) if top == l.inverse() => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

/// Element of `H_1(M, Z) = Z^{2g}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyVector(pub Vec<i64>);

impl HomologyVector {
    pub fn zero(dim: usize) -> Self {
        HomologyVector(vec![0; dim])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl std::ops::Add for &HomologyVector {
    type Output = HomologyVector;

    fn add(self, rhs: &HomologyVector) -> HomologyVector {
        HomologyVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl std::ops::Neg for &HomologyVector {
    type Output = HomologyVector;

    fn neg(self) -> HomologyVector {
        HomologyVector(self.0.iter().map(|a| -a).collect())
    }
}

/// Permutation of the points `1..=n`, stored as 0-based images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The swap of the 1-based points `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.0.swap(i - 1, j - 1);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&p| other.0[p]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Permutation(inv)
    }

    /// Non-trivial cycles with 1-based points, each starting at its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Transpositions `(i, j)`, `i < j`, whose left-to-right composition is `self`.
    pub fn transpositions(&self) -> Vec<(usize, usize)> {
        // Peel from the left: t_k ∘ ... ∘ t_1 ∘ self = id with t = (x, q(x)),
        // so self = t_1 ∘ ... ∘ t_k, i.e. left-to-right order t_k, ..., t_1.
        let mut q = self.0.clone();
        let mut ts = Vec::new();
        for x in 0..q.len() {
            while q[x] != x {
                let y = q[x];
                // left-compose with (x y)
                for v in q.iter_mut() {
                    if *v == x {
                        *v = y;
                    } else if *v == y {
                        *v = x;
                    }
                }
                ts.push((x.min(y) + 1, x.max(y) + 1));
            }
        }
        ts.reverse();
        ts
    }

    /// Whether every point maps to a point of the same weight.
    pub fn preserves(&self, weights: &[i32]) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| weights[i] == weights[p])
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
