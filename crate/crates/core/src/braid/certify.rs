use serde::{Deserialize, Serialize};

use super::word::{BraidWord, Generator};
use crate::{Error, Result};

/// Direction `r` of a null rho word, when every letter is a `rho(·, r)` and
/// the signed weights cancel. `Some(None)` for the empty word, which is a
/// null rho for every direction.
pub fn null_rho_direction(w: &BraidWord) -> Option<Option<u32>> {
    let mut dir = None;
    let mut total = 0i64;
    for l in w.letters() {
        let Generator::Rho { point, dir: r } = l.generator else {
            return None;
        };
        if *dir.get_or_insert(r) != r {
            return None;
        }
        total += l.exp as i64 * w.surface().weight(point) as i64;
    }
    (total == 0).then_some(dir)
}

/// True iff `w` is a product of `rho(·, r)^{±1}` for one fixed `r` with
/// vanishing signed weight sum.
pub fn certify_null_rho(w: &BraidWord) -> bool {
    null_rho_direction(w).is_some()
}

/// True iff `w` is an `i`-commutator: only `rho(i, ·)` and `kappa(i, l)`
/// with `l > i`, and its image in `H_1` of the surface punctured at points
/// `i+1..=n` vanishes.
///
/// The fundamental group of the punctured surface is free, so commutator
/// membership is abelianization vanishing. The abelianization is `Z^{2g}`
/// plus the puncture loops modulo their sum, which gives the test: every
/// rho exponent sum is zero and the kappa exponent sums over `l = i+1..=n`
/// share one common value.
pub fn certify_i_commutator(w: &BraidWord, i: usize) -> bool {
    let s = w.surface();
    let n = s.points();
    if i == 0 || i > n {
        return false;
    }
    let mut rho = vec![0i64; s.directions()];
    let mut kappa = vec![0i64; n - i];
    for l in w.letters() {
        match l.generator {
            Generator::Rho { point, dir } if point == i => rho[dir as usize - 1] += l.exp as i64,
            Generator::Kappa { i: a, j } if a == i && j > i => kappa[j - i - 1] += l.exp as i64,
            _ => return false,
        }
    }
    rho.iter().all(|&c| c == 0) && kappa.windows(2).all(|p| p[0] == p[1])
}

/// A single transposition letter `sigma(i, j)^{±1}`.
pub fn certify_transposition(w: &BraidWord) -> bool {
    matches!(w.letters(), [l] if matches!(l.generator, Generator::Sigma { .. }))
}

/// A single square transposition `kappa(i, j)^{±1}`, or a loop of a point
/// around one of the extra punctures.
pub fn certify_square_transposition(w: &BraidWord) -> bool {
    matches!(
        w.letters(),
        [l] if matches!(l.generator, Generator::Kappa { .. } | Generator::KappaPuncture { .. })
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum FactorTag {
    Transposition,
    SquareTransposition,
    NullRho { r: u32 },
    ICommutator { i: usize },
    Uncertified,
}

/// A factor together with the kernel generator class it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorCertificate {
    #[serde(flatten)]
    tag: FactorTag,
    factor: BraidWord,
}

impl FactorCertificate {
    /// Checks `factor` against `tag`; rejects on mismatch.
    pub fn certify(tag: FactorTag, factor: BraidWord) -> Result<Self> {
        let ok = match tag {
            FactorTag::Transposition => certify_transposition(&factor),
            FactorTag::SquareTransposition => certify_square_transposition(&factor),
            FactorTag::NullRho { r } => match null_rho_direction(&factor) {
                Some(Some(d)) => d == r,
                Some(None) => true,
                None => false,
            },
            FactorTag::ICommutator { i } => certify_i_commutator(&factor, i),
            FactorTag::Uncertified => true,
        };
        if !ok {
            return Err(Error::CertificateRejected(format!("{tag:?} does not accept {factor}")));
        }
        Ok(FactorCertificate { tag, factor })
    }

    pub fn uncertified(factor: BraidWord) -> Self {
        FactorCertificate { tag: FactorTag::Uncertified, factor }
    }

    pub fn tag(&self) -> FactorTag {
        self.tag
    }

    pub fn factor(&self) -> &BraidWord {
        &self.factor
    }

    pub fn is_certified(&self) -> bool {
        self.tag != FactorTag::Uncertified
    }

    /// Re-runs the check for the recorded tag.
    pub fn verify(&self) -> bool {
        self.is_certified() && FactorCertificate::certify(self.tag, self.factor.clone()).is_ok()
    }
}
