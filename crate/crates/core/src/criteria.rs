//! Numeric bounds and the hypothesis predicates on strata.

use serde::Serialize;

use crate::arith::vertex_bound;
use crate::StratumSignature;

/// Least size of the primary weight class for the kernel description with
/// `b` further points. `b = 0` is evaluated as one puncture, since the
/// edge-generator argument needs at least one face.
pub fn a_min(g: u32, b: u64) -> u64 {
    vertex_bound(g, b.max(1))
}

/// True iff each class size `b_i` is at least the vertex bound for the sum
/// of the class sizes after it. An empty list holds vacuously.
pub fn gen2_cascade_ok(g: u32, b_list: &[u64]) -> bool {
    let mut tail = 0u64;
    for &b in b_list.iter().rev() {
        if b < vertex_bound(g, tail) {
            return false;
        }
        tail += b;
    }
    true
}

/// Which clause decided a predicate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub satisfied: bool,
    pub clause: &'static str,
    pub detail: String,
}

impl Verdict {
    fn pass(detail: String) -> Self {
        Verdict { satisfied: true, clause: "all", detail }
    }

    fn fail(clause: &'static str, detail: String) -> Self {
        Verdict { satisfied: false, clause, detail }
    }
}

/// Number of simple zeros and the remaining orders.
fn split_ones(s: &StratumSignature) -> (usize, Vec<i32>) {
    let ones = s.count_of(1);
    let rest = s.orders().iter().copied().filter(|&k| k != 1).collect();
    (ones, rest)
}

fn has_equal_pair(ks: &[i32]) -> bool {
    // orders are stored sorted
    ks.windows(2).any(|w| w[0] == w[1])
}

/// Shared shape: `(1^a, k_1..k_m)` with `a > max(floor, k_i)`, every `k_i`
/// even and positive, and two equal `k_i`.
fn large_simple_class(s: &StratumSignature, floor: u64) -> Verdict {
    let (a, ks) = split_ones(s);
    if let Some(&k) = ks.iter().find(|&&k| k < 1 || k % 2 != 0) {
        return Verdict::fail("even", format!("order {k} is not a positive even number"));
    }
    if !has_equal_pair(&ks) {
        return Verdict::fail("equal-pair", format!("no two equal orders among {ks:?}"));
    }
    let max_k = ks.iter().copied().max().unwrap_or(0) as u64;
    let need = floor.max(max_k);
    if a as u64 <= need {
        return Verdict::fail("simple-zeros", format!("{a} simple zeros, need more than {need}"));
    }
    Verdict::pass(format!("{a} simple zeros > {need}; orders {ks:?} even with an equal pair"))
}

/// `(1^a, k_1..k_n)` with `a > max(g + 5, k_i)`, all `k_i` even and some
/// `k_i = k_j`.
pub fn main_theorem_verdict(s: &StratumSignature) -> Verdict {
    large_simple_class(s, s.genus() as u64 + 5)
}

pub fn satisfies_main_theorem(s: &StratumSignature) -> bool {
    main_theorem_verdict(s).satisfied
}

/// As [`main_theorem_verdict`] with the bound `g + 4`, for genus above 2.
pub fn null_prop_verdict(s: &StratumSignature) -> Verdict {
    if s.genus() <= 2 {
        return Verdict::fail("genus", format!("genus {} is not above 2", s.genus()));
    }
    large_simple_class(s, s.genus() as u64 + 4)
}

pub fn satisfies_null_prop(s: &StratumSignature) -> bool {
    null_prop_verdict(s).satisfied
}

/// `(1^{2n}, k_1..k_m)` with `2n >= g + 5`, all `k_i` even and positive, and
/// some `k_i = k_j`.
pub fn hy2_verdict(s: &StratumSignature) -> Verdict {
    let (ones, ks) = split_ones(s);
    if ones % 2 != 0 {
        return Verdict::fail("even-simple-zeros", format!("{ones} simple zeros is odd"));
    }
    if (ones as u64) < s.genus() as u64 + 5 {
        return Verdict::fail("simple-zeros", format!("{ones} simple zeros, need at least {}", s.genus() + 5));
    }
    if let Some(&k) = ks.iter().find(|&&k| k < 1 || k % 2 != 0) {
        return Verdict::fail("even", format!("order {k} is not a positive even number"));
    }
    if !has_equal_pair(&ks) {
        return Verdict::fail("equal-pair", format!("no two equal orders among {ks:?}"));
    }
    Verdict::pass(format!("{ones} simple zeros >= {}; orders {ks:?} even with an equal pair", s.genus() + 5))
}

pub fn satisfies_hy2(s: &StratumSignature) -> bool {
    hy2_verdict(s).satisfied
}

/// Cascade check on the weight classes of `s`: the largest class is primary
/// (ties to the smaller order), it must reach `a_min(g, b)`, and the others,
/// by decreasing size, must satisfy [`gen2_cascade_ok`].
pub fn gen2_verdict(s: &StratumSignature) -> Verdict {
    let mut classes: Vec<(i32, u64)> = Vec::new();
    for &k in s.orders() {
        match classes.iter_mut().find(|(v, _)| *v == k) {
            Some((_, c)) => *c += 1,
            None => classes.push((k, 1)),
        }
    }
    classes.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
    let Some(&(primary, a)) = classes.first() else {
        return Verdict::fail("primary", "no marked points".into());
    };
    let b_list: Vec<u64> = classes[1..].iter().map(|&(_, c)| c).collect();
    let b: u64 = b_list.iter().sum();
    let need = a_min(s.genus(), b);
    if a < need {
        return Verdict::fail("primary", format!("class of order {primary} has {a} points, needs {need}"));
    }
    if !gen2_cascade_ok(s.genus(), &b_list) {
        return Verdict::fail("cascade", format!("class sizes {b_list:?} fail the cascaded bound"));
    }
    Verdict::pass(format!("primary order {primary} with {a} >= {need} points; cascade {b_list:?} holds"))
}
