//! Exact integer helpers shared by the bound and lattice code.

/// Smallest integer `s >= 0` with `s * s >= n`; zero for `n <= 0`.
pub fn ceil_sqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let s = (n as u64).isqrt() as i64;
    if s * s == n {
        s
    } else {
        s + 1
    }
}

/// `ceil((3 + sqrt(9 + 8 * (2g + extra - 2))) / 2)`, evaluated without floats.
///
/// This is the least vertex count `n` for which a simple graph on `n` vertices
/// can carry `extra` faces on a genus-`g` surface, i.e. the least `n` with
/// `n (n - 3) / 2 >= 2g + extra - 2`.
pub fn vertex_bound(genus: u32, extra: u64) -> u64 {
    let disc = 9 + 8 * (2 * genus as i64 + extra as i64 - 2);
    // 2n - 3 >= sqrt(disc)  <=>  2n - 3 >= ceil_sqrt(disc) for integer n
    let s = ceil_sqrt(disc);
    ((3 + s + 1) / 2) as u64
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Returns `(g, x, y)` with `a * x + b * y = g = gcd(a, b)`, `g >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Bezout coefficients for a list: `sum(coeffs[i] * values[i]) == gcd(values)`.
pub fn gcd_with_coeffs(values: &[i64]) -> (i64, Vec<i64>) {
    let mut coeffs = vec![0i64; values.len()];
    let mut g = 0i64;
    for (k, &v) in values.iter().enumerate() {
        let (ng, x, y) = ext_gcd(g, v);
        for c in coeffs.iter_mut().take(k) {
            *c *= x;
        }
        coeffs[k] = y;
        g = ng;
    }
    (g, coeffs)
}

/// Integer solution of `sum(c[i] * values[i]) == target`, if one exists.
pub fn solve_linear(values: &[i64], target: i64) -> Option<Vec<i64>> {
    let (g, coeffs) = gcd_with_coeffs(values);
    if g == 0 {
        return (target == 0).then(|| vec![0; values.len()]);
    }
    if target % g != 0 {
        return None;
    }
    let scale = target / g;
    Some(coeffs.into_iter().map(|c| c * scale).collect())
}
