//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Run with `cargo test --test acceptance`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use strata::arith::{ceil_sqrt, gcd};
use strata::braid::{factorize_kernel_word, minimal_d, BraidWord, FactorTag, Letter, MarkedSurface};
use strata::criteria::{a_min, satisfies_main_theorem};
use strata::graphs::{
    complete_graph_genus_range, construct_graph, copeland_generators, delete_edge_preserving, embed_complete,
    enumerate_complete_genera, CombinatorialMap, SearchOptions,
};
use strata::signature::ConnectivityReason;
use strata::StratumSignature;

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------- 1

/// Non-increasing lists of positive parts summing to `n`.
fn partitions(n: i32, max: i32, prefix: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for p in (1..=n.min(max)).rev() {
        prefix.push(p);
        partitions(n - p, p, prefix, out);
        prefix.pop();
    }
}

fn all_signatures(g: u32, max_poles: i32) -> Vec<StratumSignature> {
    let mut out = Vec::new();
    for poles in 0..=max_poles {
        let zeros = 4 * g as i32 - 4 + poles;
        if zeros < 0 {
            continue;
        }
        let mut parts = Vec::new();
        partitions(zeros, zeros.max(1), &mut Vec::new(), &mut parts);
        for mut p in parts {
            p.extend(std::iter::repeat_n(-1, poles as usize));
            out.push(StratumSignature::new(g, p).expect("scan produces valid signatures"));
        }
    }
    out
}

fn two_component_oracle(g: u32) -> BTreeSet<Vec<i32>> {
    let mut set = BTreeSet::new();
    let mut add = |mut v: Vec<i32>| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        set.insert(v);
    };
    let g = g as i32;
    if g == 2 {
        add(vec![3, 3, -1, -1]);
        add(vec![6, -1, -1]);
    }
    if g >= 3 {
        for k in 0..=g - 2 {
            add(vec![4 * (g - k) - 6, 4 * k + 2]);
        }
        for k in 0..=g - 1 {
            let a = 2 * (g - k) - 3;
            add(vec![a, a, 4 * k + 2]);
        }
        for k in 0..=g - 2 {
            let (a, b) = (2 * (g - k) - 3, 2 * k + 1);
            add(vec![a, a, b, b]);
        }
    }
    set
}

fn classification() -> Check {
    let empties_expected: BTreeSet<(u32, Vec<i32>)> =
        [(1, vec![]), (1, vec![1, -1]), (2, vec![3, 1]), (2, vec![4])].into_iter().collect();
    let mut empties = BTreeSet::new();
    let mut scanned = 0;
    for g in 0..=5 {
        for s in all_signatures(g, 4) {
            scanned += 1;
            if s.is_empty() {
                empties.insert((g, s.orders().to_vec()));
            }
            let r = s.classify();
            ensure(r.is_empty == s.is_empty(), || format!("{s}: classify disagrees on emptiness"))?;
            if g <= 1 {
                ensure(r.component_count <= 1, || format!("{s}: two components in genus {g}"))?;
            }
        }
    }
    ensure(empties == empties_expected, || format!("empty strata {empties:?}"))?;

    let mut pairs = 0;
    for g in 2..=5 {
        let oracle = two_component_oracle(g);
        let found: BTreeSet<Vec<i32>> = all_signatures(g, 4)
            .into_iter()
            .filter(|s| s.classify().component_count == 2)
            .map(|s| s.orders().to_vec())
            .collect();
        ensure(found == oracle, || format!("genus {g}: found {found:?}, expected {oracle:?}"))?;
        for o in &oracle {
            let s = StratumSignature::new(g, o.clone()).unwrap();
            let reason = s.connectivity().map_err(|e| e.to_string())?.reason;
            ensure(reason != ConnectivityReason::OneComponentDefault, || format!("{s}: no family reason"))?;
        }
        pairs += found.len();
    }
    Ok(format!("{scanned} signatures scanned, 4 empty, {pairs} two-component strata in genus 2..5"))
}

// ---------------------------------------------------------------- 2

fn bounds() -> Check {
    // least a with 2a - 3 >= sqrt(1 + 16g) at g = 2
    let g = 2i64;
    let s = ceil_sqrt(1 + 16 * g);
    let corollary = (3 + s + 1) / 2;
    ensure(a_min(2, 0) == 5 && corollary == 5, || format!("a_min(2,0) = {}, formula {corollary}", a_min(2, 0)))?;
    let mut checked = 0;
    for g in 0..=50u32 {
        for b in 0..=50u64 {
            let rhs = 2 * (2 * g as i64 + b.max(1) as i64 - 2);
            // 2a - 3 >= sqrt(9 + 4 rhs)  <=>  a >= 2 and a^2 - 3a >= rhs
            let least = (2i64..).find(|&a| a * a - 3 * a - rhs >= 0).unwrap();
            let got = a_min(g, b) as i64;
            ensure(got == least, || format!("a_min({g},{b}) = {got}, quadratic gives {least}"))?;
            checked += 1;
        }
    }
    Ok(format!("a_min(2,0) = 5; {checked} (g, b) pairs agree with the quadratic characterization"))
}

// ---------------------------------------------------------------- 3

fn connected(m: &CombinatorialMap) -> bool {
    let d = m.dart_count();
    let mut seen = vec![false; d];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(x) = queue.pop_front() {
        for y in [m.sigma(x), x ^ 1] {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn graphs() -> Check {
    let start = Instant::now();
    let opts = SearchOptions { budget_ms: 60_000, ..SearchOptions::default() };
    let mut notes = Vec::new();
    for g in [2u32, 3] {
        let n = strata::arith::vertex_bound(g, 1) as usize;
        let m = construct_graph(g, 1, n, opts).map_err(|e| format!("construct_graph({g},1,{n}): {e}"))?;
        let r = m.report();
        let euler = r.vertices as i64 - r.edges as i64 + r.faces as i64;
        ensure(r.simple && connected(&m), || format!("g={g}: not simple or not connected"))?;
        ensure(euler == 2 - 2 * g as i64 && r.genus == g && r.faces == 1 && r.vertices == n, || {
            format!("g={g}: report {r:?}")
        })?;
        // every face is a closed boundary walk using each dart once
        let darts: usize = m.trace_faces().iter().map(Vec::len).sum();
        ensure(darts == m.dart_count(), || format!("g={g}: faces do not partition the darts"))?;
        notes.push(format!("g={g}: V={} E={} F=1", r.vertices, r.edges));
    }
    ensure(start.elapsed() < Duration::from_secs(60), || "construction exceeded 60 s".into())?;

    let k7 = embed_complete(7, 1, SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure(k7.face_count() == 14, || format!("K_7 on the torus has {} faces", k7.face_count()))?;
    let k5 = embed_complete(5, 2, SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure(k5.face_count() == 3, || format!("K_5 at genus 2 has {} faces", k5.face_count()))?;
    let once = delete_edge_preserving(&k5).map_err(|e| e.to_string())?;
    let twice = delete_edge_preserving(&once).map_err(|e| e.to_string())?;
    ensure(once.face_count() == 2 && twice.face_count() == 1 && twice.genus() == 2, || "K_5 face reduction".into())?;

    let mut ranges = Vec::new();
    for n in 3..=5 {
        let found = enumerate_complete_genera(n);
        let (lo, hi) = complete_graph_genus_range(n).unwrap();
        let expected: BTreeSet<u32> = (lo..=hi).collect();
        ensure(found == expected, || format!("K_{n}: enumeration {found:?}, formula {expected:?}"))?;
        let ceil_hi = ((n - 1) * (n - 2)).div_ceil(4) as u32;
        if ceil_hi != hi {
            notes.push(format!("K_{n} max genus {hi} (ceiling variant {ceil_hi} not attained)"));
        }
        ranges.push(format!("K_{n}: {lo}..={hi}"));
    }
    Ok(format!("{}; K_7/g1 F=14; K_5/g2 F=3->2->1; {}", notes.join(", "), ranges.join(", ")))
}

// ---------------------------------------------------------------- 4, 5

fn stratum_surface(g: u32, weights: Vec<i32>) -> MarkedSurface {
    MarkedSurface::stratum(g, weights).expect("valid stratum surface")
}

fn random_letter(s: &MarkedSurface, rng: &mut ChaCha8Rng) -> Letter {
    let n = s.points();
    let exp = if rng.random_bool(0.5) { 1 } else { -1 };
    loop {
        match rng.random_range(0..4) {
            0 | 1 => {
                let dir = rng.random_range(1..=s.directions() as u32);
                return Letter::rho(rng.random_range(1..=n), dir, exp);
            }
            2 => {
                let i = rng.random_range(1..=n);
                let j = rng.random_range(1..=n);
                if i != j && s.weight(i) == s.weight(j) {
                    return Letter::sigma(i, j, exp);
                }
            }
            _ => {
                let i = rng.random_range(1..=n);
                let j = rng.random_range(1..=n);
                if i != j {
                    return Letter::kappa(i, j, exp);
                }
            }
        }
    }
}

fn random_word(s: &MarkedSurface, len: usize, rng: &mut ChaCha8Rng) -> BraidWord {
    let letters = (0..len).map(|_| random_letter(s, rng)).collect();
    BraidWord::new(s.clone(), letters).expect("generated letters are valid")
}

/// Random word with vanishing Abel–Jacobi image and at most `max_len` letters.
fn random_kernel_word(s: &MarkedSurface, max_len: usize, rng: &mut ChaCha8Rng) -> BraidWord {
    // a weight-one point cancels any residue
    let unit = (1..=s.points()).find(|&i| s.weight(i) == 1).expect("a weight-one point");
    loop {
        let len = rng.random_range(0..=max_len);
        let w = random_word(s, len, rng);
        let mut letters = w.letters().to_vec();
        for (r, &c) in w.abel_jacobi().coords().iter().enumerate() {
            let exp = if c > 0 { -1 } else { 1 };
            for _ in 0..c.unsigned_abs() {
                let at = rng.random_range(0..=letters.len());
                letters.insert(at, Letter::rho(unit, r as u32 + 1, exp));
            }
        }
        if letters.len() <= max_len {
            let z = BraidWord::new(s.clone(), letters).unwrap();
            assert!(z.in_kernel());
            return z;
        }
    }
}

fn homomorphism() -> Check {
    let start = Instant::now();
    let s = stratum_surface(5, [vec![1; 12], vec![2, 2]].concat());
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for k in 0..10_000 {
        let u = random_word(&s, rng.random_range(0..=30), &mut rng);
        let v = random_word(&s, rng.random_range(0..=30), &mut rng);
        let uv = u.concat(&v).map_err(|e| e.to_string())?;
        ensure(uv.abel_jacobi() == &u.abel_jacobi() + &v.abel_jacobi(), || format!("pair {k}: not additive"))?;
        ensure(u.inverse().abel_jacobi() == -&u.abel_jacobi(), || format!("pair {k}: inverse"))?;
        ensure(uv.free_reduce().abel_jacobi() == uv.abel_jacobi(), || format!("pair {k}: reduction"))?;
    }
    let mut letters = 0;
    for i in 1..=14 {
        for j in i + 1..=14 {
            let mut ls = vec![Letter::kappa(i, j, 1), Letter::kappa(i, j, -1)];
            if s.weight(i) == s.weight(j) {
                ls.extend([Letter::sigma(i, j, 1), Letter::sigma(i, j, -1)]);
            }
            for l in ls {
                let w = BraidWord::new(s.clone(), vec![l]).map_err(|e| e.to_string())?;
                ensure(w.in_kernel(), || format!("{l} has non-zero image"))?;
                letters += 1;
            }
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(5), || format!("took {t:?}"))?;
    Ok(format!("10000 pairs additive and inverse-compatible; {letters} sigma/kappa letters map to 0"))
}

fn factorization() -> Check {
    let start = Instant::now();
    let weights = [vec![1; 12], vec![2, 2]].concat();
    let sig = StratumSignature::new(5, weights.clone()).unwrap();
    ensure(satisfies_main_theorem(&sig), || "(1^12,2,2) should satisfy the main hypothesis".into())?;
    let s = stratum_surface(5, weights);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut factors = 0;
    let mut commutators = 0;
    for k in 0..1000 {
        let z = random_kernel_word(&s, 30, &mut rng);
        let f = factorize_kernel_word(&z).map_err(|e| format!("word {k} ({z}): {e}"))?;
        ensure(f.factors.iter().all(|c| c.is_certified() && c.verify()), || format!("word {k}: uncertified"))?;
        ensure(f.matches(&z), || format!("word {k}: product differs in the quotient"))?;
        ensure(f.stages.len() <= 2, || format!("word {k}: {} stages", f.stages.len()))?;
        factors += f.factors.len();
        commutators += f.factors.iter().filter(|c| matches!(c.tag(), FactorTag::ICommutator { .. })).count();
    }
    let s8 = stratum_surface(3, vec![1; 8]);
    for k in 0..1000 {
        let z = random_kernel_word(&s8, 30, &mut rng);
        let f = factorize_kernel_word(&z).map_err(|e| format!("(1^8) word {k}: {e}"))?;
        ensure(f.factors.iter().all(|c| c.verify()) && f.matches(&z), || format!("(1^8) word {k}"))?;
        ensure(!f.factors.iter().any(|c| matches!(c.tag(), FactorTag::ICommutator { .. })), || {
            format!("(1^8) word {k}: commutator factor")
        })?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("1000 + 1000 kernel words; {factors} certified factors ({commutators} commutators) on (1^12,2,2)"))
}

// ---------------------------------------------------------------- 6

/// Values reachable as integer combinations of `gens` inside `[-bound, bound]`.
fn reachable(gens: &[i64], bound: i64) -> Vec<bool> {
    let size = (2 * bound + 1) as usize;
    let mut seen = vec![false; size];
    let mut queue = VecDeque::from([0i64]);
    seen[bound as usize] = true;
    while let Some(x) = queue.pop_front() {
        for &w in gens {
            for y in [x + w, x - w] {
                if y.abs() <= bound && !seen[(y + bound) as usize] {
                    seen[(y + bound) as usize] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    seen
}

fn lattice() -> Check {
    let start = Instant::now();
    const BOUND: i64 = 12 * 12 * 2;
    let mut cache: HashMap<Vec<i64>, Vec<bool>> = HashMap::new();
    let mut cases = 0;
    // up to four classes with values in 1..=12, each of multiplicity 1 or 2
    let mut classes: Vec<Vec<i32>> = Vec::new();
    for mask in 1u32..(1 << 12) {
        if mask.count_ones() <= 4 {
            classes.push((1..=12).filter(|v| mask & (1 << (v - 1)) != 0).collect());
        }
    }
    for values in &classes {
        for mult in 0u32..(1 << values.len()) {
            let mut weights = Vec::new();
            for (k, &v) in values.iter().enumerate() {
                weights.push(v);
                if mult & (1 << k) != 0 {
                    weights.push(v);
                }
            }
            if weights.len() < 2 {
                continue;
            }
            for l in 0..weights.len() {
                let rel = minimal_d(&weights, l).map_err(|e| e.to_string())?;
                let mut others: Vec<i64> =
                    weights.iter().enumerate().filter(|&(i, _)| i != l).map(|(_, &w)| w as i64).collect();
                others.sort_unstable();
                others.dedup();
                let big_g = others.iter().fold(0, |a, &b| gcd(a, b));
                let reach = cache.entry(others).or_insert_with_key(|o| reachable(o, BOUND));
                let k = weights[l] as i64;
                let oracle = (1..=big_g).find(|&d| reach[(d * k + BOUND) as usize]).expect("d = G always works");
                ensure(rel.d == oracle, || format!("{weights:?} l={l}: d={} oracle {oracle}", rel.d))?;
                let sum: i64 = rel.coeffs.iter().zip(&weights).map(|(c, &w)| c * w as i64).sum();
                ensure(sum == 0 && rel.coeffs[l] == rel.d, || format!("{weights:?} l={l}: bad witness"))?;
                cases += 1;
            }
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(5), || format!("took {t:?}"))?;
    Ok(format!("{cases} (weights, index) cases agree with the reachability oracle"))
}

// ---------------------------------------------------------------- 7

fn copeland() -> Check {
    let start = Instant::now();
    let m = construct_graph(2, 1, 5, SearchOptions::default()).map_err(|e| e.to_string())?;
    let gens = copeland_generators(&m).map_err(|e| e.to_string())?;
    ensure(gens.len() == 8, || format!("{} generators", gens.len()))?;
    ensure(gens.iter().all(BraidWord::in_kernel), || "a generator has non-zero image".into())?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(1), || format!("took {t:?}"))?;
    Ok("8 edge transpositions, each with zero Abel-Jacobi image".into())
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 7] = [
        ("classification", classification),
        ("bound arithmetic", bounds),
        ("graph construction", graphs),
        ("Abel-Jacobi homomorphism", homomorphism),
        ("kernel factorization", factorization),
        ("minimal relation oracle", lattice),
        ("edge generators", copeland),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(msg) => println!("criterion {} {name}: PASS ({secs:.2}s) {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({secs:.2}s) {msg}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
