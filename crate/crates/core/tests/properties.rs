use proptest::prelude::*;

use strata::adjacency::{apply_split, is_adjacent, poset_successors, splits_of, Poles, SplitMove};
use strata::arith::{gcd, solve_linear};
use strata::braid::{factorize_kernel_word, minimal_d, BraidWord, FactorTag, Letter, MarkedSurface};
use strata::criteria::{main_theorem_verdict, satisfies_main_theorem, satisfies_null_prop};
use strata::graphs::{
    complete_graph_genus_range, delete_edge_preserving, embed_complete, subdivide_edge, SearchOptions,
};
use strata::signature::{ConnectivityReason, DoubleCoverSpec};
use strata::StratumSignature;

/// Positive composition of `total` driven by `cuts`, plus `poles` simple poles.
fn build_orders(total: i32, cuts: &[bool], poles: usize) -> Vec<i32> {
    let mut out = Vec::new();
    let mut run = 1;
    for k in 1..total {
        if cuts[(k - 1) as usize % cuts.len()] {
            out.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    if total > 0 {
        out.push(run);
    }
    out.extend(std::iter::repeat_n(-1, poles));
    out
}

fn signature(max_genus: u32) -> impl Strategy<Value = StratumSignature> {
    (0..=max_genus, 0usize..=4, prop::collection::vec(any::<bool>(), 1..24)).prop_filter_map(
        "genus 0 needs four poles",
        |(g, poles, cuts)| {
            let total = 4 * g as i32 - 4 + poles as i32;
            (total >= 0).then(|| StratumSignature::new(g, build_orders(total, &cuts, poles)).unwrap())
        },
    )
}

proptest! {
    #[test]
    fn signature_json_round_trip(s in signature(6)) {
        let text = serde_json::to_string(&s).unwrap();
        let back: StratumSignature = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn classification_is_total_and_consistent(s in signature(7)) {
        let r = s.classify();
        prop_assert_eq!(r.is_empty, s.is_empty());
        if r.is_empty {
            prop_assert_eq!(r.component_count, 0);
            prop_assert!(s.dimension().is_err());
        } else {
            prop_assert!(r.component_count == 1 || r.component_count == 2);
            if s.genus() <= 1 {
                prop_assert_eq!(r.component_count, 1);
            }
            if s.genus() >= 1 {
                prop_assert!(s.dimension().unwrap() >= 1);
            }
        }
    }

    #[test]
    fn splits_preserve_sum_and_collapse_back(s in signature(4), pick in any::<prop::sample::Index>()) {
        let zeros: Vec<usize> = (0..s.len()).filter(|&i| s.orders()[i] >= 1).collect();
        prop_assume!(!zeros.is_empty());
        let i = zeros[pick.index(zeros.len())];
        let k = s.orders()[i];
        for parts in splits_of(k, Poles::Allowed) {
            let t = apply_split(&s, &SplitMove::new(i, parts.clone())).unwrap();
            prop_assert_eq!(t.genus(), s.genus());
            prop_assert_eq!(t.orders().iter().sum::<i32>(), s.orders().iter().sum::<i32>());
            // removing the new parts and putting k back recovers s
            let mut rest = t.orders().to_vec();
            for p in &parts {
                let at = rest.iter().position(|x| x == p).unwrap();
                rest.remove(at);
            }
            rest.push(k);
            prop_assert_eq!(StratumSignature::new(s.genus(), rest).unwrap(), s.clone());
        }
    }

    #[test]
    fn successors_grow_by_one_to_three(s in signature(4)) {
        for t in poset_successors(&s) {
            let d = t.len() - s.len();
            prop_assert!((1..=3).contains(&d), "{} -> {}", s, t);
        }
    }

    #[test]
    fn adjacency_follows_split_chains(
        s in signature(3),
        a in any::<prop::sample::Index>(),
        b in any::<prop::sample::Index>(),
    ) {
        let first: Vec<_> = poset_successors(&s).into_iter().filter(|t| t.poles() <= 5).collect();
        prop_assume!(!first.is_empty());
        let t = &first[a.index(first.len())];
        prop_assert!(is_adjacent(t, &s).unwrap());
        let second: Vec<_> = poset_successors(t).into_iter().filter(|u| u.poles() <= 5).collect();
        prop_assume!(!second.is_empty());
        let u = &second[b.index(second.len())];
        prop_assert!(is_adjacent(u, &s).unwrap());
        prop_assert!(!is_adjacent(&s, u).unwrap());
    }

    #[test]
    fn double_cover_conserves_degree(
        cuts in prop::collection::vec(any::<bool>(), 1..12),
        extra in 0usize..4,
        ramify in any::<prop::sample::Index>(),
    ) {
        let poles = 4 + extra;
        let base = StratumSignature::new(0, build_orders(extra as i32, &cuts, poles)).unwrap();
        let n = base.len();
        let g = ramify.index(n / 2);
        prop_assume!(2 * g + 2 <= n);
        let spec = DoubleCoverSpec::new(base, 0..2 * g + 2, g as u32);
        let cover = spec.cover().unwrap();
        prop_assert_eq!(cover.signature.genus(), g as u32);
        prop_assert_eq!(cover.maybe_abelian, cover.signature.orders().iter().all(|k| k % 2 == 0));
    }

    #[test]
    fn minimal_relation_is_minimal(weights in prop::collection::vec(1i32..=30, 2..6), pick in any::<prop::sample::Index>()) {
        let l = pick.index(weights.len());
        let rel = minimal_d(&weights, l).unwrap();
        let sum: i64 = rel.coeffs.iter().zip(&weights).map(|(c, &w)| c * w as i64).sum();
        prop_assert_eq!(sum, 0);
        prop_assert_eq!(rel.coeffs[l], rel.d);
        let others = weights.iter().enumerate().filter(|&(i, _)| i != l).fold(0, |a, (_, &w)| gcd(a, w as i64));
        for d in 1..rel.d {
            prop_assert!(d * weights[l] as i64 % others != 0);
        }
    }
}

// ------------------------------------------------------------ braid words

fn letter(s: &MarkedSurface) -> impl Strategy<Value = Letter> {
    let n = s.points();
    let dirs = s.directions() as u32;
    let weights = s.weights().to_vec();
    (0u8..3, 1..=n, 1..=n, 1..=dirs.max(1), any::<bool>()).prop_filter_map("distinct points", move |(kind, i, j, r, pos)| {
        let exp = if pos { 1 } else { -1 };
        match kind {
            0 if dirs > 0 => Some(Letter::rho(i, r, exp)),
            1 if i != j && weights[i - 1] == weights[j - 1] => Some(Letter::sigma(i, j, exp)),
            2 if i != j => Some(Letter::kappa(i, j, exp)),
            _ => None,
        }
    })
}

fn word(s: MarkedSurface, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(letter(&s), 0..=max_len).prop_map(move |ls| BraidWord::new(s.clone(), ls).unwrap())
}

/// Appends rho letters on one point per weight class cancelling the image.
fn close_in_kernel(w: BraidWord) -> BraidWord {
    let s = w.surface().clone();
    let mut reps: Vec<usize> = Vec::new();
    for i in 1..=s.points() {
        if !reps.iter().any(|&p| s.weight(p) == s.weight(i)) {
            reps.push(i);
        }
    }
    let values: Vec<i64> = reps.iter().map(|&p| s.weight(p) as i64).collect();
    let mut letters = w.letters().to_vec();
    for (r, &c) in w.abel_jacobi().coords().iter().enumerate() {
        let coeffs = solve_linear(&values, -c).expect("classes generate Z on these surfaces");
        for (&p, &x) in reps.iter().zip(&coeffs) {
            let exp = if x < 0 { -1 } else { 1 };
            letters.extend(std::iter::repeat_n(Letter::rho(p, r as u32 + 1, exp), x.unsigned_abs() as usize));
        }
    }
    let z = BraidWord::new(s, letters).unwrap();
    assert!(z.in_kernel());
    z
}

fn surface(g: u32, weights: Vec<i32>) -> MarkedSurface {
    MarkedSurface::stratum(g, weights).unwrap()
}

fn main_surface() -> MarkedSurface {
    surface(5, [vec![1; 12], vec![2, 2]].concat())
}

fn check_factorization(z: &BraidWord) -> Result<(), TestCaseError> {
    let f = factorize_kernel_word(z).unwrap();
    prop_assert!(f.factors.iter().all(|c| c.is_certified() && c.verify()));
    prop_assert!(f.matches(z));
    prop_assert!(f.stages.len() <= f.peeled);
    for st in &f.stages {
        let mut hp = st.commutator();
        hp.extend_from_slice(&st.projection);
        prop_assert_eq!(strata::braid::free_reduce_letters(&hp), st.sorted.clone());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn abel_jacobi_is_a_homomorphism(u in word(main_surface(), 30), v in word(main_surface(), 30)) {
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(uv.abel_jacobi(), &u.abel_jacobi() + &v.abel_jacobi());
        prop_assert_eq!(u.inverse().abel_jacobi(), -&u.abel_jacobi());
        prop_assert_eq!(uv.permutation_image(), u.permutation_image().then(&v.permutation_image()));
    }

    #[test]
    fn free_reduction_keeps_images(u in word(main_surface(), 40)) {
        let r = u.free_reduce();
        prop_assert!(r.len() <= u.len());
        prop_assert_eq!(r.abel_jacobi(), u.abel_jacobi());
        prop_assert_eq!(r.permutation_image(), u.permutation_image());
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(u.concat(&u.inverse()).unwrap().free_reduce().is_empty());
    }

    #[test]
    fn transpositions_recompose(u in word(main_surface(), 30)) {
        let p = u.permutation_image();
        prop_assert!(p.preserves(u.surface().weights()));
        let (y, x) = strata::braid::factor_by_permutation(&u);
        prop_assert_eq!(y.permutation_image(), p);
        prop_assert!(x.permutation_image().is_identity());
    }

    #[test]
    fn factorizes_main_stratum(w in word(main_surface(), 24)) {
        check_factorization(&close_in_kernel(w))?;
    }

    #[test]
    fn factorizes_equal_weights_without_commutators(w in word(surface(3, vec![1; 8]), 24)) {
        let z = close_in_kernel(w);
        check_factorization(&z)?;
        let f = factorize_kernel_word(&z).unwrap();
        let commutator = |c: &strata::braid::FactorCertificate| matches!(c.tag(), FactorTag::ICommutator { .. });
        prop_assert!(!f.factors.iter().any(commutator));
    }

    #[test]
    fn factorizes_with_non_unit_primary_class(w in word(surface(7, [vec![2; 9], vec![3, 3]].concat()), 24)) {
        // weight 3 against weight 2 balances only in even powers
        check_factorization(&close_in_kernel(w))?;
    }

    #[test]
    fn factorizes_three_classes(w in word(surface(6, [vec![1; 12], vec![2, 2], vec![4]].concat()), 24)) {
        check_factorization(&close_in_kernel(w))?;
    }
}

// ------------------------------------------------------------ graphs

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn face_reduction_and_subdivision_invariants(n in 5usize..=7, pick in any::<prop::sample::Index>(), edges in prop::collection::vec(any::<prop::sample::Index>(), 0..4)) {
        let (lo, hi) = complete_graph_genus_range(n).unwrap();
        let g = lo + pick.index((hi - lo + 1) as usize) as u32;
        let mut m = embed_complete(n, g, SearchOptions::default()).unwrap();
        prop_assert_eq!(m.genus(), g);
        while m.face_count() >= 2 {
            let r = m.report();
            let next = delete_edge_preserving(&m).unwrap();
            let s = next.report();
            prop_assert_eq!((s.faces, s.edges, s.genus), (r.faces - 1, r.edges - 1, g));
            prop_assert!(s.simple);
            m = next;
        }
        for e in edges {
            let r = m.report();
            let next = subdivide_edge(&m, e.index(m.edge_count())).unwrap();
            let s = next.report();
            prop_assert_eq!((s.vertices, s.edges, s.faces, s.genus), (r.vertices + 1, r.edges + 1, r.faces, g));
            prop_assert!(s.simple);
            m = next;
        }
    }
}

// ------------------------------------------------------------ criteria

fn every_signature(g: u32, max_poles: i32) -> Vec<StratumSignature> {
    fn parts(n: i32, max: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if n == 0 {
            out.push(cur.clone());
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            parts(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for poles in 0..=max_poles {
        let zeros = 4 * g as i32 - 4 + poles;
        if zeros < 0 {
            continue;
        }
        let mut found = Vec::new();
        parts(zeros, zeros, &mut Vec::new(), &mut found);
        for mut p in found {
            p.extend(std::iter::repeat_n(-1, poles as usize));
            out.push(StratumSignature::new(g, p).unwrap());
        }
    }
    out
}

#[test]
fn hypothesis_chain() {
    let mut main_count = 0;
    for g in 0..=7 {
        for s in every_signature(g, 2) {
            if !satisfies_main_theorem(&s) {
                continue;
            }
            main_count += 1;
            if g > 2 {
                assert!(satisfies_null_prop(&s), "{s}");
            }
            let r = s.connectivity().unwrap();
            assert_eq!((r.component_count, r.reason), (1, ConnectivityReason::C1Theorem), "{s}");
            assert_eq!(main_theorem_verdict(&s).clause, "all");
        }
    }
    assert!(main_count > 0);
}
