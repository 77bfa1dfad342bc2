//! Cross-module pipeline checks: the section filtration against the crystal
//! and polytope oracles, and consistency probes on configurations beyond the
//! worked SL(3) example.

use bott_basis::filtration::SectionSpaceContext;
use bott_basis::laurent::rat;
use bott_basis::lie::{default_w0_word, weyl_dim, Weight, Word};
use bott_basis::polytopes::crystal::crystal_string_points;
use bott_basis::polytopes::{affine_image, convex_hull, polytope_equal, AffineLatticeMap};
use std::collections::BTreeSet;

fn leaf_lvector_set(ctx: &SectionSpaceContext) -> BTreeSet<Vec<i64>> {
    ctx.canonical_basis()
        .leaves
        .iter()
        .map(|l| l.l_vector.0.iter().map(|&c| c as i64).collect())
        .collect()
}

#[test]
fn string_polytope_matches_the_lvector_hull() {
    let word = Word(vec![1, 2, 1]);
    let rho = Weight::from_fundamental(3, &[1, 1]);
    let ctx = SectionSpaceContext::for_lambda(3, &word, &rho).unwrap();
    let lvectors: Vec<Vec<i64>> = leaf_lvector_set(&ctx).into_iter().collect();
    assert_eq!(lvectors.len(), 8);

    let strings = crystal_string_points(3, &rho, &word).unwrap();
    let map = AffineLatticeMap {
        matrix: vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]],
        offset: vec![-2, -2, -1],
    };
    let mapped: BTreeSet<Vec<i64>> = map.apply_all(&strings).into_iter().collect();
    let lvector_set: BTreeSet<Vec<i64>> = lvectors.iter().cloned().collect();
    assert_eq!(mapped, lvector_set);

    let string_hull = convex_hull(&strings).unwrap();
    let lvector_hull = convex_hull(&lvectors).unwrap();
    assert!(polytope_equal(
        &affine_image(&string_hull, &map).unwrap(),
        &lvector_hull
    ));
    // the origin sits on the boundary of the ℓ-vector hull, as a vertex
    assert!(lvector_hull.contains(&[0, 0, 0]));
    assert!(!lvector_hull.is_interior(&[0, 0, 0]));
    assert!(lvector_hull.vertices().contains(&vec![0, 0, 0]));
}

#[test]
fn graded_count_probes_beyond_the_example() {
    let cases: Vec<(usize, Word, Vec<i64>)> = vec![
        (3, Word(vec![2, 1, 2]), vec![1, 1]),
        (3, Word(vec![1, 2, 1]), vec![1, 0]),
        (3, Word(vec![2, 1, 2]), vec![1, 0]),
        (3, Word(vec![1, 2, 1]), vec![0, 1]),
        (3, Word(vec![2, 1, 2]), vec![0, 1]),
        (3, Word(vec![1, 2, 1]), vec![2, 0]),
        (3, Word(vec![2, 1, 2]), vec![2, 0]),
        (4, default_w0_word(4), vec![1, 0, 0]),
    ];
    for (n, word, coeffs) in cases {
        let lambda = Weight::from_fundamental(n, &coeffs);
        let ctx = SectionSpaceContext::for_lambda(n, &word, &lambda).unwrap();
        let basis = ctx.canonical_basis();
        let dim = weyl_dim(n, &lambda).unwrap();
        assert_eq!(
            basis.sum_leaf_dims as u64, dim,
            "graded count for n={n} word={word} λ={lambda}"
        );
        assert_eq!(basis.dim_v as u64, dim);
        assert!(
            basis.conjecture_consistent(),
            "leaf of dimension ≥ 2 for n={n} word={word} λ={lambda}"
        );
    }
}

#[test]
fn leaf_weights_refine_the_character() {
    use bott_basis::lie::weight_multiplicities;
    use std::collections::BTreeMap;

    for (word, coeffs) in [
        (Word(vec![1, 2, 1]), vec![1i64, 1]),
        (Word(vec![2, 1, 2]), vec![1, 1]),
        (Word(vec![1, 2, 1]), vec![1, 0]),
    ] {
        let lambda = Weight::from_fundamental(3, &coeffs);
        let ctx = SectionSpaceContext::for_lambda(3, &word, &lambda).unwrap();
        let basis = ctx.canonical_basis();
        let mut found: BTreeMap<Weight, u64> = BTreeMap::new();
        for leaf in &basis.leaves {
            *found.entry(leaf.weight.clone()).or_default() += leaf.dim as u64;
        }
        assert_eq!(found, weight_multiplicities(3, &lambda).unwrap());
    }
}

#[test]
fn sweep_is_linear_on_random_combinations() {
    use bott_basis::bott_samelson::sweep_poly;
    use bott_basis::laurent::ratio;

    let word = Word(vec![1, 2, 1]);
    let rho = Weight::from_fundamental(3, &[1, 1]);
    let ctx = SectionSpaceContext::for_lambda(3, &word, &rho).unwrap();
    let sub = ctx.subgroup().clone();
    // a few fixed rational coefficient pairs stand in for "random": the
    // identity being polynomial, coefficients are immaterial
    let pairs = [
        (rat(2), rat(3)),
        (ratio(-1, 2), ratio(5, 7)),
        (rat(0), rat(-4)),
    ];
    for (i, j) in [(0usize, 1usize), (2, 5), (3, 8)] {
        let a = &ctx.sections()[i].value;
        let b = &ctx.sections()[j].value;
        for (alpha, beta) in &pairs {
            let combo = &a.scaled(alpha) + &b.scaled(beta);
            let lhs = sweep_poly(&combo, &sub);
            let rhs = &sweep_poly(a, &sub).scaled(alpha) + &sweep_poly(b, &sub).scaled(beta);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn prevaluation_on_all_pairs_of_the_example_basis() {
    let word = Word(vec![1, 2, 1]);
    let rho = Weight::from_fundamental(3, &[1, 1]);
    let ctx = SectionSpaceContext::for_lambda(3, &word, &rho).unwrap();
    let basis = ctx.canonical_basis();
    let reps: Vec<_> = basis.leaves.iter().map(|l| l.representative.clone()).collect();
    assert_eq!(reps.len(), 8);
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            match ctx.check_prevaluation(&reps[i], &reps[j]) {
                Ok(ok) => assert!(ok, "pair ({i},{j})"),
                // a vanishing sum is outside the property's domain
                Err(e) => panic!("pair ({i},{j}) degenerate: {e}"),
            }
        }
    }
}
