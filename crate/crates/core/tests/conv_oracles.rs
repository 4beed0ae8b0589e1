mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use skewmdp::conv::{
    column_distance_with, is_dual_mdp, is_mdp, mdp_minor_check_with, truncate, DistanceEngine, IndexRule,
    MatrixKind,
};
use skewmdp::par::Execution;
use skewmdp::ExtensionField;

#[test]
fn truncation_matches_definition() {
    let f = ExtensionField::new(5, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (n, k) in [(3, 1), (4, 2), (5, 2)] {
        let g = random_unit_memory(&f, n, k, &mut rng);
        for j in 0..4 {
            let t = truncate(&f, &g, j, MatrixKind::Generator);
            assert_eq!(t.matrix, sliding_generator(&f, &g, j));
        }
    }
}

#[test]
fn generator_rule_matches_filter() {
    for (n, k, j) in [(3, 1, 1), (3, 1, 2), (4, 2, 1), (5, 2, 1), (3, 2, 2), (4, 1, 3)] {
        let rule = IndexRule {
            kind: MatrixKind::Generator,
            n,
            block_rows: k,
            j,
        };
        let expected: Vec<Vec<usize>> = subsets(n * (j + 1), k * (j + 1))
            .into_iter()
            .filter(|c| generator_rule(c, n, k, j))
            .collect();
        assert_eq!(rule.sets(), expected, "(n, k, j) = ({n}, {k}, {j})");
        assert_eq!(rule.count() as usize, expected.len());
    }
}

#[test]
fn non_admissible_minors_vanish_on_random_codes() {
    let f = ExtensionField::new(3, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (n, k, j) in [(3, 1, 1), (4, 2, 1), (3, 1, 2)] {
        let g = random_unit_memory(&f, n, k, &mut rng);
        let m = sliding_generator(&f, &g, j);
        for cols in subsets(n * (j + 1), k * (j + 1)) {
            if !generator_rule(&cols, n, k, j) {
                assert!(leibniz(&f, &m.select_columns(&cols)).is_zero());
            }
        }
    }
}

#[test]
fn column_distance_engines_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (q, t, n, k, jmax) in [(3, 2, 3, 1, 2), (3, 2, 4, 2, 1), (5, 2, 4, 1, 1), (3, 1, 4, 2, 2)] {
        let f = ExtensionField::new(q, t).unwrap();
        for _ in 0..4 {
            let g = random_unit_memory(&f, n, k, &mut rng);
            for j in 0..=jmax {
                let expected = brute_column_distance(&f, &g, j);
                for engine in [DistanceEngine::MessageEnumeration, DistanceEngine::SupportEnumeration] {
                    for exec in [Execution::Sequential, Execution::Parallel] {
                        let d = column_distance_with(&f, &g, j, engine, exec).unwrap();
                        assert_eq!(d.distance, expected, "{engine:?} j = {j}");
                    }
                }
            }
        }
    }
}

#[test]
fn minor_check_backends_agree() {
    let f = ExtensionField::new(3, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut failing = 0;
    for _ in 0..30 {
        let g = random_unit_memory(&f, 4, 2, &mut rng);
        let t = truncate(&f, &g, 1, MatrixKind::Generator);
        let a = mdp_minor_check_with(&f, &t, Execution::Sequential);
        let b = mdp_minor_check_with(&f, &t, Execution::Parallel);
        assert_eq!(a, b);
        if let Some(w) = &a.witness {
            failing += 1;
            let cols: Vec<usize> = w.iter().map(|c| c - 1).collect();
            assert!(generator_rule(&cols, 4, 2, 1));
            assert!(leibniz(&f, &t.matrix.select_columns(&cols)).is_zero());
            // lexicographically first vanishing admissible set
            let first = subsets(8, 4)
                .into_iter()
                .find(|c| generator_rule(c, 4, 2, 1) && leibniz(&f, &t.matrix.select_columns(c)).is_zero());
            assert_eq!(first, Some(cols));
        }
    }
    assert!(failing > 0, "sample should contain non-MDP codes");
}

/// The parity-kind rule is validated against the dual column distance
/// computed from the syndrome definition.
#[test]
fn parity_rule_matches_dual_distance() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cases = [(3, 2, 3, 1, 20), (5, 2, 4, 1, 10), (3, 2, 5, 2, 3), (3, 2, 4, 2, 6)];
    let (mut yes, mut no) = (0, 0);
    for (q, t, n, r, count) in cases {
        let f = ExtensionField::new(q, t).unwrap();
        for _ in 0..count {
            let h = random_unit_memory(&f, n, r, &mut rng);
            let v = is_dual_mdp(&f, &h).unwrap();
            let bound = (n - v.k) * (v.l + 1) + 1;
            let light = brute_dual_column_distance(&f, &h, v.l, bound - 1);
            assert_eq!(v.is_mdp, light.is_none(), "(n, r) = ({n}, {r}), light word {light:?}");
            if v.is_mdp {
                yes += 1;
            } else {
                no += 1;
            }
        }
    }
    assert!(yes > 0 && no > 0, "{yes} dual MDP, {no} not");
}

#[test]
fn generator_rule_matches_column_distance_on_random_codes() {
    let f = ExtensionField::new(3, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..30 {
        let g = random_unit_memory(&f, 3, 1, &mut rng);
        let v = is_mdp(&f, &g).unwrap();
        assert_eq!(v.is_mdp, brute_column_distance(&f, &g, v.l) == 2 * (v.l + 1) + 1);
    }
}
