mod common;

use common::*;
use inddom_core::cover::{covers, integer_cover_min, weighted_integer_cover_min};
use inddom_core::lp::{check_strong_duality, simplex_solve, LpModel, LpStatus, Relation, Sense};
use inddom_core::rational::{self, Rational};
use proptest::prelude::*;

fn relation(k: u8) -> Relation {
    match k % 3 {
        0 => Relation::Le,
        1 => Relation::Ge,
        _ => Relation::Eq,
    }
}

type RawRow = (Vec<i64>, u8, i64);

fn arb_lp() -> impl Strategy<Value = (Vec<i64>, Vec<RawRow>, bool)> {
    (1usize..=3).prop_flat_map(|d| {
        (
            proptest::collection::vec(-4i64..=4, d),
            proptest::collection::vec(
                (proptest::collection::vec(-3i64..=3, d), 0u8..6, 0i64..=6),
                1..=4,
            ),
            any::<bool>(),
        )
    })
}

/// Builds the model with box rows x_i ≤ 4 appended so the region is bounded.
fn build(
    c: &[i64],
    rows: &[RawRow],
    maximize: bool,
) -> (LpModel, Vec<(Vec<Rational>, Relation, Rational)>) {
    let d = c.len();
    let sense = if maximize {
        Sense::Maximize
    } else {
        Sense::Minimize
    };
    let mut model = LpModel::new(sense, c.iter().map(|&v| rational::int(v)).collect());
    let mut plain = Vec::new();
    // relation codes 3..6 map to Le so feasible instances are common
    for (a, rel, b) in rows {
        let r = if *rel >= 3 {
            Relation::Le
        } else {
            relation(*rel)
        };
        let coeffs: Vec<Rational> = a.iter().map(|&v| rational::int(v)).collect();
        model.add_row(coeffs.clone(), r, rational::int(*b));
        plain.push((coeffs, r, rational::int(*b)));
    }
    for i in 0..d {
        let mut e = vec![rational::zero(); d];
        e[i] = rational::one();
        model.add_row(e.clone(), Relation::Le, rational::int(4));
        plain.push((e, Relation::Le, rational::int(4)));
    }
    (model, plain)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn simplex_matches_vertex_enumeration((c, rows, maximize) in arb_lp()) {
        let (model, plain) = build(&c, &rows, maximize);
        let out = simplex_solve(&model);
        let objective: Vec<Rational> = if maximize {
            c.iter().map(|&v| rational::int(v)).collect()
        } else {
            c.iter().map(|&v| rational::int(-v)).collect()
        };
        match brute_lp_max(&objective, &plain) {
            None => prop_assert_eq!(out.status, LpStatus::Infeasible),
            Some(best) => {
                prop_assert_eq!(out.status, LpStatus::Optimal);
                let expected = if maximize { best } else { -best };
                prop_assert_eq!(&out.value, &expected);
                prop_assert!(check_strong_duality(&model, &out).is_empty());
            }
        }
    }

    #[test]
    fn simplex_is_deterministic((c, rows, maximize) in arb_lp()) {
        let (model, _) = build(&c, &rows, maximize);
        prop_assert_eq!(simplex_solve(&model), simplex_solve(&model));
    }

    #[test]
    fn integer_cover_matches_enumeration(
        (rows, demands) in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| (
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r),
            proptest::collection::vec(0u64..=3, r),
        ))
    ) {
        let ncols = rows[0].len();
        let coverable = rows.iter().zip(&demands).all(|(row, &d)| d == 0 || row.iter().any(|&b| b));
        let result = integer_cover_min(&rows, &demands);
        if !coverable {
            prop_assert!(result.is_err());
            return Ok(());
        }
        let sol = result.unwrap();
        prop_assert!(covers(&rows, &demands, &sol.f));
        let mut best = u64::MAX;
        each_vector(ncols, 3, |f| {
            if covers(&rows, &demands, f) {
                best = best.min(f.iter().sum());
            }
        });
        prop_assert_eq!(&sol.value, &rational::uint(best));
        prop_assert_eq!(rational::uint(sol.f.iter().sum()), rational::uint(best));
        prop_assert!(sol.relaxation <= sol.value);
    }

    #[test]
    fn weighted_cover_matches_enumeration(
        (rows, demands, costs) in (1usize..=3, 1usize..=3).prop_flat_map(|(r, c)| (
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r),
            proptest::collection::vec(0u64..=3, r),
            proptest::collection::vec((1i64..=4, 1i64..=3), c),
        ))
    ) {
        let ncols = rows[0].len();
        let coverable = rows.iter().zip(&demands).all(|(row, &d)| d == 0 || row.iter().any(|&b| b));
        prop_assume!(coverable);
        let costs: Vec<Rational> = costs.iter().map(|&(p, q)| rational::ratio(p, q)).collect();
        let sol = weighted_integer_cover_min(&rows, &demands, &costs).unwrap();
        prop_assert!(covers(&rows, &demands, &sol.f));
        let mut best: Option<Rational> = None;
        each_vector(ncols, 3, |f| {
            if covers(&rows, &demands, f) {
                let v: Rational = f.iter().zip(&costs).map(|(&x, c)| rational::uint(x) * c).sum();
                if best.as_ref().is_none_or(|b| v < *b) {
                    best = Some(v);
                }
            }
        });
        prop_assert_eq!(sol.value, best.unwrap());
    }
}
