mod common;

use common::Naive;
use proptest::prelude::*;
use settle::io::{parse_grid, render, to_grid_file, to_json, RenderStyle};
use settle::{BoundaryMode, Configuration, Coord, Dims, Proposition};

const MODES: [BoundaryMode; 2] = [BoundaryMode::Free, BoundaryMode::Bricked];

#[test]
fn exhaustive_agreement_with_definitions() {
    // Every configuration on every grid with at most 16 lots.
    for mode in MODES {
        for m in 1..=16 {
            for n in 1..=16 / m {
                for key in 0u64..1 << (m * n) {
                    let mut naive = Naive::from_bits(m, n, mode, key);
                    let c = naive.to_config();
                    let permissible = naive.permissible();
                    assert_eq!(c.is_permissible(), permissible, "{c:?}");
                    assert_eq!(c.forbidden_pattern_placements().is_empty(), permissible);
                    assert_eq!(c.is_maximal(), naive.maximal(), "{c:?}");
                    if !permissible {
                        continue;
                    }
                    let mut all_explained = true;
                    for i in 1..=m {
                        for j in 1..=n {
                            let at = Coord::new(i, j);
                            if c.house(at).unwrap() {
                                continue;
                            }
                            let addable = naive.addable(i, j);
                            assert_eq!(c.is_addable(at).unwrap(), addable, "{c:?} at {at}");
                            let explained = Proposition::ALL
                                .iter()
                                .any(|&p| c.proposition(at, p).unwrap());
                            assert_eq!(explained, !addable);
                            all_explained &= explained;
                        }
                    }
                    assert_eq!(c.is_maximal(), all_explained);
                }
            }
        }
    }
}

fn config_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Configuration> {
    (1..=max_rows, 1..=max_cols, any::<bool>(), 0u32..=100).prop_flat_map(
        |(m, n, bricked, density)| {
            let boundary = if bricked {
                BoundaryMode::Bricked
            } else {
                BoundaryMode::Free
            };
            proptest::collection::vec(proptest::bool::weighted(density as f64 / 100.0), m * n)
                .prop_map(move |bits| {
                    let dims = Dims::new(m, n, boundary).unwrap();
                    Configuration::from_fn(dims, |at| bits[(at.i - 1) * n + at.j - 1])
                })
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn parse_render_round_trip(c in config_strategy(12, 80)) {
        prop_assert_eq!(parse_grid(&to_grid_file(&c)).unwrap(), c.clone());
        prop_assert_eq!(parse_grid(&to_json(&c)).unwrap(), c.clone());
        if c.boundary() == BoundaryMode::Free {
            prop_assert_eq!(parse_grid(&render(&c, RenderStyle::AsciiPlain)).unwrap(), c);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn mirror_symmetry(c in config_strategy(10, 70)) {
        let mirror = c.mirrored();
        prop_assert_eq!(mirror.is_permissible(), c.is_permissible());
        prop_assert_eq!(mirror.is_maximal(), c.is_maximal());
        prop_assert_eq!(mirror.occupancy(), c.occupancy());
        let naive = Naive::from_config(&c).mirrored();
        prop_assert_eq!(naive.to_config(), mirror);
    }

    #[test]
    fn forbidden_pattern_equivalence(c in config_strategy(10, 70)) {
        prop_assert_eq!(c.is_permissible(), c.forbidden_pattern_placements().is_empty());
        prop_assert_eq!(c.blocked_houses(), c.forbidden_pattern_placements());
        prop_assert_eq!(c.is_permissible(), Naive::from_config(&c).permissible());
    }

    #[test]
    fn monotone_closure(c in config_strategy(8, 70)) {
        let c = if c.is_permissible() {
            c
        } else {
            Configuration::empty(c.dims())
        };
        for at in c.addable_lots() {
            prop_assert!(c.with(at, true).unwrap().is_permissible());
        }
        let done = c.complete_greedily();
        prop_assert!(done.is_maximal());
        prop_assert!(Naive::from_config(&done).maximal());
        for at in c.houses() {
            prop_assert!(done.house(at).unwrap());
        }
    }
}
