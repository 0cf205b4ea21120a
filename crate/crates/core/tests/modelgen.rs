mod common;

use settle::modelgen::{export_efficient, export_inefficient, Relation};
use settle::solvers::{solve, Objective, SolveRequest};
use settle::{Configuration, Dims};

#[test]
fn feasible_sets_are_exactly_the_right_configurations() {
    for m in 2..=6 {
        for n in 2..=12 / m {
            let dims = Dims::free(m, n).unwrap();
            let eff = export_efficient(m, n).unwrap();
            let ineff = export_inefficient(m, n).unwrap();
            for key in 0u64..1 << (m * n) {
                let c = Configuration::from_fn(dims, |at| key >> ((at.i - 1) * n + at.j - 1) & 1 == 1);
                assert_eq!(eff.admits(&c), c.is_permissible(), "{c:?}");
                assert_eq!(ineff.admits(&c), c.is_maximal(), "{c:?}");
            }
        }
    }
}

#[test]
fn enumerated_optima_match_solvers() {
    for m in 2..=6 {
        for n in 2..=12 / m {
            let dims = Dims::free(m, n).unwrap();
            let e = solve(&SolveRequest::new(dims, Objective::MaxPermissible)).unwrap();
            let i = solve(&SolveRequest::new(dims, Objective::MinMaximal)).unwrap();
            let eff = export_efficient(m, n).unwrap().optimum_by_enumeration().unwrap();
            let ineff = export_inefficient(m, n).unwrap().optimum_by_enumeration().unwrap();
            assert_eq!(eff, Some(e.optimum));
            assert_eq!(ineff, Some(i.optimum));
        }
    }
    assert_eq!(
        export_inefficient(3, 4).unwrap().optimum_by_enumeration().unwrap(),
        Some(8)
    );
}

#[test]
fn golden_lp_files() {
    for (text, file) in [
        (export_efficient(3, 4).unwrap().to_lp(), "model_3x4_max.lp"),
        (export_inefficient(3, 4).unwrap().to_lp(), "model_3x4_min.lp"),
    ] {
        let golden = std::fs::read_to_string(common::golden(file)).unwrap();
        assert_eq!(text, golden, "{file}");
    }
    assert_eq!(
        export_inefficient(5, 5).unwrap().to_lp(),
        export_inefficient(5, 5).unwrap().to_lp()
    );
}

#[test]
fn model_structure() {
    let model = export_inefficient(4, 6).unwrap();
    assert_eq!(model.objective.len(), 24);
    let lots = model.dims.lots();
    for c in &model.constraints {
        assert!(c.terms.iter().all(|&(_, v)| v < model.variables.len()));
        if c.relation == Relation::Ge {
            assert!(c.name.starts_with("cover_"));
        }
    }
    assert!(model.variables[..lots].iter().all(|v| v.starts_with("x_")));
    assert!(model.variables[lots..]
        .iter()
        .all(|v| ["pE_", "pW_", "pN_", "pC_"].iter().any(|p| v.starts_with(p))));
    // a single-row-wide grid never has an east or west proposition
    let narrow = export_inefficient(3, 2).unwrap();
    assert!(narrow.variables.iter().all(|v| !v.starts_with("pE_") && !v.starts_with("pW_")));
}
