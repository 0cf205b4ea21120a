mod common;

use settle::bounds::{audit_structural_lemmas, row_above_cap, BoundsReport};
use settle::grid::profile::RowKernel;
use settle::patterns::{generate_pattern, PatternKind};
use settle::solvers::{solve, Objective, SolveRequest};
use settle::{Configuration, Dims};

#[test]
fn sample_maximal_passes_every_audit() {
    let c = common::golden_grid("sample_maximal.grid");
    let audit = audit_structural_lemmas(&c).unwrap();
    assert_eq!(audit.southern_rows, Some(true));
    assert_eq!(audit.border_width2, Some(true));
    assert_eq!(audit.border_width3, Some(true));
    assert_eq!(audit.width4_strips, Some(true));
}

#[test]
fn rake_stripe_southern_rows_hold_exactly_n_plus_two() {
    let c = generate_pattern(PatternKind::RakeStripe, 6, 8).unwrap();
    assert!(audit_structural_lemmas(&c).unwrap().all_pass());
    let south: u64 = (5..=6).map(|i| c.row_profile(i).count()).sum();
    assert_eq!(south, 10);
}

#[test]
fn audits_on_generators_and_witnesses() {
    for m in 2..=12 {
        for n in 2..=12 {
            for kind in PatternKind::ALL {
                let c = generate_pattern(kind, m, n).unwrap();
                assert!(audit_structural_lemmas(&c).unwrap().all_pass(), "{kind} {m}x{n}");
            }
            if n <= 8 {
                for objective in [Objective::MaxPermissible, Objective::MinMaximal] {
                    let req = SolveRequest::new(Dims::free(m, n).unwrap(), objective);
                    let w = solve(&req).unwrap().witness.unwrap();
                    assert!(audit_structural_lemmas(&w).unwrap().all_pass(), "{w:?}");
                }
            }
        }
    }
}

#[test]
fn row_above_cap_on_two_row_strips() {
    for n in 1..=8 {
        let kernel = RowKernel::new(n, false);
        let border: u64 = kernel.south_border();
        for top in 0u64..1 << n {
            for bottom in 0u64..1 << n {
                let permissible = kernel.blocked(&top, &bottom) == 0
                    && kernel.blocked(&bottom, &border) == 0;
                if permissible {
                    let cap = row_above_cap(bottom.count_ones() as usize, n).unwrap();
                    assert!(u64::from(top.count_ones()) <= cap, "n={n} {top:b} over {bottom:b}");
                }
            }
        }
    }
}

#[test]
fn report_text_and_json() {
    let r = BoundsReport::new(4, 4).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["crude_upper"]["value"], "29/2");
    assert_eq!(v["e_upper_block"]["value"], 13);
    assert!(r.to_text().contains("29/2"));
    assert!(BoundsReport::new(1, 4).is_err());
}

#[test]
fn audit_full_two_column_grid() {
    let c = Configuration::full(Dims::free(6, 2).unwrap());
    let audit = audit_structural_lemmas(&c).unwrap();
    assert!(audit.all_pass());
    assert_eq!(audit.width4_strips, None);
}
