// Kept in its own test binary: it changes the process environment.

use settle::solvers::{solve, Limits, Objective, SolveRequest};
use settle::{Dims, Error};

#[test]
fn environment_overrides_column_caps() {
    std::env::set_var("SETTLE_MAX_COLS", "4");
    let req = SolveRequest::new(Dims::free(2, 5).unwrap(), Objective::MaxPermissible);
    assert_eq!(solve(&req).unwrap_err(), Error::ColumnCap { cols: 5, cap: 4 });
    let explicit = Limits {
        max_cols: Some(5),
        ..Limits::default()
    };
    assert_eq!(solve(&req.clone().with_limits(explicit)).unwrap().optimum, 9);
    std::env::set_var("SETTLE_MAX_COLS", "13");
    let req = SolveRequest::new(Dims::free(2, 13).unwrap(), Objective::MinMaximal);
    assert_eq!(solve(&req).unwrap().optimum, 15);
    std::env::remove_var("SETTLE_MAX_COLS");
    assert!(solve(&req).is_err());
}
