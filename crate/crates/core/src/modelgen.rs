//! Integer programs for both extremal problems, written in LP text format
//! for external MILP solvers.
//!
//! Variables are binary: `x_i_j` is the lot in row `i`, column `j`. The
//! minimum model adds one auxiliary binary per usable proposition per lot,
//! named `pE_i_j`, `pW_i_j`, `pN_i_j` or `pC_i_j`. Models describe the open
//! (`Free`) border.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grid::{Configuration, Coord, Dims, Proposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    /// `(coefficient, variable index)`.
    pub terms: Vec<(i64, usize)>,
    pub relation: Relation,
    pub rhs: i64,
}

impl Constraint {
    fn holds(&self, values: &[bool]) -> bool {
        let lhs: i64 = self
            .terms
            .iter()
            .map(|&(c, v)| if values[v] { c } else { 0 })
            .sum();
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IpModel {
    pub dims: Dims,
    pub sense: Sense,
    /// All binaries; the first `m * n` are the lots in row-major order.
    pub variables: Vec<String>,
    /// Objective coefficients, all on lot variables.
    pub objective: Vec<(i64, usize)>,
    pub constraints: Vec<Constraint>,
}

/// The name of the lot variable at 1-based `(i, j)`.
pub fn var_name(i: usize, j: usize) -> String {
    format!("x_{i}_{j}")
}

fn check_size(m: usize, n: usize) -> Result<Dims> {
    if m < 2 || n < 2 {
        return Err(Error::TooSmall {
            what: "model export",
            min: 2,
            rows: m,
            cols: n,
        });
    }
    Dims::free(m, n)
}

impl IpModel {
    fn new(dims: Dims, sense: Sense) -> Self {
        let mut variables = Vec::with_capacity(dims.lots());
        for i in 1..=dims.rows {
            for j in 1..=dims.cols {
                variables.push(var_name(i, j));
            }
        }
        let objective = (0..dims.lots()).map(|v| (1, v)).collect();
        Self {
            dims,
            sense,
            variables,
            objective,
            constraints: Vec::new(),
        }
    }

    /// Index of the lot variable at `(i, j)`.
    pub fn lot(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.dims.cols + (j - 1)
    }

    fn add_var(&mut self, name: String) -> usize {
        self.variables.push(name);
        self.variables.len() - 1
    }

    /// One constraint per lot that could be blocked: the lot and its west,
    /// east and south neighbours are not all occupied.
    fn add_forbidden_pattern(&mut self) {
        let (m, n) = (self.dims.rows, self.dims.cols);
        for i in 1..m {
            for j in 2..n {
                let terms = [(i, j), (i, j - 1), (i, j + 1), (i + 1, j)]
                    .iter()
                    .map(|&(a, b)| (1, self.lot(a, b)))
                    .collect();
                self.constraints.push(Constraint {
                    name: format!("fp_{i}_{j}"),
                    terms,
                    relation: Relation::Le,
                    rhs: 3,
                });
            }
        }
    }

    fn lot_vars(&self) -> usize {
        self.dims.lots()
    }

    /// Whether the configuration's lots extend to a feasible assignment.
    ///
    /// Each auxiliary appears only in upper-bound rows against lot
    /// variables and in one covering row, so setting it to 1 whenever its
    /// upper-bound rows allow is the best completion.
    pub fn admits(&self, config: &Configuration) -> bool {
        if config.dims() != self.dims {
            return false;
        }
        let lots = self.lot_vars();
        let mut values = vec![false; self.variables.len()];
        for at in config.houses() {
            values[self.lot(at.i, at.j)] = true;
        }
        for aux in lots..self.variables.len() {
            values[aux] = true;
            let ok = self
                .constraints
                .iter()
                .filter(|c| c.relation == Relation::Le && c.terms.iter().any(|&(_, v)| v == aux))
                .all(|c| c.holds(&values));
            values[aux] = ok;
        }
        self.constraints.iter().all(|c| c.holds(&values))
    }

    /// Optimal objective by enumerating every lot assignment; `None` when
    /// infeasible. Limited to 22 lots.
    pub fn optimum_by_enumeration(&self) -> Result<Option<u64>> {
        let lots = self.lot_vars();
        if lots > 22 {
            return Err(Error::GridTooLarge { cells: lots, limit: 22 });
        }
        let n = self.dims.cols;
        let mut best: Option<u64> = None;
        for key in 0u64..1 << lots {
            let config = Configuration::from_fn(self.dims, |at| {
                key >> ((at.i - 1) * n + at.j - 1) & 1 == 1
            });
            if self.admits(&config) {
                let v = config.occupancy();
                best = Some(match (best, self.sense) {
                    (None, _) => v,
                    (Some(b), Sense::Maximize) => b.max(v),
                    (Some(b), Sense::Minimize) => b.min(v),
                });
            }
        }
        Ok(best)
    }

    /// The model in LP text format. Deterministic; long rows wrap with a
    /// leading space.
    pub fn to_lp(&self) -> String {
        let mut out = String::new();
        out.push_str(match self.sense {
            Sense::Maximize => "Maximize\n",
            Sense::Minimize => "Minimize\n",
        });
        push_wrapped(&mut out, "obj:", &self.expr(&self.objective), "");
        out.push_str("Subject To\n");
        for c in &self.constraints {
            let rel = match c.relation {
                Relation::Le => "<=",
                Relation::Ge => ">=",
            };
            push_wrapped(
                &mut out,
                &format!("{}:", c.name),
                &self.expr(&c.terms),
                &format!("{rel} {}", c.rhs),
            );
        }
        out.push_str("Bounds\n");
        for v in &self.variables {
            let _ = writeln!(out, " 0 <= {v} <= 1");
        }
        out.push_str("Binary\n");
        let names: Vec<String> = self.variables.clone();
        push_wrapped(&mut out, "", &names, "");
        out.push_str("End\n");
        out
    }

    fn expr(&self, terms: &[(i64, usize)]) -> Vec<String> {
        terms
            .iter()
            .enumerate()
            .map(|(k, &(c, v))| {
                let name = &self.variables[v];
                let sign = if c < 0 { "-" } else { "+" };
                let mag = c.abs();
                let body = if mag == 1 {
                    name.clone()
                } else {
                    format!("{mag} {name}")
                };
                if k == 0 && c >= 0 {
                    body
                } else {
                    format!("{sign} {body}")
                }
            })
            .collect()
    }
}

const LP_WIDTH: usize = 72;

fn push_wrapped(out: &mut String, label: &str, tokens: &[String], tail: &str) {
    let mut line = String::from(" ");
    line.push_str(label);
    let all = tokens
        .iter()
        .map(String::as_str)
        .chain((!tail.is_empty()).then_some(tail));
    for tok in all {
        if line.len() + 1 + tok.len() > LP_WIDTH && line.trim().len() > label.len() {
            out.push_str(line.trim_end());
            out.push('\n');
            line = String::from("   ");
        } else if !line.ends_with(' ') {
            line.push(' ');
        }
        line.push_str(tok);
    }
    out.push_str(line.trim_end());
    out.push('\n');
}

/// Maximize the number of houses subject to no blocked house.
pub fn export_efficient(m: usize, n: usize) -> Result<IpModel> {
    let mut model = IpModel::new(check_size(m, n)?, Sense::Maximize);
    model.add_forbidden_pattern();
    Ok(model)
}

/// The three lots whose joint occupancy makes `which` hold at `at`, or
/// `None` when the proposition cannot hold there on an open border.
fn proposition_terms(dims: Dims, at: Coord, which: Proposition) -> Option<[Coord; 3]> {
    let (m, n) = (dims.rows as isize, dims.cols as isize);
    let (i, j) = (at.i as isize, at.j as isize);
    let cells: [(isize, isize); 3] = match which {
        Proposition::East => [(i, j + 1), (i, j + 2), (i + 1, j + 1)],
        Proposition::West => [(i, j - 1), (i, j - 2), (i + 1, j - 1)],
        Proposition::North => [(i - 1, j - 1), (i - 1, j), (i - 1, j + 1)],
        Proposition::Center => [(i, j - 1), (i, j + 1), (i + 1, j)],
    };
    // Off-grid lots are open, so any off-grid term makes the proposition false.
    cells
        .iter()
        .all(|&(a, b)| a >= 1 && a <= m && b >= 1 && b <= n)
        .then(|| cells.map(|(a, b)| Coord::new(a as usize, b as usize)))
}

/// Minimize the number of houses over maximal configurations: no blocked
/// house, and every empty lot has a reason to stay empty.
pub fn export_inefficient(m: usize, n: usize) -> Result<IpModel> {
    let dims = check_size(m, n)?;
    let mut model = IpModel::new(dims, Sense::Minimize);
    model.add_forbidden_pattern();
    for i in 1..=m {
        for j in 1..=n {
            let x = model.lot(i, j);
            let mut cover = vec![(1, x)];
            for which in Proposition::ALL {
                let Some(terms) = proposition_terms(dims, Coord::new(i, j), which) else {
                    continue;
                };
                let aux = model.add_var(format!("p{}_{i}_{j}", which.tag()));
                for (k, t) in terms.iter().enumerate() {
                    let lot = model.lot(t.i, t.j);
                    model.constraints.push(Constraint {
                        name: format!("p{}_{i}_{j}_{}", which.tag(), k + 1),
                        terms: vec![(1, aux), (-1, lot)],
                        relation: Relation::Le,
                        rhs: 0,
                    });
                }
                cover.push((1, aux));
            }
            model.constraints.push(Constraint {
                name: format!("cover_{i}_{j}"),
                terms: cover,
                relation: Relation::Ge,
                rhs: 1,
            });
        }
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn efficient_constraint_counts() {
        assert_eq!(export_efficient(2, 3).unwrap().constraints.len(), 1);
        assert_eq!(export_efficient(2, 2).unwrap().constraints.len(), 0);
        assert_eq!(export_efficient(4, 5).unwrap().constraints.len(), 9);
        assert!(export_efficient(1, 5).is_err());
    }

    #[test]
    fn small_optima() {
        assert_eq!(
            export_efficient(2, 2).unwrap().optimum_by_enumeration().unwrap(),
            Some(4)
        );
        assert_eq!(
            export_inefficient(3, 4).unwrap().optimum_by_enumeration().unwrap(),
            Some(8)
        );
        assert_eq!(
            export_inefficient(4, 2).unwrap().optimum_by_enumeration().unwrap(),
            Some(8)
        );
    }

    #[test]
    fn lp_sections_in_order() {
        let lp = export_inefficient(2, 3).unwrap().to_lp();
        let heads: Vec<&str> = lp.lines().filter(|l| !l.starts_with(' ')).collect();
        assert_eq!(heads, ["Minimize", "Subject To", "Bounds", "Binary", "End"]);
        assert!(lp.lines().all(|l| l.len() <= LP_WIDTH));
        assert!(lp.contains(" pC_1_2_1: pC_1_2 - x_1_1 <= 0\n"));
    }
}
