//! Definition-level reference checks shared by the integration tests. Every
//! function here looks at single cells and never touches the row kernel.

#![allow(dead_code)]

use std::path::PathBuf;

use settle::{BoundaryMode, Configuration, Coord, Dims};

pub struct Naive {
    pub m: usize,
    pub n: usize,
    pub fill: bool,
    pub cells: Vec<Vec<bool>>,
}

impl Naive {
    pub fn from_config(c: &Configuration) -> Self {
        let (m, n) = (c.rows(), c.cols());
        let cells = (1..=m)
            .map(|i| (1..=n).map(|j| c.house(Coord::new(i, j)).unwrap()).collect())
            .collect();
        Self {
            m,
            n,
            fill: c.boundary() == BoundaryMode::Bricked,
            cells,
        }
    }

    pub fn from_bits(m: usize, n: usize, boundary: BoundaryMode, key: u64) -> Self {
        let cells = (0..m)
            .map(|i| (0..n).map(|j| key >> (i * n + j) & 1 == 1).collect())
            .collect();
        Self {
            m,
            n,
            fill: boundary == BoundaryMode::Bricked,
            cells,
        }
    }

    pub fn to_config(&self) -> Configuration {
        let boundary = if self.fill {
            BoundaryMode::Bricked
        } else {
            BoundaryMode::Free
        };
        let dims = Dims::new(self.m, self.n, boundary).unwrap();
        Configuration::from_fn(dims, |at| self.cells[at.i - 1][at.j - 1])
    }

    /// 1-based lookup; north of the grid is open, the other sides take the fill.
    fn lot(&self, i: isize, j: isize) -> bool {
        if i < 1 {
            false
        } else if i > self.m as isize || j < 1 || j > self.n as isize {
            self.fill
        } else {
            self.cells[i as usize - 1][j as usize - 1]
        }
    }

    pub fn blocked(&self, i: usize, j: usize) -> bool {
        let (i, j) = (i as isize, j as isize);
        self.lot(i, j) && self.lot(i, j - 1) && self.lot(i, j + 1) && self.lot(i + 1, j)
    }

    pub fn permissible(&self) -> bool {
        (1..=self.m).all(|i| (1..=self.n).all(|j| !self.blocked(i, j)))
    }

    /// Adding a house at the empty lot keeps every house lit.
    pub fn addable(&mut self, i: usize, j: usize) -> bool {
        assert!(!self.cells[i - 1][j - 1]);
        self.cells[i - 1][j - 1] = true;
        let ok = self.permissible();
        self.cells[i - 1][j - 1] = false;
        ok
    }

    pub fn maximal(&mut self) -> bool {
        if !self.permissible() {
            return false;
        }
        for i in 1..=self.m {
            for j in 1..=self.n {
                if !self.cells[i - 1][j - 1] && self.addable(i, j) {
                    return false;
                }
            }
        }
        true
    }

    pub fn occupancy(&self) -> u64 {
        self.cells.iter().flatten().filter(|&&h| h).count() as u64
    }

    pub fn mirrored(&self) -> Self {
        Self {
            m: self.m,
            n: self.n,
            fill: self.fill,
            cells: self
                .cells
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }
}

pub fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden").join(name)
}

pub fn golden_grid(name: &str) -> Configuration {
    settle::io::parse_grid(&std::fs::read_to_string(golden(name)).unwrap()).unwrap()
}

pub fn golden_json(name: &str) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(golden(name)).unwrap()).unwrap()
}

/// The maximum-occupancy table as `values[m - 2][n - 2]`.
pub fn max_table() -> Vec<Vec<u64>> {
    golden_json("max_table.json")["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect())
        .collect()
}

/// Which patterns are marked as attaining each maximum-table entry.
pub fn max_table_marks() -> Vec<Vec<Option<String>>> {
    golden_json("max_table.json")["attained_by"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r.as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_str().map(str::to_string))
                .collect()
        })
        .collect()
}
