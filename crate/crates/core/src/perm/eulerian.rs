//! Eulerian numbers `E(n, d)` with the zero conventions used throughout the
//! summations: `E(0,0) = 1` and `E(n,d) = 0` if `n < 0`, `d < 0`, `d = n >= 1`
//! or `d > n`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Debug, Clone)]
pub struct EulerianTable {
    rows: Vec<Vec<BigUint>>,
}

impl EulerianTable {
    /// Rows `0..=n_max` via `E(n,d) = (d+1)E(n-1,d) + (n-d)E(n-1,d-1)`.
    pub fn new(n_max: usize) -> Self {
        let mut rows = vec![vec![BigUint::one()]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let get = |d: i64| -> BigUint {
                if d < 0 || d as usize >= prev.len() {
                    BigUint::zero()
                } else {
                    prev[d as usize].clone()
                }
            };
            let row: Vec<BigUint> = (0..n as i64)
                .map(|d| get(d) * BigUint::from((d + 1) as u64) + get(d - 1) * BigUint::from((n as i64 - d) as u64))
                .collect();
            rows.push(row);
        }
        EulerianTable { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: i64, d: i64) -> BigUint {
        if n < 0 || d < 0 {
            return BigUint::zero();
        }
        let (n, d) = (n as usize, d as usize);
        assert!(n <= self.n_max(), "Eulerian table too small for n = {n}");
        self.rows[n].get(d).cloned().unwrap_or_default()
    }

    /// Coefficients of `A_n(t)`, lowest degree first.
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }
}

pub fn eulerian(n: i64, d: i64) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    EulerianTable::new(n as usize).get(n, d)
}
