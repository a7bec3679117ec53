//! Exact integer helpers: factorials, double factorials, a Pascal table.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `n!!` with the convention `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> BigUint {
    let mut acc = BigUint::one();
    let mut k = n;
    while k > 1 {
        acc *= k as u64;
        k -= 2;
    }
    acc
}

/// Closed-form ballot count: `[(n-1)!!]^2` for even `n`, `n!!(n-2)!!` for odd `n`.
pub fn ballot_count(n: usize) -> BigUint {
    let n = n as i64;
    if n % 2 == 0 {
        let f = double_factorial(n - 1);
        &f * &f
    } else {
        double_factorial(n) * double_factorial(n - 2)
    }
}

/// Binomial coefficients from an exact Pascal triangle.
#[derive(Debug, Clone)]
pub struct Binomials {
    rows: Vec<Vec<BigUint>>,
}

impl Binomials {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut row = vec![BigUint::one(); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        Binomials { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`, zero outside `0 <= k <= n`.
    pub fn get(&self, n: i64, k: i64) -> BigUint {
        if n < 0 || k < 0 || k > n {
            return BigUint::zero();
        }
        let (n, k) = (n as usize, k as usize);
        assert!(n <= self.n_max(), "binomial table too small for n = {n}");
        self.rows[n][k].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1), BigUint::one());
        assert_eq!(double_factorial(0), BigUint::one());
        assert_eq!(double_factorial(5), BigUint::from(15u32));
        assert_eq!(double_factorial(8), BigUint::from(384u32));
    }

    #[test]
    fn ballot_counts_small() {
        let expected = [1u32, 1, 1, 3, 9, 45, 225, 1575, 11025, 99225];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(ballot_count(n), BigUint::from(*e), "n = {n}");
        }
    }

    #[test]
    fn pascal() {
        let b = Binomials::new(10);
        assert_eq!(b.get(10, 3), BigUint::from(120u32));
        assert_eq!(b.get(4, 5), BigUint::zero());
        assert_eq!(b.get(4, -1), BigUint::zero());
        assert_eq!(b.get(0, 0), BigUint::one());
    }
}
