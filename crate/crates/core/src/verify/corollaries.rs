//! The two closing corollaries on descents of ballot permutations.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Counterexample, VerificationReport};
use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::perm::{stat_table, EulerianTable, GroundSet, Statistic};

type Q = BigRational;

fn q(n: BigUint) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `b_n^{des}(d)` as the finite sum obtained by expanding
/// `exp(x) · exp(2 Σ_{k>=1} Σ_{d<=k-1} E(2k,d) t^{d+1} x^{2k+1}/(2k+1)!)`:
///
/// `n! Σ_m 1/m! Σ_i 2^i/i! Σ Π_j E(2k_j, d_j)/(2k_j+1)!`
///
/// over ordered `i`-tuples with `k_j >= 1`, `0 <= d_j <= k_j - 1`,
/// `Σ (2k_j+1) = n - m` and `Σ d_j = d - i`.
pub fn bnd_multinomial(n: usize, d: usize) -> Result<BigUint> {
    if n == 0 {
        return Ok(BigUint::from(u32::from(d == 0)));
    }
    let euler = EulerianTable::new(n);
    // blocks[(len, dj)] = E(2k, dj) / (2k+1)! with len = 2k + 1.
    let mut blocks: Vec<(usize, usize, Q)> = Vec::new();
    for k in 1..=(n - 1) / 2 {
        for dj in 0..k {
            let e = euler.get(2 * k as i64, dj as i64);
            blocks.push((2 * k + 1, dj, q(e) / q(factorial(2 * k + 1))));
        }
    }
    // layer[(len, dsum)] = Σ over ordered i-tuples of the block products.
    let mut layer: BTreeMap<(usize, usize), Q> = BTreeMap::from([((0, 0), Q::one())]);
    let mut total = Q::zero();
    let mut i = 0usize;
    while !layer.is_empty() {
        if d >= i {
            let weight = Q::from_integer(BigInt::from(2).pow(i as u32)) / q(factorial(i));
            for ((len, dsum), v) in &layer {
                if *dsum == d - i && *len <= n {
                    let m = n - len;
                    total += &weight * v / q(factorial(m));
                }
            }
        }
        let mut next: BTreeMap<(usize, usize), Q> = BTreeMap::new();
        for ((len, dsum), v) in &layer {
            for (bl, bd, bv) in &blocks {
                if len + bl <= n && dsum + bd + i < d {
                    *next.entry((len + bl, dsum + bd)).or_insert_with(Q::zero) += v * bv;
                }
            }
        }
        layer = next;
        i += 1;
    }
    let count = total * q(factorial(n));
    if !count.is_integer() {
        return Err(Error::NonIntegral(format!("b_{n}({d}) evaluated to {count}")));
    }
    Ok(count.to_integer().to_biguint().expect("a sum of nonnegative terms"))
}

/// `(m + 1) · b_{2m+1}^{des}(m) = E(2m+1, m)` for every `2m + 1 <= n`, with the
/// left side taken both from enumeration and from [`bnd_multinomial`].
pub fn eulerian_catalan_check(n: usize) -> VerificationReport {
    VerificationReport::run("eulerian-catalan", Some(n), || {
        let table = stat_table(n, GroundSet::Ballot, &[Statistic::Des], Exec::default())?;
        let euler = EulerianTable::new(n);
        let mut m = 0;
        while 2 * m < n {
            let len = 2 * m + 1;
            let rhs = euler.get(len as i64, m as i64);
            let factor = BigUint::from(m + 1);
            let enumerated = table.get(len as i64, &[m as i64]) * &factor;
            if enumerated != rhs {
                return Ok(Some(Counterexample::new([("m", m as i64)], enumerated, rhs).with_detail("enumeration")));
            }
            let summed = bnd_multinomial(len, m)? * &factor;
            if summed != rhs {
                return Ok(Some(Counterexample::new([("m", m as i64)], summed, rhs).with_detail("multinomial sum")));
            }
            m += 1;
        }
        Ok(None)
    })
}

/// `bnd_multinomial(m, d) = b_m^{des}(d)` for all `1 <= m <= n`, `0 <= d <= (m-1)/2`.
pub fn check_bnd_multinomial(n: usize) -> Result<Option<Counterexample>> {
    let table = stat_table(n, GroundSet::Ballot, &[Statistic::Des], Exec::default())?;
    for m in 1..=n {
        for d in 0..=(m - 1) / 2 {
            let lhs = bnd_multinomial(m, d)?;
            let rhs = table.get(m as i64, &[d as i64]);
            if lhs != rhs {
                return Ok(Some(Counterexample::new([("n", m as i64), ("d", d as i64)], lhs, rhs)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_values() {
        assert_eq!(bnd_multinomial(1, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(bnd_multinomial(5, 1).unwrap(), BigUint::from(22u32));
        assert_eq!(bnd_multinomial(7, 3).unwrap(), BigUint::from(604u32));
        assert_eq!(bnd_multinomial(3, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(bnd_multinomial(0, 0).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn row_sums_are_ballot_counts() {
        for n in 1..=12 {
            let s: BigUint = (0..=(n - 1) / 2).map(|d| bnd_multinomial(n, d).unwrap()).sum();
            assert_eq!(s, crate::combinat::ballot_count(n), "n = {n}");
        }
    }

    #[test]
    fn matches_enumeration_small() {
        assert_eq!(check_bnd_multinomial(7).unwrap(), None);
        assert!(eulerian_catalan_check(7).passed());
    }

    #[test]
    fn eulerian_catalan_beyond_enumeration() {
        let euler = EulerianTable::new(21);
        for m in 0..=10usize {
            let lhs = bnd_multinomial(2 * m + 1, m).unwrap() * BigUint::from(m + 1);
            assert_eq!(lhs, euler.get(2 * m as i64 + 1, m as i64));
        }
    }
}
