//! Passing between exponential generating functions and count tables.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::{Exp, Series, TruncationBox, Var, Q};
use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::perm::StatTable;

/// Raw coefficient of the monomial `e`, which must lie inside the box.
pub fn coeff(a: &Series, e: Exp) -> Result<Q> {
    if !a.truncation_box().contains(&e) {
        return Err(Error::OutsideBox(e));
    }
    Ok(a.get(e))
}

/// `e_x! · [e] a`, which must be an integer.
pub fn egf_count(a: &Series, e: Exp) -> Result<BigInt> {
    let scaled = coeff(a, e)? * Q::from_integer(BigInt::from(factorial(e[0] as usize)));
    if !scaled.is_integer() {
        return Err(Error::NonIntegral(format!("{}! times the coefficient at {e:?} is {scaled}", e[0])));
    }
    Ok(scaled.to_integer())
}

/// `1 / n!`.
pub fn exp_weight(n: usize) -> Q {
    Q::new(BigInt::from(1), BigInt::from(factorial(n)))
}

/// `Σ count · x^n/n! · Π vars[i]^value[i]` over the rows of `table`, where the
/// `i`-th statistic column is carried by `vars[i]`.
pub fn egf_from_table(table: &StatTable, vars: &[Var], bx: TruncationBox) -> Result<Series> {
    if vars.len() != table.stat_names().len() || vars.contains(&Var::X) {
        return Err(Error::Domain(format!(
            "need one non-x variable per statistic column ({:?}), got {vars:?}",
            table.stat_names()
        )));
    }
    let mut s = Series::zero(bx);
    for (n, values, count) in table.rows() {
        let mut e = [n as u32, 0, 0, 0];
        for (v, k) in vars.iter().zip(values) {
            if *k < 0 {
                return Err(Error::Domain(format!("negative statistic value {k} cannot be an exponent")));
            }
            e[v.index()] += *k as u32;
        }
        s.add_at(e, Q::from_integer(BigInt::from(count.clone())) * exp_weight(n));
    }
    Ok(s)
}

/// Inverse of [`egf_from_table`]: read every in-box coefficient back as an
/// integer count. Variables not listed must not occur.
pub fn egf_to_table(a: &Series, vars: &[Var], stat_names: Vec<String>) -> Result<StatTable> {
    let mut t = StatTable::new(stat_names, a.truncation_box().bound(Var::X) as usize);
    for (e, _) in a.terms() {
        for v in [Var::Y, Var::T, Var::Z] {
            if e[v.index()] != 0 && !vars.contains(&v) {
                return Err(Error::Domain(format!("variable {v} occurs at {e:?} but is not mapped to a statistic")));
            }
        }
        let count = egf_count(a, e)?;
        if count.is_negative() {
            return Err(Error::NonIntegral(format!("negative count {count} at {e:?}")));
        }
        let values = vars.iter().map(|v| i64::from(e[v.index()])).collect();
        let count: BigUint = count.to_biguint().unwrap_or_else(BigUint::zero);
        t.add(e[0] as usize, values, count);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::par::Exec;
    use crate::perm::{stat_table, GroundSet, Statistic};

    #[test]
    fn table_round_trip() {
        let t = stat_table(5, GroundSet::Ballot, &[Statistic::Pk, Statistic::Des], Exec::Sequential).unwrap();
        let s = egf_from_table(&t, &[Var::Y, Var::T], TruncationBox::uniform(5)).unwrap();
        let back = egf_to_table(&s, &[Var::Y, Var::T], t.stat_names().to_vec()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn outside_box_and_non_integral() {
        let bx = TruncationBox::uniform(2);
        let s = Series::monomial([1, 0, 0, 0], Q::new(1.into(), 3.into()), bx);
        assert!(matches!(coeff(&s, [3, 0, 0, 0]), Err(Error::OutsideBox(_))));
        assert!(matches!(egf_count(&s, [1, 0, 0, 0]), Err(Error::NonIntegral(_))));
        assert_eq!(egf_count(&Series::one(bx), [0; 4]).unwrap(), BigInt::from(1));
    }
}
