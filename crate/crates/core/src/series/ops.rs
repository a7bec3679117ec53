//! Division, radicals, exp/log, calculus in `x`, and the monomial transforms.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{degree, le, minus, q_int, Exp, Series, TruncationBox, Var, Q};
use crate::error::{Error, Result};

fn exact_sqrt(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.sqrt();
    (&r * &r == *v).then_some(r)
}

fn rational_sqrt(q: &Q) -> Option<Q> {
    Some(Q::new(exact_sqrt(q.numer())?, exact_sqrt(q.denom())?))
}

impl Series {
    /// Componentwise minimum exponent over the support.
    pub fn monomial_valuation(&self) -> Option<Exp> {
        let mut it = self.terms().map(|(e, _)| e);
        let first = it.next()?;
        Some(it.fold(first, |acc, e| [acc[0].min(e[0]), acc[1].min(e[1]), acc[2].min(e[2]), acc[3].min(e[3])]))
    }

    /// Divide by the monomial `x^m`; every term must be divisible. The valid
    /// box shrinks by `m`.
    pub fn div_monomial(&self, m: Exp) -> Result<Series> {
        let mut bounds = self.bx.bounds;
        for (b, k) in bounds.iter_mut().zip(&m) {
            *b = b.checked_sub(*k).ok_or_else(|| {
                Error::BoxTooSmall(format!("dividing by exponent {m:?} empties the box {:?}", self.bx.bounds))
            })?;
        }
        let bx = TruncationBox { bounds, guard: self.bx.guard };
        let mut out = Series::zero(bx);
        for (e, c) in self.terms() {
            if !le(&m, &e) {
                return Err(Error::InexactDivision(format!("term at {e:?} is not divisible by monomial {m:?}")));
            }
            out.set(minus(&e, &m), c.clone());
        }
        Ok(out)
    }

    /// `a / b` where `b = m · (unit)` for a monomial `m`. The quotient is exact
    /// in the box of `a` shifted down by `m`.
    pub fn div_exact(&self, b: &Series) -> Result<Series> {
        let m = b.monomial_valuation().ok_or_else(|| Error::InexactDivision("division by zero".into()))?;
        let unit = b.div_monomial(m)?;
        if unit.constant_term().is_zero() {
            return Err(Error::InexactDivision(format!(
                "divisor is not a monomial times a unit (valuation {m:?} is not attained)"
            )));
        }
        let num = self.div_monomial(m)?;
        Ok(&num * &unit.inverse()?)
    }

    /// Principal square root: the constant term of the result is positive.
    pub fn sqrt_series(&self) -> Result<Series> {
        let a0 = self.constant_term();
        let s0 = rational_sqrt(&a0).ok_or_else(|| Error::NonSquareConstant(a0.to_string()))?;
        if s0.is_zero() {
            return Err(Error::NonSquareConstant("0 (square root needs a unit constant term)".into()));
        }
        let inv = (q_int(2) * &s0).recip();
        let mut known: Vec<(Exp, Q)> = Vec::new();
        Series::lex_recurrence(self.bx, |e, s| {
            if e == [0; 4] {
                return Ok(s0.clone());
            }
            let mut acc = self.get(e);
            for (ep, c) in &known {
                if ep[0] > e[0] {
                    break;
                }
                if *ep == e || !le(ep, &e) {
                    continue;
                }
                let rest = minus(&e, ep);
                if rest == [0; 4] {
                    continue;
                }
                if let Some(v) = s.get_ref(&rest) {
                    acc -= c * v;
                }
            }
            let v = acc * &inv;
            if !v.is_zero() {
                known.push((e, v.clone()));
            }
            Ok(v)
        })
    }

    /// `exp(a)` for `a` with zero constant term, via `θ f = f · θ a` where `θ`
    /// multiplies the coefficient at `e` by the total degree `|e|`.
    pub fn exp_series(&self) -> Result<Series> {
        let a0 = self.constant_term();
        if !a0.is_zero() {
            return Err(Error::NonzeroConstant(a0.to_string()));
        }
        let weighted: Vec<(Exp, Q)> = self.terms().map(|(e, c)| (e, c * q_int(degree(&e) as i64))).collect();
        Series::lex_recurrence(self.bx, |e, f| {
            if e == [0; 4] {
                return Ok(Q::one());
            }
            let mut acc = Q::zero();
            for (ep, c) in &weighted {
                if ep[0] > e[0] {
                    break;
                }
                if le(ep, &e) {
                    if let Some(v) = f.get_ref(&minus(&e, ep)) {
                        acc += c * v;
                    }
                }
            }
            Ok(acc / q_int(degree(&e) as i64))
        })
    }

    /// `ln(1 + a)` for `a` with zero constant term, via `θ g · (1 + a) = θ a`.
    pub fn ln1p_series(&self) -> Result<Series> {
        let a0 = self.constant_term();
        if !a0.is_zero() {
            return Err(Error::NonzeroConstant(a0.to_string()));
        }
        let support = self.support();
        Series::lex_recurrence(self.bx, |e, g| {
            if e == [0; 4] {
                return Ok(Q::zero());
            }
            let de = degree(&e) as i64;
            let mut acc = self.get(e) * q_int(de);
            for (ep, c) in &support {
                if ep[0] > e[0] {
                    break;
                }
                if *ep == e || !le(ep, &e) {
                    continue;
                }
                let rest = minus(&e, ep);
                if let Some(v) = g.get_ref(&rest) {
                    acc -= c * v * q_int(degree(&rest) as i64);
                }
            }
            Ok(acc / q_int(de))
        })
    }

    /// `∫_0^x a dx`. The top `x`-degree term is dropped if the box is full.
    pub fn integrate_x(&self) -> Series {
        Series::from_terms(
            self.terms().map(|(e, c)| ([e[0] + 1, e[1], e[2], e[3]], c / q_int(e[0] as i64 + 1))),
            self.bx,
        )
    }

    /// `∂a/∂x`; exact up to `x`-degree `N_x - 1`, so the box shrinks by one in `x`.
    pub fn derivative_x(&self) -> Series {
        let mut bx = self.bx;
        bx.bounds[0] = bx.bounds[0].saturating_sub(1);
        Series::from_terms(
            self.terms().filter(|(e, _)| e[0] > 0).map(|(e, c)| ([e[0] - 1, e[1], e[2], e[3]], c * q_int(e[0] as i64))),
            bx,
        )
    }

    /// Substitute `x -> x t`: `x^n y^k t^d ↦ x^n y^k t^{d+n}`. Fails if an
    /// image exponent would leave the `t` bound.
    pub fn twist_xt(&self) -> Result<Series> {
        let nt = self.bx.bound(Var::T);
        let mut out = Series::zero(self.bx);
        for (e, c) in self.terms() {
            let image = [e[0], e[1], e[2] + e[0], e[3]];
            if image[2] > nt {
                return Err(Error::BoxTooSmall(format!("twist of {e:?} overflows t-bound {nt}")));
            }
            out.set(image, c.clone());
        }
        Ok(out)
    }

    /// `x^n y^k t^d ↦ x^n y^k t^{n-d}`, i.e. the substitution
    /// `(x, t) -> (x t, 1/t)` on series whose `t`-degree never exceeds the
    /// `x`-degree. An involution on that domain.
    pub fn reflect_t(&self) -> Result<Series> {
        if self.bx.bound(Var::T) < self.bx.bound(Var::X) {
            return Err(Error::BoxTooSmall(format!(
                "reflect_t needs N_t >= N_x to be exact, got N_t = {}, N_x = {}",
                self.bx.bound(Var::T),
                self.bx.bound(Var::X)
            )));
        }
        let mut out = Series::zero(self.bx);
        for (e, c) in self.terms() {
            if e[2] > e[0] {
                return Err(Error::ReflectDomain(e));
            }
            out.set([e[0], e[1], e[0] - e[2], e[3]], c.clone());
        }
        Ok(out)
    }

    /// `(x, t) -> (x z t, 1/(z^2 t))`: `x^n y^k t^d ↦ x^n y^k z^{n-2d} t^{n-d}`,
    /// defined when `2d <= n` on every term.
    pub fn depth_twist(&self) -> Result<Series> {
        if self.bx.bound(Var::T) < self.bx.bound(Var::X) || self.bx.bound(Var::Z) < self.bx.bound(Var::X) {
            return Err(Error::BoxTooSmall("depth_twist needs N_t, N_z >= N_x".into()));
        }
        let mut out = Series::zero(self.bx);
        for (e, c) in self.terms() {
            if e[3] != 0 || 2 * e[2] > e[0] {
                return Err(Error::ReflectDomain(e));
            }
            out.set([e[0], e[1], e[0] - e[2], e[0] - 2 * e[2]], c.clone());
        }
        Ok(out)
    }

    /// Keep exactly the terms whose `v1`-exponent `a` and `v2`-exponent `b`
    /// satisfy `a <= (b - 1) / 2`, i.e. `2a + 1 <= b`.
    pub fn d_trunc(&self, v1: Var, v2: Var) -> Series {
        assert_ne!(v1, v2, "D operator needs two distinct variables");
        Series::from_terms(
            self.terms().filter(|(e, _)| 2 * e[v1.index()] < e[v2.index()]).map(|(e, c)| (e, c.clone())),
            self.bx,
        )
    }

    /// Terms dropped by [`Series::d_trunc`]; the two parts sum to `self`.
    pub fn d_complement(&self, v1: Var, v2: Var) -> Series {
        &(self.clone()) - &self.d_trunc(v1, v2)
    }

    /// Substitute `v -> c · v`.
    pub fn scale_var(&self, v: Var, c: &Q) -> Series {
        let mut powers = vec![Q::one()];
        for k in 1..=self.bx.bound(v) as usize {
            let next = &powers[k - 1] * c;
            powers.push(next);
        }
        Series::from_terms(self.terms().map(|(e, a)| (e, a * &powers[e[v.index()] as usize])), self.bx)
    }

    /// Substitute the constant `c` for `v`, summing over its exponents. Only
    /// exact when the series is a polynomial in `v` inside the box; the `v`
    /// bound of the result is 0.
    pub fn specialize(&self, v: Var, c: &Q) -> Series {
        let scaled = self.scale_var(v, c);
        let bx = self.bx.with_bound(v, 0);
        let mut out = Series::zero(bx);
        for (mut e, a) in scaled.terms() {
            e[v.index()] = 0;
            out.add_at(e, a.clone());
        }
        out
    }
}
