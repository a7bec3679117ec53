//! Truncated formal power series in `x, y, t, z` with exact rational
//! coefficients.
//!
//! A series is only meaningful inside its [`TruncationBox`]: the coefficient
//! of `x^a y^b t^c z^d` is exact whenever every exponent is within its bound.
//! Because the box is a down-set, ring operations and the `exp`/`ln`/`sqrt`
//! recurrences never read outside it. Division by a monomial shifts the valid
//! region down, which is what the guard orders pay for.

mod builders;
mod dump;
mod egf;
mod ops;

pub use builders::{
    build, gf_B_des, gf_B_pk, gf_B_pk_des, gf_O, gf_P_depth, gf_P_pk_des, gf_ballot_count, gf_eulerian, gf_uvw,
    odd_exponent, spiro_ode_factor, BUILDERS,
};
pub use dump::parse_dump;
pub use egf::{coeff, egf_count, egf_from_table, egf_to_table, exp_weight};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::par::Exec;

pub type Q = BigRational;

/// Exponent vector `(e_x, e_y, e_t, e_z)`.
pub type Exp = [u32; 4];
type Inner = [u32; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    T,
    Z,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::T, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "t", "z"][self.index()]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-variable degree bounds plus guard orders for valuation-shifting steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruncationBox {
    pub bounds: [u32; 4],
    pub guard: u32,
}

impl Default for TruncationBox {
    fn default() -> Self {
        TruncationBox { bounds: [10; 4], guard: 4 }
    }
}

impl TruncationBox {
    pub fn new(nx: u32, ny: u32, nt: u32, nz: u32) -> Self {
        TruncationBox { bounds: [nx, ny, nt, nz], guard: 0 }
    }

    pub fn uniform(n: u32) -> Self {
        TruncationBox::new(n, n, n, n)
    }

    pub fn with_guard(mut self, guard: u32) -> Self {
        self.guard = guard;
        self
    }

    pub fn with_bound(mut self, v: Var, bound: u32) -> Self {
        self.bounds[v.index()] = bound;
        self
    }

    pub fn bound(&self, v: Var) -> u32 {
        self.bounds[v.index()]
    }

    pub fn contains(&self, e: &Exp) -> bool {
        e.iter().zip(&self.bounds).all(|(a, b)| a <= b)
    }

    pub fn intersect(&self, other: &TruncationBox) -> TruncationBox {
        let mut bounds = self.bounds;
        for (b, o) in bounds.iter_mut().zip(&other.bounds) {
            *b = (*b).min(*o);
        }
        TruncationBox { bounds, guard: self.guard.min(other.guard) }
    }

    pub fn is_within(&self, other: &TruncationBox) -> bool {
        self.bounds.iter().zip(&other.bounds).all(|(a, b)| a <= b)
    }

    /// Every exponent in the box, in lexicographic order.
    pub fn exponents(&self) -> impl Iterator<Item = Exp> + '_ {
        let [bx, by, bt, bz] = self.bounds;
        (0..=bx).flat_map(move |x| {
            (0..=by).flat_map(move |y| (0..=bt).flat_map(move |t| (0..=bz).map(move |z| [x, y, t, z])))
        })
    }
}

fn split(e: Exp) -> (usize, Inner) {
    (e[0] as usize, [e[1], e[2], e[3]])
}

fn join(x: usize, i: Inner) -> Exp {
    [x as u32, i[0], i[1], i[2]]
}

fn le(a: &Exp, b: &Exp) -> bool {
    a.iter().zip(b).all(|(p, q)| p <= q)
}

fn minus(a: &Exp, b: &Exp) -> Exp {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

fn degree(e: &Exp) -> u32 {
    e.iter().sum()
}

pub fn q_int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A truncated series, stored densely in `x` (one map per `x`-degree) and
/// sparsely in `(y, t, z)`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    bx: TruncationBox,
    slices: Vec<BTreeMap<Inner, Q>>,
}

impl Series {
    pub fn zero(bx: TruncationBox) -> Self {
        Series { bx, slices: vec![BTreeMap::new(); bx.bounds[0] as usize + 1] }
    }

    pub fn constant(c: Q, bx: TruncationBox) -> Self {
        Series::monomial([0; 4], c, bx)
    }

    pub fn one(bx: TruncationBox) -> Self {
        Series::constant(Q::one(), bx)
    }

    pub fn int(c: i64, bx: TruncationBox) -> Self {
        Series::constant(q_int(c), bx)
    }

    /// `c · x^e`, or zero if `e` lies outside the box.
    pub fn monomial(e: Exp, c: Q, bx: TruncationBox) -> Self {
        let mut s = Series::zero(bx);
        s.set(e, c);
        s
    }

    pub fn var(v: Var, bx: TruncationBox) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Series::monomial(e, Q::one(), bx)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, Q)>>(terms: I, bx: TruncationBox) -> Self {
        let mut s = Series::zero(bx);
        for (e, c) in terms {
            s.add_at(e, c);
        }
        s
    }

    pub fn truncation_box(&self) -> TruncationBox {
        self.bx
    }

    /// Coefficient at `e` without a box check (zero outside).
    pub fn get(&self, e: Exp) -> Q {
        let (x, i) = split(e);
        self.slices.get(x).and_then(|m| m.get(&i)).cloned().unwrap_or_else(Q::zero)
    }

    fn get_ref(&self, e: &Exp) -> Option<&Q> {
        let (x, i) = split(*e);
        self.slices.get(x).and_then(|m| m.get(&i))
    }

    /// Overwrite the coefficient at `e`; ignored outside the box.
    pub fn set(&mut self, e: Exp, c: Q) {
        if !self.bx.contains(&e) {
            return;
        }
        let (x, i) = split(e);
        if c.is_zero() {
            self.slices[x].remove(&i);
        } else {
            self.slices[x].insert(i, c);
        }
    }

    fn add_at(&mut self, e: Exp, c: Q) {
        if c.is_zero() || !self.bx.contains(&e) {
            return;
        }
        let (x, i) = split(e);
        let slot = self.slices[x].entry(i).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.slices[x].remove(&i);
        }
    }

    /// Nonzero terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exp, &Q)> {
        self.slices.iter().enumerate().flat_map(|(x, m)| m.iter().map(move |(i, c)| (join(x, *i), c)))
    }

    fn support(&self) -> Vec<(Exp, Q)> {
        self.terms().map(|(e, c)| (e, c.clone())).collect()
    }

    pub fn nnz(&self) -> usize {
        self.slices.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.slices.iter().all(BTreeMap::is_empty)
    }

    pub fn constant_term(&self) -> Q {
        self.get([0; 4])
    }

    /// Restrict to a smaller box (the intersection with `bx`).
    pub fn truncate(&self, bx: &TruncationBox) -> Series {
        let nb = self.bx.intersect(bx);
        Series::from_terms(self.terms().map(|(e, c)| (e, c.clone())), nb)
    }

    /// Re-box without changing stored terms. Only sound when the caller knows
    /// the coefficients are exact (or zero) throughout `bx`.
    pub(crate) fn rebox(&self, bx: TruncationBox) -> Series {
        Series::from_terms(self.terms().map(|(e, c)| (e, c.clone())), bx)
    }

    /// Largest exponent of `v` among the stored terms.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms().map(|(e, _)| e[v.index()]).max()
    }

    pub fn scale(&self, c: &Q) -> Series {
        if c.is_zero() {
            return Series::zero(self.bx);
        }
        Series::from_terms(self.terms().map(|(e, a)| (e, a * c)), self.bx)
    }

    pub fn pow(&self, k: u32) -> Series {
        let mut acc = Series::one(self.bx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `Σ c_i s^i` by Horner's rule.
    pub fn compose_poly(coeffs: &[Q], s: &Series) -> Series {
        let mut acc = Series::zero(s.bx);
        for c in coeffs.iter().rev() {
            acc = &(&acc * s) + &Series::constant(c.clone(), s.bx);
        }
        acc
    }

    /// First exponent in the common box where the two series differ.
    pub fn first_difference(&self, other: &Series) -> Option<(Exp, Q, Q)> {
        let bx = self.bx.intersect(&other.bx);
        let mut keys: Vec<Exp> =
            self.terms().map(|(e, _)| e).chain(other.terms().map(|(e, _)| e)).filter(|e| bx.contains(e)).collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().find_map(|e| {
            let (a, b) = (self.get(e), other.get(e));
            (a != b).then_some((e, a, b))
        })
    }

    pub fn agrees_with(&self, other: &Series) -> bool {
        self.first_difference(other).is_none()
    }

    /// Fill the box in lexicographic order; `step(e, partial)` returns the
    /// coefficient at `e` given every coefficient already computed.
    fn lex_recurrence<F>(bx: TruncationBox, mut step: F) -> Result<Series>
    where
        F: FnMut(Exp, &Series) -> Result<Q>,
    {
        let mut out = Series::zero(bx);
        for e in bx.exponents() {
            let c = step(e, &out)?;
            out.set(e, c);
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Series> {
        let b0 = self.constant_term();
        if b0.is_zero() {
            return Err(Error::InexactDivision("inverse of a series with zero constant term".into()));
        }
        let inv0 = b0.recip();
        let support: Vec<(Exp, Q)> = self.support().into_iter().filter(|(e, _)| *e != [0; 4]).collect();
        Series::lex_recurrence(self.bx, |e, q| {
            if e == [0; 4] {
                return Ok(inv0.clone());
            }
            let mut acc = Q::zero();
            for (ep, c) in &support {
                if ep[0] > e[0] {
                    break;
                }
                if le(ep, &e) {
                    if let Some(v) = q.get_ref(&minus(&e, ep)) {
                        acc += c * v;
                    }
                }
            }
            Ok(-acc * &inv0)
        })
    }
}

fn binary(a: &Series, b: &Series, sign: i64) -> Series {
    let bx = a.bx.intersect(&b.bx);
    let mut out = a.truncate(&bx);
    for (e, c) in b.terms() {
        if bx.contains(&e) {
            out.add_at(e, if sign > 0 { c.clone() } else { -c.clone() });
        }
    }
    out
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        binary(self, rhs, 1)
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        binary(self, rhs, -1)
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        self.scale(&-Q::one())
    }
}

impl Mul for &Series {
    type Output = Series;

    /// Product truncated to the common box; output `x`-slices are computed
    /// independently and in parallel when the `parallel` feature is on.
    fn mul(self, rhs: &Series) -> Series {
        let bx = self.bx.intersect(&rhs.bx);
        let nx = bx.bounds[0] as usize;
        let slices = Exec::default().map_collect((0..=nx).collect(), |ex| {
            let mut acc: BTreeMap<Inner, Q> = BTreeMap::new();
            for xa in 0..=ex {
                let (Some(sa), Some(sb)) = (self.slices.get(xa), rhs.slices.get(ex - xa)) else {
                    continue;
                };
                for (ia, ca) in sa {
                    for (ib, cb) in sb {
                        let inner = [ia[0] + ib[0], ia[1] + ib[1], ia[2] + ib[2]];
                        if inner[0] > bx.bounds[1] || inner[1] > bx.bounds[2] || inner[2] > bx.bounds[3] {
                            continue;
                        }
                        *acc.entry(inner).or_insert_with(Q::zero) += ca * cb;
                    }
                }
            }
            acc.retain(|_, c| !c.is_zero());
            acc
        });
        Series { bx, slices }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (v, k) in Var::ALL.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
