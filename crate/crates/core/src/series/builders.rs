//! Closed-form generating functions, each built inside a working box that is
//! enlarged by the guard order in the variables it divides by, then cut back.

#![allow(non_snake_case)]

use num_bigint::BigInt;

use super::{q_int, Exp, Series, TruncationBox, Var, Q};
use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::perm::EulerianTable;

/// Names accepted by [`build`].
pub const BUILDERS: [&str; 11] =
    ["E", "ballot_count", "u", "v", "w", "P_pk_des", "B_pk_des", "B_des", "B_pk", "P_depth", "O"];

const X: usize = 0;
const Y: usize = 1;
const T: usize = 2;
const Z: usize = 3;

fn vars(list: &[usize]) -> [bool; 4] {
    let mut m = [false; 4];
    for &i in list {
        m[i] = true;
    }
    m
}

fn work_box(req: &TruncationBox, used: [bool; 4], guarded: [bool; 4]) -> TruncationBox {
    let mut bounds = [0; 4];
    for (v, b) in Var::ALL.iter().zip(bounds.iter_mut()) {
        let i = v.index();
        if used[i] {
            *b = req.bounds[i] + if guarded[i] { req.guard } else { 0 };
        }
    }
    TruncationBox { bounds, guard: req.guard }
}

/// Cut `s` back to the requested box. Variables the series does not involve
/// get their requested bound back (the series is constant in them).
fn finish(s: &Series, req: &TruncationBox, used: [bool; 4]) -> Result<Series> {
    let have = s.truncation_box();
    let mut bounds = [0; 4];
    for v in Var::ALL {
        let i = v.index();
        if !used[i] {
            continue;
        }
        if have.bounds[i] < req.bounds[i] {
            return Err(Error::BoxTooSmall(format!(
                "only exact up to degree {} in {v}, requested {}; raise the guard",
                have.bounds[i], req.bounds[i]
            )));
        }
        bounds[i] = req.bounds[i];
    }
    let cut = s.truncate(&TruncationBox { bounds, guard: req.guard });
    Ok(cut.rebox(*req))
}

fn mono(e: Exp, c: i64, bx: TruncationBox) -> Series {
    Series::monomial(e, q_int(c), bx)
}

fn poly(terms: &[(Exp, i64)], bx: TruncationBox) -> Series {
    Series::from_terms(terms.iter().map(|(e, c)| (*e, q_int(*c))), bx)
}

fn egf_term(num: &BigInt, n: usize) -> Q {
    Q::new(num.clone(), BigInt::from(factorial(n)))
}

fn eulerian_exp(bx: &TruncationBox) -> Result<Series> {
    // e^{(1-t)x}
    poly(&[([1, 0, 0, 0], 1), ([1, 0, 1, 0], -1)], *bx).exp_series()
}

fn eulerian_in(bx: TruncationBox) -> Result<Series> {
    let g = eulerian_exp(&bx)?;
    let one = Series::one(bx);
    let den = &one - &(&Series::var(Var::T, bx) * &g);
    Ok(&(&g - &one) * &den.inverse()?)
}

/// `E(x,t) = (e^{(1-t)x} - 1) / (1 - t e^{(1-t)x})`, the exponential
/// generating function of the Eulerian polynomials `A_n(t)`, `n >= 1`.
pub fn gf_eulerian(bx: TruncationBox) -> Result<Series> {
    let used = vars(&[X, T]);
    let s = eulerian_in(work_box(&bx, used, [false; 4]))?;
    finish(&s, &bx, used)
}

/// `sqrt((1+x)/(1-x))`; `n! [x^n]` counts ballot permutations of length `n`.
pub fn gf_ballot_count(bx: TruncationBox) -> Result<Series> {
    let used = vars(&[X]);
    let wb = work_box(&bx, used, [false; 4]);
    let num = poly(&[([0; 4], 1), ([1, 0, 0, 0], 1)], wb);
    let den = poly(&[([0; 4], 1), ([1, 0, 0, 0], -1)], wb);
    let s = (&num * &den.inverse()?).sqrt_series()?;
    finish(&s, &bx, used)
}

struct Uvw {
    u: Series,
    v: Series,
    w: Series,
}

fn uvw_in(wb: TruncationBox) -> Result<Uvw> {
    let yt = [0, 1, 1, 0];
    let one_plus_t_sq = poly(&[([0; 4], 1), ([0, 0, 1, 0], 2), ([0, 0, 2, 0], 1)], wb);
    let s = (&one_plus_t_sq - &mono(yt, 4, wb)).sqrt_series()?;

    let u_num =
        &poly(&[([0; 4], 1), ([0, 0, 2, 0], 1), (yt, -2)], wb) - &(&poly(&[([0; 4], 1), ([0, 0, 1, 0], -1)], wb) * &s);
    let u_den = poly(&[([0, 0, 1, 0], 2), (yt, -2)], wb);
    let u = u_num.div_exact(&u_den)?;

    let v_num = &(&one_plus_t_sq - &mono(yt, 2, wb)) - &(&poly(&[([0; 4], 1), ([0, 0, 1, 0], 1)], wb) * &s);
    let v = v_num.div_exact(&mono(yt, 2, wb))?;

    let one = Series::one(wb);
    let uv = &u * &v;
    let arg = &(&(&Series::var(Var::X, wb) * &(&one + &u)) * &(&one - &v)) * &(&one + &uv).inverse()?;
    let w = arg.exp_series()?;
    Ok(Uvw { u, v, w })
}

/// The auxiliary series `u(y,t)`, `v(y,t)` and `w(x,y,t)`. Needs guard >= 1
/// for `u` and `v`.
pub fn gf_uvw(bx: TruncationBox) -> Result<(Series, Series, Series)> {
    let wb = work_box(&bx, vars(&[X, Y, T]), vars(&[Y, T]));
    let Uvw { u, v, w } = uvw_in(wb)?;
    Ok((finish(&u, &bx, vars(&[Y, T]))?, finish(&v, &bx, vars(&[Y, T]))?, finish(&w, &bx, vars(&[X, Y, T]))?))
}

fn p_pk_des_in(wb: TruncationBox) -> Result<Series> {
    let Uvw { u, v, w } = uvw_in(wb)?;
    let one = Series::one(wb);
    let num = &(&(&one + &u) * &v) * &(&w - &one);
    let den = &(&mono([0, 1, 1, 0], 1, wb) * &(&one + &(&u * &v))) * &(&one - &(&v * &w));
    Ok(&one + &num.div_exact(&den)?)
}

/// `P^{(pk,des)}(x,y,t)` over all permutations. Needs guard >= 2.
pub fn gf_P_pk_des(bx: TruncationBox) -> Result<Series> {
    let used = vars(&[X, Y, T]);
    let s = p_pk_des_in(work_box(&bx, used, vars(&[Y, T])))?;
    finish(&s, &bx, used)
}

/// `B^{(pk,des)}(x,y,t) = exp(D^{t,x} ln(1 + (1+t)(P^{(pk,des)} - 1)))`.
pub fn gf_B_pk_des(bx: TruncationBox) -> Result<Series> {
    let used = vars(&[X, Y, T]);
    let wb = work_box(&bx, used, vars(&[Y, T]));
    let p = p_pk_des_in(wb)?;
    let one = Series::one(p.truncation_box());
    let one_plus_t = &one + &Series::var(Var::T, p.truncation_box());
    let l = (&one_plus_t * &(&p - &one)).ln1p_series()?;
    let s = l.d_trunc(Var::T, Var::X).exp_series()?;
    finish(&s, &bx, used)
}

/// `x + 2 Σ_{k>=1} Σ_{d<=k-1} E(2k,d) t^{d+1} x^{2k+1}/(2k+1)!`.
pub fn odd_exponent(bx: TruncationBox) -> Series {
    let nx = bx.bound(Var::X) as usize;
    let table = EulerianTable::new(nx.max(1));
    let mut s = Series::var(Var::X, bx);
    for k in 1..=nx.saturating_sub(1) / 2 {
        for d in 0..k {
            let c = egf_term(&(BigInt::from(table.get(2 * k as i64, d as i64)) * 2), 2 * k + 1);
            s.set([2 * k as u32 + 1, 0, d as u32 + 1, 0], c);
        }
    }
    s
}

/// `1 + 2t Σ_{k>=1} Σ_{d<=k-1} E(2k,d) t^d x^{2k}/(2k)!`, the logarithmic
/// derivative in `x` of the odd-order generating function.
pub fn spiro_ode_factor(bx: TruncationBox) -> Series {
    let nx = bx.bound(Var::X) as usize;
    let table = EulerianTable::new(nx.max(1));
    let mut s = Series::one(bx);
    for k in 1..=nx / 2 {
        for d in 0..k {
            let c = egf_term(&(BigInt::from(table.get(2 * k as i64, d as i64)) * 2), 2 * k);
            s.set([2 * k as u32, 0, d as u32 + 1, 0], c);
        }
    }
    s
}

/// `B^{des}(x,t)`, the descent generating function of ballot permutations.
pub fn gf_B_des(bx: TruncationBox) -> Result<Series> {
    let used = vars(&[X, T]);
    let s = odd_exponent(work_box(&bx, used, [false; 4])).exp_series()?;
    finish(&s, &bx, used)
}

/// `B^{pk}(x,y) = sqrt((C + S) / (C - S))` with `C = Σ x^{2m}(1-y)^m/(2m)!`
/// and `S = Σ x^{2m+1}(1-y)^m/(2m+1)!`.
pub fn gf_B_pk(bx: TruncationBox) -> Result<Series> {
    let used = vars(&[X, Y]);
    let wb = work_box(&bx, used, [false; 4]);
    let one_minus_y = poly(&[([0; 4], 1), ([0, 1, 0, 0], -1)], wb);
    let mut c = Series::zero(wb);
    let mut s = Series::zero(wb);
    let mut pw = Series::one(wb);
    for m in 0..=wb.bound(Var::X) / 2 {
        for (e, a) in pw.terms() {
            let k = e[1];
            c.set([2 * m, k, 0, 0], a * egf_term(&BigInt::from(1), 2 * m as usize));
            s.set([2 * m + 1, k, 0, 0], a * egf_term(&BigInt::from(1), 2 * m as usize + 1));
        }
        pw = &pw * &one_minus_y;
    }
    let ratio = &(&c + &s) * &(&c - &s).inverse()?;
    finish(&ratio.sqrt_series()?, &bx, used)
}

/// `P^{depth}(x,z)` over all permutations.
pub fn gf_P_depth(bx: TruncationBox) -> Result<Series> {
    let used = vars(&[X, Z]);
    let wb = work_box(&bx, used, [false; 4]);
    let nx = wb.bound(Var::X) as usize;
    let table = EulerianTable::new(nx.max(1));
    let mut arg = mono([1, 0, 0, 1], 1, wb);
    for k in 1..=nx.saturating_sub(1) / 2 {
        for d in 0..k {
            let c = egf_term(&(BigInt::from(table.get(2 * k as i64, (k - 1 - d) as i64)) * 2), 2 * k + 1);
            arg.set([2 * k as u32 + 1, 0, 0, 2 * d as u32 + 1], c);
        }
    }
    let one_plus_z_inv = poly(&[([0; 4], 1), ([0, 0, 0, 1], 1)], wb).inverse()?;
    let root = poly(&[([0; 4], 1), ([2, 0, 0, 0], -1)], wb).sqrt_series()?;
    let one_minus_x_inv = poly(&[([0; 4], 1), ([1, 0, 0, 0], -1)], wb).inverse()?;
    let tail = &(&(&root * &one_minus_x_inv) * &one_plus_z_inv) * &arg.exp_series()?;
    let head = &Series::var(Var::Z, wb) * &one_plus_z_inv;
    finish(&(&head + &tail), &bx, used)
}

/// `O(x,t)`, the generating function of odd-order permutations by `M`.
pub fn gf_O(bx: TruncationBox) -> Result<Series> {
    let used = vars(&[X, T]);
    let wb = work_box(&bx, used, [false; 4]);
    finish(&odd_exponent(wb).exp_series()?, &bx, used)
}

/// Dispatch by builder name; see [`BUILDERS`].
pub fn build(name: &str, bx: TruncationBox) -> Result<Series> {
    match name {
        "E" => gf_eulerian(bx),
        "ballot_count" => gf_ballot_count(bx),
        "u" => Ok(gf_uvw(bx)?.0),
        "v" => Ok(gf_uvw(bx)?.1),
        "w" => Ok(gf_uvw(bx)?.2),
        "P_pk_des" => gf_P_pk_des(bx),
        "B_pk_des" => gf_B_pk_des(bx),
        "B_des" => gf_B_des(bx),
        "B_pk" => gf_B_pk(bx),
        "P_depth" => gf_P_depth(bx),
        "O" => gf_O(bx),
        other => Err(Error::UnknownBuilder(other.to_string())),
    }
}
