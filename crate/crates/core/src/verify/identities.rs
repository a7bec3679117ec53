//! Every checked identity, addressable by a short id.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::corollaries::{check_bnd_multinomial, eulerian_catalan_check};
use super::{Counterexample, VerificationReport};
use crate::combinat::{ballot_count, factorial};
use crate::error::{Error, Result};
use crate::oddorder::{conjecture_wz_records, odd_order_table, spiro_recurrence_table};
use crate::par::Exec;
use crate::perm::{ballot_permutations, enum_limit, stat_table, EulerianTable, GroundSet, StatTable, Statistic};
use crate::rcmap::{
    check_additive_statistic, check_descent_law, check_round_trips, pk_stat, zero_stat, DepthRecurrenceTables,
    RecurrenceTables,
};
use crate::series::{
    egf_count, egf_from_table, gf_B_des, gf_B_pk, gf_B_pk_des, gf_O, gf_P_depth, gf_P_pk_des, gf_ballot_count,
    gf_eulerian, gf_uvw, odd_exponent, q_int, spiro_ode_factor, Series, TruncationBox, Var, Q,
};

pub struct Identity {
    pub id: &'static str,
    pub summary: &'static str,
    pub default_n: usize,
}

const fn id(id: &'static str, default_n: usize, summary: &'static str) -> Identity {
    Identity { id, summary, default_n }
}

/// All identities in report order.
pub const IDENTITIES: &[Identity] = &[
    id("bdn", 9, "ballot permutation count vs (n-1)!!^2 / n!!(n-2)!!, and sqrt((1+x)/(1-x)) up to x^30"),
    id("eulerian", 8, "Eulerian recurrence, E(x,t) closed form and descent enumeration agree"),
    id("expansions", 7, "printed rows of B^des, B^pk, P^depth and A_4(t)"),
    id("round-trips", 7, "reversal-concatenation map inverts both lowest-position splits"),
    id("descent-law", 7, "des(phi(rho,tau)) from the characteristic-function formula"),
    id("e17", 9, "(pk,des) recurrence between all and ballot permutations"),
    id("rem1", 7, "e17 with pk replaced by other admissible statistics"),
    id("rel-pk-des", 8, "B(xt,y,1/t) B(x,y,t) = (1+t) P - t, from enumeration and from closed forms"),
    id("d-operator", 8, "D^{t,x} examples, splitting and commutation with specialization"),
    id("zhuang", 6, "sum t^(des+1) y^(pk+1) = ((1+u)/(1+uv))^(n+1) v A_n(v)"),
    id("formdespk", 7, "closed form of B^(pk,des) vs ballot enumeration"),
    id("e21", 8, "(pk,depth,des) recurrence between all and ballot permutations"),
    id("rel-pk-depth-des", 7, "B(xzt,y,1/(z^2 t)) B(x,y,t) = (1+zt) P^(pk,depth,des) - zt"),
    id("bpk", 9, "closed form of B^pk vs enumeration, and (B^pk)^2 = 2 P^pk - 1"),
    id("bdes", 8, "closed form of B^des vs enumeration and its derivation from E(x,t)"),
    id("depth", 8, "closed form of P^depth vs depth enumeration over S_n"),
    id("spiro", 9, "ballot permutations by des equidistributed with odd order permutations by M"),
    id("recofpnd", 9, "odd order recurrence vs enumeration"),
    id("ode-o", 9, "O(x,t) vs odd order enumeration and its differential equation"),
    id("bnd-multinomial", 9, "multinomial sum for b_n^des(d) vs enumeration"),
    id("eulerian-catalan", 9, "(n+1) b_{2n+1}^des(n) = E(2n+1,n)"),
    id("conjecture-wz", 8, "b_{n,d}(1,j) + b_{n,d}(j,1) = 2 p_{n,d}(1,j) (open; evidence only)"),
];

pub fn identity(name: &str) -> Option<&'static Identity> {
    IDENTITIES.iter().find(|i| i.id == name)
}

type Check = Result<Option<Counterexample>>;

fn at(e: [u32; 4]) -> [(&'static str, i64); 4] {
    [("e_x", e[0] as i64), ("e_y", e[1] as i64), ("e_t", e[2] as i64), ("e_z", e[3] as i64)]
}

/// Compare two series on their common box.
fn same(what: &str, lhs: &Series, rhs: &Series) -> Option<Counterexample> {
    lhs.first_difference(rhs).map(|(e, a, b)| Counterexample::new(at(e), a, b).with_detail(what.to_string()))
}

fn first_some<I: IntoIterator<Item = Check>>(checks: I) -> Check {
    for c in checks {
        if let Some(cx) = c? {
            return Ok(Some(cx));
        }
    }
    Ok(None)
}

fn table(n: usize, ground: GroundSet, stats: &[Statistic]) -> Result<StatTable> {
    stat_table(n, ground, stats, Exec::default())
}

fn bx(nx: u32, ny: u32, nt: u32, nz: u32) -> TruncationBox {
    TruncationBox::new(nx, ny, nt, nz).with_guard(4)
}

fn row(s: &Series, n: u32, v: Var, len: u32) -> Result<Vec<BigInt>> {
    (0..len)
        .map(|k| {
            let mut e = [n, 0, 0, 0];
            e[v.index()] = k;
            egf_count(s, e)
        })
        .collect()
}

fn expect_row(what: &str, s: &Series, n: u32, v: Var, want: &[i64]) -> Check {
    let got = row(s, n, v, want.len() as u32)?;
    let want: Vec<BigInt> = want.iter().map(|&k| BigInt::from(k)).collect();
    Ok((got != want).then(|| {
        let fmt = |r: &[BigInt]| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        Counterexample::new([("n", n as i64)], fmt(&got), fmt(&want)).with_detail(what.to_string())
    }))
}

fn check_bdn(n: usize) -> Check {
    for m in 0..=n {
        let enumerated = BigUint::from(ballot_permutations(m)?.count());
        if enumerated != ballot_count(m) {
            return Ok(Some(
                Counterexample::new([("n", m as i64)], enumerated, ballot_count(m)).with_detail("enumeration"),
            ));
        }
    }
    let top = n.max(30);
    let s = gf_ballot_count(bx(top as u32, 0, 0, 0))?;
    for m in 0..=top {
        let c = egf_count(&s, [m as u32, 0, 0, 0])?;
        if c != BigInt::from(ballot_count(m)) {
            return Ok(Some(Counterexample::new([("n", m as i64)], c, ballot_count(m)).with_detail("series")));
        }
    }
    Ok(None)
}

fn check_eulerian(n: usize) -> Check {
    let euler = EulerianTable::new(n);
    let des = table(n, GroundSet::All, &[Statistic::Des])?;
    let e = gf_eulerian(bx(n as u32, 0, n as u32, 0))?;
    for m in 1..=n {
        for d in 0..=n {
            let (m_i, d_i) = (m as i64, d as i64);
            let rec = euler.get(m_i, d_i);
            let enumerated = des.get(m_i, &[d_i]);
            if rec != enumerated {
                return Ok(Some(
                    Counterexample::new([("n", m_i), ("d", d_i)], rec, enumerated)
                        .with_detail("recurrence vs enumeration"),
                ));
            }
            let c = egf_count(&e, [m as u32, 0, d as u32, 0])?;
            if c != BigInt::from(rec.clone()) {
                return Ok(Some(
                    Counterexample::new([("n", m_i), ("d", d_i)], c, rec).with_detail("closed form vs recurrence"),
                ));
            }
        }
    }
    Ok(None)
}

fn check_expansions(n: usize) -> Check {
    let n = n as u32;
    let b = bx(n, n, n, n);
    let bdes = gf_B_des(b)?;
    let bpk = gf_B_pk(b)?;
    let dep = gf_P_depth(b)?;
    let e = gf_eulerian(b)?;
    let mut checks: Vec<Check> = Vec::new();
    let bdes_rows: [&[i64]; 5] = [&[1, 2], &[1, 8], &[1, 22, 22], &[1, 52, 172], &[1, 114, 856, 604]];
    for (i, r) in bdes_rows.iter().enumerate() {
        if 3 + i as u32 <= n {
            checks.push(expect_row("B^des", &bdes, 3 + i as u32, Var::T, r));
        }
    }
    let bpk_rows: [&[i64]; 3] = [&[1, 2], &[1, 8], &[1, 28, 16]];
    for (i, r) in bpk_rows.iter().enumerate() {
        if 3 + i as u32 <= n {
            checks.push(expect_row("B^pk", &bpk, 3 + i as u32, Var::Y, r));
        }
    }
    if n >= 4 {
        checks.push(expect_row("P^depth", &dep, 3, Var::Z, &[3, 2, 1]));
        checks.push(expect_row("P^depth", &dep, 4, Var::Z, &[9, 11, 3, 1]));
        checks.push(expect_row("A_4", &e, 4, Var::T, &[1, 11, 11, 1]));
    }
    first_some(checks)
}

fn check_rem1(n: usize) -> Check {
    first_some([
        check_additive_statistic(pk_stat, n),
        check_additive_statistic(zero_stat, n),
        (|| {
            let t = RecurrenceTables::new(n, zero_stat, Exec::default())?;
            Ok((0..=n).find_map(|m| t.check_e17(m)))
        })(),
        (|| {
            let t = RecurrenceTables::new(n, pk_stat, Exec::default())?;
            Ok((0..=n).find_map(|m| t.check_e17(m)))
        })(),
    ])
}

/// `reflect_t(B) · B` against `(1+t) P - t`.
fn rel_pk_des(b: &Series, p: &Series) -> Result<Option<Counterexample>> {
    let bx = b.truncation_box().intersect(&p.truncation_box());
    let t = Series::var(Var::T, bx);
    let lhs = &b.reflect_t()? * b;
    let rhs = &(&(&Series::one(bx) + &t) * p) - &t;
    Ok(same("reflect_t(B) B vs (1+t) P - t", &lhs, &rhs))
}

fn check_rel_pk_des(n: usize) -> Check {
    let nb = n as u32;
    let b = bx(nb, nb, nb, 0);
    let ballot = table(n, GroundSet::Ballot, &[Statistic::Pk, Statistic::Des])?;
    let all = table(n, GroundSet::All, &[Statistic::Pk, Statistic::Des])?;
    let bs = egf_from_table(&ballot, &[Var::Y, Var::T], b)?;
    let ps = egf_from_table(&all, &[Var::Y, Var::T], b)?;
    first_some([
        rel_pk_des(&bs, &ps),
        (|| rel_pk_des(&gf_B_pk_des(b)?, &gf_P_pk_des(b)?))(),
        (|| {
            let bdes = gf_B_des(bx(nb, 0, nb, 0))?;
            let e = gf_eulerian(bx(nb, 0, nb, 0))?;
            rel_pk_des(&bdes, &(&e + &Series::one(e.truncation_box())))
        })(),
    ])
}

fn check_d_operator(n: usize) -> Check {
    let b = bx(n as u32, n as u32, n as u32, 0);
    let (x, y, t) = (Series::var(Var::X, b), Series::var(Var::Y, b), Series::var(Var::T, b));
    let c = |k: i64| q_int(k);
    let sample = &(&x + &(&(&x.pow(2) * &y) * &t).scale(&c(3))) + &(&(&x.pow(3) * &y.pow(2)) * &t).scale(&c(2));
    let want = &x + &(&(&x.pow(3) * &y.pow(2)) * &t).scale(&c(2));
    let e = gf_eulerian(b)?;
    let l = (&(&Series::one(b) + &t) * &e).ln1p_series()?;
    let d = l.d_trunc(Var::T, Var::X);
    let p = gf_P_pk_des(b)?;
    first_some([
        Ok(same("D^{t,x} on the worked example", &sample.d_trunc(Var::T, Var::X), &want)),
        Ok(Series::one(b)
            .d_trunc(Var::T, Var::X)
            .is_zero()
            .then_some(())
            .map_or_else(|| Some(Counterexample::new([("n", 0)], "nonzero", "0").with_detail("D^{t,x}(1)")), |_| None)),
        Ok(same("idempotence", &d.d_trunc(Var::T, Var::X), &d)),
        Ok(same("D + complement", &(&d + &l.d_complement(Var::T, Var::X)), &l)),
        Ok(same(
            "D commutes with y = 1",
            &p.d_trunc(Var::T, Var::X).specialize(Var::Y, &c(1)),
            &p.specialize(Var::Y, &c(1)).d_trunc(Var::T, Var::X),
        )),
    ])
}

/// The derivation of the closed form of `B^des` from `E(x,t)`.
fn check_bdes_derivation(n: u32) -> Check {
    let b = bx(n, 0, n, 0);
    let one = Series::one(b);
    let (x, t) = (Series::var(Var::X, b), Series::var(Var::T, b));
    let e = gf_eulerian(b)?;
    let e_neg = e.scale_var(Var::X, &q_int(-1));
    let one_minus_t = &one - &t;
    let g_pos = (&one_minus_t * &x).exp_series()?;
    let g_neg = (&(&t - &one) * &x).exp_series()?;
    let ratio = &(&one - &(&t * &g_neg)) * &(&one - &(&t * &g_pos)).inverse()?;
    let ln_ratio = (&ratio - &one).ln1p_series()?;
    let ln_lhs = (&(&one + &t) * &e).ln1p_series()?;
    let xt = &x * &t;

    // 2 Σ_{k>=1} Σ_d E(2k,d) t^d x^{2k}/(2k)!, over every d.
    let euler = EulerianTable::new(n as usize);
    let mut even = Series::zero(b);
    for k in 1..=n / 2 {
        for d in 0..2 * k {
            let c =
                Q::new(BigInt::from(euler.get(2 * k as i64, d as i64)) * 2, BigInt::from(factorial(2 * k as usize)));
            even.set([2 * k, 0, d, 0], c);
        }
    }
    let integral = &t * &(&e + &e_neg).integrate_x();
    first_some([
        Ok(same("2 Σ E(2k,d) t^d x^{2k}/(2k)! vs E(x,t) + E(-x,t)", &even, &(&e + &e_neg))),
        Ok(same("t ∫ (E(u,t) + E(-u,t)) du vs ln ratio - 2xt", &integral, &(&ln_ratio - &xt.scale(&q_int(2))))),
        Ok(same("t ∫ (E(u,t) + E(-u,t)) du vs 2t ∫ of the even sum", &integral, &(&t * &even.integrate_x()))),
        Ok(same("ln(1 + (1+t)E) vs x - xt + ln ratio", &ln_lhs, &(&(&x - &xt) + &ln_ratio))),
        Ok(same("D^{t,x} ln(1 + (1+t)E) vs exponent", &ln_lhs.d_trunc(Var::T, Var::X), &odd_exponent(b))),
        Ok(same(
            "D^{t,x}(x + xt + integral) vs exponent",
            &(&(&x + &xt) + &integral).d_trunc(Var::T, Var::X),
            &odd_exponent(b),
        )),
        (|| {
            Ok(same(
                "exp(D^{t,x} ln(1 + (1+t)E)) vs B^des",
                &ln_lhs.d_trunc(Var::T, Var::X).exp_series()?,
                &gf_B_des(b)?,
            ))
        })(),
    ])
}

fn check_bdes(n: usize) -> Check {
    let nb = n as u32;
    let ballot = table(n, GroundSet::Ballot, &[Statistic::Des])?;
    let b = bx(nb, 0, nb, 0);
    first_some([
        (|| Ok(same("B^des vs ballot enumeration", &gf_B_des(b)?, &egf_from_table(&ballot, &[Var::T], b)?)))(),
        check_bdes_derivation(nb),
        (|| {
            let bdes = gf_B_des(b)?;
            let fixed = bdes.specialize(Var::T, &q_int(1));
            let counts = gf_ballot_count(bx(nb, 0, 0, 0))?;
            Ok(same("B^des(x,1) vs sqrt((1+x)/(1-x))", &fixed, &counts))
        })(),
    ])
}

fn check_zhuang(n: usize) -> Check {
    let bound = (n as u32 + 3).max(8);
    let b = bx(0, bound, bound, 0);
    let (u, v, _) = gf_uvw(b)?;
    let one = Series::one(b);
    let factor = &(&one + &u) * &(&one + &(&u * &v)).inverse()?;
    let euler = EulerianTable::new(n);
    let all = table(n, GroundSet::All, &[Statistic::Pk, Statistic::Des])?;
    for m in 1..=n {
        let mut lhs = Series::zero(b);
        for (vals, c) in all.row(m) {
            let e = [0, vals[0] as u32 + 1, vals[1] as u32 + 1, 0];
            lhs = &lhs + &Series::monomial(e, Q::from_integer(BigInt::from(c.clone())), b);
        }
        let a: Vec<Q> = (0..m).map(|d| Q::from_integer(BigInt::from(euler.get(m as i64, d as i64)))).collect();
        let rhs = &(&factor.pow(m as u32 + 1) * &v) * &Series::compose_poly(&a, &v);
        if let Some(cx) = same(&format!("n = {m}"), &lhs, &rhs) {
            return Ok(Some(cx));
        }
    }
    Ok(None)
}

fn check_formdespk(n: usize) -> Check {
    let nb = n as u32;
    let b = bx(nb, nb, nb, 0);
    let ballot = table(n, GroundSet::Ballot, &[Statistic::Pk, Statistic::Des])?;
    let all = table(n, GroundSet::All, &[Statistic::Pk, Statistic::Des])?;
    let closed = gf_B_pk_des(b)?;
    first_some([
        (|| Ok(same("B^(pk,des) vs ballot enumeration", &closed, &egf_from_table(&ballot, &[Var::Y, Var::T], b)?)))(),
        (|| Ok(same("P^(pk,des) vs enumeration", &gf_P_pk_des(b)?, &egf_from_table(&all, &[Var::Y, Var::T], b)?)))(),
        (|| {
            Ok(same(
                "B^(pk,des) at y = 1 vs B^des",
                &closed.specialize(Var::Y, &q_int(1)),
                &gf_B_des(bx(nb, 0, nb, 0))?,
            ))
        })(),
        (|| {
            Ok(same("B^(pk,des) at t = 1 vs B^pk", &closed.specialize(Var::T, &q_int(1)), &gf_B_pk(bx(nb, nb, 0, 0))?))
        })(),
    ])
}

fn check_rel_pk_depth_des(n: usize) -> Check {
    let nb = n as u32;
    let b = bx(nb, nb, nb, nb);
    let ballot = table(n, GroundSet::Ballot, &[Statistic::Pk, Statistic::Des])?;
    let all = table(n, GroundSet::All, &[Statistic::Pk, Statistic::Depth, Statistic::Des])?;
    let bs = egf_from_table(&ballot, &[Var::Y, Var::T], b)?;
    let ps = egf_from_table(&all, &[Var::Y, Var::Z, Var::T], b)?;
    let zt = &Series::var(Var::Z, b) * &Series::var(Var::T, b);
    let lhs = &bs.depth_twist()? * &bs;
    let rhs = &(&(&Series::one(b) + &zt) * &ps) - &zt;
    first_some([
        Ok(same("B(xzt,y,1/(z^2 t)) B vs (1+zt) P - zt", &lhs, &rhs)),
        Ok(same(
            "z = 1 reduces to the (pk,des) identity",
            &lhs.specialize(Var::Z, &q_int(1)),
            &(&bs.reflect_t()? * &bs).specialize(Var::Z, &q_int(1)),
        )),
        (|| {
            let t = RecurrenceTables::pk_des(n, Exec::default())?;
            let d = DepthRecurrenceTables::new(n, Exec::default())?;
            Ok((0..=n).find_map(|m| t.check_e17(m).or_else(|| d.check_e21(m))))
        })(),
    ])
}

fn check_bpk(n: usize) -> Check {
    let nb = n as u32;
    let b = bx(nb, nb, 0, 0);
    let ballot = table(n, GroundSet::Ballot, &[Statistic::Pk])?;
    let all = table(n, GroundSet::All, &[Statistic::Pk])?;
    let closed = gf_B_pk(b)?;
    let p = egf_from_table(&all, &[Var::Y], b)?;
    first_some([
        (|| Ok(same("B^pk vs ballot enumeration", &closed, &egf_from_table(&ballot, &[Var::Y], b)?)))(),
        Ok(same("(B^pk)^2 vs 2 P^pk - 1", &(&closed * &closed), &(&p.scale(&q_int(2)) - &Series::one(b)))),
    ])
}

fn check_depth(n: usize) -> Check {
    let nb = n as u32;
    let b = bx(nb, 0, 0, nb);
    let all = table(n, GroundSet::All, &[Statistic::Depth])?;
    Ok(same("P^depth vs depth enumeration", &gf_P_depth(b)?, &egf_from_table(&all, &[Var::Z], b)?))
}

fn check_spiro(n: usize) -> Check {
    let ballot = table(n, GroundSet::Ballot, &[Statistic::Des])?;
    let odd = odd_order_table(n, Exec::default())?;
    for m in 0..=n {
        for d in 0..=n as i64 {
            let (l, r) = (ballot.get(m as i64, &[d]), odd.get(m as i64, d));
            if l != r {
                return Ok(Some(Counterexample::new([("n", m as i64), ("d", d)], l, r)));
            }
        }
    }
    Ok(None)
}

fn check_recofpnd(n: usize) -> Check {
    let rec = spiro_recurrence_table(n);
    let odd = odd_order_table(n, Exec::default())?;
    for m in 0..=n {
        for d in 0..=n as i64 {
            let (l, r) = (rec.get(m as i64, d), odd.get(m as i64, d));
            if l != r {
                return Ok(Some(Counterexample::new([("n", m as i64), ("d", d)], l, r)));
            }
        }
    }
    Ok(None)
}

fn check_ode_o(n: usize) -> Check {
    let nb = n as u32;
    let b = bx(nb, 0, nb, 0);
    let o = gf_O(b)?;
    let odd = odd_order_table(n, Exec::default())?;
    let residual = &o.derivative_x() - &(&o * &spiro_ode_factor(b));
    if !residual.is_zero() {
        let (e, c) = residual.terms().next().map(|(e, c)| (e, c.clone())).expect("nonzero");
        return Ok(Some(Counterexample::new(at(e), c, 0).with_detail("ODE residual")));
    }
    if o.constant_term() != Q::one() {
        return Ok(Some(Counterexample::new([("n", 0)], o.constant_term(), 1).with_detail("O(0,t)")));
    }
    Ok(same("O vs odd order enumeration", &o, &egf_from_table(odd.as_stat_table(), &[Var::T], b)?))
}

fn check_wz(n: usize) -> Check {
    for m in 0..=n {
        for r in conjecture_wz_records(m, Exec::default())? {
            if !r.equal {
                return Ok(Some(
                    Counterexample::new(
                        [("n", r.n as i64), ("d", r.d as i64), ("i", r.i as i64), ("j", r.j as i64)],
                        r.lhs,
                        r.rhs,
                    )
                    .with_detail("b_{n,d}(1,j) + b_{n,d}(j,1) vs 2 p_{n,d}(1,j)"),
                ));
            }
        }
    }
    Ok(None)
}

/// Run one identity at size `n` (its default if `None`).
pub fn run_identity(name: &str, n: Option<usize>) -> Result<VerificationReport> {
    let info = identity(name).ok_or_else(|| Error::Domain(format!("unknown identity {name:?}")))?;
    let n = n.unwrap_or(info.default_n);
    let run = |check: fn(usize) -> Check| VerificationReport::run(info.id, Some(n), || check(n));
    let report = match info.id {
        "bdn" => run(check_bdn).with_param(
            "counts",
            (0..=n).map(|m| serde_json::Value::String(ballot_count(m).to_string())).collect::<Vec<_>>(),
        ),
        "eulerian" => run(check_eulerian),
        "expansions" => run(check_expansions),
        "round-trips" => run(|n| first_some((0..=n).map(check_round_trips))),
        "descent-law" => run(|n| first_some((0..=n).map(check_descent_law))),
        "e17" => run(|n| {
            let t = RecurrenceTables::pk_des(n, Exec::default())?;
            Ok((0..=n).find_map(|m| t.check_e17(m)))
        }),
        "rem1" => run(check_rem1),
        "rel-pk-des" => run(check_rel_pk_des),
        "d-operator" => run(check_d_operator),
        "zhuang" => run(check_zhuang),
        "formdespk" => run(check_formdespk),
        "e21" => run(|n| {
            let t = DepthRecurrenceTables::new(n, Exec::default())?;
            Ok((0..=n).find_map(|m| t.check_e21(m)))
        }),
        "rel-pk-depth-des" => run(check_rel_pk_depth_des),
        "bpk" => run(check_bpk),
        "bdes" => run(check_bdes),
        "depth" => run(check_depth),
        "spiro" => run(check_spiro),
        "recofpnd" => run(check_recofpnd),
        "ode-o" => run(check_ode_o),
        "bnd-multinomial" => run(check_bnd_multinomial),
        "eulerian-catalan" => eulerian_catalan_check(n),
        "conjecture-wz" => {
            let r = run(check_wz);
            let label =
                if r.passed() { format!("consistent up to n = {n}") } else { "counterexample found".to_string() };
            r.with_label(label)
        }
        _ => unreachable!("every listed identity is dispatched"),
    };
    Ok(report)
}

/// Run the selected identities (all if `filter` is empty) concurrently,
/// returning reports in [`IDENTITIES`] order.
pub fn cmd_verify(filter: &[String], n_max: Option<usize>) -> Result<Vec<VerificationReport>> {
    for f in filter {
        if identity(f).is_none() {
            return Err(Error::Domain(format!("unknown identity {f:?}")));
        }
    }
    if let Some(n) = n_max {
        let limit = enum_limit();
        if n > limit {
            return Err(Error::EnumerationLimit { n, limit });
        }
    }
    let selected: Vec<&'static str> =
        IDENTITIES.iter().map(|i| i.id).filter(|id| filter.is_empty() || filter.iter().any(|f| f == id)).collect();
    Exec::default().map_collect(selected, |id| run_identity(id, n_max)).into_iter().collect()
}
