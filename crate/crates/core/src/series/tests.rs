use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::perm::{eulerian, stat_table, GroundSet, Statistic};

fn bx(n: u32) -> TruncationBox {
    TruncationBox::uniform(n)
}

fn x(b: TruncationBox) -> Series {
    Series::var(Var::X, b)
}

fn egf_row(s: &Series, n: u32, v: Var, len: u32) -> Vec<BigInt> {
    (0..len)
        .map(|k| {
            let mut e = [n, 0, 0, 0];
            e[v.index()] = k;
            egf_count(s, e).unwrap()
        })
        .collect()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&k| BigInt::from(k)).collect()
}

#[test]
fn ring_basics() {
    let b = bx(4);
    let one = Series::one(b);
    let p = &(&one + &x(b)) * &(&one - &x(b));
    assert_eq!(p, &one - &x(b).pow(2));
    assert_eq!(&p + &Series::zero(b), p);
    let geo = (&one - &x(b)).inverse().unwrap();
    for k in 0..=4 {
        assert_eq!(geo.get([k, 0, 0, 0]), q_int(1));
    }
}

#[test]
fn mul_intersects_boxes() {
    let a = Series::var(Var::X, TruncationBox::new(5, 1, 1, 1));
    let b = Series::var(Var::X, TruncationBox::new(2, 3, 1, 1));
    let p = &a * &b;
    assert_eq!(p.truncation_box().bounds, [2, 1, 1, 1]);
    assert_eq!(p.get([2, 0, 0, 0]), q_int(1));
}

#[test]
fn monomial_division() {
    let b = bx(4);
    let q = x(b).pow(2).div_exact(&x(b)).unwrap();
    assert_eq!(q.truncate(&bx(3)), x(bx(3)));
    assert_eq!(q.truncation_box().bounds, [3, 4, 4, 4]);
    assert!(matches!(Series::one(b).div_exact(&x(b)), Err(Error::InexactDivision(_))));
    assert!(matches!(Series::one(b).div_exact(&Series::zero(b)), Err(Error::InexactDivision(_))));
    // x + y has valuation (0,0,0,0) componentwise but no constant term.
    let xy = &x(b) + &Series::var(Var::Y, b);
    assert!(matches!(xy.div_exact(&xy), Err(Error::InexactDivision(_))));
}

#[test]
fn sqrt_examples() {
    let b = bx(5);
    assert_eq!(Series::one(b).sqrt_series().unwrap(), Series::one(b));
    let s = gf_ballot_count(TruncationBox::new(5, 0, 0, 0)).unwrap();
    assert_eq!(egf_row(&s, 0, Var::X, 1), ints(&[1]));
    let counts: Vec<BigInt> = (0..=5).map(|n| egf_count(&s, [n, 0, 0, 0]).unwrap()).collect();
    assert_eq!(counts, ints(&[1, 1, 1, 3, 9, 45]));
    let t = Series::var(Var::T, b);
    let sq = &(&Series::one(b) + &t).pow(2) - &(&Series::var(Var::Y, b) * &t).scale(&q_int(4));
    let r = sq.sqrt_series().unwrap().specialize(Var::Y, &q_int(0));
    assert_eq!(r, (&Series::one(b) + &t).specialize(Var::Y, &q_int(0)));
    assert!(matches!(Series::int(2, b).sqrt_series(), Err(Error::NonSquareConstant(_))));
    assert_eq!(Series::constant(q_frac(4, 9), b).sqrt_series().unwrap().constant_term(), q_frac(2, 3));
}

#[test]
fn exp_and_log_examples() {
    let b = TruncationBox::new(3, 0, 0, 0);
    let e = x(b).exp_series().unwrap();
    for (k, c) in [(0, q_int(1)), (1, q_int(1)), (2, q_frac(1, 2)), (3, q_frac(1, 6))] {
        assert_eq!(e.get([k, 0, 0, 0]), c);
    }
    let b = bx(6);
    let back = (&x(b).exp_series().unwrap() - &Series::one(b)).ln1p_series().unwrap();
    assert_eq!(back, x(b));
    assert!(matches!(Series::one(b).exp_series(), Err(Error::NonzeroConstant(_))));
    assert!(matches!(Series::one(b).ln1p_series(), Err(Error::NonzeroConstant(_))));
}

#[test]
fn calculus_in_x() {
    let b = bx(4);
    assert_eq!(Series::one(b).integrate_x(), x(b));
    assert_eq!(x(b).pow(2).integrate_x(), x(b).pow(3).scale(&q_frac(1, 3)));
    let e = x(b).exp_series().unwrap();
    assert!(e.derivative_x().agrees_with(&e));
    assert_eq!(e.derivative_x().truncation_box().bound(Var::X), 3);
}

#[test]
fn twist_and_reflect() {
    let b = bx(4);
    let t = Series::var(Var::T, b);
    assert_eq!(x(b).twist_xt().unwrap(), &x(b) * &t);
    let x2t = &x(b).pow(2) * &t;
    assert_eq!(x2t.twist_xt().unwrap(), &x(b).pow(2) * &t.pow(3));
    assert!(matches!(x(b).pow(3).pow(1).twist_xt().and_then(|s| s.twist_xt()), Err(Error::BoxTooSmall(_))));
    assert_eq!((&x(b) * &t).reflect_t().unwrap(), x(b));
    assert!(matches!(t.reflect_t(), Err(Error::ReflectDomain(_))));
    let a = &(&x(b).pow(3) * &t) + &x(b).pow(2).scale(&q_int(5));
    assert_eq!(a.reflect_t().unwrap().reflect_t().unwrap(), a);
    let narrow = TruncationBox::new(4, 4, 3, 4);
    assert!(matches!(Series::one(narrow).reflect_t(), Err(Error::BoxTooSmall(_))));
}

#[test]
fn d_operator() {
    let b = bx(4);
    let (y, t) = (Series::var(Var::Y, b), Series::var(Var::T, b));
    let a =
        &(&x(b) + &(&(&x(b).pow(2) * &y) * &t).scale(&q_int(3))) + &(&(&x(b).pow(3) * &y.pow(2)) * &t).scale(&q_int(2));
    let want = &x(b) + &(&(&x(b).pow(3) * &y.pow(2)) * &t).scale(&q_int(2));
    assert_eq!(a.d_trunc(Var::T, Var::X), want);
    assert!(Series::one(b).d_trunc(Var::T, Var::X).is_zero());
    assert_eq!(a.d_trunc(Var::T, Var::X).d_trunc(Var::T, Var::X), want);
    assert_eq!(&a.d_trunc(Var::T, Var::X) + &a.d_complement(Var::T, Var::X), a);
}

#[test]
fn d_operator_commutes_with_specialization() {
    let b = bx(6);
    let e = gf_eulerian(b).unwrap();
    let spec_then_d = e.specialize(Var::Y, &q_int(1)).d_trunc(Var::T, Var::X);
    let d_then_spec = e.d_trunc(Var::T, Var::X).specialize(Var::Y, &q_int(1));
    assert_eq!(spec_then_d, d_then_spec);
}

#[test]
fn eulerian_builder_rows() {
    let e = gf_eulerian(bx(8)).unwrap();
    assert_eq!(egf_row(&e, 4, Var::T, 4), ints(&[1, 11, 11, 1]));
    assert_eq!(egf_row(&e, 1, Var::T, 1), ints(&[1]));
    for n in 1..=8u32 {
        for d in 0..=8u32 {
            let want = BigInt::from(eulerian(n as i64, d as i64));
            assert_eq!(egf_count(&e, [n, 0, d, 0]).unwrap(), want, "n={n} d={d}");
        }
    }
}

#[test]
fn eulerian_plus_one_is_descent_egf() {
    let b = TruncationBox::new(6, 0, 6, 0);
    let p = stat_table(6, GroundSet::All, &[Statistic::Des], crate::par::Exec::Sequential).unwrap();
    let want = egf_from_table(&p, &[Var::T], b).unwrap();
    assert_eq!(&gf_eulerian(b).unwrap() + &Series::one(b), want);
}

#[test]
fn uvw_at_y_zero() {
    let b = TruncationBox::new(3, 4, 4, 0).with_guard(2);
    let (u, v, _) = gf_uvw(b).unwrap();
    assert_eq!(u.specialize(Var::Y, &q_int(0)), Series::var(Var::T, b).specialize(Var::Y, &q_int(0)));
    assert!(v.specialize(Var::Y, &q_int(0)).is_zero());
    assert_eq!(v.get([0, 1, 1, 0]), q_int(1));
}

#[test]
fn ballot_descent_rows() {
    let s = gf_B_des(TruncationBox::new(7, 0, 7, 0)).unwrap();
    assert_eq!(egf_row(&s, 5, Var::T, 3), ints(&[1, 22, 22]));
    assert_eq!(egf_row(&s, 6, Var::T, 3), ints(&[1, 52, 172]));
    assert_eq!(egf_row(&s, 7, Var::T, 4), ints(&[1, 114, 856, 604]));
    assert_eq!(s.get([7, 0, 3, 0]), q_frac(604, 5040));
}

#[test]
fn ballot_peak_rows() {
    let s = gf_B_pk(TruncationBox::new(5, 3, 0, 0)).unwrap();
    assert_eq!(egf_row(&s, 4, Var::Y, 2), ints(&[1, 8]));
    assert_eq!(egf_row(&s, 5, Var::Y, 3), ints(&[1, 28, 16]));
}

#[test]
fn depth_rows() {
    let s = gf_P_depth(TruncationBox::new(4, 0, 0, 4)).unwrap();
    assert_eq!(egf_row(&s, 3, Var::Z, 3), ints(&[3, 2, 1]));
    assert_eq!(egf_row(&s, 4, Var::Z, 4), ints(&[9, 11, 3, 1]));
}

#[test]
fn odd_order_small_boxes() {
    let s = gf_O(TruncationBox::new(0, 0, 0, 0)).unwrap();
    assert_eq!(s.nnz(), 1);
    assert_eq!(s.constant_term(), q_int(1));
    assert_eq!(gf_O(bx(7)).unwrap(), gf_B_des(bx(7)).unwrap());
}

#[test]
fn builders_report_small_guard() {
    let b = TruncationBox::new(3, 3, 3, 0).with_guard(0);
    assert!(matches!(gf_P_pk_des(b), Err(Error::BoxTooSmall(_))));
    assert!(matches!(build("nope", b), Err(Error::UnknownBuilder(_))));
}

#[test]
fn pk_des_small_rows() {
    let s = gf_P_pk_des(TruncationBox::new(3, 3, 3, 0).with_guard(2)).unwrap();
    assert_eq!(egf_count(&s, [1, 0, 0, 0]).unwrap(), BigInt::from(1));
    assert_eq!(egf_count(&s, [3, 0, 0, 0]).unwrap(), BigInt::from(1));
    assert_eq!(egf_count(&s, [3, 0, 2, 0]).unwrap(), BigInt::from(1));
    assert_eq!(egf_count(&s, [3, 0, 1, 0]).unwrap(), BigInt::from(2));
    assert_eq!(egf_count(&s, [3, 1, 1, 0]).unwrap(), BigInt::from(2));
}

#[test]
fn guard_soundness() {
    let b = TruncationBox::new(4, 4, 4, 0).with_guard(2);
    for name in ["u", "v", "P_pk_des"] {
        let base = build(name, b).unwrap();
        let wider = build(name, b.with_guard(4)).unwrap();
        assert_eq!(base.truncation_box(), wider.truncation_box().with_guard(2));
        assert!(base.agrees_with(&wider), "{name}");
    }
}

fn arb_series(b: TruncationBox, constant: Option<i64>) -> impl Strategy<Value = Series> {
    let n = b.exponents().count();
    proptest::collection::vec((-4i64..=4, 1i64..=3), n).prop_map(move |cs| {
        let mut s = Series::from_terms(b.exponents().zip(cs).map(|(e, (p, q))| (e, q_frac(p, q))), b);
        if let Some(c) = constant {
            s.set([0; 4], q_int(c));
        }
        s
    })
}

fn small_box() -> TruncationBox {
    TruncationBox::new(3, 2, 1, 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_laws(a in arb_series(small_box(), None), b in arb_series(small_box(), None), c in arb_series(small_box(), None)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn inverse_is_inverse(a in arb_series(small_box(), Some(3))) {
        prop_assert_eq!(&a * &a.inverse().unwrap(), Series::one(small_box()));
    }

    #[test]
    fn exp_ln_inverse_pair(a in arb_series(small_box(), Some(0))) {
        let e = a.exp_series().unwrap();
        prop_assert_eq!((&e - &Series::one(small_box())).ln1p_series().unwrap(), a.clone());
        let l = a.ln1p_series().unwrap();
        prop_assert_eq!(l.exp_series().unwrap(), &a + &Series::one(small_box()));
    }

    #[test]
    fn sqrt_square_inverse_pair(a in arb_series(small_box(), Some(1))) {
        let s = a.sqrt_series().unwrap();
        prop_assert_eq!(&s * &s, a.clone());
        let sq = &a * &a;
        prop_assert_eq!(sq.sqrt_series().unwrap(), a);
    }

    #[test]
    fn dump_round_trips(a in arb_series(small_box(), None)) {
        prop_assert_eq!(parse_dump(&a.to_dump()).unwrap(), a);
    }
}
