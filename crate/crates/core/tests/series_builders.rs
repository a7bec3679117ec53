use ballotlab::perm::{stat_table, GroundSet, Statistic};
use ballotlab::series::{
    build, coeff, egf_count, egf_from_table, gf_B_des, gf_B_pk_des, gf_eulerian, parse_dump, q_frac, q_int, Series,
    TruncationBox, Var,
};
use ballotlab::{Error, Exec};
use num_bigint::BigInt;

#[test]
fn b_des_dump_entry() {
    let s = build("B_des", TruncationBox::new(7, 0, 7, 0)).unwrap();
    let dump = s.to_dump();
    assert!(dump.lines().any(|l| l == "7 0 3 0 151/1260"));
    assert_eq!(coeff(&s, [7, 0, 3, 0]).unwrap(), q_frac(604, 5040));
    assert_eq!(parse_dump(&dump).unwrap(), s);
}

#[test]
fn ballot_count_dump() {
    let s = build("ballot_count", TruncationBox::new(5, 0, 0, 0)).unwrap();
    let want = [q_int(1), q_int(1), q_frac(1, 2), q_frac(1, 2), q_frac(3, 8), q_frac(3, 8)];
    for (k, c) in want.iter().enumerate() {
        assert_eq!(&s.get([k as u32, 0, 0, 0]), c);
    }
    assert_eq!(egf_count(&s, [5, 0, 0, 0]).unwrap(), BigInt::from(45));
}

#[test]
fn odd_order_at_degree_zero() {
    let s = build("O", TruncationBox::new(0, 0, 0, 0)).unwrap();
    assert_eq!(s.to_dump(), "# box nx=0 ny=0 nt=0 nz=0 guard=0\n0 0 0 0 1/1\n");
}

#[test]
fn b_des_row_six() {
    let s = gf_B_des(TruncationBox::uniform(6)).unwrap();
    assert_eq!(egf_count(&s, [6, 0, 1, 0]).unwrap(), BigInt::from(52));
    assert_eq!(egf_count(&s, [6, 0, 2, 0]).unwrap(), BigInt::from(172));
    assert!(matches!(coeff(&s, [7, 0, 0, 0]), Err(Error::OutsideBox(_))));
}

#[test]
fn b_des_reflection() {
    let b = TruncationBox::new(8, 0, 8, 0);
    let bd = gf_B_des(b).unwrap();
    let lhs = &bd.reflect_t().unwrap() * &bd;
    let rhs = &Series::one(b) + &(&(&Series::one(b) + &Series::var(Var::T, b)) * &gf_eulerian(b).unwrap());
    assert!(lhs.agrees_with(&rhs));
}

#[test]
fn twist_then_reflect_reads_complementary_descents() {
    let b = TruncationBox::new(6, 6, 6, 0);
    let t = stat_table(6, GroundSet::Ballot, &[Statistic::Pk, Statistic::Des], Exec::default()).unwrap();
    let bs = egf_from_table(&t, &[Var::Y, Var::T], b).unwrap();
    let image = bs.reflect_t().unwrap();
    for (n, v, c) in t.rows() {
        let e = [n as u32, v[0] as u32, (n as i64 - v[1]) as u32, 0];
        assert_eq!(egf_count(&image, e).unwrap(), BigInt::from(c.clone()));
    }
    // The plain x -> xt substitution shifts by the x-degree.
    let tw = bs.twist_xt();
    assert!(matches!(tw, Err(Error::BoxTooSmall(_))));
}

#[test]
fn pk_des_closed_form_small_rows() {
    let b = TruncationBox::new(6, 6, 6, 0).with_guard(4);
    let t = stat_table(6, GroundSet::Ballot, &[Statistic::Pk, Statistic::Des], Exec::default()).unwrap();
    let closed = gf_B_pk_des(b).unwrap();
    assert_eq!(closed, egf_from_table(&t, &[Var::Y, Var::T], b).unwrap());
}

#[test]
fn insufficient_guard_is_reported() {
    let b = TruncationBox::new(4, 4, 4, 0).with_guard(1);
    assert!(matches!(build("B_pk_des", b), Err(Error::BoxTooSmall(_))));
    assert!(build("B_pk_des", b.with_guard(2)).is_ok());
}

#[test]
fn builders_are_deterministic() {
    let b = TruncationBox::uniform(6).with_guard(3);
    for name in ballotlab::series::BUILDERS {
        assert_eq!(build(name, b).unwrap().to_dump(), build(name, b).unwrap().to_dump(), "{name}");
    }
}
