//! The reversal-concatenation map `(ρ, τ) ↦ ρ^r τ`, its two inverse splitting
//! rules, and exhaustive checks of the recurrences it yields.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::combinat::Binomials;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::perm::{self, format_word, standardize, GroundSet, Permutation, StatTable, Statistic};
use crate::verify::{Counterexample, VerificationReport};

/// A pair of words whose standardizations are ballot and whose concatenation
/// is a permutation of `1..=|ρ|+|τ|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitPair {
    rho: Vec<u32>,
    tau: Vec<u32>,
}

impl SplitPair {
    pub fn new(rho: Vec<u32>, tau: Vec<u32>) -> Result<Self> {
        let mut cat = rho.clone();
        cat.extend_from_slice(&tau);
        let n = cat.len();
        Permutation::new(cat).map_err(|_| Error::InvalidSplit(format!("ρτ is not a permutation of 1..={n}")))?;
        if !standardize(&rho)?.is_ballot() {
            return Err(Error::InvalidSplit(format!("std(ρ) = std({}) is not ballot", format_word(&rho))));
        }
        if !standardize(&tau)?.is_ballot() {
            return Err(Error::InvalidSplit(format!("std(τ) = std({}) is not ballot", format_word(&tau))));
        }
        Ok(SplitPair { rho, tau })
    }

    pub fn rho(&self) -> &[u32] {
        &self.rho
    }

    pub fn tau(&self) -> &[u32] {
        &self.tau
    }

    pub fn len(&self) -> usize {
        self.rho.len() + self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `ρ = ε` or `ρ_1 > τ_1` (with `τ = ε` counting as false).
    pub fn rho_leads(&self) -> bool {
        match (self.rho.first(), self.tau.first()) {
            (None, _) => true,
            (Some(r), Some(t)) => r > t,
            (Some(_), None) => false,
        }
    }

    /// `τ = ε` or `ρ_1 < τ_1` (with `ρ = ε` counting as false).
    pub fn tau_leads(&self) -> bool {
        match (self.rho.first(), self.tau.first()) {
            (_, None) => true,
            (Some(r), Some(t)) => r < t,
            (None, Some(_)) => false,
        }
    }
}

impl fmt::Display for SplitPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |w: &[u32]| if w.is_empty() { "ε".to_string() } else { format_word(w) };
        write!(f, "({}, {})", show(&self.rho), show(&self.tau))
    }
}

pub fn phi(pair: &SplitPair) -> Permutation {
    let mut word = perm::reverse(&pair.rho);
    word.extend_from_slice(&pair.tau);
    Permutation::new(word).expect("split pair concatenates to a permutation")
}

fn split_at(p: &Permutation, l: usize) -> SplitPair {
    let w = p.as_slice();
    SplitPair::new(perm::reverse(&w[..l]), w[l..].to_vec()).expect("lowest-position split is valid")
}

/// Split with `l = min L(p) - 1`.
pub fn split_at_first_lowest(p: &Permutation) -> Result<SplitPair> {
    let low = p.lowest_positions()?;
    Ok(split_at(p, low[0] - 1))
}

/// Split with `l = max L(p)`.
pub fn split_at_last_lowest(p: &Permutation) -> Result<SplitPair> {
    let low = p.lowest_positions()?;
    Ok(split_at(p, *low.last().expect("nonempty")))
}

/// Every valid split pair of total length `n`, each exactly once.
pub fn valid_splits(n: usize) -> Result<Vec<SplitPair>> {
    let mut out = Vec::new();
    for p in perm::permutations(n)? {
        let w = p.as_slice();
        for l in 0..=n {
            let rho = perm::reverse(&w[..l]);
            if perm::is_ballot(&rho) && perm::is_ballot(&w[l..]) {
                out.push(SplitPair { rho, tau: w[l..].to_vec() });
            }
        }
    }
    Ok(out)
}

/// Right side of the descent law for `π = φ(ρ, τ)`:
/// `l - 1 - des(ρ) + des(τ) + χ(ρ = ε or ρ_1 > τ_1)`.
pub fn predicted_des(pair: &SplitPair) -> i64 {
    let l = pair.rho.len() as i64;
    l - 1 - perm::des(&pair.rho) as i64 + perm::des(&pair.tau) as i64 + i64::from(pair.rho_leads())
}

/// A statistic usable in the recurrence: it must vanish on `ε`, be invariant
/// under reversal, and split additively at the first lowest position.
pub type StatFn = fn(&[u32]) -> i64;

pub fn pk_stat(w: &[u32]) -> i64 {
    perm::pk(w) as i64
}

pub fn zero_stat(_: &[u32]) -> i64 {
    0
}

/// Check the three admissibility conditions of `st` on every permutation of length `n`.
pub fn check_additive_statistic(st: StatFn, n: usize) -> Result<Option<Counterexample>> {
    if st(&[]) != 0 {
        return Ok(Some(Counterexample::new([("n", 0)], st(&[]), 0).with_detail("st(ε) ≠ 0")));
    }
    for p in perm::permutations(n)? {
        let w = p.as_slice();
        if st(w) != st(&perm::reverse(w)) {
            return Ok(Some(
                Counterexample::new([("n", n as i64)], st(w), st(&perm::reverse(w)))
                    .with_detail(format!("reversal at {p}")),
            ));
        }
        if n >= 1 {
            let i = p.lowest_positions()?[0];
            let split = st(&w[..i - 1]) + st(&w[i - 1..]);
            if st(w) != split {
                return Ok(Some(
                    Counterexample::new([("n", n as i64)], st(w), split).with_detail(format!("additivity at {p}")),
                ));
            }
        }
    }
    Ok(None)
}

/// `(st, des)` tables over `S_n` and `B_n` for all `n <= n_max`.
#[derive(Debug, Clone)]
pub struct RecurrenceTables {
    pub all: StatTable,
    pub ballot: StatTable,
    binom: Binomials,
}

impl RecurrenceTables {
    pub fn new(n_max: usize, st: StatFn, exec: Exec) -> Result<Self> {
        let names = vec!["st".to_string(), "des".to_string()];
        let eval = move |p: &Permutation| vec![st(p.as_slice()), p.des() as i64];
        Ok(RecurrenceTables {
            all: perm::tabulate(n_max, names.clone(), |_| true, eval, exec)?,
            ballot: perm::tabulate(n_max, names, |p| p.is_ballot(), eval, exec)?,
            binom: Binomials::new(n_max),
        })
    }

    pub fn pk_des(n_max: usize, exec: Exec) -> Result<Self> {
        Ok(RecurrenceTables {
            all: perm::stat_table(n_max, GroundSet::All, &[Statistic::Pk, Statistic::Des], exec)?,
            ballot: perm::stat_table(n_max, GroundSet::Ballot, &[Statistic::Pk, Statistic::Des], exec)?,
            binom: Binomials::new(n_max),
        })
    }

    /// `p_n(k,d) + p_n(k,d-1) = Σ_{l,i,j} C(n,l) b_l(i,j) b_{n-l}(k-i, d-l+j)`
    /// for all `0 <= k <= n`, `0 <= d <= n + 1`, skipping `(n,k,d) = (0,0,1)`.
    pub fn check_e17(&self, n: usize) -> Option<Counterexample> {
        let n_i = n as i64;
        for k in 0..=n_i {
            for d in 0..=n_i + 1 {
                if (n, k, d) == (0, 0, 1) {
                    continue;
                }
                let lhs = self.all.get(n_i, &[k, d]) + self.all.get(n_i, &[k, d - 1]);
                let mut rhs = BigUint::zero();
                for l in 0..=n {
                    let c = self.binom.get(n_i, l as i64);
                    for (v, b) in self.ballot.row(l) {
                        let (i, j) = (v[0], v[1]);
                        let other = self.ballot.get(n_i - l as i64, &[k - i, d - l as i64 + j]);
                        if !other.is_zero() {
                            rhs += &c * b * other;
                        }
                    }
                }
                if lhs != rhs {
                    return Some(Counterexample::new([("n", n_i), ("k", k), ("d", d)], lhs, rhs));
                }
            }
        }
        None
    }
}

/// Eq. e17 at length `n` with every table built by enumeration.
pub fn verify_e17(n: usize) -> VerificationReport {
    VerificationReport::run("e17", Some(n), || Ok(RecurrenceTables::pk_des(n, Exec::default())?.check_e17(n)))
}

/// `(pk, depth, des)` over `S_n` and `(pk, des)` over `B_n`.
#[derive(Debug, Clone)]
pub struct DepthRecurrenceTables {
    pub all: StatTable,
    pub ballot: StatTable,
    binom: Binomials,
}

impl DepthRecurrenceTables {
    pub fn new(n_max: usize, exec: Exec) -> Result<Self> {
        Ok(DepthRecurrenceTables {
            all: perm::stat_table(n_max, GroundSet::All, &[Statistic::Pk, Statistic::Depth, Statistic::Des], exec)?,
            ballot: perm::stat_table(n_max, GroundSet::Ballot, &[Statistic::Pk, Statistic::Des], exec)?,
            binom: Binomials::new(n_max),
        })
    }

    /// `p_n(k,h,d) + p_n(k,h-1,d-1) = Σ_{i,j} C(n,2i+h) b_{2i+h}(j,i) b_{n-2i-h}(k-j, d-i-h)`
    /// for all `0 <= k, h <= n`, `0 <= d <= n + 1`, skipping `(n,k,h,d) = (0,0,1,1)`.
    pub fn check_e21(&self, n: usize) -> Option<Counterexample> {
        let n_i = n as i64;
        for k in 0..=n_i {
            for h in 0..=n_i {
                for d in 0..=n_i + 1 {
                    if (n, k, h, d) == (0, 0, 1, 1) {
                        continue;
                    }
                    let lhs = self.all.get(n_i, &[k, h, d]) + self.all.get(n_i, &[k, h - 1, d - 1]);
                    let mut rhs = BigUint::zero();
                    let mut i = 0;
                    while 2 * i + h <= n_i {
                        let len = 2 * i + h;
                        let c = self.binom.get(n_i, len);
                        for (v, b) in self.ballot.row(len as usize) {
                            let (j, des) = (v[0], v[1]);
                            if des != i {
                                continue;
                            }
                            let other = self.ballot.get(n_i - len, &[k - j, d - i - h]);
                            if !other.is_zero() {
                                rhs += &c * b * other;
                            }
                        }
                        i += 1;
                    }
                    if lhs != rhs {
                        return Some(Counterexample::new([("n", n_i), ("k", k), ("h", h), ("d", d)], lhs, rhs));
                    }
                }
            }
        }
        None
    }
}

/// Eq. e21 at length `n` with every table built by enumeration.
pub fn verify_e21(n: usize) -> VerificationReport {
    VerificationReport::run("e21", Some(n), || Ok(DepthRecurrenceTables::new(n, Exec::default())?.check_e21(n)))
}

/// Descent law on every valid split of length `n`, excluding `(ε, ε)`.
pub fn check_descent_law(n: usize) -> Result<Option<Counterexample>> {
    for pair in valid_splits(n)? {
        if pair.is_empty() {
            continue;
        }
        let actual = phi(&pair).des() as i64;
        let predicted = predicted_des(&pair);
        if actual != predicted {
            return Ok(Some(Counterexample::new([("n", n as i64)], actual, predicted).with_detail(pair.to_string())));
        }
    }
    Ok(None)
}

/// Both round trips of the map and peak additivity across the split, at length `n`.
pub fn check_round_trips(n: usize) -> Result<Option<Counterexample>> {
    let fail = |what: &str, lhs: String, rhs: String| {
        Ok(Some(Counterexample::new([("n", n as i64)], lhs, rhs).with_detail(what.to_string())))
    };
    if n >= 1 {
        for p in perm::permutations(n)? {
            for (name, split) in [("first", split_at_first_lowest(&p)?), ("last", split_at_last_lowest(&p)?)] {
                if phi(&split) != p {
                    return fail(&format!("φ∘split_{name} ≠ id"), phi(&split).to_string(), p.to_string());
                }
                let parts = perm::pk(split.rho()) + perm::pk(split.tau());
                if p.pk() != parts {
                    return fail(
                        &format!("peaks not additive across split_{name} of {p}"),
                        p.pk().to_string(),
                        parts.to_string(),
                    );
                }
                if standardize(split.rho())?.pk() != perm::pk(split.rho())
                    || standardize(split.rho())?.des() != perm::des(split.rho())
                {
                    return fail("statistics of ρ change under standardization", split.to_string(), String::new());
                }
            }
        }
    }
    for pair in valid_splits(n)? {
        if pair.is_empty() {
            continue;
        }
        let image = phi(&pair);
        if pair.rho_leads() {
            let back = split_at_first_lowest(&image)?;
            if back != pair {
                return fail("split_first∘φ ≠ id", back.to_string(), pair.to_string());
            }
        }
        if pair.tau_leads() {
            let back = split_at_last_lowest(&image)?;
            if back != pair {
                return fail("split_last∘φ ≠ id", back.to_string(), pair.to_string());
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<u32> {
        perm::parse_word(s).unwrap()
    }

    fn pair(r: &str, t: &str) -> SplitPair {
        SplitPair::new(w(r), w(t)).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&pair("341", "265")).to_string(), "143265");
        assert_eq!(phi(&pair("134", "256")).to_string(), "431256");
        for q in perm::ballot_permutations(5).unwrap() {
            assert_eq!(phi(&SplitPair::new(vec![], q.as_slice().to_vec()).unwrap()), q);
        }
    }

    #[test]
    fn invalid_pairs_rejected() {
        assert!(matches!(SplitPair::new(w("21"), w("3")), Err(Error::InvalidSplit(_))));
        assert!(matches!(SplitPair::new(w("12"), w("4")), Err(Error::InvalidSplit(_))));
        assert!(matches!(SplitPair::new(w("1"), w("1")), Err(Error::InvalidSplit(_))));
    }

    #[test]
    fn split_examples() {
        let p = |s: &str| s.parse::<Permutation>().unwrap();
        assert_eq!(split_at_first_lowest(&p("143265")).unwrap(), pair("341", "265"));
        assert_eq!(split_at_first_lowest(&p("21")).unwrap(), pair("2", "1"));
        assert_eq!(split_at_first_lowest(&p("13254")).unwrap(), pair("", "13254"));
        assert_eq!(split_at_last_lowest(&p("431256")).unwrap(), pair("134", "256"));
        assert_eq!(split_at_last_lowest(&p("123")).unwrap(), pair("1", "23"));
        assert_eq!(split_at_last_lowest(&p("21")).unwrap(), pair("12", ""));
        assert_eq!(split_at_first_lowest(&Permutation::empty()), Err(Error::EmptyPermutation));
        assert_eq!(split_at_last_lowest(&Permutation::empty()), Err(Error::EmptyPermutation));
    }

    #[test]
    fn e17_small_cases() {
        let t = RecurrenceTables::pk_des(2, Exec::default()).unwrap();
        // n = 2, k = 0, d = 0: only the l = 0 term C(2,0) b_0(0,0) b_2(0,0) = 1.
        assert_eq!(t.all.get(2, &[0, 0]), BigUint::from(1u32));
        assert!(t.check_e17(0).is_none());
        assert!(t.check_e17(1).is_none());
        assert!(t.check_e17(2).is_none());
        assert!(verify_e17(6).passed());
    }

    #[test]
    fn e17_excluded_triple_really_fails() {
        let t = RecurrenceTables::pk_des(0, Exec::default()).unwrap();
        let lhs = t.all.get(0, &[0, 1]) + t.all.get(0, &[0, 0]);
        let rhs = t.ballot.get(0, &[0, 0]) * t.ballot.get(0, &[0, 1]);
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn e21_small_cases() {
        let t = DepthRecurrenceTables::new(1, Exec::default()).unwrap();
        assert_eq!(t.all.get(1, &[0, 0, 0]), BigUint::from(1u32));
        assert!(t.check_e21(0).is_none());
        assert!(t.check_e21(1).is_none());
        assert!(verify_e21(6).passed());
    }

    #[test]
    fn e21_collapses_to_e17_when_depth_is_summed() {
        // Summing e21 over h: Σ_h p(k,h,d) + p(k,h-1,d-1) = p(k,d) + p(k,d-1).
        let deep = DepthRecurrenceTables::new(6, Exec::default()).unwrap();
        let flat = RecurrenceTables::pk_des(6, Exec::default()).unwrap();
        assert_eq!(deep.all.marginal(&[0, 2]), flat.all);
    }

    #[test]
    fn admissible_statistics() {
        for n in 0..=7 {
            assert!(check_additive_statistic(pk_stat, n).unwrap().is_none());
            assert!(check_additive_statistic(zero_stat, n).unwrap().is_none());
        }
        // des is not reversal invariant.
        fn des_stat(w: &[u32]) -> i64 {
            perm::des(w) as i64
        }
        assert!(check_additive_statistic(des_stat, 3).unwrap().is_some());
    }

    #[test]
    fn generic_statistic_recurrence() {
        for st in [zero_stat as StatFn, pk_stat] {
            let t = RecurrenceTables::new(7, st, Exec::default()).unwrap();
            for n in 0..=7 {
                assert!(t.check_e17(n).is_none(), "n = {n}");
            }
        }
    }

    #[test]
    fn descent_law_and_round_trips() {
        for n in 0..=6 {
            assert_eq!(check_descent_law(n).unwrap(), None, "n = {n}");
            assert_eq!(check_round_trips(n).unwrap(), None, "n = {n}");
        }
    }

    #[test]
    fn valid_split_count() {
        // Σ_l C(n,l) b_l b_{n-l} counts valid pairs of length n.
        let b = |n: usize| crate::combinat::ballot_count(n);
        let binom = Binomials::new(6);
        for n in 0..=6usize {
            let expected: BigUint = (0..=n).map(|l| binom.get(n as i64, l as i64) * b(l) * b(n - l)).sum();
            assert_eq!(BigUint::from(valid_splits(n).unwrap().len()), expected);
        }
    }
}
