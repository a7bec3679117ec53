//! Cycle decompositions, odd order permutations, and the cyclic statistic `M`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;
use serde_json::Value;

use crate::combinat::Binomials;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::perm::{self, EulerianTable, Permutation, StatTable};

/// Cycles rotated to start at their minimum, sorted by minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleForm {
    cycles: Vec<Vec<u32>>,
    n: usize,
}

impl CycleForm {
    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut word = vec![0u32; self.n];
        for c in &self.cycles {
            for (k, &v) in c.iter().enumerate() {
                word[v as usize - 1] = c[(k + 1) % c.len()];
            }
        }
        Permutation::new(word).expect("cycles partition 1..=n")
    }
}

pub fn cycle_decomposition(p: &Permutation) -> CycleForm {
    let n = p.len();
    let mut seen = vec![false; n + 1];
    let mut cycles = Vec::new();
    // Scanning starts in increasing order, so each cycle begins at its minimum
    // and cycles come out sorted by minimum.
    for start in 1..=n as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut c = Vec::new();
        let mut v = start;
        while !seen[v as usize] {
            seen[v as usize] = true;
            c.push(v);
            v = p.apply(v);
        }
        cycles.push(c);
    }
    CycleForm { cycles, n }
}

pub fn is_odd_order(p: &Permutation) -> bool {
    cycle_decomposition(p).cycles.iter().all(|c| c.len() % 2 == 1)
}

/// Cyclic descents `c_i > c_{i+1}` with `c_{k+1} = c_1`. A fixed point has none.
pub fn cdes(c: &[u32]) -> Result<usize> {
    if c.is_empty() {
        return Err(Error::EmptyCycle);
    }
    Ok((0..c.len()).filter(|&i| c[i] > c[(i + 1) % c.len()]).count())
}

/// Cyclic ascents `c_i < c_{i+1}` with `c_{k+1} = c_1`. A fixed point has none.
pub fn casc(c: &[u32]) -> Result<usize> {
    if c.is_empty() {
        return Err(Error::EmptyCycle);
    }
    Ok((0..c.len()).filter(|&i| c[i] < c[(i + 1) % c.len()]).count())
}

/// `M(p) = Σ_c min(cdes(c), casc(c))` over the cycles of `p`.
#[allow(non_snake_case)]
pub fn M(p: &Permutation) -> usize {
    cycle_statistic(&cycle_decomposition(p))
}

fn cycle_statistic(form: &CycleForm) -> usize {
    form.cycles.iter().map(|c| cdes(c).expect("nonempty").min(casc(c).expect("nonempty"))).sum()
}

/// `|O_n(d)|` for `n <= n_max`, stored as a one-statistic table over `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddOrderTable(StatTable);

impl OddOrderTable {
    fn empty(n_max: usize) -> Self {
        OddOrderTable(StatTable::new(vec!["M".into()], n_max))
    }

    pub fn get(&self, n: i64, d: i64) -> BigUint {
        self.0.get(n, &[d])
    }

    pub fn n_max(&self) -> usize {
        self.0.n_max()
    }

    pub fn total(&self, n: usize) -> BigUint {
        self.0.total(n)
    }

    /// `(d, count)` pairs of row `n`, increasing in `d`.
    pub fn row(&self, n: usize) -> Vec<(i64, BigUint)> {
        self.0.row(n).map(|(v, c)| (v[0], c.clone())).collect()
    }

    pub fn as_stat_table(&self) -> &StatTable {
        &self.0
    }

    pub fn to_csv(&self) -> String {
        self.0.to_csv()
    }

    pub fn to_json(&self) -> Value {
        self.0.to_json()
    }
}

/// Counts of odd order permutations by `M`, filtering `S_n` exhaustively.
pub fn odd_order_table(n_max: usize, exec: Exec) -> Result<OddOrderTable> {
    let t = perm::tabulate(n_max, vec!["M".into()], is_odd_order, |p| vec![M(p) as i64], exec)?;
    Ok(OddOrderTable(t))
}

/// Counts from the recurrence
/// `|O_{n+1}(d)| = |O_n(d)| + Σ_i Σ_{k≥i} 2 C(n,2k) E(2k,i-1) |O_{n-2k}(d-i)|`
/// seeded with `|O_0(0)| = |O_1(0)| = 1`. No enumeration is involved.
pub fn spiro_recurrence_table(n_max: usize) -> OddOrderTable {
    let binom = Binomials::new(n_max);
    let euler = EulerianTable::new(n_max);
    // rows[n][d] = |O_n(d)|; d never exceeds n/2.
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::from(1u32)]];
    if n_max >= 1 {
        rows.push(vec![BigUint::from(1u32)]);
    }
    let at = |rows: &Vec<Vec<BigUint>>, n: i64, d: i64| -> BigUint {
        if n < 0 || d < 0 {
            return BigUint::zero();
        }
        rows[n as usize].get(d as usize).cloned().unwrap_or_default()
    };
    for n in 1..n_max {
        let d_max = (n + 1) as i64 / 2;
        let mut next = Vec::new();
        for d in 0..=d_max {
            let mut acc = at(&rows, n as i64, d);
            for k in 1..=(n / 2) as i64 {
                for i in 1..=k {
                    let e = euler.get(2 * k, i - 1);
                    if e.is_zero() {
                        continue;
                    }
                    let o = at(&rows, n as i64 - 2 * k, d - i);
                    if o.is_zero() {
                        continue;
                    }
                    acc += BigUint::from(2u32) * binom.get(n as i64, 2 * k) * e * o;
                }
            }
            next.push(acc);
        }
        while next.last().is_some_and(Zero::is_zero) {
            next.pop();
        }
        rows.push(next);
    }
    let mut t = OddOrderTable::empty(n_max);
    for (n, row) in rows.into_iter().enumerate().take(n_max + 1) {
        for (d, c) in row.into_iter().enumerate() {
            t.0.add(n, vec![d as i64], c);
        }
    }
    t
}

fn check_factor_domain(n: usize, i: u32, j: u32) -> Result<bool> {
    perm::enumerate_check_limit(n)?;
    if n < 3 {
        return Ok(false);
    }
    let ok = |v: u32| v >= 1 && (v as usize) < n;
    if !ok(i) || !ok(j) || i == j {
        return Err(Error::Domain(format!(
            "factor letters must be distinct values in 1..={}, got i = {i}, j = {j}",
            n - 1
        )));
    }
    Ok(true)
}

/// Ballot permutations of length `n` with `d` descents containing the factor `i n j`.
pub fn factor_count_ballot(n: usize, d: usize, i: u32, j: u32) -> Result<BigUint> {
    if !check_factor_domain(n, i, j)? {
        return Ok(BigUint::zero());
    }
    let top = n as u32;
    let count = perm::ballot_permutations(n)?
        .filter(|p| p.des() == d && p.as_slice().windows(3).any(|w| w == [i, top, j]))
        .count();
    Ok(BigUint::from(count))
}

/// Odd order permutations of length `n` with `M = d` in which `n`'s cycle
/// visits `i -> n -> j` consecutively.
pub fn cyclic_factor_count_odd(n: usize, d: usize, i: u32, j: u32) -> Result<BigUint> {
    if !check_factor_domain(n, i, j)? {
        return Ok(BigUint::zero());
    }
    let top = n as u32;
    let count = perm::permutations(n)?
        .filter(|p| p.apply(i) == top && p.apply(top) == j && is_odd_order(p) && M(p) == d)
        .count();
    Ok(BigUint::from(count))
}

/// Both factor-count families for one `n`, from a single pass over `S_n`.
/// Keys are `(d, i, j)`.
#[derive(Debug, Clone, Default)]
pub struct FactorCounts {
    pub ballot: BTreeMap<(usize, u32, u32), BigUint>,
    pub odd: BTreeMap<(usize, u32, u32), BigUint>,
}

impl FactorCounts {
    pub fn ballot(&self, d: usize, i: u32, j: u32) -> BigUint {
        self.ballot.get(&(d, i, j)).cloned().unwrap_or_default()
    }

    pub fn odd(&self, d: usize, i: u32, j: u32) -> BigUint {
        self.odd.get(&(d, i, j)).cloned().unwrap_or_default()
    }

    fn merge(mut self, other: FactorCounts) -> FactorCounts {
        for (k, v) in other.ballot {
            *self.ballot.entry(k).or_default() += v;
        }
        for (k, v) in other.odd {
            *self.odd.entry(k).or_default() += v;
        }
        self
    }
}

pub fn factor_counts(n: usize, exec: Exec) -> Result<FactorCounts> {
    perm::enumerate_check_limit(n)?;
    if n < 3 {
        return Ok(FactorCounts::default());
    }
    let top = n as u32;
    let firsts: Vec<u32> = (1..=top).collect();
    Ok(exec.map_reduce(
        firsts,
        |first| {
            let mut fc = FactorCounts::default();
            for p in perm::permutations_with_first(n, first) {
                let w = p.as_slice();
                let pos = w.iter().position(|&v| v == top).expect("n occurs");
                if pos > 0 && pos + 1 < n && p.is_ballot() {
                    *fc.ballot.entry((p.des(), w[pos - 1], w[pos + 1])).or_default() += 1u32;
                }
                let (pre, post) = (inverse_at(w, top), p.apply(top));
                if pre != top && pre != post && is_odd_order(&p) {
                    *fc.odd.entry((M(&p), pre, post)).or_default() += 1u32;
                }
            }
            fc
        },
        FactorCounts::default,
        FactorCounts::merge,
    ))
}

fn inverse_at(w: &[u32], v: u32) -> u32 {
    w.iter().position(|&x| x == v).expect("letter occurs") as u32 + 1
}

/// One instance of `b_{n,d}(1,j) + b_{n,d}(j,1) = 2 p_{n,d}(1,j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRecord {
    pub n: usize,
    pub d: usize,
    pub i: u32,
    pub j: u32,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

/// All instances for one `n`: every `d` and every `2 <= j <= n-1`.
pub fn conjecture_wz_records(n: usize, exec: Exec) -> Result<Vec<ConjectureRecord>> {
    let fc = factor_counts(n, exec)?;
    let mut out = Vec::new();
    if n < 3 {
        return Ok(out);
    }
    for d in 0..=(n - 1) / 2 {
        for j in 2..n as u32 {
            let lhs = fc.ballot(d, 1, j) + fc.ballot(d, j, 1);
            let rhs = BigUint::from(2u32) * fc.odd(d, 1, j);
            out.push(ConjectureRecord { n, d, i: 1, j, equal: lhs == rhs, lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
    }
    Ok(out)
}
