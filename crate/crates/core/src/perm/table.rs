//! Joint distributions of statistics, tabulated by exhaustive enumeration.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::{Map, Number, Value};

use super::enumerate::{check_limit, Permutations};
use super::Permutation;
use crate::error::{Error, Result};
use crate::par::Exec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Des,
    Asc,
    Pk,
    Depth,
    Height,
}

impl Statistic {
    pub fn name(self) -> &'static str {
        match self {
            Statistic::Des => "des",
            Statistic::Asc => "asc",
            Statistic::Pk => "pk",
            Statistic::Depth => "depth",
            Statistic::Height => "height",
        }
    }

    pub fn eval(self, w: &[u32]) -> i64 {
        match self {
            Statistic::Des => super::des(w) as i64,
            Statistic::Asc => super::asc(w) as i64,
            Statistic::Pk => super::pk(w) as i64,
            Statistic::Depth => super::depth(w) as i64,
            Statistic::Height => super::height(w),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "des" => Statistic::Des,
            "asc" => Statistic::Asc,
            "pk" => Statistic::Pk,
            "depth" | "dp" => Statistic::Depth,
            "height" | "h" => Statistic::Height,
            other => return Err(Error::UnknownStatistic(other.to_string())),
        })
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroundSet {
    All,
    Ballot,
}

/// Exact counts indexed by `(n, value tuple)`. Rows iterate in canonical
/// order: by `n`, then lexicographically by the value tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTable {
    stat_names: Vec<String>,
    entries: BTreeMap<(usize, Vec<i64>), BigUint>,
    n_max: usize,
}

impl StatTable {
    pub fn new(stat_names: Vec<String>, n_max: usize) -> Self {
        StatTable { stat_names, entries: BTreeMap::new(), n_max }
    }

    pub fn stat_names(&self) -> &[String] {
        &self.stat_names
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn add(&mut self, n: usize, values: Vec<i64>, count: BigUint) {
        debug_assert_eq!(values.len(), self.stat_names.len());
        if count.is_zero() {
            return;
        }
        self.n_max = self.n_max.max(n);
        *self.entries.entry((n, values)).or_default() += count;
    }

    fn bump(&mut self, n: usize, values: Vec<i64>) {
        *self.entries.entry((n, values)).or_default() += 1u32;
    }

    /// Count at `(n, values)`; zero for negative or absent keys.
    pub fn get(&self, n: i64, values: &[i64]) -> BigUint {
        if n < 0 {
            return BigUint::zero();
        }
        self.entries.get(&(n as usize, values.to_vec())).cloned().unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> impl Iterator<Item = (&[i64], &BigUint)> {
        self.entries.range((n, Vec::new())..(n + 1, Vec::new())).map(|((_, v), c)| (v.as_slice(), c))
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &[i64], &BigUint)> {
        self.entries.iter().map(|((n, v), c)| (*n, v.as_slice(), c))
    }

    pub fn total(&self, n: usize) -> BigUint {
        self.row(n).map(|(_, c)| c).sum()
    }

    /// Sum of two tables over the same statistics. Associative and commutative.
    pub fn merge(mut self, other: StatTable) -> StatTable {
        if self.stat_names.is_empty() && self.entries.is_empty() {
            return StatTable { n_max: self.n_max.max(other.n_max), ..other };
        }
        assert_eq!(self.stat_names, other.stat_names, "merging tables over different statistics");
        self.n_max = self.n_max.max(other.n_max);
        for (k, c) in other.entries {
            *self.entries.entry(k).or_default() += c;
        }
        self
    }

    /// Marginal distribution over the statistics at `keep` (in that order).
    pub fn marginal(&self, keep: &[usize]) -> StatTable {
        let names = keep.iter().map(|&i| self.stat_names[i].clone()).collect();
        let mut out = StatTable::new(names, self.n_max);
        for ((n, v), c) in &self.entries {
            out.add(*n, keep.iter().map(|&i| v[i]).collect(), c.clone());
        }
        out
    }

    /// CSV with header `n,<stat names...>,count`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n");
        for name in &self.stat_names {
            s.push(',');
            s.push_str(name);
        }
        s.push_str(",count\n");
        for ((n, v), c) in &self.entries {
            write!(s, "{n}").unwrap();
            for x in v {
                write!(s, ",{x}").unwrap();
            }
            writeln!(s, ",{c}").unwrap();
        }
        s
    }

    /// JSON array of row objects `{"n": .., <stat>: .., "count": ..}`.
    pub fn to_json(&self) -> Value {
        let rows = self
            .entries
            .iter()
            .map(|((n, v), c)| {
                let mut obj = Map::new();
                obj.insert("n".into(), Value::from(*n));
                for (name, x) in self.stat_names.iter().zip(v) {
                    obj.insert(name.clone(), Value::from(*x));
                }
                let count: Number = c.to_string().parse().expect("decimal digits");
                obj.insert("count".into(), Value::Number(count));
                Value::Object(obj)
            })
            .collect();
        Value::Array(rows)
    }
}

/// Tabulate `eval` over the permutations of length `0..=n_max` accepted by
/// `filter`. Work is split by length and first letter.
pub fn tabulate<F, E>(n_max: usize, stat_names: Vec<String>, filter: F, eval: E, exec: Exec) -> Result<StatTable>
where
    F: Fn(&Permutation) -> bool + Sync + Send,
    E: Fn(&Permutation) -> Vec<i64> + Sync + Send,
{
    check_limit(n_max)?;
    let mut chunks: Vec<(usize, u32)> = vec![(0, 0)];
    for n in 1..=n_max {
        chunks.extend((1..=n as u32).map(|a| (n, a)));
    }
    let names = stat_names.clone();
    let table = exec.map_reduce(
        chunks,
        |(n, first)| {
            let mut t = StatTable::new(names.clone(), n);
            let stream = if n == 0 { Permutations::new(0) } else { Permutations::with_first(n, first) };
            for p in stream.filter(|p| filter(p)) {
                t.bump(n, eval(&p));
            }
            t
        },
        || StatTable::new(Vec::new(), 0),
        StatTable::merge,
    );
    let mut table = StatTable { stat_names, ..table };
    table.n_max = n_max;
    Ok(table)
}

/// Joint distribution of `stats` over `S_n` or `B_n` for every `n <= n_max`.
pub fn stat_table(n_max: usize, ground: GroundSet, stats: &[Statistic], exec: Exec) -> Result<StatTable> {
    let names = stats.iter().map(|s| s.name().to_string()).collect();
    let stats = stats.to_vec();
    let eval = move |p: &Permutation| stats.iter().map(|s| s.eval(p.as_slice())).collect();
    match ground {
        GroundSet::All => tabulate(n_max, names, |_| true, eval, exec),
        GroundSet::Ballot => tabulate(n_max, names, |p| p.is_ballot(), eval, exec),
    }
}

impl StatTable {
    /// Parse statistic identifiers such as `"pk,des"`.
    pub fn parse_stats(spec: &str) -> Result<Vec<Statistic>> {
        spec.split(',').map(|s| s.trim().parse()).collect()
    }

    /// The single-entry table of the empty permutation.
    pub fn unit(stat_names: Vec<String>) -> StatTable {
        let k = stat_names.len();
        let mut t = StatTable::new(stat_names, 0);
        t.add(0, vec![0; k], BigUint::one());
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{ballot_count, factorial};

    fn row(t: &StatTable, n: usize) -> Vec<(Vec<i64>, u64)> {
        t.row(n).map(|(v, c)| (v.to_vec(), u64::try_from(c).unwrap())).collect()
    }

    #[test]
    fn printed_rows() {
        let t = stat_table(5, GroundSet::Ballot, &[Statistic::Des], Exec::default()).unwrap();
        assert_eq!(row(&t, 5), vec![(vec![0], 1), (vec![1], 22), (vec![2], 22)]);
        let t = stat_table(5, GroundSet::Ballot, &[Statistic::Pk], Exec::default()).unwrap();
        assert_eq!(row(&t, 5), vec![(vec![0], 1), (vec![1], 28), (vec![2], 16)]);
        let t = stat_table(3, GroundSet::All, &[Statistic::Depth], Exec::default()).unwrap();
        assert_eq!(row(&t, 3), vec![(vec![0], 3), (vec![1], 2), (vec![2], 1)]);
    }

    #[test]
    fn row_sums() {
        let all = stat_table(7, GroundSet::All, &[Statistic::Pk, Statistic::Height], Exec::default()).unwrap();
        let bal = stat_table(7, GroundSet::Ballot, &[Statistic::Asc], Exec::default()).unwrap();
        for n in 0..=7 {
            assert_eq!(all.total(n), factorial(n));
            assert_eq!(bal.total(n), ballot_count(n));
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let stats = [Statistic::Pk, Statistic::Depth, Statistic::Des];
        let a = stat_table(7, GroundSet::All, &stats, Exec::Sequential).unwrap();
        let b = stat_table(7, GroundSet::All, &stats, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn merge_is_order_independent() {
        let s = vec!["des".to_string()];
        let mut a = StatTable::new(s.clone(), 2);
        a.add(2, vec![1], BigUint::from(3u32));
        let mut b = StatTable::new(s.clone(), 3);
        b.add(3, vec![0], BigUint::from(1u32));
        b.add(2, vec![1], BigUint::from(2u32));
        let mut c = StatTable::new(s, 1);
        c.add(1, vec![0], BigUint::from(1u32));
        let left = a.clone().merge(b.clone()).merge(c.clone());
        let right = c.merge(b.merge(a));
        assert_eq!(left, right);
        assert_eq!(left.get(2, &[1]), BigUint::from(5u32));
    }

    #[test]
    fn marginal_of_joint() {
        let joint = stat_table(6, GroundSet::All, &[Statistic::Pk, Statistic::Des], Exec::default()).unwrap();
        let des = stat_table(6, GroundSet::All, &[Statistic::Des], Exec::default()).unwrap();
        assert_eq!(joint.marginal(&[1]).to_csv(), des.to_csv());
    }

    #[test]
    fn csv_and_json_export() {
        let t = stat_table(3, GroundSet::Ballot, &[Statistic::Des], Exec::default()).unwrap();
        assert_eq!(t.to_csv(), "n,des,count\n0,0,1\n1,0,1\n2,0,1\n3,0,1\n3,1,2\n");
        let j = t.to_json();
        assert_eq!(j[4], serde_json::json!({"n": 3, "des": 1, "count": 2}));
    }

    #[test]
    fn unknown_statistic() {
        assert_eq!(StatTable::parse_stats("pk,foo"), Err(Error::UnknownStatistic("foo".into())));
    }

    #[test]
    fn negative_lookup_is_zero() {
        let t = stat_table(2, GroundSet::All, &[Statistic::Des], Exec::default()).unwrap();
        assert!(t.get(-1, &[0]).is_zero());
        assert!(t.get(2, &[-1]).is_zero());
    }
}
