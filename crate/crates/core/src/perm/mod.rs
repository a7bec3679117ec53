//! Permutations in one-line notation and their linear statistics.

mod enumerate;
mod eulerian;
mod table;

pub use enumerate::{
    ballot_permutations, enum_limit, permutations, BallotPermutations, Permutations, DEFAULT_ENUM_LIMIT, ENUM_LIMIT_ENV,
};
pub(crate) use enumerate::{check_limit as enumerate_check_limit, permutations_with_first};
pub use eulerian::{eulerian, EulerianTable};
pub use table::{stat_table, tabulate, GroundSet, StatTable, Statistic};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation. `n = 0` is the empty permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    pub(crate) fn from_vec_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Image of `i` (1-based) under the permutation.
    pub fn apply(&self, i: u32) -> u32 {
        self.0[i as usize - 1]
    }

    pub fn des(&self) -> usize {
        des(&self.0)
    }

    pub fn asc(&self) -> usize {
        asc(&self.0)
    }

    pub fn height(&self) -> i64 {
        height(&self.0)
    }

    pub fn prefix_heights(&self) -> Result<Vec<i64>> {
        prefix_heights(&self.0)
    }

    pub fn depth(&self) -> usize {
        depth(&self.0)
    }

    pub fn lowest_positions(&self) -> Result<Vec<usize>> {
        lowest_positions(&self.0)
    }

    pub fn is_ballot(&self) -> bool {
        is_ballot(&self.0)
    }

    pub fn is_dyck(&self) -> bool {
        is_ballot(&self.0) && height(&self.0) == 0
    }

    pub fn pk(&self) -> usize {
        pk(&self.0)
    }

    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.0)
    }
}

/// Digits are concatenated when every letter is below 10, otherwise letters
/// are separated by spaces. `ε` prints as the empty string.
pub(crate) fn write_word(f: &mut impl fmt::Write, word: &[u32]) -> fmt::Result {
    if word.iter().all(|&v| v < 10) {
        for v in word {
            write!(f, "{v}")?;
        }
    } else {
        for (i, v) in word.iter().enumerate() {
            if i > 0 {
                f.write_char(' ')?;
            }
            write!(f, "{v}")?;
        }
    }
    Ok(())
}

pub fn format_word(word: &[u32]) -> String {
    let mut s = String::new();
    write_word(&mut s, word).expect("writing to a String");
    s
}

/// Parse a word: either whitespace/comma separated integers or a run of
/// single digits (`"5641327"`). `"ε"` and `""` give the empty word.
pub fn parse_word(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() || s == "ε" || s == "e" {
        return Ok(Vec::new());
    }
    let bad = || Error::Domain(format!("cannot parse word `{s}`"));
    if s.contains(|c: char| c.is_whitespace() || c == ',') {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| bad()))
            .collect()
    } else {
        s.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect()
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_word(s)?)
    }
}

// The statistics below are defined on any word of distinct integers; they are
// invariant under standardization.

pub fn des(w: &[u32]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

pub fn asc(w: &[u32]) -> usize {
    w.windows(2).filter(|p| p[0] < p[1]).count()
}

pub fn height(w: &[u32]) -> i64 {
    asc(w) as i64 - des(w) as i64
}

/// Heights of the prefixes of length `1..=n`; the first entry is always 0.
pub fn prefix_heights(w: &[u32]) -> Result<Vec<i64>> {
    if w.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    let mut h = 0i64;
    let mut out = Vec::with_capacity(w.len());
    out.push(0);
    for p in w.windows(2) {
        h += if p[0] < p[1] { 1 } else { -1 };
        out.push(h);
    }
    Ok(out)
}

pub fn depth(w: &[u32]) -> usize {
    match prefix_heights(w) {
        Ok(hs) => (-hs.into_iter().min().unwrap_or(0)) as usize,
        Err(_) => 0,
    }
}

/// 1-based positions whose prefix height equals `-depth`, in increasing order.
pub fn lowest_positions(w: &[u32]) -> Result<Vec<usize>> {
    let hs = prefix_heights(w)?;
    let low = *hs.iter().min().expect("nonempty");
    Ok(hs.iter().enumerate().filter(|(_, &h)| h == low).map(|(i, _)| i + 1).collect())
}

pub fn is_ballot(w: &[u32]) -> bool {
    let mut h = 0i64;
    for p in w.windows(2) {
        h += if p[0] < p[1] { 1 } else { -1 };
        if h < 0 {
            return false;
        }
    }
    true
}

pub fn pk(w: &[u32]) -> usize {
    w.windows(3).filter(|p| p[0] < p[1] && p[1] > p[2]).count()
}

pub fn reverse(w: &[u32]) -> Vec<u32> {
    w.iter().rev().copied().collect()
}

/// Replace each letter by its rank, giving the order-isomorphic permutation.
pub fn standardize(w: &[u32]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by_key(|&i| w[i]);
    if let Some(p) = order.windows(2).find(|p| w[p[0]] == w[p[1]]) {
        return Err(Error::RepeatedEntry(w[p[0]]));
    }
    let mut out = vec![0u32; w.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Ok(Permutation(out))
}
