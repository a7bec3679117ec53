//! Lexicographic streams over `S_n` and `B_n`.

use super::{is_ballot, Permutation};
use crate::error::{Error, Result};

pub const DEFAULT_ENUM_LIMIT: usize = 10;
pub const ENUM_LIMIT_ENV: &str = "BALLOTLAB_ENUM_LIMIT";

/// Largest `n` the enumerators accept; `BALLOTLAB_ENUM_LIMIT` overrides the default.
pub fn enum_limit() -> usize {
    std::env::var(ENUM_LIMIT_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_ENUM_LIMIT)
}

pub(crate) fn check_limit(n: usize) -> Result<()> {
    let limit = enum_limit();
    if n > limit {
        return Err(Error::EnumerationLimit { n, limit });
    }
    Ok(())
}

/// Every permutation of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Result<Permutations> {
    check_limit(n)?;
    Ok(Permutations::new(n))
}

pub(crate) fn permutations_with_first(n: usize, first: u32) -> Permutations {
    Permutations::with_first(n, first)
}

/// Every ballot permutation of `1..=n` in lexicographic order.
pub fn ballot_permutations(n: usize) -> Result<BallotPermutations> {
    Ok(BallotPermutations(permutations(n)?))
}

/// Lexicographic stream; optionally the first letter is pinned so that `S_n`
/// can be partitioned across workers.
#[derive(Debug, Clone)]
pub struct Permutations {
    start: Vec<u32>,
    next: Option<Vec<u32>>,
    fixed: usize,
}

impl Permutations {
    pub(crate) fn new(n: usize) -> Self {
        let start: Vec<u32> = (1..=n as u32).collect();
        Permutations { next: Some(start.clone()), start, fixed: 0 }
    }

    /// Permutations of `1..=n` starting with `first`, in lexicographic order.
    pub(crate) fn with_first(n: usize, first: u32) -> Self {
        assert!(first >= 1 && first as usize <= n);
        let mut start = vec![first];
        start.extend((1..=n as u32).filter(|&v| v != first));
        Permutations { next: Some(start.clone()), start, fixed: 1 }
    }

    /// Rewind to the first permutation.
    pub fn restart(&mut self) {
        self.next = Some(self.start.clone());
    }
}

fn next_permutation(w: &mut [u32]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ[self.fixed..]) {
            self.next = Some(succ);
        }
        Some(Permutation::from_vec_unchecked(current))
    }
}

#[derive(Debug, Clone)]
pub struct BallotPermutations(Permutations);

impl BallotPermutations {
    pub fn restart(&mut self) {
        self.0.restart();
    }
}

impl Iterator for BallotPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.0.by_ref().find(|p| is_ballot(p.as_slice()))
    }
}
