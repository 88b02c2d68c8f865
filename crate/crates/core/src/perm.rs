//! Permutations of `1..=n` in one-line notation, their descent-based
//! statistics, and lexicographic enumeration of the permutations with a
//! fixed last entry.
//!
//! Positions and values are 1-indexed at every public surface.

use std::fmt;

use crate::error::{Error, Result};
use crate::factorial;

/// Largest `n` accepted by the enumeration entry points.
pub const MAX_ENUMERATION_N: usize = 64;

/// A permutation `σ_1 … σ_n` of `{1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    elems: Vec<u32>,
}

impl Permutation {
    /// Validates `values` as a rearrangement of `1..=n`, `n = values.len()`.
    ///
    /// The error names the first value (in reading order) that is out of
    /// range or repeats an earlier one. A sequence with neither defect is
    /// necessarily a rearrangement.
    pub fn new<I>(values: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let values: Vec<i64> = values.into_iter().map(Into::into).collect();
        if values.is_empty() {
            return Err(Error::Empty);
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        let mut elems = Vec::with_capacity(n);
        for &value in &values {
            if value < 1 || value > n as i64 {
                return Err(Error::ValueOutOfRange { value, n });
            }
            let slot = &mut seen[value as usize];
            if *slot {
                return Err(Error::DuplicateValue(value));
            }
            *slot = true;
            elems.push(value as u32);
        }
        Ok(Self { elems })
    }

    /// Wraps a slice already known to be a permutation.
    pub(crate) fn from_trusted(elems: Vec<u32>) -> Self {
        debug_assert!(Self::new(elems.iter().copied()).is_ok());
        Self { elems }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutation size must be positive");
        Self::from_trusted((1..=n as u32).collect())
    }

    /// `n (n-1) … 1`.
    pub fn reversed(n: usize) -> Self {
        assert!(n >= 1, "permutation size must be positive");
        Self::from_trusted((1..=n as u32).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.elems.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.elems
    }

    /// `σ_i` for a 1-based position.
    pub fn get(&self, position: usize) -> Option<u32> {
        position
            .checked_sub(1)
            .and_then(|i| self.elems.get(i).copied())
    }

    /// `σ_n`.
    pub fn last(&self) -> u32 {
        *self.elems.last().expect("permutations are nonempty")
    }

    pub fn descent_set(&self) -> DescentSet {
        DescentSet {
            positions: self
                .elems
                .windows(2)
                .enumerate()
                .filter(|(_, w)| w[0] > w[1])
                .map(|(i, _)| i + 1)
                .collect(),
        }
    }

    /// Number of pairs `i < j` with `σ_i > σ_j`.
    pub fn inv(&self) -> u64 {
        inversions(&self.elems)
    }

    /// `Σ_{i=1}^{n-1} i(n-i) χ(σ_{i+1} < σ_i)`.
    pub fn baj(&self) -> u64 {
        baj(&self.elems)
    }

    /// `baj − inv`, which is never negative.
    pub fn baj_minus_inv(&self) -> u64 {
        baj_minus_inv(&self.elems)
    }

    pub fn classic_stats(&self) -> ClassicStats {
        let descents = self.descent_set();
        ClassicStats {
            des: descents.len(),
            maj: descents.iter().map(|i| i as u64).sum(),
        }
    }

    /// Digit-string form such as `5472361`, only defined for `n ≤ 9`.
    pub fn compact(&self) -> Option<String> {
        (self.n() <= 9).then(|| self.elems.iter().map(|v| v.to_string()).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Descent positions `i ∈ 1..n-1` with `σ_i > σ_{i+1}`, strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DescentSet {
    positions: Vec<usize>,
}

impl DescentSet {
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.positions.iter().copied()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.positions.binary_search(&position).is_ok()
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.positions.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Number of descents and major index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicStats {
    pub des: usize,
    pub maj: u64,
}

pub(crate) fn inversions(elems: &[u32]) -> u64 {
    let mut count = 0u64;
    for (i, &a) in elems.iter().enumerate() {
        count += elems[i + 1..].iter().filter(|&&b| b < a).count() as u64;
    }
    count
}

pub(crate) fn baj(elems: &[u32]) -> u64 {
    let n = elems.len() as u64;
    elems
        .windows(2)
        .zip(1u64..)
        .filter(|(w, _)| w[1] < w[0])
        .map(|(_, i)| i * (n - i))
        .sum()
}

pub(crate) fn baj_minus_inv(elems: &[u32]) -> u64 {
    let (b, i) = (baj(elems), inversions(elems));
    debug_assert!(b >= i, "baj < inv for {elems:?}");
    b - i
}

/// Largest attainable `baj − inv` for size `n`: `Σ_{i=1}^{n-1} (i-1)(n-i)`.
pub fn max_baj_minus_inv(n: usize) -> u64 {
    let n = n as u64;
    (1..n).map(|i| (i - 1) * (n - i)).sum()
}

fn check_size_and_last(n: usize, k: i64) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::AboveCeiling {
            n,
            ceiling: MAX_ENUMERATION_N,
        });
    }
    if k < 1 || k > n as i64 {
        return Err(Error::LastValueOutOfRange { k, n });
    }
    Ok(k as u32)
}

/// Streams every permutation of `1..=n` ending in `k`, in lexicographic
/// order of the first `n-1` entries.
pub fn iterate_with_last(n: usize, k: i64) -> Result<WithLast> {
    let k = check_size_and_last(n, k)?;
    let mut elems: Vec<u32> = (1..=n as u32).filter(|&v| v != k).collect();
    elems.push(k);
    Ok(WithLast {
        elems,
        started: false,
        exhausted: false,
        remaining: None,
    })
}

/// All of `S_n`, grouped by last entry `k = 1..=n`.
pub fn iterate_all(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    let streams = (1..=n as i64)
        .map(|k| iterate_with_last(n, k))
        .collect::<Result<Vec<_>>>()?;
    if streams.is_empty() {
        return Err(Error::ZeroSize);
    }
    Ok(streams.into_iter().flatten())
}

/// Lexicographic enumeration of `{σ ∈ S_n : σ_n = k}`.
///
/// [`WithLast::advance`] walks the stream without allocating; the
/// [`Iterator`] impl clones each permutation out.
#[derive(Clone, Debug)]
pub struct WithLast {
    elems: Vec<u32>,
    started: bool,
    exhausted: bool,
    remaining: Option<u64>,
}

impl WithLast {
    /// The contiguous run of `len` permutations starting at lexicographic
    /// index `start` of the full `(n, k)` stream.
    pub fn block(n: usize, k: i64, start: u64, len: u64) -> Result<Self> {
        let mut stream = iterate_with_last(n, k)?;
        let total = factorial(n - 1)
            .filter(|&t| t <= u64::MAX as u128)
            .ok_or(Error::Overflow("block index"))? as u64;
        if start >= total && !(start == 0 && len == 0) {
            return Err(Error::IndexOutOfRange {
                index: start as u128,
                max: total as u128 - 1,
            });
        }
        let prefix = &mut stream.elems[..n - 1];
        unrank_lex(prefix, start as u128);
        stream.remaining = Some(len.min(total - start));
        Ok(stream)
    }

    /// Moves to the next permutation and borrows it.
    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.exhausted || self.remaining == Some(0) {
            return None;
        }
        if self.started {
            let m = self.elems.len() - 1;
            if !next_lex(&mut self.elems[..m]) {
                self.exhausted = true;
                return None;
            }
        } else {
            self.started = true;
        }
        if let Some(r) = self.remaining.as_mut() {
            *r -= 1;
        }
        Some(&self.elems)
    }
}

impl Iterator for WithLast {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.advance()
            .map(|s| Permutation::from_trusted(s.to_vec()))
    }
}

/// Rearranges `s` into its lexicographic successor; `false` once `s` is
/// the last (descending) arrangement.
fn next_lex(s: &mut [u32]) -> bool {
    if s.len() < 2 {
        return false;
    }
    let mut i = s.len() - 1;
    while i > 0 && s[i - 1] >= s[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = s.len() - 1;
    while s[j] <= s[i - 1] {
        j -= 1;
    }
    s.swap(i - 1, j);
    s[i..].reverse();
    true
}

/// Position of `s` among the arrangements of its own values, in
/// lexicographic order.
pub fn lex_rank(s: &[u32]) -> u128 {
    let m = s.len();
    let mut rank = 0u128;
    for i in 0..m {
        let smaller_after = s[i + 1..].iter().filter(|&&b| b < s[i]).count() as u128;
        rank += smaller_after * factorial(m - 1 - i).expect("lex_rank: length too large");
    }
    rank
}

/// Overwrites `s` (whose values are taken as the alphabet) with the
/// arrangement at lexicographic index `idx`.
fn unrank_lex(s: &mut [u32], mut idx: u128) {
    let mut pool: Vec<u32> = s.to_vec();
    pool.sort_unstable();
    let m = s.len();
    for (i, slot) in s.iter_mut().enumerate() {
        let place = factorial(m - 1 - i).expect("unrank_lex: length too large");
        let d = (idx / place) as usize;
        idx %= place;
        *slot = pool.remove(d);
    }
}
