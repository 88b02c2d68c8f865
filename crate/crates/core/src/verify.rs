//! Exhaustive tallies of `baj − inv` and exact comparison against the
//! product formula, plus a sweep over every r-code that checks the
//! bijection directly.
//!
//! The parallel path splits the lexicographic enumeration of
//! `{σ : σ_n = k}` into contiguous index ranges. When `parts ≤ n − 1` the
//! range boundaries fall on changes of the first entry; with more parts
//! the ranges are split evenly by index. Blocks share nothing and are
//! merged in block order, so the result never depends on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::codes::{r_decode, r_encode, rank, unrank, v_decode, v_encode, weight};
use crate::error::{Error, Result};
use crate::factorial;
use crate::perm::{self, iterate_with_last, lex_rank, max_baj_minus_inv, WithLast};
use crate::qpoly::{rhs_product, QPolynomial};

/// Default largest `n` the enumeration entry points will accept.
pub const DEFAULT_CEILING: usize = 13;

/// The last-entry constraint of a tally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LastValue {
    Fixed(u32),
    All,
}

impl fmt::Display for LastValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LastValue::Fixed(k) => write!(f, "{k}"),
            LastValue::All => f.write_str("all"),
        }
    }
}

/// Exponent → number of permutations with `baj − inv` equal to it.
/// Only exponents with a positive count are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    n: usize,
    k: LastValue,
    counts: BTreeMap<usize, u64>,
}

impl Distribution {
    fn from_dense(n: usize, k: LastValue, dense: &[u64]) -> Self {
        let counts = dense
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(e, &c)| (e, c))
            .collect();
        Self { n, k, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> LastValue {
        self.k
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn count(&self, exponent: usize) -> u64 {
        self.counts.get(&exponent).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }

    pub fn max_exponent(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    pub fn to_qpoly(&self) -> QPolynomial {
        let mut dense = vec![0u64; self.max_exponent().map_or(0, |e| e + 1)];
        for (&e, &c) in &self.counts {
            dense[e] = c;
        }
        QPolynomial::from_coeffs(dense)
    }

    /// Exponent-wise sum, used to assemble the all-`k` tally.
    fn absorb(&mut self, other: &Distribution) -> Result<()> {
        for (&e, &c) in &other.counts {
            let slot = self.counts.entry(e).or_insert(0);
            *slot = slot
                .checked_add(c)
                .ok_or(Error::Overflow("distribution merge"))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    /// Smallest exponent where the enumerated side differs from the product.
    Coefficient { exponent: usize, lhs: u64, rhs: u64 },
    /// First r-code (by rank) for which the bijection check failed.
    Bijection { index: u128, reason: String },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Coefficient { exponent, lhs, rhs } => {
                write!(
                    f,
                    "coefficient of q^{exponent}: enumerated {lhs}, product {rhs}"
                )
            }
            Mismatch::Bijection { index, reason } => write!(f, "r-code #{index}: {reason}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub n: usize,
    pub k: LastValue,
    pub first_mismatch: Option<Mismatch>,
    pub elapsed: Duration,
    pub permutations_checked: u64,
}

impl VerificationReport {
    pub fn status(&self) -> Status {
        if self.first_mismatch.is_none() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }
}

/// Enumeration settings: the size ceiling and the number of blocks the
/// theorem checks split each tally into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verifier {
    pub max_n: usize,
    pub parts: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_CEILING,
            parts: 1,
        }
    }
}

impl Verifier {
    pub fn with_parts(parts: usize) -> Self {
        Self {
            parts,
            ..Self::default()
        }
    }

    fn check_ceiling(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        if n > self.max_n {
            return Err(Error::AboveCeiling {
                n,
                ceiling: self.max_n,
            });
        }
        Ok(())
    }

    /// Sequential tally over every permutation of `1..=n` ending in `k`.
    pub fn distribution(&self, n: usize, k: i64) -> Result<Distribution> {
        self.check_ceiling(n)?;
        let mut stream = iterate_with_last(n, k)?;
        let mut dense = vec![0u64; max_baj_minus_inv(n) as usize + 1];
        while let Some(s) = stream.advance() {
            dense[perm::baj_minus_inv(s) as usize] += 1;
        }
        Ok(Distribution::from_dense(
            n,
            LastValue::Fixed(k as u32),
            &dense,
        ))
    }

    /// Same result as [`Verifier::distribution`], computed over `parts`
    /// independent blocks.
    pub fn parallel_distribution(&self, n: usize, k: i64, parts: usize) -> Result<Distribution> {
        self.check_ceiling(n)?;
        if parts == 0 {
            return Err(Error::ZeroParts);
        }
        iterate_with_last(n, k)?;
        let blocks = partition(n, parts)?;
        let width = max_baj_minus_inv(n) as usize + 1;
        let tallies = blocks
            .into_par_iter()
            .map(|(start, len)| -> Result<Vec<u64>> {
                let mut stream = WithLast::block(n, k, start, len)?;
                let mut dense = vec![0u64; width];
                while let Some(s) = stream.advance() {
                    dense[perm::baj_minus_inv(s) as usize] += 1;
                }
                Ok(dense)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut merged = vec![0u64; width];
        for tally in &tallies {
            for (m, &c) in merged.iter_mut().zip(tally) {
                *m = m
                    .checked_add(c)
                    .ok_or(Error::Overflow("distribution merge"))?;
            }
        }
        Ok(Distribution::from_dense(
            n,
            LastValue::Fixed(k as u32),
            &merged,
        ))
    }

    fn tally(&self, n: usize, k: i64) -> Result<Distribution> {
        if self.parts <= 1 {
            self.distribution(n, k)
        } else {
            self.parallel_distribution(n, k, self.parts)
        }
    }

    /// Tally over all of `S_n`, summed over `k = 1..=n`.
    pub fn distribution_all(&self, n: usize) -> Result<Distribution> {
        self.check_ceiling(n)?;
        let mut all = Distribution {
            n,
            k: LastValue::All,
            counts: BTreeMap::new(),
        };
        for k in 1..=n as i64 {
            all.absorb(&self.tally(n, k)?)?;
        }
        Ok(all)
    }

    /// Enumerated tally for `σ_n = k` against the product formula.
    pub fn verify_theorem2(&self, n: usize, k: i64) -> Result<VerificationReport> {
        let start = Instant::now();
        let lhs = self.tally(n, k)?;
        let rhs = rhs_product(n)?;
        Ok(coefficient_report(n, lhs.k, &lhs, &rhs, start))
    }

    /// Tally over all of `S_n` against `n` times the product formula.
    pub fn verify_theorem1(&self, n: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let lhs = self.distribution_all(n)?;
        let rhs = rhs_product(n)?.checked_scale(n as u64)?;
        Ok(coefficient_report(n, LastValue::All, &lhs, &rhs, start))
    }

    /// Walks every r-code for `(n, k)` in rank order and checks that it
    /// decodes to a distinct permutation ending in `k` whose `baj − inv`
    /// equals the code's weight and which re-encodes to the same code.
    pub fn check_bijection(&self, n: usize, k: i64) -> Result<VerificationReport> {
        self.check_ceiling(n)?;
        iterate_with_last(n, k)?;
        let start = Instant::now();
        let total = factorial(n - 1).ok_or(Error::Overflow("code count"))?;
        let mut seen = vec![0u64; (total as usize).div_ceil(64)];
        let mut first_mismatch = None;
        for idx in 0..total {
            let rc = unrank(n, k, idx)?;
            if let Err(reason) = check_one(&rc, idx, &mut seen) {
                first_mismatch = Some(Mismatch::Bijection { index: idx, reason });
                break;
            }
        }
        Ok(VerificationReport {
            n,
            k: LastValue::Fixed(k as u32),
            first_mismatch,
            elapsed: start.elapsed(),
            permutations_checked: total as u64,
        })
    }
}

fn check_one(
    rc: &crate::codes::RCode,
    idx: u128,
    seen: &mut [u64],
) -> std::result::Result<(), String> {
    let v = r_decode(rc);
    let p = v_decode(&v);
    let n = p.n();
    if p.last() != rc.k() {
        return Err(format!("decoded {p} does not end in {}", rc.k()));
    }
    let w = weight(rc);
    let stat = p.baj_minus_inv();
    if stat != w {
        return Err(format!("baj - inv of {p} is {stat}, weight is {w}"));
    }
    let back = r_encode(&v_encode(&p));
    if &back != rc {
        return Err(format!("{p} re-encodes to digits {back}, expected {rc}"));
    }
    if rank(rc).ok() != Some(idx) {
        return Err(format!("rank of digits {rc} is not {idx}"));
    }
    let slot = lex_rank(&p.as_slice()[..n - 1]) as usize;
    let (word, bit) = (slot / 64, 1u64 << (slot % 64));
    if seen[word] & bit != 0 {
        return Err(format!("{p} already produced by an earlier code"));
    }
    seen[word] |= bit;
    Ok(())
}

fn coefficient_report(
    n: usize,
    k: LastValue,
    lhs: &Distribution,
    rhs: &QPolynomial,
    start: Instant,
) -> VerificationReport {
    let first_mismatch = lhs
        .to_qpoly()
        .first_difference(rhs)
        .map(|(exponent, lhs, rhs)| Mismatch::Coefficient { exponent, lhs, rhs });
    VerificationReport {
        n,
        k,
        first_mismatch,
        elapsed: start.elapsed(),
        permutations_checked: lhs.total() as u64,
    }
}

/// Contiguous `(start, len)` lexicographic-index blocks covering
/// `0..(n-1)!`. Empty blocks are dropped.
pub fn partition(n: usize, parts: usize) -> Result<Vec<(u64, u64)>> {
    if parts == 0 {
        return Err(Error::ZeroParts);
    }
    let total = factorial(n - 1)
        .filter(|&t| t <= u64::MAX as u128)
        .ok_or(Error::Overflow("block index"))?;
    let first_entries = n.saturating_sub(1) as u128;
    let boundary = |j: usize| -> u128 {
        let j = j as u128;
        let parts = parts as u128;
        if parts <= first_entries {
            // whole first-entry groups of size (n-2)!
            let group = factorial(n - 2).expect("(n-2)! fits when (n-1)! does");
            first_entries * j / parts * group
        } else {
            total * j / parts
        }
    };
    Ok((0..parts)
        .map(|j| (boundary(j), boundary(j + 1)))
        .filter(|(a, b)| b > a)
        .map(|(a, b)| (a as u64, (b - a) as u64))
        .collect())
}

pub fn distribution(n: usize, k: i64) -> Result<Distribution> {
    Verifier::default().distribution(n, k)
}

pub fn parallel_distribution(n: usize, k: i64, parts: usize) -> Result<Distribution> {
    Verifier::default().parallel_distribution(n, k, parts)
}

pub fn verify_theorem2(n: usize, k: i64) -> Result<VerificationReport> {
    Verifier::default().verify_theorem2(n, k)
}

pub fn verify_theorem1(n: usize) -> Result<VerificationReport> {
    Verifier::default().verify_theorem1(n)
}

pub fn check_bijection(n: usize, k: i64) -> Result<VerificationReport> {
    Verifier::default().check_bijection(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(d: &Distribution) -> Vec<(usize, u64)> {
        d.counts().iter().map(|(&e, &c)| (e, c)).collect()
    }

    #[test]
    fn distribution_examples() {
        assert_eq!(counts(&distribution(3, 3).unwrap()), [(0, 1), (1, 1)]);
        assert_eq!(counts(&distribution(1, 1).unwrap()), [(0, 1)]);
        assert_eq!(
            counts(&distribution(4, 4).unwrap()),
            [(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]
        );
    }

    #[test]
    fn distribution_rejects_bad_arguments() {
        assert_eq!(
            distribution(4, 5).unwrap_err(),
            Error::LastValueOutOfRange { k: 5, n: 4 }
        );
        assert_eq!(
            distribution(14, 1).unwrap_err(),
            Error::AboveCeiling { n: 14, ceiling: 13 }
        );
        let raised = Verifier {
            max_n: 14,
            parts: 1,
        };
        assert!(raised.check_ceiling(14).is_ok());
        assert_eq!(distribution(0, 1).unwrap_err(), Error::ZeroSize);
        assert_eq!(
            parallel_distribution(4, 1, 0).unwrap_err(),
            Error::ZeroParts
        );
    }

    #[test]
    fn theorem_examples() {
        assert!(verify_theorem2(7, 1).unwrap().passed());
        assert!(verify_theorem2(1, 1).unwrap().passed());
        let t1 = verify_theorem1(2).unwrap();
        assert!(t1.passed());
        assert_eq!(t1.permutations_checked, 2);
        assert!(verify_theorem1(1).unwrap().passed());
        assert_eq!(verify_theorem2(7, 1).unwrap().permutations_checked, 720);
    }

    #[test]
    fn mismatch_reports_smallest_exponent() {
        let lhs = Distribution::from_dense(3, LastValue::Fixed(1), &[1, 1]);
        let rhs = QPolynomial::from_coeffs(vec![1, 2, 0, 4]);
        let report = coefficient_report(3, lhs.k(), &lhs, &rhs, Instant::now());
        assert_eq!(report.status(), Status::Fail);
        assert_eq!(
            report.first_mismatch,
            Some(Mismatch::Coefficient {
                exponent: 1,
                lhs: 1,
                rhs: 2
            })
        );
    }

    #[test]
    fn bijection_examples() {
        let r = check_bijection(2, 2).unwrap();
        assert!(r.passed());
        assert_eq!(r.permutations_checked, 1);
        for k in 1..=6 {
            let r = check_bijection(6, k).unwrap();
            assert!(r.passed(), "{:?}", r.first_mismatch);
            assert_eq!(r.permutations_checked, 120);
        }
        assert!(check_bijection(7, 1).unwrap().passed());
    }

    #[test]
    fn bijection_detects_duplicates() {
        let rc = unrank(4, 2, 3).unwrap();
        let mut seen = vec![0u64; 1];
        assert!(check_one(&rc, 3, &mut seen).is_ok());
        let err = check_one(&rc, 3, &mut seen).unwrap_err();
        assert!(err.contains("already produced"), "{err}");
        assert!(check_one(&rc, 4, &mut [0u64; 1])
            .unwrap_err()
            .contains("rank"));
    }

    #[test]
    fn partitions_cover_the_index_range() {
        for n in 1..=8 {
            let total = factorial(n - 1).unwrap() as u64;
            for parts in [1, 2, 3, 5, 7, 8, 50, 10_000] {
                let blocks = partition(n, parts).unwrap();
                let mut next = 0;
                for &(start, len) in &blocks {
                    assert_eq!(start, next);
                    assert!(len > 0);
                    next += len;
                }
                assert_eq!(next, total, "n={n} parts={parts}");
            }
        }
        // first-entry aligned when parts <= n - 1
        assert_eq!(partition(5, 4).unwrap(), [(0, 6), (6, 6), (12, 6), (18, 6)]);
        assert_eq!(partition(5, 2).unwrap(), [(0, 12), (12, 12)]);
    }

    #[test]
    fn parallel_matches_sequential() {
        assert_eq!(
            parallel_distribution(8, 3, 4).unwrap(),
            distribution(8, 3).unwrap()
        );
        assert_eq!(
            parallel_distribution(6, 2, 1).unwrap(),
            distribution(6, 2).unwrap()
        );
    }
}
