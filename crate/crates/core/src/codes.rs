//! The two encodings behind the bijection.
//!
//! A permutation `σ` is first encoded as its *v-code*
//! `v_i = #{j ≤ i : σ_j ≤ σ_i}` with `1 ≤ v_i ≤ i`, and the v-code as its
//! *r-code*: the last value `k = v_n = σ_n` together with the digits
//!
//! ```text
//! r_i = i·χ(v_{i+1} ≤ v_i) + v_{i+1} − v_i − 1,   0 ≤ r_i ≤ i − 1.
//! ```
//!
//! Under this map `baj(σ) − inv(σ) = Σ (n−i) r_i`, which is [`weight`].

use std::fmt;

use crate::error::{Error, Result};
use crate::factorial;
use crate::perm::Permutation;

/// `(v_1, …, v_n)` with `1 ≤ v_i ≤ i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VCode {
    v: Vec<u32>,
}

impl VCode {
    pub fn new<I>(values: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let mut v = Vec::new();
        for (value, index) in values.into_iter().map(Into::into).zip(1usize..) {
            if value < 1 || value > index as i64 {
                return Err(Error::VDigitOutOfRange { index, value });
            }
            v.push(value as u32);
        }
        if v.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self { v })
    }

    pub fn n(&self) -> usize {
        self.v.len()
    }

    pub fn values(&self) -> &[u32] {
        &self.v
    }

    /// `v_i` for a 1-based index.
    pub fn get(&self, index: usize) -> Option<u32> {
        index.checked_sub(1).and_then(|i| self.v.get(i).copied())
    }

    /// `v_n`, which equals `σ_n`.
    pub fn last(&self) -> u32 {
        *self.v.last().expect("v-codes are nonempty")
    }
}

/// Last value `k` plus digits `(r_1, …, r_{n-1})` with `0 ≤ r_i ≤ i − 1`.
///
/// The digits alone do not pin down the permutation; `k` does the rest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RCode {
    k: u32,
    r: Vec<u32>,
}

impl RCode {
    /// `n` is `digits.len() + 1`.
    pub fn new<I>(k: i64, digits: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let mut r = Vec::new();
        for (value, index) in digits.into_iter().map(Into::into).zip(1usize..) {
            if value < 0 || value >= index as i64 {
                return Err(Error::RDigitOutOfRange {
                    index,
                    value,
                    bound: index - 1,
                });
            }
            r.push(value as u32);
        }
        let n = r.len() + 1;
        if k < 1 || k > n as i64 {
            return Err(Error::LastValueOutOfRange { k, n });
        }
        Ok(Self { k: k as u32, r })
    }

    pub fn n(&self) -> usize {
        self.r.len() + 1
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn digits(&self) -> &[u32] {
        &self.r
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl fmt::Display for VCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.v)
    }
}

/// Digits only; `k` is reported separately.
impl fmt::Display for RCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.r)
    }
}

pub fn v_encode(p: &Permutation) -> VCode {
    VCode {
        v: v_encode_slice(p.as_slice()),
    }
}

pub(crate) fn v_encode_slice(s: &[u32]) -> Vec<u32> {
    s.iter()
        .enumerate()
        .map(|(i, &x)| s[..=i].iter().filter(|&&y| y <= x).count() as u32)
        .collect()
}

/// Rebuilds `σ` one entry at a time: `σ^{(i)}` is `σ^{(i-1)}` with every
/// entry `≥ v_i` bumped by one, followed by `v_i`.
pub fn v_decode(c: &VCode) -> Permutation {
    let mut sigma = Vec::with_capacity(c.n());
    for &vi in &c.v {
        insert_stage(&mut sigma, vi);
    }
    Permutation::from_trusted(sigma)
}

/// Every intermediate `σ^{(1)}, …, σ^{(n)}` of [`v_decode`].
pub fn v_decode_stages(c: &VCode) -> Vec<Permutation> {
    let mut sigma = Vec::with_capacity(c.n());
    c.v.iter()
        .map(|&vi| {
            insert_stage(&mut sigma, vi);
            Permutation::from_trusted(sigma.clone())
        })
        .collect()
}

fn insert_stage(sigma: &mut Vec<u32>, vi: u32) {
    for x in sigma.iter_mut() {
        if *x >= vi {
            *x += 1;
        }
    }
    sigma.push(vi);
}

pub fn r_encode(c: &VCode) -> RCode {
    let v = &c.v;
    let r = (1..v.len())
        .map(|i| {
            let (vi, next) = (v[i - 1], v[i]);
            if next <= vi {
                i as u32 + next - vi - 1
            } else {
                next - vi - 1
            }
        })
        .collect();
    RCode { k: c.last(), r }
}

/// Backward recursion from `v_n = k`: with `c = v_{i+1} − r_i − 1`,
/// `v_i = c` when `c ≥ 1` and `v_i = i + c` otherwise.
pub fn r_decode(rc: &RCode) -> VCode {
    let n = rc.n();
    let mut v = vec![0u32; n];
    v[n - 1] = rc.k;
    for i in (1..n).rev() {
        let c = v[i] as i64 - rc.r[i - 1] as i64 - 1;
        let vi = if c >= 1 { c } else { i as i64 + c };
        debug_assert!((1..=i as i64).contains(&vi));
        v[i - 1] = vi as u32;
    }
    VCode { v }
}

/// `Σ_{i=1}^{n-1} (n−i) r_i`.
pub fn weight(rc: &RCode) -> u64 {
    let n = rc.n() as u64;
    rc.r.iter()
        .zip(1u64..)
        .map(|(&ri, i)| (n - i) * ri as u64)
        .sum()
}

/// `inv(σ)` recovered from the v-code as `C(n+1, 2) − Σ v_i`.
pub fn inv_from_vcode(c: &VCode) -> u64 {
    let n = c.n() as u64;
    n * (n + 1) / 2 - c.v.iter().map(|&x| x as u64).sum::<u64>()
}

/// `baj(σ)` recovered from the v-code as `Σ i(n−i) χ(v_{i+1} ≤ v_i)`.
pub fn baj_from_vcode(c: &VCode) -> u64 {
    let n = c.n() as u64;
    c.v.windows(2)
        .zip(1u64..)
        .filter(|(w, _)| w[1] <= w[0])
        .map(|(_, i)| i * (n - i))
        .sum()
}

/// Factorial-base index: digit `r_i` carries place value `(i−1)!`.
pub fn rank(rc: &RCode) -> Result<u128> {
    rc.r.iter()
        .zip(1usize..)
        .skip(1)
        .try_fold(0u128, |acc, (&ri, i)| {
            factorial(i - 1)
                .and_then(|place| place.checked_mul(ri as u128))
                .and_then(|term| acc.checked_add(term))
                .ok_or(Error::Overflow("rank"))
        })
}

/// Inverse of [`rank`] for fixed `(n, k)`; `idx` must be below `(n−1)!`.
pub fn unrank(n: usize, k: i64, idx: u128) -> Result<RCode> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if k < 1 || k > n as i64 {
        return Err(Error::LastValueOutOfRange { k, n });
    }
    let total = factorial(n - 1).ok_or(Error::Overflow("unrank"))?;
    if idx >= total {
        return Err(Error::IndexOutOfRange {
            index: idx,
            max: total - 1,
        });
    }
    let mut r = vec![0u32; n - 1];
    let mut rest = idx;
    for i in (2..n).rev() {
        let place = factorial(i - 1).expect("smaller than (n-1)!");
        r[i - 1] = (rest / place) as u32;
        rest %= place;
    }
    Ok(RCode { k: k as u32, r })
}
