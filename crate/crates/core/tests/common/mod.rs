//! Test-only oracles, written straight from the definitions and sharing no
//! code with the library's enumeration or statistics.

#![allow(dead_code)]

/// Every permutation of `1..=n`, by recursive insertion of the largest value.
pub fn all_perms(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for smaller in all_perms(n - 1) {
        for pos in 0..=smaller.len() {
            let mut p = smaller.clone();
            p.insert(pos, n);
            out.push(p);
        }
    }
    out
}

pub fn perms_ending_in(n: u32, k: u32) -> Vec<Vec<u32>> {
    all_perms(n)
        .into_iter()
        .filter(|p| *p.last().unwrap() == k)
        .collect()
}

pub fn inv_oracle(s: &[u32]) -> u64 {
    let mut count = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] > s[j] {
                count += 1;
            }
        }
    }
    count
}

/// 1-based descent positions.
pub fn descents_oracle(s: &[u32]) -> Vec<usize> {
    (1..s.len()).filter(|&i| s[i - 1] > s[i]).collect()
}

pub fn baj_oracle(s: &[u32]) -> u64 {
    let n = s.len();
    descents_oracle(s)
        .iter()
        .map(|&i| (i * (n - i)) as u64)
        .sum()
}

/// Dense tally of `baj − inv` over the given permutations.
pub fn tally_oracle(perms: &[Vec<u32>]) -> Vec<u64> {
    let mut dense: Vec<u64> = Vec::new();
    for p in perms {
        let e = (baj_oracle(p) as i64 - inv_oracle(p) as i64) as usize;
        if dense.len() <= e {
            dense.resize(e + 1, 0);
        }
        dense[e] += 1;
    }
    dense
}

/// Every sequence `(d_1, …, d_len)` with `lo(i) ≤ d_i ≤ hi(i)`.
pub fn mixed_radix(
    len: usize,
    lo: impl Fn(usize) -> i64,
    hi: impl Fn(usize) -> i64,
) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for i in 1..=len {
        let mut next = Vec::new();
        for prefix in &out {
            for d in lo(i)..=hi(i) {
                let mut s = prefix.clone();
                s.push(d);
                next.push(s);
            }
        }
        out = next;
    }
    out
}

pub fn factorial(m: u64) -> u64 {
    (1..=m).product()
}
