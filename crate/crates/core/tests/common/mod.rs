//! Brute-force oracle: flat part lists and membership tests written directly
//! from the definitions, sharing no code with the library's enumerator.

#![allow(dead_code)]

use std::collections::HashMap;

/// Every partition of n as a nonincreasing Vec.
pub fn all_partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(n: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn mults(parts: &[u64]) -> HashMap<u64, u64> {
    let mut m = HashMap::new();
    for &p in parts {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

pub fn distinct(parts: &[u64]) -> bool {
    parts.windows(2).all(|w| w[0] != w[1])
}

pub fn regular(parts: &[u64], ell: u64) -> bool {
    parts.iter().all(|p| p % ell != 0)
}

pub fn in_d(parts: &[u64], ell: u64) -> bool {
    distinct(parts) && parts.iter().all(|p| p % ell == 0 || (p % ell) % 2 == 1)
}

pub fn in_c(parts: &[u64], ell: u64) -> bool {
    distinct(parts) && parts.iter().all(|p| p % 2 == 1 && p % ell != 0)
}

pub fn max_mult(parts: &[u64]) -> u64 {
    mults(parts).values().copied().max().unwrap_or(0)
}

pub fn sign(parts: &[u64]) -> i64 {
    if parts.len() % 2 == 0 {
        1
    } else {
        -1
    }
}
