//! Lexicographic enumeration helpers.

use alloc::vec::Vec;

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until `f`
/// returns `false`. Returns whether the enumeration ran to completion.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[u32]) -> bool) -> bool {
    if k > n {
        return true;
    }
    let mut c: Vec<u32> = (0..k as u32).collect();
    loop {
        if !f(&c) {
            return false;
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if (c[i] as usize) < n - k + i {
                break;
            }
            if i == 0 {
                return true;
            }
        }
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Calls `f` on every tuple in `0..base` of length `len`, odometer order with
/// the last coordinate fastest, until `f` returns `false`.
pub fn for_each_tuple(base: usize, len: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if base == 0 && len > 0 {
        return true;
    }
    let mut t = alloc::vec![0usize; len];
    loop {
        if !f(&t) {
            return false;
        }
        let mut i = len;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < base {
                break;
            }
            t[i] = 0;
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_count() {
        for n in 0..7 {
            for k in 0..=n + 1 {
                let mut seen = 0u64;
                for_each_combination(n, k, |c| {
                    assert!(c.windows(2).all(|w| w[0] < w[1]));
                    seen += 1;
                    true
                });
                assert_eq!(seen, binomial(n as u64, k as u64), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn tuples_count() {
        let mut seen = 0;
        for_each_tuple(3, 2, |_| {
            seen += 1;
            true
        });
        assert_eq!(seen, 9);
        let mut empty = 0;
        for_each_tuple(2, 0, |_| {
            empty += 1;
            true
        });
        assert_eq!(empty, 1);
    }
}
