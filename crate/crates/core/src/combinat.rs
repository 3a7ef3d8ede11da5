//! Subset enumeration, ranking and capped counting shared by the minor
//! scan and the exhaustive searches.

/// `C(n, k)` saturated at `cap`: returns `cap` as soon as the count
/// reaches it, so callers can budget-check without overflow.
pub fn binomial_capped(n: u64, k: u64, cap: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc >= cap as u128 {
            return cap;
        }
    }
    acc as u64
}

/// `base^e` saturated at `cap`.
pub fn pow_capped(base: u64, e: u32, cap: u64) -> u64 {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc *= base as u128;
        if acc >= cap as u128 {
            return cap;
        }
    }
    acc as u64
}

/// Advances `c` to the next size-|c| subset of `[0, n)` in lexicographic
/// order; returns false after the last one.
pub fn next_combination(c: &mut [u64], n: u64) -> bool {
    let t = c.len();
    let mut i = t;
    while i > 0 {
        i -= 1;
        if c[i] + (t - i) as u64 <= n - 1 {
            c[i] += 1;
            for j in i + 1..t {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Precomputed binomial coefficients `C(i, j)` for `i <= n`, `j <= k`.
pub struct BinomTable {
    k: usize,
    rows: Vec<u64>,
}

impl BinomTable {
    pub fn new(n: usize, k: usize) -> Self {
        let mut rows = vec![0u64; (n + 1) * (k + 1)];
        for i in 0..=n {
            rows[i * (k + 1)] = 1;
            for j in 1..=k.min(i) {
                let above = rows[(i - 1) * (k + 1) + j];
                let diag = rows[(i - 1) * (k + 1) + j - 1];
                rows[i * (k + 1) + j] = above.saturating_add(diag);
            }
        }
        BinomTable { k, rows }
    }

    #[inline]
    pub fn c(&self, n: usize, k: usize) -> u64 {
        if k > self.k || k > n {
            return 0;
        }
        self.rows[n * (self.k + 1) + k]
    }
}

/// Lexicographic rank of the sorted subset `s` of `[0, n)` among all
/// subsets of its size.
pub fn subset_rank(s: &[usize], n: usize, binom: &BinomTable) -> u64 {
    let t = s.len();
    let mut rank = 0u64;
    let mut lo = 0usize;
    for (i, &v) in s.iter().enumerate() {
        for x in lo..v {
            rank += binom.c(n - 1 - x, t - 1 - i);
        }
        lo = v + 1;
    }
    rank
}

/// All size-`t` subsets of `[0, n)` in lexicographic order, flattened.
pub fn all_subsets(n: usize, t: usize) -> Vec<usize> {
    if t > n {
        return Vec::new();
    }
    let mut cur: Vec<u64> = (0..t as u64).collect();
    let mut out = Vec::new();
    loop {
        out.extend(cur.iter().map(|&v| v as usize));
        if !next_combination(&mut cur, n as u64) {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capped_counts() {
        assert_eq!(binomial_capped(14, 7, u64::MAX), 3432);
        assert_eq!(binomial_capped(28, 14, u64::MAX), 40_116_600);
        assert_eq!(binomial_capped(28, 14, 1000), 1000);
        assert_eq!(binomial_capped(5, 9, 10), 0);
        assert_eq!(pow_capped(9, 4, u64::MAX), 6561);
        assert_eq!(pow_capped(9, 10, 1000), 1000);
    }

    #[test]
    fn combination_order_and_ranks() {
        let n = 6u64;
        let mut cur = vec![0u64, 1, 2];
        let binom = BinomTable::new(6, 3);
        let mut rank = 0u64;
        loop {
            let as_usize: Vec<usize> = cur.iter().map(|&v| v as usize).collect();
            assert_eq!(subset_rank(&as_usize, 6, &binom), rank);
            rank += 1;
            if !next_combination(&mut cur, n) {
                break;
            }
        }
        assert_eq!(rank, 20);
    }

    #[test]
    fn flattened_subsets_match_count() {
        let subs = all_subsets(7, 3);
        assert_eq!(subs.len(), 35 * 3);
        assert_eq!(&subs[..3], &[0, 1, 2]);
        assert_eq!(&subs[subs.len() - 3..], &[4, 5, 6]);
    }
}
