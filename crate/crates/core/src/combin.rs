//! Small exact combinatorial helpers.

/// `C(n, k)`, zero when `k > n`. Panics on overflow of `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc.checked_mul(n as u128 - i).expect("binomial overflow") / (i + 1);
    }
    acc
}

/// `C(n, k)` for signed arguments: zero unless `0 <= k <= n`.
pub fn binomial_i(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binomial(n as u64, k as u64)
    }
}

/// All nondecreasing tuples of length `len` with entries in `lo..=hi`,
/// in lexicographic order.
pub fn nondecreasing_tuples(len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            rec(len, v, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
    } else if lo <= hi {
        rec(len, lo, hi, &mut Vec::with_capacity(len), &mut out);
    }
    out
}
