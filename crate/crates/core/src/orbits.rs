//! Orbits of `d`-element multisets over `Z/nZ` under simultaneous shifting.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::combin::{binomial_i, nondecreasing_tuples};
use crate::error::{Error, Result};

/// A multiset of residues mod `n`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultisetZn {
    n: usize,
    elems: Vec<usize>,
}

impl MultisetZn {
    /// Reduces the entries mod `n` and sorts them.
    pub fn new(n: usize, elems: &[i64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("modulus must be positive"));
        }
        let mut e: Vec<usize> = elems.iter().map(|&x| x.rem_euclid(n as i64) as usize).collect();
        e.sort_unstable();
        Ok(MultisetZn { n, elems: e })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn count(&self, v: usize) -> usize {
        self.elems.iter().filter(|&&e| e == v).count()
    }

    /// `x + S`.
    pub fn shift(&self, x: i64) -> Self {
        let x = x.rem_euclid(self.n as i64) as usize;
        let mut e: Vec<usize> = self.elems.iter().map(|&y| (y + x) % self.n).collect();
        e.sort_unstable();
        MultisetZn { n: self.n, elems: e }
    }

    /// The lexicographically least member of the orbit.
    pub fn canonical(&self) -> Self {
        (0..self.n as i64).map(|x| self.shift(x)).min().unwrap()
    }

    pub fn orbit(&self) -> Vec<MultisetZn> {
        let mut v: Vec<_> = (0..self.n as i64).map(|x| self.shift(x)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Membership in `R`: all entries in `0..=k` and `0` present.
    pub fn in_r(&self, k: usize) -> bool {
        self.elems.first() == Some(&0) && self.elems.iter().all(|&e| e <= k)
    }
}

fn check(n: usize, d: usize, k: usize) -> Result<()> {
    if d < 1 {
        return Err(Error::domain("multisets need at least one element"));
    }
    if k >= n {
        return Err(Error::domain(format!("need n > k, got n={n}, k={k}")));
    }
    Ok(())
}

/// The family `R`: multisets with entries in `0..=k` containing `0`, in
/// lexicographic order.
pub fn r_family(n: usize, d: usize, k: usize) -> Vec<MultisetZn> {
    nondecreasing_tuples(d - 1, 0, k)
        .into_iter()
        .map(|t| {
            let mut e = Vec::with_capacity(d);
            e.push(0);
            e.extend(t);
            MultisetZn { n, elems: e }
        })
        .collect()
}

/// Number of orbits meeting `R`, by enumeration.
pub fn orbit_count_bruteforce(n: usize, d: usize, k: usize, budget: u128) -> Result<u128> {
    check(n, d, k)?;
    let size = binomial_i((d - 1 + k) as i64, (d - 1) as i64);
    if size > budget {
        return Err(Error::TooLarge { needed: size, budget });
    }
    let r = r_family(n, d, k);
    debug_assert_eq!(r.len() as u128, size);
    let reps: HashSet<MultisetZn> = r.par_iter().map(|s| s.canonical()).collect();
    Ok(reps.len() as u128)
}

/// Number of orbits meeting `R` by closed formula, for `k < 2n/3`.
pub fn orbit_count_closed(n: usize, d: usize, k: usize) -> Result<u128> {
    check(n, d, k)?;
    let size = binomial_i((d - 1 + k) as i64, (d - 1) as i64);
    if 2 * k < n {
        return Ok(size);
    }
    if 3 * k >= 2 * n {
        return Err(Error::Unsupported(format!(
            "no closed form for k >= 2n/3 (n={n}, k={k})"
        )));
    }
    let (n, d, k) = (n as i64, d as i64, k as i64);
    let w = 2 * k - n + 1;
    let mut doubled = w as i128 * binomial_i(d - 2 + w, d - 2) as i128;
    if d % 2 == 0 && n % 2 == 0 {
        doubled -= binomial_i(d / 2 - 1 + k - n / 2, d / 2 - 1) as i128;
    }
    debug_assert!(doubled % 2 == 0);
    Ok((size as i128 - doubled / 2) as u128)
}

fn check_pi_range(n: usize, k: usize) -> Result<()> {
    if !(2 * k >= n && 3 * k < 2 * n && k < n) {
        return Err(Error::domain(format!(
            "the pairing encoding needs n/2 <= k < 2n/3 (n={n}, k={k})"
        )));
    }
    Ok(())
}

/// Places `ns[i]` copies of `i` and `ms[j]` copies of `k - b + j`, where
/// `a + 1 = ns.len()`, `b + 1 = ms.len()` and `a + b = 2k - n`.
pub fn pi_encode(n: usize, k: usize, ns: &[usize], ms: &[usize]) -> Result<MultisetZn> {
    check_pi_range(n, k)?;
    if ns.is_empty() || ms.is_empty() {
        return Err(Error::domain("both tuples must be nonempty"));
    }
    let (a, b) = (ns.len() - 1, ms.len() - 1);
    if a + b != 2 * k - n {
        return Err(Error::domain(format!(
            "tuple lengths must satisfy a + b = {}",
            2 * k - n
        )));
    }
    if ns[0] == 0 || ms[0] == 0 {
        return Err(Error::domain("leading multiplicities must be positive"));
    }
    if ns == ms {
        return Err(Error::domain("tuples must differ"));
    }
    let mut e = Vec::new();
    for (i, &c) in ns.iter().enumerate() {
        e.extend(std::iter::repeat_n(i, c));
    }
    for (j, &c) in ms.iter().enumerate() {
        e.extend(std::iter::repeat_n(k - b + j, c));
    }
    if e.len() < 2 {
        return Err(Error::domain("multisets need at least two elements"));
    }
    e.sort_unstable();
    Ok(MultisetZn { n, elems: e })
}

/// Inverse of [`pi_encode`].
pub fn pi_decode(s: &MultisetZn, k: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = s.n();
    check_pi_range(n, k)?;
    if !s.in_r(k) {
        return Err(Error::domain("multiset is not in R"));
    }
    let y = s
        .elems()
        .iter()
        .copied()
        .find(|&y| y >= n - k)
        .ok_or_else(|| Error::domain("multiset is not in the image of the encoding"))?;
    let x = n - y;
    if x < n - k || x > k {
        return Err(Error::domain("multiset is not in the image of the encoding"));
    }
    let b = x - (n - k);
    let a = k - x;
    let ns: Vec<usize> = (0..=a).map(|i| s.count(i)).collect();
    let ms: Vec<usize> = (0..=b).map(|j| s.count(k - b + j)).collect();
    match pi_encode(n, k, &ns, &ms) {
        Ok(t) if t == *s => Ok((ns, ms)),
        _ => Err(Error::domain("multiset is not in the image of the encoding")),
    }
}
