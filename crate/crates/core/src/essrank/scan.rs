use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{require_char, EssCode};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::galois::{BaseField, Fq};
use crate::polyring::{self, MonomialBasis};

/// Result of scanning a contiguous range of message indices. Message index
/// `i` encodes the message whose `j`-th entry is the `j`-th base-`q` digit of
/// `i`, least significant first. Partials over disjoint ranges merge into
/// the same totals regardless of how the work was split.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanPartial {
    pub start: u128,
    pub end: u128,
    /// Nonzero codewords examined.
    pub scanned: u128,
    pub min_distance: Option<usize>,
    /// Smallest message index attaining `min_distance`.
    pub witness: Option<u128>,
    /// `weight_distribution[r]` counts codewords of essential rank `r`.
    pub weight_distribution: Vec<u128>,
}

impl ScanPartial {
    fn empty(n: usize, start: u128, end: u128) -> Self {
        ScanPartial {
            start,
            end,
            scanned: 0,
            min_distance: None,
            witness: None,
            weight_distribution: vec![0; n + 1],
        }
    }

    fn record(&mut self, idx: u128, r: usize) {
        self.scanned += 1;
        self.weight_distribution[r] += 1;
        let better = match (self.min_distance, self.witness) {
            (None, _) => true,
            (Some(m), Some(w)) => r < m || (r == m && idx < w),
            (Some(_), None) => true,
        };
        if better {
            self.min_distance = Some(r);
            self.witness = Some(idx);
        }
    }

    pub fn merge(mut self, other: &ScanPartial) -> ScanPartial {
        self.start = self.start.min(other.start);
        self.end = self.end.max(other.end);
        self.scanned += other.scanned;
        for (a, b) in self.weight_distribution.iter_mut().zip(&other.weight_distribution) {
            *a += b;
        }
        if let (Some(r), Some(w)) = (other.min_distance, other.witness) {
            let better = match (self.min_distance, self.witness) {
                (Some(m), Some(v)) => r < m || (r == m && w < v),
                _ => true,
            };
            if better {
                self.min_distance = Some(r);
                self.witness = Some(w);
            }
        }
        self
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    /// Maximum number of nonzero codewords to examine.
    pub budget: u128,
    /// Message indices per work unit.
    pub chunk: u128,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            budget: 10_000_000,
            chunk: 1 << 14,
            jobs: None,
        }
    }
}

fn rank_in_place(k: &BaseField, m: &mut [Fq], rows: usize, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !k.is_zero(&m[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                m.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = k.inv(&m[r * cols + c]).unwrap();
        for i in r + 1..rows {
            let x = m[i * cols + c];
            if k.is_zero(&x) {
                continue;
            }
            let f = k.neg(&k.mul(&x, &inv));
            for j in c..cols {
                let t = m[r * cols + j];
                m[i * cols + j] = k.mul_add(&m[i * cols + j], &f, &t);
            }
        }
        r += 1;
    }
    r
}

fn total_messages(code: &EssCode) -> Option<u128> {
    (code.field().size() as u128).checked_pow(code.k() as u32)
}

/// Scans message indices `start..end` single-threaded.
pub fn scan_range(code: &EssCode, start: u128, end: u128) -> Result<ScanPartial> {
    let k = code.field();
    require_char(k, code.d())?;
    if code.d() == 0 {
        return Err(Error::domain("degree must be positive"));
    }
    let total = total_messages(code).ok_or(Error::TooLarge {
        needed: u128::MAX,
        budget: u128::MAX,
    })?;
    let end = end.min(total);
    let n = code.n();
    let mut out = ScanPartial::empty(n, start, end);
    if start >= end {
        return Ok(out);
    }
    let mb = MonomialBasis::new(n, code.d() - 1);
    let cols = mb.len();
    let cats: Vec<Vec<Fq>> = code
        .basis()
        .iter()
        .map(|f| {
            let c = polyring::catalecticant_in(k, f, &mb);
            (0..n).flat_map(|i| c.row(i).to_vec()).collect()
        })
        .collect();
    let q = k.size() as u128;
    let kk = code.k();
    let mut digits = vec![0u32; kk];
    let mut v = start;
    for d in digits.iter_mut() {
        *d = (v % q) as u32;
        v /= q;
    }
    let mut cur = vec![k.zero(); n * cols];
    for (j, &dj) in digits.iter().enumerate() {
        let c = k.element(dj);
        if !k.is_zero(&c) {
            for (x, y) in cur.iter_mut().zip(&cats[j]) {
                *x = k.mul_add(x, &c, y);
            }
        }
    }
    let mut scratch = cur.clone();
    for idx in start..end {
        if idx != 0 {
            scratch.copy_from_slice(&cur);
            out.record(idx, rank_in_place(k, &mut scratch, n, cols));
        }
        // advance the base-q counter, updating the running combination
        for j in 0..kk {
            let old = digits[j];
            let new = if old + 1 == q as u32 { 0 } else { old + 1 };
            digits[j] = new;
            let delta = k.sub(&k.element(new), &k.element(old));
            for (x, y) in cur.iter_mut().zip(&cats[j]) {
                *x = k.mul_add(x, &delta, y);
            }
            if new != 0 {
                break;
            }
        }
    }
    Ok(out)
}

/// Minimum essential rank over all nonzero codewords, by exhaustive scan.
pub fn code_min_distance_bruteforce(code: &EssCode, cfg: &ScanConfig) -> Result<ScanPartial> {
    require_char(code.field(), code.d())?;
    let total = total_messages(code).ok_or(Error::TooLarge {
        needed: u128::MAX,
        budget: cfg.budget,
    })?;
    if total - 1 > cfg.budget {
        return Err(Error::TooLarge {
            needed: total - 1,
            budget: cfg.budget,
        });
    }
    let chunk = cfg.chunk.max(1);
    let starts: Vec<u128> = (0..total.div_ceil(chunk)).map(|i| i * chunk).collect();
    let work = || {
        starts
            .par_iter()
            .map(|&s| scan_range(code, s, (s + chunk).min(total)))
            .collect::<Result<Vec<_>>>()
    };
    let parts = match cfg.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::domain(e.to_string()))?
            .install(work)?,
        None => work()?,
    };
    Ok(parts
        .iter()
        .fold(ScanPartial::empty(code.n(), 0, 0), |acc, p| acc.merge(p)))
}
