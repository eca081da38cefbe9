//! Exact Bell numbers, Stirling numbers of the second kind and their partial sums.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::constraint::BlockCountSpec;

/// Triangular table of `S(n, k)` for `0 <= k <= n <= max_n` and the Bell
/// numbers `B_0..=B_max_n`.
#[derive(Clone, Debug)]
pub struct CountTable {
    stirling: Vec<Vec<BigUint>>,
    bell: Vec<BigUint>,
}

impl CountTable {
    pub fn new(max_n: usize) -> Self {
        let mut table = CountTable {
            stirling: vec![vec![BigUint::one()]],
            bell: vec![BigUint::one()],
        };
        table.extend_to(max_n);
        table
    }

    pub fn max_n(&self) -> usize {
        self.stirling.len() - 1
    }

    /// Appends rows via `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
    pub fn extend_to(&mut self, max_n: usize) {
        while self.max_n() < max_n {
            let prev = self.stirling.last().expect("row 0 always present");
            let n = prev.len();
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigUint::zero());
            for k in 1..=n {
                let stay = if k < n { &prev[k] * k } else { BigUint::zero() };
                row.push(stay + &prev[k - 1]);
            }
            self.bell.push(row.iter().sum());
            self.stirling.push(row);
        }
    }

    pub fn stirling(&self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        self.stirling[n][k].clone()
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.stirling[n]
    }

    pub fn bell(&self, n: usize) -> BigUint {
        self.bell[n].clone()
    }
}

fn shared() -> &'static RwLock<CountTable> {
    static TABLE: OnceLock<RwLock<CountTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(CountTable::new(32)))
}

fn with_table<T>(n: usize, f: impl FnOnce(&CountTable) -> T) -> T {
    {
        let table = shared().read().expect("count table lock poisoned");
        if table.max_n() >= n {
            return f(&table);
        }
    }
    let mut table = shared().write().expect("count table lock poisoned");
    table.extend_to(n);
    f(&table)
}

/// The `n`-th Bell number: the number of partitions of an `n`-set.
pub fn bell(n: usize) -> BigUint {
    with_table(n, |t| t.bell(n))
}

/// Partitions of an `n`-set into exactly `k` non-empty blocks.
pub fn stirling(n: usize, k: usize) -> BigUint {
    with_table(n, |t| t.stirling(n, k))
}

/// `S(n, 0) + ... + S(n, k)`: partitions with at most `k` blocks.
pub fn stirling_sum(n: usize, k: usize) -> BigUint {
    with_table(n, |t| t.row(n).iter().take(k.saturating_add(1)).sum())
}

/// `S(n, u) + ... + S(n, v)`; zero when `u > v`.
pub fn q_sum(n: usize, u: usize, v: usize) -> BigUint {
    if u > v || u > n {
        return BigUint::zero();
    }
    with_table(n, |t| t.row(n)[u..=v.min(n)].iter().sum())
}

/// Number of strings an enumeration under `spec` visits.
pub fn count_for(spec: &BlockCountSpec) -> BigUint {
    let n = spec.n();
    with_table(n, |t| spec.k_values().iter().map(|&k| t.stirling(n, k)).sum())
}
