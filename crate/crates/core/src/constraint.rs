//! Block-count constraints and the lookup tables the generalized steppers need.

use std::fmt;

use crate::error::SpecError;

/// Which block counts an enumeration admits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    Unrestricted,
    AtMost(usize),
    Exactly(usize),
    /// Inclusive `kmin..=kmax`.
    Range(usize, usize),
    Set(Vec<usize>),
}

impl Regime {
    fn check(&self) -> Result<(), SpecError> {
        match self {
            Regime::Unrestricted => Ok(()),
            Regime::AtMost(k) | Regime::Exactly(k) if *k == 0 => Err(SpecError::ZeroBlocks),
            Regime::AtMost(_) | Regime::Exactly(_) => Ok(()),
            Regime::Range(kmin, _) if *kmin == 0 => Err(SpecError::ZeroBlocks),
            Regime::Range(kmin, kmax) if kmin > kmax => Err(SpecError::InvertedRange {
                kmin: *kmin,
                kmax: *kmax,
            }),
            Regime::Range(..) => Ok(()),
            Regime::Set(ks) if ks.is_empty() => Err(SpecError::EmptySet),
            Regime::Set(ks) if ks.contains(&0) => Err(SpecError::ZeroBlocks),
            Regime::Set(_) => Ok(()),
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::Unrestricted => f.write_str("unrestricted"),
            Regime::AtMost(k) => write!(f, "at-most:{k}"),
            Regime::Exactly(k) => write!(f, "exactly:{k}"),
            Regime::Range(lo, hi) => write!(f, "range:{lo},{hi}"),
            Regime::Set(ks) => {
                f.write_str("set:")?;
                f.write_str(&crate::rgs::format_digits(ks))
            }
        }
    }
}

/// A [`Regime`] resolved against a set size `n`.
///
/// `k_values` is the sorted set of admissible block counts after clamping to
/// `1..=n`. It may be empty (e.g. `Exactly(5)` with `n = 3`), in which case
/// nothing is enumerated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCountSpec {
    regime: Regime,
    n: usize,
    k_values: Vec<usize>,
    // m[i] = least admissible count >= i for 1 <= i <= kmax; slot 0 unused.
    m: Vec<usize>,
    // r[i] = greatest admissible count <= i for kmin <= i <= n; slots below kmin unused.
    r: Vec<usize>,
}

impl BlockCountSpec {
    pub fn new(regime: Regime, n: usize) -> Result<Self, SpecError> {
        if n == 0 {
            return Err(SpecError::ZeroElements);
        }
        regime.check()?;
        let mut k_values: Vec<usize> = match &regime {
            Regime::Unrestricted => (1..=n).collect(),
            Regime::AtMost(k) => (1..=(*k).min(n)).collect(),
            Regime::Exactly(k) => vec![*k],
            Regime::Range(lo, hi) => (*lo..=*hi).collect(),
            Regime::Set(ks) => ks.clone(),
        };
        k_values.retain(|&k| (1..=n).contains(&k));
        k_values.sort_unstable();
        k_values.dedup();

        let (m, r) = match (k_values.first(), k_values.last()) {
            (Some(&kmin), Some(&kmax)) => {
                let mut m = vec![kmin; kmax + 1];
                let mut next = kmax;
                for i in (1..=kmax).rev() {
                    if k_values.binary_search(&i).is_ok() {
                        next = i;
                    }
                    m[i] = next;
                }
                let mut r = vec![kmin; n + 1];
                let mut prev = kmin;
                for (i, slot) in r.iter_mut().enumerate().skip(kmin) {
                    if k_values.binary_search(&i).is_ok() {
                        prev = i;
                    }
                    *slot = prev;
                }
                (m, r)
            }
            _ => (Vec::new(), Vec::new()),
        };

        Ok(BlockCountSpec {
            regime,
            n,
            k_values,
            m,
            r,
        })
    }

    pub fn regime(&self) -> &Regime {
        &self.regime
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k_values(&self) -> &[usize] {
        &self.k_values
    }

    pub fn is_empty(&self) -> bool {
        self.k_values.is_empty()
    }

    pub fn kmin(&self) -> Option<usize> {
        self.k_values.first().copied()
    }

    pub fn kmax(&self) -> Option<usize> {
        self.k_values.last().copied()
    }

    pub fn admits(&self, blocks: usize) -> bool {
        self.k_values.binary_search(&blocks).is_ok()
    }

    /// True when the admissible counts form one unbroken run `kmin..=kmax`.
    pub fn is_contiguous(&self) -> bool {
        match (self.kmin(), self.kmax()) {
            (Some(lo), Some(hi)) => hi - lo + 1 == self.k_values.len(),
            _ => false,
        }
    }

    /// `m` indexed from 1: entry `i - 1` is the least admissible count `>= i`.
    pub fn m_lookup(&self) -> &[usize] {
        self.m.get(1..).unwrap_or(&[])
    }

    /// `r` restricted to its defined range: entry `j` is the greatest
    /// admissible count `<= kmin + j`.
    pub fn r_lookup(&self) -> &[usize] {
        match self.kmin() {
            Some(kmin) => &self.r[kmin..],
            None => &[],
        }
    }

    /// Least admissible count `>= i`, if any.
    #[inline]
    pub fn min_at_least(&self, i: usize) -> Option<usize> {
        self.m.get(i.max(1)).copied()
    }

    /// Greatest admissible count `<= i`, if any.
    #[inline]
    pub fn max_at_most(&self, i: usize) -> Option<usize> {
        let kmin = self.kmin()?;
        if i < kmin {
            None
        } else {
            Some(self.r[i.min(self.n)])
        }
    }

    pub(crate) fn m_table(&self) -> &[usize] {
        &self.m
    }

    pub(crate) fn r_table(&self) -> &[usize] {
        &self.r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(regime: Regime, n: usize) -> BlockCountSpec {
        BlockCountSpec::new(regime, n).unwrap()
    }

    #[test]
    fn m_lookup_for_sparse_set() {
        let s = spec(Regime::Set(vec![5, 2]), 6);
        assert_eq!(s.k_values(), &[2, 5]);
        assert_eq!(s.m_lookup(), &[2, 2, 5, 5, 5]);
        assert_eq!(s.r_lookup(), &[2, 2, 2, 5, 5]);
        assert_eq!(s.min_at_least(6), None);
        assert_eq!(s.max_at_most(1), None);
        assert_eq!(s.max_at_most(4), Some(2));
        assert_eq!(s.max_at_most(9), Some(5));
    }

    #[test]
    fn contiguous_m_is_max_of_i_and_kmin() {
        let s = spec(Regime::Range(3, 6), 8);
        for (i, &m) in (1..).zip(s.m_lookup()) {
            assert_eq!(m, i.max(3));
        }
        assert!(s.is_contiguous());
        assert!(!spec(Regime::Set(vec![1, 3]), 4).is_contiguous());
    }

    #[test]
    fn clamping() {
        assert_eq!(spec(Regime::AtMost(9), 4).k_values(), &[1, 2, 3, 4]);
        assert!(spec(Regime::Exactly(5), 3).is_empty());
        assert_eq!(spec(Regime::Set(vec![7, 2, 2, 3]), 4).k_values(), &[2, 3]);
        assert!(spec(Regime::Set(vec![7]), 4).is_empty());
        assert_eq!(spec(Regime::Range(2, 10), 4).k_values(), &[2, 3, 4]);
        assert_eq!(spec(Regime::Unrestricted, 3).k_values(), &[1, 2, 3]);
    }

    #[test]
    fn rejects_invalid_regimes() {
        use SpecError::*;
        let bad = [
            (Regime::AtMost(0), ZeroBlocks),
            (Regime::Exactly(0), ZeroBlocks),
            (Regime::Range(0, 2), ZeroBlocks),
            (Regime::Range(3, 2), InvertedRange { kmin: 3, kmax: 2 }),
            (Regime::Set(vec![]), EmptySet),
            (Regime::Set(vec![0, 2]), ZeroBlocks),
        ];
        for (regime, err) in bad {
            assert_eq!(BlockCountSpec::new(regime, 4), Err(err));
        }
        assert_eq!(
            BlockCountSpec::new(Regime::Unrestricted, 0),
            Err(ZeroElements)
        );
    }

    #[test]
    fn display() {
        assert_eq!(Regime::Set(vec![2, 5]).to_string(), "set:2,5");
        assert_eq!(Regime::Range(1, 3).to_string(), "range:1,3");
    }
}
