//! Restricted growth strings and their correspondence with set partitions.
//!
//! A partition of `{1, ..., n}` is encoded as a string `a` of `n` block labels
//! where `a[0] = 0` and every label is at most one greater than the largest
//! label to its left. Blocks are therefore numbered in order of their least
//! element, which makes the encoding unique.
//!
//! Element positions are one-based in every external form (block listings,
//! text formats); the digit vectors themselves are ordinary zero-based slices.

use std::fmt;

use crate::error::RgsError;

/// Returns `true` iff `digits` is a non-empty restricted growth string.
pub fn validate(digits: &[usize]) -> bool {
    let Some((&first, rest)) = digits.split_first() else {
        return false;
    };
    if first != 0 {
        return false;
    }
    let mut max = 0;
    for &d in rest {
        if d > max + 1 {
            return false;
        }
        max = max.max(d);
    }
    true
}

/// Number of blocks given the digits and their prefix maxima.
///
/// `maxima[i]` must hold the largest digit among `digits[..i]`; only the last
/// position of each slice is read.
pub fn block_count(digits: &[usize], maxima: &[usize]) -> usize {
    let last = digits.len() - 1;
    digits[last].max(maxima[last]) + 1
}

/// Prefix maxima of a digit string: `maxima[i] = max(digits[..i])`, with an
/// extra trailing slot so that `maxima[n]` holds the maximum of the whole string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixMaxima(Vec<usize>);

impl PrefixMaxima {
    pub fn of(digits: &[usize]) -> Self {
        let mut maxima = Vec::with_capacity(digits.len() + 1);
        let mut running = 0;
        // slot 0: max of the empty prefix
        maxima.push(0);
        for &d in digits {
            running = running.max(d);
            maxima.push(running);
        }
        PrefixMaxima(maxima)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Checks that `maxima` agrees with `digits` at positions `0..digits.len()`.
    pub fn is_consistent(digits: &[usize], maxima: &[usize]) -> bool {
        if maxima.len() < digits.len() || digits.is_empty() {
            return false;
        }
        let mut running = 0;
        for (i, &d) in digits.iter().enumerate() {
            if maxima[i] != running {
                return false;
            }
            running = running.max(d);
        }
        true
    }
}

/// A validated restricted growth string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RestrictedGrowthString(Vec<usize>);

impl RestrictedGrowthString {
    pub fn new(digits: Vec<usize>) -> Result<Self, RgsError> {
        if digits.is_empty() {
            return Err(RgsError::Empty);
        }
        if !validate(&digits) {
            return Err(RgsError::NotRestricted(format_digits(&digits)));
        }
        Ok(RestrictedGrowthString(digits))
    }

    pub fn digits(&self) -> &[usize] {
        &self.0
    }

    pub fn into_digits(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of distinct labels, i.e. the largest label plus one.
    pub fn block_count(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0) + 1
    }

    pub fn prefix_maxima(&self) -> PrefixMaxima {
        PrefixMaxima::of(&self.0)
    }

    /// Element `i + 1` goes to block `digits[i]`.
    pub fn to_blocks(&self) -> BlockPartition {
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); self.block_count()];
        for (i, &d) in self.0.iter().enumerate() {
            blocks[d].push(i + 1);
        }
        BlockPartition(blocks)
    }

    pub fn from_blocks(partition: &BlockPartition) -> Self {
        // BlockPartition is always normalized, so labels follow block order.
        let n = partition.element_count();
        let mut digits = vec![0; n];
        for (label, block) in partition.blocks().iter().enumerate() {
            for &e in block {
                digits[e - 1] = label;
            }
        }
        RestrictedGrowthString(digits)
    }

    /// Concatenated digits, available only when every label is a single decimal digit.
    pub fn to_compact(&self) -> Option<String> {
        format_compact(&self.0)
    }

    /// Parses either the comma form (`0,1,1,0,2`) or the compact form (`01102`).
    pub fn parse(text: &str) -> Result<Self, RgsError> {
        Self::new(parse_digits(text)?)
    }
}

impl fmt::Display for RestrictedGrowthString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_digits(&self.0))
    }
}

impl TryFrom<Vec<usize>> for RestrictedGrowthString {
    type Error = RgsError;

    fn try_from(digits: Vec<usize>) -> Result<Self, RgsError> {
        Self::new(digits)
    }
}

/// Comma-joined digit values, e.g. `0,1,1,0,2`.
pub fn format_digits(digits: &[usize]) -> String {
    let mut out = String::with_capacity(digits.len() * 2);
    for (i, d) in digits.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&d.to_string());
    }
    out
}

/// Digits concatenated without separators; `None` if some digit exceeds 9.
pub fn format_compact(digits: &[usize]) -> Option<String> {
    digits
        .iter()
        .map(|&d| char::from_digit(u32::try_from(d).ok()?, 10))
        .collect()
}

/// Parses a digit sequence in comma form or, when no comma is present, compact form.
/// Does not check the restricted growth property.
pub fn parse_digits(text: &str) -> Result<Vec<usize>, RgsError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(RgsError::Empty);
    }
    if text.contains(',') {
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| RgsError::BadDigit(t.trim().to_string()))
            })
            .collect()
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| RgsError::BadDigit(c.to_string()))
            })
            .collect()
    }
}

/// A partition of `{1, ..., n}` into non-empty blocks, each sorted ascending,
/// blocks ordered by their least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockPartition(Vec<Vec<usize>>);

impl BlockPartition {
    /// Normalizes and checks `blocks` as a partition of `{1, ..., n}` where `n`
    /// is the total number of elements supplied.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self, RgsError> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        if n == 0 {
            return Err(RgsError::Empty);
        }
        let mut seen = vec![false; n];
        let mut normalized = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(RgsError::EmptyBlock);
            }
            for &e in &block {
                if e == 0 || e > n {
                    return Err(RgsError::NotCovering { element: e, n });
                }
                if std::mem::replace(&mut seen[e - 1], true) {
                    return Err(RgsError::Overlap(e));
                }
            }
            block.sort_unstable();
            normalized.push(block);
        }
        normalized.sort_unstable_by_key(|b| b[0]);
        Ok(BlockPartition(normalized))
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn element_count(&self) -> usize {
        self.0.iter().map(Vec::len).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for BlockPartition {
    /// Renders as `{1,4}{2,3}{5}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.0 {
            write!(f, "{{{}}}", format_digits(block))?;
        }
        Ok(())
    }
}
