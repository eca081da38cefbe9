//! Brute-force ground truth for the steppers.
//!
//! Builds every restricted growth string by extending each prefix with every
//! label from 0 to one past its running maximum, then filters by block count.
//! Nothing here touches the stepper code.

use crate::constraint::BlockCountSpec;
use crate::error::OracleError;

/// Largest `n` the oracle will materialize (`B_12` = 4,213,597 strings).
pub const MAX_N: usize = 12;

/// All restricted growth strings of length `n` in lexicographic order.
pub fn generate_all(n: usize) -> Result<Vec<Vec<usize>>, OracleError> {
    if n == 0 || n > MAX_N {
        return Err(OracleError::OutOfRange { n, max: MAX_N });
    }
    let mut out = Vec::new();
    let mut prefix = vec![0];
    extend(&mut prefix, 0, n, &mut out);
    Ok(out)
}

fn extend(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for d in 0..=max + 1 {
        prefix.push(d);
        extend(prefix, max.max(d), n, out);
        prefix.pop();
    }
}

fn distinct_labels(s: &[usize]) -> usize {
    let mut seen = vec![false; s.len()];
    s.iter().filter(|&&d| !std::mem::replace(&mut seen[d], true)).count()
}

/// Keeps the strings whose number of distinct labels is admitted by `spec`.
pub fn filter_by_spec(strings: &[Vec<usize>], spec: &BlockCountSpec) -> Vec<Vec<usize>> {
    strings
        .iter()
        .filter(|s| spec.k_values().contains(&distinct_labels(s)))
        .cloned()
        .collect()
}

/// The full filtered list for one `(n, spec)` pair.
#[derive(Clone, Debug)]
pub struct OracleRun {
    pub n: usize,
    pub spec: BlockCountSpec,
    pub strings: Vec<Vec<usize>>,
}

impl OracleRun {
    pub fn new(spec: BlockCountSpec) -> Result<Self, OracleError> {
        let n = spec.n();
        let strings = filter_by_spec(&generate_all(n)?, &spec);
        Ok(OracleRun { n, spec, strings })
    }
}
