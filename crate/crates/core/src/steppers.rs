//! In-place successor and predecessor steps on `(a, b)` state.
//!
//! Every stepper takes the current digits `a` (length `n`) and their prefix
//! maxima `b` (length `n + 1`, `b[i] = max(a[..i])`), rewrites both to the next
//! (or previous) admissible string and returns `true`, or leaves them untouched
//! and returns `false` once the enumeration is over. Digits are block labels
//! starting at 0, so a string with `k` blocks has largest digit `k - 1`; every
//! bound below is expressed as such a digit ceiling.
//!
//! The steppers are generic over a [`Probe`], which `()` implements as a
//! no-op; pass an [`OpCounters`] to tally work.

/// Receives notifications about the primitive operations a stepper performs.
pub trait Probe {
    /// One evaluation of a leftward scan condition.
    #[inline(always)]
    fn scan(&mut self) {}
    /// One assignment to a digit of `a`.
    #[inline(always)]
    fn digit_write(&mut self) {}
    /// One assignment to a slot of `b`.
    #[inline(always)]
    fn maximum_write(&mut self) {}
    /// A full transition (possibly several inner steps) has finished.
    #[inline(always)]
    fn end_transition(&mut self) {}
}

impl Probe for () {}

/// Operation tallies for amortized-cost measurements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounters {
    pub digit_writes: u64,
    pub scan_steps: u64,
    pub next_calls: u64,
    pub maximum_writes: u64,
    /// Largest `scan_steps + digit_writes` seen within a single transition.
    pub max_transition_work: u64,
    current_work: u64,
}

impl OpCounters {
    pub fn writes_per_call(&self) -> f64 {
        if self.next_calls == 0 {
            0.0
        } else {
            self.digit_writes as f64 / self.next_calls as f64
        }
    }
}

impl Probe for OpCounters {
    #[inline(always)]
    fn scan(&mut self) {
        self.scan_steps += 1;
        self.current_work += 1;
    }

    #[inline(always)]
    fn digit_write(&mut self) {
        self.digit_writes += 1;
        self.current_work += 1;
    }

    #[inline(always)]
    fn maximum_write(&mut self) {
        self.maximum_writes += 1;
    }

    #[inline(always)]
    fn end_transition(&mut self) {
        self.next_calls += 1;
        self.max_transition_work = self.max_transition_work.max(self.current_work);
        self.current_work = 0;
    }
}

impl<P: Probe + ?Sized> Probe for &mut P {
    #[inline(always)]
    fn scan(&mut self) {
        (**self).scan()
    }
    #[inline(always)]
    fn digit_write(&mut self) {
        (**self).digit_write()
    }
    #[inline(always)]
    fn maximum_write(&mut self) {
        (**self).maximum_write()
    }
    #[inline(always)]
    fn end_transition(&mut self) {
        (**self).end_transition()
    }
}

/// Largest digit of the whole string, read from the last position only.
#[inline(always)]
fn top_label(a: &[usize], b: &[usize]) -> usize {
    let last = a.len() - 1;
    a[last].max(b[last])
}

/// Successor among all partitions.
#[inline(always)]
pub fn next_v<P: Probe>(a: &mut [usize], b: &mut [usize], probe: &mut P) -> bool {
    let n = a.len();
    next_w(a, b, n, probe)
}

/// How a W step reached its successor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum WStep {
    /// Only the last digit changed.
    Bumped,
    /// A digit left of the last was incremented and the tail reset to zeros.
    Carried,
    Done,
}

#[inline(always)]
fn step_w<P: Probe>(a: &mut [usize], b: &mut [usize], k: usize, probe: &mut P) -> WStep {
    let n = a.len();
    let b = &mut b[..=n];
    let ceiling = k - 1;
    let mut c = n - 1;
    probe.scan();
    // most calls only bump the last digit
    let last = a[c];
    if c > 0 && last != ceiling && last <= b[c] {
        a[c] = last + 1;
        probe.digit_write();
        return WStep::Bumped;
    }
    while c > 0 && (a[c] == ceiling || a[c] > b[c]) {
        c -= 1;
        probe.scan();
    }
    if c == 0 {
        return WStep::Done;
    }
    a[c] += 1;
    probe.digit_write();
    for i in c + 1..n {
        a[i] = 0;
        probe.digit_write();
        b[i] = a[i - 1].max(b[i - 1]);
        probe.maximum_write();
    }
    WStep::Carried
}

/// Successor among partitions with at most `k` blocks.
#[inline(always)]
pub fn next_w<P: Probe>(a: &mut [usize], b: &mut [usize], k: usize, probe: &mut P) -> bool {
    step_w(a, b, k, probe) != WStep::Done
}

/// Successor among partitions with exactly `k` blocks, skipping one
/// at-most-`k` string at a time.
#[inline(always)]
pub fn next_x<P: Probe>(a: &mut [usize], b: &mut [usize], k: usize, probe: &mut P) -> bool {
    loop {
        if !next_w(a, b, k, probe) {
            return false;
        }
        if top_label(a, b) == k - 1 {
            return true;
        }
    }
}

/// Successor among partitions with exactly `k` blocks, repairing a short
/// string in one right-to-left pass instead of stepping through the run of
/// strings with too few blocks.
///
/// The current string must have exactly `k` blocks. Bumping its last digit
/// cannot lose a block, so only a carry can leave a string that needs repair.
#[inline(always)]
pub fn next_y<P: Probe>(a: &mut [usize], b: &mut [usize], k: usize, probe: &mut P) -> bool {
    match step_w(a, b, k, probe) {
        WStep::Bumped => true,
        WStep::Carried => {
            if top_label(a, b) != k - 1 {
                raise_tail(a, b, k, probe);
            }
            true
        }
        WStep::Done => false,
    }
}

/// Rewrites the tail right to left with `k - 1, k - 2, ...` until the label
/// no longer exceeds the prefix maximum.
#[inline(always)]
fn raise_tail<P: Probe>(a: &mut [usize], b: &mut [usize], k: usize, probe: &mut P) {
    let mut i = a.len() - 1;
    let mut label = k - 1;
    probe.scan();
    while label > b[i] {
        a[i] = label;
        probe.digit_write();
        b[i] = label - 1;
        probe.maximum_write();
        i -= 1;
        label -= 1;
        probe.scan();
    }
}

/// Writes the lexicographically least admissible tail after position `c`:
/// zeros while there is room, then fresh labels up to `target_blocks`.
#[inline(always)]
fn fill_least_tail<P: Probe>(
    a: &mut [usize],
    b: &mut [usize],
    c: usize,
    target_blocks: usize,
    probe: &mut P,
) {
    let n = a.len();
    let blocks = b[c + 1] + 1;
    let fresh = target_blocks.saturating_sub(blocks);
    let zeros = (n - 1 - c) - fresh;
    let mut i = c + 1;
    for _ in 0..zeros {
        a[i] = 0;
        probe.digit_write();
        b[i + 1] = b[i];
        probe.maximum_write();
        i += 1;
    }
    while i < n {
        a[i] = b[i] + 1;
        probe.digit_write();
        b[i + 1] = a[i];
        probe.maximum_write();
        i += 1;
    }
}

/// Writes the lexicographically greatest tail after position `c` whose block
/// count stays at most `target_blocks`: fresh labels while below the target,
/// then the top label repeated.
#[inline(always)]
fn fill_greatest_tail<P: Probe>(
    a: &mut [usize],
    b: &mut [usize],
    c: usize,
    target_blocks: usize,
    probe: &mut P,
) {
    let n = a.len();
    let top = target_blocks - 1;
    let mut i = c + 1;
    while i < n && b[i] < top {
        a[i] = b[i] + 1;
        probe.digit_write();
        b[i + 1] = a[i];
        probe.maximum_write();
        i += 1;
    }
    while i < n {
        a[i] = top;
        probe.digit_write();
        b[i + 1] = top;
        probe.maximum_write();
        i += 1;
    }
}

/// Successor among partitions with `kmin..=kmax` blocks.
#[inline(always)]
pub fn next_z<P: Probe>(
    a: &mut [usize],
    b: &mut [usize],
    kmin: usize,
    kmax: usize,
    probe: &mut P,
) -> bool {
    let n = a.len();
    let ceiling = kmax - 1;
    let mut c = n - 1;
    probe.scan();
    while c > 0 && (a[c] == ceiling || a[c] > b[c]) {
        c -= 1;
        probe.scan();
    }
    if c == 0 {
        return false;
    }
    a[c] += 1;
    probe.digit_write();
    b[c + 1] = a[c].max(b[c]);
    probe.maximum_write();
    fill_least_tail(a, b, c, kmin, probe);
    true
}

/// Predecessor among partitions with `kmin..=kmax` blocks.
#[inline(always)]
pub fn next_z_star<P: Probe>(
    a: &mut [usize],
    b: &mut [usize],
    kmin: usize,
    kmax: usize,
    probe: &mut P,
) -> bool {
    let n = a.len();
    // After decrementing a[c] the prefix through c has b[c] + 1 blocks, and
    // the n - 1 - c positions to its right can open at most one block each.
    let mut c = n - 1;
    probe.scan();
    while c > 0 && (a[c] == 0 || b[c] + 1 + (n - 1 - c) < kmin) {
        c -= 1;
        probe.scan();
    }
    if c == 0 {
        return false;
    }
    a[c] -= 1;
    probe.digit_write();
    b[c + 1] = a[c].max(b[c]);
    probe.maximum_write();
    fill_greatest_tail(a, b, c, kmax, probe);
    true
}

/// Successor among partitions whose block count lies in an arbitrary set.
///
/// `m[i]` is the least admissible count `>= i` for `1 <= i <= kmax`
/// (see [`BlockCountSpec`](crate::BlockCountSpec)).
#[inline(always)]
pub fn next_u<P: Probe>(a: &mut [usize], b: &mut [usize], m: &[usize], probe: &mut P) -> bool {
    let n = a.len();
    let kmax = m.len() - 1;
    let ceiling = kmax - 1;
    // Incrementing a[c] leaves t + 1 blocks in the prefix; the tail then has to
    // open m[t + 1] - (t + 1) more, one per remaining position at most.
    let blocked = |a: &[usize], b: &[usize], c: usize| {
        if a[c] == ceiling || a[c] > b[c] {
            return true;
        }
        let blocks = (a[c] + 1).max(b[c]) + 1;
        blocks > kmax || m[blocks] - blocks > n - 1 - c
    };
    let mut c = n - 1;
    probe.scan();
    while c > 0 && blocked(a, b, c) {
        c -= 1;
        probe.scan();
    }
    if c == 0 {
        return false;
    }
    a[c] += 1;
    probe.digit_write();
    b[c + 1] = a[c].max(b[c]);
    probe.maximum_write();
    let target = m[b[c + 1] + 1];
    fill_least_tail(a, b, c, target, probe);
    true
}

/// Predecessor among partitions whose block count lies in an arbitrary set.
///
/// `m` is as for [`next_u`]; `r[i]` is the greatest admissible count `<= i`
/// for `kmin <= i <= n`.
#[inline(always)]
pub fn next_u_star<P: Probe>(
    a: &mut [usize],
    b: &mut [usize],
    m: &[usize],
    r: &[usize],
    probe: &mut P,
) -> bool {
    let n = a.len();
    // Decrementing a[c] leaves b[c] + 1 blocks in the prefix, since
    // a[c] <= b[c] + 1. The least admissible count from there must fit.
    let blocked = |a: &[usize], b: &[usize], c: usize| {
        if a[c] == 0 {
            return true;
        }
        let blocks = b[c] + 1;
        m[blocks] - blocks > n - 1 - c
    };
    let mut c = n - 1;
    probe.scan();
    while c > 0 && blocked(a, b, c) {
        c -= 1;
        probe.scan();
    }
    if c == 0 {
        return false;
    }
    a[c] -= 1;
    probe.digit_write();
    b[c + 1] = a[c].max(b[c]);
    probe.maximum_write();
    let reachable = b[c + 1] + 1 + (n - 1 - c);
    let target = r[reachable];
    fill_greatest_tail(a, b, c, target, probe);
    true
}
