//! Resumable enumeration state and the dispatching facade over the steppers.

use std::fmt;
use std::str::FromStr;

use crate::constraint::{BlockCountSpec, Regime};
use crate::error::{SpecError, TokenError};
use crate::rgs::{self, PrefixMaxima};
use crate::steppers::{self, Probe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Direction {
    #[default]
    Forward,
    Reverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Active,
    Exhausted,
}

/// Outcome of one transition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transition {
    Advanced,
    Exhausted,
}

impl Transition {
    fn from_step(advanced: bool) -> Self {
        if advanced {
            Transition::Advanced
        } else {
            Transition::Exhausted
        }
    }
}

/// The stepper a state is driven by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stepper {
    V,
    W,
    X,
    Y,
    Z,
    ZStar,
    U,
    UStar,
}

impl Stepper {
    /// The stepper [`EnumeratorState::advance`] uses for a regime and direction.
    pub fn for_regime(regime: &Regime, direction: Direction) -> Self {
        match (direction, regime) {
            (Direction::Forward, Regime::Unrestricted) => Stepper::V,
            (Direction::Forward, Regime::AtMost(_)) => Stepper::W,
            (Direction::Forward, Regime::Exactly(_)) => Stepper::Y,
            (Direction::Forward, Regime::Range(..)) => Stepper::Z,
            (Direction::Forward, Regime::Set(_)) => Stepper::U,
            (Direction::Reverse, Regime::Set(_)) => Stepper::UStar,
            (Direction::Reverse, _) => Stepper::ZStar,
        }
    }
}

/// Current partition, its prefix maxima and the constraint being enumerated.
///
/// A state always starts on the first admissible string (or exhausted if
/// there is none). Each transition rewrites the digits in place; once a
/// stepper reports the end, the state stays exhausted and further calls are
/// no-ops. `P` receives operation counts, see [`OpCounters`](crate::OpCounters).
#[derive(Clone, Debug)]
pub struct EnumeratorState<P = ()> {
    a: Vec<usize>,
    b: Vec<usize>,
    spec: BlockCountSpec,
    direction: Direction,
    status: Status,
    probe: P,
}

impl EnumeratorState<()> {
    /// Positions the enumeration on its first string: for forward order
    /// `0^(n-kmin) 0 1 .. kmin-1`, for reverse order `0 1 .. kmax-1` padded with
    /// `kmax - 1`.
    pub fn first(spec: BlockCountSpec, direction: Direction) -> Self {
        let n = spec.n();
        let a = match (direction, spec.kmin(), spec.kmax()) {
            (_, None, _) | (_, _, None) => vec![0; n],
            (Direction::Forward, Some(kmin), _) => {
                let zeros = n - kmin;
                (0..n).map(|i| i.saturating_sub(zeros)).collect()
            }
            (Direction::Reverse, _, Some(kmax)) => (0..n).map(|i| i.min(kmax - 1)).collect(),
        };
        let b = PrefixMaxima::of(&a).into_vec();
        let status = if spec.is_empty() {
            Status::Exhausted
        } else {
            Status::Active
        };
        EnumeratorState {
            a,
            b,
            spec,
            direction,
            status,
            probe: (),
        }
    }

    pub fn new(n: usize, regime: Regime, direction: Direction) -> Result<Self, SpecError> {
        Ok(Self::first(BlockCountSpec::new(regime, n)?, direction))
    }

    /// Restores a state written by [`EnumeratorState::to_token`].
    pub fn from_token(token: &str) -> Result<Self, TokenError> {
        token.parse::<ResumeToken>()?.into_state()
    }
}

impl<P: Probe> EnumeratorState<P> {
    pub fn with_probe<Q: Probe>(self, probe: Q) -> EnumeratorState<Q> {
        EnumeratorState {
            a: self.a,
            b: self.b,
            spec: self.spec,
            direction: self.direction,
            status: self.status,
            probe,
        }
    }

    pub fn probe(&self) -> &P {
        &self.probe
    }

    pub fn probe_mut(&mut self) -> &mut P {
        &mut self.probe
    }

    pub fn spec(&self) -> &BlockCountSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_exhausted(&self) -> bool {
        self.status == Status::Exhausted
    }

    /// The current string, or `None` once exhausted.
    pub fn current(&self) -> Option<&[usize]> {
        match self.status {
            Status::Active => Some(&self.a),
            Status::Exhausted => None,
        }
    }

    /// Raw digits; after exhaustion these are the last string visited.
    pub fn digits(&self) -> &[usize] {
        &self.a
    }

    /// Prefix maxima, `n + 1` slots.
    pub fn maxima(&self) -> &[usize] {
        &self.b
    }

    pub fn block_count(&self) -> usize {
        rgs::block_count(&self.a, &self.b)
    }

    /// Checks the state invariants: valid digits, consistent maxima, admitted
    /// block count.
    pub fn check_invariants(&self) -> bool {
        if self.is_exhausted() {
            return true;
        }
        rgs::validate(&self.a)
            && PrefixMaxima::is_consistent(&self.a, &self.b)
            && self.spec.admits(self.block_count())
    }

    pub fn stepper(&self) -> Stepper {
        Stepper::for_regime(self.spec.regime(), self.direction)
    }

    fn step(&mut self, f: impl FnOnce(&mut [usize], &mut [usize], &mut P) -> bool) -> Transition {
        if self.is_exhausted() {
            return Transition::Exhausted;
        }
        let advanced = f(&mut self.a, &mut self.b, &mut self.probe);
        self.probe.end_transition();
        self.finish(advanced)
    }

    /// Moves to the next (or, for reverse states, previous) admissible string
    /// using the stepper for the state's regime.
    pub fn advance(&mut self) -> Transition {
        if self.is_exhausted() {
            return Transition::Exhausted;
        }
        let (Some(kmin), Some(kmax)) = (self.spec.kmin(), self.spec.kmax()) else {
            self.status = Status::Exhausted;
            return Transition::Exhausted;
        };
        match self.stepper() {
            Stepper::V => self.next_v(),
            Stepper::W => self.next_w(kmax),
            Stepper::X => self.next_x(kmax),
            Stepper::Y => self.next_y(kmax),
            Stepper::Z => self.next_z(kmin, kmax),
            Stepper::ZStar => self.next_z_star(kmin, kmax),
            Stepper::U => self.next_u(),
            Stepper::UStar => self.next_u_star(),
        }
    }

    pub fn next_v(&mut self) -> Transition {
        self.step(|a, b, p| steppers::next_v(a, b, p))
    }

    /// # Panics
    /// If `k == 0`.
    pub fn next_w(&mut self, k: usize) -> Transition {
        assert!(k >= 1, "block count must be positive");
        self.step(|a, b, p| steppers::next_w(a, b, k, p))
    }

    pub fn next_x(&mut self, k: usize) -> Transition {
        assert!(k >= 1, "block count must be positive");
        self.step(|a, b, p| steppers::next_x(a, b, k, p))
    }

    pub fn next_y(&mut self, k: usize) -> Transition {
        assert!(k >= 1, "block count must be positive");
        self.step(|a, b, p| steppers::next_y(a, b, k, p))
    }

    pub fn next_z(&mut self, kmin: usize, kmax: usize) -> Transition {
        assert!(1 <= kmin && kmin <= kmax, "need 1 <= kmin <= kmax");
        self.step(|a, b, p| steppers::next_z(a, b, kmin, kmax, p))
    }

    pub fn next_z_star(&mut self, kmin: usize, kmax: usize) -> Transition {
        assert!(1 <= kmin && kmin <= kmax, "need 1 <= kmin <= kmax");
        self.step(|a, b, p| steppers::next_z_star(a, b, kmin, kmax, p))
    }

    /// Steps through the admissible counts of the state's own spec.
    pub fn next_u(&mut self) -> Transition {
        if self.is_exhausted() || self.spec.is_empty() {
            return self.finish(false);
        }
        let advanced =
            steppers::next_u(&mut self.a, &mut self.b, self.spec.m_table(), &mut self.probe);
        self.probe.end_transition();
        self.finish(advanced)
    }

    pub fn next_u_star(&mut self) -> Transition {
        if self.is_exhausted() || self.spec.is_empty() {
            return self.finish(false);
        }
        let advanced = steppers::next_u_star(
            &mut self.a,
            &mut self.b,
            self.spec.m_table(),
            self.spec.r_table(),
            &mut self.probe,
        );
        self.probe.end_transition();
        self.finish(advanced)
    }

    fn finish(&mut self, advanced: bool) -> Transition {
        if !advanced {
            self.status = Status::Exhausted;
        }
        Transition::from_step(advanced)
    }

    /// Serializes the state; prefix maxima are recomputed on restore.
    pub fn to_token(&self) -> String {
        ResumeToken {
            n: self.n(),
            regime: self.spec.regime().clone(),
            direction: self.direction,
            digits: self.current().map(<[usize]>::to_vec),
        }
        .to_string()
    }

    /// Iterator over the remaining strings, starting with the current one.
    pub fn into_iter_from_current(self) -> Partitions<P> {
        Partitions {
            pending: !self.is_exhausted(),
            state: self,
        }
    }

    /// Iterator over the strings after the current one.
    pub fn into_iter_after_current(self) -> Partitions<P> {
        Partitions {
            pending: false,
            state: self,
        }
    }
}

impl<P: Probe> IntoIterator for EnumeratorState<P> {
    type Item = Vec<usize>;
    type IntoIter = Partitions<P>;

    fn into_iter(self) -> Partitions<P> {
        self.into_iter_from_current()
    }
}

/// Owned-item iterator over an enumeration. Fused.
#[derive(Clone, Debug)]
pub struct Partitions<P = ()> {
    state: EnumeratorState<P>,
    pending: bool,
}

impl<P: Probe> Partitions<P> {
    pub fn state(&self) -> &EnumeratorState<P> {
        &self.state
    }

    pub fn into_state(self) -> EnumeratorState<P> {
        self.state
    }
}

impl<P: Probe> Iterator for Partitions<P> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if std::mem::take(&mut self.pending) {
            return self.state.current().map(<[usize]>::to_vec);
        }
        match self.state.advance() {
            Transition::Advanced => self.state.current().map(<[usize]>::to_vec),
            Transition::Exhausted => None,
        }
    }
}

impl<P: Probe> std::iter::FusedIterator for Partitions<P> {}

/// Text form of a saved state:
/// `n=6;regime=set:2,5;direction=forward;digits=0,1,1,1,1,1`.
/// An exhausted state carries `digits=end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResumeToken {
    pub n: usize,
    pub regime: Regime,
    pub direction: Direction,
    pub digits: Option<Vec<usize>>,
}

impl ResumeToken {
    pub fn into_state(self) -> Result<EnumeratorState, TokenError> {
        let spec = BlockCountSpec::new(self.regime, self.n)?;
        let mut state = EnumeratorState::first(spec, self.direction);
        match self.digits {
            None => state.status = Status::Exhausted,
            Some(digits) => {
                if digits.len() != self.n {
                    return Err(TokenError::Mismatch(format!(
                        "expected {} digits, found {}",
                        self.n,
                        digits.len()
                    )));
                }
                let digits = rgs::RestrictedGrowthString::new(digits)?;
                let blocks = digits.block_count();
                if !state.spec.admits(blocks) {
                    return Err(TokenError::Mismatch(format!(
                        "{digits} has {blocks} blocks, not admitted by {}",
                        state.spec.regime()
                    )));
                }
                state.b = digits.prefix_maxima().into_vec();
                state.a = digits.into_digits();
                state.status = Status::Active;
            }
        }
        Ok(state)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Reverse => "reverse",
        })
    }
}

impl FromStr for Direction {
    type Err = TokenError;

    fn from_str(s: &str) -> Result<Self, TokenError> {
        match s {
            "forward" => Ok(Direction::Forward),
            "reverse" => Ok(Direction::Reverse),
            other => Err(TokenError::Malformed(other.to_string())),
        }
    }
}

impl FromStr for Regime {
    type Err = TokenError;

    fn from_str(s: &str) -> Result<Self, TokenError> {
        let malformed = || TokenError::Malformed(s.to_string());
        let (kind, params) = s.split_once(':').unwrap_or((s, ""));
        let values = if params.is_empty() {
            Vec::new()
        } else {
            parse_list(params).ok_or_else(malformed)?
        };
        match (kind, values.as_slice()) {
            ("unrestricted", []) => Ok(Regime::Unrestricted),
            ("at-most", &[k]) => Ok(Regime::AtMost(k)),
            ("exactly", &[k]) => Ok(Regime::Exactly(k)),
            ("range", &[lo, hi]) => Ok(Regime::Range(lo, hi)),
            ("set", ks) if !ks.is_empty() => Ok(Regime::Set(ks.to_vec())),
            _ => Err(malformed()),
        }
    }
}

fn parse_list(text: &str) -> Option<Vec<usize>> {
    text.split(',').map(|t| t.trim().parse().ok()).collect()
}

impl fmt::Display for ResumeToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={};regime={};direction={};digits=",
            self.n, self.regime, self.direction
        )?;
        match &self.digits {
            Some(d) => f.write_str(&rgs::format_digits(d)),
            None => f.write_str("end"),
        }
    }
}

impl FromStr for ResumeToken {
    type Err = TokenError;

    fn from_str(s: &str) -> Result<Self, TokenError> {
        let mut n = None;
        let mut regime = None;
        let mut direction = None;
        let mut digits = None;
        for field in s.trim().split(';') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| TokenError::Malformed(field.to_string()))?;
            match key {
                "n" => {
                    n = Some(
                        value
                            .parse::<usize>()
                            .map_err(|_| TokenError::Malformed(field.to_string()))?,
                    )
                }
                "regime" => regime = Some(value.parse::<Regime>()?),
                "direction" => direction = Some(value.parse::<Direction>()?),
                "digits" => {
                    digits = Some(match value {
                        "end" => None,
                        v => Some(
                            parse_list(v).ok_or_else(|| TokenError::Malformed(field.to_string()))?,
                        ),
                    })
                }
                _ => return Err(TokenError::Malformed(field.to_string())),
            }
        }
        Ok(ResumeToken {
            n: n.ok_or(TokenError::MissingField("n"))?,
            regime: regime.ok_or(TokenError::MissingField("regime"))?,
            direction: direction.ok_or(TokenError::MissingField("direction"))?,
            digits: digits.ok_or(TokenError::MissingField("digits"))?,
        })
    }
}
