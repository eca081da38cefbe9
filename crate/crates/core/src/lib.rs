//! Lexicographic enumeration of set partitions encoded as restricted growth
//! strings, under five kinds of block-count constraint: none, at most `k`,
//! exactly `k`, a range `kmin..=kmax`, or an arbitrary set `K`.
//!
//! Every stepper advances in constant amortized time with `O(n)` state.
//!
//! ```
//! use partition_enum::{Direction, EnumeratorState, Regime};
//!
//! let state = EnumeratorState::new(4, Regime::Exactly(3), Direction::Forward).unwrap();
//! let strings: Vec<Vec<usize>> = state.into_iter().collect();
//! assert_eq!(strings.len(), 6);
//! assert_eq!(strings[0], [0, 0, 1, 2]);
//! ```

pub mod bench;
pub mod constraint;
pub mod counting;
pub mod enumerator;
pub mod error;
pub mod oracle;
pub mod rgs;
pub mod steppers;

pub use constraint::{BlockCountSpec, Regime};
pub use enumerator::{
    Direction, EnumeratorState, Partitions, ResumeToken, Status, Stepper, Transition,
};
pub use error::{OracleError, RgsError, SpecError, TokenError};
pub use rgs::{BlockPartition, PrefixMaxima, RestrictedGrowthString};
pub use steppers::{OpCounters, Probe};
