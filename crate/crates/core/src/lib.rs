//! Exact counting of integer representations over non-standard digit
//! alphabets, and scan-verified identities about those counts.
//!
//! For an even base `d`, two digit alphabets sit on either side of the
//! standard one:
//!
//! * **hyper** digits `0..=d` — every `n >= 0` has one or more
//!   representations, counted by [`counting::hyper_count`];
//! * **balanced** digits `-l..=l` with `d = 2l >= 4` — every integer has
//!   one or more representations, counted by [`counting::balanced_count`].
//!
//! Both counts obey least-significant-digit recurrences of the same Stern
//! like shape (base 2 literally collapses onto Stern's diatomic sequence,
//! [`counting::stern`]). The crate provides:
//!
//! * [`numeral`] — digit vectors, the compressed `[(1 2)^3]_4` pattern
//!   notation, evaluation, and the repunit-based scan windows;
//! * [`counting`] — the memoized counting recurrences plus Stern and
//!   Fibonacci;
//! * [`oracle`] — independent enumeration of the actual representation
//!   sets, used to cross-check the recurrences, plus digit tests for
//!   `count == 1` and the balanced digit normalizer;
//! * [`identities`] — exhaustive verification that the hyper count shifted
//!   by `l * repunit(d, j)` agrees with the balanced count on its zero
//!   window, the covering index that reduces any hyper count to a balanced
//!   one, and counterexample construction against any other constant shift;
//! * [`extrema`] — Fibonacci maxima of both counts over their natural
//!   windows, verified by scan against closed-form argmax predictions.
//!
//! Everything is exact [`num_bigint`] arithmetic; no floating point.

pub mod counting;
pub mod error;
pub mod extrema;
pub mod identities;
pub mod numeral;
pub mod oracle;

pub use crate::counting::{
    balanced_count, fibonacci, hyper_count, shift_difference, stern, MemoCache,
};
pub use crate::error::{Error, Result};
pub use crate::extrema::{
    balanced_argmax, hyper_argmax, max_scan, verify_balanced_maxima, verify_hyper_maxima,
    MaxReport,
};
pub use crate::identities::{
    covering_index, verify_shift_window, witness_against_shift, ShiftReport,
};
pub use crate::numeral::pattern::{parse_pattern, Item, PatternExpr};
pub use crate::numeral::{
    covering_window, repunit, to_standard_digits, zero_window, Alphabet, BaseParams, DigitVec,
    Interval,
};
pub use crate::oracle::{
    balanced_is_one, count_via_enumeration, enumerate_reps, enumerate_reps_bounded, hyper_is_one,
    normalize_balanced,
};
