//! Scan-verified identities tying the hyper count to the balanced count.
//!
//! The central fact: shifting the hyper count's argument by `l * repunit(d,
//! j)` makes it agree with the balanced count everywhere on the `j`-th zero
//! window, and the agreement fails (by exactly -1) immediately outside both
//! endpoints. [`verify_shift_window`] checks that exhaustively on a window.
//!
//! Because consecutive translated windows overlap and cover all of
//! `[1, oo)`, every `n >= 1` picks up a `j` ([`covering_index`]) for which
//! the hyper count reduces to a balanced count at a shifted argument.
//!
//! No constant shift works globally, though: [`witness_against_shift`]
//! constructs, for any proposed shift `k`, a concrete point where
//! `hyper_count(n + k) != balanced_count(n)` — and verifies it numerically
//! before returning it.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::counting::{balanced_count, hyper_count, shift_difference, MemoCache};
use crate::error::{Error, Result};
use crate::numeral::{covering_window, zero_window, Alphabet, BaseParams, DigitVec, Interval};
use crate::oracle::{enumerate_reps, normalize_balanced};

// ---------------------------------------------------------------------------
// Exhaustive window verification
// ---------------------------------------------------------------------------

/// Result of scanning [`crate::counting::shift_difference`] of order `j`
/// across the `j`-th zero window and one point beyond each end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftReport {
    pub base: BaseParams,
    pub j: u32,
    pub window: Interval,
    /// Shift difference at `window.lo() - 1`.
    pub left_boundary: BigInt,
    /// Shift difference at `window.hi() + 1`.
    pub right_boundary: BigInt,
    /// Points inside the window where the difference was nonzero, with the
    /// offending value. Empty when the identity holds.
    pub failures: Vec<(BigInt, BigInt)>,
}

impl ShiftReport {
    /// True when the difference vanished at every scanned interior point.
    pub fn zero_on_window(&self) -> bool {
        self.failures.is_empty()
    }

    /// True when both boundary probes came out as -1.
    pub fn boundaries_sharp(&self) -> bool {
        let minus_one = -BigInt::one();
        self.left_boundary == minus_one && self.right_boundary == minus_one
    }

    /// The full prediction: zero inside, -1 just outside both ends.
    pub fn holds(&self) -> bool {
        self.zero_on_window() && self.boundaries_sharp()
    }
}

/// Scans the `j`-th zero window (plus both boundary probes) and reports
/// every deviation. Needs `window size + 2` points within `budget`.
pub fn verify_shift_window(j: u32, cache: &mut MemoCache, budget: u64) -> Result<ShiftReport> {
    let base = cache.base();
    let window = zero_window(base, j)?;
    let needed = window.point_count() + 2u32;
    if needed > budget.into() {
        return Err(Error::BudgetExceeded {
            needed,
            budget,
        });
    }

    let left_boundary = shift_difference(j, &(window.lo() - 1), cache)?;
    let right_boundary = shift_difference(j, &(window.hi() + 1), cache)?;
    let mut failures = Vec::new();
    for n in window.points() {
        let diff = shift_difference(j, &n, cache)?;
        if !diff.is_zero() {
            failures.push((n, diff));
        }
    }
    Ok(ShiftReport {
        base,
        j,
        window,
        left_boundary,
        right_boundary,
        failures,
    })
}

// ---------------------------------------------------------------------------
// Covering
// ---------------------------------------------------------------------------

/// The smallest `j >= 1` whose covering window contains `n >= 1`; for that
/// `j`, `hyper_count(n) == balanced_count(n - l * repunit(d, j))`.
///
/// Exists for every `n >= 1` because consecutive covering windows overlap;
/// the containment is asserted rather than trusted.
pub fn covering_index(n: &BigInt, base: BaseParams) -> Result<u32> {
    base.balanced_digit_bound()?;
    if !n.is_positive() {
        return Err(Error::OutOfRange {
            what: "covering windows only tile n >= 1",
        });
    }
    let mut j = 1u32;
    loop {
        let window = covering_window(base, j)?;
        if n <= window.hi() {
            assert!(
                window.contains(n),
                "covering windows must overlap consecutively"
            );
            return Ok(j);
        }
        j += 1;
    }
}

// ---------------------------------------------------------------------------
// Witness construction
// ---------------------------------------------------------------------------

/// A point `n >= -k` with `hyper_count(n + k) != balanced_count(n)`,
/// certifying that the constant shift `k` does not align the two counts.
///
/// Construction: take any balanced representation of `k` avoiding the digit
/// `-l` (normalization provides one, with digits in `-(l-1)..=l`).
///
/// * If some digit differs from `l`, say the lowest such digit `delta` at
///   position `i` with top position `m`, then
///   `n = [1, l-1 (m-i times), -delta, l-1 (i times)]` has balanced count 1
///   — every digit sits strictly inside `(-l, l)` except the leading 1, so
///   each residue forces its digit — while `n + k` adds digitwise without
///   carries to a standard string with a zero at position `i` under a
///   nonzero top, giving the hyper count at least two representations.
/// * Otherwise `k` is `l` repeated, i.e. `l * repunit(d, j)` — exactly the
///   shift the zero windows are built around — and the right boundary probe
///   of the `j`-th window is already a deviation point.
///
/// The returned point is re-checked numerically; a failure (which would mean
/// a bug in this construction) comes back as [`Error::WitnessFailed`] rather
/// than a silent wrong answer.
pub fn witness_against_shift(k: &BigInt, cache: &mut MemoCache) -> Result<BigInt> {
    let base = cache.base();
    let l = i64::from(base.balanced_digit_bound()?);

    let reps = enumerate_reps(k, base, Alphabet::Balanced)?;
    let shortest = reps.iter().next().expect("balanced counts are positive");
    let normalized = normalize_balanced(shortest)?.canonical();
    let digits = normalized.digits_lsf();

    let n = if digits.iter().all(|&dg| dg == l) {
        // k is l repeated j times; step just past the j-th zero window.
        let j = digits.len() as u32;
        zero_window(base, j)?.hi() + 1
    } else {
        let i = digits
            .iter()
            .position(|&dg| dg != l)
            .expect("some digit differs from l");
        let m = digits.len() - 1;
        let mut lsf = vec![l - 1; i];
        lsf.push(-digits[i]);
        lsf.extend(std::iter::repeat_n(l - 1, m - i));
        lsf.push(1);
        DigitVec::from_lsf(base, lsf).eval()
    };

    // Never trust a construction: check the inequality and the domain bound.
    let shifted = BigInt::from(hyper_count(&(&n + k), cache)?);
    let balanced = BigInt::from(balanced_count(&n, cache)?);
    if shifted == balanced || &n + k < BigInt::zero() {
        return Err(Error::WitnessFailed {
            k: k.clone(),
            n,
        });
    }
    Ok(n)
}

// ---------------------------------------------------------------------------
