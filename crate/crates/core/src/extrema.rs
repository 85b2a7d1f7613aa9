//! Maxima of the counting functions over their natural scan windows.
//!
//! Both counts peak at Fibonacci numbers: the hyper count reaches `F(k)` on
//! the block of `(k-1)`-digit numbers `[d^(k-2), d^(k-1))`, first at the
//! alternating pattern built by [`hyper_argmax`]; the base-4 balanced count
//! reaches `F(r+3)` on the `(r+1)`-th zero window, attained at the closed
//! form [`balanced_argmax`] (which matches an alternating `1 2` digit
//! pattern). [`verify_hyper_maxima`] and [`verify_balanced_maxima`] check
//! these claims by exhaustive scan and report the comparison.

use num_bigint::{BigInt, BigUint};

use crate::counting::{balanced_count, fibonacci, hyper_count, MemoCache};
use crate::error::{Error, Result};
use crate::numeral::{zero_window, BaseParams, DigitVec, Interval};

// ---------------------------------------------------------------------------
// Predicted argmax constructions
// ---------------------------------------------------------------------------

/// First point of `[d^(k-2), d^(k-1))` where the hyper count reaches its
/// maximum `F(k)`, for `k >= 3`: the digit string alternates `1 0` —
/// `[(1 0)^((k-1)/2)]_d` for odd `k`, `[(1 0)^(k/2-1) 0]_d` for even `k`.
pub fn hyper_argmax(k: u32, base: BaseParams) -> Result<BigInt> {
    if k < 3 {
        return Err(Error::OutOfRange {
            what: "hyper maxima are indexed from k = 3",
        });
    }
    // Build least-significant first: k-1 digits, a 1 on every other
    // position counting down from the top (the lowest 1 lands on index 1
    // for odd k, index 2 for even k).
    let len = (k - 1) as usize;
    let mut lsf = vec![0i64; len];
    let mut i = len - 1;
    loop {
        lsf[i] = 1;
        if i <= 2 {
            break;
        }
        i -= 2;
    }
    Ok(DigitVec::from_lsf(base, lsf).eval())
}

/// The point of the `(r+1)`-th zero window where the base-4 balanced count
/// attains its maximum `F(r+3)`, for `r >= 1`:
///
/// ```text
/// odd r:  (2/5) * (4^(r+1) - 1)        even r:  2 + (8/5) * (4^r - 1)
/// ```
pub fn balanced_argmax(r: u32) -> Result<BigInt> {
    if r < 1 {
        return Err(Error::OutOfRange {
            what: "balanced maxima are indexed from r = 1",
        });
    }
    let four = BigInt::from(4);
    let value = if r % 2 == 1 {
        BigInt::from(2) * (four.pow(r + 1) - 1) / 5
    } else {
        BigInt::from(2) + BigInt::from(8) * (four.pow(r) - 1) / 5
    };
    Ok(value)
}

// ---------------------------------------------------------------------------
// Scanning
// ---------------------------------------------------------------------------

/// Exhaustive maximum of `f` over a window: the maximum value and the first
/// point attaining it. The window size must fit the budget.
pub fn max_scan<F>(mut f: F, window: &Interval, budget: u64) -> Result<(BigUint, BigInt)>
where
    F: FnMut(&BigInt) -> Result<BigUint>,
{
    let needed = window.point_count();
    if needed > budget.into() {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut best = f(window.lo())?;
    let mut argmax = window.lo().clone();
    for n in window.points().skip(1) {
        let value = f(&n)?;
        if value > best {
            best = value;
            argmax = n;
        }
    }
    Ok((best, argmax))
}

/// Scan outcome versus prediction for one maxima claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxReport {
    pub window: Interval,
    /// Largest count found by the scan.
    pub max_value: BigUint,
    /// First point of the window attaining `max_value`.
    pub first_argmax: BigInt,
    /// Where the closed form says the maximum is attained.
    pub predicted_argmax: BigInt,
    /// The predicted maximum (a Fibonacci number).
    pub predicted_value: BigUint,
    /// True when the scanned maximum equals the predicted value and the
    /// predicted argmax lies in the window and attains it.
    pub agree: bool,
}

/// Scans the hyper count over `[d^(k-2), d^(k-1) - 1]` and compares against
/// the predicted maximum `F(k)` at [`hyper_argmax`]. Requires `k >= 3` and
/// an even base.
pub fn verify_hyper_maxima(k: u32, cache: &mut MemoCache, budget: u64) -> Result<MaxReport> {
    let base = cache.base();
    let predicted_argmax = hyper_argmax(k, base)?;
    let predicted_value = fibonacci(k)?;
    let window = Interval::new(base.big().pow(k - 2), base.big().pow(k - 1) - 1)
        .expect("powers are increasing");
    let (max_value, first_argmax) = max_scan(|n| hyper_count(n, cache), &window, budget)?;
    let at_prediction = hyper_count(&predicted_argmax, cache)?;
    let agree = max_value == predicted_value
        && window.contains(&predicted_argmax)
        && at_prediction == max_value;
    Ok(MaxReport {
        window,
        max_value,
        first_argmax,
        predicted_argmax,
        predicted_value,
        agree,
    })
}

/// Scans the base-4 balanced count over the `(r+1)`-th zero window and
/// compares against the predicted maximum `F(r+3)` at [`balanced_argmax`].
/// The cache must be for base 4; `r >= 1`.
///
/// The claim pins where the maximum is *attained*, not that the closed form
/// is the first attaining point, so `first_argmax` is reported as scanned
/// but not folded into `agree`.
pub fn verify_balanced_maxima(r: u32, cache: &mut MemoCache, budget: u64) -> Result<MaxReport> {
    let base = cache.base();
    if base.d() != 4 {
        return Err(Error::Base4Only {
            what: "the balanced maxima scan",
        });
    }
    let predicted_argmax = balanced_argmax(r)?;
    let predicted_value = fibonacci(r + 3)?;
    let window = zero_window(base, r + 1)?;
    let (max_value, first_argmax) = max_scan(|n| balanced_count(n, cache), &window, budget)?;
    let at_prediction = balanced_count(&predicted_argmax, cache)?;
    let agree = max_value == predicted_value
        && window.contains(&predicted_argmax)
        && at_prediction == max_value;
    Ok(MaxReport {
        window,
        max_value,
        first_argmax,
        predicted_argmax,
        predicted_value,
        agree,
    })
}

// ---------------------------------------------------------------------------
