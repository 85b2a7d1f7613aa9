//! Independent cross-checks for the counting recurrences.
//!
//! [`enumerate_reps`] builds the actual set of canonical representations by
//! depth-first search on the residue structure: the least-significant digit
//! of any representation of `n` must be congruent to `n` mod `d`, so each
//! admissible digit choice recurses on the exact quotient. This shares no
//! code with the memoized recurrences in [`crate::counting`], which is the
//! point — `enumerate_reps(n).len()` is an oracle for the counts.
//!
//! [`enumerate_reps_bounded`] is a second, even dumber oracle for micro
//! scale: it tries *every* digit string up to the length bound implied by
//! `|n|` and keeps the ones that evaluate to `n`. It exists to catch a bug
//! that the residue argument and the recurrence might share.
//!
//! Also here: digit characterizations of the `count == 1` predicate in base
//! 4 ([`hyper_is_one`], [`balanced_is_one`]) and the rewrite that removes
//! the digit `-l` from a balanced representation ([`normalize_balanced`]).

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeral::{repunit, to_standard_digits, Alphabet, BaseParams, DigitVec};

// ---------------------------------------------------------------------------
// Residue-driven enumeration
// ---------------------------------------------------------------------------

/// All canonical representations of `n` over the given alphabet, sorted
/// shortest-first (then by display-order digits).
///
/// Canonical means no most-significant zero; the value 0 is represented by
/// the single-digit string `[0]` alone. `Standard` and `Hyper` require
/// `n >= 0`, and `Hyper` additionally requires an even base; `Balanced`
/// accepts any integer (over an even base >= 4).
pub fn enumerate_reps(
    n: &BigInt,
    base: BaseParams,
    alphabet: Alphabet,
) -> Result<BTreeSet<DigitVec>> {
    let (lo, hi) = alphabet.digit_range(base)?;
    if alphabet == Alphabet::Hyper && !base.d().is_multiple_of(2) {
        return Err(Error::EvenBaseRequired {
            d: base.d(),
            what: "hyper enumeration",
        });
    }
    if lo >= 0 && n.is_negative() {
        return Err(Error::OutOfRange {
            what: "nonnegative-digit alphabets only represent n >= 0",
        });
    }

    let mut out = BTreeSet::new();
    if n.is_zero() {
        out.insert(DigitVec::from_lsf(base, vec![0]));
        return Ok(out);
    }
    let ctx = DfsCtx {
        base,
        big_d: base.big(),
        d: i64::from(base.d()),
        lo,
        hi,
    };
    let mut digits = Vec::new();
    dfs(n, &ctx, &mut digits, &mut out);
    Ok(out)
}

struct DfsCtx {
    base: BaseParams,
    big_d: BigInt,
    d: i64,
    lo: i64,
    hi: i64,
}

/// Extends `digits` (least-significant first) by every admissible digit of
/// `n` and recurses on the quotient. Precondition: `n != 0`, so any string
/// completed here ends in a nonzero most-significant digit and is canonical.
fn dfs(n: &BigInt, ctx: &DfsCtx, digits: &mut Vec<i64>, out: &mut BTreeSet<DigitVec>) {
    let r = n
        .mod_floor(&ctx.big_d)
        .to_i64()
        .expect("residue below base fits in i64");
    // Admissible digits congruent to r, stepping by d through the alphabet.
    let first = ctx.lo + (r - ctx.lo).rem_euclid(ctx.d);
    let mut digit = first;
    while digit <= ctx.hi {
        let quotient = (n - digit) / &ctx.big_d;
        // Nonnegative alphabets cannot reach a negative quotient.
        if !(ctx.lo >= 0 && quotient.is_negative()) {
            digits.push(digit);
            if quotient.is_zero() {
                out.insert(DigitVec::from_lsf(ctx.base, digits.clone()));
            } else {
                dfs(&quotient, ctx, digits, out);
            }
            digits.pop();
        }
        digit += ctx.d;
    }
}

/// `enumerate_reps(n).len()` as a big integer — the oracle the recurrences
/// are checked against.
pub fn count_via_enumeration(
    n: &BigInt,
    base: BaseParams,
    alphabet: Alphabet,
) -> Result<BigUint> {
    Ok(BigUint::from(enumerate_reps(n, base, alphabet)?.len()))
}

// ---------------------------------------------------------------------------
// Exhaustive micro-scale enumeration
// ---------------------------------------------------------------------------

/// Every canonical digit string over the alphabet, up to the maximum length
/// any representation of `n` can have, filtered to those evaluating to `n`.
///
/// Exponential in the length bound — intended only for micro-scale
/// cross-checks of [`enumerate_reps`].
pub fn enumerate_reps_bounded(
    n: &BigInt,
    base: BaseParams,
    alphabet: Alphabet,
) -> Result<BTreeSet<DigitVec>> {
    let (lo, hi) = alphabet.digit_range(base)?;
    if alphabet == Alphabet::Hyper && !base.d().is_multiple_of(2) {
        return Err(Error::EvenBaseRequired {
            d: base.d(),
            what: "hyper enumeration",
        });
    }
    if lo >= 0 && n.is_negative() {
        return Err(Error::OutOfRange {
            what: "nonnegative-digit alphabets only represent n >= 0",
        });
    }

    let max_len = max_canonical_len(n, base, alphabet);
    let mut out = BTreeSet::new();
    for len in 1..=max_len {
        let mut tuple = vec![lo; len];
        'tuples: loop {
            let canonical = len == 1 || tuple[len - 1] != 0;
            if canonical {
                let candidate = DigitVec::from_lsf(base, tuple.clone());
                if candidate.eval() == *n {
                    out.insert(candidate);
                }
            }
            // Odometer increment, least-significant position first.
            let mut i = 0;
            loop {
                tuple[i] += 1;
                if tuple[i] <= hi {
                    break;
                }
                tuple[i] = lo;
                i += 1;
                if i == len {
                    break 'tuples;
                }
            }
        }
    }
    Ok(out)
}

/// Longest possible canonical representation of `n`: a canonical string of
/// length `m + 1` has absolute value at least `d^m` minus whatever the lower
/// positions can cancel, which is `l * repunit(d, m)` for balanced digits
/// and nothing for nonnegative alphabets.
fn max_canonical_len(n: &BigInt, base: BaseParams, alphabet: Alphabet) -> usize {
    let n_abs = n.abs();
    if n_abs.is_zero() {
        return 1;
    }
    let cancel = match alphabet {
        Alphabet::Standard | Alphabet::Hyper => BigInt::zero(),
        Alphabet::Balanced => BigInt::from(base.d() / 2),
    };
    let mut len = 1usize;
    loop {
        let m = len as u32; // a string of length len + 1 has top index m
        let min_abs = base.big().pow(m) - &cancel * repunit(base, m);
        if min_abs > n_abs {
            return len;
        }
        len += 1;
    }
}

// ---------------------------------------------------------------------------
// Base-4 count-is-one characterizations
// ---------------------------------------------------------------------------

/// Whether the base-4 hyper count of `n >= 1` equals 1, decided from digits
/// alone: true exactly when the standard quaternary expansion of `n` uses no
/// zero digit.
pub fn hyper_is_one(n: &BigInt) -> Result<bool> {
    if !n.is_positive() {
        return Err(Error::OutOfRange {
            what: "the hyper count-is-one test needs n >= 1",
        });
    }
    let base = BaseParams::new(4).expect("4 is a valid base");
    let digits = to_standard_digits(n, base)?;
    Ok(digits.digits_lsf().iter().all(|&dg| dg != 0))
}

/// Whether the base-4 balanced count of `n` equals 1, decided from digits
/// alone: walk the forced symmetric residues of `n`; the count exceeds 1
/// exactly when the walk meets a residue of 2, where two digit choices open.
pub fn balanced_is_one(n: &BigInt) -> bool {
    let four = BigInt::from(4);
    let mut m = n.clone();
    while !m.is_zero() {
        let r = m.mod_floor(&four);
        let k = if r > BigInt::from(2) { r - &four } else { r };
        if k == BigInt::from(2) {
            return false;
        }
        m = (m - k) / &four;
    }
    true
}

// ---------------------------------------------------------------------------
// Balanced normalization
// ---------------------------------------------------------------------------

/// Rewrites a balanced representation until it avoids the digit `-l`,
/// preserving the value: the highest `-l` and the digit `a` above it become
/// `l` and `a - 1` (since `a*d - l == (a-1)*d + l`), extending the string
/// with a 0 when the `-l` is already the most-significant digit.
///
/// The result may carry a most-significant zero (e.g. `[1 -2]_4` becomes
/// `[0 2]_4`); call [`DigitVec::canonical`] to strip it. Digits of the
/// result lie in `-(l-1)..=l`. The input must be valid for the balanced
/// alphabet of its base.
pub fn normalize_balanced(v: &DigitVec) -> Result<DigitVec> {
    let (lo, hi) = Alphabet::Balanced.digit_range(v.base())?;
    if let Some(&bad) = v.digits_lsf().iter().find(|&&dg| dg < lo || dg > hi) {
        return Err(Error::DigitOutOfRange { digit: bad, lo, hi });
    }
    let neg_l = lo;
    let mut digits = v.digits_lsf().to_vec();
    while let Some(i) = digits.iter().rposition(|&dg| dg == neg_l) {
        if i == digits.len() - 1 {
            digits.push(0);
        }
        digits[i + 1] -= 1;
        digits[i] = -neg_l;
    }
    let result = DigitVec::from_lsf(v.base(), digits);
    debug_assert!(result.value_eq(v), "normalization must preserve the value");
    Ok(result)
}

// ---------------------------------------------------------------------------
