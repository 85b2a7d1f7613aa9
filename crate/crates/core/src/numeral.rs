//! Digit vectors, digit alphabets, and the intervals used by the scan
//! routines.
//!
//! Everything here is exact integer arithmetic over [`BigInt`]. A
//! [`DigitVec`] stores digits least-significant first (index = power of the
//! base) but prints most-significant first, matching the usual way positional
//! expansions are written. Three digit alphabets are supported for a base
//! `d`:
//!
//! * [`Alphabet::Standard`] — digits `0..=d-1`; every nonnegative integer has
//!   exactly one canonical representation.
//! * [`Alphabet::Hyper`] — digits `0..=d`; representation counts follow a
//!   Stern-like recurrence.
//! * [`Alphabet::Balanced`] — digits `-l..=l` for `d = 2l`; defined for even
//!   `d >= 4` (base 2 would admit infinitely many representations).
//!
//! The compressed pattern notation for digit vectors lives in [`pattern`].

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub mod pattern;

// ---------------------------------------------------------------------------
// Bases and alphabets
// ---------------------------------------------------------------------------

/// A positional base `d >= 2`.
///
/// Balanced-digit operations additionally require `d` even and `>= 4`; use
/// [`BaseParams::balanced_digit_bound`] to obtain `l = d/2` with that check
/// applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BaseParams {
    d: u32,
}

impl BaseParams {
    /// Creates a base, rejecting `d < 2`.
    pub fn new(d: u32) -> Result<BaseParams> {
        if d < 2 {
            return Err(Error::BaseTooSmall { d });
        }
        Ok(BaseParams { d })
    }

    /// The base itself.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// The base as a [`BigInt`], for arithmetic.
    pub fn big(&self) -> BigInt {
        BigInt::from(self.d)
    }

    /// Largest balanced digit `l = d/2`.
    ///
    /// Errors unless `d` is even and at least 4: odd bases have no balanced
    /// digit set `{-l..l}` summing to all residues, and base 2 gives every
    /// integer infinitely many balanced representations.
    pub fn balanced_digit_bound(&self) -> Result<u32> {
        if !self.d.is_multiple_of(2) || self.d < 4 {
            return Err(Error::BalancedBaseUnsupported { d: self.d });
        }
        Ok(self.d / 2)
    }
}

impl fmt::Display for BaseParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.d)
    }
}

/// Which digit set a representation draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// Digits `0..=d-1` (ordinary base-`d` expansions).
    Standard,
    /// Digits `0..=d`.
    Hyper,
    /// Digits `-l..=l` where `d = 2l`.
    Balanced,
}

impl Alphabet {
    /// Inclusive digit range for this alphabet in the given base.
    ///
    /// Errors for `Balanced` when the base is odd or 2.
    pub fn digit_range(self, base: BaseParams) -> Result<(i64, i64)> {
        match self {
            Alphabet::Standard => Ok((0, i64::from(base.d()) - 1)),
            Alphabet::Hyper => Ok((0, i64::from(base.d()))),
            Alphabet::Balanced => {
                let l = i64::from(base.balanced_digit_bound()?);
                Ok((-l, l))
            }
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Alphabet::Standard => "standard",
            Alphabet::Hyper => "hyper",
            Alphabet::Balanced => "balanced",
        };
        write!(f, "{name}")
    }
}

// ---------------------------------------------------------------------------
// Digit vectors
// ---------------------------------------------------------------------------

/// A finite digit string in some base.
///
/// Digits are stored least-significant first, so `digits_lsf()[i]` is the
/// coefficient of `d^i`; [`fmt::Display`] prints most-significant first as
/// `[a b c]_d`. Digits are plain `i64` and are *not* constrained to any
/// alphabet — validation against an [`Alphabet`] is a separate, explicit step
/// ([`DigitVec::validate`]).
///
/// `==` is positional equality (same base, same digit string). Two vectors
/// with equal values but different digits — `[1 1]_4` and `[5]_4`, say —
/// compare unequal; use [`DigitVec::value_eq`] for value equality.
///
/// The `Ord` implementation sorts by base, then digit-string length, then
/// digits in display (most-significant first) order. This is the order
/// enumeration results are reported in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitVec {
    base: BaseParams,
    digits: Vec<i64>,
}

impl DigitVec {
    /// Builds a digit vector from least-significant-first digits.
    /// An empty digit list becomes the single-digit zero.
    pub fn from_lsf(base: BaseParams, digits: Vec<i64>) -> DigitVec {
        let digits = if digits.is_empty() { vec![0] } else { digits };
        DigitVec { base, digits }
    }

    /// Builds a digit vector from most-significant-first digits, as written.
    pub fn from_msf(base: BaseParams, mut digits: Vec<i64>) -> DigitVec {
        digits.reverse();
        DigitVec::from_lsf(base, digits)
    }

    pub fn base(&self) -> BaseParams {
        self.base
    }

    /// Digits least-significant first; index `i` is the coefficient of `d^i`.
    pub fn digits_lsf(&self) -> &[i64] {
        &self.digits
    }

    /// Number of digits (including any most-significant zeros).
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        // from_lsf never stores an empty digit string.
        false
    }

    /// The value `sum(digits[i] * d^i)`.
    pub fn eval(&self) -> BigInt {
        let d = self.base.big();
        let mut acc = BigInt::zero();
        for &digit in self.digits.iter().rev() {
            acc = acc * &d + digit;
        }
        acc
    }

    /// Whether every digit lies in `alphabet`'s range for this base.
    pub fn validate(&self, alphabet: Alphabet) -> Result<bool> {
        let (lo, hi) = alphabet.digit_range(self.base)?;
        Ok(self.digits.iter().all(|&dg| lo <= dg && dg <= hi))
    }

    /// True when there is no most-significant zero (the single-digit zero is
    /// canonical by convention).
    pub fn is_canonical(&self) -> bool {
        self.digits.len() == 1 || *self.digits.last().expect("nonempty") != 0
    }

    /// Strips most-significant zeros; an all-zero vector collapses to `[0]`.
    pub fn canonical(&self) -> DigitVec {
        let mut digits = self.digits.clone();
        while digits.len() > 1 && *digits.last().expect("nonempty") == 0 {
            digits.pop();
        }
        DigitVec {
            base: self.base,
            digits,
        }
    }

    /// Value equality: same base and same [`DigitVec::eval`] result.
    pub fn value_eq(&self, other: &DigitVec) -> bool {
        self.base == other.base && self.eval() == other.eval()
    }
}

impl fmt::Display for DigitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, digit) in self.digits.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{digit}")?;
        }
        write!(f, "]_{}", self.base)
    }
}

impl Ord for DigitVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.base
            .d()
            .cmp(&other.base.d())
            .then_with(|| self.digits.len().cmp(&other.digits.len()))
            .then_with(|| self.digits.iter().rev().cmp(other.digits.iter().rev()))
    }
}

impl PartialOrd for DigitVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The unique standard (digits `0..=d-1`) expansion of `n >= 0`.
pub fn to_standard_digits(n: &BigInt, base: BaseParams) -> Result<DigitVec> {
    if n.is_negative() {
        return Err(Error::OutOfRange {
            what: "standard digit expansion requires a nonnegative value",
        });
    }
    let d = base.big();
    let mut digits = Vec::new();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&d);
        digits.push(r.to_i64().expect("remainder below base fits in i64"));
        rest = q;
    }
    Ok(DigitVec::from_lsf(base, digits))
}

// ---------------------------------------------------------------------------
// Intervals
// ---------------------------------------------------------------------------

/// A closed integer interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
}

impl Interval {
    /// Creates `[lo, hi]`, rejecting `lo > hi`.
    pub fn new(lo: BigInt, hi: BigInt) -> Result<Interval> {
        if lo > hi {
            return Err(Error::EmptyInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi(&self) -> &BigInt {
        &self.hi
    }

    pub fn contains(&self, n: &BigInt) -> bool {
        self.lo <= *n && *n <= self.hi
    }

    /// The interval shifted by `offset`.
    pub fn translate(&self, offset: &BigInt) -> Interval {
        Interval {
            lo: &self.lo + offset,
            hi: &self.hi + offset,
        }
    }

    /// Number of integers in the interval (`hi - lo + 1`).
    pub fn point_count(&self) -> BigUint {
        (&self.hi - &self.lo + BigInt::one())
            .to_biguint()
            .expect("hi >= lo, so the count is positive")
    }

    /// Iterates the integers of the interval in ascending order.
    pub fn points(&self) -> Points {
        Points {
            next: Some(self.lo.clone()),
            hi: self.hi.clone(),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Ascending iterator over an [`Interval`]'s integers.
pub struct Points {
    next: Option<BigInt>,
    hi: BigInt,
}

impl Iterator for Points {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let cur = self.next.take()?;
        if cur > self.hi {
            return None;
        }
        self.next = Some(&cur + 1);
        Some(cur)
    }
}

// ---------------------------------------------------------------------------
// Repunits and the scan windows built from them
// ---------------------------------------------------------------------------

/// The base-`d` repunit `(d^j - 1) / (d - 1)`, i.e. `j` ones: `[1 1 .. 1]_d`.
/// `repunit(d, 0) = 0`.
pub fn repunit(base: BaseParams, j: u32) -> BigInt {
    (base.big().pow(j) - 1) / (base.big() - 1)
}

/// The `j`-th zero window for even base `d = 2l >= 4`:
///
/// ```text
/// [ -(l-1) * repunit(d, j),  (l-1) * repunit(d, j+1) ]
/// ```
///
/// On this window the shift difference of order `j`
/// ([`crate::counting::shift_difference`]) vanishes identically, and the
/// balanced count attains its Fibonacci maximum inside it. Requires `j >= 1`.
pub fn zero_window(base: BaseParams, j: u32) -> Result<Interval> {
    let l = base.balanced_digit_bound()?;
    if j < 1 {
        return Err(Error::OutOfRange {
            what: "zero window index j must be at least 1",
        });
    }
    let width = BigInt::from(l - 1);
    let lo = -(&width * repunit(base, j));
    let hi = &width * repunit(base, j + 1);
    Interval::new(lo, hi)
}

/// The `j`-th zero window translated right by `l * repunit(d, j)`.
///
/// Consecutive covering windows overlap, and together they cover all of
/// `[1, oo)`; [`crate::identities::covering_index`] picks the first one
/// containing a given `n >= 1`.
pub fn covering_window(base: BaseParams, j: u32) -> Result<Interval> {
    let l = base.balanced_digit_bound()?;
    let window = zero_window(base, j)?;
    Ok(window.translate(&(BigInt::from(l) * repunit(base, j))))
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn base(d: u32) -> BaseParams {
        BaseParams::new(d).expect("valid base")
    }

    #[test]
    fn base_params_rejects_degenerate_bases() {
        assert_eq!(BaseParams::new(0), Err(Error::BaseTooSmall { d: 0 }));
        assert_eq!(BaseParams::new(1), Err(Error::BaseTooSmall { d: 1 }));
        assert!(BaseParams::new(2).is_ok());
    }

    #[test]
    fn balanced_digit_bound_needs_even_base_at_least_four() {
        assert_eq!(base(4).balanced_digit_bound(), Ok(2));
        assert_eq!(base(6).balanced_digit_bound(), Ok(3));
        assert_eq!(
            base(2).balanced_digit_bound(),
            Err(Error::BalancedBaseUnsupported { d: 2 })
        );
        assert_eq!(
            base(5).balanced_digit_bound(),
            Err(Error::BalancedBaseUnsupported { d: 5 })
        );
    }

    #[test]
    fn digit_ranges() {
        assert_eq!(Alphabet::Standard.digit_range(base(4)), Ok((0, 3)));
        assert_eq!(Alphabet::Hyper.digit_range(base(4)), Ok((0, 4)));
        assert_eq!(Alphabet::Balanced.digit_range(base(4)), Ok((-2, 2)));
        assert_eq!(Alphabet::Balanced.digit_range(base(8)), Ok((-4, 4)));
        assert!(Alphabet::Balanced.digit_range(base(2)).is_err());
    }

    #[test]
    fn eval_is_positional() {
        // [1 0 0 3]_4 = 64 + 3 and [3 4 3]_4 = 48 + 16 + 3.
        let v = DigitVec::from_msf(base(4), vec![1, 0, 0, 3]);
        assert_eq!(v.eval(), BigInt::from(67));
        let w = DigitVec::from_msf(base(4), vec![3, 4, 3]);
        assert_eq!(w.eval(), BigInt::from(67));
        assert!(v.value_eq(&w));
        assert_ne!(v, w);

        // Balanced digits: [1 -2 -2 1]_4 = 64 - 32 - 8 + 1 = 25.
        let b = DigitVec::from_msf(base(4), vec![1, -2, -2, 1]);
        assert_eq!(b.eval(), BigInt::from(25));
    }

    #[test]
    fn display_is_most_significant_first() {
        let v = DigitVec::from_msf(base(4), vec![1, -2, -2, 1]);
        assert_eq!(v.to_string(), "[1 -2 -2 1]_4");
        let zero = DigitVec::from_lsf(base(6), vec![]);
        assert_eq!(zero.to_string(), "[0]_6");
    }

    #[test]
    fn validation_checks_the_requested_alphabet() {
        let v = DigitVec::from_msf(base(4), vec![3, 4, 3]);
        assert_eq!(v.validate(Alphabet::Hyper), Ok(true));
        assert_eq!(v.validate(Alphabet::Standard), Ok(false));
        assert_eq!(v.validate(Alphabet::Balanced), Ok(false));

        let b = DigitVec::from_msf(base(4), vec![2, -2, 1]);
        assert_eq!(b.validate(Alphabet::Balanced), Ok(true));
        assert_eq!(b.validate(Alphabet::Standard), Ok(false));
    }

    #[test]
    fn canonical_strips_leading_zeros_only() {
        let v = DigitVec::from_msf(base(4), vec![0, 0, 2, 0]);
        assert!(!v.is_canonical());
        assert_eq!(v.canonical().to_string(), "[2 0]_4");
        let zero = DigitVec::from_msf(base(4), vec![0, 0]);
        assert_eq!(zero.canonical().to_string(), "[0]_4");
        assert!(zero.canonical().is_canonical());
    }

    #[test]
    fn ordering_is_length_then_display_digits() {
        let a = DigitVec::from_msf(base(4), vec![1, 0, 0, 3]);
        let b = DigitVec::from_msf(base(4), vec![3, 4, 3]);
        let c = DigitVec::from_msf(base(4), vec![4, 0, 3]);
        let mut sorted = vec![a.clone(), b.clone(), c.clone()];
        sorted.sort();
        assert_eq!(sorted, vec![b, c, a]);
    }

    #[test]
    fn standard_digits_round_trip() {
        for d in 2..=10u32 {
            let b = base(d);
            for n in 0..200i64 {
                let n = BigInt::from(n);
                let digits = to_standard_digits(&n, b).expect("nonnegative");
                assert_eq!(digits.eval(), n);
                assert_eq!(digits.validate(Alphabet::Standard), Ok(true));
                assert!(digits.is_canonical());
            }
        }
        assert!(to_standard_digits(&BigInt::from(-1), base(4)).is_err());
    }

    #[test]
    fn repunit_values() {
        let b4 = base(4);
        assert_eq!(repunit(b4, 0), BigInt::zero());
        assert_eq!(repunit(b4, 1), BigInt::one());
        assert_eq!(repunit(b4, 2), BigInt::from(5));
        assert_eq!(repunit(b4, 3), BigInt::from(21));
        assert_eq!(repunit(base(6), 3), BigInt::from(43));
        assert_eq!(repunit(base(2), 5), BigInt::from(31));
    }

    #[test]
    fn zero_window_values() {
        let w = zero_window(base(4), 1).expect("valid");
        assert_eq!((w.lo(), w.hi()), (&BigInt::from(-1), &BigInt::from(5)));
        let w = zero_window(base(4), 2).expect("valid");
        assert_eq!((w.lo(), w.hi()), (&BigInt::from(-5), &BigInt::from(21)));
        let w = zero_window(base(6), 1).expect("valid");
        assert_eq!((w.lo(), w.hi()), (&BigInt::from(-2), &BigInt::from(14)));

        assert!(zero_window(base(4), 0).is_err());
        assert!(zero_window(base(2), 1).is_err());
        assert!(zero_window(base(5), 1).is_err());
    }

    #[test]
    fn covering_window_values() {
        let w = covering_window(base(4), 1).expect("valid");
        assert_eq!((w.lo(), w.hi()), (&BigInt::from(1), &BigInt::from(7)));
        let w = covering_window(base(4), 2).expect("valid");
        assert_eq!((w.lo(), w.hi()), (&BigInt::from(5), &BigInt::from(31)));
        let w = covering_window(base(4), 3).expect("valid");
        assert_eq!((w.lo(), w.hi()), (&BigInt::from(21), &BigInt::from(127)));
    }

    #[test]
    fn interval_basics() {
        let iv = Interval::new(BigInt::from(-2), BigInt::from(3)).expect("valid");
        assert_eq!(iv.point_count(), BigUint::from(6u32));
        assert!(iv.contains(&BigInt::from(-2)));
        assert!(iv.contains(&BigInt::from(3)));
        assert!(!iv.contains(&BigInt::from(4)));
        let collected: Vec<BigInt> = iv.points().collect();
        assert_eq!(collected.len(), 6);
        assert_eq!(collected[0], BigInt::from(-2));
        assert_eq!(collected[5], BigInt::from(3));

        assert!(Interval::new(BigInt::from(1), BigInt::from(0)).is_err());
        let translated = iv.translate(&BigInt::from(10));
        assert_eq!(translated.lo(), &BigInt::from(8));
        assert_eq!(translated.hi(), &BigInt::from(13));
    }
}
