//! Exact representation counts via least-significant-digit recurrences.
//!
//! Both counting functions work the same way: classify `n` by its residue
//! mod `d`, peel off the admissible least-significant digit(s), and recurse
//! on the quotient. Residues with a unique admissible digit contribute one
//! branch; residues admitting two digits split the count into a sum.
//!
//! * [`hyper_count`] — digits `0..=d`, even `d >= 2`, defined for `n >= 0`
//!   (zero for negative `n`). A residue of 0 admits both the digit 0 and the
//!   digit `d`, so `f(n) = f(n/d) + f(n/d - 1)`; any other residue `k` forces
//!   the digit `k`, so `f(n) = f((n-k)/d)`.
//! * [`balanced_count`] — digits `-l..=l` for `d = 2l >= 4`, defined for all
//!   integers. Working with the symmetric residue `k` in `(-l, l]`: the
//!   residue `l` admits both `l` and `-l`, so `b(n) = b((n-l)/d) +
//!   b((n+l)/d)`; any other residue forces its digit, so
//!   `b(n) = b((n-k)/d)`.
//!
//! Both recurrences strictly shrink `|n|`, so evaluation terminates; it is
//! driven by an explicit work stack rather than call recursion, keeping deep
//! argument chains off the machine stack. Results are memoized per function
//! in a [`MemoCache`].
//!
//! Also here: the Stern diatomic sequence ([`stern`]), which the base-2
//! hyper count collapses onto (`hyper_count(n, 2) == stern(n + 1)`),
//! Fibonacci numbers ([`fibonacci`]) for the maxima scans, and the
//! hyper-vs-balanced [`shift_difference`].

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeral::{repunit, BaseParams};

// ---------------------------------------------------------------------------
// Memoization
// ---------------------------------------------------------------------------

/// Per-base memo tables for [`hyper_count`] and [`balanced_count`].
///
/// A cache is bound to one base and keeps one map per counting function;
/// entries are only ever inserted, never mutated, so warm and cold caches
/// always agree. An optional entry limit per map caps memory: once a map is
/// full, further results are still computed correctly, just not stored.
/// A limit of 0 disables caching entirely.
#[derive(Clone, Debug)]
pub struct MemoCache {
    base: BaseParams,
    limit: Option<usize>,
    hyper: HashMap<BigInt, BigUint>,
    balanced: HashMap<BigInt, BigUint>,
}

impl MemoCache {
    /// An unbounded cache for the given base.
    pub fn new(base: BaseParams) -> MemoCache {
        MemoCache {
            base,
            limit: None,
            hyper: HashMap::new(),
            balanced: HashMap::new(),
        }
    }

    /// A cache holding at most `limit` entries per counting function.
    pub fn with_limit(base: BaseParams, limit: usize) -> MemoCache {
        MemoCache {
            limit: Some(limit),
            ..MemoCache::new(base)
        }
    }

    pub fn base(&self) -> BaseParams {
        self.base
    }

    /// Total number of memoized entries across both functions.
    pub fn entries(&self) -> usize {
        self.hyper.len() + self.balanced.len()
    }
}

fn memoize(
    map: &mut HashMap<BigInt, BigUint>,
    limit: Option<usize>,
    key: BigInt,
    value: BigUint,
) {
    if let Some(limit) = limit {
        if map.len() >= limit {
            return;
        }
    }
    map.insert(key, value);
}

// ---------------------------------------------------------------------------
// Work-stack evaluation
// ---------------------------------------------------------------------------

/// One recurrence step: either a known value, a single recursive branch, or
/// a sum of two branches.
enum Step {
    Value(BigUint),
    One(BigInt),
    Two(BigInt, BigInt),
}

enum Task {
    Eval(BigInt),
    /// The single child's value (left on top of the value stack) is also
    /// this argument's value; memoize it.
    Store(BigInt),
    /// Pop two child values, push their sum, memoize it.
    StoreSum(BigInt),
}

fn evaluate<S>(
    n: &BigInt,
    map: &mut HashMap<BigInt, BigUint>,
    limit: Option<usize>,
    step: S,
) -> BigUint
where
    S: Fn(&BigInt) -> Step,
{
    let mut tasks = vec![Task::Eval(n.clone())];
    let mut values: Vec<BigUint> = Vec::new();
    while let Some(task) = tasks.pop() {
        match task {
            Task::Eval(m) => {
                if let Some(v) = map.get(&m) {
                    values.push(v.clone());
                    continue;
                }
                match step(&m) {
                    Step::Value(v) => values.push(v),
                    Step::One(child) => {
                        tasks.push(Task::Store(m));
                        tasks.push(Task::Eval(child));
                    }
                    Step::Two(left, right) => {
                        tasks.push(Task::StoreSum(m));
                        tasks.push(Task::Eval(left));
                        tasks.push(Task::Eval(right));
                    }
                }
            }
            Task::Store(m) => {
                let v = values.last().expect("child value present").clone();
                memoize(map, limit, m, v);
            }
            Task::StoreSum(m) => {
                let b = values.pop().expect("two child values present");
                let a = values.pop().expect("two child values present");
                let v = a + b;
                memoize(map, limit, m, v.clone());
                values.push(v);
            }
        }
    }
    let result = values.pop().expect("exactly one value remains");
    debug_assert!(values.is_empty(), "value stack fully consumed");
    result
}

// ---------------------------------------------------------------------------
// The counting functions
// ---------------------------------------------------------------------------

/// Number of representations of `n` with digits `0..=d`, for even `d >= 2`.
///
/// Zero for negative `n`; 1 at `n = 0` (the empty/zero representation).
/// Odd bases are rejected: the two-digit residue split needs `d` even for
/// the balanced comparisons this count participates in.
pub fn hyper_count(n: &BigInt, cache: &mut MemoCache) -> Result<BigUint> {
    let d = cache.base.d();
    if !d.is_multiple_of(2) {
        return Err(Error::EvenBaseRequired {
            d,
            what: "the hyper count",
        });
    }
    let big_d = cache.base.big();
    let value = evaluate(n, &mut cache.hyper, cache.limit, |m| {
        if m.is_negative() {
            return Step::Value(BigUint::zero());
        }
        if m.is_zero() {
            return Step::Value(BigUint::one());
        }
        let r = m.mod_floor(&big_d);
        if r.is_zero() {
            let q = m / &big_d;
            let q_minus_1 = &q - 1;
            Step::Two(q, q_minus_1)
        } else {
            Step::One((m - &r) / &big_d)
        }
    });
    Ok(value)
}

/// Number of representations of `n` with digits `-l..=l`, where the cache's
/// base is `d = 2l`. Requires even `d >= 4`; defined for every integer `n`
/// (the count is symmetric in `n <-> -n`).
pub fn balanced_count(n: &BigInt, cache: &mut MemoCache) -> Result<BigUint> {
    let l = cache.base.balanced_digit_bound()?;
    let big_d = cache.base.big();
    let big_l = BigInt::from(l);
    let value = evaluate(n, &mut cache.balanced, cache.limit, |m| {
        if m.is_zero() {
            return Step::Value(BigUint::one());
        }
        // Symmetric residue in (-l, l].
        let r = m.mod_floor(&big_d);
        let k = if r > big_l { r - &big_d } else { r };
        if k == big_l {
            Step::Two((m - &big_l) / &big_d, (m + &big_l) / &big_d)
        } else {
            Step::One((m - &k) / &big_d)
        }
    });
    Ok(value)
}

/// Difference between the hyper count shifted by `l * repunit(d, j)` and the
/// balanced count:
///
/// ```text
/// shift_difference(j, n) = hyper_count(l * repunit(d, j) + n) - balanced_count(n)
/// ```
///
/// This vanishes identically on the `j`-th zero window
/// ([`crate::numeral::zero_window`]) and equals -1 just outside both of its
/// endpoints. Requires `j >= 1` and a balanced-capable base.
pub fn shift_difference(j: u32, n: &BigInt, cache: &mut MemoCache) -> Result<BigInt> {
    let l = cache.base.balanced_digit_bound()?;
    if j < 1 {
        return Err(Error::OutOfRange {
            what: "shift difference order j must be at least 1",
        });
    }
    let shift = BigInt::from(l) * repunit(cache.base, j);
    let shifted = hyper_count(&(shift + n), cache)?;
    let balanced = balanced_count(n, cache)?;
    Ok(BigInt::from(shifted) - BigInt::from(balanced))
}

// ---------------------------------------------------------------------------
// Classical sequences
// ---------------------------------------------------------------------------

/// Stern's diatomic sequence: `s(0) = 0`, `s(1) = 1`, `s(2n) = s(n)`,
/// `s(2n + 1) = s(n) + s(n + 1)`.
///
/// Computed iteratively from the binary digits of `n`, most significant
/// first, carrying the pair `(s(m), s(m + 1))`. The base-2 hyper count is a
/// shift of this sequence: `hyper_count(n, 2) == stern(n + 1)`.
pub fn stern(n: &BigInt) -> Result<BigUint> {
    if n.is_negative() {
        return Err(Error::OutOfRange {
            what: "the Stern sequence is indexed by nonnegative integers",
        });
    }
    let n = n.to_biguint().expect("nonnegative");
    if n.is_zero() {
        return Ok(BigUint::zero());
    }
    // Invariant: (u, v) = (s(m), s(m + 1)) where m is the prefix of n's
    // binary digits consumed so far. Appending bit 0 maps m to 2m, so
    // (u, v) becomes (u, u + v); appending bit 1 maps m to 2m + 1, so
    // (u, v) becomes (u + v, v).
    let mut u = BigUint::one();
    let mut v = BigUint::one();
    for i in (0..n.bits() - 1).rev() {
        if n.bit(i) {
            u += &v;
        } else {
            v += &u;
        }
    }
    Ok(u)
}

/// Fibonacci numbers with `F(1) = F(2) = 1`, so `F(4) = 3` and `F(5) = 5`.
/// Requires `k >= 1`.
pub fn fibonacci(k: u32) -> Result<BigUint> {
    if k < 1 {
        return Err(Error::OutOfRange {
            what: "Fibonacci numbers are indexed from 1 here",
        });
    }
    let mut a = BigUint::one(); // F(1)
    let mut b = BigUint::one(); // F(2)
    for _ in 2..k {
        let next = &a + &b;
        a = b;
        b = next;
    }
    Ok(if k == 1 { a } else { b })
}

// ---------------------------------------------------------------------------
