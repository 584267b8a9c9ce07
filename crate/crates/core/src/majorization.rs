//! Majorization orders and the two elementary transfers on multisets.
//!
//! The orders are order-insensitive: inputs are sorted on entry, so any
//! slice representation of a multiset may be passed.

use std::ops::Add;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::multiset::Multiset;

fn prefix_sums<T: Clone + Zero + Add<Output = T>>(v: &[T]) -> Vec<T> {
    v.iter()
        .scan(T::zero(), |acc, x| {
            *acc = acc.clone() + x.clone();
            Some(acc.clone())
        })
        .collect()
}

fn sorted<T: Clone + Ord>(v: &[T], descending: bool) -> Vec<T> {
    let mut s = v.to_vec();
    s.sort();
    if descending {
        s.reverse();
    }
    s
}

fn same_len<T>(x: &[T], y: &[T]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(())
}

/// `x ≺ y`: descending prefix sums of `x` never exceed those of `y`, and
/// the totals agree.
pub fn majorizes<T>(x: &[T], y: &[T]) -> Result<bool>
where
    T: Clone + Ord + Zero + Add<Output = T>,
{
    same_len(x, y)?;
    let px = prefix_sums(&sorted(x, true));
    let py = prefix_sums(&sorted(y, true));
    Ok(px.iter().zip(&py).all(|(a, b)| a <= b) && px.last() == py.last())
}

/// `x ≺_w y`: every descending prefix sum of `x` is at most that of `y`.
pub fn weakly_submajorizes<T>(x: &[T], y: &[T]) -> Result<bool>
where
    T: Clone + Ord + Zero + Add<Output = T>,
{
    same_len(x, y)?;
    let px = prefix_sums(&sorted(x, true));
    let py = prefix_sums(&sorted(y, true));
    Ok(px.iter().zip(&py).all(|(a, b)| a <= b))
}

/// `x ≺^w y`: every ascending prefix sum of `x` is at least that of `y`.
pub fn weakly_supermajorizes<T>(x: &[T], y: &[T]) -> Result<bool>
where
    T: Clone + Ord + Zero + Add<Output = T>,
{
    same_len(x, y)?;
    let px = prefix_sums(&sorted(x, false));
    let py = prefix_sums(&sorted(y, false));
    Ok(px.iter().zip(&py).all(|(a, b)| a >= b))
}

/// Adds 1 to a minimal element. The empty multiset is fixed.
pub fn up_transfer(x: &Multiset) -> Multiset {
    let mut v = x.values().to_vec();
    if let Some(first) = v.first_mut() {
        *first += 1;
    }
    Multiset::new(v)
}

/// Adds 1 to a minimal element and subtracts 1 from a maximal one.
/// Identity when `|x| <= 1`.
pub fn robin_hood_transfer(x: &Multiset) -> Multiset {
    let mut v = x.values().to_vec();
    if v.len() >= 2 {
        let last = v.len() - 1;
        v[0] += 1;
        v[last] -= 1;
    }
    Multiset::new(v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// Up transfers applied until the sum reached the target.
    pub ups: usize,
    /// Robin Hood transfers applied until the fixed point.
    pub rhs: usize,
    pub result: Multiset,
}

/// Applies Up until the sum equals `target`, then Robin Hood until the
/// spread is at most 1. The result is always `D(|x|, target)`.
///
/// Robin Hood fixes a multiset of spread exactly 1 but moves a constant
/// one with two or more entries (`[4,4,4]` becomes `[3,4,5]`), so the loop
/// stops on the spread rather than waiting for a fixed point.
pub fn reduce_to_consecutive(x: &Multiset, target: i64) -> Result<Reduction> {
    if x.is_empty() {
        return Err(crate::error::invalid("reduction needs a non-empty multiset"));
    }
    let sum = x.sum();
    if sum > target {
        return Err(Error::SumExceedsTarget { sum, target });
    }
    let mut cur = x.clone();
    let mut ups = 0;
    while cur.sum() < target {
        cur = up_transfer(&cur);
        ups += 1;
    }
    let mut rhs = 0;
    while cur.spread() > 1 {
        cur = robin_hood_transfer(&cur);
        rhs += 1;
    }
    Ok(Reduction { ups, rhs, result: cur })
}
