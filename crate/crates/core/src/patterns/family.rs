//! The permutation families counted by the closed formulas, behind one trait
//! and a by-name registry.

use std::fmt;
use std::str::FromStr;

use super::{count_increasing_triples, PatternError, Permutation};
use crate::exactnum::{binomial, class_count, exact_div, Natural};
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    T7,
    T8,
    T9,
    T10,
    T11,
}

impl FamilyId {
    pub const ALL: [FamilyId; 5] = [FamilyId::T7, FamilyId::T8, FamilyId::T9, FamilyId::T10, FamilyId::T11];
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(family(*self).name())
    }
}

impl FromStr for FamilyId {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        families()
            .iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .map(|f| f.id())
            .ok_or_else(|| PatternError::UnknownFamily(s.to_string()))
    }
}

/// The pattern statistics every family predicate is built from. Computing it
/// once per permutation keeps exhaustive sweeps cheap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternProfile {
    /// Occurrences of `1-2-3`.
    pub increasing: usize,
    /// Occurrences of `1-23`.
    pub tail_adjacent: usize,
    /// Occurrences of `12-3`.
    pub head_adjacent: usize,
    /// `None` below length 2.
    pub ends_in_descent: Option<bool>,
}

impl PatternProfile {
    pub fn of(perm: &Permutation) -> Self {
        let r = perm.ranks();
        let n = r.len();
        let mut tail_adjacent = 0;
        let mut head_adjacent = 0;
        for i in 0..n.saturating_sub(1) {
            if r[i] < r[i + 1] {
                tail_adjacent += r[..i].iter().filter(|&&v| v < r[i]).count();
                head_adjacent += r[i + 2..].iter().filter(|&&v| v > r[i + 1]).count();
            }
        }
        Self {
            increasing: count_increasing_triples(r),
            tail_adjacent,
            head_adjacent,
            ends_in_descent: perm.ends_in_descent().ok(),
        }
    }
}

/// A family of permutations with a closed counting formula.
pub trait PermutationFamily: Send + Sync {
    fn id(&self) -> FamilyId;

    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Membership from precomputed statistics.
    fn admits(&self, profile: &PatternProfile) -> bool;

    fn contains(&self, perm: &Permutation) -> bool {
        self.admits(&PatternProfile::of(perm))
    }

    /// Closed formula for the number of members of length `n`.
    fn closed_count(&self, n: u64) -> Natural;

    /// `(d, shift)` such that `closed_count(n) == class_count(d, n + shift)`.
    fn class_shift(&self) -> (u64, u64);

    /// Smallest length with a nonzero count.
    fn min_length(&self) -> u64;
}

/// `num / (n + off) * C(top, bottom)`, or 0 below the family's minimum
/// length. `top` and `bottom` are only evaluated once `n >= min`.
fn shifted_formula(n: u64, min: u64, num: u64, off: u64, binom: impl FnOnce() -> (u64, u64)) -> Natural {
    if n < min {
        return Natural::zero();
    }
    let (top, bottom) = binom();
    exact_div(binomial(top, bottom as i64) * num, &Natural::from(n + off))
}

/// Avoiders of `1-2-3` ending in a descent: `3/(n+1) C(2n-2, n)`.
pub fn a_count(n: u64) -> Natural {
    shifted_formula(n, 2, 3, 1, || (2 * n - 2, n))
}

/// One `1-23` and one `1-2-3`: `5/(n+2) C(2n-2, n+1)`.
pub fn b_count(n: u64) -> Natural {
    shifted_formula(n, 3, 5, 2, || (2 * n - 2, n + 1))
}

/// Exactly one `1-2-3`: `6/(n+3) C(2n-1, n+2)`.
pub fn c_count(n: u64) -> Natural {
    shifted_formula(n, 3, 6, 3, || (2 * n - 1, n + 2))
}

/// One `1-2-3`, no `1-23`: `7/(n+3) C(2n-2, n+2)`.
pub fn d_count(n: u64) -> Natural {
    shifted_formula(n, 4, 7, 3, || (2 * n - 2, n + 2))
}

/// One `1-2-3`, no `1-23`, no `12-3`: `8/(n+3) C(2n-3, n+2)`.
pub fn f_count(n: u64) -> Natural {
    shifted_formula(n, 5, 8, 3, || (2 * n - 3, n + 2))
}

struct DescentAvoiders;
struct TailAdjacentSingle;
struct SingleIncreasing;
struct SingleNoTailAdjacent;
struct SingleNoAdjacent;

impl PermutationFamily for DescentAvoiders {
    fn id(&self) -> FamilyId {
        FamilyId::T7
    }
    fn name(&self) -> &'static str {
        "T7"
    }
    fn description(&self) -> &'static str {
        "avoid 1-2-3 and end in a descent"
    }
    fn admits(&self, p: &PatternProfile) -> bool {
        p.increasing == 0 && p.ends_in_descent == Some(true)
    }
    fn closed_count(&self, n: u64) -> Natural {
        a_count(n)
    }
    fn class_shift(&self) -> (u64, u64) {
        (2, 0)
    }
    fn min_length(&self) -> u64 {
        2
    }
}

impl PermutationFamily for TailAdjacentSingle {
    fn id(&self) -> FamilyId {
        FamilyId::T8
    }
    fn name(&self) -> &'static str {
        "T8"
    }
    fn description(&self) -> &'static str {
        "exactly one 1-23 and exactly one 1-2-3"
    }
    fn admits(&self, p: &PatternProfile) -> bool {
        p.increasing == 1 && p.tail_adjacent == 1
    }
    fn closed_count(&self, n: u64) -> Natural {
        b_count(n)
    }
    fn class_shift(&self) -> (u64, u64) {
        (4, 1)
    }
    fn min_length(&self) -> u64 {
        3
    }
}

impl PermutationFamily for SingleIncreasing {
    fn id(&self) -> FamilyId {
        FamilyId::T9
    }
    fn name(&self) -> &'static str {
        "T9"
    }
    fn description(&self) -> &'static str {
        "exactly one 1-2-3"
    }
    fn admits(&self, p: &PatternProfile) -> bool {
        p.increasing == 1
    }
    fn closed_count(&self, n: u64) -> Natural {
        c_count(n)
    }
    fn class_shift(&self) -> (u64, u64) {
        (5, 2)
    }
    fn min_length(&self) -> u64 {
        3
    }
}

impl PermutationFamily for SingleNoTailAdjacent {
    fn id(&self) -> FamilyId {
        FamilyId::T10
    }
    fn name(&self) -> &'static str {
        "T10"
    }
    fn description(&self) -> &'static str {
        "exactly one 1-2-3 and no 1-23"
    }
    fn admits(&self, p: &PatternProfile) -> bool {
        p.increasing == 1 && p.tail_adjacent == 0
    }
    fn closed_count(&self, n: u64) -> Natural {
        d_count(n)
    }
    fn class_shift(&self) -> (u64, u64) {
        (6, 2)
    }
    fn min_length(&self) -> u64 {
        4
    }
}

impl PermutationFamily for SingleNoAdjacent {
    fn id(&self) -> FamilyId {
        FamilyId::T11
    }
    fn name(&self) -> &'static str {
        "T11"
    }
    fn description(&self) -> &'static str {
        "exactly one 1-2-3, no 1-23 and no 12-3"
    }
    fn admits(&self, p: &PatternProfile) -> bool {
        p.increasing == 1 && p.tail_adjacent == 0 && p.head_adjacent == 0
    }
    fn closed_count(&self, n: u64) -> Natural {
        f_count(n)
    }
    fn class_shift(&self) -> (u64, u64) {
        (7, 2)
    }
    fn min_length(&self) -> u64 {
        5
    }
}

static REGISTRY: [&dyn PermutationFamily; 5] = [
    &DescentAvoiders,
    &TailAdjacentSingle,
    &SingleIncreasing,
    &SingleNoTailAdjacent,
    &SingleNoAdjacent,
];

/// Every registered family, in id order.
pub fn families() -> &'static [&'static dyn PermutationFamily] {
    &REGISTRY
}

pub fn family(id: FamilyId) -> &'static dyn PermutationFamily {
    REGISTRY
        .iter()
        .copied()
        .find(|f| f.id() == id)
        .expect("every FamilyId is registered")
}

/// `class_count(d, n + shift)` for the family's shift.
pub fn shifted_class_count(id: FamilyId, n: u64) -> Natural {
    let (d, shift) = family(id).class_shift();
    class_count(d, n + shift)
}
