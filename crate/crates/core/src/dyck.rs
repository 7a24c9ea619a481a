//! Dyck paths, the `P_{k,p}` / `D_{k,p}` membership predicates and exhaustive
//! enumeration.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn flipped(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Down => 'd',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("invalid step character {0:?} (expected 'u' or 'd')")]
    InvalidChar(char),
    #[error("unbalanced path: {ups} up steps and {downs} down steps")]
    Unbalanced { ups: usize, downs: usize },
    #[error("path goes below the axis after step {position}")]
    BelowAxis { position: usize },
}

/// A balanced step sequence that never goes below the axis. The empty path is
/// valid.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Checks both invariants. An unbalanced sequence is reported before a
    /// negative prefix.
    pub fn validate(steps: Vec<Step>) -> Result<Self, DyckError> {
        let ups = steps.iter().filter(|s| **s == Step::Up).count();
        let downs = steps.len() - ups;
        if ups != downs {
            return Err(DyckError::Unbalanced { ups, downs });
        }
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += s.delta();
            if height < 0 {
                return Err(DyckError::BelowAxis { position: i + 1 });
            }
        }
        Ok(Self { steps })
    }

    /// Wraps steps already known to form a Dyck path.
    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(Self::validate(steps.clone()).is_ok());
        Self { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Heights at every vertex, `heights()[t]` being the height after `t`
    /// steps.
    pub fn heights(&self) -> Vec<i64> {
        heights(&self.steps)
    }

    /// Vertex indices where the path touches the axis, endpoints included.
    pub fn returns(&self) -> Vec<usize> {
        self.heights()
            .iter()
            .enumerate()
            .filter(|(_, h)| **h == 0)
            .map(|(t, _)| t)
            .collect()
    }

    pub fn leading_ups(&self) -> usize {
        self.steps.iter().take_while(|s| **s == Step::Up).count()
    }

    pub fn trailing_downs(&self) -> usize {
        self.steps.iter().rev().take_while(|s| **s == Step::Down).count()
    }

    /// Membership in `P_{k,p}`: at least `k` leading ups and `p` trailing downs.
    pub fn is_member_p(&self, k: usize, p: usize) -> bool {
        self.leading_ups() >= k && self.trailing_downs() >= p
    }

    /// Membership in `D_{k,p}`: in `P_{k,p}` and split by some return into a
    /// left part of semilength at least `k` and a right part of semilength at
    /// least `p`. Either part may be empty.
    pub fn is_member_d(&self, k: usize, p: usize) -> bool {
        if !self.is_member_p(k, p) {
            return false;
        }
        let n = self.semilength();
        self.returns().into_iter().any(|t| t / 2 >= k && n - t / 2 >= p)
    }

    /// True when the path touches the axis strictly between its endpoints.
    pub fn has_interior_return(&self) -> bool {
        let len = self.len();
        self.returns().into_iter().any(|t| t > 0 && t < len)
    }

    pub fn max_height(&self) -> usize {
        max_height(&self.steps)
    }

    /// Reverses the step order and swaps up with down. Maps Dyck paths to
    /// Dyck paths.
    pub fn mirrored(&self) -> DyckPath {
        DyckPath {
            steps: mirror(&self.steps),
        }
    }
}

/// Prefix heights of an arbitrary step sequence, starting with 0.
pub fn heights(steps: &[Step]) -> Vec<i64> {
    let mut out = Vec::with_capacity(steps.len() + 1);
    let mut h = 0;
    out.push(h);
    for s in steps {
        h += s.delta();
        out.push(h);
    }
    out
}

/// Maximum prefix sum of the +-1 encoding, floored at 0 by the empty prefix.
pub fn max_height(steps: &[Step]) -> usize {
    heights(steps).into_iter().max().unwrap_or(0).max(0) as usize
}

/// Reverse-and-swap of a step sequence.
pub fn mirror(steps: &[Step]) -> Vec<Step> {
    steps.iter().rev().map(|s| s.flipped()).collect()
}

/// Parses the `u`/`d` text encoding without checking the path invariants.
pub fn parse_steps(s: &str) -> Result<Vec<Step>, DyckError> {
    s.chars()
        .map(|c| match c {
            'u' | 'U' => Ok(Step::Up),
            'd' | 'D' => Ok(Step::Down),
            other => Err(DyckError::InvalidChar(other)),
        })
        .collect()
}

impl FromStr for DyckPath {
    type Err = DyckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DyckPath::validate(parse_steps(s.trim())?)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// All Dyck paths of semilength `n`, lexicographic with `u < d`.
pub fn enumerate_dyck(n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    for_each_dyck(n, |steps| out.push(DyckPath::from_steps_unchecked(steps.to_vec())));
    out
}

/// Visits every Dyck path of semilength `n` in lexicographic order without
/// allocating a path per visit.
pub fn for_each_dyck<F: FnMut(&[Step])>(n: usize, mut visit: F) {
    fn go<F: FnMut(&[Step])>(ups: usize, downs: usize, n: usize, cur: &mut Vec<Step>, visit: &mut F) {
        if ups == n && downs == n {
            visit(cur);
            return;
        }
        if ups < n {
            cur.push(Step::Up);
            go(ups + 1, downs, n, cur, visit);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::Down);
            go(ups, downs + 1, n, cur, visit);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(2 * n);
    go(0, 0, n, &mut cur, &mut visit);
}

/// Members of `D_{k,p}` of semilength `n`, in `enumerate_dyck` order.
pub fn enumerate_d(k: usize, p: usize, n: usize) -> Vec<DyckPath> {
    if n < k + p {
        return Vec::new();
    }
    enumerate_dyck(n)
        .into_iter()
        .filter(|path| path.is_member_d(k, p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{catalan, class_count};
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn texts(paths: &[DyckPath]) -> Vec<String> {
        paths.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn validation_errors_are_distinct() {
        assert!("uudd".parse::<DyckPath>().is_ok());
        assert_eq!(
            "udd".parse::<DyckPath>(),
            Err(DyckError::Unbalanced { ups: 1, downs: 2 })
        );
        assert_eq!("duud".parse::<DyckPath>(), Err(DyckError::BelowAxis { position: 1 }));
        assert_eq!("uxd".parse::<DyckPath>(), Err(DyckError::InvalidChar('x')));
        assert_eq!("".parse::<DyckPath>(), Ok(DyckPath::empty()));
    }

    #[test]
    fn returns_and_runs() {
        assert_eq!(path("udud").returns(), vec![0, 2, 4]);
        assert_eq!(path("uudd").returns(), vec![0, 4]);
        assert_eq!(path("").returns(), vec![0]);
        let p = path("uudd");
        assert_eq!((p.leading_ups(), p.trailing_downs()), (2, 2));
        let p = path("udud");
        assert_eq!((p.leading_ups(), p.trailing_downs()), (1, 1));
        let p = path("");
        assert_eq!((p.leading_ups(), p.trailing_downs()), (0, 0));
    }

    #[test]
    fn membership_examples() {
        assert!(path("uudd").is_member_p(2, 1));
        assert!(!path("udud").is_member_p(2, 0));
        assert!(path("").is_member_p(0, 0));
        assert!(path("udud").is_member_d(1, 1));
        assert!(!path("uudd").is_member_d(1, 1));
        assert!(path("ud").is_member_d(1, 0));
        assert!(path("").is_member_d(0, 0));
        assert!(!path("").is_member_d(1, 0));
        assert!(!path("").is_member_d(0, 1));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(texts(&enumerate_dyck(0)), vec![""]);
        assert_eq!(texts(&enumerate_dyck(2)), vec!["uudd", "udud"]);
        assert_eq!(enumerate_dyck(5).len(), 42);
        assert_eq!(texts(&enumerate_d(1, 1, 3)), vec!["uuddud", "uduudd", "ududud"]);
        assert_eq!(texts(&enumerate_d(2, 0, 2)), vec!["uudd"]);
        assert!(enumerate_d(3, 3, 2).is_empty());
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        for n in 0..=8 {
            let all = enumerate_dyck(n);
            assert_eq!(BigUint::from(all.len()), catalan(n as u64));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn max_height_examples() {
        assert_eq!(path("uudd").max_height(), 2);
        assert_eq!(path("udud").max_height(), 1);
        assert_eq!(path("").max_height(), 0);
        assert_eq!(max_height(&parse_steps("dduu").unwrap()), 0);
    }

    #[test]
    fn class_sizes_match_formula() {
        for n in 0..=9 {
            for d in 0..=7 {
                let expected = class_count(d as u64, n as u64);
                for k in 0..=d {
                    let got = enumerate_d(k, d - k, n).len();
                    assert_eq!(BigUint::from(got), expected, "k={k} p={} n={n}", d - k);
                }
            }
        }
    }

    #[test]
    fn two_sided_classes_have_interior_returns() {
        for n in 0..=8 {
            for k in 1..=3 {
                for p in 1..=3 {
                    assert!(enumerate_d(k, p, n).iter().all(|q| q.has_interior_return()));
                }
            }
        }
    }

    fn arb_dyck() -> impl Strategy<Value = DyckPath> {
        (0usize..=8).prop_flat_map(|n| {
            let all = enumerate_dyck(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn everything_is_in_d00(p in arb_dyck()) {
            prop_assert!(p.is_member_d(0, 0));
        }

        #[test]
        fn text_round_trip(p in arb_dyck()) {
            prop_assert_eq!(p.to_string().parse::<DyckPath>().unwrap(), p);
        }

        #[test]
        fn mirror_is_involution(p in arb_dyck()) {
            let m = p.mirrored();
            prop_assert!(DyckPath::validate(m.steps().to_vec()).is_ok());
            prop_assert_eq!(m.mirrored(), p);
        }
    }
}
