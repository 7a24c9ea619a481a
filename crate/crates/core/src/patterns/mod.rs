//! Permutations, vincular patterns and occurrence counting.
//!
//! Occurrence counting is the ground truth for every permutation family in
//! [`family`]; the closed formulas and the split-set bijections in
//! [`bijections`] are checked against it.

pub mod bijections;
pub mod family;

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

pub use bijections::{is_in_j, split_members, tau, tau_inverse, theta, theta_inverse, JVariant};
pub use family::{families, family, FamilyId, PatternProfile, PermutationFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("cannot parse permutation {0:?}")]
    ParsePermutation(String),
    #[error("cannot parse pattern {0:?}: expected something like \"1-23\"")]
    ParsePattern(String),
    #[error("need at least 2 entries to talk about a final descent, got {0}")]
    TooShort(usize),
    #[error("unknown permutation family {0:?} (expected one of T7, T8, T9, T10, T11)")]
    UnknownFamily(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    ranks: Vec<usize>,
}

impl Permutation {
    pub fn new(ranks: Vec<usize>) -> Result<Self, PatternError> {
        let n = ranks.len();
        let mut seen = vec![false; n + 1];
        for &v in &ranks {
            if v == 0 || v > n || seen[v] {
                return Err(PatternError::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Self { ranks })
    }

    pub(crate) fn from_ranks_unchecked(ranks: Vec<usize>) -> Self {
        debug_assert!(Self::new(ranks.clone()).is_ok());
        Self { ranks }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            ranks: (1..=n).collect(),
        }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// `pi_{n-1} > pi_n`.
    pub fn ends_in_descent(&self) -> Result<bool, PatternError> {
        match self.ranks.as_slice() {
            [.., x, y] => Ok(x > y),
            _ => Err(PatternError::TooShort(self.len())),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() <= 9 { "" } else { "," };
        write!(f, "{}", self.ranks.iter().join(sep))
    }
}

impl FromStr for Permutation {
    type Err = PatternError;

    /// Accepts `34215` (single digits) or `10,3,...` (comma separated).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || PatternError::ParsePermutation(s.to_string());
        let ranks: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|v| v.trim().parse().map_err(|_| err()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(err))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(ranks)
    }
}

/// A classical pattern with some neighbouring slots required to be adjacent
/// in the host permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VincularPattern {
    values: Vec<usize>,
    /// `adjacent[j]` ties slot `j` to slot `j + 1` (0-based).
    adjacent: Vec<bool>,
}

impl VincularPattern {
    /// `adjacent` lists 1-based slot indices `j` whose pair `(j, j+1)` must be
    /// consecutive in the host.
    pub fn new(values: Vec<usize>, adjacent: &[usize]) -> Result<Self, PatternError> {
        let m = values.len();
        Permutation::new(values.clone())?;
        let mut flags = vec![false; m.saturating_sub(1)];
        for &j in adjacent {
            if j == 0 || j >= m {
                return Err(PatternError::ParsePattern(format!("{values:?} adjacent {j}")));
            }
            flags[j - 1] = true;
        }
        Ok(Self {
            values,
            adjacent: flags,
        })
    }

    /// `(1-2-3)`.
    pub fn increasing() -> Self {
        Self::new(vec![1, 2, 3], &[]).unwrap()
    }

    /// `(1-23)`: last two entries adjacent.
    pub fn increasing_tail_adjacent() -> Self {
        Self::new(vec![1, 2, 3], &[2]).unwrap()
    }

    /// `(12-3)`: first two entries adjacent.
    pub fn increasing_head_adjacent() -> Self {
        Self::new(vec![1, 2, 3], &[1]).unwrap()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Index tuples of every occurrence in `perm`, in lexicographic order.
    pub fn occurrence_positions(&self, perm: &Permutation) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each_occurrence(perm.ranks(), |idx| out.push(idx.to_vec()));
        out
    }

    fn for_each_occurrence<F: FnMut(&[usize])>(&self, host: &[usize], mut visit: F) {
        let m = self.values.len();
        if m == 0 || m > host.len() {
            return;
        }
        let mut chosen = Vec::with_capacity(m);
        self.extend(host, &mut chosen, &mut visit);
    }

    fn extend<F: FnMut(&[usize])>(&self, host: &[usize], chosen: &mut Vec<usize>, visit: &mut F) {
        let slot = chosen.len();
        if slot == self.values.len() {
            visit(chosen);
            return;
        }
        let candidates = match chosen.last() {
            None => 0..host.len(),
            Some(&prev) if self.adjacent[slot - 1] => prev + 1..(prev + 2).min(host.len()),
            Some(&prev) => prev + 1..host.len(),
        };
        for i in candidates {
            // Order-isomorphism against every slot already placed.
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(s, &pos)| (host[pos] < host[i]) == (self.values[s] < self.values[slot]));
            if consistent {
                chosen.push(i);
                self.extend(host, chosen, visit);
                chosen.pop();
            }
        }
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 && !self.adjacent[i - 1] {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for VincularPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PatternError::ParsePattern(s.to_string());
        let mut values = Vec::new();
        let mut adjacent = Vec::new();
        let mut dash_pending = false;
        for c in s.trim().chars() {
            match c {
                '-' if !values.is_empty() && !dash_pending => dash_pending = true,
                d if d.is_ascii_digit() => {
                    if !values.is_empty() && !dash_pending {
                        adjacent.push(values.len());
                    }
                    values.push(d.to_digit(10).unwrap() as usize);
                    dash_pending = false;
                }
                _ => return Err(err()),
            }
        }
        if values.is_empty() || dash_pending {
            return Err(err());
        }
        VincularPattern::new(values, &adjacent).map_err(|_| err())
    }
}

/// Number of occurrences of `pat` in `perm`.
pub fn occurrences(perm: &Permutation, pat: &VincularPattern) -> usize {
    let mut count = 0;
    pat.for_each_occurrence(perm.ranks(), |_| count += 1);
    count
}

/// Counts classical `1-2-3` occurrences in an arbitrary sequence of distinct
/// values.
pub(crate) fn count_increasing_triples(values: &[usize]) -> usize {
    (0..values.len())
        .map(|mid| {
            let below = values[..mid].iter().filter(|&&v| v < values[mid]).count();
            let above = values[mid + 1..].iter().filter(|&&v| v > values[mid]).count();
            below * above
        })
        .sum()
}

/// `S_n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n).permutations(n).map(Permutation::from_ranks_unchecked)
}

/// Members of `S_n` in the family, lexicographic.
pub fn enumerate_family(n: usize, id: FamilyId) -> Vec<Permutation> {
    let fam = family(id);
    permutations(n).filter(|p| fam.contains(p)).collect()
}
