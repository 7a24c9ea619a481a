//! The maps `theta` (single `1-23` occurrence) and `tau` (single `1-2-3`
//! occurrence) onto permutations that split as a high block `L` followed by a
//! low block `R`, plus the split-set predicates and their summation counts.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{count_increasing_triples, PatternError, PatternProfile, Permutation};
use crate::exactnum::catalan;

/// Which split set to test against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JVariant {
    /// `L = {b..n}`, `R = {1..b-1}` nonempty, both avoid `1-2-3`, `b` not last
    /// in `L`. Target of `theta`.
    J,
    /// `L = {b+1..n}`, `R = {1..b}`, both avoid `1-2-3`, `b+1` not last in
    /// `L`, `b` not first in `R`. Target of `tau`.
    JPrime,
    /// `JPrime` and `b` not second in `R`.
    JDouble,
    /// `JDouble` and `b+1` not second to last in `L`.
    JTriple,
}

impl fmt::Display for JVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JVariant::J => "J",
            JVariant::JPrime => "J'",
            JVariant::JDouble => "J''",
            JVariant::JTriple => "J'''",
        })
    }
}

impl FromStr for JVariant {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "J" => Ok(JVariant::J),
            "J'" | "J1" => Ok(JVariant::JPrime),
            "J''" | "J2" => Ok(JVariant::JDouble),
            "J'''" | "J3" => Ok(JVariant::JTriple),
            other => Err(PatternError::Precondition(format!("unknown split set {other:?}"))),
        }
    }
}

/// Splits `perm` into a high prefix of length `left_len` and the rest,
/// checking that every prefix value exceeds every suffix value.
fn split_high_low(perm: &Permutation, left_len: usize) -> Option<(&[usize], &[usize])> {
    let r = perm.ranks();
    if left_len > r.len() {
        return None;
    }
    let (l, rr) = r.split_at(left_len);
    let low_max = rr.len();
    (l.iter().all(|&v| v > low_max)).then_some((l, rr))
}

/// Membership of `perm` in the split set `variant` with split value `b`.
pub fn is_in_j(perm: &Permutation, b: usize, variant: JVariant) -> bool {
    let n = perm.len();
    let avoid = |s: &[usize]| count_increasing_triples(s) == 0;
    match variant {
        JVariant::J => {
            if b < 2 || b > n {
                return false;
            }
            let Some((l, r)) = split_high_low(perm, n + 1 - b) else {
                return false;
            };
            avoid(l) && avoid(r) && l.last() != Some(&b)
        }
        _ => {
            if b < 1 || b >= n {
                return false;
            }
            let Some((l, r)) = split_high_low(perm, n - b) else {
                return false;
            };
            let mut ok = avoid(l) && avoid(r) && l.last() != Some(&(b + 1)) && r.first() != Some(&b);
            if matches!(variant, JVariant::JDouble | JVariant::JTriple) {
                ok &= r.get(1) != Some(&b);
            }
            if variant == JVariant::JTriple {
                ok &= l.len() < 2 || l[l.len() - 2] != b + 1;
            }
            ok
        }
    }
}

/// Positions `(j, k, m)` of the unique `1-2-3` occurrence, or a precondition
/// error naming how many there are.
fn unique_increasing(perm: &Permutation) -> Result<(usize, usize, usize), PatternError> {
    let r = perm.ranks();
    let count = count_increasing_triples(r);
    if count != 1 {
        return Err(PatternError::Precondition(format!(
            "{perm} has {count} occurrences of 1-2-3, expected exactly 1"
        )));
    }
    for k in 0..r.len() {
        let j = (0..k).find(|&j| r[j] < r[k]);
        let m = (k + 1..r.len()).find(|&m| r[m] > r[k]);
        if let (Some(j), Some(m)) = (j, m) {
            return Ok((j, k, m));
        }
    }
    unreachable!("counted one occurrence but found none")
}

/// For a permutation with exactly one `1-23` and one `1-2-3` occurrence
/// `a b c` (with `b c` adjacent): put `b` where `a` was and reinsert `a`
/// right after `c`. Returns the image and its split value `b`.
pub fn theta(perm: &Permutation) -> Result<(Permutation, usize), PatternError> {
    let profile = PatternProfile::of(perm);
    if profile.tail_adjacent != 1 {
        return Err(PatternError::Precondition(format!(
            "{perm} has {} occurrences of 1-23, expected exactly 1",
            profile.tail_adjacent
        )));
    }
    let (j, k, m) = unique_increasing(perm)?;
    debug_assert_eq!(m, k + 1);
    let r = perm.ranks();
    let (a, b, c) = (r[j], r[k], r[m]);
    let mut out = Vec::with_capacity(r.len());
    for (i, &v) in r.iter().enumerate() {
        match i {
            _ if i == j => out.push(b),
            _ if i == k => {}
            _ if i == m => out.extend([c, a]),
            _ => out.push(v),
        }
    }
    Ok((Permutation::from_ranks_unchecked(out), b))
}

/// Inverse of [`theta`] on `J_{n,b}`: `a` is the first entry of `R` and `c`
/// the last of `L`; `a` returns to the slot held by `b`, and `b` goes back
/// immediately left of `c`.
pub fn theta_inverse(perm: &Permutation, b: usize) -> Result<Permutation, PatternError> {
    if !is_in_j(perm, b, JVariant::J) {
        return Err(PatternError::Precondition(format!("{perm} is not in J with b={b}")));
    }
    let n = perm.len();
    let (l, r) = perm.ranks().split_at(n + 1 - b);
    let a = r[0];
    let (c, l_body) = l.split_last().expect("L holds b and c");
    let mut out: Vec<usize> = l_body.iter().map(|&v| if v == b { a } else { v }).collect();
    out.extend([b, *c]);
    out.extend_from_slice(&r[1..]);
    Ok(Permutation::from_ranks_unchecked(out))
}

/// For a permutation with exactly one `1-2-3` occurrence `a b c`: `b` takes
/// `a`'s slot, `b`'s slot becomes `c a`, a second copy of `b` takes `c`'s
/// slot, and everything left of `a` is incremented. Returns a permutation of
/// length `n + 1` and its split value `b`.
pub fn tau(perm: &Permutation) -> Result<(Permutation, usize), PatternError> {
    let (j, k, m) = unique_increasing(perm)?;
    let r = perm.ranks();
    let (a, b, c) = (r[j], r[k], r[m]);
    let mut out = Vec::with_capacity(r.len() + 1);
    let mut a_pos = 0;
    for (i, &v) in r.iter().enumerate() {
        match i {
            _ if i == j => out.push(b),
            _ if i == k => {
                out.push(c);
                a_pos = out.len();
                out.push(a);
            }
            _ if i == m => out.push(b),
            _ => out.push(v),
        }
    }
    for v in &mut out[..a_pos] {
        *v += 1;
    }
    Ok((Permutation::from_ranks_unchecked(out), b))
}

/// Inverse of [`tau`] on `J'_{n+1,b}`: decrement `L`; its last entry is `c`,
/// the entry `b` in `L` marks `a`'s slot, the first entry of `R` is `a`, and
/// the `b` inside `R` marks `c`'s slot.
pub fn tau_inverse(perm: &Permutation, b: usize) -> Result<Permutation, PatternError> {
    if !is_in_j(perm, b, JVariant::JPrime) {
        return Err(PatternError::Precondition(format!("{perm} is not in J' with b={b}")));
    }
    let len = perm.len();
    let (l, r) = perm.ranks().split_at(len - b);
    let a = r[0];
    let c = l[l.len() - 1] - 1;
    let mut out = Vec::with_capacity(len - 1);
    for &v in &l[..l.len() - 1] {
        out.push(if v == b + 1 { a } else { v - 1 });
    }
    out.push(b);
    for &v in &r[1..] {
        out.push(if v == b { c } else { v });
    }
    Ok(Permutation::from_ranks_unchecked(out))
}

fn catalan_int(n: usize) -> BigInt {
    catalan(n as u64).into()
}

/// `C_m` with `C_{-1} = 0`, so the summands below stay total.
fn cat(m: isize) -> BigInt {
    if m < 0 {
        BigInt::zero()
    } else {
        catalan_int(m as usize)
    }
}

/// Every `(perm, b)` of length `len` in the split set `variant`, ordered by
/// permutation then `b`.
pub fn split_members(len: usize, variant: JVariant) -> Vec<(Permutation, usize)> {
    let mut out = Vec::new();
    for p in super::permutations(len) {
        for b in 1..=len {
            if is_in_j(&p, b, variant) {
                out.push((p.clone(), b));
            }
        }
    }
    out
}

fn sum_range(lo: isize, hi: isize, term: impl Fn(isize) -> BigInt) -> BigInt {
    (lo..=hi).map(term).fold(BigInt::zero(), |acc, t| acc + t)
}

/// `sum_{i=2}^{n-1} (C_{n-i+1} - C_{n-i}) C_{i-1}`, the size of `U_b J_{n,b}`.
pub fn j_sum(n: usize) -> BigInt {
    let n = n as isize;
    sum_range(2, n - 1, |i| (cat(n - i + 1) - cat(n - i)) * cat(i - 1))
}

/// `sum_{i=2}^{n-1} (C_{n-i+1} - C_{n-i})(C_i - C_{i-1})`, the size of
/// `U_b J'_{n+1,b}`.
pub fn j_prime_sum(n: usize) -> BigInt {
    let n = n as isize;
    sum_range(2, n - 1, |i| (cat(n - i + 1) - cat(n - i)) * (cat(i) - cat(i - 1)))
}

/// Which form of the `J''`/`J'''` summand to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumForm {
    /// The `L` factor indexed by the block size `n - i + 1`.
    BlockSize,
    /// The `L` factor indexed one lower, `n - i`.
    ShiftedDown,
}

/// `sum_{i=3}^{n-1} (C_{s} - C_{s-1})(C_i - 2 C_{i-1})` with `s = n-i+1` or
/// `s = n-i` according to `form`.
pub fn j_double_sum(n: usize, form: SumForm) -> BigInt {
    let n = n as isize;
    sum_range(3, n - 1, |i| {
        let s = match form {
            SumForm::BlockSize => n - i + 1,
            SumForm::ShiftedDown => n - i,
        };
        (cat(s) - cat(s - 1)) * (cat(i) - 2 * cat(i - 1))
    })
}

/// `sum_{i=3}^{n-2} (C_{s} - 2 C_{s-1})(C_i - 2 C_{i-1})`, `s` as above.
pub fn j_triple_sum(n: usize, form: SumForm) -> BigInt {
    let n = n as isize;
    sum_range(3, n - 2, |i| {
        let s = match form {
            SumForm::BlockSize => n - i + 1,
            SumForm::ShiftedDown => n - i,
        };
        (cat(s) - 2 * cat(s - 1)) * (cat(i) - 2 * cat(i - 1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{enumerate_family, FamilyId};
    use std::collections::BTreeSet;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn split_set(len: usize, variant: JVariant) -> BTreeSet<(Permutation, usize)> {
        split_members(len, variant).into_iter().collect()
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&perm("123")).unwrap(), (perm("231"), 2));
        assert_eq!(theta_inverse(&perm("231"), 2).unwrap(), perm("123"));
        assert!(is_in_j(&perm("231"), 2, JVariant::J));
        assert!(matches!(theta(&perm("132")), Err(PatternError::Precondition(_))));
        assert!(matches!(theta(&perm("1324")), Err(PatternError::Precondition(_))));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&perm("123")).unwrap(), (perm("3412"), 2));
        assert_eq!(tau_inverse(&perm("3412"), 2).unwrap(), perm("123"));
        assert!(is_in_j(&perm("3412"), 2, JVariant::JPrime));
        assert!(matches!(tau(&perm("1234")), Err(PatternError::Precondition(_))));
        assert!(matches!(
            tau_inverse(&perm("3421"), 2),
            Err(PatternError::Precondition(_))
        ));
    }

    #[test]
    fn split_set_edge_cases() {
        // b = 1 leaves R empty.
        assert!(!is_in_j(&perm("321"), 1, JVariant::J));
        assert!(!is_in_j(&perm("231"), 4, JVariant::J));
        assert!(!is_in_j(&perm("3412"), 3, JVariant::JPrime));
        assert!("J'".parse::<JVariant>().unwrap() == JVariant::JPrime);
    }

    #[test]
    fn theta_is_a_bijection_onto_j() {
        for n in 0..=8 {
            let domain = enumerate_family(n, FamilyId::T8);
            let image: BTreeSet<_> = domain.iter().map(|p| theta(p).unwrap()).collect();
            assert_eq!(image.len(), domain.len());
            for (q, b) in &image {
                assert_eq!(q.len(), n);
                assert!(is_in_j(q, *b, JVariant::J));
            }
            for p in &domain {
                let (q, b) = theta(p).unwrap();
                assert_eq!(theta_inverse(&q, b).unwrap(), *p);
            }
            if n <= 7 {
                assert_eq!(image, split_set(n, JVariant::J), "n={n}");
            }
        }
    }

    #[test]
    fn tau_is_a_bijection_onto_split_sets() {
        let targets = [
            (FamilyId::T9, JVariant::JPrime),
            (FamilyId::T10, JVariant::JDouble),
            (FamilyId::T11, JVariant::JTriple),
        ];
        for n in 0..=7 {
            for (id, variant) in targets {
                let domain = enumerate_family(n, id);
                let image: BTreeSet<_> = domain.iter().map(|p| tau(p).unwrap()).collect();
                assert_eq!(image.len(), domain.len());
                assert_eq!(image, split_set(n + 1, variant), "{id} n={n}");
                for p in &domain {
                    let (q, b) = tau(p).unwrap();
                    assert_eq!(tau_inverse(&q, b).unwrap(), *p);
                }
            }
        }
    }

    #[test]
    fn summation_forms() {
        for n in 0..=8 {
            assert_eq!(BigInt::from(split_set(n, JVariant::J).len()), j_sum(n), "J n={n}");
            assert_eq!(BigInt::from(split_set(n + 1, JVariant::JPrime).len()), j_prime_sum(n));
            assert_eq!(
                BigInt::from(split_set(n + 1, JVariant::JDouble).len()),
                j_double_sum(n, SumForm::BlockSize)
            );
            assert_eq!(
                BigInt::from(split_set(n + 1, JVariant::JTriple).len()),
                j_triple_sum(n, SumForm::BlockSize)
            );
        }
        // The shifted-down index disagrees already at the first nonzero term.
        assert_eq!(j_double_sum(4, SumForm::ShiftedDown), BigInt::zero());
        assert_eq!(j_double_sum(4, SumForm::BlockSize), BigInt::from(1));
        assert_eq!(j_triple_sum(5, SumForm::ShiftedDown), BigInt::zero());
        assert_eq!(j_triple_sum(5, SumForm::BlockSize), BigInt::from(1));
    }
}
