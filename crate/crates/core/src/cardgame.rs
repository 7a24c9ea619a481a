//! Exact analysis of the red/black stopping game.
//!
//! A deck holds `n` red and `n` black cards. Drawing a red card adds one to
//! the score, a black card subtracts one. The threshold strategy stops as
//! soon as the score reaches `r` and scores `r`, or scores 0 if it never
//! gets there. Decks with maximum prefix score exactly `r` are counted in
//! closed form through a bijection with `D_{r,r}`, and every closed form is
//! paired with an exhaustive route over all decks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::dyck::{DyckPath, Step};
use crate::exactnum::{binomial, exact_div, ratio, ExactRational, Natural};

/// Largest `n` the exhaustive histogram accepts unless told otherwise.
pub const DEFAULT_HISTOGRAM_BOUND: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("invalid card {0:?} (expected 'R' or 'B')")]
    InvalidCard(char),
    #[error("deck has {red} red and {black} black cards; counts must match")]
    Unbalanced { red: usize, black: usize },
    #[error("threshold r={r} outside {min}..={n}")]
    ThresholdOutOfRange { r: usize, min: usize, n: usize },
    #[error("walk reaches maximum {actual}, expected {expected}")]
    WrongMaximum { expected: usize, actual: usize },
    #[error("path is not a member of D_{{{r},{r}}}")]
    NotBounded { r: usize },
    #[error("n={n} exceeds the exhaustive bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Card {
    Red,
    Black,
}

/// A deck with equally many red and black cards.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Deck {
    cards: Vec<Card>,
}

impl Deck {
    pub fn new(cards: Vec<Card>) -> Result<Self, GameError> {
        let red = cards.iter().filter(|c| **c == Card::Red).count();
        let black = cards.len() - red;
        if red != black {
            return Err(GameError::Unbalanced { red, black });
        }
        Ok(Self { cards })
    }

    pub fn cards(&self) -> &[Card] {
        &self.cards
    }

    /// Number of red cards (equal to the number of black cards).
    pub fn half_size(&self) -> usize {
        self.cards.len() / 2
    }
}

impl FromStr for Deck {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cards = s
            .trim()
            .chars()
            .map(|c| match c {
                'R' | 'r' => Ok(Card::Red),
                'B' | 'b' => Ok(Card::Black),
                other => Err(GameError::InvalidCard(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Deck::new(cards)
    }
}

impl fmt::Display for Deck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cards {
            f.write_str(match c {
                Card::Red => "R",
                Card::Black => "B",
            })?;
        }
        Ok(())
    }
}

/// A balanced +-1 walk. Unlike a Dyck path it may dip below zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    steps: Vec<Step>,
}

impl Walk {
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn deltas(&self) -> Vec<i64> {
        self.steps.iter().map(|s| s.delta()).collect()
    }

    pub fn max_height(&self) -> usize {
        crate::dyck::max_height(&self.steps)
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Up => "+1",
                Step::Down => "-1",
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// Red is an up step, black a down step.
pub fn deck_to_walk(deck: &Deck) -> Walk {
    Walk {
        steps: deck
            .cards
            .iter()
            .map(|c| match c {
                Card::Red => Step::Up,
                Card::Black => Step::Down,
            })
            .collect(),
    }
}

pub fn walk_to_deck(walk: &Walk) -> Deck {
    Deck {
        cards: walk
            .steps
            .iter()
            .map(|s| match s {
                Step::Up => Card::Red,
                Step::Down => Card::Black,
            })
            .collect(),
    }
}

/// Highest `reds - blacks` over all prefixes, the empty prefix included.
pub fn max_prefix_score(deck: &Deck) -> usize {
    deck_to_walk(deck).max_height()
}

fn check_threshold(r: usize, min: usize, n: usize) -> Result<(), GameError> {
    if r < min || r > n {
        return Err(GameError::ThresholdOutOfRange { r, min, n });
    }
    Ok(())
}

/// Number of decks of `2n` cards whose maximum prefix score is exactly `r`:
/// `(2r+1)/(n+r+1) * C(2n, n+r)`.
pub fn p_exact_count(r: usize, n: usize) -> Result<Natural, GameError> {
    check_threshold(r, 0, n)?;
    let numerator = binomial(2 * n as u64, (n + r) as i64) * (2 * r + 1);
    Ok(exact_div(numerator, &Natural::from(n + r + 1)))
}

/// Shift a walk with maximum `r` down by `r`, reflect it, then wrap it in
/// `r` up steps and `r` down steps. The result lies in `D_{r,r}` with
/// semilength `n + r`.
pub fn walk_to_bounded_dyck(walk: &Walk, r: usize) -> Result<DyckPath, GameError> {
    if r == 0 {
        return Err(GameError::ThresholdOutOfRange {
            r,
            min: 1,
            n: walk.steps.len() / 2,
        });
    }
    let actual = walk.max_height();
    if actual != r {
        return Err(GameError::WrongMaximum { expected: r, actual });
    }
    let mut steps = vec![Step::Up; r];
    steps.extend(walk.steps.iter().map(|s| s.flipped()));
    steps.extend(std::iter::repeat_n(Step::Down, r));
    Ok(DyckPath::from_steps_unchecked(steps))
}

/// Inverse of [`walk_to_bounded_dyck`].
pub fn bounded_dyck_to_walk(path: &DyckPath, r: usize) -> Result<Walk, GameError> {
    if r == 0 || !path.is_member_d(r, r) {
        return Err(GameError::NotBounded { r });
    }
    let steps = path.steps();
    Ok(Walk {
        steps: steps[r..steps.len() - r].iter().map(|s| s.flipped()).collect(),
    })
}

/// Probability that a shuffled deck of `2n` cards ever reaches score `r`.
pub fn reach_probability(r: usize, n: usize) -> Result<ExactRational, GameError> {
    check_threshold(r, 1, n)?;
    let mut reaching = Natural::zero();
    for k in r..=n {
        reaching += p_exact_count(k, n)?;
    }
    Ok(ratio(&reaching, &binomial(2 * n as u64, n as i64)))
}

/// Expected payoff of stopping at the first time the score reaches `r`.
pub fn expected_score(r: usize, n: usize) -> Result<ExactRational, GameError> {
    Ok(reach_probability(r, n)? * ExactRational::from_integer(r.into()))
}

/// The best threshold for a deck of `2n` cards together with its expected
/// payoff and every threshold that ties with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalThreshold {
    pub n: usize,
    pub r: usize,
    pub expected: ExactRational,
    /// All maximizers in increasing order; `r` is the first.
    pub maximizers: Vec<usize>,
}

impl OptimalThreshold {
    pub fn is_tie(&self) -> bool {
        self.maximizers.len() > 1
    }
}

/// Exact maximization of [`expected_score`] over `r` in `1..=n`, ties broken
/// toward the smaller threshold. Ties are logged.
pub fn optimal_threshold(n: usize) -> OptimalThreshold {
    assert!(n >= 1, "the game needs at least one card of each colour");
    let scores: Vec<ExactRational> = (1..=n).map(|r| expected_score(r, n).expect("r within 1..=n")).collect();
    let best = scores.iter().max().expect("n >= 1").clone();
    let maximizers: Vec<usize> = (1..=n).filter(|r| scores[r - 1] == best).collect();
    if maximizers.len() > 1 {
        log::info!("n={n}: thresholds {maximizers:?} tie at expected score {best}");
    }
    OptimalThreshold {
        n,
        r: maximizers[0],
        expected: best,
        maximizers,
    }
}

pub fn optimal_r(n: usize) -> usize {
    optimal_threshold(n).r
}

/// The threshold predicted from the observed run lengths: `r` appears `4r`
/// times, so the prediction is the least `r >= 1` with `n <= 2r(r+1)`.
pub fn conjecture_r(n: usize) -> usize {
    (1..).find(|&r| n <= 2 * r * (r + 1)).expect("unbounded search")
}

/// Visits every deck of `n` red and `n` black cards, lexicographic with
/// `R < B`.
pub fn for_each_deck<F: FnMut(&[Card])>(n: usize, mut visit: F) {
    fn go<F: FnMut(&[Card])>(red: usize, black: usize, n: usize, cur: &mut Vec<Card>, visit: &mut F) {
        if red == n && black == n {
            visit(cur);
            return;
        }
        if red < n {
            cur.push(Card::Red);
            go(red + 1, black, n, cur, visit);
            cur.pop();
        }
        if black < n {
            cur.push(Card::Black);
            go(red, black + 1, n, cur, visit);
            cur.pop();
        }
    }
    go(0, 0, n, &mut Vec::with_capacity(2 * n), &mut visit);
}

pub fn enumerate_decks(n: usize) -> Vec<Deck> {
    let mut out = Vec::new();
    for_each_deck(n, |cards| out.push(Deck { cards: cards.to_vec() }));
    out
}

fn prefix_max(cards: &[Card]) -> usize {
    let mut h = 0i64;
    let mut best = 0i64;
    for c in cards {
        h += if *c == Card::Red { 1 } else { -1 };
        best = best.max(h);
    }
    best as usize
}

/// Exhaustive distribution of the maximum prefix score over all decks.
pub fn score_histogram(n: usize) -> Result<BTreeMap<usize, Natural>, GameError> {
    score_histogram_bounded(n, DEFAULT_HISTOGRAM_BOUND)
}

pub fn score_histogram_bounded(n: usize, bound: usize) -> Result<BTreeMap<usize, Natural>, GameError> {
    if n > bound {
        return Err(GameError::BoundExceeded { n, bound });
    }
    let mut counts = vec![0u64; n + 1];
    for_each_deck(n, |cards| counts[prefix_max(cards)] += 1);
    Ok(counts
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c > 0)
        .map(|(r, c)| (r, Natural::from(c)))
        .collect())
}

/// Mean payoff of the threshold strategy over every deck, computed by
/// playing each deck. Independent of the closed forms.
pub fn threshold_payoff_exhaustive(r: usize, n: usize) -> Result<ExactRational, GameError> {
    check_threshold(r, 1, n)?;
    let mut total = Natural::zero();
    let mut decks = Natural::zero();
    for_each_deck(n, |cards| {
        decks += 1u32;
        if prefix_max(cards) >= r {
            total += r;
        }
    });
    debug_assert!(!decks.is_zero() || n == 0);
    Ok(ratio(&total, &decks.max(Natural::one())))
}
