//! Two-row standard Young tableaux and their bijections with Dyck path
//! classes.
//!
//! The chain used for `Y_d -> D_{k,p}` (with `d = k + p`) is
//!
//! ```text
//! tableau (n, n-d) --pad--> tableau (n, n) --syt_to_dyck--> path ending in >= d downs --zeta--> D_{k,p}
//! ```
//!
//! Each arrow has an inverse here and the round trips are tested exhaustively.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::dyck::{mirror, DyckPath, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Row {
    Top,
    Bottom,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Row::Top => "top",
            Row::Bottom => "bottom",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("shape violation: top row has {top} cells, bottom row has {bottom}")]
    Shape { top: usize, bottom: usize },
    #[error("entries must be exactly 1..={total} without repeats")]
    Entries { total: usize },
    #[error("{row} row is not strictly increasing at position {position}")]
    RowOrder { row: Row, position: usize },
    #[error("column {column} is not increasing top to bottom")]
    ColumnOrder { column: usize },
    #[error("tableau is not rectangular ({top} vs {bottom} cells)")]
    NotRectangular { top: usize, bottom: usize },
    #[error("row length difference {d} exceeds row length {n}")]
    ShapeTooLong { d: usize, n: usize },
    #[error("bottom row does not end with the {d} largest entries")]
    BadTail { d: usize },
    #[error("tableau shape difference {actual} does not equal k + p = {expected}")]
    ShapeMismatch { expected: usize, actual: usize },
    #[error("k + p must be at least 1")]
    EmptyParameters,
    #[error("path ends with {have} down steps, needs at least {need}")]
    TrailingDowns { need: usize, have: usize },
    #[error("path is not a member of D_{{{k},{p}}}")]
    NotInClass { k: usize, p: usize },
    #[error("cannot parse tableau {0:?}: expected rows like \"1,2,5|3,4\"")]
    Parse(String),
}

/// A standard filling of a two-row shape with the top row at least as long as
/// the bottom row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoRowTableau {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl TwoRowTableau {
    pub fn validate(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self, TableauError> {
        if top.len() < bottom.len() {
            return Err(TableauError::Shape {
                top: top.len(),
                bottom: bottom.len(),
            });
        }
        let total = top.len() + bottom.len();
        let mut seen = vec![false; total + 1];
        for &v in top.iter().chain(&bottom) {
            if v == 0 || v > total || seen[v] {
                return Err(TableauError::Entries { total });
            }
            seen[v] = true;
        }
        for (row, cells) in [(Row::Top, &top), (Row::Bottom, &bottom)] {
            if let Some(i) = cells.windows(2).position(|w| w[0] >= w[1]) {
                return Err(TableauError::RowOrder { row, position: i + 2 });
            }
        }
        if let Some(i) = top.iter().zip(&bottom).position(|(t, b)| t >= b) {
            return Err(TableauError::ColumnOrder { column: i + 1 });
        }
        Ok(Self { top, bottom })
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    /// How many cells longer the top row is.
    pub fn excess(&self) -> usize {
        self.top.len() - self.bottom.len()
    }

    pub fn is_rectangular(&self) -> bool {
        self.top.len() == self.bottom.len()
    }

    /// Reducibility of a rectangular tableau: some `i` in `2..=n` has the
    /// first `i - 1` columns holding exactly `1..=2i-2`.
    pub fn is_reducible(&self) -> Result<bool, TableauError> {
        if !self.is_rectangular() {
            return Err(TableauError::NotRectangular {
                top: self.top.len(),
                bottom: self.bottom.len(),
            });
        }
        // The first c columns hold 1..=2c exactly when their maximum is 2c.
        let mut column_max = 0;
        for c in 1..self.top.len() {
            column_max = column_max.max(self.top[c - 1]).max(self.bottom[c - 1]);
            if column_max == 2 * c {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

impl fmt::Display for TwoRowTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |row: &[usize]| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", join(&self.top), join(&self.bottom))
    }
}

impl FromStr for TwoRowTableau {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = || TableauError::Parse(s.to_string());
        let (top, bottom) = s.trim().split_once('|').ok_or_else(parse_err)?;
        let parse_row = |row: &str| -> Result<Vec<usize>, TableauError> {
            let row = row.trim();
            if row.is_empty() {
                return Ok(Vec::new());
            }
            row.split(',')
                .map(|v| v.trim().parse().map_err(|_| parse_err()))
                .collect()
        };
        TwoRowTableau::validate(parse_row(top)?, parse_row(bottom)?)
    }
}

/// All tableaux of shape `(n, n - d)`, lexicographic by top row.
pub fn enumerate_syt(d: usize, n: usize) -> Result<Vec<TwoRowTableau>, TableauError> {
    if d > n {
        return Err(TableauError::ShapeTooLong { d, n });
    }
    fn go(
        next: usize,
        total: usize,
        bottom_len: usize,
        top: &mut Vec<usize>,
        bottom: &mut Vec<usize>,
        out: &mut Vec<TwoRowTableau>,
    ) {
        if next > total {
            out.push(TwoRowTableau {
                top: top.clone(),
                bottom: bottom.clone(),
            });
            return;
        }
        if top.len() < total - bottom_len {
            top.push(next);
            go(next + 1, total, bottom_len, top, bottom, out);
            top.pop();
        }
        if bottom.len() < bottom_len && bottom.len() < top.len() {
            bottom.push(next);
            go(next + 1, total, bottom_len, top, bottom, out);
            bottom.pop();
        }
    }
    let mut out = Vec::new();
    go(1, 2 * n - d, n - d, &mut Vec::new(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// Step `i` up puts `i` in the top row, down puts it in the bottom row.
pub fn dyck_to_syt(path: &DyckPath) -> TwoRowTableau {
    let mut top = Vec::with_capacity(path.semilength());
    let mut bottom = Vec::with_capacity(path.semilength());
    for (i, s) in path.steps().iter().enumerate() {
        match s {
            Step::Up => top.push(i + 1),
            Step::Down => bottom.push(i + 1),
        }
    }
    TwoRowTableau { top, bottom }
}

/// Inverse of [`dyck_to_syt`]; needs a rectangular tableau.
pub fn syt_to_dyck(t: &TwoRowTableau) -> Result<DyckPath, TableauError> {
    if !t.is_rectangular() {
        return Err(TableauError::NotRectangular {
            top: t.top.len(),
            bottom: t.bottom.len(),
        });
    }
    let mut steps = vec![Step::Down; t.size()];
    for &v in &t.top {
        steps[v - 1] = Step::Up;
    }
    Ok(DyckPath::from_steps_unchecked(steps))
}

/// Fills the short bottom row up to a rectangle with the next largest values.
pub fn pad(t: &TwoRowTableau) -> TwoRowTableau {
    let size = t.size();
    let mut bottom = t.bottom.clone();
    bottom.extend(size + 1..=size + t.excess());
    TwoRowTableau {
        top: t.top.clone(),
        bottom,
    }
}

/// Removes the `d` largest entries from the end of the bottom row.
pub fn unpad(t: &TwoRowTableau, d: usize) -> Result<TwoRowTableau, TableauError> {
    let size = t.size();
    if d > t.bottom.len() || t.bottom[t.bottom.len() - d..] != *(size - d + 1..=size).collect::<Vec<_>>() {
        return Err(TableauError::BadTail { d });
    }
    Ok(TwoRowTableau {
        top: t.top.clone(),
        bottom: t.bottom[..t.bottom.len() - d].to_vec(),
    })
}

/// The cut-mirror-glue map from paths ending in at least `k + p` down steps
/// onto `D_{k,p}`.
///
/// With `v1` the vertex `p` steps before the end and `v2` the nearest vertex
/// to its left at the same height, the segment between them is mirrored and
/// moved to the front, and the remainder is closed off with `p` down steps.
/// For `k = 0` both sides are the same set (paths ending in at least `p`
/// downs) and the map is the identity.
pub fn zeta(path: &DyckPath, k: usize, p: usize) -> Result<DyckPath, TableauError> {
    if k + p == 0 {
        return Err(TableauError::EmptyParameters);
    }
    let have = path.trailing_downs();
    if have < k + p {
        return Err(TableauError::TrailingDowns { need: k + p, have });
    }
    if k == 0 {
        return Ok(path.clone());
    }
    let steps = path.steps();
    let heights = path.heights();
    let v1 = steps.len() - p;
    let level = heights[v1];
    // The step into v1 is a down step, so everything between v2 and v1 lies
    // strictly above `level`.
    let v2 = (0..v1)
        .rev()
        .find(|&i| heights[i] == level)
        .expect("a path ending above the axis crosses every lower level");
    let mut out = mirror(&steps[v2..v1]);
    out.extend_from_slice(&steps[..v2]);
    out.extend(std::iter::repeat_n(Step::Down, p));
    Ok(DyckPath::from_steps_unchecked(out))
}

/// Inverse of [`zeta`]: split at the first return after the origin, drop the
/// last `p` downs of the tail, and re-attach the mirrored first block on top
/// before closing with `p` downs.
pub fn zeta_inverse(path: &DyckPath, k: usize, p: usize) -> Result<DyckPath, TableauError> {
    if k + p == 0 {
        return Err(TableauError::EmptyParameters);
    }
    if !path.is_member_d(k, p) {
        return Err(TableauError::NotInClass { k, p });
    }
    if k == 0 {
        return Ok(path.clone());
    }
    let steps = path.steps();
    let first_return = path
        .returns()
        .into_iter()
        .find(|&t| t > 0)
        .expect("members with k >= 1 are nonempty");
    let (head, tail) = steps.split_at(first_return);
    let mut out = tail[..tail.len() - p].to_vec();
    out.extend(mirror(head));
    out.extend(std::iter::repeat_n(Step::Down, p));
    Ok(DyckPath::from_steps_unchecked(out))
}

/// `zeta(syt_to_dyck(pad(t)), k, p)` for a tableau whose top row is `k + p`
/// cells longer.
pub fn tableau_to_class_path(t: &TwoRowTableau, k: usize, p: usize) -> Result<DyckPath, TableauError> {
    if k + p == 0 {
        return Err(TableauError::EmptyParameters);
    }
    if t.excess() != k + p {
        return Err(TableauError::ShapeMismatch {
            expected: k + p,
            actual: t.excess(),
        });
    }
    zeta(&syt_to_dyck(&pad(t))?, k, p)
}

/// Inverse of [`tableau_to_class_path`].
pub fn class_path_to_tableau(path: &DyckPath, k: usize, p: usize) -> Result<TwoRowTableau, TableauError> {
    let padded = dyck_to_syt(&zeta_inverse(path, k, p)?);
    unpad(&padded, k + p)
}
