//! Bijections selectable by name from the command line.

use catkit_core::cardgame::{bounded_dyck_to_walk, deck_to_walk, walk_to_bounded_dyck, Card, Deck, Walk};
use catkit_core::dyck::DyckPath;
use catkit_core::patterns::{tau, tau_inverse, theta, theta_inverse, Permutation};
use catkit_core::tableaux::{
    class_path_to_tableau, dyck_to_syt, pad, syt_to_dyck, tableau_to_class_path, unpad, zeta, zeta_inverse,
    TwoRowTableau,
};

use crate::error::CliError;

/// Numeric parameters a bijection may need.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MapParams {
    pub d: Option<usize>,
    pub k: Option<usize>,
    pub p: Option<usize>,
    pub r: Option<usize>,
}

fn required(value: Option<usize>, flag: &str, map: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::usage(format!("map {map} needs --{flag}")))
}

pub trait MapStrategy: Send + Sync {
    fn name(&self) -> &'static str;

    /// Domain and codomain, for help text.
    fn summary(&self) -> &'static str;

    fn forward(&self, input: &str, params: &MapParams) -> Result<String, CliError>;

    fn inverse(&self, input: &str, params: &MapParams) -> Result<String, CliError>;

    fn apply(&self, input: &str, params: &MapParams, inverse: bool) -> Result<String, CliError> {
        if inverse {
            self.inverse(input, params)
        } else {
            self.forward(input, params)
        }
    }
}

fn parse_path(s: &str) -> Result<DyckPath, CliError> {
    s.parse()
        .map_err(|e| CliError::usage(format!("bad Dyck path {s:?}: {e}")))
}

fn parse_tableau(s: &str) -> Result<TwoRowTableau, CliError> {
    s.parse()
        .map_err(|e| CliError::usage(format!("bad tableau {s:?}: {e}")))
}

fn parse_permutation(s: &str) -> Result<Permutation, CliError> {
    s.parse()
        .map_err(|e| CliError::usage(format!("bad permutation {s:?}: {e}")))
}

/// `3412,b=2` into the permutation and `b`.
fn parse_marked_permutation(s: &str) -> Result<(Permutation, usize), CliError> {
    let (perm, b) = s
        .trim()
        .rsplit_once(",b=")
        .ok_or_else(|| CliError::usage(format!("expected PERM,b=B, got {s:?}")))?;
    let b = b
        .trim()
        .parse()
        .map_err(|_| CliError::usage(format!("bad b in {s:?}")))?;
    Ok((parse_permutation(perm)?, b))
}

fn marked(perm: &Permutation, b: usize) -> String {
    format!("{perm},b={b}")
}

/// Accepts a deck (`RRBB`) or a walk (`+1,+1,-1,-1`).
fn parse_walk(s: &str) -> Result<Walk, CliError> {
    let s = s.trim();
    let deck: Deck = if s.contains(',') || s.starts_with(['+', '-']) {
        let cards = s
            .split(',')
            .map(|t| match t.trim() {
                "+1" | "1" => Ok(Card::Red),
                "-1" => Ok(Card::Black),
                other => Err(CliError::usage(format!("bad walk step {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Deck::new(cards).map_err(|e| CliError::usage(format!("bad walk {s:?}: {e}")))?
    } else {
        s.parse().map_err(|e| CliError::usage(format!("bad deck {s:?}: {e}")))?
    };
    Ok(deck_to_walk(&deck))
}

struct SytDyck;

impl MapStrategy for SytDyck {
    fn name(&self) -> &'static str {
        "syt-dyck"
    }
    fn summary(&self) -> &'static str {
        "rectangular tableau -> Dyck path (inverse: path -> tableau)"
    }
    fn forward(&self, input: &str, _: &MapParams) -> Result<String, CliError> {
        let t = parse_tableau(input)?;
        Ok(syt_to_dyck(&t).map_err(CliError::precondition)?.to_string())
    }
    fn inverse(&self, input: &str, _: &MapParams) -> Result<String, CliError> {
        Ok(dyck_to_syt(&parse_path(input)?).to_string())
    }
}

struct Zeta;

impl MapStrategy for Zeta {
    fn name(&self) -> &'static str {
        "zeta"
    }
    fn summary(&self) -> &'static str {
        "path ending in >= k+p downs -> D_{k,p} member; needs --k --p"
    }
    fn forward(&self, input: &str, params: &MapParams) -> Result<String, CliError> {
        let k = required(params.k, "k", self.name())?;
        let p = required(params.p, "p", self.name())?;
        Ok(zeta(&parse_path(input)?, k, p)
            .map_err(CliError::precondition)?
            .to_string())
    }
    fn inverse(&self, input: &str, params: &MapParams) -> Result<String, CliError> {
        let k = required(params.k, "k", self.name())?;
        let p = required(params.p, "p", self.name())?;
        Ok(zeta_inverse(&parse_path(input)?, k, p)
            .map_err(CliError::precondition)?
            .to_string())
    }
}

struct Pad;

impl MapStrategy for Pad {
    fn name(&self) -> &'static str {
        "pad"
    }
    fn summary(&self) -> &'static str {
        "tableau -> rectangular tableau (inverse needs --d)"
    }
    fn forward(&self, input: &str, _: &MapParams) -> Result<String, CliError> {
        Ok(pad(&parse_tableau(input)?).to_string())
    }
    fn inverse(&self, input: &str, params: &MapParams) -> Result<String, CliError> {
        let d = required(params.d, "d", self.name())?;
        Ok(unpad(&parse_tableau(input)?, d)
            .map_err(CliError::precondition)?
            .to_string())
    }
}

struct SytClass;

impl MapStrategy for SytClass {
    fn name(&self) -> &'static str {
        "syt-class"
    }
    fn summary(&self) -> &'static str {
        "tableau with top row k+p longer -> D_{k,p} member; needs --k --p"
    }
    fn forward(&self, input: &str, params: &MapParams) -> Result<String, CliError> {
        let k = required(params.k, "k", self.name())?;
        let p = required(params.p, "p", self.name())?;
        Ok(tableau_to_class_path(&parse_tableau(input)?, k, p)
            .map_err(CliError::precondition)?
            .to_string())
    }
    fn inverse(&self, input: &str, params: &MapParams) -> Result<String, CliError> {
        let k = required(params.k, "k", self.name())?;
        let p = required(params.p, "p", self.name())?;
        Ok(class_path_to_tableau(&parse_path(input)?, k, p)
            .map_err(CliError::precondition)?
            .to_string())
    }
}

struct Theta;

impl MapStrategy for Theta {
    fn name(&self) -> &'static str {
        "theta"
    }
    fn summary(&self) -> &'static str {
        "permutation with one 1-23 occurrence -> PERM,b=B"
    }
    fn forward(&self, input: &str, _: &MapParams) -> Result<String, CliError> {
        let (perm, b) = theta(&parse_permutation(input)?).map_err(CliError::precondition)?;
        Ok(marked(&perm, b))
    }
    fn inverse(&self, input: &str, _: &MapParams) -> Result<String, CliError> {
        let (perm, b) = parse_marked_permutation(input)?;
        Ok(theta_inverse(&perm, b).map_err(CliError::precondition)?.to_string())
    }
}

struct Tau;

impl MapStrategy for Tau {
    fn name(&self) -> &'static str {
        "tau"
    }
    fn summary(&self) -> &'static str {
        "permutation with one 1-2-3 occurrence -> PERM,b=B"
    }
    fn forward(&self, input: &str, _: &MapParams) -> Result<String, CliError> {
        let (perm, b) = tau(&parse_permutation(input)?).map_err(CliError::precondition)?;
        Ok(marked(&perm, b))
    }
    fn inverse(&self, input: &str, _: &MapParams) -> Result<String, CliError> {
        let (perm, b) = parse_marked_permutation(input)?;
        Ok(tau_inverse(&perm, b).map_err(CliError::precondition)?.to_string())
    }
}

struct WalkDyck;

impl MapStrategy for WalkDyck {
    fn name(&self) -> &'static str {
        "walk-dyck"
    }
    fn summary(&self) -> &'static str {
        "deck or walk with maximum r -> D_{r,r} member (inverse needs --r)"
    }
    fn forward(&self, input: &str, params: &MapParams) -> Result<String, CliError> {
        let walk = parse_walk(input)?;
        let r = params.r.unwrap_or_else(|| walk.max_height());
        Ok(walk_to_bounded_dyck(&walk, r)
            .map_err(CliError::precondition)?
            .to_string())
    }
    fn inverse(&self, input: &str, params: &MapParams) -> Result<String, CliError> {
        let r = required(params.r, "r", self.name())?;
        Ok(bounded_dyck_to_walk(&parse_path(input)?, r)
            .map_err(CliError::precondition)?
            .to_string())
    }
}

static REGISTRY: [&dyn MapStrategy; 7] = [&SytDyck, &Zeta, &Pad, &SytClass, &Theta, &Tau, &WalkDyck];

pub fn strategies() -> &'static [&'static dyn MapStrategy] {
    &REGISTRY
}

pub fn lookup(name: &str) -> Result<&'static dyn MapStrategy, CliError> {
    REGISTRY.iter().copied().find(|s| s.name() == name).ok_or_else(|| {
        let known: Vec<&str> = REGISTRY.iter().map(|s| s.name()).collect();
        CliError::usage(format!("unknown bijection {name:?}; known: {}", known.join(", ")))
    })
}
