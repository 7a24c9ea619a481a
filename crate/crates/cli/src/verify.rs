//! Exhaustive invariant sweeps, grouped into suites selectable by name.

use std::collections::BTreeSet;
use std::time::Duration;

use catkit_core::cardgame::{
    bounded_dyck_to_walk, conjecture_r, deck_to_walk, expected_score, for_each_deck, optimal_r, p_exact_count,
    score_histogram_bounded, threshold_payoff_exhaustive, walk_to_bounded_dyck, Deck,
};
use catkit_core::dyck::{enumerate_d, enumerate_dyck, DyckPath};
use catkit_core::exactnum::{binomial, catalan_power_coeff, class_count, series_catalan_power, Natural};
use catkit_core::patterns::{
    families, permutations, split_members, tau, tau_inverse, theta, theta_inverse, FamilyId, JVariant, PatternProfile,
    Permutation,
};
use catkit_core::tableaux::{
    class_path_to_tableau, dyck_to_syt, enumerate_syt, pad, syt_to_dyck, tableau_to_class_path, unpad, zeta,
    zeta_inverse,
};

use crate::guard::{Guards, Resource};
use crate::output::{Cell, Table};

/// Optimal thresholds for `n = 1..=25`, checked term by term.
pub const EXPECTED_OPTIMAL_THRESHOLDS: [usize; 25] = [
    1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 4,
];

/// Range over which the threshold conjecture is asserted rather than just
/// reported.
pub const CONJECTURE_ASSERTED_UP_TO: usize = 25;

/// Outcome of one check inside a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub suite: &'static str,
    pub check: &'static str,
    pub range: String,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub max_n: usize,
    pub checks: Vec<CheckOutcome>,
    /// Kept off stdout so reports stay byte-identical between runs.
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn first_counterexample(&self) -> Option<(&CheckOutcome, &str)> {
        self.checks
            .iter()
            .find_map(|c| c.counterexample.as_deref().map(|ce| (c, ce)))
    }

    pub fn to_table(&self) -> Table {
        let mut t = Table::new(&["suite", "check", "range", "cases", "status", "counterexample"]);
        for c in &self.checks {
            t.push(vec![
                c.suite.into(),
                c.check.into(),
                c.range.clone().into(),
                Cell::Int(Natural::from(c.cases)),
                if c.passed() { "pass" } else { "FAIL" }.into(),
                c.counterexample.clone().into(),
            ]);
        }
        t
    }
}

/// Per-resource sweep bounds: the requested `max_n` capped by the guards.
#[derive(Clone, Copy, Debug)]
pub struct Sweep {
    pub max_n: usize,
    pub guards: Guards,
}

impl Sweep {
    pub fn n(&self, r: Resource) -> usize {
        self.max_n.min(self.guards.limit(r))
    }
}

/// Counts cases and remembers the first failure.
struct Tally {
    suite: &'static str,
    check: &'static str,
    range: String,
    cases: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn new(suite: &'static str, check: &'static str, range: impl Into<String>) -> Self {
        Self {
            suite,
            check,
            range: range.into(),
            cases: 0,
            counterexample: None,
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            suite: self.suite,
            check: self.check,
            range: self.range,
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

pub trait VerificationSuite: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn run(&self, sweep: &Sweep) -> Vec<CheckOutcome>;
}

struct Counts;

impl VerificationSuite for Counts {
    fn name(&self) -> &'static str {
        "counts"
    }

    fn description(&self) -> &'static str {
        "enumeration sizes against the closed counting formulas"
    }

    fn run(&self, sweep: &Sweep) -> Vec<CheckOutcome> {
        let np = sweep.n(Resource::Paths);
        let nperm = sweep.n(Resource::Permutations);
        let name = self.name();

        let mut dyck = Tally::new(name, "dyck-classes", format!("k+p<=7, n<={np}"));
        for n in 0..=np {
            let paths = enumerate_dyck(n);
            for d in 0..=7 {
                for k in 0..=d {
                    let p = d - k;
                    let got = paths.iter().filter(|x| x.is_member_d(k, p)).count();
                    let want = class_count(d as u64, n as u64);
                    dyck.case(Natural::from(got) == want, || {
                        format!("|D_{{{k},{p}}}| at n={n} is {got}, formula gives {want}")
                    });
                }
            }
        }

        let mut syt = Tally::new(name, "syt-classes", format!("d<=7, n<={np}"));
        for n in 0..=np {
            for d in 0..=7.min(n) {
                let got = enumerate_syt(d, n).map_or(0, |v| v.len());
                let want = class_count(d as u64, n as u64);
                syt.case(Natural::from(got) == want, || {
                    format!("|Y_{d}| at n={n} is {got}, formula gives {want}")
                });
            }
        }

        let mut fams = Tally::new(name, "family-sizes", format!("T7..T11, n<={nperm}"));
        for n in 1..=nperm {
            let mut counts = [0u64; 5];
            for perm in permutations(n) {
                let profile = PatternProfile::of(&perm);
                for (i, f) in families().iter().enumerate() {
                    if f.admits(&profile) {
                        counts[i] += 1;
                    }
                }
            }
            for (f, got) in families().iter().zip(counts) {
                let want = f.closed_count(n as u64);
                fams.case(Natural::from(got) == want, || {
                    format!("{} at n={n}: brute force {got}, formula {want}", f.name())
                });
            }
        }

        let mut shifts = Tally::new(name, "shift-identities", "T7..T11, n<=20");
        for f in families() {
            let (d, shift) = f.class_shift();
            for n in 0..=20u64 {
                let (a, b) = (f.closed_count(n), class_count(d, n + shift));
                shifts.case(a == b, || {
                    format!("{} at n={n}: {a} vs class_count({d},{})={b}", f.name(), n + shift)
                });
            }
        }

        let mut series = Tally::new(name, "series-oracle", "d<=8, n<=30");
        for d in 0..=8u64 {
            let coeffs = series_catalan_power(d as u32 + 1, 30);
            for n in d..=30 {
                let s = &coeffs[(n - d) as usize];
                let ok = *s == class_count(d, n) && *s == catalan_power_coeff(d + 1, n - d);
                series.case(ok, || {
                    format!("[x^{}] C(x)^{} = {s} disagrees at d={d}, n={n}", n - d, d + 1)
                });
            }
        }

        vec![
            dyck.finish(),
            syt.finish(),
            fams.finish(),
            shifts.finish(),
            series.finish(),
        ]
    }
}

struct Bijections;

impl VerificationSuite for Bijections {
    fn name(&self) -> &'static str {
        "bijections"
    }

    fn description(&self) -> &'static str {
        "round trips and image sets of every bijection"
    }

    fn run(&self, sweep: &Sweep) -> Vec<CheckOutcome> {
        let np = sweep.n(Resource::Paths);
        let nperm = sweep.n(Resource::Permutations);
        let ndeck = sweep.n(Resource::Decks);
        let name = self.name();

        let mut dyck_syt = Tally::new(name, "dyck-syt", format!("n<={np}"));
        for n in 0..=np {
            for path in enumerate_dyck(n) {
                let t = dyck_to_syt(&path);
                let ok = t.is_rectangular() && syt_to_dyck(&t).as_ref() == Ok(&path);
                dyck_syt.case(ok, || format!("{path} -> {t} does not return"));
            }
        }

        let mut pads = Tally::new(name, "pad-unpad", format!("d<=4, n<={np}"));
        for n in 0..=np {
            for d in 0..=4.min(n) {
                for t in enumerate_syt(d, n).unwrap_or_default() {
                    let padded = pad(&t);
                    let ok = padded.is_rectangular() && unpad(&padded, d).as_ref() == Ok(&t);
                    pads.case(ok, || format!("pad({t}) = {padded} does not unpad with d={d}"));
                }
            }
        }

        let mut zetas = Tally::new(name, "zeta", format!("1<=k+p<=4, n<={np}"));
        for n in 0..=np {
            let paths = enumerate_dyck(n);
            for d in 1..=4 {
                for k in 0..=d {
                    let p = d - k;
                    let domain: Vec<&DyckPath> = paths.iter().filter(|x| x.trailing_downs() >= d).collect();
                    let mut image = BTreeSet::new();
                    for x in &domain {
                        let ok = match zeta(x, k, p) {
                            Ok(y) => {
                                let back = zeta_inverse(&y, k, p);
                                let ok = y.is_member_d(k, p) && back.as_ref() == Ok(*x);
                                image.insert(y);
                                ok
                            }
                            Err(_) => false,
                        };
                        zetas.case(ok, || format!("zeta({x}) with k={k}, p={p} fails to round trip"));
                    }
                    let target: BTreeSet<DyckPath> = enumerate_d(k, p, n).into_iter().collect();
                    zetas.case(image == target && image.len() == domain.len(), || {
                        format!("zeta image is not D_{{{k},{p}}} at n={n}")
                    });
                }
            }
        }

        let mut class = Tally::new(name, "syt-class", format!("1<=k+p<=4, n<={np}"));
        for n in 0..=np {
            for d in 1..=4.min(n) {
                let tableaux = enumerate_syt(d, n).unwrap_or_default();
                for k in 0..=d {
                    let p = d - k;
                    let mut image = BTreeSet::new();
                    for t in &tableaux {
                        let ok = match tableau_to_class_path(t, k, p) {
                            Ok(y) => {
                                let ok = class_path_to_tableau(&y, k, p).as_ref() == Ok(t);
                                image.insert(y);
                                ok
                            }
                            Err(_) => false,
                        };
                        class.case(ok, || format!("{t} with k={k}, p={p} fails to round trip"));
                    }
                    let target: BTreeSet<DyckPath> = enumerate_d(k, p, n).into_iter().collect();
                    class.case(image == target && image.len() == tableaux.len(), || {
                        format!("tableau image is not D_{{{k},{p}}} at n={n}")
                    });
                }
            }
        }

        let mut thetas = Tally::new(name, "theta", format!("n<={nperm}"));
        for n in 0..=nperm {
            let mut image = BTreeSet::new();
            let mut domain = 0usize;
            for perm in permutations(n) {
                if !family_admits(FamilyId::T8, &perm) {
                    continue;
                }
                domain += 1;
                let ok = match theta(&perm) {
                    Ok((q, b)) => {
                        let ok = theta_inverse(&q, b).as_ref() == Ok(&perm);
                        image.insert((q, b));
                        ok
                    }
                    Err(_) => false,
                };
                thetas.case(ok, || format!("theta({perm}) fails to round trip"));
            }
            let target: BTreeSet<(Permutation, usize)> = split_members(n, JVariant::J).into_iter().collect();
            thetas.case(image == target && image.len() == domain, || {
                format!("theta image differs from the J split set at n={n}")
            });
        }

        // tau lengthens by one, so the split sets live one size up.
        let ntau = nperm.saturating_sub(1);
        let mut taus = Tally::new(name, "tau", format!("T9..T11, n<={ntau}"));
        let targets = [
            (FamilyId::T9, JVariant::JPrime),
            (FamilyId::T10, JVariant::JDouble),
            (FamilyId::T11, JVariant::JTriple),
        ];
        for n in 0..=ntau {
            for (id, variant) in targets {
                let mut image = BTreeSet::new();
                let mut domain = 0usize;
                for perm in permutations(n) {
                    if !family_admits(id, &perm) {
                        continue;
                    }
                    domain += 1;
                    let ok = match tau(&perm) {
                        Ok((q, b)) => {
                            let ok = tau_inverse(&q, b).as_ref() == Ok(&perm) && q.len() == n + 1;
                            image.insert((q, b));
                            ok
                        }
                        Err(_) => false,
                    };
                    taus.case(ok, || format!("tau({perm}) fails to round trip"));
                }
                let target: BTreeSet<(Permutation, usize)> = split_members(n + 1, variant).into_iter().collect();
                taus.case(image == target && image.len() == domain, || {
                    format!("tau image of {id} differs from the {variant} split set at n={n}")
                });
            }
        }

        let mut walks = Tally::new(name, "walk-dyck", format!("n<={ndeck}"));
        for n in 0..=ndeck {
            for_each_deck(n, |cards| {
                let deck = Deck::new(cards.to_vec()).expect("balanced");
                let walk = deck_to_walk(&deck);
                let r = walk.max_height();
                if r == 0 {
                    return;
                }
                let ok = match walk_to_bounded_dyck(&walk, r) {
                    Ok(path) => {
                        path.is_member_d(r, r)
                            && path.semilength() == n + r
                            && bounded_dyck_to_walk(&path, r).as_ref() == Ok(&walk)
                    }
                    Err(_) => false,
                };
                walks.case(ok, || format!("deck {deck} fails the bounded-path round trip"));
            });
        }

        vec![
            dyck_syt.finish(),
            pads.finish(),
            zetas.finish(),
            class.finish(),
            thetas.finish(),
            taus.finish(),
            walks.finish(),
        ]
    }
}

fn family_admits(id: FamilyId, perm: &Permutation) -> bool {
    catkit_core::patterns::family(id).contains(perm)
}

struct Game;

impl VerificationSuite for Game {
    fn name(&self) -> &'static str {
        "game"
    }

    fn description(&self) -> &'static str {
        "card game distribution, strategy values and thresholds"
    }

    fn run(&self, sweep: &Sweep) -> Vec<CheckOutcome> {
        let ndeck = sweep.n(Resource::Decks);
        let name = self.name();

        let mut hist = Tally::new(name, "histogram", format!("n<={ndeck}"));
        for n in 0..=ndeck {
            let h = score_histogram_bounded(n, ndeck).expect("within bound");
            for r in 0..=n {
                let got = h.get(&r).cloned().unwrap_or_default();
                let want = p_exact_count(r, n).expect("r <= n");
                hist.case(got == want, || {
                    format!("{got} decks reach exactly {r} at n={n}, formula {want}")
                });
            }
        }

        let mut partition = Tally::new(name, "partition", "n<=30");
        for n in 0..=30usize {
            let total: Natural = (0..=n).map(|r| p_exact_count(r, n).expect("r <= n")).sum();
            let want = binomial(2 * n as u64, n as i64);
            partition.case(total == want, || format!("sum over r at n={n} is {total}, not {want}"));
        }

        let mut class = Tally::new(name, "class-identity", "n<=20");
        for n in 0..=20usize {
            for r in 0..=n {
                let a = p_exact_count(r, n).expect("r <= n");
                let b = class_count(2 * r as u64, (n + r) as u64);
                class.case(a == b, || format!("r={r}, n={n}: {a} vs {b}"));
            }
        }

        let mut strategy = Tally::new(name, "strategy", format!("1<=r<=n<={ndeck}"));
        for n in 1..=ndeck {
            for r in 1..=n {
                let played = threshold_payoff_exhaustive(r, n).expect("r in range");
                let exact = expected_score(r, n).expect("r in range");
                strategy.case(played == exact, || {
                    format!("E at r={r}, n={n}: play {played}, formula {exact}")
                });
            }
        }

        let mut conj = Tally::new(name, "conjecture", format!("n<={CONJECTURE_ASSERTED_UP_TO}"));
        let mut sequence = Tally::new(name, "threshold-sequence", "n<=25");
        for n in 1..=CONJECTURE_ASSERTED_UP_TO {
            let (opt, guess) = (optimal_r(n), conjecture_r(n));
            conj.case(opt == guess, || format!("n={n}: optimal {opt}, conjectured {guess}"));
            let want = EXPECTED_OPTIMAL_THRESHOLDS[n - 1];
            sequence.case(opt == want, || format!("n={n}: optimal {opt}, expected {want}"));
        }

        vec![
            hist.finish(),
            partition.finish(),
            class.finish(),
            strategy.finish(),
            conj.finish(),
            sequence.finish(),
        ]
    }
}

static REGISTRY: [&dyn VerificationSuite; 3] = [&Counts, &Bijections, &Game];

pub fn suites() -> &'static [&'static dyn VerificationSuite] {
    &REGISTRY
}

/// `all` selects every registered suite in order.
pub fn select(name: &str) -> Option<Vec<&'static dyn VerificationSuite>> {
    if name == "all" {
        return Some(REGISTRY.to_vec());
    }
    REGISTRY.iter().copied().find(|s| s.name() == name).map(|s| vec![s])
}

pub fn run_suites(name: &str, sweep: &Sweep) -> Option<VerificationReport> {
    let selected = select(name)?;
    let start = std::time::Instant::now();
    let checks = selected.iter().flat_map(|s| s.run(sweep)).collect();
    Some(VerificationReport {
        suite: name.to_string(),
        max_n: sweep.max_n,
        checks,
        wall_time: start.elapsed(),
    })
}
