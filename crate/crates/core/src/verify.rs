//! Finite-range verification of the series identities and the structural
//! facts about the Dyson maps and row insertion.
//!
//! Every check shards its work by partition size, gathers the per-size
//! results in ascending order, and reports the first counterexample in
//! (size, enumeration order). Reports are therefore identical for any worker
//! count, apart from `elapsed`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::dyson::{self, build, is_grounded_stair, phi, psi2, rho1, stair_report};
use crate::enumerate::{compositions_12, partitions_of, partitions_where, Composition12, Part12};
use crate::error::{Error, Result};
use crate::insertion::{insert_f, split_f_inv, split_f_inv_ordered, ExtractionOrder};
use crate::partition::{Partition, WeightKind};
use crate::series::{lhs_sum_jobs, product_formula, BiSeries, ProductFormula};
use crate::shard;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub object: String,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    fn new(object: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Counterexample { object: object.into(), expected: expected.to_string(), actual: actual.to_string() }
    }
}

/// Outcome of one check. `elapsed` is in milliseconds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub max_n: u32,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub elapsed: u64,
    pub items_checked: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The report with `elapsed` zeroed, for comparing runs.
    pub fn without_timing(&self) -> Self {
        VerificationReport { elapsed: 0, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Items checked and the first counterexample, if any.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Tally {
    items: u64,
    counterexample: Option<Counterexample>,
}

impl Tally {
    fn tick(&mut self) {
        self.items += 1;
    }

    /// Counts one assertion; keeps only the first failure.
    fn expect(&mut self, ok: bool, cx: impl FnOnce() -> Counterexample) {
        self.items += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(cx());
        }
    }

    fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    fn merge(tallies: impl IntoIterator<Item = Tally>) -> Tally {
        tallies.into_iter().fold(Tally::default(), |mut acc, t| {
            acc.items += t.items;
            if acc.counterexample.is_none() {
                acc.counterexample = t.counterexample;
            }
            acc
        })
    }
}

fn timed(name: &str, max_n: u32, body: impl FnOnce() -> Tally) -> VerificationReport {
    let start = Instant::now();
    let tally = body();
    VerificationReport {
        check_name: name.to_owned(),
        max_n,
        status: if tally.failed() { Status::Fail } else { Status::Pass },
        counterexample: tally.counterexample,
        elapsed: start.elapsed().as_millis() as u64,
        items_checked: tally.items,
    }
}

/// Top-level checks exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Conj2,
    Conj3,
    PropLeg,
    Transport,
    TopCoefficients,
    Structure,
}

impl Check {
    pub const ALL: [Check; 6] =
        [Check::Conj2, Check::Conj3, Check::PropLeg, Check::Transport, Check::TopCoefficients, Check::Structure];

    pub fn name(self) -> &'static str {
        match self {
            Check::Conj2 => "conj2",
            Check::Conj3 => "conj3",
            Check::PropLeg => "prop-leg",
            Check::Transport => "transport",
            Check::TopCoefficients => "top-coefficients",
            Check::Structure => "structure",
        }
    }

    /// Default range; each finishes in a few seconds on a laptop.
    pub fn default_max_n(self) -> u32 {
        match self {
            Check::Conj2 | Check::Conj3 => 30,
            Check::PropLeg => 24,
            Check::Transport => 16,
            Check::TopCoefficients => 29,
            Check::Structure => 16,
        }
    }

    pub fn min_n(self) -> u32 {
        match self {
            Check::TopCoefficients => 4,
            _ => 0,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown check `{s}`"))
    }
}

/// Runs `check` up to `max_n` on `jobs` workers.
pub fn run_check(check: Check, max_n: u32, jobs: usize) -> Result<VerificationReport> {
    if max_n < check.min_n() {
        return Err(Error::DomainViolation(format!("{check} needs max_n ≥ {}, got {max_n}", check.min_n())));
    }
    Ok(match check {
        Check::Conj2 => verify_conjecture(Conjecture::Conj2, max_n, jobs),
        Check::Conj3 => verify_conjecture(Conjecture::Conj3, max_n, jobs),
        Check::PropLeg => verify_prop_leg(max_n, jobs),
        Check::Transport => verify_weight_transport(max_n, jobs),
        Check::TopCoefficients => verify_top_coefficients(max_n, jobs)?,
        Check::Structure => verify_structure(max_n, jobs),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjecture {
    /// `wt`-series against [`ProductFormula::Conj2Rhs`].
    Conj2,
    /// `w̃t`-series against [`ProductFormula::Conj3Rhs`].
    Conj3,
}

fn compare_series(actual: &BiSeries, expected: &BiSeries, tally: &mut Tally) {
    if let Some(d) = actual.first_difference(expected) {
        tally.expect(false, || Counterexample::new(format!("t^{} q^{}", d.k, d.n), &d.right, &d.left));
    }
}

fn partitions_counted(s: &BiSeries) -> u64 {
    let total: BigInt = (0..=s.qbound()).map(|n| s.at_t_one(n)).sum();
    u64::try_from(total).unwrap_or(u64::MAX)
}

pub fn verify_conjecture(which: Conjecture, max_n: u32, jobs: usize) -> VerificationReport {
    let (name, kind, rhs) = match which {
        Conjecture::Conj2 => ("conj2", WeightKind::Wt, ProductFormula::Conj2Rhs),
        Conjecture::Conj3 => ("conj3", WeightKind::WtTilde, ProductFormula::Conj3Rhs),
    };
    timed(name, max_n, || {
        let lhs = lhs_sum_jobs(kind, max_n, jobs);
        let rhs = product_formula(rhs, max_n);
        let mut tally = Tally { items: partitions_counted(&lhs), counterexample: None };
        compare_series(&lhs, &rhs, &mut tally);
        tally
    })
}

/// `w̃t`-series against the correction product times the `wt`-series.
pub fn verify_prop_leg(max_n: u32, jobs: usize) -> VerificationReport {
    timed("prop-leg", max_n, || {
        let tilde = lhs_sum_jobs(WeightKind::WtTilde, max_n, jobs);
        let plain = lhs_sum_jobs(WeightKind::Wt, max_n, jobs);
        let rhs = product_formula(ProductFormula::Correction, max_n).mul(&plain).expect("same bound");
        let mut tally = Tally { items: partitions_counted(&tilde) + partitions_counted(&plain), counterexample: None };
        compare_series(&tilde, &rhs, &mut tally);
        tally
    })
}

fn transport_at(n: u32) -> Tally {
    let mut tally = Tally::default();
    for lam in partitions_of(n) {
        let w = lam.weight(WeightKind::WtTilde);
        if let Ok(r) = rho1(&lam) {
            let wr = r.weight(WeightKind::WtTilde);
            tally.expect(wr == w, || Counterexample::new(format!("wt-tilde(rho1({lam}))"), w, wr));
        }
        if let Ok(s) = psi2(&lam) {
            let ws = s.weight(WeightKind::WtTilde);
            tally.expect(ws == w + 1, || Counterexample::new(format!("wt-tilde(psi2({lam}))"), w + 1, ws));
        }
        let twos = phi(&lam).count_twos();
        tally.expect(twos == w, || Counterexample::new(format!("#2s in phi({lam})"), w, twos));
    }
    tally
}

/// `w̃t` is unchanged by `ρ₁`, grows by one under `ψ₂`, and equals the
/// number of 2s in the decomposition.
pub fn verify_weight_transport(max_n: u32, jobs: usize) -> VerificationReport {
    timed("transport", max_n, || Tally::merge(shard::map_sizes(max_n, jobs, transport_at)))
}

/// Highest nonzero coefficients of both weight series.
///
/// For `n ≥ 2` the `w̃t`-series has `t^n q^{2n}` coefficient 1 and
/// `t^n q^{2n+1}` coefficient 3, the `wt`-series 1 and 2, and neither has a
/// term `t^k q^m` with `k > m/2`. The `wt`-series also has unit coefficients
/// at `q`, `t q^2` and `t q^3`.
pub fn verify_top_coefficients(max_n: u32, jobs: usize) -> Result<VerificationReport> {
    if max_n < 4 {
        return Err(Error::DomainViolation(format!("top-coefficients needs max_n ≥ 4, got {max_n}")));
    }
    Ok(timed("top-coefficients", max_n, || {
        let tilde = lhs_sum_jobs(WeightKind::WtTilde, max_n, jobs);
        let plain = lhs_sum_jobs(WeightKind::Wt, max_n, jobs);
        let mut tally = Tally::default();
        let expect_coeff = |tally: &mut Tally, label: &str, s: &BiSeries, k: u32, n: u32, want: i64| {
            let got = s.coefficient(k, n);
            tally.expect(got == BigInt::from(want), || Counterexample::new(format!("{label} t^{k} q^{n}"), want, &got));
        };
        for n in 0..=max_n {
            for (label, s) in [("wt-tilde", &tilde), ("wt", &plain)] {
                for (k, c) in s.row(n) {
                    if 2 * k > n {
                        tally.expect(false, || Counterexample::new(format!("{label} t^{k} q^{n}"), 0, &c));
                    } else {
                        tally.tick();
                    }
                }
            }
            match n {
                1 => expect_coeff(&mut tally, "wt", &plain, 0, 1, 1),
                2 | 3 => expect_coeff(&mut tally, "wt", &plain, 1, n, 1),
                _ if n >= 4 && n % 2 == 0 => {
                    expect_coeff(&mut tally, "wt-tilde", &tilde, n / 2, n, 1);
                    expect_coeff(&mut tally, "wt", &plain, n / 2, n, 1);
                }
                _ if n >= 5 => {
                    expect_coeff(&mut tally, "wt-tilde", &tilde, n / 2, n, 3);
                    expect_coeff(&mut tally, "wt", &plain, n / 2, n, 2);
                }
                _ => {}
            }
        }
        tally
    }))
}

/// Independent structural facts, each checkable on its own range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureCheck {
    /// `f` and `f⁻¹` are mutually inverse, both weights add, and the
    /// extraction order does not matter.
    FBijection,
    /// `build ∘ φ = id`, and `φ` of a forward step prepends that step.
    Decomposition,
    /// Boundary-label contribution test agrees with the arm/leg test cellwise.
    BoundaryLemma,
    /// `ψ₂` keeps grounded stair-step diagrams (last column a single box)
    /// with landing number ≤ 2 in that class.
    StairClosure,
    /// `(2ⁿ)`, `(2ⁿ,1)`, `(1,2ⁿ)`, `(2,1,2ⁿ)` are admissible.
    AdmissibleFamilies,
    /// `(2,2,1,2)` never occurs contiguously in an admissible composition.
    ForbiddenBlock,
    /// The number of admissible compositions of `n` is `p(n)`.
    AdmissibleCount,
}

impl StructureCheck {
    pub const ALL: [StructureCheck; 7] = [
        StructureCheck::FBijection,
        StructureCheck::Decomposition,
        StructureCheck::BoundaryLemma,
        StructureCheck::StairClosure,
        StructureCheck::AdmissibleFamilies,
        StructureCheck::ForbiddenBlock,
        StructureCheck::AdmissibleCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureCheck::FBijection => "f-bijection",
            StructureCheck::Decomposition => "decomposition",
            StructureCheck::BoundaryLemma => "boundary-lemma",
            StructureCheck::StairClosure => "stair-closure",
            StructureCheck::AdmissibleFamilies => "admissible-families",
            StructureCheck::ForbiddenBlock => "forbidden-block",
            StructureCheck::AdmissibleCount => "admissible-count",
        }
    }

    fn tally(self, max_n: u32, jobs: usize) -> Tally {
        match self {
            StructureCheck::FBijection => Tally::merge(shard::map_sizes(max_n, jobs, f_bijection_at)),
            StructureCheck::Decomposition => Tally::merge(shard::map_sizes(max_n, jobs, decomposition_at)),
            StructureCheck::BoundaryLemma => Tally::merge(shard::map_sizes(max_n, jobs, boundary_lemma_at)),
            StructureCheck::StairClosure => Tally::merge(shard::map_sizes(max_n, jobs, stair_closure_at)),
            StructureCheck::AdmissibleFamilies => admissible_families_tally(&families_up_to_total(max_n)),
            StructureCheck::ForbiddenBlock => {
                let mut t = Tally::default();
                let c: Composition12 = FORBIDDEN.to_vec().into();
                t.expect(build(&c).is_err(), || Counterexample::new(c.to_string(), "inadmissible", "admissible"));
                Tally::merge(std::iter::once(t).chain(shard::map_sizes(max_n, jobs, forbidden_block_at)))
            }
            StructureCheck::AdmissibleCount => Tally::merge(shard::map_sizes(max_n, jobs, admissible_count_at)),
        }
    }
}

const FORBIDDEN: [Part12; 4] = [Part12::Two, Part12::Two, Part12::One, Part12::Two];

/// Runs one structural fact on `|λ| ≤ max_n` (compositions summing to at most `max_n`).
pub fn verify_structure_part(part: StructureCheck, max_n: u32, jobs: usize) -> VerificationReport {
    timed(part.name(), max_n, || part.tally(max_n, jobs))
}

/// All structural facts on one range; the first failing part supplies the
/// counterexample.
pub fn verify_structure(max_n: u32, jobs: usize) -> VerificationReport {
    timed("structure", max_n, || Tally::merge(StructureCheck::ALL.into_iter().map(|part| part.tally(max_n, jobs))))
}

fn f_bijection_at(n: u32) -> Tally {
    let mut tally = Tally::default();
    for lam in partitions_of(n) {
        let (lp, ldp) = split_f_inv(&lam);
        let obj = || format!("f^-1({lam})");
        tally.expect(lp.in_lambda_prime(), || Counterexample::new(obj(), "first factor in Λ′", &lp));
        tally.expect(ldp.in_lambda_double_prime(), || Counterexample::new(obj(), "second factor in Λ″", &ldp));
        let alt = split_f_inv_ordered(&lam, ExtractionOrder::SmallestFirst);
        tally.expect(alt == (lp.clone(), ldp.clone()), || {
            Counterexample::new(obj(), format!("{lp} x {ldp}"), format!("{} x {}", alt.0, alt.1))
        });
        match insert_f(&lp, &ldp) {
            Ok(back) => tally.expect(back == lam, || Counterexample::new(format!("f(f^-1({lam}))"), &lam, &back)),
            Err(e) => tally.expect(false, || Counterexample::new(format!("f(f^-1({lam}))"), &lam, e)),
        }
        for kind in WeightKind::ALL {
            let (w, a, b) = (lam.weight(kind), lp.weight(kind), ldp.weight(kind));
            tally.expect(w == a + b, || {
                Counterexample::new(format!("{kind}({lam}) vs {kind}({lp}) + {kind}({ldp})"), a + b, w)
            });
        }
    }
    // Other direction: every pair in Λ′ × Λ″ of total size n survives f then f⁻¹.
    let mut pairs = 0u64;
    for a_size in 0..=n {
        let ldps: Vec<Partition> = partitions_where(n - a_size, Partition::in_lambda_double_prime).collect();
        for lp in partitions_where(a_size, Partition::in_lambda_prime) {
            for ldp in &ldps {
                pairs += 1;
                let back = insert_f(&lp, ldp).map(|lam| split_f_inv(&lam));
                tally.expect(back.as_ref() == Ok(&(lp.clone(), ldp.clone())), || {
                    Counterexample::new(format!("f^-1(f({lp}, {ldp}))"), format!("{lp} x {ldp}"), format!("{back:?}"))
                });
            }
        }
    }
    let p_n = partitions_of(n).count() as u64;
    tally.expect(pairs == p_n, || Counterexample::new(format!("#Λ′×Λ″ pairs of size {n}"), p_n, pairs));
    tally
}

fn decomposition_at(n: u32) -> Tally {
    let mut tally = Tally::default();
    for lam in partitions_of(n) {
        let c = phi(&lam);
        tally.expect(c.total() == n, || Counterexample::new(format!("sum of phi({lam})"), n, c.total()));
        match build(&c) {
            Ok(back) => tally.expect(back == lam, || Counterexample::new(format!("build(phi({lam}))"), &lam, &back)),
            Err(e) => tally.expect(false, || Counterexample::new(format!("build(phi({lam}))"), &lam, e)),
        }
        for step in [dyson::DysonStep::Rho1, dyson::DysonStep::Psi2] {
            if let Ok(next) = step.apply(&lam) {
                let mut want = vec![step.part()];
                want.extend_from_slice(c.entries());
                let want = Composition12::new(want);
                let got = phi(&next);
                tally.expect(got == want, || Counterexample::new(format!("phi({step}({lam}))"), &want, &got));
            }
        }
    }
    tally
}

fn boundary_lemma_at(n: u32) -> Tally {
    let mut tally = Tally::default();
    for lam in partitions_of(n) {
        let labels = lam.boundary_sequence();
        let heights = lam.column_heights();
        let shape_ok = labels.len() as u32 == lam.num_cols() + lam.num_rows()
            && labels.windows(2).all(|w| w[0].abs_diff(w[1]) == 1);
        tally.expect(shape_ok, || {
            Counterexample::new(format!("boundary({lam})"), "±1 steps, length cols+rows", format!("{labels:?}"))
        });
        for cell in lam.cells() {
            let stat = lam.cell_stats(cell).expect("cell of lam");
            let by_arm_leg = (stat.arm + 1) % 3 == stat.leg % 3;
            let by_boundary = lam.boundary_test(&labels, &heights, cell);
            tally.expect(by_arm_leg == by_boundary, || {
                Counterexample::new(format!("cell ({},{}) of {lam}", cell.col, cell.row), by_arm_leg, by_boundary)
            });
        }
    }
    tally
}

fn stair_closure_at(n: u32) -> Tally {
    let mut tally = Tally::default();
    for lam in partitions_of(n) {
        if !is_grounded_stair(&lam) || stair_report(&lam).landing > 2 {
            continue;
        }
        match psi2(&lam) {
            Ok(next) => {
                let r = stair_report(&next);
                tally.expect(is_grounded_stair(&next) && r.landing <= 2, || {
                    Counterexample::new(
                        format!("stair(psi2({lam}))"),
                        "grounded stair-step with landing <= 2",
                        format!("{r:?}, grounded={}", is_grounded_stair(&next)),
                    )
                });
            }
            Err(e) => tally.expect(false, || Counterexample::new(format!("psi2({lam})"), "defined", e)),
        }
    }
    tally
}

/// The four families `(2ⁿ)`, `(2ⁿ,1)`, `(1,2ⁿ)`, `(2,1,2ⁿ)` for `n ≤ max_exp`,
/// ordered by total then family.
pub fn admissible_families(max_exp: u32) -> Vec<Composition12> {
    let twos = |n: u32| vec![Part12::Two; n as usize];
    let mut out = Vec::new();
    for n in 0..=max_exp {
        out.push(Composition12::new(twos(n)));
        out.push(Composition12::new([twos(n), vec![Part12::One]].concat()));
        out.push(Composition12::new([vec![Part12::One], twos(n)].concat()));
        out.push(Composition12::new([vec![Part12::Two, Part12::One], twos(n)].concat()));
    }
    out.sort_by_key(|c| c.total());
    out
}

fn families_up_to_total(max_total: u32) -> Vec<Composition12> {
    admissible_families(max_total / 2).into_iter().filter(|c| c.total() <= max_total).collect()
}

fn admissible_families_tally(family: &[Composition12]) -> Tally {
    let mut tally = Tally::default();
    for c in family {
        let res = build(c);
        tally.expect(res.is_ok(), || {
            Counterexample::new(
                c.to_string(),
                "admissible",
                res.as_ref().err().map(ToString::to_string).unwrap_or_default(),
            )
        });
    }
    tally
}

/// Admissibility of the four families with exponent up to `max_exp`.
pub fn verify_admissible_families(max_exp: u32) -> VerificationReport {
    timed("admissible-families", max_exp, || admissible_families_tally(&admissible_families(max_exp)))
}

fn forbidden_block_at(n: u32) -> Tally {
    let mut tally = Tally::default();
    for c in compositions_12(n).filter(|c| c.contains_block(&FORBIDDEN)) {
        tally.expect(build(&c).is_err(), || Counterexample::new(c.to_string(), "inadmissible", "admissible"));
    }
    tally
}

fn admissible_count_at(n: u32) -> Tally {
    let mut tally = Tally::default();
    let admissible = compositions_12(n).filter(|c| build(c).is_ok()).count() as u64;
    let p_n = partitions_of(n).count() as u64;
    tally
        .expect(admissible == p_n, || Counterexample::new(format!("#admissible compositions of {n}"), p_n, admissible));
    tally
}
