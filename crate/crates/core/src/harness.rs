//! Verification campaigns. Each campaign runs one family of claims over an
//! instance set (exhaustive where feasible, seeded samples beyond) and
//! returns an [`AuditReport`]. Instances are checked in parallel; violations
//! are sorted before the report is emitted so reports are reproducible.

use std::collections::BTreeMap;
use std::fmt;
use std::io;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::characterize::{self, CharacterizeError, ValueClass};
use crate::enumerate::{self, EnumerateError};
use crate::family::{FamilyError, FamilySpec};
use crate::formulas::{self, FormulaError};
use crate::graph::{corona, Graph, GraphError};
use crate::labeling::Problem;
use crate::reduction::{self, ReductionError};
use crate::solver::{self, Invariant, SolverError};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid campaign parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Characterize(#[from] CharacterizeError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cannot write report: {0}")]
    Io(#[from] io::Error),
    #[error("cannot write summary: {0}")]
    Csv(#[from] csv::Error),
}

fn params_error(reason: impl Into<String>) -> HarnessError {
    HarnessError::Params(reason.into())
}

/// An exact fraction `num / den` with `den > 0`, in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Rational {
    pub num: i64,
    pub den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn integer(value: i64) -> Self {
        Rational { num: value, den: 1 }
    }

    /// Numeric comparison.
    pub fn cmp_value(&self, other: &Rational) -> std::cmp::Ordering {
        (i128::from(self.num) * i128::from(other.den))
            .cmp(&(i128::from(other.num) * i128::from(self.den)))
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl From<u32> for Rational {
    fn from(value: u32) -> Self {
        Rational::integer(i64::from(value))
    }
}

/// A failed claim on one instance: the claim asserts `lhs` relates to
/// `rhs` as its text says, and it did not.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub claim: String,
    /// The instance in edge-list text form.
    pub graph: String,
    pub lhs: Rational,
    pub rhs: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Violation {
    pub fn new(claim: &str, g: &Graph, lhs: impl Into<Rational>, rhs: impl Into<Rational>) -> Self {
        Violation {
            claim: claim.to_string(),
            graph: g.to_edge_list(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub campaign: String,
    pub params: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub instances_checked: u64,
    pub violations: Vec<Violation>,
    /// Failures on instances outside a claim's stated hypothesis.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub informational: Vec<Violation>,
    /// Named counters (class sizes, equality cases, ...).
    pub tallies: BTreeMap<String, u64>,
    pub runtime_ms: u64,
    pub status: Status,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// One row per report: campaign, instances, violations, runtime, status.
pub fn write_csv_summary<W: io::Write>(
    reports: &[AuditReport],
    out: W,
) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "campaign",
        "instances",
        "violations",
        "runtime_ms",
        "status",
    ])?;
    for r in reports {
        w.write_record([
            r.campaign.clone(),
            r.instances_checked.to_string(),
            r.violations.len().to_string(),
            r.runtime_ms.to_string(),
            r.status.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// What one instance contributed.
#[derive(Debug, Default)]
struct Outcome {
    violations: Vec<Violation>,
    informational: Vec<Violation>,
    tallies: Vec<String>,
}

impl Outcome {
    fn tally(&mut self, key: impl Into<String>) {
        self.tallies.push(key.into());
    }

    fn check(&mut self, ok: bool, violation: impl FnOnce() -> Violation) {
        if !ok {
            self.violations.push(violation());
        }
    }
}

struct Campaign {
    name: &'static str,
    params: BTreeMap<String, Value>,
    seed: Option<u64>,
    started: Instant,
}

impl Campaign {
    fn new(name: &'static str, params: Value, seed: Option<u64>) -> Self {
        let params = match params {
            Value::Object(map) => map.into_iter().collect(),
            _ => BTreeMap::new(),
        };
        Campaign {
            name,
            params,
            seed,
            started: Instant::now(),
        }
    }

    /// Checks every instance in parallel and folds the outcomes.
    fn run<T, F>(self, instances: &[T], check: F) -> Result<AuditReport, HarnessError>
    where
        T: Sync,
        F: Fn(&T) -> Result<Outcome, HarnessError> + Sync,
    {
        let outcomes: Vec<Outcome> = instances.par_iter().map(&check).collect::<Result<_, _>>()?;
        Ok(self.finish(instances.len() as u64, outcomes))
    }

    fn finish(self, instances_checked: u64, outcomes: Vec<Outcome>) -> AuditReport {
        let mut violations = Vec::new();
        let mut informational = Vec::new();
        let mut tallies = BTreeMap::new();
        for o in outcomes {
            violations.extend(o.violations);
            informational.extend(o.informational);
            for key in o.tallies {
                *tallies.entry(key).or_insert(0) += 1;
            }
        }
        violations.sort();
        informational.sort();
        let status = if violations.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        AuditReport {
            campaign: self.name.to_string(),
            params: self.params,
            seed: self.seed,
            instances_checked,
            violations,
            informational,
            tallies,
            runtime_ms: self.started.elapsed().as_millis() as u64,
            status,
        }
    }
}

fn spec(s: &str) -> Graph {
    s.parse::<FamilySpec>()
        .and_then(|f| f.build())
        .unwrap_or_else(|e| panic!("built-in instance {s}: {e}"))
}

fn rng_for(seed: u64, n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32))
}

/// Exhaustive sizes plus seeded samples of connected graphs beyond them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sweep {
    /// Largest order checked.
    pub max_n: usize,
    /// Orders up to this one are enumerated exhaustively.
    pub exhaustive_max: usize,
    /// Samples drawn at each order above `exhaustive_max`.
    pub samples: usize,
    pub seed: u64,
}

impl Sweep {
    fn params(&self) -> Value {
        json!({
            "max_n": self.max_n,
            "exhaustive_max": self.exhaustive_max,
            "samples_per_order": self.samples,
        })
    }

    fn sampled_orders(&self) -> std::ops::RangeInclusive<usize> {
        self.exhaustive_max.min(self.max_n) + 1..=self.max_n
    }
}

/// Connected labeled graphs: exhaustive for `min..=exhaustive_max`, then
/// `samples` seeded draws per larger order, filtered by `accept`.
fn connected_instances(
    sweep: &Sweep,
    min: usize,
    accept: impl Fn(&Graph) -> bool + Copy,
) -> Result<Vec<Graph>, HarnessError> {
    let mut out = Vec::new();
    for n in min..=sweep.exhaustive_max.min(sweep.max_n) {
        out.extend(enumerate::connected_graphs(n)?.filter(|g| accept(g)));
    }
    for n in sweep.sampled_orders() {
        let mut rng = rng_for(sweep.seed, n);
        for _ in 0..sweep.samples {
            out.push(enumerate::random_connected_graph(n, &mut rng, accept));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Closed forms

/// Solver against the closed forms on paths, cycles, complete, complete
/// bipartite and complete multipartite graphs.
pub fn audit_formulas() -> Result<AuditReport, HarnessError> {
    let campaign = Campaign::new(
        "formulas",
        json!({"path": "1..=11", "cycle": "3..=11", "complete": "1..=9",
               "bipartite_total": 11, "multipartite_total": 10}),
        None,
    );
    let mut instances: Vec<(FamilySpec, u32)> = Vec::new();
    for n in 1..=11 {
        instances.push((FamilySpec::Path(n), formulas::formula_path(n)?));
    }
    for n in 3..=11 {
        instances.push((FamilySpec::Cycle(n), formulas::formula_cycle(n)?));
    }
    for n in 1..=9 {
        instances.push((FamilySpec::Complete(n), formulas::formula_complete(n)?));
    }
    for m in 1..=10 {
        for n in m..=11 - m {
            instances.push((
                FamilySpec::CompleteBipartite(m, n),
                formulas::formula_complete_bipartite(m, n)?,
            ));
        }
    }
    for parts in sorted_partitions(10, 3) {
        let value = formulas::formula_complete_multipartite(&parts)?;
        instances.push((FamilySpec::CompleteMultipartite(parts), value));
    }
    campaign.run(&instances, |(family, expected)| {
        let g = family.build()?;
        let value = solver::solve_oidrd(&g)?.value;
        let mut o = Outcome::default();
        o.tally(family.tag());
        o.check(value == *expected, || {
            Violation::new(&format!("closed form for {family}"), &g, value, *expected)
        });
        Ok(o)
    })
}

/// Nondecreasing part lists with at least `min_parts` parts and total at most `max_total`.
fn sorted_partitions(max_total: usize, min_parts: usize) -> Vec<Vec<usize>> {
    fn extend(current: &mut Vec<usize>, left: usize, min_parts: usize, out: &mut Vec<Vec<usize>>) {
        if current.len() >= min_parts {
            out.push(current.clone());
        }
        let from = current.last().copied().unwrap_or(1);
        for part in from..=left {
            current.push(part);
            extend(current, left - part, min_parts, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_total, min_parts, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Characterization of values 3, 4, 5

/// Structural class against solved class on connected graphs of order >= 3.
/// Every reported recognition is also rebuilt and compared with the input.
pub fn audit_characterization(sweep: &Sweep) -> Result<AuditReport, HarnessError> {
    if sweep.max_n < 3 || sweep.exhaustive_max > 6 {
        return Err(params_error(
            "characterization needs max_n >= 3 and exhaustive_max <= 6",
        ));
    }
    let campaign = Campaign::new("characterization", sweep.params(), Some(sweep.seed));
    let instances = connected_instances(sweep, 3, |_| true)?;
    campaign.run(&instances, |g| {
        let value = solver::solve_oidrd(g)?.value;
        let solved = ValueClass::of_value(value);
        let mut o = Outcome::default();
        o.tally(format!("n={}/{}", g.n(), solved));
        match characterize::classify(g) {
            Ok(result) => {
                o.check(result.value_class == solved, || {
                    Violation::new("structural class matches solved value", g, value, value)
                        .with_detail(format!(
                            "classified {} but solved {}",
                            result.value_class, solved
                        ))
                });
                if let Some(r) = result.recognition() {
                    o.check(r.verify(g), || {
                        Violation::new("recognized structure rebuilds the graph", g, value, value)
                            .with_detail(format!("{r:?}"))
                    });
                }
            }
            Err(CharacterizeError::Ambiguous(families)) => o.violations.push(
                Violation::new("value classes are exclusive", g, value, value)
                    .with_detail(families),
            ),
            Err(e) => return Err(e.into()),
        }
        Ok(o)
    })
}

// ---------------------------------------------------------------------------
// Reduction

/// The gadget identity γ_oidR(G′) = 4n − α(G), together with the explicit
/// witness from a maximum independent set and the degree claim. Exhaustive
/// orders include disconnected graphs; sampled orders draw connected graphs
/// of maximum degree at most 3.
pub fn audit_reduction(sweep: &Sweep) -> Result<AuditReport, HarnessError> {
    let campaign = Campaign::new("reduction", sweep.params(), Some(sweep.seed));
    let mut instances = Vec::new();
    for n in 1..=sweep.exhaustive_max.min(sweep.max_n) {
        instances.extend(enumerate::all_graphs(n)?);
    }
    for n in sweep.sampled_orders() {
        let mut rng = rng_for(sweep.seed, n);
        for _ in 0..sweep.samples {
            instances.push(enumerate::random_connected_graph(n, &mut rng, |g| {
                g.max_degree() <= 3
            }));
        }
    }
    campaign.run(&instances, |g| {
        let report = reduction::verify_identity(g)?;
        let mut o = Outcome::default();
        let in_class = g.max_degree() <= 3;
        o.tally(if in_class {
            "max_degree<=3"
        } else {
            "max_degree>3"
        });
        if !report.equal {
            let v = Violation::new("gadget value equals 4n - alpha", g, report.lhs, report.rhs);
            if in_class {
                o.violations.push(v);
            } else {
                o.informational.push(v);
            }
        }
        let alpha = solver::solve_alpha(g)?;
        let set: Vec<usize> = (0..g.n()).filter(|&v| alpha.witness.get(v) == 1).collect();
        let witness = reduction::witness_from_independent_set(g, &set)?;
        o.check(witness.weight() == report.lhs, || {
            Violation::new(
                "independent-set witness is optimal",
                g,
                witness.weight(),
                report.lhs,
            )
        });
        if in_class {
            let gadget = reduction::build_gadget(g)?.gadget;
            o.check(gadget.max_degree() <= 4, || {
                Violation::new(
                    "gadget maximum degree at most 4",
                    g,
                    gadget.max_degree() as u32,
                    4,
                )
            });
        }
        Ok(o)
    })
}

// ---------------------------------------------------------------------------
// γ_oidR against γ_oiR

/// Over all graphs up to `max_n` (connected or not): γ_oiR < γ_oidR ≤ 2γ_oiR,
/// equality exactly on edgeless graphs, strict upper inequality on
/// connected graphs of order >= 2, and γ_oidR ≤ 2γ_oiR − |V2(f)| for every
/// optimal OIRD labeling f.
pub fn audit_oir_relations(max_n: usize) -> Result<AuditReport, HarnessError> {
    if max_n > crate::limits::cap(crate::limits::BRUTE_FORCE_MAX_N).min(8) {
        return Err(params_error(
            "oir relations enumerate all graphs; max_n must be <= 8",
        ));
    }
    let campaign = Campaign::new("oir_relations", json!({"max_n": max_n}), None);
    let mut instances = Vec::new();
    for n in 1..=max_n {
        instances.extend(enumerate::all_graphs(n)?);
    }
    campaign.run(&instances, |g| {
        let oidr = solver::solve_oidrd(g)?.value;
        let oir = solver::solve_gamma_oir(g)?.value;
        let mut o = Outcome::default();
        o.check(oir < oidr, || {
            Violation::new("gamma_oir < gamma_oidr", g, oir, oidr)
        });
        o.check(oidr <= 2 * oir, || {
            Violation::new("gamma_oidr <= 2 gamma_oir", g, oidr, 2 * oir)
        });
        o.check((oidr == 2 * oir) == g.is_edgeless(), || {
            Violation::new("gamma_oidr = 2 gamma_oir iff edgeless", g, oidr, 2 * oir)
        });
        if g.is_connected() && g.n() >= 2 {
            o.check(oidr < 2 * oir, || {
                Violation::new("gamma_oidr < 2 gamma_oir (connected)", g, oidr, 2 * oir)
            });
        }
        if g.is_edgeless() {
            o.tally("edgeless");
        }
        for f in solver::enumerate_optimal(g, Problem::Oird)? {
            let v2 = f.classes().v2.len() as u32;
            let bound = 2 * oir - v2;
            o.check(oidr <= bound, || {
                Violation::new("gamma_oidr <= 2 gamma_oir - |V2|", g, oidr, bound)
                    .with_detail(format!("f = {f}"))
            });
            o.tally("optimal_oird_labelings");
        }
        Ok(o)
    })
}

// ---------------------------------------------------------------------------
// General bounds

/// `max{γ, 2α/Δ} + β` as an exact fraction.
pub fn lower_bound(b: &solver::InvariantBundle, max_degree: usize) -> Rational {
    let d = max_degree as i64;
    let top = (i64::from(b.gamma) * d).max(2 * i64::from(b.alpha));
    Rational::new(top + i64::from(b.beta) * d, d)
}

/// `max{γ, 2α/Δ} + β ≤ γ_oidR ≤ 3β` on every connected graph of order
/// 2..=max_n, plus the sharpness instances: stars for the lower bound and
/// G ⊙ K̄2 for G in {P2, P3, C3} for the upper bound.
pub fn audit_bounds(max_n: usize) -> Result<AuditReport, HarnessError> {
    if !(2..=crate::limits::cap(crate::limits::GRAPH_ENUM_MAX_N)).contains(&max_n) {
        return Err(params_error("bounds need 2 <= max_n <= 7"));
    }
    let campaign = Campaign::new("bounds", json!({"max_n": max_n}), None);
    #[derive(Clone, Copy)]
    enum Role {
        Sweep,
        LowerSharp,
        UpperSharp,
    }
    let mut instances: Vec<(Graph, Role)> = Vec::new();
    for n in 2..=max_n {
        instances.extend(enumerate::connected_graphs(n)?.map(|g| (g, Role::Sweep)));
    }
    for k in 1..=6 {
        instances.push((spec(&format!("star:{k}")), Role::LowerSharp));
    }
    for base in ["path:2", "path:3", "cycle:3"] {
        instances.push((spec(&format!("corona({base},empty:2)")), Role::UpperSharp));
    }
    campaign.run(&instances, |(g, role)| {
        let b = solver::bundle(g)?;
        let lower = lower_bound(&b, g.max_degree());
        let value = Rational::from(b.gamma_oidr);
        let upper = Rational::from(3 * b.beta);
        let mut o = Outcome::default();
        o.check(lower.cmp_value(&value).is_le(), || {
            Violation::new(
                "max{gamma, 2 alpha/Delta} + beta <= gamma_oidr",
                g,
                lower,
                value,
            )
        });
        o.check(value.cmp_value(&upper).is_le(), || {
            Violation::new("gamma_oidr <= 3 beta", g, value, upper)
        });
        let lower_tight = lower.cmp_value(&value).is_eq();
        let upper_tight = value == upper;
        if lower_tight {
            o.tally("lower_bound_attained");
        }
        if upper_tight {
            o.tally("upper_bound_attained");
        }
        match role {
            Role::Sweep => {}
            Role::LowerSharp => {
                let star = Rational::new(
                    2 * i64::from(b.alpha) + i64::from(b.beta) * g.max_degree() as i64,
                    g.max_degree() as i64,
                );
                o.check(star == value, || {
                    Violation::new("star attains (2/Delta) alpha + beta", g, star, value)
                });
            }
            Role::UpperSharp => o.check(upper_tight, || {
                Violation::new(
                    "corona with two isolated vertices attains 3 beta",
                    g,
                    value,
                    upper,
                )
            }),
        }
        Ok(o)
    })
}

/// The lower-bound sharpness construction: K_{2,m_i} blocks whose extra
/// vertices z_i form a cycle. Checks γ_oidR = 4t + ⌈t/2⌉, β = 3t − ⌊t/2⌋,
/// γ = 2t and γ + β = γ_oidR.
pub fn audit_sharpness_h(ms: &[usize]) -> Result<AuditReport, HarnessError> {
    let t = ms.len() as u32;
    if t < 3 {
        return Err(params_error("the z-cycle needs t >= 3 blocks"));
    }
    let campaign = Campaign::new("sharpness_h", json!({"t": t, "m": ms}), None);
    let g = FamilySpec::SharpnessH(ms.to_vec()).build()?;
    let instances = [g];
    campaign.run(&instances, |g| {
        let b = solver::bundle(g)?;
        let mut o = Outcome::default();
        let expected_value = 4 * t + t.div_ceil(2);
        let expected_beta = 3 * t - t / 2;
        o.check(b.gamma_oidr == expected_value, || {
            Violation::new(
                "gamma_oidr = 4t + ceil(t/2)",
                g,
                b.gamma_oidr,
                expected_value,
            )
        });
        o.check(b.beta == expected_beta, || {
            Violation::new("beta = 3t - floor(t/2)", g, b.beta, expected_beta)
        });
        o.check(b.gamma == 2 * t, || {
            Violation::new("gamma = 2t", g, b.gamma, 2 * t)
        });
        o.check(b.gamma + b.beta == b.gamma_oidr, || {
            Violation::new(
                "gamma + beta = gamma_oidr",
                g,
                b.gamma + b.beta,
                b.gamma_oidr,
            )
        });
        o.tally(format!("gamma_oidr={}", b.gamma_oidr));
        o.tally(format!("beta={}", b.beta));
        o.tally(format!("gamma={}", b.gamma));
        Ok(o)
    })
}

// ---------------------------------------------------------------------------
// Trees

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeSweep {
    pub max_n: usize,
    /// Orders up to this one enumerate all labeled trees.
    pub exhaustive_max: usize,
    pub samples: usize,
    pub seed: u64,
}

/// 2β(T) + 1 ≤ γ_oidR(T) on labeled trees, equality on even paths, and
/// the double-star values.
pub fn audit_trees(sweep: &TreeSweep) -> Result<AuditReport, HarnessError> {
    if sweep.max_n > crate::limits::cap(crate::limits::TREE_ENUM_MAX_N) {
        return Err(params_error(format!(
            "tree sweep is capped at n = {}",
            crate::limits::TREE_ENUM_MAX_N
        )));
    }
    let campaign = Campaign::new(
        "trees",
        json!({"max_n": sweep.max_n, "exhaustive_max": sweep.exhaustive_max, "samples_per_order": sweep.samples}),
        Some(sweep.seed),
    );
    #[derive(Clone, Copy)]
    enum Expect {
        Bound,
        Equal,
        Value(u32),
    }
    let mut instances: Vec<(Graph, Expect)> = Vec::new();
    for n in 1..=sweep.exhaustive_max.min(sweep.max_n) {
        instances.extend(enumerate::trees(n)?.map(|t| (t, Expect::Bound)));
    }
    for n in sweep.exhaustive_max.min(sweep.max_n) + 1..=sweep.max_n {
        let mut rng = rng_for(sweep.seed, n);
        instances.extend(
            (0..sweep.samples).map(|_| (enumerate::random_tree(n, &mut rng), Expect::Bound)),
        );
    }
    for n in (2..=10).step_by(2) {
        instances.push((spec(&format!("path:{n}")), Expect::Equal));
    }
    for b in 1..=4 {
        instances.push((spec(&format!("dstar:1,{b}")), Expect::Value(5)));
    }
    for (a, b) in [(2, 2), (2, 3), (3, 3)] {
        instances.push((spec(&format!("dstar:{a},{b}")), Expect::Value(6)));
    }
    campaign.run(&instances, |(tree, expect)| {
        let value = solver::solve_oidrd(tree)?.value;
        let beta = solver::solve_beta(tree)?.value;
        let bound = 2 * beta + 1;
        let mut o = Outcome::default();
        o.check(bound <= value, || {
            Violation::new("2 beta + 1 <= gamma_oidr", tree, bound, value)
        });
        if bound == value {
            o.tally(format!("n={}/equal", tree.n()));
        } else {
            o.tally(format!("n={}/strict", tree.n()));
        }
        match *expect {
            Expect::Bound => {}
            Expect::Equal => o.check(bound == value, || {
                Violation::new("even path attains 2 beta + 1", tree, bound, value)
            }),
            Expect::Value(v) => o.check(value == v, || {
                Violation::new("double star value", tree, value, v)
                    .with_detail(format!("2 beta + 1 = {bound}"))
            }),
        }
        Ok(o)
    })
}

// ---------------------------------------------------------------------------
// Fact: V1 can be forced

/// What the V1 audit asserts about a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct V1Claim {
    /// Every optimal labeling uses the label 1.
    pub v1_forced: bool,
    /// Expected γ_oidR, if known.
    pub value: Option<u32>,
}

/// Enumerates every optimal labeling of `g` and counts those with and
/// without a vertex labeled 1. The solver value is cross-checked.
pub fn audit_fact_v1(g: &Graph, claim: &V1Claim) -> Result<AuditReport, HarnessError> {
    let campaign = Campaign::new(
        "fact_v1",
        json!({"graph": g.to_edge_list(), "v1_forced": claim.v1_forced, "value": claim.value}),
        None,
    );
    let optima = solver::enumerate_optimal_oidrd(g)?;
    let value = optima[0].weight();
    let mut o = Outcome::default();
    let solved = solver::solve_oidrd(g)?.value;
    o.check(solved == value, || {
        Violation::new("solver value equals enumeration", g, solved, value)
    });
    if let Some(expected) = claim.value {
        o.check(value == expected, || {
            Violation::new("gamma_oidr", g, value, expected)
        });
    }
    for f in &optima {
        let has_v1 = !f.classes().v1.is_empty();
        o.tally(if has_v1 {
            "optima_with_v1"
        } else {
            "optima_without_v1"
        });
        if claim.v1_forced && !has_v1 {
            o.violations.push(
                Violation::new("every optimum has V1 nonempty", g, 0, 1)
                    .with_detail(format!("f = {f}")),
            );
        }
    }
    if optima.iter().all(|f| !f.classes().v1.is_empty()) {
        o.tally("every_optimum_uses_1");
    }
    o.tally(format!("gamma_oidr={value}"));
    Ok(campaign.finish(optima.len() as u64, vec![o]))
}

/// The exemplar: K_{5,5}, where γ_oidR = 9 and every optimum uses a 1.
pub fn audit_fact_v1_exemplar() -> Result<AuditReport, HarnessError> {
    let claim = V1Claim {
        v1_forced: true,
        value: Some(formulas::formula_complete_bipartite(5, 5)?),
    };
    audit_fact_v1(&spec("kbipartite:5,5"), &claim)
}

// ---------------------------------------------------------------------------
// Corona

/// The corona minimum against the solver on G ⊙ H for all connected G of
/// order <= `max_g` and all H of order <= `max_h` with Δ(H) ≤ n(H) − 2.
pub fn audit_corona(max_g: usize, max_h: usize) -> Result<AuditReport, HarnessError> {
    let biggest = max_g * (1 + max_h);
    if biggest > crate::limits::cap(crate::limits::SOLVER_MAX_N) {
        return Err(params_error(format!(
            "coronas up to {biggest} vertices exceed the solver cap"
        )));
    }
    let campaign = Campaign::new("corona", json!({"max_g": max_g, "max_h": max_h}), None);
    let mut bases = Vec::new();
    for n in 1..=max_g {
        bases.extend(enumerate::connected_graphs(n)?);
    }
    let mut fibers = Vec::new();
    for n in 2..=max_h {
        fibers.extend(enumerate::all_graphs(n)?.filter(|h| h.max_degree() + 2 <= h.n()));
    }
    let instances: Vec<(Graph, Graph)> = bases
        .iter()
        .flat_map(|g| fibers.iter().map(move |h| (g.clone(), h.clone())))
        .collect();
    campaign.run(&instances, |(g, h)| {
        let formula = formulas::corona_formula(g, h)?.value;
        let product = corona(g, h)?;
        let solved = solver::solve_oidrd(&product)?.value;
        let mut o = Outcome::default();
        o.tally(format!("n(H)={}", h.n()));
        o.check(formula == solved, || {
            Violation::new(
                "corona minimum equals gamma_oidr of the corona",
                &product,
                formula,
                solved,
            )
            .with_detail(format!("G:\n{}H:\n{}", g.to_edge_list(), h.to_edge_list()))
        });
        Ok(o)
    })
}

// ---------------------------------------------------------------------------
// Oracle

/// Branch and bound against brute-force enumeration, value and canonical
/// witness, for all seven parameters.
pub fn audit_oracle(sweep: &Sweep) -> Result<AuditReport, HarnessError> {
    let campaign = Campaign::new("oracle", sweep.params(), Some(sweep.seed));
    let instances = connected_instances(sweep, 1, |_| true)?;
    campaign.run(&instances, |g| {
        let mut o = Outcome::default();
        for inv in Invariant::ALL {
            let fast = inv.solve(g)?;
            let slow = inv.brute_force(g)?;
            o.check(fast.value == slow.value, || {
                Violation::new(
                    &format!("{} solver equals brute force", inv.name()),
                    g,
                    fast.value,
                    slow.value,
                )
            });
            o.check(fast.witness == slow.witness, || {
                Violation::new(
                    &format!("{} canonical witness", inv.name()),
                    g,
                    fast.value,
                    slow.value,
                )
                .with_detail(format!(
                    "solver {} brute force {}",
                    fast.witness, slow.witness
                ))
            });
        }
        o.tally(format!("n={}", g.n()));
        Ok(o)
    })
}

// ---------------------------------------------------------------------------

/// Parameters for running every campaign at one scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditPlan {
    pub max_n: usize,
    pub seed: u64,
}

pub const CAMPAIGNS: [&str; 10] = [
    "formulas",
    "characterization",
    "reduction",
    "oir_relations",
    "bounds",
    "sharpness_h",
    "trees",
    "fact_v1",
    "corona",
    "oracle",
];

impl AuditPlan {
    /// Runs one campaign with sizes clamped to what it supports.
    pub fn run(&self, campaign: &str) -> Result<AuditReport, HarnessError> {
        let n = self.max_n;
        let seed = self.seed;
        match campaign {
            "formulas" => audit_formulas(),
            "characterization" => audit_characterization(&Sweep {
                max_n: n.clamp(3, 7),
                exhaustive_max: n.min(6),
                samples: 300,
                seed,
            }),
            "reduction" => audit_reduction(&Sweep {
                max_n: n.clamp(1, 5),
                exhaustive_max: n.min(4),
                samples: 50,
                seed,
            }),
            "oir_relations" => audit_oir_relations(n.clamp(1, 5)),
            "bounds" => audit_bounds(n.clamp(2, 6)),
            "sharpness_h" => audit_sharpness_h(&[2, 2, 2]),
            "trees" => audit_trees(&TreeSweep {
                max_n: n.clamp(1, 10),
                exhaustive_max: n.min(8),
                samples: 10_000,
                seed,
            }),
            "fact_v1" => audit_fact_v1_exemplar(),
            "corona" => audit_corona(n.clamp(1, 3), n.clamp(2, 4)),
            "oracle" => audit_oracle(&Sweep {
                max_n: n.clamp(1, 8),
                exhaustive_max: n.min(6),
                samples: 200,
                seed,
            }),
            other => Err(params_error(format!(
                "unknown campaign {other:?}; expected one of {}",
                CAMPAIGNS.join(", ")
            ))),
        }
    }

    pub fn run_all(&self) -> Result<Vec<AuditReport>, HarnessError> {
        CAMPAIGNS.iter().map(|c| self.run(c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let r = Rational::new(6, -4);
        assert_eq!((r.num, r.den), (-3, 2));
        assert!(Rational::new(7, 2).cmp_value(&Rational::integer(4)).is_lt());
        assert!(Rational::new(8, 2).cmp_value(&Rational::integer(4)).is_eq());
        assert_eq!(Rational::new(8, 2).to_string(), "4");
    }

    #[test]
    fn partitions() {
        let parts = sorted_partitions(4, 3);
        assert_eq!(parts, vec![vec![1, 1, 1], vec![1, 1, 1, 1], vec![1, 1, 2]]);
    }

    #[test]
    fn star_lower_bound_is_exact() {
        let g = spec("star:5");
        let b = solver::bundle(&g).unwrap();
        assert_eq!(lower_bound(&b, 5), Rational::integer(3));
    }

    #[test]
    fn small_campaigns_pass_and_round_trip() {
        let plan = AuditPlan { max_n: 4, seed: 1 };
        for name in [
            "formulas",
            "bounds",
            "sharpness_h",
            "corona",
            "reduction",
            "oir_relations",
        ] {
            let report = plan.run(name).unwrap();
            assert!(report.passed(), "{name}: {:?}", report.violations);
            let back: AuditReport = serde_json::from_str(&report.to_json()).unwrap();
            assert_eq!(back, report);
        }
    }

    #[test]
    fn tree_counts_match_cayley() {
        let report = audit_trees(&TreeSweep {
            max_n: 6,
            exhaustive_max: 6,
            samples: 0,
            seed: 0,
        })
        .unwrap();
        let cayley: u64 = (1..=6u64)
            .map(|n| if n <= 2 { 1 } else { n.pow(n as u32 - 2) })
            .sum();
        // Plus the five even paths and seven double stars.
        assert_eq!(report.instances_checked, cayley + 12);
        assert!(report.passed());
    }

    #[test]
    fn violations_are_reported() {
        // A wrong expected value must surface as a failure.
        let claim = V1Claim {
            v1_forced: true,
            value: Some(4),
        };
        let report = audit_fact_v1(&spec("path:3"), &claim).unwrap();
        assert_eq!(report.status, Status::Fail);
        assert!(report.violations.iter().any(|v| v.claim == "gamma_oidr"));
        assert!(report
            .violations
            .iter()
            .any(|v| v.claim == "every optimum has V1 nonempty"));
    }

    #[test]
    fn optimum_without_ones_on_p3() {
        let claim = V1Claim {
            v1_forced: false,
            value: None,
        };
        let report = audit_fact_v1(&spec("path:3"), &claim).unwrap();
        assert!(report.passed());
        assert!(report.tallies["optima_without_v1"] >= 1);
        assert!(!report.tallies.contains_key("every_optimum_uses_1"));
        let optima = solver::enumerate_optimal_oidrd(&spec("path:3")).unwrap();
        assert!(optima.contains(&"0,3,0".parse().unwrap()));
    }

    #[test]
    fn characterization_tallies_match_brute_force() {
        let report = audit_characterization(&Sweep {
            max_n: 4,
            exhaustive_max: 4,
            samples: 0,
            seed: 0,
        })
        .unwrap();
        assert!(report.passed());
        let value_four = enumerate::connected_graphs(4)
            .unwrap()
            .filter(|g| solver::brute_force_oidrd(g).unwrap().value == 4)
            .count() as u64;
        assert_eq!(report.tallies["n=4/FOUR"], value_four);

        let c5 = spec("cycle:5");
        assert_eq!(
            characterize::classify(&c5).unwrap().value_class,
            ValueClass::Other
        );
        assert_eq!(solver::brute_force_oidrd(&c5).unwrap().value, 6);
    }

    #[test]
    fn csv_summary() {
        let report = audit_sharpness_h(&[2, 2, 2]).unwrap();
        let mut out = Vec::new();
        write_csv_summary(std::slice::from_ref(&report), &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(
            text.starts_with("campaign,instances,violations,runtime_ms,status\nsharpness_h,1,0,")
        );
    }
}
