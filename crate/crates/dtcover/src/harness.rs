//! End-to-end reductions: parameter calculators, query/example oracles,
//! pluggable learners, the learning-based vertex-cover decider, the
//! minimization-based reduction, and the partial-cover gap wrapper.
//!
//! Two operating modes. In *theorem mode* the size threshold is
//! `(1+delta) [ell(k+m) + 2mn]` with `ell` chosen by the parameter
//! calculators; those choices make the threshold separate covers of
//! size `k` from covers of size `(1+delta')k` asymptotically. Desk-scale
//! tests instead run *test mode*: a small caller-chosen `ell`, the
//! sharp threshold `(ell+1)(k+m)`, and an error budget below the least
//! point mass so a passing hypothesis must agree with the target on the
//! whole support. With an exact learner the test-mode decider then
//! answers Yes exactly when `VC(G) <= k`, because the coreset pins
//! `dtsize` to exactly `(ell+1)(VC+m)`.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bits::BitString;
use crate::coreset::{build_d_g, build_ell_d_g, hard_distribution, Distribution, LabeledPointSet};
use crate::dtree::{BoolFunction, DecisionTree, Mass};
use crate::error::Error;
use crate::gadget::{self, GadgetIndex};
use crate::graph::{
    min_partial_vertex_cover_exact, min_vertex_cover_exact, Alpha, Graph, VertexSet,
    EXACT_VC_MAX_N,
};
use crate::minimize;
use crate::reduction::{build_ell_isedge_tree, extract_cover_from_ell_tree};
use crate::Result;

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    InversePoly,
    ConstantError,
}

fn mass_string<S: serde::Serializer>(m: &Mass, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&m.to_string())
}

fn opt_mass_string<S: serde::Serializer>(
    m: &Option<Mass>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match m {
        Some(m) => s.serialize_some(&m.to_string()),
        None => s.serialize_none(),
    }
}

/// The constants tying a graph instance to a learning instance.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionParams {
    pub regime: Regime,
    pub n: usize,
    pub m: usize,
    pub d: usize,
    /// Vertex-cover gap the reduction is meant to decide.
    #[serde(serialize_with = "mass_string")]
    pub delta_prime: Mass,
    /// Interpolation constant in (0, 1).
    #[serde(serialize_with = "mass_string")]
    pub lambda: Mass,
    /// Learner approximation slack.
    #[serde(serialize_with = "mass_string")]
    pub delta: Mass,
    /// Allowed uncovered-edge fraction (constant-error regime only).
    pub alpha: Option<Alpha>,
    /// Amplification count.
    pub ell: usize,
    /// Error budget handed to the learner and enforced by the decider.
    #[serde(serialize_with = "mass_string")]
    pub epsilon: Mass,
    /// Sharp-threshold desk mode (see module docs).
    pub test_mode: bool,
}

impl ReductionParams {
    /// Gadget arity `N = n (ell + 1)`.
    pub fn gadget_arity(&self) -> usize {
        self.n * (self.ell + 1)
    }

    /// Target size `s` the learner is told about.
    pub fn target_size(&self, k: usize) -> usize {
        if self.test_mode {
            (self.ell + 1) * (k + self.m)
        } else {
            self.ell * (k + self.m) + 2 * self.m * self.n
        }
    }

    /// Acceptance threshold on the hypothesis size.
    pub fn size_threshold(&self, k: usize) -> Mass {
        let s = Mass::from_integer(self.target_size(k) as i64);
        if self.test_mode {
            s
        } else {
            (Mass::one() + self.delta) * s
        }
    }

    /// Re-evaluates every inequality the regime requires.
    pub fn validate(&self) -> Result<()> {
        if self.ell == 0 {
            return Err(Error::InfeasibleParams("amplification ell must be >= 1".into()));
        }
        if self.test_mode {
            return Ok(());
        }
        let one = Mass::one();
        let d = Mass::from_integer(self.d as i64);
        let n = Mass::from_integer(self.n as i64);
        let ell = Mass::from_integer(self.ell as i64);
        let check = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::InfeasibleParams(format!("{what} fails for {self:?}")))
            }
        };
        check(self.delta_prime.is_positive(), "delta' > 0")?;
        check(
            self.lambda.is_positive() && self.lambda < one,
            "lambda in (0,1)",
        )?;
        check(
            self.lambda * (one + self.delta_prime) > one,
            "lambda (1 + delta') > 1",
        )?;
        check(self.delta.is_positive(), "delta > 0")?;
        check(
            one + self.delta < self.lambda * (one + self.delta_prime),
            "1 + delta < lambda (1 + delta')",
        )?;
        match self.regime {
            Regime::InversePoly => {
                // 1 + (1-lambda)/d > (1+delta) + 2(1+delta) n / ell
                let lhs = one + (one - self.lambda) / d;
                let rhs = (one + self.delta) * (one + Mass::from_integer(2) * n / ell);
                check(lhs > rhs, "amplification inequality")?;
                // epsilon below the reciprocal support size
                let supp = self.m + self.m * (2 * self.ell + 2) + 1;
                check(
                    self.epsilon < Mass::new(1, supp as i64),
                    "epsilon < 1/|support|",
                )?;
            }
            Regime::ConstantError => {
                let alpha = self
                    .alpha
                    .ok_or_else(|| Error::InfeasibleParams("missing alpha".into()))?;
                let a = Mass::new(alpha.num() as i64, alpha.den() as i64);
                check(
                    a < Mass::new(1, self.d as i64 + 1),
                    "alpha < 1/(d+1)",
                )?;
                // (1-lambda)(1-alpha)/d > delta + alpha + 2(1+delta) n / ell
                let lhs = (one - self.lambda) * (one - a) / d;
                let rhs = self.delta + a + Mass::from_integer(2) * (one + self.delta) * n / ell;
                check(lhs > rhs, "amplification inequality")?;
                check(self.epsilon < a / Mass::from_integer(16), "epsilon < alpha/16")?;
            }
        }
        Ok(())
    }
}

/// Smallest integer strictly greater than `bound`.
fn next_integer_above(bound: Mass) -> i64 {
    bound.floor().to_integer() + 1
}

/// Parameters for the inverse-polynomial-error regime. `lambda` is the
/// midpoint making `lambda (1+delta') > 1`, `delta` takes half the
/// remaining headroom, `ell` is the least multiple of `n` satisfying
/// the amplification inequality, and `epsilon` is half the reciprocal
/// support size.
pub fn params_inverse_poly(n: usize, m: usize, d: usize, delta_prime: Mass) -> Result<ReductionParams> {
    if !delta_prime.is_positive() {
        return Err(Error::InfeasibleParams("delta' must be positive".into()));
    }
    let one = Mass::one();
    let lower = one / (one + delta_prime);
    let lambda = (lower + one) / Mass::from_integer(2);
    let d_mass = Mass::from_integer(d.max(1) as i64);
    let upper = (lambda * (one + delta_prime)).min(one + (one - lambda) / d_mass);
    let delta = (upper - one) / Mass::from_integer(2);
    debug_assert!(delta.is_positive());

    // smallest multiple of n with 1 + (1-lambda)/d > (1+delta)(1 + 2n/ell)
    let gap = one + (one - lambda) / d_mass - (one + delta);
    let bound = Mass::from_integer(2) * (one + delta) * Mass::from_integer(n as i64) / gap;
    let t = next_integer_above(bound / Mass::from_integer(n.max(1) as i64)).max(1);
    let ell = n.max(1) * t as usize;

    let supp = m + m * (2 * ell + 2) + 1;
    let epsilon = Mass::new(1, 2 * supp as i64);
    let params = ReductionParams {
        regime: Regime::InversePoly,
        n,
        m,
        d,
        delta_prime,
        lambda,
        delta,
        alpha: None,
        ell,
        epsilon,
        test_mode: false,
    };
    params.validate()?;
    Ok(params)
}

/// Parameters for the constant-error regime; requires
/// `alpha < 1/(d+1)`. `ell` is the least integer satisfying the
/// amplification inequality and `epsilon` is `alpha/32`.
pub fn params_constant_error(
    n: usize,
    m: usize,
    d: usize,
    delta_prime: Mass,
    alpha: Alpha,
) -> Result<ReductionParams> {
    if !delta_prime.is_positive() {
        return Err(Error::InfeasibleParams("delta' must be positive".into()));
    }
    let one = Mass::one();
    let a = Mass::new(alpha.num() as i64, alpha.den() as i64);
    let d_mass = Mass::from_integer(d.max(1) as i64);
    if a >= Mass::new(1, d as i64 + 1) {
        return Err(Error::InfeasibleParams(format!(
            "alpha = {a} must be below 1/(d+1)"
        )));
    }
    // lambda window: lambda (1+delta') > 1 and alpha < (1-lambda)(1-alpha)/d
    let lower = one / (one + delta_prime);
    let upper = one - a * d_mass / (one - a);
    if lower >= upper {
        return Err(Error::InfeasibleParams(format!(
            "no lambda fits: needs {lower} < lambda < {upper}"
        )));
    }
    let lambda = (lower + upper) / Mass::from_integer(2);
    let headroom = ((one - lambda) * (one - a) / d_mass - a).min(lambda * (one + delta_prime) - one);
    let delta = headroom / Mass::from_integer(2);
    debug_assert!(delta.is_positive());

    let gap = (one - lambda) * (one - a) / d_mass - delta - a;
    let bound = Mass::from_integer(2) * (one + delta) * Mass::from_integer(n as i64) / gap;
    let ell = next_integer_above(bound).max(1) as usize;

    let epsilon = a / Mass::from_integer(32);
    let params = ReductionParams {
        regime: Regime::ConstantError,
        n,
        m,
        d,
        delta_prime,
        lambda,
        delta,
        alpha: Some(alpha),
        ell,
        epsilon,
        test_mode: false,
    };
    params.validate()?;
    Ok(params)
}

/// Desk-mode parameters: caller-chosen `ell >= 1`, sharp threshold,
/// and an error budget at half the least point mass of the regime's
/// distribution (so "within budget" forces agreement on the support).
pub fn params_test_mode(g: &Graph, ell: usize, regime: Regime) -> Result<ReductionParams> {
    if ell == 0 {
        return Err(Error::InfeasibleParams("test mode needs ell >= 1".into()));
    }
    let dist = decider_distribution(g, ell, regime)?;
    let epsilon = dist.min_mass() / Mass::from_integer(2);
    Ok(ReductionParams {
        regime,
        n: g.n(),
        m: g.m(),
        d: g.max_degree(),
        delta_prime: Mass::one(),
        lambda: Mass::new(1, 2),
        delta: Mass::zero(),
        alpha: None,
        ell,
        epsilon,
        test_mode: true,
    })
}

/// The distribution the decider runs against: uniform over the coreset
/// in the inverse-polynomial regime, the weighted coreset distribution
/// in the constant-error regime. Edgeless graphs degenerate to the
/// singleton all-zeros support in both regimes.
pub fn decider_distribution(g: &Graph, ell: usize, regime: Regime) -> Result<Distribution> {
    if g.m() == 0 {
        let set = build_ell_d_g_or_zero(g, ell)?;
        return Distribution::uniform_over(&set);
    }
    match regime {
        Regime::InversePoly => Distribution::uniform_over(&build_ell_d_g(g, ell)?),
        Regime::ConstantError => hard_distribution(g, ell),
    }
}

fn build_ell_d_g_or_zero(g: &Graph, ell: usize) -> Result<LabeledPointSet> {
    if ell == 0 {
        Ok(build_d_g(g))
    } else {
        build_ell_d_g(g, ell)
    }
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// Query access to the amplified gadget; every answer costs O(N) and is
/// counted. Safe for concurrent use.
pub struct MembershipOracle {
    g: Graph,
    ell: usize,
    queries: AtomicU64,
}

impl MembershipOracle {
    pub fn new(g: Graph, ell: usize) -> Self {
        MembershipOracle {
            g,
            ell,
            queries: AtomicU64::new(0),
        }
    }

    pub fn arity(&self) -> usize {
        GadgetIndex::for_graph(&self.g, self.ell).arity()
    }

    pub fn query(&self, x: &BitString) -> Result<bool> {
        self.queries.fetch_add(1, Ordering::Relaxed);
        gadget::ell_isedge_eval(&self.g, self.ell, x)
    }

    pub fn queries(&self) -> u64 {
        self.queries.load(Ordering::Relaxed)
    }
}

/// Labeled random examples drawn exactly according to a distribution's
/// masses, deterministic under a fixed seed.
pub struct ExampleOracle {
    dist: Distribution,
    cumulative: Vec<u64>,
    denom: u64,
    rng: Mutex<ChaCha8Rng>,
    samples: AtomicU64,
}

impl ExampleOracle {
    pub fn new(dist: Distribution, seed: u64) -> Result<Self> {
        let mut denom: i64 = 1;
        for p in dist.points() {
            let pd = *p.mass.denom();
            denom = (denom / gcd(denom, pd)).checked_mul(pd).ok_or_else(|| {
                Error::InfeasibleParams("mass denominators overflow".into())
            })?;
        }
        let mut cumulative = Vec::with_capacity(dist.support_size());
        let mut acc = 0u64;
        for p in dist.points() {
            acc += (p.mass.numer() * (denom / p.mass.denom())) as u64;
            cumulative.push(acc);
        }
        debug_assert_eq!(acc, denom as u64);
        Ok(ExampleOracle {
            dist,
            cumulative,
            denom: denom as u64,
            rng: Mutex::new(ChaCha8Rng::seed_from_u64(seed)),
            samples: AtomicU64::new(0),
        })
    }

    pub fn sample(&self) -> (BitString, bool) {
        self.samples.fetch_add(1, Ordering::Relaxed);
        let ticket = self.rng.lock().expect("rng lock").gen_range(0..self.denom);
        let i = self.cumulative.partition_point(|&c| c <= ticket);
        let p = &self.dist.points()[i];
        (p.bits.clone(), p.label)
    }

    pub fn samples(&self) -> u64 {
        self.samples.load(Ordering::Relaxed)
    }

    pub fn distribution(&self) -> &Distribution {
        &self.dist
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// ---------------------------------------------------------------------------
// Learners
// ---------------------------------------------------------------------------

/// Everything a learner gets to see.
pub struct LearnRequest {
    pub arity: usize,
    /// Target size `s` of the promised representation.
    pub target_size: usize,
    pub error_budget: Mass,
    pub membership: Arc<MembershipOracle>,
    pub examples: Arc<ExampleOracle>,
    /// The decider hands the learner the distribution explicitly, as the
    /// reduction defines it; learners are free to ignore it.
    pub distribution: Option<Arc<Distribution>>,
    /// Cooperative cancellation: set when the time budget expires.
    pub cancel: Arc<AtomicBool>,
}

impl LearnRequest {
    fn cancelled(&self) -> bool {
        self.cancel.load(Ordering::Relaxed)
    }
}

pub trait Learner: Send + Sync {
    fn name(&self) -> &'static str;
    fn learn(&self, req: &LearnRequest) -> Result<DecisionTree>;
}

/// Fits the support exactly when the error budget forbids any mistake,
/// otherwise returns the smallest tree within budget from the exact
/// size/error front. Labels come from membership queries.
pub struct OccamIdeal;

impl Learner for OccamIdeal {
    fn name(&self) -> &'static str {
        "occam_ideal"
    }

    fn learn(&self, req: &LearnRequest) -> Result<DecisionTree> {
        let dist = req
            .distribution
            .as_ref()
            .ok_or_else(|| Error::LearnerFailed("occam_ideal needs the distribution".into()))?;
        // relabel the support through the membership oracle
        let mut points = Vec::with_capacity(dist.support_size());
        for p in dist.points() {
            points.push(crate::coreset::DistPoint {
                bits: p.bits.clone(),
                label: req.membership.query(&p.bits)?,
                role: p.role,
                mass: p.mass,
            });
        }
        let labeled = Distribution::new(dist.arity(), points)?;
        if req.cancelled() {
            return Err(Error::LearnerFailed("cancelled".into()));
        }
        if req.error_budget < labeled.min_mass() {
            // no mistake is affordable: fit the support perfectly
            let result = minimize::dtsize_over_set(&labeled.to_point_set())?;
            return Ok(result.tree);
        }
        let exact = minimize::dtsize_over_set(&labeled.to_point_set())?.size;
        let front = minimize::min_error_front(&labeled, exact)?;
        let entry = front
            .entries()
            .iter()
            .find(|e| e.error <= req.error_budget)
            .expect("the exact tree has error 0");
        Ok(entry.tree.clone())
    }
}

/// Impurity-splitting induction on drawn samples; no guarantees, used
/// to demonstrate that the decider discriminates.
pub struct GreedyTopDown {
    pub sample_count: usize,
}

impl Default for GreedyTopDown {
    fn default() -> Self {
        GreedyTopDown { sample_count: 2000 }
    }
}

impl GreedyTopDown {
    fn split_gain(points: &[(BitString, bool, u64)], var: usize) -> Option<u64> {
        // weighted count of misclassifications if each side takes its
        // majority label; smaller is better
        let mut side = [[0u64; 2]; 2];
        for (bits, label, w) in points {
            side[bits.bit(var) as usize][*label as usize] += w;
        }
        if (side[0][0] + side[0][1]) == 0 || (side[1][0] + side[1][1]) == 0 {
            return None;
        }
        Some(side[0][0].min(side[0][1]) + side[1][0].min(side[1][1]))
    }

    fn grow(points: &[(BitString, bool, u64)], arity: usize, depth: usize) -> crate::dtree::Node {
        use crate::dtree::Node;
        let w1: u64 = points.iter().filter(|p| p.1).map(|p| p.2).sum();
        let w0: u64 = points.iter().filter(|p| !p.1).map(|p| p.2).sum();
        if w0 == 0 || w1 == 0 || depth == 0 {
            return Node::leaf(w1 > w0);
        }
        let current = w0.min(w1);
        let best = (0..arity)
            .filter_map(|v| Self::split_gain(points, v).map(|g| (g, v)))
            .min();
        match best {
            Some((gain, var)) if gain < current => {
                let zero: Vec<_> = points.iter().filter(|p| !p.0.bit(var)).cloned().collect();
                let one: Vec<_> = points.iter().filter(|p| p.0.bit(var)).cloned().collect();
                Node::internal(
                    var,
                    Self::grow(&zero, arity, depth - 1),
                    Self::grow(&one, arity, depth - 1),
                )
            }
            _ => Node::leaf(w1 > w0),
        }
    }
}

impl Learner for GreedyTopDown {
    fn name(&self) -> &'static str {
        "greedy_topdown"
    }

    fn learn(&self, req: &LearnRequest) -> Result<DecisionTree> {
        let mut counts: BTreeMap<(BitString, bool), u64> = BTreeMap::new();
        for _ in 0..self.sample_count {
            if req.cancelled() {
                return Err(Error::LearnerFailed("cancelled".into()));
            }
            let (x, y) = req.examples.sample();
            *counts.entry((x, y)).or_insert(0) += 1;
        }
        let points: Vec<(BitString, bool, u64)> = counts
            .into_iter()
            .map(|((x, y), w)| (x, y, w))
            .collect();
        let root = Self::grow(&points, req.arity, req.arity.min(24));
        DecisionTree::new(req.arity, root)
    }
}

/// Always answers 0.
pub struct ConstantZero;

impl Learner for ConstantZero {
    fn name(&self) -> &'static str {
        "constant_zero"
    }

    fn learn(&self, req: &LearnRequest) -> Result<DecisionTree> {
        Ok(DecisionTree::leaf(req.arity, false))
    }
}

/// The built-in learner registry.
pub fn builtin_learners() -> BTreeMap<&'static str, Arc<dyn Learner>> {
    let mut map: BTreeMap<&'static str, Arc<dyn Learner>> = BTreeMap::new();
    map.insert("occam_ideal", Arc::new(OccamIdeal));
    map.insert("greedy_topdown", Arc::new(GreedyTopDown::default()));
    map.insert("constant_zero", Arc::new(ConstantZero));
    map
}

/// Runs a learner on its own thread under a wall-clock budget. On
/// timeout the cancel flag is raised and the learner's result, if it
/// ever arrives, is discarded.
pub fn run_learner(
    learner: Arc<dyn Learner>,
    req: LearnRequest,
    budget: Duration,
) -> Result<DecisionTree> {
    let (tx, rx) = std::sync::mpsc::channel();
    let cancel = Arc::clone(&req.cancel);
    std::thread::spawn(move || {
        let _ = tx.send(learner.learn(&req));
    });
    match rx.recv_timeout(budget) {
        Ok(result) => result,
        Err(_) => {
            cancel.store(true, Ordering::Relaxed);
            Err(Error::LearnerTimeout)
        }
    }
}

// ---------------------------------------------------------------------------
// The learning-based decider
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Yes,
    No,
}

/// Knobs that do not come from the reduction parameters.
#[derive(Debug, Clone)]
pub struct DeciderConfig {
    pub seed: u64,
    pub time_budget: Duration,
    /// Majority vote over this many independent learner runs; 1 for the
    /// deterministic built-ins.
    pub repeats: usize,
}

impl Default for DeciderConfig {
    fn default() -> Self {
        DeciderConfig {
            seed: 0,
            time_budget: Duration::from_secs(60),
            repeats: 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DeciderReport {
    pub verdict: Verdict,
    pub learner: String,
    pub params: ReductionParams,
    pub k: usize,
    pub hypothesis_size: Option<usize>,
    #[serde(serialize_with = "opt_mass_string")]
    pub hypothesis_error: Option<Mass>,
    #[serde(serialize_with = "mass_string")]
    pub size_threshold: Mass,
    #[serde(serialize_with = "mass_string")]
    pub epsilon: Mass,
    /// Set when the learner crashed or timed out (verdict is No).
    pub learner_failure: Option<String>,
    pub support_size: usize,
    pub membership_queries: u64,
    pub examples_drawn: u64,
    pub seed: u64,
    pub learner_micros: u128,
    pub distance_micros: u128,
}

/// Runs the learner against the gadget oracles and answers Yes iff the
/// hypothesis meets the size threshold and its exact distance from the
/// target is within the error budget.
pub fn dtlearn_decider(
    g: &Graph,
    k: usize,
    learner: Arc<dyn Learner>,
    params: &ReductionParams,
    config: &DeciderConfig,
) -> Result<DeciderReport> {
    params.validate()?;
    let ell = params.ell;
    let dist = Arc::new(decider_distribution(g, ell, params.regime)?);
    let membership = Arc::new(MembershipOracle::new(g.clone(), ell));
    let examples = Arc::new(ExampleOracle::new((*dist).clone(), config.seed)?);
    let target_fn = gadget::ell_isedge_function(g, ell);
    let threshold = params.size_threshold(k);

    let mut verdicts = Vec::new();
    let mut last: Option<(DecisionTree, Mass)> = None;
    let mut failure = None;
    let mut learner_micros = 0u128;
    let mut distance_micros = 0u128;
    for repeat in 0..config.repeats.max(1) {
        let req = LearnRequest {
            arity: membership.arity(),
            target_size: params.target_size(k),
            error_budget: params.epsilon,
            membership: Arc::clone(&membership),
            examples: Arc::clone(&examples),
            distribution: Some(Arc::clone(&dist)),
            cancel: Arc::new(AtomicBool::new(false)),
        };
        let started = Instant::now();
        let outcome = run_learner(Arc::clone(&learner), req, config.time_budget);
        learner_micros += started.elapsed().as_micros();
        match outcome {
            Err(e) => {
                failure = Some(format!("run {repeat}: {e}"));
                verdicts.push(Verdict::No);
            }
            Ok(tree) => {
                let started = Instant::now();
                let err = dist.distance(&BoolFunction::from_tree(&tree), &target_fn)?;
                distance_micros += started.elapsed().as_micros();
                let fits = Mass::from_integer(tree.size() as i64) <= threshold
                    && err <= params.epsilon;
                verdicts.push(if fits { Verdict::Yes } else { Verdict::No });
                last = Some((tree, err));
            }
        }
    }
    let yes = verdicts.iter().filter(|v| **v == Verdict::Yes).count();
    let verdict = if 2 * yes > verdicts.len() || (verdicts.len() == 1 && yes == 1) {
        Verdict::Yes
    } else {
        Verdict::No
    };
    Ok(DeciderReport {
        verdict,
        learner: learner.name().to_string(),
        params: params.clone(),
        k,
        hypothesis_size: last.as_ref().map(|(t, _)| t.size()),
        hypothesis_error: last.as_ref().map(|(_, e)| *e),
        size_threshold: threshold,
        epsilon: params.epsilon,
        learner_failure: failure,
        support_size: dist.support_size(),
        membership_queries: membership.queries(),
        examples_drawn: examples.samples(),
        seed: config.seed,
        learner_micros,
        distance_micros,
    })
}

// ---------------------------------------------------------------------------
// The minimization-based reduction
// ---------------------------------------------------------------------------

/// A minimizer takes a tree and returns an equivalent one; the
/// reduction verifies equivalence on the coreset plus random probes.
pub trait TreeMinimizer {
    fn name(&self) -> &'static str;
    fn minimize(&self, tree: &DecisionTree) -> Result<DecisionTree>;
}

/// Returns its input unchanged.
pub struct IdentityMinimizer;

impl TreeMinimizer for IdentityMinimizer {
    fn name(&self) -> &'static str {
        "identity"
    }
    fn minimize(&self, tree: &DecisionTree) -> Result<DecisionTree> {
        Ok(tree.clone())
    }
}

/// Exact full-cube minimization of the tree's function.
pub struct ExactMinimizer;

impl TreeMinimizer for ExactMinimizer {
    fn name(&self) -> &'static str {
        "exact"
    }
    fn minimize(&self, tree: &DecisionTree) -> Result<DecisionTree> {
        Ok(minimize::dtsize_exact(&BoolFunction::from_tree(tree))?.tree)
    }
}

/// Exact minimization followed by function-preserving padding: the
/// leftmost leaf is repeatedly replaced by a dummy query with two
/// copies of itself, simulating a `(1+delta)`-approximate minimizer.
pub struct PaddedMinimizer {
    pub delta: Mass,
}

impl TreeMinimizer for PaddedMinimizer {
    fn name(&self) -> &'static str {
        "padded"
    }
    fn minimize(&self, tree: &DecisionTree) -> Result<DecisionTree> {
        use crate::dtree::Node;
        let exact = minimize::dtsize_exact(&BoolFunction::from_tree(tree))?;
        let pads = (self.delta * Mass::from_integer(exact.size as i64))
            .floor()
            .to_integer() as usize;
        fn pad_leftmost(node: Node, remaining: &mut usize) -> Node {
            match node {
                Node::Leaf { leaf } if *remaining > 0 => {
                    *remaining -= 1;
                    let inner = pad_leftmost(Node::Leaf { leaf }, remaining);
                    Node::internal(0, inner, Node::leaf(leaf == 1))
                }
                Node::Leaf { leaf } => Node::Leaf { leaf },
                Node::Internal { var, zero, one } => {
                    let zero = pad_leftmost(*zero, remaining);
                    Node::Internal {
                        var,
                        zero: Box::new(zero),
                        one,
                    }
                }
            }
        }
        let mut remaining = pads;
        let root = pad_leftmost(exact.tree.root().clone(), &mut remaining);
        DecisionTree::new(exact.tree.arity(), root)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DtMinReport {
    pub cover: VertexSet,
    pub ell: usize,
    pub minimizer: String,
    pub input_size: usize,
    pub output_size: usize,
    /// Exact cover number, when the instance is small enough to solve.
    pub vc: Option<usize>,
    /// `(ell+1)(|cover| + m) <= |output|`; holds whenever the minimizer
    /// contract does.
    pub extraction_bound_ok: bool,
}

/// The minimization-based reduction: build the gadget tree from the
/// trivial full cover with `ell = 2mn` (overridable for desk-scale
/// tests), hand it to the minimizer, verify the result still computes
/// the gadget, and extract a cover from it. For a `(1+delta)`-accurate
/// minimizer the extracted cover has size at most
/// `(1+delta) VC + delta m + (1+delta) mn / (ell+1)`.
pub fn dtmin_reduction(
    g: &Graph,
    minimizer: &dyn TreeMinimizer,
    ell_override: Option<usize>,
    probe_seed: u64,
) -> Result<DtMinReport> {
    let ell = ell_override.unwrap_or(2 * g.m() * g.n()).max(1);
    let full_cover: VertexSet = g.vertices().collect();
    let star = build_ell_isedge_tree(g, &full_cover, ell)?;
    let minimized = minimizer.minimize(&star.tree)?;

    // contract check: agreement on the coreset plus random probes
    let set = build_ell_d_g_or_zero(g, ell)?;
    set.verify_tree(&minimized)
        .map_err(|_| Error::AgreementViolation("minimizer output departs from the gadget".into()))?;
    let arity = GadgetIndex::for_graph(g, ell).arity();
    let mut rng = ChaCha8Rng::seed_from_u64(probe_seed);
    for _ in 0..10_000 {
        let bits: Vec<bool> = (0..arity).map(|_| rng.gen_bool(0.25)).collect();
        let x = BitString::from_bits(bits);
        if minimized.evaluate(&x)? != gadget::ell_isedge_eval(g, ell, &x)? {
            return Err(Error::AgreementViolation(format!(
                "minimizer output differs from the gadget at {x}"
            )));
        }
    }

    let cover = extract_cover_from_ell_tree(&minimized, g, ell)?;
    let vc = if g.n() <= EXACT_VC_MAX_N {
        Some(min_vertex_cover_exact(g)?.len())
    } else {
        None
    };
    let extraction_bound_ok = (ell + 1) * (cover.len() + g.m()) <= minimized.size();
    Ok(DtMinReport {
        cover,
        ell,
        minimizer: minimizer.name().to_string(),
        input_size: star.size(),
        output_size: minimized.size(),
        vc,
        extraction_bound_ok,
    })
}

// ---------------------------------------------------------------------------
// Partial-cover gap wrapper
// ---------------------------------------------------------------------------

/// Parameters the wrapper derives from the target gap `c'` and degree.
#[derive(Debug, Clone, Serialize)]
pub struct GapWrapperParams {
    pub alpha: Alpha,
    #[serde(serialize_with = "mass_string")]
    pub c: Mass,
    #[serde(serialize_with = "mass_string")]
    pub c_prime: Mass,
    pub d: usize,
}

/// Picks `alpha` small enough that `1 < (1 - 2 alpha d) c'` and
/// `alpha < 1/(d+1)`, and `c` in between.
pub fn gap_wrapper_params(c_prime: Mass, d: usize) -> Result<GapWrapperParams> {
    let one = Mass::one();
    if c_prime <= one {
        return Err(Error::InfeasibleParams("c' must exceed 1".into()));
    }
    let from_gap = (one - one / c_prime) / Mass::from_integer(2 * d.max(1) as i64);
    let from_degree = Mass::new(1, d as i64 + 1);
    let a = from_gap.min(from_degree) / Mass::from_integer(2);
    let alpha = Alpha::new(*a.numer() as u64, *a.denom() as u64)?;
    let reduced = (one - Mass::from_integer(2 * d as i64) * a) * c_prime;
    debug_assert!(reduced > one);
    let c = (one + reduced) / Mass::from_integer(2);
    Ok(GapWrapperParams {
        alpha,
        c,
        c_prime,
        d,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PromiseStatus {
    YesSide,
    NoSide,
    /// Neither side of the gap; the answer is unconstrained.
    Violated,
    Unknown,
}

#[derive(Debug, Clone, Serialize)]
pub struct GapVerdict {
    pub verdict: Verdict,
    pub params: GapWrapperParams,
    pub promise: PromiseStatus,
}

/// An inner decider for the alpha-partial gapped problem.
pub type PartialVcDecider<'a> = dyn Fn(&Graph, usize, Alpha, Mass) -> Result<Verdict> + 'a;

/// Solves the plain gapped cover problem `(k, c' k)` by forwarding to an
/// alpha-partial decider with the derived `(alpha, c)`. When the
/// instance is small enough, the promise side is computed exactly and
/// reported; on promise violations the answer is unconstrained.
pub fn partial_vc_gap_wrapper(
    g: &Graph,
    k: usize,
    inner: &PartialVcDecider,
    c_prime: Mass,
    d: usize,
) -> Result<GapVerdict> {
    let params = gap_wrapper_params(c_prime, d)?;
    let verdict = inner(g, k, params.alpha, params.c)?;
    let promise = if g.n() <= EXACT_VC_MAX_N {
        let vc = min_vertex_cover_exact(g)?.len() as i64;
        if Mass::from_integer(vc) <= Mass::from_integer(k as i64) {
            PromiseStatus::YesSide
        } else if Mass::from_integer(vc) > c_prime * Mass::from_integer(k as i64) {
            PromiseStatus::NoSide
        } else {
            PromiseStatus::Violated
        }
    } else {
        PromiseStatus::Unknown
    };
    Ok(GapVerdict {
        verdict,
        params,
        promise,
    })
}

/// An exact alpha-partial decider backed by the brute-force solver:
/// answers Yes iff the optimum alpha-partial cover is within `k`.
pub fn exact_partial_decider(g: &Graph, k: usize, alpha: Alpha, _c: Mass) -> Result<Verdict> {
    let opt = min_partial_vertex_cover_exact(g, alpha)?.len();
    Ok(if opt <= k { Verdict::Yes } else { Verdict::No })
}
