//! Brute-force minimization oracles.
//!
//! Three solvers, all exact and deterministic:
//!
//! * [`dtsize_exact`] — smallest tree computing a function on the whole
//!   cube, by dynamic programming over restrictions (3^N states).
//! * [`dtsize_over_set`] — smallest tree agreeing with a labeled point
//!   set, by dynamic programming keyed on the surviving point subset.
//! * [`min_error_front`] — for every size budget, the least achievable
//!   weighted error against a labeled distribution, with witness trees
//!   on the Pareto front.
//!
//! The set and error solvers skip variables on which every surviving
//! point agrees: querying such a variable routes all points to one
//! child, so any tree doing it can be rewritten to an equal-or-smaller
//! tree with equal-or-smaller error that doesn't. A randomized
//! cross-check against the unrestricted recursion lives in the tests.
//! Ties break toward the smallest variable index, 0-branch first, so
//! witnesses are reproducible.

use std::collections::HashMap;
use std::rc::Rc;

use crate::bits::BitString;
use crate::coreset::{Distribution, LabeledPointSet};
use crate::dtree::{BoolFunction, DecisionTree, Mass, Node};
use crate::error::Error;
use crate::Result;

/// Guard for the full-cube solver (3^N memo states).
pub const CUBE_DP_MAX_ARITY: usize = 14;
/// Guards for the subset-keyed solvers.
pub const SET_DP_MAX_POINTS: usize = 4096;
pub const SET_DP_MAX_ARITY: usize = 64;
pub const FRONT_MAX_SUPPORT: usize = 128;
pub const FRONT_MAX_SIZE_CAP: usize = 64;

/// An exact minimization outcome with its witness tree.
#[derive(Debug, Clone)]
pub struct MinimizeResult {
    pub size: usize,
    pub tree: DecisionTree,
    /// Distinct memo states touched (diagnostics).
    pub visited_states: usize,
}

// ---------------------------------------------------------------------------
// Full-cube DP
// ---------------------------------------------------------------------------

struct CubeDp {
    n: usize,
    pow3: Vec<usize>,
    table: Vec<u64>,
    // 0 unknown, 1 constant-0, 2 constant-1, 3 mixed
    constness: Vec<u8>,
    min_size: Vec<u32>,
    visited: usize,
}

impl CubeDp {
    fn table_bit(&self, index: usize) -> bool {
        self.table[index / 64] >> (index % 64) & 1 == 1
    }

    fn constness_of(&mut self, state: usize, trits: &mut [u8]) -> u8 {
        if self.constness[state] != 0 {
            return self.constness[state];
        }
        let result = match trits.iter().position(|&t| t == 0) {
            None => {
                let mut index = 0usize;
                for (i, &t) in trits.iter().enumerate() {
                    if t == 2 {
                        index |= 1 << i;
                    }
                }
                if self.table_bit(index) {
                    2
                } else {
                    1
                }
            }
            Some(i) => {
                trits[i] = 1;
                let c0 = self.constness_of(state + self.pow3[i], trits);
                trits[i] = 2;
                let c1 = self.constness_of(state + 2 * self.pow3[i], trits);
                trits[i] = 0;
                if c0 == c1 {
                    c0
                } else {
                    3
                }
            }
        };
        self.constness[state] = result;
        result
    }

    fn min_size_of(&mut self, state: usize, trits: &mut [u8]) -> u32 {
        if self.min_size[state] != u32::MAX {
            return self.min_size[state];
        }
        self.visited += 1;
        let result = if self.constness_of(state, trits) != 3 {
            0
        } else {
            let mut best = u32::MAX;
            for i in 0..self.n {
                if trits[i] != 0 {
                    continue;
                }
                trits[i] = 1;
                let a = self.min_size_of(state + self.pow3[i], trits);
                trits[i] = 2;
                let b = self.min_size_of(state + 2 * self.pow3[i], trits);
                trits[i] = 0;
                best = best.min(1 + a + b);
            }
            best
        };
        self.min_size[state] = result;
        result
    }

    fn witness(&mut self, state: usize, trits: &mut [u8]) -> Node {
        match self.constness_of(state, trits) {
            1 => Node::leaf(false),
            2 => Node::leaf(true),
            _ => {
                let target = self.min_size_of(state, trits);
                for i in 0..self.n {
                    if trits[i] != 0 {
                        continue;
                    }
                    trits[i] = 1;
                    let a = self.min_size_of(state + self.pow3[i], trits);
                    trits[i] = 2;
                    let b = self.min_size_of(state + 2 * self.pow3[i], trits);
                    trits[i] = 0;
                    if 1 + a + b == target {
                        trits[i] = 1;
                        let zero = self.witness(state + self.pow3[i], trits);
                        trits[i] = 2;
                        let one = self.witness(state + 2 * self.pow3[i], trits);
                        trits[i] = 0;
                        return Node::internal(i, zero, one);
                    }
                }
                unreachable!("some variable achieves the memoized minimum")
            }
        }
    }
}

/// The exact decision-tree size of `f` over the full cube, with an
/// optimal witness tree. Memoized on restrictions; a restriction's
/// subfunction is constant iff both single-variable refinements agree.
pub fn dtsize_exact(f: &BoolFunction) -> Result<MinimizeResult> {
    let n = f.arity();
    if n > CUBE_DP_MAX_ARITY {
        return Err(Error::SizeGuard {
            what: "full-cube DP arity",
            got: n,
            limit: CUBE_DP_MAX_ARITY,
        });
    }
    let size = 1usize << n;
    let mut table = vec![0u64; size.div_ceil(64)];
    for index in 0..size {
        if f.eval(&BitString::from_index(index as u64, n))? {
            table[index / 64] |= 1 << (index % 64);
        }
    }
    let mut pow3 = vec![1usize; n + 1];
    for i in 1..=n {
        pow3[i] = pow3[i - 1] * 3;
    }
    let states = pow3[n];
    let mut dp = CubeDp {
        n,
        pow3,
        table,
        constness: vec![0; states],
        min_size: vec![u32::MAX; states],
        visited: 0,
    };
    let mut trits = vec![0u8; n];
    let size = dp.min_size_of(0, &mut trits) as usize;
    let root = dp.witness(0, &mut trits);
    let tree = DecisionTree::new(n, root)?;
    debug_assert_eq!(tree.size(), size);
    Ok(MinimizeResult {
        size,
        tree,
        visited_states: dp.visited,
    })
}

// ---------------------------------------------------------------------------
// Point-subset machinery shared by the set and error solvers
// ---------------------------------------------------------------------------

type PointMask = Vec<u64>;

struct SubsetIndex {
    words: usize,
    /// Per variable, the mask of points with that coordinate set.
    var_masks: Vec<PointMask>,
    label_mask: PointMask,
    full: PointMask,
}

impl SubsetIndex {
    fn build(arity: usize, points: &[(BitString, bool)]) -> Self {
        let words = points.len().div_ceil(64).max(1);
        let mut var_masks = vec![vec![0u64; words]; arity];
        let mut label_mask = vec![0u64; words];
        let mut full = vec![0u64; words];
        for (p, (bits, label)) in points.iter().enumerate() {
            full[p / 64] |= 1 << (p % 64);
            if *label {
                label_mask[p / 64] |= 1 << (p % 64);
            }
            for (v, mask) in var_masks.iter_mut().enumerate() {
                if bits.bit(v) {
                    mask[p / 64] |= 1 << (p % 64);
                }
            }
        }
        SubsetIndex {
            words,
            var_masks,
            label_mask,
            full,
        }
    }

    fn split(&self, mask: &PointMask, var: usize) -> (PointMask, PointMask) {
        let mut zero = vec![0u64; self.words];
        let mut one = vec![0u64; self.words];
        for w in 0..self.words {
            one[w] = mask[w] & self.var_masks[var][w];
            zero[w] = mask[w] & !self.var_masks[var][w];
        }
        (zero, one)
    }

    fn is_empty(mask: &PointMask) -> bool {
        mask.iter().all(|&w| w == 0)
    }

    /// None if labels are mixed, otherwise the uniform label.
    fn uniform_label(&self, mask: &PointMask) -> Option<bool> {
        let mut any_one = false;
        let mut any_zero = false;
        for (m, l) in mask.iter().zip(&self.label_mask) {
            if m & l != 0 {
                any_one = true;
            }
            if m & !l != 0 {
                any_zero = true;
            }
        }
        match (any_zero, any_one) {
            (false, false) => Some(false),
            (true, false) => Some(false),
            (false, true) => Some(true),
            (true, true) => None,
        }
    }
}

// ---------------------------------------------------------------------------
// Exact agreement over a point set
// ---------------------------------------------------------------------------

struct SetDp<'a> {
    index: &'a SubsetIndex,
    arity: usize,
    memo: HashMap<PointMask, u32>,
}

impl SetDp<'_> {
    fn cost(&mut self, mask: &PointMask) -> u32 {
        if let Some(&c) = self.memo.get(mask) {
            return c;
        }
        let cost = if self.index.uniform_label(mask).is_some() {
            0
        } else {
            let mut best = u32::MAX;
            for var in 0..self.arity {
                let (zero, one) = self.index.split(mask, var);
                if SubsetIndex::is_empty(&zero) || SubsetIndex::is_empty(&one) {
                    continue;
                }
                let c = 1 + self.cost(&zero) + self.cost(&one);
                if c < best {
                    best = c;
                }
            }
            debug_assert_ne!(best, u32::MAX, "distinct points always split");
            best
        };
        self.memo.insert(mask.clone(), cost);
        cost
    }

    fn witness(&mut self, mask: &PointMask) -> Node {
        if let Some(label) = self.index.uniform_label(mask) {
            return Node::leaf(label);
        }
        let target = self.cost(mask);
        for var in 0..self.arity {
            let (zero, one) = self.index.split(mask, var);
            if SubsetIndex::is_empty(&zero) || SubsetIndex::is_empty(&one) {
                continue;
            }
            if 1 + self.cost(&zero) + self.cost(&one) == target {
                return Node::internal(var, self.witness(&zero), self.witness(&one));
            }
        }
        unreachable!("some variable achieves the memoized minimum")
    }
}

/// The smallest tree agreeing with every labeled point, with a witness.
/// Restrictions inducing the same surviving subset share one memo entry.
pub fn dtsize_over_set(set: &LabeledPointSet) -> Result<MinimizeResult> {
    if set.len() > SET_DP_MAX_POINTS {
        return Err(Error::SizeGuard {
            what: "set DP point count",
            got: set.len(),
            limit: SET_DP_MAX_POINTS,
        });
    }
    if set.arity() > SET_DP_MAX_ARITY {
        return Err(Error::SizeGuard {
            what: "set DP arity",
            got: set.arity(),
            limit: SET_DP_MAX_ARITY,
        });
    }
    let points: Vec<(BitString, bool)> = set
        .points()
        .iter()
        .map(|p| (p.bits.clone(), p.label))
        .collect();
    let index = SubsetIndex::build(set.arity(), &points);
    let mut dp = SetDp {
        index: &index,
        arity: set.arity(),
        memo: HashMap::new(),
    };
    let size = dp.cost(&index.full) as usize;
    let root = dp.witness(&index.full);
    let tree = DecisionTree::new(set.arity(), root)?;
    debug_assert_eq!(tree.size(), size);
    set.verify_tree(&tree)?;
    Ok(MinimizeResult {
        size,
        tree,
        visited_states: dp.memo.len(),
    })
}

// ---------------------------------------------------------------------------
// Error-tolerant front
// ---------------------------------------------------------------------------

/// One nondominated point of the size/error tradeoff.
#[derive(Debug, Clone)]
pub struct FrontEntry {
    pub size: usize,
    pub error: Mass,
    pub tree: DecisionTree,
}

/// The exact size/error Pareto front of a labeled distribution.
#[derive(Debug, Clone)]
pub struct ParetoFront {
    errors: Vec<Mass>,
    entries: Vec<FrontEntry>,
    pub visited_states: usize,
}

impl ParetoFront {
    /// Least achievable error over trees of size at most `size`. Sizes
    /// beyond the computed cap return the final (smallest) value.
    pub fn min_error(&self, size: usize) -> Mass {
        self.errors[size.min(self.errors.len() - 1)]
    }

    pub fn size_cap(&self) -> usize {
        self.errors.len() - 1
    }

    /// Nondominated `(size, error)` pairs with witness trees; sizes
    /// strictly increase and errors strictly decrease.
    pub fn entries(&self) -> &[FrontEntry] {
        &self.entries
    }
}

struct FrontDp<'a> {
    index: &'a SubsetIndex,
    arity: usize,
    weights: Vec<u64>,
    cap: usize,
    memo: HashMap<PointMask, Rc<Vec<u64>>>,
}

impl FrontDp<'_> {
    fn weight_split(&self, mask: &PointMask) -> (u64, u64) {
        let mut w0 = 0;
        let mut w1 = 0;
        for (p, &weight) in self.weights.iter().enumerate() {
            if mask[p / 64] >> (p % 64) & 1 == 1 {
                if self.index.label_mask[p / 64] >> (p % 64) & 1 == 1 {
                    w1 += weight;
                } else {
                    w0 += weight;
                }
            }
        }
        (w0, w1)
    }

    /// Per-size least error on the points in `mask`.
    fn solve(&mut self, mask: &PointMask) -> Rc<Vec<u64>> {
        if let Some(v) = self.memo.get(mask) {
            return Rc::clone(v);
        }
        let (w0, w1) = self.weight_split(mask);
        let leaf = w0.min(w1);
        let mut best = vec![leaf; self.cap + 1];
        if leaf > 0 {
            for var in 0..self.arity {
                let (zero, one) = self.index.split(mask, var);
                if SubsetIndex::is_empty(&zero) || SubsetIndex::is_empty(&one) {
                    continue;
                }
                let f0 = self.solve(&zero);
                let f1 = self.solve(&one);
                for s in 1..=self.cap {
                    let mut cand = best[s];
                    for s0 in 0..s {
                        let c = f0[s0] + f1[s - 1 - s0];
                        if c < cand {
                            cand = c;
                        }
                    }
                    best[s] = cand;
                }
            }
            // enforce monotonicity in the size budget
            for s in 1..=self.cap {
                best[s] = best[s].min(best[s - 1]);
            }
        }
        let rc = Rc::new(best);
        self.memo.insert(mask.clone(), Rc::clone(&rc));
        rc
    }

    fn witness(&mut self, mask: &PointMask, budget: usize, target: u64) -> Node {
        let (w0, w1) = self.weight_split(mask);
        if w0.min(w1) == target {
            // label 0 errs on the 1-labeled mass and vice versa; ties take 0
            return Node::leaf(w0 < w1);
        }
        debug_assert!(budget >= 1);
        for var in 0..self.arity {
            let (zero, one) = self.index.split(mask, var);
            if SubsetIndex::is_empty(&zero) || SubsetIndex::is_empty(&one) {
                continue;
            }
            let f0 = self.solve(&zero);
            let f1 = self.solve(&one);
            for s0 in 0..budget {
                let s1 = budget - 1 - s0;
                if f0[s0] + f1[s1] == target {
                    let left = self.witness(&zero, s0, f0[s0]);
                    let right = self.witness(&one, s1, f1[s1]);
                    return Node::internal(var, left, right);
                }
            }
        }
        unreachable!("the memoized optimum is achievable")
    }
}

/// For each size budget up to `size_cap`, the least weighted error any
/// tree of that size can achieve against the distribution's labels,
/// with witness trees at the nondominated points. Errors are computed
/// in exact integer arithmetic over the masses' common denominator.
pub fn min_error_front(dist: &Distribution, size_cap: usize) -> Result<ParetoFront> {
    if dist.support_size() > FRONT_MAX_SUPPORT {
        return Err(Error::SizeGuard {
            what: "front support size",
            got: dist.support_size(),
            limit: FRONT_MAX_SUPPORT,
        });
    }
    if size_cap > FRONT_MAX_SIZE_CAP {
        return Err(Error::SizeGuard {
            what: "front size cap",
            got: size_cap,
            limit: FRONT_MAX_SIZE_CAP,
        });
    }
    // integer weights over the common denominator
    let mut denom: i64 = 1;
    for p in dist.points() {
        denom = lcm(denom, *p.mass.denom()).ok_or_else(|| {
            Error::InfeasibleParams("mass denominators overflow a common denominator".into())
        })?;
    }
    let weights: Vec<u64> = dist
        .points()
        .iter()
        .map(|p| (p.mass.numer() * (denom / p.mass.denom())) as u64)
        .collect();
    let points: Vec<(BitString, bool)> = dist
        .points()
        .iter()
        .map(|p| (p.bits.clone(), p.label))
        .collect();
    let index = SubsetIndex::build(dist.arity(), &points);
    let mut dp = FrontDp {
        index: &index,
        arity: dist.arity(),
        weights,
        cap: size_cap,
        memo: HashMap::new(),
    };
    let by_size = dp.solve(&index.full);

    let errors: Vec<Mass> = by_size.iter().map(|&w| Mass::new(w as i64, denom)).collect();
    let mut entries = Vec::new();
    let mut last = None;
    for (s, &w) in by_size.iter().enumerate() {
        if last != Some(w) {
            let node = dp.witness(&index.full, s, w);
            let tree = DecisionTree::new(dist.arity(), node)?;
            debug_assert!(tree.size() <= s);
            entries.push(FrontEntry {
                size: s,
                error: Mass::new(w as i64, denom),
                tree,
            });
            last = Some(w);
        }
    }
    Ok(ParetoFront {
        errors,
        entries,
        visited_states: dp.memo.len(),
    })
}

fn lcm(a: i64, b: i64) -> Option<i64> {
    fn gcd(mut a: i64, mut b: i64) -> i64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    (a / gcd(a, b)).checked_mul(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coreset::{build_d_g, build_ell_d_g, hard_distribution, LabeledPoint, PointRole};
    use crate::gadget;
    use crate::graph::Graph;
    use num_traits::{One, Zero};

    fn four_graph() -> Graph {
        Graph::new(4, vec![(1, 2), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    fn cube_set(f: &BoolFunction) -> LabeledPointSet {
        let n = f.arity();
        let points = (0u64..(1 << n))
            .map(|i| {
                let bits = BitString::from_index(i, n);
                let label = f.eval(&bits).unwrap();
                LabeledPoint {
                    bits,
                    label,
                    role: PointRole::Zero,
                }
            })
            .collect();
        LabeledPointSet::new(n, points).unwrap()
    }

    /// Independent oracle: minimum error over ALL trees of size <= budget,
    /// including trees that query non-splitting variables.
    fn brute_min_error(
        points: &[(BitString, bool, u64)],
        arity: usize,
        budget: usize,
    ) -> u64 {
        let leaf = {
            let w1: u64 = points.iter().filter(|p| p.1).map(|p| p.2).sum();
            let w0: u64 = points.iter().filter(|p| !p.1).map(|p| p.2).sum();
            w0.min(w1)
        };
        if budget == 0 {
            return leaf;
        }
        let mut best = leaf;
        for var in 0..arity {
            let zero: Vec<_> = points.iter().filter(|p| !p.0.bit(var)).cloned().collect();
            let one: Vec<_> = points.iter().filter(|p| p.0.bit(var)).cloned().collect();
            for s0 in 0..budget {
                let c = brute_min_error(&zero, arity, s0)
                    + brute_min_error(&one, arity, budget - 1 - s0);
                best = best.min(c);
            }
        }
        best
    }

    #[test]
    fn constant_function_needs_no_nodes() {
        let r = dtsize_exact(&BoolFunction::constant(3, true)).unwrap();
        assert_eq!(r.size, 0);
        assert_eq!(r.tree.size(), 0);
    }

    #[test]
    fn xor_needs_three_nodes() {
        let xor = BoolFunction::from_fn(2, |x| x.bit(0) ^ x.bit(1));
        let r = dtsize_exact(&xor).unwrap();
        assert_eq!(r.size, 3);
        // independent check: no size-2 tree fits XOR on the uniform cube
        let points: Vec<(BitString, bool, u64)> = (0u64..4)
            .map(|i| {
                let b = BitString::from_index(i, 2);
                let l = b.bit(0) ^ b.bit(1);
                (b, l, 1)
            })
            .collect();
        assert!(brute_min_error(&points, 2, 2) > 0);
        assert_eq!(brute_min_error(&points, 2, 3), 0);
    }

    #[test]
    fn amplified_single_edge_is_a_four_way_and() {
        // regression baseline: the amplified single-edge gadget with one
        // duplicate block is AND on 4 variables, so its exact size is 4
        let g = Graph::new(2, vec![(1, 2)]).unwrap();
        let f = gadget::ell_isedge_function(&g, 1);
        let r = dtsize_exact(&f).unwrap();
        assert_eq!(r.size, 4);
        assert!((4..=6).contains(&r.size)); // sandwich window
    }

    #[test]
    fn exact_witness_reproduces_the_function() {
        let g = four_graph();
        let f = gadget::isedge_function(&g);
        let r = dtsize_exact(&f).unwrap();
        assert_eq!(r.tree.size(), r.size);
        for i in 0u64..(1 << 4) {
            let x = BitString::from_index(i, 4);
            assert_eq!(r.tree.evaluate(&x).unwrap(), f.eval(&x).unwrap());
        }
        assert!(r.visited_states > 0);
    }

    #[test]
    fn cube_guard() {
        let f = BoolFunction::constant(15, false);
        assert!(matches!(dtsize_exact(&f), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn set_solver_on_singletons_and_coresets() {
        let one_point = LabeledPointSet::new(
            3,
            vec![LabeledPoint {
                bits: BitString::parse("101").unwrap(),
                label: true,
                role: PointRole::Zero,
            }],
        )
        .unwrap();
        assert_eq!(dtsize_over_set(&one_point).unwrap().size, 0);

        // the unamplified coreset of the 4-vertex graph pins size 6
        let set = build_d_g(&four_graph());
        let r = dtsize_over_set(&set).unwrap();
        assert_eq!(r.size, 6);
        set.verify_tree(&r.tree).unwrap();

        // the amplified single-edge coreset pins size 4
        let g = Graph::new(2, vec![(1, 2)]).unwrap();
        let set = build_ell_d_g(&g, 1).unwrap();
        assert_eq!(set.len(), 6);
        let r = dtsize_over_set(&set).unwrap();
        assert_eq!(r.size, 4);
    }

    #[test]
    fn set_solver_matches_cube_solver_on_full_cubes() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for arity in 1..=6 {
            for _ in 0..4 {
                let bits: Vec<bool> = (0..(1u64 << arity)).map(|_| rng.gen_bool(0.5)).collect();
                let f = BoolFunction::from_fn(arity, move |x| bits[x.to_index() as usize]);
                let full = dtsize_exact(&f).unwrap().size;
                let on_set = dtsize_over_set(&cube_set(&f)).unwrap().size;
                assert_eq!(full, on_set, "arity {arity}");
            }
        }
    }

    #[test]
    fn set_solver_matches_cube_solver_on_a_gadget() {
        let g = Graph::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let f = gadget::ell_isedge_function(&g, 1);
        let full = dtsize_exact(&f).unwrap().size;
        let on_set = dtsize_over_set(&cube_set(&f)).unwrap().size;
        assert_eq!(full, on_set);
    }

    #[test]
    fn front_reaches_zero_at_the_exact_size() {
        let g = Graph::new(2, vec![(1, 2)]).unwrap();
        let set = build_ell_d_g(&g, 1).unwrap();
        let exact = dtsize_over_set(&set).unwrap().size;
        let dist = Distribution::uniform_over(&set).unwrap();
        let front = min_error_front(&dist, exact + 2).unwrap();
        assert_eq!(front.min_error(exact), Mass::zero());
        assert!(front.min_error(exact - 1) > Mass::zero());
        // errors never increase with size
        for s in 1..=front.size_cap() {
            assert!(front.min_error(s) <= front.min_error(s - 1));
        }
        // witnesses match their recorded size/error
        for entry in front.entries() {
            assert!(entry.tree.size() <= entry.size);
            let tree_fn = BoolFunction::from_tree(&entry.tree);
            let mut err = Mass::zero();
            for p in dist.points() {
                if tree_fn.eval(&p.bits).unwrap() != p.label {
                    err += p.mass;
                }
            }
            assert_eq!(err, entry.error);
        }
    }

    #[test]
    fn front_at_size_zero_on_the_hard_distribution_is_one_quarter() {
        let g = four_graph();
        let dist = hard_distribution(&g, 1).unwrap();
        let front = min_error_front(&dist, 4).unwrap();
        assert_eq!(front.min_error(0), Mass::new(1, 4));
        let zero_entry = &front.entries()[0];
        assert_eq!(zero_entry.size, 0);
        assert_eq!(zero_entry.tree.size(), 0);
    }

    #[test]
    fn front_matches_unrestricted_brute_force() {
        // cross-check the non-splitting-variable skip on random weighted sets
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..12 {
            let arity = 3;
            let count = rng.gen_range(2..=6);
            let mut seen = std::collections::HashSet::new();
            let mut raw = Vec::new();
            while raw.len() < count {
                let bits = BitString::from_index(rng.gen_range(0..8), arity);
                if seen.insert(bits.clone()) {
                    raw.push((bits, rng.gen_bool(0.5), rng.gen_range(1..=4u64)));
                }
            }
            let total: u64 = raw.iter().map(|p| p.2).sum();
            let dist = Distribution::new(
                arity,
                raw.iter()
                    .map(|(bits, label, w)| crate::coreset::DistPoint {
                        bits: bits.clone(),
                        label: *label,
                        role: PointRole::Zero,
                        mass: Mass::new(*w as i64, total as i64),
                    })
                    .collect(),
            )
            .unwrap();
            let front = min_error_front(&dist, 4).unwrap();
            for budget in 0..=4 {
                let brute = brute_min_error(&raw, arity, budget);
                assert_eq!(
                    front.min_error(budget),
                    Mass::new(brute as i64, total as i64),
                    "budget {budget} points {raw:?}"
                );
            }
        }
    }

    #[test]
    fn front_guards() {
        let g = four_graph();
        let dist = hard_distribution(&g, 1).unwrap();
        assert!(matches!(
            min_error_front(&dist, FRONT_MAX_SIZE_CAP + 1),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn front_on_single_point_support() {
        let dist = Distribution::new(
            2,
            vec![crate::coreset::DistPoint {
                bits: BitString::parse("10").unwrap(),
                label: true,
                role: PointRole::Zero,
                mass: Mass::one(),
            }],
        )
        .unwrap();
        let front = min_error_front(&dist, 2).unwrap();
        assert_eq!(front.min_error(0), Mass::zero());
        assert_eq!(front.entries().len(), 1);
    }
}
