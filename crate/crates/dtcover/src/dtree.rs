//! Decision trees, restrictions, paths, and boolean functions, plus the
//! per-point-set complexity measures (certificates, relevant variables).
//!
//! Conventions: the `zero` child is the branch taken when the queried
//! variable reads 0; a path literal `(coord, bit)` records the branch
//! bit actually taken. Trees are immutable values; subtrees are owned,
//! so the two children of a node never share nodes.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::error::Error;
use crate::Result;

/// Exact probability mass.
pub type Mass = Ratio<i64>;

/// Enumeration guard for certificate search.
pub const CERT_SEARCH_MAX_ARITY: usize = 20;
/// Enumeration guard for relevant-variable scans over the full cube.
pub const FULL_CUBE_SCAN_MAX_ARITY: usize = 16;
/// Largest arity for which truth tables are materialized.
pub const TABLE_MAX_ARITY: usize = 24;

// ---------------------------------------------------------------------------
// Decision trees
// ---------------------------------------------------------------------------

/// A node of a binary decision tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Node {
    Leaf {
        leaf: u8,
    },
    Internal {
        var: usize,
        zero: Box<Node>,
        one: Box<Node>,
    },
}

impl Node {
    pub fn leaf(value: bool) -> Node {
        Node::Leaf { leaf: value as u8 }
    }

    pub fn internal(var: usize, zero: Node, one: Node) -> Node {
        Node::Internal {
            var,
            zero: Box::new(zero),
            one: Box::new(one),
        }
    }

    fn size(&self) -> usize {
        match self {
            Node::Leaf { .. } => 0,
            Node::Internal { zero, one, .. } => 1 + zero.size() + one.size(),
        }
    }

    fn max_var(&self) -> Option<usize> {
        match self {
            Node::Leaf { .. } => None,
            Node::Internal { var, zero, one } => {
                Some((*var).max(zero.max_var().unwrap_or(0)).max(one.max_var().unwrap_or(0)))
            }
        }
    }
}

/// A decision tree over a fixed arity. `size` counts internal nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionTree {
    arity: usize,
    root: Node,
}

impl DecisionTree {
    pub fn new(arity: usize, root: Node) -> Result<Self> {
        if let Some(max) = root.max_var() {
            if max >= arity {
                return Err(Error::CoordOutOfRange {
                    coord: max,
                    arity,
                });
            }
        }
        Ok(DecisionTree { arity, root })
    }

    pub fn leaf(arity: usize, value: bool) -> Self {
        DecisionTree {
            arity,
            root: Node::leaf(value),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        self.root.size()
    }

    /// Follows branches according to `x` and returns the leaf label.
    /// Inputs longer than the arity are fine; short inputs fail.
    pub fn evaluate(&self, x: &BitString) -> Result<bool> {
        let mut node = &self.root;
        loop {
            match node {
                Node::Leaf { leaf } => return Ok(*leaf == 1),
                Node::Internal { var, zero, one } => {
                    if *var >= x.len() {
                        return Err(Error::CoordOutOfRange {
                            coord: *var,
                            arity: x.len(),
                        });
                    }
                    node = if x.bit(*var) { one } else { zero };
                }
            }
        }
    }

    /// The root-to-leaf literal sequence `x` follows. If a variable is
    /// queried twice along the way (legal in arbitrary trees), only the
    /// first occurrence is recorded; the restriction is unchanged.
    pub fn path_of(&self, x: &BitString) -> Result<Path> {
        let mut node = &self.root;
        let mut literals = Vec::new();
        let mut seen = HashSet::new();
        loop {
            match node {
                Node::Leaf { .. } => return Path::new(literals),
                Node::Internal { var, zero, one } => {
                    if *var >= x.len() {
                        return Err(Error::CoordOutOfRange {
                            coord: *var,
                            arity: x.len(),
                        });
                    }
                    let bit = x.bit(*var);
                    if seen.insert(*var) {
                        literals.push((*var, bit));
                    }
                    node = if bit { one } else { zero };
                }
            }
        }
    }

    /// The subtree rooted at the node reached by following `branches`
    /// from the root, viewed as a tree of the same arity.
    pub fn subtree_at(&self, branches: &[bool]) -> Result<DecisionTree> {
        let mut node = &self.root;
        for &b in branches {
            match node {
                Node::Leaf { .. } => {
                    return Err(Error::NoSuchNode(branch_string(branches)));
                }
                Node::Internal { zero, one, .. } => {
                    node = if b { one } else { zero };
                }
            }
        }
        Ok(DecisionTree {
            arity: self.arity,
            root: node.clone(),
        })
    }

    /// Serializes the nested `{leaf: b} | {var, zero, one}` object.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.root).expect("tree serialization cannot fail")
    }

    /// Parses the nested object form. If `arity` is omitted it is
    /// inferred as one past the largest queried variable.
    pub fn from_json(json: &str, arity: Option<usize>) -> Result<Self> {
        let root: Node = serde_json::from_str(json)?;
        let needed = root.max_var().map_or(0, |v| v + 1);
        DecisionTree::new(arity.unwrap_or(needed).max(needed), root)
    }

    /// GraphViz DOT output. `node_color` may assign a color to a node
    /// identified by its branch path from the root.
    pub fn to_dot(&self, node_color: impl Fn(&[bool]) -> Option<String>) -> String {
        let mut out = String::from("digraph dtree {\n  node [shape=circle];\n");
        let mut path = Vec::new();
        write_dot(&self.root, &mut path, &mut out, &node_color);
        out.push_str("}\n");
        out
    }
}

impl Serialize for DecisionTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.root.serialize(s)
    }
}

fn branch_string(branches: &[bool]) -> String {
    branches.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn write_dot(
    node: &Node,
    path: &mut Vec<bool>,
    out: &mut String,
    color: &impl Fn(&[bool]) -> Option<String>,
) {
    let id = if path.is_empty() {
        "root".to_string()
    } else {
        format!("n{}", branch_string(path))
    };
    match node {
        Node::Leaf { leaf } => {
            let _ = writeln!(out, "  {id} [shape=box,label=\"{leaf}\"];");
        }
        Node::Internal { var, zero, one } => {
            let attr = color(path)
                .map(|c| format!(",style=filled,fillcolor=\"{c}\""))
                .unwrap_or_default();
            let _ = writeln!(out, "  {id} [label=\"x{var}\"{attr}];");
            for (branch, child) in [(false, zero.as_ref()), (true, one.as_ref())] {
                path.push(branch);
                let child_id = format!("n{}", branch_string(path));
                let _ = writeln!(out, "  {id} -> {child_id} [label=\"{}\"];", branch as u8);
                write_dot(child, path, out, color);
                path.pop();
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Restrictions and paths
// ---------------------------------------------------------------------------

/// A partial assignment of coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Restriction {
    assignments: BTreeMap<usize, bool>,
}

impl Restriction {
    pub fn empty() -> Self {
        Restriction::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, bool)>) -> Result<Self> {
        let mut assignments = BTreeMap::new();
        for (coord, bit) in pairs {
            if let Some(old) = assignments.insert(coord, bit) {
                if old != bit {
                    return Err(Error::RepeatedCoordinate(coord));
                }
            }
        }
        Ok(Restriction { assignments })
    }

    pub fn fix(&mut self, coord: usize, bit: bool) {
        self.assignments.insert(coord, bit);
    }

    pub fn get(&self, coord: usize) -> Option<bool> {
        self.assignments.get(&coord).copied()
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn coords(&self) -> impl Iterator<Item = usize> + '_ {
        self.assignments.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.assignments.iter().map(|(&c, &b)| (c, b))
    }

    /// `x` overridden by the fixed coordinates: `x|_rho`.
    pub fn overlay(&self, x: &BitString) -> BitString {
        let mut out = x.clone();
        for (&coord, &bit) in &self.assignments {
            out.set(coord, bit);
        }
        out
    }

    /// Whether every fixed coordinate agrees with `x`.
    pub fn consistent_with(&self, x: &BitString) -> bool {
        self.assignments.iter().all(|(&c, &b)| x.bit(c) == b)
    }
}

/// An ordered tuple of literals with no repeated coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    literals: Vec<(usize, bool)>,
}

impl Path {
    pub fn new(literals: Vec<(usize, bool)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &(coord, _) in &literals {
            if !seen.insert(coord) {
                return Err(Error::RepeatedCoordinate(coord));
            }
        }
        Ok(Path { literals })
    }

    pub fn empty() -> Self {
        Path { literals: vec![] }
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn literals(&self) -> &[(usize, bool)] {
        &self.literals
    }

    /// Forgets the order.
    pub fn to_restriction(&self) -> Restriction {
        Restriction {
            assignments: self.literals.iter().copied().collect(),
        }
    }

    /// The path that follows this one for `pos - 1` queries (1-based),
    /// flips the `pos`-th, and terminates.
    pub fn divergent_prefix(&self, pos: usize) -> Result<Path> {
        if pos == 0 || pos > self.literals.len() {
            return Err(Error::PathPosition {
                pos,
                len: self.literals.len(),
            });
        }
        let mut literals: Vec<(usize, bool)> = self.literals[..pos].to_vec();
        let last = literals.last_mut().expect("pos >= 1");
        last.1 = !last.1;
        Ok(Path { literals })
    }
}

// ---------------------------------------------------------------------------
// Boolean functions
// ---------------------------------------------------------------------------

#[derive(Clone)]
enum Repr {
    Table(Arc<Vec<u64>>),
    Oracle(Arc<dyn Fn(&BitString) -> bool + Send + Sync>),
}

/// A total boolean function of fixed arity, backed either by an explicit
/// truth table (small arity) or a callable oracle. Cloning is cheap.
#[derive(Clone)]
pub struct BoolFunction {
    arity: usize,
    repr: Repr,
}

impl std::fmt::Debug for BoolFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match self.repr {
            Repr::Table(_) => "table",
            Repr::Oracle(_) => "oracle",
        };
        write!(f, "BoolFunction(arity={}, {kind})", self.arity)
    }
}

impl BoolFunction {
    pub fn from_fn(
        arity: usize,
        f: impl Fn(&BitString) -> bool + Send + Sync + 'static,
    ) -> Self {
        BoolFunction {
            arity,
            repr: Repr::Oracle(Arc::new(f)),
        }
    }

    pub fn constant(arity: usize, value: bool) -> Self {
        BoolFunction::from_fn(arity, move |_| value)
    }

    /// Imports a truth table given as a `2^N`-character 0/1 string with
    /// coordinate 0 as the lowest-order index bit.
    pub fn from_table_str(s: &str) -> Result<Self> {
        let len = s.len();
        if !len.is_power_of_two() {
            return Err(Error::Parse(format!(
                "truth table length {len} is not a power of two"
            )));
        }
        let arity = len.trailing_zeros() as usize;
        let mut words = vec![0u64; len.div_ceil(64)];
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => words[i / 64] |= 1 << (i % 64),
                '0' => {}
                other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
            }
        }
        Ok(BoolFunction {
            arity,
            repr: Repr::Table(Arc::new(words)),
        })
    }

    pub fn from_tree(tree: &DecisionTree) -> Self {
        let tree = tree.clone();
        BoolFunction::from_fn(tree.arity(), move |x| {
            tree.evaluate(x).expect("arity checked at construction")
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn eval(&self, x: &BitString) -> Result<bool> {
        if x.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: x.len(),
            });
        }
        Ok(match &self.repr {
            Repr::Table(words) => {
                let i = x.to_index() as usize;
                words[i / 64] >> (i % 64) & 1 == 1
            }
            Repr::Oracle(f) => f(x),
        })
    }

    /// Materializes a table-backed copy; guarded by [`TABLE_MAX_ARITY`].
    pub fn to_table(&self) -> Result<BoolFunction> {
        if self.arity > TABLE_MAX_ARITY {
            return Err(Error::SizeGuard {
                what: "truth table arity",
                got: self.arity,
                limit: TABLE_MAX_ARITY,
            });
        }
        if matches!(self.repr, Repr::Table(_)) {
            return Ok(self.clone());
        }
        let size = 1usize << self.arity;
        let mut words = vec![0u64; size.div_ceil(64)];
        for i in 0..size {
            if self.eval(&BitString::from_index(i as u64, self.arity))? {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Ok(BoolFunction {
            arity: self.arity,
            repr: Repr::Table(Arc::new(words)),
        })
    }

    /// The subfunction with the restricted coordinates overriding the
    /// input: `f_rho(x) = f(x|_rho)`. Same arity.
    pub fn restrict(&self, rho: &Restriction) -> Result<BoolFunction> {
        for coord in rho.coords() {
            if coord >= self.arity {
                return Err(Error::CoordOutOfRange {
                    coord,
                    arity: self.arity,
                });
            }
        }
        let base = self.clone();
        let rho = rho.clone();
        Ok(BoolFunction::from_fn(self.arity, move |x| {
            base.eval(&rho.overlay(x)).expect("arity preserved")
        }))
    }

    pub fn restrict_path(&self, path: &Path) -> Result<BoolFunction> {
        self.restrict(&path.to_restriction())
    }
}

// ---------------------------------------------------------------------------
// Certificates and relevant variables over a point set
// ---------------------------------------------------------------------------

/// True iff `rho` (which must be consistent with `x`) forces `f` to the
/// value `f(x)` across all of `points`.
pub fn is_certificate(
    f: &BoolFunction,
    points: &[BitString],
    x: &BitString,
    rho: &Restriction,
) -> Result<bool> {
    if let Some((coord, _)) = rho.iter().find(|&(c, b)| x.bit(c) != b) {
        return Err(Error::InconsistentRestriction(coord));
    }
    let target = f.eval(x)?;
    for y in points {
        if f.eval(&rho.overlay(y))? != target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The smallest certificate of `x` on `f` over `points`, together with a
/// witness. Only restrictions fixing coordinates to `x`'s values are
/// searched (any certificate contains such a one of equal size), in
/// increasing cardinality with lexicographic tie-breaking.
pub fn min_certificate_size(
    f: &BoolFunction,
    points: &[BitString],
    x: &BitString,
) -> Result<(usize, Restriction)> {
    let n = f.arity();
    if n > CERT_SEARCH_MAX_ARITY {
        return Err(Error::SizeGuard {
            what: "certificate search arity",
            got: n,
            limit: CERT_SEARCH_MAX_ARITY,
        });
    }
    for k in 0..=n {
        let mut found = None;
        for_each_combination(n, k, |coords| {
            if found.is_some() {
                return;
            }
            let rho = restriction_from_coords(coords, x);
            if is_certificate(f, points, x, &rho).expect("consistent by construction") {
                found = Some(rho);
            }
        });
        if let Some(rho) = found {
            return Ok((k, rho));
        }
    }
    unreachable!("fixing every coordinate always certifies")
}

pub(crate) fn restriction_from_coords(coords: &[usize], x: &BitString) -> Restriction {
    Restriction::from_pairs(coords.iter().map(|&c| (c, x.bit(c))))
        .expect("combination has distinct coordinates")
}

/// Calls `f` on every size-`k` ascending combination of `0..n`.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The coordinates that are relevant for `f` over `points`: those `i`
/// with some `x` in the set whose `i`-flip is also in the set and
/// changes the value. Monotone in the point set.
pub fn relevant_vars(f: &BoolFunction, points: &[BitString]) -> Result<BTreeSet<usize>> {
    let set: HashSet<&BitString> = points.iter().collect();
    let mut values = HashMap::new();
    for x in points {
        values.insert(x, f.eval(x)?);
    }
    let mut out = BTreeSet::new();
    for x in points {
        for i in 0..f.arity() {
            if out.contains(&i) {
                continue;
            }
            let flipped = x.flip(i);
            if set.contains(&flipped) && values[&flipped] != values[x] {
                out.insert(i);
            }
        }
    }
    Ok(out)
}

/// Exact distance between `f` and `g` under a weighted point set whose
/// masses must sum to exactly 1: the total mass of disagreement points.
pub fn distance(
    f: &BoolFunction,
    g: &BoolFunction,
    weighted: &[(BitString, Mass)],
) -> Result<Mass> {
    let mut total = Mass::zero();
    let mut disagreement = Mass::zero();
    for (x, mass) in weighted {
        if *mass <= Mass::zero() {
            return Err(Error::NonPositiveMass(mass.to_string()));
        }
        total += mass;
        if f.eval(x)? != g.eval(x)? {
            disagreement += mass;
        }
    }
    if total != Mass::new(1, 1) {
        return Err(Error::MassNormalization {
            got: total.to_string(),
        });
    }
    Ok(disagreement)
}

/// Result of [`subtree_relevant_vars_bound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubtreeBound {
    pub tree_size: usize,
    pub rel_sum: usize,
}

impl SubtreeBound {
    pub fn holds(&self) -> bool {
        self.tree_size >= self.rel_sum
    }
}

/// Verifies that the tree's size dominates the summed relevant-variable
/// counts of pairwise disjoint subtrees, returning both sides. Subtrees
/// are named by branch paths from the root; disjointness fails if one
/// path is a prefix of another.
pub fn subtree_relevant_vars_bound(
    tree: &DecisionTree,
    subtree_paths: &[Vec<bool>],
) -> Result<SubtreeBound> {
    if tree.arity() > FULL_CUBE_SCAN_MAX_ARITY {
        return Err(Error::SizeGuard {
            what: "relevant-variable scan arity",
            got: tree.arity(),
            limit: FULL_CUBE_SCAN_MAX_ARITY,
        });
    }
    for (i, a) in subtree_paths.iter().enumerate() {
        for b in subtree_paths.iter().skip(i + 1) {
            let shorter = a.len().min(b.len());
            if a[..shorter] == b[..shorter] {
                return Err(Error::SubtreesNotDisjoint);
            }
        }
    }
    let mut rel_sum = 0;
    for path in subtree_paths {
        let sub = tree.subtree_at(path)?;
        rel_sum += tree_relevant_vars(&sub).len();
    }
    Ok(SubtreeBound {
        tree_size: tree.size(),
        rel_sum,
    })
}

/// Relevant variables of the function computed by a tree, by full-cube
/// scan over the variables the tree queries.
fn tree_relevant_vars(tree: &DecisionTree) -> BTreeSet<usize> {
    let mut queried = BTreeSet::new();
    collect_vars(tree.root(), &mut queried);
    let mut out = BTreeSet::new();
    let n = tree.arity();
    for index in 0u64..(1 << n) {
        let x = BitString::from_index(index, n);
        let fx = tree.evaluate(&x).expect("valid arity");
        for &i in &queried {
            if !out.contains(&i) && tree.evaluate(&x.flip(i)).expect("valid arity") != fx {
                out.insert(i);
            }
        }
        if out.len() == queried.len() {
            break;
        }
    }
    out
}

fn collect_vars(node: &Node, out: &mut BTreeSet<usize>) {
    if let Node::Internal { var, zero, one } = node {
        out.insert(*var);
        collect_vars(zero, out);
        collect_vars(one, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x1_and_x2() -> BoolFunction {
        BoolFunction::from_fn(2, |x| x.bit(0) && x.bit(1))
    }

    fn cube(n: usize) -> Vec<BitString> {
        (0u64..(1 << n)).map(|i| BitString::from_index(i, n)).collect()
    }

    #[test]
    fn evaluate_basics() {
        let t = DecisionTree::leaf(0, false);
        assert!(!t.evaluate(&BitString::parse("10").unwrap()).unwrap());

        let t = DecisionTree::new(1, Node::internal(0, Node::leaf(false), Node::leaf(true)))
            .unwrap();
        assert!(t.evaluate(&BitString::parse("10").unwrap()).unwrap());
        assert!(!t.evaluate(&BitString::parse("01").unwrap()).unwrap());
        assert!(t.evaluate(&BitString::parse("").unwrap()).is_err());
    }

    #[test]
    fn path_of_examples() {
        let t = DecisionTree::leaf(3, true);
        assert!(t.path_of(&BitString::zeros(3)).unwrap().is_empty());

        // x0 then x1 along the left spine
        let t = DecisionTree::new(
            2,
            Node::internal(
                0,
                Node::internal(1, Node::leaf(false), Node::leaf(true)),
                Node::leaf(true),
            ),
        )
        .unwrap();
        let p = t.path_of(&BitString::parse("00").unwrap()).unwrap();
        assert_eq!(p.literals(), &[(0, false), (1, false)]);
    }

    #[test]
    fn path_restriction_pins_the_tree_value() {
        // For every tree and input, restricting the tree's function by
        // the followed path yields a function constant at the leaf label.
        let t = DecisionTree::new(
            3,
            Node::internal(
                1,
                Node::internal(0, Node::leaf(false), Node::leaf(true)),
                Node::internal(2, Node::leaf(true), Node::leaf(false)),
            ),
        )
        .unwrap();
        let f = BoolFunction::from_tree(&t);
        for x in cube(3) {
            let path = t.path_of(&x).unwrap();
            let restricted = f.restrict_path(&path).unwrap();
            let value = t.evaluate(&x).unwrap();
            for y in cube(3) {
                assert_eq!(restricted.eval(&y).unwrap(), value);
            }
        }
    }

    #[test]
    fn divergent_prefix_examples() {
        let p = Path::new(vec![(0, false), (1, false), (2, false)]).unwrap();
        assert_eq!(
            p.divergent_prefix(2).unwrap().literals(),
            &[(0, false), (1, true)]
        );
        assert_eq!(p.divergent_prefix(1).unwrap().literals(), &[(0, true)]);
        assert_eq!(
            p.divergent_prefix(3).unwrap().literals(),
            &[(0, false), (1, false), (2, true)]
        );
        assert!(p.divergent_prefix(0).is_err());
        assert!(p.divergent_prefix(4).is_err());
    }

    #[test]
    fn restrict_examples() {
        let f = x1_and_x2();
        let empty = f.restrict(&Restriction::empty()).unwrap();
        for x in cube(2) {
            assert_eq!(empty.eval(&x).unwrap(), f.eval(&x).unwrap());
        }

        let rho = Restriction::from_pairs([(0, true)]).unwrap();
        let g = f.restrict(&rho).unwrap();
        for x in cube(2) {
            assert_eq!(g.eval(&x).unwrap(), x.bit(1));
        }
    }

    #[test]
    fn certificates_basic() {
        let f = x1_and_x2();
        let points = cube(2);
        let x = BitString::parse("00").unwrap();

        // fixing everything always certifies
        let all = Restriction::from_pairs([(0, false), (1, false)]).unwrap();
        assert!(is_certificate(&f, &points, &x, &all).unwrap());

        // fixing x0 = 0 certifies the AND at 00
        let rho = Restriction::from_pairs([(0, false)]).unwrap();
        assert!(is_certificate(&f, &points, &x, &rho).unwrap());

        // empty restriction does not
        assert!(!is_certificate(&f, &points, &x, &Restriction::empty()).unwrap());

        // inconsistent restriction is an error, not `false`
        let bad = Restriction::from_pairs([(0, true)]).unwrap();
        assert!(matches!(
            is_certificate(&f, &points, &x, &bad),
            Err(Error::InconsistentRestriction(0))
        ));
    }

    #[test]
    fn min_certificate_examples() {
        let points = cube(3);
        let constant = BoolFunction::constant(3, true);
        let (size, rho) =
            min_certificate_size(&constant, &points, &BitString::zeros(3)).unwrap();
        assert_eq!(size, 0);
        assert!(rho.is_empty());

        let dictator = BoolFunction::from_fn(3, |x| x.bit(0));
        let ones = BitString::parse("111").unwrap();
        let (size, rho) = min_certificate_size(&dictator, &points, &ones).unwrap();
        assert_eq!(size, 1);
        assert_eq!(rho.get(0), Some(true));
    }

    #[test]
    fn restricting_the_edge_indicator_isolates_an_edge() {
        // zeroing vertices 1 and 2 of the 4-vertex graph leaves the
        // indicator of edge {3,4} as the only 1-input
        let g = crate::graph::Graph::new(4, vec![(1, 2), (1, 4), (2, 4), (3, 4)]).unwrap();
        let f = crate::gadget::isedge_function(&g);
        let rho = Restriction::from_pairs([(0, false), (1, false)]).unwrap();
        let restricted = f.restrict(&rho).unwrap();
        assert!(restricted.eval(&BitString::parse("0011").unwrap()).unwrap());
        assert!(!restricted.eval(&BitString::parse("1100").unwrap()).unwrap());
    }

    #[test]
    fn certificates_of_zero_over_the_coreset_are_covers() {
        let g = crate::graph::Graph::new(4, vec![(1, 2), (1, 4), (2, 4), (3, 4)]).unwrap();
        let f = crate::gadget::isedge_function(&g);
        let points = crate::coreset::build_d_g(&g).bitstrings();
        let zero = BitString::zeros(4);
        // {v1 = 0, v4 = 0} zeroes a vertex cover: certificate
        let cover = Restriction::from_pairs([(0, false), (3, false)]).unwrap();
        assert!(is_certificate(&f, &points, &zero, &cover).unwrap());
        // {v1 = 0} leaves edge {3,4} alive: not a certificate
        let partial = Restriction::from_pairs([(0, false)]).unwrap();
        assert!(!is_certificate(&f, &points, &zero, &partial).unwrap());
        // the smallest certificate matches the cover number
        let (size, witness) = min_certificate_size(&f, &points, &zero).unwrap();
        assert_eq!(size, 2);
        let projected: crate::graph::VertexSet = witness.coords().map(|c| c + 1).collect();
        assert!(crate::graph::is_vertex_cover(&g, &projected).unwrap());
    }

    #[test]
    fn relevant_vars_examples() {
        let xor = BoolFunction::from_fn(2, |x| x.bit(0) ^ x.bit(1));
        assert!(relevant_vars(&xor, &[]).unwrap().is_empty());
        assert!(relevant_vars(&xor, &[BitString::zeros(2)]).unwrap().is_empty());
        assert_eq!(
            relevant_vars(&xor, &cube(2)).unwrap(),
            [0, 1].into_iter().collect()
        );
    }

    #[test]
    fn relevant_vars_monotone_in_point_set() {
        let f = BoolFunction::from_fn(3, |x| (x.bit(0) && x.bit(1)) ^ x.bit(2));
        let small: Vec<BitString> = cube(3).into_iter().take(4).collect();
        let rel_small = relevant_vars(&f, &small).unwrap();
        let rel_big = relevant_vars(&f, &cube(3)).unwrap();
        assert!(rel_small.is_subset(&rel_big));
    }

    #[test]
    fn distance_examples() {
        let n = 2;
        let uniform: Vec<(BitString, Mass)> = cube(n)
            .into_iter()
            .map(|x| (x, Mass::new(1, 4)))
            .collect();
        let f = x1_and_x2();
        let g = BoolFunction::from_fn(2, |x| !(x.bit(0) && x.bit(1)));
        assert_eq!(distance(&f, &f, &uniform).unwrap(), Mass::zero());
        assert_eq!(distance(&f, &g, &uniform).unwrap(), Mass::new(1, 1));

        let mut broken = uniform.clone();
        broken.pop();
        assert!(matches!(
            distance(&f, &g, &broken),
            Err(Error::MassNormalization { .. })
        ));
    }

    #[test]
    fn distance_is_a_pseudometric_on_random_triples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let n = 4;
        let uniform: Vec<(BitString, Mass)> = cube(n)
            .into_iter()
            .map(|x| (x, Mass::new(1, 16)))
            .collect();
        for _ in 0..25 {
            let tables: Vec<Vec<bool>> = (0..3)
                .map(|_| (0..16).map(|_| rng.gen_bool(0.5)).collect())
                .collect();
            let fs: Vec<BoolFunction> = tables
                .into_iter()
                .map(|t| BoolFunction::from_fn(n, move |x| t[x.to_index() as usize]))
                .collect();
            let d01 = distance(&fs[0], &fs[1], &uniform).unwrap();
            let d10 = distance(&fs[1], &fs[0], &uniform).unwrap();
            let d12 = distance(&fs[1], &fs[2], &uniform).unwrap();
            let d02 = distance(&fs[0], &fs[2], &uniform).unwrap();
            assert_eq!(d01, d10);
            assert!(d02 <= d01 + d12);
        }
    }

    #[test]
    fn subtree_bound_special_cases() {
        let t = DecisionTree::new(
            2,
            Node::internal(
                0,
                Node::internal(1, Node::leaf(false), Node::leaf(true)),
                Node::leaf(false),
            ),
        )
        .unwrap();

        // the whole tree as a single subtree
        let b = subtree_relevant_vars_bound(&t, &[vec![]]).unwrap();
        assert!(b.holds());

        // all-leaf subtrees contribute zero
        let b = subtree_relevant_vars_bound(&t, &[vec![true], vec![false, false]]).unwrap();
        assert_eq!(b.rel_sum, 0);
        assert!(b.holds());

        // overlapping paths are rejected
        assert!(matches!(
            subtree_relevant_vars_bound(&t, &[vec![], vec![false]]),
            Err(Error::SubtreesNotDisjoint)
        ));
    }

    #[test]
    fn tree_json_roundtrip() {
        let t = DecisionTree::new(
            3,
            Node::internal(
                2,
                Node::leaf(false),
                Node::internal(0, Node::leaf(true), Node::leaf(false)),
            ),
        )
        .unwrap();
        let json = t.to_json();
        assert!(json.contains("\"var\":2"));
        let back = DecisionTree::from_json(&json, Some(3)).unwrap();
        assert_eq!(back, t);
        // arity inference takes one past the largest variable
        let inferred = DecisionTree::from_json(&json, None).unwrap();
        assert_eq!(inferred.arity(), 3);
    }

    #[test]
    fn truth_table_import() {
        // table for XOR on 2 variables: indices 0..4 -> 0,1,1,0
        let f = BoolFunction::from_table_str("0110").unwrap();
        assert_eq!(f.arity(), 2);
        for x in cube(2) {
            assert_eq!(f.eval(&x).unwrap(), x.bit(0) ^ x.bit(1));
        }
        assert!(BoolFunction::from_table_str("011").is_err());
    }

    #[test]
    fn combination_enumeration_is_complete() {
        let mut seen = Vec::new();
        for_each_combination(5, 3, |c| seen.push(c.to_vec()));
        assert_eq!(seen.len(), 10);
        assert_eq!(seen[0], vec![0, 1, 2]);
        assert_eq!(seen[9], vec![2, 3, 4]);
        for_each_combination(3, 0, |c| assert!(c.is_empty()));
    }
}
