//! Edge-indicator target functions over a graph.
//!
//! For an `n`-vertex graph, `isedge` maps an `n`-bit string to 1 iff it
//! is exactly the indicator of some edge. The amplified variant adds
//! `ell` duplicate blocks: arity `N = n * (ell + 1)`, laid out
//! block-major, with block 0 holding the original variables and the
//! coordinate of vertex `i`'s copy in block `j` at `j * n + (i - 1)`.
//! The amplified function is 1 iff block 0 is an edge indicator and
//! every vertex present in block 0 has all of its duplicates set to 1;
//! duplicates of absent vertices are unconstrained. With `ell = 0` it
//! collapses to the plain indicator function.

use crate::bits::BitString;
use crate::dtree::BoolFunction;
use crate::error::Error;
use crate::graph::{Edge, Graph};
use crate::Result;

/// Coordinate layout of the amplified gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetIndex {
    n: usize,
    ell: usize,
}

impl GadgetIndex {
    pub fn new(n: usize, ell: usize) -> Self {
        GadgetIndex { n, ell }
    }

    pub fn for_graph(g: &Graph, ell: usize) -> Self {
        GadgetIndex { n: g.n(), ell }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Total arity `N = n * (ell + 1)`.
    pub fn arity(&self) -> usize {
        self.n * (self.ell + 1)
    }

    /// Coordinate of vertex `i` (1-based) in block `j` (0-based).
    pub fn coord(&self, vertex: usize, block: usize) -> usize {
        debug_assert!(vertex >= 1 && vertex <= self.n && block <= self.ell);
        block * self.n + (vertex - 1)
    }

    /// Inverse of [`GadgetIndex::coord`]: `(vertex, block)`.
    pub fn locate(&self, coord: usize) -> (usize, usize) {
        debug_assert!(coord < self.arity());
        (coord % self.n + 1, coord / self.n)
    }

    pub fn vertex_of(&self, coord: usize) -> usize {
        self.locate(coord).0
    }

    /// The `ell` duplicate coordinates of vertex `i`, ascending by block.
    pub fn dup_vars(&self, vertex: usize) -> Vec<usize> {
        (1..=self.ell).map(|j| self.coord(vertex, j)).collect()
    }
}

/// The `n`-bit string with 1s exactly at the endpoints of `e`, which
/// must be an edge of the graph.
pub fn edge_indicator(g: &Graph, e: Edge) -> Result<BitString> {
    if !g.has_edge(e.u(), e.v()) {
        return Err(Error::NotAnEdge(e.u(), e.v()));
    }
    let mut out = BitString::zeros(g.n());
    out.set(e.u() - 1, true);
    out.set(e.v() - 1, true);
    Ok(out)
}

/// 1 iff `v` equals the indicator string of some edge.
pub fn isedge_eval(g: &Graph, v: &BitString) -> Result<bool> {
    if v.len() != g.n() {
        return Err(Error::ArityMismatch {
            expected: g.n(),
            got: v.len(),
        });
    }
    let ones = v.ones();
    Ok(ones.len() == 2 && g.has_edge(ones[0] + 1, ones[1] + 1))
}

/// The generalized indicator: `Ind[e]` repeated in all `ell + 1` blocks.
pub fn ell_ind(g: &Graph, ell: usize, e: Edge) -> Result<BitString> {
    let ind = edge_indicator(g, e)?;
    let idx = GadgetIndex::for_graph(g, ell);
    let mut out = BitString::zeros(idx.arity());
    for block in 0..=ell {
        for vertex in e.endpoints() {
            out.set(idx.coord(vertex, block), true);
        }
    }
    debug_assert_eq!(out.weight(), 2 * (ell + 1));
    debug_assert!(ind.ones().iter().all(|&c| out.bit(c)));
    Ok(out)
}

/// Evaluates the amplified edge indicator in a single O(N) pass: block 0
/// must be an edge indicator, and each vertex set in block 0 must have
/// every duplicate set to 1.
pub fn ell_isedge_eval(g: &Graph, ell: usize, x: &BitString) -> Result<bool> {
    let idx = GadgetIndex::for_graph(g, ell);
    if x.len() != idx.arity() {
        return Err(Error::ArityMismatch {
            expected: idx.arity(),
            got: x.len(),
        });
    }
    let n = g.n();
    let mut first = None;
    let mut second = None;
    for i in 0..n {
        if x.bit(i) {
            if first.is_none() {
                first = Some(i + 1);
            } else if second.is_none() {
                second = Some(i + 1);
            } else {
                return Ok(false); // block 0 has weight > 2
            }
        }
    }
    let (u, v) = match (first, second) {
        (Some(u), Some(v)) => (u, v),
        _ => return Ok(false),
    };
    if !g.has_edge(u, v) {
        return Ok(false);
    }
    for vertex in [u, v] {
        for block in 1..=ell {
            if !x.bit(idx.coord(vertex, block)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The plain indicator function as a [`BoolFunction`] oracle.
pub fn isedge_function(g: &Graph) -> BoolFunction {
    let g = g.clone();
    BoolFunction::from_fn(g.n(), move |x| {
        isedge_eval(&g, x).expect("arity checked by BoolFunction")
    })
}

/// The amplified indicator function as a [`BoolFunction`] oracle.
pub fn ell_isedge_function(g: &Graph, ell: usize) -> BoolFunction {
    let arity = GadgetIndex::for_graph(g, ell).arity();
    let g = g.clone();
    BoolFunction::from_fn(arity, move |x| {
        ell_isedge_eval(&g, ell, x).expect("arity checked by BoolFunction")
    })
}
