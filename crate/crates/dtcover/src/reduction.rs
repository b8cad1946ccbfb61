//! Tree constructors from vertex covers and cover extractors from trees.
//!
//! The constructor realizes the standard upper-bound tree: the leftmost
//! branch queries the cover's original variables in ascending order and
//! ends in a 0-leaf. A 1-branch at cover vertex `v` first checks all of
//! `v`'s duplicates, then scans `v`'s still-eligible neighbors, and for
//! the neighbor that fires it verifies every other original variable is
//! 0 and the neighbor's duplicates are 1. Total size
//! `(ell+1)(k+m) + m(n-2)`, within the claimed `(ell+1)(k+m) + mn`.
//!
//! The extractor walks the path the all-zeros input follows, projects
//! queried coordinates to vertices, and keeps those whose restricted
//! edge neighborhood (in spine order) is nonempty. For any tree that
//! agrees with the gadget on its coreset this yields a vertex cover
//! `C'` with `(ell+1)(|C'| + m) <= |tree|`.

use std::collections::HashMap;

use serde::Serialize;

use crate::bits::BitString;
use crate::coreset::{build_d_g, build_ell_d_g, hard_distribution};
use crate::dtree::{BoolFunction, DecisionTree, Mass, Node};
use crate::error::Error;
use crate::gadget::{self, GadgetIndex};
use crate::graph::{
    is_vertex_cover, restricted_edge_neighborhood, restricted_vertex_neighborhood, Alpha, Edge,
    Graph, VertexSet,
};
use crate::Result;

/// Role of an internal node in the constructed tree, for DOT rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Layer {
    /// Cover variables along the leftmost branch.
    Spine,
    /// Duplicate checks of a spine vertex.
    CoverDup,
    /// Still-eligible neighbors of a spine vertex.
    Neighbor,
    /// The remaining original variables, verified to be 0.
    Rest,
    /// Duplicate checks of the neighbor that fired.
    NeighborDup,
}

/// A constructed tree together with its provenance and claimed bound.
#[derive(Debug, Clone)]
pub struct ConstructionReport {
    pub tree: DecisionTree,
    pub claimed_bound: usize,
    pub cover_used: VertexSet,
    ell: usize,
    layers: HashMap<String, Layer>,
}

impl ConstructionReport {
    pub fn size(&self) -> usize {
        self.tree.size()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn layer_at(&self, path: &[bool]) -> Option<Layer> {
        self.layers.get(&path_key(path)).copied()
    }

    /// `{size, bound, cover, tree}` as a JSON object.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "size": self.size(),
            "bound": self.claimed_bound,
            "cover": self.cover_used.iter().collect::<Vec<_>>(),
            "tree": self.tree,
        })
        .to_string()
    }

    /// DOT rendering with the construction layers colored.
    pub fn to_dot(&self) -> String {
        let ell = self.ell;
        self.tree.to_dot(|path| {
            self.layers.get(&path_key(path)).map(|layer| {
                let color = match (ell, layer) {
                    (0, Layer::Spine) => "lightblue",
                    (0, Layer::Neighbor) => "teal",
                    (0, _) => "orange",
                    (_, Layer::Spine) => "lightblue",
                    (_, Layer::CoverDup) => "teal",
                    (_, Layer::Neighbor) => "violet",
                    (_, Layer::Rest) => "red",
                    (_, Layer::NeighborDup) => "cyan",
                };
                color.to_string()
            })
        })
    }
}

fn path_key(path: &[bool]) -> String {
    path.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

struct Builder<'g> {
    g: &'g Graph,
    idx: GadgetIndex,
    spine: Vec<usize>,
    layers: HashMap<String, Layer>,
}

impl Builder<'_> {
    fn mark(&mut self, path: &[bool], layer: Layer) {
        self.layers.insert(path_key(path), layer);
    }

    /// Chain that requires every coordinate in `coords` to be 1, failing
    /// to a 0-leaf, then continues with `tail`.
    fn all_ones_chain(
        &mut self,
        path: &mut Vec<bool>,
        coords: &[usize],
        layer: Layer,
        tail: impl FnOnce(&mut Self, &mut Vec<bool>) -> Node,
    ) -> Node {
        match coords.split_first() {
            None => tail(self, path),
            Some((&first, rest)) => {
                self.mark(path, layer);
                path.push(true);
                let one = self.all_ones_chain(path, rest, layer, tail);
                path.pop();
                Node::internal(first, Node::leaf(false), one)
            }
        }
    }

    /// Chain that requires every coordinate in `coords` to be 0, failing
    /// to a 0-leaf, then continues with `tail`.
    fn all_zeros_chain(
        &mut self,
        path: &mut Vec<bool>,
        coords: &[usize],
        layer: Layer,
        tail: impl FnOnce(&mut Self, &mut Vec<bool>) -> Node,
    ) -> Node {
        match coords.split_first() {
            None => tail(self, path),
            Some((&first, rest)) => {
                self.mark(path, layer);
                path.push(false);
                let zero = self.all_zeros_chain(path, rest, layer, tail);
                path.pop();
                Node::internal(first, zero, Node::leaf(false))
            }
        }
    }

    fn spine_node(&mut self, path: &mut Vec<bool>, kappa: usize) -> Node {
        if kappa == self.spine.len() {
            return Node::leaf(false);
        }
        let v = self.spine[kappa];
        self.mark(path, Layer::Spine);
        path.push(false);
        let zero = self.spine_node(path, kappa + 1);
        path.pop();
        path.push(true);
        let dups = self.idx.dup_vars(v);
        let one = self.all_ones_chain(path, &dups, Layer::CoverDup, |b, p| {
            b.neighbor_scan(p, kappa)
        });
        path.pop();
        Node::internal(self.idx.coord(v, 0), zero, one)
    }

    /// Scans the still-eligible neighbors of spine vertex `kappa`; if
    /// none fires the input cannot be an edge indicator.
    fn neighbor_scan(&mut self, path: &mut Vec<bool>, kappa: usize) -> Node {
        let v = self.spine[kappa];
        let neighbors = restricted_vertex_neighborhood(self.g, v, &self.spine[..kappa])
            .expect("spine vertices are valid");
        self.neighbor_node(path, v, &neighbors, 0)
    }

    fn neighbor_node(
        &mut self,
        path: &mut Vec<bool>,
        center: usize,
        neighbors: &[usize],
        i: usize,
    ) -> Node {
        if i == neighbors.len() {
            return Node::leaf(false);
        }
        let u = neighbors[i];
        self.mark(path, Layer::Neighbor);
        path.push(false);
        let zero = self.neighbor_node(path, center, neighbors, i + 1);
        path.pop();
        path.push(true);
        let rest: Vec<usize> = self
            .g
            .vertices()
            .filter(|&w| w != center && w != u)
            .map(|w| self.idx.coord(w, 0))
            .collect();
        let u_dups = self.idx.dup_vars(u);
        let one = self.all_zeros_chain(path, &rest, Layer::Rest, |b, p| {
            b.all_ones_chain(p, &u_dups, Layer::NeighborDup, |_, _| Node::leaf(true))
        });
        path.pop();
        Node::internal(self.idx.coord(u, 0), zero, one)
    }
}

/// Builds a tree computing the amplified gadget exactly from a vertex
/// cover, in time polynomial in `ell` and `n`. Size is
/// `(ell+1)(k+m) + m(n-2)`, claimed bound `(ell+1)(k+m) + mn`.
pub fn build_ell_isedge_tree(g: &Graph, cover: &VertexSet, ell: usize) -> Result<ConstructionReport> {
    if !is_vertex_cover(g, cover)? {
        return Err(Error::NotACover(format!("{cover:?}")));
    }
    let idx = GadgetIndex::for_graph(g, ell);
    let mut builder = Builder {
        g,
        idx,
        spine: cover.iter().copied().collect(),
        layers: HashMap::new(),
    };
    let mut path = Vec::new();
    let root = builder.spine_node(&mut path, 0);
    let tree = DecisionTree::new(idx.arity(), root)?;
    let claimed_bound = (ell + 1) * (cover.len() + g.m()) + g.m() * g.n();
    assert!(tree.size() <= claimed_bound);
    Ok(ConstructionReport {
        tree,
        claimed_bound,
        cover_used: cover.clone(),
        ell,
        layers: builder.layers,
    })
}

/// The unamplified constructor; size within `k + m + mn`.
pub fn build_isedge_tree(g: &Graph, cover: &VertexSet) -> Result<ConstructionReport> {
    build_ell_isedge_tree(g, cover, 0)
}

/// Vertices queried along the path the all-zeros input follows.
fn spine_vertices(tree: &DecisionTree, idx: &GadgetIndex) -> Result<Vec<usize>> {
    let zero = BitString::zeros(idx.arity());
    let path = tree.path_of(&zero)?;
    let mut vertices = Vec::new();
    for &(coord, _) in path.literals() {
        let v = idx.vertex_of(coord);
        if !vertices.contains(&v) {
            vertices.push(v);
        }
    }
    Ok(vertices)
}

/// Extracts a vertex cover from a tree that computes the plain gadget
/// on its coreset: the vertices queried along the all-zeros branch.
/// Also checks the accompanying size bound `|tree| >= |cover| + m`.
pub fn extract_cover_from_isedge_tree(tree: &DecisionTree, g: &Graph) -> Result<VertexSet> {
    build_d_g(g).verify_tree(tree)?;
    let idx = GadgetIndex::for_graph(g, 0);
    let vertices = spine_vertices(tree, &idx)?;
    let cover: VertexSet = vertices.into_iter().collect();
    if !is_vertex_cover(g, &cover)? {
        return Err(Error::NotACover(format!(
            "extraction produced {cover:?}; the agreement precondition must have failed"
        )));
    }
    assert!(
        tree.size() >= cover.len() + g.m(),
        "size bound violated: {} < {} + {}",
        tree.size(),
        cover.len(),
        g.m()
    );
    Ok(cover)
}

/// Extracts a vertex cover from a tree that agrees with the amplified
/// gadget on its coreset. Spine vertices whose restricted edge
/// neighborhood is empty are dropped; the survivors still cover, and
/// `(ell+1)(|cover| + m) <= |tree|`.
pub fn extract_cover_from_ell_tree(
    tree: &DecisionTree,
    g: &Graph,
    ell: usize,
) -> Result<VertexSet> {
    let set = if ell == 0 {
        build_d_g(g)
    } else {
        build_ell_d_g(g, ell)?
    };
    set.verify_tree(tree)?;
    let idx = GadgetIndex::for_graph(g, ell);
    let vertices = spine_vertices(tree, &idx)?;
    let mut cover = VertexSet::new();
    for (k, &v) in vertices.iter().enumerate() {
        if !restricted_edge_neighborhood(g, v, &vertices[..k])?.is_empty() {
            cover.insert(v);
        }
    }
    if !is_vertex_cover(g, &cover)? {
        return Err(Error::NotACover(format!(
            "extraction produced {cover:?}; the agreement precondition must have failed"
        )));
    }
    assert!(
        tree.size() >= (ell + 1) * (cover.len() + g.m()),
        "size bound violated: {} < ({}+1)({} + {})",
        tree.size(),
        ell,
        cover.len(),
        g.m()
    );
    Ok(cover)
}

/// From a tree whose error under the weighted coreset distribution is
/// below `alpha/4`: the edges the tree still recognizes, and the spine
/// vertices (with nonempty neighborhood intersecting those edges) that
/// cover all of them -- an alpha-partial vertex cover.
pub fn extract_partial_cover_from_errtree(
    tree: &DecisionTree,
    g: &Graph,
    ell: usize,
    alpha: Alpha,
) -> Result<(Vec<Edge>, VertexSet)> {
    let dist = hard_distribution(g, ell)?;
    let tree_fn = BoolFunction::from_tree(tree);
    let gadget_fn = gadget::ell_isedge_function(g, ell);
    let err = dist.distance(&tree_fn, &gadget_fn)?;
    let threshold = Mass::new(alpha.num() as i64, 4 * alpha.den() as i64);
    if err >= threshold {
        return Err(Error::DistanceTooLarge(format!(
            "distance {err} is not below alpha/4 = {threshold}"
        )));
    }
    let recognized: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|&&e| {
            let ind = gadget::ell_ind(g, ell, e).expect("edge of the graph");
            tree.evaluate(&ind).expect("arity matches")
        })
        .copied()
        .collect();

    let idx = GadgetIndex::for_graph(g, ell);
    let vertices = spine_vertices(tree, &idx)?;
    let mut cover = VertexSet::new();
    for (k, &v) in vertices.iter().enumerate() {
        let e_k = restricted_edge_neighborhood(g, v, &vertices[..k])?;
        if e_k.iter().any(|e| recognized.contains(e)) {
            cover.insert(v);
        }
    }
    // the kept vertices cover every recognized edge
    for e in &recognized {
        assert!(
            cover.contains(&e.u()) || cover.contains(&e.v()),
            "recognized edge {e} left uncovered"
        );
    }
    let covered = g
        .edges()
        .iter()
        .filter(|e| cover.contains(&e.u()) || cover.contains(&e.v()))
        .count();
    assert!(
        covered >= alpha.required_edges(g.m()),
        "extraction yielded only {covered} covered edges"
    );
    Ok((recognized, cover))
}
