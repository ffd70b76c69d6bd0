//! Planar rooted trees, bicolor planar trees, and their bijections with
//! linked partitions.
//!
//! Vertices are numbered in depth-first preorder: the root is 1, and each
//! subtree occupies a contiguous range right after its root, siblings left
//! to right.

mod bicolor;
mod json;
pub use json::{EdgeJson, TreeJson};

use crate::cache;
use crate::error::{Error, Result};
use crate::limits::{Kind, Limits};
use crate::partitions::{Block, NcPartition, NclPartition};

pub(crate) use bicolor::generate_bicolor;
pub use bicolor::{
    enumerate_bicolor, enumerate_bicolor_elementary, enumerate_bicolor_with, lambda, lambda_inv,
    BicolorPlanarTree, Color,
};

/// A rooted tree with ordered children.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanarTree {
    children: Vec<PlanarTree>,
}

/// One vertex of a tree under the preorder numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// The depth-one subtree hanging at a vertex; leaves give `child_count == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementaryView {
    pub vertex: usize,
    pub child_count: usize,
}

impl PlanarTree {
    pub fn leaf() -> Self {
        PlanarTree {
            children: Vec::new(),
        }
    }

    pub fn new(children: Vec<PlanarTree>) -> Self {
        PlanarTree { children }
    }

    /// Root with `m - 1` leaf children.
    pub fn elementary(m: usize) -> Self {
        assert!(m >= 1);
        PlanarTree::new(vec![PlanarTree::leaf(); m - 1])
    }

    /// A path on `m` vertices.
    pub fn chain(m: usize) -> Self {
        assert!(m >= 1);
        (1..m).fold(PlanarTree::leaf(), |t, _| PlanarTree::new(vec![t]))
    }

    pub fn children(&self) -> &[PlanarTree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PlanarTree::size).sum::<usize>()
    }

    pub fn max_child_count(&self) -> usize {
        self.children
            .iter()
            .map(PlanarTree::max_child_count)
            .fold(self.children.len(), usize::max)
    }

    /// Preorder numbering; entry `i` describes vertex `i + 1`.
    pub fn vertex_order(&self) -> Vec<Vertex> {
        fn walk(t: &PlanarTree, parent: Option<usize>, out: &mut Vec<Vertex>) -> usize {
            let id = out.len() + 1;
            out.push(Vertex {
                id,
                parent,
                children: Vec::new(),
            });
            for c in &t.children {
                let cid = walk(c, Some(id), out);
                out[id - 1].children.push(cid);
            }
            id
        }
        let mut out = Vec::new();
        walk(self, None, &mut out);
        out
    }

    /// `E(A)`: one elementary piece per vertex, in vertex order.
    pub fn elementary_decomposition(&self) -> Vec<ElementaryView> {
        self.vertex_order()
            .into_iter()
            .map(|v| ElementaryView {
                vertex: v.id,
                child_count: v.children.len(),
            })
            .collect()
    }
}

/// All planar trees with `n` vertices (`Catalan(n - 1)` of them).
pub fn enumerate_planar_trees(n: usize) -> Result<Vec<PlanarTree>> {
    enumerate_planar_trees_with(n, &Limits::default())
}

pub fn enumerate_planar_trees_with(n: usize, limits: &Limits) -> Result<Vec<PlanarTree>> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    limits.check(Kind::Trees, n)?;
    Ok(cache::planar_trees(n).to_vec())
}

pub(crate) fn planar_trees_unchecked(n: usize) -> std::sync::Arc<Vec<PlanarTree>> {
    cache::planar_trees(n)
}

fn forests(m: usize) -> Vec<Vec<PlanarTree>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=m {
        let heads = cache::planar_trees(first);
        let tails = forests(m - first);
        for h in heads.iter() {
            for t in &tails {
                let mut f = Vec::with_capacity(t.len() + 1);
                f.push(h.clone());
                f.extend(t.iter().cloned());
                out.push(f);
            }
        }
    }
    out
}

pub(crate) fn generate_planar_trees(n: usize) -> Vec<PlanarTree> {
    let mut out: Vec<PlanarTree> = forests(n - 1).into_iter().map(PlanarTree::new).collect();
    out.sort();
    out
}

/// `Theta`: a connected linked partition becomes the tree whose elementary
/// pieces are its blocks, each block `(i_1, ..., i_s)` being the vertex `i_1`
/// with children `i_2, ..., i_s`.
pub fn theta(pi: &NclPartition) -> Result<PlanarTree> {
    let n = pi.n();
    if pi.connected_components() != NcPartition::one(n) {
        return Err(Error::NotConnected);
    }
    fn build(v: usize, pi: &NclPartition) -> PlanarTree {
        match pi.block_starting_at(v) {
            Some(b) => PlanarTree::new(b.elements()[1..].iter().map(|&c| build(c, pi)).collect()),
            None => PlanarTree::leaf(),
        }
    }
    let tree = build(1, pi);
    debug_assert!(tree.vertex_order().iter().all(|v| v.children.as_slice()
        == pi
            .block_starting_at(v.id)
            .map_or(&[][..], |b| &b.elements()[1..])));
    Ok(tree)
}

/// Inverse of [`theta`]: the blocks are the vertex numbers of the elementary
/// pieces with at least one child.
pub fn theta_inv(tree: &PlanarTree) -> NclPartition {
    let order = tree.vertex_order();
    let n = order.len();
    if n == 1 {
        return NclPartition::zero(1);
    }
    let blocks = order
        .into_iter()
        .filter(|v| !v.children.is_empty())
        .map(|v| {
            let mut e = vec![v.id];
            e.extend(v.children);
            Block::new(e)
        })
        .collect();
    NclPartition::from_blocks(n, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::validate_ncl;

    fn ncl(n: usize, b: &[&[usize]]) -> NclPartition {
        validate_ncl(n, &b.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn example3() -> PlanarTree {
        let a = PlanarTree::new(vec![PlanarTree::leaf()]);
        let b = PlanarTree::elementary(3);
        PlanarTree::new(vec![a, b])
    }

    #[test]
    fn preorder_numbering() {
        let order = example3().vertex_order();
        let kids: Vec<Vec<usize>> = order.iter().map(|v| v.children.clone()).collect();
        assert_eq!(
            kids,
            vec![vec![2, 4], vec![3], vec![], vec![5, 6], vec![], vec![]]
        );
        assert_eq!(PlanarTree::leaf().vertex_order().len(), 1);
        assert_eq!(
            PlanarTree::elementary(4).vertex_order()[0].children,
            vec![2, 3, 4]
        );
    }

    #[test]
    fn decomposition() {
        let d: Vec<usize> = PlanarTree::chain(3)
            .elementary_decomposition()
            .iter()
            .map(|e| e.child_count)
            .collect();
        assert_eq!(d, vec![1, 1, 0]);
        let d: Vec<usize> = PlanarTree::elementary(4)
            .elementary_decomposition()
            .iter()
            .map(|e| e.child_count)
            .collect();
        assert_eq!(d, vec![3, 0, 0, 0]);
        assert_eq!(
            PlanarTree::leaf().elementary_decomposition()[0].child_count,
            0
        );
    }

    #[test]
    fn tree_counts() {
        assert_eq!(enumerate_planar_trees(1).unwrap().len(), 1);
        assert_eq!(enumerate_planar_trees(4).unwrap().len(), 5);
        assert_eq!(enumerate_planar_trees(9).unwrap().len(), 1430);
        assert!(matches!(
            enumerate_planar_trees(11),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(
            theta(&NclPartition::one(4)).unwrap(),
            PlanarTree::elementary(4)
        );
        assert_eq!(
            theta(&ncl(3, &[&[1, 2], &[2, 3]])).unwrap(),
            PlanarTree::chain(3)
        );
        let t = theta(&ncl(4, &[&[1, 2, 4], &[2, 3]])).unwrap();
        assert_eq!(
            t,
            PlanarTree::new(vec![PlanarTree::chain(2), PlanarTree::leaf()])
        );
        assert_eq!(theta(&ncl(3, &[&[1, 2], &[3]])), Err(Error::NotConnected));
    }

    #[test]
    fn theta_inv_examples() {
        assert_eq!(
            theta_inv(&PlanarTree::chain(3)),
            ncl(3, &[&[1, 2], &[2, 3]])
        );
        assert_eq!(theta_inv(&PlanarTree::elementary(5)), NclPartition::one(5));
        assert_eq!(
            theta_inv(&example3()),
            ncl(6, &[&[1, 2, 4], &[2, 3], &[4, 5, 6]])
        );
        assert_eq!(theta_inv(&PlanarTree::leaf()), NclPartition::zero(1));
    }
}
