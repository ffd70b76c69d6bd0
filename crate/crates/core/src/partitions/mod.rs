//! Non-crossing partitions `NC(n)` and non-crossing linked partitions `NCL(n)`.
//!
//! Ground sets are `{1, ..., n}`. A partition is stored in canonical form:
//! every block is strictly increasing and blocks are sorted by their minimum.
//! In a linked partition two blocks may share one element, which is then the
//! minimum of exactly one of them, so minima are still pairwise distinct.

pub(crate) mod enumerate;
mod kreweras;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{
    class_members, class_members_with, enumerate_nc, enumerate_nc_with, enumerate_ncl,
    enumerate_ncl_with, enumerate_ncls, enumerate_ncls_with, enumerate_ncs, enumerate_ncs_with,
};
pub use kreweras::{interleave, is_ncs, kreweras};

/// A nonempty, strictly increasing set of ground-set positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block(Vec<usize>);

impl Block {
    /// Builds a block from arbitrary-order distinct elements.
    ///
    /// Panics on an empty or repeating list; use the partition validators for
    /// untrusted input.
    pub fn new(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        assert!(!elements.is_empty(), "empty block");
        assert!(elements.windows(2).all(|w| w[0] < w[1]), "repeated element");
        Block(elements)
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    fn map(&self, f: impl Fn(usize) -> usize) -> Block {
        Block::new(self.0.iter().map(|&x| f(x)).collect())
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// The JSON shape shared by both partition kinds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawPartition {
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
}

/// A non-crossing partition of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPartition", into = "RawPartition")]
pub struct NcPartition {
    n: usize,
    blocks: Vec<Block>,
}

/// A non-crossing linked partition of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPartition", into = "RawPartition")]
pub struct NclPartition {
    n: usize,
    blocks: Vec<Block>,
}

/// Identifies the class `[gamma]` of linked partitions with connected
/// components `gamma`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionClassId {
    pub connected_profile: NcPartition,
}

fn sort_blocks(blocks: &mut [Block]) {
    blocks.sort_by_key(|b| (b.first(), b.last()));
}

fn normalize(n: usize, raw: &[Vec<usize>]) -> Result<Vec<Block>> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let mut blocks = Vec::with_capacity(raw.len());
    for (index, b) in raw.iter().enumerate() {
        if b.is_empty() {
            return Err(Error::EmptyBlock { index });
        }
        let mut v = b.clone();
        v.sort_unstable();
        for &x in &v {
            if x == 0 || x > n {
                return Err(Error::ElementOutOfRange { element: x, n });
            }
        }
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedElement {
                index,
                element: w[0],
            });
        }
        blocks.push(Block(v));
    }
    sort_blocks(&mut blocks);
    Ok(blocks)
}

/// Returns a witness `i < k < p < q` with `i, p` in one block and `k, q` in
/// another, if any.
pub(crate) fn find_crossing(blocks: &[Block]) -> Option<(usize, usize, usize, usize)> {
    for (ia, a) in blocks.iter().enumerate() {
        for (ib, b) in blocks.iter().enumerate() {
            if ia == ib {
                continue;
            }
            // i = min(a) < k in b < p in a < q = max(b)
            let q = b.last();
            for &k in b.elements() {
                if a.first() >= k {
                    continue;
                }
                if let Some(&p) = a.elements().iter().find(|&&p| p > k && p < q) {
                    return Some((a.first(), k, p, q));
                }
            }
        }
    }
    None
}

fn check_links(blocks: &[Block]) -> Result<()> {
    for (ia, a) in blocks.iter().enumerate() {
        for b in &blocks[ia + 1..] {
            let shared: Vec<usize> = a
                .elements()
                .iter()
                .copied()
                .filter(|&x| b.contains(x))
                .collect();
            let bad = |reason: &str| Error::BadLink {
                first: a.0.clone(),
                second: b.0.clone(),
                reason: reason.to_string(),
            };
            match shared.as_slice() {
                [] => {}
                [j] => {
                    if a.len() < 2 || b.len() < 2 {
                        return Err(bad("a singleton block shares its element"));
                    }
                    if (a.first() == *j) == (b.first() == *j) {
                        return Err(bad(
                            "shared element must be the minimum of exactly one block",
                        ));
                    }
                }
                _ => return Err(bad("blocks share more than one element")),
            }
        }
    }
    Ok(())
}

fn occurrences(n: usize, blocks: &[Block]) -> Vec<usize> {
    let mut count = vec![0usize; n + 1];
    for b in blocks {
        for &x in b.elements() {
            count[x] += 1;
        }
    }
    count
}

/// Validates `blocks` as a non-crossing partition of `{1..n}`.
pub fn validate_nc(n: usize, blocks: &[Vec<usize>]) -> Result<NcPartition> {
    let blocks = normalize(n, blocks)?;
    let count = occurrences(n, &blocks);
    if let Some(x) = (1..=n).find(|&x| count[x] == 0) {
        return Err(Error::NotAPartition {
            reason: format!("element {x} is in no block"),
        });
    }
    if let Some(x) = (1..=n).find(|&x| count[x] > 1) {
        return Err(Error::NotAPartition {
            reason: format!("element {x} is in more than one block"),
        });
    }
    if let Some((i, k, p, q)) = find_crossing(&blocks) {
        return Err(Error::Crossing { i, k, p, q });
    }
    Ok(NcPartition { n, blocks })
}

/// Validates `blocks` as a non-crossing linked partition of `{1..n}`.
pub fn validate_ncl(n: usize, blocks: &[Vec<usize>]) -> Result<NclPartition> {
    let blocks = normalize(n, blocks)?;
    let count = occurrences(n, &blocks);
    if let Some(missing) = (1..=n).find(|&x| count[x] == 0) {
        return Err(Error::NotACover { missing });
    }
    if let Some((i, k, p, q)) = find_crossing(&blocks) {
        return Err(Error::Crossing { i, k, p, q });
    }
    check_links(&blocks)?;
    Ok(NclPartition { n, blocks })
}

fn relabel(blocks: &[Block], s: &[usize]) -> Vec<Block> {
    let pos = |x: usize| s.binary_search(&x).expect("element in set") + 1;
    let mut out: Vec<Block> = blocks.iter().map(|b| b.map(pos)).collect();
    sort_blocks(&mut out);
    out
}

fn restrict_blocks(n: usize, blocks: &[Block], s: &[usize]) -> Result<Vec<Block>> {
    if s.is_empty() || s.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parse(
            "restriction set must be nonempty and increasing".into(),
        ));
    }
    if let Some(&x) = s.iter().find(|&&x| x == 0 || x > n) {
        return Err(Error::ElementOutOfRange { element: x, n });
    }
    let inside: BTreeSet<usize> = s.iter().copied().collect();
    let mut kept = Vec::new();
    for b in blocks {
        let k = b.elements().iter().filter(|x| inside.contains(x)).count();
        if k == b.len() {
            kept.push(b.clone());
        } else if k > 0 {
            return Err(Error::BlockStraddlesSet { block: b.0.clone() });
        }
    }
    Ok(relabel(&kept, s))
}

fn write_blocks(f: &mut fmt::Formatter<'_>, blocks: &[Block]) -> fmt::Result {
    for b in blocks {
        write!(f, "{b}")?;
    }
    Ok(())
}

impl NcPartition {
    /// Trusted constructor for internally generated block lists.
    pub(crate) fn from_blocks(n: usize, mut blocks: Vec<Block>) -> Self {
        sort_blocks(&mut blocks);
        debug_assert!(
            validate_nc(n, &blocks.iter().map(|b| b.0.clone()).collect::<Vec<_>>()).is_ok()
        );
        NcPartition { n, blocks }
    }

    /// `0_n`: all singletons.
    pub fn zero(n: usize) -> Self {
        NcPartition::from_blocks(n, (1..=n).map(|x| Block(vec![x])).collect())
    }

    /// `1_n`: a single block.
    pub fn one(n: usize) -> Self {
        NcPartition::from_blocks(n, vec![Block((1..=n).collect())])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn to_raw(&self) -> RawPartition {
        RawPartition {
            n: self.n,
            blocks: self.blocks.iter().map(|b| b.0.clone()).collect(),
        }
    }

    /// Index of the block containing `x`.
    pub fn block_of(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(x))
    }

    /// Restriction to a union of blocks, relabelled onto `{1..|s|}`.
    pub fn restrict(&self, s: &[usize]) -> Result<NcPartition> {
        Ok(NcPartition {
            n: s.len(),
            blocks: restrict_blocks(self.n, &self.blocks, s)?,
        })
    }

    pub fn to_ncl(&self) -> NclPartition {
        NclPartition {
            n: self.n,
            blocks: self.blocks.clone(),
        }
    }

    /// True iff every block of `other` is a union of blocks of `self`.
    pub fn refines(&self, other: &NcPartition) -> bool {
        self.n == other.n && blocks_refine(&self.blocks, &other.blocks)
    }
}

impl NclPartition {
    pub(crate) fn from_blocks(n: usize, mut blocks: Vec<Block>) -> Self {
        sort_blocks(&mut blocks);
        debug_assert!(
            validate_ncl(n, &blocks.iter().map(|b| b.0.clone()).collect::<Vec<_>>()).is_ok()
        );
        NclPartition { n, blocks }
    }

    pub fn zero(n: usize) -> Self {
        NcPartition::zero(n).to_ncl()
    }

    pub fn one(n: usize) -> Self {
        NcPartition::one(n).to_ncl()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn to_raw(&self) -> RawPartition {
        RawPartition {
            n: self.n,
            blocks: self.blocks.iter().map(|b| b.0.clone()).collect(),
        }
    }

    /// The block whose minimum is `x`, if any.
    pub fn block_starting_at(&self, x: usize) -> Option<&Block> {
        self.blocks.iter().find(|b| b.first() == x)
    }

    /// The block that contains `x` as a non-minimal element, if any.
    pub fn block_continuing_at(&self, x: usize) -> Option<&Block> {
        self.blocks.iter().find(|b| b.first() != x && b.contains(x))
    }

    /// Returns the partition as an `NcPartition` if no blocks are linked.
    pub fn as_nc(&self) -> Option<NcPartition> {
        let count = occurrences(self.n, &self.blocks);
        count[1..].iter().all(|&c| c == 1).then(|| NcPartition {
            n: self.n,
            blocks: self.blocks.clone(),
        })
    }

    /// `c(pi)`: the blocks are the connected components of the linked blocks.
    pub fn connected_components(&self) -> NcPartition {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for b in &self.blocks {
            let root = find(&mut parent, b.first());
            for &x in &b.elements()[1..] {
                let r = find(&mut parent, x);
                parent[r] = root;
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 1..=self.n {
            let r = find(&mut parent, x);
            groups.entry(r).or_default().push(x);
        }
        NcPartition::from_blocks(self.n, groups.into_values().map(Block).collect())
    }

    pub fn class_id(&self) -> PartitionClassId {
        PartitionClassId {
            connected_profile: self.connected_components(),
        }
    }

    /// Blocks that are neither nested under another block nor hanging off
    /// another block through their minimum.
    pub fn exterior_blocks(&self) -> Vec<Block> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(ib, b)| {
                let (first, last) = (b.first(), b.last());
                !self.blocks.iter().enumerate().any(|(id, d)| {
                    id != *ib && (d.contains(first) || (d.first() < first && d.last() > last))
                })
            })
            .map(|(_, b)| b.clone())
            .collect()
    }

    /// `s(pi)`: elements that are the minimum of no block.
    pub fn non_minimal_elements(&self) -> BTreeSet<usize> {
        let minima: BTreeSet<usize> = self.blocks.iter().map(Block::first).collect();
        (1..=self.n).filter(|x| !minima.contains(x)).collect()
    }

    pub fn restrict(&self, s: &[usize]) -> Result<NclPartition> {
        Ok(NclPartition {
            n: s.len(),
            blocks: restrict_blocks(self.n, &self.blocks, s)?,
        })
    }
}

fn blocks_refine(fine: &[Block], coarse: &[Block]) -> bool {
    coarse.iter().all(|b| {
        let mut covered = BTreeSet::new();
        for d in fine {
            if d.elements().iter().all(|&x| b.contains(x)) {
                covered.extend(d.elements().iter().copied());
            }
        }
        covered.len() == b.len()
    })
}

/// `sigma <= pi`: every block of `pi` is a union of blocks of `sigma`.
pub fn leq(sigma: &NclPartition, pi: &NclPartition) -> Result<bool> {
    if sigma.n != pi.n {
        return Err(Error::SizeMismatch {
            left: sigma.n,
            right: pi.n,
        });
    }
    Ok(blocks_refine(&sigma.blocks, &pi.blocks))
}

impl TryFrom<RawPartition> for NcPartition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        validate_nc(raw.n, &raw.blocks)
    }
}

impl TryFrom<RawPartition> for NclPartition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        validate_ncl(raw.n, &raw.blocks)
    }
}

impl From<NcPartition> for RawPartition {
    fn from(p: NcPartition) -> Self {
        p.to_raw()
    }
}

impl From<NclPartition> for RawPartition {
    fn from(p: NclPartition) -> Self {
        p.to_raw()
    }
}

impl From<NcPartition> for NclPartition {
    fn from(p: NcPartition) -> Self {
        p.to_ncl()
    }
}

impl fmt::Display for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks)
    }
}

impl fmt::Display for NclPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ncl(n: usize, b: &[&[usize]]) -> NclPartition {
        validate_ncl(n, &b.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn twelve_points() -> NclPartition {
        ncl(
            12,
            &[
                &[1, 4, 6, 9],
                &[2, 3],
                &[4, 5],
                &[6, 7, 8],
                &[10, 11],
                &[11, 12],
            ],
        )
    }

    #[test]
    fn nc_validation() {
        assert!(validate_nc(3, &[vec![1, 2], vec![3]]).is_ok());
        assert_eq!(
            validate_nc(4, &[vec![1, 3], vec![2, 4]]),
            Err(Error::Crossing {
                i: 1,
                k: 2,
                p: 3,
                q: 4
            })
        );
        // ten points with nesting at several depths
        assert!(validate_nc(
            10,
            &[vec![1, 4, 6], vec![2, 3], vec![5], vec![7, 8], vec![9, 10]]
        )
        .is_ok());
        assert!(matches!(
            validate_nc(3, &[vec![1, 2], vec![2, 3]]),
            Err(Error::NotAPartition { .. })
        ));
        assert!(matches!(
            validate_nc(3, &[vec![1, 2]]),
            Err(Error::NotAPartition { .. })
        ));
        assert!(matches!(
            validate_nc(3, &[vec![1, 4], vec![2, 3]]),
            Err(Error::ElementOutOfRange { element: 4, n: 3 })
        ));
        assert_eq!(validate_nc(0, &[]), Err(Error::EmptyGroundSet));
    }

    #[test]
    fn input_order_is_tolerated() {
        let a = validate_nc(3, &[vec![3], vec![2, 1]]).unwrap();
        let b = validate_nc(3, &[vec![1, 2], vec![3]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ncl_validation() {
        let p = twelve_points();
        assert_eq!(p.num_blocks(), 6);
        assert!(matches!(
            validate_ncl(2, &[vec![1, 2], vec![1, 2]]),
            Err(Error::BadLink { .. })
        ));
        assert!(matches!(
            validate_ncl(3, &[vec![1, 2], vec![2], vec![3]]),
            Err(Error::BadLink { .. })
        ));
        // shared element minimal in both
        assert!(matches!(
            validate_ncl(3, &[vec![1, 2], vec![1, 3]]),
            Err(Error::BadLink { .. })
        ));
        // shared element minimal in neither
        assert!(matches!(
            validate_ncl(3, &[vec![1, 3], vec![2, 3]]),
            Err(Error::BadLink { .. })
        ));
        assert_eq!(
            validate_ncl(3, &[vec![1, 2]]),
            Err(Error::NotACover { missing: 3 })
        );
    }

    #[test]
    fn order_relation() {
        let chain = ncl(3, &[&[1, 2], &[2, 3]]);
        assert!(leq(&chain, &NclPartition::one(3)).unwrap());
        assert!(!leq(&ncl(3, &[&[1, 3], &[2]]), &ncl(3, &[&[1, 2], &[3]])).unwrap());
        assert!(leq(&NclPartition::zero(3), &chain).unwrap());
        assert!(leq(&NclPartition::zero(2), &NclPartition::zero(3)).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(
            twelve_points().connected_components().to_raw().blocks,
            vec![vec![1, 4, 5, 6, 7, 8, 9], vec![2, 3], vec![10, 11, 12]]
        );
        assert_eq!(
            ncl(3, &[&[1, 2], &[2, 3]]).connected_components(),
            NcPartition::one(3)
        );
        let g = validate_nc(4, &[vec![1, 4], vec![2, 3]]).unwrap();
        assert_eq!(g.to_ncl().connected_components(), g);
    }

    #[test]
    fn exterior() {
        let ext: Vec<Vec<usize>> = twelve_points()
            .exterior_blocks()
            .iter()
            .map(|b| b.0.clone())
            .collect();
        assert_eq!(ext, vec![vec![1, 4, 6, 9], vec![10, 11]]);
        assert_eq!(NclPartition::one(4).exterior_blocks().len(), 1);
        let p = ncl(6, &[&[1, 3], &[5], &[2], &[4, 6]]);
        let ext: Vec<Vec<usize>> = p.exterior_blocks().iter().map(|b| b.0.clone()).collect();
        assert_eq!(ext, vec![vec![1, 3], vec![4, 6]]);
    }

    #[test]
    fn non_minimal() {
        let s: Vec<usize> = twelve_points().non_minimal_elements().into_iter().collect();
        assert_eq!(s, vec![3, 5, 7, 8, 9, 12]);
        assert!(NclPartition::zero(4).non_minimal_elements().is_empty());
        let s: Vec<usize> = NclPartition::one(4)
            .non_minimal_elements()
            .into_iter()
            .collect();
        assert_eq!(s, vec![2, 3, 4]);
    }

    #[test]
    fn restriction() {
        let r = twelve_points().restrict(&[1, 4, 5, 6, 7, 8, 9]).unwrap();
        assert_eq!(r, ncl(7, &[&[1, 2, 4, 7], &[2, 3], &[4, 5, 6]]));
        let p = twelve_points();
        assert_eq!(p.restrict(&(1..=12).collect::<Vec<_>>()).unwrap(), p);
        assert_eq!(
            NclPartition::zero(5).restrict(&[2, 4]).unwrap(),
            NclPartition::zero(2)
        );
        assert!(matches!(
            p.restrict(&[1, 2, 3]),
            Err(Error::BlockStraddlesSet { .. })
        ));
    }

    #[test]
    fn json_shape() {
        let p = twelve_points();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"n":12,"blocks":[[1,4,6,9],[2,3],[4,5],[6,7,8],[10,11],[11,12]]}"#
        );
        let back: NclPartition = serde_json::from_str(r#"{"n":3,"blocks":[[3],[2,1]]}"#).unwrap();
        assert_eq!(back.to_string(), "(1,2)(3)");
        assert!(serde_json::from_str::<NcPartition>(r#"{"n":4,"blocks":[[1,3],[2,4]]}"#).is_err());
    }
}
