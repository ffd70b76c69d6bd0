//! Enumerators. Every enumerator returns its objects sorted lexicographically
//! by canonical block list.

use super::{interleave, kreweras, Block, NcPartition, NclPartition};
use crate::cache;
use crate::error::{Error, Result};
use crate::limits::{Kind, Limits};
use crate::trees;

fn nonempty(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyGroundSet)
    } else {
        Ok(())
    }
}

/// All of `NC(n)`.
pub fn enumerate_nc(n: usize) -> Result<Vec<NcPartition>> {
    enumerate_nc_with(n, &Limits::default())
}

pub fn enumerate_nc_with(n: usize, limits: &Limits) -> Result<Vec<NcPartition>> {
    nonempty(n)?;
    limits.check(Kind::Nc, n)?;
    Ok(cache::nc(n).to_vec())
}

/// All of `NCL(n)`, built as the union over `gamma` in `NC(n)` of the
/// classes `[gamma]`.
pub fn enumerate_ncl(n: usize) -> Result<Vec<NclPartition>> {
    enumerate_ncl_with(n, &Limits::default())
}

pub fn enumerate_ncl_with(n: usize, limits: &Limits) -> Result<Vec<NclPartition>> {
    nonempty(n)?;
    limits.check(Kind::Ncl, n)?;
    Ok(cache::ncl(n).to_vec())
}

/// `NC_S(2n)`; the partitions live on `2n` points.
pub fn enumerate_ncs(n: usize) -> Result<Vec<NcPartition>> {
    enumerate_ncs_with(n, &Limits::default())
}

pub fn enumerate_ncs_with(n: usize, limits: &Limits) -> Result<Vec<NcPartition>> {
    nonempty(n)?;
    limits.check(Kind::Ncs, n)?;
    Ok(cache::ncs(n).to_vec())
}

/// `NCL_S(2n)`: linked partitions whose connected components lie in `NC_S(2n)`.
pub fn enumerate_ncls(n: usize) -> Result<Vec<NclPartition>> {
    enumerate_ncls_with(n, &Limits::default())
}

pub fn enumerate_ncls_with(n: usize, limits: &Limits) -> Result<Vec<NclPartition>> {
    nonempty(n)?;
    limits.check(Kind::Ncls, n)?;
    Ok(cache::ncls(n).to_vec())
}

/// The class `[gamma] = { pi : c(pi) = gamma }`, realised block by block as
/// a product of classes `[1_k]` obtained from planar trees.
pub fn class_members(gamma: &NcPartition) -> Result<Vec<NclPartition>> {
    class_members_with(gamma, &Limits::default())
}

pub fn class_members_with(gamma: &NcPartition, limits: &Limits) -> Result<Vec<NclPartition>> {
    let largest = gamma.blocks().iter().map(Block::len).max().unwrap_or(0);
    limits.check(Kind::Trees, largest)?;
    Ok(class_members_unchecked(gamma))
}

pub(crate) fn class_members_unchecked(gamma: &NcPartition) -> Vec<NclPartition> {
    let mut partial: Vec<Vec<Block>> = vec![Vec::new()];
    for b in gamma.blocks() {
        let factor = cache::one_class(b.len());
        let relabel = |x: usize| b.elements()[x - 1];
        let mut next = Vec::with_capacity(partial.len() * factor.len());
        for acc in &partial {
            for member in factor.iter() {
                let mut blocks = acc.clone();
                blocks.extend(member.blocks().iter().map(|c| c.map(relabel)));
                next.push(blocks);
            }
        }
        partial = next;
    }
    let mut out: Vec<NclPartition> = partial
        .into_iter()
        .map(|blocks| NclPartition::from_blocks(gamma.n(), blocks))
        .collect();
    out.sort();
    out
}

/// `[1_k]` on `{1..k}` via inverse tree bijection.
pub(crate) fn generate_one_class(k: usize) -> Vec<NclPartition> {
    let mut out: Vec<NclPartition> = trees::planar_trees_unchecked(k)
        .iter()
        .map(trees::theta_inv)
        .collect();
    out.sort();
    out
}

fn nc_block_lists(n: usize, memo: &mut Vec<Option<Vec<Vec<Block>>>>) -> Vec<Vec<Block>> {
    if let Some(Some(done)) = memo.get(n) {
        return done.clone();
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
    } else {
        // choose the rest of the block containing 1 as a subset of 2..=n
        for mask in 0u64..(1u64 << (n - 1)) {
            let mut first = vec![1];
            first.extend((2..=n).filter(|x| mask & (1 << (x - 2)) != 0));
            let mut bounds = first.clone();
            bounds.push(n + 1);
            let mut partial: Vec<Vec<Block>> = vec![vec![Block(first.clone())]];
            for w in bounds.windows(2) {
                let (lo, hi) = (w[0], w[1]);
                let len = hi - lo - 1;
                if len == 0 {
                    continue;
                }
                let options = nc_block_lists(len, memo);
                let mut next = Vec::with_capacity(partial.len() * options.len());
                for acc in &partial {
                    for opt in &options {
                        let mut blocks = acc.clone();
                        blocks.extend(opt.iter().map(|b| b.map(|x| x + lo)));
                        next.push(blocks);
                    }
                }
                partial = next;
            }
            out.extend(partial);
        }
    }
    if memo.len() <= n {
        memo.resize(n + 1, None);
    }
    memo[n] = Some(out.clone());
    out
}

pub(crate) fn generate_nc(n: usize) -> Vec<NcPartition> {
    let mut memo = Vec::new();
    let mut out: Vec<NcPartition> = nc_block_lists(n, &mut memo)
        .into_iter()
        .map(|blocks| NcPartition::from_blocks(n, blocks))
        .collect();
    out.sort();
    out
}

pub(crate) fn generate_ncl(n: usize) -> Vec<NclPartition> {
    let mut out: Vec<NclPartition> = cache::nc(n)
        .iter()
        .flat_map(class_members_unchecked)
        .collect();
    out.sort();
    out
}

pub(crate) fn generate_ncs(n: usize) -> Vec<NcPartition> {
    let mut out: Vec<NcPartition> = cache::nc(n)
        .iter()
        .map(|g| interleave(g, &kreweras(g)).expect("Kreweras interleaving is non-crossing"))
        .collect();
    out.sort();
    out
}

pub(crate) fn generate_ncls(n: usize) -> Vec<NclPartition> {
    let mut out: Vec<NclPartition> = cache::ncs(n)
        .iter()
        .flat_map(class_members_unchecked)
        .collect();
    out.sort();
    out
}
