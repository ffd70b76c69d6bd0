use super::{Block, NcPartition};
use crate::error::{Error, Result};

/// Kreweras complement, computed as the cycle decomposition of
/// `gamma^{-1} o (1 2 ... n)` where each block of `gamma` is an increasing
/// cycle.
pub fn kreweras(gamma: &NcPartition) -> NcPartition {
    let n = gamma.n();
    // inverse of gamma: each element maps to its predecessor in the block,
    // the minimum maps to the maximum
    let mut inv = vec![0usize; n + 1];
    for b in gamma.blocks() {
        let e = b.elements();
        for (i, &x) in e.iter().enumerate() {
            inv[x] = if i == 0 { e[e.len() - 1] } else { e[i - 1] };
        }
    }
    let next = |x: usize| inv[if x == n { 1 } else { x + 1 }];
    let mut seen = vec![false; n + 1];
    let mut blocks = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = next(x);
        }
        blocks.push(Block::new(cycle));
    }
    NcPartition::from_blocks(n, blocks)
}

/// Places `odd` on positions `1,3,...,2n-1` and `even` on `2,4,...,2n`.
pub fn interleave(odd: &NcPartition, even: &NcPartition) -> Result<NcPartition> {
    if odd.n() != even.n() {
        return Err(Error::SizeMismatch {
            left: odd.n(),
            right: even.n(),
        });
    }
    let mut blocks: Vec<Block> = odd.blocks().iter().map(|b| b.map(|x| 2 * x - 1)).collect();
    blocks.extend(even.blocks().iter().map(|b| b.map(|x| 2 * x)));
    let n = 2 * odd.n();
    let raw: Vec<Vec<usize>> = blocks.iter().map(|b| b.elements().to_vec()).collect();
    super::validate_nc(n, &raw)
}

/// Membership in `NC_S(2n)`: parity-pure blocks and even part equal to the
/// Kreweras complement of the odd part.
pub fn is_ncs(gamma: &NcPartition) -> Result<bool> {
    let n2 = gamma.n();
    if n2 % 2 == 1 {
        return Err(Error::OddGroundSet { n: n2 });
    }
    let pure = gamma
        .blocks()
        .iter()
        .all(|b| b.elements().iter().all(|x| x % 2 == b.first() % 2));
    if !pure {
        return Ok(false);
    }
    let odd: Vec<usize> = (1..=n2).step_by(2).collect();
    let even: Vec<usize> = (2..=n2).step_by(2).collect();
    let minus = gamma.restrict(&odd)?;
    let plus = gamma.restrict(&even)?;
    Ok(plus == kreweras(&minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::validate_nc;

    fn nc(n: usize, b: &[&[usize]]) -> NcPartition {
        validate_nc(n, &b.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn extremes() {
        for n in 1..6 {
            assert_eq!(kreweras(&NcPartition::zero(n)), NcPartition::one(n));
            assert_eq!(kreweras(&NcPartition::one(n)), NcPartition::zero(n));
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(kreweras(&nc(3, &[&[1, 2], &[3]])), nc(3, &[&[1], &[2, 3]]));
        assert_eq!(kreweras(&nc(3, &[&[1, 3], &[2]])), nc(3, &[&[1, 2], &[3]]));
    }

    #[test]
    fn ncs_membership() {
        assert!(is_ncs(&nc(4, &[&[1, 3], &[2], &[4]])).unwrap());
        assert!(is_ncs(&nc(4, &[&[1], &[3], &[2, 4]])).unwrap());
        assert!(!is_ncs(&nc(4, &[&[1, 2], &[3, 4]])).unwrap());
        assert!(!is_ncs(&NcPartition::zero(4)).unwrap());
        assert_eq!(
            is_ncs(&NcPartition::zero(3)),
            Err(Error::OddGroundSet { n: 3 })
        );
    }
}
