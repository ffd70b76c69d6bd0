use serde::{Deserialize, Serialize};

use super::PlanarTree;
use crate::cache;
use crate::error::{Error, Result};
use crate::limits::{Kind, Limits};
use crate::partitions::{is_ncs, Block, NclPartition};

/// Edge color. Color-1 edges are drawn solid and carry odd blocks; color-0
/// edges are dashed and carry even blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Color {
    Zero,
    One,
}

impl Color {
    pub fn of_position(x: usize) -> Color {
        if x % 2 == 1 {
            Color::One
        } else {
            Color::Zero
        }
    }

    pub fn flip(self) -> Color {
        match self {
            Color::Zero => Color::One,
            Color::One => Color::Zero,
        }
    }
}

impl From<Color> for u8 {
    fn from(c: Color) -> u8 {
        match c {
            Color::Zero => 0,
            Color::One => 1,
        }
    }
}

impl TryFrom<u8> for Color {
    type Error = Error;

    fn try_from(v: u8) -> Result<Color> {
        match v {
            0 => Ok(Color::Zero),
            1 => Ok(Color::One),
            _ => Err(Error::Parse(format!("color must be 0 or 1, got {v}"))),
        }
    }
}

/// A planar tree whose edges are colored, color-1 children first at every
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BicolorPlanarTree {
    children: Vec<(Color, BicolorPlanarTree)>,
}

impl BicolorPlanarTree {
    pub fn leaf() -> Self {
        BicolorPlanarTree {
            children: Vec::new(),
        }
    }

    pub fn new(children: Vec<(Color, BicolorPlanarTree)>) -> Result<Self> {
        if children
            .windows(2)
            .any(|w| w[0].0 == Color::Zero && w[1].0 == Color::One)
        {
            return Err(Error::ColorOrder);
        }
        Ok(BicolorPlanarTree { children })
    }

    /// Elementary tree with `ones` color-1 and `zeros` color-0 leaf children.
    pub fn elementary(ones: usize, zeros: usize) -> Self {
        let mut children = vec![(Color::One, Self::leaf()); ones];
        children.extend(vec![(Color::Zero, Self::leaf()); zeros]);
        BicolorPlanarTree { children }
    }

    /// A path whose edges, from the root down, carry `colors`.
    pub fn chain(colors: &[Color]) -> Self {
        colors
            .iter()
            .rev()
            .fold(Self::leaf(), |t, &c| BicolorPlanarTree {
                children: vec![(c, t)],
            })
    }

    pub fn children(&self) -> &[(Color, BicolorPlanarTree)] {
        &self.children
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|(_, t)| t.size()).sum::<usize>()
    }

    /// Number of color-1 children at this vertex.
    pub fn ones(&self) -> usize {
        self.children
            .iter()
            .filter(|(c, _)| *c == Color::One)
            .count()
    }

    /// The underlying uncolored tree.
    pub fn shape(&self) -> PlanarTree {
        PlanarTree::new(self.children.iter().map(|(_, t)| t.shape()).collect())
    }

    /// `(ones, zeros)` per vertex, in preorder.
    pub fn vertex_profile(&self) -> Vec<(usize, usize)> {
        fn walk(t: &BicolorPlanarTree, out: &mut Vec<(usize, usize)>) {
            let k = t.ones();
            out.push((k, t.children.len() - k));
            for (_, c) in &t.children {
                walk(c, out);
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

/// `EB(n)`: the `n` one-level bicolor trees on `n` vertices, from all
/// color-1 to all color-0.
pub fn enumerate_bicolor_elementary(n: usize) -> Result<Vec<BicolorPlanarTree>> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    Ok((0..n)
        .rev()
        .map(|k| BicolorPlanarTree::elementary(k, n - 1 - k))
        .collect())
}

/// `B(n)`: every bicolor planar tree on `n` vertices.
pub fn enumerate_bicolor(n: usize) -> Result<Vec<BicolorPlanarTree>> {
    enumerate_bicolor_with(n, &Limits::default())
}

pub fn enumerate_bicolor_with(n: usize, limits: &Limits) -> Result<Vec<BicolorPlanarTree>> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    limits.check(Kind::Bicolor, n)?;
    Ok(cache::bicolor(n).to_vec())
}

fn colorings(shape: &PlanarTree) -> Vec<BicolorPlanarTree> {
    let d = shape.children().len();
    let mut subtrees: Vec<Vec<BicolorPlanarTree>> = vec![Vec::new()];
    for child in shape.children() {
        let options = colorings(child);
        let mut next = Vec::with_capacity(subtrees.len() * options.len());
        for acc in &subtrees {
            for o in &options {
                let mut v = acc.clone();
                v.push(o.clone());
                next.push(v);
            }
        }
        subtrees = next;
    }
    let mut out = Vec::new();
    for subs in &subtrees {
        for k in 0..=d {
            let children = subs
                .iter()
                .enumerate()
                .map(|(i, t)| (if i < k { Color::One } else { Color::Zero }, t.clone()))
                .collect();
            out.push(BicolorPlanarTree { children });
        }
    }
    out
}

pub(crate) fn generate_bicolor(n: usize) -> Vec<BicolorPlanarTree> {
    let mut out: Vec<BicolorPlanarTree> =
        cache::planar_trees(n).iter().flat_map(colorings).collect();
    out.sort();
    out
}

fn not_ncls(reason: impl Into<String>) -> Error {
    Error::NotNclS {
        reason: reason.into(),
    }
}

/// `Lambda: NCL_S(2n) -> B(n)`.
///
/// The root carries the non-first elements of the two exterior blocks, odd
/// (color 1) before even (color 0). A vertex standing for element `x`
/// carries the non-first elements of the exterior block of the gap before
/// `x` (opposite color) and of the block starting at `x` (same color). The
/// gap runs from the previous element of `x`'s connected component to `x`;
/// for unlinked partitions that is the previous element of `x`'s block.
pub fn lambda(pi: &NclPartition) -> Result<BicolorPlanarTree> {
    let n2 = pi.n();
    if n2 % 2 == 1 {
        return Err(not_ncls(format!("ground set of size {n2} is odd")));
    }
    let components = pi.connected_components();
    if !is_ncs(&components)? {
        return Err(not_ncls("connected components are not in NC_S"));
    }
    let exterior = pi.exterior_blocks();
    let odd: Vec<&Block> = exterior.iter().filter(|b| b.first() % 2 == 1).collect();
    let even: Vec<&Block> = exterior.iter().filter(|b| b.first() % 2 == 0).collect();
    let (odd, even) = match (odd.as_slice(), even.as_slice()) {
        ([o], [e]) => (*o, *e),
        _ => return Err(not_ncls("expected one odd and one even exterior block")),
    };

    let previous_in_component = |x: usize| -> Option<usize> {
        let b = &components.blocks()[components.block_of(x)?];
        let i = b.elements().iter().position(|&y| y == x)?;
        (i > 0).then(|| b.elements()[i - 1])
    };

    fn descend(
        x: usize,
        pi: &NclPartition,
        prev: &dyn Fn(usize) -> Option<usize>,
    ) -> Result<BicolorPlanarTree> {
        let color = Color::of_position(x);
        let g = prev(x).ok_or_else(|| not_ncls(format!("{x} starts its component")))?;
        let gap: Vec<usize> = (g + 1..x).collect();
        if gap.is_empty() {
            return Err(not_ncls(format!("empty gap before {x}")));
        }
        let local = pi.restrict(&gap)?;
        let gap_exterior = match local.exterior_blocks().as_slice() {
            [e] => e.elements().iter().map(|&y| y + g).collect::<Vec<_>>(),
            _ => {
                return Err(not_ncls(format!(
                    "gap before {x} has no unique exterior block"
                )))
            }
        };
        let mut opposite = Vec::new();
        for &y in &gap_exterior[1..] {
            opposite.push((color.flip(), descend(y, pi, prev)?));
        }
        let mut same = Vec::new();
        if let Some(d) = pi.block_starting_at(x) {
            for &y in &d.elements()[1..] {
                same.push((color, descend(y, pi, prev)?));
            }
        }
        let children = match color {
            Color::One => same.into_iter().chain(opposite).collect(),
            Color::Zero => opposite.into_iter().chain(same).collect(),
        };
        Ok(BicolorPlanarTree { children })
    }

    let mut children = Vec::new();
    for &y in odd.elements()[1..].iter() {
        children.push((Color::One, descend(y, pi, &previous_in_component)?));
    }
    for &y in even.elements()[1..].iter() {
        children.push((Color::Zero, descend(y, pi, &previous_in_component)?));
    }
    Ok(BicolorPlanarTree { children })
}

/// Inverse of [`lambda`]. Lays the partition out left to right: a vertex
/// reached through a color-`c` edge occupies its gap block (opposite color,
/// holding the opposite-colored children) followed by its own position and
/// then its same-colored children.
pub fn lambda_inv(tree: &BicolorPlanarTree) -> NclPartition {
    struct Layout {
        next: usize,
        blocks: Vec<Block>,
    }

    impl Layout {
        fn take(&mut self) -> usize {
            self.next += 1;
            self.next
        }

        // returns the position of the vertex itself
        fn emit(&mut self, t: &BicolorPlanarTree, color: Color, always_block: bool) -> usize {
            let gap_min = self.take();
            let mut gap = vec![gap_min];
            for (c, child) in t.children.iter().filter(|(c, _)| *c != color) {
                gap.push(self.emit(child, *c, false));
            }
            self.blocks.push(Block::new(gap));
            let me = self.take();
            let mut own = vec![me];
            for (c, child) in t.children.iter().filter(|(c, _)| *c == color) {
                own.push(self.emit(child, *c, false));
            }
            if own.len() > 1 || always_block {
                self.blocks.push(Block::new(own));
            }
            me
        }
    }

    let mut layout = Layout {
        next: 0,
        blocks: Vec::new(),
    };
    // the root behaves like a color-0 vertex whose position opens the even
    // exterior block and whose gap is the odd exterior component
    layout.emit(tree, Color::Zero, true);
    NclPartition::from_blocks(layout.next, layout.blocks)
}
