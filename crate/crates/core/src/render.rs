//! Monospace drawings: arc diagrams for partitions, top-down trees.

use crate::partitions::{Block, NcPartition, NclPartition};
use crate::trees::{BicolorPlanarTree, Color, PlanarTree};

const SPACING: usize = 3;

/// Points `1..n` on a baseline with one bar per non-singleton block above
/// them. Nested blocks sit lower; `+` marks the elements of a block.
pub fn render_blocks(n: usize, blocks: &[Block]) -> String {
    let col = |x: usize| (x - 1) * SPACING;
    let width = col(n) + 2;
    let mut arcs: Vec<&Block> = blocks.iter().filter(|b| b.len() > 1).collect();
    arcs.sort_by_key(|b| (b.last() - b.first(), b.first()));
    let mut level: Vec<usize> = Vec::with_capacity(arcs.len());
    for (i, b) in arcs.iter().enumerate() {
        let l = arcs[..i]
            .iter()
            .zip(&level)
            .filter(|(o, _)| o.first() <= b.last() && b.first() <= o.last())
            .map(|(_, &l)| l + 1)
            .max()
            .unwrap_or(0);
        level.push(l);
    }
    let height = level.iter().map(|l| l + 1).max().unwrap_or(0);
    let mut rows = vec![vec![' '; width]; height];
    for (b, &l) in arcs.iter().zip(&level) {
        let r = height - 1 - l;
        rows[r][col(b.first())..=col(b.last())].fill('-');
        for &x in b.elements() {
            rows[r][col(x)] = '+';
            for row in rows.iter_mut().skip(r + 1) {
                if row[col(x)] == ' ' || row[col(x)] == '-' {
                    row[col(x)] = '|';
                }
            }
        }
    }
    let mut labels = vec![' '; width];
    for x in 1..=n {
        for (i, ch) in x.to_string().chars().enumerate() {
            if col(x) + i < width {
                labels[col(x) + i] = ch;
            }
        }
    }
    rows.push(labels);
    finish(rows)
}

pub fn render_nc(p: &NcPartition) -> String {
    render_blocks(p.n(), p.blocks())
}

pub fn render_ncl(p: &NclPartition) -> String {
    render_blocks(p.n(), p.blocks())
}

struct Node {
    children: Vec<(char, Node)>,
}

struct Boxed {
    rows: Vec<Vec<char>>,
    width: usize,
    anchor: usize,
}

fn layout(node: &Node) -> Boxed {
    if node.children.is_empty() {
        return Boxed {
            rows: vec![vec!['o']],
            width: 1,
            anchor: 0,
        };
    }
    let boxes: Vec<Boxed> = node.children.iter().map(|(_, c)| layout(c)).collect();
    let mut offsets = Vec::with_capacity(boxes.len());
    let mut width = 0;
    for b in &boxes {
        if width > 0 {
            width += 2;
        }
        offsets.push(width);
        width += b.width;
    }
    let anchors: Vec<usize> = boxes
        .iter()
        .zip(&offsets)
        .map(|(b, o)| o + b.anchor)
        .collect();
    let anchor = anchors[0];
    let mut rows = vec![vec![' '; width]];
    rows[0][anchor] = 'o';
    if anchors.len() > 1 {
        let mut bar = vec![' '; width];
        bar[anchor..=anchors[anchors.len() - 1]].fill('-');
        bar[anchor] = node.children[0].0;
        for &a in &anchors[1..] {
            bar[a] = '+';
        }
        rows.push(bar);
    }
    let mut edges = vec![' '; width];
    for ((glyph, _), &a) in node.children.iter().zip(&anchors) {
        edges[a] = *glyph;
    }
    rows.push(edges);
    let depth = boxes.iter().map(|b| b.rows.len()).max().unwrap_or(0);
    for d in 0..depth {
        let mut row = vec![' '; width];
        for (b, &o) in boxes.iter().zip(&offsets) {
            if let Some(src) = b.rows.get(d) {
                row[o..o + src.len()].copy_from_slice(src);
            }
        }
        rows.push(row);
    }
    Boxed {
        rows,
        width,
        anchor,
    }
}

fn finish(rows: Vec<Vec<char>>) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    out
}

fn plain(t: &PlanarTree) -> Node {
    Node {
        children: t.children().iter().map(|c| ('|', plain(c))).collect(),
    }
}

fn colored(t: &BicolorPlanarTree) -> Node {
    Node {
        children: t
            .children()
            .iter()
            .map(|(color, c)| (if *color == Color::One { '|' } else { ':' }, colored(c)))
            .collect(),
    }
}

/// Root at the top, `o` per vertex, `|` edges.
pub fn render_tree(t: &PlanarTree) -> String {
    finish(layout(&plain(t)).rows)
}

/// As [`render_tree`], with `|` for color-1 edges and `:` for color-0 edges.
pub fn render_bicolor(t: &BicolorPlanarTree) -> String {
    finish(layout(&colored(t)).rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{validate_nc, validate_ncl};

    #[test]
    fn isolated_points() {
        assert_eq!(render_nc(&NcPartition::zero(3)), "1  2  3\n");
    }

    #[test]
    fn nested_arcs() {
        let p = validate_nc(4, &[vec![1, 4], vec![2, 3]]).unwrap();
        assert_eq!(render_nc(&p), "+--------+\n|  +--+  |\n1  2  3  4\n");
    }

    #[test]
    fn linked_arcs_stack() {
        let p = validate_ncl(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(render_ncl(&p), "   +--+\n+--+  |\n1  2  3\n");
    }

    #[test]
    fn twelve_points() {
        let p = validate_ncl(
            12,
            &[
                vec![1, 4, 6, 9],
                vec![2, 3],
                vec![4, 5],
                vec![6, 7, 8],
                vec![10, 11],
                vec![11, 12],
            ],
        )
        .unwrap();
        let out = render_ncl(&p);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("+--------+-----+--------+"));
        assert!(lines[2].starts_with("1  2  3  4"));
    }

    #[test]
    fn trees() {
        assert_eq!(render_tree(&PlanarTree::leaf()), "o\n");
        assert_eq!(render_tree(&PlanarTree::chain(2)), "o\n|\no\n");
        assert_eq!(
            render_tree(&PlanarTree::elementary(3)),
            "o\n|--+\n|  |\no  o\n"
        );
        let t = BicolorPlanarTree::chain(&[Color::One, Color::Zero]);
        assert_eq!(render_bicolor(&t), "o\n|\no\n:\no\n");
        let t = BicolorPlanarTree::elementary(1, 1);
        assert_eq!(render_bicolor(&t), "o\n|--+\n|  :\no  o\n");
    }
}
