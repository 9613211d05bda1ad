//! Free (unlabeled) trees generated as canonical level sequences.
//!
//! Rooted trees are stepped through in reverse lexicographic order of their
//! preorder level sequences (Beyer–Hedetniemi successor); sequences that are
//! not the canonical centroid-rooted form of a free tree are skipped with the
//! jump rule of Wright, Richmond, Odlyzko and McKay, so each free tree is
//! produced exactly once.

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_TREE_ORDER: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("tree order {0} outside the supported range 1..=18")]
pub struct TreeOrderError(pub usize);

/// Iterator over canonical level sequences of all free trees of one order.
#[derive(Debug, Clone)]
pub struct LevelSequences {
    layout: Vec<u8>,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl LevelSequences {
    pub fn new(n: usize) -> Result<Self, TreeOrderError> {
        if !(1..=MAX_TREE_ORDER).contains(&n) {
            return Err(TreeOrderError(n));
        }
        // path rooted at its center
        let layout: Vec<u8> = if n == 1 {
            vec![0]
        } else {
            (0..=n / 2).chain(1..n.div_ceil(2)).map(|x| x as u8).collect()
        };
        Ok(LevelSequences {
            layout,
            state: State::Fresh,
        })
    }
}

/// Advances to the next rooted tree by rewriting the suffix from `p`.
/// Returns false when there is none.
fn next_rooted(layout: &mut [u8], p: Option<usize>) -> bool {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while p > 0 && layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return false;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    for i in p..layout.len() {
        layout[i] = layout[i - p + q];
    }
    true
}

/// Index of the second vertex at level 1, i.e. where the leftmost subtree of
/// the root ends.
fn left_subtree_end(layout: &[u8]) -> usize {
    layout
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i)
}

/// Whether the leftmost subtree of the root is no larger than the rest of
/// the tree (height first, then size, then lexicographic order).
fn is_canonical(layout: &[u8]) -> bool {
    let m = left_subtree_end(layout);
    let left_height = layout[1..m].iter().max().map_or(0, |&h| h - 1);
    let rest_height = layout[m..].iter().copied().max().unwrap_or(0);
    if rest_height != left_height {
        return rest_height > left_height;
    }
    let left_len = m - 1;
    let rest_len = layout.len() - m + 1;
    if left_len != rest_len {
        return left_len < rest_len;
    }
    // left = layout[1..m] - 1, rest = [0] ++ layout[m..]
    let left = layout[1..m].iter().map(|&l| l - 1);
    let rest = std::iter::once(0).chain(layout[m..].iter().copied());
    left.le(rest)
}

/// Replaces a non-canonical layout with the next candidate in one jump.
fn jump(layout: &mut [u8]) {
    let p = left_subtree_end(layout) - 1;
    let needs_tail = layout[p] > 2;
    next_rooted(layout, Some(p));
    if needs_tail {
        let m = left_subtree_end(layout);
        let h = layout[1..m].iter().max().map_or(0, |&h| h - 1) as usize;
        let len = layout.len();
        for (i, slot) in layout[len - (h + 1)..].iter_mut().enumerate() {
            *slot = (i + 1) as u8;
        }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                if self.layout.len() <= 2 {
                    self.state = State::Done;
                    return Some(self.layout.clone());
                }
            }
            State::Running => {
                if !next_rooted(&mut self.layout, None) {
                    self.state = State::Done;
                    return None;
                }
            }
        }
        if !is_canonical(&self.layout) {
            jump(&mut self.layout);
        }
        Some(self.layout.clone())
    }
}

/// Builds the tree whose preorder depths are `levels`.
pub fn tree_from_levels(levels: &[u8]) -> Graph {
    let mut g = Graph::empty(levels.len());
    let mut stack: Vec<usize> = Vec::with_capacity(levels.len());
    for (v, &l) in levels.iter().enumerate() {
        stack.truncate(l as usize);
        if let Some(&parent) = stack.last() {
            g.link(parent, v);
        }
        stack.push(v);
    }
    g
}

/// Every free tree of order `n` exactly once.
pub fn free_trees(n: usize) -> Result<impl Iterator<Item = Graph>, TreeOrderError> {
    Ok(LevelSequences::new(n)?.map(|l| tree_from_levels(&l)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_four_has_path_and_star() {
        let trees: Vec<Graph> = free_trees(4).unwrap().collect();
        assert_eq!(trees.len(), 2);
        let mut diameters: Vec<_> = trees.iter().map(|t| t.diameter().unwrap()).collect();
        diameters.sort();
        assert_eq!(diameters, vec![2, 3]);
    }

    #[test]
    fn tiny_orders() {
        assert_eq!(LevelSequences::new(1).unwrap().count(), 1);
        assert_eq!(LevelSequences::new(2).unwrap().count(), 1);
        assert_eq!(LevelSequences::new(3).unwrap().count(), 1);
        assert!(LevelSequences::new(0).is_err());
        assert!(LevelSequences::new(19).is_err());
    }

    #[test]
    fn levels_to_tree() {
        let g = tree_from_levels(&[0, 1, 2, 1]);
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2)]);
    }
}
