use std::ops::Range;

use super::{ModelError, Result};

/// Deepest tree we build explicitly.
pub const MAX_TREE_DEPTH: u32 = 12;

/// The rooted binary tree truncated at depth `n`, in heap order: the root is
/// vertex 1 and the successors of `x` are `2x` and `2x + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeLevels {
    depth: u32,
}

/// Level of a heap-indexed vertex (`d(x, root)`).
pub fn level_of(x: u64) -> u32 {
    debug_assert!(x >= 1);
    63 - x.leading_zeros()
}

impl TreeLevels {
    pub fn new(depth: u32) -> Result<Self> {
        if depth > MAX_TREE_DEPTH {
            return Err(ModelError::DepthLimit {
                depth,
                max: MAX_TREE_DEPTH,
            });
        }
        Ok(TreeLevels { depth })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// `|V_n| = 2^(n+1) - 1`.
    pub fn vertex_count(&self) -> u64 {
        (1u64 << (self.depth + 1)) - 1
    }

    pub fn vertices(&self) -> Range<u64> {
        1..(1u64 << (self.depth + 1))
    }

    /// `W_m`, the vertices at distance `m` from the root.
    pub fn level(&self, m: u32) -> Range<u64> {
        debug_assert!(m <= self.depth);
        (1u64 << m)..(1u64 << (m + 1))
    }

    pub fn leaves(&self) -> Range<u64> {
        self.level(self.depth)
    }

    /// `S(x)`, or `None` for a leaf.
    pub fn successors(&self, x: u64) -> Option<[u64; 2]> {
        (level_of(x) < self.depth).then_some([2 * x, 2 * x + 1])
    }

    /// Vertices with successors, i.e. `V_(n-1)`.
    pub fn internal(&self) -> Range<u64> {
        1..(1u64 << self.depth)
    }

    /// Nearest-neighbour pairs `⟨x, y⟩` in `L_n`.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        self.internal().flat_map(|x| [(x, 2 * x), (x, 2 * x + 1)]).collect()
    }

    /// Next-nearest neighbours: sibling pairs sharing a parent.
    pub fn sibling_pairs(&self) -> Vec<(u64, u64)> {
        self.internal().map(|x| (2 * x, 2 * x + 1)).collect()
    }
}

pub fn build_levels(n: u32) -> Result<TreeLevels> {
    TreeLevels::new(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_one() {
        let t = build_levels(1).unwrap();
        assert_eq!(t.vertices().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(t.edges(), vec![(1, 2), (1, 3)]);
        assert_eq!(t.sibling_pairs(), vec![(2, 3)]);
    }

    #[test]
    fn depth_two_and_three() {
        let t = build_levels(2).unwrap();
        assert_eq!(t.vertex_count(), 7);
        assert_eq!(t.edges().len(), 6);
        assert_eq!(t.sibling_pairs().len(), 3);
        let t = build_levels(3).unwrap();
        assert_eq!(t.level(3).count(), 8);
        assert_eq!(t.vertex_count(), 15);
    }

    #[test]
    fn level_sizes_and_successors() {
        let t = build_levels(MAX_TREE_DEPTH).unwrap();
        for m in 0..=MAX_TREE_DEPTH {
            assert_eq!(t.level(m).count() as u64, 1 << m);
            assert!(t.level(m).all(|x| level_of(x) == m));
        }
        for x in t.internal() {
            let [y, z] = t.successors(x).unwrap();
            assert_eq!(level_of(y), level_of(x) + 1);
            assert_eq!(z, y + 1);
        }
        assert!(t.leaves().all(|x| t.successors(x).is_none()));
    }

    #[test]
    fn depth_limit() {
        assert_eq!(build_levels(13).unwrap_err().name(), "DepthLimit");
    }
}
