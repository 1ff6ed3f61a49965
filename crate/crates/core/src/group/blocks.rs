use super::PermGroup;
use crate::error::{Error, Result};

/// A G-invariant partition of the points into equal-size blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    /// Block ids are assigned in order of each block's smallest point.
    pub block_of: Vec<usize>,
    pub num_blocks: usize,
    pub block_size: usize,
}

impl BlockSystem {
    /// Blocks as sorted point lists, ordered by smallest point.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::with_capacity(self.block_size); self.num_blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// One block, or singletons.
    pub fn is_trivial(&self) -> bool {
        self.num_blocks == 1 || self.block_size == 1
    }

    pub fn is_invariant_under(&self, group: &PermGroup) -> bool {
        group.generators().iter().all(|g| {
            self.blocks().iter().all(|block| {
                let target = self.block_of[g.image(block[0])];
                block.iter().all(|&x| self.block_of[g.image(x)] == target)
            })
        })
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if already merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

impl PermGroup {
    /// Finest block system with `a` and `b` in one block (Atkinson's
    /// union-find closure).
    pub fn minimal_block_system(&self, a: usize, b: usize) -> Result<BlockSystem> {
        self.check_point(a)?;
        self.check_point(b)?;
        if a == b {
            return Err(Error::InvalidParameter("seed points must be distinct".into()));
        }
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let n = self.degree;
        let mut uf = UnionFind::new(n);
        uf.union(a, b);
        let mut pending = vec![(a, b)];
        while let Some((x, y)) = pending.pop() {
            for g in &self.generators {
                let (gx, gy) = (g.image(x), g.image(y));
                if uf.union(gx, gy) {
                    pending.push((gx, gy));
                }
            }
        }
        let mut id_of_root = vec![usize::MAX; n];
        let mut block_of = vec![0; n];
        let mut num_blocks = 0;
        for x in 0..n {
            let r = uf.find(x);
            if id_of_root[r] == usize::MAX {
                id_of_root[r] = num_blocks;
                num_blocks += 1;
            }
            block_of[x] = id_of_root[r];
        }
        Ok(BlockSystem {
            block_of,
            num_blocks,
            block_size: n / num_blocks,
        })
    }

    /// Transitive with no non-trivial block system. Degree 1 is not primitive.
    pub fn is_primitive(&self) -> bool {
        if self.degree == 1 || !self.is_transitive() {
            return false;
        }
        (1..self.degree).all(|x| {
            self.minimal_block_system(0, x)
                .map(|bs| bs.num_blocks == 1)
                .unwrap_or(false)
        })
    }

    /// A non-trivial block system if one exists.
    pub fn nontrivial_block_system(&self) -> Option<BlockSystem> {
        if self.degree <= 2 || !self.is_transitive() {
            return None;
        }
        (1..self.degree)
            .map(|x| self.minimal_block_system(0, x).expect("transitive"))
            .find(|bs| bs.num_blocks > 1)
    }
}
