//! Block systems and primitivity for transitive groups.

use crate::error::{Error, Result};
use crate::group::PermGroup;

/// A `G`-invariant partition of the point set.
#[derive(Clone, Debug)]
pub struct BlockSystem {
    pub degree: usize,
    /// Block index of each point; indices are dense and ordered by the
    /// smallest point in each block.
    pub block_id: Vec<u32>,
    pub block_count: usize,
}

impl BlockSystem {
    pub fn is_trivial(&self) -> bool {
        self.block_count == 1 || self.block_count == self.degree
    }

    pub fn blocks(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.block_count];
        for (p, &b) in self.block_id.iter().enumerate() {
            out[b as usize].push(p as u32);
        }
        out
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = x;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }
    /// Union by smaller representative; returns the pair of old reps when a
    /// real merge happened.
    fn union(&mut self, a: u32, b: u32) -> Option<(u32, u32)> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
        Some((ra, rb))
    }
}

/// The finest block system in which `alpha` and `beta` share a block
/// (the standard union-find block algorithm).
pub fn minimal_blocks(g: &PermGroup, alpha: u32, beta: u32) -> Result<BlockSystem> {
    let degree = g.degree();
    if !g.is_transitive() || degree < 2 {
        return Err(Error::NotTransitive);
    }
    for p in [alpha, beta] {
        if p as usize >= degree {
            return Err(Error::PointOutOfRange {
                point: p as u64,
                degree,
            });
        }
    }
    let mut uf = UnionFind::new(degree);
    let mut queue = Vec::new();
    if let Some(pair) = uf.union(alpha, beta) {
        queue.push(pair);
    }
    while let Some((a, b)) = queue.pop() {
        for s in g.generators() {
            if let Some(pair) = uf.union(s.image(a), s.image(b)) {
                queue.push(pair);
            }
        }
    }
    let mut block_id = vec![u32::MAX; degree];
    let mut count = 0u32;
    for p in 0..degree as u32 {
        let r = uf.find(p);
        if block_id[r as usize] == u32::MAX {
            block_id[r as usize] = count;
            count += 1;
        }
        block_id[p as usize] = block_id[r as usize];
    }
    Ok(BlockSystem {
        degree,
        block_id,
        block_count: count as usize,
    })
}

/// A transitive group is primitive when every seed pair `{0, beta}` collapses
/// to the one-block system.
pub fn is_primitive(g: &PermGroup) -> Result<bool> {
    if !g.is_transitive() || g.degree() < 2 {
        return Err(Error::NotTransitive);
    }
    for beta in 1..g.degree() as u32 {
        if minimal_blocks(g, 0, beta)?.block_count != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn gp(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(
            degree,
            gens.iter()
                .map(|s| Permutation::parse(s, degree).unwrap())
                .collect(),
        )
    }

    #[test]
    fn sym4_is_primitive() {
        let s4 = gp(4, &["(0 1 2 3)", "(0 1)"]);
        assert!(is_primitive(&s4).unwrap());
    }

    #[test]
    fn d8_antipodal_blocks() {
        let d8 = gp(4, &["(0 1 2 3)", "(1 3)"]);
        let blocks = minimal_blocks(&d8, 0, 2).unwrap();
        assert_eq!(blocks.block_count, 2);
        assert_eq!(blocks.block_id[0], blocks.block_id[2]);
        assert_eq!(blocks.block_id[1], blocks.block_id[3]);
        assert!(!is_primitive(&d8).unwrap());
    }

    #[test]
    fn c6_regular_is_imprimitive() {
        let c6 = gp(6, &["(0 1 2 3 4 5)"]);
        assert!(!is_primitive(&c6).unwrap());
        // both the C2 and C3 subgroup systems show up from suitable seeds
        assert_eq!(minimal_blocks(&c6, 0, 3).unwrap().block_count, 3);
        assert_eq!(minimal_blocks(&c6, 0, 2).unwrap().block_count, 2);
    }

    #[test]
    fn intransitive_is_rejected() {
        let g = gp(4, &["(0 1)"]);
        assert!(matches!(minimal_blocks(&g, 0, 1), Err(Error::NotTransitive)));
    }

    #[test]
    fn generators_permute_blocks() {
        let d12 = gp(6, &["(0 1 2 3 4 5)", "(1 5)(2 4)"]);
        let sys = minimal_blocks(&d12, 0, 3).unwrap();
        for g in d12.generators() {
            for p in 0..6u32 {
                for q in 0..6u32 {
                    if sys.block_id[p as usize] == sys.block_id[q as usize] {
                        assert_eq!(
                            sys.block_id[g.image(p) as usize],
                            sys.block_id[g.image(q) as usize]
                        );
                    }
                }
            }
        }
    }
}
