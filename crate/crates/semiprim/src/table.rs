//! Indexed element tables for groups small enough to enumerate.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A full element table: every group element as an image row in a flat
/// arena, with index 0 the identity, a hash index for lookups, and the BFS
/// derivation of each element from the generators.
pub struct ElementTable {
    degree: usize,
    n: usize,
    flat: Vec<u32>,
    index: HashMap<u64, Vec<u32>>,
    /// `(previous element, generator)` producing each element; the identity
    /// has `(0, u32::MAX)`.
    derivation: Vec<(u32, u32)>,
}

fn hash_slice(s: &[u32]) -> u64 {
    // FNV-1a
    let mut h: u64 = 0xcbf29ce484222325;
    for &x in s {
        h ^= x as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

impl ElementTable {
    pub fn build(g: &PermGroup, cap: u128) -> Result<ElementTable> {
        let order = g.order();
        if order > cap {
            return Err(Error::CapacityExceeded {
                what: "element table",
                needed: order,
                cap,
            });
        }
        let degree = g.degree();
        let n = order as usize;
        let mut table = ElementTable {
            degree,
            n: 0,
            flat: Vec::with_capacity(n * degree),
            index: HashMap::with_capacity(n * 2),
            derivation: Vec::with_capacity(n),
        };
        let ident: Vec<u32> = (0..degree as u32).collect();
        table.push_row(&ident, (0, u32::MAX));
        let mut i = 0u32;
        let mut buf = vec![0u32; degree];
        while (i as usize) < table.n {
            for (gi, gen) in g.generators().iter().enumerate() {
                {
                    let row = table.row(i);
                    for (p, &q) in row.iter().enumerate() {
                        buf[p] = gen.image(q);
                    }
                }
                if table.lookup(&buf).is_none() {
                    let b = buf.clone();
                    table.push_row(&b, (i, gi as u32));
                }
            }
            i += 1;
        }
        debug_assert_eq!(table.n as u128, order);
        Ok(table)
    }

    fn push_row(&mut self, row: &[u32], derivation: (u32, u32)) {
        let id = self.n as u32;
        self.flat.extend_from_slice(row);
        self.index.entry(hash_slice(row)).or_default().push(id);
        self.derivation.push(derivation);
        self.n += 1;
    }

    fn lookup(&self, row: &[u32]) -> Option<u32> {
        let h = hash_slice(row);
        self.index
            .get(&h)?
            .iter()
            .copied()
            .find(|&id| self.row(id) == row)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn row(&self, id: u32) -> &[u32] {
        let start = id as usize * self.degree;
        &self.flat[start..start + self.degree]
    }

    pub fn perm(&self, id: u32) -> Permutation {
        Permutation::from_images(self.row(id).to_vec()).expect("table rows are permutations")
    }

    pub fn index_of_slice(&self, row: &[u32]) -> Option<u32> {
        self.lookup(row)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.lookup(p.images())
    }

    pub fn derivation(&self, id: u32) -> (u32, u32) {
        self.derivation[id as usize]
    }

    /// `id_i · id_j` by composing rows and looking the product up.
    pub fn mul(&self, i: u32, j: u32) -> u32 {
        let (ri, rj) = (self.row(i), self.row(j));
        let prod: Vec<u32> = ri.iter().map(|&q| rj[q as usize]).collect();
        self.lookup(&prod).expect("table is closed under products")
    }

    pub fn inv(&self, i: u32) -> u32 {
        let ri = self.row(i);
        let mut inv = vec![0u32; self.degree];
        for (p, &q) in ri.iter().enumerate() {
            inv[q as usize] = p as u32;
        }
        self.lookup(&inv).expect("table is closed under inverses")
    }

    /// `g^{-1}·x·g` where `g` is given as an image row.
    pub fn conjugate_by_row(&self, x: u32, g_row: &[u32], g_inv_row: &[u32]) -> u32 {
        let rx = self.row(x);
        let conj: Vec<u32> = (0..self.degree)
            .map(|p| g_row[rx[g_inv_row[p] as usize] as usize])
            .collect();
        self.lookup(&conj).expect("table is closed under conjugation")
    }

    pub fn order_of(&self, id: u32) -> u64 {
        self.perm(id).order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(
            degree,
            gens.iter()
                .map(|s| Permutation::parse(s, degree).unwrap())
                .collect(),
        )
    }

    #[test]
    fn table_of_sym3() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let t = ElementTable::build(&s3, 100).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(t.row(0), &[0, 1, 2]);
        // closure and inverse sanity
        for i in 0..6 {
            let j = t.inv(i);
            assert_eq!(t.mul(i, j), 0);
        }
        // derivations rebuild each element
        for id in 1..6u32 {
            let (prev, gi) = t.derivation(id);
            let rebuilt = t.perm(prev).compose(&s3.generators()[gi as usize]);
            assert_eq!(rebuilt, t.perm(id));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        assert!(ElementTable::build(&a5, 59).is_err());
        assert_eq!(ElementTable::build(&a5, 60).unwrap().len(), 60);
    }

    #[test]
    fn conjugation_lookup() {
        let s4 = gp(4, &["(0 1 2 3)", "(0 1)"]);
        let t = ElementTable::build(&s4, 100).unwrap();
        let g = Permutation::parse("(0 1 2 3)", 4).unwrap();
        let ginv = g.inverse();
        let x = t.index_of(&Permutation::parse("(0 1)", 4).unwrap()).unwrap();
        let c = t.conjugate_by_row(x, g.images(), ginv.images());
        assert_eq!(t.perm(c), Permutation::parse("(1 2)", 4).unwrap());
    }
}
