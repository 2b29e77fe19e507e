//! Permutation groups backed by deterministic stabilizer chains.
//!
//! The chain uses a fixed base-selection rule (smallest moved point first,
//! after any caller-preferred points), so orders, transversals and sifting
//! are reproducible across runs.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub(crate) struct ChainLevel {
    pub base: u32,
    /// Strong generators of this level's group (they fix all earlier base points).
    pub gens: Vec<Permutation>,
    /// Fundamental orbit of `base`, in BFS discovery order.
    pub orbit: Vec<u32>,
    /// Position of each point in `orbit`, `u32::MAX` if absent.
    pub orbit_pos: Vec<u32>,
    /// Schreier tree: per orbit position, (parent point, generator index).
    pub tree: Vec<(u32, u32)>,
}

impl ChainLevel {
    fn recompute_orbit(&mut self) {
        self.orbit.clear();
        self.orbit_pos.fill(u32::MAX);
        self.tree.clear();
        self.orbit.push(self.base);
        self.orbit_pos[self.base as usize] = 0;
        self.tree.push((self.base, u32::MAX));
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for (gi, g) in self.gens.iter().enumerate() {
                let q = g.image(p);
                if self.orbit_pos[q as usize] == u32::MAX {
                    self.orbit_pos[q as usize] = self.orbit.len() as u32;
                    self.orbit.push(q);
                    self.tree.push((p, gi as u32));
                }
            }
            i += 1;
        }
    }

    /// The transversal element mapping `base` to `p` (chain self-check:
    /// `base^u = p`).
    pub fn transversal(&self, p: u32, degree: usize) -> Permutation {
        let mut path = Vec::new();
        let mut q = p;
        while q != self.base {
            let pos = self.orbit_pos[q as usize] as usize;
            let (parent, gi) = self.tree[pos];
            path.push(gi);
            q = parent;
        }
        let mut u = Permutation::identity(degree);
        for &gi in path.iter().rev() {
            u = u.compose(&self.gens[gi as usize]);
        }
        u
    }
}

pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<ChainLevel>,
}

impl StabChain {
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Sifts `g` through levels `from..`, returning the residue and the level
    /// index where the sift got stuck (`levels.len()` if it ran through).
    pub fn sift_from(&self, from: usize, g: Permutation) -> (Permutation, usize) {
        let mut g = g;
        for i in from..self.levels.len() {
            let level = &self.levels[i];
            let p = g.image(level.base);
            if p == level.base {
                continue;
            }
            if level.orbit_pos[p as usize] == u32::MAX {
                return (g, i);
            }
            let u = level.transversal(p, self.degree);
            g = g.compose(&u.inverse());
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (residue, _) = self.sift_from(0, g.clone());
        residue.is_identity()
    }
}

fn pick_base(gens: &[Permutation], used: &[u32], preferred: &[u32], strict: bool) -> u32 {
    for &p in preferred {
        if used.contains(&p) {
            continue;
        }
        // Strict mode consumes every preferred point in order, even when the
        // current generators fix it; the resulting singleton levels keep the
        // base aligned with the caller's point list.
        if strict || gens.iter().any(|g| g.moves(p)) {
            return p;
        }
    }
    gens.iter()
        .filter_map(|g| g.smallest_moved_point())
        .min()
        .expect("no generator moves a point")
}

pub(crate) fn build_chain(
    degree: usize,
    gens: &[Permutation],
    preferred: &[u32],
    strict: bool,
    known_order: Option<u128>,
) -> StabChain {
    let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
    let mut chain = StabChain {
        degree,
        levels: Vec::new(),
    };
    if gens.is_empty() {
        return chain;
    }
    new_level(&mut chain, gens, preferred, strict);

    // The product of fundamental orbit lengths never exceeds the group
    // order, with equality exactly when the chain is complete; a caller who
    // knows the order lets verification stop as soon as it is reached.
    let done = |chain: &StabChain| known_order.is_some_and(|o| chain.order() == o);
    if done(&chain) {
        return chain;
    }

    // Verify levels from the deepest up; every inserted strong generator
    // sends verification back down to the deepest level it touched.
    let mut k = chain.levels.len() - 1;
    'outer: loop {
        let mut pi = 0;
        while pi < chain.levels[k].orbit.len() {
            let p = chain.levels[k].orbit[pi];
            let u_p = chain.levels[k].transversal(p, degree);
            let gen_count = chain.levels[k].gens.len();
            for gi in 0..gen_count {
                let s = &chain.levels[k].gens[gi];
                let q = s.image(p);
                let u_q = chain.levels[k].transversal(q, degree);
                let schreier = u_p.compose(s).compose(&u_q.inverse());
                if schreier.is_identity() {
                    continue;
                }
                let (residue, j) = chain.sift_from(k + 1, schreier);
                if residue.is_identity() {
                    continue;
                }
                // The residue fixes base[0..j); add it as a strong generator
                // on every level it belongs to and re-verify from level j.
                let j = if j == chain.levels.len() {
                    new_level(&mut chain, vec![residue.clone()], preferred, strict);
                    chain.levels.len() - 1
                } else {
                    j
                };
                for lvl in k + 1..=j {
                    chain.levels[lvl].gens.push(residue.clone());
                    chain.levels[lvl].recompute_orbit();
                }
                if done(&chain) {
                    return chain;
                }
                k = j;
                continue 'outer;
            }
            pi += 1;
        }
        if k == 0 {
            break;
        }
        k -= 1;
    }
    if let Some(o) = known_order {
        assert_eq!(chain.order(), o, "order hint does not match the group");
    }
    chain
}

fn new_level(chain: &mut StabChain, gens: Vec<Permutation>, preferred: &[u32], strict: bool) {
    let used: Vec<u32> = chain.levels.iter().map(|l| l.base).collect();
    let base = pick_base(&gens, &used, preferred, strict);
    let mut level = ChainLevel {
        base,
        gens,
        orbit: Vec::new(),
        orbit_pos: vec![u32::MAX; chain.degree],
        tree: Vec::new(),
    };
    level.recompute_orbit();
    chain.levels.push(level);
}

struct Inner {
    degree: usize,
    gens: Vec<Permutation>,
    chain: OnceLock<StabChain>,
    known_order: Option<u128>,
}

/// A permutation group given by generators, with a lazily built stabilizer
/// chain supplying order and membership.
///
/// Cloning is cheap and the value is immutable, so groups can be shared
/// freely between threads.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

impl PermGroup {
    /// Builds a group from generators, dropping identities and duplicates.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> PermGroup {
        let mut kept: Vec<Permutation> = Vec::new();
        let mut seen: std::collections::HashSet<Permutation> = std::collections::HashSet::new();
        for g in gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            if !g.is_identity() && seen.insert(g.clone()) {
                kept.push(g);
            }
        }
        PermGroup {
            inner: Arc::new(Inner {
                degree,
                gens: kept,
                chain: OnceLock::new(),
                known_order: None,
            }),
        }
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new())
    }

    /// A handle for the same generators with the order supplied in advance,
    /// so the chain verification can stop early. The hint is checked when
    /// the chain completes naturally; a lying hint smaller than the true
    /// order would be trusted, so this is reserved for orders that are
    /// forced (e.g. faithful homomorphic images).
    pub(crate) fn with_order_hint(&self, order: u128) -> PermGroup {
        PermGroup {
            inner: Arc::new(Inner {
                degree: self.inner.degree,
                gens: self.inner.gens.clone(),
                chain: OnceLock::new(),
                known_order: Some(order),
            }),
        }
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.gens.is_empty()
    }

    pub(crate) fn chain(&self) -> &StabChain {
        self.inner.chain.get_or_init(|| {
            build_chain(
                self.inner.degree,
                &self.inner.gens,
                &[],
                false,
                self.inner.known_order,
            )
        })
    }

    /// Builds a fresh chain whose base starts with the given points.
    pub(crate) fn chain_with_base(&self, preferred: &[u32]) -> StabChain {
        build_chain(
            self.inner.degree,
            &self.inner.gens,
            preferred,
            false,
            self.inner.known_order,
        )
    }

    /// Builds a fresh chain whose base is exactly the given points (padded
    /// with singleton levels where necessary), followed by default choices.
    pub(crate) fn chain_with_strict_base(&self, base: &[u32]) -> StabChain {
        build_chain(
            self.inner.degree,
            &self.inner.gens,
            base,
            true,
            self.inner.known_order,
        )
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.inner.degree {
            return false;
        }
        if g.is_identity() {
            return true;
        }
        self.chain().contains(g)
    }

    /// True when every generator of `other` is a member of `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    pub fn same_group_as(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree()
            && self.order() == other.order()
            && self.contains_group(other)
    }

    pub fn orbit(&self, p: u32) -> Result<Vec<u32>> {
        if p as usize >= self.inner.degree {
            return Err(Error::PointOutOfRange {
                point: p as u64,
                degree: self.inner.degree,
            });
        }
        let mut seen = vec![false; self.inner.degree];
        let mut orbit = vec![p];
        seen[p as usize] = true;
        let mut i = 0;
        while i < orbit.len() {
            for g in &self.inner.gens {
                let q = g.image(orbit[i]);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    orbit.push(q);
                }
            }
            i += 1;
        }
        Ok(orbit)
    }

    /// Orbit partition of the full point set, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.inner.degree];
        let mut out = Vec::new();
        for p in 0..self.inner.degree as u32 {
            if seen[p as usize] {
                continue;
            }
            let orbit = self.orbit(p).expect("in range");
            for &q in &orbit {
                seen[q as usize] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.inner.degree <= 1 || self.orbit(0).expect("in range").len() == self.inner.degree
    }

    /// Point stabilizer via a chain rebased at `p` (orbit-stabilizer gives
    /// `|G| = |G_p| · |p^G|`).
    pub fn point_stabilizer(&self, p: u32) -> Result<PermGroup> {
        if p as usize >= self.inner.degree {
            return Err(Error::PointOutOfRange {
                point: p as u64,
                degree: self.inner.degree,
            });
        }
        if self.inner.gens.iter().all(|g| !g.moves(p)) {
            return Ok(self.clone());
        }
        let chain = self.chain_with_base(&[p]);
        debug_assert_eq!(chain.levels[0].base, p);
        let gens = if chain.levels.len() > 1 {
            chain.levels[1].gens.clone()
        } else {
            Vec::new()
        };
        Ok(PermGroup::new(self.inner.degree, gens))
    }

    /// `{is_transitive, is_semiregular, is_regular}` of the realized action.
    ///
    /// Semiregularity is equivalent to every orbit having length `|G|`.
    pub fn action_predicates(&self) -> ActionPredicates {
        let order = self.order();
        let orbits = self.orbits();
        let is_transitive = orbits.len() == 1;
        let is_semiregular = orbits.iter().all(|o| o.len() as u128 == order);
        ActionPredicates {
            is_transitive,
            is_semiregular,
            is_regular: is_transitive && is_semiregular,
        }
    }

    /// Enumerates all elements in deterministic BFS order (identity first).
    pub fn elements_capped(&self, cap: u128) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > cap {
            return Err(Error::CapacityExceeded {
                what: "element enumeration",
                needed: order,
                cap,
            });
        }
        let mut elements = vec![Permutation::identity(self.inner.degree)];
        let mut seen: std::collections::HashSet<Permutation> =
            elements.iter().cloned().collect();
        let mut i = 0;
        while i < elements.len() {
            for g in &self.inner.gens {
                let h = elements[i].compose(g);
                if !seen.contains(&h) {
                    seen.insert(h.clone());
                    elements.push(h);
                }
            }
            i += 1;
        }
        debug_assert_eq!(elements.len() as u128, order);
        Ok(elements)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, {} gens)",
            self.inner.degree,
            self.inner.gens.len()
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActionPredicates {
    pub is_transitive: bool,
    pub is_semiregular: bool,
    pub is_regular: bool,
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
    fn alt5_order() {
        let g = gp(5, &["(0 1 2)", "(2 3 4)"]);
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn dihedral_30_order() {
        let g = gp(
            15,
            &[
                "(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14)",
                "(1 14)(2 13)(3 12)(4 11)(5 10)(6 9)(7 8)",
            ],
        );
        assert_eq!(g.order(), 30);
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::trivial(7);
        assert_eq!(g.order(), 1);
        assert!(g.contains(&Permutation::identity(7)));
    }

    #[test]
    fn orbits_examples() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        assert_eq!(s3.orbit(0).unwrap().len(), 3);

        let g = gp(4, &["(0 1)"]);
        let orbits = g.orbits();
        assert_eq!(orbits.len(), 3);
        assert_eq!(orbits[0].len(), 2);

        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        assert_eq!(a5.orbits().len(), 1);
        assert_eq!(a5.orbit(0).unwrap().len(), 5);
    }

    #[test]
    fn point_stabilizer_examples() {
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let stab = a5.point_stabilizer(0).unwrap();
        assert_eq!(stab.order(), 12);
        assert_eq!(a5.order(), stab.order() * a5.orbit(0).unwrap().len() as u128);

        let c5 = gp(5, &["(0 1 2 3 4)"]);
        for p in 0..5 {
            assert_eq!(c5.point_stabilizer(p).unwrap().order(), 1);
        }

        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let stab2 = s3.point_stabilizer(2).unwrap();
        assert_eq!(stab2.order(), 2);
        assert!(stab2.contains(&Permutation::parse("(0 1)", 3).unwrap()));
    }

    #[test]
    fn action_predicates_examples() {
        let c5 = gp(5, &["(0 1 2 3 4)"]);
        let p = c5.action_predicates();
        assert!(p.is_transitive && p.is_semiregular && p.is_regular);

        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let p = s3.action_predicates();
        assert!(p.is_transitive && !p.is_semiregular);

        let fpf = gp(4, &["(0 1)(2 3)"]);
        let p = fpf.action_predicates();
        assert!(!p.is_transitive && p.is_semiregular && !p.is_regular);
    }

    #[test]
    fn orbit_stabilizer_on_every_point() {
        let g = gp(6, &["(0 1 2 3 4 5)", "(1 5)(2 4)"]);
        for p in 0..6 {
            let stab = g.point_stabilizer(p).unwrap();
            assert_eq!(g.order(), stab.order() * g.orbit(p).unwrap().len() as u128);
        }
    }

    #[test]
    fn chain_transversals_map_base_to_orbit_point() {
        let g = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let chain = g.chain();
        for level in &chain.levels {
            for &p in &level.orbit {
                let u = level.transversal(p, 5);
                assert_eq!(u.image(level.base), p);
            }
        }
    }

    #[test]
    fn membership_by_sifting() {
        let g = gp(5, &["(0 1 2)", "(2 3 4)"]);
        assert!(g.contains(&Permutation::parse("(0 1)(2 3)", 5).unwrap()));
        assert!(!g.contains(&Permutation::parse("(0 1)", 5).unwrap()));
        let s4 = gp(4, &["(0 1 2 3)", "(0 1)"]);
        assert_eq!(s4.order(), 24);
        assert!(s4.contains(&Permutation::parse("(0 3)", 4).unwrap()));
    }

    #[test]
    fn elements_enumeration() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let elements = s3.elements_capped(10).unwrap();
        assert_eq!(elements.len(), 6);
        assert!(elements[0].is_identity());
        assert!(s3.elements_capped(5).is_err());
    }
}
