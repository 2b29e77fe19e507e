//! Backtracking isomorphism search and the permutational-isomorphism test.
//!
//! Two coset actions are permutationally isomorphic exactly when there is a
//! group isomorphism between the ambient groups carrying one designated
//! stabilizer onto a conjugate of the other, so the action-level test
//! reduces to a constrained search over generator images. Candidates are
//! filtered by conjugacy-class invariants and word orders, and every
//! surviving assignment is certified through the graph subgroup.

use std::sync::Arc;

use crate::action::TransitiveAction;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hom::Homomorphism;
use crate::lattice::conjugacy_classes;
use crate::perm::Permutation;
use crate::subgroup::{derived_subgroup, join};
use crate::table::ElementTable;

/// Result of the permutational-isomorphism test.
#[derive(Clone)]
pub enum IsoOutcome {
    /// An isomorphism of ambient groups mapping the designated stabilizer of
    /// the source onto a conjugate of the target's.
    ProvenYes(Arc<Homomorphism>),
    ProvenNo,
    /// Above the effort cap and all computed invariant certificates agree.
    Consistent,
    /// The question could not be settled within the configured caps.
    Capacity,
}

impl IsoOutcome {
    pub fn is_proven_yes(&self) -> bool {
        matches!(self, IsoOutcome::ProvenYes(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            IsoOutcome::ProvenYes(_) => "proven_yes",
            IsoOutcome::ProvenNo => "proven_no",
            IsoOutcome::Consistent => "consistent",
            IsoOutcome::Capacity => "capacity",
        }
    }
}

impl std::fmt::Debug for IsoOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

pub(crate) fn derived_series_orders(g: &PermGroup) -> Vec<u128> {
    let mut orders = vec![g.order()];
    let mut current = g.clone();
    loop {
        let next = derived_subgroup(&current);
        if next.order() == current.order() {
            break;
        }
        orders.push(next.order());
        current = next;
        if current.order() == 1 {
            break;
        }
    }
    orders
}

struct Search<'a> {
    dst: &'a PermGroup,
    dst_table: &'a ElementTable,
    seq: Vec<Permutation>,
    /// Partial-subgroup orders of the source generating sequence.
    partial_orders: Vec<u128>,
    /// Candidate image element ids per level.
    candidates: Vec<Vec<u32>>,
    /// Word-order fingerprints against earlier sequence entries.
    word_orders: Vec<Vec<(u64, u64)>>,
    leaf: &'a dyn Fn(&Homomorphism) -> bool,
}

impl Search<'_> {
    fn run(&self) -> Result<Option<Homomorphism>> {
        let mut imgs: Vec<Permutation> = Vec::with_capacity(self.seq.len());
        self.step(0, &mut imgs)
    }

    fn step(&self, level: usize, imgs: &mut Vec<Permutation>) -> Result<Option<Homomorphism>> {
        if level == self.seq.len() {
            let image = PermGroup::new(self.dst.degree(), imgs.clone());
            if image.order() != self.dst.order() {
                return Ok(None);
            }
            let src_partial = PermGroup::new(self.seq[0].degree(), self.seq.clone());
            let Ok(hom) = Homomorphism::from_images(&src_partial, self.dst, imgs.clone()) else {
                return Ok(None);
            };
            if (self.leaf)(&hom) {
                return Ok(Some(hom));
            }
            return Ok(None);
        }
        'candidate: for &id in &self.candidates[level] {
            let x = self.dst_table.perm(id);
            for (j, prev) in imgs.iter().enumerate() {
                let (w1, w2) = self.word_orders[level][j];
                if prev.compose(&x).order() != w1 {
                    continue 'candidate;
                }
                if Permutation::commutator(prev, &x).order() != w2 {
                    continue 'candidate;
                }
            }
            if level > 0 {
                // The partial map must be an injective homomorphism of the
                // partial subgroup; both orders must match the source side.
                let mut partial = imgs.clone();
                partial.push(x.clone());
                let img_group = PermGroup::new(self.dst.degree(), partial.clone());
                if img_group.order() != self.partial_orders[level] {
                    continue;
                }
                let src_partial = PermGroup::new(
                    self.seq[0].degree(),
                    self.seq[..=level].to_vec(),
                );
                let graph_gens: Vec<Permutation> = self.seq[..=level]
                    .iter()
                    .zip(&partial)
                    .map(|(s, t)| disjoint_pair(s, t))
                    .collect();
                let graph = PermGroup::new(
                    self.seq[0].degree() + self.dst.degree(),
                    graph_gens,
                );
                if graph.order() != src_partial.order() {
                    continue;
                }
            }
            imgs.push(x);
            if let Some(hit) = self.step(level + 1, imgs)? {
                return Ok(Some(hit));
            }
            imgs.pop();
        }
        Ok(None)
    }
}

fn disjoint_pair(a: &Permutation, b: &Permutation) -> Permutation {
    let (da, db) = (a.degree(), b.degree());
    let mut images: Vec<u32> = Vec::with_capacity(da + db);
    images.extend(a.images().iter().copied());
    images.extend(b.images().iter().map(|&q| q + da as u32));
    Permutation::from_images(images).expect("disjoint union")
}

/// Core search: an isomorphism `src -> dst` accepted by `leaf`.
///
/// With `inner_reduction`, images of the first generator are restricted to
/// one representative per conjugacy class; this is sound whenever `leaf` is
/// invariant under post-composition with inner automorphisms of `dst`.
pub(crate) fn search_isomorphism(
    src: &PermGroup,
    dst: &PermGroup,
    inner_reduction: bool,
    leaf: &dyn Fn(&Homomorphism) -> bool,
) -> Result<Option<Homomorphism>> {
    if src.order() != dst.order() {
        return Ok(None);
    }
    if src.order() == 1 {
        let hom = Homomorphism::from_images(src, dst, vec![])?;
        return Ok(if leaf(&hom) { Some(hom) } else { None });
    }
    let order = src.order();
    let src_table = ElementTable::build(src, order)?;
    let dst_table = ElementTable::build(dst, order)?;
    let src_classes = conjugacy_classes(&src_table, src);
    let dst_classes = conjugacy_classes(&dst_table, dst);

    // Class invariants must agree as multisets.
    let inv = |table: &ElementTable, classes: &crate::lattice::ConjugacyClasses| {
        let mut v: Vec<(u64, u64)> = classes
            .reps
            .iter()
            .zip(&classes.sizes)
            .map(|(&r, &s)| (table.order_of(r), s))
            .collect();
        v.sort_unstable();
        v
    };
    if inv(&src_table, &src_classes) != inv(&dst_table, &dst_classes) {
        return Ok(None);
    }

    // Greedy generating sequence, most constrained (smallest class) first.
    let mut pool: Vec<(u64, usize, Permutation)> = src
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let id = src_table.index_of(g).expect("generator in table");
            let class = src_classes.class_of[id as usize];
            (src_classes.sizes[class as usize], i, g.clone())
        })
        .collect();
    pool.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut seq: Vec<Permutation> = Vec::new();
    let mut partial_orders: Vec<u128> = Vec::new();
    let mut span = PermGroup::trivial(src.degree());
    for (_, _, g) in &pool {
        if span.contains(g) {
            continue;
        }
        span = join(&span, &PermGroup::new(src.degree(), vec![g.clone()]))?;
        seq.push(g.clone());
        partial_orders.push(span.order());
        if span.order() == order {
            break;
        }
    }
    debug_assert_eq!(span.order(), order);

    // Per-level candidate ids in dst, matched by class invariant.
    let mut candidates: Vec<Vec<u32>> = Vec::with_capacity(seq.len());
    for (li, g) in seq.iter().enumerate() {
        let id = src_table.index_of(g).expect("generator in table");
        let class = src_classes.class_of[id as usize] as usize;
        let key = (src_table.order_of(src_classes.reps[class]), src_classes.sizes[class]);
        let mut cands: Vec<u32> = Vec::new();
        for (ci, (&rep, &size)) in dst_classes
            .reps
            .iter()
            .zip(&dst_classes.sizes)
            .enumerate()
        {
            if (dst_table.order_of(rep), size) != key {
                continue;
            }
            if li == 0 && inner_reduction {
                cands.push(rep);
            } else {
                cands.extend(dst_classes.members(ci as u32));
            }
        }
        if cands.is_empty() {
            return Ok(None);
        }
        candidates.push(cands);
    }

    // Word-order fingerprints on the source side.
    let word_orders: Vec<Vec<(u64, u64)>> = seq
        .iter()
        .enumerate()
        .map(|(i, g)| {
            seq[..i]
                .iter()
                .map(|prev| {
                    (
                        prev.compose(g).order(),
                        Permutation::commutator(prev, g).order(),
                    )
                })
                .collect()
        })
        .collect();

    let search = Search {
        dst,
        dst_table: &dst_table,
        seq,
        partial_orders,
        candidates,
        word_orders,
        leaf,
    };
    search.run()
}

/// Re-expresses a found isomorphism on the caller's generator lists.
fn reexpress(hom: &Homomorphism, src: &PermGroup, dst: &PermGroup) -> Result<Homomorphism> {
    let images: Vec<Permutation> = src.generators().iter().map(|g| hom.apply(g)).collect();
    Homomorphism::from_images(src, dst, images)
}

/// Unconstrained group-isomorphism search, gated by the effort cap.
pub fn group_isomorphism(
    src: &PermGroup,
    dst: &PermGroup,
    effort_cap: u128,
) -> Result<Option<Homomorphism>> {
    if src.order() != dst.order() {
        return Ok(None);
    }
    if src.order() > effort_cap {
        return Err(Error::CapacityExceeded {
            what: "isomorphism search",
            needed: src.order(),
            cap: effort_cap,
        });
    }
    match search_isomorphism(src, dst, true, &|_| true)? {
        Some(hom) => Ok(Some(reexpress(&hom, src, dst)?)),
        None => Ok(None),
    }
}

/// Permutational isomorphism of two transitive actions.
///
/// Below the effort cap the answer is exact; above it, invariant
/// certificates (order, degree, stabilizer order, derived series orders,
/// and conjugacy-class size multisets when enumerable) decide between
/// `ProvenNo` and `Consistent`.
pub fn is_perm_isomorphic(
    a: &TransitiveAction,
    b: &TransitiveAction,
    effort_cap: u128,
) -> Result<IsoOutcome> {
    if a.group_order() != b.group_order()
        || a.degree() != b.degree()
        || a.stab_order() != b.stab_order()
    {
        return Ok(IsoOutcome::ProvenNo);
    }
    // Fast path: literally the same action.
    if a.ambient().degree() == b.ambient().degree()
        && a.ambient().same_group_as(b.ambient())
        && a.stab().same_group_as(b.stab())
    {
        let hom = Homomorphism::from_images(
            a.ambient(),
            b.ambient(),
            a.ambient().generators().to_vec(),
        )?;
        return Ok(IsoOutcome::ProvenYes(Arc::new(hom)));
    }

    let order = a.group_order();
    if order > effort_cap {
        if derived_series_orders(a.ambient()) != derived_series_orders(b.ambient()) {
            return Ok(IsoOutcome::ProvenNo);
        }
        if order <= a.caps().order_cap {
            let ta = ElementTable::build(a.ambient(), order)?;
            let tb = ElementTable::build(b.ambient(), order)?;
            let ca = conjugacy_classes(&ta, a.ambient());
            let cb = conjugacy_classes(&tb, b.ambient());
            let mut ka: Vec<(u64, u64)> = ca
                .reps
                .iter()
                .zip(&ca.sizes)
                .map(|(&r, &s)| (ta.order_of(r), s))
                .collect();
            let mut kb: Vec<(u64, u64)> = cb
                .reps
                .iter()
                .zip(&cb.sizes)
                .map(|(&r, &s)| (tb.order_of(r), s))
                .collect();
            ka.sort_unstable();
            kb.sort_unstable();
            if ka != kb {
                return Ok(IsoOutcome::ProvenNo);
            }
        }
        return Ok(IsoOutcome::Consistent);
    }

    // The stabilizer condition is tested through fixed points of the image
    // of the source stabilizer in the realized target action: a point is
    // fixed exactly when the image lands inside a conjugate of b's
    // stabilizer.
    let Ok(b_realized) = b.realize() else {
        return Ok(IsoOutcome::Capacity);
    };
    let stab_gens = a.stab().generators().to_vec();
    let leaf = move |hom: &Homomorphism| -> bool {
        let realized: Vec<Permutation> = stab_gens
            .iter()
            .map(|h| b_realized.hom.apply(&hom.apply(h)))
            .collect();
        let deg = b_realized.image.degree() as u32;
        (0..deg).any(|p| realized.iter().all(|t| !t.moves(p)))
    };
    match search_isomorphism(a.ambient(), b.ambient(), true, &leaf)? {
        Some(hom) => Ok(IsoOutcome::ProvenYes(Arc::new(reexpress(
            &hom,
            a.ambient(),
            b.ambient(),
        )?))),
        None => Ok(IsoOutcome::ProvenNo),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::make_action;
    use crate::config::Caps;

    fn gp(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(
            degree,
            gens.iter()
                .map(|s| Permutation::parse(s, degree).unwrap())
                .collect(),
        )
    }

    fn d30_action() -> TransitiveAction {
        let g = gp(
            15,
            &[
                "(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14)",
                "(1 14)(2 13)(3 12)(4 11)(5 10)(6 9)(7 8)",
            ],
        );
        let h = g.point_stabilizer(0).unwrap();
        make_action(&g, &h, Caps::default()).unwrap()
    }

    #[test]
    fn self_isomorphism_is_identity_fast_path() {
        let a = d30_action();
        let out = is_perm_isomorphic(&a, &a, 100_000).unwrap();
        assert!(out.is_proven_yes());
    }

    #[test]
    fn degree_mismatch_is_proven_no() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let h = gp(3, &["(0 1)"]);
        let a = make_action(&s3, &h, Caps::default()).unwrap();
        let c6 = gp(6, &["(0 1 2 3 4 5)"]);
        let b = make_action(&c6, &PermGroup::trivial(6), Caps::default()).unwrap();
        assert!(matches!(
            is_perm_isomorphic(&a, &b, 100_000).unwrap(),
            IsoOutcome::ProvenNo
        ));
    }

    #[test]
    fn isomorphic_but_differently_realized_dihedral() {
        // D30 on 15 points, once with the natural generators and once with
        // relabeled points.
        let a = d30_action();
        let relabel = Permutation::parse("(0 7)(1 9)(2 4)(3 12)(5 14)(6 8)", 15).unwrap();
        let g2 = PermGroup::new(
            15,
            a.ambient()
                .generators()
                .iter()
                .map(|g| g.conjugate(&relabel))
                .collect(),
        );
        let h2 = g2.point_stabilizer(relabel.image(0)).unwrap();
        let b = make_action(&g2, &h2, Caps::default()).unwrap();
        let out = is_perm_isomorphic(&a, &b, 100_000).unwrap();
        assert!(out.is_proven_yes());
        if let IsoOutcome::ProvenYes(hom) = out {
            assert_eq!(hom.kernel().order(), 1);
            assert_eq!(hom.image().order(), 30);
        }
    }

    #[test]
    fn sym3_action_vs_c6_regular() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let h = gp(3, &["(0 1)"]);
        let a = make_action(&s3, &h, Caps::default()).unwrap();
        let c6 = gp(6, &["(0 1 2 3 4 5)"]);
        let b = make_action(&c6, &PermGroup::trivial(6), Caps::default()).unwrap();
        // degrees differ (3 vs 6): proven_no.
        assert!(matches!(
            is_perm_isomorphic(&a, &b, 100_000).unwrap(),
            IsoOutcome::ProvenNo
        ));
    }

    #[test]
    fn sym3_vs_c6_same_degree_regular() {
        // Both regular of degree 6, orders equal, but the groups are not
        // isomorphic.
        let s3reg = {
            let act = crate::coset::coset_action(
                &gp(3, &["(0 1 2)", "(0 1)"]),
                &PermGroup::trivial(3),
                100,
            )
            .unwrap();
            act.image
        };
        let a = make_action(&s3reg, &PermGroup::trivial(6), Caps::default()).unwrap();
        let c6 = gp(6, &["(0 1 2 3 4 5)"]);
        let b = make_action(&c6, &PermGroup::trivial(6), Caps::default()).unwrap();
        assert!(matches!(
            is_perm_isomorphic(&a, &b, 100_000).unwrap(),
            IsoOutcome::ProvenNo
        ));
    }

    #[test]
    fn group_isomorphism_finds_map() {
        let s3a = gp(3, &["(0 1 2)", "(0 1)"]);
        let s3b = gp(3, &["(0 2 1)", "(1 2)"]);
        let hom = group_isomorphism(&s3a, &s3b, 1000).unwrap().unwrap();
        assert!(hom.is_isomorphism_onto_target());
    }

    #[test]
    fn effort_cap_gives_consistent() {
        let a = d30_action();
        let relabel = Permutation::parse("(0 5)(2 9)", 15).unwrap();
        let g2 = PermGroup::new(
            15,
            a.ambient()
                .generators()
                .iter()
                .map(|g| g.conjugate(&relabel))
                .collect(),
        );
        let h2 = g2.point_stabilizer(relabel.image(0)).unwrap();
        let b = make_action(&g2, &h2, Caps::default()).unwrap();
        let out = is_perm_isomorphic(&a, &b, 10).unwrap();
        assert!(matches!(out, IsoOutcome::Consistent));
    }
}
