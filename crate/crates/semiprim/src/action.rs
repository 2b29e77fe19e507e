//! Transitive actions as (ambient realization, designated stabilizer) pairs.
//!
//! The coset action of `G` on `[G : H]` is carried implicitly: the ambient
//! group is any convenient faithful realization and `H` is the designated
//! point stabilizer. Transitivity and semiregularity of a normal subgroup
//! `N` on the cosets are decided abstractly from `|N·H|` and `N ∩ H`, so an
//! action of huge degree can be analyzed while only a small realization is
//! ever held. The pointwise realization is built on demand and only below
//! the degree cap.

use std::sync::{Arc, OnceLock};

use crate::config::Caps;
use crate::coset::{coset_action, CosetAction};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::lattice::{normal_subgroups, NormalLattice};
use crate::perm::Permutation;
use crate::subgroup::{core, intersection};

struct ActionInner {
    ambient: PermGroup,
    stab: PermGroup,
    caps: Caps,
    degree: u128,
    realized: OnceLock<Result<Arc<CosetAction>>>,
    lattice: OnceLock<Result<Arc<NormalLattice>>>,
    stab_elements: OnceLock<Option<Vec<Permutation>>>,
    sp_cache: OnceLock<Result<crate::analysis::SpPredicates>>,
    plinth_cache: OnceLock<Result<crate::analysis::PlinthReport>>,
    it_cache: OnceLock<Result<crate::analysis::ItClassification>>,
}

/// The coset action of `ambient` on the cosets of a core-free `stab`.
#[derive(Clone)]
pub struct TransitiveAction {
    inner: Arc<ActionInner>,
}

/// Builds a transitive action, verifying that the designated stabilizer is
/// core-free (equivalently, the coset action is faithful).
pub fn make_action(ambient: &PermGroup, stab: &PermGroup, caps: Caps) -> Result<TransitiveAction> {
    if stab.degree() != ambient.degree() || !ambient.contains_group(stab) {
        return Err(Error::MismatchedParent);
    }
    let c = core(ambient, stab, &caps)?;
    if c.order() != 1 {
        return Err(Error::NotCoreFree {
            core_order: c.order(),
        });
    }
    let degree = ambient.order() / stab.order();
    Ok(TransitiveAction {
        inner: Arc::new(ActionInner {
            ambient: ambient.clone(),
            stab: stab.clone(),
            caps,
            degree,
            realized: OnceLock::new(),
            lattice: OnceLock::new(),
            stab_elements: OnceLock::new(),
            sp_cache: OnceLock::new(),
            plinth_cache: OnceLock::new(),
            it_cache: OnceLock::new(),
        }),
    })
}

impl TransitiveAction {
    pub fn ambient(&self) -> &PermGroup {
        &self.inner.ambient
    }

    pub fn stab(&self) -> &PermGroup {
        &self.inner.stab
    }

    pub fn caps(&self) -> &Caps {
        &self.inner.caps
    }

    /// Number of points of the (implicit) coset action.
    pub fn degree(&self) -> u128 {
        self.inner.degree
    }

    pub fn group_order(&self) -> u128 {
        self.inner.ambient.order()
    }

    pub fn stab_order(&self) -> u128 {
        self.inner.stab.order()
    }

    pub fn is_regular(&self) -> bool {
        self.inner.stab.order() == 1
    }

    fn stab_elements(&self) -> Option<&Vec<Permutation>> {
        self.inner
            .stab_elements
            .get_or_init(|| {
                self.inner
                    .stab
                    .elements_capped(self.inner.caps.small_subgroup_cap)
                    .ok()
            })
            .as_ref()
    }

    /// `N ∩ H` for a subgroup of the ambient group.
    pub fn stab_intersection(&self, n: &PermGroup) -> Result<PermGroup> {
        if let Some(elements) = self.stab_elements() {
            let gens: Vec<Permutation> = elements
                .iter()
                .filter(|e| !e.is_identity() && n.contains(e))
                .cloned()
                .collect();
            let degree = self.inner.ambient.degree();
            let gens = crate::subgroup::reduced_generators(degree, &gens);
            return Ok(PermGroup::new(degree, gens));
        }
        intersection(n, &self.inner.stab, &self.inner.caps)
    }

    /// `N` is transitive on the cosets iff `N·H = G`; for normal `N` this is
    /// well defined because `N ∩ H^g = (N ∩ H)^g`.
    pub fn normal_is_transitive(&self, n: &PermGroup) -> Result<bool> {
        let meet = self.stab_intersection(n)?;
        Ok(n.order() * self.stab_order() / meet.order() == self.group_order())
    }

    /// `N` is semiregular on the cosets iff `N ∩ H = 1`.
    pub fn normal_is_semiregular(&self, n: &PermGroup) -> Result<bool> {
        Ok(self.stab_intersection(n)?.order() == 1)
    }

    /// The pointwise realization of the coset action, if within the degree
    /// cap.
    pub fn realize(&self) -> Result<Arc<CosetAction>> {
        self.inner
            .realized
            .get_or_init(|| {
                coset_action(
                    &self.inner.ambient,
                    &self.inner.stab,
                    self.inner.caps.degree_cap,
                )
                .map(Arc::new)
            })
            .clone()
    }

    /// The same action re-expressed on its realized points.
    pub fn realized_action(&self) -> Result<TransitiveAction> {
        let act = self.realize()?;
        make_action(&act.image, &act.point_stab, self.inner.caps)
    }

    /// Normal-subgroup lattice of the ambient group (cached).
    pub fn lattice(&self) -> Result<Arc<NormalLattice>> {
        self.inner
            .lattice
            .get_or_init(|| {
                normal_subgroups(&self.inner.ambient, &self.inner.caps).map(Arc::new)
            })
            .clone()
    }

    pub(crate) fn cached_sp(
        &self,
        compute: impl FnOnce() -> Result<crate::analysis::SpPredicates>,
    ) -> Result<crate::analysis::SpPredicates> {
        self.inner.sp_cache.get_or_init(compute).clone()
    }

    pub(crate) fn cached_plinths(
        &self,
        compute: impl FnOnce() -> Result<crate::analysis::PlinthReport>,
    ) -> Result<crate::analysis::PlinthReport> {
        self.inner.plinth_cache.get_or_init(compute).clone()
    }

    pub(crate) fn cached_it(
        &self,
        compute: impl FnOnce() -> Result<crate::analysis::ItClassification>,
    ) -> Result<crate::analysis::ItClassification> {
        self.inner.it_cache.get_or_init(compute).clone()
    }
}

impl std::fmt::Debug for TransitiveAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "TransitiveAction(|G| = {}, |H| = {}, degree {})",
            self.group_order(),
            self.stab_order(),
            self.degree()
        )
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
    fn sym3_on_three_points() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let h = gp(3, &["(0 1)"]);
        let a = make_action(&s3, &h, Caps::default()).unwrap();
        assert_eq!(a.degree(), 3);
    }

    #[test]
    fn alt5_regular() {
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let triv = PermGroup::trivial(5);
        let a = make_action(&a5, &triv, Caps::default()).unwrap();
        assert_eq!(a.degree(), 60);
        assert!(a.is_regular());
    }

    #[test]
    fn sym4_on_cosets_of_c4() {
        // The core of a 4-cycle's span in Sym(4) is trivial, so the degree-6
        // action exists.
        let s4 = gp(4, &["(0 1 2 3)", "(0 1)"]);
        let c4 = gp(4, &["(0 1 2 3)"]);
        let a = make_action(&s4, &c4, Caps::default()).unwrap();
        assert_eq!(a.degree(), 6);
    }

    #[test]
    fn non_core_free_is_rejected() {
        let d8 = gp(4, &["(0 1 2 3)", "(1 3)"]);
        let c4 = gp(4, &["(0 1 2 3)"]);
        assert!(matches!(
            make_action(&d8, &c4, Caps::default()),
            Err(Error::NotCoreFree { core_order: 4 })
        ));
    }

    #[test]
    fn abstract_transitivity_of_normals() {
        // D30 on 15 points: C15 is transitive, C5 and C3 are semiregular
        // and intransitive.
        let g = gp(
            15,
            &[
                "(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14)",
                "(1 14)(2 13)(3 12)(4 11)(5 10)(6 9)(7 8)",
            ],
        );
        let h = g.point_stabilizer(0).unwrap();
        let a = make_action(&g, &h, Caps::default()).unwrap();
        let c15 = gp(15, &["(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14)"]);
        let c5 = gp(15, &["(0 3 6 9 12)(1 4 7 10 13)(2 5 8 11 14)"]);
        assert!(a.normal_is_transitive(&c15).unwrap());
        assert!(!a.normal_is_transitive(&c5).unwrap());
        assert!(a.normal_is_semiregular(&c5).unwrap());
        let realized = a.realize().unwrap();
        assert_eq!(realized.image.degree(), 15);
    }
}
