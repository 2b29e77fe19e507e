//! Realized coset actions.
//!
//! The action of `G` on the right cosets of `H` is realized by enumerating
//! canonical coset representatives: the representative of `H·g` is the
//! element of the coset whose image tuple on `H`'s chain base is
//! lexicographically minimal, found greedily level by level.

use std::collections::HashMap;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{PermGroup, StabChain};
use crate::hom::Homomorphism;
use crate::perm::Permutation;

/// A realized coset action together with the projection homomorphism.
pub struct CosetAction {
    /// Transitive image of degree `|G : H|`.
    pub image: PermGroup,
    /// Projection `G -> image`; its kernel is `core(G, H)`.
    pub hom: Homomorphism,
    /// Stabilizer of point 0 in `image` (the image of `H`).
    pub point_stab: PermGroup,
}

fn canonical_rep(hchain: &StabChain, degree: usize, g: &Permutation) -> Permutation {
    let mut c = g.clone();
    for level in &hchain.levels {
        let mut best_q = level.base;
        let mut best = c.image(level.base);
        for &q in &level.orbit {
            let img = c.image(q);
            if img < best {
                best = img;
                best_q = q;
            }
        }
        if best_q != level.base {
            c = level.transversal(best_q, degree).compose(&c);
        }
    }
    c
}

/// Realizes the action of `g` on the right cosets of `h`.
///
/// `h` must be a subgroup of `g` on the same points; the index must not
/// exceed `degree_cap`.
pub fn coset_action(g: &PermGroup, h: &PermGroup, degree_cap: usize) -> Result<CosetAction> {
    if h.degree() != g.degree() || !g.contains_group(h) {
        return Err(Error::MismatchedParent);
    }
    let degree = g.degree();
    let (og, oh) = (g.order(), h.order());
    debug_assert_eq!(og % oh, 0);
    let index = og / oh;
    if index > degree_cap as u128 {
        return Err(Error::CapacityExceeded {
            what: "coset action degree",
            needed: index,
            cap: degree_cap as u128,
        });
    }
    let index = index as usize;
    let hchain = h.chain();

    let mut reps: Vec<Permutation> = Vec::with_capacity(index);
    let mut lookup: HashMap<Permutation, u32> = HashMap::with_capacity(index * 2);
    let first = canonical_rep(hchain, degree, &Permutation::identity(degree));
    lookup.insert(first.clone(), 0);
    reps.push(first);

    let gen_count = g.generators().len();
    let mut gen_images: Vec<Vec<u32>> = vec![Vec::with_capacity(index); gen_count];
    let mut i = 0;
    while i < reps.len() {
        for (gi, s) in g.generators().iter().enumerate() {
            let moved = canonical_rep(hchain, degree, &reps[i].compose(s));
            let next = lookup.len() as u32;
            let idx = *lookup.entry(moved.clone()).or_insert_with(|| {
                reps.push(moved);
                next
            });
            gen_images[gi].push(idx);
        }
        i += 1;
    }
    assert_eq!(reps.len(), index, "coset enumeration must reach the index");

    let realized: Vec<Permutation> = gen_images
        .into_iter()
        .map(|imgs| Permutation::from_images(imgs).expect("cosets are permuted"))
        .collect();
    // The kernel of the action is core(G, H), cheap to compute on the
    // ambient points; it pins the image order so the chain of the realized
    // group can stop verifying early.
    let core = crate::subgroup::core(g, h, &Caps::default())?;
    let image_order = og / core.order();
    let image = PermGroup::new(index.max(1), realized.clone()).with_order_hint(image_order);
    let hom = Homomorphism::from_images(g, &image, realized)?.with_kernel(core);
    let point_stab = hom.apply_subgroup(h).with_order_hint(oh / hom.kernel().order());
    Ok(CosetAction {
        image,
        hom,
        point_stab,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::subgroup;

    fn gp(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(
            degree,
            gens.iter()
                .map(|s| Permutation::parse(s, degree).unwrap())
                .collect(),
        )
    }

    #[test]
    fn sym3_on_cosets_of_transposition() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let h = gp(3, &["(0 1)"]);
        let act = coset_action(&s3, &h, 100).unwrap();
        assert_eq!(act.image.degree(), 3);
        assert!(act.image.is_transitive());
        assert_eq!(act.hom.kernel().order(), 1);
        assert_eq!(act.point_stab.order(), 2);
    }

    #[test]
    fn degree_one_action() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let act = coset_action(&s3, &s3, 100).unwrap();
        assert_eq!(act.image.degree(), 1);
        assert_eq!(act.hom.kernel().order(), 6);
    }

    #[test]
    fn alt5_on_sylow2_cosets() {
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        // A Sylow 2-subgroup of Alt(5): the Klein group on {0,1,2,3}.
        let v = gp(5, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        assert_eq!(v.order(), 4);
        let act = coset_action(&a5, &v, 1000).unwrap();
        assert_eq!(act.image.degree(), 15);
        assert_eq!(act.image.orbits().len(), 1);
        assert_eq!(act.image.order(), 60);
    }

    #[test]
    fn kernel_is_core() {
        let d8 = gp(4, &["(0 1 2 3)", "(1 3)"]);
        let h = gp(4, &["(1 3)"]);
        let act = coset_action(&d8, &h, 100).unwrap();
        let core = subgroup::core(&d8, &h, &Caps::default()).unwrap();
        assert!(act.hom.kernel().same_group_as(&core));
    }

    #[test]
    fn capacity_error_beyond_cap() {
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let triv = PermGroup::trivial(5);
        assert!(matches!(
            coset_action(&a5, &triv, 10),
            Err(Error::CapacityExceeded { .. })
        ));
    }
}
