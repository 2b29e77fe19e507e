//! Glued products: fiber products of semiprimitive actions over a common
//! stabilizer quotient, realized on the disjoint union of the two point
//! sets.

use crate::action::{make_action, TransitiveAction};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hom::Homomorphism;
use crate::iso::{is_perm_isomorphic, IsoOutcome};
use crate::perm::Permutation;
use crate::subgroup::{intersection, is_normal_in, join};

fn disjoint_pair(a: &Permutation, b: &Permutation) -> Permutation {
    let da = a.degree();
    let mut images: Vec<u32> = Vec::with_capacity(da + b.degree());
    images.extend(a.images().iter().copied());
    images.extend(b.images().iter().map(|&q| q + da as u32));
    Permutation::from_images(images).expect("disjoint union")
}

/// Glues two actions along an isomorphism `mu` of their stabilizers with
/// `mu(K1 ∩ H1) = K2 ∩ H2`.
///
/// The result is the fiber product `{(g1, g2) : g1, g2 agree in the common
/// quotient}` generated by `K1 × 1`, `1 × K2` and `{(h, mu(h))}`, acting on
/// the disjoint union of the two realizations. Its order is
/// `|K1|·|K2|·|H1|/|L1|`, which is asserted.
pub fn glue_actions(
    a1: &TransitiveAction,
    k1: &PermGroup,
    a2: &TransitiveAction,
    k2: &PermGroup,
    mu: &Homomorphism,
) -> Result<TransitiveAction> {
    if !mu.source().same_group_as(a1.stab()) || !mu.target().same_group_as(a2.stab()) {
        return Err(Error::IncompatibleIsomorphism(
            "mu must map the first stabilizer onto the second".into(),
        ));
    }
    if !mu.is_isomorphism_onto_target() {
        return Err(Error::IncompatibleIsomorphism(
            "mu must be an isomorphism".into(),
        ));
    }
    if !a1.normal_is_transitive(k1)? || !a2.normal_is_transitive(k2)? {
        return Err(Error::NotTransitive);
    }
    let l1 = a1.stab_intersection(k1)?;
    let l2 = a2.stab_intersection(k2)?;
    if l1.order() != l2.order()
        || !l1
            .generators()
            .iter()
            .all(|x| l2.contains(&mu.apply(x)))
    {
        return Err(Error::IncompatibleIsomorphism(
            "mu must carry K1 ∩ H1 onto K2 ∩ H2".into(),
        ));
    }

    let (d1, d2) = (a1.ambient().degree(), a2.ambient().degree());
    let id1 = Permutation::identity(d1);
    let id2 = Permutation::identity(d2);
    let mut gens: Vec<Permutation> = Vec::new();
    for k in k1.generators() {
        gens.push(disjoint_pair(k, &id2));
    }
    for k in k2.generators() {
        gens.push(disjoint_pair(&id1, k));
    }
    let mut stab_gens: Vec<Permutation> = Vec::new();
    for h in a1.stab().generators() {
        let pair = disjoint_pair(h, &mu.apply(h));
        gens.push(pair.clone());
        stab_gens.push(pair);
    }
    let glued = PermGroup::new(d1 + d2, gens);
    let expected = k1.order() * k2.order() * a1.stab_order() / l1.order();
    assert_eq!(
        glued.order(),
        expected,
        "glued product order must be |K1||K2||H1|/|L1|"
    );
    let stab = PermGroup::new(d1 + d2, stab_gens);
    debug_assert_eq!(stab.order(), a1.stab_order());
    make_action(&glued, &stab, *a1.caps())
}

/// Rebuilds an action from the quotients by the co-factors of a direct
/// plinth decomposition; used as the reconstruction side of the structure
/// theorem. `parts` must be pairwise trivially intersecting normal subgroups
/// whose join is a plinth.
pub fn glue_quotient_family(aq: &TransitiveAction, parts: &[PermGroup]) -> Result<TransitiveAction> {
    assert!(parts.len() >= 2);
    let degree = aq.ambient().degree();
    let k_full = {
        let mut k = PermGroup::trivial(degree);
        for p in parts {
            k = join(&k, p)?;
        }
        k
    };
    // Components: quotient by the product of all parts except one.
    let mut components: Vec<(TransitiveAction, PermGroup, Vec<Permutation>)> = Vec::new();
    for i in 0..parts.len() {
        let mut d = PermGroup::trivial(degree);
        for (j, p) in parts.iter().enumerate() {
            if j != i {
                d = join(&d, p)?;
            }
        }
        let (b, hom) = crate::analysis::quotient_action(aq, &d)?;
        let k_image = hom.apply_subgroup(&k_full);
        let stab_track: Vec<Permutation> = aq
            .stab()
            .generators()
            .iter()
            .map(|h| hom.apply(h))
            .collect();
        components.push((b, k_image, stab_track));
    }

    let (mut current, mut current_k, mut current_track) = components[0].clone();
    for (b, kb, track) in components.iter().skip(1) {
        let pairs: Vec<(Permutation, Permutation)> = current_track
            .iter()
            .cloned()
            .zip(track.iter().cloned())
            .collect();
        let mu = Homomorphism::from_pairs(current.stab(), b.stab(), pairs)?;
        let glued = glue_actions(&current, &current_k, b, kb, &mu)?;
        // Track the stabilizer pairing and the plinth into the new
        // realization.
        let d1 = current.ambient().degree();
        let id2 = Permutation::identity(b.ambient().degree());
        let id1 = Permutation::identity(d1);
        current_track = current_track
            .iter()
            .zip(track.iter())
            .map(|(x, y)| disjoint_pair(x, y))
            .collect();
        let mut k_gens: Vec<Permutation> = current_k
            .generators()
            .iter()
            .map(|x| disjoint_pair(x, &id2))
            .collect();
        k_gens.extend(kb.generators().iter().map(|y| disjoint_pair(&id1, y)));
        current_k = PermGroup::new(d1 + b.ambient().degree(), k_gens);
        current = glued;
    }
    Ok(current)
}

/// Splits an action along a `G`-invariant direct decomposition of a plinth
/// and checks that gluing the two quotients reproduces the action.
pub fn decompose_glued(
    a: &TransitiveAction,
    k1: &PermGroup,
    k2: &PermGroup,
) -> Result<(TransitiveAction, TransitiveAction, IsoOutcome)> {
    let g = a.ambient();
    if k1.order() == 1 || k2.order() == 1 {
        return Err(Error::NotADirectDecomposition(
            "both factors must be non-trivial".into(),
        ));
    }
    if !is_normal_in(g, k1) || !is_normal_in(g, k2) {
        return Err(Error::NotADirectDecomposition(
            "both factors must be normal".into(),
        ));
    }
    if intersection(k1, k2, a.caps())?.order() != 1 {
        return Err(Error::NotADirectDecomposition(
            "the factors must intersect trivially".into(),
        ));
    }
    let k = join(k1, k2)?;
    let report = crate::analysis::plinth_report(a)?;
    if !report.plinths.iter().any(|p| p.same_group_as(&k)) {
        return Err(Error::NotADirectDecomposition(
            "the joined factors are not a plinth".into(),
        ));
    }

    let (qa1, hom1) = crate::analysis::quotient_action(a, k2)?;
    let (qa2, hom2) = crate::analysis::quotient_action(a, k1)?;
    let k1_image = hom1.apply_subgroup(&k);
    let k2_image = hom2.apply_subgroup(&k);
    let pairs: Vec<(Permutation, Permutation)> = a
        .stab()
        .generators()
        .iter()
        .map(|h| (hom1.apply(h), hom2.apply(h)))
        .collect();
    let mu = Homomorphism::from_pairs(qa1.stab(), qa2.stab(), pairs)?;
    let glued = glue_actions(&qa1, &k1_image, &qa2, &k2_image, &mu)?;
    let witness = is_perm_isomorphic(&glued, a, a.caps().effort_cap)?;
    Ok((qa1, qa2, witness))
}
