//! Semiprimitive triples: validation, the group construction, extraction
//! from actions, and the triple product.
//!
//! A triple `(K, H, L)` consists of a group `K` with a full element table,
//! a group `H` of automorphisms of `K` represented as permutations of the
//! element indices, and a subgroup `L` of `K`. Representing automorphisms as
//! plain permutations lets all the chain machinery apply to `H` unchanged.

use std::sync::Arc;

use crate::action::{make_action, TransitiveAction};
use crate::centralizer::centralizer_of_transitive;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hom::Homomorphism;
use crate::iso::search_isomorphism;
use crate::perm::Permutation;
use crate::subgroup::{core, derived_subgroup, intersection, join};
use crate::table::ElementTable;

/// A group small enough to carry a full element table; index 0 is the
/// identity.
pub struct GroupWithElements {
    pub group: PermGroup,
    pub table: ElementTable,
}

impl GroupWithElements {
    pub fn new(group: &PermGroup, caps: &Caps) -> Result<Arc<GroupWithElements>> {
        let table = ElementTable::build(group, caps.element_cap as u128)?;
        Ok(Arc::new(GroupWithElements {
            group: group.clone(),
            table,
        }))
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of an element given as a permutation of the realized points.
    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.table.index_of(p)
    }
}

/// An automorphism of `K` as a permutation of its element indices: it fixes
/// index 0 and respects the multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct Automorphism(pub Permutation);

impl Automorphism {
    /// Verifies the automorphism conditions: index 0 fixed, and
    /// multiplicativity on (generator, element) pairs, which extends to all
    /// pairs by induction along the table's BFS derivation.
    pub fn verify(k: &GroupWithElements, perm: Permutation) -> Result<Automorphism> {
        if perm.degree() != k.len() {
            return Err(Error::NotAnAutomorphism(format!(
                "degree {} does not match the element count {}",
                perm.degree(),
                k.len()
            )));
        }
        if perm.image(0) != 0 {
            return Err(Error::NotAnAutomorphism(
                "the identity element is not fixed".into(),
            ));
        }
        for gen in k.group.generators() {
            let gi = k.index_of(gen).expect("generators are in the table");
            for x in 0..k.len() as u32 {
                let lhs = perm.image(k.table.mul(gi, x));
                let rhs = k.table.mul(perm.image(gi), perm.image(x));
                if lhs != rhs {
                    return Err(Error::NotAnAutomorphism(format!(
                        "multiplicativity fails at generator {gi} with element {x}"
                    )));
                }
            }
        }
        Ok(Automorphism(perm))
    }

    /// The inner automorphism `x ↦ g^{-1}·x·g` for an ambient element `g`
    /// normalizing `K`.
    pub fn conjugation(k: &GroupWithElements, g: &Permutation) -> Result<Automorphism> {
        let ginv = g.inverse();
        let mut images = Vec::with_capacity(k.len());
        for id in 0..k.len() as u32 {
            let x = k.table.perm(id);
            let conj = ginv.compose(&x).compose(g);
            let Some(target) = k.index_of(&conj) else {
                return Err(Error::NotAnAutomorphism(
                    "conjugation does not preserve the subgroup".into(),
                ));
            };
            images.push(target);
        }
        let perm = Permutation::from_images(images)
            .map_err(|_| Error::NotAnAutomorphism("conjugation is not a bijection".into()))?;
        Ok(Automorphism(perm))
    }

    /// Extends generator images to the whole table along the BFS derivation,
    /// then verifies.
    pub fn from_gen_images(
        k: &GroupWithElements,
        images: &[Permutation],
    ) -> Result<Automorphism> {
        let gens = k.group.generators();
        if images.len() != gens.len() {
            return Err(Error::NotAnAutomorphism(format!(
                "expected {} generator images, found {}",
                gens.len(),
                images.len()
            )));
        }
        let image_ids: Vec<u32> = images
            .iter()
            .map(|img| {
                k.index_of(img).ok_or_else(|| {
                    Error::NotAnAutomorphism("an image is not an element of K".into())
                })
            })
            .collect::<Result<_>>()?;
        let mut phi = vec![u32::MAX; k.len()];
        phi[0] = 0;
        for id in 1..k.len() as u32 {
            let (prev, gi) = k.table.derivation(id);
            debug_assert_ne!(gi, u32::MAX);
            let prev_img = phi[prev as usize];
            debug_assert_ne!(prev_img, u32::MAX);
            phi[id as usize] = k.table.mul(prev_img, image_ids[gi as usize]);
        }
        let perm = Permutation::from_images(phi)
            .map_err(|_| Error::NotAnAutomorphism("images do not define a bijection".into()))?;
        Automorphism::verify(k, perm)
    }
}

/// The data `(K, H, L)` of a semiprimitive triple (not yet validated).
pub struct SemiprimitiveTriple {
    pub k: Arc<GroupWithElements>,
    /// Automorphisms of `K`, as a permutation group on the element indices.
    pub h: PermGroup,
    /// A subgroup of `K` on `K`'s realized points.
    pub l: PermGroup,
}

impl SemiprimitiveTriple {
    pub fn new(
        k: Arc<GroupWithElements>,
        auts: Vec<Automorphism>,
        l: PermGroup,
    ) -> SemiprimitiveTriple {
        let h = PermGroup::new(k.len(), auts.into_iter().map(|a| a.0).collect());
        SemiprimitiveTriple { k, h, l }
    }
}

/// Result of validating the three conditions.
#[derive(Clone, Debug)]
pub struct TripleValidation {
    pub valid: bool,
    /// `(condition, witness)` for the first failing condition.
    pub failure: Option<(u8, String)>,
}

impl TripleValidation {
    fn ok() -> Self {
        TripleValidation {
            valid: true,
            failure: None,
        }
    }
    fn fail(condition: u8, witness: String) -> Self {
        TripleValidation {
            valid: false,
            failure: Some((condition, witness)),
        }
    }
}

/// Proper normal subgroups of `K` that are `H`-invariant.
fn h_invariant_proper_normals(
    t: &SemiprimitiveTriple,
    caps: &Caps,
) -> Result<Vec<PermGroup>> {
    let lattice = crate::lattice::normal_subgroups(&t.k.group, caps)?;
    let mut out = Vec::new();
    'outer: for y in &lattice.subgroups {
        if y.order() == t.k.group.order() {
            continue;
        }
        for h in t.h.generators() {
            for yg in y.generators() {
                let id = t.k.index_of(yg).expect("subgroup element in table");
                let img = t.k.table.perm(h.image(id));
                if !y.contains(&img) {
                    continue 'outer;
                }
            }
        }
        out.push(y.clone());
    }
    Ok(out)
}

/// `K₀ = {k ∈ K : c_k ∈ H}`, computed as the preimage of `Inn(K) ∩ H` under
/// the conjugation homomorphism.
pub fn compute_k0(t: &SemiprimitiveTriple, caps: &Caps) -> Result<PermGroup> {
    let inn_gens: Vec<Permutation> = t
        .k
        .group
        .generators()
        .iter()
        .map(|g| Automorphism::conjugation(&t.k, g).map(|a| a.0))
        .collect::<Result<_>>()?;
    let inn = PermGroup::new(t.k.len(), inn_gens.clone());
    let c = Homomorphism::from_images(&t.k.group, &inn, inn_gens)?;
    let j = intersection(&inn, &t.h, caps)?;
    c.preimage_subgroup(&j)
}

/// Checks the three defining conditions of a semiprimitive triple.
pub fn validate_triple(t: &SemiprimitiveTriple, caps: &Caps) -> Result<TripleValidation> {
    let k = &t.k;
    let h_elements = t
        .h
        .elements_capped(caps.small_subgroup_cap)
        .map_err(|_| Error::CapacityExceeded {
            what: "automorphism group enumeration",
            needed: t.h.order(),
            cap: caps.small_subgroup_cap,
        })?;
    let invariant_normals = h_invariant_proper_normals(t, caps)?;
    let kgen_ids: Vec<u32> = k
        .group
        .generators()
        .iter()
        .map(|g| k.index_of(g).expect("generator in table"))
        .collect();

    // (1) H acts faithfully on each non-trivial H-invariant quotient K/Y.
    for y in &invariant_normals {
        for h in &h_elements {
            if h.is_identity() {
                continue;
            }
            let centralizes = kgen_ids.iter().all(|&gid| {
                // [x, h] = x^{-1}·x^h must land in Y for every generator x.
                let xh = h.image(gid);
                let comm = k.table.mul(k.table.inv(gid), xh);
                y.contains(&k.table.perm(comm))
            });
            if centralizes {
                return Ok(TripleValidation::fail(
                    1,
                    format!(
                        "automorphism of order {} acts trivially on K/Y with |Y| = {}",
                        h.order(),
                        y.order()
                    ),
                ));
            }
        }
    }

    // (2) L ⊴ K₀, L core-free in K, L H-invariant, and L ≠ 1 forces K
    // perfect.
    let k0 = compute_k0(t, caps)?;
    if !k0.contains_group(&t.l) {
        return Ok(TripleValidation::fail(2, "L is not contained in K0".into()));
    }
    for g in k0.generators() {
        for lg in t.l.generators() {
            if !t.l.contains(&lg.conjugate(g)) {
                return Ok(TripleValidation::fail(
                    2,
                    "L is not normal in K0".into(),
                ));
            }
        }
    }
    if core(&k.group, &t.l, caps)?.order() != 1 {
        return Ok(TripleValidation::fail(2, "L is not core-free in K".into()));
    }
    for h in t.h.generators() {
        for lg in t.l.generators() {
            let id = k.index_of(lg).expect("subgroup element in table");
            if !t.l.contains(&k.table.perm(h.image(id))) {
                return Ok(TripleValidation::fail(
                    2,
                    "L is not H-invariant".into(),
                ));
            }
        }
    }
    if t.l.order() > 1 {
        let d = derived_subgroup(&k.group);
        if d.order() != k.group.order() {
            return Ok(TripleValidation::fail(
                2,
                "L is non-trivial but K is not perfect".into(),
            ));
        }
    }

    // (3) K ≠ LR for every proper H-invariant normal R.
    for r in &invariant_normals {
        let lr = join(&t.l, r)?;
        if lr.order() == k.group.order() {
            return Ok(TripleValidation::fail(
                3,
                format!("K = L·R for a proper H-invariant normal R of order {}", r.order()),
            ));
        }
    }
    Ok(TripleValidation::ok())
}

/// Right-multiplication permutation of the element indices.
fn right_mult_perm(k: &GroupWithElements, elem_id: u32) -> Permutation {
    let images: Vec<u32> = (0..k.len() as u32)
        .map(|i| k.table.mul(i, elem_id))
        .collect();
    Permutation::from_images(images).expect("right multiplication is a bijection")
}

/// Builds the semiprimitive action of a validated triple.
///
/// `X = K ⋊ H` is realized on `K`'s element table (`K` by right
/// multiplication, `H` by its element permutations; the stabilizer of the
/// identity index is `H`, so the realization is faithful). The returned
/// action is the coset action of `X` on `Y = H·L`; its kernel is the left
/// translation copy of `L`, which is asserted, along with the plinth,
/// stabilizer and centralizer orders.
pub fn build_from_triple(t: &SemiprimitiveTriple, caps: &Caps) -> Result<TransitiveAction> {
    let validation = validate_triple(t, caps)?;
    if !validation.valid {
        let (condition, witness) = validation.failure.expect("invalid triples carry a failure");
        return Err(Error::InvalidTriple { condition, witness });
    }
    let k = &t.k;
    let n = k.len();

    let rho_gens: Vec<Permutation> = k
        .group
        .generators()
        .iter()
        .map(|g| right_mult_perm(k, k.index_of(g).expect("generator in table")))
        .collect();
    let mut x_gens = rho_gens.clone();
    x_gens.extend(t.h.generators().iter().cloned());
    let x = PermGroup::new(n, x_gens);
    assert_eq!(
        x.order(),
        k.group.order() * t.h.order(),
        "the holomorph-style realization of K ⋊ H is faithful"
    );

    let mut y_gens: Vec<Permutation> = t.h.generators().to_vec();
    for lg in t.l.generators() {
        y_gens.push(right_mult_perm(k, k.index_of(lg).expect("element of K")));
    }
    let y = PermGroup::new(n, y_gens);
    assert_eq!(y.order(), t.h.order() * t.l.order());

    let act = crate::coset::coset_action(&x, &y, caps.degree_cap)?;
    assert_eq!(
        act.hom.kernel().order(),
        t.l.order(),
        "the kernel of the action on [X : HL] is the left translation copy of L"
    );
    let action = make_action(&act.image, &act.point_stab, *caps)?;

    // Construction postconditions.
    assert_eq!(action.stab_order(), t.h.order());
    let rho_k = PermGroup::new(n, rho_gens);
    let k_image = act.hom.apply_subgroup(&rho_k);
    assert_eq!(k_image.order(), k.group.order());
    let preds = crate::analysis::sp_predicates(&action)?;
    assert!(preds.is_semiprimitive, "triples build semiprimitive actions");
    let report = crate::analysis::plinth_report(&action)?;
    assert!(
        report.plinths.iter().any(|p| p.same_group_as(&k_image)),
        "the image of K is a plinth"
    );
    let k0 = compute_k0(t, caps)?;
    let cent = centralizer_of_transitive(action.ambient(), &k_image)?;
    assert_eq!(
        cent.order(),
        k0.order() / t.l.order(),
        "the centralizer of the plinth is K0/L"
    );
    Ok(action)
}

/// Extracts the triple `(K, G_ω·μ, K_ω)` from a semiprimitive action with
/// plinth `K`.
pub fn extract_triple(
    a: &TransitiveAction,
    k: &PermGroup,
    caps: &Caps,
) -> Result<SemiprimitiveTriple> {
    if !a.normal_is_transitive(k)? {
        return Err(Error::NotTransitive);
    }
    let kwe = GroupWithElements::new(k, caps)?;
    let mut auts = Vec::with_capacity(a.stab().generators().len());
    for h in a.stab().generators() {
        auts.push(Automorphism::conjugation(&kwe, h)?);
    }
    let l = a.stab_intersection(k)?;
    let triple = SemiprimitiveTriple::new(kwe, auts, l);
    assert_eq!(
        triple.h.order(),
        a.stab_order(),
        "the stabilizer embeds into Aut(K) because it meets the centralizer trivially"
    );
    let validation = validate_triple(&triple, caps)?;
    assert!(
        validation.valid,
        "extracting from a semiprimitive action yields a valid triple: {:?}",
        validation.failure
    );
    Ok(triple)
}

/// Conjugation image of `L` inside `H` (`τ : L → Aut(K)`), with the defining
/// pairs retained.
fn tau_image(
    t: &SemiprimitiveTriple,
) -> Result<(PermGroup, Vec<(Permutation, Permutation)>)> {
    let mut pairs = Vec::new();
    for lg in t.l.generators() {
        let aut = Automorphism::conjugation(&t.k, lg)?;
        pairs.push((lg.clone(), aut.0));
    }
    let image = PermGroup::new(t.k.len(), pairs.iter().map(|(_, a)| a.clone()).collect());
    Ok((image, pairs))
}

/// Searches for an isomorphism `μ : H1 → H2` carrying the conjugation image
/// of `L1` onto that of `L2` (exactly, as Definition-style products
/// require). `None` is definitive below the effort cap.
pub fn find_gluing_isomorphism(
    t1: &SemiprimitiveTriple,
    t2: &SemiprimitiveTriple,
    effort_cap: u128,
) -> Result<Option<Homomorphism>> {
    if t1.h.order() != t2.h.order() {
        return Ok(None);
    }
    let (ltau1, _) = tau_image(t1)?;
    let (ltau2, _) = tau_image(t2)?;
    if ltau1.order() != ltau2.order() {
        return Ok(None);
    }
    if t1.h.order() > effort_cap {
        return Err(Error::CapacityExceeded {
            what: "gluing isomorphism search",
            needed: t1.h.order(),
            cap: effort_cap,
        });
    }
    let leaf = |hom: &Homomorphism| -> bool {
        ltau1
            .generators()
            .iter()
            .all(|x| ltau2.contains(&hom.apply(x)))
    };
    match search_isomorphism(&t1.h, &t2.h, false, &leaf)? {
        Some(hom) => {
            let images: Vec<Permutation> = t1
                .h
                .generators()
                .iter()
                .map(|g| hom.apply(g))
                .collect();
            Ok(Some(Homomorphism::from_images(&t1.h, &t2.h, images)?))
        }
        None => Ok(None),
    }
}

/// The product triple
/// `(K1 × K2, diag_μ(H1, H2), diag_{τ1·μ·τ2^{-1}}(L1, L2))`.
pub fn triple_product(
    t1: &SemiprimitiveTriple,
    t2: &SemiprimitiveTriple,
    mu: &Homomorphism,
    caps: &Caps,
) -> Result<SemiprimitiveTriple> {
    if !mu.source().same_group_as(&t1.h) || !mu.target().same_group_as(&t2.h) {
        return Err(Error::IncompatibleIsomorphism(
            "mu must map H1 onto H2".into(),
        ));
    }
    if !mu.is_isomorphism_onto_target() {
        return Err(Error::IncompatibleIsomorphism("mu must be bijective".into()));
    }
    let (ltau1, tau1_pairs) = tau_image(t1)?;
    let (ltau2, tau2_pairs) = tau_image(t2)?;
    if ltau1.order() != ltau2.order()
        || !ltau1
            .generators()
            .iter()
            .all(|x| ltau2.contains(&mu.apply(x)))
    {
        return Err(Error::IncompatibleIsomorphism(
            "mu must carry the conjugation image of L1 onto that of L2".into(),
        ));
    }

    // The product group on the disjoint union of the realized point sets.
    let (d1, d2) = (t1.k.group.degree(), t2.k.group.degree());
    let id1 = Permutation::identity(d1);
    let id2 = Permutation::identity(d2);
    let pair = |a: &Permutation, b: &Permutation| -> Permutation {
        let mut images: Vec<u32> = Vec::with_capacity(d1 + d2);
        images.extend(a.images().iter().copied());
        images.extend(b.images().iter().map(|&q| q + d1 as u32));
        Permutation::from_images(images).expect("disjoint union")
    };
    let mut k_gens: Vec<Permutation> = Vec::new();
    for g in t1.k.group.generators() {
        k_gens.push(pair(g, &id2));
    }
    for g in t2.k.group.generators() {
        k_gens.push(pair(&id1, g));
    }
    let k12 = PermGroup::new(d1 + d2, k_gens);
    let expected = t1.k.group.order() * t2.k.group.order();
    if expected > caps.element_cap as u128 {
        return Err(Error::CapacityExceeded {
            what: "product element table",
            needed: expected,
            cap: caps.element_cap as u128,
        });
    }
    assert_eq!(k12.order(), expected, "the factors intersect trivially");
    let kwe = GroupWithElements::new(&k12, caps)?;

    // diag_μ(H1, H2) acting on the product's element indices.
    let mut auts: Vec<Automorphism> = Vec::new();
    for h1 in t1.h.generators() {
        let h2 = mu.apply(h1);
        let mut images = Vec::with_capacity(kwe.len());
        for id in 0..kwe.len() as u32 {
            let row = kwe.table.row(id);
            let part1: Vec<u32> = row[..d1].to_vec();
            let part2: Vec<u32> = row[d1..].iter().map(|&q| q - d1 as u32).collect();
            let x1 = t1
                .k
                .index_of(&Permutation::from_images(part1).expect("block"))
                .expect("element of K1");
            let x2 = t2
                .k
                .index_of(&Permutation::from_images(part2).expect("block"))
                .expect("element of K2");
            let y1 = t1.k.table.perm(h1.image(x1));
            let y2 = t2.k.table.perm(h2.image(x2));
            images.push(
                kwe.index_of(&pair(&y1, &y2))
                    .expect("the image is in the product"),
            );
        }
        let perm = Permutation::from_images(images).expect("bijection");
        auts.push(Automorphism::verify(&kwe, perm)?);
    }

    // diag_{τ1·μ·τ2^{-1}}(L1, L2): pair each generator u of L1 with the
    // unique w in L2 whose conjugation action is μ(c_u).
    let tau2 = Homomorphism::from_pairs(&t2.l, &ltau2, tau2_pairs)?;
    let mut l_gens: Vec<Permutation> = Vec::new();
    for (u, cu) in &tau1_pairs {
        let target = mu.apply(cu);
        let w = tau2
            .preimage(&target)
            .ok_or_else(|| Error::IncompatibleIsomorphism("tau2 preimage missing".into()))?;
        l_gens.push(pair(u, &w));
    }
    let l12 = PermGroup::new(d1 + d2, l_gens);

    let product = SemiprimitiveTriple {
        k: kwe,
        h: PermGroup::new(
            t1.k.len() * t2.k.len(),
            auts.into_iter().map(|a| a.0).collect(),
        ),
        l: l12,
    };
    let validation = validate_triple(&product, caps)?;
    assert!(
        validation.valid,
        "the product of semiprimitive triples is a semiprimitive triple: {:?}",
        validation.failure
    );
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::sp_predicates;
    use crate::iso::is_perm_isomorphic;

    fn gp(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(
            degree,
            gens.iter()
                .map(|s| Permutation::parse(s, degree).unwrap())
                .collect(),
        )
    }

    fn caps() -> Caps {
        Caps::default()
    }

    fn c3_triple() -> SemiprimitiveTriple {
        // K = C3 regular, H = Aut(C3) = inversion, L = 1.
        let c3 = gp(3, &["(0 1 2)"]);
        let kwe = GroupWithElements::new(&c3, &caps()).unwrap();
        let inv = Automorphism::conjugation(&kwe, &Permutation::parse("(1 2)", 3).unwrap());
        // (1 2) normalizes C3 and inverts the 3-cycle.
        let inv = inv.unwrap();
        SemiprimitiveTriple::new(kwe, vec![inv], PermGroup::trivial(3))
    }

    #[test]
    fn c3_with_inversion_is_valid() {
        let t = c3_triple();
        let v = validate_triple(&t, &caps()).unwrap();
        assert!(v.valid, "{:?}", v.failure);
    }

    #[test]
    fn c4_with_inversion_fails_condition_one() {
        let c4 = gp(4, &["(0 1 2 3)"]);
        let kwe = GroupWithElements::new(&c4, &caps()).unwrap();
        let inv =
            Automorphism::conjugation(&kwe, &Permutation::parse("(1 3)", 4).unwrap()).unwrap();
        let t = SemiprimitiveTriple::new(kwe, vec![inv], PermGroup::trivial(4));
        let v = validate_triple(&t, &caps()).unwrap();
        assert!(!v.valid);
        assert_eq!(v.failure.unwrap().0, 1);
    }

    #[test]
    fn trivial_h_and_l_is_valid_for_any_k() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let kwe = GroupWithElements::new(&s3, &caps()).unwrap();
        let t = SemiprimitiveTriple::new(kwe, vec![], PermGroup::trivial(3));
        let v = validate_triple(&t, &caps()).unwrap();
        assert!(v.valid);
        let a = build_from_triple(&t, &caps()).unwrap();
        assert_eq!(a.degree(), 6);
        assert!(a.is_regular());
    }

    #[test]
    fn build_c3_triple_gives_sym3() {
        let t = c3_triple();
        let a = build_from_triple(&t, &caps()).unwrap();
        assert_eq!(a.degree(), 3);
        assert_eq!(a.group_order(), 6);
        assert!(sp_predicates(&a).unwrap().is_semiprimitive);
        // Compare with the natural Sym(3).
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let b = make_action(&s3, &s3.point_stabilizer(0).unwrap(), caps()).unwrap();
        assert!(is_perm_isomorphic(&a, &b, 1000).unwrap().is_proven_yes());
    }

    #[test]
    fn alt5_inner_involution_triple() {
        // K = Alt(5), H generated by conjugation with (0 1)(2 3),
        // L = ⟨(0 1)(2 3)⟩: the smallest centre-free perfect example.
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let kwe = GroupWithElements::new(&a5, &caps()).unwrap();
        let g = Permutation::parse("(0 1)(2 3)", 5).unwrap();
        let aut = Automorphism::conjugation(&kwe, &g).unwrap();
        let l = gp(5, &["(0 1)(2 3)"]);
        let t = SemiprimitiveTriple::new(kwe, vec![aut], l);
        let v = validate_triple(&t, &caps()).unwrap();
        assert!(v.valid, "{:?}", v.failure);
        let a = build_from_triple(&t, &caps()).unwrap();
        assert_eq!(a.degree(), 30);
        assert_eq!(a.group_order(), 60);
    }

    #[test]
    fn extract_and_rebuild_d30() {
        let g = gp(
            15,
            &[
                "(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14)",
                "(1 14)(2 13)(3 12)(4 11)(5 10)(6 9)(7 8)",
            ],
        );
        let a = make_action(&g, &g.point_stabilizer(0).unwrap(), caps()).unwrap();
        let c15 = gp(15, &["(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14)"]);
        let t = extract_triple(&a, &c15, &caps()).unwrap();
        assert_eq!(t.k.group.order(), 15);
        assert_eq!(t.h.order(), 2);
        assert_eq!(t.l.order(), 1);
        let rebuilt = build_from_triple(&t, &caps()).unwrap();
        assert!(is_perm_isomorphic(&rebuilt, &a, 1000)
            .unwrap()
            .is_proven_yes());
    }

    #[test]
    fn product_of_c3_and_c5_triples_is_d30() {
        let t1 = c3_triple();
        let c5 = gp(5, &["(0 1 2 3 4)"]);
        let kwe = GroupWithElements::new(&c5, &caps()).unwrap();
        let inv =
            Automorphism::conjugation(&kwe, &Permutation::parse("(1 4)(2 3)", 5).unwrap())
                .unwrap();
        let t2 = SemiprimitiveTriple::new(kwe, vec![inv], PermGroup::trivial(5));

        let mu = find_gluing_isomorphism(&t1, &t2, 1000).unwrap().unwrap();
        let product = triple_product(&t1, &t2, &mu, &caps()).unwrap();
        assert_eq!(product.k.group.order(), 15);
        assert_eq!(product.h.order(), 2);
        assert_eq!(product.l.order(), 1);
        let built = build_from_triple(&product, &caps()).unwrap();
        assert_eq!(built.group_order(), 30);
        assert_eq!(built.degree(), 15);
    }

    #[test]
    fn gluing_mismatched_orders_is_none() {
        let t1 = c3_triple();
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let kwe = GroupWithElements::new(&s3, &caps()).unwrap();
        let t2 = SemiprimitiveTriple::new(kwe, vec![], PermGroup::trivial(3));
        assert!(find_gluing_isomorphism(&t1, &t2, 1000)
            .unwrap()
            .is_none());
    }
}
