//! The semiprimitivity analysis: predicates on transitive actions, plinths,
//! quotient actions, the eleven innately transitive types, and the structure
//! classification.

use crate::action::{make_action, TransitiveAction};
use crate::blocks::is_primitive;
use crate::centralizer::centralizer_of_transitive;
use crate::error::{Error, Result};
use crate::glue;
use crate::group::PermGroup;
use crate::hom::Homomorphism;
use crate::iso::{is_perm_isomorphic, IsoOutcome};
use crate::perm::Permutation;
use crate::subgroup::{core, intersection, is_normal_in, join};

/// Predicates of a transitive action, decided through the normal-subgroup
/// lattice of the ambient group.
#[derive(Clone, Debug)]
pub struct SpPredicates {
    pub is_semiprimitive: bool,
    /// An offending normal subgroup (intransitive and not semiregular) when
    /// the action is not semiprimitive.
    pub witness: Option<PermGroup>,
    pub is_quasiprimitive: bool,
    pub is_innately_transitive: bool,
    /// `None` when primitivity is undecidable within the caps.
    pub is_primitive: Option<bool>,
}

pub fn sp_predicates(a: &TransitiveAction) -> Result<SpPredicates> {
    a.cached_sp(|| sp_predicates_uncached(a))
}

fn sp_predicates_uncached(a: &TransitiveAction) -> Result<SpPredicates> {
    let lattice = a.lattice()?;
    let mut is_semiprimitive = true;
    let mut witness = None;
    let mut is_quasiprimitive = true;
    for n in &lattice.subgroups {
        if n.order() == 1 {
            continue;
        }
        let transitive = a.normal_is_transitive(n)?;
        if !transitive {
            is_quasiprimitive = false;
            if !a.normal_is_semiregular(n)? {
                is_semiprimitive = false;
                if witness.is_none() {
                    witness = Some(n.clone());
                }
            }
        }
    }
    let mut is_innately_transitive = false;
    for i in lattice.minimal_normal_indices() {
        if a.normal_is_transitive(&lattice.subgroups[i])? {
            is_innately_transitive = true;
            break;
        }
    }
    let is_primitive = primitivity(a, &lattice)?;
    Ok(SpPredicates {
        is_semiprimitive,
        witness,
        is_quasiprimitive,
        is_innately_transitive,
        is_primitive,
    })
}

fn primitivity(
    a: &TransitiveAction,
    lattice: &crate::lattice::NormalLattice,
) -> Result<Option<bool>> {
    if a.degree() == 1 {
        return Ok(Some(false));
    }
    if a.degree() <= a.caps().degree_cap as u128 {
        let realized = a.realize()?;
        return Ok(Some(is_primitive(&realized.image)?));
    }
    // Unrealizable degree: lattice-generated overgroups of the stabilizer
    // can witness imprimitivity; a prime degree proves primitivity.
    if is_prime_u128(a.degree()) {
        return Ok(Some(true));
    }
    for n in &lattice.subgroups {
        let o = join(n, a.stab())?;
        if o.order() > a.stab_order() && o.order() < a.group_order() {
            return Ok(Some(false));
        }
    }
    Ok(None)
}

fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    let mut d: u128 = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlinthFlags {
    pub regular: bool,
    pub perfect: bool,
    pub soluble: bool,
}

/// Plinths (minimally transitive normal subgroups), their join, and the
/// radical.
#[derive(Clone, Debug)]
pub struct PlinthReport {
    pub plinths: Vec<PermGroup>,
    pub flags: Vec<PlinthFlags>,
    pub superplinth: PermGroup,
    pub rad: PermGroup,
}

pub fn plinth_report(a: &TransitiveAction) -> Result<PlinthReport> {
    a.cached_plinths(|| plinth_report_uncached(a))
}

fn plinth_report_uncached(a: &TransitiveAction) -> Result<PlinthReport> {
    let lattice = a.lattice()?;
    let mut transitive_idx: Vec<usize> = Vec::new();
    for (i, n) in lattice.subgroups.iter().enumerate() {
        if n.order() > 1 && a.normal_is_transitive(n)? {
            transitive_idx.push(i);
        }
    }
    // Degree-one actions: the trivial subgroup is the (transitive) plinth.
    if a.degree() == 1 {
        let triv = PermGroup::trivial(a.ambient().degree());
        return Ok(PlinthReport {
            plinths: vec![triv.clone()],
            flags: vec![PlinthFlags {
                regular: true,
                perfect: true,
                soluble: true,
            }],
            superplinth: triv.clone(),
            rad: triv,
        });
    }
    let plinth_idx: Vec<usize> = transitive_idx
        .iter()
        .copied()
        .filter(|&i| {
            transitive_idx
                .iter()
                .all(|&j| j == i || !lattice.contains[i][j])
        })
        .collect();
    let plinths: Vec<PermGroup> = plinth_idx
        .iter()
        .map(|&i| lattice.subgroups[i].clone())
        .collect();
    assert!(!plinths.is_empty(), "every finite transitive group has a plinth");

    let mut superplinth = PermGroup::trivial(a.ambient().degree());
    for k in &plinths {
        superplinth = join(&superplinth, k)?;
    }

    let rad = if plinths.len() == 1 {
        // Unique plinth: intersect the proper subgroups of the plinth that
        // are maximal with respect to being normal in G.
        let maxes = lattice.maximal_normal_below(&plinths[0])?;
        intersect_all(a, &plinths[0], &maxes)?
    } else {
        let (first, rest) = plinths.split_first().expect("non-empty");
        intersect_all(a, first, rest)?
    };

    let mut flags = Vec::with_capacity(plinths.len());
    for k in &plinths {
        let regular = a.normal_is_semiregular(k)?;
        let series = crate::iso::derived_series_orders(k);
        let perfect = series.len() == 1;
        let soluble = *series.last().expect("non-empty") == 1;
        flags.push(PlinthFlags {
            regular,
            perfect,
            soluble,
        });
    }
    Ok(PlinthReport {
        plinths,
        flags,
        superplinth,
        rad,
    })
}

fn intersect_all(
    a: &TransitiveAction,
    start: &PermGroup,
    rest: &[PermGroup],
) -> Result<PermGroup> {
    let mut acc = start.clone();
    for m in rest {
        acc = intersection(&acc, m, a.caps())?;
    }
    Ok(acc)
}

/// The action of `G/N` on the `N`-orbits (equivalently, on the cosets of
/// `N·H`), together with the projection from the ambient group.
///
/// When `core(G, N·H) = N` the quotient is realized directly as the coset
/// action on `N·H`; otherwise `G/N` is realized regularly on the cosets of
/// `N` with `(N·H)/N` designated.
pub fn quotient_action(
    a: &TransitiveAction,
    n: &PermGroup,
) -> Result<(TransitiveAction, Homomorphism)> {
    let g = a.ambient();
    if !is_normal_in(g, n) {
        return Err(Error::NotNormal);
    }
    if n.order() == 1 {
        // Quotient by the trivial subgroup: the action itself, re-realized.
        let act = a.realize()?;
        let hom = Homomorphism::from_images(g, &act.image, act.hom.gen_images().to_vec())?;
        let qa = make_action(&act.image, &act.point_stab, *a.caps())?;
        return Ok((qa, hom));
    }
    let nh = join(n, a.stab())?;
    if nh.order() == a.group_order() {
        return Err(Error::NormalButTransitive);
    }
    let c = core(g, &nh, a.caps())?;
    if c.same_group_as(n) {
        let act = crate::coset::coset_action(g, &nh, a.caps().degree_cap)?;
        let qa = make_action(&act.image, &act.point_stab, *a.caps())?;
        let hom = Homomorphism::from_images(g, &act.image, act.hom.gen_images().to_vec())?;
        return Ok((qa, hom));
    }
    let act = crate::coset::coset_action(g, n, a.caps().degree_cap)?;
    let stab_image = act.hom.apply_subgroup(&nh);
    let qa = make_action(&act.image, &stab_image, *a.caps())?;
    let hom = Homomorphism::from_images(g, &act.image, act.hom.gen_images().to_vec())?;
    Ok((qa, hom))
}

/// The eleven innately transitive types (AS and ASQ split by plinth
/// regularity).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ItType {
    Ha,
    Hs,
    Hc,
    AsReg,
    AsNonReg,
    Tw,
    Sd,
    Cd,
    AsqReg,
    AsqNonReg,
    Pa,
    Pq,
    Dq,
}

impl ItType {
    pub fn label(self) -> &'static str {
        match self {
            ItType::Ha => "HA",
            ItType::Hs => "HS",
            ItType::Hc => "HC",
            ItType::AsReg => "AS_reg",
            ItType::AsNonReg => "AS_nonreg",
            ItType::Tw => "TW",
            ItType::Sd => "SD",
            ItType::Cd => "CD",
            ItType::AsqReg => "ASQ_reg",
            ItType::AsqNonReg => "ASQ_nonreg",
            ItType::Pa => "PA",
            ItType::Pq => "PQ",
            ItType::Dq => "DQ",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ItClassification {
    pub ty: ItType,
    /// Set when the label came from the inferred branch of the decision tree
    /// (non-regular plinth with non-trivial centralizer and several simple
    /// factors).
    pub derived_rule: bool,
    /// For DQ, the `r` with `|K_ω| = |T|^r`, reported but not validated.
    pub dq_r: Option<u32>,
}

/// Classifies an innately transitive action by its plinth data.
pub fn classify_it_type(a: &TransitiveAction) -> Result<ItClassification> {
    a.cached_it(|| classify_it_type_uncached(a))
}

fn classify_it_type_uncached(a: &TransitiveAction) -> Result<ItClassification> {
    let lattice = a.lattice()?;
    let mut transitive_minimal: Vec<PermGroup> = Vec::new();
    for i in lattice.minimal_normal_indices() {
        if a.normal_is_transitive(&lattice.subgroups[i])? {
            transitive_minimal.push(lattice.subgroups[i].clone());
        }
    }
    let Some(k) = transitive_minimal.first().cloned() else {
        return Err(Error::NotInnatelyTransitive);
    };

    // Abelian plinth: affine type.
    if is_abelian(&k) {
        return Ok(ItClassification {
            ty: ItType::Ha,
            derived_rule: false,
            dq_r: None,
        });
    }

    // Two transitive minimal normal subgroups: holomorph types.
    if transitive_minimal.len() >= 2 {
        let simple = crate::structure::is_simple(&k, a.caps())?;
        return Ok(ItClassification {
            ty: if simple { ItType::Hs } else { ItType::Hc },
            derived_rule: false,
            dq_r: None,
        });
    }

    // Simple-factor decomposition of the plinth.
    let k_lattice = crate::lattice::normal_subgroups(&k, a.caps())?;
    let factors = k_lattice.minimal_normal_subgroups();
    let factor_product: u128 = factors.iter().map(|f| f.order()).product();
    assert_eq!(
        factor_product,
        k.order(),
        "a non-abelian plinth of an innately transitive group splits into its simple factors"
    );
    let kcount = factors.len();
    let t_order = factors[0].order();

    let k_regular = a.normal_is_semiregular(&k)?;
    let k_omega = a.stab_intersection(&k)?;

    // The ambient group is already enumerable (the lattice needed it), so
    // the centralizer of the plinth comes from a brute filter of the
    // element table.
    let cent = ambient_centralizer(a.ambient(), &k, a.caps())?;
    let cent_trivial = cent.order() == 1;

    if cent_trivial {
        if kcount == 1 {
            return Ok(ItClassification {
                ty: if k_regular {
                    ItType::AsReg
                } else {
                    ItType::AsNonReg
                },
                derived_rule: false,
                dq_r: None,
            });
        }
        if k_regular {
            return Ok(ItClassification {
                ty: ItType::Tw,
                derived_rule: false,
                dq_r: None,
            });
        }
        let diag = diagonal_shape(a, &k_omega, &factors, t_order)?;
        let ty = match diag {
            DiagonalShape::FullDiagonal => ItType::Sd,
            DiagonalShape::ProductOfDiagonals => ItType::Cd,
            DiagonalShape::Neither => ItType::Pa,
        };
        return Ok(ItClassification {
            ty,
            derived_rule: false,
            dq_r: None,
        });
    }

    // Non-trivial centralizer.
    if kcount == 1 {
        return Ok(ItClassification {
            ty: if k_regular {
                ItType::AsqReg
            } else {
                ItType::AsqNonReg
            },
            derived_rule: false,
            dq_r: None,
        });
    }
    if !k_regular {
        // Inferred branch of the decision tree.
        return Ok(ItClassification {
            ty: ItType::Pa,
            derived_rule: true,
            dq_r: None,
        });
    }
    // Regular plinth with several factors and a non-trivial centralizer:
    // classify the quotient action by the centralizer's orbits.
    let (qa, _qhom) = quotient_action(a, &cent)?;
    let sub = classify_it_type(&qa)?;
    let ty = match sub.ty {
        ItType::Pa => ItType::Pq,
        ItType::Sd | ItType::Cd => ItType::Dq,
        other => {
            return Err(Error::NotApplicable(format!(
                "quotient by the centralizer has unexpected type {}",
                other.label()
            )))
        }
    };
    let dq_r = if ty == ItType::Dq {
        exact_log(k_omega.order(), t_order)
    } else {
        None
    };
    Ok(ItClassification {
        ty,
        derived_rule: sub.derived_rule,
        dq_r,
    })
}

/// `C_G(K)` by brute filter over the element table of `G`.
fn ambient_centralizer(g: &PermGroup, k: &PermGroup, caps: &crate::config::Caps) -> Result<PermGroup> {
    let table = crate::table::ElementTable::build(g, caps.order_cap)?;
    let mut gens: Vec<Permutation> = Vec::new();
    for id in 1..table.len() as u32 {
        let e = table.perm(id);
        if k.generators()
            .iter()
            .all(|x| e.compose(x) == x.compose(&e))
        {
            gens.push(e);
        }
    }
    let degree = g.degree();
    Ok(PermGroup::new(
        degree,
        crate::subgroup::reduced_generators(degree, &gens),
    ))
}

fn is_abelian(g: &PermGroup) -> bool {
    let gens = g.generators();
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
}

fn exact_log(mut n: u128, base: u128) -> Option<u32> {
    let mut r = 0;
    while n > 1 {
        if n % base != 0 {
            return None;
        }
        n /= base;
        r += 1;
    }
    Some(r)
}

enum DiagonalShape {
    FullDiagonal,
    ProductOfDiagonals,
    Neither,
}

/// Shape of `K_ω` relative to the simple-factor decomposition of `K`:
/// projection orders are counted via `|proj_i(S)| = |S| / |S ∩ D_i|` with
/// `D_i` the product of the other factors.
fn diagonal_shape(
    a: &TransitiveAction,
    k_omega: &PermGroup,
    factors: &[PermGroup],
    t_order: u128,
) -> Result<DiagonalShape> {
    let caps = a.caps();
    let kcount = factors.len();
    let degree = factors[0].degree();
    // D_i = product of all factors except i.
    let mut co_factors: Vec<PermGroup> = Vec::with_capacity(kcount);
    for i in 0..kcount {
        let mut d = PermGroup::trivial(degree);
        for (j, f) in factors.iter().enumerate() {
            if j != i {
                d = join(&d, f)?;
            }
        }
        co_factors.push(d);
    }
    for d in &co_factors {
        let meet = intersection(k_omega, d, caps)?;
        if k_omega.order() / meet.order() != t_order {
            return Ok(DiagonalShape::Neither);
        }
    }
    if k_omega.order() == t_order {
        return Ok(DiagonalShape::FullDiagonal);
    }
    // Link factors i ~ j when the joint projection is diagonal; the blocks
    // of the resulting partition carry one diagonal each.
    let mut block = (0..kcount).collect::<Vec<usize>>();
    for i in 0..kcount {
        for j in i + 1..kcount {
            let mut d_ij = PermGroup::trivial(degree);
            for (l, f) in factors.iter().enumerate() {
                if l != i && l != j {
                    d_ij = join(&d_ij, f)?;
                }
            }
            let meet = intersection(k_omega, &d_ij, caps)?;
            let proj = k_omega.order() / meet.order();
            if proj == t_order {
                let (bi, bj) = (block[i], block[j]);
                let lo = bi.min(bj);
                for b in block.iter_mut() {
                    if *b == bi || *b == bj {
                        *b = lo;
                    }
                }
            }
        }
    }
    let mut blocks: Vec<usize> = block.clone();
    blocks.sort_unstable();
    blocks.dedup();
    let m = blocks.len();
    let sizes_ok = blocks
        .iter()
        .all(|&b| block.iter().filter(|&&x| x == b).count() >= 2);
    if m >= 2 && sizes_ok && k_omega.order() == t_order.pow(m as u32) {
        Ok(DiagonalShape::ProductOfDiagonals)
    } else {
        Ok(DiagonalShape::Neither)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureCase {
    /// Unique non-regular plinth.
    AI,
    /// Unique regular plinth.
    AII,
    /// At least two plinths (all regular).
    B,
}

impl StructureCase {
    pub fn label(self) -> &'static str {
        match self {
            StructureCase::AI => "a_i",
            StructureCase::AII => "a_ii",
            StructureCase::B => "b",
        }
    }
}

/// Structure classification of a semiprimitive action.
#[derive(Clone, Debug)]
pub struct StructureReport {
    pub case: StructureCase,
    /// The intersection used: the radical in case (a); the intersection of
    /// the plinths in case (b).
    pub s: PermGroup,
    pub quotient_types: Vec<ItClassification>,
    /// Comparison of the glued product of the quotient actions with the
    /// quotient by `s`.
    pub glue_witness: IsoOutcome,
}

pub fn classify_structure(a: &TransitiveAction) -> Result<StructureReport> {
    let preds = sp_predicates(a)?;
    if !preds.is_semiprimitive {
        return Err(Error::NotSemiprimitive);
    }
    let report = plinth_report(a)?;
    let lattice = a.lattice()?;

    if report.plinths.len() >= 2 {
        assert!(
            report.flags.iter().all(|f| f.regular),
            "with several plinths every plinth is regular"
        );
        let mut s = report.plinths[0].clone();
        for k in &report.plinths[1..] {
            s = intersection(&s, k, a.caps())?;
        }
        // Classify the quotient by each pairwise intersection; all must be
        // of the same holomorph type.
        let mut quotient_types = Vec::new();
        for i in 0..report.plinths.len() {
            for j in i + 1..report.plinths.len() {
                let m = intersection(&report.plinths[i], &report.plinths[j], a.caps())?;
                let (qa, _) = quotient_action(a, &m)?;
                let cls = classify_it_type(&qa)?;
                assert!(
                    matches!(cls.ty, ItType::Hs | ItType::Hc),
                    "pairwise plinth quotients are of type HS or HC"
                );
                quotient_types.push(cls);
            }
        }
        assert!(
            quotient_types.windows(2).all(|w| w[0].ty == w[1].ty),
            "pairwise plinth quotients share one type"
        );
        let glue_witness = glue_reconstruction_witness(a, &s)?;
        return Ok(StructureReport {
            case: StructureCase::B,
            s,
            quotient_types,
            glue_witness,
        });
    }

    let k = &report.plinths[0];
    let s_set = lattice.maximal_normal_below(k)?;
    let s = intersect_all(a, k, &s_set)?;
    debug_assert!(s.same_group_as(&report.rad));
    let mut quotient_types = Vec::new();
    for m in &s_set {
        let cls = if m.order() == 1 {
            classify_it_type(a)?
        } else {
            let (qa, _) = quotient_action(a, m)?;
            classify_it_type(&qa)?
        };
        quotient_types.push(cls);
    }
    let k_regular = report.flags[0].regular;
    let case = if k_regular {
        StructureCase::AII
    } else {
        StructureCase::AI
    };
    let allowed: &[ItType] = if k_regular {
        &[
            ItType::AsReg,
            ItType::AsqReg,
            ItType::Ha,
            ItType::Tw,
            ItType::Dq,
            ItType::Pq,
        ]
    } else {
        &[
            ItType::AsNonReg,
            ItType::AsqNonReg,
            ItType::Pa,
            ItType::Sd,
            ItType::Cd,
        ]
    };
    for cls in &quotient_types {
        assert!(
            allowed.contains(&cls.ty),
            "quotient type {} is not allowed in case {}",
            cls.ty.label(),
            case.label()
        );
    }
    let has = |t: ItType| quotient_types.iter().any(|c| c.ty == t);
    assert!(
        !(has(ItType::Sd) && has(ItType::Cd)),
        "SD and CD quotients cannot co-occur"
    );
    assert!(
        !(has(ItType::AsReg) && has(ItType::Dq)),
        "AS_reg and DQ quotients cannot co-occur"
    );
    let glue_witness = glue_reconstruction_witness(a, &s)?;
    Ok(StructureReport {
        case,
        s,
        quotient_types,
        glue_witness,
    })
}

/// Rebuilds the glued product of the quotient actions of `a` by the direct
/// factors over `s` and compares it with the quotient by `s`.
fn glue_reconstruction_witness(a: &TransitiveAction, s: &PermGroup) -> Result<IsoOutcome> {
    let aq: TransitiveAction = if s.order() == 1 {
        a.clone()
    } else {
        quotient_action(a, s)?.0
    };
    // Anchor plinth of the quotient and its direct decomposition into
    // minimal normal subgroups of the quotient group; the glue components
    // are the quotients by the co-factors (the pairwise intersections).
    let qreport = plinth_report(&aq)?;
    let kq = qreport.plinths[0].clone();
    let qlat = aq.lattice()?;
    let mut parts: Vec<PermGroup> = Vec::new();
    let mut prod = PermGroup::trivial(aq.ambient().degree());
    for i in qlat.minimal_normal_indices() {
        let l = &qlat.subgroups[i];
        if prod.order() == kq.order() {
            break;
        }
        if !kq.contains_group(l) {
            continue;
        }
        if intersection(l, &prod, aq.caps())?.order() == 1 {
            parts.push(l.clone());
            prod = join(&prod, l)?;
        }
    }
    if parts.len() <= 1 || prod.order() != kq.order() {
        // A single factor glues to itself.
        return is_perm_isomorphic(&aq, &aq, aq.caps().effort_cap);
    }
    let glued = glue::glue_quotient_family(&aq, &parts)?;
    is_perm_isomorphic(&glued, &aq, aq.caps().effort_cap)
}

/// The plinth-faithfulness criterion: the action is semiprimitive iff the
/// stabilizer acts faithfully on `K/Y` for every normal `Y < K`, where the
/// kernel of that action is `{h : [K, h] ≤ Y}`.
#[derive(Clone, Debug)]
pub struct FqcReport {
    pub holds: bool,
    /// A failing pair: the quotient kernel `Y` and a non-trivial stabilizer
    /// element acting trivially on `K/Y`.
    pub witness: Option<(PermGroup, Permutation)>,
}

pub fn faithful_quotient_criterion(a: &TransitiveAction, k: &PermGroup) -> Result<FqcReport> {
    let lattice = a.lattice()?;
    let stab_elements = a
        .stab()
        .elements_capped(a.caps().small_subgroup_cap)
        .map_err(|_| Error::CapacityExceeded {
            what: "stabilizer enumeration",
            needed: a.stab_order(),
            cap: a.caps().small_subgroup_cap,
        })?;
    for y in &lattice.subgroups {
        if y.order() >= k.order() || !k.contains_group(y) {
            continue;
        }
        for h in &stab_elements {
            if h.is_identity() {
                continue;
            }
            // [K, h] ≤ Y iff every generator commutator lands in Y
            // (Y is normalized by K).
            if k.generators()
                .iter()
                .all(|kg| y.contains(&Permutation::commutator(kg, h)))
            {
                return Ok(FqcReport {
                    holds: false,
                    witness: Some((y.clone(), h.clone())),
                });
            }
        }
    }
    Ok(FqcReport {
        holds: true,
        witness: None,
    })
}

/// The centralizer homomorphism `φ : K_σ → C_G(K)` at a realized point.
#[derive(Debug)]
pub struct CentHomReport {
    /// Orbit of `ω` under the centralizer, in the realized action.
    pub sigma: Vec<u32>,
    pub centralizer: PermGroup,
    pub k_sigma: PermGroup,
    pub k_omega: PermGroup,
    pub phi: Homomorphism,
}

pub fn cent_hom(a: &TransitiveAction, k: &PermGroup, omega: u32) -> Result<CentHomReport> {
    if !a.normal_is_transitive(k)? {
        return Err(Error::NotTransitive);
    }
    let realized = a.realize()?;
    let g = &realized.image;
    let rk = realized.hom.apply_subgroup(k).with_order_hint(k.order());
    let cent = centralizer_of_transitive(g, &rk)?;
    let mut sigma = cent.orbit(omega)?;
    sigma.sort_unstable();

    // K_σ: the setwise stabilizer of σ in K, via the block action on the
    // centralizer's orbits.
    let degree = g.degree();
    let orbits = cent.orbits();
    let mut block_of = vec![0u32; degree];
    for (bi, orbit) in orbits.iter().enumerate() {
        for &p in orbit {
            block_of[p as usize] = bi as u32;
        }
    }
    let block_images: Vec<Permutation> = rk
        .generators()
        .iter()
        .map(|gen| {
            let mut imgs = vec![0u32; orbits.len()];
            for (bi, orbit) in orbits.iter().enumerate() {
                imgs[bi] = block_of[gen.image(orbit[0]) as usize];
            }
            Permutation::from_images(imgs).expect("blocks are permuted")
        })
        .collect();
    let block_group = PermGroup::new(orbits.len(), block_images.clone());
    let block_hom = Homomorphism::from_images(&rk, &block_group, block_images)?;
    let sigma_block = block_of[omega as usize];
    let bstab = block_group.point_stabilizer(sigma_block)?;
    let k_sigma = block_hom.preimage_subgroup(&bstab)?;

    // Cross-check: K_σ = K ∩ (C_G(K)·G_ω), the elements whose conjugation
    // action agrees with a stabilizer element.
    let g_omega = g.point_stabilizer(omega)?;
    let alt = intersection(&rk, &join(&cent, &g_omega)?, a.caps())?;
    assert!(
        k_sigma.same_group_as(&alt),
        "setwise stabilizer must match the conjugation description"
    );

    // φ maps k to the unique centralizing element r_k with k·r_k fixing ω.
    let cent_elements = cent.elements_capped(degree as u128)?;
    let mut pairs: Vec<(Permutation, Permutation)> = Vec::new();
    for kg in k_sigma.generators() {
        let target = kg.image(omega);
        let r = cent_elements
            .iter()
            .find(|c| c.image(target) == omega)
            .expect("the centralizer is transitive on sigma");
        pairs.push((kg.clone(), r.clone()));
    }
    let phi = Homomorphism::from_pairs(&k_sigma, &cent, pairs)?;
    assert_eq!(
        phi.image().order(),
        cent.order(),
        "phi is surjective onto the centralizer"
    );
    let k_omega = intersection(&rk, &g_omega, a.caps())?;
    assert!(
        phi.kernel().same_group_as(&k_omega),
        "the kernel of phi is the point stabilizer in K"
    );
    Ok(CentHomReport {
        sigma,
        centralizer: cent,
        k_sigma,
        k_omega,
        phi,
    })
}

/// Minimal degree, the index bound, and `p`-cycle consistency on the
/// realized action.
#[derive(Clone, Debug)]
pub struct PropertyChecks {
    pub minimal_degree: u64,
    /// False when the group was too large to enumerate and the value is only
    /// an upper bound from sampled elements.
    pub minimal_degree_exact: bool,
    /// Whether some element is a single cycle of prime length.
    pub p_cycle: Option<u64>,
    pub contains_alt: bool,
    pub bochert_holds: bool,
    pub p_cycle_consistent: bool,
}

pub fn property_checks(a: &TransitiveAction) -> Result<PropertyChecks> {
    let realized = a.realize()?;
    let g = &realized.image;
    let n = g.degree();

    let mut minimal_degree = u64::MAX;
    let mut p_cycle = None;
    let mut exact = true;
    match crate::table::ElementTable::build(g, a.caps().order_cap) {
        Ok(table) => {
            for id in 1..table.len() as u32 {
                let row = table.row(id);
                minimal_degree = minimal_degree.min(row_support(row));
                if p_cycle.is_none() {
                    if let Some(p) = row_prime_cycle(row) {
                        p_cycle = Some(p);
                    }
                }
            }
        }
        Err(_) => {
            exact = false;
            // Sampled upper bound: generators and short products.
            let gens = g.generators();
            for e in gens {
                minimal_degree = minimal_degree.min(e.support_size() as u64);
                if let Some(p) = e.prime_cycle_length() {
                    p_cycle = Some(p);
                }
            }
            for x in gens {
                for y in gens {
                    let e = x.compose(y);
                    if !e.is_identity() {
                        minimal_degree = minimal_degree.min(e.support_size() as u64);
                        if let Some(p) = e.prime_cycle_length() {
                            p_cycle = Some(p);
                        }
                    }
                }
            }
        }
    }

    let contains_alt = contains_alternating(g);
    let bochert_holds = contains_alt || {
        match factorial_u128(n as u128) {
            Some(nf) => {
                let index = nf / g.order();
                match factorial_u128(((n as u128) + 1) / 2) {
                    Some(bound) => index >= bound,
                    None => true,
                }
            }
            // Degrees too large to evaluate the factorial carry an
            // astronomically large index.
            None => true,
        }
    };
    let preds = sp_predicates(a)?;
    let primitive = preds.is_primitive.unwrap_or(false);
    let p_cycle_consistent = !(preds.is_semiprimitive && p_cycle.is_some() && !primitive);
    Ok(PropertyChecks {
        minimal_degree,
        minimal_degree_exact: exact,
        p_cycle,
        contains_alt,
        bochert_holds,
        p_cycle_consistent,
    })
}

fn row_support(row: &[u32]) -> u64 {
    row.iter()
        .enumerate()
        .filter(|&(p, &q)| p as u32 != q)
        .count() as u64
}

/// `Some(p)` when the row is a single cycle of prime length `p`.
fn row_prime_cycle(row: &[u32]) -> Option<u64> {
    let start = row.iter().enumerate().find(|&(p, &q)| p as u32 != q)?;
    let mut len = 0u64;
    let mut q = start.0 as u32;
    loop {
        q = row[q as usize];
        len += 1;
        if q == start.0 as u32 {
            break;
        }
    }
    if len == row_support(row) && crate::perm::is_prime(len) {
        Some(len)
    } else {
        None
    }
}

fn contains_alternating(g: &PermGroup) -> bool {
    let n = g.degree();
    if n < 3 {
        return true;
    }
    let three = Permutation::parse("(0 1 2)", n).expect("parses");
    let big: Permutation = if n % 2 == 1 {
        let imgs: Vec<u32> = (0..n as u32).map(|p| (p + 1) % n as u32).collect();
        Permutation::from_images(imgs).expect("cycle")
    } else {
        let mut imgs: Vec<u32> = (0..n as u32).collect();
        for p in 1..n {
            imgs[p] = if p + 1 < n { p as u32 + 1 } else { 1 };
        }
        Permutation::from_images(imgs).expect("cycle")
    };
    g.contains(&three) && g.contains(&big)
}

fn factorial_u128(n: u128) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 2..=n {
        acc = acc.checked_mul(i)?;
    }
    Some(acc)
}

/// Convenience wrapper used by tests and the CLI: the lattice as a list.
pub fn normal_subgroup_orders(a: &TransitiveAction) -> Result<Vec<u128>> {
    Ok(a.lattice()?.orders())
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

    fn natural(g: PermGroup) -> TransitiveAction {
        let stab = g.point_stabilizer(0).unwrap();
        make_action(&g, &stab, Caps::default()).unwrap()
    }

    fn d30_action() -> TransitiveAction {
        natural(gp(
            15,
            &[
                "(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14)",
                "(1 14)(2 13)(3 12)(4 11)(5 10)(6 9)(7 8)",
            ],
        ))
    }

    #[test]
    fn d30_is_semiprimitive_not_quasiprimitive() {
        let a = d30_action();
        let p = sp_predicates(&a).unwrap();
        assert!(p.is_semiprimitive);
        assert!(!p.is_quasiprimitive);
        assert_eq!(p.is_primitive, Some(false));
        assert!(!p.is_innately_transitive);
    }

    #[test]
    fn d8_on_4_is_not_semiprimitive() {
        let a = natural(gp(4, &["(0 1 2 3)", "(1 3)"]));
        let p = sp_predicates(&a).unwrap();
        assert!(!p.is_semiprimitive);
        let witness = p.witness.unwrap();
        assert_eq!(witness.order(), 4);
        // the witness is the Klein subgroup ⟨(0 2), (1 3)⟩
        assert!(witness.contains(&Permutation::parse("(0 2)", 4).unwrap()));
        assert!(witness.contains(&Permutation::parse("(1 3)", 4).unwrap()));
    }

    #[test]
    fn regular_actions_are_semiprimitive() {
        let q8ish = gp(8, &["(0 1 2 3 4 5 6 7)"]); // C8 regular
        let a = make_action(&q8ish, &PermGroup::trivial(8), Caps::default()).unwrap();
        assert!(sp_predicates(&a).unwrap().is_semiprimitive);
    }

    #[test]
    fn d30_plinths() {
        let a = d30_action();
        let r = plinth_report(&a).unwrap();
        assert_eq!(r.plinths.len(), 1);
        assert_eq!(r.plinths[0].order(), 15);
        assert_eq!(r.superplinth.order(), 15);
        assert_eq!(r.rad.order(), 1);
        assert!(r.flags[0].regular);
        assert!(r.flags[0].soluble);
        assert!(!r.flags[0].perfect);
    }

    #[test]
    fn alt5_natural_plinth() {
        let a = natural(gp(5, &["(0 1 2)", "(2 3 4)"]));
        let r = plinth_report(&a).unwrap();
        assert_eq!(r.plinths.len(), 1);
        assert_eq!(r.plinths[0].order(), 60);
        assert_eq!(r.rad.order(), 1);
        assert!(!r.flags[0].regular);
        assert!(r.flags[0].perfect);
    }

    #[test]
    fn d30_quotient_by_c5() {
        let a = d30_action();
        let c5 = gp(15, &["(0 3 6 9 12)(1 4 7 10 13)(2 5 8 11 14)"]);
        let (qa, _hom) = quotient_action(&a, &c5).unwrap();
        assert_eq!(qa.degree(), 3);
        assert_eq!(qa.stab_order(), a.stab_order());
        assert!(sp_predicates(&qa).unwrap().is_semiprimitive);
    }

    #[test]
    fn classify_alt5_on_cosets_of_alt4() {
        let a = natural(gp(5, &["(0 1 2)", "(2 3 4)"]));
        let cls = classify_it_type(&a).unwrap();
        assert_eq!(cls.ty, ItType::AsNonReg);
        assert!(!cls.derived_rule);
    }

    #[test]
    fn classify_hs_diag() {
        // Alt(5)² on the cosets of the diagonal.
        let g = gp(10, &["(0 1 2)", "(2 3 4)", "(5 6 7)", "(7 8 9)"]);
        let diag = gp(10, &["(0 1 2)(5 6 7)", "(2 3 4)(7 8 9)"]);
        let a = make_action(&g, &diag, Caps::default()).unwrap();
        assert_eq!(a.degree(), 60);
        let cls = classify_it_type(&a).unwrap();
        assert_eq!(cls.ty, ItType::Hs);
    }

    #[test]
    fn classify_frobenius_ha() {
        // C5 ⋊ C4 on 5 points.
        let g = gp(5, &["(0 1 2 3 4)", "(1 2 4 3)"]);
        assert_eq!(g.order(), 20);
        let a = natural(g);
        let cls = classify_it_type(&a).unwrap();
        assert_eq!(cls.ty, ItType::Ha);
    }

    #[test]
    fn classify_structure_d30() {
        let a = d30_action();
        let r = classify_structure(&a).unwrap();
        assert_eq!(r.case, StructureCase::AII);
        assert_eq!(r.s.order(), 1);
        let mut types: Vec<ItType> = r.quotient_types.iter().map(|c| c.ty).collect();
        types.sort_unstable();
        assert_eq!(types, vec![ItType::Ha, ItType::Ha]);
        assert!(r.glue_witness.is_proven_yes());
    }

    #[test]
    fn classify_structure_alt5() {
        let a = natural(gp(5, &["(0 1 2)", "(2 3 4)"]));
        let r = classify_structure(&a).unwrap();
        assert_eq!(r.case, StructureCase::AI);
        assert_eq!(r.quotient_types.len(), 1);
        assert_eq!(r.quotient_types[0].ty, ItType::AsNonReg);
    }

    #[test]
    fn fqc_matches_semiprimitivity() {
        let a = d30_action();
        let c15 = gp(15, &["(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14)"]);
        let r = faithful_quotient_criterion(&a, &c15).unwrap();
        assert!(r.holds);

        let b = natural(gp(4, &["(0 1 2 3)", "(1 3)"]));
        let c4 = gp(4, &["(0 1 2 3)"]);
        let rb = faithful_quotient_criterion(&b, &c4).unwrap();
        assert!(!rb.holds);
        let (y, h) = rb.witness.unwrap();
        assert_eq!(y.order(), 2);
        assert!(!h.is_identity());
    }

    #[test]
    fn cent_hom_regular_case() {
        // D10 with K = C5: the centralizer is K itself and phi is bijective.
        let g = gp(5, &["(0 1 2 3 4)", "(1 4)(2 3)"]);
        let a = natural(g);
        let c5 = gp(5, &["(0 1 2 3 4)"]);
        let r = cent_hom(&a, &c5, 0).unwrap();
        assert_eq!(r.centralizer.order(), 5);
        assert_eq!(r.k_sigma.order(), 5);
        assert_eq!(r.k_omega.order(), 1);
        assert_eq!(r.phi.kernel().order(), 1);
    }

    #[test]
    fn cent_hom_trivial_centralizer() {
        let a = natural(gp(5, &["(0 1 2)", "(2 3 4)"]));
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let r = cent_hom(&a, &a5, 0).unwrap();
        assert_eq!(r.centralizer.order(), 1);
        assert_eq!(r.sigma, vec![0]);
        assert_eq!(r.k_omega.order(), 12);
    }

    #[test]
    fn property_checks_examples() {
        let s5 = natural(gp(5, &["(0 1 2 3 4)", "(0 1)"]));
        let p = property_checks(&s5).unwrap();
        assert_eq!(p.minimal_degree, 2);
        assert!(p.contains_alt);

        let a6 = natural(gp(6, &["(0 1 2)", "(1 2 3 4 5)"]));
        assert_eq!(a6.group_order(), 360);
        let p = property_checks(&a6).unwrap();
        assert_eq!(p.minimal_degree, 3);

        let d30 = d30_action();
        let p = property_checks(&d30).unwrap();
        assert_eq!(p.p_cycle, None);
        assert!(p.p_cycle_consistent);
        assert_eq!(p.minimal_degree, 14);
    }
}
