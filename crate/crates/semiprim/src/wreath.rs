//! Finite wreath products in product and imprimitive action, and the
//! semiprimitivity criterion for the product action.

use crate::action::{make_action, TransitiveAction};
use crate::analysis::sp_predicates;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::subgroup::pointwise_stabilizer;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WreathMode {
    /// `M wr T` on `Δ^I`: the base group acts coordinatewise and `T`
    /// permutes coordinates.
    Product,
    /// `M wr T` on `Δ × I`.
    Imprimitive,
}

/// A wreath product `M wr T` with `M` a transitive action on `Δ` and `T` a
/// non-trivial permutation group on the index set `I`.
#[derive(Clone)]
pub struct WreathSpec {
    pub m: TransitiveAction,
    pub top: PermGroup,
    pub mode: WreathMode,
}

impl WreathSpec {
    pub fn new(m: TransitiveAction, top: PermGroup, mode: WreathMode) -> Result<WreathSpec> {
        if top.order() == 1 || top.degree() == 0 {
            return Err(Error::NotApplicable(
                "the top group of a wreath product must be non-trivial".into(),
            ));
        }
        Ok(WreathSpec { m, top, mode })
    }
}

/// Builds the wreath product action.
///
/// Both modes share the faithful realization on `Δ × I` (point `(δ, i)` is
/// index `i·|Δ| + δ`). In product mode that realization is the ambient group
/// and the stabilizer of the constant function is designated, giving the
/// action on `Δ^I` of degree `|Δ|^|I|`; in imprimitive mode the realization
/// itself is the action.
pub fn wreath_build(spec: &WreathSpec) -> Result<TransitiveAction> {
    let caps = *spec.m.caps();
    let realized = spec.m.realize()?;
    let mgroup = &realized.image;
    let dm = mgroup.degree();
    let it = spec.top.degree();
    let total = dm * it;

    let mut gens: Vec<Permutation> = Vec::new();
    for g in mgroup.generators() {
        for i in 0..it {
            gens.push(g.shifted(i * dm, total));
        }
    }
    for t in spec.top.generators() {
        let mut images = vec![0u32; total];
        for i in 0..it {
            let ti = t.image(i as u32) as usize;
            for d in 0..dm {
                images[i * dm + d] = (ti * dm + d) as u32;
            }
        }
        gens.push(Permutation::from_images(images).expect("block permutation"));
    }
    let wreath = PermGroup::new(total, gens);
    let base_order = mgroup.order().pow(it as u32);
    assert_eq!(
        wreath.order(),
        base_order * spec.top.order(),
        "wreath product order must be |M|^|I|·|T|"
    );

    match spec.mode {
        WreathMode::Product => {
            let degree = (dm as u128)
                .checked_pow(it as u32)
                .filter(|&d| d <= caps.degree_cap as u128)
                .ok_or(Error::CapacityExceeded {
                    what: "wreath product action degree",
                    needed: (dm as u128).checked_pow(it as u32).unwrap_or(u128::MAX),
                    cap: caps.degree_cap as u128,
                })?;
            let mut stab_gens: Vec<Permutation> = Vec::new();
            for g in realized.point_stab.generators() {
                for i in 0..it {
                    stab_gens.push(g.shifted(i * dm, total));
                }
            }
            for t in spec.top.generators() {
                let mut images = vec![0u32; total];
                for i in 0..it {
                    let ti = t.image(i as u32) as usize;
                    for d in 0..dm {
                        images[i * dm + d] = (ti * dm + d) as u32;
                    }
                }
                stab_gens.push(Permutation::from_images(images).expect("block permutation"));
            }
            let stab = PermGroup::new(total, stab_gens);
            let action = make_action(&wreath, &stab, caps)?;
            assert_eq!(action.degree(), degree);
            Ok(action)
        }
        WreathMode::Imprimitive => {
            if !wreath.is_transitive() {
                return Err(Error::NotTransitive);
            }
            let stab = wreath.point_stabilizer(0)?;
            make_action(&wreath, &stab, caps)
        }
    }
}

/// Direct evaluation of the product-action semiprimitivity criterion:
/// either `M` is semiprimitive and non-regular with `T` transitive, or `M`
/// is regular and perfect with `T` faithful on each of its orbits.
pub fn wreath_sp_criterion(spec: &WreathSpec) -> Result<bool> {
    let m_preds = sp_predicates(&spec.m)?;
    let m_regular = spec.m.is_regular();
    if m_preds.is_semiprimitive && !m_regular && spec.top.is_transitive() {
        return Ok(true);
    }
    if m_regular {
        let series = crate::iso::derived_series_orders(spec.m.ambient());
        let perfect = series.len() == 1;
        if perfect && top_orbit_faithful(&spec.top) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn top_orbit_faithful(top: &PermGroup) -> bool {
    top.orbits()
        .iter()
        .all(|orbit| pointwise_stabilizer(top, orbit).order() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;

    fn gp(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(
            degree,
            gens.iter()
                .map(|s| Permutation::parse(s, degree).unwrap())
                .collect(),
        )
    }

    fn natural_action(g: PermGroup) -> TransitiveAction {
        let stab = g.point_stabilizer(0).unwrap();
        make_action(&g, &stab, Caps::default()).unwrap()
    }

    #[test]
    fn sym3_wr_sym2_product() {
        let s3 = natural_action(gp(3, &["(0 1 2)", "(0 1)"]));
        let c2 = gp(2, &["(0 1)"]);
        let spec = WreathSpec::new(s3, c2, WreathMode::Product).unwrap();
        let w = wreath_build(&spec).unwrap();
        assert_eq!(w.degree(), 9);
        assert_eq!(w.group_order(), 72);
    }

    #[test]
    fn c2_wr_c2_product() {
        let c2 = natural_action(gp(2, &["(0 1)"]));
        let top = gp(2, &["(0 1)"]);
        let spec = WreathSpec::new(c2, top, WreathMode::Product).unwrap();
        let w = wreath_build(&spec).unwrap();
        assert_eq!(w.degree(), 4);
        assert_eq!(w.group_order(), 8);
    }

    #[test]
    fn alt5_regular_wr_c2_product() {
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let reg = make_action(&a5, &PermGroup::trivial(5), Caps::default()).unwrap();
        let top = gp(2, &["(0 1)"]);
        let spec = WreathSpec::new(reg, top, WreathMode::Product).unwrap();
        let w = wreath_build(&spec).unwrap();
        assert_eq!(w.degree(), 3600);
        assert_eq!(w.group_order(), 7200);
    }

    #[test]
    fn imprimitive_mode() {
        let s3 = natural_action(gp(3, &["(0 1 2)", "(0 1)"]));
        let c2 = gp(2, &["(0 1)"]);
        let spec = WreathSpec::new(s3, c2, WreathMode::Imprimitive).unwrap();
        let w = wreath_build(&spec).unwrap();
        assert_eq!(w.degree(), 6);
        assert_eq!(w.group_order(), 72);
    }

    #[test]
    fn criterion_examples() {
        // Semiprimitive non-regular M with transitive T.
        let s3 = natural_action(gp(3, &["(0 1 2)", "(0 1)"]));
        let c2 = gp(2, &["(0 1)"]);
        let spec = WreathSpec::new(s3, c2.clone(), WreathMode::Product).unwrap();
        assert!(wreath_sp_criterion(&spec).unwrap());

        // Regular non-perfect M.
        let c2m = natural_action(gp(2, &["(0 1)"]));
        let spec = WreathSpec::new(c2m, c2.clone(), WreathMode::Product).unwrap();
        assert!(!wreath_sp_criterion(&spec).unwrap());

        // Regular perfect M with orbit-faithful T.
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let reg = make_action(&a5, &PermGroup::trivial(5), Caps::default()).unwrap();
        let spec = WreathSpec::new(reg, c2, WreathMode::Product).unwrap();
        assert!(wreath_sp_criterion(&spec).unwrap());
    }
}
