//! Structural predicates of a finite group: perfectness, solubility,
//! derived series, composition factors, characteristic simplicity.

use crate::config::Caps;
use crate::error::Result;
use crate::group::PermGroup;
use crate::iso::group_isomorphism;
use crate::lattice::{conjugacy_classes, normal_subgroups};
use crate::perm::is_prime;
use crate::subgroup::{derived_subgroup, join};
use crate::table::ElementTable;

/// A multiset of composition factors as `(order, abelian)` pairs; an
/// abelian simple group is cyclic of prime order, so the flag is just
/// primality of the order.
pub type CompositionFactors = Vec<(u64, bool)>;

#[derive(Clone, Debug)]
pub struct StructurePredicates {
    pub is_perfect: bool,
    pub is_soluble: bool,
    /// Orders along the derived series, starting at `|N|`, until it
    /// stabilizes.
    pub derived_series: Vec<u128>,
    pub composition_factors: CompositionFactors,
}

pub fn structure_predicates(n: &PermGroup, caps: &Caps) -> Result<StructurePredicates> {
    let mut series = vec![n.order()];
    let mut current = n.clone();
    loop {
        let next = derived_subgroup(&current);
        if next.order() == current.order() {
            break;
        }
        series.push(next.order());
        current = next;
        if current.order() == 1 {
            break;
        }
    }
    let is_perfect = series.len() == 1;
    let is_soluble = *series.last().expect("non-empty") == 1;
    let mut factors = composition_factors(n, caps)?;
    factors.sort_unstable();
    Ok(StructurePredicates {
        is_perfect,
        is_soluble,
        derived_series: series,
        composition_factors: factors,
    })
}

/// Composition factors by repeated descent through maximal normal subgroups;
/// each step contributes the simple quotient `(|N|/|M|, prime?)`.
pub fn composition_factors(n: &PermGroup, caps: &Caps) -> Result<CompositionFactors> {
    let mut factors = Vec::new();
    let mut current = n.clone();
    while current.order() > 1 {
        let lattice = normal_subgroups(&current, caps)?;
        let maxes = lattice.maximal_normal_below(&current)?;
        // Deterministic pick: largest maximal normal subgroup, first in the
        // lattice's canonical order.
        let m = maxes
            .iter()
            .max_by_key(|m| m.order())
            .expect("the trivial subgroup is always below")
            .clone();
        let q = (current.order() / m.order()) as u64;
        factors.push((q, is_prime(q)));
        current = m;
    }
    factors.sort_unstable();
    Ok(factors)
}

#[derive(Clone, Debug)]
pub struct CharSimpleReport {
    pub is_characteristically_simple: bool,
    /// Witness decomposition into minimal normal subgroups when the answer
    /// is yes (a single entry for an elementary abelian or simple group).
    pub factors: Vec<PermGroup>,
}

/// A finite group is characteristically simple iff it is a direct product of
/// pairwise isomorphic simple groups. Elementary abelian groups are detected
/// directly; otherwise the group must be the direct product of its minimal
/// normal subgroups, all simple and pairwise isomorphic. Isomorphism of the
/// factors is checked by search on regular realizations below the effort
/// cap, else by order plus class-size multiset.
pub fn is_characteristically_simple(n: &PermGroup, caps: &Caps) -> Result<CharSimpleReport> {
    if n.order() == 1 {
        return Ok(CharSimpleReport {
            is_characteristically_simple: true,
            factors: vec![n.clone()],
        });
    }
    if let Some(p) = elementary_abelian_prime(n) {
        let _ = p;
        return Ok(CharSimpleReport {
            is_characteristically_simple: true,
            factors: vec![n.clone()],
        });
    }
    let lattice = normal_subgroups(n, caps)?;
    let minimals = lattice.minimal_normal_subgroups();
    // Direct product test: orders multiply up.
    let mut product = PermGroup::trivial(n.degree());
    let mut expected: u128 = 1;
    for m in &minimals {
        product = join(&product, m)?;
        expected = expected.saturating_mul(m.order());
    }
    if product.order() != n.order() || expected != n.order() {
        return Ok(CharSimpleReport {
            is_characteristically_simple: false,
            factors: Vec::new(),
        });
    }
    for m in &minimals {
        if !is_simple(m, caps)? {
            return Ok(CharSimpleReport {
                is_characteristically_simple: false,
                factors: Vec::new(),
            });
        }
    }
    for pair in minimals.windows(2) {
        if !factors_isomorphic(&pair[0], &pair[1], caps)? {
            return Ok(CharSimpleReport {
                is_characteristically_simple: false,
                factors: Vec::new(),
            });
        }
    }
    Ok(CharSimpleReport {
        is_characteristically_simple: true,
        factors: minimals,
    })
}

/// `Some(p)` when the group is elementary abelian of exponent `p`.
pub fn elementary_abelian_prime(n: &PermGroup) -> Option<u64> {
    if n.order() == 1 {
        return None;
    }
    let gens = n.generators();
    for a in gens {
        for b in gens {
            if a.compose(b) != b.compose(a) {
                return None;
            }
        }
    }
    let p = gens[0].order();
    if !is_prime(p) || gens.iter().any(|g| g.order() != p) {
        return None;
    }
    let mut o = n.order();
    while o > 1 {
        if o % p as u128 != 0 {
            return None;
        }
        o /= p as u128;
    }
    Some(p)
}

pub fn is_simple(n: &PermGroup, caps: &Caps) -> Result<bool> {
    if n.order() == 1 {
        return Ok(false);
    }
    let lattice = normal_subgroups(n, caps)?;
    Ok(lattice.len() == 2)
}

fn factors_isomorphic(a: &PermGroup, b: &PermGroup, caps: &Caps) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    if a.order() <= caps.effort_cap {
        // Regular realizations put both groups on comparable footing.
        let ra = crate::coset::coset_action(a, &PermGroup::trivial(a.degree()), caps.degree_cap)?;
        let rb = crate::coset::coset_action(b, &PermGroup::trivial(b.degree()), caps.degree_cap)?;
        return Ok(group_isomorphism(&ra.image, &rb.image, caps.effort_cap)?.is_some());
    }
    let ta = ElementTable::build(a, caps.order_cap)?;
    let tb = ElementTable::build(b, caps.order_cap)?;
    let ca = conjugacy_classes(&ta, a);
    let cb = conjugacy_classes(&tb, b);
    Ok(ca.size_multiset() == cb.size_multiset())
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
    fn alt5_structure() {
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let s = structure_predicates(&a5, &Caps::default()).unwrap();
        assert!(s.is_perfect);
        assert!(!s.is_soluble);
        assert_eq!(s.composition_factors, vec![(60, false)]);
    }

    #[test]
    fn sym3_structure() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let s = structure_predicates(&s3, &Caps::default()).unwrap();
        assert!(!s.is_perfect);
        assert!(s.is_soluble);
        assert_eq!(s.derived_series, vec![6, 3, 1]);
        assert_eq!(s.composition_factors, vec![(2, true), (3, true)]);
    }

    #[test]
    fn c15_factors() {
        let c15 = gp(15, &["(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14)"]);
        let s = structure_predicates(&c15, &Caps::default()).unwrap();
        assert!(s.is_soluble);
        assert_eq!(s.composition_factors, vec![(3, true), (5, true)]);
    }

    #[test]
    fn klein_is_characteristically_simple() {
        let v = gp(4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        let r = is_characteristically_simple(&v, &Caps::default()).unwrap();
        assert!(r.is_characteristically_simple);
    }

    #[test]
    fn c6_is_not_characteristically_simple() {
        let c6 = gp(6, &["(0 1 2 3 4 5)"]);
        let r = is_characteristically_simple(&c6, &Caps::default()).unwrap();
        assert!(!r.is_characteristically_simple);
    }

    #[test]
    fn alt5_squared_is_characteristically_simple() {
        let g = gp(10, &["(0 1 2)", "(2 3 4)", "(5 6 7)", "(7 8 9)"]);
        let r = is_characteristically_simple(&g, &Caps::default()).unwrap();
        assert!(r.is_characteristically_simple);
        assert_eq!(r.factors.len(), 2);
    }

    #[test]
    fn sym4_composition_factors() {
        let s4 = gp(4, &["(0 1 2 3)", "(0 1)"]);
        let f = composition_factors(&s4, &Caps::default()).unwrap();
        assert_eq!(f, vec![(2, true), (2, true), (2, true), (3, true)]);
    }
}
