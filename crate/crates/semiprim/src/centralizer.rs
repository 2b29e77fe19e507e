//! Centralizers of transitive subgroups.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Computes `C_G(K)` for a transitive `K` on the shared point set.
///
/// Any centralizing permutation is determined by where it sends the base
/// point `ω`: it must send `ω` to a fixed point `δ` of `K_ω`, and then
/// `(ω^k)^c = δ^k`. Each candidate is kept when it is a well-defined
/// permutation, centralizes `K`'s generators and lies in `G`. The result is
/// semiregular (the centralizer of a transitive group always is).
pub fn centralizer_of_transitive(g: &PermGroup, k: &PermGroup) -> Result<PermGroup> {
    if k.degree() != g.degree() {
        return Err(Error::MismatchedParent);
    }
    if !k.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let degree = k.degree();
    let omega = 0u32;
    let k_omega = k.point_stabilizer(omega)?;
    let chain = k.chain_with_base(&[omega]);
    debug_assert!(chain.levels.is_empty() || chain.levels[0].base == omega);

    // Transversal elements for the whole point set.
    let mut reach: Vec<Permutation> = Vec::with_capacity(degree);
    for p in 0..degree as u32 {
        reach.push(chain.levels[0].transversal(p, degree));
    }

    let mut candidates: Vec<Permutation> = Vec::new();
    'delta: for delta in 0..degree as u32 {
        if k_omega.generators().iter().any(|s| s.moves(delta)) {
            continue;
        }
        let mut images = Vec::with_capacity(degree);
        for p in 0..degree as u32 {
            images.push(reach[p as usize].image(delta));
        }
        let Ok(c) = Permutation::from_images(images) else {
            continue;
        };
        for s in k.generators() {
            if c.compose(s) != s.compose(&c) {
                continue 'delta;
            }
        }
        if c.is_identity() || !g.contains(&c) {
            continue;
        }
        candidates.push(c);
    }
    let cent = PermGroup::new(
        degree,
        crate::subgroup::reduced_generators(degree, &candidates),
    );
    assert!(
        cent.action_predicates().is_semiregular,
        "centralizer of a transitive group must be semiregular"
    );
    Ok(cent)
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

    /// Brute-force oracle: all elements of `g` commuting with every
    /// generator of `k`.
    fn brute_centralizer(g: &PermGroup, k: &PermGroup) -> PermGroup {
        let elements = g.elements_capped(Caps::default().order_cap).unwrap();
        let gens: Vec<Permutation> = elements
            .into_iter()
            .filter(|c| {
                !c.is_identity()
                    && k.generators()
                        .iter()
                        .all(|s| c.compose(s) == s.compose(c))
            })
            .collect();
        PermGroup::new(g.degree(), gens)
    }

    #[test]
    fn d10_centralizer_of_rotation_is_rotation() {
        let d10 = gp(5, &["(0 1 2 3 4)", "(1 4)(2 3)"]);
        let c5 = gp(5, &["(0 1 2 3 4)"]);
        let cent = centralizer_of_transitive(&d10, &c5).unwrap();
        assert_eq!(cent.order(), 5);
        assert!(cent.same_group_as(&brute_centralizer(&d10, &c5)));
    }

    #[test]
    fn sym5_centralizer_of_alt5_is_trivial() {
        let s5 = gp(5, &["(0 1 2 3 4)", "(0 1)"]);
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let cent = centralizer_of_transitive(&s5, &a5).unwrap();
        assert_eq!(cent.order(), 1);
        assert!(cent.same_group_as(&brute_centralizer(&s5, &a5)));
    }

    #[test]
    fn regular_group_is_its_own_centralizer_in_itself() {
        let c6 = gp(6, &["(0 1 2 3 4 5)"]);
        let cent = centralizer_of_transitive(&c6, &c6).unwrap();
        assert_eq!(cent.order(), 6);
    }

    #[test]
    fn intransitive_k_is_rejected() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let h = gp(3, &["(0 1)"]);
        assert!(matches!(
            centralizer_of_transitive(&s3, &h),
            Err(Error::NotTransitive)
        ));
    }
}
