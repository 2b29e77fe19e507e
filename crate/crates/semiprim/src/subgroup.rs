//! Subgroup algebra on a shared point set.
//!
//! A subgroup is just a `PermGroup` whose generators live in a parent group
//! on the same points; operations that need the parent take it explicitly.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub(crate) fn check_same_degree(a: &PermGroup, b: &PermGroup) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::MismatchedParent);
    }
    Ok(())
}

/// Smallest subgroup containing both inputs.
pub fn join(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    check_same_degree(a, b)?;
    let mut gens = a.generators().to_vec();
    gens.extend(b.generators().iter().cloned());
    Ok(PermGroup::new(a.degree(), gens))
}

/// Greedy generator reduction: keeps only elements that grow the span.
/// Element lists can serve as generating sets without this, but chains over
/// thousands of generators are far more expensive.
pub(crate) fn reduced_generators(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    if gens.len() <= 8 {
        return gens.to_vec();
    }
    let mut kept: Vec<Permutation> = Vec::new();
    let mut span = PermGroup::trivial(degree);
    for g in gens {
        if g.is_identity() || span.contains(g) {
            continue;
        }
        kept.push(g.clone());
        span = PermGroup::new(degree, kept.clone());
    }
    kept
}

pub fn conjugate_subgroup(h: &PermGroup, g: &Permutation) -> PermGroup {
    PermGroup::new(
        h.degree(),
        h.generators().iter().map(|x| x.conjugate(g)).collect(),
    )
}

/// True when `parent`'s generators normalize `n`.
pub fn is_normal_in(parent: &PermGroup, n: &PermGroup) -> bool {
    parent
        .generators()
        .iter()
        .all(|g| n.generators().iter().all(|x| n.contains(&x.conjugate(g))))
}

/// Smallest `parent`-normal subgroup containing the seed elements.
pub fn normal_closure(parent: &PermGroup, seed: &[Permutation]) -> PermGroup {
    let degree = parent.degree();
    let mut k = PermGroup::new(degree, seed.to_vec());
    loop {
        let mut new_gens: Vec<Permutation> = Vec::new();
        for x in k.generators() {
            for g in parent.generators() {
                let c = x.conjugate(g);
                if !k.contains(&c) && !new_gens.contains(&c) {
                    new_gens.push(c);
                }
            }
        }
        if new_gens.is_empty() {
            return k;
        }
        let mut gens = k.generators().to_vec();
        gens.extend(new_gens);
        k = PermGroup::new(degree, gens);
    }
}

/// Derived subgroup: the normal closure of generator commutators.
pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    let gens = g.generators();
    let mut comms = Vec::new();
    for a in gens {
        for b in gens {
            let c = Permutation::commutator(a, b);
            if !c.is_identity() && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

/// `[A, B]` as a normal subgroup of `parent`: the normal closure of the
/// generator commutators.
pub fn commutator(parent: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    check_same_degree(parent, a)?;
    check_same_degree(parent, b)?;
    let mut comms = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            let c = Permutation::commutator(x, y);
            if !c.is_identity() && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    Ok(normal_closure(parent, &comms))
}

/// Largest normal subgroup of `parent` inside `h`, by iterated refinement
/// with conjugates.
pub fn core(parent: &PermGroup, h: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    check_same_degree(parent, h)?;
    let mut c = h.clone();
    'refine: loop {
        for g in parent.generators() {
            let cg = conjugate_subgroup(&c, g);
            if !c.same_group_as(&cg) {
                c = intersection(&c, &cg, caps)?;
                continue 'refine;
            }
        }
        return Ok(c);
    }
}

/// `a ∩ b`: brute force over the smaller side when it is small, otherwise a
/// backtracking search over `a`'s stabilizer chain pruned by a chain of `b`
/// rebased to `a`'s base.
pub fn intersection(a: &PermGroup, b: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    check_same_degree(a, b)?;
    let degree = a.degree();
    if a.is_trivial() || b.is_trivial() {
        return Ok(PermGroup::trivial(degree));
    }
    let (oa, ob) = (a.order(), b.order());
    let (small, big) = if oa <= ob { (a, b) } else { (b, a) };
    if small.order() <= caps.small_subgroup_cap {
        let gens: Vec<Permutation> = small
            .elements_capped(caps.small_subgroup_cap)?
            .into_iter()
            .filter(|e| !e.is_identity() && big.contains(e))
            .collect();
        return Ok(PermGroup::new(degree, reduced_generators(degree, &gens)));
    }
    Ok(backtrack_intersection(small, big))
}

fn backtrack_intersection(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let degree = a.degree();
    let achain = a.chain();
    let abase = achain.base();
    // The strict rebasing gives b a level for each a-base point in order, so
    // the chains stay aligned; b's chain may be shorter when b's pointwise
    // stabilizer of an a-base prefix is already trivial.
    let bchain = b.chain_with_strict_base(&abase);

    struct Ctx<'c> {
        achain: &'c crate::group::StabChain,
        bchain: crate::group::StabChain,
        degree: usize,
        found: Vec<Permutation>,
        // The subgroup generated so far; leaves already inside it are
        // redundant as generators, which keeps the generator list short.
        span: PermGroup,
    }

    // Depth-first over images of a's base points. At depth k, `a0` realizes
    // the choices made so far inside a, and `b0` is an element of b with the
    // same base images; a branch survives only while such a b0 exists.
    fn rec(ctx: &mut Ctx<'_>, k: usize, a0: &Permutation, b0: &Permutation) {
        if k == ctx.achain.levels.len() {
            if !a0.is_identity() && !ctx.span.contains(a0) && ctx.bchain.contains(a0) {
                ctx.found.push(a0.clone());
                ctx.span = PermGroup::new(ctx.degree, ctx.found.clone());
            }
            return;
        }
        let alevel = &ctx.achain.levels[k];
        let b0_inv = b0.inverse();
        for &q in &alevel.orbit {
            let p = a0.image(q);
            let t = b0_inv.image(p);
            let mut b1 = b0.clone();
            let feasible = if k < ctx.bchain.levels.len() {
                let blevel = &ctx.bchain.levels[k];
                debug_assert_eq!(alevel.base, blevel.base);
                let ok = blevel.orbit_pos[t as usize] != u32::MAX;
                if ok {
                    b1 = blevel.transversal(t, ctx.degree).compose(b0);
                }
                ok
            } else {
                // b's remaining level group is trivial on these points.
                t == alevel.base
            };
            if feasible {
                let a1 = alevel.transversal(q, ctx.degree).compose(a0);
                rec(ctx, k + 1, &a1, &b1);
            }
        }
    }

    let mut ctx = Ctx {
        achain,
        bchain,
        degree,
        found: Vec::new(),
        span: PermGroup::trivial(degree),
    };
    let ident = Permutation::identity(degree);
    rec(&mut ctx, 0, &ident, &ident);
    ctx.span
}

/// Pointwise stabilizer of a set of points, via a strict-base chain.
pub fn pointwise_stabilizer(g: &PermGroup, points: &[u32]) -> PermGroup {
    if g.is_trivial() {
        return g.clone();
    }
    let chain = g.chain_with_strict_base(points);
    let cut = chain
        .levels
        .iter()
        .take_while(|l| points.contains(&l.base))
        .count();
    let gens = if cut < chain.levels.len() {
        chain.levels[cut].gens.clone()
    } else {
        Vec::new()
    };
    let stab = PermGroup::new(g.degree(), gens);
    debug_assert!(stab
        .generators()
        .iter()
        .all(|x| points.iter().all(|&p| !x.moves(p))));
    stab
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
    fn core_of_point_stabilizer_is_trivial() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let h = gp(3, &["(0 1)"]);
        let c = core(&s3, &h, &Caps::default()).unwrap();
        assert_eq!(c.order(), 1);
    }

    #[test]
    fn derived_subgroup_of_sym3() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let d = derived_subgroup(&s3);
        assert_eq!(d.order(), 3);
        assert!(d.contains(&Permutation::parse("(0 1 2)", 3).unwrap()));
    }

    #[test]
    fn normal_closure_in_alt5_is_everything() {
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let n = normal_closure(&a5, &[Permutation::parse("(0 1 2)", 5).unwrap()]);
        assert_eq!(n.order(), 60);
    }

    #[test]
    fn join_and_commutator() {
        let s4 = gp(4, &["(0 1 2 3)", "(0 1)"]);
        let a = gp(4, &["(0 1)(2 3)"]);
        let b = gp(4, &["(0 2)(1 3)"]);
        let j = join(&a, &b).unwrap();
        assert_eq!(j.order(), 4);
        let c = commutator(&s4, &s4, &s4).unwrap();
        assert_eq!(c.order(), 12);
    }

    #[test]
    fn intersection_brute_and_backtrack_agree() {
        let s4 = gp(4, &["(0 1 2 3)", "(0 1)"]);
        let d8 = gp(4, &["(0 1 2 3)", "(1 3)"]);
        let a4 = gp(4, &["(0 1 2)", "(1 2 3)"]);
        let caps = Caps::default();
        let brute = intersection(&d8, &a4, &caps).unwrap();
        let tight = Caps {
            small_subgroup_cap: 1,
            ..caps
        };
        let back = intersection(&d8, &a4, &tight).unwrap();
        assert_eq!(brute.order(), 4);
        assert!(brute.same_group_as(&back));
        assert!(s4.contains_group(&brute));
    }

    #[test]
    fn backtrack_intersection_larger() {
        let deg = 8;
        let a8 = gp(deg, &["(0 1 2)", "(1 2 3 4 5 6 7)"]);
        assert_eq!(a8.order(), 20160);
        // Intersect with a dihedral group of order 16.
        let d16 = gp(deg, &["(0 1 2 3 4 5 6 7)", "(1 7)(2 6)(3 5)"]);
        let caps = Caps {
            small_subgroup_cap: 1,
            ..Caps::default()
        };
        let i = intersection(&d16, &a8, &caps).unwrap();
        let brute = intersection(&d16, &a8, &Caps::default()).unwrap();
        assert!(i.same_group_as(&brute));
        assert_eq!(i.order(), 8);
    }

    #[test]
    fn pointwise_stabilizer_fixes_points() {
        let s5 = gp(5, &["(0 1 2 3 4)", "(0 1)"]);
        let stab = pointwise_stabilizer(&s5, &[0, 1]);
        assert_eq!(stab.order(), 6);
        let stab_all = pointwise_stabilizer(&s5, &[0, 1, 2, 3]);
        assert_eq!(stab_all.order(), 1);
    }
}
