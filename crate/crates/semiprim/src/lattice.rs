//! Conjugacy classes and the normal-subgroup lattice.
//!
//! Every normal subgroup is a join of normal closures of single conjugacy
//! classes, so the lattice is enumerated by a breadth-first search over the
//! join semilattice generated by class closures. The cost is governed by the
//! (small) number of normal subgroups rather than by all subgroups.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::is_prime;
use crate::subgroup::{self, intersection, join, normal_closure};
use crate::table::ElementTable;

/// Exact conjugacy classes from orbits of the conjugation action on the full
/// element list.
pub struct ConjugacyClasses {
    /// Representative element ids, ordered by first appearance in the table.
    pub reps: Vec<u32>,
    pub sizes: Vec<u64>,
    /// Class index of every element id.
    pub class_of: Vec<u32>,
}

impl ConjugacyClasses {
    pub fn size_multiset(&self) -> Vec<u64> {
        let mut sizes = self.sizes.clone();
        sizes.sort_unstable();
        sizes
    }

    pub fn members(&self, class: u32) -> Vec<u32> {
        self.class_of
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == class)
            .map(|(id, _)| id as u32)
            .collect()
    }
}

pub fn conjugacy_classes(table: &ElementTable, g: &PermGroup) -> ConjugacyClasses {
    let n = table.len();
    let mut class_of = vec![u32::MAX; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    let gen_rows: Vec<(Vec<u32>, Vec<u32>)> = g
        .generators()
        .iter()
        .map(|gen| (gen.images().to_vec(), gen.inverse().into_images()))
        .collect();
    for start in 0..n as u32 {
        if class_of[start as usize] != u32::MAX {
            continue;
        }
        let class = reps.len() as u32;
        reps.push(start);
        class_of[start as usize] = class;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for (g_row, g_inv_row) in &gen_rows {
                let y = table.conjugate_by_row(x, g_row, g_inv_row);
                if class_of[y as usize] == u32::MAX {
                    class_of[y as usize] = class;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        sizes.push(orbit.len() as u64);
    }
    ConjugacyClasses {
        reps,
        sizes,
        class_of,
    }
}

/// Conjugacy classes of `g`, computed through a fresh element table.
pub fn conjugacy_classes_of(g: &PermGroup, caps: &Caps) -> Result<ConjugacyClasses> {
    let table = ElementTable::build(g, caps.order_cap)?;
    Ok(conjugacy_classes(&table, g))
}

/// The complete set of normal subgroups of a group, canonically ordered.
pub struct NormalLattice {
    pub group: PermGroup,
    pub subgroups: Vec<PermGroup>,
    /// `contains[i][j]` iff `subgroups[i] ⊇ subgroups[j]`.
    pub contains: Vec<Vec<bool>>,
}

impl NormalLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn orders(&self) -> Vec<u128> {
        self.subgroups.iter().map(|n| n.order()).collect()
    }

    /// Index of a lattice member equal to `n`, if `n` is normal.
    pub fn position_of(&self, n: &PermGroup) -> Option<usize> {
        self.subgroups.iter().position(|m| m.same_group_as(n))
    }

    /// Atoms of the lattice: the minimal non-trivial normal subgroups.
    pub fn minimal_normal_indices(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&i| {
                self.subgroups[i].order() > 1
                    && (0..n).all(|j| {
                        j == i || self.subgroups[j].order() == 1 || !self.contains[i][j]
                    })
            })
            .collect()
    }

    pub fn minimal_normal_subgroups(&self) -> Vec<PermGroup> {
        self.minimal_normal_indices()
            .into_iter()
            .map(|i| self.subgroups[i].clone())
            .collect()
    }

    /// Join of the atoms.
    pub fn socle(&self) -> PermGroup {
        let mut s = PermGroup::trivial(self.group.degree());
        for i in self.minimal_normal_indices() {
            s = join(&s, &self.subgroups[i]).expect("same degree");
        }
        s
    }

    /// Members strictly below `k` that are maximal with that property.
    pub fn maximal_normal_below(&self, k: &PermGroup) -> Result<Vec<PermGroup>> {
        let ki = self.position_of(k).ok_or(Error::NotNormal)?;
        let below: Vec<usize> = (0..self.len())
            .filter(|&j| j != ki && self.contains[ki][j])
            .collect();
        Ok(below
            .iter()
            .filter(|&&j| {
                below
                    .iter()
                    .all(|&l| l == j || !self.contains[l][j])
            })
            .map(|&j| self.subgroups[j].clone())
            .collect())
    }

    /// Members `m` with `n ≤ m < k`, maximal with that property.
    pub fn maximal_normal_between(&self, n: &PermGroup, k: &PermGroup) -> Result<Vec<PermGroup>> {
        let ki = self.position_of(k).ok_or(Error::NotNormal)?;
        let lo: Vec<usize> = (0..self.len())
            .filter(|&j| {
                j != ki && self.contains[ki][j] && {
                    n.generators()
                        .iter()
                        .all(|g| self.subgroups[j].contains(g))
                }
            })
            .collect();
        Ok(lo
            .iter()
            .filter(|&&j| lo.iter().all(|&l| l == j || !self.contains[l][j]))
            .map(|&j| self.subgroups[j].clone())
            .collect())
    }
}

/// Canonical key for small subgroups: the sorted list of element ids.
fn canonical_key(table: &ElementTable, n: &PermGroup, caps: &Caps) -> Option<Vec<u32>> {
    if n.order() > 4096 {
        return None;
    }
    let elements = n.elements_capped(caps.small_subgroup_cap.max(4096)).ok()?;
    let mut ids: Vec<u32> = elements
        .iter()
        .map(|e| table.index_of(e).expect("subgroup elements are in the table"))
        .collect();
    ids.sort_unstable();
    Some(ids)
}

/// Enumerates the normal-subgroup lattice by join BFS over class closures.
pub fn normal_subgroups(g: &PermGroup, caps: &Caps) -> Result<NormalLattice> {
    let degree = g.degree();
    let table = ElementTable::build(g, caps.order_cap)?;
    let classes = conjugacy_classes(&table, g);

    // Normal closures of single non-identity classes, deduplicated.
    let mut closures: Vec<PermGroup> = Vec::new();
    for (ci, &rep) in classes.reps.iter().enumerate() {
        if classes.class_of[0] == ci as u32 {
            continue; // identity class
        }
        let cl = normal_closure(g, &[table.perm(rep)]);
        if !closures.iter().any(|c| c.same_group_as(&cl)) {
            closures.push(cl);
        }
    }

    // BFS over joins, one class closure at a time.
    let mut found: Vec<PermGroup> = vec![PermGroup::trivial(degree)];
    let mut frontier: Vec<usize> = vec![0];
    while let Some(fi) = frontier.pop() {
        let current = found[fi].clone();
        for cl in &closures {
            if current.contains_group(cl) {
                continue;
            }
            let j = join(&current, cl)?;
            if !found.iter().any(|n| n.same_group_as(&j)) {
                found.push(j);
                frontier.push(found.len() - 1);
            }
        }
    }

    // Canonical order: by order, ties by the element-table key when both
    // sides have one, else by discovery order (stable for fixed inputs).
    let mut keyed: Vec<(u128, Option<Vec<u32>>, usize, PermGroup)> = found
        .into_iter()
        .enumerate()
        .map(|(i, n)| {
            let key = canonical_key(&table, &n, caps);
            (n.order(), key, i, n)
        })
        .collect();
    keyed.sort_by(|a, b| {
        a.0.cmp(&b.0).then_with(|| match (&a.1, &b.1) {
            (Some(x), Some(y)) => x.cmp(y),
            _ => a.2.cmp(&b.2),
        })
    });
    let subgroups: Vec<PermGroup> = keyed.into_iter().map(|(_, _, _, n)| n).collect();

    let contains: Vec<Vec<bool>> = subgroups
        .iter()
        .map(|a| {
            subgroups
                .iter()
                .map(|b| b.order() <= a.order() && a.contains_group(b))
                .collect()
        })
        .collect();

    debug_assert!(subgroups
        .iter()
        .all(|n| subgroup::is_normal_in(g, n)));
    Ok(NormalLattice {
        group: g.clone(),
        subgroups,
        contains,
    })
}

/// Largest normal `p`-subgroup: the join of all normal `p`-subgroups in the
/// lattice of `h`.
pub fn p_core(h: &PermGroup, p: u64, caps: &Caps) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let lattice = normal_subgroups(h, caps)?;
    let mut core = PermGroup::trivial(h.degree());
    for n in &lattice.subgroups {
        if is_p_power(n.order(), p) {
            core = join(&core, n)?;
        }
    }
    debug_assert!(is_p_power(core.order(), p));
    Ok(core)
}

fn is_p_power(mut n: u128, p: u64) -> bool {
    while n > 1 {
        if n % p as u128 != 0 {
            return false;
        }
        n /= p as u128;
    }
    true
}

/// The decomposition of Proposition-style duality: given normal `n ≤ k`,
/// take the set `S` of normal subgroups maximal with `n ≤ m < k`, intersect
/// them to `s`, and split `k/s` into minimal normal subgroups of `g/s`
/// (returned as their preimages, which all contain `s`).
pub struct DualityDecomposition {
    /// The maximal normal subgroups between `n` and `k`.
    pub s_set: Vec<PermGroup>,
    /// Their intersection.
    pub s: PermGroup,
    /// Preimages of the direct factors of `k/s`.
    pub factors: Vec<PermGroup>,
    /// For each factor, the index into `s_set` of a member `m` with
    /// `|factor/s| = |k/m|`.
    pub matches: Vec<usize>,
}

pub fn duality_decomposition(
    g: &PermGroup,
    k: &PermGroup,
    n: &PermGroup,
    caps: &Caps,
) -> Result<DualityDecomposition> {
    let lattice = normal_subgroups(g, caps)?;
    duality_decomposition_in(&lattice, k, n, caps)
}

pub fn duality_decomposition_in(
    lattice: &NormalLattice,
    k: &PermGroup,
    n: &PermGroup,
    caps: &Caps,
) -> Result<DualityDecomposition> {
    let g = &lattice.group;
    let s_set = lattice.maximal_normal_between(n, k)?;
    let mut s = k.clone();
    for m in &s_set {
        s = intersection(&s, m, caps)?;
    }

    // Atoms over s inside k: lattice members l with s < l ≤ k and nothing
    // strictly between.
    let ki = lattice.position_of(k).ok_or(Error::NotNormal)?;
    let over: Vec<usize> = (0..lattice.len())
        .filter(|&j| {
            let l = &lattice.subgroups[j];
            l.order() > s.order()
                && (j == ki || lattice.contains[ki][j])
                && l.contains_group(&s)
        })
        .collect();
    let atoms: Vec<usize> = over
        .iter()
        .copied()
        .filter(|&j| {
            over.iter().all(|&l| {
                l == j
                    || !(lattice.contains[j][l]
                        && lattice.subgroups[l].order() < lattice.subgroups[j].order())
            })
        })
        .collect();

    // Greedy direct decomposition of k/s by the atoms.
    let mut factors: Vec<PermGroup> = Vec::new();
    let mut prod = s.clone();
    for &j in &atoms {
        if prod.order() == k.order() {
            break;
        }
        let l = &lattice.subgroups[j];
        if intersection(l, &prod, caps)?.order() == s.order() {
            factors.push(l.clone());
            prod = join(&prod, l)?;
        }
    }
    assert_eq!(
        prod.order(),
        k.order(),
        "atoms over the intersection must span k"
    );

    let mut matches = Vec::with_capacity(factors.len());
    for l in &factors {
        let quotient_order = l.order() / s.order();
        let m = s_set
            .iter()
            .position(|m| k.order() / m.order() == quotient_order)
            .expect("every factor matches a maximal member by order");
        matches.push(m);
    }

    // When k/s is perfect the factor count equals |s_set|.
    let kd = subgroup::derived_subgroup(k);
    let kds = join(&kd, &s)?;
    if kds.order() == k.order() {
        assert_eq!(
            factors.len(),
            s_set.len(),
            "perfect k/s must split into one factor per maximal member"
        );
    }
    let _ = g;
    Ok(DualityDecomposition {
        s_set,
        s,
        factors,
        matches,
    })
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

    fn d30() -> PermGroup {
        gp(
            15,
            &[
                "(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14)",
                "(1 14)(2 13)(3 12)(4 11)(5 10)(6 9)(7 8)",
            ],
        )
    }

    #[test]
    fn alt5_classes() {
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let classes = conjugacy_classes_of(&a5, &Caps::default()).unwrap();
        assert_eq!(classes.size_multiset(), vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let c6 = gp(6, &["(0 1 2 3 4 5)"]);
        let classes = conjugacy_classes_of(&c6, &Caps::default()).unwrap();
        assert_eq!(classes.reps.len(), 6);
        assert!(classes.sizes.iter().all(|&s| s == 1));
    }

    #[test]
    fn sym3_classes() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let classes = conjugacy_classes_of(&s3, &Caps::default()).unwrap();
        assert_eq!(classes.size_multiset(), vec![1, 2, 3]);
    }

    #[test]
    fn alt5_is_simple() {
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let lat = normal_subgroups(&a5, &Caps::default()).unwrap();
        assert_eq!(lat.orders(), vec![1, 60]);
    }

    #[test]
    fn d30_lattice() {
        let lat = normal_subgroups(&d30(), &Caps::default()).unwrap();
        assert_eq!(lat.orders(), vec![1, 3, 5, 15, 30]);
    }

    #[test]
    fn sym4_socle_is_klein() {
        let s4 = gp(4, &["(0 1 2 3)", "(0 1)"]);
        let lat = normal_subgroups(&s4, &Caps::default()).unwrap();
        assert_eq!(lat.orders(), vec![1, 4, 12, 24]);
        assert_eq!(lat.socle().order(), 4);
    }

    #[test]
    fn two_minimal_normals_in_a_product() {
        // Alt(5) × Alt(5) on disjoint point sets.
        let g = gp(
            10,
            &["(0 1 2)", "(2 3 4)", "(5 6 7)", "(7 8 9)"],
        );
        let lat = normal_subgroups(&g, &Caps::default()).unwrap();
        assert_eq!(lat.minimal_normal_indices().len(), 2);
        assert_eq!(lat.socle().order(), 3600);
    }

    #[test]
    fn d30_maximal_below_c15() {
        let lat = normal_subgroups(&d30(), &Caps::default()).unwrap();
        let c15 = gp(15, &["(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14)"]);
        let maxes = lat.maximal_normal_below(&c15).unwrap();
        let mut orders: Vec<u128> = maxes.iter().map(|m| m.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![3, 5]);
    }

    #[test]
    fn p_core_examples() {
        let caps = Caps::default();
        let s4 = gp(4, &["(0 1 2 3)", "(0 1)"]);
        assert_eq!(p_core(&s4, 2, &caps).unwrap().order(), 4);
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        assert_eq!(p_core(&a5, 2, &caps).unwrap().order(), 1);
        let c12 = gp(12, &["(0 1 2 3 4 5 6 7 8 9 10 11)"]);
        assert_eq!(p_core(&c12, 3, &caps).unwrap().order(), 3);
        assert!(matches!(p_core(&c12, 4, &caps), Err(Error::NotPrime(4))));
    }

    #[test]
    fn duality_on_d30() {
        let caps = Caps::default();
        let g = d30();
        let c15 = gp(15, &["(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14)"]);
        let triv = PermGroup::trivial(15);
        let d = duality_decomposition(&g, &c15, &triv, &caps).unwrap();
        assert_eq!(d.s_set.len(), 2);
        assert_eq!(d.s.order(), 1);
        let mut factor_orders: Vec<u128> = d.factors.iter().map(|f| f.order()).collect();
        factor_orders.sort_unstable();
        assert_eq!(factor_orders, vec![3, 5]);
    }

    #[test]
    fn duality_on_klein_is_not_perfect_case() {
        let v = gp(4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        let caps = Caps::default();
        let triv = PermGroup::trivial(4);
        let d = duality_decomposition(&v, &v, &triv, &caps).unwrap();
        assert_eq!(d.s_set.len(), 3);
        assert_eq!(d.factors.len(), 2);
    }
}
