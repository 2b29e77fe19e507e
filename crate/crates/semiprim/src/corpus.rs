//! A reproducible corpus of worked examples with expected-property
//! manifests. Every generator returns a transitive action together with the
//! properties the test suites assert.

use std::collections::BTreeMap;

use crate::action::{make_action, TransitiveAction};
use crate::analysis::{ItType, StructureCase};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::groups;
use crate::hom::Homomorphism;
use crate::perm::Permutation;
use crate::subgroup::join;

/// Expected transitivity/semiregularity of a named normal subgroup, for
/// entries too large for a full lattice.
#[derive(Clone, Debug)]
pub struct NamedNormal {
    pub label: &'static str,
    pub group: PermGroup,
    pub transitive: bool,
    pub semiregular: bool,
}

/// What the test suite asserts about an entry. `None` fields are not
/// asserted.
#[derive(Clone, Debug, Default)]
pub struct Manifest {
    pub order: u128,
    pub degree: u128,
    pub stab_order: u128,
    /// Whether the full lattice analysis is expected to fit in the caps.
    pub within_caps: bool,
    pub semiprimitive: Option<bool>,
    pub quasiprimitive: Option<bool>,
    pub primitive: Option<bool>,
    pub plinth_count: Option<usize>,
    /// Sorted plinth orders.
    pub plinth_orders: Option<Vec<u128>>,
    pub rad_order: Option<u128>,
    pub case: Option<StructureCase>,
    /// Sorted quotient types of the structure report.
    pub quotient_types: Option<Vec<ItType>>,
    pub it_type: Option<ItType>,
    pub proper_nontrivial_normals: Option<usize>,
    pub named_normals: Vec<NamedNormal>,
}

#[derive(Clone)]
pub struct CorpusEntry {
    pub tag: &'static str,
    pub action: TransitiveAction,
    pub manifest: Manifest,
}

fn natural_action(g: PermGroup, caps: Caps) -> Result<TransitiveAction> {
    let stab = g.point_stabilizer(0)?;
    make_action(&g, &stab, caps)
}

/// The dihedral group of order `2n` acting on `n` points.
pub fn dihedral(n: usize, caps: Caps) -> Result<TransitiveAction> {
    natural_action(groups::dihedral(n), caps)
}

/// `T^n` acting on the cosets of a diagonal copy of the simple group `T`;
/// every co-factor is a regular plinth.
pub fn many_plinths(t: &PermGroup, n: usize, caps: Caps) -> Result<TransitiveAction> {
    assert!(n >= 2);
    let dt = t.degree();
    let total = dt * n;
    let mut gens: Vec<Permutation> = Vec::new();
    for i in 0..n {
        for g in t.generators() {
            gens.push(g.shifted(i * dt, total));
        }
    }
    let product = PermGroup::new(total, gens);
    let diag_gens: Vec<Permutation> = t
        .generators()
        .iter()
        .map(|g| {
            let mut images: Vec<u32> = Vec::with_capacity(total);
            for i in 0..n {
                images.extend(g.images().iter().map(|&q| q + (i * dt) as u32));
            }
            Permutation::from_images(images).expect("diagonal")
        })
        .collect();
    let diag = PermGroup::new(total, diag_gens);
    make_action(&product, &diag, caps)
}

/// `T × T` on the cosets of the diagonal: the basic HS-type action.
pub fn hs_diag(t: &PermGroup, caps: Caps) -> Result<TransitiveAction> {
    many_plinths(t, 2, caps)
}

/// `T wr C2` acting on `T × T` (regular socle): the smallest TW-type action.
pub fn tw_wreath(t: &PermGroup, caps: Caps) -> Result<TransitiveAction> {
    let dt = t.degree();
    let total = 2 * dt;
    let mut gens: Vec<Permutation> = Vec::new();
    for g in t.generators() {
        gens.push(g.shifted(0, total));
        gens.push(g.shifted(dt, total));
    }
    let swap = block_swap(dt);
    gens.push(swap.clone());
    let w = PermGroup::new(total, gens);
    let stab = PermGroup::new(total, vec![swap]);
    make_action(&w, &stab, caps)
}

/// `T wr C2` on the cosets of `diag(T) ⋊ C2`: the smallest SD-type action.
pub fn sd_wreath(t: &PermGroup, caps: Caps) -> Result<TransitiveAction> {
    let dt = t.degree();
    let total = 2 * dt;
    let mut gens: Vec<Permutation> = Vec::new();
    for g in t.generators() {
        gens.push(g.shifted(0, total));
        gens.push(g.shifted(dt, total));
    }
    let swap = block_swap(dt);
    gens.push(swap.clone());
    let w = PermGroup::new(total, gens);
    let mut stab_gens: Vec<Permutation> = t
        .generators()
        .iter()
        .map(|g| {
            let mut images: Vec<u32> = Vec::with_capacity(total);
            images.extend(g.images().iter().copied());
            images.extend(g.images().iter().map(|&q| q + dt as u32));
            Permutation::from_images(images).expect("diagonal")
        })
        .collect();
    stab_gens.push(swap);
    let stab = PermGroup::new(total, stab_gens);
    make_action(&w, &stab, caps)
}

fn block_swap(dt: usize) -> Permutation {
    let total = 2 * dt;
    let images: Vec<u32> = (0..total as u32)
        .map(|p| (p + dt as u32) % total as u32)
        .collect();
    Permutation::from_images(images).expect("block swap")
}

/// `Alt(6) wr C2` over the normalizer of a diagonal `Alt(5)`: PA type.
pub fn pa_wreath_alt6(caps: Caps) -> Result<TransitiveAction> {
    let a6 = groups::alternating(6);
    let a5 = groups::alternating(5);
    let total = 12;
    let mut gens: Vec<Permutation> = Vec::new();
    for g in a6.generators() {
        gens.push(g.shifted(0, total));
        gens.push(g.shifted(6, total));
    }
    let swap = block_swap(6);
    gens.push(swap.clone());
    let w = PermGroup::new(total, gens);
    let mut stab_gens: Vec<Permutation> = a5
        .generators()
        .iter()
        .map(|g| {
            let g6 = g.extended(6);
            let mut images: Vec<u32> = Vec::with_capacity(total);
            images.extend(g6.images().iter().copied());
            images.extend(g6.images().iter().map(|&q| q + 6));
            Permutation::from_images(images).expect("diagonal")
        })
        .collect();
    stab_gens.push(swap);
    let stab = PermGroup::new(total, stab_gens);
    make_action(&w, &stab, caps)
}

/// `Alt(n) × M` on the cosets of `{(mv, m)}`: innately transitive of type
/// ASQ with `M` a normal semiregular subgroup outside the plinth.
///
/// `m` and `v` must be commuting permutations on `n` points generating
/// `M × V` inside `Alt(n)`.
pub fn asq_with_semiregular(
    n: usize,
    m: &Permutation,
    v: &Permutation,
    caps: Caps,
) -> Result<TransitiveAction> {
    let alt = groups::alternating(n);
    assert!(alt.contains(m) && alt.contains(v));
    assert_eq!(m.compose(v), v.compose(m), "M and V must commute");
    let m_order = m.order() as usize;
    let total = n + m_order;
    let mut gens: Vec<Permutation> = alt
        .generators()
        .iter()
        .map(|g| g.shifted(0, total))
        .collect();
    // The external M factor acts regularly on its own points.
    let shift: Vec<u32> = (0..m_order as u32)
        .map(|p| (p + 1) % m_order as u32)
        .collect();
    let m_ext = Permutation::from_images(shift)
        .expect("cycle")
        .shifted(n, total);
    gens.push(m_ext.clone());
    let g = PermGroup::new(total, gens);

    // H = {(m^i v^j, m^i)}: generated by (m, m_ext) and (v, 1).
    let h1 = m.extended(total).compose(&m_ext);
    let h2 = v.extended(total);
    let h = PermGroup::new(total, vec![h1, h2]);
    make_action(&g, &h, caps)
}

/// A centre-free perfect group acting on the cosets of `⟨h⟩`, where `h` has
/// 2-power order and projects to an involution in each simple factor of the
/// largest semisimple quotient. The element is found by search; groups where
/// none exists report `NotApplicable`.
pub fn centerfree_perfect(k: &PermGroup, caps: Caps) -> Result<TransitiveAction> {
    let table = crate::table::ElementTable::build(k, caps.order_cap)?;
    // Centre-free check.
    for id in 1..table.len() as u32 {
        let e = table.perm(id);
        if k.generators().iter().all(|g| e.compose(g) == g.compose(&e)) {
            return Err(Error::NotApplicable("K has a non-trivial centre".into()));
        }
    }
    let series = crate::iso::derived_series_orders(k);
    if series.len() != 1 {
        return Err(Error::NotApplicable("K is not perfect".into()));
    }
    let lattice = crate::lattice::normal_subgroups(k, &caps)?;
    let maxes = lattice.maximal_normal_below(k)?;
    // Search for h of 2-power order projecting to an involution in each
    // simple quotient K/M.
    let mut chosen: Option<Permutation> = None;
    'search: for id in 1..table.len() as u32 {
        let e = table.perm(id);
        if !e.order().is_power_of_two() {
            continue;
        }
        let sq = e.compose(&e);
        for m in &maxes {
            if m.contains(&e) || !m.contains(&sq) {
                continue 'search;
            }
        }
        chosen = Some(e);
        break;
    }
    let Some(h) = chosen else {
        return Err(Error::NotApplicable(
            "no 2-power element projects to an involution in every simple factor".into(),
        ));
    };
    let hgrp = PermGroup::new(k.degree(), vec![h]);
    make_action(k, &hgrp, caps)
}

/// The two-plinth example with non-isomorphic plinths:
/// `X = (V × T) ⋊ T` with `V` the 4-dimensional even-weight module of
/// `T = Alt(5)` over F2 and multiplication
/// `(v,a,b)·(w,c,d) = (v + w^{b⁻¹}, a·c^{b⁻¹}, b·d)`.
pub mod nonisoplinth {
    use super::*;
    use crate::groups::deleted_module;
    use crate::table::ElementTable;

    /// An element `(v, a, b)` with `v` an even-weight 5-bit mask and `a`,
    /// `b` element ids of the `T`-table.
    #[derive(Clone, Copy, PartialEq, Eq, Debug)]
    pub struct XElem {
        pub v: u32,
        pub a: u32,
        pub b: u32,
    }

    pub struct XGroup {
        pub t: PermGroup,
        pub t_table: ElementTable,
    }

    impl XGroup {
        pub fn new(caps: &Caps) -> Result<XGroup> {
            let t = groups::alternating(5);
            if !deleted_module::is_irreducible(&t) {
                return Err(Error::BadModule(
                    "the even-weight module must be irreducible".into(),
                ));
            }
            let t_table = ElementTable::build(&t, caps.order_cap)?;
            Ok(XGroup { t, t_table })
        }

        pub fn identity(&self) -> XElem {
            XElem { v: 0, a: 0, b: 0 }
        }

        fn act_mask(&self, mask: u32, t_id: u32) -> u32 {
            deleted_module::permute_mask(mask, &self.t_table.perm(t_id))
        }

        /// `(v,a,b)·(w,c,d) = (v + w^{b⁻¹}, a·c^{b⁻¹}, b·d)`.
        pub fn mul(&self, x: XElem, y: XElem) -> XElem {
            let b_inv = self.t_table.inv(x.b);
            let w_twist = self.act_mask(y.v, b_inv);
            let c_twist = self.t_table.conjugate_by_row(
                y.a,
                self.t_table.row(b_inv),
                self.t_table.row(x.b),
            );
            XElem {
                v: x.v ^ w_twist,
                a: self.t_table.mul(x.a, c_twist),
                b: self.t_table.mul(x.b, y.b),
            }
        }
    }

    /// The 76-point realization: the affine action of `X/R` on the sixteen
    /// module vectors and the action of `X/V` on the sixty `T`-elements;
    /// their kernels `R` and `V` intersect trivially.
    pub fn generator_perm(x: &XGroup, g: XElem) -> Permutation {
        let masks = deleted_module::masks();
        let mut images: Vec<u32> = Vec::with_capacity(76);
        // part 1: w ↦ (w + v)^b
        for &w in &masks {
            let moved = x.act_mask(w ^ g.v, g.b);
            images.push(deleted_module::index_of(moved));
        }
        // part 2: c ↦ (c · a)^b = b⁻¹·c·a·b
        for c in 0..60u32 {
            let ca = x.t_table.mul(c, g.a);
            let moved = x.t_table.conjugate_by_row(
                ca,
                x.t_table.row(g.b),
                x.t_table.row(x.t_table.inv(g.b)),
            );
            images.push(16 + moved);
        }
        Permutation::from_images(images).expect("the realization is faithful")
    }

    pub struct Instance {
        pub action: TransitiveAction,
        pub v: PermGroup,
        pub r: PermGroup,
        pub k: PermGroup,
        pub l: PermGroup,
    }

    /// Builds the default instance: order 57600, implicit degree 960.
    pub fn build(caps: Caps) -> Result<Instance> {
        let x = XGroup::new(&caps)?;
        let t_gens: Vec<u32> = x
            .t
            .generators()
            .iter()
            .map(|g| x.t_table.index_of(g).expect("generator"))
            .collect();

        let elem = |v: u32, a: u32, b: u32| XElem { v, a, b };
        let v0 = 0b00011u32;
        let mut x_gens: Vec<XElem> = vec![elem(v0, 0, 0)];
        for &t in &t_gens {
            x_gens.push(elem(0, t, 0));
            x_gens.push(elem(0, 0, t));
        }
        let ambient = PermGroup::new(
            76,
            x_gens.iter().map(|&g| generator_perm(&x, g)).collect(),
        );
        assert_eq!(ambient.order(), 57_600);

        let h = PermGroup::new(
            76,
            t_gens
                .iter()
                .map(|&t| generator_perm(&x, elem(0, 0, t)))
                .collect(),
        );
        assert_eq!(h.order(), 60);

        let v_group = PermGroup::new(
            76,
            [0b00011u32, 0b00101, 0b01001, 0b10001]
                .iter()
                .map(|&m| generator_perm(&x, elem(m, 0, 0)))
                .collect(),
        );
        assert_eq!(v_group.order(), 16);
        let r_group = PermGroup::new(
            76,
            t_gens
                .iter()
                .map(|&t| generator_perm(&x, elem(0, t, 0)))
                .collect(),
        );
        assert_eq!(r_group.order(), 60);
        let k_group = join(&v_group, &r_group)?;
        assert_eq!(k_group.order(), 960);
        let mut l_gens: Vec<Permutation> = v_group.generators().to_vec();
        for &t in &t_gens {
            l_gens.push(generator_perm(&x, elem(0, t, x.t_table.inv(t))));
        }
        let l_group = PermGroup::new(76, l_gens);
        assert_eq!(l_group.order(), 960);

        let action = make_action(&ambient, &h, caps)?;
        assert_eq!(action.degree(), 960);
        Ok(Instance {
            action,
            v: v_group,
            r: r_group,
            k: k_group,
            l: l_group,
        })
    }
}

/// The wildness wreath: `T wr (K·H)` on the cosets of `H`, where the base
/// action has plinth `K` and stabilizer `H`. The default instance wraps
/// `Alt(5)` around `Sym(3)` on 3 points.
pub fn wildness_wreath(
    base: &TransitiveAction,
    t: &PermGroup,
    caps: Caps,
) -> Result<TransitiveAction> {
    let realized = base.realize()?;
    let top = &realized.image;
    let nblocks = top.degree();
    let dt = t.degree();
    let total = dt * nblocks;
    let mut gens: Vec<Permutation> = Vec::new();
    for g in t.generators() {
        for i in 0..nblocks {
            gens.push(g.shifted(i * dt, total));
        }
    }
    let lift = |p: &Permutation| -> Permutation {
        let mut images = vec![0u32; total];
        for i in 0..nblocks {
            let ti = p.image(i as u32) as usize;
            for d in 0..dt {
                images[i * dt + d] = (ti * dt + d) as u32;
            }
        }
        Permutation::from_images(images).expect("block permutation")
    };
    for g in top.generators() {
        gens.push(lift(g));
    }
    let w = PermGroup::new(total, gens);
    let stab = PermGroup::new(
        total,
        realized
            .point_stab
            .generators()
            .iter()
            .map(lift)
            .collect(),
    );
    make_action(&w, &stab, caps)
}

/// `PΓL(2,16)` on the cosets of the Galois group: AS-type with a regular
/// plinth.
pub fn as_reg_pgammal(caps: Caps) -> Result<TransitiveAction> {
    let g = groups::pgammal_2_16();
    let frob = groups::frobenius_of_pgammal();
    let h = PermGroup::new(17, vec![frob]);
    make_action(&g, &h, caps)
}

/// `Alt(6) ⋊ C4` with an inner order-4 element, realized as
/// `Alt(6) × C4` with a diagonal stabilizer: ASQ-type with a regular plinth.
pub fn asq_reg_alt6(caps: Caps) -> Result<TransitiveAction> {
    let total = 10;
    let a6 = groups::alternating(6);
    let g_inner = Permutation::parse("(0 1 2 3)(4 5)", 6).expect("order 4");
    assert!(a6.contains(&g_inner));
    let mut gens: Vec<Permutation> = a6
        .generators()
        .iter()
        .map(|g| g.shifted(0, total))
        .collect();
    let mut shift_images: Vec<u32> = (0..total as u32).collect();
    for p in 0..4u32 {
        shift_images[(6 + p) as usize] = 6 + ((p + 1) % 4);
    }
    let c4 = Permutation::from_images(shift_images).expect("shift");
    let stab_gen = g_inner.shifted(0, total).compose(&c4);
    gens.push(stab_gen.clone());
    let g = PermGroup::new(total, gens);
    let h = PermGroup::new(total, vec![stab_gen]);
    make_action(&g, &h, caps)
}

/// `T² ⋊ C4` where the order-4 generator swaps the factors and twists by an
/// involution: PQ type (the quotient by the order-2 centralizer is PA).
pub fn pq_t2_c4(caps: Caps) -> Result<TransitiveAction> {
    let total = 14;
    let a5 = groups::alternating(5);
    let t = Permutation::parse("(0 1)(2 3)", 5).expect("involution");
    let mut gens: Vec<Permutation> = Vec::new();
    for g in a5.generators() {
        gens.push(g.shifted(0, total));
        gens.push(g.shifted(5, total));
    }
    // w: B1 -> B2 by the identity copy, B2 -> B1 through t, plus a 4-cycle
    // marker making the top group C4 rather than C2.
    let mut images = vec![0u32; total];
    for p in 0..5u32 {
        images[p as usize] = p + 5;
        images[(p + 5) as usize] = t.image(p);
    }
    for p in 0..4u32 {
        images[(10 + p) as usize] = 10 + ((p + 1) % 4);
    }
    let w = Permutation::from_images(images).expect("twisted swap");
    assert_eq!(w.order(), 4);
    gens.push(w.clone());
    let g = PermGroup::new(total, gens);
    let h = PermGroup::new(total, vec![w]);
    make_action(&g, &h, caps)
}

/// `3^4 ⋊ (C2 × Alt(5))`: the sum-zero F3 module of Alt(5) extended by the
/// scalar `-1`; HA type with stabilizer `C2 × Alt(5)`.
pub fn ha_module_81(caps: Caps) -> Result<TransitiveAction> {
    // Points: sum-zero vectors of F3^5.
    let mut vectors: Vec<[u8; 5]> = Vec::new();
    let mut index: BTreeMap<[u8; 5], u32> = BTreeMap::new();
    for code in 0..3u32.pow(5) {
        let mut v = [0u8; 5];
        let mut c = code;
        for d in v.iter_mut() {
            *d = (c % 3) as u8;
            c /= 3;
        }
        if v.iter().map(|&d| d as u32).sum::<u32>() % 3 == 0 {
            index.insert(v, vectors.len() as u32);
            vectors.push(v);
        }
    }
    assert_eq!(vectors.len(), 81);
    let perm_of = |f: &dyn Fn(&[u8; 5]) -> [u8; 5]| -> Permutation {
        let images: Vec<u32> = vectors.iter().map(|v| index[&f(v)]).collect();
        Permutation::from_images(images).expect("bijection on vectors")
    };
    let mut gens: Vec<Permutation> = Vec::new();
    // Translations by e0 - e1 and e1 - e2 generate all translations under
    // the Alt(5) action.
    for (i, j) in [(0usize, 1usize), (1, 2)] {
        gens.push(perm_of(&move |v: &[u8; 5]| {
            let mut w = *v;
            w[i] = (w[i] + 1) % 3;
            w[j] = (w[j] + 2) % 3;
            w
        }));
    }
    let neg = perm_of(&|v: &[u8; 5]| {
        let mut w = *v;
        for d in w.iter_mut() {
            *d = (3 - *d) % 3;
        }
        w
    });
    let a5 = groups::alternating(5);
    let mut stab_gens = vec![neg.clone()];
    for g in a5.generators() {
        let p = perm_of(&move |v: &[u8; 5]| {
            let mut w = [0u8; 5];
            for (pos, &val) in v.iter().enumerate() {
                w[g.image(pos as u32) as usize] = val;
            }
            w
        });
        stab_gens.push(p);
    }
    gens.push(neg);
    gens.extend(stab_gens[1..].iter().cloned());
    let g = PermGroup::new(81, gens);
    let h = PermGroup::new(81, stab_gens);
    assert_eq!(g.order(), 9720);
    assert_eq!(h.order(), 120);
    make_action(&g, &h, caps)
}

/// `(Alt(5) wr C2) ⋊ Alt(5)`: the top Alt(5) acts diagonally as inner
/// automorphisms, giving DQ type.
pub fn dq_member(caps: Caps) -> Result<TransitiveAction> {
    let total = 17; // 5 + 5 + 2 + 5
    let a5 = groups::alternating(5);
    let mut gens: Vec<Permutation> = Vec::new();
    for g in a5.generators() {
        gens.push(g.shifted(0, total));
        gens.push(g.shifted(5, total));
    }
    // The C2 swaps the two blocks and moves its own marker pair.
    let mut swap_images: Vec<u32> = (0..total as u32).collect();
    for p in 0..5u32 {
        swap_images[p as usize] = p + 5;
        swap_images[(p + 5) as usize] = p;
    }
    swap_images[10] = 11;
    swap_images[11] = 10;
    let swap = Permutation::from_images(swap_images).expect("swap");
    // The top Alt(5) acts diagonally on both blocks and on its own marker.
    let diag = |g: &Permutation| -> Permutation {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for p in 0..5u32 {
            images[p as usize] = g.image(p);
            images[(p + 5) as usize] = g.image(p) + 5;
            images[(p + 12) as usize] = g.image(p) + 12;
        }
        Permutation::from_images(images).expect("diagonal")
    };
    let mut stab_gens = vec![swap.clone()];
    for g in a5.generators() {
        stab_gens.push(diag(g));
    }
    gens.push(swap);
    gens.extend(stab_gens[1..].iter().cloned());
    let g = PermGroup::new(total, gens);
    let h = PermGroup::new(total, stab_gens);
    assert_eq!(g.order(), 432_000);
    assert_eq!(h.order(), 120);
    make_action(&g, &h, caps)
}

/// `(Alt(6) × Alt(5)) ⋊ Alt(5)` on the cosets of the acting Alt(5): a
/// two-plinth example whose quotient by the shared intersection is HS.
pub fn two_plinth_alt6_alt5(caps: Caps) -> Result<TransitiveAction> {
    let total = 16; // 6 + 5 + 5
    let a6 = groups::alternating(6);
    let a5 = groups::alternating(5);
    let mut gens: Vec<Permutation> = Vec::new();
    for g in a6.generators() {
        gens.push(g.shifted(0, total));
    }
    for g in a5.generators() {
        gens.push(g.shifted(6, total));
    }
    // The acting copy: r on the first block through Alt(5) ≤ Alt(6), on the
    // second block by conjugation (inner, realized as the natural action),
    // and on its own marker block.
    let mut stab_gens: Vec<Permutation> = Vec::new();
    for g in a5.generators() {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for p in 0..5u32 {
            images[p as usize] = g.image(p);
            images[(p + 6) as usize] = g.image(p) + 6;
            images[(p + 11) as usize] = g.image(p) + 11;
        }
        stab_gens.push(Permutation::from_images(images).expect("acting copy"));
    }
    gens.extend(stab_gens.iter().cloned());
    let g = PermGroup::new(total, gens);
    let h = PermGroup::new(total, stab_gens);
    assert_eq!(g.order(), 1_296_000);
    assert_eq!(h.order(), 60);
    make_action(&g, &h, caps)
}

/// Searches for a stabilizer isomorphism suitable for gluing two actions:
/// `mu : H1 → H2` carrying `K1 ∩ H1` exactly onto `K2 ∩ H2`.
pub fn find_action_gluing(
    a1: &TransitiveAction,
    k1: &PermGroup,
    a2: &TransitiveAction,
    k2: &PermGroup,
    effort_cap: u128,
) -> Result<Option<Homomorphism>> {
    if a1.stab_order() != a2.stab_order() {
        return Ok(None);
    }
    let l1 = a1.stab_intersection(k1)?;
    let l2 = a2.stab_intersection(k2)?;
    if l1.order() != l2.order() {
        return Ok(None);
    }
    if a1.stab_order() > effort_cap {
        return Err(Error::CapacityExceeded {
            what: "gluing isomorphism search",
            needed: a1.stab_order(),
            cap: effort_cap,
        });
    }
    let leaf = |hom: &Homomorphism| -> bool {
        l1.generators().iter().all(|x| l2.contains(&hom.apply(x)))
    };
    match crate::iso::search_isomorphism(a1.stab(), a2.stab(), false, &leaf)? {
        Some(hom) => {
            let images: Vec<Permutation> = a1
                .stab()
                .generators()
                .iter()
                .map(|g| hom.apply(g))
                .collect();
            Ok(Some(Homomorphism::from_images(a1.stab(), a2.stab(), images)?))
        }
        None => Ok(None),
    }
}

/// The glue of `Sym(7)` on 42 points with `Alt(5) wr C2` on 60 points,
/// realized through the fiber product on the two realized point sets
/// (42 + 60 = 102 points); order 18 144 000.
pub struct BigGlue {
    pub action: TransitiveAction,
    pub k1_slice: PermGroup,
    pub k2_slice: PermGroup,
    pub plinth: PermGroup,
}

pub fn glue_s7_a5wr2(caps: Caps) -> Result<BigGlue> {
    // Component 1: Sym(7) on the cosets of Alt(5) × ⟨(5 6)⟩, realized on 42
    // points.
    let s7 = groups::symmetric(7);
    let mut h1_gens: Vec<Permutation> = groups::alternating(5)
        .generators()
        .iter()
        .map(|g| g.extended(7))
        .collect();
    h1_gens.push(Permutation::parse("(5 6)", 7).expect("transposition"));
    let h1 = PermGroup::new(7, h1_gens);
    assert_eq!(h1.order(), 120);
    let a1_small = make_action(&s7, &h1, caps)?;
    let a1 = a1_small.realized_action()?;
    let k1 = {
        let r = a1_small.realize()?;
        r.hom.apply_subgroup(&groups::alternating(7))
    };

    // Component 2: Alt(5) wr C2 on 60 points.
    let a2_small = sd_wreath(&groups::alternating(5), caps)?;
    let a2 = a2_small.realized_action()?;
    let k2 = {
        let r = a2_small.realize()?;
        let a5 = groups::alternating(5);
        let mut gens: Vec<Permutation> = Vec::new();
        for g in a5.generators() {
            gens.push(g.shifted(0, 10));
            gens.push(g.shifted(5, 10));
        }
        r.hom.apply_subgroup(&PermGroup::new(10, gens))
    };

    let mu = find_action_gluing(&a1, &k1, &a2, &k2, caps.effort_cap)?
        .ok_or_else(|| Error::IncompatibleIsomorphism("no gluing isomorphism".into()))?;
    let action = crate::glue::glue_actions(&a1, &k1, &a2, &k2, &mu)?;

    let d1 = a1.ambient().degree();
    let d2 = a2.ambient().degree();
    let id1 = Permutation::identity(d1);
    let id2 = Permutation::identity(d2);
    let pair = |x: &Permutation, y: &Permutation| -> Permutation {
        let mut images: Vec<u32> = Vec::with_capacity(d1 + d2);
        images.extend(x.images().iter().copied());
        images.extend(y.images().iter().map(|&q| q + d1 as u32));
        Permutation::from_images(images).expect("disjoint")
    };
    let k1_slice = PermGroup::new(
        d1 + d2,
        k1.generators().iter().map(|x| pair(x, &id2)).collect(),
    );
    let k2_slice = PermGroup::new(
        d1 + d2,
        k2.generators().iter().map(|y| pair(&id1, y)).collect(),
    );
    let plinth = join(&k1_slice, &k2_slice)?;
    Ok(BigGlue {
        action,
        k1_slice,
        k2_slice,
        plinth,
    })
}

/// One manifest check outcome.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &str, pass: bool, detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        pass,
        detail,
    }
}

/// Runs every assertion of an entry's manifest.
pub fn verify_entry(entry: &CorpusEntry) -> Vec<CheckResult> {
    let a = &entry.action;
    let m = &entry.manifest;
    let mut out = Vec::new();
    out.push(check(
        "order",
        a.group_order() == m.order,
        format!("{} vs {}", a.group_order(), m.order),
    ));
    out.push(check(
        "degree",
        a.degree() == m.degree,
        format!("{} vs {}", a.degree(), m.degree),
    ));
    out.push(check(
        "stab_order",
        a.stab_order() == m.stab_order,
        format!("{} vs {}", a.stab_order(), m.stab_order),
    ));
    for nn in &m.named_normals {
        let normal = crate::subgroup::is_normal_in(a.ambient(), &nn.group);
        let trans = a.normal_is_transitive(&nn.group);
        let semi = a.normal_is_semiregular(&nn.group);
        let pass = normal
            && trans.as_ref().map(|&t| t == nn.transitive).unwrap_or(false)
            && semi.as_ref().map(|&s| s == nn.semiregular).unwrap_or(false);
        out.push(check(
            &format!("normal[{}]", nn.label),
            pass,
            format!(
                "normal={normal} transitive={trans:?} semiregular={semi:?}"
            ),
        ));
    }
    if !m.within_caps {
        return out;
    }

    match crate::analysis::sp_predicates(a) {
        Ok(p) => {
            if let Some(expect) = m.semiprimitive {
                out.push(check(
                    "semiprimitive",
                    p.is_semiprimitive == expect,
                    format!("{} vs {}", p.is_semiprimitive, expect),
                ));
            }
            if let Some(expect) = m.quasiprimitive {
                out.push(check(
                    "quasiprimitive",
                    p.is_quasiprimitive == expect,
                    format!("{} vs {}", p.is_quasiprimitive, expect),
                ));
            }
            if let Some(expect) = m.primitive {
                out.push(check(
                    "primitive",
                    p.is_primitive == Some(expect),
                    format!("{:?} vs {}", p.is_primitive, expect),
                ));
            }
        }
        Err(e) => out.push(check("sp_predicates", false, e.to_string())),
    }
    match crate::analysis::plinth_report(a) {
        Ok(r) => {
            if let Some(expect) = m.plinth_count {
                out.push(check(
                    "plinth_count",
                    r.plinths.len() == expect,
                    format!("{} vs {}", r.plinths.len(), expect),
                ));
            }
            if let Some(expect) = &m.plinth_orders {
                let mut got: Vec<u128> = r.plinths.iter().map(|p| p.order()).collect();
                got.sort_unstable();
                out.push(check(
                    "plinth_orders",
                    &got == expect,
                    format!("{got:?} vs {expect:?}"),
                ));
            }
            if let Some(expect) = m.rad_order {
                out.push(check(
                    "rad_order",
                    r.rad.order() == expect,
                    format!("{} vs {}", r.rad.order(), expect),
                ));
            }
        }
        Err(e) => out.push(check("plinth_report", false, e.to_string())),
    }
    if let Some(expect) = m.proper_nontrivial_normals {
        match a.lattice() {
            Ok(lat) => {
                let got = lat.len().saturating_sub(2);
                out.push(check(
                    "proper_nontrivial_normals",
                    got == expect,
                    format!("{got} vs {expect}"),
                ));
            }
            Err(e) => out.push(check("lattice", false, e.to_string())),
        }
    }
    if let Some(expect) = m.it_type {
        match crate::analysis::classify_it_type(a) {
            Ok(cls) => out.push(check(
                "it_type",
                cls.ty == expect,
                format!("{} vs {}", cls.ty.label(), expect.label()),
            )),
            Err(e) => out.push(check("it_type", false, e.to_string())),
        }
    }
    if m.semiprimitive == Some(true) {
        match crate::analysis::classify_structure(a) {
            Ok(report) => {
                if let Some(expect) = m.case {
                    out.push(check(
                        "structure_case",
                        report.case == expect,
                        format!("{} vs {}", report.case.label(), expect.label()),
                    ));
                }
                if let Some(expect) = &m.quotient_types {
                    let mut got: Vec<ItType> =
                        report.quotient_types.iter().map(|c| c.ty).collect();
                    got.sort_unstable();
                    out.push(check(
                        "quotient_types",
                        &got == expect,
                        format!(
                            "{:?} vs {:?}",
                            got.iter().map(|t| t.label()).collect::<Vec<_>>(),
                            expect.iter().map(|t| t.label()).collect::<Vec<_>>()
                        ),
                    ));
                }
                out.push(check(
                    "glue_witness",
                    !matches!(report.glue_witness, crate::iso::IsoOutcome::ProvenNo),
                    format!("{:?}", report.glue_witness),
                ));
            }
            Err(e) => out.push(check("classify_structure", false, e.to_string())),
        }
    }
    out
}

/// The fixed corpus, in a stable order.
pub fn corpus(caps: Caps) -> Result<Vec<CorpusEntry>> {
    let mut entries: Vec<CorpusEntry> = Vec::new();
    let a5 = groups::alternating(5);

    let manifest = |order: u128,
                    degree: u128,
                    stab_order: u128|
     -> Manifest {
        Manifest {
            order,
            degree,
            stab_order,
            within_caps: true,
            ..Manifest::default()
        }
    };

    // Dihedral family.
    {
        let action = dihedral(3, caps)?;
        let mut m = manifest(6, 3, 2);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(true);
        m.primitive = Some(true);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![3]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::Ha]);
        m.it_type = Some(ItType::Ha);
        entries.push(CorpusEntry {
            tag: "sym3_on_3",
            action,
            manifest: m,
        });
    }
    {
        let action = dihedral(9, caps)?;
        let mut m = manifest(18, 9, 2);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(false);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![9]);
        m.rad_order = Some(3);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::Ha]);
        entries.push(CorpusEntry {
            tag: "d18_on_9",
            action,
            manifest: m,
        });
    }
    {
        let action = dihedral(15, caps)?;
        let mut m = manifest(30, 15, 2);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(false);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![15]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::Ha, ItType::Ha]);
        entries.push(CorpusEntry {
            tag: "d30_on_15",
            action,
            manifest: m,
        });
    }
    {
        let action = dihedral(25, caps)?;
        let mut m = manifest(50, 25, 2);
        m.semiprimitive = Some(true);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![25]);
        m.rad_order = Some(5);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::Ha]);
        entries.push(CorpusEntry {
            tag: "d50_on_25",
            action,
            manifest: m,
        });
    }
    {
        let action = natural_action(groups::frobenius20(), caps)?;
        let mut m = manifest(20, 5, 4);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(true);
        m.primitive = Some(true);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![5]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::Ha]);
        m.it_type = Some(ItType::Ha);
        entries.push(CorpusEntry {
            tag: "frob20_on_5",
            action,
            manifest: m,
        });
    }
    {
        let c5 = groups::cyclic(5);
        let action = make_action(&c5, &PermGroup::trivial(5), caps)?;
        let mut m = manifest(5, 5, 1);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(true);
        m.primitive = Some(true);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![5]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::Ha]);
        m.it_type = Some(ItType::Ha);
        entries.push(CorpusEntry {
            tag: "c5_regular",
            action,
            manifest: m,
        });
    }
    {
        let action = natural_action(a5.clone(), caps)?;
        let mut m = manifest(60, 5, 12);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(true);
        m.primitive = Some(true);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![60]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AI);
        m.quotient_types = Some(vec![ItType::AsNonReg]);
        m.it_type = Some(ItType::AsNonReg);
        entries.push(CorpusEntry {
            tag: "alt5_on_5",
            action,
            manifest: m,
        });
    }
    {
        let action = make_action(&a5, &PermGroup::trivial(5), caps)?;
        let mut m = manifest(60, 60, 1);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(true);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![60]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::AsReg]);
        m.it_type = Some(ItType::AsReg);
        entries.push(CorpusEntry {
            tag: "alt5_regular",
            action,
            manifest: m,
        });
    }
    {
        let action = hs_diag(&a5, caps)?;
        let mut m = manifest(3600, 60, 60);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(true);
        m.primitive = Some(true);
        m.plinth_count = Some(2);
        m.plinth_orders = Some(vec![60, 60]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::B);
        m.quotient_types = Some(vec![ItType::Hs]);
        m.it_type = Some(ItType::Hs);
        entries.push(CorpusEntry {
            tag: "hs_alt5_diag",
            action,
            manifest: m,
        });
    }
    {
        let action = many_plinths(&a5, 3, caps)?;
        let mut m = manifest(216_000, 3600, 60);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(false);
        m.primitive = Some(false);
        m.plinth_count = Some(3);
        m.plinth_orders = Some(vec![3600, 3600, 3600]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::B);
        m.quotient_types = Some(vec![ItType::Hs, ItType::Hs, ItType::Hs]);
        entries.push(CorpusEntry {
            tag: "many_plinths_alt5_3",
            action,
            manifest: m,
        });
    }
    {
        let action = tw_wreath(&a5, caps)?;
        let mut m = manifest(7200, 3600, 2);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(true);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![3600]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::Tw]);
        m.it_type = Some(ItType::Tw);
        entries.push(CorpusEntry {
            tag: "tw_alt5_2",
            action,
            manifest: m,
        });
    }
    {
        let action = sd_wreath(&a5, caps)?;
        let mut m = manifest(7200, 60, 120);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(true);
        m.primitive = Some(true);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![3600]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AI);
        m.quotient_types = Some(vec![ItType::Sd]);
        m.it_type = Some(ItType::Sd);
        entries.push(CorpusEntry {
            tag: "sd_alt5_wr2",
            action,
            manifest: m,
        });
    }
    {
        let action = pa_wreath_alt6(caps)?;
        let mut m = manifest(259_200, 2160, 120);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(true);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![129_600]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AI);
        m.quotient_types = Some(vec![ItType::Pa]);
        m.it_type = Some(ItType::Pa);
        entries.push(CorpusEntry {
            tag: "pa_alt6_wr2",
            action,
            manifest: m,
        });
    }
    {
        let action = as_reg_pgammal(caps)?;
        let mut m = manifest(16_320, 4080, 4);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(true);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![4080]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::AsReg]);
        m.it_type = Some(ItType::AsReg);
        entries.push(CorpusEntry {
            tag: "as_reg_pgammal_2_16",
            action,
            manifest: m,
        });
    }
    {
        let action = asq_reg_alt6(caps)?;
        let mut m = manifest(1440, 360, 4);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(false);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![360]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::AsqReg]);
        m.it_type = Some(ItType::AsqReg);
        entries.push(CorpusEntry {
            tag: "asq_reg_alt6_c4",
            action,
            manifest: m,
        });
    }
    {
        let action = pq_t2_c4(caps)?;
        let mut m = manifest(14_400, 3600, 4);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(false);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![3600]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::Pq]);
        m.it_type = Some(ItType::Pq);
        entries.push(CorpusEntry {
            tag: "pq_alt5sq_c4",
            action,
            manifest: m,
        });
    }
    {
        let action = ha_module_81(caps)?;
        let mut m = manifest(9720, 81, 120);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(true);
        m.primitive = Some(true);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![81]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::Ha]);
        m.it_type = Some(ItType::Ha);
        entries.push(CorpusEntry {
            tag: "ha_3pow4_c2alt5",
            action,
            manifest: m,
        });
    }
    {
        let action = dq_member(caps)?;
        let mut m = manifest(432_000, 3600, 120);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(false);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![3600]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::Dq]);
        m.it_type = Some(ItType::Dq);
        entries.push(CorpusEntry {
            tag: "dq_alt5wr2_alt5",
            action,
            manifest: m,
        });
    }
    {
        let m_gen = Permutation::parse("(0 1)(2 3)", 5)?;
        let v_gen = Permutation::parse("(0 2)(1 3)", 5)?;
        let action = asq_with_semiregular(5, &m_gen, &v_gen, caps)?;
        let m_ext = {
            let mut images: Vec<u32> = (0..7).collect();
            images[5] = 6;
            images[6] = 5;
            PermGroup::new(7, vec![Permutation::from_images(images)?])
        };
        let mut m = manifest(120, 30, 4);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(false);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![60]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AI);
        m.quotient_types = Some(vec![ItType::AsqNonReg]);
        m.it_type = Some(ItType::AsqNonReg);
        m.named_normals = vec![NamedNormal {
            label: "external_m",
            group: m_ext,
            transitive: false,
            semiregular: true,
        }];
        entries.push(CorpusEntry {
            tag: "asq_semireg_alt5_c2",
            action,
            manifest: m,
        });
    }
    {
        let action = centerfree_perfect(&a5, caps)?;
        let mut m = manifest(60, 30, 2);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(true);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![60]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AI);
        m.quotient_types = Some(vec![ItType::AsNonReg]);
        m.it_type = Some(ItType::AsNonReg);
        entries.push(CorpusEntry {
            tag: "cfp_alt5",
            action,
            manifest: m,
        });
    }
    {
        let a5sq = PermGroup::new(10, {
            let mut gens: Vec<Permutation> = Vec::new();
            for g in a5.generators() {
                gens.push(g.shifted(0, 10));
                gens.push(g.shifted(5, 10));
            }
            gens
        });
        let action = centerfree_perfect(&a5sq, caps)?;
        let mut m = manifest(3600, 1800, 2);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(false);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![3600]);
        m.rad_order = Some(1);
        m.case = Some(StructureCase::AI);
        m.quotient_types = Some(vec![ItType::AsNonReg, ItType::AsNonReg]);
        entries.push(CorpusEntry {
            tag: "cfp_alt5_sq",
            action,
            manifest: m,
        });
    }
    {
        let inst = nonisoplinth::build(caps)?;
        let mut m = manifest(57_600, 960, 60);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(false);
        m.primitive = Some(false);
        m.plinth_count = Some(2);
        m.plinth_orders = Some(vec![960, 960]);
        m.rad_order = Some(16);
        m.case = Some(StructureCase::B);
        m.quotient_types = Some(vec![ItType::Hs]);
        m.proper_nontrivial_normals = Some(4);
        m.named_normals = vec![
            NamedNormal {
                label: "V",
                group: inst.v.clone(),
                transitive: false,
                semiregular: true,
            },
            NamedNormal {
                label: "R",
                group: inst.r.clone(),
                transitive: false,
                semiregular: true,
            },
            NamedNormal {
                label: "K",
                group: inst.k.clone(),
                transitive: true,
                semiregular: true,
            },
            NamedNormal {
                label: "L",
                group: inst.l.clone(),
                transitive: true,
                semiregular: true,
            },
        ];
        entries.push(CorpusEntry {
            tag: "nonisoplinth",
            action: inst.action,
            manifest: m,
        });
    }
    {
        let base = dihedral(3, caps)?;
        let action = wildness_wreath(&base, &a5, caps)?;
        let mut m = manifest(1_296_000, 648_000, 2);
        m.semiprimitive = Some(true);
        m.quasiprimitive = Some(false);
        m.primitive = Some(false);
        m.plinth_count = Some(1);
        m.plinth_orders = Some(vec![648_000]);
        m.rad_order = Some(216_000);
        m.case = Some(StructureCase::AII);
        m.quotient_types = Some(vec![ItType::Ha]);
        entries.push(CorpusEntry {
            tag: "wildness_alt5_sym3",
            action,
            manifest: m,
        });
    }
    {
        let action = two_plinth_alt6_alt5(caps)?;
        let mut m = manifest(1_296_000, 21_600, 60);
        m.semiprimitive = Some(true);
        m.case = Some(StructureCase::B);
        entries.push(CorpusEntry {
            tag: "eg6_6_two_plinths",
            action,
            manifest: m,
        });
    }
    {
        let glue = glue_s7_a5wr2(caps)?;
        let mut m = manifest(18_144_000, 151_200, 120);
        m.within_caps = false;
        m.named_normals = vec![
            NamedNormal {
                label: "alt7_slice",
                group: glue.k1_slice.clone(),
                transitive: false,
                semiregular: true,
            },
            NamedNormal {
                label: "alt5sq_slice",
                group: glue.k2_slice.clone(),
                transitive: false,
                semiregular: true,
            },
            NamedNormal {
                label: "plinth",
                group: glue.plinth.clone(),
                transitive: true,
                semiregular: false,
            },
        ];
        entries.push(CorpusEntry {
            tag: "glue_s7_a5wr2",
            action: glue.action,
            manifest: m,
        });
    }
    Ok(entries)
}
