//! Homomorphisms between permutation groups, verified and evaluated through
//! the graph subgroup `⟨(g_i, img_i)⟩ ≤ source × target`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::{PermGroup, StabChain};
use crate::perm::Permutation;

/// A verified homomorphism given by one target image per source generator.
///
/// Well-definedness is certified by the graph subgroup having order equal to
/// `|source|`; evaluation, kernels and preimages all come from sifting
/// through chains of the graph subgroup.
pub struct Homomorphism {
    source: PermGroup,
    target: PermGroup,
    images: Vec<Permutation>,
    graph: PermGroup,
    /// Chain whose base runs through all source points first.
    fwd: OnceLock<StabChain>,
    /// Chain whose base runs through all target points first.
    bwd: OnceLock<StabChain>,
    kernel: OnceLock<PermGroup>,
    image: OnceLock<PermGroup>,
}

impl Homomorphism {
    /// Builds and verifies a homomorphism from generator images.
    pub fn from_images(
        source: &PermGroup,
        target: &PermGroup,
        images: Vec<Permutation>,
    ) -> Result<Homomorphism> {
        if images.len() != source.generators().len() {
            return Err(Error::NotAHomomorphism);
        }
        let pairs: Vec<(Permutation, Permutation)> = source
            .generators()
            .iter()
            .cloned()
            .zip(images.iter().cloned())
            .collect();
        Self::build(source, target, pairs, Some(images))
    }

    /// Builds a homomorphism from arbitrary defining pairs `(x, x·phi)`. The
    /// first components must generate `source`; generator images for
    /// `source`'s own generator list are recovered by sifting.
    pub fn from_pairs(
        source: &PermGroup,
        target: &PermGroup,
        pairs: Vec<(Permutation, Permutation)>,
    ) -> Result<Homomorphism> {
        let span = PermGroup::new(
            source.degree(),
            pairs.iter().map(|(x, _)| x.clone()).collect(),
        );
        if span.order() != source.order() || !source.contains_group(&span) {
            return Err(Error::NotAHomomorphism);
        }
        Self::build(source, target, pairs, None)
    }

    fn build(
        source: &PermGroup,
        target: &PermGroup,
        pairs: Vec<(Permutation, Permutation)>,
        images: Option<Vec<Permutation>>,
    ) -> Result<Homomorphism> {
        for (x, img) in &pairs {
            if x.degree() != source.degree() || img.degree() != target.degree() {
                return Err(Error::NotAHomomorphism);
            }
            // Images that literally appear among the target's generators
            // need no membership test.
            if !target.generators().contains(img) && !target.contains(img) {
                return Err(Error::NotAHomomorphism);
            }
        }
        let ds = source.degree();
        let dt = target.degree();
        let graph_gens: Vec<Permutation> = pairs
            .iter()
            .map(|(g, img)| pair_perm(g, img, ds, dt))
            .collect();
        let graph = PermGroup::new(ds + dt, graph_gens);
        let mut hom = Homomorphism {
            source: source.clone(),
            target: target.clone(),
            images: Vec::new(),
            graph,
            fwd: OnceLock::new(),
            bwd: OnceLock::new(),
            kernel: OnceLock::new(),
            image: OnceLock::new(),
        };
        // Well-definedness: the graph subgroup has order |source|. The
        // source-first chain decides this cheaply, since graph orbits of
        // source points stay on the source side.
        if hom.fwd_chain().order() != hom.source.order() {
            return Err(Error::NotAHomomorphism);
        }
        hom.images = match images {
            Some(images) => images,
            None => source.generators().iter().map(|g| hom.apply(g)).collect(),
        };
        Ok(hom)
    }

    /// Installs a kernel computed by other means (used when a construction
    /// already knows it, e.g. the core of a coset action).
    pub(crate) fn with_kernel(self, kernel: PermGroup) -> Homomorphism {
        debug_assert_eq!(kernel.degree(), self.source.degree());
        let _ = self.kernel.set(kernel);
        self
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn gen_images(&self) -> &[Permutation] {
        &self.images
    }

    fn fwd_chain(&self) -> &StabChain {
        self.fwd.get_or_init(|| {
            let pts: Vec<u32> = (0..self.source.degree() as u32).collect();
            self.graph.chain_with_strict_base(&pts)
        })
    }

    fn bwd_chain(&self) -> &StabChain {
        self.bwd.get_or_init(|| {
            let ds = self.source.degree() as u32;
            let dt = self.target.degree() as u32;
            let pts: Vec<u32> = (ds..ds + dt).collect();
            self.graph.chain_with_strict_base(&pts)
        })
    }

    /// Image of an arbitrary source element.
    pub fn apply(&self, x: &Permutation) -> Permutation {
        let ds = self.source.degree();
        let dt = self.target.degree();
        let chain = self.fwd_chain();
        let mut r = pair_perm(x, &Permutation::identity(dt), ds, dt);
        for level in &chain.levels {
            if (level.base as usize) >= ds {
                break;
            }
            let p = r.image(level.base);
            if p == level.base {
                continue;
            }
            assert!(
                level.orbit_pos[p as usize] != u32::MAX,
                "element not in hom source"
            );
            let u = level.transversal(p, ds + dt);
            r = r.compose(&u.inverse());
        }
        // r = (1, apply(x)^{-1})
        let imgs: Vec<u32> = (ds..ds + dt)
            .map(|p| r.image(p as u32) - ds as u32)
            .collect();
        Permutation::from_images(imgs)
            .expect("graph residue is a permutation")
            .inverse()
    }

    pub fn apply_subgroup(&self, sub: &PermGroup) -> PermGroup {
        PermGroup::new(
            self.target.degree(),
            sub.generators().iter().map(|g| self.apply(g)).collect(),
        )
    }

    /// Some source element mapping to `t`, if `t` is in the image.
    pub fn preimage(&self, t: &Permutation) -> Option<Permutation> {
        let ds = self.source.degree();
        let dt = self.target.degree();
        let chain = self.bwd_chain();
        let mut r = pair_perm(&Permutation::identity(ds), t, ds, dt);
        for level in &chain.levels {
            if (level.base as usize) < ds {
                break;
            }
            let p = r.image(level.base);
            if p == level.base {
                continue;
            }
            if level.orbit_pos[p as usize] == u32::MAX {
                return None;
            }
            let u = level.transversal(p, ds + dt);
            r = r.compose(&u.inverse());
        }
        let timgs: Vec<u32> = (ds..ds + dt).map(|p| r.image(p as u32) - ds as u32).collect();
        let tres = Permutation::from_images(timgs).expect("permutation");
        if !tres.is_identity() {
            return None;
        }
        // r = (preimage^{-1}, 1)
        let simgs: Vec<u32> = (0..ds).map(|p| r.image(p as u32)).collect();
        Some(
            Permutation::from_images(simgs)
                .expect("permutation")
                .inverse(),
        )
    }

    /// Kernel: the source projection of the graph elements fixing every
    /// target point.
    pub fn kernel(&self) -> &PermGroup {
        self.kernel.get_or_init(|| {
            let ds = self.source.degree();
            let dt = self.target.degree();
            let chain = self.bwd_chain();
            let cut = chain
                .levels
                .iter()
                .take_while(|l| (l.base as usize) >= ds)
                .count();
            let gens: Vec<Permutation> = if cut < chain.levels.len() {
                chain.levels[cut]
                    .gens
                    .iter()
                    .map(|g| {
                        debug_assert!((ds..ds + dt).all(|p| !g.moves(p as u32)));
                        let imgs: Vec<u32> = (0..ds).map(|p| g.image(p as u32)).collect();
                        Permutation::from_images(imgs).expect("permutation")
                    })
                    .collect()
            } else {
                Vec::new()
            };
            PermGroup::new(ds, gens)
        })
    }

    pub fn image(&self) -> &PermGroup {
        self.image.get_or_init(|| {
            PermGroup::new(self.target.degree(), self.images.clone())
        })
    }

    /// Preimage of a subgroup of the image: kernel generators plus one lift
    /// per generator of `sub`.
    pub fn preimage_subgroup(&self, sub: &PermGroup) -> Result<PermGroup> {
        let mut gens = self.kernel().generators().to_vec();
        for t in sub.generators() {
            let x = self.preimage(t).ok_or(Error::NotAHomomorphism)?;
            gens.push(x);
        }
        Ok(PermGroup::new(self.source.degree(), gens))
    }

    /// True when the homomorphism is injective with image equal to `target`.
    pub fn is_isomorphism_onto_target(&self) -> bool {
        self.kernel().order() == 1 && self.image().order() == self.target.order()
    }
}

impl std::fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Homomorphism({:?} -> {:?})",
            self.source, self.target
        )
    }
}

/// Acts as `g` on `0..ds` and as `img` shifted onto `ds..ds+dt`.
fn pair_perm(g: &Permutation, img: &Permutation, ds: usize, dt: usize) -> Permutation {
    let mut images = Vec::with_capacity(ds + dt);
    images.extend(g.images().iter().copied());
    images.extend(img.images().iter().map(|&q| q + ds as u32));
    debug_assert_eq!(images.len(), ds + dt);
    Permutation::from_images(images).expect("disjoint union of permutations")
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
    fn identity_map_on_alt5() {
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let hom =
            Homomorphism::from_images(&a5, &a5, a5.generators().to_vec()).unwrap();
        assert_eq!(hom.kernel().order(), 1);
        assert_eq!(hom.image().order(), 60);
        let x = Permutation::parse("(0 1)(2 3)", 5).unwrap();
        assert_eq!(hom.apply(&x), x);
        assert_eq!(hom.preimage(&x).unwrap(), x);
    }

    #[test]
    fn sign_map_on_sym3() {
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let c2 = gp(2, &["(0 1)"]);
        let images = vec![
            Permutation::identity(2),
            Permutation::parse("(0 1)", 2).unwrap(),
        ];
        let hom = Homomorphism::from_images(&s3, &c2, images).unwrap();
        assert_eq!(hom.kernel().order(), 3);
        assert_eq!(hom.image().order(), 2);
        assert_eq!(
            hom.kernel().order() * hom.image().order(),
            s3.order()
        );
    }

    #[test]
    fn map_to_trivial_group() {
        let a5 = gp(5, &["(0 1 2)", "(2 3 4)"]);
        let triv = PermGroup::trivial(1);
        let images = vec![Permutation::identity(1), Permutation::identity(1)];
        let hom = Homomorphism::from_images(&a5, &triv, images).unwrap();
        assert_eq!(hom.kernel().order(), 60);
    }

    #[test]
    fn ill_defined_map_is_rejected() {
        // C4 -> C2 sending the 4-cycle to an involution is fine, but
        // Sym(3) -> C3 sending a transposition to a 3-cycle is not.
        let s3 = gp(3, &["(0 1 2)", "(0 1)"]);
        let c3 = gp(3, &["(0 1 2)"]);
        let images = vec![
            Permutation::parse("(0 1 2)", 3).unwrap(),
            Permutation::parse("(0 1 2)", 3).unwrap(),
        ];
        assert!(matches!(
            Homomorphism::from_images(&s3, &c3, images),
            Err(Error::NotAHomomorphism)
        ));
    }

    #[test]
    fn apply_is_multiplicative() {
        let s4 = gp(4, &["(0 1 2 3)", "(0 1)"]);
        let c2 = gp(2, &["(0 1)"]);
        let images = vec![
            Permutation::parse("(0 1)", 2).unwrap(),
            Permutation::parse("(0 1)", 2).unwrap(),
        ];
        let hom = Homomorphism::from_images(&s4, &c2, images).unwrap();
        let x = Permutation::parse("(0 1 2)", 4).unwrap();
        let y = Permutation::parse("(0 3)", 4).unwrap();
        assert_eq!(
            hom.apply(&x.compose(&y)),
            hom.apply(&x).compose(&hom.apply(&y))
        );
        assert_eq!(hom.kernel().order(), 12);
    }
}
