//! Constructors for the named groups used throughout the corpus and tests.

use crate::group::PermGroup;
use crate::perm::Permutation;

fn pg(degree: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(degree, gens)
}

pub fn cyclic(n: usize) -> PermGroup {
    let images: Vec<u32> = (0..n as u32).map(|p| (p + 1) % n as u32).collect();
    pg(n, vec![Permutation::from_images(images).expect("cycle")])
}

pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n.max(1));
    }
    let images: Vec<u32> = (0..n as u32).map(|p| (p + 1) % n as u32).collect();
    let cycle = Permutation::from_images(images).expect("cycle");
    let swap = Permutation::parse("(0 1)", n).expect("transposition");
    pg(n, vec![cycle, swap])
}

pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n.max(1));
    }
    let three = Permutation::parse("(0 1 2)", n).expect("3-cycle");
    let big = if n % 2 == 1 {
        let images: Vec<u32> = (0..n as u32).map(|p| (p + 1) % n as u32).collect();
        Permutation::from_images(images).expect("cycle")
    } else {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for p in 1..n {
            images[p] = if p + 1 < n { p as u32 + 1 } else { 1 };
        }
        Permutation::from_images(images).expect("cycle")
    };
    pg(n, vec![three, big])
}

/// Dihedral group of order `2n` acting naturally on `n` points.
pub fn dihedral(n: usize) -> PermGroup {
    assert!(n >= 3);
    let rot: Vec<u32> = (0..n as u32).map(|p| (p + 1) % n as u32).collect();
    let refl: Vec<u32> = (0..n as u32)
        .map(|p| ((n as u32) - p) % n as u32)
        .collect();
    pg(
        n,
        vec![
            Permutation::from_images(rot).expect("rotation"),
            Permutation::from_images(refl).expect("reflection"),
        ],
    )
}

pub fn klein_four_on_4() -> PermGroup {
    pg(
        4,
        vec![
            Permutation::parse("(0 1)(2 3)", 4).expect("parses"),
            Permutation::parse("(0 2)(1 3)", 4).expect("parses"),
        ],
    )
}

/// The Frobenius group `C5 ⋊ C4` of order 20 on 5 points.
pub fn frobenius20() -> PermGroup {
    pg(
        5,
        vec![
            Permutation::parse("(0 1 2 3 4)", 5).expect("parses"),
            Permutation::parse("(1 2 4 3)", 5).expect("parses"),
        ],
    )
}

/// Elementary abelian `C2^k` in its regular action on `2^k` points.
pub fn elementary_abelian_2(k: usize) -> PermGroup {
    let n = 1usize << k;
    let mut gens = Vec::with_capacity(k);
    for bit in 0..k {
        let images: Vec<u32> = (0..n as u32).map(|p| p ^ (1 << bit) as u32).collect();
        gens.push(Permutation::from_images(images).expect("xor is a bijection"));
    }
    pg(n, gens)
}

/// The quaternion group of order 8, acting regularly: elements indexed
/// 1, i, j, k, -1, -i, -j, -k.
pub fn quaternion8() -> PermGroup {
    // Right multiplication by i and by j.
    let by_i = Permutation::from_images(vec![1, 4, 7, 2, 5, 0, 3, 6]).expect("bijection");
    let by_j = Permutation::from_images(vec![2, 3, 4, 5, 6, 7, 0, 1]).expect("bijection");
    pg(8, vec![by_i, by_j])
}

/// `SL(2, 3)` of order 24 acting on the 8 non-zero vectors of `F3²`,
/// indexed as `(x, y) ↦ 3x + y - 1` over non-zero pairs.
pub fn sl2_3() -> PermGroup {
    fn idx(x: u32, y: u32) -> u32 {
        3 * x + y - 1
    }
    fn apply(m: [[u32; 2]; 2]) -> Permutation {
        let mut images = vec![0u32; 8];
        for x in 0..3u32 {
            for y in 0..3u32 {
                if x == 0 && y == 0 {
                    continue;
                }
                let nx = (m[0][0] * x + m[1][0] * y) % 3;
                let ny = (m[0][1] * x + m[1][1] * y) % 3;
                images[idx(x, y) as usize] = idx(nx, ny);
            }
        }
        Permutation::from_images(images).expect("linear maps are bijections")
    }
    // Generators of SL(2,3): a shear and an order-4 element.
    let s = apply([[1, 1], [0, 1]]);
    let t = apply([[0, 1], [2, 0]]);
    pg(8, vec![s, t])
}

/// Arithmetic in `F16 = F2[x]/(x^4 + x + 1)`, elements as bit masks.
pub mod f16 {
    pub fn mul(a: u32, b: u32) -> u32 {
        let mut acc = 0u32;
        let mut a = a;
        let mut b = b;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            a <<= 1;
            if a & 0x10 != 0 {
                a ^= 0x13; // x^4 = x + 1
            }
            b >>= 1;
        }
        acc
    }

    pub fn pow(mut a: u32, mut e: u32) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 != 0 {
                acc = mul(acc, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(a: u32) -> u32 {
        assert!(a != 0);
        pow(a, 14)
    }
}

/// `PΓL(2, 16) = PSL(2, 16) ⋊ C4` on the 17 points of the projective line
/// (point 0 is infinity, point `1 + v` is the field element `v`).
///
/// The Frobenius `t ↦ t²` generates the field automorphisms; the socle
/// `PSL(2,16)` has index 4.
pub fn pgammal_2_16() -> PermGroup {
    let n = 17usize;
    let enc = |v: u32| v + 1;
    // t -> t + 1
    let mut add = vec![0u32; n];
    for v in 0..16 {
        add[enc(v) as usize] = enc(v ^ 1);
    }
    // t -> λ·t for a generator λ of F16*; x (=0b0010) generates.
    let mut scale = vec![0u32; n];
    for v in 0..16 {
        scale[enc(v) as usize] = enc(f16::mul(2, v));
    }
    // t -> 1/t, swapping 0 and infinity.
    let mut invp = vec![0u32; n];
    invp[0] = enc(0);
    invp[enc(0) as usize] = 0;
    for v in 1..16 {
        invp[enc(v) as usize] = enc(f16::inv(v));
    }
    // Frobenius t -> t².
    let mut frob = vec![0u32; n];
    frob[0] = 0;
    for v in 0..16 {
        frob[enc(v) as usize] = enc(f16::mul(v, v));
    }
    pg(
        n,
        vec![
            Permutation::from_images(add).expect("bijection"),
            Permutation::from_images(scale).expect("bijection"),
            Permutation::from_images(invp).expect("bijection"),
            Permutation::from_images(frob).expect("bijection"),
        ],
    )
}

/// `PSL(2, 16)` on the projective line, the socle of `PΓL(2, 16)`.
pub fn psl_2_16() -> PermGroup {
    let g = pgammal_2_16();
    let gens = g.generators();
    pg(17, vec![gens[0].clone(), gens[1].clone(), gens[2].clone()])
}

/// The Frobenius automorphism generator of `PΓL(2,16)` over `PSL(2,16)`.
pub fn frobenius_of_pgammal() -> Permutation {
    pgammal_2_16().generators()[3].clone()
}

/// Sum-zero vectors of `F2^5` under coordinate permutation: the faithful
/// irreducible 4-dimensional module of Alt(5) over F2. Vectors are encoded
/// as 5-bit masks of even weight, indexed 0..16 in increasing mask order.
pub mod deleted_module {
    use super::*;

    /// The sixteen even-weight masks in increasing order.
    pub fn masks() -> Vec<u32> {
        (0u32..32).filter(|m| m.count_ones() % 2 == 0).collect()
    }

    pub fn index_of(mask: u32) -> u32 {
        masks().iter().position(|&m| m == mask).expect("even weight") as u32
    }

    /// Applies a point permutation to a mask.
    pub fn permute_mask(mask: u32, g: &Permutation) -> u32 {
        let mut out = 0u32;
        for bit in 0..5 {
            if mask & (1 << bit) != 0 {
                out |= 1 << g.image(bit);
            }
        }
        out
    }

    /// Checks irreducibility: every non-zero vector generates the whole
    /// module as a `T`-module (exhaustive, the dimension is 4).
    pub fn is_irreducible(t: &PermGroup) -> bool {
        let all = masks();
        for &v in all.iter().filter(|&&v| v != 0) {
            // Span of the T-orbit of v over F2, by closure under xor.
            let mut span: Vec<u32> = vec![0];
            let mut stack = vec![v];
            while let Some(w) = stack.pop() {
                if span.contains(&w) {
                    continue;
                }
                let fresh: Vec<u32> = span.iter().map(|&s| s ^ w).collect();
                span.extend(fresh);
                span.sort_unstable();
                span.dedup();
                for g in t.generators() {
                    stack.push(permute_mask(w, g));
                }
            }
            if span.len() != all.len() {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_of_named_groups() {
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(alternating(6).order(), 360);
        assert_eq!(cyclic(12).order(), 12);
        assert_eq!(dihedral(15).order(), 30);
        assert_eq!(klein_four_on_4().order(), 4);
        assert_eq!(frobenius20().order(), 20);
        assert_eq!(elementary_abelian_2(4).order(), 16);
        assert_eq!(quaternion8().order(), 8);
        assert_eq!(sl2_3().order(), 24);
    }

    #[test]
    fn projective_groups() {
        assert_eq!(psl_2_16().order(), 4080);
        assert_eq!(pgammal_2_16().order(), 16320);
        let frob = frobenius_of_pgammal();
        assert_eq!(frob.order(), 4);
        assert!(!psl_2_16().contains(&frob));
    }

    #[test]
    fn f16_arithmetic() {
        assert_eq!(f16::mul(2, 8), 3); // x·x³ = x⁴ = x + 1
        for a in 1..16 {
            assert_eq!(f16::mul(a, f16::inv(a)), 1);
        }
        // x generates the multiplicative group.
        let mut seen = std::collections::HashSet::new();
        let mut v = 1;
        for _ in 0..15 {
            v = f16::mul(v, 2);
            seen.insert(v);
        }
        assert_eq!(seen.len(), 15);
    }

    #[test]
    fn deleted_module_is_irreducible() {
        assert!(deleted_module::is_irreducible(&alternating(5)));
        // The same module is reducible for a small subgroup.
        let c2 = PermGroup::new(
            5,
            vec![Permutation::parse("(0 1)", 5).unwrap()],
        );
        assert!(!deleted_module::is_irreducible(&c2));
    }

    #[test]
    fn quaternion_is_a_group() {
        let q8 = quaternion8();
        assert_eq!(q8.order(), 8);
        // Exactly one involution (the center).
        let elements = q8.elements_capped(8).unwrap();
        let involutions = elements.iter().filter(|e| e.order() == 2).count();
        assert_eq!(involutions, 1);
    }
}
