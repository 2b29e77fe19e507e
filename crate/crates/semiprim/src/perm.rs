//! Permutations of `{0, ..., degree-1}` stored as image tables.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation, the atom everything else is built from.
///
/// `images[p]` is the image of point `p`; the table is always a bijection.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image table, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &q in &images {
            if q as usize >= degree {
                return Err(Error::PointOutOfRange {
                    point: q as u64,
                    degree,
                });
            }
            if seen[q as usize] {
                return Err(Error::RepeatedPoint(q));
            }
            seen[q as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses whitespace-separated disjoint cycles of 0-based points.
    ///
    /// Points absent from the text are fixed; the empty string is the
    /// identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let mut chars = text.chars().peekable();
        loop {
            while let Some(c) = chars.peek() {
                if c.is_whitespace() {
                    chars.next();
                } else {
                    break;
                }
            }
            let Some(&c) = chars.peek() else { break };
            if c != '(' {
                return Err(Error::MalformedCycle(format!(
                    "expected '(' but found {c:?}"
                )));
            }
            chars.next();
            let mut cycle: Vec<u32> = Vec::new();
            let mut num = String::new();
            loop {
                match chars.next() {
                    Some(d) if d.is_ascii_digit() => num.push(d),
                    Some(d) if d.is_whitespace() || d == ',' || d == ')' => {
                        if !num.is_empty() {
                            let p: u64 = num.parse().map_err(|_| {
                                Error::MalformedCycle(format!("bad point {num:?}"))
                            })?;
                            if p >= degree as u64 {
                                return Err(Error::PointOutOfRange { point: p, degree });
                            }
                            let p = p as u32;
                            if used[p as usize] {
                                return Err(Error::RepeatedPoint(p));
                            }
                            used[p as usize] = true;
                            cycle.push(p);
                            num.clear();
                        }
                        if d == ')' {
                            break;
                        }
                    }
                    Some(d) => {
                        return Err(Error::MalformedCycle(format!(
                            "unexpected character {d:?}"
                        )))
                    }
                    None => {
                        return Err(Error::MalformedCycle("unclosed cycle".into()));
                    }
                }
            }
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                images[from as usize] = to;
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, p: u32) -> u32 {
        self.images[p as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn into_images(self) -> Vec<u32> {
        self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p as u32 == q)
    }

    /// `self` followed by `other`: `p^(a·b) = (p^a)^b`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&q| other.images[q as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q as usize] = p as u32;
        }
        Permutation { images }
    }

    /// `g^{-1}·self·g`.
    pub fn conjugate(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (p, &q) in self.images.iter().enumerate() {
            images[g.images[p] as usize] = g.images[q as usize];
        }
        Permutation { images }
    }

    /// `[a, b] = a^{-1} b^{-1} a b`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.inverse().compose(&b.inverse()).compose(a).compose(b)
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord = 1u64;
        for p in 0..self.degree() {
            if seen[p] || self.images[p] as usize == p {
                continue;
            }
            let mut len = 0u64;
            let mut q = p as u32;
            while !seen[q as usize] {
                seen[q as usize] = true;
                q = self.images[q as usize];
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    pub fn support_size(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(p, &q)| p as u32 != q)
            .count()
    }

    pub fn moves(&self, p: u32) -> bool {
        self.images[p as usize] != p
    }

    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(p, &q)| p as u32 != q)
            .map(|(p, _)| p as u32)
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for p in 0..self.degree() {
            if seen[p] || self.images[p] as usize == p {
                continue;
            }
            let mut cycle = Vec::new();
            let mut q = p as u32;
            while !seen[q as usize] {
                seen[q as usize] = true;
                cycle.push(q);
                q = self.images[q as usize];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// `Some(p)` when the permutation is a single cycle of prime length `p`.
    pub fn prime_cycle_length(&self) -> Option<u64> {
        let cycles = self.cycles();
        if cycles.len() != 1 {
            return None;
        }
        let len = cycles[0].len() as u64;
        is_prime(len).then_some(len)
    }

    /// Re-embeds into a larger degree, fixing the new points.
    pub fn extended(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Permutation { images }
    }

    /// Acts on `offset..offset+degree` inside a larger set, fixing the rest.
    pub fn shifted(&self, offset: usize, total: usize) -> Permutation {
        assert!(offset + self.degree() <= total);
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (p, &q) in self.images.iter().enumerate() {
            images[offset + p] = offset as u32 + q;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_three_cycle() {
        let p = Permutation::parse("(0 1 2)", 3).unwrap();
        assert_eq!(p.images(), &[1, 2, 0]);
    }

    #[test]
    fn parse_empty_is_identity() {
        let p = Permutation::parse("", 4).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.degree(), 4);
    }

    #[test]
    fn parse_disjoint_transpositions() {
        let p = Permutation::parse("(0 2)(1 3)", 4).unwrap();
        assert_eq!(p.images(), &[2, 3, 0, 1]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse("(0 1 5)", 3),
            Err(Error::PointOutOfRange { .. })
        ));
        assert!(matches!(
            Permutation::parse("(0 1)(1 2)", 3),
            Err(Error::RepeatedPoint(1))
        ));
        assert!(matches!(
            Permutation::parse("(0 1", 3),
            Err(Error::MalformedCycle(_))
        ));
        assert!(matches!(
            Permutation::parse("0 1 2", 3),
            Err(Error::MalformedCycle(_))
        ));
    }

    #[test]
    fn display_roundtrip() {
        let p = Permutation::parse("(0 2)(1 3 4)", 5).unwrap();
        let q = Permutation::parse(&p.to_string(), 5).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn order_and_cycles() {
        let p = Permutation::parse("(0 1)(2 3 4)", 5).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.support_size(), 5);
        assert_eq!(p.prime_cycle_length(), None);
        let c = Permutation::parse("(1 2 3)", 6).unwrap();
        assert_eq!(c.prime_cycle_length(), Some(3));
    }

    fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
        Just(()).prop_perturb(move |_, mut rng| {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for i in (1..degree).rev() {
                let j = rng.random_range(0..=i);
                images.swap(i, j);
            }
            Permutation::from_images(images).unwrap()
        })
    }

    proptest! {
        #[test]
        fn compose_inverse_is_identity(p in arb_perm(9)) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(&p).is_identity());
        }

        #[test]
        fn conjugation_is_a_homomorphism(p in arb_perm(8), q in arb_perm(8), g in arb_perm(8)) {
            let lhs = p.compose(&q).conjugate(&g);
            let rhs = p.conjugate(&g).compose(&q.conjugate(&g));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn print_parse_roundtrip(p in arb_perm(11)) {
            let text = p.to_string();
            let q = Permutation::parse(&text, 11).unwrap();
            prop_assert_eq!(p, q);
        }
    }
}
