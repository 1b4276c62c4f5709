//! Permutations of `{0, .., n-1}` acting on the right.
//!
//! The product `p.then(q)` (also `&p * &q`) applies `p` first and then `q`,
//! so `(x)(pq) = ((x)p)q`. Points are stored 0-based; cycle notation is
//! printed and parsed 1-based.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Closure size at which [`generate_closure`] gives up by default.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000_000;

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

    /// Builds a permutation from its image table, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &p in &images {
            if p >= degree || seen[p] {
                return Err(Error::NotAPermutation { degree });
            }
            seen[p] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|p| p as u32).collect(),
        })
    }

    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.iter().map(|&p| p as usize).collect()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::CycleSyntax(format!(
                        "point {} out of range 1..={degree}",
                        p + 1
                    )));
                }
                if used[p] {
                    return Err(Error::CycleSyntax(format!("point {} repeated", p + 1)));
                }
                used[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    /// Parses 1-based cycle notation such as `"(1,2)(3, 11)"`. Whitespace is
    /// ignored and fixed points may be omitted; `"()"` or `""` is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::CycleSyntax(format!("expected '(' at {rest:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::CycleSyntax("unclosed cycle".into()))?;
            let inner = &body[..close];
            rest = &body[close + 1..];
            if inner.is_empty() {
                continue;
            }
            let mut cycle = Vec::new();
            for tok in inner.split(',') {
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::CycleSyntax(format!("bad point {tok:?}")))?;
                if p == 0 {
                    return Err(Error::CycleSyntax("points are 1-based".into()));
                }
                cycle.push(p - 1);
            }
            cycles.push(cycle);
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(degree, &refs)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of point `p`.
    #[inline]
    pub fn apply(&self, p: usize) -> usize {
        self.images[p] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images.iter().map(|&p| p as usize).collect()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (p, &q) in self.images.iter().enumerate() {
            inv[q as usize] = p as u32;
        }
        Permutation { images: inv }
    }

    /// `g^-1 self g`, which maps `(x)g` to `(x self)g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p as u32 == q)
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(p, &q)| self.images[q as usize] == p as u32)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(p, &q)| *p as u32 == q)
            .map(|(p, _)| p)
    }

    /// All cycles, including fixed points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut counts = BTreeMap::new();
        for c in self.cycles() {
            *counts.entry(c.len()).or_insert(0) += 1;
        }
        CycleType { counts }
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn is_odd(&self) -> bool {
        self.cycles().iter().filter(|c| c.len() % 2 == 0).count() % 2 == 1
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Multiset of cycle lengths: length -> multiplicity, fixed points included.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    counts: BTreeMap<usize, usize>,
}

impl CycleType {
    /// Builds a cycle type from `(length, multiplicity)` pairs.
    pub fn new(pairs: &[(usize, usize)]) -> Self {
        let mut counts = BTreeMap::new();
        for &(len, mult) in pairs {
            if len > 0 && mult > 0 {
                *counts.entry(len).or_insert(0) += mult;
            }
        }
        CycleType { counts }
    }

    pub fn degree(&self) -> usize {
        self.counts.iter().map(|(l, m)| l * m).sum()
    }

    pub fn multiplicity(&self, len: usize) -> usize {
        self.counts.get(&len).copied().unwrap_or(0)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&l, &m)| (l, m))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (l, m) in self.counts.iter().rev() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{l}^{m}")?;
        }
        Ok(())
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Parses `"2^3 1^5"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for tok in s.split_whitespace() {
            let (l, m) = tok
                .split_once('^')
                .ok_or_else(|| Error::CycleSyntax(format!("bad cycle type term {tok:?}")))?;
            let l = l
                .parse()
                .map_err(|_| Error::CycleSyntax(format!("bad length {l:?}")))?;
            let m = m
                .parse()
                .map_err(|_| Error::CycleSyntax(format!("bad multiplicity {m:?}")))?;
            pairs.push((l, m));
        }
        Ok(CycleType::new(&pairs))
    }
}

/// Order of the centralizer in `S_n` of any permutation of the given cycle
/// type: the product over lengths `k` of `k^c * c!`.
pub fn sym_centralizer_order(ct: &CycleType) -> BigUint {
    let mut acc = BigUint::one();
    for (k, c) in ct.pairs() {
        acc *= BigUint::from(k).pow(c as u32);
        acc *= factorial(c);
    }
    acc
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

fn check_degrees(generators: &[Permutation], degree: usize) -> Result<()> {
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    Ok(())
}

/// Orbit label of every point under the group generated by `generators`,
/// labels numbered by least point. Returns `(labels, number_of_orbits)`.
pub fn orbit_labels(generators: &[&Permutation], degree: usize) -> (Vec<usize>, usize) {
    const UNSEEN: usize = usize::MAX;
    let mut label = vec![UNSEEN; degree];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..degree {
        if label[start] != UNSEEN {
            continue;
        }
        label[start] = count;
        stack.push(start);
        while let Some(p) = stack.pop() {
            for g in generators {
                let q = g.apply(p);
                if label[q] == UNSEEN {
                    label[q] = count;
                    stack.push(q);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// The orbits of `<generators>` on `{0, .., degree-1}`, each sorted, ordered
/// by least element.
pub fn orbits(generators: &[Permutation], degree: usize) -> Result<Vec<Vec<usize>>> {
    check_degrees(generators, degree)?;
    let refs: Vec<&Permutation> = generators.iter().collect();
    let (labels, count) = orbit_labels(&refs, degree);
    let mut blocks = vec![Vec::new(); count];
    for (p, &l) in labels.iter().enumerate() {
        blocks[l].push(p);
    }
    Ok(blocks)
}

/// Every element of `<generators>`, sorted (the identity comes first).
/// Fails with [`Error::ClosureOverflow`] once more than `cap` elements appear.
pub fn generate_closure(
    generators: &[Permutation],
    degree: usize,
    cap: usize,
) -> Result<Vec<Permutation>> {
    check_degrees(generators, degree)?;
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.then(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::ClosureOverflow { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn right_action_composition() {
        let a = p(&[1, 2, 0]);
        let b = p(&[1, 0, 2]);
        // 0 -a-> 1 -b-> 0
        assert_eq!(a.then(&b).apply(0), 0);
        assert_eq!((&a * &b).apply(1), 2);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
    }

    #[test]
    fn cycle_notation_round_trip() {
        let a = Permutation::parse_cycles(" (1, 2)(3,11) ", 11).unwrap();
        assert_eq!(a.apply(0), 1);
        assert_eq!(a.apply(10), 2);
        assert_eq!(a.to_string(), "(1,2)(3,11)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::parse_cycles("()", 3).unwrap().is_identity());
        assert!(Permutation::parse_cycles("(1,4)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,2)(2,3)", 3).is_err());
        assert!(Permutation::parse_cycles("(0,1)", 3).is_err());
        assert!(Permutation::parse_cycles("1,2", 3).is_err());
    }

    #[test]
    fn orbits_examples() {
        let g = p(&[1, 0, 3, 2]);
        assert_eq!(orbits(&[g], 4).unwrap(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(orbits(&[], 3).unwrap(), vec![vec![0], vec![1], vec![2]]);
        assert!(orbits(&[p(&[1, 0])], 3).is_err());
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(
            sym_centralizer_order(&CycleType::new(&[(1, 4)])),
            24u32.into()
        );
        assert_eq!(
            sym_centralizer_order(&CycleType::new(&[(2, 1), (1, 1)])),
            2u32.into()
        );
        assert_eq!(
            sym_centralizer_order(&CycleType::new(&[(2, 3), (1, 5)])),
            5760u32.into()
        );
    }

    #[test]
    fn brute_force_transposition_centralizer_in_s3() {
        let s3 = generate_closure(&[p(&[1, 0, 2]), p(&[1, 2, 0])], 3, 100).unwrap();
        let t = p(&[1, 0, 2]);
        assert_eq!(s3.iter().filter(|g| g.commutes_with(&t)).count(), 2);
    }

    #[test]
    fn closure_examples() {
        assert_eq!(generate_closure(&[p(&[1, 0])], 2, 10).unwrap().len(), 2);
        let r0 = Permutation::parse_cycles("(1,2)", 5).unwrap();
        let rho = Permutation::parse_cycles("(1,2,3,4,5)", 5).unwrap();
        let s5 = generate_closure(&[r0.clone(), rho.clone()], 5, 1000).unwrap();
        assert_eq!(s5.len(), 120);
        assert!(s5[0].is_identity());
        assert!(matches!(
            generate_closure(&[r0, rho], 5, 50),
            Err(Error::ClosureOverflow { cap: 50 })
        ));
    }

    #[test]
    fn cycle_type_parse_and_display() {
        let ct: CycleType = "2^3 1^5".parse().unwrap();
        assert_eq!(ct.degree(), 11);
        assert_eq!(ct.to_string(), "2^3 1^5");
        assert_eq!(
            Permutation::parse_cycles("(1,2)(3,4)(5,6)", 11)
                .unwrap()
                .cycle_type(),
            ct
        );
    }

    fn all_perms(n: usize) -> Vec<Permutation> {
        let gens: Vec<Permutation> = if n < 2 {
            vec![]
        } else {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            let c: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            vec![p(&t), p(&c)]
        };
        generate_closure(&gens, n, 10_000).unwrap()
    }

    #[test]
    fn class_equation_exhaustive_up_to_seven() {
        for n in 1..=7 {
            let group = all_perms(n);
            let mut class_sizes: BTreeMap<CycleType, usize> = BTreeMap::new();
            for g in &group {
                *class_sizes.entry(g.cycle_type()).or_default() += 1;
            }
            for (ct, size) in class_sizes {
                assert_eq!(
                    sym_centralizer_order(&ct) * BigUint::from(size),
                    factorial(n),
                    "n={n} type {ct}"
                );
            }
            // brute force for one representative per type when n is small
            if n <= 5 {
                for g in &group {
                    let brute = group.iter().filter(|h| h.commutes_with(g)).count();
                    assert_eq!(sym_centralizer_order(&g.cycle_type()), brute.into());
                }
            }
        }
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (1..=max)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    fn arb_pair(max: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
        (1..=max)
            .prop_flat_map(|n| {
                let v: Vec<usize> = (0..n).collect();
                (Just(v.clone()).prop_shuffle(), Just(v).prop_shuffle())
            })
            .prop_map(|(a, b)| {
                (
                    Permutation::from_images(a).unwrap(),
                    Permutation::from_images(b).unwrap(),
                )
            })
    }

    proptest! {
        #[test]
        fn inverse_and_cycles(a in arb_perm(12)) {
            prop_assert!(a.then(&a.inverse()).is_identity());
            prop_assert_eq!(a.cycle_type().degree(), a.degree());
            prop_assert!(a.pow(a.order()).is_identity());
            let back = Permutation::parse_cycles(&a.to_string(), a.degree()).unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn orbits_idempotent((a, b) in arb_pair(10)) {
            let n = a.degree();
            let blocks = orbits(&[a.clone(), b.clone()], n).unwrap();
            let mut covered = vec![0; n];
            for block in &blocks {
                for &x in block { covered[x] += 1; }
                // each block is closed under both generators
                for &x in block {
                    prop_assert!(block.contains(&a.apply(x)));
                    prop_assert!(block.contains(&b.apply(x)));
                }
            }
            prop_assert!(covered.iter().all(|&c| c == 1));
            let again = orbits(&[a, b], n).unwrap();
            prop_assert_eq!(blocks, again);
        }

        #[test]
        fn closure_is_a_group((a, b) in arb_pair(5)) {
            let g = generate_closure(&[a.clone(), b], a.degree(), 1000).unwrap();
            let set: HashSet<_> = g.iter().cloned().collect();
            prop_assert!(set.contains(&Permutation::identity(a.degree())));
            for x in &g {
                prop_assert!(set.contains(&x.inverse()));
                for y in g.iter().take(8) {
                    prop_assert!(set.contains(&x.then(y)));
                }
            }
        }
    }
}
