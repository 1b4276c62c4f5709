//! Constructors for the concrete maps used throughout the crate, and the
//! automorphisms they are quotiented by.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::cover::quotient_by_involution;
use crate::error::{Error, Result};
use crate::flags::{FlagSystem, Kind};
use crate::perm::{generate_closure, Permutation, DEFAULT_CLOSURE_CAP};

fn require(what: &'static str, requirement: &'static str, ok: bool, value: i64) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::BadParameter {
            what,
            requirement,
            value,
        })
    }
}

fn system(kind: Kind, tables: [Vec<usize>; 3]) -> FlagSystem {
    FlagSystem::from_tables(kind, tables).expect("family constructors emit valid systems")
}

/// The spherical map `{2,n}`: two vertices joined by `n` edges.
/// Flag `(edge j, end e, side s)` is `4j + 2e + s`; side 1 of edge `j` lies
/// in the digon between edges `j` and `j+1`.
pub fn hosohedron(n: usize) -> Result<FlagSystem> {
    require("hosohedron", "n >= 1", n >= 1, n as i64)?;
    let idx = |j: usize, e: usize, s: usize| 4 * (j % n) + 2 * e + s;
    let mut t = [vec![0; 4 * n], vec![0; 4 * n], vec![0; 4 * n]];
    for j in 0..n {
        for e in 0..2 {
            for s in 0..2 {
                let me = idx(j, e, s);
                t[0][me] = idx(j, 1 - e, s);
                t[1][me] = if s == 1 {
                    idx(j + 1, e, 0)
                } else {
                    idx(j + n - 1, e, 1)
                };
                t[2][me] = idx(j, e, 1 - s);
            }
        }
    }
    Ok(system(Kind::Map, t))
}

/// One vertex, one face and `n` free edges on the sphere. Each free edge has
/// two flags `2j + s` and `r0 = r2` on them, so no flag is fixed.
pub fn semi_star(n: usize) -> Result<FlagSystem> {
    require("semi-star", "n >= 1", n >= 1, n as i64)?;
    let idx = |j: usize, s: usize| 2 * (j % n) + s;
    let mut t = [vec![0; 2 * n], vec![0; 2 * n], vec![0; 2 * n]];
    for j in 0..n {
        for s in 0..2 {
            let me = idx(j, s);
            t[2][me] = idx(j, 1 - s);
            t[0][me] = t[2][me];
            t[1][me] = if s == 1 {
                idx(j + 1, 0)
            } else {
                idx(j + n - 1, 1)
            };
        }
    }
    Ok(system(Kind::Map, t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReflectionFamily {
    Hosohedron,
    SemiStar,
}

/// Reflection in edge 0 (and in edge `n/2` when `n` is even).
pub fn reflection_automorphism(family: ReflectionFamily, n: usize) -> Result<Permutation> {
    require("reflection", "n >= 1", n >= 1, n as i64)?;
    let images = match family {
        ReflectionFamily::Hosohedron => {
            let mut v = vec![0; 4 * n];
            for j in 0..n {
                for e in 0..2 {
                    for s in 0..2 {
                        v[4 * j + 2 * e + s] = 4 * ((n - j) % n) + 2 * e + (1 - s);
                    }
                }
            }
            v
        }
        ReflectionFamily::SemiStar => {
            let mut v = vec![0; 2 * n];
            for j in 0..n {
                for s in 0..2 {
                    v[2 * j + s] = 2 * ((n - j) % n) + (1 - s);
                }
            }
            v
        }
    };
    Permutation::from_images(images)
}

/// Vertex lattice of a `{4,4}` torus map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    /// `Z^2 / <(2m,2m), (-2m,2m)>`, the map `{4,4}_{2m,2m}`.
    Diag(usize),
    /// `Z^2 / <(2m,0), (0,2m)>`, the map `{4,4}_{2m,0}`.
    Rect(usize),
}

impl Lattice {
    fn m(self) -> usize {
        match self {
            Lattice::Diag(m) | Lattice::Rect(m) => m,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Lattice::Diag(_) => "diagonal",
            Lattice::Rect(_) => "rectangular",
        }
    }

    fn key(self, x: i64, y: i64) -> (i64, i64) {
        match self {
            Lattice::Diag(m) => {
                let q = 4 * m as i64;
                ((x + y).rem_euclid(q), (y - x).rem_euclid(q))
            }
            Lattice::Rect(m) => {
                let q = 2 * m as i64;
                (x.rem_euclid(q), y.rem_euclid(q))
            }
        }
    }

    /// Vertex representatives `(x, y)` in key order.
    fn vertices(self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        match self {
            Lattice::Diag(m) => {
                let q = 4 * m as i64;
                for u in 0..q {
                    for w in (0..q).filter(|w| (w - u) % 2 == 0) {
                        out.push(((u - w) / 2, (u + w) / 2));
                    }
                }
            }
            Lattice::Rect(m) => {
                let q = 2 * m as i64;
                for x in 0..q {
                    for y in 0..q {
                        out.push((x, y));
                    }
                }
            }
        }
        out
    }
}

const DARTS: [(i64, i64); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];

struct TorusIndex {
    lattice: Lattice,
    coords: Vec<(i64, i64)>,
    ids: BTreeMap<(i64, i64), usize>,
}

impl TorusIndex {
    fn new(lattice: Lattice) -> Self {
        let coords = lattice.vertices();
        let ids = coords
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| (lattice.key(x, y), i))
            .collect();
        TorusIndex {
            lattice,
            coords,
            ids,
        }
    }

    fn vertex(&self, x: i64, y: i64) -> usize {
        self.ids[&self.lattice.key(x, y)]
    }

    fn flags(&self) -> usize {
        8 * self.coords.len()
    }
}

fn torus_flag(v: usize, d: usize, s: usize) -> usize {
    (4 * v + d) * 2 + s
}

/// The regular torus map `{4,4}` on the given lattice. Flag `(v, d, s)` has
/// vertex `v`, dart `d` in `+x, +y, -x, -y` and side `s` (0 = left of the
/// dart, 1 = right).
pub fn torus_44(lattice: Lattice) -> Result<FlagSystem> {
    require(
        "torus lattice",
        "m >= 1",
        lattice.m() >= 1,
        lattice.m() as i64,
    )?;
    let ix = TorusIndex::new(lattice);
    let n = ix.flags();
    let mut t = [vec![0; n], vec![0; n], vec![0; n]];
    for (v, &(x, y)) in ix.coords.iter().enumerate() {
        for (d, &(dx, dy)) in DARTS.iter().enumerate() {
            let w = ix.vertex(x + dx, y + dy);
            for s in 0..2 {
                let me = torus_flag(v, d, s);
                t[0][me] = torus_flag(w, (d + 2) % 4, 1 - s);
                t[1][me] = if s == 0 {
                    torus_flag(v, (d + 1) % 4, 1)
                } else {
                    torus_flag(v, (d + 3) % 4, 0)
                };
                t[2][me] = torus_flag(v, d, 1 - s);
            }
        }
    }
    Ok(system(Kind::Map, t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Glide {
    /// `(x, y) -> (y + m, x + m)` on the diagonal lattice.
    Diag,
    /// `(x, y) -> (x + m, -y)` on the rectangular lattice.
    Rect,
}

type PointMap = Box<dyn Fn(i64, i64) -> (i64, i64)>;

/// Glide reflection of `torus_44(lattice)` as a flag permutation.
pub fn glide_automorphism(lattice: Lattice, glide: Glide) -> Result<Permutation> {
    require(
        "torus lattice",
        "m >= 1",
        lattice.m() >= 1,
        lattice.m() as i64,
    )?;
    let m = lattice.m() as i64;
    let (point, dart): (PointMap, [usize; 4]) = match (lattice, glide) {
        (Lattice::Diag(_), Glide::Diag) => (Box::new(move |x, y| (y + m, x + m)), [1, 0, 3, 2]),
        (Lattice::Rect(_), Glide::Rect) => (Box::new(move |x, y| (x + m, -y)), [0, 3, 2, 1]),
        (_, g) => {
            return Err(Error::LatticeMismatch {
                glide: match g {
                    Glide::Diag => "diagonal",
                    Glide::Rect => "rectangular",
                },
                lattice: lattice.name(),
            })
        }
    };
    let ix = TorusIndex::new(lattice);
    let mut images = vec![0; ix.flags()];
    for (v, &(x, y)) in ix.coords.iter().enumerate() {
        let (gx, gy) = point(x, y);
        let w = ix.vertex(gx, gy);
        for d in 0..4 {
            for s in 0..2 {
                images[torus_flag(v, d, s)] = torus_flag(w, dart[d], 1 - s);
            }
        }
    }
    Permutation::from_images(images)
}

/// A regular map or hypermap whose flags are the elements of a permutation
/// group `G = <r0, r1, r2>`, generator `i` acting by right multiplication by
/// `r_i`. Automorphisms are the left multiplications.
#[derive(Clone, Debug)]
pub struct RegularMap {
    pub map: FlagSystem,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    r: [Permutation; 3],
}

impl RegularMap {
    /// Builds from the full element list of `G`; verifies that the `r_i`
    /// are involutions generating exactly this group.
    pub fn from_group(elements: Vec<Permutation>, r: [Permutation; 3], kind: Kind) -> Result<Self> {
        for (i, ri) in r.iter().enumerate() {
            if !ri.is_involution() {
                return Err(Error::NotInvolution(i));
            }
        }
        let degree = r[0].degree();
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        let generated = generate_closure(&r, degree, elements.len().max(1)).map_err(|_| {
            Error::NotGenerating("generated group is larger than the element list".into())
        })?;
        if generated != elements {
            return Err(Error::NotGenerating(format!(
                "generators give {} elements, list has {}",
                generated.len(),
                elements.len()
            )));
        }
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, g)| (g, k))
            .collect();
        let gens = [0, 1, 2].map(|i| {
            Permutation::from_raw(
                elements
                    .iter()
                    .map(|g| index[&g.then(&r[i])] as u32)
                    .collect(),
            )
        });
        let map = FlagSystem::new(kind, gens)?;
        Ok(RegularMap {
            map,
            elements,
            index,
            r,
        })
    }

    pub fn from_generators(r: [Permutation; 3], kind: Kind, cap: usize) -> Result<Self> {
        let degree = r[0].degree();
        for (i, ri) in r.iter().enumerate() {
            if ri.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: ri.degree(),
                });
            }
            if !ri.is_involution() {
                return Err(Error::NotInvolution(i));
            }
        }
        let elements = generate_closure(&r, degree, cap)?;
        Self::from_group(elements, r, kind)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation; 3] {
        &self.r
    }

    pub fn flag_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// The automorphism `x -> g x` of the map.
    pub fn left_multiplication(&self, g: &Permutation) -> Result<Permutation> {
        if !self.index.contains_key(g) {
            return Err(Error::NotInGroup);
        }
        Ok(Permutation::from_raw(
            self.elements
                .iter()
                .map(|x| self.index[&g.then(x)] as u32)
                .collect(),
        ))
    }

    /// Product `r_i r_j r_k ...` of generators, as a group element.
    pub fn word(&self, letters: &[usize]) -> Permutation {
        letters
            .iter()
            .fold(Permutation::identity(self.r[0].degree()), |acc, &i| {
                acc.then(&self.r[i])
            })
    }

    /// Central involutions of the group.
    pub fn central_involutions(&self) -> Vec<Permutation> {
        self.elements
            .iter()
            .filter(|g| !g.is_identity() && g.is_involution())
            .filter(|g| self.r.iter().all(|ri| ri.commutes_with(g)))
            .cloned()
            .collect()
    }
}

/// Right regular representation of a group given by a multiplication table
/// (`table[a][b]` is the product `ab`): element `g` becomes `x -> x g`.
pub fn cayley_permutations(table: &[Vec<usize>]) -> Result<Vec<Permutation>> {
    let n = table.len();
    (0..n)
        .map(|g| Permutation::from_images((0..n).map(|x| table[x][g]).collect()))
        .collect()
}

/// The group `(C_n x C_2) : C_2` of `{n,n}_2` for even `n`, as its right
/// regular representation on triples `(i mod n, j mod 2, k mod 2)` standing
/// for `x^i y^j r2^k` with `x = r1 r2`, `y = r2 r0`, and `r2` inverting `x`.
pub fn example4_group(n: usize) -> Result<(Vec<Permutation>, [Permutation; 3])> {
    require(
        "{n,n}_2",
        "even n >= 2",
        n >= 2 && n.is_multiple_of(2),
        n as i64,
    )?;
    let size = 4 * n;
    let enc = |i: usize, j: usize, k: usize| (i % n * 2 + j % 2) * 2 + k % 2;
    let dec = |e: usize| (e / 4, (e / 2) % 2, e % 2);
    let mul = |a: usize, b: usize| {
        let (i, j, k) = dec(a);
        let (i2, j2, k2) = dec(b);
        let i_new = if k == 0 { i + i2 } else { i + n - i2 };
        enc(i_new, j + j2, k + k2)
    };
    let table: Vec<Vec<usize>> = (0..size)
        .map(|a| (0..size).map(|b| mul(a, b)).collect())
        .collect();
    let perms = cayley_permutations(&table)?;
    let r0 = perms[enc(0, 1, 1)].clone();
    let r1 = perms[enc(1, 0, 1)].clone();
    let r2 = perms[enc(0, 0, 1)].clone();
    let r = [r0, r1, r2];
    let a = r[0].then(&r[1]).then(&r[2]);
    assert!(
        r.iter().all(Permutation::is_involution),
        "r_i must be involutions"
    );
    assert!(a.then(&a).is_identity(), "(r0 r1 r2)^2 = 1");
    assert_eq!(r[0].then(&r[1]).order(), n as u64);
    assert_eq!(r[1].then(&r[2]).order(), n as u64);
    assert_eq!(r[2].then(&r[0]).order(), 2);
    Ok((perms, r))
}

/// The regular map `{n,n}_2` built from its group.
pub fn nn2(n: usize) -> Result<RegularMap> {
    let (elements, r) = example4_group(n)?;
    RegularMap::from_group(elements, r, Kind::Map)
}

/// Icosahedral group `A5 x C2` on 7 points: `A5` on the first five, the
/// central factor swapping the last two.
fn icosahedral_group() -> Vec<Permutation> {
    let c3 = Permutation::parse_cycles("(1,2,3)", 7).unwrap();
    let c5 = Permutation::parse_cycles("(1,2,3,4,5)", 7).unwrap();
    let t = Permutation::parse_cycles("(6,7)", 7).unwrap();
    let a5 = generate_closure(&[c3, c5], 7, 100).unwrap();
    let mut all: Vec<Permutation> = a5
        .iter()
        .cloned()
        .chain(a5.iter().map(|g| g.then(&t)))
        .collect();
    all.sort();
    all
}

/// The icosahedron as a regular map: the first involution triple in the
/// icosahedral group (in element order) with `r0 r2` of order 2, `r0 r1` of
/// order 3 and `r1 r2` of order 5 that generates the whole group.
pub fn icosahedron() -> Result<RegularMap> {
    let group = icosahedral_group();
    let invs: Vec<&Permutation> = group.iter().filter(|g| g.order() == 2).collect();
    for r0 in &invs {
        for r1 in &invs {
            if r0.then(r1).order() != 3 {
                continue;
            }
            for r2 in &invs {
                if r0.then(r2).order() != 2 || r1.then(r2).order() != 5 {
                    continue;
                }
                let r = [(*r0).clone(), (*r1).clone(), (*r2).clone()];
                if generate_closure(&r, 7, 121).map(|g| g.len()).ok() == Some(120) {
                    return RegularMap::from_group(group, r, Kind::Map);
                }
            }
        }
    }
    unreachable!("the icosahedral group has a {{3,5}} generating triple")
}

/// The regular embedding of `K6` in the projective plane: the icosahedron
/// modulo its antipodal (unique central) involution.
pub fn k6_projective() -> Result<FlagSystem> {
    let ico = icosahedron()?;
    let central = ico.central_involutions();
    assert_eq!(
        central.len(),
        1,
        "icosahedral group has a unique central involution"
    );
    let antipodal = ico.left_multiplication(&central[0])?;
    quotient_by_involution(&ico.map, &antipodal)
}

/// Generators `r0, r1, r2` of `S_n` used for the symmetric-group family:
/// `r0 = (1,2)` (or `(2,3)` for the hypermap variant),
/// `r1 = (2,n)(3,n-1)...` and `r2 = (1,2)(3,n)(4,n-1)...`, so that
/// `r1 r2 = (1,2,...,n)`.
pub fn symmetric_triple(n: usize, hypermap: bool) -> Result<[Permutation; 3]> {
    require("symmetric family", "n >= 3", n >= 3, n as i64)?;
    let mut r0: Vec<usize> = (0..n).collect();
    if hypermap {
        r0.swap(1, 2);
    } else {
        r0.swap(0, 1);
    }
    let mut r1: Vec<usize> = (0..n).collect();
    for (i, x) in r1.iter_mut().enumerate().skip(1) {
        *x = n - i;
    }
    let mut r2: Vec<usize> = (0..n).collect();
    r2.swap(0, 1);
    for (i, x) in r2.iter_mut().enumerate().skip(2) {
        *x = n + 1 - i;
    }
    Ok([
        Permutation::from_images(r0)?,
        Permutation::from_images(r1)?,
        Permutation::from_images(r2)?,
    ])
}

/// Flag-level regular map of the symmetric-group family; `n!` flags, so
/// limited to `n <= 9`.
pub fn sym_map(n: usize, hypermap: bool) -> Result<RegularMap> {
    require(
        "flag-level symmetric map",
        "3 <= n <= 9",
        (3..=9).contains(&n),
        n as i64,
    )?;
    let r = symmetric_triple(n, hypermap)?;
    let kind = if hypermap { Kind::Hypermap } else { Kind::Map };
    RegularMap::from_generators(r, kind, DEFAULT_CLOSURE_CAP)
}

/// Conjugacy class of `g` inside an explicit group.
pub(crate) fn conjugacy_class(group: &[Permutation], g: &Permutation) -> HashSet<Permutation> {
    group.iter().map(|h| g.conjugate_by(h)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::surface_invariants;

    #[test]
    fn small_parameters_rejected() {
        assert!(hosohedron(0).is_err());
        assert!(semi_star(0).is_err());
        assert!(torus_44(Lattice::Rect(0)).is_err());
        assert!(nn2(3).is_err());
        assert!(matches!(
            glide_automorphism(Lattice::Rect(1), Glide::Diag),
            Err(Error::LatticeMismatch { .. })
        ));
    }

    #[test]
    fn degenerate_members_are_valid() {
        let h1 = hosohedron(1).unwrap();
        assert_eq!(h1.flags(), 4);
        assert_eq!(surface_invariants(&h1).chi, 2);
        let s1 = semi_star(1).unwrap();
        assert_eq!(s1.flags(), 2);
        assert_eq!(surface_invariants(&s1).chi, 2);
    }

    #[test]
    fn glides_are_fixed_point_free_involutions() {
        for lattice in [Lattice::Diag(1), Lattice::Diag(2)] {
            let a = glide_automorphism(lattice, Glide::Diag).unwrap();
            assert!(a.is_involution() && a.fixed_points().next().is_none());
            assert!(torus_44(lattice).unwrap().is_automorphism(&a));
        }
        let a = glide_automorphism(Lattice::Rect(2), Glide::Rect).unwrap();
        assert!(a.is_involution() && a.fixed_points().next().is_none());
        assert!(torus_44(Lattice::Rect(2)).unwrap().is_automorphism(&a));
    }

    #[test]
    fn symmetric_triple_matches_cycle_notation() {
        let [r0, r1, r2] = symmetric_triple(7, false).unwrap();
        assert_eq!(r0.to_string(), "(1,2)");
        assert_eq!(r1.to_string(), "(2,7)(3,6)(4,5)");
        assert_eq!(r2.to_string(), "(1,2)(3,7)(4,6)");
        assert_eq!(r1.then(&r2).to_string(), "(1,2,3,4,5,6,7)");
        let [h0, ..] = symmetric_triple(11, true).unwrap();
        assert_eq!(h0.to_string(), "(2,3)");
    }

    #[test]
    fn cayley_of_cyclic_group() {
        let table: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| (a + b) % 3).collect())
            .collect();
        let perms = cayley_permutations(&table).unwrap();
        assert!(perms[0].is_identity());
        assert_eq!(perms[1].then(&perms[1]), perms[2]);
    }

    #[test]
    fn from_group_rejects_wrong_element_list() {
        let r0 = Permutation::parse_cycles("(1,2)", 3).unwrap();
        let r1 = Permutation::parse_cycles("(2,3)", 3).unwrap();
        let r2 = r0.clone();
        let some = vec![Permutation::identity(3), r0.clone()];
        assert!(matches!(
            RegularMap::from_group(some, [r0, r1, r2], Kind::Map),
            Err(Error::NotGenerating(_))
        ));
        let c = Permutation::parse_cycles("(1,2,3)", 3).unwrap();
        assert!(matches!(
            RegularMap::from_generators([c.clone(), c.clone(), c], Kind::Map, 10),
            Err(Error::NotInvolution(0))
        ));
    }
}
