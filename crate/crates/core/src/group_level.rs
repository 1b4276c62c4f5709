//! Regular maps and their involution quotients analysed inside the
//! automorphism group, for groups far too large to expand into flags.
//!
//! The regular map `K` has the group `G = <r0, r1, r2>` as its flags and as
//! its automorphism group (acting by left multiplication). A cell of `K` is a
//! left coset of a dihedral subgroup, and `a` fixes the coset `gH` iff
//! `g^-1 a g` lies in `H`. Counting such `g` gives
//! `|C_G(a)| * |a^G ∩ H| / |H|` fixed cells, from which the cells of
//! `K/<a>` follow exactly.

use std::collections::HashSet;
use std::fmt::Write;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{conjugacy_class, symmetric_triple};
use crate::flags::Kind;
use crate::perm::{
    factorial, gcd, generate_closure, orbit_labels, sym_centralizer_order, CycleType, Permutation,
};

fn big_str<S: Serializer, T: ToString>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn perm_str<S: Serializer>(p: &Permutation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

#[derive(Clone, Debug)]
pub enum Carrier {
    /// `G = S_n`; conjugacy and centralizers come from cycle types.
    FullSymmetric(usize),
    /// `G` listed element by element.
    ExplicitClosure(Vec<Permutation>),
}

#[derive(Clone, Debug)]
pub struct GroupModel {
    carrier: Carrier,
    r: [Permutation; 3],
    kind: Kind,
}

fn check_generators(r: &[Permutation; 3], kind: Kind) -> Result<usize> {
    let n = r[0].degree();
    for (i, ri) in r.iter().enumerate() {
        if ri.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: ri.degree(),
            });
        }
        if !ri.is_involution() {
            return Err(Error::NotInvolution(i));
        }
    }
    if kind == Kind::Map && !r[0].then(&r[2]).is_involution() {
        return Err(Error::NotGenerating("(r0 r2)^2 != 1 for a map".into()));
    }
    Ok(n)
}

/// `<r>` contains an `n`-cycle `c` and a transposition `(x, x c^k)` with
/// `gcd(k, n) = 1`, and so is all of `S_n`.
fn transposition_and_cycle(r: &[Permutation; 3], n: usize) -> bool {
    let products = [r[0].then(&r[1]), r[1].then(&r[2]), r[2].then(&r[0])];
    let cycles = products
        .iter()
        .filter(|c| c.order() == n as u64 && c.cycles().len() == 1);
    for c in cycles {
        for t in r
            .iter()
            .filter(|t| t.cycle_type() == CycleType::new(&[(2, 1), (1, n - 2)]))
        {
            let x = t.cycles().into_iter().find(|cy| cy.len() == 2).unwrap();
            let (a, b) = (x[0], x[1]);
            let mut p = a;
            for k in 1..n {
                p = c.apply(p);
                if p == b {
                    if gcd(k as u64, n as u64) == 1 {
                        return true;
                    }
                    break;
                }
            }
        }
    }
    false
}

impl GroupModel {
    /// A model whose generators must generate the full symmetric group on
    /// their points. Generation is verified by the transposition-plus-cycle
    /// criterion, falling back to explicit closure for `n <= 8`.
    pub fn full_symmetric(r: [Permutation; 3], kind: Kind) -> Result<Self> {
        let n = check_generators(&r, kind)?;
        let refs: Vec<&Permutation> = r.iter().collect();
        if orbit_labels(&refs, n).1 != 1 {
            return Err(Error::NotGenerating("not transitive".into()));
        }
        let ok = transposition_and_cycle(&r, n)
            || (n <= 8
                && generate_closure(&r, n, 50_000)
                    .map(|g| BigUint::from(g.len()))
                    .ok()
                    == Some(factorial(n)));
        if !ok {
            return Err(Error::NotGenerating(format!("could not certify S_{n}")));
        }
        Ok(GroupModel {
            carrier: Carrier::FullSymmetric(n),
            r,
            kind,
        })
    }

    pub fn explicit(r: [Permutation; 3], kind: Kind, cap: usize) -> Result<Self> {
        let n = check_generators(&r, kind)?;
        let elements = generate_closure(&r, n, cap)?;
        Ok(GroupModel {
            carrier: Carrier::ExplicitClosure(elements),
            r,
            kind,
        })
    }

    /// The symmetric-group family model (`r0 = (1,2)`, or `(2,3)` for the
    /// hypermap variant).
    pub fn symmetric_family(n: usize, hypermap: bool) -> Result<Self> {
        let r = symmetric_triple(n, hypermap)?;
        let rho = r[1].then(&r[2]);
        let expected: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        assert_eq!(rho.to_vec(), expected, "r1 r2 = (1,2,...,n)");
        let kind = if hypermap { Kind::Hypermap } else { Kind::Map };
        Self::full_symmetric(r, kind)
    }

    pub fn generators(&self) -> &[Permutation; 3] {
        &self.r
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn degree(&self) -> usize {
        self.r[0].degree()
    }

    pub fn order(&self) -> BigUint {
        match &self.carrier {
            Carrier::FullSymmetric(n) => factorial(*n),
            Carrier::ExplicitClosure(e) => BigUint::from(e.len()),
        }
    }

    pub fn contains(&self, a: &Permutation) -> bool {
        match &self.carrier {
            Carrier::FullSymmetric(n) => a.degree() == *n,
            Carrier::ExplicitClosure(e) => e.binary_search(a).is_ok(),
        }
    }

    pub fn centralizer_order(&self, a: &Permutation) -> BigUint {
        match &self.carrier {
            Carrier::FullSymmetric(_) => sym_centralizer_order(&a.cycle_type()),
            Carrier::ExplicitClosure(e) => {
                BigUint::from(e.iter().filter(|g| g.commutes_with(a)).count())
            }
        }
    }

    fn class_tester(&self, a: &Permutation) -> Box<dyn Fn(&Permutation) -> bool + '_> {
        match &self.carrier {
            Carrier::FullSymmetric(_) => {
                let ct = a.cycle_type();
                Box::new(move |h: &Permutation| h.cycle_type() == ct)
            }
            Carrier::ExplicitClosure(e) => {
                let class: HashSet<Permutation> = conjugacy_class(e, a);
                Box::new(move |h: &Permutation| class.contains(h))
            }
        }
    }

    pub fn is_conjugate(&self, a: &Permutation, b: &Permutation) -> bool {
        self.class_tester(a)(b)
    }

    pub fn is_central(&self, a: &Permutation) -> bool {
        self.r.iter().all(|ri| ri.commutes_with(a))
    }

    /// Whether left multiplication by `a` reverses the orientation of the
    /// regular map; fails when that map is not orientable and closed.
    pub fn reverses_orientation(&self, a: &Permutation) -> Result<bool> {
        match &self.carrier {
            Carrier::FullSymmetric(_) => {
                // all r_i odd: the even-word subgroup is A_n
                if self.r.iter().all(Permutation::is_odd) {
                    Ok(a.is_odd())
                } else {
                    Err(Error::ModelNotOrientable)
                }
            }
            Carrier::ExplicitClosure(e) => {
                let even = generate_closure(
                    &[self.r[0].then(&self.r[1]), self.r[1].then(&self.r[2])],
                    self.degree(),
                    e.len(),
                )?;
                if even.len() == e.len() {
                    return Err(Error::ModelNotOrientable);
                }
                Ok(even.binary_search(a).is_err())
            }
        }
    }

    fn subgroup(&self, gens: &[usize]) -> Vec<Permutation> {
        let g: Vec<Permutation> = gens.iter().map(|&i| self.r[i].clone()).collect();
        generate_closure(&g, self.degree(), 1 << 20).expect("dihedral subgroups are small")
    }

    fn dihedral_order(&self, i: usize, j: usize) -> Result<BigUint> {
        let h = self.subgroup(&[i, j]);
        let expected = 2 * self.r[i].then(&self.r[j]).order() as usize;
        let degenerate =
            self.r[i].is_identity() || self.r[j].is_identity() || self.r[i] == self.r[j];
        if degenerate || h.len() != expected {
            return Err(Error::DegenerateSubgroup(i, j));
        }
        let order = BigUint::from(h.len());
        if !(self.order() % &order).is_zero() {
            return Err(Error::DegenerateSubgroup(i, j));
        }
        Ok(order)
    }
}

/// Cell counts of the regular map of a [`GroupModel`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RegularCells {
    #[serde(serialize_with = "big_str")]
    pub flags: BigUint,
    #[serde(serialize_with = "big_str")]
    pub vertices: BigUint,
    #[serde(serialize_with = "big_str")]
    pub edges: BigUint,
    #[serde(serialize_with = "big_str")]
    pub faces: BigUint,
    #[serde(serialize_with = "big_str")]
    pub chi: BigInt,
    /// Orders of `r1 r2`, `r2 r0`, `r0 r1` (vertex, edge, face).
    pub product_orders: [u64; 3],
}

impl RegularCells {
    /// Map type `{p, q}`: face size then vertex degree.
    pub fn map_type(&self) -> (u64, u64) {
        (self.product_orders[2], self.product_orders[0])
    }
}

fn big_int(u: &BigUint) -> BigInt {
    BigInt::from(u.clone())
}

pub fn regular_cells(gm: &GroupModel) -> Result<RegularCells> {
    let order = gm.order();
    let hv = gm.dihedral_order(1, 2)?;
    let he = gm.dihedral_order(2, 0)?;
    let hf = gm.dihedral_order(0, 1)?;
    let vertices = &order / &hv;
    let edges = &order / &he;
    let faces = &order / &hf;
    let two = BigUint::from(2u32);
    let sides = BigUint::from(3u32) * (&order / &two);
    let chi =
        big_int(&vertices) + big_int(&edges) + big_int(&faces) - big_int(&sides) + big_int(&order);
    if gm.kind == Kind::Map {
        // no semi-edges or boundary, so V - E + F is the triangulation count
        let plain = big_int(&vertices) - big_int(&edges) + big_int(&faces);
        if plain != chi {
            return Err(Error::DegenerateSubgroup(0, 2));
        }
    }
    let r = &gm.r;
    Ok(RegularCells {
        flags: order,
        vertices,
        edges,
        faces,
        chi,
        product_orders: [
            r[1].then(&r[2]).order(),
            r[2].then(&r[0]).order(),
            r[0].then(&r[1]).order(),
        ],
    })
}

/// The quotient `K/<a>` of the regular map `K` by a group involution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QuotientAnalysis {
    #[serde(serialize_with = "perm_str")]
    pub a_involution: Permutation,
    #[serde(serialize_with = "big_str")]
    pub cycle_type: CycleType,
    pub boundary: bool,
    /// `None` when the regular map itself is not orientable.
    pub orientation_reversing: Option<bool>,
    #[serde(serialize_with = "big_str")]
    pub aut_order: BigUint,
    /// Defined when `a` reverses orientation, so that `K` is the canonical
    /// double cover of the quotient.
    pub stable: Option<bool>,
    #[serde(serialize_with = "big_str")]
    pub flags: BigUint,
    #[serde(serialize_with = "big_str")]
    pub vertices: BigUint,
    #[serde(serialize_with = "big_str")]
    pub edges: BigUint,
    #[serde(serialize_with = "big_str")]
    pub faces: BigUint,
    #[serde(serialize_with = "big_str")]
    pub chi: BigInt,
    /// Product orders inherited from `K` (vertex, edge, face).
    pub product_orders: [u64; 3],
    pub genus_note: String,
}

impl QuotientAnalysis {
    pub const CSV_HEADER: &'static str =
        "a,cycle_type,boundary,orientation_reversing,aut_order,stable,flags,vertices,edges,faces,chi,genus_note";

    pub fn csv_row(&self) -> String {
        fn opt(v: Option<bool>) -> String {
            v.map(|b| b.to_string()).unwrap_or_default()
        }
        format!(
            "\"{}\",{},{},{},{},{},{},{},{},{},{},\"{}\"",
            self.a_involution,
            self.cycle_type,
            self.boundary,
            opt(self.orientation_reversing),
            self.aut_order,
            opt(self.stable),
            self.flags,
            self.vertices,
            self.edges,
            self.faces,
            self.chi,
            self.genus_note
        )
    }
}

pub fn quotient_analysis(gm: &GroupModel, a: &Permutation) -> Result<QuotientAnalysis> {
    if a.degree() != gm.degree() || !gm.contains(a) {
        return Err(Error::NotInGroup);
    }
    if a.is_identity() || !a.is_involution() {
        return Err(Error::NotInvolution(0));
    }
    let cells = regular_cells(gm)?;
    let order = gm.order();
    let centralizer = gm.centralizer_order(a);
    let in_class = gm.class_tester(a);
    let two = BigUint::from(2u32);

    // cells of K/<a> for cosets of the subgroup generated by `gens`
    let halve = |gens: &[usize]| -> (BigUint, BigUint) {
        let h = gm.subgroup(gens);
        let hits = h.iter().filter(|x| in_class(x)).count();
        let fixed = &centralizer * BigUint::from(hits) / BigUint::from(h.len());
        let total = &order / BigUint::from(h.len());
        ((total + &fixed) / &two, fixed)
    };
    let (vertices, _) = halve(&[1, 2]);
    let (edges, _) = halve(&[2, 0]);
    let (faces, _) = halve(&[0, 1]);
    let mut sides = BigUint::zero();
    let mut boundary = false;
    for i in 0..3 {
        let (s, fixed) = halve(&[i]);
        boundary |= !fixed.is_zero();
        sides += s;
    }
    debug_assert_eq!(
        boundary,
        gm.r.iter().any(|ri| gm.is_conjugate(a, ri)),
        "boundary iff a is conjugate to a generator"
    );
    let flags = &order / &two;
    let chi =
        big_int(&vertices) + big_int(&edges) + big_int(&faces) - big_int(&sides) + big_int(&flags);
    let reversing = match gm.reverses_orientation(a) {
        Ok(r) => Some(r),
        Err(Error::ModelNotOrientable) => None,
        Err(e) => return Err(e),
    };
    let genus_note = if boundary {
        format!("bordered, chi {chi}")
    } else if reversing == Some(false) {
        format!("orientable, genus {}", (BigInt::from(2) - &chi) / 2)
    } else {
        format!("non-orientable, crosscap number {}", BigInt::from(2) - &chi)
    };
    Ok(QuotientAnalysis {
        a_involution: a.clone(),
        cycle_type: a.cycle_type(),
        boundary,
        orientation_reversing: reversing,
        aut_order: &centralizer / &two,
        stable: (reversing == Some(true)).then(|| gm.is_central(a)),
        flags,
        vertices,
        edges,
        faces,
        chi,
        product_orders: cells.product_orders,
        genus_note,
    })
}

/// `(1,2)(3,4)...(m-1,m)` on `n` points.
pub fn leading_involution(n: usize, m: usize) -> Result<Permutation> {
    if !m.is_multiple_of(2) || m > n {
        return Err(Error::BadParameter {
            what: "involution support",
            requirement: "even m <= n",
            value: m as i64,
        });
    }
    let mut images: Vec<usize> = (0..n).collect();
    for k in (0..m).step_by(2) {
        images.swap(k, k + 1);
    }
    Permutation::from_images(images)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FamilyReport {
    pub n: usize,
    pub hypermap: bool,
    pub cells: RegularCells,
    /// Orientable genus of `K` from its Euler characteristic.
    #[serde(serialize_with = "big_str")]
    pub genus_from_chi: BigInt,
    /// `1 + (n-1)!(n-3)/6`, the closed formula usually quoted for this
    /// family; it disagrees with `genus_from_chi` by a factor 2 in the
    /// second term and is reported for comparison only.
    #[serde(serialize_with = "opt_big_str")]
    pub genus_quoted_formula: Option<BigInt>,
    pub analyses: Vec<QuotientAnalysis>,
    /// All `a` have distinct cycle types, so the quotients are pairwise
    /// non-isomorphic.
    pub pairwise_non_isomorphic: bool,
}

fn opt_big_str<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(b) => s.serialize_str(&b.to_string()),
        None => s.serialize_none(),
    }
}

impl FamilyReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n,m,{}", QuotientAnalysis::CSV_HEADER).unwrap();
        for qa in &self.analyses {
            let m = 2 * qa.cycle_type.multiplicity(2);
            writeln!(out, "{},{},{}", self.n, m, qa.csv_row()).unwrap();
        }
        out
    }
}

/// The `(n-7)/4` quotients `K/<a>` with `a = (1,2)...(m-1,m)`,
/// `m = 6, 10, ..., n-5`, of the symmetric-group family.
pub fn family_report(n: usize, hypermap: bool) -> Result<FamilyReport> {
    if n < 11 || n % 4 != 3 {
        return Err(Error::BadParameter {
            what: "symmetric family",
            requirement: "n >= 11 and n = 3 mod 4",
            value: n as i64,
        });
    }
    let gm = GroupModel::symmetric_family(n, hypermap)?;
    let cells = regular_cells(&gm)?;
    let genus_from_chi = (BigInt::from(2) - &cells.chi) / 2;
    let genus_quoted_formula = (!hypermap).then(|| {
        BigInt::one() + BigInt::from(factorial(n - 1)) * BigInt::from(n - 3) / BigInt::from(6)
    });
    let mut analyses = Vec::new();
    for m in (6..=n - 5).step_by(4) {
        let a = leading_involution(n, m)?;
        analyses.push(quotient_analysis(&gm, &a)?);
    }
    let types: HashSet<&CycleType> = analyses.iter().map(|q| &q.cycle_type).collect();
    let pairwise_non_isomorphic = types.len() == analyses.len();
    Ok(FamilyReport {
        n,
        hypermap,
        cells,
        genus_from_chi,
        genus_quoted_formula,
        analyses,
        pairwise_non_isomorphic,
    })
}
