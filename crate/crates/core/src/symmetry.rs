//! Automorphism groups, symmetry classes and the stability verdict.

use std::collections::HashSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::cover::{lift_automorphism, orientable_double_cover};
use crate::error::Result;
use crate::flags::FlagSystem;
use crate::perm::Permutation;

/// All automorphisms, sorted; the identity comes first.
#[derive(Clone, Debug)]
pub struct AutGroup {
    elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Breadth-first spanning tree from flag 0: `(flag, parent, generator)`.
fn spanning_tree(fs: &FlagSystem) -> Vec<(usize, usize, usize)> {
    let n = fs.flags();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut order = vec![0usize];
    let mut tree = Vec::with_capacity(n);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for i in 0..3 {
            let y = fs.act(x, i);
            if !seen[y] {
                seen[y] = true;
                order.push(y);
                tree.push((y, x, i));
            }
        }
    }
    tree
}

/// The automorphism sending flag 0 to `target`, if there is one.
fn extend(fs: &FlagSystem, tree: &[(usize, usize, usize)], target: usize) -> Option<Permutation> {
    let n = fs.flags();
    let mut h = vec![0u32; n];
    h[0] = target as u32;
    for &(y, x, i) in tree {
        h[y] = fs.act(h[x] as usize, i) as u32;
    }
    for x in 0..n {
        for i in 0..3 {
            if h[fs.act(x, i)] as usize != fs.act(h[x] as usize, i) {
                return None;
            }
        }
    }
    Some(Permutation::from_raw(h))
}

pub fn automorphism_group(fs: &FlagSystem) -> AutGroup {
    let tree = spanning_tree(fs);
    let signature = |x: usize| [0, 1, 2].map(|i| fs.act(x, i) == x);
    let base = signature(0);
    let candidates: Vec<usize> = (0..fs.flags()).filter(|&t| signature(t) == base).collect();

    #[cfg(feature = "parallel")]
    let mut elements: Vec<Permutation> = {
        use rayon::prelude::*;
        candidates
            .par_iter()
            .filter_map(|&t| extend(fs, &tree, t))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let mut elements: Vec<Permutation> = candidates
        .iter()
        .filter_map(|&t| extend(fs, &tree, t))
        .collect();

    elements.sort();
    AutGroup { elements }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SymmetryClass {
    pub regular: bool,
    pub edge_transitive: bool,
    pub edge_regular: bool,
}

pub fn symmetry_class(fs: &FlagSystem, aut: &AutGroup) -> SymmetryClass {
    let (edge_of, edges) = fs.orbit_labels(&[0, 2]);
    let reached: HashSet<usize> = aut.elements.iter().map(|h| edge_of[h.apply(0)]).collect();
    let edge_transitive = reached.len() == edges;
    SymmetryClass {
        regular: aut.order() == fs.flags(),
        edge_transitive,
        edge_regular: edge_transitive && aut.order() == edges,
    }
}

/// `|Aut cover| / (2 |Aut base|)`, kept exact.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct InstabilityIndex(pub Ratio<u64>);

impl InstabilityIndex {
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_integer(&self) -> Option<u64> {
        self.0.is_integer().then(|| self.0.to_integer())
    }
}

impl fmt::Display for InstabilityIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for InstabilityIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for InstabilityIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.as_integer() {
            Some(k) => s.serialize_u64(k),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StabilityReport {
    pub base_aut_order: usize,
    pub cover_aut_order: usize,
    pub instability_index: InstabilityIndex,
    pub stable: bool,
    /// Every lift of every base automorphism is a cover automorphism.
    pub lifted_subgroup_verified: bool,
}

/// Compares `Aut M` with `Aut` of its orientable double cover. Fails for
/// maps that are already orientable and closed.
pub fn stability_report(fs: &FlagSystem) -> Result<StabilityReport> {
    let dc = orientable_double_cover(fs)?;
    let base = automorphism_group(fs);
    let cover = automorphism_group(&dc.cover);
    let mut lifted = HashSet::new();
    let mut verified = true;
    for h in base.elements() {
        let (a, b) = lift_automorphism(&dc, h)?;
        verified &= cover.contains(&a) && cover.contains(&b);
        verified &= a.commutes_with(&dc.deck) && b.commutes_with(&dc.deck);
        lifted.insert(a);
        lifted.insert(b);
    }
    verified &= lifted.len() == 2 * base.order();
    let index = Ratio::new(cover.order() as u64, 2 * base.order() as u64);
    Ok(StabilityReport {
        base_aut_order: base.order(),
        cover_aut_order: cover.order(),
        instability_index: InstabilityIndex(index),
        stable: index == Ratio::from_integer(1),
        lifted_subgroup_verified: verified,
    })
}

/// The compact stability summary written by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StabilitySummary {
    pub base_aut: usize,
    pub cover_aut: usize,
    pub index: InstabilityIndex,
    pub stable: bool,
    pub regular: bool,
    pub edge_transitive: bool,
}

impl StabilitySummary {
    pub fn new(report: &StabilityReport, class: &SymmetryClass) -> Self {
        StabilitySummary {
            base_aut: report.base_aut_order,
            cover_aut: report.cover_aut_order,
            index: report.instability_index,
            stable: report.stable,
            regular: class.regular,
            edge_transitive: class.edge_transitive,
        }
    }
}
