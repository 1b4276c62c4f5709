//! Cell counts, Euler characteristic, orientability, boundary and type.
//!
//! The Euler characteristic is counted on the barycentric triangulation: one
//! triangle per flag, one triangle side per orbit of a single generator, and
//! one triangulation vertex per cell. This handles free edges and boundary
//! flags without special cases.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flags::FlagSystem;
use crate::perm::lcm;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "surface", rename_all = "camelCase")]
pub enum Genus {
    Orientable {
        genus: i64,
    },
    NonOrientable {
        crosscaps: i64,
    },
    #[serde(rename_all = "camelCase")]
    Bordered {
        orientable: bool,
        boundary_components: usize,
        genus: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TypeSignature {
    /// lcm of the face sizes.
    pub face_lcm: u64,
    /// lcm of the vertex degrees.
    pub vertex_lcm: u64,
    pub edge_lcm: u64,
    pub face_sizes: BTreeMap<usize, usize>,
    pub vertex_degrees: BTreeMap<usize, usize>,
    pub edge_sizes: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SurfaceInvariants {
    pub flags: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub fixed_flags: [usize; 3],
    pub has_boundary: bool,
    pub boundary_components: Option<usize>,
    pub chi: i64,
    /// Orientability of the underlying surface, boundary allowed.
    pub orientable: bool,
    pub orientable_no_boundary: bool,
    pub genus: Genus,
    pub type_signature: TypeSignature,
}

fn sub_orbit_counts(
    fs: &FlagSystem,
    cell: &(Vec<usize>, usize),
    inner: &(Vec<usize>, usize),
) -> BTreeMap<usize, usize> {
    // number of distinct inner orbits inside each cell orbit
    let mut seen = vec![false; inner.1];
    let mut per_cell = vec![0usize; cell.1];
    for x in 0..fs.flags() {
        let io = inner.0[x];
        if !seen[io] {
            seen[io] = true;
            per_cell[cell.0[x]] += 1;
        }
    }
    let mut out = BTreeMap::new();
    for size in per_cell {
        *out.entry(size).or_insert(0) += 1;
    }
    out
}

fn multiset_lcm(m: &BTreeMap<usize, usize>) -> u64 {
    m.keys().fold(1, |acc, &k| lcm(acc, k as u64))
}

pub fn type_signature(fs: &FlagSystem) -> TypeSignature {
    let faces = fs.orbit_labels(&[0, 1]);
    let vertices = fs.orbit_labels(&[1, 2]);
    let edges = fs.orbit_labels(&[0, 2]);
    let corners = fs.orbit_labels(&[1]);
    let face_sizes = sub_orbit_counts(fs, &faces, &corners);
    let vertex_degrees = sub_orbit_counts(fs, &vertices, &corners);
    let mut edge_orbit = vec![0usize; edges.1];
    for &l in &edges.0 {
        edge_orbit[l] += 1;
    }
    let mut edge_sizes = BTreeMap::new();
    for s in edge_orbit {
        *edge_sizes.entry(s.div_ceil(2)).or_insert(0) += 1;
    }
    TypeSignature {
        face_lcm: multiset_lcm(&face_sizes),
        vertex_lcm: multiset_lcm(&vertex_degrees),
        edge_lcm: multiset_lcm(&edge_sizes),
        face_sizes,
        vertex_degrees,
        edge_sizes,
    }
}

/// Euler characteristic of the barycentric triangulation.
pub fn euler_characteristic(fs: &FlagSystem) -> i64 {
    let cells =
        fs.orbit_labels(&[1, 2]).1 + fs.orbit_labels(&[0, 2]).1 + fs.orbit_labels(&[0, 1]).1;
    let sides = fs.orbit_labels(&[0]).1 + fs.orbit_labels(&[1]).1 + fs.orbit_labels(&[2]).1;
    cells as i64 - sides as i64 + fs.flags() as i64
}

/// Number of boundary circuits.
///
/// Every fixed incidence `(flag, i)` is a boundary segment of the flag's
/// triangle. Its two ends lie at triangulation vertices whose stars are
/// paths of the dihedral groups not containing the end's type; walking each
/// path to its far end gives the adjacent boundary segment.
pub fn boundary_components(fs: &FlagSystem) -> Result<usize> {
    let n = fs.flags();
    let mut index = vec![usize::MAX; 3 * n];
    let mut segments = Vec::new();
    for x in 0..n {
        for i in 0..3 {
            if fs.act(x, i) == x {
                index[3 * x + i] = segments.len();
                segments.push((x, i));
            }
        }
    }
    if segments.is_empty() {
        return Err(Error::NoBoundary);
    }
    let mut parent: Vec<usize> = (0..segments.len()).collect();
    fn find(parent: &mut [usize], mut a: usize) -> usize {
        while parent[a] != a {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        a
    }
    for (s, &(start, i)) in segments.iter().enumerate() {
        for k in (0..3).filter(|&k| k != i) {
            // walk the star alternating k, i from the fixed incidence (start, i)
            let mut x = start;
            let mut step = k;
            let other = loop {
                let y = fs.act(x, step);
                if y == x {
                    break index[3 * x + step];
                }
                x = y;
                step = if step == k { i } else { k };
            };
            let (ra, rb) = (find(&mut parent, s), find(&mut parent, other));
            if ra != rb {
                parent[ra] = rb;
            }
        }
    }
    Ok((0..segments.len())
        .filter(|&s| find(&mut parent, s) == s)
        .count())
}

pub fn surface_invariants(fs: &FlagSystem) -> SurfaceInvariants {
    let vertices = fs.orbit_labels(&[1, 2]).1;
    let edges = fs.orbit_labels(&[0, 2]).1;
    let faces = fs.orbit_labels(&[0, 1]).1;
    let fixed_flags = [0, 1, 2].map(|i| fs.generator(i).fixed_points().count());
    let has_boundary = fixed_flags.iter().any(|&c| c > 0);
    let chi = euler_characteristic(fs);
    let orientable = fs.bipartition().is_some();
    let orientable_no_boundary = orientable && !has_boundary;
    let boundary = if has_boundary {
        Some(boundary_components(fs).expect("fixed flags present"))
    } else {
        None
    };
    let genus = match boundary {
        None if orientable => Genus::Orientable {
            genus: (2 - chi) / 2,
        },
        None => Genus::NonOrientable { crosscaps: 2 - chi },
        Some(b) => {
            let b_i = b as i64;
            Genus::Bordered {
                orientable,
                boundary_components: b,
                genus: if orientable {
                    (2 - chi - b_i) / 2
                } else {
                    2 - chi - b_i
                },
            }
        }
    };
    SurfaceInvariants {
        flags: fs.flags(),
        vertices,
        edges,
        faces,
        fixed_flags,
        has_boundary,
        boundary_components: boundary,
        chi,
        orientable,
        orientable_no_boundary,
        genus,
        type_signature: type_signature(fs),
    }
}
