//! Duality, Petrie duality and the medial map.

use crate::error::{Error, Result};
use crate::flags::{FlagSystem, Kind};
use crate::perm::Permutation;

/// Swaps the roles of vertices and faces: generators `(r2, r1, r0)`.
pub fn dual(fs: &FlagSystem) -> FlagSystem {
    let [g0, g1, g2] = fs.generators().clone();
    FlagSystem::new_unchecked(fs.kind(), [g2, g1, g0])
}

/// Faces become Petrie polygons: generators `(r0 r2, r1, r2)`.
pub fn petrie(fs: &FlagSystem) -> Result<FlagSystem> {
    if fs.kind() != Kind::Map {
        return Err(Error::HypermapInput);
    }
    let [g0, g1, g2] = fs.generators().clone();
    let g02 = g0.then(&g2);
    FlagSystem::new(Kind::Map, [g02, g1, g2])
}

/// Medial map of a closed map. Flag `(x, side)` is `2x + side` with side 0
/// on the vertex half and 1 on the face half of the corner at `x`:
/// `r0* = (x r1, c)`, `r1*` is `(x r2, 0)` on vertex halves and `(x r0, 1)`
/// on face halves, and `r2*` swaps halves.
pub fn medial(fs: &FlagSystem) -> Result<FlagSystem> {
    if fs.kind() != Kind::Map {
        return Err(Error::HypermapInput);
    }
    if fs.has_fixed_flags() {
        return Err(Error::BorderedInput);
    }
    let n = fs.flags();
    let mut g0 = vec![0u32; 2 * n];
    let mut g1 = vec![0u32; 2 * n];
    let mut g2 = vec![0u32; 2 * n];
    for x in 0..n {
        for c in 0..2 {
            let me = 2 * x + c;
            g0[me] = (2 * fs.act(x, 1) + c) as u32;
            g1[me] = (2 * fs.act(x, if c == 0 { 2 } else { 0 }) + c) as u32;
            g2[me] = (2 * x + 1 - c) as u32;
        }
    }
    FlagSystem::new(
        Kind::Map,
        [
            Permutation::from_raw(g0),
            Permutation::from_raw(g1),
            Permutation::from_raw(g2),
        ],
    )
}
