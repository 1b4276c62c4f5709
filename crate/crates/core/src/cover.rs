//! Orientable double covers, quotients by automorphism groups, and lifting.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flags::FlagSystem;
use crate::perm::{orbit_labels, Permutation};

/// Canonical orientable double cover. Cover flag `x` is `(x, +)` and
/// `x + F` is `(x, -)`, where `F` is the base flag count.
#[derive(Clone, Debug)]
pub struct DoubleCover {
    pub cover: FlagSystem,
    /// The covering involution `(x, d) -> (x, -d)`.
    pub deck: Permutation,
    base_flags: usize,
}

impl DoubleCover {
    pub fn base_flags(&self) -> usize {
        self.base_flags
    }

    pub fn project(&self, cover_flag: usize) -> usize {
        cover_flag % self.base_flags
    }
}

pub fn orientable_double_cover(fs: &FlagSystem) -> Result<DoubleCover> {
    let n = fs.flags();
    let gens = [0, 1, 2].map(|i| {
        let mut images = vec![0u32; 2 * n];
        for x in 0..n {
            let y = fs.act(x, i) as u32;
            images[x] = y + n as u32;
            images[x + n] = y;
        }
        Permutation::from_raw(images)
    });
    let refs: Vec<&Permutation> = gens.iter().collect();
    if orbit_labels(&refs, 2 * n).1 != 1 {
        return Err(Error::AlreadyOrientableClosed);
    }
    let deck = Permutation::from_raw(
        (0..2 * n as u32)
            .map(|x| (x + n as u32) % (2 * n as u32))
            .collect(),
    );
    Ok(DoubleCover {
        cover: FlagSystem::new(fs.kind(), gens)?,
        deck,
        base_flags: n,
    })
}

/// Quotient by a group of automorphisms, given as its full element list.
/// Flags of the quotient are the orbits, numbered by least flag.
pub fn quotient_by(fs: &FlagSystem, subgroup: &[Permutation]) -> Result<FlagSystem> {
    let n = fs.flags();
    for (k, h) in subgroup.iter().enumerate() {
        if h.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: h.degree(),
            });
        }
        if let Some((generator, flag)) = fs.automorphism_witness(h) {
            return Err(Error::NotAnAutomorphism {
                element: k,
                generator,
                flag,
            });
        }
    }
    let set: HashSet<&Permutation> = subgroup.iter().collect();
    if !set.contains(&Permutation::identity(n)) {
        return Err(Error::NotClosed);
    }
    for a in subgroup {
        for b in subgroup {
            if !set.contains(&a.then(b)) {
                return Err(Error::NotClosed);
            }
        }
    }
    let refs: Vec<&Permutation> = subgroup.iter().collect();
    let (labels, count) = orbit_labels(&refs, n);
    // automorphisms of a transitive system act semiregularly
    debug_assert_eq!(count * set.len(), n);
    let mut rep = vec![usize::MAX; count];
    for x in 0..n {
        if rep[labels[x]] == usize::MAX {
            rep[labels[x]] = x;
        }
    }
    let gens = [0, 1, 2]
        .map(|i| Permutation::from_raw(rep.iter().map(|&x| labels[fs.act(x, i)] as u32).collect()));
    FlagSystem::new(fs.kind(), gens)
}

/// Quotient by `<a>` for an involutory (or trivial) automorphism `a`.
pub fn quotient_by_involution(fs: &FlagSystem, a: &Permutation) -> Result<FlagSystem> {
    let id = Permutation::identity(fs.flags());
    if a.is_identity() {
        return quotient_by(fs, &[id]);
    }
    quotient_by(fs, &[id, a.clone()])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Preserving,
    Reversing,
}

pub fn orientation_action(fs: &FlagSystem, aut: &Permutation) -> Result<Orientation> {
    if fs.has_fixed_flags() {
        return Err(Error::NotOrientableClosed);
    }
    let colour = fs.bipartition().ok_or(Error::NotOrientableClosed)?;
    if let Some((generator, flag)) = fs.automorphism_witness(aut) {
        return Err(Error::NotAnAutomorphism {
            element: 0,
            generator,
            flag,
        });
    }
    Ok(if colour[aut.apply(0)] == colour[0] {
        Orientation::Preserving
    } else {
        Orientation::Reversing
    })
}

/// The two lifts `(x, d) -> (h(x), d)` and `(x, d) -> (h(x), -d)` of a base
/// automorphism `h`.
pub fn lift_automorphism(
    dc: &DoubleCover,
    aut: &Permutation,
) -> Result<(Permutation, Permutation)> {
    let n = dc.base_flags;
    if aut.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: aut.degree(),
        });
    }
    let base = quotient_base(dc);
    if let Some((generator, flag)) = base.automorphism_witness(aut) {
        return Err(Error::NotAnAutomorphism {
            element: 0,
            generator,
            flag,
        });
    }
    let mut same = vec![0u32; 2 * n];
    for x in 0..n {
        let y = aut.apply(x) as u32;
        same[x] = y;
        same[x + n] = y + n as u32;
    }
    let same = Permutation::from_raw(same);
    let swapped = same.then(&dc.deck);
    Ok((same, swapped))
}

/// The base system read back from the cover's positive sheet.
fn quotient_base(dc: &DoubleCover) -> FlagSystem {
    let n = dc.base_flags;
    let gens = [0, 1, 2]
        .map(|i| Permutation::from_raw((0..n).map(|x| (dc.cover.act(x, i) % n) as u32).collect()));
    FlagSystem::new_unchecked(dc.cover.kind(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::Kind;

    fn single_flag() -> FlagSystem {
        let id = Permutation::identity(1);
        FlagSystem::new(Kind::Map, [id.clone(), id.clone(), id]).unwrap()
    }

    #[test]
    fn single_flag_cover_is_two_flag_sphere() {
        let dc = orientable_double_cover(&single_flag()).unwrap();
        assert_eq!(dc.cover.flags(), 2);
        assert!(dc.cover.is_orientable_closed());
        assert_eq!(dc.deck.to_string(), "(1,2)");
        assert_eq!(
            orientation_action(&dc.cover, &dc.deck).unwrap(),
            Orientation::Reversing
        );
        assert_eq!(
            orientation_action(&dc.cover, &Permutation::identity(2)).unwrap(),
            Orientation::Preserving
        );
    }

    #[test]
    fn orientable_closed_cover_is_refused() {
        let s = Permutation::from_images(vec![1, 0]).unwrap();
        let sphere = FlagSystem::new(Kind::Map, [s.clone(), s.clone(), s]).unwrap();
        assert!(matches!(
            orientable_double_cover(&sphere),
            Err(Error::AlreadyOrientableClosed)
        ));
        assert!(matches!(
            orientation_action(&single_flag(), &Permutation::identity(1)),
            Err(Error::NotOrientableClosed)
        ));
    }

    #[test]
    fn quotient_rejects_bad_subgroups() {
        let dc = orientable_double_cover(&single_flag()).unwrap();
        let id = Permutation::identity(2);
        assert!(matches!(
            quotient_by(&dc.cover, std::slice::from_ref(&dc.deck)),
            Err(Error::NotClosed)
        ));
        let q = quotient_by(&dc.cover, std::slice::from_ref(&id)).unwrap();
        assert_eq!(q, dc.cover);
        let q = quotient_by(&dc.cover, &[id, dc.deck.clone()]).unwrap();
        assert_eq!(q, single_flag());
    }

    #[test]
    fn identity_lifts_to_identity_and_deck() {
        let dc = orientable_double_cover(&single_flag()).unwrap();
        let (a, b) = lift_automorphism(&dc, &Permutation::identity(1)).unwrap();
        assert!(a.is_identity());
        assert_eq!(b, dc.deck);
    }
}
