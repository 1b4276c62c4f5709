//! Maps and hypermaps as transitive actions of three involutions on flags.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{orbit_labels, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// `r0` and `r2` commute.
    Map,
    Hypermap,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Map => "map",
            Kind::Hypermap => "hypermap",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A validated flag system: `generators[i]` changes the `i`-dimensional
/// component of each flag, fixing flags along the boundary.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FlagSystem {
    kind: Kind,
    generators: [Permutation; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoFlags,
    DegreeMismatch { generator: usize, degree: usize },
    NonInvolution { generator: usize, flag: usize },
    NotConnected { component_sizes: Vec<usize> },
    MapRelationBroken { flag: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoFlags => write!(f, "no flags"),
            Violation::DegreeMismatch { generator, degree } => {
                write!(f, "r{generator} has degree {degree}")
            }
            Violation::NonInvolution { generator, flag } => {
                write!(f, "non-involution(r{generator}, flag {flag})")
            }
            Violation::NotConnected { component_sizes } => {
                write!(f, "not-connected(components {component_sizes:?})")
            }
            Violation::MapRelationBroken { flag } => {
                write!(f, "map-relation-broken(flag {flag})")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks the involution, connectivity and (for maps) `(r0 r2)^2 = 1`
/// conditions. Each violated condition is reported once, with a witness.
pub fn validate(kind: Kind, generators: &[Permutation; 3]) -> ValidationReport {
    let mut violations = Vec::new();
    let n = generators[0].degree();
    if n == 0 {
        violations.push(Violation::NoFlags);
        return ValidationReport { violations };
    }
    for (i, g) in generators.iter().enumerate() {
        if g.degree() != n {
            violations.push(Violation::DegreeMismatch {
                generator: i,
                degree: g.degree(),
            });
        }
    }
    if !violations.is_empty() {
        return ValidationReport { violations };
    }
    for (i, g) in generators.iter().enumerate() {
        if let Some(flag) = (0..n).find(|&x| g.apply(g.apply(x)) != x) {
            violations.push(Violation::NonInvolution { generator: i, flag });
        }
    }
    let refs: Vec<&Permutation> = generators.iter().collect();
    let (labels, count) = orbit_labels(&refs, n);
    if count > 1 {
        let mut sizes = vec![0; count];
        for l in labels {
            sizes[l] += 1;
        }
        violations.push(Violation::NotConnected {
            component_sizes: sizes,
        });
    }
    if kind == Kind::Map {
        let (g0, g2) = (&generators[0], &generators[2]);
        if let Some(flag) = (0..n).find(|&x| g2.apply(g0.apply(x)) != g0.apply(g2.apply(x))) {
            violations.push(Violation::MapRelationBroken { flag });
        }
    }
    ValidationReport { violations }
}

impl FlagSystem {
    pub fn new(kind: Kind, generators: [Permutation; 3]) -> Result<Self> {
        let report = validate(kind, &generators);
        if !report.is_ok() {
            return Err(Error::InvalidFlagSystem(report));
        }
        Ok(FlagSystem { kind, generators })
    }

    /// Builds from 0-based image tables.
    pub fn from_tables(kind: Kind, tables: [Vec<usize>; 3]) -> Result<Self> {
        let [a, b, c] = tables;
        Self::new(
            kind,
            [
                Permutation::from_images(a)?,
                Permutation::from_images(b)?,
                Permutation::from_images(c)?,
            ],
        )
    }

    pub(crate) fn new_unchecked(kind: Kind, generators: [Permutation; 3]) -> Self {
        debug_assert!(validate(kind, &generators).is_ok());
        FlagSystem { kind, generators }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Number of flags.
    pub fn flags(&self) -> usize {
        self.generators[0].degree()
    }

    pub fn generator(&self, i: usize) -> &Permutation {
        &self.generators[i]
    }

    pub fn generators(&self) -> &[Permutation; 3] {
        &self.generators
    }

    /// Image of `flag` under generator `i`.
    #[inline]
    pub fn act(&self, flag: usize, i: usize) -> usize {
        self.generators[i].apply(flag)
    }

    /// Reinterprets a map as a hypermap (always valid).
    pub fn as_hypermap(&self) -> FlagSystem {
        FlagSystem {
            kind: Kind::Hypermap,
            generators: self.generators.clone(),
        }
    }

    /// The same system with flag `x` renamed to `(x)sigma`.
    pub fn relabel(&self, sigma: &Permutation) -> FlagSystem {
        assert_eq!(sigma.degree(), self.flags());
        let gens = self.generators.clone().map(|g| g.conjugate_by(sigma));
        FlagSystem::new_unchecked(self.kind, gens)
    }

    /// Whether `p` commutes with all three generators.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.flags() && self.generators.iter().all(|g| g.commutes_with(p))
    }

    /// First `(generator, flag)` at which `p` fails to commute.
    pub(crate) fn automorphism_witness(&self, p: &Permutation) -> Option<(usize, usize)> {
        for (i, g) in self.generators.iter().enumerate() {
            for x in 0..self.flags() {
                if g.apply(p.apply(x)) != p.apply(g.apply(x)) {
                    return Some((i, x));
                }
            }
        }
        None
    }

    /// Orbit label of each flag under the subgroup generated by the listed
    /// generators, and the number of orbits.
    pub fn orbit_labels(&self, gens: &[usize]) -> (Vec<usize>, usize) {
        let refs: Vec<&Permutation> = gens.iter().map(|&i| &self.generators[i]).collect();
        orbit_labels(&refs, self.flags())
    }

    /// 2-colouring of the flags with every non-fixed generator step changing
    /// colour, if one exists. Fixed points are ignored.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.flags();
        let mut colour = vec![u8::MAX; n];
        colour[0] = 0;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for g in &self.generators {
                let y = g.apply(x);
                if y == x {
                    continue;
                }
                if colour[y] == u8::MAX {
                    colour[y] = 1 - colour[x];
                    stack.push(y);
                } else if colour[y] == colour[x] {
                    return None;
                }
            }
        }
        Some(colour)
    }

    pub fn has_fixed_flags(&self) -> bool {
        self.generators
            .iter()
            .any(|g| g.fixed_points().next().is_some())
    }

    /// Orientable and without boundary: the flag graph is bipartite with no
    /// fixed points.
    pub fn is_orientable_closed(&self) -> bool {
        !self.has_fixed_flags() && self.bipartition().is_some()
    }
}

impl fmt::Debug for FlagSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlagSystem")
            .field("kind", &self.kind)
            .field("flags", &self.flags())
            .field("r0", &self.generators[0].to_string())
            .field("r1", &self.generators[1].to_string())
            .field("r2", &self.generators[2].to_string())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap2() -> Permutation {
        Permutation::from_images(vec![1, 0]).unwrap()
    }

    #[test]
    fn two_flag_sphere_is_valid() {
        let fs = FlagSystem::new(Kind::Map, [swap2(), swap2(), swap2()]).unwrap();
        assert_eq!(fs.flags(), 2);
        assert!(fs.is_orientable_closed());
    }

    #[test]
    fn three_cycle_is_reported() {
        let c = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let id = Permutation::identity(3);
        let report = validate(Kind::Map, &[c, id.clone(), id]);
        assert_eq!(
            report.violations[0],
            Violation::NonInvolution {
                generator: 0,
                flag: 0
            }
        );
    }

    #[test]
    fn disconnected_and_map_relation() {
        let id = Permutation::identity(2);
        let report = validate(Kind::Map, &[id.clone(), id.clone(), id]);
        assert_eq!(
            report.violations,
            vec![Violation::NotConnected {
                component_sizes: vec![1, 1]
            }]
        );

        // r0 = (0 1), r2 = (1 2): r0 r2 is a 3-cycle
        let r0 = Permutation::from_images(vec![1, 0, 2]).unwrap();
        let r2 = Permutation::from_images(vec![0, 2, 1]).unwrap();
        let id = Permutation::identity(3);
        let gens = [r0, id, r2];
        assert!(matches!(
            validate(Kind::Map, &gens).violations[..],
            [Violation::MapRelationBroken { .. }]
        ));
        assert!(validate(Kind::Hypermap, &gens).is_ok());
        assert!(matches!(
            FlagSystem::new(Kind::Map, gens),
            Err(Error::InvalidFlagSystem(_))
        ));
    }

    #[test]
    fn empty_and_mismatched() {
        let e = Permutation::identity(0);
        assert_eq!(
            validate(Kind::Map, &[e.clone(), e.clone(), e]).violations,
            vec![Violation::NoFlags]
        );
        let report = validate(Kind::Map, &[swap2(), Permutation::identity(3), swap2()]);
        assert_eq!(
            report.violations,
            vec![Violation::DegreeMismatch {
                generator: 1,
                degree: 3
            }]
        );
    }
}
