//! Exhaustive enumeration of flag systems up to isomorphism, and the
//! stability census built on it.
//!
//! Image tables are filled in standard form: positions `(flag, generator)`
//! are scanned in order and a new flag label is only ever introduced as the
//! next unused integer. A completed table is then exactly the breadth-first
//! code from flag 0, so keeping the tables whose code from flag 0 is least
//! over all start flags yields one representative per class.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::canonical::{canonical_code, is_canonical_from_zero};
use crate::flags::{FlagSystem, Kind};
use crate::invariants::{surface_invariants, Genus};
use crate::perm::Permutation;
use crate::symmetry::{automorphism_group, stability_report, symmetry_class, InstabilityIndex};

const UNSET: u32 = u32::MAX;

#[derive(Clone)]
struct Partial {
    t: [Vec<u32>; 3],
    count: usize,
    /// Next scan position, `3 * flag + generator`.
    pos: usize,
}

struct Search {
    max_flags: usize,
    kind: Kind,
}

impl Search {
    fn root(&self) -> Partial {
        Partial {
            t: [0, 1, 2].map(|_| vec![UNSET; self.max_flags]),
            count: 1,
            pos: 0,
        }
    }

    /// `g0 g2 = g2 g0` wherever both sides are already defined.
    fn commutes_at(&self, p: &Partial, x: usize) -> bool {
        let a = p.t[0][x];
        let b = p.t[2][x];
        if a == UNSET || b == UNSET {
            return true;
        }
        let ab = p.t[2][a as usize];
        let ba = p.t[0][b as usize];
        ab == UNSET || ba == UNSET || ab == ba
    }

    fn consistent_after(&self, p: &Partial, x: usize, y: usize) -> bool {
        if self.kind == Kind::Hypermap {
            return true;
        }
        let mut near = vec![x, y];
        for z in [x, y] {
            for i in [0, 2] {
                if p.t[i][z] != UNSET {
                    near.push(p.t[i][z] as usize);
                }
            }
        }
        near.into_iter().all(|z| self.commutes_at(p, z))
    }

    /// Children of a partial table at its first open position, or `None`
    /// once the table is complete.
    fn children(&self, mut p: Partial) -> Result<Vec<Partial>, Partial> {
        loop {
            let (x, i) = (p.pos / 3, p.pos % 3);
            if x >= p.count {
                return Err(p);
            }
            if p.t[i][x] != UNSET {
                p.pos += 1;
                continue;
            }
            let mut out = Vec::new();
            let mut assign = |p: &Partial, y: usize, grow: bool| {
                let mut q = p.clone();
                q.t[i][x] = y as u32;
                q.t[i][y] = x as u32;
                if grow {
                    q.count += 1;
                }
                q.pos += 1;
                if self.consistent_after(&q, x, y) {
                    out.push(q);
                }
            };
            assign(&p, x, false);
            for y in x + 1..p.count {
                if p.t[i][y] == UNSET {
                    assign(&p, y, false);
                }
            }
            if p.count < self.max_flags {
                assign(&p, p.count, true);
            }
            return Ok(out);
        }
    }

    fn finish(&self, p: Partial) -> Option<FlagSystem> {
        let n = p.count;
        let gens = p.t.map(|row| {
            Permutation::from_images(row[..n].iter().map(|&v| v as usize).collect()).ok()
        });
        let [Some(a), Some(b), Some(c)] = gens else {
            return None;
        };
        let fs = FlagSystem::new(self.kind, [a, b, c]).ok()?;
        is_canonical_from_zero(&fs).then_some(fs)
    }

    fn run(&self, p: Partial, out: &mut Vec<FlagSystem>) {
        match self.children(p) {
            Ok(kids) => kids.into_iter().for_each(|k| self.run(k, out)),
            Err(done) => out.extend(self.finish(done)),
        }
    }

    /// Expands breadth-first until the frontier is wide enough to split.
    fn frontier(&self, width: usize, out: &mut Vec<FlagSystem>) -> Vec<Partial> {
        let mut level = vec![self.root()];
        while !level.is_empty() && level.len() < width {
            let mut next = Vec::new();
            for p in level {
                match self.children(p) {
                    Ok(kids) => next.extend(kids),
                    Err(done) => out.extend(self.finish(done)),
                }
            }
            level = next;
        }
        level
    }
}

fn sort_key(fs: &FlagSystem) -> (usize, Vec<u32>) {
    (fs.flags(), canonical_code(fs))
}

/// Every connected flag system with at most `max_flags` flags, one per
/// isomorphism class, ordered by flag count and then canonical code. Each
/// system is returned in its canonical labelling.
pub fn enumerate_flag_systems(max_flags: usize, kind: Kind) -> Vec<FlagSystem> {
    if max_flags == 0 {
        return Vec::new();
    }
    let search = Search { max_flags, kind };
    let mut found = Vec::new();
    let frontier = search.frontier(256, &mut found);

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let parts: Vec<Vec<FlagSystem>> = frontier
            .into_par_iter()
            .map(|p| {
                let mut v = Vec::new();
                search.run(p, &mut v);
                v
            })
            .collect();
        found.extend(parts.into_iter().flatten());
    }
    #[cfg(not(feature = "parallel"))]
    for p in frontier {
        search.run(p, &mut found);
    }

    let mut keyed: Vec<_> = found.into_iter().map(|fs| (sort_key(&fs), fs)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, fs)| fs).collect()
}

/// One row of the stability census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusRecord {
    pub flags: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub chi: i64,
    pub orientable: bool,
    pub boundary: bool,
    pub genus: String,
    pub aut_order: usize,
    pub regular: bool,
    pub edge_transitive: bool,
    /// Undefined (`None`) for orientable closed systems.
    pub cover_aut_order: Option<usize>,
    pub stable: Option<bool>,
    pub instability_index: Option<InstabilityIndex>,
    pub lifts_verified: Option<bool>,
    pub code: String,
}

impl CensusRecord {
    pub const CSV_HEADER: &'static str = "flags,vertices,edges,faces,chi,orientable,boundary,genus,aut_order,regular,edge_transitive,cover_aut_order,stable,instability_index,code";

    pub fn csv_row(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(T::to_string).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.flags,
            self.vertices,
            self.edges,
            self.faces,
            self.chi,
            self.orientable,
            self.boundary,
            self.genus,
            self.aut_order,
            self.regular,
            self.edge_transitive,
            opt(&self.cover_aut_order),
            opt(&self.stable),
            opt(&self.instability_index),
            self.code
        )
    }
}

/// Short surface tag: `O<g>`, `N<k>`, or `B<o|n><g>b<b>` for bordered.
pub fn genus_tag(genus: &Genus) -> String {
    match genus {
        Genus::Orientable { genus } => format!("O{genus}"),
        Genus::NonOrientable { crosscaps } => format!("N{crosscaps}"),
        Genus::Bordered {
            orientable,
            boundary_components,
            genus,
        } => format!(
            "B{}{genus}b{boundary_components}",
            if *orientable { 'o' } else { 'n' }
        ),
    }
}

fn code_string(fs: &FlagSystem) -> String {
    let code = canonical_code(fs);
    code.iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn census_record(fs: &FlagSystem) -> CensusRecord {
    let inv = surface_invariants(fs);
    let aut = automorphism_group(fs);
    let class = symmetry_class(fs, &aut);
    let report = (!fs.is_orientable_closed())
        .then(|| stability_report(fs).expect("cover of a non-orientable or bordered system"));
    CensusRecord {
        flags: inv.flags,
        vertices: inv.vertices,
        edges: inv.edges,
        faces: inv.faces,
        chi: inv.chi,
        orientable: inv.orientable,
        boundary: inv.has_boundary,
        genus: genus_tag(&inv.genus),
        aut_order: aut.order(),
        regular: class.regular,
        edge_transitive: class.edge_transitive,
        cover_aut_order: report.as_ref().map(|r| r.cover_aut_order),
        stable: report.as_ref().map(|r| r.stable),
        instability_index: report.as_ref().map(|r| r.instability_index),
        lifts_verified: report.as_ref().map(|r| r.lifted_subgroup_verified),
        code: code_string(fs),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusCounts {
    pub total: usize,
    pub stable: usize,
    pub unstable: usize,
    /// Orientable closed systems, for which stability is not defined.
    pub undefined: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Census {
    pub kind: Kind,
    pub max_flags: usize,
    pub records: Vec<CensusRecord>,
    pub by_flags: BTreeMap<usize, CensusCounts>,
}

impl Census {
    pub fn totals(&self) -> CensusCounts {
        self.by_flags
            .values()
            .fold(CensusCounts::default(), |a, c| CensusCounts {
                total: a.total + c.total,
                stable: a.stable + c.stable,
                unstable: a.unstable + c.unstable,
                undefined: a.undefined + c.undefined,
            })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.records.len() + 1));
        out.push_str(CensusRecord::CSV_HEADER);
        out.push('\n');
        for r in &self.records {
            out.push_str(&r.csv_row());
            out.push('\n');
        }
        out
    }

    pub fn summary_csv(&self) -> String {
        let mut out = String::from("flags,total,stable,unstable,undefined\n");
        for (f, c) in &self.by_flags {
            writeln!(
                out,
                "{f},{},{},{},{}",
                c.total, c.stable, c.unstable, c.undefined
            )
            .unwrap();
        }
        out
    }
}

/// Census records for the given systems, in the given order.
pub fn census_records(systems: &[FlagSystem]) -> Vec<CensusRecord> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        systems.par_iter().map(census_record).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        systems.iter().map(census_record).collect()
    }
}

pub fn stability_census(max_flags: usize, kind: Kind) -> Census {
    let systems = enumerate_flag_systems(max_flags, kind);
    let records = census_records(&systems);
    let mut by_flags: BTreeMap<usize, CensusCounts> = BTreeMap::new();
    for r in &records {
        let c = by_flags.entry(r.flags).or_default();
        c.total += 1;
        match r.stable {
            Some(true) => c.stable += 1,
            Some(false) => c.unstable += 1,
            None => c.undefined += 1,
        }
    }
    Census {
        kind,
        max_flags,
        records,
        by_flags,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_flag() {
        let all = enumerate_flag_systems(1, Kind::Map);
        assert_eq!(all.len(), 1);
        assert!(all[0].generators().iter().all(Permutation::is_identity));
    }

    #[test]
    fn two_flags() {
        // three non-identity choices of which generators swap, minus none
        assert_eq!(enumerate_flag_systems(2, Kind::Map).len(), 1 + 7);
        assert_eq!(enumerate_flag_systems(2, Kind::Hypermap).len(), 1 + 7);
    }

    #[test]
    fn census_is_deterministic() {
        let a = stability_census(6, Kind::Map).to_csv();
        let b = stability_census(6, Kind::Map).to_csv();
        assert_eq!(a, b);
        assert!(a.starts_with(CensusRecord::CSV_HEADER));
    }
}
