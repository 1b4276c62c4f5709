use std::collections::HashSet;

use flagmap::census::{enumerate_flag_systems, stability_census, CensusRecord};
use flagmap::families::hosohedron;
use flagmap::io::{parse_map_file, serialize_cover, serialize_map, MapFile};
use flagmap::verify::oracle_class_count;
use flagmap::*;

#[test]
fn enumeration_matches_brute_force_oracle() {
    for kind in [Kind::Map, Kind::Hypermap] {
        let all = enumerate_flag_systems(5, kind);
        for f in 1..=5 {
            let got = all.iter().filter(|fs| fs.flags() == f).count();
            assert_eq!(got, oracle_class_count(f, kind), "{kind} with {f} flags");
        }
    }
}

#[test]
fn small_counts() {
    assert_eq!(enumerate_flag_systems(1, Kind::Map).len(), 1);
    assert_eq!(oracle_class_count(1, Kind::Map), 1);
    assert_eq!(oracle_class_count(2, Kind::Map), 7);
    assert!(enumerate_flag_systems(0, Kind::Map).is_empty());
}

#[test]
fn enumeration_is_canonical_sorted_and_duplicate_free() {
    let all = enumerate_flag_systems(8, Kind::Map);
    let forms: HashSet<CanonicalForm> = all.iter().map(canonical_form).collect();
    assert_eq!(forms.len(), all.len());
    for fs in &all {
        assert_eq!(&canonical_relabel(fs), fs);
    }
    let keys: Vec<(usize, CanonicalForm)> = all
        .iter()
        .map(|fs| (fs.flags(), canonical_form(fs)))
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn census_records_are_consistent() {
    let census = stability_census(9, Kind::Map);
    assert_eq!(census.to_csv(), stability_census(9, Kind::Map).to_csv());
    let totals = census.totals();
    assert_eq!(totals.total, census.records.len());
    assert_eq!(
        totals.total,
        totals.stable + totals.unstable + totals.undefined
    );
    for r in &census.records {
        assert_eq!(r.stable.is_none(), r.orientable && !r.boundary);
        if r.regular {
            assert_ne!(r.stable, Some(false));
        }
        if let Some(i) = r.instability_index {
            assert!(i.is_integer() && i.as_integer().unwrap() >= 1);
            assert_eq!(r.stable, Some(i.as_integer() == Some(1)));
        }
        // connected surfaces
        assert!(r.chi <= 2);
    }
    let header = census.to_csv().lines().next().unwrap().to_string();
    assert_eq!(header, CensusRecord::CSV_HEADER);
    assert!(census
        .summary_csv()
        .starts_with("flags,total,stable,unstable,undefined\n"));
}

#[test]
fn hosohedron_round_trip() {
    let h = hosohedron(3).unwrap();
    let text = serialize_map(&h);
    let file: MapFile = serde_json::from_str(&text).unwrap();
    assert_eq!((file.r0.len(), file.r1.len(), file.r2.len()), (12, 12, 12));
    assert_eq!(parse_map_file(&text).unwrap(), h);
}

#[test]
fn cover_files_carry_the_deck() {
    let id = Permutation::identity(1);
    let single = FlagSystem::new(Kind::Map, [id.clone(), id.clone(), id]).unwrap();
    let dc = orientable_double_cover(&single).unwrap();
    let file: MapFile = serde_json::from_str(&serialize_cover(&dc)).unwrap();
    assert_eq!(file.deck().unwrap(), Some(dc.deck.clone()));
    assert_eq!(file.to_system().unwrap(), dc.cover);
}

#[test]
fn invalid_files() {
    let bad = r#"{"kind":"map","flags":3,"r0":[1,2,0],"r1":[0,1,2],"r2":[0,1,2]}"#;
    let err = parse_map_file(bad).unwrap_err();
    assert!(err.to_string().contains("non-involution(r0"), "{err}");
    let not_perm = r#"{"kind":"map","flags":2,"r0":[0,0],"r1":[0,1],"r2":[0,1]}"#;
    assert!(matches!(
        parse_map_file(not_perm),
        Err(Error::NotAPermutation { .. })
    ));
    let unknown = r#"{"kind":"map","flags":1,"r0":[0],"r1":[0],"r2":[0],"extra":1}"#;
    assert!(matches!(
        parse_map_file(unknown),
        Err(Error::MalformedJson(_))
    ));
    let hyper = r#"{"kind":"hypermap","flags":1,"r0":[0],"r1":[0],"r2":[0]}"#;
    assert_eq!(parse_map_file(hyper).unwrap().kind(), Kind::Hypermap);
}
