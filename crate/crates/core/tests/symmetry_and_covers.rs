use std::sync::OnceLock;

use flagmap::families::{
    glide_automorphism, hosohedron, icosahedron, k6_projective, nn2, reflection_automorphism,
    semi_star, torus_44, Glide, Lattice, ReflectionFamily,
};
use flagmap::invariants::euler_characteristic;
use flagmap::*;
use proptest::prelude::*;

fn klein_bottle() -> (FlagSystem, FlagSystem) {
    let k = torus_44(Lattice::Diag(1)).unwrap();
    let a = glide_automorphism(Lattice::Diag(1), Glide::Diag).unwrap();
    let m = quotient_by_involution(&k, &a).unwrap();
    (k, m)
}

fn small_maps() -> &'static [FlagSystem] {
    static CELL: OnceLock<Vec<FlagSystem>> = OnceLock::new();
    CELL.get_or_init(|| flagmap::census::enumerate_flag_systems(9, Kind::Map))
}

#[test]
fn automorphism_group_orders() {
    assert_eq!(automorphism_group(&hosohedron(5).unwrap()).order(), 20);
    assert_eq!(automorphism_group(&semi_star(5).unwrap()).order(), 10);
    assert_eq!(automorphism_group(&hosohedron(3).unwrap()).order(), 12);
    let (k, m) = klein_bottle();
    assert_eq!(automorphism_group(&k).order(), 64);
    assert_eq!(automorphism_group(&m).order(), 8);
    assert_eq!(
        automorphism_group(&torus_44(Lattice::Rect(2)).unwrap()).order(),
        128
    );
}

#[test]
fn symmetry_classes() {
    let (k, m) = klein_bottle();
    let ka = automorphism_group(&k);
    assert!(symmetry_class(&k, &ka).regular);
    let ma = automorphism_group(&m);
    let c = symmetry_class(&m, &ma);
    assert!(!c.regular && c.edge_transitive && c.edge_regular);

    let rect = Lattice::Rect(2);
    let q = quotient_by_involution(
        &torus_44(rect).unwrap(),
        &glide_automorphism(rect, Glide::Rect).unwrap(),
    )
    .unwrap();
    let qa = automorphism_group(&q);
    assert!(!symmetry_class(&q, &qa).edge_transitive);
    assert!(!stability_report(&q).unwrap().stable);
}

#[test]
fn stability_reports() {
    let k6 = stability_report(&k6_projective().unwrap()).unwrap();
    assert_eq!((k6.base_aut_order, k6.cover_aut_order), (60, 120));
    assert!(k6.stable);

    let (_, m) = klein_bottle();
    let r = stability_report(&m).unwrap();
    assert_eq!((r.base_aut_order, r.cover_aut_order), (8, 64));
    assert_eq!(r.instability_index.as_integer(), Some(4));

    let k = nn2(4).unwrap();
    let a = k.left_multiplication(&k.word(&[0, 1, 2])).unwrap();
    let q = quotient_by_involution(&k.map, &a).unwrap();
    let r = stability_report(&q).unwrap();
    assert_eq!((r.base_aut_order, r.cover_aut_order), (4, 16));
    assert_eq!(r.instability_index.as_integer(), Some(2));

    let disc = quotient_by_involution(
        &hosohedron(5).unwrap(),
        &reflection_automorphism(ReflectionFamily::Hosohedron, 5).unwrap(),
    )
    .unwrap();
    let r = stability_report(&disc).unwrap();
    assert_eq!((r.base_aut_order, r.cover_aut_order), (2, 20));
    assert_eq!(r.instability_index.as_integer(), Some(5));

    let json = serde_json::to_value(StabilitySummary::new(
        &r,
        &symmetry_class(&disc, &automorphism_group(&disc)),
    ))
    .unwrap();
    assert_eq!(json["baseAut"], 2);
    assert_eq!(json["coverAut"], 20);
    assert_eq!(json["index"], 5);
    assert_eq!(json["stable"], false);
}

#[test]
fn covers_of_worked_examples() {
    let k6 = k6_projective().unwrap();
    let dc = orientable_double_cover(&k6).unwrap();
    let ico = icosahedron().unwrap();
    assert!(is_isomorphic(&dc.cover, &ico.map));
    // the deck transformation is the antipodal map, which is central
    let aut = automorphism_group(&dc.cover);
    assert!(aut.contains(&dc.deck));
    assert!(aut.elements().iter().all(|h| h.commutes_with(&dc.deck)));

    let (k, m) = klein_bottle();
    let dc = orientable_double_cover(&m).unwrap();
    assert!(is_isomorphic(&dc.cover, &k));
    assert_eq!(euler_characteristic(&dc.cover), 0);

    for n in [4, 5] {
        let h = hosohedron(n).unwrap();
        let a = reflection_automorphism(ReflectionFamily::Hosohedron, n).unwrap();
        let disc = quotient_by_involution(&h, &a).unwrap();
        assert!(is_isomorphic(
            &orientable_double_cover(&disc).unwrap().cover,
            &h
        ));
    }
    let sphere = quotient_by(&dc.cover, &[Permutation::identity(dc.cover.flags())]).unwrap();
    assert_eq!(sphere, dc.cover);
}

#[test]
fn lifts_of_the_klein_bottle_automorphisms() {
    let (k, m) = klein_bottle();
    let dc = orientable_double_cover(&m).unwrap();
    let cover_aut = automorphism_group(&dc.cover);
    assert_eq!(cover_aut.order(), automorphism_group(&k).order());
    let mut lifts = Vec::new();
    for h in automorphism_group(&m).elements() {
        let (a, b) = lift_automorphism(&dc, h).unwrap();
        for g in [a, b] {
            assert!(dc.cover.is_automorphism(&g));
            assert!(cover_aut.contains(&g));
            lifts.push(g);
        }
    }
    lifts.sort();
    lifts.dedup();
    assert_eq!(lifts.len(), 16);
    for x in &lifts {
        for y in &lifts {
            assert!(lifts.binary_search(&x.then(y)).is_ok());
        }
    }
    let (id, deck) = lift_automorphism(&dc, &Permutation::identity(m.flags())).unwrap();
    assert!(id.is_identity());
    assert_eq!(deck, dc.deck);
}

#[test]
fn orientation_of_automorphisms() {
    let k = nn2(4).unwrap();
    let a = k.left_multiplication(&k.word(&[0, 1, 2])).unwrap();
    assert_eq!(
        orientation_action(&k.map, &a).unwrap(),
        Orientation::Reversing
    );
    assert_eq!(
        orientation_action(&k.map, &Permutation::identity(k.map.flags())).unwrap(),
        Orientation::Preserving
    );
}

#[test]
fn quotient_rejects_non_automorphisms() {
    let h = hosohedron(3).unwrap();
    let swap = Permutation::parse_cycles("(1,2)", h.flags()).unwrap();
    let id = Permutation::identity(h.flags());
    assert!(matches!(
        quotient_by(&h, &[id, swap]),
        Err(Error::NotAnAutomorphism { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cover_laws(ix in 0usize..10_000) {
        let maps = small_maps();
        let fs = &maps[ix % maps.len()];
        prop_assume!(!fs.is_orientable_closed());
        let dc = orientable_double_cover(fs).unwrap();
        prop_assert_eq!(dc.cover.flags(), 2 * fs.flags());
        prop_assert!(dc.cover.is_orientable_closed());
        prop_assert_eq!(euler_characteristic(&dc.cover), 2 * euler_characteristic(fs));
        prop_assert!(dc.deck.fixed_points().next().is_none());
        prop_assert_eq!(orientation_action(&dc.cover, &dc.deck).unwrap(), Orientation::Reversing);
        for x in 0..dc.cover.flags() {
            for i in 0..3 {
                prop_assert_eq!(dc.project(dc.cover.act(x, i)), fs.act(dc.project(x), i));
            }
        }
        let back = quotient_by_involution(&dc.cover, &dc.deck).unwrap();
        prop_assert!(is_isomorphic(&back, fs));
        let r = stability_report(fs).unwrap();
        prop_assert!(r.lifted_subgroup_verified);
        prop_assert!(r.instability_index.is_integer());
        prop_assert_eq!(r.cover_aut_order % (2 * r.base_aut_order), 0);
    }

    #[test]
    fn automorphisms_act_semiregularly(ix in 0usize..10_000) {
        let maps = small_maps();
        let fs = &maps[ix % maps.len()];
        let aut = automorphism_group(fs);
        prop_assert_eq!(fs.flags() % aut.order(), 0);
        for h in aut.elements() {
            prop_assert!(fs.is_automorphism(h));
            prop_assert!(h.is_identity() || h.fixed_points().next().is_none());
        }
        let class = symmetry_class(fs, &aut);
        prop_assert_eq!(class.regular, aut.order() == fs.flags());
    }

    #[test]
    fn relabelling_preserves_everything(ix in 0usize..10_000, seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let maps = small_maps();
        let fs = &maps[ix % maps.len()];
        let mut images: Vec<usize> = (0..fs.flags()).collect();
        images.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let g = fs.relabel(&Permutation::from_images(images).unwrap());
        prop_assert_eq!(canonical_form(&g), canonical_form(fs));
        prop_assert_eq!(surface_invariants(&g), surface_invariants(fs));
        prop_assert_eq!(automorphism_group(&g).order(), automorphism_group(fs).order());
    }
}
