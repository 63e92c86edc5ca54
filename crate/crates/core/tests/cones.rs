use std::collections::BTreeSet;

use cubicsurf::cones::{dd, nef_cone, subcone, Cone, Membership, SubconeSelector};
use cubicsurf::linalg::{dual_basis, make_primitive, rank};
use cubicsurf::picard::*;
use cubicsurf::tables::table_rows;
use num_bigint::BigInt;
use proptest::prelude::*;

fn simplicial_generators() -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    (1usize..=7).prop_flat_map(|dim| {
        prop::collection::vec(prop::collection::vec(-6i64..=6, dim), dim)
            .prop_map(|rows| {
                rows.into_iter()
                    .map(|r| r.into_iter().map(BigInt::from).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            })
            .prop_filter("full rank", move |g| rank(g) == dim)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn simplicial_duality_round_trip(gens in simplicial_generators()) {
        // the facet normal opposite g_j vanishes on every other generator
        let normals = dual_basis(&gens);
        let rays = dd::extreme_rays(&normals).unwrap();
        let mut expected: Vec<Vec<BigInt>> = gens
            .into_iter()
            .map(|mut g| {
                make_primitive(&mut g);
                g
            })
            .collect();
        expected.sort();
        prop_assert_eq!(rays, expected);
    }
}

fn all_cones() -> Vec<(String, std::sync::Arc<Cone>)> {
    let mut out = vec![("nef".to_string(), nef_cone())];
    out.push(("Γ(h)".to_string(), subcone(&SubconeSelector::Hyperplane).unwrap()));
    for name in pencil_names() {
        out.push((format!("Γ({name})"), subcone(&SubconeSelector::pencil(name).unwrap()).unwrap()));
    }
    out
}

#[test]
fn rays_satisfy_constraints_and_are_extreme() {
    for (name, cone) in all_cones() {
        assert_eq!(cone.rays().len(), 99, "{name}");
        let distinct: BTreeSet<&DivisorClass> = cone.rays().iter().collect();
        assert_eq!(distinct.len(), 99, "{name}");
        for r in cone.rays() {
            assert!(r.is_primitive(), "{name}: {r}");
            assert!(cone.halfspaces().iter().all(|h| h.contains(r)), "{name}: {r}");
            assert_eq!(cone.tight_rank(r), RANK - 1, "{name}: {r}");
            assert!(cone.is_extreme_ray(r));
        }
    }
}

#[test]
fn the_28_subcones_cover_the_nef_generators() {
    let mut subcones = vec![subcone(&SubconeSelector::Hyperplane).unwrap()];
    for name in pencil_names() {
        subcones.push(subcone(&SubconeSelector::pencil(name).unwrap()).unwrap());
    }
    for r in nef_cone().rays() {
        assert!(
            subcones.iter().any(|c| c.contains(r) != Membership::Outside),
            "{r} lies in no subcone"
        );
    }
}

#[test]
fn weyl_transport_of_the_pencil_table() {
    let l1 = standard_class(ClassName::Li(1)).unwrap();
    let table2: Vec<DivisorClass> = table_rows(2).unwrap().into_iter().map(|r| r.class).collect();
    for name in pencil_names() {
        let c = standard_class(name).unwrap();
        let word = weyl_word(&l1, &c).expect("pencils form one orbit");
        let moved: BTreeSet<DivisorClass> = table2.iter().map(|d| apply_word(d, &word)).collect();
        let computed: BTreeSet<DivisorClass> =
            subcone(&SubconeSelector::pencil(name).unwrap()).unwrap().rays().iter().cloned().collect();
        assert_eq!(moved, computed, "Γ({name})");
    }
}

#[test]
fn membership_examples() {
    let nef = nef_cone();
    assert_eq!(nef.contains(&hyperplane()), Membership::Interior);
    assert_eq!(nef.contains(&standard_class(ClassName::E(1)).unwrap()), Membership::Outside);
    let gh = subcone(&SubconeSelector::Hyperplane).unwrap();
    assert_eq!(gh.contains(&hyperplane()), Membership::Interior);
}

#[test]
fn single_constraint_in_the_plane_is_not_pointed() {
    let rows = vec![vec![BigInt::from(1), BigInt::from(0)]];
    assert!(matches!(dd::extreme_rays(&rows), Err(cubicsurf::Error::NotPointed { .. })));
}
