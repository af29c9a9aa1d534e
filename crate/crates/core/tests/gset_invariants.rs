//! Orbit, stabilizer and box invariants on coset-space G-sets.

use std::sync::Arc;

use equimon::fixtures;
use equimon::subgroup::{conjugate_subgroup, SubgroupLattice};
use equimon::GSet;

/// One G-set per group: the union of the coset spaces of every subgroup.
fn instances() -> Vec<GSet> {
    [
        fixtures::cyclic(4),
        fixtures::klein4(),
        fixtures::symmetric3(),
        fixtures::cyclic(6),
        fixtures::dihedral(4),
    ]
    .into_iter()
    .map(|g| {
        let g = Arc::new(g);
        let subs = SubgroupLattice::new(&g, 64).unwrap().subgroups().to_vec();
        GSet::from_coset_spaces(g, &subs)
    })
    .chain([fixtures::worked_example()])
    .collect()
}

#[test]
fn stabilizer_of_translate_is_conjugate() {
    for x in instances() {
        let g = x.group();
        let lat = SubgroupLattice::new(g, 64).unwrap();
        for p in 0..x.n_points() {
            let stab = x.stabilizer(p);
            let n = lat.normalizer_of(&stab);
            for a in 0..g.order() {
                let moved = x.stabilizer(x.act(a, p));
                assert_eq!(moved, conjugate_subgroup(g, &stab, g.inv(a)));
                assert_eq!(moved == stab, n.contains(a));
            }
        }
    }
}

#[test]
fn normalizer_elements_separate_cosets() {
    for x in instances() {
        let g = x.group();
        let lat = SubgroupLattice::new(g, 64).unwrap();
        for p in 0..x.n_points() {
            let h = x.stabilizer(p);
            let n: Vec<usize> = lat.normalizer_of(&h).members().collect();
            for &a in &n {
                for &b in &n {
                    let same_point = x.act(a, p) == x.act(b, p);
                    let same_coset = h.contains(g.mul(g.inv(b), a));
                    assert_eq!(same_point, same_coset);
                }
            }
        }
    }
}

#[test]
fn exact_stabilizer_fiber_in_an_orbit_has_normalizer_index_points() {
    for x in instances() {
        let lat = SubgroupLattice::new(x.group(), 64).unwrap();
        for p in 0..x.n_points() {
            let h = x.stabilizer(p);
            let fiber = x.orbit(p).into_iter().filter(|&q| x.stabilizer(q) == h).count();
            assert_eq!(fiber, lat.normalizer_index(&h));
        }
    }
}

#[test]
fn box_decomposition_accounts_for_every_point() {
    for x in instances() {
        let b = x.box_decomposition(64).unwrap();
        let total_orbits: usize = b.classes().iter().map(|&c| b.alpha(c)).sum();
        assert_eq!(total_orbits, x.orbits().len());
        let total_points: usize = b.classes().iter().map(|&c| b.alpha(c) * b.orbit_size(c)).sum();
        assert_eq!(total_points, x.n_points());
        for (o, &c) in b.orbits().iter().zip(b.orbit_class()) {
            for &p in &o.points {
                assert_eq!(b.lattice().class_id_of(b.stabilizer(p)), c);
            }
        }
        // every conjugate of a stabilizer is a stabilizer
        for &c in b.classes() {
            for m in &b.lattice().class(c).members {
                assert!((0..x.n_points()).any(|p| b.stabilizer(p) == m));
            }
        }
    }
}

#[test]
fn translates_share_orbits() {
    for x in instances() {
        for p in 0..x.n_points() {
            for a in 0..x.group().order() {
                assert_eq!(x.orbit(x.act(a, p)), x.orbit(p));
            }
        }
    }
}

#[test]
fn coset_space_of_one_subgroup_has_that_stabilizer_class() {
    let g = Arc::new(fixtures::dihedral(4));
    let lat = SubgroupLattice::new(&g, 64).unwrap();
    for h in lat.subgroups() {
        let x = GSet::from_coset_spaces(g.clone(), std::slice::from_ref(h));
        let b = x.box_decomposition(64).unwrap();
        assert_eq!(b.classes(), &[lat.class_id_of(h)]);
        assert_eq!(b.alpha(lat.class_id_of(h)), 1);
    }
}

#[test]
fn subgroup_cap_propagates() {
    let x = fixtures::regular(Arc::new(fixtures::symmetric(4)));
    assert!(matches!(
        x.box_decomposition(12),
        Err(equimon::Error::SubgroupEnumerationRefused { order: 24, cap: 12 })
    ));
}
