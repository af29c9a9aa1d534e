//! Small standard groups and G-sets used throughout the tests, the CLI
//! and the Python bindings.

use std::sync::Arc;

use crate::group::GroupTable;
use crate::gset::GSet;
use crate::perm::Perm;
use crate::subgroup::Subgroup;

fn build(degree: usize, gens: &[Perm]) -> GroupTable {
    GroupTable::from_generators(gens, degree, 1 << 16).expect("standard groups are small")
}

fn cycle(degree: usize, cycles: &[&[u32]]) -> Perm {
    Perm::from_cycles(degree, cycles).expect("valid cycle notation")
}

/// `Z_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> GroupTable {
    if n == 1 {
        return GroupTable::trivial(1);
    }
    let rot: Vec<u32> = (0..n as u32).collect();
    build(n, &[cycle(n, &[&rot])])
}

/// `Z_2 × Z_2` acting regularly on 4 points.
pub fn klein4() -> GroupTable {
    build(
        4,
        &[cycle(4, &[&[0, 1], &[2, 3]]), cycle(4, &[&[0, 2], &[1, 3]])],
    )
}

/// `S_n` generated by `(0 1)` and `(0 1 … n-1)`.
pub fn symmetric(n: usize) -> GroupTable {
    match n {
        0 | 1 => GroupTable::trivial(n),
        2 => cyclic(2),
        _ => {
            let rot: Vec<u32> = (0..n as u32).collect();
            build(n, &[cycle(n, &[&[0, 1]]), cycle(n, &[&rot])])
        }
    }
}

/// `S_3` generated by `(0 1)` and `(0 1 2)`.
pub fn symmetric3() -> GroupTable {
    symmetric(3)
}

/// The dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> GroupTable {
    assert!(n >= 3, "dihedral groups need at least 3 vertices");
    let rot: Vec<u32> = (0..n as u32).collect();
    let refl = Perm::new((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())
        .expect("reflection is a bijection");
    build(n, &[cycle(n, &[&rot]), refl])
}

/// The `Z_2`-set on six points from the worked example: `0 ↔ 1`, `2 ↔ 3`,
/// with `4` and `5` fixed.
pub fn worked_example() -> GSet {
    let z2 = Arc::new(cyclic(2));
    let image = cycle(6, &[&[0, 1], &[2, 3]]);
    GSet::from_generator_action(z2, &[image], 6).expect("example action is valid")
}

/// `G` acting on itself by left multiplication.
pub fn regular(group: Arc<GroupTable>) -> GSet {
    let trivial = Subgroup::trivial(&group);
    GSet::from_coset_spaces(group, &[trivial])
}

/// Every element acts as the identity on `n` points.
pub fn trivial_action(group: Arc<GroupTable>, n: usize) -> GSet {
    let images = vec![Perm::identity(n); group.generator_indices().len()];
    GSet::from_generator_action(group, &images, n).expect("trivial action is valid")
}
