//! Subgroups as membership bitsets, and the subgroup-level machinery built
//! on them: conjugation, normalizers, conjugacy classes, the class order,
//! `N`-conjugacy classes and the `U` sets of overgroups.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::group::GroupTable;

/// Default cap on the group order accepted by [`all_subgroups`].
pub const DEFAULT_SUBGROUP_CAP: usize = 64;

/// A subgroup of a [`GroupTable`], stored as a bitset over element indices.
///
/// Ordered by size first, then lexicographically by ascending member list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    bits: Vec<u64>,
    size: usize,
}

/// An `N`-conjugacy class `{n⁻¹Hn : n ∈ N}`.
pub type NClass = BTreeSet<Subgroup>;

impl Subgroup {
    fn empty(order: usize) -> Self {
        Subgroup {
            bits: vec![0; order.div_ceil(64).max(1)],
            size: 0,
        }
    }

    fn insert(&mut self, e: usize) -> bool {
        let (w, b) = (e / 64, e % 64);
        let fresh = self.bits[w] & (1 << b) == 0;
        if fresh {
            self.bits[w] |= 1 << b;
            self.size += 1;
        }
        fresh
    }

    pub fn trivial(group: &GroupTable) -> Self {
        let mut s = Subgroup::empty(group.order());
        s.insert(0);
        s
    }

    pub fn whole(group: &GroupTable) -> Self {
        let mut s = Subgroup::empty(group.order());
        for e in 0..group.order() {
            s.insert(e);
        }
        s
    }

    /// Checks that `elements` is closed under multiplication and inverses
    /// and contains the identity.
    pub fn from_elements(group: &GroupTable, elements: &[usize]) -> Result<Self> {
        let mut s = Subgroup::empty(group.order());
        for &e in elements {
            group.check_element(e)?;
            s.insert(e);
        }
        if !s.contains(0) {
            return Err(Error::InvalidAction("subgroup must contain the identity".into()));
        }
        for a in s.members() {
            if !s.contains(group.inv(a)) {
                return Err(Error::InvalidAction(format!("element {a} has no inverse in the set")));
            }
            for b in s.members() {
                if !s.contains(group.mul(a, b)) {
                    return Err(Error::InvalidAction(format!(
                        "set is not closed: {a} * {b} is missing"
                    )));
                }
            }
        }
        Ok(s)
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        self.bits
            .get(e / 64)
            .is_some_and(|w| w & (1 << (e % 64)) != 0)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            (0..64)
                .filter(move |b| word & (1u64 << b) != 0)
                .map(move |b| w * 64 + b)
        })
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.size <= other.size && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// `[G : self]`.
    pub fn index_in(&self, group: &GroupTable) -> usize {
        group.order() / self.size
    }

    /// `[other : self]`, assuming `self ≤ other`.
    pub fn index_of_in(&self, other: &Subgroup) -> usize {
        other.size / self.size
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.members().cmp(other.members()))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

/// The smallest subgroup containing `seed`.
pub fn subgroup_generated(group: &GroupTable, seed: &[usize]) -> Result<Subgroup> {
    for &s in seed {
        group.check_element(s)?;
    }
    let mut sub = Subgroup::trivial(group);
    let mut list = vec![0usize];
    let mut i = 0;
    while i < list.len() {
        let a = list[i];
        for &s in seed {
            let p = group.mul(a, s);
            if sub.insert(p) {
                list.push(p);
            }
        }
        i += 1;
    }
    Ok(sub)
}

/// A short generating set: greedily add members not yet generated.
pub fn generators_of(group: &GroupTable, sub: &Subgroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut current = Subgroup::trivial(group);
    for e in sub.members() {
        if !current.contains(e) {
            gens.push(e);
            current = subgroup_generated(group, &gens).expect("members are valid indices");
        }
    }
    gens
}

/// Every subgroup of `group`, sorted by `(size, bitset)`.
///
/// Starts from the cyclic subgroups and joins known subgroups with cyclic
/// ones until nothing new appears.
pub fn all_subgroups(group: &GroupTable, cap: usize) -> Result<Vec<Subgroup>> {
    if group.order() > cap {
        return Err(Error::SubgroupEnumerationRefused {
            order: group.order(),
            cap,
        });
    }

    let mut cyclic: Vec<(usize, Subgroup)> = Vec::new();
    let mut known: HashMap<Subgroup, Vec<usize>> = HashMap::new();
    for g in 0..group.order() {
        let c = subgroup_generated(group, &[g])?;
        if !known.contains_key(&c) {
            known.insert(c.clone(), vec![g]);
            cyclic.push((g, c));
        }
    }

    let mut queue: Vec<Subgroup> = known.keys().cloned().collect();
    queue.sort();
    while let Some(a) = queue.pop() {
        let gens_a = known[&a].clone();
        for (c, _) in &cyclic {
            if a.contains(*c) {
                continue;
            }
            let mut seed = gens_a.clone();
            seed.push(*c);
            let join = subgroup_generated(group, &seed)?;
            if !known.contains_key(&join) {
                known.insert(join.clone(), seed);
                queue.push(join);
            }
        }
    }

    let mut all: Vec<Subgroup> = known.into_keys().collect();
    all.sort();
    Ok(all)
}

/// `{g⁻¹hg : h ∈ H}`.
pub fn conjugate_subgroup(group: &GroupTable, h: &Subgroup, g: usize) -> Subgroup {
    let mut out = Subgroup::empty(group.order());
    for x in h.members() {
        out.insert(group.conj(x, g));
    }
    out
}

/// `N_G(H) = {g : g⁻¹Hg = H}`.
pub fn normalizer(group: &GroupTable, h: &Subgroup) -> Subgroup {
    let mut out = Subgroup::empty(group.order());
    for g in 0..group.order() {
        if h.members().all(|x| h.contains(group.conj(x, g))) {
            out.insert(g);
        }
    }
    out
}

/// `[H]_N = {n⁻¹Hn : n ∈ N}`.
pub fn n_conjugacy_class(group: &GroupTable, h: &Subgroup, n: &Subgroup) -> NClass {
    n.members().map(|x| conjugate_subgroup(group, h, x)).collect()
}

/// A conjugacy class of subgroups with its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    pub class_id: usize,
    /// The member with the smallest bitset.
    pub representative: Subgroup,
    /// Sorted.
    pub members: Vec<Subgroup>,
}

impl SubgroupClass {
    pub fn subgroup_order(&self) -> usize {
        self.representative.size()
    }
}

/// Conjugacy classes of all subgroups, ordered by representative.
pub fn subgroup_conjugacy_classes(group: &GroupTable, cap: usize) -> Result<Vec<SubgroupClass>> {
    Ok(SubgroupLattice::new(group, cap)?.classes)
}

/// `[A] ≤ [B]`: some member of `B` contains the representative of `A`.
pub fn class_leq(a: &SubgroupClass, b: &SubgroupClass) -> bool {
    b.members.iter().any(|k| a.representative.is_subgroup_of(k))
}

/// All subgroups of a group with their classes and normalizers precomputed.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    position: HashMap<Subgroup, usize>,
    normalizers: Vec<Subgroup>,
    class_of: Vec<usize>,
    classes: Vec<SubgroupClass>,
    leq: Vec<Vec<bool>>,
}

impl SubgroupLattice {
    pub fn new(group: &GroupTable, cap: usize) -> Result<Self> {
        let subgroups = all_subgroups(group, cap)?;
        let position: HashMap<Subgroup, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let normalizers = subgroups.iter().map(|h| normalizer(group, h)).collect();

        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut classes = Vec::new();
        for (i, h) in subgroups.iter().enumerate() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let members: BTreeSet<Subgroup> = (0..group.order())
                .map(|g| conjugate_subgroup(group, h, g))
                .collect();
            for m in &members {
                class_of[position[m]] = id;
            }
            // Subgroups are visited in sorted order, so `h` is the smallest member.
            classes.push(SubgroupClass {
                class_id: id,
                representative: h.clone(),
                members: members.into_iter().collect(),
            });
        }

        let leq = classes
            .iter()
            .map(|a| classes.iter().map(|b| class_leq(a, b)).collect())
            .collect();

        Ok(SubgroupLattice {
            subgroups,
            position,
            normalizers,
            class_of,
            classes,
            leq,
        })
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &SubgroupClass {
        &self.classes[id]
    }

    /// Position of `h` in [`subgroups`](Self::subgroups).
    ///
    /// Panics if `h` is not a subgroup of this lattice's group.
    pub fn position(&self, h: &Subgroup) -> usize {
        *self
            .position
            .get(h)
            .expect("subgroup belongs to this lattice")
    }

    pub fn class_id_of(&self, h: &Subgroup) -> usize {
        self.class_of[self.position(h)]
    }

    pub fn normalizer_of(&self, h: &Subgroup) -> &Subgroup {
        &self.normalizers[self.position(h)]
    }

    /// `[N_G(H) : H]`.
    pub fn normalizer_index(&self, h: &Subgroup) -> usize {
        h.index_of_in(self.normalizer_of(h))
    }

    pub fn class_leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Smallest element `g` with `g⁻¹Hg` equal to the class representative.
    pub fn conjugator_to_representative(&self, group: &GroupTable, h: &Subgroup) -> usize {
        let rep = &self.classes[self.class_id_of(h)].representative;
        (0..group.order())
            .find(|&g| &conjugate_subgroup(group, h, g) == rep)
            .expect("representative is conjugate to every class member")
    }

    /// Overgroups of `h` among all subgroups, in lattice order.
    pub fn overgroups<'a>(&'a self, h: &'a Subgroup) -> impl Iterator<Item = &'a Subgroup> + 'a {
        self.subgroups.iter().filter(move |t| h.is_subgroup_of(t))
    }

    fn n_classes_of<'a>(
        &self,
        group: &GroupTable,
        h: &Subgroup,
        candidates: impl Iterator<Item = &'a Subgroup>,
    ) -> BTreeSet<NClass> {
        let n_h = self.normalizer_of(h);
        let mut seen: BTreeSet<Subgroup> = BTreeSet::new();
        let mut out = BTreeSet::new();
        for t in candidates {
            if seen.contains(t) {
                continue;
            }
            let class = n_conjugacy_class(group, t, n_h);
            seen.extend(class.iter().cloned());
            out.insert(class);
        }
        out
    }

    /// `U(H, K)`: the `N_H`-classes of overgroups of `H` conjugate to `K`.
    /// Empty when `[H] ≰ [K]`.
    pub fn u_set(&self, group: &GroupTable, h: &Subgroup, k: &Subgroup) -> BTreeSet<NClass> {
        let k_class = self.class_id_of(k);
        self.n_classes_of(
            group,
            h,
            self.overgroups(h).filter(|t| self.class_id_of(t) == k_class),
        )
    }

    /// `U(H)`: the `N_H`-classes of all overgroups of `H`.
    pub fn u_union(&self, group: &GroupTable, h: &Subgroup) -> BTreeSet<NClass> {
        self.n_classes_of(group, h, self.overgroups(h))
    }
}
