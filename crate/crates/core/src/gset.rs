//! Finite G-sets and their orbit, stabilizer and box decomposition.

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::perm::{compose, Perm};
use crate::subgroup::{Subgroup, SubgroupLattice};

/// A finite set `{0, …, n_points-1}` with a left action of a group.
///
/// The action table is fully materialized and validated at construction:
/// `e·x = x`, `g·(h·x) = (gh)·x`, and every `g` acts bijectively.
#[derive(Clone, Debug)]
pub struct GSet {
    group: Arc<GroupTable>,
    n_points: usize,
    act: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Smallest point of the orbit.
    pub representative: usize,
    /// Sorted.
    pub points: Vec<usize>,
}

/// Result of [`GSet::map_exists`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    /// No equivariant map sends `x` to `y`.
    None,
    /// Some equivariant map sends `x` to `y`, but no bijective one.
    Hom,
    /// Some bijective equivariant map sends `x` to `y`.
    Iso,
}

impl GSet {
    /// Extends one image permutation per group generator to the whole group
    /// by walking the Cayley graph, checking that every path to an element
    /// induces the same permutation of the points.
    pub fn from_generator_action(
        group: Arc<GroupTable>,
        gen_images: &[Perm],
        n_points: usize,
    ) -> Result<Self> {
        let gens = group.generator_indices();
        if gens.len() != gen_images.len() {
            return Err(Error::GeneratorCountMismatch {
                expected: gens.len(),
                found: gen_images.len(),
            });
        }
        for img in gen_images {
            if img.degree() != n_points {
                return Err(Error::DegreeMismatch {
                    expected: n_points,
                    found: img.degree(),
                });
            }
        }

        let mut induced: Vec<Option<Perm>> = vec![None; group.order()];
        induced[0] = Some(Perm::identity(n_points));
        let mut queue = VecDeque::from([0usize]);
        while let Some(cur) = queue.pop_front() {
            let here = induced[cur].clone().expect("queued elements are assigned");
            for (&s, img) in gens.iter().zip(gen_images) {
                let next = group.mul(cur, s);
                let candidate = compose(&here, img)?;
                match &induced[next] {
                    Some(existing) if *existing != candidate => {
                        return Err(Error::InconsistentAction { element: next });
                    }
                    Some(_) => {}
                    None => {
                        induced[next] = Some(candidate);
                        queue.push_back(next);
                    }
                }
            }
        }

        let mut act = Vec::with_capacity(group.order() * n_points);
        for p in induced {
            let p = p.expect("generators reach every element");
            act.extend_from_slice(p.images());
        }
        Self::from_table(group, n_points, act)
    }

    /// The disjoint union of left coset spaces `G/H_i`, with
    /// `g·(aH_i) = (ga)H_i`.
    ///
    /// Within each block cosets are numbered by their smallest element, so
    /// the first point of block `i` is `H_i` itself and has stabilizer `H_i`.
    pub fn from_coset_spaces(group: Arc<GroupTable>, subgroups: &[Subgroup]) -> Self {
        let order = group.order();
        // Per block: element -> coset number within the block.
        let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(subgroups.len());
        let mut offsets = Vec::with_capacity(subgroups.len());
        let mut n_points = 0;
        for h in subgroups {
            let mut coset_of = vec![usize::MAX; order];
            let mut count = 0;
            for a in 0..order {
                if coset_of[a] != usize::MAX {
                    continue;
                }
                for x in h.members() {
                    coset_of[group.mul(a, x)] = count;
                }
                count += 1;
            }
            offsets.push(n_points);
            n_points += count;
            blocks.push(coset_of);
        }

        let mut act = vec![0u32; order * n_points];
        for g in 0..order {
            for (coset_of, &offset) in blocks.iter().zip(&offsets) {
                for a in 0..order {
                    let from = offset + coset_of[a];
                    let to = offset + coset_of[group.mul(g, a)];
                    act[g * n_points + from] = to as u32;
                }
            }
        }
        Self::from_table(group, n_points, act).expect("coset actions are always valid")
    }

    /// Validates a raw action table, `act[g * n_points + x] = g·x`.
    pub fn from_table(group: Arc<GroupTable>, n_points: usize, act: Vec<u32>) -> Result<Self> {
        let order = group.order();
        if act.len() != order * n_points {
            return Err(Error::InvalidAction(format!(
                "table has {} entries, expected {}",
                act.len(),
                order * n_points
            )));
        }
        if act.iter().any(|&y| y as usize >= n_points) {
            return Err(Error::InvalidAction("image out of range".into()));
        }
        let row = |g: usize| &act[g * n_points..(g + 1) * n_points];
        if row(0).iter().enumerate().any(|(x, &y)| x != y as usize) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for g in 0..order {
            if Perm::new(row(g).to_vec()).is_err() {
                return Err(Error::InvalidAction(format!("element {g} does not act bijectively")));
            }
            for h in 0..order {
                let gh = row(group.mul(g, h));
                let (rg, rh) = (row(g), row(h));
                if (0..n_points).any(|x| rg[rh[x] as usize] != gh[x]) {
                    return Err(Error::InvalidAction(format!(
                        "g·(h·x) != (gh)·x for g = {g}, h = {h}"
                    )));
                }
            }
        }
        Ok(GSet {
            group,
            n_points,
            act,
        })
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    /// `g·x`.
    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.act[g * self.n_points + x] as usize
    }

    /// The permutation of the points induced by `g`.
    pub fn row(&self, g: usize) -> &[u32] {
        &self.act[g * self.n_points..(g + 1) * self.n_points]
    }

    pub fn check_point(&self, point: usize) -> Result<()> {
        if point < self.n_points {
            Ok(())
        } else {
            Err(Error::PointOutOfRange {
                point,
                n_points: self.n_points,
            })
        }
    }

    /// `Gx`, sorted.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut pts: Vec<usize> = (0..self.group.order()).map(|g| self.act(g, x)).collect();
        pts.sort_unstable();
        pts.dedup();
        pts
    }

    /// The orbit partition, sorted by representative.
    pub fn orbits(&self) -> Vec<Orbit> {
        let mut seen = vec![false; self.n_points];
        let mut out = Vec::new();
        for x in 0..self.n_points {
            if seen[x] {
                continue;
            }
            let points = self.orbit(x);
            for &p in &points {
                seen[p] = true;
            }
            out.push(Orbit {
                representative: x,
                points,
            });
        }
        out
    }

    /// `orbit_index[x]` is the position of `x`'s orbit in [`orbits`](Self::orbits).
    pub fn orbit_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n_points];
        for (i, o) in self.orbits().iter().enumerate() {
            for &p in &o.points {
                idx[p] = i;
            }
        }
        idx
    }

    /// `G_x = {g : g·x = x}`.
    pub fn stabilizer(&self, x: usize) -> Subgroup {
        let fixing: Vec<usize> = (0..self.group.order())
            .filter(|&g| self.act(g, x) == x)
            .collect();
        Subgroup::from_elements(&self.group, &fixing).expect("stabilizers are subgroups")
    }

    /// Whether an equivariant map (resp. a bijective one) can send `x` to `y`.
    pub fn map_exists(&self, x: usize, y: usize) -> Result<MapKind> {
        self.check_point(x)?;
        self.check_point(y)?;
        let (gx, gy) = (self.stabilizer(x), self.stabilizer(y));
        Ok(if gx == gy {
            MapKind::Iso
        } else if gx.is_subgroup_of(&gy) {
            MapKind::Hom
        } else {
            MapKind::None
        })
    }

    /// Orbit and stabilizer data grouped into boxes `B_[H]`.
    pub fn box_decomposition(&self, subgroup_cap: usize) -> Result<BoxDecomposition> {
        BoxDecomposition::new(self, subgroup_cap)
    }
}

/// The partition of a G-set into boxes `B_[H]`, one per conjugacy class of
/// stabilizers, with orbit counts `α_[H]`.
#[derive(Clone, Debug)]
pub struct BoxDecomposition {
    group: Arc<GroupTable>,
    lattice: SubgroupLattice,
    n_points: usize,
    orbits: Vec<Orbit>,
    stabilizers: Vec<Subgroup>,
    orbit_class: Vec<usize>,
    classes: Vec<usize>,
    alpha: BTreeMap<usize, usize>,
}

impl BoxDecomposition {
    pub fn new(gset: &GSet, subgroup_cap: usize) -> Result<Self> {
        let lattice = SubgroupLattice::new(gset.group(), subgroup_cap)?;
        let orbits = gset.orbits();
        let stabilizers: Vec<Subgroup> = (0..gset.n_points()).map(|x| gset.stabilizer(x)).collect();
        let orbit_class: Vec<usize> = orbits
            .iter()
            .map(|o| lattice.class_id_of(&stabilizers[o.representative]))
            .collect();
        let mut alpha = BTreeMap::new();
        for &c in &orbit_class {
            *alpha.entry(c).or_insert(0) += 1;
        }
        let classes = alpha.keys().copied().collect();
        Ok(BoxDecomposition {
            group: gset.group_arc().clone(),
            lattice,
            n_points: gset.n_points(),
            orbits,
            stabilizers,
            orbit_class,
            classes,
            alpha,
        })
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn stabilizer(&self, x: usize) -> &Subgroup {
        &self.stabilizers[x]
    }

    /// Class id (in the lattice) of each orbit's stabilizers.
    pub fn orbit_class(&self) -> &[usize] {
        &self.orbit_class
    }

    /// `Conj_G(X)`: class ids occurring as stabilizer classes, ascending.
    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    /// `α_[H]`; zero for classes outside `Conj_G(X)`.
    pub fn alpha(&self, class_id: usize) -> usize {
        self.alpha.get(&class_id).copied().unwrap_or(0)
    }

    pub fn alphas(&self) -> &BTreeMap<usize, usize> {
        &self.alpha
    }

    /// Canonical representative `H` of a class.
    pub fn representative(&self, class_id: usize) -> &Subgroup {
        &self.lattice.class(class_id).representative
    }

    /// `[N_G(H) : H]` for the class representative.
    pub fn normalizer_index(&self, class_id: usize) -> usize {
        self.lattice.normalizer_index(self.representative(class_id))
    }

    /// `[G : H]`, the size of every orbit in the box.
    pub fn orbit_size(&self, class_id: usize) -> usize {
        self.representative(class_id).index_in(&self.group)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice.class_leq(a, b)
    }

    /// Covering pairs `(a, b)` of the class order restricted to `Conj_G(X)`.
    pub fn covering_relations(&self) -> Vec<(usize, usize)> {
        let cs = &self.classes;
        let mut out = Vec::new();
        for &a in cs {
            for &b in cs {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let covered = cs
                    .iter()
                    .any(|&m| m != a && m != b && self.leq(a, m) && self.leq(m, b));
                if !covered {
                    out.push((a, b));
                }
            }
        }
        out
    }
}
