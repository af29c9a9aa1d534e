//! Brute-force ground truth computed directly from the definitions:
//! equivariant maps, automorphisms, fixing elementary collapsings and
//! their types, and monoid closure.
//!
//! Nothing here consults the closed-form counts in [`crate::counting`].

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::gset::GSet;
use crate::subgroup::{conjugate_subgroup, n_conjugacy_class, NClass, Subgroup, SubgroupLattice};

/// A total function `X → X` given by its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EquivariantMap {
    images: Vec<u32>,
}

impl EquivariantMap {
    pub fn identity(n_points: usize) -> Self {
        EquivariantMap {
            images: (0..n_points as u32).collect(),
        }
    }

    /// Wraps an image array after checking it against the action.
    pub fn new(gset: &GSet, images: Vec<u32>) -> Result<Self> {
        if images.len() != gset.n_points() {
            return Err(Error::DegreeMismatch {
                expected: gset.n_points(),
                found: images.len(),
            });
        }
        if let Some(&y) = images.iter().find(|&&y| y as usize >= gset.n_points()) {
            return Err(Error::PointOutOfRange {
                point: y as usize,
                n_points: gset.n_points(),
            });
        }
        if !is_equivariant(gset, &images) {
            return Err(Error::NotEquivariant);
        }
        Ok(EquivariantMap { images })
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &EquivariantMap) -> EquivariantMap {
        EquivariantMap {
            images: other.images.iter().map(|&z| self.images[z as usize]).collect(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.images.len()).filter(|&x| self.apply(x) == x).collect()
    }

    /// `ker(f) = {(a, b) : f(a) = f(b)}`.
    pub fn kernel(&self) -> HashSet<(usize, usize)> {
        let n = self.images.len();
        let mut out = HashSet::new();
        for a in 0..n {
            for b in 0..n {
                if self.images[a] == self.images[b] {
                    out.insert((a, b));
                }
            }
        }
        out
    }
}

/// `f(g·x) = g·f(x)` for every generator `g` and point `x`; generators
/// suffice because the condition is closed under products.
pub fn is_equivariant(gset: &GSet, f: &[u32]) -> bool {
    f.len() == gset.n_points()
        && gset.group().generator_indices().iter().all(|&g| {
            (0..gset.n_points()).all(|x| f[gset.act(g, x)] as usize == gset.act(g, f[x] as usize))
        })
}

/// The same check over every group element.
pub fn is_equivariant_full(gset: &GSet, f: &[u32]) -> bool {
    f.len() == gset.n_points()
        && (0..gset.group().order()).all(|g| {
            (0..gset.n_points()).all(|x| f[gset.act(g, x)] as usize == gset.act(g, f[x] as usize))
        })
}

/// Tries to define `g·x ↦ g·y` on the orbit of `x`. Returns the
/// `(point, image)` pairs, or `None` if two group elements that agree on
/// `x` disagree on `y`.
fn extend_along_orbit(gset: &GSet, x: usize, y: usize) -> Option<Vec<(usize, usize)>> {
    let mut image = vec![usize::MAX; gset.n_points()];
    let mut pairs = Vec::new();
    for g in 0..gset.group().order() {
        let (src, dst) = (gset.act(g, x), gset.act(g, y));
        if image[src] == usize::MAX {
            image[src] = dst;
            pairs.push((src, dst));
        } else if image[src] != dst {
            return None;
        }
    }
    Some(pairs)
}

fn is_injective(pairs: &[(usize, usize)], n_points: usize) -> bool {
    let mut seen = vec![false; n_points];
    pairs.iter().all(|&(_, d)| !std::mem::replace(&mut seen[d], true))
}

/// For each orbit (in [`GSet::orbits`] order), every well-defined
/// extension of `representative ↦ y` over the orbit.
fn orbit_options(gset: &GSet) -> Vec<Vec<Vec<(usize, usize)>>> {
    gset.orbits()
        .iter()
        .map(|o| {
            (0..gset.n_points())
                .filter_map(|y| extend_along_orbit(gset, o.representative, y))
                .collect()
        })
        .collect()
}

/// Exact `|End_G(X)|` by per-orbit target search: an equivariant map is
/// fixed by the image of one point per orbit, and the orbits are independent.
pub fn count_endomorphisms_by_search(gset: &GSet) -> BigUint {
    orbit_options(gset)
        .iter()
        .map(|opts| BigUint::from(opts.len()))
        .product()
}

/// Calls `visit` on every equivariant map, or fails with
/// [`Error::CapExceeded`] before visiting anything if there are more than
/// `cap` of them.
pub fn visit_endomorphisms(
    gset: &GSet,
    cap: u64,
    mut visit: impl FnMut(&EquivariantMap),
) -> Result<u64> {
    let options = orbit_options(gset);
    let total = options
        .iter()
        .map(|o| BigUint::from(o.len()))
        .product::<BigUint>();
    if total > BigUint::from(cap) {
        return Err(Error::CapExceeded { cap });
    }
    Ok(walk(gset, &options, |f| {
        visit(f);
        true
    }))
}

/// The first `limit` equivariant maps in enumeration order, however large
/// `End_G(X)` is.
pub fn first_endomorphisms(gset: &GSet, limit: usize) -> Vec<EquivariantMap> {
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    walk(gset, &orbit_options(gset), |f| {
        out.push(f.clone());
        out.len() < limit
    });
    out
}

// Odometer over per-orbit choices; stops early when `visit` returns false.
fn walk(gset: &GSet, options: &[Vec<Vec<(usize, usize)>>], mut visit: impl FnMut(&EquivariantMap) -> bool) -> u64 {
    if options.iter().any(|o| o.is_empty()) {
        return 0;
    }
    let mut choice = vec![0usize; options.len()];
    let mut f = EquivariantMap::identity(gset.n_points());
    let mut count = 0u64;
    loop {
        for (opts, &c) in options.iter().zip(&choice) {
            for &(src, dst) in &opts[c] {
                f.images[src] = dst as u32;
            }
        }
        count += 1;
        if !visit(&f) {
            return count;
        }

        let mut k = 0;
        loop {
            if k == choice.len() {
                return count;
            }
            choice[k] += 1;
            if choice[k] < options[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// All equivariant maps, provided there are at most `cap`.
pub fn enumerate_endomorphisms(gset: &GSet, cap: u64) -> Result<Vec<EquivariantMap>> {
    let mut out = Vec::new();
    visit_endomorphisms(gset, cap, |f| out.push(f.clone()))?;
    Ok(out)
}

/// Largest G-set accepted by [`count_endomorphisms_exhaustive`].
pub const EXHAUSTIVE_MAX_POINTS: usize = 8;

/// `|End_G(X)|` by testing all `n^n` functions. Only for
/// `n ≤ EXHAUSTIVE_MAX_POINTS`.
pub fn count_endomorphisms_exhaustive(gset: &GSet) -> Result<u64> {
    let n = gset.n_points();
    if n > EXHAUSTIVE_MAX_POINTS {
        return Err(Error::CapExceeded {
            cap: (EXHAUSTIVE_MAX_POINTS as u64).pow(EXHAUSTIVE_MAX_POINTS as u32),
        });
    }
    if n == 0 {
        return Ok(1);
    }
    let mut f = vec![0u32; n];
    let mut count = 0;
    loop {
        if is_equivariant(gset, &f) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(count);
            }
            f[k] += 1;
            if (f[k] as usize) < n {
                break;
            }
            f[k] = 0;
            k += 1;
        }
    }
}

// Candidate images of one orbit: (target orbit, point pairs).
type OrbitImages = Vec<(usize, Vec<(usize, usize)>)>;

/// All bijective equivariant maps, by backtracking over orbits: each orbit
/// goes injectively onto an orbit not used yet.
pub fn enumerate_automorphisms(gset: &GSet) -> Vec<EquivariantMap> {
    let orbits = gset.orbits();
    let orbit_index = gset.orbit_index();
    let options: Vec<OrbitImages> = orbits
        .iter()
        .map(|o| {
            (0..gset.n_points())
                .filter_map(|y| extend_along_orbit(gset, o.representative, y))
                .filter(|pairs| pairs.len() == o.points.len() && is_injective(pairs, gset.n_points()))
                .map(|pairs| (orbit_index[pairs[0].1], pairs))
                .collect()
        })
        .collect();

    fn go(
        depth: usize,
        options: &[OrbitImages],
        used: &mut [bool],
        f: &mut EquivariantMap,
        out: &mut Vec<EquivariantMap>,
    ) {
        if depth == options.len() {
            out.push(f.clone());
            return;
        }
        for (target, pairs) in &options[depth] {
            if used[*target] {
                continue;
            }
            used[*target] = true;
            for &(s, d) in pairs {
                f.images[s] = d as u32;
            }
            go(depth + 1, options, used, f, out);
            used[*target] = false;
        }
    }

    let mut out = Vec::new();
    let mut used = vec![false; orbits.len()];
    let mut f = EquivariantMap::identity(gset.n_points());
    go(0, &options, &mut used, &mut f, &mut out);
    out
}

/// `[x ↦ y]`: sends `g·x` to `g·y` and fixes every other point.
pub fn collapsing_map(gset: &GSet, x: usize, y: usize) -> Result<EquivariantMap> {
    gset.check_point(x)?;
    gset.check_point(y)?;
    if !gset.stabilizer(x).is_subgroup_of(&gset.stabilizer(y)) {
        return Err(Error::StabilizerConditionViolated { x, y });
    }
    let mut f = EquivariantMap::identity(gset.n_points());
    for g in 0..gset.group().order() {
        f.images[gset.act(g, x)] = gset.act(g, y) as u32;
    }
    Ok(f)
}

/// `(x ↔ y)`: exchanges the orbits of `x` and `y` equivariantly.
pub fn swap_map(gset: &GSet, x: usize, y: usize) -> Result<EquivariantMap> {
    gset.check_point(x)?;
    gset.check_point(y)?;
    if gset.stabilizer(x) != gset.stabilizer(y) {
        return Err(Error::StabilizerMismatch { x, y });
    }
    if x == y {
        return Ok(EquivariantMap::identity(gset.n_points()));
    }
    if gset.orbit(x).contains(&y) {
        return Err(Error::SameOrbit { x, y });
    }
    let mut f = EquivariantMap::identity(gset.n_points());
    for g in 0..gset.group().order() {
        let (gx, gy) = (gset.act(g, x), gset.act(g, y));
        f.images[gx] = gy as u32;
        f.images[gy] = gx as u32;
    }
    Ok(f)
}

/// The type `(H, [K]_{N_H})` of an elementary collapsing, normalized so
/// that `H` is the canonical representative of its conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CollapsingType {
    pub h_class: usize,
    pub h_rep: Subgroup,
    pub k_nclass: NClass,
}

impl CollapsingType {
    /// Conjugates `(h, k)` by the element taking `h` to its class
    /// representative, then takes the `N_H`-class of the transported `k`.
    pub fn canonical(gset: &GSet, lattice: &SubgroupLattice, h: &Subgroup, k: &Subgroup) -> Self {
        let group = gset.group();
        let g = lattice.conjugator_to_representative(group, h);
        let h_rep = conjugate_subgroup(group, h, g);
        let k_moved = conjugate_subgroup(group, k, g);
        let k_nclass = n_conjugacy_class(group, &k_moved, lattice.normalizer_of(&h_rep));
        CollapsingType {
            h_class: lattice.class_id_of(&h_rep),
            h_rep,
            k_nclass,
        }
    }
}

/// The kernel an elementary collapsing with witnesses `x`, `y` must have:
/// the diagonal, the pairs `(g·x, g·y)` in both orders, and the pairs
/// `(g·x, h·x)` with `h⁻¹g ∈ G_y`.
pub fn expected_kernel(gset: &GSet, x: usize, y: usize) -> HashSet<(usize, usize)> {
    let group = gset.group();
    let gy = gset.stabilizer(y);
    let mut out: HashSet<(usize, usize)> = (0..gset.n_points()).map(|a| (a, a)).collect();
    for g in 0..group.order() {
        let (gx, gyp) = (gset.act(g, x), gset.act(g, y));
        out.insert((gx, gyp));
        out.insert((gyp, gx));
        for h in 0..group.order() {
            if gy.contains(group.mul(group.inv(h), g)) {
                out.insert((gx, gset.act(h, x)));
            }
        }
    }
    out
}

/// Returns the type of `f` if it is a fixing elementary collapsing.
///
/// Checks the definition literally: `f` equivariant, `Fix(f) = X \ Gx`,
/// and witnesses `x`, `y` in different orbits with
/// `[G_y]_{N_H} = [G_{f(x)}]_{N_H}` (`H = G_x`) and `ker(f)` equal to
/// [`expected_kernel`].
pub fn classify_collapsing(
    gset: &GSet,
    lattice: &SubgroupLattice,
    f: &EquivariantMap,
) -> Option<CollapsingType> {
    if !is_equivariant(gset, f.images()) {
        return None;
    }
    let moved: Vec<usize> = (0..gset.n_points()).filter(|&z| f.apply(z) != z).collect();
    let &first = moved.first()?;
    let orbit = gset.orbit(first);
    if orbit != moved {
        return None;
    }

    let group = gset.group();
    let kernel = f.kernel();
    for &x in &orbit {
        let h = gset.stabilizer(x);
        let n_h = lattice.normalizer_of(&h);
        let image_class = n_conjugacy_class(group, &gset.stabilizer(f.apply(x)), n_h);
        for y in 0..gset.n_points() {
            // (x, y) must lie in the kernel
            if orbit.binary_search(&y).is_ok() || f.apply(y) != f.apply(x) {
                continue;
            }
            let k = gset.stabilizer(y);
            if n_conjugacy_class(group, &k, n_h) != image_class {
                continue;
            }
            if expected_kernel(gset, x, y) == kernel {
                return Some(CollapsingType::canonical(gset, lattice, &h, &k));
            }
        }
    }
    None
}

/// Every distinct `[x ↦ y]` with `G_x ≤ G_y` and `Gx ≠ Gy`.
pub fn enumerate_fixing_collapsings(gset: &GSet) -> BTreeSet<EquivariantMap> {
    let n = gset.n_points();
    let stabs: Vec<Subgroup> = (0..n).map(|x| gset.stabilizer(x)).collect();
    let orbit_index = gset.orbit_index();
    let mut out = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            if orbit_index[x] != orbit_index[y] && stabs[x].is_subgroup_of(&stabs[y]) {
                out.insert(collapsing_map(gset, x, y).expect("stabilizer condition holds"));
            }
        }
    }
    out
}

/// Types of all fixing elementary collapsings. Maps that fail to classify
/// are returned separately; they indicate a bug or a counterexample.
pub fn enumerate_collapsing_types(
    gset: &GSet,
    lattice: &SubgroupLattice,
) -> (BTreeSet<CollapsingType>, Vec<EquivariantMap>) {
    let mut types = BTreeSet::new();
    let mut unclassified = Vec::new();
    for f in enumerate_fixing_collapsings(gset) {
        match classify_collapsing(gset, lattice, &f) {
            Some(t) => {
                types.insert(t);
            }
            None => unclassified.push(f),
        }
    }
    (types, unclassified)
}

/// Closure of `seed ∪ {id}` under composition.
pub fn monoid_closure(
    n_points: usize,
    seed: &[EquivariantMap],
    cap: usize,
) -> Result<BTreeSet<EquivariantMap>> {
    let id = EquivariantMap::identity(n_points);
    let mut found: HashSet<EquivariantMap> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(a) = queue.pop() {
        for s in seed {
            let p = s.compose(&a);
            if found.contains(&p) {
                continue;
            }
            if found.len() >= cap {
                return Err(Error::CapExceeded { cap: cap as u64 });
            }
            found.insert(p.clone());
            queue.push(p);
        }
    }
    Ok(found.into_iter().collect())
}
