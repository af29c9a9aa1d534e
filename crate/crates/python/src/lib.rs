//! Python bindings. Built with maturin as the `equimon` extension module.

use std::fmt::Display;
use std::sync::Arc;

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use equimon::counting::{self, CardinalityReport};
use equimon::group::DEFAULT_MAX_GROUP_ORDER;
use equimon::subgroup::{subgroup_generated, DEFAULT_SUBGROUP_CAP};
use equimon::{fixtures, oracle, BoxDecomposition, EquivariantMap, GroupTable, MapKind, Perm, SubgroupLattice};
use equimon_cli::{Instance, Limits, Report};

fn value_error(e: impl Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn perm(images: Vec<u32>) -> PyResult<Perm> {
    Perm::new(images).map_err(value_error)
}

fn images(maps: impl IntoIterator<Item = EquivariantMap>) -> Vec<Vec<u32>> {
    maps.into_iter().map(|f| f.images().to_vec()).collect()
}

/// A finite permutation group, stored as its multiplication table.
#[pyclass(frozen, skip_from_py_object, module = "equimon")]
#[derive(Clone)]
struct Group {
    inner: Arc<GroupTable>,
}

#[pymethods]
impl Group {
    /// Closes the generators (image arrays) under composition.
    #[new]
    #[pyo3(signature = (generators, degree=None, max_order=DEFAULT_MAX_GROUP_ORDER))]
    fn new(generators: Vec<Vec<u32>>, degree: Option<usize>, max_order: usize) -> PyResult<Self> {
        let degree = match (degree, generators.first()) {
            (Some(d), _) => d,
            (None, Some(g)) => g.len(),
            (None, None) => return Err(PyValueError::new_err("degree is required when there are no generators")),
        };
        let gens = generators.into_iter().map(perm).collect::<PyResult<Vec<_>>>()?;
        let table = GroupTable::from_generators(&gens, degree, max_order).map_err(value_error)?;
        Ok(Group { inner: Arc::new(table) })
    }

    #[staticmethod]
    fn cyclic(n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("n must be positive"));
        }
        Ok(Group { inner: Arc::new(fixtures::cyclic(n)) })
    }

    #[staticmethod]
    fn klein4() -> Self {
        Group { inner: Arc::new(fixtures::klein4()) }
    }

    #[staticmethod]
    fn symmetric(n: usize) -> PyResult<Self> {
        if n > 6 {
            return Err(PyValueError::new_err("symmetric groups above S6 exceed the default order limit"));
        }
        Ok(Group { inner: Arc::new(fixtures::symmetric(n)) })
    }

    #[staticmethod]
    fn dihedral(n: usize) -> PyResult<Self> {
        if n < 3 {
            return Err(PyValueError::new_err("dihedral groups need n >= 3"));
        }
        Ok(Group { inner: Arc::new(fixtures::dihedral(n)) })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    /// Indices of the generators in the element list.
    #[getter]
    fn generator_indices(&self) -> Vec<usize> {
        self.inner.generator_indices().to_vec()
    }

    fn element(&self, i: usize) -> PyResult<Vec<u32>> {
        self.inner.check_element(i).map_err(value_error)?;
        Ok(self.inner.element(i).images().to_vec())
    }

    fn elements(&self) -> Vec<Vec<u32>> {
        self.inner.elements().iter().map(|p| p.images().to_vec()).collect()
    }

    fn index_of(&self, images: Vec<u32>) -> PyResult<Option<usize>> {
        Ok(self.inner.index_of(&perm(images)?))
    }

    /// Index of `a ∘ b` (apply `b` first).
    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        self.inner.check_element(a).map_err(value_error)?;
        self.inner.check_element(b).map_err(value_error)?;
        Ok(self.inner.mul(a, b))
    }

    fn inverse(&self, a: usize) -> PyResult<usize> {
        self.inner.check_element(a).map_err(value_error)?;
        Ok(self.inner.inv(a))
    }

    /// Every subgroup as a sorted list of element indices.
    #[pyo3(signature = (cap=DEFAULT_SUBGROUP_CAP))]
    fn subgroups(&self, cap: usize) -> PyResult<Vec<Vec<usize>>> {
        let lattice = SubgroupLattice::new(&self.inner, cap).map_err(value_error)?;
        Ok(lattice.subgroups().iter().map(|h| h.members().collect()).collect())
    }

    fn __repr__(&self) -> String {
        format!("Group(order={}, degree={})", self.inner.order(), self.inner.degree())
    }
}

/// A finite G-set.
#[pyclass(frozen, module = "equimon")]
struct GSet {
    inner: equimon::GSet,
}

impl GSet {
    fn decomposition(&self, cap: usize) -> PyResult<BoxDecomposition> {
        self.inner.box_decomposition(cap).map_err(value_error)
    }
}

#[pymethods]
impl GSet {
    /// One image array over the points per group generator.
    #[staticmethod]
    #[pyo3(signature = (group, generator_images, n_points=None))]
    fn from_generator_action(group: &Group, generator_images: Vec<Vec<u32>>, n_points: Option<usize>) -> PyResult<Self> {
        let n = match (n_points, generator_images.first()) {
            (Some(n), _) => n,
            (None, Some(g)) => g.len(),
            (None, None) => return Err(PyValueError::new_err("n_points is required when the group has no generators")),
        };
        let perms = generator_images.into_iter().map(perm).collect::<PyResult<Vec<_>>>()?;
        let inner = equimon::GSet::from_generator_action(group.inner.clone(), &perms, n).map_err(value_error)?;
        Ok(GSet { inner })
    }

    /// Disjoint union of coset spaces `G/H`, each `H` given by words in the
    /// generators (lists of generator indices).
    #[staticmethod]
    fn from_coset_spaces(group: &Group, subgroups: Vec<Vec<Vec<usize>>>) -> PyResult<Self> {
        let g = &group.inner;
        let mut subs = Vec::with_capacity(subgroups.len());
        for words in subgroups {
            let seed = words
                .iter()
                .map(|w| g.word(w))
                .collect::<equimon::Result<Vec<_>>>()
                .map_err(value_error)?;
            subs.push(subgroup_generated(g, &seed).map_err(value_error)?);
        }
        Ok(GSet { inner: equimon::GSet::from_coset_spaces(g.clone(), &subs) })
    }

    #[staticmethod]
    fn regular(group: &Group) -> Self {
        GSet { inner: fixtures::regular(group.inner.clone()) }
    }

    #[staticmethod]
    fn trivial(group: &Group, n_points: usize) -> Self {
        GSet { inner: fixtures::trivial_action(group.inner.clone(), n_points) }
    }

    /// `Z_2` on six points: `0 <-> 1`, `2 <-> 3`, `4` and `5` fixed.
    #[staticmethod]
    fn worked_example() -> Self {
        GSet { inner: fixtures::worked_example() }
    }

    #[getter]
    fn group(&self) -> Group {
        Group { inner: self.inner.group_arc().clone() }
    }

    #[getter]
    fn n_points(&self) -> usize {
        self.inner.n_points()
    }

    fn act(&self, g: usize, x: usize) -> PyResult<usize> {
        self.inner.group().check_element(g).map_err(value_error)?;
        self.inner.check_point(x).map_err(value_error)?;
        Ok(self.inner.act(g, x))
    }

    fn orbits(&self) -> Vec<Vec<usize>> {
        self.inner.orbits().into_iter().map(|o| o.points).collect()
    }

    /// Element indices fixing `x`.
    fn stabilizer(&self, x: usize) -> PyResult<Vec<usize>> {
        self.inner.check_point(x).map_err(value_error)?;
        Ok(self.inner.stabilizer(x).members().collect())
    }

    /// `"iso"`, `"hom"` or `"none"`: whether some equivariant map sends
    /// `x` to `y`, and whether it can be bijective.
    fn map_exists(&self, x: usize, y: usize) -> PyResult<&'static str> {
        Ok(match self.inner.map_exists(x, y).map_err(value_error)? {
            MapKind::Iso => "iso",
            MapKind::Hom => "hom",
            MapKind::None => "none",
        })
    }

    /// One dict per stabilizer class occurring in the G-set.
    #[pyo3(signature = (cap=DEFAULT_SUBGROUP_CAP))]
    fn boxes<'py>(&self, py: Python<'py>, cap: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let b = self.decomposition(cap)?;
        let mut out = Vec::new();
        for &c in b.classes() {
            let d = PyDict::new(py);
            d.set_item("class_id", c)?;
            d.set_item("representative", b.representative(c).members().collect::<Vec<_>>())?;
            d.set_item("alpha", b.alpha(c))?;
            d.set_item("normalizer_index", b.normalizer_index(c))?;
            d.set_item("options", counting::target_options(&b, c))?;
            out.push(d);
        }
        Ok(out)
    }

    /// Pairs `(a, b)` of class ids where box `a` is covered by box `b`.
    #[pyo3(signature = (cap=DEFAULT_SUBGROUP_CAP))]
    fn box_poset(&self, cap: usize) -> PyResult<Vec<(usize, usize)>> {
        Ok(self.decomposition(cap)?.covering_relations())
    }

    /// The four counts and the type accounting, as Python ints.
    #[pyo3(signature = (cap=DEFAULT_SUBGROUP_CAP))]
    fn counts<'py>(&self, py: Python<'py>, cap: usize) -> PyResult<Bound<'py, PyDict>> {
        let r = CardinalityReport::new(&self.decomposition(cap)?);
        let d = PyDict::new(py);
        d.set_item("end", r.end_count)?;
        d.set_item("aut", r.aut_count)?;
        d.set_item("fixing_collapsings", r.fixing_collapsing_count)?;
        d.set_item("collapsing_types", r.collapsing_type_count)?;
        d.set_item("u_total", r.u_total)?;
        d.set_item("kappa", r.kappa)?;
        Ok(d)
    }

    fn count_endomorphisms(&self) -> PyResult<BigUint> {
        Ok(counting::count_endomorphisms(&self.decomposition(DEFAULT_SUBGROUP_CAP)?))
    }

    fn count_automorphisms(&self) -> PyResult<BigUint> {
        Ok(counting::count_automorphisms(&self.decomposition(DEFAULT_SUBGROUP_CAP)?))
    }

    fn count_fixing_collapsings(&self) -> PyResult<BigUint> {
        Ok(counting::count_fixing_collapsings(&self.decomposition(DEFAULT_SUBGROUP_CAP)?))
    }

    fn count_collapsing_types(&self) -> PyResult<usize> {
        Ok(counting::count_collapsing_types(&self.decomposition(DEFAULT_SUBGROUP_CAP)?))
    }

    fn is_equivariant(&self, images: Vec<u32>) -> bool {
        images.len() == self.inner.n_points() && oracle::is_equivariant(&self.inner, &images)
    }

    /// Every equivariant map as an image array; fails if there are more
    /// than `cap`.
    #[pyo3(signature = (cap=1_000_000))]
    fn endomorphisms(&self, py: Python<'_>, cap: u64) -> PyResult<Vec<Vec<u32>>> {
        let x = &self.inner;
        let maps = py.detach(|| oracle::enumerate_endomorphisms(x, cap)).map_err(value_error)?;
        Ok(images(maps))
    }

    fn automorphisms(&self, py: Python<'_>) -> Vec<Vec<u32>> {
        let x = &self.inner;
        images(py.detach(|| oracle::enumerate_automorphisms(x)))
    }

    fn fixing_collapsings(&self) -> Vec<Vec<u32>> {
        images(oracle::enumerate_fixing_collapsings(&self.inner))
    }

    /// `[x -> y]`: sends `g·x` to `g·y` and fixes everything else.
    fn collapsing_map(&self, x: usize, y: usize) -> PyResult<Vec<u32>> {
        let f = oracle::collapsing_map(&self.inner, x, y).map_err(value_error)?;
        Ok(f.images().to_vec())
    }

    /// Closure of `maps` and the identity under composition.
    #[pyo3(signature = (maps, cap=1_000_000))]
    fn monoid_closure(&self, py: Python<'_>, maps: Vec<Vec<u32>>, cap: usize) -> PyResult<Vec<Vec<u32>>> {
        let seed = maps
            .into_iter()
            .map(|m| EquivariantMap::new(&self.inner, m))
            .collect::<equimon::Result<Vec<_>>>()
            .map_err(value_error)?;
        let n = self.inner.n_points();
        let closure = py.detach(|| oracle::monoid_closure(n, &seed, cap)).map_err(value_error)?;
        Ok(images(closure))
    }

    fn __repr__(&self) -> String {
        format!(
            "GSet(group_order={}, n_points={}, orbits={})",
            self.inner.group().order(),
            self.inner.n_points(),
            self.inner.orbits().len()
        )
    }
}

/// Runs the `analyze` report on a JSON instance and returns it as JSON.
#[pyfunction]
fn analyze_json(text: &str) -> PyResult<String> {
    let inst = Instance::parse(text, Limits::default()).map_err(value_error)?;
    let (report, _, _) = Report::analyze(&inst).map_err(value_error)?;
    Ok(report.to_json())
}

/// Runs the `verify` report on a JSON instance and returns it as JSON.
#[pyfunction]
#[pyo3(signature = (text, cap=1_000_000, skip_closure=false))]
fn verify_json(py: Python<'_>, text: &str, cap: u64, skip_closure: bool) -> PyResult<String> {
    let inst = Instance::parse(text, Limits::default()).map_err(value_error)?;
    let report = py
        .detach(|| Report::verify(&inst, cap, skip_closure))
        .map_err(value_error)?;
    Ok(report.to_json())
}

#[pymodule]
#[pyo3(name = "equimon")]
fn equimon_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<GSet>()?;
    m.add_function(wrap_pyfunction!(analyze_json, m)?)?;
    m.add_function(wrap_pyfunction!(verify_json, m)?)?;
    Ok(())
}
